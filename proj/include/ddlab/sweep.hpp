#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "ddlab/instances.hpp"
#include "ddlab/rational.hpp"

namespace ddlab {

struct SweepConfig {
  std::string family = "parabola";  // curve preset carrying P1; P2 is a cloud
  std::vector<std::uint64_t> m_values;
  std::vector<std::uint64_t> n_values;
  std::vector<unsigned> d_values{2, 3};
  std::uint64_t seed = 1;
  std::uint64_t pair_budget = 100'000'000;  // cells with m·n above this are skipped
  unsigned threads = 0;
};

/// "16,32,64", "16:256:x2" (geometric) or "10:50:+10" (arithmetic).
/// Throws Error(invalid_argument) for malformed or empty progressions.
std::vector<std::uint64_t> parse_progression(std::string_view text);

struct SweepRow {
  std::uint64_t m = 0;
  std::uint64_t n = 0;
  std::string skipped;  // empty when the cell ran
  char regime = 'A';
  std::uint64_t distinct = 0;
  std::vector<Integer> energies;  // aligned with d_values
  long double bound = 0;
  long double ratio = 0;
  double runtime_ms = 0;
};

/// Seed of cell (m, n), derived from the sweep seed only.
std::uint64_t cell_seed(std::uint64_t seed, std::uint64_t m, std::uint64_t n);

/// The instance a sweep evaluates at (m, n).
Instance sweep_instance(const SweepConfig& config, std::uint64_t m, std::uint64_t n);

/// Cells in row-major (m, n) config order, whatever the worker schedule.
/// Throws Error(invalid_argument) for empty ranges.
std::vector<SweepRow> run_sweep(const SweepConfig& config);

/// m,n,regime,D,E_<d>...,bound_value,ratio,runtime_ms
std::string sweep_to_csv(const SweepConfig& config, const std::vector<SweepRow>& rows);

}  // namespace ddlab
