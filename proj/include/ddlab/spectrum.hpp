#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "ddlab/geometry.hpp"
#include "ddlab/rational.hpp"

namespace ddlab {

using u128 = unsigned __int128;

/// Multiplicities p_δ of every positive squared distance δ realized by the
/// ordered cross pairs P1 × P2. Coincident pairs are kept out of the
/// entries and counted in zero_pairs.
///
/// Entries are stored as integer keys δ·scale, sorted ascending, so lookup
/// and equality are exact integer comparisons.
class DistanceSpectrum {
 public:
  DistanceSpectrum() = default;

  /// Builds a spectrum from explicit (δ, p_δ) entries in any order. Throws
  /// Error(invalid_argument) for δ <= 0, p_δ == 0, or repeated δ.
  static DistanceSpectrum from_entries(std::vector<std::pair<Rational, std::uint64_t>> entries,
                                       std::uint64_t zero_pairs = 0);

  /// |Δ|
  std::size_t size() const { return counts_.size(); }
  bool empty() const { return counts_.empty(); }

  Rational squared_distance(std::size_t i) const;
  std::uint64_t multiplicity(std::size_t i) const { return counts_[i]; }
  const std::vector<std::uint64_t>& multiplicities() const { return counts_; }

  std::uint64_t total_pairs() const { return total_; }
  std::uint64_t zero_pairs() const { return zero_; }
  std::uint64_t max_multiplicity() const { return sorted_counts_.empty() ? 0 : sorted_counts_.back(); }

  std::optional<std::size_t> find(const Rational& delta) const;

  /// Σ p_δ^d.
  Integer energy(unsigned d) const;
  /// k_q = |{δ : p_δ >= q}|.
  std::uint64_t rich_count(std::uint64_t q) const;

  std::vector<std::pair<Rational, std::uint64_t>> entries() const;

  /// Representation tier of the keys: 0 = 64-bit, 1 = 128-bit, 2 = big.
  int key_tier() const { return static_cast<int>(keys_.index()); }

  friend bool operator==(const DistanceSpectrum& a, const DistanceSpectrum& b);

 private:
  friend class SpectrumBuilder;
  friend std::vector<std::int64_t> pair_spectrum_index(const PointSet&, const PointSet&,
                                                       const DistanceSpectrum&);
  void finalize();

  Integer scale_ = 1;  // δ = key / scale
  std::variant<std::vector<std::uint64_t>, std::vector<u128>, std::vector<Integer>> keys_;
  std::vector<std::uint64_t> counts_;
  std::vector<std::uint64_t> sorted_counts_;
  std::uint64_t total_ = 0;
  std::uint64_t zero_ = 0;
};

struct SpectrumOptions {
  unsigned threads = 0;  // 0: automatic, capped by DDLAB_THREADS
};

/// Throws Error(empty_set) if either set is empty.
DistanceSpectrum spectrum(const PointSet& p1, const PointSet& p2, const SpectrumOptions& options = {});

std::size_t distinct_distances(const PointSet& p1, const PointSet& p2);

/// Σ_{δ∈Δ} p_δ^d. Throws Error(invalid_argument) for d == 0.
Integer distance_energy(const PointSet& p1, const PointSet& p2, unsigned d);

struct DyadicLevel {
  int j = 0;
  std::uint64_t q = 1;  // 2^j
  std::uint64_t k = 0;  // k_q
};

struct DyadicProfile {
  std::vector<DyadicLevel> levels;
  int cap_exponent = 0;    // ceil(log2(2rn))
  bool within_cap = true;  // max level <= cap_exponent

  std::uint64_t k_at_level(std::size_t j) const { return j < levels.size() ? levels[j].k : 0; }
};

/// k_{2^j} for j = 0 .. ceil(log2(max p_δ)); a single zero level for an
/// empty spectrum.
DyadicProfile dyadic_profile(const DistanceSpectrum& s, int r, std::uint64_t n);

struct RichCircle {
  Point center;
  std::size_t center_index = 0;
  std::size_t hit_count = 0;
};

/// The center a ∈ P1 with the most points of P2 at squared distance δ, ties
/// broken by the lexicographically smallest center. Throws
/// Error(invalid_argument) for δ <= 0 and Error(unrealized_distance) when no
/// pair realizes δ.
RichCircle richest_circle(const PointSet& p1, const PointSet& p2, const Rational& delta);

/// Per-pair spectrum index (row-major over P1 × P2), -1 for coincident pairs
/// or distances missing from `s`.
std::vector<std::int64_t> pair_spectrum_index(const PointSet& p1, const PointSet& p2,
                                              const DistanceSpectrum& s);

/// "delta_num,delta_den,multiplicity" header plus one row per entry in
/// ascending δ order.
std::string spectrum_to_csv(const DistanceSpectrum& s);
/// Throws ParseError for malformed rows.
DistanceSpectrum spectrum_from_csv(std::string_view text);

}  // namespace ddlab
