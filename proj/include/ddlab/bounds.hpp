#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "ddlab/curve.hpp"
#include "ddlab/geometry.hpp"
#include "ddlab/spectrum.hpp"

namespace ddlab {

enum class CheckStatus { pass, fail, skip };
const char* to_string(CheckStatus status);  // "PASS" / "FAIL" / "SKIP"

struct CheckResult {
  std::string name;
  CheckStatus status = CheckStatus::skip;
  std::string lhs;       // exact integer or rational where the check is exact
  std::string rhs;
  std::string citation;  // statement tag, e.g. "bezout-circle-cap"
  std::string note;
};

/// Σ over all 2d-tuples (a_1..a_d, b_1..b_d) ∈ P1^d × P2^d whose d cross
/// distances are equal and positive, by direct enumeration. Throws
/// Error(budget_exceeded) when (mn)^d > budget.
Integer enumerate_energy(const PointSet& p1, const PointSet& p2, unsigned d, std::uint64_t budget);

/// Spectrum-side E_d against enumerate_energy; SKIP when over budget.
CheckResult check_energy_identity(const PointSet& p1, const PointSet& p2, unsigned d, const DistanceSpectrum& s,
                                  std::uint64_t budget = 10'000'000);

/// E_d · D^{d−1} >= total_pairs^d, exact.
CheckResult check_holder(const DistanceSpectrum& s, unsigned d);

/// Every circle centered at a P2 point meets P1 in at most 2r points.
/// Throws Error(precondition) naming the point when P1 leaves the curve or
/// P2 meets a circular center.
CheckResult check_bezout_cap(const PointSet& p1, const PointSet& p2, const CurveSpec& c);

/// |distinct positive distances from p to Q| >= ceil(|Q \ {p}| / 2r).
/// Throws Error(precondition) when Q leaves the curve or p is a circular
/// center.
CheckResult check_pencil_bound(const Point& p, const PointSet& q, const CurveSpec& c);

struct TheoremBound {
  char regime = 'A';  // 'A': m >= n^{1/2} (log n)^{-1/3}, else 'B'
  long double value = 0;
};

/// Constant-free two-regime lower bound with log base 2. Throws
/// Error(invalid_argument) for n < 2.
TheoremBound theorem_bound(std::uint64_t m, std::uint64_t n);

/// 2^d Σ_j 2^{dj} k_{2^j} over the profile.
Integer dyadic_upper_sum(const DyadicProfile& profile, unsigned d);
/// Σ_j 2^{dj} (k_{2^j} − k_{2^{j+1}}).
Integer dyadic_lower_sum(const DyadicProfile& profile, unsigned d);

enum class PreconditionPolicy { skip, fail };

struct VerifyConfig {
  std::vector<unsigned> energy_d{1, 2, 3};
  std::vector<unsigned> holder_d{2, 3};
  std::uint64_t tuple_budget = 10'000'000;
  PreconditionPolicy policy = PreconditionPolicy::skip;
  unsigned threads = 0;
  // Replaces the computed spectrum of (P1, P2) when set.
  std::optional<DistanceSpectrum> spectrum;
  std::string instance_id;
};

struct BoundRatio {
  std::string name;
  long double value = 0;
};

/// One row per dyadic level of G(P2'', Γ_q).
struct IncidenceRow {
  std::uint64_t q = 1;
  std::uint64_t family_size = 0;
  std::uint64_t incidences = 0;
  Integer q_times_k;
  long double bound = 0;
  long double ratio = 0;
};

struct VerificationReport {
  std::string instance_id;
  std::vector<CheckResult> checks;
  std::vector<BoundRatio> ratios;
  std::vector<IncidenceRow> incidence;
  std::vector<std::string> notes;

  bool has_failures() const;
  const CheckResult* find(const std::string& name) const;
};

/// Runs every check in a fixed order. Precondition violations become SKIP or
/// FAIL per config.policy; no check is dropped.
VerificationReport verify_all(const PointSet& p1, const PointSet& p2, const CurveSpec& c,
                              const VerifyConfig& config = {});

std::string report_to_text(const VerificationReport& report);
/// "CHECK <name> <status> <lhs> <rhs> <citation>" lines plus RATIO and NOTE
/// lines, after a "# log-base 2" header.
std::string report_to_lines(const VerificationReport& report);
/// q,family_size,incidences,q_k_q,bound_value,ratio
std::string incidence_to_csv(const VerificationReport& report);

}  // namespace ddlab
