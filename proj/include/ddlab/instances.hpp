#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "ddlab/curve.hpp"
#include "ddlab/geometry.hpp"

namespace ddlab {

/// SplitMix64 (Steele, Lea, Flood). Stages draw from independent streams
/// derived from (seed, stage name), so adding a stage never shifts another.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ull);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
  }

  /// Uniform in [0, bound) by rejection; bound > 0.
  std::uint64_t below(std::uint64_t bound);
  /// Uniform in [lo, hi].
  std::int64_t between(std::int64_t lo, std::int64_t hi);

 private:
  std::uint64_t state_;
};

SplitMix64 stream(std::uint64_t seed, std::string_view stage);

/// {0..k-1}^2. Throws Error(invalid_argument) for k < 1.
PointSet gen_grid(int k);

struct OnCurveOptions {
  // Curve parameters are drawn from the integers in [-range, range];
  // 0 picks max(2m, 8).
  std::int64_t param_range = 0;
};

/// m distinct points on c, spread over its components per the seed. Each
/// component must be a line, a circle with rational radius, or a graph
/// y = h(x) / x = h(y) of a polynomial; otherwise Error(unsupported_curve).
PointSet gen_on_curve(const CurveSpec& c, std::size_t m, std::uint64_t seed, const OnCurveOptions& options = {});

/// Lattice {(i/den, j/den)} clipped to the box.
struct Box {
  Rational x_min;
  Rational y_min;
  Rational x_max;
  Rational y_max;
  std::int64_t den = 1;
};

/// n distinct lattice points from the box, uniform, by rejection sampling.
/// Throws Error(box_too_small) when the lattice has fewer than n points.
PointSet gen_cloud(std::size_t n, const Box& box, std::uint64_t seed);

struct AdversarialParams {
  std::size_t m = 16;
  std::size_t n = 16;
  std::uint64_t seed = 1;
};

struct Instance {
  std::string family;
  PointSet p1;
  PointSet p2;
  CurveSpec curve;
  std::uint64_t seed = 0;
};

/// Families: center-trap, linear-heavy, concyclic, parallel-lines,
/// orthogonal-lines, concentric-circles. Throws Error(unknown_family).
Instance gen_adversarial(std::string_view family, const AdversarialParams& params);
std::vector<std::string> adversarial_families();

/// P1 = m points on a preset curve, P2 = n cloud points avoiding the
/// curve's circular centers.
Instance gen_bipartite(std::string_view curve_name, std::size_t m, std::size_t n, std::uint64_t seed);

/// Sidecar header lines recording family, seed and curve.
std::vector<std::string> instance_header(const std::string& family, std::uint64_t seed, const CurveSpec* curve);

}  // namespace ddlab
