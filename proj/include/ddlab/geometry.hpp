#pragma once

#include <compare>
#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "ddlab/rational.hpp"

namespace ddlab {

struct Point {
  Rational x;
  Rational y;

  friend bool operator==(const Point&, const Point&) = default;
  friend std::strong_ordering operator<=>(const Point&, const Point&) = default;

  Point operator+(const Point& t) const { return {x + t.x, y + t.y}; }

  /// "(x, y)" using canonical rationals.
  std::string to_string() const;
};

/// (a.x - b.x)^2 + (a.y - b.y)^2. Distances are only ever compared through
/// their squares, which keeps every comparison exact.
Rational squared_distance(const Point& a, const Point& b);

/// Twice the signed area of triangle abc; zero iff the points are collinear.
Rational orientation(const Point& a, const Point& b, const Point& c);

/// A finite planar point set with set semantics: construction rejects
/// duplicates with Error(duplicate_point).
class PointSet {
 public:
  PointSet() = default;
  explicit PointSet(std::vector<Point> points, std::string label = {});

  std::size_t size() const { return points_.size(); }
  bool empty() const { return points_.empty(); }
  const Point& operator[](std::size_t i) const { return points_[i]; }
  std::span<const Point> points() const { return points_; }
  const std::string& label() const { return label_; }

  auto begin() const { return points_.begin(); }
  auto end() const { return points_.end(); }

  bool contains(const Point& p) const;

 private:
  std::vector<Point> points_;
  std::vector<std::size_t> sorted_;  // indices ordered by point, for lookup
  std::string label_;
};

/// Parses the instance text format: one "NUM/DEN NUM/DEN" point per line,
/// blank lines and '#' comment lines ignored. Throws ParseError carrying the
/// offending line/column, or Error(duplicate_point).
PointSet point_set_from_text(std::string_view text, std::string label = {});

/// Inverse of point_set_from_text. Each header line is emitted as a
/// "# ..." comment before the points.
std::string point_set_to_text(const PointSet& set, std::span<const std::string> header = {});

}  // namespace ddlab
