#include "ddlab/geometry.hpp"

#include <algorithm>
#include <numeric>

#include "ddlab/error.hpp"

namespace ddlab {

std::string Point::to_string() const { return "(" + x.to_string() + ", " + y.to_string() + ")"; }

Rational squared_distance(const Point& a, const Point& b) {
  const Rational dx = a.x - b.x;
  const Rational dy = a.y - b.y;
  return dx * dx + dy * dy;
}

Rational orientation(const Point& a, const Point& b, const Point& c) {
  return (b.x - a.x) * (c.y - a.y) - (b.y - a.y) * (c.x - a.x);
}

PointSet::PointSet(std::vector<Point> points, std::string label)
    : points_(std::move(points)), label_(std::move(label)) {
  sorted_.resize(points_.size());
  std::iota(sorted_.begin(), sorted_.end(), std::size_t{0});
  std::sort(sorted_.begin(), sorted_.end(),
            [this](std::size_t a, std::size_t b) { return points_[a] < points_[b]; });
  for (std::size_t i = 1; i < sorted_.size(); ++i) {
    if (points_[sorted_[i - 1]] == points_[sorted_[i]]) {
      throw Error(ErrorCode::duplicate_point,
                  "duplicate point " + points_[sorted_[i]].to_string() +
                      (label_.empty() ? "" : " in " + label_));
    }
  }
}

bool PointSet::contains(const Point& p) const {
  auto it = std::lower_bound(sorted_.begin(), sorted_.end(), p,
                             [this](std::size_t i, const Point& q) { return points_[i] < q; });
  return it != sorted_.end() && points_[*it] == p;
}

PointSet point_set_from_text(std::string_view text, std::string label) {
  std::vector<Point> points;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t eol = text.find('\n', pos);
    if (eol == std::string_view::npos) eol = text.size();
    std::string_view line = text.substr(pos, eol - pos);
    ++line_no;
    pos = eol + 1;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);

    // Tokenize on spaces/tabs, remembering 1-based columns.
    std::vector<std::pair<std::string_view, std::size_t>> tokens;
    for (std::size_t i = 0; i < line.size();) {
      if (line[i] == ' ' || line[i] == '\t') {
        ++i;
        continue;
      }
      std::size_t j = i;
      while (j < line.size() && line[j] != ' ' && line[j] != '\t') ++j;
      tokens.emplace_back(line.substr(i, j - i), i + 1);
      i = j;
    }
    if (tokens.empty() || tokens.front().first.front() == '#') continue;
    if (tokens.size() != 2) {
      const std::size_t col = tokens.size() > 2 ? tokens[2].second : line.size() + 1;
      throw ParseError("expected exactly two coordinates", line_no, col);
    }
    Rational coords[2];
    for (int k = 0; k < 2; ++k) {
      try {
        coords[k] = Rational::parse(tokens[k].first);
      } catch (const ParseError& e) {
        throw ParseError(e.what(), line_no, tokens[k].second);
      }
    }
    points.push_back({coords[0], coords[1]});
  }
  return PointSet(std::move(points), std::move(label));
}

std::string point_set_to_text(const PointSet& set, std::span<const std::string> header) {
  std::string out;
  for (const auto& h : header) out += "# " + h + "\n";
  for (const auto& p : set) out += p.x.to_string() + " " + p.y.to_string() + "\n";
  return out;
}

}  // namespace ddlab
