#include "kingiso/lattice.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <string>

namespace kingiso {

namespace {

void require_same_dimension(int a, int b, const char* what) {
  if (a != b) {
    throw LatticeError(std::string(what) + ": dimension mismatch (" +
                       std::to_string(a) + " vs " + std::to_string(b) + ")");
  }
}

}  // namespace

Direction::Direction(std::vector<int> steps) : steps_(std::move(steps)) {
  if (steps_.empty()) throw LatticeError("direction must have dimension >= 1");
  bool nonzero = false;
  for (int s : steps_) {
    if (s < -1 || s > 1) throw LatticeError("direction steps must be in {-1,0,1}");
    nonzero = nonzero || s != 0;
  }
  if (!nonzero) throw LatticeError("direction must not be the zero vector");
}

Direction Direction::axis(int dimension, int axis, int sign) {
  if (dimension < 1) throw LatticeError("dimension must be >= 1");
  if (axis < 1 || axis > dimension) throw LatticeError("axis index out of range");
  if (sign != 1 && sign != -1) throw LatticeError("axis sign must be +1 or -1");
  std::vector<int> steps(static_cast<std::size_t>(dimension), 0);
  steps[static_cast<std::size_t>(axis - 1)] = sign;
  return Direction(std::move(steps));
}

std::size_t Direction::leading_index() const noexcept {
  for (std::size_t k = 0; k < steps_.size(); ++k) {
    if (steps_[k] != 0) return k;
  }
  return steps_.size();  // unreachable for a valid direction
}

Direction Direction::negated() const {
  std::vector<int> steps(steps_.size());
  std::transform(steps_.begin(), steps_.end(), steps.begin(),
                 [](int s) { return -s; });
  return Direction(std::move(steps));
}

LatticePoint step(const LatticePoint& p, const Direction& d, Coord t) {
  require_same_dimension(p.dimension(), d.dimension(), "step");
  LatticePoint q = p;
  for (std::size_t k = 0; k < q.coords.size(); ++k) q.coords[k] += t * d[k];
  return q;
}

LatticePoint operator+(const LatticePoint& p, const Direction& d) {
  return step(p, d, 1);
}

LatticePoint operator-(const LatticePoint& p, const Direction& d) {
  return step(p, d, -1);
}

LatticePoint translate(const LatticePoint& p, const LatticePoint& offset) {
  require_same_dimension(p.dimension(), offset.dimension(), "translate");
  LatticePoint q = p;
  for (std::size_t k = 0; k < q.coords.size(); ++k) q.coords[k] += offset[k];
  return q;
}

// ---------------------------------------------------------------------------

PointSet::PointSet(int dimension) : dimension_(dimension) {
  if (dimension < 1) throw LatticeError("point set dimension must be >= 1");
}

PointSet::PointSet(int dimension, std::vector<LatticePoint> points)
    : dimension_(dimension), points_(std::move(points)) {
  if (dimension < 1) throw LatticeError("point set dimension must be >= 1");
  for (const auto& p : points_) {
    require_same_dimension(dimension, p.dimension(), "point set");
  }
  std::sort(points_.begin(), points_.end());
  if (std::adjacent_find(points_.begin(), points_.end()) != points_.end()) {
    throw LatticeError("point set contains a duplicate point");
  }
}

bool PointSet::contains(const LatticePoint& p) const {
  return std::binary_search(points_.begin(), points_.end(), p);
}

PointSet PointSet::translated(const LatticePoint& offset) const {
  require_same_dimension(dimension_, offset.dimension(), "translated");
  PointSet out(dimension_);
  out.points_.reserve(points_.size());
  // Translation preserves lexicographic order.
  for (const auto& p : points_) out.points_.push_back(translate(p, offset));
  return out;
}

LatticePoint PointSet::min_corner() const {
  if (points_.empty()) throw LatticeError("min_corner of an empty set");
  LatticePoint c = points_.front();
  for (const auto& p : points_) {
    for (std::size_t k = 0; k < c.coords.size(); ++k) {
      c.coords[k] = std::min(c.coords[k], p.coords[k]);
    }
  }
  return c;
}

LatticePoint PointSet::max_corner() const {
  if (points_.empty()) throw LatticeError("max_corner of an empty set");
  LatticePoint c = points_.front();
  for (const auto& p : points_) {
    for (std::size_t k = 0; k < c.coords.size(); ++k) {
      c.coords[k] = std::max(c.coords[k], p.coords[k]);
    }
  }
  return c;
}

PointSet PointSet::normalized() const {
  if (points_.empty()) return *this;
  LatticePoint offset = min_corner();
  for (auto& c : offset.coords) c = -c;
  return translated(offset);
}

std::size_t LineSection::run_count() const noexcept {
  if (positions.empty()) return 0;
  std::size_t runs = 1;
  for (std::size_t j = 1; j < positions.size(); ++j) {
    if (positions[j] - positions[j - 1] >= 2) ++runs;
  }
  return runs;
}

// ---------------------------------------------------------------------------

std::vector<Direction> directions(int n) {
  if (n < 1) throw LatticeError("invalid dimension: directions requires n >= 1");
  if (n > 20) throw LatticeError("invalid dimension: 3^n - 1 directions too many");
  std::vector<Direction> out;
  std::vector<int> steps(static_cast<std::size_t>(n), -1);
  // Odometer over {-1,0,1}^n, last coordinate fastest: lexicographic order.
  while (true) {
    if (std::any_of(steps.begin(), steps.end(), [](int s) { return s != 0; })) {
      out.emplace_back(steps);
    }
    int k = n - 1;
    while (k >= 0 && steps[static_cast<std::size_t>(k)] == 1) {
      steps[static_cast<std::size_t>(k)] = -1;
      --k;
    }
    if (k < 0) break;
    ++steps[static_cast<std::size_t>(k)];
  }
  return out;
}

std::vector<LatticePoint> neighbors(const LatticePoint& p) {
  std::vector<LatticePoint> out;
  for (const auto& d : directions(p.dimension())) out.push_back(p + d);
  return out;
}

Coord chebyshev_distance(const LatticePoint& u, const LatticePoint& v) {
  require_same_dimension(u.dimension(), v.dimension(), "chebyshev_distance");
  Coord best = 0;
  for (std::size_t k = 0; k < u.coords.size(); ++k) {
    best = std::max(best, std::abs(u[k] - v[k]));
  }
  return best;
}

LatticePoint insert_coordinate(std::span<const Coord> p, Coord x, int axis) {
  const int n = static_cast<int>(p.size()) + 1;
  if (axis < 1 || axis > n) {
    throw LatticeError("insert_coordinate: index " + std::to_string(axis) +
                       " out of range 1.." + std::to_string(n));
  }
  std::vector<Coord> out;
  out.reserve(static_cast<std::size_t>(n));
  const auto split = p.begin() + (axis - 1);
  out.insert(out.end(), p.begin(), split);
  out.push_back(x);
  out.insert(out.end(), split, p.end());
  return LatticePoint(std::move(out));
}

std::vector<Coord> delete_coordinate(const LatticePoint& u, int axis) {
  if (axis < 1 || axis > u.dimension()) {
    throw LatticeError("delete_coordinate: index out of range");
  }
  std::vector<Coord> out = u.coords;
  out.erase(out.begin() + (axis - 1));
  return out;
}

Coord line_position(const LatticePoint& p, const Direction& d) {
  require_same_dimension(p.dimension(), d.dimension(), "line_position");
  const std::size_t j = d.leading_index();
  return p[j] * d[j];  // d[j] is +-1
}

LatticePoint line_base(const LatticePoint& p, const Direction& d) {
  return step(p, d, -line_position(p, d));
}

std::vector<LineSection> line_sections(const PointSet& s, const Direction& d) {
  require_same_dimension(s.dimension(), d.dimension(), "line_sections");
  std::map<LatticePoint, std::vector<Coord>> lines;
  for (const auto& p : s) {
    const Coord t = line_position(p, d);
    lines[step(p, d, -t)].push_back(t);
  }
  std::vector<LineSection> out;
  out.reserve(lines.size());
  for (auto& [base, positions] : lines) {
    std::sort(positions.begin(), positions.end());
    out.push_back(LineSection{base, d, std::move(positions)});
  }
  return out;
}

}  // namespace kingiso
