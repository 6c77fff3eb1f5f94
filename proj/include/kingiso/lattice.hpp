#pragma once

// Integer lattice primitives for the king graph G_n = (Z^n, E_inf): points,
// step directions, neighborhoods and decomposition of a point set into lines.
//
// Coordinate indices exposed by this library are 1-based (axis 1..n), which
// is how the central-compression operator and its line sections are usually
// written down. Everything else (vectors, spans) is ordinary 0-based C++.

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <span>
#include <vector>

#include "kingiso/errors.hpp"

namespace kingiso {

using Coord = std::int64_t;

/// A vertex of G_n.
struct LatticePoint {
  std::vector<Coord> coords;

  LatticePoint() = default;
  explicit LatticePoint(std::vector<Coord> c) : coords(std::move(c)) {}
  LatticePoint(std::initializer_list<Coord> c) : coords(c) {}

  int dimension() const noexcept { return static_cast<int>(coords.size()); }
  Coord operator[](std::size_t k) const { return coords[k]; }
  Coord& operator[](std::size_t k) { return coords[k]; }

  friend auto operator<=>(const LatticePoint&, const LatticePoint&) = default;
  friend bool operator==(const LatticePoint&, const LatticePoint&) = default;
};

struct LatticePointHash {
  std::size_t operator()(const LatticePoint& p) const noexcept {
    std::size_t h = 0x9e3779b97f4a7c15ULL;
    for (Coord c : p.coords) {
      h ^= std::hash<Coord>{}(c) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    }
    return h;
  }
};

/// A nonzero step vector in {-1,0,1}^n.
class Direction {
 public:
  /// Throws LatticeError if any entry is outside {-1,0,1} or all are zero.
  explicit Direction(std::vector<int> steps);
  Direction(std::initializer_list<int> steps)
      : Direction(std::vector<int>(steps)) {}

  /// The unit vector +e_axis or -e_axis (axis is 1-based).
  static Direction axis(int dimension, int axis, int sign = +1);

  int dimension() const noexcept { return static_cast<int>(steps_.size()); }
  const std::vector<int>& steps() const noexcept { return steps_; }
  int operator[](std::size_t k) const { return steps_[k]; }

  /// 0-based index of the first nonzero step.
  std::size_t leading_index() const noexcept;
  Direction negated() const;

  friend auto operator<=>(const Direction&, const Direction&) = default;
  friend bool operator==(const Direction&, const Direction&) = default;

 private:
  std::vector<int> steps_;
};

LatticePoint operator+(const LatticePoint& p, const Direction& d);
LatticePoint operator-(const LatticePoint& p, const Direction& d);

/// p + t*d
LatticePoint step(const LatticePoint& p, const Direction& d, Coord t);

/// Translate p by an integer offset of the same dimension.
LatticePoint translate(const LatticePoint& p, const LatticePoint& offset);

/// A finite set of lattice points of a fixed dimension. Points are kept in
/// lexicographic order, so iteration and equality are canonical.
class PointSet {
 public:
  /// The empty set in Z^dimension.
  explicit PointSet(int dimension);

  /// Throws LatticeError on a non-positive dimension, an arity mismatch or a
  /// duplicate point.
  PointSet(int dimension, std::vector<LatticePoint> points);

  PointSet(int dimension, std::initializer_list<LatticePoint> points)
      : PointSet(dimension, std::vector<LatticePoint>(points)) {}

  int dimension() const noexcept { return dimension_; }
  std::size_t size() const noexcept { return points_.size(); }
  bool empty() const noexcept { return points_.empty(); }

  bool contains(const LatticePoint& p) const;

  const std::vector<LatticePoint>& points() const noexcept { return points_; }
  auto begin() const noexcept { return points_.begin(); }
  auto end() const noexcept { return points_.end(); }

  PointSet translated(const LatticePoint& offset) const;

  /// Per-axis minimum over the set; throws on the empty set.
  LatticePoint min_corner() const;
  LatticePoint max_corner() const;

  /// Translate so that min_corner() becomes the origin. Empty stays empty.
  PointSet normalized() const;

  friend bool operator==(const PointSet&, const PointSet&) = default;

 private:
  int dimension_;
  std::vector<LatticePoint> points_;
};

/// The points of one line {base + t*direction : t in Z} that lie in a set.
struct LineSection {
  LatticePoint base;
  Direction direction;
  std::vector<Coord> positions;  // strictly increasing

  LatticePoint point_at(Coord t) const { return step(base, direction, t); }

  /// Number of maximal runs of consecutive positions.
  std::size_t run_count() const noexcept;

  friend bool operator==(const LineSection&, const LineSection&) = default;
};

/// All 3^n - 1 directions, lexicographic on steps. Throws for n < 1.
std::vector<Direction> directions(int n);

/// The 3^n - 1 king-move neighbors of p, in directions(n) order.
std::vector<LatticePoint> neighbors(const LatticePoint& p);

Coord chebyshev_distance(const LatticePoint& u, const LatticePoint& v);

/// (p, x -> axis): the point of dimension p.size()+1 with x placed at the
/// 1-based position `axis` and p's entries from there on shifted right.
LatticePoint insert_coordinate(std::span<const Coord> p, Coord x, int axis);

/// Inverse of insert_coordinate: drop the 1-based coordinate `axis`.
std::vector<Coord> delete_coordinate(const LatticePoint& u, int axis);

/// Canonical representative of the line through p in direction d: the point
/// on that line whose coordinate at d.leading_index() is zero.
LatticePoint line_base(const LatticePoint& p, const Direction& d);

/// Position t of p on its line, so that p == line_base(p, d) + t*d.
Coord line_position(const LatticePoint& p, const Direction& d);

/// Partition S into lines parallel to d. Sections come back sorted by base.
std::vector<LineSection> line_sections(const PointSet& s, const Direction& d);

}  // namespace kingiso
