#pragma once

// Central compression along a coordinate axis.
//
// The axis-i compression replaces every line {(p, x -> i) : x in Z} of S by the
// centered segment of the same size: {-a..a} for 2a+1 points, {-a..a+1} for
// 2a+2 points. It preserves |S|, never increases the edge boundary, and leaves
// no gaps in direction +-e_i. Iterating over all axes reaches a set that every
// compression fixes; the potential below certifies termination.

#include <cstddef>
#include <cstdint>
#include <utility>
#include <vector>

#include "kingiso/lattice.hpp"

namespace kingiso {

/// Closed integer interval [lo, hi]; empty when hi < lo.
struct Interval {
  Coord lo = 0;
  Coord hi = -1;

  bool empty() const noexcept { return hi < lo; }
  std::size_t size() const noexcept {
    return empty() ? 0 : static_cast<std::size_t>(hi - lo + 1);
  }
  bool contains(Coord x) const noexcept { return lo <= x && x <= hi; }

  friend bool operator==(const Interval&, const Interval&) = default;
};

/// The centered segment holding m points. m == 0 gives the empty interval.
Interval canonical_segment(std::size_t m);

/// Axis-`axis` (1-based) central compression of S.
PointSet central_compress(const PointSet& s, int axis);

/// True if every axis-`axis` line of S is already its canonical segment.
bool is_centrally_compressed(const PointSet& s, int axis);

/// Lexicographically compared (sum of squared coordinates, -sum of coordinates).
struct Potential {
  std::int64_t sum_sq = 0;
  std::int64_t neg_sum = 0;

  friend auto operator<=>(const Potential&, const Potential&) = default;
};

Potential potential(const PointSet& s);

struct CompressionStep {
  int axis = 1;
  bool changed = false;
  std::size_t boundary_before = 0;
  std::size_t boundary_after = 0;
  Potential potential_before;
  Potential potential_after;
};

struct CompressionTrace {
  std::vector<CompressionStep> steps;
  PointSet final_set{1};

  std::size_t changing_steps() const;
};

/// Round-robin compression over axes 1..n until a full pass changes nothing.
/// Throws InvariantViolation if a changing step fails to lower the potential
/// or raises the edge boundary.
CompressionTrace compress_to_fixed_point(const PointSet& s);

}  // namespace kingiso
