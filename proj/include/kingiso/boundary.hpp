#pragma once

// Edge and vertex boundaries of finite sets in the king graph.
//
// The edge boundary is computed two independent ways:
//   - edge_boundary_direct walks every king move out of every point;
//   - edge_boundary_formula sums, over all 3^n - 1 directions d, the number of
//     lines parallel to d that meet S plus the number of gap points of S in
//     direction d.
// The two always agree; the CLI treats a disagreement as a fatal error.

#include <cstddef>
#include <map>
#include <span>
#include <utility>
#include <vector>

#include "kingiso/lattice.hpp"

namespace kingiso {

/// One boundary edge, stored with the endpoint in S first.
struct EdgeRecord {
  LatticePoint inside;
  LatticePoint outside;

  friend auto operator<=>(const EdgeRecord&, const EdgeRecord&) = default;
  friend bool operator==(const EdgeRecord&, const EdgeRecord&) = default;
};

struct DirectBoundary {
  std::size_t count = 0;
  std::vector<EdgeRecord> edges;
};

struct DirectionTerm {
  std::size_t projection_count = 0;
  std::size_t gap_count = 0;

  friend bool operator==(const DirectionTerm&, const DirectionTerm&) = default;
};

/// Per-direction terms of the projection + gap formula.
struct BoundaryBreakdown {
  int dimension = 1;
  std::map<Direction, DirectionTerm> per_direction;
  std::size_t total = 0;

  std::size_t projection_total() const;
  std::size_t gap_total() const;

  friend bool operator==(const BoundaryBreakdown&, const BoundaryBreakdown&) = default;
};

DirectBoundary edge_boundary_direct(const PointSet& s);

/// Count-only variant of edge_boundary_direct; no edge list is built.
std::size_t edge_boundary_count(const PointSet& s);

/// Neighbors of S that are not in S.
std::size_t exterior_vertex_boundary(const PointSet& s);

/// {v : d(v, S) <= 1}, i.e. S together with its exterior neighbors.
std::size_t closed_vertex_boundary(const PointSet& s);

/// Number of lines parallel to d meeting S (the size of S's shadow on d-perp).
std::size_t projection_count(const PointSet& s, const Direction& d);

/// Points x with x-d in S, x not in S, and x+b*d in S for some b >= 1.
/// Sorted lexicographically.
std::vector<LatticePoint> gap_set(const PointSet& s, const Direction& d);

BoundaryBreakdown edge_boundary_formula(const PointSet& s);

/// Boundary edges whose S-endpoint lies on the axis-line indexed by p and whose
/// outside endpoint lies on the axis-line indexed by p + eps. `axis` is 1-based;
/// p and eps have n-1 entries, eps in {-1,0,1}^{n-1} (zero allowed).
std::size_t partial_edge_boundary(const PointSet& s, int axis,
                                  std::span<const Coord> p,
                                  std::span<const int> eps);

/// The distinct axis-line indices p (n-1 coordinates) that meet S, sorted.
std::vector<std::vector<Coord>> axis_line_indices(const PointSet& s, int axis);

/// {-1,0,1}^m including the zero vector, lexicographic.
std::vector<std::vector<int>> offset_cube(int m);

}  // namespace kingiso
