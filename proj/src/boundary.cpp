#include "kingiso/boundary.hpp"

#include <algorithm>
#include <set>
#include <string>
#include <unordered_set>

namespace kingiso {

namespace {

using PointIndex = std::unordered_set<LatticePoint, LatticePointHash>;

PointIndex index_of(const PointSet& s) {
  return PointIndex(s.begin(), s.end(), s.size() * 2 + 1);
}

}  // namespace

std::size_t BoundaryBreakdown::projection_total() const {
  std::size_t sum = 0;
  for (const auto& [d, term] : per_direction) sum += term.projection_count;
  return sum;
}

std::size_t BoundaryBreakdown::gap_total() const {
  std::size_t sum = 0;
  for (const auto& [d, term] : per_direction) sum += term.gap_count;
  return sum;
}

DirectBoundary edge_boundary_direct(const PointSet& s) {
  DirectBoundary out;
  const auto dirs = directions(s.dimension());
  const auto index = index_of(s);
  // Exactly one endpoint of a boundary edge lies in S, so walking out of S
  // visits every such edge once.
  for (const auto& u : s) {
    for (const auto& d : dirs) {
      LatticePoint v = u + d;
      if (!index.contains(v)) out.edges.push_back(EdgeRecord{u, std::move(v)});
    }
  }
  out.count = out.edges.size();
  return out;
}

std::size_t edge_boundary_count(const PointSet& s) {
  const auto dirs = directions(s.dimension());
  const auto index = index_of(s);
  std::size_t count = 0;
  for (const auto& u : s) {
    for (const auto& d : dirs) {
      if (!index.contains(u + d)) ++count;
    }
  }
  return count;
}

std::size_t exterior_vertex_boundary(const PointSet& s) {
  const auto dirs = directions(s.dimension());
  const auto index = index_of(s);
  PointIndex outside;
  for (const auto& u : s) {
    for (const auto& d : dirs) {
      LatticePoint v = u + d;
      if (!index.contains(v)) outside.insert(std::move(v));
    }
  }
  return outside.size();
}

std::size_t closed_vertex_boundary(const PointSet& s) {
  return exterior_vertex_boundary(s) + s.size();
}

std::size_t projection_count(const PointSet& s, const Direction& d) {
  return line_sections(s, d).size();
}

std::vector<LatticePoint> gap_set(const PointSet& s, const Direction& d) {
  std::vector<LatticePoint> out;
  for (const auto& section : line_sections(s, d)) {
    const auto& t = section.positions;
    for (std::size_t j = 0; j + 1 < t.size(); ++j) {
      if (t[j + 1] - t[j] >= 2) out.push_back(section.point_at(t[j] + 1));
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

BoundaryBreakdown edge_boundary_formula(const PointSet& s) {
  BoundaryBreakdown out;
  out.dimension = s.dimension();
  for (const auto& d : directions(s.dimension())) {
    DirectionTerm term;
    for (const auto& section : line_sections(s, d)) {
      ++term.projection_count;
      // One gap point per break between consecutive runs.
      term.gap_count += section.run_count() - 1;
    }
    out.total += term.projection_count + term.gap_count;
    out.per_direction.emplace(d, term);
  }
  return out;
}

std::size_t partial_edge_boundary(const PointSet& s, int axis,
                                  std::span<const Coord> p,
                                  std::span<const int> eps) {
  const int n = s.dimension();
  if (axis < 1 || axis > n) {
    throw LatticeError("partial_edge_boundary: index " + std::to_string(axis) +
                       " out of range 1.." + std::to_string(n));
  }
  const auto m = static_cast<std::size_t>(n - 1);
  if (p.size() != m || eps.size() != m) {
    throw LatticeError("partial_edge_boundary: p and eps need n-1 entries");
  }
  if (std::any_of(eps.begin(), eps.end(), [](int e) { return e < -1 || e > 1; })) {
    throw LatticeError("partial_edge_boundary: eps entries must be in {-1,0,1}");
  }
  const bool same_line = std::all_of(eps.begin(), eps.end(), [](int e) { return e == 0; });

  std::vector<Coord> q(p.begin(), p.end());
  for (std::size_t k = 0; k < m; ++k) q[k] += eps[k];

  std::size_t count = 0;
  for (const auto& u : s) {
    if (!std::equal(p.begin(), p.end(), delete_coordinate(u, axis).begin())) continue;
    const Coord x = u[static_cast<std::size_t>(axis - 1)];
    for (Coord y = x - 1; y <= x + 1; ++y) {
      if (same_line && y == x) continue;
      if (!s.contains(insert_coordinate(q, y, axis))) ++count;
    }
  }
  return count;
}

std::vector<std::vector<Coord>> axis_line_indices(const PointSet& s, int axis) {
  if (axis < 1 || axis > s.dimension()) {
    throw LatticeError("axis_line_indices: index out of range");
  }
  std::set<std::vector<Coord>> seen;
  for (const auto& u : s) seen.insert(delete_coordinate(u, axis));
  return {seen.begin(), seen.end()};
}

std::vector<std::vector<int>> offset_cube(int m) {
  if (m < 0) throw LatticeError("offset_cube: negative dimension");
  std::vector<std::vector<int>> out{{}};
  for (int k = 0; k < m; ++k) {
    std::vector<std::vector<int>> next;
    next.reserve(out.size() * 3);
    for (const auto& prefix : out) {
      for (int e = -1; e <= 1; ++e) {
        next.push_back(prefix);
        next.back().push_back(e);
      }
    }
    out = std::move(next);
  }
  return out;
}

}  // namespace kingiso
