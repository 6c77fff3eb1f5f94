#include "kingiso/compression.hpp"

#include <map>
#include <string>

#include "kingiso/boundary.hpp"

namespace kingiso {

namespace {

void check_axis(const PointSet& s, int axis) {
  if (axis < 1 || axis > s.dimension()) {
    throw LatticeError("compression axis " + std::to_string(axis) +
                       " out of range 1.." + std::to_string(s.dimension()));
  }
}

std::map<std::vector<Coord>, std::vector<Coord>> axis_lines(const PointSet& s, int axis) {
  std::map<std::vector<Coord>, std::vector<Coord>> lines;
  const auto k = static_cast<std::size_t>(axis - 1);
  for (const auto& u : s) lines[delete_coordinate(u, axis)].push_back(u[k]);
  return lines;
}

}  // namespace

Interval canonical_segment(std::size_t m) {
  if (m == 0) return Interval{};
  const auto lo = -static_cast<Coord>((m - 1) / 2);
  return Interval{lo, lo + static_cast<Coord>(m) - 1};
}

PointSet central_compress(const PointSet& s, int axis) {
  check_axis(s, axis);
  std::vector<LatticePoint> out;
  out.reserve(s.size());
  for (const auto& [p, xs] : axis_lines(s, axis)) {
    const Interval seg = canonical_segment(xs.size());
    for (Coord x = seg.lo; x <= seg.hi; ++x) out.push_back(insert_coordinate(p, x, axis));
  }
  return PointSet(s.dimension(), std::move(out));
}

bool is_centrally_compressed(const PointSet& s, int axis) {
  check_axis(s, axis);
  for (auto& [p, xs] : axis_lines(s, axis)) {
    const Interval seg = canonical_segment(xs.size());
    // xs holds distinct values, so it fills seg iff it lies inside it.
    for (Coord x : xs) {
      if (!seg.contains(x)) return false;
    }
  }
  return true;
}

Potential potential(const PointSet& s) {
  Potential out;
  for (const auto& u : s) {
    for (Coord c : u.coords) {
      out.sum_sq += c * c;
      out.neg_sum -= c;
    }
  }
  return out;
}

std::size_t CompressionTrace::changing_steps() const {
  std::size_t n = 0;
  for (const auto& st : steps) n += st.changed ? 1 : 0;
  return n;
}

CompressionTrace compress_to_fixed_point(const PointSet& s) {
  CompressionTrace trace;
  PointSet current = s;
  std::size_t boundary = edge_boundary_count(current);
  Potential pot = potential(current);

  bool pass_changed = true;
  while (pass_changed) {
    pass_changed = false;
    for (int axis = 1; axis <= current.dimension(); ++axis) {
      PointSet next = central_compress(current, axis);
      CompressionStep st;
      st.axis = axis;
      st.changed = !(next == current);
      st.boundary_before = boundary;
      st.potential_before = pot;
      if (st.changed) {
        boundary = edge_boundary_count(next);
        pot = potential(next);
        if (boundary > st.boundary_before) {
          throw InvariantViolation("compression increased the edge boundary");
        }
        if (!(pot < st.potential_before)) {
          throw InvariantViolation("compression step did not lower the potential");
        }
        current = std::move(next);
        pass_changed = true;
      }
      st.boundary_after = boundary;
      st.potential_after = pot;
      trace.steps.push_back(st);
    }
  }
  trace.final_set = std::move(current);
  return trace;
}

}  // namespace kingiso
