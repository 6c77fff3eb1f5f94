#include "kingiso/search.hpp"

#include <algorithm>
#include <charconv>
#include <cstdlib>
#include <iterator>
#include <limits>
#include <numeric>
#include <random>
#include <set>
#include <string_view>

#include "kingiso/boundary.hpp"
#include "kingiso/compression.hpp"

namespace kingiso {

namespace {

using Cells = std::vector<LatticePoint>;  // sorted down-set of N^n

bool is_addable(const Cells& ideal, const LatticePoint& c) {
  if (std::binary_search(ideal.begin(), ideal.end(), c)) return false;
  LatticePoint below = c;
  for (std::size_t j = 0; j < c.coords.size(); ++j) {
    if (c[j] == 0) continue;
    --below[j];
    const bool present = std::binary_search(ideal.begin(), ideal.end(), below);
    ++below[j];
    if (!present) return false;
  }
  return true;
}

PointSet to_centered_set(int n, const Cells& ideal) {
  std::vector<LatticePoint> pts;
  pts.reserve(ideal.size());
  for (const auto& cell : ideal) {
    LatticePoint p = cell;
    for (auto& c : p.coords) c = centered_coordinate(c);
    pts.push_back(std::move(p));
  }
  return PointSet(n, std::move(pts));
}

void verify_witness(const PointSet& w, std::size_t expected_size,
                    std::size_t expected_boundary) {
  const auto direct = edge_boundary_direct(w).count;
  const auto formula = edge_boundary_formula(w).total;
  if (w.size() != expected_size || direct != expected_boundary || formula != direct) {
    throw InvariantViolation("search witness failed verification");
  }
}

void finish_report(SearchReport& report) {
  std::vector<PointSet> kept;
  std::vector<WitnessStats> stats;
  // Keep the first representative found for each translation class.
  std::set<std::vector<LatticePoint>> seen;
  for (const auto& w : report.witnesses) {
    if (!seen.insert(w.normalized().points()).second) continue;
    verify_witness(w, report.size, report.min_edge_boundary);
    stats.push_back(WitnessStats{exterior_vertex_boundary(w), fully_gap_free(w)});
    kept.push_back(w);
  }
  report.witnesses = std::move(kept);
  report.witness_stats = std::move(stats);
}

void check_search_args(int n, std::size_t k) {
  if (n < 1) throw LatticeError("search dimension must be >= 1");
  if (k < 1) throw LatticeError("search size must be >= 1");
}

SearchReport exhaustive_min(int n, std::size_t k, const SearchOptions& options) {
  SearchReport report;
  report.dimension = n;
  report.size = k;
  report.method = SearchMethod::exhaustive;
  std::size_t best = std::numeric_limits<std::size_t>::max();
  for_each_compressed_set(n, k, options.max_sets, [&](const PointSet& s) {
    ++report.sets_examined;
    const std::size_t b = edge_boundary_count(s);
    if (b < best) {
      best = b;
      report.witnesses.clear();
    }
    if (b == best) report.witnesses.push_back(s);
  });
  report.min_edge_boundary = best;
  report.proven_optimal = true;
  finish_report(report);
  return report;
}

PointSet without(const PointSet& s, const LatticePoint& u) {
  std::vector<LatticePoint> pts;
  pts.reserve(s.size());
  for (const auto& p : s) {
    if (!(p == u)) pts.push_back(p);
  }
  return PointSet(s.dimension(), std::move(pts));
}

PointSet with(const PointSet& s, const LatticePoint& v) {
  std::vector<LatticePoint> pts = s.points();
  pts.push_back(v);
  return PointSet(s.dimension(), std::move(pts));
}

SearchReport heuristic_min(int n, std::size_t k, const SearchOptions& options) {
  SearchReport report;
  report.dimension = n;
  report.size = k;
  report.method = SearchMethod::heuristic;

  std::mt19937_64 rng(options.seed);
  // Smallest cube holding k points, plus slack for the moves.
  Coord side = 1;
  auto volume = [n](Coord w) {
    std::size_t v = 1;
    for (int j = 0; j < n; ++j) v *= static_cast<std::size_t>(w);
    return v;
  };
  while (volume(side) < k) ++side;
  const std::vector<Coord> window(static_cast<std::size_t>(n), side + 2);
  const auto dirs = directions(n);

  std::size_t best = std::numeric_limits<std::size_t>::max();
  auto consider = [&](const PointSet& s, std::size_t b) {
    if (b < best) {
      best = b;
      report.witnesses.clear();
    }
    if (b == best) report.witnesses.push_back(s);
  };

  for (std::size_t r = 0; r < options.restarts; ++r) {
    PointSet current = random_point_set(n, k, window, rng());
    std::size_t cur_b = edge_boundary_count(current);
    for (std::size_t m = 0; m < options.moves_per_restart; ++m) {
      ++report.sets_examined;
      // Move one point to a random empty cell adjacent to the rest of the set.
      const auto& pts = current.points();
      const LatticePoint u = pts[std::uniform_int_distribution<std::size_t>(0, pts.size() - 1)(rng)];
      PointSet rest = without(current, u);
      std::vector<LatticePoint> candidates;
      for (const auto& p : rest.empty() ? current : rest) {
        for (const auto& d : dirs) {
          LatticePoint v = p + d;
          if (!(v == u) && !rest.contains(v)) candidates.push_back(std::move(v));
        }
      }
      if (candidates.empty()) continue;
      const auto& v = candidates[std::uniform_int_distribution<std::size_t>(0, candidates.size() - 1)(rng)];
      PointSet next = with(rest, v);
      const std::size_t b = edge_boundary_count(next);
      if (b <= cur_b) {
        current = std::move(next);
        cur_b = b;
      }
    }
    auto trace = compress_to_fixed_point(current);
    consider(trace.final_set, edge_boundary_count(trace.final_set));
  }
  report.min_edge_boundary = best;
  report.proven_optimal = false;
  finish_report(report);
  return report;
}

}  // namespace

std::string to_string(SearchMethod m) {
  return m == SearchMethod::exhaustive ? "exhaustive" : "heuristic";
}

std::size_t default_max_sets() {
  const char* env = std::getenv(kMaxSetsEnv);
  if (env == nullptr) return kDefaultMaxSets;
  std::string_view text(env);
  std::size_t value = 0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc{} || ptr != text.data() + text.size() || value == 0) {
    return kDefaultMaxSets;
  }
  return value;
}

bool SearchReport::some_witness_gap_free() const {
  return std::any_of(witness_stats.begin(), witness_stats.end(),
                     [](const WitnessStats& w) { return w.fully_gap_free; });
}

bool SearchReport::all_witnesses_gap_free() const {
  return !witness_stats.empty() &&
         std::all_of(witness_stats.begin(), witness_stats.end(),
                     [](const WitnessStats& w) { return w.fully_gap_free; });
}

Coord centered_coordinate(Coord r) {
  return (r % 2 != 0) ? (r + 1) / 2 : -(r / 2);
}

void for_each_compressed_set(int n, std::size_t k, std::size_t max_sets,
                             const std::function<void(const PointSet&)>& visit) {
  check_search_args(n, k);
  // Grow down-sets of N^n one addable cell at a time, level by level.
  std::set<Cells> level{Cells{}};
  for (std::size_t size = 0; size < k; ++size) {
    std::set<Cells> next;
    for (const auto& ideal : level) {
      std::set<LatticePoint> candidates;
      if (ideal.empty()) {
        candidates.insert(LatticePoint(std::vector<Coord>(static_cast<std::size_t>(n), 0)));
      }
      for (const auto& cell : ideal) {
        for (std::size_t j = 0; j < static_cast<std::size_t>(n); ++j) {
          LatticePoint c = cell;
          ++c[j];
          candidates.insert(std::move(c));
        }
      }
      for (const auto& c : candidates) {
        if (!is_addable(ideal, c)) continue;
        Cells grown = ideal;
        grown.insert(std::upper_bound(grown.begin(), grown.end(), c), c);
        next.insert(std::move(grown));
        if (next.size() > max_sets) {
          throw EnumerationOverflow(
              max_sets, "compressed-set enumeration exceeded cap of " +
                            std::to_string(max_sets) + " sets at size " +
                            std::to_string(size + 1));
        }
      }
    }
    level = std::move(next);
  }
  for (const auto& ideal : level) visit(to_centered_set(n, ideal));
}

std::vector<PointSet> enumerate_compressed_sets(int n, std::size_t k, std::size_t max_sets) {
  std::vector<PointSet> out;
  for_each_compressed_set(n, k, max_sets, [&](const PointSet& s) { out.push_back(s); });
  return out;
}

SearchReport min_edge_boundary(int n, std::size_t k, const SearchOptions& options) {
  check_search_args(n, k);
  return options.method == SearchMethod::exhaustive ? exhaustive_min(n, k, options)
                                                    : heuristic_min(n, k, options);
}

PointSet random_point_set(int n, std::size_t k, std::span<const Coord> window,
                          std::uint64_t seed) {
  if (n < 1) throw LatticeError("random_point_set: dimension must be >= 1");
  if (window.size() != static_cast<std::size_t>(n)) {
    throw LatticeError("random_point_set: window needs one extent per axis");
  }
  std::uint64_t cells = 1;
  for (Coord w : window) {
    if (w < 0) throw LatticeError("random_point_set: negative window extent");
    cells *= static_cast<std::uint64_t>(w);
  }
  if (cells < k) throw LatticeError("random_point_set: window too small for k points");

  if (cells > (std::uint64_t{1} << 26)) throw LatticeError("random_point_set: window too large");

  std::mt19937_64 rng(seed);
  std::vector<std::uint64_t> all(cells);
  std::iota(all.begin(), all.end(), std::uint64_t{0});
  std::vector<std::uint64_t> chosen;
  chosen.reserve(k);
  std::sample(all.begin(), all.end(), std::back_inserter(chosen), static_cast<std::ptrdiff_t>(k), rng);
  std::vector<LatticePoint> pts;
  pts.reserve(k);
  for (std::uint64_t idx : chosen) {
    std::vector<Coord> c(static_cast<std::size_t>(n));
    for (std::size_t j = c.size(); j-- > 0;) {
      const auto w = static_cast<std::uint64_t>(window[j]);
      c[j] = static_cast<Coord>(idx % w);
      idx /= w;
    }
    pts.emplace_back(std::move(c));
  }
  return PointSet(n, std::move(pts));
}

bool fully_gap_free(const PointSet& s) {
  for (const auto& d : directions(s.dimension())) {
    for (const auto& section : line_sections(s, d)) {
      if (section.run_count() > 1) return false;
    }
  }
  return true;
}

std::vector<SearchReport> survey_gap_free_optima(int n, std::size_t k_max,
                                                 const SearchOptions& options) {
  SearchOptions exhaustive = options;
  exhaustive.method = SearchMethod::exhaustive;
  std::vector<SearchReport> out;
  for (std::size_t k = 1; k <= k_max; ++k) out.push_back(min_edge_boundary(n, k, exhaustive));
  return out;
}

}  // namespace kingiso
