#include <algorithm>
#include <cstdlib>

#include "doctest.h"

#include "kingiso/boundary.hpp"
#include "kingiso/compression.hpp"
#include "kingiso/search.hpp"
#include "oracles.hpp"

using namespace kingiso;

namespace {

// Coefficients of prod_{j>=1} (1 - x^j)^(-weight(j)), up to x^kmax.
template <class Weight>
std::vector<std::size_t> euler_transform(std::size_t kmax, Weight weight) {
  std::vector<std::size_t> c(kmax + 1, 0);
  c[0] = 1;
  for (std::size_t j = 1; j <= kmax; ++j) {
    for (std::size_t rep = 0; rep < weight(j); ++rep) {
      for (std::size_t t = j; t <= kmax; ++t) c[t] += c[t - j];
    }
  }
  return c;
}

}  // namespace

TEST_CASE("centered_coordinate labels") {
  const std::vector<Coord> expect{0, 1, -1, 2, -2, 3, -3};
  for (std::size_t r = 0; r < expect.size(); ++r) {
    CHECK(centered_coordinate(static_cast<Coord>(r)) == expect[r]);
  }
}

TEST_CASE("enumerate_compressed_sets examples") {
  for (std::size_t k = 1; k <= 12; ++k) {
    const auto sets = enumerate_compressed_sets(1, k);
    REQUIRE(sets.size() == 1);
    const auto seg = canonical_segment(k);
    std::vector<LatticePoint> pts;
    for (Coord x = seg.lo; x <= seg.hi; ++x) pts.push_back({x});
    CHECK(sets[0] == PointSet(1, pts));
  }
  const auto one = enumerate_compressed_sets(2, 1);
  REQUIRE(one.size() == 1);
  CHECK(one[0] == PointSet(2, {{0, 0}}));

  // Frozen regression value, confirmed by brute force over a window.
  const auto four = enumerate_compressed_sets(2, 4);
  CHECK(four.size() == 5);
  CHECK(oracle::count_centered_sets_2d(4) == 5);
  CHECK(oracle::count_centered_sets_2d(3) == enumerate_compressed_sets(2, 3).size());
  CHECK(std::find(four.begin(), four.end(), PointSet(2, {{0, 0}, {0, 1}, {1, 0}, {1, 1}})) !=
        four.end());

  CHECK_THROWS_AS(enumerate_compressed_sets(2, 0), LatticeError);
  CHECK_THROWS_AS(enumerate_compressed_sets(0, 3), LatticeError);
}

TEST_CASE("compressed-set counts match partition numbers") {
  const auto partitions = euler_transform(14, [](std::size_t) { return std::size_t{1}; });
  const auto plane = euler_transform(10, [](std::size_t j) { return j; });
  for (std::size_t k = 1; k <= 14; ++k) CHECK(enumerate_compressed_sets(2, k).size() == partitions[k]);
  for (std::size_t k = 1; k <= 10; ++k) CHECK(enumerate_compressed_sets(3, k).size() == plane[k]);
}

TEST_CASE("enumerated sets are fixed points, distinct and inside the window") {
  for (int n = 1; n <= 3; ++n) {
    for (std::size_t k = 1; k <= 8; ++k) {
      const auto sets = enumerate_compressed_sets(n, k);
      const auto c = static_cast<Coord>((k + 1) / 2);
      std::set<std::vector<LatticePoint>> seen;
      for (const auto& s : sets) {
        CHECK(s.size() == k);
        CHECK(seen.insert(s.normalized().points()).second);
        for (int axis = 1; axis <= n; ++axis) CHECK(is_centrally_compressed(s, axis));
        for (const auto& p : s)
          for (Coord x : p.coords) CHECK((-c <= x && x <= c + 1));
      }
    }
  }
}

TEST_CASE("enumeration cap is enforced") {
  CHECK_THROWS_AS(enumerate_compressed_sets(3, 8, 10), EnumerationOverflow);
  try {
    enumerate_compressed_sets(2, 10, 7);
    FAIL("expected overflow");
  } catch (const EnumerationOverflow& e) {
    CHECK(e.cap() == 7);
  }
  CHECK(enumerate_compressed_sets(2, 6, 11).size() == 11);
}

TEST_CASE("default cap reads the environment") {
  ::setenv(kMaxSetsEnv, "1234", 1);
  CHECK(default_max_sets() == 1234);
  ::setenv(kMaxSetsEnv, "garbage", 1);
  CHECK(default_max_sets() == kDefaultMaxSets);
  ::unsetenv(kMaxSetsEnv);
  CHECK(default_max_sets() == kDefaultMaxSets);
}

TEST_CASE("min_edge_boundary examples") {
  const auto line = min_edge_boundary(1, 7);
  CHECK(line.min_edge_boundary == 2);
  CHECK(line.proven_optimal);
  CHECK(line.witnesses.size() == 1);

  const auto single = min_edge_boundary(2, 1);
  CHECK(single.min_edge_boundary == 8);

  const auto twelve = min_edge_boundary(2, 12);
  CHECK(twelve.min_edge_boundary == 36);
  CHECK(twelve.method == SearchMethod::exhaustive);
  CHECK(twelve.sets_examined == 77);
  for (std::size_t w = 0; w < twelve.witnesses.size(); ++w) {
    CHECK(twelve.witnesses[w].size() == 12);
    CHECK(edge_boundary_direct(twelve.witnesses[w]).count == 36);
    CHECK(edge_boundary_formula(twelve.witnesses[w]).total == 36);
    CHECK(twelve.witness_stats[w].exterior_vertex_boundary ==
          exterior_vertex_boundary(twelve.witnesses[w]));
  }
}

TEST_CASE("exhaustive minimum agrees with independent window oracles") {
  for (std::size_t k = 1; k <= 4; ++k) {
    CHECK(min_edge_boundary(2, k).min_edge_boundary ==
          oracle::full_window_min_2d(k, static_cast<int>(k) + 2));
  }
  for (std::size_t k = 1; k <= 6; ++k) {
    oracle::RunWindowOracle o(k, static_cast<int>(2 * k));
    CHECK(min_edge_boundary(2, k).min_edge_boundary == o.minimum());
  }
}

TEST_CASE("random_point_set") {
  const std::vector<Coord> w44{4, 4};
  CHECK(random_point_set(2, 5, w44, 42) == random_point_set(2, 5, w44, 42));
  CHECK(random_point_set(2, 5, w44, 42).size() == 5);
  const auto full = random_point_set(2, 16, w44, 3);
  CHECK(full.size() == 16);
  CHECK(full.min_corner() == LatticePoint{0, 0});
  CHECK(full.max_corner() == LatticePoint{3, 3});
  CHECK(random_point_set(2, 0, w44, 1).empty());
  CHECK_THROWS_AS(random_point_set(2, 17, w44, 1), LatticeError);
  CHECK_THROWS_AS(random_point_set(3, 1, w44, 1), LatticeError);
}

TEST_CASE("fully_gap_free") {
  CHECK(fully_gap_free(PointSet(2, {{0, 0}, {1, 0}, {0, 1}, {1, 1}})));
  CHECK_FALSE(fully_gap_free(PointSet(1, {{0}, {2}})));
  const PointSet diag(2, {{0, 0}, {1, 1}, {2, 2}});
  CHECK(fully_gap_free(diag));
  for (const auto& d : directions(2)) CHECK(gap_set(diag, d).empty());
  CHECK(fully_gap_free(PointSet(3)));
}

TEST_CASE("survey_gap_free_optima") {
  for (const auto& row : survey_gap_free_optima(1, 10)) {
    CHECK(row.all_witnesses_gap_free());
    CHECK(row.min_edge_boundary == 2);
  }
  const auto rows = survey_gap_free_optima(2, 4);
  REQUIRE(rows.size() == 4);
  for (const auto& row : rows) CHECK(row.some_witness_gap_free());

  // Frozen from the exhaustive run: the unique 36-boundary 12-point optimum
  // has no gaps in any direction.
  const auto twelve = survey_gap_free_optima(2, 12).back();
  CHECK(twelve.size == 12);
  CHECK(twelve.min_edge_boundary == 36);
  CHECK(twelve.witnesses.size() == 1);
  CHECK(twelve.some_witness_gap_free());
  CHECK(twelve.all_witnesses_gap_free());
}

TEST_CASE("compression lands in the enumerated search space") {
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    const int n = 1 + static_cast<int>(seed % 3);
    const std::vector<Coord> window(static_cast<std::size_t>(n), n == 1 ? 20 : (n == 2 ? 6 : 4));
    const auto s = random_point_set(n, 1 + seed % 10, window, seed + 9000);
    const auto fixed = compress_to_fixed_point(s).final_set;
    CHECK(edge_boundary_count(fixed) <= edge_boundary_count(s));
    const auto space = enumerate_compressed_sets(n, s.size());
    CHECK(std::find(space.begin(), space.end(), fixed) != space.end());
  }
}

TEST_CASE("heuristic mode") {
  SearchOptions opt;
  opt.method = SearchMethod::heuristic;
  opt.seed = 17;
  opt.restarts = 8;
  opt.moves_per_restart = 200;
  const auto h = min_edge_boundary(2, 7, opt);
  CHECK(h.method == SearchMethod::heuristic);
  CHECK_FALSE(h.proven_optimal);
  CHECK(h.min_edge_boundary >= min_edge_boundary(2, 7).min_edge_boundary);
  CHECK(h == min_edge_boundary(2, 7, opt));
  for (const auto& w : h.witnesses) CHECK(edge_boundary_count(w) == h.min_edge_boundary);
}

TEST_CASE("reports are deterministic") {
  CHECK(min_edge_boundary(3, 6) == min_edge_boundary(3, 6));
  CHECK(survey_gap_free_optima(2, 6) == survey_gap_free_optima(2, 6));
}
