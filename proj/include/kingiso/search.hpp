#pragma once

// Minimal edge boundary per (dimension, size).
//
// Exhaustive search scans the sets fixed by every axis compression. Since
// compression keeps |S| and never raises the boundary, and iterated
// compression always terminates, the minimum over those fixed points is the
// minimum over all finite sets of that size. A fixed point has every axis
// line equal to a centered segment; relabelling coordinates along the order
// 0, 1, -1, 2, -2, ... turns it into a down-set of N^n, so the fixed points of
// size k are in bijection with n-dimensional partitions of k (p(k) for n = 2,
// plane partitions for n = 3).

#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <vector>

#include "kingiso/lattice.hpp"

namespace kingiso {

enum class SearchMethod { exhaustive, heuristic };

std::string to_string(SearchMethod m);

/// Environment variable holding the default enumeration cap.
inline constexpr const char* kMaxSetsEnv = "KINGISO_MAX_SETS";
inline constexpr std::size_t kDefaultMaxSets = 1'000'000;

/// kMaxSetsEnv if set to a positive integer, else kDefaultMaxSets.
std::size_t default_max_sets();

struct SearchOptions {
  SearchMethod method = SearchMethod::exhaustive;
  std::size_t max_sets = default_max_sets();
  std::uint64_t seed = 0;
  // heuristic mode only
  std::size_t restarts = 32;
  std::size_t moves_per_restart = 400;
};

struct WitnessStats {
  std::size_t exterior_vertex_boundary = 0;
  bool fully_gap_free = false;

  friend bool operator==(const WitnessStats&, const WitnessStats&) = default;
};

struct SearchReport {
  int dimension = 1;
  std::size_t size = 0;
  std::size_t min_edge_boundary = 0;
  std::vector<PointSet> witnesses;
  std::vector<WitnessStats> witness_stats;  // parallel to witnesses
  SearchMethod method = SearchMethod::exhaustive;
  bool proven_optimal = false;  // set only when the exhaustive scan completed
  std::size_t sets_examined = 0;

  bool some_witness_gap_free() const;
  bool all_witnesses_gap_free() const;

  friend bool operator==(const SearchReport&, const SearchReport&) = default;
};

/// Visit every size-k set in Z^n fixed by all axis compressions, in a
/// deterministic order. Throws EnumerationOverflow if more than max_sets sets
/// (at any intermediate size) would be generated.
void for_each_compressed_set(int n, std::size_t k, std::size_t max_sets,
                             const std::function<void(const PointSet&)>& visit);

std::vector<PointSet> enumerate_compressed_sets(int n, std::size_t k,
                                                std::size_t max_sets = default_max_sets());

/// Maps the down-set label r = 0,1,2,3,4,... to the coordinate 0,1,-1,2,-2,...
Coord centered_coordinate(Coord r);

SearchReport min_edge_boundary(int n, std::size_t k, const SearchOptions& options = {});

/// Uniform k-subset of the box [0, window[0]) x ... x [0, window[n-1]).
PointSet random_point_set(int n, std::size_t k, std::span<const Coord> window,
                          std::uint64_t seed);

/// No gap points in any of the 3^n - 1 directions.
bool fully_gap_free(const PointSet& s);

/// One exhaustive report per size 1..k_max.
std::vector<SearchReport> survey_gap_free_optima(int n, std::size_t k_max,
                                                 const SearchOptions& options = {});

}  // namespace kingiso
