#pragma once

// Text formats for point sets, reports and pictures.
//
// Set file grammar (UTF-8, line oriented):
//
//   file    := line*
//   line    := [ content ] [ '#' any* ] '\n'
//   content := 'dim' ws+ INT          (only as the first non-blank line)
//            | INT ( sep INT )*       (one lattice point)
//   sep     := ( ws | ',' )+
//   INT     := [+-]? [0-9]+           (must fit in int64)
//
// Blank and comment-only lines are ignored. Every point line must have the
// same arity, equal to the declared dimension when a `dim` line is present.
// A repeated point is an error. format_point_set writes `dim N` followed by
// the points in lexicographic order, one per line, separated by single spaces.

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

#include "kingiso/boundary.hpp"
#include "kingiso/compression.hpp"
#include "kingiso/lattice.hpp"
#include "kingiso/search.hpp"

namespace kingiso {

inline constexpr int kSchemaVersion = 1;

class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, const std::string& message)
      : std::runtime_error(line == 0 ? message
                                     : "line " + std::to_string(line) + ": " + message),
        line_(line) {}
  /// 1-based line number, 0 when not tied to a line.
  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

/// `fallback_dimension` is used when the text has neither a `dim` line nor any
/// points; without it such input is an error.
PointSet parse_point_set(std::string_view text,
                         std::optional<int> fallback_dimension = std::nullopt);

std::string format_point_set(const PointSet& s);

using Json = nlohmann::ordered_json;

Json to_json(const PointSet& s);
Json to_json(const BoundaryBreakdown& b);
Json to_json(const CompressionTrace& t);
Json to_json(const SearchReport& r);

PointSet point_set_from_json(const Json& j);
BoundaryBreakdown breakdown_from_json(const Json& j);
SearchReport report_from_json(const Json& j);

/// Pretty JSON text with a trailing newline.
std::string serialize_report(const BoundaryBreakdown& b);
std::string serialize_report(const SearchReport& r);

std::string format_plain(const BoundaryBreakdown& b);
std::string format_plain(const CompressionTrace& t);
std::string format_plain(const SearchReport& r);

/// Tab-separated survey table with a header row.
std::string format_survey_table(const std::vector<SearchReport>& rows);
Json survey_to_json(const std::vector<SearchReport>& rows);

enum class RenderMode { ascii, svg };

struct RenderOptions {
  RenderMode mode = RenderMode::ascii;
  std::size_t max_extent = 200;  // per axis, including the neighbor frame
  int cell_px = 24;              // svg only
};

/// Picture of a planar set with its exterior neighbors. ASCII rows run from
/// the largest y down, `●` = in S, `○` = exterior neighbor, `·` = other.
/// Throws LatticeError if S is not planar or the frame exceeds max_extent.
std::string render_grid(const PointSet& s, const RenderOptions& options = {});

}  // namespace kingiso
