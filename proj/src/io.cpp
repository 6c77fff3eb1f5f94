#include "kingiso/io.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <set>
#include <sstream>

namespace kingiso {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

std::vector<std::string_view> split_tokens(std::string_view s) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  auto is_sep = [](char c) { return c == ',' || std::isspace(static_cast<unsigned char>(c)); };
  while (i < s.size()) {
    while (i < s.size() && is_sep(s[i])) ++i;
    const std::size_t start = i;
    while (i < s.size() && !is_sep(s[i])) ++i;
    if (i > start) out.push_back(s.substr(start, i - start));
  }
  return out;
}

Coord parse_int(std::string_view tok, std::size_t line) {
  std::string_view digits = tok;
  if (!digits.empty() && digits.front() == '+') digits.remove_prefix(1);
  Coord value = 0;
  const auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), value);
  if (digits.empty() || ec != std::errc{} || ptr != digits.data() + digits.size()) {
    throw ParseError(line, "not an integer: '" + std::string(tok) + "'");
  }
  return value;
}

std::string join_coords(const LatticePoint& p, const char* sep) {
  std::string out;
  for (std::size_t k = 0; k < p.coords.size(); ++k) {
    if (k > 0) out += sep;
    out += std::to_string(p[k]);
  }
  return out;
}

std::string direction_label(const Direction& d) {
  std::string out = "(";
  for (std::size_t k = 0; k < d.steps().size(); ++k) {
    if (k > 0) out += ",";
    out += d[k] > 0 ? "+1" : (d[k] < 0 ? "-1" : "0");
  }
  return out + ")";
}

std::string potential_label(const Potential& p) {
  return "(" + std::to_string(p.sum_sq) + "," + std::to_string(p.neg_sum) + ")";
}

void expect_kind(const Json& j, const char* kind) {
  if (j.at("schema_version").get<int>() != kSchemaVersion) {
    throw ParseError(0, "unsupported schema_version");
  }
  if (j.at("kind").get<std::string>() != kind) {
    throw ParseError(0, std::string("expected kind '") + kind + "'");
  }
}

}  // namespace

// ---------------------------------------------------------------------------
// set files

PointSet parse_point_set(std::string_view text, std::optional<int> fallback_dimension) {
  std::optional<int> declared;
  std::vector<LatticePoint> points;
  std::set<LatticePoint> seen;
  std::size_t line_no = 0;
  bool seen_content = false;

  while (!text.empty()) {
    const auto nl = text.find('\n');
    std::string_view line = text.substr(0, nl);
    text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
    ++line_no;

    if (const auto hash = line.find('#'); hash != std::string_view::npos) {
      line = line.substr(0, hash);
    }
    line = trim(line);
    if (line.empty()) continue;

    const auto tokens = split_tokens(line);
    if (tokens.front() == "dim") {
      if (seen_content) throw ParseError(line_no, "'dim' must be the first record");
      if (tokens.size() != 2) throw ParseError(line_no, "expected 'dim N'");
      const Coord n = parse_int(tokens[1], line_no);
      if (n < 1 || n > 64) throw ParseError(line_no, "dimension must be in 1..64");
      declared = static_cast<int>(n);
      seen_content = true;
      continue;
    }
    seen_content = true;

    std::vector<Coord> coords;
    coords.reserve(tokens.size());
    for (auto tok : tokens) coords.push_back(parse_int(tok, line_no));
    LatticePoint p(std::move(coords));

    const int expected = declared ? *declared
                                  : (points.empty() ? p.dimension() : points.front().dimension());
    if (p.dimension() != expected) {
      throw ParseError(line_no, "expected " + std::to_string(expected) +
                                    " coordinates, found " + std::to_string(p.dimension()));
    }
    if (!seen.insert(p).second) throw ParseError(line_no, "duplicate point");
    points.push_back(std::move(p));
  }

  int dimension = 0;
  if (declared) {
    dimension = *declared;
  } else if (!points.empty()) {
    dimension = points.front().dimension();
  } else if (fallback_dimension) {
    dimension = *fallback_dimension;
  } else {
    throw ParseError(0, "empty input: cannot infer the dimension (add a 'dim N' line)");
  }
  return PointSet(dimension, std::move(points));
}

std::string format_point_set(const PointSet& s) {
  std::string out = "dim " + std::to_string(s.dimension()) + "\n";
  for (const auto& p : s) out += join_coords(p, " ") + "\n";
  return out;
}

// ---------------------------------------------------------------------------
// JSON

Json to_json(const PointSet& s) {
  Json pts = Json::array();
  for (const auto& p : s) pts.push_back(p.coords);
  return Json{{"dimension", s.dimension()}, {"points", std::move(pts)}};
}

PointSet point_set_from_json(const Json& j) {
  std::vector<LatticePoint> pts;
  for (const auto& p : j.at("points")) pts.emplace_back(p.get<std::vector<Coord>>());
  return PointSet(j.at("dimension").get<int>(), std::move(pts));
}

Json to_json(const BoundaryBreakdown& b) {
  Json per = Json::array();
  for (const auto& [d, term] : b.per_direction) {
    per.push_back(Json{{"direction", d.steps()},
                       {"projection_count", term.projection_count},
                       {"gap_count", term.gap_count}});
  }
  return Json{{"schema_version", kSchemaVersion},
              {"kind", "boundary_breakdown"},
              {"dimension", b.dimension},
              {"total", b.total},
              {"projection_total", b.projection_total()},
              {"gap_total", b.gap_total()},
              {"per_direction", std::move(per)}};
}

BoundaryBreakdown breakdown_from_json(const Json& j) {
  expect_kind(j, "boundary_breakdown");
  BoundaryBreakdown b;
  b.dimension = j.at("dimension").get<int>();
  b.total = j.at("total").get<std::size_t>();
  for (const auto& e : j.at("per_direction")) {
    b.per_direction.emplace(Direction(e.at("direction").get<std::vector<int>>()),
                            DirectionTerm{e.at("projection_count").get<std::size_t>(),
                                          e.at("gap_count").get<std::size_t>()});
  }
  return b;
}

Json to_json(const CompressionTrace& t) {
  Json steps = Json::array();
  for (const auto& st : t.steps) {
    steps.push_back(Json{{"axis", st.axis},
                         {"changed", st.changed},
                         {"boundary_before", st.boundary_before},
                         {"boundary_after", st.boundary_after},
                         {"potential_before", {st.potential_before.sum_sq, st.potential_before.neg_sum}},
                         {"potential_after", {st.potential_after.sum_sq, st.potential_after.neg_sum}}});
  }
  return Json{{"schema_version", kSchemaVersion},
              {"kind", "compression_trace"},
              {"changing_steps", t.changing_steps()},
              {"steps", std::move(steps)},
              {"final", to_json(t.final_set)}};
}

Json to_json(const SearchReport& r) {
  Json witnesses = Json::array();
  for (std::size_t w = 0; w < r.witnesses.size(); ++w) {
    Json entry = to_json(r.witnesses[w]);
    if (w < r.witness_stats.size()) {
      entry["exterior_vertex_boundary"] = r.witness_stats[w].exterior_vertex_boundary;
      entry["fully_gap_free"] = r.witness_stats[w].fully_gap_free;
    }
    witnesses.push_back(std::move(entry));
  }
  return Json{{"schema_version", kSchemaVersion},
              {"kind", "search_report"},
              {"dimension", r.dimension},
              {"size", r.size},
              {"method", to_string(r.method)},
              {"proven_optimal", r.proven_optimal},
              {"sets_examined", r.sets_examined},
              {"min_edge_boundary", r.min_edge_boundary},
              {"some_witness_gap_free", r.some_witness_gap_free()},
              {"all_witnesses_gap_free", r.all_witnesses_gap_free()},
              {"witnesses", std::move(witnesses)}};
}

SearchReport report_from_json(const Json& j) {
  expect_kind(j, "search_report");
  SearchReport r;
  r.dimension = j.at("dimension").get<int>();
  r.size = j.at("size").get<std::size_t>();
  const auto method = j.at("method").get<std::string>();
  if (method == "exhaustive") {
    r.method = SearchMethod::exhaustive;
  } else if (method == "heuristic") {
    r.method = SearchMethod::heuristic;
  } else {
    throw ParseError(0, "unknown search method '" + method + "'");
  }
  r.proven_optimal = j.at("proven_optimal").get<bool>();
  r.sets_examined = j.at("sets_examined").get<std::size_t>();
  r.min_edge_boundary = j.at("min_edge_boundary").get<std::size_t>();
  for (const auto& w : j.at("witnesses")) {
    r.witnesses.push_back(point_set_from_json(w));
    r.witness_stats.push_back(WitnessStats{w.at("exterior_vertex_boundary").get<std::size_t>(),
                                           w.at("fully_gap_free").get<bool>()});
  }
  return r;
}

std::string serialize_report(const BoundaryBreakdown& b) { return to_json(b).dump(2) + "\n"; }
std::string serialize_report(const SearchReport& r) { return to_json(r).dump(2) + "\n"; }

Json survey_to_json(const std::vector<SearchReport>& rows) {
  Json table = Json::array();
  for (const auto& r : rows) {
    table.push_back(Json{{"dimension", r.dimension},
                         {"size", r.size},
                         {"min_edge_boundary", r.min_edge_boundary},
                         {"witnesses", r.witnesses.size()},
                         {"some_witness_gap_free", r.some_witness_gap_free()},
                         {"all_witnesses_gap_free", r.all_witnesses_gap_free()},
                         {"proven_optimal", r.proven_optimal}});
  }
  return Json{{"schema_version", kSchemaVersion}, {"kind", "gap_free_survey"}, {"rows", std::move(table)}};
}

// ---------------------------------------------------------------------------
// plain text

std::string format_plain(const BoundaryBreakdown& b) {
  std::ostringstream os;
  os << "direction\tprojections\tgaps\n";
  for (const auto& [d, term] : b.per_direction) {
    os << direction_label(d) << '\t' << term.projection_count << '\t' << term.gap_count << '\n';
  }
  os << "projection total: " << b.projection_total() << '\n'
     << "gap total: " << b.gap_total() << '\n'
     << "formula total: " << b.total << '\n';
  return os.str();
}

std::string format_plain(const CompressionTrace& t) {
  std::ostringstream os;
  os << "axis\tchanged\tboundary\tpotential\n";
  for (const auto& st : t.steps) {
    os << st.axis << '\t' << (st.changed ? "yes" : "no") << '\t' << st.boundary_before << " -> "
       << st.boundary_after << '\t' << potential_label(st.potential_before) << " -> "
       << potential_label(st.potential_after) << '\n';
  }
  os << "changing steps: " << t.changing_steps() << '\n' << "final set:\n" << format_point_set(t.final_set);
  return os.str();
}

std::string format_plain(const SearchReport& r) {
  std::ostringstream os;
  os << "dimension: " << r.dimension << '\n'
     << "size: " << r.size << '\n'
     << "method: " << to_string(r.method) << (r.proven_optimal ? " (proven optimal)" : "") << '\n'
     << "sets examined: " << r.sets_examined << '\n'
     << "min edge boundary: " << r.min_edge_boundary << '\n'
     << "witnesses: " << r.witnesses.size() << '\n';
  for (std::size_t w = 0; w < r.witnesses.size(); ++w) {
    os << "witness " << w + 1 << ": exterior vertex boundary "
       << r.witness_stats[w].exterior_vertex_boundary << ", fully gap-free "
       << (r.witness_stats[w].fully_gap_free ? "yes" : "no") << '\n';
    for (const auto& p : r.witnesses[w]) os << "  " << join_coords(p, " ") << '\n';
  }
  return os.str();
}

std::string format_survey_table(const std::vector<SearchReport>& rows) {
  std::ostringstream os;
  os << "dim\tsize\tmin_edge_boundary\twitnesses\tsome_gap_free\tall_gap_free\n";
  for (const auto& r : rows) {
    os << r.dimension << '\t' << r.size << '\t' << r.min_edge_boundary << '\t'
       << r.witnesses.size() << '\t' << (r.some_witness_gap_free() ? "true" : "false") << '\t'
       << (r.all_witnesses_gap_free() ? "true" : "false") << '\n';
  }
  return os.str();
}

// ---------------------------------------------------------------------------
// rendering

std::string render_grid(const PointSet& s, const RenderOptions& options) {
  if (s.dimension() != 2) throw LatticeError("render_grid needs a set in Z^2");
  if (s.empty()) return options.mode == RenderMode::ascii ? std::string{} : std::string{
      "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"0\" height=\"0\"/>\n"};

  const LatticePoint lo = s.min_corner();
  const LatticePoint hi = s.max_corner();
  const Coord x0 = lo[0] - 1, x1 = hi[0] + 1;
  const Coord y0 = lo[1] - 1, y1 = hi[1] + 1;
  const auto width = static_cast<std::size_t>(x1 - x0 + 1);
  const auto height = static_cast<std::size_t>(y1 - y0 + 1);
  if (width > options.max_extent || height > options.max_extent) {
    throw LatticeError("render_grid: frame " + std::to_string(width) + "x" +
                       std::to_string(height) + " exceeds limit " +
                       std::to_string(options.max_extent));
  }

  enum class Cell { member, neighbor, other };
  auto classify = [&](Coord x, Coord y) {
    const LatticePoint p{x, y};
    if (s.contains(p)) return Cell::member;
    for (const auto& q : neighbors(p)) {
      if (s.contains(q)) return Cell::neighbor;
    }
    return Cell::other;
  };

  std::ostringstream os;
  if (options.mode == RenderMode::ascii) {
    for (Coord y = y1; y >= y0; --y) {
      for (Coord x = x0; x <= x1; ++x) {
        switch (classify(x, y)) {
          case Cell::member: os << "●"; break;
          case Cell::neighbor: os << "○"; break;
          case Cell::other: os << "·"; break;
        }
      }
      os << '\n';
    }
    return os.str();
  }

  const int c = options.cell_px;
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width * c << "\" height=\""
     << height * c << "\" viewBox=\"0 0 " << width * c << ' ' << height * c << "\">\n"
     << "  <rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  for (Coord y = y1; y >= y0; --y) {
    for (Coord x = x0; x <= x1; ++x) {
      const auto cx = (x - x0) * c + c / 2;
      const auto cy = (y1 - y) * c + c / 2;
      switch (classify(x, y)) {
        case Cell::member:
          os << "  <circle cx=\"" << cx << "\" cy=\"" << cy << "\" r=\"" << c * 3 / 8
             << "\" fill=\"#1f4fd1\" class=\"member\"/>\n";
          break;
        case Cell::neighbor:
          os << "  <circle cx=\"" << cx << "\" cy=\"" << cy << "\" r=\"" << c * 3 / 8
             << "\" fill=\"#d12f1f\" class=\"neighbor\"/>\n";
          break;
        case Cell::other:
          os << "  <circle cx=\"" << cx << "\" cy=\"" << cy << "\" r=\"" << c / 10 + 1
             << "\" fill=\"#aaaaaa\" class=\"other\"/>\n";
          break;
      }
    }
  }
  os << "</svg>\n";
  return os.str();
}

}  // namespace kingiso
