// kingiso: edge boundaries, central compression and extremal-set search in the
// king graph on Z^n.
//
//   kingiso boundary --input box.txt [--format json|plain]
//   kingiso compress --input set.txt
//   kingiso search   --dim 2 --size 12 [--exhaustive|--heuristic] [--seed S] [--max-sets CAP]
//   kingiso survey   --dim 2 --size 10
//   kingiso render   --input set.txt [--render ascii|svg]
//   kingiso selftest [--seed S] [--count N]
//
// Exit codes: 0 success, 1 usage or parse error, 2 internal invariant violation.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>
#include <string>

#include "CLI11.hpp"

#include "kingiso/boundary.hpp"
#include "kingiso/compression.hpp"
#include "kingiso/io.hpp"
#include "kingiso/lattice.hpp"
#include "kingiso/search.hpp"

namespace {

using namespace kingiso;

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitInvariant = 2;

struct Args {
  std::string input = "-";
  int dim = 0;
  std::size_t size = 0;
  std::uint64_t seed = 0;
  bool heuristic = false;
  std::size_t max_sets = default_max_sets();
  std::string format = "plain";
  std::string render = "ascii";
  std::size_t count = 200;
};

std::string read_input(const std::string& path) {
  if (path == "-") {
    return {std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>()};
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError(0, "cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

PointSet load_set(const Args& a) {
  return parse_point_set(read_input(a.input),
                         a.dim > 0 ? std::optional<int>(a.dim) : std::nullopt);
}

int run_boundary(const Args& a) {
  const PointSet s = load_set(a);
  const auto breakdown = edge_boundary_formula(s);
  const auto direct = edge_boundary_direct(s).count;
  const bool agree = breakdown.total == direct;
  const auto exterior = exterior_vertex_boundary(s);

  if (a.format == "json") {
    Json out = to_json(breakdown);
    out["set_size"] = s.size();
    out["direct_count"] = direct;
    out["formula_total"] = breakdown.total;
    out["agree"] = agree;
    out["exterior_vertex_boundary"] = exterior;
    out["closed_vertex_boundary"] = exterior + s.size();
    std::cout << out.dump(2) << '\n';
  } else {
    std::cout << format_plain(breakdown) << "direct count: " << direct << '\n'
              << "agree: " << (agree ? "yes" : "NO") << '\n'
              << "set size: " << s.size() << '\n'
              << "exterior vertex boundary: " << exterior << '\n'
              << "closed vertex boundary: " << exterior + s.size() << '\n';
  }
  if (!agree) {
    std::cerr << "error: formula total " << breakdown.total << " != direct count " << direct
              << '\n';
    return kExitInvariant;
  }
  return kExitOk;
}

int run_compress(const Args& a) {
  const auto trace = compress_to_fixed_point(load_set(a));
  if (a.format == "json") {
    std::cout << to_json(trace).dump(2) << '\n';
  } else {
    std::cout << format_plain(trace);
  }
  return kExitOk;
}

SearchOptions search_options(const Args& a) {
  SearchOptions opt;
  opt.method = a.heuristic ? SearchMethod::heuristic : SearchMethod::exhaustive;
  opt.max_sets = a.max_sets;
  opt.seed = a.seed;
  return opt;
}

int run_search(const Args& a) {
  const auto report = min_edge_boundary(a.dim, a.size, search_options(a));
  std::cout << (a.format == "json" ? serialize_report(report) : format_plain(report));
  return kExitOk;
}

int run_survey(const Args& a) {
  const auto rows = survey_gap_free_optima(a.dim, a.size, search_options(a));
  if (a.format == "json") {
    std::cout << survey_to_json(rows).dump(2) << '\n';
  } else {
    std::cout << format_survey_table(rows);
  }
  return kExitOk;
}

int run_render(const Args& a) {
  RenderOptions opt;
  opt.mode = a.render == "svg" ? RenderMode::svg : RenderMode::ascii;
  std::cout << render_grid(load_set(a), opt);
  return kExitOk;
}

int run_selftest(const Args& a) {
  std::size_t checked = 0;
  std::size_t failures = 0;
  for (std::size_t t = 0; t < a.count; ++t) {
    const int n = 1 + static_cast<int>(t % 4);
    const Coord side = n == 1 ? 24 : (n == 2 ? 8 : (n == 3 ? 5 : 3));
    const std::vector<Coord> window(static_cast<std::size_t>(n), side);
    const std::size_t k = 1 + (t * 7 + 3) % 12;
    const PointSet s = random_point_set(n, k, window, a.seed + t);
    const auto direct = edge_boundary_direct(s).count;
    const auto formula = edge_boundary_formula(s).total;
    ++checked;
    if (direct != formula) {
      ++failures;
      std::cerr << "mismatch: direct " << direct << " formula " << formula << " for\n"
                << format_point_set(s);
    }
    for (int axis = 1; axis <= n; ++axis) {
      const auto c = central_compress(s, axis);
      if (c.size() != s.size() || edge_boundary_count(c) > direct) {
        ++failures;
        std::cerr << "compression check failed on axis " << axis << " for\n"
                  << format_point_set(s);
      }
    }
  }
  std::cout << "selftest: " << checked << " sets checked, " << failures << " failures\n";
  return failures == 0 ? kExitOk : kExitInvariant;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Edge boundaries and central compression in the king graph on Z^n"};
  app.require_subcommand(1);
  Args args;

  auto add_input = [&](CLI::App* sub) {
    sub->add_option("--input", args.input, "Set file path, or - for stdin")->capture_default_str();
    sub->add_option("--dim", args.dim, "Dimension for input without points or a dim line")
        ->check(CLI::PositiveNumber);
  };
  auto add_format = [&](CLI::App* sub) {
    sub->add_option("--format", args.format, "Output format")
        ->check(CLI::IsMember({"json", "plain"}))
        ->capture_default_str();
  };
  auto add_search = [&](CLI::App* sub) {
    sub->add_option("--dim", args.dim, "Dimension n")->required()->check(CLI::PositiveNumber);
    sub->add_option("--size", args.size, "Set size k (largest k for survey)")
        ->required()
        ->check(CLI::PositiveNumber);
    sub->add_option("--seed", args.seed, "Seed for heuristic mode")->capture_default_str();
    sub->add_flag("--exhaustive,!--heuristic", [&](std::int64_t v) { args.heuristic = v < 0; },
                  "Exhaustive compressed-space scan (default) or heuristic search");
    sub->add_option("--max-sets", args.max_sets,
                    std::string("Enumeration cap (default from ") + kMaxSetsEnv + ")")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    add_format(sub);
  };

  auto* boundary = app.add_subcommand("boundary", "Edge boundary by direct count and by formula");
  add_input(boundary);
  add_format(boundary);

  auto* compress = app.add_subcommand("compress", "Iterated central compression with trace");
  add_input(compress);
  add_format(compress);

  auto* search = app.add_subcommand("search", "Minimal edge boundary for (dim, size)");
  add_search(search);

  auto* survey = app.add_subcommand("survey", "Gap-freeness of optima for sizes 1..size");
  add_search(survey);

  auto* render = app.add_subcommand("render", "Draw a planar set and its neighbors");
  add_input(render);
  render->add_option("--render", args.render, "Picture format")
      ->check(CLI::IsMember({"ascii", "svg"}))
      ->capture_default_str();

  auto* selftest = app.add_subcommand("selftest", "Cross-check both boundary computations");
  selftest->add_option("--seed", args.seed, "Base seed")->capture_default_str();
  selftest->add_option("--count", args.count, "Number of random sets")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*boundary) return run_boundary(args);
    if (*compress) return run_compress(args);
    if (*search) return run_search(args);
    if (*survey) return run_survey(args);
    if (*render) return run_render(args);
    if (*selftest) return run_selftest(args);
  } catch (const InvariantViolation& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return kExitInvariant;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}
