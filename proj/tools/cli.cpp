#include "anglespread/cli.hpp"

#include <CLI11.hpp>

#include <charconv>
#include <cstdio>
#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>
#include <string_view>
#include <vector>

#include "anglespread/error.hpp"
#include "anglespread/oracle.hpp"
#include "anglespread/reduction.hpp"
#include "anglespread/spread.hpp"
#include "anglespread/targets.hpp"

namespace anglespread::cli {

namespace {

using nlohmann::json;

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::string format_double(double value) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.17g", value);
  return buf;
}

void write_value(std::string& out, const json& value) {
  switch (value.type()) {
    case json::value_t::object: {
      out += '{';
      bool first = true;
      for (const auto& [key, item] : value.items()) {
        if (!first) out += ',';
        first = false;
        out += json(key).dump();
        out += ':';
        write_value(out, item);
      }
      out += '}';
      break;
    }
    case json::value_t::array: {
      out += '[';
      for (std::size_t i = 0; i < value.size(); ++i) {
        if (i != 0) out += ',';
        write_value(out, value[i]);
      }
      out += ']';
      break;
    }
    case json::value_t::number_float:
      out += format_double(value.get<double>());
      break;
    default:
      out += value.dump();
  }
}

std::vector<double> parse_csv_doubles(const std::string& text) {
  std::vector<double> values;
  std::string_view rest(text);
  while (true) {
    const auto comma = rest.find(',');
    std::string_view field = rest.substr(0, comma);
    while (!field.empty() && field.front() == ' ') field.remove_prefix(1);
    while (!field.empty() && field.back() == ' ') field.remove_suffix(1);
    double v = 0.0;
    const auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), v);
    if (field.empty() || ec != std::errc{} || ptr != field.data() + field.size()) {
      throw UsageError("cannot parse '" + std::string(field) + "' as a number in --p");
    }
    values.push_back(v);
    if (comma == std::string_view::npos) break;
    rest.remove_prefix(comma + 1);
  }
  return values;
}

std::vector<double> read_input_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot open input file '" + path + "'");
  json doc;
  try {
    doc = json::parse(in);
  } catch (const json::parse_error& e) {
    throw UsageError("input file is not a valid document: " + std::string(e.what()));
  }
  if (!doc.is_object() || !doc.contains("p") || !doc["p"].is_array()) {
    throw UsageError("input document must contain an array field \"p\"");
  }
  std::vector<double> p;
  for (const auto& item : doc["p"]) {
    if (!item.is_number()) throw UsageError("field \"p\" must contain only numbers");
    p.push_back(item.get<double>());
  }
  return p;
}

// --p or --input, exactly one.
struct PointSource {
  std::string csv;
  std::string file;

  void attach(CLI::App& cmd) {
    auto* p_opt = cmd.add_option("--p", csv, "comma-separated probabilities");
    auto* in_opt = cmd.add_option("--input", file, "document with an array field \"p\"");
    p_opt->excludes(in_opt);
  }

  SimplexPoint load() const {
    if (csv.empty() && file.empty()) throw UsageError("one of --p or --input is required");
    const std::vector<double> raw = csv.empty() ? read_input_file(file) : parse_csv_doubles(csv);
    return make_simplex_point(raw);
  }
};

json to_json(const SimplexPoint& p) { return json(std::vector<double>(p.coords().begin(), p.coords().end())); }

json to_json(const SegmentExtension& ext) {
  return json{
      {"a", to_json(ext.a)},
      {"b", to_json(ext.b)},
      {"lambda_minus", ext.lambda_minus},
      {"lambda_plus", ext.lambda_plus},
      {"idx_min", ext.idx_min},
      {"idx_max", ext.idx_max},
  };
}

json to_json(const OracleReport& r) {
  return json{
      {"best_cosine", r.best_cosine},
      {"best_point", to_json(r.best_point)},
      {"points_evaluated", r.points_evaluated},
      {"closed_form_bound", r.closed_form_bound},
      {"gap", r.gap},
  };
}

std::string_view side_name(ChordSide side) { return side == ChordSide::TowardA ? "a" : "b"; }

void emit(std::ostream& out, const json& doc) { out << to_structured_text(doc) << '\n'; }

void emit_q_curve(std::ostream& out, int n, int points) {
  if (n < 3) throw Error(ErrorKind::BadDimension, "q-curve requires n >= 3");
  check_q_endpoint_denominators(n);
  const double lo = 1.0 / (n - 1);
  const double hi = 1.0;
  out << "# y\tQ\tQprime\n";
  for (int i = 0; i < points; ++i) {
    const double y = i == points - 1 ? hi : lo + (hi - lo) * i / (points - 1);
    const QEval q = q_eval(n, y);
    out << format_double(q.y) << '\t' << format_double(q.q_value) << '\t' << format_double(q.q_prime) << '\n';
  }
}

int exit_code_for(ErrorKind kind) { return kind == ErrorKind::TooLarge ? kExitGuard : kExitDomain; }

}  // namespace

std::string to_structured_text(const json& doc) {
  std::string out;
  write_value(out, doc);
  return out;
}

int run(std::span<const std::string> args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Angle spread of the probability simplex with respect to the uniform distribution"};
  app.name(args.empty() ? "anglespread" : args.front());
  app.require_subcommand(1, 1);

  PointSource extend_src;
  auto* extend_cmd = app.add_subcommand("extend", "maximal chord through u and p");
  extend_src.attach(*extend_cmd);

  PointSource spread_src;
  auto* spread_cmd = app.add_subcommand("spread", "spread cosine and angle of p");
  spread_src.attach(*spread_cmd);

  int bound_n = 0;
  bool allow_n2 = false;
  auto* bound_cmd = app.add_subcommand("bound", "closed-form minimal angle spread");
  bound_cmd->add_option("--n", bound_n, "dimension")->required();
  bound_cmd->add_flag("--allow-n2", allow_n2, "accept n = 2 (angle pi/2)");

  int optimal_n = 0;
  auto* optimal_cmd = app.add_subcommand("optimal", "optimal pair a*, b* and p*");
  optimal_cmd->add_option("--n", optimal_n, "dimension")->required();

  GridSpec grid{3, 3};
  unsigned grid_threads = 1;
  auto* grid_cmd = app.add_subcommand("grid-verify", "lattice brute-force maximization");
  grid_cmd->add_option("--n", grid.n, "dimension")->required();
  grid_cmd->add_option("--k", grid.k, "lattice resolution")->required();
  grid_cmd->add_option("--exclude-eps", grid.exclude_uniform_eps, "skip radius around u")->capture_default_str();
  grid_cmd->add_option("--threads", grid_threads, "worker threads (0 = all cores)")->capture_default_str();

  int random_n = 0;
  std::uint64_t samples = 0;
  std::uint64_t seed = 0;
  unsigned random_threads = 1;
  auto* random_cmd = app.add_subcommand("random-verify", "uniform random-sampling maximization");
  random_cmd->add_option("--n", random_n, "dimension")->required();
  random_cmd->add_option("--samples", samples, "number of samples")->required();
  random_cmd->add_option("--seed", seed, "generator seed")->required();
  random_cmd->add_option("--threads", random_threads, "worker threads (0 = all cores)")->capture_default_str();

  int curve_n = 0;
  int curve_points = 0;
  auto* curve_cmd = app.add_subcommand("q-curve", "tabulate Q(y) and Q'(y) on [1/(n-1), 1]");
  curve_cmd->add_option("--n", curve_n, "dimension")->required();
  curve_cmd->add_option("--points", curve_points, "number of rows")->required()->check(CLI::Range(2, 100'000'000));

  PointSource targets_src;
  double tol = kDefaultTargetTol;
  auto* targets_cmd = app.add_subcommand("targets", "half-angle targets q and v");
  targets_src.attach(*targets_cmd);
  targets_cmd->add_option("--tol", tol, "angle tolerance in radians")->capture_default_str();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    if (!reversed.empty()) reversed.pop_back();
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << '\n';
    return kExitUsage;
  }

  try {
    if (extend_cmd->parsed()) {
      const SimplexPoint p = extend_src.load();
      json doc = to_json(extend_segment(p));
      doc["n"] = p.dim();
      doc["p"] = to_json(p);
      emit(out, doc);
    } else if (spread_cmd->parsed()) {
      const SimplexPoint p = spread_src.load();
      const SpreadResult r = cos_spread(p);
      emit(out, json{{"n", p.dim()},
                     {"p", to_json(p)},
                     {"cosine", r.cosine},
                     {"angle_radians", r.angle_radians},
                     {"extension", to_json(r.extension)}});
    } else if (bound_cmd->parsed()) {
      const AngleBound b = min_angle_bound(bound_n, allow_n2);
      emit(out, json{{"n", bound_n}, {"cosine", b.cosine}, {"angle_radians", b.angle_radians}});
    } else if (optimal_cmd->parsed()) {
      const OptimalPair pair = optimal_pair(optimal_n);
      emit(out, json{{"n", optimal_n},
                     {"a_star", to_json(pair.a_star)},
                     {"b_star", to_json(pair.b_star)},
                     {"p_star", to_json(pair.p_star)}});
    } else if (grid_cmd->parsed()) {
      json doc = to_json(grid_maximize(grid, grid_threads));
      doc["n"] = grid.n;
      doc["k"] = grid.k;
      doc["exclude_uniform_eps"] = grid.exclude_uniform_eps;
      emit(out, doc);
    } else if (random_cmd->parsed()) {
      json doc = to_json(random_maximize(random_n, samples, seed, random_threads));
      doc["n"] = random_n;
      doc["samples"] = samples;
      doc["seed"] = seed;
      emit(out, doc);
    } else if (curve_cmd->parsed()) {
      emit_q_curve(out, curve_n, curve_points);
    } else if (targets_cmd->parsed()) {
      const SimplexPoint p = targets_src.load();
      const HalfAngleTargets t = half_angle_targets(p, tol);
      emit(out, json{{"p", to_json(p)},
                     {"q", to_json(t.q)},
                     {"v", to_json(t.v)},
                     {"alpha_n", t.alpha_n},
                     {"achieved_angle_pq", t.achieved_angle_pq},
                     {"achieved_angle_uv", t.achieved_angle_uv},
                     {"tolerance", t.tolerance},
                     {"q_side", side_name(t.q_side)},
                     {"v_side", side_name(t.v_side)},
                     {"q_at_chord_end", t.q_at_chord_end},
                     {"v_at_chord_end", t.v_at_chord_end}});
    }
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return exit_code_for(e.kind());
  }
  return kExitOk;
}

}  // namespace anglespread::cli
