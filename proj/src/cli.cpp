#include "toric/cli.hpp"

#include <CLI11.hpp>

#include <charconv>
#include <optional>

#include "toric/cellular.hpp"
#include "toric/chow.hpp"
#include "toric/duality.hpp"
#include "toric/error.hpp"
#include "toric/io.hpp"

namespace toric {

namespace {

using nlohmann::json;

struct Options {
  std::string format = "table";
  bool plain = false;
  std::string file;
  std::optional<std::size_t> pivot;
  bool oracle = false;
  std::string pair;
  std::string rays;
  std::int64_t bound = 0;
  std::uint64_t seed = 0;
  std::optional<std::size_t> trials;
  unsigned threads = 0;
};

OutputFormat parse_format(const std::string& s) {
  if (s == "json") return OutputFormat::Json;
  if (s == "latex") return OutputFormat::Latex;
  return OutputFormat::Table;
}

std::size_t parse_count(std::string_view s, const std::string& what) {
  std::size_t value = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (ec != std::errc() || ptr != s.data() + s.size()) {
    throw Error(ErrorCode::InvalidArgument, "bad " + what + " '" + std::string(s) + "'");
  }
  return value;
}

// Loads the input and relabels/normalizes it at the chosen pivot (default n+1).
Normalized load(const Options& opt, std::istream& in) {
  const Fan fan = to_fan(parse_input(opt.file, opt.plain, in));
  return normalize(fan, opt.pivot.value_or(fan.size() - 1));
}

json rays_json(const Fan& f) {
  json rays = json::array();
  for (const auto& r : f.rays()) rays.push_back(to_json(r));
  return rays;
}

std::string rays_table(const Fan& f) {
  std::string out;
  for (std::size_t i = 1; i <= f.size(); ++i) {
    out += "  " + std::to_string(i) + ": " + to_string(f.ray(static_cast<long>(i))) + "\n";
  }
  return out;
}

std::string form_string(const LinearForm& form) {
  std::string out;
  for (std::size_t k = 0; k < form.size(); ++k) {
    if (sgn(form[k]) == 0) continue;
    std::string coeff = to_string(abs(form[k]));
    std::string term = (coeff == "1" ? "" : coeff + "*") + "x" + std::to_string(k + 1);
    if (out.empty()) {
      out = (sgn(form[k]) < 0 ? "-" : "") + term;
    } else {
      out += (sgn(form[k]) < 0 ? " - " : " + ") + term;
    }
  }
  return out.empty() ? "0" : out;
}

LinearForm to_linear_form(const std::vector<Integer>& coeffs) {
  LinearForm form;
  for (const auto& c : coeffs) form.emplace_back(c);
  return form;
}

void emit_matrix(std::ostream& out, OutputFormat format, const std::string& key,
                 const RationalMatrix& m) {
  switch (format) {
    case OutputFormat::Json: out << json{{key, to_json(m)}}.dump() << '\n'; break;
    case OutputFormat::Latex: out << render_latex(m); break;
    case OutputFormat::Table: out << render_table(m); break;
  }
}

int cmd_validate(const Options& opt, std::istream& in, std::ostream& out, OutputFormat format) {
  const Fan fan = to_fan(parse_input(opt.file, opt.plain, in));
  json mults = json::array();
  json smooth = json::array();
  for (std::size_t i = 1; i <= fan.size(); ++i) {
    mults.push_back(multiplicity(fan, i).get_str());
    if (is_smooth_cone(fan, i)) smooth.push_back(i);
  }
  if (format == OutputFormat::Json) {
    out << json{{"valid", true},
                {"rays", rays_json(fan)},
                {"multiplicities", mults},
                {"smooth_cones", smooth}}
               .dump()
        << '\n';
    return kExitOk;
  }
  out << "valid complete fan with " << fan.size() << " rays\n" << rays_table(fan);
  out << "cone multiplicities:";
  for (const auto& m : mults) out << ' ' << m.get<std::string>();
  out << "\nsmooth vertex: " << (smooth.empty() ? "no" : "yes") << '\n';
  return kExitOk;
}

int cmd_normalize(const Options& opt, std::istream& in, std::ostream& out, OutputFormat format) {
  const Normalized norm = load(opt, in);
  const UnimodularMap& m = norm.map;
  if (format == OutputFormat::Json) {
    out << json{{"rays", rays_json(norm.fan)},
                {"map", {{integer_json(m.m11()), integer_json(m.m12())},
                         {integer_json(m.m21()), integer_json(m.m22())}}},
                {"shift", norm.shift}}
               .dump()
        << '\n';
    return kExitOk;
  }
  const RationalMatrix map_matrix{{Rational(m.m11()), Rational(m.m12())},
                                  {Rational(m.m21()), Rational(m.m22())}};
  if (format == OutputFormat::Latex) {
    out << render_latex(map_matrix);
    return kExitOk;
  }
  out << "normalized rays:\n" << rays_table(norm.fan);
  out << "map:\n" << render_table(map_matrix);
  out << "shift: " << norm.shift << '\n';
  return kExitOk;
}

int cmd_verify(const Options& opt, std::istream& in, std::ostream& out, std::ostream& err,
               OutputFormat format) {
  const Normalized norm = load(opt, in);
  const DualityReport report = verify_duality(norm.fan);
  const bool ok = report.identity_holds && (!opt.oracle || report.oracle_agrees);
  std::optional<RationalMatrix> inverse;
  if (opt.oracle) inverse = mat_inverse(report.m_cup);

  switch (format) {
    case OutputFormat::Json: {
      json doc{{"rays", rays_json(norm.fan)},
               {"m_int", to_json(report.m_int)},
               {"m_cup", to_json(report.m_cup)},
               {"product", to_json(report.product)},
               {"identity", report.identity_holds},
               {"oracle_agrees", report.oracle_agrees}};
      if (inverse) doc["m_cup_inverse"] = to_json(*inverse);
      out << doc.dump() << '\n';
      break;
    }
    case OutputFormat::Latex:
      out << "% M_int\n" << render_latex(report.m_int);
      out << "% M_cup\n" << render_latex(report.m_cup);
      out << "% M_int M_cup\n" << render_latex(report.product);
      break;
    case OutputFormat::Table:
      out << "M_int:\n" << render_table(report.m_int);
      out << "M_cup:\n" << render_table(report.m_cup);
      out << "M_int * M_cup:\n" << render_table(report.product);
      if (inverse) out << "inverse of M_cup:\n" << render_table(*inverse);
      out << "identity: " << (report.identity_holds ? "true" : "false") << '\n';
      out << "oracle agrees: " << (report.oracle_agrees ? "true" : "false") << '\n';
      break;
  }
  if (!ok) {
    err << "theorem violation for rays " << rays_json(norm.fan).dump() << '\n';
    return kExitTheorem;
  }
  return kExitOk;
}

int cmd_present(const Options& opt, std::istream& in, std::ostream& out, OutputFormat format) {
  const Normalized norm = load(opt, in);
  const ChowPresentation p = presentation(norm.fan);
  const auto [x_first, x_last] = express_dropped_divisors(norm.fan);
  const std::size_t n = norm.fan.n();
  if (format == OutputFormat::Json) {
    json a = json::array(), b = json::array(), pairs = json::array();
    for (const auto& c : p.a_form) a.push_back(c.get_str());
    for (const auto& c : p.b_form) b.push_back(c.get_str());
    for (const auto& [i, j] : p.nonadjacent_pairs) pairs.push_back({i, j});
    auto form_json = [](const LinearForm& f) {
      json row = json::array();
      for (const auto& q : f) row.push_back(to_string(q));
      return row;
    };
    out << json{{"rays", rays_json(norm.fan)},
                {"linear_forms", {a, b}},
                {"nonadjacent_pairs", pairs},
                {"dropped", {form_json(x_first), form_json(x_last)}}}
               .dump()
        << '\n';
    return kExitOk;
  }
  out << "generators x1..x" << norm.fan.size() << '\n';
  out << "linear relations:\n";
  out << "  " << form_string(to_linear_form(p.a_form)) << " = 0\n";
  out << "  " << form_string(to_linear_form(p.b_form)) << " = 0\n";
  out << "monomial relations:";
  if (p.nonadjacent_pairs.empty()) out << " (none)";
  for (const auto& [i, j] : p.nonadjacent_pairs) out << " x" << i << "*x" << j;
  out << '\n';
  out << "x" << n + 1 << " = " << form_string(x_first) << '\n';
  out << "x" << n + 2 << " = " << form_string(x_last) << '\n';
  return kExitOk;
}

int cmd_reduce(const Options& opt, std::istream& in, std::ostream& out, OutputFormat format) {
  const auto comma = opt.pair.find(',');
  if (comma == std::string::npos) {
    throw Error(ErrorCode::InvalidArgument, "--pair expects I,J");
  }
  const std::size_t i = parse_count(std::string_view(opt.pair).substr(0, comma), "index");
  const std::size_t j = parse_count(std::string_view(opt.pair).substr(comma + 1), "index");
  const Normalized norm = load(opt, in);
  RationalMatrix q(norm.fan.size(), norm.fan.size());
  if (i < 1 || i > norm.fan.size() || j < 1 || j > norm.fan.size()) {
    throw Error(ErrorCode::IndexOutOfRange, "--pair indices must lie in 1.." +
                                                std::to_string(norm.fan.size()));
  }
  q(i - 1, j - 1) = 1;
  const Rational value = reduce_quadratic(norm.fan, q);
  if (format == OutputFormat::Json) {
    out << json{{"pair", {i, j}}, {"value", to_string(value)}}.dump() << '\n';
  } else {
    out << "x" << i << "*x" << j << " = " << to_string(value) << " [V]\n";
  }
  return kExitOk;
}

int cmd_random(const Options& opt, std::ostream& out, std::ostream& err, OutputFormat format) {
  std::size_t min_rays, max_rays;
  if (const auto colon = opt.rays.find(':'); colon != std::string::npos) {
    min_rays = parse_count(std::string_view(opt.rays).substr(0, colon), "ray count");
    max_rays = parse_count(std::string_view(opt.rays).substr(colon + 1), "ray count");
  } else {
    min_rays = max_rays = parse_count(opt.rays, "ray count");
  }
  if (!opt.trials) {
    if (min_rays != max_rays) {
      throw Error(ErrorCode::InvalidArgument, "a ray count range needs --trials");
    }
    const Fan fan = random_complete_fan(min_rays, opt.bound, opt.seed);
    if (format == OutputFormat::Json) {
      out << to_json(FanDocument{fan.rays(), std::nullopt}).dump() << '\n';
    } else {
      out << rays_table(fan);
    }
    return kExitOk;
  }
  BatchOptions batch;
  batch.trials = *opt.trials;
  batch.min_rays = min_rays;
  batch.max_rays = max_rays;
  batch.coord_bound = opt.bound;
  batch.seed = opt.seed;
  batch.threads = opt.threads;
  const BatchSummary summary = batch_verify(batch);
  if (format == OutputFormat::Json) {
    json failures = json::array();
    for (const auto& f : summary.failures) {
      failures.push_back({{"trial", f.trial}, {"seed", f.seed}, {"rays", rays_json(f.report.fan)}});
    }
    out << json{{"trials", summary.trials},
                {"failures", failures},
                {"generation_failures", summary.generation_failures},
                {"elapsed_seconds", summary.elapsed.count()}}
               .dump()
        << '\n';
  } else {
    out << "trials: " << summary.trials << '\n';
    out << "failures: " << summary.failures.size() << '\n';
    out << "generation failures: " << summary.generation_failures << '\n';
    out << "elapsed: " << summary.elapsed.count() << " s\n";
  }
  for (const auto& f : summary.failures) {
    err << "theorem violation: trial " << f.trial << " seed " << f.seed << " rays "
        << rays_json(f.report.fan).dump() << '\n';
  }
  return summary.passed() ? kExitOk : kExitTheorem;
}

int exit_code_for(ErrorCode code) {
  switch (code) {
    case ErrorCode::InvalidArgument: return kExitUsage;
    case ErrorCode::InternalError: return kExitTheorem;
    default: return kExitInput;
  }
}

}  // namespace

int run_command(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
                std::ostream& err) {
  Options opt;
  CLI::App app{"Intersection and cellular cup product matrices of toric surfaces"};
  app.name(args.empty() ? "toricsurf" : args[0]);
  app.fallthrough();
  app.require_subcommand(1);
  app.add_option("--format", opt.format, "Output format")
      ->check(CLI::IsMember({"json", "table", "latex"}));
  app.add_flag("--plain", opt.plain, "Read whitespace-separated integers instead of JSON");

  auto file_command = [&](const std::string& name, const std::string& help) {
    CLI::App* sub = app.add_subcommand(name, help);
    sub->add_option("FILE", opt.file, "Fan or polygon document; - reads stdin")->required();
    return sub;
  };
  auto add_pivot = [&](CLI::App* sub) {
    sub->add_option("--pivot", opt.pivot, "Ray label moved to position n+1 (default n+1)");
  };

  CLI::App* validate = file_command("validate", "Check that the input defines a complete fan");
  CLI::App* normalize_cmd = file_command("normalize", "Relabel and change basis so ray n+1 is (1,0)");
  add_pivot(normalize_cmd);
  CLI::App* int_cmd = file_command("int", "Intersection product matrix");
  add_pivot(int_cmd);
  CLI::App* cup = file_command("cup", "Cellular cup product matrix");
  add_pivot(cup);
  CLI::App* verify = file_command("verify", "Check M_int * M_cup = I exactly");
  add_pivot(verify);
  verify->add_flag("--oracle", opt.oracle, "Also print and require the inverse of M_cup");
  CLI::App* present = file_command("present", "Quotient ring presentation of the Chow ring");
  add_pivot(present);
  CLI::App* reduce = file_command("reduce", "Degree of x_I * x_J in multiples of [V]");
  add_pivot(reduce);
  reduce->add_option("--pair", opt.pair, "Ray labels I,J")->required();
  CLI::App* random = app.add_subcommand("random", "Random complete fans and batch verification");
  random->add_option("--rays", opt.rays, "Ray count N, or MIN:MAX with --trials")->required();
  random->add_option("--bound", opt.bound, "Coordinate bound")->required();
  random->add_option("--seed", opt.seed, "Seed")->required();
  random->add_option("--trials", opt.trials, "Run batch verification over this many fans");
  random->add_option("--threads", opt.threads, "Worker threads for --trials (0 = all cores)");

  std::vector<const char*> argv;
  argv.reserve(args.size() + 1);
  if (args.empty()) argv.push_back("toricsurf");
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  const OutputFormat format = parse_format(opt.format);
  try {
    if (validate->parsed()) return cmd_validate(opt, in, out, format);
    if (normalize_cmd->parsed()) return cmd_normalize(opt, in, out, format);
    if (int_cmd->parsed()) {
      emit_matrix(out, format, "m_int", intersection_matrix(load(opt, in).fan));
      return kExitOk;
    }
    if (cup->parsed()) {
      emit_matrix(out, format, "m_cup", cup_matrix(load(opt, in).fan));
      return kExitOk;
    }
    if (verify->parsed()) return cmd_verify(opt, in, out, err, format);
    if (present->parsed()) return cmd_present(opt, in, out, format);
    if (reduce->parsed()) return cmd_reduce(opt, in, out, format);
    if (random->parsed()) return cmd_random(opt, out, err, format);
  } catch (const Error& e) {
    err << "error [" << error_code_name(e.code()) << "]: " << e.what() << '\n';
    return exit_code_for(e.code());
  }
  return kExitUsage;
}

}  // namespace toric
