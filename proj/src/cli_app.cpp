#include "solvcert/cli_app.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <fstream>
#include <ostream>
#include <sstream>

#include "solvcert/catalog.hpp"
#include "solvcert/errors.hpp"
#include "solvcert/io_json.hpp"
#include "solvcert/selftest.hpp"
#include "solvcert/version.hpp"

namespace solvcert {

namespace {

constexpr int kExitOk = 0;
constexpr int kExitNegative = 1;
constexpr int kExitInvalid = 2;
constexpr int kExitUnsupported = 3;

struct Options {
  bool json = false;
  std::uint64_t seed = 20240101;
  bool seed_given = false;
  double tol = -1.0;  // negative: per-command default
  double tol_or(double fallback) const { return tol < 0 ? fallback : tol; }
};

struct Outcome {
  int exit_code = kExitOk;
  json result;               // machine payload
  std::vector<std::string> lines;  // human payload
};

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError(path, "cannot open file");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

json parse_json_text(const std::string& text, const std::string& where) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(where, e.what());
  }
}

struct LoadedFile {
  std::string path;
  std::string digest;
  json body;
};

LoadedFile load_file(const std::string& path) {
  std::string text = slurp(path);
  return {path, content_digest(text), parse_json_text(text, path)};
}

std::string vec_str(const RatVec& v) { return str(v); }

// ---- subcommand bodies ----------------------------------------------------

Outcome do_validate(const LoadedFile& file) {
  LieAlgebra g = algebra_from_json(file.body);
  Outcome o;
  o.result = {{"valid", true},
              {"dim", g.dim()},
              {"basis", g.basis_names()},
              {"solvable", g.is_solvable()},
              {"nilpotent", g.is_nilpotent()}};
  o.lines.push_back("valid Lie algebra, dim " + std::to_string(g.dim()));
  o.lines.push_back(std::string("solvable: ") +
                    (g.is_solvable() ? "yes" : "no") + ", nilpotent: " +
                    (g.is_nilpotent() ? "yes" : "no"));
  return o;
}

Outcome do_classify(const LoadedFile& file, const Options& opt) {
  LieAlgebra g = algebra_from_json(file.body);
  SolvabilityVerdict v = is_completely_solvable(g);
  Outcome o;
  o.result = {{"verdict", verdict_to_json(v)},
              {"solvable", g.is_solvable()},
              {"nilpotent", g.is_nilpotent()}};
  if (v.kind != SolvKind::NotSolvable)
    o.result["weight_report"] = weight_report_to_json(weight_report(g));
  if (opt.seed_given && v.kind != SolvKind::NotSolvable) {
    SampledCheck sc = sampled_eigenvalue_check(g, 200, opt.seed);
    json sj = {{"samples", sc.samples},
               {"seed", sc.seed},
               {"all_real_rooted", sc.all_real_rooted}};
    if (sc.witness) sj["witness"] = vec_str(*sc.witness);
    o.result["sampled_check"] = sj;
  }
  o.lines.push_back("verdict: " + to_string(v.kind));
  if (v.witness)
    o.lines.push_back("witness: basis element '" + v.witness->basis_name +
                      "', non-real factor " + v.witness->factor.str());
  o.exit_code = v.completely_solvable() ? kExitOk : kExitNegative;
  return o;
}

Outcome do_flag(const LoadedFile& file, bool numeric, const Options& opt) {
  LieAlgebra g = algebra_from_json(file.body);
  Flag f = complete_flag(g, numeric ? FlagMode::Numeric : FlagMode::Exact,
                         opt.tol_or(1e-8));
  Outcome o;
  o.result = {{"flag", flag_to_json(f)}};
  if (f.mode == FlagMode::Exact) {
    o.lines.push_back("exact complete flag, dims 0.." + std::to_string(g.dim()));
  } else {
    o.lines.push_back("numeric complete flag, max ideal residual " +
                      std::to_string(f.max_residual));
  }
  return o;
}

Outcome do_embed(const LoadedFile& file) {
  LieAlgebra g = algebra_from_json(file.body);
  Representation rep = faithful_triangular_rep(g);
  Outcome o;
  o.result = {{"representation", representation_to_json(rep)}};
  o.lines.push_back("tier " + to_string(rep.tier) + ", target dimension " +
                    std::to_string(rep.target_dim));
  o.lines.push_back(std::string("faithful: ") +
                    (rep.is_faithful ? "yes" : "no") + ", triangular: " +
                    (rep.is_triangular ? "yes" : "no"));
  return o;
}

Outcome do_exp(const LoadedFile& file, const std::string& matrix_arg,
               bool numeric) {
  algebra_from_json(file.body);  // context file must itself be valid
  RatMatrix m = matrix_from_json(parse_json_text(matrix_arg, "--matrix"),
                                 "--matrix");
  Outcome o;
  if (numeric) {
    Eigen::MatrixXd e = exp_triangular_numeric(to_double(m));
    o.result = {{"mode", "numeric"}, {"exp", matrix_to_json(e)}};
    o.lines.push_back("numeric exponential computed");
  } else {
    ExpMatrix e = exp_triangular_exact(m);
    o.result = {{"mode", "exact"}, {"exp", exp_matrix_to_json(e)}};
    o.lines.push_back("exact exponential computed; entries are (coefficient, exponent) term lists");
  }
  return o;
}

Outcome do_log(const LoadedFile& file, const std::string& matrix_arg,
               const Options& opt) {
  algebra_from_json(file.body);
  RatMatrix t = matrix_from_json(parse_json_text(matrix_arg, "--matrix"),
                                 "--matrix");
  Eigen::MatrixXd x = log_triangular_positive(to_double(t), opt.tol_or(1e-9));
  Outcome o;
  o.result = {{"log", matrix_to_json(x)}, {"tolerance", opt.tol_or(1e-9)}};
  o.lines.push_back("triangular logarithm computed");
  return o;
}

Outcome do_group_classify(const LoadedFile& file) {
  GroupPresentation p = presentation_from_json(file.body);
  DefinabilityVerdict v = classify_group(p);
  Outcome o;
  o.result = {{"verdict", definability_to_json(v)}};
  o.lines.push_back("verdict: " + to_string(v.kind));
  if (v.solvability.witness)
    o.lines.push_back("witness: basis element '" +
                      v.solvability.witness->basis_name + "', factor " +
                      v.solvability.witness->factor.str());
  o.exit_code = v.kind == DefKind::Definable ? kExitOk : kExitNegative;
  return o;
}

Outcome do_catalog(const std::string& name) {
  Outcome o;
  if (name.empty()) {
    json list = json::array();
    for (const CatalogEntry& e : catalog()) {
      list.push_back({{"name", e.name}, {"description", e.description}});
      o.lines.push_back(e.name + "  -  " + e.description);
    }
    o.result = {{"entries", list}};
    return o;
  }
  const CatalogEntry* e = catalog_lookup(name);
  if (!e) throw InvalidInput("unknown catalog entry '" + name + "'");
  o.result = {{"entry", catalog_entry_to_json(*e)}};
  o.lines.push_back(e->name + ": " + e->description);
  o.lines.push_back("provenance: " + e->provenance);
  return o;
}

Outcome do_selftest(const Options& opt) {
  auto results = run_selftest(opt.seed);
  Outcome o;
  json suites = json::array();
  for (const SelftestResult& r : results) {
    suites.push_back(
        {{"suite", r.suite}, {"passed", r.passed}, {"detail", r.detail}});
    o.lines.push_back((r.passed ? "PASS " : "FAIL ") + r.suite + " (" +
                      r.detail + ")");
  }
  o.result = {{"seed", opt.seed}, {"suites", suites}};
  if (!all_passed(results)) o.exit_code = kExitNegative;
  return o;
}

void emit(const Outcome& o, const std::string& command, const Options& opt,
          const LoadedFile* file, double ms, std::ostream& out) {
  if (opt.json) {
    json report = {{"tool", kToolName},
                   {"version", kToolVersion},
                   {"command", command},
                   {"timing_ms", ms},
                   {"exit_code", o.exit_code},
                   {"result", o.result}};
    if (file)
      report["input"] = {{"path", file->path}, {"digest", file->digest}};
    if (opt.seed_given) report["seed"] = opt.seed;
    if (opt.tol >= 0) report["tolerance"] = opt.tol;
    out << report.dump(2) << "\n";
  } else {
    for (const std::string& line : o.lines) out << line << "\n";
  }
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err) {
  CLI::App app{std::string(kToolName) +
               " - exact solvability and o-minimal definability certificates "
               "for Lie algebras"};
  app.set_version_flag("--version", std::string(kToolVersion));
  app.require_subcommand(1);
  // global flags may appear before or after the subcommand
  app.fallthrough();

  Options opt;
  app.add_flag("--json", opt.json, "machine-readable report on stdout");
  auto* seed_opt =
      app.add_option("--seed", opt.seed, "seed for randomized checks");
  app.add_option("--tol", opt.tol,
                 "tolerance for numeric modes (default 1e-8 for flags, 1e-9 "
                 "for log)");

  std::string file_arg, matrix_arg, catalog_name;
  bool numeric = false, exact = false;

  CLI::App* validate = app.add_subcommand("validate", "check an algebra file");
  validate->add_option("file", file_arg, "algebra JSON file")->required();

  CLI::App* classify =
      app.add_subcommand("classify", "solvability and complete solvability");
  classify->add_option("file", file_arg, "algebra JSON file")->required();

  CLI::App* flag_cmd = app.add_subcommand("flag", "complete flag of ideals");
  flag_cmd->add_option("file", file_arg, "algebra JSON file")->required();
  flag_cmd->add_flag("--numeric", numeric, "certified floating-point mode");

  CLI::App* embed =
      app.add_subcommand("embed", "faithful triangular representation");
  embed->add_option("file", file_arg, "algebra JSON file")->required();

  CLI::App* exp_cmd =
      app.add_subcommand("exp", "exponential of an upper triangular matrix");
  exp_cmd->add_option("file", file_arg, "algebra JSON context file")->required();
  exp_cmd->add_option("--matrix", matrix_arg, "matrix as JSON rows of rationals")
      ->required();
  exp_cmd->add_flag("--exact", exact, "exact exponential-number output (default)");
  exp_cmd->add_flag("--numeric", numeric, "floating-point output");

  CLI::App* log_cmd =
      app.add_subcommand("log", "logarithm of a positive triangular matrix");
  log_cmd->add_option("file", file_arg, "algebra JSON context file")->required();
  log_cmd->add_option("--matrix", matrix_arg, "matrix as JSON rows of rationals")
      ->required();

  CLI::App* group =
      app.add_subcommand("group-classify", "definability of a presentation");
  group->add_option("file", file_arg, "presentation JSON file")->required();

  CLI::App* cat = app.add_subcommand("catalog", "built-in examples");
  cat->add_option("name", catalog_name, "entry name (optional)");

  CLI::App* selftest = app.add_subcommand("selftest", "run invariant suites");
  (void)selftest;

  std::vector<char*> argv;
  std::string prog = kToolName;
  argv.push_back(prog.data());
  std::vector<std::string> storage = args;
  for (std::string& a : storage) argv.push_back(a.data());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForVersion&) {
    out << kToolVersion << "\n";
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitInvalid;
  }
  opt.seed_given = seed_opt->count() > 0;

  auto started = std::chrono::steady_clock::now();
  std::string command;
  LoadedFile file;
  bool has_file = false;
  try {
    Outcome o;
    if (validate->parsed()) {
      command = "validate";
      file = load_file(file_arg);
      has_file = true;
      o = do_validate(file);
    } else if (classify->parsed()) {
      command = "classify";
      file = load_file(file_arg);
      has_file = true;
      o = do_classify(file, opt);
    } else if (flag_cmd->parsed()) {
      command = "flag";
      file = load_file(file_arg);
      has_file = true;
      o = do_flag(file, numeric, opt);
    } else if (embed->parsed()) {
      command = "embed";
      file = load_file(file_arg);
      has_file = true;
      o = do_embed(file);
    } else if (exp_cmd->parsed()) {
      command = "exp";
      if (exact && numeric)
        throw InvalidInput("choose at most one of --exact / --numeric");
      file = load_file(file_arg);
      has_file = true;
      o = do_exp(file, matrix_arg, numeric);
    } else if (log_cmd->parsed()) {
      command = "log";
      file = load_file(file_arg);
      has_file = true;
      o = do_log(file, matrix_arg, opt);
    } else if (group->parsed()) {
      command = "group-classify";
      file = load_file(file_arg);
      has_file = true;
      o = do_group_classify(file);
    } else if (cat->parsed()) {
      command = "catalog";
      o = do_catalog(catalog_name);
    } else {
      command = "selftest";
      o = do_selftest(opt);
    }
    double ms = std::chrono::duration<double, std::milli>(
                    std::chrono::steady_clock::now() - started)
                    .count();
    emit(o, command, opt, has_file ? &file : nullptr, ms, out);
    return o.exit_code;
  } catch (const Error& e) {
    int code = kExitInvalid;
    std::string kind = "invalid-input";
    json detail = {{"message", e.what()}};
    if (auto* irr = dynamic_cast<const NeedsIrrationalEigenvalue*>(&e)) {
      code = kExitUnsupported;
      kind = "unsupported-case";
      detail["blocking_polynomial"] = irr->poly_coeffs;
    } else if (dynamic_cast<const UnsupportedAdoCase*>(&e) ||
               dynamic_cast<const SizeError*>(&e)) {
      code = kExitUnsupported;
      kind = "unsupported-case";
    } else if (dynamic_cast<const NotCompletelySolvable*>(&e)) {
      code = kExitNegative;
      kind = "negative-verdict";
    }
    if (opt.json) {
      detail["kind"] = kind;
      json report = {{"tool", kToolName},
                     {"version", kToolVersion},
                     {"command", command},
                     {"exit_code", code},
                     {"error", detail}};
      if (has_file)
        report["input"] = {{"path", file.path}, {"digest", file.digest}};
      out << report.dump(2) << "\n";
    }
    err << "error: " << e.what() << "\n";
    return code;
  }
}

}  // namespace solvcert
