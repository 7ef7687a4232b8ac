#include "napp/cli.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "napp/io.hpp"

namespace napp {

namespace {

std::string read_stream(std::istream& in) {
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::string read_text(const std::string& arg) {
  if (arg == "-") return read_stream(std::cin);
  return arg;
}

Json read_json_file(const std::string& path) {
  if (path == "-") return Json::parse(read_stream(std::cin));
  std::ifstream in(path);
  if (!in) throw error("cannot open file '" + path + "'");
  try {
    return Json::parse(read_stream(in));
  } catch (const nlohmann::json::parse_error& e) {
    throw error("invalid JSON in '" + path + "': " + e.what());
  }
}

struct Common {
  std::string field = "Q";
  int dim = 0;  // 0 = infer from the polynomial text
  int n = 0;
  std::string format = "text";
  std::uint64_t seed = 0;
  std::uint64_t budget_override = 0;
  bool verify = false;

  Budget budget() const {
    Budget b;
    if (budget_override != 0) {
      b.table_points = budget_override;
      b.exhaustive_points = budget_override;
    }
    return b;
  }
  bool json() const { return format == "json"; }
};

void add_common(CLI::App* cmd, Common& c, bool with_n) {
  cmd->add_option("--field", c.field, "field spec: p^e or Q");
  cmd->add_option("--dim", c.dim, "ambient dimension d (inferred from the input if omitted)");
  if (with_n) cmd->add_option("--n", c.n, "arity n")->required();
  cmd->add_option("--format", c.format, "output format")
      ->check(CLI::IsMember({"text", "json"}));
  cmd->add_option("--seed", c.seed, "sampling seed (recorded in JSON output)");
  cmd->add_option("--budget", c.budget_override,
                  "override the enumeration budgets (points)");
  cmd->add_flag("--verify", c.verify, "run the independent oracle as well");
}

SparsePolynomial parse_input_poly(const std::string& text, const FieldSpec& spec,
                                  int& dim) {
  std::string body = read_text(text);
  if (dim == 0) dim = max_variable_index(body);
  return parse_poly(body, spec, dim);
}

Json invocation_json(const std::string& subcommand, const Common& c,
                     const std::string& input) {
  Json j;
  j["subcommand"] = subcommand;
  j["field"] = c.field;
  j["dim"] = c.dim;
  if (c.n != 0) j["n"] = c.n;
  j["seed"] = c.seed;
  if (c.budget_override) j["budget"] = c.budget_override;
  j["input"] = input;
  return j;
}

void emit(std::ostream& out, const Json& j) { out << j.dump(2) << "\n"; }

int cmd_polarize(const Common& c, const std::string& poly_arg,
                 const std::string& table_path, const std::string& tuples_path,
                 std::ostream& out) {
  const FieldSpec& spec = FieldSpec::parse(c.field);
  int dim = c.dim;
  if (!table_path.empty()) {
    if (dim == 0) throw error("--dim is required with --table");
    FunctionTable table = table_from_json(read_json_file(table_path), spec, dim);
    Json result;
    if (!tuples_path.empty()) {
      Json tuples_json = read_json_file(tuples_path);
      std::vector<std::vector<Point>> tuples;
      for (const Json& tj : tuples_json) {
        std::vector<Point> tuple;
        for (const Json& pj : tj) tuple.push_back(point_from_json(pj, spec, dim));
        tuples.push_back(std::move(tuple));
      }
      auto values = defect_on_tuples(table, c.n, tuples);
      result = Json::array();
      for (std::size_t i = 0; i < tuples.size(); ++i) {
        Json entry;
        Json args = Json::array();
        for (const Point& p : tuples[i]) args.push_back(point_to_json(p));
        entry["args"] = std::move(args);
        entry["value"] = element_to_json(values[i]);
        result.push_back(std::move(entry));
      }
    } else {
      result = defect_table_to_json(defect_table(table, c.n, c.budget().table_points));
    }
    Json j;
    j["invocation"] = invocation_json("polarize", c, table_path);
    j["defect"] = std::move(result);
    if (c.json()) emit(out, j);
    else out << j["defect"].dump(2) << "\n";
    return 0;
  }
  SparsePolynomial f = parse_input_poly(poly_arg, spec, dim);
  FormalDefect defect = formal_defect(f, c.n);
  if (c.json()) {
    Json j;
    Common cc = c;
    cc.dim = dim;
    j["invocation"] = invocation_json("polarize", cc, f.str());
    j["n"] = defect.n;
    j["base_dim"] = defect.base_dim;
    j["variables"] = "x{i}_{j} denotes coordinate j of block i, flat index x{(i-1)*d+j}";
    j["polynomial"] = defect.str();
    j["polynomial_flat"] = defect.poly.str();
    j["zero"] = defect.is_zero();
    emit(out, j);
  } else {
    out << defect.str() << "\n";
  }
  return 0;
}

int cmd_combdeg(const Common& c, const std::string& poly_arg, std::ostream& out) {
  const FieldSpec& spec = FieldSpec::parse(c.field);
  int dim = c.dim;
  SparsePolynomial f = parse_input_poly(poly_arg, spec, dim);
  const std::int64_t formula = comb_degree(f);
  std::int64_t oracle = 0;
  if (c.verify) oracle = comb_degree_oracle(f);
  if (c.json()) {
    Json j;
    Common cc = c;
    cc.dim = dim;
    j["invocation"] = invocation_json("combdeg", cc, f.str());
    j["comb_degree"] = formula;
    if (c.verify) {
      j["oracle"] = oracle;
      j["agree"] = oracle == formula;
    }
    emit(out, j);
  } else {
    out << formula << "\n";
    if (c.verify)
      out << "oracle " << oracle << (oracle == formula ? " (agrees)" : " (MISMATCH)") << "\n";
  }
  if (c.verify && oracle != formula) throw error("formula and oracle disagree");
  return 0;
}

int cmd_reduce(const Common& c, const std::string& poly_arg, std::ostream& out) {
  const FieldSpec& spec = FieldSpec::parse(c.field);
  int dim = c.dim;
  SparsePolynomial f = parse_input_poly(poly_arg, spec, dim);
  SparsePolynomial r = reduce(f);
  if (c.json()) {
    Json j;
    Common cc = c;
    cc.dim = dim;
    j["invocation"] = invocation_json("reduce", cc, f.str());
    j["polynomial"] = r.str();
    emit(out, j);
  } else {
    out << r.str() << "\n";
  }
  return 0;
}

int cmd_realize(const Common& c, const std::string& form_path, std::ostream& out) {
  SymmetricForm phi = form_from_json(read_json_file(form_path));
  auto check = is_characteristic(phi, c.budget().exhaustive_points);
  if (!check.ok)
    throw error("form is not characteristic: " + check.witness->describe());
  SparsePolynomial alpha = realize(phi);
  if (c.json()) {
    Json j;
    j["invocation"] = invocation_json("realize", c, form_path);
    j["field"] = phi.field().name();
    j["dim"] = phi.dim();
    j["n"] = phi.arity();
    j["polynomial"] = alpha.str();
    emit(out, j);
  } else {
    out << alpha.str() << "\n";
  }
  return 0;
}

int cmd_classify(const Common& c, const std::string& poly_arg, std::ostream& out) {
  const FieldSpec& spec = FieldSpec::parse(c.field);
  int dim = c.dim;
  SparsePolynomial f = parse_input_poly(poly_arg, spec, dim);
  ClassificationReport report = classify(f, c.n, c.budget(), c.seed);
  Json j = report_to_json(report, spec, dim, f.str());
  Common cc = c;
  cc.dim = dim;
  j["invocation"] = invocation_json("classify", cc, f.str());
  if (c.json()) {
    emit(out, j);
  } else {
    out << (report.is_n_application ? "is an n-application" : "is not an n-application")
        << " (n=" << c.n << ", degree=" << report.degree
        << ", comb_degree=" << report.comb_degree << ")\n";
  }
  return report.is_n_application ? 0 : 1;
}

int cmd_chains(const Common& c, const std::string& p_text, const std::string& mexp_arg,
               bool length_only, std::ostream& out) {
  const FieldSpec& spec = (p_text == "inf" || p_text == "Q" || p_text == "q")
                              ? FieldSpec::rationals()
                              : FieldSpec::finite(std::stoll(p_text), 1);
  MultiExponent m = MultiExponent::parse(read_text(mexp_arg));
  ChainsResult result =
      longest_regular_chains(m, spec, !length_only, c.budget().table_points);
  if (c.json()) {
    Json j;
    j["invocation"] = invocation_json("chains", c, m.str());
    Json body = chains_to_json(m, spec, result);
    for (auto& [k, v] : body.items()) j[k] = v;
    emit(out, j);
  } else {
    out << "length " << result.length << "\n";
    for (const RegularChain& chain : result.chains) out << chain.str() << "\n";
  }
  return 0;
}

int cmd_counterexample(const Common& c, std::ostream& out) {
  const FieldSpec& spec = FieldSpec::parse(c.field);
  const int d = c.dim == 0 ? c.n : c.dim;
  SparsePolynomial f = construct_counterexample(spec, c.n, d);
  if (c.json()) {
    Json j;
    Common cc = c;
    cc.dim = d;
    j["invocation"] = invocation_json("counterexample", cc, "");
    j["polynomial"] = f.str();
    j["degree"] = f.degree();
    j["comb_degree"] = comb_degree(f);
    if (c.verify) {
      ClassificationReport report = classify(f, c.n, c.budget(), c.seed);
      j["classification"] = report_to_json(report, spec, d, f.str());
    }
    emit(out, j);
  } else {
    out << f.str() << "\n";
  }
  return 0;
}

int cmd_interp(const Common& c, const std::string& table_path, std::ostream& out) {
  const FieldSpec& spec = FieldSpec::parse(c.field);
  if (c.dim == 0) throw error("--dim is required for interpolation");
  FunctionTable table = table_from_json(read_json_file(table_path), spec, c.dim);
  SparsePolynomial f = interpolate(table);
  if (c.json()) {
    Json j;
    j["invocation"] = invocation_json("interp", c, table_path);
    j["polynomial"] = f.str();
    emit(out, j);
  } else {
    out << f.str() << "\n";
  }
  return 0;
}

int cmd_demo(const Common& c, std::ostream& out) {
  const FieldSpec& spec = FieldSpec::parse(c.field);
  if (c.dim == 0) throw error("--dim is required for the demo");
  QuadraticDemoReport report = quadratic_correspondence_demo(spec, c.dim, c.budget());
  Json j = demo_to_json(report);
  j["invocation"] = invocation_json("demo", c, "");
  if (c.json()) emit(out, j);
  else {
    out << report.field << "^" << report.dim << ": " << report.form_count << " forms, "
        << report.napp_count << " 2-applications, kernel " << report.kernel_count
        << (report.char_two ? " (char 2)" : "") << "\n";
  }
  return 0;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"combinatorial polarization of polynomial mappings"};
  app.require_subcommand(1);

  Common c;
  std::string poly_arg, table_path, tuples_path, form_path, mexp_arg, p_text;
  bool length_only = false;

  auto* polarize_cmd = app.add_subcommand(
      "polarize", "n-th defect: formal for a polynomial, table-based with --table");
  add_common(polarize_cmd, c, true);
  polarize_cmd->add_option("poly", poly_arg, "polynomial text ('-' for stdin)");
  polarize_cmd->add_option("--table", table_path, "function table JSON file");
  polarize_cmd->add_option("--tuples", tuples_path,
                           "explicit argument tuples JSON file (with --table)");

  auto* combdeg_cmd = app.add_subcommand("combdeg", "combinatorial degree");
  add_common(combdeg_cmd, c, false);
  combdeg_cmd->add_option("poly", poly_arg, "polynomial text")->required();

  auto* reduce_cmd = app.add_subcommand("reduce", "reduce to the function representative");
  add_common(reduce_cmd, c, false);
  reduce_cmd->add_option("poly", poly_arg, "polynomial text")->required();

  auto* realize_cmd =
      app.add_subcommand("realize", "polynomial whose n-th defect is the given form");
  add_common(realize_cmd, c, false);
  realize_cmd->add_option("form", form_path, "form JSON file")->required();

  auto* classify_cmd = app.add_subcommand("classify", "n-application classification");
  add_common(classify_cmd, c, true);
  classify_cmd->add_option("poly", poly_arg, "polynomial text")->required();

  auto* chains_cmd =
      app.add_subcommand("chains", "longest regular chains of a multiexponent");
  add_common(chains_cmd, c, false);
  chains_cmd->add_option("--p", p_text, "characteristic: a prime or inf")->required();
  chains_cmd->add_option("mexp", mexp_arg, "multiexponent, e.g. (7,4)")->required();
  chains_cmd->add_flag("--length-only", length_only, "skip chain enumeration");

  auto* ce_cmd = app.add_subcommand("counterexample",
                                    "inhomogeneous n-application of degree n+q-1");
  add_common(ce_cmd, c, true);

  auto* interp_cmd = app.add_subcommand("interp", "interpolate a function table");
  add_common(interp_cmd, c, false);
  interp_cmd->add_option("table", table_path, "table JSON file")->required();

  auto* demo_cmd = app.add_subcommand("demo", "quadratic correspondence demo");
  add_common(demo_cmd, c, false);

  std::vector<const char*> argv;
  argv.push_back("napp");
  for (const std::string& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }

  try {
    if (polarize_cmd->parsed()) {
      if (poly_arg.empty() && table_path.empty())
        throw error("polarize needs a polynomial or --table");
      return cmd_polarize(c, poly_arg, table_path, tuples_path, out);
    }
    if (combdeg_cmd->parsed()) return cmd_combdeg(c, poly_arg, out);
    if (reduce_cmd->parsed()) return cmd_reduce(c, poly_arg, out);
    if (realize_cmd->parsed()) return cmd_realize(c, form_path, out);
    if (classify_cmd->parsed()) return cmd_classify(c, poly_arg, out);
    if (chains_cmd->parsed()) return cmd_chains(c, p_text, mexp_arg, length_only, out);
    if (ce_cmd->parsed()) return cmd_counterexample(c, out);
    if (interp_cmd->parsed()) return cmd_interp(c, table_path, out);
    if (demo_cmd->parsed()) return cmd_demo(c, out);
    throw error("no subcommand selected");
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
}

}  // namespace napp
