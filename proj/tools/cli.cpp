#include "cli.hpp"

#include <fstream>
#include <sstream>

#include "CLI11.hpp"
#include "qso5/analysis.hpp"
#include "qso5/io.hpp"
#include "qso5/representation.hpp"
#include "qso5/verify.hpp"

namespace qso5::cli {

namespace {

HalfInt parse_half(const std::string& text) {
  try {
    return HalfInt::parse(text);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
}

IrrepLabel make_irrep(HalfInt n1, HalfInt n2) {
  try {
    return IrrepLabel::make(n1, n2);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
}

// "5,4,6,2" or "5,4:6,2" -> ((5,4),(6,2))
std::pair<IrrepLabel, IrrepLabel> parse_pair(std::string text) {
  for (char& c : text)
    if (c == ':' || c == ';') c = ',';
  std::vector<HalfInt> v;
  std::stringstream ss(text);
  for (std::string tok; std::getline(ss, tok, ',');) v.push_back(parse_half(tok));
  if (v.size() != 4) throw UsageError("--pair expects four labels n1,n2,n1',n2'");
  return {make_irrep(v[0], v[1]), make_irrep(v[2], v[3])};
}

std::vector<HalfInt> parse_list(const std::string& text) {
  std::vector<HalfInt> v;
  std::stringstream ss(text);
  for (std::string tok; std::getline(ss, tok, ',');) v.push_back(parse_half(tok));
  return v;
}

class Output {
public:
  Output(const std::string& path, std::ostream& fallback) {
    if (!path.empty()) {
      file_.open(path);
      if (!file_) throw std::runtime_error("cannot open output file '" + path + "'");
    }
    os_ = path.empty() ? &fallback : &file_;
  }
  std::ostream& stream() { return *os_; }

private:
  std::ofstream file_;
  std::ostream* os_;
};

BuildKind build_kind(const std::string& basis) {
  if (basis == "I") return BuildKind::BasisI;
  if (basis == "II") return BuildKind::BasisII;
  throw UsageError("--basis must be I or II");
}

const IrrepLabel& require_irrep(const RunConfig& c) {
  if (!c.irrep) throw UsageError("this command needs --n1/--n2 or --n");
  return *c.irrep;
}

template <class Scalar>
Scalar parse_q(const std::string& text) {
  if (text == "general")
    throw UnsupportedCase("symbolic (general) q is not supported; only numeric q > 0 can be constructed");
  Scalar q;
  try {
    q = parse_scalar<Scalar>(text);
  } catch (const std::exception&) {
    throw UsageError("--q must be a positive number, got '" + text + "'");
  }
  if (!(q > 0)) throw UsageError("--q must be positive");
  return q;
}

template <class Scalar>
Representation<Scalar> build_from_config(const RunConfig& c) {
  return build_representation<Scalar>(build_kind(c.basis), require_irrep(c), parse_q<Scalar>(c.q));
}

template <class Scalar>
int run_build(const RunConfig& c, std::ostream& out) {
  const auto rep = build_from_config<Scalar>(c);
  Output o(c.output, out);
  o.stream() << representation_to_json(rep).dump(2) << '\n';
  return kOk;
}

template <class Scalar>
int run_verify(const RunConfig& c, std::ostream& out, std::ostream& err) {
  Representation<Scalar> rep = [&] {
    if (c.input.empty()) return build_from_config<Scalar>(c);
    std::ifstream in(c.input);
    if (!in) throw UsageError("cannot read input file '" + c.input + "'");
    return representation_from_json<Scalar>(Json::parse(in));
  }();
  const auto report = verify(rep, c.tolerance.value_or(default_tolerance<Scalar>()));
  Output o(c.output, out);
  o.stream() << report_to_json(report).dump(2) << '\n';
  if (!report.passed) err << "verification failed for " << report.irrep.str() << '\n';
  return report.passed ? kOk : kFailed;
}

template <class Scalar>
int run_casimir(const RunConfig& c, std::ostream& out) {
  const auto rep = build_from_config<Scalar>(c);
  const auto check = check_casimir(rep);
  const Scalar value = casimir_eigenvalue_formula(rep.irrep, rep.q);
  Output o(c.output, out);
  o.stream() << Json{{"irrep", irrep_to_json(rep.irrep)},
                     {"basis", to_string(rep.basis.kind())},
                     {"q", to_decimal_string(rep.q)},
                     {"formula_value", to_decimal_string(value)},
                     {"max_offdiag", check.max_offdiag},
                     {"eigenvalue_spread", check.eigenvalue_spread},
                     {"formula_deviation", check.formula_deviation}}
                        .dump(2)
             << '\n';
  return kOk;
}

int run_dim(const RunConfig& c, std::ostream& out) {
  const IrrepLabel& irrep = require_irrep(c);
  Output o(c.output, out);
  if (c.format == Format::Json) {
    Json j{{"irrep", irrep_to_json(irrep)}, {"dim_formula", dim_formula(irrep)}};
    if (irrep.n1 == irrep.n2) j["dim_equal_labels"] = dim_equal_labels(irrep.n1);
    o.stream() << j.dump(2) << '\n';
  } else {
    o.stream() << dim_formula(irrep) << '\n';
  }
  return kOk;
}

int run_expand(const RunConfig& c, std::ostream& out) {
  const auto e = casimir_delta_expansion(require_irrep(c), c.order);
  Output o(c.output, out);
  if (c.format == Format::Csv)
    write_expansion_csv(o.stream(), e);
  else
    o.stream() << expansion_to_json(e).dump(2) << '\n';
  return kOk;
}

int run_contract(const RunConfig& c, std::ostream& out) {
  if (!c.n2) throw UsageError("contract needs --n2");
  const double q = parse_q<double>(c.q);
  std::vector<HalfInt> n1s = c.n1_values;
  if (n1s.empty())
    for (int i = 0; i <= c.steps; ++i) n1s.push_back(*c.n2 + i);
  for (HalfInt n1 : n1s) make_irrep(n1, *c.n2);
  const auto r = contraction_limit(*c.n2, q, c.lambda, n1s);
  Output o(c.output, out);
  if (c.format == Format::Csv)
    write_contraction_csv(o.stream(), r);
  else
    o.stream() << contraction_to_json(r).dump(2) << '\n';
  return kOk;
}

int run_separate(const RunConfig& c, std::ostream& out) {
  const double q = parse_q<double>(c.q);
  auto pairs = c.pairs;
  if (pairs.empty()) pairs.emplace_back(IrrepLabel::make(HalfInt(5), HalfInt(4)), IrrepLabel::make(HalfInt(6), HalfInt(2)));
  const double tol = c.tolerance.value_or(1e-6);
  const auto separated = separation_check(pairs, q, tol);
  Json rows = Json::array();
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    const auto& [a, b] = pairs[i];
    rows.push_back(Json{{"first", irrep_to_json(a)},
                        {"second", irrep_to_json(b)},
                        {"A2", to_string(a2_closed_form(a))},
                        {"first_eigenvalue", casimir_eigenvalue_formula(a, q)},
                        {"second_eigenvalue", casimir_eigenvalue_formula(b, q)},
                        {"separated", static_cast<bool>(separated[i])}});
  }
  Output o(c.output, out);
  o.stream() << Json{{"q", q}, {"tolerance", tol}, {"pairs", std::move(rows)}}.dump(2) << '\n';
  return kOk;
}

template <class Scalar>
int dispatch_precision(const RunConfig& c, std::ostream& out, std::ostream& err) {
  switch (c.command) {
    case Command::Build: return run_build<Scalar>(c, out);
    case Command::Verify: return run_verify<Scalar>(c, out, err);
    case Command::Casimir: return run_casimir<Scalar>(c, out);
    default: break;
  }
  throw std::logic_error("command does not depend on precision");
}

// An exported document is verified in the precision it was written with.
Precision document_precision(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot read input file '" + path + "'");
  const auto p = Json::parse(in).value("precision", std::string("double"));
  if (p != "double" && p != "high") throw UsageError("unknown precision '" + p + "' in " + path);
  return p == "high" ? Precision::High : Precision::Double;
}

}  // namespace

RunConfig parse_args(int argc, const char* const* argv) {
  CLI::App app{"Explicit U_q(so(5)) representations and checks of their algebraic identities", "qso5"};
  app.require_subcommand(1);

  RunConfig c;
  std::string n1, n2, n, precision = "double", format, n1_list;
  std::vector<std::string> pairs;
  std::optional<double> tolerance;

  const auto add_irrep = [&](CLI::App* sub) {
    sub->add_option("--n1", n1, "first label, e.g. 3 or 3/2");
    sub->add_option("--n2", n2, "second label");
    sub->add_option("--n", n, "shorthand for n1 = n2 = n");
  };
  const auto add_common = [&](CLI::App* sub) {
    sub->add_option("-o,--output", c.output, "write to this file instead of stdout");
    sub->add_option("--format", format, "json or csv")->check(CLI::IsMember({"json", "csv"}));
  };
  const auto add_build = [&](CLI::App* sub) {
    add_irrep(sub);
    add_common(sub);
    sub->add_option("--basis", c.basis, "I or II")->check(CLI::IsMember({"I", "II"}));
    sub->add_option("--q", c.q, "deformation parameter (numeric, > 0)");
    sub->add_option("--precision", precision, "double or high")->check(CLI::IsMember({"double", "high"}));
  };

  auto* dim = app.add_subcommand("dim", "dimension of an irrep");
  add_irrep(dim);
  add_common(dim);
  auto* build = app.add_subcommand("build", "export generator matrices as sparse triplets");
  add_build(build);
  auto* verify_cmd = app.add_subcommand("verify", "check relations and the Casimir; exit 1 on failure");
  add_build(verify_cmd);
  verify_cmd->add_option("--tolerance", tolerance, "absolute tolerance");
  verify_cmd->add_option("--input", c.input, "verify an exported matrix file instead of building");
  auto* casimir = app.add_subcommand("casimir", "Casimir eigenvalue and matrix deviation");
  add_build(casimir);
  auto* expand = app.add_subcommand("expand", "exact d-expansion of the Casimir eigenvalue");
  add_irrep(expand);
  add_common(expand);
  expand->add_option("--order", c.order, "even truncation order >= 2");
  auto* contract = app.add_subcommand("contract", "contraction-scaled eigenvalue sequence and its limit");
  add_common(contract);
  contract->add_option("--n2", n2, "second label")->required();
  contract->add_option("--q", c.q, "q > 1")->required();
  contract->add_option("--lambda", c.lambda, "scale constant > 0");
  contract->add_option("--n1", n1_list, "comma-separated ascending n1 values");
  contract->add_option("--steps", c.steps, "default n1 = n2, ..., n2 + steps");
  auto* separate = app.add_subcommand("separate", "check that classically degenerate irreps split at q != 1");
  add_common(separate);
  separate->add_option("--q", c.q, "q != 1")->required();
  separate->add_option("--pair", pairs, "n1,n2,n1',n2' (repeatable); default 5,4,6,2");
  separate->add_option("--tolerance", tolerance, "minimum eigenvalue gap");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    std::ostringstream os;
    app.exit(e, os, os);
    throw HelpRequested(os.str());
  }

  const std::map<CLI::App*, Command> commands{{dim, Command::Dim},         {build, Command::Build},
                                              {verify_cmd, Command::Verify}, {casimir, Command::Casimir},
                                              {expand, Command::Expand},   {contract, Command::Contract},
                                              {separate, Command::Separate}};
  c.command = commands.at(app.get_subcommands().front());
  c.precision = precision == "high" ? Precision::High : Precision::Double;
  c.tolerance = tolerance;
  if (format == "json") c.format = Format::Json;
  if (format == "csv") c.format = Format::Csv;

  if (c.command == Command::Contract) {
    c.n2 = parse_half(n2);
    if (!n1_list.empty()) c.n1_values = parse_list(n1_list);
  } else if (!n.empty()) {
    if (!n1.empty() || !n2.empty()) throw UsageError("use either --n or --n1/--n2");
    const HalfInt v = parse_half(n);
    c.irrep = make_irrep(v, v);
  } else if (!n1.empty() || !n2.empty()) {
    if (n1.empty() || n2.empty()) throw UsageError("both --n1 and --n2 are required");
    c.irrep = make_irrep(parse_half(n1), parse_half(n2));
  }
  for (const auto& p : pairs) c.pairs.push_back(parse_pair(p));
  return c;
}

int run(const RunConfig& c, std::ostream& out, std::ostream& err) {
  switch (c.command) {
    case Command::Dim: return run_dim(c, out);
    case Command::Expand: return run_expand(c, out);
    case Command::Contract: return run_contract(c, out);
    case Command::Separate: return run_separate(c, out);
    default: break;
  }
  Precision precision = c.precision;
  if (c.command == Command::Verify && !c.input.empty()) precision = document_precision(c.input);
  if (precision == Precision::High) return dispatch_precision<HighPrecision>(c, out, err);
  return dispatch_precision<double>(c, out, err);
}

int main_entry(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  try {
    return run(parse_args(argc, argv), out, err);
  } catch (const HelpRequested& e) {
    out << e.what();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n(run with --help for usage)\n";
    return kUsage;
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << '\n';
    return kUsage;
  } catch (const UnsupportedCase& e) {
    err << "unsupported: " << e.what() << '\n';
    return kUnsupported;
  } catch (const std::invalid_argument& e) {
    err << "usage error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kFailed;
  }
}

}  // namespace qso5::cli
