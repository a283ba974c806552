#include "cli.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "siegel/json_io.hpp"
#include "siegel/minkowski.hpp"
#include "siegel/mod2.hpp"
#include "siegel/reduction_tables.hpp"
#include "siegel/pipeline.hpp"
#include "siegel/siegel_maps.hpp"
#include "siegel/verify.hpp"

namespace siegel::cli {
namespace {

struct Config {
  std::string mode = "rational";
  double tol = kDefaultTol;
  bool tol_given = false;
  std::string input;
  std::string output;
  std::string point;
  bool pretty = false;
};

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

NumberFormat number_format(const Config& c) {
  if (c.mode == "float") return {ScalarMode::Float, c.tol};
  return {ScalarMode::Rational, c.tol};
}

Json read_input(const Config& c, std::istream& in) {
  std::string text;
  if (!c.point.empty()) {
    text = c.point;
  } else if (!c.input.empty() && c.input != "-") {
    std::ifstream f(c.input);
    if (!f) throw UsageError("cannot open input file " + c.input);
    std::ostringstream ss;
    ss << f.rdbuf();
    text = ss.str();
  } else {
    std::ostringstream ss;
    ss << in.rdbuf();
    text = ss.str();
  }
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw Error(ErrorCode::ParseError, std::string("invalid JSON: ") + e.what());
  }
}

Json certificate_json(const ConditionReport& r) {
  Json values = Json::array();
  for (const auto& c : r.values) {
    values.push_back(Json{{"name", c.name}, {"value", to_json(c.value)}, {"boundary", c.boundary}});
  }
  return values;
}

Json params_json(const W21Params& p) {
  return Json{{"beta", to_json(p.beta)}, {"gamma", to_json(p.gamma)}, {"delta", to_json(p.delta)}};
}

SiegelPoint parse_point(const Json& j, const NumberFormat& fmt, int genus) {
  if (genus == 2 && j.is_object() && j.contains("delta")) {
    for (const char* key : {"beta", "gamma", "delta"}) {
      if (!j.contains(key)) throw Error(ErrorCode::ParseError, std::string("missing \"") + key + "\"");
    }
    return w21_point(scalar_from_json(j.at("beta"), fmt), scalar_from_json(j.at("gamma"), fmt),
                     scalar_from_json(j.at("delta"), fmt));
  }
  if (!j.is_object() || !j.contains("w")) {
    throw Error(ErrorCode::ParseError, "expected {\"g\": int, \"w\": {\"re\": ..., \"im\": ...}}");
  }
  ComplexMatrix w = complex_from_json(j.at("w"), fmt);
  if (j.contains("g") && (!j.at("g").is_number_integer() || j.at("g").get<int>() != static_cast<int>(w.rows()))) {
    throw Error(ErrorCode::ParseError, "\"g\" does not match the matrix size");
  }
  if (static_cast<int>(w.rows()) != genus || !w.re.is_square()) {
    throw Error(ErrorCode::NotInLocus, "expected a " + std::to_string(genus) + "x" + std::to_string(genus) + " point");
  }
  return SiegelPoint(std::move(w));
}

SiegelPoint parse_locus_point(const Json& j, const NumberFormat& fmt, int genus) {
  SiegelPoint p = parse_point(j, fmt, genus);
  if (!is_in_W(p, LocusSignature::even(genus / 2))) throw Error(ErrorCode::NotInLocus, "point is not in the locus");
  return p;
}

Matrix parse_form(const Json& j, const NumberFormat& fmt, std::size_t dim) {
  Matrix m;
  if (dim == 2 && j.is_object() && j.contains("phi")) {
    for (const char* key : {"phi", "chi", "psi"}) {
      if (!j.contains(key)) throw Error(ErrorCode::ParseError, std::string("missing \"") + key + "\"");
    }
    const Scalar chi = scalar_from_json(j.at("chi"), fmt);
    m = Matrix{{scalar_from_json(j.at("phi"), fmt), chi}, {chi, scalar_from_json(j.at("psi"), fmt)}};
  } else if (j.is_object() && j.contains("m")) {
    m = matrix_from_json(j.at("m"), fmt);
  } else {
    m = matrix_from_json(j, fmt);
  }
  if (!m.is_square() || m.rows() != dim) {
    throw Error(ErrorCode::NotInLocus, "expected a " + std::to_string(dim) + "x" + std::to_string(dim) + " form");
  }
  if (!m.is_symmetric()) throw Error(ErrorCode::NotSymmetric, "form is not symmetric");
  if (!is_positive_definite(m)) throw Error(ErrorCode::NotPositiveDefinite, "form is not positive definite");
  return m;
}

Json result_json(const ReductionResult& r) {
  Json out;
  out["group"] = to_string(r.group_element.kind);
  out["group_element"] = to_json(r.group_element.m);
  out["certificate"] = certificate_json(r.certificate);
  out["in_domain"] = r.certificate.member;
  out["rep_index"] = r.rep_index ? Json(*r.rep_index) : Json(nullptr);
  if (const auto* p = std::get_if<SiegelPoint>(&r.reduced)) {
    out["reduced"] = to_json(*p);
    if (p->g() == 2) out["reduced_params"] = params_json(w21_params(*p));
  } else {
    out["reduced"] = to_json(std::get<Matrix>(r.reduced));
  }
  return out;
}

Json cmd_reduce(const std::string& space, const Json& input, const NumberFormat& fmt) {
  if (space == "w21") return result_json(reduce_W21(parse_locus_point(input, fmt, 2)));
  if (space == "w41") return result_json(reduce_W41(parse_locus_point(input, fmt, 4)));
  if (space == "sym4") return result_json(reduce_to_Dpp(parse_form(input, fmt, 4)));
  const LagrangeResult lr = lagrange_reduce(BinaryForm::from_matrix(parse_form(input, fmt, 2)));
  Json out;
  out["group"] = to_string(lr.g.kind);
  out["group_element"] = to_json(lr.g.m);
  out["reduced"] = to_json(lr.form.matrix());
  out["rep_index"] = nullptr;
  const Scalar two_chi = lr.form.chi + lr.form.chi;
  ConditionReport cert;
  for (auto [name, v] : {std::pair<const char*, Scalar>{"psi-phi", lr.form.psi - lr.form.phi},
                         {"2chi+phi", two_chi + lr.form.phi},
                         {"-2chi", -two_chi}}) {
    cert.values.push_back({name, v, v.is_zero()});
  }
  out["certificate"] = certificate_json(cert);
  out["in_domain"] = in_lagrange_domain(lr.form);
  return out;
}

Json predicate_list(const std::vector<std::pair<std::string, bool>>& preds) {
  Json out = Json::object();
  for (const auto& [name, v] : preds) out[name] = v;
  return out;
}

Json cmd_check(const std::string& space, const Json& input, const NumberFormat& fmt) {
  Json out;
  out["space"] = space;
  if (space == "w21" || space == "w41") {
    const int genus = space == "w21" ? 2 : 4;
    const SiegelPoint p = parse_point(input, fmt, genus);
    const bool in_w = is_in_W(p, LocusSignature::even(genus / 2));
    out["predicates"] = predicate_list({{"symmetric", p.w().is_symmetric()},
                                        {"imaginary_part_positive_definite", is_positive_definite(p.w().im)},
                                        {"in_locus", in_w},
                                        {"locus_block_form", has_w_block_form(p.w())}});
    if (!in_w) {
      out["in_domain"] = false;
      return out;
    }
    const Matrix s = sigma_map(p);
    out["sigma_image"] = predicate_list({{"symmetric", s.is_symmetric()},
                                         {"positive_definite", is_positive_definite(s)},
                                         {"symplectic", is_symplectic(s)},
                                         {"commutes_with_T", commutes_with_T(s)},
                                         {"block_pattern", has_v_pattern(s)}});
    out["invariant"] = to_json(invariant_I(p));
    if (genus == 2) {
      const W21Params params = w21_params(p);
      const ConditionReport r = w21_domain_conditions(params);
      out["params"] = params_json(params);
      out["conditions"] = certificate_json(r);
      out["in_domain"] = r.member;
    } else {
      const Matrix sigma = p_map_unchecked(s);
      const ChartMembership cm = in_Dpp4(sigma);
      out["in_domain"] = cm.member;
      out["rep_index"] = cm.rep_index ? Json(*cm.rep_index) : Json(nullptr);
      const Matrix chart_form =
          cm.rep_index ? congruence(sigma, inverse(reduction_tables().reps[*cm.rep_index - 1])) : sigma;
      out["conditions"] = certificate_json(barnes_cohn_conditions(chart_form));
    }
    return out;
  }
  if (space == "sym2" || space == "sym4") {
    const std::size_t dim = space == "sym2" ? 2 : 4;
    const Matrix m = parse_form(input, fmt, dim);
    if (dim == 2) {
      const BinaryForm f = BinaryForm::from_matrix(m);
      const Scalar two_chi = f.chi + f.chi;
      ConditionReport r;
      for (auto [name, v] : {std::pair<const char*, Scalar>{"psi-phi", f.psi - f.phi},
                             {"2chi+phi", two_chi + f.phi},
                             {"-2chi", -two_chi}}) {
        r.values.push_back({name, v, v.is_zero()});
      }
      r.member = in_lagrange_domain(f);
      out["conditions"] = certificate_json(r);
      out["violated"] = r.violated();
      out["in_domain"] = r.member;
      return out;
    }
    const ConditionReport r = barnes_cohn_conditions(m);
    const ChartMembership cm = in_Dpp4(m);
    out["conditions"] = certificate_json(r);
    out["violated"] = r.violated();
    out["zero_count"] = r.zero_count();
    out["in_domain"] = r.member;
    out["in_union_of_charts"] = cm.member;
    out["rep_index"] = cm.rep_index ? Json(*cm.rep_index) : Json(nullptr);
    return out;
  }
  // space == "matrix"
  const Matrix m = matrix_from_json(input.is_object() && input.contains("m") ? input.at("m") : input, fmt);
  std::vector<std::pair<std::string, bool>> preds{{"square", m.is_square()},
                                                  {"symmetric", m.is_symmetric()},
                                                  {"integral", m.is_integral()}};
  if (m.is_square()) {
    preds.emplace_back("positive_definite", m.is_symmetric() && is_positive_definite(m));
    preds.emplace_back("unimodular", is_unimodular(m));
    if (m.rows() % 2 == 0) {
      preds.emplace_back("symplectic", is_symplectic(m));
      if (m.is_integral()) preds.emplace_back("in_K", is_in_K(m));
    }
    if (m.rows() % 4 == 0) {
      preds.emplace_back("block_pattern", has_v_pattern(m));
      preds.emplace_back("commutes_with_T", commutes_with_T(m));
      if (m.is_integral()) preds.emplace_back("in_G", is_in_G_group(m, LocusSignature::even(static_cast<int>(m.rows() / 4))));
    }
    out["determinant"] = to_json(determinant(m));
  }
  out["predicates"] = predicate_list(preds);
  return out;
}

Json cmd_invariant(const std::string& space, const Json& input, const NumberFormat& fmt) {
  const int genus = space == "w21" ? 2 : 4;
  return to_json(invariant_I(parse_locus_point(input, fmt, genus)));
}

Json cmd_cosets(int dim) {
  if (dim % 2 != 0) throw Error(ErrorCode::UnsupportedDimension, "dimension must be even");
  const GroupOrders o = group_orders(dim / 2);
  return Json{{"gl", o.gl}, {"sp", o.sp}, {"index", o.index}};
}

Json report_json(const VerificationReport& r) {
  Json items = Json::array();
  for (const auto& i : r.items) {
    items.push_back(Json{{"id", i.id}, {"name", i.name}, {"passed", i.passed}, {"detail", i.detail}});
  }
  return Json{{"items", items}, {"all_passed", r.all_passed()}};
}

int exit_code_for(ErrorCode c) {
  switch (c) {
    case ErrorCode::ParseError:
      return kParse;
    case ErrorCode::NotInLocus:
    case ErrorCode::NotPositiveDefinite:
    case ErrorCode::NotSymmetric:
    case ErrorCode::NotInGroup:
    case ErrorCode::NotInImage:
    case ErrorCode::NotSymplectic:
    case ErrorCode::MalformedBlockPattern:
    case ErrorCode::SingularMatrix:
    case ErrorCode::NonIntegerEntries:
    case ErrorCode::DimensionMismatch:
    case ErrorCode::OddDimension:
    case ErrorCode::ZeroVector:
    case ErrorCode::DivisionByZero:
    case ErrorCode::ModeMismatch:
      return kNotMember;
    case ErrorCode::UnsupportedDimension:
      return kUnsupported;
    default:
      return kInternal;
  }
}

const char* category(int code) {
  switch (code) {
    case kUsage: return "usage";
    case kParse: return "parse error";
    case kNotMember: return "not in locus";
    case kInternal: return "internal inconsistency";
    case kVerifyFailed: return "verification failed";
    case kUnsupported: return "unsupported";
    default: return "error";
  }
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app{"Reduction of points of the real-curve Siegel locus to fundamental domains", "siegel-reduce"};
  app.require_subcommand(1);
  app.fallthrough();
  Config cfg;
  app.add_option("--mode", cfg.mode, "Scalar mode")->check(CLI::IsMember({"rational", "float"}));
  auto* tol_opt = app.add_option("--tol", cfg.tol, "Comparison tolerance (float mode)")->check(CLI::PositiveNumber);
  app.add_option("--in", cfg.input, "Input JSON file (default stdin)");
  app.add_option("--out", cfg.output, "Output file (default stdout)");
  app.add_flag("--pretty", cfg.pretty, "Indent JSON output");

  std::string space;
  auto* reduce = app.add_subcommand("reduce", "Reduce a point or form into its fundamental domain");
  reduce->add_option("space", space, "w21 | w41 | sym2 | sym4")->required()->check(CLI::IsMember({"w21", "w41", "sym2", "sym4"}));
  reduce->add_option("--point", cfg.point, "Inline JSON input");

  auto* check = app.add_subcommand("check", "Evaluate membership predicates and domain inequalities");
  check->add_option("space", space, "w21 | w41 | sym2 | sym4 | matrix")
      ->required()
      ->check(CLI::IsMember({"w21", "w41", "sym2", "sym4", "matrix"}));
  check->add_option("--point", cfg.point, "Inline JSON input");

  auto* invariant = app.add_subcommand("invariant", "Print the invariant det(P(Sigma(w)))");
  invariant->add_option("space", space, "w21 | w41")->required()->check(CLI::IsMember({"w21", "w41"}));
  invariant->add_option("--point", cfg.point, "Inline JSON input");

  int dim = 4;
  auto* cosets = app.add_subcommand("cosets", "Orders of GL and Sp over F2 and their index");
  cosets->add_option("--dim", dim, "Matrix dimension 2 g0");

  app.add_subcommand("tables", "Dump the built-in data tables");

  VerifyOptions vopt;
  auto* verify = app.add_subcommand("verify-paper", "Run the data and invariance checks");
  verify->add_option("--seed", vopt.seed, "Random seed");
  verify->add_option("--samples", vopt.samples, "Random samples per check");

  std::vector<std::string> argv(args.rbegin(), args.rend());
  try {
    app.parse(argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }
  cfg.tol_given = tol_opt->count() > 0;
  if (cfg.tol_given && cfg.mode != "float") {
    err << "error (usage): --tol requires --mode float\n";
    return kUsage;
  }

  std::ofstream file_out;
  std::ostream* sink = &out;
  if (!cfg.output.empty() && cfg.output != "-") {
    file_out.open(cfg.output);
    if (!file_out) {
      err << "error (usage): cannot open output file " << cfg.output << "\n";
      return kUsage;
    }
    sink = &file_out;
  }

  const NumberFormat fmt = number_format(cfg);
  int status = kOk;
  try {
    Json result;
    if (*reduce) {
      result = cmd_reduce(space, read_input(cfg, in), fmt);
    } else if (*check) {
      result = cmd_check(space, read_input(cfg, in), fmt);
    } else if (*invariant) {
      result = cmd_invariant(space, read_input(cfg, in), fmt);
    } else if (*cosets) {
      result = cmd_cosets(dim);
    } else if (*verify) {
      const VerificationReport r = verify_paper(vopt);
      result = report_json(r);
      if (!r.all_passed()) status = kVerifyFailed;
    } else {
      result = tables_to_json(reduction_tables());
    }
    *sink << (cfg.pretty ? result.dump(2) : result.dump()) << "\n";
  } catch (const UsageError& e) {
    err << "error (usage): " << e.what() << "\n";
    return kUsage;
  } catch (const Error& e) {
    const int code = exit_code_for(e.code());
    err << "error (" << category(code) << "): " << e.what() << "\n";
    return code;
  } catch (const Json::exception& e) {
    err << "error (parse error): " << e.what() << "\n";
    return kParse;
  }
  if (status == kVerifyFailed) err << "error (" << category(status) << "): some checks failed\n";
  return status;
}

}  // namespace siegel::cli
