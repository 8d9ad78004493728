// Copyright 2026 The Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "symdec/cli.hpp"

#include <cstdlib>
#include <fstream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "symdec/complexes.hpp"
#include "symdec/decompose.hpp"
#include "symdec/families.hpp"
#include "symdec/operators.hpp"
#include "symdec/rootcert.hpp"
#include "symdec/verify.hpp"
#include "symdec/zonotopes.hpp"

namespace symdec {

namespace {

using Json = nlohmann::ordered_json;

// Rationals go out as strings so nothing is rounded.
Json coeff_json(const Polynomial& p) {
  Json arr = Json::array();
  for (const auto& c : p.coeffs()) arr.push_back(c.get_str());
  return arr;
}

Json list_json(const std::vector<Rational>& v) {
  Json arr = Json::array();
  for (const auto& c : v) arr.push_back(c.get_str());
  return arr;
}

Json roots_json(const RootIsolation& iso) {
  Json arr = Json::array();
  for (const auto& r : iso.intervals) {
    arr.push_back({{"lo", r.lo.get_str()}, {"hi", r.hi.get_str()}, {"multiplicity", r.multiplicity}});
  }
  return arr;
}

Json cert_json(const InterlacingCertificate& c) {
  return {{"holds", c.holds},
          {"reason", std::string(interlace_reason_name(c.reason))},
          {"left_roots", roots_json(c.left_roots)},
          {"right_roots", roots_json(c.right_roots)}};
}

Json real_rooted_json(const Polynomial& p) {
  const bool rr = p.is_zero() || is_real_rooted(p);
  Json j{{"real_rooted", rr}};
  if (rr && !p.is_zero()) j["roots"] = roots_json(isolate_roots(p));
  return j;
}

std::string yes_no(bool v) { return v ? "yes" : "no"; }

int exit_for(ErrorCode code) {
  switch (code) {
    case ErrorCode::kParseError:
    case ErrorCode::kDegreeTooSmall:
    case ErrorCode::kLengthMismatch:
    case ErrorCode::kOutOfRange:
    case ErrorCode::kTooLarge:
    case ErrorCode::kSizeCap:
    case ErrorCode::kInvalidMatroid:
      return kExitUsage;
    default:
      return kExitMathFailure;
  }
}

struct Common {
  std::string format = "plain";
};

void add_format(CLI::App* cmd, Common& c, std::vector<std::string> allowed) {
  cmd->add_option("--format", c.format, "output format")->check(CLI::IsMember(allowed));
}

// ---- decompose ----

struct DecomposeArgs {
  std::string poly;
  int degree = 0;
  std::string kind = "I";
  bool certify = false;
  bool expect_real_rooted = false;
  bool expect_interlacing = false;
  Common common;
};

int cmd_decompose(const DecomposeArgs& args, std::ostream& out) {
  const Polynomial p = parse_polynomial(args.poly);
  const FormalDegree d(args.degree);
  const Decomposition dec = args.kind == "I" ? decompose_I(p, d) : decompose_R(p, d);
  const bool need_cert = args.certify || args.expect_real_rooted || args.expect_interlacing;
  bool a_rr = true, b_rr = true;
  std::optional<InterlacingCertificate> ba;
  if (need_cert) {
    a_rr = dec.a.is_zero() || is_real_rooted(dec.a);
    b_rr = dec.b.is_zero() || is_real_rooted(dec.b);
    ba = interlaces_signed(dec.b, dec.a);
  }
  if (args.common.format == "json") {
    Json j{{"command", "decompose"},
           {"kind", args.kind},
           {"degree", args.degree},
           {"input", coeff_json(p)},
           {"a", coeff_json(dec.a)},
           {"b", coeff_json(dec.b)}};
    if (need_cert) {
      j["certificates"] = {{"a", real_rooted_json(dec.a)},
                           {"b", real_rooted_json(dec.b)},
                           {"b_interlaces_a", cert_json(*ba)}};
    }
    out << j.dump(2) << "\n";
  } else {
    out << "kind: " << args.kind << "\n";
    out << "a: " << format_coefficients(dec.a) << "\n";
    out << "b: " << format_coefficients(dec.b) << "\n";
    if (need_cert) {
      out << "a real-rooted: " << yes_no(a_rr) << "\n";
      out << "b real-rooted: " << yes_no(b_rr) << "\n";
      out << "b < a: " << yes_no(ba->holds) << " (" << interlace_reason_name(ba->reason) << ")\n";
    }
  }
  if (args.expect_real_rooted && !(a_rr && b_rr)) return kExitMathFailure;
  if (args.expect_interlacing && !ba->holds) return kExitMathFailure;
  return kExitPass;
}

// ---- tables ----

struct TablesArgs {
  std::string family;
  int n = 6;
  int r = 1;
  int k = 0;
  Common common;
};

int cmd_tables(const TablesArgs& args, std::ostream& out) {
  if (args.n < 0 || args.r < 1 || args.k < 0) throw Error(ErrorCode::kOutOfRange, "need n >= 0, r >= 1, k >= 0");
  std::vector<std::pair<int, Polynomial>> rows;
  std::string label;
  const std::string rsub = args.r == 1 ? "n" : "{n," + std::to_string(args.r) + "}";
  if (args.family == "eulerian") {
    label = "A_" + rsub;
    for (int n = 1; n <= args.n; ++n) rows.emplace_back(n, colored_eulerian(n, args.r));
  } else if (args.family == "derangement") {
    label = "d_" + rsub;
    for (int n = 1; n <= args.n; ++n) rows.emplace_back(n, colored_derangement(n, args.r));
  } else {
    label = args.k == 0 ? "B_n" : "B_{" + std::to_string(args.k) + "}^n";
    for (int n = std::max(1, args.k); n <= args.n; ++n) rows.emplace_back(n, typeB(args.k, n));
  }
  const std::string& fmt = args.common.format;
  if (fmt == "json") {
    Json j{{"command", "tables"}, {"family", args.family}, {"r", args.r}, {"k", args.k}};
    Json arr = Json::array();
    for (const auto& [n, p] : rows) arr.push_back({{"n", n}, {"coefficients", coeff_json(p)}});
    j["rows"] = arr;
    out << j.dump(2) << "\n";
  } else if (fmt == "csv") {
    out << "n,coefficients\n";
    for (const auto& [n, p] : rows) out << n << ",\"" << format_coefficients(p) << "\"\n";
  } else if (fmt == "latex") {
    out << "\\begin{tabular}{ l | l }\n";
    out << "$n$\t&\t$" << label << "$\t\\\\\\hline\n";
    for (const auto& [n, p] : rows) out << "$" << n << "$\t&\t$" << to_latex(p) << "$\t\\\\\n";
    out << "\\end{tabular}\n";
  } else {
    for (const auto& row : rows) out << format_coefficients(row.second) << "\n";
  }
  return kExitPass;
}

// ---- gen ----

struct GenArgs {
  std::string family;
  int n = 0;
  int r = 1;
  int k = 0;
  bool bruteforce = false;
  Common common;
};

int cmd_gen(const GenArgs& args, std::ostream& out) {
  Polynomial p;
  if (args.family == "eulerian") {
    p = args.bruteforce ? colored_eulerian_bruteforce(args.n, args.r) : colored_eulerian(args.n, args.r);
  } else if (args.family == "derangement") {
    p = args.bruteforce ? colored_derangement_bruteforce(args.n, args.r)
                        : colored_derangement(args.n, args.r);
  } else if (args.family == "partial") {
    p = partial_colored_eulerian(args.n, args.r, args.k);
  } else {
    p = args.bruteforce ? typeB_bruteforce(args.k, args.n) : typeB(args.k, args.n);
  }
  if (args.common.format == "json") {
    Json j{{"command", "gen"}, {"family", args.family}, {"n", args.n},
           {"r", args.r},      {"k", args.k},           {"coefficients", coeff_json(p)}};
    out << j.dump(2) << "\n";
  } else if (args.common.format == "latex") {
    out << to_latex(p) << "\n";
  } else {
    out << format_coefficients(p) << "\n";
  }
  return kExitPass;
}

// ---- op ----

struct OpArgs {
  std::string name;
  std::string poly;
  std::string poly2;
  int k = 0;
  std::optional<int> degree;
  std::string basis = "xx1";
  int m = 1;
  Common common;
};

FormalDegree need_degree(const OpArgs& args) {
  if (!args.degree) throw Error(ErrorCode::kParseError, "op " + args.name + " needs --degree");
  return FormalDegree(*args.degree);
}

int cmd_op(const OpArgs& args, std::ostream& out) {
  const Polynomial p = parse_polynomial(args.poly);
  std::vector<Rational> result;
  bool is_coords = false;
  {
    Polynomial r;
    if (args.name == "e") {
      r = subdivision_E(p);
    } else if (args.name == "einv") {
      r = subdivision_E_inverse(p);
    } else if (args.name == "diamond") {
      if (args.poly2.empty()) throw Error(ErrorCode::kParseError, "op diamond needs --poly2");
      r = diamond(p, parse_polynomial(args.poly2));
    } else if (args.name == "dmap") {
      r = deranged_D(p);
    } else if (args.name == "tk") {
      r = T_k(p, args.k);
    } else if (args.name == "phik") {
      r = phi_k(p, args.k);
    } else if (args.name == "hfromi") {
      r = h_from_i(p, need_degree(args));
    } else if (args.name == "ftransform") {
      r = f_transform(p, need_degree(args));
    } else if (args.name == "finverse") {
      r = f_inverse(p, need_degree(args));
    } else if (args.name == "reverse") {
      r = reverse_I(p, need_degree(args));
    } else if (args.name == "reflect") {
      r = reflect_R(p, need_degree(args));
    } else {  // cone
      const ConeBasis basis = args.basis == "xx1" ? ConeBasis::kXX1
                              : args.basis == "e" ? ConeBasis::kE
                              : args.basis == "b2" ? ConeBasis::kB2
                                                   : ConeBasis::kBm;
      result = cone_coordinates(p, need_degree(args), basis, args.m).c;
      is_coords = true;
    }
    if (!is_coords) result.assign(r.coeffs().begin(), r.coeffs().end());
  }
  if (args.common.format == "json") {
    Json j{{"command", "op"}, {"op", args.name}, {"input", coeff_json(p)}};
    if (is_coords) {
      const bool in_cone = std::all_of(result.begin(), result.end(), [](const Rational& v) { return v >= 0; });
      j["coordinates"] = list_json(result);
      j["in_cone"] = in_cone;
    } else {
      j["result"] = list_json(result);
    }
    out << j.dump(2) << "\n";
  } else if (is_coords) {
    out << format_rational_list(result) << "\n";
  } else {
    out << format_coefficients(Polynomial(result)) << "\n";
  }
  return kExitPass;
}

// ---- cert ----

struct CertArgs {
  std::string p;
  std::string q;
  bool is_signed = false;
  Common common;
};

int cmd_cert(const CertArgs& args, std::ostream& out) {
  const Polynomial p = parse_polynomial(args.p);
  if (args.q.empty()) {
    if (p.is_zero()) throw Error(ErrorCode::kZeroPolynomial, "cannot certify the zero polynomial");
    const bool rr = is_real_rooted(p);
    if (args.common.format == "json") {
      Json j{{"command", "cert"}, {"p", coeff_json(p)}};
      j["certificate"] = real_rooted_json(p);
      out << j.dump(2) << "\n";
    } else {
      out << "real-rooted: " << yes_no(rr) << "\n";
      if (rr) {
        for (const auto& r : isolate_roots(p).intervals) {
          out << "root in [" << r.lo.get_str() << ", " << r.hi.get_str() << "]";
          if (r.multiplicity > 1) out << " multiplicity " << r.multiplicity;
          out << "\n";
        }
      }
    }
    return rr ? kExitPass : kExitMathFailure;
  }
  const Polynomial q = parse_polynomial(args.q);
  const auto cert = args.is_signed ? interlaces_signed(p, q) : interlaces(p, q);
  if (args.common.format == "json") {
    Json j{{"command", "cert"}, {"p", coeff_json(p)}, {"q", coeff_json(q)}};
    j["certificate"] = cert_json(cert);
    out << j.dump(2) << "\n";
  } else {
    out << "p < q: " << yes_no(cert.holds) << " (" << interlace_reason_name(cert.reason) << ")\n";
  }
  return cert.holds ? kExitPass : kExitMathFailure;
}

// ---- zono ----

struct ZonoArgs {
  std::string matrix;
  std::string alpha;
  bool bruteforce = false;
  Common common;
};

int cmd_zono_hstar(const ZonoArgs& args, std::ostream& out) {
  const ZonotopeSpec z = ZonotopeSpec::parse(args.matrix);
  const FormalDegree d(z.dim());
  std::optional<ValuationSpec> v;
  if (!args.alpha.empty()) v = ValuationSpec{parse_rational_list(args.alpha)};
  const Polynomial e = ehrhart(z);
  const Polynomial h = hstar(z, v);
  const Integer interior = interior_point_count(z);
  const auto dec = decompose_I(h, d);
  const bool a_rr = dec.a.is_zero() || is_real_rooted(dec.a);
  const bool b_rr = dec.b.is_zero() || is_real_rooted(dec.b);
  std::optional<Polynomial> brute;
  if (args.bruteforce) brute = ehrhart_bruteforce(z, z.dim() + 1);
  if (args.common.format == "json") {
    Json j{{"command", "zono hstar"},
           {"matrix", z.to_string()},
           {"dim", z.dim()},
           {"ehrhart", coeff_json(e)},
           {"hstar", coeff_json(h)},
           {"interior_points", interior.get_str()},
           {"a", coeff_json(dec.a)},
           {"b", coeff_json(dec.b)},
           {"a_real_rooted", a_rr},
           {"b_real_rooted", b_rr}};
    if (brute) j["bruteforce_agrees"] = (*brute == e);
    out << j.dump(2) << "\n";
  } else {
    out << "dim: " << z.dim() << "\n";
    out << "ehrhart: " << format_coefficients(e) << "\n";
    out << "hstar: " << format_coefficients(h) << "\n";
    out << "interior points: " << interior.get_str() << "\n";
    out << "a: " << format_coefficients(dec.a) << " real-rooted: " << yes_no(a_rr) << "\n";
    out << "b: " << format_coefficients(dec.b) << " real-rooted: " << yes_no(b_rr) << "\n";
    if (brute) out << "bruteforce agrees: " << yes_no(*brute == e) << "\n";
  }
  return brute && !(*brute == e) ? kExitMathFailure : kExitPass;
}

// ---- complex ----

struct ComplexArgs {
  std::string h;
  std::optional<int> degree;
  std::string facets;
  int ground = 0;
  std::string bases;
  std::string uniform;
  std::string graph;
  int vertices = 0;
  Common common;
};

void emit_hvector(const HVector& hv, const ComplexArgs& args, const std::string& what,
                  std::ostream& out, std::optional<bool> coloop_free = std::nullopt) {
  const Polynomial s = sd_h(hv);
  const auto dec = decompose_I(s, hv.d);
  const bool level = level_2cm_check(hv);
  const bool a_rr = dec.a.is_zero() || is_real_rooted(dec.a);
  const bool b_rr = dec.b.is_zero() || is_real_rooted(dec.b);
  const bool ai = is_alternatingly_increasing(s, hv.d);
  if (args.common.format == "json") {
    Json j{{"command", "complex " + what},
           {"d", hv.d.value()},
           {"h", list_json(hv.h)},
           {"partial_sum_condition", level},
           {"sd_h", coeff_json(s)},
           {"a", coeff_json(dec.a)},
           {"b", coeff_json(dec.b)},
           {"a_real_rooted", a_rr},
           {"b_real_rooted", b_rr},
           {"alternatingly_increasing", ai}};
    if (coloop_free) j["coloop_free"] = *coloop_free;
    out << j.dump(2) << "\n";
  } else {
    out << "d: " << hv.d.value() << "\n";
    out << "h: " << format_rational_list(hv.h) << "\n";
    if (coloop_free) out << "coloop-free: " << yes_no(*coloop_free) << "\n";
    out << "partial-sum condition: " << yes_no(level) << "\n";
    out << "h(sd): " << format_coefficients(s) << "\n";
    out << "a: " << format_coefficients(dec.a) << " real-rooted: " << yes_no(a_rr) << "\n";
    out << "b: " << format_coefficients(dec.b) << " real-rooted: " << yes_no(b_rr) << "\n";
    out << "alternatingly increasing: " << yes_no(ai) << "\n";
  }
}

int cmd_complex_sdh(const ComplexArgs& args, std::ostream& out) {
  if (!args.facets.empty()) {
    emit_hvector(complex_hvector(SimplicialComplex::parse(args.facets)), args, "sdh", out);
  } else if (!args.h.empty()) {
    const auto h = parse_rational_list(args.h);
    const int d = args.degree.value_or(static_cast<int>(h.size()) - 1);
    if (static_cast<int>(h.size()) != d + 1) throw Error(ErrorCode::kLengthMismatch, "h must have d+1 entries");
    emit_hvector(HVector{h, FormalDegree(d)}, args, "sdh", out);
  } else {
    throw Error(ErrorCode::kParseError, "complex sdh needs --hvector or --facets");
  }
  return kExitPass;
}

int cmd_complex_matroid(const ComplexArgs& args, std::ostream& out) {
  std::optional<Matroid> m;
  if (!args.uniform.empty()) {
    const auto kn = parse_rational_list(args.uniform);
    if (kn.size() != 2) throw Error(ErrorCode::kParseError, "--uniform expects k,n");
    m = Matroid::uniform(static_cast<int>(kn[0].get_num().get_si()), static_cast<int>(kn[1].get_num().get_si()));
  } else if (!args.graph.empty()) {
    const auto sc = SimplicialComplex::parse(args.graph);
    std::vector<std::pair<int, int>> edges;
    int v = args.vertices;
    for (const auto& e : sc.facets) {
      if (e.size() != 2) throw Error(ErrorCode::kParseError, "graph edges are pairs a,b");
      edges.emplace_back(e[0], e[1]);
      v = std::max({v, e[0], e[1]});
    }
    m = Matroid::graphic(v, edges);
  } else if (!args.bases.empty()) {
    m = Matroid::parse(args.ground, args.bases);
  } else {
    throw Error(ErrorCode::kParseError, "complex matroid needs --uniform, --graph or --bases");
  }
  emit_hvector(matroid_hvector(*m), args, "matroid", out, is_coloop_free(*m));
  return kExitPass;
}

// ---- verify ----

struct VerifyArgs {
  std::string suite;
  int nmax = 7;
  std::optional<std::uint64_t> seed;
  std::string json_path;
  int jobs = 1;
};

Json report_json(const SuiteReport& r) {
  Json failures = Json::array();
  for (const auto& f : r.failures) {
    failures.push_back({{"input", f.input}, {"property", f.property}, {"certificate", f.certificate}});
  }
  return {{"name", r.name},
          {"params", r.params},
          {"checks_run", r.checks_run},
          {"passed", r.passed},
          {"skipped", r.skipped},
          {"failed", static_cast<long>(r.failures.size())},
          {"failures", failures}};
}

int cmd_verify(const VerifyArgs& args, std::ostream& out) {
  SuiteOptions opt;
  opt.nmax = args.nmax;
  opt.jobs = args.jobs;
  if (args.seed) {
    opt.seed = *args.seed;
  } else if (const char* env = std::getenv("SYMDEC_SEED"); env && *env) {
    try {
      opt.seed = std::stoull(env);
    } catch (const std::exception&) {
      throw Error(ErrorCode::kParseError, "SYMDEC_SEED must be an unsigned integer");
    }
  }
  const auto reports = run_suites(args.suite, opt);
  bool ok = true;
  for (const auto& r : reports) {
    ok = ok && r.ok();
    out << r.name << ": " << (r.ok() ? "PASS" : "FAIL") << " checks=" << r.checks_run
        << " passed=" << r.passed << " skipped=" << r.skipped << " failed=" << r.failures.size()
        << "\n";
    for (const auto& f : r.failures) {
      out << "  " << f.property << " | " << f.input << " | " << f.certificate << "\n";
    }
  }
  if (!args.json_path.empty()) {
    Json j{{"command", "verify"},
           {"suite", args.suite},
           {"seed", opt.seed},
           {"nmax", opt.nmax},
           {"passed", ok}};
    Json arr = Json::array();
    for (const auto& r : reports) arr.push_back(report_json(r));
    j["suites"] = arr;
    if (args.json_path == "-") {
      out << j.dump(2) << "\n";
    } else {
      std::ofstream file(args.json_path);
      if (!file) throw Error(ErrorCode::kParseError, "cannot write " + args.json_path);
      file << j.dump(2) << "\n";
    }
  }
  return ok ? kExitPass : kExitMathFailure;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Symmetric decompositions, interlacing certificates and property suites"};
  app.require_subcommand(1);

  DecomposeArgs dargs;
  auto* dec = app.add_subcommand("decompose", "I- or R-decomposition of a polynomial");
  dec->add_option("--poly", dargs.poly, "coefficients, lowest degree first")->required();
  dec->add_option("--degree", dargs.degree, "formal degree d")->required();
  dec->add_option("--kind", dargs.kind)->check(CLI::IsMember({"I", "R"}));
  dec->add_flag("--certify", dargs.certify, "add real-rootedness and interlacing certificates");
  dec->add_flag("--expect-real-rooted", dargs.expect_real_rooted, "exit 1 unless both parts are real-rooted");
  dec->add_flag("--expect-interlacing", dargs.expect_interlacing, "exit 1 unless b < a");
  add_format(dec, dargs.common, {"plain", "json"});

  TablesArgs targs;
  auto* tab = app.add_subcommand("tables", "tables of generating polynomials");
  tab->add_option("--family", targs.family)->required()->check(CLI::IsMember({"eulerian", "derangement", "typeb"}));
  tab->add_option("--n", targs.n, "last row");
  tab->add_option("--r", targs.r, "number of colors");
  tab->add_option("--k", targs.k, "typeb: fixed last letter index");
  add_format(tab, targs.common, {"plain", "json", "csv", "latex"});

  GenArgs gargs;
  auto* gen = app.add_subcommand("gen", "one generating polynomial");
  gen->add_option("--family", gargs.family)->required()->check(CLI::IsMember({"eulerian", "derangement", "partial", "typeb"}));
  gen->add_option("--n", gargs.n)->required();
  gen->add_option("--r", gargs.r);
  gen->add_option("--k", gargs.k);
  gen->add_flag("--bruteforce", gargs.bruteforce, "count by enumeration");
  add_format(gen, gargs.common, {"plain", "json", "latex"});

  OpArgs oargs;
  auto* op = app.add_subcommand("op", "linear operators on polynomials");
  op->add_option("name", oargs.name)->required()->check(CLI::IsMember(
      {"e", "einv", "diamond", "dmap", "tk", "phik", "hfromi", "ftransform", "finverse", "reverse", "reflect", "cone"}));
  op->add_option("--poly", oargs.poly)->required();
  op->add_option("--poly2", oargs.poly2);
  op->add_option("--k", oargs.k);
  op->add_option("--degree", oargs.degree);
  op->add_option("--basis", oargs.basis)->check(CLI::IsMember({"xx1", "e", "b2", "bm"}));
  op->add_option("--m", oargs.m);
  add_format(op, oargs.common, {"plain", "json"});

  CertArgs cargs;
  auto* cert = app.add_subcommand("cert", "real-rootedness or interlacing certificate");
  cert->add_option("--p", cargs.p)->required();
  cert->add_option("--q", cargs.q, "certify p < q");
  cert->add_flag("--signed", cargs.is_signed, "allow negative leading coefficients");
  add_format(cert, cargs.common, {"plain", "json"});

  ZonoArgs zargs;
  auto* zono = app.add_subcommand("zono", "lattice zonotopes");
  zono->require_subcommand(1);
  auto* zh = zono->add_subcommand("hstar", "Ehrhart data and I-decomposition of h*");
  zh->add_option("--matrix", zargs.matrix, "rows ';', entries ','; columns are generators")->required();
  zh->add_option("--alpha", zargs.alpha, "valuation weights alpha_0..alpha_d");
  zh->add_flag("--bruteforce", zargs.bruteforce, "cross-check by lattice point enumeration");
  add_format(zh, zargs.common, {"plain", "json"});

  ComplexArgs xargs;
  auto* cx = app.add_subcommand("complex", "simplicial complexes and matroids");
  cx->require_subcommand(1);
  auto* sdh = cx->add_subcommand("sdh", "h-polynomial of the barycentric subdivision");
  sdh->add_option("--hvector", xargs.h, "h-vector h_0..h_d");
  sdh->add_option("--degree", xargs.degree);
  sdh->add_option("--facets", xargs.facets, "facets ';', vertices ','");
  add_format(sdh, xargs.common, {"plain", "json"});
  auto* mat = cx->add_subcommand("matroid", "independence complex of a matroid");
  mat->add_option("--uniform", xargs.uniform, "k,n");
  mat->add_option("--graph", xargs.graph, "edges a,b;c,d");
  mat->add_option("--vertices", xargs.vertices);
  mat->add_option("--ground", xargs.ground, "ground set size for --bases");
  mat->add_option("--bases", xargs.bases, "bases ';', elements ','");
  add_format(mat, xargs.common, {"plain", "json"});

  VerifyArgs vargs;
  auto* ver = app.add_subcommand("verify", "property suites");
  ver->add_option("suite", vargs.suite)->required()->check(CLI::IsMember({"all", "s2", "s3", "s4", "s5"}));
  ver->add_option("--nmax", vargs.nmax)->check(CLI::Range(0, 9));
  ver->add_option("--seed", vargs.seed);
  ver->add_option("--json", vargs.json_path, "write a JSON report ('-' for stdout)");
  ver->add_option("--jobs", vargs.jobs)->check(CLI::PositiveNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitPass : kExitUsage;
  }

  try {
    if (*dec) return cmd_decompose(dargs, out);
    if (*tab) return cmd_tables(targs, out);
    if (*gen) return cmd_gen(gargs, out);
    if (*op) return cmd_op(oargs, out);
    if (*cert) return cmd_cert(cargs, out);
    if (*zh) return cmd_zono_hstar(zargs, out);
    if (*sdh) return cmd_complex_sdh(xargs, out);
    if (*mat) return cmd_complex_matroid(xargs, out);
    if (*ver) return cmd_verify(vargs, out);
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return exit_for(e.code());
  }
  return kExitUsage;
}

}  // namespace symdec
