// cctp: generate and verify cross-bedding cubical tori and the polytopes
// built from them.
//
//   cctp generate --family {cct|cct-rational|cct-inscribed|pcctp} --n N
//                 [--precision BITS] [--certify {none|per-step|final}]
//                 [--out PATH] [--format {json|off|csv}] [--workers W]
//   cctp verify --in PATH [--checks ideal,convex,...] [--out PATH]
//
// Exit codes: 0 pass, 1 a certificate failed, 2 schema or usage error.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "cct/convex.hpp"
#include "cct/dual.hpp"
#include "cct/io.hpp"
#include "cct/projective.hpp"
#include "cct/variants.hpp"

namespace {

using namespace cct;

struct RunConfig {
  std::string family = "cct";
  int n = 1;
  long precision = 256;
  std::string certify = "final";
  std::string out;
  std::string format = "json";
  unsigned workers = 0;
};

struct VerifyConfig {
  std::string in;
  std::string checks;
  std::string out;
};

int exit_code_for(ErrorCode c) {
  return (c == ErrorCode::Schema || c == ErrorCode::Precondition) ? 2 : 1;
}

void emit(const std::string& text, const std::string& path) {
  if (path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(path);
  if (!f) throw Error(ErrorCode::Precondition, "cannot write " + path);
  f << text;
}

json ideal_json(const IdealityCertificate& c) {
  return {{"passed", c.passed()},         {"symmetric", c.symmetric}, {"transversal", c.transversal},
          {"slope_obtuse", c.slope_obtuse}, {"oriented", c.oriented},   {"failures", c.failures}};
}

template <class T>
json convex_json(const ConvexityCertificate<T>& c) {
  json j = {{"passed", c.passed}, {"mode", cert_mode_name(c.mode)}, {"facets", c.facets.size()}};
  if (c.violation) j["violation"] = {{"facet", c.violation->first}, {"vertex", c.violation->second}};
  if (!c.message.empty()) j["message"] = c.message;
  return j;
}

// Final certificate bundle for an exact complex: ideality and convex position.
bool certify_exact(const SymmetricCCT<FieldElement>& t, json& certs) {
  IdealityCertificate ideal = check_ideal(t);
  certs["ideal"] = ideal_json(ideal);
  bool ok = ideal.passed();
  if (t.width >= 3) {
    auto convex = check_convex_position(t);
    certs["convex"] = convex_json(convex);
    ok = ok && convex.passed;
  }
  return ok;
}

int cmd_generate(const RunConfig& cfg) {
  if (cfg.workers > 0) setenv("CCT_WORKERS", std::to_string(cfg.workers).c_str(), 1);
  if (cfg.n < 1) throw Error(ErrorCode::Precondition, "--n must be at least 1");
  ExtendOptions opt;
  opt.certify = cfg.certify == "per-step";
  opt.cross_check = cfg.certify != "none";
  const bool final_certs = cfg.certify != "none";
  bool ok = true;
  json doc;
  json certs = json::object();

  if (cfg.family == "cct" || cfg.family == "cct-rational") {
    SymmetricCCT<FieldElement> t;
    json exported;
    if (cfg.family == "cct") {
      t = cts(cfg.n, opt);
    } else {
      RationalCCT r = build_rational(cfg.n, true, opt);
      t = r.complex;
      exported = json::array();
      for (const auto& v : r.exported) exported.push_back(vec_to_json(v));
    }
    if (cfg.format == "csv") {
      emit(csv_table(t), cfg.out);
    } else if (cfg.format == "off") {
      emit(off_file(t), cfg.out);
    }
    if (final_certs) ok = certify_exact(t, certs);
    if (cfg.format == "json") {
      doc = document(cfg.family, cfg.n, "exact");
      doc["complex"] = complex_to_json(t);
      if (!exported.is_null()) doc["theta_vertices"] = exported;
    }
  } else if (cfg.family == "cct-inscribed") {
    InscribedCCT r = build_inscribed(cfg.n, cfg.precision);
    if (cfg.format == "csv") {
      emit(csv_table(r.complex), cfg.out);
    } else if (cfg.format == "off") {
      emit(off_file(r.complex), cfg.out);
    }
    QuadricReport q = check_quadric_propagation(r.complex, r.sphere);
    certs["sphere"] = {{"passed", q.passed},
                       {"max_residual", q.max_residual.str(6)},
                       {"vertices_checked", q.vertices_checked},
                       {"tolerance", r.sphere.tolerance.str(6)}};
    ok = q.passed;
    if (cfg.format == "json") {
      doc = document(cfg.family, cfg.n, "float");
      doc["precision"] = cfg.precision;
      doc["complex"] = complex_to_json(r.complex);
      doc["sphere"] = {{"u", vec_to_json(r.sphere.u)}, {"c", r.sphere.c.str()}};
    }
  } else if (cfg.family == "pcctp") {
    if (cfg.format != "json") throw Error(ErrorCode::Precondition, "pcctp is exported as JSON only");
    PcctpResult r = build_pcctp(cfg.n, opt);
    certs["rank"] = {{"passed", true},
                     {"affine_dimension", r.polytope.dimension()},
                     {"linear_rank", r.polytope.linear_rank},
                     {"sphere_dim", r.polytope.sphere_dim},
                     {"vertex_count", r.polytope.vertices.size()},
                     {"expected_vertex_count", pcctp_vertex_count(cfg.n)}};
    certs["wedge"] = {{"passed", true}, {"normal", vec_to_json(r.triple.wedge_normal)}};
    certs["hemisphere"] = {{"passed", true}, {"normal", vec_to_json(r.cone.hemisphere.normal)}};
    certs["framing"] = {{"assumption", r.triple.framing_basis}};
    doc = document(cfg.family, cfg.n, "exact");
    json verts = json::array();
    for (const auto& v : r.polytope.vertices) verts.push_back(vec_to_json(v));
    doc["vertices"] = verts;
  } else {
    throw Error(ErrorCode::Precondition, "unknown family '" + cfg.family + "'");
  }

  if (cfg.format == "json") {
    doc["certify"] = cfg.certify;
    doc["certificates"] = certs;
    doc["passed"] = ok;
    emit(doc.dump(2) + "\n", cfg.out);
  } else if (!ok) {
    std::cerr << json{{"schema", kSchema}, {"certificates", certs}, {"passed", false}}.dump(2) << "\n";
  }
  return ok ? 0 : 1;
}

std::vector<std::string> split_checks(const std::string& s) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (!item.empty()) out.push_back(item);
  }
  return out;
}

bool verify_exact(const SymmetricCCT<FieldElement>& t, const std::string& check, json& rep) {
  if (check == "ideal") {
    auto c = check_ideal(t);
    rep = ideal_json(c);
    return c.passed();
  }
  if (check == "convex") {
    auto c = check_convex_position(t);
    rep = convex_json(c);
    return c.passed;
  }
  if (check == "local") {
    auto c = check_local_convex_position(t);
    rep = convex_json(c.certificate);
    rep["passed"] = c.passed;
    if (c.witness) rep["witness_vertex"] = *c.witness;
    return c.passed;
  }
  if (check == "width3") {
    auto c = check_width3_criterion(t);
    rep = {{"passed", c.passed()},
           {"ideal", c.ideal},
           {"local_hypothesis", c.local_hypothesis},
           {"global_conclusion", c.global_conclusion},
           {"dihedral", c.dihedral},
           {"implication_holds", c.implication_holds()},
           {"failures", c.failures}};
    return c.passed();
  }
  if (check == "avh") {
    auto c = check_avh_hypotheses(t);
    rep = {{"passed", c.hypotheses()},
           {"bottom_fattening", c.bottom_fattening},
           {"top_fattening", c.top_fattening},
           {"locally_convex", c.locally_convex},
           {"brute", c.brute},
           {"agrees_with_brute", c.agrees()},
           {"failures", c.failures}};
    return c.hypotheses() && c.agrees();
  }
  if (check == "reciprocal") {
    auto cert = check_convex_position(t);
    if (!cert.passed) {
      rep = {{"passed", false}, {"reason", "not in convex position: " + cert.message}};
      return false;
    }
    auto d = build_polar_dual(t, cert);
    auto c = check_reciprocal(control_cct(t), d.projected);
    rep = {{"passed", c.passed()},
           {"reciprocal", c.reciprocal},
           {"orientation_preserving", c.orientation_preserving},
           {"edges_checked", c.edges_checked},
           {"failures", c.failures}};
    return c.passed();
  }
  if (check == "sphere") {
    auto w = fit_sphere(t, 256, false);
    auto q = check_quadric_propagation(t, w);
    rep = {{"passed", q.passed}, {"max_residual", q.max_residual.str(6)}, {"worst_vertex", q.worst_vertex}};
    return q.passed;
  }
  throw Error(ErrorCode::Precondition, "unknown check '" + check + "'");
}

int cmd_verify(const VerifyConfig& cfg) {
  std::ifstream f(cfg.in);
  if (!f) throw Error(ErrorCode::Precondition, "cannot read " + cfg.in);
  json doc;
  try {
    doc = json::parse(f);
  } catch (const json::parse_error& e) {
    throw Error(ErrorCode::Schema, e.what());
  }
  require_schema(doc);
  std::string family = detail::field(doc, "family").get<std::string>();
  std::vector<std::string> checks = split_checks(cfg.checks);
  if (checks.empty()) {
    if (family == "cct-inscribed") {
      checks = {"sphere"};
    } else if (family == "pcctp") {
      checks = {"rank"};
    } else {
      checks = {"ideal", "convex"};
    }
  }
  json report = {{"schema", kSchema}, {"input", cfg.in}, {"family", family}, {"checks", json::object()}};
  bool ok = true;
  if (family == "cct" || family == "cct-rational") {
    SymmetricCCT<FieldElement> t = exact_complex_from_json(doc);
    for (const auto& c : checks) {
      json rep;
      try {
        ok = verify_exact(t, c, rep) && ok;
      } catch (const Error& e) {
        if (e.code() == ErrorCode::Schema || e.code() == ErrorCode::Precondition) throw;
        rep = {{"passed", false}, {"error", {{"code", error_name(e.code())}, {"message", e.what()}}}};
        ok = false;
      }
      report["checks"][c] = rep;
    }
  } else if (family == "cct-inscribed") {
    long prec = detail::field(doc, "precision").get<long>();
    SymmetricCCT<BigFloat> t = float_complex_from_json(doc, prec);
    for (const auto& c : checks) {
      if (c != "sphere") throw Error(ErrorCode::Precondition, "check '" + c + "' needs an exact complex");
      auto w = fit_sphere(t, prec);
      auto q = check_quadric_propagation(t, w);
      report["checks"][c] = {{"passed", q.passed}, {"max_residual", q.max_residual.str(6)}};
      ok = ok && q.passed;
    }
  } else if (family == "pcctp") {
    int n = detail::field(doc, "n").get<int>();
    std::vector<Point> verts;
    for (const auto& v : detail::field(doc, "vertices")) {
      Point p;
      for (const auto& x : v) p.push_back(field_from_json(x));
      verts.push_back(std::move(p));
    }
    for (const auto& c : checks) {
      if (c != "rank") throw Error(ErrorCode::Precondition, "check '" + c + "' does not apply to pcctp");
      if (verts.empty()) throw Error(ErrorCode::Schema, "no vertices");
      EchelonBasis<FieldElement> eb(verts[0].size());
      for (const auto& v : verts) {
        if (v.size() != verts[0].size()) throw Error(ErrorCode::Schema, "ragged vertex list");
        eb.insert(v);
      }
      bool pass = eb.rank() == 70 && verts.size() == pcctp_vertex_count(n);
      report["checks"][c] = {{"passed", pass}, {"affine_dimension", eb.rank() - 1}, {"vertex_count", verts.size()}};
      ok = ok && pass;
    }
  } else {
    throw Error(ErrorCode::Schema, "unknown family '" + family + "'");
  }
  report["passed"] = ok;
  emit(report.dump(2) + "\n", cfg.out);
  return ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Cross-bedding cubical tori: generation and certification"};
  app.require_subcommand(1);

  RunConfig gen;
  auto* g = app.add_subcommand("generate", "Build a complex or polytope and write it out");
  g->add_option("--family", gen.family, "Family")
      ->check(CLI::IsMember({"cct", "cct-rational", "cct-inscribed", "pcctp"}))
      ->required();
  g->add_option("--n", gen.n, "Width or index")->required();
  g->add_option("--precision", gen.precision, "Bits for the float backend");
  g->add_option("--certify", gen.certify, "Certification mode")->check(CLI::IsMember({"none", "per-step", "final"}));
  g->add_option("--out", gen.out, "Output path (stdout if omitted)");
  g->add_option("--format", gen.format, "Output format")->check(CLI::IsMember({"json", "off", "csv"}));
  g->add_option("--workers", gen.workers, "Worker threads (overrides CCT_WORKERS)");

  VerifyConfig ver;
  auto* v = app.add_subcommand("verify", "Re-check a generated file");
  v->add_option("--in", ver.in, "Input JSON")->required();
  v->add_option("--checks", ver.checks, "Comma-separated: ideal,convex,local,width3,avh,reciprocal,sphere,rank");
  v->add_option("--out", ver.out, "Report path (stdout if omitted)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  try {
    if (g->parsed()) return cmd_generate(gen);
    return cmd_verify(ver);
  } catch (const Error& e) {
    json err = {{"schema", kSchema}, {"error", {{"code", error_name(e.code())}, {"message", e.what()}}}};
    std::cout << err.dump(2) << "\n";
    return exit_code_for(e.code());
  }
}
