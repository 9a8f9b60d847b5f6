#ifndef POLYSPEC_REPORT_HPP
#define POLYSPEC_REPORT_HPP

// Analysis reports: one orchestrator per input kind runs every applicable
// computation and check, and serializes the results losslessly to JSON (keys
// sorted, rationals as num/den strings, roots as fixed-precision decimal
// strings).  Reports are deterministic for a given input and options, except
// for the "timing_ms" field.

#include <chrono>
#include <complex>
#include <cstdio>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "polyspec/check.hpp"
#include "polyspec/ehrhart.hpp"
#include "polyspec/errors.hpp"
#include "polyspec/hodge_ehrhart.hpp"
#include "polyspec/json_io.hpp"
#include "polyspec/lattice_polytope.hpp"
#include "polyspec/polytope_spectrum.hpp"
#include "polyspec/qpolynomial.hpp"
#include "polyspec/roots.hpp"
#include "polyspec/spectrum.hpp"
#include "polyspec/theta_family.hpp"

namespace polyspec {

struct AnalyzeOptions {
  int trunc = 0;     // series truncation order; 0 means "dim + 3"
  int mmax = 10;     // range for evaluation-based reciprocity checks
  double tol = 1e-8; // root-location tolerance
};

struct AnalysisReport {
  Json doc;             // full structured report, without the timing field
  double timing_ms = 0;

  bool all_applicable_pass() const {
    if (!doc.contains("checks")) return false;
    for (const Json& c : doc.at("checks"))
      if (c.at("status").get<std::string>() == "fail") return false;
    return true;
  }
};

namespace detail {

inline std::string double_to_string(double x) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.15g", x);
  return buf;
}

inline Json poly_to_json(const QPolynomial& p, const std::string& var) {
  Json coeffs = Json::array();
  for (int i = 0; i <= p.degree(); ++i) coeffs.push_back(rat_to_json(p.coeff(i)));
  return Json{{"coeffs", std::move(coeffs)}, {"text", p.to_string(var)}};
}

inline Json ivec_to_json(const IntVector& v) {
  Json arr = Json::array();
  for (const Int& x : v) arr.push_back(x.str());
  return arr;
}

inline Json roots_to_json(const std::vector<std::complex<double>>& roots) {
  Json arr = Json::array();
  for (const std::complex<double>& r : roots)
    arr.push_back(Json{{"im", double_to_string(r.imag())}, {"re", double_to_string(r.real())}});
  return arr;
}

class CheckLog {
 public:
  void pass(const std::string& name, const std::string& detail = "") {
    add(name, "pass", detail);
  }
  void fail(const std::string& name, const std::string& detail) { add(name, "fail", detail); }
  void not_applicable(const std::string& name, const std::string& reason) {
    add(name, "not-applicable", reason);
  }
  void verdict(const std::string& name, const Verdict& v) {
    if (v.all_pass())
      pass(name);
    else
      fail(name, v.summary());
  }
  void boolean(const std::string& name, bool ok, const std::string& fail_detail) {
    if (ok)
      pass(name);
    else
      fail(name, fail_detail);
  }

  Json json() const { return records_; }

 private:
  Json records_ = Json::array();

  void add(const std::string& name, const std::string& status, const std::string& detail) {
    records_.push_back(Json{{"detail", detail}, {"name", name}, {"status", status}});
  }
};

// The spectrum-level pipeline shared by both input kinds.  Fills the spectrum
// / theta / hodge sections of `doc` and appends the spectrum-level checks.
inline void analyze_spectrum_into(const FractionalSpectrum& spec, const AnalyzeOptions& opts,
                                  Json& doc, CheckLog& log) {
  const int n = spec.n;
  if (spec.mu() < 1) throw InputError("spectrum must contain at least one atom");

  const ThetaFamily tf = ThetaFamily::from_spectrum(spec);
  const HodgeEhrhartPolynomials polys = hodge_ehrhart_polynomials(tf);

  doc["spectrum"] = Json{{"atoms", spectrum_to_json(spec)["atoms"]},
                         {"mu", tf.mu().str()},
                         {"symmetric", spectrum_symmetry_check(spec)}};

  {
    Json classes = Json::array();
    for (const auto& [alpha, vec] : tf.classes)
      classes.push_back(Json{{"alpha", rat_to_json(alpha)}, {"vector", ivec_to_json(vec)}});
    doc["theta"] = Json{{"classes", std::move(classes)},
                        {"dim_h0", tf.dim_h0().str()},
                        {"total", ivec_to_json(tf.theta_total())}};
  }

  Json hodge;
  {
    Json per_class = Json::array();
    for (const auto& [alpha, l] : polys.per_class) {
      Json entry = poly_to_json(l, "X");
      entry["alpha"] = rat_to_json(alpha);
      per_class.push_back(std::move(entry));
    }
    hodge["per_class"] = std::move(per_class);
    hodge["total"] = poly_to_json(polys.total, "X");
  }

  // Checks that need no root finding.
  log.boolean("spectrum_symmetric", spectrum_symmetry_check(spec),
              "spectrum is not symmetric about n/2");
  log.verdict("theta_symmetry", theta_symmetry_check(tf));
  log.verdict("hodge_reciprocity", reciprocity_check(tf, polys, opts.mmax));
  log.verdict("vanishing_orders", vanishing_order_check(tf, polys));
  log.verdict("coefficient_identities", coefficient_identities(tf, polys));
  log.verdict("vieta_root_identities", root_sum_product_check(tf, polys));

  // Three-way equivalence: integral spectrum <=> palindromic total theta <=>
  // shifted self-reciprocity of the total polynomial.
  {
    const bool b_reflexive = reflexivity_kind(tf) == ReflexivityKind::reflexive;
    const IntVector theta = tf.theta_total();
    bool b_palindromic = true;
    for (int p = 0; p <= n; ++p)
      if (theta[p] != theta[n - p]) b_palindromic = false;
    const Rat sgn = (n % 2 == 0) ? 1 : -1;
    bool b_recip = true;
    for (int m = 1; m <= opts.mmax; ++m)
      if (polys.total(Rat(-m)) != sgn * polys.total(Rat(m - 1))) b_recip = false;
    std::ostringstream detail;
    detail << "reflexive: " << (b_reflexive ? "yes" : "no") << ", palindromic theta: "
           << (b_palindromic ? "yes" : "no") << ", shifted self-reciprocity: "
           << (b_recip ? "yes" : "no");
    log.boolean("reflexive_symmetric_l_reciprocity",
                b_reflexive == b_palindromic && b_palindromic == b_recip, detail.str());
  }

  try {
    const auto [a, b] = betke_mcmullen_split(tf);
    hodge["betke_mcmullen"] = Json{{"a", ivec_to_json(a)}, {"b", ivec_to_json(b)}};
    log.pass("betke_mcmullen_palindromy");
  } catch (const PalindromyViolation& e) {
    log.fail("betke_mcmullen_palindromy", e.what());
  }

  const Classification cls = classify(tf, polys, opts.tol);
  {
    Json trivial = Json::array();
    for (const Int& r : cls.trivial_roots) trivial.push_back(r.str());
    hodge["classification"] = Json{{"consistent", cls.consistent},
                                   {"dim_h0", cls.dim_h0.str()},
                                   {"kind", to_string(cls.kind)},
                                   {"mu", cls.mu.str()},
                                   {"note", cls.note},
                                   {"root_line", to_string(cls.root_line)},
                                   {"trivial_roots", std::move(trivial)}};
    hodge["roots"] = roots_to_json(find_roots(polys.total));
    log.boolean("classification_consistent", cls.consistent, cls.note);
  }

  const RvAnalysis rv = rv_analysis(tf, polys, opts.tol);
  {
    Json rv_json{{"applicable", rv.applicable}, {"reason", rv.reason}};
    if (rv.applicable) {
      rv_json["k"] = rv.k;
      rv_json["r"] = rv.r;
      rv_json["unit_part"] = ivec_to_json(rv.unit_part);
      rv_json["predicted_factors"] = poly_to_json(rv.predicted_factors, "X");
      rv_json["v"] = poly_to_json(rv.v, "X");
      rv_json["line_re"] = double_to_string(rv.line_re);
      rv_json["division_exact"] = rv.division_exact;
      rv_json["v_on_line"] = rv.v_on_line;
      rv_json["dichotomy"] = rv.dichotomy;
      log.pass("rv_applicability", rv.dichotomy_note);
      log.boolean("rv_division_exact", rv.division_exact,
                  "predicted integer factors do not divide the total polynomial");
      log.boolean("rv_v_roots_on_line", rv.v_on_line,
                  "roots of the quotient are off the predicted line");
      log.boolean("rv_dichotomy_matches_classification", rv.dichotomy, rv.dichotomy_note);
    } else {
      log.not_applicable("rv_applicability", rv.reason);
      log.not_applicable("rv_division_exact", rv.reason);
      log.not_applicable("rv_v_roots_on_line", rv.reason);
      log.not_applicable("rv_dichotomy_matches_classification", rv.reason);
    }
    hodge["rv"] = std::move(rv_json);
  }
  doc["hodge"] = std::move(hodge);
}

}  // namespace detail

inline AnalysisReport analyze_spectrum(const FractionalSpectrum& spec,
                                       const AnalyzeOptions& opts = {}) {
  const auto start = std::chrono::steady_clock::now();
  AnalysisReport report;
  detail::CheckLog log;
  report.doc["schema"] = 1;
  report.doc["kind"] = "spectrum";
  report.doc["dim"] = spec.n;
  const int trunc = opts.trunc > 0 ? opts.trunc : spec.n + 3;
  report.doc["options"] =
      Json{{"mmax", opts.mmax}, {"tol", opts.tol}, {"trunc", trunc}};

  detail::analyze_spectrum_into(spec, opts, report.doc, log);
  report.doc["checks"] = log.json();
  report.timing_ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start)
          .count();
  return report;
}

inline AnalysisReport analyze_polytope(const LatticePolytope& p,
                                       const AnalyzeOptions& opts = {}) {
  const auto start = std::chrono::steady_clock::now();
  AnalysisReport report;
  detail::CheckLog log;
  const int n = p.dim();
  const int trunc = opts.trunc > 0 ? opts.trunc : n + 3;
  report.doc["schema"] = 1;
  report.doc["kind"] = "polytope";
  report.doc["dim"] = n;
  report.doc["options"] =
      Json{{"mmax", opts.mmax}, {"tol", opts.tol}, {"trunc", trunc}};

  // Geometry section.
  const bool reflexive = reflexive_check(p);
  {
    Json facets = Json::array();
    for (const FacetInequality& f : p.facets()) {
      Json normal = Json::array();
      for (const Int& g : f.normal) normal.push_back(to_ll(g));
      facets.push_back(Json{{"normal", std::move(normal)}, {"rhs", to_ll(f.rhs)}});
    }
    report.doc["polytope"] = Json{{"facets", std::move(facets)},
                                  {"normalized_volume", p.normalized_volume().str()},
                                  {"reflexive", reflexive},
                                  {"simplicial", p.is_simplicial()},
                                  {"vertices", polytope_to_json(p)["vertices"]}};
  }

  // Counting data.
  const QPolynomial ehrhart = ehrhart_polynomial(p);
  const IntVector delta = delta_vector(p);
  std::vector<Int> counts(n + 1);
  for (int m = 0; m <= n; ++m) counts[m] = lattice_point_count(p, m);
  {
    Json counts_json = Json::array();
    for (const Int& c : counts) counts_json.push_back(c.str());
    report.doc["ehrhart"] = Json{{"counts", std::move(counts_json)},
                                 {"delta", detail::ivec_to_json(delta)},
                                 {"polynomial", detail::poly_to_json(ehrhart, "m")}};
  }

  log.boolean("delta_0_equals_1", delta[0] == 1, "delta_0 != 1");
  {
    const Int expected = counts[1] - n - 1;
    std::ostringstream detail_str;
    detail_str << "delta_1 = " << delta[1] << ", #(P) - n - 1 = " << expected;
    log.boolean("delta_1_count_identity", delta[1] == expected, detail_str.str());
  }
  {
    const Int interior = interior_lattice_point_count(p, 1);
    std::ostringstream detail_str;
    detail_str << "delta_n = " << delta[n] << ", interior count = " << interior;
    log.boolean("delta_n_interior", delta[n] == interior, detail_str.str());
  }
  {
    std::ostringstream detail_str;
    detail_str << "sum = " << sum(delta) << ", volume = " << p.normalized_volume();
    log.boolean("delta_sum_mu", sum(delta) == p.normalized_volume(), detail_str.str());
  }
  log.verdict("lower_bound", lower_bound_check(delta));
  log.verdict("ehrhart_reciprocity",
              ehrhart_reciprocity_check(p, ehrhart, std::min(opts.mmax, 5)));
  log.verdict("hibi_reflexive_equivalence", hibi_palindromic_check(p, delta));

  // Spectrum route and the bridges between the two routes.
  const FractionalSpectrum spec = spectrum_from_polytope(p);
  log.verdict("oracle_equivalence", oracle_equivalence_check(p, spec, Int(trunc)));
  detail::analyze_spectrum_into(spec, opts, report.doc, log);

  const ThetaFamily tf = ThetaFamily::from_spectrum(spec);
  {
    const IntVector theta = tf.theta_total();
    std::ostringstream detail_str;
    detail_str << "simplicial: " << (p.is_simplicial() ? "yes" : "no");
    if (theta == delta)
      log.pass("theta_equals_delta", detail_str.str());
    else
      log.fail("theta_equals_delta",
               "theta and delta vectors differ (" + detail_str.str() + ")");
  }
  {
    const HodgeEhrhartPolynomials polys = hodge_ehrhart_polynomials(tf);
    log.boolean("hodge_total_matches_ehrhart", polys.total == ehrhart,
                "total graded polynomial differs from the counting polynomial");
    const auto it0 = polys.per_class.find(Rat(0));
    const QPolynomial l0 = it0 == polys.per_class.end() ? QPolynomial() : it0->second;
    bool ok = true;
    std::ostringstream detail_str;
    for (int m = 0; m <= n + 1 && ok; ++m) {
      const Int direct = weighted_L0(p, m);
      if (l0(Rat(m)) != Rat(direct)) {
        ok = false;
        detail_str << "weighted count at m = " << m << " is " << direct << " but L0("
                   << m << ") = " << rat_to_string(l0(Rat(m)));
      }
    }
    log.boolean("weighted_l0_theta0", ok, detail_str.str());
  }

  report.doc["checks"] = log.json();
  report.timing_ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start)
          .count();
  return report;
}

inline Json report_to_json(const AnalysisReport& report) {
  Json j = report.doc;
  j["timing_ms"] = report.timing_ms;
  return j;
}

inline AnalysisReport report_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("schema") || j.at("schema") != 1)
    throw InputError("unsupported report schema");
  if (!j.contains("checks") || !j.at("checks").is_array())
    throw InputError("report has no checks array");
  AnalysisReport report;
  report.doc = j;
  if (j.contains("timing_ms")) {
    report.timing_ms = j.at("timing_ms").get<double>();
    report.doc.erase("timing_ms");
  }
  return report;
}

inline std::string report_to_text(const AnalysisReport& report) {
  const Json& d = report.doc;
  std::ostringstream out;
  out << "kind: " << d.at("kind").get<std::string>() << "  dim: " << d.at("dim").get<int>()
      << "\n";

  if (d.contains("polytope")) {
    const Json& poly = d.at("polytope");
    out << "vertices: " << poly.at("vertices").size() << "  facets: "
        << poly.at("facets").size() << "  simplicial: "
        << (poly.at("simplicial").get<bool>() ? "yes" : "no") << "  reflexive: "
        << (poly.at("reflexive").get<bool>() ? "yes" : "no") << "\n";
    out << "normalized volume: " << poly.at("normalized_volume").get<std::string>() << "\n";
    const Json& ehr = d.at("ehrhart");
    out << "counting polynomial: " << ehr.at("polynomial").at("text").get<std::string>()
        << "\n";
    out << "delta: (";
    for (std::size_t i = 0; i < ehr.at("delta").size(); ++i)
      out << (i ? ", " : "") << ehr.at("delta")[i].get<std::string>();
    out << ")\n";
  }

  {
    const Json& spec = d.at("spectrum");
    out << "spectrum: {";
    for (std::size_t i = 0; i < spec.at("atoms").size(); ++i) {
      const Json& atom = spec.at("atoms")[i];
      const long long num = atom[0].get<long long>(), den = atom[1].get<long long>();
      out << (i ? ", " : "") << num;
      if (den != 1) out << "/" << den;
      out << ": " << atom[2].get<long long>();
    }
    out << "}  mu: " << spec.at("mu").get<std::string>() << "  symmetric: "
        << (spec.at("symmetric").get<bool>() ? "yes" : "no") << "\n";
  }

  {
    const Json& theta = d.at("theta");
    out << "theta classes:\n";
    for (const Json& cls : theta.at("classes")) {
      out << "  alpha = " << cls.at("alpha").at("num").get<std::string>();
      if (cls.at("alpha").at("den").get<std::string>() != "1")
        out << "/" << cls.at("alpha").at("den").get<std::string>();
      out << ": (";
      for (std::size_t i = 0; i < cls.at("vector").size(); ++i)
        out << (i ? ", " : "") << cls.at("vector")[i].get<std::string>();
      out << ")\n";
    }
  }

  {
    const Json& hodge = d.at("hodge");
    out << "graded polynomials:\n";
    for (const Json& entry : hodge.at("per_class")) {
      out << "  alpha = " << entry.at("alpha").at("num").get<std::string>();
      if (entry.at("alpha").at("den").get<std::string>() != "1")
        out << "/" << entry.at("alpha").at("den").get<std::string>();
      out << ": " << entry.at("text").get<std::string>() << "\n";
    }
    out << "total: " << hodge.at("total").at("text").get<std::string>() << "\n";
    const Json& cls = hodge.at("classification");
    out << "classification: " << cls.at("kind").get<std::string>() << "  root line: "
        << cls.at("root_line").get<std::string>() << "  consistent: "
        << (cls.at("consistent").get<bool>() ? "yes" : "no") << "\n";
    out << "roots:";
    for (const Json& r : hodge.at("roots"))
      out << " (" << r.at("re").get<std::string>() << ", " << r.at("im").get<std::string>()
          << ")";
    out << "\n";
    if (hodge.contains("rv") && hodge.at("rv").at("applicable").get<bool>()) {
      const Json& rv = hodge.at("rv");
      out << "factorization: k = " << rv.at("k").get<int>() << "  r = " << rv.at("r").get<int>()
          << "  v = " << rv.at("v").at("text").get<std::string>() << "  line: Re = "
          << rv.at("line_re").get<std::string>() << "\n";
    }
  }

  std::size_t passes = 0, fails = 0, nas = 0;
  out << "checks:\n";
  for (const Json& c : d.at("checks")) {
    const std::string status = c.at("status").get<std::string>();
    if (status == "pass") ++passes;
    else if (status == "fail") ++fails;
    else ++nas;
    out << "  [" << status << "] " << c.at("name").get<std::string>();
    const std::string detail = c.at("detail").get<std::string>();
    if (!detail.empty() && status != "pass") out << " -- " << detail;
    out << "\n";
  }
  out << "result: " << (fails == 0 ? "PASS" : "FAIL") << " (" << passes << " passed, " << fails
      << " failed, " << nas << " not applicable)\n";
  return out.str();
}

}  // namespace polyspec

#endif  // POLYSPEC_REPORT_HPP
