#include "oddgirth/report.hpp"

#include <cmath>
#include <iomanip>
#include <sstream>

namespace oddgirth {

namespace {

using nlohmann::json;

json number_or_null(double v) { return std::isfinite(v) ? json(v) : json(nullptr); }

json girth_json(const OddGirth& g) { return g.is_finite() ? json(g.value()) : json("inf"); }

json certificate_json(const Certificate& c) {
  return {{"ran", c.ran}, {"pass", c.pass}, {"residual", number_or_null(c.residual)}, {"tolerance", c.tolerance}};
}

json array_json(const IntersectionArray& ia) {
  const auto d = static_cast<std::ptrdiff_t>(ia.diameter());
  return {{"b", std::vector<int>(ia.b.begin(), ia.b.begin() + d)},
          {"c", std::vector<int>(ia.c.begin() + 1, ia.c.end())},
          {"a", ia.a},
          {"diameter", ia.diameter()}};
}

}  // namespace

json report_to_json(const TheoremReport& rep, std::string_view input) {
  json j;
  j["input"] = std::string(input);
  j["n"] = rep.n;

  json spec = json::array();
  if (rep.spectrum)
    for (const auto& e : rep.spectrum->eigs) spec.push_back({e.value, e.multiplicity});
  j["spectrum"] = spec;
  j["d"] = rep.d();
  j["odd_girth"] = girth_json(rep.hypotheses.odd_girth);

  const auto& h = rep.hypotheses;
  j["hypotheses"] = {{"connected", h.connected},
                     {"eigenvalue_count", h.eigenvalue_count},
                     {"odd_girth", girth_json(h.odd_girth)},
                     {"hypothesis_met", h.hypothesis_met},
                     {"odd_girth_equals_2d_plus_1", h.odd_girth_equals_2d_plus_1}};

  const auto& c = rep.certificates;
  j["certificates"] = {{"lemma1", certificate_json(c.lemma1)},
                       {"vandermonde", certificate_json(c.vandermonde)},
                       {"walk_regular", certificate_json(c.walk_regular)},
                       {"regular", certificate_json(c.regular)},
                       {"idempotents", certificate_json(c.idempotents)},
                       {"hoffman", certificate_json(c.hoffman)},
                       {"parity", certificate_json(c.parity)},
                       {"pd_equals_Ad", certificate_json(c.pd_equals_Ad)}};

  const auto& k = rep.conclusion;
  json concl = {{"applicable", k.applicable},
                {"distance_regular", k.applicable ? json(k.distance_regular) : json(nullptr)},
                {"intersection_array", k.intersection_array ? array_json(*k.intersection_array) : json(nullptr)},
                {"generalized_odd_graph", k.generalized_odd_graph},
                {"witness", nullptr}};
  if (k.witness)
    concl["witness"] = {{"u", k.witness->u},
                        {"v", k.witness->v},
                        {"distance", k.witness->distance},
                        {"description", k.witness->to_string()}};
  j["conclusion"] = concl;

  if (rep.lemma1_detail) j["lemma1"] = {{"pass", rep.lemma1_detail->pass}, {"witness", rep.lemma1_detail->witness}};
  if (rep.vandermonde_detail) {
    const auto& v = *rep.vandermonde_detail;
    j["vandermonde"] = {{"determinant", v.det_value},
                        {"proportionality", std::vector<double>(v.proportionality.data(),
                                                                v.proportionality.data() + v.proportionality.size())},
                        {"residual", number_or_null(v.residual)},
                        {"reciprocal_condition", v.reciprocal_condition},
                        {"ill_conditioned", v.ill_conditioned}};
  }
  if (rep.recurrence) {
    auto vec = [](const Eigen::VectorXd& x) { return std::vector<double>(x.data(), x.data() + x.size()); };
    j["recurrence"] = {{"alpha", vec(rep.recurrence->alpha)},
                       {"beta", vec(rep.recurrence->beta)},
                       {"gamma", vec(rep.recurrence->gamma)},
                       {"residual", rep.recurrence->residual}};
  }
  if (rep.excess && rep.excess->applicable)
    j["excess"] = {{"spectral", rep.excess->spectral_excess}, {"average", rep.excess->average_excess}};

  const auto& t = rep.tolerances;
  j["tolerances"] = {{"cluster", t.cluster ? json(*t.cluster) : json(nullptr)},
                     {"matrix", t.matrix},
                     {"certificate", t.certificate},
                     {"lemma1", t.lemma1},
                     {"parity", t.parity ? json(*t.parity) : json(nullptr)}};
  if (rep.spectrum) j["tolerances"]["cluster_min_gap"] = number_or_null(rep.spectrum->min_gap);
  j["warnings"] = rep.warnings;
  return j;
}

std::string report_to_text(const TheoremReport& rep, std::string_view input) {
  std::ostringstream os;
  os << std::setprecision(10);
  os << "input: " << input << "\n";
  os << "order: " << rep.n << "\n";
  os << "spectrum:";
  if (rep.spectrum)
    for (const auto& e : rep.spectrum->eigs) os << ' ' << e.value << '^' << e.multiplicity;
  os << "\n";
  const auto& h = rep.hypotheses;
  os << "d: " << rep.d() << ", odd girth: " << h.odd_girth.to_string()
     << ", connected: " << (h.connected ? "yes" : "no") << "\n";
  os << "hypothesis met: " << (h.hypothesis_met ? "yes" : "no") << "\n";
  if (!h.hypothesis_met) {
    os << "conclusion: not applicable\n";
  } else {
    const auto& c = rep.certificates;
    const std::pair<const char*, const Certificate*> rows[] = {
        {"lemma1", &c.lemma1},         {"vandermonde", &c.vandermonde}, {"walk_regular", &c.walk_regular},
        {"regular", &c.regular},       {"idempotents", &c.idempotents}, {"hoffman", &c.hoffman},
        {"parity", &c.parity},         {"pd_equals_Ad", &c.pd_equals_Ad}};
    for (const auto& [name, cert] : rows)
      os << "  " << std::left << std::setw(14) << name << (cert->pass ? "pass" : "FAIL")
         << (cert == &c.lemma1 ? "  margin " : "  residual ") << cert->residual << "\n";
    const auto& k = rep.conclusion;
    os << "distance-regular: " << (k.distance_regular ? "yes" : "no");
    if (k.intersection_array) os << " " << k.intersection_array->to_string();
    os << "\n";
    if (k.witness) os << "witness: " << k.witness->to_string() << "\n";
    os << "generalized odd graph: " << (k.generalized_odd_graph ? "yes" : "no") << "\n";
    if (rep.alarm()) os << "ALARM: hypotheses met but a certificate failed\n";
  }
  for (const auto& w : rep.warnings) os << "warning: " << w << "\n";
  return os.str();
}

}  // namespace oddgirth
