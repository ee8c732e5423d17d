#include "oddgirth/drg_verify.hpp"

#include "oddgirth/errors.hpp"
#include "oddgirth/polynomial.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <sstream>

namespace oddgirth {

Eigen::MatrixXd DistanceMatrices::at_or_zero(int i) const {
  if (i >= 0 && i <= diameter()) return mats[static_cast<std::size_t>(i)];
  const Eigen::Index n = mats.front().rows();
  return Eigen::MatrixXd::Zero(n, n);
}

DistanceMatrices distance_matrices(const Graph& g) {
  const DistanceData dd = distance_data(g);
  if (!dd.connected) throw InputError("distance matrices require a connected graph");
  const int n = g.order();
  DistanceMatrices out;
  out.mats.assign(static_cast<std::size_t>(dd.diameter + 1), Eigen::MatrixXd::Zero(n, n));
  for (int u = 0; u < n; ++u)
    for (int v = 0; v < n; ++v) out.mats[static_cast<std::size_t>(dd.dist(u, v))](u, v) = 1.0;
  return out;
}

std::string IntersectionArray::to_string() const {
  std::ostringstream os;
  os << '{';
  for (int i = 0; i < diameter(); ++i) os << (i ? "," : "") << b[static_cast<std::size_t>(i)];
  os << ';';
  for (int i = 1; i <= diameter(); ++i) os << (i > 1 ? "," : "") << c[static_cast<std::size_t>(i)];
  os << '}';
  return os.str();
}

std::string NotDistanceRegular::to_string() const {
  std::ostringstream os;
  os << "pair (" << u << "," << v << ") at distance " << distance << " has (c,a,b) = (" << found[0] << ","
     << found[1] << "," << found[2] << "), expected (" << expected[0] << "," << expected[1] << "," << expected[2]
     << ")";
  return os.str();
}

IntersectionResult intersection_array(const Graph& g) {
  const DistanceData dd = distance_data(g);
  if (!dd.connected) throw InputError("intersection array requires a connected graph");
  const int n = g.order();
  const int diam = dd.diameter;
  std::vector<std::array<int, 3>> counts(static_cast<std::size_t>(diam + 1));
  std::vector<char> seen(static_cast<std::size_t>(diam + 1), 0);

  for (int u = 0; u < n; ++u) {
    for (int v = 0; v < n; ++v) {
      const int i = dd.dist(u, v);
      std::array<int, 3> cab{0, 0, 0};
      for (int w : g.neighbors(v)) ++cab[static_cast<std::size_t>(dd.dist(u, w) - i + 1)];
      if (!seen[i]) {
        seen[i] = 1;
        counts[i] = cab;
      } else if (counts[i] != cab) {
        NotDistanceRegular nd;
        nd.u = u;
        nd.v = v;
        nd.distance = i;
        std::copy(counts[i].begin(), counts[i].end(), nd.expected);
        std::copy(cab.begin(), cab.end(), nd.found);
        return nd;
      }
    }
  }
  IntersectionArray ia;
  for (int i = 0; i <= diam; ++i) {
    ia.c.push_back(counts[i][0]);
    ia.a.push_back(counts[i][1]);
    ia.b.push_back(counts[i][2]);
  }
  return ia;
}

CheckOutcome check_pd_equals_Ad(const Graph& g, const PredistanceSystem& ps, double tol) {
  CheckOutcome out;
  if (!g.regular_degree()) {
    out.applicable = false;
    return out;
  }
  const DistanceMatrices dm = distance_matrices(g);
  const Eigen::MatrixXd pd = evaluate_at_matrix(ps[ps.d()], g.adjacency_as<double>());
  out.residual = (pd - dm.at_or_zero(ps.d())).cwiseAbs().maxCoeff();
  out.pass = out.residual <= tol;
  return out;
}

CheckOutcome check_hoffman(const Graph& g, const PredistanceSystem& ps, double tol) {
  CheckOutcome out;
  if (!g.regular_degree()) {
    out.applicable = false;
    return out;
  }
  const Eigen::MatrixXd h = evaluate_at_matrix(hoffman_polynomial(ps), g.adjacency_as<double>());
  out.residual = (h.array() - 1.0).abs().maxCoeff();
  out.pass = out.residual <= tol;
  return out;
}

ExcessComparison excess_comparison(const Graph& g, const PredistanceSystem& ps) {
  ExcessComparison out;
  if (!g.regular_degree()) {
    out.applicable = false;
    return out;
  }
  const DistanceData dd = distance_data(g);
  if (!dd.connected) throw InputError("excess comparison requires a connected graph");
  const int d = ps.d();
  out.spectral_excess = ps[d](ps.spectrum.value(0));
  out.average_excess = static_cast<double>((dd.dist.array() == d).count()) / g.order();
  return out;
}

Lemma1Result lemma1_check(const Spectrum& s, double tol) {
  Lemma1Result out;
  out.margin = std::numeric_limits<double>::infinity();
  const int count = s.d() + 1;
  // A zero eigenvalue is reported ahead of any +/- pair.
  for (int i = 0; i < count; ++i) {
    const double li = s.value(i);
    out.margin = std::min(out.margin, std::abs(li));
    if (out.pass && std::abs(li) <= tol) {
      out.pass = false;
      out.witness = {li};
    }
  }
  for (int i = 0; i < count; ++i) {
    for (int j = i + 1; j < count; ++j) {
      const double sum = std::abs(s.value(i) + s.value(j));
      out.margin = std::min(out.margin, sum);
      if (out.pass && sum <= tol) {
        out.pass = false;
        out.witness = {s.value(i), s.value(j)};
      }
    }
  }
  return out;
}

Eigen::MatrixXd odd_power_matrix(const Spectrum& s) {
  const int d = s.d();
  Eigen::MatrixXd m(d, d);
  for (int l = 1; l <= d; ++l)
    for (int i = 1; i <= d; ++i) m(l - 1, i - 1) = std::pow(s.value(i), 2 * l - 1);
  return m;
}

VandermondeCertificate vandermonde_certificate(const Spectrum& s, const LocalMultiplicities& lm) {
  const int d = s.d();
  VandermondeCertificate cert;

  cert.det_value = 1.0;
  for (int i = 1; i <= d; ++i) {
    cert.det_value *= s.value(i);
    for (int j = 1; j < i; ++j) cert.det_value *= s.value(i) * s.value(i) - s.value(j) * s.value(j);
  }

  cert.proportionality = Eigen::VectorXd::Ones(d + 1);
  cert.reciprocal_condition = 1.0;
  if (d > 0) {
    const double lambda0 = s.value(0);
    Eigen::VectorXd rhs(d);
    for (int l = 1; l <= d; ++l) rhs[l - 1] = -std::pow(lambda0, 2 * l - 1);
    const Eigen::FullPivLU<Eigen::MatrixXd> lu(odd_power_matrix(s));
    cert.reciprocal_condition = lu.rcond();
    cert.ill_conditioned = !lu.isInvertible() || cert.reciprocal_condition < 1e-12;
    if (lu.isInvertible()) cert.proportionality.tail(d) = lu.solve(rhs);
    else cert.proportionality.tail(d).setConstant(std::numeric_limits<double>::quiet_NaN());
  }

  const Eigen::RowVectorXd expected = cert.proportionality.transpose() / cert.proportionality.sum();
  cert.residual = (lm.m.rowwise() - expected).cwiseAbs().maxCoeff();
  if (!std::isfinite(cert.residual)) cert.residual = std::numeric_limits<double>::infinity();
  return cert;
}

bool TheoremReport::all_certificates_pass() const {
  if (!hypotheses.hypothesis_met) return true;
  const auto& c = certificates;
  for (const Certificate* cert : {&c.lemma1, &c.vandermonde, &c.walk_regular, &c.regular, &c.idempotents,
                                  &c.hoffman, &c.parity, &c.pd_equals_Ad})
    if (!cert->ran || !cert->pass) return false;
  return conclusion.distance_regular && conclusion.generalized_odd_graph;
}

namespace {

Certificate make_certificate(bool pass, double residual, double tolerance) {
  return Certificate{true, pass, residual, tolerance};
}

}  // namespace

TheoremReport verify_theorem(const Graph& g, const Tolerances& tol) {
  TheoremReport rep;
  rep.n = g.order();
  rep.tolerances = tol;
  if (!rep.tolerances.cluster) rep.tolerances.cluster = default_cluster_tolerance(g);

  auto& hyp = rep.hypotheses;
  hyp.connected = is_connected(g);
  rep.spectrum = spectrum(g, rep.tolerances.cluster);
  const Spectrum& s = *rep.spectrum;
  rep.warnings.insert(rep.warnings.end(), s.warnings.begin(), s.warnings.end());
  hyp.eigenvalue_count = s.d() + 1;
  hyp.odd_girth = odd_girth(g);
  const int d = s.d();
  hyp.hypothesis_met = hyp.connected && hyp.odd_girth.is_finite() && hyp.odd_girth.value() >= 2 * d + 1;
  hyp.odd_girth_equals_2d_plus_1 = hyp.odd_girth.is_finite() && hyp.odd_girth.value() == 2 * d + 1;
  if (!hyp.hypothesis_met) return rep;

  if (!hyp.odd_girth_equals_2d_plus_1)
    rep.warnings.push_back("odd girth exceeds 2d+1; the theorem predicts this cannot happen");

  auto& certs = rep.certificates;

  rep.lemma1_detail = lemma1_check(s, tol.lemma1);
  certs.lemma1 = make_certificate(rep.lemma1_detail->pass, rep.lemma1_detail->margin, tol.lemma1);

  const IdempotentSet ids = idempotents(g, s);
  const double id_residual = idempotent_residuals(g, s, ids).worst();
  certs.idempotents = make_certificate(id_residual <= tol.matrix, id_residual, tol.matrix);

  const LocalMultiplicities lm = local_multiplicities(ids);
  rep.vandermonde_detail = vandermonde_certificate(s, lm);
  if (rep.vandermonde_detail->ill_conditioned) rep.warnings.push_back("ill-conditioned odd-moment system");
  certs.vandermonde = make_certificate(rep.vandermonde_detail->residual <= tol.certificate,
                                       rep.vandermonde_detail->residual, tol.certificate);

  const double spread = walk_regularity_spread(lm);
  certs.walk_regular = make_certificate(spread <= tol.certificate, spread, tol.certificate);

  const auto degree = g.regular_degree();
  certs.regular = make_certificate(degree.has_value(), degree ? 0.0 : 1.0, 0.0);

  const PredistanceSystem ps = predistance_polynomials(s);
  rep.recurrence = ps.recurrence;

  const CheckOutcome hoffman = check_hoffman(g, ps, tol.matrix);
  certs.hoffman = make_certificate(hoffman.applicable && hoffman.pass,
                                   hoffman.applicable ? hoffman.residual : std::numeric_limits<double>::infinity(),
                                   tol.matrix);

  rep.parity_detail = check_parity(ps, hyp.odd_girth, tol.parity);
  const auto& par = *rep.parity_detail;
  certs.parity = make_certificate(par.pass(), std::max(par.max_alpha_below_d, par.max_wrong_parity_coeff),
                                  par.alpha_tol);

  const CheckOutcome pd = check_pd_equals_Ad(g, ps, tol.matrix);
  certs.pd_equals_Ad = make_certificate(pd.applicable && pd.pass,
                                        pd.applicable ? pd.residual : std::numeric_limits<double>::infinity(),
                                        tol.matrix);

  if (degree) rep.excess = excess_comparison(g, ps);

  auto& concl = rep.conclusion;
  concl.applicable = true;
  const IntersectionResult ia = intersection_array(g);
  if (const auto* arr = std::get_if<IntersectionArray>(&ia)) {
    concl.distance_regular = true;
    concl.intersection_array = *arr;
    concl.generalized_odd_graph = arr->diameter() == d && hyp.odd_girth.value() == 2 * arr->diameter() + 1;
  } else {
    concl.witness = std::get<NotDistanceRegular>(ia);
  }
  return rep;
}

}  // namespace oddgirth
