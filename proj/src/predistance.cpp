#include "oddgirth/predistance.hpp"

#include "oddgirth/errors.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace oddgirth {

double spectral_inner_product(const Polynomiald& f, const Polynomiald& g, const Spectrum& s) {
  double acc = 0.0;
  for (const auto& e : s.eigs) acc += e.multiplicity * f(e.value) * g(e.value);
  return acc / s.order();
}

PredistanceSystem predistance_polynomials(const Spectrum& s) {
  if (s.eigs.empty()) throw InputError("empty spectrum");
  const int d = s.d();
  const double lambda0 = s.value(0);

  std::vector<Polynomiald> monic;
  std::vector<double> norms;
  monic.reserve(static_cast<std::size_t>(d + 1));
  for (int i = 0; i <= d; ++i) {
    Polynomiald q = i == 0 ? Polynomiald::constant(1.0) : monic.back().shifted();
    const double start_norm = spectral_inner_product(q, q, s);
    for (int pass = 0; pass < 2; ++pass)
      for (int j = 0; j < i; ++j) q -= (spectral_inner_product(q, monic[j], s) / norms[j]) * monic[j];
    q.coeffs().conservativeResize(i + 1);
    const double norm = spectral_inner_product(q, q, s);
    if (!(norm > 1e-13 * start_norm))
      throw NumericalError("predistance: vanishing norm at degree " + std::to_string(i));
    monic.push_back(std::move(q));
    norms.push_back(norm);
  }

  PredistanceSystem ps;
  ps.spectrum = s;
  ps.polys.reserve(monic.size());
  for (int i = 0; i <= d; ++i) {
    const double at_top = monic[i](lambda0);
    if (at_top == 0.0 || !std::isfinite(at_top))
      throw NumericalError("predistance: q_" + std::to_string(i) + "(lambda_0) vanishes");
    ps.polys.push_back((at_top / norms[i]) * monic[i]);
  }

  for (int i = 0; i <= d; ++i) {
    const double top = ps.polys[i](lambda0);
    const double sq = spectral_inner_product(ps.polys[i], ps.polys[i], s);
    ps.normalization_residual = std::max(ps.normalization_residual, std::abs(sq - top) / top);
    for (int j = i + 1; j <= d; ++j)
      ps.orthogonality_residual =
          std::max(ps.orthogonality_residual, std::abs(spectral_inner_product(ps.polys[i], ps.polys[j], s)));
  }
  ps.recurrence = recurrence_coefficients(ps);
  return ps;
}

RecurrenceCoefficients recurrence_coefficients(const PredistanceSystem& ps) {
  const Spectrum& s = ps.spectrum;
  const int d = ps.d();
  RecurrenceCoefficients r;
  r.alpha = Eigen::VectorXd::Zero(d + 1);
  r.beta = Eigen::VectorXd::Zero(d + 1);
  r.gamma = Eigen::VectorXd::Zero(d + 1);

  std::vector<double> sq(static_cast<std::size_t>(d + 1));
  for (int i = 0; i <= d; ++i) sq[i] = spectral_inner_product(ps[i], ps[i], s);

  for (int i = 0; i <= d; ++i) {
    const Polynomiald xp = ps[i].shifted();
    r.alpha[i] = spectral_inner_product(xp, ps[i], s) / sq[i];
    if (i > 0) r.beta[i - 1] = spectral_inner_product(xp, ps[i - 1], s) / sq[i - 1];
    if (i < d) r.gamma[i + 1] = spectral_inner_product(xp, ps[i + 1], s) / sq[i + 1];
  }

  for (int i = 0; i <= d; ++i) {
    Polynomiald line = ps[i].shifted() - r.alpha[i] * ps[i];
    if (i > 0) line -= r.beta[i - 1] * ps[i - 1];
    if (i < d) line -= r.gamma[i + 1] * ps[i + 1];
    r.residual = std::max(r.residual, std::sqrt(std::max(0.0, spectral_inner_product(line, line, s))));
  }
  return r;
}

Polynomiald hoffman_polynomial(const PredistanceSystem& ps) {
  Polynomiald h = Polynomiald::constant(0.0);
  for (const auto& p : ps.polys) h += p;
  return h;
}

ParityReport check_parity(const PredistanceSystem& ps, const OddGirth& girth, std::optional<double> tol) {
  ParityReport rep;
  const int d = ps.d();
  rep.alpha_tol = tol.value_or(1e-7 * std::max(1.0, std::abs(ps.spectrum.value(0))));
  rep.coeff_tol = 1e-7;
  rep.applicable = girth.is_finite() && girth.value() >= 2 * d + 1;
  if (!rep.applicable) return rep;

  const auto& alpha = ps.recurrence.alpha;
  for (int i = 0; i < d; ++i) rep.max_alpha_below_d = std::max(rep.max_alpha_below_d, std::abs(alpha[i]));
  rep.alpha_d = alpha[d];
  rep.alpha_below_d_vanish = rep.max_alpha_below_d <= rep.alpha_tol;
  rep.alpha_d_nonzero = std::abs(rep.alpha_d) > rep.alpha_tol;

  for (int i = 0; i <= d; ++i) {
    const double scale = ps[i].max_abs_coeff();
    for (int k = (i + 1) % 2; k <= i; k += 2)
      rep.max_wrong_parity_coeff = std::max(rep.max_wrong_parity_coeff, std::abs(ps[i][k]) / scale);
  }
  rep.polys_have_parity = rep.max_wrong_parity_coeff <= rep.coeff_tol;
  return rep;
}

}  // namespace oddgirth
