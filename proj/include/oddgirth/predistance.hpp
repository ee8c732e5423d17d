#pragma once

#include "oddgirth/graph.hpp"
#include "oddgirth/polynomial.hpp"
#include "oddgirth/spectral.hpp"

#include <Eigen/Dense>

#include <optional>
#include <vector>

namespace oddgirth {

/// <f, g> = (1/n) sum_i m_i f(lambda_i) g(lambda_i)
double spectral_inner_product(const Polynomiald& f, const Polynomiald& g, const Spectrum& s);

/// Coefficients of x p_i = beta_{i-1} p_{i-1} + alpha_i p_i + gamma_{i+1} p_{i+1}.
/// All three vectors have length d+1 and are indexed by their own subscript:
/// beta[d] = 0 and gamma[0] = 0 by convention.
struct RecurrenceCoefficients {
  Eigen::VectorXd alpha;
  Eigen::VectorXd beta;
  Eigen::VectorXd gamma;
  /// Worst inner-product-norm residual of the d+1 recurrence lines. The
  /// i = d line is measured on the spectrum, i.e. modulo the minimal polynomial.
  double residual = 0.0;
};

struct PredistanceSystem {
  std::vector<Polynomiald> polys;  // p_0 .. p_d, deg p_i = i
  RecurrenceCoefficients recurrence;
  Spectrum spectrum;

  double orthogonality_residual = 0.0;  // max_{i != j} |<p_i, p_j>|
  double normalization_residual = 0.0;  // max_i |<p_i, p_i> - p_i(lambda_0)| / p_i(lambda_0)

  int d() const { return static_cast<int>(polys.size()) - 1; }
  const Polynomiald& operator[](int i) const { return polys[static_cast<std::size_t>(i)]; }
};

/// Orthogonalizes 1, x q_0, x q_1, ... under the spectral inner product
/// (two Gram-Schmidt passes per step), then scales each q_i so that
/// ||p_i||^2 = p_i(lambda_0). Throws NumericalError on a vanishing norm or
/// p_i(lambda_0) = 0.
PredistanceSystem predistance_polynomials(const Spectrum& s);

RecurrenceCoefficients recurrence_coefficients(const PredistanceSystem& ps);

/// p_0 + p_1 + ... + p_d
Polynomiald hoffman_polynomial(const PredistanceSystem& ps);

struct ParityReport {
  bool applicable = false;
  bool alpha_below_d_vanish = false;  // |alpha_i| <= alpha_tol for i < d
  bool alpha_d_nonzero = false;       // |alpha_d| > alpha_tol
  bool polys_have_parity = false;     // p_i has only degrees of parity i

  double max_alpha_below_d = 0.0;
  double alpha_d = 0.0;
  double max_wrong_parity_coeff = 0.0;  // relative to the polynomial's largest coefficient
  double alpha_tol = 0.0;
  double coeff_tol = 0.0;

  bool pass() const { return applicable && alpha_below_d_vanish && alpha_d_nonzero && polys_have_parity; }
};

/// Applicable when the odd girth is finite and at least 2d+1. Default
/// tolerances: 1e-7 * max(1, lambda_0) for the alphas and 1e-7 relative to
/// each polynomial's largest coefficient for the parity test. An explicit
/// `tol` replaces the alpha tolerance; the coefficient tolerance stays relative.
ParityReport check_parity(const PredistanceSystem& ps, const OddGirth& girth, std::optional<double> tol = std::nullopt);

}  // namespace oddgirth
