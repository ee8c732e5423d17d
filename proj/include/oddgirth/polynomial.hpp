#pragma once

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <initializer_list>

namespace oddgirth {

/// Real polynomial in the monomial basis; coeffs()[k] multiplies x^k.
/// Trailing zero coefficients are kept so that a polynomial constructed with
/// a given length keeps that length; degree() ignores exact zeros.
template <typename Scalar>
class Polynomial {
public:
  using Coefficients = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

  Polynomial() : coeffs_(Coefficients::Zero(1)) {}
  explicit Polynomial(Coefficients c) : coeffs_(std::move(c)) {
    if (coeffs_.size() == 0) coeffs_ = Coefficients::Zero(1);
  }
  Polynomial(std::initializer_list<Scalar> c) : coeffs_(static_cast<Eigen::Index>(c.size())) {
    Eigen::Index k = 0;
    for (Scalar v : c) coeffs_[k++] = v;
    if (coeffs_.size() == 0) coeffs_ = Coefficients::Zero(1);
  }

  static Polynomial constant(Scalar c) { return Polynomial(Coefficients::Constant(1, c)); }
  static Polynomial monomial(int degree) {
    Coefficients c = Coefficients::Zero(degree + 1);
    c[degree] = Scalar(1);
    return Polynomial(std::move(c));
  }

  const Coefficients& coeffs() const { return coeffs_; }
  Coefficients& coeffs() { return coeffs_; }
  Eigen::Index size() const { return coeffs_.size(); }
  Scalar operator[](Eigen::Index k) const { return k < coeffs_.size() ? coeffs_[k] : Scalar(0); }

  /// -1 for the zero polynomial.
  int degree() const {
    for (Eigen::Index k = coeffs_.size() - 1; k >= 0; --k)
      if (coeffs_[k] != Scalar(0)) return static_cast<int>(k);
    return -1;
  }

  Scalar leading() const {
    const int deg = degree();
    return deg < 0 ? Scalar(0) : coeffs_[deg];
  }

  /// Horner evaluation at a scalar.
  Scalar operator()(Scalar x) const {
    Scalar acc = coeffs_[coeffs_.size() - 1];
    for (Eigen::Index k = coeffs_.size() - 2; k >= 0; --k) acc = acc * x + coeffs_[k];
    return acc;
  }

  /// x * p
  Polynomial shifted() const {
    Coefficients c = Coefficients::Zero(coeffs_.size() + 1);
    c.tail(coeffs_.size()) = coeffs_;
    return Polynomial(std::move(c));
  }

  Scalar max_abs_coeff() const { return coeffs_.cwiseAbs().maxCoeff(); }

  Polynomial& operator+=(const Polynomial& o) {
    if (o.size() > size()) coeffs_.conservativeResizeLike(Coefficients::Zero(o.size()));
    coeffs_.head(o.size()) += o.coeffs_;
    return *this;
  }
  Polynomial& operator-=(const Polynomial& o) { return *this += (-o); }
  Polynomial& operator*=(Scalar s) {
    coeffs_ *= s;
    return *this;
  }

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(Polynomial a, Scalar s) { return a *= s; }
  friend Polynomial operator*(Scalar s, Polynomial a) { return a *= s; }
  Polynomial operator-() const { return Polynomial(Coefficients(-coeffs_)); }

private:
  Coefficients coeffs_;
};

using Polynomiald = Polynomial<double>;

/// Horner's scheme with a square matrix argument: p(M).
template <typename Scalar, typename Derived>
Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic> evaluate_at_matrix(
    const Polynomial<Scalar>& p, const Eigen::MatrixBase<Derived>& m) {
  using Matrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
  const Eigen::Index n = m.rows();
  const auto& c = p.coeffs();
  Matrix acc = Matrix::Identity(n, n) * c[c.size() - 1];
  for (Eigen::Index k = c.size() - 2; k >= 0; --k) {
    acc = (acc * m).eval();
    acc.diagonal().array() += c[k];
  }
  return acc;
}

}  // namespace oddgirth
