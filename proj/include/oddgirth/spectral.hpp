#pragma once

#include "oddgirth/graph.hpp"

#include <Eigen/Dense>

#include <optional>
#include <string>
#include <vector>

namespace oddgirth {

struct Eigenvalue {
  double value;
  int multiplicity;
};

/// Distinct adjacency eigenvalues in strictly decreasing order, obtained by
/// clustering the raw eigenvalues of a dense symmetric solve.
struct Spectrum {
  std::vector<Eigenvalue> eigs;
  double cluster_tol = 0.0;
  /// Smallest distance between adjacent clusters; +inf with a single cluster.
  double min_gap = 0.0;
  /// Largest spread inside one cluster.
  double max_spread = 0.0;
  bool ambiguous = false;
  std::vector<std::string> warnings;

  /// Number of distinct eigenvalues minus one.
  int d() const { return static_cast<int>(eigs.size()) - 1; }
  int order() const;
  double value(int i) const { return eigs[static_cast<std::size_t>(i)].value; }
  int multiplicity(int i) const { return eigs[static_cast<std::size_t>(i)].multiplicity; }
  Eigen::VectorXd values() const;
  Eigen::VectorXd multiplicities() const;

  /// sum_i m_i * lambda_i^power
  double moment(int power) const;
};

/// 1e-8 * n * max(1, max degree).
double default_cluster_tolerance(const Graph& g);

/// Greedy clustering of raw eigenvalues (any order): consecutive sorted
/// values within `cluster_tol` merge; the reported value is the cluster mean.
/// Flags ambiguity when an inter-cluster gap falls below 10 * cluster_tol.
Spectrum cluster_eigenvalues(const Eigen::VectorXd& raw, double cluster_tol);

/// Throws NumericalError if the eigensolver fails to converge.
Spectrum spectrum(const Graph& g, std::optional<double> cluster_tol = std::nullopt);

/// Principal idempotents E_0..E_d.
struct IdempotentSet {
  std::vector<Eigen::MatrixXd> mats;

  int count() const { return static_cast<int>(mats.size()); }
  const Eigen::MatrixXd& operator[](int i) const { return mats[static_cast<std::size_t>(i)]; }
};

/// Lagrange interpolation in A: E_i = prod_{j != i} (A - lambda_j I) / (lambda_i - lambda_j).
/// Throws InputError when two spectrum values coincide.
IdempotentSet idempotents(const Graph& g, const Spectrum& s);

/// Max-norm residuals of the idempotent algebra.
struct IdempotentResiduals {
  double sum_to_identity = 0.0;   // |sum E_i - I|
  double idempotency = 0.0;       // max_i |E_i^2 - E_i|
  double orthogonality = 0.0;     // max_{i != j} |E_i E_j|
  double eigen_relation = 0.0;    // max_i |A E_i - lambda_i E_i|
  double reconstruction = 0.0;    // |sum lambda_i E_i - A|

  double worst() const;
};

IdempotentResiduals idempotent_residuals(const Graph& g, const Spectrum& s, const IdempotentSet& ids);

/// n x (d+1) table, row u holds (E_i)_{uu}.
struct LocalMultiplicities {
  Eigen::MatrixXd m;

  int order() const { return static_cast<int>(m.rows()); }
  double operator()(int u, int i) const { return m(u, i); }
};

LocalMultiplicities local_multiplicities(const IdempotentSet& ids);

/// Closed walks of length `length` at u: sum_i m_u(lambda_i) lambda_i^length.
double closed_walk_count(const LocalMultiplicities& lm, const Spectrum& s, int u, int length);

/// Largest column spread (max - min) of the local multiplicity table.
double walk_regularity_spread(const LocalMultiplicities& lm);
bool is_walk_regular(const LocalMultiplicities& lm, double tol);

}  // namespace oddgirth
