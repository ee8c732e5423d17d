#include "oddgirth/spectral.hpp"

#include "oddgirth/errors.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace oddgirth {

int Spectrum::order() const {
  int n = 0;
  for (const auto& e : eigs) n += e.multiplicity;
  return n;
}

Eigen::VectorXd Spectrum::values() const {
  Eigen::VectorXd v(static_cast<Eigen::Index>(eigs.size()));
  for (std::size_t i = 0; i < eigs.size(); ++i) v[static_cast<Eigen::Index>(i)] = eigs[i].value;
  return v;
}

Eigen::VectorXd Spectrum::multiplicities() const {
  Eigen::VectorXd v(static_cast<Eigen::Index>(eigs.size()));
  for (std::size_t i = 0; i < eigs.size(); ++i) v[static_cast<Eigen::Index>(i)] = eigs[i].multiplicity;
  return v;
}

double Spectrum::moment(int power) const {
  double acc = 0.0;
  for (const auto& e : eigs) acc += e.multiplicity * std::pow(e.value, power);
  return acc;
}

double default_cluster_tolerance(const Graph& g) {
  return 1e-8 * g.order() * std::max(1, g.max_degree());
}

Spectrum cluster_eigenvalues(const Eigen::VectorXd& raw, double cluster_tol) {
  if (!(cluster_tol > 0.0)) throw InputError("cluster tolerance must be positive");
  if (raw.size() == 0) throw InputError("empty eigenvalue list");
  std::vector<double> sorted(raw.data(), raw.data() + raw.size());
  std::sort(sorted.begin(), sorted.end());

  Spectrum s;
  s.cluster_tol = cluster_tol;
  s.min_gap = std::numeric_limits<double>::infinity();

  std::size_t start = 0;
  for (std::size_t i = 1; i <= sorted.size(); ++i) {
    if (i < sorted.size() && sorted[i] - sorted[i - 1] <= cluster_tol) continue;
    double sum = 0.0;
    for (std::size_t k = start; k < i; ++k) sum += sorted[k];
    s.eigs.push_back({sum / static_cast<double>(i - start), static_cast<int>(i - start)});
    s.max_spread = std::max(s.max_spread, sorted[i - 1] - sorted[start]);
    if (i < sorted.size()) s.min_gap = std::min(s.min_gap, sorted[i] - sorted[i - 1]);
    start = i;
  }
  std::reverse(s.eigs.begin(), s.eigs.end());

  if (s.min_gap < 10.0 * cluster_tol) {
    s.ambiguous = true;
    s.warnings.push_back("ambiguous eigenvalue clustering: minimal gap " + std::to_string(s.min_gap) +
                         " below 10x cluster tolerance");
  }
  return s;
}

Spectrum spectrum(const Graph& g, std::optional<double> cluster_tol) {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(g.adjacency_as<double>(), Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success) throw NumericalError("symmetric eigensolver did not converge");
  Spectrum s = cluster_eigenvalues(solver.eigenvalues(), cluster_tol.value_or(default_cluster_tolerance(g)));
  if (!is_connected(g)) s.warnings.push_back("graph is disconnected");
  return s;
}

IdempotentSet idempotents(const Graph& g, const Spectrum& s) {
  const int n = g.order();
  const int count = s.d() + 1;
  const Eigen::MatrixXd a = g.adjacency_as<double>();
  const Eigen::MatrixXd id = Eigen::MatrixXd::Identity(n, n);

  IdempotentSet out;
  out.mats.reserve(static_cast<std::size_t>(count));
  for (int i = 0; i < count; ++i) {
    Eigen::MatrixXd e = id;
    for (int j = 0; j < count; ++j) {
      if (j == i) continue;
      const double denom = s.value(i) - s.value(j);
      if (denom == 0.0) throw InputError("degenerate spectrum: repeated eigenvalue " + std::to_string(s.value(i)));
      e = (e * (a - s.value(j) * id) / denom).eval();
    }
    out.mats.push_back(std::move(e));
  }
  return out;
}

double IdempotentResiduals::worst() const {
  return std::max({sum_to_identity, idempotency, orthogonality, eigen_relation, reconstruction});
}

IdempotentResiduals idempotent_residuals(const Graph& g, const Spectrum& s, const IdempotentSet& ids) {
  const int n = g.order();
  const Eigen::MatrixXd a = g.adjacency_as<double>();
  IdempotentResiduals r;
  Eigen::MatrixXd sum = Eigen::MatrixXd::Zero(n, n);
  Eigen::MatrixXd weighted = Eigen::MatrixXd::Zero(n, n);
  for (int i = 0; i < ids.count(); ++i) {
    const auto& e = ids[i];
    sum += e;
    weighted += s.value(i) * e;
    r.idempotency = std::max(r.idempotency, (e * e - e).cwiseAbs().maxCoeff());
    r.eigen_relation = std::max(r.eigen_relation, (a * e - s.value(i) * e).cwiseAbs().maxCoeff());
    for (int j = i + 1; j < ids.count(); ++j)
      r.orthogonality = std::max(r.orthogonality, (e * ids[j]).cwiseAbs().maxCoeff());
  }
  r.sum_to_identity = (sum - Eigen::MatrixXd::Identity(n, n)).cwiseAbs().maxCoeff();
  r.reconstruction = (weighted - a).cwiseAbs().maxCoeff();
  return r;
}

LocalMultiplicities local_multiplicities(const IdempotentSet& ids) {
  const Eigen::Index n = ids.count() ? ids[0].rows() : 0;
  LocalMultiplicities lm{Eigen::MatrixXd(n, ids.count())};
  for (int i = 0; i < ids.count(); ++i) lm.m.col(i) = ids[i].diagonal();
  return lm;
}

double closed_walk_count(const LocalMultiplicities& lm, const Spectrum& s, int u, int length) {
  if (length < 0) throw InputError("walk length must be nonnegative");
  double acc = 0.0;
  for (int i = 0; i <= s.d(); ++i) acc += lm(u, i) * std::pow(s.value(i), length);
  return acc;
}

double walk_regularity_spread(const LocalMultiplicities& lm) {
  if (lm.m.size() == 0) return 0.0;
  return (lm.m.colwise().maxCoeff() - lm.m.colwise().minCoeff()).maxCoeff();
}

bool is_walk_regular(const LocalMultiplicities& lm, double tol) { return walk_regularity_spread(lm) <= tol; }

}  // namespace oddgirth
