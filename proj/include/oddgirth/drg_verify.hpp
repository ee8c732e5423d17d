#pragma once

#include "oddgirth/graph.hpp"
#include "oddgirth/predistance.hpp"
#include "oddgirth/spectral.hpp"

#include <Eigen/Dense>

#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace oddgirth {

/// Indicator matrices A_0..A_D of the distance-i relations.
struct DistanceMatrices {
  std::vector<Eigen::MatrixXd> mats;

  int diameter() const { return static_cast<int>(mats.size()) - 1; }
  const Eigen::MatrixXd& operator[](int i) const { return mats[static_cast<std::size_t>(i)]; }
  /// A_i, or the zero matrix when i exceeds the diameter.
  Eigen::MatrixXd at_or_zero(int i) const;
};

/// Throws InputError for disconnected graphs.
DistanceMatrices distance_matrices(const Graph& g);

/// {b_0..b_{D-1}; c_1..c_D} with a_0..a_D. The vectors b, c and a all have
/// length D+1 and are indexed by subscript; b[D] = c[0] = 0.
struct IntersectionArray {
  std::vector<int> b;
  std::vector<int> c;
  std::vector<int> a;

  int diameter() const { return static_cast<int>(a.size()) - 1; }
  int valency() const { return b.front(); }
  /// "{b_0,...,b_{D-1};c_1,...,c_D}"
  std::string to_string() const;
  friend bool operator==(const IntersectionArray&, const IntersectionArray&) = default;
};

/// First pair (u, v) at distance `distance` whose neighbour counts differ
/// from those recorded for that distance.
struct NotDistanceRegular {
  int u = 0;
  int v = 0;
  int distance = 0;
  int expected[3] = {0, 0, 0};  // (c, a, b) from the first pair at that distance
  int found[3] = {0, 0, 0};
  std::string to_string() const;
};

using IntersectionResult = std::variant<IntersectionArray, NotDistanceRegular>;

/// Definitional check over all ordered pairs. Throws InputError for
/// disconnected graphs.
IntersectionResult intersection_array(const Graph& g);

struct CheckOutcome {
  bool applicable = true;
  bool pass = false;
  double residual = 0.0;
};

/// max |p_d(A) - A_d|, with A_d = 0 when the diameter is below d. Not
/// applicable to non-regular graphs.
CheckOutcome check_pd_equals_Ad(const Graph& g, const PredistanceSystem& ps, double tol = 1e-6);

/// max |H(A) - J|.
CheckOutcome check_hoffman(const Graph& g, const PredistanceSystem& ps, double tol = 1e-6);

struct ExcessComparison {
  bool applicable = true;
  double spectral_excess = 0.0;  // p_d(lambda_0)
  double average_excess = 0.0;   // mean number of vertices at distance d
};

ExcessComparison excess_comparison(const Graph& g, const PredistanceSystem& ps);

struct Lemma1Result {
  bool pass = true;
  /// Offending eigenvalue(s): one value for a zero eigenvalue, two for a
  /// +/- pair.
  std::vector<double> witness;
  /// min over |lambda_i| and |lambda_i + lambda_j|.
  double margin = 0.0;
};

Lemma1Result lemma1_check(const Spectrum& s, double tol = 1e-7);

struct VandermondeCertificate {
  double det_value = 0.0;  // prod lambda_i * prod_{i>j} (lambda_i^2 - lambda_j^2), i,j >= 1
  Eigen::VectorXd proportionality;  // 1, then the solution of the odd-moment system
  double residual = 0.0;  // max_{u,i} |m_u(lambda_i) - prop_i / sum prop|
  bool ill_conditioned = false;
  double reciprocal_condition = 0.0;
};

/// Solves sum_{i=1}^d x_i lambda_i^{2l-1} = -lambda_0^{2l-1}, l = 1..d, and
/// compares the normalized solution with every row of the local
/// multiplicity table.
VandermondeCertificate vandermonde_certificate(const Spectrum& s, const LocalMultiplicities& lm);

/// Coefficient matrix of the odd-moment system, rows lambda_i^{2l-1}.
Eigen::MatrixXd odd_power_matrix(const Spectrum& s);

struct Tolerances {
  std::optional<double> cluster;  // default_cluster_tolerance when unset
  double matrix = 1e-6;           // idempotents, Hoffman, p_d(A) = A_d, excess
  double certificate = 1e-6;      // Vandermonde and walk-regularity spreads
  double lemma1 = 1e-7;
  std::optional<double> parity;   // check_parity defaults when unset
};

struct Certificate {
  bool ran = false;
  bool pass = false;
  double residual = 0.0;
  double tolerance = 0.0;
};

struct TheoremReport {
  struct Hypotheses {
    bool connected = false;
    int eigenvalue_count = 0;  // d + 1
    OddGirth odd_girth = OddGirth::infinite();
    bool hypothesis_met = false;
    /// odd girth equals 2d+1 exactly, recorded separately from the >= test
    bool odd_girth_equals_2d_plus_1 = false;
  };
  struct Certificates {
    Certificate lemma1;
    Certificate vandermonde;
    Certificate walk_regular;
    Certificate regular;  // constant degree, checked from the adjacency
    Certificate idempotents;
    Certificate hoffman;
    Certificate parity;
    Certificate pd_equals_Ad;
  };
  struct Conclusion {
    bool applicable = false;
    bool distance_regular = false;
    std::optional<IntersectionArray> intersection_array;
    std::optional<NotDistanceRegular> witness;
    bool generalized_odd_graph = false;
  };

  int n = 0;
  std::optional<Spectrum> spectrum;
  Hypotheses hypotheses;
  Certificates certificates;
  Conclusion conclusion;
  std::optional<ExcessComparison> excess;
  std::optional<Lemma1Result> lemma1_detail;
  std::optional<VandermondeCertificate> vandermonde_detail;
  std::optional<ParityReport> parity_detail;
  std::optional<RecurrenceCoefficients> recurrence;
  Tolerances tolerances;
  std::vector<std::string> warnings;

  int d() const { return hypotheses.eigenvalue_count - 1; }
  /// Every certificate that the hypotheses require has passed.
  bool all_certificates_pass() const;
  /// Hypotheses met but some certificate failed.
  bool alarm() const { return hypotheses.hypothesis_met && !all_certificates_pass(); }
};

/// Full pipeline: connectivity, spectrum, odd girth; then, when the odd
/// girth is finite and at least 2d+1, every certificate in proof order and
/// the definitional intersection array.
TheoremReport verify_theorem(const Graph& g, const Tolerances& tol = {});

}  // namespace oddgirth
