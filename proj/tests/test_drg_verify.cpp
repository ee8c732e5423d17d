#include "oddgirth/drg_verify.hpp"
#include "oddgirth/errors.hpp"

#include "doctest.h"
#include "test_support.hpp"

#include <cmath>

using namespace oddgirth;
using doctest::Approx;

namespace {

Graph named(std::string_view family, std::vector<int> params = {}) { return generate_family(family, params); }

Eigen::MatrixXd square(const Graph& g) {
  const Eigen::MatrixXd a = g.adjacency_as<double>();
  return a * a;
}

IntersectionArray array_of(const Graph& g) {
  const IntersectionResult r = intersection_array(g);
  REQUIRE(std::holds_alternative<IntersectionArray>(r));
  return std::get<IntersectionArray>(r);
}

/// Definitional distance-regularity by counting |Gamma_i(u) cap Gamma_j(v)|
/// for all i, j and pairs; independent of intersection_array's traversal.
bool distance_regular_by_counts(const Graph& g) {
  const auto dist = oddgirth::testing::floyd_warshall(g);
  const int n = g.order();
  const int diam = dist.maxCoeff();
  std::vector<std::vector<std::vector<int>>> seen(
      diam + 1, std::vector<std::vector<int>>(diam + 1, std::vector<int>(diam + 1, -1)));
  for (int u = 0; u < n; ++u)
    for (int v = 0; v < n; ++v)
      for (int i = 0; i <= diam; ++i)
        for (int j = 0; j <= diam; ++j) {
          int c = 0;
          for (int w = 0; w < n; ++w) c += dist(u, w) == i && dist(v, w) == j;
          int& slot = seen[dist(u, v)][i][j];
          if (slot < 0) slot = c;
          else if (slot != c) return false;
        }
  return true;
}

}  // namespace

TEST_CASE("distance matrices") {
  const Graph k2 = named("complete", {2});
  const DistanceMatrices dk = distance_matrices(k2);
  REQUIRE(dk.diameter() == 1);
  CHECK(dk[0] == Eigen::MatrixXd::Identity(2, 2));
  CHECK(dk[1] == k2.adjacency_as<double>());

  const Graph pet = named("petersen");
  const DistanceMatrices dp = distance_matrices(pet);
  CHECK(dp[2] == square(pet) - 3.0 * Eigen::MatrixXd::Identity(10, 10));

  const Graph c5 = named("cycle", {5});
  CHECK(distance_matrices(c5)[2] == square(c5) - 2.0 * Eigen::MatrixXd::Identity(5, 5));

  for (const auto& ng : oddgirth::testing::family_suite()) {
    const DistanceMatrices dm = distance_matrices(ng.graph);
    Eigen::MatrixXd sum = Eigen::MatrixXd::Zero(ng.graph.order(), ng.graph.order());
    for (const auto& m : dm.mats) sum += m;
    CHECK((sum.array() == 1.0).all());
    CHECK(dm.at_or_zero(dm.diameter() + 1).isZero());
  }
  CHECK_THROWS_AS(distance_matrices(Graph(2)), InputError);
}

TEST_CASE("intersection arrays") {
  const IntersectionArray c5 = array_of(named("cycle", {5}));
  CHECK(c5.to_string() == "{2,1;1,1}");
  CHECK(c5.a == std::vector<int>{0, 0, 1});

  const IntersectionArray pet = array_of(named("petersen"));
  CHECK(pet.to_string() == "{3,2;1,1}");
  CHECK(pet.a == std::vector<int>{0, 0, 2});

  CHECK(array_of(named("odd", {4})).to_string() == "{4,3,3;1,1,2}");
  CHECK(array_of(named("folded_cube", {5})).to_string() == "{5,4;1,2}");
  CHECK(array_of(named("folded_cube", {7})).to_string() == "{7,6,5;1,2,3}");
  CHECK(array_of(named("complete", {6})).to_string() == "{5;1}");

  const IntersectionResult prism = intersection_array(named("prism"));
  REQUIRE(std::holds_alternative<NotDistanceRegular>(prism));
  const auto& w = std::get<NotDistanceRegular>(prism);
  CHECK(w.distance == 1);
  CHECK(!std::equal(std::begin(w.expected), std::end(w.expected), std::begin(w.found)));

  CHECK_THROWS_AS(intersection_array(Graph(3)), InputError);

  for (const auto& ng : oddgirth::testing::family_suite()) {
    const IntersectionArray ia = array_of(ng.graph);
    const int k = ia.valency();
    for (int i = 0; i <= ia.diameter(); ++i) CHECK(ia.a[i] + ia.b[i] + ia.c[i] == k);
    CHECK(ia.b.back() == 0);
    CHECK(ia.c.front() == 0);
    for (int i = 1; i < ia.diameter(); ++i) {
      CHECK(ia.b[i] <= ia.b[i - 1]);
      CHECK(ia.c[i] <= ia.c[i + 1]);
    }
  }
}

TEST_CASE("intersection array agrees with the all-pairs count definition") {
  int regular = 0;
  for (int n = 2; n <= 6; ++n)
    enumerate_connected(n, [&](const Graph& g, std::uint64_t) {
      if (!g.regular_degree()) return;
      ++regular;
      CHECK(std::holds_alternative<IntersectionArray>(intersection_array(g)) == distance_regular_by_counts(g));
    });
  CHECK(regular > 0);
}

TEST_CASE("p_d(A) = A_d") {
  for (const char* family : {"petersen", "cycle"}) {
    const Graph g = std::string_view(family) == "cycle" ? named("cycle", {5}) : named(family);
    const CheckOutcome r = check_pd_equals_Ad(g, predistance_polynomials(spectrum(g)));
    CHECK(r.applicable);
    CHECK(r.pass);
    CHECK(r.residual <= 1e-8);
  }
  const Graph prism = named("prism");
  const PredistanceSystem pp = predistance_polynomials(spectrum(prism));
  REQUIRE(pp.d() == 3);
  const CheckOutcome r = check_pd_equals_Ad(prism, pp);
  CHECK(r.applicable);
  CHECK_FALSE(r.pass);
  CHECK(r.residual > 0.1);

  const Graph p3 = named("path", {3});
  CHECK_FALSE(check_pd_equals_Ad(p3, predistance_polynomials(spectrum(p3))).applicable);
}

TEST_CASE("Proposition 1 on every regular connected graph up to 6 vertices") {
  for (int n = 2; n <= 6; ++n)
    enumerate_connected(n, [&](const Graph& g, std::uint64_t) {
      if (!g.regular_degree()) return;
      const Spectrum s = spectrum(g);
      if (s.d() < 1) return;
      const PredistanceSystem ps = predistance_polynomials(s);
      const bool drg = std::holds_alternative<IntersectionArray>(intersection_array(g));
      CHECK(check_pd_equals_Ad(g, ps).pass == drg);
      const ExcessComparison ex = excess_comparison(g, ps);
      CHECK((std::abs(ex.spectral_excess - ex.average_excess) <= 1e-6) == drg);
    });
}

TEST_CASE("excess comparison") {
  const Graph pet = named("petersen");
  const ExcessComparison ep = excess_comparison(pet, predistance_polynomials(spectrum(pet)));
  CHECK(ep.spectral_excess == Approx(6.0).epsilon(1e-10));
  CHECK(ep.average_excess == 6.0);

  const Graph c5 = named("cycle", {5});
  const ExcessComparison ec = excess_comparison(c5, predistance_polynomials(spectrum(c5)));
  CHECK(ec.spectral_excess == Approx(2.0).epsilon(1e-10));
  CHECK(ec.average_excess == 2.0);

  const Graph prism = named("prism");
  const ExcessComparison ex = excess_comparison(prism, predistance_polynomials(spectrum(prism)));
  CHECK(ex.spectral_excess > 0.1);
  CHECK(ex.average_excess == 0.0);

  const Graph p3 = named("path", {3});
  CHECK_FALSE(excess_comparison(p3, predistance_polynomials(spectrum(p3))).applicable);
}

TEST_CASE("Lemma 1 check") {
  CHECK(lemma1_check(spectrum(named("cycle", {5}))).pass);

  const Lemma1Result k2 = lemma1_check(spectrum(named("complete", {2})));
  CHECK_FALSE(k2.pass);
  REQUIRE(k2.witness.size() == 2);
  CHECK(k2.witness[0] == Approx(1.0));
  CHECK(k2.witness[1] == Approx(-1.0));

  const Lemma1Result p3 = lemma1_check(spectrum(named("path", {3})));
  CHECK_FALSE(p3.pass);
  REQUIRE(p3.witness.size() == 1);
  CHECK(std::abs(p3.witness[0]) <= 1e-12);
}

TEST_CASE("Vandermonde certificate") {
  const Graph pet = named("petersen");
  const Spectrum sp = spectrum(pet);
  const VandermondeCertificate cp = vandermonde_certificate(sp, local_multiplicities(idempotents(pet, sp)));
  CHECK(std::abs(cp.det_value + 6.0) <= 1e-9);
  // Second route: LU determinant of the odd-power matrix itself.
  CHECK(odd_power_matrix(sp).determinant() == Approx(-6.0).epsilon(1e-12));
  REQUIRE(cp.proportionality.size() == 3);
  const Eigen::VectorXd normalized = cp.proportionality / cp.proportionality.sum();
  CHECK(normalized[0] == Approx(0.1).epsilon(1e-10));
  CHECK(normalized[1] == Approx(0.5).epsilon(1e-10));
  CHECK(normalized[2] == Approx(0.4).epsilon(1e-10));
  CHECK(cp.residual <= 1e-8);
  CHECK_FALSE(cp.ill_conditioned);

  const Graph c5 = named("cycle", {5});
  const Spectrum s5 = spectrum(c5);
  const VandermondeCertificate c = vandermonde_certificate(s5, local_multiplicities(idempotents(c5, s5)));
  CHECK(c.residual <= 1e-8);
  CHECK(c.det_value == Approx(odd_power_matrix(s5).determinant()).epsilon(1e-10));

  for (const auto& ng : oddgirth::testing::family_suite()) {
    const Spectrum s = spectrum(ng.graph);
    if (s.d() < 1) continue;
    CHECK(vandermonde_certificate(s, local_multiplicities(idempotents(ng.graph, s))).det_value ==
          Approx(odd_power_matrix(s).determinant()).epsilon(1e-8));
  }

  // A non-walk-regular graph with an odd cycle: the certificate must not pass.
  const Graph paw = oddgirth::testing::from_edges(4, {{0, 1}, {1, 2}, {2, 0}, {2, 3}});
  const Spectrum sw = spectrum(paw);
  CHECK(vandermonde_certificate(sw, local_multiplicities(idempotents(paw, sw))).residual > 1e-3);
}

TEST_CASE("verify_theorem end to end") {
  const TheoremReport pet = verify_theorem(named("petersen"));
  CHECK(pet.hypotheses.hypothesis_met);
  CHECK(pet.hypotheses.odd_girth_equals_2d_plus_1);
  CHECK(pet.all_certificates_pass());
  CHECK_FALSE(pet.alarm());
  CHECK(pet.conclusion.distance_regular);
  CHECK(pet.conclusion.generalized_odd_graph);
  REQUIRE(pet.conclusion.intersection_array);
  CHECK(pet.conclusion.intersection_array->to_string() == "{3,2;1,1}");
  REQUIRE(pet.excess);
  CHECK(pet.excess->spectral_excess == Approx(6.0));

  const TheoremReport k4 = verify_theorem(named("complete", {4}));
  CHECK(k4.hypotheses.hypothesis_met);
  CHECK(k4.d() == 1);
  CHECK(k4.conclusion.distance_regular);
  REQUIRE(k4.conclusion.intersection_array);
  CHECK(k4.conclusion.intersection_array->diameter() == 1);
  CHECK(k4.all_certificates_pass());

  const TheoremReport p3 = verify_theorem(named("path", {3}));
  CHECK_FALSE(p3.hypotheses.hypothesis_met);
  CHECK_FALSE(p3.hypotheses.odd_girth.is_finite());
  CHECK_FALSE(p3.conclusion.applicable);
  CHECK_FALSE(p3.alarm());

  const TheoremReport prism = verify_theorem(named("prism"));
  CHECK(prism.d() == 3);
  CHECK(prism.hypotheses.odd_girth == OddGirth(3));
  CHECK_FALSE(prism.hypotheses.hypothesis_met);

  const TheoremReport k2 = verify_theorem(named("complete", {2}));
  CHECK_FALSE(k2.hypotheses.hypothesis_met);

  const TheoremReport split = verify_theorem(Graph(3));
  CHECK_FALSE(split.hypotheses.connected);
  CHECK_FALSE(split.hypotheses.hypothesis_met);
  CHECK_FALSE(split.warnings.empty());
}

TEST_CASE("theorem holds on the family suite") {
  for (const auto& ng : oddgirth::testing::family_suite()) {
    CAPTURE(ng.name);
    const TheoremReport rep = verify_theorem(ng.graph);
    if (ng.name == "complete 2") {
      CHECK_FALSE(rep.hypotheses.hypothesis_met);
      continue;
    }
    CHECK(rep.hypotheses.hypothesis_met);
    CHECK(rep.all_certificates_pass());
    CHECK(rep.conclusion.generalized_odd_graph);
    REQUIRE(rep.conclusion.intersection_array);
    CHECK(rep.conclusion.intersection_array->diameter() == rep.d());
    CHECK(rep.hypotheses.odd_girth.value() == 2 * rep.d() + 1);
  }
}

TEST_CASE("a failed certificate raises the alarm") {
  TheoremReport rep = verify_theorem(named("petersen"));
  REQUIRE_FALSE(rep.alarm());
  rep.certificates.hoffman.pass = false;
  CHECK(rep.alarm());
}
