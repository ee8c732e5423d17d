#include "oddgirth/errors.hpp"
#include "oddgirth/predistance.hpp"

#include "doctest.h"
#include "test_support.hpp"

#include <cmath>

using namespace oddgirth;
using doctest::Approx;

namespace {

Graph named(std::string_view family, std::vector<int> params = {}) { return generate_family(family, params); }

Spectrum spectrum_of(std::string_view family, std::vector<int> params = {}) {
  return spectrum(named(family, std::move(params)));
}

void check_coeffs(const Polynomiald& p, std::vector<double> expected, double tol) {
  CHECK(p.degree() == static_cast<int>(expected.size()) - 1);
  for (std::size_t k = 0; k < expected.size(); ++k) {
    CAPTURE(k);
    CHECK(std::abs(p[static_cast<Eigen::Index>(k)] - expected[k]) <= tol);
  }
}

}  // namespace

TEST_CASE("polynomial helpers") {
  const Polynomiald p{-2.0, 0.0, 1.0};
  CHECK(p.degree() == 2);
  CHECK(p(3.0) == 7.0);
  CHECK(p.shifted().degree() == 3);
  CHECK((p + Polynomiald{1.0, 1.0}).coeffs() == Eigen::Vector3d(-1.0, 1.0, 1.0));
  CHECK(Polynomiald::constant(0.0).degree() == -1);

  const Eigen::Matrix2d m = (Eigen::Matrix2d() << 0, 1, 1, 0).finished();
  CHECK(evaluate_at_matrix(p, m) == (-1.0 * Eigen::Matrix2d::Identity()));
}

TEST_CASE("spectral inner product") {
  const Polynomiald one = Polynomiald::constant(1.0);
  const Polynomiald x = Polynomiald::monomial(1);
  for (const auto& ng : oddgirth::testing::family_suite())
    CHECK(spectral_inner_product(one, one, spectrum(ng.graph)) == Approx(1.0));

  CHECK(spectral_inner_product(x, x, spectrum_of("complete", {4})) == Approx(3.0));
  const Polynomiald q{-2.0, 0.0, 1.0};
  CHECK(spectral_inner_product(q, q, spectrum_of("cycle", {5})) == Approx(2.0).epsilon(1e-12));
}

TEST_CASE("predistance polynomials of small families") {
  for (int n = 2; n <= 8; ++n) {
    const PredistanceSystem ps = predistance_polynomials(spectrum_of("complete", {n}));
    REQUIRE(ps.d() == 1);
    check_coeffs(ps[0], {1.0}, 1e-12);
    check_coeffs(ps[1], {0.0, 1.0}, 1e-10);
  }
  const PredistanceSystem c5 = predistance_polynomials(spectrum_of("cycle", {5}));
  check_coeffs(c5[2], {-2.0, 0.0, 1.0}, 1e-8);
  const PredistanceSystem pet = predistance_polynomials(spectrum_of("petersen"));
  check_coeffs(pet[2], {-3.0, 0.0, 1.0}, 1e-8);
}

TEST_CASE("recurrence coefficients") {
  const PredistanceSystem c5 = predistance_polynomials(spectrum_of("cycle", {5}));
  const auto& r = c5.recurrence;
  CHECK(std::abs(r.alpha[0]) <= 1e-10);
  CHECK(std::abs(r.alpha[1]) <= 1e-10);
  CHECK(r.alpha[2] == Approx(1.0).epsilon(1e-10));
  CHECK(r.beta[0] == Approx(2.0).epsilon(1e-10));
  CHECK(r.beta[1] == Approx(1.0).epsilon(1e-10));
  CHECK(r.beta[2] == 0.0);
  CHECK(r.gamma[0] == 0.0);
  CHECK(r.gamma[1] == Approx(1.0).epsilon(1e-10));
  CHECK(r.gamma[2] == Approx(1.0).epsilon(1e-10));
  CHECK(r.residual <= 1e-8);

  const PredistanceSystem pet = predistance_polynomials(spectrum_of("petersen"));
  CHECK(pet.recurrence.alpha[2] == Approx(2.0).epsilon(1e-10));
  CHECK(pet.recurrence.beta[0] == Approx(3.0).epsilon(1e-10));
  CHECK(pet.recurrence.beta[1] == Approx(2.0).epsilon(1e-10));
  CHECK(pet.recurrence.gamma[1] == Approx(1.0).epsilon(1e-10));
  CHECK(pet.recurrence.gamma[2] == Approx(1.0).epsilon(1e-10));

  // Hand-built d = 1 spectrum {1, -1}.
  Spectrum s;
  s.eigs = {{1.0, 1}, {-1.0, 1}};
  const PredistanceSystem k2 = predistance_polynomials(s);
  CHECK(std::abs(k2.recurrence.alpha[0]) <= 1e-15);
  CHECK(k2.recurrence.gamma[1] == Approx(1.0));
  check_coeffs(k2[1], {0.0, 1.0}, 1e-15);
}

TEST_CASE("recurrence recomputed from the system matches the stored one") {
  const PredistanceSystem ps = predistance_polynomials(spectrum_of("odd", {4}));
  const RecurrenceCoefficients r = recurrence_coefficients(ps);
  CHECK((r.alpha - ps.recurrence.alpha).norm() == 0.0);
  // O_4 = {4,3,3;1,1,2}
  CHECK(r.beta[0] == Approx(4.0));
  CHECK(r.beta[1] == Approx(3.0));
  CHECK(r.beta[2] == Approx(3.0));
  CHECK(r.gamma[3] == Approx(2.0));
  CHECK(r.alpha[3] == Approx(2.0));
}

TEST_CASE("hoffman polynomial") {
  const Graph pet = named("petersen");
  const PredistanceSystem ps = predistance_polynomials(spectrum(pet));
  const Polynomiald h = hoffman_polynomial(ps);
  check_coeffs(h, {-2.0, 1.0, 1.0}, 1e-8);
  CHECK((evaluate_at_matrix(h, pet.adjacency_as<double>()).array() - 1.0).abs().maxCoeff() <= 1e-6);

  check_coeffs(hoffman_polynomial(predistance_polynomials(spectrum_of("complete", {6}))), {1.0, 1.0}, 1e-10);

  const Graph c5 = named("cycle", {5});
  const Polynomiald hc = hoffman_polynomial(predistance_polynomials(spectrum(c5)));
  check_coeffs(hc, {-1.0, 1.0, 1.0}, 1e-8);
  CHECK((evaluate_at_matrix(hc, c5.adjacency_as<double>()).array() - 1.0).abs().maxCoeff() <= 1e-6);
}

TEST_CASE("parity facts") {
  const Graph c5 = named("cycle", {5});
  const ParityReport r5 = check_parity(predistance_polynomials(spectrum(c5)), odd_girth(c5));
  CHECK(r5.pass());
  CHECK(r5.alpha_d == Approx(1.0));

  const Graph pet = named("petersen");
  const ParityReport rp = check_parity(predistance_polynomials(spectrum(pet)), odd_girth(pet));
  CHECK(rp.pass());
  CHECK(rp.alpha_d == Approx(2.0));

  const Graph c7 = named("cycle", {7});
  const PredistanceSystem ps7 = predistance_polynomials(spectrum(c7));
  CHECK(ps7.d() == 3);
  const ParityReport r7 = check_parity(ps7, odd_girth(c7));
  CHECK(r7.pass());
  CHECK(r7.alpha_d == Approx(1.0).epsilon(1e-10));

  const Graph p3 = named("path", {3});
  const ParityReport rn = check_parity(predistance_polynomials(spectrum(p3)), odd_girth(p3));
  CHECK_FALSE(rn.applicable);
  CHECK_FALSE(rn.pass());

  // Prism has odd girth 3 < 2d+1 = 7.
  const Graph prism = named("prism");
  CHECK_FALSE(check_parity(predistance_polynomials(spectrum(prism)), odd_girth(prism)).applicable);
}

TEST_CASE("orthogonality, normalization and distance counts on the suite") {
  for (const auto& ng : oddgirth::testing::family_suite()) {
    CAPTURE(ng.name);
    const Spectrum s = spectrum(ng.graph);
    const PredistanceSystem ps = predistance_polynomials(s);
    const int d = ps.d();
    const double top = ps[d](s.value(0));
    CHECK(ps.orthogonality_residual <= 1e-8 * top);
    CHECK(ps.normalization_residual <= 1e-8);
    CHECK(ps.recurrence.residual <= 1e-8);
    for (int i = 0; i <= d; ++i) CHECK(ps[i].degree() == i);

    const auto fw = oddgirth::testing::floyd_warshall(ng.graph);
    for (int i = 0; i <= d; ++i) {
      const double expected = ps[i](s.value(0));
      CHECK(std::abs(expected - std::round(expected)) <= 1e-8);
      for (int u = 0; u < ng.graph.order(); ++u) CHECK((fw.row(u).array() == i).count() == std::lround(expected));
    }
    // Row sums of the recurrence at lambda_0.
    const auto& r = ps.recurrence;
    for (int i = 0; i <= d; ++i) CHECK(r.alpha[i] + r.beta[i] + r.gamma[i] == Approx(s.value(0)).epsilon(1e-8));
  }
}

TEST_CASE("predistance on non-regular spectra stays orthogonal") {
  std::mt19937 rng(17);
  int checked = 0;
  while (checked < 30) {
    const Graph g = oddgirth::testing::random_graph(7, 0.45, rng);
    if (!is_connected(g)) continue;
    ++checked;
    const PredistanceSystem ps = predistance_polynomials(spectrum(g));
    CHECK(ps.orthogonality_residual <= 1e-8 * ps[ps.d()](ps.spectrum.value(0)));
    CHECK(ps.normalization_residual <= 1e-8);
    CHECK(ps.recurrence.residual <= 1e-8);
  }
}

TEST_CASE("malformed spectra are rejected") {
  Spectrum empty;
  CHECK_THROWS_AS(predistance_polynomials(empty), InputError);
  Spectrum repeated;
  repeated.eigs = {{2.0, 1}, {2.0, 1}};
  CHECK_THROWS_AS(predistance_polynomials(repeated), NumericalError);
}
