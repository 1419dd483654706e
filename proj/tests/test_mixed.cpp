#include <doctest.h>

#include <cmath>
#include <numbers>

#include "scs/mixed.hpp"
#include "scs/random.hpp"

using namespace scs;

namespace {

constexpr double kPi = std::numbers::pi;
const double kR = 1.0 / std::sqrt(2.0);

EntangledScsParams bell_component(double phi, int two_j = 1) {
  return {SpinJ(two_j), SpinJ(two_j), 1.0, 1.0, phi};
}

RankTwoMixture mixture(const EntangledScsParams& a, const EntangledScsParams& b,
                       double p1) {
  return {a, b, p1, 1.0 - p1};
}

DensityMatrix4 projector(const Eigen::Vector4cd& v) {
  return DensityMatrix4(v * v.adjoint());
}

}  // namespace

TEST_CASE("RankTwoMixture::validate") {
  const auto c = bell_component(0.0);
  CHECK_NOTHROW(mixture(c, c, 0.3).validate());
  CHECK_THROWS_AS((RankTwoMixture{c, c, 0.6, 0.6}.validate()), InvalidMixture);
  CHECK_THROWS_AS((RankTwoMixture{c, c, -0.1, 1.1}.validate()), InvalidMixture);
  CHECK_THROWS_AS(mixture(c, bell_component(0.0, 2), 0.5).validate(),
                  InvalidMixture);
}

TEST_CASE("DensityMatrix4 checks its input") {
  CHECK_NOTHROW(DensityMatrix4(Eigen::Matrix4cd::Identity() / 4.0));
  CHECK_THROWS_AS(DensityMatrix4(Eigen::Matrix4cd::Identity()), NotDensityMatrix);
  Eigen::Matrix4cd neg = Eigen::Matrix4cd::Zero();
  neg(0, 0) = 1.5;
  neg(1, 1) = -0.5;
  CHECK_THROWS_AS(DensityMatrix4{neg}, NotDensityMatrix);
  Eigen::Matrix4cd skew = Eigen::Matrix4cd::Identity() / 4.0;
  skew(0, 1) = 0.1;
  CHECK_THROWS_AS(DensityMatrix4{skew}, NotDensityMatrix);
  Eigen::Matrix4cd nan = Eigen::Matrix4cd::Identity() / 4.0;
  nan(2, 2) = std::nan("");
  CHECK_THROWS_AS(DensityMatrix4{nan}, NotDensityMatrix);
}

TEST_CASE("density_matrix") {
  const EntangledScsParams a{SpinJ(2), SpinJ(3), Complex(0.4, 0.1), 1.6, 0.8};
  const EntangledScsParams b{SpinJ(2), SpinJ(3), -0.3, Complex(0.0, 2.1), 2.5};

  const auto pure = density_matrix(mixture(a, b, 1.0)).matrix();
  CHECK(std::abs((pure * pure).trace() - 1.0) < 1e-13);

  const auto same = density_matrix(mixture(a, a, 0.37)).matrix();
  CHECK(std::abs((same * same).trace() - 1.0) < 1e-13);

  const auto rho = density_matrix(mixture(bell_component(0.0),
                                          bell_component(kPi), 0.5)).matrix();
  Eigen::Matrix4cd expected = Eigen::Matrix4cd::Zero();
  expected(1, 1) = 0.5;
  expected(2, 2) = 0.5;
  CHECK((rho - expected).cwiseAbs().maxCoeff() < 1e-15);
}

TEST_CASE("wootters_concurrence") {
  const Eigen::Vector4cd phi_plus(kR, 0, 0, kR);
  CHECK(wootters_concurrence(projector(phi_plus)) == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(wootters_concurrence(DensityMatrix4(Eigen::Matrix4cd::Identity() / 4.0)) <
        1e-12);

  // ½|Φ+><Φ+| + ½|00><00|: X-state value 2(|ρ03| - √(ρ11ρ22)) = 0.5
  Eigen::Matrix4cd x = 0.5 * phi_plus * phi_plus.adjoint();
  x(0, 0) += 0.5;
  CHECK(wootters_concurrence(DensityMatrix4(x)) == doctest::Approx(0.5).epsilon(1e-10));

  CHECK(wootters_concurrence(projector({1, 0, 0, 0})) < 1e-12);

  // Frozen brute-force values.
  const EntangledScsParams h1{SpinJ(1), SpinJ(1), 0.5, 0.5, 0.0};
  const EntangledScsParams h2{SpinJ(1), SpinJ(1), 1.0, 1.0, 0.0};
  CHECK(wootters_concurrence(density_matrix(mixture(h1, h2, 0.5))) ==
        doctest::Approx(0.7352941176470588).epsilon(1e-10));
  const EntangledScsParams g1{SpinJ(2), SpinJ(4), Complex(0.3, 0.2), 1.7, 0.4};
  const EntangledScsParams g2{SpinJ(2), SpinJ(4), 2.0, 0.6, 2.0};
  CHECK(wootters_concurrence(density_matrix(mixture(g1, g2, 0.3))) ==
        doctest::Approx(0.6910986973036912).epsilon(1e-10));
}

TEST_CASE("wootters_concurrence of a pure state equals 2|ad - bc|") {
  Rng rng(21);
  for (int trial = 0; trial < 50; ++trial) {
    Eigen::Vector4cd v;
    for (int k = 0; k < 4; ++k) v(k) = {rng.uniform(-1, 1), rng.uniform(-1, 1)};
    v.normalize();
    CHECK(wootters_concurrence(projector(v)) ==
          doctest::Approx(std::abs(complex_concurrence(v))).epsilon(1e-10));
  }
}

TEST_CASE("complex_concurrence") {
  CHECK(std::abs(complex_concurrence(Eigen::Vector4cd(kR, 0, 0, kR)) - 1.0) < 1e-15);
  CHECK(std::abs(complex_concurrence(TwoQubitPure{0, kR, kR, 0}) + 1.0) < 1e-15);

  const EntangledScsParams p{SpinJ(3), SpinJ(2), Complex(0.6, -0.2), 1.4, 1.3};
  const EmbeddingData e = embedding(p);
  const Complex expected = -2.0 * e.n * e.n * e.n1 * e.n2 * std::polar(1.0, p.phi);
  CHECK(std::abs(complex_concurrence(to_two_qubit(p)) - expected) < 1e-15);
  CHECK(std::abs(expected) == doctest::Approx(concurrence_pure(p)).epsilon(1e-14));
}

TEST_CASE("spectral_rank2") {
  const Eigen::Vector4cd psi(0.5, Complex(0, 0.5), -0.5, 0.5);
  const SpectralPair pure = spectral_rank2(projector(psi));
  CHECK(pure.mu1 == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(std::abs(pure.mu2) < 1e-14);
  CHECK(std::abs(std::abs(pure.vec1.vector().dot(psi)) - 1.0) < 1e-13);

  Eigen::Matrix4cd d = Eigen::Matrix4cd::Zero();
  d(1, 1) = 0.5;
  d(2, 2) = 0.5;
  const SpectralPair deg = spectral_rank2(DensityMatrix4(d));
  CHECK(deg.mu1 == doctest::Approx(0.5));
  CHECK(deg.mu2 == doctest::Approx(0.5));
  for (const auto& v : {deg.vec1, deg.vec2}) {
    CHECK(std::abs(v.a) < 1e-14);
    CHECK(std::abs(v.d) < 1e-14);
    CHECK(v.norm() == doctest::Approx(1.0));
  }
  CHECK(std::abs(deg.vec1.vector().dot(deg.vec2.vector())) < 1e-14);

  Rng rng(8);
  for (int trial = 0; trial < 50; ++trial) {
    const RankTwoMixture m = random_mixture(rng, 6, 3.0);
    const DensityMatrix4 rho = density_matrix(m);
    const SpectralPair sp = spectral_rank2(rho);
    CHECK((rho.matrix() * sp.vec1.vector() - sp.mu1 * sp.vec1.vector()).norm() < 1e-11);
    CHECK((rho.matrix() * sp.vec2.vector() - sp.mu2 * sp.vec2.vector()).norm() < 1e-11);
  }

  CHECK_THROWS_AS(spectral_rank2(DensityMatrix4(Eigen::Matrix4cd::Identity() / 4.0)),
                  RankExceeded);
}

TEST_CASE("simplified_concurrence_sq") {
  const Eigen::Vector4cd phi_plus(kR, 0, 0, kR);
  const Eigen::Vector4cd phi_minus(kR, 0, 0, -kR);
  const Eigen::Vector4cd psi_plus(0, kR, kR, 0);
  const auto pair = [](double m1, double m2, const Eigen::Vector4cd& a,
                       const Eigen::Vector4cd& b) {
    return SpectralPair{m1, m2, TwoQubitPure::from_vector(a),
                        TwoQubitPure::from_vector(b)};
  };

  CHECK(simplified_concurrence_sq(pair(1, 0, phi_plus, psi_plus)) ==
        doctest::Approx(1.0).epsilon(1e-14));

  // c1 = 1, c2 = -1, c± = 0: C² = ½ - ½·¼·4 = 0
  CHECK(std::abs(simplified_concurrence_sq(pair(0.5, 0.5, phi_plus, psi_plus))) <
        1e-14);
  const Eigen::Matrix4cd mix =
      0.5 * (phi_plus * phi_plus.adjoint() + psi_plus * psi_plus.adjoint());
  CHECK(wootters_concurrence(DensityMatrix4(mix)) < 1e-12);

  // Φ+/Φ- is separable as well; both routes give 0.
  const Eigen::Matrix4cd mix2 =
      0.5 * (phi_plus * phi_plus.adjoint() + phi_minus * phi_minus.adjoint());
  CHECK(std::abs(simplified_concurrence_sq(pair(0.5, 0.5, phi_plus, phi_minus))) < 1e-14);
  CHECK(wootters_concurrence(DensityMatrix4(mix2)) < 1e-12);

  // Unequal weights: C = |0.7 - 0.3|.
  CHECK(simplified_concurrence_sq(pair(0.7, 0.3, phi_plus, psi_plus)) ==
        doctest::Approx(0.16).epsilon(1e-13));
}

TEST_CASE("rank-two formula matches Wootters on random mixtures") {
  Rng rng(17);
  for (int trial = 0; trial < 200; ++trial) {
    const RankTwoMixture m = random_mixture(rng, 8, 4.0);
    const DensityMatrix4 rho = density_matrix(m);
    const double w = wootters_concurrence(rho);
    CHECK(simplified_concurrence_sq(spectral_rank2(rho)) ==
          doctest::Approx(w * w).epsilon(1e-8).scale(1.0));
    CHECK(simplified_concurrence_sq_direct(m) ==
          doctest::Approx(w * w).epsilon(1e-8).scale(1.0));
  }
}

TEST_CASE("mixture_quantities") {
  const EntangledScsParams bell = bell_component(0.7, 3);
  const EntangledScsParams sep{SpinJ(3), SpinJ(3), 0.0, 0.4, 0.0};
  const auto q = mixture_quantities(mixture(sep, bell, 0.5));
  CHECK(q.C1 == 0.0);
  CHECK(q.C2 == doctest::Approx(1.0).epsilon(1e-15));

  const EntangledScsParams g{SpinJ(2), SpinJ(5), Complex(0.5, 0.9), 1.8, 1.9};
  const auto s = mixture_quantities(mixture(g, g, 0.5));
  CHECK(std::abs(s.cminus) == 0.0);
  CHECK(std::abs(s.cplus - 2.0 * s.c1) < 1e-15);

  // c± equal the complex concurrences of (ψ1 ± ψ2)/√2.
  const EntangledScsParams h{SpinJ(2), SpinJ(5), -0.3, Complex(0.2, 0.2), 0.4};
  const auto mq = mixture_quantities(mixture(g, h, 0.5));
  const Eigen::Vector4cd v1 = to_two_qubit(g).vector();
  const Eigen::Vector4cd v2 = to_two_qubit(h).vector();
  CHECK(std::abs(mq.cplus - complex_concurrence(Eigen::Vector4cd((v1 + v2) * kR))) < 1e-14);
  CHECK(std::abs(mq.cminus - complex_concurrence(Eigen::Vector4cd((v1 - v2) * kR))) < 1e-14);
}

TEST_CASE("bounds") {
  const EntangledScsParams g{SpinJ(2), SpinJ(2), 0.5, 0.7, 0.0};
  const double c = concurrence_pure(g);
  const auto one = bounds(mixture(g, bell_component(0.0, 2), 1.0));
  CHECK(one.lower == doctest::Approx(c * c));
  CHECK(one.upper == doctest::Approx(c * c));

  const auto eq = bounds(mixture(g, g, 0.5));
  CHECK(eq.lower == 0.0);
  CHECK(eq.upper == doctest::Approx(c * c));

  const EntangledScsParams sep{SpinJ(2), SpinJ(2), 0.0, 0.7, 0.0};
  const auto q = bounds(mixture(bell_component(0.0, 2), sep, 0.5));
  CHECK(q.lower == doctest::Approx(0.25));
  CHECK(q.upper == doctest::Approx(0.25));
}

TEST_CASE("classify_case") {
  const EntangledScsParams g{SpinJ(1), SpinJ(1), 0.5, 0.8, 0.0};
  const CaseResult same = classify_case(mixture(g, g, 0.4));
  CHECK(same.label == CaseLabel::UpperBound);
  CHECK(same.value == doctest::Approx(std::pow(concurrence_pure(g), 2)));

  // |Ψ+>/|Ψ-> equal mixture: c1 c2 = -1.
  const RankTwoMixture opposite =
      mixture(bell_component(0.0), bell_component(kPi), 0.5);
  const CaseResult neg = classify_case(opposite);
  CHECK(neg.label == CaseLabel::LowerBoundNegProduct);
  CHECK(neg.value == doctest::Approx(0.0));
  CHECK(wootters_concurrence(density_matrix(opposite)) < 1e-12);
  CHECK(std::abs(simplified_concurrence_sq_direct(opposite)) < 1e-12);

  // c+ = c- with c1 c2 = +1: phases π/2 and -π/2.
  const RankTwoMixture equal =
      mixture(bell_component(kPi / 2), bell_component(-kPi / 2), 0.5);
  const auto q = mixture_quantities(equal);
  CHECK(std::abs(q.cplus - q.cminus) < 1e-12);
  const CaseResult eq = classify_case(equal);
  CHECK(eq.label == CaseLabel::LowerBoundEqualC);
  CHECK(eq.value == doctest::Approx(0.0));
  CHECK(wootters_concurrence(density_matrix(equal)) < 1e-12);

  // Bell components with phases ±φ: c1 c2 = 1 and (c+ - c-)² = 4cos²φ, so
  // every case is classified and must agree with Wootters.
  for (int k = 0; k < 8; ++k) {
    const double phi = k * kPi / 8;
    const RankTwoMixture m =
        mixture(bell_component(phi, 2), bell_component(-phi, 2), 0.3);
    const CaseResult r = classify_case(m);
    REQUIRE(r.classified());
    CHECK(r.label == (k == 0 ? CaseLabel::UpperBound
                      : k == 4 ? CaseLabel::LowerBoundEqualC
                               : CaseLabel::Intermediate));
    const double w = wootters_concurrence(density_matrix(m));
    CHECK(r.value == doctest::Approx(w * w).epsilon(1e-8).scale(1.0));
  }

  const EntangledScsParams u{SpinJ(1), SpinJ(1), Complex(0.3, 0.4), 0.9, 0.7};
  const EntangledScsParams v{SpinJ(1), SpinJ(1), 1.6, Complex(0.1, -0.6), 2.9};
  const CaseResult un = classify_case(mixture(u, v, 0.5));
  CHECK(un.label == CaseLabel::Unclassified);
  CHECK(std::isnan(un.value));

  CHECK(to_string(CaseLabel::UpperBound) == "upper_bound");
  CHECK(to_string(CaseLabel::LowerBoundEqualC) == "lower_bound_equal_c");
}
