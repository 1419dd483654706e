#include "scs/mixed.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

namespace scs {

namespace {

constexpr double kWeightTolerance = 1e-12;
constexpr double kDensityTolerance = 1e-12;
constexpr double kHermitianTolerance = 1e-13;
constexpr double kTraceTolerance = 1e-13;
constexpr double kRankTolerance = 1e-10;
constexpr double kDegenerateSpectrum = 1e-10;
constexpr double kRealTolerance = 1e-9;
constexpr double kEqualCTolerance = 1e-12;

bool is_real(Complex z) {
  return std::abs(z.imag()) <= kRealTolerance * (1.0 + std::abs(z));
}

// Rotate so the first component with at least half the largest magnitude is
// real and positive.
Eigen::Vector4cd fix_phase(Eigen::Vector4cd v) {
  const double top = v.cwiseAbs().maxCoeff();
  for (int k = 0; k < 4; ++k) {
    const double mag = std::abs(v(k));
    if (mag >= 0.5 * top && mag > 0) {
      v *= std::conj(v(k)) / mag;
      v(k) = Complex(v(k).real(), 0.0);
      break;
    }
  }
  return v;
}

double rank2_formula(double w1, double w2, Complex c1, Complex c2,
                     Complex cplus, Complex cminus) {
  const Complex diff = cplus - cminus;
  const double value = w1 * w1 * std::norm(c1) + w2 * w2 * std::norm(c2) +
                       0.5 * w1 * w2 * std::norm(diff) -
                       0.5 * w1 * w2 * std::abs(diff * diff - 4.0 * c1 * c2);
  return std::max(value, 0.0);
}

double rank2_from_vectors(double w1, double w2, const Eigen::Vector4cd& v1,
                          const Eigen::Vector4cd& v2) {
  const double root_half = std::numbers::sqrt2 / 2.0;
  return rank2_formula(w1, w2, complex_concurrence(v1),
                       complex_concurrence(v2),
                       complex_concurrence(((v1 + v2) * root_half).eval()),
                       complex_concurrence(((v1 - v2) * root_half).eval()));
}

}  // namespace

void RankTwoMixture::validate() const {
  if (!(p1 >= 0.0 && p2 >= 0.0)) {
    throw InvalidMixture("weights must be non-negative");
  }
  if (!(std::abs(p1 + p2 - 1.0) <= kWeightTolerance)) {
    throw InvalidMixture("weights must sum to 1, got " +
                         std::to_string(p1 + p2));
  }
  if (!(comp1.j1 == comp2.j1) || !(comp1.j2 == comp2.j2)) {
    throw InvalidMixture("components must share spins j1 and j2");
  }
}

std::string_view to_string(CaseLabel label) {
  switch (label) {
    case CaseLabel::UpperBound:
      return "upper_bound";
    case CaseLabel::Intermediate:
      return "intermediate";
    case CaseLabel::LowerBoundNegProduct:
      return "lower_bound_neg_product";
    case CaseLabel::LowerBoundEqualC:
      return "lower_bound_equal_c";
    case CaseLabel::Unclassified:
      return "unclassified";
  }
  return "unclassified";
}

DensityMatrix4::DensityMatrix4(const Eigen::Matrix4cd& entries)
    : entries_(entries) {
  if (!entries.allFinite()) {
    throw NotDensityMatrix("non-finite entries");
  }
  const double defect = linalg::hermitian_defect(entries);
  if (!(defect <= kHermitianTolerance)) {
    throw NotDensityMatrix("not Hermitian, defect " + std::to_string(defect));
  }
  const Complex trace = entries.trace();
  if (!(std::abs(trace - 1.0) <= kTraceTolerance)) {
    throw NotDensityMatrix("trace " + std::to_string(trace.real()));
  }
  const auto eig = linalg::hermitian_eigen(entries, kDensityTolerance);
  if (eig.eigenvalues(3) < -kDensityTolerance) {
    throw NotDensityMatrix("negative eigenvalue " +
                           std::to_string(eig.eigenvalues(3)));
  }
}

Eigen::Matrix4cd spin_flip() {
  Eigen::Matrix4cd y = Eigen::Matrix4cd::Zero();
  y(0, 3) = -1.0;
  y(1, 2) = 1.0;
  y(2, 1) = 1.0;
  y(3, 0) = -1.0;
  return y;
}

DensityMatrix4 density_matrix(const RankTwoMixture& m) {
  m.validate();
  const Eigen::Vector4cd psi1 = to_two_qubit(m.comp1).vector();
  const Eigen::Vector4cd psi2 = to_two_qubit(m.comp2).vector();
  const Eigen::Matrix4cd rho =
      m.p1 * psi1 * psi1.adjoint() + m.p2 * psi2 * psi2.adjoint();
  return DensityMatrix4(rho);
}

Eigen::Vector4d wootters_lambdas(const DensityMatrix4& rho) {
  // λ_i are the singular values of √ρ Y √ρ*, since
  // (√ρ Y √ρ*)(√ρ Y √ρ*)^H = √ρ Y ρ* Y √ρ.
  const ComplexMatrixXd root = linalg::psd_sqrt(rho.matrix());
  const ComplexMatrixXd factor = root * spin_flip() * root.conjugate();
  const auto sigma = linalg::singular_values(factor);
  return Eigen::Vector4d(sigma(0), sigma(1), sigma(2), sigma(3));
}

double wootters_concurrence(const DensityMatrix4& rho) {
  const Eigen::Vector4d l = wootters_lambdas(rho);
  return std::clamp(l(0) - l(1) - l(2) - l(3), 0.0, 1.0);
}

Complex complex_concurrence(const Eigen::Vector4cd& v) {
  return 2.0 * (v(0) * v(3) - v(1) * v(2));
}

Complex complex_concurrence(const TwoQubitPure& s) {
  return 2.0 * (s.a * s.d - s.b * s.c);
}

SpectralPair spectral_rank2(const DensityMatrix4& rho) {
  const auto eig = linalg::hermitian_eigen(rho.matrix(), kDensityTolerance);
  if (eig.eigenvalues(2) > kRankTolerance) {
    throw RankExceeded("third eigenvalue " +
                       std::to_string(eig.eigenvalues(2)));
  }
  Eigen::Vector4cd v1 = eig.eigenvectors.col(0);
  Eigen::Vector4cd v2 = eig.eigenvectors.col(1);

  if (std::abs(eig.eigenvalues(0) - eig.eigenvalues(1)) <= kDegenerateSpectrum) {
    Eigen::Matrix<Complex, 4, 2> plane;
    plane << v1, v2;
    int best = 0;
    double best_weight = -1.0;
    for (int k = 0; k < 4; ++k) {
      const double weight = plane.row(k).norm();
      if (weight > best_weight + 1e-9) {
        best = k;
        best_weight = weight;
      }
    }
    Eigen::Vector2cd alpha = plane.row(best).adjoint();
    alpha.normalize();
    const Eigen::Vector2cd beta(-std::conj(alpha(1)), std::conj(alpha(0)));
    v1 = plane * alpha;
    v2 = plane * beta;
  }

  return {eig.eigenvalues(0), eig.eigenvalues(1),
          TwoQubitPure::from_vector(fix_phase(v1)),
          TwoQubitPure::from_vector(fix_phase(v2))};
}

double simplified_concurrence_sq(const SpectralPair& sp) {
  return rank2_from_vectors(sp.mu1, sp.mu2, sp.vec1.vector(),
                            sp.vec2.vector());
}

double simplified_concurrence_sq_direct(const RankTwoMixture& m) {
  m.validate();
  return rank2_from_vectors(m.p1, m.p2, to_two_qubit(m.comp1).vector(),
                            to_two_qubit(m.comp2).vector());
}

MixtureQuantities mixture_quantities(const RankTwoMixture& m) {
  m.validate();
  const EmbeddingData e1 = embedding(m.comp1);
  const EmbeddingData e2 = embedding(m.comp2);
  const Complex phase1 = std::polar(1.0, m.comp1.phi);
  const Complex phase2 = std::polar(1.0, m.comp2.phi);

  MixtureQuantities q{};
  q.C1 = concurrence_pure(m.comp1);
  q.C2 = concurrence_pure(m.comp2);
  q.c1 = -q.C1 * phase1;
  q.c2 = -q.C2 * phase2;

  const double b1 = e1.n * e1.n2;
  const double b2 = e2.n * e2.n2;
  const Complex c1 = e1.n * e1.n1 * phase1;
  const Complex c2 = e2.n * e2.n1 * phase2;
  q.cplus = -(b1 + b2) * (c1 + c2);
  q.cminus = -(b1 - b2) * (c1 - c2);
  return q;
}

ConcurrenceBounds bounds(const RankTwoMixture& m) {
  const MixtureQuantities q = mixture_quantities(m);
  const double a = m.p1 * q.C1;
  const double b = m.p2 * q.C2;
  return {(a - b) * (a - b), (a + b) * (a + b)};
}

CaseResult classify_case(const RankTwoMixture& m) {
  const MixtureQuantities q = mixture_quantities(m);
  const ConcurrenceBounds bnd = bounds(m);
  const Complex diff = q.cplus - q.cminus;
  const Complex x = diff * diff;
  const Complex prod = q.c1 * q.c2;
  const bool real_x = is_real(x);
  const bool real_prod = is_real(prod);
  const double tol = 1e-12 * (1.0 + std::abs(x) + 4.0 * std::abs(prod));

  if (real_x && real_prod && prod.real() <= tol && x.real() >= -tol) {
    return {CaseLabel::LowerBoundNegProduct, bnd.lower};
  }
  if (std::abs(diff) <= kEqualCTolerance) {
    return {CaseLabel::LowerBoundEqualC, bnd.lower};
  }
  if (real_x && real_prod) {
    const double xr = x.real();
    const double four_prod = 4.0 * prod.real();
    if (xr >= four_prod - tol && four_prod >= -tol) {
      return {CaseLabel::UpperBound, bnd.upper};
    }
    if (xr >= -tol && xr <= four_prod + tol) {
      const EmbeddingData e1 = embedding(m.comp1);
      const EmbeddingData e2 = embedding(m.comp2);
      const double w1 = m.p1 * e1.n * e1.n * e1.n1 * e1.n2;
      const double w2 = m.p2 * e2.n * e2.n * e2.n1 * e2.n2;
      const Complex cross =
          e1.n * e1.n2 * e2.n * e2.n1 * std::polar(1.0, m.comp2.phi) +
          e2.n * e2.n2 * e1.n * e1.n1 * std::polar(1.0, m.comp1.phi);
      return {CaseLabel::Intermediate,
              4.0 * ((w1 - w2) * (w1 - w2) + m.p1 * m.p2 * std::norm(cross))};
    }
  }
  return {CaseLabel::Unclassified, std::numeric_limits<double>::quiet_NaN()};
}

}  // namespace scs
