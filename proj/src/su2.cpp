#include "scs/su2.hpp"

#include <cmath>
#include <limits>
#include <numbers>

namespace scs {

SpinJ SpinJ::from_value(double j) {
  const double twice = 2.0 * j;
  const double rounded = std::round(twice);
  if (!std::isfinite(j) || j < 0 || std::abs(twice - rounded) > 1e-9 ||
      rounded > std::numeric_limits<int>::max()) {
    throw InvalidSpin("spin must be a non-negative multiple of 1/2, got " +
                      std::to_string(j));
  }
  return SpinJ(static_cast<int>(rounded));
}

FockVector coherent_amplitudes(const SpinCoherentParam& p) {
  const int n = p.j.two_j();
  const double r = std::abs(p.z);
  const double arg = std::arg(p.z);
  FockVector out = FockVector::Zero(n + 1);
  if (r == 0.0) {
    out(0) = 1.0;
    return out;
  }

  // log of C(n,k)^{1/2} r^k, shifted by its maximum before exponentiating.
  const double log_r = std::log(r);
  const double log_n_fact = std::lgamma(n + 1.0);
  Eigen::VectorXd log_mag(n + 1);
  for (int k = 0; k <= n; ++k) {
    const double log_binom =
        log_n_fact - std::lgamma(k + 1.0) - std::lgamma(n - k + 1.0);
    log_mag(k) = 0.5 * log_binom + k * log_r;
  }
  const double top = log_mag.maxCoeff();
  Eigen::VectorXd mag = (log_mag.array() - top).exp().matrix();
  mag /= mag.norm();
  for (int k = 0; k <= n; ++k) {
    out(k) = std::polar(mag(k), k * arg);
  }
  return out;
}

Complex overlap(const SpinCoherentParam& p1, const SpinCoherentParam& p2) {
  if (!(p1.j == p2.j)) {
    throw SpinMismatch("overlap of 2j=" + std::to_string(p1.j.two_j()) +
                       " with 2j=" + std::to_string(p2.j.two_j()));
  }
  // ((1 + conj(Z1) Z2) / sqrt((1+|Z1|²)(1+|Z2|²)))^{2j}; the base has
  // modulus <= 1, so no intermediate overflow.
  const Complex base = (1.0 + std::conj(p1.z) * p2.z) /
                       std::sqrt((1.0 + std::norm(p1.z)) * (1.0 + std::norm(p2.z)));
  return std::pow(base, p1.j.two_j());
}

namespace {

// log |x| for x = (1 - s)/(1 + s), using |x| = 1 - 2 min(s, 1)/(1 + s) so
// that nothing cancels near s = 0 or s -> inf.
double log_abs_ratio(double s) {
  return std::log1p(-2.0 * std::min(s, 1.0) / (1.0 + s));
}

}  // namespace

double overlap_minus(const SpinCoherentParam& p) {
  const int n = p.j.two_j();
  if (n == 0) return 1.0;
  const double s = std::norm(std::abs(p.z));
  const double magnitude = std::exp(n * log_abs_ratio(s));
  return (s > 1.0 && n % 2 == 1) ? -magnitude : magnitude;
}

double one_minus_overlap_minus_sq(const SpinCoherentParam& p) {
  const int n = p.j.two_j();
  if (n == 0) return 0.0;
  const double s = std::norm(std::abs(p.z));
  return -std::expm1(2.0 * n * log_abs_ratio(s));
}

LadderMatrices ladder_matrices(SpinJ j) {
  const int n = j.two_j();
  const int dim = j.dim();
  LadderMatrices out{ComplexMatrixXd::Zero(dim, dim),
                     ComplexMatrixXd::Zero(dim, dim),
                     ComplexMatrixXd::Zero(dim, dim)};
  for (int k = 0; k < dim; ++k) {
    // m = -j + k, so (j - m)(j + m + 1) = (2j - k)(k + 1).
    if (k + 1 < dim) {
      out.plus(k + 1, k) = std::sqrt(static_cast<double>((n - k) * (k + 1)));
    }
    out.z(k, k) = k - 0.5 * n;
  }
  out.minus = out.plus.transpose();
  return out;
}

FockVector rotation_coherent(SpinJ j, double theta, double phi) {
  if (std::abs(theta - std::numbers::pi) < 1e-8) {
    throw ThetaNearPi("theta=" + std::to_string(theta) +
                      " maps to an unbounded Z");
  }
  const auto ladders = ladder_matrices(j);
  const Complex e = std::polar(1.0, phi);
  const ComplexMatrixXd generator =
      (0.5 * theta) * (e * ladders.plus - std::conj(e) * ladders.minus);
  const ComplexMatrixXd rotation = linalg::antihermitian_exp(generator);
  return rotation.col(0);
}

FockVector tensor_state(const FockVector& v1, const FockVector& v2) {
  return linalg::tensor(v1, v2);
}

}  // namespace scs
