#pragma once

// Small dense complex linear algebra on Eigen types: a cyclic Jacobi
// Hermitian eigensolver and the matrix functions built on it. Everything is
// templated on the real scalar and accepts arbitrary Eigen expressions.
// Intended for dimensions up to ~100.

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <complex>
#include <numeric>
#include <string>
#include <vector>

#include "scs/errors.hpp"

namespace scs {

template <typename Scalar>
using ComplexMatrix =
    Eigen::Matrix<std::complex<Scalar>, Eigen::Dynamic, Eigen::Dynamic>;
template <typename Scalar>
using ComplexVector = Eigen::Matrix<std::complex<Scalar>, Eigen::Dynamic, 1>;
template <typename Scalar>
using RealVector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

using ComplexMatrixXd = ComplexMatrix<double>;
using ComplexVectorXd = ComplexVector<double>;

/// Spectrum of a Hermitian matrix. Eigenvalues are sorted in descending
/// order; column k of `eigenvectors` belongs to eigenvalues(k).
template <typename Scalar>
struct HermitianEigen {
  RealVector<Scalar> eigenvalues;
  ComplexMatrix<Scalar> eigenvectors;
};

namespace linalg {

constexpr int kMaxJacobiSweeps = 100;
constexpr double kJacobiOffTolerance = 1e-13;
constexpr double kNegativeClamp = 1e-10;

template <typename Derived>
typename Derived::RealScalar max_abs(const Eigen::MatrixBase<Derived>& a) {
  if (a.size() == 0) return 0;
  return a.cwiseAbs().maxCoeff();
}

/// ‖A − A†‖_max
template <typename Derived>
typename Derived::RealScalar hermitian_defect(
    const Eigen::MatrixBase<Derived>& a) {
  return max_abs(a - a.adjoint());
}

template <typename Derived>
auto to_complex(const Eigen::MatrixBase<Derived>& a) {
  using Real = typename Derived::RealScalar;
  return ComplexMatrix<Real>(a.template cast<std::complex<Real>>());
}

/// Hermitian eigendecomposition by cyclic complex Jacobi rotations.
///
/// Throws NotHermitian when ‖A − A†‖_max > tol (NaN entries always fail the
/// check) and NoConvergence when the off-diagonal Frobenius norm does not
/// drop below 1e-13·‖A‖_F within 100 sweeps. Equal eigenvalues keep the
/// order in which they appear on the converged diagonal.
template <typename Derived>
HermitianEigen<typename Derived::RealScalar> hermitian_eigen(
    const Eigen::MatrixBase<Derived>& input,
    typename Derived::RealScalar tol) {
  using Real = typename Derived::RealScalar;
  using Complex = std::complex<Real>;

  if (input.rows() != input.cols()) {
    throw DimensionMismatch("hermitian_eigen needs a square matrix, got " +
                            std::to_string(input.rows()) + "x" +
                            std::to_string(input.cols()));
  }
  ComplexMatrix<Real> a = to_complex(input);
  const Real defect = hermitian_defect(a);
  if (!(defect <= tol)) {
    throw NotHermitian("max |A - A^H| = " + std::to_string(defect));
  }
  a = (a + a.adjoint().eval()) * Real(0.5);

  const Eigen::Index n = a.rows();
  ComplexMatrix<Real> v = ComplexMatrix<Real>::Identity(n, n);
  const Real scale = a.norm();

  auto off_norm = [&] {
    Real sum = 0;
    for (Eigen::Index q = 0; q < n; ++q)
      for (Eigen::Index p = 0; p < n; ++p)
        if (p != q) sum += std::norm(a(p, q));
    return std::sqrt(sum);
  };

  if (scale > 0) {
    for (int sweep = 0;; ++sweep) {
      if (off_norm() <= Real(kJacobiOffTolerance) * scale) break;
      if (sweep == kMaxJacobiSweeps) {
        throw NoConvergence("Jacobi iteration exhausted " +
                            std::to_string(kMaxJacobiSweeps) + " sweeps");
      }
      for (Eigen::Index p = 0; p + 1 < n; ++p) {
        for (Eigen::Index q = p + 1; q < n; ++q) {
          const Complex apq = a(p, q);
          const Real mag = std::abs(apq);
          if (mag == Real(0)) continue;

          // G = [[c, g], [-conj(g), c]] on the (p, q) plane zeroes a(p, q).
          const Complex phase = apq / mag;
          const Real tau = (a(q, q).real() - a(p, p).real()) / (2 * mag);
          const Real t = (tau >= 0 ? Real(1) : Real(-1)) /
                         (std::abs(tau) + std::sqrt(Real(1) + tau * tau));
          const Real c = Real(1) / std::sqrt(Real(1) + t * t);
          const Complex g = (t * c) * phase;
          const Complex gc = std::conj(g);

          for (Eigen::Index k = 0; k < n; ++k) {
            const Complex akp = a(k, p);
            const Complex akq = a(k, q);
            a(k, p) = c * akp - gc * akq;
            a(k, q) = g * akp + c * akq;
          }
          for (Eigen::Index k = 0; k < n; ++k) {
            const Complex apk = a(p, k);
            const Complex aqk = a(q, k);
            a(p, k) = c * apk - g * aqk;
            a(q, k) = gc * apk + c * aqk;
          }
          for (Eigen::Index k = 0; k < n; ++k) {
            const Complex vkp = v(k, p);
            const Complex vkq = v(k, q);
            v(k, p) = c * vkp - gc * vkq;
            v(k, q) = g * vkp + c * vkq;
          }
          a(p, q) = Complex(0);
          a(q, p) = Complex(0);
          a(p, p) = Complex(a(p, p).real());
          a(q, q) = Complex(a(q, q).real());
        }
      }
    }
  }

  std::vector<Eigen::Index> order(static_cast<std::size_t>(n));
  std::iota(order.begin(), order.end(), Eigen::Index{0});
  std::stable_sort(order.begin(), order.end(),
                   [&](Eigen::Index i, Eigen::Index j) {
                     return a(i, i).real() > a(j, j).real();
                   });

  HermitianEigen<Real> out;
  out.eigenvalues.resize(n);
  out.eigenvectors.resize(n, n);
  for (Eigen::Index k = 0; k < n; ++k) {
    const Eigen::Index src = order[static_cast<std::size_t>(k)];
    out.eigenvalues(k) = a(src, src).real();
    out.eigenvectors.col(k) = v.col(src);
  }
  return out;
}

template <typename Derived>
typename Derived::RealScalar default_hermitian_tolerance(
    const Eigen::MatrixBase<Derived>& a) {
  using Real = typename Derived::RealScalar;
  return Real(1e-12) * std::max(Real(1), max_abs(a));
}

template <typename Derived>
HermitianEigen<typename Derived::RealScalar> hermitian_eigen(
    const Eigen::MatrixBase<Derived>& input) {
  return hermitian_eigen(input, default_hermitian_tolerance(input));
}

/// Principal square root of a positive semidefinite Hermitian matrix.
/// Eigenvalues in [-1e-10, 0) are treated as zero; anything more negative
/// raises NotPSD.
template <typename Derived>
ComplexMatrix<typename Derived::RealScalar> psd_sqrt(
    const Eigen::MatrixBase<Derived>& a) {
  using Real = typename Derived::RealScalar;
  const auto eig = hermitian_eigen(a);
  RealVector<Real> roots(eig.eigenvalues.size());
  for (Eigen::Index k = 0; k < roots.size(); ++k) {
    const Real lambda = eig.eigenvalues(k);
    if (lambda < -Real(kNegativeClamp)) {
      throw NotPSD("eigenvalue " + std::to_string(lambda) + " below -1e-10");
    }
    roots(k) = std::sqrt(std::max(lambda, Real(0)));
  }
  const auto& vecs = eig.eigenvectors;
  return vecs * roots.template cast<std::complex<Real>>().asDiagonal() *
         vecs.adjoint();
}

/// exp(A) for anti-Hermitian A, via the eigendecomposition of the Hermitian
/// matrix iA. The result is unitary.
template <typename Derived>
ComplexMatrix<typename Derived::RealScalar> antihermitian_exp(
    const Eigen::MatrixBase<Derived>& input) {
  using Real = typename Derived::RealScalar;
  using Complex = std::complex<Real>;
  if (input.rows() != input.cols()) {
    throw DimensionMismatch("antihermitian_exp needs a square matrix");
  }
  const ComplexMatrix<Real> a = to_complex(input);
  const Real defect = max_abs(a + a.adjoint());
  if (!(defect <= Real(1e-12) * std::max(Real(1), max_abs(a)))) {
    throw NotAntiHermitian("max |A + A^H| = " + std::to_string(defect));
  }
  const ComplexMatrix<Real> h = Complex(0, 1) * a;
  const auto eig = hermitian_eigen(h, Real(1e-12) * std::max(Real(1), max_abs(h)));
  ComplexVector<Real> phases(eig.eigenvalues.size());
  for (Eigen::Index k = 0; k < phases.size(); ++k) {
    phases(k) = std::polar(Real(1), -eig.eigenvalues(k));
  }
  return eig.eigenvectors * phases.asDiagonal() * eig.eigenvectors.adjoint();
}

/// Singular values (descending) from the spectrum of the Hermitian
/// dilation [[0, A], [A^H, 0]], whose eigenvalues are ±σ plus zeros. Small
/// singular values keep absolute accuracy ~ε‖A‖, unlike sqrt(eig(A A^H)).
template <typename Derived>
RealVector<typename Derived::RealScalar> singular_values(
    const Eigen::MatrixBase<Derived>& input) {
  using Real = typename Derived::RealScalar;
  const ComplexMatrix<Real> a = to_complex(input);
  const Eigen::Index m = a.rows();
  const Eigen::Index n = a.cols();
  ComplexMatrix<Real> dilation = ComplexMatrix<Real>::Zero(m + n, m + n);
  dilation.topRightCorner(m, n) = a;
  dilation.bottomLeftCorner(n, m) = a.adjoint();
  const auto eig = hermitian_eigen(dilation, Real(0));
  const Eigen::Index k = std::min(m, n);
  RealVector<Real> sigma(k);
  for (Eigen::Index i = 0; i < k; ++i) {
    sigma(i) = std::max(eig.eigenvalues(i), Real(0));
  }
  return sigma;
}

template <typename DerivedA, typename DerivedB>
auto matmul(const Eigen::MatrixBase<DerivedA>& a,
            const Eigen::MatrixBase<DerivedB>& b) {
  if (a.cols() != b.rows()) {
    throw DimensionMismatch("matmul: " + std::to_string(a.rows()) + "x" +
                            std::to_string(a.cols()) + " times " +
                            std::to_string(b.rows()) + "x" +
                            std::to_string(b.cols()));
  }
  return ComplexMatrix<typename DerivedA::RealScalar>(to_complex(a) *
                                                      to_complex(b));
}

template <typename Derived>
auto adjoint(const Eigen::MatrixBase<Derived>& a) {
  return ComplexMatrix<typename Derived::RealScalar>(to_complex(a).adjoint());
}

/// Kronecker product; row index of the result is iA·rows(B) + iB, so the
/// first factor is the slow index (|m1> ⊗ |m2> ordering).
template <typename DerivedA, typename DerivedB>
auto tensor(const Eigen::MatrixBase<DerivedA>& a,
            const Eigen::MatrixBase<DerivedB>& b) {
  using Real = typename DerivedA::RealScalar;
  const ComplexMatrix<Real> ca = to_complex(a);
  const ComplexMatrix<Real> cb = to_complex(b);
  ComplexMatrix<Real> out(ca.rows() * cb.rows(), ca.cols() * cb.cols());
  for (Eigen::Index i = 0; i < ca.rows(); ++i)
    for (Eigen::Index j = 0; j < ca.cols(); ++j)
      out.block(i * cb.rows(), j * cb.cols(), cb.rows(), cb.cols()) =
          ca(i, j) * cb;
  return out;
}

}  // namespace linalg
}  // namespace scs
