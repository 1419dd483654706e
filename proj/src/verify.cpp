#include "scs/verify.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <stdexcept>

#include "scs/mixed.hpp"
#include "scs/oracle.hpp"
#include "scs/random.hpp"
#include "scs/scan.hpp"

namespace scs::verify {

namespace {

using std::numbers::pi;

class Check {
 public:
  Check(std::string id, double tolerance) {
    result_.id = std::move(id);
    result_.tolerance = tolerance;
  }

  void residual(double r) {
    ++result_.count;
    if (std::isnan(r) || r > result_.max_residual) result_.max_residual = r;
    if (!(r <= result_.tolerance)) result_.passed = false;
  }
  void expect(bool ok) {
    ++result_.count;
    if (!ok) result_.passed = false;
  }
  InvariantResult finish(std::string note = {}) {
    result_.note = std::move(note);
    return result_;
  }

 private:
  InvariantResult result_;
};

// ---------------------------------------------------------------- su2

void su2_suite(std::uint64_t seed, std::vector<InvariantResult>& out) {
  Rng rng(seed);

  {
    Check c("su2.coherent_unit_norm", 1e-12);
    for (int i = 0; i < 2000; ++i) {
      const SpinCoherentParam p{SpinJ(rng.integer(0, 50)),
                                rng.complex_radial(10.0)};
      c.residual(std::abs(coherent_amplitudes(p).norm() - 1.0));
    }
    out.push_back(c.finish());
  }
  {
    Check closed("su2.overlap_minus_vs_closed_overlap", 1e-13);
    Check fock("su2.overlap_minus_vs_fock", 1e-12);
    for (int two_j = 1; two_j <= 16; ++two_j) {
      for (int k = 0; k <= 30; ++k) {
        for (int l = 0; l <= 13; ++l) {
          const SpinCoherentParam p{SpinJ(two_j),
                                    std::polar(0.1 * k, pi * l / 7.0)};
          const double value = overlap_minus(p);
          closed.residual(std::abs(value - overlap(p, negate(p))));
          const Complex dot =
              coherent_amplitudes(p).dot(coherent_amplitudes(negate(p)));
          fock.residual(std::abs(value - dot));
        }
      }
    }
    out.push_back(closed.finish());
    out.push_back(fock.finish());
  }
  {
    Check c("su2.overlap_vs_fock", 1e-12);
    for (int i = 0; i < 2000; ++i) {
      const SpinJ j(rng.integer(0, 16));
      const SpinCoherentParam a{j, rng.complex_radial(5.0)};
      const SpinCoherentParam b{j, rng.complex_radial(5.0)};
      const Complex dot = coherent_amplitudes(a).dot(coherent_amplitudes(b));
      c.residual(std::abs(overlap(a, b) - dot));
    }
    out.push_back(c.finish());
  }
  {
    Check inversion("su2.inversion_symmetry", 1e-12);
    Check phase("su2.phase_independence", 1e-15);
    for (int i = 0; i < 2000; ++i) {
      const SpinJ j(rng.integer(0, 16));
      const double r = rng.uniform(0.01, 20.0);
      const double alpha = rng.angle();
      inversion.residual(
          std::abs(std::abs(overlap_minus({j, std::polar(1.0 / r, alpha)})) -
                   std::abs(overlap_minus({j, std::polar(r, alpha)}))));
      const double base = overlap_minus({j, std::polar(r, 0.0)});
      phase.residual(std::abs(overlap_minus({j, std::polar(r, alpha)}) - base));
    }
    out.push_back(inversion.finish());
    out.push_back(phase.finish());
  }
  {
    Check exact("su2.ladder_commutators_exact", 0.0);
    Check fp("su2.ladder_commutators", 1e-12);
    for (int two_j = 0; two_j <= 40; ++two_j) {
      // Integer radicands: (J+J-)_kk - (J-J+)_kk = k(2j-k+1) - (2j-k)(k+1)
      for (int k = 0; k <= two_j; ++k) {
        const long up = static_cast<long>(k) * (two_j - k + 1);
        const long down = static_cast<long>(two_j - k) * (k + 1);
        exact.residual(std::abs(static_cast<double>(up - down - (2 * k - two_j))));
      }
      const auto l = ladder_matrices(SpinJ(two_j));
      fp.residual(linalg::max_abs(l.plus * l.minus - l.minus * l.plus - 2.0 * l.z));
      fp.residual(linalg::max_abs(l.z * l.plus - l.plus * l.z - l.plus));
      fp.residual(linalg::max_abs(l.z * l.minus - l.minus * l.z + l.minus));
    }
    out.push_back(exact.finish());
    out.push_back(fp.finish());
  }
  {
    Check c("su2.rotation_consistency", 1e-9);
    for (int two_j = 1; two_j <= 8; ++two_j) {
      for (int i = 1; i <= 50; ++i) {
        const double theta = (pi - 0.1) * i / 51.0;
        const double phi = rng.angle();
        const FockVector rotated = rotation_coherent(SpinJ(two_j), theta, phi);
        const FockVector direct = coherent_amplitudes(
            {SpinJ(two_j), std::tan(theta / 2.0) * std::polar(1.0, phi)});
        c.residual(linalg::max_abs(rotated - direct));
      }
    }
    out.push_back(c.finish());
  }
}

// ---------------------------------------------------------------- pure

void pure_suite(std::uint64_t seed, std::vector<InvariantResult>& out) {
  Rng rng(seed ^ 0x9e3779b97f4a7c15ULL);
  {
    Check two_qubit("pure.closed_vs_two_qubit", 1e-13);
    Check oracle("pure.closed_vs_oracle", 1e-10);
    for (int i = 0; i < 10000; ++i) {
      const EntangledScsParams p = random_params(rng, 8, 5.0);
      const double c = concurrence_pure(p);
      two_qubit.residual(std::abs(c - concurrence_two_qubit(to_two_qubit(p))));
      oracle.residual(std::abs(c - oracle::oracle_concurrence(p)));
    }
    out.push_back(two_qubit.finish());
    out.push_back(oracle.finish());
  }
  {
    Check c("pure.phase_invariance", 1e-14);
    for (int i = 0; i < 2000; ++i) {
      EntangledScsParams p = random_params(rng, 8, 5.0);
      const double base = concurrence_pure(
          {p.j1, p.j2, std::abs(p.z1), std::abs(p.z2), p.phi});
      c.residual(std::abs(concurrence_pure(p) - base));
    }
    out.push_back(c.finish());
  }
  {
    Check decay("pure.boundary_monotone_decay", 0.0);
    Check limits("pure.boundary_limits", 1e-6);
    for (int two_j1 = 1; two_j1 <= 8; ++two_j1) {
      for (int two_j2 = 1; two_j2 <= 8; ++two_j2) {
        for (double z2 : {0.3, 1.0, 2.5}) {
          // At φ = π/2 the normalization is constant and C = N1 N2.
          const EntangledScsParams base{SpinJ(two_j1), SpinJ(two_j2), 0.0, z2,
                                        pi / 2};
          double previous = 2.0;
          for (int step = 0; step <= 470; ++step) {
            EntangledScsParams p = base;
            p.z1 = 3.0 + 0.1 * step;
            const double c = concurrence_pure(p);
            decay.expect(c <= previous + 1e-15);
            previous = c;
          }
          EntangledScsParams small = base;
          small.z1 = 1e-7;
          limits.residual(concurrence_pure(small));
          EntangledScsParams large = base;
          large.z1 = 1e7;
          limits.residual(concurrence_pure(large));
        }
      }
    }
    out.push_back(decay.finish());
    out.push_back(limits.finish());
  }
  {
    Check c("pure.bell_plateau", 1e-12);
    for (int two_j1 = 1; two_j1 <= 8; ++two_j1)
      for (int two_j2 = 1; two_j2 <= 8; ++two_j2)
        for (int k = 0; k < 32; ++k) {
          const EntangledScsParams p{SpinJ(two_j1), SpinJ(two_j2),
                                     std::polar(1.0, rng.angle()),
                                     std::polar(1.0, rng.angle()),
                                     2.0 * pi * k / 32.0};
          c.residual(std::abs(concurrence_pure(p) - 1.0));
        }
    out.push_back(c.finish());
  }
  {
    Check c("pure.spin_monotonicity", 1e-12);
    for (int k = 1; k <= 9; ++k) {
      const double r = 0.1 * k;
      double previous = 0.0;
      for (int two_j = 1; two_j <= 8; ++two_j) {
        const double value =
            concurrence_pure({SpinJ(two_j), SpinJ(two_j), r, r, 0.0});
        c.residual(std::max(previous - value, 0.0));
        previous = value;
      }
    }
    out.push_back(c.finish());
  }
  {
    Check c("pure.inversion_symmetry_phi_half_pi", 1e-12);
    for (int i = 0; i < 2000; ++i) {
      const SpinJ j1(rng.integer(1, 8));
      const SpinJ j2(rng.integer(1, 8));
      const double r1 = rng.uniform(0.05, 10.0);
      const double r2 = rng.uniform(0.05, 10.0);
      const double a = concurrence_pure({j1, j2, r1, r2, pi / 2});
      const double b = concurrence_pure({j1, j2, 1.0 / r1, 1.0 / r2, pi / 2});
      c.residual(std::abs(a - b));
    }
    out.push_back(c.finish());
  }
}

// ---------------------------------------------------------------- mixed

RankTwoMixture bell_mixture(Rng& rng, double phi1, double phi2) {
  const SpinJ j1(rng.integer(1, 8));
  const SpinJ j2(rng.integer(1, 8));
  RankTwoMixture m;
  m.comp1 = {j1, j2, std::polar(1.0, rng.angle()), std::polar(1.0, rng.angle()),
             phi1};
  m.comp2 = {j1, j2, std::polar(1.0, rng.angle()), std::polar(1.0, rng.angle()),
             phi2};
  m.p1 = rng.uniform();
  m.p2 = 1.0 - m.p1;
  return m;
}

double scan_max_wootters(const scan::ScanConfig& config) {
  double best = 0.0;
  for (const auto& row : scan::run_scan(config)) {
    if (!row.degenerate) best = std::max(best, row.wootters);
  }
  return best;
}

void mixed_suite(std::uint64_t seed, std::vector<InvariantResult>& out) {
  Rng rng(seed ^ 0xd1b54a32d192ed03ULL);
  {
    Check c("mixed.pure_reduction", 1e-10);
    for (int i = 0; i < 1000; ++i) {
      RankTwoMixture m = random_mixture(rng, 8, 5.0);
      m.p1 = 1.0;
      m.p2 = 0.0;
      c.residual(std::abs(wootters_concurrence(density_matrix(m)) -
                          concurrence_pure(m.comp1)));
    }
    out.push_back(c.finish());
  }
  {
    Check upper("mixed.convexity_upper_bound", 1e-9);
    Check order("mixed.bounds_ordering", 0.0);
    Check spectral("mixed.spectral_consistency", 1e-11);
    Check direct("mixed.direct_path_vs_wootters_sq", 1e-8);
    std::size_t lower_violations = 0;
    double worst_lower = 0.0;
    for (int i = 0; i < 10000; ++i) {
      const RankTwoMixture m = random_mixture(rng, 8, 5.0);
      const DensityMatrix4 rho = density_matrix(m);
      const double w = wootters_concurrence(rho);
      const MixtureQuantities q = mixture_quantities(m);
      upper.residual(std::max(w - (m.p1 * q.C1 + m.p2 * q.C2), 0.0));
      const ConcurrenceBounds b = bounds(m);
      order.expect(b.lower <= b.upper);
      const double gap = b.lower - w * w;
      worst_lower = std::max(worst_lower, gap);
      if (gap > 1e-9) ++lower_violations;

      const SpectralPair sp = spectral_rank2(rho);
      spectral.residual(std::abs(sp.mu1 + sp.mu2 - 1.0));
      const Eigen::Vector4cd v1 = sp.vec1.vector();
      const Eigen::Vector4cd v2 = sp.vec2.vector();
      const Eigen::Matrix4cd rebuilt =
          sp.mu1 * v1 * v1.adjoint() + sp.mu2 * v2 * v2.adjoint();
      spectral.residual(linalg::max_abs(rebuilt - rho.matrix()));
      direct.residual(std::abs(simplified_concurrence_sq_direct(m) - w * w));
    }
    out.push_back(upper.finish());
    out.push_back(order.finish());
    out.push_back(spectral.finish());
    out.push_back(direct.finish());
    Check lower("mixed.lower_bound_characterization", 1e300);
    lower.residual(std::max(worst_lower, 0.0));
    out.push_back(lower.finish("violations=" + std::to_string(lower_violations) +
                               " (reported, not enforced)"));
  }
  {
    Check simplified("mixed.simplified_vs_wootters_bell", 1e-8);
    Check classify("mixed.classify_vs_simplified_orthogonal", 1e-10);
    std::size_t classified = 0;
    for (int i = 0; i < 2000; ++i) {
      const double phi1 = (i % 4 == 0) ? 0.0 : (i % 4 == 1) ? pi / 2 : rng.angle();
      const bool orthogonal = i % 2 == 0 || i % 4 == 1;
      const double phi2 = orthogonal ? phi1 + pi : rng.angle();
      const RankTwoMixture m = bell_mixture(rng, phi1, phi2);
      const DensityMatrix4 rho = density_matrix(m);
      const double w = wootters_concurrence(rho);
      const double s = simplified_concurrence_sq(spectral_rank2(rho));
      simplified.residual(std::abs(s - w * w));
      if (orthogonal) {
        const CaseResult r = classify_case(m);
        if (r.classified()) {
          ++classified;
          classify.residual(std::abs(r.value - s));
        }
      }
    }
    out.push_back(simplified.finish());
    out.push_back(classify.finish("classified=" + std::to_string(classified)));
  }
  {
    Check fig3("mixed.fig3_reaches_one", 1e-9);
    Check fig4("mixed.fig4_strictly_bounded", 0.0);
    for (int two_j : {1, 2, 8}) {
      scan::ScanConfig config;
      config.j1 = SpinJ(two_j);
      config.j2 = SpinJ(two_j);
      scan::apply_preset("fig3", config);
      fig3.residual(1.0 - scan_max_wootters(config));
      scan::apply_preset("fig4", config);
      const double best = scan_max_wootters(config);
      fig4.expect(best > 1e-3 && best < 1.0 - 1e-6);
    }
    out.push_back(fig3.finish());
    out.push_back(fig4.finish());
  }
}

// ---------------------------------------------------------------- oracle

void oracle_suite(std::uint64_t seed, std::vector<InvariantResult>& out) {
  Rng rng(seed ^ 0x94d049bb133111ebULL);
  {
    Check conc("oracle.concurrence_equivalence", 1e-10);
    Check rank("oracle.schmidt_rank_two", 1e-10);
    Check norm("oracle.fock_state_norm", 1e-11);
    for (int i = 0; i < 10000; ++i) {
      const EntangledScsParams p = random_params(rng, 8, 5.0);
      conc.residual(std::abs(oracle::oracle_concurrence(p) - concurrence_pure(p)));
      const FockVector state = oracle::fock_state(p);
      norm.residual(std::abs(state.norm() - 1.0));
      const auto schmidt =
          oracle::schmidt_coefficients(state, p.j1.dim(), p.j2.dim());
      rank.residual(schmidt.size() > 2 ? schmidt(2) : 0.0);
    }
    out.push_back(conc.finish());
    out.push_back(rank.finish());
    out.push_back(norm.finish());
  }
  {
    Check c("oracle.overlap_high_j", 1e-12);
    for (int i = 0; i < 2000; ++i) {
      const SpinJ j(rng.integer(1, 16));
      const SpinCoherentParam p{j, rng.complex_radial(5.0)};
      const Complex dot = coherent_amplitudes(p).dot(coherent_amplitudes(negate(p)));
      c.residual(std::abs(overlap(p, negate(p)) - dot));
    }
    out.push_back(c.finish());
  }
  {
    Check c("oracle.bell_entropy_one_bit", 1e-9);
    for (int two_j1 = 1; two_j1 <= 6; ++two_j1)
      for (int two_j2 = 1; two_j2 <= 6; ++two_j2) {
        const EntangledScsParams p{SpinJ(two_j1), SpinJ(two_j2),
                                   std::polar(1.0, rng.angle()),
                                   std::polar(1.0, rng.angle()), rng.angle()};
        c.residual(std::abs(oracle::entanglement_entropy_bits(p) - 1.0));
      }
    out.push_back(c.finish());
  }
  {
    Check c("oracle.exact_mixture_rank_two", 1e-10);
    for (int i = 0; i < 100; ++i) {
      const RankTwoMixture m = random_mixture(rng, 4, 5.0);
      const ComplexMatrixXd rho = oracle::exact_mixture_density(m);
      c.residual(std::abs(rho.trace() - 1.0));
      const auto eig = linalg::hermitian_eigen(rho);
      c.residual(std::abs(eig.eigenvalues(2)));
      c.residual(std::max(-eig.eigenvalues(eig.eigenvalues.size() - 1), 0.0));
    }
    out.push_back(c.finish());
  }
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"su2", "pure", "mixed", "oracle",
                                              "all"};
  return names;
}

bool is_known_suite(std::string_view name) {
  const auto& names = suite_names();
  return std::find(names.begin(), names.end(), name) != names.end();
}

std::vector<InvariantResult> run_suite(std::string_view suite,
                                       std::uint64_t seed) {
  if (!is_known_suite(suite)) {
    throw std::invalid_argument("unknown suite '" + std::string(suite) + "'");
  }
  std::vector<InvariantResult> out;
  const bool all = suite == "all";
  if (all || suite == "su2") su2_suite(seed, out);
  if (all || suite == "pure") pure_suite(seed, out);
  if (all || suite == "mixed") mixed_suite(seed, out);
  if (all || suite == "oracle") oracle_suite(seed, out);
  return out;
}

std::string format_result(const InvariantResult& r) {
  char buf[256];
  std::snprintf(buf, sizeof buf, "[%s] %-44s n=%-7zu max_residual=%.3e tol=%.1e",
                r.passed ? "PASS" : "FAIL", r.id.c_str(), r.count,
                r.max_residual, r.tolerance);
  std::string line = buf;
  if (!r.note.empty()) line += "  " + r.note;
  return line;
}

}  // namespace scs::verify
