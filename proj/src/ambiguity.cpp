#include "fadecap/ambiguity.hpp"

#include <cmath>
#include <numbers>

#include "fadecap/quadrature.hpp"

namespace fadecap {

namespace {
constexpr double kTwoPi = 2.0 * std::numbers::pi;
}

std::complex<double> ambiguity(const PiecewiseTrig& spectrum, double tau,
                               double nu) {
  // support pre-check: G(f+nu) and G(f) overlap only if |nu| < support width
  const double w = spectrum.support_len();
  if (std::abs(nu) >= w) return 0.0;
  const PiecewiseTrig prod =
      PiecewiseTrig::product(spectrum.shifted(nu), spectrum);
  return prod.integrate_exp(kTwoPi * tau);
}

std::complex<double> ambiguity(const PulseSpec& pulse,
                               const AmbiguityQuery& q) {
  return ambiguity(pulse.spectrum(), q.tau, q.nu);
}

namespace {

// sum_k |A(tau - kT, nu_row)|^2 over all k, via Poisson summation:
//   = (1/T) sum_m Fhat(m/T) e^{i 2 pi m tau / T}
// with Fhat(xi) = int P(f) P(f - xi) df and P(f) = G(f + nu_row) G(f).
// Fhat is supported on |xi| <= len(P), so only |m| <= T len(P) survive.
double row_sum_exact(const PiecewiseTrig& spectrum, double T, double tau,
                     double nu_row) {
  const PiecewiseTrig P =
      PiecewiseTrig::product(spectrum.shifted(nu_row), spectrum);
  if (P.empty()) return 0.0;
  const double len = P.support_len();
  const int m_max = static_cast<int>(std::floor(T * len + 1e-12));
  double sum = PiecewiseTrig::product(P, P).integrate(0);  // m = 0
  for (int m = 1; m <= m_max; ++m) {
    const double fxi =
        PiecewiseTrig::product(P, P.shifted(-m / T)).integrate(0);
    sum += 2.0 * fxi * std::cos(kTwoPi * m * tau / T);
  }
  return sum / T;
}

LatticeTailResult tail_exact(const PiecewiseTrig& spectrum, const WHGrid& grid,
                             const AmbiguityQuery& q) {
  const double w = spectrum.support_len();
  LatticeTailResult out;
  const int n_lo = static_cast<int>(std::ceil((q.nu - w) / grid.F));
  const int n_hi = static_cast<int>(std::floor((q.nu + w) / grid.F));
  double total = 0.0;
  for (int n = n_lo; n <= n_hi; ++n) {
    const double nu_row = q.nu - n * grid.F;
    if (std::abs(nu_row) >= w) continue;
    total += row_sum_exact(spectrum, grid.T, q.tau, nu_row);
  }
  total -= std::norm(ambiguity(spectrum, q.tau, q.nu));
  out.value = std::max(total, 0.0);  // exact zero can round negative
  return out;
}

LatticeTailResult tail_rings(const PiecewiseTrig& spectrum, const WHGrid& grid,
                             const AmbiguityQuery& q,
                             const AdaptivePolicy& policy) {
  LatticeTailResult out;
  double total = 0.0;
  const double w = spectrum.support_len();
  double last_ring = 0.0;
  int r = 0;
  for (r = 1; r <= policy.ring_cap; ++r) {
    double ring = 0.0;
    auto add = [&](int k, int n) {
      const double nu_row = q.nu - n * grid.F;
      if (std::abs(nu_row) >= w) return;
      ring += std::norm(ambiguity(spectrum, q.tau - k * grid.T, nu_row));
    };
    for (int k = -r; k <= r; ++k) {
      add(k, r);
      add(k, -r);
    }
    for (int n = -r + 1; n <= r - 1; ++n) {
      add(r, n);
      add(-r, n);
    }
    total += ring;
    last_ring = ring;
    if (ring < policy.ring_tol) break;
  }
  out.rings = std::min(r, policy.ring_cap);
  // ring increments fall off like r^-4 for this family, so the tail beyond
  // the last ring is about last_ring * r / 3
  out.tail_estimate = last_ring * out.rings / 3.0;
  out.converged = (last_ring < policy.ring_tol) ||
                  (out.tail_estimate <= policy.tail_tol);
  out.value = total;
  if (!out.converged)
    throw NumericError("ambiguity_lattice_tail: ring truncation did not "
                       "converge within the ring cap");
  return out;
}

}  // namespace

LatticeTailResult ambiguity_lattice_tail(const PiecewiseTrig& spectrum,
                                         const WHGrid& grid,
                                         const AmbiguityQuery& q,
                                         const AdaptivePolicy& policy) {
  return policy.exact ? tail_exact(spectrum, grid, q)
                      : tail_rings(spectrum, grid, q, policy);
}

LatticeTailResult ambiguity_lattice_tail(const PulseSpec& pulse,
                                         const WHGrid& grid,
                                         const AmbiguityQuery& q,
                                         const AdaptivePolicy& policy) {
  return ambiguity_lattice_tail(pulse.spectrum(), grid, q, policy);
}

double lattice_tail_exact(const PiecewiseTrig& spectrum, const WHGrid& grid,
                          double tau, double nu) {
  return tail_exact(spectrum, grid, {tau, nu}).value;
}

}  // namespace fadecap
