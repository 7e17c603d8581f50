#ifndef FADECAP_AMBIGUITY_HPP
#define FADECAP_AMBIGUITY_HPP

#include <complex>

#include "fadecap/piecewise_trig.hpp"
#include "fadecap/pulse.hpp"
#include "fadecap/wh_grid.hpp"

namespace fadecap {

struct AmbiguityQuery {
  double tau;
  double nu;
};

/// A_g(tau, nu) = int g(t) g*(t - tau) e^{-i 2 pi nu t} dt, evaluated in the
/// frequency domain as int G(f + nu) G(f) e^{i 2 pi f tau} df (exact for the
/// real, compactly supported G of this family).
std::complex<double> ambiguity(const PiecewiseTrig& spectrum, double tau,
                               double nu);
std::complex<double> ambiguity(const PulseSpec& pulse, const AmbiguityQuery& q);

/// Truncation policy for lattice sums.
struct AdaptivePolicy {
  double ring_tol = 1e-12;  // stop once a full square ring adds less than this
  int ring_cap = 1000;
  double tail_tol = 1e-9;   // acceptable estimated tail at the cap
  bool exact = true;        // use the exact Poisson row-sum evaluation
};

struct LatticeTailResult {
  double value = 0.0;
  int rings = 0;            // rings walked (0 for the exact path)
  double tail_estimate = 0.0;
  bool converged = true;
};

/// S_g(tau, nu) = sum_{(k,n) != (0,0)} |A_g(tau - kT, nu - nF)|^2.
///
/// Exact path: for each Doppler row n the sum over k collapses, via Poisson
/// summation, to the few nonzero Fourier samples of |A_g(., nu - nF)|^2,
/// which are closed-form autocorrelation integrals of the band-limited
/// spectrum product. No truncation error.
///
/// Ring path: expanding square rings per the stated policy, with an r^-3
/// tail estimate at the cap. Kept as the independent cross-check route.
LatticeTailResult ambiguity_lattice_tail(const PiecewiseTrig& spectrum,
                                         const WHGrid& grid,
                                         const AmbiguityQuery& q,
                                         const AdaptivePolicy& policy = {});
LatticeTailResult ambiguity_lattice_tail(const PulseSpec& pulse,
                                         const WHGrid& grid,
                                         const AmbiguityQuery& q,
                                         const AdaptivePolicy& policy = {});

/// Exact row-sum evaluation; thin wrapper used by the bound machinery.
double lattice_tail_exact(const PiecewiseTrig& spectrum, const WHGrid& grid,
                          double tau, double nu);

}  // namespace fadecap

#endif
