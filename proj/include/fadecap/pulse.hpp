#ifndef FADECAP_PULSE_HPP
#define FADECAP_PULSE_HPP

#include "fadecap/piecewise_trig.hpp"
#include "fadecap/wh_grid.hpp"

namespace fadecap {

/// Root-raised-cosine prototype pulse, parameterized by the grid product
/// TF in (1,2). In normalized units the spectrum G is supported on
/// [-c/2, c/2] with c = sqrt(TF), and the WH set (g, c, c) is orthonormal.
///
/// tf_product == 1 is the sinc limit (rectangular spectrum); it is only
/// constructible through sinc_limit() because the 1/t^2 decay guarantees
/// of the family require TF > 1.
class PulseSpec {
 public:
  static PulseSpec make(double tf_product);
  static PulseSpec sinc_limit();

  double tf_product() const { return tf_; }
  double support_len() const { return c_; }   // c = sqrt(TF)
  double rolloff() const { return beta_; }    // TF - 1
  bool is_sinc() const { return beta_ == 0.0; }

  /// matched square lattice (T = F = c) on which this pulse is orthonormal
  WHGrid natural_grid() const { return {c_, c_}; }

  /// frequency response G(f), exact piecewise representation
  const PiecewiseTrig& spectrum() const { return spectrum_; }

  /// spectrum of the dilated pulse sqrt(beta) g(beta t): G(f/beta)/sqrt(beta)
  PiecewiseTrig spectrum_dilated(double beta) const;

 private:
  PulseSpec(double tf, bool sinc);
  double tf_, c_, beta_;
  PiecewiseTrig spectrum_;
};

/// G(f) by the three-branch closed form. Real, even, non-negative,
/// zero outside |f| <= c/2.
double eval_freq(const PulseSpec& pulse, double f);

/// g(t) from the closed-form impulse response; the removable singularities
/// at t = 0 and t = +-c/(4 beta) are evaluated by a local series.
double eval_time(const PulseSpec& pulse, double t);

/// sum_n G(f - n/c) G(f - n/c - k c) - c delta[k]; finitely many terms.
double tight_frame_residual(const PulseSpec& pulse, int k, double f);

struct DecayConstants {
  double c_decay;  // |g(t)| <= c_decay / t^2 for t >= t0
  double t0;
  double horizon;  // certified by dense sampling out to this t
};

/// Numerically certified 1/t^2 envelope constants (the family guarantees
/// g(t) = O(1/t^2) for TF > 1 but no explicit constants).
DecayConstants decay_constants(const PulseSpec& pulse);

struct GuardConfig {
  double eta;
  double c_decay;
  double t0;
  long long guard_slots;
};

/// Smallest K_g such that
///   2 (2 floor((N-1)/2) + 1) c_decay^2 c' * int_{(K_g+1/2)T}^{inf} t^-2 dt
/// falls below eta, with c' = sum_{k>=1} (kT)^-2. Throws NumericError if no
/// K_g below the cap (1e9) satisfies the bound.
long long guard_slots(const PulseSpec& pulse, const WHGrid& grid, double eta,
                      int n_subcarriers);

struct Moments {
  double d_t2;  // int t^2 |g(t)|^2 dt
  double d_f2;  // int f^2 |G(f)|^2 df
};

/// Second moments of the pulse in time and frequency. d_f2 is a closed-form
/// piecewise integral; d_t2 uses Parseval (int |G'|^2 / 4 pi^2), which sums
/// the slowly decaying t^2 |g|^2 tail exactly.
Moments moments(const PulseSpec& pulse);

}  // namespace fadecap

#endif
