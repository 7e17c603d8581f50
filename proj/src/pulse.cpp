#include "fadecap/pulse.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "fadecap/quadrature.hpp"

namespace fadecap {

namespace {
constexpr double kPi = std::numbers::pi;

PiecewiseTrig make_spectrum(double tf, double c, double beta) {
  (void)tf;
  const double s = std::sqrt(c);
  if (beta == 0.0) {
    // sinc limit: rectangular spectrum of height sqrt(c) on [-1/(2c), 1/(2c)]
    const double f2 = 1.0 / (2.0 * c);
    return PiecewiseTrig({{-f2, f2, {{s, 0.0, 0.0, 0}}}});
  }
  const double f1 = (1.0 - beta) / (2.0 * c);
  const double f2 = (1.0 + beta) / (2.0 * c);  // = c/2
  // Taper via the half-angle form: sqrt(c/2 (1+cos(w(|f|-f1)))) = s cos(u),
  // u = (pi c / (2 beta)) (|f| - f1), u in [0, pi/2] on the taper.
  const double w2 = kPi * c / (2.0 * beta);
  return PiecewiseTrig({
      {-f2, -f1, {{s, -w2, -w2 * f1, 0}}},
      {-f1, f1, {{s, 0.0, 0.0, 0}}},
      {f1, f2, {{s, w2, -w2 * f1, 0}}},
  });
}
}  // namespace

PulseSpec::PulseSpec(double tf, bool sinc)
    : tf_(tf), c_(std::sqrt(tf)), beta_(sinc ? 0.0 : tf - 1.0),
      spectrum_(make_spectrum(tf_, c_, beta_)) {}

PulseSpec PulseSpec::make(double tf_product) {
  if (!(tf_product > 1.0 && tf_product < 2.0))
    throw std::invalid_argument("PulseSpec: tf_product must be in (1, 2)");
  return PulseSpec(tf_product, false);
}

PulseSpec PulseSpec::sinc_limit() { return PulseSpec(1.0, true); }

PiecewiseTrig PulseSpec::spectrum_dilated(double beta) const {
  if (!(beta > 0.0)) throw std::invalid_argument("dilation factor must be > 0");
  return spectrum_.dilated(beta, 1.0 / std::sqrt(beta));
}

double eval_freq(const PulseSpec& pulse, double f) {
  const double c = pulse.support_len();
  const double beta = pulse.rolloff();
  const double af = std::abs(f);
  if (beta == 0.0) return af <= 1.0 / (2.0 * c) ? std::sqrt(c) : 0.0;
  const double f1 = (1.0 - beta) / (2.0 * c);
  const double f2 = (1.0 + beta) / (2.0 * c);
  if (af <= f1) return std::sqrt(c);
  if (af >= f2) return 0.0;
  const double x = kPi * c / beta * (af - f1);
  return std::sqrt(0.5 * c * (1.0 + std::cos(x)));
}

namespace {

// g(t) = (1/sqrt(c)) N(t)/D(t) with
//   N(t) = sin(a t) + b t cos(d t),  D(t) = (pi/c) (t - b^2 t^3)
//   a = pi(1-beta)/c, b = 4 beta / c, d = pi(1+beta)/c.
// Removable singularities at t = 0 and t = +-1/b.
struct RrcTime {
  double a, b, d, pref, c;

  explicit RrcTime(const PulseSpec& p) {
    c = p.support_len();
    const double beta = p.rolloff();
    a = kPi * (1.0 - beta) / c;
    b = 4.0 * beta / c;
    d = kPi * (1.0 + beta) / c;
    pref = 1.0 / std::sqrt(c);
  }

  double num(double t) const { return std::sin(a * t) + b * t * std::cos(d * t); }
  double num1(double t) const {
    return a * std::cos(a * t) + b * std::cos(d * t) - b * d * t * std::sin(d * t);
  }
  double num2(double t) const {
    return -a * a * std::sin(a * t) - 2.0 * b * d * std::sin(d * t) -
           b * d * d * t * std::cos(d * t);
  }
  double num3(double t) const {
    return -a * a * a * std::cos(a * t) - 3.0 * b * d * d * std::cos(d * t) +
           b * d * d * d * t * std::sin(d * t);
  }
  double den(double t) const { return (kPi / c) * t * (1.0 - b * b * t * t); }
  double den1(double t) const { return (kPi / c) * (1.0 - 3.0 * b * b * t * t); }
  double den2(double t) const { return -(kPi / c) * 6.0 * b * b * t; }
  double den3() const { return -(kPi / c) * 6.0 * b * b; }

  // ratio of the series N/(t-t*) over D/(t-t*) around a common simple zero
  double series_at(double tstar, double t) const {
    const double dt = t - tstar;
    const double n = num1(tstar) + 0.5 * num2(tstar) * dt +
                     num3(tstar) * dt * dt / 6.0;
    const double dd = den1(tstar) + 0.5 * den2(tstar) * dt +
                      den3() * dt * dt / 6.0;
    return pref * n / dd;
  }

  double operator()(double t) const {
    const double sing_tol = 1e-6;
    if (std::abs(t) < sing_tol) return series_at(0.0, t);
    if (b > 0.0) {
      const double ts = 1.0 / b;
      if (std::abs(std::abs(t) - ts) < sing_tol)
        return series_at(std::copysign(ts, t), t);
    }
    return pref * num(t) / den(t);
  }
};

}  // namespace

double eval_time(const PulseSpec& pulse, double t) {
  return RrcTime(pulse)(t);
}

double tight_frame_residual(const PulseSpec& pulse, int k, double f) {
  const double c = pulse.support_len();
  // G(x) is zero outside |x| <= c/2, so only n with both arguments inside
  // the support contribute.
  const double step = 1.0 / c;
  const int n_lo = static_cast<int>(std::floor((f - c / 2.0) / step)) - 1;
  const int n_hi = static_cast<int>(std::ceil((f + c / 2.0) / step)) + 1;
  double sum = 0.0;
  for (int n = n_lo; n <= n_hi; ++n) {
    const double x = f - n * step;
    sum += eval_freq(pulse, x) * eval_freq(pulse, x - k * c);
  }
  return sum - (k == 0 ? c : 0.0);
}

DecayConstants decay_constants(const PulseSpec& pulse) {
  if (pulse.is_sinc())
    throw std::domain_error(
        "decay_constants: 1/t^2 decay requires tf_product > 1");
  const double c = pulse.support_len();
  const double beta = pulse.rolloff();
  const double b = 4.0 * beta / c;
  const RrcTime g(pulse);

  const double t0 = c;
  const double horizon = 1e4 * c;
  // Dense sampling: fixed step well below the fastest oscillation period
  // (2 pi / d ~ 2c/(1+beta)), log-thinned far out where the envelope is flat.
  double max_gt2 = 0.0;
  const double step = c / 64.0;
  double t = t0;
  while (t <= std::min(horizon, 64.0 * c)) {
    max_gt2 = std::max(max_gt2, std::abs(g(t)) * t * t);
    t += step;
  }
  while (t <= horizon) {
    max_gt2 = std::max(max_gt2, std::abs(g(t)) * t * t);
    t *= 1.0 + 1.0 / 512.0;
  }
  // Analytic envelope for t >= 2/b: |g| t^2 <= 2 sqrt(c) / (pi b),
  // from |N| <= 1 + bt <= (3/2) bt and |D| >= (pi/c)(3/4) b^2 t^3 there.
  const double env = 2.0 * std::sqrt(c) / (kPi * b);
  const double c_decay = 1.05 * std::max(max_gt2, env);
  return {c_decay, t0, horizon};
}

long long guard_slots(const PulseSpec& pulse, const WHGrid& grid, double eta,
                      int n_subcarriers) {
  if (!(eta > 0.0 && eta < 1.0))
    throw std::invalid_argument("guard_slots: eta must be in (0,1)");
  if (n_subcarriers < 1)
    throw std::invalid_argument("guard_slots: n_subcarriers must be >= 1");
  const DecayConstants dc = decay_constants(pulse);
  const double T = grid.T;
  const double zeta = 1.0;  // decay exponent of this family
  const double cprime = std::riemann_zeta(1.0 + zeta) / std::pow(T, 1.0 + zeta);
  const double n_eff = 2.0 * std::floor((n_subcarriers - 1) / 2.0) + 1.0;
  const double front = 2.0 * n_eff * dc.c_decay * dc.c_decay * cprime;
  // bound(K) = front * ((K+1/2) T)^-zeta / zeta  <= eta
  const double need = std::pow(front / (zeta * eta), 1.0 / zeta) / T - 0.5;
  constexpr long long kCap = 1000000000LL;
  if (!(need < static_cast<double>(kCap)))
    throw NumericError("guard_slots: K_g above cap; eta unattainable");
  long long kg = need <= 0.0 ? 0 : static_cast<long long>(std::ceil(need));
  // ceil can land exactly on the boundary; nudge if rounding overshot
  auto bound = [&](long long k) {
    return front / (zeta * std::pow((k + 0.5) * T, zeta));
  };
  while (kg > 0 && bound(kg - 1) <= eta) --kg;
  while (bound(kg) > eta) ++kg;
  return kg;
}

Moments moments(const PulseSpec& pulse) {
  const PiecewiseTrig& G = pulse.spectrum();
  const double d_f2 = PiecewiseTrig::product(G, G).integrate(2);
  if (pulse.is_sinc())
    throw std::domain_error("moments: d_t2 diverges in the sinc limit");
  const PiecewiseTrig Gp = G.derivative();
  const double gp2 = PiecewiseTrig::product(Gp, Gp).integrate(0);
  const double d_t2 = gp2 / (4.0 * kPi * kPi);
  return {d_t2, d_f2};
}

}  // namespace fadecap
