#include "fadecap/piecewise_trig.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace fadecap {

namespace {
constexpr double kEmptyPiece = 1e-300;

std::complex<double> cis(double x) { return {std::cos(x), std::sin(x)}; }
}  // namespace

PiecewiseTrig::PiecewiseTrig(std::vector<TrigPiece> pieces)
    : pieces_(std::move(pieces)) {
  std::sort(pieces_.begin(), pieces_.end(),
            [](const TrigPiece& a, const TrigPiece& b) { return a.lo < b.lo; });
}

double PiecewiseTrig::support_lo() const {
  return pieces_.empty() ? 0.0 : pieces_.front().lo;
}

double PiecewiseTrig::support_hi() const {
  return pieces_.empty() ? 0.0 : pieces_.back().hi;
}

double PiecewiseTrig::eval(double f) const {
  for (const auto& p : pieces_) {
    if (f < p.lo || f > p.hi) continue;
    double s = 0.0;
    for (const auto& t : p.terms) {
      double mono = 1.0;
      for (int k = 0; k < t.power; ++k) mono *= f;
      s += t.amp * mono * std::cos(t.freq * f + t.phase);
    }
    return s;
  }
  return 0.0;
}

PiecewiseTrig PiecewiseTrig::shifted(double shift) const {
  std::vector<TrigPiece> out;
  out.reserve(pieces_.size());
  for (const auto& p : pieces_) {
    TrigPiece q{p.lo - shift, p.hi - shift, {}};
    q.terms.reserve(p.terms.size());
    for (const auto& t : p.terms) {
      if (t.power != 0)
        throw std::logic_error("PiecewiseTrig::shifted: power>0 unsupported");
      q.terms.push_back({t.amp, t.freq, t.phase + t.freq * shift, 0});
    }
    out.push_back(std::move(q));
  }
  return PiecewiseTrig(std::move(out));
}

PiecewiseTrig PiecewiseTrig::dilated(double beta, double amp_scale) const {
  std::vector<TrigPiece> out;
  out.reserve(pieces_.size());
  for (const auto& p : pieces_) {
    TrigPiece q{p.lo * beta, p.hi * beta, {}};
    for (const auto& t : p.terms) {
      double amp = t.amp * amp_scale;
      for (int k = 0; k < t.power; ++k) amp /= beta;
      q.terms.push_back({amp, t.freq / beta, t.phase, t.power});
    }
    out.push_back(std::move(q));
  }
  return PiecewiseTrig(std::move(out));
}

PiecewiseTrig PiecewiseTrig::derivative() const {
  std::vector<TrigPiece> out;
  out.reserve(pieces_.size());
  for (const auto& p : pieces_) {
    TrigPiece q{p.lo, p.hi, {}};
    for (const auto& t : p.terms) {
      // d/df [amp f^p cos(af+b)] = amp p f^{p-1} cos(af+b)
      //                           - amp a f^p sin(af+b)
      if (t.power > 0)
        q.terms.push_back({t.amp * t.power, t.freq, t.phase, t.power - 1});
      if (t.freq != 0.0)
        q.terms.push_back(
            {-t.amp * t.freq, t.freq, t.phase - std::numbers::pi / 2, t.power});
      // cos(x - pi/2) = sin(x), so -a*sin(af+b) = -a*cos(af+b-pi/2)
    }
    out.push_back(std::move(q));
  }
  return PiecewiseTrig(std::move(out));
}

PiecewiseTrig PiecewiseTrig::product(const PiecewiseTrig& a,
                                     const PiecewiseTrig& b) {
  std::vector<TrigPiece> out;
  for (const auto& pa : a.pieces_) {
    for (const auto& pb : b.pieces_) {
      const double lo = std::max(pa.lo, pb.lo);
      const double hi = std::min(pa.hi, pb.hi);
      if (hi - lo <= kEmptyPiece) continue;
      TrigPiece q{lo, hi, {}};
      q.terms.reserve(2 * pa.terms.size() * pb.terms.size());
      for (const auto& ta : pa.terms) {
        for (const auto& tb : pb.terms) {
          // cos x cos y = (cos(x+y) + cos(x-y)) / 2
          const double amp = 0.5 * ta.amp * tb.amp;
          const int pw = ta.power + tb.power;
          q.terms.push_back({amp, ta.freq + tb.freq, ta.phase + tb.phase, pw});
          q.terms.push_back({amp, ta.freq - tb.freq, ta.phase - tb.phase, pw});
        }
      }
      out.push_back(std::move(q));
    }
  }
  return PiecewiseTrig(std::move(out));
}

std::complex<double> monomial_exp_integral(int p, double mu, double a,
                                           double b) {
  const double scale = std::max(std::abs(a), std::abs(b));
  if (std::abs(mu) * scale < 1e-2) {
    // Maclaurin in mu: sum_k (i mu)^k / k! * (b^{p+k+1}-a^{p+k+1})/(p+k+1)
    std::complex<double> sum = 0.0, coef = 1.0;
    double pa = 1.0, pb = 1.0;
    for (int k = 0; k < p; ++k) {
      pa *= a;
      pb *= b;
    }
    for (int k = 0; k < 16; ++k) {
      pa *= a;
      pb *= b;
      sum += coef * (pb - pa) / static_cast<double>(p + k + 1);
      coef *= std::complex<double>(0.0, mu) / static_cast<double>(k + 1);
      if (std::abs(coef) * std::max(std::abs(pa), std::abs(pb)) < 1e-300) break;
    }
    return sum;
  }
  const std::complex<double> jm(0.0, mu);
  const std::complex<double> ea = cis(mu * a), eb = cis(mu * b);
  const std::complex<double> j0 = (eb - ea) / jm;
  if (p == 0) return j0;
  const std::complex<double> j1 = (eb * b - ea * a) / jm - j0 / jm;
  if (p == 1) return j1;
  const std::complex<double> j2 =
      (eb * b * b - ea * a * a) / jm - 2.0 * j1 / jm;
  if (p == 2) return j2;
  throw std::logic_error("monomial_exp_integral: power > 2 unsupported");
}

std::complex<double> PiecewiseTrig::integrate_exp(double kappa,
                                                  int extra_power) const {
  std::complex<double> total = 0.0;
  for (const auto& p : pieces_) {
    for (const auto& t : p.terms) {
      // amp f^q cos(af+b) e^{i kappa f}
      //   = amp/2 [ e^{ib} f^q e^{i(kappa+a)f} + e^{-ib} f^q e^{i(kappa-a)f} ]
      const int q = t.power + extra_power;
      total += 0.5 * t.amp *
               (cis(t.phase) * monomial_exp_integral(q, kappa + t.freq, p.lo, p.hi) +
                cis(-t.phase) * monomial_exp_integral(q, kappa - t.freq, p.lo, p.hi));
    }
  }
  return total;
}

}  // namespace fadecap
