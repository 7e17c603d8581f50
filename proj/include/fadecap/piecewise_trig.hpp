#ifndef FADECAP_PIECEWISE_TRIG_HPP
#define FADECAP_PIECEWISE_TRIG_HPP

#include <complex>
#include <vector>

namespace fadecap {

/// One additive term amp * f^power * cos(freq*f + phase) on a piece.
struct TrigTerm {
  double amp;
  double freq;
  double phase;
  int power;  // 0..2 supported by the integrators
};

struct TrigPiece {
  double lo, hi;
  std::vector<TrigTerm> terms;
};

/// A function that is a finite sum of (monomial x cosine) terms on each of a
/// finite set of disjoint intervals, and zero elsewhere. Closed under shift,
/// dilation, differentiation and multiplication, with closed-form integrals
/// against e^{i kappa f}. This is the workhorse behind the pulse spectrum,
/// ambiguity values and lattice sums: no oscillatory quadrature anywhere.
class PiecewiseTrig {
 public:
  PiecewiseTrig() = default;
  explicit PiecewiseTrig(std::vector<TrigPiece> pieces);

  const std::vector<TrigPiece>& pieces() const { return pieces_; }
  bool empty() const { return pieces_.empty(); }

  double support_lo() const;
  double support_hi() const;
  double support_len() const { return empty() ? 0.0 : support_hi() - support_lo(); }

  double eval(double f) const;

  /// H(f) = this(f + shift)
  PiecewiseTrig shifted(double shift) const;

  /// H(f) = amp_scale * this(f / beta), beta > 0
  PiecewiseTrig dilated(double beta, double amp_scale) const;

  /// term-wise derivative (valid inside pieces; jumps live at boundaries)
  PiecewiseTrig derivative() const;

  static PiecewiseTrig product(const PiecewiseTrig& a, const PiecewiseTrig& b);

  /// integral of this(f) * f^extra_power * e^{i kappa f} df over the support
  std::complex<double> integrate_exp(double kappa, int extra_power = 0) const;

  /// real moment integral of this(f) * f^extra_power
  double integrate(int extra_power = 0) const {
    return integrate_exp(0.0, extra_power).real();
  }

 private:
  std::vector<TrigPiece> pieces_;  // sorted by lo, disjoint
};

/// int_{a}^{b} f^p e^{i mu f} df with a small-|mu| series branch.
std::complex<double> monomial_exp_integral(int p, double mu, double a, double b);

}  // namespace fadecap

#endif
