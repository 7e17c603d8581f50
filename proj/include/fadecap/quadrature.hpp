#ifndef FADECAP_QUADRATURE_HPP
#define FADECAP_QUADRATURE_HPP

#include <functional>
#include <stdexcept>
#include <utility>
#include <vector>

namespace fadecap {

/// Error type for quadrature / truncation / optimizer non-convergence.
struct NumericError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Nodes/weights of an n-point Gauss-Legendre rule on [-1, 1].
/// Cached per order; thread-safe.
const std::vector<std::pair<double, double>>& gauss_legendre(int n);

/// Nodes/weights of an n-point Gauss-Laguerre rule (weight e^{-x} on [0,inf)),
/// computed by the Golub-Welsch method so that large orders stay stable.
std::vector<std::pair<double, double>> gauss_laguerre(int n);

/// integral of f over [a, b] with an n-point Gauss-Legendre rule.
double gl_integrate(const std::function<double(double)>& f, double a, double b,
                    int n = 32);

/// Adaptive Gauss-Legendre: bisects panels until the GL15/GL31 difference on
/// each panel falls below abs_tol. Throws NumericError on depth exhaustion.
double adaptive_gl(const std::function<double(double)>& f, double a, double b,
                   double abs_tol = 1e-12, int max_depth = 32);

}  // namespace fadecap

#endif
