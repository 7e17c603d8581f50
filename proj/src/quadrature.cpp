#include "fadecap/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <mutex>
#include <numbers>

namespace fadecap {

namespace {

// Legendre nodes by Newton iteration on P_n (classic gauleg).
std::vector<std::pair<double, double>> make_legendre(int n) {
  std::vector<std::pair<double, double>> rule(n);
  const int m = (n + 1) / 2;
  for (int i = 0; i < m; ++i) {
    double x = std::cos(std::numbers::pi * (i + 0.75) / (n + 0.5));
    double pp = 0.0;
    for (int it = 0; it < 100; ++it) {
      double p1 = 1.0, p2 = 0.0;
      for (int j = 0; j < n; ++j) {
        const double p3 = p2;
        p2 = p1;
        p1 = ((2.0 * j + 1.0) * x * p2 - j * p3) / (j + 1.0);
      }
      pp = n * (x * p1 - p2) / (x * x - 1.0);
      const double dx = p1 / pp;
      x -= dx;
      if (std::abs(dx) < 1e-15) break;
    }
    const double w = 2.0 / ((1.0 - x * x) * pp * pp);
    rule[i] = {-x, w};
    rule[n - 1 - i] = {x, w};
  }
  return rule;
}

// Symmetric tridiagonal eigensolve (QL with implicit shifts), tracking the
// first row of the eigenvector matrix; enough for Golub-Welsch weights.
void tql_first_row(std::vector<double>& d, std::vector<double>& e,
                   std::vector<double>& z) {
  const int n = static_cast<int>(d.size());
  for (int l = 0; l < n; ++l) {
    int iter = 0;
    int m;
    do {
      for (m = l; m < n - 1; ++m) {
        const double dd = std::abs(d[m]) + std::abs(d[m + 1]);
        if (std::abs(e[m]) <= 1e-300 + 1e-16 * dd) break;
      }
      if (m != l) {
        if (iter++ == 60) throw NumericError("tql: too many iterations");
        double g = (d[l + 1] - d[l]) / (2.0 * e[l]);
        double r = std::hypot(g, 1.0);
        g = d[m] - d[l] + e[l] / (g + std::copysign(r, g));
        double s = 1.0, c = 1.0, p = 0.0;
        int i = m - 1;
        for (; i >= l; --i) {
          double f = s * e[i];
          const double b = c * e[i];
          r = std::hypot(f, g);
          e[i + 1] = r;
          if (r == 0.0) {
            d[i + 1] -= p;
            e[m] = 0.0;
            break;
          }
          s = f / r;
          c = g / r;
          g = d[i + 1] - p;
          r = (d[i] - g) * s + 2.0 * c * b;
          p = s * r;
          d[i + 1] = g + p;
          g = c * r - b;
          f = z[i + 1];
          z[i + 1] = s * z[i] + c * f;
          z[i] = c * z[i] - s * f;
        }
        if (r == 0.0 && i >= l) continue;
        d[l] -= p;
        e[l] = g;
        e[m] = 0.0;
      }
    } while (m != l);
  }
}

double gl_panel(const std::function<double(double)>& f, double a, double b,
                const std::vector<std::pair<double, double>>& rule) {
  const double mid = 0.5 * (a + b), half = 0.5 * (b - a);
  double s = 0.0;
  for (const auto& [x, w] : rule) s += w * f(mid + half * x);
  return s * half;
}

double adaptive_rec(const std::function<double(double)>& f, double a, double b,
                    double tol, int depth,
                    const std::vector<std::pair<double, double>>& lo,
                    const std::vector<std::pair<double, double>>& hi) {
  const double coarse = gl_panel(f, a, b, lo);
  const double fine = gl_panel(f, a, b, hi);
  if (std::abs(fine - coarse) <= tol) return fine;
  if (depth <= 0) throw NumericError("adaptive_gl: panel refinement exhausted");
  const double mid = 0.5 * (a + b);
  return adaptive_rec(f, a, mid, 0.5 * tol, depth - 1, lo, hi) +
         adaptive_rec(f, mid, b, 0.5 * tol, depth - 1, lo, hi);
}

}  // namespace

const std::vector<std::pair<double, double>>& gauss_legendre(int n) {
  static std::mutex mu;
  static std::map<int, std::vector<std::pair<double, double>>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(n);
  if (it == cache.end()) it = cache.emplace(n, make_legendre(n)).first;
  return it->second;
}

std::vector<std::pair<double, double>> gauss_laguerre(int n) {
  // Jacobi matrix of the Laguerre polynomials: diag 2k+1, offdiag k.
  std::vector<double> d(n), e(n, 0.0), z(n, 0.0);
  for (int k = 0; k < n; ++k) d[k] = 2.0 * k + 1.0;
  for (int k = 1; k < n; ++k) e[k - 1] = static_cast<double>(k);
  z[0] = 1.0;
  tql_first_row(d, e, z);
  std::vector<std::pair<double, double>> rule(n);
  for (int k = 0; k < n; ++k) rule[k] = {d[k], z[k] * z[k]};  // mu0 = 1
  std::sort(rule.begin(), rule.end());
  return rule;
}

double gl_integrate(const std::function<double(double)>& f, double a, double b,
                    int n) {
  return gl_panel(f, a, b, gauss_legendre(n));
}

double adaptive_gl(const std::function<double(double)>& f, double a, double b,
                   double abs_tol, int max_depth) {
  if (a == b) return 0.0;
  return adaptive_rec(f, a, b, abs_tol, max_depth, gauss_legendre(15),
                      gauss_legendre(31));
}

}  // namespace fadecap
