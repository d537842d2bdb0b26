#include "ljsep/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <ostream>
#include <stdexcept>
#include <string>

#include "ljsep/csv.hpp"

namespace ljsep {

namespace {

using std::numbers::pi;

// F(x)/x, continuous at 0 with value -(k^2 + 2k).
double reduced(double x, double k) {
  const double sinc = x == 0.0 ? 1.0 : std::sin(x) / x;
  return (x * x - k * k) * sinc - 2.0 * k * std::cos(x);
}

double full(double x, double k) { return (x * x - k * k) * std::sin(x) - 2.0 * k * x * std::cos(x); }

double full_derivative(double x, double k) {
  return 2.0 * x * (1.0 + k) * std::sin(x) + (x * x - k * k - 2.0 * k) * std::cos(x);
}

double refine(double lo, double hi, double k) {
  double flo = reduced(lo, k);
  // Bisection narrows the bracket, Newton on F finishes; a Newton step that
  // leaves the bracket falls back to bisection.
  for (int it = 0; it < 60 && hi - lo > 1e-6; ++it) {
    const double mid = 0.5 * (lo + hi);
    const double fm = reduced(mid, k);
    if ((fm < 0.0) == (flo < 0.0)) {
      lo = mid;
      flo = fm;
    } else {
      hi = mid;
    }
  }
  double x = 0.5 * (lo + hi);
  for (int it = 0; it < 100; ++it) {
    const double d = full_derivative(x, k);
    double next = d != 0.0 ? x - full(x, k) / d : 0.5 * (lo + hi);
    if (!(next > lo && next < hi)) next = 0.5 * (lo + hi);
    const double fn = reduced(next, k);
    if ((fn < 0.0) == (flo < 0.0)) lo = next; else hi = next;
    const bool done = std::abs(next - x) <= 1e-12 * std::max(1.0, x);
    x = next;
    if (done || fn == 0.0) break;
  }
  return x;
}

}  // namespace

std::vector<double> robin_eigenfrequencies(double m_hat, double c2_hat, int count) {
  if (!(m_hat >= 0.0) || !(c2_hat > 0.0) || count < 1)
    throw std::invalid_argument("robin_eigenfrequencies: need m_hat >= 0, c2_hat > 0, count >= 1");
  std::vector<double> roots;
  roots.reserve(count);
  if (m_hat == 0.0) {
    for (int n = 1; n <= count; ++n) roots.push_back(n * pi);
    return roots;
  }
  const double k = m_hat / c2_hat;
  // Breakpoints at the tangent poles and at the pole x = k of the right side;
  // each piece is scanned on a finer grid so no sign change is skipped.
  std::vector<double> breaks{0.0, k};
  const double limit = (count + 2) * pi + k;
  for (int j = 0; (j + 0.5) * pi < limit; ++j) breaks.push_back((j + 0.5) * pi);
  std::sort(breaks.begin(), breaks.end());
  constexpr int kSub = 16;
  for (std::size_t b = 0; b + 1 < breaks.size() && static_cast<int>(roots.size()) < count; ++b) {
    const double a = breaks[b];
    const double step = (breaks[b + 1] - a) / kSub;
    if (step <= 0.0) continue;
    for (int s = 0; s < kSub && static_cast<int>(roots.size()) < count; ++s) {
      const double lo = a + s * step;
      const double hi = s + 1 == kSub ? breaks[b + 1] : lo + step;
      const double flo = reduced(lo, k);
      const double fhi = reduced(hi, k);
      if (fhi == 0.0) {
        roots.push_back(hi);
      } else if ((flo < 0.0) != (fhi < 0.0) && flo != 0.0) {
        roots.push_back(refine(lo, hi, k));
      }
    }
  }
  if (static_cast<int>(roots.size()) < count)
    throw std::runtime_error("robin_eigenfrequencies: bracket failure after " + std::to_string(roots.size()) + " roots");
  return roots;
}

double transcendental_residual(double x, double m_hat, double c2_hat) {
  return std::abs(std::tan(x) - 2.0 * m_hat * c2_hat * x / (x * x * c2_hat * c2_hat - m_hat * m_hat));
}

std::vector<EigenPair> robin_eigenpairs(double m_hat, double c2_hat, int count) {
  const std::vector<double> roots = robin_eigenfrequencies(m_hat, c2_hat, count);
  const double k = m_hat / c2_hat;
  std::vector<EigenPair> pairs;
  pairs.reserve(roots.size());
  for (std::size_t i = 0; i < roots.size(); ++i) {
    const double w = roots[i];
    const double a = k / w;
    // int_0^1 (a sin wu + cos wu)^2 du
    const double s2 = std::sin(2.0 * w) / (4.0 * w);
    const double integral = a * a * (0.5 - s2) + (0.5 + s2) + a * (1.0 - std::cos(2.0 * w)) / (2.0 * w);
    EigenPair p;
    p.index = static_cast<int>(i) + 1;
    p.lambda_tilde = w;
    p.lambda = c2_hat * w * w;
    p.norm_b = 1.0 / std::sqrt(integral);
    p.coeff_b = p.norm_b;
    p.coeff_a = a * p.norm_b;
    p.ratio = k;
    pairs.push_back(p);
  }
  return pairs;
}

double eigenfunction(const EigenPair& p, double u, int order) {
  const double w = p.lambda_tilde;
  const double s = std::sin(w * u);
  const double c = std::cos(w * u);
  switch (order) {
    case 0: return p.coeff_a * s + p.coeff_b * c;
    case 1: return w * (p.coeff_a * c - p.coeff_b * s);
    case 2: return -w * w * (p.coeff_a * s + p.coeff_b * c);
    default: throw std::invalid_argument("eigenfunction: order must be 0, 1 or 2");
  }
}

TestFunction robin_mode(const EigenPair& p) {
  return TestFunction(
      "psi" + std::to_string(p.index), [p](double u) { return eigenfunction(p, u, 0); },
      [p](double u) { return eigenfunction(p, u, 1); }, [p](double u) { return eigenfunction(p, u, 2); },
      p.ratio == 0.0 ? TestClass::neumann : TestClass::robin, p.ratio);
}

Eigen::VectorXd expansion_coefficients(const std::function<double(double)>& f, const std::vector<EigenPair>& pairs,
                                       int n_max, const Quadrature& rule) {
  if (n_max > static_cast<int>(pairs.size())) throw std::invalid_argument("expansion_coefficients: n_max too large");
  Eigen::VectorXd c(n_max);
  for (int n = 0; n < n_max; ++n) c[n] = rule.integrate([&](double u) { return f(u) * eigenfunction(pairs[n], u); });
  return c;
}

double lyapunov_V(const DensityProfile& rho_bar, const std::vector<EigenPair>& pairs, int n_max) {
  if (n_max > static_cast<int>(pairs.size())) throw std::invalid_argument("lyapunov_V: n_max exceeds available pairs");
  const int m = rho_bar.intervals();
  double v = 0.0;
  Eigen::VectorXd f(m + 1);
  for (int n = 0; n < n_max; ++n) {
    for (int i = 0; i <= m; ++i) f[i] = rho_bar.values[i] * eigenfunction(pairs[n], rho_bar.node(i));
    const double c = integrate(f);
    v += c * c;
  }
  return v;
}

void write_eigen_rows(std::ostream& os, const std::vector<EigenPair>& pairs) {
  for (const EigenPair& p : pairs)
    write_row(os, p.index, p.lambda_tilde, p.lambda, p.coeff_a, p.coeff_b);
}

}  // namespace ljsep
