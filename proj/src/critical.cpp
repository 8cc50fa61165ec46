#include "wandhc/critical.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "wandhc/solvers.hpp"

namespace wandhc {

const char* to_string(CriticalSource source) {
  return source == CriticalSource::formula ? "FORMULA" : "NUMERIC_FOLD";
}

double lambda_critical(int k) {
  if (k < 2) throw std::domain_error("lambda_critical requires k >= 2");
  // 2^k (k-1)^{k+1} / k^k with exact integer powers, so that small k come
  // out correctly rounded (k = 2 gives exactly 1, k = 3 exactly 128/27).
  double num = 1.0;
  double den = 1.0;
  for (int i = 0; i < k; ++i) {
    num *= 2.0 * (k - 1);
    den *= k;
  }
  return num * (k - 1) / den;
}

double phi_k3(double x) {
  if (!(x > 0)) throw std::domain_error("phi is defined for x > 0");
  const double x3 = x * x * x;
  return x * (1.0 + std::sqrt(1.0 + 4.0 * x3)) / (1.0 + x3);
}

double psi_k3(double x, PsiVariant variant) {
  if (!(x > 0)) throw std::domain_error("psi is defined for x > 0");
  const double x2 = x * x;
  const double x3 = x2 * x;
  const double head =
      variant == PsiVariant::corrected ? x2 * (x3 - 3.0) : x2 * (x2 - 3.0);
  const double rad = x2 * x2 * (x3 + 3.0) * (x3 + 3.0) + 4.0 * x;
  return (head + std::sqrt(rad)) / (2.0 * x * (x3 + 1.0));
}

namespace {

// phi'(x), with s = sqrt(1+4x^3):
//   phi' = [(1+s) + 6x^3/s] / (1+x^3) - 3x^2 * x(1+s) / (1+x^3)^2
double phi_k3_derivative(double x) {
  const double x3 = x * x * x;
  const double s = std::sqrt(1.0 + 4.0 * x3);
  const double d = 1.0 + x3;
  return ((1.0 + s) + 6.0 * x3 / s) / d - 3.0 * x * x * x * (1.0 + s) / (d * d);
}

// Bisection between two abscissae with f of opposite signs.
double bisect_sign_change(double xa, double xb, const auto& f) {
  double fa = f(xa);
  for (int it = 0; it < 400; ++it) {
    const double mid = 0.5 * (xa + xb);
    if (mid == xa || mid == xb) break;
    const double fm = f(mid);
    if ((fm > 0) == (fa > 0)) {
      xa = mid;
      fa = fm;
    } else {
      xb = mid;
    }
  }
  return 0.5 * (xa + xb);
}

}  // namespace

PhiMaximum find_phi_maximum() {
  const double x = bisect_sign_change(0.5, 3.0, phi_k3_derivative);
  return {x, phi_k3(x)};
}

std::vector<double> find_curve_intersections(PsiVariant variant) {
  const auto diff = [variant](double x) { return phi_k3(x) - psi_k3(x, variant); };
  const double a = 0.05;
  const double b = 10.0;
  const int n = 2000;
  std::vector<double> roots;
  double x_prev = a;
  double d_prev = diff(a);
  for (int i = 1; i < n; ++i) {
    const double x = a + (b - a) * i / (n - 1);
    const double d = diff(x);
    if ((d_prev > 0) != (d > 0))
      roots.push_back(bisect_sign_change(x_prev, x, diff));
    x_prev = x;
    d_prev = d;
  }
  std::sort(roots.begin(), roots.end());
  return roots;
}

int count_solutions_on_I2(int k, double lambda) {
  if (k < 2) throw std::domain_error("count_solutions_on_I2 requires k >= 2");
  if (!(lambda > 0)) throw std::domain_error("activity must be positive");
  int cycles = 0;
  if (k == 2) {
    cycles = closed_form_k2(lambda) ? 1 : 0;
  } else if (k == 3) {
    // Both orderings of each cycle come back from the parametrization.
    cycles = static_cast<int>(solve_k3_parametrized(lambda).size()) / 2;
  } else {
    cycles = solve_two_cycle(ScalarMapSpec(k, lambda)) ? 1 : 0;
  }
  return 1 + 2 * cycles;
}

double numeric_fold_detection(int k) {
  if (k < 2) throw std::domain_error("fold detection requires k >= 2");
  const auto strict_cycle = [k](double lambda) {
    const auto c = solve_two_cycle(ScalarMapSpec(k, lambda));
    return c && std::abs(c->z - c->t) > 1e-6;
  };
  double lo = 2e-9 * lambda_critical(k);
  double hi = 2.0 * lambda_critical(k);
  if (!strict_cycle(lo) || strict_cycle(hi))
    throw std::runtime_error(
        "fold detection: existence predicate is not monotone on the bracket");
  while (hi - lo > 1e-8) {
    const double mid = 0.5 * (lo + hi);
    (strict_cycle(mid) ? lo : hi) = mid;
  }
  return 0.5 * (lo + hi);
}

std::vector<CurveSample> sample_curves(double a, double b, int n,
                                       PsiVariant variant) {
  if (!(a > 0) || !(b > a)) throw std::domain_error("need 0 < a < b");
  if (n < 2) throw std::domain_error("need at least two sample points");
  std::vector<CurveSample> out;
  out.reserve(n);
  for (int i = 0; i < n; ++i) {
    const double x = a + (b - a) * i / (n - 1);
    const double p = phi_k3(x);
    const double q = psi_k3(x, variant);
    out.push_back({x, p * p * p, q * q * q});
  }
  return out;
}

}  // namespace wandhc
