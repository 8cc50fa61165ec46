#include "wandhc/extremality.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "wandhc/solvers.hpp"

namespace wandhc {

bool TransitionKernel::is_row_stochastic(double tol) const {
  for (int i = 0; i < 3; ++i) {
    if (std::abs(row_sum(i) - 1.0) > tol) return false;
    for (int j = 0; j < 3; ++j)
      if (p[i][j] < 0.0) return false;
  }
  return true;
}

TransitionKernel kernel_from_law(double z) {
  if (!(z > 0)) throw std::domain_error("boundary law must be positive");
  TransitionKernel k;
  k.p = {{{0.0, 0.5, 0.5},
          {1.0 / (1.0 + z), z / (1.0 + z), 0.0},
          {1.0 / (1.0 + z), 0.0, z / (1.0 + z)}}};
  return k;
}

TransitionKernel product_kernel(double z, double t) {
  const TransitionKernel a = kernel_from_law(z);
  const TransitionKernel b = kernel_from_law(t);
  TransitionKernel out;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      double s = 0.0;
      for (int l = 0; l < 3; ++l) s += a.p[i][l] * b.p[l][j];
      out.p[i][j] = s;
    }
  return out;
}

TransitionKernel product_kernel_closed_form(double z, double t) {
  if (!(z > 0) || !(t > 0)) throw std::domain_error("law must be positive");
  TransitionKernel k;
  const double oz = 1.0 + z;
  const double ot = 1.0 + t;
  k.p = {{{1.0 / ot, t / (2.0 * ot), t / (2.0 * ot)},
          {z / (oz * ot), (t + 3.0) / (2.0 * oz * ot), 1.0 / (2.0 * oz)},
          {z / (oz * ot), 1.0 / (2.0 * oz), (t + 3.0) / (2.0 * oz * ot)}}};
  return k;
}

Spectrum subleading_spectrum(const TransitionKernel& kernel) {
  if (!kernel.is_row_stochastic())
    throw std::invalid_argument("kernel is not row-stochastic");
  const auto& p = kernel.p;
  const double tr = p[0][0] + p[1][1] + p[2][2];
  const double det = p[0][0] * (p[1][1] * p[2][2] - p[1][2] * p[2][1]) -
                     p[0][1] * (p[1][0] * p[2][2] - p[1][2] * p[2][0]) +
                     p[0][2] * (p[1][0] * p[2][1] - p[1][1] * p[2][0]);
  // Row sums 1 make x = 1 an exact eigenvalue, so the characteristic cubic
  // factors as (x - 1)(x^2 - (tr - 1) x + det).
  const double b = tr - 1.0;
  double disc = b * b - 4.0 * det;
  if (disc < 0.0 && disc > -1e-12 * std::max(1.0, b * b))
    disc = 0.0;  // degenerate pair, rounding only
  if (disc < 0.0) {
    const double modulus = std::sqrt(det);
    return {modulus, modulus, true};
  }
  const double r = std::sqrt(disc);
  double s2 = 0.5 * (b + r);
  double s3 = 0.5 * (b - r);
  if (std::abs(s3) > std::abs(s2)) std::swap(s2, s3);
  return {s2, s3, false};
}

double second_eigenvalue(const TransitionKernel& kernel) {
  return subleading_spectrum(kernel).s2;
}

double kappa_of(const TransitionKernel& kernel) {
  if (!kernel.is_row_stochastic())
    throw std::invalid_argument("kernel is not row-stochastic");
  double best = 0.0;
  for (int i = 0; i < 3; ++i)
    for (int j = i + 1; j < 3; ++j) {
      double d = 0.0;
      for (int l = 0; l < 3; ++l) d += std::abs(kernel.p[i][l] - kernel.p[j][l]);
      best = std::max(best, d);
    }
  return 0.5 * best;
}

ConditionCheck kesten_stigum(int k, double z, double t) {
  const double s2 = second_eigenvalue(product_kernel(z, t));
  const double value = k * k * s2 * s2;
  return {value, value > 1.0};
}

ConditionCheck msw_extremality(int k, double z, double t) {
  const double kappa = kappa_of(product_kernel(z, t));
  const double value = static_cast<double>(k) * k * kappa * kappa;
  return {value, value < 1.0};
}

const char* to_string(Verdict verdict) {
  switch (verdict) {
    case Verdict::extreme: return "EXTREME";
    case Verdict::not_extreme: return "NOT_EXTREME";
    default: return "INCONCLUSIVE";
  }
}

ExtremalityReport report_for_law(int k, double lambda, double z, double t) {
  if (k < 2) throw std::domain_error("extremality analysis requires k >= 2");
  const TransitionKernel chain = product_kernel(z, t);
  const double s2 = second_eigenvalue(chain);
  const double kappa = kappa_of(chain);
  const double gamma = kappa;  // the contraction bound is taken with gamma = kappa
  const double ks_value = k * k * s2 * s2;
  const double msw_value = static_cast<double>(k) * k * kappa * gamma;
  const bool ks_fires = ks_value > 1.0;
  const bool msw_holds = msw_value < 1.0;
  if (ks_fires && msw_holds)
    throw std::logic_error(
        "extremality contract violated: both conditions hold at once");
  Verdict verdict = Verdict::inconclusive;
  if (ks_fires)
    verdict = Verdict::not_extreme;
  else if (k == 2 && msw_holds)
    verdict = Verdict::extreme;
  return {k,     lambda, z,        t,         s2,      ks_value,
          ks_fires, kappa,  gamma,    msw_value, msw_holds, verdict};
}

std::vector<ExtremalityReport> analyze(int k, double lambda) {
  if (k < 2) throw std::domain_error("extremality analysis requires k >= 2");
  if (!(lambda > 0)) throw std::domain_error("activity must be positive");

  std::optional<TwoCycle> cycle;
  if (k == 2) {
    cycle = closed_form_k2(lambda);
  } else if (k == 3) {
    const auto pairs = solve_k3_parametrized(lambda);
    if (!pairs.empty()) cycle = pairs.front();
  } else {
    cycle = solve_two_cycle(ScalarMapSpec(k, lambda));
  }
  if (!cycle) return {};

  const double hi = std::max(cycle->z, cycle->t);
  const double lo = std::min(cycle->z, cycle->t);
  return {report_for_law(k, lambda, hi, lo),
          report_for_law(k, lambda, lo, hi)};
}

}  // namespace wandhc
