#pragma once

#include <vector>

namespace wandhc {

enum class CriticalSource { formula, numeric_fold };

const char* to_string(CriticalSource source);

struct CriticalValue {
  int k;
  double lambda_cr;
  CriticalSource source;
};

/// Critical activity 2^k (k-1) ((k-1)/k)^k at which the two-cycle merges
/// with the symmetric fixed point. Throws std::domain_error for k < 2.
double lambda_critical(int k);

/// Bifurcation curve of the k = 3 two-cycle parametrization,
///   phi(x) = (x + x*sqrt(1+4x^3)) / (1+x^3) = cbrt(lambda).
/// Increasing on (0, cbrt(2)], decreasing on [cbrt(2), inf).
double phi_k3(double x);

enum class PsiVariant { corrected, as_printed };

/// Translation-invariant companion curve of phi for k = 3. The `corrected`
/// variant uses the numerator head x^2(x^3-3), which reproduces the known
/// phi/psi intersection abscissae; `as_printed` keeps x^2(x^2-3) and does
/// not (kept for documentation of the discrepancy).
double psi_k3(double x, PsiVariant variant = PsiVariant::corrected);

struct PhiMaximum {
  double x;
  double value;
};

/// Maximum of phi on [0.5, 3] by bisection on the analytic derivative.
PhiMaximum find_phi_maximum();

/// Abscissae where phi and psi cross on (0.05, 10): sign scan at 2000
/// points, then bisection per bracket. Sorted ascending.
std::vector<double> find_curve_intersections(
    PsiVariant variant = PsiVariant::corrected);

/// Number of period-2 boundary laws on the symmetric invariant set: the
/// translation-invariant one plus both orderings of each strict two-cycle.
int count_solutions_on_I2(int k, double lambda);

/// Independent estimate of the critical activity: bisection over
/// (0, 2*lambda_critical(k)) on the predicate "a strict two-cycle exists",
/// to 1e-8 absolute in lambda.
double numeric_fold_detection(int k);

struct CurveSample {
  double x;
  double phi_cubed;
  double psi_cubed;
};

/// Uniform samples of phi^3 and psi^3 on [a, b] (n points, endpoints
/// included).
std::vector<CurveSample> sample_curves(double a, double b, int n,
                                       PsiVariant variant = PsiVariant::corrected);

}  // namespace wandhc
