#pragma once

#include <array>
#include <vector>

namespace wandhc {

/// 3x3 row-stochastic transition matrix on the spin alphabet.
struct TransitionKernel {
  std::array<std::array<double, 3>, 3> p{};

  double row_sum(int i) const { return p[i][0] + p[i][1] + p[i][2]; }
  bool is_row_stochastic(double tol = 1e-12) const;
};

/// Single-step wand kernel at the symmetric boundary law (z, z):
///   row 0 = (0, 1/2, 1/2),
///   row 1 = (1/(1+z), z/(1+z), 0),
///   row 2 = (1/(1+z), 0, z/(1+z)).
TransitionKernel kernel_from_law(double z);

/// Two-level chain P_z * P_t by numeric matrix multiplication.
TransitionKernel product_kernel(double z, double t);

/// The published closed form of P_z * P_t. Its middle entries absorb
/// z*t = 1, so it agrees with product_kernel exactly on that family (the
/// k = 2 two-cycles) and nowhere else.
TransitionKernel product_kernel_closed_form(double z, double t);

struct Spectrum {
  double s2;          // second largest eigenvalue by modulus
  double s3;          // the remaining one
  bool complex_pair;  // s2/s3 form a conjugate pair; moduli reported
};

/// Subleading spectrum of a row-stochastic kernel from the characteristic
/// cubic: the structural eigenvalue 1 is deflated exactly and the remaining
/// quadratic is solved in closed form.
Spectrum subleading_spectrum(const TransitionKernel& kernel);

/// Second largest eigenvalue by absolute value (the modulus when the
/// subleading pair is complex).
double second_eigenvalue(const TransitionKernel& kernel);

/// Dobrushin coefficient: half the maximum L1 distance between rows.
double kappa_of(const TransitionKernel& kernel);

struct ConditionCheck {
  double value;
  bool verdict;
};

/// Kesten-Stigum condition for the two-level chain at law (z, t):
/// value = k^2 s2^2; verdict true means the measure is not extreme.
ConditionCheck kesten_stigum(int k, double z, double t);

/// Contraction condition: value = k^2 kappa gamma with gamma = kappa;
/// verdict true means the measure is extreme.
ConditionCheck msw_extremality(int k, double z, double t);

enum class Verdict { extreme, not_extreme, inconclusive };

const char* to_string(Verdict verdict);

struct ExtremalityReport {
  int k;
  double lambda;
  double z;
  double t;
  double s2;
  double ks_value;
  bool ks_nonextremal;
  double kappa;
  double gamma;
  double msw_value;
  bool msw_extremal;
  Verdict verdict;
};

/// Solves for the two-cycle(s) at (k, lambda) and reports both measures:
/// mu1 takes z > t, mu2 the swap. Empty when no strict cycle exists. The
/// contraction verdict is only trusted at k = 2; for k >= 3 the report is
/// inconclusive unless Kesten-Stigum fires.
std::vector<ExtremalityReport> analyze(int k, double lambda);

/// Report for an explicit law pair, without solving.
ExtremalityReport report_for_law(int k, double lambda, double z, double t);

}  // namespace wandhc
