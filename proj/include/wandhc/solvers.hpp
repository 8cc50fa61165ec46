#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "wandhc/recursion.hpp"

namespace wandhc {

/// Parameters of the scalar map h(x) = alpha*(1+1/x)^k with alpha =
/// lambda/2^k, the one-dimensional reduction of the period-2 system on the
/// symmetric invariant set.
struct ScalarMapSpec {
  int k;
  double lambda;
  double alpha;

  ScalarMapSpec(int k, double lambda);
};

/// alpha*(1+1/x)^k; strictly decreasing in x with range (alpha, inf).
double h_scalar(double x, const ScalarMapSpec& spec);

/// d/dx of h_scalar, always negative.
double h_scalar_derivative(double x, const ScalarMapSpec& spec);

/// The unique xi > 0 with h(xi) = xi, by bisection on [alpha, h(alpha)].
double solve_ti_symmetric(const ScalarMapSpec& spec);

/// A strict two-cycle of the scalar map: h(z) = t and h(t) = z with z != t.
struct TwoCycle {
  double z;
  double t;
};

/// Two-cycle below the critical activity, found as a root of
/// g(x) = h(h(x)) - x on (alpha, xi); the symmetric fixed point is excluded
/// from the bracket. Returns the (z, t) ordering with z > t, or nothing if
/// no strict cycle exists.
std::optional<TwoCycle> solve_two_cycle(const ScalarMapSpec& spec);

/// Closed-form k = 2 two-cycle: z = (1+sqrt(1-lambda))^2/lambda and
/// t = 1/z, defined for 0 < lambda < 1; empty at and above lambda = 1
/// where the cycle merges with the symmetric point.
std::optional<TwoCycle> closed_form_k2(double lambda);

/// k = 3 two-cycles via the parametrization cbrt(lambda) = phi(x), solved
/// on the two monotone branches of phi. Returns both orderings of the
/// cycle, or an empty list at and above lambda = 128/27.
std::vector<TwoCycle> solve_k3_parametrized(double lambda);

enum class SolutionKind { translation_invariant, two_periodic };
enum class SolveMethod {
  closed_form_k2,
  param_k3,
  bisection_2cycle,
  ti_bisection,
  newton_4d,
};

const char* to_string(SolutionKind kind);
const char* to_string(SolveMethod method);

struct SolutionRecord {
  PeriodicState state;
  InvariantSetTag tag;
  SolutionKind kind;
  int k;
  double lambda;
  double residual;
  SolveMethod method;
};

/// Log-uniform lattice {1e-2,...,1e2} restricted to each invariant set,
/// plus 16 random interior points drawn from the given stream.
std::vector<PeriodicState> default_seed_grid(std::uint64_t seed = 0x5eedULL);

/// Damped Newton on state - W(state) from every seed, in log coordinates.
/// Converged roots are deduplicated (inf-distance 1e-6), classified and
/// returned sorted by tag then lexicographically. Non-convergence of a
/// seed is not an error; finding no two-cycle at k = 2, lambda < 1 is.
std::vector<SolutionRecord> solve_full_4d(
    int k, double lambda, const std::vector<PeriodicState>& seeds);

}  // namespace wandhc
