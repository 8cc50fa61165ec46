#pragma once

#include <array>

namespace wandhc {

/// Boundary-law unknowns of the period-2 system. (t1,t2) lives on odd tree
/// levels, (z1,z2) on even levels; all components positive.
struct PeriodicState {
  double t1, t2, z1, z2;
};

enum class InvariantSetTag { I1, I2, I3, I4, none };

const char* to_string(InvariantSetTag tag);

/// One-level recursion in log coordinates,
///   F_i(h) = ln((1 + e^{h_i}) / (e^{h_1} + e^{h_2})),
/// evaluated log-sum-exp style so it stays finite for |h_i| up to and
/// beyond 500.
std::array<double, 2> f_map(const std::array<double, 2>& h);

/// Injectivity probe for F: true iff F(h) = F(l) (within tol) implies
/// h = l (within tol). The determinant -(z1+z2) of the linearized
/// difference system is checked as well; it is negative for all finite h.
bool check_injectivity(const std::array<double, 2>& h,
                       const std::array<double, 2>& l, double tol = 1e-9);

/// The period-2 map W: the new (t1,t2) is built from (z1,z2) and vice
/// versa, component i mapping to lambda*((1+x_i)/(x_1+x_2))^k. Arithmetic
/// is carried out in log space; the result is exponentiated on exit.
PeriodicState w_map(const PeriodicState& s, int k, double lambda);

/// Most specific invariant set containing the state (I1 wins over
/// I2/I3/I4), with components compared at relative tolerance tol.
InvariantSetTag classify_state(const PeriodicState& s, double tol = 1e-9);

/// Fixed-point defect |s - W(s)|_inf; zero exactly on solutions of the
/// period-2 system.
double residual(const PeriodicState& s, int k, double lambda);

}  // namespace wandhc
