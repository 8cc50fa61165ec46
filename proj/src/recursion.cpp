#include "wandhc/recursion.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace wandhc {

namespace {

// ln(e^a + e^b)
double log_add(double a, double b) {
  const double m = std::max(a, b);
  return m + std::log1p(std::exp(std::min(a, b) - m));
}

// ln(1 + e^a)
double log1p_exp(double a) {
  return a > 0 ? a + std::log1p(std::exp(-a)) : std::log1p(std::exp(a));
}

bool close_rel(double a, double b, double tol) {
  return std::abs(a - b) <= tol * std::max(std::abs(a), std::abs(b));
}

void require_positive(const PeriodicState& s) {
  if (!(s.t1 > 0 && s.t2 > 0 && s.z1 > 0 && s.z2 > 0))
    throw std::invalid_argument("state must be componentwise positive");
}

}  // namespace

const char* to_string(InvariantSetTag tag) {
  switch (tag) {
    case InvariantSetTag::I1: return "I1";
    case InvariantSetTag::I2: return "I2";
    case InvariantSetTag::I3: return "I3";
    case InvariantSetTag::I4: return "I4";
    default: return "NONE";
  }
}

std::array<double, 2> f_map(const std::array<double, 2>& h) {
  const double denom = log_add(h[0], h[1]);
  return {log1p_exp(h[0]) - denom, log1p_exp(h[1]) - denom};
}

bool check_injectivity(const std::array<double, 2>& h,
                       const std::array<double, 2>& l, double tol) {
  const double det = -(std::exp(h[0]) + std::exp(h[1]));
  if (!(det < 0)) return false;  // exp underflow; outside the certified range
  const auto fh = f_map(h);
  const auto fl = f_map(l);
  const bool same_image =
      std::abs(fh[0] - fl[0]) <= tol && std::abs(fh[1] - fl[1]) <= tol;
  if (!same_image) return true;
  return std::abs(h[0] - l[0]) <= tol && std::abs(h[1] - l[1]) <= tol;
}

PeriodicState w_map(const PeriodicState& s, int k, double lambda) {
  require_positive(s);
  if (k < 1) throw std::invalid_argument("order k must be >= 1");
  if (!(lambda > 0)) throw std::invalid_argument("activity must be positive");
  const double loglam = std::log(lambda);
  const auto fz = f_map({std::log(s.z1), std::log(s.z2)});
  const auto ft = f_map({std::log(s.t1), std::log(s.t2)});
  return {std::exp(loglam + k * fz[0]), std::exp(loglam + k * fz[1]),
          std::exp(loglam + k * ft[0]), std::exp(loglam + k * ft[1])};
}

InvariantSetTag classify_state(const PeriodicState& s, double tol) {
  if (!(tol > 0)) throw std::invalid_argument("tolerance must be positive");
  const bool tt = close_rel(s.t1, s.t2, tol);
  const bool zz = close_rel(s.z1, s.z2, tol);
  const bool diag = close_rel(s.t1, s.z1, tol) && close_rel(s.t2, s.z2, tol);
  const bool cross = close_rel(s.t1, s.z2, tol) && close_rel(s.t2, s.z1, tol);
  if (tt && zz && diag) return InvariantSetTag::I1;
  if (tt && zz) return InvariantSetTag::I2;
  if (diag) return InvariantSetTag::I3;
  if (cross) return InvariantSetTag::I4;
  return InvariantSetTag::none;
}

double residual(const PeriodicState& s, int k, double lambda) {
  const PeriodicState w = w_map(s, k, lambda);
  return std::max({std::abs(s.t1 - w.t1), std::abs(s.t2 - w.t2),
                   std::abs(s.z1 - w.z1), std::abs(s.z2 - w.z2)});
}

}  // namespace wandhc
