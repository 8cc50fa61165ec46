#include "wandhc/solvers.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "wandhc/critical.hpp"
#include "wandhc/rng.hpp"

namespace wandhc {

ScalarMapSpec::ScalarMapSpec(int k_, double lambda_)
    : k(k_), lambda(lambda_), alpha(lambda_ / std::pow(2.0, k_)) {
  if (k < 2) throw std::domain_error("scalar map requires k >= 2");
  if (!(lambda > 0)) throw std::domain_error("activity must be positive");
}

double h_scalar(double x, const ScalarMapSpec& spec) {
  if (!(x > 0)) throw std::invalid_argument("h is defined for x > 0");
  return std::exp(std::log(spec.alpha) + spec.k * std::log1p(1.0 / x));
}

double h_scalar_derivative(double x, const ScalarMapSpec& spec) {
  return -spec.k * h_scalar(x, spec) / (x * (x + 1.0));
}

double solve_ti_symmetric(const ScalarMapSpec& spec) {
  // h decreases, so h(x) - x changes sign exactly once on [alpha, h(alpha)].
  double lo = spec.alpha;
  double hi = h_scalar(spec.alpha, spec);
  for (int it = 0; it < 400; ++it) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;
    (h_scalar(mid, spec) > mid ? lo : hi) = mid;
  }
  return 0.5 * (lo + hi);
}

std::optional<TwoCycle> solve_two_cycle(const ScalarMapSpec& spec) {
  const double xi = solve_ti_symmetric(spec);
  const auto g = [&spec](double x) {
    return h_scalar(h_scalar(x, spec), spec) - x;
  };

  const double lo = spec.alpha + 1e-12;
  const double hi = xi - 1e-8;
  if (!(hi > lo)) return std::nullopt;

  if (!(g(lo) > 0)) {
    // The lower cycle point is within 1e-12 of alpha, below resolution of
    // the bracket. Accept (h(alpha), alpha) if it already closes the cycle.
    const double beta = h_scalar(spec.alpha, spec);
    if (std::abs(h_scalar(beta, spec) - spec.alpha) <= 1e-10)
      return TwoCycle{beta, spec.alpha};
    return std::nullopt;
  }
  if (g(hi) > 0) return std::nullopt;  // no crossing below the fixed point

  double a = lo;
  double b = hi;
  for (int it = 0; it < 400; ++it) {
    const double mid = 0.5 * (a + b);
    if (mid <= a || mid >= b) break;
    (g(mid) > 0 ? a : b) = mid;
  }
  const double x0 = 0.5 * (a + b);
  const double x1 = h_scalar(x0, spec);
  if (!(x1 > x0)) return std::nullopt;  // merged with the symmetric point
  if (std::abs(g(x0)) > 1e-10 * std::max(1.0, x1)) return std::nullopt;
  return TwoCycle{x1, x0};
}

std::optional<TwoCycle> closed_form_k2(double lambda) {
  if (!(lambda > 0)) throw std::domain_error("activity must be positive");
  if (lambda >= 1.0) return std::nullopt;
  const double s = std::sqrt(1.0 - lambda);
  const double z = (1.0 + s) * (1.0 + s) / lambda;
  return TwoCycle{z, lambda / ((1.0 + s) * (1.0 + s))};
}

std::vector<TwoCycle> solve_k3_parametrized(double lambda) {
  if (!(lambda > 0)) throw std::domain_error("activity must be positive");
  std::vector<TwoCycle> out;
  const double b = std::cbrt(lambda);
  const double x_peak = std::cbrt(2.0);
  // At the fold the two branch roots merge into the symmetric point; treat
  // a 1e-12 neighborhood of the peak value as merged.
  if (b >= phi_k3(x_peak) - 1e-12) return out;

  const auto bisect_branch = [&](double xa, double xb, bool increasing) {
    for (int it = 0; it < 400; ++it) {
      const double mid = 0.5 * (xa + xb);
      if (mid <= xa || mid >= xb) break;
      const bool below = phi_k3(mid) < b;
      if (below == increasing)
        xa = mid;
      else
        xb = mid;
    }
    return 0.5 * (xa + xb);
  };

  double lo = std::min(0.5, b / 4.0);  // phi(x) ~ 2x near zero
  while (phi_k3(lo) >= b) lo *= 0.5;
  const double x_low = bisect_branch(lo, x_peak, true);

  double hi = 2.0 * x_peak;  // phi decays like 2/sqrt(x) at infinity
  while (phi_k3(hi) >= b) hi *= 2.0;
  const double x_high = bisect_branch(x_peak, hi, false);

  for (const double x : {x_low, x_high}) {
    const double x3 = x * x * x;
    const double y = b * (1.0 + x3) / (2.0 * x3);
    out.push_back(TwoCycle{x3, y * y * y});
  }
  return out;
}

const char* to_string(SolutionKind kind) {
  return kind == SolutionKind::translation_invariant ? "TI" : "TWO_PERIODIC";
}

const char* to_string(SolveMethod method) {
  switch (method) {
    case SolveMethod::closed_form_k2: return "CLOSED_FORM_K2";
    case SolveMethod::param_k3: return "PARAM_K3";
    case SolveMethod::bisection_2cycle: return "BISECTION_2CYCLE";
    case SolveMethod::ti_bisection: return "TI_BISECTION";
    default: return "NEWTON_4D";
  }
}

std::vector<PeriodicState> default_seed_grid(std::uint64_t seed) {
  const std::array<double, 5> g{1e-2, 1e-1, 1.0, 1e1, 1e2};
  std::vector<PeriodicState> seeds;
  for (const double a : g) seeds.push_back({a, a, a, a});  // I1
  for (const double a : g)
    for (const double b : g) {
      seeds.push_back({a, a, b, b});  // I2
      seeds.push_back({a, b, a, b});  // I3
      seeds.push_back({a, b, b, a});  // I4
    }
  SplitMix64 rng(seed);
  for (int i = 0; i < 16; ++i) {
    const auto draw = [&rng] { return std::exp(rng.uniform(std::log(1e-2), std::log(1e2))); };
    seeds.push_back({draw(), draw(), draw(), draw()});
  }
  return seeds;
}

namespace {

using Vec4 = std::array<double, 4>;

// Residual of the fixed-point equation in log coordinates,
// r(u) = u - ln(W(exp(u))), with u = (ln t1, ln t2, ln z1, ln z2).
Vec4 log_residual(const Vec4& u, int k, double loglam) {
  const auto fz = f_map({u[2], u[3]});
  const auto ft = f_map({u[0], u[1]});
  return {u[0] - (loglam + k * fz[0]), u[1] - (loglam + k * fz[1]),
          u[2] - (loglam + k * ft[0]), u[3] - (loglam + k * ft[1])};
}

double inf_norm(const Vec4& v) {
  return std::max({std::abs(v[0]), std::abs(v[1]), std::abs(v[2]),
                   std::abs(v[3])});
}

// dF at h: with s_i = sigmoid(h_i) and p = softmax(h),
//   dF = [[s1-p1, -p2], [-p1, s2-p2]].
void df_block(double h1, double h2, double out[2][2]) {
  const double s1 = 1.0 / (1.0 + std::exp(-h1));
  const double s2 = 1.0 / (1.0 + std::exp(-h2));
  const double p1 = 1.0 / (1.0 + std::exp(h2 - h1));
  const double p2 = 1.0 - p1;
  out[0][0] = s1 - p1;
  out[0][1] = -p2;
  out[1][0] = -p1;
  out[1][1] = s2 - p2;
}

// Jacobian of r: identity minus the k-scaled cross blocks.
void jacobian(const Vec4& u, int k, double J[4][4]) {
  double dz[2][2], dt[2][2];
  df_block(u[2], u[3], dz);
  df_block(u[0], u[1], dt);
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) J[i][j] = (i == j) ? 1.0 : 0.0;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) {
      J[i][2 + j] = -k * dz[i][j];
      J[2 + i][j] = -k * dt[i][j];
    }
}

// Gaussian elimination with partial pivoting; returns false when singular.
bool solve4(double A[4][4], Vec4& b) {
  for (int c = 0; c < 4; ++c) {
    int piv = c;
    for (int r = c + 1; r < 4; ++r)
      if (std::abs(A[r][c]) > std::abs(A[piv][c])) piv = r;
    if (std::abs(A[piv][c]) < 1e-300) return false;
    if (piv != c) {
      for (int j = 0; j < 4; ++j) std::swap(A[c][j], A[piv][j]);
      std::swap(b[c], b[piv]);
    }
    for (int r = c + 1; r < 4; ++r) {
      const double f = A[r][c] / A[c][c];
      for (int j = c; j < 4; ++j) A[r][j] -= f * A[c][j];
      b[r] -= f * b[c];
    }
  }
  for (int c = 3; c >= 0; --c) {
    for (int j = c + 1; j < 4; ++j) b[c] -= A[c][j] * b[j];
    b[c] /= A[c][c];
  }
  return true;
}

std::optional<Vec4> newton_from(Vec4 u, int k, double loglam) {
  Vec4 r = log_residual(u, k, loglam);
  double rn = inf_norm(r);
  for (int it = 0; it < 100; ++it) {
    if (rn <= 1e-13) return u;
    double J[4][4];
    jacobian(u, k, J);
    Vec4 step = {-r[0], -r[1], -r[2], -r[3]};
    if (!solve4(J, step)) return std::nullopt;
    double scale = 1.0;
    bool accepted = false;
    for (int damp = 0; damp < 30; ++damp) {
      Vec4 trial;
      bool in_range = true;
      for (int i = 0; i < 4; ++i) {
        trial[i] = u[i] + scale * step[i];
        in_range = in_range && std::abs(trial[i]) < 700.0;
      }
      if (in_range) {
        const Vec4 tr = log_residual(trial, k, loglam);
        const double tn = inf_norm(tr);
        if (tn < rn) {
          u = trial;
          r = tr;
          rn = tn;
          accepted = true;
          break;
        }
      }
      scale *= 0.5;
    }
    if (!accepted) return std::nullopt;
  }
  return rn <= 1e-13 ? std::optional<Vec4>(u) : std::nullopt;
}

}  // namespace

std::vector<SolutionRecord> solve_full_4d(
    int k, double lambda, const std::vector<PeriodicState>& seeds) {
  if (k < 2) throw std::domain_error("solve_full_4d requires k >= 2");
  if (!(lambda > 0)) throw std::domain_error("activity must be positive");
  if (seeds.empty()) throw std::invalid_argument("seed grid is empty");

  const double loglam = std::log(lambda);
  std::vector<PeriodicState> roots;
  for (const PeriodicState& s : seeds) {
    if (!(s.t1 > 0 && s.t2 > 0 && s.z1 > 0 && s.z2 > 0)) continue;
    const Vec4 u0{std::log(s.t1), std::log(s.t2), std::log(s.z1),
                  std::log(s.z2)};
    const auto u = newton_from(u0, k, loglam);
    if (!u) continue;
    const PeriodicState root{std::exp((*u)[0]), std::exp((*u)[1]),
                             std::exp((*u)[2]), std::exp((*u)[3])};
    if (residual(root, k, lambda) <= 1e-10) roots.push_back(root);
  }

  std::sort(roots.begin(), roots.end(),
            [](const PeriodicState& a, const PeriodicState& b) {
              const InvariantSetTag ta = classify_state(a);
              const InvariantSetTag tb = classify_state(b);
              if (ta != tb) return ta < tb;
              if (a.t1 != b.t1) return a.t1 < b.t1;
              if (a.t2 != b.t2) return a.t2 < b.t2;
              if (a.z1 != b.z1) return a.z1 < b.z1;
              return a.z2 < b.z2;
            });

  std::vector<SolutionRecord> records;
  for (const PeriodicState& s : roots) {
    const auto dup = [&s](const SolutionRecord& rec) {
      return std::max({std::abs(rec.state.t1 - s.t1),
                       std::abs(rec.state.t2 - s.t2),
                       std::abs(rec.state.z1 - s.z1),
                       std::abs(rec.state.z2 - s.z2)}) <= 1e-6;
    };
    if (std::any_of(records.begin(), records.end(), dup)) continue;
    const InvariantSetTag tag = classify_state(s);
    const bool ti = std::abs(s.t1 - s.z1) <=
                        1e-9 * std::max(std::abs(s.t1), std::abs(s.z1)) &&
                    std::abs(s.t2 - s.z2) <=
                        1e-9 * std::max(std::abs(s.t2), std::abs(s.z2));
    records.push_back({s, tag,
                       ti ? SolutionKind::translation_invariant
                          : SolutionKind::two_periodic,
                       k, lambda, residual(s, k, lambda),
                       SolveMethod::newton_4d});
  }

  if (records.empty())
    throw std::runtime_error("solver failure: no root converged");
  if (k == 2 && lambda < 1.0) {
    const bool has_cycle =
        std::any_of(records.begin(), records.end(), [](const SolutionRecord& r) {
          return r.kind == SolutionKind::two_periodic;
        });
    if (!has_cycle)
      throw std::runtime_error(
          "solver failure: closed form predicts a two-cycle that the seed "
          "grid missed");
  }
  return records;
}

}  // namespace wandhc
