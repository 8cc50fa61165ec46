#include "wandhc/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <stdexcept>

#include "wandhc/extremality.hpp"
#include "wandhc/rng.hpp"

namespace wandhc {

namespace {

void require_positive_law(const PeriodicState& law) {
  if (!(law.t1 > 0 && law.t2 > 0 && law.z1 > 0 && law.z2 > 0))
    throw std::invalid_argument("boundary law must be componentwise positive");
}

// Leaf weight triple for occupied spins at the given level parity; the
// vacant weight is 1.
std::array<double, 3> leaf_weights(const PeriodicState& law, int level) {
  return level % 2 == 0 ? std::array<double, 3>{1.0, law.z1, law.z2}
                        : std::array<double, 3>{1.0, law.t1, law.t2};
}

}  // namespace

FiniteVolumeMeasure build_measure(const FiniteTree& tree, double lambda,
                                  const PeriodicState& law) {
  if (!(lambda > 0)) throw std::invalid_argument("activity must be positive");
  require_positive_law(law);
  const ConstraintGraph wand = ConstraintGraph::wand();
  FiniteVolumeMeasure m{tree, lambda, law, enumerate_admissible(tree, wand),
                        {}, 0.0};

  const double loglam = std::log(lambda);
  const std::array<double, 3> lw = leaf_weights(law, tree.depth());
  const std::array<double, 3> log_lw{0.0, std::log(lw[1]), std::log(lw[2])};

  std::vector<double> logw;
  logw.reserve(m.configs.size());
  double top = -1e300;
  for (const Config& c : m.configs) {
    double w = 0.0;
    for (int v = 0; v < tree.vertex_count(); ++v) {
      if (tree.is_leaf(v))
        w += log_lw[c[v]];
      else if (c[v] >= 1)
        w += loglam;
    }
    logw.push_back(w);
    top = std::max(top, w);
  }
  double total = 0.0;
  for (const double w : logw) total += std::exp(w - top);
  m.log_normalizer = top + std::log(total);
  m.probability.reserve(logw.size());
  for (const double w : logw)
    m.probability.push_back(std::exp(w - top) / total);
  return m;
}

ConsistencyResidual consistency_residual(int k, int depth, double lambda,
                                         const PeriodicState& law) {
  if (depth < 2)
    throw std::domain_error(
        "consistency check requires depth >= 2; at depth 1 the root (k+1 "
        "successors) would need its own boundary value");
  const FiniteVolumeMeasure fine = build_measure(FiniteTree(k, depth), lambda, law);
  const FiniteVolumeMeasure coarse =
      build_measure(FiniteTree(k, depth - 1), lambda, law);

  const std::size_t prefix = coarse.configs.front().size();
  std::map<Config, double> marginal;
  for (std::size_t i = 0; i < fine.configs.size(); ++i) {
    Config key(fine.configs[i].begin(), fine.configs[i].begin() + prefix);
    marginal[key] += fine.probability[i];
  }

  double max_abs = 0.0;
  for (std::size_t i = 0; i < coarse.configs.size(); ++i) {
    const auto it = marginal.find(coarse.configs[i]);
    const double summed = it == marginal.end() ? 0.0 : it->second;
    max_abs = std::max(max_abs, std::abs(summed - coarse.probability[i]));
  }
  return {max_abs, static_cast<long long>(coarse.configs.size())};
}

std::array<double, 3> exact_marginal(const FiniteVolumeMeasure& measure,
                                     int vertex) {
  if (vertex < 0 || vertex >= measure.tree.vertex_count())
    throw std::invalid_argument("vertex outside the tree");
  std::array<double, 3> out{0.0, 0.0, 0.0};
  for (std::size_t i = 0; i < measure.configs.size(); ++i)
    out[measure.configs[i][vertex]] += measure.probability[i];
  return out;
}

std::array<double, 3> root_law(int k, double lambda, const PeriodicState& law) {
  if (!(lambda > 0)) throw std::invalid_argument("activity must be positive");
  require_positive_law(law);
  // The root's children sit at level 1 and carry (t1, t2).
  const std::array<double, 3> l{1.0, law.t1, law.t2};
  const ConstraintGraph wand = ConstraintGraph::wand();
  std::array<double, 3> logp{};
  for (int i = 0; i < spin_count; ++i) {
    double row = 0.0;
    for (int j = 0; j < spin_count; ++j)
      if (wand.adjacency[i][j]) row += l[j];
    logp[i] = (i >= 1 ? std::log(lambda) : 0.0) + (k + 1) * std::log(row);
  }
  const double top = std::max({logp[0], logp[1], logp[2]});
  std::array<double, 3> p{};
  double total = 0.0;
  for (int i = 0; i < spin_count; ++i) total += (p[i] = std::exp(logp[i] - top));
  for (double& v : p) v /= total;
  return p;
}

std::vector<MarginalCell> sample_chain(int k, int depth, double z, double t,
                                       const std::array<double, 3>& root_dist,
                                       long long reps, std::uint64_t seed) {
  if (!(z > 0) || !(t > 0)) throw std::invalid_argument("law must be positive");
  if (reps < 1) throw std::invalid_argument("need at least one replicate");
  if (std::abs(root_dist[0] + root_dist[1] + root_dist[2] - 1.0) > 1e-9)
    throw std::invalid_argument("root distribution must sum to 1");

  const FiniteTree tree(k, depth);
  const int n = tree.vertex_count();

  // Row-wise cumulative distributions: kernel_by_parity[p] generates the
  // spins of children at levels with parity p.
  std::array<std::array<std::array<double, 3>, 3>, 2> cum{};
  for (int parity = 0; parity < 2; ++parity) {
    const TransitionKernel kern = kernel_from_law(parity == 0 ? z : t);
    for (int i = 0; i < 3; ++i) {
      double acc = 0.0;
      for (int j = 0; j < 3; ++j) cum[parity][i][j] = (acc += kern.p[i][j]);
    }
  }
  std::array<double, 3> root_cum{};
  {
    double acc = 0.0;
    for (int j = 0; j < 3; ++j) root_cum[j] = (acc += root_dist[j]);
  }
  const auto pick = [](const std::array<double, 3>& c, double u) -> Spin {
    return u < c[0] ? 0 : (u < c[1] ? 1 : 2);
  };

  std::vector<double> sum_f((depth + 1) * 3, 0.0);
  std::vector<double> sum_f2((depth + 1) * 3, 0.0);
  std::vector<Spin> spin(n);
  std::vector<int> counts((depth + 1) * 3);

  for (long long rep = 0; rep < reps; ++rep) {
    SplitMix64 rng(seed + 0x9e3779b97f4a7c15ULL * static_cast<std::uint64_t>(rep + 1));
    std::fill(counts.begin(), counts.end(), 0);
    spin[0] = pick(root_cum, rng.uniform());
    ++counts[spin[0]];
    for (int v = 1; v < n; ++v) {
      const int parity = tree.level(v) % 2;
      spin[v] = pick(cum[parity][spin[tree.parent(v)]], rng.uniform());
      ++counts[tree.level(v) * 3 + spin[v]];
    }
    for (int lev = 0; lev <= depth; ++lev) {
      const double width = tree.level_size(lev);
      for (int s = 0; s < 3; ++s) {
        const double f = counts[lev * 3 + s] / width;
        sum_f[lev * 3 + s] += f;
        sum_f2[lev * 3 + s] += f * f;
      }
    }
  }

  std::vector<MarginalCell> out;
  out.reserve((depth + 1) * 3);
  for (int lev = 0; lev <= depth; ++lev)
    for (int s = 0; s < 3; ++s) {
      const double mean = sum_f[lev * 3 + s] / reps;
      double se = 0.0;
      if (reps > 1) {
        const double var =
            (sum_f2[lev * 3 + s] - reps * mean * mean) / (reps - 1);
        se = std::sqrt(std::max(0.0, var) / reps);
      }
      out.push_back({lev, s, mean, se});
    }
  return out;
}

}  // namespace wandhc
