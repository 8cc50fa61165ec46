#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "wandhc/constraint.hpp"
#include "wandhc/recursion.hpp"

namespace wandhc {

/// Finite-volume measure for the wand model: admissible configurations on
/// V_n weighted by activity lambda per occupied interior vertex and the
/// boundary-law value per leaf spin. The level-parity convention attaches
/// (z1,z2) to even levels and (t1,t2) to odd ones, the root being level 0.
///
/// The boundary-law value of an occupied leaf already carries that leaf's
/// activity (the combination the tree recursion propagates), so lambda is
/// counted on interior vertices only; splitting the leaf factor as
/// lambda * (law/lambda) gives back the textbook form.
struct FiniteVolumeMeasure {
  FiniteTree tree;
  double lambda;
  PeriodicState law;
  std::vector<Config> configs;       // admissible configurations on V_n
  std::vector<double> probability;   // aligned with configs, sums to 1
  double log_normalizer;             // ln Z_n in the interior-activity form
};

FiniteVolumeMeasure build_measure(const FiniteTree& tree, double lambda,
                                  const PeriodicState& law);

struct ConsistencyResidual {
  double max_abs;
  long long config_count;  // admissible configurations at depth n-1
};

/// Compatibility defect between depths n and n-1: the depth-n measure is
/// marginalized over its leaf level and compared with the depth-(n-1)
/// measure, configuration by configuration. Exactly zero iff the law
/// solves the period-2 system. Requires n >= 2: at n = 1 the comparison
/// would involve a boundary value at the root, which has k+1 successors
/// and is not covered by the period-2 law.
ConsistencyResidual consistency_residual(int k, int depth, double lambda,
                                         const PeriodicState& law);

/// Single-site spin distribution (P(0), P(1), P(2)) under the measure.
std::array<double, 3> exact_marginal(const FiniteVolumeMeasure& measure,
                                     int vertex);

/// Root spin distribution of the infinite-volume measure,
/// p_i proportional to lambda_i * (A l)_i^{k+1} with l = (1, t1, t2), the
/// law at the root's children. Matches the enumerated root marginal.
std::array<double, 3> root_law(int k, double lambda, const PeriodicState& law);

struct MarginalCell {
  int level;
  int spin;
  double probability;
  double stderr_;
};

/// Tree-indexed Markov chain sampler: the root is drawn from root_dist and
/// every child from the single-step kernel of the law at the child's level
/// (t on odd levels, z on even). Returns per-level spin frequencies with
/// standard errors over the independent replicates. Deterministic in seed.
std::vector<MarginalCell> sample_chain(int k, int depth, double z, double t,
                                       const std::array<double, 3>& root_dist,
                                       long long reps, std::uint64_t seed);

}  // namespace wandhc
