#pragma once

#include <array>
#include <cstdint>
#include <vector>

namespace wandhc {

// Spin alphabet: 0 = vacant, 1 and 2 = the two occupied species.
using Spin = std::uint8_t;
inline constexpr int spin_count = 3;

/// Symmetric 0/1 adjacency on the spin alphabet. A configuration on a tree
/// is admissible when every nearest-neighbor spin pair is an edge of the
/// graph.
struct ConstraintGraph {
  std::array<std::array<std::uint8_t, 3>, 3> adjacency{};

  bool allows(Spin a, Spin b) const { return adjacency[a][b] != 0; }
  bool is_symmetric() const;

  /// The wand graph: edges {0,1}, {0,2}, {1,1}, {2,2}. The two occupied
  /// species never touch each other, and vacancies never touch vacancies.
  static ConstraintGraph wand();
};

/// Finite truncation of the Cayley tree of order k down to a given depth.
/// The root has k+1 direct successors, every other internal vertex has k.
/// Vertices are indexed breadth-first with the root at index 0, so the
/// vertex list at depth n-1 is a prefix of the list at depth n.
class FiniteTree {
 public:
  FiniteTree(int order, int depth);

  int order() const { return order_; }
  int depth() const { return depth_; }
  int vertex_count() const { return static_cast<int>(parent_.size()); }
  int parent(int v) const { return parent_[v]; }
  int level(int v) const { return level_[v]; }
  bool is_leaf(int v) const { return level_[v] == depth_; }

  int level_begin(int lev) const { return level_begin_[lev]; }
  int level_size(int lev) const {
    return level_begin_[lev + 1] - level_begin_[lev];
  }

 private:
  int order_;
  int depth_;
  std::vector<int> parent_;
  std::vector<int> level_;
  std::vector<int> level_begin_;
};

using Config = std::vector<Spin>;

/// True iff every nearest-neighbor spin pair is an edge of the graph.
/// Throws std::invalid_argument when the config does not cover the tree.
bool is_admissible(const Config& config, const FiniteTree& tree,
                   const ConstraintGraph& graph);

/// |Omega^G_{V_n}| by blind enumeration over all 3^{|V_n|} assignments.
/// Guarded at 16 vertices.
long long count_admissible(const FiniteTree& tree, const ConstraintGraph& graph);

/// Number of vertices carrying spin 1 or 2.
int occupied_count(const Config& config);

/// All admissible configurations in lexicographic order of the breadth-first
/// spin vector. Prunes on the parent edge, so the cost is proportional to the
/// output size. Guarded at 20 vertices.
std::vector<Config> enumerate_admissible(const FiniteTree& tree,
                                         const ConstraintGraph& graph);

}  // namespace wandhc
