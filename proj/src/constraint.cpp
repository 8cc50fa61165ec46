#include "wandhc/constraint.hpp"

#include <stdexcept>

namespace wandhc {

bool ConstraintGraph::is_symmetric() const {
  for (int i = 0; i < spin_count; ++i)
    for (int j = 0; j < i; ++j)
      if (adjacency[i][j] != adjacency[j][i]) return false;
  return true;
}

ConstraintGraph ConstraintGraph::wand() {
  ConstraintGraph g;
  g.adjacency = {{{0, 1, 1}, {1, 1, 0}, {1, 0, 1}}};
  return g;
}

FiniteTree::FiniteTree(int order, int depth) : order_(order), depth_(depth) {
  if (order < 1) throw std::invalid_argument("tree order must be >= 1");
  if (depth < 0) throw std::invalid_argument("tree depth must be >= 0");
  parent_.push_back(-1);
  level_.push_back(0);
  level_begin_ = {0, 1};
  int begin = 0;
  int end = 1;
  for (int lev = 1; lev <= depth; ++lev) {
    for (int v = begin; v < end; ++v) {
      const int fanout = (v == 0) ? order + 1 : order;
      for (int c = 0; c < fanout; ++c) {
        parent_.push_back(v);
        level_.push_back(lev);
      }
    }
    begin = end;
    end = static_cast<int>(parent_.size());
    level_begin_.push_back(end);
  }
}

bool is_admissible(const Config& config, const FiniteTree& tree,
                   const ConstraintGraph& graph) {
  if (static_cast<int>(config.size()) != tree.vertex_count())
    throw std::invalid_argument("config does not cover every tree vertex");
  for (const Spin s : config)
    if (s >= spin_count) throw std::invalid_argument("spin out of range");
  for (int v = 1; v < tree.vertex_count(); ++v)
    if (!graph.allows(config[tree.parent(v)], config[v])) return false;
  return true;
}

long long count_admissible(const FiniteTree& tree,
                           const ConstraintGraph& graph) {
  const int n = tree.vertex_count();
  if (n > 16)
    throw std::length_error("enumeration guard: tree exceeds 16 vertices");
  Config cfg(n, 0);
  long long count = 0;
  while (true) {
    bool ok = true;
    for (int v = 1; v < n && ok; ++v)
      ok = graph.allows(cfg[tree.parent(v)], cfg[v]);
    count += ok;
    int i = n - 1;
    while (i >= 0 && cfg[i] == spin_count - 1) cfg[i--] = 0;
    if (i < 0) break;
    ++cfg[i];
  }
  return count;
}

int occupied_count(const Config& config) {
  int n = 0;
  for (const Spin s : config) n += (s >= 1);
  return n;
}

std::vector<Config> enumerate_admissible(const FiniteTree& tree,
                                         const ConstraintGraph& graph) {
  const int n = tree.vertex_count();
  if (n > 20)
    throw std::length_error("enumeration guard: tree exceeds 20 vertices");
  std::vector<Config> out;
  Config cfg(n, 0);
  // Depth-first over the breadth-first vertex order; each vertex only has
  // to respect the edge to its parent.
  auto rec = [&](auto&& self, int v) -> void {
    if (v == n) {
      out.push_back(cfg);
      return;
    }
    for (Spin s = 0; s < spin_count; ++s) {
      if (v > 0 && !graph.allows(cfg[tree.parent(v)], s)) continue;
      cfg[v] = s;
      self(self, v + 1);
    }
  };
  rec(rec, 0);
  return out;
}

}  // namespace wandhc
