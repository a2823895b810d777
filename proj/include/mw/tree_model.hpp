#pragma once

#include <cstdint>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace mw {

using EdgeList = std::vector<std::pair<int, int>>;

struct Tree {
  int n = 0;
  std::vector<std::vector<int>> adj;

  EdgeList edges() const;  // (u,v) with u < v, sorted
  int degree(int v) const { return static_cast<int>(adj[v].size()); }
  bool is_leaf(int v) const { return n > 1 && adj[v].size() == 1; }
};

// Validates connectivity, acyclicity and index ranges.
Tree make_tree(int n, const EdgeList& edges);

struct RootedTree {
  Tree tree;
  int root = 0;
  std::vector<int> parent;                 // -1 at the root
  std::vector<std::vector<int>> children;  // order is significant

  int n() const { return tree.n; }
  int height(int v) const;
  int height() const { return height(root); }
  int depth() const { return height(); }
  bool is_leaf(int v) const { return children[v].empty(); }
};

// Children are listed in adjacency order.
RootedTree root_tree(const Tree& t, int r);
// Explicit child order; must match the tree's edges.
RootedTree make_rooted(const Tree& t, int r,
                       const std::vector<std::vector<int>>& children);

// Vertices of minimum eccentricity (one or two).
std::vector<int> tree_centers(const Tree& t);

struct IsoMap {
  int r1 = 0;
  std::vector<int> map;  // vertex of t0 -> vertex of t1
};

// Canonical code of the subtree at v (AHU, parenthesised form).
std::string canonical_code(const RootedTree& rt, int v);
std::string canonical_code(const RootedTree& rt);

IsoMap isomorphism_map(const Tree& t0, const Tree& t1, int r0);
// Rooted version: r1 is fixed to rt1.root; children order of rt0 is kept.
IsoMap rooted_isomorphism_map(const RootedTree& rt0, const RootedTree& rt1);

struct CaterpillarDecomposition {
  std::vector<int> spine;
  std::vector<std::vector<int>> leaves;  // per spine vertex
  bool is_path = false;
  int n = 0;
};

CaterpillarDecomposition caterpillar_decompose(const Tree& t);

struct SparseIssue {
  int vertex;
  int clause;  // 0 for "empty set", 1..3 otherwise
  std::string what;
};

struct SparseCheck {
  bool ok = false;
  std::vector<SparseIssue> violations;
};

SparseCheck is_sparse(const RootedTree& rt, const std::set<int>& L);

// Subtree type relative to its parent, used by the pruning construction.
enum class SubtreeType { A = 0, B = 1, C = 2, D = 3 };
SubtreeType subtree_type(const RootedTree& rt, int v, const std::set<int>& L);

RootedTree reorder_children_for_pruning(const RootedTree& rt,
                                        const std::set<int>& L);

struct CorollaryInstance {
  RootedTree tree;
  std::set<int> leaves;
};

CorollaryInstance gen_corollary_family(int m);

Tree gen_random_tree(int n, std::uint64_t seed);
Tree gen_random_caterpillar(int spine_len, const std::vector<int>& leaf_counts,
                            std::uint64_t seed);

// Relabel vertices: vertex v becomes perm[v].
Tree relabel(const Tree& t, const std::vector<int>& perm);

}  // namespace mw
