#include "mw/tree_model.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <random>

#include "mw/geometry.hpp"

namespace mw {

EdgeList Tree::edges() const {
  EdgeList out;
  for (int u = 0; u < n; ++u)
    for (int v : adj[u])
      if (u < v) out.emplace_back(u, v);
  std::sort(out.begin(), out.end());
  return out;
}

Tree make_tree(int n, const EdgeList& edges) {
  if (n < 1) throw Error(ErrorKind::InvalidSpec, "tree needs n >= 1");
  if (static_cast<int>(edges.size()) != n - 1)
    throw Error(ErrorKind::InvalidSpec, "tree on " + std::to_string(n) +
                                            " vertices needs n-1 edges");
  Tree t;
  t.n = n;
  t.adj.assign(n, {});
  for (auto [u, v] : edges) {
    if (u < 0 || v < 0 || u >= n || v >= n)
      throw Error(ErrorKind::InvalidSpec, "edge index out of range: (" +
                                              std::to_string(u) + "," +
                                              std::to_string(v) + ")");
    if (u == v) throw Error(ErrorKind::InvalidSpec, "self loop at " + std::to_string(u));
    t.adj[u].push_back(v);
    t.adj[v].push_back(u);
  }
  std::vector<char> seen(n, 0);
  std::vector<int> st{0};
  seen[0] = 1;
  int cnt = 1;
  while (!st.empty()) {
    int u = st.back();
    st.pop_back();
    for (int w : t.adj[u])
      if (!seen[w]) seen[w] = 1, ++cnt, st.push_back(w);
  }
  if (cnt != n) throw Error(ErrorKind::InvalidSpec, "graph is not connected");
  return t;
}

int RootedTree::height(int v) const {
  // iterative post-order
  std::vector<std::pair<int, int>> st{{v, 0}};
  std::vector<int> h(tree.n, 0);
  while (!st.empty()) {
    auto& [u, i] = st.back();
    if (i < static_cast<int>(children[u].size())) {
      int c = children[u][i++];
      st.push_back({c, 0});
    } else {
      int hu = 0;
      for (int c : children[u]) hu = std::max(hu, h[c] + 1);
      h[u] = hu;
      st.pop_back();
    }
  }
  return h[v];
}

RootedTree root_tree(const Tree& t, int r) {
  if (r < 0 || r >= t.n) throw Error(ErrorKind::InvalidSpec, "root out of range");
  RootedTree rt;
  rt.tree = t;
  rt.root = r;
  rt.parent.assign(t.n, -1);
  rt.children.assign(t.n, {});
  std::vector<int> order{r};
  std::vector<char> seen(t.n, 0);
  seen[r] = 1;
  for (size_t i = 0; i < order.size(); ++i) {
    int u = order[i];
    for (int w : t.adj[u])
      if (!seen[w]) {
        seen[w] = 1;
        rt.parent[w] = u;
        rt.children[u].push_back(w);
        order.push_back(w);
      }
  }
  return rt;
}

RootedTree make_rooted(const Tree& t, int r,
                       const std::vector<std::vector<int>>& children) {
  RootedTree rt = root_tree(t, r);
  if (static_cast<int>(children.size()) != t.n)
    throw Error(ErrorKind::InvalidSpec, "children lists do not match n");
  for (int v = 0; v < t.n; ++v) {
    auto a = children[v], b = rt.children[v];
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    if (a != b)
      throw Error(ErrorKind::InvalidSpec,
                  "children of " + std::to_string(v) + " do not match the tree");
  }
  rt.children = children;
  return rt;
}

std::vector<int> tree_centers(const Tree& t) {
  if (t.n <= 2) {
    std::vector<int> all(t.n);
    std::iota(all.begin(), all.end(), 0);
    return all;
  }
  std::vector<int> deg(t.n);
  std::vector<int> layer;
  for (int v = 0; v < t.n; ++v) {
    deg[v] = t.degree(v);
    if (deg[v] == 1) layer.push_back(v);
  }
  int left = t.n;
  while (left > 2) {
    left -= static_cast<int>(layer.size());
    std::vector<int> next;
    for (int v : layer)
      for (int w : t.adj[v])
        if (--deg[w] == 1) next.push_back(w);
    layer = next;
  }
  std::sort(layer.begin(), layer.end());
  return layer;
}

static void codes_all(const RootedTree& rt, std::vector<std::string>& code) {
  code.assign(rt.n(), "");
  std::vector<int> order{rt.root};
  for (size_t i = 0; i < order.size(); ++i)
    for (int c : rt.children[order[i]]) order.push_back(c);
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    std::vector<std::string> cs;
    for (int c : rt.children[*it]) cs.push_back(code[c]);
    std::sort(cs.begin(), cs.end());
    std::string s = "(";
    for (auto& x : cs) s += x;
    s += ")";
    code[*it] = std::move(s);
  }
}

std::string canonical_code(const RootedTree& rt, int v) {
  std::vector<std::string> code;
  codes_all(rt, code);
  return code[v];
}

std::string canonical_code(const RootedTree& rt) { return canonical_code(rt, rt.root); }

static IsoMap match_rooted(const RootedTree& rt0, const std::vector<std::string>& c0,
                           const RootedTree& rt1, const std::vector<std::string>& c1) {
  IsoMap res;
  res.r1 = rt1.root;
  res.map.assign(rt0.n(), -1);
  std::vector<std::pair<int, int>> st{{rt0.root, rt1.root}};
  while (!st.empty()) {
    auto [u, w] = st.back();
    st.pop_back();
    res.map[u] = w;
    std::vector<char> used(rt1.children[w].size(), 0);
    for (int cu : rt0.children[u]) {
      bool ok = false;
      for (size_t k = 0; k < rt1.children[w].size(); ++k) {
        int cw = rt1.children[w][k];
        if (!used[k] && c1[cw] == c0[cu]) {
          used[k] = 1;
          st.push_back({cu, cw});
          ok = true;
          break;
        }
      }
      if (!ok) throw Error(ErrorKind::NotIsomorphic, "rooted structures differ");
    }
  }
  return res;
}

IsoMap rooted_isomorphism_map(const RootedTree& rt0, const RootedTree& rt1) {
  if (rt0.n() != rt1.n()) throw Error(ErrorKind::NotIsomorphic, "sizes differ");
  std::vector<std::string> c0, c1;
  codes_all(rt0, c0);
  codes_all(rt1, c1);
  if (c0[rt0.root] != c1[rt1.root])
    throw Error(ErrorKind::NotIsomorphic, "rooted canonical codes differ");
  return match_rooted(rt0, c0, rt1, c1);
}

IsoMap isomorphism_map(const Tree& t0, const Tree& t1, int r0) {
  if (t0.n != t1.n) throw Error(ErrorKind::NotIsomorphic, "sizes differ");
  RootedTree rt0 = root_tree(t0, r0);
  std::vector<std::string> c0;
  codes_all(rt0, c0);
  for (int r1 = 0; r1 < t1.n; ++r1) {
    if (t1.degree(r1) != t0.degree(r0)) continue;
    RootedTree rt1 = root_tree(t1, r1);
    std::vector<std::string> c1;
    codes_all(rt1, c1);
    if (c1[r1] == c0[r0]) return match_rooted(rt0, c0, rt1, c1);
  }
  throw Error(ErrorKind::NotIsomorphic, "no vertex of t1 matches the root");
}

CaterpillarDecomposition caterpillar_decompose(const Tree& t) {
  CaterpillarDecomposition cd;
  cd.n = t.n;
  if (t.n <= 2) {
    for (int v = 0; v < t.n; ++v) cd.spine.push_back(v);
    cd.leaves.assign(t.n, {});
    cd.is_path = true;
    return cd;
  }
  std::vector<char> inner(t.n, 0);
  for (int v = 0; v < t.n; ++v) inner[v] = t.degree(v) >= 2;
  int start = -1;
  for (int v = 0; v < t.n; ++v) {
    if (!inner[v]) continue;
    int k = 0;
    for (int w : t.adj[v]) k += inner[w];
    if (k > 2)
      throw Error(ErrorKind::NotACaterpillar,
                  "vertex " + std::to_string(v) + " has three non-leaf neighbours");
    if (k <= 1 && start < 0) start = v;
  }
  // start exists: the inner vertices induce a tree with max degree 2
  int prev = -1, cur = start;
  while (cur >= 0) {
    cd.spine.push_back(cur);
    std::vector<int> lv;
    int nxt = -1;
    for (int w : t.adj[cur]) {
      if (!inner[w]) lv.push_back(w);
      else if (w != prev) nxt = w;
    }
    cd.leaves.push_back(lv);
    prev = cur;
    cur = nxt;
  }
  cd.is_path = true;
  for (int v = 0; v < t.n; ++v)
    if (t.degree(v) > 2) cd.is_path = false;
  return cd;
}

SparseCheck is_sparse(const RootedTree& rt, const std::set<int>& L) {
  SparseCheck res;
  if (L.empty()) {
    res.violations.push_back({-1, 0, "leaf set is empty"});
    return res;
  }
  for (int v : L) {
    if (v < 0 || v >= rt.n() || !rt.children[v].empty() || v == rt.root)
      throw Error(ErrorKind::InvalidLeafSet, "vertex " + std::to_string(v) + " is not a leaf");
  }
  for (int v : L) {
    int p = rt.parent[v];
    std::vector<int> sib;
    for (int s : rt.children[p])
      if (s != v) sib.push_back(s);
    if (sib.empty()) res.violations.push_back({v, 1, "no sibling"});
    for (int s : sib)
      if (!rt.children[s].empty() || L.count(s))
        res.violations.push_back({v, 2, "sibling " + std::to_string(s) + " is not a leaf outside L"});
    int g = rt.parent[p];
    bool cousin = false;
    if (g >= 0) {
      for (int p2 : rt.children[g]) {
        if (p2 == p) continue;
        bool clean = true;
        for (int w : rt.children[p2])
          if (L.count(w)) clean = false;
        if (clean && !rt.children[p2].empty()) cousin = true;
      }
    }
    if (!cousin) res.violations.push_back({v, 3, "no cousin family free of L"});
  }
  res.ok = res.violations.empty();
  return res;
}

SubtreeType subtree_type(const RootedTree& rt, int v, const std::set<int>& L) {
  if (rt.children[v].empty()) return SubtreeType::A;
  int h = rt.height(v);
  if (h >= 2) return SubtreeType::D;
  int k = 0;
  for (int c : rt.children[v]) k += L.count(c) ? 1 : 0;
  if (k == 0) return SubtreeType::C;
  if (k == 1) return SubtreeType::B;
  throw Error(ErrorKind::SparseViolation,
              "height-1 subtree at " + std::to_string(v) + " has several leaves in L");
}

RootedTree reorder_children_for_pruning(const RootedTree& rt, const std::set<int>& L) {
  for (int v = 0; v < rt.n(); ++v)
    if (rt.height(v) == 1) (void)subtree_type(rt, v, L);
  SparseCheck sc = is_sparse(rt, L);
  if (!sc.ok) {
    const auto& f = sc.violations.front();
    throw Error(ErrorKind::SparseViolation,
                "vertex " + std::to_string(f.vertex) + ": " + f.what);
  }
  RootedTree out = rt;
  for (int v = 0; v < rt.n(); ++v) {
    if (rt.height(v) < 2) continue;
    auto& ch = out.children[v];
    std::stable_sort(ch.begin(), ch.end(), [&](int a, int b) {
      return subtree_type(rt, a, L) < subtree_type(rt, b, L);
    });
    for (int c : ch) {
      if (subtree_type(rt, c, L) != SubtreeType::B) continue;
      auto& cc = out.children[c];
      std::stable_partition(cc.begin(), cc.end(), [&](int x) { return !L.count(x); });
    }
  }
  return out;
}

CorollaryInstance gen_corollary_family(int m) {
  if (m < 1) throw Error(ErrorKind::InvalidSpec, "m must be >= 1");
  int n = 6 * m + 1;
  EdgeList e;
  std::vector<std::vector<int>> ch(n);
  std::set<int> L;
  for (int j = 0; j < m; ++j) {
    int r = 1 + 6 * j, u = r + 1, up = r + 2, v = r + 3, w = r + 4, wp = r + 5;
    e.insert(e.end(), {{0, r}, {r, u}, {r, up}, {u, v}, {up, w}, {up, wp}});
    ch[0].push_back(r);
    ch[r] = {u, up};
    ch[u] = {v};
    ch[up] = {w, wp};
    L.insert(wp);
  }
  Tree t = make_tree(n, e);
  return {make_rooted(t, 0, ch), L};
}

Tree gen_random_tree(int n, std::uint64_t seed) {
  if (n < 1) throw Error(ErrorKind::InvalidSpec, "n must be >= 1");
  std::mt19937_64 rng(seed);
  EdgeList e;
  for (int i = 1; i < n; ++i) {
    std::uniform_int_distribution<int> pick(0, i - 1);
    e.emplace_back(pick(rng), i);
  }
  return make_tree(n, e);
}

Tree gen_random_caterpillar(int spine_len, const std::vector<int>& leaf_counts,
                            std::uint64_t seed) {
  if (spine_len < 1 || static_cast<int>(leaf_counts.size()) != spine_len)
    throw Error(ErrorKind::InvalidSpec, "spine length must be positive and match leaf counts");
  int n = spine_len;
  for (int c : leaf_counts) {
    if (c < 0) throw Error(ErrorKind::InvalidSpec, "negative leaf count");
    n += c;
  }
  EdgeList e;
  for (int i = 0; i + 1 < spine_len; ++i) e.emplace_back(i, i + 1);
  int next = spine_len;
  for (int i = 0; i < spine_len; ++i)
    for (int k = 0; k < leaf_counts[i]; ++k) e.emplace_back(i, next++);
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::mt19937_64 rng(seed);
  std::shuffle(perm.begin(), perm.end(), rng);
  return relabel(make_tree(n, e), perm);
}

Tree relabel(const Tree& t, const std::vector<int>& perm) {
  EdgeList e;
  for (auto [u, v] : t.edges()) e.emplace_back(perm[u], perm[v]);
  return make_tree(t.n, e);
}

}  // namespace mw
