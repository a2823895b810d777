#include <algorithm>
#include <cmath>
#include <limits>
#include <map>

#include "mw/construct.hpp"

namespace mw {

namespace {

constexpr double kSlack = 1.25;
constexpr double kGap = 0.1;
constexpr double kNearVertical = 0.1;
constexpr int kRotationTries = 60;

// Parallelogram drawing of one rooted subtree, keyed by side-0 vertex id on
// both sides.
struct Part {
  std::map<int, Point> s[2];
  EdgeList edges;
  int root = -1;
  int bv[2] = {-1, -1};
  Point c[4];  // a0, b0, a1, b1
};

Part base_part(int v) {
  Part p;
  p.s[0][v] = {0, 3};
  p.s[1][v] = {3, 0};
  p.root = v;
  p.c[0] = {0, 3};
  p.c[1] = {1, 1};
  p.c[2] = {3, 0};
  p.c[3] = {2, 2};
  return p;
}

Part transform(const Part& in, double s, Point t) {
  Part p = in;
  auto f = [&](Point q) { return s * q + t; };
  for (int k = 0; k < 2; ++k)
    for (auto& [id, q] : p.s[k]) q = f(q);
  for (Point& q : p.c) q = f(q);
  return p;
}

// x at height y of the line through a perpendicular to b - a
double ell_x(Point a, Point b, double y) {
  Point e = b - a;
  return a.x - (y - a.y) * e.y / e.x;
}

// x-range on the unit strip of the band perpendicular to edge uv
std::pair<double, double> band_x(Point u, Point v) {
  Point e = v - u;
  double lo = std::numeric_limits<double>::infinity(), hi = -lo;
  for (Point o : {u, v})
    for (double y : {0.0, 1.0}) {
      double x = o.x - (y - o.y) * e.y / e.x;
      lo = std::min(lo, x);
      hi = std::max(hi, x);
    }
  return {lo, hi};
}

double min_x(const std::map<int, Point>& m) {
  double r = std::numeric_limits<double>::infinity();
  for (auto& [id, p] : m) r = std::min(r, p.x);
  return r;
}

double max_x(const std::map<int, Point>& m) {
  double r = -std::numeric_limits<double>::infinity();
  for (auto& [id, p] : m) r = std::max(r, p.x);
  return r;
}

bool on_side(const Part& p, int k, std::pair<int, int> e) {
  return p.s[k].count(e.first) && p.s[k].count(e.second);
}

double dynamic_range_of(const Part& p) {
  std::vector<Point> all;
  for (int k = 0; k < 2; ++k)
    for (auto& [id, q] : p.s[k]) all.push_back(q);
  DrawingPair d;
  d.pts[0] = all;
  return dynamic_range(d);
}

Part assemble(int root, const std::vector<Part>& children, bool w1_bound, ConstructionTrace* trace) {
  LevelTrace lt;
  lt.root = root;
  lt.children = static_cast<int>(children.size());

  std::vector<Part> placed;
  for (const Part& ch : children) {
    double s = 1 / (ch.c[0].y - ch.c[2].y);
    Part l = transform(ch, s, {-ch.c[2].x * s, -ch.c[2].y * s});
    if (placed.empty()) {
      placed.push_back(transform(l, 1, {-l.c[0].x, 0}));
      continue;
    }
    double need = -std::numeric_limits<double>::infinity();
    double l_min0 = min_x(l.s[0]), l_min1 = min_x(l.s[1]);
    for (const Part& q : placed) {
      for (double y : {0.0, 1.0}) need = std::max(need, ell_x(q.c[2], q.c[3], y) - ell_x(l.c[0], l.c[1], y));
      need = std::max(need, q.c[2].x - l.c[0].x);
      for (auto e : q.edges) {
        if (on_side(q, 0, e)) need = std::max(need, band_x(q.s[0].at(e.first), q.s[0].at(e.second)).second - l_min1);
        if (on_side(q, 1, e)) need = std::max(need, band_x(q.s[1].at(e.first), q.s[1].at(e.second)).second - l_min0);
      }
      double q_max0 = max_x(q.s[0]), q_max1 = max_x(q.s[1]);
      for (auto e : l.edges) {
        if (on_side(l, 0, e)) need = std::max(need, q_max1 - band_x(l.s[0].at(e.first), l.s[0].at(e.second)).first);
        if (on_side(l, 1, e)) need = std::max(need, q_max0 - band_x(l.s[1].at(e.first), l.s[1].at(e.second)).first);
      }
    }
    double w = std::max(l.c[2].x - l.c[0].x, placed.back().c[2].x - placed.back().c[0].x);
    placed.push_back(transform(l, 1, {need + kGap * w, 0}));
  }

  const Part& first = placed.front();
  const Part& last = placed.back();
  double X0 = first.c[0].x, X1 = last.c[2].x;
  std::vector<Point> all0, all1;
  for (const Part& q : placed) {
    for (auto& [id, p] : q.s[0]) all0.push_back(p);
    for (auto& [id, p] : q.s[1]) all1.push_back(p);
  }

  // lower bounds for the side-0 root height, upper bounds for side 1
  double lb_root = 1, ub_root = 0, lb_b = -1e300, ub_b = 1e300, lb_e = -1e300, ub_e = 1e300;
  for (const Part& q : placed) {
    Point r = q.c[0];
    for (Point w : all1) lb_root = std::max(lb_root, 1 + (w.x - r.x) * (X0 - r.x) / (1 - w.y));
    r = q.c[2];
    for (Point w : all0) ub_root = std::min(ub_root, -(w.x - r.x) * (X1 - r.x) / w.y);
    if (q.bv[1] >= 0) {
      Point b = q.s[1].at(q.bv[1]);
      for (auto& [id, v] : q.s[0])
        if (id != q.root) lb_b = std::max(lb_b, b.y + (v.x - b.x) * (X0 - b.x) / (b.y - v.y));
    }
    if (q.bv[0] >= 0) {
      Point b = q.s[0].at(q.bv[0]);
      for (auto& [id, v] : q.s[1])
        if (id != q.root) ub_b = std::min(ub_b, b.y - (v.x - b.x) * (X1 - b.x) / (v.y - b.y));
    }
    for (auto e : q.edges) {
      if (on_side(q, 1, e)) {
        Point u = q.s[1].at(e.first), v = q.s[1].at(e.second), d = v - u;
        if (d.y != 0)
          for (Point o : {u, v}) lb_e = std::max(lb_e, o.y - (X0 - o.x) * d.x / d.y);
      }
      if (on_side(q, 0, e)) {
        Point u = q.s[0].at(e.first), v = q.s[0].at(e.second), d = v - u;
        if (d.y != 0)
          for (Point o : {u, v}) ub_e = std::min(ub_e, o.y - (X1 - o.x) * d.x / d.y);
      }
    }
  }
  double lb_w1 = -1e300;
  if (w1_bound && last.bv[1] >= 0) {
    Point w = last.s[1].at(last.bv[1]);
    for (const Part& q : placed)
      for (auto& [id, u] : q.s[0])
        if (id != q.root && w.y > u.y) lb_w1 = std::max(lb_w1, w.y + (u.x - w.x) * (X0 - w.x) / (w.y - u.y));
  }
  double al0 = std::atan2(std::abs(first.c[1].x - first.c[0].x), std::abs(first.c[1].y - first.c[0].y));
  double al1 = std::atan2(std::abs(last.c[3].x - last.c[2].x), std::abs(last.c[3].y - last.c[2].y));
  double alpha = std::min(al0, al1);
  double lb_a = (X1 - X0) / std::tan(alpha / 2);

  double top = std::max({lb_root, lb_b, lb_e, lb_w1, lb_a});
  double bot = std::min({ub_root, ub_b, ub_e, 1 - lb_a});
  double elev = kSlack * (top - 1) + 1;
  for (int i = 0; -elev >= bot - 1e-12 * std::abs(bot); ++i) {
    if (i >= 60) throw Error(ErrorKind::DegenerateGeometry, "root elevation does not converge");
    elev *= 2;
  }

  Part res;
  res.root = root;
  for (const Part& q : placed) {
    for (int k = 0; k < 2; ++k) res.s[k].insert(q.s[k].begin(), q.s[k].end());
    res.edges.insert(res.edges.end(), q.edges.begin(), q.edges.end());
    res.edges.emplace_back(root, q.root);
  }
  Point r0{X0, 1 + elev}, r1{X1, -elev};
  res.s[0][root] = r0;
  res.s[1][root] = r1;

  // rotate so that no edge is vertical and the roots become the extreme
  // corners
  Point r00 = first.c[0], r1m = last.c[2];
  double g0 = angle_at(r1, r00, first.c[1]), g1 = angle_at(r0, r1m, last.c[3]);
  double gamma = std::min(g0, g1);
  double base = std::atan2(r1.y - r00.y, r1.x - r00.x);
  double gp = gamma / 2, best_gp = gp, best_worst = -1;
  for (int t = 0; t < kRotationTries; ++t, gp *= 0.9) {
    double phi = -(base + gp), c = std::cos(phi), s = std::sin(phi);
    double worst = 1;
    for (auto e : res.edges)
      for (int k = 0; k < 2; ++k) {
        if (!on_side(res, k, e)) continue;
        Point d = res.s[k].at(e.second) - res.s[k].at(e.first);
        worst = std::min(worst, std::abs(c * d.x - s * d.y) / norm(d));
      }
    if (worst > best_worst) best_worst = worst, best_gp = gp;
    if (worst > kNearVertical) break;
  }
  double phi = -(base + best_gp);
  Point cen{0, 0};
  int cnt = 0;
  for (int k = 0; k < 2; ++k)
    for (auto& [id, p] : res.s[k]) cen = cen + p, ++cnt;
  cen = (1.0 / cnt) * cen;
  for (int k = 0; k < 2; ++k)
    for (auto& [id, p] : res.s[k]) p = rotate_about(p, cen, phi);
  res.c[0] = res.s[0].at(root);
  res.c[1] = rotate_about(r00, cen, phi);
  res.c[2] = res.s[1].at(root);
  res.c[3] = rotate_about(r1m, cen, phi);
  res.bv[0] = first.root;
  res.bv[1] = last.root;

  double dr = dynamic_range_of(res);
  if (trace) {
    lt.x0 = X0;
    lt.x1 = X1;
    lt.y0 = r0.y;
    lt.y1 = r1.y;
    lt.z1 = lb_root;
    lt.z2 = lb_b;
    lt.z3 = lb_a;
    lt.z_strip = lb_e;
    lt.z_w1 = w1_bound ? lb_w1 : 0;
    lt.alpha = alpha;
    lt.gamma = gamma;
    lt.gamma_prime = best_gp;
    lt.elevation = elev;
    lt.dynamic_range = dr;
    trace->levels.push_back(lt);
  }
  if (!(dr <= kMaxDynamicRange))
    throw Error(ErrorKind::DegenerateGeometry, "dynamic range exceeds 1e12");
  return res;
}

Part draw_part(const RootedTree& rt, int v, ConstructionTrace* trace) {
  if (rt.children[v].empty()) return base_part(v);
  std::vector<Part> ch;
  for (int c : rt.children[v]) ch.push_back(draw_part(rt, c, trace));
  return assemble(v, ch, false, trace);
}

double sigma(const Part& p) {
  return std::abs(p.c[3].y - p.c[1].y) / std::abs(p.c[0].y - p.c[2].y);
}

// Moves both roots away from b along the sides a_i b_i until the strip ratio
// drops below target.
Part lower(const Part& p, double target) {
  double num = std::abs(p.c[3].y - p.c[1].y), den = std::abs(p.c[0].y - p.c[2].y);
  if (num / den < target) return p;
  double k = (p.c[0].y - p.c[1].y) - (p.c[2].y - p.c[3].y);
  double lam = std::max(1.0, (num / target - (p.c[1].y - p.c[3].y)) / k * (1 + 1e-7));
  Part r = p;
  r.c[0] = p.c[1] + lam * (p.c[0] - p.c[1]);
  r.c[2] = p.c[3] + lam * (p.c[2] - p.c[3]);
  r.s[0][p.root] = r.c[0];
  r.s[1][p.root] = r.c[2];
  return r;
}

Part draw_pruned_part(const RootedTree& rt, int v, const std::set<int>& L,
                      std::vector<int>& removed, ConstructionTrace* trace) {
  std::vector<Part> drawn;
  std::vector<int> here;
  for (int c : rt.children[v]) {
    SubtreeType t = subtree_type(rt, c, L);
    if (t == SubtreeType::D) {
      drawn.push_back(draw_pruned_part(rt, c, L, removed, trace));
      continue;
    }
    if (t == SubtreeType::B)
      for (int x : rt.children[c])
        if (L.count(x)) here.push_back(x);
    drawn.push_back(draw_part(rt, c, trace));
  }
  double target = sigma(drawn.back()) / 2;
  for (size_t i = 0; i + 1 < drawn.size(); ++i) drawn[i] = lower(drawn[i], target);
  Part res = assemble(v, drawn, true, trace);
  for (int x : here) {
    res.s[1].erase(x);
    removed.push_back(x);
  }
  return res;
}

DrawingPair to_drawing(const Part& p, int n, const std::vector<int>& map1) {
  DrawingPair d;
  d.pts[0].assign(n, {});
  d.pts[1].assign(n, {});
  for (auto& [id, q] : p.s[0]) d.pts[0][id] = q;
  for (auto& [id, q] : p.s[1]) d.pts[1][map1[id]] = q;
  for (auto [u, v] : p.edges) {
    d.edges[0].push_back(std::minmax(u, v));
    d.edges[1].push_back(std::minmax(map1[u], map1[v]));
  }
  std::sort(d.edges[0].begin(), d.edges[0].end());
  std::sort(d.edges[1].begin(), d.edges[1].end());
  Corners c{p.c[0], p.c[1], p.c[2], p.c[3], {p.root, map1[p.root]},
            {p.bv[0], p.bv[1] >= 0 ? map1[p.bv[1]] : -1}};
  d.corners = c;
  d.sep = linearly_separable(d.pts[0], d.pts[1]);
  return d;
}

}  // namespace

DrawingPair draw_tree_pair(const RootedTree& rt0, const RootedTree& rt1, ConstructionTrace* trace) {
  if (rt0.n() != rt1.n() || canonical_code(rt0) != canonical_code(rt1))
    throw Error(ErrorKind::NotIsomorphic, "rooted trees are not isomorphic");
  IsoMap iso = rooted_isomorphism_map(rt0, rt1);
  Part p = draw_part(rt0, rt0.root, trace);
  return to_drawing(p, rt0.n(), iso.map);
}

DrawingPair lower_strip_ratio(const DrawingPair& pd, double eps) {
  if (!(eps > 0) || !std::isfinite(eps)) throw Error(ErrorKind::InvalidEps, "eps must be positive");
  if (!pd.corners) throw Error(ErrorKind::MissingAnnotation, "drawing has no corners");
  const Corners& c = *pd.corners;
  if (c.root[0] < 0 || c.root[1] < 0) throw Error(ErrorKind::MissingAnnotation, "roots not annotated");
  Part p;
  p.c[0] = c.a0;
  p.c[1] = c.b0;
  p.c[2] = c.a1;
  p.c[3] = c.b1;
  Part q = lower(p, eps);
  DrawingPair out = pd;
  out.pts[0][c.root[0]] = q.c[0];
  out.pts[1][c.root[1]] = q.c[2];
  out.corners->a0 = q.c[0];
  out.corners->a1 = q.c[2];
  out.sep = linearly_separable(out.pts[0], out.pts[1]);
  return out;
}

DrawingPair draw_pruned_tree_pair(const RootedTree& rt_in, const std::set<int>& L, ConstructionTrace* trace) {
  if (rt_in.height() < 2) throw Error(ErrorKind::HeightTooSmall, "pruning needs height >= 2");
  SparseCheck sc = is_sparse(rt_in, L);
  if (!sc.ok) throw Error(ErrorKind::SparseViolation, "leaf set is not sparse");
  RootedTree rt = reorder_children_for_pruning(rt_in, L);
  std::vector<int> removed;
  Part p = draw_pruned_part(rt, rt.root, L, removed, trace);
  int n = rt.n();
  std::vector<int> ident(n);
  for (int v = 0; v < n; ++v) ident[v] = v;
  DrawingPair full = to_drawing(p, n, ident);

  // compact side 1
  std::vector<int> idx(n, -1);
  DrawingPair d;
  d.pts[0] = full.pts[0];
  d.edges[0] = full.edges[0];
  for (int v = 0; v < n; ++v)
    if (p.s[1].count(v)) {
      idx[v] = static_cast<int>(d.pts[1].size());
      d.pts[1].push_back(full.pts[1][v]);
      d.ids[1].push_back(v);
    }
  for (auto [u, v] : full.edges[1])
    if (idx[u] >= 0 && idx[v] >= 0) d.edges[1].emplace_back(idx[u], idx[v]);
  Corners c = *full.corners;
  c.root[1] = idx[c.root[1]];
  c.bvert[1] = c.bvert[1] >= 0 ? idx[c.bvert[1]] : -1;
  d.corners = c;
  d.sep = linearly_separable(d.pts[0], d.pts[1]);
  return d;
}

}  // namespace mw
