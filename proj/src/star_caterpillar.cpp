#include <algorithm>
#include <cmath>
#include <limits>

#include "mw/construct.hpp"

namespace mw {

namespace {

constexpr double kAnchorOffset = 0.1;

DrawingPair star_drawing(const std::vector<Point>& side0, const std::vector<Point>& side1) {
  DrawingPair d;
  d.pts[0] = side0;
  d.pts[1] = side1;
  for (int s = 0; s < 2; ++s)
    for (int t = 1; t < static_cast<int>(d.pts[s].size()); ++t) d.edges[s].emplace_back(0, t);
  return d;
}

void annotate(WPDrawing& w) {
  Corners c{w.wp.a0, w.wp.b0, w.wp.a1, w.wp.b1, {0, 0}, {1, 1}};
  w.drawing.corners = c;
  w.drawing.sep = horizontal_line((w.wp.b0.y + w.wp.b1.y) / 2);
}

}  // namespace

WPDrawing draw_star_pair(int k) {
  if (k < 0) throw Error(ErrorKind::InvalidSpec, "k must be >= 0");
  WPDrawing w;
  if (k == 0) {
    Point a0{0, 5}, b0{0, 3}, a1{2, 0}, b1{2, 2};
    w.wp = build_winged_parallelogram(a0, b0, a1, b1, {1.1, 3}, {0.9, 2});
    w.drawing = star_drawing({a0, b0}, {a1, b1});
    annotate(w);
    return w;
  }
  std::vector<Point> s0, s1;
  Point r0{-k + 0.5, 2.0 * k * k + 0.5};
  s0.push_back(r0);
  for (int i = 0; i <= k; ++i) s0.push_back({(2 * i - k) + 0.5, 0.5});
  // side 1 is side 0 reflected through (1,0), which keeps every side-0 leaf
  // left of b1 (see README)
  for (Point p : s0) s1.push_back({2 - p.x, -p.y});
  Point q0{s0.back().x + kAnchorOffset, 0.5};
  Point q1{2 - q0.x, -0.5};
  w.wp = build_winged_parallelogram(s0[0], s0[1], s1[0], s1[1], q0, q1);
  w.drawing = star_drawing(s0, s1);
  annotate(w);
  return w;
}

WPDrawing redraw_pruned_stars(const WPDrawing& in, const std::vector<int>& keep0,
                              const std::vector<int>& keep1) {
  if (keep0.empty() || keep1.empty() || keep0.size() != keep1.size())
    throw Error(ErrorKind::EmptyKeepSet, "keep sets must be non-empty and of equal size");
  int k = static_cast<int>(in.drawing.pts[0].size()) - 2;
  for (const auto* keep : {&keep0, &keep1})
    for (int t : *keep)
      if (t < 0 || t > k) throw Error(ErrorKind::EmptyKeepSet, "leaf number out of range");
  int c = static_cast<int>(keep0.size());
  const auto& p0 = in.drawing.pts[0];
  Point centre = 0.5 * (in.wp.a0 + in.wp.a1);
  double x0 = p0[1].x, span = p0[k + 1].x - x0, y = p0[1].y;

  WPDrawing out;
  out.wp = in.wp;
  out.drawing.pts[0].push_back(in.drawing.pts[0][0]);
  out.drawing.pts[1].push_back(in.drawing.pts[1][0]);
  for (int t = 0; t < c; ++t) {
    Point p = c == 1 ? p0[1] : Point{x0 + span * t / (c - 1), y};
    out.drawing.pts[0].push_back(p);
    out.drawing.pts[1].push_back(2.0 * centre - p);
  }
  for (int s = 0; s < 2; ++s)
    for (int t = 1; t <= c; ++t) out.drawing.edges[s].emplace_back(0, t);
  // the leaf at b_i keeps its label if kept, otherwise the first kept leaf
  // moves there
  for (int s = 0; s < 2; ++s) {
    std::vector<int> keep = s == 0 ? keep0 : keep1;
    std::sort(keep.begin(), keep.end());
    std::vector<int> ids{0};
    for (int t : keep) ids.push_back(t + 1);
    out.drawing.ids[s] = ids;
  }
  annotate(out);
  return out;
}

double compute_safe_perturbation(const DrawingPair& d, const MovingBlock& block, Point dir,
                                 const std::array<EdgeList, 2>& target) {
  std::vector<Point> all = d.pts[0];
  all.insert(all.end(), d.pts[1].begin(), d.pts[1].end());
  double mind = std::numeric_limits<double>::infinity(), extent = 0;
  for (size_t i = 0; i < all.size(); ++i)
    for (size_t j = i + 1; j < all.size(); ++j) {
      double dd = dist(all[i], all[j]);
      mind = std::min(mind, dd);
      extent = std::max(extent, dd);
    }
  if (!std::isfinite(mind) || mind == 0) throw Error(ErrorKind::DegenerateInput, "need distinct points");
  Point u = (1.0 / norm(dir)) * dir;

  WitnessTable pre[2];
  for (int s = 0; s < 2; ++s) pre[s] = witness_table(d.pts[s], d.pts[1 - s], Beta(1.0));

  double base = mind / 10;
  for (double eps = base; eps >= 1e-12 * extent; eps /= 2) {
    std::array<std::vector<Point>, 2> moved = d.pts;
    for (int s = 0; s < 2; ++s)
      for (int i : block.side[s]) moved[s][i] = moved[s][i] + eps * u;
    bool ok = true;
    for (int s = 0; s < 2 && ok; ++s) {
      int n = static_cast<int>(moved[s].size());
      if (n < 2) continue;
      WitnessTable post = witness_table(moved[s], moved[1 - s], Beta(1.0));
      std::vector<char> adj(static_cast<size_t>(n) * n, 0);
      for (auto [a, b] : target[s]) adj[a * n + b] = adj[b * n + a] = 1;
      for (int a = 0; a < n && ok; ++a)
        for (int b = a + 1; b < n && ok; ++b) {
          double m0 = pre[s].at(a, b), m1 = post.at(a, b);
          if (adj[a * n + b] ? m1 >= -kTau : m1 < -kTau) ok = false;
          if (std::abs(m0) > kTau && ((m1 > kTau) != (m0 > kTau) || std::abs(m1) <= kTau))
            ok = false;
        }
    }
    if (ok) return eps;
  }
  throw Error(ErrorKind::NoSafeEps, "no perturbation above 1e-12 of the drawing extent works");
}

namespace {

DrawingPair draw_path_pair(const CaterpillarDecomposition& cat) {
  std::vector<int> order;
  if (cat.n <= 2) {
    order = cat.spine;
  } else {
    order.push_back(cat.leaves.front().front());
    for (int v : cat.spine) order.push_back(v);
    order.push_back(cat.leaves.back().back());
  }
  DrawingPair d;
  d.pts[0].assign(cat.n, {});
  d.pts[1].assign(cat.n, {});
  for (int t = 0; t < cat.n; ++t) {
    d.pts[0][order[t]] = {static_cast<double>(t), 0.0};
    d.pts[1][order[t]] = {static_cast<double>(t), -0.5};
  }
  for (int t = 0; t + 1 < cat.n; ++t) {
    auto e = std::minmax(order[t], order[t + 1]);
    d.edges[0].push_back(e);
    d.edges[1].push_back(e);
  }
  d.sep = horizontal_line(-0.25);
  return d;
}

}  // namespace

DrawingPair draw_caterpillar_pair(const CaterpillarDecomposition& cat, ConstructionTrace* trace) {
  if (cat.spine.empty() || cat.leaves.size() != cat.spine.size())
    throw Error(ErrorKind::NotACaterpillar, "decomposition has no spine");
  if (cat.is_path) return draw_path_pair(cat);

  int K = static_cast<int>(cat.spine.size());
  std::vector<int> cnt(K);
  for (int j = 0; j < K; ++j) cnt[j] = static_cast<int>(cat.leaves[j].size());
  int h = static_cast<int>(std::max_element(cnt.begin(), cnt.end()) - cnt.begin());
  WPDrawing hub = draw_star_pair(cnt[h] - 1);
  const WingedParallelogram& wp = hub.wp;
  Point a0 = wp.a0, a1 = wp.a1, p0 = wp.p0, p1 = wp.p1;
  double N = a0.y, S = a1.y;
  // offset r_{0,j} -> r_{1,j} of a leafless spine pair: perpendicular to
  // the line through r_{1,h} and p_{0,h}
  Point f = perp(p0 - a1);
  Point off = ((S - N) / f.y) * f;

  std::vector<Point> r0(K), r1(K);
  double X = a0.x;
  for (int j = 0; j < K; ++j) {
    if (j > 0) {
      if (cnt[j - 1] > 0) {
        X = r0[j - 1].x + (p0.x - a0.x);
      } else if (cnt[j] > 0) {
        X = r1[j - 1].x - (p1.x - a0.x);
      } else {
        Point e = r1[j - 1] - r0[j - 1];
        X = r1[j - 1].x - (N - r1[j - 1].y) * e.y / e.x;
      }
    }
    r0[j] = {X, N};
    r1[j] = {cnt[j] > 0 ? X + (a1.x - a0.x) : X + off.x, S};
  }

  DrawingPair d;
  d.pts[0].assign(cat.n, {});
  d.pts[1].assign(cat.n, {});
  std::vector<int> block(cat.n, -1);
  EdgeList leaf_edges, spine_edges;
  for (int j = 0; j < K; ++j) {
    int v = cat.spine[j];
    d.pts[0][v] = r0[j];
    d.pts[1][v] = r1[j];
    block[v] = j;
    if (j + 1 < K) spine_edges.push_back(std::minmax(v, cat.spine[j + 1]));
    if (cnt[j] == 0) continue;
    std::vector<int> keep(cnt[j]);
    for (int t = 0; t < cnt[j]; ++t) keep[t] = t;
    WPDrawing star = redraw_pruned_stars(hub, keep, keep);
    Point shift{r0[j].x - a0.x, 0};
    for (int t = 0; t < cnt[j]; ++t) {
      int leaf = cat.leaves[j][t];
      d.pts[0][leaf] = star.drawing.pts[0][t + 1] + shift;
      d.pts[1][leaf] = star.drawing.pts[1][t + 1] + shift;
      block[leaf] = j;
      leaf_edges.push_back(std::minmax(v, leaf));
    }
  }

  // consecutive spine vertices only have right-angle witnesses; slide each
  // suffix block slightly left, right to left
  for (int j = K - 2; j >= 0; --j) {
    EdgeList target = leaf_edges;
    for (int t = j; t + 1 < K; ++t) target.push_back(spine_edges[t]);
    MovingBlock mb;
    for (int v = 0; v < cat.n; ++v)
      if (block[v] > j) mb.side[0].push_back(v), mb.side[1].push_back(v);
    double eps = compute_safe_perturbation(d, mb, {-1, 0}, {target, target});
    for (int s = 0; s < 2; ++s)
      for (int v : mb.side[s]) d.pts[s][v].x -= eps;
    if (trace) trace->perturbations.push_back(eps);
  }
  EdgeList all = leaf_edges;
  all.insert(all.end(), spine_edges.begin(), spine_edges.end());
  std::sort(all.begin(), all.end());
  d.edges = {all, all};
  d.sep = horizontal_line((N + S) / 2);
  return d;
}

}  // namespace mw
