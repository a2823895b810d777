#include "mw/proximity.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <set>

namespace mw {

const char* mode_name(Mode m) {
  switch (m) {
    case Mode::Open: return "open";
    case Mode::Closed: return "closed";
    case Mode::Strict: return "strict";
  }
  return "?";
}

Mode parse_mode(const std::string& s) {
  if (s == "open") return Mode::Open;
  if (s == "closed") return Mode::Closed;
  if (s == "strict") return Mode::Strict;
  throw Error(ErrorKind::ParseError, "unknown mode '" + s + "'");
}

void DrawingPair::validate() const {
  for (int s = 0; s < 2; ++s) {
    int n = static_cast<int>(pts[s].size());
    if (!ids[s].empty() && static_cast<int>(ids[s].size()) != n)
      throw Error(ErrorKind::DegenerateInput, "id list length differs from point list");
    for (Point p : pts[s])
      if (!std::isfinite(p.x) || !std::isfinite(p.y))
        throw Error(ErrorKind::DegenerateInput, "non-finite coordinate");
    std::set<std::pair<int, int>> seen;
    for (auto [u, v] : edges[s]) {
      if (u < 0 || v < 0 || u >= n || v >= n)
        throw Error(ErrorKind::DegenerateInput, "edge index out of range");
      if (u == v) throw Error(ErrorKind::DegenerateInput, "self edge");
      if (!seen.insert({std::min(u, v), std::max(u, v)}).second)
        throw Error(ErrorKind::DegenerateInput, "duplicate edge");
    }
  }
}

static void require_distinct(const std::vector<Point>& pts) {
  std::vector<Point> s = pts;
  std::sort(s.begin(), s.end(), [](Point a, Point b) {
    return a.x < b.x || (a.x == b.x && a.y < b.y);
  });
  for (size_t i = 1; i < s.size(); ++i)
    if (s[i] == s[i - 1]) throw Error(ErrorKind::DegenerateInput, "coincident points on one side");
}

static void fill_row(const std::vector<Point>& side, const std::vector<Point>& other,
                     Beta beta, int u, WitnessTable& t) {
  int n = t.n;
  for (int v = u + 1; v < n; ++v) {
    double best = -std::numeric_limits<double>::infinity();
    int arg = -1;
    for (int w = 0; w < static_cast<int>(other.size()); ++w) {
      double r = region_depth_rel(side[u], side[v], beta, other[w]);
      if (r > best) best = r, arg = w;
    }
    t.best[u * n + v] = t.best[v * n + u] = best;
    t.arg[u * n + v] = t.arg[v * n + u] = arg;
  }
}

static WitnessTable empty_table(int n) {
  WitnessTable t;
  t.n = n;
  t.best.assign(static_cast<size_t>(n) * n, -std::numeric_limits<double>::infinity());
  t.arg.assign(static_cast<size_t>(n) * n, -1);
  return t;
}

WitnessTable witness_table_serial(const std::vector<Point>& side,
                                  const std::vector<Point>& other, Beta beta) {
  require_distinct(side);
  (void)region_depth({0, 0}, {1, 0}, beta, {0, 0});  // validates beta
  WitnessTable t = empty_table(static_cast<int>(side.size()));
  for (int u = 0; u < t.n; ++u) fill_row(side, other, beta, u, t);
  return t;
}

WitnessTable witness_table(const std::vector<Point>& side,
                           const std::vector<Point>& other, Beta beta) {
  require_distinct(side);
  (void)region_depth({0, 0}, {1, 0}, beta, {0, 0});
  WitnessTable t = empty_table(static_cast<int>(side.size()));
  // rows are independent; inputs are validated so nothing throws in here
#pragma omp parallel for schedule(dynamic)
  for (int u = 0; u < t.n; ++u) fill_row(side, other, beta, u, t);
  return t;
}

static bool has_witness(double best, bool closed, double tau) {
  return closed ? best >= -tau : best > tau;
}

static EdgeList edges_from(const WitnessTable& t, bool closed, double tau) {
  EdgeList e;
  for (int u = 0; u < t.n; ++u)
    for (int v = u + 1; v < t.n; ++v)
      if (!has_witness(t.at(u, v), closed, tau)) e.emplace_back(u, v);
  return e;
}

std::array<EdgeList, 2> extract_mw_graphs_serial(const std::vector<Point>& p0,
                                                 const std::vector<Point>& p1,
                                                 Beta beta, bool closed, double tau) {
  if (p0.empty() || p1.empty()) throw Error(ErrorKind::DegenerateInput, "empty side");
  return {edges_from(witness_table_serial(p0, p1, beta), closed, tau),
          edges_from(witness_table_serial(p1, p0, beta), closed, tau)};
}

std::array<EdgeList, 2> extract_mw_graphs(const std::vector<Point>& p0,
                                          const std::vector<Point>& p1, Beta beta,
                                          bool closed, double tau) {
  if (p0.empty() || p1.empty()) throw Error(ErrorKind::DegenerateInput, "empty side");
  return {edges_from(witness_table(p0, p1, beta), closed, tau),
          edges_from(witness_table(p1, p0, beta), closed, tau)};
}

VerificationReport verify(const DrawingPair& d, Beta beta, Mode mode, double tau) {
  d.validate();
  VerificationReport rep;
  rep.mode = mode;
  rep.beta = beta;
  for (int s = 0; s < 2; ++s) {
    const auto& side = d.pts[s];
    int n = static_cast<int>(side.size());
    if (n < 2) continue;
    WitnessTable t = witness_table(side, d.pts[1 - s], beta);
    std::vector<char> adj(static_cast<size_t>(n) * n, 0);
    for (auto [u, v] : d.edges[s]) adj[u * n + v] = adj[v * n + u] = 1;
    for (int u = 0; u < n; ++u)
      for (int v = u + 1; v < n; ++v) {
        double m = t.at(u, v);
        bool border = std::abs(m) <= tau;
        if (border) rep.borderline.push_back({s, u, v, m});
        bool ok = false;
        if (adj[u * n + v]) {
          ok = !has_witness(m, mode != Mode::Open, tau);
        } else {
          ok = has_witness(m, mode == Mode::Closed, tau);
        }
        if (!ok)
          rep.violations.push_back({s, u, v,
                                    adj[u * n + v] ? ViolationKind::ForbiddenWitness
                                                   : ViolationKind::MissingWitness,
                                    t.arg[u * n + v], m, border});
      }
  }
  return rep;
}

std::vector<Beta> default_beta_sample() { return {1.0, 1.5, 2.0, 5.0, 10.0, Beta::inf()}; }

std::vector<VerificationReport> verify_universal(const DrawingPair& d,
                                                 const std::vector<Beta>& betas) {
  std::vector<VerificationReport> out;
  for (Beta b : betas) out.push_back(verify(d, b, Mode::Strict));
  return out;
}

ParallelogramDrawingCheck check_parallelogram_drawing(const DrawingPair& d) {
  if (!d.corners) throw Error(ErrorKind::MissingAnnotation, "drawing has no corners");
  const Corners& c = *d.corners;
  ParallelogramDrawingCheck r;
  double scale = std::max({dist(c.a0, c.a1), dist(c.b0, c.b1), dist(c.a0, c.b0)});
  double tol = kTau * scale;
  r.y_order = c.a0.y > c.b1.y + tol && c.b1.y > c.b0.y + tol && c.b0.y > c.a1.y + tol;
  r.x_order = c.a0.x < c.b0.x - tol && c.b0.x < c.b1.x - tol && c.b1.x < c.a1.x - tol;
  r.is_parallelogram = norm((c.a0 + c.a1) - (c.b0 + c.b1)) <= tol;
  Point a[2] = {c.a0, c.a1}, b[2] = {c.b0, c.b1};
  r.roots_at_a = true;
  r.b_adjacent_to_root = true;
  r.interior_in_strip = true;
  r.no_vertical_edge = true;
  double lo = std::min(c.b0.y, c.b1.y) + tol, hi = std::max(c.b0.y, c.b1.y) - tol;
  for (int s = 0; s < 2; ++s) {
    int n = static_cast<int>(d.pts[s].size());
    int rt = c.root[s], bv = c.bvert[s];
    if (rt < 0 || rt >= n || dist(d.pts[s][rt], a[s]) > tol) r.roots_at_a = false;
    if (n > 1) {
      if (bv < 0 || bv >= n || dist(d.pts[s][bv], b[s]) > tol) {
        r.b_adjacent_to_root = false;
      } else {
        bool found = false;
        for (auto [u, v] : d.edges[s])
          if ((u == rt && v == bv) || (u == bv && v == rt)) found = true;
        if (!found) r.b_adjacent_to_root = false;
      }
    }
    for (int i = 0; i < n; ++i) {
      if (i == rt || i == bv) continue;
      double y = d.pts[s][i].y;
      if (!(y > lo && y < hi)) r.interior_in_strip = false;
    }
    for (auto [u, v] : d.edges[s]) {
      Point e = d.pts[s][v] - d.pts[s][u];
      if (std::abs(e.x) <= kTau * norm(e)) r.no_vertical_edge = false;
    }
  }
  return r;
}

double strip_ratio(const Corners& c) {
  double den = std::abs(c.a0.y - c.a1.y);
  if (den == 0) throw Error(ErrorKind::DegenerateInput, "y(a0) = y(a1)");
  return std::abs(c.b1.y - c.b0.y) / den;
}

double strip_ratio(const DrawingPair& d) {
  if (!d.corners) throw Error(ErrorKind::MissingAnnotation, "drawing has no corners");
  return strip_ratio(*d.corners);
}

double dynamic_range(const DrawingPair& d) {
  std::vector<Point> all = d.pts[0];
  all.insert(all.end(), d.pts[1].begin(), d.pts[1].end());
  double big = 0;
  for (Point p : all) big = std::max({big, std::abs(p.x), std::abs(p.y)});
  if (all.size() < 2) return 1;
  double small = std::numeric_limits<double>::infinity();
  for (size_t i = 0; i < all.size(); ++i)
    for (size_t j = i + 1; j < all.size(); ++j) small = std::min(small, dist(all[i], all[j]));
  if (small == 0) return std::numeric_limits<double>::infinity();
  return big / small;
}

}  // namespace mw
