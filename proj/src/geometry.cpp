#include "mw/geometry.hpp"

#include <algorithm>
#include <cstdio>
#include <limits>

namespace mw {

const char* error_kind_name(ErrorKind k) {
  switch (k) {
    case ErrorKind::DegenerateInput: return "DegenerateInput";
    case ErrorKind::InvalidParallelogram: return "InvalidParallelogram";
    case ErrorKind::NotIsomorphic: return "NotIsomorphic";
    case ErrorKind::NotACaterpillar: return "NotACaterpillar";
    case ErrorKind::InvalidLeafSet: return "InvalidLeafSet";
    case ErrorKind::SparseViolation: return "SparseViolation";
    case ErrorKind::InvalidSpec: return "InvalidSpec";
    case ErrorKind::DegenerateGeometry: return "DegenerateGeometry";
    case ErrorKind::InvalidEps: return "InvalidEps";
    case ErrorKind::HeightTooSmall: return "HeightTooSmall";
    case ErrorKind::EmptyKeepSet: return "EmptyKeepSet";
    case ErrorKind::NoSafeEps: return "NoSafeEps";
    case ErrorKind::MissingAnnotation: return "MissingAnnotation";
    case ErrorKind::ParseError: return "ParseError";
  }
  return "Error";
}

std::string Beta::str() const {
  if (infinite) return "inf";
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", value);
  return buf;
}

Beta Beta::parse(const std::string& s) {
  if (s == "inf" || s == "Inf" || s == "INF") return Beta::inf();
  double v = 0;
  try {
    size_t pos = 0;
    v = std::stod(s, &pos);
    if (pos != s.size()) throw std::invalid_argument(s);
  } catch (const std::exception&) {
    throw Error(ErrorKind::ParseError, "bad beta value '" + s + "'");
  }
  if (!std::isfinite(v) || v < 1)
    throw Error(ErrorKind::ParseError, "beta must be >= 1 or inf, got '" + s + "'");
  return Beta(v);
}

static void check_beta(Beta b) {
  if (!b.infinite && (!std::isfinite(b.value) || b.value < 1))
    throw Error(ErrorKind::DegenerateInput, "beta must be >= 1");
}

BetaDisks beta_disks(Point p, Point q, double beta) {
  if (p == q) throw Error(ErrorKind::DegenerateInput, "p = q");
  if (!std::isfinite(beta) || beta < 1)
    throw Error(ErrorKind::DegenerateInput, "beta must be finite and >= 1");
  double h = beta / 2;
  return {(1 - h) * p + h * q, h * p + (1 - h) * q, beta * dist(p, q) / 2};
}

double region_depth(Point p, Point q, Beta beta, Point w) {
  check_beta(beta);
  if (p == q) throw Error(ErrorKind::DegenerateInput, "p = q");
  if (beta.infinite) {
    double d = dist(p, q);
    double t = dot(w - p, q - p) / d;
    return std::min(t, d - t);
  }
  BetaDisks k = beta_disks(p, q, beta.value);
  return std::min(k.radius - dist(w, k.c1), k.radius - dist(w, k.c2));
}

double region_scale(Point p, Point q, Point w) {
  return std::max({dist(p, q), dist(p, w), dist(q, w)});
}

double region_depth_rel(Point p, Point q, Beta beta, Point w) {
  return region_depth(p, q, beta, w) / region_scale(p, q, w);
}

bool region_contains(const BetaRegion& r, Point w, double tau) {
  double rel = region_depth_rel(r.p, r.q, r.beta, w);
  return r.closed ? rel >= -tau : rel > tau;
}

double angle_at(Point u, Point apex, Point v) {
  if (u == apex || v == apex)
    throw Error(ErrorKind::DegenerateInput, "angle with coincident points");
  Point a = u - apex, b = v - apex;
  return std::atan2(std::abs(cross(a, b)), dot(a, b));
}

// Coordinates of d in the (ray1, ray2) basis.
static void wedge_coords(const Wedge& w, Point d, double& s, double& t) {
  double c = cross(w.ray1, w.ray2);
  s = cross(d, w.ray2) / c;
  t = cross(w.ray1, d) / c;
}

bool wedge_contains(const Wedge& w, Point pt, double tau) {
  Point d = pt - w.apex;
  double len = norm(d);
  if (len == 0) return false;
  double s, t;
  wedge_coords(w, d, s, t);
  return s > tau * len && t > tau * len;
}

static bool wedge_contains_closed(const Wedge& w, Point pt, double tol) {
  Point d = pt - w.apex;
  double s, t;
  wedge_coords(w, d, s, t);
  return s >= -tol && t >= -tol;
}

double WingedParallelogram::angle_at_a(int i) const {
  return angle_at(b(i), a(i), b(1 - i));
}

static Point unit(Point v) { return (1.0 / norm(v)) * v; }

WingedParallelogram build_winged_parallelogram(Point a0, Point b0, Point a1,
                                               Point b1, Point q0, Point q1) {
  auto fail = [](const std::string& m) {
    throw Error(ErrorKind::InvalidParallelogram, m);
  };
  double scale = std::max({dist(a0, a1), dist(b0, b1), dist(a0, b0),
                           dist(a0, b1), dist(q0, q1)});
  double tol = kTau * scale;
  if (!(a0.y > b0.y + tol && b0.y > b1.y + tol && b1.y > a1.y + tol))
    fail("need y(a0) > y(b0) > y(b1) > y(a1)");
  if (std::abs(a0.x - b0.x) > tol || std::abs(a1.x - b1.x) > tol)
    fail("need x(a0) = x(b0) and x(a1) = x(b1)");
  if (!(a0.x < a1.x - tol)) fail("need x(b0) < x(a1)");
  if (norm((a0 + a1) - (b0 + b1)) > tol) fail("corners are not a parallelogram");
  if (std::abs(q0.y - b0.y) > tol || std::abs(q1.y - b1.y) > tol)
    fail("need y(q_i) = y(b_i)");
  if (!(q1.x < q0.x - tol)) fail("need x(q1) < x(q0)");
  if (std::abs((q0.x - b0.x) - (b1.x - q1.x)) > tol)
    fail("need x(q0) - x(b0) = x(b1) - x(q1)");

  WingedParallelogram wp{a0, b0, a1, b1, q0, q1, {}, {}, {}, {}};
  Point corners[4] = {a0, b0, a1, b1};
  for (int i = 0; i < 2; ++i) {
    Point a = wp.a(i), apex = wp.b(1 - i), q = wp.q(i);
    Point rho = unit(perp(a - apex));
    if (rho.y == 0) fail("ray through b has no port");
    if ((rho.y > 0) != (a.y > apex.y)) rho = -1.0 * rho;
    Point port = apex + ((a.y - apex.y) / rho.y) * rho;
    Point rho2 = unit(perp(q - apex));
    bool found = false;
    for (int sgn : {1, -1}) {
      Wedge w{apex, rho, sgn * rho2, true};
      if (std::abs(cross(w.ray1, w.ray2)) < 1e-12) fail("wedge rays are parallel");
      bool clean = true;
      for (Point c : corners)
        if (!(c == apex) && wedge_contains_closed(w, c, tol)) clean = false;
      if (clean) {
        (i == 0 ? wp.w0 : wp.w1) = w;
        found = true;
        break;
      }
    }
    if (!found) fail("no safe wedge excludes the corners");
    (i == 0 ? wp.p0 : wp.p1) = port;
  }
  return wp;
}

Point rotate_about(Point p, Point center, double angle) {
  double c = std::cos(angle), s = std::sin(angle);
  Point d = p - center;
  return {center.x + c * d.x - s * d.y, center.y + s * d.x + c * d.y};
}

std::vector<Point> rotate_about(const std::vector<Point>& pts, Point center,
                                double angle) {
  std::vector<Point> out;
  out.reserve(pts.size());
  for (Point p : pts) out.push_back(rotate_about(p, center, angle));
  return out;
}

Line horizontal_line(double y) { return {{0, y}, {1, 0}}; }

double separation_margin(const Line& l, const std::vector<Point>& pts0,
                         const std::vector<Point>& pts1) {
  double n = norm(l.dir);
  double m = std::numeric_limits<double>::infinity();
  for (Point p : pts0) m = std::min(m, l.side(p) / n);
  for (Point p : pts1) m = std::min(m, -l.side(p) / n);
  return m;
}

std::vector<Point> convex_hull(std::vector<Point> pts) {
  std::sort(pts.begin(), pts.end(), [](Point a, Point b) {
    return a.x < b.x || (a.x == b.x && a.y < b.y);
  });
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  if (pts.size() < 3) return pts;
  std::vector<Point> h(2 * pts.size());
  size_t k = 0;
  for (size_t i = 0; i < pts.size(); ++i) {
    while (k >= 2 && cross(h[k - 1] - h[k - 2], pts[i] - h[k - 2]) <= 0) --k;
    h[k++] = pts[i];
  }
  for (size_t i = pts.size() - 1, t = k + 1; i-- > 0;) {
    while (k >= t && cross(h[k - 1] - h[k - 2], pts[i] - h[k - 2]) <= 0) --k;
    h[k++] = pts[i];
  }
  h.resize(k - 1);
  return h;
}

static Point closest_on_segment(Point p, Point a, Point b) {
  Point ab = b - a;
  double L = dot(ab, ab);
  if (L == 0) return a;
  double t = std::clamp(dot(p - a, ab) / L, 0.0, 1.0);
  return a + t * ab;
}

std::optional<Line> linearly_separable(const std::vector<Point>& pts0,
                                       const std::vector<Point>& pts1) {
  if (pts0.empty() || pts1.empty())
    throw Error(ErrorKind::DegenerateInput, "empty point set");
  auto h0 = convex_hull(pts0), h1 = convex_hull(pts1);
  // Closest pair between hull boundaries; its perpendicular bisector separates
  // whenever the hulls are disjoint. The result is checked below either way.
  double best = std::numeric_limits<double>::infinity();
  Point c0{}, c1{};
  auto edges = [](const std::vector<Point>& h, size_t i) {
    return std::make_pair(h[i], h[(i + 1) % h.size()]);
  };
  for (size_t i = 0; i < h0.size(); ++i) {
    auto [a, b] = edges(h0, i);
    for (size_t j = 0; j < h1.size(); ++j) {
      auto [c, d] = edges(h1, j);
      Point cand[4][2] = {{a, closest_on_segment(a, c, d)},
                          {b, closest_on_segment(b, c, d)},
                          {closest_on_segment(c, a, b), c},
                          {closest_on_segment(d, a, b), d}};
      for (auto& pr : cand) {
        double dd = dist(pr[0], pr[1]);
        if (dd < best) best = dd, c0 = pr[0], c1 = pr[1];
      }
    }
  }
  if (!(best > 0)) return std::nullopt;
  Point mid = 0.5 * (c0 + c1);
  Line l{mid, perp(c1 - c0)};
  if (l.side(c0) < 0) l.dir = -1.0 * l.dir;
  double scale = 0;
  for (Point p : pts0) scale = std::max(scale, dist(p, mid));
  for (Point p : pts1) scale = std::max(scale, dist(p, mid));
  if (separation_margin(l, pts0, pts1) > kTau * scale) return l;
  return std::nullopt;
}

}  // namespace mw
