#pragma once

#include <cmath>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace mw {

// Relative tolerance used by every predicate. Scaled per predicate by the
// largest pairwise distance among the points involved.
inline constexpr double kTau = 1e-9;

enum class ErrorKind {
  DegenerateInput,
  InvalidParallelogram,
  NotIsomorphic,
  NotACaterpillar,
  InvalidLeafSet,
  SparseViolation,
  InvalidSpec,
  DegenerateGeometry,
  InvalidEps,
  HeightTooSmall,
  EmptyKeepSet,
  NoSafeEps,
  MissingAnnotation,
  ParseError,
};

const char* error_kind_name(ErrorKind k);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(error_kind_name(kind)) + ": " + what),
        kind_(kind) {}
  ErrorKind kind() const { return kind_; }

 private:
  ErrorKind kind_;
};

struct Point {
  double x = 0, y = 0;
};

inline Point operator+(Point a, Point b) { return {a.x + b.x, a.y + b.y}; }
inline Point operator-(Point a, Point b) { return {a.x - b.x, a.y - b.y}; }
inline Point operator*(double s, Point a) { return {s * a.x, s * a.y}; }
inline Point operator*(Point a, double s) { return {s * a.x, s * a.y}; }
inline bool operator==(Point a, Point b) { return a.x == b.x && a.y == b.y; }
inline double dot(Point a, Point b) { return a.x * b.x + a.y * b.y; }
inline double cross(Point a, Point b) { return a.x * b.y - a.y * b.x; }
inline double norm(Point a) { return std::hypot(a.x, a.y); }
inline double dist(Point a, Point b) { return norm(a - b); }
inline Point perp(Point a) { return {-a.y, a.x}; }

// beta in [1, inf]. Infinity is a flag, never an arithmetic value.
struct Beta {
  double value = 1;
  bool infinite = false;

  Beta() = default;
  Beta(double v) : value(v) {}  // NOLINT: implicit on purpose
  static Beta inf() {
    Beta b;
    b.infinite = true;
    return b;
  }
  std::string str() const;
  static Beta parse(const std::string& s);
};

inline bool operator==(Beta a, Beta b) {
  return a.infinite == b.infinite && (a.infinite || a.value == b.value);
}

struct BetaRegion {
  Point p, q;
  Beta beta;
  bool closed = true;
};

struct BetaDisks {
  Point c1, c2;
  double radius;
};

BetaDisks beta_disks(Point p, Point q, double beta);

// Signed depth of w in the region of (p,q): positive inside, negative outside.
double region_depth(Point p, Point q, Beta beta, Point w);
// Length used to scale the tolerance for one (p,q,w) predicate.
double region_scale(Point p, Point q, Point w);
// region_depth / region_scale.
double region_depth_rel(Point p, Point q, Beta beta, Point w);
bool region_contains(const BetaRegion& r, Point w, double tau = kTau);

double angle_at(Point u, Point apex, Point v);

struct Wedge {
  Point apex;
  Point ray1, ray2;  // unit
  bool open = true;
};

bool wedge_contains(const Wedge& w, Point pt, double tau = kTau);

struct WingedParallelogram {
  Point a0, b0, a1, b1;
  Point q0, q1;
  Wedge w0, w1;
  Point p0, p1;
  Point a(int i) const { return i == 0 ? a0 : a1; }
  Point b(int i) const { return i == 0 ? b0 : b1; }
  Point q(int i) const { return i == 0 ? q0 : q1; }
  Point port(int i) const { return i == 0 ? p0 : p1; }
  const Wedge& wedge(int i) const { return i == 0 ? w0 : w1; }
  // Interior angle of the parallelogram at a_i.
  double angle_at_a(int i) const;
};

WingedParallelogram build_winged_parallelogram(Point a0, Point b0, Point a1,
                                               Point b1, Point q0, Point q1);

std::vector<Point> rotate_about(const std::vector<Point>& pts, Point center,
                                double angle);
Point rotate_about(Point p, Point center, double angle);

struct Line {
  Point point;
  Point dir;
  // > 0 on the left of dir.
  double side(Point p) const { return cross(dir, p - point); }
};

Line horizontal_line(double y);

// Smallest signed distance of pts0 to the left side and pts1 to the right side
// of l (negative if some point is on the wrong side).
double separation_margin(const Line& l, const std::vector<Point>& pts0,
                         const std::vector<Point>& pts1);

std::optional<Line> linearly_separable(const std::vector<Point>& pts0,
                                       const std::vector<Point>& pts1);

std::vector<Point> convex_hull(std::vector<Point> pts);

}  // namespace mw
