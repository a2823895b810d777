#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "mw/geometry.hpp"
#include "mw/tree_model.hpp"

namespace mw {

// Corner annotation of a parallelogram drawing. root[i] is the index of the
// vertex at a_i; bvert[i] the index of the vertex at b_i or -1.
struct Corners {
  Point a0, b0, a1, b1;
  int root[2] = {-1, -1};
  int bvert[2] = {-1, -1};
};

struct DrawingPair {
  std::array<std::vector<Point>, 2> pts;
  std::array<EdgeList, 2> edges;  // index pairs into pts[side]
  std::array<std::vector<int>, 2> ids;  // labels; empty means 0..n-1
  std::optional<Line> sep;
  std::optional<Corners> corners;

  int label(int side, int i) const { return ids[side].empty() ? i : ids[side][i]; }
  void validate() const;
};

enum class Mode { Open, Closed, Strict };
const char* mode_name(Mode m);
Mode parse_mode(const std::string& s);

enum class ViolationKind { MissingWitness, ForbiddenWitness };

struct Violation {
  int side, u, v;
  ViolationKind kind;
  int witness;    // index on the other side, -1 if none
  double margin;  // best relative depth over all witnesses
  bool borderline;
};

struct Verdict {
  int side, u, v;
  double margin;
};

struct VerificationReport {
  Mode mode = Mode::Strict;
  Beta beta;
  std::vector<Violation> violations;
  std::vector<Verdict> borderline;  // all verdicts with |margin| <= tau
  bool ok() const { return violations.empty(); }
};

// Best witness of every pair on one side: best[u*n+v] is the maximum relative
// depth over the other side's points, arg[u*n+v] the point attaining it.
struct WitnessTable {
  int n = 0;
  std::vector<double> best;
  std::vector<int> arg;
  double at(int u, int v) const { return best[u * n + v]; }
};

WitnessTable witness_table_serial(const std::vector<Point>& side,
                                  const std::vector<Point>& other, Beta beta);
WitnessTable witness_table(const std::vector<Point>& side,
                           const std::vector<Point>& other, Beta beta);

std::array<EdgeList, 2> extract_mw_graphs_serial(const std::vector<Point>& p0,
                                                 const std::vector<Point>& p1,
                                                 Beta beta, bool closed,
                                                 double tau = kTau);
std::array<EdgeList, 2> extract_mw_graphs(const std::vector<Point>& p0,
                                          const std::vector<Point>& p1, Beta beta,
                                          bool closed, double tau = kTau);

VerificationReport verify(const DrawingPair& d, Beta beta, Mode mode,
                          double tau = kTau);

std::vector<Beta> default_beta_sample();
std::vector<VerificationReport> verify_universal(const DrawingPair& d,
                                                 const std::vector<Beta>& betas);

struct ParallelogramDrawingCheck {
  bool y_order = false;
  bool x_order = false;
  bool is_parallelogram = false;
  bool roots_at_a = false;
  bool b_adjacent_to_root = false;
  bool interior_in_strip = false;
  bool no_vertical_edge = false;
  bool all() const {
    return y_order && x_order && is_parallelogram && roots_at_a &&
           b_adjacent_to_root && interior_in_strip && no_vertical_edge;
  }
};

ParallelogramDrawingCheck check_parallelogram_drawing(const DrawingPair& d);

double strip_ratio(const Corners& c);
double strip_ratio(const DrawingPair& d);

// Largest max|coordinate| over smallest distance between any two vertices.
double dynamic_range(const DrawingPair& d);

}  // namespace mw
