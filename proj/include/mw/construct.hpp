#pragma once

#include <set>
#include <vector>

#include "mw/geometry.hpp"
#include "mw/proximity.hpp"
#include "mw/tree_model.hpp"

namespace mw {

// Star pair drawn on a winged parallelogram. On each side index 0 is the root
// and index 1+t is leaf v_{i,t}; leaf 0 sits at b_i.
struct WPDrawing {
  DrawingPair drawing;
  WingedParallelogram wp;
};

WPDrawing draw_star_pair(int k);

// keep0/keep1 are leaf numbers (0..k) of the input drawing.
WPDrawing redraw_pruned_stars(const WPDrawing& wp, const std::vector<int>& keep0,
                              const std::vector<int>& keep1);

struct LevelTrace {
  int root = -1;
  int children = 0;
  double x0 = 0, x1 = 0;          // L_0, L_1
  double y0 = 0, y1 = 0;          // root heights in the strip frame
  double z1 = 0, z2 = 0, z3 = 0;  // topmost points of I', I'', I'''
  double z_strip = 0;             // topmost child edge strip crossing on L_0
  double z_w1 = 0;                // pruning witness bound (0 if unused)
  double alpha = 0, gamma = 0, gamma_prime = 0;
  double elevation = 0;
  double dynamic_range = 0;
};

struct ConstructionTrace {
  std::vector<LevelTrace> levels;
  std::vector<double> perturbations;  // caterpillar spine repair, right to left
};

// Caterpillar pair; both sides use the tree's vertex ids as indices.
DrawingPair draw_caterpillar_pair(const CaterpillarDecomposition& cat,
                                  ConstructionTrace* trace = nullptr);

struct MovingBlock {
  std::vector<int> side[2];  // indices to translate
};

// Largest eps = base / 2^j (base = min vertex distance / 10) such that moving
// the block by eps*dir realises target (closed regions, beta = 1) and keeps
// every clear verdict clear.
double compute_safe_perturbation(const DrawingPair& d, const MovingBlock& block,
                                 Point dir, const std::array<EdgeList, 2>& target);

// Parallelogram drawing of two rooted isomorphic trees, valid for all beta.
// Side 0 indices are rt0's vertex ids, side 1 indices are rt1's.
DrawingPair draw_tree_pair(const RootedTree& rt0, const RootedTree& rt1,
                           ConstructionTrace* trace = nullptr);

DrawingPair lower_strip_ratio(const DrawingPair& pd, double eps);

// Drawing of <T, T \ L>. Side 0 indices are T's ids; side 1 is compacted and
// carries the surviving ids in ids[1].
DrawingPair draw_pruned_tree_pair(const RootedTree& rt, const std::set<int>& L,
                                  ConstructionTrace* trace = nullptr);

// Dynamic range above which constructions give up.
inline constexpr double kMaxDynamicRange = 1e12;

}  // namespace mw
