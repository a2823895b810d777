#pragma once

#include <optional>
#include <set>
#include <string>
#include <vector>

#include "mw/construct.hpp"
#include "mw/proximity.hpp"
#include "mw/tree_model.hpp"

namespace mw {

struct TreeDocument {
  Tree tree;
  std::optional<int> root;
  std::optional<std::set<int>> sparse_leaves;
  std::optional<std::vector<std::vector<int>>> children;

  // Rooted at root (or a center) using the stored child order if present.
  RootedTree rooted() const;
};

std::string tree_to_json(const TreeDocument& doc);
TreeDocument tree_from_json(const std::string& text);

// Vertex arrays carry labels (DrawingPair::label); edges refer to labels.
std::string drawing_to_json(const DrawingPair& d, const ConstructionTrace* trace = nullptr);
DrawingPair drawing_from_json(const std::string& text);

std::string graphs_to_json(const DrawingPair& d, const std::array<EdgeList, 2>& g, Beta beta,
                           bool closed);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& text);

struct SvgOptions {
  std::optional<Beta> regions;  // overlay the region of every drawn edge
  bool sep_line = false;
  bool outline = false;  // parallelogram a0 b0 a1 b1
};

std::string render_svg(const DrawingPair& d, const SvgOptions& opt = {});

// Moves side 1 onto other labels: vertex v of side 1 becomes map[v].
DrawingPair relabel_side1(const DrawingPair& d, const std::vector<int>& map);

int cli_main(int argc, char** argv);

}  // namespace mw
