#include <algorithm>
#include <cstdio>
#include <iostream>
#include <random>
#include <sstream>

#include <CLI11.hpp>

#include "mw/cli_io.hpp"

namespace mw {

namespace {

std::vector<Beta> parse_betas(const std::string& list) {
  std::vector<Beta> out;
  std::stringstream ss(list);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(Beta::parse(item));
  if (out.empty()) throw Error(ErrorKind::ParseError, "empty beta list");
  return out;
}

void emit(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-")
    std::cout << text;
  else
    write_file(path, text);
}

TreeDocument gen_tree(const std::string& kind, int n, int m, std::uint64_t seed) {
  TreeDocument doc;
  if (kind == "random") {
    if (n < 1) throw Error(ErrorKind::InvalidSpec, "--n must be >= 1");
    doc.tree = gen_random_tree(n, seed);
    doc.root = tree_centers(doc.tree).front();
  } else if (kind == "caterpillar") {
    if (n < 1) throw Error(ErrorKind::InvalidSpec, "--n must be >= 1");
    std::mt19937_64 rng(seed);
    int spine = std::max(1, n / 3);
    std::vector<int> counts(spine, 0);
    for (int i = spine; i < n; ++i) counts[std::uniform_int_distribution<int>(0, spine - 1)(rng)]++;
    doc.tree = gen_random_caterpillar(spine, counts, seed);
  } else if (kind == "corollary") {
    if (m < 1) throw Error(ErrorKind::InvalidSpec, "--m must be >= 1");
    CorollaryInstance ci = gen_corollary_family(m);
    doc.tree = ci.tree.tree;
    doc.root = ci.tree.root;
    doc.sparse_leaves = ci.leaves;
    doc.children = ci.tree.children;
  } else {
    throw Error(ErrorKind::InvalidSpec, "unknown kind '" + kind + "'");
  }
  return doc;
}

DrawingPair draw_star_tree(const Tree& t) {
  if (t.n < 2) throw Error(ErrorKind::InvalidSpec, "a star needs at least two vertices");
  int centre = -1;
  for (int v = 0; v < t.n; ++v)
    if (t.degree(v) == t.n - 1) centre = v;
  if (centre < 0) throw Error(ErrorKind::InvalidSpec, "tree is not a star");
  WPDrawing w = draw_star_pair(t.n - 2);
  std::vector<int> ids{centre};
  for (int v = 0; v < t.n; ++v)
    if (v != centre) ids.push_back(v);
  w.drawing.ids = {ids, ids};
  return w.drawing;
}

int run_draw(const std::string& mode, const std::string& in, const std::string& in2, const std::string& out,
             bool with_trace) {
  TreeDocument doc = tree_from_json(read_file(in));
  std::optional<TreeDocument> doc2;
  if (!in2.empty()) doc2 = tree_from_json(read_file(in2));
  ConstructionTrace trace;
  DrawingPair d;
  if (mode == "star" || mode == "caterpillar") {
    d = mode == "star" ? draw_star_tree(doc.tree) : draw_caterpillar_pair(caterpillar_decompose(doc.tree), &trace);
    if (doc2) {
      IsoMap iso = isomorphism_map(doc.tree, doc2->tree, 0);
      d = relabel_side1(d, iso.map);
    }
  } else if (mode == "tree") {
    RootedTree rt0 = doc.rooted();
    RootedTree rt1 = rt0;
    if (doc2) {
      if (doc2->root) {
        rt1 = doc2->rooted();
      } else {
        IsoMap iso = isomorphism_map(doc.tree, doc2->tree, rt0.root);
        rt1 = root_tree(doc2->tree, iso.r1);
      }
    }
    d = draw_tree_pair(rt0, rt1, &trace);
  } else if (mode == "pruned") {
    if (!doc.sparse_leaves) throw Error(ErrorKind::InvalidLeafSet, "tree document has no sparse_leaves");
    d = draw_pruned_tree_pair(doc.rooted(), *doc.sparse_leaves, &trace);
  } else {
    throw Error(ErrorKind::InvalidSpec, "unknown draw mode '" + mode + "'");
  }
  emit(out, drawing_to_json(d, with_trace ? &trace : nullptr));
  return 0;
}

int run_verify(const std::string& in, const std::string& betas, const std::string& mode, double margin) {
  DrawingPair d = drawing_from_json(read_file(in));
  Mode md = parse_mode(mode);
  int bad = 0;
  for (Beta b : parse_betas(betas)) {
    VerificationReport r = verify(d, b, md, margin);
    std::printf("beta=%s mode=%s violations=%zu borderline=%zu\n", b.str().c_str(), mode_name(md),
                r.violations.size(), r.borderline.size());
    for (const Violation& v : r.violations) {
      std::printf("  side %d pair (%d,%d) %s witness=%s margin=%.17g%s\n", v.side, d.label(v.side, v.u),
                  d.label(v.side, v.v), v.kind == ViolationKind::MissingWitness ? "MissingWitness" : "ForbiddenWitness",
                  v.witness < 0 ? "none" : std::to_string(d.label(1 - v.side, v.witness)).c_str(), v.margin,
                  v.borderline ? " borderline" : "");
    }
    bad += static_cast<int>(r.violations.size());
  }
  return bad == 0 ? 0 : 1;
}

}  // namespace

int cli_main(int argc, char** argv) {
  CLI::App app{"Mutual-witness proximity drawings of tree pairs", "mwdraw"};
  app.require_subcommand(1);

  std::string kind = "random", out, in, in2, mode, betas = "1,1.5,2,5,10,inf", closure = "closed", beta = "1";
  int n = 10, m = 1;
  std::uint64_t seed = 1;
  bool trace = false, sep_line = false, outline = false;
  double margin = kTau;
  std::string regions;

  auto* gen = app.add_subcommand("gen", "generate a tree document");
  gen->add_option("--kind", kind)->check(CLI::IsMember({"random", "caterpillar", "corollary"}));
  gen->add_option("--n", n);
  gen->add_option("--m", m);
  gen->add_option("--seed", seed);
  gen->add_option("-o,--out", out);

  auto* draw = app.add_subcommand("draw", "construct a drawing pair");
  draw->add_option("--mode", mode)->required()->check(CLI::IsMember({"star", "caterpillar", "tree", "pruned"}));
  draw->add_option("-i,--in", in)->required();
  draw->add_option("--i2,-j", in2, "second tree; side 1 uses its labels");
  draw->add_option("-o,--out", out);
  draw->add_flag("--trace", trace);

  auto* ver = app.add_subcommand("verify", "check a drawing pair");
  ver->add_option("-i,--in", in)->required();
  ver->add_option("--beta", betas);
  ver->add_option("--mode", mode)->check(CLI::IsMember({"open", "closed", "strict"}));
  ver->add_option("--margin", margin);

  auto* ext = app.add_subcommand("extract", "compute the mutual-witness graphs of a point pair");
  ext->add_option("-i,--in", in)->required();
  ext->add_option("--beta", beta);
  ext->add_option("--closure", closure)->check(CLI::IsMember({"open", "closed"}));
  ext->add_option("-o,--out", out);

  auto* svg = app.add_subcommand("svg", "render a drawing pair");
  svg->add_option("-i,--in", in)->required();
  svg->add_option("-o,--out", out);
  svg->add_option("--regions", regions);
  svg->add_flag("--sep-line", sep_line);
  svg->add_flag("--outline", outline);

  // CLI11 only accepts single-dash short names, so map -i2 by hand
  std::vector<std::string> args;
  for (int i = argc - 1; i >= 1; --i) args.push_back(std::string(argv[i]) == "-i2" ? "--i2" : argv[i]);
  try {
    app.parse(args);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  try {
    if (*gen) {
      emit(out, tree_to_json(gen_tree(kind, n, m, seed)));
      return 0;
    }
    if (*draw) return run_draw(mode, in, in2, out, trace);
    if (*ver) return run_verify(in, betas, mode.empty() ? "strict" : mode, margin);
    if (*ext) {
      DrawingPair d = drawing_from_json(read_file(in));
      Beta b = Beta::parse(beta);
      auto g = extract_mw_graphs(d.pts[0], d.pts[1], b, closure == "closed");
      emit(out, graphs_to_json(d, g, b, closure == "closed"));
      return 0;
    }
    if (*svg) {
      DrawingPair d = drawing_from_json(read_file(in));
      SvgOptions opt;
      if (!regions.empty()) opt.regions = Beta::parse(regions);
      opt.sep_line = sep_line;
      opt.outline = outline;
      emit(out, render_svg(d, opt));
      return 0;
    }
  } catch (const Error& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 1;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 1;
  }
  return 2;
}

}  // namespace mw
