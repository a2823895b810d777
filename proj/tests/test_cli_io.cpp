#include <gtest/gtest.h>

#include <cstdio>
#include <functional>
#include <filesystem>

#include "mw/cli_io.hpp"

using namespace mw;

namespace {

ErrorKind kind_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  ADD_FAILURE() << "no error";
  return ErrorKind::DegenerateInput;
}

std::string what_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.what();
  }
  return "";
}

int run(std::vector<std::string> args) {
  args.insert(args.begin(), "mwdraw");
  std::vector<char*> argv;
  for (auto& a : args) argv.push_back(a.data());
  return cli_main(static_cast<int>(argv.size()), argv.data());
}

std::string tmp(const std::string& name) {
  auto dir = std::filesystem::temp_directory_path() / "mw_cli_io_test";
  std::filesystem::create_directories(dir);
  return (dir / name).string();
}

}  // namespace

TEST(TreeJson, RoundTrip) {
  CorollaryInstance ci = gen_corollary_family(2);
  TreeDocument doc{ci.tree.tree, ci.tree.root, ci.leaves, ci.tree.children};
  TreeDocument back = tree_from_json(tree_to_json(doc));
  EXPECT_EQ(back.tree.edges(), doc.tree.edges());
  EXPECT_EQ(back.root, doc.root);
  EXPECT_EQ(back.sparse_leaves, doc.sparse_leaves);
  EXPECT_EQ(back.children, doc.children);
  EXPECT_TRUE(is_sparse(back.rooted(), *back.sparse_leaves).ok);
}

TEST(TreeJson, BadIndex) {
  std::string doc = R"({"format":"mw-tree","version":1,"n":3,"edges":[[0,1],[1,7]]})";
  EXPECT_EQ(kind_of([&] { tree_from_json(doc); }), ErrorKind::ParseError);
  EXPECT_NE(what_of([&] { tree_from_json(doc); }).find("edges[1][1]"), std::string::npos);
}

TEST(TreeJson, Malformed) {
  EXPECT_EQ(kind_of([] { tree_from_json("{"); }), ErrorKind::ParseError);
  EXPECT_EQ(kind_of([] { tree_from_json(R"({"format":"other","version":1})"); }), ErrorKind::ParseError);
  EXPECT_EQ(kind_of([] { tree_from_json(R"({"format":"mw-tree","version":1,"n":3,"edges":[[0,1]]})"); }),
            ErrorKind::ParseError);
}

TEST(DrawingJson, RoundTrip) {
  RootedTree rt = root_tree(gen_random_tree(9, 4), 0);
  ConstructionTrace tr;
  DrawingPair d = draw_tree_pair(rt, rt, &tr);
  std::string text = drawing_to_json(d, &tr);
  DrawingPair e = drawing_from_json(text);
  EXPECT_EQ(e.pts, d.pts);
  EXPECT_EQ(e.edges, d.edges);
  ASSERT_TRUE(e.corners.has_value());
  EXPECT_EQ(e.corners->a0, d.corners->a0);
  EXPECT_EQ(e.corners->b1, d.corners->b1);
  EXPECT_EQ(e.corners->root[1], d.corners->root[1]);
  EXPECT_EQ(e.corners->bvert[0], d.corners->bvert[0]);
  ASSERT_EQ(e.sep.has_value(), d.sep.has_value());
  EXPECT_EQ(drawing_to_json(e, &tr), text);
}

TEST(DrawingJson, SeparatingLine) {
  DrawingPair d = draw_caterpillar_pair(caterpillar_decompose(gen_random_caterpillar(3, {1, 2, 1}, 5)));
  ASSERT_TRUE(d.sep.has_value());
  DrawingPair e = drawing_from_json(drawing_to_json(d));
  ASSERT_TRUE(e.sep.has_value());
  EXPECT_EQ(e.sep->point, d.sep->point);
  EXPECT_EQ(e.sep->dir, d.sep->dir);
}

TEST(DrawingJson, LabelsSurvive) {
  CorollaryInstance ci = gen_corollary_family(1);
  DrawingPair d = draw_pruned_tree_pair(ci.tree, ci.leaves);
  DrawingPair e = drawing_from_json(drawing_to_json(d));
  ASSERT_EQ(e.pts[1].size(), d.pts[1].size());
  for (int i = 0; i < static_cast<int>(d.pts[1].size()); ++i) EXPECT_EQ(e.label(1, i), d.label(1, i));
  EXPECT_EQ(e.edges[1], d.edges[1]);
  EXPECT_EQ(e.pts[1], d.pts[1]);
}

TEST(DrawingJson, UnknownEdgeId) {
  std::string doc = R"({"format":"mw-drawing","version":1,"sides":[
    {"vertices":[{"id":0,"x":0,"y":0},{"id":1,"x":1,"y":0}],"edges":[[0,9]]},
    {"vertices":[{"id":0,"x":0,"y":-1}],"edges":[]}]})";
  std::string w = what_of([&] { drawing_from_json(doc); });
  EXPECT_NE(w.find("sides[0].edges[0][1]"), std::string::npos) << w;
  EXPECT_NE(w.find("9"), std::string::npos);
}

TEST(GraphsJson, InfBeta) {
  DrawingPair d;
  d.pts[0] = {{0, 0}, {1, 0}};
  d.pts[1] = {{0, -1}};
  auto g = extract_mw_graphs(d.pts[0], d.pts[1], Beta::inf(), true);
  std::string s = graphs_to_json(d, g, Beta::inf(), true);
  EXPECT_NE(s.find("\"beta\": \"inf\""), std::string::npos);
}

TEST(Svg, Deterministic) {
  WPDrawing w = draw_star_pair(2);
  SvgOptions o;
  o.regions = Beta(1.0);
  o.sep_line = true;
  EXPECT_EQ(render_svg(w.drawing, o), render_svg(w.drawing, o));
}

TEST(Svg, PlainAndRegions) {
  WPDrawing w = draw_star_pair(2);
  std::string plain = render_svg(w.drawing);
  auto count = [](const std::string& s, const std::string& t) {
    size_t n = 0;
    for (size_t p = s.find(t); p != std::string::npos; p = s.find(t, p + 1)) ++n;
    return n;
  };
  EXPECT_EQ(count(plain, "class=\"r0\""), 0u);
  EXPECT_EQ(count(plain, "<circle class=\"v"), 8u);
  SvgOptions o;
  o.regions = Beta(1.0);
  std::string reg = render_svg(w.drawing, o);
  // one Gabriel disk per drawn edge of side 0
  EXPECT_EQ(count(reg, "<circle class=\"r0\""), w.drawing.edges[0].size());
}

TEST(Cli, CorollaryPipeline) {
  std::string t = tmp("c.json"), d = tmp("c.d.json");
  ASSERT_EQ(run({"gen", "--kind", "corollary", "--m", "1", "-o", t}), 0);
  ASSERT_EQ(run({"draw", "--mode", "pruned", "-i", t, "-o", d}), 0);
  EXPECT_EQ(run({"verify", "-i", d, "--beta", "1,2,inf", "--mode", "strict"}), 0);
}

TEST(Cli, CorruptedDrawing) {
  std::string t = tmp("p.json"), d = tmp("p.d.json");
  ASSERT_EQ(run({"gen", "--kind", "random", "--n", "8", "--seed", "2", "-o", t}), 0);
  ASSERT_EQ(run({"draw", "--mode", "tree", "-i", t, "-o", d}), 0);
  DrawingPair x = drawing_from_json(read_file(d));
  x.pts[1][0] = x.pts[0][0] + Point{1e-3, 0};
  write_file(d, drawing_to_json(x));
  EXPECT_EQ(run({"verify", "-i", d, "--beta", "1", "--mode", "strict"}), 1);
}

TEST(Cli, NotACaterpillar) {
  std::string t = tmp("spider.json");
  write_file(t, R"({"format":"mw-tree","version":1,"n":7,"edges":[[0,1],[1,2],[0,3],[3,4],[0,5],[5,6]]})");
  EXPECT_EQ(run({"draw", "--mode", "caterpillar", "-i", t, "-o", tmp("spider.d.json")}), 1);
}

TEST(Cli, Usage) {
  EXPECT_EQ(run({}), 2);
  EXPECT_EQ(run({"draw", "--mode", "nope", "-i", "x"}), 2);
}
