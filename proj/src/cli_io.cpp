#include "mw/cli_io.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <limits>
#include <map>
#include <sstream>

#include <nlohmann/json.hpp>

namespace mw {

using nlohmann::json;

namespace {

std::string num(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::string pt(Point p) { return "[" + num(p.x) + ", " + num(p.y) + "]"; }

[[noreturn]] void parse_fail(const std::string& where, const std::string& what) {
  throw Error(ErrorKind::ParseError, where + ": " + what);
}

json parse_text(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw Error(ErrorKind::ParseError, std::string("invalid JSON: ") + e.what());
  }
}

const json& field(const json& j, const std::string& key, const std::string& where) {
  if (!j.is_object() || !j.contains(key)) parse_fail(where, "missing field '" + key + "'");
  return j.at(key);
}

int get_int(const json& j, const std::string& where) {
  if (!j.is_number_integer()) parse_fail(where, "expected an integer");
  return j.get<int>();
}

double get_num(const json& j, const std::string& where) {
  if (!j.is_number()) parse_fail(where, "expected a number");
  return j.get<double>();
}

Point get_point(const json& j, const std::string& where) {
  if (!j.is_array() || j.size() != 2) parse_fail(where, "expected [x, y]");
  return {get_num(j[0], where + "[0]"), get_num(j[1], where + "[1]")};
}

void check_header(const json& j, const std::string& format) {
  if (!j.is_object()) parse_fail("document", "expected an object");
  const json& f = field(j, "format", "document");
  if (!f.is_string() || f.get<std::string>() != format)
    parse_fail("format", "expected \"" + format + "\"");
  if (get_int(field(j, "version", "document"), "version") != 1)
    parse_fail("version", "unsupported version");
}

}  // namespace

RootedTree TreeDocument::rooted() const {
  int r = root ? *root : tree_centers(tree).front();
  if (children) return make_rooted(tree, r, *children);
  return root_tree(tree, r);
}

std::string tree_to_json(const TreeDocument& doc) {
  json j;
  j["format"] = "mw-tree";
  j["version"] = 1;
  j["n"] = doc.tree.n;
  json e = json::array();
  for (auto [u, v] : doc.tree.edges()) e.push_back({u, v});
  j["edges"] = e;
  if (doc.root) j["root"] = *doc.root;
  if (doc.sparse_leaves) j["sparse_leaves"] = std::vector<int>(doc.sparse_leaves->begin(), doc.sparse_leaves->end());
  if (doc.children) j["children"] = *doc.children;
  return j.dump(1) + "\n";
}

TreeDocument tree_from_json(const std::string& text) {
  json j = parse_text(text);
  check_header(j, "mw-tree");
  int n = get_int(field(j, "n", "document"), "n");
  if (n < 1) parse_fail("n", "must be >= 1");
  const json& je = field(j, "edges", "document");
  if (!je.is_array()) parse_fail("edges", "expected an array");
  EdgeList edges;
  for (size_t i = 0; i < je.size(); ++i) {
    std::string w = "edges[" + std::to_string(i) + "]";
    if (!je[i].is_array() || je[i].size() != 2) parse_fail(w, "expected [u, v]");
    int u = get_int(je[i][0], w + "[0]"), v = get_int(je[i][1], w + "[1]");
    if (u < 0 || u >= n) parse_fail(w + "[0]", "vertex index " + std::to_string(u) + " out of range");
    if (v < 0 || v >= n) parse_fail(w + "[1]", "vertex index " + std::to_string(v) + " out of range");
    edges.emplace_back(u, v);
  }
  TreeDocument doc;
  try {
    doc.tree = make_tree(n, edges);
  } catch (const Error& e) {
    parse_fail("edges", e.what());
  }
  if (j.contains("root")) {
    int r = get_int(j["root"], "root");
    if (r < 0 || r >= n) parse_fail("root", "vertex index " + std::to_string(r) + " out of range");
    doc.root = r;
  }
  if (j.contains("sparse_leaves")) {
    const json& s = j["sparse_leaves"];
    if (!s.is_array()) parse_fail("sparse_leaves", "expected an array");
    std::set<int> L;
    for (size_t i = 0; i < s.size(); ++i) {
      std::string w = "sparse_leaves[" + std::to_string(i) + "]";
      int v = get_int(s[i], w);
      if (v < 0 || v >= n) parse_fail(w, "vertex index " + std::to_string(v) + " out of range");
      L.insert(v);
    }
    doc.sparse_leaves = L;
  }
  if (j.contains("children")) {
    const json& c = j["children"];
    if (!c.is_array() || static_cast<int>(c.size()) != n) parse_fail("children", "expected n lists");
    std::vector<std::vector<int>> ch(n);
    for (int v = 0; v < n; ++v) {
      std::string w = "children[" + std::to_string(v) + "]";
      if (!c[v].is_array()) parse_fail(w, "expected an array");
      for (size_t i = 0; i < c[v].size(); ++i) {
        int x = get_int(c[v][i], w + "[" + std::to_string(i) + "]");
        if (x < 0 || x >= n) parse_fail(w, "vertex index " + std::to_string(x) + " out of range");
        ch[v].push_back(x);
      }
    }
    doc.children = ch;
    try {
      (void)doc.rooted();
    } catch (const Error& e) {
      parse_fail("children", e.what());
    }
  }
  return doc;
}

std::string drawing_to_json(const DrawingPair& d, const ConstructionTrace* trace) {
  std::ostringstream o;
  o << "{\n  \"format\": \"mw-drawing\",\n  \"version\": 1,\n  \"sides\": [\n";
  for (int s = 0; s < 2; ++s) {
    o << "    {\n      \"vertices\": [";
    for (size_t i = 0; i < d.pts[s].size(); ++i) {
      o << (i ? ",\n" : "\n") << "        {\"id\": " << d.label(s, static_cast<int>(i))
        << ", \"x\": " << num(d.pts[s][i].x) << ", \"y\": " << num(d.pts[s][i].y) << "}";
    }
    o << (d.pts[s].empty() ? "" : "\n      ") << "],\n      \"edges\": [";
    for (size_t i = 0; i < d.edges[s].size(); ++i) {
      auto [u, v] = d.edges[s][i];
      o << (i ? ", " : "") << "[" << d.label(s, u) << ", " << d.label(s, v) << "]";
    }
    o << "]\n    }" << (s == 0 ? "," : "") << "\n";
  }
  o << "  ]";
  if (d.corners || d.sep || trace) {
    o << ",\n  \"annotations\": {";
    const char* sep = "\n";
    if (d.corners) {
      const Corners& c = *d.corners;
      auto lab = [&](int s, int i) { return i < 0 ? std::string("null") : std::to_string(d.label(s, i)); };
      o << sep << "    \"corners\": {\"a0\": " << pt(c.a0) << ", \"b0\": " << pt(c.b0)
        << ", \"a1\": " << pt(c.a1) << ", \"b1\": " << pt(c.b1) << ", \"root\": [" << lab(0, c.root[0])
        << ", " << lab(1, c.root[1]) << "], \"b\": [" << lab(0, c.bvert[0]) << ", "
        << lab(1, c.bvert[1]) << "]}";
      sep = ",\n";
    }
    if (d.sep) {
      o << sep << "    \"separating_line\": {\"point\": " << pt(d.sep->point)
        << ", \"dir\": " << pt(d.sep->dir) << "}";
      sep = ",\n";
    }
    if (trace) {
      o << sep << "    \"trace\": {\n      \"levels\": [";
      for (size_t i = 0; i < trace->levels.size(); ++i) {
        const LevelTrace& l = trace->levels[i];
        o << (i ? ",\n" : "\n") << "        {\"root\": " << l.root << ", \"children\": " << l.children
          << ", \"L0\": " << num(l.x0) << ", \"L1\": " << num(l.x1) << ", \"y0\": " << num(l.y0)
          << ", \"y1\": " << num(l.y1) << ", \"z1\": " << num(l.z1) << ", \"z2\": " << num(l.z2)
          << ", \"z3\": " << num(l.z3) << ", \"z_strip\": " << num(l.z_strip)
          << ", \"z_w1\": " << num(l.z_w1) << ", \"alpha\": " << num(l.alpha)
          << ", \"gamma\": " << num(l.gamma) << ", \"gamma_prime\": " << num(l.gamma_prime)
          << ", \"elevation\": " << num(l.elevation) << ", \"dynamic_range\": " << num(l.dynamic_range)
          << "}";
      }
      o << (trace->levels.empty() ? "" : "\n      ") << "],\n      \"perturbations\": [";
      for (size_t i = 0; i < trace->perturbations.size(); ++i)
        o << (i ? ", " : "") << num(trace->perturbations[i]);
      o << "]\n    }";
    }
    o << "\n  }";
  }
  o << "\n}\n";
  return o.str();
}

DrawingPair drawing_from_json(const std::string& text) {
  json j = parse_text(text);
  check_header(j, "mw-drawing");
  const json& sides = field(j, "sides", "document");
  if (!sides.is_array() || sides.size() != 2) parse_fail("sides", "expected two sides");
  DrawingPair d;
  std::map<int, int> index[2];
  for (int s = 0; s < 2; ++s) {
    std::string ws = "sides[" + std::to_string(s) + "]";
    const json& vs = field(sides[s], "vertices", ws);
    if (!vs.is_array()) parse_fail(ws + ".vertices", "expected an array");
    bool identity = true;
    std::vector<int> ids;
    for (size_t i = 0; i < vs.size(); ++i) {
      std::string w = ws + ".vertices[" + std::to_string(i) + "]";
      int id = get_int(field(vs[i], "id", w), w + ".id");
      double x = get_num(field(vs[i], "x", w), w + ".x");
      double y = get_num(field(vs[i], "y", w), w + ".y");
      if (!index[s].emplace(id, static_cast<int>(i)).second)
        parse_fail(w + ".id", "duplicate vertex id " + std::to_string(id));
      if (id != static_cast<int>(i)) identity = false;
      ids.push_back(id);
      d.pts[s].push_back({x, y});
    }
    if (!identity) d.ids[s] = ids;
    const json& es = field(sides[s], "edges", ws);
    if (!es.is_array()) parse_fail(ws + ".edges", "expected an array");
    for (size_t i = 0; i < es.size(); ++i) {
      std::string w = ws + ".edges[" + std::to_string(i) + "]";
      if (!es[i].is_array() || es[i].size() != 2) parse_fail(w, "expected [u, v]");
      int e[2];
      for (int k = 0; k < 2; ++k) {
        int id = get_int(es[i][k], w + "[" + std::to_string(k) + "]");
        auto it = index[s].find(id);
        if (it == index[s].end())
          parse_fail(w + "[" + std::to_string(k) + "]", "unknown vertex id " + std::to_string(id));
        e[k] = it->second;
      }
      d.edges[s].emplace_back(e[0], e[1]);
    }
  }
  if (j.contains("annotations")) {
    const json& a = j["annotations"];
    if (a.contains("corners")) {
      const json& c = a["corners"];
      std::string w = "annotations.corners";
      Corners k;
      k.a0 = get_point(field(c, "a0", w), w + ".a0");
      k.b0 = get_point(field(c, "b0", w), w + ".b0");
      k.a1 = get_point(field(c, "a1", w), w + ".a1");
      k.b1 = get_point(field(c, "b1", w), w + ".b1");
      for (const char* key : {"root", "b"}) {
        const json& r = field(c, key, w);
        if (!r.is_array() || r.size() != 2) parse_fail(w + "." + key, "expected two ids");
        for (int s = 0; s < 2; ++s) {
          int idx = -1;
          if (!r[s].is_null()) {
            int id = get_int(r[s], w + "." + key);
            auto it = index[s].find(id);
            if (it == index[s].end()) parse_fail(w + "." + key, "unknown vertex id " + std::to_string(id));
            idx = it->second;
          }
          (std::string(key) == "root" ? k.root : k.bvert)[s] = idx;
        }
      }
      d.corners = k;
    }
    if (a.contains("separating_line")) {
      const json& l = a["separating_line"];
      std::string w = "annotations.separating_line";
      d.sep = Line{get_point(field(l, "point", w), w + ".point"), get_point(field(l, "dir", w), w + ".dir")};
    }
  }
  try {
    d.validate();
  } catch (const Error& e) {
    parse_fail("sides", e.what());
  }
  return d;
}

std::string graphs_to_json(const DrawingPair& d, const std::array<EdgeList, 2>& g, Beta beta, bool closed) {
  std::ostringstream o;
  o << "{\n  \"format\": \"mw-graphs\",\n  \"version\": 1,\n  \"beta\": ";
  if (beta.infinite)
    o << "\"inf\"";
  else
    o << num(beta.value);
  o << ",\n  \"closure\": \"" << (closed ? "closed" : "open") << "\",\n  \"edges\": [\n";
  for (int s = 0; s < 2; ++s) {
    o << "    [";
    for (size_t i = 0; i < g[s].size(); ++i)
      o << (i ? ", " : "") << "[" << d.label(s, g[s][i].first) << ", " << d.label(s, g[s][i].second) << "]";
    o << "]" << (s == 0 ? "," : "") << "\n";
  }
  o << "  ]\n}\n";
  return o.str();
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::ParseError, "cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorKind::ParseError, "cannot write " + path);
  out << text;
}

DrawingPair relabel_side1(const DrawingPair& d, const std::vector<int>& map) {
  DrawingPair r = d;
  r.ids[1].clear();
  for (int i = 0; i < static_cast<int>(d.pts[1].size()); ++i) r.ids[1].push_back(map.at(d.label(1, i)));
  bool identity = true;
  for (int i = 0; i < static_cast<int>(r.ids[1].size()); ++i)
    if (r.ids[1][i] != i) identity = false;
  if (identity) r.ids[1].clear();
  return r;
}

namespace {

struct View {
  double minx, maxy, scale, pad;
  std::string x(double v) const { return num2(pad + (v - minx) * scale); }
  std::string y(double v) const { return num2(pad + (maxy - v) * scale); }
  std::string len(double v) const { return num2(v * scale); }
  static std::string num2(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.3f", v);
    return buf;
  }
};

void region_svg(std::ostringstream& o, const View& v, Point p, Point q, Beta beta, double reach,
                const char* cls) {
  if (beta.infinite) {
    Point n = (reach / dist(p, q)) * perp(q - p);
    Point c[4] = {p + n, q + n, q - 1.0 * n, p - 1.0 * n};
    o << "  <polygon class=\"" << cls << "\" points=\"";
    for (int i = 0; i < 4; ++i) o << (i ? " " : "") << v.x(c[i].x) << "," << v.y(c[i].y);
    o << "\"/>\n";
    return;
  }
  BetaDisks k = beta_disks(p, q, beta.value);
  if (beta.value == 1) {
    o << "  <circle class=\"" << cls << "\" cx=\"" << v.x(k.c1.x) << "\" cy=\"" << v.y(k.c1.y)
      << "\" r=\"" << v.len(k.radius) << "\"/>\n";
    return;
  }
  // lens of the two disks
  Point m = 0.5 * (k.c1 + k.c2);
  double half = dist(k.c1, k.c2) / 2;
  double h = std::sqrt(std::max(0.0, k.radius * k.radius - half * half));
  Point u = (h / dist(p, q)) * perp(q - p);
  Point a = m + u, b = m - 1.0 * u;
  o << "  <path class=\"" << cls << "\" d=\"M " << v.x(a.x) << " " << v.y(a.y) << " A " << v.len(k.radius)
    << " " << v.len(k.radius) << " 0 0 1 " << v.x(b.x) << " " << v.y(b.y) << " A " << v.len(k.radius)
    << " " << v.len(k.radius) << " 0 0 1 " << v.x(a.x) << " " << v.y(a.y) << " Z\"/>\n";
}

}  // namespace

std::string render_svg(const DrawingPair& d, const SvgOptions& opt) {
  d.validate();
  std::vector<Point> all = d.pts[0];
  all.insert(all.end(), d.pts[1].begin(), d.pts[1].end());
  double minx = 0, maxx = 1, miny = 0, maxy = 1;
  if (!all.empty()) {
    minx = maxx = all[0].x;
    miny = maxy = all[0].y;
    for (Point p : all) {
      minx = std::min(minx, p.x);
      maxx = std::max(maxx, p.x);
      miny = std::min(miny, p.y);
      maxy = std::max(maxy, p.y);
    }
  }
  double w = std::max(maxx - minx, 1e-9), h = std::max(maxy - miny, 1e-9);
  const double size = 800, pad = 20;
  View v{minx, maxy, size / std::max(w, h), pad};
  std::ostringstream o;
  o << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
    << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << View::num2(w * v.scale + 2 * pad)
    << "\" height=\"" << View::num2(h * v.scale + 2 * pad) << "\">\n"
    << "  <style>.e0{stroke:#1f4e9c;stroke-width:1.5}.e1{stroke:#b8332a;stroke-width:1.5}"
       ".v0{fill:#1f4e9c}.v1{fill:#b8332a}.r0{fill:#1f4e9c;fill-opacity:0.08;stroke:#1f4e9c;stroke-opacity:0.3}"
       ".r1{fill:#b8332a;fill-opacity:0.08;stroke:#b8332a;stroke-opacity:0.3}"
       ".sep{stroke:#444;stroke-dasharray:6 4}.outline{fill:none;stroke:#777;stroke-dasharray:2 3}</style>\n";
  if (opt.regions) {
    double reach = std::hypot(w, h) * 2;
    for (int s = 0; s < 2; ++s)
      for (auto [a, b] : d.edges[s])
        region_svg(o, v, d.pts[s][a], d.pts[s][b], *opt.regions, reach, s == 0 ? "r0" : "r1");
  }
  if (opt.outline && d.corners) {
    const Corners& c = *d.corners;
    o << "  <polygon class=\"outline\" points=\"";
    Point ps[4] = {c.a0, c.b0, c.a1, c.b1};
    for (int i = 0; i < 4; ++i) o << (i ? " " : "") << v.x(ps[i].x) << "," << v.y(ps[i].y);
    o << "\"/>\n";
  }
  if (opt.sep_line && d.sep) {
    Point u = (std::hypot(w, h) / norm(d.sep->dir)) * d.sep->dir;
    Point a = d.sep->point - u, b = d.sep->point + u;
    o << "  <line class=\"sep\" x1=\"" << v.x(a.x) << "\" y1=\"" << v.y(a.y) << "\" x2=\"" << v.x(b.x)
      << "\" y2=\"" << v.y(b.y) << "\"/>\n";
  }
  for (int s = 0; s < 2; ++s)
    for (auto [a, b] : d.edges[s])
      o << "  <line class=\"e" << s << "\" x1=\"" << v.x(d.pts[s][a].x) << "\" y1=\"" << v.y(d.pts[s][a].y)
        << "\" x2=\"" << v.x(d.pts[s][b].x) << "\" y2=\"" << v.y(d.pts[s][b].y) << "\"/>\n";
  for (int s = 0; s < 2; ++s)
    for (size_t i = 0; i < d.pts[s].size(); ++i)
      o << "  <circle class=\"v" << s << "\" cx=\"" << v.x(d.pts[s][i].x) << "\" cy=\"" << v.y(d.pts[s][i].y)
        << "\" r=\"3\"><title>" << s << ":" << d.label(s, static_cast<int>(i)) << "</title></circle>\n";
  o << "</svg>\n";
  return o.str();
}

}  // namespace mw
