#include "weave/tessellation.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numeric>
#include <optional>
#include <set>
#include <sstream>

#include "weave/errors.hpp"

namespace weave {
namespace {

std::size_t at(int i) { return static_cast<std::size_t>(i); }

constexpr double kPi = 3.14159265358979323846;

Vec2 to_cartesian(const std::array<Vec2, 2>& basis, double x, double y) {
  return {x * basis[0][0] + y * basis[1][0], x * basis[0][1] + y * basis[1][1]};
}

double angle_of(Vec2 v) { return std::atan2(v[1], v[0]); }

struct PrimitiveCell {
  std::array<Vec2, 2> basis;
  std::vector<Vec2> vertices;
  std::vector<TilingEdge> edges;
};

std::optional<PrimitiveCell> primitive_cell(const std::vector<int>& sym) {
  const double h = std::sqrt(3.0) / 2.0;
  const std::array<Vec2, 2> square{{{1, 0}, {0, 1}}};
  const std::array<Vec2, 2> hex{{{1, 0}, {0.5, h}}};
  if (sym == std::vector<int>{4, 4, 4, 4}) {
    return PrimitiveCell{square, {{0, 0}}, {{0, 0, {1, 0}}, {0, 0, {0, 1}}}};
  }
  if (sym == std::vector<int>{3, 3, 3, 3, 3, 3}) {
    return PrimitiveCell{hex, {{0, 0}}, {{0, 0, {1, 0}}, {0, 0, {0, 1}}, {0, 0, {-1, 1}}}};
  }
  if (sym == std::vector<int>{6, 6, 6}) {
    const double t = 1.0 / 3.0;
    return PrimitiveCell{hex, {{0, 0}, {t, t}}, {{0, 1, {0, 0}}, {0, 1, {-1, 0}}, {0, 1, {0, -1}}}};
  }
  if (sym == std::vector<int>{3, 6, 3, 6}) {
    // u, v, w are the edge midpoints of the triangular lattice
    return PrimitiveCell{hex,
                         {{0.5, 0}, {0, 0.5}, {0.5, 0.5}},
                         {{0, 2, {0, 0}},
                          {2, 1, {0, 0}},
                          {1, 0, {0, 0}},
                          {2, 1, {1, 0}},
                          {2, 0, {0, 1}},
                          {1, 0, {-1, 1}}}};
  }
  return std::nullopt;
}

int floor_div(int a, int b) { return a >= 0 ? a / b : -((-a + b - 1) / b); }
int floor_mod(int a, int b) { return a - floor_div(a, b) * b; }

// Direction of edge e leaving its end `end` (0 at u, 1 at v), in the plane.
Vec2 edge_direction(const PeriodicTiling& t, const TilingEdge& e, int end) {
  const double dx = t.vertices[at(e.v)][0] + e.wrap[0] * t.scale - t.vertices[at(e.u)][0];
  const double dy = t.vertices[at(e.v)][1] + e.wrap[1] * t.scale - t.vertices[at(e.u)][1];
  const Vec2 v = to_cartesian(t.basis, dx, dy);
  return end == 0 ? v : Vec2{-v[0], -v[1]};
}

struct HalfEdge {
  int edge;
  int end;
  double angle;
};

// Incident half-edges of every vertex in counterclockwise order.
std::vector<std::vector<HalfEdge>> rotation_system(const PeriodicTiling& t) {
  std::vector<std::vector<HalfEdge>> rot(t.vertices.size());
  for (std::size_t e = 0; e < t.edges.size(); ++e) {
    for (int end = 0; end < 2; ++end) {
      const int vtx = end == 0 ? t.edges[e].u : t.edges[e].v;
      rot[at(vtx)].push_back({static_cast<int>(e), end, angle_of(edge_direction(t, t.edges[e], end))});
    }
  }
  for (auto& r : rot) {
    std::sort(r.begin(), r.end(), [](const HalfEdge& a, const HalfEdge& b) { return a.angle < b.angle; });
  }
  return rot;
}

int count_faces(const PeriodicTiling& t) {
  const auto rot = rotation_system(t);
  // position of half-edge (edge, end) in its rotation
  std::map<std::pair<int, int>, std::pair<int, int>> where;
  for (std::size_t v = 0; v < rot.size(); ++v)
    for (std::size_t k = 0; k < rot[v].size(); ++k)
      where[{rot[v][k].edge, rot[v][k].end}] = {static_cast<int>(v), static_cast<int>(k)};
  std::set<std::pair<int, int>> seen;
  int faces = 0;
  for (const auto& [start, _] : where) {
    if (seen.count(start)) continue;
    ++faces;
    auto h = start;
    while (!seen.count(h)) {
      seen.insert(h);
      const auto [v, k] = where[{h.first, 1 - h.second}];
      const auto& r = rot[at(v)];
      const auto& next = r[(at(k) + 1) % r.size()];
      h = {next.edge, next.end};
    }
  }
  return faces;
}

}  // namespace

std::string VertexSymbol::to_string() const {
  std::string s = "(";
  for (std::size_t i = 0; i < faces.size(); ++i) s += (i ? "," : "") + std::to_string(faces[i]);
  return s + ")";
}

VertexSymbol parse_vertex_symbol(std::string_view text, bool require_euclidean) {
  std::string s;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) s += c;
  if (s.size() < 2 || s.front() != '(' || s.back() != ')') {
    throw SyntaxError("vertex symbol must look like (k1,k2,...): '" + std::string(text) + "'");
  }
  std::vector<int> ks;
  std::stringstream in(s.substr(1, s.size() - 2));
  std::string item;
  while (std::getline(in, item, ',')) {
    if (item.empty() || item.size() > 6 ||
        !std::all_of(item.begin(), item.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); })) {
      throw SyntaxError("bad entry '" + item + "' in vertex symbol");
    }
    const int k = std::stoi(item);
    if (k < 3) throw SyntaxError("polygon sizes must be >= 3, got " + item);
    ks.push_back(k);
  }
  if (ks.size() < 3) throw SyntaxError("a vertex needs at least 3 polygons");

  VertexSymbol sym;
  const std::size_t n = ks.size();
  for (int dir = 0; dir < 2; ++dir) {
    for (std::size_t r = 0; r < n; ++r) {
      std::vector<int> cand(n);
      for (std::size_t i = 0; i < n; ++i) cand[i] = dir == 0 ? ks[(r + i) % n] : ks[(r + n - i) % n];
      if (sym.faces.empty() || cand < sym.faces) sym.faces = cand;
    }
  }
  // sum (k-2)/k == 2, exactly
  std::int64_t l = 1;
  for (int k : ks) l = std::lcm(l, static_cast<std::int64_t>(k));
  std::int64_t num = 0;
  for (int k : ks) num += (k - 2) * (l / k);
  sym.euclidean = num == 2 * l;
  if (require_euclidean && !sym.euclidean) {
    throw InfeasibleSymbol(sym.to_string() + " does not tile the Euclidean plane");
  }
  return sym;
}

PeriodicTiling build_tiling(const VertexSymbol& sym, int scale) {
  if (scale < 1) throw WeaveError("scale must be >= 1");
  const auto cell = primitive_cell(sym.faces);
  if (!cell) throw UnsupportedTiling("no periodic construction for " + sym.to_string());
  PeriodicTiling t;
  t.symbol = sym;
  t.scale = scale;
  t.basis = cell->basis;
  const int nv = static_cast<int>(cell->vertices.size());
  auto index = [&](int cx, int cy, int i) { return (cy * scale + cx) * nv + i; };
  for (int cy = 0; cy < scale; ++cy)
    for (int cx = 0; cx < scale; ++cx)
      for (const auto& p : cell->vertices) t.vertices.push_back({p[0] + cx, p[1] + cy});
  for (int cy = 0; cy < scale; ++cy) {
    for (int cx = 0; cx < scale; ++cx) {
      for (const auto& e : cell->edges) {
        const int tx = cx + e.wrap[0], ty = cy + e.wrap[1];
        t.edges.push_back({index(cx, cy, e.u), index(floor_mod(tx, scale), floor_mod(ty, scale), e.v),
                           {floor_div(tx, scale), floor_div(ty, scale)}});
      }
    }
  }
  t.face_count = count_faces(t);
  return t;
}

TransformSpec parse_method(std::string_view text, int m) {
  TransformSpec spec;
  std::size_t i = 0;
  int n = 0;
  while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) n = n * 10 + (text[i++] - '0');
  std::string_view rest = text.substr(i);
  const bool prefixed = i > 0 || (!rest.empty() && rest[0] == 'n');
  if (!rest.empty() && rest[0] == 'n' && i == 0) rest.remove_prefix(1);
  if (rest == "Cr") {
    spec.method = prefixed ? Method::nCr : Method::Cr;
  } else if (rest == "Br" && prefixed) {
    spec.method = Method::nBr;
  } else {
    throw SyntaxError("method must be Cr, nCr or nBr (optionally with a number for n): '" + std::string(text) + "'");
  }
  if (m < 0) throw SyntaxError("twist count must be >= 0");
  if (spec.method == Method::Cr && m != 1) throw SyntaxError("Cr requires m = 1");
  spec.m = m;
  spec.valency = n;
  return spec;
}

Classification classify(const SurfaceDiagram& d) {
  const auto ts = threads(d);
  int zero = 0;
  for (const auto& t : ts) zero += is_zero(t.homology) ? 1 : 0;
  if (!ts.empty() && zero == static_cast<int>(ts.size())) return Classification::Polycatenane;
  if (zero == 0 && thread_sets(d, ts).size() >= 2) return Classification::Weave;
  return Classification::Mixed;
}

std::string to_string(Classification c) {
  switch (c) {
    case Classification::Weave:
      return "Weave";
    case Classification::Polycatenane:
      return "Polycatenane";
    case Classification::Mixed:
      break;
  }
  return "Mixed";
}

namespace {

// Strand pieces joined at ports; crossings own four slot nodes each.
class Assembly {
 public:
  int new_crossing() {
    const int c = crossings_++;
    for (int s = 0; s < 4; ++s) dart_node_.push_back(new_node());
    return c;
  }
  int new_port() { return new_node(); }
  int dart(int c, int s) const { return dart_node_[at(c * 4 + s)]; }

  void link(int a, int b, BoundaryWord w = {}) {
    const int id = static_cast<int>(links_.size());
    links_.push_back({a, b, std::move(w)});
    node_links_[at(a)].push_back(id);
    node_links_[at(b)].push_back(id);
  }

  SurfaceDiagram finish(int genus) const {
    std::vector<int> node_dart(node_links_.size(), -1);
    for (std::size_t i = 0; i < dart_node_.size(); ++i) node_dart[at(dart_node_[i])] = static_cast<int>(i);
    for (std::size_t n = 0; n < node_links_.size(); ++n) {
      const std::size_t want = node_dart[n] >= 0 ? 1 : 2;
      if (node_links_[n].size() != want) throw WeaveError("internal: block gluing left a dangling port");
    }
    std::vector<char> used(links_.size(), 0);
    // Walks from `node` along link `id` until reaching a slot; returns the slot node.
    auto walk = [&](int node, int id, BoundaryWord& w) {
      while (true) {
        used[at(id)] = 1;
        const auto& l = links_[at(id)];
        const bool forward = l.a == node;
        w *= forward ? l.w : l.w.inverse();
        node = forward ? l.b : l.a;
        if (node_dart[at(node)] >= 0) return node;
        const auto& ls = node_links_[at(node)];
        id = ls[0] == id ? ls[1] : ls[0];
      }
    };
    std::vector<Edge> edges;
    for (std::size_t i = 0; i < dart_node_.size(); ++i) {
      const int node = dart_node_[i];
      const int id = node_links_[at(node)][0];
      if (used[at(id)]) continue;
      Edge e;
      const int end = walk(node, id, e.word);
      e.ends = {Dart::from_index(static_cast<int>(i)), Dart::from_index(node_dart[at(end)])};
      edges.push_back(std::move(e));
    }
    std::vector<FreeLoop> loops;
    for (std::size_t id = 0; id < links_.size(); ++id) {
      if (used[id]) continue;
      FreeLoop loop;
      const int start = links_[id].a;
      int node = start, cur = static_cast<int>(id);
      do {
        used[at(cur)] = 1;
        const auto& l = links_[at(cur)];
        const bool forward = l.a == node;
        loop.word *= forward ? l.w : l.w.inverse();
        node = forward ? l.b : l.a;
        const auto& ls = node_links_[at(node)];
        cur = ls[0] == cur ? ls[1] : ls[0];
      } while (node != start);
      loops.push_back(std::move(loop));
    }
    std::vector<Crossing> cs(at(crossings_));
    return label_threads(SurfaceDiagram(genus, std::move(cs), std::move(edges), std::move(loops)));
  }

 private:
  struct Link {
    int a;
    int b;
    BoundaryWord w;
  };
  int new_node() {
    node_links_.emplace_back();
    return static_cast<int>(node_links_.size() - 1);
  }
  int crossings_ = 0;
  std::vector<int> dart_node_;
  std::vector<std::vector<int>> node_links_;
  std::vector<Link> links_;
};

struct Chord {
  double from_angle;
  double to_angle;
  int from_node;
  int to_node;
};

// Straight chords of the unit disc; every transverse pair of chords becomes a crossing.
void glue_chords(Assembly& as, const std::vector<Chord>& chords) {
  struct Hit {
    double t;
    int crossing;
    int slot_back;  // toward the chord's start
    int slot_fwd;
  };
  auto point = [](double a) { return Vec2{std::cos(a), std::sin(a)}; };
  std::vector<std::vector<Hit>> hits(chords.size());
  for (std::size_t i = 0; i < chords.size(); ++i) {
    for (std::size_t j = i + 1; j < chords.size(); ++j) {
      const Vec2 p = point(chords[i].from_angle), q = point(chords[i].to_angle);
      const Vec2 r = point(chords[j].from_angle), s = point(chords[j].to_angle);
      const Vec2 d1{q[0] - p[0], q[1] - p[1]}, d2{s[0] - r[0], s[1] - r[1]};
      const double den = d1[0] * d2[1] - d1[1] * d2[0];
      if (std::abs(den) < 1e-12) continue;
      const double t = ((r[0] - p[0]) * d2[1] - (r[1] - p[1]) * d2[0]) / den;
      const double u = ((r[0] - p[0]) * d1[1] - (r[1] - p[1]) * d1[0]) / den;
      if (t <= 1e-9 || t >= 1 - 1e-9 || u <= 1e-9 || u >= 1 - 1e-9) continue;
      // the four outgoing directions, sorted counterclockwise, become slots 0..3
      std::array<std::pair<double, int>, 4> dirs{{{angle_of(d1), 0},
                                                  {angle_of({-d1[0], -d1[1]}), 1},
                                                  {angle_of(d2), 2},
                                                  {angle_of({-d2[0], -d2[1]}), 3}}};
      std::sort(dirs.begin(), dirs.end());
      std::array<int, 4> slot{};
      for (int k = 0; k < 4; ++k) slot[at(dirs[at(k)].second)] = k;
      const int c = as.new_crossing();
      hits[i].push_back({t, c, slot[1], slot[0]});
      hits[j].push_back({u, c, slot[3], slot[2]});
    }
  }
  for (std::size_t i = 0; i < chords.size(); ++i) {
    auto& h = hits[i];
    std::sort(h.begin(), h.end(), [](const Hit& a, const Hit& b) { return a.t < b.t; });
    int prev = chords[i].from_node;
    for (const auto& x : h) {
      as.link(prev, as.dart(x.crossing, x.slot_back));
      prev = as.dart(x.crossing, x.slot_fwd);
    }
    as.link(prev, chords[i].to_node);
  }
}

}  // namespace

SurfaceDiagram transform(const PeriodicTiling& t, const TransformSpec& spec) {
  const auto rot = rotation_system(t);
  const int valency = static_cast<int>(t.symbol.faces.size());
  if (spec.valency != 0 && spec.valency != valency) {
    throw SyntaxError("method expects valency " + std::to_string(spec.valency) + " but " + t.symbol.to_string() +
                      " has valency " + std::to_string(valency));
  }
  if (spec.method == Method::Cr && valency % 2 != 0) {
    throw OddValencyForCr(t.symbol.to_string() + " has odd valency " + std::to_string(valency));
  }
  Assembly as;
  const double delta = 0.2;
  // ports[(edge, end)] = {port on the clockwise side, port on the counterclockwise side}
  std::map<std::pair<int, int>, std::array<int, 2>> ports;
  for (const auto& r : rot) {
    const int n = static_cast<int>(r.size());
    std::vector<Chord> chords;
    if (spec.method == Method::Cr) {
      std::vector<int> node(at(n));
      std::vector<double> ang(at(n));
      for (int i = 0; i < n; ++i) {
        node[at(i)] = as.new_port();
        // small distinct offsets keep the diameters from meeting in one point
        ang[at(i)] = r[at(i)].angle + 0.01 * (i + 1) * (i + 1);
        ports[{r[at(i)].edge, r[at(i)].end}] = {node[at(i)], node[at(i)]};
      }
      for (int i = 0; i < n / 2; ++i) chords.push_back({ang[at(i)], ang[at(i + n / 2)], node[at(i)], node[at(i + n / 2)]});
    } else {
      std::vector<std::array<int, 2>> node(at(n));
      for (int i = 0; i < n; ++i) {
        node[at(i)] = {as.new_port(), as.new_port()};
        ports[{r[at(i)].edge, r[at(i)].end}] = node[at(i)];
      }
      for (int i = 0; i < n; ++i) {
        const int k = (i + 1) % n;
        if (spec.method == Method::nCr) {
          chords.push_back({r[at(i)].angle - delta, r[at(k)].angle + delta, node[at(i)][0], node[at(k)][1]});
        } else {
          chords.push_back({r[at(i)].angle + delta, r[at(k)].angle - delta, node[at(i)][1], node[at(k)][0]});
        }
      }
    }
    glue_chords(as, chords);
  }
  for (std::size_t e = 0; e < t.edges.size(); ++e) {
    const auto& te = t.edges[e];
    const BoundaryWord w = BoundaryWord::power(1, te.wrap[0]) * BoundaryWord::power(2, te.wrap[1]);
    const auto pu = ports.at({static_cast<int>(e), 0});
    const auto pv = ports.at({static_cast<int>(e), 1});
    if (spec.method == Method::Cr) {
      as.link(pu[0], pv[0], w);
      continue;
    }
    // Left of u -> v is counterclockwise at u and clockwise at v.
    const int top_u = pu[1], bottom_u = pu[0], top_v = pv[0], bottom_v = pv[1];
    if (spec.m == 0) {
      as.link(top_u, top_v, w);
      as.link(bottom_u, bottom_v, w);
      continue;
    }
    // Twist region: slots NE=0, NW=1, SW=2, SE=3 with u -> v pointing east.
    int prev = -1;
    for (int k = 0; k < spec.m; ++k) {
      const int c = as.new_crossing();
      if (k == 0) {
        as.link(top_u, as.dart(c, 1));
        as.link(bottom_u, as.dart(c, 2));
      } else {
        as.link(as.dart(prev, 0), as.dart(c, 1));
        as.link(as.dart(prev, 3), as.dart(c, 2));
      }
      prev = c;
    }
    as.link(as.dart(prev, 0), top_v, w);
    as.link(as.dart(prev, 3), bottom_v, w);
  }
  return as.finish(1);
}

std::pair<int, int> CrossingSequenceSpec::get(int i, int j) const {
  if (i > j) {
    const auto [p, q] = get(j, i);
    return {q, p};
  }
  const auto it = pairs.find({i, j});
  return it == pairs.end() ? std::pair{1, 1} : it->second;
}

CrossingSequenceSpec parse_sequence(std::string_view text) {
  CrossingSequenceSpec spec;
  std::string s;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) s += c;
  if (s == "alt") {
    spec.alternate_all = true;
    return spec;
  }
  std::stringstream in(s);
  std::string item;
  while (std::getline(in, item, ';')) {
    if (item.empty()) continue;
    int i = 0, j = 0, p = 0, q = 0;
    char c1 = 0, c2 = 0, c3 = 0;
    std::istringstream is(item);
    if (!(is >> i >> c1 >> j >> c2 >> p >> c3 >> q) || c1 != ',' || c2 != ':' || c3 != ',' || is.peek() != EOF) {
      throw SyntaxError("crossing sequence entries look like i,j:p,q; got '" + item + "'");
    }
    if (i < 1 || j < 1 || i == j || p < 1 || q < 1) {
      throw SyntaxError("crossing sequence needs distinct sets >= 1 and p, q >= 1: '" + item + "'");
    }
    if (i > j) {
      std::swap(i, j);
      std::swap(p, q);
    }
    spec.pairs[{i, j}] = {p, q};
  }
  return spec;
}

namespace {

// Union-find over crossings with parity: value(a) xor value(b) = parity.
class ParityUnionFind {
 public:
  explicit ParityUnionFind(int n) : parent_(at(n)), parity_(at(n), 0) {
    std::iota(parent_.begin(), parent_.end(), 0);
  }
  std::pair<int, int> find(int x) {
    int p = 0;
    int r = x;
    while (parent_[at(r)] != r) {
      p ^= parity_[at(r)];
      r = parent_[at(r)];
    }
    // path compression
    int acc = p;
    while (parent_[at(x)] != x) {
      const int next = parent_[at(x)];
      const int px = parity_[at(x)];
      parent_[at(x)] = r;
      parity_[at(x)] = acc;
      acc ^= px;
      x = next;
    }
    return {r, p};
  }
  bool unite(int a, int b, int parity) {
    const auto [ra, pa] = find(a);
    const auto [rb, pb] = find(b);
    if (ra == rb) return (pa ^ pb) == parity;
    parent_[at(rb)] = ra;
    parity_[at(rb)] = pa ^ pb ^ parity;
    return true;
  }
  int value(int x) { return find(x).second; }

 private:
  std::vector<int> parent_;
  std::vector<int> parity_;
};

struct Visit {
  int crossing;
  int axis;  // 0: strand on slots 0-2, 1: on slots 1-3
};

// over(visit) = x[c] xor axis; consecutive visits must differ.
bool alternate(ParityUnionFind& uf, const std::vector<Visit>& seq) {
  const std::size_t n = seq.size();
  for (std::size_t k = 0; k < n; ++k) {
    const auto& a = seq[k];
    const auto& b = seq[(k + 1) % n];
    if (!uf.unite(a.crossing, b.crossing, 1 ^ a.axis ^ b.axis)) return false;
  }
  return true;
}

}  // namespace

SurfaceDiagram assign_weaving_map(const SurfaceDiagram& d, const CrossingSequenceSpec& seq) {
  const auto ts = threads(d);
  const auto sets = thread_sets(d, ts);
  const auto owner = dart_threads(d, ts);
  std::vector<int> set_of(ts.size());
  for (std::size_t s = 0; s < sets.size(); ++s)
    for (int t : sets[s].threads) set_of[at(t)] = static_cast<int>(s);
  const int n = d.crossing_count();
  for (int c = 0; c < n; ++c) {
    if (set_of[at(owner[at(c * 4)])] == set_of[at(owner[at(c * 4 + 1)])]) {
      throw MixedSetCrossing("crossing c" + std::to_string(c) + " joins two threads of the same set");
    }
  }
  // visits of each thread, split by the set of the other strand
  auto other_set = [&](Dart entry) { return set_of[at(owner[at(entry.turned(1).index())])]; };
  auto visits = [&](const Thread& t, int only_set) {
    std::vector<Visit> out;
    for (const Dart& e : t.route)
      if (only_set < 0 || other_set(e) == only_set) out.push_back({e.crossing, e.slot & 1});
    return out;
  };
  std::vector<int> x(at(n), 0);  // 1 when the 0-2 strand is over

  auto solve_parity = [&](bool global, bool pairs) -> bool {
    ParityUnionFind uf(n);
    for (const auto& t : ts) {
      if (t.route.empty()) continue;
      if (global && !alternate(uf, visits(t, -1))) return false;
      if (pairs) {
        for (std::size_t s = 0; s < sets.size(); ++s) {
          const auto v = visits(t, static_cast<int>(s));
          if (!v.empty() && !alternate(uf, v)) return false;
        }
      }
    }
    for (int c = 0; c < n; ++c) x[at(c)] = uf.value(c);
    return true;
  };

  bool all_unit = true;
  for (std::size_t i = 0; i < sets.size(); ++i)
    for (std::size_t j = i + 1; j < sets.size(); ++j)
      if (seq.get(static_cast<int>(i + 1), static_cast<int>(j + 1)) != std::pair{1, 1}) all_unit = false;

  if (seq.alternate_all) {
    if (!solve_parity(true, false)) throw InconsistentSequence("threads cannot alternate on this cell");
  } else if (all_unit) {
    if (!solve_parity(true, true) && !solve_parity(false, true)) {
      throw InconsistentSequence("(1,1) pattern does not close up on this cell");
    }
  } else {
    for (std::size_t si = 0; si < sets.size(); ++si) {
      for (std::size_t sj = si + 1; sj < sets.size(); ++sj) {
        const auto [p, q] = seq.get(static_cast<int>(si + 1), static_cast<int>(sj + 1));
        const int period = p + q;
        // thread -> visits against the other set of the pair
        std::map<int, std::vector<Visit>> seqs;
        std::map<int, std::vector<std::pair<int, int>>> pos;  // crossing -> (thread, position)
        for (const auto& t : ts) {
          const int s = set_of[at(t.id)];
          if (s != static_cast<int>(si) && s != static_cast<int>(sj)) continue;
          auto v = visits(t, s == static_cast<int>(si) ? static_cast<int>(sj) : static_cast<int>(si));
          if (v.empty()) continue;
          if (static_cast<int>(v.size()) % period != 0) {
            throw InconsistentSequence("pattern (" + std::to_string(p) + "," + std::to_string(q) +
                                       ") does not divide a thread with " + std::to_string(v.size()) +
                                       " crossings between sets " + std::to_string(si + 1) + " and " +
                                       std::to_string(sj + 1));
          }
          for (std::size_t k = 0; k < v.size(); ++k) pos[v[k].crossing].push_back({t.id, static_cast<int>(k)});
          seqs[t.id] = std::move(v);
        }
        // over for the set-si strand at a crossing, given thread offsets
        std::map<int, int> offset;
        auto over_first = [&](int t, int k, bool first_set) {
          const int r = (k + offset.at(t)) % period;
          return first_set ? r < p : !(r < q);
        };
        auto consistent = [&](int t) {
          for (const auto& v : seqs[t]) {
            const auto& pr = pos[v.crossing];
            const auto& a = pr[0];
            const auto& b = pr[1];
            if (!offset.count(a.first) || !offset.count(b.first)) continue;
            const bool fa = set_of[at(a.first)] == static_cast<int>(si);
            if (over_first(a.first, a.second, fa) != over_first(b.first, b.second, !fa)) return false;
          }
          return true;
        };
        std::vector<int> order;
        for (const auto& [t, _] : seqs) order.push_back(t);
        std::function<bool(std::size_t)> search = [&](std::size_t k) {
          if (k == order.size()) return true;
          for (int o = 0; o < period; ++o) {
            offset[order[k]] = o;
            if (consistent(order[k]) && search(k + 1)) return true;
          }
          offset.erase(order[k]);
          return false;
        };
        if (!search(0)) {
          throw InconsistentSequence("pattern (" + std::to_string(p) + "," + std::to_string(q) +
                                     ") does not close up between sets " + std::to_string(si + 1) + " and " +
                                     std::to_string(sj + 1));
        }
        for (const auto& [c, pr] : pos) {
          const auto& a = pr[0];
          const bool fa = set_of[at(a.first)] == static_cast<int>(si);
          const bool first_over = over_first(a.first, a.second, fa);
          // which axis does the set-si strand use at c?
          const int axis_si = set_of[at(owner[at(c * 4)])] == static_cast<int>(si) ? 0 : 1;
          x[at(c)] = (first_over ? 1 : 0) ^ axis_si;
        }
      }
    }
  }
  auto cs = d.crossings();
  for (int c = 0; c < n; ++c) cs[at(c)].over = x[at(c)] ? OverAxis::Axis02 : OverAxis::Axis13;
  return d.with_crossings(std::move(cs));
}

}  // namespace weave
