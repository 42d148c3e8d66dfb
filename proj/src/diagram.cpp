#include "weave/diagram.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <queue>
#include <sstream>

#include "weave/errors.hpp"

namespace weave {

SurfaceDiagram::SurfaceDiagram(int genus) : genus_(genus) {}

SurfaceDiagram::SurfaceDiagram(int genus, std::vector<Crossing> crossings, std::vector<Edge> edges,
                               std::vector<FreeLoop> loops)
    : genus_(genus), crossings_(std::move(crossings)), edges_(std::move(edges)), loops_(std::move(loops)) {
  index_slots();
}

void SurfaceDiagram::index_slots() {
  const std::size_t n = crossings_.size() * 4;
  slot_edge_.assign(n, -1);
  slot_end_.assign(n, -1);
  slots_ok_ = true;
  for (std::size_t e = 0; e < edges_.size(); ++e) {
    for (int end = 0; end < 2; ++end) {
      const Dart d = edges_[e].ends[static_cast<std::size_t>(end)];
      if (d.crossing < 0 || d.crossing >= crossing_count() || d.slot < 0 || d.slot > 3) {
        slots_ok_ = false;
        continue;
      }
      const auto i = static_cast<std::size_t>(d.index());
      if (slot_edge_[i] != -1) {
        slots_ok_ = false;
        continue;
      }
      slot_edge_[i] = static_cast<int>(e);
      slot_end_[i] = end;
    }
  }
  if (std::find(slot_edge_.begin(), slot_edge_.end(), -1) != slot_edge_.end()) slots_ok_ = false;
}

Dart SurfaceDiagram::partner(Dart d) const {
  const int e = edge_at(d);
  if (e < 0) throw MalformedDiagram("slot c" + std::to_string(d.crossing) + "." + std::to_string(d.slot) + " is unattached");
  return edges_[static_cast<std::size_t>(e)].ends[static_cast<std::size_t>(1 - end_at(d))];
}

BoundaryWord SurfaceDiagram::word_from(Dart d) const {
  const int e = edge_at(d);
  const auto& w = edges_[static_cast<std::size_t>(e)].word;
  return end_at(d) == 0 ? w : w.inverse();
}

SurfaceDiagram SurfaceDiagram::with_crossings(std::vector<Crossing> crossings) const {
  return SurfaceDiagram(genus_, std::move(crossings), edges_, loops_);
}
SurfaceDiagram SurfaceDiagram::with_edges(std::vector<Edge> edges) const {
  return SurfaceDiagram(genus_, crossings_, std::move(edges), loops_);
}
SurfaceDiagram SurfaceDiagram::with_loops(std::vector<FreeLoop> loops) const {
  return SurfaceDiagram(genus_, crossings_, edges_, std::move(loops));
}

bool operator==(const Crossing& a, const Crossing& b) { return a.over == b.over; }
bool operator==(const Edge& a, const Edge& b) {
  return a.ends == b.ends && a.word == b.word && a.tag == b.tag;
}
bool operator==(const FreeLoop& a, const FreeLoop& b) { return a.word == b.word && a.tag == b.tag; }

bool SurfaceDiagram::operator==(const SurfaceDiagram& o) const {
  return genus_ == o.genus_ && crossings_ == o.crossings_ && edges_ == o.edges_ && loops_ == o.loops_;
}

bool trivial_holonomy(const BoundaryWord& w, int genus) {
  if (genus == 1) return is_zero(w.abelianize(1));
  std::vector<int> x = w.letters();
  std::size_t lo = 0, hi = x.size();
  while (hi - lo >= 2 && x[lo] == -x[hi - 1]) {
    ++lo;
    --hi;
  }
  if (lo == hi) return true;
  const auto n = static_cast<std::size_t>(4 * genus);
  if (hi - lo != n) return false;
  // Conjugates of the cell relator a1 b1 a1^-1 b1^-1 ... or its inverse.
  std::vector<int> rel;
  for (int i = 1; i <= genus; ++i) rel.insert(rel.end(), {i, genus + i, -i, -(genus + i)});
  const BoundaryWord inv = BoundaryWord(rel).inverse();
  for (const auto& r : {rel, inv.letters()}) {
    for (std::size_t k = 0; k < n; ++k) {
      bool same = true;
      for (std::size_t j = 0; j < n && same; ++j) same = x[lo + j] == r[(j + k) % n];
      if (same) return true;
    }
  }
  return false;
}

bool empty_holonomy(const BoundaryWord& w, int genus) {
  return genus == 1 ? is_zero(w.abelianize(1)) : w.empty();
}

bool is_connected(const SurfaceDiagram& d) {
  const int n = d.crossing_count();
  if (n == 0) return d.loops().size() <= 1;
  if (!d.loops().empty()) return false;
  std::vector<int> parent(static_cast<std::size_t>(n));
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[static_cast<std::size_t>(x)] != x) x = parent[static_cast<std::size_t>(x)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
    return x;
  };
  for (const auto& e : d.edges()) {
    const int a = e.ends[0].crossing, b = e.ends[1].crossing;
    if (a < 0 || b < 0 || a >= n || b >= n) continue;
    parent[static_cast<std::size_t>(find(a))] = find(b);
  }
  const int root = find(0);
  for (int c = 1; c < n; ++c)
    if (find(c) != root) return false;
  return true;
}

ValidationReport validate(const SurfaceDiagram& d) {
  ValidationReport r;
  const int n = d.crossing_count();
  if (d.genus() < 1) r.violations.push_back("genus must be >= 1");
  if (n == 0) r.advisories.push_back("no crossings");
  std::vector<int> uses(static_cast<std::size_t>(n) * 4, 0);
  for (std::size_t e = 0; e < d.edges().size(); ++e) {
    for (const Dart& end : d.edges()[e].ends) {
      if (end.crossing < 0 || end.crossing >= n || end.slot < 0 || end.slot > 3) {
        r.violations.push_back("edge e" + std::to_string(e) + " references a missing slot");
        continue;
      }
      ++uses[static_cast<std::size_t>(end.index())];
    }
  }
  for (int i = 0; i < n * 4; ++i) {
    const Dart dt = Dart::from_index(i);
    const std::string name = "c" + std::to_string(dt.crossing) + "." + std::to_string(dt.slot);
    if (uses[static_cast<std::size_t>(i)] > 1) r.violations.push_back("slot double-use at " + name);
    if (uses[static_cast<std::size_t>(i)] == 0) r.violations.push_back("4-regularity: unattached slot " + name);
  }
  if (!r.ok()) return r;
  if (!is_connected(d)) {
    r.violations.push_back("diagram is not connected");
    return r;
  }
  if (n > 0) {
    const auto fs = faces(d);
    for (const auto& face : fs) {
      // faces are discs, so their boundary is null-homologous
      if (!trivial_holonomy(face.holonomy, d.genus())) {
        r.violations.push_back("face " + std::to_string(face.id) + " has nontrivial holonomy " +
                               face.holonomy.to_string(d.genus()));
      }
    }
    const int f = static_cast<int>(fs.size());
    const int expected = n + 2 - 2 * d.genus();
    if (f != expected) {
      r.violations.push_back("Euler count: " + std::to_string(f) + " faces, expected C + 2 - 2g = " +
                             std::to_string(expected));
    }
  }
  return r;
}

static void require_slots(const SurfaceDiagram& d) {
  if (!d.slots_well_formed()) throw MalformedDiagram("diagram has unattached or doubly used slots");
}

std::vector<Face> faces(const SurfaceDiagram& d) {
  require_slots(d);
  const int n = d.crossing_count() * 4;
  std::vector<char> seen(static_cast<std::size_t>(n), 0);
  std::vector<Face> out;
  for (int i = 0; i < n; ++i) {
    if (seen[static_cast<std::size_t>(i)]) continue;
    Face f;
    f.id = static_cast<int>(out.size());
    Dart from = Dart::from_index(i);
    while (!seen[static_cast<std::size_t>(from.index())]) {
      seen[static_cast<std::size_t>(from.index())] = 1;
      const Dart corner = d.partner(from);
      f.holonomy *= d.word_from(from);
      f.boundary.push_back({from, corner});
      from = corner.turned(1);
    }
    out.push_back(std::move(f));
  }
  return out;
}

std::vector<int> corner_faces(const SurfaceDiagram& d, const std::vector<Face>& fs) {
  std::vector<int> out(static_cast<std::size_t>(d.crossing_count()) * 4, -1);
  for (const auto& f : fs)
    for (const auto& s : f.boundary) out[static_cast<std::size_t>(s.corner.index())] = f.id;
  return out;
}

std::vector<Thread> threads(const SurfaceDiagram& d) {
  require_slots(d);
  const int n = d.crossing_count() * 4;
  std::vector<char> seen(static_cast<std::size_t>(n), 0);
  std::vector<Thread> out;
  for (int i = 0; i < n; ++i) {
    if (seen[static_cast<std::size_t>(i)]) continue;
    Thread t;
    t.id = static_cast<int>(out.size());
    t.tag = d.edges()[static_cast<std::size_t>(d.edge_at(Dart::from_index(i)))].tag;
    BoundaryWord w;
    const Dart start = Dart::from_index(i);
    Dart exit = start;
    do {
      seen[static_cast<std::size_t>(exit.index())] = 1;
      w *= d.word_from(exit);
      const Dart entry = d.partner(exit);
      seen[static_cast<std::size_t>(entry.index())] = 1;
      t.route.push_back(entry);
      exit = entry.opposite();
    } while (exit != start);
    t.homology = w.abelianize(d.genus());
    out.push_back(std::move(t));
  }
  for (std::size_t l = 0; l < d.loops().size(); ++l) {
    Thread t;
    t.id = static_cast<int>(out.size());
    t.free_loop = static_cast<int>(l);
    t.tag = d.loops()[l].tag;
    t.homology = d.loops()[l].word.abelianize(d.genus());
    out.push_back(std::move(t));
  }
  return out;
}

std::vector<int> dart_threads(const SurfaceDiagram& d, const std::vector<Thread>& ts) {
  std::vector<int> out(static_cast<std::size_t>(d.crossing_count()) * 4, -1);
  for (const auto& t : ts) {
    for (const Dart& e : t.route) {
      out[static_cast<std::size_t>(e.index())] = t.id;
      out[static_cast<std::size_t>(e.opposite().index())] = t.id;
    }
  }
  return out;
}

std::vector<ThreadSet> thread_sets(const SurfaceDiagram& d) { return thread_sets(d, threads(d)); }

std::vector<ThreadSet> thread_sets(const SurfaceDiagram&, const std::vector<Thread>& ts) {
  std::vector<ThreadSet> sets;
  for (const auto& t : ts) {
    if (is_zero(t.homology)) {
      throw ZeroHomologyThread("thread " + std::to_string(t.id) + " is null-homologous");
    }
    const auto dir = primitive_direction(t.homology);
    auto it = std::find_if(sets.begin(), sets.end(), [&](const ThreadSet& s) { return s.direction == dir; });
    if (it == sets.end()) {
      sets.push_back({dir, {t.id}});
    } else {
      it->threads.push_back(t.id);
    }
  }
  return sets;
}

bool is_alternating(const SurfaceDiagram& d) {
  for (const auto& t : threads(d)) {
    const std::size_t n = t.route.size();
    for (std::size_t k = 0; k < n; ++k) {
      if (d.over_at(t.route[k]) == d.over_at(t.route[(k + 1) % n])) return false;
    }
  }
  return true;
}

CrossingList is_proper(const SurfaceDiagram& d) {
  const auto fs = faces(d);
  const auto cf = corner_faces(d, fs);
  CrossingList r;
  for (int c = 0; c < d.crossing_count(); ++c) {
    std::array<int, 4> f{};
    for (int s = 0; s < 4; ++s) f[static_cast<std::size_t>(s)] = cf[static_cast<std::size_t>(c * 4 + s)];
    std::sort(f.begin(), f.end());
    if (std::adjacent_find(f.begin(), f.end()) != f.end()) r.crossings.push_back(c);
  }
  r.ok = r.crossings.empty();
  return r;
}

CrossingList is_reduced(const SurfaceDiagram& d) {
  const auto fs = faces(d);
  // position of each corner in its face boundary
  std::vector<std::pair<int, int>> where(static_cast<std::size_t>(d.crossing_count()) * 4);
  for (const auto& f : fs)
    for (std::size_t k = 0; k < f.boundary.size(); ++k)
      where[static_cast<std::size_t>(f.boundary[k].corner.index())] = {f.id, static_cast<int>(k)};

  auto isthmus_between = [&](Dart x, Dart y) {
    const auto [fx, kx] = where[static_cast<std::size_t>(x.index())];
    const auto [fy, ky] = where[static_cast<std::size_t>(y.index())];
    if (fx != fy) return false;
    const auto& b = fs[static_cast<std::size_t>(fx)].boundary;
    const int len = static_cast<int>(b.size());
    BoundaryWord w;
    for (int k = (kx + 1) % len; k != (ky + 1) % len; k = (k + 1) % len) {
      w *= d.word_from(b[static_cast<std::size_t>(k)].from);
    }
    return trivial_holonomy(w, d.genus());
  };

  CrossingList r;
  for (int c = 0; c < d.crossing_count(); ++c) {
    if (isthmus_between({c, 0}, {c, 2}) || isthmus_between({c, 1}, {c, 3})) r.crossings.push_back(c);
  }
  r.ok = r.crossings.empty();
  return r;
}

SurfaceDiagram rotate_crossing(const SurfaceDiagram& d, int c, int k) {
  k &= 3;
  if (k == 0) return d;
  auto cs = d.crossings();
  if (k & 1) {
    auto& x = cs[static_cast<std::size_t>(c)];
    x.over = x.over == OverAxis::Axis02 ? OverAxis::Axis13 : OverAxis::Axis02;
  }
  auto es = d.edges();
  for (auto& e : es)
    for (auto& end : e.ends)
      if (end.crossing == c) end = end.turned(k);
  return SurfaceDiagram(d.genus(), std::move(cs), std::move(es), d.loops());
}

SurfaceDiagram orient_crossings(const SurfaceDiagram& d) {
  auto cs = d.crossings();
  auto es = d.edges();
  for (auto& e : es)
    for (auto& end : e.ends)
      if (cs[static_cast<std::size_t>(end.crossing)].over == OverAxis::Axis02) end = end.turned(1);
  for (auto& x : cs) x.over = OverAxis::Axis13;
  return SurfaceDiagram(d.genus(), std::move(cs), std::move(es), d.loops());
}

SurfaceDiagram label_threads(const SurfaceDiagram& d) {
  const auto ts = threads(d);
  const auto owner = dart_threads(d, ts);
  auto es = d.edges();
  for (auto& e : es) e.tag = owner[static_cast<std::size_t>(e.ends[0].index())];
  auto ls = d.loops();
  for (const auto& t : ts)
    if (t.free_loop >= 0) ls[static_cast<std::size_t>(t.free_loop)].tag = t.id;
  return SurfaceDiagram(d.genus(), d.crossings(), std::move(es), std::move(ls));
}

int resolved_mate(Resolution r, int slot) {
  switch (r) {
    case Resolution::Straight:
      return (slot + 2) & 3;
    case Resolution::Pair01:
      return slot ^ 1;
    case Resolution::Pair12:
      return (slot & 1) ? (slot + 1) & 3 : (slot + 3) & 3;
    case Resolution::Keep:
      break;
  }
  return slot;
}

// With the over-strand on 1-3, the A-regions are the corners swept when the
// over-strand turns counterclockwise (corners 1 and 3); the A-smoothing joins
// them, leaving the arcs (0,1) and (2,3).
Resolution a_smoothing(OverAxis over) {
  return over == OverAxis::Axis13 ? Resolution::Pair01 : Resolution::Pair12;
}
Resolution b_smoothing(OverAxis over) {
  return over == OverAxis::Axis13 ? Resolution::Pair12 : Resolution::Pair01;
}

SurfaceDiagram dissolve(const SurfaceDiagram& d, std::span<const Resolution> res) {
  require_slots(d);
  const int n = d.crossing_count();
  std::vector<int> new_index(static_cast<std::size_t>(n), -1);
  std::vector<Crossing> cs;
  for (int c = 0; c < n; ++c) {
    if (res[static_cast<std::size_t>(c)] == Resolution::Keep) {
      new_index[static_cast<std::size_t>(c)] = static_cast<int>(cs.size());
      cs.push_back(d.crossings()[static_cast<std::size_t>(c)]);
    }
  }
  auto kept = [&](Dart x) { return res[static_cast<std::size_t>(x.crossing)] == Resolution::Keep; };
  auto mate = [&](Dart x) {
    return Dart{x.crossing, resolved_mate(res[static_cast<std::size_t>(x.crossing)], x.slot)};
  };
  auto renamed = [&](Dart x) { return Dart{new_index[static_cast<std::size_t>(x.crossing)], x.slot}; };

  std::vector<char> seen(static_cast<std::size_t>(n) * 4, 0);
  std::vector<Edge> es;
  for (int i = 0; i < n * 4; ++i) {
    const Dart start = Dart::from_index(i);
    if (!kept(start) || seen[static_cast<std::size_t>(i)]) continue;
    Edge e;
    e.tag = d.edges()[static_cast<std::size_t>(d.edge_at(start))].tag;
    Dart cur = start;
    seen[static_cast<std::size_t>(i)] = 1;
    while (true) {
      e.word *= d.word_from(cur);
      const Dart next = d.partner(cur);
      seen[static_cast<std::size_t>(next.index())] = 1;
      if (kept(next)) {
        e.ends = {renamed(start), renamed(next)};
        break;
      }
      cur = mate(next);
      seen[static_cast<std::size_t>(cur.index())] = 1;
    }
    es.push_back(std::move(e));
  }
  auto loops = d.loops();
  for (int i = 0; i < n * 4; ++i) {
    if (seen[static_cast<std::size_t>(i)]) continue;
    const Dart start = Dart::from_index(i);
    FreeLoop loop;
    loop.tag = d.edges()[static_cast<std::size_t>(d.edge_at(start))].tag;
    Dart cur = start;
    do {
      seen[static_cast<std::size_t>(cur.index())] = 1;
      loop.word *= d.word_from(cur);
      const Dart next = d.partner(cur);
      seen[static_cast<std::size_t>(next.index())] = 1;
      cur = mate(next);
    } while (cur != start);
    loops.push_back(std::move(loop));
  }
  return SurfaceDiagram(d.genus(), std::move(cs), std::move(es), std::move(loops));
}

namespace {

std::string word_key(const BoundaryWord& w, int genus) {
  if (genus == 1) {
    const auto v = w.abelianize(1);
    return std::to_string(v[0]) + "," + std::to_string(v[1]);
  }
  return w.to_string(genus);
}

// Encoding of the component reached from `start`, relabelling crossings in
// discovery order and gauge-fixing words along the discovery tree.
std::string encode_from(const SurfaceDiagram& d, Dart start) {
  const int n = d.crossing_count();
  std::vector<int> order(static_cast<std::size_t>(n), -1);
  std::vector<int> offset(static_cast<std::size_t>(n), 0);
  std::vector<BoundaryWord> potential(static_cast<std::size_t>(n));
  std::vector<int> queue;
  auto discover = [&](Dart via, const BoundaryWord& pot) {
    order[static_cast<std::size_t>(via.crossing)] = static_cast<int>(queue.size());
    offset[static_cast<std::size_t>(via.crossing)] = (4 - via.slot) & 3;
    potential[static_cast<std::size_t>(via.crossing)] = pot;
    queue.push_back(via.crossing);
  };
  discover(start, {});
  std::ostringstream os;
  for (std::size_t qi = 0; qi < queue.size(); ++qi) {
    const int c = queue[qi];
    const int off = offset[static_cast<std::size_t>(c)];
    const auto over = d.crossings()[static_cast<std::size_t>(c)].over;
    const bool flips = (off & 1) != 0;
    os << '[' << ((static_cast<int>(over) ^ (flips ? 1 : 0))) ;
    for (int ns = 0; ns < 4; ++ns) {
      const Dart x{c, (ns - off + 4) & 3};
      const Dart y = d.partner(x);
      const BoundaryWord w = d.word_from(x);
      if (order[static_cast<std::size_t>(y.crossing)] < 0) {
        discover(y, potential[static_cast<std::size_t>(c)] * w);
      }
      const BoundaryWord gauged =
          potential[static_cast<std::size_t>(c)] * w * potential[static_cast<std::size_t>(y.crossing)].inverse();
      const int ys = (y.slot + offset[static_cast<std::size_t>(y.crossing)]) & 3;
      os << ' ' << order[static_cast<std::size_t>(y.crossing)] << '.' << ys << ':' << word_key(gauged, d.genus());
    }
    os << ']';
  }
  return os.str();
}

}  // namespace

std::string canonical_encoding(const SurfaceDiagram& d) {
  require_slots(d);
  const int n = d.crossing_count();
  std::vector<int> component(static_cast<std::size_t>(n), -1);
  std::vector<std::vector<int>> comps;
  for (int c = 0; c < n; ++c) {
    if (component[static_cast<std::size_t>(c)] >= 0) continue;
    comps.emplace_back();
    std::vector<int> stack{c};
    component[static_cast<std::size_t>(c)] = static_cast<int>(comps.size() - 1);
    while (!stack.empty()) {
      const int x = stack.back();
      stack.pop_back();
      comps.back().push_back(x);
      for (int s = 0; s < 4; ++s) {
        const int y = d.partner({x, s}).crossing;
        if (component[static_cast<std::size_t>(y)] < 0) {
          component[static_cast<std::size_t>(y)] = component[static_cast<std::size_t>(x)];
          stack.push_back(y);
        }
      }
    }
  }
  std::vector<std::string> parts;
  for (const auto& comp : comps) {
    std::string best;
    for (int c : comp) {
      for (int s = 0; s < 4; ++s) {
        auto enc = encode_from(d, {c, s});
        if (best.empty() || enc < best) best = std::move(enc);
      }
    }
    parts.push_back(std::move(best));
  }
  for (const auto& l : d.loops()) {
    // a free loop has no orientation
    const auto w = word_key(l.word, d.genus());
    const auto wi = word_key(l.word.inverse(), d.genus());
    parts.push_back("loop " + std::min(w, wi));
  }
  std::sort(parts.begin(), parts.end());
  std::string out = "g" + std::to_string(d.genus());
  for (const auto& p : parts) out += "|" + p;
  return out;
}

bool isomorphic(const SurfaceDiagram& a, const SurfaceDiagram& b) {
  if (a.genus() != b.genus() || a.crossing_count() != b.crossing_count() ||
      a.loops().size() != b.loops().size())
    return false;
  return canonical_encoding(a) == canonical_encoding(b);
}

}  // namespace weave
