#include "weave/moves.hpp"

#include <algorithm>
#include <charconv>
#include <random>
#include <sstream>
#include <thread>

#include "weave/errors.hpp"

namespace weave {
namespace {

std::size_t at(int i) { return static_cast<std::size_t>(i); }

std::string dart_text(Dart x) { return "c" + std::to_string(x.crossing) + "." + std::to_string(x.slot); }

int parse_int(std::string_view s, std::string_view what) {
  int v = 0;
  const auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || p != s.data() + s.size()) throw ParseError("bad " + std::string(what) + ": " + std::string(s));
  return v;
}

Dart parse_dart(std::string_view s) {
  const auto dot = s.find('.');
  if (s.size() < 4 || s[0] != 'c' || dot == std::string_view::npos) throw ParseError("bad dart: " + std::string(s));
  const Dart x{parse_int(s.substr(1, dot - 1), "crossing"), parse_int(s.substr(dot + 1), "slot")};
  if (x.crossing < 0 || x.slot < 0 || x.slot > 3) throw ParseError("bad dart: " + std::string(s));
  return x;
}

int parse_edge(std::string_view s) {
  if (s.size() < 2 || s[0] != 'e') throw ParseError("bad edge: " + std::string(s));
  const int e = parse_int(s.substr(1), "edge");
  if (e < 0) throw ParseError("bad edge: " + std::string(s));
  return e;
}

// Boundary darts of the face whose traversal leaves `x`; empty when longer than `limit`.
std::vector<Dart> trace_face(const SurfaceDiagram& d, Dart x, std::size_t limit) {
  std::vector<Dart> out;
  Dart cur = x;
  do {
    if (out.size() == limit) return {};
    out.push_back(cur);
    cur = d.partner(cur).turned(1);
  } while (cur != x);
  return out;
}

BoundaryWord holonomy(const SurfaceDiagram& d, const std::vector<Dart>& froms) {
  BoundaryWord w;
  for (const auto& x : froms) w *= d.word_from(x);
  return w;
}

bool distinct_crossings(const std::vector<Dart>& froms) {
  for (std::size_t i = 0; i < froms.size(); ++i)
    for (std::size_t j = i + 1; j < froms.size(); ++j)
      if (froms[i].crossing == froms[j].crossing) return false;
  return true;
}

// Over-pattern of the edge leaving x: 2 = over at both ends, 0 = under at both, 1 = mixed.
int over_pattern(const SurfaceDiagram& d, Dart x) {
  return static_cast<int>(d.over_at(x)) + static_cast<int>(d.over_at(d.partner(x)));
}

bool removable_site(const SurfaceDiagram& d, const std::vector<Dart>& froms) {
  if (froms.empty() || !trivial_holonomy(holonomy(d, froms), d.genus())) return false;
  if (froms.size() == 1) return true;
  if (froms.size() == 2) {
    return distinct_crossings(froms) && over_pattern(d, froms[0]) != 1 && over_pattern(d, froms[1]) != 1;
  }
  return false;
}

bool r3_site(const SurfaceDiagram& d, const std::vector<Dart>& froms) {
  if (froms.size() != 3 || !distinct_crossings(froms)) return false;
  if (!empty_holonomy(holonomy(d, froms), d.genus())) return false;
  bool oo = false, uu = false;
  for (const auto& x : froms) {
    const int p = over_pattern(d, x);
    oo |= p == 2;
    uu |= p == 0;
  }
  return oo && uu;
}

std::vector<Dart> rotated_to_min(std::vector<Dart> froms) {
  std::rotate(froms.begin(), std::min_element(froms.begin(), froms.end()), froms.end());
  return froms;
}

void require_well_formed(const SurfaceDiagram& d) {
  if (!d.slots_well_formed()) throw IllegalMove("diagram has malformed slots");
}

std::vector<Dart> site_face(const SurfaceDiagram& d, const Move& m, std::size_t len) {
  if (m.darts.size() != len) throw IllegalMove("move site needs " + std::to_string(len) + " darts");
  for (const auto& x : m.darts)
    if (x.crossing < 0 || x.crossing >= d.crossing_count()) throw IllegalMove("move site outside the diagram");
  auto froms = trace_face(d, m.darts[0], len);
  if (froms.size() != len || froms != m.darts) throw IllegalMove("site is not a face of the expected length");
  return froms;
}

SurfaceDiagram add_r1(const SurfaceDiagram& d, const Move& m) {
  if (m.edge < 0 || m.edge >= d.edge_count()) throw IllegalMove("R1_add edge out of range");
  if (m.sign != 1 && m.sign != -1) throw IllegalMove("R1_add sign must be + or -");
  const int n = d.crossing_count();
  auto cs = d.crossings();
  cs.push_back({m.sign > 0 ? OverAxis::Axis02 : OverAxis::Axis13});
  auto es = d.edges();
  const Edge old = es[at(m.edge)];
  es[at(m.edge)] = {{old.ends[0], Dart{n, 0}}, old.word, old.tag};
  es.push_back({{Dart{n, 2}, Dart{n, 1}}, {}, old.tag});
  es.push_back({{Dart{n, 3}, old.ends[1]}, {}, old.tag});
  return SurfaceDiagram(d.genus(), std::move(cs), std::move(es), d.loops());
}

SurfaceDiagram add_r2(const SurfaceDiagram& d, const Move& m) {
  for (const auto& s : {m.first, m.second})
    if (s.edge < 0 || s.edge >= d.edge_count() || (s.dir != 0 && s.dir != 1))
      throw IllegalMove("R2_add edge side out of range");
  if (m.first.edge == m.second.edge) throw IllegalMove("R2_add needs two distinct edges");
  const Dart from_i = d.edges()[at(m.first.edge)].ends[at(m.first.dir)];
  const Dart from_j = d.edges()[at(m.second.edge)].ends[at(m.second.dir)];
  const auto face = trace_face(d, from_i, 4 * at(d.crossing_count()) + 1);
  const auto pos = std::find(face.begin(), face.end(), from_j);
  if (pos == face.end()) throw IllegalMove("R2_add edge sides do not share a face");
  if (!trivial_holonomy(holonomy(d, face), d.genus())) throw IllegalMove("R2_add face has nontrivial holonomy");

  // Chord word: the face boundary strictly between the two sides.
  BoundaryWord chord;
  for (auto it = face.begin() + 1; it != pos; ++it) chord *= d.word_from(*it);
  const Dart corner_i = d.partner(from_i), corner_j = d.partner(from_j);
  const BoundaryWord u_i = d.word_from(from_i), u_j = d.word_from(from_j);
  const int tag_i = d.edges()[at(m.first.edge)].tag, tag_j = d.edges()[at(m.second.edge)].tag;

  // N1 is where the finger goes out, N2 where it comes back.
  const int n1 = d.crossing_count(), n2 = n1 + 1;
  auto cs = d.crossings();
  const OverAxis axis = m.over_first ? OverAxis::Axis13 : OverAxis::Axis02;
  cs.push_back({axis});
  cs.push_back({axis});
  auto es = d.edges();
  es[at(m.first.edge)] = {{from_i, Dart{n1, 1}}, u_i * chord, tag_i};
  es[at(m.second.edge)] = {{from_j, Dart{n2, 0}}, {}, tag_j};
  es.push_back({{Dart{n1, 3}, Dart{n2, 3}}, {}, tag_i});
  es.push_back({{Dart{n2, 1}, corner_i}, chord.inverse(), tag_i});
  es.push_back({{Dart{n2, 2}, Dart{n1, 0}}, {}, tag_j});
  es.push_back({{Dart{n1, 2}, corner_j}, u_j, tag_j});
  return SurfaceDiagram(d.genus(), std::move(cs), std::move(es), d.loops());
}

SurfaceDiagram remove_straight(const SurfaceDiagram& d, const std::vector<Dart>& froms) {
  std::vector<Resolution> res(at(d.crossing_count()), Resolution::Keep);
  for (const auto& x : froms) res[at(x.crossing)] = Resolution::Straight;
  return dissolve(d, res);
}

// Slides the strand over (or under) both others across the opposite crossing.
SurfaceDiagram apply_r3(const SurfaceDiagram& d0, const std::vector<Dart>& x) {
  // Make two triangle edges wordless; the third then carries a trivial word.
  const SurfaceDiagram d1 = gauge(d0, d0.partner(x[0]).crossing, d0.word_from(x[0]));
  const SurfaceDiagram d = gauge(d1, d1.partner(x[1]).crossing, d1.word_from(x[1]));

  std::array<int, 3> p{}, t{}, tri{};
  for (std::size_t i = 0; i < 3; ++i) {
    const Dart y = d.partner(x[i]);
    p[i] = y.crossing;
    t[i] = y.slot;
    tri[i] = d.edge_at(x[i]);
  }
  // Outer darts in counterclockwise order around the disk, and where each one goes.
  auto corner = [&](std::size_t i, int k) { return Dart{p[i], t[i]}.turned(k); };
  const std::array<Dart, 6> outer{corner(2, 2), corner(2, 3), corner(1, 2), corner(1, 3), corner(0, 2), corner(0, 3)};
  const std::array<Dart, 6> moved{Dart{p[1], 1}, Dart{p[0], 0}, Dart{p[0], 1},
                                  Dart{p[2], 0}, Dart{p[2], 1}, Dart{p[1], 0}};
  auto remap = [&](Dart y) {
    if (y.crossing != p[0] && y.crossing != p[1] && y.crossing != p[2]) return y;
    for (std::size_t k = 0; k < 6; ++k)
      if (outer[k] == y) return moved[k];
    throw IllegalMove("R3 triangle dart is not on the disk boundary");
  };
  auto cs = d.crossings();
  auto axis_for = [&](Dart y) { return d.over_at(y) ? OverAxis::Axis02 : OverAxis::Axis13; };
  cs[at(p[0])].over = axis_for({p[0], t[0]});
  cs[at(p[2])].over = axis_for({p[2], t[2]});
  cs[at(p[1])].over = axis_for({p[1], t[1]});

  std::vector<Edge> es;
  es.reserve(d.edges().size());
  for (int k = 0; k < d.edge_count(); ++k) {
    const Edge& e = d.edges()[at(k)];
    if (k == tri[0]) {
      es.push_back({{Dart{p[0], 2}, Dart{p[2], 3}}, {}, e.tag});
    } else if (k == tri[1]) {
      es.push_back({{Dart{p[0], 3}, Dart{p[1], 2}}, {}, e.tag});
    } else if (k == tri[2]) {
      es.push_back({{Dart{p[2], 2}, Dart{p[1], 3}}, {}, e.tag});
    } else {
      es.push_back({{remap(e.ends[0]), remap(e.ends[1])}, e.word, e.tag});
    }
  }
  return SurfaceDiagram(d.genus(), std::move(cs), std::move(es), d.loops());
}

}  // namespace

std::string format_move(const Move& m) {
  std::ostringstream os;
  switch (m.kind) {
    case MoveKind::R1_add:
      os << "R1_add e" << m.edge << " sign=" << (m.sign > 0 ? '+' : '-');
      break;
    case MoveKind::R2_add:
      os << "R2_add e" << m.first.edge << ':' << m.first.dir << " e" << m.second.edge << ':' << m.second.dir
         << " over=" << (m.over_first ? "first" : "second");
      break;
    case MoveKind::R1_remove:
    case MoveKind::R2_remove:
    case MoveKind::R3:
      os << (m.kind == MoveKind::R1_remove ? "R1_remove" : m.kind == MoveKind::R2_remove ? "R2_remove" : "R3");
      for (const auto& x : m.darts) os << ' ' << dart_text(x);
      break;
  }
  return os.str();
}

Move parse_move(std::string_view line) {
  std::istringstream is{std::string(line)};
  std::vector<std::string> tok;
  for (std::string s; is >> s;) tok.push_back(s);
  if (tok.empty()) throw ParseError("empty move");
  Move m;
  auto need = [&](std::size_t n) {
    if (tok.size() != n) throw ParseError("wrong number of fields in move: " + std::string(line));
  };
  auto edge_side = [&](const std::string& s) {
    const auto colon = s.find(':');
    if (colon == std::string::npos) throw ParseError("bad edge side: " + s);
    const EdgeSide es{parse_edge(std::string_view(s).substr(0, colon)),
                      parse_int(std::string_view(s).substr(colon + 1), "side")};
    if (es.dir != 0 && es.dir != 1) throw ParseError("bad edge side: " + s);
    return es;
  };
  if (tok[0] == "R1_add") {
    need(3);
    m.kind = MoveKind::R1_add;
    m.edge = parse_edge(tok[1]);
    if (tok[2] == "sign=+") {
      m.sign = 1;
    } else if (tok[2] == "sign=-") {
      m.sign = -1;
    } else {
      throw ParseError("bad sign: " + tok[2]);
    }
  } else if (tok[0] == "R2_add") {
    need(4);
    m.kind = MoveKind::R2_add;
    m.first = edge_side(tok[1]);
    m.second = edge_side(tok[2]);
    if (tok[3] == "over=first") {
      m.over_first = true;
    } else if (tok[3] == "over=second") {
      m.over_first = false;
    } else {
      throw ParseError("bad over choice: " + tok[3]);
    }
  } else if (tok[0] == "R1_remove" || tok[0] == "R2_remove" || tok[0] == "R3") {
    m.kind = tok[0] == "R1_remove" ? MoveKind::R1_remove : tok[0] == "R2_remove" ? MoveKind::R2_remove : MoveKind::R3;
    need(m.kind == MoveKind::R1_remove ? 2 : m.kind == MoveKind::R2_remove ? 3 : 4);
    for (std::size_t i = 1; i < tok.size(); ++i) m.darts.push_back(parse_dart(tok[i]));
  } else {
    throw ParseError("unknown move: " + tok[0]);
  }
  return m;
}

SurfaceDiagram gauge(const SurfaceDiagram& d, int c, const BoundaryWord& h) {
  auto es = d.edges();
  const BoundaryWord hi = h.inverse();
  for (auto& e : es) {
    if (e.ends[0].crossing == c) e.word = h * e.word;
    if (e.ends[1].crossing == c) e.word = e.word * hi;
  }
  return d.with_edges(std::move(es));
}

std::vector<Move> enumerate_moves(const SurfaceDiagram& d) {
  std::vector<Move> out;
  if (!d.slots_well_formed()) return out;
  const auto fs = d.crossing_count() > 0 ? faces(d) : std::vector<Face>{};
  std::vector<std::vector<Dart>> boundaries;
  for (const auto& f : fs) {
    std::vector<Dart> froms;
    for (const auto& s : f.boundary) froms.push_back(s.from);
    boundaries.push_back(std::move(froms));
  }
  std::sort(boundaries.begin(), boundaries.end(),
            [](const auto& a, const auto& b) { return *std::min_element(a.begin(), a.end()) < *std::min_element(b.begin(), b.end()); });

  for (const auto& b : boundaries) {
    if ((b.size() == 1 || b.size() == 2) && removable_site(d, b)) {
      Move m;
      m.kind = b.size() == 1 ? MoveKind::R1_remove : MoveKind::R2_remove;
      m.darts = rotated_to_min(b);
      out.push_back(std::move(m));
    }
  }
  for (const auto& b : boundaries) {
    if (b.size() == 3 && r3_site(d, b)) {
      Move m;
      m.kind = MoveKind::R3;
      m.darts = rotated_to_min(b);
      out.push_back(std::move(m));
    }
  }
  for (int e = 0; e < d.edge_count(); ++e) {
    for (int sign : {1, -1}) {
      Move m;
      m.kind = MoveKind::R1_add;
      m.edge = e;
      m.sign = sign;
      out.push_back(std::move(m));
    }
  }
  for (const auto& b : boundaries) {
    if (!trivial_holonomy(holonomy(d, b), d.genus())) continue;
    for (const auto& xi : b) {
      for (const auto& xj : b) {
        const int ei = d.edge_at(xi), ej = d.edge_at(xj);
        if (ei == ej) continue;
        for (bool over_first : {true, false}) {
          Move m;
          m.kind = MoveKind::R2_add;
          m.first = {ei, d.end_at(xi)};
          m.second = {ej, d.end_at(xj)};
          m.over_first = over_first;
          out.push_back(std::move(m));
        }
      }
    }
  }
  return out;
}

SurfaceDiagram apply_move(const SurfaceDiagram& d, const Move& m) {
  require_well_formed(d);
  switch (m.kind) {
    case MoveKind::R1_add:
      return add_r1(d, m);
    case MoveKind::R2_add:
      return add_r2(d, m);
    case MoveKind::R1_remove:
    case MoveKind::R2_remove: {
      const std::size_t len = m.kind == MoveKind::R1_remove ? 1 : 2;
      const auto froms = site_face(d, m, len);
      if (!removable_site(d, froms)) throw IllegalMove("not a removable site: " + format_move(m));
      return remove_straight(d, froms);
    }
    case MoveKind::R3: {
      const auto froms = site_face(d, m, 3);
      if (!r3_site(d, froms)) throw IllegalMove("not an R3 site: " + format_move(m));
      return apply_r3(d, froms);
    }
  }
  throw IllegalMove("unknown move kind");
}

std::string format_trace(const MoveTrace& t) {
  std::string out = "seed " + std::to_string(t.seed) + "\n";
  for (const auto& m : t.moves) out += format_move(m) + "\n";
  return out;
}

MoveTrace parse_trace(std::string_view text) {
  MoveTrace t;
  std::istringstream is{std::string(text)};
  int line_no = 0;
  for (std::string line; std::getline(is, line);) {
    ++line_no;
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    line = line.substr(first);
    while (!line.empty() && (line.back() == '\r' || line.back() == ' ')) line.pop_back();
    try {
      if (line.rfind("seed ", 0) == 0) {
        const std::string v = line.substr(5);
        std::uint64_t s = 0;
        const auto [p, ec] = std::from_chars(v.data(), v.data() + v.size(), s);
        if (ec != std::errc() || p != v.data() + v.size()) throw ParseError("bad seed");
        t.seed = s;
      } else {
        t.moves.push_back(parse_move(line));
      }
    } catch (const ParseError& e) {
      throw ParseError("line " + std::to_string(line_no) + ": " + e.what());
    }
  }
  return t;
}

namespace {

std::size_t pick(std::mt19937_64& rng, std::size_t n) { return static_cast<std::size_t>(rng() % n); }

bool is_remove(MoveKind k) { return k == MoveKind::R1_remove || k == MoveKind::R2_remove; }

}  // namespace

MoveTrace fuzz(const SurfaceDiagram& d, int steps, std::uint64_t seed, int max_crossings) {
  MoveTrace trace;
  trace.seed = seed;
  std::mt19937_64 rng(seed);
  SurfaceDiagram cur = d;
  for (int step = 0; step < steps; ++step) {
    const int c = cur.crossing_count();
    std::array<std::vector<Move>, 4> bins;  // removes, R3, R1_add, R2_add
    for (auto& m : enumerate_moves(cur)) {
      if (is_remove(m.kind)) {
        bins[0].push_back(std::move(m));
      } else if (m.kind == MoveKind::R3) {
        bins[1].push_back(std::move(m));
      } else if (m.kind == MoveKind::R1_add && c + 1 <= max_crossings) {
        bins[2].push_back(std::move(m));
      } else if (m.kind == MoveKind::R2_add && c + 2 <= max_crossings) {
        bins[3].push_back(std::move(m));
      }
    }
    const std::vector<Move>* chosen = nullptr;
    if (4 * c > 3 * max_crossings && !bins[0].empty()) {
      chosen = &bins[0];
    } else {
      std::vector<const std::vector<Move>*> live;
      for (const auto& b : bins)
        if (!b.empty()) live.push_back(&b);
      if (live.empty()) break;
      chosen = live[pick(rng, live.size())];
    }
    const Move m = (*chosen)[pick(rng, chosen->size())];
    cur = apply_move(cur, m);
    trace.moves.push_back(m);
  }
  return trace;
}

std::vector<MoveTrace> fuzz_many(const SurfaceDiagram& d, int steps, const std::vector<std::uint64_t>& seeds,
                                 int max_crossings, int workers) {
  std::vector<MoveTrace> out(seeds.size());
  const std::size_t n = std::max(1, workers);
  std::vector<std::thread> pool;
  for (std::size_t w = 0; w < std::min(n, seeds.size()); ++w) {
    pool.emplace_back([&, w] {
      for (std::size_t i = w; i < seeds.size(); i += n) out[i] = fuzz(d, steps, seeds[i], max_crossings);
    });
  }
  for (auto& th : pool) th.join();
  return out;
}

SurfaceDiagram replay(const SurfaceDiagram& d, const MoveTrace& t) {
  SurfaceDiagram cur = d;
  for (const auto& m : t.moves) cur = apply_move(cur, m);
  return cur;
}

std::vector<SurfaceDiagram> replay_all(const SurfaceDiagram& d, const MoveTrace& t) {
  std::vector<SurfaceDiagram> out{d};
  out.reserve(t.moves.size() + 1);
  for (const auto& m : t.moves) out.push_back(apply_move(out.back(), m));
  return out;
}

SurfaceDiagram simplify(const SurfaceDiagram& d, int restarts, std::uint64_t seed) {
  SurfaceDiagram best = d;
  for (int r = 0; r < std::max(1, restarts); ++r) {
    std::mt19937_64 rng(seed + static_cast<std::uint64_t>(r));
    SurfaceDiagram cur = d;
    int shuffles = 4 * d.crossing_count() + 8;
    while (true) {
      std::vector<Move> removes, r3s;
      for (auto& m : enumerate_moves(cur)) {
        if (is_remove(m.kind)) removes.push_back(std::move(m));
        if (m.kind == MoveKind::R3) r3s.push_back(std::move(m));
      }
      if (!removes.empty()) {
        cur = apply_move(cur, removes[r == 0 ? 0 : pick(rng, removes.size())]);
      } else if (!r3s.empty() && shuffles-- > 0) {
        cur = apply_move(cur, r3s[pick(rng, r3s.size())]);
      } else {
        break;
      }
      if (cur.crossing_count() < best.crossing_count()) best = cur;
    }
  }
  return best;
}

CrossingNumberBounds crossing_number_bounds(const SurfaceDiagram& d, int restarts, std::uint64_t seed,
                                            const BracketOptions& opts) {
  CrossingNumberBounds out;
  const auto b = bracket(d, opts);
  const auto empty = b.find(WindingKey{});
  out.lower_certified = empty != b.end() && !empty->second.is_zero();
  if (out.lower_certified) {
    const auto st = degree_stats(d, b);
    out.lower = (st.span + 3) / 4 + d.genus();
  }
  out.upper = simplify(d, restarts, seed).crossing_count();
  return out;
}

}  // namespace weave
