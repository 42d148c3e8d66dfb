#include "weave/invariants.hpp"

#include <algorithm>
#include <numeric>
#include <thread>

#include "weave/errors.hpp"

namespace weave {
namespace {

std::size_t at(int i) { return static_cast<std::size_t>(i); }

// Loop tracer over a fixed diagram; each call resolves every crossing.
class Tracer {
 public:
  explicit Tracer(const SurfaceDiagram& d) : genus_(d.genus()), n_(d.crossing_count()) {
    if (!d.slots_well_formed()) throw MalformedDiagram("diagram has unattached or doubly used slots");
    const int darts = n_ * 4;
    partner_.resize(at(darts));
    hom_.resize(at(darts) * dim());
    for (int i = 0; i < darts; ++i) {
      const Dart x = Dart::from_index(i);
      partner_[at(i)] = d.partner(x).index();
      const auto v = d.word_from(x).abelianize(genus_);
      std::copy(v.begin(), v.end(), hom_.begin() + static_cast<std::ptrdiff_t>(at(i) * dim()));
    }
    for (const auto& l : d.loops()) {
      const auto v = l.word.abelianize(genus_);
      if (is_zero(v)) {
        ++base_trivial_;
      } else {
        base_windings_.push_back(normalize_sign(v));
      }
    }
  }

  std::size_t dim() const { return static_cast<std::size_t>(2 * genus_); }

  struct Census {
    int trivial = 0;
    int total = 0;
    WindingKey windings;
    std::vector<int> loop_of;  // loop index per dart
  };

  // res[c] is the smoothing at crossing c (never Keep).
  void run(const std::vector<Resolution>& res, Census& out) {
    const int darts = n_ * 4;
    out.trivial = base_trivial_;
    out.windings = base_windings_;
    out.total = base_trivial_ + static_cast<int>(base_windings_.size());
    out.loop_of.assign(at(darts), -1);
    HomologyVector sum(dim());
    for (int i = 0; i < darts; ++i) {
      if (out.loop_of[at(i)] >= 0) continue;
      std::fill(sum.begin(), sum.end(), 0);
      const int id = out.total++;
      int x = i;
      do {
        out.loop_of[at(x)] = id;
        for (std::size_t k = 0; k < dim(); ++k) sum[k] += hom_[at(x) * dim() + k];
        const int y = partner_[at(x)];
        out.loop_of[at(y)] = id;
        x = (y & ~3) | resolved_mate(res[at(y >> 2)], y & 3);
      } while (x != i);
      if (is_zero(sum)) {
        ++out.trivial;
      } else {
        out.windings.push_back(normalize_sign(sum));
      }
    }
    std::sort(out.windings.begin(), out.windings.end());
  }

 private:
  int genus_;
  int n_;
  std::vector<int> partner_;
  std::vector<std::int64_t> hom_;
  int base_trivial_ = 0;
  WindingKey base_windings_;
};

std::vector<Resolution> resolutions(const SurfaceDiagram& d, const std::vector<Split>& splits) {
  std::vector<Resolution> res(splits.size());
  for (std::size_t c = 0; c < splits.size(); ++c) {
    const auto over = d.crossings()[c].over;
    res[c] = splits[c] == Split::A ? a_smoothing(over) : b_smoothing(over);
  }
  return res;
}

// (key, trivial loop count) -> exponent of A -> number of states.
using Tally = std::map<std::pair<WindingKey, int>, std::map<int, std::int64_t>>;

BracketValue expand(const Tally& tally) {
  BracketValue out;
  const LaurentPoly d = LaurentPoly::loop_value();
  for (const auto& [kc, counts] : tally) {
    const auto& [key, trivial] = kc;
    LaurentPoly a;
    for (const auto& [e, n] : counts) a += LaurentPoly::monomial(n, e);
    const int dpow = key.empty() ? trivial - 1 : trivial;
    out[key] += a * d.pow(dpow);
  }
  return normalized(std::move(out));
}

void check_budget(const SurfaceDiagram& d, int budget) {
  if (budget < 1) throw WeaveError("crossing budget must be >= 1");
  if (d.crossing_count() > budget) throw TooManyCrossings(d.crossing_count(), budget);
}

// Value of a crossingless diagram.
BracketValue base_value(const SurfaceDiagram& d) {
  int trivial = 0;
  WindingKey key;
  for (const auto& l : d.loops()) {
    const auto v = l.word.abelianize(d.genus());
    if (is_zero(v)) {
      ++trivial;
    } else {
      key.push_back(normalize_sign(v));
    }
  }
  BracketValue out;
  if (trivial == 0 && key.empty()) return out;
  std::sort(key.begin(), key.end());
  out[key] = LaurentPoly::loop_value().pow(key.empty() ? trivial - 1 : trivial);
  return out;
}

LaurentPoly writhe_factor(int w) {
  // (-A)^(-3w)
  return LaurentPoly::monomial((w & 1) ? -1 : 1, -3 * w);
}

// Out-slot of the strand along the given axis parity at crossing c.
int out_slot(const Orientation& o, int c, int parity) {
  return o[at(c * 4 + parity)] ? parity : parity + 2;
}

}  // namespace

SurfaceDiagram split(const SurfaceDiagram& d, int c, Split kind) {
  if (c < 0 || c >= d.crossing_count()) throw WeaveError("unknown crossing c" + std::to_string(c));
  std::vector<Resolution> res(at(d.crossing_count()), Resolution::Keep);
  const auto over = d.crossings()[at(c)].over;
  res[at(c)] = kind == Split::A ? a_smoothing(over) : b_smoothing(over);
  return dissolve(d, res);
}

State resolve_state(const SurfaceDiagram& d, const std::vector<Split>& splits) {
  if (static_cast<int>(splits.size()) != d.crossing_count()) {
    throw WeaveError("state must assign every crossing");
  }
  Tracer tracer(d);
  Tracer::Census census;
  tracer.run(resolutions(d, splits), census);
  State s;
  s.splits = splits;
  s.a_count = static_cast<int>(std::count(splits.begin(), splits.end(), Split::A));
  s.b_count = static_cast<int>(splits.size()) - s.a_count;
  s.trivial_loops = census.trivial;
  s.windings = std::move(census.windings);
  return s;
}

BracketValue bracket(const SurfaceDiagram& d, const BracketOptions& opts) {
  check_budget(d, opts.budget);
  const int n = d.crossing_count();
  if (n == 0) return base_value(d);
  const std::uint64_t states = std::uint64_t{1} << n;
  const int workers = std::max(1, std::min<int>(opts.workers, static_cast<int>(std::min<std::uint64_t>(states, 64))));
  std::vector<Resolution> a_res(at(n)), b_res(at(n));
  for (int c = 0; c < n; ++c) {
    a_res[at(c)] = a_smoothing(d.crossings()[at(c)].over);
    b_res[at(c)] = b_smoothing(d.crossings()[at(c)].over);
  }

  std::vector<Tally> partial(at(workers));
  auto work = [&](int w) {
    Tracer tracer(d);
    Tracer::Census census;
    std::vector<Resolution> res(at(n));
    const std::uint64_t lo = states * static_cast<std::uint64_t>(w) / static_cast<std::uint64_t>(workers);
    const std::uint64_t hi = states * static_cast<std::uint64_t>(w + 1) / static_cast<std::uint64_t>(workers);
    auto& tally = partial[at(w)];
    for (std::uint64_t mask = lo; mask < hi; ++mask) {
      int b = 0;
      for (int c = 0; c < n; ++c) {
        const bool is_b = (mask >> c) & 1U;
        res[at(c)] = is_b ? b_res[at(c)] : a_res[at(c)];
        b += is_b;
      }
      tracer.run(res, census);
      ++tally[{census.windings, census.trivial}][n - 2 * b];
    }
  };
  if (workers == 1) {
    work(0);
  } else {
    std::vector<std::thread> pool;
    for (int w = 0; w < workers; ++w) pool.emplace_back(work, w);
    for (auto& t : pool) t.join();
  }
  Tally merged;
  for (const auto& p : partial)
    for (const auto& [k, counts] : p)
      for (const auto& [e, c] : counts) merged[k][e] += c;
  return expand(merged);
}

BracketValue bracket_skein(const SurfaceDiagram& d, int budget) {
  check_budget(d, budget);
  if (d.crossing_count() == 0) return base_value(d);
  const auto a = bracket_skein(split(d, 0, Split::A), budget);
  const auto b = bracket_skein(split(d, 0, Split::B), budget);
  return a * LaurentPoly::monomial(1, 1) + b * LaurentPoly::monomial(1, -1);
}

BracketValue operator*(const BracketValue& v, const LaurentPoly& p) {
  BracketValue out;
  for (const auto& [k, poly] : v) out[k] = poly * p;
  return normalized(std::move(out));
}

BracketValue operator+(const BracketValue& a, const BracketValue& b) {
  BracketValue out = a;
  for (const auto& [k, poly] : b) out[k] += poly;
  return normalized(std::move(out));
}

BracketValue operator-(const BracketValue& a, const BracketValue& b) {
  BracketValue out = a;
  for (const auto& [k, poly] : b) out[k] -= poly;
  return normalized(std::move(out));
}

BracketValue normalized(BracketValue v) {
  std::erase_if(v, [](const auto& kv) { return kv.second.is_zero(); });
  return v;
}

std::string format_key(const WindingKey& key) {
  std::string s = "<";
  for (std::size_t i = 0; i < key.size();) {
    std::size_t j = i;
    while (j < key.size() && key[j] == key[i]) ++j;
    if (i > 0) s += ",";
    s += "(";
    for (std::size_t k = 0; k < key[i].size(); ++k) s += (k ? "," : "") + std::to_string(key[i][k]);
    s += ")^" + std::to_string(j - i);
    i = j;
  }
  return s + ">";
}

std::string format_bracket(const BracketValue& v, const std::string& var) {
  if (v.empty()) return "<>: 0\n";
  std::string s;
  for (const auto& [k, p] : v) s += format_key(k) + ": " + p.to_string(var) + "\n";
  return s;
}

HomologyVector default_reference(int genus) {
  HomologyVector r(at(2 * genus));
  std::int64_t x = 1;
  for (auto& e : r) {
    e = x;
    x *= 1009;
  }
  return r;
}

Orientation reference_orientation(const SurfaceDiagram& d, const HomologyVector& ref) {
  Orientation o(at(d.crossing_count() * 4), 0);
  for (const auto& t : threads(d)) {
    std::int64_t dot = 0;
    for (std::size_t k = 0; k < t.homology.size(); ++k) dot += t.homology[k] * ref[k];
    const bool forward = dot >= 0;
    for (const Dart& e : t.route) o[at((forward ? e.opposite() : e).index())] = 1;
  }
  return o;
}

Orientation reference_orientation(const SurfaceDiagram& d) {
  return reference_orientation(d, default_reference(d.genus()));
}

std::vector<int> crossing_signs(const SurfaceDiagram& d, const Orientation& o) {
  std::vector<int> signs(at(d.crossing_count()));
  for (int c = 0; c < d.crossing_count(); ++c) {
    const int over_parity = static_cast<int>(d.crossings()[at(c)].over);
    const int over_out = out_slot(o, c, over_parity);
    const int under_out = out_slot(o, c, 1 - over_parity);
    signs[at(c)] = under_out == ((over_out + 1) & 3) ? 1 : -1;
  }
  return signs;
}

int writhe(const SurfaceDiagram& d, const Orientation& o) {
  const auto s = crossing_signs(d, o);
  return std::accumulate(s.begin(), s.end(), 0);
}

int writhe(const SurfaceDiagram& d) { return writhe(d, reference_orientation(d)); }

std::vector<int> writhe_per_component(const SurfaceDiagram& d, const Orientation& o) {
  const auto ts = threads(d);
  const auto owner = dart_threads(d, ts);
  const auto signs = crossing_signs(d, o);
  std::vector<int> out(ts.size(), 0);
  for (int c = 0; c < d.crossing_count(); ++c) {
    const int t0 = owner[at(c * 4)], t1 = owner[at(c * 4 + 1)];
    if (t0 == t1) out[at(t0)] += signs[at(c)];
  }
  return out;
}

std::vector<int> writhe_per_component(const SurfaceDiagram& d) {
  return writhe_per_component(d, reference_orientation(d));
}

BracketValue kauffman_f(const SurfaceDiagram& d, const Orientation& o, const BracketOptions& opts) {
  return bracket(d, opts) * writhe_factor(writhe(d, o));
}

BracketValue kauffman_f(const SurfaceDiagram& d, const BracketOptions& opts) {
  return kauffman_f(d, reference_orientation(d), opts);
}

BracketValue jones(const SurfaceDiagram& d, const BracketOptions& opts) {
  BracketValue out;
  for (const auto& [k, p] : kauffman_f(d, opts)) out[k] = p.rescaled(-1);
  return out;
}

Checkerboard checkerboard(const SurfaceDiagram& d) {
  Checkerboard cb;
  for (const auto& f : faces(d)) {
    int a = 0;
    for (const auto& step : f.boundary) {
      const int shift = d.crossings()[at(step.corner.crossing)].over == OverAxis::Axis02 ? 1 : 0;
      a += (step.corner.slot + shift) & 1;
    }
    // The A-smoothing hugs the even corners of an axis-13 crossing, so those
    // faces are the ones enclosed by the all-A loops.
    if (a == 0) {
      cb.white.push_back(f.id);
    } else if (a == static_cast<int>(f.boundary.size())) {
      cb.black.push_back(f.id);
    } else {
      throw NotCheckerboardColorable("face " + std::to_string(f.id) + " has both A and B corners");
    }
  }
  return cb;
}

DegreeStats degree_stats(const SurfaceDiagram& d, const BracketValue& b) {
  DegreeStats s;
  for (const auto& [k, p] : b) {
    if (p.is_zero()) continue;
    if (!s.has_terms) {
      s.maxdeg = p.max_degree();
      s.mindeg = p.min_degree();
      s.has_terms = true;
    } else {
      s.maxdeg = std::max(s.maxdeg, p.max_degree());
      s.mindeg = std::min(s.mindeg, p.min_degree());
    }
  }
  s.span = s.maxdeg - s.mindeg;
  try {
    const auto cb = checkerboard(d);
    s.colorable = true;
    s.white = static_cast<int>(cb.white.size());
    s.black = static_cast<int>(cb.black.size());
  } catch (const NotCheckerboardColorable&) {
    s.colorable = false;
  }
  return s;
}

DegreeStats degree_stats(const SurfaceDiagram& d, const BracketOptions& opts) {
  return degree_stats(d, bracket(d, opts));
}

int linking_number(const SurfaceDiagram& d, int i, int j, const Orientation& o, bool halved) {
  if (i == j) throw WeaveError("linking number needs two distinct threads");
  const auto owner = dart_threads(d, threads(d));
  const auto signs = crossing_signs(d, o);
  int sum = 0;
  for (int c = 0; c < d.crossing_count(); ++c) {
    const int t0 = owner[at(c * 4)], t1 = owner[at(c * 4 + 1)];
    if ((t0 == i && t1 == j) || (t0 == j && t1 == i)) sum += signs[at(c)];
  }
  return halved ? sum / 2 : sum;
}

int linking_number(const SurfaceDiagram& d, int i, int j, bool halved) {
  return linking_number(d, i, j, reference_orientation(d), halved);
}

std::map<std::pair<int, int>, int> linking_by_tag(const SurfaceDiagram& d, const Orientation& o) {
  const auto ts = threads(d);
  const auto owner = dart_threads(d, ts);
  const auto signs = crossing_signs(d, o);
  std::map<std::pair<int, int>, int> out;
  for (int c = 0; c < d.crossing_count(); ++c) {
    const int t0 = ts[at(owner[at(c * 4)])].tag, t1 = ts[at(owner[at(c * 4 + 1)])].tag;
    if (t0 == t1) continue;
    out[{std::min(t0, t1), std::max(t0, t1)}] += signs[at(c)];
  }
  std::erase_if(out, [](const auto& kv) { return kv.second == 0; });
  return out;
}

namespace {

bool self_touch_free(const SurfaceDiagram& d, Split kind) {
  const int n = d.crossing_count();
  Tracer tracer(d);
  Tracer::Census census;
  const auto res = resolutions(d, std::vector<Split>(at(n), kind));
  tracer.run(res, census);
  for (int c = 0; c < n; ++c) {
    const int mate0 = resolved_mate(res[at(c)], 0);
    const int other = mate0 == 1 ? 2 : 1;
    if (census.loop_of[at(c * 4)] == census.loop_of[at(c * 4 + other)]) return false;
  }
  return true;
}

bool switch_lowers(const SurfaceDiagram& d, Split kind) {
  const int n = d.crossing_count();
  Tracer tracer(d);
  Tracer::Census census;
  std::vector<Split> splits(at(n), kind);
  tracer.run(resolutions(d, splits), census);
  const int base = census.total;
  for (int c = 0; c < n; ++c) {
    splits[at(c)] = kind == Split::A ? Split::B : Split::A;
    tracer.run(resolutions(d, splits), census);
    splits[at(c)] = kind;
    if (census.total >= base) return false;
  }
  return true;
}

}  // namespace

Adequacy adequacy(const SurfaceDiagram& d) { return {self_touch_free(d, Split::A), self_touch_free(d, Split::B)}; }

Adequacy adequacy_by_switching(const SurfaceDiagram& d) {
  return {switch_lowers(d, Split::A), switch_lowers(d, Split::B)};
}

SurfaceDiagram r_parallel(const SurfaceDiagram& d, int r) {
  if (r < 1) throw WeaveError("parallel count must be >= 1");
  if (!d.slots_well_formed()) throw MalformedDiagram("diagram has unattached or doubly used slots");
  const int n = d.crossing_count();
  // Row k runs along slots 2 -> 0, column l along slots 3 -> 1.
  auto grid = [&](int c, int k, int l) { return c * r * r + k * r + l; };
  // Port p on side s, counted counterclockwise around the original crossing.
  auto port = [&](Dart x, int p) -> Dart {
    switch (x.slot) {
      case 0:
        return {grid(x.crossing, p, r - 1), 0};
      case 1:
        return {grid(x.crossing, r - 1, r - 1 - p), 1};
      case 2:
        return {grid(x.crossing, r - 1 - p, 0), 2};
      default:
        return {grid(x.crossing, 0, p), 3};
    }
  };
  std::vector<Crossing> cs;
  cs.reserve(at(n * r * r));
  for (int c = 0; c < n; ++c)
    for (int i = 0; i < r * r; ++i) cs.push_back(d.crossings()[at(c)]);
  std::vector<Edge> es;
  for (int c = 0; c < n; ++c) {
    for (int k = 0; k < r; ++k) {
      for (int l = 0; l < r; ++l) {
        if (l + 1 < r) es.push_back({{Dart{grid(c, k, l), 0}, Dart{grid(c, k, l + 1), 2}}, {}, -1});
        if (k + 1 < r) es.push_back({{Dart{grid(c, k, l), 1}, Dart{grid(c, k + 1, l), 3}}, {}, -1});
      }
    }
  }
  for (const auto& e : d.edges())
    for (int k = 0; k < r; ++k) es.push_back({{port(e.ends[0], k), port(e.ends[1], r - 1 - k)}, e.word, -1});
  std::vector<FreeLoop> loops;
  for (const auto& l : d.loops())
    for (int k = 0; k < r; ++k) loops.push_back({l.word, -1});
  return label_threads(SurfaceDiagram(d.genus(), std::move(cs), std::move(es), std::move(loops)));
}

DegreeBoundsReport degree_bounds_check(const SurfaceDiagram& d, const BracketOptions& opts) {
  DegreeBoundsReport rep;
  const int n = d.crossing_count();
  Tracer tracer(d);
  Tracer::Census census;
  tracer.run(resolutions(d, std::vector<Split>(at(n), Split::A)), census);
  rep.loops_all_a = census.total;
  tracer.run(resolutions(d, std::vector<Split>(at(n), Split::B)), census);
  rep.loops_all_b = census.total;
  rep.max_bound = n + 2 * rep.loops_all_a - 2;
  rep.min_bound = -n - 2 * rep.loops_all_b + 2;
  const auto stats = degree_stats(d, bracket(d, opts));
  rep.maxdeg = stats.maxdeg;
  rep.mindeg = stats.mindeg;
  rep.max_ok = stats.has_terms && rep.maxdeg <= rep.max_bound;
  rep.min_ok = stats.has_terms && rep.mindeg >= rep.min_bound;
  rep.max_tight = stats.has_terms && rep.maxdeg == rep.max_bound;
  rep.min_tight = stats.has_terms && rep.mindeg == rep.min_bound;
  rep.adequate = adequacy(d);
  return rep;
}

bool jones_skein_holds(const SurfaceDiagram& d, int c, const BracketOptions& opts) {
  const auto o = reference_orientation(d);
  const int sign = crossing_signs(d, o)[at(c)];
  auto cs = d.crossings();
  auto& x = cs[at(c)];
  x.over = x.over == OverAxis::Axis13 ? OverAxis::Axis02 : OverAxis::Axis13;
  const SurfaceDiagram switched = d.with_crossings(std::move(cs));

  const int over_parity = static_cast<int>(d.crossings()[at(c)].over);
  const int over_in = (out_slot(o, c, over_parity) + 2) & 3;
  const int under_out = out_slot(o, c, 1 - over_parity);
  std::vector<Resolution> res(at(d.crossing_count()), Resolution::Keep);
  res[at(c)] = resolved_mate(Resolution::Pair01, over_in) == under_out ? Resolution::Pair01 : Resolution::Pair12;
  const SurfaceDiagram smoothed = dissolve(d, res);
  Orientation o0;
  for (int i = 0; i < d.crossing_count() * 4; ++i)
    if (i / 4 != c) o0.push_back(o[at(i)]);

  const auto f = kauffman_f(d, o, opts);
  const auto f_switched = kauffman_f(switched, o, opts);
  const auto f0 = kauffman_f(smoothed, o0, opts);
  const auto& f_plus = sign > 0 ? f : f_switched;
  const auto& f_minus = sign > 0 ? f_switched : f;
  const auto lhs = f_plus * LaurentPoly::monomial(1, 4) - f_minus * LaurentPoly::monomial(1, -4);
  const auto rhs = f0 * (LaurentPoly::monomial(1, -2) - LaurentPoly::monomial(1, 2));
  return lhs == rhs;
}

}  // namespace weave
