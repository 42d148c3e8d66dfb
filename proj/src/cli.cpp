#include "weave/cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <json.hpp>
#include <ostream>
#include <sstream>

#include "weave/canonical.hpp"
#include "weave/diagram_io.hpp"
#include "weave/errors.hpp"
#include "weave/invariants.hpp"
#include "weave/moves.hpp"
#include "weave/tessellation.hpp"

namespace weave {

using Json = nlohmann::ordered_json;

std::vector<BuildSpec> standard_builds() {
  return {
      {"square-cr-2", "(4,4,4,4)", "Cr", 1, 2, "1,2:1,1"},
      {"square-4br1-1", "(4,4,4,4)", "4Br", 1, 1, ""},
      {"square-4br1-2", "(4,4,4,4)", "4Br", 1, 2, ""},
      {"kagome-cr-1", "(3,6,3,6)", "Cr", 1, 1, "alt"},
      {"kagome-cr-2", "(3,6,3,6)", "Cr", 1, 2, "alt"},
      {"triangular-cr-1", "(3,3,3,3,3,3)", "Cr", 1, 1, "alt"},
      {"honeycomb-3br1-1", "(6,6,6)", "3Br", 1, 1, "alt"},
      {"honeycomb-3br1-2", "(6,6,6)", "3Br", 1, 2, "alt"},
      {"honeycomb-3cr1-1", "(6,6,6)", "3Cr", 1, 1, "alt"},
  };
}

SurfaceDiagram build_diagram(const BuildSpec& spec) {
  const auto tiling = build_tiling(parse_vertex_symbol(spec.tiling), spec.scale);
  auto d = transform(tiling, parse_method(spec.method, spec.m));
  if (classify(d) == Classification::Weave) d = assign_weaving_map(d, parse_sequence(spec.seq));
  return label_threads(d);
}

namespace {

struct Globals {
  int parallel = 1;
  int budget = kDefaultCrossingBudget;
  std::string format = "text";
  bool timings = false;
};

void render_text(std::ostream& out, const Json& j, const std::string& prefix) {
  if (j.is_object()) {
    for (const auto& [k, v] : j.items()) render_text(out, v, prefix.empty() ? k : prefix + "." + k);
    return;
  }
  if (j.is_array()) {
    const bool scalars = std::all_of(j.begin(), j.end(), [](const Json& x) { return !x.is_structured(); });
    if (scalars) {
      out << prefix << ":";
      for (std::size_t i = 0; i < j.size(); ++i) out << (i ? ", " : " ") << (j[i].is_string() ? j[i].get<std::string>() : j[i].dump());
      out << "\n";
    } else {
      for (std::size_t i = 0; i < j.size(); ++i) render_text(out, j[i], prefix + "[" + std::to_string(i) + "]");
    }
    return;
  }
  if (j.is_string()) {
    const auto s = j.get<std::string>();
    if (s.find('\n') == std::string::npos) {
      out << prefix << ": " << s << "\n";
    } else {
      out << prefix << ":\n";
      std::istringstream is(s);
      for (std::string line; std::getline(is, line);) out << "  " << line << "\n";
    }
    return;
  }
  out << prefix << ": " << j.dump() << "\n";
}

void emit(std::ostream& out, const Globals& g, const Json& report) {
  if (g.format == "json-report") {
    out << report.dump(2) << "\n";
  } else {
    render_text(out, report, "");
  }
}

std::string vec_text(const HomologyVector& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return s + ")";
}

Json set_json(const WindingSet& s) {
  Json a = Json::array();
  for (const auto& v : s) a.push_back(vec_text(v));
  return a;
}

Json matrix_json(const IntMatrix& m) {
  Json a = Json::array();
  for (const auto& row : m) {
    std::string s;
    for (std::size_t i = 0; i < row.size(); ++i) s += (i ? " " : "") + std::to_string(row[i]);
    a.push_back(s);
  }
  return a;
}

BracketOptions bracket_opts(const Globals& g) { return {g.budget, g.parallel}; }

SurfaceDiagram load(const std::string& path) { return read_diagram_file(path); }

struct CorpusItem {
  std::string name;
  SurfaceDiagram d;
};

std::vector<CorpusItem> load_corpus(const std::string& dir) {
  std::vector<CorpusItem> out;
  if (dir.empty()) {
    for (const auto& b : standard_builds()) out.push_back({b.name, build_diagram(b)});
    return out;
  }
  if (!std::filesystem::is_directory(dir)) throw ParseError("corpus directory not found: " + dir);
  std::vector<std::filesystem::path> files;
  for (const auto& e : std::filesystem::directory_iterator(dir))
    if (e.is_regular_file() && e.path().extension() == ".wv") files.push_back(e.path());
  std::sort(files.begin(), files.end());
  for (const auto& f : files) out.push_back({f.filename().string(), load(f.string())});
  return out;
}

// Writhe after a twist needs the thread orientations carried along: r' = M^-1 r.
HomologyVector transported_reference(const IntMatrix& m, const HomologyVector& r) {
  return {m[1][1] * r[0] - m[0][1] * r[1], -m[1][0] * r[0] + m[0][0] * r[1]};
}

bool tait_candidate(const SurfaceDiagram& d) {
  return d.crossing_count() > 0 && validate(d).ok() && is_alternating(d) && is_reduced(d).ok &&
         is_minimal_size(d);
}

WindingSet parse_winding_set(const std::string& text, int genus) {
  WindingSet out;
  std::size_t i = 0;
  while (true) {
    i = text.find('(', i);
    if (i == std::string::npos) break;
    const auto close = text.find(')', i);
    if (close == std::string::npos) throw ParseError("unbalanced parenthesis in winding set");
    HomologyVector v;
    std::istringstream is(text.substr(i + 1, close - i - 1));
    for (std::string part; std::getline(is, part, ',');) {
      try {
        std::size_t used = 0;
        v.push_back(std::stoll(part, &used));
        if (part.find_first_not_of(" \t", used) != std::string::npos) throw std::invalid_argument(part);
      } catch (const std::exception&) {
        throw ParseError("bad winding entry: " + part);
      }
    }
    if (static_cast<int>(v.size()) != 2 * genus) throw ParseError("winding vector " + vec_text(v) + " needs 2g entries");
    out.push_back(std::move(v));
    i = close + 1;
  }
  return out;
}

bool move_relation_holds(const BracketValue& before, const BracketValue& after, MoveKind kind) {
  if (kind != MoveKind::R1_add && kind != MoveKind::R1_remove) return normalized(before) == normalized(after);
  const auto& small = kind == MoveKind::R1_add ? before : after;
  const auto& big = kind == MoveKind::R1_add ? after : before;
  const auto target = normalized(big);
  return normalized(small * LaurentPoly::monomial(-1, 3)) == target ||
         normalized(small * LaurentPoly::monomial(-1, -3)) == target;
}

struct BuildArgs {
  std::string tiling, method, seq, output;
  int m = 1;
  int scale = 1;
};

int cmd_build(const Globals& g, const BuildArgs& a, std::ostream& out) {
  const auto tiling = build_tiling(parse_vertex_symbol(a.tiling), a.scale);
  auto d = transform(tiling, parse_method(a.method, a.m));
  const auto cls = classify(d);
  if (cls == Classification::Weave) d = assign_weaving_map(d, parse_sequence(a.seq));
  d = label_threads(d);
  Json r;
  r["command"] = "build";
  r["tiling"] = tiling.symbol.to_string();
  r["method"] = a.method;
  r["m"] = a.m;
  r["scale"] = a.scale;
  r["classification"] = to_string(cls);
  r["crossings"] = d.crossing_count();
  r["loops"] = d.loops().size();
  const auto ts = threads(d);
  r["components"] = ts.size();
  r["null_homologous"] = std::count_if(ts.begin(), ts.end(), [](const Thread& t) { return is_zero(t.homology); });
  if (cls == Classification::Weave) {
    Json sets = Json::array();
    for (const auto& s : thread_sets(d, ts)) {
      Json js;
      js["direction"] = vec_text(s.direction);
      js["threads"] = s.threads.size();
      sets.push_back(js);
    }
    r["thread_sets"] = sets;
  }
  const auto text = format_diagram(d, true);
  if (!a.output.empty()) {
    std::ofstream f(a.output);
    if (!f) throw ParseError("cannot write " + a.output);
    f << text;
    r["output"] = a.output;
  } else {
    r["diagram"] = text;
  }
  emit(out, g, r);
  return exit_code::ok;
}

int cmd_analyze(const Globals& g, const std::string& path, std::ostream& out) {
  const auto t0 = std::chrono::steady_clock::now();
  const auto d = load(path);
  const auto report = validate(d);
  Json r;
  r["command"] = "analyze";
  r["file"] = std::filesystem::path(path).filename().string();
  r["crossings"] = d.crossing_count();
  r["genus"] = d.genus();
  r["valid"] = report.ok();
  r["violations"] = report.violations;
  if (!report.ok()) {
    emit(out, g, r);
    return exit_code::violation;
  }
  const int c = d.crossing_count();
  const int f = c > 0 ? static_cast<int>(faces(d).size()) : 0;
  r["faces"] = f;
  r["euler_ok"] = c == 0 || f == c + 2 - 2 * d.genus();
  const auto ts = threads(d);
  r["threads"] = ts.size();
  Json sets = Json::array();
  for (const auto& s : thread_sets(d, ts)) {
    Json js;
    js["direction"] = vec_text(s.direction);
    js["threads"] = s.threads;
    sets.push_back(js);
  }
  r["thread_sets"] = sets;
  r["alternating"] = is_alternating(d);
  r["proper"] = c == 0 || is_proper(d).ok;
  r["reduced"] = c == 0 || is_reduced(d).ok;
  const auto opts = bracket_opts(g);
  const auto b = bracket(d, opts);
  if (c > 0) {
    const auto adq = adequacy(d);
    r["adequate_plus"] = adq.plus;
    r["adequate_minus"] = adq.minus;
    r["minimal_size"] = is_minimal_size(d);
  }
  r["writhe"] = writhe(d);
  r["bracket"] = format_bracket(b);
  r["kauffman_f"] = format_bracket(kauffman_f(d, opts));
  r["jones"] = format_bracket(jones(d, opts), "q");
  const auto st = degree_stats(d, b);
  Json deg;
  deg["maxdeg"] = st.maxdeg;
  deg["mindeg"] = st.mindeg;
  deg["span"] = st.span;
  deg["span_bound"] = 4 * c - 4 * d.genus();
  deg["colorable"] = st.colorable;
  if (st.colorable) {
    deg["white"] = st.white;
    deg["black"] = st.black;
  }
  r["degree"] = deg;
  r["winding_set"] = set_json(winding_set(b));
  Json link = Json::array();
  for (const auto& [pair, value] : linking_by_tag(d, reference_orientation(d)))
    link.push_back(std::to_string(pair.first) + "," + std::to_string(pair.second) + ": " + std::to_string(value));
  r["linking"] = link;
  if (g.timings)
    r["seconds"] = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  emit(out, g, r);
  return exit_code::ok;
}

struct VerifyArgs {
  std::string suite, corpus;
  int steps = -1;
  std::uint64_t seed = 1;
  int cap = 12;
  bool mutate = false;
};

Json counterexample(const SurfaceDiagram& start, const MoveTrace& prefix, const std::string& what) {
  Json j;
  j["failure"] = what;
  j["diagram"] = format_diagram(start, true);
  j["trace"] = format_trace(prefix);
  return j;
}

Json verify_invariance(const Globals& g, const CorpusItem& item, const VerifyArgs& a, bool& pass) {
  Json j;
  j["name"] = item.name;
  const auto& d = item.d;
  const int cap = std::max(a.cap, d.crossing_count() + 4);
  if (cap > g.budget || !validate(d).ok()) {
    j["status"] = "skipped";
    return j;
  }
  const int steps = a.steps < 0 ? 200 : a.steps;
  const auto trace = fuzz(d, steps, a.seed, cap);
  const auto opts = bracket_opts(g);
  const auto f0 = normalized(kauffman_f(d, opts));
  const auto link0 = linking_by_tag(d, reference_orientation(d));
  SurfaceDiagram cur = d;
  BracketValue b_cur = bracket(cur, opts);
  MoveTrace prefix;
  prefix.seed = trace.seed;
  for (const auto& m : trace.moves) {
    prefix.moves.push_back(m);
    SurfaceDiagram next = apply_move(cur, m);
    if (a.mutate && m.kind != MoveKind::R1_add && m.kind != MoveKind::R1_remove && next.crossing_count() > 0) {
      auto cs = next.crossings();
      cs[0].over = cs[0].over == OverAxis::Axis02 ? OverAxis::Axis13 : OverAxis::Axis02;
      next = next.with_crossings(cs);
    }
    std::string failure;
    const auto b_next = bracket(next, opts);
    if (!validate(next).ok()) {
      failure = "invalid diagram";
    } else if (!move_relation_holds(b_cur, b_next, m.kind)) {
      failure = "bracket changed";
    } else if (normalized(kauffman_f(next, opts)) != f0) {
      failure = "kauffman_f changed";
    } else if (linking_by_tag(next, reference_orientation(next)) != link0) {
      failure = "linking numbers changed";
    }
    if (!failure.empty()) {
      pass = false;
      j["status"] = "fail";
      j["counterexample"] = counterexample(d, prefix, failure + " after " + format_move(m));
      return j;
    }
    cur = std::move(next);
    b_cur = b_next;
  }
  j["status"] = "pass";
  j["moves"] = trace.moves.size();
  j["final_crossings"] = cur.crossing_count();
  j["minimal_size_before"] = is_minimal_size(d);
  j["minimal_size_after"] = is_minimal_size(cur);
  return j;
}

Json verify_tait1(const Globals& g, const CorpusItem& item, const VerifyArgs& a, bool& pass) {
  Json j;
  j["name"] = item.name;
  const auto& d = item.d;
  if (d.crossing_count() > g.budget || !tait_candidate(d)) {
    j["status"] = "skipped";
    return j;
  }
  const int c = d.crossing_count();
  const auto bounds = crossing_number_bounds(d, 8, a.seed, bracket_opts(g));
  const auto trace = fuzz(d, a.steps < 0 ? 1000 : a.steps, a.seed, c + 6);
  int min_c = c;
  SurfaceDiagram cur = d;
  for (const auto& m : trace.moves) {
    cur = apply_move(cur, m);
    min_c = std::min(min_c, cur.crossing_count());
  }
  const bool ok = bounds.lower_certified && bounds.lower == c && min_c >= c;
  j["status"] = ok ? "pass" : "fail";
  j["crossings"] = c;
  j["lower"] = bounds.lower;
  j["lower_certified"] = bounds.lower_certified;
  j["upper"] = bounds.upper;
  j["fuzz_min_crossings"] = min_c;
  if (!ok) {
    pass = false;
    j["counterexample"] = counterexample(d, trace, "crossing number bound not realized");
  }
  return j;
}

Json verify_tait2(const Globals& g, const CorpusItem& item, const VerifyArgs& a, bool& pass) {
  Json j;
  j["name"] = item.name;
  const auto& d = item.d;
  if (d.genus() != 1 || d.crossing_count() > g.budget || !tait_candidate(d)) {
    j["status"] = "skipped";
    return j;
  }
  const int c = d.crossing_count();
  const int w0 = writhe(d);
  Json pairs = Json::array();
  int checked = 0;
  bool ok = true;
  const std::array<std::pair<TwistCurve, int>, 3> twists{{{TwistCurve::Alpha, 1}, {TwistCurve::Beta, 1}, {TwistCurve::Alpha, -1}}};
  for (const auto& [curve, dir] : twists) {
    Json p;
    p["twist"] = std::string(curve == TwistCurve::Alpha ? "alpha" : "beta") + (dir > 0 ? "+" : "-");
    const auto twisted = dehn_twist_diagram(d, curve, dir);
    const auto trace = fuzz(twisted, a.steps < 0 ? 40 : a.steps, a.seed, c + 4);
    const auto other = simplify(replay(twisted, trace), 8, a.seed);
    if (other.crossing_count() != c || !is_alternating(other) || !is_reduced(other).ok) {
      p["status"] = "not re-reduced";
      pairs.push_back(p);
      continue;
    }
    const auto ref = transported_reference(twist_matrix(curve, dir), default_reference(1));
    const int w1 = writhe(other, reference_orientation(other, ref));
    ++checked;
    p["writhe"] = std::to_string(w0) + " = " + std::to_string(w1);
    p["status"] = w0 == w1 ? "pass" : "fail";
    if (w0 != w1) {
      ok = false;
      p["counterexample"] = counterexample(twisted, trace, "writhe differs");
    }
    pairs.push_back(p);
  }
  ok = ok && checked > 0;
  if (!ok) pass = false;
  j["status"] = ok ? "pass" : "fail";
  j["pairs"] = pairs;
  return j;
}

Json verify_oracle(const Globals& g, const CorpusItem& item, bool& pass) {
  Json j;
  j["name"] = item.name;
  const auto& d = item.d;
  if (d.crossing_count() > std::min(10, g.budget) || !validate(d).ok()) {
    j["status"] = "skipped";
    return j;
  }
  const auto opts = bracket_opts(g);
  const bool state_sum = normalized(bracket(d, opts)) == normalized(bracket_skein(d, g.budget));
  bool skein = true;
  if (d.crossing_count() <= 8)
    for (int c = 0; c < d.crossing_count(); ++c) skein = skein && jones_skein_holds(d, c, opts);
  const bool ok = state_sum && skein;
  if (!ok) pass = false;
  j["status"] = ok ? "pass" : "fail";
  j["state_sum_equals_skein"] = state_sum;
  j["jones_skein_identity"] = skein;
  if (!ok) j["counterexample"] = counterexample(d, {}, "oracle mismatch");
  return j;
}

int cmd_verify(const Globals& g, const VerifyArgs& a, std::ostream& out) {
  const auto corpus = load_corpus(a.corpus);
  Json r;
  r["command"] = "verify";
  r["suite"] = a.suite;
  r["seed"] = a.seed;
  Json items = Json::array();
  bool pass = true;
  for (const auto& item : corpus) {
    if (a.suite == "invariance") {
      items.push_back(verify_invariance(g, item, a, pass));
    } else if (a.suite == "tait1") {
      items.push_back(verify_tait1(g, item, a, pass));
    } else if (a.suite == "tait2") {
      items.push_back(verify_tait2(g, item, a, pass));
    } else {
      items.push_back(verify_oracle(g, item, pass));
    }
  }
  const auto checked = std::count_if(items.begin(), items.end(), [](const Json& x) { return x["status"] != "skipped"; });
  if (checked == 0) pass = false;
  r["checked"] = checked;
  r["items"] = items;
  r["result"] = pass ? "pass" : "fail";
  emit(out, g, r);
  return pass ? exit_code::ok : exit_code::violation;
}

struct FuzzArgs {
  std::string file, trace;
  int steps = 100;
  std::uint64_t seed = 1;
  int cap = 12;
  int walks = 1;
};

int cmd_fuzz(const Globals& g, const FuzzArgs& a, std::ostream& out) {
  const auto d = load(a.file);
  const auto report = validate(d);
  if (!report.ok()) throw MalformedDiagram("input diagram is malformed: " + report.violations.front());
  std::vector<std::uint64_t> seeds;
  for (int i = 0; i < a.walks; ++i) seeds.push_back(a.seed + static_cast<std::uint64_t>(i));
  const auto traces = fuzz_many(d, a.steps, seeds, a.cap, g.parallel);
  Json r;
  r["command"] = "fuzz";
  r["steps"] = a.steps;
  r["cap"] = a.cap;
  Json walks = Json::array();
  bool pass = true;
  const auto f0 = d.crossing_count() <= g.budget ? normalized(kauffman_f(d, bracket_opts(g))) : BracketValue{};
  for (std::size_t i = 0; i < traces.size(); ++i) {
    const auto& t = traces[i];
    const auto end = replay(d, t);
    Json w;
    w["seed"] = t.seed;
    w["moves"] = t.moves.size();
    w["final_crossings"] = end.crossing_count();
    w["final_valid"] = validate(end).ok();
    w["minimal_size_before"] = is_minimal_size(d);
    w["minimal_size_after"] = is_minimal_size(end);
    if (d.crossing_count() <= g.budget && end.crossing_count() <= g.budget) {
      const bool same = normalized(kauffman_f(end, bracket_opts(g))) == f0;
      w["kauffman_f_preserved"] = same;
      pass = pass && same;
    }
    pass = pass && validate(end).ok();
    if (!a.trace.empty()) {
      const std::string path = i == 0 ? a.trace : a.trace + "." + std::to_string(i);
      std::ofstream f(path);
      if (!f) throw ParseError("cannot write " + path);
      f << format_trace(t);
      w["trace_file"] = std::filesystem::path(path).filename().string();
    } else {
      Json lines = Json::array();
      for (const auto& m : t.moves) lines.push_back(format_move(m));
      w["trace"] = lines;
    }
    walks.push_back(w);
  }
  r["walks"] = walks;
  r["result"] = pass ? "pass" : "fail";
  emit(out, g, r);
  return pass ? exit_code::ok : exit_code::violation;
}

struct CanonArgs {
  std::string file, set;
  int genus = 1;
};

int cmd_canonicalize(const Globals& g, const CanonArgs& a, std::ostream& out) {
  WindingSet v;
  int genus = a.genus;
  if (!a.file.empty()) {
    const auto d = load(a.file);
    genus = d.genus();
    v = winding_set(bracket(d, bracket_opts(g)));
  } else {
    v = parse_winding_set(a.set, genus);
  }
  const auto cf = canonical_form(v, genus);
  Json r;
  r["command"] = "canonicalize";
  r["genus"] = genus;
  r["input"] = set_json(v);
  r["q_before"] = cf.q_before;
  r["q_after"] = cf.q_after;
  r["u"] = matrix_json(cf.u);
  r["set"] = set_json(cf.set);
  r["certified"] = cf.certified;
  emit(out, g, r);
  return exit_code::ok;
}

}  // namespace

namespace {

// Exception class name for diagnostics.
const char* error_kind(const WeaveError& e) {
#define WEAVE_KIND(T) \
  if (dynamic_cast<const T*>(&e)) return #T;
  WEAVE_KIND(ParseError)
  WEAVE_KIND(MalformedDiagram)
  WEAVE_KIND(ZeroHomologyThread)
  WEAVE_KIND(NotCheckerboardColorable)
  WEAVE_KIND(SyntaxError)
  WEAVE_KIND(InfeasibleSymbol)
  WEAVE_KIND(UnsupportedTiling)
  WEAVE_KIND(OddValencyForCr)
  WEAVE_KIND(InconsistentSequence)
  WEAVE_KIND(MixedSetCrossing)
  WEAVE_KIND(NonSymplectic)
  WEAVE_KIND(UnsupportedGenus)
  WEAVE_KIND(IllegalMove)
#undef WEAVE_KIND
  return "WeaveError";
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Periodic weave diagrams: build, analyze, verify, fuzz, canonicalize"};
  app.require_subcommand(1);
  app.fallthrough();
  Globals g;
  if (const char* env = std::getenv("WEAVE_CROSSING_BUDGET")) {
    try {
      g.budget = std::stoi(env);
    } catch (const std::exception&) {
      err << "error: WEAVE_CROSSING_BUDGET is not an integer\n";
      return exit_code::input_error;
    }
  }
  app.add_option("--parallel", g.parallel, "worker threads")->check(CLI::PositiveNumber);
  app.add_option("--crossing-budget", g.budget, "largest crossing count for state sums");
  app.add_option("--format", g.format, "report format")->check(CLI::IsMember({"text", "json-report"}));
  app.add_flag("--timings", g.timings, "add wall-clock timings to reports");

  BuildArgs ba;
  auto* build = app.add_subcommand("build", "build a diagram from a tessellation");
  build->add_option("--tiling", ba.tiling, "vertex symbol, e.g. (4,4,4,4)")->required();
  build->add_option("--method", ba.method, "Cr, nCr or nBr, optionally with the valency")->required();
  build->add_option("--m", ba.m, "twist count per edge");
  build->add_option("--scale", ba.scale, "block size k of the k x k cell")->check(CLI::PositiveNumber);
  build->add_option("--seq", ba.seq, "crossing sequences i,j:p,q;... or alt");
  build->add_option("-o,--output", ba.output, "diagram file to write");

  std::string analyze_file;
  auto* analyze = app.add_subcommand("analyze", "report invariants of a diagram file");
  analyze->add_option("file", analyze_file)->required();

  VerifyArgs va;
  auto* verify = app.add_subcommand("verify", "run a verification suite");
  verify->add_option("--suite", va.suite)->required()->check(CLI::IsMember({"tait1", "tait2", "invariance", "oracle"}));
  verify->add_option("--corpus", va.corpus, "directory of .wv files (default: built-in tessellation builds)");
  verify->add_option("--steps", va.steps, "fuzz steps per diagram")->check(CLI::NonNegativeNumber);
  verify->add_option("--seed", va.seed);
  verify->add_option("--cap", va.cap, "crossing cap for fuzz walks")->check(CLI::PositiveNumber);
  verify->add_flag("--mutate", va.mutate, "corrupt every R2/R3 result (harness self-test)");

  FuzzArgs fa;
  auto* fz = app.add_subcommand("fuzz", "seeded random Reidemeister walk");
  fz->add_option("file", fa.file)->required();
  fz->add_option("--steps", fa.steps)->check(CLI::NonNegativeNumber);
  fz->add_option("--seed", fa.seed);
  fz->add_option("--cap", fa.cap)->check(CLI::PositiveNumber);
  fz->add_option("--trace", fa.trace, "trace file to write");
  fz->add_option("--walks", fa.walks, "independent walks with seeds seed, seed+1, ...")->check(CLI::PositiveNumber);

  CanonArgs ca;
  auto* canon = app.add_subcommand("canonicalize", "minimal winding form under symplectic changes of basis");
  auto* canon_file = canon->add_option("file", ca.file, "diagram file");
  auto* canon_set = canon->add_option("--set", ca.set, "winding set, e.g. \"(1,0),(5,3)\"");
  canon->add_option("--genus", ca.genus)->check(CLI::PositiveNumber);
  canon_file->excludes(canon_set);

  std::vector<std::string> rev(args.rbegin(), args.rend());
  try {
    app.parse(rev);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return exit_code::ok;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return exit_code::input_error;
  }
  if (g.budget < 1) {
    err << "error: crossing budget must be at least 1\n";
    return exit_code::input_error;
  }
  try {
    if (*build) return cmd_build(g, ba, out);
    if (*analyze) return cmd_analyze(g, analyze_file, out);
    if (*verify) return cmd_verify(g, va, out);
    if (*fz) return cmd_fuzz(g, fa, out);
    if (*canon) {
      if (ca.file.empty() && canon_set->count() == 0) {
        err << "error: canonicalize needs a diagram file or --set\n";
        return exit_code::input_error;
      }
      return cmd_canonicalize(g, ca, out);
    }
  } catch (const TooManyCrossings& e) {
    err << "error: TooManyCrossings: " << e.what() << "\n";
    return exit_code::budget_exceeded;
  } catch (const WeaveError& e) {
    err << "error: " << error_kind(e) << ": " << e.what() << "\n";
    return exit_code::input_error;
  }
  return exit_code::input_error;
}

}  // namespace weave
