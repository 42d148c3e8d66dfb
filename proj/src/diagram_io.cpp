#include "weave/diagram_io.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

#include "weave/errors.hpp"

namespace weave {
namespace {

[[noreturn]] void fail(int line, const std::string& msg) {
  throw ParseError("line " + std::to_string(line) + ": " + msg);
}

int to_int(std::string_view s, int line) {
  int v = 0;
  const auto* end = s.data() + s.size();
  auto [p, ec] = std::from_chars(s.data(), end, v);
  if (ec != std::errc() || p != end) fail(line, "expected integer, got '" + std::string(s) + "'");
  return v;
}

Dart parse_dart(std::string_view s, int line) {
  if (s.empty() || s[0] != 'c') fail(line, "expected cX.s, got '" + std::string(s) + "'");
  const auto dot = s.find('.');
  if (dot == std::string_view::npos) fail(line, "expected cX.s, got '" + std::string(s) + "'");
  const int slot = to_int(s.substr(dot + 1), line);
  if (slot < 0 || slot > 3) fail(line, "slot must be 0..3");
  return {to_int(s.substr(1, dot - 1), line), slot};
}

// Parses trailing key=value fields into word/tag.
void parse_fields(std::istringstream& in, int genus, int line, BoundaryWord& word, int& tag) {
  std::string tok;
  bool have_word = false;
  while (in >> tok) {
    if (tok.rfind("word=", 0) == 0) {
      try {
        word = parse_word(std::string_view(tok).substr(5), genus);
      } catch (const ParseError& e) {
        fail(line, e.what());
      }
      have_word = true;
    } else if (tok.rfind("tag=", 0) == 0) {
      tag = to_int(std::string_view(tok).substr(4), line);
    } else {
      fail(line, "unexpected field '" + tok + "'");
    }
  }
  if (!have_word) fail(line, "missing word=");
}

}  // namespace

SurfaceDiagram parse_diagram(std::string_view text) {
  int genus = -1;
  std::vector<Crossing> crossings;
  std::vector<Edge> edges;
  std::vector<FreeLoop> loops;
  std::istringstream all{std::string(text)};
  std::string raw;
  int line = 0;
  while (std::getline(all, raw)) {
    ++line;
    if (const auto hash = raw.find('#'); hash != std::string::npos) raw.resize(hash);
    std::istringstream in(raw);
    std::string kw;
    if (!(in >> kw)) continue;
    if (kw == "genus") {
      std::string g;
      if (!(in >> g) || genus != -1) fail(line, "bad or repeated genus line");
      genus = to_int(g, line);
      if (genus < 1) fail(line, "genus must be >= 1");
      continue;
    }
    if (genus < 1) fail(line, "genus must be declared first");
    if (kw == "crossing") {
      std::string id, over;
      if (!(in >> id >> over)) fail(line, "expected: crossing cK over=13|02");
      if (id != "c" + std::to_string(crossings.size())) fail(line, "crossings must be declared in order c0, c1, ...");
      Crossing c;
      if (over == "over=13") {
        c.over = OverAxis::Axis13;
      } else if (over == "over=02") {
        c.over = OverAxis::Axis02;
      } else {
        fail(line, "over must be 13 or 02");
      }
      crossings.push_back(c);
    } else if (kw == "edge") {
      std::string a, b;
      if (!(in >> a >> b)) fail(line, "expected: edge cX.s cY.t word=...");
      Edge e;
      e.ends = {parse_dart(a, line), parse_dart(b, line)};
      parse_fields(in, genus, line, e.word, e.tag);
      edges.push_back(std::move(e));
    } else if (kw == "loop") {
      FreeLoop l;
      parse_fields(in, genus, line, l.word, l.tag);
      loops.push_back(std::move(l));
    } else {
      fail(line, "unknown declaration '" + kw + "'");
    }
  }
  if (genus < 1) throw ParseError("missing genus declaration");
  for (const auto& e : edges)
    for (const auto& end : e.ends)
      if (end.crossing >= static_cast<int>(crossings.size()))
        throw ParseError("edge references undeclared crossing c" + std::to_string(end.crossing));
  return SurfaceDiagram(genus, std::move(crossings), std::move(edges), std::move(loops));
}

SurfaceDiagram read_diagram_file(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw ParseError("cannot open " + path);
  std::stringstream ss;
  ss << f.rdbuf();
  return parse_diagram(ss.str());
}

std::string format_diagram(const SurfaceDiagram& d, bool with_tags) {
  std::ostringstream os;
  os << "genus " << d.genus() << '\n';
  for (int c = 0; c < d.crossing_count(); ++c) {
    os << "crossing c" << c << " over="
       << (d.crossings()[static_cast<std::size_t>(c)].over == OverAxis::Axis13 ? "13" : "02") << '\n';
  }
  for (const auto& e : d.edges()) {
    os << "edge c" << e.ends[0].crossing << '.' << e.ends[0].slot << " c" << e.ends[1].crossing << '.'
       << e.ends[1].slot << " word=" << e.word.to_string(d.genus());
    if (with_tags) os << " tag=" << e.tag;
    os << '\n';
  }
  for (const auto& l : d.loops()) {
    os << "loop word=" << l.word.to_string(d.genus());
    if (with_tags) os << " tag=" << l.tag;
    os << '\n';
  }
  return os.str();
}

}  // namespace weave
