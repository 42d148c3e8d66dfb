#include "weave/canonical.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <optional>

#include "weave/errors.hpp"

namespace weave {
namespace {

std::size_t at(int i) { return static_cast<std::size_t>(i); }

using Vec2i = std::array<std::int64_t, 2>;

struct Gram {
  std::int64_t a = 0, b = 0, c = 0;  // [[a, b], [b, c]]
  std::int64_t norm(const Vec2i& x) const { return a * x[0] * x[0] + 2 * b * x[0] * x[1] + c * x[1] * x[1]; }
  std::int64_t dot(const Vec2i& x, const Vec2i& y) const {
    return a * x[0] * y[0] + b * (x[0] * y[1] + x[1] * y[0]) + c * x[1] * y[1];
  }
};

std::int64_t round_div(std::int64_t num, std::int64_t den) {
  // nearest integer to num / den for den > 0
  const std::int64_t twice = 2 * num + den;
  const std::int64_t q = twice / (2 * den);
  return (twice % (2 * den) != 0 && twice < 0) ? q - 1 : q;
}

WindingSet transformed(const WindingSet& v, const IntMatrix& u) {
  WindingSet out;
  out.reserve(v.size());
  for (const auto& x : v) {
    HomologyVector y(u.size(), 0);
    for (std::size_t j = 0; j < u.size(); ++j)
      for (std::size_t i = 0; i < x.size(); ++i) y[j] += x[i] * u[i][j];
    out.push_back(std::move(y));
  }
  return out;
}

WindingSet canonical_order(WindingSet v) {
  for (auto& x : v) x = normalize_sign(std::move(x));
  std::sort(v.begin(), v.end());
  return v;
}

std::int64_t frobenius(const IntMatrix& u) {
  std::int64_t s = 0;
  for (const auto& row : u)
    for (auto x : row) s += x * x;
  return s;
}

// True when (set_a, u_a) beats (set_b, u_b) under the tie-break order.
bool better(const WindingSet& set_a, const IntMatrix& u_a, const WindingSet& set_b, const IntMatrix& u_b) {
  const WindingSet da(set_a.rbegin(), set_a.rend()), db(set_b.rbegin(), set_b.rend());
  if (da != db) return da > db;
  const auto fa = frobenius(u_a), fb = frobenius(u_b);
  if (fa != fb) return fa < fb;
  return u_a < u_b;
}

IntMatrix columns(const Vec2i& u1, const Vec2i& u2) { return {{u1[0], u2[0]}, {u1[1], u2[1]}}; }

std::int64_t det(const Vec2i& u1, const Vec2i& u2) { return u1[0] * u2[1] - u1[1] * u2[0]; }

// Extended gcd: returns (g, x, y) with a x + b y = g >= 0.
std::array<std::int64_t, 3> ext_gcd(std::int64_t a, std::int64_t b) {
  if (b == 0) return a >= 0 ? std::array<std::int64_t, 3>{a, 1, 0} : std::array<std::int64_t, 3>{-a, -1, 0};
  const auto [g, x, y] = ext_gcd(b, a % b);
  return {g, y, x - (a / b) * y};
}

void consider(const WindingSet& v, const IntMatrix& u, std::optional<CanonicalForm>& best) {
  auto set = canonical_order(transformed(v, u));
  if (!best || better(set, u, best->set, best->u)) {
    if (!best) best.emplace();
    best->set = std::move(set);
    best->u = u;
  }
}

CanonicalForm canonical_genus1(const WindingSet& v) {
  Gram g;
  for (const auto& x : v) {
    g.a += x[0] * x[0];
    g.b += x[0] * x[1];
    g.c += x[1] * x[1];
  }
  std::optional<CanonicalForm> best;
  const std::int64_t dg = g.a * g.c - g.b * g.b;
  if (g.a == 0 && g.c == 0) {
    consider(v, identity_matrix(2), best);
  } else if (dg == 0) {
    // All windings are multiples of one primitive direction w.
    Vec2i w{};
    for (const auto& x : v) {
      if (x[0] != 0 || x[1] != 0) {
        const auto p = primitive_direction(x);
        w = {p[0], p[1]};
        break;
      }
    }
    const Vec2i k{-w[1], w[0]};
    const auto [gcd, px, py] = ext_gcd(w[0], w[1]);
    const Vec2i p{px, py};  // w . p = 1
    const std::int64_t kk = k[0] * k[0] + k[1] * k[1];
    const std::int64_t t0 = -round_div(p[0] * k[0] + p[1] * k[1], kk);
    for (std::int64_t t = t0 - 2; t <= t0 + 2; ++t) {
      const Vec2i c{p[0] + t * k[0], p[1] + t * k[1]};
      for (int s1 : {1, -1}) {
        for (int s2 : {1, -1}) {
          const Vec2i ks{s1 * k[0], s1 * k[1]}, cs{s2 * c[0], s2 * c[1]};
          if (det(ks, cs) == 1) consider(v, columns(ks, cs), best);
          if (det(cs, ks) == 1) consider(v, columns(cs, ks), best);
        }
      }
    }
  } else {
    // Gauss-Lagrange reduction gives the successive minima.
    Vec2i b1{1, 0}, b2{0, 1};
    while (true) {
      if (g.norm(b1) > g.norm(b2)) std::swap(b1, b2);
      const std::int64_t mu = round_div(g.dot(b1, b2), g.norm(b1));
      if (mu == 0) break;
      b2 = {b2[0] - mu * b1[0], b2[1] - mu * b1[1]};
    }
    const std::int64_t target = g.norm(b1) + g.norm(b2);
    const std::int64_t r = g.norm(b2);
    // |x_i|^2 <= r * (G^-1)_ii
    const auto bx = static_cast<std::int64_t>(std::floor(std::sqrt(static_cast<double>(r) * g.c / dg))) + 1;
    const auto by = static_cast<std::int64_t>(std::floor(std::sqrt(static_cast<double>(r) * g.a / dg))) + 1;
    std::vector<Vec2i> shortv;
    for (std::int64_t x = -bx; x <= bx; ++x)
      for (std::int64_t y = -by; y <= by; ++y)
        if ((x != 0 || y != 0) && g.norm({x, y}) <= r) shortv.push_back({x, y});
    for (const auto& u1 : shortv)
      for (const auto& u2 : shortv)
        if (det(u1, u2) == 1 && g.norm(u1) + g.norm(u2) == target) consider(v, columns(u1, u2), best);
  }
  CanonicalForm out = *best;
  out.certified = true;
  return out;
}

std::vector<IntMatrix> symplectic_generators(int genus) {
  const int n = 2 * genus;
  std::vector<IntMatrix> gens;
  auto add = [&](auto&& fill) {
    for (int s : {1, -1}) {
      IntMatrix m = identity_matrix(n);
      fill(m, s);
      if (is_symplectic(m)) gens.push_back(std::move(m));
    }
  };
  for (int i = 0; i < genus; ++i) {
    add([&](IntMatrix& m, int s) { m[at(i)][at(genus + i)] += s; });
    add([&](IntMatrix& m, int s) { m[at(genus + i)][at(i)] += s; });
    for (int j = 0; j < genus; ++j) {
      if (i == j) continue;
      add([&](IntMatrix& m, int s) {
        m[at(i)][at(j)] += s;
        m[at(genus + j)][at(genus + i)] -= s;
      });
      if (i < j) {
        add([&](IntMatrix& m, int s) {
          m[at(i)][at(genus + j)] += s;
          m[at(j)][at(genus + i)] += s;
        });
        add([&](IntMatrix& m, int s) {
          m[at(genus + i)][at(j)] += s;
          m[at(genus + j)][at(i)] += s;
        });
      }
    }
  }
  return gens;
}

CanonicalForm canonical_greedy(const WindingSet& v, int genus) {
  const auto gens = symplectic_generators(genus);
  IntMatrix u = identity_matrix(2 * genus);
  std::int64_t q = q_functional(v);
  while (true) {
    std::optional<IntMatrix> step;
    std::int64_t best_q = q;
    for (const auto& gm : gens) {
      auto cand = multiply(u, gm);
      const auto cq = q_functional(transformed(v, cand));
      if (cq < best_q) {
        best_q = cq;
        step = std::move(cand);
      }
    }
    if (!step) break;
    u = std::move(*step);
    q = best_q;
  }
  CanonicalForm out;
  out.u = u;
  out.set = canonical_order(transformed(v, u));
  out.certified = false;
  return out;
}

}  // namespace

IntMatrix identity_matrix(int n) {
  IntMatrix m(at(n), std::vector<std::int64_t>(at(n), 0));
  for (int i = 0; i < n; ++i) m[at(i)][at(i)] = 1;
  return m;
}

IntMatrix multiply(const IntMatrix& a, const IntMatrix& b) {
  IntMatrix m(a.size(), std::vector<std::int64_t>(b.empty() ? 0 : b[0].size(), 0));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t k = 0; k < b.size(); ++k)
      for (std::size_t j = 0; j < b[k].size(); ++j) m[i][j] += a[i][k] * b[k][j];
  return m;
}

bool is_symplectic(const IntMatrix& u) {
  const std::size_t n = u.size();
  if (n == 0 || n % 2 != 0) return false;
  for (const auto& row : u)
    if (row.size() != n) return false;
  const std::size_t g = n / 2;
  IntMatrix j(n, std::vector<std::int64_t>(n, 0));
  for (std::size_t i = 0; i < g; ++i) {
    j[i][g + i] = 1;
    j[g + i][i] = -1;
  }
  IntMatrix ut(n, std::vector<std::int64_t>(n));
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) ut[c][r] = u[r][c];
  return multiply(multiply(ut, j), u) == j;
}

std::int64_t q_functional(const WindingSet& v) {
  std::int64_t q = 0;
  for (const auto& x : v)
    for (auto e : x) q += e * e;
  return q;
}

WindingSet apply_twist(const WindingSet& v, const IntMatrix& u) {
  if (!is_symplectic(u)) throw NonSymplectic("twist matrix is not symplectic");
  for (const auto& x : v)
    if (x.size() != u.size()) throw NonSymplectic("twist matrix size does not match the winding vectors");
  return transformed(v, u);
}

WindingSet winding_set(const BracketValue& b) {
  WindingSet out;
  for (const auto& [key, poly] : b) out.insert(out.end(), key.begin(), key.end());
  return out;
}

CanonicalForm canonical_form(const WindingSet& v, int genus) {
  if (genus < 1) throw WeaveError("genus must be >= 1");
  for (const auto& x : v)
    if (static_cast<int>(x.size()) != 2 * genus) throw WeaveError("winding vector has the wrong length");
  CanonicalForm out = genus == 1 ? canonical_genus1(v) : canonical_greedy(v, genus);
  out.q_before = q_functional(v);
  out.q_after = q_functional(out.set);
  return out;
}

IntMatrix twist_matrix(TwistCurve curve, int direction) {
  if (direction != 1 && direction != -1) throw WeaveError("twist direction must be +1 or -1");
  return curve == TwistCurve::Alpha ? IntMatrix{{1, 0}, {direction, 1}} : IntMatrix{{1, direction}, {0, 1}};
}

SurfaceDiagram dehn_twist_diagram(const SurfaceDiagram& d, TwistCurve curve, int direction) {
  if (d.genus() != 1) throw UnsupportedGenus("diagram Dehn twists are implemented for genus 1 only");
  if (direction != 1 && direction != -1) throw WeaveError("twist direction must be +1 or -1");
  std::vector<BoundaryWord> images{BoundaryWord::power(1, 1), BoundaryWord::power(2, 1)};
  if (curve == TwistCurve::Alpha) {
    images[1] = BoundaryWord::power(2, 1) * BoundaryWord::power(1, direction);
  } else {
    images[0] = BoundaryWord::power(1, 1) * BoundaryWord::power(2, direction);
  }
  auto es = d.edges();
  for (auto& e : es) e.word = e.word.substitute(images);
  auto ls = d.loops();
  for (auto& l : ls) l.word = l.word.substitute(images);
  return SurfaceDiagram(d.genus(), d.crossings(), std::move(es), std::move(ls));
}

int size(const SurfaceDiagram& d) {
  if (d.crossing_count() == 0) return 0;
  return static_cast<int>(faces(d).size());
}

namespace {

// Tries the automorphism sending slot (0, s) to (target, s + k).
bool translation_from(const SurfaceDiagram& d, int target, int k, bool projection_only) {
  const int n = d.crossing_count();
  std::vector<int> image(at(n), -1), rot(at(n), 0), preimage(at(n), -1);
  std::vector<int> queue{0};
  image[0] = target;
  rot[0] = k;
  preimage[at(target)] = 0;
  for (std::size_t qi = 0; qi < queue.size(); ++qi) {
    const int c = queue[qi];
    for (int s = 0; s < 4; ++s) {
      const Dart y = d.partner({c, s});
      const Dart y_img = d.partner({image[at(c)], (s + rot[at(c)]) & 3});
      const int r = (y_img.slot - y.slot + 4) & 3;
      if (image[at(y.crossing)] < 0) {
        if (preimage[at(y_img.crossing)] >= 0) return false;
        image[at(y.crossing)] = y_img.crossing;
        rot[at(y.crossing)] = r;
        preimage[at(y_img.crossing)] = y.crossing;
        queue.push_back(y.crossing);
      } else if (image[at(y.crossing)] != y_img.crossing || rot[at(y.crossing)] != r) {
        return false;
      }
    }
  }
  if (static_cast<int>(queue.size()) != n) return false;
  for (int c = 0; c < n; ++c) {
    if (image[at(c)] == c) return false;
    if (!projection_only) {
      const int over = static_cast<int>(d.crossings()[at(c)].over) ^ (rot[at(c)] & 1);
      if (over != static_cast<int>(d.crossings()[at(image[at(c)])].over)) return false;
    }
  }
  // Edge words must change by a coboundary: w' = f(head) + w - f(tail).
  std::vector<std::optional<HomologyVector>> f(at(n));
  f[0] = HomologyVector(at(2 * d.genus()), 0);
  queue.assign(1, 0);
  for (std::size_t qi = 0; qi < queue.size(); ++qi) {
    const int c = queue[qi];
    for (int s = 0; s < 4; ++s) {
      const Dart x{c, s};
      const Dart y = d.partner(x);
      const auto w = d.word_from(x).abelianize(d.genus());
      const auto w_img = d.word_from({image[at(c)], (s + rot[at(c)]) & 3}).abelianize(d.genus());
      const auto fy = w_img + (-w) + *f[at(c)];
      if (!f[at(y.crossing)]) {
        f[at(y.crossing)] = fy;
        queue.push_back(y.crossing);
      } else if (*f[at(y.crossing)] != fy) {
        return false;
      }
    }
  }
  return true;
}

}  // namespace

bool has_translation_symmetry(const SurfaceDiagram& d, bool projection_only) {
  if (d.crossing_count() < 2 || !d.slots_well_formed() || !is_connected(d)) return false;
  for (int t = 1; t < d.crossing_count(); ++t)
    for (int k = 0; k < 4; ++k)
      if (translation_from(d, t, k, projection_only)) return true;
  return false;
}

bool is_minimal_size(const SurfaceDiagram& d) { return !has_translation_symmetry(d, false); }

}  // namespace weave
