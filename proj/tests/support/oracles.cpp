#include "oracles.hpp"

#include <algorithm>
#include <filesystem>
#include <map>

#include "weave/diagram_io.hpp"

namespace weave::testing {

std::vector<CorpusEntry> load_corpus() {
  std::vector<std::filesystem::path> paths;
  for (const auto& entry : std::filesystem::directory_iterator(WEAVE_CORPUS_DIR))
    if (entry.path().extension() == ".wv") paths.push_back(entry.path());
  std::sort(paths.begin(), paths.end());
  std::vector<CorpusEntry> out;
  for (const auto& p : paths) out.push_back({p.stem().string(), read_diagram_file(p.string())});
  return out;
}

SurfaceDiagram corpus_diagram(const std::string& name) {
  return read_diagram_file(std::string(WEAVE_CORPUS_DIR) + "/" + name + ".wv");
}

SurfaceDiagram plain_weave() { return corpus_diagram("square_cr_k2_plain"); }

std::vector<int> corner_walk_face_sizes(const SurfaceDiagram& d) {
  // Partner table straight from the edge list.
  std::map<std::pair<int, int>, std::pair<int, int>> far;
  for (const auto& e : d.edges()) {
    far[{e.ends[0].crossing, e.ends[0].slot}] = {e.ends[1].crossing, e.ends[1].slot};
    far[{e.ends[1].crossing, e.ends[1].slot}] = {e.ends[0].crossing, e.ends[0].slot};
  }
  std::map<std::pair<int, int>, bool> seen;
  std::vector<int> sizes;
  for (int c = 0; c < d.crossing_count(); ++c) {
    for (int s = 0; s < 4; ++s) {
      std::pair<int, int> start{c, s};
      if (seen[start]) continue;
      int len = 0;
      auto cur = start;
      do {
        seen[cur] = true;
        const auto arrive = far.at(cur);
        cur = {arrive.first, (arrive.second + 1) % 4};
        ++len;
      } while (cur != start);
      sizes.push_back(len);
    }
  }
  return sizes;
}

WindingSet sorted_normalized(WindingSet v) {
  for (auto& x : v) x = normalize_sign(std::move(x));
  std::sort(v.begin(), v.end());
  return v;
}

BruteForceMin brute_force_canonical(const WindingSet& v, int bound) {
  BruteForceMin best;
  bool have = false;
  for (int a = -bound; a <= bound; ++a)
    for (int b = -bound; b <= bound; ++b)
      for (int c = -bound; c <= bound; ++c)
        for (int d = -bound; d <= bound; ++d) {
          if (a * d - b * c != 1) continue;
          WindingSet img;
          std::int64_t q = 0;
          for (const auto& x : v) {
            HomologyVector y{x[0] * a + x[1] * c, x[0] * b + x[1] * d};
            q += y[0] * y[0] + y[1] * y[1];
            img.push_back(std::move(y));
          }
          img = sorted_normalized(std::move(img));
          const WindingSet desc(img.rbegin(), img.rend());
          const WindingSet best_desc(best.best_set.rbegin(), best.best_set.rend());
          if (!have || q < best.q || (q == best.q && desc > best_desc)) {
            best.q = q;
            best.best_set = img;
            have = true;
          }
        }
  return best;
}

}  // namespace weave::testing
