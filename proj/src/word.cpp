#include "weave/word.hpp"

#include <cctype>
#include <cstdlib>
#include <numeric>

#include "weave/errors.hpp"

namespace weave {

BoundaryWord::BoundaryWord(std::vector<int> letters) : letters_(std::move(letters)) { reduce(); }

BoundaryWord BoundaryWord::power(int letter, std::int64_t exponent) {
  std::vector<int> out;
  const int l = exponent < 0 ? -letter : letter;
  for (std::int64_t i = 0; i < std::abs(exponent); ++i) out.push_back(l);
  return BoundaryWord(std::move(out));
}

void BoundaryWord::reduce() {
  std::vector<int> stack;
  stack.reserve(letters_.size());
  for (int l : letters_) {
    if (!stack.empty() && stack.back() == -l) {
      stack.pop_back();
    } else {
      stack.push_back(l);
    }
  }
  letters_ = std::move(stack);
}

BoundaryWord BoundaryWord::inverse() const {
  std::vector<int> out(letters_.rbegin(), letters_.rend());
  for (int& l : out) l = -l;
  BoundaryWord w;
  w.letters_ = std::move(out);
  return w;
}

BoundaryWord& BoundaryWord::operator*=(const BoundaryWord& rhs) {
  std::size_t k = 0;
  while (k < rhs.letters_.size() && !letters_.empty() && letters_.back() == -rhs.letters_[k]) {
    letters_.pop_back();
    ++k;
  }
  letters_.insert(letters_.end(), rhs.letters_.begin() + static_cast<std::ptrdiff_t>(k),
                  rhs.letters_.end());
  return *this;
}

BoundaryWord BoundaryWord::operator*(const BoundaryWord& rhs) const {
  BoundaryWord out = *this;
  out *= rhs;
  return out;
}

HomologyVector BoundaryWord::abelianize(int genus) const {
  HomologyVector v(static_cast<std::size_t>(2 * genus), 0);
  for (int l : letters_) {
    const auto idx = static_cast<std::size_t>(std::abs(l) - 1);
    v[idx] += l > 0 ? 1 : -1;
  }
  return v;
}

BoundaryWord BoundaryWord::substitute(const std::vector<BoundaryWord>& images) const {
  BoundaryWord out;
  for (int l : letters_) {
    const auto& img = images.at(static_cast<std::size_t>(std::abs(l) - 1));
    out *= l > 0 ? img : img.inverse();
  }
  return out;
}

std::string BoundaryWord::to_string(int genus) const {
  std::string s;
  for (int l : letters_) {
    const int k = std::abs(l);
    const bool is_a = k <= genus;
    char c = is_a ? 'a' : 'b';
    if (l < 0) c = static_cast<char>(std::toupper(c));
    s += c;
    if (genus > 1) s += std::to_string(is_a ? k : k - genus);
  }
  return s;
}

BoundaryWord parse_word(std::string_view text, int genus) {
  std::vector<int> letters;
  std::size_t i = 0;
  while (i < text.size()) {
    const char c = text[i++];
    const char lower = static_cast<char>(std::tolower(c));
    if (lower != 'a' && lower != 'b') {
      throw ParseError("unknown letter '" + std::string(1, c) + "' in word '" + std::string(text) + "'");
    }
    int index = 0;
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
      index = index * 10 + (text[i++] - '0');
    }
    if (index == 0) {
      if (genus != 1) {
        throw ParseError("letter without index requires genus 1: '" + std::string(text) + "'");
      }
      index = 1;
    }
    if (index > genus) {
      throw ParseError("letter index " + std::to_string(index) + " exceeds genus " +
                       std::to_string(genus));
    }
    int l = lower == 'a' ? index : genus + index;
    if (std::isupper(static_cast<unsigned char>(c))) l = -l;
    letters.push_back(l);
  }
  return BoundaryWord(std::move(letters));
}

bool is_zero(const HomologyVector& v) {
  for (auto x : v)
    if (x != 0) return false;
  return true;
}

HomologyVector operator+(const HomologyVector& a, const HomologyVector& b) {
  HomologyVector out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] + b[i];
  return out;
}

HomologyVector operator-(const HomologyVector& v) {
  HomologyVector out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) out[i] = -v[i];
  return out;
}

HomologyVector normalize_sign(HomologyVector v) {
  for (auto x : v) {
    if (x == 0) continue;
    if (x < 0)
      for (auto& y : v) y = -y;
    break;
  }
  return v;
}

HomologyVector primitive_direction(const HomologyVector& v) {
  std::int64_t g = 0;
  for (auto x : v) g = std::gcd(g, x);
  if (g == 0) return v;
  HomologyVector out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) out[i] = v[i] / g;
  return normalize_sign(std::move(out));
}

}  // namespace weave
