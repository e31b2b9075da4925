#include "ctcodes/permutation.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <sstream>

#include "ctcodes/errors.hpp"

namespace ctc {

Permutation::Permutation(std::size_t degree) : images_(degree) {
  for (std::size_t i = 0; i < degree; ++i) images_[i] = static_cast<Point>(i);
}

Permutation Permutation::from_images(std::vector<Point> images) {
  std::vector<bool> seen(images.size(), false);
  for (Point p : images) {
    if (p >= images.size() || seen[p]) throw DomainError("permutation images are not a bijection");
    seen[p] = true;
  }
  return Permutation(std::move(images), 0);
}

Permutation Permutation::from_cycles(std::size_t degree, const std::vector<std::vector<Point>>& cycles) {
  Permutation result(degree);
  std::vector<bool> used(degree, false);
  for (const auto& cycle : cycles) {
    for (std::size_t i = 0; i < cycle.size(); ++i) {
      const Point a = cycle[i];
      const Point b = cycle[(i + 1) % cycle.size()];
      if (a >= degree || b >= degree) throw DomainError("cycle point out of range");
      if (used[a]) throw DomainError("point repeated across cycles");
      used[a] = true;
      result.images_[a] = b;
    }
  }
  return result;
}

Permutation Permutation::transposition(std::size_t degree, Point a, Point b) {
  if (a == b) return Permutation(degree);
  return from_cycles(degree, {{a, b}});
}

Permutation Permutation::operator*(const Permutation& rhs) const {
  if (rhs.degree() != degree()) throw DomainError("composing permutations of different degree");
  std::vector<Point> out(images_.size());
  for (std::size_t i = 0; i < images_.size(); ++i) out[i] = rhs.images_[images_[i]];
  return Permutation(std::move(out), 0);
}

Permutation Permutation::inverse() const {
  std::vector<Point> out(images_.size());
  for (std::size_t i = 0; i < images_.size(); ++i) out[images_[i]] = static_cast<Point>(i);
  return Permutation(std::move(out), 0);
}

bool Permutation::is_identity() const noexcept {
  for (std::size_t i = 0; i < images_.size(); ++i)
    if (images_[i] != i) return false;
  return true;
}

bool Permutation::is_even() const {
  std::size_t transpositions = 0;
  for (const auto& c : cycles()) transpositions += c.size() - 1;
  return transpositions % 2 == 0;
}

std::vector<std::vector<Point>> Permutation::cycles() const {
  std::vector<std::vector<Point>> out;
  std::vector<bool> seen(images_.size(), false);
  for (Point start = 0; start < images_.size(); ++start) {
    if (seen[start] || images_[start] == start) continue;
    std::vector<Point> cycle;
    for (Point p = start; !seen[p]; p = images_[p]) {
      seen[p] = true;
      cycle.push_back(p);
    }
    out.push_back(std::move(cycle));
  }
  return out;
}

Point Permutation::first_moved() const noexcept {
  for (std::size_t i = 0; i < images_.size(); ++i)
    if (images_[i] != i) return static_cast<Point>(i);
  return static_cast<Point>(images_.size());
}

std::size_t PermutationHash::operator()(const Permutation& p) const noexcept {
  std::size_t h = 1469598103934665603ull;
  for (Point x : p.images()) {
    h ^= x + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
  }
  return h;
}

std::string to_cycle_string(const Permutation& p, int base) {
  const auto cs = p.cycles();
  if (cs.empty()) return "()";
  std::ostringstream out;
  for (const auto& c : cs) {
    out << '(';
    for (std::size_t i = 0; i < c.size(); ++i) {
      if (i) out << ' ';
      out << static_cast<long long>(c[i]) + base;
    }
    out << ')';
  }
  return out.str();
}

std::string to_image_string(const Permutation& p, int base) {
  std::ostringstream out;
  out << '[';
  for (std::size_t i = 0; i < p.degree(); ++i) {
    if (i) out << ',';
    out << static_cast<long long>(p(static_cast<Point>(i))) + base;
  }
  out << ']';
  return out.str();
}

namespace {

long long parse_int(std::string_view s) {
  long long v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size()) throw ParseError(0, "bad integer '" + std::string(s) + "'");
  return v;
}

std::vector<std::string_view> split_tokens(std::string_view s, char sep) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && (s[i] == sep || std::isspace(static_cast<unsigned char>(s[i])))) ++i;
    std::size_t j = i;
    while (j < s.size() && s[j] != sep && !std::isspace(static_cast<unsigned char>(s[j]))) ++j;
    if (j > i) out.push_back(s.substr(i, j - i));
    i = j;
  }
  return out;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

}  // namespace

Permutation parse_permutation(std::string_view text, std::size_t degree, int base) {
  text = trim(text);
  if (text.empty()) throw ParseError(0, "empty permutation");
  try {
    if (text.front() == '[') {
      if (text.back() != ']') throw ParseError(0, "unterminated image list");
      std::vector<Point> images;
      for (auto tok : split_tokens(text.substr(1, text.size() - 2), ',')) {
        const long long v = parse_int(tok) - base;
        if (v < 0) throw ParseError(0, "image below base");
        images.push_back(static_cast<Point>(v));
      }
      if (degree != 0 && images.size() != degree)
        throw ParseError(0, "image list has " + std::to_string(images.size()) + " entries, expected " +
                                std::to_string(degree));
      return Permutation::from_images(std::move(images));
    }
    std::vector<std::vector<Point>> cycles;
    long long max_point = -1;
    std::size_t i = 0;
    while (i < text.size()) {
      if (std::isspace(static_cast<unsigned char>(text[i]))) {
        ++i;
        continue;
      }
      if (text[i] != '(') throw ParseError(0, "expected '(' in cycle notation");
      const std::size_t close = text.find(')', i);
      if (close == std::string_view::npos) throw ParseError(0, "unterminated cycle");
      std::vector<Point> cycle;
      for (auto tok : split_tokens(text.substr(i + 1, close - i - 1), ',')) {
        const long long v = parse_int(tok) - base;
        if (v < 0) throw ParseError(0, "cycle point below base");
        max_point = std::max(max_point, v);
        cycle.push_back(static_cast<Point>(v));
      }
      if (!cycle.empty()) cycles.push_back(std::move(cycle));
      i = close + 1;
    }
    const std::size_t n = degree != 0 ? degree : static_cast<std::size_t>(max_point + 1);
    if (max_point >= static_cast<long long>(n)) throw ParseError(0, "cycle point exceeds degree");
    return Permutation::from_cycles(n, cycles);
  } catch (const DomainError& e) {
    throw ParseError(0, e.what());
  }
}

}  // namespace ctc
