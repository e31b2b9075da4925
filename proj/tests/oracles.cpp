#include "oracles.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <numeric>

namespace oracle {

std::vector<Vertex> all_vertices(int m, int q) {
  std::vector<Vertex> out;
  std::vector<ctc::Symbol> digits(static_cast<std::size_t>(m), 0);
  while (true) {
    out.emplace_back(digits);
    int i = m - 1;
    while (i >= 0 && digits[static_cast<std::size_t>(i)] == q - 1) digits[static_cast<std::size_t>(i--)] = 0;
    if (i < 0) break;
    ++digits[static_cast<std::size_t>(i)];
  }
  return out;
}

int distance(const Vertex& a, const Vertex& b) {
  int d = 0;
  for (std::size_t i = 0; i < a.entries.size(); ++i) d += a.entries[i] != b.entries[i];
  return d;
}

int distance_to_code(const Vertex& v, const Code& code) {
  int best = code.length();
  for (const auto& c : code.words()) best = std::min(best, distance(v, c));
  return best;
}

std::vector<std::size_t> partition_sizes(const Code& code) {
  std::vector<std::size_t> sizes;
  for (const auto& v : all_vertices(code.length(), code.alphabet_size())) {
    const auto d = static_cast<std::size_t>(oracle::distance_to_code(v, code));
    if (sizes.size() <= d) sizes.resize(d + 1, 0);
    ++sizes[d];
  }
  return sizes;
}

int regularity_level(const Code& code) {
  std::map<int, std::set<std::vector<int>>> rows;
  for (const auto& v : all_vertices(code.length(), code.alphabet_size())) {
    std::vector<int> row(static_cast<std::size_t>(code.length()) + 1, 0);
    for (const auto& c : code.words()) ++row[static_cast<std::size_t>(distance(v, c))];
    rows[oracle::distance_to_code(v, code)].insert(row);
  }
  int level = -1;
  for (const auto& [part, distinct] : rows) {
    if (distinct.size() != 1) break;
    level = part;
  }
  return level;
}

Vertex act(const std::vector<Permutation>& g, const Permutation& sigma, const Vertex& v) {
  Vertex out = v;
  for (std::size_t j = 0; j < v.entries.size(); ++j)
    out.entries[sigma(static_cast<ctc::Point>(j))] = static_cast<ctc::Symbol>(g[j](v.entries[j]));
  return out;
}

std::set<std::vector<std::uint32_t>> closure(const std::vector<Permutation>& gens, std::size_t degree) {
  std::vector<std::uint32_t> id(degree);
  std::iota(id.begin(), id.end(), 0u);
  std::set<std::vector<std::uint32_t>> seen{id};
  std::deque<std::vector<std::uint32_t>> queue{id};
  while (!queue.empty()) {
    const auto x = queue.front();
    queue.pop_front();
    for (const auto& g : gens) {
      std::vector<std::uint32_t> y(degree);
      for (std::size_t p = 0; p < degree; ++p) y[p] = g(x[p]);
      if (seen.insert(y).second) queue.push_back(y);
    }
  }
  return seen;
}

std::set<Vertex> vertex_orbit(const std::vector<ctc::WreathElement>& gens, const Vertex& v) {
  std::set<Vertex> seen{v};
  std::deque<Vertex> queue{v};
  while (!queue.empty()) {
    const auto x = queue.front();
    queue.pop_front();
    for (const auto& g : gens) {
      auto y = act(g.alphabet_perms(), g.coord_perm(), x);
      if (seen.insert(y).second) queue.push_back(y);
    }
  }
  return seen;
}

std::uint64_t binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  std::uint64_t r = 1;
  for (int i = 1; i <= k; ++i) r = r * static_cast<std::uint64_t>(n - k + i) / static_cast<std::uint64_t>(i);
  return r;
}

Permutation random_permutation(std::mt19937_64& rng, std::size_t n) {
  std::vector<ctc::Point> images(n);
  std::iota(images.begin(), images.end(), ctc::Point{0});
  for (std::size_t i = n; i > 1; --i) std::swap(images[i - 1], images[rng() % i]);
  return Permutation::from_images(std::move(images));
}

ctc::WreathElement random_element(std::mt19937_64& rng, int m, int q) {
  std::vector<Permutation> g;
  for (int i = 0; i < m; ++i) g.push_back(random_permutation(rng, static_cast<std::size_t>(q)));
  return ctc::WreathElement(std::move(g), random_permutation(rng, static_cast<std::size_t>(m)));
}

Vertex random_vertex(std::mt19937_64& rng, int m, int q) {
  Vertex v = Vertex::zero(m);
  for (auto& s : v.entries) s = static_cast<ctc::Symbol>(rng() % static_cast<std::uint64_t>(q));
  return v;
}

Code random_code(std::mt19937_64& rng, int m, int q, std::size_t max_size) {
  const std::size_t size = 1 + rng() % max_size;
  std::vector<Vertex> words;
  for (std::size_t i = 0; i < size; ++i) words.push_back(random_vertex(rng, m, q));
  return Code(m, q, std::move(words));
}

}  // namespace oracle
