#include "ctcodes/hamming.hpp"

#include <algorithm>
#include <cctype>
#include <istream>
#include <mutex>
#include <ostream>
#include <sstream>

#include "ctcodes/errors.hpp"

namespace ctc {

Vertex::Vertex(std::initializer_list<int> e) {
  entries.reserve(e.size());
  for (int x : e) {
    if (x < 0 || x > 255) throw DomainError("symbol out of range");
    entries.push_back(static_cast<Symbol>(x));
  }
}

std::size_t VertexHash::operator()(const Vertex& v) const noexcept {
  std::size_t h = 0xcbf29ce484222325ull;
  for (Symbol s : v.entries) {
    h ^= s;
    h *= 0x100000001b3ull;
  }
  return h;
}

std::string to_string(const Vertex& v) {
  const bool compact = std::all_of(v.entries.begin(), v.entries.end(), [](Symbol s) { return s < 10; });
  std::string out;
  for (std::size_t i = 0; i < v.entries.size(); ++i) {
    if (!compact && i) out += ' ';
    out += std::to_string(v.entries[i]);
  }
  return out;
}

PointSet support(const Vertex& v) {
  PointSet s;
  for (std::size_t i = 0; i < v.entries.size(); ++i)
    if (v.entries[i] != 0) s.push_back(static_cast<Point>(i + 1));
  return s;
}

int weight(const Vertex& v) {
  return static_cast<int>(std::count_if(v.entries.begin(), v.entries.end(), [](Symbol s) { return s != 0; }));
}

PointSet diff_positions(const Vertex& a, const Vertex& b) {
  if (a.entries.size() != b.entries.size()) throw DomainError("vertices of different length");
  PointSet s;
  for (std::size_t i = 0; i < a.entries.size(); ++i)
    if (a.entries[i] != b.entries[i]) s.push_back(static_cast<Point>(i + 1));
  return s;
}

int hamming_distance(const Vertex& a, const Vertex& b) {
  if (a.entries.size() != b.entries.size()) throw DomainError("vertices of different length");
  int d = 0;
  for (std::size_t i = 0; i < a.entries.size(); ++i) d += a.entries[i] != b.entries[i];
  return d;
}

HammingSpace::HammingSpace(int m, int q) : m_(m), q_(q) {
  if (m < 1) throw DomainError("length m must be positive");
  if (q < 2 || q > 255) throw DomainError("alphabet size q must lie in 2..255");
  count_ = power_u64(static_cast<std::uint64_t>(q), static_cast<std::uint64_t>(m));
}

void HammingSpace::check(const Vertex& v) const {
  if (v.length() != m_)
    throw DomainError("vertex of length " + std::to_string(v.length()) + " in H(" + std::to_string(m_) + "," +
                      std::to_string(q_) + ")");
  for (Symbol s : v.entries)
    if (s >= q_) throw DomainError("symbol " + std::to_string(s) + " not below q=" + std::to_string(q_));
}

std::uint64_t HammingSpace::encode(const Vertex& v) const {
  std::uint64_t x = 0;
  for (Symbol s : v.entries) x = x * static_cast<std::uint64_t>(q_) + s;
  return x;
}

Vertex HammingSpace::decode(std::uint64_t index) const {
  std::vector<Symbol> e(static_cast<std::size_t>(m_));
  for (int i = m_ - 1; i >= 0; --i) {
    e[static_cast<std::size_t>(i)] = static_cast<Symbol>(index % static_cast<std::uint64_t>(q_));
    index /= static_cast<std::uint64_t>(q_);
  }
  return Vertex(std::move(e));
}

std::vector<Vertex> sphere(const Vertex& center, int k, int q, const Limits& limits) {
  const int m = center.length();
  HammingSpace(m, q).check(center);
  if (k < 0 || k > m) throw DomainError("sphere radius outside 0..m");
  const BigInt expected = binomial(m, k) * power(BigInt(q - 1), static_cast<std::uint64_t>(k));
  if (expected > limits.max_vertices) throw ResourceError("sphere size " + expected.str() + " exceeds vertex budget");
  std::vector<Vertex> out;
  std::vector<int> pos(static_cast<std::size_t>(k));
  for (int i = 0; i < k; ++i) pos[static_cast<std::size_t>(i)] = i;
  while (true) {
    // For this position set, every non-center symbol combination.
    std::vector<int> shift(static_cast<std::size_t>(k), 1);
    while (true) {
      Vertex v = center;
      for (int i = 0; i < k; ++i) {
        auto& e = v.entries[static_cast<std::size_t>(pos[static_cast<std::size_t>(i)])];
        e = static_cast<Symbol>((e + shift[static_cast<std::size_t>(i)]) % q);
      }
      out.push_back(std::move(v));
      int i = k - 1;
      while (i >= 0 && shift[static_cast<std::size_t>(i)] == q - 1) shift[static_cast<std::size_t>(i--)] = 1;
      if (i < 0) break;
      ++shift[static_cast<std::size_t>(i)];
    }
    int i = k - 1;
    while (i >= 0 && pos[static_cast<std::size_t>(i)] == m - k + i) --i;
    if (i < 0) break;
    ++pos[static_cast<std::size_t>(i)];
    for (int j = i + 1; j < k; ++j) pos[static_cast<std::size_t>(j)] = pos[static_cast<std::size_t>(j - 1)] + 1;
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::size_t> DistancePartition::sizes() const {
  std::vector<std::size_t> s;
  for (const auto& p : parts) s.push_back(p.size());
  return s;
}

struct Code::Cache {
  std::once_flag delta_once;
  std::optional<int> delta;
  std::once_flag partition_once;
  DistancePartition partition;
};

Code::Code(int m, int q, std::vector<Vertex> words)
    : space_(m, q), words_(std::move(words)), cache_(std::make_shared<Cache>()) {
  if (words_.empty()) throw PreconditionError("a code needs at least one codeword");
  for (const auto& w : words_) space_.check(w);
  std::sort(words_.begin(), words_.end());
  words_.erase(std::unique(words_.begin(), words_.end()), words_.end());
}

bool Code::contains(const Vertex& v) const { return std::binary_search(words_.begin(), words_.end(), v); }

std::optional<int> Code::min_distance() const {
  std::call_once(cache_->delta_once, [this] {
    if (words_.size() < 2) return;
    int best = length();
    for (std::size_t i = 0; i < words_.size(); ++i)
      for (std::size_t j = i + 1; j < words_.size(); ++j) best = std::min(best, hamming_distance(words_[i], words_[j]));
    cache_->delta = best;
  });
  return cache_->delta;
}

const DistancePartition& Code::distance_partition(const Limits& limits) const {
  if (space_.vertex_count() > limits.max_vertices)
    throw ResourceError("distance partition needs q^m = " + std::to_string(space_.vertex_count()) +
                        " vertices, over the budget of " + std::to_string(limits.max_vertices));
  std::call_once(cache_->partition_once, [this] {
    const std::uint64_t n = space_.vertex_count();
    const auto q = static_cast<std::uint64_t>(alphabet_size());
    const int m = length();
    std::vector<std::uint64_t> place(static_cast<std::size_t>(m));
    std::uint64_t p = 1;
    for (int i = m - 1; i >= 0; --i) {
      place[static_cast<std::size_t>(i)] = p;
      p *= q;
    }
    constexpr std::uint8_t kUnseen = 0xff;
    DistancePartition part;
    part.distance.assign(n, kUnseen);
    std::vector<std::uint64_t> frontier;
    for (const auto& w : words_) {
      const auto x = space_.encode(w);
      part.distance[x] = 0;
      frontier.push_back(x);
    }
    std::uint8_t level = 0;
    while (!frontier.empty()) {
      std::sort(frontier.begin(), frontier.end());
      part.parts.push_back(frontier);
      std::vector<std::uint64_t> next;
      for (std::uint64_t x : frontier) {
        for (int i = 0; i < m; ++i) {
          const std::uint64_t pl = place[static_cast<std::size_t>(i)];
          const std::uint64_t digit = (x / pl) % q;
          const std::uint64_t base = x - digit * pl;
          for (std::uint64_t d = 0; d < q; ++d) {
            const std::uint64_t y = base + d * pl;
            if (part.distance[y] == kUnseen) {
              part.distance[y] = static_cast<std::uint8_t>(level + 1);
              next.push_back(y);
            }
          }
        }
      }
      frontier = std::move(next);
      ++level;
    }
    cache_->partition = std::move(part);
  });
  return cache_->partition;
}

int min_distance(const Code& code) {
  auto d = code.min_distance();
  if (!d) throw PreconditionError("minimum distance needs at least two codewords");
  return *d;
}

int covering_radius(const Code& code, const Limits& limits) {
  return code.distance_partition(limits).covering_radius();
}

int distance_to_code(const Vertex& v, const Code& code) {
  code.space().check(v);
  int best = code.length();
  for (const auto& w : code.words()) best = std::min(best, hamming_distance(v, w));
  return best;
}

DistanceDistribution distance_distribution(const Code& code) {
  const int m = code.length();
  std::vector<std::uint64_t> counts(static_cast<std::size_t>(m + 1), 0);
  const auto& w = code.words();
  for (std::size_t i = 0; i < w.size(); ++i) {
    ++counts[0];
    for (std::size_t j = i + 1; j < w.size(); ++j) counts[static_cast<std::size_t>(hamming_distance(w[i], w[j]))] += 2;
  }
  DistanceDistribution out;
  for (auto c : counts) out.values.emplace_back(Rational(BigInt(c), BigInt(w.size())));
  return out;
}

std::vector<Vertex> diff_set(const Vertex& alpha, const Vertex& beta, const Code& code) {
  if (!code.contains(alpha) || !code.contains(beta)) throw PreconditionError("diff_set needs alpha, beta in the code");
  const auto target = diff_positions(alpha, beta);
  std::vector<Vertex> out;
  for (const auto& g : code.words())
    if (diff_positions(alpha, g) == target) out.push_back(g);
  return out;
}

std::vector<Vertex> weight_class(const Code& code, int k) {
  std::vector<Vertex> out;
  for (const auto& w : code.words())
    if (weight(w) == k) out.push_back(w);
  return out;
}

void write_code(std::ostream& out, const Code& code) {
  const bool compact = code.alphabet_size() <= 10;
  out << code.length() << ' ' << code.alphabet_size() << '\n';
  for (const auto& w : code.words()) {
    for (std::size_t i = 0; i < w.entries.size(); ++i) {
      if (!compact && i) out << ' ';
      out << static_cast<int>(w.entries[i]);
    }
    out << '\n';
  }
}

Code read_code(std::istream& in) {
  std::string line;
  std::size_t lineno = 0;
  int m = 0;
  int q = 0;
  bool have_header = false;
  std::vector<Vertex> words;
  while (std::getline(in, line)) {
    ++lineno;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    std::istringstream ls(line);
    if (!have_header) {
      std::string extra;
      if (!(ls >> m >> q) || (ls >> extra)) throw ParseError(lineno, "expected header 'm q'");
      if (m < 1 || q < 2 || q > 255) throw ParseError(lineno, "header needs m >= 1 and 2 <= q <= 255");
      have_header = true;
      continue;
    }
    std::vector<std::string> tokens;
    for (std::string t; ls >> t;) tokens.push_back(t);
    std::vector<Symbol> entries;
    if (tokens.size() == 1 && static_cast<int>(tokens[0].size()) == m && q <= 10) {
      for (char c : tokens[0]) {
        if (!std::isdigit(static_cast<unsigned char>(c))) throw ParseError(lineno, "non-digit symbol in codeword");
        entries.push_back(static_cast<Symbol>(c - '0'));
      }
    } else {
      for (const auto& t : tokens) {
        if (t.empty() || t.size() > 3 || !std::all_of(t.begin(), t.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }))
          throw ParseError(lineno, "malformed symbol '" + t + "'");
        const int v = std::stoi(t);
        if (v >= q) throw ParseError(lineno, "symbol " + t + " not below q=" + std::to_string(q));
        entries.push_back(static_cast<Symbol>(v));
      }
    }
    if (static_cast<int>(entries.size()) != m)
      throw ParseError(lineno, "codeword has " + std::to_string(entries.size()) + " entries, expected " + std::to_string(m));
    for (Symbol s : entries)
      if (s >= q) throw ParseError(lineno, "symbol " + std::to_string(s) + " not below q=" + std::to_string(q));
    words.emplace_back(std::move(entries));
  }
  if (!have_header) throw ParseError(lineno, "missing 'm q' header");
  if (words.empty()) throw ParseError(lineno, "code file has no codewords");
  return Code(m, q, std::move(words));
}

}  // namespace ctc
