#include "ctcodes/designs.hpp"

#include <algorithm>
#include <istream>
#include <map>
#include <numeric>
#include <ostream>
#include <sstream>
#include <unordered_map>

#include "ctcodes/errors.hpp"

namespace ctc {

namespace {

void validate_block(const PointSet& b, int m) {
  for (std::size_t i = 0; i < b.size(); ++i) {
    if (b[i] < 1 || static_cast<int>(b[i]) > m) throw DomainError("block point outside 1..m");
    if (i > 0 && b[i] <= b[i - 1]) throw DomainError("block points must be distinct");
  }
}

/// Calls f(subset) for every t-subset of `set` (positions increasing).
template <class F>
void for_each_subset(const PointSet& set, int t, F f) {
  const auto n = set.size();
  const auto ut = static_cast<std::size_t>(t);
  if (ut > n) return;
  std::vector<std::size_t> idx(ut);
  std::iota(idx.begin(), idx.end(), std::size_t{0});
  PointSet sub(ut);
  while (true) {
    for (std::size_t i = 0; i < ut; ++i) sub[i] = set[idx[i]];
    f(sub);
    std::size_t i = ut;
    while (i > 0 && idx[i - 1] == n - ut + i - 1) --i;
    if (i == 0) return;
    ++idx[i - 1];
    for (std::size_t j = i; j < ut; ++j) idx[j] = idx[j - 1] + 1;
  }
}

/// Combinatorial number system rank of a sorted subset of {1..m}.
std::uint64_t subset_rank(const PointSet& sub) {
  std::uint64_t r = 0;
  for (std::size_t i = 0; i < sub.size(); ++i) r += binomial_u64(sub[i] - 1, i + 1);
  return r;
}

}  // namespace

namespace {
int first_block_size(const std::vector<PointSet>& blocks) {
  return blocks.empty() ? 0 : static_cast<int>(blocks.front().size());
}
}  // namespace

// The size is read before the vector is moved from; argument order is unspecified.
Design::Design(int points, std::vector<PointSet> blocks) : Design(points, first_block_size(blocks), {}) {
  blocks_ = std::move(blocks);
  for (auto& b : blocks_) {
    std::sort(b.begin(), b.end());
    if (static_cast<int>(b.size()) != k_) throw DomainError("blocks must have uniform size");
    validate_block(b, points_);
  }
}

Design::Design(int points, int block_size, std::vector<PointSet> blocks)
    : points_(points), k_(block_size), blocks_(std::move(blocks)) {
  if (points_ < 1) throw DomainError("design needs at least one point");
  if (k_ < 0 || k_ > points_) throw DomainError("block size outside 0..m");
  for (auto& b : blocks_) {
    std::sort(b.begin(), b.end());
    if (static_cast<int>(b.size()) != k_) throw DomainError("blocks must have uniform size");
    validate_block(b, points_);
  }
}

bool operator==(const Design& a, const Design& b) {
  if (a.points_ != b.points_ || a.k_ != b.k_ || a.blocks_.size() != b.blocks_.size()) return false;
  auto x = a.blocks_;
  auto y = b.blocks_;
  std::sort(x.begin(), x.end());
  std::sort(y.begin(), y.end());
  return x == y;
}

std::optional<std::uint64_t> is_t_design(const Design& design, int t, const Limits& limits) {
  if (t < 0 || t > design.block_size()) throw DomainError("t outside 0..k");
  const auto total = binomial_u64(static_cast<std::uint64_t>(design.points()), static_cast<std::uint64_t>(t));
  if (total > limits.max_subsets) throw ResourceError("C(m,t) exceeds subset budget");
  std::vector<std::uint64_t> counts(total, 0);
  for (const auto& b : design.blocks()) for_each_subset(b, t, [&](const PointSet& s) { ++counts[subset_rank(s)]; });
  if (std::adjacent_find(counts.begin(), counts.end(), std::not_equal_to<>()) != counts.end()) return std::nullopt;
  return counts.front();
}

std::optional<std::uint64_t> qary_t_design_lambda(const std::vector<Vertex>& members, int t, int q,
                                                  const Limits& limits) {
  if (members.empty()) throw DomainError("q-ary design needs at least one member");
  const int m = members.front().length();
  const int k = weight(members.front());
  for (const auto& v : members) {
    if (v.length() != m) throw DomainError("members of unequal length");
    if (weight(v) != k) throw DomainError("members must share one weight");
  }
  if (t < 0 || t > k) throw DomainError("t outside 0..k");
  const HammingSpace space(m, q);
  const BigInt total = binomial(m, t) * power(q - 1, static_cast<std::uint64_t>(t));
  if (total > limits.max_subsets) throw ResourceError("weight-t vertex count exceeds budget");

  std::unordered_map<std::uint64_t, std::uint64_t> covered;
  for (const auto& v : members) {
    space.check(v);
    for_each_subset(support(v), t, [&](const PointSet& s) {
      Vertex nu = Vertex::zero(m);
      for (Point p : s) nu.entries[p - 1] = v.entries[p - 1];
      ++covered[space.encode(nu)];
    });
  }
  if (BigInt(covered.size()) != total) return std::nullopt;
  const auto lambda = covered.begin()->second;
  for (const auto& [key, c] : covered)
    if (c != lambda) return std::nullopt;
  return lambda;
}

Design support_design(const std::vector<Vertex>& members, int m) {
  std::vector<PointSet> blocks;
  for (const auto& v : members) {
    if (v.length() != m) throw DomainError("member length differs from m");
    blocks.push_back(support(v));
  }
  return Design(m, std::move(blocks));
}

std::set<int> block_intersection_numbers(const Design& design) {
  const auto& b = design.blocks();
  if (b.size() < 2) throw PreconditionError("intersection numbers need at least two blocks");
  std::set<int> out;
  PointSet common;
  for (std::size_t i = 0; i < b.size(); ++i)
    for (std::size_t j = i + 1; j < b.size(); ++j) {
      common.clear();
      std::set_intersection(b[i].begin(), b[i].end(), b[j].begin(), b[j].end(), std::back_inserter(common));
      out.insert(static_cast<int>(common.size()));
    }
  return out;
}

Design complement_design(const Design& design) {
  std::vector<PointSet> out;
  for (const auto& b : design.blocks()) {
    PointSet c;
    for (Point p = 1; p <= static_cast<Point>(design.points()); ++p)
      if (!std::binary_search(b.begin(), b.end(), p)) c.push_back(p);
    out.push_back(std::move(c));
  }
  return Design(design.points(), design.points() - design.block_size(), std::move(out));
}

VerifiedDesign orbit_design(const PermGroup& group, const PointSet& block, int t, const Limits& limits) {
  PointSet start = block;
  std::sort(start.begin(), start.end());
  validate_block(start, static_cast<int>(group.degree()));
  std::set<PointSet> seen{start};
  std::vector<PointSet> queue{start};
  for (std::size_t head = 0; head < queue.size(); ++head)
    for (const auto& g : group.generators()) {
      PointSet image;
      for (Point p : queue[head]) image.push_back(g(p - 1) + 1);
      std::sort(image.begin(), image.end());
      if (seen.insert(image).second) {
        if (queue.size() >= limits.max_subsets) throw ResourceError("block orbit exceeds subset budget");
        queue.push_back(std::move(image));
      }
    }
  std::vector<PointSet> blocks(seen.begin(), seen.end());
  Design design(static_cast<int>(group.degree()), static_cast<int>(start.size()), std::move(blocks));
  auto lambda = is_t_design(design, t, limits);
  return {std::move(design), t, lambda};
}

bool fisher_holds(const Design& design, const Limits& limits) {
  if (design.block_size() >= design.points()) throw PreconditionError("Fisher's inequality needs k < m");
  if (design.block_size() < 2 || !is_t_design(design, 2, limits))
    throw PreconditionError("Fisher's inequality needs a verified 2-design");
  return design.size() >= static_cast<std::size_t>(design.points());
}

TwoDesignParams two_design_params(int m, int k, const BigInt& lambda) {
  if (k < 2 || k >= m) throw DomainError("2-design parameters need 2 <= k < m");
  TwoDesignParams p;
  p.r = Rational(lambda * (m - 1), BigInt(k - 1));
  p.b = Rational(lambda * m * (m - 1), BigInt(k * (k - 1)));
  p.r_integral = is_integral(p.r);
  p.b_integral = is_integral(p.b);
  return p;
}

IntersectionCounts forced_intersection_counts(int m, int k, const BigInt& lambda, int s) {
  if (s < 0 || s > 2) throw DomainError("forced intersection counts need s in 0..2");
  const auto params = two_design_params(m, k, lambda);
  const Rational others = params.b - 1;
  const Rational incidences = Rational(k) * (params.r - 1);
  const Rational pairs = Rational(binomial(k, 2)) * Rational(lambda - 1);
  IntersectionCounts out;
  // Triangular solve from the top intersection size down.
  switch (s) {
    case 0:
      out.counts = {others};
      out.admissible = incidences == 0 && pairs == 0;
      break;
    case 1:
      out.counts = {others - incidences, incidences};
      out.admissible = pairs == 0;
      break;
    default: {
      const Rational n2 = pairs;
      const Rational n1 = incidences - 2 * n2;
      out.counts = {others - n1 - n2, n1, n2};
      out.admissible = true;
    }
  }
  for (const auto& c : out.counts) out.admissible = out.admissible && c >= 0 && is_integral(c);
  return out;
}

BigInt design_automorphism_order(const Design& design, const Limits& limits) {
  const int m = design.points();
  const int k = design.block_size();
  const auto total = binomial_u64(static_cast<std::uint64_t>(m), static_cast<std::uint64_t>(k));
  if (total > limits.max_setwise_degree) throw ResourceError("C(m,k) exceeds the setwise stabilizer degree cap");
  if (m < 2 || k == 0 || k == m) return factorial(static_cast<std::uint64_t>(m));

  std::vector<PointSet> all;
  for_each_subset([&] {
    PointSet s(static_cast<std::size_t>(m));
    std::iota(s.begin(), s.end(), Point{1});
    return s;
  }(), k, [&](const PointSet& s) { all.push_back(s); });
  std::map<PointSet, Point> index;
  for (Point i = 0; i < all.size(); ++i) index.emplace(all[i], i);

  auto induced = [&](const Permutation& g) {
    std::vector<Point> images(all.size());
    for (Point i = 0; i < all.size(); ++i) {
      PointSet img;
      for (Point p : all[i]) img.push_back(g(p - 1) + 1);
      std::sort(img.begin(), img.end());
      images[i] = index.at(img);
    }
    return Permutation::from_images(std::move(images));
  };
  const auto sym = symmetric_group(static_cast<std::size_t>(m));
  std::vector<Permutation> gens;
  for (const auto& g : sym.generators()) gens.push_back(induced(g));
  const PermGroup on_subsets(all.size(), std::move(gens));

  PointSet chosen;
  for (const auto& b : design.blocks()) chosen.push_back(index.at(b) + 1);
  std::sort(chosen.begin(), chosen.end());
  if (std::adjacent_find(chosen.begin(), chosen.end()) != chosen.end())
    throw PreconditionError("automorphism order needs a simple design");
  return on_subsets.setwise_stabilizer(chosen, limits).order();
}

void write_design(std::ostream& out, const Design& design) {
  out << design.points() << ' ' << design.block_size() << '\n';
  for (const auto& b : design.blocks()) {
    for (std::size_t i = 0; i < b.size(); ++i) out << (i ? " " : "") << b[i];
    out << '\n';
  }
}

Design read_design(std::istream& in) {
  std::string line;
  std::size_t lineno = 0;
  std::optional<std::pair<int, int>> header;
  std::vector<PointSet> blocks;
  while (std::getline(in, line)) {
    ++lineno;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    std::istringstream ls(line);
    if (!header) {
      int m = 0;
      int k = 0;
      std::string extra;
      if (!(ls >> m >> k) || (ls >> extra) || m < 1 || k < 0 || k > m)
        throw ParseError(lineno, "expected header 'm k' with 0 <= k <= m");
      header.emplace(m, k);
      continue;
    }
    PointSet b;
    std::string tok;
    while (ls >> tok) {
      std::size_t used = 0;
      long v = 0;
      try {
        v = std::stol(tok, &used);
      } catch (const std::exception&) {
        used = 0;
      }
      if (used != tok.size()) throw ParseError(lineno, "bad point '" + tok + "'");
      if (v < 1 || v > header->first) throw ParseError(lineno, "point " + tok + " outside 1..m");
      b.push_back(static_cast<Point>(v));
    }
    if (static_cast<int>(b.size()) != header->second)
      throw ParseError(lineno, "block has " + std::to_string(b.size()) + " points, expected " +
                                   std::to_string(header->second));
    std::sort(b.begin(), b.end());
    if (std::adjacent_find(b.begin(), b.end()) != b.end()) throw ParseError(lineno, "repeated point in block");
    blocks.push_back(std::move(b));
  }
  if (!header) throw ParseError(lineno, "missing header 'm k'");
  return Design(header->first, header->second, std::move(blocks));
}

}  // namespace ctc
