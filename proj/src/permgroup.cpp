#include "ctcodes/permgroup.hpp"

#include <algorithm>
#include <istream>
#include <mutex>
#include <numeric>
#include <optional>
#include <ostream>
#include <sstream>
#include <unordered_map>
#include <unordered_set>

#include "ctcodes/detail/chain.hpp"
#include "ctcodes/errors.hpp"

namespace ctc {

struct PermGroup::ChainHolder {
  std::once_flag once;
  std::unique_ptr<detail::StabilizerChain> chain;
};

PermGroup::PermGroup(std::size_t degree, std::vector<Permutation> generators)
    : degree_(degree), holder_(std::make_shared<ChainHolder>()) {
  if (degree == 0) throw DomainError("permutation group degree must be positive");
  for (auto& g : generators) {
    if (g.degree() != degree) throw DomainError("generator degree does not match group degree");
    if (!g.is_identity()) generators_.push_back(std::move(g));
  }
}

const detail::StabilizerChain& PermGroup::chain() const {
  std::call_once(holder_->once, [this] {
    auto c = std::make_unique<detail::StabilizerChain>(degree_);
    for (const auto& g : generators_) c->add_generator(g);
    holder_->chain = std::move(c);
  });
  return *holder_->chain;
}

void PermGroup::check_point(Point point) const {
  if (point < 1 || point > degree_)
    throw DomainError("point " + std::to_string(point) + " outside 1.." + std::to_string(degree_));
}

BigInt PermGroup::order() const { return chain().order(); }

bool PermGroup::contains(const Permutation& p) const {
  if (p.degree() != degree_) throw DomainError("permutation degree does not match group degree");
  return chain().contains(p);
}

std::vector<Point> PermGroup::base() const {
  const auto& c = chain();
  std::vector<Point> out;
  for (std::size_t l = 0; l < c.depth(); ++l) out.push_back(c.base_point(l) + 1);
  return out;
}

PointSet PermGroup::orbit(Point point) const {
  check_point(point);
  std::vector<bool> seen(degree_, false);
  std::vector<Point> queue{point - 1};
  seen[point - 1] = true;
  for (std::size_t head = 0; head < queue.size(); ++head) {
    for (const auto& g : generators_) {
      const Point q = g(queue[head]);
      if (!seen[q]) {
        seen[q] = true;
        queue.push_back(q);
      }
    }
  }
  PointSet out;
  for (Point p = 0; p < degree_; ++p)
    if (seen[p]) out.push_back(p + 1);
  return out;
}

std::vector<PointSet> PermGroup::orbits() const {
  std::vector<PointSet> out;
  std::vector<bool> covered(degree_ + 1, false);
  for (Point p = 1; p <= degree_; ++p) {
    if (covered[p]) continue;
    auto o = orbit(p);
    for (Point x : o) covered[x] = true;
    out.push_back(std::move(o));
  }
  return out;
}

bool PermGroup::is_transitive() const { return orbit(1).size() == degree_; }

PermGroup PermGroup::point_stabilizer(Point point) const {
  check_point(point);
  const Point p0 = point - 1;
  // Orbit with transversal, then Schreier generators filtered through a chain.
  std::vector<int> slot(degree_, -1);
  std::vector<Point> orbit_points{p0};
  std::vector<Permutation> reps{Permutation(degree_)};
  slot[p0] = 0;
  for (std::size_t head = 0; head < orbit_points.size(); ++head) {
    for (const auto& g : generators_) {
      const Point q = g(orbit_points[head]);
      if (slot[q] >= 0) continue;
      slot[q] = static_cast<int>(orbit_points.size());
      orbit_points.push_back(q);
      reps.push_back(reps[head] * g);
    }
  }
  detail::StabilizerChain sub(degree_);
  std::vector<Permutation> gens;
  for (std::size_t idx = 0; idx < orbit_points.size(); ++idx) {
    for (const auto& g : generators_) {
      const Point q = g(orbit_points[idx]);
      Permutation s = reps[idx] * g * reps[static_cast<std::size_t>(slot[q])].inverse();
      if (!s.is_identity() && sub.add_generator(s)) gens.push_back(std::move(s));
    }
  }
  return PermGroup(degree_, std::move(gens));
}

namespace {

struct SetwiseSearch {
  const detail::StabilizerChain& chain;
  const std::vector<bool>& in_set;

  bool preserves(const Permutation& g) const {
    for (Point p = 0; p < g.degree(); ++p)
      if (in_set[p] != in_set[g(p)]) return false;
    return true;
  }

  // Depth-first over transversal choices below `level`; `prefix` is the
  // product u_{level-1} ... u_i already chosen.
  std::optional<Permutation> search(std::size_t level, const Permutation& prefix) const {
    if (level == chain.depth()) {
      if (preserves(prefix)) return prefix;
      return std::nullopt;
    }
    const Point b = chain.base_point(level);
    for (Point beta : chain.orbit(level)) {
      const Point image = prefix(beta);
      if (in_set[b] != in_set[image]) continue;
      auto found = search(level + 1, chain.transversal(level, beta) * prefix);
      if (found) return found;
    }
    return std::nullopt;
  }
};

PointSet orbit_under(const std::vector<Permutation>& gens, Point p0, std::size_t degree) {
  std::vector<bool> seen(degree, false);
  std::vector<Point> queue{p0};
  seen[p0] = true;
  for (std::size_t head = 0; head < queue.size(); ++head)
    for (const auto& g : gens) {
      const Point q = g(queue[head]);
      if (!seen[q]) {
        seen[q] = true;
        queue.push_back(q);
      }
    }
  return queue;
}

}  // namespace

PermGroup PermGroup::setwise_stabilizer(const PointSet& subset, const Limits& limits) const {
  if (degree_ > limits.max_setwise_degree)
    throw ResourceError("setwise stabilizer refused: degree " + std::to_string(degree_) + " exceeds cap " +
                        std::to_string(limits.max_setwise_degree));
  std::vector<bool> in_set(degree_, false);
  for (Point p : subset) {
    check_point(p);
    in_set[p - 1] = true;
  }
  const auto& c = chain();
  SetwiseSearch searcher{c, in_set};
  detail::StabilizerChain found_chain(degree_);
  std::vector<Permutation> found;
  // Build the stabilizer bottom-up: at level i, one search per coset of the
  // part already found.
  for (std::size_t li = c.depth(); li-- > 0;) {
    const Point b = c.base_point(li);
    for (Point gamma : c.orbit(li)) {
      if (gamma == b || in_set[b] != in_set[gamma]) continue;
      const auto reach = orbit_under(found, b, degree_);
      if (std::find(reach.begin(), reach.end(), gamma) != reach.end()) continue;
      auto g = searcher.search(li + 1, c.transversal(li, gamma));
      if (g && found_chain.add_generator(*g)) found.push_back(std::move(*g));
    }
  }
  return PermGroup(degree_, std::move(found));
}

namespace {

PointSet set_of(std::uint64_t mask) {
  PointSet s;
  for (Point p = 0; p < 64; ++p)
    if (mask >> p & 1u) s.push_back(p + 1);
  return s;
}

std::uint64_t image_mask(const Permutation& g, std::uint64_t mask) {
  std::uint64_t out = 0;
  while (mask) {
    const int p = __builtin_ctzll(mask);
    mask &= mask - 1;
    out |= std::uint64_t{1} << g(static_cast<Point>(p));
  }
  return out;
}

}  // namespace

std::vector<std::vector<PointSet>> PermGroup::orbits_on_ksubsets(std::size_t k, const Limits& limits) const {
  if (k > degree_) throw DomainError("k exceeds degree");
  if (degree_ > 64) throw ResourceError("k-subset orbits support degree at most 64");
  const std::uint64_t total = binomial_u64(degree_, k);
  if (total > limits.max_subsets)
    throw ResourceError("C(" + std::to_string(degree_) + "," + std::to_string(k) + ") = " + std::to_string(total) +
                        " exceeds subset budget");
  // Enumerate k-subsets as bitmasks in lexicographic order of their sorted point lists.
  std::vector<std::uint64_t> masks;
  masks.reserve(total);
  std::vector<Point> comb(k);
  std::iota(comb.begin(), comb.end(), 0u);
  while (true) {
    std::uint64_t m = 0;
    for (Point p : comb) m |= std::uint64_t{1} << p;
    masks.push_back(m);
    std::size_t i = k;
    while (i > 0 && comb[i - 1] == degree_ - k + i - 1) --i;
    if (i == 0) break;
    ++comb[i - 1];
    for (std::size_t j = i; j < k; ++j) comb[j] = comb[j - 1] + 1;
  }
  std::unordered_map<std::uint64_t, std::uint32_t> index;
  index.reserve(masks.size() * 2);
  for (std::uint32_t i = 0; i < masks.size(); ++i) index.emplace(masks[i], i);

  std::vector<bool> seen(masks.size(), false);
  std::vector<std::vector<PointSet>> out;
  for (std::uint32_t start = 0; start < masks.size(); ++start) {
    if (seen[start]) continue;
    std::vector<std::uint32_t> queue{start};
    seen[start] = true;
    for (std::size_t head = 0; head < queue.size(); ++head)
      for (const auto& g : generators_) {
        const auto j = index.at(image_mask(g, masks[queue[head]]));
        if (!seen[j]) {
          seen[j] = true;
          queue.push_back(j);
        }
      }
    std::sort(queue.begin(), queue.end());
    std::vector<PointSet> orb;
    orb.reserve(queue.size());
    for (auto j : queue) orb.push_back(set_of(masks[j]));
    out.push_back(std::move(orb));
  }
  return out;
}

bool PermGroup::is_k_homogeneous(std::size_t k, const Limits& limits) const {
  return orbits_on_ksubsets(k, limits).size() == 1;
}

bool PermGroup::is_k_transitive(std::size_t k, const Limits& limits) const {
  if (k > degree_) throw DomainError("k exceeds degree");
  if (k > 8 || degree_ > 255) throw ResourceError("ordered tuples supported for k <= 8, degree <= 255");
  std::uint64_t falling = 1;
  for (std::size_t i = 0; i < k; ++i) {
    falling *= degree_ - i;
    if (falling > limits.max_subsets) throw ResourceError("falling factorial exceeds tuple budget");
  }
  auto pack = [](const std::vector<Point>& t) {
    std::uint64_t v = 0;
    for (Point p : t) v = v << 8 | p;
    return v;
  };
  std::vector<Point> start(k);
  std::iota(start.begin(), start.end(), 0u);
  std::unordered_set<std::uint64_t> seen{pack(start)};
  std::vector<std::vector<Point>> queue{start};
  for (std::size_t head = 0; head < queue.size(); ++head)
    for (const auto& g : generators_) {
      std::vector<Point> img(k);
      for (std::size_t i = 0; i < k; ++i) img[i] = g(queue[head][i]);
      if (seen.insert(pack(img)).second) queue.push_back(std::move(img));
    }
  return queue.size() == falling;
}

std::vector<Permutation> PermGroup::elements(const Limits& limits) const {
  std::unordered_set<Permutation, PermutationHash> seen;
  std::vector<Permutation> queue{Permutation(degree_)};
  seen.insert(queue.front());
  for (std::size_t head = 0; head < queue.size(); ++head)
    for (const auto& g : generators_) {
      Permutation h = queue[head] * g;
      if (seen.insert(h).second) {
        if (queue.size() >= limits.max_orbit) throw ResourceError("group element enumeration exceeds budget");
        queue.push_back(std::move(h));
      }
    }
  return queue;
}

PermGroup symmetric_group(std::size_t n) {
  if (n < 2) return PermGroup(std::max<std::size_t>(n, 1));
  std::vector<Point> cyc(n);
  std::iota(cyc.begin(), cyc.end(), 0u);
  return PermGroup(n, {Permutation::transposition(n, 0, 1), Permutation::from_cycles(n, {cyc})});
}

PermGroup alternating_group(std::size_t n) {
  if (n < 3) return PermGroup(std::max<std::size_t>(n, 1));
  // A_n is generated by the 3-cycles (1 2 i).
  std::vector<Permutation> gens;
  for (Point i = 2; i < n; ++i) gens.push_back(Permutation::from_cycles(n, {{0, 1, i}}));
  return PermGroup(n, std::move(gens));
}

PermGroup cyclic_group(std::size_t n) {
  std::vector<Point> cyc(n);
  std::iota(cyc.begin(), cyc.end(), 0u);
  return PermGroup(n, {Permutation::from_cycles(n, {cyc})});
}

void write_group(std::ostream& out, const PermGroup& group) {
  out << "degree " << group.degree() << '\n';
  for (const auto& g : group.generators()) out << to_cycle_string(g, 1) << '\n';
}

PermGroup read_group(std::istream& in) {
  std::string line;
  std::size_t lineno = 0;
  std::optional<std::size_t> degree;
  std::vector<Permutation> gens;
  while (std::getline(in, line)) {
    ++lineno;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    if (!degree) {
      std::istringstream header(line);
      std::string word;
      long long n = 0;
      if (!(header >> word >> n) || word != "degree" || n <= 0)
        throw ParseError(lineno, "expected header 'degree n'");
      std::string rest;
      if (header >> rest) throw ParseError(lineno, "trailing text after degree header");
      degree = static_cast<std::size_t>(n);
      continue;
    }
    try {
      gens.push_back(parse_permutation(line, *degree, 1));
    } catch (const ParseError& e) {
      throw ParseError(lineno, e.what());
    }
  }
  if (!degree) throw ParseError(lineno, "missing 'degree n' header");
  return PermGroup(*degree, std::move(gens));
}

}  // namespace ctc
