#include "ctcodes/autgamma.hpp"

#include <algorithm>
#include <istream>
#include <ostream>
#include <sstream>
#include <unordered_map>
#include <unordered_set>

#include "ctcodes/detail/chain.hpp"
#include "ctcodes/errors.hpp"

namespace ctc {

WreathElement::WreathElement(std::vector<Permutation> alphabet_perms, Permutation coord_perm)
    : alphabet_(std::move(alphabet_perms)), coord_(std::move(coord_perm)) {
  if (alphabet_.empty()) throw DomainError("wreath element needs m >= 1 alphabet permutations");
  if (coord_.degree() != alphabet_.size()) throw DomainError("coordinate permutation degree differs from m");
  const auto q = alphabet_.front().degree();
  if (q < 2) throw DomainError("alphabet size must be at least 2");
  for (const auto& g : alphabet_)
    if (g.degree() != q) throw DomainError("alphabet permutations of unequal degree");
}

WreathElement WreathElement::identity(int m, int q) {
  return WreathElement(std::vector<Permutation>(static_cast<std::size_t>(m), Permutation(static_cast<std::size_t>(q))),
                       Permutation(static_cast<std::size_t>(m)));
}

WreathElement WreathElement::coordinate(const Permutation& sigma, int q) {
  return WreathElement(std::vector<Permutation>(sigma.degree(), Permutation(static_cast<std::size_t>(q))), sigma);
}

WreathElement WreathElement::diagonal(const Permutation& h, int m) {
  return WreathElement(std::vector<Permutation>(static_cast<std::size_t>(m), h), Permutation(static_cast<std::size_t>(m)));
}

Vertex WreathElement::apply(const Vertex& v) const {
  if (v.length() != length()) throw DomainError("vertex length differs from wreath element length");
  const auto q = static_cast<Symbol>(alphabet_size());
  std::vector<Symbol> out(v.entries.size());
  for (std::size_t j = 0; j < v.entries.size(); ++j) {
    if (v.entries[j] >= q) throw DomainError("vertex symbol outside the alphabet");
    out[coord_(static_cast<Point>(j))] = static_cast<Symbol>(alphabet_[j](v.entries[j]));
  }
  return Vertex(std::move(out));
}

WreathElement WreathElement::operator*(const WreathElement& rhs) const {
  if (rhs.length() != length() || rhs.alphabet_size() != alphabet_size())
    throw DomainError("composing wreath elements of different shape");
  std::vector<Permutation> g(alphabet_.size());
  for (std::size_t j = 0; j < alphabet_.size(); ++j) g[j] = alphabet_[j] * rhs.alphabet_[coord_(static_cast<Point>(j))];
  return WreathElement(std::move(g), coord_ * rhs.coord_);
}

WreathElement WreathElement::inverse() const {
  std::vector<Permutation> g(alphabet_.size());
  for (std::size_t j = 0; j < alphabet_.size(); ++j) g[coord_(static_cast<Point>(j))] = alphabet_[j].inverse();
  return WreathElement(std::move(g), coord_.inverse());
}

bool WreathElement::is_identity() const {
  return coord_.is_identity() &&
         std::all_of(alphabet_.begin(), alphabet_.end(), [](const Permutation& g) { return g.is_identity(); });
}

bool WreathElement::fixes_zero() const {
  return std::all_of(alphabet_.begin(), alphabet_.end(), [](const Permutation& g) { return g(0) == 0; });
}

Permutation WreathElement::to_omega() const {
  const auto q = static_cast<Point>(alphabet_size());
  std::vector<Point> images(alphabet_.size() * q);
  for (Point i = 0; i < alphabet_.size(); ++i)
    for (Point a = 0; a < q; ++a) images[i * q + a] = coord_(i) * q + alphabet_[i](a);
  return Permutation::from_images(std::move(images));
}

WreathElement WreathElement::from_omega(const Permutation& p, int m, int q) {
  const auto uq = static_cast<Point>(q);
  if (p.degree() != static_cast<std::size_t>(m) * uq) throw DomainError("Omega permutation has wrong degree");
  std::vector<Point> sigma(static_cast<std::size_t>(m));
  std::vector<Permutation> g;
  for (Point i = 0; i < static_cast<Point>(m); ++i) {
    const Point block = p(i * uq) / uq;
    std::vector<Point> images(uq);
    for (Point a = 0; a < uq; ++a) {
      const Point img = p(i * uq + a);
      if (img / uq != block) throw DomainError("Omega permutation does not preserve the entry blocks");
      images[a] = img % uq;
    }
    sigma[i] = block;
    g.push_back(Permutation::from_images(std::move(images)));
  }
  return WreathElement(std::move(g), Permutation::from_images(std::move(sigma)));
}

std::size_t WreathElementHash::operator()(const WreathElement& x) const noexcept {
  PermutationHash h;
  std::size_t seed = h(x.coord_perm());
  for (const auto& g : x.alphabet_perms()) seed ^= h(g) + 0x9e3779b97f4a7c15ull + (seed << 6) + (seed >> 2);
  return seed;
}

Permutation mu(const WreathElement& x) { return x.coord_perm(); }

Permutation phi(const WreathElement& x, int entry) {
  if (entry < 1 || entry > x.length()) throw DomainError("entry outside 1..m");
  const auto i = static_cast<Point>(entry - 1);
  if (x.coord_perm()(i) != i) throw PreconditionError("phi_i needs an element fixing entry i");
  return x.alphabet_perms()[i];
}

bool support_transport_check(const WreathElement& x, const Vertex& v) {
  if (!x.fixes_zero()) throw PreconditionError("support transport needs an element fixing the zero vertex");
  PointSet moved;
  for (Point p : support(v)) moved.push_back(x.coord_perm()(p - 1) + 1);
  std::sort(moved.begin(), moved.end());
  return support(x.apply(v)) == moved;
}

Code apply(const WreathElement& x, const Code& code) {
  if (x.length() != code.length() || x.alphabet_size() != code.alphabet_size())
    throw DomainError("wreath element shape differs from code shape");
  std::vector<Vertex> image;
  image.reserve(code.size());
  for (const auto& w : code.words()) image.push_back(x.apply(w));
  return Code(code.length(), code.alphabet_size(), std::move(image));
}

bool is_code_automorphism(const WreathElement& x, const Code& code) {
  if (x.length() != code.length() || x.alphabet_size() != code.alphabet_size())
    throw DomainError("wreath element shape differs from code shape");
  return std::all_of(code.words().begin(), code.words().end(), [&](const Vertex& w) { return code.contains(x.apply(w)); });
}

namespace {

std::vector<Permutation> omega_images(const std::vector<WreathElement>& gens) {
  std::vector<Permutation> out;
  for (const auto& g : gens) out.push_back(g.to_omega());
  return out;
}

std::vector<Permutation> mu_images(const std::vector<WreathElement>& gens) {
  std::vector<Permutation> out;
  for (const auto& g : gens) out.push_back(mu(g));
  return out;
}

}  // namespace

AutSubgroup::AutSubgroup(int m, int q, std::vector<WreathElement> generators)
    : m_(m),
      q_(q),
      generators_([&] {
        for (const auto& g : generators)
          if (g.length() != m || g.alphabet_size() != q) throw DomainError("generator shape differs from (m,q)");
        std::vector<WreathElement> kept;
        for (auto& g : generators)
          if (!g.is_identity()) kept.push_back(std::move(g));
        return kept;
      }()),
      omega_(static_cast<std::size_t>(m) * static_cast<std::size_t>(q), omega_images(generators_)),
      mu_(static_cast<std::size_t>(m), mu_images(generators_)) {}

BigInt AutSubgroup::order(const Limits& limits) const {
  if (omega_.degree() <= limits.max_chain_degree) return omega_.order();
  return omega_.elements(limits).size();
}

bool AutSubgroup::contains(const WreathElement& x, const Limits& limits) const {
  if (x.length() != m_ || x.alphabet_size() != q_) throw DomainError("element shape differs from group shape");
  const auto p = x.to_omega();
  if (omega_.degree() <= limits.max_chain_degree) return omega_.contains(p);
  const auto all = omega_.elements(limits);
  return std::find(all.begin(), all.end(), p) != all.end();
}

std::vector<Vertex> AutSubgroup::orbit(const Vertex& v, const Limits& limits) const {
  const HammingSpace space(m_, q_);
  space.check(v);
  std::unordered_set<std::uint64_t> seen{space.encode(v)};
  std::vector<Vertex> queue{v};
  for (std::size_t head = 0; head < queue.size(); ++head)
    for (const auto& g : generators_) {
      Vertex w = g.apply(queue[head]);
      if (seen.insert(space.encode(w)).second) {
        if (queue.size() >= limits.max_orbit) throw ResourceError("vertex orbit exceeds budget");
        queue.push_back(std::move(w));
      }
    }
  std::sort(queue.begin(), queue.end());
  return queue;
}

AutSubgroup conjugate(const AutSubgroup& group, const WreathElement& y) {
  const auto yi = y.inverse();
  std::vector<WreathElement> gens;
  for (const auto& g : group.generators()) gens.push_back(yi * g * y);
  return AutSubgroup(group.length(), group.alphabet_size(), std::move(gens));
}

bool kernel_on_entries_trivial(const AutSubgroup& group, const Limits& limits) {
  return group.order(limits) == group.mu_image().order();
}

namespace {

/// Schreier generators for the stabilizer of `start` under an action of X on
/// keys, reduced through a chain on Omega when the degree allows it.
template <class Key, class Act>
AutSubgroup stabilizer_by_schreier(const AutSubgroup& group, const Key& start, Act act, const Limits& limits) {
  const auto& gens = group.generators();
  std::unordered_map<Key, std::size_t> slot{{start, 0}};
  std::vector<Key> points{start};
  std::vector<WreathElement> reps{WreathElement::identity(group.length(), group.alphabet_size())};
  for (std::size_t head = 0; head < points.size(); ++head)
    for (const auto& g : gens) {
      Key k = act(points[head], g);
      if (slot.count(k)) continue;
      if (points.size() >= limits.max_orbit) throw ResourceError("stabilizer orbit exceeds budget");
      slot.emplace(k, points.size());
      points.push_back(k);
      reps.push_back(reps[head] * g);
    }

  const std::size_t degree = static_cast<std::size_t>(group.length()) * static_cast<std::size_t>(group.alphabet_size());
  const bool use_chain = degree <= limits.max_chain_degree;
  detail::StabilizerChain chain(degree);
  std::unordered_set<WreathElement, WreathElementHash> seen;
  std::vector<WreathElement> kept;
  for (std::size_t idx = 0; idx < points.size(); ++idx)
    for (const auto& g : gens) {
      const auto target = slot.at(act(points[idx], g));
      WreathElement s = reps[idx] * g * reps[target].inverse();
      if (s.is_identity()) continue;
      if (use_chain ? chain.add_generator(s.to_omega()) : seen.insert(s).second) kept.push_back(std::move(s));
    }
  return AutSubgroup(group.length(), group.alphabet_size(), std::move(kept));
}

std::uint64_t entry_mask(const PointSet& entries, int m) {
  std::uint64_t mask = 0;
  for (Point p : entries) {
    if (p < 1 || static_cast<int>(p) > m) throw DomainError("entry outside 1..m");
    mask |= std::uint64_t{1} << (p - 1);
  }
  return mask;
}

}  // namespace

AutSubgroup vertex_stabilizer(const AutSubgroup& group, const Vertex& v, const Limits& limits) {
  const HammingSpace space(group.length(), group.alphabet_size());
  space.check(v);
  return stabilizer_by_schreier(
      group, space.encode(v),
      [&space](std::uint64_t x, const WreathElement& g) { return space.encode(g.apply(space.decode(x))); }, limits);
}

AutSubgroup entry_stabilizer(const AutSubgroup& group, int entry, const Limits& limits) {
  if (entry < 1 || entry > group.length()) throw DomainError("entry outside 1..m");
  return stabilizer_by_schreier(
      group, static_cast<Point>(entry - 1), [](Point i, const WreathElement& g) { return g.coord_perm()(i); }, limits);
}

AutSubgroup entry_set_stabilizer(const AutSubgroup& group, const PointSet& entries, const Limits& limits) {
  if (group.length() > 64) throw ResourceError("entry-set stabilizer supports m <= 64");
  return stabilizer_by_schreier(
      group, entry_mask(entries, group.length()),
      [](std::uint64_t mask, const WreathElement& g) {
        std::uint64_t out = 0;
        while (mask) {
          const int p = __builtin_ctzll(mask);
          mask &= mask - 1;
          out |= std::uint64_t{1} << g.coord_perm()(static_cast<Point>(p));
        }
        return out;
      },
      limits);
}

PermGroup induced_alphabet_group(const AutSubgroup& group, int entry, const Limits& limits) {
  const auto stab = entry_stabilizer(group, entry, limits);
  std::vector<Permutation> gens;
  for (const auto& x : stab.generators()) gens.push_back(phi(x, entry));
  return PermGroup(static_cast<std::size_t>(group.alphabet_size()), std::move(gens));
}

Normalization normalize_code(const Code& code, const Vertex& alpha, const Vertex& beta, Symbol a) {
  const int m = code.length();
  const int q = code.alphabet_size();
  if (a >= q) throw DomainError("target symbol outside the alphabet");
  const int delta = min_distance(code);
  if (!code.contains(alpha) || !code.contains(beta)) throw PreconditionError("alpha and beta must be codewords");
  if (hamming_distance(alpha, beta) != delta) throw PreconditionError("d(alpha,beta) must equal the minimum distance");

  const PointSet diff = diff_positions(alpha, beta);
  const auto others = diff_set(alpha, beta, code);  // lexicographic order
  if (static_cast<int>(others.size()) > q - 1) throw Error("Diff(alpha,beta,C) larger than q-1; code invariant broken");

  // c_1 < c_2 < ... : the smallest symbols other than a.
  std::vector<Symbol> targets;
  for (int c = 0; c < q && targets.size() < others.size(); ++c)
    if (c != a) targets.push_back(static_cast<Symbol>(c));

  std::vector<bool> in_diff(static_cast<std::size_t>(m), false);
  for (Point p : diff) in_diff[p - 1] = true;

  std::vector<Permutation> h;
  for (int k = 0; k < m; ++k) {
    const auto uk = static_cast<std::size_t>(k);
    if (!in_diff[uk]) {
      h.push_back(Permutation::transposition(static_cast<std::size_t>(q), a, alpha[uk]));
      continue;
    }
    // Prescribed images, then the remaining symbols in increasing order.
    std::vector<int> image(static_cast<std::size_t>(q), -1);
    std::vector<bool> used(static_cast<std::size_t>(q), false);
    image[alpha[uk]] = a;
    used[a] = true;
    for (std::size_t i = 0; i < others.size(); ++i) {
      image[others[i][uk]] = targets[i];
      used[targets[i]] = true;
    }
    int next = 0;
    for (int s = 0; s < q; ++s) {
      if (image[static_cast<std::size_t>(s)] >= 0) continue;
      while (used[static_cast<std::size_t>(next)]) ++next;
      image[static_cast<std::size_t>(s)] = next;
      used[static_cast<std::size_t>(next)] = true;
    }
    std::vector<Point> img(image.begin(), image.end());
    h.push_back(Permutation::from_images(std::move(img)));
  }
  // sigma: Diff positions onto 1..delta in order, the rest onto delta+1..m in order.
  std::vector<Point> sigma(static_cast<std::size_t>(m));
  Point front = 0;
  Point back = static_cast<Point>(delta);
  for (int k = 0; k < m; ++k) sigma[static_cast<std::size_t>(k)] = in_diff[static_cast<std::size_t>(k)] ? front++ : back++;

  WreathElement x(std::move(h), Permutation::from_images(std::move(sigma)));
  Code image = apply(x, code);

  if (x.apply(alpha) != Vertex::constant(m, a)) throw Error("normalize_code postcondition failed: alpha image");
  for (std::size_t i = 0; i < others.size(); ++i) {
    Vertex expected = Vertex::constant(m, a);
    for (int k = 0; k < delta; ++k) expected.entries[static_cast<std::size_t>(k)] = targets[i];
    if (x.apply(others[i]) != expected) throw Error("normalize_code postcondition failed: Diff set shape");
  }
  return {std::move(x), std::move(image)};
}

void write_aut_group(std::ostream& out, const AutSubgroup& group) {
  out << group.length() << ' ' << group.alphabet_size() << '\n';
  for (const auto& x : group.generators()) {
    const auto& g = x.alphabet_perms();
    const bool diagonal = std::all_of(g.begin(), g.end(), [&](const Permutation& p) { return p == g.front(); });
    const bool trivial_b = diagonal && g.front().is_identity();
    if (!x.coord_perm().is_identity() || trivial_b) {
      out << "sigma := " << to_cycle_string(x.coord_perm(), 1);
      if (!trivial_b) out << " | ";
    }
    if (trivial_b) {
      out << '\n';
      continue;
    }
    if (diagonal) {
      out << "g := const " << to_cycle_string(g.front(), 0) << '\n';
      continue;
    }
    out << "g := ";
    for (std::size_t i = 0; i < g.size(); ++i) out << (i ? "," : "") << to_cycle_string(g[i], 0);
    out << '\n';
  }
}

namespace {

std::string trim_copy(std::string s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

std::vector<std::string> split_top_level(const std::string& s, char sep) {
  std::vector<std::string> out;
  int depth = 0;
  std::string cur;
  for (char c : s) {
    if (c == '(' || c == '[') ++depth;
    if (c == ')' || c == ']') --depth;
    if (c == sep && depth == 0) {
      out.push_back(trim_copy(cur));
      cur.clear();
    } else {
      cur += c;
    }
  }
  out.push_back(trim_copy(cur));
  return out;
}

}  // namespace

AutSubgroup read_aut_group(std::istream& in, int m, int q) {
  std::string line;
  std::size_t lineno = 0;
  bool first = true;
  std::vector<WreathElement> gens;
  const auto um = static_cast<std::size_t>(m);
  const auto uq = static_cast<std::size_t>(q);
  while (std::getline(in, line)) {
    ++lineno;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    line = trim_copy(line);
    if (line.empty()) continue;
    if (first && line.find(":=") == std::string::npos) {
      std::istringstream hs(line);
      int hm = 0;
      int hq = 0;
      std::string extra;
      if (!(hs >> hm >> hq) || (hs >> extra)) throw ParseError(lineno, "expected header 'm q' or an element line");
      if (hm != m || hq != q)
        throw DomainError("automorphism file is for H(" + std::to_string(hm) + "," + std::to_string(hq) +
                          ") but the code lives in H(" + std::to_string(m) + "," + std::to_string(q) + ")");
      first = false;
      continue;
    }
    first = false;
    Permutation sigma(um);
    std::vector<Permutation> g(um, Permutation(uq));
    try {
      for (const auto& part : split_top_level(line, '|')) {
        const auto eq = part.find(":=");
        if (eq == std::string::npos) throw ParseError(lineno, "expected 'key := value'");
        const auto key = trim_copy(part.substr(0, eq));
        auto value = trim_copy(part.substr(eq + 2));
        if (key == "sigma") {
          sigma = parse_permutation(value, um, 1);
        } else if (key == "g") {
          if (value.rfind("const", 0) == 0) {
            const auto h = parse_permutation(value.substr(5), uq, 0);
            g.assign(um, h);
          } else {
            const auto items = split_top_level(value, ',');
            if (items.size() != um)
              throw ParseError(lineno, "expected " + std::to_string(m) + " alphabet permutations, got " +
                                           std::to_string(items.size()));
            for (std::size_t i = 0; i < um; ++i) g[i] = parse_permutation(items[i], uq, 0);
          }
        } else {
          throw ParseError(lineno, "unknown key '" + key + "'");
        }
      }
    } catch (const ParseError& e) {
      if (e.line() != 0) throw;
      throw ParseError(lineno, e.what());
    }
    gens.emplace_back(std::move(g), std::move(sigma));
  }
  return AutSubgroup(m, q, std::move(gens));
}

}  // namespace ctc
