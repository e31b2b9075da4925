#include "ctcodes/theoremsuite.hpp"

#include <algorithm>
#include <fstream>
#include <functional>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <sstream>

#include "ctcodes/constructions.hpp"
#include "ctcodes/designs.hpp"
#include "ctcodes/errors.hpp"
#include "ctcodes/exact.hpp"
#include "ctcodes/nonexistence.hpp"
#include "ctcodes/permgroup.hpp"
#include "ctcodes/regularity.hpp"
#include "ctcodes/spectra.hpp"
#include "ctcodes/transitivity.hpp"

namespace ctc {

std::string to_string(ReplayKind kind) {
  switch (kind) {
    case ReplayKind::Exhaustive: return "exhaustive";
    case ReplayKind::Sampled: return "sampled";
    case ReplayKind::Corpus: return "corpus";
    case ReplayKind::Instance: return "instance";
    case ReplayKind::External: return "external";
  }
  return "unknown";
}

const std::vector<ReplayEntry>& replay_registry() {
  static const std::vector<ReplayEntry> registry = [] {
    std::vector<ReplayEntry> r{
        {"affine-bound-table", ReplayKind::External, 0,
         "q^(r^n) <= r^(n^2+2n) with the length window admits exactly (r,n,q) = (2,3,3), (2,4,2), (2,5,2)"},
        {"almost-simple-counting", ReplayKind::External, 0,
         "the counting bound q^m/(m+1) <= |X| fails for the listed almost simple groups"},
        {"alphabet-two-transitive", ReplayKind::Corpus, 0,
         "(X,1)-neighbour transitive, delta >= 3, |C| > 1 implies X_i induces a 2-transitive group on Q"},
        {"binary-nonexistence", ReplayKind::Instance, 0,
         "no binary completely regular codes with (m,delta) in {(13,5),(13,6),(16,5),(16,7),(16,8)}"},
        {"entry-set-stabilizer-transitive", ReplayKind::Corpus, 0,
         "(X,s)-neighbour transitive implies X_I transitive on C for |I| <= min(s, floor((delta-1)/2))"},
        {"entry-two-transitive", ReplayKind::Corpus, 0,
         "(X,2)-neighbour transitive, |C| > 1, trivial kernel, delta >= 5 implies mu(X) 2-transitive"},
        {"faithful-forward", ReplayKind::Instance, 0,
         "Rep(m,2) with the example group meets every hypothesis and conclusion of the classification, m = 5..8"},
        {"fisher-size-bound", ReplayKind::Corpus, 0,
         "binary completely regular, |C| >= 2, 5 <= delta < m implies |C| >= m+1"},
        {"full-distance-normal-form", ReplayKind::Exhaustive, 0,
         "delta = m implies an equivalent subcode of Rep(m,q); 1-regular implies all of Rep(m,q)"},
        {"orbit-counting-bound", ReplayKind::Corpus, 0,
         "X-completely transitive implies q^m/(m+1) <= |X|; trivial kernel and m >= 5 imply q <= m-2"},
        {"pgl27-m8", ReplayKind::Instance, 0, "PGL(2,7) has order prime to 5, so C_4 of Rep(8,2) is no orbit"},
        {"psl-bound-table", ReplayKind::External, 0,
         "2^m <= (m+1)|PGammaL(n,r)| with m >= 10 admits exactly (n,r) = (4,2), (3,3), (3,4), (2,9), (2,11), "
         "(2,13), (2,16)"},
        {"psl25-triples", ReplayKind::Instance, 0,
         "PSL(2,5) on 6 points has two orbits of 10 triples, complementary 2-(6,3,2) designs"},
        {"size-two-iff-full-distance", ReplayKind::Sampled, 2213,
         "completely regular, m >= 5, delta >= 2: |C| = 2 iff delta = m"},
        {"stabilizer-homogeneity", ReplayKind::Corpus, 0,
         "X_alpha transitive on Gamma_i(alpha) and i-homogeneous on M for i <= min(s, floor((delta-1)/2))"},
        {"twisted-pgl-m6", ReplayKind::Instance, 0,
         "the twisted PGL(2,5) group on Rep(6,2) has level 2 and C_3 splits into two orbits of 10"},
        {"two-word-codes", ReplayKind::Exhaustive, 0, "a 1-regular code of two words has delta in {1, m} and q = 2"},
    };
    std::sort(r.begin(), r.end(), [](const auto& a, const auto& b) { return a.id < b.id; });
    return r;
  }();
  return registry;
}

std::optional<std::string> ReplayReport::fact(const std::string& key) const {
  for (const auto& [k, v] : facts)
    if (k == key) return v;
  return std::nullopt;
}

namespace {

std::string join(const std::vector<std::size_t>& xs, const char* sep = " ") {
  std::string out;
  for (std::size_t i = 0; i < xs.size(); ++i) out += (i ? sep : "") + std::to_string(xs[i]);
  return out;
}

std::string join_sets(const std::vector<PointSet>& sets) {
  std::string out;
  for (const auto& s : sets) {
    if (!out.empty()) out += ' ';
    out += '{';
    for (std::size_t i = 0; i < s.size(); ++i) out += (i ? "," : "") + std::to_string(s[i]);
    out += '}';
  }
  return out;
}

void record(ReplayReport& report, std::string name, bool passed, std::string detail) {
  ++report.checked;
  if (!passed) ++report.counterexamples;
  report.instances.push_back({std::move(name), passed, std::move(detail)});
}

// Portable draws: std distributions differ between standard libraries.
std::uint64_t draw(std::mt19937_64& rng, std::uint64_t n) { return rng() % n; }

Permutation random_permutation(std::mt19937_64& rng, std::size_t n) {
  std::vector<Point> images(n);
  std::iota(images.begin(), images.end(), Point{0});
  for (std::size_t i = n; i > 1; --i) std::swap(images[i - 1], images[draw(rng, i)]);
  return Permutation::from_images(std::move(images));
}

WreathElement random_wreath_element(std::mt19937_64& rng, int m, int q) {
  std::vector<Permutation> g;
  for (int i = 0; i < m; ++i) g.push_back(random_permutation(rng, static_cast<std::size_t>(q)));
  return WreathElement(std::move(g), random_permutation(rng, static_cast<std::size_t>(m)));
}

Vertex from_mask(std::uint64_t mask, int m) {
  Vertex v = Vertex::zero(m);
  for (int i = 0; i < m; ++i) v.entries[static_cast<std::size_t>(i)] = static_cast<Symbol>((mask >> i) & 1u);
  return v;
}

/// Calls f on every subset of {1..m} of size at most k, smallest first.
void for_each_subset(int m, int k, const std::function<void(const PointSet&)>& f) {
  PointSet current;
  std::function<void(int)> rec = [&](int next) {
    f(current);
    if (static_cast<int>(current.size()) == k) return;
    for (int p = next; p <= m; ++p) {
      current.push_back(static_cast<Point>(p));
      rec(p + 1);
      current.pop_back();
    }
  };
  rec(1);
}

AutSubgroup merged(const AutSubgroup& a, const AutSubgroup& b) {
  std::vector<WreathElement> gens = a.generators();
  gens.insert(gens.end(), b.generators().begin(), b.generators().end());
  return AutSubgroup(a.length(), a.alphabet_size(), std::move(gens));
}

struct VerifiedInstance {
  const CorpusInstance* instance;
  TransitivityVerdict verdict;
  int delta;
};

/// Corpus members whose level is at least `min_level`, with their verdicts.
std::vector<VerifiedInstance> verified_corpus(const std::vector<CorpusInstance>& corpus, int min_level,
                                              const Limits& limits) {
  std::vector<VerifiedInstance> out;
  for (const auto& inst : corpus) {
    auto verdict = transitivity(inst.code, inst.group, limits);
    if (verdict.level < min_level) continue;
    const int delta = inst.code.size() > 1 ? min_distance(inst.code) : inst.code.length() + 1;
    out.push_back({&inst, std::move(verdict), delta});
  }
  return out;
}

// ---------------------------------------------------------------------------

void two_word_codes(ReplayReport& report, const Limits& limits) {
  report.scope = "all codes {alpha, beta}, 2 <= m <= 5, 2 <= q <= 3";
  std::uint64_t total = 0, regular = 0;
  for (int q = 2; q <= 3; ++q)
    for (int m = 2; m <= 5; ++m) {
      const HammingSpace space(m, q);
      const auto n = space.vertex_count();
      std::uint64_t pairs = 0, one_regular = 0, bad = 0;
      std::string first_bad;
      for (std::uint64_t a = 0; a < n; ++a)
        for (std::uint64_t b = a + 1; b < n; ++b) {
          const Code code(m, q, {space.decode(a), space.decode(b)});
          ++pairs;
          if (s_regularity_level(code, limits) < 1) continue;
          ++one_regular;
          const int delta = min_distance(code);
          if ((delta == 1 || delta == m) && q == 2) continue;
          if (bad++ == 0) first_bad = to_string(code.words()[0]) + " " + to_string(code.words()[1]);
        }
      total += pairs;
      regular += one_regular;
      report.counterexamples += bad;
      report.instances.push_back({"m=" + std::to_string(m) + " q=" + std::to_string(q), bad == 0,
                                  "pairs " + std::to_string(pairs) + ", 1-regular " + std::to_string(one_regular) +
                                      (bad ? ", first counterexample " + first_bad : "")});
    }
  report.checked = total;
  report.facts.emplace_back("pairs", std::to_string(total));
  report.facts.emplace_back("one-regular", std::to_string(regular));
}

void full_distance_normal_form(ReplayReport& report, const Limits& limits) {
  report.scope = "all codes with |C| >= 2 and delta = m, 2 <= m <= 4, 2 <= q <= 3";
  std::uint64_t total = 0, one_regular = 0;
  for (int q = 2; q <= 3; ++q)
    for (int m = 2; m <= 4; ++m) {
      const HammingSpace space(m, q);
      const auto n = space.vertex_count();
      std::vector<Vertex> all;
      for (std::uint64_t x = 0; x < n; ++x) all.push_back(space.decode(x));
      std::uint64_t codes = 0, regular = 0, bad = 0;
      std::string first_bad;
      const Code rep = rep_code(m, q);
      std::vector<std::size_t> chosen;
      std::function<void(std::size_t)> extend = [&](std::size_t next) {
        if (chosen.size() >= 2) {
          std::vector<Vertex> words;
          for (auto i : chosen) words.push_back(all[i]);
          const Code code(m, q, std::move(words));
          ++codes;
          const auto norm = normalize_code(code, code.words()[0], code.words()[1], 0);
          bool ok = std::includes(rep.words().begin(), rep.words().end(), norm.image.words().begin(),
                                  norm.image.words().end());
          if (s_regularity_level(code, limits) >= 1) {
            ++regular;
            ok = ok && norm.image == rep;
          }
          if (!ok && bad++ == 0) first_bad = join(std::vector<std::size_t>(chosen.begin(), chosen.end()), ",");
        }
        for (std::size_t j = next; j < all.size(); ++j) {
          bool far = true;
          for (auto i : chosen) far = far && hamming_distance(all[i], all[j]) == m;
          if (!far) continue;
          chosen.push_back(j);
          extend(j + 1);
          chosen.pop_back();
        }
      };
      extend(0);
      total += codes;
      one_regular += regular;
      report.counterexamples += bad;
      report.instances.push_back({"m=" + std::to_string(m) + " q=" + std::to_string(q), bad == 0,
                                  "codes " + std::to_string(codes) + ", 1-regular " + std::to_string(regular) +
                                      (bad ? ", first counterexample at indices " + first_bad : "")});
    }
  report.checked = total;
  report.facts.emplace_back("codes", std::to_string(total));
  report.facts.emplace_back("one-regular", std::to_string(one_regular));
}

void size_two_iff_full_distance(ReplayReport& report, const Limits& limits) {
  report.scope = "completely regular codes with delta >= 2 drawn for m = 5, 6, q = 2";
  std::mt19937_64 rng(report.seed);
  for (int m = 5; m <= 6; ++m) {
    std::set<std::vector<Vertex>> seen;
    std::vector<Code> candidates{rep_code(m, 2)};
    // Random linear codes of dimension 1..m-1.
    for (int draw_i = 0; draw_i < 200; ++draw_i) {
      const int k = 1 + static_cast<int>(draw(rng, static_cast<std::uint64_t>(m - 1)));
      std::vector<std::uint64_t> rows;
      for (int r = 0; r < k; ++r) rows.push_back(draw(rng, std::uint64_t{1} << m));
      std::vector<Vertex> words;
      for (std::uint64_t c = 0; c < (std::uint64_t{1} << k); ++c) {
        std::uint64_t w = 0;
        for (int r = 0; r < k; ++r)
          if ((c >> r) & 1u) w ^= rows[static_cast<std::size_t>(r)];
        words.push_back(from_mask(w, m));
      }
      candidates.emplace_back(m, 2, std::move(words));
    }
    // Orbits of the zero word under random subgroups of Aut(H(m,2)).
    for (int draw_i = 0; draw_i < 150; ++draw_i) {
      std::vector<WreathElement> gens;
      const int k = 1 + static_cast<int>(draw(rng, 2));
      for (int r = 0; r < k; ++r) gens.push_back(random_wreath_element(rng, m, 2));
      const AutSubgroup group(m, 2, std::move(gens));
      candidates.emplace_back(m, 2, group.orbit(Vertex::zero(m), limits));
    }
    // Orbits of a random word under coordinate permutations, sometimes with the complement map.
    for (int draw_i = 0; draw_i < 150; ++draw_i) {
      std::vector<WreathElement> gens;
      const int k = 1 + static_cast<int>(draw(rng, 2));
      for (int r = 0; r < k; ++r)
        gens.push_back(WreathElement::coordinate(random_permutation(rng, static_cast<std::size_t>(m)), 2));
      if (draw(rng, 2)) gens.push_back(diagonal_flip(m));
      const AutSubgroup group(m, 2, std::move(gens));
      candidates.emplace_back(m, 2, group.orbit(from_mask(draw(rng, std::uint64_t{1} << m), m), limits));
    }
    // Two-word codes.
    for (int draw_i = 0; draw_i < 50; ++draw_i)
      candidates.emplace_back(m, 2, std::vector<Vertex>{Vertex::zero(m), from_mask(draw(rng, std::uint64_t{1} << m), m)});

    std::size_t completely_regular = 0, size_two = 0, bad = 0;
    std::map<std::size_t, std::size_t> by_size;
    std::string first_bad;
    for (const auto& code : candidates) {
      if (!seen.insert(code.words()).second) continue;
      if (code.size() < 2 || min_distance(code) < 2) continue;
      if (!is_completely_regular(code, limits)) continue;
      ++completely_regular;
      ++by_size[code.size()];
      const bool two = code.size() == 2;
      size_two += two;
      if (two != (min_distance(code) == m) && bad++ == 0) first_bad = to_string(code.words().back());
    }
    std::vector<std::size_t> sizes;
    for (const auto& [size, count] : by_size) {
      sizes.push_back(size);
      sizes.push_back(count);
    }
    report.checked += completely_regular;
    report.counterexamples += bad;
    report.instances.push_back(
        {"m=" + std::to_string(m), bad == 0,
         "candidates " + std::to_string(candidates.size()) + ", distinct " + std::to_string(seen.size()) +
             ", completely regular " + std::to_string(completely_regular) + ", size two " + std::to_string(size_two) +
             (bad ? ", first counterexample contains " + first_bad : "")});
    std::string histogram;
    for (std::size_t i = 0; i < sizes.size(); i += 2)
      histogram += (i ? " " : "") + std::to_string(sizes[i]) + "x" + std::to_string(sizes[i + 1]);
    report.facts.emplace_back("sizes-m" + std::to_string(m), histogram);
  }
}

void stabilizer_homogeneity(ReplayReport& report, const Limits& limits) {
  const auto corpus = transitive_corpus();
  report.scope = "corpus members with level >= 1 and |C| >= 2";
  for (const auto& v : verified_corpus(corpus, 1, limits)) {
    if (v.instance->code.size() < 2) continue;
    const auto checks = check_stabilizer_homogeneity(v.instance->code, v.instance->group, v.verdict.level, limits);
    bool ok = true;
    std::string detail;
    for (const auto& c : checks) {
      ok = ok && c.passed;
      detail += (detail.empty() ? "" : "; ") + c.name + (c.passed ? " ok" : " FAILED " + c.detail);
    }
    record(report, v.instance->name, ok, "level " + std::to_string(v.verdict.level) + ", " + detail);
  }
}

void entry_set_stabilizer_transitive(ReplayReport& report, const Limits& limits) {
  const auto corpus = transitive_corpus();
  report.scope = "corpus members with level >= 1, every I with |I| <= min(level, floor((delta-1)/2))";
  for (const auto& v : verified_corpus(corpus, 1, limits)) {
    const int bound = std::min(v.verdict.level, (v.delta - 1) / 2);
    std::size_t subsets = 0, failures = 0;
    std::string first;
    for_each_subset(v.instance->code.length(), bound, [&](const PointSet& entries) {
      ++subsets;
      if (!check_entry_stabilizer_transitive_on_code(v.instance->code, v.instance->group, entries, limits) &&
          failures++ == 0)
        first = join_sets({entries});
    });
    record(report, v.instance->name, failures == 0,
           "subsets " + std::to_string(subsets) + " up to size " + std::to_string(bound) +
               (failures ? ", first failure " + first : ""));
  }
}

void alphabet_two_transitive(ReplayReport& report, const Limits& limits) {
  const auto corpus = transitive_corpus();
  report.scope = "corpus members with level >= 1, delta >= 3, |C| > 1; every entry";
  for (const auto& v : verified_corpus(corpus, 1, limits)) {
    if (v.instance->code.size() < 2 || v.delta < 3) continue;
    bool ok = true;
    std::string orders;
    for (int i = 1; i <= v.instance->code.length(); ++i) {
      const auto induced = induced_alphabet_group(v.instance->group, i, limits);
      ok = ok && induced.is_k_transitive(2, limits);
      if (i == 1) orders = "|X_1^Q| = " + to_string(induced.order());
    }
    record(report, v.instance->name, ok, orders);
  }
}

void entry_two_transitive(ReplayReport& report, const Limits& limits) {
  const auto corpus = transitive_corpus();
  report.scope = "corpus members with level >= 2, |C| > 1, trivial kernel, delta >= 5";
  for (const auto& v : verified_corpus(corpus, 2, limits)) {
    if (v.instance->code.size() < 2 || v.delta < 5 || !kernel_on_entries_trivial(v.instance->group, limits)) continue;
    const auto& mu = v.instance->group.mu_image();
    record(report, v.instance->name, mu.is_k_transitive(2, limits), "|mu(X)| = " + to_string(mu.order()));
  }
}

void orbit_counting_bound(ReplayReport& report, const Limits& limits) {
  const auto corpus = transitive_corpus();
  report.scope = "completely transitive corpus members";
  for (const auto& v : verified_corpus(corpus, 0, limits)) {
    if (!v.verdict.completely_transitive) continue;
    const auto bound = counting_bound(v.instance->code, v.instance->group, limits);
    const bool ok = bound.holds && (!bound.refinement_applies || bound.refinement_holds);
    record(report, v.instance->name, ok,
           "q^m/(m+1) = " + to_string(bound.lower) + ", |X| = " + to_string(bound.order) +
               (bound.refinement_applies ? ", q <= m-2 " + std::string(bound.refinement_holds ? "holds" : "fails")
                                         : ""));
  }
}

void fisher_size_bound(ReplayReport& report, const Limits& limits) {
  report.scope = "binary completely regular corpus codes with |C| >= 2 and 5 <= delta < m";
  std::vector<std::pair<std::string, Code>> codes;
  for (const auto& inst : transitive_corpus()) codes.emplace_back(inst.name, inst.code);
  codes.emplace_back("punctured-hadamard-11", punctured_hadamard11());
  for (const auto& [name, code] : codes) {
    if (code.alphabet_size() != 2 || code.size() < 2) continue;
    const int delta = min_distance(code);
    if (delta < 5 || delta >= code.length() || !is_completely_regular(code, limits)) continue;
    const auto m = static_cast<std::size_t>(code.length());
    record(report, name, code.size() >= m + 1,
           "|C| = " + std::to_string(code.size()) + ", m+1 = " + std::to_string(m + 1) + ", delta " +
               std::to_string(delta));
  }
  if (report.instances.empty()) report.facts.emplace_back("vacuous", "no qualifying corpus code");
}

void binary_nonexistence(ReplayReport& report, const Limits& limits) {
  report.scope = "(m,delta) in {(13,5),(13,6),(16,5),(16,7),(16,8)}";
  for (const auto& [m, delta] : std::vector<std::pair<int, int>>{{13, 5}, {13, 6}, {16, 5}, {16, 7}, {16, 8}}) {
    const auto r = nonexistence_check(m, delta, limits);
    std::string detail = "overall " + to_string(r.overall);
    for (const auto& b : r.branches) detail += ", " + b.id + " " + to_string(b.verdict);
    if (!r.open_branch.empty()) detail += ", open " + r.open_branch;
    record(report, "m=" + std::to_string(m) + " delta=" + std::to_string(delta), r.overall == Verdict::Infeasible,
           detail);
    if (m == 16 && delta == 5)
      for (const auto& key : {"lambda-admissible", "a5", "intersection-numbers"})
        if (auto f = r.fact(key)) report.facts.emplace_back(std::string("m16-d5-") + key, *f);
  }
}

void twisted_pgl_m6(ReplayReport& report, const Limits& limits) {
  report.scope = "Rep(6,2) with the twisted PGL(2,5) group";
  const Code code = rep_code(6, 2);
  const AutSubgroup group = twisted_pgl_group();
  const auto verdict = transitivity(code, group, limits);
  const auto order = group.order(limits);
  report.facts.emplace_back("order", to_string(order));
  report.facts.emplace_back("kernel-trivial", kernel_on_entries_trivial(group, limits) ? "yes" : "no");
  report.facts.emplace_back("level", std::to_string(verdict.level));
  for (const auto& p : verdict.parts)
    report.facts.emplace_back("part-" + std::to_string(p.part), std::to_string(p.part_size) + " orbits " +
                                                                    join(p.orbit_sizes));
  record(report, "order", order == 120, to_string(order));
  record(report, "level", verdict.level == 2, std::to_string(verdict.level));
  const bool split = verdict.parts.size() == 4 && verdict.parts[3].orbit_sizes == std::vector<std::size_t>{10, 10};
  std::string witness;
  if (verdict.parts.size() == 4 && verdict.parts[3].split_witness)
    witness = ", witness " + to_string(verdict.parts[3].split_witness->first) + " " +
              to_string(verdict.parts[3].split_witness->second);
  record(report, "C_3 splits 10+10", split, (verdict.parts.size() == 4 ? join(verdict.parts[3].orbit_sizes) : "") + witness);
}

void psl25_triples(ReplayReport& report, const Limits& limits) {
  report.scope = "PSL(2,5) on the projective line over F_5";
  const PermGroup psl = psl25_on_6();
  const auto orbits = psl.orbits_on_ksubsets(3, limits);
  std::vector<std::size_t> sizes;
  for (const auto& o : orbits) sizes.push_back(o.size());
  report.facts.emplace_back("order", to_string(psl.order()));
  report.facts.emplace_back("triple-orbits", join(sizes));
  record(report, "two orbits of 10", sizes == std::vector<std::size_t>{10, 10}, join(sizes));
  if (orbits.size() != 2) return;
  for (std::size_t i = 0; i < 2; ++i) {
    const Design d(6, 3, orbits[i]);
    const auto lambda = is_t_design(d, 2, limits);
    record(report, "orbit " + std::to_string(i + 1) + " is a 2-(6,3,2) design", lambda && *lambda == 2,
           lambda ? "lambda " + std::to_string(*lambda) : "not a 2-design");
  }
  const bool complementary = complement_design(Design(6, 3, orbits[0])) == Design(6, 3, orbits[1]);
  record(report, "orbits are complements", complementary, join_sets({orbits[0].front()}) + " first block");
}

void pgl27_m8(ReplayReport& report, const Limits& limits) {
  report.scope = "Rep(8,2) with <flip> x coordinate PGL(2,7)";
  const PermGroup pgl = pgl27_on_8();
  const auto order = pgl.order();
  report.facts.emplace_back("pgl-order", to_string(order));
  record(report, "5 does not divide |PGL(2,7)|", order == 336 && order % 5 != 0, to_string(order));
  const Code code = rep_code(8, 2);
  const AutSubgroup group = merged(coordinate_group(pgl, 2), AutSubgroup(8, 2, {diagonal_flip(8)}));
  const auto verdict = transitivity(code, group, limits);
  const auto& c4 = verdict.parts.at(4);
  report.facts.emplace_back("group-order", to_string(group.order(limits)));
  report.facts.emplace_back("c4-size", std::to_string(c4.part_size));
  report.facts.emplace_back("c4-orbits", join(c4.orbit_sizes));
  report.facts.emplace_back("level", std::to_string(verdict.level));
  record(report, "|C_4| = 70", c4.part_size == 70, std::to_string(c4.part_size));
  record(report, "C_4 is not an orbit", !c4.single_orbit, join(c4.orbit_sizes));
}

void faithful_forward(ReplayReport& report, const ReplayOptions& options, const Limits& limits) {
  int lo = 5, hi = 8;
  if (options.m) {
    if (*options.m < 5 || *options.m > 8) throw DomainError("faithful-forward covers m = 5..8");
    lo = hi = *options.m;
  }
  report.scope = "Rep(m,2) with the example group, m = " + std::to_string(lo) + ".." + std::to_string(hi);
  for (int m = lo; m <= hi; ++m) {
    const Code code = rep_code(m, 2);
    const AutSubgroup group = example_group(m);
    const auto verdict = transitivity(code, group, limits);
    const int delta = min_distance(code);
    const bool kernel = kernel_on_entries_trivial(group, limits);
    const bool hypotheses = code.size() >= 2 && delta >= 5 && kernel && verdict.completely_transitive;
    const auto norm = normalize_code(code, code.words()[0], code.words()[1], 0);
    const auto order = group.order(limits);
    const auto stab = vertex_stabilizer(group, Vertex::zero(m), limits).order(limits);
    const bool conclusions = code.alphabet_size() == 2 && norm.image == rep_code(m, 2) &&
                             order == factorial(static_cast<std::uint64_t>(m)) && stab * 2 == order;
    record(report, "m=" + std::to_string(m), hypotheses && conclusions,
           "delta " + std::to_string(delta) + ", kernel " + (kernel ? "trivial" : "nontrivial") +
               ", completely transitive " + (verdict.completely_transitive ? "yes" : "no") + ", |X| " +
               to_string(order) + ", |X_0| " + to_string(stab) + ", normal form " +
               (norm.image == rep_code(m, 2) ? "Rep(m,2)" : "other"));
  }
}

void affine_bound_table(ReplayReport& report) {
  report.scope = "r in {2,3,5,7}, 1 <= n <= 6, q in {2,3}";
  std::vector<std::string> found;
  for (int r : {2, 3, 5, 7})
    for (int n = 1; n <= 6; ++n)
      for (int q : {2, 3})
        if (affine_bound_feasible(r, n, q))
          found.push_back("(" + std::to_string(r) + "," + std::to_string(n) + "," + std::to_string(q) + ")");
  const std::vector<std::string> expected{"(2,3,3)", "(2,4,2)", "(2,5,2)"};
  std::string text;
  for (const auto& f : found) text += (text.empty() ? "" : " ") + f;
  report.facts.emplace_back("admissible", text);
  record(report, "admissible set", found == expected, text);
}

void psl_bound_table(ReplayReport& report) {
  report.scope = "2 <= n <= 5, prime powers r <= 32";
  std::vector<std::pair<int, int>> found;
  for (int n = 2; n <= 5; ++n)
    for (int r = 2; r <= 32; ++r)
      if (prime_power_decomposition(static_cast<std::uint64_t>(r)).first != 0 && psl_bound_feasible(n, r))
        found.emplace_back(n, r);
  std::sort(found.begin(), found.end(), [](auto a, auto b) { return a.first != b.first ? a.first > b.first : a.second < b.second; });
  const std::vector<std::pair<int, int>> expected{{4, 2}, {3, 3}, {3, 4}, {2, 9}, {2, 11}, {2, 13}, {2, 16}};
  std::string text;
  for (auto [n, r] : found) text += (text.empty() ? "(" : " (") + std::to_string(n) + "," + std::to_string(r) + ")";
  report.facts.emplace_back("admissible", text);
  record(report, "admissible set", found == expected, text);
  // With n = 2, |C| divides |PGammaL(2,r) : PSL(2,r)| yet must reach r+2.
  for (int r : {9, 11, 13, 16}) {
    const auto f = prime_power_decomposition(static_cast<std::uint64_t>(r)).second;
    const int index = std::gcd(2, r - 1) * static_cast<int>(f);
    record(report, "index r=" + std::to_string(r), index < r + 2,
           "|PGammaL:PSL| = " + std::to_string(index) + " < m+1 = " + std::to_string(r + 2));
  }
  // n = 3, r = 4: X_alpha contains PSL(3,4), so |C| <= 6 < 22.
  record(report, "index n=3 r=4", std::gcd(3, 3) * 2 < 22, "|PGammaL:PSL| = 6 < m+1 = 22");
}

void almost_simple_counting(ReplayReport& report) {
  report.scope = "named almost simple groups, the symplectic family for 3 <= l <= 12, unitary and Ree degrees up to 27";
  auto fails = [](int m, int q, const BigInt& order) { return !counting_bound_holds(m, q, order); };
  const std::vector<std::tuple<std::string, int, int, BigInt>> named{
      {"PGammaL(2,8) m=28", 28, 2, pgammal_order(2, 8)},
      {"HS m=176", 176, 2, BigInt(44352000)},
      {"Co3 m=276", 276, 2, BigInt("495766656000")},
      {"PGammaL(2,16) m=17 q=3", 17, 3, pgammal_order(2, 16)},
      {"PGammaL(3,3) m=13 q=3", 13, 3, pgammal_order(3, 3)},
      {"PGammaL(3,4) m=21 q=3", 21, 3, pgammal_order(3, 4)},
  };
  for (const auto& [name, m, q, order] : named)
    record(report, name, fails(m, q, order), "|X| = " + to_string(order));
  for (int l = 3; l <= 12; ++l) {
    const std::int64_t big = std::int64_t{1} << (2 * l - 1), small = std::int64_t{1} << (l - 1);
    const BigInt cap = power(BigInt(2), static_cast<std::uint64_t>((l * l + l) / 2));
    bool ok = true;
    for (std::int64_t m : {big - small, big + small}) {
      ok = ok && m + 1 < (std::int64_t{1} << (2 * l));
      ok = ok && m - 2 * l >= (std::int64_t{1} << (2 * l - 2)) && (std::int64_t{1} << (2 * l - 2)) >= (l * l + l) / 2;
    }
    // The bound itself: 2^m/(m+1) > 2^((l^2+l)/2) for the smaller degree.
    ok = ok && fails(static_cast<int>(big - small), 2, cap);
    record(report, "symplectic l=" + std::to_string(l), ok, "m = " + std::to_string(big - small) + ", " +
                                                                std::to_string(big + small));
  }
  for (int r = 3; r <= 27; ++r) {
    const auto pp = prime_power_decomposition(static_cast<std::uint64_t>(r));
    if (pp.first == 0) continue;
    const BigInt r3 = power(BigInt(r), 3);
    const BigInt bound = (r3 + 1) * r3 * (BigInt(r) * r - 1) * BigInt(pp.second);
    const bool chain = bound * (r3 + 2) <= 2 * power(BigInt(r), 12) && power(BigInt(2), static_cast<std::uint64_t>(r) * r * r) > power(BigInt(r), 12);
    record(report, "unitary/Ree r=" + std::to_string(r), chain, "m = " + to_string(BigInt(r3 + 1)));
  }
}

}  // namespace

ReplayReport replay(const std::string& id, const ReplayOptions& options, const Limits& limits) {
  const auto& registry = replay_registry();
  const auto it = std::find_if(registry.begin(), registry.end(), [&](const auto& e) { return e.id == id; });
  if (it == registry.end()) throw DomainError("unknown replay id '" + id + "'");
  if (options.m && id != "faithful-forward") throw DomainError("replay '" + id + "' takes no length option");
  ReplayReport report;
  report.id = it->id;
  report.kind = it->kind;
  report.seed = it->seed;
  report.claim = it->claim;
  if (id == "two-word-codes") two_word_codes(report, limits);
  else if (id == "full-distance-normal-form") full_distance_normal_form(report, limits);
  else if (id == "size-two-iff-full-distance") size_two_iff_full_distance(report, limits);
  else if (id == "stabilizer-homogeneity") stabilizer_homogeneity(report, limits);
  else if (id == "entry-set-stabilizer-transitive") entry_set_stabilizer_transitive(report, limits);
  else if (id == "alphabet-two-transitive") alphabet_two_transitive(report, limits);
  else if (id == "entry-two-transitive") entry_two_transitive(report, limits);
  else if (id == "orbit-counting-bound") orbit_counting_bound(report, limits);
  else if (id == "fisher-size-bound") fisher_size_bound(report, limits);
  else if (id == "binary-nonexistence") binary_nonexistence(report, limits);
  else if (id == "twisted-pgl-m6") twisted_pgl_m6(report, limits);
  else if (id == "psl25-triples") psl25_triples(report, limits);
  else if (id == "pgl27-m8") pgl27_m8(report, limits);
  else if (id == "faithful-forward") faithful_forward(report, options, limits);
  else if (id == "affine-bound-table") affine_bound_table(report);
  else if (id == "psl-bound-table") psl_bound_table(report);
  else if (id == "almost-simple-counting") almost_simple_counting(report);
  return report;
}

void write_replay_report(std::ostream& out, const ReplayReport& report) {
  out << "format-version: 1\n";
  out << "id: " << report.id << '\n';
  out << "kind: " << to_string(report.kind) << '\n';
  out << "seed: " << report.seed << '\n';
  out << "claim: " << report.claim << '\n';
  out << "scope: " << report.scope << '\n';
  for (const auto& [k, v] : report.facts) out << "fact: " << k << " = " << v << '\n';
  for (const auto& i : report.instances)
    out << "instance: " << i.name << " | " << (i.passed ? "pass" : "fail") << " | " << i.detail << '\n';
  out << "checked: " << report.checked << '\n';
  out << "counterexamples: " << report.counterexamples << '\n';
  out << "verdict: " << (report.passed() ? "pass" : "fail") << '\n';
}

std::vector<ReplayReport> replay_all(const std::filesystem::path& dir, const Limits& limits) {
  std::filesystem::create_directories(dir);
  std::vector<ReplayReport> reports;
  for (const auto& e : replay_registry()) {
    reports.push_back(replay(e.id, {}, limits));
    std::ofstream out(dir / (e.id + ".txt"));
    if (!out) throw Error("cannot write " + (dir / (e.id + ".txt")).string());
    write_replay_report(out, reports.back());
  }
  return reports;
}

std::vector<CorpusInstance> transitive_corpus() {
  std::vector<CorpusInstance> corpus;
  for (int m = 3; m <= 8; ++m)
    corpus.push_back({"rep-" + std::to_string(m) + "-2-example", rep_code(m, 2), example_group(m)});
  corpus.push_back({"rep-6-2-twisted-pgl", rep_code(6, 2), twisted_pgl_group()});
  for (int m = 3; m <= 4; ++m) {
    const AutSubgroup diagonal(m, 3, {WreathElement::diagonal(Permutation::transposition(3, 0, 1), m),
                                      WreathElement::diagonal(Permutation::from_images({1, 2, 0}), m)});
    corpus.push_back({"rep-" + std::to_string(m) + "-3-symmetric", rep_code(m, 3),
                      merged(diagonal, coordinate_symmetric(m, 3))});
  }
  corpus.push_back({"hamming-7", hamming7_code(), hamming7_group()});
  corpus.push_back({"reed-muller-8", reed_muller8_code(), reed_muller8_group()});
  return corpus;
}

}  // namespace ctc
