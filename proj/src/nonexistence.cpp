#include "ctcodes/nonexistence.hpp"

#include <algorithm>
#include <ostream>

#include "ctcodes/designs.hpp"
#include "ctcodes/errors.hpp"
#include "ctcodes/spectra.hpp"

namespace ctc {

namespace {

std::string a(int i) { return "a" + std::to_string(i); }

}  // namespace

FeasibilitySystem build_nonexistence_system(int m, int q, int delta, const NonexistenceAssumptions& as) {
  if (q != 2) throw DomainError("nonexistence systems are built for q = 2");
  if (m < 1 || delta < 1 || delta > m) throw DomainError("need 1 <= delta <= m");
  if (as.max_weight && !as.contains_zero) throw DomainError("a maximum weight needs the zero codeword");
  const auto um = static_cast<std::size_t>(m);

  // Values forced before any assumption of the caller; checked against `fixed`.
  std::vector<std::optional<Rational>> forced(um + 1);
  forced[0] = Rational(1);
  for (int i = 1; i < delta; ++i) forced[static_cast<std::size_t>(i)] = Rational(0);
  if (as.max_weight)
    for (int i = *as.max_weight + 1; i <= m; ++i) {
      if (i == 0) throw DomainError("maximum weight below 0");
      forced[static_cast<std::size_t>(i)] = Rational(0);
    }
  if (as.antipodal)
    for (int i = 0; i <= m; ++i) {
      const auto& x = forced[static_cast<std::size_t>(i)];
      auto& y = forced[static_cast<std::size_t>(m - i)];
      if (x && y && *x != *y)
        throw DomainError("antipodality forces " + a(i) + " = " + a(m - i) + " but they are fixed to " +
                          to_string(*x) + " and " + to_string(*y));
      if (x && !y) y = x;
    }
  for (const auto& [i, v] : as.fixed) {
    if (i < 0 || i > m) throw DomainError("fixed value for " + a(i) + " outside 0..m");
    if (v < 0) throw DomainError("fixed value for " + a(i) + " is negative");
    const auto& f = forced[static_cast<std::size_t>(i)];
    if (f && *f != v) throw DomainError(a(i) + " fixed to " + to_string(v) + " but forced to " + to_string(*f));
    if (as.antipodal) {
      const auto mirror = as.fixed.find(m - i);
      if (mirror != as.fixed.end() && mirror->second != v) throw DomainError("fixed values break antipodality");
    }
  }
  auto check_positive_allowed = [&](int i, const Rational& floor, bool strict) {
    if (i < 0 || i > m) throw DomainError("bound for " + a(i) + " outside 0..m");
    auto value = forced[static_cast<std::size_t>(i)];
    if (const auto it = as.fixed.find(i); it != as.fixed.end()) value = it->second;
    if (value && (strict ? *value <= floor : *value < floor))
      throw DomainError(a(i) + " is forced to " + to_string(*value) + ", contradicting its bound");
  };
  for (const auto& [i, v] : as.lower_bounds) check_positive_allowed(i, v, false);
  for (int i : as.positive) check_positive_allowed(i, Rational(0), true);

  std::vector<std::string> names;
  for (int i = 0; i <= m; ++i) names.push_back(a(i));
  FeasibilitySystem sys(std::move(names));
  sys.add({{a(0), Rational(1)}}, Rational(-1), Relation::Equal, "normalization");
  for (int i = 1; i < delta; ++i) sys.add({{a(i), Rational(1)}}, Rational(0), Relation::Equal, "min-distance");
  for (int i = delta; i <= m; ++i) sys.add({{a(i), Rational(1)}}, Rational(0), Relation::GreaterEqual, "nonnegative");
  for (int k = 0; k <= m; ++k) {
    Constraint c{std::vector<Rational>(um + 1, Rational(0)), Rational(0), Relation::GreaterEqual,
                 "macwilliams-" + std::to_string(k)};
    for (int i = 0; i <= m; ++i) c.coeffs[static_cast<std::size_t>(i)] = Rational(krawtchouk(m, q, k, i));
    sys.add(std::move(c));
  }
  if (as.antipodal)
    for (int i = 0; 2 * i < m; ++i)
      sys.add({{a(i), Rational(1)}, {a(m - i), Rational(-1)}}, Rational(0), Relation::Equal, "antipodal");
  if (as.max_weight)
    for (int i = *as.max_weight + 1; i <= m; ++i)
      sys.add({{a(i), Rational(1)}}, Rational(0), Relation::Equal, "weight-support");
  for (const auto& [i, v] : as.fixed) sys.add({{a(i), Rational(1)}}, Rational(-v), Relation::Equal, "fixed");
  for (const auto& [i, v] : as.lower_bounds)
    sys.add({{a(i), Rational(1)}}, Rational(-v), Relation::GreaterEqual, "design-divisibility");
  for (int i : as.positive) sys.add({{a(i), Rational(1)}}, Rational(0), Relation::Greater, "known-weight");
  return sys;
}

Constraint reduced(const FeasibilitySystem& system, const Constraint& c) {
  Constraint out = c;
  for (const auto& e : system.constraints()) {
    if (e.relation != Relation::Equal) continue;
    std::size_t nonzero = 0;
    std::size_t j = 0;
    for (std::size_t k = 0; k < e.coeffs.size(); ++k)
      if (e.coeffs[k] != 0) {
        ++nonzero;
        j = k;
      }
    if (nonzero != 1 || out.coeffs[j] == 0) continue;
    out.constant += out.coeffs[j] * Rational(-e.constant / e.coeffs[j]);
    out.coeffs[j] = 0;
  }
  return out;
}

bool design_lambda_admissible(int m, int k, int t, const BigInt& lambda) {
  for (int i = 0; i <= t; ++i) {
    const Rational li(lambda * binomial(m - i, t - i), binomial(k - i, t - i));
    if (!is_integral(li)) return false;
  }
  return true;
}

std::optional<BigInt> smallest_admissible_lambda(int m, int k, int t, const BigInt& limit) {
  for (BigInt l = 1; l <= limit; ++l)
    if (design_lambda_admissible(m, k, t, l)) return l;
  return std::nullopt;
}

std::optional<std::string> NonexistenceReport::fact(const std::string& key) const {
  for (const auto& [k, v] : facts)
    if (k == key) return v;
  return std::nullopt;
}

const BranchNode* NonexistenceReport::branch(const std::string& id) const {
  for (const auto& b : branches)
    if (b.id == id) return &b;
  return nullptr;
}

namespace {

std::string join_ints(const std::vector<int>& v) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) out += (i ? " " : "") + std::to_string(v[i]);
  return out;
}

/// Design-size floor for a known non-empty weight class.
Rational weight_class_floor(int m, int w, int t) {
  if (w >= m || w < t) return Rational(1);
  const auto l = smallest_admissible_lambda(m, w, t, binomial(w, t) * binomial(m, t));
  return Rational(*l * binomial(m, t), binomial(w, t));
}

}  // namespace

NonexistenceReport nonexistence_check(int m, int delta, const Limits& limits) {
  static const std::set<std::pair<int, int>> supported{{13, 5}, {13, 6}, {16, 5}, {16, 7}, {16, 8}};
  if (!supported.count({m, delta}))
    throw DomainError("unsupported pair (m, delta) = (" + std::to_string(m) + ", " + std::to_string(delta) +
                      "); supported: (13,5) (13,6) (16,5) (16,7) (16,8)");
  NonexistenceReport rep;
  rep.m = m;
  rep.delta = delta;
  const int t = delta / 2;
  const int e = (delta - 1) / 2;

  // Design step: C(delta) is a t-(m,delta,lambda) design, and the blocks
  // through a fixed t-set meet pairwise only in that t-set.
  BranchNode design{"design", "design-divisibility", Verdict::Undecided, {}, {}, {}};
  const Rational lambda_bound(BigInt(m - t), BigInt(delta - t));
  const BigInt lambda_max = boost::multiprecision::numerator(lambda_bound) /
                            boost::multiprecision::denominator(lambda_bound);
  std::vector<int> admissible;
  for (int l = 1; l <= lambda_max; ++l)
    if (design_lambda_admissible(m, delta, t, l)) admissible.push_back(l);
  design.facts.emplace_back("design-strength", std::to_string(t));
  design.facts.emplace_back("lambda-bound", to_string(lambda_bound));
  design.facts.emplace_back("lambda-admissible", admissible.empty() ? "none" : join_ints(admissible));
  if (t == 2) {
    const auto p = two_design_params(m, delta, 1);
    design.facts.emplace_back("replication-per-lambda", to_string(p.r));
    design.facts.emplace_back("blocks-per-lambda", to_string(p.b));
  }
  rep.facts.insert(rep.facts.end(), design.facts.begin(), design.facts.end());
  if (admissible.empty()) {
    design.verdict = Verdict::Infeasible;
    rep.branches.push_back(std::move(design));
    rep.overall = Verdict::Infeasible;
    return rep;
  }
  if (admissible.size() > 1 || t != 2) {
    design.verdict = Verdict::Undecided;
    design.facts.emplace_back("open", "the remaining steps assume a unique lambda and t = 2");
    rep.branches.push_back(std::move(design));
    rep.overall = Verdict::Undecided;
    rep.open_branch = "design";
    return rep;
  }
  const int lambda = admissible.front();
  const Rational a_delta(BigInt(lambda) * binomial(m, t), binomial(delta, t));
  rep.facts.emplace_back("lambda", std::to_string(lambda));
  rep.facts.emplace_back(a(delta), to_string(a_delta));

  // Intersection template for a fixed block.
  const auto counts = forced_intersection_counts(m, delta, lambda, t);
  std::vector<int> inter;
  std::vector<int> weights;
  std::string count_text;
  for (std::size_t l = 0; l < counts.counts.size(); ++l) {
    count_text += (l ? " " : "") + ("n" + std::to_string(l) + "=" + to_string(counts.counts[l]));
    if (counts.counts[l] > 0) {
      inter.push_back(static_cast<int>(l));
      weights.push_back(2 * delta - 2 * static_cast<int>(l));
    }
  }
  std::sort(weights.begin(), weights.end());
  rep.facts.emplace_back("intersection-counts", count_text);
  rep.facts.emplace_back("intersection-numbers", join_ints(inter));
  rep.facts.emplace_back("known-weights", join_ints(weights));
  if (!counts.admissible) {
    BranchNode node{"intersection", "design-divisibility", Verdict::Infeasible, {}, {}, {}};
    node.facts.emplace_back("intersection-counts", count_text);
    rep.branches.push_back(std::move(node));
    rep.overall = Verdict::Infeasible;
    return rep;
  }
  const int w_max = weights.back();

  // All-one word outside C: delta-1 <= rho <= m - w_max; the parts mirror
  // through the all-one word, C_{rho-i} = 1 + C_i for i <= e.
  const BigInt space = power(2, static_cast<std::uint64_t>(m));
  for (int rho = delta - 1; rho <= m - w_max; ++rho) {
    BranchNode node{"one-not-in-code/rho-" + std::to_string(rho), "", Verdict::Undecided, {}, {}, {}};
    if (rho <= 2 * e + 1) {
      node.step = "cardinality";
      BigInt per_word = 0;
      for (int i = 0; i <= e; ++i) per_word += binomial(m, i) * (2 * i == rho ? 1 : 2);
      node.facts.emplace_back("equation", "|C| * " + to_string(per_word) + " = " + to_string(space));
      node.facts.emplace_back("remainder", to_string(BigInt(space % per_word)));
      node.verdict = space % per_word == 0 ? Verdict::Undecided : Verdict::Infeasible;
    } else {
      node.step = "system";
      NonexistenceAssumptions as;
      as.max_weight = m - rho;
      as.fixed[delta] = a_delta;
      for (int w : weights) {
        as.positive.insert(w);
        const Rational floor = weight_class_floor(m, w, t);
        if (floor > 1) as.lower_bounds[w] = floor;
        node.facts.emplace_back("design-floor-" + a(w), to_string(floor));
      }
      auto sys = build_nonexistence_system(m, 2, delta, as);
      if (m % 2 == 0) {
        // The two rows k = 2 and k = m-2 alone bound the middle entry.
        FeasibilitySystem pair(sys.unknowns());
        for (const auto& c : sys.constraints())
          if (c.relation == Relation::Equal || c.tag == "macwilliams-2" ||
              c.tag == "macwilliams-" + std::to_string(m - 2)) {
            if (c.relation != Relation::Equal) node.facts.emplace_back(c.tag, to_string(reduced(sys, c), sys.unknowns()));
            pair.add(c);
          }
        const auto bounds = project_bounds(pair, a(m / 2), limits);
        if (bounds.upper)
          node.facts.emplace_back("paired-rows-bound", a(m / 2) + (bounds.upper->strict ? " < " : " <= ") +
                                                           to_string(bounds.upper->value));
        if (const auto floor = as.lower_bounds.find(m / 2); floor != as.lower_bounds.end()) {
          pair.add({{a(m / 2), Rational(1)}}, Rational(-floor->second), Relation::GreaterEqual, "design-divisibility");
          node.facts.emplace_back("paired-rows-with-floor", to_string(decide(pair, limits).verdict));
        }
      }
      node.certificate = decide(sys, limits);
      node.verdict = node.certificate->verdict == Verdict::Infeasible ? Verdict::Infeasible : Verdict::Undecided;
      node.system = std::move(sys);
    }
    rep.branches.push_back(std::move(node));
  }

  // All-one word in C: the code is antipodal.
  {
    BranchNode node{"antipodal", "system", Verdict::Undecided, {}, {}, {}};
    NonexistenceAssumptions as;
    as.antipodal = true;
    as.fixed[delta] = a_delta;
    auto sys = build_nonexistence_system(m, 2, delta, as);
    node.certificate = decide(sys, limits);
    node.verdict = node.certificate->verdict == Verdict::Infeasible ? Verdict::Infeasible : Verdict::Undecided;
    node.system = std::move(sys);
    rep.branches.push_back(std::move(node));
  }

  rep.overall = Verdict::Infeasible;
  for (const auto& b : rep.branches)
    if (b.verdict != Verdict::Infeasible) {
      rep.overall = Verdict::Undecided;
      rep.open_branch = b.id;
      break;
    }
  return rep;
}

void write_report(std::ostream& out, const NonexistenceReport& rep) {
  out << "format-version: 1\n";
  out << "m: " << rep.m << "\n";
  out << "delta: " << rep.delta << "\n";
  for (const auto& [k, v] : rep.facts) out << k << ": " << v << "\n";
  for (const auto& b : rep.branches) {
    out << "branch: " << b.id << "\n";
    out << "  step: " << b.step << "\n";
    for (const auto& [k, v] : b.facts) out << "  " << k << ": " << v << "\n";
    if (b.certificate) {
      const auto& c = *b.certificate;
      out << "  certificate: " << to_string(c.verdict) << "\n";
      if (c.verdict == Verdict::Infeasible && b.system) {
        std::size_t used = 0;
        for (const auto& l : c.multipliers) used += l != 0;
        out << "  certificate-rows: " << used << " of " << c.multipliers.size() << "\n";
        for (std::size_t i = 0; i < c.multipliers.size(); ++i)
          if (c.multipliers[i] != 0) {
            const auto& row = b.system->constraints()[i];
            out << "    " << to_string(c.multipliers[i]) << " x [" << row.tag << "] "
                << to_string(row.relation == Relation::Equal ? row : reduced(*b.system, row), b.system->unknowns())
                << "\n";
          }
      }
      if (c.verdict == Verdict::Feasible && b.system) {
        out << "  witness:";
        for (const auto& w : c.witness) out << ' ' << to_string(w);
        out << "\n";
      }
      if (!c.note.empty()) out << "  note: " << c.note << "\n";
    }
    out << "  verdict: " << to_string(b.verdict) << "\n";
  }
  out << "overall: " << to_string(rep.overall) << "\n";
  if (!rep.open_branch.empty()) out << "open-branch: " << rep.open_branch << "\n";
}

}  // namespace ctc
