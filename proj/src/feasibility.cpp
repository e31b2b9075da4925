#include "ctcodes/feasibility.hpp"

#include <algorithm>
#include <istream>
#include <ostream>
#include <sstream>

#include "ctcodes/errors.hpp"

namespace ctc {

FeasibilitySystem::FeasibilitySystem(std::vector<std::string> unknowns) : unknowns_(std::move(unknowns)) {
  for (std::size_t i = 0; i < unknowns_.size(); ++i) {
    if (unknowns_[i].empty() || unknowns_[i].find_first_of(" \t|") != std::string::npos)
      throw DomainError("unknown names must be non-empty without blanks or '|'");
    for (std::size_t j = 0; j < i; ++j)
      if (unknowns_[j] == unknowns_[i]) throw DomainError("duplicate unknown '" + unknowns_[i] + "'");
  }
}

std::size_t FeasibilitySystem::index_of(const std::string& name) const {
  const auto it = std::find(unknowns_.begin(), unknowns_.end(), name);
  if (it == unknowns_.end()) throw DomainError("undeclared unknown '" + name + "'");
  return static_cast<std::size_t>(it - unknowns_.begin());
}

std::size_t FeasibilitySystem::add(Constraint c) {
  if (c.coeffs.size() != unknowns_.size()) throw DomainError("constraint width differs from the unknown count");
  if (c.tag.find_first_of("|\n") != std::string::npos) throw DomainError("tags may not contain '|' or newlines");
  constraints_.push_back(std::move(c));
  return constraints_.size() - 1;
}

std::size_t FeasibilitySystem::add(const std::map<std::string, Rational>& terms, const Rational& constant,
                                   Relation relation, const std::string& tag) {
  Constraint c{std::vector<Rational>(unknowns_.size(), Rational(0)), constant, relation, tag};
  for (const auto& [name, coeff] : terms) c.coeffs[index_of(name)] += coeff;
  return add(std::move(c));
}

bool operator==(const FeasibilitySystem& a, const FeasibilitySystem& b) {
  if (a.unknowns_ != b.unknowns_ || a.constraints_.size() != b.constraints_.size()) return false;
  for (std::size_t i = 0; i < a.constraints_.size(); ++i) {
    const auto& x = a.constraints_[i];
    const auto& y = b.constraints_[i];
    if (x.coeffs != y.coeffs || x.constant != y.constant || x.relation != y.relation || x.tag != y.tag) return false;
  }
  return true;
}

namespace {

const char* relation_symbol(Relation r) {
  switch (r) {
    case Relation::GreaterEqual: return ">=";
    case Relation::Greater: return ">";
    case Relation::Equal: return "=";
  }
  return "?";
}

const char* relation_key(Relation r) {
  switch (r) {
    case Relation::GreaterEqual: return "ge";
    case Relation::Greater: return "gt";
    case Relation::Equal: return "eq";
  }
  return "?";
}

Rational abs_value(const Rational& r) { return r < 0 ? Rational(-r) : r; }

}  // namespace

std::string to_string(const Constraint& c, const std::vector<std::string>& unknowns) {
  std::string out;
  if (c.constant != 0) out = to_string(c.constant);
  for (std::size_t j = 0; j < c.coeffs.size(); ++j) {
    const auto& a = c.coeffs[j];
    if (a == 0) continue;
    const Rational mag = abs_value(a);
    const std::string term = (mag == 1 ? "" : to_string(mag) + "*") + unknowns[j];
    if (out.empty())
      out = (a < 0 ? "-" : "") + term;
    else
      out += (a < 0 ? " - " : " + ") + term;
  }
  if (out.empty()) out = "0";
  return out + " " + relation_symbol(c.relation) + " 0";
}

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::Infeasible: return "infeasible";
    case Verdict::Feasible: return "feasible";
    case Verdict::Undecided: return "undecided";
  }
  return "?";
}

Constraint combine(const FeasibilitySystem& system, const std::vector<Rational>& multipliers) {
  const auto& cs = system.constraints();
  if (multipliers.size() != cs.size()) throw DomainError("one multiplier per constraint expected");
  Constraint out{std::vector<Rational>(system.unknowns().size(), Rational(0)), Rational(0), Relation::Equal,
                 "combination"};
  for (std::size_t i = 0; i < cs.size(); ++i) {
    const auto& l = multipliers[i];
    if (l == 0) continue;
    for (std::size_t j = 0; j < out.coeffs.size(); ++j) out.coeffs[j] += l * cs[i].coeffs[j];
    out.constant += l * cs[i].constant;
    if (cs[i].relation == Relation::Greater)
      out.relation = Relation::Greater;
    else if (cs[i].relation == Relation::GreaterEqual && out.relation == Relation::Equal)
      out.relation = Relation::GreaterEqual;
  }
  return out;
}

namespace {

bool contradictory(const Rational& constant, Relation relation) {
  switch (relation) {
    case Relation::Equal: return constant != 0;
    case Relation::GreaterEqual: return constant < 0;
    case Relation::Greater: return constant <= 0;
  }
  return false;
}

bool satisfied(const Constraint& c, const std::vector<Rational>& x) {
  Rational v = c.constant;
  for (std::size_t j = 0; j < x.size(); ++j) v += c.coeffs[j] * x[j];
  switch (c.relation) {
    case Relation::Equal: return v == 0;
    case Relation::GreaterEqual: return v >= 0;
    case Relation::Greater: return v > 0;
  }
  return false;
}

}  // namespace

bool validate(const FeasibilitySystem& system, const Certificate& certificate) {
  const auto& cs = system.constraints();
  switch (certificate.verdict) {
    case Verdict::Infeasible: {
      if (certificate.multipliers.size() != cs.size()) return false;
      for (std::size_t i = 0; i < cs.size(); ++i)
        if (cs[i].relation != Relation::Equal && certificate.multipliers[i] < 0) return false;
      const auto row = combine(system, certificate.multipliers);
      if (std::any_of(row.coeffs.begin(), row.coeffs.end(), [](const Rational& a) { return a != 0; })) return false;
      return contradictory(row.constant, row.relation);
    }
    case Verdict::Feasible:
      if (certificate.witness.size() != system.unknowns().size()) return false;
      return std::all_of(cs.begin(), cs.end(), [&](const Constraint& c) { return satisfied(c, certificate.witness); });
    case Verdict::Undecided: return true;
  }
  return false;
}

namespace {

/// a.x + c >= 0 (or > 0), remembered as a combination of the input constraints.
struct Row {
  std::vector<Rational> a;
  Rational c;
  bool strict = false;
  std::vector<Rational> comb;

  bool is_zero() const {
    return std::all_of(a.begin(), a.end(), [](const Rational& v) { return v == 0; });
  }
};

void add_scaled(Row& dst, const Row& src, const Rational& f) {
  for (std::size_t j = 0; j < dst.a.size(); ++j) dst.a[j] += f * src.a[j];
  dst.c += f * src.c;
  for (std::size_t i = 0; i < dst.comb.size(); ++i) dst.comb[i] += f * src.comb[i];
}

void scale(Row& r, const Rational& f) {
  for (auto& v : r.a) v *= f;
  r.c *= f;
  for (auto& v : r.comb) v *= f;
}

/// Integral multipliers with gcd 1 (positive rescaling).
std::vector<Rational> tidy(std::vector<Rational> comb) {
  BigInt lcm = 1;
  for (const auto& v : comb)
    if (v != 0) lcm = boost::multiprecision::lcm(lcm, BigInt(boost::multiprecision::denominator(v)));
  BigInt g = 0;
  for (auto& v : comb) {
    v *= lcm;
    if (v != 0) g = boost::multiprecision::gcd(g, BigInt(boost::multiprecision::numerator(v)));
  }
  if (g < 0) g = -g;
  if (g > 1)
    for (auto& v : comb) v /= g;
  return comb;
}

enum class Outcome { Contradiction, Exhausted, RowCap };

class Eliminator {
 public:
  struct EqStep {
    std::size_t pivot;
    Row row;  // a.x + c = 0
  };
  struct ElimStep {
    std::size_t var;
    std::vector<Row> rows;
  };

  Eliminator(const FeasibilitySystem& system, const Limits& limits, std::optional<std::size_t> keep)
      : system_(system), limits_(limits), keep_(keep), n_(system.unknowns().size()) {}

  Outcome run() {
    const auto& cs = system_.constraints();
    std::vector<Row> eqs;
    for (std::size_t i = 0; i < cs.size(); ++i) {
      Row r{cs[i].coeffs, cs[i].constant, cs[i].relation == Relation::Greater,
            std::vector<Rational>(cs.size(), Rational(0))};
      r.comb[i] = 1;
      (cs[i].relation == Relation::Equal ? eqs : rows).push_back(std::move(r));
    }

    for (std::size_t e = 0; e < eqs.size(); ++e) {
      Row eq = eqs[e];
      std::optional<std::size_t> pivot;
      for (std::size_t j = 0; j < n_ && !pivot; ++j)
        if (eq.a[j] != 0 && j != keep_) pivot = j;
      if (!pivot) {
        if (eq.is_zero()) {
          if (eq.c != 0) {
            contradiction = eq.comb;
            trail.push_back("equality " + std::to_string(e + 1) + " reduces to " + to_string(eq.c) + " = 0");
            return Outcome::Contradiction;
          }
          continue;
        }
        // Only the kept unknown remains: split into two inequalities.
        Row neg = eq;
        scale(neg, Rational(-1));
        rows.push_back(eq);
        rows.push_back(std::move(neg));
        continue;
      }
      const std::size_t p = *pivot;
      for (std::size_t f = e + 1; f < eqs.size(); ++f)
        if (eqs[f].a[p] != 0) add_scaled(eqs[f], eq, -eqs[f].a[p] / eq.a[p]);
      for (auto& r : rows)
        if (r.a[p] != 0) add_scaled(r, eq, -r.a[p] / eq.a[p]);
      trail.push_back("substitute " + system_.unknowns()[p] + " from equality " + std::to_string(e + 1));
      equalities.push_back({p, std::move(eq)});
    }

    std::size_t free = 0;
    for (std::size_t j = 0; j < n_; ++j)
      if (std::any_of(rows.begin(), rows.end(), [&](const Row& r) { return r.a[j] != 0; })) ++free;
    if (free > limits_.max_free_unknowns)
      throw ResourceError(std::to_string(free) + " free unknowns after substitution exceed the budget of " +
                          std::to_string(limits_.max_free_unknowns));

    while (true) {
      if (auto bad = check_constant_rows()) return *bad;
      prune();
      std::optional<std::size_t> best;
      std::size_t best_pairs = 0;
      for (std::size_t j = 0; j < n_; ++j) {
        if (j == keep_) continue;
        std::size_t pos = 0;
        std::size_t neg = 0;
        for (const auto& r : rows) {
          if (r.a[j] > 0) ++pos;
          if (r.a[j] < 0) ++neg;
        }
        if (pos + neg == 0) continue;
        if (!best || pos * neg < best_pairs) {
          best = j;
          best_pairs = pos * neg;
        }
      }
      if (!best) return Outcome::Exhausted;
      eliminate(*best);
      if (rows.size() > limits_.max_elimination_rows) {
        trail.push_back("row budget exceeded");
        return Outcome::RowCap;
      }
    }
  }

  std::vector<Row> rows;
  std::vector<EqStep> equalities;
  std::vector<ElimStep> eliminations;
  std::vector<Rational> contradiction;
  std::vector<std::string> trail;

 private:
  std::optional<Outcome> check_constant_rows() {
    for (const auto& r : rows)
      if (r.is_zero() && (r.c < 0 || (r.c == 0 && r.strict))) {
        contradiction = r.comb;
        trail.push_back(std::string("contradiction: 0 ") + (r.strict ? ">" : ">=") + " " + to_string(Rational(-r.c)));
        return Outcome::Contradiction;
      }
    rows.erase(std::remove_if(rows.begin(), rows.end(), [](const Row& r) { return r.is_zero(); }), rows.end());
    return std::nullopt;
  }

  /// Scale each row so its first non-zero coefficient is +-1, then keep the
  /// tightest row per coefficient vector.
  void prune() {
    std::map<std::vector<Rational>, std::size_t> seen;
    std::vector<Row> kept;
    for (auto& r : rows) {
      const auto lead = std::find_if(r.a.begin(), r.a.end(), [](const Rational& v) { return v != 0; });
      scale(r, 1 / abs_value(*lead));
      auto [it, fresh] = seen.emplace(r.a, kept.size());
      if (fresh) {
        kept.push_back(std::move(r));
        continue;
      }
      Row& other = kept[it->second];
      if (r.c < other.c || (r.c == other.c && r.strict && !other.strict)) other = std::move(r);
    }
    rows = std::move(kept);
  }

  void eliminate(std::size_t j) {
    std::vector<Row> pos, neg, rest;
    for (auto& r : rows) (r.a[j] > 0 ? pos : r.a[j] < 0 ? neg : rest).push_back(std::move(r));
    ElimStep step{j, {}};
    for (const auto& p : pos)
      for (const auto& q : neg) {
        Row combined = p;
        scale(combined, 1 / p.a[j]);
        add_scaled(combined, q, 1 / abs_value(q.a[j]));
        combined.a[j] = 0;
        combined.strict = p.strict || q.strict;
        rest.push_back(std::move(combined));
      }
    trail.push_back("eliminate " + system_.unknowns()[j] + ": " + std::to_string(pos.size()) + " lower x " +
                    std::to_string(neg.size()) + " upper -> " + std::to_string(rest.size()) + " rows");
    step.rows.insert(step.rows.end(), std::make_move_iterator(pos.begin()), std::make_move_iterator(pos.end()));
    step.rows.insert(step.rows.end(), std::make_move_iterator(neg.begin()), std::make_move_iterator(neg.end()));
    eliminations.push_back(std::move(step));
    rows = std::move(rest);
  }

  const FeasibilitySystem& system_;
  const Limits& limits_;
  std::optional<std::size_t> keep_;
  std::size_t n_;
};

/// Back-substitution preferring lower bounds; unconstrained unknowns get 0.
std::vector<Rational> witness_from(const Eliminator& el, std::size_t n) {
  std::vector<Rational> x(n, Rational(0));
  for (auto it = el.eliminations.rbegin(); it != el.eliminations.rend(); ++it) {
    const std::size_t j = it->var;
    std::optional<Rational> lo, hi;
    bool lo_strict = false;
    bool hi_strict = false;
    for (const auto& r : it->rows) {
      Rational rest = r.c;
      for (std::size_t k = 0; k < n; ++k)
        if (k != j) rest += r.a[k] * x[k];
      const Rational bound = -rest / r.a[j];
      if (r.a[j] > 0) {
        if (!lo || bound > *lo || (bound == *lo && r.strict)) {
          lo = bound;
          lo_strict = r.strict;
        }
      } else if (!hi || bound < *hi || (bound == *hi && r.strict)) {
        hi = bound;
        hi_strict = r.strict;
      }
    }
    if (lo && !lo_strict)
      x[j] = *lo;
    else if (lo)
      x[j] = hi ? Rational((*lo + *hi) / 2) : Rational(*lo + 1);
    else if (hi)
      x[j] = hi_strict ? Rational(*hi - 1) : *hi;
  }
  for (auto it = el.equalities.rbegin(); it != el.equalities.rend(); ++it) {
    Rational rest = it->row.c;
    for (std::size_t k = 0; k < n; ++k)
      if (k != it->pivot) rest += it->row.a[k] * x[k];
    x[it->pivot] = -rest / it->row.a[it->pivot];
  }
  return x;
}

}  // namespace

Certificate decide(const FeasibilitySystem& system, const Limits& limits) {
  Eliminator el(system, limits, std::nullopt);
  const auto outcome = el.run();
  Certificate cert;
  cert.trail = el.trail;
  switch (outcome) {
    case Outcome::Contradiction:
      cert.verdict = Verdict::Infeasible;
      cert.multipliers = tidy(el.contradiction);
      break;
    case Outcome::Exhausted:
      cert.verdict = Verdict::Feasible;
      cert.witness = witness_from(el, system.unknowns().size());
      break;
    case Outcome::RowCap:
      cert.verdict = Verdict::Undecided;
      cert.note = "elimination row budget of " + std::to_string(limits.max_elimination_rows) + " exceeded";
      return cert;
  }
  if (!validate(system, cert)) throw Error("internal: elimination produced a certificate that does not validate");
  return cert;
}

ProjectedBounds project_bounds(const FeasibilitySystem& system, const std::string& unknown, const Limits& limits) {
  const std::size_t t = system.index_of(unknown);
  Eliminator el(system, limits, t);
  const auto outcome = el.run();
  ProjectedBounds out;
  if (outcome == Outcome::Contradiction) {
    out.infeasible = true;
    return out;
  }
  if (outcome == Outcome::RowCap) throw ResourceError("elimination row budget exceeded while projecting");
  for (const auto& r : el.rows) {
    const Rational value = -r.c / r.a[t];
    auto comb = r.comb;
    for (auto& v : comb) v /= abs_value(r.a[t]);
    if (r.a[t] > 0) {
      if (!out.lower || value > out.lower->value || (value == out.lower->value && r.strict))
        out.lower = Bound{value, r.strict, std::move(comb)};
    } else if (!out.upper || value < out.upper->value || (value == out.upper->value && r.strict)) {
      out.upper = Bound{value, r.strict, std::move(comb)};
    }
  }
  if (out.lower && out.upper &&
      (out.lower->value > out.upper->value ||
       (out.lower->value == out.upper->value && (out.lower->strict || out.upper->strict))))
    out.infeasible = true;
  return out;
}

namespace {

std::string join(const std::vector<Rational>& v) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) out += (i ? " " : "") + to_string(v[i]);
  return out;
}

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return {};
  return s.substr(b, s.find_last_not_of(" \t\r") - b + 1);
}

std::vector<Rational> parse_list(const std::string& text, std::size_t lineno) {
  std::istringstream in(text);
  std::vector<Rational> out;
  std::string tok;
  while (in >> tok) {
    try {
      out.push_back(parse_rational(tok));
    } catch (const std::exception&) {
      throw ParseError(lineno, "bad rational '" + tok + "'");
    }
  }
  return out;
}

}  // namespace

void write_system(std::ostream& out, const FeasibilitySystem& system) {
  out << "format-version: 1\n";
  out << "unknowns:";
  for (const auto& u : system.unknowns()) out << ' ' << u;
  out << '\n';
  for (const auto& c : system.constraints()) {
    out << "row: " << c.tag << " | " << relation_key(c.relation) << " | " << to_string(c.constant) << " | "
        << join(c.coeffs) << '\n';
    out << "#   " << to_string(c, system.unknowns()) << '\n';
  }
}

void write_certificate(std::ostream& out, const FeasibilitySystem& system, const Certificate& certificate) {
  write_system(out, system);
  out << "verdict: " << to_string(certificate.verdict) << '\n';
  if (certificate.verdict == Verdict::Infeasible) {
    out << "multipliers: " << join(certificate.multipliers) << '\n';
    const auto row = combine(system, certificate.multipliers);
    out << "#   combination: 0 " << relation_symbol(row.relation) << ' ' << to_string(Rational(-row.constant)) << '\n';
  }
  if (certificate.verdict == Verdict::Feasible) out << "witness: " << join(certificate.witness) << '\n';
  if (!certificate.note.empty()) out << "note: " << certificate.note << '\n';
  for (const auto& t : certificate.trail) out << "trail: " << t << '\n';
}

namespace {

struct Parsed {
  FeasibilitySystem system;
  Certificate certificate;
  bool has_verdict = false;
};

Parsed parse_file(std::istream& in) {
  Parsed p;
  std::string line;
  std::size_t lineno = 0;
  bool version = false;
  bool have_unknowns = false;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (trim(line).empty() || trim(line)[0] == '#') continue;
    const auto colon = line.find(':');
    if (colon == std::string::npos) throw ParseError(lineno, "expected 'key: value'");
    const auto key = trim(line.substr(0, colon));
    const auto value = trim(line.substr(colon + 1));
    if (!version) {
      if (key != "format-version" || value != "1") throw ParseError(lineno, "expected 'format-version: 1'");
      version = true;
    } else if (key == "unknowns") {
      std::istringstream ls(value);
      std::vector<std::string> names;
      std::string name;
      while (ls >> name) names.push_back(name);
      try {
        p.system = FeasibilitySystem(std::move(names));
      } catch (const DomainError& e) {
        throw ParseError(lineno, e.what());
      }
      have_unknowns = true;
    } else if (key == "row") {
      if (!have_unknowns) throw ParseError(lineno, "row before unknowns");
      std::vector<std::string> parts;
      std::string rest = line.substr(colon + 1);
      std::size_t start = 0;
      for (std::size_t bar; (bar = rest.find('|', start)) != std::string::npos; start = bar + 1)
        parts.push_back(trim(rest.substr(start, bar - start)));
      parts.push_back(trim(rest.substr(start)));
      if (parts.size() != 4) throw ParseError(lineno, "row needs 'tag | rel | constant | coefficients'");
      Constraint c;
      c.tag = parts[0];
      if (parts[1] == "ge") c.relation = Relation::GreaterEqual;
      else if (parts[1] == "gt") c.relation = Relation::Greater;
      else if (parts[1] == "eq") c.relation = Relation::Equal;
      else throw ParseError(lineno, "relation must be ge, gt or eq");
      const auto constant = parse_list(parts[2], lineno);
      if (constant.size() != 1) throw ParseError(lineno, "row constant must be one rational");
      c.constant = constant.front();
      c.coeffs = parse_list(parts[3], lineno);
      if (c.coeffs.size() != p.system.unknowns().size())
        throw ParseError(lineno, "row has " + std::to_string(c.coeffs.size()) + " coefficients, expected " +
                                     std::to_string(p.system.unknowns().size()));
      p.system.add(std::move(c));
    } else if (key == "verdict") {
      if (value == "infeasible") p.certificate.verdict = Verdict::Infeasible;
      else if (value == "feasible") p.certificate.verdict = Verdict::Feasible;
      else if (value == "undecided") p.certificate.verdict = Verdict::Undecided;
      else throw ParseError(lineno, "unknown verdict '" + value + "'");
      p.has_verdict = true;
    } else if (key == "multipliers") {
      p.certificate.multipliers = parse_list(value, lineno);
    } else if (key == "witness") {
      p.certificate.witness = parse_list(value, lineno);
    } else if (key == "note") {
      p.certificate.note = value;
    } else if (key == "trail") {
      p.certificate.trail.push_back(value);
    } else {
      throw ParseError(lineno, "unknown key '" + key + "'");
    }
  }
  if (!version) throw ParseError(lineno, "missing 'format-version: 1'");
  return p;
}

}  // namespace

FeasibilitySystem read_system(std::istream& in) {
  auto p = parse_file(in);
  if (p.has_verdict) throw ParseError(0, "expected a system, found a certificate");
  return std::move(p.system);
}

std::pair<FeasibilitySystem, Certificate> read_certificate(std::istream& in) {
  auto p = parse_file(in);
  if (!p.has_verdict) throw ParseError(0, "certificate has no verdict");
  return {std::move(p.system), std::move(p.certificate)};
}

}  // namespace ctc
