#pragma once

#include <iosfwd>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "ctcodes/exact.hpp"
#include "ctcodes/feasibility.hpp"
#include "ctcodes/limits.hpp"

namespace ctc {

struct NonexistenceAssumptions {
  bool contains_zero = true;
  /// a_i = a_{m-i}.
  bool antipodal = false;
  /// a_i = 0 above this weight; needs contains_zero.
  std::optional<int> max_weight;
  std::map<int, Rational> fixed;
  /// a_i >= value, e.g. the smallest admissible design size.
  std::map<int, Rational> lower_bounds;
  /// a_i > 0.
  std::set<int> positive;
};

/// Unknowns a0..am; rows: a0 = 1, a_i = 0 below delta, a_i >= 0, every
/// MacWilliams row, then the assumption rows. q = 2 only. DomainError on
/// inconsistent assumptions.
FeasibilitySystem build_nonexistence_system(int m, int q, int delta, const NonexistenceAssumptions& assumptions);

/// Constraint with single-unknown equalities of the system substituted.
Constraint reduced(const FeasibilitySystem& system, const Constraint& c);

/// Smallest lambda >= 1 for which every derived lambda_i of a t-(m,k,lambda)
/// design is integral; absent if none up to `limit`.
std::optional<BigInt> smallest_admissible_lambda(int m, int k, int t, const BigInt& limit);
/// Every lambda_i = lambda C(m-i,t-i)/C(k-i,t-i), i = 0..t, is integral.
bool design_lambda_admissible(int m, int k, int t, const BigInt& lambda);

struct BranchNode {
  std::string id;
  std::string step;  // design-divisibility | cardinality | system
  Verdict verdict = Verdict::Undecided;
  std::vector<std::pair<std::string, std::string>> facts;
  std::optional<FeasibilitySystem> system;
  std::optional<Certificate> certificate;
};

struct NonexistenceReport {
  int m = 0;
  int delta = 0;
  Verdict overall = Verdict::Undecided;
  std::vector<std::pair<std::string, std::string>> facts;
  std::vector<BranchNode> branches;
  std::string open_branch;

  std::optional<std::string> fact(const std::string& key) const;
  const BranchNode* branch(const std::string& id) const;
};

/// Binary completely regular codes with length m and minimum distance delta:
/// design step, intersection template, then the branch with the all-one word
/// outside C (split by covering radius) and the antipodal branch.
/// Supported pairs: (13,5), (13,6), (16,5), (16,7), (16,8); DomainError otherwise.
NonexistenceReport nonexistence_check(int m, int delta, const Limits& limits = {});

/// `format-version: 1` then key: value lines; branch certificates are summarized.
void write_report(std::ostream& out, const NonexistenceReport& report);

}  // namespace ctc
