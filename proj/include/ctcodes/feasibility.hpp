#pragma once

#include <cstddef>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "ctcodes/exact.hpp"
#include "ctcodes/limits.hpp"

namespace ctc {

enum class Relation { GreaterEqual, Greater, Equal };

/// sum_j coeffs[j] x_j + constant  (>= | > | =)  0, with a provenance tag.
struct Constraint {
  std::vector<Rational> coeffs;
  Rational constant;
  Relation relation = Relation::GreaterEqual;
  std::string tag;
};

class FeasibilitySystem {
 public:
  FeasibilitySystem() = default;
  explicit FeasibilitySystem(std::vector<std::string> unknowns);

  const std::vector<std::string>& unknowns() const noexcept { return unknowns_; }
  const std::vector<Constraint>& constraints() const noexcept { return constraints_; }
  std::size_t index_of(const std::string& name) const;

  /// Returns the constraint's index. DomainError on size mismatch.
  std::size_t add(Constraint c);
  std::size_t add(const std::map<std::string, Rational>& terms, const Rational& constant, Relation relation,
                  const std::string& tag);

  friend bool operator==(const FeasibilitySystem&, const FeasibilitySystem&);

 private:
  std::vector<std::string> unknowns_;
  std::vector<Constraint> constraints_;
};

/// "600 - 6*a7 - 8*a8 - 6*a9 >= 0"; zero terms are left out.
std::string to_string(const Constraint& c, const std::vector<std::string>& unknowns);

enum class Verdict { Infeasible, Feasible, Undecided };
std::string to_string(Verdict v);

struct Certificate {
  Verdict verdict = Verdict::Undecided;
  /// Infeasible: one multiplier per constraint (non-negative on inequalities);
  /// the combination has zero coefficients and a contradictory constant.
  std::vector<Rational> multipliers;
  /// Feasible: a rational assignment satisfying every constraint.
  std::vector<Rational> witness;
  /// Elimination steps, for reading only.
  std::vector<std::string> trail;
  std::string note;
};

/// Fourier-Motzkin elimination over exact rationals. ResourceError if more
/// than max_free_unknowns remain after equality substitution; Undecided if the
/// row count passes max_elimination_rows. Every returned certificate is validated.
Certificate decide(const FeasibilitySystem& system, const Limits& limits = {});

/// Checks a certificate against a system independently of how it was found.
bool validate(const FeasibilitySystem& system, const Certificate& certificate);

/// The combined row sum_i multipliers[i] * constraint_i.
Constraint combine(const FeasibilitySystem& system, const std::vector<Rational>& multipliers);

struct Bound {
  Rational value;
  bool strict = false;
  /// Multipliers over the constraints deriving `x >= value` (or `x <= value`).
  std::vector<Rational> multipliers;
};
struct ProjectedBounds {
  std::optional<Bound> lower;
  std::optional<Bound> upper;
  /// The system turned out infeasible while projecting.
  bool infeasible = false;
};
/// Tightest bounds on one unknown implied by the system (projection by elimination).
ProjectedBounds project_bounds(const FeasibilitySystem& system, const std::string& unknown, const Limits& limits = {});

/// Stable text: `format-version: 1`, `unknowns:`, one `row:` per constraint
/// (`tag | ge|gt|eq | constant | coefficients`), then the certificate fields.
void write_system(std::ostream& out, const FeasibilitySystem& system);
FeasibilitySystem read_system(std::istream& in);
void write_certificate(std::ostream& out, const FeasibilitySystem& system, const Certificate& certificate);
/// Reads a file written by write_certificate, system included.
std::pair<FeasibilitySystem, Certificate> read_certificate(std::istream& in);

}  // namespace ctc
