#include <sstream>

#include "doctest.h"

#include "ctcodes/errors.hpp"
#include "ctcodes/feasibility.hpp"

using namespace ctc;

namespace {
FeasibilitySystem box(Rational lo, Rational hi) {
  FeasibilitySystem s({"x"});
  s.add({{"x", 1}}, -lo, Relation::GreaterEqual, "lower");
  s.add({{"x", -1}}, hi, Relation::GreaterEqual, "upper");
  return s;
}
}  // namespace

TEST_SUITE("feasibility") {
  TEST_CASE("rendering") {
    FeasibilitySystem s({"a7", "a8", "a9"});
    s.add({{"a7", -6}, {"a8", -8}, {"a9", -6}}, 600, Relation::GreaterEqual, "row");
    CHECK(to_string(s.constraints()[0], s.unknowns()) == "600 - 6*a7 - 8*a8 - 6*a9 >= 0");
    s.add({{"a8", 1}}, 0, Relation::Equal, "eq");
    CHECK(to_string(s.constraints()[1], s.unknowns()) == "a8 = 0");
    CHECK_THROWS_AS(s.add({{"zz", 1}}, 0, Relation::Equal, "bad"), DomainError);
    CHECK_THROWS_AS(s.add(Constraint{{1}, 0, Relation::Equal, "short"}), DomainError);
  }

  TEST_CASE("a direct contradiction") {
    const auto s = box(1, 0);
    const auto c = decide(s);
    REQUIRE(c.verdict == Verdict::Infeasible);
    CHECK(validate(s, c));
    const auto combined = combine(s, c.multipliers);
    CHECK(combined.coeffs == std::vector<Rational>{0});
    CHECK(combined.constant < 0);
  }

  TEST_CASE("a feasible system has a checked witness") {
    FeasibilitySystem s({"a6"});
    s.add({{"a6", 1}}, 0, Relation::GreaterEqual, "nonnegative");
    const auto c = decide(s);
    REQUIRE(c.verdict == Verdict::Feasible);
    CHECK(c.witness == std::vector<Rational>{0});
    CHECK(validate(s, c));
  }

  TEST_CASE("strict inequalities") {
    FeasibilitySystem s({"x"});
    s.add({{"x", 1}}, 0, Relation::Greater, "positive");
    s.add({{"x", -1}}, 0, Relation::GreaterEqual, "nonpositive");
    CHECK(decide(s).verdict == Verdict::Infeasible);
    FeasibilitySystem t({"x"});
    t.add({{"x", 1}}, 0, Relation::Greater, "positive");
    t.add({{"x", -1}}, 1, Relation::GreaterEqual, "at most one");
    const auto c = decide(t);
    REQUIRE(c.verdict == Verdict::Feasible);
    CHECK(c.witness[0] > 0);
    CHECK(c.witness[0] <= 1);
  }

  TEST_CASE("equalities and several unknowns") {
    FeasibilitySystem s({"x", "y", "z"});
    s.add({{"x", 1}, {"y", 1}, {"z", 1}}, -10, Relation::Equal, "sum");
    s.add({{"x", 1}}, 0, Relation::GreaterEqual, "x");
    s.add({{"y", 1}}, 0, Relation::GreaterEqual, "y");
    s.add({{"z", 1}}, 0, Relation::GreaterEqual, "z");
    s.add({{"x", 2}, {"y", -1}}, -25, Relation::GreaterEqual, "skew");
    const auto c = decide(s);
    CHECK(c.verdict == Verdict::Infeasible);
    CHECK(validate(s, c));
    FeasibilitySystem t({"x", "y", "z"});
    t.add({{"x", 1}, {"y", 1}, {"z", 1}}, -10, Relation::Equal, "sum");
    t.add({{"x", 2}, {"y", -1}}, -5, Relation::GreaterEqual, "skew");
    const auto f = decide(t);
    REQUIRE(f.verdict == Verdict::Feasible);
    CHECK(validate(t, f));
  }

  TEST_CASE("validation rejects tampered certificates") {
    const auto s = box(1, 0);
    auto c = decide(s);
    c.multipliers[0] = -1;
    CHECK_FALSE(validate(s, c));
    Certificate fake;
    fake.verdict = Verdict::Feasible;
    fake.witness = {Rational(1, 2)};
    CHECK_FALSE(validate(s, fake));
  }

  TEST_CASE("projected bounds") {
    FeasibilitySystem s({"x", "y"});
    s.add({{"x", 1}, {"y", 1}}, -4, Relation::GreaterEqual, "sum");
    s.add({{"y", -1}}, 1, Relation::GreaterEqual, "y small");
    s.add({{"x", -1}}, 9, Relation::GreaterEqual, "x small");
    const auto b = project_bounds(s, "x");
    REQUIRE(b.lower.has_value());
    REQUIRE(b.upper.has_value());
    CHECK(b.lower->value == 3);
    CHECK(b.upper->value == 9);
    CHECK_FALSE(b.infeasible);
    CHECK(project_bounds(box(1, 0), "x").infeasible);
  }

  TEST_CASE("free-unknown budget") {
    std::vector<std::string> names;
    for (int i = 0; i < 14; ++i) names.push_back("x" + std::to_string(i));
    FeasibilitySystem s(names);
    for (const auto& n : names) s.add({{n, 1}}, 0, Relation::GreaterEqual, n);
    CHECK_THROWS_AS(decide(s), ResourceError);
    Limits wide;
    wide.max_free_unknowns = 20;
    CHECK(decide(s, wide).verdict == Verdict::Feasible);
  }

  TEST_CASE("system and certificate files") {
    FeasibilitySystem s({"a", "b"});
    s.add({{"a", Rational(3, 2)}, {"b", -1}}, 7, Relation::GreaterEqual, "first row");
    s.add({{"b", 1}}, -20, Relation::Greater, "second");
    s.add({{"a", 1}}, 0, Relation::Equal, "third");
    std::stringstream out;
    write_system(out, s);
    CHECK(read_system(out) == s);
    const auto c = decide(s);
    std::stringstream cert;
    write_certificate(cert, s, c);
    const auto [s2, c2] = read_certificate(cert);
    CHECK(s2 == s);
    CHECK(c2.verdict == c.verdict);
    CHECK(c2.multipliers == c.multipliers);
    CHECK(c2.witness == c.witness);
    std::istringstream bad("format-version: 1\nunknowns: a\nrow: x | le | 0 | 1\n");
    CHECK_THROWS_AS(read_system(bad), ParseError);
  }
}
