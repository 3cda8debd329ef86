#include <doctest.h>

#include "abelian3/verify.hpp"
#include "support.hpp"

using namespace abelian3;

namespace {

// Number of ordered triples (m, n, r) with m n r <= N.
u64 triples_up_to(u64 N) {
  u64 count = 0;
  for (u64 k = 1; k <= N; ++k) {
    for (u64 m : support::naive_divisors(k)) count += support::naive_tau(k / m);
  }
  return count;
}

// X forced to 1: w then always runs over 0..B-1.
DerivedParams x_always_one(u64 a, u64 b, u64 c, const Group3& g) {
  DerivedParams d = derived_params(a, b, c, g);
  d.X = 1;
  return d;
}

// X taken with n/b in place of r/c.
DerivedParams x_wrong_quotient(u64 a, u64 b, u64 c, const Group3& g) {
  DerivedParams d = derived_params(a, b, c, g);
  const u64 abc = d.A * d.B * d.C;
  d.X = abc / std::gcd(a * (g.n / b), abc);
  return d;
}

}  // namespace

TEST_CASE("describe") {
  CHECK(describe(ElementSet{{{0, 0, 0}, {1, 1, 0}}}) == "{(0,0,0),(1,1,0)}");
  CHECK(describe(ElementSet{}) == "{}");
}

TEST_CASE("verify_group on a single group") {
  const GroupCheck check = verify_group({2, 2, 2});
  CHECK(check.passed);
  CHECK(check.formula_count == 16);
  CHECK(check.enumerated == 16);
  CHECK(check.oracle_count == 16);
  CHECK(check.formula_cyclic == 8);
  CHECK(check.oracle_cyclic == 8);
  CHECK(check.missing.empty());
  CHECK(check.unexpected.empty());
  CHECK(check.problems.empty());
}

TEST_CASE("verify_up_to passes and covers every ordered triple") {
  const VerifyReport small = verify_up_to(8);
  CHECK(small.passed());
  CHECK(small.groups_checked == triples_up_to(8));

  const VerifyReport report = verify_up_to(120);
  CHECK(report.passed());
  CHECK(report.groups_checked == triples_up_to(120));
  CHECK(report.subgroups_compared > report.groups_checked);
}

TEST_CASE("a corrupted X is caught with a named counterexample") {
  for (const ParamsFn& bad : {ParamsFn(&x_always_one), ParamsFn(&x_wrong_quotient)}) {
    const VerifyReport report = verify_up_to(64, bad);
    REQUIRE_FALSE(report.passed());
    bool saw_difference = false;
    for (const auto& f : report.failures) {
      CHECK_FALSE(f.passed);
      CHECK_FALSE(f.problems.empty());
      saw_difference = saw_difference || !f.missing.empty() || !f.unexpected.empty();
    }
    CHECK(saw_difference);
  }
  // X = 1 everywhere in (2,2,2); (4,4,4) has X = 2 at a = b = c = 2.
  CHECK(verify_group({2, 2, 2}, &x_always_one).passed);
  CHECK_FALSE(verify_group({4, 4, 4}, &x_always_one).passed);
}
