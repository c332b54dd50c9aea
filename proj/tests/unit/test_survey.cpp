#include <doctest.h>

#include <random>

#include "picard/errors.hpp"
#include "picard/report.hpp"
#include "picard/survey.hpp"

using namespace picard;

namespace {

SweepConfig small_config() {
  SweepConfig c;
  c.primes.min_p = 5;
  c.primes.max_p = 23;
  c.trials_per_prime = 20;
  c.seed = 1;
  return c;
}

}  // namespace

TEST_CASE("the generator sequence is the standard one") {
  std::mt19937_64 rng;
  rng.discard(9999);
  CHECK(rng() == 9981545732273789042ULL);
}

TEST_CASE("sub-seed derivation is pinned") {
  CHECK(derive_seed(1, 5, 0) == 5189619287055727872ULL);
  CHECK(derive_seed(1, 5, 0) != derive_seed(1, 5, 1));
  CHECK(derive_seed(1, 5, 0) != derive_seed(1, 7, 0));
  CHECK(derive_seed(1, 5, 0) != derive_seed(2, 5, 0));
}

TEST_CASE("first sampled quartic for seed 1, p = 5") {
  const PrimeField f5(5);
  std::mt19937_64 rng(derive_seed(1, 5, 0));
  CHECK(random_squarefree_quartic(f5, rng, false) == DensePoly(f5, {1, 0, 0, 4, 1}));
  CHECK(sample_curve(1, f5, 0, false).coefficients() == std::array<u64, 5>{1, 0, 0, 4, 1});
}

TEST_CASE("uniform_below") {
  std::mt19937_64 rng(3);
  std::array<int, 5> counts{};
  for (int i = 0; i < 5000; ++i) ++counts[uniform_below(rng, 5)];
  for (const int c : counts) CHECK(c > 850);
  CHECK_THROWS_AS(uniform_below(rng, 0), UsageError);
}

TEST_CASE("sampled quartics are valid curves") {
  std::mt19937_64 rng(11);
  for (const i64 p : {5, 7, 11, 13}) {
    const PrimeField field(p);
    for (int n = 0; n < 200; ++n) {
      const DensePoly f = random_squarefree_quartic(field, rng, false);
      REQUIRE(f.degree() == 4u);
      REQUIRE_NOTHROW(PicardCurve(field, f));
    }
  }
}

TEST_CASE("nonzero constant coefficient is enforced when requested") {
  const PrimeField f5(5);
  std::mt19937_64 rng(12);
  for (int n = 0; n < 1000; ++n) {
    const DensePoly f = random_squarefree_quartic(f5, rng, true);
    REQUIRE(f.coeff_residue(0) != 0);
    REQUIRE(is_squarefree(f));
  }
}

TEST_CASE("theorem_check") {
  const CurveRecord r5 = theorem_check(validate_curve(5, std::vector<i64>{1, 0, 0, 0, 1}), false);
  CHECK(r5.predicted_a == 1);
  CHECK(r5.a_number == 1);
  CHECK(r5.rank_h == 2);
  CHECK(r5.p_mod_3 == 2);
  CHECK(r5.matches_theorem);
  CHECK(r5.nonzero_constant);

  const CurveRecord r13 = theorem_check(validate_curve(13, std::vector<i64>{1, 0, 0, 0, 1}), true);
  CHECK(r13.predicted_a == 0);
  CHECK(r13.a_number == 0);
  CHECK(r13.p_rank == 3);
  CHECK(r13.matches_theorem);

  const CurveRecord r7 = theorem_check(validate_curve(7, std::vector<i64>{1, 0, 0, 0, 1}), false);
  CHECK(r7.predicted_a == 0);
  CHECK(r7.a_number == 2);
  CHECK_FALSE(r7.matches_theorem);

  const auto no_constant = validate_curve(7, std::vector<i64>{0, 1, 0, 0, 1});
  CHECK_THROWS_AS(theorem_check(no_constant, true), UsageError);
  CHECK_FALSE(theorem_check(no_constant, false).nonzero_constant);
}

TEST_CASE("prime selection") {
  PrimeSelection s;
  s.min_p = 2;
  s.max_p = 30;
  CHECK(s.resolve() == std::vector<u64>{5, 7, 11, 13, 17, 19, 23, 29});
  s.residue_mod_3 = 1;
  CHECK(s.resolve() == std::vector<u64>{7, 13, 19});
  s.explicit_primes = {13, 7, 7, 11};
  CHECK(s.resolve() == std::vector<u64>{7, 13});
}

TEST_CASE("config validation") {
  SweepConfig c = small_config();
  c.trials_per_prime = 0;
  CHECK_THROWS_AS(sweep(c), UsageError);
  c = small_config();
  c.primes.explicit_primes = {5, 9};
  CHECK_THROWS_AS(sweep(c), InvalidField);
  c = small_config();
  c.primes.min_p = 40;
  c.primes.max_p = 10;
  CHECK_THROWS_AS(sweep(c), UsageError);
  c = small_config();
  c.primes.residue_mod_3 = 0;
  CHECK_THROWS_AS(sweep(c), UsageError);
  c = small_config();
  c.injected.push_back({7, {0, 0, 0, 0, 1}});
  CHECK_THROWS_AS(sweep(c), SingularCurve);
}

TEST_CASE("single-record sweep") {
  SweepConfig c;
  c.primes.explicit_primes = {5};
  c.trials_per_prime = 1;
  c.seed = 1;
  const SweepReport r = sweep(c);
  REQUIRE(r.records.size() == 1);
  REQUIRE(r.tallies.size() == 1);
  const auto& t = r.tallies.front();
  CHECK(t.a_number_counts[0] + t.a_number_counts[1] + t.a_number_counts[2] + t.a_number_counts[3] == 1);
  CHECK(r.records.front().f == std::array<u64, 5>{1, 0, 0, 4, 1});
}

TEST_CASE("p = 2 mod 3 sweep always has positive a-number") {
  SweepConfig c;
  c.primes.min_p = 5;
  c.primes.max_p = 50;
  c.primes.residue_mod_3 = 2;
  c.trials_per_prime = 100;
  c.seed = 9;
  c.threads = 4;
  const SweepReport r = sweep(c);
  CHECK(r.records.size() == 7 * 100);  // 5 11 17 23 29 41 47
  for (const auto& rec : r.records) REQUIRE(rec.a_number >= 1);
}

TEST_CASE("sweep is deterministic and tallies are conserved") {
  SweepConfig c = small_config();
  c.oracle_check = true;
  c.injected.push_back({7, {1, 0, 0, 0, 1}});
  c.threads = 1;
  const SweepReport one = sweep(c);
  c.threads = 8;
  const SweepReport many = sweep(c);
  CHECK(serialize(one, Format::Json) == serialize(many, Format::Json));
  CHECK(serialize(one, Format::Csv) == serialize(many, Format::Csv));
  CHECK(serialize(sweep(c), Format::Json) == serialize(many, Format::Json));

  for (const auto& t : one.tallies) {
    u64 total = 0;
    for (const u64 n : t.a_number_counts) total += n;
    CHECK(total == c.trials_per_prime);
    CHECK(t.trials == c.trials_per_prime);
  }
  CHECK(one.oracle_mismatches.empty());
  for (std::size_t i = 1; i < one.records.size(); ++i) {
    const auto& a = one.records[i - 1];
    const auto& b = one.records[i];
    REQUIRE((a.p < b.p || (a.p == b.p && a.index < b.index)));
  }
}

TEST_CASE("injected curves are reported separately and not tallied") {
  SweepConfig c = small_config();
  c.oracle_check = true;
  c.injected.push_back({7, {1, 0, 0, 0, 1}});
  const SweepReport r = sweep(c);
  REQUIRE(r.injected.size() == 1);
  const CurveRecord& inj = r.injected.front();
  CHECK(inj.origin == Origin::Injected);
  CHECK(inj.a_number == 2);
  CHECK_FALSE(inj.matches_theorem);
  CHECK(inj.oracle_checked);
  bool listed = false;
  for (const auto& ce : r.counterexamples) listed |= ce == inj;
  CHECK(listed);
  CHECK(r.records.size() == r.tallies.size() * c.trials_per_prime);
}

TEST_CASE("counterexamples are reproducible from (seed, p, trial)") {
  const SweepReport r = sweep(small_config());
  for (const auto& ce : r.counterexamples) {
    const PicardCurve again = sample_curve(1, PrimeField(static_cast<i64>(ce.p)), ce.index, false);
    REQUIRE(again.coefficients() == ce.f);
    REQUIRE(theorem_check(again, false).a_number == ce.a_number);
  }
}

TEST_CASE("records do not depend on which other primes are swept") {
  SweepConfig alone = small_config();
  alone.primes.explicit_primes = {7};
  SweepConfig with_others = small_config();
  with_others.primes.explicit_primes = {5, 7, 11, 13};
  const SweepReport a = sweep(alone);
  const SweepReport b = sweep(with_others);
  std::vector<CurveRecord> sevens;
  for (const auto& r : b.records) {
    if (r.p == 7) sevens.push_back(r);
  }
  CHECK(sevens == a.records);
}

TEST_CASE("oracle equivalence run") {
  SweepConfig c = small_config();
  c.primes.max_p = 13;
  c.trials_per_prime = 10;
  c.injected.push_back({5, {1, 0, 0, 0, 1}});
  c.injected.push_back({13, {1, 0, 0, 0, 1}});
  CHECK(oracle_equivalence_run(c).empty());
  c.oracle_bound = 11;
  CHECK_THROWS_AS(oracle_equivalence_run(c), OracleBoundExceeded);
}

TEST_CASE("check_oracle on a known curve") {
  const auto c = validate_curve(13, std::vector<i64>{1, 0, 0, 0, 1});
  CHECK(check_oracle(c, 101).empty());
  CHECK_THROWS_AS(check_oracle(c, 7), OracleBoundExceeded);
}
