#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "picard/cartier.hpp"
#include "picard/curve.hpp"
#include "picard/dense_poly.hpp"

namespace picard {

// Which primes a sweep visits: an explicit list, or every prime in
// [min_p, max_p] optionally filtered by p mod 3.
struct PrimeSelection {
  std::vector<u64> explicit_primes;
  u64 min_p = 5;
  u64 max_p = 50;
  std::optional<int> residue_mod_3;

  std::vector<u64> resolve() const;
};

struct InjectedCurve {
  i64 p;
  std::array<i64, 5> f;
};

struct SweepConfig {
  PrimeSelection primes;
  u64 trials_per_prime = 100;
  u64 seed = 0;
  bool require_nonzero_constant = false;
  bool oracle_check = false;
  u64 oracle_bound = kDefaultOracleBound;
  std::vector<InjectedCurve> injected;
  unsigned threads = 1;

  // Throws UsageError or InvalidField.
  void validate() const;
};

enum class Origin { Random, Injected };

struct CurveRecord {
  u64 p = 0;
  Origin origin = Origin::Random;
  u64 index = 0;  // trial index, or position in the injected list
  std::array<u64, 5> f{};
  int p_mod_3 = 0;
  int rank_h = 0;
  int a_number = 0;
  int p_rank = 0;
  int predicted_a = 0;
  bool matches_theorem = false;
  bool nonzero_constant = false;
  bool oracle_checked = false;

  friend bool operator==(const CurveRecord&, const CurveRecord&) = default;
};

struct PrimeTally {
  u64 p = 0;
  int p_mod_3 = 0;
  u64 trials = 0;
  std::array<u64, 4> a_number_counts{};
  u64 theorem_matches = 0;
};

struct OracleMismatch {
  u64 p;
  Origin origin;
  u64 index;
  std::array<u64, 5> f;
  std::string check;  // "fast_vs_oracle" or "cartier_vs_transpose"
  MatrixFp expected;
  MatrixFp actual;
};

struct SweepReport {
  SweepConfig config;
  std::vector<PrimeTally> tallies;
  std::vector<CurveRecord> records;  // random trials sorted by (p, trial)
  std::vector<CurveRecord> injected;
  std::vector<CurveRecord> counterexamples;
  std::vector<OracleMismatch> oracle_mismatches;
  double runtime_seconds = 0.0;
};

// SplitMix64 finalizer chain over (seed, p, trial). Sub-seeds depend only
// on their own triple, so adding or removing primes never perturbs others.
u64 derive_seed(u64 seed, u64 p, u64 trial) noexcept;

// Unbiased draw from [0, bound) by rejection on the raw 64-bit output.
u64 uniform_below(std::mt19937_64& rng, u64 bound);

// Uniform over quartics with nonzero leading coefficient, rejection-sampled
// until squarefree (and c0 != 0 when requested). Throws GenerationFailed
// after 10 p rejected draws.
DensePoly random_squarefree_quartic(const PrimeField& field, std::mt19937_64& rng,
                                    bool require_nonzero_constant);

// The curve a sweep draws for (seed, p, trial).
PicardCurve sample_curve(u64 seed, const PrimeField& field, u64 trial,
                         bool require_nonzero_constant);

// Classifies a curve against the congruence dichotomy: predicted a-number
// 0 for p = 1 (mod 3), 1 for p = 2 (mod 3). Throws UsageError when
// require_nonzero_constant is set and f(0) = 0.
CurveRecord theorem_check(const PicardCurve& curve, bool require_nonzero_constant);

// Compares hasse_witt_fast with hasse_witt_oracle and cartier_matrix with
// the transposed fast matrix. Returns the (normally empty) mismatch list.
std::vector<OracleMismatch> check_oracle(const PicardCurve& curve, u64 oracle_bound,
                                         Origin origin = Origin::Random, u64 index = 0);

SweepReport sweep(const SweepConfig& config);

// Throws OracleBoundExceeded if a selected prime exceeds the oracle bound.
std::vector<OracleMismatch> oracle_equivalence_run(const SweepConfig& config);

}  // namespace picard
