#include "picard/survey.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdint>
#include <exception>
#include <string>
#include <thread>
#include <tuple>

#include "picard/errors.hpp"

namespace picard {

namespace {

constexpr u64 kGolden = 0x9e3779b97f4a7c15ULL;

u64 mix64(u64 z) noexcept {
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

// Runs task(i) for i in [0, n) on up to `threads` workers. If any task
// throws, the exception of the smallest failing index is rethrown so the
// outcome does not depend on scheduling.
template <typename Task>
void parallel_for(std::size_t n, unsigned threads, Task&& task) {
  std::vector<std::exception_ptr> errors(n);
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next.fetch_add(1); i < n; i = next.fetch_add(1)) {
      try {
        task(i);
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };
  const unsigned workers = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(n)));
  if (workers <= 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    pool.reserve(workers);
    for (unsigned t = 0; t < workers; ++t) pool.emplace_back(worker);
  }
  for (const auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
}

struct Task {
  u64 p;
  Origin origin;
  u64 index;
};

std::vector<Task> plan_tasks(const SweepConfig& config, const std::vector<u64>& primes) {
  std::vector<Task> tasks;
  tasks.reserve(primes.size() * config.trials_per_prime + config.injected.size());
  for (const u64 p : primes) {
    for (u64 t = 0; t < config.trials_per_prime; ++t) tasks.push_back({p, Origin::Random, t});
  }
  for (u64 k = 0; k < config.injected.size(); ++k) {
    tasks.push_back({static_cast<u64>(config.injected[k].p), Origin::Injected, k});
  }
  return tasks;
}

PicardCurve curve_for(const SweepConfig& config, const Task& task) {
  if (task.origin == Origin::Injected) {
    const auto& inj = config.injected[task.index];
    return validate_curve(inj.p, inj.f);
  }
  try {
    return sample_curve(config.seed, PrimeField(static_cast<i64>(task.p)), task.index,
                        config.require_nonzero_constant);
  } catch (const GenerationFailed& e) {
    throw GenerationFailed(std::string(e.what()) + " (seed=" + std::to_string(config.seed) +
                           ", p=" + std::to_string(task.p) +
                           ", trial=" + std::to_string(task.index) + ")");
  }
}

}  // namespace

std::vector<u64> PrimeSelection::resolve() const {
  std::vector<u64> out;
  if (!explicit_primes.empty()) {
    out = explicit_primes;
  } else {
    for (u64 n = std::max<u64>(min_p, 5); n <= max_p; ++n) {
      if (is_prime(n)) out.push_back(n);
    }
  }
  if (residue_mod_3) {
    std::erase_if(out, [&](u64 p) { return static_cast<int>(p % 3) != *residue_mod_3; });
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

void SweepConfig::validate() const {
  if (trials_per_prime < 1) throw UsageError("trials_per_prime must be at least 1");
  if (primes.residue_mod_3 && *primes.residue_mod_3 != 1 && *primes.residue_mod_3 != 2) {
    throw UsageError("residue filter mod 3 must be 1 or 2");
  }
  if (primes.explicit_primes.empty() && primes.min_p > primes.max_p) {
    throw UsageError("prime range is empty: min " + std::to_string(primes.min_p) + " > max " +
                     std::to_string(primes.max_p));
  }
  for (const u64 p : primes.explicit_primes) {
    if (p > static_cast<u64>(INT64_MAX)) throw InvalidField("prime out of range");
    static_cast<void>(PrimeField(static_cast<i64>(p)));
  }
  for (const auto& inj : injected) static_cast<void>(PrimeField(inj.p));
  if (primes.resolve().empty() && injected.empty()) {
    throw UsageError("sweep selects no primes");
  }
}

u64 derive_seed(u64 seed, u64 p, u64 trial) noexcept {
  u64 h = mix64(seed + kGolden);
  h = mix64(h ^ (p * kGolden));
  h = mix64(h ^ ((trial + 1) * kGolden));
  return h;
}

u64 uniform_below(std::mt19937_64& rng, u64 bound) {
  if (bound == 0) throw UsageError("uniform_below(0)");
  // Largest multiple of bound representable in 64 bits.
  const u64 limit = UINT64_MAX - (UINT64_MAX % bound + 1) % bound;
  for (;;) {
    const u64 x = rng();
    if (x <= limit) return x % bound;
  }
}

DensePoly random_squarefree_quartic(const PrimeField& field, std::mt19937_64& rng,
                                    bool require_nonzero_constant) {
  const u64 p = field.modulus();
  const u64 max_failures = 10 * p;
  for (u64 failures = 0; failures < max_failures; ++failures) {
    std::vector<u64> c(5);
    for (std::size_t i = 0; i < 4; ++i) c[i] = uniform_below(rng, p);
    c[4] = 1 + uniform_below(rng, p - 1);
    if (require_nonzero_constant && c[0] == 0) continue;
    DensePoly f = DensePoly::from_residues(field, std::move(c));
    if (is_squarefree(f)) return f;
  }
  throw GenerationFailed("no squarefree quartic over F_" + std::to_string(p) + " after " +
                         std::to_string(max_failures) + " draws");
}

PicardCurve sample_curve(u64 seed, const PrimeField& field, u64 trial,
                         bool require_nonzero_constant) {
  std::mt19937_64 rng(derive_seed(seed, field.modulus(), trial));
  return PicardCurve(field, random_squarefree_quartic(field, rng, require_nonzero_constant));
}

CurveRecord theorem_check(const PicardCurve& curve, bool require_nonzero_constant) {
  CurveRecord r;
  r.p = curve.p();
  r.f = curve.coefficients();
  r.nonzero_constant = r.f[0] != 0;
  if (require_nonzero_constant && !r.nonzero_constant) {
    throw UsageError("curve has zero constant coefficient but one was required");
  }
  const CurveInvariants inv = compute_invariants(curve);
  r.p_mod_3 = static_cast<int>(r.p % 3);
  r.rank_h = inv.rank_h;
  r.a_number = inv.a_number;
  r.p_rank = inv.p_rank;
  r.predicted_a = r.p_mod_3 == 1 ? 0 : 1;
  r.matches_theorem = r.a_number == r.predicted_a;
  return r;
}

std::vector<OracleMismatch> check_oracle(const PicardCurve& curve, u64 oracle_bound,
                                         Origin origin, u64 index) {
  std::vector<OracleMismatch> out;
  const MatrixFp fast = hasse_witt_fast(curve);
  const MatrixFp oracle = hasse_witt_oracle(curve, oracle_bound);
  if (!(fast == oracle)) {
    out.push_back({curve.p(), origin, index, curve.coefficients(), "fast_vs_oracle", oracle, fast});
  }
  const MatrixFp transposed = fast.transpose();
  const MatrixFp cartier = cartier_matrix(curve);
  if (!(cartier == transposed)) {
    out.push_back(
        {curve.p(), origin, index, curve.coefficients(), "cartier_vs_transpose", transposed, cartier});
  }
  return out;
}

SweepReport sweep(const SweepConfig& config) {
  const auto start = std::chrono::steady_clock::now();
  config.validate();
  const std::vector<u64> primes = config.primes.resolve();
  const std::vector<Task> tasks = plan_tasks(config, primes);

  std::vector<CurveRecord> results(tasks.size());
  std::vector<std::vector<OracleMismatch>> mismatches(tasks.size());
  parallel_for(tasks.size(), config.threads, [&](std::size_t i) {
    const Task& task = tasks[i];
    const PicardCurve curve = curve_for(config, task);
    const bool require = task.origin == Origin::Random && config.require_nonzero_constant;
    CurveRecord record = theorem_check(curve, require);
    record.origin = task.origin;
    record.index = task.index;
    if (config.oracle_check && task.p <= config.oracle_bound) {
      mismatches[i] = check_oracle(curve, config.oracle_bound, task.origin, task.index);
      record.oracle_checked = true;
    }
    results[i] = record;
  });

  SweepReport report;
  report.config = config;
  for (const u64 p : primes) {
    report.tallies.push_back({p, static_cast<int>(p % 3), 0, {}, 0});
  }
  for (std::size_t i = 0; i < tasks.size(); ++i) {
    CurveRecord& r = results[i];
    if (r.origin == Origin::Random) {
      auto it = std::lower_bound(report.tallies.begin(), report.tallies.end(), r.p,
                                 [](const PrimeTally& t, u64 p) { return t.p < p; });
      ++it->trials;
      ++it->a_number_counts[static_cast<std::size_t>(r.a_number)];
      if (r.matches_theorem) ++it->theorem_matches;
      report.records.push_back(r);
    } else {
      report.injected.push_back(r);
    }
    for (auto& m : mismatches[i]) report.oracle_mismatches.push_back(std::move(m));
  }
  auto by_key = [](const CurveRecord& a, const CurveRecord& b) {
    return std::tie(a.p, a.index) < std::tie(b.p, b.index);
  };
  std::sort(report.records.begin(), report.records.end(), by_key);
  for (const auto* group : {&report.records, &report.injected}) {
    for (const auto& r : *group) {
      if (!r.matches_theorem) report.counterexamples.push_back(r);
    }
  }
  report.runtime_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return report;
}

std::vector<OracleMismatch> oracle_equivalence_run(const SweepConfig& config) {
  config.validate();
  const std::vector<u64> primes = config.primes.resolve();
  for (const u64 p : primes) {
    if (p > config.oracle_bound) {
      throw OracleBoundExceeded("selected prime " + std::to_string(p) +
                                " exceeds the oracle bound " + std::to_string(config.oracle_bound));
    }
  }
  const std::vector<Task> tasks = plan_tasks(config, primes);
  std::vector<std::vector<OracleMismatch>> mismatches(tasks.size());
  parallel_for(tasks.size(), config.threads, [&](std::size_t i) {
    const PicardCurve curve = curve_for(config, tasks[i]);
    mismatches[i] = check_oracle(curve, config.oracle_bound, tasks[i].origin, tasks[i].index);
  });
  std::vector<OracleMismatch> out;
  for (auto& m : mismatches) {
    for (auto& entry : m) out.push_back(std::move(entry));
  }
  return out;
}

}  // namespace picard
