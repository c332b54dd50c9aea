#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "picard/cartier.hpp"
#include "picard/errors.hpp"
#include "picard/report.hpp"
#include "picard/survey.hpp"

namespace py = pybind11;

namespace {

using picard::i64;
using picard::u64;

using Rows = std::array<std::array<u64, 3>, 3>;

picard::PicardCurve make_curve(i64 p, const std::vector<i64>& f) {
  return picard::validate_curve(p, f);
}

picard::SweepConfig make_config(std::optional<std::vector<u64>> primes, u64 min_p, u64 max_p,
                                std::optional<int> residue, u64 trials, u64 seed,
                                bool require_nonzero_constant, bool oracle_check,
                                u64 oracle_bound,
                                const std::vector<std::pair<i64, std::vector<i64>>>& inject,
                                unsigned threads) {
  picard::SweepConfig c;
  if (primes) c.primes.explicit_primes = *primes;
  c.primes.min_p = min_p;
  c.primes.max_p = max_p;
  c.primes.residue_mod_3 = residue;
  c.trials_per_prime = trials;
  c.seed = seed;
  c.require_nonzero_constant = require_nonzero_constant;
  c.oracle_check = oracle_check;
  c.oracle_bound = oracle_bound;
  for (const auto& [p, f] : inject) {
    if (f.size() != 5) throw picard::UsageError("injected curves need 5 coefficients");
    c.injected.push_back({p, {f[0], f[1], f[2], f[3], f[4]}});
  }
  c.threads = threads;
  return c;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Hasse-Witt matrices, a-numbers and p-ranks of Picard curves y^3 = f(x)";

  auto base = py::register_exception<picard::Error>(m, "PicardError", PyExc_ValueError);
  py::register_exception<picard::UsageError>(m, "UsageError", base.ptr());
  py::register_exception<picard::DivisionByZero>(m, "DivisionByZero", base.ptr());
  py::register_exception<picard::InvalidField>(m, "InvalidField", base.ptr());
  py::register_exception<picard::DegenerateCurve>(m, "DegenerateCurve", base.ptr());
  py::register_exception<picard::SingularCurve>(m, "SingularCurve", base.ptr());
  py::register_exception<picard::OracleBoundExceeded>(m, "OracleBoundExceeded", base.ptr());
  py::register_exception<picard::GenerationFailed>(m, "GenerationFailed", base.ptr());

  m.attr("BASIS") = py::cast(std::vector<std::string>{"dx/y^2", "x dx/y^2", "dx/y"});
  m.attr("DEFAULT_ORACLE_BOUND") = picard::kDefaultOracleBound;

  m.def(
      "hasse_witt_matrix",
      [](i64 p, const std::vector<i64>& f) { return picard::hasse_witt_fast(make_curve(p, f)).rows(); },
      py::arg("p"), py::arg("f"),
      "Hasse-Witt matrix from truncated powers of f; f is [c0, c1, c2, c3, c4].");
  m.def(
      "hasse_witt_oracle",
      [](i64 p, const std::vector<i64>& f, u64 bound) {
        return picard::hasse_witt_oracle(make_curve(p, f), bound).rows();
      },
      py::arg("p"), py::arg("f"), py::arg("oracle_bound") = picard::kDefaultOracleBound,
      "Hasse-Witt matrix from the bivariate expansion of (y^3 - f)^(p-1).");
  m.def(
      "cartier_matrix",
      [](i64 p, const std::vector<i64>& f) { return picard::cartier_matrix(make_curve(p, f)).rows(); },
      py::arg("p"), py::arg("f"), "Column j holds the coordinates of C(z_j).");
  m.def(
      "a_number", [](i64 p, const std::vector<i64>& f) { return picard::a_number(make_curve(p, f)); },
      py::arg("p"), py::arg("f"));
  m.def(
      "p_rank", [](i64 p, const std::vector<i64>& f) { return picard::p_rank(make_curve(p, f)); },
      py::arg("p"), py::arg("f"));
  m.def(
      "rank",
      [](const Rows& rows, i64 p) {
        return picard::rank_fp(
            picard::MatrixFp(picard::PrimeField(p), picard::Convention::HasseWitt, rows));
      },
      py::arg("matrix"), py::arg("p"), "Rank of a 3x3 matrix of residues over F_p.");
  m.def("cartier_monomial_rule", &picard::cartier_monomial_rule, py::arg("j"), py::arg("p"),
        "s - 1 when j + 1 = p s, else None.");

  m.def(
      "_result_document",
      [](i64 p, const std::vector<i64>& f, const std::string& command,
         std::optional<std::string> convention) {
        std::optional<picard::Convention> c;
        if (convention) {
          if (*convention == "hasse-witt") c = picard::Convention::HasseWitt;
          else if (*convention == "cartier") c = picard::Convention::Cartier;
          else throw picard::UsageError("convention must be 'hasse-witt' or 'cartier'");
        }
        return picard::serialize(picard::make_result_document(make_curve(p, f), command, c),
                                 picard::Format::Json);
      },
      py::arg("p"), py::arg("f"), py::arg("command") = "matrix",
      py::arg("convention") = std::nullopt);

  m.def(
      "_sweep",
      [](std::optional<std::vector<u64>> primes, u64 min_p, u64 max_p, std::optional<int> residue,
         u64 trials, u64 seed, bool require_nonzero_constant, bool oracle_check, u64 oracle_bound,
         const std::vector<std::pair<i64, std::vector<i64>>>& inject, unsigned threads) {
        const auto config = make_config(primes, min_p, max_p, residue, trials, seed,
                                        require_nonzero_constant, oracle_check, oracle_bound,
                                        inject, threads);
        py::gil_scoped_release release;
        return picard::serialize(picard::sweep(config), picard::Format::Json);
      },
      py::arg("primes"), py::arg("min_p"), py::arg("max_p"), py::arg("residue"),
      py::arg("trials"), py::arg("seed"), py::arg("require_nonzero_constant"),
      py::arg("oracle_check"), py::arg("oracle_bound"), py::arg("inject"), py::arg("threads"));

  m.def(
      "_oracle_check",
      [](std::optional<std::vector<u64>> primes, u64 min_p, u64 max_p, std::optional<int> residue,
         u64 trials, u64 seed, u64 oracle_bound,
         const std::vector<std::pair<i64, std::vector<i64>>>& inject, unsigned threads) {
        const auto config = make_config(primes, min_p, max_p, residue, trials, seed, false, true,
                                        oracle_bound, inject, threads);
        py::gil_scoped_release release;
        const auto mismatches = picard::oracle_equivalence_run(config);
        return picard::serialize_mismatches(config, mismatches, picard::Format::Json);
      },
      py::arg("primes"), py::arg("min_p"), py::arg("max_p"), py::arg("residue"),
      py::arg("trials"), py::arg("seed"), py::arg("oracle_bound"), py::arg("inject"),
      py::arg("threads"));
}
