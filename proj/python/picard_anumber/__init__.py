"""Hasse-Witt matrices, a-numbers and p-ranks of Picard curves y^3 = f(x)."""

import json

from . import _core
from ._core import (
    BASIS,
    DEFAULT_ORACLE_BOUND,
    DegenerateCurve,
    DivisionByZero,
    GenerationFailed,
    InvalidField,
    OracleBoundExceeded,
    PicardError,
    SingularCurve,
    UsageError,
    a_number,
    cartier_matrix,
    cartier_monomial_rule,
    hasse_witt_matrix,
    hasse_witt_oracle,
    p_rank,
    rank,
)

__all__ = [
    "BASIS",
    "DEFAULT_ORACLE_BOUND",
    "DegenerateCurve",
    "DivisionByZero",
    "GenerationFailed",
    "InvalidField",
    "OracleBoundExceeded",
    "PicardError",
    "SingularCurve",
    "UsageError",
    "a_number",
    "cartier_matrix",
    "cartier_monomial_rule",
    "hasse_witt_matrix",
    "hasse_witt_oracle",
    "oracle_check",
    "p_rank",
    "rank",
    "result_document",
    "sweep",
]


def result_document(p, f, command="matrix", convention="hasse-witt"):
    """The CLI's JSON result document, parsed into a dict."""
    return json.loads(_core._result_document(p, list(f), command, convention))


def _inject(inject):
    return [(int(p), [int(c) for c in f]) for p, f in (inject or [])]


def sweep(primes=None, min_p=5, max_p=50, residue=None, trials=100, seed=1,
          require_nonzero_constant=False, oracle_check=False,
          oracle_bound=DEFAULT_ORACLE_BOUND, inject=None, threads=1):
    """Run a seeded sweep and return the JSON report as a dict."""
    text = _core._sweep(primes, min_p, max_p, residue, trials, seed,
                        require_nonzero_constant, oracle_check, oracle_bound,
                        _inject(inject), threads)
    return json.loads(text)


def oracle_check(primes=None, min_p=5, max_p=31, residue=None, trials=50, seed=1,
                 oracle_bound=DEFAULT_ORACLE_BOUND, inject=None, threads=1):
    """Compare the fast path with the bivariate oracle; returns the report dict."""
    text = _core._oracle_check(primes, min_p, max_p, residue, trials, seed,
                               oracle_bound, _inject(inject), threads)
    return json.loads(text)

