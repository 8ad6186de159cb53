"""Exhaustive-search ground truth for SAT, equisatisfiability, and MAX-SAT.

Everything here is deliberately brute force: no learning, no heuristics, no
propagation. :func:`brute_force_sat` walks the assignment tree in
lexicographic order (variable 1 most significant, false before true) and
only skips a subtree once some clause is already fully falsified, which
cannot change the outcome or the first witness found. That keeps tableau
encodings with a few hundred variables checkable while staying auditable.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product

from .errors import BudgetExceededError
from .formula import Assignment, CnfFormula, count_satisfied

DEFAULT_MAX_VARS = 24


@dataclass(frozen=True)
class SatResult:
    satisfiable: bool
    witness: Assignment | None

    def __post_init__(self):
        assert self.satisfiable == (self.witness is not None)


def _check_budget(f: CnfFormula, max_vars: int) -> None:
    if f.num_vars > max_vars:
        raise BudgetExceededError(
            f"{f.num_vars} variables exceed the exhaustive-search budget of {max_vars}"
        )


def brute_force_sat(f: CnfFormula, max_vars: int = DEFAULT_MAX_VARS) -> SatResult:
    """Exhaustive satisfiability check with deterministic witness.

    The witness, when present, is the lexicographically first satisfying
    total assignment (false < true, variable 1 most significant). Formulas
    larger than ``max_vars`` are refused, never truncated.
    """
    _check_budget(f, max_vars)
    n = f.num_vars
    for clause in f.clauses:
        if not clause:
            return SatResult(False, None)
    if n == 0:
        return SatResult(True, {})

    # A clause can only become falsified at the moment its highest variable
    # is assigned, and only if that variable's literal there has the losing
    # polarity. Bucket clauses accordingly so each branch looks at a clause
    # at most once; clauses containing both v and -v can never falsify.
    check_on_false: list[list] = [[] for _ in range(n + 1)]
    check_on_true: list[list] = [[] for _ in range(n + 1)]
    for clause in f.clauses:
        hi, lo = max(clause), min(clause)
        v = hi if hi > -lo else -lo
        if hi == v and lo == -v:
            continue
        (check_on_false if hi == v else check_on_true)[v].append(clause)

    value = [False] * (n + 1)
    state = [0] * (n + 2)  # 0: try false next, 1: try true next, 2: exhausted
    v = 1
    while v >= 1:
        s = state[v]
        if s == 2:
            state[v] = 0
            v -= 1
            continue
        state[v] = s + 1
        value[v] = s == 1
        bucket = check_on_true[v] if s else check_on_false[v]
        ok = True
        for clause in bucket:
            for lit in clause:
                if value[lit] if lit > 0 else not value[-lit]:
                    break
            else:
                ok = False
                break
        if not ok:
            continue
        if v == n:
            return SatResult(True, {i: value[i] for i in range(1, n + 1)})
        v += 1
    return SatResult(False, None)


def equisatisfiable(
    f1: CnfFormula, f2: CnfFormula, max_vars: int = DEFAULT_MAX_VARS
) -> bool:
    """True iff both formulas are satisfiable or both are unsatisfiable."""
    return (
        brute_force_sat(f1, max_vars).satisfiable
        == brute_force_sat(f2, max_vars).satisfiable
    )


def max_sat_optimum(
    f: CnfFormula, max_vars: int = DEFAULT_MAX_VARS
) -> tuple[int, Assignment]:
    """Maximum satisfiable clause count and its first witnessing assignment.

    Enumerates every total assignment in lexicographic order; the witness is
    the first one attaining the maximum.
    """
    _check_budget(f, max_vars)
    n = f.num_vars
    best = -1
    best_assignment: Assignment = {}
    for bits in product((False, True), repeat=n):
        a = {i + 1: bits[i] for i in range(n)}
        got = count_satisfied(f, a)
        if got > best:
            best = got
            best_assignment = a
            if best == len(f.clauses):
                break
    return best, best_assignment


def max_sat_decide(f: CnfFormula, k: int, max_vars: int = DEFAULT_MAX_VARS) -> bool:
    """True iff some total assignment satisfies at least ``k`` clauses."""
    if k < 0:
        raise ValueError("k must be non-negative")
    if k == 0:
        return True
    optimum, _ = max_sat_optimum(f, max_vars)
    return optimum >= k
