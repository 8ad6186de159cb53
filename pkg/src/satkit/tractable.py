"""Polynomial-time solvers for the tractable SAT fragments.

2-SAT goes through the implication graph: each clause (x ∨ y) contributes
edges ¬x→y and ¬y→x, a unit clause (x) counts as (x ∨ x) and contributes
¬x→x. Unsatisfiability is a variable sharing a strongly connected component
with its negation; otherwise variable x is assigned false exactly when
comp[x] < comp[¬x] in topological order.

Horn satisfiability runs unit propagation to fixpoint and checks for the
empty clause; the witness extends the forced assignments with false
everywhere else.
"""

from __future__ import annotations

from dataclasses import dataclass

from .formula import Assignment, CnfFormula, DnfFormula, is_horn, max_clause_width
from .graph import Digraph, strongly_connected_components
from .oracle import SatResult


def _lit_label(lit: int) -> str:
    return str(lit)


@dataclass(frozen=True)
class ImplicationGraph:
    """Digraph over the 2·num_vars literal vertices of a 2-CNF formula."""

    num_vars: int
    digraph: Digraph

    def label(self, lit: int) -> str:
        if lit == 0 or abs(lit) > self.num_vars:
            raise ValueError(f"literal {lit} out of range")
        return _lit_label(lit)

    def lit(self, label: str) -> int:
        return int(label)


def build_implication_graph(f: CnfFormula) -> ImplicationGraph:
    """Implication graph of a formula of width <= 2 (no empty clauses)."""
    if max_clause_width(f) > 2:
        raise ValueError("implication graph requires clause width <= 2")
    if any(not c for c in f.clauses):
        raise ValueError("empty clause: formula is unsatisfiable as given")
    vertices = []
    for v in range(1, f.num_vars + 1):
        vertices.append(_lit_label(v))
        vertices.append(_lit_label(-v))
    edges = set()
    for clause in f.clauses:
        x = clause[0]
        y = clause[1] if len(clause) == 2 else clause[0]
        # A tautological clause (x or not-x) would yield self-loop
        # implications, which constrain nothing; skip them.
        if x != -y:
            edges.add((_lit_label(-x), _lit_label(y)))
            edges.add((_lit_label(-y), _lit_label(x)))
    return ImplicationGraph(f.num_vars, Digraph(vertices, edges))


def solve_2sat(f: CnfFormula) -> SatResult:
    """Deterministic 2-SAT decision plus witness extraction.

    Unsatisfiable iff some SCC contains a literal and its negation. The
    witness sets x false iff comp[x] < comp[¬x], which always satisfies the
    formula.
    """
    if max_clause_width(f) > 2:
        raise ValueError("solve_2sat requires clause width <= 2")
    if any(not c for c in f.clauses):
        return SatResult(False, None)
    ig = build_implication_graph(f)
    _, comp = strongly_connected_components(ig.digraph)
    witness: Assignment = {}
    for v in range(1, f.num_vars + 1):
        pos, neg = comp[_lit_label(v)], comp[_lit_label(-v)]
        if pos == neg:
            return SatResult(False, None)
        witness[v] = pos > neg
    return SatResult(True, witness)


@dataclass(frozen=True)
class UpResult:
    """Fixpoint of unit propagation: the reduced formula plus forced values."""

    reduced: CnfFormula
    forced: Assignment


def unit_propagate(f: CnfFormula) -> UpResult:
    """Unit propagation to fixpoint, lowest-indexed unit clause first.

    A clause whose occurrences are all one literal, like (x or x), counts as
    the unit {x}. Processing a unit records x, deletes clauses containing x,
    and strips ¬x from the rest, possibly creating the empty clause, at
    which point propagation stops (the empty clause decides everything a
    caller needs).
    """
    clauses: list[tuple[int, ...]] = list(f.clauses)
    forced: Assignment = {}
    while True:
        unit = next((c for c in clauses if c and len(set(c)) == 1), None)
        if unit is None or any(not c for c in clauses):
            break
        x = unit[0]
        forced[abs(x)] = x > 0
        reduced: list[tuple[int, ...]] = []
        for clause in clauses:
            if x in clause:
                continue
            if -x in clause:
                clause = tuple(lit for lit in clause if lit != -x)
            reduced.append(clause)
        clauses = reduced
    return UpResult(CnfFormula(f.num_vars, clauses), forced)


def solve_horn(f: CnfFormula) -> SatResult:
    """Horn satisfiability: satisfiable iff the empty clause never appears.

    The witness keeps the propagation-forced values and assigns false to
    every other variable.
    """
    if not is_horn(f):
        raise ValueError("solve_horn requires a Horn formula")
    up = unit_propagate(f)
    if any(not c for c in up.reduced.clauses):
        return SatResult(False, None)
    witness = {v: up.forced.get(v, False) for v in range(1, f.num_vars + 1)}
    return SatResult(True, witness)


def solve_dnf(f: DnfFormula) -> SatResult:
    """DNF satisfiability by scanning for a contradiction-free term.

    The witness makes the first such term's literals true and every other
    variable false. A DNF with no terms is unsatisfiable (empty
    disjunction).
    """
    for term in f.terms:
        lits = set(term)
        if any(-lit in lits for lit in lits):
            continue
        witness = {v: False for v in range(1, f.num_vars + 1)}
        for lit in term:
            witness[abs(lit)] = lit > 0
        return SatResult(True, witness)
    return SatResult(False, None)
