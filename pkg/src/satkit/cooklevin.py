"""Tableau encoding of bounded machine acceptance into CNF.

``encode(m, input, p)`` builds a formula that is satisfiable exactly when
the machine has an accepting branch of at most p-1 steps that fits in p-3
tape cells. The tableau is a p x p grid of cells; row 1 is pinned to the
initial configuration ``# q0 input blanks #``, each later row follows from
its predecessor through the machine's transitions (halting rows repeat
verbatim), and acceptance means the accept state appears somewhere.

Cell contents range over the symbol universe: machine states, tape symbols,
and the row-boundary marker. The three kinds are namespaced as tagged
tuples (``("q", state)``, ``("g", symbol)``, ``BOUNDARY``) so state and
tape names can never collide.

The per-variable meaning is "cell (row, col) holds symbol s". Constraints:

* every cell holds exactly one symbol (at-least-one clause plus pairwise
  exclusions),
* row 1 is pinned by unit clauses,
* some cell holds the accept state (one wide clause),
* every 2x3 window of two consecutive rows is legal: for each *illegal*
  window content w and each window position, a 6-literal clause forbids w.

Legal windows are generated machine-locally: sliding a window over every
transition's neighbourhood with one enumerated cell of hidden context on
each side, plus content-preserving windows away from the head and verbatim
repeats around halted states. The head never legally steps onto a boundary
column, so runs needing more than p-3 cells have no satisfying tableau.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product
from typing import NamedTuple

from .errors import BudgetExceededError
from .formula import Assignment, CnfFormula
from .turing import BLANK, MachineSpec

BOUNDARY = ("#",)


def state_symbol(name: str) -> tuple[str, str]:
    return ("q", name)


def tape_symbol(name: str) -> tuple[str, str]:
    return ("g", name)


def render_symbol(sym) -> str:
    return "#" if sym == BOUNDARY else sym[1]


class WindowTemplate(NamedTuple):
    top: tuple
    bottom: tuple


def legal_windows(m: MachineSpec) -> set[WindowTemplate]:
    """All 2x3 window contents consistent with some legal row transition."""
    gam = [tape_symbol(s) for s in sorted(m.tape_alphabet)]
    ctx = gam + [BOUNDARY]
    legal: set[WindowTemplate] = set()

    def add(top, bottom) -> None:
        # A boundary can never sit mid-window in a real tableau; keeping
        # such windows illegal is what pins # to the border columns.
        if top[1] == BOUNDARY or bottom[1] == BOUNDARY:
            return
        legal.add(WindowTemplate(tuple(top), tuple(bottom)))

    # Content far from the head is copied verbatim.
    for t1 in ctx:
        for t2 in gam:
            for t3 in ctx:
                add((t1, t2, t3), (t1, t2, t3))

    # Halted configurations repeat verbatim; the head may be parked facing
    # the right boundary after a final right move.
    for halted in (m.q_accept, m.q_reject):
        q = state_symbol(halted)
        for a in ctx:
            for w in ctx:
                add((w, q, a), (w, q, a))
            for y in ctx:
                add((q, a, y), (q, a, y))
        for v in ctx:
            for w in gam:
                add((v, w, q), (v, w, q))

    # Windows overlapping a transition's neighbourhood. The strip spans
    # relative cells -3..+3 around the state cell (rel 0, head symbol at
    # rel +1); cells outside rel -1..+1 are hidden context.
    for state in sorted(m.states):
        if m.is_halting(state):
            continue
        for sym in sorted(m.tape_alphabet):
            q, a = state_symbol(state), tape_symbol(sym)
            for target, written, direction in m.options(state, sym):
                r, b = state_symbol(target), tape_symbol(written)
                situations = []
                if direction == "R":
                    for x in ctx:
                        situations.append(((x, q, a), (x, b, r), range(-3, 2)))
                else:
                    for x in gam:
                        situations.append(((x, q, a), (r, x, b), range(-3, 2)))
                    # At the left edge the head stays put.
                    situations.append(
                        ((BOUNDARY, q, a), (BOUNDARY, r, b), range(-1, 2))
                    )
                for top3, bot3, offsets in situations:
                    for off in offsets:
                        rels = range(off, off + 3)
                        free = [idx for idx, rel in enumerate(rels) if not -1 <= rel <= 1]
                        top = [None if idx in free else top3[rel + 1] for idx, rel in enumerate(rels)]
                        bottom = [None if idx in free else bot3[rel + 1] for idx, rel in enumerate(rels)]
                        for combo in product(ctx, repeat=len(free)):
                            for idx, val in zip(free, combo):
                                top[idx] = val
                                bottom[idx] = val
                            add(top, bottom)
    return legal


@dataclass(frozen=True)
class TableauSpec:
    """Variable bookkeeping for one encoding: bijection (row, col, symbol) -> var."""

    p: int
    symbols: tuple
    machine: MachineSpec
    input_symbols: tuple[str, ...]

    @property
    def num_symbols(self) -> int:
        return len(self.symbols)

    @property
    def num_vars(self) -> int:
        return self.p * self.p * self.num_symbols

    def sym_index(self, sym) -> int:
        return self.symbols.index(sym)

    def var(self, row: int, col: int, sym) -> int:
        if not (1 <= row <= self.p and 1 <= col <= self.p):
            raise ValueError(f"cell ({row}, {col}) outside the {self.p}x{self.p} tableau")
        return self.cell_base(row, col) + self.symbols.index(sym) + 1

    def cell_base(self, row: int, col: int) -> int:
        return ((row - 1) * self.p + (col - 1)) * self.num_symbols

    def cell_of(self, var: int) -> tuple[int, int, object]:
        idx = var - 1
        sym = self.symbols[idx % self.num_symbols]
        cell = idx // self.num_symbols
        return cell // self.p + 1, cell % self.p + 1, sym

    def var_map_entries(self) -> list[dict]:
        """JSON-ready variable map: one entry per tableau variable."""
        out = []
        for var in range(1, self.num_vars + 1):
            row, col, sym = self.cell_of(var)
            kind = "boundary" if sym == BOUNDARY else ("state" if sym[0] == "q" else "symbol")
            out.append(
                {"var": var, "row": row, "col": col, "kind": kind, "label": render_symbol(sym)}
            )
        return out


def _tableau_symbols(m: MachineSpec) -> tuple:
    return (
        tuple(state_symbol(s) for s in sorted(m.states))
        + tuple(tape_symbol(s) for s in sorted(m.tape_alphabet))
        + (BOUNDARY,)
    )


def encode(
    m: MachineSpec, input_symbols: str | list[str], p: int, max_clauses: int = 20_000_000
) -> tuple[CnfFormula, TableauSpec]:
    """CNF formula satisfiable iff ``m`` accepts the input within the tableau.

    Requires p >= len(input) + 3 (boundaries, the state cell, and the
    input). Variable count is exactly p^2 * |symbol universe|. The move
    constraints contribute roughly |universe|^6 clauses per window position,
    so encodings beyond ``max_clauses`` are refused rather than attempted;
    this is a desk-scale tool.
    """
    symbols = tuple(input_symbols)
    bad = [s for s in symbols if s not in m.input_alphabet]
    if bad:
        raise ValueError(f"input symbols {bad!r} not in the input alphabet")
    if p < len(symbols) + 3:
        raise ValueError(f"p={p} too small: need at least {len(symbols) + 3}")
    universe = len(m.states) + len(m.tape_alphabet) + 1
    move_clause_bound = (p - 1) * (p - 2) * universe**6
    if move_clause_bound > max_clauses:
        raise BudgetExceededError(
            f"about {move_clause_bound:,} move clauses exceed the encoding "
            f"budget of {max_clauses:,}; shrink the machine or p"
        )

    spec = TableauSpec(p, _tableau_symbols(m), m, symbols)
    msz = spec.num_symbols
    clauses: list[tuple[int, ...]] = []

    # Interned literal objects keep the big move-clause tuples compact.
    pos = list(range(spec.num_vars + 1))
    neg = [-v for v in range(spec.num_vars + 1)]

    for row in range(1, p + 1):
        for col in range(1, p + 1):
            base = spec.cell_base(row, col)
            clauses.append(tuple(pos[base + s] for s in range(1, msz + 1)))
            for s in range(1, msz + 1):
                for t in range(s + 1, msz + 1):
                    clauses.append((neg[base + s], neg[base + t]))

    row1 = (
        [BOUNDARY, state_symbol(m.q0)]
        + [tape_symbol(s) for s in symbols]
        + [tape_symbol(BLANK)] * (p - 3 - len(symbols))
        + [BOUNDARY]
    )
    for col, sym in enumerate(row1, start=1):
        clauses.append((pos[spec.var(1, col, sym)],))

    accept = state_symbol(m.q_accept)
    clauses.append(
        tuple(
            pos[spec.var(row, col, accept)]
            for row in range(1, p + 1)
            for col in range(1, p + 1)
        )
    )

    legal = {
        tuple(spec.sym_index(s) for s in w.top + w.bottom) for w in legal_windows(m)
    }
    illegal = [w for w in product(range(msz), repeat=6) if w not in legal]
    for row in range(1, p):
        for col in range(1, p - 1):
            b1 = spec.cell_base(row, col) + 1
            b2 = spec.cell_base(row, col + 1) + 1
            b3 = spec.cell_base(row, col + 2) + 1
            b4 = spec.cell_base(row + 1, col) + 1
            b5 = spec.cell_base(row + 1, col + 1) + 1
            b6 = spec.cell_base(row + 1, col + 2) + 1
            clauses.extend(
                (neg[b1 + s1], neg[b2 + s2], neg[b3 + s3], neg[b4 + s4], neg[b5 + s5], neg[b6 + s6])
                for s1, s2, s3, s4, s5, s6 in illegal
            )

    return CnfFormula._trusted(spec.num_vars, tuple(clauses)), spec


def decode_tableau(spec: TableauSpec, a: Assignment) -> list[list[str]]:
    """Rows of the tableau selected by a satisfying assignment.

    Each cell must have exactly one asserted symbol (guaranteed for models
    of the encoding); anything else is rejected.
    """
    rows = []
    for row in range(1, spec.p + 1):
        cells = []
        for col in range(1, spec.p + 1):
            base = spec.cell_base(row, col)
            chosen = [
                spec.symbols[s - 1] for s in range(1, spec.num_symbols + 1) if a.get(base + s)
            ]
            if len(chosen) != 1:
                raise ValueError(
                    f"cell ({row}, {col}) has {len(chosen)} asserted symbols"
                )
            cells.append(render_symbol(chosen[0]))
        rows.append(cells)
    return rows
