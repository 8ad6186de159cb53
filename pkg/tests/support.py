"""Shared test helpers: independent oracles and generators.

Everything here is deliberately separate from the library so the tests
check implementations against a second, dumber route.
"""

from __future__ import annotations

import itertools
import random
import re

from satkit.formula import CnfFormula, DnfFormula
from satkit.turing import BLANK, Configuration, MachineSpec, initial_configuration, step


def all_assignments(num_vars):
    """Total assignments in lexicographic order (false < true, var 1 first)."""
    for bits in itertools.product((False, True), repeat=num_vars):
        yield {i + 1: bits[i] for i in range(num_vars)}


def satisfies(f: CnfFormula, a) -> bool:
    return all(any((a[abs(l)] if l > 0 else not a[abs(l)]) for l in c) for c in f.clauses)


def first_satisfying(f: CnfFormula):
    """Lexicographically first model by raw enumeration; None if unsat."""
    for a in all_assignments(f.num_vars):
        if satisfies(f, a):
            return a
    return None


def negate_cnf_to_dnf(f: CnfFormula) -> DnfFormula:
    """De Morgan: not(AND of ORs) = OR of ANDs of negated literals."""
    return DnfFormula(f.num_vars, [tuple(-l for l in c) for c in f.clauses])


def random_cnf(rng: random.Random, num_vars: int, num_clauses: int, max_width: int,
               min_width: int = 1) -> CnfFormula:
    lits = [v for v in range(1, num_vars + 1)] + [-v for v in range(1, num_vars + 1)]
    clauses = [
        tuple(rng.choice(lits) for _ in range(rng.randint(min_width, max_width)))
        for _ in range(num_clauses)
    ]
    return CnfFormula(num_vars, clauses)


def random_3cnf(rng: random.Random, num_vars: int, num_clauses: int) -> CnfFormula:
    lits = [v for v in range(1, num_vars + 1)] + [-v for v in range(1, num_vars + 1)]
    clauses = [tuple(rng.choice(lits) for _ in range(3)) for _ in range(num_clauses)]
    return CnfFormula(num_vars, clauses)


def reachability(vertices, edges):
    """Transitive closure by repeated squaring-free propagation."""
    reach = {v: {v} for v in vertices}
    changed = True
    while changed:
        changed = False
        for u, v in edges:
            before = len(reach[u])
            reach[u] |= reach[v]
            if len(reach[u]) != before:
                changed = True
    return reach


def scc_by_closure(vertices, edges):
    """SCC partition from mutual reachability; the test-side SCC oracle."""
    reach = reachability(vertices, edges)
    seen = set()
    parts = []
    for v in vertices:
        if v in seen:
            continue
        part = frozenset(u for u in vertices if u in reach[v] and v in reach[u])
        seen |= part
        parts.append(part)
    return set(parts)


def bfs_ntm_accepts(m: MachineSpec, input_symbols, depth_limit: int) -> bool:
    """Breadth-first search over the configuration graph, the independent
    check for run_ntm."""
    frontier = [initial_configuration(m, input_symbols)]
    seen = set(frontier)
    for _ in range(depth_limit + 1):
        nxt = []
        for c in frontier:
            if c.state == m.q_accept:
                return True
            if m.is_halting(c.state):
                continue
            for idx in range(len(m.options(c.state, c.read()))):
                child = step(m, c, idx)
                if child not in seen:
                    seen.add(child)
                    nxt.append(child)
        frontier = nxt
    return False


def row_successors(m: MachineSpec, row: list[str]) -> list[list[str]]:
    """All legal successor rows of a rendered tableau row (or halt repeats)."""
    inner = row[1:-1]
    state_pos = [i for i, s in enumerate(inner) if s in m.states]
    assert len(state_pos) == 1, row
    sp = state_pos[0]
    state = inner[sp]
    if m.is_halting(state):
        return [list(row)]
    head_sym = inner[sp + 1] if sp + 1 < len(inner) else "#"
    if head_sym == "#" or head_sym not in m.tape_alphabet:
        return []
    out = []
    for target, written, direction in m.options(state, head_sym):
        nxt = list(inner)
        if direction == "R":
            nxt[sp] = written
            nxt[sp + 1] = target
        elif sp == 0:
            nxt[sp] = target
            nxt[sp + 1] = written
        else:
            nxt[sp - 1], nxt[sp], nxt[sp + 1] = target, nxt[sp - 1], written
        out.append(["#"] + nxt + ["#"])
    return out


def one_step_acceptor() -> MachineSpec:
    """Accepts any input starting with 1, in a single step."""
    return MachineSpec(
        states={"q0", "acc", "rej"},
        input_alphabet={"1"},
        tape_alphabet={"1", BLANK},
        delta={("q0", "1"): [("acc", "1", "R")], ("q0", BLANK): [("rej", BLANK, "R")]},
        q0="q0",
        q_accept="acc",
        q_reject="rej",
    )


def right_drifter() -> MachineSpec:
    """Never halts: marches right forever."""
    return MachineSpec(
        states={"q0", "acc", "rej"},
        input_alphabet={"1"},
        tape_alphabet={"1", BLANK},
        delta={("q0", "1"): [("q0", "1", "R")], ("q0", BLANK): [("q0", BLANK, "R")]},
        q0="q0",
        q_accept="acc",
        q_reject="rej",
    )


def branching_acceptor() -> MachineSpec:
    """Nondeterministic: on 1 either accept now or keep walking right."""
    return MachineSpec(
        states={"q0", "acc", "rej"},
        input_alphabet={"1"},
        tape_alphabet={"1", BLANK},
        delta={
            ("q0", "1"): [("acc", "1", "R"), ("q0", "1", "R")],
            ("q0", BLANK): [("rej", BLANK, "R")],
        },
        q0="q0",
        q_accept="acc",
        q_reject="rej",
    )


def prefix_11_acceptor() -> MachineSpec:
    """Accepts inputs whose first two symbols are 1, without leaving them."""
    return MachineSpec(
        states={"q0", "q1", "acc", "rej"},
        input_alphabet={"1"},
        tape_alphabet={"1", BLANK},
        delta={
            ("q0", "1"): [("q1", "1", "R")],
            ("q1", "1"): [("acc", "1", "R")],
            ("q0", BLANK): [("rej", BLANK, "R")],
            ("q1", BLANK): [("rej", BLANK, "R")],
        },
        q0="q0",
        q_accept="acc",
        q_reject="rej",
    )


def edge_bouncer() -> MachineSpec:
    """Bounces off the left tape edge before accepting; exercises the
    stay-at-zero rule."""
    return MachineSpec(
        states={"q0", "q1", "acc", "rej"},
        input_alphabet={"1"},
        tape_alphabet={"1", BLANK},
        delta={
            ("q0", "1"): [("q1", "1", "L")],
            ("q1", "1"): [("acc", "1", "R")],
            ("q0", BLANK): [("rej", BLANK, "R")],
            ("q1", BLANK): [("rej", BLANK, "R")],
        },
        q0="q0",
        q_accept="acc",
        q_reject="rej",
    )


def paper_walker_wrapped() -> MachineSpec:
    """The invert/preserve walker delta (states q1-q3 over {a, b}) embedded
    in an acceptor: blanks reject from q1/q3 and accept from q2."""
    return MachineSpec(
        states={"q1", "q2", "q3", "acc", "rej"},
        input_alphabet={"a"},
        tape_alphabet={"a", "b", BLANK},
        delta={
            ("q1", "a"): [("q2", "b", "R")],
            ("q1", "b"): [("q2", "a", "R")],
            ("q2", "a"): [("q3", "a", "L")],
            ("q2", "b"): [("q3", "b", "L")],
            ("q3", "a"): [("q1", "a", "R"), ("q3", "b", "L")],
            ("q3", "b"): [("q1", "b", "R"), ("q3", "a", "L")],
            ("q1", BLANK): [("rej", BLANK, "R")],
            ("q2", BLANK): [("acc", BLANK, "R")],
            ("q3", BLANK): [("rej", BLANK, "R")],
        },
        q0="q1",
        q_accept="acc",
        q_reject="rej",
    )


def tableau_battery() -> list[MachineSpec]:
    return [
        one_step_acceptor(),
        right_drifter(),
        branching_acceptor(),
        prefix_11_acceptor(),
        edge_bouncer(),
        paper_walker_wrapped(),
    ]


def machine_inputs(m: MachineSpec, max_len: int) -> list[str]:
    syms = sorted(m.input_alphabet)
    out = []
    for length in range(max_len + 1):
        for combo in itertools.product(syms, repeat=length):
            out.append("".join(combo))
    return out


def accepting_space_profiles(m: MachineSpec, input_symbols, depth: int) -> set:
    """Head-excursion profiles of accepting branches within ``depth`` steps.

    Each profile is (max head over reading configurations, accepting head).
    A reading configuration must keep its head strictly inside a tableau's
    tape area while a halted head may sit parked on the right boundary, so
    the two bounds differ by one; see :func:`tableau_expected_sat`.
    """
    start = initial_configuration(m, input_symbols)
    profiles: set[tuple[int, int]] = set()

    def note_accept(c: Configuration, hi: int) -> None:
        profiles.add((hi, c.head))

    if start.state == m.q_accept:
        note_accept(start, -1)
    frontier = {(start, start.head if not m.is_halting(start.state) else -1)}
    seen = set(frontier)
    for _ in range(depth):
        nxt = set()
        for c, hi in frontier:
            if m.is_halting(c.state):
                continue
            for idx in range(len(m.options(c.state, c.read()))):
                child = step(m, c, idx)
                if child.state == m.q_accept:
                    note_accept(child, hi)
                    continue
                key = (child, hi if m.is_halting(child.state) else max(hi, child.head))
                if key not in seen:
                    seen.add(key)
                    nxt.add(key)
        frontier = nxt
    return profiles


def tableau_expected_sat(profiles: set, p: int) -> bool:
    """Whether some accepting branch fits a p-column tableau: every read
    head at cell <= p-4 and the final accepting head at cell <= p-3 (a
    halted head may face the boundary column)."""
    return any(hi <= p - 4 and ha <= p - 3 for hi, ha in profiles)


_DOT_ID = re.compile(r'^("([^"\\]|\\.)*"|[A-Za-z_][A-Za-z0-9_]*)$')


def check_dot(text: str, directed: bool) -> None:
    """Tiny structural validator for the DOT subset we emit."""
    lines = [ln.strip() for ln in text.strip().splitlines()]
    head = "digraph G {" if directed else "graph G {"
    assert lines[0] == head, lines[0]
    assert lines[-1] == "}"
    edge_op = "->" if directed else "--"
    for ln in lines[1:-1]:
        assert ln.endswith(";"), ln
        body = ln[:-1]
        attrs = None
        if "[" in body:
            body, _, attr_part = body.partition("[")
            attrs = attr_part.strip()
            assert attrs.endswith("]")
        parts = body.split(f" {edge_op} ")
        assert len(parts) in (1, 2), ln
        for p in parts:
            assert _DOT_ID.match(p.strip()), f"bad identifier {p!r}"
