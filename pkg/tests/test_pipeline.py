"""Cross-module composition checks: transformations chained end to end."""

import random

from satkit.formula import DimacsError, evaluate, parse_dimacs
from satkit.graph import find_clique, verify_clique
from satkit.oracle import brute_force_sat
from satkit.reductions import clique_witness_to_assignment, reduce_to_clique
from satkit.threecnf import project_witness, to_3cnf
from satkit.turing import parse_machine
from support import random_cnf


def test_cnf_to_3cnf_to_clique_and_back():
    rng = random.Random(55)
    for _ in range(120):
        f = random_cnf(rng, 3, rng.randint(1, 2), 4)
        r = to_3cnf(f)
        inst = reduce_to_clique(r.formula)
        sat = brute_force_sat(f).satisfiable
        assert brute_force_sat(r.formula).satisfiable == sat
        clique = find_clique(inst.graph, inst.k)
        assert (clique is not None) == sat
        if clique is not None:
            assert verify_clique(inst.graph, clique, inst.k)
            a3 = clique_witness_to_assignment(inst, clique)
            assert evaluate(r.formula, a3) is True
            back = project_witness(r, a3)
            assert evaluate(f, back) is True


def test_parse_dimacs_never_crashes_on_junk():
    rng = random.Random(66)
    tokens = ["p", "cnf", "c", "0", "1", "-1", "7", "-0", "x", "\n", " ", "p cnf 2 1"]
    for _ in range(500):
        text = "".join(rng.choice(tokens) + rng.choice([" ", "\n"]) for _ in range(rng.randint(0, 30)))
        try:
            f = parse_dimacs(text)
            assert f.num_vars >= 0
        except DimacsError:
            pass


def test_parse_machine_never_crashes_on_junk():
    rng = random.Random(77)
    lines = [
        "states: a b", "input: 1", "tape: 1 _", "start: a", "accept: a",
        "reject: b", "delta: a 1 -> b 1 R", "delta: a", "junk", "", "delta: a 1 -> b 1 X",
    ]
    for _ in range(400):
        text = "\n".join(rng.choice(lines) for _ in range(rng.randint(0, 12)))
        try:
            parse_machine(text)
        except ValueError:
            pass
