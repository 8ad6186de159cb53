"""satkit: SAT fragments, CNF transformations, graph reductions, and
Turing-machine tableau encodings, cross-checked against brute-force search.
"""

from .errors import BudgetExceededError
from .formula import (
    Assignment,
    Clause,
    CnfFormula,
    DimacsError,
    DnfFormula,
    canonical,
    count_satisfied,
    evaluate,
    evaluate_dnf,
    is_horn,
    max_clause_width,
    parse_dimacs,
    write_dimacs,
)
from .oracle import SatResult, brute_force_sat, equisatisfiable, max_sat_decide, max_sat_optimum
from .graph import (
    Digraph,
    Graph,
    find_clique,
    find_hamiltonian_cycle,
    find_k_coloring,
    is_bipartite,
    strongly_connected_components,
    to_dot,
    verify_clique,
    verify_coloring,
    verify_hamiltonian_cycle,
)
from .tractable import (
    ImplicationGraph,
    UpResult,
    build_implication_graph,
    solve_2sat,
    solve_dnf,
    solve_horn,
    unit_propagate,
)
from .threecnf import ThreeCnfResult, project_witness, to_3cnf
from .reductions import (
    CliqueInstance,
    ColoringInstance,
    HamCycleInstance,
    NonCanonicalCycleError,
    assignment_to_clique,
    clique_witness_to_assignment,
    coloring_witness_to_assignment,
    hamcycle_witness_to_assignment,
    reduce_to_3color,
    reduce_to_clique,
    reduce_to_hamcycle,
)
from .turing import (
    BLANK,
    Configuration,
    MachineSpec,
    RunOutcome,
    build_equality_checker,
    decode_multitape,
    encode_multitape,
    format_machine,
    parse_machine,
    run_dtm,
    run_ntm,
    step,
)
from .cooklevin import (
    BOUNDARY,
    TableauSpec,
    WindowTemplate,
    decode_tableau,
    encode,
    legal_windows,
    state_symbol,
    tape_symbol,
)

__version__ = "0.1.0"
