"""Quaternion unit gain graphs: exact left row rank, girth, classification.

The package keeps two scalar towers behind one interface.  Exact
rational coefficients are the default: the girth-rank laws are exact
statements and type decisions sit on measure-zero boundaries that
floats cannot resolve.  Float coefficients exist for sampled uniform
unit gains and always carry explicit tolerances.
"""

from .errors import (
    AcyclicGraphError,
    AdjointParityError,
    AmbiguousTypeError,
    DisconnectedGraphError,
    Falsification,
    FormatError,
    NotACycleError,
    OracleDisagreement,
    ParityMismatchError,
    PendantTwinsError,
    QggError,
    WrongFamilyError,
)
from .quat import (
    I,
    J,
    K,
    LIPSCHITZ_UNITS,
    ONE,
    Quaternion,
    ZERO,
    random_lipschitz_unit,
    random_unit_quaternion,
)
from .qlinalg import (
    ComplexRational,
    QMatrix,
    RankReport,
    block_diag,
    complex_adjoint,
    left_row_rank_eliminate,
    rank,
    rank_both,
    rank_via_adjoint,
)
from .graph import (
    CycleType,
    GainGraph,
    GirthWitness,
    all_simple_cycles,
    brute_force_girth,
    connected_components,
    cycle_gain,
    cycle_type,
    cycle_type_report,
    delete_vertices,
    disjoint_union,
    emit_qgg,
    gain_graph,
    girth,
    induced_subgraph,
    is_connected,
    is_dominating_set,
    load_qgg,
    normalize_by_spanning_tree,
    parse_qgg,
    save_qgg,
    switch,
    with_random_gains,
)
from .reduce import (
    ShapeReport,
    bicyclic_core,
    find_multiple_vertices,
    pendant_twins,
    recognize,
    reduced_graph,
    remove_pendant_twins,
    trim_pendant_pairs,
    witness_is_valid,
)
from .theorems import (
    ClassificationReport,
    bicyclic_lower_bound,
    canonical_unicyclic_rank,
    classify,
    classify_rank2,
    classify_rank_eq_girth_family,
    cycle_attachment_rank,
    cycle_rank,
    graph_rank,
    k4_rank_check,
    kab_rank2_iff,
    path_rank,
    table1_predict,
    table2_predict,
    verify_girth_bound,
)
from .survey import SurveyReport, run_survey

__version__ = "0.1.0"
