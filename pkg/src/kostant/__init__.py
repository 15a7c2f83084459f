"""Kostant weight multiplicities, q-analogs and Weyl alternation sets for
types A_r, B_r and G2."""

from .qpoly import QPolynomial, format_qpoly
from .rootsys import (
    Basis,
    Family,
    RootSystem,
    RootSystemError,
    Weight,
    build_root_system,
    positive_roots,
    rho,
    root_to_weight_coords,
    weight_to_root_coords,
)
from .weyl import (
    WeylElement,
    act,
    enumerate_elements,
    reduced_word,
    weyl_order,
)
from .partition import is_nonneg_integral, partition_count, partition_count_q
from .multiplicity import (
    AlternationRecord,
    alternation_set,
    contributing_terms,
    freudenthal_multiplicity,
    kostant_multiplicity,
    kostant_multiplicity_q,
)
from .classify import (
    MultOneCase,
    NotCovered,
    fibonacci_cardinality,
    mult_one_mus,
    predicted_alternation_set,
    predicted_qmultiplicity,
    scan_conjecture,
    verify_bz_small,
)
from .atlas import alternation_grid, build_poset, distinct_types, render

__version__ = "0.1.0"
