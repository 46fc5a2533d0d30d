"""Hilbert bases, Hilbert functions and series of ordered score-sheet monoids."""

from .basis import (
    Decomposition,
    HBElement,
    decompose,
    hb_cardinality,
    hilbert_basis,
    verify_hilbert_basis,
)
from .counting import (
    Quasipolynomial,
    count_ordered,
    count_ordered_bruteforce,
    count_table,
    count_unordered,
    count_unordered_cumulative,
    fit_quasipolynomial,
    minimal_period,
    multiplicity_of,
)
from .dual import cone_system, hilbert_basis_completion
from .polytope import facet_system, pulling_triangulation, simplex_volume, verify_vertices
from .series import SeriesRep, default_denominator, expand_series, numerator_from_counts
from .sheets import (
    ScoreSheet,
    add_sheets,
    canonicalize,
    goal_vector,
    is_ordered,
    make_sheet,
    relabel,
    top_goals,
    total_goals,
)

__version__ = "0.1.0"
