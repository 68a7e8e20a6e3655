"""Degrees and genera of incidence scrolls in P^n.

A base of linear subspaces {P^{n_1}, ..., P^{n_r}} of P^n determines the
ruled surface swept by the lines meeting all of them.  The degree of that
surface comes from the Pieri rule on the Grassmannian of lines (with an
independent tableau count as a second oracle); the genus comes from the
standard-family recursion or from a K-theoretic Euler characteristic.
"""

from .base import IncidenceBase
from .errors import (
    ConsistencyFault,
    DimensionError,
    DomainError,
    FillingSpecError,
    IncidenceError,
    InvalidBaseError,
    JoinNotApplicable,
    TransformNotApplicable,
    UnsupportedError,
)
from .families import (
    Family,
    FamilyKey,
    Partition,
    ScrollModel,
    classify_g01,
    count_e0_scrolls,
    decomposable_incidence_test,
    delta_e0,
    delta_ege1,
    delta_enot0,
    family_invariants,
    invariants_e0,
    invariants_ege1,
    invariants_enot0,
    partition_count,
    partitions_of,
)
from .incidence import (
    ScrollInvariants,
    StandardFamilyKey,
    catalog,
    elementary_transform,
    fundamental_invariants,
    genus_report,
    join_reduce,
    standard_family_invariants,
    validate_base,
)
from .ktheory import ktheory_genus
from .schubert import (
    ClassSum,
    SchubertIndex,
    curve_class_degree,
    intersection_number,
    pieri_multiply,
    product_of_specials,
    special_class,
)
from .tableau import FillingSpec, count_fillings

__version__ = "0.1.0"
