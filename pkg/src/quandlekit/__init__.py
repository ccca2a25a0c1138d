"""Quandles, Dehn quandles and Lefschetz fibration monodromy."""

from .errors import (
    ClosureError,
    ConsistencyError,
    DomainError,
    InputError,
    QuandleError,
    ResourceError,
)
from .finite import (
    FiniteQuandle,
    QuandleHom,
    alexander_quandle,
    check_axioms,
    congruence_quotient,
    conjugation_quandle,
    dihedral_quandle,
    genus2_seventeen,
    hom_count,
    subquandle_generated,
    transposition_quandle,
    trivial_quandle,
    universal_abelian_quotient,
    universal_involutory_quotient,
)
from .groups import GroupElement
from .homology import CoefficientRing, HomologyElement, ReducedHomologyElement
from .monodromy import MonodromyDatum
from .qhomology import HomologyGroup, quandle_homology, rack_homology, smith_normal_form
from .torus import Slope

__version__ = "0.1.0"
