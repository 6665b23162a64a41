"""superform: exact computation in the five integral-form families of D(2,1;sigma).

The package builds the family of 17-dimensional Lie superalgebras attached to a
parameter sigma on the plane s1+s2+s3 = 0, either symbolically (structure
constants in QQ[x1,x2,x3]/(x1+x2+x3)) or specialized at a rational point,
verifies their structural degenerations at singular parameters, and computes in
the points of the associated supergroups over Grassmann algebras.
"""

from .degen import StructureReport, analyze
from .scalars import PolyScalar, Sigma
from .sgrp import (
    EngineReport,
    GroupContext,
    GroupElement,
    GroupStructureReport,
    PresentationReport,
    make_context,
    verify_engine,
    verify_group_structure,
    verify_presentation,
)
from .weil import WeilAlgebra, WeilElement

__all__ = [
    "EngineReport",
    "GroupContext",
    "GroupElement",
    "GroupStructureReport",
    "PolyScalar",
    "PresentationReport",
    "Sigma",
    "StructureReport",
    "WeilAlgebra",
    "WeilElement",
    "analyze",
    "make_context",
    "verify_engine",
    "verify_group_structure",
    "verify_presentation",
]

__version__ = "0.1.0"
