"""Exact q-analogs of weight multiplicity and Brylinski-type filtrations
for symmetrizable Kac-Moody algebras, with explicit affine sl2 models."""

from .errors import (
    BoxTooSmall,
    DegreeMismatch,
    InternalInconsistency,
    KmbrylError,
    NotDominant,
    NotGCM,
    NotInRootLattice,
    NotSymmetrizable,
    SingularWeight,
)
from .gcm import GCM, Weight, classify, reflect, rho, validate_gcm
from .qanalog import (
    contributing_weyl_elements,
    freudenthal_dim,
    kostant_partition,
    q_multiplicity,
)
from .qpoly import QPoly
from .roots import RootTable, peterson_mult, positive_roots_with_mult, real_roots
from .semiinfinite import AffineLoopAlgebra, kahler_check
from .verma import (
    A1_AFFINE,
    AffineSL2Module,
    brylinski_e,
    brylinski_s,
    shapovalov_slice,
)

__version__ = "0.1.0"
