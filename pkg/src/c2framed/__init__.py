"""Calculator for the C2-equivariant framed cobordism groups in degrees 1 and sigma."""

from .errors import GradeMismatch, LiftAmbiguous, ParseError, StepTooLarge, SymmetryViolated
from .grading import FramingGrade, ReprDims, dims_of
from .manifolds import (
    ComponentKind,
    FramedComponent,
    FramedManifold,
    disjoint_union,
    make_component,
    normalize,
)
from .parser import format_manifold, parse_manifold
from .ptmap import (
    fixed_points_sigma,
    forget_r,
    is_cobordant,
    pt_image,
    pt_image_r,
    pt_image_sigma,
    rewrite_antipodal,
    tom_dieck_split_r,
)
from .stems import Omega0Element, Pi1Element, PiSigmaElement, Summand, add, tom_dieck_project

__version__ = "0.1.0"
