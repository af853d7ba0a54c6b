"""Exact geometry of left-invariant almost contact B-metric structures on 3-dimensional Lie groups."""

from .algebra import (
    ACBStructure,
    FamilyParams,
    LieAlgebra,
    bracket,
    check_structure_axioms,
    is_lie_algebra,
    jacobi_defect,
    make_family,
    make_family_lee,
    make_lie_algebra,
    make_structure,
    standard_structure,
)
from .classification import class_flags, decomposition_residual, project_components
from .kernels import BACKEND
from .tensors import (
    compute_geometry,
    connection_torsion,
    curvature,
    fundamental_tensor,
    lee_forms,
    levi_civita,
    phi_canonical_defect,
    phiB_connection,
    section_type,
    sectional_curvature,
    square_norms,
)

__version__ = "0.1.0"
