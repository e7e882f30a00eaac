"""Signed abelian group algebras and the fiber decomposition of squared elements."""

from .algebra import (
    AlgebraElement,
    Idempotent,
    Signature,
    basis_sign,
    idempotent_half,
    idempotent_pair,
    multiply,
    right_project,
)
from .fiber import (
    EUCLIDEAN_FIBER_SIGNATURE,
    EUCLIDEAN_TANGENT_SIGNATURE,
    FIBER_SIGNATURE,
    TANGENT_SIGNATURE,
    ActionIntegral,
    CausalClass,
    CrossQuad,
    EuclideanComponents,
    EuclideanFiberDecomposition,
    EuclideanSector,
    Factorization,
    FiberDecomposition,
    MomentumTriple,
    TangentTriple,
    boost_element,
    classify_causal,
    decompose_c2,
    decompose_c2_projected,
    decompose_d2,
    decompose_d2_projected,
    decompose_euclidean,
    euclidean_plane_projected,
    factorize,
    fiber_component_basis,
    free_particle_element,
    is_min_action,
    lift_kinematics,
    rotation_element,
    tangent_component_basis,
    trajectory_action,
    transform,
)
from .tensor import (
    ComponentBasis,
    TensorElement,
    TensorProjector,
    basis_pair,
    diagonal,
    diagonal_projector,
    extract,
    lift_projectors,
    mixed_projector,
    square_embed,
    tensor_identity,
    tensor_multiply,
    tensor_product,
    trace_pairing,
)
from .verify import PropertyResult, VerificationReport, run_verification

__version__ = "0.1.0"
