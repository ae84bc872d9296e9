"""Quantum rigid rotor supersymmetry toolkit.

Finite-dimensional realization of the rotor's hidden supersymmetry on
spherical-harmonic spaces: the supercharge and its symmetry algebra,
joint eigenbases with their tridiagonal data, the anti-Krawtchouk
orthogonal polynomials, and the overlap duality between the direct and
coordinate-permuted eigenbases.  Every closed-form claim is checked
against an independent numerical oracle at construction or in the
verification suite.
"""

from .errors import ContractViolation, VerificationError
from .harmonics import (
    BasisIndex,
    HarmonicSpace,
    QuadratureGrid,
    StateVector,
    assoc_legendre,
    build_grid,
    evaluate_on_grid,
    harmonic_values,
    inner_product,
    project,
    ylm_eval,
)
from .operators import (
    Operator,
    SpectrumReport,
    add,
    adjoint,
    anticommutator,
    commutator,
    compose,
    hamiltonian,
    identity,
    j1,
    j2,
    j3,
    jminus,
    jplus,
    op_norm,
    reflection,
    scale,
    spectrum,
)
from .susy import (
    SusyOperators,
    casimir,
    non_symmetry_report,
    supercharge,
    supercharge_alt,
    susy_operators,
    symmetry_generators,
)
from .eigenbases import (
    LabeledBasis,
    TridiagonalData,
    closed_form_tridiagonal,
    decompose,
    f_basis,
    g_basis,
    joint_diagonalize,
    m_basis,
    q_action_on_m,
    tridiagonal_extract,
)
from .antikrawtchouk import (
    OverlapMatrix,
    RecurrenceTable,
    SpectralGrid,
    WeightTable,
    bannai_ito_params,
    eval_monic,
    overlaps_via_integral,
    overlaps_via_recurrence,
    recurrence_coeffs,
    weights,
    z_basis,
)
from .verification import CheckResult, VerificationReport, run_verification

__version__ = "0.1.0"

__all__ = [
    "ContractViolation",
    "VerificationError",
    "BasisIndex",
    "HarmonicSpace",
    "QuadratureGrid",
    "StateVector",
    "assoc_legendre",
    "build_grid",
    "evaluate_on_grid",
    "harmonic_values",
    "inner_product",
    "project",
    "ylm_eval",
    "Operator",
    "SpectrumReport",
    "add",
    "adjoint",
    "anticommutator",
    "commutator",
    "compose",
    "hamiltonian",
    "identity",
    "j1",
    "j2",
    "j3",
    "jminus",
    "jplus",
    "op_norm",
    "reflection",
    "scale",
    "spectrum",
    "SusyOperators",
    "casimir",
    "non_symmetry_report",
    "supercharge",
    "supercharge_alt",
    "susy_operators",
    "symmetry_generators",
    "LabeledBasis",
    "TridiagonalData",
    "closed_form_tridiagonal",
    "decompose",
    "f_basis",
    "g_basis",
    "joint_diagonalize",
    "m_basis",
    "q_action_on_m",
    "tridiagonal_extract",
    "OverlapMatrix",
    "RecurrenceTable",
    "SpectralGrid",
    "WeightTable",
    "bannai_ito_params",
    "eval_monic",
    "overlaps_via_integral",
    "overlaps_via_recurrence",
    "recurrence_coeffs",
    "weights",
    "z_basis",
    "CheckResult",
    "VerificationReport",
    "run_verification",
    "__version__",
]
