"""Reflection-built supercharges and the anticommutator spin algebra.

The supercharge Q squares to the shifted rotor Hamiltonian H = J^2 + 1/4,
so its spectrum consists of the two square roots +-(j + 1/2), split
asymmetrically: multiplicity j+1 on the negative branch, j on the positive
one.  Three reflection-dressed generators K1, K2, K3 close under
anticommutation ({K1,K2} = K3 and cyclic), commute with Q, and have
Casimir K1^2 + K2^2 + K3^2 = Q^2 - Q.
"""

from dataclasses import dataclass

import numpy as np

from .errors import VerificationError
from .harmonics import HarmonicSpace
from .operators import (
    Operator,
    commutator,
    identity,
    j1,
    j2,
    j3,
    op_norm,
    reflection,
)

__all__ = [
    "SusyOperators",
    "supercharge",
    "supercharge_alt",
    "symmetry_generators",
    "casimir",
    "susy_operators",
    "non_symmetry_report",
]


def supercharge(space: HarmonicSpace) -> Operator:
    """The supercharge Q = -i J1 R3 + i J2 R2 R3 - i J3 R2 - 1/2.

    Self-adjoint, squares to the shifted Hamiltonian (j + 1/2)^2.
    """
    a, b, c = j1(space), j2(space), j3(space)
    r2, r3 = reflection(2, space), reflection(3, space)
    return -1j * (a @ r3) + 1j * (b @ (r2 @ r3)) - 1j * (c @ r2) - 0.5 * identity(space)


def supercharge_alt(space: HarmonicSpace) -> Operator:
    """A second supercharge -i J1 R1 R2 + i J2 R1 - i J3 R1 R3 - R1 R2 R3 / 2.

    Also squares to the shifted Hamiltonian; its spectral multiplicities are
    measured, not prescribed.
    """
    a, b, c = j1(space), j2(space), j3(space)
    r1, r2, r3 = (reflection(i, space) for i in (1, 2, 3))
    return (
        -1j * (a @ (r1 @ r2))
        + 1j * (b @ r1)
        - 1j * (c @ (r1 @ r3))
        - 0.5 * (r1 @ (r2 @ r3))
    )


def symmetry_generators(space: HarmonicSpace):
    """The three generators K1, K2, K3 of the anticommutator spin algebra.

    K1 = i J1 R2 + R2 R3 / 2,  K2 = -i J2 R1 R2 + R1 R3 / 2,
    K3 = i J3 R1 + R1 R2 / 2.

    The sign of the J3 term in K3 is pinned by the algebra itself:
    {K1, K2} = K3, [K3, Q] = 0 and K3 Y_j^m = -i m Y_j^{-m} + ((-1)^m/2) Y_j^m
    all fail for the opposite sign.

    Returns
    -------
    (Operator, Operator, Operator)
    """
    a, b, c = j1(space), j2(space), j3(space)
    r1, r2, r3 = (reflection(i, space) for i in (1, 2, 3))
    k1 = 1j * (a @ r2) + 0.5 * (r2 @ r3)
    k2 = -1j * (b @ (r1 @ r2)) + 0.5 * (r1 @ r3)
    k3 = 1j * (c @ r1) + 0.5 * (r1 @ r2)
    return k1, k2, k3


def casimir(space: HarmonicSpace) -> Operator:
    """C = K1^2 + K2^2 + K3^2, equal to Q^2 - Q."""
    k1, k2, k3 = symmetry_generators(space)
    return k1 @ k1 + k2 @ k2 + k3 @ k3


@dataclass(frozen=True)
class SusyOperators:
    """Bundle of the Hamiltonian, both supercharges, generators and Casimir."""

    space: HarmonicSpace
    h: Operator
    q: Operator
    q_alt: Operator
    k1: Operator
    k2: Operator
    k3: Operator
    c: Operator

    def __post_init__(self):
        tol = 1e-12 * self.space.dim
        for name in ("h", "q", "q_alt", "k1", "k2", "k3", "c"):
            op = getattr(self, name)
            dev = np.linalg.norm(op.matrix - op.matrix.conj().T)
            if dev > tol:
                raise VerificationError(f"{name} is not self-adjoint (deviation {dev:.3e})")


def susy_operators(space: HarmonicSpace) -> SusyOperators:
    """Construct and validate the full bundle on one degree."""
    from .operators import hamiltonian

    k1, k2, k3 = symmetry_generators(space)
    return SusyOperators(
        space=space,
        h=hamiltonian(space),
        q=supercharge(space),
        q_alt=supercharge_alt(space),
        k1=k1,
        k2=k2,
        k3=k3,
        c=k1 @ k1 + k2 @ k2 + k3 @ k3,
    )


def non_symmetry_report(space: HarmonicSpace) -> dict:
    """Frobenius norms showing J_i and R_i do NOT commute with Q.

    All six norms are strictly positive for j >= 1 (and vanish at j = 0,
    where every operator is a scalar).  The norms [H, K_i] are included as
    a zero control.
    """
    q = supercharge(space)
    k1, k2, k3 = symmetry_generators(space)
    from .operators import hamiltonian

    h = hamiltonian(space)
    js = {"J1": j1(space), "J2": j2(space), "J3": j3(space)}
    rs = {f"R{i}": reflection(i, space) for i in (1, 2, 3)}
    report = {
        "j": space.j,
        "commutator_with_q": {
            name: op_norm(commutator(op, q)) for name, op in {**js, **rs}.items()
        },
        "hamiltonian_control": {
            f"K{i}": op_norm(commutator(h, k)) for i, k in ((1, k1), (2, k2), (3, k3))
        },
    }
    return report
