"""so(3) generators, coordinate reflections and operator algebra on one degree.

Matrices act on coefficient vectors ordered by ascending m (flat index
i = m + j).  All norms are Frobenius norms.
"""

from dataclasses import dataclass

import numpy as np

from .errors import ContractViolation
from .harmonics import HarmonicSpace

__all__ = [
    "Operator",
    "SpectrumReport",
    "identity",
    "j3",
    "jplus",
    "jminus",
    "j1",
    "j2",
    "reflection",
    "hamiltonian",
    "commutator",
    "anticommutator",
    "compose",
    "adjoint",
    "add",
    "scale",
    "op_norm",
    "spectrum",
]

CLUSTER_TOL = 1e-8


@dataclass(frozen=True, eq=False)
class Operator:
    """A linear operator on one harmonic space, stored as a dense matrix."""

    space: HarmonicSpace
    matrix: np.ndarray

    def __post_init__(self):
        m = np.array(self.matrix, dtype=complex)
        d = self.space.dim
        if m.shape != (d, d):
            raise ValueError(f"matrix shape {m.shape} does not match dim {d}")
        m.setflags(write=False)
        object.__setattr__(self, "matrix", m)

    def _check_space(self, other):
        if not isinstance(other, Operator):
            raise TypeError(f"expected Operator, got {type(other).__name__}")
        if other.space != self.space:
            raise ValueError(
                f"operator space mismatch: j={self.space.j} vs j={other.space.j}"
            )

    def __add__(self, other):
        self._check_space(other)
        return Operator(self.space, self.matrix + other.matrix)

    def __sub__(self, other):
        self._check_space(other)
        return Operator(self.space, self.matrix - other.matrix)

    def __neg__(self):
        return Operator(self.space, -self.matrix)

    def __mul__(self, c):
        return Operator(self.space, self.matrix * complex(c))

    __rmul__ = __mul__

    def __matmul__(self, other):
        self._check_space(other)
        return Operator(self.space, self.matrix @ other.matrix)


@dataclass(frozen=True, eq=False)
class SpectrumReport:
    """Eigenvalues (ascending) with multiplicities, clustered at CLUSTER_TOL."""

    eigenvalues: np.ndarray
    multiplicities: np.ndarray

    def __post_init__(self):
        ev = np.array(self.eigenvalues)
        mult = np.array(self.multiplicities, dtype=int)
        if ev.shape != mult.shape or ev.ndim != 1:
            raise ValueError("eigenvalues and multiplicities must be 1-d of equal length")
        ev.setflags(write=False)
        mult.setflags(write=False)
        object.__setattr__(self, "eigenvalues", ev)
        object.__setattr__(self, "multiplicities", mult)

    @property
    def dim(self) -> int:
        return int(self.multiplicities.sum())


def identity(space: HarmonicSpace) -> Operator:
    """Identity operator."""
    return Operator(space, np.eye(space.dim, dtype=complex))


def j3(space: HarmonicSpace) -> Operator:
    """J3 Y_j^m = m Y_j^m."""
    return Operator(space, np.diag(space.m_values().astype(complex)))


def jplus(space: HarmonicSpace) -> Operator:
    """Raising operator, J+ Y_j^m = sqrt((j-m)(j+m+1)) Y_j^{m+1}."""
    j = space.j
    m = np.zeros((space.dim, space.dim), dtype=complex)
    for mm in range(-j, j):
        m[mm + 1 + j, mm + j] = np.sqrt((j - mm) * (j + mm + 1))
    return Operator(space, m)


def jminus(space: HarmonicSpace) -> Operator:
    """Lowering operator, the adjoint of jplus."""
    return adjoint(jplus(space))


def j1(space: HarmonicSpace) -> Operator:
    """J1 = (J+ + J-)/2."""
    p = jplus(space)
    return 0.5 * (p + adjoint(p))


def j2(space: HarmonicSpace) -> Operator:
    """J2 = (J+ - J-)/(2i)."""
    p = jplus(space)
    return (1.0 / 2j) * (p - adjoint(p))


def reflection(axis: int, space: HarmonicSpace) -> Operator:
    """Coordinate reflection R_axis, axis in {1, 2, 3}.

    R1 Y_j^m = Y_j^{-m};  R2 Y_j^m = (-1)^m Y_j^{-m};
    R3 Y_j^m = (-1)^{j+m} Y_j^m.
    """
    if axis not in (1, 2, 3):
        raise ValueError(f"axis must be 1, 2 or 3, got {axis!r}")
    j = space.j
    m = np.zeros((space.dim, space.dim), dtype=complex)
    for mm in range(-j, j + 1):
        if axis == 1:
            m[-mm + j, mm + j] = 1.0
        elif axis == 2:
            m[-mm + j, mm + j] = (-1.0) ** mm
        else:
            m[mm + j, mm + j] = (-1.0) ** (j + mm)
    return Operator(space, m)


def hamiltonian(space: HarmonicSpace) -> Operator:
    """H = J1^2 + J2^2 + J3^2 + 1/4, a scalar (j + 1/2)^2 on degree j."""
    a, b, c = j1(space), j2(space), j3(space)
    return a @ a + b @ b + c @ c + 0.25 * identity(space)


def commutator(a: Operator, b: Operator) -> Operator:
    """[a, b] = ab - ba."""
    return a @ b - b @ a


def anticommutator(a: Operator, b: Operator) -> Operator:
    """{a, b} = ab + ba."""
    return a @ b + b @ a


def compose(a: Operator, b: Operator) -> Operator:
    """Operator product a b (b acts first)."""
    return a @ b


def adjoint(a: Operator) -> Operator:
    """Hermitian adjoint."""
    return Operator(a.space, a.matrix.conj().T)


def add(a: Operator, b: Operator) -> Operator:
    return a + b


def scale(c, a: Operator) -> Operator:
    return a * c


def op_norm(a: Operator) -> float:
    """Frobenius norm of the matrix."""
    return float(np.linalg.norm(a.matrix))


def spectrum(a: Operator, self_adjoint: bool = True) -> SpectrumReport:
    """Eigenvalues of an operator, grouped into clusters of width CLUSTER_TOL.

    With self_adjoint=True (the default) the matrix must be Hermitian within
    1e-10 (relative to its norm); violation raises ContractViolation.
    """
    m = a.matrix
    if self_adjoint:
        herm = np.linalg.norm(m - m.conj().T)
        if herm > 1e-10 * max(1.0, np.linalg.norm(m)):
            raise ContractViolation(
                f"matrix is not self-adjoint (deviation {herm:.3e}) but self_adjoint=True"
            )
        vals = np.linalg.eigvalsh(m)
    else:
        raw = np.linalg.eigvals(m)
        order = np.lexsort((raw.imag, raw.real))
        raw = raw[order]
        vals = raw.real if np.max(np.abs(raw.imag)) < 1e-10 else raw

    uniq, mult = [], []
    for v in vals:
        if uniq and abs(v - uniq[-1]) <= CLUSTER_TOL:
            mult[-1] += 1
        else:
            uniq.append(v)
            mult.append(1)
    return SpectrumReport(eigenvalues=np.array(uniq), multiplicities=np.array(mult))
