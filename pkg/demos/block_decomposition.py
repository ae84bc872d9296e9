"""Splitting one rotor level into two irreducible blocks.

The closed-form F and G bases diagonalize (Q, K3) jointly.  In them, the
generator K1 becomes real tridiagonal with strictly positive off-diagonal
entries, and the smaller block repeats the larger block's coefficient
pattern one degree lower.
"""

import json

import numpy as np

from rotorsusy import (
    HarmonicSpace,
    closed_form_tridiagonal,
    decompose,
    f_basis,
    m_basis,
    symmetry_generators,
    tridiagonal_extract,
)

j = 4
space = HarmonicSpace(j)

print(f"M-basis labels at j={j} (K3 is diagonal here):")
for lbl in m_basis(space).labels:
    print(f"  m={lbl['m']} eps={lbl['epsilon']:+d}  K3 = {lbl['k3']:+.1f}")

print()
k1, _, _ = symmetry_generators(space)
tri = tridiagonal_extract(k1, f_basis(space))
diag, off = closed_form_tridiagonal("F", j)
print("K1 on the F block, extracted vs closed form:")
print("  diag     ", np.array2string(tri.diag, precision=6))
print("  expected ", np.array2string(diag, precision=6))
print("  offdiag  ", np.array2string(tri.offdiag, precision=6))
print("  expected ", np.array2string(off, precision=6))

print()
print("full decomposition report:")
print(json.dumps(decompose(space), indent=2))
