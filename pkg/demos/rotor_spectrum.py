# Spectrum of the rigid rotor at a few degrees, straight from the matrices.
import numpy as np

from rotorsusy import HarmonicSpace, hamiltonian, j3, jplus, spectrum

for j in range(5):
    space = HarmonicSpace(j)
    rep = spectrum(hamiltonian(space))
    print(f"j={j}: H eigenvalue {rep.eigenvalues[0]:.4f} "
          f"(expected {(j + 0.5) ** 2:.4f}), multiplicity {rep.multiplicities[0]}")

print()
space = HarmonicSpace(2)
print("J3 on the degree-2 space is diagonal:")
print(np.real(j3(space).matrix))

print()
print("raising operator amplitudes sqrt((j-m)(j+m+1)) along the chain:")
up = jplus(space).matrix
for m in range(-2, 2):
    print(f"  m={m:+d} -> {m + 1:+d}: {up[m + 3, m + 2].real:.6f}")
