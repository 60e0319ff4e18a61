"""
Four-mode population transfer toolkit

Analytical solution, verification and inverse design for complete population
transfer in four-mode nearest-neighbor coupled systems:
- Bell-basis factorization of the Hamiltonian into two SU(2) rotations
- Hopf coordinates and the Pythagorean-triple transfer condition
- Brute-force oracle propagation used to certify every closed form
- Derivative-free design search for transfer-capable couplings
"""

__version__ = "0.1.0"
