"""Exact character theory of the finite unitary groups U(n, F_q2).

The package computes, in exact arithmetic, the objects attached to U(n, F_q2)
by the characteristic map: conjugacy classes and centralizer orders, character
degrees, full character tables at small n, central character values, and
Frobenius-Schur indicators, together with the count of semisimple symplectic
characters and its cross-check through self-dual polynomials over F_q.
"""

__version__ = "0.1.0"
