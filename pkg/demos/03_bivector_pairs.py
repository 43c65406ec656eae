"""
Dual structures generated by a bivector
=======================================

A bivector Lambda with [[Lambda, Lambda], X] = 0 for all sections X
induces a dual structure: the anchor is a o Lambda# and the bracket is
the Lambda-twisted bracket on forms.  When [Lambda, Lambda] = 0 the pair
is called triangular, otherwise exact.
"""

from bialgebroid import (BivectorData, ConstructionError, Multivector,
                         Polynomial, dirac_square, exact_from_bivector,
                         exact_identities)
from bialgebroid import AlgebroidStructure

zero = Polynomial.zero(())
one = Polynomial.const((), 1)


def algebra(rank, table):
    data = {k: tuple(Polynomial.const((), v) for v in entry)
            for k, entry in table.items()}
    return AlgebroidStructure(rank, (), [[] for _ in range(rank)], data, "vector")


# The Heisenberg algebra [e1, e2] = e3 with Lambda = e1 ^ e3 is Poisson:
# [Lambda, Lambda] = 0, so the induced pair is triangular.
heis = algebra(3, {(1, 2): (0, 0, 1)})
L = BivectorData(Multivector.monomial(3, (), (1, 3), one))
P = exact_from_bivector(heis, L)
print("label:", P.label)
print("f~ =", P.f_tilde())

# Rotate Lambda to e1 ^ e2 on the rotation algebra so(3): now
# [Lambda, Lambda] = 2 e1^e2^e3 is central but nonzero.  The pair is
# exact without being triangular, and D^2 is still scalar.
so3 = algebra(3, {(1, 2): (0, 0, 1), (1, 3): (0, -1, 0), (2, 3): (1, 0, 0)})
L2 = BivectorData(Multivector.monomial(3, (), (1, 2), one))
print("[Lambda, Lambda] =", so3.schouten(L2.Lambda, L2.Lambda))
P2 = exact_from_bivector(so3, L2)
print("label:", P2.label)
print("is_scalar:", dirac_square(P2).is_scalar)

# Both pairs satisfy the closed-form identities for generated duals:
# the boundary-star factorization and the modular-cocycle formula
# X0 = 2 boundary(Lambda) - Lambda#(xi0), and f~ = 0 on the nose.
for pair, biv in ((P, L), (P2, L2)):
    report = exact_identities(pair, biv)
    print(pair.label, "identities:", all(r.passed for r in report.records))

# Admissibility is genuinely weaker than Poisson but not vacuous: on the
# solvable algebra [e1, e2] = e2 + e3 the same Lambda = e1 ^ e2 fails.
solv = algebra(3, {(1, 2): (0, 1, 1)})
try:
    exact_from_bivector(solv, BivectorData(Multivector.monomial(3, (), (1, 2), one)))
except ConstructionError as err:
    print("rejected:", err)
