"""
A rank-2 pair over a point, from brackets to the square scalar
==============================================================

The smallest interesting input: two Lie algebra structures on a
2-dimensional space and its dual, each determined by one bracket.
"""

from fractions import Fraction

from bialgebroid import (a_plus_b, dirac_apply, dirac_square, f_tilde,
                         f_tilde_star)

# [e1, e2] = a e1 + b e2 on the primal side, [eps1, eps2] = c eps1 + d eps2
# on the dual side.  Any rational a, b, c, d gives a valid pair.
a, b, c, d = 1, 2, 3, 4
P = a_plus_b(a, b, c, d)

# The two modular cocycles come out of the top-form Lie derivatives; over a
# point they reduce to the trace forms of the adjoint actions.
print("xi0 =", P.modular.xi0)
print("X0  =", P.modular.x0)

# The odd operator D = dstar - boundary + (X0 ^ . + iota_{xi0})/2 acts on
# the exterior algebra of the primal side.
one = P.scalar_mv(1)
print("D 1      =", dirac_apply(P, one))
print("D (D 1)  =", dirac_apply(P, dirac_apply(P, one)))

# D^2 is multiplication by the function f~, decided exactly on the probe
# family.  For this family f~ = -(bd + ac)/4, here -11/4.
report = dirac_square(P)
print("is_scalar =", report.is_scalar)
print("f~        =", report.f_tilde)
assert report.f_tilde.constant_value() == Fraction(-(b * d + a * c), 4)

# The mirror operator on the dual side squares to the same scalar.
assert f_tilde(P) == f_tilde_star(P)
print("mirror agrees: f~* =", f_tilde_star(P))
