"""
Truncated complete path algebra
===============================

Functionals on allowed paths form an algebra under convolution.  Working
modulo paths longer than N keeps everything finite.
"""

from fractions import Fraction

from pathcoalg import MonomialShape, convolve, evaluate, functional, invert, loop, unit

N = 6
lq = loop()


def show(f):
    return {str(p): str(c) for p, c in sorted(f.coeffs.items())}


shape = MonomialShape.full(lq)
eps = unit(shape, N)
x = functional(shape, lq.path("x"), N)

# on one loop this is truncated power series in x
print("x * x =", show(convolve(x, x)))

# 1 - x is invertible, its inverse is the geometric series
g = invert(eps - x)
print("(1 - x)^-1:", [str(g.coeffs[p]) for p in sorted(g.coeffs)])

# 1 - 2x has inverse sum 2^k x^k
g2 = invert(eps - Fraction(2) * x)
print("(1 - 2x)^-1:", [str(g2.coeffs[p]) for p in sorted(g2.coeffs)])

# evaluation pairs a functional with a path
print("g2 at x x x:", evaluate(g2, lq.path("x x x")))

# the forbidden factor x x kills x * x
forb = MonomialShape.forbid(lq, ["x x"])
xf = functional(forb, lq.path("x"), N)
print("x * x with xx forbidden:", show(convolve(xf, xf)))
