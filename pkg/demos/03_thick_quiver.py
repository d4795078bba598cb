"""
Comodules over the thick arrow quiver
=====================================

n parallel arrows a -> b.  S is simple at a, T simple at b, E the injective
hull of S.  The exact sequence 0 -> S -> E -> T^n -> 0 gives
ext1(T, S) = hom(T, T^n) + ext1(T, E).
"""

from pathcoalg import MonomialShape, RIGHT, euler_pairing, ext1, hom, injective_trunc, loewy, sequence_check_thick, simple, socle, thick

shape = MonomialShape.full(thick(3))
S, T = simple(shape, "a"), simple(shape, "b")
E = injective_trunc(shape, "a", RIGHT)

print("dim E per vertex:", E.dims)
print("socle of E:", socle(E).dims)
print("Loewy layers of E:", loewy(E).layers)
print("hom(T,E) =", hom(T, E).dim)
print("ext1(T,S) =", ext1(shape, T, S).dim, " euler <T,S> =", euler_pairing(shape, T, S))
print("ext1(T,E) =", ext1(shape, T, E).dim, " euler <T,E> =", euler_pairing(shape, T, E))

# the same bookkeeping for several n
for n in range(1, 6):
    print(f"n={n}:", sequence_check_thick(n).summary())
