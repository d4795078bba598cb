"""
Paths, allowed shapes and the path coalgebra
============================================

Build a small quiver, restrict it by forbidden factors and look at the
coalgebra structure on the surviving paths.
"""

from pathcoalg import MonomialShape, Quiver, coradical_layer, counit, delta, enumerate_paths, max_len, path_count

# two vertices, an arrow u -> v and a loop at u
q = Quiver.build(["u", "v"], [("x", "u", "u"), ("y", "u", "v")])
full = MonomialShape.full(q)
print("u -> v in the full shape:", path_count(full, "u", "v"), "paths")

# forbidding x x leaves finitely many paths
shape = MonomialShape.forbid(q, ["x x"])
for w in ("u", "v"):
    print(f"u -> {w}: count={path_count(shape, 'u', w)} longest={max_len(shape, 'u', w)}")

paths, _ = enumerate_paths(shape, "u", None, 5)
print("allowed paths from u:", ", ".join(map(str, paths)))

# comultiplication splits a path at every vertex it visits
p = q.path("x y")
for left, right, c in delta(shape, p):
    print(f"  {c} * {left} (x) {right}")

# the counit only sees trivial paths
print("counit:", {str(r): str(counit(r)) for r in paths})

# coradical filtration, grouped by (source, target, length)
for key, ps in coradical_layer(shape, 1).items():
    print(key, [str(x) for x in ps])
