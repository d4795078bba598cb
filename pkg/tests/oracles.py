"""Random instances and brute-force oracles shared by the test modules.

The oracles here never touch the shape automaton: they extend paths one
arrow at a time and filter with ``shape.contains``.
"""

from __future__ import annotations

import random
from collections import defaultdict
from fractions import Fraction

from pathcoalg.quiver import Bundle, Path, Quiver
from pathcoalg.shape import MonomialShape


def random_quiver(rng: random.Random, max_vertices=6, max_bundles=8, max_mult=2, acyclic=False, loops=True) -> Quiver:
    nv = rng.randint(1 if not acyclic else 2, max_vertices)
    vs = [f"v{i}" for i in range(nv)]
    bundles = []
    for k in range(rng.randint(1, max_bundles)):
        s, t = rng.choice(vs), rng.choice(vs)
        if acyclic:
            i, j = sorted((vs.index(s), vs.index(t)))
            if i == j:
                continue
            s, t = vs[i], vs[j]
        elif s == t and not loops:
            continue
        bundles.append(Bundle(f"b{k}", s, t, rng.randint(1, max_mult)))
    if not bundles:
        bundles.append(Bundle("b0", vs[0], vs[-1], 1))
    return Quiver(tuple(vs), tuple(bundles))


def random_walk(rng: random.Random, q: Quiver, length: int, concrete: bool):
    starts = [b for b in q.bundles]
    b = rng.choice(starts)
    walk = [b]
    while len(walk) < length:
        nxt = q.out_bundles(walk[-1].target)
        if not nxt:
            break
        walk.append(rng.choice(nxt))
    if concrete:
        return q.path(*[(x.id, rng.randrange(x.multiplicity)) for x in walk])
    return tuple(x.id for x in walk)


def random_shape(rng: random.Random, q: Quiver, mode: str | None = None) -> MonomialShape:
    mode = mode or rng.choice(["full", "forbid", "forbid", "generators"])
    if mode == "full":
        return MonomialShape.full(q)
    if mode == "forbid":
        fs = {random_walk(rng, q, rng.randint(1, 3), False) for _ in range(rng.randint(1, 3))}
        return MonomialShape.forbid(q, fs)
    gens = [random_walk(rng, q, rng.randint(1, 4), True) for _ in range(rng.randint(1, 3))]
    return MonomialShape.from_generators(q, gens)


def brute_paths_from(shape: MonomialShape, v: str, max_len: int) -> list[Path]:
    """Allowed paths from v of length <= max_len, by naive extension."""
    q = shape.quiver
    arrows = q.concrete_arrows()
    layer = [q.trivial(v)]
    out = list(layer)
    for _ in range(max_len):
        nxt = []
        for p in layer:
            for a in arrows:
                if q.arrow_source(a) == p.target:
                    ext = Path(p.vertices + (q.arrow_target(a),), p.arrows + (a,))
                    if shape.contains(ext):
                        nxt.append(ext)
        out.extend(nxt)
        layer = nxt
    return out


def window_counts(shape: MonomialShape, v: str, max_len: int) -> list[dict[str, int]]:
    """counts[L][w] = number of allowed v -> w paths of length L, for forbid/full
    shapes.  A path is allowed iff every window of width k (the longest
    forbidden factor) avoids F, so the last k-1 arrows are enough state."""
    q = shape.quiver
    k = max((len(f) for f in shape.forbidden), default=1)
    arrows = q.concrete_arrows()
    state: dict[tuple[str, tuple], int] = {(v, ()): 1}
    out = [{v: 1}]
    for _ in range(max_len):
        nxt: dict[tuple[str, tuple], int] = defaultdict(int)
        for (u, win), c in state.items():
            for a in arrows:
                if q.arrow_source(a) != u:
                    continue
                cand = win + (a,)
                t = q.arrow_target(a)
                verts = (q.arrow_source(cand[0]),) + tuple(q.arrow_target(x) for x in cand)
                if not shape.contains(Path(verts, cand)):
                    continue
                nxt[(t, cand[-(k - 1):] if k > 1 else ())] += c
        state = nxt
        row: dict[str, int] = defaultdict(int)
        for (u, _), c in state.items():
            row[u] += c
        out.append(dict(row))
    return out


def naive_poly_mul(a: list, b: list, n: int) -> list:
    out = [Fraction(0)] * (n + 1)
    for i, x in enumerate(a):
        for j, y in enumerate(b):
            if i + j <= n:
                out[i + j] += x * y
    return out


def random_comodule(rng: random.Random, shape: MonomialShape, side: str, max_dim: int = 6):
    """Direct sum of small simples, truncated injectives and their socle
    quotients, kept within ``max_dim``."""
    from pathcoalg.reps import direct_sum, injective_trunc, quotient_by_socle, simple

    q = shape.quiver
    pieces = []
    budget = max_dim
    for _ in range(rng.randint(1, 2)):
        v = rng.choice(q.sorted_vertices)
        if rng.random() < 0.4:
            piece = simple(shape, v, side)
        else:
            piece = injective_trunc(shape, v, side, rng.randint(1, 2))
            if rng.random() < 0.3 and piece.total_dim > 1:
                piece = quotient_by_socle(piece)
        if 0 < piece.total_dim <= budget:
            pieces.append(piece)
            budget -= piece.total_dim
    if not pieces:
        pieces.append(simple(shape, q.sorted_vertices[0], side))
    return direct_sum(pieces)
