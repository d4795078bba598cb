"""Path statistics on a shape: counts, length bounds, enumeration.

Counts and bounds are read off the shape's automaton.  A pair (v, w) has
infinitely many allowed paths iff some run from v's initial state to a
state at w passes through a cyclic state or an omega-weighted transition;
otherwise the runs form a DAG and counts/longest lengths come from a
topological sweep.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

import networkx as nx

from .errors import UninstantiatedOmega
from .quiver import OMEGA, ExtNat, Path, Quiver
from .shape import MonomialShape


class _NoPath:
    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self):
        return "NOPATH"

    def __str__(self):
        return "nopath"

    def __reduce__(self):
        return (_NoPath, ())


NOPATH = _NoPath()
"""``max_len`` of a pair with no allowed path at all."""


@dataclass(frozen=True)
class PairStats:
    source: str
    target: str
    path_count: ExtNat
    max_len: ExtNat | _NoPath


def arrow_count(quiver: Quiver, v: str, w: str) -> ExtNat:
    """Total multiplicity of the bundles ``v -> w``."""
    quiver.check_vertex(v)
    quiver.check_vertex(w)
    return sum((b.multiplicity for b in quiver.bundles if b.source == v and b.target == w), 0)


@dataclass(frozen=True)
class _Graph:
    g: nx.DiGraph
    cyclic: frozenset[int]
    omega_edges: tuple[tuple[int, int], ...]


@lru_cache(maxsize=256)
def _state_graph(shape: MonomialShape) -> _Graph:
    aut = shape.automaton()
    g = nx.DiGraph()
    g.add_nodes_from(range(len(aut)))
    omega = []
    for s, t in aut.edges():
        w = g.edges[s, t.target]["weight"] + t.weight if g.has_edge(s, t.target) else t.weight
        g.add_edge(s, t.target, weight=w)
        if t.weight is OMEGA:
            omega.append((s, t.target))
    cyclic = set()
    for comp in nx.strongly_connected_components(g):
        if len(comp) > 1 or any(g.has_edge(n, n) for n in comp):
            cyclic |= comp
    return _Graph(g, frozenset(cyclic), tuple(omega))


@lru_cache(maxsize=4096)
def _pair(shape: MonomialShape, v: str, w: str) -> PairStats:
    q = shape.quiver
    q.check_vertex(v)
    q.check_vertex(w)
    aut = shape.automaton()
    sg = _state_graph(shape)
    start = aut.initial[v]
    reach = nx.descendants(sg.g, start) | {start}
    ends = {s for s in reach if aut.vertex(s) == w}
    if not ends:
        return PairStats(v, w, 0, NOPATH)
    co = set(ends)
    for s in ends:
        co |= nx.ancestors(sg.g, s)
    live = reach & co
    if live & sg.cyclic:
        return PairStats(v, w, OMEGA, OMEGA)
    sub = sg.g.subgraph(live)
    count: dict[int, ExtNat] = {}
    longest: dict[int, int] = {}
    for s in nx.topological_sort(sub):
        c = 1 if s == start else 0
        ln = 0 if s == start else -1
        for p in sub.predecessors(s):
            c = c + count[p] * sub.edges[p, s]["weight"]
            if longest[p] >= 0:
                ln = max(ln, longest[p] + 1)
        count[s] = c
        longest[s] = ln
    total = sum((count[s] for s in ends), 0)
    return PairStats(v, w, total, max(longest[s] for s in ends))


def path_count(shape: MonomialShape, v: str, w: str) -> ExtNat:
    """Number of allowed paths ``v -> w`` (the trivial path counts when v == w)."""
    return _pair(shape, v, w).path_count


def max_len(shape: MonomialShape, v: str, w: str) -> ExtNat | _NoPath:
    """Longest allowed path ``v -> w``; OMEGA if unbounded, NOPATH if none exist."""
    return _pair(shape, v, w).max_len


def pair_stats(shape: MonomialShape) -> list[PairStats]:
    vs = shape.quiver.sorted_vertices
    return [_pair(shape, v, w) for v in vs for w in vs]


def enumerate_paths(
    shape: MonomialShape,
    v: str,
    w: str | None,
    max_length: int,
    max_count: int | None = None,
    omega_bound: int | None = None,
) -> tuple[list[Path], bool]:
    """Allowed paths from ``v`` (to ``w``, or anywhere when ``w`` is None) of
    length at most ``max_length``, in lexicographic arrow order.

    Returns ``(paths, truncated)``; ``truncated`` is set when ``max_count``
    cut the list short.  Omega bundles contribute indices ``0..omega_bound-1``
    and raise :class:`UninstantiatedOmega` when no bound is given.
    """
    q = shape.quiver
    q.check_vertex(v)
    if w is not None:
        q.check_vertex(w)
    aut = shape.automaton()
    out: list[Path] = []

    def arrows_of(t):
        if t.index is not None:
            return [(t.bundle, t.index)]
        m = t.weight
        if m is OMEGA:
            if omega_bound is None:
                raise UninstantiatedOmega(f"bundle {t.bundle!r} has multiplicity omega; pass omega_bound")
            m = omega_bound
        return [(t.bundle, i) for i in range(m)]

    # iterative DFS; children pushed in reverse so output is lexicographic
    stack: list[tuple[int, tuple[str, ...], tuple]] = [(aut.initial[v], (v,), ())]
    while stack:
        state, verts, arrows = stack.pop()
        if w is None or verts[-1] == w:
            if max_count is not None and len(out) >= max_count:
                return out, True
            out.append(Path(verts, arrows))
        if len(arrows) >= max_length:
            continue
        children = []
        for t in aut.transitions[state]:
            tv = aut.vertex(t.target)
            for a in arrows_of(t):
                children.append((t.target, verts + (tv,), arrows + (a,)))
        children.sort(key=lambda c: c[2][-1])
        stack.extend(reversed(children))
    return out, False


def all_paths(shape: MonomialShape, max_length: int, omega_bound: int | None = None) -> list[Path]:
    """Every allowed path of length at most ``max_length``, sorted."""
    out: list[Path] = []
    for v in shape.quiver.sorted_vertices:
        out.extend(enumerate_paths(shape, v, None, max_length, omega_bound=omega_bound)[0])
    return sorted(out)
