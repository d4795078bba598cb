"""Monomial shapes: subpath-closed path sets and their recognizers.

A shape fixes the set H of allowed paths of a quiver, and with it the
monomial subcoalgebra spanned by H.  Three presentations are supported:

* ``full``: every path;
* ``forbid``: paths avoiding a finite set of bundle-level factors (a factor
  forbids all of its index instantiations; a length-1 factor deletes a bundle);
* ``generators``: the subpath closure of a finite set of concrete paths.

Trivial paths are always allowed.
"""

from __future__ import annotations

import itertools
from collections import deque
from dataclasses import dataclass, field
from functools import cached_property
from typing import Hashable, Iterable

from .errors import InvalidPath, NotComposable
from .quiver import Arrow, ExtNat, Path, Quiver, subpaths

FULL = "full"
FORBID = "forbid"
GENERATORS = "generators"


def closure(quiver: Quiver, generators: Iterable[Path]) -> frozenset[Path]:
    """Smallest subpath-closed set containing ``generators`` and every trivial path."""
    out = {quiver.trivial(v) for v in quiver.vertices}
    for p in generators:
        out |= subpaths(p)
    return frozenset(out)


def _is_factor(needle: tuple, hay: tuple) -> bool:
    k = len(needle)
    return any(hay[i : i + k] == needle for i in range(len(hay) - k + 1))


@dataclass(frozen=True)
class Transition:
    target: int
    bundle: str
    index: int | None  # None: every index of the bundle
    weight: ExtNat


@dataclass(frozen=True)
class AllowedAutomaton:
    """Deterministic recognizer of H, one initial state per vertex.

    ``states[i]`` is ``(vertex, memory)``; every state is accepting.  Reading
    the arrows of a path from ``initial[source]`` succeeds iff the path is in
    H, and a run ends at a state whose vertex is the path's target.
    """

    states: tuple[tuple[str, Hashable], ...]
    initial: dict[str, int]
    transitions: tuple[tuple[Transition, ...], ...]

    def __len__(self) -> int:
        return len(self.states)

    def vertex(self, state: int) -> str:
        return self.states[state][0]

    def step(self, state: int, arrow: Arrow) -> int | None:
        bid, idx = arrow
        for t in self.transitions[state]:
            if t.bundle == bid and (t.index is None or t.index == idx):
                return t.target
        return None

    def run(self, path: Path) -> int | None:
        s = self.initial[path.source]
        for a in path.arrows:
            s = self.step(s, a)
            if s is None:
                return None
        return s

    def accepts(self, path: Path) -> bool:
        return self.run(path) is not None

    def edges(self) -> Iterable[tuple[int, Transition]]:
        for s, ts in enumerate(self.transitions):
            for t in ts:
                yield s, t


class _FactorAutomaton:
    """Aho-Corasick machine over bundle ids; terminal nodes end in a forbidden factor."""

    def __init__(self, factors: Iterable[tuple[str, ...]]):
        self.children: list[dict[str, int]] = [{}]
        self.word: list[tuple[str, ...]] = [()]
        self.terminal: list[bool] = [False]
        for f in factors:
            node = 0
            for b in f:
                nxt = self.children[node].get(b)
                if nxt is None:
                    nxt = len(self.children)
                    self.children[node][b] = nxt
                    self.children.append({})
                    self.word.append(self.word[node] + (b,))
                    self.terminal.append(False)
                node = nxt
            self.terminal[node] = True
        self.fail = [0] * len(self.children)
        queue = deque(self.children[0].values())
        while queue:
            node = queue.popleft()
            for b, child in self.children[node].items():
                f = self.fail[node]
                while f and b not in self.children[f]:
                    f = self.fail[f]
                cand = self.children[f].get(b, 0)
                self.fail[child] = cand if cand != child else 0
                self.terminal[child] = self.terminal[child] or self.terminal[self.fail[child]]
                queue.append(child)
        self._goto: dict[tuple[int, str], int] = {}

    def goto(self, node: int, b: str) -> int:
        key = (node, b)
        if key not in self._goto:
            n = node
            while n and b not in self.children[n]:
                n = self.fail[n]
            self._goto[key] = self.children[n].get(b, 0)
        return self._goto[key]


@dataclass(frozen=True)
class MonomialShape:
    quiver: Quiver
    mode: str = FULL
    forbidden: tuple[tuple[str, ...], ...] = ()
    generators: frozenset[Path] = field(default_factory=frozenset)

    def __post_init__(self):
        if self.mode not in (FULL, FORBID, GENERATORS):
            raise ValueError(f"unknown mode {self.mode!r}")
        q = self.quiver
        forb = tuple(sorted(set(tuple(f) for f in self.forbidden)))
        object.__setattr__(self, "forbidden", forb)
        for f in forb:
            if not f:
                raise InvalidPath("forbidden factors must have length >= 1")
            bs = [q.bundle(b) for b in f]
            for x, y in zip(bs, bs[1:]):
                if x.target != y.source:
                    raise NotComposable(f"forbidden factor {' '.join(f)}: {x.id} does not compose with {y.id}")
        gens = frozenset(self.generators)
        for p in gens:
            if p.is_trivial:
                q.trivial(p.source)
            elif q.path(*p.arrows) != p:
                raise InvalidPath(f"generator {p} is not a path of the quiver")
        object.__setattr__(self, "generators", gens)
        if self.mode != FORBID and forb:
            raise ValueError("forbidden factors only make sense in forbid mode")
        if self.mode != GENERATORS and gens:
            raise ValueError("generators only make sense in generators mode")

    @classmethod
    def full(cls, quiver: Quiver) -> "MonomialShape":
        return cls(quiver, FULL)

    @classmethod
    def forbid(cls, quiver: Quiver, factors: Iterable) -> "MonomialShape":
        """``factors`` are bundle-id sequences, or space-separated strings."""
        fs = [tuple(f.split()) if isinstance(f, str) else tuple(f) for f in factors]
        return cls(quiver, FORBID, tuple(fs))

    @classmethod
    def from_generators(cls, quiver: Quiver, paths: Iterable) -> "MonomialShape":
        ps = [p if isinstance(p, Path) else quiver.parse_path(p) for p in paths]
        return cls(quiver, GENERATORS, generators=frozenset(ps))

    def with_mode_full(self) -> "MonomialShape":
        return MonomialShape(self.quiver)

    def instantiate(self, bounds: dict[str, int] | int) -> "MonomialShape":
        return MonomialShape(self.quiver.instantiate(bounds), self.mode, self.forbidden, self.generators)

    @cached_property
    def elements(self) -> frozenset[Path]:
        """H itself; only available in generators mode, where it is finite."""
        if self.mode != GENERATORS:
            raise ValueError("H is only materialized in generators mode")
        return closure(self.quiver, self.generators)

    def contains(self, p: Path) -> bool:
        if p.is_trivial:
            return p.source in self.quiver.vertices
        if self.mode == FULL:
            return True
        if self.mode == FORBID:
            bs = p.bundles
            return not any(_is_factor(f, bs) for f in self.forbidden)
        return p in self.elements

    __contains__ = contains

    def __str__(self) -> str:
        if self.mode == FORBID:
            return f"forbid({'; '.join(' '.join(f) for f in self.forbidden)})"
        if self.mode == GENERATORS:
            return f"generators({'; '.join(str(p) for p in sorted(self.generators))})"
        return "full"

    @cached_property
    def minimal_forbidden_bundles(self) -> tuple[tuple[str, ...], ...]:
        """Forbidden factors not containing another forbidden factor properly."""
        fs = self.forbidden
        return tuple(f for f in fs if not any(g != f and _is_factor(g, f) for g in fs))

    def automaton(self) -> AllowedAutomaton:
        return self._automaton

    @cached_property
    def _automaton(self) -> AllowedAutomaton:
        if self.mode == GENERATORS:
            return self._trie_automaton()
        q = self.quiver
        ac = _FactorAutomaton(self.forbidden if self.mode == FORBID else ())
        index: dict[tuple[str, int], int] = {}
        states: list[tuple[str, int]] = []
        trans: list[list[Transition]] = []
        queue: deque[tuple[str, int]] = deque()

        def intern(st):
            if st not in index:
                index[st] = len(states)
                states.append(st)
                trans.append([])
                queue.append(st)
            return index[st]

        initial = {v: intern((v, 0)) for v in q.sorted_vertices}
        while queue:
            v, node = queue.popleft()
            me = index[(v, node)]
            for b in q.out_bundles(v):
                nxt = ac.goto(node, b.id)
                if ac.terminal[nxt]:
                    continue
                trans[me].append(Transition(intern((b.target, nxt)), b.id, None, b.multiplicity))
        labelled = tuple((v, ac.word[node]) for v, node in states)
        return AllowedAutomaton(labelled, initial, tuple(tuple(ts) for ts in trans))

    def _trie_automaton(self) -> AllowedAutomaton:
        elems = sorted(self.elements)
        index = {p: i for i, p in enumerate(elems)}
        trans: list[list[Transition]] = [[] for _ in elems]
        for p in elems:
            if p.arrows:
                parent = p.segment(0, len(p) - 1)
                bid, idx = p.arrows[-1]
                trans[index[parent]].append(Transition(index[p], bid, idx, 1))
        for ts in trans:
            ts.sort(key=lambda t: (t.bundle, t.index))
        initial = {v: index[self.quiver.trivial(v)] for v in self.quiver.sorted_vertices}
        states = tuple((p.target, p.arrows) for p in elems)
        return AllowedAutomaton(states, initial, tuple(tuple(ts) for ts in trans))

    def minimal_forbidden(self, arrows: Iterable[Arrow] | None = None) -> list[Path]:
        """Concrete paths outside H all of whose proper subpaths lie in H.

        Only paths built from ``arrows`` are returned (default: every concrete
        arrow, which requires finite multiplicities).  Every path outside H
        contains one of these as a factor.
        """
        q = self.quiver
        arrow_list = sorted(set(arrows)) if arrows is not None else q.concrete_arrows()
        if self.mode == FULL:
            return []
        by_bundle: dict[str, list[Arrow]] = {}
        for a in arrow_list:
            by_bundle.setdefault(a[0], []).append(a)
        out: list[Path] = []
        if self.mode == FORBID:
            for f in self.minimal_forbidden_bundles:
                for combo in itertools.product(*(by_bundle.get(b, []) for b in f)):
                    out.append(q.path(*combo))
            return sorted(out)
        allowed = set(arrow_list)
        elems = self.elements
        for a in arrow_list:
            p = q.path(a)
            if p not in elems:
                out.append(p)
        for u in elems:
            if not u.arrows or not all(a in allowed for a in u.arrows):
                continue
            tail = u.segment(1, len(u))
            for a in _arrows_out(q, u.target, allowed):
                ext = Path(u.vertices + (q.arrow_target(a),), u.arrows + (a,))
                if ext in elems:
                    continue
                tail_ext = Path(tail.vertices + (q.arrow_target(a),), tail.arrows + (a,))
                if tail_ext in elems:
                    out.append(ext)
        return sorted(out)


def _arrows_out(q: Quiver, v: str, allowed: set[Arrow]) -> list[Arrow]:
    return sorted(a for a in allowed if q.arrow_source(a) == v)
