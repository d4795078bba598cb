"""Quivers with arrow bundles, concrete arrows and paths.

A bundle is a family of parallel arrows recorded once, with a multiplicity
that is a positive integer or :data:`OMEGA` (countably many).  A concrete
arrow is a pair ``(bundle_id, index)`` with ``index < multiplicity``, so a
bundle of multiplicity omega has infinitely many concrete arrows while every
path stays a finite object.

Paths are stored in traversal order: ``compose(p, q)`` walks ``p`` then ``q``.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from functools import cached_property, total_ordering
from typing import Iterable, Union

from .errors import InvalidPath, NotComposable, UninstantiatedOmega, UnknownBundle, UnknownVertex

Arrow = tuple[str, int]


@total_ordering
class _Omega:
    """The countable cardinal; absorbs addition and nonzero multiplication."""

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __add__(self, other):
        return self

    __radd__ = __add__

    def __mul__(self, other):
        return 0 if other == 0 else self

    __rmul__ = __mul__

    def __eq__(self, other):
        return other is self

    def __lt__(self, other):
        if other is self or isinstance(other, int):
            return False
        return NotImplemented

    def __hash__(self):
        return hash("omega")

    def __repr__(self):
        return "OMEGA"

    def __str__(self):
        return "omega"

    def __reduce__(self):
        return (_Omega, ())


OMEGA = _Omega()
ExtNat = Union[int, _Omega]


def is_finite(x: ExtNat) -> bool:
    return x is not OMEGA


@dataclass(frozen=True)
class Bundle:
    id: str
    source: str
    target: str
    multiplicity: ExtNat = 1

    def __post_init__(self):
        m = self.multiplicity
        if m is not OMEGA and (not isinstance(m, int) or m < 1):
            raise ValueError(f"bundle {self.id!r}: multiplicity must be a positive int or OMEGA, got {m!r}")

    def arrows(self) -> list[Arrow]:
        if self.multiplicity is OMEGA:
            raise UninstantiatedOmega(f"bundle {self.id!r} has multiplicity omega")
        return [(self.id, i) for i in range(self.multiplicity)]


@total_ordering
@dataclass(frozen=True)
class Path:
    """A path of a quiver; trivial when ``arrows`` is empty.

    ``vertices`` lists the ``len(arrows) + 1`` vertices visited.  Build paths
    through :meth:`Quiver.path` or :meth:`Quiver.trivial`, which validate
    composability against the quiver.
    """

    vertices: tuple[str, ...]
    arrows: tuple[Arrow, ...] = ()

    def __post_init__(self):
        if len(self.vertices) != len(self.arrows) + 1:
            raise InvalidPath("a path visits exactly one more vertex than it has arrows")

    @property
    def source(self) -> str:
        return self.vertices[0]

    @property
    def target(self) -> str:
        return self.vertices[-1]

    def __len__(self) -> int:
        return len(self.arrows)

    @property
    def length(self) -> int:
        return len(self.arrows)

    @property
    def is_trivial(self) -> bool:
        return not self.arrows

    @property
    def bundles(self) -> tuple[str, ...]:
        return tuple(b for b, _ in self.arrows)

    def segment(self, i: int, j: int) -> "Path":
        # a slice of a valid path is valid; skip __post_init__
        sub = object.__new__(Path)
        object.__setattr__(sub, "vertices", self.vertices[i : j + 1])
        object.__setattr__(sub, "arrows", self.arrows[i:j])
        return sub

    def __hash__(self) -> int:
        # paths are dict keys everywhere; hash the nested tuples once
        try:
            return self._hash
        except AttributeError:
            h = hash((self.vertices, self.arrows))
            object.__setattr__(self, "_hash", h)
            return h

    def sort_key(self):
        return (self.arrows, self.vertices[0])

    def __lt__(self, other: "Path"):
        if not isinstance(other, Path):
            return NotImplemented
        return self.sort_key() < other.sort_key()

    def __str__(self) -> str:
        if self.is_trivial:
            return f"e_{self.source}"
        return " ".join(f"{b}.{i}" for b, i in self.arrows)

    def __repr__(self) -> str:
        return f"Path({str(self)!r})"


_ARROW_TOKEN = re.compile(r"^(?P<bundle>[^\s.]+)(?:\.(?P<index>\d+))?$")


@dataclass(frozen=True)
class Quiver:
    vertices: tuple[str, ...]
    bundles: tuple[Bundle, ...] = ()
    name: str = field(default="", compare=False)

    def __post_init__(self):
        object.__setattr__(self, "vertices", tuple(self.vertices))
        object.__setattr__(self, "bundles", tuple(self.bundles))
        if len(set(self.vertices)) != len(self.vertices):
            raise ValueError("duplicate vertex identifiers")
        ids = [b.id for b in self.bundles]
        if len(set(ids)) != len(ids):
            raise ValueError("duplicate bundle identifiers")
        vs = set(self.vertices)
        for b in self.bundles:
            for end in (b.source, b.target):
                if end not in vs:
                    raise UnknownVertex(end)

    @classmethod
    def build(cls, vertices: Iterable[str], arrows: Iterable[tuple], name: str = "") -> "Quiver":
        """``arrows`` holds ``(id, source, target)`` or ``(id, source, target, multiplicity)``."""
        return cls(tuple(vertices), tuple(Bundle(*a) for a in arrows), name)

    @cached_property
    def _bundle_map(self) -> dict[str, Bundle]:
        return {b.id: b for b in self.bundles}

    def bundle(self, bid: str) -> Bundle:
        try:
            return self._bundle_map[bid]
        except KeyError:
            raise UnknownBundle(bid) from None

    def check_vertex(self, v: str) -> str:
        if v not in self._vertex_set:
            raise UnknownVertex(v)
        return v

    @cached_property
    def _vertex_set(self) -> frozenset[str]:
        return frozenset(self.vertices)

    @cached_property
    def sorted_vertices(self) -> tuple[str, ...]:
        return tuple(sorted(self.vertices))

    @cached_property
    def sorted_bundles(self) -> tuple[Bundle, ...]:
        return tuple(sorted(self.bundles, key=lambda b: b.id))

    def out_bundles(self, v: str) -> list[Bundle]:
        return [b for b in self.sorted_bundles if b.source == v]

    def in_bundles(self, v: str) -> list[Bundle]:
        return [b for b in self.sorted_bundles if b.target == v]

    @property
    def is_finite(self) -> bool:
        return all(b.multiplicity is not OMEGA for b in self.bundles)

    def concrete_arrows(self) -> list[Arrow]:
        """All concrete arrows in (bundle id, index) order; needs finite multiplicities."""
        return [a for b in self.sorted_bundles for a in b.arrows()]

    def arrow_source(self, a: Arrow) -> str:
        return self.bundle(a[0]).source

    def arrow_target(self, a: Arrow) -> str:
        return self.bundle(a[0]).target

    def check_arrow(self, a) -> Arrow:
        if isinstance(a, str):
            m = _ARROW_TOKEN.match(a)
            if not m:
                raise InvalidPath(f"bad arrow token {a!r}")
            a = (m["bundle"], int(m["index"] or 0))
        bid, idx = a
        b = self.bundle(bid)
        if not isinstance(idx, int) or idx < 0 or (b.multiplicity is not OMEGA and idx >= b.multiplicity):
            raise InvalidPath(f"index {idx!r} out of range for bundle {bid!r}")
        return (bid, idx)

    def trivial(self, v: str) -> Path:
        self.check_vertex(v)
        return Path((v,), ())

    def path(self, *arrows) -> Path:
        """Path through concrete arrows, given as ``(bundle, index)`` pairs or
        ``"bundle.index"`` tokens (a bare ``"bundle"`` means index 0).

        A single whitespace-separated string is also accepted.
        """
        if len(arrows) == 1 and isinstance(arrows[0], str) and " " in arrows[0].strip():
            arrows = tuple(arrows[0].split())
        if not arrows:
            raise InvalidPath("use Quiver.trivial for paths of length 0")
        conc = [self.check_arrow(a) for a in arrows]
        for a, b in zip(conc, conc[1:]):
            if self.arrow_target(a) != self.arrow_source(b):
                raise InvalidPath(f"arrows {a} and {b} do not compose")
        return Path((self.arrow_source(conc[0]),) + tuple(self.arrow_target(a) for a in conc), tuple(conc))

    def parse_path(self, text: str) -> Path:
        """Parse ``e_<v>`` or space-separated arrow tokens."""
        text = text.strip()
        if text.startswith("e_") and " " not in text and text[2:] in self._vertex_set:
            return self.trivial(text[2:])
        return self.path(*text.split())

    def is_acyclic(self) -> bool:
        import networkx as nx

        g = nx.DiGraph()
        g.add_nodes_from(self.vertices)
        g.add_edges_from((b.source, b.target) for b in self.bundles)
        return nx.is_directed_acyclic_graph(g)

    def instantiate(self, bounds: dict[str, int] | int) -> "Quiver":
        """Replace omega multiplicities by finite counts.

        ``bounds`` maps bundle ids to counts, or is one count for every omega bundle.
        """
        new = []
        for b in self.bundles:
            m = b.multiplicity
            if m is OMEGA:
                k = bounds if isinstance(bounds, int) else bounds.get(b.id)
                if k is not None:
                    m = k
            new.append(Bundle(b.id, b.source, b.target, m))
        return Quiver(self.vertices, tuple(new), self.name)


def compose(p: Path, q: Path) -> Path:
    """The path ``pq``: traverse ``p``, then ``q``."""
    if p.target != q.source:
        raise NotComposable(f"cannot compose {p} (ends at {p.target}) with {q} (starts at {q.source})")
    return Path(p.vertices + q.vertices[1:], p.arrows + q.arrows)


def factorizations(p: Path) -> list[tuple[Path, Path]]:
    """All ``(q, r)`` with ``compose(q, r) == p``, ordered by ``|q|``."""
    n = len(p)
    return [(p.segment(0, i), p.segment(i, n)) for i in range(n + 1)]


def subpaths(p: Path) -> set[Path]:
    """Every contiguous segment of ``p``, trivial ones included."""
    n = len(p)
    return {p.segment(i, j) for i in range(n + 1) for j in range(i, n + 1)}


# standard example quivers

def single_arrow() -> Quiver:
    """``a --x--> b``."""
    return Quiver.build(["a", "b"], [("x", "a", "b")], name="single_arrow")


def two_arrows() -> Quiver:
    """``a --x--> b --y--> c``."""
    return Quiver.build(["a", "b", "c"], [("x", "a", "b"), ("y", "b", "c")], name="two_arrows")


def loop() -> Quiver:
    """One vertex ``u`` with one loop ``x``."""
    return Quiver.build(["u"], [("x", "u", "u")], name="loop")


def thick(n: ExtNat = OMEGA) -> Quiver:
    """Vertices ``a``, ``b`` and ``n`` parallel arrows ``a -> b`` (one bundle ``x``)."""
    return Quiver.build(["a", "b"], [("x", "a", "b", n)], name="thick")
