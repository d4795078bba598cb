"""Coalgebra structure on the span of an allowed path set H."""

from __future__ import annotations

from collections import defaultdict
from typing import Iterable, Mapping

from .errors import NotInShape
from .fields import QQ, Field
from .paths import all_paths
from .quiver import Path, factorizations
from .shape import MonomialShape


class PathVector(dict):
    """Finite linear combination of allowed paths: ``{path: nonzero scalar}``."""

    def __init__(self, shape: MonomialShape, terms: Mapping[Path, object] | Iterable = (), field: Field = QQ):
        super().__init__()
        self.shape = shape
        self.field = field
        items = terms.items() if isinstance(terms, Mapping) else terms
        for p, c in items:
            if not shape.contains(p):
                raise NotInShape(f"{p} is not an allowed path")
            c = field(c) + self.get(p, field.zero)
            if c == 0:
                self.pop(p, None)
            else:
                self[p] = c

    @classmethod
    def basis(cls, shape: MonomialShape, p: Path, field: Field = QQ) -> "PathVector":
        return cls(shape, {p: 1}, field)

    def __add__(self, other: "PathVector") -> "PathVector":
        return PathVector(self.shape, list(self.items()) + list(other.items()), self.field)

    def __neg__(self) -> "PathVector":
        return PathVector(self.shape, {p: -c for p, c in self.items()}, self.field)

    def __sub__(self, other: "PathVector") -> "PathVector":
        return self + (-other)

    def __rmul__(self, scalar) -> "PathVector":
        s = self.field(scalar)
        return PathVector(self.shape, {p: s * c for p, c in self.items()}, self.field)

    def __repr__(self) -> str:
        inner = " + ".join(f"{c}*{p}" for p, c in sorted(self.items()))
        return f"PathVector({inner or '0'})"


def delta(shape: MonomialShape, p: Path, field: Field = QQ) -> list[tuple[Path, Path, object]]:
    """Comultiplication of a basis path: ``[(q, r, 1) for p = qr]``."""
    if not shape.contains(p):
        raise NotInShape(f"{p} is not an allowed path")
    return [(q, r, field.one) for q, r in factorizations(p)]


def delta_vector(v: PathVector) -> dict[tuple[Path, Path], object]:
    """Comultiplication extended linearly, as a ``{(q, r): scalar}`` tensor."""
    out: dict[tuple[Path, Path], object] = defaultdict(lambda: v.field.zero)
    for p, c in v.items():
        for q, r, one in delta(v.shape, p, v.field):
            out[q, r] += c * one
    return {k: c for k, c in out.items() if c != 0}


def counit(p: Path, field: Field = QQ):
    return field.one if p.is_trivial else field.zero


def counit_vector(v: PathVector):
    return sum((c for p, c in v.items() if p.is_trivial), v.field.zero)


def coradical_layer(shape: MonomialShape, n: int, omega_bound: int | None = None) -> dict[tuple[str, str, int], list[Path]]:
    """Basis of the n-th coradical term, the span of allowed paths of length <= n,
    grouped by ``(source, target, length)``."""
    groups: dict[tuple[str, str, int], list[Path]] = defaultdict(list)
    for p in all_paths(shape, n, omega_bound):
        groups[p.source, p.target, len(p)].append(p)
    return dict(sorted(groups.items()))
