"""Truncated elements of the complete path (monomial) algebra.

The dual algebra C* of a monomial coalgebra consists of arbitrary families
``(alpha_p)`` indexed by allowed paths, multiplied by summing over
factorizations.  A :class:`TruncatedDual` of degree N stands for the coset
``f + C_N^perp``: only coefficients on paths of length <= N are kept, and
those are exactly what survive in ``C* / C_N^perp``.
"""

from __future__ import annotations

from collections import defaultdict
from typing import Mapping

from .errors import BeyondTruncation, FieldMismatch, NotAUnit, NotInShape, ShapeMismatch, TruncationTooSmall
from .fields import QQ, Field
from .quiver import Path, compose
from .shape import MonomialShape


class TruncatedDual:
    __slots__ = ("shape", "degree", "coeffs", "field")

    def __init__(self, shape: MonomialShape, degree: int, coeffs: Mapping[Path, object] = (), field: Field = QQ):
        if degree < 0:
            raise ValueError("truncation degree must be >= 0")
        self.shape = shape
        self.degree = degree
        self.field = field
        clean: dict[Path, object] = {}
        for p, c in dict(coeffs).items():
            if not shape.contains(p):
                raise NotInShape(f"{p} is not an allowed path")
            if len(p) > degree:
                continue
            c = field(c)
            if c != 0:
                clean[p] = c
        self.coeffs = clean

    def __getitem__(self, p: Path):
        return self.coeffs.get(p, self.field.zero)

    def __eq__(self, other) -> bool:
        if not isinstance(other, TruncatedDual):
            return NotImplemented
        return (self.shape, self.degree, self.field, self.coeffs) == (other.shape, other.degree, other.field, other.coeffs)

    def __hash__(self):
        return hash((self.degree, frozenset(self.coeffs.items())))

    def _check(self, other: "TruncatedDual"):
        if self.shape != other.shape:
            raise ShapeMismatch("operands live on different shapes")
        if self.field != other.field:
            raise FieldMismatch(f"{self.field.tag} vs {other.field.tag}")

    def __add__(self, other: "TruncatedDual") -> "TruncatedDual":
        self._check(other)
        out = defaultdict(lambda: self.field.zero, self.coeffs)
        for p, c in other.coeffs.items():
            out[p] += c
        return TruncatedDual(self.shape, min(self.degree, other.degree), out, self.field)

    def __neg__(self) -> "TruncatedDual":
        return TruncatedDual(self.shape, self.degree, {p: -c for p, c in self.coeffs.items()}, self.field)

    def __sub__(self, other: "TruncatedDual") -> "TruncatedDual":
        return self + (-other)

    def __rmul__(self, scalar) -> "TruncatedDual":
        s = self.field(scalar)
        return TruncatedDual(self.shape, self.degree, {p: s * c for p, c in self.coeffs.items()}, self.field)

    def __mul__(self, other):
        if isinstance(other, TruncatedDual):
            return convolve(self, other)
        return self.__rmul__(other)

    def truncate(self, degree: int) -> "TruncatedDual":
        return TruncatedDual(self.shape, min(degree, self.degree), self.coeffs, self.field)

    def in_cn_perp(self, n: int) -> bool:
        """True when every stored coefficient sits on a path longer than ``n``."""
        return all(len(p) > n for p in self.coeffs)

    def __repr__(self) -> str:
        inner = " + ".join(f"{c}*({p})*" for p, c in sorted(self.coeffs.items()))
        return f"TruncatedDual[N={self.degree}]({inner or '0'})"


def functional(shape: MonomialShape, p: Path, degree: int, field: Field = QQ) -> TruncatedDual:
    """The dual basis element ``p*`` (1 on ``p``, 0 elsewhere)."""
    if not shape.contains(p):
        raise NotInShape(f"{p} is not an allowed path")
    if len(p) > degree:
        raise TruncationTooSmall(f"|{p}| = {len(p)} exceeds truncation {degree}")
    return TruncatedDual(shape, degree, {p: 1}, field)


def unit(shape: MonomialShape, degree: int, field: Field = QQ) -> TruncatedDual:
    """The counit, i.e. the sum of all vertex idempotents."""
    q = shape.quiver
    return TruncatedDual(shape, degree, {q.trivial(v): 1 for v in q.vertices}, field)


def evaluate(f: TruncatedDual, v) -> object:
    """Pair ``f`` with a path, a PathVector or any ``{path: scalar}`` mapping."""
    items = [(v, 1)] if isinstance(v, Path) else dict(v).items()
    total = f.field.zero
    for p, c in items:
        if len(p) > f.degree:
            raise BeyondTruncation(f"|{p}| = {len(p)} exceeds truncation {f.degree}")
        total += f.field(c) * f[p]
    return total


def convolve(f: TruncatedDual, g: TruncatedDual) -> TruncatedDual:
    """Product in C*: the coefficient of s is the sum of f(p) g(q) over s = pq."""
    f._check(g)
    n = min(f.degree, g.degree)
    shape = f.shape
    by_source: dict[str, list[tuple[Path, object]]] = defaultdict(list)
    for q, c in g.coeffs.items():
        if len(q) <= n:
            by_source[q.source].append((q, c))
    out: dict[Path, object] = defaultdict(lambda: f.field.zero)
    for p, a in f.coeffs.items():
        if len(p) > n:
            continue
        for q, b in by_source.get(p.target, ()):
            if len(p) + len(q) > n:
                continue
            s = compose(p, q)
            if shape.contains(s):
                out[s] += a * b
    return TruncatedDual(shape, n, out, f.field)


def invert(f: TruncatedDual) -> TruncatedDual:
    """Two-sided inverse modulo C_N^perp.

    Writes f = d + r with d the vertex part and r supported on paths of
    length >= 1, then sums the Neumann series of -d^{-1} r, which vanishes
    past degree N.
    """
    q = f.shape.quiver
    dinv = {}
    for v in q.vertices:
        c = f[q.trivial(v)]
        if c == 0:
            raise NotAUnit(f"coefficient of e_{v} is zero")
        dinv[q.trivial(v)] = f.field.one / c
    d_inv = TruncatedDual(f.shape, f.degree, dinv, f.field)
    rest = TruncatedDual(f.shape, f.degree, {p: c for p, c in f.coeffs.items() if not p.is_trivial}, f.field)
    step = -convolve(d_inv, rest)
    term = unit(f.shape, f.degree, f.field)
    total = term
    for _ in range(f.degree):
        term = convolve(term, step)
        if not term.coeffs:
            break
        total = total + term
    return convolve(total, d_inv)
