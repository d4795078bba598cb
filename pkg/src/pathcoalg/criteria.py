"""Combinatorial certificates for direct coreflexivity and torsion Rat functors.

Three criteria are decided here, each keyed by a stable tag used in reports:

``t44``  finitely many allowed paths between every ordered pair of vertices.
         Holding certifies direct coreflexivity and that left and right
         rational modules are closed under extensions.
``t43``  bounded length of allowed paths between every pair.  Holding only
         yields the equivalence "directly coreflexive iff rational modules
         are closed under extensions".
``t41``  for full path coalgebras, a family (n(v), X(v), m(v)) bounding the
         arrows into v not covered by X(v).  Same conditional conclusion as
         ``t43`` (left version).

Conclusion flags are only ever set together with the tag that justifies them.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Mapping

from .errors import MalformedXData
from .paths import NOPATH, PairStats, arrow_count, max_len, pair_stats, path_count
from .quiver import OMEGA, Bundle, ExtNat, Quiver
from .shape import FORBID, FULL, MonomialShape

HOLDS = "holds"
FAILS = "fails"
NOT_APPLICABLE = "not_applicable"

FLAGS = ("directly_coreflexive", "torsion_rat_left", "torsion_rat_right", "equivalence_dc_iff_torsion", "coreflexive_given_coradical")


@dataclass(frozen=True)
class XEntry:
    n: int
    patterns: tuple[tuple[str, ...], ...] = ()
    m: int | None = None  # None: use the smallest bound that works


XData = Mapping[str, XEntry]


@dataclass(frozen=True)
class Verdict:
    status: str
    witness: tuple | None = None
    reason: str = ""
    details: dict = field(default_factory=dict, compare=False)

    @property
    def holds(self) -> bool:
        return self.status == HOLDS


def thm44(shape: MonomialShape) -> Verdict:
    for st in pair_stats(shape):
        if st.path_count is OMEGA:
            return Verdict(FAILS, (st.source, st.target), f"infinitely many allowed paths {st.source} -> {st.target}")
    return Verdict(HOLDS, reason="finitely many allowed paths between every pair of vertices")


def thm43(shape: MonomialShape) -> Verdict:
    for st in pair_stats(shape):
        if st.max_len is OMEGA:
            return Verdict(FAILS, (st.source, st.target), f"allowed paths {st.source} -> {st.target} have unbounded length")
    return Verdict(HOLDS, reason="allowed path lengths are bounded between every pair of vertices")


def _validate_xdata(quiver: Quiver, xdata: XData):
    for v, entry in xdata.items():
        if v not in quiver.vertices:
            raise MalformedXData(f"unknown vertex {v!r}")
        if entry.n < 0 or (entry.m is not None and entry.m < 0):
            raise MalformedXData(f"vertex {v!r}: n and m must be >= 0")
        for pat in entry.patterns:
            if not pat:
                raise MalformedXData(f"vertex {v!r}: empty pattern")
            try:
                bs = [quiver.bundle(b) for b in pat]
            except KeyError as exc:
                raise MalformedXData(f"vertex {v!r}: {exc}") from None
            for x, y in zip(bs, bs[1:]):
                if x.target != y.source:
                    raise MalformedXData(f"vertex {v!r}: pattern {' '.join(pat)} is not composable")


def uncovered_arrows(quiver: Quiver, v: str, patterns) -> list[Bundle]:
    """Bundles into ``v`` that are not the last bundle of any pattern.

    Patterns stand for every index instantiation, so a bundle is either
    covered entirely or not at all.
    """
    last = {p[-1] for p in patterns if p}
    return [b for b in quiver.in_bundles(v) if b.id not in last]


def thm41(shape: MonomialShape, xdata: XData) -> Verdict:
    if shape.mode != FULL:
        return Verdict(NOT_APPLICABLE, reason="stated for full path coalgebras only; use t43 for monomial shapes")
    q = shape.quiver
    _validate_xdata(q, xdata)
    details = {}
    for v in q.sorted_vertices:
        entry = xdata.get(v, XEntry(0, (), None))
        for pat in entry.patterns:
            if q.bundle(pat[-1]).target != v:
                return Verdict(FAILS, (v, " ".join(pat)), f"pattern {' '.join(pat)} does not end at {v}")
            if len(pat) > entry.n:
                return Verdict(FAILS, (v, " ".join(pat)), f"pattern {' '.join(pat)} is longer than n({v}) = {entry.n}")
        missing = uncovered_arrows(q, v, entry.patterns)
        sizes: dict[str, ExtNat] = {}
        for b in missing:
            sizes[b.source] = sizes.get(b.source, 0) + b.multiplicity
        details[v] = {"uncovered": [b.id for b in missing], "sizes": dict(sorted(sizes.items()))}
        for w, size in sorted(sizes.items()):
            if size is OMEGA:
                return Verdict(FAILS, (v, w), f"infinitely many uncovered arrows {w} -> {v}", details)
            if entry.m is not None and size > entry.m:
                return Verdict(FAILS, (v, w), f"{size} uncovered arrows {w} -> {v} exceed m({v}) = {entry.m}", details)
    return Verdict(HOLDS, reason="uncovered arrows into every vertex are boundedly many per source", details=details)


def propose_xdata(shape: MonomialShape, k: int = 1) -> dict[str, XEntry]:
    """Take X(v) to be every bundle sequence of length <= k ending at v.

    A convenience starting point only; no claim that it is the best choice.
    """
    q = shape.quiver
    out = {}
    for v in q.sorted_vertices:
        pats: list[tuple[str, ...]] = []
        frontier = [(b.id,) for b in q.in_bundles(v)]
        for _ in range(k):
            pats.extend(frontier)
            frontier = [(b.id,) + p for p in frontier for b in q.in_bundles(q.bundle(p[0]).source)]
        out[v] = XEntry(k, tuple(sorted(pats)), 0)
    return out


def ext_quiver(shape: MonomialShape) -> Quiver:
    """Same vertices; one bundle per original bundle with its allowed length-1 count."""
    q = shape.quiver
    bundles = []
    for b in q.sorted_bundles:
        if shape.mode == FULL:
            mult = b.multiplicity
        elif shape.mode == FORBID:
            mult = 0 if (b.id,) in shape.forbidden else b.multiplicity
        else:
            mult = sum(1 for p in shape.elements if len(p) == 1 and p.arrows[0][0] == b.id)
        if mult:
            bundles.append(Bundle(b.id, b.source, b.target, mult))
    return Quiver(q.vertices, tuple(bundles), q.name)


def local_finite(shape: MonomialShape) -> bool:
    eq = ext_quiver(shape)
    return all(arrow_count(eq, v, w) is not OMEGA for v in eq.vertices for w in eq.vertices)


@dataclass
class Report:
    shape: MonomialShape
    pairs: list[PairStats]
    t44: Verdict
    t43: Verdict
    t41: Verdict
    local_finite: bool
    ext_quiver: Quiver
    conclusions: dict[str, dict]
    notes: list[str]

    def to_dict(self) -> dict:
        from .io import quiver_to_dict, shape_mode_to_dict

        return {
            "quiver": quiver_to_dict(self.shape.quiver),
            "mode": shape_mode_to_dict(self.shape),
            "pairs": [
                {"v": p.source, "w": p.target, "path_count": ext_to_json(p.path_count), "max_len": ext_to_json(p.max_len)}
                for p in self.pairs
            ],
            "theorems": {"t44": verdict_to_dict(self.t44), "t43": verdict_to_dict(self.t43), "t41": verdict_to_dict(self.t41)},
            "local_finite": self.local_finite,
            "ext_quiver": quiver_to_dict(self.ext_quiver),
            "conclusions": self.conclusions,
            "notes": self.notes,
        }

    def to_text(self) -> str:
        lines = [f"quiver: {len(self.shape.quiver.vertices)} vertices, {len(self.shape.quiver.bundles)} bundles; mode {self.shape}"]
        lines.append("pairs (v -> w: path_count, max_len):")
        for p in self.pairs:
            lines.append(f"  {p.source} -> {p.target}: {ext_to_json(p.path_count)}, {ext_to_json(p.max_len)}")
        for tag in ("t44", "t43", "t41"):
            v = getattr(self, tag)
            wit = f" witness={'/'.join(map(str, v.witness))}" if v.witness else ""
            lines.append(f"{tag}: {v.status}{wit} ({v.reason})")
        lines.append(f"local_finite: {str(self.local_finite).lower()}")
        lines.append("conclusions:")
        for flag in FLAGS:
            c = self.conclusions[flag]
            just = f" [{c['justification']}]" if c["justification"] else ""
            lines.append(f"  {flag}: {str(c['value']).lower()}{just}")
        for n in self.notes:
            lines.append(f"note: {n}")
        return "\n".join(lines) + "\n"


def ext_to_json(x):
    if x is OMEGA:
        return "omega"
    if x is NOPATH:
        return "nopath"
    return int(x)


def verdict_to_dict(v: Verdict) -> dict:
    return {"status": v.status, "witness": list(v.witness) if v.witness else None, "reason": v.reason}


def report(shape: MonomialShape, xdata: XData | None = None) -> Report:
    v44, v43 = thm44(shape), thm43(shape)
    if xdata is None:
        v41 = Verdict(NOT_APPLICABLE, reason="no X(v) data supplied")
    else:
        v41 = thm41(shape, xdata)
    notes: list[str] = []
    concl = {f: {"value": False, "justification": None} for f in FLAGS}

    def set_flag(flag, why):
        if not concl[flag]["value"]:
            concl[flag] = {"value": True, "justification": why}

    if v44.holds:
        for f in ("directly_coreflexive", "torsion_rat_left", "torsion_rat_right"):
            set_flag(f, "t44")
        set_flag("coreflexive_given_coradical", "t44")
        notes.append("coreflexivity holds provided the coradical is coreflexive over the base field; the tool does not decide that")
    elif shape.mode != FULL:
        full = shape.with_mode_full()
        if thm44(full).holds:
            for f in ("directly_coreflexive", "torsion_rat_left", "torsion_rat_right"):
                set_flag(f, "subcoalgebra")
            notes.append("inherited from the full path coalgebra of the same quiver, which satisfies t44; the properties pass to subcoalgebras")
    if v43.holds:
        set_flag("equivalence_dc_iff_torsion", "t43")
    if v41.holds:
        set_flag("equivalence_dc_iff_torsion", "t41")
    if (v43.holds or v41.holds) and not v44.holds and not concl["directly_coreflexive"]["value"]:
        notes.append("only the equivalence 'directly coreflexive iff rational modules are closed under extensions' is certified; neither side is decided")
    if xdata is not None and shape.mode == FULL:
        notes.append("X(v) patterns denote every index instantiation, so X(v) may be infinite")
        missing = [v for v in shape.quiver.sorted_vertices if v not in xdata]
        if missing:
            notes.append(f"vertices without X data use X(v) empty and the least admissible m(v): {', '.join(missing)}")
    return Report(
        shape=shape,
        pairs=pair_stats(shape),
        t44=v44,
        t43=v43,
        t41=v41,
        local_finite=local_finite(shape),
        ext_quiver=ext_quiver(shape),
        conclusions=concl,
        notes=notes,
    )


def recheck_witness(shape: MonomialShape, tag: str, verdict: Verdict, xdata: XData | None = None) -> bool:
    """Re-query path statistics to confirm a Fails witness."""
    if verdict.status != FAILS:
        return True
    if tag == "t44":
        v, w = verdict.witness
        return path_count(shape, v, w) is OMEGA
    if tag == "t43":
        v, w = verdict.witness
        return max_len(shape, v, w) is OMEGA
    if tag == "t41":
        v, other = verdict.witness
        entry = (xdata or {}).get(v, XEntry(0, (), None))
        q = shape.quiver
        if other in q.vertices:
            size = sum((b.multiplicity for b in uncovered_arrows(q, v, entry.patterns) if b.source == other), 0)
            return size is OMEGA or (entry.m is not None and size > entry.m)
        pat = tuple(other.split())
        return q.bundle(pat[-1]).target != v or len(pat) > entry.n
    raise ValueError(tag)
