"""Text input format, JSON helpers and DOT export.

Input files are line oriented; ``#`` starts a comment::

    vertex a
    vertex b
    arrow x : a -> b * omega        # multiplicity: integer, omega, or omitted (1)
    mode full                       # or: mode forbid x y  (one factor per line)
                                    # or: mode generators, then `path x.0 y.0` lines
    xdata b n=1 m=0 patterns: x; x y
    instantiate x=3                 # finite stand-in for an omega bundle

Syntax problems raise :class:`ParseError` (line, column); references to
unknown or incompatible objects raise :class:`SemanticError`.
"""

from __future__ import annotations

import json
import re
from dataclasses import dataclass, field
from fractions import Fraction
from importlib import resources

from .criteria import XEntry
from .errors import PathCoalgError
from .fields import Field
from .quiver import OMEGA, Bundle, Path, Quiver
from .shape import FORBID, FULL, GENERATORS, MonomialShape


class ParseError(PathCoalgError):
    def __init__(self, line: int, column: int, message: str):
        super().__init__(f"line {line}, column {column}: {message}")
        self.line, self.column, self.message = line, column, message


class SemanticError(PathCoalgError):
    def __init__(self, token: str, message: str, line: int | None = None):
        where = f"line {line}: " if line else ""
        super().__init__(f"{where}{message} ({token!r})")
        self.token, self.message, self.line = token, message, line


_TOKEN = re.compile(r"(?P<arrow>->)|(?P<sym>[:*=;])|(?P<word>[A-Za-z0-9_.]+)|(?P<bad>\S)")
_ID = re.compile(r"^[A-Za-z0-9_]+$")
_ARROW_REF = re.compile(r"^[A-Za-z0-9_]+(\.\d+)?$")


@dataclass
class _Tok:
    text: str
    col: int


class _Line:
    def __init__(self, lineno: int, text: str):
        self.lineno = lineno
        self.toks: list[_Tok] = []
        for m in _TOKEN.finditer(text):
            if m.lastgroup == "bad":
                raise ParseError(lineno, m.start() + 1, f"unexpected character {m.group()!r}")
            self.toks.append(_Tok(m.group(), m.start() + 1))
        self.pos = 0
        self.end_col = len(text.rstrip()) + 1

    def peek(self) -> _Tok | None:
        return self.toks[self.pos] if self.pos < len(self.toks) else None

    def take(self, what: str = "token") -> _Tok:
        t = self.peek()
        if t is None:
            raise ParseError(self.lineno, self.end_col, f"expected {what}, found end of line")
        self.pos += 1
        return t

    def expect(self, text: str) -> _Tok:
        t = self.take(repr(text))
        if t.text != text:
            raise ParseError(self.lineno, t.col, f"expected {text!r}, found {t.text!r}")
        return t

    def ident(self, what: str = "identifier") -> _Tok:
        t = self.take(what)
        if not _ID.match(t.text):
            raise ParseError(self.lineno, t.col, f"expected {what}, found {t.text!r}")
        return t

    def integer(self, what: str = "integer") -> _Tok:
        t = self.take(what)
        if not t.text.isdigit():
            raise ParseError(self.lineno, t.col, f"expected {what}, found {t.text!r}")
        return t

    def done(self):
        t = self.peek()
        if t is not None:
            raise ParseError(self.lineno, t.col, f"unexpected {t.text!r}")


@dataclass
class ShapeFile:
    quiver: Quiver
    mode: str = FULL
    forbidden: list[tuple[str, ...]] = field(default_factory=list)
    generators: list[Path] = field(default_factory=list)
    xdata: dict[str, XEntry] | None = None
    instantiate: dict[str, int] = field(default_factory=dict)

    def shape(self) -> MonomialShape:
        return MonomialShape(self.quiver, self.mode, tuple(self.forbidden), frozenset(self.generators))

    def instantiated_shape(self) -> MonomialShape:
        return self.shape().instantiate(self.instantiate) if self.instantiate else self.shape()


def parse(text: str) -> ShapeFile:
    raw = []  # (kind, line, payload)
    for lineno, line in enumerate(text.splitlines(), start=1):
        line = line.split("#", 1)[0]
        if not line.strip():
            continue
        ln = _Line(lineno, line)
        kw = ln.take("keyword")
        if kw.text == "vertex":
            v = ln.ident("vertex id")
            ln.done()
            raw.append(("vertex", lineno, v.text))
        elif kw.text == "arrow":
            aid = ln.ident("arrow id")
            ln.expect(":")
            src = ln.ident("source vertex")
            ln.expect("->")
            tgt = ln.ident("target vertex")
            mult: object = 1
            if ln.peek() is not None:
                ln.expect("*")
                t = ln.take("multiplicity")
                if t.text == "omega":
                    mult = OMEGA
                elif t.text.isdigit():
                    mult = int(t.text)
                else:
                    raise ParseError(lineno, t.col, f"expected integer or 'omega', found {t.text!r}")
            ln.done()
            raw.append(("arrow", lineno, (aid.text, src.text, tgt.text, mult)))
        elif kw.text == "mode":
            m = ln.ident("mode")
            if m.text in (FULL, GENERATORS):
                ln.done()
                raw.append(("mode", lineno, (m.text, None)))
            elif m.text == FORBID:
                factor = [ln.ident("bundle id").text]
                while ln.peek() is not None:
                    factor.append(ln.ident("bundle id").text)
                raw.append(("mode", lineno, (FORBID, tuple(factor))))
            else:
                raise ParseError(lineno, m.col, f"unknown mode {m.text!r} (full, forbid, generators)")
        elif kw.text == "path":
            toks = [ln.take("arrow")]
            while ln.peek() is not None:
                toks.append(ln.take("arrow"))
            for t in toks:
                if not _ARROW_REF.match(t.text):
                    raise ParseError(lineno, t.col, f"bad arrow reference {t.text!r}")
            raw.append(("path", lineno, [t.text for t in toks]))
        elif kw.text == "xdata":
            v = ln.ident("vertex id")
            nums: dict[str, int] = {}
            while ln.peek() is not None and ln.peek().text in ("n", "m"):
                key = ln.take()
                if key.text in nums:
                    raise ParseError(lineno, key.col, f"duplicate {key.text}=")
                ln.expect("=")
                nums[key.text] = int(ln.integer().text)
            if "n" not in nums:
                raise ParseError(lineno, v.col, "xdata needs n=<int>")
            pats: list[tuple[str, ...]] = []
            if ln.peek() is not None:
                ln.expect("patterns")
                ln.expect(":")
                cur: list[str] = []
                while ln.peek() is not None:
                    t = ln.take()
                    if t.text == ";":
                        if not cur:
                            raise ParseError(lineno, t.col, "empty pattern")
                        pats.append(tuple(cur))
                        cur = []
                    elif _ID.match(t.text):
                        cur.append(t.text)
                    else:
                        raise ParseError(lineno, t.col, f"bad pattern token {t.text!r}")
                if cur:
                    pats.append(tuple(cur))
            raw.append(("xdata", lineno, (v.text, XEntry(nums["n"], tuple(pats), nums.get("m")))))
        elif kw.text == "instantiate":
            b = ln.ident("bundle id")
            ln.expect("=")
            k = ln.integer("instantiation count")
            ln.done()
            raw.append(("instantiate", lineno, (b.text, int(k.text))))
        else:
            raise ParseError(lineno, kw.col, f"unknown keyword {kw.text!r}")
    return _resolve(raw)


def _resolve(raw) -> ShapeFile:
    vertices: list[str] = []
    for kind, line, v in raw:
        if kind == "vertex":
            if v in vertices:
                raise SemanticError(v, "duplicate vertex", line)
            vertices.append(v)
    bundles: list[Bundle] = []
    for kind, line, (aid, src, tgt, mult) in ((k, l, p) for k, l, p in raw if k == "arrow"):
        if any(b.id == aid for b in bundles):
            raise SemanticError(aid, "duplicate arrow id", line)
        for end in (src, tgt):
            if end not in vertices:
                raise SemanticError(end, "undeclared vertex", line)
        if mult == 0:
            raise SemanticError(aid, "multiplicity must be at least 1", line)
        bundles.append(Bundle(aid, src, tgt, mult))
    quiver = Quiver(tuple(vertices), tuple(bundles))
    ids = {b.id: b for b in bundles}

    sf = ShapeFile(quiver)
    mode = None
    for kind, line, payload in raw:
        if kind == "mode":
            m, factor = payload
            if mode is not None and (m != mode or m != FORBID):
                raise SemanticError(m, f"conflicting mode declaration (already {mode})", line)
            mode = m
            if factor is not None:
                for b in factor:
                    if b not in ids:
                        raise SemanticError(b, "unknown arrow in forbidden factor", line)
                for x, y in zip(factor, factor[1:]):
                    if ids[x].target != ids[y].source:
                        raise SemanticError(" ".join(factor), f"non-composable factor: {x} ends at {ids[x].target}, {y} starts at {ids[y].source}", line)
                sf.forbidden.append(factor)
        elif kind == "path":
            if mode != GENERATORS:
                raise SemanticError("path", "path lines require a preceding 'mode generators'", line)
            try:
                if len(payload) == 1 and payload[0].startswith("e_") and payload[0][2:] in vertices:
                    p = quiver.trivial(payload[0][2:])
                else:
                    p = quiver.path(*payload)
            except PathCoalgError as exc:
                raise SemanticError(" ".join(payload), str(exc), line) from None
            sf.generators.append(p)
        elif kind == "xdata":
            v, entry = payload
            if v not in vertices:
                raise SemanticError(v, "xdata for undeclared vertex", line)
            for pat in entry.patterns:
                for b in pat:
                    if b not in ids:
                        raise SemanticError(b, "unknown arrow in xdata pattern", line)
                for x, y in zip(pat, pat[1:]):
                    if ids[x].target != ids[y].source:
                        raise SemanticError(" ".join(pat), "non-composable xdata pattern", line)
            sf.xdata = sf.xdata or {}
            if v in sf.xdata:
                raise SemanticError(v, "duplicate xdata for vertex", line)
            sf.xdata[v] = entry
        elif kind == "instantiate":
            b, k = payload
            if b not in ids:
                raise SemanticError(b, "cannot instantiate unknown arrow", line)
            if ids[b].multiplicity is not OMEGA:
                raise SemanticError(b, "only omega bundles can be instantiated", line)
            if k < 1:
                raise SemanticError(b, "instantiation count must be at least 1", line)
            sf.instantiate[b] = k
    sf.mode = mode or FULL
    return sf


def load(path) -> ShapeFile:
    with open(path, encoding="utf-8") as fh:
        return parse(fh.read())


# ------------------------------------------------------------------ JSON

def quiver_to_dict(q: Quiver) -> dict:
    return {
        "vertices": list(q.sorted_vertices),
        "arrows": [
            {"id": b.id, "source": b.source, "target": b.target,
             "multiplicity": "omega" if b.multiplicity is OMEGA else b.multiplicity}
            for b in q.sorted_bundles
        ],
    }


def shape_mode_to_dict(shape: MonomialShape) -> dict:
    out: dict = {"kind": shape.mode}
    if shape.mode == FORBID:
        out["factors"] = [list(f) for f in shape.forbidden]
    if shape.mode == GENERATORS:
        out["generators"] = [str(p) for p in sorted(shape.generators)]
    return out


def report_schema() -> dict:
    return json.loads(resources.files("pathcoalg").joinpath("report.schema.json").read_text(encoding="utf-8"))


def dumps_report(rep) -> str:
    return json.dumps(rep.to_dict(), indent=2, sort_keys=True) + "\n"


# ------------------------------------------------------------------- DOT

def _dot_id(s: str) -> str:
    return '"' + s.replace("\\", "\\\\").replace('"', '\\"') + '"'


def to_dot(shape: MonomialShape) -> str:
    q = shape.quiver
    lines = ["digraph quiver {"]
    for v in q.sorted_vertices:
        lines.append(f"  {_dot_id(v)};")
    for b in q.sorted_bundles:
        label = b.id if b.multiplicity == 1 else f"{b.id} x{b.multiplicity}"
        lines.append(f"  {_dot_id(b.source)} -> {_dot_id(b.target)} [label={_dot_id(label)}];")
    if shape.mode == FORBID and shape.forbidden:
        text = "forbidden factors:\\l" + "".join(" ".join(f) + "\\l" for f in shape.forbidden)
        lines.append(f'  legend [shape=note, label="{text}"];')
    lines.append("}")
    return "\n".join(lines) + "\n"


# ------------------------------------------------ operand mini-languages

_TERM_SPLIT = re.compile(r"\s*([+-])\s*")


def parse_linear_combination(text: str, quiver: Quiver, field: Field) -> dict[Path, object]:
    """Parse ``1*e_a + 2*x.0 x.1 - 1/2*y.0`` into ``{path: scalar}``."""
    text = text.strip()
    if not text:
        raise ValueError("empty linear combination")
    parts = _TERM_SPLIT.split(text)
    if parts[0] == "":
        parts = parts[1:]
    else:
        parts = ["+"] + parts
    out: dict[Path, object] = {}
    for sign, term in zip(parts[::2], parts[1::2]):
        if "*" in term:
            coef_s, path_s = term.split("*", 1)
            coef = Fraction(coef_s.strip())
        else:
            coef, path_s = Fraction(1), term
        if sign == "-":
            coef = -coef
        p = quiver.parse_path(path_s)
        out[p] = out.get(p, field.zero) + field(coef)
    return {p: c for p, c in out.items() if c != 0}
