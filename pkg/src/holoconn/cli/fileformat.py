"""Connection files: line-oriented ``key = value`` sections.

Example::

    # a comment
    [connection elliptic-xi]
    vars = z, xi
    family = elliptic; f12 = "xi"; g22 = "0"; g12 = "0"
    report = flat, projective, killing
    point = "0", "0"
    order = 8
    window = 3
    format = machine

    [connection torus]
    G^1_11 = "1"
    G^1_22 = "1"; G^2_11 = "1"

Statements are separated by newlines or ``;``. Expressions are quoted and use
the expression grammar over the declared variables. A section is either a
family (``family = elliptic | translation | standard`` plus its parameters)
or an inline table of ``G^k_ij`` entries (1-based indices, missing entries
are 0, ``symmetric = true`` mirrors ``G^k_ij`` into ``G^k_ji``). Statements
before the first header form an implicit unnamed section.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field, replace

from ..connection import Connection
from ..errors import ArityError, HoloconnError, InputSyntaxError, ParseError, UnknownVariable
from ..expr import DEFAULT_NAMES, ChartPoint, Expr, parse_expr
from ..families import EllipticFamilyData, TranslationInvariantData, elliptic_family, translation_invariant

__all__ = [
    "ANALYSES", "FAMILY_PARAMETERS", "AnalysisRequest",
    "parse_batch", "parse_connection_file", "parse_point", "with_overrides",
]

ANALYSES = ("torsion", "curvature", "flat", "projective", "killing")
DEFAULT_ANALYSES = ("torsion", "curvature", "flat", "projective")

FAMILY_PARAMETERS = {
    "standard": (),
    "elliptic": ("f12", "g22", "g12"),
    "translation": ("G^1_11", "G^1_12", "G^1_22", "G^2_11", "G^2_12", "G^2_22"),
}

_HEADER = re.compile(r"^\[\s*connection(?:\s+([^\]\s][^\]]*?))?\s*\]$")
_KEY = re.compile(r"[A-Za-z_][A-Za-z0-9_]*(?:\^[12]_[12][12])?")
_GAMMA = re.compile(r"^G\^([12])_([12])([12])$")
_IDENT = re.compile(r"^[A-Za-z_][A-Za-z0-9_]*$")


@dataclass(frozen=True)
class AnalysisRequest:
    """One connection plus the analyses to run on it."""

    name: str
    variables: tuple[str, str]
    source: str  # "inline" or a family name
    parameters: tuple[tuple[str, Expr], ...]  # as written, in file order
    connection: Connection
    analyses: tuple[str, ...] = DEFAULT_ANALYSES
    point: ChartPoint | None = None
    order: int = 6
    window: int = 3
    output_format: str = "text"

    def validate(self) -> "AnalysisRequest":
        if "killing" in self.analyses:
            if self.point is None:
                raise ParseError(f"[{self.name}] killing analysis requires a base point")
            if self.order < 2:
                raise ParseError(f"[{self.name}] killing analysis requires order >= 2")
            if not 1 <= self.window <= self.order - 1:
                raise ParseError(f"[{self.name}] window must be between 1 and order - 1")
        if self.output_format not in ("text", "machine"):
            raise ParseError(f"unknown output format {self.output_format!r}")
        return self


@dataclass
class _Statement:
    key: str
    value: str
    line: int
    key_col: int
    value_col: int
    quoted: bool


@dataclass
class _Section:
    name: str | None
    line: int
    statements: list[_Statement] = field(default_factory=list)


def _split_statements(line: str, lineno: int) -> list[tuple[str, int]]:
    """Split on ``;`` outside quotes; returns (text, starting column) pairs."""
    parts, start, in_quote = [], 0, False
    for pos, ch in enumerate(line):
        if ch == '"':
            in_quote = not in_quote
        elif ch == "#" and not in_quote:
            line = line[:pos]
            break
        elif ch == ";" and not in_quote:
            parts.append((line[start:pos], start + 1))
            start = pos + 1
    if in_quote:
        raise InputSyntaxError("unterminated string", lineno, line.index('"') + 1)
    parts.append((line[start:], start + 1))
    return [(t, c) for t, c in parts if t.strip()]


def _parse_statement(text: str, col: int, lineno: int) -> _Statement:
    lead = len(text) - len(text.lstrip())
    body = text.strip()
    m = _KEY.match(body)
    if not m:
        raise InputSyntaxError(f"expected 'key = value', got {body!r}", lineno, col + lead)
    key = m.group(0)
    rest = body[m.end():]
    eq = len(rest) - len(rest.lstrip())
    if not rest.lstrip().startswith("="):
        raise InputSyntaxError(f"expected '=' after {key!r}", lineno, col + lead + m.end() + eq)
    after = rest.lstrip()[1:]
    vstart = col + lead + m.end() + eq + 1 + (len(after) - len(after.lstrip()))
    value = after.strip()
    if not value:
        raise InputSyntaxError(f"missing value for {key!r}", lineno, vstart)
    quoted = value.startswith('"')
    if quoted:
        if len(value) < 2 or not value.endswith('"') or value.count('"') != 2:
            raise InputSyntaxError("a quoted value must be a single string", lineno, vstart)
        return _Statement(key, value[1:-1], lineno, col + lead, vstart + 1, True)
    return _Statement(key, value, lineno, col + lead, vstart, False)


def _sections(text: str) -> list[_Section]:
    sections: list[_Section] = []
    current: _Section | None = None
    for lineno, raw in enumerate(text.splitlines(), start=1):
        stripped = raw.strip()
        if not stripped or stripped.startswith("#"):
            continue
        if stripped.startswith("["):
            m = _HEADER.match(stripped.split("#", 1)[0].strip())
            if not m:
                raise InputSyntaxError("malformed section header; expected '[connection NAME]'",
                                       lineno, raw.index("[") + 1)
            current = _Section(m.group(1), lineno)
            sections.append(current)
            continue
        if current is None:
            current = _Section(None, lineno)
            sections.append(current)
        for part, col in _split_statements(raw, lineno):
            current.statements.append(_parse_statement(part, col, lineno))
    if not sections:
        raise InputSyntaxError("no connection defined", 1, 1)
    return sections


def _expr(st: _Statement, names: tuple[str, str]) -> Expr:
    if not st.quoted:
        raise InputSyntaxError(f"value of {st.key!r} must be a quoted expression", st.line, st.value_col)
    try:
        return parse_expr(st.value, names)
    except ParseError as err:
        raise err.shifted(st.line, st.value_col - 1) from None


def _constant(st: _Statement, names) -> Expr:
    e = _expr(st, names)
    if not e.is_constant():
        raise InputSyntaxError(f"{st.key} must be a constant", st.line, st.value_col)
    return e


def _int(st: _Statement) -> int:
    if st.quoted or not st.value.isdigit():
        raise InputSyntaxError(f"{st.key} must be a non-negative integer", st.line, st.value_col)
    return int(st.value)


def _bool(st: _Statement) -> bool:
    v = st.value.lower()
    if st.quoted or v not in ("true", "false", "yes", "no"):
        raise InputSyntaxError(f"{st.key} must be true or false", st.line, st.value_col)
    return v in ("true", "yes")


def _word_list(st: _Statement) -> list[str]:
    if st.quoted:
        raise InputSyntaxError(f"{st.key} takes a bare comma-separated list", st.line, st.value_col)
    return [w.strip() for w in st.value.split(",")]


def parse_analyses(words, line=None, column=None) -> tuple[str, ...]:
    out = []
    for w in words:
        if w not in ANALYSES:
            raise InputSyntaxError(f"unknown analysis {w!r} (choose from {', '.join(ANALYSES)})", line, column)
        if w not in out:
            out.append(w)
    if not out:
        raise InputSyntaxError("empty analysis list", line, column)
    return tuple(a for a in ANALYSES if a in out)


def parse_point(text: str, names: tuple[str, str] = DEFAULT_NAMES) -> ChartPoint:
    """``"v1, v2"``: two constant expressions (e.g. ``0, 1/2`` or ``i, 0``)."""
    parts = text.split(",")
    if len(parts) != 2:
        raise InputSyntaxError("a point needs exactly two comma-separated coordinates")
    coords = []
    offset = 0
    for p in parts:
        e = parse_expr(p, names)
        if not e.is_constant():
            raise InputSyntaxError(f"point coordinate {p.strip()!r} is not constant", 1, offset + 1)
        coords.append(e.constant_value())
        offset += len(p) + 1
    return ChartPoint(*coords)


def _point(sts: list[_Statement], names) -> ChartPoint:
    if len(sts) == 1 and sts[0].quoted:
        st = sts[0]
        try:
            return parse_point(st.value, names)
        except ParseError as err:
            raise err.shifted(st.line, st.value_col - 1) from None
    raise InputSyntaxError("point must be written as point = \"v1, v2\"", sts[0].line, sts[0].value_col)


def _build(section: _Section, index: int) -> AnalysisRequest:
    name = section.name or f"connection-{index + 1}"
    by_key: dict[str, _Statement] = {}
    for st in section.statements:
        if st.key in by_key:
            raise InputSyntaxError(f"duplicate key {st.key!r}", st.line, st.key_col)
        by_key[st.key] = st

    names = DEFAULT_NAMES
    if "vars" in by_key:
        st = by_key.pop("vars")
        words = _word_list(st)
        if len(words) != 2 or not all(_IDENT.match(w) for w in words) or words[0] == words[1]:
            raise InputSyntaxError("vars must declare two distinct identifiers", st.line, st.value_col)
        if "i" in words:
            raise InputSyntaxError("'i' is reserved for the imaginary unit", st.line, st.value_col)
        names = (words[0], words[1])

    options = {}
    if "report" in by_key:
        st = by_key.pop("report")
        options["analyses"] = parse_analyses(_word_list(st), st.line, st.value_col)
    if "point" in by_key:
        options["point"] = _point([by_key.pop("point")], names)
    if "order" in by_key:
        options["order"] = _int(by_key.pop("order"))
    if "window" in by_key:
        options["window"] = _int(by_key.pop("window"))
    if "format" in by_key:
        st = by_key.pop("format")
        if st.quoted or st.value not in ("text", "machine"):
            raise InputSyntaxError("format must be text or machine", st.line, st.value_col)
        options["output_format"] = st.value

    family_st = by_key.pop("family", None)
    if family_st is not None:
        family = family_st.value
        if family_st.quoted or family not in FAMILY_PARAMETERS:
            raise InputSyntaxError(f"unknown family {family!r} (choose from {', '.join(FAMILY_PARAMETERS)})",
                                   family_st.line, family_st.value_col)
        expected = FAMILY_PARAMETERS[family]
        extra = [k for k in by_key if k not in expected]
        if extra:
            st = by_key[extra[0]]
            raise ArityError(f"family {family!r} takes parameters ({', '.join(expected)}); unexpected {st.key!r}",
                             st.line, st.key_col)
        missing = [k for k in expected if k not in by_key]
        if missing:
            raise ArityError(f"family {family!r} is missing parameters: {', '.join(missing)}",
                             family_st.line, family_st.key_col)
        params = tuple((k, _expr(by_key[k], names)) for k in expected)
        values = dict(params)
        try:
            if family == "elliptic":
                conn = elliptic_family(EllipticFamilyData(values["f12"], values["g22"], values["g12"]), names)
            elif family == "translation":
                for k in expected:
                    _constant(by_key[k], names)
                d = TranslationInvariantData(*(values[k].constant_value() for k in expected))
                conn = translation_invariant(d, names)
            else:
                conn = Connection.standard(names)
        except HoloconnError as err:
            if isinstance(err, ParseError):
                raise
            raise InputSyntaxError(str(err), family_st.line, family_st.key_col) from None
        source = family
    else:
        symmetric = False
        if "symmetric" in by_key:
            symmetric = _bool(by_key.pop("symmetric"))
        entries = {}
        params = []
        for key, st in by_key.items():
            m = _GAMMA.match(key)
            if not m:
                raise InputSyntaxError(f"unknown key {key!r}", st.line, st.key_col)
            k, i, j = (int(x) - 1 for x in m.groups())
            e = _expr(st, names)
            entries[(k, i, j)] = e
            params.append((key, e))
        try:
            conn = Connection.from_entries(entries, names, symmetric=symmetric)
        except ValueError as err:
            raise InputSyntaxError(str(err), section.line, 1) from None
        params = tuple(params)
        source = "inline"

    req = AnalysisRequest(name, names, source, params, conn, **options)
    try:
        return req.validate()
    except ParseError as err:
        raise type(err)(err.message, section.line, None) from None


def parse_batch(text: str) -> list[AnalysisRequest]:
    """Every section of a connection file, in file order."""
    sections = _sections(text)
    requests = [_build(s, n) for n, s in enumerate(sections)]
    seen = set()
    for r, s in zip(requests, sections):
        if r.name in seen:
            raise InputSyntaxError(f"duplicate connection name {r.name!r}", s.line, 1)
        seen.add(r.name)
    return requests


def parse_connection_file(text: str) -> AnalysisRequest:
    """The single request in a one-section file."""
    requests = parse_batch(text)
    if len(requests) != 1:
        raise InputSyntaxError(f"expected one connection, found {len(requests)}; use parse_batch")
    return requests[0]


def with_overrides(req: AnalysisRequest, **changes) -> AnalysisRequest:
    changes = {k: v for k, v in changes.items() if v is not None}
    return replace(req, **changes).validate()
