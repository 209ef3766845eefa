"""Lattice and binomial-set file formats, and JSON reports.

Lattice files start with a header ``n m`` followed by ``m`` rows of ``n``
integers.  Binomial sets hold one ``plus | minus`` pair per line, each side a
comma- or space-separated exponent vector, or a JSON list of objects with
``plus``/``minus`` arrays.  Lines starting with ``#`` are ignored, and
anything after a ``#`` on a binomial line is treated as a comment.
"""

from __future__ import annotations

import dataclasses
import json
import math
from importlib import resources
from pathlib import Path

from .binomial import Binomial, monomial_str
from .ci import CIReport
from .errors import ParseError
from .graded import Fiber
from .lattice import Lattice, SmithInvariants, canonicalize
from .pure import DecompositionReport
from .synthesis import ClassDescriptor, FiberDescriptor, MarkovReport

SCHEMA = 1


def fixture_path(name: str) -> Path:
    return Path(str(resources.files("latmark") / "fixtures" / name))


def _ints(tokens, where: str) -> tuple[int, ...]:
    try:
        return tuple(int(t) for t in tokens)
    except ValueError:
        raise ParseError(f"{where}: non-integer token in {' '.join(tokens)!r}") from None


def _content_lines(text: str):
    for no, line in enumerate(text.splitlines(), 1):
        s = line.strip()
        if s and not s.startswith("#"):
            yield no, s


def parse_lattice(text: str) -> Lattice:
    lines = list(_content_lines(text))
    if not lines:
        raise ParseError("empty lattice file: expected a header 'n m'")
    no, head = lines[0]
    header = _ints(head.split(), f"line {no}")
    if len(header) != 2 or header[0] < 0 or header[1] < 0:
        raise ParseError(f"line {no}: header must be two nonnegative integers 'n m'")
    n, m = header
    rows = []
    for no, s in lines[1:]:
        row = _ints(s.replace(",", " ").split(), f"line {no}")
        if len(row) != n:
            raise ParseError(f"line {no}: expected {n} entries, got {len(row)}")
        rows.append(row)
    if len(rows) != m:
        raise ParseError(f"expected {m} rows, got {len(rows)}")
    return canonicalize(rows, n)


def read_lattice(path) -> Lattice:
    return parse_lattice(Path(path).read_text())


def _vector(s: str, where: str) -> tuple[int, ...]:
    return _ints(s.replace(",", " ").split(), where)


def _make(plus, minus, n, where) -> Binomial:
    if n is not None and (len(plus) != n or len(minus) != n):
        raise ParseError(f"{where}: exponent vectors must have length {n}")
    if len(plus) != len(minus):
        raise ParseError(f"{where}: the two sides have different lengths")
    if min(plus + minus, default=0) < 0:
        raise ParseError(f"{where}: exponents must be nonnegative")
    return Binomial(plus, minus)


def parse_binomials(text: str, n: int | None = None) -> list[Binomial]:
    stripped = text.strip()
    if stripped.startswith("[") or stripped.startswith("{"):
        try:
            data = json.loads(stripped)
        except json.JSONDecodeError as exc:
            raise ParseError(f"invalid JSON: {exc}") from None
        if isinstance(data, dict):
            data = data.get("binomials", [])
        out = []
        for k, item in enumerate(data):
            try:
                plus = tuple(int(x) for x in item["plus"])
                minus = tuple(int(x) for x in item["minus"])
            except (KeyError, TypeError, ValueError):
                raise ParseError(f"item {k}: expected integer arrays 'plus' and 'minus'") from None
            out.append(_make(plus, minus, n, f"item {k}"))
        return out
    out = []
    for no, s in _content_lines(text):
        body = s.split("#", 1)[0]
        if body.count("|") != 1:
            raise ParseError(f"line {no}: expected 'plus | minus'")
        left, right = body.split("|")
        where = f"line {no}"
        out.append(_make(_vector(left, where), _vector(right, where), n, where))
    return out


def read_binomials(path, n: int | None = None) -> list[Binomial]:
    return parse_binomials(Path(path).read_text(), n)


def format_vector(v) -> str:
    return ",".join(str(x) for x in v)


def format_binomial(B: Binomial) -> str:
    return f"{format_vector(B.plus)} | {format_vector(B.minus)}  # {B}"


def format_monomial(v) -> str:
    return f"{format_vector(v)}  # {monomial_str(v)}"


# --- JSON reports -----------------------------------------------------------

_TYPES = {
    cls.__name__: cls
    for cls in (
        Binomial,
        CIReport,
        ClassDescriptor,
        DecompositionReport,
        Fiber,
        FiberDescriptor,
        Lattice,
        MarkovReport,
        SmithInvariants,
    )
}


def _encode(x):
    if dataclasses.is_dataclass(x) and not isinstance(x, type):
        out = {"type": type(x).__name__}
        for f in dataclasses.fields(x):
            if f.name.startswith("_"):
                continue
            out[f.name] = _encode(getattr(x, f.name))
        return out
    if isinstance(x, (tuple, list)):
        return [_encode(y) for y in x]
    if isinstance(x, float) and math.isinf(x):
        return "infinite"
    return x


def _decode(x):
    if isinstance(x, dict):
        cls = _TYPES[x["type"]]
        return cls(**{k: _decode(v) for k, v in x.items() if k != "type"})
    if isinstance(x, list):
        return tuple(_decode(y) for y in x)
    if x == "infinite":
        return math.inf
    return x


def to_json(report, **extra) -> str:
    doc = {"schema": SCHEMA, "report": _encode(report)}
    doc.update({k: _encode(v) for k, v in extra.items()})
    return json.dumps(doc, indent=2)


def from_json(text: str):
    doc = json.loads(text)
    if doc.get("schema") != SCHEMA:
        raise ParseError(f"unsupported report schema {doc.get('schema')!r}")
    return _decode(doc["report"])
