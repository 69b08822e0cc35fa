"""Reading arrangement files and writing/reading line-oriented reports.

Arrangement files are YAML (JSON is a subset)::

    dim: 2
    hyperplanes: [[-1, 1, -1/2], [1, 1, -1/2]]
    flag: {base: [0, 0], basis: [[1, 0], [0, 1]]}   # optional
    weights: ["2", "1/3"]                           # optional

Coefficients may be integers or ``p/q`` rationals, quoted or bare.
Every diagnostic carries the 1-based line of the offending node.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, List, Optional, Sequence, Tuple

import yaml

from .geometry import Arrangement, ArrangementError, Hyperplane, Point
from .flags import OrientedFlag


class InputError(ValueError):
    def __init__(self, message: str, line: Optional[int] = None, source: str = "<input>"):
        self.line = line
        self.source = source
        where = f"{source}:{line}" if line is not None else source
        super().__init__(f"{where}: {message}")


@dataclass
class Problem:
    arrangement: Arrangement
    flag: Optional[OrientedFlag] = None
    weights: Optional[Tuple[Fraction, ...]] = None


_RATIONAL = re.compile(r"^[+-]?\d+(?:/\d+)?$")


def _line(node) -> int:
    return node.start_mark.line + 1


def _rational(node, source) -> Fraction:
    if not isinstance(node, yaml.ScalarNode):
        raise InputError("expected a rational number", _line(node), source)
    text = node.value.strip()
    if not _RATIONAL.match(text):
        raise InputError(f"malformed rational {node.value!r}", _line(node), source)
    try:
        return Fraction(text)
    except ZeroDivisionError:
        raise InputError(f"zero denominator in {node.value!r}", _line(node), source) from None


def _seq(node, source, what) -> List:
    if not isinstance(node, yaml.SequenceNode):
        raise InputError(f"{what} must be a list", _line(node), source)
    return node.value


def _vector(node, source, length, what) -> Point:
    items = _seq(node, source, what)
    if len(items) != length:
        raise InputError(f"{what} has {len(items)} entries, expected {length}", _line(node), source)
    return tuple(_rational(x, source) for x in items)


def _mapping(node, source) -> dict:
    if not isinstance(node, yaml.MappingNode):
        raise InputError("expected a mapping", _line(node), source)
    out = {}
    for k, v in node.value:
        out[k.value] = v
    return out


def _flag(node, dim, source) -> OrientedFlag:
    m = _mapping(node, source)
    for key in ("base", "basis"):
        if key not in m:
            raise InputError(f"flag is missing {key!r}", _line(node), source)
    base = _vector(m["base"], source, dim, "flag base")
    rows = _seq(m["basis"], source, "flag basis")
    if len(rows) != dim:
        raise InputError(f"flag basis has {len(rows)} vectors, expected {dim}",
                         _line(m["basis"]), source)
    basis = tuple(_vector(r, source, dim, "flag basis vector") for r in rows)
    try:
        return OrientedFlag(base, basis)
    except ArrangementError as exc:
        raise InputError(str(exc), _line(node), source) from None


def parse_text(text: str, source: str = "<input>") -> Problem:
    try:
        root = yaml.compose(text)
    except yaml.YAMLError as exc:
        mark = getattr(exc, "problem_mark", None)
        raise InputError(f"not a valid document: {getattr(exc, 'problem', exc)}",
                         mark.line + 1 if mark else None, source) from None
    if root is None:
        raise InputError("empty document", None, source)
    doc = _mapping(root, source)
    if "dim" not in doc:
        raise InputError("missing 'dim'", _line(root), source)
    dnode = doc["dim"]
    if not (isinstance(dnode, yaml.ScalarNode) and re.fullmatch(r"\d+", dnode.value)) \
            or int(dnode.value) < 1:
        raise InputError(f"bad dimension {dnode.value!r}", _line(dnode), source)
    dim = int(dnode.value)
    if "hyperplanes" not in doc:
        raise InputError("missing 'hyperplanes'", _line(root), source)

    hyperplanes = []
    seen = {}
    for i, row in enumerate(_seq(doc["hyperplanes"], source, "hyperplanes"), start=1):
        coeffs = _vector(row, source, dim + 1, f"hyperplane {i}")
        if not any(coeffs[:dim]):
            raise InputError(f"hyperplane {i} has a zero normal", _line(row), source)
        h = Hyperplane(coeffs[:dim], coeffs[dim], i)
        if h.key() in seen:
            raise InputError(f"hyperplane {i} duplicates hyperplane {seen[h.key()]}",
                             _line(row), source)
        seen[h.key()] = i
        hyperplanes.append(h)
    arr = Arrangement(dim, tuple(hyperplanes))

    flag = _flag(doc["flag"], dim, source) if "flag" in doc else None
    weights = None
    if "weights" in doc:
        weights = _vector(doc["weights"], source, len(arr), "weights")
        for w, node in zip(weights, doc["weights"].value):
            if w == 0:
                raise InputError("weights must be nonzero", _line(node), source)
    return Problem(arr, flag, weights)


def parse_input(path) -> Problem:
    try:
        with open(path, encoding="utf-8") as fh:
            text = fh.read()
    except OSError as exc:
        raise InputError(exc.strerror or str(exc), None, str(path)) from None
    return parse_text(text, str(path))


def parse_flag_file(path, dim: int) -> OrientedFlag:
    """A flag file holds ``{base, basis}`` either at top level or under ``flag``."""
    source = str(path)
    try:
        with open(path, encoding="utf-8") as fh:
            root = yaml.compose(fh.read())
    except OSError as exc:
        raise InputError(exc.strerror or str(exc), None, source) from None
    except yaml.YAMLError as exc:
        raise InputError(f"not a valid document: {exc}", None, source) from None
    if root is None:
        raise InputError("empty document", None, source)
    doc = _mapping(root, source)
    return _flag(doc.get("flag", root), dim, source)


def format_rational(x: Fraction) -> str:
    return str(Fraction(x))


def format_vector(v: Iterable) -> str:
    return "[" + ", ".join(format_rational(x) for x in v) + "]"


def dump_problem(problem: Problem) -> str:
    """Serialize back into the input format (quoted rationals keep it valid JSON-ish YAML)."""
    arr = problem.arrangement
    rows = ", ".join(format_vector(list(h.normal) + [h.offset]) for h in arr)
    lines = [f"dim: {arr.dim}", f"hyperplanes: [{rows}]"]
    if problem.flag is not None:
        basis = ", ".join(format_vector(v) for v in problem.flag.basis)
        lines.append(f"flag: {{base: {format_vector(problem.flag.basepoint)}, basis: [{basis}]}}")
    if problem.weights is not None:
        lines.append(f"weights: {format_vector(problem.weights)}")
    return "\n".join(lines) + "\n"


# ---------------------------------------------------------------- reports

def format_signs(sv: Sequence[int]) -> str:
    return "".join("+" if s > 0 else "-" if s < 0 else "0" for s in sv)


def parse_signs(text: str) -> Tuple[int, ...]:
    table = {"+": 1, "-": -1, "0": 0}
    try:
        return tuple(table[c] for c in text.strip())
    except KeyError:
        raise ValueError(f"bad sign vector {text!r}") from None


def format_structured(pairs: Iterable[Tuple[str, str]]) -> str:
    out = []
    for key, value in pairs:
        if "\n" in key or ":" in key or "\n" in str(value):
            raise ValueError(f"structured key/value may not span lines: {key!r}")
        out.append(f"{key}: {value}")
    return "\n".join(out) + "\n"


def parse_structured(text: str) -> List[Tuple[str, str]]:
    pairs = []
    for n, line in enumerate(text.splitlines(), start=1):
        if not line.strip():
            continue
        key, sep, value = line.partition(": ")
        if not sep:
            key, sep, value = line.partition(":")
            if not sep:
                raise ValueError(f"line {n}: expected 'key: value'")
        pairs.append((key, value))
    return pairs
