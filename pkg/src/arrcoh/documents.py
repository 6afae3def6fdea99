"""JSON arrangement documents.

A document looks like::

    {
      "name": "triangle",
      "dimension": 2,
      "hyperplanes": [
        {"normal": ["1", "0"], "offset": "0"},
        {"normal": ["0", "1"], "offset": "0"},
        {"normal": ["1", "1"], "offset": "1"}
      ],
      "local_system": [-1, 1, 1]
    }

Coefficients are integer or ``"p/q"`` strings (bare JSON integers are also
accepted); JSON floats are rejected so no binary rounding can sneak in.
"""

from __future__ import annotations

import json
import re
from dataclasses import dataclass, field
from fractions import Fraction
from importlib import resources
from pathlib import Path
from typing import Optional

from .arrangement import Arrangement, Hyperplane
from .density import SignLocalSystem

_RATIONAL = re.compile(r"\s*([+-]?\d+)(?:\s*/\s*(\d+))?\s*$")


class DocumentError(ValueError):
    def __init__(self, message, line=None, source="<document>"):
        self.line = line
        self.source = source
        where = f"{source}:{line}" if line is not None else source
        super().__init__(f"{where}: {message}")


@dataclass
class ArrangementDocument:
    arrangement: Arrangement
    local_system: Optional[SignLocalSystem] = None
    name: str = ""
    description: str = ""
    extra: dict = field(default_factory=dict)

    @property
    def dimension(self):
        return self.arrangement.dimension

    def to_dict(self):
        out = {"name": self.name} if self.name else {}
        if self.description:
            out["description"] = self.description
        out["dimension"] = self.arrangement.dimension
        out["hyperplanes"] = [
            {"normal": [format_rational(a) for a in h.normal], "offset": format_rational(h.offset)}
            for h in self.arrangement.hyperplanes
        ]
        if self.local_system is not None:
            out["local_system"] = list(self.local_system.signs)
        return out


def parse_rational(value) -> Fraction:
    if isinstance(value, bool) or isinstance(value, float):
        raise ValueError(f"{value!r} is not an integer or 'p/q' string")
    if isinstance(value, int):
        return Fraction(value)
    if not isinstance(value, str):
        raise ValueError(f"{value!r} is not an integer or 'p/q' string")
    m = _RATIONAL.match(value)
    if not m:
        raise ValueError(f"{value!r} is not an integer or 'p/q' string")
    num, den = int(m.group(1)), int(m.group(2) or 1)
    if den == 0:
        raise ValueError(f"{value!r} has zero denominator")
    return Fraction(num, den)


def format_rational(q: Fraction) -> str:
    return str(q.numerator) if q.denominator == 1 else f"{q.numerator}/{q.denominator}"


def _line_of(text, pos):
    return text.count("\n", 0, pos) + 1


def _array_element_lines(text, key):
    """Line numbers of the elements of the top-level array stored under ``key``."""
    m = re.search(r'"%s"\s*:\s*\[' % re.escape(key), text)
    if not m:
        return []
    dec = json.JSONDecoder()
    pos = m.end()
    lines = []
    while True:
        while pos < len(text) and text[pos] in " \t\r\n,":
            pos += 1
        if pos >= len(text) or text[pos] == "]":
            return lines
        lines.append(_line_of(text, pos))
        try:
            _, pos = dec.raw_decode(text, pos)
        except json.JSONDecodeError:
            return lines


def parse_document(text: str, source: str = "<document>") -> ArrangementDocument:
    try:
        raw = json.loads(text)
    except json.JSONDecodeError as exc:
        raise DocumentError(f"invalid JSON: {exc.msg}", exc.lineno, source) from None
    if not isinstance(raw, dict):
        raise DocumentError("top level must be an object", 1, source)

    def key_line(key):
        m = re.search(r'"%s"\s*:' % re.escape(key), text)
        return _line_of(text, m.start()) if m else None

    n = raw.get("dimension")
    if not isinstance(n, int) or isinstance(n, bool) or n < 0:
        raise DocumentError("'dimension' must be a nonnegative integer", key_line("dimension") or 1, source)
    hs_raw = raw.get("hyperplanes")
    if not isinstance(hs_raw, list):
        raise DocumentError("'hyperplanes' must be a list", key_line("hyperplanes") or 1, source)
    lines = _array_element_lines(text, "hyperplanes")
    hyperplanes = []
    for k, entry in enumerate(hs_raw):
        line = lines[k] if k < len(lines) else key_line("hyperplanes")
        if not isinstance(entry, dict) or "normal" not in entry:
            raise DocumentError(f"hyperplane {k + 1}: expected an object with 'normal' and 'offset'", line, source)
        normal = entry["normal"]
        if not isinstance(normal, list) or len(normal) != n:
            raise DocumentError(f"hyperplane {k + 1}: normal must have {n} entries", line, source)
        try:
            a = tuple(parse_rational(x) for x in normal)
            c = parse_rational(entry.get("offset", "0"))
        except ValueError as exc:
            raise DocumentError(f"hyperplane {k + 1}: {exc}", line, source) from None
        if not any(a):
            raise DocumentError(f"hyperplane {k + 1}: normal is zero", line, source)
        for j, prev in enumerate(hyperplanes):
            h = Hyperplane(a, c)
            if h.is_same_as(prev):
                raise DocumentError(f"hyperplane {k + 1} coincides with hyperplane {j + 1}", line, source)
        hyperplanes.append(Hyperplane(a, c))
    arr = Arrangement(n, tuple(hyperplanes))

    ls = None
    if raw.get("local_system") is not None:
        signs = raw["local_system"]
        line = key_line("local_system")
        if not isinstance(signs, list) or any(s not in (1, -1) or isinstance(s, bool) for s in signs):
            raise DocumentError("'local_system' must be a list of +1/-1", line, source)
        if len(signs) != len(hyperplanes):
            raise DocumentError(f"'local_system' has {len(signs)} signs for {len(hyperplanes)} hyperplanes", line, source)
        ls = SignLocalSystem(tuple(signs))
    known = {"name", "description", "dimension", "hyperplanes", "local_system"}
    return ArrangementDocument(arr, ls, str(raw.get("name", "")), str(raw.get("description", "")),
                               {k: v for k, v in raw.items() if k not in known})


def load_document(path) -> ArrangementDocument:
    path = Path(path)
    try:
        text = path.read_text(encoding="utf-8")
    except OSError as exc:
        raise DocumentError(f"cannot read file: {exc.strerror}", None, str(path)) from None
    return parse_document(text, str(path))


def corpus_names() -> list[str]:
    files = resources.files("arrcoh").joinpath("corpus")
    return sorted(p.name[:-5] for p in files.iterdir() if p.name.endswith(".json"))


def load_corpus() -> dict[str, ArrangementDocument]:
    """The named example arrangements shipped with the package."""
    files = resources.files("arrcoh").joinpath("corpus")
    out = {}
    for name in corpus_names():
        text = files.joinpath(name + ".json").read_text(encoding="utf-8")
        out[name] = parse_document(text, f"corpus/{name}.json")
    return out
