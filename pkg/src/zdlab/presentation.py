"""Reading and writing ring-presentation files.

A presentation file is line-oriented ``key = value`` text::

    # Z_4[r]/(2r, r^2 - 2)
    name = "Z4[r]/(2r,r^2-2)"
    orders = [4, 2]
    sc.2.2 = [2, 0]

Values are JSON literals.  Recognised keys are ``name``, ``orders``,
``gens`` (optional generator labels, first one the unity) and ``sc.i.j``
(1-based structure constants; the mirrored ``sc.j.i`` may be omitted).
Anything else is rejected.
"""

from __future__ import annotations

import json
import re
from pathlib import Path

from .rings import RingError, RingPresentation

_SC_KEY = re.compile(r"^sc\.(\d+)\.(\d+)$")


class PresentationSyntaxError(RingError):
    def __init__(self, message: str, line: int):
        super().__init__(f"line {line}: {message}")
        self.line = line


def parse_presentation(text: str) -> RingPresentation:
    fields: dict[str, tuple[object, int]] = {}
    structure: dict[tuple[int, int], tuple[int, ...]] = {}
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        key, sep, value = line.partition("=")
        if not sep:
            raise PresentationSyntaxError("expected 'key = value'", lineno)
        key = key.strip()
        try:
            parsed = json.loads(value.strip())
        except json.JSONDecodeError as exc:
            raise PresentationSyntaxError(f"bad value for {key!r}: {exc.msg}", lineno) from None
        m = _SC_KEY.match(key)
        if m:
            idx = (int(m.group(1)), int(m.group(2)))
            if idx in structure:
                raise PresentationSyntaxError(f"duplicate key {key!r}", lineno)
            structure[idx] = tuple(_int_list(parsed, key, lineno))
        elif key in ("name", "orders", "gens"):
            if key in fields:
                raise PresentationSyntaxError(f"duplicate key {key!r}", lineno)
            fields[key] = (parsed, lineno)
        else:
            raise PresentationSyntaxError(f"unknown key {key!r}", lineno)
    if "orders" not in fields:
        raise PresentationSyntaxError("missing required key 'orders'", 0)
    orders = tuple(_int_list(fields["orders"][0], "orders", fields["orders"][1]))
    name, at = fields.get("name", (None, 0))
    if name is not None and not isinstance(name, str):
        raise PresentationSyntaxError("'name' must be a string", at)
    gens, at = fields.get("gens", (None, 0))
    if gens is not None:
        if not isinstance(gens, list) or not all(isinstance(g, str) for g in gens):
            raise PresentationSyntaxError("'gens' must be a list of strings", at)
        gens = tuple(gens)
    return RingPresentation(orders=orders, structure=structure, name=name, gens=gens)


def load_presentation(path: str | Path) -> RingPresentation:
    return parse_presentation(Path(path).read_text(encoding="utf-8"))


def dump_presentation(p: RingPresentation) -> str:
    lines = []
    if p.name is not None:
        lines.append(f"name = {json.dumps(p.name)}")
    lines.append(f"orders = {json.dumps(list(p.orders))}")
    if p.gens is not None:
        lines.append(f"gens = {json.dumps(list(p.gens))}")
    for (i, j) in sorted(p.structure):
        lines.append(f"sc.{i}.{j} = {json.dumps(list(p.structure[(i, j)]))}")
    return "\n".join(lines) + "\n"


def _int_list(value, key, lineno) -> list[int]:
    if not isinstance(value, list) or not all(isinstance(v, int) and not isinstance(v, bool)
                                              for v in value):
        raise PresentationSyntaxError(f"{key!r} must be a list of integers", lineno)
    return value
