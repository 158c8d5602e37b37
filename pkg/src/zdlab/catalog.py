"""Named rings appearing in the classification results for small zero-divisor graphs.

Rings that are not quotients of a single polynomial ring over Z_n are
shipped as presentation files under ``ringfiles/`` and built with
:func:`make_presented`; the rest come from the direct constructors.

Readings of ambiguous names:

* ``K4[r]/(r^2)`` is GF(4)[r]/(r^2), with GF(4) = Z_2[t]/(t^2+t+1).
* ``Z4[r]/(2r,r)^2`` is Z_4[r]/(2r, r^2).
* ``Z2 x Z4[X]/(x^2)`` has two entries: ``Z2x(Z2[x]/(x^2))`` and
  ``Z2x(Z4[x]/(x^2))``.
"""

from __future__ import annotations

from functools import lru_cache
from importlib import resources
from typing import Callable

from .presentation import parse_presentation
from .rings import (FiniteRing, RingError, make_presented, make_product,
                    make_quotient_poly, make_zn)


def _file(fname: str) -> Callable[[], FiniteRing]:
    def build() -> FiniteRing:
        text = resources.files("zdlab").joinpath("ringfiles", fname).read_text(encoding="utf-8")
        return make_presented(parse_presentation(text))
    return build


def _gf4() -> FiniteRing:
    return make_quotient_poly(make_zn(2), [1, 1, 1], var="t", descriptor="GF4")


def _z2x2() -> FiniteRing:
    return make_quotient_poly(make_zn(2), [0, 0, 1], var="x", descriptor="Z2[x]/(x^2)")


def _z4x2() -> FiniteRing:
    return make_quotient_poly(make_zn(4), [0, 0, 1], var="x", descriptor="Z4[x]/(x^2)")


def _gf4_r2() -> FiniteRing:
    F = _gf4()
    return make_quotient_poly(F, [F.zero, F.zero, F.one], descriptor="GF4[r]/(r^2)")


def _poly(n: int, modulus: list[int], name: str) -> Callable[[], FiniteRing]:
    return lambda: make_quotient_poly(make_zn(n), modulus, descriptor=name)


def _prod(*ns: int) -> Callable[[], FiniteRing]:
    return lambda: make_product([make_zn(n) for n in ns])


_ENTRIES: dict[str, tuple[str, Callable[[], FiniteRing]]] = {
    # path graphs
    "Z6": ("Z_6", lambda: make_zn(6)),
    "Z8": ("Z_8", lambda: make_zn(8)),
    "Z9": ("Z_9", lambda: make_zn(9)),
    "Z2xZ2": ("Z_2 x Z_2, componentwise", _prod(2, 2)),
    "Z3[r]/(r^2)": ("Z_3[r]/(r^2), basis {1, r}", _poly(3, [0, 0, 1], "Z3[r]/(r^2)")),
    "Z2[r]/(r^3)": ("Z_2[r]/(r^3), basis {1, r, r^2}", _poly(2, [0, 0, 0, 1], "Z2[r]/(r^3)")),
    "Z4[r]/(2r,r^2-2)": ("orders (4,2), r^2 = 2", _file("z4_2r_r2-2.ring")),
    # cycles
    "Z3xZ3": ("Z_3 x Z_3, componentwise", _prod(3, 3)),
    "GF4[r]/(r^2)": ("GF(4)[r]/(r^2) as a tower over Z_2[t]/(t^2+t+1)", _gf4_r2),
    "Z4[r]/(r^2+r+1)": ("Z_4[r]/(r^2+r+1), basis {1, r}",
                        _poly(4, [1, 1, 1], "Z4[r]/(r^2+r+1)")),
    "Z4[r]/(2r,r^2)": ("orders (4,2), r^2 = 0", _file("z4_2r_r2.ring")),
    "Z2[r,s]/(r,s)^2": ("orders (2,2,2), all products of r, s vanish", _file("z2_rs_sq.ring")),
    # Mdim 3 examples
    "Z2xZ4": ("Z_2 x Z_4, componentwise", _prod(2, 4)),
    "Z2x(Z2[x]/(x^2))": ("Z_2 x (Z_2[x]/(x^2))", lambda: make_product([make_zn(2), _z2x2()])),
    "Z2x(Z4[x]/(x^2))": ("Z_2 x (Z_4[x]/(x^2))", lambda: make_product([make_zn(2), _z4x2()])),
    "Z2xZ2xZ2": ("Z_2 x Z_2 x Z_2, componentwise", _prod(2, 2, 2)),
    # cut vertex, no degree-one vertex
    "Z2[r,s]/(r^2,s^2-rs)": ("orders (2,2,2,2), basis {1,r,s,rs}, s^2 = rs",
                             _file("z2_r2_s2-rs.ring")),
    "Z4[r]/(r^2+2r)": ("Z_4[r]/(r^2+2r), basis {1, r}", _poly(4, [0, 2, 1], "Z4[r]/(r^2+2r)")),
    "Z4[r,s]/(r^2,s^2-rs,rs-2,2r,2s)": ("orders (4,2,2), rs = s^2 = 2",
                                        _file("z4_r2_s2-rs_rs-2.ring")),
    "Z8[r]/(2r,r^2+4)": ("orders (8,2), r^2 = 4", _file("z8_2r_r2+4.ring")),
    "Z2[r,s]/(r^2,s^2)": ("orders (2,2,2,2), basis {1,r,s,rs}", _file("z2_r2_s2.ring")),
    "Z4[r]/(r^2)": ("Z_4[r]/(r^2), basis {1, r}", _poly(4, [0, 0, 1], "Z4[r]/(r^2)")),
    "Z4[r,s]/(r^2,s^2,rs-2,2r,2s)": ("orders (4,2,2), rs = 2", _file("z4_r2_s2_rs-2.ring")),
    # building blocks
    "GF4": ("Z_2[t]/(t^2+t+1), the field with four elements", _gf4),
    "Z2[x]/(x^2)": ("Z_2[x]/(x^2)", _z2x2),
    "Z4[x]/(x^2)": ("Z_4[x]/(x^2)", _z4x2),
}

ALIASES = {
    "K4[r]/(r^2)": "GF4[r]/(r^2)",
    "Z4[r]/(2r,r)^2": "Z4[r]/(2r,r^2)",
    "Z2xZ2[x]/(x^2)": "Z2x(Z2[x]/(x^2))",
}

PATH_RINGS = ("Z6", "Z8", "Z9", "Z2xZ2", "Z3[r]/(r^2)", "Z2[r]/(r^3)", "Z4[r]/(2r,r^2-2)")
CYCLE_RINGS = ("Z3xZ3", "GF4[r]/(r^2)", "Z4[r]/(r^2+r+1)", "Z4[r]/(2r,r^2)", "Z2[r,s]/(r,s)^2")
MDIM3_RINGS = ("Z2xZ4", "Z2x(Z2[x]/(x^2))", "Z2xZ2xZ2")
MDIM3_ALT_RINGS = ("Z2x(Z4[x]/(x^2))",)
CUT_VERTEX_RINGS = ("Z2[r,s]/(r^2,s^2-rs)", "Z4[r]/(r^2+2r)", "Z4[r,s]/(r^2,s^2-rs,rs-2,2r,2s)",
           "Z8[r]/(2r,r^2+4)", "Z2[r,s]/(r^2,s^2)", "Z4[r]/(r^2)",
           "Z4[r,s]/(r^2,s^2,rs-2,2r,2s)")


def names() -> list[str]:
    return list(_ENTRIES)


def describe(name: str) -> str:
    return _ENTRIES[ALIASES.get(name, name)][0]


@lru_cache(maxsize=None)
def catalog(name: str) -> FiniteRing:
    key = ALIASES.get(name, name)
    if key not in _ENTRIES:
        raise RingError(f"unknown catalog ring {name!r}; known: {', '.join(_ENTRIES)}")
    R = _ENTRIES[key][1]()
    R.descriptor = key
    return R
