"""Parser for the ring-spec mini language used on the command line.

::

    spec    := "Zn:" INT
             | "gauss:" INT
             | "poly:" spec ":" INT ("," INT)*
             | "prod:" spec ("," spec)*
             | "catalog:" NAME
             | "file:" PATH

``poly`` coefficients are base-ring element ids, constant term first, and
must end in the base ring's one.  ``NAME`` is the longest catalog name (or
alias) at that position; ``PATH`` runs to the end of the input.
"""

from __future__ import annotations

from . import catalog as cat
from .presentation import load_presentation
from .rings import (MAX_ORDER, FiniteRing, make_gaussian_mod, make_presented, make_product,
                    make_quotient_poly, make_zn)


class SpecError(ValueError):
    def __init__(self, message: str, offset: int):
        super().__init__(f"at byte {offset}: {message}")
        self.offset = offset


class _Parser:
    def __init__(self, text: str, max_order: int):
        self.text = text
        self.pos = 0
        self.max_order = max_order

    def _byte(self, pos: int) -> int:
        return len(self.text[:pos].encode("utf-8"))

    def fail(self, message: str, pos: int | None = None):
        raise SpecError(message, self._byte(self.pos if pos is None else pos))

    def eat(self, token: str) -> bool:
        if self.text.startswith(token, self.pos):
            self.pos += len(token)
            return True
        return False

    def expect(self, token: str):
        if not self.eat(token):
            self.fail(f"expected {token!r}")

    def integer(self) -> int:
        start = self.pos
        while self.pos < len(self.text) and self.text[self.pos].isdigit():
            self.pos += 1
        if start == self.pos:
            self.fail("expected an integer")
        return int(self.text[start:self.pos])

    def int_list(self) -> list[int]:
        out = [self.integer()]
        while (self.text.startswith(",", self.pos) and self.pos + 1 < len(self.text)
               and self.text[self.pos + 1].isdigit()):
            self.pos += 1
            out.append(self.integer())
        return out

    def spec(self) -> FiniteRing:
        start = self.pos
        try:
            if self.eat("Zn:"):
                return make_zn(self.integer(), max_order=self.max_order)
            if self.eat("gauss:"):
                return make_gaussian_mod(self.integer(), max_order=self.max_order)
            if self.eat("poly:"):
                base = self.spec()
                self.expect(":")
                coeffs = self.int_list()
                return make_quotient_poly(base, coeffs, var=_fresh_var(base),
                                          max_order=self.max_order)
            if self.eat("prod:"):
                factors = [self.spec()]
                while self.eat(","):
                    factors.append(self.spec())
                return make_product(factors, max_order=self.max_order)
            if self.eat("catalog:"):
                return cat.catalog(self.catalog_name())
            if self.eat("file:"):
                path = self.text[self.pos:]
                self.pos = len(self.text)
                if not path:
                    self.fail("expected a path")
                return make_presented(load_presentation(path), max_order=self.max_order)
        except SpecError:
            raise
        except ValueError as exc:
            raise SpecError(str(exc), self._byte(start)) from exc
        self.fail("expected one of Zn:, gauss:, poly:, prod:, catalog:, file:")

    def catalog_name(self) -> str:
        rest = self.text[self.pos:]
        best = None
        for name in list(cat.names()) + list(cat.ALIASES):
            if rest.startswith(name) and (len(rest) == len(name) or rest[len(name)] in ",:"):
                if best is None or len(name) > len(best):
                    best = name
        if best is None:
            self.fail("unknown catalog name; run `zdlab catalog` for the list")
        self.pos += len(best)
        return best


def _fresh_var(base: FiniteRing) -> str:
    used = set("".join(base.names))
    return next((v for v in "rstuvwyz" if v not in used), "r")


def parse_ring_spec(text: str, max_order: int = MAX_ORDER) -> FiniteRing:
    p = _Parser(text.strip(), max_order)
    R = p.spec()
    if p.pos != len(p.text):
        p.fail("unexpected trailing input")
    return R
