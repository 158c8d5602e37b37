"""Small finite commutative rings with unity, stored as dense operation tables.

Every ring is a pair of ``order x order`` integer tables over element ids
``0..order-1``.  Constructors fix a canonical enumeration of elements
(lexicographic in the coefficient vector, first coefficient most significant)
so ids, labels and everything derived from them are reproducible.

All constructors validate the ring axioms exhaustively before returning.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Sequence

import numpy as np

#: Constructors refuse rings larger than this unless told otherwise.
MAX_ORDER = 4096


class RingError(ValueError):
    """Raised for malformed constructor arguments."""


class AxiomViolation(RingError):
    """A table failed one of the commutative-ring-with-unity axioms."""

    def __init__(self, reason: str, witness: tuple[int, ...]):
        super().__init__(f"{reason} (witness {witness})")
        self.reason = reason
        self.witness = witness


@dataclass(frozen=True)
class AxiomCheck:
    name: str
    ok: bool
    witness: tuple[int, ...] | None = None


@dataclass(frozen=True)
class ValidationReport:
    checks: tuple[AxiomCheck, ...]

    @property
    def ok(self) -> bool:
        return all(c.ok for c in self.checks)

    @property
    def failures(self) -> list[AxiomCheck]:
        return [c for c in self.checks if not c.ok]

    def __str__(self) -> str:
        lines = []
        for c in self.checks:
            status = "pass" if c.ok else f"FAIL witness={c.witness}"
            lines.append(f"{c.name}: {status}")
        return "\n".join(lines)


class FiniteRing:
    """A fully enumerated finite commutative ring with unity.

    ``add_table[a, b]`` and ``mul_table[a, b]`` hold element ids.  Instances
    are immutable after construction (the tables are made read-only).
    """

    def __init__(
        self,
        add_table: np.ndarray,
        mul_table: np.ndarray,
        names: Sequence[str],
        zero: int,
        one: int,
        descriptor: str,
        *,
        validate: bool = True,
        max_order: int = MAX_ORDER,
    ):
        add_table = np.ascontiguousarray(add_table, dtype=np.int64)
        mul_table = np.ascontiguousarray(mul_table, dtype=np.int64)
        n = add_table.shape[0]
        if n > max_order:
            raise RingError(f"ring order {n} exceeds the supported maximum {max_order}")
        if add_table.shape != (n, n) or mul_table.shape != (n, n) or len(names) != n:
            raise RingError("operation tables and names must agree on the ring order")
        add_table.setflags(write=False)
        mul_table.setflags(write=False)
        self.add_table = add_table
        self.mul_table = mul_table
        self.names = tuple(names)
        self.zero = int(zero)
        self.one = int(one)
        self.descriptor = descriptor
        neg = np.full(n, -1, dtype=np.int64)
        rows, cols = np.nonzero(add_table == self.zero)
        neg[rows] = cols
        neg.setflags(write=False)
        self.neg_table = neg
        if validate:
            report = validate_ring_axioms(self)
            if not report.ok:
                bad = report.failures[0]
                raise AxiomViolation(f"{descriptor}: {bad.name} fails", bad.witness or ())

    @property
    def order(self) -> int:
        return self.add_table.shape[0]

    @property
    def elements(self) -> range:
        return range(self.order)

    def add(self, a: int, b: int) -> int:
        return int(self.add_table[a, b])

    def mul(self, a: int, b: int) -> int:
        return int(self.mul_table[a, b])

    def neg(self, a: int) -> int:
        return int(self.neg_table[a])

    def name(self, a: int) -> str:
        return self.names[a]

    def index(self, name: str) -> int:
        return self.names.index(name)

    def power(self, a: int, t: int) -> int:
        x = self.one
        for _ in range(t):
            x = self.mul(x, a)
        return x

    def units(self) -> list[int]:
        return [int(a) for a in np.nonzero((self.mul_table == self.one).any(axis=1))[0]]

    def __repr__(self) -> str:
        return f"FiniteRing({self.descriptor!r}, order={self.order})"


def validate_ring_axioms(R: FiniteRing) -> ValidationReport:
    """Check every axiom exhaustively; O(order^3) table lookups."""
    A, M = R.add_table, R.mul_table
    n = R.order
    z, e = R.zero, R.one
    checks: list[AxiomCheck] = []

    def first(mask: np.ndarray) -> tuple[int, ...] | None:
        hits = np.argwhere(mask)
        return tuple(int(v) for v in hits[0]) if len(hits) else None

    in_range = (A.min() >= 0 and A.max() < n and M.min() >= 0 and M.max() < n
                and 0 <= z < n and 0 <= e < n)
    checks.append(AxiomCheck("closure", bool(in_range), None if in_range else (0, 0, 0)))
    if not in_range:
        return ValidationReport(tuple(checks))

    w = first(A[z] != np.arange(n))
    checks.append(AxiomCheck("additive identity", w is None, None if w is None else (z, w[0], 0)))
    w = first(~(A == z).any(axis=1))
    checks.append(AxiomCheck("additive inverses", w is None, None if w is None else (w[0], 0, 0)))
    w = first(A != A.T)
    checks.append(AxiomCheck("additive commutativity", w is None, None if w is None else (w[0], w[1], 0)))
    checks.append(_triple_check("additive associativity", n,
                                lambda a: A[A[a]], lambda a: A[a][A]))
    w = first(M != M.T)
    checks.append(AxiomCheck("multiplicative commutativity", w is None,
                             None if w is None else (w[0], w[1], 0)))
    checks.append(_triple_check("distributivity", n,
                                lambda a: M[a][A], lambda a: A[M[a][:, None], M[a][None, :]]))
    checks.append(_triple_check("multiplicative associativity", n,
                                lambda a: M[M[a]], lambda a: M[a][M]))
    w = first(M[e] != np.arange(n))
    checks.append(AxiomCheck("multiplicative identity", w is None, None if w is None else (e, w[0], 0)))
    checks.append(AxiomCheck("zero != one", z != e, None if z != e else (z, e, 0)))
    return ValidationReport(tuple(checks))


def _triple_check(name, n, lhs, rhs) -> AxiomCheck:
    # lhs(a), rhs(a) are n x n arrays indexed by (b, c)
    for a in range(n):
        bad = np.argwhere(lhs(a) != rhs(a))
        if len(bad):
            b, c = bad[0]
            return AxiomCheck(name, False, (a, int(b), int(c)))
    return AxiomCheck(name, True)


# -- constructors ------------------------------------------------------------

def make_zn(n: int, *, max_order: int = MAX_ORDER) -> FiniteRing:
    if n < 2:
        raise RingError(f"Z_n needs n >= 2, got {n}")
    if n > max_order:
        raise RingError(f"ring order {n} exceeds the supported maximum {max_order}")
    x = np.arange(n)
    return FiniteRing((x[:, None] + x[None, :]) % n, (x[:, None] * x[None, :]) % n,
                      [str(i) for i in range(n)], 0, 1 % n, f"Z_{n}", max_order=max_order)


def make_product(factors: Sequence[FiniteRing], *, max_order: int = MAX_ORDER) -> FiniteRing:
    if not factors:
        raise RingError("direct product needs at least one factor")
    orders = [F.order for F in factors]
    total = int(np.prod(orders))
    if total > max_order:
        raise RingError(f"ring order {total} exceeds the supported maximum {max_order}")
    coords = np.array(list(itertools.product(*(range(d) for d in orders))), dtype=np.int64)
    weights = _radix_weights(orders)
    add = np.zeros((total, total), dtype=np.int64)
    mul = np.zeros((total, total), dtype=np.int64)
    for t, F in enumerate(factors):
        col = coords[:, t]
        add += F.add_table[col[:, None], col[None, :]] * weights[t]
        mul += F.mul_table[col[:, None], col[None, :]] * weights[t]
    names = ["(" + ",".join(F.names[c] for F, c in zip(factors, row)) + ")" for row in coords]
    zero = sum(F.zero * w for F, w in zip(factors, weights))
    one = sum(F.one * w for F, w in zip(factors, weights))
    descriptor = " x ".join(_wrap(F.descriptor) for F in factors)
    return FiniteRing(add, mul, names, zero, one, descriptor, max_order=max_order)


def make_quotient_poly(
    base: FiniteRing,
    modulus: Sequence[int],
    *,
    var: str = "r",
    descriptor: str | None = None,
    max_order: int = MAX_ORDER,
) -> FiniteRing:
    """``base[var] / (modulus)``.

    ``modulus`` lists base-ring element ids from the constant term upward and
    must be monic: its last entry is ``base.one``.
    """
    g = [int(c) for c in modulus]
    m = len(g) - 1
    if m < 1:
        raise RingError("modulus must have degree >= 1")
    if any(not 0 <= c < base.order for c in g):
        raise RingError("modulus coefficients must be element ids of the base ring")
    if g[-1] != base.one:
        raise RingError("modulus must be monic (leading coefficient equal to one)")
    b = base.order
    total = b ** m
    if total > max_order:
        raise RingError(f"ring order {total} exceeds the supported maximum {max_order}")

    A, M = base.add_table, base.mul_table
    coeffs = np.array(list(itertools.product(range(b), repeat=m)), dtype=np.int64)
    weights = _radix_weights([b] * m)

    add = np.zeros((total, total), dtype=np.int64)
    for i in range(m):
        add += A[coeffs[:, i][:, None], coeffs[:, i][None, :]] * weights[i]

    # schoolbook product, coefficient arrays indexed by (a, b)
    prod = [np.full((total, total), base.zero, dtype=np.int64) for _ in range(2 * m - 1)]
    for i in range(m):
        for j in range(m):
            term = M[coeffs[:, i][:, None], coeffs[:, j][None, :]]
            prod[i + j] = A[prod[i + j], term]
    # x^m = -(g_0 + ... + g_{m-1} x^{m-1})
    red = [base.neg(c) for c in g[:m]]
    for t in range(2 * m - 2, m - 1, -1):
        top = prod[t]
        for i in range(m):
            prod[t - m + i] = A[prod[t - m + i], M[top, red[i]]]
    mul = np.zeros((total, total), dtype=np.int64)
    for i in range(m):
        mul += prod[i] * weights[i]

    names = [_poly_name(base, row, var) for row in coeffs]
    zero = base.zero * sum(weights)
    one = base.one * weights[0] + base.zero * sum(weights[1:])
    if descriptor is None:
        descriptor = f"{_wrap(base.descriptor)}[{var}]/({_poly_name(base, g, var)})"
    return FiniteRing(add, mul, names, zero, one, descriptor, max_order=max_order)


def make_gaussian_mod(n: int, *, max_order: int = MAX_ORDER) -> FiniteRing:
    """Gaussian integers modulo n, i.e. Z_n[x]/(x^2 + 1)."""
    base = make_zn(n, max_order=max_order)
    return make_quotient_poly(base, [1, 0, 1], var="i", descriptor=f"Z_{n}[i]",
                              max_order=max_order)


@dataclass(frozen=True)
class RingPresentation:
    """Generators e_1..e_k of a ring's additive group with e_1 the unity.

    ``structure[(i, j)]`` (1-based, i <= j) is the coefficient vector of
    ``e_i * e_j``.  Missing products with i, j >= 2 are zero; products with
    e_1 default to the unity law.
    """

    orders: tuple[int, ...]
    structure: dict[tuple[int, int], tuple[int, ...]] = field(default_factory=dict)
    name: str | None = None
    gens: tuple[str, ...] | None = None

    def __post_init__(self):
        k = len(self.orders)
        if k < 1 or any(d < 1 for d in self.orders):
            raise RingError("presentation needs at least one generator with additive order >= 1")
        if self.gens is not None and len(self.gens) != k:
            raise RingError(f"expected {k} generator names, got {len(self.gens)}")
        for (i, j), vec in self.structure.items():
            if not (1 <= i <= k and 1 <= j <= k):
                raise RingError(f"structure constant index ({i},{j}) out of range 1..{k}")
            if len(vec) != k:
                raise RingError(f"structure constant ({i},{j}) must have {k} entries")
            for c, d in zip(vec, self.orders):
                if not 0 <= c < d:
                    raise RingError(f"structure constant ({i},{j}) entry {c} not in Z_{d}")
            mirror = self.structure.get((j, i))
            if mirror is not None and tuple(mirror) != tuple(vec):
                raise RingError(f"structure constants ({i},{j}) and ({j},{i}) disagree")

    @property
    def generator_count(self) -> int:
        return len(self.orders)

    def product(self, i: int, j: int) -> tuple[int, ...]:
        k = len(self.orders)
        vec = self.structure.get((i, j)) or self.structure.get((j, i))
        if vec is not None:
            return tuple(vec)
        if i == 1 or j == 1:
            other = j if i == 1 else i
            return tuple(1 % self.orders[t] if t == other - 1 else 0 for t in range(k))
        return (0,) * k

    def generator_names(self) -> tuple[str, ...]:
        if self.gens is not None:
            return self.gens
        extra = "rstuvwxyz"
        return ("1",) + tuple(extra[t] if t < len(extra) else f"e{t + 2}"
                              for t in range(len(self.orders) - 1))


def make_presented(p: RingPresentation, *, max_order: int = MAX_ORDER,
                   validate: bool = True) -> FiniteRing:
    orders = list(p.orders)
    k = len(orders)
    total = int(np.prod(orders))
    if total > max_order:
        raise RingError(f"ring order {total} exceeds the supported maximum {max_order}")
    coords = np.array(list(itertools.product(*(range(d) for d in orders))), dtype=np.int64)
    weights = _radix_weights(orders)
    mods = np.array(orders, dtype=np.int64)

    add_c = (coords[:, None, :] + coords[None, :, :]) % mods
    mul_c = np.zeros((total, total, k), dtype=np.int64)
    for i in range(k):
        for j in range(k):
            sc = np.array(p.product(i + 1, j + 1), dtype=np.int64)
            if not sc.any():
                continue
            outer = coords[:, i][:, None] * coords[:, j][None, :]
            mul_c += outer[:, :, None] * sc
    mul_c %= mods
    add = add_c @ weights
    mul = mul_c @ weights

    gens = p.generator_names()
    names = [_vector_name(row, gens) for row in coords]
    one_vec = [1 % orders[0]] + [0] * (k - 1)
    one = int(np.dot(one_vec, weights))
    descriptor = p.name or "presented" + str(tuple(orders))
    return FiniteRing(add, mul, names, 0, one, descriptor, max_order=max_order, validate=validate)


# -- zero divisors and nilpotents --------------------------------------------

@dataclass(frozen=True)
class ZeroDivisorSet:
    ring: FiniteRing
    members: tuple[int, ...]

    def __len__(self) -> int:
        return len(self.members)

    def __iter__(self):
        return iter(self.members)

    def __contains__(self, x) -> bool:
        return x in self.members


def zero_divisors(R: FiniteRing) -> ZeroDivisorSet:
    """Nonzero x with x*y = 0 for some nonzero y, in ascending id order."""
    kills = R.mul_table == R.zero
    kills[:, R.zero] = False
    kills[R.zero, :] = False
    return ZeroDivisorSet(R, tuple(int(x) for x in np.nonzero(kills.any(axis=1))[0]))


def is_integral_domain(R: FiniteRing) -> bool:
    return len(zero_divisors(R)) == 0


def is_nilpotent(R: FiniteRing, x: int) -> bool:
    y = x
    for _ in range(R.order):
        if y == R.zero:
            return True
        y = R.mul(y, x)
    return y == R.zero


def all_zd_nilpotent(R: FiniteRing) -> bool:
    return all(is_nilpotent(R, x) for x in zero_divisors(R))


def zd_square_zero(R: FiniteRing) -> bool:
    """True when x*y = 0 for all x, y in the zero-divisor set (x = y included)."""
    L = np.array(zero_divisors(R).members, dtype=np.int64)
    if len(L) == 0:
        return True
    return bool((R.mul_table[np.ix_(L, L)] == R.zero).all())


# -- helpers -----------------------------------------------------------------

def _radix_weights(orders: Sequence[int]) -> np.ndarray:
    w = np.ones(len(orders), dtype=np.int64)
    for t in range(len(orders) - 2, -1, -1):
        w[t] = w[t + 1] * orders[t + 1]
    return w


def _wrap(s: str) -> str:
    return f"({s})" if any(ch in s for ch in " +/") else s


def _poly_name(base: FiniteRing, coeffs, var: str) -> str:
    terms = []
    for power, c in enumerate(coeffs):
        c = int(c)
        if c == base.zero:
            continue
        mono = "" if power == 0 else (var if power == 1 else f"{var}^{power}")
        cname = base.names[c]
        if "+" in cname and mono:
            cname = f"({cname})"
        if not mono:
            terms.append(cname)
        elif c == base.one:
            terms.append(mono)
        else:
            terms.append(cname + mono)
    return "+".join(terms) if terms else base.names[base.zero]


def _vector_name(row, gens: Sequence[str]) -> str:
    terms = []
    for c, g in zip(row, gens):
        c = int(c)
        if c == 0:
            continue
        if g == "1":
            terms.append(str(c))
        else:
            terms.append(g if c == 1 else f"{c}{g}")
    return "+".join(terms) if terms else "0"
