"""Zero-divisor graphs of rings and the survey over Z_n."""

from __future__ import annotations

import csv
import io
import json
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from math import comb
from typing import Iterable

import numpy as np

from .graph import FamilyClass, Graph, classify_family, diameter, girth
from .mdim import DEFAULT_BUDGET, MdimVerdict, mdim, verdict_value
from .rings import FiniteRing, make_gaussian_mod, make_zn, zero_divisors


def zd_graph(R: FiniteRing) -> Graph:
    """Graph on the nonzero zero divisors, x ~ y iff x != y and xy = 0.

    Vertices follow ascending element id; labels are element names.
    """
    L = np.array(zero_divisors(R).members, dtype=np.intp)
    if len(L) == 0:
        return Graph(0, [])
    mat = R.mul_table[np.ix_(L, L)] == R.zero
    np.fill_diagonal(mat, False)
    return Graph.from_matrix(mat, [R.name(int(x)) for x in L])


# -- number theory for the survey ------------------------------------------------

def factorize(n: int) -> dict[int, int]:
    out: dict[int, int] = {}
    p = 2
    while p * p <= n:
        while n % p == 0:
            out[p] = out.get(p, 0) + 1
            n //= p
        p += 1
    if n > 1:
        out[n] = out.get(n, 0) + 1
    return out


def totient(n: int) -> int:
    phi = n
    for p in factorize(n):
        phi = phi // p * (p - 1)
    return phi


def factorization_class(n: int) -> str:
    """Row of the Z_n table that n falls in.

    One of ``prime``, ``2^2``, ``3^2``, ``p^2`` (p >= 5), ``2^3``, ``p^k``
    (k >= 3, n != 8), ``2^2p`` (p odd), ``pq`` (distinct primes) or ``other``.
    """
    f = factorize(n)
    if n < 2:
        raise ValueError("n must be >= 2")
    exps = sorted(f.values())
    if exps == [1] and len(f) == 1:
        return "prime"
    if n == 4:
        return "2^2"
    if n == 9:
        return "3^2"
    if n == 8:
        return "2^3"
    if len(f) == 1:
        return "p^2" if exps == [2] else "p^k"
    if f.get(2) == 2 and len(f) == 2 and exps == [1, 2]:
        return "2^2p"
    if exps == [1, 1]:
        return "pq"
    return "other"


def expected_mdim(n: int) -> str:
    """Multiset dimension the Z_n table assigns to n (``undef`` for primes)."""
    cls = factorization_class(n)
    if cls == "prime":
        return "undef"
    if cls == "2^2":
        return "0"
    if cls in ("3^2", "2^3") or n == 6:
        return "1"
    return "inf"


def table1_expectation(n: int) -> dict[str, object]:
    """Columns the Z_n table states for n's row.

    Keys present are exactly the columns the table pins down for that row:
    ``V``, ``E``, ``diameter``, ``girth`` (None = no cycle), ``family`` and
    ``mdim``.  The edge count of the ``p^k`` row is not stated legibly and is
    left out; ``girth`` for ``pq`` is asserted only when both sides have
    at least two vertices, and n = 6 is the path P_3.
    """
    cls = factorization_class(n)
    f = factorize(n)
    exp: dict[str, object] = {"mdim": expected_mdim(n)}
    if cls == "prime":
        exp.update(V=0, E=0, diameter=0, girth=None, family="Empty")
    elif cls == "2^2":
        exp.update(V=1, E=0, diameter=0, girth=None, family="SingleVertex")
    elif cls == "3^2":
        exp.update(V=2, E=1, diameter=1, girth=None, family="Path(2)")
    elif cls == "2^3":
        exp.update(V=3, E=2, diameter=2, girth=None, family="Path(3)")
    elif cls == "p^2":
        (p,) = f
        exp.update(V=p - 1, E=comb(p - 1, 2), diameter=1, girth=3, family=f"Complete({p - 1})")
    elif cls == "p^k":
        ((p, k),) = f.items()
        exp.update(V=p ** (k - 1) - 1, diameter=2, girth=3)
    elif cls == "2^2p":
        p = max(f)
        exp.update(V=2 * p + 1, E=4 * p - 4, diameter=3, girth=4)
    elif cls == "pq":
        p, q = sorted(f)
        exp.update(V=p + q - 2, E=(p - 1) * (q - 1), diameter=2)
        if n == 6:
            exp["family"] = "Path(3)"
        else:
            a, b = sorted((p - 1, q - 1))
            exp["family"] = str(FamilyClass("CompleteBipartite", (a, b), star=(a == 1)))
            if a >= 2:
                exp["girth"] = 4
    else:
        exp.update(diameter=2, girth=3)
    return exp


# -- survey ------------------------------------------------------------------------

@dataclass(frozen=True)
class SurveyRow:
    n: int
    cls: str
    V: int
    E: int
    diameter: int
    girth: int | None
    family: str
    verdict: MdimVerdict
    runtime: float
    kind: str = "zn"

    @property
    def mdim(self) -> str:
        return verdict_value(self.verdict)

    @property
    def status(self) -> str:
        if self.kind != "zn":
            return "n/a"
        return "match" if self.mdim == expected_mdim(self.n) else "MISMATCH"


SURVEY_KINDS = {"zn": make_zn, "gauss": make_gaussian_mod}


def survey_row(n: int, budget: int = DEFAULT_BUDGET, kind: str = "zn") -> SurveyRow:
    """One survey line for Z_n, or for Z_n[i] when ``kind`` is ``"gauss"``.

    Gaussian rows have no reference values, so their status is ``n/a``.
    """
    t0 = time.perf_counter()
    G = zd_graph(SURVEY_KINDS[kind](n))
    verdict = mdim(G, budget)
    # the empty graph gets diameter 0, as in the Z_n table's prime row
    diam = diameter(G) if G.n else 0
    return SurveyRow(n, factorization_class(n), G.n, G.edge_count, diam, girth(G),
                     str(classify_family(G)), verdict, time.perf_counter() - t0, kind)


def survey_zn(ns: Iterable[int], budget: int = DEFAULT_BUDGET, workers: int = 1,
              kind: str = "zn") -> list[SurveyRow]:
    ns = list(ns)
    if workers <= 1:
        return [survey_row(n, budget, kind) for n in ns]
    with ProcessPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(survey_row, ns, [budget] * len(ns), [kind] * len(ns)))


CSV_HEADER = ["n", "class", "V", "E", "diameter", "girth", "family", "mdim", "status"]


def _girth_text(g: int | None) -> str:
    return "none" if g is None else str(g)


def survey_csv(rows: Iterable[SurveyRow]) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(CSV_HEADER)
    for r in rows:
        w.writerow([r.n, r.cls, r.V, r.E, r.diameter, _girth_text(r.girth), r.family,
                    r.mdim, r.status])
    return buf.getvalue()


def survey_markdown(rows: Iterable[SurveyRow]) -> str:
    marks = {"inf": "∞", "undef": "undef†"}
    lines = ["| n | class | V | E | Diameter | Girth | Z(R) | Mdim(Z(R)) | status |",
             "|---|---|---|---|---|---|---|---|---|"]
    for r in rows:
        g = "Undefined" if r.girth is None else str(r.girth)
        lines.append(f"| {r.n} | {r.cls} | {r.V} | {r.E} | {r.diameter} | {g} | {r.family} "
                     f"| {marks.get(r.mdim, r.mdim)} | {r.status} |")
    lines.append("")
    lines.append("† empty graph: the ring is a field. Tables that use ∞ for this case list it so.")
    return "\n".join(lines) + "\n"


def survey_json(rows: Iterable[SurveyRow]) -> str:
    out = []
    for r in rows:
        out.append(json.dumps({"n": r.n, "class": r.cls, "V": r.V, "E": r.E,
                               "diameter": r.diameter, "girth": r.girth, "family": r.family,
                               "mdim": r.mdim, "status": r.status}))
    return "\n".join(out) + "\n"

