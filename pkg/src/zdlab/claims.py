"""Machine check of the published statements about zero-divisor graphs.

Every computed value comes from the solver, cross-checked against
:func:`brute_force_mdim` on small graphs.  A statement the computation
contradicts is reported as ``DISCREPANCY-DOCUMENTED``; ``FAIL`` is reserved
for the two computations disagreeing with each other (or with a proved
bound), which means a bug here rather than in the statement.
"""

from __future__ import annotations

import itertools
import json
from dataclasses import asdict, dataclass
from functools import lru_cache
from typing import Callable, Iterable, Iterator

from . import catalog as cat
from .graph import (Graph, classify_family, cut_vertices, diameter, girth, has_degree_one_vertex,
                    min_degree)
from .lab import expected_mdim, factorization_class, table1_expectation, zd_graph
from .mdim import (DEFAULT_BUDGET, Defined, Exhaustion, Infinite, MdimVerdict, TwinTriple,
                   Undefined, brute_force_mdim, is_m_resolving, lower_bound_f,
                   max_order_for_mdim3, mdim, verdict_value)
from .rings import (FiniteRing, all_zd_nilpotent, is_integral_domain, make_gaussian_mod,
                    make_product, make_zn, zd_square_zero, zero_divisors)

PASS = "PASS"
FAIL = "FAIL"
DISCREPANCY = "DISCREPANCY-DOCUMENTED"

#: graphs up to this order are re-solved by plain enumeration
CROSSCHECK_MAX = 12
SURVEY_RANGE = range(2, 61)


@dataclass(frozen=True)
class ClaimReport:
    claim: str
    instance: str
    expected: str
    computed: str
    status: str
    note: str = ""

    def to_json(self) -> str:
        return json.dumps(asdict(self), ensure_ascii=False)


# -- instances ----------------------------------------------------------------

@dataclass(frozen=True)
class Analysis:
    name: str
    ring: FiniteRing
    graph: Graph
    verdict: MdimVerdict
    brute: str | None
    consistent: bool

    @property
    def value(self) -> str:
        return verdict_value(self.verdict)

    @property
    def family(self) -> str:
        return str(classify_family(self.graph))

    @property
    def diameter(self) -> int:
        return diameter(self.graph) if self.graph.n else 0

    def proof(self) -> str:
        v = self.verdict
        G = self.graph
        if isinstance(v, Defined):
            return f"witness {{{', '.join(G.labels[i] for i in v.witness)}}}"
        if isinstance(v, Infinite) and isinstance(v.proof, TwinTriple):
            t = v.proof
            s = f"twin triple ({G.labels[t.u]}, {G.labels[t.v]}, {G.labels[t.w]})"
            if self.brute is not None:
                s += f"; exhaustion over {2 ** G.n - 1} subsets agrees"
            return s
        if isinstance(v, Infinite) and isinstance(v.proof, Exhaustion):
            return f"exhaustion over {v.proof.subsets_checked} subsets"
        if isinstance(v, Undefined):
            return "empty graph"
        return getattr(v, "note", "")


def analyse_ring(name: str, R: FiniteRing, budget: int = DEFAULT_BUDGET) -> Analysis:
    G = zd_graph(R)
    v = mdim(G, budget)
    brute = brute_force_mdim(G)[0] if G.n <= CROSSCHECK_MAX else None
    ok = brute is None or brute == verdict_value(v)
    if isinstance(v, Defined) and v.k > 0:
        ok = ok and is_m_resolving(G, v.witness)
    return Analysis(name, R, G, v, brute, ok)


@lru_cache(maxsize=None)
def analyse(name: str, budget: int = DEFAULT_BUDGET) -> Analysis:
    return analyse_ring(name, _RINGS[name](), budget)


def _small_blocks() -> dict[str, Callable[[], FiniteRing]]:
    return {"Z2": lambda: make_zn(2), "Z3": lambda: make_zn(3), "Z4": lambda: make_zn(4),
            "Z5": lambda: make_zn(5), "Z2[x]/(x^2)": lambda: cat.catalog("Z2[x]/(x^2)"),
            "GF4": lambda: cat.catalog("GF4")}


def _build_corpus() -> dict[str, Callable[[], FiniteRing]]:
    rings: dict[str, Callable[[], FiniteRing]] = {}
    for name in cat.names():
        rings[name] = (lambda nm: lambda: cat.catalog(nm))(name)
    for n in SURVEY_RANGE:
        rings.setdefault(f"Z{n}", (lambda k: lambda: make_zn(k))(n))
    for n in range(2, 11):
        rings[f"Z{n}[i]"] = (lambda k: lambda: make_gaussian_mod(k))(n)
    blocks = _small_blocks()
    for a, b in itertools.combinations_with_replacement(blocks, 2):
        name = f"{a}x{b}" if "/" not in b else f"{a}x({b})"
        rings.setdefault(name, (lambda x, y: lambda: make_product([blocks[x](), blocks[y]()]))(a, b))
    rings.setdefault("Z2xZ2xZ3", lambda: make_product([make_zn(2), make_zn(2), make_zn(3)]))
    return rings


_RINGS = _build_corpus()


def corpus_names() -> list[str]:
    """The ring corpus: catalog, Z_2..Z_60, Gaussian Z_n[i] for n <= 10 and
    products of two small rings."""
    return list(_RINGS)


def corpus(budget: int) -> Iterator[Analysis]:
    for name in _RINGS:
        yield analyse(name, budget)


def _status(holds: bool, a: Analysis | None = None) -> str:
    if a is not None and not a.consistent:
        return FAIL
    return PASS if holds else DISCREPANCY


def _desc(a: Analysis) -> str:
    return f"{a.family}, Mdim={a.value} ({a.proof()})"


# -- the statements -----------------------------------------------------------

def _integral_domains(budget: int) -> Iterator[ClaimReport]:
    for a in corpus(budget):
        if is_integral_domain(a.ring):
            yield ClaimReport("Thm3.1", a.name, "Mdim undefined (empty graph)",
                              f"Mdim={a.value}", _status(isinstance(a.verdict, Undefined), a))
    bad = [a.name for a in corpus(budget)
           if isinstance(a.verdict, Undefined) != is_integral_domain(a.ring)]
    yield ClaimReport("Thm3.1", f"converse over {len(_RINGS)} corpus rings",
                      "Mdim undefined only for integral domains",
                      "holds" if not bad else "fails at " + ", ".join(bad), _status(not bad))


def _paths(budget: int) -> Iterator[ClaimReport]:
    for name in cat.PATH_RINGS:
        a = analyse(name, budget)
        ok = a.family in ("Path(2)", "Path(3)") and a.value == "1"
        yield ClaimReport("Prop3.1", name, "Path(2) or Path(3), Mdim=1", _desc(a), _status(ok, a))
    ones = [a for a in corpus(budget) if a.value == "1"]
    bad = [a.name for a in ones if a.family not in ("Path(2)", "Path(3)")]
    yield ClaimReport("Prop3.1", f"all {len(ones)} corpus rings with Mdim=1",
                      "graph is Path(2) or Path(3)",
                      "holds" if not bad else "fails at " + ", ".join(bad), _status(not bad))


def _cycles(budget: int) -> Iterator[ClaimReport]:
    for name in cat.CYCLE_RINGS:
        a = analyse(name, budget)
        ok = a.family in ("Cycle(3)", "Cycle(4)") and a.value == "inf"
        yield ClaimReport("Prop3.2", name, "Cycle(3) or Cycle(4), Mdim=inf", _desc(a),
                          _status(ok, a))


def _mdim_three(budget: int) -> Iterator[ClaimReport]:
    for name in cat.MDIM3_RINGS:
        a = analyse(name, budget)
        yield ClaimReport("Thm3.2", name, "Mdim=3", _desc(a), _status(a.value == "3", a))
    for name in cat.MDIM3_ALT_RINGS:
        a = analyse(name, budget)
        yield ClaimReport("Thm3.2", name, "Mdim=3", _desc(a), _status(a.value == "3", a),
                          "alternative reading of Z2 x Z4[X]/(x^2); Z2x(Z2[x]/(x^2)) is the one "
                          "whose graph matches Z2xZ4")


def _nilpotent_rings(square_zero: bool, budget: int) -> Iterator[Analysis]:
    for a in corpus(budget):
        L = zero_divisors(a.ring)
        if len(L) >= 3 and all_zd_nilpotent(a.ring) and zd_square_zero(a.ring) == square_zero:
            yield a


def _nilpotent_a(budget: int) -> Iterator[ClaimReport]:
    for a in _nilpotent_rings(True, budget):
        yield ClaimReport("Thm3.3a", a.name, "Mdim=inf", _desc(a), _status(a.value == "inf", a))


def _nilpotent_b(budget: int) -> Iterator[ClaimReport]:
    for a in _nilpotent_rings(False, budget):
        finite = isinstance(a.verdict, Defined)
        yield ClaimReport("Thm3.3b", a.name, "Mdim finite", _desc(a), _status(finite, a),
                          "" if finite else "all zero divisors nilpotent and L(R)^2 != 0, "
                                            "yet no resolving set exists")


def _cut_vertex(budget: int) -> Iterator[ClaimReport]:
    for name in cat.CUT_VERTEX_RINGS:
        a = analyse(name, budget)
        G = a.graph
        hyp = bool(cut_vertices(G)) and not has_degree_one_vertex(G)
        ok = hyp and a.value == "inf"
        yield ClaimReport("Cor3.1", name, "cut vertex, no degree-1 vertex, Mdim=inf",
                          f"cut vertices {len(cut_vertices(G))}, min degree {min_degree(G)}, "
                          + _desc(a), _status(ok, a))
    for name in cat.CUT_VERTEX_RINGS[4:]:
        a = analyse(name, budget)
        yield ClaimReport("Cor3.1:K3", name, "Complete(3)",
                          f"{a.family}, V={a.graph.n}, E={a.graph.edge_count}",
                          _status(a.family == "Complete(3)"),
                          "" if a.family == "Complete(3)" else
                          "three triangles sharing one vertex, not K_3")
    hits = [a for a in corpus(budget) if a.graph.n >= 3 and a.graph.n and cut_vertices(a.graph)
            and not has_degree_one_vertex(a.graph)]
    bad = [a.name for a in hits if a.value != "inf"]
    yield ClaimReport("Cor3.1", f"all {len(hits)} corpus rings with a cut vertex and no "
                      "degree-1 vertex", "Mdim=inf",
                      "holds" if not bad else "fails at " + ", ".join(bad), _status(not bad))


def _zn_values(budget: int) -> Iterator[ClaimReport]:
    for n in SURVEY_RANGE:
        a = analyse(f"Z{n}", budget)
        exp = expected_mdim(n)
        yield ClaimReport("Thm3.4", f"Z{n}", f"Mdim={exp}", f"Mdim={a.value} ({a.proof()})",
                          _status(a.value == exp, a))


def _table(budget: int) -> Iterator[ClaimReport]:
    for n in SURVEY_RANGE:
        a = analyse(f"Z{n}", budget)
        G = a.graph
        got = {"V": G.n, "E": G.edge_count, "diameter": a.diameter, "girth": girth(G),
               "family": a.family, "mdim": a.value}
        exp = table1_expectation(n)
        diff = [k for k in exp if exp[k] != got[k]]
        fmt = lambda d: ", ".join(f"{k}={d[k]}" for k in exp)  # noqa: E731
        yield ClaimReport(f"Table1:n={n}", f"Z{n} [{factorization_class(n)}]", fmt(exp), fmt(got),
                          _status(not diff, a), "differs in " + ", ".join(diff) if diff else "")


def _low_diameter(budget: int) -> Iterator[ClaimReport]:
    hits = [a for a in corpus(budget) if a.graph.n >= 2 and a.diameter <= 2
            and not a.family.startswith("Path")]
    bad = [a.name for a in hits if a.value != "inf"]
    yield ClaimReport("Lemma4.1", f"all {len(hits)} corpus graphs with diameter <= 2 that are "
                      "not paths", "Mdim=inf",
                      "holds" if not bad else "fails at " + ", ".join(bad), _status(not bad))
    a = analyse("Z6", budget)
    yield ClaimReport("Lemma4.1:literal", "Z6", "diameter <= 2 and a path => Mdim=inf",
                      f"{a.family}, diameter {a.diameter}, Mdim={a.value}",
                      _status(a.value == "inf", a),
                      "the statement reads 'is a path' where its argument needs 'is not a path'")


def _counting_bound(budget: int) -> Iterator[ClaimReport]:
    strict_bad = []
    for a in corpus(budget):
        if not isinstance(a.verdict, Defined) or len(zero_divisors(a.ring)) < 3:
            continue
        f = lower_bound_f(a.graph.n, a.diameter)
        m = a.verdict.k
        yield ClaimReport("Cor4.1", a.name, f"Mdim >= f({a.graph.n},{a.diameter}) = {f}",
                          f"Mdim={m}", PASS if m >= f and a.consistent else FAIL)
        if not m > f:
            strict_bad.append(a)
    for a in strict_bad:
        f = lower_bound_f(a.graph.n, a.diameter)
        yield ClaimReport("Cor4.1:strict", a.name, f"Mdim > f({a.graph.n},{a.diameter}) = {f}",
                          f"Mdim={a.verdict.k}", DISCREPANCY,
                          "equality is attained; only the non-strict bound follows from counting")
    three = [a for a in corpus(budget) if a.graph.n == 3]
    values = sorted({a.value for a in three})
    yield ClaimReport("Cor4.1:n=3", f"all {len(three)} corpus graphs on 3 vertices", "Mdim=2",
                      "Mdim in {" + ", ".join(values) + "}", _status(values == ["2"]),
                      "no graph has multiset dimension 2")


def _order_bound(budget: int) -> Iterator[ClaimReport]:
    for a in corpus(budget):
        if isinstance(a.verdict, Defined) and a.verdict.k == 3:
            bound = max_order_for_mdim3(a.diameter)
            yield ClaimReport("Thm4.2", a.name, f"V <= {bound} (diameter {a.diameter})",
                              f"V={a.graph.n}", _status(a.graph.n <= bound, a))


CLAIMS: dict[str, Callable[[int], Iterable[ClaimReport]]] = {
    "Thm3.1": _integral_domains,
    "Prop3.1": _paths,
    "Prop3.2": _cycles,
    "Thm3.2": _mdim_three,
    "Thm3.3a": _nilpotent_a,
    "Thm3.3b": _nilpotent_b,
    "Cor3.1": _cut_vertex,
    "Thm3.4": _zn_values,
    "Table1": _table,
    "Lemma4.1": _low_diameter,
    "Cor4.1": _counting_bound,
    "Thm4.2": _order_bound,
}


class UnknownClaim(KeyError):
    def __str__(self) -> str:
        return f"unknown claim {self.args[0]!r}; choose from all, {', '.join(CLAIMS)}"


def verify_claims(selection: Iterable[str] = ("all",),
                  budget: int = DEFAULT_BUDGET) -> list[ClaimReport]:
    ids: list[str] = []
    for s in selection:
        if s == "all":
            ids.extend(CLAIMS)
        elif s in CLAIMS:
            ids.append(s)
        else:
            raise UnknownClaim(s)
    out: list[ClaimReport] = []
    for cid in dict.fromkeys(ids):
        out.extend(CLAIMS[cid](budget))
    return out


def equality_search(rings: Iterable[tuple[str, FiniteRing]] | None = None,
                    budget: int = DEFAULT_BUDGET) -> list[Analysis]:
    """Graphs with multiset dimension 3 whose order meets the diameter bound exactly.

    Defaults to the ring corpus.  Every hit is re-verified before it is returned.
    """
    if rings is None:
        found: Iterable[Analysis] = corpus(budget)
    else:
        found = (analyse_ring(name, R, budget) for name, R in rings)
    hits = []
    for a in found:
        if isinstance(a.verdict, Defined) and a.verdict.k == 3:
            if a.graph.n == max_order_for_mdim3(a.diameter):
                if not is_m_resolving(a.graph, a.verdict.witness):
                    raise AssertionError(f"{a.name}: witness does not resolve")
                hits.append(a)
    return hits
