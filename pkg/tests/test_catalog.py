import pytest

from zdlab import catalog as cat
from zdlab.rings import RingError, validate_ring_axioms, zero_divisors

ORDERS = {
    "Z6": 6, "Z8": 8, "Z9": 9, "Z2xZ2": 4, "Z3[r]/(r^2)": 9, "Z2[r]/(r^3)": 8,
    "Z4[r]/(2r,r^2-2)": 8, "Z3xZ3": 9, "GF4[r]/(r^2)": 16, "Z4[r]/(r^2+r+1)": 16,
    "Z4[r]/(2r,r^2)": 8, "Z2[r,s]/(r,s)^2": 8, "Z2xZ4": 8, "Z2x(Z2[x]/(x^2))": 8,
    "Z2x(Z4[x]/(x^2))": 32, "Z2xZ2xZ2": 8, "Z2[r,s]/(r^2,s^2-rs)": 16, "Z4[r]/(r^2+2r)": 16,
    "Z4[r,s]/(r^2,s^2-rs,rs-2,2r,2s)": 16, "Z8[r]/(2r,r^2+4)": 16, "Z2[r,s]/(r^2,s^2)": 16,
    "Z4[r]/(r^2)": 16, "Z4[r,s]/(r^2,s^2,rs-2,2r,2s)": 16, "GF4": 4, "Z2[x]/(x^2)": 4,
    "Z4[x]/(x^2)": 16,
}

# (a, b, a*b) by element name: the defining relations of each presented ring
RELATIONS = {
    "Z4[r]/(2r,r^2-2)": [("r", "r", "2"), ("2", "r", "0")],
    "Z4[r]/(2r,r^2)": [("r", "r", "0"), ("2", "r", "0")],
    "Z2[r,s]/(r,s)^2": [("r", "r", "0"), ("r", "s", "0"), ("s", "s", "0")],
    "Z2[r,s]/(r^2,s^2-rs)": [("r", "r", "0"), ("s", "s", "rs"), ("r", "s", "rs"),
                             ("rs", "s", "0")],
    "Z4[r,s]/(r^2,s^2-rs,rs-2,2r,2s)": [("r", "r", "0"), ("s", "s", "2"), ("r", "s", "2"),
                                        ("2", "r", "0"), ("2", "s", "0")],
    "Z8[r]/(2r,r^2+4)": [("r", "r", "4"), ("2", "r", "0")],
    "Z2[r,s]/(r^2,s^2)": [("r", "r", "0"), ("s", "s", "0"), ("r", "s", "rs")],
    "Z4[r,s]/(r^2,s^2,rs-2,2r,2s)": [("r", "r", "0"), ("s", "s", "0"), ("r", "s", "2")],
    "Z4[r]/(r^2+r+1)": [("r", "r", "3+3r")],
    "Z4[r]/(r^2+2r)": [("r", "r", "2r")],
    "GF4[r]/(r^2)": [("r", "r", "0"), ("t", "t", "1+t")],
}


def test_every_entry_listed():
    assert set(cat.names()) == set(ORDERS)


@pytest.mark.parametrize("name", sorted(ORDERS))
def test_catalog_ring_valid(name):
    R = cat.catalog(name)
    assert R.order == ORDERS[name]
    assert R.descriptor == name
    assert validate_ring_axioms(R).ok
    assert cat.describe(name)


@pytest.mark.parametrize("name", sorted(RELATIONS))
def test_relations(name):
    R = cat.catalog(name)
    for a, b, c in RELATIONS[name]:
        assert R.mul(R.index(a), R.index(b)) == R.index(c), (a, b, c)


def test_basis_of_z2_rs():
    R = cat.catalog("Z2[r,s]/(r^2,s^2)")
    assert {"1", "r", "s", "rs"} <= set(R.names)


def test_aliases():
    for alias, target in cat.ALIASES.items():
        assert cat.catalog(alias).order == cat.catalog(target).order
        assert cat.describe(alias) == cat.describe(target)


def test_unknown_name():
    with pytest.raises(RingError, match="unknown catalog ring"):
        cat.catalog("Z7[q]")


def test_groups():
    assert len(cat.PATH_RINGS) == 7 and len(cat.CYCLE_RINGS) == 5 and len(cat.CUT_VERTEX_RINGS) == 7
    assert len(cat.MDIM3_RINGS) == 3
    assert set(cat.PATH_RINGS + cat.CYCLE_RINGS + cat.MDIM3_RINGS + cat.CUT_VERTEX_RINGS) <= set(cat.names())


def test_gf4_is_a_field():
    assert len(zero_divisors(cat.catalog("GF4"))) == 0
