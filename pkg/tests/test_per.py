from hypothesis import given, strategies as st

from stlc_nbe.pcatlab.per import (PerRel, check_per, domain, per_arrow, per_discrete,
                                  per_from_blocks, per_prod, per_sub, per_unit)


def test_discrete_and_unit():
    d = per_discrete([0, 1, 2])
    assert d.related(1, 1) and not d.related(0, 1)
    assert domain(d) == (0, 1, 2)
    assert per_unit().carrier == ((),) and check_per(per_unit()).passed


def test_blocks_leave_outsiders_undefined():
    r = per_from_blocks([0, 1, 2], [[0, 1]])
    assert r.related(0, 1) and r.related(1, 0)
    assert not r.defined(2)
    assert domain(r) == (0, 1)
    assert check_per(r).passed


def test_arrow_of_discrete_relates_equal_tables():
    two = per_discrete([0, 1])
    f = per_arrow(two, two)
    assert len(f.carrier) == 4
    assert all(f.related(x, y) == (x == y) for x in f.carrier for y in f.carrier)


def test_arrow_respects_blocks():
    a = per_from_blocks([0, 1, 2], [[0, 1]])
    b = per_discrete(["x", "y"])
    f = per_arrow(a, b)
    # defined tables must send 0 and 1 to the same output; 2 is unconstrained
    for t in f.carrier:
        assert f.defined(t) == (t[0] == t[1])
    assert check_per(f).passed


def test_product_and_subset():
    p = per_prod(per_discrete([0, 1]), per_from_blocks([0, 1], [[0, 1]]))
    assert p.related((0, 0), (0, 1)) and not p.related((0, 0), (1, 0))
    s = per_sub(per_discrete([0, 1, 2]), lambda x: x != 1)
    assert domain(s) == (0, 2)
    assert check_per(p).passed and check_per(s).passed


def test_check_detects_broken_relations():
    asym = PerRel((0, 1), lambda x, y: x <= y)
    rep = check_per(asym)
    assert not rep.passed and {f["law"] for f in rep.failures} == {"symmetry"}
    # 0~1 and 1~2 but not 0~2
    chain = PerRel((0, 1, 2), lambda x, y: abs(x - y) <= 1)
    rep = check_per(chain)
    assert {f["law"] for f in rep.failures} == {"transitivity"}


@st.composite
def pers(draw, max_size=3):
    n = draw(st.integers(1, max_size))
    carrier = list(range(n))
    labels = draw(st.lists(st.one_of(st.none(), st.integers(0, n - 1)), min_size=n, max_size=n))
    blocks = {}
    for x, lab in zip(carrier, labels):
        if lab is not None:
            blocks.setdefault(lab, []).append(x)
    return per_from_blocks(carrier, blocks.values())


@given(pers(), pers())
def test_combinators_preserve_the_laws(a, b):
    for r in (a, b, per_prod(a, b), per_arrow(a, b), per_sub(a, lambda x: x % 2 == 0)):
        assert check_per(r).passed


@given(pers())
def test_per_relates_only_defined_elements(r):
    for x in r.carrier:
        for y in r.carrier:
            if r.related(x, y):
                assert r.defined(x) and r.defined(y)
