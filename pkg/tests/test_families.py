import pytest
from hypothesis import assume, given, settings
from hypothesis import strategies as st

from incidence_scrolls.base import IncidenceBase
from incidence_scrolls.errors import ConsistencyFault, DomainError, UnsupportedError
from incidence_scrolls.families import (
    Family,
    FamilyKey,
    Partition,
    ScrollModel,
    _chain,
    _nested,
    base_from_partition_e0,
    base_from_partition_ege1,
    base_from_partition_enot0,
    classify_g01,
    count_e0_scrolls,
    decomposable_incidence_test,
    delta_closed,
    delta_e0,
    delta_ege1,
    delta_enot0,
    delta_pieri,
    e0_bases,
    family_invariants,
    family_keys,
    invariants_e0,
    invariants_ege1,
    invariants_enot0,
    key_from_partition_e0,
    partition_count,
    partition_from_base,
    partitions_of,
)
from incidence_scrolls.ktheory import ktheory_genus
from incidence_scrolls.schubert import curve_class_degree

E0, ENOT0, EGE1 = Family.E0, Family.ENOT0, Family.EGE1


# -- partitions -------------------------------------------------------------------


def test_partition_type():
    p = Partition((3, 1, 1))
    assert (p.sum, p.largest, len(p)) == (5, 3, 3)
    with pytest.raises(DomainError):
        Partition((1, 2))
    with pytest.raises(DomainError):
        Partition((2, 0))


def test_partitions_examples():
    assert [p.parts for p in partitions_of(0)] == [()]
    assert [p.parts for p in partitions_of(3)] == [(3,), (2, 1), (1, 1, 1)]
    assert partition_count(9) == 30


@given(st.integers(0, 18))
def test_partition_enumeration_matches_recurrence(k):
    parts = [p.parts for p in partitions_of(k)]
    assert len(parts) == len(set(parts)) == partition_count(k)
    assert all(sum(p) == k for p in parts)


# -- keys -------------------------------------------------------------------------


@pytest.mark.parametrize(
    "args",
    [
        (E0, 3, (4,)),
        (E0, 3, (2, 2)),
        (ENOT0, 3, (0,)),
        (ENOT0, 2, (1, 4)),
        (EGE1, 3, (2,), 1, 0),
        (EGE1, 3, (0,), 1, -1),
        (E0, 3, (1,), 1, 0),
    ],
)
def test_key_validation(args):
    with pytest.raises(DomainError):
        FamilyKey(*args)


def test_key_bases():
    # parts (1, 1) give two copies of P^{n-2}
    assert FamilyKey(E0, 3, (2,)).base() == IncidenceBase(7, (3, 3, 3, 5, 5))
    assert FamilyKey(E0, 3, (2,)).partition() == Partition((1, 1))
    # parts (1, 2) are increasing, so this key indexes no partition
    assert FamilyKey(ENOT0, 2, (1, 1)).base() == IncidenceBase(5, (2, 2, 2, 3))
    assert FamilyKey(ENOT0, 2, (1, 1)).partition() is None


@pytest.mark.parametrize("r", range(1, 6))
def test_every_family_base_is_valid(r):
    for key in family_keys(E0, r):
        assert key.base().is_valid(), key
    for key in family_keys(ENOT0, r):
        assert key.base().is_valid(), key
    for e in (1, 2):
        for j in range(1 - e, 3):
            for key in family_keys(EGE1, r, e, j):
                assert key.base().is_valid(), key


@pytest.mark.parametrize("r", range(1, 6))
def test_delta_cycle_list_fills_the_grassmannian(r):
    for key in family_keys(ENOT0, r):
        n = key.ambient
        assert sum(n - 1 - d for d in key.cycle_list()) == 2 * n - 2


# -- partition bijections ----------------------------------------------------------


def test_bijection_examples():
    assert base_from_partition_e0(3, Partition((2,))) == IncidenceBase(7, (3, 3, 3, 4))
    assert base_from_partition_e0(3, Partition((1, 1))) == IncidenceBase(7, (3, 3, 3, 5, 5))
    assert base_from_partition_enot0(2, Partition((1, 1, 1))) == IncidenceBase(5, (2, 2, 3, 3, 3))
    with pytest.raises(DomainError):
        base_from_partition_enot0(3, Partition((3, 2)))
    with pytest.raises(DomainError):
        base_from_partition_e0(3, Partition((1,)))


@given(st.integers(1, 12).flatmap(lambda r: st.tuples(st.just(r), st.sampled_from(list(partitions_of(r - 1))))))
def test_e0_round_trip(case):
    r, lam = case
    base = base_from_partition_e0(r, lam)
    assert base.is_valid()
    assert partition_from_base(base) == lam
    assert key_from_partition_e0(r, lam).base().without_hyperplanes() == base


@given(st.integers(2, 7).flatmap(lambda r: st.tuples(st.just(r), st.sampled_from(list(partitions_of(2 * r - 1, max_part=r - 1))))))
def test_enot0_round_trip(case):
    r, lam = case
    base = base_from_partition_enot0(r, lam)
    assert partition_from_base(base, ENOT0) == lam


@given(
    st.tuples(st.integers(2, 6), st.integers(1, 3), st.integers(-2, 3)).filter(lambda t: t[0] - t[1] >= 1 and t[2] >= 1 - t[1])
)
def test_ege1_round_trip(params):
    r, e, j = params
    for lam in partitions_of(2 * r - e + j - 1):
        base = base_from_partition_ege1(r, e, j, lam)
        assert partition_from_base(base, EGE1, e, j) == lam


def test_count_e0_scrolls():
    assert count_e0_scrolls(1) == 1
    assert count_e0_scrolls(4) == 3
    assert count_e0_scrolls(10) == 30
    for r in range(1, 11):
        assert len(e0_bases(r)) == count_e0_scrolls(r)


def test_partition_keys_carry_their_partition():
    for r in range(1, 7):
        for key in family_keys(E0, r):
            lam = key.partition()
            if lam is not None:
                assert partition_from_base(key.base()) == lam


# -- Delta --------------------------------------------------------------------------


def test_delta_examples():
    assert delta_e0(4, (2,)) == 8
    assert delta_enot0(3, (2, 2)) == 6
    assert delta_ege1(4, 1, 1, (0, 1)) == 4


@pytest.mark.parametrize("r", range(1, 8))
def test_delta_spot_values(r):
    assert delta_e0(r, (1,)) == r + 1
    for h in range(2, r + 1):
        assert delta_e0(r, (h, 1)) == h * (r - h + 2)
    for h1 in range(1, r + 1):
        assert delta_enot0(r, (h1, 1)) == r - h1 + 2


@pytest.mark.parametrize("r", range(3, 7))
def test_delta_ege1_spot_values(r):
    for e in (1, 2):
        for j in range(1 - e, 3):
            if r - e < 1:
                continue
            assert delta_ege1(r, e, j, (0, 1)) == r - e + 1
            for h1 in range(1, r - e):
                assert delta_ege1(r, e, j, (h1, 1)) == r - e - h1 + 2


def test_delta_closed_form_miss_is_a_fault():
    # outside h_2 <= h_1 the printed s = 2 form overcounts
    key = FamilyKey(ENOT0, 2, (1, 2))
    assert (delta_closed(key), delta_pieri(ENOT0, 2, (1, 2))) == (6, 4)
    with pytest.raises(ConsistencyFault) as info:
        delta_enot0(2, (1, 2))
    assert "ENOT0(r=2, h=(1,2))" in str(info.value)


def test_delta_pieri_vacuous_and_empty():
    # a negative dimension means no line qualifies
    assert delta_pieri(E0, 0, (1,)) == 0


def test_empty_sum_convention():
    assert list(_nested(lambda prefix: -1, 2)) == []
    assert _chain(2, [3, 2, 1], lambda k: k) == 0


# -- closed forms where they agree with the oracles -------------------------------------


def _all_pass(key):
    res = family_invariants(key, strict=False)
    return [c for c in res.checks if not c.passed]


@pytest.mark.parametrize("r", range(1, 7))
def test_e0_partition_keys_consistent(r):
    for key in family_keys(E0, r):
        if key.is_partition:
            assert _all_pass(key) == [], key


@pytest.mark.parametrize("r", range(1, 7))
def test_enot0_short_keys_consistent(r):
    # s = 1, and s = 2 with h_2 <= h_1
    for key in family_keys(ENOT0, r):
        if key.s == 1 or (key.s == 2 and key.h[1] <= key.h[0]):
            assert _all_pass(key) == [], key


@pytest.mark.parametrize("r", range(2, 7))
def test_ege1_short_keys_consistent(r):
    # s = 1, and s = 2 with h_2 <= h_1 + 1
    for e in (1, 2):
        for j in range(1 - e, 3):
            for key in family_keys(EGE1, r, e, j):
                if key.s == 1 or (key.s == 2 and key.h[1] <= key.h[0] + 1):
                    assert _all_pass(key) == [], key


# -- family invariants -----------------------------------------------------------------


@pytest.mark.parametrize("r", range(2, 9))
def test_e0_examples(r):
    res = invariants_e0(r, (1,))
    assert (res.invariants.degree, res.invariants.genus) == (2 * r, 0)
    res = invariants_e0(r, (2, 1))
    assert (res.invariants.degree, res.invariants.genus) == (4 * r - 4, r - 2)
    assert (res.closed_degree, res.closed_genus) == (4 * r - 4, r - 2)


@pytest.mark.parametrize("r", range(2, 9))
def test_e0_two_part_formulas(r):
    for h in range(1, r):
        key = (h,) if h == 1 else (h, 1)
        res = invariants_e0(r, key, strict=False)
        expected = (2 * h * (r - h + 1), (r - h) * (h - 1))
        assert (res.closed_degree, res.closed_genus) == expected
        assert (res.invariants.degree, res.invariants.genus) == expected


def test_e0_spec_example():
    res = invariants_e0(5, (2, 1))
    assert (res.invariants.degree, res.invariants.genus) == (16, 3)


def test_enot0_h2_equal_one():
    for r in range(1, 7):
        for h1 in range(1, r + 1):
            res = invariants_enot0(r, (h1, 1))
            assert res.invariants.degree == curve_class_degree(res.base)
            # the printed value is kept as a note, not used
            (name, printed), = res.notes
            assert printed == 2 * (r + h1 + 1)


def test_enot0_small_base():
    res = invariants_enot0(2, (1,))
    assert res.partition == Partition((1, 1, 1))
    assert res.base == base_from_partition_enot0(2, res.partition)
    assert res.invariants.degree == curve_class_degree(res.base)


@pytest.mark.parametrize("e,j", [(1, 0), (1, 1), (2, -1), (2, 2), (3, 0)])
def test_ege1_bottom_member(e, j):
    res = invariants_ege1(e + 1, e, j, (0,))
    assert (res.invariants.degree, res.invariants.genus) == (e + j + 2, 0)
    assert res.base.n == e + j + 3


@pytest.mark.parametrize("r", range(2, 7))
def test_ege1_two_part_members(r):
    for e in (1, 2):
        for j in range(1 - e, 3):
            if r - e < 1:
                continue
            res = invariants_ege1(r, e, j, (0, 1))
            assert (res.invariants.degree, res.invariants.genus) == (2 * (r - e) + 1, 0)
            for h1 in range(1, r - e):
                res = invariants_ege1(r, e, j, (h1, 1))
                assert (res.invariants.degree, res.invariants.genus) == (2 * (r - e - h1 + 1), 0)


def test_strict_mode_raises_on_closed_form_miss():
    key = FamilyKey(ENOT0, 2, (1, 2))
    res = family_invariants(key, strict=False)
    assert not res.consistent
    assert res.invariants.degree == curve_class_degree(key.base()) == 6
    with pytest.raises(ConsistencyFault):
        family_invariants(key)


@settings(max_examples=40, deadline=None)
@given(st.sampled_from([k for r in range(1, 5) for k in family_keys(ENOT0, r)]))
def test_reported_invariants_are_oracle_values(key):
    res = family_invariants(key, strict=False)
    assert res.invariants.degree == curve_class_degree(res.base)
    assert res.invariants.genus == ktheory_genus(res.base)


# -- classification ---------------------------------------------------------------------


def test_classify_examples():
    v = classify_g01(ScrollModel(0, 1, 3))
    assert v.incidence and 1 in v.conditions
    v = classify_g01(ScrollModel(1, -1, 2))
    assert v.incidence and v.conditions == (3,)
    assert v.base == IncidenceBase(4, (2,) * 5)
    assert classify_g01(ScrollModel(0, 3, 7)).incidence is False


def test_classify_rational_normal_case():
    v = classify_g01(ScrollModel(0, 2, 3))
    assert v.base == IncidenceBase(5, (1, 3, 3, 3, 3))


def test_classify_genus_two_unsupported():
    with pytest.raises(UnsupportedError):
        classify_g01(ScrollModel(2, 0, 5))


def test_model_validation():
    with pytest.raises(DomainError):
        ScrollModel(0, 1, 0)
    with pytest.raises(DomainError):
        ScrollModel(0, 1, 3, e_triv=True)
    with pytest.raises(DomainError):
        ScrollModel(1, -1, 2, decomposable=True)


@given(st.integers(0, 1), st.integers(-1, 5), st.integers(1, 8), st.booleans())
def test_classify_yes_bases(g, e, m, e_triv):
    try:
        model = ScrollModel(g, e, m, e_triv=e_triv)
    except DomainError:
        assume(False)
    v = classify_g01(model)
    if v.incidence:
        assert v.base.is_valid()
        assert v.base.n == model.ambient
        assert curve_class_degree(v.base) == 2 * m - e


def test_decomposable_test_cases():
    # equality case giving the quadric
    v = decomposable_incidence_test(ScrollModel(0, 0, 1), 0)
    assert v.incidence and v.base == IncidenceBase(3, (1, 1, 1))
    v = decomposable_incidence_test(ScrollModel(0, 1, 3), 1)
    assert v.incidence is False
    v = decomposable_incidence_test(ScrollModel(1, 0, 4, decomposable=True, i2=2), 1)
    assert v.incidence is None and "undetermined" in v.reason
