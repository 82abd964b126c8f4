import pytest
from hypothesis import given, settings, strategies as st

from fixcalc import (
    NonConvergenceError, NotMonotoneError, PointClass, SizeCapError, Subset, Universe,
    UniverseMismatchError, additive_random_generator, check_closed, check_consistent,
    classify_all, classify_by_order, classify_subset, constant, enumerate_subsets,
    fixpoint_report, gfp_iterate, identity, intersect_with, is_monotone, knaster_tarski_gfp_bruteforce,
    knaster_tarski_lfp_bruteforce, leq, lfp_iterate, partition_universe, peano_successor,
    prove_by_induction, table_generator,
)
from oracles import gfp_by_consistent_sets, lfp_by_closed_sets, peano

U3 = Universe(3)
U20 = Universe(20)


def S(u, *members):
    return Subset.of(u, members)


def as_set_fn(g):
    return lambda xs: frozenset(g(Subset.of(g.universe, xs)))


# iteration

def test_peano_lfp_is_whole_truncated_carrier():
    u = Universe(16)
    mu, trace = lfp_iterate(peano_successor(u))
    assert mu == u.full()
    assert len(trace) == 18
    nu, gtrace = gfp_iterate(peano_successor(u))
    assert nu == mu
    assert len(gtrace) == 2


def test_constant_and_identity():
    one = S(U3, 1)
    assert lfp_iterate(constant(one))[0] == one
    assert gfp_iterate(identity(U3))[0] == U3.full()
    assert lfp_iterate(identity(U3))[0] == U3.empty()


def test_additive_seed7_matches_bruteforce():
    g = additive_random_generator(Universe(8), 7)
    assert lfp_iterate(g)[0] == knaster_tarski_lfp_bruteforce(g)
    assert gfp_iterate(g)[0] == knaster_tarski_gfp_bruteforce(g)


def test_bruteforce_examples():
    u10 = Universe(10)
    f = as_set_fn(peano_successor(u10))
    assert frozenset(knaster_tarski_lfp_bruteforce(peano_successor(u10))) == lfp_by_closed_sets(f, 10)
    assert knaster_tarski_lfp_bruteforce(peano_successor(u10)) == u10.full()
    assert knaster_tarski_gfp_bruteforce(peano_successor(u10)) == u10.full()
    assert knaster_tarski_lfp_bruteforce(constant(S(U3, 1))) == S(U3, 1)
    # post-fixed sets of X & {0} are {} and {0}
    assert knaster_tarski_gfp_bruteforce(intersect_with(S(U3, 0))) == S(U3, 0)
    assert knaster_tarski_gfp_bruteforce(identity(U3)) == U3.full()


def test_bruteforce_cap():
    with pytest.raises(SizeCapError):
        knaster_tarski_lfp_bruteforce(peano_successor(Universe(13)))
    with pytest.raises(SizeCapError):
        knaster_tarski_gfp_bruteforce(peano_successor(Universe(13)))


@pytest.mark.parametrize("seed", range(60))
def test_soundness_against_bruteforce_and_set_oracle(seed):
    n = 1 + seed % 10
    g = additive_random_generator(Universe(n), seed)
    mu, lt = lfp_iterate(g)
    nu, gt = gfp_iterate(g)
    assert mu == knaster_tarski_lfp_bruteforce(g)
    assert nu == knaster_tarski_gfp_bruteforce(g)
    f = as_set_fn(g)
    assert frozenset(mu) == lfp_by_closed_sets(f, n)
    assert frozenset(nu) == gfp_by_consistent_sets(f, n)
    assert leq(mu, nu)
    assert classify_subset(g, mu) is PointClass.FIXED
    assert classify_subset(g, nu) is PointClass.FIXED
    # traces: strictly monotone until the repeated last element
    assert len(lt) <= n + 2 and len(gt) <= n + 2
    assert lt[0] == g.universe.empty() and gt[0] == g.universe.full()
    assert lt[-1] == lt[-2] and gt[-1] == gt[-2]
    for a, b in zip(lt[:-2], lt[1:-1]):
        assert leq(a, b) and a != b
    for a, b in zip(gt[:-2], gt[1:-1]):
        assert leq(b, a) and a != b


def test_random_generators_are_not_all_trivial():
    """The soundness sweep would be weak if lfp == gfp every time."""
    gaps = sum(
        lfp_iterate(g)[0] != gfp_iterate(g)[0]
        for g in (additive_random_generator(Universe(8), s) for s in range(50))
    )
    assert gaps >= 10


# non-monotone generators

def swap_u1():
    u = Universe(1)
    return table_generator(u, {u.empty(): u.full(), u.full(): u.empty()})


def test_nonmonotone_refused_without_override():
    with pytest.raises(NotMonotoneError) as exc:
        lfp_iterate(swap_u1())
    assert exc.value.verdict.counterexample is not None


def test_nonmonotone_override_reports_nonconvergence():
    with pytest.raises(NonConvergenceError) as exc:
        lfp_iterate(swap_u1(), override=True)
    # cap is 2**1 + 1 = 3 applications
    assert [str(s) for s in exc.value.trace] == ["{}", "{0}", "{}", "{0}"]


def test_nonmonotone_override_can_converge():
    u = Universe(2)
    # not monotone ({0} <= {0,1} but F({0}) = {1} is not below F({0,1}) = {0}),
    # yet iteration from the bottom settles at {1}
    entries = {u.empty(): S(u, 1), S(u, 0): S(u, 1), S(u, 1): S(u, 1), u.full(): S(u, 0)}
    g = table_generator(u, entries)
    assert not is_monotone(g).holds
    mu, trace = lfp_iterate(g, override=True)
    assert mu == S(u, 1)


# classification

def test_classify_subset_examples():
    F = peano_successor(U20)
    assert classify_subset(F, U20.full()) is PointClass.FIXED
    x = Subset.of(U20, range(10))
    fx = peano(20, frozenset(range(10)))  # {0..10}
    assert frozenset(x) < fx
    assert classify_subset(F, x) is PointClass.PROPER_POST_FIXED
    for s in enumerate_subsets(U3):
        assert classify_subset(identity(U3), s) is PointClass.FIXED


def test_classify_universe_mismatch():
    with pytest.raises(UniverseMismatchError):
        classify_subset(identity(U3), Universe(4).empty())


def test_classify_all_examples():
    u2 = Universe(2)
    rows, counts = classify_all(identity(u2))
    assert [c for _, c in rows] == [PointClass.FIXED] * 4
    rows, counts = classify_all(constant(S(u2, 1)))
    assert [(str(s), c) for s, c in rows] == [
        ("{}", PointClass.PROPER_POST_FIXED),
        ("{0}", PointClass.NEITHER),
        ("{1}", PointClass.FIXED),
        ("{0,1}", PointClass.PROPER_PRE_FIXED),
    ]
    assert counts == {PointClass.PROPER_PRE_FIXED: 1, PointClass.PROPER_POST_FIXED: 1,
                      PointClass.FIXED: 1, PointClass.NEITHER: 1}
    rows, counts = classify_all(peano_successor(U3))
    assert [s for s, c in rows if c is PointClass.FIXED] == [U3.full()]


@pytest.mark.parametrize("seed", range(10))
def test_classify_all_against_definition(seed):
    g = additive_random_generator(Universe(6), seed)
    f = as_set_fn(g)
    rows, counts = classify_all(g)
    assert sum(counts.values()) == 64
    for s, c in rows:
        x, fx = frozenset(s), f(frozenset(s))
        expected = {
            (True, True): PointClass.FIXED,
            (True, False): PointClass.PROPER_PRE_FIXED,
            (False, True): PointClass.PROPER_POST_FIXED,
            (False, False): PointClass.NEITHER,
        }[(fx <= x, x <= fx)]
        assert c is expected


def test_classify_by_order_on_integers():
    le = lambda a, b: a <= b
    assert classify_by_order(6, 6, le) is PointClass.FIXED
    assert classify_by_order(8, 7, le) is PointClass.PROPER_PRE_FIXED
    assert classify_by_order(12, 16, le) is PointClass.PROPER_POST_FIXED


def test_classify_all_cap():
    with pytest.raises(SizeCapError):
        classify_all(identity(Universe(13)))


# partition

def test_partition_examples():
    u16 = Universe(16)
    assert partition_universe(peano_successor(u16)) == (u16.full(), u16.empty(), u16.empty())
    assert partition_universe(constant(S(U3, 1))) == (S(U3, 1), U3.empty(), S(U3, 0, 2))
    u2 = Universe(2)
    assert partition_universe(intersect_with(S(u2, 0))) == (u2.empty(), S(u2, 0), S(u2, 1))


@pytest.mark.parametrize("seed", range(40))
def test_partition_is_a_partition(seed):
    g = additive_random_generator(Universe(2 + seed % 9), seed)
    parts = partition_universe(g)
    u = g.universe
    for i, a in enumerate(parts):
        for b in parts[i + 1:]:
            assert (a & b) == u.empty()
    assert (parts[0] | parts[1] | parts[2]) == u.full()


def test_fixpoint_report_fields():
    r = fixpoint_report(constant(S(U3, 1)))
    assert r.generator_name == "constant:{1}"
    assert r.lfp == r.gfp == S(U3, 1)
    assert [str(s) for s in r.lfp_trace] == ["{}", "{1}", "{1}"]
    assert [str(s) for s in r.gfp_trace] == ["{0,1,2}", "{1}", "{1}"]
    assert r.partition.outside == S(U3, 0, 2)


# closedness and induction

def test_check_closed_examples():
    F = peano_successor(U20)
    assert check_closed(F, U20.full())
    p = Subset.of(U20, [n for n in range(20) if 2**n > n])
    assert p == U20.full()
    assert check_closed(F, p)
    assert not check_closed(F, Subset.of(U20, range(10)))
    assert check_consistent(F, Subset.of(U20, range(10)))
    with pytest.raises(UniverseMismatchError):
        check_closed(F, U3.full())


def test_prove_by_induction_examples():
    F = peano_successor(U20)
    c = prove_by_induction(F, U20.full())
    assert c.base_holds and c.closed_holds and c.conclusion_holds and c.counterexample is None
    c = prove_by_induction(F, Subset.of(U20, range(10)))
    assert c.base_holds and not c.closed_holds and not c.conclusion_holds
    assert 10 <= c.counterexample <= 19
    c = prove_by_induction(constant(S(U3, 1)), S(U3, 1, 2))
    assert c.closed_holds and c.conclusion_holds


def test_prove_by_induction_refuses_nonmonotone():
    with pytest.raises(NotMonotoneError):
        prove_by_induction(swap_u1(), Universe(1).full())


@settings(max_examples=200, deadline=None)
@given(st.integers(1, 8), st.integers(0, 10**6), st.randoms(use_true_random=False))
def test_induction_soundness(n, seed, rnd):
    g = additive_random_generator(Universe(n), seed)
    p = Subset(g.universe, rnd.getrandbits(n))
    check = prove_by_induction(g, p)
    if check.closed_holds:
        assert check.conclusion_holds
        assert leq(lfp_iterate(g)[0], p)
    if not check.conclusion_holds:
        assert check.counterexample in lfp_iterate(g)[0]
        assert check.counterexample not in p
