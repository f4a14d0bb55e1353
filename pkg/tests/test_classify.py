from itertools import combinations, permutations

import numpy as np
import pytest

from i3free import (
    CONSTANTS,
    ClassFlags,
    DomainError,
    RangeError,
    a_witness,
    b_witness,
    build_digraph,
    c_witness,
    classify,
    has_pinwheel,
    in_A,
    in_B,
    in_C,
    is_I3_free,
    log_floor,
)
from i3free.classify import k_subsets_ascending

from conftest import (
    all_digraphs,
    comp_bipartite,
    comp_cycle,
    edgeless,
    from_code,
    tournament,
)


class TestLogFloor:
    def test_examples(self):
        assert log_floor(1) == 0
        assert log_floor(8) == 3
        assert log_floor(9) == 3

    def test_errors(self):
        with pytest.raises(RangeError):
            log_floor(0)
        with pytest.raises(RangeError):
            log_floor(-2)

    def test_matches_math(self):
        import math
        for n in range(1, 2000):
            assert log_floor(n) == math.floor(math.log2(n))


class TestConstants:
    def test_values(self):
        import math
        a = math.log2(3.0)
        assert CONSTANTS.alpha == pytest.approx(a, rel=0, abs=1e-15)
        assert CONSTANTS.beta == pytest.approx(
            (1 + a) / 2 + (1 - a) / 10**6, abs=1e-15)
        assert CONSTANTS.gamma == pytest.approx(
            1 + 4 / 10**6 + 3 / 100 + a * (1 - 2 / 10**6 - 2 / 100),
            abs=1e-15)
        assert CONSTANTS.gamma == pytest.approx(2.58326, abs=1e-5)
        assert CONSTANTS.eta ** 3000 == pytest.approx(2.0, rel=1e-12)
        assert CONSTANTS.eps_half == 1e-6
        assert CONSTANTS.eps_cap == 1 / 100

    def test_ordering(self):
        # beta averages alpha towards 1, gamma overshoots alpha
        assert 1 < CONSTANTS.beta < CONSTANTS.alpha < 2 < CONSTANTS.gamma


class TestKSubsets:
    def test_ascending_order(self):
        got = list(k_subsets_ascending(0b10110, 2))
        assert got == [0b00110, 0b10010, 0b10100]

    def test_degenerate(self):
        assert list(k_subsets_ascending(0b101, 0)) == [0]
        assert list(k_subsets_ascending(0b101, 3)) == []
        assert list(k_subsets_ascending(0, 1)) == []
        with pytest.raises(RangeError):
            list(k_subsets_ascending(0b1, -1))

    def test_counts(self):
        import math
        mask = 0b1101101
        for k in range(8):
            got = list(k_subsets_ascending(mask, k))
            assert len(got) == math.comb(5, k)
            assert got == sorted(got)
            assert all(s & ~mask == 0 and s.bit_count() == k for s in got)


class TestClassA:
    def test_tournament_in_a(self):
        assert in_A(tournament(4))
        assert a_witness(tournament(4)) == 0

    def test_comp_c5_in_a(self):
        # n=5, k=2, every delta has size 2
        assert in_A(comp_cycle(5))

    def test_comp_k88_not_in_a(self):
        # n=16, k=4, every delta has size 8
        assert not in_A(comp_bipartite(8, 8))

    def test_single_vertex(self):
        assert in_A(build_digraph(1, []))

    def test_witness_is_least(self):
        # vertex 0 has delta {4..7} (size 4 > 3 at n=8); no vertex qualifies
        d = comp_bipartite(4, 4)
        assert a_witness(d) is None

    def test_domain_errors(self):
        with pytest.raises(DomainError):
            in_A(edgeless(3))
        with pytest.raises(RangeError):
            in_A(build_digraph(0, []))


class TestClassB:
    def test_comp_k45_in_b(self):
        d = comp_bipartite(4, 5)
        assert not in_A(d)
        assert in_B(d)
        v, q = b_witness(d)
        assert v == 0
        assert q.members() == (4, 5, 6)

    def test_comp_k44_not_in_b(self):
        # |delta(Q)| = 4 and 10^6*4 > 499999*8: misses by exactly 8
        d = comp_bipartite(4, 4)
        assert not in_B(d)

    def test_tournament_not_in_b(self):
        # class A absorbs it
        assert not in_B(tournament(5))
        assert b_witness(tournament(5)) is None

    def test_comp_k34_in_b(self):
        d = comp_bipartite(3, 4)
        assert not in_A(d)
        assert in_B(d)

    def test_threshold_is_exact(self):
        # the B test at n=8 compares 10^6 * 4 against 499999 * 8; a
        # half-without-slack rule would pass, the real rule must not
        d = comp_bipartite(4, 4)
        assert 4 * 2 == d.n
        assert not in_B(d)


class TestClassC:
    def test_small_cases_empty(self):
        # no class-C digraph exists below n=9: non-A structures up to n=8
        # are complement-of-K_{a,b} orientations and none pass the C test
        for d in (comp_bipartite(3, 3), comp_bipartite(3, 4),
                  comp_bipartite(4, 4)):
            assert not in_C(d)
            assert c_witness(d) is None

    def test_carveout(self):
        assert not in_C(tournament(6))


class TestPinwheel:
    def test_k_range(self):
        with pytest.raises(RangeError):
            has_pinwheel(tournament(4), 2)

    def test_tournament_none(self):
        for k in range(3, 7):
            assert not has_pinwheel(tournament(6), k)

    def test_comp_c5(self):
        d = comp_cycle(5)
        assert has_pinwheel(d, 5)
        assert not has_pinwheel(d, 3)
        assert not has_pinwheel(d, 4)

    def test_comp_k44(self):
        d = comp_bipartite(4, 4)
        assert has_pinwheel(d, 4)
        assert has_pinwheel(d, 6)
        assert has_pinwheel(d, 8)
        for k in (3, 5, 7):
            assert not has_pinwheel(d, k)

    def test_k_exceeds_n(self):
        assert not has_pinwheel(comp_cycle(5), 6)

    def brute(self, d, k):
        rows = d.delta
        for tour in permutations(range(d.n), k):
            if tour[0] != min(tour):
                continue
            ok = all(
                (rows[tour[i]] >> tour[(i + 1) % k]) & 1
                for i in range(k)
            )
            if ok:
                return True
        return False

    @pytest.mark.parametrize("n", [4, 5, 6])
    def test_against_bruteforce(self, n):
        rng = np.random.default_rng(1234 + n)
        for _ in range(40):
            code = int(rng.integers(3 ** (n * (n - 1) // 2)))
            d = from_code(n, code)
            for k in range(3, n + 1):
                assert has_pinwheel(d, k) == self.brute(d, k), (code, k)


class TestClassify:
    def test_tournament(self):
        f = classify(tournament(4))
        assert (f.in_t, f.in_a, f.in_b, f.in_c) == (True, True, False, False)
        assert f.covered
        assert f.witness == {"class": "A", "v": 0}

    def test_comp_k34(self):
        f = classify(comp_bipartite(3, 4))
        assert (f.in_t, f.in_a, f.in_b, f.in_c) == (True, False, True, False)
        assert f.witness["class"] == "B"
        assert f.witness["v"] == 0
        assert f.witness["Q"] == [3, 4]

    def test_comp_k44_t_only(self):
        f = classify(comp_bipartite(4, 4))
        assert (f.in_t, f.in_a, f.in_b, f.in_c) == (True, False, False, False)
        assert f.covered  # via in_T

    def test_witness_suppressed(self):
        f = classify(tournament(3), with_witness=False)
        assert f.witness is None

    def test_json_keys(self):
        j = classify(comp_cycle(5)).to_json()
        assert set(j) == {"n", "in_T", "in_A", "in_B", "in_C",
                          "covered", "witness"}
        assert j["in_T"] is False and j["in_A"] is True

    def test_domain_error(self):
        with pytest.raises(DomainError):
            classify(edgeless(4))

    @pytest.mark.parametrize("n", [3, 4])
    def test_exhaustive_exclusion_chain(self, n):
        total = in_a = 0
        for d in all_digraphs(n):
            if not is_I3_free(d):
                continue
            f = classify(d, with_witness=False)
            total += 1
            in_a += f.in_a
            # pairwise disjoint class flags
            assert f.in_a + f.in_b + f.in_c <= 1
            assert f.covered == (f.in_t or f.in_a or f.in_b or f.in_c)
            if f.in_a:
                assert not in_B(d) and not in_C(d)
        expected = {3: 26, 4: 636}[n]
        assert total == expected
        assert in_a == expected

    def test_class_counts_n5(self):
        # every one of the 43168 structures at n=5 lands in A
        total = in_a = uncovered = 0
        for code in range(3 ** 10):
            d = from_code(5, code)
            if not is_I3_free(d):
                continue
            f = classify(d, with_witness=False)
            total += 1
            in_a += f.in_a
            uncovered += not f.covered
        assert total == 43168
        assert in_a == 43168
        assert uncovered == 0

    def test_flags_dataclass_frozen(self):
        f = classify(tournament(3))
        assert isinstance(f, ClassFlags)
        with pytest.raises(Exception):
            f.in_a = False
