import itertools
from fractions import Fraction

import pytest

import ordertest as ot
from ordertest.errors import BudgetError, EmptyPosetError
from ordertest.hom import (
    hom_count_naive,
    injective_hom_count,
)


class TestHomCountExact:
    def test_chain_into_chain(self):
        assert ot.hom_count_exact(ot.chain(2), ot.chain(3)) == 3

    def test_antichain_pattern(self):
        p = ot.k_hw(3, 2)
        for k in range(4):
            assert ot.hom_count_exact(ot.antichain(k), p) == p.n ** k

    def test_identity_chain(self):
        for h in range(1, 6):
            assert ot.hom_count_exact(ot.chain(h), ot.chain(h)) == 1

    def test_k22_into_chain3(self):
        assert ot.hom_count_exact(ot.k_hw(2, 2), ot.chain(3)) == 7

    def test_empty_pattern(self):
        assert ot.hom_count_exact(ot.chain(0), ot.chain(3)) == 1

    def test_oracle_equivalence(self, corpus):
        patterns = [ot.chain(2), ot.chain(3), ot.antichain(2), ot.k_hw(2, 2),
                    ot.from_relations(3, [(0, 1)])]
        for p in corpus:
            if p.n == 0 or p.n > 8:
                continue
            for q in patterns:
                assert ot.hom_count_exact(q, p) == hom_count_naive(q, p)

    def test_multipartite_pattern_matches_backtracking(self, corpus):
        # Layered patterns take a contraction fast path; cross-check it.
        from ordertest.hom import _hom_count_backtracking
        for p in corpus:
            if not 1 <= p.n <= 12:
                continue
            for q in (ot.k_hw(2, 2), ot.alternating(3, 2), ot.k_hw(3, 2)):
                assert ot.hom_count_exact(q, p) == _hom_count_backtracking(q, p, 10 ** 8)

    def test_monotone_under_relation_removal(self, corpus):
        q = ot.k_hw(2, 2)
        weaker = ot.from_relations(4, [(0, 2), (0, 3), (1, 3)])
        for p in corpus:
            if 1 <= p.n <= 10:
                assert ot.hom_count_exact(weaker, p) >= ot.hom_count_exact(q, p)

    def test_multiplicative_over_disjoint_union(self, corpus):
        q1, q2 = ot.chain(2), ot.k_hw(2, 2)
        pairs = list(q1.edges()) + [(x + q1.n, y + q1.n) for x, y in q2.edges()]
        q = ot.from_relations(q1.n + q2.n, pairs)
        for p in corpus:
            if 1 <= p.n <= 9:
                assert (ot.hom_count_exact(q, p)
                        == ot.hom_count_exact(q1, p) * ot.hom_count_exact(q2, p))

    def test_budget_error(self):
        # A non-layered pattern forces the backtracker, which must respect
        # its expansion budget.
        q = ot.from_relations(3, [(0, 1)])
        with pytest.raises(BudgetError):
            ot.hom_count_exact(q, ot.chain(30), budget=5)


class TestDensity:
    def test_exact_chain(self):
        d = ot.density_exact(ot.chain(2), ot.chain(3))
        assert d.estimate == Fraction(1, 3)
        assert (d.count, d.total) == (3, 9)

    def test_exact_union_of_chains(self):
        d = ot.density_exact(ot.chain(2), ot.union_of_chains(2, 2))
        assert d.estimate == Fraction(1, 8)
        assert d.estimate < Fraction(1, 4)

    def test_empty_host(self):
        with pytest.raises(EmptyPosetError):
            ot.density_exact(ot.chain(2), ot.chain(0))

    def test_mc_deterministic(self):
        q, p = ot.chain(2), ot.k_hw(3, 2)
        a = ot.density_mc(q, p, 500, 42)
        b = ot.density_mc(q, p, 500, 42)
        assert a.estimate == b.estimate
        assert a.trials == 500

    def test_mc_coverage(self):
        # The Hoeffding interval should cover the exact value in at least a
        # 1 - delta fraction of seeds; with delta = 0.2 the interval is
        # loose, so coverage failures at 100 seeds signal a real bug.
        q, p = ot.chain(2), ot.k_hw(3, 2)
        exact = ot.density_exact(q, p).estimate
        delta = 0.2
        hits = sum(
            abs(ot.density_mc(q, p, 200, s, delta).estimate - exact)
            <= ot.density_mc(q, p, 200, s, delta).ci_halfwidth
            for s in range(100)
        )
        assert hits >= (1 - delta) * 100

    def test_mc_ci_formula(self):
        import math
        d = ot.density_mc(ot.chain(2), ot.chain(3), 400, 1, 0.05)
        assert d.ci_halfwidth == pytest.approx(math.sqrt(math.log(2 / 0.05) / 800))


class TestContainsSubposet:
    def test_chain_in_layers(self):
        emb = ot.contains_subposet(ot.chain(3), ot.k_hw(3, 2))
        assert emb is not None
        assert emb.verify(ot.chain(3), ot.k_hw(3, 2))

    def test_chain_not_in_antichain(self):
        assert ot.contains_subposet(ot.chain(2), ot.antichain(5)) is None

    def test_wide_pattern_embeds_into_chain(self):
        # Non-induced semantics: incomparable pattern pairs may land on
        # comparable host pairs, so the 2x2 layered pattern embeds into a
        # 4-chain even though the chain has width 1.
        emb = ot.contains_subposet(ot.k_hw(2, 2), ot.chain(4))
        assert emb is not None
        assert emb.verify(ot.k_hw(2, 2), ot.chain(4))

    def test_wide_pattern_needs_enough_levels(self):
        assert ot.contains_subposet(ot.k_hw(2, 2), ot.chain(2)) is None

    def test_antichain_pattern_ignores_relations(self):
        # Non-induced semantics: a relation-free pattern embeds into any
        # poset with enough elements.
        assert ot.contains_subposet(ot.antichain(2), ot.chain(2)) is not None

    def test_deterministic_least_witness(self):
        emb = ot.contains_subposet(ot.chain(2), ot.chain(4))
        assert emb.map == (0, 1)

    def test_matches_injective_count(self, corpus):
        patterns = [ot.chain(2), ot.chain(3), ot.k_hw(2, 2)]
        for p in corpus:
            if not 1 <= p.n <= 8:
                continue
            for q in patterns:
                present = ot.contains_subposet(q, p) is not None
                assert present == (injective_hom_count(q, p) > 0)

    def test_witnesses_verify(self, corpus):
        for p in corpus:
            if p.n == 0:
                continue
            for q in (ot.chain(2), ot.chain(3), ot.k_hw(2, 2)):
                emb = ot.contains_subposet(q, p)
                if emb is not None:
                    assert emb.verify(q, p)


class TestDensityInequality:
    def test_equality_at_trivial_shape(self, corpus):
        for p in corpus:
            if not 1 <= p.n <= 10:
                continue
            report = ot.check_density_inequality(2, 1, p)
            assert report.all_pass
            assert report.t_box == report.t_chain

    def test_chain3_values(self):
        report = ot.check_density_inequality(2, 2, ot.chain(3))
        assert report.t_chain == Fraction(1, 3)
        assert report.t_alternating == Fraction(5, 27)
        assert report.t_box == Fraction(7, 81)
        assert report.t_box >= report.t_chain ** 4
        assert report.all_pass

    def test_zero_density_trivial(self):
        report = ot.check_density_inequality(3, 2, ot.antichain(4))
        assert report.t_chain == 0
        assert report.all_pass

    def test_corpus_universal(self, corpus):
        for p in corpus:
            if not 1 <= p.n <= 12:
                continue
            for h, w in itertools.product((2, 3), (1, 2)):
                assert ot.check_density_inequality(h, w, p).all_pass
