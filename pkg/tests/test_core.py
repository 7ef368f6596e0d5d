import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

import ordertest as ot
from ordertest.core import min_antichain_cover, min_chain_cover
from ordertest.errors import CycleError, OracleLimitError, TransitivityError


def small_posets():
    """Hypothesis strategy: random DAG closures built from forward pairs."""

    @st.composite
    def build(draw):
        n = draw(st.integers(min_value=0, max_value=7))
        pairs = draw(st.lists(
            st.tuples(st.integers(0, max(n - 1, 0)), st.integers(0, max(n - 1, 0))),
            max_size=12,
        )) if n else []
        forward = [(min(x, y), max(x, y)) for x, y in pairs if x != y]
        perm = draw(st.permutations(range(n))) if n else []
        return ot.from_relations(n, [(perm[x], perm[y]) for x, y in forward])

    return build()


class TestFromRelations:
    def test_chain_closure(self):
        p = ot.from_relations(3, [(0, 1), (1, 2)])
        assert set(p.edges()) == {(0, 1), (1, 2), (0, 2)}

    def test_two_cycle_rejected(self):
        with pytest.raises(CycleError):
            ot.from_relations(2, [(0, 1), (1, 0)])

    def test_longer_cycle_rejected(self):
        with pytest.raises(CycleError):
            ot.from_relations(3, [(0, 1), (1, 2), (2, 0)])

    def test_diamond_closure(self):
        p = ot.from_relations(4, [(0, 1), (0, 2), (1, 3), (2, 3)])
        assert p.edge_count() == 5
        assert (0, 3) in set(p.edges())

    def test_out_of_range(self):
        with pytest.raises(IndexError):
            ot.from_relations(2, [(0, 5)])

    @settings(max_examples=60, deadline=None)
    @given(small_posets())
    def test_closure_idempotent(self, p):
        assert ot.from_relations(p.n, p.edges()) == p

    @settings(max_examples=60, deadline=None)
    @given(small_posets())
    def test_lin_ext_is_topological(self, p):
        pos = {v: i for i, v in enumerate(p.lin_ext)}
        assert all(pos[x] < pos[y] for x, y in p.edges())

    def test_lin_ext_smallest_index_first(self):
        p = ot.antichain(4)
        assert p.lin_ext == (0, 1, 2, 3)


class TestHeightWidth:
    def test_height_examples(self):
        assert ot.chain(5).height() == 5
        assert ot.k_hw(3, 2).height() == 3
        diamond = ot.from_relations(4, [(0, 1), (0, 2), (1, 3), (2, 3)])
        assert diamond.height() == 3
        assert ot.chain(0).height() == 0
        assert ot.antichain(3).height() == 1

    def test_width_examples(self):
        assert ot.antichain(4).width() == 4
        assert ot.k_hw(3, 2).width() == 2
        assert ot.union_of_chains(3, 2).width() == 3

    def test_max_antichain_is_witness(self, corpus):
        for p in corpus:
            ac = p.max_antichain()
            assert len(ac) == p.width()
            rel = set(p.edges())
            for x in ac:
                for y in ac:
                    assert (x, y) not in rel

    def test_mirsky_dilworth_duality(self, corpus):
        for p in corpus:
            if not 1 <= p.n <= 8:
                continue
            assert p.height() == min_antichain_cover(p)
            assert p.width() == min_chain_cover(p)


class TestInduced:
    def test_chain_skip(self):
        q = ot.chain(3).induced([0, 2])
        assert ot.is_isomorphic(q, ot.chain(2))

    def test_duplicates_incomparable(self):
        q = ot.chain(3).induced([1, 1])
        assert ot.is_isomorphic(q, ot.antichain(2))

    def test_same_layer(self):
        q = ot.k_hw(2, 2).induced([0, 1])
        assert ot.is_isomorphic(q, ot.antichain(2))

    def test_full_induced_isomorphic(self, corpus):
        for p in corpus:
            if p.n <= 7:
                assert ot.is_isomorphic(p.induced(range(p.n)), p)

    def test_index_error(self):
        with pytest.raises(IndexError):
            ot.chain(2).induced([0, 2])


class TestRemoveEdges:
    def test_breaking_transitivity(self):
        with pytest.raises(TransitivityError) as exc:
            ot.chain(3).remove_edges([(0, 2)])
        assert exc.value.triple == (0, 1, 2)

    def test_valid_removal(self):
        p = ot.chain(3).remove_edges([(0, 1), (0, 2)])
        assert set(p.edges()) == {(1, 2)}

    def test_empty_removal(self, corpus):
        for p in corpus:
            assert p.remove_edges([]) == p


class TestOracles:
    def test_edge_count_chain(self):
        for h in range(6):
            assert ot.chain(h).edge_count() == h * (h - 1) // 2

    def test_edge_count_khw(self):
        assert ot.k_hw(2, 2).edge_count() == 4

    def test_isomorphic_relabel(self):
        q = ot.from_relations(3, [(2, 1), (1, 0)])
        assert ot.is_isomorphic(ot.chain(3), q)

    def test_not_isomorphic(self):
        assert not ot.is_isomorphic(ot.chain(3), ot.antichain(3))

    def test_iso_cap(self):
        with pytest.raises(OracleLimitError):
            ot.is_isomorphic(ot.antichain(11), ot.antichain(11))

    def test_hasse_of_chain(self):
        assert ot.chain(4).hasse_pairs() == [(0, 1), (1, 2), (2, 3)]
