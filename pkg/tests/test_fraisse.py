from itertools import combinations, permutations

import pytest

from i3free import (
    ArraySlice,
    CapExceeded,
    Embedding,
    EmbeddingError,
    RangeError,
    amalgamate,
    build_digraph,
    is_I3_free,
    is_tournament,
    joint_embed,
    tp2_slice,
    validate_embedding,
)

from conftest import all_digraphs, edgeless, tournament


def three_cycle():
    return build_digraph(3, [(0, 1), (1, 2), (2, 0)])


def non_arc_pair():
    return build_digraph(2, [])


class TestEmbedding:
    def test_call_and_json(self):
        e = Embedding(2, 4, (3, 1))
        assert e(0) == 3 and e(1) == 1
        assert e.to_json() == {"source_n": 2, "target_n": 4, "map": [3, 1]}
        with pytest.raises(RangeError):
            e(2)

    def test_validate_accepts_plain_sequence(self):
        a = tournament(2)
        b = tournament(3)
        e = validate_embedding(a, b, [1, 2])
        assert isinstance(e, Embedding)
        assert e.map == (1, 2)

    def test_validate_rejects_wrong_length(self):
        with pytest.raises(EmbeddingError):
            validate_embedding(tournament(2), tournament(3), [0])

    def test_validate_rejects_non_injective(self):
        with pytest.raises(EmbeddingError):
            validate_embedding(non_arc_pair(), edgeless(3), [1, 1])

    def test_validate_rejects_out_of_range(self):
        with pytest.raises(EmbeddingError):
            validate_embedding(tournament(2), tournament(3), [0, 3])

    def test_validate_rejects_arc_mismatch(self):
        # source has arc 0->1, image pair is non-adjacent
        a = tournament(2)
        b = build_digraph(3, [(0, 1)])
        with pytest.raises(EmbeddingError):
            validate_embedding(a, b, [0, 2])

    def test_validate_rejects_reversed_arc(self):
        a = tournament(2)  # arc 0->1
        b = build_digraph(2, [(1, 0)])
        with pytest.raises(EmbeddingError):
            validate_embedding(a, b, [0, 1])


class TestJointEmbed:
    def test_single_vertices(self):
        d, ea, eb = joint_embed(tournament(1), tournament(1))
        assert d.n == 2
        assert d.arcs() == [(0, 1)]
        assert ea.map == (0,) and eb.map == (1,)

    def test_empty_first(self):
        b = three_cycle()
        d, ea, eb = joint_embed(build_digraph(0, []), b)
        assert d == b
        assert ea.map == ()
        assert eb.map == (0, 1, 2)

    def test_two_three_cycles(self):
        d, ea, eb = joint_embed(three_cycle(), three_cycle())
        assert d.n == 6
        assert is_I3_free(d)
        assert is_tournament(d, range(6))
        # cross arcs all point into the second copy
        for u in range(3):
            for v in range(3, 6):
                assert d.has_arc(u, v)

    def test_embeddings_are_valid(self):
        a, b = non_arc_pair(), three_cycle()
        d, ea, eb = joint_embed(a, b)
        validate_embedding(a, d, ea)
        validate_embedding(b, d, eb)

    @pytest.mark.parametrize("na,nb", [(2, 2), (2, 3), (3, 2)])
    def test_preserves_i3_freeness_exhaustive(self, na, nb):
        for a in all_digraphs(na):
            if not is_I3_free(a):
                continue
            for b in all_digraphs(nb):
                if not is_I3_free(b):
                    continue
                d, ea, eb = joint_embed(a, b)
                assert d.n == na + nb
                assert is_I3_free(d)


def embeddings_between(a, b):
    """All induced embeddings a -> b, as tuples."""
    out = []
    for m in permutations(range(b.n), a.n):
        try:
            validate_embedding(a, b, m)
        except EmbeddingError:
            continue
        out.append(m)
    return out


class TestAmalgamate:
    def test_empty_base_equals_joint(self):
        a = build_digraph(0, [])
        b, c = three_cycle(), non_arc_pair()
        d1, _, _ = amalgamate(a, b, c, (), ())
        d2, _, _ = joint_embed(b, c)
        assert d1 == d2

    def test_full_identification(self):
        a = three_cycle()
        ident = (0, 1, 2)
        d, eb, ec = amalgamate(a, a, a, ident, ident)
        assert d == a
        assert eb.map == ident and ec.map == ident

    def test_single_vertex_glue(self):
        a = tournament(1)
        b = c = non_arc_pair()
        d, eb, ec = amalgamate(a, b, c, (0,), (0,))
        assert d.n == 3
        # shared image 0, b-free vertex 1, c-free vertex 2
        assert not d.adjacent(0, 1)
        assert not d.adjacent(0, 2)
        assert d.has_arc(1, 2)  # tie-break from the b side
        assert is_I3_free(d)

    def test_invalid_embedding_rejected(self):
        a = tournament(2)
        with pytest.raises(EmbeddingError):
            amalgamate(a, non_arc_pair(), tournament(2), (0, 1), (0, 1))

    def test_commuting_square_exhaustive_n2(self):
        smalls = [d for k in (0, 1, 2) for d in all_digraphs(k)
                  if is_I3_free(d)]
        checked = 0
        for a in smalls:
            for b in smalls:
                for c in smalls:
                    for f1 in embeddings_between(a, b):
                        for g1 in embeddings_between(a, c):
                            d, eb, ec = amalgamate(a, b, c, f1, g1)
                            assert d.n == b.n + c.n - a.n
                            assert is_I3_free(d)
                            for v in range(a.n):
                                assert eb.map[f1[v]] == ec.map[g1[v]]
                            checked += 1
        assert checked == 86

    def test_returned_embeddings_validated(self):
        a = tournament(1)
        b = tournament(3)
        c = three_cycle()
        for f1 in embeddings_between(a, b):
            for g1 in embeddings_between(a, c):
                d, eb, ec = amalgamate(a, b, c, f1, g1)
                validate_embedding(b, d, eb)
                validate_embedding(c, d, ec)


class TestTp2Slice:
    def report(self, s):
        return dict(s.property_report)

    def test_1_1(self):
        s = tp2_slice(1, 1)
        assert s.digraph.n == 2
        assert s.digraph.arcs() == [(0, 1)]
        r = self.report(s)
        assert r["valid_digraph"] and r["no_independent_triple"]
        assert r["cross_level_adjacent"]

    def test_1_3_transitive(self):
        s = tp2_slice(1, 3)
        d = s.digraph
        assert d.n == 6
        # a-row and b-row transitive by index
        assert d.has_arc(s.a(0, 0), s.a(0, 1))
        assert d.has_arc(s.a(0, 1), s.a(0, 2))
        assert d.has_arc(s.b(0, 0), s.b(0, 2))
        assert self.report(s)["no_independent_triple"]
        # single level: the slice is a full tournament
        assert is_tournament(d, range(6))

    def test_2_2_cross_level_fails(self):
        s = tp2_slice(2, 2)
        d = s.digraph
        assert d.n == 8
        r = self.report(s)
        assert r["valid_digraph"]
        assert r["no_independent_triple"]
        assert not r["cross_level_adjacent"]
        assert not d.adjacent(s.a(0, 0), s.a(1, 1))
        assert d.adjacent(s.a(0, 0), s.a(1, 0))

    def test_3_3_independent_triple_appears(self):
        s = tp2_slice(3, 3)
        r = self.report(s)
        assert not r["no_independent_triple"]
        assert not r["cross_level_adjacent"]
        trio = (s.a(0, 0), s.a(1, 1), s.a(2, 2))
        for p, q in combinations(trio, 2):
            assert not s.digraph.adjacent(p, q)

    def test_labels_and_index_math(self):
        s = tp2_slice(2, 2)
        assert s.a(0, 0) == 0
        assert s.b(0, 0) == 2
        assert s.a(1, 1) == 5
        assert s.label(0) == "a[0,0]"
        assert s.label(7) == "b[1,1]"
        with pytest.raises(RangeError):
            s.a(2, 0)
        with pytest.raises(RangeError):
            s.b(0, 2)

    def test_bounds(self):
        with pytest.raises(RangeError):
            tp2_slice(0, 1)
        with pytest.raises(RangeError):
            tp2_slice(1, 0)
        with pytest.raises(CapExceeded):
            tp2_slice(4, 9)  # 72 vertices

    def test_is_dataclass_frozen(self):
        s = tp2_slice(1, 1)
        assert isinstance(s, ArraySlice)
        with pytest.raises(Exception):
            s.levels = 2
