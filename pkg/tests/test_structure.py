"""Shape classifiers: nuclear splits, tameness, rich/simple/wealthy recognition."""

from itertools import combinations

import pytest

from hypergrowth.core import Coloring, homogeneity, restrict_normalize, reverse
from hypergrowth.matrices import metrics3
from hypergrowth.rng import Lcg
from hypergrowth.structure import (WEALTHY_FAMILIES, SizeMismatchError,
                                   WealthyVariant, crossing_matrix,
                                   is_c_simple, is_p_tame, is_r_rich,
                                   is_wealthy, nuclear_decomposition,
                                   rich_deletions, rich_window_edges,
                                   variant_from_text, variant_to_text,
                                   w41_vertices_from_nuclear,
                                   wealthy_assignment, wealthy_size,
                                   wealthy_variants)


def random_coloring(rng, k, l, n):
    edges = list(combinations(range(1, n + 1), k))
    return Coloring(k, l, n, tuple(rng.randint(0, l - 1) for _ in edges))


def parity_coloring(n):
    """Color every triple by the parity of its least vertex."""
    return Coloring.from_function(3, 2, n, lambda e: e[0] % 2)


class TestNuclearDecomposition:
    def test_constant_is_one_interval(self):
        nd = nuclear_decomposition(Coloring.constant(3, 2, 7, 1))
        assert nd.intervals == ((1, 7),)
        assert nd.colors == (1,)
        assert nd.length == 1

    def test_short_tail_has_no_color(self):
        c = Coloring.from_map(3, 2, 10,
                              {(2, 3, 4): 1, (5, 6, 7): 1, (8, 9, 10): 1})
        nd = nuclear_decomposition(c)
        assert nd.intervals == ((1, 3), (4, 6), (7, 9), (10, 10))
        assert nd.colors == (0, 0, 0, None)

    def test_alternating_blocks(self):
        nd = nuclear_decomposition(parity_coloring(12))
        assert nd.intervals == ((1, 3), (4, 6), (7, 9), (10, 12))
        assert nd.colors == (1, 0, 1, 0)

    def test_partition_and_maximality(self):
        rng = Lcg(2024)
        for _ in range(40):
            n = rng.randint(3, 11)
            c = random_coloring(rng, 3, 2, n)
            nd = nuclear_decomposition(c)
            # contiguous cover of [n]
            assert nd.intervals[0][0] == 1
            assert nd.intervals[-1][1] == n
            for (a, b), (a2, _) in zip(nd.intervals, nd.intervals[1:]):
                assert a2 == b + 1
            for (a, b), col in zip(nd.intervals, nd.colors):
                hom = homogeneity(c, range(a, b + 1))
                assert hom.homogeneous
                assert hom.color == col
            # greedy means every part but the last refuses one more vertex
            for (a, b) in nd.intervals[:-1]:
                assert not homogeneity(c, range(a, b + 2)).homogeneous

    def test_internal_intervals_span_an_edge(self):
        rng = Lcg(55)
        for _ in range(40):
            n = rng.randint(3, 11)
            nd = nuclear_decomposition(random_coloring(rng, 3, 2, n))
            for (a, b), col in zip(nd.intervals[:-1], nd.colors[:-1]):
                assert b - a + 1 >= 3
                assert col is not None


class TestCrossingMatrix:
    def test_entries_and_stars(self):
        c = Coloring.from_map(3, 2, 6, {(1, 2, 3): 1, (2, 3, 4): 1})
        m = crossing_matrix(c, (1, 2), (2, 3), (3, 4))
        assert m.to_text() == ("matrix3 r=2 s=2 t=2\n"
                               "1*\n**\n00\n*1\n")

    def test_stars_exactly_at_repeats(self):
        rng = Lcg(99)
        c = random_coloring(rng, 3, 2, 8)
        xs, ys, zs = (1, 3, 5), (2, 3, 6), (5, 6, 7)
        m = crossing_matrix(c, xs, ys, zs)
        for i, x in enumerate(xs, start=1):
            for j, y in enumerate(ys, start=1):
                for kk, z in enumerate(zs, start=1):
                    if len({x, y, z}) == 3:
                        assert m.at(i, j, kk) == c.color((x, y, z))
                    else:
                        assert m.at(i, j, kk) is None

    def test_base_sets_are_sorted_and_deduplicated(self):
        rng = Lcg(7)
        c = random_coloring(rng, 3, 2, 6)
        a = crossing_matrix(c, (2, 1, 2), (3, 4), (5, 6))
        b = crossing_matrix(c, (1, 2), (3, 4), (5, 6))
        assert a.entries == b.entries

    def test_rejects_bad_input(self):
        with pytest.raises(ValueError):
            crossing_matrix(Coloring.constant(4, 2, 6, 0), (1,), (2,), (3,))
        c = Coloring.constant(3, 2, 6, 0)
        with pytest.raises(ValueError):
            crossing_matrix(c, (), (1,), (2,))
        with pytest.raises(ValueError):
            crossing_matrix(c, (0, 1), (2,), (3,))
        with pytest.raises(ValueError):
            crossing_matrix(c, (1,), (2,), (6, 7))


class TestTameness:
    def test_constant_is_tame(self):
        rep = is_p_tame(Coloring.constant(3, 2, 9, 0), 3)
        assert rep.tame
        assert rep.conditions == (True,) * 5
        assert rep.witness is None

    def test_too_many_intervals(self):
        c = Coloring.from_map(3, 2, 10,
                              {(2, 3, 4): 1, (5, 6, 7): 1, (8, 9, 10): 1})
        rep = is_p_tame(c, 3)
        assert rep.conditions == (False, True, True, True, True)
        assert not rep.tame
        w = rep.witness
        assert (w.condition, w.intervals, w.metric, w.value) == \
            (1, (), "length", 4)

    def test_triple_alternation_violation(self):
        c = Coloring.from_map(3, 2, 10, {(2, 3, 5): 1, (6, 7, 8): 1,
                                         (2, 6, 9): 1, (4, 6, 9): 1})
        assert nuclear_decomposition(c).intervals == ((1, 4), (5, 7), (8, 10))
        rep = is_p_tame(c, 3)
        assert rep.conditions == (True, False, True, True, True)
        w = rep.witness
        assert (w.condition, w.intervals, w.metric, w.value) == \
            (2, (1, 2, 3), "al", 4)

    def test_doubled_pair_violation(self):
        # alternating colors along one interval against a fixed pair
        c = Coloring.from_map(3, 2, 9, {(i, 5, 8): i % 2 for i in (1, 2, 3, 4)})
        assert nuclear_decomposition(c).intervals == ((1, 7), (8, 9))
        rep = is_p_tame(c, 3)
        assert rep.conditions == (True, True, True, False, False)
        w = rep.witness
        assert (w.condition, w.intervals, w.metric, w.value) == \
            (4, (1, 1, 2), "al", 4)

    def test_evaluates_all_conditions(self):
        # the report carries every failing condition, not just the first
        c = Coloring.from_map(3, 2, 9, {(i, 5, 8): i % 2 for i in (1, 2, 3, 4)})
        rep = is_p_tame(c, 3)
        assert rep.conditions[3] is False and rep.conditions[4] is False
        assert rep.witness.condition == 4

    def test_higher_threshold_recovers(self):
        c = Coloring.from_map(3, 2, 9, {(i, 5, 8): i % 2 for i in (1, 2, 3, 4)})
        assert is_p_tame(c, 5).tame

    def test_input_validation(self):
        with pytest.raises(ValueError):
            is_p_tame(Coloring.constant(3, 2, 6, 0), 2)
        with pytest.raises(ValueError):
            is_p_tame(Coloring.constant(2, 2, 6, 0), 3)
        with pytest.raises(ValueError):
            is_p_tame(Coloring.constant(3, 3, 6, 0), 3)

    def test_pair_matrices_match_direct_metrics(self):
        rng = Lcg(321)
        for _ in range(10):
            c = random_coloring(rng, 3, 2, rng.randint(6, 9))
            nd = nuclear_decomposition(c)
            if nd.length < 2:
                continue
            ivs = [tuple(range(a, b + 1)) for a, b in nd.intervals]
            rep = is_p_tame(c, 3)
            ok = True
            for u, v in combinations(range(nd.length), 2):
                for sets in ((ivs[u], ivs[u], ivs[v]),
                             (ivs[u], ivs[v], ivs[v])):
                    if metrics3(crossing_matrix(c, *sets)).al > 3:
                        ok = False
            assert rep.conditions[3] == ok


class TestRichness:
    def test_window_edges_frozen(self):
        assert rich_window_edges(3, 4, 0, 1, 2) == \
            ((1, 5, 6), (2, 5, 6), (3, 5, 6))
        assert rich_window_edges(3, 4, 1, 1, 1) == \
            ((1, 2, 6), (1, 3, 6), (1, 4, 6))
        assert rich_window_edges(3, 4, 0, 3, 0) == \
            ((1, 2, 3), (2, 3, 4), (3, 4, 5))

    def test_window_edges_validation(self):
        with pytest.raises(ValueError):
            rich_window_edges(3, 4, 1, 1, 2)
        with pytest.raises(ValueError):
            rich_window_edges(3, 4, 2, 0, 1)
        with pytest.raises(ValueError):
            rich_window_edges(3, 2, 0, 3, 0)

    def test_recognizes_sliding_pattern(self):
        c = Coloring.from_map(3, 2, 6, {(3, 5, 6): 1})
        w = is_r_rich(c, 4)
        assert (w.r, w.f, w.g, w.h) == (4, 0, 1, 2)
        assert w.colors == (0, 1)
        assert w.edges == ((1, 5, 6), (2, 5, 6), (3, 5, 6))

    def test_scan_returns_first_shape(self):
        # at r = k several shapes coincide; the (f, g, h)-lex first wins
        c = Coloring.from_map(3, 2, 4, {(2, 3, 4): 1})
        w = is_r_rich(c, 3)
        assert (w.f, w.g, w.h) == (0, 1, 2)

    def test_exact_recovery_with_neutral_filler(self):
        from hypergrowth.constructions import make_rich
        for f in range(3):
            for g in range(1, 4 - f):
                h = 3 - f - g
                c = make_rich(3, 4, f, g, h, a=0, b=1, filler=2, l=3)
                w = is_r_rich(c, 4)
                assert (w.f, w.g, w.h) == (f, g, h)
                assert w.colors == (0, 1)

    def test_wrong_size_or_small_r(self):
        assert is_r_rich(Coloring.constant(3, 2, 5, 0), 4) is None
        assert is_r_rich(Coloring.constant(3, 2, 2, 0), 2) is None

    def test_deletions_are_distinct(self):
        from hypergrowth.constructions import make_rich
        for r in (4, 5, 6):
            c = make_rich(3, r, 1, 1, 1, a=0, b=1)
            dels = rich_deletions(c, r, 1, 1, 1)
            assert len(dels) == r - 1
            assert len(set(dels)) == r - 1
            assert {d.n for d in dels} == {r}

    def test_deletions_size_check(self):
        with pytest.raises(SizeMismatchError):
            rich_deletions(Coloring.constant(3, 2, 5, 0), 4, 0, 1, 2)


class TestSimplicity:
    def test_small_colorings_pass_vacuously(self):
        assert is_c_simple(Coloring.constant(3, 2, 9, 1), 3) is None

    def test_middle_inhomogeneity(self):
        v = is_c_simple(Coloring.from_map(3, 2, 10, {(4, 5, 6): 1}), 3)
        assert v.condition == "C1"
        assert v.edges == ((4, 5, 6), (4, 5, 7))
        assert v.colors == (1, 0)

    def test_completion_dependence(self):
        v = is_c_simple(Coloring.from_map(3, 2, 14, {(1, 2, 7): 1}), 3)
        assert v.condition == "C2"
        assert v.vertices == (1, 2)
        assert v.pivots == (7, 8)
        assert v.colors == (1, 0)

    def test_boundary_edges_are_unconstrained(self):
        # an edge entirely outside the deep middle cannot violate anything
        assert is_c_simple(Coloring.from_map(3, 2, 14, {(1, 2, 12): 1}), 3) \
            is None

    def test_narrow_boundary_rejected(self):
        with pytest.raises(ValueError):
            is_c_simple(Coloring.constant(3, 2, 9, 0), 2)

    def test_constant_always_simple(self):
        for n in range(1, 16):
            assert is_c_simple(Coloring.constant(3, 2, n, 0), 3) is None


class TestWealthyVariants:
    def test_variant_counts(self):
        expect = {"W1'": 4, "W1''": 2, "W2.1": 48, "W2.2": 48,
                  "W3.1": 96, "W3.2": 96, "W3.3": 2, "W4.1": 1, "W4.2": 4}
        for fam, want in expect.items():
            vs = wealthy_variants(fam, 3)
            assert len(vs) == want
            assert len(set(vs)) == want

    def test_sizes(self):
        assert [wealthy_size(f, 3) for f in WEALTHY_FAMILIES] == \
            [3, 3, 7, 7, 9, 9, 10, 12, 12]
        with pytest.raises(ValueError):
            wealthy_size("W5", 3)
        with pytest.raises(ValueError):
            wealthy_size("W1'", 0)

    def test_text_round_trip(self):
        for fam in WEALTHY_FAMILIES:
            for v in wealthy_variants(fam, 3):
                assert variant_from_text(fam, variant_to_text(fam, v)) == v

    def test_text_rejects_malformed(self):
        with pytest.raises(ValueError):
            variant_from_text("W4.1", "rev:0")
        with pytest.raises(ValueError):
            variant_from_text("W1'", "colors:12,rev:0")
        with pytest.raises(ValueError):
            variant_from_text("W1'", "colors:01")
        with pytest.raises(ValueError):
            variant_from_text("W2.1", "swap:0,rev:00,perm:123,extra:1")
        with pytest.raises(ValueError):
            variant_from_text("W2.1", "swap:2,rev:00,perm:123")
        with pytest.raises(ValueError):
            variant_from_text("W3.3", "rev")

    def test_variant_field_validation(self):
        with pytest.raises(ValueError):
            is_wealthy(Coloring.constant(3, 2, 3, 0), "W1'", 3,
                       WealthyVariant(colors=(0, 1), swap=True))
        with pytest.raises(ValueError):
            is_wealthy(Coloring.constant(3, 2, 7, 0), "W2.1", 3,
                       WealthyVariant(swap=False, reversals=(False,),
                                      perm=(1, 2, 3)))


class TestWealthyRecognition:
    def test_witness_report_format(self):
        v = wealthy_variants("W2.1", 2)[0]
        c = Coloring.from_map(3, 2, 5, wealthy_assignment("W2.1", 2, v))
        w = is_wealthy(c, "W2.1", 2)
        assert w.to_text() == ("wealthy family=W2.1 r=2 "
                               "variant=swap:0,rev:00,perm:123 "
                               "base=[1,2]|[3,4]|[5]")

    def test_alternating_pair_family(self):
        asg = wealthy_assignment("W1'", 6, WealthyVariant(colors=(1, 0)))
        assert asg == {(1, 2, 3): 0, (1, 2, 4): 1, (1, 2, 5): 0, (1, 2, 6): 1}
        w = is_wealthy(Coloring.from_map(3, 2, 6, asg), "W1'", 6)
        assert w is not None
        assert w.variant.colors == (1, 0)

    def test_tiny_sizes_always_qualify(self):
        # with r <= 2 the alternating families impose no constraints
        for r in (1, 2):
            assert is_wealthy(Coloring.constant(3, 2, r, 0), "W1'", r)
            assert is_wealthy(Coloring.constant(3, 2, r, 0), "W1''", r)

    def test_round_trip_every_variant(self):
        for fam in WEALTHY_FAMILIES:
            r = 3
            for v in wealthy_variants(fam, r):
                c = Coloring.from_map(3, 2, wealthy_size(fam, r),
                                      wealthy_assignment(fam, r, v))
                targeted = is_wealthy(c, fam, r, v)
                assert targeted is not None, (fam, v)
                assert targeted.variant == v
                scanned = is_wealthy(c, fam, r)
                assert scanned is not None, (fam, v)

    def test_reversal_closure(self):
        for fam in WEALTHY_FAMILIES:
            r = 3
            v = wealthy_variants(fam, r)[0]
            c = Coloring.from_map(3, 2, wealthy_size(fam, r),
                                  wealthy_assignment(fam, r, v))
            assert is_wealthy(reverse(c), fam, r) is not None, fam

    def test_swap_closure_for_matrix_families(self):
        for fam in ("W2.1", "W2.2", "W3.1", "W3.2"):
            v = wealthy_variants(fam, 3)[0]
            c = Coloring.from_map(3, 2, wealthy_size(fam, 3),
                                  wealthy_assignment(fam, 3, v))
            flipped = Coloring(3, 2, c.n, tuple(1 - x for x in c.colors))
            assert is_wealthy(flipped, fam, 3) is not None, fam

    def test_monochromatic_rejected_by_quadruple_family(self):
        assert is_wealthy(Coloring.constant(3, 2, 8, 0), "W4.1", 2) is None
        assert is_wealthy(Coloring.constant(3, 2, 8, 1), "W4.1", 2) is None

    def test_existential_families_report_triples(self):
        v = wealthy_variants("W3.3", 2)[0]
        c = Coloring.from_map(3, 2, 7, wealthy_assignment("W3.3", 2, v))
        w = is_wealthy(c, "W3.3", 2)
        assert w.triples is not None and len(w.triples) == 2
        apex = 7
        for (a, b, d), i in zip(w.triples, (1, 2)):
            block = {3 * i - 2, 3 * i - 1, 3 * i}
            assert {a, b, d} <= block
            assert c.color((a, b, apex)) != c.color((a, d, apex))

    def test_size_mismatch_raises(self):
        with pytest.raises(SizeMismatchError):
            is_wealthy(Coloring.constant(3, 2, 6, 0), "W2.1", 2)

    def test_wrong_arity_raises(self):
        with pytest.raises(ValueError):
            is_wealthy(Coloring.constant(2, 2, 5, 0), "W1'", 5)
        with pytest.raises(ValueError):
            is_wealthy(Coloring.constant(3, 3, 5, 0), "W1'", 5)


class TestQuadrupleExtraction:
    def test_from_alternating_blocks(self):
        c = parity_coloring(12)
        vs = w41_vertices_from_nuclear(c, 2)
        assert vs == (1, 2, 3, 4, 7, 8, 9, 10)
        sub = restrict_normalize(c, vs)
        assert is_wealthy(sub, "W4.1", 2) is not None

    def test_random_long_decompositions(self):
        rng = Lcg(1234)
        built = 0
        while built < 5:
            c = random_coloring(rng, 3, 2, 14)
            nd = nuclear_decomposition(c)
            if nd.length < 4:
                continue
            built += 1
            vs = w41_vertices_from_nuclear(c, 2)
            assert len(vs) == 8 and len(set(vs)) == 8
            sub = restrict_normalize(c, vs)
            assert is_wealthy(sub, "W4.1", 2) is not None

    def test_needs_enough_intervals(self):
        with pytest.raises(ValueError):
            w41_vertices_from_nuclear(Coloring.constant(3, 2, 8, 0), 2)
        with pytest.raises(ValueError):
            w41_vertices_from_nuclear(Coloring.constant(4, 2, 8, 0), 2)
