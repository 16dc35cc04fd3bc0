import random

import networkx as nx
import pytest

from oracles import brute_automorphisms, brute_min_codes
from walksym import kernels
from walksym.errors import Disconnected
from walksym.graph import Graph, complete, cycle, hypercube, path, petersen, star
from walksym.symmetry import (
    automorphism_orbits,
    canonical_form,
    canonical_labeling,
    is_distance_regular,
    is_vertex_transitive,
    refine,
)


def _orbit_sets(g):
    return sorted(sorted(o) for o in automorphism_orbits(g).orbits())


class TestOrbits:
    def test_path(self):
        assert _orbit_sets(path(3)) == [[0, 2], [1]]

    @pytest.mark.parametrize("n", [1, 2, 5, 8])
    def test_complete(self, n):
        assert automorphism_orbits(complete(n)).count == 1

    def test_star(self):
        assert _orbit_sets(star(3)) == [[0], [1, 2, 3]]

    def test_vertex_transitive_examples(self):
        assert is_vertex_transitive(petersen())
        assert not is_vertex_transitive(path(3))
        assert is_vertex_transitive(cycle(7))
        assert is_vertex_transitive(hypercube(5))

    def test_matches_brute_force_n_le_6(self, corpus6):
        for g in corpus6:
            autos = brute_automorphisms(g)
            orb = automorphism_orbits(g)
            for v in range(g.n):
                expected = {p[v] for p in autos}
                got = {u for u in range(g.n) if orb.orbit_of[u] == orb.orbit_of[v]}
                assert got == expected, str(g)

    def test_degree_constant_on_orbits(self, corpus7):
        for g in corpus7:
            for orbit in automorphism_orbits(g).orbits():
                assert len({g.degrees[v] for v in orbit}) == 1

    def test_generators_are_automorphisms(self):
        from walksym.symmetry import automorphism_generators

        for g in (petersen(), hypercube(4), cycle(9)):
            for gamma in automorphism_generators(g):
                assert g.relabel(gamma) == g


class TestCanonicalForm:
    def test_triangle(self):
        assert len({canonical_form(complete(3).relabel(p)) for p in [(0, 1, 2), (2, 0, 1), (1, 0, 2)]}) == 1

    def test_path_relabeled(self):
        abc = Graph.from_edges(3, [(0, 1), (1, 2)])
        bac = Graph.from_edges(3, [(0, 1), (0, 2)])
        assert canonical_form(abc) == canonical_form(bac)

    def test_two_classes_n3(self):
        assert canonical_form(path(3)) != canonical_form(complete(3))

    @pytest.mark.parametrize("n", [1, 2, 3, 4, 5, 6])
    def test_classes_match_brute_force_minimum(self, n):
        # same partition of labeled connected graphs as the all-permutation minimum
        codes = kernels.scan_codes(n, require_sorted=False)
        mins = brute_min_codes(n, codes).tolist()
        pairing = {}
        back = {}
        for code, m in zip(codes.tolist(), mins):
            c = canonical_form(Graph.from_code(n, code))
            assert pairing.setdefault(m, c) == c
            assert back.setdefault(c, m) == m

    @pytest.mark.parametrize("g", [petersen(), hypercube(3), hypercube(5), cycle(12), complete(6), path(9),
                                   star(5), Graph.from_edges(7, [(0, 1), (1, 2), (2, 0), (2, 3), (3, 4), (4, 5), (5, 6)])])
    def test_invariant_under_100_relabelings(self, g):
        rnd = random.Random(1234)
        ref = canonical_form(g)
        for _ in range(100):
            perm = list(range(g.n))
            rnd.shuffle(perm)
            assert canonical_form(g.relabel(perm)) == ref

    def test_labeling_produces_form(self):
        g = petersen()
        assert g.relabel(canonical_labeling(g)).__str__().encode() == canonical_form(g)


class TestRefine:
    def test_equitable(self):
        g = star(4)
        cells = refine(g.rows, [list(range(g.n))])
        assert sorted(map(sorted, cells)) == [[0], [1, 2, 3, 4]]
        for cell in cells:
            for other in cells:
                mask = sum(1 << v for v in other)
                assert len({bin(g.rows[v] & mask).count("1") for v in cell}) == 1


class TestDistanceRegular:
    def test_c5(self):
        arr = is_distance_regular(cycle(5))
        assert (arr.diameter, arr.b, arr.c) == (2, (2, 1), (1, 1))

    def test_petersen(self):
        arr = is_distance_regular(petersen())
        assert (arr.diameter, arr.b, arr.c) == (2, (3, 2), (1, 1))
        assert str(arr) == "{3,2;1,1}"

    def test_p4(self):
        assert is_distance_regular(path(4)) is None

    def test_disconnected(self):
        with pytest.raises(Disconnected):
            is_distance_regular(Graph.from_edges(4, [(0, 1), (2, 3)]))

    def test_matches_networkx(self, corpus7):
        for g in corpus7:
            if g.n < 2:
                continue
            h = nx.Graph(g.edges())
            ours = is_distance_regular(g)
            assert (ours is not None) == nx.is_distance_regular(h), str(g)
            if ours is not None:
                b, c = nx.intersection_array(h)
                assert list(ours.b) == b and list(ours.c) == c
