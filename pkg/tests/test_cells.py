"""Cell detection, canonical orientation, boundary operator, face closure."""

import random
from itertools import combinations, permutations

import pytest

from prodsim import (
    Cell,
    Digraph,
    Dow,
    build_complex,
    cartesian_product,
    enumerate_prod_cells,
    enumerate_simplices,
    facets,
    global_word_graph,
    parse_word,
    rooted_word_graph,
    three_square_sphere,
    tennis_sphere,
)
from prodsim.cells import complex_to_json


def simplex_digraph(n):
    vs = [f"v{i}" for i in range(n + 1)]
    return Digraph(vs, [(vs[i], vs[j]) for i in range(n + 1) for j in range(i + 1, n + 1)])


def edge_graph(a="a", b="b"):
    return Digraph([a, b], [(a, b)])


def cube_graph():
    e = edge_graph()
    return cartesian_product(cartesian_product(e, e), e)


def count_squares_brute(g):
    """Oracle: four-vertex subsets whose induced subgraph is exactly the
    square digraph s -> a, s -> b, a -> t, b -> t."""
    count = 0
    for quad in combinations(sorted(g.vertices), 4):
        induced = {(u, v) for u in quad for v in quad if u != v and g.has_edge(u, v)}
        for s, a, b, t in permutations(quad):
            if a < b and induced == {(s, a), (s, b), (a, t), (b, t)}:
                count += 1
                break
    return count


class TestSimplices:
    def test_full_simplex(self):
        cells = enumerate_simplices(simplex_digraph(3), 3)
        assert [len(cells[d]) for d in range(4)] == [4, 6, 4, 1]

    def test_directed_triangle_has_no_2_simplex(self):
        g = Digraph(["a", "b", "c"], [("a", "b"), ("b", "c"), ("c", "a")])
        cells = enumerate_simplices(g, 2)
        assert len(cells[1]) == 3
        assert cells[2] == []

    def test_transitive_triangle(self):
        g = Digraph(["a", "b", "c"], [("a", "b"), ("b", "c"), ("a", "c")])
        cells = enumerate_simplices(g, 2)
        assert len(cells[2]) == 1
        assert cells[2][0].grid == ("a", "b", "c")

    def test_simplex_counts_binomial(self):
        # transitive tournament on m vertices has C(m, n+1) n-simplices
        from math import comb
        for m in (4, 5, 6):
            cells = enumerate_simplices(simplex_digraph(m - 1), m - 1)
            for n in range(m):
                assert len(cells[n]) == comb(m, n + 1)


class TestProdCells:
    def test_square_graph(self):
        g = cartesian_product(edge_graph(), edge_graph("x", "y"))
        cells = enumerate_prod_cells(g, 2)
        assert len(cells[2]) == 1
        assert cells[2][0].shape == (1, 1)

    def test_path_square_has_no_2_cells(self):
        g = Digraph(["v0", "v1", "v2", "v3"],
                    [("v0", "v3"), ("v0", "v1"), ("v1", "v2"), ("v2", "v3")])
        cells = enumerate_prod_cells(g, 2)
        assert cells[2] == []

    def test_cube_census(self):
        g = cube_graph()
        cx = build_complex(g, 3)
        assert count_squares_brute(g) == 6
        assert len([c for c in cx.cells[2] if c.shape == (1, 1)]) == 6
        assert len(cx.cells[3]) == 1
        assert cx.cells[3][0].shape == (1, 1, 1)
        assert cx.cells[3][0].vertices() == set(g.vertices)

    def test_squares_match_brute_force_on_random_dags(self):
        rng = random.Random(71)
        for _ in range(40):
            n = rng.randint(3, 7)
            vs = [f"v{i}" for i in range(n)]
            es = [(vs[i], vs[j]) for i in range(n) for j in range(i + 1, n)
                  if rng.random() < 0.5]
            g = Digraph(vs, es)
            cx = build_complex(g, 2)
            squares = [c for c in cx.cells[2] if c.shape == (1, 1)]
            assert len(squares) == count_squares_brute(g)


def _skeleton_edges(shape):
    sizes = [n + 1 for n in shape]
    import itertools
    multis = list(itertools.product(*(range(s) for s in sizes)))
    edges = set()
    for i, a in enumerate(multis):
        for j, b in enumerate(multis):
            diff = [k for k in range(len(shape)) if a[k] != b[k]]
            if len(diff) == 1 and a[diff[0]] < b[diff[0]]:
                edges.add((i, j))
    return multis, edges


def brute_force_cells(g, shape):
    """Oracle: try every injective assignment of vertices to grid positions
    and keep those whose induced subgraph equals the product skeleton."""
    multis, skeleton = _skeleton_edges(shape)
    total = len(multis)
    found = set()
    for subset in combinations(sorted(g.vertices), total):
        for perm in permutations(subset):
            ok = True
            for i in range(total):
                for j in range(total):
                    if i == j:
                        continue
                    if g.has_edge(perm[i], perm[j]) != ((i, j) in skeleton):
                        ok = False
                        break
                if not ok:
                    break
            if ok:
                found.add(Cell.canonical(shape, perm))
    return found


class TestBruteForceDimensionThree:
    def _graphs(self):
        # products carry prisms and cubes; perturbations exercise rejection
        rng = random.Random(107)
        tri = Digraph(["a", "b", "c"], [("a", "b"), ("b", "c"), ("a", "c")])
        cases = [cube_graph(), cartesian_product(tri, edge_graph("x", "y"))]
        prism = cartesian_product(tri, edge_graph("x", "y"))
        extra = Digraph(list(prism.vertices) + ["w"],
                        list(prism.edges) + [("(c|y)", "w"), ("(a|x)", "w")])
        cases.append(extra)
        chopped = Digraph(prism.vertices,
                          [e for e in prism.edges if e != ("(a|x)", "(b|x)")])
        cases.append(chopped)
        for _ in range(4):
            n = rng.randint(5, 8)
            vs = [f"v{i}" for i in range(n)]
            es = [(vs[i], vs[j]) for i in range(n) for j in range(i + 1, n)
                  if rng.random() < 0.55]
            cases.append(Digraph(vs, es))
        return cases

    def test_cell_census_matches_oracle(self):
        coverage = {(3,): 0, (2, 1): 0, (1, 1, 1): 0}
        for g in self._graphs():
            cx = build_complex(g, 3)
            by_shape = {}
            for c in cx.cells[3]:
                by_shape.setdefault(c.shape, set()).add(c)
            for shape in coverage:
                expected = brute_force_cells(g, shape)
                assert by_shape.get(shape, set()) == expected, (shape, sorted(g.edges))
                coverage[shape] += len(expected)
        # the corpus must actually exercise every shape
        assert all(coverage[s] > 0 for s in coverage), coverage


class TestBuildComplex:
    def test_three_square_sphere_cells(self):
        cx = build_complex(three_square_sphere(), 3)
        quads = {frozenset(c.vertices()) for c in cx.cells[2]}
        assert quads == {frozenset({"v0", "v1", "v4", "v2"}),
                         frozenset({"v0", "v2", "v4", "v3"}),
                         frozenset({"v0", "v1", "v4", "v3"})}

    def test_tennis_cells(self):
        cx = build_complex(tennis_sphere(), 3)
        quads = {frozenset(c.vertices()) for c in cx.cells[2]}
        assert quads == {frozenset({"v0", "v1", "v3", "v2"}),
                         frozenset({"v0", "v1", "v4", "v2"}),
                         frozenset({"v1", "v3", "v5", "v4"}),
                         frozenset({"v2", "v3", "v5", "v4"})}

    def test_tennis_diagonal_swaps_square_for_triangles(self):
        cx = build_complex(tennis_sphere(True), 3)
        shapes = sorted(c.shape for c in cx.cells[2])
        assert shapes == [(1, 1), (1, 1), (1, 1), (2,), (2,)]
        triangles = {c.grid for c in cx.cells[2] if c.shape == (2,)}
        assert triangles == {("v0", "v1", "v3"), ("v0", "v2", "v3")}

    def test_global_word_graph_two(self):
        cx = build_complex(global_word_graph(2).graph, 3)
        assert cx.counts() == {0: 5, 1: 4, 2: 0, 3: 0}

    def test_face_closure(self):
        rng = random.Random(73)
        for _ in range(30):
            word = [s for s in range(1, rng.randint(1, 5) + 1) for _ in range(2)]
            rng.shuffle(word)
            cx = build_complex(rooted_word_graph(Dow(word)).graph, 4)
            for d in range(1, 5):
                for cell in cx.cells.get(d, []):
                    for fac, _ in facets(cell):
                        assert fac in cx.index[d - 1]

    def test_no_duplicate_cells(self):
        cx = build_complex(cube_graph(), 3)
        for d, cells in cx.cells.items():
            assert len(cells) == len(set(cells))

    def test_deterministic_construction(self):
        g = rooted_word_graph(Dow(parse_word("12132434"))).graph
        a = build_complex(g, 3)
        b = build_complex(g, 3)
        assert a.cells == b.cells
        for n in (1, 2):
            assert a.boundary_matrix(n).triplets() == b.boundary_matrix(n).triplets()

    def test_cyclic_graph_accepted(self):
        g = Digraph(["a", "b", "c"], [("a", "b"), ("b", "c"), ("c", "a")])
        cx = build_complex(g, 2)
        assert cx.counts() == {0: 3, 1: 3, 2: 0}


class TestFacets:
    def test_edge(self):
        cell = Cell((1,), ("u", "v"))
        assert facets(cell) == [(Cell((), ("v",)), 1), (Cell((), ("u",)), -1)]

    def test_triangle(self):
        cell = Cell((2,), ("a", "b", "c"))
        assert facets(cell) == [
            (Cell((1,), ("b", "c")), 1),
            (Cell((1,), ("a", "c")), -1),
            (Cell((1,), ("a", "b")), 1),
        ]

    def test_square_signs(self):
        # hand expansion of the product rule on factors ([a,b],[x,y]):
        # +((b,x),(b,y)), -((a,x),(a,y)), -((a,y),(b,y)), +((a,x),(b,x));
        # in grid positions: +(g2,g3), -(g0,g1), -(g1,g3), +(g0,g2)
        g0, g1, g2, g3 = "p", "q", "r", "s"
        cell = Cell((1, 1), (g0, g1, g2, g3))
        got = {(f.grid, s) for f, s in facets(cell)}
        assert got == {((g2, g3), 1), ((g0, g1), -1), ((g1, g3), -1), ((g0, g2), 1)}
        # the total boundary of the signed edge boundary vanishes
        acc = {}
        for f, s in facets(cell):
            for vf, vs in facets(f):
                key = vf.grid[0]
                acc[key] = acc.get(key, 0) + s * vs
        assert all(v == 0 for v in acc.values())

    def test_vertex_has_no_facets(self):
        with pytest.raises(ValueError):
            facets(Cell((), ("v",)))

    def test_boundary_squares_to_zero_everywhere(self):
        rng = random.Random(79)
        graphs = [cube_graph(), three_square_sphere(), tennis_sphere(True)]
        for _ in range(25):
            word = [s for s in range(1, rng.randint(1, 5) + 1) for _ in range(2)]
            rng.shuffle(word)
            graphs.append(rooted_word_graph(Dow(word)).graph)
        for g in graphs:
            cx = build_complex(g, 4)
            cx.check_boundary_squares_to_zero()


class TestBoundaryMatrix:
    def test_single_edge(self):
        cx = build_complex(edge_graph(), 1)
        m = cx.boundary_matrix(1)
        assert (m.nrows, m.ncols) == (2, 1)
        assert m.triplets() == [(0, 0, -1), (1, 0, 1)]

    def test_pentagon_rank(self):
        from prodsim import rational_rank, snf
        g = rooted_word_graph(Dow(parse_word("121323"))).graph
        cx = build_complex(g, 2)
        m = cx.boundary_matrix(1)
        assert (m.nrows, m.ncols) == (5, 5)
        assert rational_rank(m) == 4
        assert snf(m).rank == 4

    def test_out_of_range(self):
        cx = build_complex(edge_graph(), 1)
        with pytest.raises(ValueError):
            cx.boundary_matrix(2)
        with pytest.raises(ValueError):
            cx.boundary_matrix(0)

    def test_json_dump_roundtrips(self):
        import json
        cx = build_complex(three_square_sphere(), 2)
        obj = json.loads(complex_to_json(cx))
        assert obj["cells"]["2"]
        assert all(len(t) == 3 for t in obj["boundaries"]["2"]["triplets"])
