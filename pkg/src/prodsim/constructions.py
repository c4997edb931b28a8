"""Parameterized generator graphs realizing prescribed Betti numbers.

Vertex names are v0, v1, ... in wiring order so failures are easy to
diff.  Every generator is consistently directed.
"""

from __future__ import annotations

from .digraph import Digraph, glue_at_vertex


def _v(i):
    return f"v{i}"


def path_square() -> Digraph:
    """Four vertices joined by a direct edge and a parallel length-3 path;
    the complex is a circle."""
    vs = [_v(i) for i in range(4)]
    es = [(_v(0), _v(3)), (_v(0), _v(1)), (_v(1), _v(2)), (_v(2), _v(3))]
    return Digraph(vs, es)


def multiloop(k: int) -> Digraph:
    """k disjoint length-3 paths running parallel to one direct edge, giving
    first Betti number k."""
    if k < 0:
        raise ValueError("k must be nonnegative")
    vs = [_v(i) for i in range(2 * k + 2)]
    es = [(_v(0), _v(2 * k + 1))]
    for i in range(1, k + 1):
        es += [(_v(0), _v(i)), (_v(i), _v(k + i)), (_v(k + i), _v(2 * k + 1))]
    return Digraph(vs, es)


def three_square_sphere() -> Digraph:
    """Three squares on five vertices and six edges; a 2-sphere."""
    vs = [_v(i) for i in range(5)]
    es = [(_v(0), _v(1)), (_v(0), _v(2)), (_v(0), _v(3)),
          (_v(1), _v(4)), (_v(2), _v(4)), (_v(3), _v(4))]
    return Digraph(vs, es)


def tennis_sphere(with_diagonal: bool = False) -> Digraph:
    """Four squares joined like the seam of a tennis ball; a 2-sphere.

    With the diagonal, one square gains an edge between opposite corners and
    is replaced by two triangles, leaving the sphere intact.
    """
    vs = [_v(i) for i in range(6)]
    es = [(_v(0), _v(1)), (_v(0), _v(2)),
          (_v(1), _v(3)), (_v(1), _v(4)), (_v(2), _v(3)), (_v(2), _v(4)),
          (_v(3), _v(5)), (_v(4), _v(5))]
    if with_diagonal:
        es.append((_v(0), _v(3)))
    return Digraph(vs, es)


def sphere_chain(k: int) -> Digraph:
    """k three-square spheres glued in a chain, consecutive blocks sharing
    one edge; second Betti number k."""
    if k < 1:
        raise ValueError("k must be at least 1")
    vs = [_v(i) for i in range(3 * k + 2)]
    es = set()
    for j in range(1, k + 1):
        top, bottom = 3 * j - 3, 3 * j + 1
        for m in (3 * j - 2, 3 * j - 1, 3 * j):
            es.add((_v(top), _v(m)))
            es.add((_v(m), _v(bottom)))
    return Digraph(vs, sorted(es))


def lantern(k: int) -> Digraph:
    """k internally disjoint length-2 paths from one source to one target."""
    if k < 2:
        raise ValueError("k must be at least 2")
    vs = [_v(i) for i in range(k + 2)]
    es = []
    for i in range(1, k + 1):
        es += [(_v(0), _v(i)), (_v(i), _v(k + 1))]
    return Digraph(vs, es)


def mixed(k: int, l: int) -> Digraph:
    """Sphere chain of length l feeding a multiloop with k parallel paths,
    glued at a single vertex: Betti numbers (k, l) in degrees (1, 2)."""
    if k < 0 or l < 1:
        raise ValueError("need k >= 0 and l >= 1")
    spheres = sphere_chain(l).relabel({_v(i): f"u{i}" for i in range(3 * l + 2)})
    loops = multiloop(k)
    return glue_at_vertex(spheres, loops, f"u{3 * l + 1}", _v(0))


CONSTRUCTIONS = {
    "path_square": (path_square, 0),
    "multiloop": (multiloop, 1),
    "three_square_sphere": (three_square_sphere, 0),
    "tennis_sphere": (tennis_sphere, 0),
    "sphere_chain": (sphere_chain, 1),
    "lantern": (lantern, 1),
    "mixed": (mixed, 2),
}

ALIASES = {
    "path-square": "path_square",
    "square": "path_square",
    "three-squares": "three_square_sphere",
    "banana": "three_square_sphere",
    "tennis": "tennis_sphere",
    "sphere-chain": "sphere_chain",
}


def construct(name: str, args=()) -> Digraph:
    """Build a named generator graph; tennis_sphere accepts an optional
    'diagonal' argument."""
    key = ALIASES.get(name, name)
    if key not in CONSTRUCTIONS:
        known = ", ".join(sorted(CONSTRUCTIONS))
        raise ValueError(f"unknown construction {name!r} (known: {known})")
    func, arity = CONSTRUCTIONS[key]
    args = list(args)
    if key == "tennis_sphere":
        if len(args) > 1:
            raise ValueError("tennis_sphere takes at most one argument")
        if args and args[0] not in ("diagonal", "plain"):
            raise ValueError("tennis_sphere argument must be 'diagonal' or 'plain'")
        return func(bool(args) and args[0] == "diagonal")
    if len(args) != arity:
        raise ValueError(f"{key} takes {arity} integer argument(s), got {len(args)}")
    return func(*(int(a) for a in args))
