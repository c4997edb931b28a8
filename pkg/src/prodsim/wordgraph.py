"""Word graphs: reduction DAGs of double occurrence words.

The graph rooted at w has w and all iterated-deletion successors as
vertices and an edge w -> v for each immediate successor v.  Rooted word
graphs are consistently directed with source w and target the empty word.
"""

from __future__ import annotations

from dataclasses import dataclass

from .digraph import Digraph
from .dow import Dow, concat, format_word, successors


def word_label(w: Dow) -> str:
    """Vertex label: comma-separated symbols, "e" for the empty word."""
    if not w:
        return "e"
    return format_word(w.symbols, commas=True)


@dataclass(frozen=True)
class WordGraph:
    """A digraph whose vertices are canonical words; root is None for the
    global graph on all words up to a given size."""

    graph: Digraph
    words: dict  # label -> Dow
    root: Dow | None = None

    def word_set(self) -> set:
        return set(self.words.values())

    def __contains__(self, w: Dow) -> bool:
        return word_label(w) in self.words


def rooted_word_graph(d: Dow) -> WordGraph:
    """Breadth-first closure of immediate successors, memoized on canonical
    forms."""
    frontier = [d]
    seen = {d}
    order = [d]
    edges = []
    while frontier:
        nxt = []
        for w in frontier:
            for v in successors(w):
                edges.append((word_label(w), word_label(v)))
                if v not in seen:
                    seen.add(v)
                    order.append(v)
                    nxt.append(v)
        frontier = nxt
    graph = Digraph([word_label(w) for w in order], edges)
    return WordGraph(graph, {word_label(w): w for w in order}, d)


def enumerate_dows(n: int) -> list[Dow]:
    """All canonical double occurrence words of size exactly n, sorted."""
    if n < 0:
        raise ValueError("size must be nonnegative")
    if n == 0:
        return [Dow()]
    slots = [0] * (2 * n)
    out = []

    def place(k):
        if k > n:
            out.append(Dow(tuple(slots)))
            return
        first = slots.index(0)
        slots[first] = k
        for j in range(first + 1, 2 * n):
            if slots[j] == 0:
                slots[j] = k
                place(k + 1)
                slots[j] = 0
        slots[first] = 0

    place(1)
    return sorted(out, key=lambda w: w.symbols)


def global_word_graph(n: int) -> WordGraph:
    """The graph on all canonical words of size <= n with deletion edges."""
    if n < 0:
        raise ValueError("size must be nonnegative")
    words = []
    for k in range(n + 1):
        words.extend(enumerate_dows(k))
    edges = []
    for w in words:
        for v in successors(w):
            edges.append((word_label(w), word_label(v)))
    graph = Digraph([word_label(w) for w in words], edges)
    return WordGraph(graph, {word_label(w): w for w in words}, None)


def are_coprime(d1: Dow, d2: Dow) -> bool:
    """True when all concatenations u v over the two word graphs' vertex sets
    land in distinct ascending-order classes."""
    left = sorted(rooted_word_graph(d1).word_set(), key=lambda w: w.symbols)
    right = sorted(rooted_word_graph(d2).word_set(), key=lambda w: w.symbols)
    seen = set()
    for u in left:
        for v in right:
            c = concat(u, v)
            if c in seen:
                return False
            seen.add(c)
    return True
