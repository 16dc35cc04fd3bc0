"""Canonical labeling, automorphism orbits, and distance-regularity.

The canonical labeling is an individualization-refinement search written
from scratch.  Each tree node holds an ordered equitable partition.  The
target cell is the first smallest non-singleton cell, and children are
visited in vertex-id order.  A leaf (discrete partition) orders the vertices,
and its certificate is the pair (sequence of node invariants along the path,
graph6 code of the relabeled graph).  The canonical form is the leaf with the
least certificate.

Pruning:

* automorphism pruning: a child is skipped when a known automorphism fixing
  the current individualized prefix maps an explored sibling onto it;
* partial-order pruning: a node whose invariant prefix exceeds the best
  leaf's is cut, unless it still agrees with the first leaf's path (those
  nodes are where new automorphisms come from).

Automorphisms are read off whenever a leaf reproduces the first or the best
leaf's certificate; the orbit partition is the union-find closure of them.
"""
from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from functools import lru_cache

from .errors import Disconnected
from .graph import Graph, _bits, is_connected, write_graph6


@dataclass(frozen=True)
class OrbitPartition:
    orbit_of: tuple[int, ...]
    count: int

    def orbits(self) -> list[list[int]]:
        out = [[] for _ in range(self.count)]
        for v, o in enumerate(self.orbit_of):
            out[o].append(v)
        return out


@dataclass(frozen=True)
class IntersectionArray:
    diameter: int
    b: tuple[int, ...]
    c: tuple[int, ...]

    def __str__(self) -> str:
        return "{" + ",".join(map(str, self.b)) + ";" + ",".join(map(str, self.c)) + "}"

    def to_dict(self):
        return {"diameter": self.diameter, "b": list(self.b), "c": list(self.c)}


# --------------------------------------------------------------------------
# refinement


def _mask(cell):
    m = 0
    for v in cell:
        m |= 1 << v
    return m


def refine(rows, cells):
    """Coarsest equitable refinement of an ordered partition.

    Cells are split by neighbour count into each splitter cell; fragments are
    ordered by ascending count, which keeps the result labeling-invariant.
    """
    cells = [list(c) for c in cells]
    while True:
        for s in range(len(cells)):
            smask = _mask(cells[s])
            out = []
            split = False
            for c in cells:
                if len(c) == 1:
                    out.append(c)
                    continue
                groups = {}
                for v in c:
                    groups.setdefault(bin(rows[v] & smask).count("1"), []).append(v)
                if len(groups) == 1:
                    out.append(c)
                else:
                    split = True
                    out.extend(groups[k] for k in sorted(groups))
            if split:
                cells = out
                break
        else:
            return cells


def _invariant(rows, cells):
    masks = [_mask(c) for c in cells]
    return tuple((len(c), tuple(bin(rows[c[0]] & m).count("1") for m in masks)) for c in cells)


def _leaf_code(rows, lab):
    code = 0
    for j in range(1, len(lab)):
        rj = rows[lab[j]]
        for i in range(j):
            code = (code << 1) | ((rj >> lab[i]) & 1)
    return code


class _UnionFind:
    def __init__(self, n):
        self.parent = list(range(n))

    def find(self, x):
        p = self.parent
        while p[x] != x:
            p[x] = p[p[x]]
            x = p[x]
        return x

    def union(self, a, b):
        ra, rb = self.find(a), self.find(b)
        if ra != rb:
            if ra < rb:
                self.parent[rb] = ra
            else:
                self.parent[ra] = rb


@dataclass(frozen=True)
class SearchResult:
    labeling: tuple[int, ...]  # position -> vertex of the canonical leaf
    code: int
    generators: tuple[tuple[int, ...], ...]
    leaves: int


class _Search:
    def __init__(self, g: Graph):
        self.g = g
        self.rows = g.rows
        self.n = g.n
        self.first = None  # (path, code, lab)
        self.best = None
        self.generators = []
        self.leaves = 0

    def run(self):
        cells = refine(self.rows, [list(range(self.n))])
        self._visit(cells, (), ())
        path, code, lab = self.best
        return SearchResult(tuple(lab), code, tuple(self.generators), self.leaves)

    def _stabilizer_orbits(self, seq):
        uf = _UnionFind(self.n)
        for gamma in self.generators:
            if all(gamma[v] == v for v in seq):
                for v in range(self.n):
                    uf.union(v, gamma[v])
        return uf

    def _visit(self, cells, seq, path):
        path = path + (_invariant(self.rows, cells),)
        if self.first is not None:
            k = len(path)
            if path != self.first[0][:k] and path > self.best[0][:k]:
                return
        if len(cells) == self.n:
            self._leaf(path, [c[0] for c in cells])
            return
        size = min(len(c) for c in cells if len(c) > 1)
        t = next(i for i, c in enumerate(cells) if len(c) == size)
        explored = []
        for v in sorted(cells[t]):
            if explored:
                uf = self._stabilizer_orbits(seq)
                if any(uf.find(v) == uf.find(w) for w in explored):
                    continue
            explored.append(v)
            child = cells[:t] + [[v], [w for w in cells[t] if w != v]] + cells[t + 1:]
            self._visit(refine(self.rows, child), seq + (v,), path)

    def _leaf(self, path, lab):
        self.leaves += 1
        code = _leaf_code(self.rows, lab)
        if self.first is None:
            self.first = self.best = (path, code, lab)
            return
        for ref in (self.first, self.best):
            if ref[0] == path and ref[1] == code:
                gamma = [0] * self.n
                for a, b in zip(ref[2], lab):
                    gamma[a] = b
                gamma = tuple(gamma)
                if any(gamma[v] != v for v in range(self.n)) and gamma not in self.generators:
                    self.generators.append(gamma)
                return
        if (path, code) < (self.best[0], self.best[1]):
            self.best = (path, code, lab)


@lru_cache(maxsize=4096)
def search(g: Graph) -> SearchResult:
    """Run the canonical-labeling search once per graph (memoized)."""
    return _Search(g).run()


def canonical_labeling(g: Graph) -> tuple[int, ...]:
    """``perm`` with ``perm[v]`` = canonical label of vertex ``v``."""
    lab = search(g).labeling
    perm = [0] * g.n
    for pos, v in enumerate(lab):
        perm[v] = pos
    return tuple(perm)


def canonical_form(g: Graph) -> bytes:
    """graph6 bytes of the canonically relabeled graph.

    Equal for two graphs exactly when they are isomorphic.
    """
    return write_graph6(Graph.from_code(g.n, search(g).code)).encode("ascii")


def automorphism_generators(g: Graph) -> tuple[tuple[int, ...], ...]:
    return search(g).generators


def automorphism_orbits(g: Graph) -> OrbitPartition:
    uf = _UnionFind(g.n)
    for gamma in search(g).generators:
        for v in range(g.n):
            uf.union(v, gamma[v])
    ids = {}
    orbit_of = tuple(ids.setdefault(uf.find(v), len(ids)) for v in range(g.n))
    return OrbitPartition(orbit_of, len(ids))


def is_vertex_transitive(g: Graph) -> bool:
    return automorphism_orbits(g).count == 1


# --------------------------------------------------------------------------
# distance-regularity


def bfs_levels(g: Graph, root: int) -> list[int]:
    dist = [-1] * g.n
    dist[root] = 0
    q = deque([root])
    while q:
        u = q.popleft()
        for w in _bits(g.rows[u]):
            if dist[w] < 0:
                dist[w] = dist[u] + 1
                q.append(w)
    return dist


def is_distance_regular(g: Graph) -> IntersectionArray | None:
    """Intersection array if ``g`` is distance-regular, else ``None``.

    For each root and each vertex at distance ``i`` the counts of neighbours
    at distance ``i-1`` and ``i+1`` must not depend on the vertex or the root.
    """
    if not is_connected(g):
        raise Disconnected("distance-regularity is checked on connected graphs only")
    ref = None
    for root in range(g.n):
        dist = bfs_levels(g, root)
        diam = max(dist)
        b = [None] * (diam + 1)
        c = [None] * (diam + 1)
        for u in range(g.n):
            i = dist[u]
            up = down = 0
            for w in _bits(g.rows[u]):
                if dist[w] == i + 1:
                    up += 1
                elif dist[w] == i - 1:
                    down += 1
            if b[i] is None:
                b[i], c[i] = up, down
            elif (b[i], c[i]) != (up, down):
                return None
        arr = (diam, tuple(b[:diam]), tuple(c[1:]))
        if ref is None:
            ref = arr
        elif arr != ref:
            return None
    return IntersectionArray(*ref)
