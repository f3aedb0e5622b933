"""Finite simple graphs on at most 32 vertices, stored as adjacency bit masks.

Vertices are 0-indexed internally; every user-facing rendering (edge lists,
reprs, JSON) is 1-indexed.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Iterator, Sequence

MAX_VERTICES = 32
MAX_ISO_VERTICES = 8


class DomainError(ValueError):
    """Raised when an operation is called outside its documented domain."""


def popcount(x: int) -> int:
    return bin(x).count("1")


def bits(x: int) -> list[int]:
    """Indices of the set bits of ``x`` in increasing order."""
    out = []
    while x:
        low = x & -x
        out.append(low.bit_length() - 1)
        x ^= low
    return out


def mask_of(indices: Iterable[int]) -> int:
    m = 0
    for i in indices:
        m |= 1 << i
    return m


@dataclass(frozen=True)
class Graph:
    n: int
    adj: tuple[int, ...]

    def __post_init__(self) -> None:
        if not 1 <= self.n <= MAX_VERTICES:
            raise DomainError(f"vertex count must be in 1..{MAX_VERTICES}, got {self.n}")
        if len(self.adj) != self.n:
            raise DomainError("adjacency length does not match vertex count")
        full = (1 << self.n) - 1
        for i, row in enumerate(self.adj):
            if row & ~full:
                raise DomainError(f"row {i + 1} references vertices beyond n")
            if row >> i & 1:
                raise DomainError(f"loop at vertex {i + 1}")
            for j in bits(row):
                if not self.adj[j] >> i & 1:
                    raise DomainError(f"asymmetric adjacency between {i + 1} and {j + 1}")

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]], one_indexed: bool = False) -> "Graph":
        if not 1 <= n <= MAX_VERTICES:
            raise DomainError(f"vertex count must be in 1..{MAX_VERTICES}, got {n}")
        adj = [0] * n
        off = 1 if one_indexed else 0
        for a, b in edges:
            i, j = a - off, b - off
            if not (0 <= i < n and 0 <= j < n):
                raise DomainError(f"edge ({a}, {b}) out of range for n={n}")
            if i == j:
                raise DomainError(f"loop at vertex {a}")
            adj[i] |= 1 << j
            adj[j] |= 1 << i
        return cls(n, tuple(adj))

    def edges(self) -> list[tuple[int, int]]:
        """0-indexed edges (i, j), i < j, in lexicographic order."""
        return [(i, j) for i in range(self.n) for j in bits(self.adj[i] >> (i + 1) << (i + 1))]

    def edges_1(self) -> list[tuple[int, int]]:
        return [(i + 1, j + 1) for i, j in self.edges()]

    def num_edges(self) -> int:
        return sum(popcount(r) for r in self.adj) // 2

    def degree(self, i: int) -> int:
        return popcount(self.adj[i])

    def has_edge(self, i: int, j: int) -> bool:
        return bool(self.adj[i] >> j & 1)

    def has_isolated_vertex(self) -> bool:
        return any(r == 0 for r in self.adj)

    def __repr__(self) -> str:
        es = " ".join(f"{i}{j}" if self.n < 10 else f"{i}-{j}" for i, j in self.edges_1())
        return f"Graph(n={self.n}, edges=[{es}])"


@dataclass(frozen=True)
class Matching:
    edges: tuple[tuple[int, int], ...]
    vertex_set: int

    def __len__(self) -> int:
        return len(self.edges)


def complete_graph(n: int) -> Graph:
    if not 1 <= n <= MAX_VERTICES:
        raise DomainError(f"vertex count must be in 1..{MAX_VERTICES}, got {n}")
    full = (1 << n) - 1
    return Graph(n, tuple(full ^ (1 << i) for i in range(n)))


def path_graph(n: int) -> Graph:
    if not 1 <= n <= MAX_VERTICES:
        raise DomainError(f"vertex count must be in 1..{MAX_VERTICES}, got {n}")
    return Graph.from_edges(n, [(i, i + 1) for i in range(n - 1)])


def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise DomainError("a cycle needs at least 3 vertices")
    return Graph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def empty_graph(n: int) -> Graph:
    return Graph(n, (0,) * n)


def complement(g: Graph) -> Graph:
    full = (1 << g.n) - 1
    return Graph(g.n, tuple(full ^ row ^ (1 << i) for i, row in enumerate(g.adj)))


def induced_subgraph(g: Graph, vertices: Iterable[int] | int) -> Graph:
    """Subgraph induced on a 0-indexed vertex set, relabeled in increasing order.

    ``vertices`` may be an iterable of indices or a bit mask.
    """
    mask = vertices if isinstance(vertices, int) else mask_of(vertices)
    if mask == 0:
        raise DomainError("induced subgraph needs a nonempty vertex set")
    if mask >> g.n:
        raise DomainError("vertex set is not contained in the graph")
    keep = bits(mask)
    pos = {v: k for k, v in enumerate(keep)}
    adj = []
    for v in keep:
        adj.append(mask_of(pos[w] for w in bits(g.adj[v] & mask)))
    return Graph(len(keep), tuple(adj))


def delete_vertex(g: Graph, v: int) -> Graph:
    """G minus vertex v, keeping the ambient labels (v becomes isolated)."""
    adj = list(g.adj)
    adj[v] = 0
    for w in bits(g.adj[v]):
        adj[w] &= ~(1 << v)
    return Graph(g.n, tuple(adj))


def matchings(g: Graph, k: int) -> list[Matching]:
    """All k-matchings, each listed with edges in lexicographic order."""
    if k < 1:
        raise DomainError("matching size must be at least 1")
    edges = g.edges()
    emask = [(1 << i) | (1 << j) for i, j in edges]
    out: list[Matching] = []

    def extend(start: int, used: int, chosen: list[int]) -> None:
        if len(chosen) == k:
            out.append(Matching(tuple(edges[c] for c in chosen), used))
            return
        for e in range(start, len(edges) - (k - len(chosen)) + 1):
            if emask[e] & used:
                continue
            chosen.append(e)
            extend(e + 1, used | emask[e], chosen)
            chosen.pop()

    extend(0, 0, [])
    return out


def matching_number(g: Graph) -> int:
    best = 0

    def search(free: int, size: int) -> None:
        nonlocal best
        best = max(best, size)
        if size + popcount(free) // 2 <= best:
            return
        # lowest free vertex is either matched to a free neighbor or skipped
        while free and not (g.adj[(free & -free).bit_length() - 1] & free):
            free &= free - 1
        if not free:
            return
        v = (free & -free).bit_length() - 1
        rest = free & ~(1 << v)
        for w in bits(g.adj[v] & rest):
            search(rest & ~(1 << w), size + 1)
        search(rest, size)

    search((1 << g.n) - 1, 0)
    return best


def relabel(g: Graph, perm: Sequence[int]) -> Graph:
    """Image of g under the vertex map i -> perm[i] (0-indexed)."""
    adj = [0] * g.n
    for i, j in g.edges():
        a, b = perm[i], perm[j]
        adj[a] |= 1 << b
        adj[b] |= 1 << a
    return Graph(g.n, tuple(adj))


def is_isomorphic(g: Graph, h: Graph) -> tuple[bool, tuple[int, ...] | None]:
    """Return (True, perm) with relabel(g, perm) == h, or (False, None)."""
    if g.n != h.n or g.num_edges() != h.num_edges():
        return False, None
    if sorted(g.degree(i) for i in range(g.n)) != sorted(h.degree(i) for i in range(h.n)):
        return False, None
    n = g.n
    perm = [-1] * n
    used = 0
    order = sorted(range(n), key=lambda v: -g.degree(v))

    def place(depth: int) -> bool:
        nonlocal used
        if depth == n:
            return True
        v = order[depth]
        for w in range(n):
            if used >> w & 1 or h.degree(w) != g.degree(v):
                continue
            ok = True
            for u in order[:depth]:
                if g.has_edge(v, u) != h.has_edge(w, perm[u]):
                    ok = False
                    break
            if not ok:
                continue
            perm[v] = w
            used |= 1 << w
            if place(depth + 1):
                return True
            used &= ~(1 << w)
            perm[v] = -1
        return False

    if place(0):
        return True, tuple(perm)
    return False, None


def _refined_colors(g: Graph) -> list[int]:
    """Isomorphism-invariant vertex coloring by iterated degree refinement."""
    colors = [g.degree(v) for v in range(g.n)]
    while True:
        sigs = [(colors[v], tuple(sorted(colors[w] for w in bits(g.adj[v])))) for v in range(g.n)]
        ranks = {s: r for r, s in enumerate(sorted(set(sigs)))}
        new = [ranks[s] for s in sigs]
        if len(set(new)) == len(set(colors)):
            return new
        colors = new


def canonical_form(g: Graph) -> tuple[int, tuple[int, ...]]:
    """Canonical code of g and a labeling achieving it.

    The code is the largest upper-triangle bit string (graph6 column order)
    over all vertex orders that list the refined color classes in increasing
    color order.  Returns ``(code, order)`` where ``order[k]`` is the vertex
    placed at position k.
    """
    n = g.n
    if n > MAX_ISO_VERTICES:
        raise DomainError(f"canonical forms are limited to n <= {MAX_ISO_VERTICES}")
    colors = _refined_colors(g)
    cell_seq = sorted(colors)
    best_code = -1
    best_order: tuple[int, ...] = ()
    order: list[int] = []

    # columns are compared as integers: bit for earlier positions is more significant
    def search(pos: int, placed: int, code: int, ncodebits: int) -> None:
        nonlocal best_code, best_order
        if pos == n:
            if code > best_code:
                best_code, best_order = code, tuple(order)
            return
        want = cell_seq[pos]
        cands = [v for v in range(n) if not placed >> v & 1 and colors[v] == want]
        cols = []
        for v in cands:
            col = 0
            for u in order:
                col = (col << 1) | (g.adj[v] >> u & 1)
            cols.append(col)
        top = max(cols)
        seen_twins: list[int] = []
        for v, col in zip(cands, cols):
            if col != top:
                continue
            # unplaced twins of an explored candidate give identical subtrees
            if any((g.adj[v] & ~(1 << u)) == (g.adj[u] & ~(1 << v)) for u in seen_twins):
                continue
            seen_twins.append(v)
            new_code = (code << pos) | col
            if best_code >= 0:
                nbits = ncodebits + pos
                prefix = best_code >> (n * (n - 1) // 2 - nbits)
                if new_code < prefix:
                    continue
                if new_code > prefix:
                    best_code = -1
            order.append(v)
            search(pos + 1, placed | (1 << v), new_code, ncodebits + pos)
            order.pop()

    search(0, 0, 0, 0)
    return best_code, best_order


def canonical_graph(g: Graph) -> Graph:
    _, order = canonical_form(g)
    perm = [0] * g.n
    for k, v in enumerate(order):
        perm[v] = k
    return relabel(g, perm)


def enumerate_graphs(n: int, no_isolated: bool = False, up_to_iso: bool = False) -> Iterator[Graph]:
    """Deterministic stream of graphs on n vertices.

    Labeled mode yields all 2^C(n,2) graphs ordered by their edge bit mask
    (bit k is the k-th pair in lexicographic order).  Up-to-isomorphism mode
    yields one canonical representative per class, ordered by canonical code.
    """
    if n < 1:
        raise DomainError("n must be positive")
    if up_to_iso:
        if n > MAX_ISO_VERTICES:
            raise DomainError(f"isomorphism classes are only enumerated for n <= {MAX_ISO_VERTICES}")
        for g in iso_classes(n):
            if not (no_isolated and g.has_isolated_vertex()):
                yield g
        return
    if n > MAX_VERTICES:
        raise DomainError(f"vertex count must be in 1..{MAX_VERTICES}, got {n}")
    pairs = list(combinations(range(n), 2))
    for m in range(1 << len(pairs)):
        g = Graph.from_edges(n, (pairs[k] for k in bits(m)))
        if no_isolated and g.has_isolated_vertex():
            continue
        yield g


_ISO_CACHE: dict[int, tuple[Graph, ...]] = {}


def iso_classes(n: int) -> tuple[Graph, ...]:
    """Canonical representatives of all graphs on n vertices (isolated vertices allowed).

    Built by vertex augmentation: every class on n vertices arises from a
    class on n-1 vertices plus one new vertex with some neighborhood.
    """
    if n in _ISO_CACHE:
        return _ISO_CACHE[n]
    if n == 1:
        classes = (Graph(1, (0,)),)
    else:
        found: dict[int, Graph] = {}
        for base in iso_classes(n - 1):
            for nbrs in range(1 << (n - 1)):
                adj = [row | ((nbrs >> i & 1) << (n - 1)) for i, row in enumerate(base.adj)]
                adj.append(nbrs)
                g = Graph(n, tuple(adj))
                code, _ = canonical_form(g)
                if code not in found:
                    found[code] = canonical_graph(g)
        classes = tuple(found[c] for c in sorted(found))
    _ISO_CACHE[n] = classes
    return classes


# graph6 ---------------------------------------------------------------------


def to_graph6(g: Graph) -> str:
    if g.n > 62:
        raise DomainError("graph6 short form supports n <= 62")
    out = [chr(g.n + 63)]
    bitlist = [g.adj[i] >> j & 1 for j in range(1, g.n) for i in range(j)]
    bitlist += [0] * (-len(bitlist) % 6)
    for k in range(0, len(bitlist), 6):
        val = 0
        for b in bitlist[k:k + 6]:
            val = (val << 1) | b
        out.append(chr(val + 63))
    return "".join(out)


def from_graph6(s: str) -> Graph:
    s = s.strip()
    if s.startswith(">>graph6<<"):
        s = s[len(">>graph6<<"):]
    if not s:
        raise DomainError("empty graph6 string")
    codes = [ord(c) - 63 for c in s]
    if any(not 0 <= c <= 63 for c in codes):
        raise DomainError(f"malformed graph6 string {s!r}")
    n = codes[0]
    if n == 63:
        raise DomainError("graph6 long form (n > 62) is not supported")
    nbits = n * (n - 1) // 2
    if len(codes) - 1 != (nbits + 5) // 6:
        raise DomainError(f"graph6 string {s!r} has wrong length for n={n}")
    bitlist = [(c >> (5 - k)) & 1 for c in codes[1:] for k in range(6)]
    edges = []
    pos = 0
    for j in range(1, n):
        for i in range(j):
            if bitlist[pos]:
                edges.append((i, j))
            pos += 1
    if any(bitlist[nbits:]):
        raise DomainError(f"graph6 string {s!r} has nonzero padding")
    return Graph.from_edges(n, edges)


def to_edge_list(g: Graph) -> str:
    lines = [str(g.n)] + [f"{i} {j}" for i, j in g.edges_1()]
    return "\n".join(lines) + "\n"


def from_edge_list(text: str) -> Graph:
    rows = [ln.split() for ln in text.splitlines() if ln.strip() and not ln.lstrip().startswith("#")]
    if not rows or len(rows[0]) != 1:
        raise DomainError("edge list must start with a line holding n")
    try:
        n = int(rows[0][0])
        edges = [(int(a), int(b)) for a, b in rows[1:]]
    except ValueError as exc:
        raise DomainError(f"malformed edge list: {exc}") from None
    return Graph.from_edges(n, edges, one_indexed=True)


def parse_graphs(text: str) -> list[Graph]:
    """Graphs from a document: one edge list (first line is n) or graph6 lines."""
    lines = [ln.strip() for ln in text.splitlines() if ln.strip()]
    if not lines:
        raise DomainError("no graph given")
    if lines[0].isdigit():
        return [from_edge_list(text)]
    return [from_graph6(ln) for ln in lines]


def parse_graph(text: str) -> Graph:
    graphs = parse_graphs(text)
    if len(graphs) != 1:
        raise DomainError(f"expected one graph, got {len(graphs)}")
    return graphs[0]


def graph_name(g: Graph) -> str | None:
    """'Kn' or 'Pnc' when g is isomorphic to one of the two named families."""
    if g.num_edges() == g.n * (g.n - 1) // 2:
        return f"K{g.n}"
    if g.n >= 2 and is_isomorphic(g, complement(path_graph(g.n)))[0]:
        return f"P{g.n}c"
    return None
