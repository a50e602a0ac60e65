"""Loop-aware undirected graphs and the triangle-derived graph families.

Vertices are labelled 1..n.  Adjacency is stored as one bitmask per vertex
(bit u-1 set on row v means v ~ u); the diagonal is never stored there --
loops live in a separate bitmask.  Graphs are immutable and compare
label-sensitively, which is what the family identities below require: the
canonical vertex order of every constructed family is first clique, second
clique, empty part.

Family grammar (also the CLI string forms):
  noloops:w           (K_a | K_b) joined to an empty graph, sizes by w mod 3
  loops:w             same with a loop on every clique vertex
  theta:w             looped complete graph on 2t+r vertices plus t isolated ones
  theta-complement:w  K_t joined to an empty graph on w-t vertices
  complement:w        complete bipartite graph plus a clique
  join:n,m,r          (K_n | K_m) joined to an empty graph on r vertices
where t = floor(w/3) and clique/empty sizes follow the residue of w mod 3:
residue 0 -> (t, t, t), residue 1 -> (t, t, t+1), residue 2 -> (t, t+1, t+1).
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from .matrices import BitMatrix, ExactMatrix

W_KINDS = ("noloops", "loops", "theta", "theta-complement", "complement")
ALL_KINDS = W_KINDS + ("join",)


@dataclass(frozen=True)
class Graph:
    """Undirected graph on vertices 1..n with per-vertex loop flags."""

    n: int
    adj: tuple[int, ...]
    loops: int

    def __post_init__(self) -> None:
        if self.n < 1:
            raise ValueError(f"graph needs at least one vertex, got n={self.n}")
        if len(self.adj) != self.n:
            raise ValueError("adjacency mask count must equal the vertex count")
        full = (1 << self.n) - 1
        if self.loops & ~full:
            raise ValueError("loop mask mentions vertices outside 1..n")
        for v, mask in enumerate(self.adj):
            if mask & ~full:
                raise ValueError("adjacency mask mentions vertices outside 1..n")
            if mask >> v & 1:
                raise ValueError("diagonal bits are not allowed in adjacency masks")
        for v in range(self.n):
            for u in range(v):
                if (self.adj[v] >> u & 1) != (self.adj[u] >> v & 1):
                    raise ValueError("adjacency must be symmetric")

    # -- 1-based accessors -------------------------------------------------

    def adjacent(self, i: int, j: int) -> bool:
        return bool(self.adj[i - 1] >> (j - 1) & 1)

    def has_loop(self, i: int) -> bool:
        return bool(self.loops >> (i - 1) & 1)

    def degree(self, i: int) -> int:
        """Vertex degree, loops excluded."""
        return self.adj[i - 1].bit_count()

    def neighbors(self, i: int) -> list[int]:
        mask = self.adj[i - 1]
        return [u + 1 for u in range(self.n) if mask >> u & 1]

    def edges(self) -> list[tuple[int, int]]:
        """Off-diagonal edges (i, j) with i < j, sorted."""
        out = []
        for v in range(self.n):
            mask = self.adj[v] >> (v + 1)
            u = v + 1
            while mask:
                if mask & 1:
                    out.append((v + 1, u + 1))
                mask >>= 1
                u += 1
        return out

    def loop_vertices(self) -> list[int]:
        return [v + 1 for v in range(self.n) if self.loops >> v & 1]

    @property
    def num_edges(self) -> int:
        return sum(m.bit_count() for m in self.adj) // 2

    @property
    def num_loops(self) -> int:
        return self.loops.bit_count()

    def canonical_str(self) -> str:
        """Deterministic serialization used in reports and golden comparisons."""
        rows = "|".join(
            "".join("1" if self.adj[v] >> u & 1 else "0" for u in range(self.n))
            for v in range(self.n)
        )
        loops = "".join("1" if self.loops >> v & 1 else "0" for v in range(self.n))
        return f"n={self.n};loops={loops};adj={rows}"


def _graph(n: int, adj: list[int], loops: int) -> Graph:
    return Graph(n=n, adj=tuple(adj), loops=loops)


# -- atomic constructors ----------------------------------------------------


def complete(n: int, with_loops: bool = False) -> Graph:
    """Complete graph on n vertices, optionally with a loop at every vertex."""
    if n < 1:
        raise ValueError(f"vertex count must be positive, got {n}")
    full = (1 << n) - 1
    adj = [full ^ (1 << v) for v in range(n)]
    return _graph(n, adj, full if with_loops else 0)


def empty_graph(n: int) -> Graph:
    """Edgeless, loopless graph on n vertices."""
    if n < 1:
        raise ValueError(f"vertex count must be positive, got {n}")
    return _graph(n, [0] * n, 0)


def complete_bipartite(m: int, n: int) -> Graph:
    """Complete bipartite graph; part one is vertices 1..m, part two is m+1..m+n."""
    if m < 1 or n < 1:
        raise ValueError("both parts must be non-empty")
    left = (1 << m) - 1
    right = ((1 << n) - 1) << m
    adj = [right] * m + [left] * n
    return _graph(m + n, adj, 0)


# -- combinators -------------------------------------------------------------


def disjoint_union(g1: Graph, g2: Graph) -> Graph:
    """Relabelled concatenation (g1 first), no cross edges, loops preserved."""
    shift = g1.n
    adj = list(g1.adj) + [m << shift for m in g2.adj]
    loops = g1.loops | (g2.loops << shift)
    return _graph(g1.n + g2.n, adj, loops)


def join(g1: Graph, g2: Graph) -> Graph:
    """Disjoint union plus every cross pair adjacent; loops preserved."""
    shift = g1.n
    mask1 = (1 << g1.n) - 1
    mask2 = ((1 << g2.n) - 1) << shift
    adj = [m | mask2 for m in g1.adj] + [(m << shift) | mask1 for m in g2.adj]
    loops = g1.loops | (g2.loops << shift)
    return _graph(g1.n + g2.n, adj, loops)


def complement(g: Graph) -> Graph:
    """Complement of the underlying simple graph; the result is loopless."""
    full = (1 << g.n) - 1
    adj = [(full ^ m) ^ (1 << v) for v, m in enumerate(g.adj)]
    return _graph(g.n, adj, 0)


def from_bitmatrix(b: BitMatrix) -> Graph:
    """Graph of a symmetric 0/1 matrix: off-diagonal 1s are edges, diagonal 1s loops."""
    n = b.n
    adj = []
    loops = 0
    for v in range(n):
        mask = 0
        for u in range(n):
            if u != v and b.rows[v][u]:
                mask |= 1 << u
        adj.append(mask)
        if b.rows[v][v]:
            loops |= 1 << v
    return _graph(n, adj, loops)


def relabel(g: Graph, order: tuple[int, ...]) -> Graph:
    """Reorder vertices; order[p] is the old 1-based label placed at position p+1."""
    if sorted(order) != list(range(1, g.n + 1)):
        raise ValueError("order must be a permutation of 1..n")
    pos = {old: new for new, old in enumerate(order)}
    adj = []
    loops = 0
    for new, old in enumerate(order):
        mask = 0
        for u in g.neighbors(old):
            mask |= 1 << pos[u]
        adj.append(mask)
        if g.has_loop(old):
            loops |= 1 << new
    return _graph(g.n, adj, loops)


def adjacency_matrix(g: Graph) -> ExactMatrix:
    """Dense 0/1 adjacency matrix; a loop contributes 1 on the diagonal."""
    rows = []
    for v in range(g.n):
        row = [(g.adj[v] >> u) & 1 for u in range(g.n)]
        if g.loops >> v & 1:
            row[v] = 1
        rows.append(row)
    return ExactMatrix(rows)


# -- the triangle families ---------------------------------------------------


@dataclass(frozen=True)
class FamilySpec:
    """Selector for one graph of a family; see the module docstring for the grammar."""

    kind: str
    w: int = 0
    n: int = 0
    m: int = 0
    r: int = 0

    def __post_init__(self) -> None:
        if self.kind not in ALL_KINDS:
            raise ValueError(f"unknown family kind {self.kind!r}; expected one of {ALL_KINDS}")
        if self.kind == "join":
            if min(self.n, self.m, self.r) < 1:
                raise ValueError("join:n,m,r requires n, m, r >= 1")
        elif self.w < 1:
            raise ValueError(f"{self.kind}:w requires w >= 1")

    @property
    def t(self) -> int:
        return self.w // 3

    @property
    def residue(self) -> int:
        return self.w % 3

    @classmethod
    def parse(cls, text: str) -> "FamilySpec":
        kind, sep, rest = text.partition(":")
        if not sep or not rest:
            raise ValueError(f"cannot parse family spec {text!r}; expected '<kind>:<args>'")
        try:
            if kind == "join":
                parts = [int(p) for p in rest.split(",")]
                if len(parts) != 3:
                    raise ValueError
                return cls("join", n=parts[0], m=parts[1], r=parts[2])
            return cls(kind, w=int(rest))
        except ValueError as exc:
            raise ValueError(f"cannot parse family spec {text!r}") from exc

    def __str__(self) -> str:
        if self.kind == "join":
            return f"join:{self.n},{self.m},{self.r}"
        return f"{self.kind}:{self.w}"


def clique_sizes(w: int) -> tuple[int, int, int]:
    """Sizes (first clique, second clique, empty part) for family size w >= 3."""
    if w < 3:
        raise ValueError(f"family graphs need w >= 3, got {w}")
    t, r = divmod(w, 3)
    return {0: (t, t, t), 1: (t, t, t + 1), 2: (t, t + 1, t + 1)}[r]


def family_graph(spec: FamilySpec) -> Graph:
    """Build the graph selected by spec, in the canonical block order."""
    if spec.kind == "join":
        return join(disjoint_union(complete(spec.n), complete(spec.m)), empty_graph(spec.r))
    w = spec.w
    if w < 3:
        raise ValueError(f"family graphs need w >= 3, got {w}")
    t, residue = spec.t, spec.residue
    if spec.kind in ("noloops", "loops"):
        a, b, c = clique_sizes(w)
        looped = spec.kind == "loops"
        cliques = disjoint_union(complete(a, looped), complete(b, looped))
        return join(cliques, empty_graph(c))
    if spec.kind == "theta":
        return disjoint_union(complete(2 * t + residue, with_loops=True), empty_graph(t))
    if spec.kind == "theta-complement":
        return join(complete(t), empty_graph(w - t))
    # complement of the loopless family: complete bipartite plus a clique
    a, b, c = clique_sizes(w)
    return disjoint_union(complete_bipartite(a, b), complete(c))


def family_blocks(spec: FamilySpec) -> tuple[tuple[str, int], ...]:
    """Vertex-name blocks (prefix, size) matching the canonical vertex order."""
    if spec.kind == "join":
        return (("u", spec.n), ("v", spec.m), ("z", spec.r))
    t, residue = spec.t, spec.residue
    if spec.kind == "theta":
        return (("u", 2 * t + residue), ("z", t))
    if spec.kind == "theta-complement":
        return (("u", t), ("z", spec.w - t))
    a, b, c = clique_sizes(spec.w)
    return (("u", a), ("v", b), ("z", c))


def residue_relabel(w: int) -> tuple[int, ...]:
    """Canonical order for the graph of the mod-2 determinant-triangle matrix.

    Matrix indices congruent to 0 (mod 3) come first (first clique), then
    those congruent to 2 (second clique), then those congruent to 1 (empty
    part), each in increasing order.  Applying this order to that graph yields
    exactly family_graph(loops:w).
    """
    if w < 3:
        raise ValueError(f"relabelling is defined for w >= 3, got {w}")
    order = [i for i in range(1, w + 1) if i % 3 == 0]
    order += [i for i in range(1, w + 1) if i % 3 == 2]
    order += [i for i in range(1, w + 1) if i % 3 == 1]
    return tuple(order)


def hosoya_relabel(w: int) -> tuple[int, ...]:
    """Canonical order for the graph of the mod-2 Hosoya matrix.

    Indices not divisible by 3 (the looped clique) come first, then the
    multiples of 3 (the isolated vertices).  Applying this order yields
    exactly family_graph(theta:w).
    """
    if w < 3:
        raise ValueError(f"relabelling is defined for w >= 3, got {w}")
    order = [i for i in range(1, w + 1) if i % 3 != 0]
    order += [i for i in range(1, w + 1) if i % 3 == 0]
    return tuple(order)


# -- structural predicates ----------------------------------------------------


@dataclass
class DegreeStats:
    """Degree summary with loops excluded from all counts."""

    delta_max: int
    delta_min: int
    counts: dict[int, int]
    is_regular: bool
    is_almost_regular: bool


def degree_stats(g: Graph) -> DegreeStats:
    degrees = [g.degree(v) for v in range(1, g.n + 1)]
    counts: dict[int, int] = {}
    for d in degrees:
        counts[d] = counts.get(d, 0) + 1
    dmax, dmin = max(degrees), min(degrees)
    return DegreeStats(
        delta_max=dmax,
        delta_min=dmin,
        counts=counts,
        is_regular=dmax == dmin,
        is_almost_regular=dmax - dmin == 1,
    )


def is_cograph(g: Graph) -> bool:
    """True when no 4 vertices induce a path; brute force over all 4-subsets.

    Loops are ignored (they are never stored in the adjacency masks).  A
    4-subset induces a path exactly when it spans 3 edges with no vertex of
    induced degree 3 or 0.
    """
    rows = g.adj
    n = g.n
    for a in range(n - 3):
        ra = rows[a]
        for b in range(a + 1, n - 2):
            rb = rows[b]
            ab = ra >> b & 1
            for c in range(b + 1, n - 1):
                rc = rows[c]
                ac = ra >> c & 1
                bc = rb >> c & 1
                for d in range(c + 1, n):
                    ad = ra >> d & 1
                    bd = rb >> d & 1
                    cd = rc >> d & 1
                    if ab + ac + ad + bc + bd + cd != 3:
                        continue
                    da = ab + ac + ad
                    db = ab + bc + bd
                    dc = ac + bc + cd
                    dd = ad + bd + cd
                    if 3 in (da, db, dc, dd) or 0 in (da, db, dc, dd):
                        continue
                    return False
    return True


def duplicate_vertex_classes(g: Graph) -> list[list[int]]:
    """Partition of vertices by identical open neighborhoods (loops ignored)."""
    groups: dict[int, list[int]] = {}
    for v in range(1, g.n + 1):
        groups.setdefault(g.adj[v - 1], []).append(v)
    return sorted(groups.values())


def distinct_nonzero_rows(g: Graph) -> int:
    """Distinct non-zero rows of the adjacency matrix, diagonal loop entries included."""
    seen = set()
    for v in range(g.n):
        row = g.adj[v] | ((g.loops >> v & 1) << v)
        if row:
            seen.add(row)
    return len(seen)


# -- DOT emission --------------------------------------------------------------


def vertex_names(spec: FamilySpec) -> list[str]:
    """Canonical vertex names: u/v/z blocks numbered from 1 within each block."""
    names = []
    for prefix, size in family_blocks(spec):
        names.extend(f"{prefix}{i}" for i in range(1, size + 1))
    return names


def to_dot(g: Graph, names: list[str], title: str) -> str:
    """Canonical DOT text: all vertices declared, edges sorted, loops as self-edges."""
    if len(names) != g.n:
        raise ValueError("need one name per vertex")
    lines = [f'graph "{title}" {{']
    lines.extend(f"  {name};" for name in names)
    for i, j in g.edges():
        lines.append(f"  {names[i - 1]} -- {names[j - 1]};")
    for v in g.loop_vertices():
        lines.append(f"  {names[v - 1]} -- {names[v - 1]};")
    lines.append("}")
    return "\n".join(lines) + "\n"
