"""Simple undirected graphs: construction, named families, canonical forms,
and automorphism orbits.

Graphs are immutable after construction and safe to share between workers.
Vertices are always 0-indexed. Canonical keys are exact (never hash-based):
two graphs receive equal keys if and only if they are isomorphic.
"""

from itertools import combinations

import numpy as np

GENERAL_KEY_CAP = 10   # brute-force canonical form limit for arbitrary graphs
TREE_KEY_CAP = 16      # center-rooted canonical form limit for trees
ORBIT_CAP = 10         # automorphism search limit


class Graph:
    """Immutable simple undirected graph on vertices 0..n-1.

    Exposes the derived quantities used throughout the package: edge count
    ``m``, degree sequence ``degrees``, maximum degree ``max_degree``,
    connectivity flag ``connected``, and the cyclomatic number
    ``cycle_rank`` = m - n + 1 (meaningful when connected).
    """

    __slots__ = ("n", "edges", "m", "degrees", "max_degree", "connected",
                 "adj_masks")

    def __init__(self, n, edges):
        if n < 1:
            raise ValueError(f"vertex count must be >= 1, got {n}")
        seen = set()
        masks = [0] * n
        degrees = [0] * n
        norm_edges = []
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u},{v}) has an endpoint outside 0..{n - 1}")
            if u == v:
                raise ValueError(f"self-loop at vertex {u} is not allowed")
            a, b = (u, v) if u < v else (v, u)
            if (a, b) in seen:
                raise ValueError(f"duplicate edge ({u},{v})")
            seen.add((a, b))
            norm_edges.append((a, b))
            masks[a] |= 1 << b
            masks[b] |= 1 << a
            degrees[a] += 1
            degrees[b] += 1
        norm_edges.sort()
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "edges", tuple(norm_edges))
        object.__setattr__(self, "m", len(norm_edges))
        object.__setattr__(self, "degrees", tuple(degrees))
        object.__setattr__(self, "max_degree", max(degrees) if degrees else 0)
        object.__setattr__(self, "adj_masks", tuple(masks))
        object.__setattr__(self, "connected", self._reaches_all())

    def __setattr__(self, name, value):
        raise AttributeError("Graph instances are immutable")

    def _reaches_all(self):
        seen = 1
        frontier = 1
        masks = self.adj_masks
        while frontier:
            nxt = 0
            f = frontier
            while f:
                v = (f & -f).bit_length() - 1
                f &= f - 1
                nxt |= masks[v]
            frontier = nxt & ~seen
            seen |= nxt
        return seen == (1 << self.n) - 1

    @property
    def cycle_rank(self):
        return self.m - self.n + 1

    def is_tree(self):
        return self.connected and self.m == self.n - 1

    def has_edge(self, u, v):
        return bool(self.adj_masks[u] >> v & 1)

    def neighbors(self, v):
        mask = self.adj_masks[v]
        out = []
        while mask:
            w = (mask & -mask).bit_length() - 1
            mask &= mask - 1
            out.append(w)
        return out

    def adjacency_matrix(self):
        """Dense 0/1 adjacency matrix as a float array."""
        a = np.zeros((self.n, self.n))
        for u, v in self.edges:
            a[u, v] = a[v, u] = 1.0
        return a

    def relabel(self, perm):
        """New graph with vertex i renamed perm[i]."""
        return Graph(self.n, [(perm[u], perm[v]) for u, v in self.edges])

    def __eq__(self, other):
        return (isinstance(other, Graph) and self.n == other.n
                and self.edges == other.edges)

    def __hash__(self):
        return hash((self.n, self.edges))

    def __repr__(self):
        return f"Graph(n={self.n}, m={self.m})"

    # pickling support despite __slots__/immutability (worker pools)
    def __getstate__(self):
        return (self.n, self.edges)

    def __setstate__(self, state):
        self.__init__(state[0], list(state[1]))

    def __reduce__(self):
        return (Graph, (self.n, list(self.edges)))


def make_graph(n, edges):
    """Validating constructor; rejects self-loops, duplicates, bad endpoints."""
    return Graph(n, edges)


# ---------------------------------------------------------------------------
# Named families
# ---------------------------------------------------------------------------

def star(n):
    """Star on n >= 2 vertices: vertex 0 adjacent to all others."""
    if n < 2:
        raise ValueError(f"star needs n >= 2, got {n}")
    return Graph(n, [(0, i) for i in range(1, n)])


def path(n):
    """Path 0-1-...-(n-1)."""
    if n < 1:
        raise ValueError(f"path needs n >= 1, got {n}")
    return Graph(n, [(i, i + 1) for i in range(n - 1)])


def cycle(n):
    if n < 3:
        raise ValueError(f"cycle needs n >= 3, got {n}")
    return Graph(n, [(i, (i + 1) % n) for i in range(n)])


def complete(n):
    if n < 1:
        raise ValueError(f"complete graph needs n >= 1, got {n}")
    return Graph(n, list(combinations(range(n), 2)))


def double_star(a, b):
    """Two adjacent centers, the first carrying a pendant leaves and the
    second b, with a >= b >= 1; order a + b + 2.

    Labeling: 0 and 1 are the centers, 2..a+1 hang off 0, the rest off 1.
    """
    if not (a >= b >= 1):
        raise ValueError(f"double star needs a >= b >= 1, got ({a},{b})")
    edges = [(0, 1)]
    edges += [(0, 2 + i) for i in range(a)]
    edges += [(1, 2 + a + i) for i in range(b)]
    return Graph(a + b + 2, edges)


def star_plus_edge(n):
    """Star on n >= 3 vertices plus one edge joining two leaves."""
    if n < 3:
        raise ValueError(f"star_plus_edge needs n >= 3, got {n}")
    return Graph(n, [(0, i) for i in range(1, n)] + [(1, 2)])


def delta_n_minus_3_trees(n):
    """The three pairwise non-isomorphic trees of order n >= 6 whose maximum
    degree is n - 3, returned as a tuple (no particular order is promised).

    Shapes: a hub with n-4 leaves plus a pendant path of length 3; a hub
    with n-5 leaves plus two pendant paths of length 2; and a hub with n-4
    leaves plus one neighbor that itself carries two leaves.
    """
    if n < 6:
        raise ValueError(f"max-degree n-3 trees need n >= 6, got {n}")
    hub = 0
    # leaves 1..n-4 on the hub, then a pendant path hub-(n-3)-(n-2)-(n-1)
    t_path = Graph(n, [(hub, i) for i in range(1, n - 3)]
                   + [(hub, n - 3), (n - 3, n - 2), (n - 2, n - 1)])
    # leaves 1..n-5 on the hub, then two pendant 2-paths
    t_twin = Graph(n, [(hub, i) for i in range(1, n - 4)]
                   + [(hub, n - 4), (n - 4, n - 3), (hub, n - 2), (n - 2, n - 1)])
    # leaves 1..n-4 on the hub, then a neighbor with two leaves of its own
    t_fork = Graph(n, [(hub, i) for i in range(1, n - 3)]
                   + [(hub, n - 3), (n - 3, n - 2), (n - 3, n - 1)])
    return (t_path, t_twin, t_fork)


FAMILIES = {
    "star": (1, star),
    "path": (1, path),
    "cycle": (1, cycle),
    "complete": (1, complete),
    "double_star": (2, double_star),
    "star_plus_edge": (1, star_plus_edge),
    "delta_n_minus_3_trees": (1, delta_n_minus_3_trees),
}


def family(name, *params):
    """Build a named family member; delta_n_minus_3_trees yields a tuple."""
    if name not in FAMILIES:
        raise ValueError(f"unknown family {name!r}; choose from {sorted(FAMILIES)}")
    arity, fn = FAMILIES[name]
    if len(params) != arity:
        raise ValueError(f"family {name!r} takes {arity} parameter(s), got {len(params)}")
    return fn(*params)


# ---------------------------------------------------------------------------
# Canonical forms
# ---------------------------------------------------------------------------

def _min_bitstring_columns(g):
    """Lexicographically minimal upper-triangle column encoding over all
    vertex relabelings, found by depth-first search with prefix pruning.

    Column k (k = 1..n-1) packs the adjacency bits of the vertex placed at
    position k against positions 0..k-1, most significant bit first.  A
    branch is cut as soon as its column exceeds the best key's column at the
    same position under an otherwise equal prefix, so the result equals the
    full brute-force minimum at a fraction of the cost.
    """
    n = g.n
    masks = g.adj_masks
    if n == 1:
        return []
    best = None
    best_gen = 0
    placed = [0] * n
    cols = []

    def extend(k, used, tight):
        nonlocal best, best_gen
        options = []
        for u in range(n):
            if used >> u & 1:
                continue
            au = masks[u]
            col = 0
            for i in range(k):
                col = (col << 1) | (au >> placed[i] & 1)
            options.append((col, u))
        options.sort()
        for col, u in options:
            if tight and best is not None:
                if col > best[k - 1]:
                    return  # options are sorted: the rest are worse too
                child_tight = col == best[k - 1]
            else:
                child_tight = False
            placed[k] = u
            cols.append(col)
            gen_before = best_gen
            if k == n - 1:
                # a tight leaf reproduces best exactly; anything else must
                # have dipped below it at some earlier column
                if best is None or (not child_tight and cols < best):
                    best = cols.copy()
                    best_gen += 1
            else:
                extend(k + 1, used | (1 << u), child_tight)
            cols.pop()
            if best_gen != gen_before:
                # the new best runs through this node, so the prefix is
                # tight again for the remaining siblings
                tight = True

    # low-degree vertices first reaches small keys sooner (better pruning)
    for v in sorted(range(n), key=lambda u: (g.degrees[u], u)):
        placed[0] = v
        extend(1, 1 << v, True)
    return best


def _min_bitstring_key(g):
    cols = _min_bitstring_columns(g)
    bits = []
    for j, col in enumerate(cols or [], start=1):
        bits.extend((col >> (j - 1 - i)) & 1 for i in range(j))
    # pack into bytes
    out = bytearray([g.n])
    acc = 0
    fill = 0
    for b in bits:
        acc = (acc << 1) | b
        fill += 1
        if fill == 8:
            out.append(acc)
            acc = 0
            fill = 0
    if fill:
        out.append(acc << (8 - fill))
    return b"G" + bytes(out)


def _tree_centers(g):
    """One or two central vertices, by repeated leaf stripping."""
    n = g.n
    if n == 1:
        return [0]
    deg = list(g.degrees)
    alive = n
    layer = [v for v in range(n) if deg[v] == 1]
    removed = [False] * n
    while alive > 2:
        nxt = []
        for v in layer:
            removed[v] = True
            alive -= 1
            for w in g.neighbors(v):
                if not removed[w]:
                    deg[w] -= 1
                    if deg[w] == 1:
                        nxt.append(w)
        layer = nxt
    return [v for v in range(n) if not removed[v]]


def _rooted_form(g, root, banned):
    """Canonical parenthesis string of the subtree at root, not crossing
    into ``banned``."""
    parts = sorted(_rooted_form(g, w, root) for w in g.neighbors(root)
                   if w != banned)
    return "(" + "".join(parts) + ")"


def _tree_key(g):
    centers = _tree_centers(g)
    if len(centers) == 1:
        body = "V" + _rooted_form(g, centers[0], -1)
    else:
        c1, c2 = centers
        halves = sorted((_rooted_form(g, c1, c2), _rooted_form(g, c2, c1)))
        body = "E" + halves[0] + halves[1]
    return b"T" + body.encode("ascii")


def canonical_key(g):
    """Exact isomorphism key as bytes.

    Trees (up to {tree} vertices) use a center-rooted canonical encoding;
    everything else (up to {gen} vertices) the minimal adjacency bit-string
    over all relabelings.  Keys from the two routes never collide because a
    tree and a non-tree differ in edge count.
    """
    if g.is_tree():
        if g.n > TREE_KEY_CAP:
            raise ValueError(
                f"canonical_key supports trees up to n = {TREE_KEY_CAP}, got n = {g.n}")
        return _tree_key(g)
    if g.n > GENERAL_KEY_CAP:
        raise ValueError(
            f"canonical_key supports general graphs up to n = {GENERAL_KEY_CAP}, "
            f"got n = {g.n}")
    return _min_bitstring_key(g)


canonical_key.__doc__ = canonical_key.__doc__.format(tree=TREE_KEY_CAP,
                                                     gen=GENERAL_KEY_CAP)


# ---------------------------------------------------------------------------
# Automorphism orbits
# ---------------------------------------------------------------------------

def automorphism_orbits(g):
    """Partition the vertices of a connected graph (n <= {cap}) into
    automorphism orbits: u and v share a block exactly when some
    adjacency-preserving permutation maps u to v.

    The search walks the permutation tree depth-first, extending only
    degree- and adjacency-consistent images, and merges u ~ sigma(u) for
    every complete automorphism found.  It stops early once the merged
    partition reaches the coarsest partition compatible with local vertex
    invariants, at which point no further merge is possible.
    """
    if g.n > ORBIT_CAP:
        raise ValueError(f"automorphism_orbits supports n <= {ORBIT_CAP}, got {g.n}")
    if not g.connected:
        raise ValueError("automorphism_orbits requires a connected graph")
    n = g.n
    masks = g.adj_masks

    # local invariant: own degree plus sorted neighbor degrees
    inv = [(g.degrees[v], tuple(sorted(g.degrees[w] for w in g.neighbors(v))))
           for v in range(n)]
    candidates = [[w for w in range(n) if inv[w] == inv[v]] for v in range(n)]

    parent = list(range(n))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    def union(x, y):
        rx, ry = find(x), find(y)
        if rx != ry:
            parent[max(rx, ry)] = min(rx, ry)
            return True
        return False

    def invariant_blocks():
        blocks = {}
        for v in range(n):
            blocks.setdefault(inv[v], []).append(v)
        return blocks

    # number of blocks in the coarsest achievable partition
    floor_blocks = len(invariant_blocks())

    def merged_blocks():
        return len({find(v) for v in range(n)})

    image = [0] * n
    done = False

    def search(k, used):
        nonlocal done
        if done:
            return
        if k == n:
            changed = False
            for v in range(n):
                changed |= union(v, image[v])
            if changed and merged_blocks() == floor_blocks:
                done = True
            return
        ak = masks[k]
        for w in candidates[k]:
            if used >> w & 1:
                continue
            aw = masks[w]
            ok = True
            for i in range(k):
                if (ak >> i & 1) != (aw >> image[i] & 1):
                    ok = False
                    break
            if ok:
                image[k] = w
                search(k + 1, used | (1 << w))
                if done:
                    return

    search(0, 0)

    roots = {}
    for v in range(n):
        roots.setdefault(find(v), []).append(v)
    return sorted(roots.values())


automorphism_orbits.__doc__ = automorphism_orbits.__doc__.format(cap=ORBIT_CAP)
