"""Isomorphism-free generation of small graph classes: free trees,
connected graphs (optionally at fixed size), unicyclic and general
c-cyclic graphs, and trees with a prescribed maximum degree.

Every generator emits exactly one representative per isomorphism class and
re-verifies the class predicate on emission.  Emitted graphs carry a fixed
labeling; downstream code must not rely on any further labeling property.
"""

from dataclasses import dataclass
from functools import lru_cache

from .graph6 import iter_graph6
from .graphs import Graph, canonical_key

TREE_ENUM_CAP = 16
CONNECTED_ENUM_CAP = 8


# ---------------------------------------------------------------------------
# Free trees: successor walk over canonical level sequences
# ---------------------------------------------------------------------------
#
# A rooted tree is written as its preorder level sequence (root at level 0,
# subtrees in non-increasing order, making the sequence lexicographically
# maximal for its tree).  The successor step chops the rightmost vertex of
# level >= 2 and repeats the segment starting at its parent, which walks
# all rooted canonical sequences in decreasing lexicographic order.  Free
# trees keep only sequences whose first root subtree is no taller, no
# larger, and no later lexicographically than the rest of the tree, which
# pins the root to a centroid-like position and yields one sequence per
# free tree.

def _rooted_successor(seq):
    p = len(seq) - 1
    while p >= 0 and seq[p] <= 1:
        p -= 1
    if p <= 0:
        return None
    q = p - 1
    while seq[q] != seq[p] - 1:
        q -= 1
    nxt = list(seq)
    for i in range(p, len(nxt)):
        nxt[i] = nxt[i - (p - q)]
    return nxt


def _split_at_second_child(seq):
    ones = 0
    for i, level in enumerate(seq):
        if level == 1:
            ones += 1
            if ones == 2:
                left = [x - 1 for x in seq[1:i]]
                rest = [0] + seq[i:]
                return left, rest
    return [x - 1 for x in seq[1:]], [0]


def _is_free_canonical(seq):
    left, rest = _split_at_second_child(seq)
    if not left:
        return len(seq) <= 2
    h_left = max(left)
    h_rest = max(rest)
    if h_rest < h_left:
        return False
    if h_rest == h_left:
        if len(rest) < len(left):
            return False
        if len(rest) == len(left) and left > rest:
            return False
    return True


def _levels_to_graph(seq):
    edges = []
    stack = [0]
    for i in range(1, len(seq)):
        while seq[stack[-1]] >= seq[i]:
            stack.pop()
        edges.append((stack[-1], i))
        stack.append(i)
    return Graph(len(seq), edges)


def trees(n):
    """Yield one representative per isomorphism class of free trees on n
    vertices (3 <= n <= {cap}), in the successor walk's canonical order."""
    if not (3 <= n <= TREE_ENUM_CAP):
        raise ValueError(f"trees supports 3 <= n <= {TREE_ENUM_CAP}, got {n}")
    seq = list(range(n // 2 + 1)) + list(range(1, (n + 1) // 2))
    while seq is not None:
        if _is_free_canonical(seq):
            yield _levels_to_graph(seq)
        seq = _rooted_successor(seq)


trees.__doc__ = trees.__doc__.format(cap=TREE_ENUM_CAP)


# ---------------------------------------------------------------------------
# Connected graphs: grow by one vertex, deduplicate by canonical key
# ---------------------------------------------------------------------------
#
# Every connected graph on k vertices arises from a connected graph on k-1
# vertices by adding one vertex with a nonempty neighbor set (delete any
# spanning-tree leaf to see this), so growing each catalog from the
# previous one and deduplicating by exact canonical key covers every
# isomorphism class.  The edge-subset brute force over K_n stays in the
# test suite as the independent oracle at small orders.

@lru_cache(maxsize=None)
def _connected_catalog(n):
    if n == 1:
        return (Graph(1, []),)
    found = {}
    for base in _connected_catalog(n - 1):
        base_edges = list(base.edges)
        for subset in range(1, 1 << (n - 1)):
            extra = [(v, n - 1) for v in range(n - 1) if subset >> v & 1]
            g = Graph(n, base_edges + extra)
            key = canonical_key(g)
            if key not in found:
                found[key] = g
    return tuple(g for _, g in sorted(found.items()))


def connected_graphs(n, m=None):
    """Yield one representative per isomorphism class of connected graphs
    on n vertices (2 <= n <= {cap}), filtered to m edges when given, in
    canonical-key order."""
    if not (2 <= n <= CONNECTED_ENUM_CAP):
        raise ValueError(
            f"connected_graphs supports 2 <= n <= {CONNECTED_ENUM_CAP}, got {n}")
    if m is not None and not (n - 1 <= m <= n * (n - 1) // 2):
        raise ValueError(f"no connected graph has n = {n} and m = {m}")
    for g in _connected_catalog(n):
        if m is None or g.m == m:
            yield g


connected_graphs.__doc__ = connected_graphs.__doc__.format(cap=CONNECTED_ENUM_CAP)


# ---------------------------------------------------------------------------
# Class specifications
# ---------------------------------------------------------------------------

KINDS = ("trees", "connected", "unicyclic", "c-cyclic", "trees-max-degree")


@dataclass(frozen=True)
class GraphClassSpec:
    """A graph class to quantify over: which family, at which order, and
    (where relevant) the cycle rank c or the maximum degree."""
    kind: str
    n: int
    c: int = None
    delta: int = None
    m: int = None

    def __post_init__(self):
        if self.kind not in KINDS:
            raise ValueError(f"unknown class kind {self.kind!r}; choose from {KINDS}")
        if self.kind in ("trees", "trees-max-degree"):
            if not (3 <= self.n <= TREE_ENUM_CAP):
                raise ValueError(
                    f"tree classes support 3 <= n <= {TREE_ENUM_CAP}, got n = {self.n}")
            if self.kind == "trees-max-degree":
                if self.delta is None or not (1 <= self.delta <= self.n - 1):
                    raise ValueError(
                        f"trees-max-degree needs 1 <= delta <= n-1, got {self.delta}")
        else:
            if not (2 <= self.n <= CONNECTED_ENUM_CAP):
                raise ValueError(
                    f"{self.kind} classes support 2 <= n <= {CONNECTED_ENUM_CAP}, "
                    f"got n = {self.n}")
            if self.kind == "c-cyclic":
                if self.c is None or self.c < 0:
                    raise ValueError(f"c-cyclic needs c >= 0, got {self.c}")
                if self.n - 1 + self.c > self.n * (self.n - 1) // 2:
                    raise ValueError(
                        f"no graph of order {self.n} has cycle rank {self.c}")
            if self.kind == "connected" and self.m is not None:
                if not (self.n - 1 <= self.m <= self.n * (self.n - 1) // 2):
                    raise ValueError(
                        f"no connected graph has n = {self.n} and m = {self.m}")

    def label(self):
        parts = [f"n={self.n}"]
        if self.m is not None:
            parts.append(f"m={self.m}")
        if self.c is not None:
            parts.append(f"c={self.c}")
        if self.delta is not None:
            parts.append(f"delta={self.delta}")
        return f"{self.kind}({', '.join(parts)})"

    def matches(self, g):
        """Predicate the class imposes on a single graph."""
        if g.n != self.n or not g.connected:
            return False
        if self.kind == "trees":
            return g.m == g.n - 1
        if self.kind == "trees-max-degree":
            return g.m == g.n - 1 and g.max_degree == self.delta
        if self.kind == "unicyclic":
            return g.m == g.n
        if self.kind == "c-cyclic":
            return g.m == g.n - 1 + self.c
        return self.m is None or g.m == self.m


def graph_class(spec):
    """Yield the members of a class, one per isomorphism class."""
    if spec.kind == "trees":
        source = trees(spec.n)
    elif spec.kind == "trees-max-degree":
        source = trees(spec.n)
    elif spec.kind == "unicyclic":
        source = connected_graphs(spec.n, spec.n)
    elif spec.kind == "c-cyclic":
        source = connected_graphs(spec.n, spec.n - 1 + spec.c)
    else:
        source = connected_graphs(spec.n, spec.m)
    for g in source:
        if spec.matches(g):
            yield g


def read_graph_class(path, spec):
    """Treat a newline-delimited graph6 file as a graph class: parse every
    record and verify it satisfies the class predicate.

    Returns (graphs, mismatches) where mismatches lists
    (line_number, reason) for records that parse but miss the class."""
    graphs = []
    mismatches = []
    for lineno, g in iter_graph6(open(path, "r", encoding="ascii")):
        if spec.matches(g):
            graphs.append(g)
        else:
            mismatches.append(
                (lineno,
                 f"graph with n={g.n}, m={g.m}, max_degree={g.max_degree}, "
                 f"connected={g.connected} is not in {spec.label()}"))
    return graphs, mismatches
