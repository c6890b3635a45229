"""Shared fixtures and independent oracles for the test suite.

The oracles here deliberately avoid the library's generation paths: trees
come from exhaustive Prufer sequences, connected graphs from brute force
over all edge subsets of the complete graph.  Both reduce to canonical-key
deduplication, and the key itself is cross-checked elsewhere against a
literal all-permutations minimum.
"""

import heapq
import itertools

import pytest

from abcspectra.graphs import Graph, canonical_key


def prufer_to_graph(seq, n):
    """Labeled tree on n vertices from a Prufer sequence of length n-2,
    by smallest-leaf elimination."""
    degree = [1] * n
    for v in seq:
        degree[v] += 1
    leaves = [v for v in range(n) if degree[v] == 1]
    heapq.heapify(leaves)
    edges = []
    for v in seq:
        leaf = heapq.heappop(leaves)
        edges.append((leaf, v))
        degree[v] -= 1
        if degree[v] == 1:
            heapq.heappush(leaves, v)
    edges.append((heapq.heappop(leaves), heapq.heappop(leaves)))
    return Graph(n, edges)


def prufer_tree_classes(n):
    """Set of canonical keys over all labeled trees on n vertices."""
    if n == 1:
        return {canonical_key(Graph(1, []))}
    if n == 2:
        return {canonical_key(Graph(2, [(0, 1)]))}
    keys = set()
    for seq in itertools.product(range(n), repeat=n - 2):
        keys.add(canonical_key(prufer_to_graph(seq, n)))
    return keys


def subset_connected_classes(n):
    """Canonical keys of every connected graph on n vertices, by brute
    force over all edge subsets of the complete graph."""
    pairs = list(itertools.combinations(range(n), 2))
    keys = set()
    for bits in range(1 << len(pairs)):
        if bits.bit_count() < n - 1:
            continue
        edges = [pairs[i] for i in range(len(pairs)) if bits >> i & 1]
        g = Graph(n, edges)
        if g.connected:
            keys.add(canonical_key(g))
    return keys


class _LazyCatalogs:
    """Index by order to get the connected-graph catalog; each order is
    built on first use only (the builder itself is cached)."""

    def __getitem__(self, n):
        from abcspectra.enumeration import connected_graphs
        return tuple(connected_graphs(n))


@pytest.fixture(scope="session")
def connected_by_n():
    return _LazyCatalogs()
