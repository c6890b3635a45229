"""Atom-bond connectivity (ABC) quantities of a graph.

Every edge ij carries the weight sqrt((d_i + d_j - 2) / (d_i * d_j)); the
ABC matrix places those weights at adjacent pairs and zero elsewhere.  The
largest eigenvalue of that matrix is the ABC spectral radius.
"""

import math
from dataclasses import dataclass

import numpy as np

from .eigen import spectral_radius
from .graphs import Graph


def edge_weight(x, y):
    """Weight sqrt((x + y - 2) / (x * y)) for an edge joining vertices of
    degree x and y; symmetric in its arguments and zero only at x = y = 1."""
    if x != int(x) or y != int(y) or x < 1 or y < 1:
        raise ValueError(f"degrees must be integers >= 1, got ({x}, {y})")
    return math.sqrt((x + y - 2) / (x * y))


@dataclass(frozen=True)
class AbcWeights:
    """ABC matrix of a graph together with its row sums.

    Row sums are accumulated left to right in index order so repeated runs
    reproduce the same bytes.
    """
    graph: Graph
    matrix: np.ndarray
    row_sums: tuple


def abc_matrix(g):
    n = g.n
    mat = np.zeros((n, n))
    for u, v in g.edges:
        w = edge_weight(g.degrees[u], g.degrees[v])
        mat[u, v] = mat[v, u] = w
    row_sums = []
    for i in range(n):
        acc = 0.0
        row = mat[i]
        for j in range(n):
            acc += row[j]
        row_sums.append(float(acc))
    return AbcWeights(g, mat, tuple(row_sums))


def abc_index(g):
    """Sum of edge weights over all edges."""
    total = 0.0
    for u, v in g.edges:
        total += edge_weight(g.degrees[u], g.degrees[v])
    return total


def r_minus_one(g):
    """General Randic index at exponent -1: sum of 1/(d_i d_j) over edges."""
    total = 0.0
    for u, v in g.edges:
        total += 1.0 / (g.degrees[u] * g.degrees[v])
    return total


def estrada_bounds(g):
    """Sandwich for the ABC spectral radius of a connected graph:
    (2/n) * abc_index below, the largest row sum above; both are tight
    exactly when all row sums coincide."""
    if not g.connected:
        raise ValueError("estrada_bounds requires a connected graph")
    if g.n < 2:
        raise ValueError(f"estrada_bounds requires n >= 2, got n = {g.n}")
    weights = abc_matrix(g)
    lower = (2.0 / g.n) * abc_index(g)
    upper = max(weights.row_sums)
    return lower, upper


def abc_spectral_radius(g):
    """Largest eigenvalue of the ABC matrix.  Orders 1 and 2 yield 0 (the
    matrix is empty or identically zero there)."""
    return spectral_radius(abc_matrix(g).matrix).radius


def abc_spectral(g):
    """Full eigensolver result (radius, eigenvector, diagnostics) for the
    ABC matrix."""
    return spectral_radius(abc_matrix(g).matrix)
