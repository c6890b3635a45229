"""Closed-form upper bounds for the ABC spectral radius and related
threshold values, as total functions of (order, size, max degree).

Throughout, ``excess`` denotes 2m - n + 1: the degree-sum surplus of a
connected graph over a tree on the same vertices, plus one.
"""

import math
from dataclasses import dataclass, field


def _check_parameters(n, m, delta):
    if n < 2:
        raise ValueError(f"order must be >= 2, got {n}")
    if not (n - 1 <= m <= n * (n - 1) // 2):
        raise ValueError(f"size {m} impossible for a connected graph of order {n}")
    if not (1 <= delta <= n - 1):
        raise ValueError(f"max degree {delta} outside 1..{n - 1}")


def degree_upper_bound(n, m, delta):
    """sqrt(delta + excess/delta - 2); valid for every connected graph with
    the given order, size, and max degree, and met with equality by the
    star (m = n-1, delta = n-1) and the complete graph."""
    _check_parameters(n, m, delta)
    excess = 2 * m - n + 1
    radicand = delta + excess / delta - 2.0
    if radicand < 0:
        raise ValueError(
            f"negative radicand for (n={n}, m={m}, delta={delta}); "
            "parameters do not describe a connected graph")
    return math.sqrt(radicand)


def degree_upper_bound_int(n, m, delta):
    """Integer-step variant sqrt(delta + ceil(excess/delta) - 2); never
    smaller than degree_upper_bound but better behaved across delta."""
    _check_parameters(n, m, delta)
    excess = 2 * m - n + 1
    k = -(-excess // delta)
    radicand = delta + k - 2
    if radicand < 0:
        raise ValueError(
            f"negative radicand for (n={n}, m={m}, delta={delta})")
    return math.sqrt(radicand)


def dip(x, d):
    """x + d/x - 2 for x, d > 0: decreasing then increasing, with minimum
    2*sqrt(d) - 2 at x = sqrt(d); on an interval its maximum sits at an
    endpoint."""
    if x <= 0 or d <= 0:
        raise ValueError(f"dip requires positive arguments, got ({x}, {d})")
    return x + d / x - 2.0


def cyclomatic_upper_bound(n, c):
    """sqrt(n - 2 + 2c/(n-1)) for graphs whose cycle rank c is at most
    (n-1)/2; rejected above that range because nothing is established
    there."""
    if n < 3:
        raise ValueError(f"order must be >= 3, got {n}")
    if c < 0:
        raise ValueError(f"cycle rank must be >= 0, got {c}")
    if 2 * c > n - 1:
        raise ValueError(
            f"cycle rank {c} exceeds (n-1)/2 = {(n - 1) / 2}; bound not applicable")
    return math.sqrt(n - 2 + 2.0 * c / (n - 1))


def named_thresholds(n):
    """The recurring reference values at order n >= 3, keyed by role:

    * ``path_lower``       sqrt(2) cos(pi/(n+1)), the minimum over trees
      and over connected graphs, attained by the path;
    * ``tree_upper``       sqrt(n-2), attained among trees by the star;
    * ``complete_upper``   sqrt(2n-4), the cap over all connected graphs,
      attained only by the complete graph;
    * ``double_star_gate`` sqrt(n-3.5), separating the second-ranked tree
      from every tree of max degree n-3; present only for n >= 4.
    """
    if n < 3:
        raise ValueError(f"order must be >= 3, got {n}")
    values = {
        "path_lower": math.sqrt(2.0) * math.cos(math.pi / (n + 1)),
        "tree_upper": math.sqrt(n - 2),
        "complete_upper": math.sqrt(2 * n - 4),
    }
    if n >= 4:
        values["double_star_gate"] = math.sqrt(n - 3.5)
    return values


@dataclass(frozen=True)
class BoundReport:
    """All bound values relevant to one (n, m, delta) signature."""
    n: int
    m: int
    delta: int
    excess: int
    k: int
    degree_bound: float
    degree_bound_int: float
    estrada_lower: float
    estrada_upper: float
    class_bounds: dict = field(default_factory=dict)


def bound_report(g):
    """Evaluate every applicable bound for a connected graph."""
    from .invariants import estrada_bounds  # local import avoids a cycle at module load

    n, m, delta = g.n, g.m, g.max_degree
    excess = 2 * m - n + 1
    lower, upper = estrada_bounds(g)
    labeled = {}
    if n >= 3:
        labeled.update(named_thresholds(n))
        c = g.cycle_rank
        if 2 * c <= n - 1:
            labeled["cyclomatic_upper"] = cyclomatic_upper_bound(n, c)
    return BoundReport(
        n=n, m=m, delta=delta, excess=excess,
        k=-(-excess // delta),
        degree_bound=degree_upper_bound(n, m, delta),
        degree_bound_int=degree_upper_bound_int(n, m, delta),
        estrada_lower=lower, estrada_upper=upper,
        class_bounds=labeled)


# ---------------------------------------------------------------------------
# Behaviour of the integer-step bound across the max degree
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class StepClassification:
    """Comparison of the integer-step bound at two consecutive max degrees
    delta_lo and delta_hi = delta_lo + 1 (for fixed order and size).

    ``kind`` is "increase" when the bound strictly grows with the degree
    (consecutive degrees inside one ceiling plateau always do), "tie" when
    both degrees give the same bound (the ceiling drops by exactly one
    step), and "inversion" when the bound drops as the degree grows (the
    ceiling falls by two or more; only possible below sqrt(excess)).

    For ties, ``tie_identity_ceiling`` records whether delta_lo equals
    ceil(excess/(k-1)) - 1 with k the ceiling at delta_lo (always expected),
    and ``tie_identity_exact`` whether excess/(k-1) - 1 lands on delta_lo
    without rounding, which additionally requires k-1 to divide excess.
    """
    delta_lo: int
    delta_hi: int
    value_lo: float
    value_hi: float
    kind: str
    tie_identity_ceiling: bool = False
    tie_identity_exact: bool = False


def int_bound_profile(n, m, delta_min=None):
    """Tabulate the integer-step bound for all max degrees up to n - 1 and
    classify each adjacent step.

    Returns (table, steps): ``table`` maps delta to the bound value,
    ``steps`` is a list of StepClassification for consecutive degrees.
    """
    if n < 2:
        raise ValueError(f"order must be >= 2, got {n}")
    if not (n - 1 <= m <= n * (n - 1) // 2):
        raise ValueError(f"size {m} impossible at order {n}")
    excess = 2 * m - n + 1
    if delta_min is None:
        delta_min = max(1, -(-excess // (n - 1)))
    table = {}
    for delta in range(delta_min, n):
        table[delta] = degree_upper_bound_int(n, m, delta)
    steps = []
    for delta in range(delta_min, n - 1):
        lo, hi = table[delta], table[delta + 1]
        k_lo = -(-excess // delta)
        k_hi = -(-excess // (delta + 1))
        if k_lo == k_hi:
            kind = "increase"  # same plateau: radicand grows by one
        elif k_lo - k_hi == 1:
            kind = "tie"       # degree up one, ceiling down one
        else:
            kind = "inversion"
        entry = StepClassification(delta, delta + 1, lo, hi, kind)
        if kind == "tie":
            ceil_form = -(-excess // (k_lo - 1)) - 1
            entry = StepClassification(
                delta, delta + 1, lo, hi, kind,
                tie_identity_ceiling=(delta == ceil_form),
                tie_identity_exact=(excess % (k_lo - 1) == 0
                                    and delta == excess // (k_lo - 1) - 1))
        steps.append(entry)
    return table, steps
