"""Ground-truth checking: definitional verification and brute-force minimum.

Everything here works straight from the definitions — distances from each
landmark, pair-by-pair separator counting, and exhaustive subset enumeration.
It is deliberately naive so that the fast solver has something independent to
be measured against.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .tree import WeightedTree, bfs_distances, total_cost


class TooLarge(ValueError):
    """The tree exceeds the brute-force size cap."""


class NotALandmarkSet(ValueError):
    """A valid landmark set was required but the given set is not one."""


@dataclass(frozen=True)
class ModelKind:
    """Which pairs need separating, and how many separators each pair needs.

    kind "nl": every pair of distinct vertices outside L needs k separators
    in L.  kind "ap": every pair of distinct vertices of V, landmarks
    included, needs k separators.
    """
    kind: str
    k: int

    def __post_init__(self):
        if self.kind not in ("nl", "ap"):
            raise ValueError(f"model kind must be 'nl' or 'ap', got {self.kind!r}")
        if not isinstance(self.k, int) or isinstance(self.k, bool) or self.k < 1:
            raise ValueError(f"k must be a positive integer, got {self.k!r}")


NL2 = ModelKind("nl", 2)


@dataclass(frozen=True)
class Verdict:
    """Outcome of a verification: valid, or the under-separated pairs.

    violations holds (x, y, separator_count) triples; valid iff it is empty.
    """
    valid: bool
    violations: tuple[tuple[int, int, int], ...]


def verify_landmark(tree: WeightedTree, landmarks, model: ModelKind,
                    max_violations: int | None = None) -> Verdict:
    """Check a landmark set straight from the definition.

    Computes BFS distances from every member of ``landmarks``, then counts
    separating landmarks for every required pair (all pairs for "ap", pairs
    outside the set for "nl").  Counting short-circuits at k, and violation
    collection stops after ``max_violations`` pairs when given.

    Returns a Verdict; never raises on an invalid set.
    """
    n = tree.n
    lset = set(landmarks)
    for v in lset:
        if not (0 <= v < n):
            raise IndexError(f"landmark {v} outside [0, {n})")
    rows = [bfs_distances(tree, v) for v in sorted(lset)]
    if model.kind == "nl":
        required = [v for v in range(n) if v not in lset]
    else:
        required = list(range(n))
    k = model.k
    violations: list[tuple[int, int, int]] = []
    m = len(required)
    for i in range(m):
        u = required[i]
        for j in range(i + 1, m):
            v = required[j]
            count = 0
            for row in rows:
                if row[u] != row[v]:
                    count += 1
                    if count >= k:
                        break
            if count < k:
                violations.append((u, v, count))
                if max_violations is not None and len(violations) >= max_violations:
                    return Verdict(False, tuple(violations))
    return Verdict(not violations, tuple(violations))


def brute_min(tree: WeightedTree, model: ModelKind,
              cap: int = 18) -> tuple[tuple[int, ...], Fraction]:
    """Exhaustive minimum-cost landmark set over all 2^n subsets.

    Ties on cost resolve to the lexicographically smallest sorted id tuple.

    Raises:
        TooLarge: if tree.n exceeds ``cap`` (default 18).
    """
    n = tree.n
    if n > cap:
        raise TooLarge(f"brute force capped at n={cap}, tree has n={n}")
    dist = [bfs_distances(tree, v) for v in range(n)]
    k = model.k
    all_pairs = model.kind == "ap"

    # For each pair that might need separating, a bitmask of its separators.
    pairs: list[tuple[int, int]] = []  # (pair_mask, separator_mask)
    for u in range(n):
        du = dist[u]
        for v in range(u + 1, n):
            dv = dist[v]
            sep = 0
            for t in range(n):
                if du[t] != dv[t]:
                    sep |= 1 << t
            pairs.append(((1 << u) | (1 << v), sep))
    # Pairs with few separators fail most subsets; test them first.
    pairs.sort(key=lambda p: bin(p[1]).count("1"))

    scaled = tree.scaled_costs
    # cost_of[mask] by peeling the lowest set bit.
    cost_of = [0] * (1 << n)
    for mask in range(1, 1 << n):
        low = mask & -mask
        cost_of[mask] = cost_of[mask ^ low] + scaled[low.bit_length() - 1]

    best_mask = -1
    best_cost = None
    best_ids: tuple[int, ...] | None = None
    for mask in range(1 << n):
        cost = cost_of[mask]
        if best_cost is not None and cost > best_cost:
            continue
        ok = True
        for pair_mask, sep in pairs:
            if (all_pairs or not (mask & pair_mask)) and (mask & sep).bit_count() < k:
                ok = False
                break
        if not ok:
            continue
        ids = tuple(v for v in range(n) if mask >> v & 1)
        if best_cost is None or cost < best_cost or ids < best_ids:
            best_mask, best_cost, best_ids = mask, cost, ids
    if best_ids is None:
        # V itself is always valid for "nl"; "ap" can be infeasible (n=1 apart,
        # a pair of twins with k > separators), report that honestly.
        raise NotALandmarkSet("no subset of V is a valid landmark set for this model")
    return best_ids, Fraction(best_cost, tree.cost_denominator)


def is_minimal_inclusion(tree: WeightedTree, landmarks, model: ModelKind) -> bool:
    """True iff no single vertex can be dropped from a valid landmark set.

    Raises:
        NotALandmarkSet: if ``landmarks`` is not valid to begin with.
    """
    base = sorted(set(landmarks))
    if not verify_landmark(tree, base, model, max_violations=1).valid:
        raise NotALandmarkSet(f"{base} is not a valid landmark set")
    for v in base:
        smaller = [w for w in base if w != v]
        if verify_landmark(tree, smaller, model, max_violations=1).valid:
            return False
    return True
