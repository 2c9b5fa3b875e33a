"""Typing of per-leg vertex selections and minimum-cost representatives.

A subset of one g-leg's vertices always falls into exactly one shape class:

standard legs
    S0  the empty selection
    S1  one vertex at position >= 2 (long legs only)
    S2  at least two vertices (long legs only)
    S3  exactly the position-1 vertex

modified legs (inner core at position i)
    M1  exactly one of ell_a / ell_b
    M2  neither ell_a nor ell_b, at least two vertices at positions >= i+2,
        other vertices allowed anywhere except position i+1
    M3  at least two vertices, at least one of them ell_a or ell_b

Anything else is INVALID (note the empty set is INVALID on a modified leg).

A selection over all g-legs of one core is a *local set* when:
    1. at most one standard leg is S0 (the rest are S1/S2/S3);
    2. no modified leg is INVALID;
    3. if any standard leg is S0, no modified leg is M1;
    4. if a long leg is S0, every other long leg is S2;
    5. if a short leg is S0, every long leg is S2 or S3.

A local set is *thrifty* when its S2/M2/M3 selections have exactly two
vertices each.
"""

from __future__ import annotations

from enum import Enum
from fractions import Fraction

from .topology import GLeg, LegKind
from .tree import WeightedTree


class VertexNotOnLeg(ValueError):
    """A subset vertex does not belong to the leg."""


class SolutionType(Enum):
    S0 = "s0"
    S1 = "s1"
    S2 = "s2"
    S3 = "s3"
    M1 = "m1"
    M2 = "m2"
    M3 = "m3"
    INVALID = "invalid"

    # Members are singletons; identity hashing keeps the per-leg tables off
    # Enum's name-string hash, which shows up at millions of lookups.
    __hash__ = object.__hash__


class TypedLegSolution:
    """A vertex selection on one leg with its type and exact cost."""

    __slots__ = ("leg", "vertices", "type", "_scaled_cost", "_denominator")

    def __init__(self, leg: GLeg, vertices: tuple[int, ...], type: SolutionType,
                 scaled_cost: int, denominator: int):
        self.leg = leg
        self.vertices = vertices
        self.type = type
        self._scaled_cost = scaled_cost
        self._denominator = denominator

    @property
    def cost(self) -> Fraction:
        return Fraction(self._scaled_cost, self._denominator)

    def __repr__(self) -> str:
        return (f"TypedLegSolution(root={self.leg.root}, type={self.type.value}, "
                f"vertices={self.vertices})")


class LocalSetAssignment:
    """Per-leg solutions for all g-legs of one core."""

    __slots__ = ("core", "solutions")

    def __init__(self, core: int, solutions: tuple[TypedLegSolution, ...]):
        self.core = core
        self.solutions = solutions

    def vertices(self) -> list[int]:
        out: list[int] = []
        for sol in self.solutions:
            out.extend(sol.vertices)
        return out

    def __repr__(self) -> str:
        return f"LocalSetAssignment(core={self.core}, solutions={list(self.solutions)})"


def type_of_solution(leg: GLeg, subset, positions: dict[int, int] | None = None) -> SolutionType:
    """Classify a subset of one leg's vertices into its solution type.

    ``positions`` may pass a precomputed vertex->position map for the leg to
    avoid rebuilding it; callers that type many subsets of the same leg want
    that.

    Raises:
        VertexNotOnLeg: if the subset strays off the leg.
    """
    if positions is None:
        positions = dict(zip(leg.vertices, leg.positions))
    sub = set(subset)
    for v in sub:
        if v not in positions:
            raise VertexNotOnLeg(f"vertex {v} is not on the leg rooted at {leg.root}")

    if leg.kind is not LegKind.MODIFIED:
        if not sub:
            return SolutionType.S0
        if len(sub) >= 2:
            return SolutionType.S2
        (x,) = sub
        return SolutionType.S3 if positions[x] == 1 else SolutionType.S1

    has_a = leg.ell_a in sub
    has_b = leg.ell_b in sub
    if has_a or has_b:
        if len(sub) == 1:
            return SolutionType.M1
        return SolutionType.M3
    deep_cut = leg.small_core_pos + 2
    deep = 0
    for v in sub:
        if positions[v] >= deep_cut:
            deep += 1
            if deep >= 2:
                return SolutionType.M2
    return SolutionType.INVALID


def violated_conditions(legs_with_types) -> list[int]:
    """Which of the five local-set conditions a typed assignment breaks.

    ``legs_with_types`` is an iterable of (GLeg, SolutionType) pairs covering
    all g-legs of one core.  Returns the sorted list of broken condition
    numbers (1-5, as in the module docstring); empty means the assignment is
    a local set.
    """
    pairs = list(legs_with_types)
    standard_s0 = 0
    short_s0 = long_s0 = False
    any_m1 = any_modified_invalid = False
    long_types: list[SolutionType] = []
    for leg, t in pairs:
        if leg.kind is LegKind.MODIFIED:
            if t is SolutionType.M1:
                any_m1 = True
            elif t is SolutionType.INVALID:
                any_modified_invalid = True
        else:
            if t is SolutionType.S0:
                standard_s0 += 1
                if leg.kind is LegKind.SHORT_STANDARD:
                    short_s0 = True
                else:
                    long_s0 = True
            if leg.kind is LegKind.LONG_STANDARD:
                long_types.append(t)

    violated = []
    if standard_s0 >= 2:
        violated.append(1)
    if any_modified_invalid:
        violated.append(2)
    if standard_s0 >= 1 and any_m1:
        violated.append(3)
    if long_s0:
        # Every long leg but the S0 one must be S2.
        others = list(long_types)
        others.remove(SolutionType.S0)
        if any(t is not SolutionType.S2 for t in others):
            violated.append(4)
    if short_s0 and any(t not in (SolutionType.S2, SolutionType.S3) for t in long_types):
        violated.append(5)
    return violated


def is_local_set(core_glegs, subset):
    """Test the local-set conditions for a subset of one core's g-legs.

    Returns (ok, per_leg_types, violated) where per_leg_types parallels
    ``core_glegs`` and violated lists the broken condition numbers.

    Raises:
        VertexNotOnLeg: if the subset contains a vertex on none of the legs
            (the owning core itself included — cores never join a local set).
    """
    legs = list(core_glegs)
    owner: dict[int, int] = {}
    for idx, leg in enumerate(legs):
        for v in leg.vertices:
            owner[v] = idx
    per_leg: list[set[int]] = [set() for _ in legs]
    for v in set(subset):
        if v not in owner:
            raise VertexNotOnLeg(f"vertex {v} is on no g-leg of this core")
        per_leg[owner[v]].add(v)
    types = [type_of_solution(leg, chosen) for leg, chosen in zip(legs, per_leg)]
    violated = violated_conditions(zip(legs, types))
    return (not violated, types, violated)


def is_thrifty(assignment: LocalSetAssignment) -> bool:
    """True iff every S2/M2/M3 solution in the assignment has exactly two vertices."""
    two_vertex_types = (SolutionType.S2, SolutionType.M2, SolutionType.M3)
    return all(len(sol.vertices) == 2
               for sol in assignment.solutions if sol.type in two_vertex_types)


class LegSolutionEntry:
    """A minimum-cost representative of one solution type on one leg."""

    __slots__ = ("type", "vertices", "scaled_cost", "available", "_denominator")

    def __init__(self, type: SolutionType, vertices: tuple[int, ...],
                 scaled_cost: int, available: bool, denominator: int):
        self.type = type
        self.vertices = vertices
        self.scaled_cost = scaled_cost
        self.available = available
        self._denominator = denominator

    @property
    def cost(self) -> Fraction:
        return Fraction(self.scaled_cost, self._denominator)

    def __repr__(self) -> str:
        if not self.available:
            return f"LegSolutionEntry({self.type.value}, unavailable)"
        return f"LegSolutionEntry({self.type.value}, {self.vertices}, cost={self.cost})"


def _two_cheapest(candidates, scaled):
    # First two of `candidates` in (cost, id) order, without sorting the rest.
    best1 = best2 = None
    for v in candidates:
        key = (scaled[v], v)
        if best1 is None or key < best1:
            best1, best2 = key, best1
        elif best2 is None or key < best2:
            best2 = key
    return best1, best2


def min_cost_solutions(leg: GLeg, tree: WeightedTree) -> dict[SolutionType, LegSolutionEntry]:
    """Minimum-cost representative of each solution type on one leg.

    Standard legs get entries for S0/S1/S2/S3, modified legs for M1/M2/M3.
    Entries where the leg is too short carry available=False.  All "cheapest"
    choices break cost ties toward the lower vertex id, and multi-vertex
    entries use the thrifty two-vertex shape.  Linear in the leg length.
    """
    scaled = tree.scaled_costs
    den = tree.cost_denominator
    verts = leg.vertices
    table: dict[SolutionType, LegSolutionEntry] = {}

    if leg.kind is not LegKind.MODIFIED:
        table[SolutionType.S0] = LegSolutionEntry(SolutionType.S0, (), 0, True, den)
        first = verts[0]
        table[SolutionType.S3] = LegSolutionEntry(
            SolutionType.S3, (first,), scaled[first], True, den)
        if len(verts) >= 2:
            deep1, _ = _two_cheapest(verts[1:], scaled)
            table[SolutionType.S1] = LegSolutionEntry(
                SolutionType.S1, (deep1[1],), deep1[0], True, den)
            best1, best2 = _two_cheapest(verts, scaled)
            pair = tuple(sorted((best1[1], best2[1])))
            table[SolutionType.S2] = LegSolutionEntry(
                SolutionType.S2, pair, best1[0] + best2[0], True, den)
        else:
            table[SolutionType.S1] = LegSolutionEntry(SolutionType.S1, (), 0, False, den)
            table[SolutionType.S2] = LegSolutionEntry(SolutionType.S2, (), 0, False, den)
        return table

    a, b = leg.ell_a, leg.ell_b
    cheap_ab = min(a, b, key=lambda v: (scaled[v], v))
    table[SolutionType.M1] = LegSolutionEntry(
        SolutionType.M1, (cheap_ab,), scaled[cheap_ab], True, den)

    deep_cut = leg.small_core_pos + 2
    deep = [v for v, p in zip(verts, leg.positions) if p >= deep_cut]
    if len(deep) >= 2:
        d1, d2 = _two_cheapest(deep, scaled)
        pair = tuple(sorted((d1[1], d2[1])))
        table[SolutionType.M2] = LegSolutionEntry(
            SolutionType.M2, pair, d1[0] + d2[0], True, den)
    else:
        table[SolutionType.M2] = LegSolutionEntry(SolutionType.M2, (), 0, False, den)

    mate1, _ = _two_cheapest((v for v in verts if v != cheap_ab), scaled)
    pair = tuple(sorted((cheap_ab, mate1[1])))
    table[SolutionType.M3] = LegSolutionEntry(
        SolutionType.M3, pair, scaled[cheap_ab] + mate1[0], True, den)
    return table
