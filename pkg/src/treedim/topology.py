"""Vertex taxonomy and per-core leg decomposition for weighted trees.

A vertex of degree >= 3 is a core, degree 2 a path vertex, degree 1 a leaf.
A core's neighbor subtree with no cores inside is a standard leg (short if it
is a single vertex, long otherwise); a neighbor subtree whose only core has
degree exactly 3 with two bare legs, one of them short, is a modified leg.
Standard and modified legs together are the g-legs of the core.

`classify` labels every vertex, materializes each core's g-legs with exact
positions, refines non-small cores into minor/main, and computes the global
case tag that tells the solver which strategy applies.  One rooted traversal
over the cores — walking each bare chain between them exactly once — yields
subtree core counts; everything else is derived from those counts, so the
whole classification is linear in n.
"""

from __future__ import annotations

from array import array
from enum import Enum
from typing import NamedTuple

from .tree import WeightedTree


class InternalInvariantViolation(RuntimeError):
    """A structural fact that should be impossible for trees was observed.

    Signals an implementation bug, never bad input.
    """


class VertexClass(Enum):
    LEAF = "leaf"
    PATH_VERTEX = "path_vertex"
    SMALL_CORE = "small_core"
    MINOR_CORE = "minor_core"
    MAIN_CORE = "main_core"

    @property
    def is_core(self) -> bool:
        return self not in (VertexClass.LEAF, VertexClass.PATH_VERTEX)

    @property
    def is_regular_core(self) -> bool:
        return self in (VertexClass.MINOR_CORE, VertexClass.MAIN_CORE)


class LegKind(Enum):
    SHORT_STANDARD = "short_standard"
    LONG_STANDARD = "long_standard"
    MODIFIED = "modified"

    @property
    def is_standard(self) -> bool:
        return self is not LegKind.MODIFIED


class CaseTag(Enum):
    TINY = "tiny"
    PATH = "path"
    SINGLE_SMALL_CORE = "single_small_core"
    TWO_SMALL_CORES = "two_small_cores"
    HAS_REGULAR_CORE = "has_regular_core"


class GLeg(NamedTuple):
    """One g-leg of a core.

    A NamedTuple so the hundreds of thousands built on large trees are
    constructed at C speed.

    Attributes:
        owner: the core the leg hangs off.
        root: the owner's neighbor that starts the leg.
        kind: SHORT_STANDARD, LONG_STANDARD, or MODIFIED.
        vertices / positions: parallel tuples; positions[i] is the tree
            distance of vertices[i] from the owner.
        small_core: for modified legs, the inner degree-3 core; else None.
        small_core_pos: its position on the leg; else None.
        ell_a / ell_b: the two vertices one step past the inner core of a
            modified leg (both at position small_core_pos + 1); ell_b is the
            one forming a single-vertex leg of the inner core.  When both of
            its legs are single vertices, ell_a is the lower id.  None on
            standard legs.
    """

    owner: int
    root: int
    kind: LegKind
    vertices: tuple[int, ...]
    positions: tuple[int, ...]
    small_core: int | None = None
    small_core_pos: int | None = None
    ell_a: int | None = None
    ell_b: int | None = None

    def __repr__(self) -> str:
        return (f"GLeg(owner={self.owner}, root={self.root}, "
                f"kind={self.kind.value}, vertices={self.vertices})")


# A standard leg of length L always has positions (1, ..., L); share one
# tuple per length instead of building a fresh one for every leg.
_POS1 = (1,)
_POS_BY_LEN: dict[int, tuple[int, ...]] = {1: _POS1}


def _positions(length: int) -> tuple[int, ...]:
    pos = _POS_BY_LEN.get(length)
    if pos is None:
        pos = _POS_BY_LEN[length] = tuple(range(1, length + 1))
    return pos


class Topology:
    """Classification result: per-vertex classes, per-core g-legs, case tag."""

    __slots__ = ("case_tag", "vertex_class", "glegs", "cores",
                 "small_cores", "regular_cores", "minor_cores", "main_cores")

    def __init__(self, case_tag, vertex_class, glegs, cores,
                 small_cores, regular_cores, minor_cores, main_cores):
        self.case_tag = case_tag
        self.vertex_class = vertex_class
        self.glegs = glegs
        self.cores = cores
        self.small_cores = small_cores
        self.regular_cores = regular_cores
        self.minor_cores = minor_cores
        self.main_cores = main_cores

    def __repr__(self) -> str:
        return (f"Topology(case_tag={self.case_tag.value}, "
                f"cores={list(self.cores)})")


def _walk_bare_path(heads, flat, start: int, prev: int) -> list[int]:
    # Follow a path away from `prev` until a leaf.  Every vertex on the way
    # has degree exactly 2 (it would be a core otherwise), so the next hop is
    # whichever of the two packed neighbors is not the one behind us.
    verts = [start]
    cur = start
    while True:
        h = heads[cur]
        if heads[cur + 1] - h == 1:
            return verts
        nxt = flat[h]
        if nxt == prev:
            nxt = flat[h + 1]
        verts.append(nxt)
        prev, cur = cur, nxt


def _build_modified_leg(heads, flat, owner: int, root: int, inner_core: int) -> GLeg:
    # Path from the owner down to the inner core; strictly between the two
    # every vertex has degree exactly 2, like in _walk_bare_path.
    path: list[int] = []
    prev, cur = owner, root
    while cur != inner_core:
        path.append(cur)
        h = heads[cur]
        nxt = flat[h]
        if nxt == prev:
            nxt = flat[h + 1]
        prev, cur = cur, nxt
    i = len(path) + 1  # position of the inner core
    leg_roots = [x for x in flat[heads[inner_core]:heads[inner_core + 1]] if x != prev]
    if len(leg_roots) != 2:
        raise InternalInvariantViolation(
            f"inner core {inner_core} of a modified leg must have exactly two legs")
    first = _walk_bare_path(heads, flat, leg_roots[0], inner_core)
    second = _walk_bare_path(heads, flat, leg_roots[1], inner_core)
    if len(first) == 1 and len(second) == 1:
        # Both legs are single vertices: the lower id plays the ell_a role.
        a_side, b_side = sorted((first, second))
    elif len(second) == 1:
        a_side, b_side = first, second
    elif len(first) == 1:
        a_side, b_side = second, first
    else:
        raise InternalInvariantViolation(
            f"inner core {inner_core} of a modified leg has no short leg")
    vertices = path + [inner_core] + a_side + b_side
    positions = list(range(1, i + 1)) + list(range(i + 1, i + 1 + len(a_side))) + [i + 1]
    return GLeg(owner, root, LegKind.MODIFIED, tuple(vertices), tuple(positions),
                small_core=inner_core, small_core_pos=i,
                ell_a=a_side[0], ell_b=b_side[0])


def classify(tree: WeightedTree) -> Topology:
    """Classify every vertex and decompose every core into g-legs.

    Returns a Topology whose case_tag is exactly one of: TINY (n <= 2), PATH
    (no cores), HAS_REGULAR_CORE, SINGLE_SMALL_CORE, or TWO_SMALL_CORES.

    Raises:
        InternalInvariantViolation: if the classification contradicts facts
            that hold for every tree (e.g. three small cores and no regular
            core) — an implementation bug, not invalid input.
    """
    n = tree.n

    if n <= 2:
        classes = tuple([VertexClass.LEAF] * n)
        return Topology(CaseTag.TINY, classes, {}, (), (), (), (), ())

    heads = tree._adj_heads
    flat = memoryview(tree._adj_flat)
    classes: list[VertexClass] = [
        VertexClass.LEAF if heads[v + 1] - heads[v] == 1 else VertexClass.PATH_VERTEX
        for v in range(n)
    ]
    cores = [v for v in range(n) if heads[v + 1] - heads[v] >= 3]
    if not cores:
        return Topology(CaseTag.PATH, tuple(classes), {}, (), (), (), (), ())

    # Traversal over cores only, from the lowest-id core.  Between two cores
    # (and below a core, down to a leaf) the tree is a bare chain of
    # degree-2 vertices, so instead of queueing those one by one the scan of
    # a core's neighborhood walks each chain to its far end in one go.  A
    # chain ending in a leaf is one of the core's standard legs, finished on
    # the spot; a chain ending at another core is a connector, recorded as a
    # (chain start, child core) slot so the chain is walked exactly once.
    # Per-core numeric state lives in C int arrays: dense 4-byte slots stay
    # cache-resident where lists of boxed ints would scatter across the
    # heap, and the packed adjacency (one flat int array plus offsets) is
    # read the same way.
    root = cores[0]
    parent_core = array("i", (-1,)) * n
    parent_nbr = array("i", (-1,)) * n
    core_count = array("i", bytes(4 * n))
    slots_at: list = [None] * n
    short_kind = LegKind.SHORT_STANDARD
    long_kind = LegKind.LONG_STANDARD
    core_order = [root]
    cpush = core_order.append
    for v in core_order:
        pn = parent_nbr[v]
        slot_list: list = []
        sap = slot_list.append
        n_standard = n_short = 0
        for w in flat[heads[v]:heads[v + 1]]:
            if w == pn:
                sap(-1)
                continue
            hw = heads[w]
            dw = heads[w + 1] - hw
            if dw == 1:
                sap(GLeg(v, w, short_kind, (w,), _POS1))
                n_short += 1
                n_standard += 1
            elif dw == 2:
                verts = [w]
                vap = verts.append
                prev = v
                cur = w
                h = hw
                while True:
                    nxt = flat[h]
                    if nxt == prev:
                        nxt = flat[h + 1]
                    h = heads[nxt]
                    dn = heads[nxt + 1] - h
                    if dn == 2:
                        vap(nxt)
                        prev = cur
                        cur = nxt
                        continue
                    if dn == 1:
                        vap(nxt)
                        sap(GLeg(v, w, long_kind, tuple(verts),
                                 _positions(len(verts))))
                        n_standard += 1
                    else:
                        parent_core[nxt] = v
                        parent_nbr[nxt] = cur
                        sap((w, nxt))
                        cpush(nxt)
                    break
            else:
                parent_core[w] = v
                parent_nbr[w] = v
                sap((w, w))
                cpush(w)
        slots_at[v] = (slot_list, n_standard, n_short)
        core_count[v] = 1

    # Children-before-parent pass over the cores.  By the time v comes up,
    # every child core has already added its subtree's core count into
    # core_count[v], so both sides of v are decided here: a connector slot
    # (w, u) whose subtree holds exactly one core — necessarily u itself —
    # becomes a modified leg when u is small and no leg at all otherwise
    # (u ran first, so its verdict is in).  The parent-side slot never
    # yields a standard leg, because `root` always lies above v; when
    # exactly one core is above it can only be `root`, whose verdict lands
    # last, so that slot alone is settled after the pass.
    #
    # A core's own verdict: small is decided by its standard legs alone, so
    # it is known right away; minor-versus-main needs the modified-leg
    # count and waits where the parent-side slot is open.  Codes in
    # `verdict`: 1 small, 2 minor, 3 main, 0 still open.  A core's slot
    # list has exactly one entry per neighbor, so its length is the degree.
    is_small = bytearray(n)
    verdict = bytearray(n)
    glegs: dict[int, tuple[GLeg, ...]] = {}
    pending_legs: dict[int, tuple[list, int, int]] = {}
    deferred: list[tuple[int, int, int]] = []
    total_cores = len(cores)
    for v in reversed(core_order):
        slot_list, n_standard, n_short = slots_at[v]
        degree = len(slot_list)
        leg_list: list[GLeg | None] = []
        lap = leg_list.append
        n_modified = 0
        pending = False
        for s in slot_list:
            if type(s) is GLeg:
                lap(s)
            elif type(s) is tuple:
                w, u = s
                if core_count[u] == 1 and is_small[u]:
                    lap(_build_modified_leg(heads, flat, v, w, u))
                    n_modified += 1
            elif total_cores - core_count[v] == 1:
                deferred.append((v, len(leg_list), parent_nbr[v]))
                lap(None)
                pending = True
        if degree == 3 and n_standard >= 2 and n_short >= 1:
            is_small[v] = 1
            verdict[v] = 1
        if pending:
            pending_legs[v] = (leg_list, n_standard, n_short)
        else:
            glegs[v] = tuple(leg_list)
            if not verdict[v]:
                minor = (n_standard + n_modified <= 1
                         or (degree >= 4 and n_modified == 0
                             and n_standard == 2 and n_short >= 1))
                verdict[v] = 2 if minor else 3
        pc = parent_core[v]
        if pc >= 0:
            core_count[pc] += core_count[v]

    for v, slot, w in deferred:
        leg_list, n_standard, n_short = pending_legs[v]
        if is_small[root]:
            leg_list[slot] = _build_modified_leg(heads, flat, v, w, root)
        else:
            del leg_list[slot]
        glegs[v] = tuple(leg_list)
        if not verdict[v]:
            n_modified = len(leg_list) - n_standard
            minor = (n_standard + n_modified <= 1
                     or (heads[v + 1] - heads[v] >= 4 and n_modified == 0
                         and n_standard == 2 and n_short >= 1))
            verdict[v] = 2 if minor else 3

    small_cores: list[int] = []
    regular_cores: list[int] = []
    minor_cores: list[int] = []
    main_cores: list[int] = []
    for v in cores:
        k = verdict[v]
        if k == 1:
            classes[v] = VertexClass.SMALL_CORE
            small_cores.append(v)
        elif k == 2:
            classes[v] = VertexClass.MINOR_CORE
            regular_cores.append(v)
            minor_cores.append(v)
        else:
            classes[v] = VertexClass.MAIN_CORE
            regular_cores.append(v)
            main_cores.append(v)

    if regular_cores:
        case_tag = CaseTag.HAS_REGULAR_CORE
    elif len(small_cores) == 1:
        case_tag = CaseTag.SINGLE_SMALL_CORE
    elif len(small_cores) == 2:
        case_tag = CaseTag.TWO_SMALL_CORES
    else:
        raise InternalInvariantViolation(
            f"{len(small_cores)} small cores without any regular core")

    return Topology(case_tag, tuple(classes), glegs, tuple(cores),
                    tuple(small_cores), tuple(regular_cores),
                    tuple(minor_cores), tuple(main_cores))


def gleg_positions(leg: GLeg):
    """Map each leg vertex to its position, plus the (ell_a, ell_b) pair.

    Returns (positions, pair) where pair is (ell_a, ell_b) for modified legs
    and None for standard legs.
    """
    positions = dict(zip(leg.vertices, leg.positions))
    if leg.kind is LegKind.MODIFIED:
        return positions, (leg.ell_a, leg.ell_b)
    return positions, None
