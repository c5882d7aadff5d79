"""Structural classifiers for colored triple systems.

Everything here inspects a single coloring and either certifies a shape
(rich, simple, wealthy, tame) or reports how the shape fails.  The shapes
are parametrized families; recognizers scan a fixed canonical order of
symmetry variants so that recognition is deterministic and the returned
witness pins down which variant matched.

Most of the module is specific to k = 3 (triples) with two colors; the
rich and simple classifiers work for any uniformity.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations, permutations
from typing import Optional, Sequence

from .core import Coloring, Edge, homogeneity, restrict_normalize, reverse
from .matrices import StarMatrix3, metrics3


class SizeMismatchError(ValueError):
    """Coloring has the wrong vertex count for the requested shape."""


# --- nuclear decomposition ----------------------------------------------------


@dataclass(frozen=True)
class NuclearDecomposition:
    """Greedy split of [n] into maximal homogeneous intervals.

    intervals are inclusive (start, end) pairs covering [n] left to right;
    colors holds each interval's single internal color, None when the
    interval is too short to contain an edge.  Every interval except
    possibly the last stops because adjoining the next vertex would break
    homogeneity, so internal intervals always span at least one edge.
    """

    intervals: tuple[tuple[int, int], ...]
    colors: tuple[Optional[int], ...]

    @property
    def length(self) -> int:
        return len(self.intervals)


def nuclear_decomposition(c: Coloring) -> NuclearDecomposition:
    """Left-to-right greedy: each part is the longest homogeneous run."""
    n, k = c.n, c.k
    parts: list[tuple[int, int]] = []
    cols: list[Optional[int]] = []
    start = 1
    while start <= n:
        end = start
        col: Optional[int] = None
        while end < n:
            nxt = end + 1
            tentative = col
            broke = False
            if nxt - start + 1 >= k:
                for rest in combinations(range(start, nxt), k - 1):
                    cc = c.color(rest + (nxt,))
                    if tentative is None:
                        tentative = cc
                    elif cc != tentative:
                        broke = True
                        break
            if broke:
                break
            col = tentative
            end = nxt
        parts.append((start, end))
        cols.append(col)
        start = end + 1
    return NuclearDecomposition(tuple(parts), tuple(cols))


def crossing_matrix(c: Coloring, x: Sequence[int], y: Sequence[int],
                    z: Sequence[int]) -> StarMatrix3:
    """Three-dimensional color matrix of a vertex-set triple.

    Entry (i, j, k) is the color of {x_i, y_j, z_k}; when the three
    vertices are not pairwise distinct the entry is a star.  The sets may
    overlap arbitrarily.
    """
    if c.k != 3:
        raise ValueError("crossing matrices need k = 3")
    xs, ys, zs = sorted(set(x)), sorted(set(y)), sorted(set(z))
    for vs in (xs, ys, zs):
        if not vs:
            raise ValueError("base sets must be nonempty")
        if vs[0] < 1 or vs[-1] > c.n:
            raise ValueError(f"base set not inside [{c.n}]")

    def entry(i: int, j: int, kk: int) -> Optional[int]:
        e = {xs[i - 1], ys[j - 1], zs[kk - 1]}
        return c.color(e) if len(e) == 3 else None

    return StarMatrix3.build((len(xs), len(ys), len(zs)), entry)


# --- tameness -----------------------------------------------------------------


@dataclass(frozen=True)
class TameViolation:
    """First failure found for one tameness condition.

    intervals holds the 1-based indices of the nuclear intervals whose
    crossing matrix misbehaved (empty for the decomposition-length
    condition); metric names the offending quantity.
    """

    condition: int
    intervals: tuple[int, ...]
    metric: str
    value: int


@dataclass(frozen=True)
class TameReport:
    p: int
    conditions: tuple[bool, bool, bool, bool, bool]
    witness: Optional[TameViolation]

    @property
    def tame(self) -> bool:
        return all(self.conditions)


def is_p_tame(c: Coloring, p: int) -> TameReport:
    """Bounded-complexity test against the nuclear decomposition.

    Five conditions, all relative to the threshold p: (1) at most p nuclear
    intervals; (2) crossing matrices of interval triples have alternation
    number at most p; (3) those matrices have at most p row and column
    alternation positions; (4) and (5) the same two bounds for the doubled
    matrices of interval pairs.  All five are evaluated in full; the witness
    is the first violation in condition-then-lexicographic order.
    """
    if c.k != 3 or c.l != 2:
        raise ValueError("tameness is defined for k = 3, l = 2")
    if p < 3:
        raise ValueError("threshold p must be at least 3")
    nd = nuclear_decomposition(c)
    ivs = [tuple(range(a, b + 1)) for a, b in nd.intervals]
    s = len(ivs)
    conds = [True] * 5
    firsts: list[Optional[TameViolation]] = [None] * 5

    def record(cond: int, which: tuple[int, ...], metric: str, value: int):
        conds[cond - 1] = False
        if firsts[cond - 1] is None:
            firsts[cond - 1] = TameViolation(cond, which, metric, value)

    if s > p:
        record(1, (), "length", s)

    triple_metrics = [(idx, metrics3(crossing_matrix(c, ivs[idx[0] - 1],
                                                     ivs[idx[1] - 1],
                                                     ivs[idx[2] - 1])))
                      for idx in ((u + 1, v + 1, w + 1)
                                  for u, v, w in combinations(range(s), 3))]
    for idx, m in triple_metrics:
        if m.al > p:
            record(2, idx, "al", m.al)
    for idx, m in triple_metrics:
        if len(m.r_set) > p:
            record(3, idx, "rows", len(m.r_set))
        if len(m.c_set) > p:
            record(3, idx, "cols", len(m.c_set))

    pair_metrics = []
    for u, v in combinations(range(s), 2):
        pair_metrics.append(((u + 1, u + 1, v + 1),
                             metrics3(crossing_matrix(c, ivs[u], ivs[u], ivs[v]))))
        pair_metrics.append(((u + 1, v + 1, v + 1),
                             metrics3(crossing_matrix(c, ivs[u], ivs[v], ivs[v]))))
    for idx, m in pair_metrics:
        if m.al > p:
            record(4, idx, "al", m.al)
    for idx, m in pair_metrics:
        if len(m.r_set) > p:
            record(5, idx, "rows", len(m.r_set))
        if len(m.c_set) > p:
            record(5, idx, "cols", len(m.c_set))

    witness = next((w for w in firsts if w is not None), None)
    return TameReport(p, tuple(conds), witness)


# --- richness -----------------------------------------------------------------


@dataclass(frozen=True)
class RichWitness:
    """Sliding-window shape: r - k + 1 equal windows, then one that differs.

    The window E_i keeps f fixed left vertices, a sliding middle block of
    g vertices offset by i, and h fixed right vertices.
    """

    r: int
    f: int
    g: int
    h: int
    colors: tuple[int, int]
    edges: tuple[Edge, ...]


def rich_window_edges(k: int, r: int, f: int, g: int, h: int) -> tuple[Edge, ...]:
    """The r - k + 2 window edges of shape (f, g, h) on [2r - k + 1]."""
    if min(f, h) < 0 or g < 1 or f + g + h != k:
        raise ValueError(f"bad window shape ({f},{g},{h}) for k={k}")
    if r < k:
        raise ValueError("window shapes need r >= k")
    n = 2 * r - k + 1
    fixed_left = tuple(range(1, f + 1))
    fixed_right = tuple(range(n - h + 1, n + 1))
    out = []
    for i in range(1, r - k + 3):
        out.append(fixed_left + tuple(range(f + i, f + g + i)) + fixed_right)
    return tuple(out)


def is_r_rich(c: Coloring, r: int) -> Optional[RichWitness]:
    """First window shape, in (f, g, h) order, realizing the rich pattern."""
    k = c.k
    if r < k or c.n != 2 * r - k + 1:
        return None
    for f in range(k):
        for g in range(1, k - f + 1):
            h = k - f - g
            edges = rich_window_edges(k, r, f, g, h)
            a = c.color(edges[0])
            if any(c.color(e) != a for e in edges[1:-1]):
                continue
            b = c.color(edges[-1])
            if b == a:
                continue
            return RichWitness(r, f, g, h, (a, b), edges)
    return None


def rich_deletions(c: Coloring, r: int, f: int, g: int, h: int) -> list[Coloring]:
    """Smaller colorings obtained by deleting j middle-left and the matching
    number of middle-right vertices, j = 0 .. r - k + 1.

    Applied to a coloring carrying the (f, g, h) rich pattern these are
    pairwise distinct, which is what makes rich colorings force growth.
    """
    k = c.k
    n = c.n
    if n != 2 * r - k + 1:
        raise SizeMismatchError(f"expected {2 * r - k + 1} vertices, got {n}")
    out = []
    for j in range(r - k + 2):
        dropped = set(range(f + 1, f + j + 1))
        right_cut = r - k + 1 - j
        dropped.update(range(n - h - right_cut + 1, n - h + 1))
        keep = [v for v in range(1, n + 1) if v not in dropped]
        out.append(restrict_normalize(c, keep))
    return out


# --- simplicity ---------------------------------------------------------------


@dataclass(frozen=True)
class SimplicityViolation:
    """How a coloring fails to be boundary-controlled.

    condition "C1": two differing edges inside the middle zone.
    condition "C2": a boundary-anchored vertex tuple whose color depends on
    the choice of deep-middle completion vertex.
    """

    condition: str
    edges: Optional[tuple[Edge, Edge]] = None
    vertices: Optional[tuple[int, ...]] = None
    pivots: Optional[tuple[int, int]] = None
    colors: Optional[tuple[int, int]] = None


def is_c_simple(c: Coloring, cpar: int) -> Optional[SimplicityViolation]:
    """None when the coloring is controlled by its cpar-vertex boundary.

    Two requirements for n > 2*cpar + k: the middle [cpar+1, n-cpar] is
    homogeneous, and any k-1 distinct vertices whose first member sits in
    the boundary give the same color no matter which deep-middle vertex
    completes them.  Small colorings pass vacuously.
    """
    k, n = c.k, c.n
    if cpar < k:
        raise ValueError("boundary width must be at least k")
    if n <= 2 * cpar + k:
        return None
    mid = homogeneity(c, range(cpar + 1, n - cpar + 1))
    if not mid.homogeneous:
        e1, e2 = mid.witness
        return SimplicityViolation("C1", edges=(e1, e2),
                                   colors=(c.color(e1), c.color(e2)))
    boundary = list(range(1, cpar + 1)) + list(range(n - cpar + 1, n + 1))
    wlo, whi = 2 * cpar + 1, n - 2 * cpar
    for v1 in boundary:
        others = [u for u in range(1, n + 1) if u != v1]
        for rest in combinations(others, k - 2):
            vs = (v1,) + rest
            used = set(vs)
            ref_w = ref_col = None
            for w in range(wlo, whi + 1):
                if w in used:
                    continue
                col = c.color(vs + (w,))
                if ref_w is None:
                    ref_w, ref_col = w, col
                elif col != ref_col:
                    return SimplicityViolation("C2", vertices=vs,
                                               pivots=(ref_w, w),
                                               colors=(ref_col, col))
    return None


# --- wealthy families ---------------------------------------------------------
#
# Nine families of colorings on r, 2r+1, 3r, 3r+1 or 4r vertices.  Each is
# closed under a small symmetry group; the group elements are enumerated as
# explicit variants so recognition can report which image matched.

WEALTHY_FAMILIES = ("W1'", "W1''", "W2.1", "W2.2",
                    "W3.1", "W3.2", "W3.3", "W4.1", "W4.2")

_PERMS3 = tuple(permutations((1, 2, 3)))


@dataclass(frozen=True)
class WealthyVariant:
    """One symmetry image of a wealthy family's defining shape.

    Families read only their own fields: W1' uses colors and reverse, W1''
    colors, W2.x and W3.1/W3.2 use swap + reversals + perm, W3.3 reverse,
    W4.1 nothing, W4.2 reverse + block_swap.
    """

    swap: bool = False
    reversals: tuple[bool, ...] = ()
    perm: tuple[int, ...] = ()
    reverse: bool = False
    block_swap: bool = False
    colors: Optional[tuple[int, int]] = None


def wealthy_size(family: str, r: int) -> int:
    if r < 1:
        raise ValueError("family parameter r must be >= 1")
    sizes = {"W1'": r, "W1''": r, "W2.1": 2 * r + 1, "W2.2": 2 * r + 1,
             "W3.1": 3 * r, "W3.2": 3 * r, "W3.3": 3 * r + 1,
             "W4.1": 4 * r, "W4.2": 4 * r}
    if family not in sizes:
        raise ValueError(f"unknown wealthy family {family!r}")
    return sizes[family]


def wealthy_variants(family: str, r: int) -> tuple[WealthyVariant, ...]:
    """All symmetry variants of a family, in canonical scan order."""
    wealthy_size(family, r)
    if family == "W1'":
        return tuple(WealthyVariant(colors=cp, reverse=rv)
                     for cp in ((0, 1), (1, 0)) for rv in (False, True))
    if family == "W1''":
        return tuple(WealthyVariant(colors=cp) for cp in ((0, 1), (1, 0)))
    if family in ("W2.1", "W2.2"):
        return tuple(WealthyVariant(swap=sw, reversals=(r1, r2), perm=pm)
                     for sw in (False, True)
                     for r1 in (False, True) for r2 in (False, True)
                     for pm in _PERMS3)
    if family in ("W3.1", "W3.2"):
        return tuple(WealthyVariant(swap=sw, reversals=(r1, r2, r3), perm=pm)
                     for sw in (False, True)
                     for r1 in (False, True) for r2 in (False, True)
                     for r3 in (False, True) for pm in _PERMS3)
    if family == "W3.3":
        return tuple(WealthyVariant(reverse=rv) for rv in (False, True))
    if family == "W4.1":
        return (WealthyVariant(),)
    return tuple(WealthyVariant(reverse=rv, block_swap=bs)
                 for rv in (False, True) for bs in (False, True))


def _validate_variant(family: str, v: WealthyVariant):
    def want(swap=False, nrev=0, perm=False, rev=False, bswap=False, colors=False):
        if not colors and v.colors is not None:
            raise ValueError(f"{family} variants carry no colors")
        if colors and (v.colors is None or sorted(v.colors) != [0, 1]):
            raise ValueError(f"{family} variants need colors (0,1) or (1,0)")
        if len(v.reversals) != nrev:
            raise ValueError(f"{family} variants need {nrev} reversal flags")
        if perm and tuple(sorted(v.perm)) != (1, 2, 3):
            raise ValueError(f"{family} variants need a permutation of (1,2,3)")
        if not perm and v.perm != ():
            raise ValueError(f"{family} variants carry no permutation")
        if not swap and v.swap:
            raise ValueError(f"{family} variants carry no color swap")
        if not rev and v.reverse:
            raise ValueError(f"{family} variants carry no reversal")
        if not bswap and v.block_swap:
            raise ValueError(f"{family} variants carry no block swap")

    if family == "W1'":
        want(rev=True, colors=True)
    elif family == "W1''":
        want(colors=True)
    elif family in ("W2.1", "W2.2"):
        want(swap=True, nrev=2, perm=True)
    elif family in ("W3.1", "W3.2"):
        want(swap=True, nrev=3, perm=True)
    elif family == "W3.3":
        want(rev=True)
    elif family == "W4.1":
        want()
    elif family == "W4.2":
        want(rev=True, bswap=True)
    else:
        raise ValueError(f"unknown wealthy family {family!r}")


def _flag(b: bool) -> str:
    return "1" if b else "0"


def variant_to_text(family: str, v: WealthyVariant) -> str:
    _validate_variant(family, v)
    if family == "W1'":
        a, b = v.colors
        return f"colors:{a}{b},rev:{_flag(v.reverse)}"
    if family == "W1''":
        a, b = v.colors
        return f"colors:{a}{b}"
    if family in ("W2.1", "W2.2", "W3.1", "W3.2"):
        revs = "".join(_flag(x) for x in v.reversals)
        perm = "".join(str(x) for x in v.perm)
        return f"swap:{_flag(v.swap)},rev:{revs},perm:{perm}"
    if family == "W3.3":
        return f"rev:{_flag(v.reverse)}"
    if family == "W4.1":
        return "plain"
    return f"rev:{_flag(v.reverse)},blockswap:{_flag(v.block_swap)}"


def variant_from_text(family: str, text: str) -> WealthyVariant:
    if family == "W4.1":
        if text != "plain":
            raise ValueError(f"W4.1 has only the 'plain' variant, got {text!r}")
        return WealthyVariant()
    fields = {}
    for part in text.split(","):
        key, sep, val = part.partition(":")
        if not sep:
            raise ValueError(f"malformed variant field {part!r}")
        fields[key] = val

    def flags(s: str) -> tuple[bool, ...]:
        if set(s) - {"0", "1"}:
            raise ValueError(f"bad flag string {s!r}")
        return tuple(ch == "1" for ch in s)

    try:
        if family == "W1'":
            a, b = (int(ch) for ch in fields.pop("colors"))
            (rv,) = flags(fields.pop("rev"))
            v = WealthyVariant(colors=(a, b), reverse=rv)
        elif family == "W1''":
            a, b = (int(ch) for ch in fields.pop("colors"))
            v = WealthyVariant(colors=(a, b))
        elif family in ("W2.1", "W2.2", "W3.1", "W3.2"):
            (sw,) = flags(fields.pop("swap"))
            revs = flags(fields.pop("rev"))
            perm = tuple(int(ch) for ch in fields.pop("perm"))
            v = WealthyVariant(swap=sw, reversals=revs, perm=perm)
        elif family == "W3.3":
            (rv,) = flags(fields.pop("rev"))
            v = WealthyVariant(reverse=rv)
        elif family == "W4.2":
            (rv,) = flags(fields.pop("rev"))
            (bs,) = flags(fields.pop("blockswap"))
            v = WealthyVariant(reverse=rv, block_swap=bs)
        else:
            raise ValueError(f"unknown wealthy family {family!r}")
    except KeyError as exc:
        raise ValueError(f"variant for {family} is missing field {exc}") from exc
    if fields:
        raise ValueError(f"unexpected variant fields {sorted(fields)}")
    _validate_variant(family, v)
    return v


def _block_starts(sizes: tuple[int, ...], perm: tuple[int, ...]) -> dict[int, int]:
    # perm lists the old block numbers in their new left-to-right order
    starts = {}
    pos = 1
    for b in perm:
        starts[b] = pos
        pos += sizes[b - 1]
    return starts


def _w42_cell(r: int, v: WealthyVariant, i: int) -> tuple[int, tuple[int, int, int]]:
    idx = r - i + 1 if v.reverse else i
    if v.block_swap:
        return 3 * r + idx, (3 * i - 2, 3 * i - 1, 3 * i)
    return idx, (r + 3 * i - 2, r + 3 * i - 1, r + 3 * i)


def wealthy_assignment(family: str, r: int,
                       v: Optional[WealthyVariant] = None) -> dict[Edge, int]:
    """Edge colors pinned by a family variant.

    For the equation families (W1', W1'', W2.x, W3.1, W3.2) this is the
    full defining constraint set; membership means matching every entry.
    For the existential families (W3.3, W4.1, W4.2) it is one canonical
    satisfying assignment used by the generator.
    """
    if v is None:
        v = wealthy_variants(family, r)[0]
    _validate_variant(family, v)
    n = wealthy_size(family, r)
    out: dict[Edge, int] = {}
    if family == "W1'":
        a, b = v.colors
        for i in range(3, r + 1):
            e = (1, 2, i)
            if v.reverse:
                e = tuple(sorted(n - x + 1 for x in e))
            out[e] = a if i % 2 == 0 else b
    elif family == "W1''":
        a, b = v.colors
        for i in range(2, r):
            out[(1, i, r)] = a if i % 2 == 0 else b
    elif family in ("W2.1", "W2.2"):
        starts = _block_starts((r, r, 1), v.perm)
        rev1, rev2 = v.reversals
        apex = starts[3]
        for i in range(1, r + 1):
            p1 = starts[1] + (r - i if rev1 else i - 1)
            for j in range(1, r + 1):
                p2 = starts[2] + (r - j if rev2 else j - 1)
                hit = (i == j) if family == "W2.1" else (i <= j)
                out[tuple(sorted((p1, p2, apex)))] = int(hit) ^ int(v.swap)
    elif family in ("W3.1", "W3.2"):
        starts = _block_starts((r, r, r), v.perm)
        rev1, rev2, rev3 = v.reversals
        for i in range(1, r + 1):
            p1 = starts[1] + (r - i if rev1 else i - 1)
            p2 = starts[2] + (r - i if rev2 else i - 1)
            for j in range(1, r + 1):
                p3 = starts[3] + (r - j if rev3 else j - 1)
                hit = (i == j) if family == "W3.1" else (i <= j)
                out[tuple(sorted((p1, p2, p3)))] = int(hit) ^ int(v.swap)
    elif family == "W3.3":
        apex = n
        for i in range(1, r + 1):
            b1, b2, b3 = 3 * i - 2, 3 * i - 1, 3 * i
            for e, col in (((b1, b2, apex), 0), ((b1, b3, apex), 1),
                           ((b2, b3, apex), 1)):
                if v.reverse:
                    e = tuple(sorted(n - x + 1 for x in e))
                out[e] = col
    elif family == "W4.1":
        for i in range(1, r + 1):
            q = (4 * i - 3, 4 * i - 2, 4 * i - 1, 4 * i)
            out[(q[0], q[1], q[2])] = 0
            out[(q[0], q[1], q[3])] = 1
            out[(q[0], q[2], q[3])] = 1
            out[(q[1], q[2], q[3])] = 1
    else:
        for i in range(1, r + 1):
            apex, (b1, b2, b3) = _w42_cell(r, v, i)
            out[tuple(sorted((apex, b1, b2)))] = 0
            out[tuple(sorted((apex, b1, b3)))] = 1
            out[tuple(sorted((apex, b2, b3)))] = 1
    return out


def _wealthy_base_sets(family: str, r: int,
                       v: WealthyVariant) -> Optional[tuple[tuple[int, int], ...]]:
    if family in ("W2.1", "W2.2"):
        starts = _block_starts((r, r, 1), v.perm)
        return ((starts[1], starts[1] + r - 1),
                (starts[2], starts[2] + r - 1),
                (starts[3], starts[3]))
    if family in ("W3.1", "W3.2"):
        return ((1, r), (r + 1, 2 * r), (2 * r + 1, 3 * r))
    if family == "W4.2":
        if v.block_swap:
            return ((3 * r + 1, 4 * r), (1, 3 * r))
        return ((1, r), (r + 1, 4 * r))
    return None


def _pick_unbalanced(col12: int, col13: int, col23: int,
                     b1: int, b2: int, b3: int) -> Optional[tuple[int, int, int]]:
    # first vertex sharing two edges of different colors, scanned in order
    if col12 != col13:
        return (b1, b2, b3)
    if col12 != col23:
        return (b2, b1, b3)
    if col13 != col23:
        return (b3, b1, b2)
    return None


@dataclass(frozen=True)
class WealthyWitness:
    """Certificate that a coloring realizes a wealthy family variant.

    base_sets lists the block intervals the variant lives on (families
    without distinguished blocks leave it None); triples records, for the
    existential families, one (a, b, c) per index i with the edges through
    a and b versus a and c colored differently.
    """

    family: str
    r: int
    variant: WealthyVariant
    base_sets: Optional[tuple[tuple[int, int], ...]] = None
    triples: Optional[tuple[tuple[int, int, int], ...]] = None

    def to_text(self) -> str:
        parts = [f"wealthy family={self.family} r={self.r}",
                 f"variant={variant_to_text(self.family, self.variant)}"]
        if self.base_sets is not None:
            blocks = "|".join(f"[{a},{b}]" if a != b else f"[{a}]"
                              for a, b in self.base_sets)
            parts.append(f"base={blocks}")
        if self.triples is not None:
            trips = "|".join(",".join(str(x) for x in t) for t in self.triples)
            parts.append(f"triples={trips}")
        return " ".join(parts)


def _check_variant(c: Coloring, family: str, r: int, v: WealthyVariant):
    """(base_sets, triples) when c realizes the variant, else None."""
    if family in ("W1'", "W1''", "W2.1", "W2.2", "W3.1", "W3.2"):
        for e, want in wealthy_assignment(family, r, v).items():
            if c.color(e) != want:
                return None
        return _wealthy_base_sets(family, r, v), None
    n = c.n
    if family == "W3.3":
        target = reverse(c) if v.reverse else c
        apex = n
        trips = []
        for i in range(1, r + 1):
            b1, b2, b3 = 3 * i - 2, 3 * i - 1, 3 * i
            t = _pick_unbalanced(target.color((b1, b2, apex)),
                                 target.color((b1, b3, apex)),
                                 target.color((b2, b3, apex)), b1, b2, b3)
            if t is None:
                return None
            if v.reverse:
                t = tuple(n - x + 1 for x in t)
            trips.append(t)
        return None, tuple(trips)
    if family == "W4.1":
        for i in range(1, r + 1):
            q = (4 * i - 3, 4 * i - 2, 4 * i - 1, 4 * i)
            seen = {c.color(e) for e in combinations(q, 3)}
            if len(seen) == 1:
                return None
        return None, None
    # W4.2
    trips = []
    for i in range(1, r + 1):
        apex, (b1, b2, b3) = _w42_cell(r, v, i)
        t = _pick_unbalanced(c.color((apex, b1, b2)), c.color((apex, b1, b3)),
                             c.color((apex, b2, b3)), b1, b2, b3)
        if t is None:
            return None
        trips.append(t)
    return _wealthy_base_sets(family, r, v), tuple(trips)


def is_wealthy(c: Coloring, family: str, r: int,
               variant: Optional[WealthyVariant] = None) -> Optional[WealthyWitness]:
    """Recognize a wealthy family member; None when no variant matches.

    With variant=None all variants are scanned in canonical order and the
    first match is reported; passing a variant checks exactly that one.
    A coloring of the wrong size raises SizeMismatchError rather than
    returning None, since size mismatch is a call error, not a near miss.
    """
    if c.k != 3 or c.l != 2:
        raise ValueError("wealthy families are defined for k = 3, l = 2")
    n = wealthy_size(family, r)
    if c.n != n:
        raise SizeMismatchError(f"{family} with r={r} needs {n} vertices, "
                                f"got {c.n}")
    if variant is not None:
        _validate_variant(family, variant)
        candidates: tuple[WealthyVariant, ...] = (variant,)
    else:
        candidates = wealthy_variants(family, r)
    for v in candidates:
        res = _check_variant(c, family, r, v)
        if res is not None:
            return WealthyWitness(family, r, v, res[0], res[1])
    return None


def w41_vertices_from_nuclear(c: Coloring, r: int) -> tuple[int, ...]:
    """4r vertices whose restriction realizes W4.1, from a long decomposition.

    Needs at least 2r nuclear intervals.  Quadruple i takes three vertices
    of interval 2i-1 together with the first vertex of interval 2i: the
    greedy break guarantees an edge across the boundary whose color differs
    from the interval's own, so the quadruple is not monochromatic.
    """
    if c.k != 3:
        raise ValueError("needs k = 3")
    nd = nuclear_decomposition(c)
    if nd.length < 2 * r:
        raise ValueError(f"need at least {2 * r} nuclear intervals, "
                         f"have {nd.length}")
    out: list[int] = []
    for i in range(1, r + 1):
        a0, b0 = nd.intervals[2 * i - 2]
        col = nd.colors[2 * i - 2]
        nxt = nd.intervals[2 * i - 1][0]
        found = None
        for x, y in combinations(range(a0, b0 + 1), 2):
            if c.color((x, y, nxt)) != col:
                found = (x, y)
                break
        assert found is not None
        x, y = found
        z = min(u for u in range(a0, b0 + 1) if u not in (x, y))
        out.extend(sorted((x, y, z, nxt)))
    return tuple(out)
