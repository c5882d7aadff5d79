"""Edge-colored ordered complete k-uniform hypergraphs and their containment order.

Vertices are the 1-based integers [n] = {1, ..., n}; colors are 0-based,
{0, ..., l-1}.  A coloring assigns a color to every k-subset ("edge") of
[n].  Edges are stored by their rank in the lexicographic order of sorted
vertex tuples, so a coloring is just (k, l, n) plus a tuple of C(n, k)
colors.  A coloring with n < k has no edges; such empty colorings are
legal and compare contained in everything of at least their size.

Containment: (m, phi) is contained in (n, chi) when some increasing
injection f of [m] into [n] maps every edge E to an edge f(E) with
chi(f(E)) = phi(E).
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from math import comb
from typing import Callable, Iterable, Iterator, Mapping, Optional, Union


class InvalidEdgeError(ValueError):
    """Edge is not a k-subset of [n]."""


class IncompatibleColoringsError(ValueError):
    """Operands disagree on uniformity k or color count l."""


Edge = tuple[int, ...]


def _check_edge(edge: Iterable[int], n: int, k: int) -> Edge:
    e = tuple(sorted(edge))
    if len(e) != k:
        raise InvalidEdgeError(f"expected {k} vertices, got {len(e)}")
    if len(set(e)) != k:
        raise InvalidEdgeError(f"repeated vertex in {e}")
    if e[0] < 1 or e[-1] > n:
        raise InvalidEdgeError(f"edge {e} not inside [{n}]")
    return e


def all_edges(n: int, k: int) -> Iterator[Edge]:
    """All k-subsets of [n] in lexicographic (storage) order."""
    return combinations(range(1, n + 1), k)


def edge_index(edge: Iterable[int], n: int, k: int) -> int:
    """0-based rank of a k-subset of [n] in lexicographic order."""
    e = _check_edge(edge, n, k)
    rank = 0
    prev = 0
    for pos, v in enumerate(e):
        for u in range(prev + 1, v):
            rank += comb(n - u, k - pos - 1)
        prev = v
    return rank


def edge_unindex(rank: int, n: int, k: int) -> Edge:
    """Inverse of edge_index."""
    if not 0 <= rank < comb(n, k):
        raise InvalidEdgeError(f"rank {rank} out of range for C({n},{k})")
    out = []
    v = 1
    for pos in range(k):
        while True:
            here = comb(n - v, k - pos - 1)
            if rank < here:
                break
            rank -= here
            v += 1
        out.append(v)
        v += 1
    return tuple(out)


def _validate_header(k: int, l: int, n: int) -> int:
    if k < 2:
        raise ValueError("uniformity k must be >= 2")
    if l < 2:
        raise ValueError("color count l must be >= 2")
    if n < 1:
        raise ValueError("vertex count n must be >= 1")
    return comb(n, k) if n >= k else 0


@dataclass(frozen=True)
class Coloring:
    """An edge l-coloring of the complete k-uniform hypergraph on [n]."""

    k: int
    l: int
    n: int
    colors: tuple[int, ...]

    def __post_init__(self):
        want = _validate_header(self.k, self.l, self.n)
        if len(self.colors) != want:
            raise ValueError(f"expected {want} colors, got {len(self.colors)}")
        for c in self.colors:
            if not isinstance(c, int) or not 0 <= c < self.l:
                raise ValueError(f"color {c!r} outside 0..{self.l - 1}")

    @property
    def empty(self) -> bool:
        return self.n < self.k

    def color(self, edge: Iterable[int]) -> int:
        return self.colors[edge_index(edge, self.n, self.k)]

    def edges(self) -> Iterator[Edge]:
        return all_edges(self.n, self.k)

    @classmethod
    def constant(cls, k: int, l: int, n: int, color: int = 0) -> "Coloring":
        m = _validate_header(k, l, n)
        if not 0 <= color < l:
            raise ValueError(f"color {color} outside 0..{l - 1}")
        return cls(k, l, n, (color,) * m)

    @classmethod
    def from_map(cls, k: int, l: int, n: int, assign: Mapping[Iterable[int], int],
                 filler: int = 0) -> "Coloring":
        """Coloring with the given edge colors, filler everywhere else."""
        m = _validate_header(k, l, n)
        cols = [filler] * m
        for edge, c in assign.items():
            cols[edge_index(edge, n, k)] = c
        return cls(k, l, n, tuple(cols))

    @classmethod
    def from_function(cls, k: int, l: int, n: int,
                      fn: Callable[[Edge], int]) -> "Coloring":
        _validate_header(k, l, n)
        return cls(k, l, n, tuple(fn(e) for e in all_edges(n, k)))


@dataclass(frozen=True)
class ColoringPattern:
    """Partially specified coloring; a None color matches anything.

    Used as the small side of containment searches when only some edges
    of a generated shape are pinned down.
    """

    k: int
    l: int
    n: int
    colors: tuple[Optional[int], ...]

    def __post_init__(self):
        want = _validate_header(self.k, self.l, self.n)
        if len(self.colors) != want:
            raise ValueError(f"expected {want} colors, got {len(self.colors)}")
        for c in self.colors:
            if c is not None and not 0 <= c < self.l:
                raise ValueError(f"color {c!r} outside 0..{self.l - 1}")

    @property
    def empty(self) -> bool:
        return self.n < self.k

    def color(self, edge: Iterable[int]) -> Optional[int]:
        return self.colors[edge_index(edge, self.n, self.k)]

    def edges(self) -> Iterator[Edge]:
        return all_edges(self.n, self.k)

    @classmethod
    def from_map(cls, k: int, l: int, n: int,
                 assign: Mapping[Iterable[int], int]) -> "ColoringPattern":
        m = _validate_header(k, l, n)
        cols: list[Optional[int]] = [None] * m
        for edge, c in assign.items():
            cols[edge_index(edge, n, k)] = c
        return cls(k, l, n, tuple(cols))


AnyColoring = Union[Coloring, ColoringPattern]


def restrict_normalize(c: AnyColoring, subset: Iterable[int]) -> AnyColoring:
    """Restrict to a vertex subset and relabel it order-isomorphically to [|subset|]."""
    vs = sorted(set(subset))
    if not vs:
        raise ValueError("subset must be nonempty")
    if vs[0] < 1 or vs[-1] > c.n:
        raise ValueError(f"subset not inside [{c.n}]")
    n2 = len(vs)
    if n2 < c.k:
        return type(c)(c.k, c.l, n2, ())
    # increasing relabeling keeps lexicographic edge order
    cols = tuple(c.colors[edge_index(e, c.n, c.k)] for e in combinations(vs, c.k))
    return type(c)(c.k, c.l, n2, cols)


def reverse(c: AnyColoring) -> AnyColoring:
    """Mirror image: edge E gets the color of {n - x + 1 : x in E}."""
    if c.empty:
        return type(c)(c.k, c.l, c.n, ())
    n, k = c.n, c.k
    cols = tuple(c.colors[edge_index([n - x + 1 for x in e], n, k)]
                 for e in all_edges(n, k))
    return type(c)(c.k, c.l, c.n, cols)


def relabel(c: AnyColoring, new_label: Mapping[int, int]) -> AnyColoring:
    """Push the coloring through a vertex bijection of [n].

    new_label maps old vertex to new vertex; the result colors each edge F
    the way c colored its preimage.  reverse(c) is relabel with
    v -> n - v + 1.
    """
    lab = {v: new_label[v] for v in range(1, c.n + 1)}
    if sorted(lab.values()) != list(range(1, c.n + 1)):
        raise ValueError("relabeling is not a bijection of [n]")
    if c.empty:
        return type(c)(c.k, c.l, c.n, ())
    inv = {w: v for v, w in lab.items()}
    n, k = c.n, c.k
    cols = tuple(c.colors[edge_index([inv[x] for x in e], n, k)]
                 for e in all_edges(n, k))
    return type(c)(c.k, c.l, c.n, cols)


@dataclass(frozen=True)
class Homogeneity:
    """Verdict on a vertex subset: all edges inside share one color, or not.

    homogeneous + color=None means the subset is too small to span an edge,
    so the verdict holds vacuously with no established color.
    """

    homogeneous: bool
    color: Optional[int]
    witness: Optional[tuple[Edge, Edge]]


def homogeneity(c: AnyColoring, subset: Iterable[int]) -> Homogeneity:
    """Check whether every k-subset of the given vertices has the same color."""
    vs = sorted(set(subset))
    if vs and (vs[0] < 1 or vs[-1] > c.n):
        raise ValueError(f"subset not inside [{c.n}]")
    if len(vs) < c.k:
        return Homogeneity(True, None, None)
    first = None
    ref = None
    for e in combinations(vs, c.k):
        col = c.colors[edge_index(e, c.n, c.k)]
        if first is None:
            first, ref = e, col
        elif col != ref:
            return Homogeneity(False, None, (first, e))
    return Homogeneity(True, ref, None)


def injection_witnesses(small: AnyColoring, big: Coloring,
                        images: Iterable[int]) -> bool:
    """True iff the increasing injection given by images realizes containment."""
    f = tuple(images)
    if small.k != big.k or small.l != big.l:
        raise IncompatibleColoringsError(
            f"(k,l)=({small.k},{small.l}) vs ({big.k},{big.l})")
    if len(f) != small.n or len(set(f)) != len(f):
        return False
    if any(f[i] >= f[i + 1] for i in range(len(f) - 1)):
        return False
    if f and (f[0] < 1 or f[-1] > big.n):
        return False
    for e in small.edges():
        want = small.color(e)
        if want is None:
            continue
        if big.color(tuple(f[v - 1] for v in e)) != want:
            return False
    return True


def contains(small: AnyColoring, big: Coloring) -> Optional[tuple[int, ...]]:
    """Search for an increasing injection realizing small inside big.

    Returns the lexicographically first witness injection (as the tuple of
    images of 1..m) or None.  Depth-first: after placing the image of
    vertex i, every edge whose endpoints are all placed is checked, so
    mismatching branches die as early as possible.  Pattern colorings may
    leave edges unspecified (None); those are never checked.
    """
    if small.k != big.k or small.l != big.l:
        raise IncompatibleColoringsError(
            f"(k,l)=({small.k},{small.l}) vs ({big.k},{big.l})")
    m, n, k = small.n, big.n, small.k
    if m > n:
        return None
    # edges of the small side grouped by their largest vertex
    by_max: list[list[tuple[Edge, int]]] = [[] for _ in range(m + 1)]
    if not small.empty:
        for e in small.edges():
            col = small.color(e)
            if col is not None:
                by_max[e[-1]].append((e, col))
    images: list[int] = []

    def place(i: int, lo: int) -> bool:
        if i > m:
            return True
        for v in range(lo, n - (m - i) + 1):
            images.append(v)
            ok = True
            for e, want in by_max[i]:
                mapped = tuple(images[x - 1] for x in e)
                if big.colors[edge_index(mapped, n, k)] != want:
                    ok = False
                    break
            if ok and place(i + 1, v + 1):
                return True
            images.pop()
        return False

    if place(1, 1):
        return tuple(images)
    return None


# --- text format ------------------------------------------------------------
#
# coloring k=<k> l=<l> n=<n>
# followed, when n >= k, by either a single "bits <0/1 string>" line (l = 2,
# colors in lexicographic edge order) or one "v1 ... vk c" line per edge.


def coloring_to_text(c: Coloring) -> str:
    lines = [f"coloring k={c.k} l={c.l} n={c.n}"]
    if not c.empty:
        if c.l == 2:
            lines.append("bits " + "".join(str(b) for b in c.colors))
        else:
            for e in c.edges():
                lines.append(" ".join(str(v) for v in e) + f" {c.color(e)}")
    return "\n".join(lines) + "\n"


def _parse_kv(fields: list[str], keys: tuple[str, ...]) -> dict[str, int]:
    out = {}
    for f in fields:
        if "=" not in f:
            raise ValueError(f"malformed field {f!r}")
        key, _, val = f.partition("=")
        if key not in keys:
            raise ValueError(f"unexpected field {key!r}")
        out[key] = int(val)
    missing = [k for k in keys if k not in out]
    if missing:
        raise ValueError(f"missing fields {missing}")
    return out


def coloring_from_lines(lines: list[str], start: int = 0) -> tuple[Coloring, int]:
    """Parse one coloring block; returns (coloring, next line index)."""
    if start >= len(lines):
        raise ValueError("expected a coloring header")
    head = lines[start].split()
    if not head or head[0] != "coloring":
        raise ValueError(f"expected 'coloring' header, got {lines[start]!r}")
    kv = _parse_kv(head[1:], ("k", "l", "n"))
    k, l, n = kv["k"], kv["l"], kv["n"]
    nedges = comb(n, k) if n >= k else 0
    pos = start + 1
    if nedges == 0:
        return Coloring(k, l, n, ()), pos
    if pos < len(lines) and lines[pos].startswith("bits"):
        if l != 2:
            raise ValueError("bits form only valid for l=2")
        bits = lines[pos].split(None, 1)[1].strip()
        if len(bits) != nedges or set(bits) - {"0", "1"}:
            raise ValueError(f"expected {nedges} bits")
        return Coloring(k, l, n, tuple(int(b) for b in bits)), pos + 1
    cols: list[Optional[int]] = [None] * nedges
    for _ in range(nedges):
        if pos >= len(lines):
            raise ValueError("truncated coloring block")
        parts = lines[pos].split()
        if len(parts) != k + 1:
            raise ValueError(f"bad edge line {lines[pos]!r}")
        e = [int(x) for x in parts[:k]]
        idx = edge_index(e, n, k)
        if cols[idx] is not None:
            raise ValueError(f"duplicate edge {e}")
        cols[idx] = int(parts[k])
        pos += 1
    return Coloring(k, l, n, tuple(cols)), pos  # type: ignore[arg-type]


def coloring_from_text(text: str) -> Coloring:
    lines = [ln for ln in text.splitlines() if ln.strip()]
    c, pos = coloring_from_lines(lines)
    if pos != len(lines):
        raise ValueError("trailing content after coloring block")
    return c
