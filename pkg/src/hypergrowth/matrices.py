"""Matrices over {0, 1, *}: alternation metrics, submatrix search, slices.

Entries are 0, 1, or None (rendered "*" in text form).  All indices in
the public API are 1-based, matching the vertex convention elsewhere.

An "alternation" is an adjacent pair of entries inside one line that is
exactly {0, 1}; stars never participate.  The alternation number al of a
matrix is 1 plus the largest number of alternations carried by a single
line.

Line orientation differs by dimension, deliberately:
  * 2D: a row fixes the first coordinate and varies the second.
    R(N) collects column indices j such that some row alternates at
    (j, j+1); C(N) collects row indices i such that some column
    alternates at (i, i+1).  So R(N) lives in [s-1], C(N) in [r-1].
  * 3D: a row varies the FIRST coordinate (columns the second, shafts
    the third), and R(M) / C(M) / S(M) collect first / second / third
    coordinates of alternations, living in [r-1] / [s-1] / [t-1].
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations, product
from typing import Iterable, Optional, Sequence, Union

Entry = Optional[int]


class DimensionMismatchError(ValueError):
    """Operands have incompatible dimensions for the requested operation."""


_CHAR = {0: "0", 1: "1", None: "*"}
_ENTRY = {"0": 0, "1": 1, "*": None}


def _check_entry(x) -> Entry:
    if x is not None and x not in (0, 1):
        raise ValueError(f"entry {x!r} not in {{0, 1, *}}")
    return x


@dataclass(frozen=True)
class StarMatrix2:
    rows: int
    cols: int
    entries: tuple[tuple[Entry, ...], ...]

    def __post_init__(self):
        if self.rows < 1 or self.cols < 1:
            raise ValueError("dimensions must be positive")
        if len(self.entries) != self.rows:
            raise ValueError("row count mismatch")
        for row in self.entries:
            if len(row) != self.cols:
                raise ValueError("ragged rows")
            for x in row:
                _check_entry(x)

    def at(self, i: int, j: int) -> Entry:
        if not (1 <= i <= self.rows and 1 <= j <= self.cols):
            raise IndexError(f"({i},{j}) outside {self.rows}x{self.cols}")
        return self.entries[i - 1][j - 1]

    def row(self, i: int) -> tuple[Entry, ...]:
        return self.entries[i - 1]

    def col(self, j: int) -> tuple[Entry, ...]:
        return tuple(row[j - 1] for row in self.entries)

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence]) -> "StarMatrix2":
        ent = []
        for row in rows:
            if isinstance(row, str):
                ent.append(tuple(_ENTRY[ch] for ch in row))
            else:
                ent.append(tuple(row))
        return cls(len(ent), len(ent[0]) if ent else 0, tuple(ent))

    @classmethod
    def filled(cls, rows: int, cols: int, value: Entry) -> "StarMatrix2":
        return cls(rows, cols, tuple((value,) * cols for _ in range(rows)))

    @classmethod
    def build(cls, rows: int, cols: int, fn) -> "StarMatrix2":
        """Entries from a function of 1-based (row, column)."""
        return cls(rows, cols, tuple(tuple(fn(i, j) for j in range(1, cols + 1))
                                     for i in range(1, rows + 1)))

    @classmethod
    def identity(cls, r: int) -> "StarMatrix2":
        return cls(r, r, tuple(tuple(1 if i == j else 0 for j in range(r))
                               for i in range(r)))

    @classmethod
    def upper(cls, r: int) -> "StarMatrix2":
        """Upper unitriangular shape: 1 on and above the diagonal."""
        return cls(r, r, tuple(tuple(1 if i <= j else 0 for j in range(r))
                               for i in range(r)))

    def transpose(self) -> "StarMatrix2":
        return StarMatrix2(self.cols, self.rows,
                           tuple(zip(*self.entries)))

    def vflip(self) -> "StarMatrix2":
        return StarMatrix2(self.rows, self.cols, tuple(reversed(self.entries)))

    def hflip(self) -> "StarMatrix2":
        return StarMatrix2(self.rows, self.cols,
                           tuple(tuple(reversed(row)) for row in self.entries))

    def swap_colors(self) -> "StarMatrix2":
        return StarMatrix2(self.rows, self.cols,
                           tuple(tuple(None if x is None else 1 - x for x in row)
                                 for row in self.entries))

    def submatrix(self, rowsel: Iterable[int], colsel: Iterable[int]) -> "StarMatrix2":
        rs = tuple(rowsel)
        cs = tuple(colsel)
        return StarMatrix2(len(rs), len(cs),
                           tuple(tuple(self.entries[i - 1][j - 1] for j in cs)
                                 for i in rs))

    def to_text(self) -> str:
        lines = [f"matrix2 r={self.rows} s={self.cols}"]
        for row in self.entries:
            lines.append("".join(_CHAR[x] for x in row))
        return "\n".join(lines) + "\n"


def matrix2_from_text(text: str) -> StarMatrix2:
    lines = [ln for ln in text.splitlines() if ln.strip()]
    head = lines[0].split()
    if not head or head[0] != "matrix2":
        raise ValueError("expected 'matrix2' header")
    kv = dict(f.split("=") for f in head[1:])
    r, s = int(kv["r"]), int(kv["s"])
    if len(lines) != 1 + r:
        raise ValueError(f"expected {r} rows")
    ent = tuple(tuple(_ENTRY[ch] for ch in ln.strip()) for ln in lines[1:])
    if any(len(row) != s for row in ent):
        raise ValueError(f"expected rows of length {s}")
    return StarMatrix2(r, s, ent)


@dataclass(frozen=True)
class StarMatrix3:
    dim1: int
    dim2: int
    dim3: int
    entries: tuple[tuple[tuple[Entry, ...], ...], ...]  # [i][j][k], 0-based

    def __post_init__(self):
        if min(self.dim1, self.dim2, self.dim3) < 1:
            raise ValueError("dimensions must be positive")
        if len(self.entries) != self.dim1:
            raise ValueError("first dimension mismatch")
        for plane in self.entries:
            if len(plane) != self.dim2:
                raise ValueError("second dimension mismatch")
            for shaft in plane:
                if len(shaft) != self.dim3:
                    raise ValueError("third dimension mismatch")
                for x in shaft:
                    _check_entry(x)

    @property
    def dims(self) -> tuple[int, int, int]:
        return (self.dim1, self.dim2, self.dim3)

    def at(self, i: int, j: int, k: int) -> Entry:
        return self.entries[i - 1][j - 1][k - 1]

    @classmethod
    def build(cls, dims: tuple[int, int, int], fn) -> "StarMatrix3":
        r, s, t = dims
        return cls(r, s, t,
                   tuple(tuple(tuple(fn(i, j, k) for k in range(1, t + 1))
                               for j in range(1, s + 1))
                         for i in range(1, r + 1)))

    def submatrix(self, sel1: Iterable[int], sel2: Iterable[int],
                  sel3: Iterable[int]) -> "StarMatrix3":
        a, b, c = tuple(sel1), tuple(sel2), tuple(sel3)
        return StarMatrix3.build((len(a), len(b), len(c)),
                                 lambda i, j, k: self.at(a[i - 1], b[j - 1], c[k - 1]))

    def to_text(self) -> str:
        lines = [f"matrix3 r={self.dim1} s={self.dim2} t={self.dim3}"]
        for k in range(1, self.dim3 + 1):
            for i in range(1, self.dim1 + 1):
                lines.append("".join(_CHAR[self.at(i, j, k)]
                                     for j in range(1, self.dim2 + 1)))
        return "\n".join(lines) + "\n"


def matrix3_from_text(text: str) -> StarMatrix3:
    lines = [ln for ln in text.splitlines() if ln.strip()]
    head = lines[0].split()
    if not head or head[0] != "matrix3":
        raise ValueError("expected 'matrix3' header")
    kv = dict(f.split("=") for f in head[1:])
    r, s, t = int(kv["r"]), int(kv["s"]), int(kv["t"])
    if len(lines) != 1 + r * t:
        raise ValueError(f"expected {r * t} body lines")
    body = [[_ENTRY[ch] for ch in ln.strip()] for ln in lines[1:]]
    if any(len(row) != s for row in body):
        raise ValueError(f"expected lines of length {s}")
    return StarMatrix3.build((r, s, t),
                             lambda i, j, k: body[(k - 1) * r + (i - 1)][j - 1])


# --- alternation metrics -----------------------------------------------------


def _alternations(seq: Sequence[Entry]) -> list[int]:
    """1-based start positions of adjacent {0,1} pairs in a line."""
    return [i + 1 for i in range(len(seq) - 1)
            if seq[i] is not None and seq[i + 1] is not None
            and seq[i] != seq[i + 1]]


@dataclass(frozen=True)
class Metrics2:
    al: int
    r_set: tuple[int, ...]  # column indices, subset of [cols-1]
    c_set: tuple[int, ...]  # row indices, subset of [rows-1]


def metrics2(m: StarMatrix2) -> Metrics2:
    best = 0
    rset: set[int] = set()
    cset: set[int] = set()
    for i in range(1, m.rows + 1):
        alt = _alternations(m.row(i))
        best = max(best, len(alt))
        rset.update(alt)
    for j in range(1, m.cols + 1):
        alt = _alternations(m.col(j))
        best = max(best, len(alt))
        cset.update(alt)
    return Metrics2(best + 1, tuple(sorted(rset)), tuple(sorted(cset)))


@dataclass(frozen=True)
class Metrics3:
    al: int
    r_set: tuple[int, ...]
    c_set: tuple[int, ...]
    s_set: tuple[int, ...]


def metrics3(m: StarMatrix3) -> Metrics3:
    r, s, t = m.dims
    best = 0
    rset: set[int] = set()
    cset: set[int] = set()
    sset: set[int] = set()
    for j in range(1, s + 1):
        for k in range(1, t + 1):
            alt = _alternations([m.at(i, j, k) for i in range(1, r + 1)])
            best = max(best, len(alt))
            rset.update(alt)
    for i in range(1, r + 1):
        for k in range(1, t + 1):
            alt = _alternations([m.at(i, j, k) for j in range(1, s + 1)])
            best = max(best, len(alt))
            cset.update(alt)
    for i in range(1, r + 1):
        for j in range(1, s + 1):
            alt = _alternations([m.at(i, j, k) for k in range(1, t + 1)])
            best = max(best, len(alt))
            sset.update(alt)
    return Metrics3(best + 1, tuple(sorted(rset)), tuple(sorted(cset)),
                    tuple(sorted(sset)))


# --- fullness ----------------------------------------------------------------


@dataclass(frozen=True)
class Fullness:
    r_full: bool
    c_full: bool
    row_assignment: Optional[tuple[int, ...]]  # per row: its private column index
    col_assignment: Optional[tuple[int, ...]]


def _distinct_representatives(eligible: list[list[int]]) -> Optional[list[int]]:
    """System of distinct representatives via augmenting paths, or None."""
    owner: dict[int, int] = {}

    def augment(i: int, seen: set[int]) -> bool:
        for v in eligible[i]:
            if v in seen:
                continue
            seen.add(v)
            if v not in owner or augment(owner[v], seen):
                owner[v] = i
                return True
        return False

    for i in range(len(eligible)):
        if not augment(i, set()):
            return None
    pick = [0] * len(eligible)
    for v, i in owner.items():
        pick[i] = v
    return pick


def fullness(m: StarMatrix2) -> Fullness:
    """R-fullness: one private alternating column position per row (C-full dually)."""
    row_elig = [_alternations(m.row(i)) for i in range(1, m.rows + 1)]
    col_elig = [_alternations(m.col(j)) for j in range(1, m.cols + 1)]
    rpick = _distinct_representatives(row_elig)
    cpick = _distinct_representatives(col_elig)
    return Fullness(rpick is not None, cpick is not None,
                    tuple(rpick) if rpick else None,
                    tuple(cpick) if cpick else None)


# --- pattern search ----------------------------------------------------------


@dataclass(frozen=True)
class PatternClass:
    """A named family of square 0/1 targets closed under the stated flips.

    kind "identity" or "upper"; strong variants exclude the horizontal
    flip.  Each concrete target in the family carries a tag built from
    the transformation names (vflip / hflip / swap), "plain" for none.
    """

    kind: str
    r: int
    strong: bool

    def __post_init__(self):
        if self.kind not in ("identity", "upper"):
            raise ValueError(f"unknown pattern kind {self.kind!r}")
        if self.r < 1:
            raise ValueError("pattern size must be >= 1")


def identity_strong(r: int) -> PatternClass:
    return PatternClass("identity", r, True)


def identity_similar(r: int) -> PatternClass:
    return PatternClass("identity", r, False)


def upper_strong(r: int) -> PatternClass:
    return PatternClass("upper", r, True)


def upper_similar(r: int) -> PatternClass:
    return PatternClass("upper", r, False)


def pattern_variants(pc: PatternClass) -> list[tuple[str, StarMatrix2]]:
    """Distinct targets of the class, first-named tag kept on duplicates."""
    base = (StarMatrix2.identity(pc.r) if pc.kind == "identity"
            else StarMatrix2.upper(pc.r))
    out: list[tuple[str, StarMatrix2]] = []
    seen = set()
    hflips = (False,) if pc.strong else (False, True)
    for sw in (False, True):
        for hf in hflips:
            for vf in (False, True):
                mat = base
                names = []
                if vf:
                    mat = mat.vflip()
                    names.append("vflip")
                if hf:
                    mat = mat.hflip()
                    names.append("hflip")
                if sw:
                    mat = mat.swap_colors()
                    names.append("swap")
                if mat.entries not in seen:
                    seen.add(mat.entries)
                    out.append(("+".join(names) if names else "plain", mat))
    return out


@dataclass(frozen=True)
class Match2:
    rows: tuple[int, ...]
    cols: tuple[int, ...]
    variant: str


def _greedy_cols(hay: StarMatrix2, rowsel: tuple[int, ...],
                 pat: StarMatrix2) -> Optional[tuple[int, ...]]:
    # with rows fixed, column choice is subsequence matching: leftmost wins
    haycols = [tuple(hay.entries[i - 1][j] for i in rowsel)
               for j in range(hay.cols)]
    patcols = [tuple(pat.entries[i][j] for i in range(pat.rows))
               for j in range(pat.cols)]
    picked = []
    nxt = 0
    for want in patcols:
        while nxt < len(haycols) and haycols[nxt] != want:
            nxt += 1
        if nxt == len(haycols):
            return None
        picked.append(nxt + 1)
        nxt += 1
    return tuple(picked)


def find_pattern2(hay: StarMatrix2,
                  pattern: Union[StarMatrix2, PatternClass]) -> Optional[Match2]:
    """Exhaustive search for a pattern as a (star-exact) submatrix of hay.

    Row selections are tried in lexicographic order, class variants in
    their listed order, and columns greedily leftmost, so the first match
    returned is deterministic.
    """
    if isinstance(pattern, StarMatrix2):
        variants = [("explicit", pattern)]
    else:
        variants = pattern_variants(pattern)
    pr = variants[0][1].rows
    pc = variants[0][1].cols
    if pr > hay.rows or pc > hay.cols:
        return None
    for rowsel in combinations(range(1, hay.rows + 1), pr):
        for name, mat in variants:
            colsel = _greedy_cols(hay, rowsel, mat)
            if colsel is not None:
                return Match2(rowsel, colsel, name)
    return None


# --- slices of 3D matrices ---------------------------------------------------


def layer(m: StarMatrix3, axis: int, index: int) -> StarMatrix2:
    """2D slice at a fixed coordinate, with the swapped index convention:

      axis 1: N(a, b) = M(z, b, a)   (t x s)
      axis 2: N(a, b) = M(b, z, a)   (t x r)
      axis 3: N(a, b) = M(b, a, z)   (s x r)
    """
    r, s, t = m.dims
    z = index
    if axis == 1:
        if not 1 <= z <= r:
            raise IndexError("layer index out of range")
        return StarMatrix2(t, s, tuple(tuple(m.at(z, b, a) for b in range(1, s + 1))
                                       for a in range(1, t + 1)))
    if axis == 2:
        if not 1 <= z <= s:
            raise IndexError("layer index out of range")
        return StarMatrix2(t, r, tuple(tuple(m.at(b, z, a) for b in range(1, r + 1))
                                       for a in range(1, t + 1)))
    if axis == 3:
        if not 1 <= z <= t:
            raise IndexError("layer index out of range")
        return StarMatrix2(s, r, tuple(tuple(m.at(b, a, z) for b in range(1, r + 1))
                                       for a in range(1, s + 1)))
    raise ValueError("axis must be 1, 2 or 3")


def cross(m: StarMatrix3, pair: tuple[int, int], mode: str) -> StarMatrix2:
    """Diagonal (mode "d") or antidiagonal (mode "ad") cross-section.

    The two named axes must have equal extent; they are traversed together
    (antidiagonally for "ad") while the remaining axis supplies the other
    index of the result:

      d  (1,2): N(a,b) = M(b, b, a)        ad (1,2): N(a,b) = M(b, s-b+1, a)
      d  (1,3): N(a,b) = M(b, a, b)        ad (1,3): N(a,b) = M(b, a, t-b+1)
      d  (2,3): N(a,b) = M(b, a, a)        ad (2,3): N(a,b) = M(b, a, t-a+1)
    """
    r, s, t = m.dims
    if mode not in ("d", "ad"):
        raise ValueError("mode must be 'd' or 'ad'")
    anti = mode == "ad"
    if pair == (1, 2):
        if r != s:
            raise DimensionMismatchError("axes 1 and 2 differ in extent")
        return StarMatrix2(t, r, tuple(
            tuple(m.at(b, s - b + 1 if anti else b, a) for b in range(1, r + 1))
            for a in range(1, t + 1)))
    if pair == (1, 3):
        if r != t:
            raise DimensionMismatchError("axes 1 and 3 differ in extent")
        return StarMatrix2(s, r, tuple(
            tuple(m.at(b, a, t - b + 1 if anti else b) for b in range(1, r + 1))
            for a in range(1, s + 1)))
    if pair == (2, 3):
        if s != t:
            raise DimensionMismatchError("axes 2 and 3 differ in extent")
        return StarMatrix2(s, r, tuple(
            tuple(m.at(b, a, t - a + 1 if anti else a) for b in range(1, r + 1))
            for a in range(1, s + 1)))
    raise ValueError("pair must be (1,2), (1,3) or (2,3)")


def al_23d(m: StarMatrix3) -> int:
    """Alternation number along the joint (2,3)-diagonal, per first coordinate."""
    r, s, t = m.dims
    if s != t:
        raise DimensionMismatchError("axes 2 and 3 differ in extent")
    best = 0
    for x in range(1, r + 1):
        diag = [m.at(x, i, i) for i in range(1, s + 1)]
        best = max(best, len(_alternations(diag)))
    return best + 1
