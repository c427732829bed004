"""Deterministic generators of grid and petal grid diagrams of torus knots."""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .core import (
    DiagramError,
    GridDiagram,
    PetalGridDiagram,
    PetalPermutation,
    petal_perm_to_petal_grid,
    require_knot,
)


class PreconditionError(ValueError):
    """Input outside the domain of a construction; the message names the
    failing condition."""


@dataclass(frozen=True)
class TorusKnotParams:
    r: int
    s: int

    def __post_init__(self):
        r, s = abs(int(self.r)), abs(int(self.s))
        object.__setattr__(self, "r", r)
        object.__setattr__(self, "s", s)
        if math.gcd(r, s) != 1:
            raise PreconditionError(f"gcd({r},{s}) != 1: T({r},{s}) is a link")

    @classmethod
    def of(cls, r, s=None) -> "TorusKnotParams":
        if isinstance(r, TorusKnotParams):
            return r
        if s is None:
            r, s = r
        return cls(r, s)

    def ordered(self) -> "TorusKnotParams":
        return TorusKnotParams(min(self.r, self.s), max(self.r, self.s))

    def require_nontrivial(self) -> None:
        if self.r <= 1 or self.s <= self.r:
            raise PreconditionError(f"need 1 < r < s, got r={self.r}, s={self.s}")

    def __str__(self):
        return f"T({self.r},{self.s})"


# ---------------------------------------------------------------------------
# reference diagrams


def torus_grid_diagram(r, s=None) -> GridDiagram:
    """Minimal grid of size ``r+s``: row ``i`` has X in column ``i`` and O in
    column ``i - r`` (mod ``r+s``)."""
    k = TorusKnotParams.of(r, s)
    k.require_nontrivial()
    n = k.r + k.s
    x = tuple(i + 1 for i in range(n))
    o = tuple((i - k.r) % n + 1 for i in range(n))
    return GridDiagram(x, o)


def rectilinear_to_grid(path: Sequence[tuple]) -> GridDiagram:
    """Compress a closed rectilinear polygon to a grid diagram.

    ``path`` lists the corners in traversal order, starting with a corner
    whose outgoing edge is horizontal; edges alternate horizontal and
    vertical, every horizontal edge has its own y and every vertical edge
    its own x. y grows downward.
    """
    m = len(path)
    if m % 2:
        raise DiagramError("rectilinear path needs an even number of corners")
    xs = sorted({p[0] for p in path})
    ys = sorted({p[1] for p in path})
    if len(xs) != m // 2 or len(ys) != m // 2:
        raise DiagramError("vertical edges need distinct x and horizontal edges distinct y")
    col = {v: i + 1 for i, v in enumerate(xs)}
    row = {v: i for i, v in enumerate(ys)}
    n = m // 2
    x = [0] * n
    o = [0] * n
    for k in range(0, m, 2):
        p, q = path[k], path[k + 1]
        if p[1] != q[1]:
            raise DiagramError("expected a horizontal edge")
        o[row[p[1]]] = col[p[0]]
        x[row[p[1]]] = col[q[0]]
    g = GridDiagram(tuple(x), tuple(o))
    require_knot(g)
    return g


def _fresh(lo: Fraction, hi: Fraction, used: set) -> Fraction:
    v = (lo + hi) / 2
    while v in used:
        v = (v + hi) / 2
    used.add(v)
    return v


def braid_to_grid(word: Sequence[int], strands: int | None = None) -> GridDiagram:
    """Grid diagram of a braid closure.

    ``word`` holds signed generator indices: ``i`` is the positive crossing
    ``sigma_i`` between positions ``i`` and ``i+1`` (1-based, counted top
    to bottom), ``-i`` its inverse. Strands run left to right; each
    generator becomes two vertical jogs and the closure arcs are nested
    below the braid.
    """
    word = [int(w) for w in word]
    k = strands if strands is not None else (max((abs(w) for w in word), default=0) + 1)
    if any(w == 0 or abs(w) >= k for w in word):
        raise PreconditionError(f"generators must be in 1..{k - 1}")
    if k < 1:
        raise PreconditionError("need at least one strand")
    # y of each position's current horizontal piece; pieces[strand] = corners
    ys = [Fraction(p) for p in range(k)]
    used = set(ys)
    at_pos = list(range(k))  # strand occupying each position
    paths: list[list[tuple]] = [[] for _ in range(k)]
    left = -k - 1
    for strand in range(k):
        paths[strand].append((Fraction(left + strand), ys[strand]))
    x = 0
    for w in word:
        i = abs(w) - 1
        a, b = at_pos[i], at_pos[i + 1]  # a above b
        ya, yb = ys[i], ys[i + 1]
        upper = ys[i - 1] if i > 0 else ya - 1
        lower = ys[i + 2] if i + 2 < k else yb + 1
        new_b = _fresh(upper, ya, used)  # b moves up, lands above a's old level
        new_a = _fresh(yb, lower, used)  # a moves down, lands below b's old level
        if w > 0:
            # a's vertical first; it passes over b's horizontal
            xa, xb = x, x + 1
        else:
            xb, xa = x, x + 1
        x += 2
        if w > 0:
            # a goes down through yb while b is still at yb
            paths[a] += [(Fraction(xa), ya), (Fraction(xa), new_a)]
            paths[b] += [(Fraction(xb), yb), (Fraction(xb), new_b)]
        else:
            paths[b] += [(Fraction(xb), yb), (Fraction(xb), new_b)]
            paths[a] += [(Fraction(xa), ya), (Fraction(xa), new_a)]
        ys[i], ys[i + 1] = new_b, new_a
        at_pos[i], at_pos[i + 1] = b, a
    right = x + 1
    bottom = max(used) + 1
    # closure: position p returns under the braid to its starting level
    for p in range(k):
        strand = at_pos[p]
        xr = Fraction(right + (k - 1 - p))
        yb = bottom + (k - 1 - p)
        xl = Fraction(left + p)
        paths[strand] += [(xr, ys[p]), (xr, yb), (xl, yb)]
    # stitch strands: the closure of position p leads to the strand that
    # started at position p
    order = []
    strand = 0
    for _ in range(k):
        order.append(strand)
        end_pos = at_pos.index(strand)
        strand = end_pos
        if strand == 0:
            break
    if len(order) != k or at_pos.index(order[-1]) != 0:
        raise PreconditionError("braid closure has more than one component")
    corners: list[tuple] = []
    for strand in order:
        corners += paths[strand]
    return rectilinear_to_grid(corners)


# ---------------------------------------------------------------------------
# petal families
#
# Every family below is one skeleton. With P = (N-1)/2 the heights read
#
#     1, b_1, a_1, b_2, a_2, ..., b_P, a_P
#
# where a_1 > a_2 > ... > a_P is the run q+P, ..., q+1 and the b's list
# q, q-1, ..., 2 followed by the P-q+1 "high" heights above q+P in an
# order that depends on the knot. The raw skeleton draws the negative
# torus knot; the public generators mirror it.


def petal_skeleton(petals: int, q: int, high: Sequence[int]) -> PetalPermutation:
    """Skeleton permutation; ``high`` holds offsets 1..P-q+1 above ``q+P``."""
    if petals < 3 or petals % 2 == 0:
        raise PreconditionError(f"petal count must be odd and >= 3, got {petals}")
    p = petals // 2
    if not 2 <= q <= p + 1:
        raise PreconditionError(f"need 2 <= q <= {p + 1}, got q={q}")
    if sorted(high) != list(range(1, p - q + 2)):
        raise PreconditionError(f"high offsets must permute 1..{p - q + 1}")
    a = range(q + p, q, -1)
    b = list(range(q, 1, -1)) + [q + p + v for v in high]
    h = [1]
    for x, y in zip(b, a):
        h += [x, y]
    return PetalPermutation(tuple(h))


def _theorem1_high(k: int, m: int) -> list[int]:
    # descending run with the multiples k+1, 2(k+1), ..., (m-2)(k+1) pulled to the front
    size = (k + 1) * (m - 1)
    pulled = [j * (k + 1) for j in range(1, m - 1)]
    rest = [v for v in range(size, 0, -1) if v not in set(pulled)]
    return pulled + rest


def _surgery_high(r: int, n: int, extra: int) -> list[int]:
    # nested left rotations of the identity: block k holds the last
    # (r-1-k)n+extra values of 1..(r-2)n+extra, for k = 1..r-2
    length = (r - 1) * n + extra - 2
    seq = list(range(1, length + 1))
    top = (r - 2) * n + extra
    for k in range(1, r - 1):
        lo = top - ((r - 1 - k) * n + extra) + 1
        pos = [i for i, v in enumerate(seq) if lo <= v <= top]
        vals = [seq[i] for i in pos]
        for i, v in zip(pos, vals[1:] + vals[:1]):
            seq[i] = v
    return seq


def _emit(p: PetalPermutation, mirror: bool) -> PetalPermutation:
    # the skeleton is the negative knot
    return p if mirror else p.mirror()


def theorem1_petal_permutation(r, s=None, mirror: bool = False) -> PetalPermutation:
    """Petal permutation of ``T(r,s)`` with ``2s-1`` petals, valid when
    ``r = 1 (mod s-r)``. ``mirror=True`` gives ``T(-r,s)``."""
    k = TorusKnotParams.of(r, s)
    k.require_nontrivial()
    m = k.s - k.r
    if k.r % m != 1 % m:
        raise PreconditionError(f"r ≢ 1 (mod s−r): {k.r} mod {m} = {k.r % m}")
    t = (k.r - 1) // m
    if m == 1:
        high: list[int] = []
    else:
        high = _theorem1_high(t, m)
    return _emit(petal_skeleton(2 * k.s - 1, t + 2, high), mirror)


def theorem1_petal_grid(r, s=None, mirror: bool = False) -> PetalGridDiagram:
    """Petal grid of ``T(r,s)`` with exactly ``2s-1`` columns."""
    return petal_perm_to_petal_grid(theorem1_petal_permutation(r, s, mirror))


def _surgery_args(r: int, n: int) -> tuple[int, int]:
    r, n = int(r), int(n)
    if r < 2:
        raise PreconditionError(f"need r >= 2, got r={r}")
    if n < 1:
        raise PreconditionError(f"need n >= 1, got n={n}")
    return r, n


def surgery_plus_petal_permutation(r: int, n: int, mirror: bool = False) -> PetalPermutation:
    """``T(r, nr+1)`` with ``2(r-1)n+3`` petals."""
    r, n = _surgery_args(r, n)
    if n == 1:
        return theorem1_petal_permutation(r, r + 1, mirror)
    return _emit(petal_skeleton(2 * (r - 1) * n + 3, 3, _surgery_high(r, n, 1)), mirror)


def surgery_minus_petal_permutation(r: int, n: int, mirror: bool = False) -> PetalPermutation:
    """``T(r, nr-1)`` with ``2(r-1)n+1`` petals."""
    r, n = _surgery_args(r, n)
    if n * r - 1 == 1:
        # T(2,1) is the unknot; the size formula still gives 3
        return PetalPermutation((1, 2, 3))
    if n == 1:
        # T(r, r-1) is T(r-1, r)
        return theorem1_petal_permutation(r - 1, r, mirror)
    return _emit(petal_skeleton(2 * (r - 1) * n + 1, 3, _surgery_high(r, n, 0)), mirror)


def surgery_plus_petal_grid(r: int, n: int, mirror: bool = False) -> PetalGridDiagram:
    return petal_perm_to_petal_grid(surgery_plus_petal_permutation(r, n, mirror))


def surgery_minus_petal_grid(r: int, n: int, mirror: bool = False) -> PetalGridDiagram:
    return petal_perm_to_petal_grid(surgery_minus_petal_permutation(r, n, mirror))


def surgery_knot(r: int, n: int, sign: int) -> TorusKnotParams:
    """The torus knot drawn by the surgery generators, as an ordered pair."""
    r, n = _surgery_args(r, n)
    return TorusKnotParams(r, n * r + (1 if sign > 0 else -1)).ordered()


# ---------------------------------------------------------------------------
# spiral height function


@dataclass(frozen=True)
class HeightAssignment:
    """Heights of the segments ``v_1, h_1, ..., v_N, h_N`` of a closed
    rectilinear spiral with ``N = 2s-1`` vertical segments.

    ``vertical[i]`` is ``i`` for ``i < s`` and ``2s-i`` from ``s`` on. A
    horizontal segment copies the height of the vertical segment it meets
    at a south-west or north-east corner; the corner of ``v_s`` and
    ``h_s`` is the one north-east corner left out.
    """

    s: int
    vertical: tuple[int, ...]
    horizontal: tuple[int, ...]
    corners: tuple[tuple[int, int, str], ...]  # (i, j, kind): v_i meets h_j

    @staticmethod
    def vertical_height(i: int, s: int) -> int:
        return i if i < s else 2 * s - i

    def violations(self) -> list[str]:
        out = []
        n2 = 2 * self.s - 1
        if len(self.vertical) != n2 or len(self.horizontal) != n2:
            out.append("segment count differs from 2s-1")
            return out
        for i in range(1, n2 + 1):
            if self.vertical[i - 1] != self.vertical_height(i, self.s):
                out.append(f"f(v_{i}) = {self.vertical[i - 1]}")
        for i, j, kind in self.corners:
            fv, fh = self.vertical[i - 1], self.horizontal[j - 1]
            if kind == "SW" and fv != fh:
                out.append(f"south-west corner v_{i}/h_{j} has heights {fv} != {fh}")
            if kind == "NE" and fv != fh and (i, j) != (self.s, self.s):
                out.append(f"north-east corner v_{i}/h_{j} has heights {fv} != {fh}")
        return out


def _corner_kind(a: tuple, b: tuple, c: tuple) -> str:
    """Kind of the corner ``b`` of the path ``a -> b -> c``: the compass
    quadrant of ``b`` relative to the two segments (y grows upward)."""
    dx = (a[0] - b[0]) + (c[0] - b[0])
    dy = (a[1] - b[1]) + (c[1] - b[1])
    ns = "S" if dy > 0 else "N"
    ew = "W" if dx > 0 else "E"
    return ns + ew


def spiral_path(s: int) -> list[tuple[int, int]]:
    """Corners of a rectilinear spiral with ``2s-1`` vertical segments,
    winding inward up to ``v_s`` and back out.

    Segments alternate vertical/horizontal starting with ``v_1`` going
    down from the origin and every turn is a left turn. The polyline is
    left open: the corner closing ``h_2s-1`` onto ``v_1`` is not part of it.
    """
    n2 = 2 * s - 1
    dirs = [(0, -1), (1, 0), (0, 1), (-1, 0)]  # down, right, up, left
    pts = [(0, 0)]
    x = y = 0
    for i in range(1, n2 + 1):
        step = 2 * (s - i) + 3 if i <= s else 4 * (i - s) + 3
        dv, dh = dirs[(2 * i - 2) % 4], dirs[(2 * i - 1) % 4]
        y += dv[1] * step
        pts.append((x, y))
        x += dh[0] * (step + 1)
        pts.append((x, y))
    return pts


def spiral_height_assignment(r, s=None) -> HeightAssignment:
    """Height function on :func:`spiral_path` for ``T(r,s)``'s ``s``."""
    k = TorusKnotParams.of(r, s)
    k.require_nontrivial()
    n2 = 2 * k.s - 1
    pts = spiral_path(k.s)
    vertical = tuple(HeightAssignment.vertical_height(i, k.s) for i in range(1, n2 + 1))
    horizontal = [0] * n2
    corners = []
    for i in range(1, n2 + 1):
        # v_i = pts[2i-2] -> pts[2i-1], h_i = pts[2i-1] -> pts[2i], v_{i+1} after that
        a, b, c = pts[2 * i - 2], pts[2 * i - 1], pts[2 * i]
        corners.append((i, i, _corner_kind(a, b, c)))
        if i < n2:
            corners.append((i + 1, i, _corner_kind(b, c, pts[2 * i + 1])))
    for i, j, kind in corners:
        if kind in ("SW", "NE") and (i, j) != (k.s, k.s) and not horizontal[j - 1]:
            horizontal[j - 1] = vertical[i - 1]
    for j in range(n2):
        if not horizontal[j]:
            # h_s: the one horizontal segment without a sharing corner
            horizontal[j] = vertical[j]
    return HeightAssignment(k.s, vertical, tuple(horizontal), tuple(corners))
