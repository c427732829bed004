"""Diagram types and the conversions between them.

Conventions used throughout the package:

* Grid rows are numbered top to bottom, columns left to right. A
  :class:`GridDiagram` stores, for every row (tuple position 0..N-1), the
  1-based column of its X and of its O.
* The knot is oriented O -> X along rows and X -> O along columns.
* Vertical segments always cross over horizontal ones.
* Petal heights are 1-based with 1 the topmost strand.

The petal permutation <-> petal grid correspondence is fixed as follows.
For ``N = 2n+1`` petals put ``slot(j) = j*(n+1) mod N``. Row ``slot(j)``
carries its O in column ``heights[j]`` and its X in column
``heights[j+1]`` (indices mod N). Every column then joins rows ``i`` and
``i+n`` (mod N) and reading the O columns back along the slots recovers the
permutation. Worked example, ``(1,3,5,2,4)`` (n = 2, slots 0,3,1,4,2)::

    row 0: O col 1, X col 3
    row 1: O col 5, X col 2
    row 2: O col 4, X col 1
    row 3: O col 3, X col 5
    row 4: O col 2, X col 4

Reading columns as heights is one of two possible sweeps; the other one
(columns right to left) encodes the mirror image.
"""

from __future__ import annotations

import json
import re
import math
from dataclasses import dataclass, field
from typing import Sequence


class DiagramError(ValueError):
    """Raised when a diagram violates the invariants of its type."""


# ---------------------------------------------------------------------------
# petal permutations


@dataclass(frozen=True)
class PetalPermutation:
    heights: tuple[int, ...]

    def __post_init__(self):
        h = tuple(int(v) for v in self.heights)
        object.__setattr__(self, "heights", h)
        if len(h) < 3 or len(h) % 2 == 0:
            raise DiagramError(f"petal permutation needs odd length >= 3, got {len(h)}")
        if sorted(h) != list(range(1, len(h) + 1)):
            raise DiagramError(f"{h} is not a permutation of 1..{len(h)}")

    @property
    def petals(self) -> int:
        return len(self.heights)

    def __len__(self):
        return len(self.heights)

    def __iter__(self):
        return iter(self.heights)

    def __getitem__(self, i):
        return self.heights[i]

    def mirror(self) -> "PetalPermutation":
        """Reverse every height, i.e. the mirror image."""
        m = len(self.heights) + 1
        return PetalPermutation(tuple(m - v for v in self.heights))

    def to_text(self) -> str:
        return ",".join(map(str, self.heights))

    @classmethod
    def from_text(cls, text: str) -> "PetalPermutation":
        parts = [p for p in text.replace(" ", "").strip().strip("()[]").split(",") if p]
        try:
            return cls(tuple(int(p) for p in parts))
        except ValueError as exc:
            raise DiagramError(f"bad permutation text {text!r}: {exc}") from None

    def __str__(self):
        return "(" + ",".join(map(str, self.heights)) + ")"


# ---------------------------------------------------------------------------
# grid diagrams


@dataclass(frozen=True)
class ValidityReport:
    size_ok: bool
    x_permutation: bool
    o_permutation: bool
    no_empty_rows: bool
    components: int
    knot: bool

    @property
    def valid(self) -> bool:
        return self.size_ok and self.x_permutation and self.o_permutation and self.no_empty_rows

    def problems(self) -> list[str]:
        out = []
        if not self.size_ok:
            out.append("size and row data disagree")
        if not self.x_permutation:
            out.append("X columns are not a permutation")
        if not self.o_permutation:
            out.append("O columns are not a permutation")
        if not self.no_empty_rows:
            out.append("some row has X and O in the same column")
        if self.valid and not self.knot:
            out.append(f"closure has {self.components} components")
        return out


@dataclass(frozen=True)
class GridDiagram:
    """``x[i]`` / ``o[i]``: 1-based columns of the X / O in row ``i``."""

    x: tuple[int, ...]
    o: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "x", tuple(int(v) for v in self.x))
        object.__setattr__(self, "o", tuple(int(v) for v in self.o))

    @property
    def size(self) -> int:
        return len(self.x)

    # column lookups, 0-based rows
    def row_of_x(self) -> list[int]:
        out = [0] * self.size
        for r, c in enumerate(self.x):
            out[c - 1] = r
        return out

    def row_of_o(self) -> list[int]:
        out = [0] * self.size
        for r, c in enumerate(self.o):
            out[c - 1] = r
        return out

    def to_json(self) -> str:
        return json.dumps({"size": self.size, "x": list(self.x), "o": list(self.o)})

    @classmethod
    def from_json(cls, text: str | dict) -> "GridDiagram":
        data = json.loads(text) if isinstance(text, str) else text
        g = cls(tuple(data["x"]), tuple(data["o"]))
        if data.get("size", g.size) != g.size:
            raise DiagramError(f"size {data['size']} does not match {g.size} rows")
        return g

    def transpose(self) -> "GridDiagram":
        """Swap rows and columns (mirror image, orientation reversed)."""
        n = self.size
        rx, ro = self.row_of_x(), self.row_of_o()
        return GridDiagram(tuple(rx[c] + 1 for c in range(n)), tuple(ro[c] + 1 for c in range(n)))

    def reverse(self) -> "GridDiagram":
        """Same knot with the opposite orientation."""
        return GridDiagram(self.o, self.x)

    def cyclic_shift(self, rows: int = 0, cols: int = 0) -> "GridDiagram":
        n = self.size
        x = [0] * n
        o = [0] * n
        for r in range(n):
            x[(r + rows) % n] = (self.x[r] - 1 + cols) % n + 1
            o[(r + rows) % n] = (self.o[r] - 1 + cols) % n + 1
        return GridDiagram(tuple(x), tuple(o))


def _is_perm(seq: Sequence[int], n: int) -> bool:
    return sorted(seq) == list(range(1, n + 1))


def grid_components(d: GridDiagram) -> list[list[int]]:
    """Row cycles of the closed curve, each in orientation order."""
    row_o = d.row_of_o()
    seen = [False] * d.size
    comps = []
    for start in range(d.size):
        if seen[start]:
            continue
        cyc = []
        r = start
        while not seen[r]:
            seen[r] = True
            cyc.append(r)
            r = row_o[d.x[r] - 1]
        comps.append(cyc)
    return comps


def validate_grid(d: GridDiagram) -> ValidityReport:
    n = len(d.x)
    size_ok = n >= 1 and len(d.o) == n
    xp = size_ok and _is_perm(d.x, n)
    op = size_ok and _is_perm(d.o, n)
    nonempty = size_ok and all(a != b for a, b in zip(d.x, d.o))
    comps = len(grid_components(d)) if (xp and op) else 0
    return ValidityReport(size_ok, xp, op, nonempty, comps, xp and op and nonempty and comps == 1)


def require_knot(d: GridDiagram) -> None:
    rep = validate_grid(d)
    if not rep.knot:
        raise DiagramError("; ".join(rep.problems()) or "not a knot")


# ---------------------------------------------------------------------------
# petal grids


def is_petal_grid(d: GridDiagram) -> bool:
    n2 = d.size
    if n2 < 3 or n2 % 2 == 0 or not validate_grid(d).valid:
        return False
    n = n2 // 2
    rx, ro = d.row_of_x(), d.row_of_o()
    return all(abs(rx[c] - ro[c]) in (n, n + 1) for c in range(n2))


@dataclass(frozen=True)
class PetalGridDiagram:
    """A grid of odd size ``2n+1`` whose columns each join rows ``i`` and ``i+n``."""

    grid: GridDiagram

    def __post_init__(self):
        if not is_petal_grid(self.grid):
            raise DiagramError("grid is not a petal grid diagram")
        require_knot(self.grid)

    @property
    def size(self) -> int:
        return self.grid.size

    @property
    def petals(self) -> int:
        return self.grid.size


def _slots(n2: int) -> list[int]:
    n = n2 // 2
    return [(j * (n + 1)) % n2 for j in range(n2)]


def petal_perm_to_petal_grid(p: PetalPermutation) -> PetalGridDiagram:
    h = p.heights
    n2 = len(h)
    x = [0] * n2
    o = [0] * n2
    for j, row in enumerate(_slots(n2)):
        o[row] = h[j]
        x[row] = h[(j + 1) % n2]
    return PetalGridDiagram(GridDiagram(tuple(x), tuple(o)))


def petal_grid_to_petal_perm(d: PetalGridDiagram | GridDiagram) -> PetalPermutation:
    """Inverse of :func:`petal_perm_to_petal_grid`.

    A plain grid is accepted if it satisfies the petal condition; a petal
    grid traversed in the opposite direction is read after reversing it.
    """
    g = d.grid if isinstance(d, PetalGridDiagram) else d
    if not is_petal_grid(g):
        raise DiagramError("columns do not all span n or n+1 rows; not a petal grid")
    require_knot(g)
    n2 = g.size
    n = n2 // 2
    rx, ro = g.row_of_x(), g.row_of_o()
    # our orientation has O row = X row + n + 1 in every column
    if (ro[0] - rx[0]) % n2 != n + 1:
        g = g.reverse()
    return PetalPermutation(tuple(g.o[row] for row in _slots(n2)))


# ---------------------------------------------------------------------------
# arc presentations


@dataclass(frozen=True)
class ArcPresentation:
    """Page ``k`` (sequence order) holds one arc between two binding heights.

    Heights are 1-based; each pair is ``(lower, upper)``.
    """

    arcs: tuple[tuple[int, int], ...]

    def __post_init__(self):
        arcs = tuple((min(a, b), max(a, b)) for a, b in self.arcs)
        object.__setattr__(self, "arcs", arcs)
        n = len(arcs)
        counts = [0] * (n + 1)
        for a, b in arcs:
            if a == b or not (1 <= a <= n and 1 <= b <= n):
                raise DiagramError(f"bad arc {(a, b)} for {n} pages")
            counts[a] += 1
            counts[b] += 1
        if any(c != 2 for c in counts[1:]):
            raise DiagramError("every binding height must be the end of exactly two arcs")

    @property
    def size(self) -> int:
        return len(self.arcs)


def grid_to_arc(d: GridDiagram) -> ArcPresentation:
    if not validate_grid(d).valid:
        raise DiagramError("invalid grid")
    rx, ro = d.row_of_x(), d.row_of_o()
    return ArcPresentation(tuple((rx[c] + 1, ro[c] + 1) for c in range(d.size)))


def arc_to_grid(a: ArcPresentation) -> GridDiagram:
    """Pages become columns and binding heights become rows.

    Orientation is not recorded by an arc presentation; the result is
    oriented so that page 1 runs from its lower to its upper binding
    height. ``grid_to_arc(arc_to_grid(a)) == a`` always holds; the other
    round trip returns the input grid or its reverse.
    """
    n = a.size
    at_height: list[list[int]] = [[] for _ in range(n + 1)]
    for page, (lo, hi) in enumerate(a.arcs):
        at_height[lo].append(page)
        at_height[hi].append(page)
    x = [0] * n
    o = [0] * n
    # walk: column (page) from X end to O end, then along the row to the next page
    page, start = 0, a.arcs[0][0]
    for _ in range(n):
        lo, hi = a.arcs[page]
        end = hi if start == lo else lo
        x[start - 1] = page + 1
        o[end - 1] = page + 1
        nxt = [p for p in at_height[end] if p != page]
        page = nxt[0]
        start = end
        if page == 0 and start == a.arcs[0][0]:
            break
    if 0 in x or 0 in o:
        raise DiagramError("arc presentation is a link, not a knot")
    g = GridDiagram(tuple(x), tuple(o))
    require_knot(g)
    return g


# ---------------------------------------------------------------------------
# Gauss and planar diagram codes


@dataclass(frozen=True)
class GaussCode:
    """Signed Gauss sequence: ``+k`` passes over crossing ``k``, ``-k``
    passes under it (crossings numbered from 1); ``signs[k-1]`` is the
    crossing sign."""

    sequence: tuple[int, ...]
    signs: tuple[int, ...]

    @property
    def crossing_count(self) -> int:
        return len(self.signs)

    def __len__(self):
        return len(self.sequence)


@dataclass(frozen=True)
class PlanarDiagramCode:
    """``X(a,b,c,d)`` tuples, counterclockwise from the incoming under-edge.

    Edge labels run 1..2c along the orientation. For a positive crossing
    the over-strand runs d -> b, for a negative one b -> d.
    """

    crossings: tuple[tuple[int, int, int, int], ...]
    signs: tuple[int, ...] = field(default=())

    def __post_init__(self):
        xs = tuple(tuple(int(v) for v in c) for c in self.crossings)
        object.__setattr__(self, "crossings", xs)
        if not self.signs:
            object.__setattr__(self, "signs", tuple(_infer_sign(c, 2 * len(xs)) for c in xs))
        if len(self.signs) != len(xs):
            raise DiagramError("one sign per crossing required")

    @property
    def crossing_count(self) -> int:
        return len(self.crossings)

    def writhe(self) -> int:
        return sum(self.signs)

    def to_text(self) -> str:
        return "".join(f"X({a},{b},{c},{d})\n" for a, b, c, d in self.crossings)

    @classmethod
    def from_text(cls, text: str) -> "PlanarDiagramCode":
        """Parse ``X(a,b,c,d)`` lines or KnotTheory ``PD[X[a,b,c,d], ...]``."""
        out = []
        for m in re.finditer(r"X\s*[\(\[]([^)\]]*)[\)\]]", text):
            try:
                vals = tuple(int(v) for v in m.group(1).split(","))
            except ValueError:
                raise DiagramError(f"cannot parse crossing {m.group(0)!r}") from None
            if len(vals) != 4:
                raise DiagramError(f"crossing {m.group(0)!r} needs four labels")
            out.append(vals)
        if not out and re.sub(r"[\sPD\[\]()]", "", text):
            raise DiagramError(f"no X(...) crossings in {text[:40]!r}")
        pd = cls(tuple(out))
        check_pd(pd)
        return pd


def _infer_sign(c: tuple[int, int, int, int], m: int) -> int:
    _, b, _, d = c
    if m == 0:
        return 1
    if (b - d) % m == 1:
        return 1  # over-strand d -> b
    if (d - b) % m == 1:
        return -1
    raise DiagramError(f"over-strand labels of {c} are not consecutive")


def check_pd(pd: PlanarDiagramCode) -> None:
    m = 2 * pd.crossing_count
    counts: dict[int, int] = {}
    for c in pd.crossings:
        for e in c:
            counts[e] = counts.get(e, 0) + 1
    if sorted(counts) != list(range(1, m + 1)) or any(v != 2 for v in counts.values()):
        raise DiagramError("every edge label 1..2c must appear exactly twice")
    # single oriented cycle: each label is entered once and left once
    ins = sorted(_in_edges(pd))
    if ins != list(range(1, m + 1)):
        raise DiagramError("edge labels do not form a single oriented cycle")


def _in_edges(pd: PlanarDiagramCode) -> list[int]:
    out = []
    for (a, b, _, d), s in zip(pd.crossings, pd.signs):
        out.append(a)
        out.append(d if s > 0 else b)
    return out


def gauss_to_pd(g: GaussCode) -> PlanarDiagramCode:
    seq = g.sequence
    m = len(seq)
    nc = g.crossing_count
    if m != 2 * nc:
        raise DiagramError("Gauss sequence must visit every crossing twice")
    under_in = [0] * nc
    under_out = [0] * nc
    over_in = [0] * nc
    over_out = [0] * nc
    for k, v in enumerate(seq):
        inc = k if k > 0 else m  # edge label ending at visit k
        out = k + 1
        c = abs(v) - 1
        if v > 0:
            over_in[c], over_out[c] = inc, out
        else:
            under_in[c], under_out[c] = inc, out
    xs = []
    for c in range(nc):
        if g.signs[c] > 0:
            xs.append((under_in[c], over_out[c], under_out[c], over_in[c]))
        else:
            xs.append((under_in[c], over_in[c], under_out[c], over_out[c]))
    return PlanarDiagramCode(tuple(xs), tuple(g.signs))


def pd_to_gauss(pd: PlanarDiagramCode) -> GaussCode:
    if pd.crossing_count == 0:
        return GaussCode((), ())
    check_pd(pd)
    m = 2 * pd.crossing_count
    visit_at = {}  # incoming edge label -> signed crossing
    for i, ((a, b, _, d), s) in enumerate(zip(pd.crossings, pd.signs)):
        visit_at[a] = -(i + 1)
        visit_at[d if s > 0 else b] = i + 1
    seq = tuple(visit_at[e] for e in range(1, m + 1))
    # visit 0 is entered along the last edge
    seq = seq[-1:] + seq[:-1]
    return GaussCode(seq, pd.signs)


def reduce_kinks(g: GaussCode) -> GaussCode:
    """Remove Reidemeister-I kinks (a crossing visited twice in a row)."""
    seq = list(g.sequence)
    changed = True
    while changed and seq:
        changed = False
        m = len(seq)
        for k in range(m):
            if abs(seq[k]) == abs(seq[(k + 1) % m]):
                c = abs(seq[k])
                seq = [v for v in seq if abs(v) != c]
                changed = True
                break
    used = sorted({abs(v) for v in seq})
    renum = {c: i + 1 for i, c in enumerate(used)}
    return GaussCode(
        tuple(renum[abs(v)] * (1 if v > 0 else -1) for v in seq),
        tuple(g.signs[c - 1] for c in used),
    )


def grid_to_gauss(d: GridDiagram) -> GaussCode:
    """Walk the grid knot and record every vertical-over-horizontal crossing."""
    require_knot(d)
    n = d.size
    rx, ro = d.row_of_x(), d.row_of_o()
    # column c spans rows between its X and O
    col_lo = [min(rx[c], ro[c]) for c in range(n)]
    col_hi = [max(rx[c], ro[c]) for c in range(n)]
    ids: dict[tuple[int, int], int] = {}
    signs: list[int] = []
    for r in range(n):
        a, b = sorted((d.x[r] - 1, d.o[r] - 1))
        right = 1 if d.x[r] > d.o[r] else -1
        for c in range(a + 1, b):
            if col_lo[c] < r < col_hi[c]:
                down = rx[c] < ro[c]  # column runs X -> O
                over = (0, -1) if down else (0, 1)
                under = (right, 0)
                ids[(r, c)] = len(signs) + 1
                signs.append(1 if over[0] * under[1] - over[1] * under[0] > 0 else -1)
    seq: list[int] = []
    r = grid_components(d)[0][0]
    for _ in range(n):
        o_col, x_col = d.o[r] - 1, d.x[r] - 1
        step = 1 if x_col > o_col else -1
        for c in range(o_col + step, x_col, step):
            if (r, c) in ids:
                seq.append(-ids[(r, c)])
        r2 = ro[x_col]
        step = 1 if r2 > r else -1
        for rr in range(r + step, r2, step):
            if (rr, x_col) in ids:
                seq.append(ids[(rr, x_col)])
        r = r2
    return GaussCode(tuple(seq), tuple(signs))


def grid_crossing_count(d: GridDiagram) -> int:
    """Independent double loop over (column, row) transversal incidences."""
    rx, ro = d.row_of_x(), d.row_of_o()
    count = 0
    for c in range(d.size):
        lo, hi = sorted((rx[c], ro[c]))
        for r in range(d.size):
            a, b = sorted((d.x[r] - 1, d.o[r] - 1))
            if lo < r < hi and a < c < b:
                count += 1
    return count


def grid_to_pd(d: GridDiagram, cleanup: bool = False) -> PlanarDiagramCode:
    g = grid_to_gauss(d)
    if cleanup:
        g = reduce_kinks(g)
    return gauss_to_pd(g)


# ---------------------------------------------------------------------------
# direct petal projection


def petal_projection_gauss(p: PetalPermutation) -> GaussCode:
    """Gauss code read straight off a perturbed petal projection.

    Strand ``j`` passes the centre along the line at angle
    ``pi/(2N) + j*pi/N`` as on the rose ``r = cos(N*theta)``; each strand is
    pushed off the centre by a small generic offset so the multi-crossing
    splits into ``N(N-1)/2`` ordinary crossings, the lower height number
    passing over. The petals themselves add no crossings.
    """
    n2 = len(p)
    lines = []
    for j in range(n2):
        th = math.pi / (2 * n2) + j * math.pi / n2
        sgn = -1 if j % 2 == 0 else 1
        u = (sgn * math.cos(th), sgn * math.sin(th))
        nrm = (-u[1], u[0])
        off = 1e-3 * (((j * 0.6180339887498949) % 1.0) - 0.5)
        lines.append(((off * nrm[0], off * nrm[1]), u))
    signs = []
    hits: list[list[tuple[float, int]]] = [[] for _ in range(n2)]
    for i in range(n2):
        for k in range(i + 1, n2):
            (pi_, ui), (pk, uk) = lines[i], lines[k]
            det = ui[0] * (-uk[1]) - ui[1] * (-uk[0])
            rhs = (pk[0] - pi_[0], pk[1] - pi_[1])
            ti = (rhs[0] * (-uk[1]) - rhs[1] * (-uk[0])) / det
            tk = (ui[0] * rhs[1] - ui[1] * rhs[0]) / det
            cid = len(signs) + 1
            over, under = (i, k) if p[i] < p[k] else (k, i)
            uo, uu = lines[over][1], lines[under][1]
            signs.append(1 if uo[0] * uu[1] - uo[1] * uu[0] > 0 else -1)
            hits[i].append((ti, cid if over == i else -cid))
            hits[k].append((tk, cid if over == k else -cid))
    seq = []
    for j in range(n2):
        seq.extend(v for _, v in sorted(hits[j]))
    return GaussCode(tuple(seq), tuple(signs))


def petal_projection_pd(p: PetalPermutation) -> PlanarDiagramCode:
    return gauss_to_pd(petal_projection_gauss(p))
