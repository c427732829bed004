"""Exact knot invariants used to verify every construction.

The Alexander polynomial is the determinant of the crossing-relation
(Fox calculus) matrix with one row and one column removed. Elimination is
done first with unit pivots (``±t^k``) only, which keeps the matrix sparse
and needs no division at all; whatever dense core is left goes through
fraction-free Bareiss elimination over Z[t]. Results are normalized to be
symmetric under ``t -> 1/t`` with ``Delta(1) = 1``.

The Jones polynomial comes from the Kauffman bracket, expanded crossing by
crossing while keeping only the pairing of the open edge ends, so equal
partial states are merged instead of enumerating all ``2^c`` states.

Alexander and the determinant do not see mirror images; Jones does.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Optional

from .core import (
    GridDiagram,
    PetalGridDiagram,
    PetalPermutation,
    PlanarDiagramCode,
    check_pd,
    grid_to_pd,
    petal_perm_to_petal_grid,
)
from .laurent import ONE, LaurentPolynomial

DEFAULT_JONES_BUDGET = 20

_ONE_MINUS_T = LaurentPolynomial({0: 1, 1: -1})
_T = LaurentPolynomial({1: 1})


class InvariantError(ArithmeticError):
    pass


# ---------------------------------------------------------------------------
# Alexander polynomial


def alexander_matrix(pd: PlanarDiagramCode) -> list[dict[int, LaurentPolynomial]]:
    """Sparse rows ``{arc: entry}``, one row per crossing."""
    m = 2 * pd.crossing_count
    parent = list(range(m + 1))

    def find(e):
        while parent[e] != e:
            parent[e] = parent[parent[e]]
            e = parent[e]
        return e

    for _, b, _, d in pd.crossings:
        parent[find(b)] = find(d)
    roots = sorted({find(e) for e in range(1, m + 1)})
    arc = {r: i for i, r in enumerate(roots)}
    if len(roots) != pd.crossing_count:
        raise InvariantError(f"{len(roots)} arcs for {pd.crossing_count} crossings")
    rows = []
    for (a, b, c, _), s in zip(pd.crossings, pd.signs):
        row: dict[int, LaurentPolynomial] = {}
        ai, ao, ak = arc[find(a)], arc[find(c)], arc[find(b)]
        if s > 0:
            entries = ((ak, _ONE_MINUS_T), (ai, _T), (ao, -ONE))
        else:
            entries = ((ak, _ONE_MINUS_T), (ai, -ONE), (ao, _T))
        for col, v in entries:
            row[col] = row.get(col, LaurentPolynomial()) + v
        rows.append({k: v for k, v in row.items() if not v.is_zero()})
    return rows


def _eliminate_units(rows: list[dict[int, LaurentPolynomial]]) -> list[dict[int, LaurentPolynomial]]:
    """Pivot on unit entries while any exist; returns the remaining rows.

    The determinant changes only by a unit factor, which the final
    normalization discards.
    """
    rows = [dict(r) for r in rows]
    alive = set(range(len(rows)))
    by_col: dict[int, set[int]] = {}
    for i, r in enumerate(rows):
        for c in r:
            by_col.setdefault(c, set()).add(i)
    while True:
        best = None
        for i in alive:
            r = rows[i]
            for c, v in r.items():
                if v.is_unit():
                    cost = (len(r) - 1) * (len(by_col[c]) - 1)
                    if best is None or cost < best[0]:
                        best = (cost, i, c)
                        if cost == 0:
                            break
            if best is not None and best[0] == 0:
                break
        if best is None:
            break
        _, i, c = best
        prow = rows[i]
        pinv = prow[c] ** -1
        for k in list(by_col[c]):
            if k == i:
                continue
            rk = rows[k]
            f = rk[c] * pinv
            for cc, v in prow.items():
                nv = rk.get(cc, LaurentPolynomial()) - f * v
                if nv.is_zero():
                    if cc in rk:
                        del rk[cc]
                        by_col[cc].discard(k)
                else:
                    if cc not in rk:
                        by_col[cc].add(k)
                    rk[cc] = nv
        for cc in prow:
            by_col[cc].discard(i)
        del by_col[c]
        alive.discard(i)
        rows[i] = {}
    return [rows[i] for i in sorted(alive)], sorted(by_col)


def bareiss_determinant(matrix: list[list[LaurentPolynomial]]) -> LaurentPolynomial:
    """Fraction-free determinant over Z[t, 1/t].

    Rows are shifted into Z[t] first so every Bareiss division is exact;
    the shift is undone at the end.
    """
    n = len(matrix)
    if n == 0:
        return ONE
    a = []
    shift = 0
    for row in matrix:
        nz = [v for v in row if not v.is_zero()]
        if not nz:
            return LaurentPolynomial()
        lo = min(v.min_degree for v in nz)
        shift += lo
        a.append([v.shift(-lo) for v in row])
    prev = ONE
    sign = 1
    for k in range(n - 1):
        if a[k][k].is_zero():
            for i in range(k + 1, n):
                if not a[i][k].is_zero():
                    a[k], a[i] = a[i], a[k]
                    sign = -sign
                    break
            else:
                return LaurentPolynomial()
        piv = a[k][k]
        for i in range(k + 1, n):
            aik = a[i][k]
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * piv - aik * a[k][j]).exact_div(prev)
            a[i][k] = LaurentPolynomial()
        prev = piv
    return a[n - 1][n - 1].shift(shift) * sign


def normalize_alexander(p: LaurentPolynomial) -> LaurentPolynomial:
    if p.is_zero():
        raise InvariantError("Alexander determinant vanished; the diagram is not a knot")
    p = p.symmetrized()
    # Conway sign: Delta(1) = 1
    return -p if p.evaluate_int(1) < 0 else p


def alexander_from_pd(pd: PlanarDiagramCode) -> LaurentPolynomial:
    if pd.crossing_count == 0:
        return ONE
    check_pd(pd)
    rows = alexander_matrix(pd)
    drop = len(rows) - 1
    minor = [{c: v for c, v in r.items() if c != drop} for r in rows[:drop]]
    rest, cols = _eliminate_units(minor)
    if len(rest) != len(cols):
        raise InvariantError("inconsistent elimination")
    dense = [[r.get(c, LaurentPolynomial()) for c in cols] for r in rest]
    delta = normalize_alexander(bareiss_determinant(dense))
    if delta.evaluate_int(1) != 1:
        raise InvariantError(f"Alexander polynomial {delta} has |Delta(1)| != 1")
    return delta


def torus_alexander_oracle(r: int, s: int) -> LaurentPolynomial:
    """Closed form ``(t^{rs}-1)(t-1) / ((t^r-1)(t^s-1))``, centred."""
    r, s = abs(r), abs(s)
    if r < 1 or s < 1:
        raise ValueError("torus parameters must be nonzero")
    if r == 1 or s == 1:
        return ONE
    num = (LaurentPolynomial({r * s: 1, 0: -1})) * LaurentPolynomial({1: 1, 0: -1})
    den = LaurentPolynomial({r: 1, 0: -1}) * LaurentPolynomial({s: 1, 0: -1})
    q, rem = num.divmod(den)
    if not rem.is_zero():
        raise InvariantError(f"T({r},{s}): nonzero remainder, parameters are not coprime")
    return q.symmetrized()


def determinant(x: PlanarDiagramCode | LaurentPolynomial) -> int:
    """Knot determinant ``|Delta(-1)|``."""
    if isinstance(x, PlanarDiagramCode):
        x = alexander_from_pd(x)
    return abs(x.evaluate_int(-1))


# ---------------------------------------------------------------------------
# Kauffman bracket / Jones


def _crossing_order(pd: PlanarDiagramCode) -> list[int]:
    """Greedy order keeping the set of open edge ends small."""
    remaining = set(range(pd.crossing_count))
    seen: dict[int, int] = {}
    order = []
    while remaining:
        best = max(
            remaining,
            key=lambda i: (sum(1 for e in pd.crossings[i] if seen.get(e, 0) == 1), -i),
        )
        order.append(best)
        remaining.discard(best)
        for e in pd.crossings[best]:
            seen[e] = seen.get(e, 0) + 1
    return order


def _join(state: dict[int, int], u: int, v: int) -> int:
    """Add an arc u--v to the open-end pairing; returns closed loop count."""
    if u == v:
        return 1
    if state.get(u) == v:
        del state[u], state[v]
        return 1
    pu = state.pop(u, None)
    if pu is not None:
        del state[pu]
    pv = state.pop(v, None)
    if pv is not None:
        del state[pv]
    ends_u = pu if pu is not None else u
    ends_v = pv if pv is not None else v
    state[ends_u] = ends_v
    state[ends_v] = ends_u
    return 0


def kauffman_bracket(pd: PlanarDiagramCode) -> LaurentPolynomial:
    """Bracket in the variable A, normalized so the trivial diagram is 1."""
    if pd.crossing_count == 0:
        return ONE
    loop = LaurentPolynomial({2: -1, -2: -1})
    states: dict[frozenset, LaurentPolynomial] = {frozenset(): ONE}
    a_weight = LaurentPolynomial({1: 1})
    b_weight = LaurentPolynomial({-1: 1})
    for i in _crossing_order(pd):
        a, b, c, d = pd.crossings[i]
        nxt: dict[frozenset, LaurentPolynomial] = {}
        for key, poly in states.items():
            for weight, arcs in ((a_weight, ((a, b), (c, d))), (b_weight, ((a, d), (b, c)))):
                st = dict(key)
                loops = 0
                for u, v in arcs:
                    loops += _join(st, u, v)
                val = poly * weight * loop**loops
                k2 = frozenset(st.items())
                nxt[k2] = nxt[k2] + val if k2 in nxt else val
        states = {k: v for k, v in nxt.items() if not v.is_zero()}
    total = states.get(frozenset(), LaurentPolynomial())
    return total.exact_div(loop)


def jones_kauffman(
    pd: PlanarDiagramCode, max_crossings: int = DEFAULT_JONES_BUDGET
) -> Optional[LaurentPolynomial]:
    """Jones polynomial in ``t`` or ``None`` above the crossing budget."""
    if pd.crossing_count > max_crossings:
        return None
    br = kauffman_bracket(pd)
    w = pd.writhe()
    # (-A^3)^(-w)
    f = LaurentPolynomial({-3 * w: (-1) ** (w % 2)}) * br
    out = {}
    for e, v in f.terms.items():
        if e % 4:
            raise InvariantError("bracket exponents are not multiples of 4 for a knot")
        out[-e // 4] = v
    return LaurentPolynomial(out)


def jones_mirror_free(j: LaurentPolynomial) -> LaurentPolynomial:
    """Representative of ``{V(t), V(1/t)}`` used when mirrors are identified."""
    inv = j.substitute_inverse()
    return min(j, inv, key=LaurentPolynomial.sort_key)


# ---------------------------------------------------------------------------
# fingerprints


@dataclass(frozen=True)
class InvariantFingerprint:
    alexander: LaurentPolynomial
    determinant: int
    jones: Optional[LaurentPolynomial]
    crossing_count_of_witness: int

    def key(self, chiral: bool = False) -> tuple:
        """Hashable identity. With ``chiral=False`` mirror images collide."""
        if self.jones is None:
            j = None
        elif chiral:
            j = self.jones.sort_key()
        else:
            j = jones_mirror_free(self.jones).sort_key()
        return (self.alexander.sort_key(), self.determinant, j)

    def same_knot_type(self, other: "InvariantFingerprint", chiral: bool = False) -> bool:
        """Agreement of every invariant both sides carry."""
        if self.alexander != other.alexander or self.determinant != other.determinant:
            return False
        if self.jones is None or other.jones is None:
            return True
        if chiral:
            return self.jones == other.jones
        return jones_mirror_free(self.jones) == jones_mirror_free(other.jones)

    def is_unknot_like(self) -> bool:
        return self.alexander == ONE and (self.jones is None or self.jones == ONE)

    def to_json(self) -> dict:
        return {
            "alexander": self.alexander.to_json(),
            "alexander_text": self.alexander.format(),
            "determinant": self.determinant,
            "jones": None if self.jones is None else self.jones.to_json(),
            "jones_text": None if self.jones is None else self.jones.format(),
            "crossings": self.crossing_count_of_witness,
        }


def as_grid(d: GridDiagram | PetalGridDiagram | PetalPermutation) -> GridDiagram:
    if isinstance(d, PetalPermutation):
        return petal_perm_to_petal_grid(d).grid
    if isinstance(d, PetalGridDiagram):
        return d.grid
    if isinstance(d, GridDiagram):
        return d
    raise TypeError(f"expected a diagram, got {type(d).__name__}")


def fingerprint(
    d: GridDiagram | PetalGridDiagram | PetalPermutation | PlanarDiagramCode,
    jones_budget: int = DEFAULT_JONES_BUDGET,
) -> InvariantFingerprint:
    if isinstance(d, PlanarDiagramCode):
        pd = d
    else:
        pd = grid_to_pd(as_grid(d), cleanup=True)
    alex = alexander_from_pd(pd)
    jones = jones_kauffman(pd, jones_budget) if jones_budget > 0 else None
    return InvariantFingerprint(alex, determinant(alex), jones, pd.crossing_count)


def torus_fingerprint(r: int, s: int) -> InvariantFingerprint:
    """Closed-form Alexander data for ``T(r,s)``; Jones left open."""
    alex = torus_alexander_oracle(r, s)
    return InvariantFingerprint(alex, determinant(alex), None, 0)


def torus_jones_oracle(r: int, s: int) -> LaurentPolynomial:
    """Jones polynomial of the positive torus knot,
    ``t^{(r-1)(s-1)/2} (1 - t^{r+1} - t^{s+1} + t^{r+s}) / (1 - t^2)``."""
    r, s = abs(r), abs(s)
    if math.gcd(r, s) != 1:
        raise ValueError("torus knot parameters must be coprime")
    if min(r, s) == 1:
        return ONE
    num = LaurentPolynomial({0: 1, r + 1: -1, s + 1: -1, r + s: 1})
    q = num.exact_div(LaurentPolynomial({0: 1, 2: -1}))
    return q.shift((r - 1) * (s - 1) // 2)
