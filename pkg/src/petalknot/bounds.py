"""Closed-form petal number bounds for torus knots ``T(r,s)``, ``1 < r < s``."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional

from .constructions import PreconditionError, TorusKnotParams


def _params(r, s=None) -> TorusKnotParams:
    k = TorusKnotParams.of(r, s)
    k.require_nontrivial()
    return k


def round_up_odd(v: int) -> int:
    return v if v % 2 else v + 1


def superbridge_torus(r, s=None) -> int:
    """Kuiper: ``sb(T(r,s)) = min(2r, s)``."""
    k = _params(r, s)
    return min(2 * k.r, k.s)


def arc_index_torus(r, s=None) -> int:
    k = _params(r, s)
    return k.r + k.s


def crossing_number_torus(r, s=None) -> int:
    k = _params(r, s)
    return min(k.r * (k.s - 1), k.s * (k.r - 1))


def superbridge_lower_bound(r, s=None) -> int:
    """``p >= 2 sb - 1``."""
    return 2 * superbridge_torus(r, s) - 1


def petal_lower_bound_report(r, s=None) -> tuple[int, str]:
    k = _params(r, s)
    sb = superbridge_lower_bound(k)
    arc = arc_index_torus(k)
    value = round_up_odd(max(sb, arc))
    source = "superbridge" if sb >= arc else "arc-index"
    return value, source


def petal_lower_bound(r, s=None) -> int:
    return petal_lower_bound_report(r, s)[0]


def theorem1_applies(r, s=None) -> bool:
    k = _params(r, s)
    return k.r % (k.s - k.r) == 1 % (k.s - k.r)


def theorem1_value(r, s=None) -> int:
    """Exact ``p(T(r,s)) = 2s - 1`` when ``r = 1 (mod s - r)``."""
    k = _params(r, s)
    if not theorem1_applies(k):
        raise PreconditionError(f"r ≢ 1 (mod s−r): {k.r} mod {k.s - k.r} = {k.r % (k.s - k.r)}")
    return 2 * k.s - 1


def _require_pm1(k: TorusKnotParams) -> int:
    res = k.s % k.r
    if res not in (1, k.r - 1):
        raise PreconditionError(f"s ≢ ±1 (mod r): {k.s} mod {k.r} = {res}")
    return res


def theorem3_upper_bound(r, s=None) -> int:
    """``2s - 2 floor(s/r) + 1`` for ``s = ±1 (mod r)``."""
    k = _params(r, s)
    _require_pm1(k)
    return 2 * k.s - 2 * (k.s // k.r) + 1


def conjecture_upper_bound(r, s=None) -> int:
    """The same formula without the congruence condition; unproven."""
    k = _params(r, s)
    return 2 * k.s - 2 * (k.s // k.r) + 1


def adams_upper_bound(r, s=None) -> int:
    """``2s - 1`` if ``s = 1 (mod r)``, ``2s + 3`` if ``s = -1 (mod r)``."""
    k = _params(r, s)
    res = _require_pm1(k)
    return 2 * k.s - 1 if res == 1 else 2 * k.s + 3


def crossing_upper_bound(r, s=None) -> int:
    """``p <= 2 c - 1`` with the torus crossing number ``min(r(s-1), s(r-1))``."""
    return 2 * crossing_number_torus(r, s) - 1


@dataclass
class BoundReport:
    r: int
    s: int
    lower: list[tuple[int, str]] = field(default_factory=list)
    upper: list[tuple[int, str]] = field(default_factory=list)
    best_lower: int = 0
    best_upper: Optional[int] = None
    tight: bool = False
    superbridge: int = 0
    arc_index: int = 0
    crossing_number: int = 0
    # no algorithm exists for these; kept for completeness of the report
    bridge_index: Optional[int] = None
    ubercrossing: Optional[int] = None
    assumed_conjecture: bool = False

    @property
    def petal_number(self) -> Optional[int]:
        return self.best_lower if self.tight else None

    def to_json(self) -> dict:
        return {
            "knot": f"T({self.r},{self.s})",
            "r": self.r,
            "s": self.s,
            "lower": [{"value": v, "source": t} for v, t in self.lower],
            "upper": [{"value": v, "source": t} for v, t in self.upper],
            "best_lower": self.best_lower,
            "best_upper": self.best_upper,
            "tight": self.tight,
            "petal_number": self.petal_number,
            "superbridge_index": self.superbridge,
            "arc_index": self.arc_index,
            "crossing_number": self.crossing_number,
            "bridge_index": self.bridge_index,
            "ubercrossing_number": self.ubercrossing,
            "assumed_conjecture": self.assumed_conjecture,
        }


def bounds_report(r, s=None, assume_conjecture: bool = False) -> BoundReport:
    k = _params(r, s)
    rep = BoundReport(k.r, k.s, assumed_conjecture=assume_conjecture)
    rep.superbridge = superbridge_torus(k)
    rep.arc_index = arc_index_torus(k)
    rep.crossing_number = crossing_number_torus(k)
    rep.lower = [
        (round_up_odd(superbridge_lower_bound(k)), "superbridge: 2 sb - 1"),
        (round_up_odd(arc_index_torus(k)), "arc index: r + s"),
    ]
    ups: list[tuple[int, str]] = []
    if theorem1_applies(k):
        ups.append((theorem1_value(k), "r = 1 mod (s - r): 2s - 1"))
    if k.s % k.r in (1, k.r - 1):
        ups.append((theorem3_upper_bound(k), "s = ±1 mod r: 2s - 2 floor(s/r) + 1"))
        ups.append((adams_upper_bound(k), "adams et al."))
    ups.append((crossing_upper_bound(k), "crossing number: 2c - 1"))
    if assume_conjecture and k.s % k.r not in (1, k.r - 1):
        ups.append((conjecture_upper_bound(k), "conjecture (unproven): 2s - 2 floor(s/r) + 1"))
    rep.upper = ups
    rep.best_lower = max(v for v, _ in rep.lower)
    rep.best_upper = min(v for v, _ in ups)
    rep.tight = rep.best_lower == rep.best_upper
    return rep
