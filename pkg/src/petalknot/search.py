"""Petal moves, canonical forms, small censuses and petal number certificates.

Knot types are compared through :class:`InvariantFingerprint`. Alexander
polynomial and determinant cannot tell a knot from its mirror, so the
census works up to mirror image; Jones (within its crossing budget)
separates the remaining collisions and reports chirality.
"""

from __future__ import annotations

import itertools
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Iterable, Iterator, Optional

from .bounds import petal_lower_bound_report
from .core import PetalPermutation
from .invariants import (
    DEFAULT_JONES_BUDGET,
    InvariantFingerprint,
    fingerprint,
    torus_alexander_oracle,
    torus_jones_oracle,
)
from .constructions import TorusKnotParams

MAX_EXHAUSTIVE_PETALS = 9


class BudgetExceeded(RuntimeError):
    """Refusal to run an enumeration above its size budget."""


class MoveError(ValueError):
    pass


# ---------------------------------------------------------------------------
# moves


@dataclass(frozen=True)
class MoveStep:
    kind: str
    position: int
    params: tuple
    before: InvariantFingerprint
    after: InvariantFingerprint


@dataclass
class MoveTrace:
    steps: list[MoveStep] = field(default_factory=list)

    def preserved(self) -> bool:
        return all(
            s.before.same_knot_type(s.after, chiral=True)
            for s in self.steps
            if s.kind in ("add", "delete")
        )


def trivial_petal_add(p: PetalPermutation, position: int) -> PetalPermutation:
    """Insert two petals right after strand ``position``.

    The new strands sit at heights ``h+1`` and ``h+2`` just below the
    strand at ``position`` (height ``h``); everything lower moves down by
    two. The inserted pair forms a kink that cancels with the strand before
    it, so the knot type does not change.
    """
    n2 = len(p)
    if not 0 <= position < n2:
        raise MoveError(f"position {position} out of range 0..{n2 - 1}")
    h = p.heights
    top = h[position]
    shifted = [v + 2 if v > top else v for v in h]
    new = shifted[: position + 1] + [top + 2, top + 1] + shifted[position + 1:]
    return PetalPermutation(tuple(new))


def _is_trivial_pair(h: tuple[int, ...], position: int) -> bool:
    # three cyclically consecutive strands with heights {a, a+1, a+2}
    n2 = len(h)
    block = sorted(h[(position + k) % n2] for k in range(3))
    return block[2] - block[0] == 2


def trivial_petal_delete(
    p: PetalPermutation, position: int, verify: bool = False
) -> PetalPermutation:
    """Collapse strands ``position .. position+2`` (cyclically) into one.

    Accepted when their heights form a block ``{a, a+1, a+2}`` in any
    order; the surviving strand takes height ``a`` and higher strands move
    up by two. This undoes :func:`trivial_petal_add` at the same position.
    With ``verify=True`` the fingerprint is recomputed as an extra guard.
    """
    n2 = len(p)
    if not 0 <= position < n2:
        raise MoveError(f"position {position} out of range 0..{n2 - 1}")
    if n2 < 5:
        raise MoveError("cannot delete petals from a 3-petal diagram")
    h = p.heights
    if not _is_trivial_pair(h, position):
        raise MoveError(f"strands {position}..{position + 2} of {p} do not form a trivial block")
    idx = [(position + k) % n2 for k in range(3)]
    low = min(h[i] for i in idx)
    out_h = []
    for i, v in enumerate(h):
        if i == idx[0]:
            out_h.append(low)
        elif i in idx:
            continue
        else:
            out_h.append(v - 2 if v > low + 2 else v)
    out = PetalPermutation(tuple(out_h))
    if verify and not fingerprint(out).same_knot_type(fingerprint(p), chiral=True):
        raise MoveError("deletion would change the knot type")
    return out


def find_trivial_pairs(p: PetalPermutation) -> list[int]:
    return [i for i in range(len(p)) if _is_trivial_pair(p.heights, i)]


def reduce_trivial(p: PetalPermutation) -> PetalPermutation:
    """Delete trivial pairs (up to rotation and height shift) until none is left."""
    while len(p) > 3:
        for q in symmetry_orbit(p, mirrors=False):
            pairs = find_trivial_pairs(q)
            if pairs:
                p = trivial_petal_delete(q, pairs[0])
                break
        else:
            break
    return p


@dataclass(frozen=True)
class ExchangeResult:
    permutation: PetalPermutation
    changed: bool


def crossing_exchange(
    p: PetalPermutation, a: int, b: int, jones_budget: int = DEFAULT_JONES_BUDGET
) -> ExchangeResult:
    """Swap the heights of strands ``a`` and ``b``; report whether the
    fingerprint changed."""
    n2 = len(p)
    if a == b:
        raise MoveError("exchange needs two different strands")
    if not (0 <= a < n2 and 0 <= b < n2):
        raise MoveError(f"strand index out of range 0..{n2 - 1}")
    h = list(p.heights)
    h[a], h[b] = h[b], h[a]
    q = PetalPermutation(tuple(h))
    before = fingerprint(p, jones_budget)
    after = fingerprint(q, jones_budget)
    return ExchangeResult(q, not before.same_knot_type(after, chiral=True))


# ---------------------------------------------------------------------------
# symmetry and canonical form


def _height_shift(h: tuple[int, ...], k: int) -> tuple[int, ...]:
    n2 = len(h)
    return tuple((v - 1 + k) % n2 + 1 for v in h)


def _normalize_start(h: tuple[int, ...]) -> Iterator[tuple[int, ...]]:
    """All rotations, each height-shifted so strand 0 has height 1."""
    n2 = len(h)
    for k in range(n2):
        rot = h[k:] + h[:k]
        yield _height_shift(rot, 1 - rot[0])


def symmetry_orbit(p: PetalPermutation, mirrors: bool = True) -> list[PetalPermutation]:
    """Images of ``p`` under petal rotation and height rotation, combined
    with reversal and height inversion. With ``mirrors=False`` only the
    chirality-preserving part (reversal together with inversion) is used."""
    h = p.heights
    n2 = len(h)
    inv = tuple(n2 + 1 - v for v in h)
    bases = [h, inv[::-1]]
    if mirrors:
        bases += [h[::-1], inv]
    out = set()
    for base in bases:
        for k in range(n2):
            rot = base[k:] + base[:k]
            for s in range(n2):
                out.add(_height_shift(rot, s))
    return [PetalPermutation(t) for t in sorted(out)]


def canonical_form(p: PetalPermutation, mirrors: bool = True) -> PetalPermutation:
    """Lexicographically least element of the symmetry orbit of ``p``.

    The group is generated by petal rotation, height rotation
    (``h -> h+1 mod N``), reversal of the petal order and height inversion
    (``h -> N+1-h``). Reversal and inversion each produce the mirror image;
    pass ``mirrors=False`` to keep chirality.
    """
    h = p.heights
    n2 = len(h)
    inv = tuple(n2 + 1 - v for v in h)
    bases = [h, inv[::-1]]
    if mirrors:
        bases += [h[::-1], inv]
    best = min(min(_normalize_start(b)) for b in bases)
    return PetalPermutation(best)


# ---------------------------------------------------------------------------
# census


@dataclass(frozen=True)
class CensusEntry:
    fingerprint: InvariantFingerprint
    petals: int
    witness: PetalPermutation
    chiral: Optional[bool]  # None when Jones is unavailable


def _classes(petals: int, first: Optional[int] = None) -> list[tuple[int, ...]]:
    """Canonical representatives with height 1 first (every orbit has one)."""
    reps = set()
    if first is None:
        heads = [(1,)]
        rest = range(2, petals + 1)
    else:
        heads = [(1, first)]
        rest = [v for v in range(2, petals + 1) if v != first]
    for head in heads:
        for tail in itertools.permutations(rest):
            reps.add(canonical_form(PetalPermutation(head + tail)).heights)
    return sorted(reps)


def _classify(reps: Iterable[tuple[int, ...]], jones_budget: int) -> dict:
    out: dict[tuple, CensusEntry] = {}
    for h in reps:
        p = PetalPermutation(h)
        fp = fingerprint(p, jones_budget)
        key = fp.key(chiral=False)
        if key not in out:
            chiral = None
            if fp.jones is not None:
                chiral = fp.jones != fp.jones.substitute_inverse()
            out[key] = CensusEntry(fp, len(h), p, chiral)
    return out


def _partition_job(args):
    petals, first, jones_budget = args
    return _classify(_classes(petals, first), jones_budget)


def enumerate_petal_knots(
    petals: int,
    jones_budget: int = DEFAULT_JONES_BUDGET,
    workers: int = 1,
    max_petals: int = MAX_EXHAUSTIVE_PETALS,
) -> dict[tuple, CensusEntry]:
    """Knot census of all petal permutations of the given length.

    Keys are mirror-free fingerprint keys. Each entry's ``petals`` is the
    enumerated size, not the petal number; see :func:`census_upto`.
    Partitions keyed by the second height are independent and can run in
    parallel.
    """
    if petals < 3 or petals % 2 == 0:
        raise ValueError("petal count must be odd and >= 3")
    if petals > max_petals:
        raise BudgetExceeded(
            f"exhaustive enumeration of {petals} petals exceeds the budget of {max_petals}"
        )
    jobs = [(petals, first, jones_budget) for first in range(2, petals + 1)]
    if workers > 1:
        with ProcessPoolExecutor(workers) as ex:
            parts = list(ex.map(_partition_job, jobs))
    else:
        parts = [_partition_job(j) for j in jobs]
    merged: dict[tuple, CensusEntry] = {}
    for part in parts:
        for key, entry in part.items():
            old = merged.get(key)
            if old is None or entry.witness.heights < old.witness.heights:
                merged[key] = entry
    return merged


def census_upto(max_petals: int, jones_budget: int = DEFAULT_JONES_BUDGET, workers: int = 1):
    """Smallest petal count and witness for every knot type seen up to
    ``max_petals``."""
    best: dict[tuple, CensusEntry] = {}
    for n2 in range(3, max_petals + 1, 2):
        for key, entry in enumerate_petal_knots(n2, jones_budget, workers).items():
            if key not in best:
                best[key] = entry
    return best


# ---------------------------------------------------------------------------
# certification


@dataclass(frozen=True)
class CertifiedPetalNumber:
    target: InvariantFingerprint
    value: Optional[int]
    witness: Optional[PetalPermutation]
    lower_bound: int
    lower_bound_source: str
    searched_up_to: int

    @property
    def exact(self) -> bool:
        return self.value is not None and self.value == self.lower_bound

    @property
    def interval(self) -> tuple[int, Optional[int]]:
        return (self.lower_bound, self.value)


def _target_fingerprint(target, jones_budget):
    if isinstance(target, InvariantFingerprint):
        return target, None
    k = TorusKnotParams.of(target).ordered()
    alex = torus_alexander_oracle(k.r, k.s)
    jones = torus_jones_oracle(k.r, k.s) if jones_budget > 0 else None
    return InvariantFingerprint(alex, abs(alex.evaluate_int(-1)), jones, 0), k


def certify_petal_number(
    target,
    max_petals: int,
    jones_budget: int = DEFAULT_JONES_BUDGET,
    workers: int = 1,
) -> CertifiedPetalNumber:
    """Smallest petal count up to ``max_petals`` realizing ``target``.

    ``target`` is a torus pair ``(r, s)``/:class:`TorusKnotParams` or an
    :class:`InvariantFingerprint`. The census value is paired with the best
    closed-form lower bound for torus targets (``3`` for anything else
    nontrivial); when no witness is found ``value`` is ``None`` and
    ``interval`` reports what is known.
    """
    fp, k = _target_fingerprint(target, jones_budget)
    if k is not None:
        lower, source = petal_lower_bound_report(k)
    else:
        lower, source = (1, "unknot") if fp.alexander == 1 and fp.jones in (None, 1) else (3, "nontrivial")
    if max_petals > MAX_EXHAUSTIVE_PETALS:
        raise BudgetExceeded(
            f"exhaustive certification limited to {MAX_EXHAUSTIVE_PETALS} petals"
        )
    for n2 in range(3, max_petals + 1, 2):
        census = enumerate_petal_knots(n2, jones_budget, workers)
        for entry in census.values():
            if entry.fingerprint.same_knot_type(fp, chiral=False):
                return CertifiedPetalNumber(fp, n2, _match_chirality(entry.witness, fp, jones_budget),
                                            lower, source, n2)
    return CertifiedPetalNumber(fp, None, None, lower, source, max_petals)


def _match_chirality(w: PetalPermutation, fp: InvariantFingerprint, budget: int) -> PetalPermutation:
    if fp.jones is None:
        return w
    own = fingerprint(w, budget)
    if own.jones is not None and own.jones != fp.jones and own.jones.substitute_inverse() == fp.jones:
        return w.mirror()
    return w
