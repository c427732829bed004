import math

import pytest

from petalknot.constructions import (
    PreconditionError,
    TorusKnotParams,
    braid_to_grid,
    petal_skeleton,
    rectilinear_to_grid,
    spiral_height_assignment,
    spiral_path,
    surgery_knot,
    surgery_minus_petal_grid,
    surgery_minus_petal_permutation,
    surgery_plus_petal_grid,
    surgery_plus_petal_permutation,
    theorem1_petal_grid,
    theorem1_petal_permutation,
    torus_grid_diagram,
)
from petalknot.core import grid_to_pd, validate_grid
from petalknot.invariants import (
    alexander_from_pd,
    determinant,
    fingerprint,
    jones_kauffman,
    torus_alexander_oracle,
    torus_jones_oracle,
)


def alexander(grid):
    return alexander_from_pd(grid_to_pd(grid, cleanup=True))


def jones(grid, budget=40):
    return jones_kauffman(grid_to_pd(grid, cleanup=True), budget)


class TestTorusKnotParams:
    def test_negative_r_normalized(self):
        assert TorusKnotParams(-2, 3) == TorusKnotParams(2, 3)

    def test_link_rejected(self):
        with pytest.raises(PreconditionError, match="gcd"):
            TorusKnotParams(2, 4)

    def test_ordered(self):
        assert TorusKnotParams(5, 3).ordered() == TorusKnotParams(3, 5)

    def test_of_accepts_tuple(self):
        assert TorusKnotParams.of((2, 5)) == TorusKnotParams(2, 5)


class TestReferenceGrids:
    def test_torus_2_3(self):
        g = torus_grid_diagram(2, 3)
        assert g.size == 5
        assert alexander(g) == torus_alexander_oracle(2, 3)

    def test_torus_2_5_determinant(self):
        g = torus_grid_diagram(2, 5)
        assert g.size == 7
        assert determinant(alexander(g)) == 5

    def test_torus_3_4(self):
        g = torus_grid_diagram(3, 4)
        assert g.size == 7
        assert alexander(g) == torus_alexander_oracle(3, 4)

    def test_braid_trefoil(self):
        g = braid_to_grid([1, 1, 1], 2)
        assert validate_grid(g).knot
        assert alexander(g) == torus_alexander_oracle(2, 3)

    def test_braid_empty_word(self):
        g = braid_to_grid([], 1)
        assert alexander(g) == 1

    def test_braid_3_4(self):
        g = braid_to_grid([1, 2] * 4, 3)
        assert alexander(g) == torus_alexander_oracle(3, 4)
        assert jones(g) == torus_jones_oracle(3, 4)

    def test_braid_negative_generators_mirror(self):
        pos = jones(braid_to_grid([1, 1, 1], 2))
        neg = jones(braid_to_grid([-1, -1, -1], 2))
        assert neg == pos.substitute_inverse() != pos

    def test_braid_link_rejected(self):
        with pytest.raises(PreconditionError, match="component"):
            braid_to_grid([1, 1], 2)

    def test_rectilinear_square(self):
        g = rectilinear_to_grid([(0, 0), (2, 0), (2, 1), (1, 1), (1, 2), (0, 2)])
        assert validate_grid(g).knot


THEOREM1_PAIRS = [(r, s) for s in range(3, 16) for r in range(2, s)
                  if math.gcd(r, s) == 1 and r % (s - r) == 1 % (s - r)]


class TestTheorem1:
    @pytest.mark.parametrize("r,s,petals", [(2, 3, 5), (3, 4, 7), (3, 5, 9), (5, 7, 13)])
    def test_sizes(self, r, s, petals):
        assert theorem1_petal_grid(r, s).petals == petals

    @pytest.mark.parametrize("r,s", THEOREM1_PAIRS)
    def test_closure_is_positive_torus_knot(self, r, s):
        g = theorem1_petal_grid(r, s)
        assert g.petals == 2 * s - 1
        assert alexander(g.grid) == torus_alexander_oracle(r, s)
        j = jones(g.grid)
        if j is not None:
            assert j == torus_jones_oracle(r, s)

    def test_mirror_flag(self):
        a = theorem1_petal_permutation(2, 3)
        b = theorem1_petal_permutation(2, 3, mirror=True)
        assert b == a.mirror()
        assert jones(theorem1_petal_grid(2, 3, mirror=True).grid) == torus_jones_oracle(2, 3).substitute_inverse()

    def test_congruence_failure_names_condition(self):
        with pytest.raises(PreconditionError, match="r ≢ 1 \\(mod s−r\\)"):
            theorem1_petal_grid(3, 8)

    def test_trivial_pairs_rejected(self):
        with pytest.raises(PreconditionError):
            theorem1_petal_grid(1, 2)

    def test_deterministic(self):
        assert theorem1_petal_permutation(4, 7) == theorem1_petal_permutation(4, 7)


class TestSurgery:
    @pytest.mark.parametrize("r,n,petals,knot", [(2, 2, 7, (2, 5)), (3, 2, 11, (3, 7)), (2, 1, 5, (2, 3))])
    def test_plus_examples(self, r, n, petals, knot):
        g = surgery_plus_petal_grid(r, n)
        assert g.petals == petals
        assert alexander(g.grid) == torus_alexander_oracle(*knot)
        assert surgery_knot(r, n, 1) == TorusKnotParams(*knot)

    @pytest.mark.parametrize("r,n,petals,knot", [(2, 2, 5, (2, 3)), (3, 2, 9, (3, 5)), (2, 3, 7, (2, 5))])
    def test_minus_examples(self, r, n, petals, knot):
        g = surgery_minus_petal_grid(r, n)
        assert g.petals == petals
        assert alexander(g.grid) == torus_alexander_oracle(*knot)
        assert surgery_knot(r, n, -1) == TorusKnotParams(*knot)

    @pytest.mark.parametrize("r", range(2, 7))
    @pytest.mark.parametrize("n", range(1, 5))
    def test_families(self, r, n):
        plus = surgery_plus_petal_permutation(r, n)
        minus = surgery_minus_petal_permutation(r, n)
        assert len(plus) == 2 * (r - 1) * n + 3
        assert len(minus) == 2 * (r - 1) * n + 1
        for p, sign in ((plus, 1), (minus, -1)):
            k = surgery_knot(r, n, sign)
            fp = fingerprint(p, 40)
            assert fp.alexander == torus_alexander_oracle(k.r, k.s)
            if fp.jones is not None:
                assert fp.jones == torus_jones_oracle(k.r, k.s)

    def test_minus_degenerate_is_three_petal_unknot(self):
        assert surgery_minus_petal_permutation(2, 1).heights == (1, 2, 3)

    @pytest.mark.parametrize("r,n", [(1, 2), (2, 0)])
    def test_bad_arguments(self, r, n):
        with pytest.raises(PreconditionError):
            surgery_plus_petal_grid(r, n)


class TestSkeleton:
    def test_validates_high_part(self):
        with pytest.raises(PreconditionError):
            petal_skeleton(7, 3, [1, 1])

    def test_identity_high_is_negative_torus_knot(self):
        p = petal_skeleton(7, 4, [])
        assert fingerprint(p).jones == torus_jones_oracle(3, 4).substitute_inverse()


class TestSpiral:
    @pytest.mark.parametrize("s", range(3, 40))
    def test_corner_compatibility(self, s):
        h = spiral_height_assignment(2, s) if s % 2 else spiral_height_assignment(s - 1, s)
        assert h.violations() == []

    def test_vertical_heights(self):
        assert [spiral_height_assignment(2, 5).vertical_height(i, 5) for i in range(1, 10)] == [
            1, 2, 3, 4, 5, 4, 3, 2, 1]

    def test_path_turns_left(self):
        pts = spiral_path(5)
        for a, b, c in zip(pts, pts[1:], pts[2:]):
            cross = (b[0] - a[0]) * (c[1] - b[1]) - (b[1] - a[1]) * (c[0] - b[0])
            assert cross > 0
