"""Property tests over random petal permutations and grids."""

import json
import math
import xml.etree.ElementTree as ET

from hypothesis import given, settings
from hypothesis import strategies as st

from petalknot.cli import convert, parse_diagram, to_json_value
from petalknot.constructions import spiral_height_assignment
from petalknot.core import (
    PetalPermutation,
    arc_to_grid,
    gauss_to_pd,
    grid_to_arc,
    grid_to_gauss,
    grid_to_pd,
    pd_to_gauss,
    petal_grid_to_petal_perm,
    petal_perm_to_petal_grid,
    petal_projection_pd,
)
from petalknot.invariants import alexander_from_pd, fingerprint, jones_kauffman
from petalknot.laurent import LaurentPolynomial
from petalknot.render import RenderSpec, render_svg
from petalknot.search import (
    canonical_form,
    find_trivial_pairs,
    symmetry_orbit,
    trivial_petal_add,
    trivial_petal_delete,
)


@st.composite
def petal_perms(draw, max_petals=9):
    n2 = draw(st.sampled_from([k for k in range(3, max_petals + 1, 2)]))
    return PetalPermutation(tuple(draw(st.permutations(range(1, n2 + 1)))))


laurents = st.dictionaries(st.integers(-6, 6), st.integers(-5, 5), max_size=6).map(LaurentPolynomial)


@given(petal_perms())
def test_canonical_form_idempotent(p):
    c = canonical_form(p)
    assert canonical_form(c) == c
    assert canonical_form(p.mirror()) == c


@given(petal_perms(), st.data())
def test_canonical_form_constant_on_orbit(p, data):
    q = data.draw(st.sampled_from(symmetry_orbit(p)))
    assert canonical_form(q) == canonical_form(p)


@given(petal_perms())
def test_petal_grid_round_trip(p):
    g = petal_perm_to_petal_grid(p)
    assert g.size == len(p)
    assert petal_grid_to_petal_perm(g) == p


@given(petal_perms())
def test_arc_round_trip(p):
    a = grid_to_arc(petal_perm_to_petal_grid(p).grid)
    assert grid_to_arc(arc_to_grid(a)) == a


@given(petal_perms(max_petals=7))
def test_projection_and_grid_agree(p):
    # the star drawing and the grid drawing are the same knot
    a = fingerprint(petal_projection_pd(p), 25)
    b = fingerprint(p, 25)
    assert a.same_knot_type(b, chiral=True)


@given(petal_perms())
def test_gauss_pd_round_trip(p):
    g = grid_to_gauss(petal_perm_to_petal_grid(p).grid)
    assert len(g) == 2 * g.crossing_count
    assert pd_to_gauss(gauss_to_pd(g)).sequence == g.sequence


@given(petal_perms())
def test_alexander_normalized(p):
    a = alexander_from_pd(grid_to_pd(petal_perm_to_petal_grid(p).grid, cleanup=True))
    assert a.is_symmetric() and a.evaluate_int(1) == 1
    # determinant of a knot is odd
    assert abs(a.evaluate_int(-1)) % 2 == 1


@given(petal_perms(max_petals=7))
def test_mirror_inverts_jones(p):
    j = jones_kauffman(petal_projection_pd(p), 25)
    jm = jones_kauffman(petal_projection_pd(p.mirror()), 25)
    assert jm == j.substitute_inverse()


@settings(max_examples=60)
@given(petal_perms(max_petals=7), st.data())
def test_trivial_moves_sound(p, data):
    fp = fingerprint(p, 30)
    i = data.draw(st.integers(0, len(p) - 1))
    q = trivial_petal_add(p, i)
    assert fingerprint(q, 30).same_knot_type(fp, chiral=True)
    assert trivial_petal_delete(q, i) == p
    for j in find_trivial_pairs(q):
        r = trivial_petal_delete(q, j)
        assert fingerprint(r, 30).same_knot_type(fp, chiral=True)


@given(petal_perms())
def test_petal_count_parity(p):
    # every petal diagram of a knot has an odd number of petals
    assert len(p) % 2 == 1
    assert len(trivial_petal_add(p, 0)) == len(p) + 2


@given(laurents, laurents)
def test_laurent_ring(a, b):
    assert a * b == b * a
    assert (a + b) - b == a
    if not b.is_zero():
        assert (a * b).exact_div(b) == a
    assert LaurentPolynomial.from_json(json.loads(json.dumps(a.to_json()))) == a


@given(st.integers(3, 60))
def test_height_assignment_corners(s):
    r = 2 if s % 2 else s - 1
    h = spiral_height_assignment(r, s)
    assert h.violations() == []
    for i in range(1, 2 * s):
        assert h.vertical_height(i, s) == (i if i < s else 2 * s - i)


@given(petal_perms(max_petals=15))
def test_render_parse_back(p):
    root = ET.fromstring(render_svg(RenderSpec(p, size=1000)))
    paths = [e for e in root.iter() if e.get("class") == "petal"]
    assert len(paths) == len(p)
    starts = []
    for path in paths:
        nums = [float(v) for v in path.get("d").replace("M", " ").replace("L", " ").split()]
        starts.append(math.hypot(nums[0] - 500, nums[1] - 500))
    order = sorted(range(len(p)), key=lambda k: starts[k])
    assert [p.heights[k] for k in order] == sorted(p.heights)


@given(petal_perms(), st.sampled_from(["perm", "grid", "arc", "gauss", "pd"]))
def test_cli_json_round_trip(p, kind):
    value = to_json_value(convert(p, kind))
    text = json.dumps(value, sort_keys=True)
    assert to_json_value(parse_diagram(text)) == value



@settings(max_examples=60)
@given(petal_perms(max_petals=7), st.data())
def test_chiral_orbit_preserves_knot(p, data):
    q = data.draw(st.sampled_from(symmetry_orbit(p, mirrors=False)))
    assert fingerprint(q, 30).same_knot_type(fingerprint(p, 30), chiral=True)
