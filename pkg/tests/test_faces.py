"""Sign-vector face enumeration against hand counts and the lattice side."""

from fractions import Fraction as F
from itertools import product

import pytest

from cutcount.errors import CapExceeded, DimensionMismatch
from cutcount.exactgeom import Arrangement, Hyperplane, build_lattice
from cutcount.faces import (
    chambers,
    enumerate_faces,
    f_vector_oracle,
    faces_to_json,
    feasible,
    signs_from_string,
    signs_to_string,
)
from cutcount.poset import chamber_count, upper_set


def lines(*rows):
    planes = [Hyperplane(tuple(F(v) for v in normal), F(off)) for *normal, off in rows]
    return Arrangement(len(rows[0]) - 1, planes)


@pytest.fixture
def axes():
    return lines((1, 0, 0), (0, 1, 0))


@pytest.fixture
def generic3():
    return lines((1, 0, 0), (0, 1, 0), (1, 1, 1))


@pytest.fixture
def concurrent3():
    return lines((1, 0, 0), (0, 1, 0), (1, -1, 0))


class TestSignStrings:
    def test_round_trip(self):
        assert signs_to_string((1, 0, -1)) == "+0-"
        assert signs_from_string("+0-") == (1, 0, -1)

    def test_bad_character(self):
        with pytest.raises(ValueError):
            signs_from_string("+x")


class TestFeasible:
    def test_open_quadrant(self, axes):
        assert feasible(axes, (1, 1))

    def test_origin(self, axes):
        assert feasible(axes, (0, 0))

    def test_contradictory_strip(self):
        # x < 0 together with x > 1
        par = lines((1, 0, 0), (1, 0, 1))
        assert not feasible(par, (-1, 1))
        assert feasible(par, (1, -1))

    def test_point_demanding_strict_side_of_incident_line(self, concurrent3):
        # the triple point lies on line 2, so 0 0 + is empty
        assert not feasible(concurrent3, (0, 0, 1))

    def test_wrong_length(self, axes):
        with pytest.raises(DimensionMismatch):
            feasible(axes, (1,))

    def test_invariant_under_hyperplane_reordering(self, generic3):
        order = (2, 0, 1)
        swapped = Arrangement(2, [generic3.hyperplanes[i] for i in order])
        for signs in product((1, 0, -1), repeat=3):
            assert feasible(generic3, signs) == feasible(swapped, tuple(signs[i] for i in order))


class TestEnumerate:
    def test_empty_arrangement_has_one_face(self):
        A = Arrangement(2, [])
        records = enumerate_faces(A)
        assert len(records) == 1
        assert records[0].signs == () and records[0].dim == 2

    def test_axes_has_nine_faces(self, axes):
        records = enumerate_faces(axes)
        assert [signs_to_string(r.signs) for r in records] == [
            "00", "0+", "0-", "+0", "++", "+-", "-0", "-+", "--",
        ]
        assert [r.dim for r in records] == [0, 1, 1, 1, 2, 2, 1, 2, 2]

    def test_concurrent_has_thirteen(self, concurrent3):
        assert len(enumerate_faces(concurrent3)) == 13

    def test_matches_exhaustive_search(self, generic3, concurrent3):
        # a five-line mix of generic, concurrent, and parallel behavior
        mixed = lines((1, 0, 0), (0, 1, 0), (1, 1, 1), (1, 0, 1), (1, -1, 0))
        for A in (generic3, concurrent3, mixed):
            m = len(A.hyperplanes)
            walked = {r.signs for r in enumerate_faces(A)}
            brute = {s for s in product((1, 0, -1), repeat=m) if feasible(A, s)}
            assert walked == brute

    def test_same_zero_set_same_flat(self, concurrent3):
        by_zero = {}
        for r in enumerate_faces(concurrent3):
            zero = tuple(i for i, s in enumerate(r.signs) if s == 0)
            by_zero.setdefault(zero, set()).add(r.flat_id)
        assert all(len(ids) == 1 for ids in by_zero.values())

    def test_face_dim_equals_flat_dim(self, generic3):
        L = build_lattice(generic3)
        for r in enumerate_faces(generic3, L):
            assert r.dim == L.flats[r.flat_id].dim

    def test_faces_per_flat_count_chambers_of_upper_set(self, generic3, concurrent3):
        for A in (generic3, concurrent3):
            L = build_lattice(A)
            tally = {fid: 0 for fid in L.ids()}
            for r in enumerate_faces(A, L):
                tally[r.flat_id] += 1
            for fid in L.ids():
                assert tally[fid] == chamber_count(upper_set(L, fid))

    def test_cap(self, axes):
        with pytest.raises(CapExceeded):
            enumerate_faces(axes, cap=1)
        assert len(enumerate_faces(axes, cap=2)) == 9


class TestFVectorOracle:
    def test_axes(self, axes):
        assert f_vector_oracle(axes) == [1, 4, 4]

    def test_generic3(self, generic3):
        assert f_vector_oracle(generic3) == [3, 9, 7]

    def test_point_on_a_line(self):
        A = Arrangement(1, [Hyperplane((F(1),), F(1, 2))])
        assert f_vector_oracle(A) == [1, 2]

    def test_euler_relation(self, axes, generic3, concurrent3):
        for A in (axes, generic3, concurrent3):
            f = f_vector_oracle(A)
            assert sum((-1) ** i * c for i, c in enumerate(f)) == (-1) ** A.ambient_dim


class TestChambers:
    def test_empty_arrangement(self):
        assert chambers(Arrangement(2, [])) == [()]

    def test_concurrent(self, concurrent3):
        assert len(chambers(concurrent3)) == 6

    def test_generic(self, generic3):
        assert len(chambers(generic3)) == 7

    def test_matches_lattice_count(self, generic3, concurrent3):
        for A in (generic3, concurrent3):
            assert len(chambers(A)) == chamber_count(build_lattice(A))


class TestJson:
    def test_axes_report(self, axes):
        doc = faces_to_json(axes, enumerate_faces(axes))
        assert doc["f_vector"] == [1, 4, 4]
        assert doc["faces"][0] == {"signs": "00", "dim": 0, "flat": 3}
        assert len(doc["faces"]) == 9
