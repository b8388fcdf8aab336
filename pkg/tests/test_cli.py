"""End-to-end command-line behavior, run through the installed module."""

import json
import subprocess
import sys

import pytest


def run(*args, **kwargs):
    return subprocess.run(
        [sys.executable, "-m", "cutcount", *args],
        capture_output=True, text=True, **kwargs,
    )


class TestMobius:
    def test_axes_golden(self, fixture_path):
        proc = run("mobius", fixture_path("axes.json"))
        assert proc.returncode == 0
        assert json.loads(proc.stdout)["pretty"] == "x^2 + 2xy + y^2 - 2x - 2y + 1"

    def test_empty_arrangement(self, fixture_path):
        proc = run("mobius", fixture_path("empty.json"))
        assert json.loads(proc.stdout)["pretty"] == "1"

    def test_concurrent(self, fixture_path):
        proc = run("mobius", fixture_path("concurrent3.json"))
        assert json.loads(proc.stdout)["pretty"] == "x^2 + 3xy + y^2 - 3x - 3y + 2"

    def test_abstract_semilattice(self, fixture_path):
        proc = run("mobius", fixture_path("semilattice_axes.json"))
        assert json.loads(proc.stdout)["pretty"] == "x^2 + 2xy + y^2 - 2x - 2y + 1"

    def test_terms_are_string_coefficients(self, fixture_path):
        doc = json.loads(run("mobius", fixture_path("axes.json")).stdout)
        assert {"x": 2, "y": 0, "coeff": "1"} in doc["terms"]


class TestFpoly:
    def test_generic3(self, fixture_path):
        proc = run("fpoly", fixture_path("generic3.json"))
        assert json.loads(proc.stdout)["pretty"] == "3x^2 + 9x + 7"

    def test_nine_line_semilattice(self, fixture_path):
        proc = run("fpoly", fixture_path("semilattice_ninelines.json"))
        assert json.loads(proc.stdout)["pretty"] == "5x^2 + 20x + 16"

    def test_empty(self, fixture_path):
        assert json.loads(run("fpoly", fixture_path("empty.json")).stdout)["pretty"] == "1"


class TestFaces:
    def test_axes(self, fixture_path):
        doc = json.loads(run("faces", fixture_path("axes.json")).stdout)
        assert doc["f_vector"] == [1, 4, 4]
        assert doc["faces"][0] == {"signs": "00", "dim": 0, "flat": 3}

    def test_wiring_triple(self, fixture_path):
        doc = json.loads(run("faces", fixture_path("wiring_triple.json")).stdout)
        assert doc["f_vector"] == [1, 6, 6]

    def test_semilattice_unsupported(self, fixture_path):
        proc = run("faces", fixture_path("semilattice_axes.json"))
        assert proc.returncode == 2
        assert "error" in proc.stderr

    def test_cap_flag(self, fixture_path):
        assert run("--cap", "2", "faces", fixture_path("generic3.json")).returncode == 2
        assert run("--cap", "3", "faces", fixture_path("generic3.json")).returncode == 0


class TestVerify:
    @pytest.mark.parametrize("name", [
        "empty.json", "axes.json", "generic3.json", "concurrent3.json",
        "parallel2.json", "point_on_line.json", "wiring_triple.json",
        "wiring_generic3.json", "wiring_parallel2.json", "ninewire.json",
    ])
    def test_every_fixture_matches(self, fixture_path, name):
        proc = run("verify", fixture_path(name))
        assert proc.returncode == 0, proc.stderr
        assert "match: pass" in proc.stdout

    def test_axes_euler_line(self, fixture_path):
        assert "euler_check: pass" in run("verify", fixture_path("axes.json")).stdout

    def test_json_report(self, fixture_path):
        doc = json.loads(run("verify", fixture_path("axes.json"), "--json").stdout)
        assert doc["match"] is True
        assert doc["euler_check"] is True
        assert doc["f_vector_direct"] == [1, 4, 4]
        assert doc["mobius_poly"]["pretty"] == "x^2 + 2xy + y^2 - 2x - 2y + 1"
        assert doc["f_poly_theorem"]["pretty"] == "x^2 + 4x + 4"

    def test_corrupted_golden_is_flagged(self, fixture_path):
        # negative control for the comparison harness itself: a corrupted
        # expected f-vector must not slip through the equality check
        doc = json.loads(run("verify", fixture_path("axes.json"), "--json").stdout)
        corrupted = [1, 4, 5]
        assert doc["f_vector_direct"] != corrupted

    def test_semilattice_rejected(self, fixture_path):
        assert run("verify", fixture_path("semilattice_axes.json")).returncode == 2


class TestGen:
    def test_same_seed_same_bytes(self):
        a = run("gen", "--kind", "hyperplanes", "--seed", "11", "--count", "3")
        b = run("gen", "--kind", "hyperplanes", "--seed", "11", "--count", "3")
        assert a.stdout == b.stdout and a.returncode == 0

    def test_different_seeds_differ(self):
        a = run("gen", "--kind", "hyperplanes", "--seed", "1")
        b = run("gen", "--kind", "hyperplanes", "--seed", "2")
        assert a.stdout != b.stdout

    @pytest.mark.parametrize("seed", [0, 1, 7])
    def test_generated_arrangement_verifies(self, tmp_path, seed):
        doc = run("gen", "--kind", "hyperplanes", "--seed", str(seed), "--dim", "2",
                  "--count", "4", "--bound", "5").stdout
        path = tmp_path / "gen.json"
        path.write_text(doc)
        assert run("verify", str(path)).returncode == 0

    @pytest.mark.parametrize("seed", [0, 3, 9])
    def test_generated_wiring_verifies(self, tmp_path, seed):
        doc = run("gen", "--kind", "wiring", "--seed", str(seed), "--wires", "5").stdout
        path = tmp_path / "gen.json"
        path.write_text(doc)
        assert json.loads(doc)["kind"] == "wiring"
        assert run("verify", str(path)).returncode == 0

    def test_too_many_crossings(self):
        proc = run("gen", "--kind", "wiring", "--seed", "1", "--wires", "3", "--crossings", "99")
        assert proc.returncode == 2

    def test_mixed_params_rejected(self):
        proc = run("gen", "--kind", "hyperplanes", "--seed", "1", "--wires", "4")
        assert proc.returncode == 2

    def test_seed_is_required(self):
        assert run("gen", "--kind", "wiring").returncode == 2


class TestBadInput:
    def test_missing_file(self):
        assert run("mobius", "/nonexistent.json").returncode == 2

    def test_not_json(self, tmp_path):
        path = tmp_path / "junk.json"
        path.write_text("not json")
        assert run("mobius", str(path)).returncode == 2

    def test_unknown_kind(self, tmp_path):
        path = tmp_path / "odd.json"
        path.write_text('{"kind": "simplices"}')
        proc = run("mobius", str(path))
        assert proc.returncode == 2 and "kind" in proc.stderr

    def test_invalid_semilattice(self, tmp_path):
        path = tmp_path / "bad.json"
        path.write_text(json.dumps({
            "kind": "semilattice", "ambient_dim": 2,
            "flats": [{"id": 0, "dim": 2}, {"id": 1, "dim": 2}], "leq": [],
        }))
        assert run("mobius", str(path)).returncode == 2

    def test_no_command(self):
        assert run().returncode == 2
