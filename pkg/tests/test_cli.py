"""CLI subcommands: outputs, exit codes, determinism, JSON mode."""

import json
import pathlib

from lagmono.cli import run

FIXTURES = pathlib.Path(__file__).resolve().parent.parent / "fixtures"


def invoke(capsys, *argv):
    code = run(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


class TestToric:
    def test_blowup_report(self, capsys):
        code, out, _ = invoke(capsys, "toric", str(FIXTURES / "bl1cp2.poly"))
        assert code == 0
        assert "validation: status=PASS" in out
        assert "hamiltonian: order=2" in out
        assert "(1 3)" in out
        assert "symplectic: order=2" in out
        assert "equal_groups: value=True" in out

    def test_triangle_report(self, capsys):
        code, out, _ = invoke(capsys, "toric", str(FIXTURES / "cp2.poly"))
        assert code == 0
        assert "hamiltonian: order=6" in out
        assert "partition: blocks=[[1, 2, 3]]" in out

    def test_json_mode_mirrors_text(self, capsys):
        code, out, _ = invoke(capsys, "--json", "toric", str(FIXTURES / "cp2.poly"))
        assert code == 0
        records = [json.loads(line) for line in out.strip().splitlines()]
        kinds = [r["record"] for r in records]
        assert kinds == [
            "polytope",
            "validation",
            "monotone",
            "relations",
            "potential",
            "partition",
            "hamiltonian",
            "symplectic",
            "equal_groups",
        ]
        ham = next(r for r in records if r["record"] == "hamiltonian")
        assert ham["order"] == 6

    def test_deterministic_output(self, capsys):
        _, first, _ = invoke(capsys, "toric", str(FIXTURES / "cube3.poly"))
        _, second, _ = invoke(capsys, "toric", str(FIXTURES / "cube3.poly"))
        assert first == second

    def test_validation_failure_exit_code(self, capsys, tmp_path):
        bad = tmp_path / "bad.poly"
        bad.write_text("dim 2\nmode compact\nfacet 1 0 1\nfacet 0 1 1\nfacet -1 -2 1\n")
        code, out, _ = invoke(capsys, "toric", str(bad))
        assert code == 2
        assert "VERTEX_SMOOTHNESS" in out

    def test_parse_failure_exit_code(self, capsys, tmp_path):
        bad = tmp_path / "bad.poly"
        bad.write_text("dim 2\nmode compact\nfacet 1 0\n")
        code, _, err = invoke(capsys, "toric", str(bad))
        assert code == 3
        assert "line 3" in err

    def test_missing_file(self, capsys):
        code, _, err = invoke(capsys, "toric", "no-such-file.poly")
        assert code == 3

    def test_mode_override(self, capsys, tmp_path):
        strip = tmp_path / "strip.poly"
        strip.write_text("dim 2\nmode compact\nfacet 1 0 1\nfacet 0 1 1\nfacet 0 -1 1\n")
        code, _, _ = invoke(capsys, "toric", str(strip))
        assert code == 2
        code, out, _ = invoke(capsys, "toric", str(strip), "--mode", "vertex")
        assert code == 0
        assert "hamiltonian: order=2" in out


class TestClassify2d:
    def test_six_impossible_lines(self, capsys):
        code, out, _ = invoke(capsys, "classify2d")
        assert code == 0
        lines = out.strip().splitlines()
        assert len(lines) == 13
        impossible = [line for line in lines if "tag=IMPOSSIBLE" in line]
        assert len(impossible) == 6
        for name in ("2t", "3t", "4ft", "6ft"):
            assert any(f"name={name} " in line for line in impossible)

    def test_realizations_reported(self, capsys):
        _, out, _ = invoke(capsys, "classify2d")
        assert "name=3f" in out and "realized_by=[cp2]" in out


class TestFilter:
    def test_swap_extension_rejected(self, capsys):
        code, out, _ = invoke(capsys, "filter", str(FIXTURES / "swap_extension.group"))
        assert code == 0
        assert "admissible: value=False" in out
        assert "witness_element=[[0, 1], [1, 0]]" in out
        assert "witness_point=(0, 1/2)" in out

    def test_axis_extension_admissible(self, capsys):
        code, out, _ = invoke(capsys, "filter", str(FIXTURES / "axis_extension.group"))
        assert code == 0
        assert "admissible: value=True" in out
        assert "count=4" in out


class TestConjecture:
    def test_rank3_catalog(self, capsys):
        code, out, _ = invoke(capsys, "conjecture", str(FIXTURES / "rank3_extensions.cat"))
        assert code == 0
        lines = out.strip().splitlines()
        ruled = [line for line in lines if "status=RULED_OUT" in line]
        assert len(ruled) == 6
        signs = next(line for line in lines if "name=signs" in line)
        assert "parts=[2, 2, 2]" in signs


class TestPotential:
    def test_crit(self, capsys):
        code, out, _ = invoke(
            capsys, "potential", "crit", str(FIXTURES / "triangle_potential.laurent"), "--bound", "6"
        )
        assert code == 0
        assert "count=3" in out
        assert "(1/3, 1/3)" in out

    def test_rk1(self, capsys):
        code, out, _ = invoke(
            capsys, "potential", "rk1", str(FIXTURES / "symmetric_potential.laurent")
        )
        assert code == 0
        assert "case=SYMMETRIC_PM" in out
        assert "a=7" in out


class TestClifford:
    def test_constants_at_origin(self, capsys):
        code, out, _ = invoke(
            capsys, "clifford", str(FIXTURES / "triangle_potential.laurent"), "--at", "0,0"
        )
        assert code == 0
        assert "lam=-1" in out and "mu=-1" in out and "nu=-1" in out

    def test_noncritical_point_rejected(self, capsys):
        code, _, err = invoke(
            capsys, "clifford", str(FIXTURES / "triangle_potential.laurent"), "--at", "1/2,0"
        )
        assert code == 2


class TestQform:
    def test_split_reduction(self, capsys):
        code, out, _ = invoke(capsys, "qform", "1", "1", "0")
        assert code == 0
        assert "canonical=diag(1,-1)" in out
        assert "transform=" in out

    def test_bad_discriminant(self, capsys):
        code, _, err = invoke(capsys, "qform", "1", "0", "-2")
        assert code == 2


class TestCorpus:
    def test_all_polytope_fixtures_under_ten_seconds(self, capsys):
        import time

        start = time.monotonic()
        for path in sorted(FIXTURES.glob("*.poly")):
            code, out, _ = invoke(capsys, "toric", str(path))
            assert code == 0, path.name
            assert "validation: status=PASS" in out, path.name
        assert time.monotonic() - start < 10.0
