import json
import subprocess
import sys

from digiconvex import lyndon_factorization, mfw_of_word
from digiconvex.cli import main


def run_cli(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


class TestChristoffel:
    def test_lower(self, capsys):
        code, out, _ = run_cli(capsys, "christoffel", "7", "4")
        assert code == 0
        assert out == "00100100101\n"

    def test_central(self, capsys):
        code, out, _ = run_cli(capsys, "christoffel", "7", "4", "--central")
        assert (code, out) == (0, "010010010\n")

    def test_upper(self, capsys):
        code, out, _ = run_cli(capsys, "christoffel", "7", "4", "--upper")
        assert (code, out) == (0, "10100100100\n")

    def test_invalid_pair_exits_2(self, capsys):
        code, _, err = run_cli(capsys, "christoffel", "0", "0")
        assert code == 2
        assert "error" in err

    def test_json(self, capsys):
        code, out, _ = run_cli(capsys, "christoffel", "7", "4", "--format", "json")
        assert json.loads(out) == {"word": "00100100101", "parikh": [7, 4]}


class TestCheck:
    def test_balanced_false(self, capsys):
        code, out, _ = run_cli(capsys, "check", "0101000", "--balanced")
        assert code == 1
        assert out == "balanced false\n"

    def test_convex_true(self, capsys):
        code, out, _ = run_cli(capsys, "check", "0101001001", "--convex-up")
        assert code == 0
        assert out == "convex-up true\n"

    def test_convex_false_with_witness(self, capsys):
        code, out, _ = run_cli(capsys, "check", "0011", "--convex-up")
        assert code == 1
        assert "convex-up false" in out
        assert "witness 0011" in out

    def test_json_schema(self, capsys):
        code, out, _ = run_cli(
            capsys, "check", "0011", "--convex-up", "--balanced", "--format", "json"
        )
        payload = json.loads(out)
        assert payload["word"] == "0011"
        assert payload["parikh"] == [2, 2]
        assert payload["convex_up"] is False
        assert payload["balanced"] is False
        assert payload["witness"] == {"start": 0, "end": 4, "factor": "0011"}

    def test_parse_error_exits_2(self, capsys):
        code, _, err = run_cli(capsys, "check", "0a1", "--balanced")
        assert code == 2
        assert "position 1" in err

    def test_no_checks_requested(self, capsys):
        code, _, err = run_cli(capsys, "check", "01")
        assert code == 2


class TestFactorize:
    def test_lyndon_golden(self, capsys):
        code, out, _ = run_cli(capsys, "factorize", "0101001001")
        assert (code, out) == (0, "01·01·001·001\n")

    def test_letters_golden(self, capsys):
        code, out, _ = run_cli(capsys, "factorize", "1100")
        assert (code, out) == (0, "1·1·0·0\n")

    def test_standard(self, capsys):
        code, out, _ = run_cli(capsys, "factorize", "00100100101", "--mode", "standard")
        assert (code, out) == (0, "001·00100101\n")

    def test_palindromic(self, capsys):
        code, out, _ = run_cli(
            capsys, "factorize", "00100100101", "--mode", "palindromic"
        )
        assert (code, out) == (0, "00100100·101\n")

    def test_palindromic_absent_exits_1(self, capsys):
        code, out, _ = run_cli(capsys, "factorize", "010011", "--mode", "palindromic")
        assert code == 1
        assert out == "absent\n"

    def test_standard_rejects_non_lyndon(self, capsys):
        code, _, err = run_cli(capsys, "factorize", "10", "--mode", "standard")
        assert code == 2

    def test_json_matches_library(self, capsys):
        code, out, _ = run_cli(capsys, "factorize", "0101001001", "--format", "json")
        assert json.loads(out)["factors"] == list(
            lyndon_factorization("0101001001").factors
        )


class TestMfw:
    def test_word_golden(self, capsys):
        code, out, _ = run_cli(capsys, "mfw", "word", "01001")
        assert code == 0
        assert out.split() == ["000", "0010", "101", "11"]
        assert out.split() == mfw_of_word("01001")

    def test_dc(self, capsys):
        code, out, _ = run_cli(capsys, "mfw", "dc", "4")
        assert (code, out) == (0, "0011\n")

    def test_balanced_json(self, capsys):
        code, out, _ = run_cli(capsys, "mfw", "balanced", "4", "--format", "json")
        assert json.loads(out) == {"words": ["0011", "1100"]}


class TestLattice:
    def test_enumerate(self, capsys):
        code, out, _ = run_cli(capsys, "lattice", "enumerate", "2", "2")
        assert code == 0
        assert out.split() == ["0101", "0110", "1001", "1010", "1100"]

    def test_cap_exceeded_exits_3(self, capsys):
        code, _, err = run_cli(capsys, "lattice", "enumerate", "20", "20")
        assert code == 3
        assert "--cap" in err

    def test_cap_can_be_raised(self, capsys):
        code, out, _ = run_cli(capsys, "lattice", "enumerate", "13", "13", "--cap", "26")
        assert code == 0

    def test_meet(self, capsys):
        code, out, _ = run_cli(capsys, "lattice", "meet", "1001", "0110")
        assert (code, out) == (0, "0101\n")

    def test_join_with_warning(self, capsys):
        code, out, err = run_cli(
            capsys,
            "lattice",
            "join",
            "010101010110001001",
            "011110001001001001",
        )
        assert code == 0
        assert out == "011110001010001001\n"
        assert "not digitally convex" in err

    def test_covers(self, capsys):
        code, out, _ = run_cli(capsys, "lattice", "covers", "1", "1")
        assert (code, out) == (0, "01 -> 10\n")

    def test_inflate_deflate(self, capsys):
        code, out, _ = run_cli(capsys, "lattice", "inflate", "00100100101")
        assert (code, out) == (0, "00100101001\n")
        code, out, _ = run_cli(capsys, "lattice", "deflate", "1100")
        assert (code, out) == (0, "1010\n")
        code, out, _ = run_cli(capsys, "lattice", "deflate", "0101001001", "--position", "3")
        assert (code, out) == (0, "0100101001\n")

    def test_deflate_invalid_position(self, capsys):
        code, _, err = run_cli(capsys, "lattice", "deflate", "0101001001", "--position", "1")
        assert code == 2

    def test_chains(self, capsys):
        code, out, _ = run_cli(capsys, "lattice", "chain-down", "1100")
        assert code == 0
        assert out.split() == ["1100", "1010", "0110", "0101"]
        code, out, _ = run_cli(capsys, "lattice", "chain-up", "0101", "--format", "json")
        chain = json.loads(out)["words"]
        assert chain[0] == "0101" and chain[-1] == "1100"


class TestCount:
    def test_dc0_table(self, capsys):
        code, out, _ = run_cli(capsys, "count", "dc0", "12")
        assert code == 0
        assert out.splitlines()[-1] == "12 392"
        assert out.splitlines()[0] == "0 1"

    def test_mfw_dc(self, capsys):
        code, out, _ = run_cli(capsys, "count", "mfw-dc", "6")
        assert out.splitlines()[-1] == "6 3"

    def test_balanced(self, capsys):
        code, out, _ = run_cli(capsys, "count", "balanced", "2")
        assert out.splitlines()[-1] == "2 4"

    def test_json_roundtrip(self, capsys):
        code, out, _ = run_cli(capsys, "count", "dc0", "12", "--format", "json")
        payload = json.loads(out)
        assert payload["values"][12] == 392


class TestRender:
    def test_ascii_single_step(self, capsys):
        code, out, _ = run_cli(capsys, "render", "0", "--format", "ascii")
        assert (code, out) == (0, "._.\n")

    def test_svg_deterministic(self, capsys):
        args = ("render", "00100100101", "--marks", "S,S'", "--format", "svg")
        _, first, _ = run_cli(capsys, *args)
        _, second, _ = run_cli(capsys, *args)
        assert first == second
        assert first.startswith("<svg ")

    def test_marks_on_plain_word_exit_2(self, capsys):
        code, _, err = run_cli(capsys, "render", "0101000", "--marks", "S")
        assert code == 2


class TestSubprocess:
    def test_module_entry_point(self):
        proc = subprocess.run(
            [sys.executable, "-m", "digiconvex", "factorize", "0101001001"],
            capture_output=True,
            text=True,
        )
        assert proc.returncode == 0
        assert proc.stdout.strip() == "01·01·001·001"

    def test_exit_codes_through_subprocess(self):
        proc = subprocess.run(
            [sys.executable, "-m", "digiconvex", "check", "0011", "--convex-up"],
            capture_output=True,
            text=True,
        )
        assert proc.returncode == 1
