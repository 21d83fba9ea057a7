import json

import pytest

from latticepaths import oeis
from latticepaths.catalog import FAMILIES, terms
from latticepaths.cli import main
from latticepaths.oeis import bfile_filename, parse_bfile


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


class TestSeq:
    def test_text(self, capsys):
        code, out, _ = run(capsys, "seq", "A001850", "--terms", "5")
        assert code == 0
        assert out == "1 3 13 63 321\n"

    def test_bfile(self, capsys):
        code, out, _ = run(capsys, "seq", "dyck", "--terms", "3", "--format", "bfile")
        assert code == 0
        assert out == "0 1\n1 1\n2 2\n"

    def test_bfile_output_reparses(self, capsys):
        code, out, _ = run(capsys, "seq", "schroeder", "--terms", "12", "--format", "bfile")
        assert code == 0
        assert list(parse_bfile("A006318", out).values()) == terms(FAMILIES["schroeder"], 12)

    def test_brute_method(self, capsys):
        code, out, _ = run(capsys, "seq", "motzkin", "--terms", "6", "--method", "brute")
        assert code == 0
        assert out == "1 1 2 4 9 21\n"

    def test_json(self, capsys):
        code, out, _ = run(capsys, "seq", "big_motzkin", "--terms", "4", "--format", "json")
        assert code == 0
        payload = json.loads(out)
        assert payload["terms"] == [1, 1, 3, 7]
        assert payload["oeis_id"] == "A002426"

    def test_unknown_family(self, capsys):
        code, _, err = run(capsys, "seq", "A999999")
        assert code == 2
        assert "unknown family" in err

    def test_brute_guard(self, capsys):
        code, _, err = run(capsys, "seq", "delannoy", "--terms", "14", "--method", "brute")
        assert code == 3
        assert "guard" in err

    def test_full_decimal_digits(self, capsys):
        code, out, _ = run(capsys, "seq", "central", "--terms", "81")
        assert code == 0
        last = out.split()[-1]
        assert last == str(terms(FAMILIES["central"], 81)[80])
        assert "e" not in last and "," not in last


class TestTriangle:
    def test_pascal(self, capsys):
        code, out, _ = run(capsys, "triangle", "pascal", "--rows", "4")
        assert code == 0
        assert out.splitlines()[-1] == "1 3 3 1"

    def test_single_row(self, capsys):
        code, out, _ = run(capsys, "triangle", "delannoy", "--rows", "1")
        assert code == 0
        assert out == "1\n"

    def test_motzkin_trims_structural_zeros(self, capsys):
        code, out, _ = run(capsys, "triangle", "motzkin", "--rows", "5")
        assert code == 0
        assert out.splitlines()[4] == "1 6 1"

    def test_unknown_array(self, capsys):
        code, _, err = run(capsys, "triangle", "fibonacci")
        assert code == 2
        assert "unknown triangle" in err


class TestPaths:
    def test_count(self, capsys):
        code, out, _ = run(capsys, "paths", "schroeder", "--n", "2")
        assert code == 0
        assert out == "6\n"

    def test_motzkin_count(self, capsys):
        code, out, _ = run(capsys, "paths", "motzkin", "--n", "5")
        assert code == 0
        assert out == "21\n"

    def test_list(self, capsys):
        code, out, _ = run(capsys, "paths", "dyck", "--n", "1", "--list")
        assert code == 0
        assert out == "DU\n"

    def test_list_is_sorted_and_complete(self, capsys):
        code, out, _ = run(capsys, "paths", "delannoy", "--n", "2", "--list")
        assert code == 0
        labels = out.splitlines()
        assert len(labels) == 13
        assert labels == sorted(labels)

    def test_ascii(self, capsys):
        code, out, _ = run(capsys, "paths", "dyck", "--n", "1", "--ascii")
        assert code == 0
        assert out == "DU\n\\/\n\n"

    def test_json(self, capsys):
        code, out, _ = run(capsys, "paths", "dyck", "--n", "2", "--format", "json")
        assert code == 0
        payload = json.loads(out)
        assert payload == {"family": "dyck", "n": 2, "span": 4, "count": 2}

    def test_guard(self, capsys):
        code, _, err = run(capsys, "paths", "central", "--n", "13")
        assert code == 3
        assert "guard" in err


class TestVerify:
    def test_green_run(self, capsys):
        code, out, _ = run(capsys, "verify", "--max-n", "2", "--order", "8")
        assert code == 0
        lines = out.splitlines()
        assert lines[-1] == "12/12 checks passed"
        assert all(line.startswith("PASS") for line in lines[:-1])

    def test_degenerate_run(self, capsys):
        code, out, _ = run(capsys, "verify", "--max-n", "0", "--order", "1")
        assert code == 0
        assert "12/12 checks passed" in out


class TestOeis:
    def test_fixture_agreement(self, capsys):
        code, out, _ = run(capsys, "oeis", "A002426", "--terms", "10")
        assert code == 0
        assert out == "A002426 (big_motzkin): agree on 10 terms (source: fixture)\n"

    def test_hundred_terms(self, capsys):
        code, out, _ = run(capsys, "oeis", "A000108", "--terms", "100")
        assert code == 0
        assert "agree on 100 terms" in out

    def test_unknown_id(self, capsys):
        code, _, err = run(capsys, "oeis", "A999999")
        assert code == 2
        assert "unknown family" in err

    def test_mismatch_exits_one(self, capsys, tmp_path):
        family = FAMILIES["dyck"]
        good = terms(family, 6)
        lines = [f"{n} {v}" for n, v in enumerate(good)]
        lines[2] = "2 3"
        (tmp_path / bfile_filename(family.oeis_id)).write_text("\n".join(lines) + "\n")
        code, out, _ = run(capsys, "oeis", "dyck", "--terms", "6", "--cache-dir", str(tmp_path))
        assert code == 1
        assert "mismatch at n=2" in out

    def test_env_var_supplies_cache_dir(self, capsys, tmp_path, monkeypatch):
        family = FAMILIES["central"]
        (tmp_path / bfile_filename(family.oeis_id)).write_text("0 1\n1 2\n2 999\n")
        monkeypatch.setenv("LATTICE_CACHE_DIR", str(tmp_path))
        code, out, _ = run(capsys, "oeis", "central", "--terms", "3")
        assert code == 1
        assert "mismatch at n=2" in out

    def test_flag_beats_env_var(self, capsys, tmp_path, monkeypatch):
        bad_dir = tmp_path / "bad"
        bad_dir.mkdir()
        family = FAMILIES["central"]
        (bad_dir / bfile_filename(family.oeis_id)).write_text("0 1\n1 999\n")
        good_dir = tmp_path / "good"
        good_dir.mkdir()
        monkeypatch.setenv("LATTICE_CACHE_DIR", str(bad_dir))
        code, out, _ = run(
            capsys, "oeis", "central", "--terms", "2", "--cache-dir", str(good_dir)
        )
        assert code == 0  # good_dir is empty, so the packaged fixture is used
        assert "agree on 2 terms" in out

    def test_partial_comparison_warns_but_passes(self, capsys, tmp_path):
        family = FAMILIES["motzkin"]
        good = terms(family, 4)
        text = "".join(f"{n} {v}\n" for n, v in enumerate(good))
        (tmp_path / bfile_filename(family.oeis_id)).write_text(text)
        code, out, err = run(
            capsys, "oeis", "motzkin", "--terms", "40", "--cache-dir", str(tmp_path)
        )
        assert code == 0
        assert "agree on 4 terms" in out
        assert "only 4 of 40" in err

    def test_network_failure_exits_four(self, capsys, monkeypatch):
        def explode(url):
            raise oeis.FetchError("network is down")

        monkeypatch.setattr(oeis, "_default_transport", explode)
        code, _, err = run(capsys, "oeis", "A000984", "--refresh")
        assert code == 4
        assert "network is down" in err


class TestUsage:
    def test_no_command_shows_help(self, capsys):
        code, _, err = run(capsys)
        assert code == 2
        assert "usage:" in err

    def test_unknown_flag_rejected(self, capsys):
        code, _, _ = run(capsys, "seq", "dyck", "--frobnicate")
        assert code == 2

    def test_unknown_command_rejected(self, capsys):
        code, _, _ = run(capsys, "fibonacci")
        assert code == 2

    def test_unreachable_server_exits_four(self, capsys):
        code, _, err = run(
            capsys, "--server", "http://127.0.0.1:1", "--timeout", "2", "seq", "dyck"
        )
        assert code == 4
        assert "cannot reach" in err


class TestDeterminism:
    @pytest.mark.parametrize(
        "argv",
        [
            ("seq", "A026375", "--terms", "8"),
            ("triangle", "uh", "--rows", "6"),
            ("paths", "big_motzkin", "--n", "4", "--list"),
            ("oeis", "A090344", "--terms", "25"),
        ],
    )
    def test_identical_invocations_identical_bytes(self, capsys, argv):
        first_code, first_out, _ = run(capsys, *argv)
        second_code, second_out, _ = run(capsys, *argv)
        assert first_code == second_code == 0
        assert first_out == second_out


class TestFaultInjection:
    def test_broken_sqrt_is_caught_and_named(self, capsys, monkeypatch):
        # An off-by-one planted in the square-root recurrence must surface as
        # a failing check that names the central-gf comparison.
        from fractions import Fraction

        from latticepaths.series import Series

        true_sqrt = Series.sqrt

        def skewed_sqrt(self):
            root = true_sqrt(self)
            coeffs = list(root.coeffs)
            coeffs[-1] += Fraction(1)
            return Series(coeffs)

        monkeypatch.setattr(Series, "sqrt", skewed_sqrt)
        code = main(["verify", "--max-n", "2", "--order", "8"])
        out = capsys.readouterr().out
        assert code == 1
        assert "FAIL  central-gf-coefficients" in out
        assert "expected" in out
