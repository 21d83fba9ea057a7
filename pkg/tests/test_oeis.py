import os

import pytest

from latticepaths.catalog import FAMILIES, terms
from latticepaths.oeis import (
    BFile,
    BFileParseError,
    FetchError,
    bfile_filename,
    bfile_url,
    compare,
    fetch,
    parse_bfile,
    serialize_bfile,
)


def refuse_network(url):
    raise AssertionError(f"unexpected network access: {url}")


class TestParse:
    def test_basic(self):
        entries = parse_bfile("A000984", "0 1\n1 2\n2 6\n")
        assert entries == {0: 1, 1: 2, 2: 6}

    def test_comments_and_blanks(self):
        text = "# header comment\n\n0 1\n1 1\n\n# trailing\n"
        assert parse_bfile("A000108", text) == {0: 1, 1: 1}

    def test_negative_values_accepted(self):
        assert parse_bfile("A000984", "5 -12\n6 3\n") == {5: -12, 6: 3}

    def test_malformed_line(self):
        with pytest.raises(BFileParseError):
            parse_bfile("A000984", "0 1\noops\n")

    def test_non_integer(self):
        with pytest.raises(BFileParseError):
            parse_bfile("A000984", "0 1.5\n")

    def test_gap_in_indices(self):
        with pytest.raises(BFileParseError):
            parse_bfile("A000984", "0 1\n2 6\n")

    def test_empty(self):
        with pytest.raises(BFileParseError):
            parse_bfile("A000984", "# nothing here\n")

    def test_roundtrip(self):
        text = "0 1\n1 2\n2 6\n"
        bfile = BFile("A000984", parse_bfile("A000984", text), source="fixture")
        assert serialize_bfile(bfile) == text


class TestFetch:
    def test_packaged_fixture_without_network(self):
        bfile = fetch("A000984", transport=refuse_network)
        assert bfile.source == "fixture"
        assert bfile.first_index == 0
        assert bfile.entries[0] == 1
        assert bfile.entries[4] == 70
        assert len(bfile) >= 100

    def test_all_ten_fixtures_shipped(self):
        for family in FAMILIES.values():
            bfile = fetch(family.oeis_id, transport=refuse_network)
            assert len(bfile) >= 100, family.oeis_id

    def test_cache_dir_wins_over_fixture(self, tmp_path):
        (tmp_path / bfile_filename("A000108")).write_text("0 99\n1 98\n")
        bfile = fetch("A000108", cache_dir=tmp_path, transport=refuse_network)
        assert bfile.entries == {0: 99, 1: 98}
        assert bfile.source == "fixture"

    def test_invalid_id(self):
        with pytest.raises(ValueError):
            fetch("Axyz")
        with pytest.raises(ValueError):
            fetch("A12345")

    def test_network_path_writes_cache(self, tmp_path):
        calls = []

        def transport(url):
            calls.append(url)
            return "0 7\n1 8\n"

        bfile = fetch("A123456", cache_dir=tmp_path, transport=transport)
        assert bfile.source == "fetched"
        assert calls == ["https://oeis.org/A123456/b123456.txt"]
        assert (tmp_path / "b123456.txt").read_text() == "0 7\n1 8\n"
        # second call is served from the cache
        again = fetch("A123456", cache_dir=tmp_path, transport=refuse_network)
        assert again.entries == {0: 7, 1: 8}
        assert again.source == "fixture"

    def test_refresh_skips_cache(self, tmp_path):
        (tmp_path / "b123456.txt").write_text("0 1\n")
        bfile = fetch("A123456", cache_dir=tmp_path, transport=lambda url: "0 2\n", refresh=True)
        assert bfile.entries == {0: 2}
        assert (tmp_path / "b123456.txt").read_text() == "0 2\n"

    def test_parse_failure_leaves_cache_untouched(self, tmp_path):
        with pytest.raises(BFileParseError):
            fetch("A123456", cache_dir=tmp_path, transport=lambda url: "garbage\n")
        assert list(tmp_path.iterdir()) == []

    def test_network_failure_leaves_cache_untouched(self, tmp_path):
        def transport(url):
            raise FetchError("no route to host")

        with pytest.raises(FetchError):
            fetch("A123456", cache_dir=tmp_path, transport=transport)
        assert list(tmp_path.iterdir()) == []

    def test_url_shape(self):
        assert bfile_url("A002426") == "https://oeis.org/A002426/b002426.txt"


class TestCompare:
    def test_agreement(self):
        report = compare(FAMILIES["dyck"], 20, transport=refuse_network)
        assert report.agree
        assert report.checked == 20
        assert report.first_mismatch is None
        assert report.source == "fixture"

    def test_hundred_terms_every_family(self):
        for family in FAMILIES.values():
            report = compare(family, 100, transport=refuse_network)
            assert report.agree and report.checked == 100, family.key

    def test_corrupted_fixture_reports_index(self, tmp_path):
        family = FAMILIES["schroeder"]
        good = terms(family, 10)
        lines = [f"{n} {v}" for n, v in enumerate(good)]
        lines[7] = f"7 {good[7] + 1}"
        (tmp_path / bfile_filename(family.oeis_id)).write_text("\n".join(lines) + "\n")
        report = compare(family, 10, cache_dir=tmp_path, transport=refuse_network)
        assert not report.agree
        assert report.first_mismatch == (7, good[7] + 1, good[7])

    def test_short_bfile_is_partial_not_failed(self, tmp_path):
        family = FAMILIES["motzkin"]
        good = terms(family, 5)
        text = "".join(f"{n} {v}\n" for n, v in enumerate(good))
        (tmp_path / bfile_filename(family.oeis_id)).write_text(text)
        report = compare(family, 50, cache_dir=tmp_path, transport=refuse_network)
        assert report.agree
        assert report.checked == 5
        assert "only 5 of 50" in report.note

    def test_wrong_offset_is_a_configuration_error(self, tmp_path):
        family = FAMILIES["central"]
        (tmp_path / bfile_filename(family.oeis_id)).write_text("1 2\n2 6\n")
        with pytest.raises(BFileParseError):
            compare(family, 2, cache_dir=tmp_path, transport=refuse_network)


@pytest.mark.skipif(
    os.environ.get("LATTICEPATHS_NETWORK_TESTS") != "1",
    reason="live network test; set LATTICEPATHS_NETWORK_TESTS=1 to enable",
)
def test_live_fetch_from_oeis(tmp_path):
    bfile = fetch("A000108", cache_dir=tmp_path, refresh=True)
    assert bfile.source == "fetched"
    assert bfile.entries[0] == 1
    assert bfile.entries[8] == 1430
