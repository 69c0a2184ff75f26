import json

import pytest

from ordrange.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


class TestGolden:
    def test_card(self, capsys):
        code, out, _ = run(capsys, "card", "-n", "3", "-Y", "1,3")
        assert code == 0
        assert out.strip() == '{"count":4}'

    def test_rank_formula(self, capsys):
        code, out, _ = run(capsys, "rank", "-n", "7", "-Y", "1,3,4,5",
                           "--method", "formula")
        assert code == 0
        assert out.strip() == '{"rank":22}'

    def test_enumerate(self, capsys):
        code, out, _ = run(capsys, "enumerate", "-n", "2", "-Y", "1,2")
        assert code == 0
        assert json.loads(out) == {
            "n": 2, "Y": [1, 2], "count": 3,
            "elements": [[1, 1], [1, 2], [2, 2]]}

    def test_complete(self, capsys):
        code, out, _ = run(capsys, "complete", "-n", "3", "-Y", "1,3",
                           "--theta", '{"domain":[1,3],"images":[1,3]}')
        assert code == 0
        assert json.loads(out) == {
            "completable": True, "witness": [1, 1, 3], "extensions": 2}

    def test_regular(self, capsys):
        code, out, _ = run(capsys, "regular", "-n", "4", "-Y", "2,3")
        assert code == 0
        payload = json.loads(out)
        assert payload["regular_count"] == 3
        assert payload["count"] == 5
        assert payload["is_regular_semigroup"] is False

    def test_green(self, capsys):
        code, out, _ = run(capsys, "green", "-n", "3", "-Y", "1,3",
                           "--relation", "L", "--check")
        assert code == 0
        payload = json.loads(out)
        assert payload["relation"] == "L"
        assert sorted(map(sorted, payload["classes"])) == [[0], [1, 2], [3]]

    def test_gens(self, capsys):
        code, out, _ = run(capsys, "gens", "-n", "3", "-Y", "1,3")
        assert code == 0
        payload = json.loads(out)
        assert payload["rank"] == payload["size"] == 4
        kinds = sorted(m["kind"] for m in payload["members"])
        assert kinds == ["ceiling_retraction", "floor_retraction",
                         "full_image", "full_image"]

    def test_iso_with_search(self, capsys):
        code, out, _ = run(capsys, "iso", "-n", "4", "-Y", "1,2", "-Z", "3,4",
                           "--search")
        assert code == 0
        payload = json.loads(out)
        assert payload["isomorphic"] is True
        assert payload["condition"] == 3
        assert payload["mapping"] is not None
        assert payload["induced_theta"] is not None

    def test_iso_negative(self, capsys):
        code, out, _ = run(capsys, "iso", "-n", "4", "-Y", "1,2", "-Z", "1,3",
                           "--search")
        assert code == 0
        payload = json.loads(out)
        assert payload == {"isomorphic": False, "condition": None,
                           "mapping": None, "induced_theta": None}

    def test_rank_check(self, capsys):
        code, out, _ = run(capsys, "rank", "-n", "4", "-Y", "1,3", "--check")
        assert code == 0
        payload = json.loads(out)
        assert payload["rank"] == 4
        assert payload["checked"] == ["brute", "constructed", "formula"]


class TestDeterminism:
    def test_byte_identical_runs(self, capsys):
        first = run(capsys, "gens", "-n", "5", "-Y", "1,3,4", "--seedless")
        second = run(capsys, "gens", "-n", "5", "-Y", "1,3,4", "--seedless")
        assert first == second

    def test_green_oracle_route(self, capsys):
        a = run(capsys, "green", "-n", "4", "-Y", "1,3", "--relation", "D",
                "--oracle")
        b = run(capsys, "green", "-n", "4", "-Y", "1,3", "--relation", "D")
        assert a[0] == b[0] == 0
        assert json.loads(a[1])["classes"] == json.loads(b[1])["classes"]


class TestFormats:
    def test_csv(self, capsys):
        code, out, _ = run(capsys, "card", "-n", "3", "-Y", "1,3",
                           "--format", "csv")
        assert code == 0
        assert out.splitlines() == ["key,value", "count,4"]

    def test_table(self, capsys):
        code, out, _ = run(capsys, "card", "-n", "3", "-Y", "1,3",
                           "--format", "table")
        assert code == 0
        assert "count" in out and "4" in out


class TestErrors:
    def test_unsorted_y(self, capsys):
        code, _, err = run(capsys, "card", "-n", "3", "-Y", "3,1")
        assert code == 2
        assert "strictly increasing" in err

    def test_duplicate_y(self, capsys):
        code, _, err = run(capsys, "card", "-n", "3", "-Y", "1,1")
        assert code == 2
        assert "strictly increasing" in err

    def test_out_of_range_y(self, capsys):
        code, _, err = run(capsys, "card", "-n", "3", "-Y", "1,4")
        assert code == 2
        assert "outside" in err

    def test_junk_y(self, capsys):
        code, _, err = run(capsys, "card", "-n", "3", "-Y", "a,b")
        assert code == 2
        assert "comma list" in err

    def test_unknown_subcommand(self, capsys):
        assert main(["frobnicate"]) == 2

    def test_guard_exceeded(self, capsys):
        code, _, err = run(capsys, "enumerate", "-n", "9",
                           "-Y", "1,2,3,4,5,6,7,8,9")
        assert code == 2
        assert "guard" in err

    def test_rank_constructed_rejects_degenerate(self, capsys):
        code, _, err = run(capsys, "rank", "-n", "4", "-Y", "2",
                           "--method", "constructed")
        assert code == 2

    def test_verify_needs_target(self, capsys):
        code, _, err = run(capsys, "verify", "-n", "3")
        assert code == 2


class TestVerify:
    def test_small_sweep_passes(self, capsys):
        code, out, _ = run(capsys, "verify", "-n", "3", "--all")
        assert code == 0
        lines = [ln for ln in out.splitlines() if ln.startswith(("ok", "FAIL"))]
        assert lines and all(ln.startswith("ok") for ln in lines)

    def test_single_set(self, capsys):
        code, out, _ = run(capsys, "verify", "-n", "4", "-Y", "1,3")
        assert code == 0
