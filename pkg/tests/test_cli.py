import io
import json

from qcrank.cli import main


def run(*argv):
    out = io.StringIO()
    code = main(list(argv), out=out)
    return code, out.getvalue()


def test_partitions_stats_table():
    code, text = run("partitions", "stats", "--n", "4", "--k", "5", "--stat", "crank")
    assert code == 0
    lines = text.splitlines()
    for lam in ("4", "3+1", "2+2", "2+1+1", "1+1+1+1"):
        assert any(line.split()[0] == lam for line in lines[1:6])
    assert lines[5].split()[2] == "-4"


def test_partitions_count():
    assert run("partitions", "count", "--n", "4") == (0, "p(4) = 5\n")


def test_verify_passing_ids_json():
    code, text = run("verify", "--id", "eq11", "--id", "eq12", "--order", "30", "--format", "json", "--jobs", "1")
    assert code == 0
    data = json.loads(text)
    assert [d["id"] for d in data] == ["eq11", "eq12"]


def test_verify_failure_exit_code():
    code, text = run("verify", "--id", "eq13", "--order", "10", "--jobs", "1")
    assert code == 1 and "FAIL" in text


def test_adjudication_group_passes_when_one_reading_does():
    code, text = run("verify", "--id", "conj51_reading_display", "--id", "conj51_reading_remark", "--jobs", "1")
    assert code == 0
    assert "conj51_b_term: verified by conj51_reading_remark" in text


def test_usage_errors(capsys):
    assert run("verify", "--suite", "nosuch")[0] == 2
    assert run("verify", "--order", "0")[0] == 2
    assert run("verify", "--order", "500")[0] == 2
    assert run("verify", "--bogus")[0] == 2
    assert run("partitions", "stats", "--n", "4", "--stat", "bogus")[0] == 2
    assert run("series", "nosuch")[0] == 2
    err = capsys.readouterr().err
    assert "nosuch" in err


def test_list_catalogue_is_stable():
    code, a = run("list")
    assert code == 0 and run("list")[1] == a
    assert "eq14 [unproven]" in a
    assert "conj41 [unproven]" in a
    block = a.split("conj41 [unproven]\n")[1].splitlines()[0]
    assert block.strip().startswith("anchor: master_5 =")


def test_verify_list_flag_and_json_catalogue():
    code, text = run("verify", "--suite", "mod7", "--list")
    assert code == 0 and "eq30 [unproven]" in text
    code, text = run("list", "--format", "json")
    ids = [d["id"] for d in json.loads(text)]
    assert ids[0] == "ramanujan_5"


def test_series_command():
    code, text = run("series", "G", "--order", "6", "--format", "json")
    assert code == 0
    assert json.loads(text)["coefficients"] == ["1", "1", "1", "1", "2", "2", "3"]
    code, text = run("series", "master5", "--order", "5")
    assert code == 0 and text.endswith("O(q^6)\n")
