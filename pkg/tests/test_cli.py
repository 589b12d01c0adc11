import json
import subprocess
import sys

import pytest

from degseq_exclusion.cli import build_parser, main
from degseq_exclusion.io import from_graph6


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_check(capsys):
    assert run(capsys, "check", "2,2,2,2")[:2] == (0, "graphical\n")
    assert run(capsys, "check", "3,3,1,1")[:2] == (0, "not graphical\n")


def test_bad_sequence_is_usage_error(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["check", "2,-1"])
    assert exc.value.code == 2


def test_non_graphical_input_is_usage_error(capsys):
    code, _, err = run(capsys, "realize", "3,3,1,1")
    assert code == 2 and "not graphical" in err


def test_realize_round_trip(capsys):
    code, out, _ = run(capsys, "realize", "3,3,2,2,1,1")
    assert code == 0
    assert from_graph6(out.strip()).degree_sequence() == (3, 3, 2, 2, 1, 1)


def test_realizations(capsys):
    code, out, _ = run(capsys, "realizations", "2,2,2,2,2,2")
    assert code == 0 and out.splitlines()[-1] == "2 realizations"
    code, out, _ = run(capsys, "realizations", "--json", "2,2,2,2,2,2")
    assert json.loads(out)["count"] == 2


def test_precedes(capsys):
    code, out, _ = run(capsys, "precedes", "2,2,2,2", "2,2,2,2,2")
    assert (code, out) == (0, "false\n")
    code, out, _ = run(capsys, "precedes", "--json", "2,2,2,2", "2,2,2,2,2,2,2")
    rec = json.loads(out)
    assert rec["precedes"] is True and len(rec["witness"]["embedding"]) == 4


def test_classify(capsys):
    code, out, _ = run(capsys, "classify", "--exclude", "C4", "2,2,2,2,2")
    assert code == 0
    assert "excludes=true" in out and "class SPLIT∘C5" in out
    code, out, _ = run(capsys, "classify", "--json", "--exclude", "M2", "3,3,3,3,3,3")
    assert "SplitComposeK33" in json.loads(out)["classes"]
    code, _, err = run(capsys, "classify", "--exclude", "K5", "2,2,2")
    assert code == 2 and "unknown" in err


def test_compose(capsys):
    # S = K2 as graph6 "A_", A = {0}
    code, out, _ = run(capsys, "compose", "--split", "A_", "--a", "0", "--cycle", "6")
    assert code == 0 and out.splitlines()[1] == "7,3,3,3,3,3,3,1"
    code, out, _ = run(capsys, "compose", "--json", "--split", "@", "--a", "0", "--h", "C5")
    assert json.loads(out)["sequence"] == [5, 3, 3, 3, 3, 3]
    code, _, err = run(capsys, "compose", "--split", "A_", "--cycle", "5")  # B = K2 is not independent
    assert code == 2 and "independent" in err


def test_verify_ok(capsys):
    code, out, _ = run(capsys, "verify", "--claim", "thm-n:4", "--max-vertices", "7", "--threads", "1")
    assert code == 0 and out.splitlines()[-1] == "0 counterexamples"


def test_verify_mutant_exits_one(capsys):
    code, out, _ = run(capsys, "verify", "--json", "--claim", "prop1", "--max-vertices", "5",
                       "--mutant", "broken-split-test", "--threads", "1")
    assert code == 1
    rec = json.loads(out)
    assert rec["counterexamples"] and "graph6" in rec["counterexamples"][0]


def test_verify_with_external_graphs(capsys, tmp_path):
    path = tmp_path / "u.g6"
    assert run(capsys, "universe", "--max-vertices", "5", "--out", str(path))[0] == 0
    code, out, _ = run(capsys, "verify", "--claim", "universe", "--max-vertices", "5", "--graphs", str(path))
    assert code == 0


def test_poset(capsys, tmp_path):
    dot, csv = tmp_path / "p.dot", tmp_path / "p.csv"
    code, out, _ = run(capsys, "poset", "--max-vertices", "3", "--dot", str(dot), "--csv", str(csv))
    assert code == 0 and out.strip() == "8 sequences, 9 cover relations"
    assert dot.read_text().startswith("digraph")
    assert len(csv.read_text().splitlines()) == 10
    assert run(capsys, "poset", "--max-vertices", "8")[0] == 2


@pytest.mark.parametrize("command", ["check", "realize", "realizations", "precedes", "classify", "compose",
                                     "verify", "poset", "universe"])
def test_every_subcommand_has_help(command, capsys):
    with pytest.raises(SystemExit) as exc:
        build_parser().parse_args([command, "--help"])
    assert exc.value.code == 0


def test_unknown_flag_rejected():
    with pytest.raises(SystemExit) as exc:
        main(["check", "--bogus", "2,2"])
    assert exc.value.code == 2


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "degseq_exclusion", "check", "1,1"], capture_output=True, text=True)
    assert proc.returncode == 0 and proc.stdout == "graphical\n"
