import json
import subprocess
import sys

import pytest

from weylcode.cli import main
from weylcode.cosets import CosetCode, parse_columns
from weylcode.partitions import composition
from weylcode.weyl import parse_word


def run(capsys, *argv):
    status = main(list(argv))
    out, err = capsys.readouterr()
    return status, out, err


@pytest.mark.parametrize("argv, expected", [
    (["decode", "--rank", "2", "--code", "1,1"], "s1 s2 s1"),
    (["wmu", "--mu", "4,3,3"], "s321 s43 s5 | s654321 s7654 s87 | s987654321"),
    (["ho", "--orbit", "3,3,1"], "2,2,0,0,0,-2,-2"),
    (["encode", "--perm", "3 1 2"], "2,1"),
    (["encode", "--word", "s1", "--rank", "2"], "1,3"),
    (["transpose", "--lambda", "3,1,3"], "3,2,2"),
    (["dominance", "--orbit", "4,2,2,1", "--mu", "3,3,3"], "incomparable"),
    (["ulevel", "--orbit", "2,1", "--level", "2"], "1,3"),
    (["act", "--word", "s4 s3 s2", "--root", "a1"], "1,5\ta1+a2+a3+a4"),
])
def test_text_outputs(capsys, argv, expected):
    status, out, _ = run(capsys, *argv)
    assert status == 0
    assert out.strip() == expected


def test_exit_codes(capsys):
    assert run(capsys, "support", "--mu", "3,3", "--lambda", "4,1,1", "--expect", "vanishes")[0] == 0
    status, _, err = run(capsys, "support", "--mu", "3,3", "--lambda", "4,1,1", "--expect", "nonvanishing")
    assert status == 1 and "expected" in err
    assert run(capsys, "decode", "--rank", "2", "--code", "1,x")[0] == 2
    assert run(capsys, "decode", "--rank", "2", "--code", "3,1")[0] == 2
    assert run(capsys, "decode", "--rank", "2")[0] == 2
    assert run(capsys, "decode", "--bogus")[0] == 2
    assert run(capsys, "nosuch")[0] == 2
    assert run(capsys, "verify", "nosuch")[0] == 2
    assert run(capsys, "wmu", "--mu", "1,2")[0] == 2
    assert run(capsys, "verify", "cycle_rewrite", "--max-rank", "4")[0] == 0
    assert run(capsys, "verify", "cycle_rewrite", "--max-rank", "4", "--mutation-seed", "1")[0] == 1


def test_json_is_a_single_document(capsys):
    status, out, _ = run(capsys, "cosets", "--parabolic", "3,2", "--format", "json")
    assert status == 0
    doc = json.loads(out)
    assert len(doc) == 10
    assert all(CosetCode.from_json(d).render() == d["rendered"] for d in doc)


def test_text_and_json_agree(capsys):
    _, text, _ = run(capsys, "decode", "--rank", "3", "--code", "1,2,1")
    _, js, _ = run(capsys, "decode", "--rank", "3", "--code", "1,2,1", "--format", "json")
    assert list(parse_word(text)) == json.loads(js)["word"]

    _, text, _ = run(capsys, "cosets", "--parabolic", "2,2,1")
    _, js, _ = run(capsys, "cosets", "--parabolic", "2,2,1", "--format", "json")
    parsed = [CosetCode(composition("2,2,1"), parse_columns(line.split("\t")[0])) for line in text.splitlines()]
    assert parsed == [CosetCode.from_json(d) for d in json.loads(js)]

    _, text, _ = run(capsys, "rl", "--mu", "4,3,3", "--lambda", "4,3,3")
    _, js, _ = run(capsys, "rl", "--mu", "4,3,3", "--lambda", "4,3,3", "--format", "json")
    from_text = {line.split(":")[0][1:]: [int(x) for x in line.split(": ")[1].split(",") if x]
                 for line in text.splitlines()}
    assert from_text == json.loads(js)

    _, text, _ = run(capsys, "ho", "--orbit", "4,2")
    _, js, _ = run(capsys, "ho", "--orbit", "4,2", "--format", "json")
    assert [int(x) for x in text.strip().split(",")] == json.loads(js)["exponents"]

    _, text, _ = run(capsys, "support", "--mu", "4,3,3", "--lambda", "4,3,3")
    _, js, _ = run(capsys, "support", "--mu", "4,3,3", "--lambda", "4,3,3", "--format", "json")
    doc = json.loads(js)
    assert text.splitlines()[0] == doc["verdict"]
    support = [line.split()[1] for line in text.splitlines() if line.startswith("support")]
    assert support == [str(CosetCode.from_json(c)) for c in doc["support"]]


def test_rl_with_explicit_code(capsys):
    status, out, _ = run(capsys, "rl", "--parabolic", "3,3,3,1", "--code", "1,3,5;1,4,7;1",
                         "--lambda", "4,3,3", "--format", "json")
    assert status == 0 and json.loads(out)["2"] == [3, 6, 9]
    status, _, err = run(capsys, "rl", "--parabolic", "2,2", "--code", "3,4", "--lambda", "4")
    assert status == 1 and "positive" in err


def test_orbit_and_minrep(capsys):
    status, out, _ = run(capsys, "orbit", "--mu", "2,1")
    assert status == 0 and out.strip().endswith("attached orbit: 2,1")
    status, out, _ = run(capsys, "minrep", "--parabolic", "2,1", "--perm", "3 2 1")
    assert status == 0 and out.strip() == "1\ts21"


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "weylcode", "ho", "--orbit", "3,3,1"],
                          capture_output=True, text=True, check=False)
    assert proc.returncode == 0 and proc.stdout.strip() == "2,2,0,0,0,-2,-2"
