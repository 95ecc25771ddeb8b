import json
import os

from samuel.cli import (
    EXIT_COMPUTATION,
    EXIT_FAILURE,
    EXIT_INPUT,
    EXIT_OK,
    _error_status,
    main,
)

REGULAR3 = "vars x y z\nideal Q = x, y, z\n"

CUBIC = """
vars x y
relations y^3
ideal Q = x
ideal M = x, y
expect e = 3,0
expect depth_class = cm
"""

CORPUS = """
instance cubic_line
vars x y
relations y^3
ideal Q = x
expect e = 3,0

instance bad
vars x y
ideal Q = x
"""


def test_hilbert(tmpdir, capsys):
    path = _write(tmpdir, "regular3.ring", REGULAR3)
    assert EXIT_OK == main(["hilbert", path, "--nmax", "6", "--json"])
    obj = json.loads(capsys.readouterr().out)
    assert 1 == obj["schema"]
    assert [0, 1, 4, 10, 20, 35, 56] == obj["table"]

    assert EXIT_OK == main(["hilbert", path, "--nmax", "6", "--workers", "2"])
    out = capsys.readouterr().out
    assert "56" in out


def test_coeffs_and_series(tmpdir, capsys):
    path = _write(tmpdir, "cubic.ring", CUBIC)
    assert EXIT_OK == main(["coeffs", path, "--nmax", "6", "--json"])
    obj = json.loads(capsys.readouterr().out)
    assert ["schema", "ring", "ideal", "d", "table"] == list(obj.keys())[:5]
    assert [3, 0] == obj["e"]
    assert -1 == obj["eta"]
    assert 1 == obj["d"]

    assert EXIT_OK == main(["coeffs", path, "--nmax", "6"])
    assert "e = [3, 0], eta = -1" in capsys.readouterr().out

    args = ["series", path, "--ideal", "M", "--nmax", "8"]
    assert EXIT_OK == main(args)
    out = capsys.readouterr().out
    assert "series = (1+t+t^2)/(1-t)" in out
    assert "e = [3, 3]" in out
    assert EXIT_OK == main(args + ["--json"])
    obj = json.loads(capsys.readouterr().out)
    assert [1, 2, 3, 3] == obj["h"][:4]


def test_gb(tmpdir, capsys):
    path = _write(tmpdir, "cubic.ring", CUBIC)
    assert EXIT_OK == main(["gb", path, "--json"])
    obj = json.loads(capsys.readouterr().out)
    assert ["y^3"] == obj["J"]
    # bases of the lifts, which contain the relations
    assert ["x", "y^3"] == sorted(obj["Q"])
    assert ["x", "y"] == sorted(obj["M"])

    assert EXIT_OK == main(["gb", path, "--ideal", "Q", "--field", "fp:7"])
    out = capsys.readouterr().out
    assert "J: y^3" in out
    assert "M:" not in out


def test_dseq(tmpdir, capsys):
    path = _write(tmpdir, "regular2.ring", "vars x y\nideal Q = x, y\n")
    assert EXIT_OK == main(["dseq", path, "--json", "--nmax", "4"])
    obj = json.loads(capsys.readouterr().out)
    assert obj["regular"]["verdict"]
    assert obj["d_sequence"]["verdict"]
    assert 2 == len(obj["superficial"])


def test_check(tmpdir, capsys):
    path = _write(tmpdir, "cubic.ring", CUBIC)
    assert EXIT_OK == main(["check", path])
    out = capsys.readouterr().out
    assert "VERIFIED  expect e [certified]" in out
    assert "SKIPPED   e_d colon formula" in out

    wrong = _write(tmpdir, "wrong.ring", CUBIC.replace("3,0", "3,1"))
    assert EXIT_FAILURE == main(["check", wrong, "--json"])
    obj = json.loads(capsys.readouterr().out)
    assert "wrong" == obj["name"]
    assert "FAILURE" == obj["theorem"]["claims"][0]["verdict"]

    bad = _write(tmpdir, "bad.ring", "vars x y\nideal Q = x\n")
    assert EXIT_INPUT == main(["check", bad])
    assert "not a parameter ideal" in capsys.readouterr().out


def test_corpus(tmpdir, capsys):
    path = _write(tmpdir, "small.corpus", CORPUS)
    out_path = os.path.join(str(tmpdir), "out", "report.json")
    assert EXIT_INPUT == main(["corpus", path, "--json", "--out", out_path])
    assert "" == capsys.readouterr().out
    with open(out_path) as f:
        obj = json.loads(f.read())
    assert 1 == obj["counts"]["errors"]
    assert 0 == obj["counts"]["FAILURE"]
    assert ["bad", "cubic_line"] == [x["name"] for x in obj["instances"]]

    ok = _write(tmpdir, "ok.corpus", CORPUS.split("instance bad")[0])
    assert EXIT_OK == main(["corpus", ok, "--workers", "2"])
    assert "errors: 0" in capsys.readouterr().out


def test_input_errors(tmpdir, capsys):
    missing = os.path.join(str(tmpdir), "missing.ring")
    assert EXIT_INPUT == main(["hilbert", missing])
    assert "ResourceNotFound" in capsys.readouterr().err

    path = _write(tmpdir, "broken.ring", "vars x y\nrelations x**\n")
    assert EXIT_INPUT == main(["gb", path])
    assert "ParseError" in capsys.readouterr().err

    path = _write(tmpdir, "cubic.ring", CUBIC)
    assert EXIT_INPUT == main(["hilbert", path, "--ideal", "P"])
    assert EXIT_INPUT == main(["hilbert", path, "--nmax", "2"])
    assert EXIT_INPUT == main(["hilbert", path, "--field", "r"])
    assert EXIT_INPUT == main(["hilbert", path, "--nmax", "-1"])
    assert EXIT_INPUT == main(["unknown", path])
    capsys.readouterr()

    # x alone is not m-primary in k[x,y]
    path = _write(tmpdir, "line.ring", "vars x y\nideal Q = x\n")
    assert EXIT_COMPUTATION == main(["hilbert", path, "--nmax", "5"])
    assert "NoStabilizationError" in capsys.readouterr().err


def test_error_status():
    assert EXIT_INPUT == _error_status(["ValueError: Q is not a parameter ideal"])
    assert EXIT_INPUT == _error_status(["NoStabilizationError: x", "ParseError: y"])
    assert EXIT_COMPUTATION == _error_status(["NoStabilizationError: x"])
    assert EXIT_COMPUTATION == _error_status(["SearchExhaustedError: a: b"])


def test_version(capsys):
    assert EXIT_OK == main(["--version"])
    assert capsys.readouterr().out.strip() != ""


def _write(tmpdir, name, content):
    path = os.path.join(str(tmpdir), name)
    with open(path, "w") as f:
        f.write(content)
    return path
