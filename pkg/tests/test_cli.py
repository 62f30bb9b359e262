import json

from quatlat.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr().out
    return code, out


def test_construct_q3(capsys, tmp_path):
    code, out = run(capsys, "construct", "--p", "3", "--c", "-1", "--tau", "-1")
    assert code == 0
    data = json.loads(out)
    assert data["kind"] == "parametric"
    assert data["k_tau"] == 2
    assert len(data["squares"]) == 4
    assert len(data["table"]) == 16
    assert data["params"]["field"] == {"p": 3, "e": 1, "modulus": [0, 1]}


def test_construct_deterministic(capsys):
    _, out1 = run(capsys, "construct", "--p", "5", "--c", "2", "--tau", "3")
    _, out2 = run(capsys, "construct", "--p", "5", "--c", "2", "--tau", "3")
    assert out1 == out2
    assert out1.endswith("\n")


def test_construct_rejects_square_c(capsys):
    code, _ = run(capsys, "construct", "--p", "3", "--c", "1", "--tau", "-1")
    assert code == 2


def test_verify_suites(capsys):
    assert run(capsys, "verify", "--lattice", "gamma3", "--suite", "matrix")[0] == 0
    assert run(capsys, "verify", "--lattice", "gamma3", "--suite", "orbits")[0] == 0
    assert run(capsys, "verify", "--lattice", "q3", "--suite", "oracle")[0] == 0
    assert run(capsys, "verify", "--lattice", "q3", "--suite", "dict")[0] == 0
    assert run(capsys, "verify", "--lattice", "gamma4", "--suite", "endo")[0] == 0
    code, out = run(capsys, "verify", "--lattice", "q5", "--suite", "all")
    assert code == 0
    data = json.loads(out)
    assert data["ok"] and data["suites"]["oracle"]["ok"]


def test_verify_inapplicable_suite(capsys):
    code, _ = run(capsys, "verify", "--lattice", "gamma32", "--suite", "oracle")
    assert code == 2


def test_verify_param_lattice(capsys):
    code, out = run(capsys, "verify", "--lattice", "p=7,e=1,c=3,tau=2", "--suite", "oracle")
    assert code == 0
    assert json.loads(out)["ok"]


def test_verify_from_file(capsys, tmp_path):
    path = tmp_path / "lat.json"
    code, _ = run(
        capsys, "construct", "--p", "3", "--c", "-1", "--tau", "-1", "--out", str(path)
    )
    assert code == 0
    code, out = run(capsys, "verify", "--lattice", str(path), "--suite", "oracle")
    assert code == 0


def test_parikh_command(capsys):
    code, out = run(
        capsys,
        "parikh",
        "--lattice",
        "gamma3",
        "--words",
        "a;x;b^-1;x",
        "--bound",
        "10",
    )
    assert code == 0
    data = json.loads(out)
    assert data["points"] == [[0, 0, 0, 0], [1, 1, 1, 1], [9, 9, 9, 9]]


def test_parikh_signed_remap(capsys):
    code, out = run(
        capsys,
        "parikh",
        "--lattice",
        "gamma3",
        "--words",
        "a;x;b;x",
        "--bound",
        "4",
        "--signed",
        "--remap",
        "0,+;1,+;3,+;2,-",
    )
    assert code == 0
    points = [tuple(p) for p in json.loads(out)["points"]]
    assert (3, -3, -3, 3) in points and (1, 1, 1, 1) in points


def test_compare_registry(capsys):
    code, out = run(
        capsys, "compare", "--lattice", "gamma3", "--words", "a;x;b^-1;x", "--bound", "12"
    )
    assert code == 0
    assert json.loads(out)["ok"]


def test_compare_all_registered_defaults(capsys):
    for key in (
        "gamma4/b;x;a;x^-1",
        "gamma32/b;x;a^-1;y^-1",
        "q5/A0;B2;A0^-1;B2^-1",
    ):
        lattice, words = key.split("/", 1)
        code, out = run(capsys, "compare", "--lattice", lattice, "--words", words)
        assert code == 0, key
        assert json.loads(out)["ok"], key


def test_compare_mismatch_exits_nonzero(capsys):
    code, out = run(
        capsys,
        "compare",
        "--lattice",
        "gamma3",
        "--words",
        "a;x;b^-1;x",
        "--bound",
        "10",
        "--expected",
        "power-diagonal:m=5,d=4",
    )
    assert code == 1
    data = json.loads(out)
    assert not data["ok"] and data["missing"]


def test_compare_power_diagonal_auto(capsys):
    code, out = run(
        capsys,
        "compare",
        "--lattice",
        "q5",
        "--words",
        "A0;B0;A3;B1",
        "--bound",
        "8",
        "--expected",
        "power-diagonal",
    )
    # words must be a defining square with non-commuting corners; find one
    if code != 0:
        pres_words = None
        from quatlat.presets import get_presentation

        pres = get_presentation("q5")
        sq = [s for s in pres.squares if not s.commuting][0]
        pres_words = ";".join(
            [
                sq.a.token(),
                sq.b.token(),
                pres.inverse[sq.a2].token(),
                pres.inverse[sq.b2].token(),
            ]
        )
        code, out = run(
            capsys,
            "compare",
            "--lattice",
            "q5",
            "--words",
            pres_words,
            "--bound",
            "8",
            "--expected",
            "power-diagonal",
        )
    assert code == 0
    assert json.loads(out)["ok"]


def test_growth_command(capsys):
    code, out = run(capsys, "growth", "--set", "power-diagonal:m=9,d=4", "--n", "100")
    assert code == 0
    assert json.loads(out)["growth"] == 4


def test_growth_registry(capsys):
    code, out = run(
        capsys,
        "growth",
        "--set",
        "registry",
        "--lattice",
        "gamma4",
        "--words",
        "a;x;b^-1;y^-1",
        "--n",
        "15",
    )
    assert code == 0
    # {0} plus (1+3n, 1, 1+3n, 1) for 1+3n <= 15
    assert json.loads(out)["growth"] == 6


def test_bad_lattice_argument(capsys):
    code, _ = run(capsys, "verify", "--lattice", "nope", "--suite", "oracle")
    assert code == 2


def test_jobs_flag(capsys):
    code, out = run(
        capsys,
        "parikh",
        "--lattice",
        "gamma3",
        "--words",
        "a;x;b^-1;x",
        "--bound",
        "6",
        "--jobs",
        "2",
    )
    assert code == 0
    assert json.loads(out)["points"] == [[0, 0, 0, 0], [1, 1, 1, 1]]


def test_construct_with_q(capsys):
    # q = 9: coefficient-vector inputs; 1+x is the first non-square
    code, out = run(capsys, "construct", "--q", "9", "--c", "1,1", "--tau", "0,1")
    assert code == 0
    data = json.loads(out)
    assert data["params"]["field"]["p"] == 3
    assert data["params"]["field"]["e"] == 2
    assert len(data["table"]) == 100
    code, _ = run(capsys, "construct", "--q", "6", "--c", "2", "--tau", "3")
    assert code == 2
