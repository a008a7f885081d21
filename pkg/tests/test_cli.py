import io
import json
import subprocess
import sys

import pytest

from extspringer import cli
from extspringer import poincare as pc
from extspringer import verify
from extspringer.inversions import PairSet, springer_inversions
from extspringer.partitions import Partition
from extspringer.tableaux import RowStrictTableau, as_tableau
from extspringer.toric import ToricFrame

SIGMA = "3,4,5,6/1,2,9,10/7,8/11,12"


def call(*argv):
    out, err = io.StringIO(), io.StringIO()
    code = cli.run(list(argv), out, err)
    return code, out.getvalue(), err.getvalue()


def call_json(*argv):
    code, out, err = call(*argv, "--format", "json")
    assert code == 0, err
    return json.loads(out)


def test_isotypic_json():
    obj = call_json("poincare", "isotypic", "6,6", "--char", "4")
    assert obj["shift"] == 4
    assert pc.IntPolynomial.from_json(obj["poly"]) == pc.springer_poincare(Partition([2, 2]))
    assert pc.IntPolynomial.from_json(obj["expanded"]) == pc.isotypic_poincare(Partition([6, 6]), 4)


def test_tableau_info_json():
    obj = call_json("tableau", "info", SIGMA)
    assert obj["I"] == [8] and obj["J"] == [1, 3, 4, 5, 7, 9, 11] and obj["K"] == [2, 6, 10]
    assert obj["max_divisor"] == 2 and obj["inversion_count"] == 13
    assert RowStrictTableau.from_json(obj["tableau"]) == as_tableau(SIGMA)
    assert PairSet.from_json(obj["inversions"]) == springer_inversions(as_tableau(SIGMA))
    assert ToricFrame.from_json(obj["frame"]).I == {8}


def test_tableau_info_table():
    code, out, _ = call("tableau", "info", SIGMA)
    assert code == 0
    assert "I         [8]" in out and "|sigma|   13" in out


def test_quotient_round_trip():
    obj = call_json("tableau", "quotient", SIGMA, "2")
    assert RowStrictTableau.from_json(obj).rows == ((2, 3), (1, 5), (4,), (6,))
    code, _, err = call("tableau", "quotient", SIGMA, "3")
    assert code == 2 and err.count("\n") == 1


@pytest.mark.parametrize("kind", ["springer", "extended"])
def test_poly_round_trip(kind):
    obj = call_json("poincare", kind, "4,2")
    expected = pc.springer_poincare if kind == "springer" else pc.extended_poincare
    assert pc.IntPolynomial.from_json(obj["poly"]) == expected(Partition([4, 2]))


def test_equivariant_round_trip():
    obj = call_json("poincare", "equivariant", "6,6")
    assert pc.EquivariantPolynomial.from_json(obj) == pc.equivariant_poincare(Partition([6, 6]))


def test_lusztig():
    obj = call_json("poincare", "lusztig", "4,4,2,2", "--char", "6")
    assert obj["shift"] == 139
    assert obj["smaller_group"] == {"shift": 109, "base_partition": [2, 2, 1, 1]}
    obj = call_json("poincare", "lusztig", "4,4,2,2", "--char", "3")
    assert obj["poly"] == {"coeffs": []}


def test_csv_betti_table():
    code, out, _ = call("poincare", "extended", "6,6", "--format", "csv")
    assert code == 0
    lines = out.splitlines()
    assert lines[0] == "degree,coefficient" and lines[1:3] == ["0,1", "1,11"]


def test_latex():
    code, out, _ = call("poincare", "springer", "2,2", "--format", "latex")
    assert code == 0 and out.strip() == pc.springer_poincare(Partition([2, 2])).to_latex()


def test_rst_list_and_cells():
    obj = call_json("rst", "list", "2,1")
    assert [RowStrictTableau.from_json(x).to_text() for x in obj["tableaux"]] == ["1,2/3", "1,3/2", "2,3/1"]
    obj = call_json("cells", "2,2")
    assert len(obj["cells"]) == 8


def test_toric_subcommands():
    assert call_json("toric", "dstar", "--n", "4", "--J", "1,3", "--K", "2")["d_star"] == 2
    assert call_json("toric", "characters", "--n", "4", "--J", "1,3", "--K", "2")["characters"] == [0, 2]
    assert call_json("toric", "phi", "--n", "4", "--J", "1,3", "--c", "1,2")["r"] == 1
    obj = call_json("toric", "invariants", "--n", "6", "--J", "4", "--K", "2", "--b", "1,2,3,1,5", "--c", "0")
    assert obj["H_J_invariant"] and not obj["H_invariant"]
    assert obj["decomposition"]["m"] == {"4": 3} and obj["decomposition"]["scalar_exponent"] == 0


@pytest.mark.parametrize("argv,token", [
    (["poincare", "springer", "2,x"], "'x'"),
    (["tableau", "info", "1,2/q"], "'q'"),
    (["toric", "phi", "--n", "4", "--J", "1,z"], "'z'"),
])
def test_malformed_token_exit_2(argv, token):
    code, out, err = call(*argv)
    assert code == 2 and out == ""
    assert err.count("\n") == 1 and token in err


def test_usage_errors():
    assert call("poincare", "isotypic", "6,6")[0] == 2
    assert call("poincare", "isotypic", "6,6", "--char", "12")[0] == 2
    assert call("nonsense")[0] == 2
    assert call()[0] == 2
    assert call("toric", "dstar")[0] == 2


def test_verify_exit_codes(monkeypatch):
    code, out, _ = call("verify", "all", "--n-max", "1")
    assert code == 0 and out.count("PASS") == 8
    bad = verify.VerificationReport("x", "n<=1", False, {"lam": [1]}, 0.0, 1)
    monkeypatch.setattr(verify, "run_all", lambda n: [bad])
    code, out, _ = call("verify", "all", "--n-max", "1", "--format", "json")
    assert code == 1 and json.loads(out)["reports"][0]["counterexample"] == {"lam": [1]}


def test_env_default_format_and_out(tmp_path, monkeypatch):
    monkeypatch.setenv(cli.FORMAT_ENV, "json")
    code, out, _ = call("poincare", "springer", "2,1")
    assert json.loads(out)["poly"] == {"coeffs": [1, 2]}
    target = tmp_path / "p.csv"
    code, out, _ = call("poincare", "springer", "2,1", "--format", "csv", "--out", str(target))
    assert code == 0 and out == ""
    assert target.read_text() == "degree,coefficient\n0,1\n1,2\n"
    monkeypatch.setenv(cli.FORMAT_ENV, "yaml")
    assert call("poincare", "springer", "2,1")[0] == 2


def test_deterministic_output():
    runs = {call("poincare", "equivariant", "4,2", "--format", fmt)[1] for fmt in ["json"] * 3}
    assert len(runs) == 1
    assert call("tableau", "info", SIGMA)[1] == call("tableau", "info", SIGMA)[1]


def test_seed_docs():
    code, out, _ = call("--seed-docs")
    docs = json.loads(out)
    assert code == 0 and "poincare isotypic" in docs and "verify all" in docs


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "extspringer", "poincare", "springer", "2,2"],
                          capture_output=True, text=True)
    assert proc.returncode == 0 and proc.stdout == "P_Sp(2,2) = 1 + 3t + 2t^2\n"
