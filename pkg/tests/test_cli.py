from __future__ import annotations

import io
import json
import subprocess
import sys

import pytest

from charhopf.cli import run
from charhopf.symfunc import s
from charhopf.textio import symfunc_from_json


def call(*argv):
    out, err = io.StringIO(), io.StringIO()
    code = run(list(argv), out, err)
    return code, out.getvalue(), err.getvalue()


def test_sf_commands():
    assert call("sf", "mult", "--lhs", "s[1]", "--rhs", "s[1]")[:2] == (0, "s[2] + s[1,1]\n")
    assert call("sf", "skew", "--lhs", "s[2,1]", "--rhs", "s[1]")[1] == "s[2] + s[1,1]\n"
    assert call("sf", "antipode", "--expr", "s[2]")[1] == "s[1,1]\n"
    assert call("sf", "scalar", "--lhs", "2*s[2] + s[1]", "--rhs", "s[2]")[1] == "2\n"
    assert call("sf", "plethysm", "--lhs", "s[2]", "--rhs", "s[2]")[1] == "s[4] + s[2,2]\n"
    code, out, _ = call("sf", "coprod", "--expr", "s[1]")
    assert out == "s[]⊗s[1] + s[1]⊗s[]\n"


def test_json_round_trip():
    code, out, _ = call("sf", "mult", "--lhs", "s[2]", "--rhs", "s[1]", "--json")
    assert code == 0
    assert symfunc_from_json(json.loads(out)) == s(3) + s(2, 1)


def test_series_and_pi():
    assert call("series", "show", "--pi", "2", "--degree", "4")[1] == "M_[2] = s[] + s[2] + s[4] + s[2,2]\n"
    assert call("series", "show", "--pi", "[1,1]", "--kind", "L", "--degree", "2")[1] == "L_[1,1] = s[] - s[1,1]\n"
    assert call("pi", "product", "--pi", "3", "--lhs", "[2]", "--rhs", "[2]")[1] == "2*s[1] + s[4] + s[3,1] + s[2,2]\n"
    assert call("pi", "rker", "--pi", "2", "--degree", "1")[1] == "s[]⊗s[] + s[1]⊗s[1]\n"
    assert call("pi", "rker", "--pi", "2", "--degree", "1", "--inverse")[1] == "s[]⊗s[] - s[1]⊗s[1]\n"
    assert call("pi", "qpi", "--pi", "2", "--degree", "2")[1] == "s[] + s[2] + s[1,1]\n"
    assert call("pi", "qpi", "--pi", "2", "--degree", "2", "--inverse")[1] == "s[] - s[2] - s[1,1]\n"


def test_checks_pass():
    code, out, _ = call("check", "hopf", "--weight", "4")
    assert code == 0 and out.startswith("OK (") and "identities verified" in out
    assert call("check", "yang-baxter", "--pi", "3", "--degree", "3")[0] == 0
    assert call("check", "cocycle", "--pi", "2", "--weight", "2")[0] == 0
    assert call("check", "writhe", "--count", "50", "--seed", "1")[0] == 0
    assert call("check", "coquasitriangular", "--pi", "2", "--degree", "4")[0] == 0


def test_check_failure_exits_one_with_counterexample():
    code, out, _ = call("check", "coquasitriangular", "--pi", "3", "--degree", "4")
    assert code == 1
    assert "counterexample" in out
    code, out, _ = call("check", "coquasitriangular", "--pi", "3", "--degree", "4", "--json")
    obj = json.loads(out)
    assert code == 1 and not obj["passed"] and obj["counterexamples"]


def test_knot_invariant():
    code, out, _ = call("knot", "invariant", "--pi", "2", "--braid", "1 1 1", "--degree", "2")
    assert code == 0
    assert out == "Q^3 = s[] + 3*s[2] + 3*s[1,1]\nw=3\n"
    code, out, _ = call("knot", "invariant", "--pi", "2", "--braid", "1 1 1", "--degree", "3", "--direct")
    assert code == 0 and "agree: yes" in out
    code, out, _ = call("knot", "invariant", "--pi", "2", "--braid", "1 1", "--degree", "1")
    assert "w_12=1" in out and "s[]⊗s[] + s[1]⊗s[1]" in out


def test_knot_json_and_stats():
    code, out, _ = call("knot", "invariant", "--pi", "2", "--braid", "1 1 1", "--degree", "2", "--json", "--direct")
    obj = json.loads(out)
    assert obj["writhe"] == 3 and obj["agree"] is True
    assert symfunc_from_json(obj["invariant"]) == s() + 3 * s(2) + 3 * s(1, 1)
    code, out, _ = call("knot", "stats", "--braid", "8_1")
    assert "kappa=[4, 5, 1, 2, 3]" in out and "w_1=10" in out
    code, out, _ = call("knot", "stats", "--braid", "1", "--strands", "3", "--json")
    assert json.loads(out)["components"] == [[1, 2], [3]]


def test_direct_rejects_links():
    code, _, err = call("knot", "invariant", "--pi", "2", "--braid", "1 1", "--degree", "2", "--direct")
    assert code == 2 and "knots only" in err


@pytest.mark.parametrize(
    "argv",
    [
        ["sf", "mult", "--lhs", "s[1", "--rhs", "s[1]"],
        ["sf", "bogus"],
        ["pi", "qpi", "--pi", "[]", "--degree", "2"],
        ["pi", "qpi", "--pi", "2", "--degree", "-1"],
        ["knot", "stats", "--braid", "1 x"],
        ["series", "show", "--pi", "2"],
        [],
    ],
)
def test_usage_errors_exit_two(argv):
    code, _, err = call(*argv)
    assert code == 2 and "error" in err


def test_deterministic_output():
    argv = ["pi", "rker", "--pi", "2,1", "--degree", "3", "--json"]
    assert call(*argv)[1] == call(*argv)[1]


def test_console_script():
    proc = subprocess.run(
        [sys.executable, "-m", "charhopf.cli", "sf", "mult", "--lhs", "s[1]", "--rhs", "s[1]"],
        capture_output=True,
        text=True,
    )
    assert proc.returncode == 0 and proc.stdout == "s[2] + s[1,1]\n"
