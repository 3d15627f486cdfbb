from __future__ import annotations

import json

import pytest
from hypothesis import given, strategies as st

from charhopf.partitions import partitions_of
from charhopf.symfunc import SymFunc, s
from charhopf.tensor import DUAL, PRIMAL, TensorSF
from charhopf.textio import (
    ParseError,
    dumps,
    format_symfunc,
    format_tensor,
    parse_partition,
    parse_symfunc,
    symfunc_from_json,
    symfunc_to_json,
    tensor_from_json,
    tensor_to_json,
)

partitions = st.integers(0, 5).flatmap(lambda n: st.sampled_from(partitions_of(n)))
symfuncs = st.lists(st.tuples(partitions, st.integers(-10**30, 10**30)), max_size=6).map(SymFunc)


def test_format():
    assert format_symfunc(3 * s(2, 1) - s(1, 1, 1)) == "3*s[2,1] - s[1,1,1]"
    assert format_symfunc(SymFunc.zero()) == "0"
    assert format_symfunc(-s()) == "-s[]"
    t = TensorSF.basis((1,), (2,), orientation=(PRIMAL, DUAL))
    assert format_tensor(t) == "s[1]⊗s[2]*"


@pytest.mark.parametrize("text", ["[2,1]", "2,1", "2 1", " [ 2 , 1 ] "])
def test_parse_partition_forms(text):
    assert parse_partition(text) == (2, 1)


def test_parse_partition_errors():
    assert parse_partition("[]") == ()
    for bad in ("[1,2]", "[a]", "[2,-1]"):
        with pytest.raises(ParseError):
            parse_partition(bad)


def test_parse_symfunc():
    assert parse_symfunc("s[2,1] + 2*s[1] - s[]") == s(2, 1) + 2 * s(1) - s()
    assert parse_symfunc("-s[1]") == -s(1)
    assert parse_symfunc("[2]") == s(2)
    assert parse_symfunc("0") == SymFunc.zero()
    assert parse_symfunc("s[1] - s[1]") == SymFunc.zero()


@pytest.mark.parametrize("bad", ["", "s[1] +", "2", "s[1] s[2]", "x[1]", "2*3", "s[1,2]", "s[1"])
def test_parse_symfunc_errors(bad):
    with pytest.raises(ParseError):
        parse_symfunc(bad)


@given(symfuncs)
def test_text_round_trip(f):
    assert parse_symfunc(format_symfunc(f)) == f


@given(symfuncs)
def test_json_round_trip(f):
    assert symfunc_from_json(json.loads(dumps(symfunc_to_json(f)))) == f


def test_json_schema():
    obj = symfunc_to_json(3 * s(2, 1) + s())
    assert obj == {"terms": [{"partition": [], "coeff": "1"}, {"partition": [2, 1], "coeff": "3"}]}
    t = TensorSF(2, {((1,), ()): -2}, (DUAL, PRIMAL))
    assert tensor_from_json(json.loads(dumps(tensor_to_json(t)))) == t
