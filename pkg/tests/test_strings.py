import math

import pytest
from hypothesis import given
from hypothesis import strategies as st

from cvdj.errors import DomainError
from cvdj.strings import OracleString, StringClass, canonical, classify, enumerate_balanced


def test_parse_and_str_round_trip():
    z = OracleString.parse("00111100")
    assert str(z) == "00111100"
    assert z.N == 8


@pytest.mark.parametrize("text", ["0120", "ab", ""])
def test_parse_rejects_bad_input(text):
    with pytest.raises(DomainError):
        OracleString.parse(text)


def test_odd_length_rejected():
    with pytest.raises(DomainError):
        OracleString((0, 1, 1))


@pytest.mark.parametrize("text,cls", [
    ("00000000", StringClass.CONSTANT),
    ("11111111", StringClass.CONSTANT),
    ("00001111", StringClass.ANTISYM_BALANCED),
    ("11110000", StringClass.ANTISYM_BALANCED),
    ("00111100", StringClass.SYM_BALANCED),
    ("11000011", StringClass.SYM_BALANCED),
    ("01010101", StringClass.OTHER_BALANCED),
    ("00011110", StringClass.OTHER_BALANCED),
    ("00000001", StringClass.UNBALANCED),
    ("0110", StringClass.SYM_BALANCED),
    ("001110", StringClass.OTHER_BALANCED),
])
def test_classify(text, cls):
    assert classify(OracleString.parse(text)) is cls


def test_canonical_pairs():
    assert [str(z) for z in canonical(StringClass.CONSTANT, 8)] == ["00000000", "11111111"]
    assert [str(z) for z in canonical(StringClass.ANTISYM_BALANCED, 8)] == ["00001111", "11110000"]
    assert [str(z) for z in canonical(StringClass.SYM_BALANCED, 8)] == ["00111100", "11000011"]
    with pytest.raises(DomainError):
        canonical(StringClass.SYM_BALANCED, 6)
    with pytest.raises(DomainError):
        canonical(StringClass.OTHER_BALANCED, 8)


@pytest.mark.parametrize("N", [2, 4, 6, 8, 10, 12])
def test_enumerate_balanced_count_and_order(N):
    strings = enumerate_balanced(N)
    assert len(strings) == math.comb(N, N // 2)
    assert [z.bits for z in strings] == sorted(z.bits for z in strings)
    assert all(z.is_balanced() for z in strings)


def test_enumerate_balanced_n8_class_census():
    classes = [classify(z) for z in enumerate_balanced(8)]
    assert len(classes) == 70
    assert classes.count(StringClass.ANTISYM_BALANCED) == 2
    assert classes.count(StringClass.SYM_BALANCED) == 2
    assert classes.count(StringClass.OTHER_BALANCED) == 66


def test_enumerate_balanced_limits():
    with pytest.raises(DomainError):
        enumerate_balanced(18)
    with pytest.raises(DomainError):
        enumerate_balanced(5)


@given(st.lists(st.integers(0, 1), min_size=1, max_size=8).map(lambda b: tuple(b + b[::-1])))
def test_class_invariant_under_complement(bits):
    z = OracleString(bits)
    assert classify(z) is classify(z.complement())
    assert z.complement().complement() == z
