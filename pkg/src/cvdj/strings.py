"""N-bit oracle strings and their classification."""

import enum
import itertools
import math
from dataclasses import dataclass

import numpy as np

from .errors import DomainError

MAX_ENUMERATE_N = 16


class StringClass(enum.Enum):
    CONSTANT = "Constant"
    ANTISYM_BALANCED = "AntisymBalanced"
    SYM_BALANCED = "SymBalanced"
    OTHER_BALANCED = "OtherBalanced"
    UNBALANCED = "Unbalanced"

    @property
    def short(self):
        return _SHORT[self]


_SHORT = {
    StringClass.CONSTANT: "C",
    StringClass.ANTISYM_BALANCED: "AB",
    StringClass.SYM_BALANCED: "SB",
    StringClass.OTHER_BALANCED: "other",
    StringClass.UNBALANCED: "unbalanced",
}


@dataclass(frozen=True)
class OracleString:
    """An N-bit string; bit ``i`` is encoded on the ``i``-th momentum bin from the left."""

    bits: tuple

    def __post_init__(self):
        bits = tuple(int(b) for b in self.bits)
        if any(b not in (0, 1) for b in bits):
            raise DomainError(f"bits must be 0 or 1, got {self.bits!r}")
        if len(bits) == 0 or len(bits) % 2:
            raise DomainError(f"string length must be positive and even, got {len(bits)}")
        object.__setattr__(self, "bits", bits)

    @classmethod
    def parse(cls, text):
        text = text.strip()
        bad = set(text) - {"0", "1"}
        if bad:
            raise DomainError(f"invalid characters {sorted(bad)} in oracle string {text!r}")
        return cls(tuple(int(c) for c in text))

    @property
    def N(self):
        return len(self.bits)

    @property
    def signs(self):
        """``(-1)**z_i`` as a float array."""
        return 1.0 - 2.0 * np.array(self.bits, dtype=float)

    def complement(self):
        return OracleString(tuple(1 - b for b in self.bits))

    def transitions(self):
        return sum(a != b for a, b in zip(self.bits, self.bits[1:]))

    def is_balanced(self):
        return 2 * sum(self.bits) == self.N

    def __str__(self):
        return "".join(map(str, self.bits))


def _sb_pair(N):
    q = N // 4
    first = (0,) * q + (1,) * (N // 2) + (0,) * q
    return OracleString(first), OracleString(first).complement()


def classify(z):
    if z.transitions() == 0:
        return StringClass.CONSTANT
    if not z.is_balanced():
        return StringClass.UNBALANCED
    if z.transitions() == 1:
        return StringClass.ANTISYM_BALANCED
    if z.N % 4 == 0 and z in _sb_pair(z.N):
        return StringClass.SYM_BALANCED
    return StringClass.OTHER_BALANCED


def canonical(cls, N):
    """The canonical pair (string, complement) for a class."""
    if N <= 0 or N % 2:
        raise DomainError(f"N must be positive and even, got {N}")
    if cls is StringClass.CONSTANT:
        first = OracleString((0,) * N)
    elif cls is StringClass.ANTISYM_BALANCED:
        first = OracleString((0,) * (N // 2) + (1,) * (N // 2))
    elif cls is StringClass.SYM_BALANCED:
        if N % 4:
            raise DomainError(f"symmetric balanced strings need N divisible by 4, got {N}")
        first = _sb_pair(N)[0]
    else:
        raise DomainError(f"no canonical pair for class {cls.value}")
    return first, first.complement()


def enumerate_balanced(N):
    """All balanced N-bit strings in lexicographic order."""
    if N <= 0 or N % 2 or N > MAX_ENUMERATE_N:
        raise DomainError(f"enumerate_balanced needs even 0 < N <= {MAX_ENUMERATE_N}, got {N}")
    out = []
    for ones in itertools.combinations(range(N), N // 2):
        bits = [0] * N
        for i in ones:
            bits[i] = 1
        out.append(OracleString(tuple(bits)))
    out.sort(key=lambda z: z.bits)
    assert len(out) == math.comb(N, N // 2)
    return out
