"""Integer codes for finite sequences of naturals and the tree approximation eta.

The empty sequence has code 0 and ``code(s + (x,)) = pair(code(s), x) + 1``
with the Cantor pairing ``pair(a, b) = (a+b)(a+b+1)/2 + b``.  Since
``pair(a, b) >= a``, every proper prefix of a sequence has a strictly smaller
code.
"""

from __future__ import annotations

from enum import Enum
from functools import lru_cache
from itertools import combinations
from math import isqrt
from typing import Iterable, Iterator

from .machine import Converged, ProgramRef, eval_by

__all__ = [
    "Seq",
    "pair",
    "unpair",
    "encode",
    "decode",
    "is_prefix",
    "is_proper_prefix",
    "comparable",
    "is_immediate_extension",
    "prefixes",
    "pairwise_comparable",
    "seq_str",
    "parse_seq",
    "TriValue",
    "eta_eval",
    "eta_converged_by",
]

Seq = tuple[int, ...]


def pair(a: int, b: int) -> int:
    s = a + b
    return s * (s + 1) // 2 + b


def unpair(z: int) -> tuple[int, int]:
    if z < 0:
        raise ValueError("pair codes are natural numbers")
    w = (isqrt(8 * z + 1) - 1) // 2
    b = z - w * (w + 1) // 2
    return w - b, b


def encode(seq: Iterable[int]) -> int:
    code = 0
    for x in seq:
        if x < 0:
            raise ValueError("sequence entries must be natural numbers")
        code = pair(code, x) + 1
    return code


@lru_cache(maxsize=1 << 16)
def decode(code: int) -> Seq:
    if code < 0:
        raise ValueError("sequence codes are natural numbers")
    entries = []
    while code:
        code, x = unpair(code - 1)
        entries.append(x)
    return tuple(reversed(entries))


def is_prefix(sigma: Seq, tau: Seq) -> bool:
    """True iff ``sigma`` is a (not necessarily proper) initial segment of ``tau``."""
    return len(sigma) <= len(tau) and tuple(tau[: len(sigma)]) == tuple(sigma)


def is_proper_prefix(sigma: Seq, tau: Seq) -> bool:
    return len(sigma) < len(tau) and is_prefix(sigma, tau)


def comparable(sigma: Seq, tau: Seq) -> bool:
    return is_prefix(sigma, tau) or is_prefix(tau, sigma)


def is_immediate_extension(sigma: Seq, tau: Seq) -> bool:
    """``tau = sigma * <m>`` for some m."""
    return len(tau) == len(sigma) + 1 and is_prefix(sigma, tau)


def prefixes(tau: Seq) -> Iterator[Seq]:
    """All initial segments of ``tau``, shortest first, ``tau`` included."""
    for n in range(len(tau) + 1):
        yield tuple(tau[:n])


def pairwise_comparable(seqs: Iterable[Seq]) -> bool:
    return all(comparable(a, b) for a, b in combinations(list(seqs), 2))


def seq_str(seq: Seq) -> str:
    return ".".join(str(x) for x in seq)


def parse_seq(text: str) -> Seq:
    text = text.strip().strip("<>")
    if not text:
        return ()
    return tuple(int(part) for part in text.split("."))


class TriValue(Enum):
    ONE = 1
    ZERO = 0
    PENDING = None

    def __repr__(self) -> str:
        return f"TriValue.{self.name}"


def eta_eval(p: ProgramRef, tau: Seq, budget: int) -> TriValue:
    """Stage approximation of the tree characteristic function of ``p``.

    All sub-evaluations share ``budget``.  ONE when every prefix of ``tau``
    evaluates to 1; ZERO when ``tau`` evaluates to 0, every prefix evaluates
    to 0 or 1 and a 0 at a prefix forces 0 at every longer prefix; PENDING
    otherwise.  A total but inconsistent pattern stays PENDING at every budget.
    """
    return _eta(p, encode(tau), budget)


@lru_cache(maxsize=1 << 18)
def _eta(p: ProgramRef, code: int, budget: int) -> TriValue:
    tau = decode(code)
    values = []
    for sigma in prefixes(tau):
        r = eval_by(p, encode(sigma), budget)
        if not isinstance(r, Converged):
            return TriValue.PENDING
        values.append(r.value)
    if all(v == 1 for v in values):
        return TriValue.ONE
    if values[-1] != 0 or any(v not in (0, 1) for v in values):
        return TriValue.PENDING
    # once a prefix evaluates to 0 every longer prefix must too
    seen_zero = False
    for v in values:
        if seen_zero and v != 0:
            return TriValue.PENDING
        seen_zero = seen_zero or v == 0
    return TriValue.ZERO


def eta_converged_by(p: ProgramRef, tau: Seq, k: int) -> bool:
    return eta_eval(p, tau, k) is not TriValue.PENDING
