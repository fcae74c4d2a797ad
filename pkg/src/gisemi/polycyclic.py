"""The polycyclic monoid P_lambda.

A nonzero element is a pair of index words ``(x, y)`` standing for
``x y^-1``; ``(), ()`` is the identity. Arity ``None`` means countably
many generators (P_omega).
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence, Union

from ._zero import ZERO, Zero

Word = tuple[int, ...]


@dataclass(frozen=True)
class PolyElement:
    x: Word = ()
    y: Word = ()

    def __mul__(self, other):
        return poly_multiply(None, self, other)

    def inverse(self) -> PolyElement:
        return PolyElement(self.y, self.x)

    def __repr__(self):
        return f"PolyElement({list(self.x)}, {list(self.y)})"


PolyValue = Union[PolyElement, Zero]

ONE = PolyElement((), ())


@dataclass(frozen=True)
class Letter:
    index: int
    positive: bool = True

    def __repr__(self):
        return f"p{self.index}" if self.positive else f"p{self.index}^-1"


def gen(i: int) -> PolyElement:
    """``p_i``."""
    return PolyElement((i,), ())


def gen_inv(i: int) -> PolyElement:
    """``p_i^-1``."""
    return PolyElement((), (i,))


def _check_word(arity: int | None, w: Sequence[int]):
    for i in w:
        if i < 0 or (arity is not None and i >= arity):
            raise ValueError(f"generator index {i} out of range for arity {arity}")


def check_element(arity: int | None, z: PolyValue):
    if z is not ZERO:
        _check_word(arity, z.x)
        _check_word(arity, z.y)


def poly_multiply(arity: int | None, lhs: PolyValue, rhs: PolyValue) -> PolyValue:
    if lhs is ZERO or rhs is ZERO:
        return ZERO
    if arity is not None:
        check_element(arity, lhs)
        check_element(arity, rhs)
    x, y = lhs.x, lhs.y
    z, w = rhs.x, rhs.y
    n = len(y)
    if z[:n] == y:
        return PolyElement(x + z[n:], w)
    m = len(z)
    if y[:m] == z:
        return PolyElement(x, w + y[m:])
    return ZERO


def poly_product(arity: int | None, xs: Iterable[PolyValue]) -> PolyValue:
    acc: PolyValue = ONE
    for z in xs:
        acc = poly_multiply(arity, acc, z)
    return acc


# Word reduction

def _find_redex(word: Sequence[Letter], strategy: str) -> int:
    idx = range(len(word) - 1)
    if strategy == "rightmost":
        idx = reversed(idx)
    elif strategy != "leftmost":
        raise ValueError(f"unknown strategy {strategy!r}")
    for i in idx:
        if not word[i].positive and word[i + 1].positive:
            return i
    return -1


def rewrite_steps(word: Sequence[Letter], strategy: str = "leftmost") -> Iterator[tuple[Letter, ...] | Zero]:
    """Yield successive words under ``p_i^-1 p_i -> 1``, ``p_j^-1 p_i -> 0``."""
    cur = list(word)
    while True:
        i = _find_redex(cur, strategy)
        if i < 0:
            return
        if cur[i].index != cur[i + 1].index:
            yield ZERO
            return
        del cur[i:i + 2]
        yield tuple(cur)


def poly_reduce(arity: int | None, word: Sequence[Letter], strategy: str = "leftmost") -> PolyValue:
    """Normal form of a letter word; the empty word gives ``1``."""
    _check_word(arity, [a.index for a in word])
    final: Sequence[Letter] | Zero = tuple(word)
    for final in rewrite_steps(word, strategy):
        pass
    if final is ZERO:
        return ZERO
    pos = [a.index for a in final if a.positive]
    neg = [a.index for a in final if not a.positive]
    # no (negative, positive) pair is left, so the word reads (positives)(negatives)
    assert all(a.positive for a in final[: len(pos)])
    return PolyElement(tuple(pos), tuple(reversed(neg)))


def letters_of(z: PolyElement) -> list[Letter]:
    """The reduced word ``x y^-1`` spelled out in letters."""
    return [Letter(i) for i in z.x] + [Letter(i, False) for i in reversed(z.y)]


def all_letter_words(arity: int, max_len: int) -> Iterator[tuple[Letter, ...]]:
    letters = [Letter(i, s) for i in range(arity) for s in (True, False)]
    layer: list[tuple[Letter, ...]] = [()]
    for _ in range(max_len + 1):
        yield from layer
        layer = [w + (a,) for w in layer for a in letters]


def all_words(arity: int, max_len: int) -> list[Word]:
    out: list[Word] = []
    layer: list[Word] = [()]
    for _ in range(max_len + 1):
        out.extend(layer)
        layer = [w + (i,) for w in layer for i in range(arity)]
    return out


def enumerate_poly(arity: int, max_total: int) -> list[PolyValue]:
    """``0`` and every ``x y^-1`` with ``|x| + |y| <= max_total``."""
    words = all_words(arity, max_total)
    out: list[PolyValue] = [ZERO]
    out.extend(PolyElement(x, y) for x in words for y in words if len(x) + len(y) <= max_total)
    return out


def min_word_length(z: PolyValue) -> float:
    """``min(|x|, |y|)``; zero lies in every neighbourhood, so it gets ``inf``."""
    if z is ZERO:
        return math.inf
    return min(len(z.x), len(z.y))


# P_omega into P_2 through the prefix code q_i = p1^i p0

def prefix_code(i: int) -> Word:
    return (1,) * i + (0,)


def _encode(w: Word) -> Word:
    return tuple(j for i in w for j in prefix_code(i))


def embed_omega_into_p2(z: PolyValue) -> PolyValue:
    if z is ZERO:
        return ZERO
    return PolyElement(_encode(z.x), _encode(z.y))


def decode_p2_word(w: Word) -> Word | None:
    """Inverse of the code on words; None if ``w`` is not a code concatenation."""
    out, run = [], 0
    for j in w:
        if j == 1:
            run += 1
        elif j == 0:
            out.append(run)
            run = 0
        else:
            return None
    return tuple(out) if run == 0 else None


def code_letters(i: int, positive: bool = True) -> list[Letter]:
    """Letters of ``q_i`` or of ``q_i^-1``."""
    z = PolyElement(prefix_code(i), ()) if positive else PolyElement((), prefix_code(i))
    return letters_of(z)
