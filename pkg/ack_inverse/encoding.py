"""
Author: the ack_inverse developers
October 2026

--------------------------------------------------------------------------------
Copyright (C) 2026 the ack_inverse developers

This file is part of the ack_inverse program.

This program is free software:
you can redistribute it and/or modify it under the terms
of the GNU General Public License as published by the Free Software Foundation,
either version 3 of the License, or (at your option) any later version.

This program is distributed in the hope that it will be useful,
but WITHOUT ANY WARRANTY;
without even the implied warranty of MERCHANTABILITY
or FITNESS FOR A PARTICULAR PURPOSE.
See the GNU General Public License for more details.

You should have received a copy of the GNU General Public License
along with this program.
If not, see <https://www.gnu.org/licenses/>.

--------------------------------------------------------------------------------
File content:
Cantor pairing and tripling of naturals with their inverses,
and the self-delimiting sequence code: every binary digit of an entry
is written twice (0 as 00, 1 as 11) and every entry is closed by
the separator pair 01.
Digit pair j of a code occupies bit positions (2j, 2j+1).
"""
from __future__ import annotations
from dataclasses import dataclass
from typing import Iterator, List, Sequence, Tuple, Union

from bitarray import bitarray
from bitarray.util import ba2int, int2ba

from ack_inverse.bignat import BigNat
from ack_inverse.errors import EmptySequence, InvalidSequence


def isqrt(n: int) -> int:
    """
    Integer square root by binary search on the bit length.

    @return int, the `a` with `a*a <= n < (a+1)*(a+1)`.
    """
    if n < 0:
        raise ValueError(f"isqrt of the negative number {n}")
    low = 0
    high = 1 << ((n.bit_length() + 1) // 2)
    # low*low <= n < high*high
    while high - low > 1:
        middle = (low + high) // 2
        if middle * middle <= n:
            low = middle
        else:
            high = middle
    return low


def pair(u: int, v: int) -> int:
    """Cantor pairing <u,v> = (u+v)(u+v+1)/2 + v."""
    if u < 0 or v < 0:
        raise ValueError(f"pair({u}, {v}) needs naturals")
    diagonal = u + v
    return diagonal * (diagonal + 1) // 2 + v


def unpair(code: int) -> Tuple[int, int]:
    """
    Inverse of `pair()`: find the diagonal `a` with
    a(a+1) <= 2*code < (a+1)(a+2) from the square root of 2*code.
    """
    if code < 0:
        raise ValueError(f"unpair({code}) needs a natural")
    diagonal = isqrt(2 * code)
    if diagonal * (diagonal + 1) > 2 * code:
        diagonal -= 1
    offset = code - diagonal * (diagonal + 1) // 2
    return diagonal - offset, offset


def triple(u: int, v: int, w: int) -> int:
    """<u,v,w> = <<u,v>,w>."""
    return pair(pair(u, v), w)


def untriple(code: int) -> Tuple[int, int, int]:
    inner, w = unpair(code)
    u, v = unpair(inner)
    return u, v, w


def lex3_key(code: int) -> Tuple[int, int, int]:
    """
    Sort key of the lexicographic order on decoded triples.

    >>> sorted([triple(1, 0, 0), triple(0, 5, 5)], key=lex3_key)
    [330, 1]
    """
    return untriple(code)


# ------------------------------------------------------------------------------
# Sequence codes
# ------------------------------------------------------------------------------

@dataclass(frozen=True)
class SeqCode:
    """
    A natural `value` read as a sequence code.
    Validity is not checked on construction, see `seq_is_valid()`.
    """
    value: BigNat

    @property
    def pairs(self) -> List[Tuple[int, int]]:
        bits = self.value.bits
        padded = bits + bitarray("0", "little") if len(bits) % 2 else bits
        return list(zip(padded[0::2].tolist(), padded[1::2].tolist()))

    def to_binary_string(self) -> str:
        return self.value.to_binary_string()


SeqLike = Union[SeqCode, BigNat]


def _as_bignat(code: SeqLike) -> BigNat:
    if isinstance(code, SeqCode):
        return code.value
    return code


def _positions(bits: bitarray, start: int = 0) -> Iterator[int]:
    """Indices of the set digits of `bits` from `start` on, ascending."""
    index = bits.find(1, start)
    while index != -1:
        yield index
        index = bits.find(1, index + 1)


def seq_encode(xs: Sequence[int]) -> SeqCode:
    """
    Encode a nonempty list of naturals. Entries are written
    most-significant digit first without leading zeros,
    zero as the single digit 0, each one followed by a separator.

    >>> seq_encode([1, 0]).value.to_int()
    139

    @raise EmptySequence: if `xs` is empty.
    """
    if len(xs) == 0:
        raise EmptySequence("Cannot encode an empty list of naturals.")
    code = bitarray(endian="little")
    for x in xs:
        if x < 0:
            raise ValueError(f"Cannot encode the negative number {x}")
        digits = int2ba(x, endian="big")
        doubled = bitarray(2 * len(digits), "little")
        doubled[0::2] = digits
        doubled[1::2] = digits
        code += doubled
        code += bitarray("01", "little")
    return SeqCode(BigNat(code))


def _split_pairs(code: SeqLike) -> Tuple[bitarray, bitarray, List[int]]:
    """
    Return the even digits, the odd digits and the indices of
    the separator pairs of a code with an even number of digits.
    """
    bits = _as_bignat(code).bits
    even = bitarray(bits[0::2], "little")
    odd = bitarray(bits[1::2], "little")
    separators = list(_positions(~even & odd))
    return even, odd, separators


def seq_is_valid(code: SeqLike) -> bool:
    """
    The sequence predicate: at least two pairs, the first one a digit pair,
    the last one the separator 01, and every separator before the
    second-to-last pair followed by a digit pair.
    """
    bits = _as_bignat(code).bits
    if len(bits) % 2 or len(bits) < 4:
        return False
    even, odd, separators = _split_pairs(code)
    num_pairs = len(even)
    if even[0] != odd[0] or even[-1] != 0:
        return False
    for j in separators:
        if j >= num_pairs - 2:
            break
        if even[j + 1] != odd[j + 1]:
            return False
    return True


def _checked_split(code: SeqLike) -> Tuple[bitarray, List[int]]:
    if not seq_is_valid(code):
        raise InvalidSequence(f"{_as_bignat(code)!r} is not a sequence code")
    even, _, separators = _split_pairs(code)
    return even, separators


def _read_field(even: bitarray, start: int, stop: int) -> int:
    # Empty fields decode to zero.
    if stop <= start:
        return 0
    return ba2int(even[start:stop][::-1])


def seq_len(code: SeqLike) -> int:
    """Number of entries, i.e. of separator pairs."""
    _, separators = _checked_split(code)
    return len(separators)


def seq_get(code: SeqLike, index: int) -> int:
    """
    Entry `index` of a sequence code.

    @raise InvalidSequence: if the code is not valid or `index` is out of range.
    """
    even, separators = _checked_split(code)
    if not 0 <= index < len(separators):
        raise InvalidSequence(f"Index {index} out of range for a sequence "
                              f"of length {len(separators)}")
    start = 0 if index == 0 else separators[index - 1] + 1
    return _read_field(even, start, separators[index])


def seq_decode(code: SeqLike) -> List[int]:
    even, separators = _checked_split(code)
    entries = []
    start = 0
    for separator in separators:
        entries.append(_read_field(even, start, separator))
        start = separator + 1
    return entries
