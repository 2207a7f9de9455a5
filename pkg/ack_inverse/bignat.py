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
Natural numbers of arbitrary size stored as little-endian bit sequences,
with the linear-time primitives used by the inverse computations
(bit length, ceiling log2, comparison, successor and predecessor),
a cost meter counting elementary bit operations,
and the parser of the number literals accepted on the command line.
"""
from __future__ import annotations
from dataclasses import dataclass
from functools import total_ordering
from typing import Optional, Union
import logging
import re

from bitarray import bitarray, frozenbitarray
from bitarray.util import ba2int, int2ba, zeros

from ack_inverse import config
from ack_inverse.errors import (BudgetExceeded, LiteralSyntaxError,
                                Overflow, Underflow)

logger = logging.getLogger(__name__)

# Python refuses to convert very long decimal strings in one go,
# so decimal literals are converted in chunks of this many digits.
_DECIMAL_CHUNK = 1000
# 10**(d-1) has more than this many binary digits per decimal digit.
_BITS_PER_DECIMAL_DIGIT = 3.32


class CostMeter:
    """
    Counter of elementary bit operations.
    One unit is charged per binary digit read or written on a digit
    sequence, plus one unit per loop iteration.
    """

    def __init__(self) -> None:
        self._count = 0

    @property
    def count(self) -> int:
        return self._count

    def charge(self, units: int) -> None:
        assert units >= 0, f"Cannot charge a negative cost, got {units}"
        self._count += units

    def reset(self) -> int:
        """
        Set the counter back to zero.

        @return int, the count before the reset.
        """
        previous = self._count
        self._count = 0
        return previous

    def __repr__(self) -> str:
        return f"CostMeter(count={self._count})"


def ensure_meter(meter: Optional[CostMeter]) -> CostMeter:
    """Return `meter`, or a throwaway meter when it is `None`."""
    if meter is None:
        return CostMeter()
    return meter


@total_ordering
class BigNat:
    """
    Immutable natural number stored as its binary digits,
    least-significant digit first.
    The representation is canonical: the last digit is 1,
    except for zero which is the single digit 0.
    """
    __slots__ = ("_bits",)

    def __init__(self, bits: bitarray) -> None:
        """
        @param bits: binary digits, index `i` holding the digit of `2**i`.
            Must be canonical (see class documentation).
        @type bits: bitarray
        """
        frozen = frozenbitarray(bits, "little")
        if len(frozen) == 0:
            raise ValueError("A BigNat needs at least one digit.")
        if len(frozen) > 1 and not frozen[-1]:
            raise ValueError("BigNat digits must not end in a zero digit.")
        self._bits = frozen

    @classmethod
    def from_int(cls, value: int) -> BigNat:
        if value < 0:
            raise ValueError(f"Natural numbers cannot be negative, got {value}")
        return cls(int2ba(value, endian="little"))

    @classmethod
    def zero(cls) -> BigNat:
        return cls(bitarray("0", "little"))

    @classmethod
    def power_of_two(cls, exponent: int,
                     budget: int = config.DEFAULT_BIT_BUDGET) -> BigNat:
        """
        Build `2**exponent` directly from its digits.

        @raise BudgetExceeded: if `exponent + 1 > budget`.
        """
        if exponent < 0:
            raise ValueError(f"Negative exponent {exponent}")
        if exponent + 1 > budget:
            raise BudgetExceeded(
                f"2**{exponent} needs {exponent + 1} bits, "
                f"budget is {budget}", exponent + 1, budget)
        digits = zeros(exponent + 1, "little")
        digits[exponent] = 1
        return cls(digits)

    @property
    def bits(self) -> frozenbitarray:
        return self._bits

    def to_int(self) -> int:
        return ba2int(self._bits)

    def to_binary_string(self) -> str:
        """
        Most-significant digit first, without leading zeros,
        `"0"` for zero.
        """
        return self._bits[::-1].to01()

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, BigNat):
            return NotImplemented
        return self._bits == other._bits

    def __lt__(self, other: BigNat) -> bool:
        if not isinstance(other, BigNat):
            return NotImplemented
        return compare(self, other) < 0

    def __hash__(self) -> int:
        return hash(self._bits)

    def __repr__(self) -> str:
        if len(self._bits) <= config.MACHINE_WORD_BITS:
            return f"BigNat({self.to_int()})"
        return f"BigNat(<{len(self._bits)} bits>)"


def bit_length(n: BigNat, meter: Optional[CostMeter] = None) -> int:
    """
    Return `|n|`, the number of binary digits of `n`, with `|0| = 1`.
    Counting the digits is charged one unit per digit.
    """
    ensure_meter(meter).charge(len(n.bits) + 1)
    return len(n.bits)


def is_power_of_two(n: BigNat, meter: Optional[CostMeter] = None) -> bool:
    # Full scan: a canonical power of two has exactly one set digit.
    ensure_meter(meter).charge(len(n.bits) + 1)
    return n.bits.count(1) == 1


def ceil_log2(n: BigNat, meter: Optional[CostMeter] = None) -> int:
    """
    Compute `log(n)`, the ceiling of the base-2 logarithm of `n`.
    Extended by `log(0) = log(1) = 0`.
    For `n >= 1` the result satisfies `|n|-1 <= log(n) <= |n|`.

    @param n: number to take the logarithm of.
    @type n: BigNat
    @param meter: cost meter to charge, or `None`.
    @type meter: Optional[CostMeter]

    @return int, `bit_length(n) - 1` when `n` is a power of two
        and `bit_length(n)` otherwise.
    """
    meter = ensure_meter(meter)
    if is_at_most_one(n, meter):
        return 0
    length = bit_length(n, meter)
    if is_power_of_two(n, meter):
        return length - 1
    return length


def is_at_most_one(n: BigNat, meter: Optional[CostMeter] = None) -> bool:
    ensure_meter(meter).charge(1)
    return len(n.bits) == 1


def compare(a: BigNat, b: BigNat, meter: Optional[CostMeter] = None) -> int:
    """
    Three-way comparison.

    @return int, -1 if `a < b`, 0 if `a == b` and 1 if `a > b`.
    """
    meter = ensure_meter(meter)
    meter.charge(2)
    len_a, len_b = len(a.bits), len(b.bits)
    if len_a != len_b:
        return -1 if len_a < len_b else 1
    meter.charge(len_a)
    if a.bits == b.bits:
        return 0
    # Equal lengths give equal zero padding, so the reversed little-endian
    # bytes compare like the numbers themselves.
    if a.bits.tobytes()[::-1] < b.bits.tobytes()[::-1]:
        return -1
    return 1


def succ(n: BigNat, meter: Optional[CostMeter] = None) -> BigNat:
    meter = ensure_meter(meter)
    digits = bitarray(n.bits, "little")
    meter.charge(len(digits))
    first_zero = digits.find(0)
    if first_zero == -1:
        # All ones: the carry runs off the top.
        meter.charge(len(digits) + 1)
        digits.setall(0)
        digits.append(1)
    else:
        meter.charge(first_zero + 1)
        digits[:first_zero] = 0
        digits[first_zero] = 1
    return BigNat(digits)


def pred(n: BigNat, meter: Optional[CostMeter] = None) -> BigNat:
    """
    Return `n - 1`.

    @raise Underflow: if `n` is zero.
    """
    meter = ensure_meter(meter)
    digits = bitarray(n.bits, "little")
    meter.charge(len(digits))
    first_one = digits.find(1)
    if first_one == -1:
        raise Underflow("The predecessor of 0 is not a natural number.")
    meter.charge(first_one + 1)
    digits[:first_one] = 1
    digits[first_one] = 0
    if len(digits) > 1 and not digits[-1]:
        del digits[-1]
    return BigNat(digits)


def to_small(n: BigNat, meter: Optional[CostMeter] = None,
             word_bits: int = config.MACHINE_WORD_BITS) -> int:
    """
    Convert to a machine natural.

    @raise Overflow: if `n` has more than `word_bits` digits.
    """
    if len(n.bits) > word_bits:
        raise Overflow(f"A {len(n.bits)}-bit value does not fit "
                       f"in {word_bits} bits.")
    ensure_meter(meter).charge(len(n.bits))
    return ba2int(n.bits)


def exp_iter(height: int, base: int,
             budget: int = config.DEFAULT_BIT_BUDGET) -> BigNat:
    """
    Compute `exp^(height)(base)`, a tower of `height` twos topped by `base`.

    @raise BudgetExceeded: as soon as an intermediate value
        would need more than `budget` bits.
    """
    if height < 0 or base < 0:
        raise ValueError(f"tower({height}, {base}) needs naturals")
    if height == 0:
        return BigNat.from_int(base)
    exponent = base
    for _ in range(height - 1):
        if exponent + 1 > budget:
            raise BudgetExceeded(
                f"tower({height}, {base}) exceeds the budget of {budget} bits",
                None, budget)
        exponent = 1 << exponent
    return BigNat.power_of_two(exponent, budget)


# ------------------------------------------------------------------------------
# Number literals
# ------------------------------------------------------------------------------

@dataclass(frozen=True)
class DecimalLiteral:
    digits: str


@dataclass(frozen=True)
class BinaryLiteral:
    digits: str


@dataclass(frozen=True)
class HexLiteral:
    digits: str


@dataclass(frozen=True)
class Pow2Literal:
    exponent: "NumLiteral"


@dataclass(frozen=True)
class TowerLiteral:
    height: int
    base: int


NumLiteral = Union[DecimalLiteral, BinaryLiteral, HexLiteral,
                   Pow2Literal, TowerLiteral]

_DECIMAL = re.compile(r"0|[1-9][0-9]*")
_BINARY = re.compile(r"0b[01]+")
_HEX = re.compile(r"0x[0-9a-fA-F]+")


class _LiteralParser:
    """
    Recursive-descent parser for the grammar
    `0 | nonzero-decimal | 0b{0,1}+ | 0x{hex}+ | pow2(literal)
    | tower(small-decimal,small-decimal)`.
    """

    def __init__(self, text: str) -> None:
        self.text = text
        self.pos = 0

    def parse(self) -> NumLiteral:
        literal = self._literal()
        if self.pos != len(self.text):
            self._fail("unexpected trailing characters")
        return literal

    def _fail(self, reason: str):
        raise LiteralSyntaxError(self.text, self.pos, reason)

    def _expect(self, token: str) -> None:
        if not self.text.startswith(token, self.pos):
            self._fail(f"expected {token!r}")
        self.pos += len(token)

    def _match(self, pattern: re.Pattern) -> Optional[str]:
        match = pattern.match(self.text, self.pos)
        if match is None:
            return None
        self.pos = match.end()
        return match.group(0)

    def _small_decimal(self) -> int:
        digits = self._match(_DECIMAL)
        if digits is None:
            self._fail("expected a decimal natural")
        if len(digits) > 19:
            self._fail("tower arguments must be small naturals")
        return int(digits)

    def _literal(self) -> NumLiteral:
        if self.text.startswith("pow2(", self.pos):
            self._expect("pow2(")
            exponent = self._literal()
            self._expect(")")
            return Pow2Literal(exponent)
        if self.text.startswith("tower(", self.pos):
            self._expect("tower(")
            height = self._small_decimal()
            self._expect(",")
            base = self._small_decimal()
            self._expect(")")
            return TowerLiteral(height, base)
        # Prefixed forms first: "0b1" would otherwise parse as "0".
        for pattern, kind in ((_BINARY, BinaryLiteral), (_HEX, HexLiteral)):
            token = self._match(pattern)
            if token is not None:
                return kind(token[2:])
        token = self._match(_DECIMAL)
        if token is None:
            self._fail("expected a number literal")
        return DecimalLiteral(token)


def parse_num_literal(text: str) -> NumLiteral:
    """
    Parse `text` into a literal tree without materializing it.

    @raise LiteralSyntaxError: if `text` does not match the grammar.
    """
    return _LiteralParser(text.strip()).parse()


def _decimal_to_int(digits: str) -> int:
    value = 0
    for start in range(0, len(digits), _DECIMAL_CHUNK):
        chunk = digits[start:start + _DECIMAL_CHUNK]
        value = value * 10**len(chunk) + int(chunk)
    return value


def _check_budget(needed: int, budget: int, what: str) -> None:
    if needed > budget:
        raise BudgetExceeded(f"{what} needs at least {needed} bits, "
                             f"budget is {budget}", needed, budget)


def materialize(literal: NumLiteral,
                budget: int = config.DEFAULT_BIT_BUDGET) -> BigNat:
    """
    Compute the value denoted by a parsed literal.

    @raise BudgetExceeded: if the value (or an intermediate of a tower)
        needs more than `budget` bits.
    """
    if isinstance(literal, DecimalLiteral):
        lower_bound = int((len(literal.digits) - 1) * _BITS_PER_DECIMAL_DIGIT)
        _check_budget(lower_bound, budget, "decimal literal")
        value = _decimal_to_int(literal.digits)
        _check_budget(value.bit_length(), budget, "decimal literal")
        return BigNat.from_int(value)
    if isinstance(literal, (BinaryLiteral, HexLiteral)):
        base = 2 if isinstance(literal, BinaryLiteral) else 16
        significant = literal.digits.lstrip("0") or "0"
        digit_bits = 1 if base == 2 else 4
        width = ((len(significant) - 1) * digit_bits
                 + max(int(significant[0], base).bit_length(), 1))
        _check_budget(width, budget, "prefixed literal")
        value = int(significant, base)
        return BigNat.from_int(value)
    if isinstance(literal, Pow2Literal):
        exponent = materialize(literal.exponent, budget)
        if len(exponent.bits) > config.MACHINE_WORD_BITS:
            raise BudgetExceeded(
                f"pow2 of a {len(exponent.bits)}-bit exponent exceeds "
                f"the budget of {budget} bits", None, budget)
        return BigNat.power_of_two(exponent.to_int(), budget)
    if isinstance(literal, TowerLiteral):
        return exp_iter(literal.height, literal.base, budget)
    raise TypeError(f"Unknown literal {literal!r}")


def parse_literal(text: str,
                  budget: int = config.DEFAULT_BIT_BUDGET) -> BigNat:
    """
    Parse and materialize a number literal.

    >>> parse_literal("pow2(16)").to_int()
    65536

    @param text: literal, e.g. `"12"`, `"0b101"`, `"0xff"`, `"pow2(20)"`
        or `"tower(4,2)"`.
    @type text: str
    @param budget: maximum number of binary digits of the result
        and of every intermediate value.
    @type budget: int

    @return BigNat, the denoted value in canonical form.
    """
    value = materialize(parse_num_literal(text), budget)
    logger.debug("Parsed literal %r into a %d-bit value", text,
                 len(value.bits))
    return value
