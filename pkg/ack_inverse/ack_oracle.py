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
Brute-force evaluation of the Ackermann function
    A(0, n) = 2**n,
    A(k, 0) = 1,
    A(k+1, n+1) = A(k, A(k+1, n)),
under a bit budget. Used as ground truth by the tests of every other module.
"""
from __future__ import annotations
from collections import OrderedDict
from typing import List, Optional, Tuple, Union
import logging

from ack_inverse import config
from ack_inverse.bignat import BigNat

logger = logging.getLogger(__name__)

# A(k, 0), A(k, 1) and A(k, 2) do not depend on k.
_SMALL_ARGUMENT_VALUES = (1, 2, 4)


class _ExceedsBudget:
    """
    Sentinel returned instead of a value that would need
    more bits than the budget allows.
    """
    _instance: Optional[_ExceedsBudget] = None

    def __new__(cls) -> _ExceedsBudget:
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self) -> str:
        return "EXCEEDS_BUDGET"


EXCEEDS_BUDGET = _ExceedsBudget()
AckResult = Union[BigNat, _ExceedsBudget]


class _OverBudget(Exception):
    """Internal signal: unwinds the evaluation stack."""


class AckermannOracle:
    """
    One evaluation session: a bit budget and a memo of
    (k, n) -> A(k, n), capped by the total number of stored bits.
    Sessions are not thread-safe; use one per task.
    """

    def __init__(self, budget: int = config.DEFAULT_BIT_BUDGET,
                 memo_bits: int = config.DEFAULT_MEMO_BITS):
        """
        @param budget: maximum number of bits of any intermediate value.
        @type budget: int
        @param memo_bits: maximum total bit length of the memoized values.
            The oldest entries are evicted first.
        @type memo_bits: int
        """
        assert budget >= 1, "The bit budget must be positive"
        self.budget = budget
        self.memo_bits = memo_bits
        self.__memo: OrderedDict[Tuple[int, int], int] = OrderedDict()
        self.__stored_bits = 0

    def evaluate(self, k: int, n: int) -> AckResult:
        value = self.evaluate_int(k, n)
        if value is None:
            return EXCEEDS_BUDGET
        return BigNat.from_int(value)

    def evaluate_int(self, k: int, n: int) -> Optional[int]:
        """
        Compute A(k, n) as a Python integer through the iterate identity
        A(k+1, n) = A(k, .) applied n times to 1.
        Nested applications are kept on an explicit stack of frames
        `[level, argument, remaining applications]`.

        @return Optional[int], A(k, n), or `None` as soon as an
            intermediate value needs more than `self.budget` bits.
        """
        if k < 0 or n < 0:
            raise ValueError(f"A({k}, {n}) needs natural arguments")
        try:
            known = self.__known(k, n)
            if known is not None:
                return known
            frames: List[List[int]] = [[k, n, n]]
            value = 1
            while frames:
                frame = frames[-1]
                level, argument, remaining = frame
                if remaining == 0:
                    frames.pop()
                    self.__remember(level, argument, value)
                    continue
                frame[2] -= 1
                known = self.__known(level - 1, value)
                if known is None:
                    frames.append([level - 1, value, value])
                    value = 1
                else:
                    value = known
            return value
        except _OverBudget:
            logger.debug("A(%d, %d) exceeds the budget of %d bits",
                         k, n, self.budget)
            return None

    def __known(self, k: int, n: int) -> Optional[int]:
        """
        Values available without expanding a frame,
        or `None` when A(k, n) must be unrolled.
        """
        if n <= 2:
            if n + 1 > self.budget:
                raise _OverBudget()
            return _SMALL_ARGUMENT_VALUES[n]
        if k == 0:
            if n + 1 > self.budget:
                raise _OverBudget()
            return 1 << n
        return self.__memo.get((k, n))

    def __remember(self, k: int, n: int, value: int):
        if (k, n) in self.__memo:
            return
        self.__memo[(k, n)] = value
        self.__stored_bits += value.bit_length()
        while self.__stored_bits > self.memo_bits and self.__memo:
            (old_k, old_n), old_value = self.__memo.popitem(last=False)
            self.__stored_bits -= old_value.bit_length()
            logger.debug("Evicted A(%d, %d) from the memo", old_k, old_n)


def ack_eval(k: int, n: int,
             budget: int = config.DEFAULT_BIT_BUDGET) -> AckResult:
    """
    Evaluate A(k, n) in a fresh session.

    @param k: level of the Ackermann function.
    @type k: int
    @param n: argument.
    @type n: int
    @param budget: maximum number of bits of any intermediate value.
    @type budget: int

    @return AckResult, the exact value as a BigNat, or `EXCEEDS_BUDGET`.
    """
    return AckermannOracle(budget).evaluate(k, n)


def ack_diag(n: int, budget: int = config.DEFAULT_BIT_BUDGET) -> AckResult:
    """The diagonal Ack(n) = A(n, n)."""
    return ack_eval(n, n, budget)
