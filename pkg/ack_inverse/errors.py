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
Exceptions raised by the ack_inverse library.
"""
from __future__ import annotations


class AckInverseError(Exception):
    """
    Base class of all errors raised by this library.
    """


class BudgetExceeded(AckInverseError):
    """
    Raised when materializing a value would need more bits than the
    configured bit budget, or when witness construction would need
    more labels than the configured label budget.
    """

    def __init__(self, message: str, needed: int | None = None,
                 budget: int | None = None):
        super().__init__(message)
        self.needed = needed
        self.budget = budget


class LiteralSyntaxError(AckInverseError, ValueError):
    """
    Raised when a number literal does not match the literal grammar.
    """

    def __init__(self, text: str, position: int, reason: str):
        super().__init__(f"Malformed literal {text!r} at position "
                         f"{position}: {reason}")
        self.text = text
        self.position = position


class Overflow(AckInverseError):
    """Raised by `to_small()` when a value does not fit a machine word."""


class Underflow(AckInverseError):
    """Raised by `pred()` on zero."""


class EmptySequence(AckInverseError, ValueError):
    """Raised when encoding an empty list of naturals."""


class InvalidSequence(AckInverseError, ValueError):
    """
    Raised when decoding from a code that is not a valid sequence code,
    or when indexing past its last entry.
    """


class ArgumentError(AckInverseError, ValueError):
    """Raised on violated preconditions of the witness operations."""
