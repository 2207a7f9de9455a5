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
Exact inverses of the sections A_k of the Ackermann function,
computed by iterating the inverse of the level below
    n_0 = m,  n_(r+1) = Inv_(A_(k-1))(n_r)  while n_r > 1,
so that Inv_(A_k)(m) is the number of steps s of this trace.
Only the first step reads the (possibly huge) input;
every later n_r fits a machine word.
Also the iterated logarithm, the inverse Ackermann function alpha,
and its approximation alpha'(m) = alpha(log(log(m))).
"""
from __future__ import annotations
from dataclasses import dataclass
from functools import lru_cache
from typing import List, Optional, Tuple, Union
import logging

from ack_inverse import bignat, config
from ack_inverse.bignat import BigNat, CostMeter, ensure_meter
from ack_inverse.errors import ArgumentError

logger = logging.getLogger(__name__)

Natural = Union[BigNat, int]

# A_k agrees with A_3 on 0, 1 and 2, and A_k(3) >= A_3(3) = exp^(65536)(1)
# for every k >= 3. No representable natural reaches A_3(3),
# so all levels from 3 on share the same inverse.
STABLE_LEVEL = 3


@dataclass(frozen=True)
class InvTrace:
    """
    The strictly decreasing sequence m = n_0 > n_1 > ... > n_s <= 1
    built with the inverse of level min(k - 1, STABLE_LEVEL).
    `k` is the level whose inverse `s` is, not the level iterated.
    """
    k: int
    steps: Tuple[Natural, ...]

    @property
    def s(self) -> int:
        return len(self.steps) - 1


def _ceil_log2(m: Natural, meter: CostMeter) -> int:
    if isinstance(m, BigNat):
        return bignat.ceil_log2(m, meter)
    if m < 0:
        raise ValueError(f"log of the negative number {m}")
    meter.charge(m.bit_length() + 1)
    if m <= 1:
        return 0
    return (m - 1).bit_length()


def _is_at_most_one(m: Natural, meter: CostMeter) -> bool:
    if isinstance(m, BigNat):
        return bignat.is_at_most_one(m, meter)
    meter.charge(1)
    return m <= 1


@lru_cache(maxsize=2**18)
def _inv_small(k: int, m: int) -> Tuple[int, int]:
    """
    Inverse on machine naturals, memoized together with its cost
    so that metering does not depend on the state of the cache.
    """
    meter = CostMeter()
    value = _inv(k, m, meter)
    return value, meter.count


def _inv_any(k: int, m: Natural, meter: CostMeter) -> int:
    if isinstance(m, int):
        value, units = _inv_small(k, m)
        meter.charge(units)
        return value
    return _inv(k, m, meter)


def _inv(k: int, m: Natural, meter: CostMeter) -> int:
    if k == 0:
        return _ceil_log2(m, meter)
    return len(_trace_steps(k, m, meter)) - 1


def _trace_steps(k: int, m: Natural, meter: CostMeter) -> List[Natural]:
    inner_level = min(k - 1, STABLE_LEVEL)
    steps = [m]
    current = m
    while not _is_at_most_one(current, meter):
        current = _inv_any(inner_level, current, meter)
        steps.append(current)
    return steps


def _check_natural(m: Natural):
    if isinstance(m, bool) or not isinstance(m, (int, BigNat)):
        raise TypeError(f"Expected a BigNat or an int, got {type(m)}")
    if isinstance(m, int) and m < 0:
        raise ValueError(f"Expected a natural number, got {m}")


def inv_ak(k: int, m: Natural, meter: Optional[CostMeter] = None) -> int:
    """
    Compute Inv_(A_k)(m), the least j with A(k, j) >= m.

    For k = 0 this is the ceiling of log2(m) (0 for m <= 1),
    for k >= 1 it is the length of the trace `inv_trace(k, m)`.
    The cost is linear in the bit length of `m` for every fixed k.

    @param k: level, a natural.
    @type k: int
    @param m: the bound, a BigNat or a Python int.
    @type m: Natural
    @param meter: cost meter charged for every bit operation, or `None`.
    @type meter: Optional[CostMeter]

    @return int, the inverse.
    """
    if k < 0:
        raise ValueError(f"The level must be a natural, got {k}")
    _check_natural(m)
    return _inv_any(k, m, ensure_meter(meter))


def inv_trace(k: int, m: Natural,
              meter: Optional[CostMeter] = None) -> InvTrace:
    """
    Build the full trace whose length defines Inv_(A_k)(m).

    Steps iterate the inverse of level k - 1 up to k = 4. From k = 5 on
    they iterate the level-3 inverse instead: the inverses of all levels
    from 3 on agree on every natural below A_3(3), which no stored value
    reaches. So the steps, and s, equal those of the recursion through
    level k - 1, but `InvTrace.k` is not the level used for the steps.

    @raise ArgumentError: if `k < 1`.
    """
    if k < 1:
        raise ArgumentError(f"Traces are defined from level 1 on, got {k}")
    _check_natural(m)
    return InvTrace(k, tuple(_trace_steps(k, m, ensure_meter(meter))))


def iter_log(m: Natural, j: int, meter: Optional[CostMeter] = None) -> int:
    """
    Compute log^(j)(m), the j-fold iterate of the ceiling of log2,
    with log(0) = log(1) = 0.

    @raise ArgumentError: if `j < 1`.
    """
    if j < 1:
        raise ArgumentError(f"iter_log needs at least one iteration, got {j}")
    _check_natural(m)
    meter = ensure_meter(meter)
    value = _ceil_log2(m, meter)
    for _ in range(j - 1):
        if value == 0:
            break
        value = _ceil_log2(value, meter)
    return value


def alpha(m: Natural, meter: Optional[CostMeter] = None,
          label_budget: int = config.DEFAULT_LABEL_BUDGET) -> int:
    """
    Compute alpha(m), the least k with A(k, k) >= m, in two phases.

    Phase 1 computes rho_k = Inv_(A_k)(m) for k = 0, 1, 2, 3 and returns
    the least k with rho_k <= k.
    Phase 2 is entered only when m > A(3, 3): it scans the levels
    j = 4 ... log^(4)(m) and returns the least one for which no
    certificate of A(j, j) < m exists (see `witness.alpha_phase2()`).

    >>> alpha(BigNat.from_int(4))
    2

    @param m: the bound.
    @type m: Natural
    @param meter: cost meter, or `None`.
    @type meter: Optional[CostMeter]
    @param label_budget: maximum number of labels of a certificate
        built in phase 2.
    @type label_budget: int

    @return int, alpha(m).
    """
    _check_natural(m)
    meter = ensure_meter(meter)
    rho = 0
    for k in range(STABLE_LEVEL + 1):
        rho = inv_ak(k, m, meter)
        if rho <= k:
            logger.debug("alpha decided in phase 1: rho_%d = %d", k, rho)
            return k
    logger.info("alpha enters phase 2 with rho_3 = %d", rho)
    # Local import: the witness module depends on this one.
    from ack_inverse.witness import alpha_phase2
    return alpha_phase2(iter_log(m, 2, meter), iter_log(m, 4, meter), rho,
                        label_budget=label_budget)


def alpha_prime(m: Natural, meter: Optional[CostMeter] = None,
                label_budget: int = config.DEFAULT_LABEL_BUDGET) -> int:
    """
    The approximation alpha'(m) = alpha(log(log(m))),
    within 2 of alpha(m).
    """
    meter = ensure_meter(meter)
    return alpha(iter_log(m, 2, meter), meter, label_budget)
