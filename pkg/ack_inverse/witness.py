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
Certificates for statements A_k(n) < m.

A certificate is a set of labels <u,v,w>, each one stating A_u(v) = w
when w > 0 and A_u(v) < m when w = 0, listed in increasing lexicographic
order of (u, v, w). Every label is either a leaf
    <0,v,2**v>,  <u,0,1>,  <3,v,0> with v < r,
where r = Inv_(A_3)(m), or follows from two earlier labels
<u,v-1,w'> and <u-1,w',w> with w' > 0.

The builder unrolls the derivation tree of A_k(n) < m and keeps the
distinct labels; the verifier accepts exactly the sequences above.
On top of both sit the checkers for A_k(n) < m and for A_k(n) = m,
and the second phase of the inverse Ackermann function.
"""
from __future__ import annotations
from dataclasses import dataclass
from collections import defaultdict
from typing import DefaultDict, Dict, List, Optional, Set, Tuple, Union
import logging

from ack_inverse import config
from ack_inverse.bignat import BigNat, CostMeter, ensure_meter, succ
from ack_inverse.encoding import (SeqCode, seq_decode, seq_encode,
                                  seq_is_valid, triple, untriple)
from ack_inverse.errors import ArgumentError, BudgetExceeded
from ack_inverse.inverse import Natural, inv_ak, iter_log

logger = logging.getLogger(__name__)

# Values of A_u on 0, 1 and 2 for any u.
_SMALL_VALUES = (1, 2, 4)


@dataclass(frozen=True, order=True)
class Label:
    """
    The statement A_u(v) = w (w > 0) or A_u(v) < m (w = 0).
    Ordered lexicographically on (u, v, w).
    """
    u: int
    v: int
    w: int

    @property
    def code(self) -> int:
        return triple(self.u, self.v, self.w)

    @classmethod
    def from_code(cls, code: int) -> Label:
        return cls(*untriple(code))

    def is_less_than(self) -> bool:
        return self.w == 0

    def __str__(self) -> str:
        return f"<{self.u},{self.v},{self.w}>"


@dataclass(frozen=True)
class WitnessSeq:
    """
    Sorted labels certifying A_k(n) < m for every m with Inv_(A_3)(m) = r
    (and hence for every larger m).
    """
    labels: Tuple[Label, ...]
    k: int
    n: int
    r: int

    def __len__(self) -> int:
        return len(self.labels)

    def codes(self) -> List[int]:
        return [label.code for label in self.labels]

    def to_seq_code(self) -> SeqCode:
        return seq_encode(self.codes())


@dataclass(frozen=True)
class Refuted:
    """
    Outcome of `build_witness()` when the statement is false for this r:
    `label` is the less-than label that could not be established.
    """
    label: Label
    reason: str


class _WitnessBuilder:
    """
    Unrolls the derivation tree of a less-than statement.
    Holds the task-local label set and the memo of computed values.
    Values are only computed while they stay below `r`:
    a value A_u(v-1) >= r feeding a label <u-1,A_u(v-1),0> with u-1 >= 3
    makes that statement false.
    """

    def __init__(self, r: int, label_budget: int):
        self.r = r
        self.label_budget = label_budget
        self.labels: Set[Label] = set()
        self.__values: Dict[Tuple[int, int], int] = {}

    def __add(self, label: Label):
        if label in self.labels:
            return
        self.labels.add(label)
        if len(self.labels) > self.label_budget:
            raise BudgetExceeded(
                f"The certificate needs more than {self.label_budget} labels",
                len(self.labels), self.label_budget)

    def establish_value(self, u: int, v: int) -> Optional[int]:
        """
        Add the labels deriving A_u(v) = w and return w,
        or `None` if some value on the way reaches `r`.
        """
        known = self.__values.get((u, v))
        if known is not None:
            return known
        if u == 0:
            if v >= self.r.bit_length():
                return None
            value = 1 << v
            if value >= self.r:
                return None
            self.__add(Label(0, v, value))
            self.__values[(0, v)] = value
            return value

        value = 1
        if value >= self.r:
            return None
        self.__add(Label(u, 0, 1))
        self.__values[(u, 0)] = 1
        # A_u(i) = A_(u-1)(A_u(i-1)), for i = 1 ... v.
        for i in range(1, v + 1):
            known = self.__values.get((u, i))
            if known is None:
                known = self.establish_value(u - 1, value)
                if known is None:
                    return None
                self.__add(Label(u, i, known))
                self.__values[(u, i)] = known
            value = known
        return value

    def establish_less(self, k: int, n: int) -> Optional[Refuted]:
        """
        Add the labels deriving A_k(n) < m.

        @return Optional[Refuted], `None` on success.
        """
        u, v = k, n
        while u > 3:
            assert v >= 1, f"<{u},{v},0> cannot be derived"
            previous = self.establish_value(u, v - 1)
            if previous is None:
                return Refuted(Label(u, v, 0),
                               f"A_{u}({v - 1}) is at least r = {self.r}")
            self.__add(Label(u, v, 0))
            u, v = u - 1, previous
        if v >= self.r:
            return Refuted(Label(3, v, 0), f"leaf needs {v} < r = {self.r}")
        self.__add(Label(3, v, 0))
        return None


def build_witness(k: int, n: int, r: int,
                  label_budget: int = config.DEFAULT_LABEL_BUDGET
                  ) -> Union[WitnessSeq, Refuted]:
    """
    Construct the canonical certificate of A_k(n) < m,
    where `r` stands for Inv_(A_3)(m).

    @param k: level, at least 4.
    @type k: int
    @param n: argument, at least 3.
    @type n: int
    @param r: the leaf threshold.
    @type r: int
    @param label_budget: maximum number of distinct labels.
    @type label_budget: int

    @return Union[WitnessSeq, Refuted], the sorted label set ending
        in <k,n,0>, or `Refuted` when the statement is false for this r.

    @raise ArgumentError: if `k < 4` or `n < 3`.
    @raise BudgetExceeded: if more than `label_budget` labels are needed.
    """
    if k < 4 or n < 3:
        raise ArgumentError(f"Certificates are built for k >= 4 and n >= 3, "
                            f"got k={k}, n={n}")
    if r < 0:
        raise ArgumentError(f"The leaf threshold must be a natural, got {r}")
    builder = _WitnessBuilder(r, label_budget)
    refuted = builder.establish_less(k, n)
    if refuted is not None:
        logger.debug("A_%d(%d) < m refuted for r=%d at %s: %s",
                     k, n, r, refuted.label, refuted.reason)
        return refuted
    return WitnessSeq(tuple(sorted(builder.labels)), k, n, r)


def _is_leaf(label: Label, r: int) -> bool:
    u, v, w = label.u, label.v, label.w
    if u == 0 and w.bit_length() == v + 1 and w & (w - 1) == 0:
        return True
    if v == 0 and w == 1:
        return True
    return u == 3 and w == 0 and v < r


def _labels_of(s: Union[WitnessSeq, SeqCode, BigNat]) -> Optional[List[Label]]:
    if isinstance(s, WitnessSeq):
        return list(s.labels)
    if not seq_is_valid(s):
        return None
    return [Label.from_code(code) for code in seq_decode(s)]


def comput_lt_verify(s: Union[WitnessSeq, SeqCode, BigNat],
                     k: int, n: int, r: int) -> bool:
    """
    Decide whether `s` certifies A_k(n) < m for the threshold r.
    Every label must be a leaf or follow from two labels listed
    before it, and the last label must be <k,n,0>.
    Malformed input gives `False`.
    """
    labels = _labels_of(s)
    if not labels or labels[-1] != Label(k, n, 0):
        return False
    seen: Set[Label] = set()
    # (u, v) -> values w' > 0 of the labels <u,v,w'> seen so far.
    values_at: DefaultDict[Tuple[int, int], List[int]] = defaultdict(list)
    for label in labels:
        if not (_is_leaf(label, r) or _is_supported(label, seen, values_at)):
            return False
        seen.add(label)
        if label.w > 0:
            values_at[(label.u, label.v)].append(label.w)
    return True


def _is_supported(label: Label, seen: Set[Label],
                  values_at: DefaultDict[Tuple[int, int], List[int]]) -> bool:
    return _find_support(label, seen, values_at) is not None


def _find_support(label: Label, seen: Set[Label],
                  values_at: DefaultDict[Tuple[int, int], List[int]]
                  ) -> Optional[Tuple[Label, Label]]:
    if label.u < 1 or label.v < 1:
        return None
    for middle in values_at.get((label.u, label.v - 1), ()):
        outer = Label(label.u - 1, middle, label.w)
        if outer in seen:
            return Label(label.u, label.v - 1, middle), outer
    return None


def witness_height(witness: WitnessSeq) -> int:
    """
    Height of the derivation tree recovered from the label set,
    counting leaves (including every <3,v,0>) as height 0.

    @raise ValueError: if some label is neither a leaf nor supported.
    """
    heights: Dict[Label, int] = {}
    seen: Set[Label] = set()
    values_at: DefaultDict[Tuple[int, int], List[int]] = defaultdict(list)
    for label in witness.labels:
        if _is_leaf(label, witness.r) or (label.u == 3 and label.w == 0):
            heights[label] = 0
        else:
            support = _find_support(label, seen, values_at)
            if support is None:
                raise ValueError(f"{label} has no support in the certificate")
            heights[label] = 1 + max(heights[support[0]], heights[support[1]])
        seen.add(label)
        if label.w > 0:
            values_at[(label.u, label.v)].append(label.w)
    return heights[witness.labels[-1]]


def check_label_bounds(witness: WitnessSeq, log4m: int) -> bool:
    """
    Check the size bounds a certificate for m obeys,
    given log4m = log^(4)(m) (explicit or hypothetical):
    2 <= length <= log4m**3, every code below 6**4 * log4m**4,
    every component below log4m, and u, v >= 3 on less-than labels.
    """
    length = len(witness.labels)
    if not 2 <= length <= log4m**3:
        return False
    code_bound = 6**4 * log4m**4
    for label in witness.labels:
        if label.code >= code_bound:
            return False
        if max(label.u, label.v, label.w) >= log4m:
            return False
        if label.is_less_than() and min(label.u, label.v) < 3:
            return False
    return True


def search_witness_code(k: int, n: int, r: int, limit: int) -> Optional[int]:
    """
    Exhaustive search for the least code s <= limit
    accepted by `comput_lt_verify()`. Only feasible on tiny instances.
    """
    for s in range(limit + 1):
        if comput_lt_verify(BigNat.from_int(s), k, n, r):
            return s
    return None


# ------------------------------------------------------------------------------
# Predicates
# ------------------------------------------------------------------------------

def _to_bignat(m: Natural) -> BigNat:
    if isinstance(m, BigNat):
        return m
    return BigNat.from_int(m)


def check_lt(k: int, n: int, m: Natural, meter: Optional[CostMeter] = None,
             label_budget: int = config.DEFAULT_LABEL_BUDGET) -> bool:
    """
    Decide A_k(n) < m.

    Three cases:
    - n <= 2: A_k(n) is 1, 2 or 4 whatever k.
    - k <= 3: compare n with Inv_(A_k)(m).
    - otherwise: k and n must not exceed log(log(m)),
      r = Inv_(A_3)(m) must exceed 3, and a certificate
      for r must exist.

    @param k: level.
    @type k: int
    @param n: argument.
    @type n: int
    @param m: the bound.
    @type m: Natural
    @param meter: cost meter, or `None`.
    @type meter: Optional[CostMeter]
    @param label_budget: maximum number of labels of a certificate.
    @type label_budget: int

    @return bool, whether A_k(n) < m.
    """
    if k < 0 or n < 0:
        raise ValueError(f"A_{k}({n}) needs natural arguments")
    meter = ensure_meter(meter)
    if n <= 2:
        meter.charge(1)
        return _to_bignat(m) > BigNat.from_int(_SMALL_VALUES[n])
    if k <= 3:
        return inv_ak(k, m, meter) > n
    log2m = iter_log(m, 2, meter)
    if k > log2m or n > log2m:
        return False
    r_m = inv_ak(3, m, meter)
    if r_m <= 3:
        return False
    result = build_witness(k, n, r_m, label_budget)
    if isinstance(result, Refuted):
        return False
    return comput_lt_verify(result, k, n, r_m)


def check_graph(k: int, n: int, m: Natural,
                meter: Optional[CostMeter] = None,
                label_budget: int = config.DEFAULT_LABEL_BUDGET) -> bool:
    """Decide A_k(n) = m as A_k(n) < m+1 and not A_k(n) < m."""
    meter = ensure_meter(meter)
    if isinstance(m, BigNat):
        successor: Natural = succ(m, meter)
    else:
        successor = m + 1
    return (check_lt(k, n, successor, meter, label_budget)
            and not check_lt(k, n, m, meter, label_budget))


def alpha_phase2(log2m_bound: int, log4m: int, rho3: int,
                 label_budget: int = config.DEFAULT_LABEL_BUDGET,
                 search_constant: Optional[int] = None) -> int:
    """
    Second phase of alpha(m) for m > A(3, 3), driven by the
    small quantities of m only: returns the least j in 4 ... log4m
    without a certificate of A_j(j) < m.

    @param log2m_bound: log(log(m)), bounds the code size in search mode.
    @type log2m_bound: int
    @param log4m: log^(4)(m), at least 4.
    @type log4m: int
    @param rho3: Inv_(A_3)(m), greater than 3.
    @type rho3: int
    @param label_budget: maximum number of labels of a certificate.
    @type label_budget: int
    @param search_constant: when set, certificates are looked for by
        exhaustive search over all codes up to
        `search_constant * log2m_bound` instead of being constructed.
    @type search_constant: Optional[int]

    @return int, alpha(m).

    @raise ArgumentError: if the entry conditions do not hold,
        or if every j <= log4m has a certificate.
    """
    if log4m < 4 or rho3 <= 3:
        raise ArgumentError(f"Phase 2 needs log4m >= 4 and rho3 > 3, "
                            f"got log4m={log4m}, rho3={rho3}")
    for j in range(4, log4m + 1):
        if search_constant is not None:
            found = search_witness_code(j, j, rho3,
                                        search_constant * log2m_bound)
            has_witness = found is not None
        else:
            result = build_witness(j, j, rho3, label_budget)
            has_witness = (not isinstance(result, Refuted)
                           and comput_lt_verify(result, j, j, rho3))
        logger.debug("A_%d(%d) < m certified: %s", j, j, has_witness)
        if not has_witness:
            return j
    raise ArgumentError(f"Every level up to log4m={log4m} has a certificate, "
                        "which contradicts alpha(m) <= log4m")
