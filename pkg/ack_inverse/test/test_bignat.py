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
Tests for the file `ack_inverse/bignat.py`.
"""
import unittest

from bitarray import bitarray

from ack_inverse.bignat import (BigNat, CostMeter, DecimalLiteral,
                                Pow2Literal, TowerLiteral, bit_length,
                                ceil_log2, compare, exp_iter, is_power_of_two,
                                parse_literal, parse_num_literal, pred, succ,
                                to_small)
from ack_inverse.errors import (BudgetExceeded, LiteralSyntaxError, Overflow,
                                Underflow)
from ack_inverse.test.testing_tools import random_bignat


class BigNatTestCase(unittest.TestCase):

    def test_canonical_zero(self):
        zero = BigNat.zero()
        self.assertEqual(len(zero.bits), 1)
        self.assertEqual(zero, BigNat.from_int(0))
        self.assertEqual(zero.to_binary_string(), "0")

    def test_rejects_leading_zero_digit(self):
        with self.assertRaises(ValueError):
            BigNat(bitarray("10", "little"))
        with self.assertRaises(ValueError):
            BigNat(bitarray(endian="little"))

    def test_digits_are_little_endian(self):
        six = BigNat.from_int(6)
        self.assertEqual(six.bits.tolist(), [0, 1, 1])
        self.assertEqual(six.to_binary_string(), "110")

    def test_to_int_from_int(self):
        for value in (0, 1, 2, 255, 256, 2**70 + 3):
            self.assertEqual(BigNat.from_int(value).to_int(), value)

    def test_power_of_two(self):
        self.assertEqual(BigNat.power_of_two(10).to_int(), 1024)
        with self.assertRaises(BudgetExceeded):
            BigNat.power_of_two(64, budget=64)

    def test_ordering_and_hash(self):
        values = [BigNat.from_int(x) for x in (7, 0, 300, 8)]
        self.assertEqual([v.to_int() for v in sorted(values)], [0, 7, 8, 300])
        self.assertEqual(len({BigNat.from_int(5), BigNat.from_int(5)}), 1)


class BitLengthTestCase(unittest.TestCase):

    def test_known_values(self):
        self.assertEqual(bit_length(BigNat.from_int(0)), 1)
        self.assertEqual(bit_length(BigNat.from_int(1)), 1)
        self.assertEqual(bit_length(BigNat.from_int(5)), 3)

    def test_bounds(self):
        """n < 2**|n| <= 2n for n >= 1."""
        for n in range(1, 5000):
            length = bit_length(BigNat.from_int(n))
            self.assertLess(n, 2**length)
            self.assertLessEqual(2**length, 2 * n)


class CeilLog2TestCase(unittest.TestCase):

    def test_known_values(self):
        self.assertEqual(ceil_log2(BigNat.from_int(0)), 0)
        self.assertEqual(ceil_log2(BigNat.from_int(1)), 0)
        self.assertEqual(ceil_log2(BigNat.from_int(8)), 3)
        self.assertEqual(ceil_log2(BigNat.from_int(5)), 3)

    def test_sandwich(self):
        for n in range(1, 5000):
            big = BigNat.from_int(n)
            log = ceil_log2(big)
            self.assertGreaterEqual(2**log, n)
            if log >= 1:
                self.assertLess(2**(log - 1), n)
            self.assertLessEqual(bit_length(big) - 1, log)
            self.assertLessEqual(log, bit_length(big))

    def test_cost_is_linear(self):
        """
        The charge of `ceil_log2()` and `bit_length()`
        stays within a fixed multiple of the bit length.
        """
        for exponent in range(10, 25, 2):
            bits = 2**exponent
            n = random_bignat(bits, seed=exponent)
            meter = CostMeter()
            ceil_log2(n, meter)
            self.assertLessEqual(meter.count, 3 * bits + 10)
            meter.reset()
            bit_length(n, meter)
            self.assertLessEqual(meter.count, bits + 1)


class PrimitivesTestCase(unittest.TestCase):

    def test_compare(self):
        five = BigNat.from_int(5)
        self.assertEqual(compare(five, BigNat.from_int(5)), 0)
        self.assertEqual(compare(five, BigNat.from_int(6)), -1)
        self.assertEqual(compare(BigNat.from_int(300), five), 1)
        # Same length, difference in a low digit.
        self.assertEqual(compare(BigNat.from_int(2**40 + 1),
                                 BigNat.from_int(2**40 + 2)), -1)

    def test_compare_agrees_with_int(self):
        values = [0, 1, 2, 3, 127, 128, 129, 2**16 - 1, 2**16, 2**33 + 5]
        for a in values:
            for b in values:
                expected = (a > b) - (a < b)
                self.assertEqual(
                    compare(BigNat.from_int(a), BigNat.from_int(b)), expected)

    def test_succ(self):
        self.assertEqual(succ(BigNat.from_int(7)).to_int(), 8)
        for n in range(300):
            self.assertEqual(succ(BigNat.from_int(n)).to_int(), n + 1)

    def test_pred(self):
        for n in range(1, 300):
            self.assertEqual(pred(BigNat.from_int(n)).to_int(), n - 1)
        with self.assertRaises(Underflow):
            pred(BigNat.zero())

    def test_is_power_of_two(self):
        self.assertTrue(is_power_of_two(BigNat.from_int(65536)))
        self.assertTrue(is_power_of_two(BigNat.from_int(1)))
        self.assertFalse(is_power_of_two(BigNat.from_int(0)))
        self.assertFalse(is_power_of_two(BigNat.from_int(65537)))

    def test_to_small(self):
        self.assertEqual(to_small(BigNat.from_int(2**64 - 1)), 2**64 - 1)
        with self.assertRaises(Overflow):
            to_small(BigNat.from_int(2**64))

    def test_meter_is_charged(self):
        meter = CostMeter()
        succ(BigNat.from_int(2**20 - 1), meter)
        self.assertGreater(meter.count, 20)


class CostMeterTestCase(unittest.TestCase):

    def test_charge_and_reset(self):
        meter = CostMeter()
        meter.charge(3)
        meter.charge(4)
        self.assertEqual(meter.count, 7)
        self.assertEqual(meter.reset(), 7)
        self.assertEqual(meter.count, 0)

    def test_negative_charge(self):
        with self.assertRaises(AssertionError):
            CostMeter().charge(-1)


class ExpIterTestCase(unittest.TestCase):

    def test_small_towers(self):
        self.assertEqual(exp_iter(0, 5).to_int(), 5)
        self.assertEqual(exp_iter(1, 3).to_int(), 8)
        self.assertEqual(exp_iter(2, 2).to_int(), 16)
        self.assertEqual(exp_iter(3, 1).to_int(), 16)

    def test_tower_of_four_twos(self):
        self.assertEqual(exp_iter(4, 2), BigNat.power_of_two(65536))

    def test_budget(self):
        with self.assertRaises(BudgetExceeded):
            exp_iter(5, 2)
        with self.assertRaises(BudgetExceeded):
            exp_iter(4, 2, budget=65536)


class ParseLiteralTestCase(unittest.TestCase):

    def test_known_values(self):
        self.assertEqual(parse_literal("0"), BigNat.zero())
        self.assertEqual(parse_literal("pow2(16)").to_int(), 65536)
        tower = parse_literal("tower(4,2)")
        self.assertEqual(bit_length(tower), 65537)
        self.assertTrue(is_power_of_two(tower))

    def test_prefixed_forms(self):
        self.assertEqual(parse_literal("0b101").to_int(), 5)
        self.assertEqual(parse_literal("0b000").to_int(), 0)
        self.assertEqual(parse_literal("0xff").to_int(), 255)
        self.assertEqual(parse_literal("0xFF").to_int(), 255)
        self.assertEqual(parse_literal("pow2(0b11)").to_int(), 8)
        self.assertEqual(parse_literal("pow2(pow2(3))").to_int(), 256)

    def test_long_decimal(self):
        # Longer than what int() converts from a decimal string in one go.
        digits = "1" + "0" * 5000
        self.assertEqual(parse_literal(digits).to_int(), 10**5000)

    def test_tree(self):
        self.assertEqual(parse_num_literal("pow2(12)"),
                         Pow2Literal(DecimalLiteral("12")))
        self.assertEqual(parse_num_literal("tower(3,1)"), TowerLiteral(3, 1))

    def test_syntax_errors(self):
        for text in ("", "01", "0b", "0x", "0b12", "pow2(3", "pow2()",
                     "tower(a,2)", "tower(2)", "12x", "-3", "1.5", "pow3(2)"):
            with self.subTest(text=text):
                with self.assertRaises(LiteralSyntaxError):
                    parse_literal(text)

    def test_budget(self):
        with self.assertRaises(BudgetExceeded):
            parse_literal("pow2(100)", budget=64)
        with self.assertRaises(BudgetExceeded):
            parse_literal("9" * 100, budget=10)
        with self.assertRaises(BudgetExceeded):
            parse_literal("0x" + "f" * 20, budget=64)
        with self.assertRaises(BudgetExceeded):
            parse_literal("pow2(pow2(100))")
        self.assertEqual(bit_length(parse_literal("pow2(63)", budget=64)), 64)

    def test_prefixed_budget_is_exact(self):
        with self.assertRaises(BudgetExceeded):
            parse_literal("0xff", budget=5)
        with self.assertRaises(BudgetExceeded):
            parse_literal("0xff", budget=7)
        self.assertEqual(parse_literal("0xff", budget=8).to_int(), 255)
        self.assertEqual(parse_literal("0x1f", budget=5).to_int(), 31)
        with self.assertRaises(BudgetExceeded):
            parse_literal("0x" + "f" * 1000, budget=3997)
        self.assertEqual(
            bit_length(parse_literal("0x" + "f" * 1000, budget=4000)), 4000)
        with self.assertRaises(BudgetExceeded):
            parse_literal("0b0011", budget=1)
        self.assertEqual(parse_literal("0b0011", budget=2).to_int(), 3)
        self.assertEqual(parse_literal("0x000", budget=1).to_int(), 0)

    def test_print_parse_round_trip(self):
        for value in (0, 1, 6, 2**100 + 12345):
            big = BigNat.from_int(value)
            reparsed = parse_literal("0b" + big.to_binary_string())
            self.assertEqual(reparsed, big)


if __name__ == "__main__":
    unittest.main()
