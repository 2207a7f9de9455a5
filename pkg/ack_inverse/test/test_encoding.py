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
Tests for the file `ack_inverse/encoding.py`.
"""
import random
import unittest

from ack_inverse.bignat import BigNat, bit_length
from ack_inverse.encoding import (SeqCode, isqrt, lex3_key, pair, seq_decode,
                                  seq_encode, seq_get, seq_is_valid, seq_len,
                                  triple, unpair, untriple)
from ack_inverse.errors import EmptySequence, InvalidSequence


def code(value: int) -> BigNat:
    return BigNat.from_int(value)


class IsqrtTestCase(unittest.TestCase):

    def test_known_values(self):
        self.assertEqual(isqrt(0), 0)
        self.assertEqual(isqrt(16), 4)
        self.assertEqual(isqrt(24), 4)

    def test_definition(self):
        for n in range(20000):
            root = isqrt(n)
            self.assertLessEqual(root * root, n)
            self.assertLess(n, (root + 1) * (root + 1))

    def test_big(self):
        n = 3**401
        root = isqrt(n)
        self.assertLessEqual(root * root, n)
        self.assertLess(n, (root + 1) * (root + 1))


class PairTestCase(unittest.TestCase):

    def test_known_values(self):
        self.assertEqual(pair(0, 0), 0)
        self.assertEqual(pair(1, 2), 8)
        self.assertEqual(unpair(8), (1, 2))

    def test_bijection_on_codes(self):
        for w in range(10**5):
            self.assertEqual(pair(*unpair(w)), w)

    def test_bijection_on_pairs(self):
        for u in range(300):
            for v in range(300):
                self.assertEqual(unpair(pair(u, v)), (u, v))

    def test_quadratic_bound(self):
        for u in range(100):
            for v in range(100):
                if u + v >= 1:
                    self.assertLessEqual(pair(u, v), 2 * (u + v)**2)


class TripleTestCase(unittest.TestCase):

    def test_known_values(self):
        self.assertEqual(triple(0, 0, 0), 0)
        self.assertEqual(untriple(triple(4, 3, 0)), (4, 3, 0))
        self.assertLessEqual(triple(1, 1, 1), 8 * 3**4)

    def test_quartic_bound(self):
        for u in range(100):
            for v in range(100):
                inner = pair(u, v)
                for w in range(100):
                    if u + v + w >= 1:
                        self.assertLessEqual(pair(inner, w),
                                             8 * (u + v + w)**4)

    def test_round_trip(self):
        for u in range(12):
            for v in range(12):
                for w in range(12):
                    self.assertEqual(untriple(triple(u, v, w)), (u, v, w))

    def test_lexicographic_key(self):
        codes = [triple(1, 0, 0), triple(0, 5, 5), triple(0, 5, 4),
                 triple(3, 0, 1)]
        ordered = sorted(codes, key=lex3_key)
        self.assertEqual([untriple(c) for c in ordered],
                         [(0, 5, 4), (0, 5, 5), (1, 0, 0), (3, 0, 1)])


class SeqEncodeTestCase(unittest.TestCase):

    def test_known_values(self):
        self.assertEqual(seq_encode([1]).value.to_int(), 11)
        self.assertEqual(seq_encode([2]).value.to_int(), 35)
        self.assertEqual(seq_encode([1, 0]).value.to_int(), 139)

    def test_pairs_view(self):
        self.assertEqual(seq_encode([2]).pairs, [(1, 1), (0, 0), (0, 1)])

    def test_smallest_code_of_one(self):
        """11 is the least valid code decoding to [1]."""
        decoding_to_one = [s for s in range(64)
                           if seq_is_valid(code(s)) and seq_decode(code(s)) == [1]]
        self.assertEqual(decoding_to_one[0], 11)

    def test_empty(self):
        with self.assertRaises(EmptySequence):
            seq_encode([])

    def test_random_round_trip(self):
        """
        1000 random lists of naturals below 2**16 decode back to
        themselves, and their codes obey 2l <= |s| <= 2l(|max|+1).
        """
        rng = random.Random(4242)
        for _ in range(1000):
            xs = [rng.randrange(2**16) for _ in range(rng.randint(1, 12))]
            encoded = seq_encode(xs)
            self.assertTrue(seq_is_valid(encoded))
            self.assertEqual(seq_decode(encoded), xs)
            self.assertEqual(seq_len(encoded), len(xs))
            length = bit_length(encoded.value)
            biggest = bit_length(BigNat.from_int(max(xs)))
            self.assertLessEqual(2 * len(xs), length)
            self.assertLessEqual(length, 2 * len(xs) * (biggest + 1))

    def test_zeros(self):
        self.assertEqual(seq_decode(seq_encode([0, 0, 0])), [0, 0, 0])


class SeqPredicateTestCase(unittest.TestCase):

    def test_known_values(self):
        self.assertFalse(seq_is_valid(code(0)))
        self.assertEqual(seq_len(code(11)), 1)
        self.assertEqual(seq_get(code(11), 0), 1)
        self.assertEqual(seq_get(code(139), 1), 0)
        self.assertEqual(seq_get(code(139), 0), 1)

    def test_accepts_seq_code(self):
        self.assertEqual(seq_len(SeqCode(code(139))), 2)

    def test_final_pair_turned_into_digit(self):
        """Setting the last even digit turns the final separator into 11."""
        for xs in ([1], [2], [1, 0], [7, 300, 0]):
            encoded = seq_encode(xs).value
            top_even = len(encoded.bits) - 2
            mutated = code(encoded.to_int() + 2**top_even)
            self.assertFalse(seq_is_valid(mutated))

    def test_first_pair_must_be_digit_pair(self):
        # (0,1)(1,1)(0,1)
        self.assertFalse(seq_is_valid(code(2 + 4 + 8 + 32)))
        # (1,0)(0,1)
        self.assertFalse(seq_is_valid(code(1 + 8)))

    def test_odd_length(self):
        # (1,1)(1,.) with the top digit in an even position.
        self.assertFalse(seq_is_valid(code(0b10111)))

    def test_leading_zero_digits(self):
        # (0,0)(1,1)(0,1) decodes like (1,1)(0,1).
        self.assertTrue(seq_is_valid(code(4 + 8 + 32)))
        self.assertEqual(seq_decode(code(4 + 8 + 32)), [1])

    def test_empty_final_field(self):
        # (1,1)(0,1)(0,1): the last field is empty and decodes to 0.
        s = code(1 + 2 + 8 + 32)
        self.assertTrue(seq_is_valid(s))
        self.assertEqual(seq_decode(s), [1, 0])

    def test_empty_inner_field(self):
        # (1,1)(0,1)(0,1)(1,1)(0,1)
        s = code(1 + 2 + 8 + 32 + 64 + 128 + 512)
        self.assertFalse(seq_is_valid(s))

    def test_one_zero_pair_reads_as_one(self):
        # (1,1)(1,0)(0,1)
        self.assertEqual(seq_decode(code(1 + 2 + 4 + 32)), [3])

    def test_invalid_access(self):
        with self.assertRaises(InvalidSequence):
            seq_len(code(0))
        with self.assertRaises(InvalidSequence):
            seq_get(code(139), 2)
        with self.assertRaises(InvalidSequence):
            seq_decode(code(9))


if __name__ == "__main__":
    unittest.main()
