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
Tests for the file `ack_tools/storage.py`.
"""
import os
import shutil
import tempfile
import unittest

from ack_inverse.bignat import BigNat
from ack_inverse.witness import build_witness, comput_lt_verify
from ack_tools.storage import (load_log, parse_binary_string,
                               read_witness_file, store_log,
                               write_witness_file)


class StoreLogTestCase(unittest.TestCase):

    def setUp(self):
        self.dir = tempfile.mkdtemp()
        self.path = os.path.join(self.dir, "dummy_dir", "test_log.json")
        self.log = {
            0: {"a": 2, "b": 4},
            1: [1, 2, 3],
            "name": "Hello world!"
        }

    def tearDown(self):
        shutil.rmtree(self.dir)

    def test_save_and_load(self):
        store_log(self.log, self.path)
        self.assertTrue(os.path.exists(self.path))
        loaded_log = load_log(self.path)
        self.assertDictEqual(loaded_log, self.log)

    def test_string_keys_kept(self):
        store_log(self.log, self.path)
        loaded_log = load_log(self.path, convert_int_keys=False)
        self.assertIn("0", loaded_log)


class WitnessFileTestCase(unittest.TestCase):

    def setUp(self):
        self.dir = tempfile.mkdtemp()
        self.path = os.path.join(self.dir, "certificates", "a4_3.txt")

    def tearDown(self):
        shutil.rmtree(self.dir)

    def test_round_trip(self):
        witness = build_witness(4, 3, 5)
        write_witness_file(witness, self.path)
        code, k, n, r = read_witness_file(self.path)
        self.assertEqual((k, n, r), (4, 3, 5))
        self.assertEqual(code, witness.to_seq_code())
        self.assertTrue(comput_lt_verify(code, k, n, r))

    def test_format(self):
        write_witness_file(build_witness(4, 3, 5), self.path)
        with open(self.path, "r", encoding="utf-8") as f:
            lines = f.read().splitlines()
        self.assertEqual(lines[0], "4 3 5")
        self.assertEqual(set(lines[1]), {"0", "1"})
        self.assertTrue(lines[1].startswith("1"))

    def test_malformed_files(self):
        os.makedirs(os.path.dirname(self.path))
        for content in ("4 3\n1011\n", "4 3 5\n", "4 3 x\n1011\n",
                        "4 3 5\n10a1\n", "4 3 5\n1011\n1011\n"):
            with open(self.path, "w", encoding="utf-8") as f:
                f.write(content)
            with self.assertRaises(ValueError, msg=repr(content)):
                read_witness_file(self.path)


class ParseBinaryStringTestCase(unittest.TestCase):

    def test_values(self):
        self.assertEqual(parse_binary_string("0"), BigNat.zero())
        self.assertEqual(parse_binary_string("10001011").to_int(), 139)
        self.assertEqual(parse_binary_string("0011").to_int(), 3)

    def test_invalid(self):
        for text in ("", "12", "0b11", " "):
            with self.assertRaises(ValueError):
                parse_binary_string(text)


if __name__ == "__main__":
    unittest.main()
