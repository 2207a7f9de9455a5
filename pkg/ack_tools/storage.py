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
Storage helpers: JSON logs (hyperparameters, scaling summaries),
directory creation, and the certificate file format
    line 1: `k n r` in decimal,
    line 2: the sequence code of the label codes, as a binary string.
"""
from __future__ import annotations
import json
import os
from typing import Tuple

from bitarray import bitarray

from ack_inverse.bignat import BigNat
from ack_inverse.encoding import SeqCode
from ack_inverse.witness import WitnessSeq


def store_log(log: dict, filepath: str):
    """
    Write a run log (hyperparameters, scaling summary) as indented JSON,
    creating the parent directories first.

    @param log: JSON-serializable run log.
    @type log: dict
    @param filepath: destination, must end in ".json".
    @type filepath: str
    """
    gen_directories(os.path.dirname(filepath))
    assert filepath.endswith(".json"), f"Not a JSON path: {filepath}"

    with open(filepath, "w", encoding="utf-8") as f:
        json.dump(log, f, sort_keys=True, indent=2)


def gen_directories(path: str):
    """Create `path` and its missing ancestors; "" is the working directory."""
    if path == "" or os.path.exists(path):
        return
    gen_directories(os.path.dirname(path))
    os.mkdir(path)


def _as_int_key(key: str):
    try:
        return int(key)
    except ValueError:
        return key


def load_log(filepath: str, convert_int_keys: bool = True) -> dict:
    """
    Read back a run log written by `store_log()`.
    JSON object keys are always strings; with `convert_int_keys`
    the top-level keys that spell an integer (such as bit lengths)
    become `int` again.

    @return dict, the run log.
    """
    with open(filepath, "r", encoding="utf-8") as f:
        log: dict = json.load(f)

    if convert_int_keys:
        log = {_as_int_key(key): value for key, value in log.items()}
    return log


def write_witness_file(witness: WitnessSeq, filepath: str):
    gen_directories(os.path.dirname(filepath))
    with open(filepath, "w", encoding="utf-8") as f:
        f.write(f"{witness.k} {witness.n} {witness.r}\n")
        f.write(witness.to_seq_code().to_binary_string() + "\n")


def parse_binary_string(text: str) -> BigNat:
    """
    Read a most-significant-first string of binary digits.

    @raise ValueError: on an empty string or a non-binary character.
    """
    digits = text.strip().lstrip("0") or "0"
    if text.strip() == "" or set(digits) - {"0", "1"}:
        raise ValueError(f"Not a binary string: {text!r}")
    return BigNat(bitarray(digits[::-1], "little"))


def read_witness_file(filepath: str) -> Tuple[SeqCode, int, int, int]:
    """
    Read a certificate file written by `write_witness_file()`.

    @return Tuple[SeqCode, int, int, int], the code and the
        statement indices `k`, `n`, `r` of its header.

    @raise ValueError: if the file does not follow the format.
    """
    with open(filepath, "r", encoding="utf-8") as f:
        lines = [line.strip() for line in f if line.strip() != ""]
    if len(lines) != 2:
        raise ValueError(f"{filepath}: expected a header and a code line, "
                         f"found {len(lines)} lines")
    header = lines[0].split()
    if len(header) != 3 or not all(field.isdigit() for field in header):
        raise ValueError(f"{filepath}: malformed header {lines[0]!r}")
    k, n, r = (int(field) for field in header)
    return SeqCode(parse_binary_string(lines[1])), k, n, r
