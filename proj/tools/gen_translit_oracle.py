#!/usr/bin/env python3
# Copyright 2026 The snacs-hi Authors.
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.
"""Regenerates tests/data/translit_oracle.tsv with aksharamukha.

Usage: gen_translit_oracle.py WORDS_TSV OUT_TSV

WORDS_TSV rows are `devanagari<TAB>expected`, where `expected` is the form
used by the annotation guidelines. The oracle column is aksharamukha's
Hindi output with schwa removal, mapped onto the toolkit's letter
conventions (ṁ for nasalization, x/ṛ for the nukta letters).
"""

import sys
import unicodedata

from aksharamukha import transliterate

# Letter conventions only; no word-level edits.
CONVENTIONS = [
    ("k͟h", "x"),
    ("g͟h", "ġ"),
    ("r̤", "ṛ"),
    ("m̐", "ṁ"),
    ("ṃ", "ṁ"),
]

# Rows where the oracle and the guideline spelling differ.
NOTES = {
    "उम्र": "oracle keeps final schwa after a cluster; guideline writes umr",
    "समझना": "oracle deletes the wrong medial schwa; guideline writes samajhnā",
}


def oracle(word):
    out = transliterate.process("Devanagari", "IAST", word,
                                pre_options=["RemoveSchwaHindi"])
    for old, new in CONVENTIONS:
        out = out.replace(old, new)
    return unicodedata.normalize("NFC", out)


def main(argv):
    if len(argv) != 3:
        sys.exit(__doc__)
    rows = []
    with open(argv[1], encoding="utf-8") as f:
        for line in f:
            line = line.rstrip("\n")
            if not line or line.startswith("#"):
                continue
            dev, expected = line.split("\t")
            rows.append((dev, oracle(dev), expected, NOTES.get(dev, "")))
    with open(argv[2], "w", encoding="utf-8") as f:
        f.write("# devanagari\toracle\tguideline\tnote\n")
        for row in rows:
            f.write("\t".join(row) + "\n")


if __name__ == "__main__":
    main(sys.argv)
