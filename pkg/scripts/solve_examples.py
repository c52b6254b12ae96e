"""Compute coverings and transformation identities for a few sample exponent triples."""

import sys

from hypklein.cli import run

TRIPLES = ["1/3,1/3,2/3", "1/2,1/3,2/3", "1/2,2/3,2/3", "3/2,1/3,1/3", "1/2,1/3,4/3"]

if __name__ == "__main__":
    triples = sys.argv[1:] or TRIPLES
    code = 0
    for t in triples:
        print(f"== {t}")
        code = max(code, run(["solve", "--exponents", t]))
        code = max(code, run(["identity", "--exponents", t, "--order", "12"]))
        print()
    sys.exit(code)
