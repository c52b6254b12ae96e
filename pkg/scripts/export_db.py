"""Write the Darboux database as JSON lines (default: darboux.jsonl)."""

import sys

from hypklein.darboux import export_jsonl

if __name__ == "__main__":
    path = sys.argv[1] if len(sys.argv) > 1 else "darboux.jsonl"
    with open(path, "w") as fh:
        fh.write(export_jsonl())
    print(f"wrote {path}")
