"""Write the α tables as Markdown and JSON."""

import argparse
from pathlib import Path

from dpalpha.catalog import emit_tables


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--out", default="tables", help="output directory")
    args = ap.parse_args()
    out = Path(args.out)
    out.mkdir(parents=True, exist_ok=True)
    for fmt, ext in (("md", "md"), ("json", "json")):
        path = out / f"alpha_tables.{ext}"
        path.write_text(emit_tables(fmt))
        print(f"wrote {path}")


if __name__ == "__main__":
    main()
