"""Write prime-knot PD corpora from the ``database_knotinfo`` package.

One file per crossing number, ``knots_cNN.pd``, in the corpus line grammar
``NAME c=INT alt=0|1 [qa=0|1] : PD``.  A second file, ``knotinfo_jones.tsv``,
keeps the tabulated Jones polynomials as an external cross-check.

    python3 scripts/export_knotinfo.py data/knots --max-crossings 12
"""

import argparse
import json
import pathlib

from database_knotinfo import link_list


def pd_text(pd):
    return " ".join("X[" + ",".join(str(v) for v in x) + "]" for x in pd)


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("outdir")
    ap.add_argument("--min-crossings", type=int, default=3)
    ap.add_argument("--max-crossings", type=int, default=12)
    args = ap.parse_args()
    out = pathlib.Path(args.outdir)
    out.mkdir(parents=True, exist_ok=True)

    rows = [r for r in link_list()[1:] if r.get("crossing_number", "").isdigit()]
    by_c = {}
    jones_lines = ["name\tjones"]
    for r in rows:
        c = int(r["crossing_number"])
        if not args.min_crossings <= c <= args.max_crossings:
            continue
        ann = [f"c={c}", f"alt={1 if r['alternating'] == 'Y' else 0}"]
        qa = r.get("quasi_alternating", "")
        if qa in ("Y", "N"):
            ann.append(f"qa={1 if qa == 'Y' else 0}")
        by_c.setdefault(c, []).append(f"{r['name']} {' '.join(ann)} : {pd_text(json.loads(r['pd_notation']))}")
        jones_lines.append(f"{r['name']}\t{r['jones_polynomial']}")
    for c, lines in sorted(by_c.items()):
        header = f"# prime knots with {c} crossings, exported from KnotInfo\n"
        (out / f"knots_c{c:02d}.pd").write_text(header + "\n".join(lines) + "\n")
        print(f"c={c}: {len(lines)} knots")
    (out / "knotinfo_jones.tsv").write_text("\n".join(jones_lines) + "\n")


if __name__ == "__main__":
    main()
