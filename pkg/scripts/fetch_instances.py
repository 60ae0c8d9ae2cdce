"""Download the remaining public benchmark instances into data/.

zachary.gml and lesmis.gml ship with the repository. The other instances
used in the benchmark tables come from Newman's network data repository
(GML inside zip) and the DIMACS graph-coloring archive (.col). This
script needs plain internet access; each download is checked against the
published vertex/edge counts before being kept, so a wrong or truncated
file never lands in data/.

    python3 scripts/fetch_instances.py [name ...]
"""
from __future__ import annotations

import io
import sys
import urllib.request
import zipfile
from pathlib import Path

DATA = Path(__file__).resolve().parent.parent / "data"

NEWMAN = "http://www-personal.umich.edu/~mejn/netdata/{}.zip"
DIMACS = ("https://mat.tepper.cmu.edu/COLOR/instances/{}.col",
          "http://cedric.cnam.fr/~porumbed/graphs/{}.col")

# name -> (kind, expected vertices, expected edges)
INSTANCES = {
    "dolphins": ("newman", 62, 159),
    "polbooks": ("newman", 105, 441),
    "adjnoun": ("newman", 112, 425),
    "football": ("newman", 115, 613),
    "netscience": ("newman", 1589, 2742),
    "celegansneural": ("newman", 297, 2148),
    "huck": ("dimacs", 74, 301),
    "david": ("dimacs", 87, 406),
    "anna": ("dimacs", 138, 493),
    "homer": ("dimacs", 561, 1628),
}


def check_counts(name: str, text: str, fmt: str) -> tuple[int, int]:
    sys.path.insert(0, str(Path(__file__).resolve().parent.parent / "src"))
    from longcycle.graph import parse_dimacs, parse_gml
    g = parse_gml(text) if fmt == "gml" else parse_dimacs(text)
    return g.n, g.edge_count


def fetch(name: str) -> bool:
    kind, want_n, want_m = INSTANCES[name]
    if kind == "newman":
        url = NEWMAN.format(name)
        print(f"fetching {url} ...")
        blob = urllib.request.urlopen(url, timeout=60).read()
        with zipfile.ZipFile(io.BytesIO(blob)) as zf:
            member = next(m for m in zf.namelist() if m.endswith(".gml"))
            text = zf.read(member).decode("latin-1")
        out, fmt = DATA / f"{name}.gml", "gml"
    else:
        text = None
        for pattern in DIMACS:
            url = pattern.format(name)
            print(f"fetching {url} ...")
            try:
                text = urllib.request.urlopen(url, timeout=60).read().decode()
                break
            except Exception as err:  # try the mirror
                print(f"  failed: {err}")
        if text is None:
            return False
        out, fmt = DATA / f"{name}.col", "dimacs"

    n, m = check_counts(name, text, fmt)
    if (n, m) != (want_n, want_m):
        print(f"  REJECTED {name}: got {n} vertices / {m} edges, "
              f"expected {want_n} / {want_m}")
        return False
    out.write_text(text)
    print(f"  saved {out} ({n} vertices, {m} edges)")
    return True


def main(argv: list[str]) -> int:
    DATA.mkdir(exist_ok=True)
    names = argv or list(INSTANCES)
    bad = [n for n in names if n not in INSTANCES]
    if bad:
        print(f"unknown instances: {bad}; known: {sorted(INSTANCES)}")
        return 1
    failures = [n for n in names if not fetch(n)]
    if failures:
        print(f"failed to fetch: {failures}")
        return 1
    return 0


if __name__ == "__main__":
    raise SystemExit(main(sys.argv[1:]))
