"""Scan small connected graphs for the smallest instance of each ct value.

Run once; the output is frozen in src/ctdom/data/ct_fixtures.json.  Needs
networkx for the graph atlas (all graphs up to 7 vertices) and for
non-isomorphic trees.
"""

import json
import sys
from pathlib import Path

import networkx as nx

from ctdom.contraction import ct_bruteforce, ct_characterization
from ctdom.domination import gamma
from ctdom.graph import build_graph, make_named_graph

OUT = Path(__file__).resolve().parent.parent / "src" / "ctdom" / "data" / "ct_fixtures.json"


def candidates():
    for H in nx.graph_atlas_g()[1:]:
        if H.number_of_nodes() >= 3 and nx.is_connected(H):
            yield "atlas", build_graph(H.number_of_nodes(), H.edges())
    for n in range(8, 11):
        for T in nx.nonisomorphic_trees(n):
            yield "tree", build_graph(n, T.edges())
    yield "cycle", make_named_graph("C8")


def main():
    best = {}
    for source, G in candidates():
        for kind in ("total", "semitotal"):
            if gamma(G, kind) < 3:
                continue
            brute = ct_bruteforce(G, kind).value
            if brute != ct_characterization(G, kind).value:
                sys.exit(f"characterisation disagrees on {G.edges()}")
            key = f"{kind}:{brute}"
            if key not in best or (G.n, G.m) < (best[key]["n"], best[key]["m"]):
                best[key] = {
                    "kind": kind,
                    "ct": brute,
                    "gamma": gamma(G, kind),
                    "n": G.n,
                    "m": G.m,
                    "edges": G.edges(),
                    "source": source,
                }
    rows = [json.dumps(best[k]) for k in sorted(best)]
    OUT.write_text("[\n " + ",\n ".join(rows) + "\n]\n")
    for k in sorted(best):
        print(k, best[k]["n"], best[k]["m"], best[k]["source"])


if __name__ == "__main__":
    main()
