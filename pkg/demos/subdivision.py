"""4-subdividing every edge adds exactly 2 to gamma_t per edge and keeps ct_gamma_t.

The subdivided graph has no cycles shorter than 15, so hardness on
general graphs carries over to graphs of large girth.  The two transforms
move TD sets back and forth between G and its subdivision.
"""

from ctdom import DomKind, ct_characterization, enumerate_dom_sets, four_subdivide, gamma, make_named_graph
from ctdom.reductions import td_transform_down, td_transform_up

T = DomKind.TOTAL

if __name__ == "__main__":
    for name in ("K3", "P5", "C6"):
        G = make_named_graph(name)
        H, path = four_subdivide(G)
        gG, gH = gamma(G, T), gamma(H, T)
        print(f"{name}: n={G.n} m={G.m} -> H: n={H.n} m={H.m}; gamma_t {gG} -> {gH} (expected {gG + 2 * G.m})")
        D = next(enumerate_dom_sets(G, T, gG))
        U = td_transform_up(G, H, path, D)
        back = td_transform_down(G, H, path, U)
        print(f"  D={sorted(G.label(v) for v in range(G.n) if D >> v & 1)} up has {U.bit_count()} vertices, down returns {back.bit_count()}")
        if gG >= 3:
            print(f"  ct_gamma_t: G={ct_characterization(G, T).value} H={ct_characterization(H, T).value}")
