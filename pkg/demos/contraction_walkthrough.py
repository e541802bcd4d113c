"""How many edge contractions does it take to lower gamma_t or gamma_t2?

Runs the brute-force search and the characterisation side by side on the
frozen fixtures and prints the certificate each one produces.
"""

from ctdom import DomKind, build_graph, ct_bruteforce, ct_characterization, make_named_graph, verify_certificate
from ctdom.suites import load_fixtures


def show(name, G, kind):
    brute = ct_bruteforce(G, kind)
    char = ct_characterization(G, kind)
    print(f"{name:>14} {kind.value:>9}: gamma={char.gamma} ct={char.value} (brute force says {brute.value})")
    if brute.certificate and brute.certificate.sequence:
        print(f"{'':>26}contract {brute.certificate.sequence}")
    cert = char.certificate
    if cert and cert.witness:
        shape, w = cert.witness
        print(f"{'':>26}{shape} inside D={sorted(cert.to_json()['dom_set'])}: {list(w)}")
    elif char.value == 3:
        print(f"{'':>26}no level-1 or level-2 witness exists, so three contractions are needed")
    assert verify_certificate(G, kind, char)


if __name__ == "__main__":
    for kind in (DomKind.TOTAL, DomKind.SEMITOTAL):
        show("C6", make_named_graph("C6"), kind)
    print()
    for fx in load_fixtures():
        G = build_graph(fx["n"], fx["edges"])
        show(f"fixture n={fx['n']}", G, DomKind.parse(fx["kind"]))
