"""
Certificates that a presented group has no bi-order
===================================================

Each refutation comes with a certificate: rewrite chains through the
relators and permutation quotients, which a verifier replays without
searching.
"""
import json

from ordgroups.presentation import abelianization, biorder_refute, bundled, verify_certificate

for name in ["trefoil", "b3", "klein", "brieskorn237"]:
    p = bundled(name)
    ab = abelianization(p)
    result = biorder_refute(p)
    print(f"{name:13} H1 rank {ab.rank} torsion {list(ab.torsion)}: {result.status} via {result.rule}")
    print("    replay:", verify_certificate(result.certificate, p))

# the Klein bottle relation says y^-1 x y = x^-1 directly
klein = bundled("klein")
r = biorder_refute(klein, rules=("ConjugationInversion",))
print(json.dumps({k: v for k, v in r.certificate.payload.items() if k in ("x", "w")}))
