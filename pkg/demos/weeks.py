"""
The Weeks manifold group has no left order
==========================================

Assume a > 1 (reversing an order keeps it a left order).  The schema then
splits on where b sits.  In each case some product of assumed-positive
words rewrites to the empty word, which is absurd.  This runs in a few
seconds.
"""
from ordgroups.presentation import abelianization, bundled, nonLO_case_analysis, verify_certificate

weeks = bundled("weeks")
print("relators:", [weeks.format_word(r) for r in weeks.relators])
print("abelianization:", abelianization(weeks).to_json())

result = nonLO_case_analysis(weeks)
print(result.status)
print("schema:", result.schema)
for case in result.cases:
    pl = case.certificate.payload
    steps = len(pl["chain"]["steps"])
    print(f"  {case.seed.label:12} product of {len(pl['product'])} factors, {steps} rewrite steps")
print("all certificates replay:", all(verify_certificate(c, weeks) for c in result.certificates))
