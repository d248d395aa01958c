"""The generic inductive step, with timings.  Takes roughly 15 seconds.

Run with ``python demos/generic_step.py``.
"""

from __future__ import annotations

from blancert.certifier import certify_step

cert = certify_step(generic=True)
print("raw term counts:", cert.term_counts)
for name, ok in cert.identities.items():
    print(f"{name:>10}: {'exact' if ok else 'MISMATCH'}")
print("output degree forms:", cert.output_degrees)
print("all degree checks:", all(cert.degree_checks.values()))
print("elapsed:", {k: round(v, 2) for k, v in cert.elapsed.items()})

# The primary parts are small; print the M1 one in full.
print("M1' =", cert.form.M1)
