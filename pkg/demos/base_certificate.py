"""Apply F^{-1} to the line (X : Y : 0 : 0) and read off the certified form.

Run with ``python demos/base_certificate.py``.
"""

from __future__ import annotations

from blancert.certifier import certify_base, degree_recurrence

cert = certify_base()
print("term counts:", cert.term_counts)
print("Y-degrees of M0, M1, gt2, gt3:", cert.output_degrees)
for name, head in cert.heads.items():
    print(f"  {name}: {head}")
print("form conditions:", all(cert.form_conditions.values()))

# One more step along the recurrence gives the next degree tuple.
d0, d1, d2_bound, d3 = degree_recurrence(cert.output_degrees)
print(f"next degrees: d0 = {d0}, d1 = {d1}, d2 <= {d2_bound}, d3 = {d3}")
