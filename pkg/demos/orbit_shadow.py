"""Numeric 2-adic shadow of the orbit for one integer parameter choice.

Run with ``python demos/orbit_shadow.py``.
"""

from __future__ import annotations

from blancert.certifier import orbit_sanity, w_value

params = {"2001": 2, "1200": 5, "1110": 7, "1101": 11, "0210": 13}
print("w =", w_value(params))

report = orbit_sanity(params, X=3, Y=5, n=4)
for step in report.steps:
    print(f"step {step.index}: {step.bits:>6} bits, raw 2-adic valuations {step.raw_valuations}, "
          f"pattern ok {step.pattern_ok}")
print("contradiction:", report.contradiction)
