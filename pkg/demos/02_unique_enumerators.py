#!/usr/bin/env python3
"""The unique minimal-shadow enumerators for lengths 24m+2, 24m+4, 24m+10.

For these families the low-order pins determine every Gleason
coefficient, so each length has exactly one candidate weight enumerator.
The first shadow coefficients beyond the pins, b_m and b_{m+1}, also
have closed forms; the solver and the closed forms must agree exactly.
"""

from minshadow import (closed_form_a2m1, closed_form_bm, closed_form_bm1,
                       family_case, solve)
from minshadow.exact import format_exact

for tag in ("24m+2", "24m+4", "24m+10"):
    case = family_case(tag)
    print(f"family {tag}")
    for m in (1, 2, 3):
        enum = solve(case, m)
        fam = enum.fam
        bm = enum.b[m].as_fraction()
        bm1 = enum.b[m + 1].as_fraction()
        assert bm == closed_form_bm(case, m)
        assert bm1 == closed_form_bm1(case, m)
        line = (f"   n={fam.n}: d={case.d(m)},  "
                f"b at y^{fam.shadow_exponent(m)} = {format_exact(bm)},  "
                f"b at y^{fam.shadow_exponent(m + 1)} = {format_exact(bm1)}")
        if tag == "24m+10":
            a = enum.a[2 * m + 1].as_fraction()
            assert a == closed_form_a2m1(m) == bm
            line += f",  a at y^{2 * (2 * m + 1)} = {format_exact(a)} (= b_m)"
        print(line)
    print()

print("cross-check at m = 1: 20/1575, 78, 6/1576 as expected")
