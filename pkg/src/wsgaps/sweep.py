"""Parameter sweep used by the verification suite and the scripts.

Enumerates every valid instance of both curve families inside the desk-scale
window: X with p in {2,3}, a in {1,2}, b | a, n in {3,5}; Y with q in
{2,3,4}, n in {3,5}; s any divisor of (q^n+1)/(q+1) keeping M <= 500 and
the genus positive.
"""

from __future__ import annotations

from .curves import DerivedConstants, ParameterError, curve


def divisors(n: int) -> list[int]:
    out = []
    d = 1
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            if d != n // d:
                out.append(n // d)
        d += 1
    return sorted(out)


def sweep_instances(max_M: int = 500) -> list[DerivedConstants]:
    out = []
    for p in (2, 3):
        for a in (1, 2):
            for b in (x for x in (1, 2) if a % x == 0):
                q = p**a
                for n in (3, 5):
                    for s in divisors((q**n + 1) // (q + 1)):
                        if (q**n + 1) // (s * (q + 1)) > max_M:
                            continue
                        try:
                            out.append(curve("X", p=p, a=a, b=b, n=n, s=s))
                        except ParameterError:
                            pass
    for q in (2, 3, 4):
        for n in (3, 5):
            for s in divisors((q**n + 1) // (q + 1)):
                if (q**n + 1) // (s * (q + 1)) > max_M:
                    continue
                try:
                    out.append(curve("Y", q=q, n=n, s=s))
                except ParameterError:
                    pass
    return out
