"""Time Sturm chain construction for the degree-210 Delta polynomial.

Compares the primitive integer chain against the rational one normalized by
the leading coefficient.  The rational chain is slow; pass --rational to
include it.
"""

import argparse
import time

from sturmcert.cert import _delta_poly
from sturmcert.sturm import build_chain


def timed(label, fn):
    t0 = time.perf_counter()
    out = fn()
    print(f"{label:<28} {time.perf_counter() - t0:8.2f}s")
    return out


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--rational", action="store_true")
    args = ap.parse_args()

    p = timed("expand Delta (deg 210)", _delta_poly)
    chain = timed("primitive chain", lambda: build_chain(p, "primitive"))
    bits = max(c.numerator.bit_length() for m in chain.members for c in m.coeffs)
    print(f"  {len(chain)} members, largest coefficient has {bits} bits")
    if args.rational:
        timed("rational chain", lambda: build_chain(p, "paper"))


if __name__ == "__main__":
    main()
