#!/usr/bin/env python3
"""Exact bilinear-form determinants for full simplexes and the 55-element case.

Prints det(J^T J) of the parametrization Jacobian for the complete complexes
on 1..max vertices next to the conjectured closed form 3^(sum C(n,k)(n-k)),
then the simplicial complex generated by {1,2,3,4,5} and {3,4,5,6,7}.
"""

import argparse
import time

from setfield import generate
from setfield.kaehler import (complete_complex_exponent, exact_det_factor,
                              kaehler_form)
from setfield.setsystem import complete_complex


def fmt_factors(factors):
    return " * ".join("%d^%d" % (p, e) if e > 1 else str(p)
                      for p, e in factors) or "1"


def main():
    parser = argparse.ArgumentParser()
    parser.add_argument("--max-vertices", type=int, default=5,
                        help="largest full simplex to evaluate (6 is slow-ish)")
    args = parser.parse_args()
    print("%-8s %-4s %-22s %s" % ("complex", "n", "det factorization",
                                  "conjectured"))
    for v in range(1, args.max_vertices + 1):
        system = complete_complex(v)
        t0 = time.time()
        det, factors = exact_det_factor(kaehler_form(system))
        expo = complete_complex_exponent(v)
        agree = "3^%d %s" % (expo, "OK" if det == 3 ** expo else "MISMATCH")
        print("%-8s %-4d %-22s %s  (%.1fs)"
              % ("full-%d" % v, len(system), fmt_factors(factors), agree,
                 time.time() - t0))

    big = generate([[1, 2, 3, 4, 5], [3, 4, 5, 6, 7]])
    t0 = time.time()
    det, factors = exact_det_factor(kaehler_form(big))
    print("%-8s %-4d %-22s %s  (%.1fs)"
          % ("two-5s", len(big), fmt_factors(factors), "", time.time() - t0))


if __name__ == "__main__":
    main()
