#!/usr/bin/env python3
"""Experiment: induction back from the D_4 restriction.

The defining 5-dimensional module of the zigzag incidence algebra
restricts to an indecomposable D_4 module with dimension vector
(1,2,1,1).  This script also induces that restriction back up along the
embedding and decomposes the result, a direction the theory leaves open.

    python scripts/restriction_experiment.py
"""

from __future__ import annotations

import os
import sys

sys.path.insert(0, os.path.join(os.path.dirname(__file__), "..", "src"))

from maxsub.algebra import subalgebra_from_rows
from maxsub.extensions import decompose_module, induce, restrict
from maxsub.linalg import QQ, vec_add
from maxsub.modules import make_module
from maxsub.presentations import (
    Poset,
    dimension_vector,
    incidence_algebra,
    interval_index,
)

ZIGZAG = Poset(("1", "2", "3", "4", "5"),
               (("2", "1"), ("2", "3"), ("4", "3"), ("4", "5")))


def main():
    inc = incidence_algebra(ZIGZAG, QQ)
    elems = list(ZIGZAG.elements)
    mats = []
    for name in inc.basis_names:
        a, b = name[1:-1].split(",")
        m = [[0] * 5 for _ in range(5)]
        m[elems.index(a)][elems.index(b)] = 1
        mats.append(m)
    defmod = make_module(inc, mats, check=True)
    print("defining module over the zigzag incidence algebra:",
          dimension_vector(defmod))

    def bv(a, b):
        return list(inc.basis_vector(interval_index(inc, a, b)))

    rows = [bv("1", "1"), bv("2", "1"),
            vec_add(bv("2", "2"), bv("4", "4"), QQ),
            vec_add(bv("2", "3"), bv("4", "3"), QQ),
            bv("3", "3"), bv("4", "5"), bv("5", "5")]
    emb = subalgebra_from_rows(inc, rows)
    restr = restrict(defmod, emb)
    parts = decompose_module(restr)
    print("restriction to the embedded D_4:",
          [p.dim for p in parts], "summand(s)")

    back = induce(restr, emb)
    back_parts = decompose_module(back)
    print("induction back up: dim", back.dim, "->",
          [p.dim for p in back_parts], "summands")
    from maxsub.extensions import is_direct_summand
    print("defining module recovered as a summand:",
          is_direct_summand(defmod, back))


if __name__ == "__main__":
    main()
