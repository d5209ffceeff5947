#!/usr/bin/env python3
"""Build data/orbit_tables.json from the row transcriptions below.

Each row gives the infinitesimal character as an affine expression in
n1, n2, ... (the nu-string) together with the centralizer factors and the
slots they own.  Before writing, every row is checked:

  * the parameter lies in the span of the ambient root system,
  * at nu = 0 it is conjugate to h/2 (dominant form has simple
    coordinates in {0, 1/2, 1}),
  * E7/E8: the reductive centralizer recomputed from root data has the
    listed Cartan type and each component only involves its own slots,
  * E6: the parameter is hermitian for random nu.

Usage: transcribe_tables.py [--out data/orbit_tables.json] [--check-only]
"""

import argparse
import itertools
import json
import random
import sys
from collections import defaultdict
from fractions import Fraction as F
from pathlib import Path

import sympy as sp

NS = sp.symbols("n1:9")
LOC = {f"n{i + 1}": s for i, s in enumerate(NS)}
LOC["V"] = lambda *xs: sp.Matrix([sp.nsimplify(x) for x in xs])

W7 = "V(0,0,0,0,0,1,1,2)"
W8 = "V(0,0,0,0,0,0,1,1)"
H8 = "V(0,0,0,0,0,0,0,2)"
S7 = "V(0,0,0,0,0,0,-1,1)"
S7h = "V(0,0,0,0,0,1,-1/2,1/2)"
HALF = "V(1/2,1/2,1/2,1/2,1/2,-1/2,-1/2,1/2)"

# (label, chi expression, factors, note)
# factors: space separated "KIND:slots"; slot 0 is pinned to zero.
E6_ROWS = [
    ("E6", "V(0,1,2,3,4,-4,-4,4)", "", ""),
    ("E6(a1)", "V(0,1,1,2,3,-3,-3,3)", "", ""),
    ("D5", "V(1/2,1/2,3/2,3/2,5/2,-5/2,-5/2,5/2)", "T1:", ""),
    ("E6(a3)", "V(0,0,1,1,2,-2,-2,2)", "", ""),
    ("D5(a1)", "V(1/4,3/4,3/4,5/4,{s}7/4,-7/4,-7/4,7/4)", "T1:",
     "printed vector has seven entries; fifth coordinate restored, sign fixed by the h/2 test"),
    ("A5", f"V(-11/4,-7/4,-3/4,1/4,5/4,-5/4,-5/4,5/4)+n1*{HALF}", "A1:1", ""),
    ("A4+A1", "V(0,1/2,1/2,1,3/2,-3/2,-3/2,3/2)", "T1:", ""),
    ("D4", "V(0,1,2,3,n1,-n1,-n1,n1)", "A2:1", ""),
    ("A4", f"V(-2,-1,0,1,2,0,0,0)+n1*{HALF}", "A1:1 T1:", ""),
    ("D4(a1)", "V(0,0,1,1,1,-1,-1,1)", "T2:", ""),
    ("A3+A1", f"V(-5/4,-1/4,3/4,-5/4,-1/4,-3/4,-3/4,3/4)+n1*{HALF}", "A1:1 T1:", ""),
    ("2A2+A1", "V(0,1,-3/2,-1/2,1/2,-1/2,-1/2,1/2)+n1*V(0,0,1,1,1,-1,-1,1)", "A1:1", ""),
    ("A3", "V(-3/2,-1/2,1/2,3/2,0,0,0,0)+n1/2*V(1,1,1,1,0,0,0,0)+n2/2*V(0,0,0,0,1,-1,-1,1)",
     "B2:1,2 T1:", ""),
    ("A2+2A1", "V(5/4,-1/4,3/4,-3/4,1/4,-1/4,-1/4,1/4)+n1*V(-1/2,1/2,1/2,3/2,3/2,-3/2,-3/2,3/2)",
     "A1:1 T1:", ""),
    ("2A2", "V(-1/2,1/2,-3/2,-1/2,1/2,-1/2,-1/2,1/2)+n2/2*V(1,1,1,1,1,-1,-1,1)+n1*V(0,0,1,1,1,-1,-1,1)",
     "G2:1,2", ""),
    ("A2+A1", f"V(-1/2,1/2,-1,0,-1/2,-1/2,-1/2,1/2)+n1*{HALF}", "A2:1 T1:", ""),
    ("A2", "V(0,-1,0,1,0,0,0,0)+(n2-n1)/2*V(1,1,1,1,0,0,0,0)+(n1+n2)/2*V(0,0,0,0,1,-1,-1,1)",
     "A2:1 A2:2", "sixth and seventh entries printed as (-n1+n2)/2; hermitian form needs -(n1+n2)/2"),
    ("3A1", "V(0,1,-1/2,1/2,0,0,0,0)+V(0,0,n2,n2,n1,-n1,-n1,n1)", "A2:1 A1:2",
     "third entry printed as n1; the hermitian test forces n2"),
    ("2A1", "V(-1/2,1/2,-1/2,1/2,0,0,0,0)+(n2-n1)/2*V(1,1,0,0,0,0,0,0)+(n1+n2)/2*V(0,0,1,1,0,0,0,0)"
     "+n1/2*V(0,0,0,0,1,-1,-1,1)", "B3:1,2,0 T1:",
     "nu-string has two entries for B3; the third hermitian slot is identically zero"),
    ("A1", "V(1/2,1/2,0,0,0,0,0,0)+V((n2-n1)/2,(n1-n2)/2,(n2-n1)/2+n3,(n1-n2)/2+n3,"
     "(n1+n2)/2,-(n1+n2)/2,-(n1+n2)/2,(n1+n2)/2)", "A5:1,2,3", ""),
]

E7_ROWS = [
    ("E7", "V(0,1,2,3,4,5,-17/2,17/2)", "", ""),
    ("E7(a1)", "V(0,1,1,2,3,4,-13/2,13/2)", "", ""),
    ("E7(a2)", "V(0,1,1,2,2,3,-11/2,11/2)", "", ""),
    ("E7(a3)", "V(0,0,1,1,2,3,-9/2,9/2)", "", ""),
    ("E6", f"V(0,1,2,3,4,-4,-4,4)+n1*{S7h}", "A1l:1", ""),
    ("D6", f"V(0,1,2,3,4,5,0,0)+n1*{S7}", "A1:1", ""),
    ("E6(a1)", f"V(0,1,1,2,3,-3,-3,3)+n1*{S7h}", "T1:1", ""),
    ("E7(a4)", "V(0,0,1,1,1,2,-7/2,7/2)", "", ""),
    ("D6(a1)", f"V(0,1,1,2,3,4,0,0)+n1*{S7}", "A1:1", ""),
    ("A6", "V(-7/2,-5/2,-3/2,-1/2,1/2,3/2,-3/2,3/2)+n1*V(1/2,1/2,1/2,1/2,1/2,1/2,-1,1)", "A1l:1", ""),
    ("D5+A1", "V(0,1,2,3,-5/2,-3/2,-2,2)+n1*V(0,0,0,0,1,1,-1,1)", "A1:1", ""),
    ("E7(a5)", "V(0,0,1,1,1,2,-5/2,5/2)", "", ""),
    ("D6(a2)", f"V(0,1,1,2,2,3,0,0)+n1*{S7}", "A1:1", ""),
    ("A5+A1", "V(11/4,-7/4,-3/4,1/4,5/4,9/4,-1/4,1/4)+n1*V(-1/2,1/2,1/2,1/2,1/2,1/2,-3/2,3/2)", "A1:1", ""),
    ("D5", "V(0,1,2,3,-2,-2,-2,2)+n1*V(0,0,0,0,1,1,-1,1)+n2*V(0,0,0,0,-1,1,0,0)", "A1:1 A1:2", ""),
    ("E6(a3)", f"V(0,0,1,1,2,-2,-2,2)+n1*{S7h}", "A1l:1", ""),
    ("D5(a1)+A1", "V(0,1,1,2,-2,-1,-3/2,3/2)+n1*V(0,0,0,0,1,1,-1,1)", "A1l:1", ""),
    ("(A5)'", f"V(-5/2,-3/2,-1/2,1/2,3/2,5/2,0,0)+n1*{S7}+n2*V(1/2,1/2,1/2,1/2,1/2,1/2,0,0)",
     "A1:1 A1l:2", ""),
    ("A4+A2", "V(0,1,2,-2,-1,0,-1,1)+n1*V(0,0,0,1,1,1,-3/2,3/2)", "A1l:1", ""),
    ("(A5)''", f"V(5/2,-3/2,-1/2,1/2,3/2,5/2,0,0)+n2*{S7}+n1*V(-1/2,1/2,1/2,1/2,1/2,1/2,-3/2,3/2)",
     "G2:1,2", ""),
    ("D5(a1)", f"V(0,1,1,2,3,0,0,0)+n1*{S7}+n2*{S7h}", "A1:1 T1:2", ""),
    ("A4+A1", "V(9/4,-5/4,-1/4,3/4,7/4,-1/4,-1/4,1/4)+n1*V(-1/2,1/2,1/2,1/2,1/2,-1/2,-1,1)"
     "+n2*V(0,0,0,0,0,1,-1/2,1/2)", "T2:1,2",
     "printed seventh constant entry -1/2 leaves the E7 span, set to -1/4; printed n1 direction "
     "(1/2,..,1/2,-1,1) is not orthogonal to h/2 and is replaced by the torus vector with entries one and six negated"),
    ("D4+A1", "V(0,1,2,3,-1/2,1/2,0,0)+n1*V(0,0,0,0,-1/2,-1/2,-1/2,1/2)+n2*V(0,0,0,0,1/2,1/2,-1/2,1/2)",
     "B2:1,2", ""),
    ("A3+A2+A1", "V(0,1,-2,-1,0,1,-1/2,1/2)+n1*V(0,0,1,1,1,1,-2,2)", "A1:1", ""),
    ("A4", f"V(0,-2,-1,0,1,2,0,0)+n1*{S7}+n2*V(-1/2,1/2,1/2,1/2,1/2,1/2,-3/2,3/2)"
     "+n3*V(1/2,1/2,1/2,1/2,1/2,1/2,-1,1)", "A2:1,2 T1:3", ""),
    ("A3+A2", f"V(0,1,2,-1,0,1,0,0)+n1*{S7}+n2*V(0,0,0,1,1,1,0,0)", "A1:1 T1:2", ""),
    ("D4", "V(0,1,2,3,n2-n1,n2+n1,-n3,n3)", "C3:1,2,3", ""),
    ("D4(a1)+A1", "V(0,1,1,2,-1/2,1/2,0,0)+V(0,0,0,0,n2,n2,-n1,n1)", "A1:1 A1:2", ""),
    ("A3+2A1", "V(0,1,-3/2,-1/2,1/2,3/2,0,0)+V(0,0,n2,n2,n2,n2,-n1,n1)", "A1:1 A1:2", ""),
    ("D4(a1)", "V(0,1,1,2,n2-n3,n2+n3,-n1,n1)", "A1:1 A1:2 A1:3", ""),
    ("(A3+A1)'", "V(0,1,2,0,-1/2,1/2,0,0)+V(0,0,0,2*n2,n3,n3,-n1,n1)", "A1:1 A1:2 A1:3", ""),
    ("2A2+A1", "V(5/4,-1/4,3/4,-5/4,-1/4,3/4,-1/4,1/4)+n1*V(1,-1,-1,1,1,1,0,0)"
     "+n2*V(-1/2,1/2,1/2,1/2,1/2,1/2,-3/2,3/2)", "A1:1 A1:2", ""),
    ("(A3+A1)''", "V(3/2,-1/2,1/2,3/2,-1/2,1/2,0,0)+V(-n1/2,n1/2,n1/2,n1/2,(n3-n2)/2,(n3-n2)/2,"
     "-(n3+n2)/2,(n3+n2)/2)", "B3:1,2,3", ""),
    ("A2+3A1", "V(0,1,-1,0,-1,0,-1/2,1/2)+n1*V(0,0,1,1,1,1,-2,2)+n2*V(0,0,0,0,1,1,-1,1)", "G2:1,2", ""),
    ("2A2", f"V(-1/2,1/2,-3/2,-1/2,1/2,-1/2,-1/2,1/2)+n1*V(0,0,1,1,1,-1,-1,1)+n2*{HALF}+n3*{S7h}",
     "G2:1,2 A1:3", ""),
    ("A3", "V(0,1,2,n1,n2,n3,-n4,n4)", "B3:1,2,3 A1:4",
     "printed vector has seven entries; the pair (-n4,n4) restored"),
    ("A2+2A1", "V(0,1,-1,0,1,0,0,0)+V(0,0,n2,n2,n2,n3,-n1,n1)", "A1:1 A1l:2 A1l:3", ""),
    ("A2+A1", "V(1,0,1,0,-1/2,1/2,0,0)+V(0,0,0,0,n2,n2,-n1,n1)+n3*V(0,0,0,1,1,1,-3/2,3/2)"
     "+n4*V(-1/2,1/2,1/2,1/2,1/2,1/2,-3/2,3/2)", "A3:1,2,3 T1:4", ""),
    ("4A1", "V(0,1,-1/2,1/2,-1/2,1/2,0,0)+V(0,0,n3,n3,n2,n2,-n1,n1)", "C3:1,2,3", ""),
    ("A2", "V(1,0,1,0,0,0,0,0)+V(0,0,0,0,n2-n3,n2+n3,-n1,n1)+n4*V(-1/2,1/2,1/2,1/2,1/2,1/2,-3/2,3/2)"
     "+n5*V(0,0,0,1,1,1,-3/2,3/2)", "A5:1,2,3,4,5", ""),
    ("(3A1)'", "V(-1/2,1/2,-1/2,1/2,-1/2,1/2,0,0)+V(n1,n1,n2,n2,n3,n3,-n4,n4)", "C3:1,2,3 A1:4", ""),
    ("(3A1)''", "V(1/2,1/2,-1/2,1/2,-1/2,1/2,0,0)+V(-n4,n4,n3,n3,n2,n2,-n1,n1)", "F4:1,2,3,4", ""),
    ("2A1", "V(0,1,n1,n2,n3,n4,-n5,n5)", "B4:1,2,3,4 A1:5", ""),
    ("A1", "V((n1+n2+n3-n4)/2,(n1+n2-n3+n4)/2,(n1-n2+n3+n4)/2,(-n1+n2+n3+n4)/2,"
     "-1/2+(n6-n5)/2,1/2+(n6-n5)/2,-(n5+n6)/2,(n5+n6)/2)", "D6:1,2,3,4,5,6", ""),
]

E8_ROWS = [
    ("E8", "V(0,1,2,3,4,5,6,23)", "", ""),
    ("E8(a1)", "V(0,1,1,2,3,4,5,18)", "", ""),
    ("E8(a2)", "V(0,1,1,2,2,3,4,15)", "", ""),
    ("E8(a3)", "V(0,0,1,1,2,3,4,13)", "", ""),
    ("E8(a4)", "V(0,0,1,1,2,2,3,11)", "", ""),
    ("E7", f"V(0,1,2,3,4,5,-17/2,17/2)+n1*{W8}", "A1:1", ""),
    ("E8(b4)", "V(0,0,1,1,1,2,3,10)", "", ""),
    ("E8(a5)", "V(0,0,1,1,1,2,2,9)", "", ""),
    ("E7(a1)", f"V(0,1,1,2,3,4,-13/2,13/2)+n1*{W8}", "A1:1", ""),
    ("E8(b5)", "V(0,0,1,1,1,2,3,8)", "", ""),
    ("D7", f"V(0,1,2,3,4,5,6,0)+n1*{H8}", "A1:1", ""),
    ("E8(a6)", "V(0,0,1,1,1,2,2,7)", "", ""),
    ("E7(a2)", f"V(0,1,1,2,2,3,-11/2,11/2)+n1*{W8}", "A1:1", ""),
    ("E6+A1", f"V(0,1,2,3,4,-9/2,-7/2,4)+n1*{W7}", "A1:1",
     "printed direction has nine entries; the row uses the same direction as E6(a1)+A1"),
    ("D7(a1)", f"V(0,1,1,2,3,4,5,0)+n1*{H8}", "T1:1", ""),
    ("E8(b6)", "V(0,0,1,1,1,1,2,6)", "", ""),
    ("D7(a2)", f"V(0,1,1,2,2,3,4,0)+n1*{H8}", "T1:1",
     "row absent from the E8 parameter table; taken from the maximal parabolic list"),
    ("E7(a3)", f"V(0,0,1,1,2,3,-9/2,9/2)+n1*{W8}", "A1:1", ""),
    ("E6(a1)+A1", f"V(0,1,1,2,3,-7/2,-5/2,3)+n1*{W7}", "T1:1", ""),
    ("A7", "V(-17/4,-13/4,-9/4,-5/4,-1/4,3/4,7/4,7/4)+n1*V(1/2,1/2,1/2,1/2,1/2,1/2,1/2,5/2)", "{a7}",
     "centralizer printed as T1; root data and the maximal parabolic list both give A1"),
    ("E6", f"V(0,1,2,3,4,-4,-4,4)+n1*{W7}+n2*{W8}", "G2:1,2", ""),
    ("D6", "V(0,1,2,3,4,5,n1,n2)", "B2:1,2", ""),
    ("D5+A2", "V(0,1,2,3,-3,-2,-1,2)+n1*V(0,0,0,0,1,1,1,3)", "T1:1", ""),
    ("E6(a1)", f"V(0,1,1,2,3,-3,-3,3)+n2*{W7}+n1*{W8}", "A2:1,2", ""),
    ("E7(a4)", f"V(0,0,1,1,1,2,-7/2,7/2)+n1*{W8}", "A1:1", ""),
    ("A6+A1", "V(13/4,-9/4,-5/4,-1/4,3/4,7/4,11/4,1/4)+n1*V(-1/2,1/2,1/2,1/2,1/2,1/2,1/2,7/2)", "A1:1", ""),
    ("D6(a1)", f"V(0,1,1,2,3,4,0,0)+n1*{S7}+n2*{W8}", "A1:1 A1:2",
     "second direction printed without its parameter; it is n2"),
    ("A6", "V(-3,-2,-1,0,1,2,3,0)+n2*V(1/2,1/2,1/2,1/2,1/2,1/2,1/2,1/2)"
     "+n1*V(-1/2,-1/2,-1/2,-1/2,-1/2,-1/2,-1/2,7/2)", "A1:1 A1:2",
     "printed n1 direction has seven entries; restored orthogonal to the A6 Levi"),
    ("E8(a7)", "V(0,0,0,1,1,1,1,4)", "", ""),
    ("D5+A1", f"V(0,1,2,3,4,-1/2,1/2,0)+n1*{H8}+n2*V(0,0,0,0,0,1,1,0)", "A1:1 A1:2", ""),
    ("E7(a5)", f"V(0,0,1,1,1,2,-5/2,5/2)+n1*{W8}", "A1:1", ""),
    ("E6(a3)+A1", f"V(0,0,1,1,2,-5/2,-3/2,2)+n1*{W7}", "A1:1", ""),
    ("D6(a2)", "V(0,1,1,2,2,3,n2-n1,n1+n2)", "A1:1 A1:2", ""),
    ("D5(a1)+A2", "V(0,1,1,2,-5/2,-3/2,-1/2,3/2)+n1*V(0,0,0,0,1,1,1,3)", "A1:1", ""),
    ("A5+A1", "V(1/4,-11/4,-7/4,-3/4,1/4,5/4,9/4,1/4)+n2*V(-1,0,0,0,0,0,0,1)"
     "+n1*V(3/2,1/2,1/2,1/2,1/2,1/2,1/2,3/2)", "A1:1 A1:2", ""),
    ("A4+A3", "V(0,1,2,-5/2,-3/2,-1/2,1/2,1)+n1*V(0,0,0,1,1,1,1,4)", "A1:1", ""),
    ("D5", "V(0,1,2,3,4,n1,n2,n3)", "B3:1,2,3", ""),
    ("E6(a3)", f"V(0,0,1,1,2,-2,-2,2)+n1*{W7}+n2*{W8}", "G2:1,2", ""),
    ("D4+A2", f"V(0,1,2,3,-1,0,1,0)+n2*V(0,0,0,0,1,1,1,3)+n1*{H8}", "A2:1,2", ""),
    ("A4+A2+A1", "V(0,1,-5/2,-3/2,-1/2,1/2,3/2,1/2)+n1*V(0,0,1,1,1,1,1,5)", "A1:1", ""),
    ("D5(a1)+A1", "V(0,1,1,2,3,-1/2+n2,1/2+n2,2*n1)", "A1l:1 A1:2", ""),
    ("A5", f"V(5/2,-3/2,-1/2,1/2,3/2,5/2,0,0)+n1*V(-1/2,1/2,1/2,1/2,1/2,1/2,-3/2,3/2)+n2*{S7}+n3*{W8}",
     "G2:1,2 A1:3", ""),
    ("A4+A2", "V(-1/2,1/2,-5/2,-3/2,-1/2,1/2,3/2,1/2)+n2*V(1,1,0,0,0,0,0,0)+n1*V(0,0,1,1,1,1,1,5)",
     "A1:1 A1:2", ""),
    ("A4+2A1", f"V(0,1,-2,-1,0,1,2,0)+n1*{H8}+n2*V(0,0,1,1,1,1,1,0)", "A1:1 T1:2", ""),
    ("D5(a1)", "V(0,1,1,2,3,n3,n2,n1)", "A3:1,2,3", ""),
    ("2A3", "V(0,1,2,-3/2,-1/2,1/2,3/2,0)+n1*V(0,0,0,-1/2,-1/2,-1/2,-1/2,1)"
     "+n2*V(0,0,0,1/2,1/2,1/2,1/2,1)", "B2:1,2",
     "n1 direction missing; completed so the centralizer roots read e1, e2, e1+e2, e2-e1 in (n1,n2)"),
    ("A4+A1", f"V(0,1,2,-3/2,-1/2,-1,-1,1)+n2*{W7}+n1*{W8}+n3*V(0,0,0,1,1,1,1,4)", "A2:1,2 T1:3", ""),
    ("D4(a1)+A2", f"V(0,1,1,2,-1,0,1,0)+n1*V(0,0,0,0,1,1,1,3)+n2*{H8}", "A2:1,2", ""),
    ("D4+A1", "V(0,1,2,3,-1/2,1/2,0,0)+V(0,0,0,0,n1,n1,n3-n2,n2+n3)", "C3:1,2,3", ""),
    ("A3+A2+A1", f"V(0,1,-2,-1,0,1,-1/2,1/2)+n1*V(0,0,1,1,1,1,-2,2)+n2*{W8}", "A1:1 A1:2", ""),
    ("A4", "V(0,-2,-1,0,1,2,0,0)+V(n4,n3,n3,n3,n3,n3,n2-n1,n1+n2)", "A4:1,2,3,4",
     "entries two and seven of the nu part printed transposed"),
    ("A3+A2", "V(0,1,2,-1,0,1,0,0)+V(0,0,0,n3,n3,n3,n1,n2)", "B2:1,2 T1:3", ""),
    ("D4(a1)+A1", "V(0,1,1,2,-1/2,1/2,0,0)+V(0,0,0,0,n1,n1,n3-n2,n2+n3)", "A1:1 A1:2 A1:3", ""),
    ("A3+2A1", "V(0,1,-3/2,-1/2,1/2,3/2,0,0)+V(0,0,n1,n1,n1,n1,n2,n3)", "A1:1 B2:2,3", ""),
    ("2A2+2A1", "V(0,1,-3/2,-1/2,1/2,-1,0,1/2)+n1*V(0,0,-1/2,-1/2,-1/2,1,1,1/2)"
     "+n2*V(0,0,1/2,1/2,1/2,0,0,3/2)", "B2:1,2", ""),
    ("D4", "V(0,1,2,3,n3-n4,n3+n4,n1-n2,n1+n2)", "F4:1,2,3,4", ""),
    ("D4(a1)", "V(0,1,1,2,n4,n3,n2,n1)", "D4:1,2,3,4", ""),
    ("A3+A1", "V(0,1,2,-1/2,1/2,0,0,0)+V(0,0,0,n1,n1,n2,n3,n4)", "A1:1 B3:2,3,4", ""),
    ("2A2+A1", f"V(0,1,-3/2,-1/2,1/2,-1/2,-1/2,1/2)+n1*V(0,0,1,1,1,-1,-1,1)+n2*{W7}+n3*{W8}",
     "A1:1 G2:2,3", ""),
    ("2A2", f"V(-1/2,1/2,-3/2,-1/2,1/2,-1/2,-1/2,1/2)+n1*V(0,0,1,1,1,-1,-1,1)+n2*{HALF}+n3*{W7}+n4*{W8}",
     "G2:1,2 G2:3,4", ""),
    ("A2+3A1", f"V(0,1,-1,0,-1,0,-1/2,1/2)+n1*V(0,0,1,1,1,1,-2,2)+n2*V(0,0,0,0,1,1,-1,1)+n3*{W8}",
     "G2:1,2 A1:3", ""),
    ("A3", "V(0,1,2,n1,n2,n3,n4,n5)", "B5:1,2,3,4,5", ""),
    ("A2+2A1", "V(0,1,-1,0,1,0,0,0)+V(0,0,n1,n1,n1,n2,n3,n4)", "A1l:1 B3:2,3,4",
     "centralizer printed A1B3; the nu1 factor is A1l (0<=nu1<1), matching its restricted root"),
    ("A2+A1", "V(1,0,1,0,-1/2,1/2,0,0)+V(-n5,n5,n5,n4,n3,n3,n1-n2,n1+n2)", "A5:1,2,3,4,5", ""),
    ("4A1", "V(0,1,-1/2,1/2,-1/2,1/2,0,0)+V(0,0,n1,n1,n2,n2,n4-n3,n3+n4)", "C4:1,2,3,4", ""),
    ("A2", "V((n1-n2-n3+n4)/2,(-n1+n2-n3+n4)/2,(-n1-n2+n3+n4)/2,(n1+n2+n3+n4)/2,"
     "-1+(n5-n6)/2,(n5-n6)/2,1+(n5-n6)/2,(n5+3*n6)/2)", "E6:1,2,3,4,5,6", ""),
    ("3A1", f"V(1/2,1/2,-1/2,1/2,-1/2,1/2,0,0)+V(-n4,n4,n3,n3,n2,n2,-n1,n1)+n5*{W8}", "F4:1,2,3,4 A1:5", ""),
    ("2A1", "V(0,1,n1,n2,n3,n4,n5,n6)", "B6:1,2,3,4,5,6", ""),
    ("A1", "V((n1+n2+n3-n4)/2,(n1+n2-n3+n4)/2,(n1-n2+n3+n4)/2,(-n1+n2+n3+n4)/2,"
     "(-n5-n6+2*n7)/2,-1/2+(n6-n5)/2,1/2+(n6-n5)/2,(n5+n6+2*n7)/2)", "E7:1,2,3,4,5,6,7", ""),
]

# Explicit regions.  Each region is a list of inequalities "lhs REL rhs"
# with lhs linear in n1.. ; chains are split by hand.
EXCEPTIONS = {
    ("E7", "A2+2A1"): [
        ["n1>=0", "n1<1/2", "n2>=0", "n2<1", "n3>=0", "n3<1", "n1+3*n2/2+n3/2<3/2"],
        ["n1>=0", "n1<1/2", "n2>=0", "n2<1", "n3>=0", "n3<1", "-n1+3*n2/2+n3/2<3/2", "n1+3*n2/2-n3/2>3/2"],
        ["n1>=0", "n1<1/2", "n2>=0", "n2<1", "n3>=0", "n3<1", "3*n2/2+n3/2>3/2", "n1+3*n2/2-n3/2<3/2"],
    ],
    ("E8", "A4+A2+A1"): [
        ["n1>=0", "n1<3/10"],
    ],
    ("E8", "D5(a1)+A1"): [
        ["n2>=0", "n2<1/2", "2*n1+n2<3/2"],
        ["n1>=0", "n1<1", "2*n1-n2>3/2"],
    ],
    ("E8", "A4+A2"): [
        ["n2>=0", "n2<1/2", "5*n1+n2<2"],
        ["n1>=0", "n1<1/2", "5*n1-n2>2"],
    ],
    ("E8", "A2+3A1"): [
        ["3*n1+2*n2<1", "n3>=0", "n3<1/2"],
        ["2*n1+n2<1", "3*n1+n2>1", "n3>=0", "n3<1/2", "3*n1+2*n2+n3<3/2"],
        ["2*n1+n2<1", "3*n1+n2>1", "n3>=0", "n3<1/2", "3*n1+n2+n3<3/2", "3*n1+2*n2-n3>3/2"],
        ["2*n1+n2<1", "3*n1+n2>1", "n3>=0", "n3<1/2", "3*n1+2*n2-n3<3/2", "3*n1+n2+n3>3/2"],
    ],
    ("E8", "A2+2A1"): [
        ["n1>=0", "n1<1", "n3+n4<1", "3*n1+n2+n3+n4<3"],
        ["n1>=0", "n1<1", "n3+n4<1", "3*n1+n2-n3+n4<3", "3*n1-n2+n3+n4>3"],
        ["n1>=0", "n1<1", "n3+n4<1", "3*n1-n2-n3+n4>3"],
        ["n1>=0", "n1<1", "n3+n4<1", "3*n1+n2+n3-n4>3"],
        ["n1>=0", "n1<1", "n2+n4>1", "n2+n3<1", "n4<1", "3*n1+n2+n3+n4<3"],
        ["n1>=0", "n1<1", "n2+n4>1", "n2+n3<1", "n4<1", "3*n1-n2-n3+n4>3"],
        ["n1>=0", "n1<1", "n2+n4>1", "n2+n3<1", "n4<1", "3*n1+n2+n3-n4>3"],
    ],
    ("E8", "4A1"): [
        ["n1>=0", "n2-n1>=0", "n3-n2>=0", "n4-n3>=0", "n4<1/2"],
        ["n1+n4<1", "n2+n3<1", "n2+n4>1", "-n1+n3+n4<3/2", "n1+n3+n4>3/2"],
    ],
}
EXCEPTION_NOTES = {
    ("E8", "4A1"): "first region printed with 'nu-2' for n2",
}

# Orbits singled out as exceptional in the statement of the main result.
# Those without an explicit region list are answered only at nu = 0.
FLAGGED = {("E7", "A2+3A1"), ("E8", "A4+A2+A1"), ("E8", "A4+A2"), ("E8", "D4(a1)+A2"),
           ("E8", "A3+2A1"), ("E8", "A2+2A1"), ("E8", "4A1")}

# Maximal parabolic orbits in E8 and the end of their complementary series.
MAXPAR = [
    ("E7", "1/2"), ("E7(a1)", "1/2"), ("D7", "1/2"), ("E7(a2)", "1/2"), ("A7", "1/2"), ("E7(a5)", "1/2"),
    ("E6+A1", "1/2"), ("E7(a3)", "1/2"), ("E7(a4)", "1/2"), ("A6+A1", "1/2"), ("E6(a3)+A1", "1/2"),
    ("D5(a1)+A2", "1/2"), ("A4+A3", "1/2"),
    ("D7(a1)", "0"), ("E6(a1)+A1", "0"), ("D7(a2)", "0"), ("D5+A2", "0"),
    ("A4+A2+A1", "3/10"),
]


# ---------------------------------------------------------------- roots

def e8_roots():
    out = []
    for i, j in itertools.combinations(range(8), 2):
        for si, sj in itertools.product((1, -1), repeat=2):
            v = [F(0)] * 8
            v[i], v[j] = F(si), F(sj)
            out.append(tuple(v))
    for signs in itertools.product((1, -1), repeat=8):
        if signs.count(-1) % 2 == 0:
            out.append(tuple(F(s, 2) for s in signs))
    return out


def dot(a, b):
    return sum(x * y for x, y in zip(a, b))


E8 = e8_roots()
SIMPLE = [tuple(F(x) for x in v) for v in [
    (F(1, 2), F(-1, 2), F(-1, 2), F(-1, 2), F(-1, 2), F(-1, 2), F(-1, 2), F(1, 2)),
    (1, 1, 0, 0, 0, 0, 0, 0), (-1, 1, 0, 0, 0, 0, 0, 0), (0, -1, 1, 0, 0, 0, 0, 0),
    (0, 0, -1, 1, 0, 0, 0, 0), (0, 0, 0, -1, 1, 0, 0, 0), (0, 0, 0, 0, -1, 1, 0, 0),
    (0, 0, 0, 0, 0, -1, 1, 0)]]


def in_span(ambient, v):
    if ambient == "E7":
        return v[6] + v[7] == 0
    if ambient == "E6":
        return v[5] == v[6] == -v[7]
    return True


def ambient_roots(ambient):
    return [b for b in E8 if in_span(ambient, b)]


def rank_of(ambient):
    return int(ambient[1])


def dominant(ambient, v):
    simple = SIMPLE[:rank_of(ambient)]
    v = list(v)
    moved = True
    while moved:
        moved = False
        for a in simple:
            p = dot(a, v)
            if p < 0:
                v = [x - 2 * p * y / dot(a, a) for x, y in zip(v, a)]
                moved = True
    return tuple(v)


def simple_pairings(ambient, v):
    return [dot(a, v) for a in SIMPLE[:rank_of(ambient)]]


def is_half_h(ambient, v):
    return all(p in (0, F(1, 2), 1) for p in simple_pairings(ambient, dominant(ambient, v)))


# ------------------------------------------------------- centralizer type

def centralizer(ambient, h2, cols):
    """Restricted roots of the reductive centralizer, in the basis cols.

    The multiplicity of a restricted weight gamma is (#beta with <beta,h/2>=0)
    minus (#beta with <beta,h/2>=1) over roots beta restricting to gamma."""
    if not cols:
        return []
    cnt = defaultdict(lambda: [0, 0])
    for b in ambient_roots(ambient):
        g = tuple(dot(b, c) for c in cols)
        if all(x == 0 for x in g):
            continue
        k = dot(b, h2)
        if k == 0:
            cnt[g][0] += 1
        elif k == 1:
            cnt[g][1] += 1
    out = []
    for g, (m0, m1) in cnt.items():
        if m0 - m1 > 0:
            out.append(g)
    # express each restricted root as a vector in span(cols) via the Gram matrix
    gram = sp.Matrix([[dot(a, b) for b in cols] for a in cols])
    inv = gram.inv()
    roots = []
    for g in out:
        c = inv * sp.Matrix(g)
        vec = tuple(sum(F(str(c[i])) * cols[i][k] for i in range(len(cols))) for k in range(8))
        roots.append((g, vec))
    return roots


def classify(roots):
    """Split restricted roots into irreducible components; return list of
    (type string, set of nu indices the component depends on)."""
    vecs = [v for _, v in roots]
    n = len(vecs)
    parent = list(range(n))

    def find(i):
        while parent[i] != i:
            parent[i] = parent[parent[i]]
            i = parent[i]
        return i
    for i in range(n):
        for j in range(i + 1, n):
            if dot(vecs[i], vecs[j]) != 0:
                parent[find(i)] = find(j)
    comps = defaultdict(list)
    for i in range(n):
        comps[find(i)].append(i)
    out = []
    for idx in comps.values():
        vs = [vecs[i] for i in idx]
        rank = sp.Matrix([list(v) for v in vs]).rank()
        size = len(vs)
        lengths = sorted({dot(v, v) for v in vs})
        if len(lengths) == 1:
            kind = {rank * (rank + 1): f"A{rank}"}.get(size)
            if kind is None and rank >= 4 and size == 2 * rank * (rank - 1):
                kind = f"D{rank}"
            if kind is None:
                kind = {72: "E6", 126: "E7"}.get(size, f"?{rank}/{size}")
        else:
            long_count = sum(1 for v in vs if dot(v, v) == lengths[-1])
            if size == 12 and rank == 2 and long_count == 6 and lengths[-1] == 3 * lengths[0]:
                kind = "G2"
            elif size == 48 and rank == 4:
                kind = "F4"
            elif size == 2 * rank * rank:
                if rank == 2:
                    kind = "B2"
                else:
                    kind = f"B{rank}" if long_count == 2 * rank * (rank - 1) else f"C{rank}"
            else:
                kind = f"?{rank}/{size}"
        slots = set()
        for i in idx:
            g = roots[i][0]
            slots |= {k for k, x in enumerate(g) if x != 0}
        out.append((kind, slots))
    return out


def normalize_kind(kind):
    if kind == "A1l":
        return "A1"
    if kind == "C2":
        return "B2"
    return kind


# ---------------------------------------------------------------- parsing

def parse_chi(expr):
    m = sp.sympify(expr, locals=LOC)
    used = sorted({s for s in m.free_symbols}, key=lambda s: NS.index(s))
    k = max((NS.index(s) + 1 for s in used), default=0)
    zero = {s: 0 for s in NS}
    const = [sp.nsimplify(x.subs(zero)) for x in m]
    cols = []
    for i in range(k):
        cols.append([sp.nsimplify(sp.diff(x, NS[i])) for x in m])
    for x in m:
        if sp.Poly(x, *NS[:max(k, 1)]).total_degree() > 1:
            raise ValueError(f"non-affine entry {x}")
    return [F(str(c)) for c in const], [[F(str(c)) for c in col] for col in cols]


def parse_factors(text):
    out = []
    for tok in text.split():
        kind, _, slots = tok.partition(":")
        out.append({"kind": kind, "slots": [int(s) for s in slots.split(",") if s]})
    return out


def parse_ineq(text):
    for rel in ("<=", ">=", "<", ">", "="):
        if rel in text:
            lhs, rhs = text.split(rel)
            break
    else:
        raise ValueError(text)
    e = sp.sympify(lhs, locals=LOC) - sp.sympify(rhs, locals=LOC)
    const = e.subs({s: 0 for s in NS})
    k = max(NS.index(s) + 1 for s in e.free_symbols)
    coeffs = [F(str(sp.diff(e, NS[i]))) for i in range(k)]
    return {"coeffs": [str(c) for c in coeffs], "rel": rel, "rhs": str(F(str(-const)))}


def qstr(x):
    return str(x)


def slot_count(kind, ambient):
    base = normalize_kind(kind)
    letter, r = base[0], int(base[1:])
    if ambient == "E6" and letter == "A":
        return (r + 1) // 2
    if ambient == "E6" and letter == "T":
        return 0
    if letter in "ABCDT":
        return r
    return {"G": 2, "F": 4, "E": r}[letter]


# ---------------------------------------------------------------- checks

def resolve_variants(ambient, label, expr, factors):
    """Rows carrying a placeholder are resolved by the h/2 test."""
    if "{s}" in expr:
        good = [expr.format(s=s) for s in ("", "-") if is_half_h(ambient, parse_chi(expr.format(s=s))[0])
                and in_span(ambient, parse_chi(expr.format(s=s))[0])]
        if len(good) != 1:
            raise SystemExit(f"{ambient} {label}: ambiguous repair {good}")
        return good[0], factors
    if factors == "{a7}":
        const, cols = parse_chi(expr)
        comps = classify(centralizer(ambient, const, cols))
        return expr, ("A1:1" if [c[0] for c in comps] == ["A1"] else "T1:1")
    return expr, factors


def check_row(ambient, label, const, cols, factors, rng):
    errs = []
    if not in_span(ambient, const) or any(not in_span(ambient, c) for c in cols):
        errs.append("outside ambient span")
    if any(dot(const, c) != 0 for c in cols):
        errs.append("nu directions not orthogonal to h/2")
    if not is_half_h(ambient, const):
        errs.append(f"nu=0 point not h/2: {simple_pairings(ambient, dominant(ambient, const))}")
    nslots = sum(len([s for s in f["slots"] if s]) for f in factors)
    if nslots != len(cols):
        errs.append(f"slot count {nslots} vs {len(cols)} parameters")
    for f in factors:
        want = slot_count(f["kind"], ambient)
        if len(f["slots"]) != want:
            errs.append(f"factor {f['kind']} has {len(f['slots'])} slots, expected {want}")
    if ambient == "E6":
        for _ in range(4):
            nu = [F(rng.randint(1, 40), rng.randint(1, 40)) for _ in cols]
            v = [const[k] + sum(n * c[k] for n, c in zip(nu, cols)) for k in range(8)]
            if dominant(ambient, v) != dominant(ambient, [-x for x in v]):
                errs.append("not hermitian")
                break
    else:
        comps = classify(centralizer(ambient, const, cols))
        got = sorted(normalize_kind(k) for k, _ in comps)
        want = sorted(normalize_kind(f["kind"]) for f in factors if not f["kind"].startswith("T"))
        if got != want:
            errs.append(f"centralizer {got} vs listed {want}")
        else:
            for kind, slots in comps:
                torus = {s - 1 for f in factors if f["kind"].startswith("T") for s in f["slots"]}
                owners = [f for f in factors if normalize_kind(f["kind"]) == normalize_kind(kind)
                          and {s - 1 for s in f["slots"]} >= slots - torus]
                if not owners:
                    errs.append(f"component {kind} uses slots {sorted(s + 1 for s in slots)}")
    return errs


def fnv1a64(data: bytes) -> int:
    h = 0xcbf29ce484222325
    for b in data:
        h ^= b
        h = (h * 0x100000001b3) & 0xFFFFFFFFFFFFFFFF
    return h


def canonical(records):
    return json.dumps(records, sort_keys=True, separators=(",", ":"), ensure_ascii=False)


def build(check_only=False):
    rng = random.Random(7)
    records = []
    failures = 0
    tables = [("E6", E6_ROWS), ("E7", E7_ROWS), ("E8", E8_ROWS)]
    for ambient, rows in tables:
        for label, expr, ftext, note in rows:
            expr, ftext = resolve_variants(ambient, label, expr, ftext)
            const, cols = parse_chi(expr)
            factors = parse_factors(ftext)
            errs = check_row(ambient, label, const, cols, factors, rng)
            for e in errs:
                print(f"{ambient} {label}: {e}", file=sys.stderr)
            failures += bool(errs)
            key = (ambient, label)
            rec = {
                "ambient": ambient,
                "label": label,
                "source": f"{ambient} parameter table, row {label}",
                "chi_affine": {"constant": [qstr(x) for x in const],
                               "columns": [[qstr(x) for x in c] for c in cols]},
                "factors": factors,
                "exception": None,
                "exceptional": key in FLAGGED or key in EXCEPTIONS,
            }
            if note or key in EXCEPTION_NOTES:
                rec["note"] = "; ".join(x for x in (note, EXCEPTION_NOTES.get(key, "")) if x)
            if key in EXCEPTIONS:
                rec["exception"] = [[parse_ineq(t) for t in region] for region in EXCEPTIONS[key]]
                for region in rec["exception"]:
                    for ineq in region:
                        if len(ineq["coeffs"]) > len(cols):
                            print(f"{ambient} {label}: inequality beyond slots", file=sys.stderr)
                            failures += 1
            records.append(rec)
    labels = {(r["ambient"], r["label"]) for r in records}
    for key in FLAGGED | set(EXCEPTIONS):
        if key not in labels:
            print(f"missing exceptional row {key}", file=sys.stderr)
            failures += 1
    maxpar = [{"ambient": "E8", "label": l, "endpoint": e} for l, e in MAXPAR]
    for m in maxpar:
        if ("E8", m["label"]) not in labels:
            print(f"missing maximal parabolic row {m['label']}", file=sys.stderr)
            failures += 1
    payload = {"records": records, "maxpar": maxpar}
    doc = {"version": 1, "checksum": f"{fnv1a64(canonical(payload).encode()):016x}", **payload}
    return doc, failures


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--out", default=str(Path(__file__).resolve().parent.parent / "data" / "orbit_tables.json"))
    ap.add_argument("--check-only", action="store_true")
    args = ap.parse_args()
    doc, failures = build(args.check_only)
    print(f"{len(doc['records'])} rows, {failures} with problems", file=sys.stderr)
    if failures:
        return 1
    if not args.check_only:
        Path(args.out).parent.mkdir(parents=True, exist_ok=True)
        with open(args.out, "w", encoding="utf-8") as fh:
            json.dump(doc, fh, indent=1, ensure_ascii=False)
            fh.write("\n")
    return 0


if __name__ == "__main__":
    sys.exit(main())
