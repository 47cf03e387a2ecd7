"""The localization matrices and the Picard invariants of a few invertible modules."""

from __future__ import annotations

from a1stable import classify_local, make, reduced, tensor
from a1stable.picard import describe_group, pic_localization_matrix

for alg in ("E1", "A1"):
    mat, cok = pic_localization_matrix(alg)
    print(f"{alg}: columns {mat.col_labels}")
    for label, row in zip(mat.row_labels, mat.display()):
        print(f"   {label:>10}  {row}")
    print(f"   cokernel {describe_group(cok)}")

print()
j = make("J")
p1 = make("P1", hi=36)
for name, m in (("P1 (x) P1", reduced(tensor(p1, p1))), ("Sigma^3 P2", make("P2", lo=-6, hi=36, suspension=3)),
                ("P1 (x) J", reduced(tensor(p1, j)))):
    cls = classify_local(m, 1)
    print(f"{name:>11} -> {cls.representative():<8} invariants {cls.invariants}")
