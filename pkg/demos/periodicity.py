"""Loops on R and on the P_n: one suspension per loop, and period four up to Sigma^12."""

from __future__ import annotations

from a1stable import loops, make, reduced

top = 24
r = make("R", hi=40)
lr = loops(r)
print("Omega R     ", [lr.dim(d) for d in range(-2, 14)])
print("Sigma R     ", [make("R", suspension=1).dim(d) for d in range(-2, 14)])

m = make("P0", hi=60)
for step in range(1, 5):
    m = reduced(loops(m))
    target = make(f"P{step}", hi=60, suspension=step)
    same = all(m.dim(d) == target.dim(d) for d in range(-2, top + 1))
    print(f"Omega^{step} P0 matches Sigma^{step} P{step} through degree {top}: {same}")
print("and Sigma^4 P4 = Sigma^12 P0:",
      all(make("P4", hi=60, suspension=4).dim(d) == make("P0", hi=60, suspension=12).dim(d) for d in range(-2, 50)))
