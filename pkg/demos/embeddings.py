"""P_n as a submodule of the n-fold tensor power of P, with a free complement."""

from __future__ import annotations

from a1stable import embedded_p, induces_stable_iso, make, poly_tensor, series_of
from a1stable.hilbert import free_part_series

top = 18
for n in range(1, 5):
    amb = poly_tensor(n, top)
    sub, inc = embedded_p(n, top, ambient=amb)
    same = all(sub.dim(d) == make(f"P{n}").dim(d) for d in range(n, top + 1))
    comp = series_of(amb, top) - series_of(sub, top)
    print(f"n={n}: dims match P{n}: {same}, stable iso: {induces_stable_iso(inc)}, "
          f"complement = closed-form free part: {comp.agrees(free_part_series(n, top), n, top)}")
