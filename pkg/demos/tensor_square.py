"""Split P (x) P into a free part and a reduced part, and identify the reduced part."""

from __future__ import annotations

from a1stable import make, reduced_part, stable_class_equal, tensor, to_ascii
from a1stable.hilbert import pp_generator_counts
from a1stable.picard import t1_parts

p = make("P1", hi=36)
split = reduced_part(tensor(p, p))
red = split.reduced

print("free generators of P (x) P by degree (up to 24):")
print({d: c for d, c in split.generator_counts().items() if d <= 24})
print("predicted by the index sets 4i+4j (i+j>0) and 4i+4j+6:")
print(pp_generator_counts(24))

print()
print(to_ascii(red.truncate(-2, 14)))
for name, other in (("P2", make("P2", hi=36)), ("Sigma^2 P1", make("P1", hi=36, suspension=2))):
    parts = t1_parts(other)
    print(f"{name:>11}: d1={parts['d1']} t1={parts['t1']}  stably equal: {stable_class_equal(red, other)}")
parts = t1_parts(red)
print(f"{'reduced':>11}: d1={parts['d1']} t1={parts['t1']}")
