"""Enumerating modular knots.

Every primitive hyperbolic conjugacy class of PSL(2,Z) is one closed
geodesic on the modular surface, and each class is named by an aperiodic
necklace in the letters L and R.  This script walks the first few trace
levels, shows the canonical word and matrix for each class, and then lets
the census grow to illustrate how fast the population explodes.
"""

from modknots import EnumerationParams, enumerate_classes

# The smallest knots: everything with trace below 10.
print("class census up to trace 10")
print(f"{'necklace':<12} {'matrix':<22} {'trace':>5} {'length':>10}")
for record in enumerate_classes(EnumerationParams(trace_bound=10)):
    m = record.rep
    matrix = f"({m.a} {m.b}; {m.c} {m.d})"
    print(f"{record.necklace:<12} {matrix:<22} {record.spectral.trace:>5} "
          f"{record.spectral.length:>10.6f}")

# The trace-3 class is the shortest closed geodesic on the surface; its
# word LR is the core of every longer necklace in the sense that L and R
# must both appear.

# Growth: the number of classes roughly doubles every few trace levels,
# mirroring the exponential growth of closed geodesics by length.
print()
print("population growth")
print(f"{'trace <':>8} {'classes':>9}")
for bound in (10, 30, 100, 300, 1000):
    count = len(enumerate_classes(EnumerationParams(trace_bound=bound)))
    print(f"{bound:>8} {count:>9}")
