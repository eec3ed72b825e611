"""Two statistical laws obeyed by the Rademacher symbol.

First: psi mod m equidistributes.  Counting classes by residue, the
densities flatten toward 1/m as the trace bound grows, and the residues
k and -k are forced to match exactly at every bound by mirror symmetry.

Second: psi/length follows a Cauchy law.  The ratio of the symbol to the
geodesic length, over all classes up to a length cut, has empirical CDF
close to arctan(pi x / 3)/pi + 1/2.
"""

import math

from modknots import cauchy_cdf_compare, convergence_trend, density_mod_m

print("residue densities of psi mod 3")
print(f"{'trace <':>8} {'k=0':>8} {'k=1':>8} {'k=2':>8} {'max dev':>9}")
for nu in (50, 100, 200, 500):
    report = density_mod_m(nu, 3)
    d = report.densities
    print(f"{nu:>8} {d[0]:>8.4f} {d[1]:>8.4f} {d[2]:>8.4f} {report.max_deviation:>9.4f}")

print()
print("deviation trend for several moduli")
for m in (2, 3, 5):
    trend = convergence_trend([50, 100, 200, 500], m)
    path = "  ".join(f"{dev:.4f}" for _, dev in trend)
    print(f"  mod {m}: {path}")

# The Cauchy comparison, binned and plot-ready.  The empirical column is
# the fraction of classes whose psi/length lands in the bin; the
# theoretical column integrates the arctan law over the same bin.
print()
edges = (-math.inf, -2.0, -1.0, -0.5, -0.25, 0.0, 0.25, 0.5, 1.0, 2.0, math.inf)
report = cauchy_cdf_compare(10.0, edges)
print(f"psi/length vs the Cauchy law, {report.sample_count} classes of length < 10")
print(f"{'bin':>18} {'empirical':>10} {'theoretical':>12}")
for lo, hi, emp, theo in report.bins:
    print(f"[{lo:>7.2f},{hi:>7.2f}) {emp:>10.4f} {theo:>12.4f}")
print(f"KS distance: {report.ks_distance:.4f}")
