"""Inside the winding route.

The unit tangent bundle of the modular surface is a trefoil complement,
and F(z, v) = Delta(z) v^6 is a nonvanishing invariant function on it.
Following arg F around one closed orbit of the geodesic flow counts how
many times the knot wraps around the missing trefoil.  This script opens
the machinery up for one class: the orbit samples, their reduction into
the fundamental domain, and the accumulated argument.
"""

import math

from modknots import orbit_samples, psi, spectral, word_to_matrix
from modknots.winding import _reduce_to_fundamental_domain, _tracked_arguments

gamma = word_to_matrix("LRRR")
data = spectral(gamma)
print(f"class LRRR: trace {data.trace}, xi = {data.xi:.6f}, length = {data.length:.6f}")

sampling = orbit_samples(gamma, 12)
print(f"orbit period in flow time: {sampling.period:.6f} (= log xi)")
print()

print("first samples along the orbit, reduced to the fundamental domain")
print(f"{'t':>7} {'z (orbit)':>24} {'z (reduced)':>24}")
for k, pt in enumerate(sampling.samples[:6]):
    t = k * sampling.period / sampling.n_samples
    zr, _ = _reduce_to_fundamental_domain(pt.z, pt.v)
    print(f"{t:>7.3f} {pt.z.real:>11.4f}{pt.z.imag:>+11.4f}j "
          f"{zr.real:>11.4f}{zr.imag:>+11.4f}j")

# The tracked argument of Delta(z) v^6 along all samples.  Its net change
# over one period, divided by 2 pi, is the winding number; psi is the
# same integer computed from Dedekind sums.
sampling = orbit_samples(gamma, 256)
args = _tracked_arguments(sampling.samples, n_terms=24)
total = 0.0
prev = args[0]
for a in list(args[1:]) + [args[0]]:
    step = math.remainder(a - prev, 2 * math.pi)
    total += step
    prev = a
print()
print(f"net argument change: {total:.6f} rad = {total / (2 * math.pi):.6f} turns")
print(f"psi from Dedekind sums: {psi(gamma)}")
