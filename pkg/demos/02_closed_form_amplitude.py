"""
Closed-form amplitude and the Rutherford cross section
======================================================

The Coulomb amplitude in closed form is

    f(theta) = Gamma(1 - i beta)/(i Gamma(i beta))
               * exp(i beta ln sin^2(theta/2)) / (2 k sin^2(theta/2)).

Its modulus is exactly |beta| / (2 k sin^2(theta/2)), so the differential
cross section |f|^2 is the classical Rutherford result: all the quantum
structure hides in the phase.  The same value is reachable from the
auxiliary-function route f = g(cos theta)/(2ik); both are computed here.
"""

import math

from coulomb_kit import (
    PhysicalParams,
    closed_amplitude,
    closed_partial_wave_sum,
    differential_cross_section,
)

p = PhysicalParams(k=1.0, beta=1.0)

print(f"{'theta':>8} {'Re f':>12} {'Im f':>12} {'|f|':>10} "
      f"{'|beta|/(2k sin^2)':>18} {'dsigma/dOmega':>14}")
for deg in (10, 30, 60, 90, 120, 180):
    theta = math.radians(deg)
    f = closed_amplitude(theta, p).f
    modulus_law = abs(p.beta) / (2 * p.k * math.sin(theta / 2) ** 2)
    dcs = differential_cross_section(theta, p)
    print(f"{deg:>7}d {f.real:>12.6f} {f.imag:>12.6f} {abs(f):>10.6f} "
          f"{modulus_law:>18.6f} {dcs:>14.6f}")

# the two closed routes agree to rounding
theta = 2 * math.pi / 3
f_direct = closed_amplitude(theta, p).f
f_via_sum = closed_partial_wave_sum(math.cos(theta), p) / (2j * p.k)
print(f"\nf(2pi/3) directly:        {f_direct:.15f}")
print(f"f(2pi/3) via sum route:   {f_via_sum:.15f}")
print(f"relative difference:      {abs(f_direct - f_via_sum) / abs(f_direct):.2e}")

# attraction vs repulsion: mirrored phases, identical cross sections
f_att = closed_amplitude(math.pi / 2, PhysicalParams(k=1.0, beta=1.0)).f
f_rep = closed_amplitude(math.pi / 2, PhysicalParams(k=1.0, beta=-1.0)).f
print(f"\nf(pi/2, beta=+1) = {f_att:.6f}")
print(f"f(pi/2, beta=-1) = {f_rep:.6f}   (equals -conj of the other)")
print(f"|f|^2 match: {abs(f_att)**2:.12f} vs {abs(f_rep)**2:.12f}")
