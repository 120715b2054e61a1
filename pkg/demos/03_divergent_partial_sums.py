"""
Why the raw partial-wave series cannot be summed directly
=========================================================

The terms (2l+1) S_l P_l(cos theta) do not tend to zero: |S_l| = 1 and
(2l+1) P_l(cos theta) oscillates with an envelope that grows like
sqrt(l).  The partial sums therefore wander forever instead of settling.
This script makes that pathology visible; the cure is in demo 04.
"""

import math

import numpy as np

from coulomb_kit import PhysicalParams, closed_amplitude, unregularized_partial_sums

p = PhysicalParams(k=1.0, beta=1.0)
theta = math.pi / 2

sums = unregularized_partial_sums(theta, p, 200)
target = closed_amplitude(theta, p).f

print(f"closed-form f(pi/2) = {target:.6f}\n")
print(f"{'n':>4} {'partial sum':>24} {'|sum - f|':>12}")
for n in (0, 1, 2, 5, 10, 20, 50, 100, 150, 199, 200):
    s = sums[n]
    print(f"{n:>4} {s.real:>11.4f} {s.imag:>+11.4f}i {abs(s - target):>12.4f}")

last = sums[-50:]
spread = math.sqrt(float(np.mean(np.abs(last - np.mean(last)) ** 2)))
print(f"\nscatter of the last 50 partial sums: {spread:.3f}")
print(f"mean magnitude of the last 50:       {float(np.mean(np.abs(last))):.3f}")
print("the sequence is not converging, and pushing L higher only makes "
      "the swings larger")

try:
    import matplotlib
    matplotlib.use("Agg")
    import matplotlib.pyplot as plt
except ImportError:
    plt = None

if plt is not None:
    fig, ax = plt.subplots(figsize=(7, 4))
    n = np.arange(len(sums))
    ax.plot(n, np.abs(sums - target), lw=0.8)
    ax.set_xlabel("partial sum order n")
    ax.set_ylabel("|partial sum - closed form|")
    ax.set_title("raw Coulomb partial sums do not converge (k=1, beta=1, theta=pi/2)")
    fig.tight_layout()
    fig.savefig("demo03_partial_sums.png", dpi=120)
    print("\nwrote demo03_partial_sums.png")
