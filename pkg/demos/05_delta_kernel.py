"""
The dropped forward-direction delta, smoothed
=============================================

With the interaction switched off (S_l = 1) the partial-wave sum becomes
the completeness kernel sum_l (2l+1) P_l(x): a delta distribution
supported at x = 1.  Damping by exp(-eps l) smooths it into a spike of
width ~eps whose integral over [-1, 1] stays exactly 2, because Legendre
orthogonality removes every l >= 1 term from the integral.

Away from x = 1 the smoothed kernel dies as eps -> 0, which is why the
scattering series may drop this contribution for every nonzero angle.
"""

import numpy as np

from coulomb_kit import completeness_kernel

nodes, weights = np.polynomial.legendre.leggauss(256)

print(f"{'eps':>8} {'integral':>20} {'kernel(0.2)':>12} {'kernel(0.9)':>12} "
      f"{'kernel(1.0)':>12}")
for eps in (0.2, 0.1, 0.05, 0.025):
    integral = float(np.sum(weights * completeness_kernel(nodes, eps, 500)))
    at_02, at_09, at_10 = completeness_kernel([0.2, 0.9, 1.0], eps, 4000)
    print(f"{eps:>8.3f} {integral:>20.12f} {at_02:>12.5f} {at_09:>12.5f} "
          f"{at_10:>12.1f}")

print("\nmass drains out of every fixed x < 1 and piles up at x = 1,")
print("while the total integral never moves: that is delta concentration.")

try:
    import matplotlib
    matplotlib.use("Agg")
    import matplotlib.pyplot as plt
except ImportError:
    plt = None

if plt is not None:
    xs = np.linspace(-1.0, 1.0, 801)
    fig, ax = plt.subplots(figsize=(7, 4))
    for eps in (0.2, 0.1, 0.05):
        ax.plot(xs, completeness_kernel(xs, eps, 2000), lw=1.0,
                label=f"eps = {eps}")
    ax.set_xlabel("x = cos(theta)")
    ax.set_ylabel("damped completeness kernel")
    ax.set_ylim(-5, 120)
    ax.legend()
    ax.set_title("smoothed delta at the forward direction")
    fig.tight_layout()
    fig.savefig("demo05_delta_kernel.png", dpi=120)
    print("\nwrote demo05_delta_kernel.png")
