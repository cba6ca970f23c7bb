"""Rotation columns at photon numbers far beyond factorial arithmetic.

The direct finite-sum formula for a rotation matrix element dies from
catastrophic cancellation around spin ~50 (photon number ~100).  The
two-sided recurrence with on-the-fly rescaling keeps the full column
accurate and normalized into the tens of thousands of photons.

Run: python demos/large_photon_number_columns.py
"""

import math
import time

import numpy as np

from fockport import SpinJ, SpinProjection, beta_q, wigner_d_column


def main():
    print("column of the rotation matrix from m = 0, at the near-balanced angle")
    print(f"{'N':>7} {'beta (deg)':>11} {'norm - 1':>10} {'min |d|':>10} "
          f"{'max |d|':>9} {'time':>8}")
    for N in (200, 2000, 20000):
        beta = beta_q(N)
        t0 = time.perf_counter()
        col = wigner_d_column(SpinJ(N), SpinProjection(0), beta)
        dt = time.perf_counter() - t0
        mods = np.abs(col.values)
        print(f"{N:7d} {math.degrees(beta):11.4f} "
              f"{np.linalg.norm(col.values) - 1.0:10.1e} "
              f"{mods.min():10.2e} {mods.max():9.4f} {dt * 1e3:6.1f} ms")

    # the envelope is largest at the edges and shrinks like N^(-1/2) inside
    N = 20000
    col = wigner_d_column(SpinJ(N), SpinProjection(0), beta_q(N))
    mods = np.abs(col.values)
    flat = 1.0 / math.sqrt(N + 1)
    print(f"\nN = {N}: flat profile would be {flat:.2e}; "
          f"edge value {mods[0]:.2e}, centre value {mods[N // 2]:.2e}")
    inside = mods[N // 10: N - N // 10]
    print(f"inner 80% of components stay within a factor "
          f"{inside.max() / inside.min():.1f} of each other")


if __name__ == "__main__":
    main()
