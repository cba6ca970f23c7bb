"""How flat can a beam splitter make a two-mode Fock state?

Feeding the central |j 0> component of an N-photon state into a beam
splitter spreads it over all N+1 photon splittings.  At the balanced
setting (90 deg) every other output amplitude vanishes; backing off to
(pi/2)(1 - 1/N) removes the zeros and nearly flattens the profile.

Run: python demos/entanglement_quality_vs_angle.py
"""

import math

import numpy as np

from fockport import (
    FilterOrder,
    beta_q,
    filtered_input,
    find_beta_q_numeric,
    make_resource,
    quality,
)


def profile_line(N, beta_deg):
    resource = make_resource(
        filtered_input(N, FilterOrder(N % 2)), math.radians(beta_deg)
    )
    report = quality(resource)
    return (
        f"  beta = {beta_deg:6.2f} deg | min |s_n| = {report.min_modulus:.4f} | "
        f"zeros = {report.zero_count:3d} | spread = {report.flatness:.4f} | "
        f"entropy = {report.entropy:.4f} / {math.log(N + 1):.4f}"
    )


def main():
    for N in (10, 20, 40):
        best = math.degrees(beta_q(N))
        print(f"N = {N} photons (central-component input)")
        for beta_deg in (45.0, 70.0, best, 90.0):
            print(profile_line(N, beta_deg))
        found = math.degrees(find_beta_q_numeric(N))
        print(f"  grid search over min |s_n| lands at {found:.2f} deg "
              f"(formula {best:.2f} deg)\n")

    print("pair input (|j 1/2> + |j -1/2>)/sqrt(2), odd N: no zeros even at 90 deg")
    for N in (11, 21):
        resource = make_resource(filtered_input(N, FilterOrder(1)), math.pi / 2)
        report = quality(resource)
        moduli = np.abs(resource.s)
        window = np.abs(np.arange(N + 1) - N / 2.0) <= N / 4.0
        print(f"  N = {N}: zeros = {report.zero_count}, "
              f"central min = {moduli[window].min():.4f}, "
              f"flat value would be {1 / math.sqrt(N + 1):.4f}")


if __name__ == "__main__":
    main()
