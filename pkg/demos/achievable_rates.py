"""Achievable-rate curves for the Gaussian quantum channel.

Prints the closed-form curves on a log grid of noise variances: the
coherent-information benchmark, the capacity upper bound, the
conservative sphere-packing rate two qubits below it, and the best
integer-lambda rescaling actually reachable at each noise level.
"""

import numpy as np

from gkplat import (
    NoiseModel,
    best_integer_lambda,
    coherent_information,
    hw_upper_bound,
    minkowski_radius_sq,
    sphere_packing_rate,
    sphere_volume,
)

print("sigma_sq      I_Q       upper     packing   best-lambda  rate(lambda)")
for s in np.geomspace(1e-4, 0.5, 14):
    noise = NoiseModel(float(s))
    lam, lam_rate = best_integer_lambda(noise)
    print(f"{s:.3e}  {coherent_information(noise):7.4f}  "
          f"{hw_upper_bound(noise):7.4f}  {sphere_packing_rate(noise):7.4f}  "
          f"{lam:11d}  {lam_rate:7.4f}")

print()
print("The packing rate rests on the guaranteed density of unimodular")
print("lattices; the implied packing radius grows linearly with dimension:")
print()
print("     n    V_n                r_n^2 >= n/(8 pi e)")
for n in (2, 4, 8, 16, 64, 200):
    print(f"{n:6d}    {sphere_volume(n):.6e}    {minkowski_radius_sq(n):.6f}")
