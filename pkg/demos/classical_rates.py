"""Classical Gaussian channel: how close simple schemes get to capacity."""

import numpy as np

from gkplat import (
    ClassicalParams,
    debuda_rate,
    minkowski_lattice_rate,
    optimize_classical_d,
    shannon_capacity,
)

print("P/sigma^2    capacity   packing-1   de Buda    d_opt   concat    gap")
for snr in np.geomspace(1.0, 1e6, 13):
    params = ClassicalParams(1.0, 1.0 / float(snr))
    cap = shannon_capacity(params)
    d_opt, rate = optimize_classical_d(params)
    print(f"{snr:.3e}  {cap:8.4f}   {minkowski_lattice_rate(params):8.4f}  "
          f"{debuda_rate(params):8.4f}  {d_opt:6d}  {rate:7.4f}  {cap - rate:6.3f}")

print()
print("The concatenated-dit gap to capacity stays under one bit across the")
print("whole range, with the optimal alphabet growing like sqrt(P/sigma^2).")
