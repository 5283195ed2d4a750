"""q-Hermite polynomials, Gauss measures and the moment round trip.

Run with ``python3 demos/04_hermite_measures.py``.
"""
import math

import numpy as np

from qosc.qcore import ConditioningError, QParams
from qosc.qhermite import (
    eigendecompose,
    jacobi_from_moments,
    jacobi_matrix,
    measure_moments,
    orthonormality_check,
    recurrence_coefficients,
)
from qosc.qstates import generating_vector

for lam in (0.0, 1.0):
    p = QParams(0.5, lam)
    meas = eigendecompose(jacobi_matrix(p, 80))
    print(f"lam={lam}: nodes in [{meas.nodes[0]:.3g}, {meas.nodes[-1]:.3g}], sum w - 1 = {math.fsum(meas.weights) - 1:.1e}")
    print(f"  smallest weight 10^{meas.log_weights.min() / math.log(10):.0f}, orthonormality {orthonormality_check(p, 80, 40):.1e}")

# %% Recovering the recurrence from moments works until Hankel positivity is lost.
p = QParams(0.5)
meas = eigendecompose(jacobi_matrix(p, 80))
for n_out in (8, 12, 16, 20):
    try:
        R = jacobi_from_moments(measure_moments(meas, 2 * n_out), n_out)
        err = np.max(np.abs(R.offdiag - recurrence_coefficients(p, n_out - 1)))
        print(f"n_out={n_out}: max error {err:.1e}, certified bound {R.condition:.1e}")
    except ConditioningError as exc:
        print(f"n_out={n_out}: refused ({exc})")

# %% The generating function tends to exp(2xz - z^2/2) as q -> 1.
g = generating_vector(0.5, 4, QParams(1 - 1e-6), 8)
print("coefficients:", np.round(g.coeffs[:5], 6), " exp(z - z^2/2): [1, 1, 0, -1/3, -1/12]")
