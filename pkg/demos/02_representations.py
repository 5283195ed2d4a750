"""Truncated representations: residuals live away from the truncation edge.

Run with ``python3 demos/02_representations.py``.
"""
import numpy as np

from qosc.oscrep import (
    RepSpec,
    build_h0,
    build_hgamma,
    central_deviation,
    commutation_residual,
    verify_ordering_identity,
)
from qosc.qcore import QParams

q = 0.5

# %% The deformed commutator holds on every row but the last one.
rep = build_h0(RepSpec.h0(QParams(q), 8))
a, ad = rep.a.entries.real, rep.a_dagger.entries.real
print(np.round(np.diag(a @ ad - q * ad @ a), 12))

# %% The same holds for the symmetric and contracted generators.
for lam, name in ((0.0, "canonical"), (0.5, "symmetric"), (1.0, "contracted")):
    r = build_h0(RepSpec.h0(QParams(q, lam), 64))
    print(f"{name:10s} residual {commutation_residual(r, name):.1e}, ordering m=3 {verify_ordering_identity(r, 3):.1e}")

# %% On the Z-graded modules the central element takes the value -gamma.
for gamma in (2.0, 3.0, 6.0):
    spec = RepSpec.hgamma(QParams(q, 0.0, gamma), -20, 20)
    print(
        f"gamma={gamma}: double {central_deviation(build_hgamma(spec))[0]:.1e}, "
        f"extended {central_deviation(build_hgamma(spec, 'extended'))[0]:.1e}"
    )
