"""Coherent states and their resolution of unity.

Run with ``python3 demos/03_coherent_states.py``.
"""
import math
import warnings

from qosc.oscrep import BasisWindow, RepSpec, build_h0
from qosc.qcore import QParams
from qosc.qfunc import e_q
from qosc.qmeasure import resolution_of_unity_diag
from qosc.qstates import (
    TruncationWarning,
    coherent_state,
    eigen_residual,
    hgamma_creation_coherent,
    norm_squared,
    overlap,
)

q = 0.5
p = QParams(q)

# %% Coherent states are annihilation eigenvectors; the norm is e_q(|z|^2).
z = 1.2
s = coherent_state(z, p, 400)
rep = build_h0(RepSpec.h0(p, 400))
print("residual:", eigen_residual(rep.a, s, z))
print("norm^2:", norm_squared(s), " e_q(|z|^2):", e_q(z * z, q).real)

# %% Small truncations warn once the tail carries weight.
with warnings.catch_warnings(record=True) as caught:
    warnings.simplefilter("always", TruncationWarning)
    coherent_state(z, p, 12)
print(caught[0].message)

# %% Overlaps factor through e_q.
w = 0.4 - 0.9j
print(overlap(coherent_state(w, p, 400), s), e_q(w.conjugate() * z, q))

# %% The radial weight 1/e_q(qx) resolves the identity; 1/e_q(x) does not.
for n in (0, 4, 8, 12):
    print(n, resolution_of_unity_diag(n, q), resolution_of_unity_diag(n, q, shifted=False))

# %% Raising-operator eigenvectors on H_gamma become normalizable near |z| = sqrt(1/(1-q)).
pg = QParams(q, 0.0, 3.0)
for z in (0.5, 1.3, 1.6, 2.0, 4.0):
    r = hgamma_creation_coherent(z, pg, BasisWindow(-30, 60))
    print(f"|z|={z}: {r.verdict} (end weight {r.tail_increment:.1e}); sqrt(gamma_c)={math.sqrt(pg.gamma_c):.3f}")
