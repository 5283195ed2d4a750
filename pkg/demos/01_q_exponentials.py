"""q-exponentials: series, product and the one-parameter family.

Run with ``python3 demos/01_q_exponentials.py``.
"""

from qosc.qfunc import big_E_q, convergence_class, e_q, e_q_product, exp_q_lambda

q = 0.5

# %% Inside the disc |x| < 1/(1-q) the series and the infinite product agree.
for x in (0.0, 0.5, 1.0, 1.9):
    print(f"x={x:4}: series {e_q(x, q).real:.15g}  product {e_q_product(x, q).real:.15g}")

# %% Past the radius only the product is defined; it has poles at q**-k / (1-q).
print("e_q(2.5) via product:", e_q_product(2.5, q).real)

# %% The family exp(z; q, lam) changes its convergence class with lam.
for lam in (1.0, 0.5, 0.0, -0.5):
    print(f"lam={lam:+}: {convergence_class(q, lam)}")

# %% lam = 1/2 at q**2 is the symmetric exponential E_q, lam = 1 is e_{1/q}.
z = 2.0 + 1.0j
print("exp(z; q^2, 1/2) =", exp_q_lambda(z, q * q, 0.5).value, " E_q(z) =", big_E_q(z, q))
print("exp(z; q, 1)     =", exp_q_lambda(z, q, 1.0).value, " e_1/q(z) =", e_q(z, 1 / q))

# %% For lam < 0 only a formal partial sum exists; its terms eventually grow.
r = exp_q_lambda(0.3, q, -0.5, mode="formal")
print(f"formal sum: {r.terms} terms, diverging={r.diverging}, smallest term at n={r.smallest_term_index}")
