"""
q-series building blocks
========================

q-Pochhammer symbols, the bilateral 1psi1 sum and its product closed form,
Cauchy's special case, the q-gamma function and the theta function.
"""
import numpy as np

from szego import cauchy_sum, psi11, q_gamma, q_pochhammer, ramanujan_sum, theta_fn

# finite, negative and infinite orders
print("(0.3; 0.25)_2    =", q_pochhammer(0.3, 0.25, 2))
print("(0.2; 0.3)_-3    =", q_pochhammer(0.2, 0.3, -3))
print("(0.5; 0.25)_inf  =", q_pochhammer(0.5, 0.25))

# the symbol accepts arrays of alpha
alphas = np.linspace(-0.9, 0.9, 5)
print("vectorized:", np.round(q_pochhammer(alphas, 0.4), 6))

# partial sums of the bilateral series approach the product formula
alpha, beta, q, z = -0.5, -0.125, 0.25, 0.49
closed = ramanujan_sum(alpha, beta, q, z)
for N in (5, 10, 20, 40):
    print(f"N={N:3d}  |partial - product| = {abs(psi11(alpha, beta, q, z, N) - closed):.2e}")

# beta = alpha q gives Cauchy's sum, symmetric in alpha and z
print("cauchy(a, z) - cauchy(z, a):", abs(cauchy_sum(-0.5 + 0.1j, 0.25, 0.49 - 0.2j)
                                          - cauchy_sum(0.49 - 0.2j, 0.25, -0.5 + 0.1j)))

# Gamma_q(x + 1) = (1 - q^x) / (1 - q) Gamma_q(x)
x, q = 0.7, 0.25
print("q-gamma recurrence residual:",
      abs(q_gamma(x + 1, q) - (1 - q**x) / (1 - q) * q_gamma(x, q)))

# theta(x) = (x; q)_inf (q/x; q)_inf is invariant under x -> q/x
x = 0.3 + 0.1j
print("theta(x), theta(q/x):", theta_fn(x, 0.25), theta_fn(0.25 / x, 0.25))
