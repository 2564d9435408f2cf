"""
Zeros of the weighted kernel
============================

With weight t on the inner circle, the kernel has the zero -rho/conj(a)
whenever ln t / ln rho is an odd integer.  Other weights can still produce a
zero: the factors of the product vanish at -t^-1 rho^2k / conj(a), and one of
them may land in the annulus.
"""
import numpy as np

from szego import (
    WeightedKernelParams,
    weighted_kernel_closed_form,
    weighted_kernel_product,
    weighted_product_zeros,
    weighted_zero_condition,
)

rho, a = 0.5, 0.7j
r = np.linspace(rho, 1.0, 200)
th = np.linspace(0, 2 * np.pi, 200, endpoint=False)
grid = (r[:, None] * np.exp(1j * th)[None, :]).ravel()

for t in (rho**3, rho, 1 / rho, 1.0, 1.5, 3.0):
    par = WeightedKernelParams(rho, a, t)
    cond = weighted_zero_condition(par)
    zeros = weighted_product_zeros(par)
    m = np.min(np.abs(weighted_kernel_product(par, grid, 40)))
    print(f"t={t:6.3f}  odd power: {cond is not None!s:5}  "
          f"zeros in closed annulus: {[complex(np.round(w, 6)) for w in zeros]}  "
          f"min |S| on grid: {m:.2e}")

# t = 3 has no zero in the annulus, but one just inside the inner circle
par = WeightedKernelParams(rho, a, 3.0)
w = -1 / (3.0 * np.conj(a)) * rho**2 * np.array([1, 1 / rho**2])
print("factor zeros near the annulus for t=3:", np.abs(w))

# the closed form matches the product
par = WeightedKernelParams(rho, a, 2.0)
print(abs(weighted_kernel_closed_form(par, 0.9) - weighted_kernel_product(par, 0.9, 40)))
