"""
Four ways to evaluate the annulus Szego kernel
==============================================

The kernel S(z, a) of the annulus rho < |z| < 1 is available as a power
series, an alternating series, an infinite product and a closed form built
from theta and q-gamma functions.  They agree to rounding, and the product
shows the single zero of S(., a) exactly.
"""
import numpy as np

from szego import (
    AnnulusDomain,
    GeneralAnnulusDomain,
    Method,
    evaluate,
    general_annulus_kernel,
    general_zero_location,
    zero_location,
)

dom = AnnulusDomain(0.5, 0.7j)
z = np.array([1.0, 0.7j, 0.6 - 0.3j, -0.5j])

for method in Method:
    print(f"{method.value:8s}", np.round(evaluate(dom, z, method), 12))

# S(a, a) is real and positive
print("S(a, a) =", evaluate(dom, dom.a))

# the zero sits at -rho / conj(a); the product vanishes there identically
z0 = zero_location(dom)
print("zero:", z0, "|zero| =", abs(z0))
print("product at zero:", evaluate(dom, z0, Method.PRODUCT))
print("series at zero: ", abs(evaluate(dom, z0, Method.SERIES)))

# |S| along the ray through the zero
r = np.linspace(0.5, 1.0, 11)
print(np.round(np.abs(evaluate(dom, -1j * r)), 6))

# an off-center annulus maps to the canonical one
gdom = GeneralAnnulusDomain(1 + 1j, 2.0, 1.0, 1 + 2.4j)
zg = general_zero_location(gdom)
print("general annulus zero:", zg, abs(general_annulus_kernel(gdom, zg)))
