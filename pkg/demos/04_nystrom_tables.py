"""
Kerzman-Stein solver and its error tables
=========================================

Trapezoidal Nystrom discretization of the Kerzman-Stein integral equation on
both boundary circles, compared against the three series/product routes.
"""
import numpy as np

from szego.bench import ExperimentConfig, run_experiment
from szego.kernel import AnnulusDomain, kernel_product
from szego.nystrom import assemble_ks_system, build_boundary_grid, error_norm, residual_norm, solve_system

rho, a = 0.5, 0.7j
dom = AnnulusDomain(rho, a)

for n in (16, 32, 64, 128):
    grid = build_boundary_grid(rho, n)
    system = assemble_ks_system(grid, a)
    x = solve_system(system)
    err = error_norm(x, kernel_product(dom, grid.nodes, 25))
    print(f"n={n:4d}  residual {residual_norm(system, x):.1e}  error vs product {err:.2e}")

# the full table; truncation error dominates once the solver has converged
table = run_experiment(ExperimentConfig(rho=rho, a=a))
print(table.render("csv"))
