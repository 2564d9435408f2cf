"""Kerzman-Stein integral equation on the annulus boundary.

Boundary values of the Szego kernel solve

    S(z) + int_G A(z, w) S(w) |dw| = g(z),   z on G,

with the skew-Hermitian Kerzman-Stein kernel

    A(z, w) = (1/(2 pi i)) (T(w)/(z - w) - conj(T(z))/(conj(z) - conj(w))),  A(z, z) = 0,

and right-hand side ``g(z) = -(1/(2 pi i)) conj(T(z)) / (conj(z) - conj(a))``.
The outer circle is traversed counterclockwise and the inner circle clockwise.
Collocating at trapezoidal nodes gives a dense complex system solved by LU
with partial pivoting.

This module deliberately does not import the kernel evaluators; it is the
independent reference the analytic formulas are checked against.
"""
import math
from dataclasses import dataclass

import numpy as np

from .errors import InvalidArgument, LengthMismatch, SingularSystem

_INV_2PI_I = 1.0 / (2j * math.pi)


@dataclass(frozen=True)
class BoundaryGrid:
    """Trapezoidal nodes on both boundary circles.

    The first ``n`` entries sit on the unit circle at ``t_j = 2 pi j / n``,
    the last ``n`` on the inner circle ``rho e^{-i t_j}``.
    """

    rho: float
    n: int
    nodes: np.ndarray
    tangents: np.ndarray
    weights: np.ndarray

    @property
    def outer(self):
        return slice(0, self.n)

    @property
    def inner(self):
        return slice(self.n, 2 * self.n)


@dataclass(frozen=True)
class KSSystem:
    matrix: np.ndarray
    rhs: np.ndarray


def build_boundary_grid(rho, n):
    """Grid with ``n`` nodes per boundary circle (``2n`` in total)."""
    if not 0 < rho < 1:
        raise InvalidArgument(f"need 0 < rho < 1, got {rho}")
    if n < 4 or n % 2:
        raise InvalidArgument(f"nodes per circle must be even and >= 4, got {n}")
    t = 2 * np.pi * np.arange(n) / n
    e = np.exp(1j * t)
    ec = np.conj(e)
    nodes = np.concatenate([e, rho * ec])
    tangents = np.concatenate([1j * e, -1j * ec])
    h = 2 * np.pi / n
    weights = np.concatenate([np.full(n, h), np.full(n, rho * h)])
    return BoundaryGrid(rho=float(rho), n=n, nodes=nodes, tangents=tangents, weights=weights)


def ks_kernel(z, Tz, w, Tw):
    """Kerzman-Stein kernel ``A(z, w)``; zero on the diagonal ``z == w``.

    Broadcasts over array arguments.
    """
    z, Tz, w, Tw = (np.asarray(v, dtype=complex) for v in (z, Tz, w, Tw))
    diff = z - w
    diag = diff == 0
    safe = np.where(diag, 1.0, diff)
    val = _INV_2PI_I * (Tw / safe - np.conj(Tz) / np.conj(safe))
    val = np.where(diag, 0.0, val)
    return complex(val) if val.ndim == 0 else val


def ks_rhs(z, Tz, a):
    z, Tz = np.asarray(z, dtype=complex), np.asarray(Tz, dtype=complex)
    val = -_INV_2PI_I * np.conj(Tz) / (np.conj(z) - np.conj(a))
    return complex(val) if val.ndim == 0 else val


def assemble_ks_system(grid, a):
    """``(I + A W) x = g`` with ``A_jk = A(z_j, z_k)`` and ``W = diag(weights)``."""
    z, T = grid.nodes, grid.tangents
    A = ks_kernel(z[:, None], T[:, None], z[None, :], T[None, :])
    matrix = np.eye(z.size, dtype=complex) + A * grid.weights[None, :]
    return KSSystem(matrix=matrix, rhs=ks_rhs(z, T, a))


def kernel_matrix(system, grid):
    """Recover ``A`` (weights divided out) from an assembled system."""
    return (system.matrix - np.eye(grid.nodes.size)) / grid.weights[None, :]


def solve_system(system):
    try:
        return np.linalg.solve(system.matrix, system.rhs)
    except np.linalg.LinAlgError as exc:
        raise SingularSystem(str(exc)) from exc


def solve_ks(grid, a):
    """Nystrom approximation of ``S(z_j, a)`` at every grid node."""
    a = complex(a)
    if not grid.rho < abs(a) < 1:
        raise InvalidArgument("anchor must lie strictly inside the annulus")
    return solve_system(assemble_ks_system(grid, a))


def residual_norm(system, x):
    return float(np.max(np.abs(system.matrix @ x - system.rhs)))


def error_norm(values_a, values_b):
    """Sup-norm ``max_j |values_a[j] - values_b[j]|``."""
    va, vb = np.asarray(values_a), np.asarray(values_b)
    if va.shape != vb.shape:
        raise LengthMismatch(f"shapes differ: {va.shape} vs {vb.shape}")
    if va.size == 0:
        return 0.0
    return float(np.max(np.abs(va - vb)))
