"""Closest-point and shortest-vector search for desk-scale lattices.

Depth-first enumeration over integer generator coefficients in a
Gram-Schmidt (QR) frame, with the candidate box seeded by coordinatewise
rounding. No basis reduction is performed: catalog bases are already
short and dimensions are capped at 12.

Recovery from a phase-space displacement amounts to asking whether the
displacement lies in the Voronoi cell of the normalizer lattice, so the
decoder tracks the runner-up distance and flags near-ties; a tie counts
as a decoding failure (the cell boundary has measure zero under Gaussian
noise, and failing there is the conservative choice).
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from .symplectic_lattice import Lattice

MAX_DIM = 12
TIE_REL = 1e-12
_SLACK_REL = 1e-9  # search margin so tie partners are always enumerated


@dataclass(frozen=True)
class DecodeResult:
    closest: np.ndarray      # nearest lattice point, ambient coordinates
    coeffs: np.ndarray       # its integer coordinates in the basis
    dist_sq: float
    tie: bool                # a second lattice point at (numerically) equal distance


@lru_cache(maxsize=128)
def _frame(lat: Lattice):
    """Float generator matrix, its inverse, and a triangular search frame."""
    m = lat.effective_matrix()
    q, r = np.linalg.qr(m.T)
    lower = r.T  # lattice point c @ m has rotated image c @ lower
    return m, np.linalg.inv(m), lower, q


def _check_dims(lat: Lattice, x=None):
    if lat.n > MAX_DIM:
        raise ValueError(f"decoder supports dimensions up to {MAX_DIM}, got {lat.n}")
    if x is not None and len(x) != lat.n:
        raise ValueError("point/lattice dimension mismatch")


def _enumerate(lower, y, bound, skip_zero=False, track_second=True):
    """DFS over coefficients, levels n-1..0; returns (d1, c1, d2).

    ``bound`` prunes partial squared distances; it shrinks to the best
    distance plus a tie margin, so d2 is exact whenever it is within the
    tie tolerance of d1.
    """
    n = len(y)
    rows = [list(r) for r in lower]
    best = [math.inf, None, math.inf]  # d1, c1, d2
    coeffs = [0] * n

    def leaf(partial):
        if skip_zero and not any(coeffs):
            return
        if partial < best[0]:
            if best[1] is not None:
                best[2] = best[0]
            best[0], best[1] = partial, coeffs.copy()
        elif partial < best[2]:
            best[2] = partial
        if track_second:
            margin = _SLACK_REL * (1.0 + best[0])
        else:
            margin = 0.0
        return best[0] + margin

    def dfs(k, partial, bound):
        if k < 0:
            new_bound = leaf(partial)
            return bound if new_bound is None else min(bound, new_bound)
        s = 0.0
        for i in range(k + 1, n):
            s += coeffs[i] * rows[i][k]
        diag = rows[k][k]
        mu = (y[k] - s) / diag
        lo = math.floor(mu)
        hi = lo + 1
        lo_open = hi_open = True
        while lo_open or hi_open:
            if hi_open and (not lo_open or hi - mu <= mu - lo):
                c, from_hi = hi, True
            else:
                c, from_hi = lo, False
            t = c * diag + s - y[k]
            p = partial + t * t
            if p <= bound:
                coeffs[k] = c
                bound = dfs(k - 1, p, bound)
                if from_hi:
                    hi += 1
                else:
                    lo -= 1
            elif from_hi:
                hi_open = False
            else:
                lo_open = False
        return bound

    dfs(n - 1, 0.0, bound)
    return best[0], best[1], best[2]


def closest_point(lat: Lattice, x) -> DecodeResult:
    """True nearest lattice point by branch-and-bound enumeration."""
    _check_dims(lat, x)
    m, m_inv, lower, q = _frame(lat)
    x = np.asarray(x, dtype=float)
    y = x @ q

    seed = np.rint(x @ m_inv)
    diff = seed @ m - x
    bound = float(diff @ diff) * (1.0 + _SLACK_REL) + _SLACK_REL

    d1, c1, d2 = _enumerate(lower, list(y), bound)
    coeffs = np.array(c1, dtype=np.int64)
    closest = coeffs.astype(float) @ m
    delta = x - closest
    dist_sq = float(delta @ delta)
    tie = bool((d2 - d1) <= TIE_REL * (1.0 + d1))
    return DecodeResult(closest=closest, coeffs=coeffs, dist_sq=dist_sq, tie=tie)


def in_voronoi_cell(lat: Lattice, x) -> bool:
    """True iff x is strictly closer to the origin than to any other site.

    Boundary points (ties) count as outside.
    """
    res = closest_point(lat, x)
    return not res.tie and not res.coeffs.any()


def shortest_vector(lat: Lattice) -> tuple[np.ndarray, float]:
    """A nonzero lattice vector of minimal norm and its squared length."""
    _check_dims(lat)
    m, _, lower, _ = _frame(lat)
    row_norms = np.einsum("ij,ij->i", m, m)
    bound = float(row_norms.min()) * (1.0 + _SLACK_REL)
    d1, c1, _ = _enumerate(lower, [0.0] * lat.n, bound, skip_zero=True,
                           track_second=False)
    coeffs = np.array(c1, dtype=np.int64)
    vec = coeffs.astype(float) @ m
    return vec, float(vec @ vec)


def packing_radius(lat: Lattice) -> float:
    """Half the shortest nonzero vector length."""
    _, length_sq = shortest_vector(lat)
    return math.sqrt(length_sq) / 2.0
