"""Stabilizer lattices in 2N-dimensional phase space, with exact algebra.

A lattice is stored as a rational generator matrix ``basis`` (rows are
generator vectors v = (alpha, beta) in dimensionless symplectic
coordinates) together with a rational scale factor ``scale_sq`` = lambda;
the effective generator matrix is M = sqrt(lambda) * basis.  Keeping the
sqrt(lambda) symbolic means every algebraic predicate -- symplectic
integrality, duals, standard forms, code dimensions -- is exact rational
arithmetic with no tolerance anywhere.

Conventions: coordinates are ordered (q-like..., p-like...), so the
symplectic form is the block matrix [[0, I], [-I, 0]]. Two phase-space
translations commute exactly when their symplectic form is an integer,
which is why integrality of A = M omega M^T characterizes a valid
stabilizer group.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from . import exact
from .exact import Matrix


def omega(n: int) -> Matrix:
    """Symplectic form [[0, I_N], [-I_N, 0]] for n = 2N coordinates."""
    if n <= 0 or n % 2:
        raise ValueError("phase-space dimension must be even and positive")
    half = n // 2
    one, zero = Fraction(1), Fraction(0)
    rows = []
    for i in range(n):
        row = [zero] * n
        if i < half:
            row[i + half] = one
        else:
            row[i - half] = -one
        rows.append(tuple(row))
    return tuple(rows)


@dataclass(frozen=True)
class Lattice:
    """A full-rank lattice sqrt(scale_sq) * (integer row spans of basis)."""

    n: int
    basis: Matrix
    scale_sq: Fraction = Fraction(1)

    def __post_init__(self):
        object.__setattr__(self, "basis", exact.freeze(self.basis))
        object.__setattr__(self, "scale_sq", exact.as_fraction(self.scale_sq))
        if self.n <= 0 or self.n % 2:
            raise ValueError("lattice dimension must be even and positive")
        if len(self.basis) != self.n or len(self.basis[0]) != self.n:
            raise ValueError("basis must be an n x n matrix")
        if self.scale_sq <= 0:
            raise ValueError("scale_sq must be positive")
        if exact.determinant(self.basis) == 0:
            raise ValueError("basis is singular")

    @property
    def num_modes(self) -> int:
        return self.n // 2

    def effective_matrix(self) -> np.ndarray:
        """Float generator matrix M = sqrt(scale_sq) * basis."""
        b = np.array([[float(v) for v in row] for row in self.basis])
        return math.sqrt(float(self.scale_sq)) * b

    def normalized(self) -> "Lattice":
        """Fold the rational content of the basis into scale_sq.

        The returned lattice generates the identical point set; entries of
        the new basis have no common rational factor.
        """
        c = exact.content(self.basis)
        if c == 1:
            return self
        basis = exact.scale(self.basis, 1 / c)
        return Lattice(self.n, basis, self.scale_sq * c * c)


def lattice_from_rows(rows, scale_sq=1) -> Lattice:
    basis = exact.freeze(rows)
    return Lattice(len(basis), basis, exact.as_fraction(scale_sq))


@dataclass(frozen=True)
class SymplecticGram:
    """A = M omega M^T; antisymmetric, exact rational."""

    entries: Matrix

    def __post_init__(self):
        object.__setattr__(self, "entries", exact.freeze(self.entries))
        a = self.entries
        n = len(a)
        if any(len(row) != n for row in a):
            raise ValueError("gram matrix must be square")
        if any(a[i][j] != -a[j][i] for i in range(n) for j in range(n)):
            raise ValueError("gram matrix must be antisymmetric")

    @property
    def n(self) -> int:
        return len(self.entries)


@dataclass(frozen=True)
class StandardForm:
    """Unimodular R and positive diagonal D with R A R^T = [[0,D],[-D,0]]."""

    r: Matrix
    diag: tuple[int, ...]

    def d_matrix(self) -> Matrix:
        n = len(self.diag)
        return tuple(
            tuple(Fraction(self.diag[i] if i == j else 0) for j in range(n))
            for i in range(n)
        )

    def block_form(self) -> Matrix:
        """The matrix [[0, D], [-D, 0]] this form certifies."""
        half = len(self.diag)
        n = 2 * half
        rows = []
        for i in range(n):
            row = [Fraction(0)] * n
            if i < half:
                row[i + half] = Fraction(self.diag[i])
            else:
                row[i - half] = Fraction(-self.diag[i - half])
            rows.append(tuple(row))
        return tuple(rows)


def symplectic_gram(lat: Lattice) -> SymplecticGram:
    """Exact A = scale_sq * basis omega basis^T."""
    w = omega(lat.n)
    a = exact.mat_mul(exact.mat_mul(lat.basis, w), exact.transpose(lat.basis))
    return SymplecticGram(exact.scale(a, lat.scale_sq))


def is_symplectically_integral(lat: Lattice) -> bool:
    """True iff every symplectic product of generators is an integer."""
    return exact.is_integral(symplectic_gram(lat).entries)


def dual_lattice(lat: Lattice) -> Lattice:
    """Symplectic dual, generated by A^-1 M (the normalizer lattice).

    The result is normalized (basis content folded into scale_sq) and the
    defining identity M_dual omega M^T = I is re-checked exactly.
    """
    a = symplectic_gram(lat).entries
    a_inv = exact.inverse(a)  # ValueError on singular A
    dual = Lattice(lat.n, exact.mat_mul(a_inv, lat.basis), lat.scale_sq).normalized()
    pairing = symplectic_pairing(dual, lat)
    if pairing != exact.identity(lat.n):
        raise AssertionError("dual lattice failed the pairing identity")
    return dual


def symplectic_pairing(lat1: Lattice, lat2: Lattice) -> Matrix:
    """Exact M1 omega M2^T for the effective generator matrices.

    Requires scale_sq(1) * scale_sq(2) to be a rational square, else the
    pairing is irrational and a ValueError is raised.
    """
    if lat1.n != lat2.n:
        raise ValueError("dimension mismatch")
    root = exact.fraction_sqrt(lat1.scale_sq * lat2.scale_sq)
    if root is None:
        raise ValueError("pairing scale is irrational")
    w = omega(lat1.n)
    prod = exact.mat_mul(exact.mat_mul(lat1.basis, w), exact.transpose(lat2.basis))
    return exact.scale(prod, root)


def standard_form(gram: SymplecticGram) -> StandardForm:
    """Reduce an integral antisymmetric A to [[0,D],[-D,0]] by a unimodular R.

    Integer congruence transformations only (paired row/column additions,
    swaps): a gcd-descent pivot loop, the antisymmetric analogue of Smith
    reduction. D is normalized positive and sorted ascending.
    """
    if not exact.is_integral(gram.entries):
        raise ValueError("standard form requires an integral gram matrix")
    n = gram.n
    a = [[int(v) for v in row] for row in gram.entries]
    r = [[int(i == j) for j in range(n)] for i in range(n)]

    def add(i, j, c):
        # generator op v_i += c * v_j, applied congruently to A
        if c == 0:
            return
        ai, aj, ri, rj = a[i], a[j], r[i], r[j]
        for t in range(n):
            ai[t] += c * aj[t]
        for row in a:
            row[i] += c * row[j]
        for t in range(n):
            ri[t] += c * rj[t]

    def swap(i, j):
        if i == j:
            return
        a[i], a[j] = a[j], a[i]
        for row in a:
            row[i], row[j] = row[j], row[i]
        r[i], r[j] = r[j], r[i]

    s = 0
    while s < n:
        while True:
            best = None
            for i in range(s, n):
                for j in range(i + 1, n):
                    v = abs(a[i][j])
                    if v and (best is None or v < best[0]):
                        best = (v, i, j)
            if best is None:
                raise ValueError("gram matrix is singular")
            _, pi, pj = best
            swap(s, pi)
            if pj == s:
                pj = pi
            swap(s + 1, pj)
            if a[s][s + 1] < 0:
                swap(s, s + 1)
            d = a[s][s + 1]
            clean = True
            for i in range(s + 2, n):
                add(i, s, -(a[i][s + 1] // d))
                add(i, s + 1, a[i][s] // d)
                if a[i][s + 1] or a[i][s]:
                    clean = False  # nonzero remainder < d; re-pivot
            if clean:
                break
        s += 2

    # interleaved symplectic pairs -> sorted block form
    half = n // 2
    pairs = sorted(range(half), key=lambda k: a[2 * k][2 * k + 1])
    order = [2 * k for k in pairs] + [2 * k + 1 for k in pairs]
    r_final = exact.freeze([r[i] for i in order])
    diag = tuple(a[2 * k][2 * k + 1] for k in pairs)

    form = StandardForm(r_final, diag)
    check = exact.mat_mul(exact.mat_mul(r_final, gram.entries), exact.transpose(r_final))
    if check != form.block_form() or abs(exact.determinant(r_final)) != 1:
        raise AssertionError("standard form reduction failed verification")
    return form


def code_dimension(lat: Lattice) -> int:
    """Code-space dimension m = det D = |Pf A| of an integral lattice."""
    if not is_symplectically_integral(lat):
        raise ValueError("lattice is not symplectically integral")
    m = 1
    for d in standard_form(symplectic_gram(lat)).diag:
        m *= d
    # |det M| = |det basis| * lambda^N must agree exactly
    vol = abs(exact.determinant(lat.basis)) * lat.scale_sq ** lat.num_modes
    if vol != m:
        raise AssertionError("code dimension disagrees with |det M|")
    return m


def rescale(lat: Lattice, lam: int) -> Lattice:
    """Scale a self-dual lattice by sqrt(lam), giving code dimension lam^N."""
    if lam < 1 or int(lam) != lam:
        raise ValueError("rescale factor must be a positive integer")
    if not is_symplectically_integral(lat) or code_dimension(lat) != 1:
        raise ValueError("rescale requires a symplectically self-dual lattice")
    if lam == 1:
        return lat
    return Lattice(lat.n, lat.basis, lat.scale_sq * lam)


def gram_matrix(lat: Lattice) -> Matrix:
    """Euclidean Gram matrix G = M M^T = scale_sq * basis basis^T."""
    return exact.scale(exact.mat_mul(lat.basis, exact.transpose(lat.basis)), lat.scale_sq)


def coset_member(lat: Lattice, v, v_scale_sq=None) -> bool:
    """Exact membership of sqrt(v_scale_sq) * v in the lattice.

    The vector scale defaults to the lattice's own. A scale whose ratio to
    the lattice scale has no rational square root is incompatible (no
    nonzero rational vector at that scale can be a lattice point).
    """
    u = tuple(exact.as_fraction(x) for x in v)
    if len(u) != lat.n:
        raise ValueError("vector/lattice dimension mismatch")
    mu = lat.scale_sq if v_scale_sq is None else exact.as_fraction(v_scale_sq)
    if all(x == 0 for x in u):
        return True
    root = exact.fraction_sqrt(mu / lat.scale_sq)
    if root is None:
        raise ValueError("vector scale is incompatible with the lattice scale")
    coords = exact.vec_mat([root * x for x in u], exact.inverse(lat.basis))
    return all(c.denominator == 1 for c in coords)


@dataclass(frozen=True)
class LatticeCode:
    """A stabilizer lattice, its normalizer, and the code it defines."""

    stabilizer: Lattice
    normalizer: Lattice
    dimension: int
    rate_qubits: float


def make_code(lat: Lattice) -> LatticeCode:
    """Build the code defined by a symplectically integral lattice."""
    m = code_dimension(lat)  # also validates integrality
    normalizer = dual_lattice(lat)
    for row in lat.basis:
        if not coset_member(normalizer, row, lat.scale_sq):
            raise AssertionError("stabilizer generator escapes the normalizer")
    # unit-cell volume ratio |det M| / |det M_dual| must equal m^2
    vol = abs(exact.determinant(lat.basis)) * lat.scale_sq ** lat.num_modes
    vol_dual = abs(exact.determinant(normalizer.basis)) * normalizer.scale_sq ** normalizer.num_modes
    if vol != m * vol_dual * m:
        raise AssertionError("unit-cell volume ratio disagrees with m^2")
    rate = math.log2(m) / lat.num_modes
    return LatticeCode(lat, normalizer, m, rate)


def coeff_transition(src: Lattice, dst: Lattice) -> Matrix:
    """Exact change of coordinates: src-basis coefficients -> dst-basis.

    A row vector c of src coefficients denotes the point c M_src; the
    returned T satisfies c M_src = (c T) M_dst.
    """
    root = exact.fraction_sqrt(src.scale_sq / dst.scale_sq)
    if root is None:
        raise ValueError("lattice scales are incompatible")
    t = exact.mat_mul(src.basis, exact.inverse(dst.basis))
    return exact.scale(t, root)


def logical_class(code: LatticeCode, coeffs) -> tuple[Fraction, ...]:
    """Class of a normalizer point (by basis coefficients) in L_perp / L.

    The label is the fractional part of its stabilizer-basis coordinates;
    all zeros means the point is a stabilizer translation.
    """
    t = coeff_transition(code.normalizer, code.stabilizer)
    coords = exact.vec_mat([int(c) for c in coeffs], t)
    return tuple(c - math.floor(c) for c in coords)


def orthogonal_scale_sq(lat: Lattice) -> Fraction | None:
    """c^2 when the effective generator rows are orthogonal with equal
    norm c (G = c^2 I exactly); None otherwise.

    Such lattices are scaled rotations of the cubic lattice, for which
    nearest-point decoding is coordinatewise rounding.
    """
    g = gram_matrix(lat)
    c_sq = g[0][0]
    for i in range(lat.n):
        for j in range(lat.n):
            if g[i][j] != (c_sq if i == j else 0):
                return None
    return c_sq


# ---------------------------------------------------------------------------
# JSON interchange: rationals as "p/q" strings so exactness survives a trip
# through a file.

def lattice_to_dict(lat: Lattice) -> dict:
    return {
        "n": lat.n,
        "lambda": str(lat.scale_sq),
        "basis": [[str(v) for v in row] for row in lat.basis],
    }


def lattice_from_dict(data: dict) -> Lattice:
    return Lattice(int(data["n"]), exact.freeze(data["basis"]),
                   exact.as_fraction(data["lambda"]))


def save_lattice(lat: Lattice, path) -> None:
    with open(path, "w") as fh:
        json.dump(lattice_to_dict(lat), fh, indent=2)
        fh.write("\n")


def load_lattice(path) -> Lattice:
    with open(path) as fh:
        return lattice_from_dict(json.load(fh))
