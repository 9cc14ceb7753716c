"""Characteristic-root solving.

Degrees 2 and 3 get closed forms built on resolvent sums (weighted by the
cube-root and fourth-root rotors); higher degrees fall back to simultaneous
Durand-Kerner iteration.  The same rotor weights drive the permutation-table
machinery: extracting resolvent values from a root tuple and reconstructing
the roots back from those values.
"""
from __future__ import annotations

import cmath
import itertools
import math
from dataclasses import dataclass

import numpy as np

from .errors import (
    ArityMismatch,
    BranchSelectionFailed,
    InconsistentSigmas,
    NoConvergence,
    UnsupportedDegree,
)
from .recurrence import CharPoly
from .unity import HALF, IDENTITY, QUARTER, THIRD, THREE_QUARTERS, TWO_THIRDS, Rotor, rotor_value

_OMEGA = rotor_value(THIRD)
_OMEGA2 = rotor_value(TWO_THIRDS)


def _sort_roots(roots):
    """Descending modulus, then real part, then imaginary part."""
    return tuple(sorted(roots, key=lambda z: (-abs(z), -z.real, -z.imag)))


def _min_separation(roots) -> float:
    if len(roots) < 2:
        return math.inf
    return min(abs(a - b) for a, b in itertools.combinations(roots, 2))


@dataclass(frozen=True)
class RootSet:
    roots: tuple          # sorted by the modulus/real/imag convention
    residuals: tuple      # |p(r)| per root, same order
    min_separation: float
    method: str           # "closed2" | "closed3" | "numeric"


@dataclass(frozen=True)
class ResolventSet:
    degree: int
    sigmas: tuple
    A: float | None = None
    B: float | None = None


@dataclass(frozen=True)
class PermutationTable:
    """Rows are cyclic arrangements of root indices; the signature gives the
    rotor weight applied at each column position."""

    signature: tuple      # of Rotor
    rows: tuple           # of index tuples


def _root_set(raw_roots, poly: CharPoly, method: str) -> RootSet:
    rts = _sort_roots(complex(r) for r in raw_roots)
    residuals = tuple(abs(poly.value(r)) for r in rts)
    return RootSet(rts, residuals, _min_separation(rts), method)


def quadratic_roots(c0: float, c1: float):
    """Roots of x^2 = c1 x + c0 and the resolvent difference sigma1.

    sigma1 is the principal square root of c1^2 + 4 c0; the roots are
    (c1 +/- sigma1)/2.  Returns (RootSet, sigma1).
    """
    disc = c1 * c1 + 4.0 * c0
    sigma1 = cmath.sqrt(complex(disc))
    r = (c1 + sigma1) / 2.0
    s = (c1 - sigma1) / 2.0
    poly = CharPoly(2, (c0, c1))
    return _root_set((r, s), poly, "closed2"), sigma1


def cubic_resolvents(c0: float, c1: float, c2: float) -> ResolventSet:
    """Resolvent cube roots (sigma1, sigma2) for x^3 = c2 x^2 + c1 x + c0.

    sigma1^3 and sigma2^3 are the two roots of y^2 - A y + B^3 with
    A = 2 c2^3 + 9 c1 c2 + 27 c0 and B = c2^2 + 3 c1.  The cube-root
    branches are paired so that sigma1 * sigma2 = B.
    """
    A = 2.0 * c2 ** 3 + 9.0 * c1 * c2 + 27.0 * c0
    B = c2 * c2 + 3.0 * c1
    sq = cmath.sqrt(complex(A * A - 4.0 * B ** 3))
    y1 = (A + sq) / 2.0
    y2 = (A - sq) / 2.0
    sigma1 = y1 ** (1.0 / 3.0) if y1 != 0 else 0j
    base = y2 ** (1.0 / 3.0) if y2 != 0 else 0j
    scale = 1.0 + abs(B)
    best = None
    best_err = math.inf
    for k in range(3):
        cand = base * _OMEGA ** k
        err = abs(sigma1 * cand - B)
        if err < best_err:
            best, best_err = cand, err
    if best_err > 1e-6 * scale:
        raise BranchSelectionFailed(
            f"no cube-root pairing satisfies sigma1*sigma2 = B (best error {best_err:.3g})"
        )
    return ResolventSet(3, (sigma1, best), A, B)


def _cubic_labelled(c0: float, c1: float, c2: float):
    """Roots in the labelling tied to (sigma1, sigma2), plus the resolvents."""
    res = cubic_resolvents(c0, c1, c2)
    s1, s2 = res.sigmas
    r1 = (c2 + s1 + s2) / 3.0
    r2 = (c2 + _OMEGA2 * s1 + _OMEGA * s2) / 3.0
    r3 = (c2 + _OMEGA * s1 + _OMEGA2 * s2) / 3.0
    return (r1, r2, r3), res


def cubic_roots(c0: float, c1: float, c2: float) -> RootSet:
    """Closed-form roots of x^3 = c2 x^2 + c1 x + c0 via the resolvents."""
    labelled, _ = _cubic_labelled(c0, c1, c2)
    poly = CharPoly(3, (c0, c1, c2))
    return _root_set(labelled, poly, "closed3")


def numeric_roots(p: CharPoly, tol: float = 1e-10) -> RootSet:
    """Simultaneous (Durand-Kerner) iteration for any degree >= 1.

    Starts on a circle of radius 1 + max|c_j| with an irrational angular
    offset so no guess sits on a symmetry axis.  Converged when the largest
    update in a sweep drops below tol; 1000 sweeps without that is failure.
    """
    n = p.degree
    if n < 1:
        raise UnsupportedDegree("degree must be at least 1")
    radius = 1.0 + max(abs(c) for c in p.coeffs)
    offset = (math.sqrt(5.0) - 1.0) / 2.0  # radians
    zs = [radius * cmath.exp(1j * (2.0 * math.pi * k / n + offset)) for k in range(n)]
    for _ in range(1000):
        worst = 0.0
        for i in range(n):
            den = complex(1)
            for j in range(n):
                if j != i:
                    den *= zs[i] - zs[j]
            if den == 0:
                zs[i] += tol
                worst = math.inf
                continue
            delta = p.value(zs[i]) / den
            zs[i] -= delta
            worst = max(worst, abs(delta))
        if worst < tol:
            return _root_set(zs, p, "numeric")
    raise NoConvergence(f"no convergence to {tol:g} within 1000 sweeps")


def vieta_residuals(roots: RootSet, p: CharPoly):
    """|e_k(roots) - expected| for each elementary symmetric polynomial.

    Expanding prod(x - r_i) against x^n - c_{n-1} x^(n-1) - ... - c_0 gives
    the expected value (-1)^(k+1) c_{n-k} for e_k.
    """
    n = p.degree
    if len(roots.roots) != n:
        raise ArityMismatch(f"{len(roots.roots)} roots for degree {n}")
    # expand prod(x - r_i); coeffs[k] multiplies x^(n-k)
    coeffs = [complex(1)]
    for r in roots.roots:
        nxt = [complex(0)] * (len(coeffs) + 1)
        for i, a in enumerate(coeffs):
            nxt[i] += a
            nxt[i + 1] -= a * r
        coeffs = nxt
    out = []
    for k in range(1, n + 1):
        e_k = (-1) ** k * coeffs[k]
        expected = (-1) ** (k + 1) * p.coeffs[n - k]
        out.append(abs(e_k - expected))
    return out


_SIGNED_SIGNATURES = {
    2: ((IDENTITY, HALF),),
    3: ((IDENTITY, THIRD, TWO_THIRDS), (IDENTITY, TWO_THIRDS, THIRD)),
    4: ((IDENTITY, QUARTER, THREE_QUARTERS, HALF),),
}


def permutation_tables(n: int):
    """Symmetric-sum table plus the signed resolvent tables for degree n.

    Every table's rows are the n cyclic rotations of an arrangement of the
    root indices; the signed signatures attach an n-th root of unity (or the
    fourth-root family for n=4) to each column.
    """
    if n not in (2, 3, 4):
        raise UnsupportedDegree(f"permutation tables cover degrees 2-4, not {n}")

    def rotations(arr):
        w = len(arr)
        return tuple(tuple(arr[(m - k) % w] for m in range(w)) for k in range(w))

    sym_sig = tuple(IDENTITY for _ in range(n))
    base = tuple(range(n))
    tables = [PermutationTable(sym_sig, rotations(base))]
    if n in (2, 3):
        for sig in _SIGNED_SIGNATURES[n]:
            tables.append(PermutationTable(sig, rotations(base)))
    else:
        sig = _SIGNED_SIGNATURES[4][0]
        for rest in itertools.permutations((1, 2, 3)):
            tables.append(PermutationTable(sig, rotations((0,) + rest)))
    return tables


def sigma_from_roots(roots, table: PermutationTable):
    """Row-wise weighted sums: one value per row of the table."""
    roots = [complex(r) for r in roots]
    if len(roots) != len(table.signature):
        raise ArityMismatch(
            f"table expects {len(table.signature)} roots, got {len(roots)}"
        )
    weights = [rotor_value(r) for r in table.signature]
    return [sum(w * roots[idx] for w, idx in zip(weights, row)) for row in table.rows]


def roots_from_sigma(c_top: float, sigmas, n: int):
    """Invert the resolvent sums back to the n roots.

    n=2 and n=3 use the exact reconstruction; n=4 solves the overdetermined
    7x4 system (symmetric sum plus the first row of each signed table) by
    least squares and rejects inconsistent inputs.
    """
    sigmas = [complex(s) for s in sigmas]
    if n == 2:
        if len(sigmas) != 1:
            raise ArityMismatch("degree 2 takes exactly one sigma")
        s1 = sigmas[0]
        return [(c_top + s1) / 2.0, (c_top - s1) / 2.0]
    if n == 3:
        if len(sigmas) != 2:
            raise ArityMismatch("degree 3 takes exactly two sigmas")
        s1, s2 = sigmas
        return [
            (c_top + s1 + s2) / 3.0,
            (c_top + _OMEGA2 * s1 + _OMEGA * s2) / 3.0,
            (c_top + _OMEGA * s1 + _OMEGA2 * s2) / 3.0,
        ]
    if n == 4:
        if len(sigmas) != 6:
            raise ArityMismatch("degree 4 takes exactly six sigmas")
        rows = [[1.0 + 0j] * 4]
        for table in permutation_tables(4)[1:]:
            weights = [rotor_value(r) for r in table.signature]
            row = [0j] * 4
            for w, idx in zip(weights, table.rows[0]):
                row[idx] = w
            rows.append(row)
        matrix = np.array(rows, dtype=complex)
        rhs = np.array([complex(c_top)] + sigmas, dtype=complex)
        sol, *_ = np.linalg.lstsq(matrix, rhs, rcond=None)
        residual = float(max(abs(matrix @ sol - rhs)))
        scale = 1.0 + max(abs(c_top), max(abs(s) for s in sigmas))
        if residual > 1e-8 * scale:
            raise InconsistentSigmas(
                f"sigma values are not consistent with any root tuple "
                f"(residual {residual:.3g})"
            )
        return [complex(z) for z in sol]
    raise UnsupportedDegree(f"reconstruction covers degrees 2-4, not {n}")
