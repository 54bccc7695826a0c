"""Tropical linear algebra: determinants, singularity, signs, linear forms.

The tropical determinant is the optimal value of a linear assignment
problem; we solve it with a Hungarian-type shortest-augmenting-path
routine over exact rationals, treating INF entries as absent edges.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from typing import List, Optional, Sequence, Tuple

from .points import TropicalPoint
from .rationals import ExtRat, INF, is_inf, parse_scalar

DEFAULT_SIGN_CAP = 8

Matrix = Tuple[Tuple[ExtRat, ...], ...]


class NotSquareError(ValueError):
    """Determinant-type operations need a square matrix."""


class InfiniteDeterminantError(ValueError):
    """No finite realizer exists; singularity / sign are undefined."""


class SignCapExceeded(ValueError):
    """Matrix too large for permutation enumeration of the tropical sign."""


def as_matrix(rows: Sequence[Sequence], allow_inf: bool = True) -> Matrix:
    mat = tuple(
        tuple(parse_scalar(x, allow_inf=allow_inf) for x in row) for row in rows
    )
    if not mat or not mat[0]:
        raise ValueError("matrix must be non-empty")
    width = len(mat[0])
    if any(len(row) != width for row in mat):
        raise ValueError("ragged matrix")
    return mat


def _require_square(m: Matrix) -> int:
    if len(m) != len(m[0]):
        raise NotSquareError(f"matrix is {len(m)}x{len(m[0])}, not square")
    return len(m)


def _min_cost_assignment(a: Matrix) -> Optional[List[int]]:
    """Solve the linear assignment problem exactly.

    Returns sigma with sigma[i] = column matched to row i (0-based), or
    None when no perfect matching over the finite entries exists.
    Shortest augmenting paths with potentials, O(d^3) arithmetic.
    """
    n = len(a)
    zero = Fraction(0)
    u = [zero] * (n + 1)
    v = [zero] * (n + 1)
    match = [0] * (n + 1)  # match[j] = row assigned to column j (1-based)
    way = [0] * (n + 1)
    for i in range(1, n + 1):
        match[0] = i
        j0 = 0
        minv: List[ExtRat] = [INF] * (n + 1)
        used = [False] * (n + 1)
        while True:
            used[j0] = True
            i0 = match[j0]
            delta: ExtRat = INF
            j1 = -1
            for j in range(1, n + 1):
                if used[j]:
                    continue
                cost = a[i0 - 1][j - 1]
                cur = INF if is_inf(cost) else cost - u[i0] - v[j]
                if cur < minv[j]:
                    minv[j] = cur
                    way[j] = j0
                if minv[j] < delta:
                    delta = minv[j]
                    j1 = j
            if is_inf(delta):
                return None
            for j in range(n + 1):
                if used[j]:
                    u[match[j]] += delta
                    v[j] -= delta
                else:
                    if not is_inf(minv[j]):
                        minv[j] -= delta
            j0 = j1
            if match[j0] == 0:
                break
        while j0:
            j1 = way[j0]
            match[j0] = match[j1]
            j0 = j1
    sigma = [0] * n
    for j in range(1, n + 1):
        sigma[match[j] - 1] = j - 1
    return sigma


@dataclass(frozen=True)
class TropicalDetResult:
    """Value of the tropical determinant with one optimal permutation."""

    value: ExtRat
    realizer: Optional[Tuple[int, ...]]  # sigma as a tuple, 0-based; None iff INF

    @property
    def is_finite(self) -> bool:
        return not is_inf(self.value)


def trop_det(rows: Sequence[Sequence]) -> TropicalDetResult:
    """Minimum over permutations of the diagonal sum (min-plus permanent)."""
    m = as_matrix(rows)
    _require_square(m)
    sigma = _min_cost_assignment(m)
    if sigma is None:
        return TropicalDetResult(INF, None)
    value = sum((m[i][sigma[i]] for i in range(len(m))), Fraction(0))
    return TropicalDetResult(value, tuple(sigma))


def trop_det_brute(rows: Sequence[Sequence]) -> TropicalDetResult:
    """Reference oracle: enumerate all permutations."""
    m = as_matrix(rows)
    d = _require_square(m)
    best: ExtRat = INF
    best_sigma = None
    for perm in itertools.permutations(range(d)):
        s: ExtRat = Fraction(0)
        for i in range(d):
            e = m[i][perm[i]]
            if is_inf(e):
                s = INF
                break
            s = s + e
        if s < best:
            best = s
            best_sigma = perm
    return TropicalDetResult(best, best_sigma)


def realizers(rows: Sequence[Sequence]) -> List[Tuple[int, ...]]:
    """All optimal permutations, by brute force (test oracle)."""
    m = as_matrix(rows)
    d = _require_square(m)
    best = trop_det_brute(m).value
    if is_inf(best):
        return []
    out = []
    for perm in itertools.permutations(range(d)):
        s: ExtRat = Fraction(0)
        for i in range(d):
            e = m[i][perm[i]]
            if is_inf(e):
                s = INF
                break
            s = s + e
        if s == best:
            out.append(perm)
    return out


def is_singular(rows: Sequence[Sequence]) -> bool:
    """Tropical singularity via d+1 assignment problems.

    Solves for one realizer sigma, then raises each diagonal entry
    (i, sigma(i)) by one in turn; the determinant stays unchanged for
    some i exactly when a second realizer exists.
    """
    m = as_matrix(rows)
    d = _require_square(m)
    base = trop_det(m)
    if not base.is_finite:
        raise InfiniteDeterminantError(
            "tropical determinant is INF; singularity is undefined"
        )
    sigma = base.realizer
    for i in range(d):
        bumped = [list(row) for row in m]
        bumped[i][sigma[i]] = m[i][sigma[i]] + 1
        if trop_det(bumped).value == base.value:
            return True
    return False


def trop_sign(rows: Sequence[Sequence], cap: int = DEFAULT_SIGN_CAP) -> int:
    """+1 / -1 when all realizers are even / odd, 0 when both occur.

    Brute force over permutations, capped; the polynomial even-cycle
    reduction is deliberately not implemented.
    """
    m = as_matrix(rows)
    d = _require_square(m)
    if d > cap:
        raise SignCapExceeded(f"d={d} exceeds the sign cap {cap}")
    best: ExtRat = INF
    parities = set()
    for perm in itertools.permutations(range(d)):
        s: ExtRat = Fraction(0)
        for i in range(d):
            e = m[i][perm[i]]
            if is_inf(e):
                s = INF
                break
            s = s + e
        if is_inf(s):
            continue
        if s < best:
            best = s
            parities = {_parity(perm)}
        elif s == best:
            parities.add(_parity(perm))
    if is_inf(best):
        raise InfiniteDeterminantError(
            "tropical determinant is INF; sign is undefined"
        )
    if len(parities) == 2:
        return 0
    return 1 if parities == {0} else -1


def _parity(perm: Tuple[int, ...]) -> int:
    seen = [False] * len(perm)
    parity = 0
    for i in range(len(perm)):
        if seen[i]:
            continue
        length = 0
        j = i
        while not seen[j]:
            seen[j] = True
            j = perm[j]
            length += 1
        parity ^= (length - 1) & 1
    return parity


def eval_linear_form(a: Sequence, x: TropicalPoint) -> Tuple[ExtRat, bool]:
    """Tropical inner product <a, x> and whether it vanishes.

    The form vanishes when the minimum is attained at least twice; INF
    terms never attain the minimum.  All-INF terms are an error.
    """
    coeffs = [parse_scalar(c, allow_inf=True) for c in a]
    if len(coeffs) != x.dim:
        raise ValueError("coefficient vector and point have different dimensions")
    terms = [INF if is_inf(c) else c + xi for c, xi in zip(coeffs, x.coords)]
    finite = [t for t in terms if not is_inf(t)]
    if not finite:
        raise InfiniteDeterminantError("all terms are INF; the form is undefined")
    value = min(finite)
    vanishes = sum(1 for t in terms if t == value) >= 2
    return value, vanishes


def tau(x: TropicalPoint, fixed: Sequence[TropicalPoint],
        cap: int = DEFAULT_SIGN_CAP) -> int:
    """Sidedness of x against d-1 fixed points: tropical sign of the stack."""
    d = x.dim
    if len(fixed) != d - 1 or any(p.dim != d for p in fixed):
        raise ValueError(f"need {d - 1} fixed points of dimension {d}")
    rows = [x.coords] + [p.coords for p in fixed]
    return trop_sign(rows, cap=cap)
