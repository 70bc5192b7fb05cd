"""Exact solver for 0/1 covering LPs with primal and dual certificates.

The covering program ``min 1·x  s.t.  A x >= 1, x >= 0`` is solved through its
packing dual ``max 1·y  s.t.  Aᵀ y <= 1, y >= 0``, whose slack basis is an
immediate feasible start.  Pivoting is fraction-free (integer tableau plus a
running common denominator), entering/leaving variables follow Bland's rule,
and the covering solution is read off the reduced costs of the slacks.

Values are :class:`fractions.Fraction` throughout; nothing in the solve path
touches floating point.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from fractions import Fraction
from typing import Hashable, Iterable, Optional, Sequence

import numpy as np

from .errors import CertificateError, InfeasibleError, InputError

log = logging.getLogger(__name__)

Rational = Fraction


def format_rational(q: Fraction, approx: bool = False) -> str:
    """``p/q`` (bare ``p`` for integers), optionally followed by a 4-place decimal."""
    q = Fraction(q)
    s = str(q)
    if approx:
        s += f" (≈ {float(q):.4f})"
    return s


def parse_rational(s: str) -> Fraction:
    return Fraction(s)


@dataclass(frozen=True)
class WeightFunction:
    values: tuple[Fraction, ...]

    def __post_init__(self) -> None:
        for i, x in enumerate(self.values):
            if not (0 <= x <= 1):
                raise InputError(f"weight {x} at vertex {i} outside [0, 1]")

    @classmethod
    def unchecked(cls, values: Iterable) -> "WeightFunction":
        """Build without the [0, 1] check (for certificate tests and diagnostics)."""
        obj = object.__new__(cls)
        object.__setattr__(obj, "values", tuple(Fraction(v) for v in values))
        return obj

    @classmethod
    def of(cls, values: Iterable) -> "WeightFunction":
        return cls(tuple(Fraction(v) for v in values))

    @property
    def weight(self) -> Fraction:
        return sum(self.values, Fraction(0))

    def mass(self, vertices: Iterable[int]) -> Fraction:
        return sum((self.values[v] for v in vertices), Fraction(0))

    def __len__(self) -> int:
        return len(self.values)

    def __getitem__(self, i: int) -> Fraction:
        return self.values[i]


@dataclass(frozen=True)
class CoveringLP:
    """Rows are vertex-index supports; ``row_tags[i]`` lists every pair that produced row ``i``."""

    rows: tuple[frozenset[int], ...]
    n_cols: int
    row_tags: tuple[tuple[Hashable, ...], ...]

    @classmethod
    def build(cls, n_cols: int, tagged_rows: Iterable[tuple[Hashable, Iterable[int]]]) -> "CoveringLP":
        """Collect rows, dropping duplicate supports and merging their tags."""
        where: dict[frozenset[int], int] = {}
        rows: list[frozenset[int]] = []
        tags: list[list[Hashable]] = []
        for tag, support in tagged_rows:
            s = frozenset(support)
            for j in s:
                if not 0 <= j < n_cols:
                    raise InputError(f"row {tag!r} has column {j} outside 0..{n_cols - 1}")
            i = where.get(s)
            if i is None:
                where[s] = len(rows)
                rows.append(s)
                tags.append([tag])
            else:
                tags[i].append(tag)
        return cls(tuple(rows), n_cols, tuple(tuple(t) for t in tags))

    @classmethod
    def from_rows(cls, n_cols: int, rows: Iterable[Iterable[int]]) -> "CoveringLP":
        return cls.build(n_cols, ((i, r) for i, r in enumerate(rows)))


@dataclass(frozen=True)
class LPSolution:
    value: Fraction
    primal: WeightFunction
    dual: tuple[Fraction, ...]
    pivots: int = 0


def _minimal_rows(rows: Sequence[frozenset[int]]) -> list[int]:
    """Indices of rows that contain no other row (a superset row is implied)."""
    masks = [sum(1 << j for j in r) for r in rows]
    order = sorted(range(len(rows)), key=lambda i: (len(rows[i]), i))
    kept: list[int] = []
    kept_masks: list[int] = []
    for i in order:
        m = masks[i]
        if not any(k & m == k for k in kept_masks):
            kept.append(i)
            kept_masks.append(m)
    return sorted(kept)


def _packing_simplex(rows: Sequence[frozenset[int]], n_cols: int) -> tuple[list[Fraction], list[Fraction], int]:
    """Maximize ``sum(y)`` over ``y >= 0`` with column loads ``<= 1``.

    Returns ``(y, x, pivots)`` where ``x`` are the slack reduced costs, i.e. an
    optimal covering solution.
    """
    m = len(rows)
    width = m + n_cols + 1
    T = np.zeros((n_cols + 1, width), dtype=object)
    T[:, :] = 0
    for i, r in enumerate(rows):
        for j in r:
            T[j, i] = 1
    for j in range(n_cols):
        T[j, m + j] = 1
        T[j, -1] = 1
    T[n_cols, :m] = -1
    basis = [m + j for j in range(n_cols)]
    denom = 1
    pivots = 0
    obj = n_cols
    while True:
        # Bland: lowest-index variable with negative reduced cost enters
        neg = np.flatnonzero(T[obj, : m + n_cols] < 0)
        if neg.size == 0:
            break
        c = int(neg[0])
        col = T[:n_cols, c]
        best: Optional[int] = None
        for i in np.flatnonzero(col > 0):
            i = int(i)
            if best is None:
                best = i
                continue
            # compare rhs_i / col_i with rhs_best / col_best (all positive)
            lhs = T[i, -1] * col[best]
            rhs = T[best, -1] * col[i]
            if lhs < rhs or (lhs == rhs and basis[i] < basis[best]):
                best = i
        if best is None:
            raise AssertionError("packing LP cannot be unbounded: every column row caps its variables")
        r = best
        p = T[r, c]
        prow = T[r].copy()
        pcol = T[:, c].copy()
        T = (T * p - np.outer(pcol, prow)) // denom
        T[r] = prow
        denom = p
        basis[r] = c
        pivots += 1
    y = [Fraction(0)] * m
    for i, b in enumerate(basis):
        if b < m:
            y[b] = Fraction(int(T[i, -1]), int(denom))
    x = [Fraction(int(T[obj, m + j]), int(denom)) for j in range(n_cols)]
    return y, x, pivots


def certificate_violation(lp: CoveringLP, sol: LPSolution) -> Optional[str]:
    """First violated certificate condition, or ``None`` when all hold."""
    x = sol.primal.values
    y = sol.dual
    if len(x) != lp.n_cols:
        return f"primal has {len(x)} entries for {lp.n_cols} columns"
    if len(y) != len(lp.rows):
        return f"dual has {len(y)} entries for {len(lp.rows)} rows"
    for j, xj in enumerate(x):
        if not (0 <= xj <= 1):
            return f"primal x[{j}] = {xj} outside [0, 1]"
    for i, r in enumerate(lp.rows):
        cover = sum((x[j] for j in r), Fraction(0))
        if cover < 1:
            return f"row {i} (pairs {lp.row_tags[i]}) covered only {cover}"
    for i, yi in enumerate(y):
        if yi < 0:
            return f"dual y[{i}] = {yi} negative"
    load = [Fraction(0)] * lp.n_cols
    for yi, r in zip(y, lp.rows):
        if yi:
            for j in r:
                load[j] += yi
    for j, lj in enumerate(load):
        if lj > 1:
            return f"dual load on column {j} is {lj} > 1"
    px, dy = sum(x, Fraction(0)), sum(y, Fraction(0))
    if px != dy:
        return f"duality gap: primal {px} != dual {dy}"
    if sol.value != px:
        return f"reported value {sol.value} != primal objective {px}"
    return None


def verify_certificates(lp: CoveringLP, sol: LPSolution) -> bool:
    problem = certificate_violation(lp, sol)
    if problem is not None:
        log.warning("certificate check failed: %s", problem)
        return False
    return True


def solve_covering_lp(lp: CoveringLP, presolve: bool = True) -> LPSolution:
    """Exact optimum of ``min sum(x)`` subject to every row summing to at least 1.

    With ``presolve`` rows containing another row are dropped before the
    simplex (their duals are zero).  The result is certificate-checked before
    it is returned.
    """
    for i, r in enumerate(lp.rows):
        if not r:
            raise InfeasibleError(f"row {i} (pairs {lp.row_tags[i]}) is empty")
    if not lp.rows:
        sol = LPSolution(Fraction(0), WeightFunction((Fraction(0),) * lp.n_cols), ())
        return sol
    keep = _minimal_rows(lp.rows) if presolve else list(range(len(lp.rows)))
    y_kept, x, pivots = _packing_simplex([lp.rows[i] for i in keep], lp.n_cols)
    dual = [Fraction(0)] * len(lp.rows)
    for i, yi in zip(keep, y_kept):
        dual[i] = yi
    # an optimal cover never needs a coordinate above 1
    sol = LPSolution(sum(x, Fraction(0)), WeightFunction.unchecked(x), tuple(dual), pivots)
    problem = certificate_violation(lp, sol)
    if problem is not None:
        raise CertificateError(problem)
    return LPSolution(sol.value, WeightFunction(sol.primal.values), sol.dual, pivots)
