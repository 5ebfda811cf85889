"""Exact rational LP for the fractional cover / fractional matching pair.

The cover program minimizes sum w(v) g(v) subject to every hyperedge
collecting cover mass at least 1.  Its dual, the matching program,
maximizes sum f(e) subject to the per-vertex capacity w(v).  The matching
program has the all-slack basis feasible, so it is solved directly by the
revised simplex method over ``fractions.Fraction``; the optimal cover is
read off the simplex multipliers of the final basis.  Both solutions are
exactly feasible, exactly optimal, and satisfy complementary slackness;
their values agree exactly.

Pricing is greedy (largest reduced cost, smallest index on ties) and
falls back to Bland's rule after a run of degenerate pivots, which
guarantees termination.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Mapping, Sequence

from .errors import VerificationError
from .graphs import CopyHypergraph

_BLAND_AFTER = 8
_ZERO = Fraction(0)
_ONE = Fraction(1)


@dataclass
class FractionalCover:
    """Cover mass per covered vertex; value = sum of w(v) g(v)."""

    values: dict[int, Fraction]
    value: Fraction


@dataclass
class FractionalMatching:
    """Matching mass per hyperedge; value = sum of f(e)."""

    values: dict[tuple[int, ...], Fraction]
    value: Fraction


def solve_cover_lp(
    hg: CopyHypergraph, weights: Sequence[Fraction] | Mapping[int, Fraction]
) -> tuple[FractionalCover, FractionalMatching]:
    """Optimal fractional cover and matching with exactly equal values.

    Requires strictly positive weights on every covered vertex; the
    output is deterministic for a fixed input.
    """
    verts = list(hg.covered_vertices())
    edges = list(hg.hyperedges)
    w = {v: Fraction(weights[v]) for v in verts}
    for v in verts:
        if w[v] <= 0:
            raise ValueError(f"covered vertex {v} must have positive weight")
    if not edges:
        return FractionalCover({}, _ZERO), FractionalMatching({}, _ZERO)

    m = len(verts)
    row_of = {v: i for i, v in enumerate(verts)}
    cols = [tuple(row_of[v] for v in e) for e in edges]
    nstruct = len(cols)

    binv = [[_ONE if i == j else _ZERO for j in range(m)] for i in range(m)]
    basis = [nstruct + i for i in range(m)]
    xb = [w[v] for v in verts]
    degenerate_streak = 0

    while True:
        pi = [_ZERO] * m
        for i in range(m):
            if basis[i] < nstruct:
                row = binv[i]
                for j in range(m):
                    if row[j]:
                        pi[j] += row[j]

        bland = degenerate_streak >= _BLAND_AFTER
        entering = -1
        best_rc = _ZERO
        for j in range(nstruct):
            rc = _ONE - sum((pi[r] for r in cols[j]), _ZERO)
            if rc > best_rc:
                entering = j
                best_rc = rc
                if bland:
                    break
        if entering == -1 or not bland:
            for r in range(m):
                rc = -pi[r]
                if rc > best_rc:
                    entering = nstruct + r
                    best_rc = rc
                    if bland:
                        break
        if entering == -1:
            break

        if entering < nstruct:
            direction = [_ZERO] * m
            for r in cols[entering]:
                col = r
                for i in range(m):
                    if binv[i][col]:
                        direction[i] += binv[i][col]
        else:
            col = entering - nstruct
            direction = [binv[i][col] for i in range(m)]

        leave = -1
        best_ratio = None
        for i in range(m):
            if direction[i] > 0:
                ratio = xb[i] / direction[i]
                if (
                    best_ratio is None
                    or ratio < best_ratio
                    or (ratio == best_ratio and basis[i] < basis[leave])
                ):
                    best_ratio = ratio
                    leave = i
        if leave == -1:
            raise VerificationError("matching LP appears unbounded")

        degenerate_streak = degenerate_streak + 1 if best_ratio == 0 else 0

        pivot = direction[leave]
        prow = binv[leave] = [x / pivot for x in binv[leave]]
        xb[leave] /= pivot
        for i in range(m):
            if i != leave and direction[i]:
                f = direction[i]
                row = binv[i]
                binv[i] = [a - f * b for a, b in zip(row, prow)]
                xb[i] -= f * xb[leave]
        basis[leave] = entering

    matching_values = {e: _ZERO for e in edges}
    for i in range(m):
        if basis[i] < nstruct:
            matching_values[edges[basis[i]]] = xb[i]
    matching_value = sum(matching_values.values(), _ZERO)
    cover_values = {verts[r]: pi[r] for r in range(m)}
    cover_value = sum((pi[r] * w[verts[r]] for r in range(m)), _ZERO)

    _check_optimal_pair(edges, w, cover_values, matching_values, cover_value, matching_value)
    return (
        FractionalCover(cover_values, cover_value),
        FractionalMatching(matching_values, matching_value),
    )


def _check_optimal_pair(edges, w, cover, matching, cover_value, matching_value):
    # cheap exact safety net; a failure here is always a solver bug
    if cover_value != matching_value:
        raise VerificationError("cover and matching values differ")
    load = {v: _ZERO for v in w}
    for e in edges:
        if matching[e] < 0:
            raise VerificationError("negative matching mass")
        for v in e:
            load[v] += matching[e]
        if sum((cover[v] for v in e), _ZERO) < 1:
            raise VerificationError("cover constraint violated")
    for v, g in cover.items():
        if g < 0:
            raise VerificationError("negative cover mass")
        if load[v] > w[v]:
            raise VerificationError("matching capacity violated")


def check_complementary_slackness(
    cover: FractionalCover,
    matching: FractionalMatching,
    hg: CopyHypergraph,
    weights: Sequence[Fraction] | Mapping[int, Fraction],
) -> bool:
    """True iff positive cover mass forces a tight capacity and positive
    matching mass forces a tight cover constraint (exact comparisons)."""
    load: dict[int, Fraction] = {v: _ZERO for v in hg.covered_vertices()}
    for e in hg.hyperedges:
        f = matching.values.get(e, _ZERO)
        for v in e:
            load[v] += f
    for v, g in cover.values.items():
        if g > 0 and load.get(v, _ZERO) != Fraction(weights[v]):
            return False
    for e in hg.hyperedges:
        f = matching.values.get(e, _ZERO)
        if f > 0 and sum((cover.values.get(v, _ZERO) for v in e), _ZERO) != 1:
            return False
    return True
