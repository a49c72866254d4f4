"""Summation templates: the n! permutation-indexed pieces of the W-operator.

The operator (1/n):tr(D^n): acting on polynomials in p_1, p_2, ... splits
into one infinite summation per permutation beta of S_n.  Each summation has
the normal form

    sum over k_1..k_n >= 1 of
        [prod over cycle blocks c of p_(sum of k_v, v in c)]
        * [prod over derivative blocks b of (sum of k_v, v in b)]
        * [prod over derivative blocks b of d/dp_(sum of k_v, v in b)]

so a template is just the pair (cycle partition, derivative partition) of
{1..n} together with the owning permutation.  The cycle partition is read off
beta directly; the derivative partition is built by replaying beta's lift
chain: a lift with index 0 contributes a fresh singleton derivative factor,
and a lift with index j >= 1 substitutes k_j -> k_j + k_new, i.e. grows the
block containing j.  The 1/n prefactor is *not* part of the template; the
application layer supplies it.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Optional

from .errors import BoundExceededError
from .perm import Permutation, all_permutations, lift_chain

__all__ = [
    "SummationTemplate",
    "summation_of",
    "degree",
    "is_OS",
    "has_descending_cycles",
    "has_nested_or_ordered_supports",
    "satisfies_star",
    "decompose_W",
    "render",
    "DEFAULT_MAX_DECOMPOSE",
]

# Full enumeration of S_n; n(n!) work beyond this is refused unless the
# caller raises the bound explicitly.
DEFAULT_MAX_DECOMPOSE = 9

Blocks = tuple[tuple[int, ...], ...]


def _canonical_blocks(blocks: Iterable[Iterable[int]]) -> Blocks:
    return tuple(sorted((tuple(sorted(b)) for b in blocks), key=lambda b: b[0]))


@dataclass(frozen=True)
class SummationTemplate:
    """Normal form of one summation: owning permutation plus two set partitions."""

    perm: Permutation
    cycle_blocks: Blocks
    derivative_blocks: Blocks

    def __post_init__(self):
        n = self.perm.n
        expected = _canonical_blocks(self.perm.cycles)
        if self.cycle_blocks != expected:
            raise ValueError("cycle_blocks must be the cycle partition of perm")
        covered = sorted(v for b in self.derivative_blocks for v in b)
        if covered != list(range(1, n + 1)):
            raise ValueError(f"derivative_blocks must partition 1..{n}")

    @property
    def n(self) -> int:
        return self.perm.n

    @property
    def dP(self) -> int:
        return len(self.cycle_blocks)

    @property
    def dD(self) -> int:
        return len(self.derivative_blocks)

    @property
    def degree(self) -> int:
        return self.dP + self.dD


def summation_of(beta: Permutation) -> SummationTemplate:
    """The template owned by beta, built by replaying its lift chain."""
    blocks: list[list[int]] = [[1]]
    for m, j in enumerate(lift_chain(beta), start=1):
        if j == 0:
            blocks.append([m + 1])
        else:
            next(b for b in blocks if j in b).append(m + 1)
    return SummationTemplate(
        perm=beta,
        cycle_blocks=_canonical_blocks(beta.cycles),
        derivative_blocks=_canonical_blocks(blocks),
    )


def degree(t: SummationTemplate) -> tuple[int, int, int]:
    """(polynomial degree, differential order, total degree)."""
    return t.dP, t.dD, t.degree


def is_OS(t: SummationTemplate) -> Optional[tuple[int, int]]:
    """The (r, s) type when the template has the maximal degree n+1, else None."""
    if t.degree == t.n + 1:
        return t.dP, t.dD
    return None


def has_descending_cycles(perm: Permutation) -> bool:
    """Every cycle of length >= 2, followed along arrows, descends through its
    support, with the single ascent being the wrap from minimum to maximum.
    Fixed points hold vacuously."""
    for cycle in perm.cycles:
        if len(cycle) < 2:
            continue
        descending = sorted(cycle, reverse=True)
        if any(perm(a) != b for a, b in zip(descending, descending[1:])):
            return False
        if perm(descending[-1]) != descending[0]:
            return False
    return True


def has_nested_or_ordered_supports(perm: Permutation) -> bool:
    """Any two cycle supports are interval-disjoint or one avoids the other's
    span entirely (nesting); interleaved supports fail."""
    supports = perm.cycle_supports
    for i in range(len(supports)):
        for j in range(i + 1, len(supports)):
            a, b = supports[i], supports[j]
            lo_a, hi_a = min(a), max(a)
            lo_b, hi_b = min(b), max(b)
            a_avoids_b = all(v < lo_b or v > hi_b for v in a)
            b_avoids_a = all(v < lo_a or v > hi_a for v in b)
            if not (a_avoids_b or b_avoids_a):
                return False
    return True


def satisfies_star(perm: Permutation) -> bool:
    """Both structural conditions that characterise the maximal-degree
    summations (checked directly, never via the degree)."""
    return has_descending_cycles(perm) and has_nested_or_ordered_supports(perm)


def decompose_W(n: int, *, max_n: int = DEFAULT_MAX_DECOMPOSE) -> list[SummationTemplate]:
    """All n! templates of W([n]), ordered by image tuple of the permutation."""
    if n < 1:
        raise ValueError("n must be at least 1")
    if n > max_n:
        raise BoundExceededError(f"decompose_W bound is {max_n}, got n={n}")
    return [summation_of(beta) for beta in all_permutations(n)]


def _sum_expr(block: tuple[int, ...], fmt: str) -> str:
    if fmt == "latex":
        return "+".join(f"k_{v}" for v in block)
    return "+".join(f"k{v}" for v in block)


def render(t: SummationTemplate, fmt: str = "plain") -> str:
    """Render a template as ``plain`` text, ``latex``, or a ``json`` object."""
    if fmt == "plain":
        indices = ",".join(f"k{v}" for v in range(1, t.n + 1))
        coeffs = " ".join(
            f"k{b[0]}" if len(b) == 1 else f"({_sum_expr(b, fmt)})"
            for b in t.derivative_blocks
        )
        polys = " ".join(f"p_{{{_sum_expr(c, fmt)}}}" for c in t.cycle_blocks)
        derivs = " ".join(f"d/dp_{{{_sum_expr(b, fmt)}}}" for b in t.derivative_blocks)
        return f"sum_{{{indices}}} {coeffs} {polys} {derivs}"
    if fmt == "latex":
        indices = ",".join(f"k_{v}" for v in range(1, t.n + 1))
        coeffs = " ".join(
            f"k_{b[0]}" if len(b) == 1 else f"({_sum_expr(b, fmt)})"
            for b in t.derivative_blocks
        )
        polys = "".join(f"p_{{{_sum_expr(c, fmt)}}}" for c in t.cycle_blocks)
        order = "" if t.dD == 1 else f"^{{{t.dD}}}"
        dens = "".join(f"\\partial p_{{{_sum_expr(b, fmt)}}}" for b in t.derivative_blocks)
        return (
            f"\\sum_{{{indices}\\geq 1}} {coeffs} {polys}"
            f"\\frac{{\\partial{order}}}{{{dens}}}"
        )
    if fmt == "json":
        return json.dumps(to_json_dict(t))
    raise ValueError(f"unknown format {fmt!r} (expected plain, latex, or json)")


def to_json_dict(t: SummationTemplate) -> dict:
    os_type = is_OS(t)
    return {
        "n": t.n,
        "perm": [list(c) for c in t.perm.cycles],
        "cycle_blocks": [list(b) for b in t.cycle_blocks],
        "derivative_blocks": [list(b) for b in t.derivative_blocks],
        "dP": t.dP,
        "dD": t.dD,
        "degree": t.degree,
        "os_type": list(os_type) if os_type else None,
        "latex": render(t, "latex"),
    }
