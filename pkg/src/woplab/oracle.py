"""First-principles cross-check engine over a generic N x N matrix of formal
entries X_ab.

Everything the summation engine claims can be recomputed here from raw
entry calculus: p_k maps to the trace of X^k, the operator D_ab is
sum_c X_ac d/dX_bc, and the normal-ordered product keeps every
multiplication-by-X factor to the left of every entry derivative,

    :D_{a1 b1} ... D_{am bm}: = sum over e_1..e_m of
        X_{a1 e1} ... X_{am em} * d^m/dX_{b1 e1} ... dX_{bm em}.

``tr_Dn_apply`` evaluates sum over (a_1..a_n) of
:D_{a1 an} D_{an an-1} ... D_{a2 a1}: on a p-polynomial, i.e. n times the
W-operator before the 1/n normalisation, so the two computation routes can
be compared exactly.

Truncation note: the entry calculus is exact at any finite N, but the
comparison is only meaningful when the traces of X, X^2, ... stay
algebraically independent, hence the guard N >= weight(F) + n.

Mixed derivatives of a monomial are evaluated combinatorially: an ordered
pick of variable occurrences, one per derivative factor, contributes the
product of remaining multiplicities; each pick fixes the contraction column
e_i, so the sums over e never need to be looped explicitly.
"""

from __future__ import annotations

import itertools
from fractions import Fraction
from typing import Iterable, Mapping, Sequence, Union

from .errors import BoundExceededError
from .perm import Permutation
from .pring import PPolynomial

__all__ = [
    "XPolynomial",
    "x_variable",
    "x_power_entry",
    "trace_power",
    "p_to_x",
    "D_apply",
    "normal_ordered_apply",
    "cyclic_pairs",
    "tr_Dn_apply",
    "equal_as_p",
    "quiver_trace_product",
    "DEFAULT_MAX_TRACE_POWER",
]

DEFAULT_MAX_TRACE_POWER = 3

Var = tuple[int, int]  # (row, column), 1-indexed
XMonomial = tuple[Var, ...]  # sorted, with repetition
Scalar = Union[int, Fraction]


class XPolynomial:
    """Sparse polynomial in the entries of an N x N matrix of variables."""

    __slots__ = ("N", "_terms")

    def __init__(self, N: int, terms: Mapping[XMonomial, Scalar] | None = None):
        if N < 1:
            raise ValueError("matrix size must be at least 1")
        self.N = N
        clean: dict[XMonomial, Fraction] = {}
        for mono, coeff in (terms or {}).items():
            coeff = Fraction(coeff)
            if not coeff:
                continue
            key = tuple(sorted(mono))
            for a, b in key:
                if not (1 <= a <= N and 1 <= b <= N):
                    raise ValueError(f"entry index {(a, b)} outside 1..{N}")
            clean[key] = clean.get(key, Fraction(0)) + coeff
        self._terms = {m: c for m, c in clean.items() if c}

    @classmethod
    def zero(cls, N: int) -> "XPolynomial":
        return cls(N)

    @classmethod
    def constant(cls, N: int, c: Scalar) -> "XPolynomial":
        return cls(N, {(): c})

    def items(self):
        return iter(sorted(self._terms.items()))

    def __len__(self):
        return len(self._terms)

    def __bool__(self):
        return bool(self._terms)

    def __eq__(self, other):
        if isinstance(other, XPolynomial):
            return self.N == other.N and self._terms == other._terms
        return NotImplemented

    def __hash__(self):
        return hash((self.N, frozenset(self._terms.items())))

    def __repr__(self):
        def var(v):
            return f"X{v[0]}{v[1]}" if self.N < 10 else f"X[{v[0]},{v[1]}]"

        if not self._terms:
            return "XPolynomial(0)"
        parts = [
            f"{coeff}*" + "*".join(var(v) for v in mono) if mono else str(coeff)
            for mono, coeff in self.items()
        ]
        return "XPolynomial(" + " + ".join(parts) + ")"

    def __add__(self, other: "XPolynomial") -> "XPolynomial":
        if self.N != other.N:
            raise ValueError("mismatched matrix sizes")
        terms = dict(self._terms)
        for mono, coeff in other._terms.items():
            terms[mono] = terms.get(mono, Fraction(0)) + coeff
        return XPolynomial(self.N, terms)

    def __neg__(self) -> "XPolynomial":
        return XPolynomial(self.N, {m: -c for m, c in self._terms.items()})

    def __sub__(self, other: "XPolynomial") -> "XPolynomial":
        return self + (-other)

    def __mul__(self, other) -> "XPolynomial":
        if isinstance(other, (int, Fraction)):
            return XPolynomial(self.N, {m: c * other for m, c in self._terms.items()})
        if isinstance(other, XPolynomial):
            if self.N != other.N:
                raise ValueError("mismatched matrix sizes")
            terms: dict[XMonomial, Fraction] = {}
            for m1, c1 in self._terms.items():
                for m2, c2 in other._terms.items():
                    key = tuple(sorted(m1 + m2))
                    terms[key] = terms.get(key, Fraction(0)) + c1 * c2
            return XPolynomial(self.N, terms)
        return NotImplemented

    __rmul__ = __mul__


def x_variable(N: int, a: int, b: int) -> XPolynomial:
    return XPolynomial(N, {((a, b),): 1})


def x_power_entry(N: int, k: int, a: int, b: int) -> XPolynomial:
    """(X^k)_{ab}; k = 0 gives the identity matrix entry (Kronecker delta)."""
    if k < 0:
        raise ValueError("power must be nonnegative")
    if k == 0:
        return XPolynomial.constant(N, 1 if a == b else 0)
    terms: dict[XMonomial, Fraction] = {}
    for middle in itertools.product(range(1, N + 1), repeat=k - 1):
        walk = (a,) + middle + (b,)
        mono = tuple(sorted(zip(walk, walk[1:])))
        terms[mono] = terms.get(mono, Fraction(0)) + 1
    return XPolynomial(N, terms)


def trace_power(N: int, k: int) -> XPolynomial:
    """tr(X^k) as an entry polynomial: the sum over closed k-walks."""
    if k < 1:
        raise ValueError("trace power must be positive")
    terms: dict[XMonomial, Fraction] = {}
    for walk in itertools.product(range(1, N + 1), repeat=k):
        closed = walk + (walk[0],)
        mono = tuple(sorted(zip(closed, closed[1:])))
        terms[mono] = terms.get(mono, Fraction(0)) + 1
    return XPolynomial(N, terms)


def p_to_x(F: PPolynomial, N: int) -> XPolynomial:
    """Substitute p_k -> tr(X^k) and expand."""
    out = XPolynomial.zero(N)
    for mono, coeff in F.items():
        term = XPolynomial.constant(N, coeff)
        for k in mono:
            term = term * trace_power(N, k)
        out = out + term
    return out


# -- derivative machinery ------------------------------------------------------


def _indexed(mono: XMonomial) -> tuple[dict[Var, int], dict[int, list[Var]]]:
    counts: dict[Var, int] = {}
    for var in mono:
        counts[var] = counts.get(var, 0) + 1
    by_row: dict[int, list[Var]] = {}
    for var in counts:
        by_row.setdefault(var[0], []).append(var)
    return counts, by_row


def _apply_pairs(
    pairs: Sequence[tuple[int, int]],
    counts: dict[Var, int],
    by_row: dict[int, list[Var]],
    coeff: Fraction,
    out: dict[XMonomial, Fraction],
):
    """Accumulate the normal-ordered action of the given (a_i, b_i) pairs on
    one monomial (given by its live multiplicity index)."""
    m = len(pairs)
    cols = [0] * m

    def rec(i: int, mult: int):
        if i == m:
            rebuilt: list[Var] = []
            for var, c in counts.items():
                rebuilt.extend((var,) * c)
            for (source, _), col in zip(pairs, cols):
                rebuilt.append((source, col))
            key = tuple(sorted(rebuilt))
            out[key] = out.get(key, Fraction(0)) + coeff * mult
            return
        for var in by_row.get(pairs[i][1], ()):
            c = counts[var]
            if c:
                counts[var] = c - 1
                cols[i] = var[1]
                rec(i + 1, mult * c)
                counts[var] = c

    rec(0, 1)


def D_apply(a: int, b: int, G: XPolynomial) -> XPolynomial:
    """The entry derivation D_ab = sum_c X_ac d/dX_bc applied to G."""
    N = G.N
    if not (1 <= a <= N and 1 <= b <= N):
        raise ValueError(f"indices ({a}, {b}) outside 1..{N}")
    out: dict[XMonomial, Fraction] = {}
    for mono, coeff in G._terms.items():
        counts, by_row = _indexed(mono)
        _apply_pairs([(a, b)], counts, by_row, coeff, out)
    return XPolynomial(N, out)


def normal_ordered_apply(
    pairs: Sequence[tuple[int, int]], G: XPolynomial
) -> XPolynomial:
    """Apply :D_{a1 b1} ... D_{am bm}: to G (all X factors left of all
    entry derivatives, contraction indices summed over 1..N)."""
    N = G.N
    for a, b in pairs:
        if not (1 <= a <= N and 1 <= b <= N):
            raise ValueError(f"indices ({a}, {b}) outside 1..{N}")
    out: dict[XMonomial, Fraction] = {}
    for mono, coeff in G._terms.items():
        counts, by_row = _indexed(mono)
        _apply_pairs(list(pairs), counts, by_row, coeff, out)
    return XPolynomial(N, out)


def cyclic_pairs(avec: Sequence[int]) -> list[tuple[int, int]]:
    """Index pairs of :D_{a1 an} D_{an an-1} ... D_{a2 a1}:."""
    n = len(avec)
    pairs = [(avec[0], avec[n - 1])]
    for i in range(n - 1, 0, -1):
        pairs.append((avec[i], avec[i - 1]))
    return pairs


def tr_Dn_apply(
    n: int,
    F: PPolynomial,
    N: int,
    *,
    max_n: int = DEFAULT_MAX_TRACE_POWER,
) -> XPolynomial:
    """sum over (a_1..a_n) in {1..N}^n of the normal-ordered cyclic product
    applied to F as an entry polynomial.  This is n * W([n]) F; the caller
    divides by n."""
    if n < 1:
        raise ValueError("n must be at least 1")
    if n > max_n:
        raise BoundExceededError(f"tr_Dn_apply bound is {max_n}, got n={n}")
    if N < F.max_weight() + n:
        raise ValueError(
            f"N={N} too small: need N >= weight + n = {F.max_weight() + n} "
            "for the trace powers to stay independent"
        )
    G = p_to_x(F, N)
    indexed = [
        (coeff, *_indexed(mono)) for mono, coeff in G._terms.items()
    ]
    out: dict[XMonomial, Fraction] = {}
    for avec in itertools.product(range(1, N + 1), repeat=n):
        pairs = cyclic_pairs(avec)
        first_row = pairs[0][1]
        for coeff, counts, by_row in indexed:
            if first_row in by_row:
                _apply_pairs(pairs, counts, by_row, coeff, out)
    return XPolynomial(N, out)


def equal_as_p(G: XPolynomial, F: PPolynomial, N: int) -> bool:
    """Whether G equals F after substituting p_k -> tr(X^k), exactly."""
    return G == p_to_x(F, N)


def quiver_trace_product(
    beta: Permutation, kvec: Sequence[int], N: int
) -> XPolynomial:
    """sum over all vertex labelings a: {1..n} -> {1..N} of the product over
    the arrows v -> beta(v) of (X^{k_target})_{a_source, a_target}.

    Contracting the cycle quiver this way must reproduce the polynomial part
    of the summation owned by beta: one trace factor per cycle, of power
    equal to the sum of the k's along it.  Computed here by brute force,
    without using that factorization.
    """
    n = beta.n
    if len(kvec) != n:
        raise ValueError("need one index per vertex")
    arrows = [(v, beta(v)) for v in range(1, n + 1)]
    out = XPolynomial.zero(N)
    for labels in itertools.product(range(1, N + 1), repeat=n):
        term = XPolynomial.constant(N, 1)
        for source, target in arrows:
            term = term * x_power_entry(
                N, kvec[target - 1], labels[source - 1], labels[target - 1]
            )
            if not term:
                break
        out = out + term
    return out
