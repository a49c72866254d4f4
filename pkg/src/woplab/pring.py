"""Exact arithmetic in the polynomial ring Q[p_1, p_2, ...] and the action of
summation templates and full W-operators on it.

A monomial is a sorted tuple of p-indices with multiplicity, so p_1^2 * p_3
is (1, 1, 3); coefficients are exact rationals.  The weight of a monomial is
the sum of its indices (p_k has weight k); every operator here preserves
weight on homogeneous input.

Applying a template to F enumerates index tuples (k_1..k_n) with k_i >= 1 and
sum at most the largest monomial weight of F: the derivative factors of any
term remove exactly sum(k_i) of weight, so heavier terms annihilate F and the
truncation is exact.
"""

from __future__ import annotations

import itertools
from fractions import Fraction
from typing import Iterator, Mapping, Union

from .errors import BoundExceededError, ParseError
from .summation import DEFAULT_MAX_DECOMPOSE, SummationTemplate, decompose_W

__all__ = ["PPolynomial", "parse_p", "print_p", "apply_template", "apply_W"]

Monomial = tuple[int, ...]
Scalar = Union[int, Fraction]


class PPolynomial:
    """Sparse polynomial in p_1, p_2, ... with exact rational coefficients."""

    __slots__ = ("_terms",)

    def __init__(self, terms: Mapping[Monomial, Scalar] | None = None):
        clean: dict[Monomial, Fraction] = {}
        for mono, coeff in (terms or {}).items():
            coeff = Fraction(coeff)
            if coeff:
                key = tuple(sorted(mono))
                if any(i < 1 for i in key):
                    raise ValueError(f"p-indices must be positive: {key}")
                clean[key] = clean.get(key, Fraction(0)) + coeff
        self._terms = {m: c for m, c in clean.items() if c}

    # -- constructors ------------------------------------------------------

    @classmethod
    def zero(cls) -> "PPolynomial":
        return cls()

    @classmethod
    def constant(cls, c: Scalar) -> "PPolynomial":
        return cls({(): c})

    @classmethod
    def variable(cls, k: int) -> "PPolynomial":
        return cls({(k,): 1})

    @classmethod
    def monomial(cls, indices: Monomial, coeff: Scalar = 1) -> "PPolynomial":
        return cls({tuple(indices): coeff})

    # -- mapping views -----------------------------------------------------

    def items(self) -> Iterator[tuple[Monomial, Fraction]]:
        """Terms in canonical graded-lex order (weight, then index tuple)."""
        return iter(sorted(self._terms.items(), key=lambda kv: (sum(kv[0]), kv[0])))

    def coefficient(self, mono: Monomial) -> Fraction:
        return self._terms.get(tuple(sorted(mono)), Fraction(0))

    def __len__(self) -> int:
        return len(self._terms)

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __eq__(self, other) -> bool:
        if isinstance(other, PPolynomial):
            return self._terms == other._terms
        return NotImplemented

    def __hash__(self):
        return hash(frozenset(self._terms.items()))

    def __repr__(self) -> str:
        return f"PPolynomial({print_p(self)!r})"

    # -- ring operations ---------------------------------------------------

    def __add__(self, other: "PPolynomial") -> "PPolynomial":
        terms = dict(self._terms)
        for mono, coeff in other._terms.items():
            terms[mono] = terms.get(mono, Fraction(0)) + coeff
        return PPolynomial(terms)

    def __neg__(self) -> "PPolynomial":
        return PPolynomial({m: -c for m, c in self._terms.items()})

    def __sub__(self, other: "PPolynomial") -> "PPolynomial":
        return self + (-other)

    def __mul__(self, other) -> "PPolynomial":
        if isinstance(other, (int, Fraction)):
            return PPolynomial({m: c * other for m, c in self._terms.items()})
        if isinstance(other, PPolynomial):
            terms: dict[Monomial, Fraction] = {}
            for m1, c1 in self._terms.items():
                for m2, c2 in other._terms.items():
                    key = tuple(sorted(m1 + m2))
                    terms[key] = terms.get(key, Fraction(0)) + c1 * c2
            return PPolynomial(terms)
        return NotImplemented

    __rmul__ = __mul__

    def __pow__(self, exponent: int) -> "PPolynomial":
        if exponent < 0:
            raise ValueError("negative power")
        out = PPolynomial.constant(1)
        for _ in range(exponent):
            out = out * self
        return out

    # -- grading and calculus ----------------------------------------------

    def max_weight(self) -> int:
        """Largest monomial weight; 0 for the zero polynomial."""
        return max((sum(m) for m in self._terms), default=0)

    def homogeneous_components(self) -> dict[int, "PPolynomial"]:
        parts: dict[int, dict[Monomial, Fraction]] = {}
        for mono, coeff in self._terms.items():
            parts.setdefault(sum(mono), {})[mono] = coeff
        return {w: PPolynomial(t) for w, t in sorted(parts.items())}

    def is_homogeneous(self) -> bool:
        return len({sum(m) for m in self._terms}) <= 1

    def weight(self) -> int | None:
        """The common weight of all terms, or None if mixed or zero."""
        weights = {sum(m) for m in self._terms}
        return weights.pop() if len(weights) == 1 else None

    def diff(self, k: int) -> "PPolynomial":
        """Partial derivative with respect to p_k."""
        terms: dict[Monomial, Fraction] = {}
        for mono, coeff in self._terms.items():
            mult = mono.count(k)
            if mult:
                reduced = list(mono)
                reduced.remove(k)
                key = tuple(reduced)
                terms[key] = terms.get(key, Fraction(0)) + coeff * mult
        return PPolynomial(terms)


# -- text format -------------------------------------------------------------


def print_p(poly: PPolynomial) -> str:
    """Canonical text: graded-lex term order, explicit '*', no whitespace."""
    if not poly:
        return "0"
    parts = []
    for mono, coeff in poly.items():
        factors = []
        for k, group in itertools.groupby(mono):
            e = len(list(group))
            factors.append(f"p{k}" if e == 1 else f"p{k}^{e}")
        magnitude = abs(coeff)
        if magnitude != 1 or not factors:
            factors.insert(0, str(magnitude))
        term = "*".join(factors)
        parts.append(("-" if coeff < 0 else "+") + term)
    text = "".join(parts)
    return text[1:] if text.startswith("+") else text


def parse_p(text: str) -> PPolynomial:
    """Parse the polynomial grammar; raises :class:`ParseError` with position.

    term := [rational "*"] factor ("*" factor)* | rational
    factor := "p" int ["^" int]; rational := int | int "/" int.
    Terms are joined by "+" or "-"; whitespace is insignificant.
    """
    return _Parser(text).parse()


class _Parser:
    def __init__(self, text: str):
        self.text = text
        self.pos = 0

    def error(self, message: str):
        raise ParseError(message, position=self.pos)

    def skip_ws(self):
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def peek(self) -> str:
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def take_int(self) -> int:
        start = self.pos
        while self.pos < len(self.text) and self.text[self.pos].isdigit():
            self.pos += 1
        if self.pos == start:
            self.error("expected an integer")
        return int(self.text[start : self.pos])

    def take_rational(self) -> Fraction:
        num = self.take_int()
        self.skip_ws()
        if self.peek() == "/":
            self.pos += 1
            self.skip_ws()
            den = self.take_int()
            if den == 0:
                self.error("zero denominator")
            return Fraction(num, den)
        return Fraction(num)

    def take_factor(self) -> Monomial:
        if self.peek() != "p":
            self.error("expected a factor like p3 or p3^2")
        self.pos += 1
        index = self.take_int()
        if index < 1:
            self.error("p-index must be positive")
        self.skip_ws()
        exponent = 1
        if self.peek() == "^":
            self.pos += 1
            self.skip_ws()
            exponent = self.take_int()
        return (index,) * exponent

    def take_term(self) -> tuple[Monomial, Fraction]:
        coeff = Fraction(1)
        mono: tuple[int, ...] = ()
        self.skip_ws()
        if self.peek().isdigit():
            coeff = self.take_rational()
            self.skip_ws()
            if self.peek() == "*":
                self.pos += 1
            else:
                return mono, coeff  # bare constant
        while True:
            self.skip_ws()
            mono += self.take_factor()
            self.skip_ws()
            if self.peek() == "*":
                self.pos += 1
            else:
                return mono, coeff

    def parse(self) -> PPolynomial:
        terms: dict[Monomial, Fraction] = {}
        sign = Fraction(1)
        self.skip_ws()
        if self.peek() == "-":
            sign = Fraction(-1)
            self.pos += 1
        while True:
            mono, coeff = self.take_term()
            key = tuple(sorted(mono))
            terms[key] = terms.get(key, Fraction(0)) + sign * coeff
            self.skip_ws()
            if self.pos == len(self.text):
                return PPolynomial(terms)
            op = self.peek()
            if op == "+":
                sign = Fraction(1)
            elif op == "-":
                sign = Fraction(-1)
            else:
                self.error(f"expected '+' or '-', found {op!r}")
            self.pos += 1


# -- operator application -----------------------------------------------------


def _index_tuples(n: int, total_bound: int) -> Iterator[tuple[int, ...]]:
    """All (k_1..k_n) with k_i >= 1 and sum <= total_bound."""
    for total in range(n, total_bound + 1):
        for cuts in itertools.combinations(range(1, total), n - 1):
            bounds = (0,) + cuts + (total,)
            yield tuple(b - a for a, b in zip(bounds, bounds[1:]))


def apply_template(t: SummationTemplate, F: PPolynomial) -> PPolynomial:
    """Apply one summation (without the 1/n prefactor) exactly.

    Enumerates index tuples up to the largest monomial weight of F; the
    result is exact and weight-preserving on each homogeneous component.
    """
    out = PPolynomial.zero()
    bound = F.max_weight()
    if t.n > bound:
        return out
    for kvec in _index_tuples(t.n, bound):
        derivative_indices = [sum(kvec[v - 1] for v in b) for b in t.derivative_blocks]
        G = F
        for m in derivative_indices:
            G = G.diff(m)
            if not G:
                break
        if not G:
            continue
        coeff = 1
        for m in derivative_indices:
            coeff *= m
        poly_indices = tuple(sum(kvec[v - 1] for v in c) for c in t.cycle_blocks)
        out = out + PPolynomial.monomial(poly_indices, coeff) * G
    return out


def apply_W(n: int, F: PPolynomial, *, max_n: int = DEFAULT_MAX_DECOMPOSE) -> PPolynomial:
    """Apply W([n]) = (1/n) * (sum of all n! summations) to F, exactly."""
    if n < 1:
        raise ValueError("n must be at least 1")
    if n > max_n:
        raise BoundExceededError(f"apply_W bound is {max_n}, got n={n}")
    total = PPolynomial.zero()
    for t in decompose_W(n, max_n=max_n):
        total = total + apply_template(t, F)
    return Fraction(1, n) * total
