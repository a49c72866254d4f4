"""Non-crossing bracket sequences over the descending word n n-1 ... 1.

A sequence is stored as an array of n+1 "gap" values: gap 0 sits before n,
gap g (1 <= g <= n-1) sits between integers n-g+1 and n-g, and gap n sits
after 1.  A gap holds at most one right bracket followed by at most one left
bracket, so the alphabet is "", "(", ")" and ")(";  the leading gap can hold
only "(" and the trailing gap only ")".  Validity additionally requires that
brackets balance and that every integer lies inside at least one pair (under
the slot discipline every pair automatically encloses at least one integer).

Matched pairs are labelled by their right brackets counted from the right:
the rightmost right bracket closes pair 1.  Because right brackets occupy
distinct gaps, the pairs containing a given integer form a nesting chain and
the innermost one is the pair with the largest label; decoding assigns each
integer to that pair and reads each pair's integers as a descending cycle.

The dual sequence rewrites the four bracket positions around each integer by
a fixed 16-row local table.  The table is equivalent to toggling each
interior gap between "" and ")(" while fixing lone brackets, which this
module also implements as an independent cross-check.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property

from .errors import BoundExceededError, ParseError
from .perm import Permutation
from .summation import satisfies_star

__all__ = [
    "BracketSequence",
    "BracketPair",
    "PairClassification",
    "parse_seq",
    "print_seq",
    "decode",
    "encode",
    "classify_pairs",
    "dual",
    "dual_via_gap_toggle",
    "enumerate_sequences",
    "enumerate_single_top",
    "rank_shift_up",
    "rank_shift_down",
    "DEFAULT_MAX_ENUMERATE",
]

GAP_ALPHABET = ("", "(", ")", ")(")
DEFAULT_MAX_ENUMERATE = 12


@dataclass(frozen=True)
class BracketPair:
    """One matched pair: label, bracket gap positions, and the integers whose
    innermost enclosing pair this is (the cycle support under decoding)."""

    label: int
    left_gap: int
    right_gap: int
    members: tuple[int, ...]

    def contains(self, other: "BracketPair") -> bool:
        return self.left_gap < other.left_gap and other.right_gap < self.right_gap


@dataclass(frozen=True)
class BracketSequence:
    """A valid bracket insertion into the word n n-1 ... 1 (see module docs)."""

    n: int
    gaps: tuple[str, ...]

    def __post_init__(self):
        n = self.n
        if n < 1:
            raise ValueError("n must be at least 1")
        if len(self.gaps) != n + 1:
            raise ValueError(f"need {n + 1} gap values, got {len(self.gaps)}")
        if self.gaps[0] not in ("", "("):
            raise ValueError("the gap before the first integer may hold only '('")
        if self.gaps[n] not in ("", ")"):
            raise ValueError("the gap after the last integer may hold only ')'")
        for g in range(1, n):
            if self.gaps[g] not in GAP_ALPHABET:
                raise ValueError(f"bad gap value {self.gaps[g]!r} at gap {g}")
        depth = 0
        for g in range(n + 1):
            for ch in self.gaps[g]:
                depth += 1 if ch == "(" else -1
                if depth < 0:
                    raise ValueError("unbalanced brackets: ')' closes nothing")
            if g < n and depth < 1:
                raise ValueError(f"integer {n - g} is not inside any bracket pair")
        if depth != 0:
            raise ValueError("unbalanced brackets: unclosed '('")

    @property
    def r(self) -> int:
        """Number of bracket pairs."""
        return len(self.pairs)

    @cached_property
    def pairs(self) -> tuple[BracketPair, ...]:
        """Matched pairs sorted by label (1 = rightmost right bracket)."""
        stack: list[int] = []
        raw: list[tuple[int, int]] = []
        for g, gap in enumerate(self.gaps):
            for ch in gap:
                if ch == "(":
                    stack.append(g)
                else:
                    raw.append((stack.pop(), g))
        by_label = sorted(raw, key=lambda lr: -lr[1])
        members: dict[int, list[int]] = {i: [] for i in range(len(raw))}
        for k in range(1, self.n + 1):
            gap_above = self.n - k
            containing = [
                i
                for i, (l, right) in enumerate(by_label)
                if l <= gap_above < right
            ]
            members[max(containing)].append(k)
        out = []
        for i, (l, right) in enumerate(by_label):
            assert members[i], "a pair with no directly enclosed integer"
            out.append(BracketPair(i + 1, l, right, tuple(sorted(members[i]))))
        return tuple(out)

    @cached_property
    def top_level_labels(self) -> tuple[int, ...]:
        return tuple(
            p.label
            for p in self.pairs
            if not any(q.contains(p) for q in self.pairs)
        )

    def to_json_dict(self) -> dict:
        return {
            "n": self.n,
            "gaps": list(self.gaps),
            "pairs": [
                {"label": p.label, "members": list(p.members)} for p in self.pairs
            ],
        }

    def __str__(self) -> str:
        return print_seq(self)


# -- text format --------------------------------------------------------------


def print_seq(seq: BracketSequence, labels: bool = False) -> str:
    """Canonical text.  Compact for n <= 9 (matching the usual examples);
    for larger n a space separates integers whose gap is empty.  With
    ``labels=True`` every token is space-separated and brackets carry their
    pair label as ``(_i`` / ``)_i``."""
    if labels:
        by_left = {p.left_gap: p.label for p in seq.pairs}
        by_right: dict[int, int] = {p.right_gap: p.label for p in seq.pairs}
        tokens: list[str] = []
        for g in range(seq.n + 1):
            for ch in seq.gaps[g]:
                tokens.append(f")_{by_right[g]}" if ch == ")" else f"(_{by_left[g]}")
            if g < seq.n:
                tokens.append(str(seq.n - g))
        return " ".join(tokens)
    parts: list[str] = []
    for g in range(seq.n + 1):
        parts.append(seq.gaps[g])
        if g < seq.n:
            if seq.n >= 10 and g > 0 and seq.gaps[g] == "":
                parts.append(" ")
            parts.append(str(seq.n - g))
    return "".join(parts)


def _gaps_from_tokens(n: int, tokens: list[tuple[str, int]]) -> BracketSequence:
    """Assemble gap strings from (token, position) pairs; the integer tokens
    must be exactly n..1 in order."""
    gaps: list[str] = [""] * (n + 1)
    expected = n
    for token, pos in tokens:
        if token.isdigit():
            if int(token) != expected:
                raise ParseError(
                    f"expected integer {expected}, found {token}", position=pos
                )
            expected -= 1
        else:
            g = n - expected
            new = gaps[g] + token
            if new not in GAP_ALPHABET:
                if new in ("((", ")((", "))", "))("):
                    raise ParseError(
                        "at most one left and one right bracket fit between "
                        "two integers",
                        position=pos,
                    )
                raise ParseError(
                    "a left bracket immediately closed: every pair must "
                    "enclose an integer",
                    position=pos,
                )
            gaps[g] = new
    if expected != 0:
        raise ParseError(f"sequence stopped before integer {expected}")
    try:
        return BracketSequence(n, tuple(gaps))
    except ValueError as err:
        raise ParseError(str(err)) from None


def parse_seq(text: str) -> BracketSequence:
    """Parse bracket-sequence text such as ``(4(3)2)(1)``.

    Whitespace is insignificant.  Unspaced multi-digit input is resolved by
    the required strict descent: a digit run may spell several consecutive
    integers, and the reading of the first run that makes the whole text
    parse (longest first) wins.
    """
    runs: list[tuple[str, int]] = []
    i = 0
    while i < len(text):
        ch = text[i]
        if ch.isspace():
            i += 1
        elif ch in "()":
            runs.append((ch, i))
            i += 1
        elif ch.isdigit():
            j = i
            while j < len(text) and text[j].isdigit():
                j += 1
            runs.append((text[i:j], i))
            i = j
        else:
            raise ParseError(f"unexpected character {ch!r}", position=i)
    first_run = next((r for r, _ in runs if r.isdigit()), None)
    if first_run is None:
        raise ParseError("no integers found")
    if first_run[0] == "0":
        raise ParseError("integers may not have leading zeros")
    candidates = [int(first_run[:length]) for length in range(len(first_run), 0, -1)]
    best_error: ParseError | None = None
    for n in candidates:
        try:
            return _gaps_from_tokens(n, _split_runs(runs, n))
        except ParseError as err:
            # report the reading that progressed furthest
            if best_error is None or (err.position or -1) > (best_error.position or -1):
                best_error = err
    assert best_error is not None
    raise best_error


def _split_runs(runs: list[tuple[str, int]], n: int) -> list[tuple[str, int]]:
    """Split digit runs into the expected consecutive integers n, n-1, ..."""
    tokens: list[tuple[str, int]] = []
    expected = n
    for run, pos in runs:
        if not run.isdigit():
            tokens.append((run, pos))
            continue
        offset = 0
        while offset < len(run):
            want = str(expected)
            if expected < 1 or not run.startswith(want, offset):
                raise ParseError(
                    f"expected integer {expected}", position=pos + offset
                )
            tokens.append((want, pos + offset))
            offset += len(want)
            expected -= 1
    return tokens


# -- the bijection with star permutations --------------------------------------


def decode(seq: BracketSequence) -> Permutation:
    """Read off the star permutation: each pair's members, taken from the
    innermost pair outward, form the descending cycle on their set.

    >>> decode(parse_seq("(4)(321)")).cycles
    ((1, 3, 2), (4,))
    """
    cycles = [sorted(p.members, reverse=True) for p in seq.pairs]
    return Permutation.from_cycles(cycles)


def encode(perm: Permutation) -> BracketSequence:
    """Inverse of :func:`decode`: one pair per cycle support, opening before
    the maximum and closing after the minimum.  Rejects permutations whose
    summation is not of maximal degree (they have no bracket sequence).

    >>> print_seq(encode(Permutation.parse("(5 3 1)(2)(4)(6)")))
    '(6)(5(4)3(2)1)'
    """
    if not satisfies_star(perm):
        raise ValueError(
            f"{perm} does not satisfy the descending/non-crossing conditions"
        )
    n = perm.n
    rights = [""] * (n + 1)
    lefts = [""] * (n + 1)
    for support in perm.cycle_supports:
        lefts[n - max(support)] = "("
        rights[n - min(support) + 1] = ")"
    return BracketSequence(n, tuple(r + l for r, l in zip(rights, lefts)))


# -- pair classification --------------------------------------------------------


@dataclass(frozen=True)
class PairClassification:
    top_level: frozenset[int]
    embedded: frozenset[int]
    bottom_level: frozenset[int]
    adjacent: frozenset[tuple[int, int]]


def classify_pairs(seq: BracketSequence) -> PairClassification:
    """Pair flags plus the adjacency relation (no integers strictly between
    two pairs, which under the slot discipline means they share a ')(' gap)."""
    pairs = seq.pairs
    contained = {
        p.label: any(q.contains(p) for q in pairs) for p in pairs
    }
    contains_any = {
        p.label: any(p.contains(q) for q in pairs) for p in pairs
    }
    adjacent = set()
    for p in pairs:
        for q in pairs:
            if p.label < q.label and p.right_gap == q.left_gap:
                adjacent.add((p.label, q.label))
            if q.label < p.label and p.right_gap == q.left_gap:
                adjacent.add((q.label, p.label))
    return PairClassification(
        top_level=frozenset(l for l, c in contained.items() if not c),
        embedded=frozenset(l for l, c in contained.items() if c),
        bottom_level=frozenset(l for l, c in contains_any.items() if not c),
        adjacent=frozenset(adjacent),
    )


# -- duality --------------------------------------------------------------------


# Local rewrite of the four bracket positions around one integer k, given as
# presence bits (right-above, left-above, right-below, left-below).  Rows come
# in involutive mirror-image pairs; the fixed rows are those whose gaps hold a
# single lone bracket.
_DUAL_TABLE = {
    (0, 0, 0, 0): (1, 1, 1, 1),  # k      -> )(k)(
    (0, 0, 1, 0): (1, 1, 1, 0),  # k)     -> )(k)
    (0, 1, 0, 0): (0, 1, 1, 1),  # (k     -> (k)(
    (0, 0, 0, 1): (1, 1, 0, 1),  # k(     -> )(k(
    (1, 0, 0, 0): (1, 0, 1, 1),  # )k     -> )k)(
    (0, 1, 1, 0): (0, 1, 1, 0),  # (k)    -> (k)
    (1, 0, 0, 1): (1, 0, 0, 1),  # )k(    -> )k(
    (0, 1, 0, 1): (0, 1, 0, 1),  # (k(    -> (k(
    (1, 0, 1, 0): (1, 0, 1, 0),  # )k)    -> )k)
    (1, 1, 0, 0): (0, 0, 1, 1),  # )(k    -> k)(
    (0, 0, 1, 1): (1, 1, 0, 0),  # k)(    -> )(k
    (1, 1, 1, 0): (0, 0, 1, 0),  # )(k)   -> k)
    (0, 1, 1, 1): (0, 1, 0, 0),  # (k)(   -> (k
    (1, 1, 0, 1): (0, 0, 0, 1),  # )(k(   -> k(
    (1, 0, 1, 1): (1, 0, 0, 0),  # )k)(   -> )k   (mirror of the )k row)
    (1, 1, 1, 1): (0, 0, 0, 0),  # )(k)(  -> k
}


def _gap_bits(gap: str) -> tuple[int, int]:
    return (1 if ")" in gap else 0, 1 if "(" in gap else 0)


def dual(seq: BracketSequence) -> BracketSequence:
    """The dual sequence via the 16-row local table; swaps a sequence with r
    pairs into one with n-r+1 pairs, and is an involution.

    >>> print_seq(dual(parse_seq("(7(65)(4)(3)21)")))
    '(7(6)(543)2)(1)'
    """
    n = seq.n
    bits = [_gap_bits(g) for g in seq.gaps]
    new_bits: list[list[int | None]] = [[None, None] for _ in range(n + 1)]

    def write(gap: int, slot: int, value: int):
        old = new_bits[gap][slot]
        assert old is None or old == value, "inconsistent local rewrites"
        new_bits[gap][slot] = value

    for k in range(n, 0, -1):
        above, below = n - k, n - k + 1
        key = bits[above] + bits[below]
        ra, la, rb, lb = _DUAL_TABLE[key]
        write(above, 0, ra)
        write(above, 1, la)
        write(below, 0, rb)
        write(below, 1, lb)
    gaps = tuple(")" * b[0] + "(" * b[1] for b in new_bits)
    return BracketSequence(n, gaps)


def dual_via_gap_toggle(seq: BracketSequence) -> BracketSequence:
    """Independent formulation of the dual: toggle each interior gap between
    "" and ")(" and leave lone brackets (and the boundary gaps) unchanged."""
    toggle = {"": ")(", ")(": "", "(": "(", ")": ")"}
    gaps = list(seq.gaps)
    for g in range(1, seq.n):
        gaps[g] = toggle[gaps[g]]
    return BracketSequence(seq.n, tuple(gaps))


# -- enumeration -----------------------------------------------------------------


def enumerate_sequences(
    n: int, r: int | None = None, *, max_n: int = DEFAULT_MAX_ENUMERATE
) -> list[BracketSequence]:
    """All valid sequences on n integers (with exactly r pairs when given),
    in lexicographic order of their gap arrays under the alphabet order
    "" < "(" < ")" < ")(".
    """
    if n < 1:
        raise ValueError("n must be at least 1")
    if n > max_n:
        raise BoundExceededError(f"enumeration bound is {max_n}, got n={n}")
    if r is not None and not 1 <= r <= n:
        return []
    out: list[BracketSequence] = []
    gaps: list[str] = [""] * (n + 1)

    def extend(g: int, depth: int, opens: int):
        if g == n:
            # trailing gap must close the last pair around integer 1
            closing = ")" if depth == 1 else ""
            if depth - len(closing) == 0 and (r is None or opens == r):
                gaps[g] = closing
                out.append(BracketSequence(n, tuple(gaps)))
            return
        allowed = ("", "(") if g == 0 else GAP_ALPHABET
        remaining_open_slots = n - g  # interior gaps left, each fits one '('
        for value in allowed:
            d = depth
            ok = True
            for ch in value:
                d += 1 if ch == "(" else -1
                if d < 0:
                    ok = False
                    break
            if not ok or d < 1:  # the next integer must be covered
                continue
            o = opens + value.count("(")
            if r is not None and (o > r or o + remaining_open_slots - 1 < r):
                continue
            gaps[g] = value
            extend(g + 1, d, o)

    extend(0, 0, 0)
    return out


def enumerate_single_top(
    n: int, r: int | None = None, *, max_n: int = DEFAULT_MAX_ENUMERATE
) -> list[BracketSequence]:
    """The subset of :func:`enumerate_sequences` with one top-level pair."""
    return [
        s for s in enumerate_sequences(n, r, max_n=max_n)
        if len(s.top_level_labels) == 1
    ]


# -- the rank-shifting bijection ---------------------------------------------------


def rank_shift_up(seq: BracketSequence) -> BracketSequence:
    """Send a sequence on n integers to one on n+1 with a single top-level
    pair: prepend n+1 and move the left bracket of the last top-level pair
    (the one closed by the final right bracket) to the front.

    >>> print_seq(rank_shift_up(parse_seq("(4)(321)")))
    '(5(4)321)'
    """
    n = seq.n
    last_top = next(p for p in seq.pairs if p.label == 1)
    assert last_top.right_gap == n, "pair 1 always closes in the trailing gap"
    new_gaps = ["("] + list(seq.gaps)
    moved = new_gaps[1 + last_top.left_gap]
    new_gaps[1 + last_top.left_gap] = moved.replace("(", "", 1)
    return BracketSequence(n + 1, tuple(new_gaps))


def rank_shift_down(seq: BracketSequence) -> BracketSequence:
    """Inverse of :func:`rank_shift_up`; requires a single top-level pair.

    Deletes the integer n (necessarily the only integer directly following
    the outer left bracket) and re-opens the outer pair just before the
    largest remaining integer that sits directly inside it.

    >>> print_seq(rank_shift_down(parse_seq("(5(4)321)")))
    '(4)(321)'
    """
    n = seq.n
    if n < 2:
        raise ValueError("need at least two integers to shift down")
    tops = seq.top_level_labels
    if len(tops) != 1:
        raise ValueError(f"expected a single top-level pair, found {len(tops)}")
    top = next(p for p in seq.pairs if p.label == tops[0])
    assert top.left_gap == 0 and top.right_gap == n
    v = max(m for m in top.members if m < n)
    new_gaps = list(seq.gaps[1:])
    g_above_v = n - 1 - v  # gap index above v after dropping the top integer
    assert "(" not in new_gaps[g_above_v]
    new_gaps[g_above_v] = new_gaps[g_above_v] + "("
    return BracketSequence(n - 1, tuple(new_gaps))
