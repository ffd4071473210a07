"""Commutation classes of reduced words in a Coxeter group.

The reduced words of a group element w split into commutation classes, and
each class is captured by its word poset.  This module builds the full set
of those posets by recursion on left descents, counts the classes by an
inclusion-exclusion recursion that never materializes the posets, counts
the reduced words themselves as linear extensions, and cross-checks all of
it against a breadth-first oracle that applies commutation and braid moves
directly.

The class count obeys a universal bound: for a nonempty reduced word,
9 C(w)^2 <= 4 * 3^len(w), checked here in exact integer arithmetic.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .alphabet import CommutationAlphabet
from .coxeter import (
    CanonicalElement,
    INFINITY,
    canonical_form,
    delete_left_descent,
    descents_from_inverse,
    inverse_columns,
    left_descents,
    matrix_key,
    _check_word,
    _require_reduced,
)
from .errors import BudgetError
from .poset import WordPoset, adjoin_min, canonical_word, count_linear_extensions

__all__ = [
    "DEFAULT_MEMO_CAP",
    "DEFAULT_MAX_REDUCED_WORDS",
    "WPSet",
    "ClassCounter",
    "wp_set",
    "count_reduced_words",
    "count_classes",
    "oracle_reduced",
    "bound_check",
    "iter_elements",
]

DEFAULT_MEMO_CAP = 1_000_000
DEFAULT_MAX_REDUCED_WORDS = 10 ** 6


@dataclass
class WPSet:
    """The word posets of all commutation classes of reduced words of one
    element, keyed by canonical class word (so keys are pairwise distinct
    and iteration order is deterministic)."""
    element: CanonicalElement
    posets: dict = field(default_factory=dict)

    def __len__(self):
        return len(self.posets)

    def __iter__(self):
        return iter(self.posets.values())


def _independent_subsets(graph, descents):
    """Nonempty pairwise-commuting subsets of ``descents``, members ascending."""
    ds = sorted(descents)
    out = []

    def extend(prefix, start):
        for idx in range(start, len(ds)):
            a = ds[idx]
            if all(graph.commutes(b, a) for b in prefix):
                cur = prefix + (a,)
                out.append(cur)
                extend(cur, idx + 1)

    extend((), 0)
    return out


class ClassCounter:
    """Memoized commutation-class counter for elements of one group.

    Every class of reduced words of w determines the set B of generators
    that can begin a word of the class; B is a nonempty pairwise-commuting
    subset of the left descent set D(w).  For a pairwise-commuting nonempty
    T subseteq D(w), the classes with B containing T correspond one-to-one
    with the classes of the shortened element Tw (strip the minimal letters
    of T, or adjoin them back), so inclusion-exclusion over T counts every
    class exactly once:

        C(w) = sum over T of (-1)^(len(T)+1) * C(Tw),    C(identity) = 1.

    The memo is keyed by the exact column matrix of the inverse element,
    which identifies the element itself; entries are capped, with explicit
    failure on overflow.
    """

    def __init__(self, graph, *, memo_cap: int | None = None):
        self.graph = graph
        self.memo_cap = DEFAULT_MEMO_CAP if memo_cap is None else memo_cap
        self._memo = {}

    def count(self, word) -> int:
        """Number of commutation classes of reduced words; ``word`` must
        already be a reduced tuple over the counter's graph."""
        graph = self.graph
        cols = inverse_columns(graph, word)
        key = matrix_key(graph, cols)
        hit = self._memo.get(key)
        if hit is not None:
            return hit
        if not word:
            total = 1
        else:
            total = 0
            descents = descents_from_inverse(graph, cols)
            for t_set in _independent_subsets(graph, descents):
                shorter = word
                for a in t_set:
                    shorter = delete_left_descent(graph, a, shorter)
                term = self.count(shorter)
                total += term if len(t_set) % 2 else -term
        if len(self._memo) >= self.memo_cap:
            raise BudgetError(f"class-count memo exceeds {self.memo_cap} entries")
        self._memo[key] = total
        return total


def count_classes(graph, word, *, memo_cap: int | None = None) -> int:
    """Number of commutation classes of reduced words of the element of the
    reduced word ``word``; equals the size of wp_set without building it."""
    word = _check_word(graph, word)
    _require_reduced(graph, word)
    return ClassCounter(graph, memo_cap=memo_cap).count(word)


def wp_set(graph, word, *, memo_cap: int | None = None) -> WPSet:
    """All word posets of commutation classes of reduced words of ``word``.

    Recursion on left descents: the posets of w are obtained from the
    posets of each shortened element aw by adjoining a new minimal element
    labeled a; distinct descents can rebuild the same class, so results
    are deduplicated by canonical class word.
    """
    word = _check_word(graph, word)
    _require_reduced(graph, word)
    cap = DEFAULT_MEMO_CAP if memo_cap is None else memo_cap
    alphabet = CommutationAlphabet.from_coxeter(graph)
    empty = WordPoset((), ())
    memo = {}

    def build(w):
        cols = inverse_columns(graph, w)
        key = matrix_key(graph, cols)
        hit = memo.get(key)
        if hit is not None:
            return hit
        if not w:
            result = {(): empty}
        else:
            result = {}
            for a in descents_from_inverse(graph, cols):
                shorter = delete_left_descent(graph, a, w)
                for p in build(shorter).values():
                    q = adjoin_min(p, a, alphabet)
                    result.setdefault(canonical_word(q, alphabet), q)
        if len(memo) >= cap:
            raise BudgetError(f"word-poset memo exceeds {cap} entries")
        memo[key] = result
        return result

    posets = build(word)
    return WPSet(element=canonical_form(graph, word),
                 posets=dict(sorted(posets.items())))


def count_reduced_words(graph, word, *, memo_cap: int | None = None) -> int:
    """Number of reduced words of the element: linear extensions summed over
    the word posets of its classes."""
    posets = wp_set(graph, word, memo_cap=memo_cap)
    return sum(count_linear_extensions(p) for p in posets)


def _alternating(a, b, m):
    return tuple(a if k % 2 == 0 else b for k in range(m))


def _move_neighbors(graph, w):
    """Words one commutation or braid move away from w.

    A move replaces a segment a b a b ... of length m(a,b) starting at some
    position by the same alternation started from b; m = 2 is the adjacent
    commuting swap.
    """
    out = []
    for p in range(len(w) - 1):
        a, b = w[p], w[p + 1]
        if a == b:
            continue
        m = graph.label(a, b)
        if m == INFINITY or p + m > len(w):
            continue
        m = int(m)
        if w[p:p + m] == _alternating(a, b, m):
            out.append(w[:p] + _alternating(b, a, m) + w[p + m:])
    return out


def oracle_reduced(graph, word, *, max_words: int | None = None):
    """All reduced words of the element, with the number of commutation
    classes among them, by brute-force closure.

    Breadth-first closure under commutation and braid moves reaches every
    reduced word of the element; the class count is the number of connected
    components under commutation moves alone.  Independent of the poset and
    inclusion-exclusion machinery, which is the point: this is the oracle
    they are tested against.
    """
    word = _check_word(graph, word)
    _require_reduced(graph, word)
    cap = DEFAULT_MAX_REDUCED_WORDS if max_words is None else max_words
    seen = {word}
    frontier = [word]
    while frontier:
        nxt = []
        for w in frontier:
            for v in _move_neighbors(graph, w):
                if v not in seen:
                    if len(seen) >= cap:
                        raise BudgetError(f"reduced-word closure exceeds {cap} words")
                    seen.add(v)
                    nxt.append(v)
        frontier = nxt

    components = 0
    visited = set()
    for start in seen:
        if start in visited:
            continue
        components += 1
        stack = [start]
        visited.add(start)
        while stack:
            w = stack.pop()
            for p in range(len(w) - 1):
                a, b = w[p], w[p + 1]
                if a != b and graph.label(a, b) == 2:
                    v = w[:p] + (b, a) + w[p + 2:]
                    if v not in visited:
                        visited.add(v)
                        stack.append(v)
    return seen, components


def bound_check(graph, word, *, memo_cap: int | None = None) -> bool:
    """Whether the class count satisfies 9 C(w)^2 <= 4 * 3^len(word).

    Squaring removes the square root from the bound (2/3) * 3^(len/2), so
    the comparison is exact integer arithmetic.  Requires a nonempty
    reduced word.
    """
    word = _check_word(graph, word)
    _require_reduced(graph, word)
    if not word:
        raise ValueError("bound is defined for nonempty words only")
    c = count_classes(graph, word, memo_cap=memo_cap)
    return 9 * c * c <= 4 * 3 ** len(word)


def iter_elements(graph, max_length: int | None = None):
    """Canonical reduced words of group elements, by length then lex order.

    Each level prepends non-descent generators to the previous level and
    canonicalizes.  Without ``max_length`` this terminates only when the
    group is finite.
    """
    level = {()}
    length = 0
    while level:
        yield from sorted(level)
        if max_length is not None and length >= max_length:
            return
        nxt = set()
        for w in level:
            ds = left_descents(graph, w)
            for a in graph.generators:
                if a not in ds:
                    nxt.add(canonical_form(graph, (a,) + w).word)
        level = nxt
        length += 1
