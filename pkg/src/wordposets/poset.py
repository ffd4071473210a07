"""Word posets (heaps) and their linear extensions.

The word poset of a word w places one element per letter occurrence,
labeled by that letter, and orders occurrence i before occurrence j
(for positions i < j) exactly when some chain of constraints forces it:
the direct constraints are the pairs whose letters are equal or do not
commute, and the order is the transitive closure of those.

The resulting labeled poset satisfies two conditions:

  (a) elements whose labels are equal or do not commute are comparable;
  (b) every cover pair has labels that are equal or do not commute.

A labeled poset with these two properties determines a commutation class
completely: its linear extensions, read through the labeling, are exactly
the words of the class.  Counting words in a class is therefore counting
linear extensions, and a canonical class representative is the
lexicographically smallest linear-extension word.

Order is stored as one predecessor bit set per element, so comparability
tests are single mask probes and the extension-counting dynamic program
runs over ideal bit sets.
"""

from __future__ import annotations

from functools import cached_property

from .alphabet import CommutationAlphabet
from .errors import BudgetError

__all__ = [
    "DEFAULT_MAX_POSITIONS",
    "WordPoset",
    "build_word_poset",
    "validate",
    "count_linear_extensions",
    "enumerate_linear_extensions",
    "canonical_word",
    "adjoin_min",
]

# Position sets are bit masks; 64 keeps them one machine word in spirit even
# though Python integers would take any size.
DEFAULT_MAX_POSITIONS = 64


def _bits(mask):
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


class WordPoset:
    """A labeled partial order on positions 0..m-1.

    ``labels[x]`` is the symbol at element x and ``preds[x]`` is the bit set
    of strict predecessors of x.  ``preds`` must be transitively closed;
    constructors in this module guarantee that.
    """

    def __init__(self, labels, preds):
        self.labels = tuple(labels)
        self.preds = tuple(preds)
        m = len(self.labels)
        if len(self.preds) != m:
            raise ValueError("labels and preds length mismatch")
        full = (1 << m) - 1
        for x, p in enumerate(self.preds):
            if p & ~full or p >> x & 1:
                raise ValueError(f"bad predecessor set at element {x}")

    def __len__(self):
        return len(self.labels)

    def __eq__(self, other):
        if not isinstance(other, WordPoset):
            return NotImplemented
        return self.labels == other.labels and self.preds == other.preds

    def __hash__(self):
        return hash((self.labels, self.preds))

    def __repr__(self):
        return f"WordPoset(labels={self.labels!r}, covers={self.covers()!r})"

    def less(self, x, y) -> bool:
        """Strict order: x < y."""
        return self.preds[y] >> x & 1 == 1

    def leq(self, x, y) -> bool:
        return x == y or self.less(x, y)

    @cached_property
    def succs(self):
        """Strict successor bit set per element."""
        m = len(self)
        out = [0] * m
        for y, p in enumerate(self.preds):
            for x in _bits(p):
                out[x] |= 1 << y
        return tuple(out)

    def covers(self):
        """Cover pairs (x, y) with x < y and nothing in between."""
        out = []
        for y, p in enumerate(self.preds):
            indirect = 0
            for x in _bits(p):
                indirect |= self.preds[x]
            for x in _bits(p & ~indirect):
                out.append((x, y))
        return sorted(out)

    @classmethod
    def from_covers(cls, labels, covers) -> "WordPoset":
        """Build from cover (or any generating) pairs; closes transitively.

        Raises ValueError if the pairs contain a cycle.
        """
        m = len(labels)
        direct = [0] * m
        for x, y in covers:
            if not (0 <= x < m and 0 <= y < m) or x == y:
                raise ValueError(f"bad cover pair ({x}, {y})")
            direct[y] |= 1 << x
        preds = list(direct)
        changed = True
        while changed:
            changed = False
            for y in range(m):
                acc = preds[y]
                for x in _bits(preds[y]):
                    acc |= preds[x]
                if acc != preds[y]:
                    preds[y] = acc
                    changed = True
        for x in range(m):
            if preds[x] >> x & 1:
                raise ValueError("cover pairs contain a cycle")
        return cls(labels, preds)

    def to_json_dict(self) -> dict:
        return {
            "labels": [str(s) for s in self.labels],
            "covers": [list(pair) for pair in self.covers()],
        }

    @classmethod
    def from_json_dict(cls, data) -> "WordPoset":
        return cls.from_covers(list(data["labels"]), [tuple(p) for p in data["covers"]])

    def to_dot(self) -> str:
        """Hasse diagram in DOT format (edges point from smaller to larger)."""
        lines = ["digraph wordposet {", "  rankdir=BT;"]
        for x, s in enumerate(self.labels):
            lines.append(f'  n{x} [label="{s}"];')
        for x, y in self.covers():
            lines.append(f"  n{x} -> n{y};")
        lines.append("}")
        return "\n".join(lines) + "\n"


def build_word_poset(word, alphabet: CommutationAlphabet, *,
                     max_positions: int = DEFAULT_MAX_POSITIONS) -> WordPoset:
    """Word poset of a word: occurrence i precedes occurrence j (i < j as
    positions) iff a chain of equal-or-non-commuting constraints links them.
    """
    letters = tuple(word)
    m = len(letters)
    if m > max_positions:
        raise BudgetError(f"word has {m} letters, position cap is {max_positions}")
    for s in letters:
        if s not in alphabet:
            raise ValueError(f"letter {s!r} not in alphabet")
    preds = [0] * m
    for j in range(m):
        acc = 0
        for i in range(j):
            if letters[i] == letters[j] or not alphabet.commutes(letters[i], letters[j]):
                acc |= preds[i] | (1 << i)
        preds[j] = acc
    return WordPoset(letters, preds)


def validate(poset: WordPoset, alphabet: CommutationAlphabet) -> list:
    """Audit a labeled poset against the word-poset conditions.

    Returns a list of human-readable violation strings; empty iff the stored
    order is a transitively closed partial order, every equal-or-non-commuting
    pair is comparable (a), and every cover pair is equal-or-non-commuting (b).
    """
    out = []
    m = len(poset)
    preds = poset.preds
    labels = poset.labels
    for y in range(m):
        for x in _bits(preds[y]):
            if preds[x] >> y & 1:
                out.append(f"order: antisymmetry fails for {x} and {y}")
            if preds[x] & ~preds[y]:
                out.append(f"order: not transitively closed at {x} < {y}")
    for x in range(m):
        for y in range(x + 1, m):
            constrained = labels[x] == labels[y] or not alphabet.commutes(labels[x], labels[y])
            comparable = poset.less(x, y) or poset.less(y, x)
            if constrained and not comparable:
                out.append(
                    f"condition (a): {x} and {y} (labels {labels[x]!r}, {labels[y]!r}) incomparable")
    for x, y in poset.covers():
        if labels[x] != labels[y] and alphabet.commutes(labels[x], labels[y]):
            out.append(
                f"condition (b): cover {x} < {y} with commuting labels {labels[x]!r}, {labels[y]!r}")
    return out


def count_linear_extensions(poset: WordPoset, *,
                            max_positions: int = DEFAULT_MAX_POSITIONS) -> int:
    """Exact number of linear extensions.

    Dynamic program over order ideals: an extension of an ideal ends with one
    of its maximal elements, so counts add over removing each maximal element.
    Memoized on the ideal's bit set; exact big integers throughout.
    """
    m = len(poset)
    if m > max_positions:
        raise BudgetError(f"poset has {m} elements, position cap is {max_positions}")
    succs = poset.succs
    memo = {0: 1}

    def count(mask):
        try:
            return memo[mask]
        except KeyError:
            pass
        total = 0
        rest = mask
        while rest:
            low = rest & -rest
            rest ^= low
            if succs[low.bit_length() - 1] & mask == 0:
                total += count(mask ^ low)
        memo[mask] = total
        return total

    return count((1 << m) - 1)


def _label_key(alphabet):
    if alphabet is None:
        return lambda s: s
    return alphabet.index


def enumerate_linear_extensions(poset: WordPoset, alphabet: CommutationAlphabet | None = None):
    """Yield every linear extension as its word, in lexicographic word order.

    The word of an extension lists the labels in extension order.  For a valid
    word poset the map extension -> word is one-to-one, because at any step
    the available elements carry pairwise distinct labels (equal-labeled
    elements are comparable), so each yielded word appears exactly once.
    """
    m = len(poset)
    preds = poset.preds
    labels = poset.labels
    key = _label_key(alphabet)
    word = []

    def emit(placed):
        if len(word) == m:
            yield tuple(word)
            return
        avail = [x for x in range(m)
                 if not placed >> x & 1 and preds[x] & ~placed == 0]
        avail.sort(key=lambda x: key(labels[x]))
        for x in avail:
            word.append(labels[x])
            yield from emit(placed | (1 << x))
            word.pop()

    yield from emit(0)


def canonical_word(poset: WordPoset, alphabet: CommutationAlphabet | None = None):
    """Lexicographically smallest word of the class.

    Greedy: repeatedly take the available element with the smallest label.
    That element is unique because equal-labeled elements are comparable, and
    greediness is safe because scheduling any available element keeps the rest
    schedulable.  Two valid word posets are isomorphic iff their canonical
    words are equal.
    """
    m = len(poset)
    preds = poset.preds
    labels = poset.labels
    key = _label_key(alphabet)
    placed = 0
    out = []
    for _ in range(m):
        best = None
        for x in range(m):
            if not placed >> x & 1 and preds[x] & ~placed == 0:
                if best is None or key(labels[x]) < key(labels[best]):
                    best = x
        out.append(labels[best])
        placed |= 1 << best
    return tuple(out)


def adjoin_min(poset: WordPoset, symbol, alphabet: CommutationAlphabet, *,
               max_positions: int = DEFAULT_MAX_POSITIONS) -> WordPoset:
    """Adjoin a new element labeled ``symbol`` below everything it must precede.

    The new element x goes below every y whose label equals the symbol or does
    not commute with it, and transitively below everything above those.  The
    restriction to the old elements is unchanged; x gets position m.
    """
    m = len(poset)
    if m + 1 > max_positions:
        raise BudgetError(f"poset would have {m + 1} elements, cap is {max_positions}")
    if symbol not in alphabet:
        raise ValueError(f"symbol {symbol!r} not in alphabet")
    above = 0
    for y, s in enumerate(poset.labels):
        if s == symbol or not alphabet.commutes(s, symbol):
            above |= (1 << y) | poset.succs[y]
    xbit = 1 << m
    preds = [p | xbit if above >> y & 1 else p for y, p in enumerate(poset.preds)]
    preds.append(0)
    return WordPoset(poset.labels + (symbol,), preds)
