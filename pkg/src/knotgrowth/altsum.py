"""Exact arithmetic in alternating-sum semigroups.

Fix an abelian group G (the integers, or integers mod m) and a finite
nonempty subset B of G.  The alternating sum of a word b1 b2 ... bk over B
is alt(w) = b1 - b2 + b3 - ... + (-1)^(k+1) bk, computed in G.  Two words
are identified when they have the same length and the same alternating sum;
the quotient of the free semigroup B+ is the alternating-sum semigroup
AS(G, B).  The strong variant SAS(G, B) additionally requires equal counts
of letters that are even in G, where g is even when g = h + h for some h.

Elements are therefore determined by a small tuple of integers, so all
arithmetic here is exact.  Enumeration of the elements of a given length
runs a reachable-state recurrence rather than walking all |B|^t words:
prepending a letter b to a word with alternating sum a yields sum b - a,
so the set S_t of sums realized in length t satisfies

    S_1 = B,    S_{t+1} = { b - a : b in B, a in S_t }.

For the strong variant the state also carries the even-letter count.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .errors import (
    DomainError,
    InternalConsistencyError,
    NotRepresentableError,
    ParameterError,
)

Word = tuple[int, ...]


@dataclass(frozen=True)
class Zmod:
    """The cyclic group of integers modulo a positive modulus."""

    modulus: int

    def __post_init__(self):
        if self.modulus < 1:
            raise ParameterError(f"modulus must be positive, got {self.modulus}")

    def reduce(self, x: int) -> int:
        return x % self.modulus

    def is_even(self, x: int) -> bool:
        """Whether x is twice some group element.

        Every element is even when the modulus is odd; for even modulus the
        even elements are 0, 2, ..., modulus - 2.
        """
        return self.modulus % 2 == 1 or x % 2 == 0

    def __repr__(self):
        return f"Zmod({self.modulus})"


@dataclass(frozen=True)
class IntegersZ:
    """The infinite cyclic group of integers."""

    def reduce(self, x: int) -> int:
        return x

    def is_even(self, x: int) -> bool:
        return x % 2 == 0

    def __repr__(self):
        return "IntegersZ()"


Group = Zmod | IntegersZ


@dataclass(frozen=True)
class AltSumSemigroup:
    """AS(G, B), or SAS(G, B) when ``strong`` is set.

    ``generators`` is stored sorted, deduplicated and reduced into G.
    """

    group: Group
    generators: tuple[int, ...]
    strong: bool = False

    def __post_init__(self):
        if len(self.generators) == 0:
            raise ParameterError("generator set must be nonempty")
        reduced = tuple(sorted({self.group.reduce(b) for b in self.generators}))
        object.__setattr__(self, "generators", reduced)

    # -- word-level operations -------------------------------------------

    def alt(self, word: Word) -> int:
        """Alternating sum of a word, reduced into the group."""
        if len(word) == 0:
            raise DomainError("alternating sum of the empty word is undefined")
        total = 0
        sign = 1
        for b in word:
            total += sign * b
            sign = -sign
        return self.group.reduce(total)

    def even_count(self, word: Word) -> int:
        return sum(1 for b in word if self.group.is_even(b))

    def class_of(self, word: Word) -> "ASElement":
        """The element represented by a word over the generators."""
        gens = set(self.generators)
        for b in word:
            if self.group.reduce(b) not in gens:
                raise DomainError(f"letter {b} is not a generator of {self}")
        reduced = tuple(self.group.reduce(b) for b in word)
        return ASElement(
            semigroup=self,
            length=len(reduced),
            alt=self.alt(reduced),
            even_count=self.even_count(reduced) if self.strong else None,
        )

    # -- element-level operations ----------------------------------------

    def element(self, length: int, alt: int, even_count: int | None = None) -> "ASElement":
        """Build an element from its invariants, validating realizability."""
        return ASElement(self, length, self.group.reduce(alt), even_count)

    def elements_of_length(self, t: int) -> frozenset:
        """All realized states at length t: alt values, or (alt, evens) pairs."""
        if t < 1:
            raise DomainError(f"length must be at least 1, got {t}")
        return _states(self, t)

    def count_elements(self, t: int) -> int:
        """Number of distinct elements of length exactly t."""
        return len(self.elements_of_length(t))

    def __repr__(self):
        kind = "SAS" if self.strong else "AS"
        return f"{kind}({self.group!r}, {{{', '.join(map(str, self.generators))}}})"


@lru_cache(maxsize=None)
def _states(sg: AltSumSemigroup, t: int) -> frozenset:
    g = sg.group
    if t == 1:
        if sg.strong:
            return frozenset((b, 1 if g.is_even(b) else 0) for b in sg.generators)
        return frozenset(sg.generators)
    prev = _states(sg, t - 1)
    if sg.strong:
        return frozenset(
            (g.reduce(b - a), e + (1 if g.is_even(b) else 0))
            for b in sg.generators
            for (a, e) in prev
        )
    return frozenset(g.reduce(b - a) for b in sg.generators for a in prev)


@dataclass(frozen=True)
class ASElement:
    """An element of an alternating-sum semigroup.

    Identified by word length and alternating sum, plus the even-letter
    count in the strong variant.  Construction validates that some word
    over the generators actually realizes these invariants.
    """

    semigroup: AltSumSemigroup
    length: int
    alt: int
    even_count: int | None = None

    def __post_init__(self):
        if self.length < 1:
            raise ParameterError(f"length must be at least 1, got {self.length}")
        if self.semigroup.strong:
            if self.even_count is None:
                raise ParameterError("strong semigroup elements need an even-letter count")
            if not 0 <= self.even_count <= self.length:
                raise ParameterError(
                    f"even-letter count {self.even_count} out of range for length {self.length}"
                )
        elif self.even_count is not None:
            raise ParameterError("even-letter count given for a non-strong semigroup")
        if self.alt != self.semigroup.group.reduce(self.alt):
            raise ParameterError(f"alternating sum {self.alt} is not reduced")
        state = (self.alt, self.even_count) if self.semigroup.strong else self.alt
        if state not in _states(self.semigroup, self.length):
            raise DomainError(
                f"no word of length {self.length} over {self.semigroup} realizes {state}"
            )

    def __mul__(self, other: "ASElement") -> "ASElement":
        return multiply(self, other)


def multiply(x: ASElement, y: ASElement) -> ASElement:
    """Product in the semigroup; concatenation on representing words.

    alt(uv) = alt(u) + (-1)^|u| alt(v), lengths and even counts add.
    """
    if x.semigroup != y.semigroup:
        raise ParameterError("cannot multiply elements of different semigroups")
    sg = x.semigroup
    sign = -1 if x.length % 2 == 1 else 1
    alt = sg.group.reduce(x.alt + sign * y.alt)
    evens = x.even_count + y.even_count if sg.strong else None
    return ASElement(sg, x.length + y.length, alt, evens)


# -- generator families arising from knot diagrams -------------------------


@dataclass(frozen=True)
class DtwAlphabet:
    """Generator set attached to the double twist knot with n clockwise and
    l anticlockwise half-twists: the subset {0..n} + {jn+1 : 0 <= j < l} of
    the integers mod ln+1.  It has exactly n + l elements.
    """

    n: int
    l: int

    def __post_init__(self):
        if self.n < 1 or self.l < 1:
            raise ParameterError(f"twist counts must be positive, got ({self.n}, {self.l})")

    @property
    def modulus(self) -> int:
        return self.l * self.n + 1

    @property
    def elements(self) -> frozenset[int]:
        base = set(range(self.n + 1))
        base.update(j * self.n + 1 for j in range(self.l))
        return frozenset(base)

    def semigroup(self, strong: bool = False) -> AltSumSemigroup:
        return AltSumSemigroup(Zmod(self.modulus), tuple(self.elements), strong=strong)


def dtw_alphabet(n: int, l: int) -> DtwAlphabet:
    return DtwAlphabet(n, l)


@dataclass(frozen=True)
class ConjectureAlphabet:
    """Conjectured generator set for the three-parameter pretzel-style family
    with twist counts (m, l, n), inside the integers mod (ml+1)n + m.

    The defining index ranges are taken literally:

        {0..n+1}  +  {jn+1 : 0 <= j <= l+1}  +  {(kl+1)n + k : 0 <= k < m}

    all reduced mod (ml+1)n + m.  The correspondence is only expected to
    make sense when the modulus is odd; ``modulus_is_odd`` flags that.
    """

    m: int
    l: int
    n: int

    def __post_init__(self):
        if min(self.m, self.l, self.n) < 1:
            raise ParameterError(
                f"twist counts must be positive, got ({self.m}, {self.l}, {self.n})"
            )

    @property
    def modulus(self) -> int:
        return (self.m * self.l + 1) * self.n + self.m

    @property
    def modulus_is_odd(self) -> bool:
        return self.modulus % 2 == 1

    @property
    def elements(self) -> frozenset[int]:
        mod = self.modulus
        vals = set(range(self.n + 2))
        vals.update((j * self.n + 1) % mod for j in range(self.l + 2))
        vals.update(((k * self.l + 1) * self.n + k) % mod for k in range(self.m))
        return frozenset(v % mod for v in vals)

    def semigroup(self) -> AltSumSemigroup:
        return AltSumSemigroup(Zmod(self.modulus), tuple(self.elements))


def conjecture_alphabet(m: int, l: int, n: int) -> ConjectureAlphabet:
    return ConjectureAlphabet(m, l, n)


def canonical_word(alphabet: DtwAlphabet, element: ASElement) -> Word:
    """The canonical representing word for an element of AS over a double
    twist alphabet.

    For length t >= 2 the canonical words have one of the shapes

        s 0 0^(t-2)    for s in {0..n}
        0 q 0^(t-2)    for q in {1..n}   (sum -q)
        d c 0^(t-2)    for d in {2n+1, 3n+1, ..., (l-1)n+1}, c in {1..n}

    tried in that order; for l >= 2 exactly one shape matches any sum.
    Length-1 elements are their own single-letter word when the sum is a
    generator, and have no canonical word otherwise.
    """
    sg = alphabet.semigroup()
    if element.semigroup != sg:
        raise ParameterError(
            f"element of {element.semigroup} is not from the alternating-sum "
            f"semigroup over {alphabet}"
        )
    t, s = element.length, element.alt
    n, mod = alphabet.n, alphabet.modulus
    if t == 1:
        if s in alphabet.elements:
            return (s,)
        raise NotRepresentableError(f"sum {s} is not a single generator of {alphabet}")
    tail = (0,) * (t - 2)
    if s <= n:
        return (s, 0) + tail
    q = (-s) % mod
    if 1 <= q <= n:
        return (0, q) + tail
    for j in range(2, alphabet.l):
        d = j * n + 1
        c = (d - s) % mod
        if 1 <= c <= n:
            return (d, c) + tail
    raise InternalConsistencyError(
        f"no canonical word found for sum {s} at length {t} over {alphabet}"
    )
