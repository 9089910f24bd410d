"""Bounded congruence closure and isomorphism verification.

The closure enumerates every word over the presentation alphabet up to a
horizon H = max_len + pad and merges words in a union-find structure.  Two
kinds of merges happen:

* congruence: each defining relation is merged, and whenever two words are
  merged every one-letter extension (on either side) is merged too, so the
  partition is closed under two-sided multiplication within the horizon;
* cancellation: whenever two merged words share their first letter, their
  suffixes are merged, and likewise for last letters and prefixes.

Every merge is forced in any cancellative semigroup satisfying the
relations, so the class counts per degree are upper bounds for the true
counts in the cancellative quotient.  The padding degrees give cancellation
room to act above the window being counted: a typical derivation multiplies
by a letter, rewrites at the longer length, and cancels back down.

Verification then squeezes from both sides.  A letter map into an
alternating-sum semigroup that respects the relations induces a map from
closure classes onto the semigroup's elements, so the element count is a
lower bound; when the two counts agree, the degree is pinned exactly and
the map is a bijection there.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field, replace

from .altsum import AltSumSemigroup, ASElement, Zmod, conjecture_alphabet, dtw_alphabet
from .diagrams import (
    build_double_twist,
    build_torus2,
    build_trivial,
    conway_with_traces,
    double_twist_arc_values,
)
from .errors import (
    DomainError,
    InternalConsistencyError,
    ParameterError,
    ResourceBudgetError,
)
from .presentation import Presentation, Word, presentation_from_diagram

DEFAULT_WORD_BUDGET = 5_000_000


class _UnionFind:
    """Array union-find with path halving; the smallest index wins as root,
    so every class is represented by its shortest, lexicographically first
    word."""

    def __init__(self, size: int):
        self.parent = list(range(size))

    def find(self, x: int) -> int:
        parent = self.parent
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    def union(self, x: int, y: int) -> bool:
        rx, ry = self.find(x), self.find(y)
        if rx == ry:
            return False
        if rx > ry:
            rx, ry = ry, rx
        self.parent[ry] = rx
        return True


@dataclass
class CongruencePartition:
    """Result of the bounded closure: class structure on words up to the
    horizon, with per-degree class counts over the requested window."""

    alphabet_size: int
    max_len: int
    horizon: int
    degree_counts: tuple[int, ...]
    _uf: _UnionFind = field(repr=False)
    _offsets: tuple[int, ...] = field(repr=False)
    _powers: tuple[int, ...] = field(repr=False)

    def _index(self, word: Word) -> int:
        length = len(word)
        if not 1 <= length <= self.horizon:
            raise DomainError(
                f"word length {length} outside the closed range 1..{self.horizon}"
            )
        value = 0
        for j, letter in enumerate(word):
            if not 0 <= letter < self.alphabet_size:
                raise DomainError(f"letter {letter} out of range")
            value += letter * self._powers[j]
        return self._offsets[length] + value

    def _decode(self, length: int, value: int) -> Word:
        out = []
        for _ in range(length):
            value, letter = divmod(value, self.alphabet_size)
            out.append(letter)
        return tuple(out)

    def representative(self, word: Word) -> Word:
        """The class representative: shortest index in the class, decoded."""
        root = self._uf.find(self._index(word))
        length = 1
        while self._offsets[length + 1] <= root:
            length += 1
        return self._decode(length, root - self._offsets[length])

    def are_equivalent(self, u: Word, v: Word) -> bool:
        return self._uf.find(self._index(u)) == self._uf.find(self._index(v))

    def classes_at_degree(self, degree: int) -> list[list[Word]]:
        """All classes of words of the given length, each sorted, the list
        ordered by first member."""
        if not 1 <= degree <= self.horizon:
            raise DomainError(f"degree {degree} outside the closed range 1..{self.horizon}")
        groups: dict[int, list[Word]] = {}
        base = self._offsets[degree]
        for value in range(self._powers[degree]):
            root = self._uf.find(base + value)
            groups.setdefault(root, []).append(self._decode(degree, value))
        return [sorted(words) for root, words in sorted(groups.items())]


def enumerate_classes(
    pres: Presentation,
    max_len: int,
    pad: int = 2,
    budget: int = DEFAULT_WORD_BUDGET,
) -> CongruencePartition:
    """Run the bounded closure and count classes per degree 1..max_len."""
    if max_len < 1:
        raise ParameterError(f"max_len must be at least 1, got {max_len}")
    if pad < 0:
        raise ParameterError(f"pad must not be negative, got {pad}")
    k = pres.alphabet_size
    horizon = max_len + pad
    longest_relation = max((len(lhs) for lhs, _ in pres.relations), default=1)
    if horizon < longest_relation:
        raise ParameterError(
            f"horizon {horizon} is shorter than the longest relation "
            f"({longest_relation}); raise max_len or pad"
        )

    powers = [1]
    for _ in range(horizon):
        powers.append(powers[-1] * k)
    offsets = [0, 0]
    for length in range(1, horizon + 1):
        offsets.append(offsets[length] + powers[length])
    total = offsets[horizon + 1]
    if total > budget:
        raise ResourceBudgetError(total, budget)

    uf = _UnionFind(total)
    queue: deque[tuple[int, int, int]] = deque()

    def value_of(word: Word) -> int:
        value = 0
        for j, letter in enumerate(word):
            value += letter * powers[j]
        return value

    for lhs, rhs in pres.relations:
        length = len(lhs)
        u, v = value_of(lhs), value_of(rhs)
        if uf.union(offsets[length] + u, offsets[length] + v) and length < horizon:
            queue.append((length, u, v))

    def drain():
        while queue:
            length, u, v = queue.popleft()
            longer = length + 1
            base = offsets[longer]
            for a in range(k):
                pu, pv = a + k * u, a + k * v
                if uf.union(base + pu, base + pv) and longer < horizon:
                    queue.append((longer, pu, pv))
                shift = a * powers[length]
                su, sv = u + shift, v + shift
                if uf.union(base + su, base + sv) and longer < horizon:
                    queue.append((longer, su, sv))

    def cancellation_sweep() -> bool:
        changed = False
        for length in range(2, horizon + 1):
            base = offsets[length]
            shorter = length - 1
            short_base = offsets[shorter]
            head_power = powers[shorter]
            by_first: dict[tuple[int, int], int] = {}
            by_last: dict[tuple[int, int], int] = {}
            for value in range(powers[length]):
                root = uf.find(base + value)
                first = value % k
                suffix = value // k
                key = (root, first)
                stored = by_first.get(key)
                if stored is None:
                    by_first[key] = suffix
                elif uf.union(short_base + stored, short_base + suffix):
                    changed = True
                    if shorter < horizon:
                        queue.append((shorter, stored, suffix))
                last = value // head_power
                prefix = value % head_power
                key = (root, last)
                stored = by_last.get(key)
                if stored is None:
                    by_last[key] = prefix
                elif uf.union(short_base + stored, short_base + prefix):
                    changed = True
                    if shorter < horizon:
                        queue.append((shorter, stored, prefix))
        return changed

    while True:
        drain()
        if not cancellation_sweep():
            break

    counts = []
    for length in range(1, max_len + 1):
        base = offsets[length]
        roots = {uf.find(base + value) for value in range(powers[length])}
        counts.append(len(roots))

    return CongruencePartition(
        alphabet_size=k,
        max_len=max_len,
        horizon=horizon,
        degree_counts=tuple(counts),
        _uf=uf,
        _offsets=tuple(offsets),
        _powers=tuple(powers),
    )


# -- checking a letter map against a target semigroup ------------------------


def verify_homomorphism(pres: Presentation, phi, sg: AltSumSemigroup) -> bool:
    """Whether the letter map respects every defining relation.

    phi assigns each letter a generator of the target semigroup; the map
    extends to words letterwise and must send both sides of each relation
    to the same element.
    """
    phi = tuple(phi)
    if len(phi) != pres.alphabet_size:
        raise ParameterError(
            f"letter map has {len(phi)} entries for an alphabet of size "
            f"{pres.alphabet_size}"
        )
    for image in phi:
        if image not in sg.generators:
            raise ParameterError(f"letter image {image} is not a generator of {sg}")
    for lhs, rhs in pres.relations:
        left = sg.class_of(tuple(phi[x] for x in lhs))
        right = sg.class_of(tuple(phi[x] for x in rhs))
        if left != right:
            return False
    return True


@dataclass(frozen=True)
class DegreeVerdict:
    degree: int
    class_count: int
    element_count: int
    aligned: bool
    verdict: str  # "verified" or "unresolved"

    def to_json_dict(self) -> dict:
        return {
            "degree": self.degree,
            "classes": self.class_count,
            "elements": self.element_count,
            "aligned": self.aligned,
            "verdict": self.verdict,
        }


@dataclass(frozen=True)
class VerificationReport:
    description: str
    semigroup: str
    alphabet_size: int
    max_len: int
    pad: int
    phi: tuple[int, ...] | None
    homomorphism: bool
    degrees: tuple[DegreeVerdict, ...]
    warnings: tuple[str, ...] = ()

    @property
    def all_verified(self) -> bool:
        return self.homomorphism and bool(self.degrees) and all(
            d.verdict == "verified" for d in self.degrees
        )

    def to_json_dict(self) -> dict:
        return {
            "description": self.description,
            "semigroup": self.semigroup,
            "alphabet": self.alphabet_size,
            "max_len": self.max_len,
            "pad": self.pad,
            "phi": list(self.phi) if self.phi is not None else None,
            "homomorphism": self.homomorphism,
            "degrees": [d.to_json_dict() for d in self.degrees],
            "warnings": list(self.warnings),
            "all_verified": self.all_verified,
        }


def verify_isomorphism(
    pres: Presentation,
    phi,
    sg: AltSumSemigroup,
    max_len: int,
    pad: int = 2,
    budget: int = DEFAULT_WORD_BUDGET,
    description: str = "",
    warnings: tuple[str, ...] = (),
) -> VerificationReport:
    """Squeeze the presentation against the target semigroup degree by degree.

    The bounded closure gives class counts from above; the target's element
    counts bound from below once the letter map is a homomorphism.  A degree
    comes out "verified" when the counts agree and the classes sit in
    bijection with the elements, "unresolved" when the closure has not
    merged enough within its horizon to settle the question.
    """
    phi = tuple(phi)
    warnings = tuple(warnings)
    hom = verify_homomorphism(pres, phi, sg)
    if not hom:
        warnings += ("the letter map does not respect the relations",)
    partition = enumerate_classes(pres, max_len, pad=pad, budget=budget)
    onto = set(phi) == set(sg.generators)
    if hom and not onto:
        warnings += (
            "the letter map does not cover all generators; element counts "
            "are not lower bounds and degrees stay unresolved",
        )

    verdicts = []
    for degree in range(1, max_len + 1):
        class_count = partition.degree_counts[degree - 1]
        element_count = sg.count_elements(degree)
        aligned = False
        if hom:
            images: dict[ASElement, int] = {}
            for words in partition.classes_at_degree(degree):
                targets = {sg.class_of(tuple(phi[x] for x in w)) for w in words}
                if len(targets) != 1:
                    raise InternalConsistencyError(
                        f"closure class {words[0]}... maps to {len(targets)} distinct "
                        "elements despite the letter map respecting the relations; "
                        "the closure merged a pair it should not have"
                    )
                image = targets.pop()
                images[image] = images.get(image, 0) + 1
            collision = any(n > 1 for n in images.values())
            if onto and class_count < element_count:
                raise InternalConsistencyError(
                    f"degree {degree}: {class_count} classes but {element_count} "
                    "elements; the closure undercounts a quotient it must refine"
                )
            aligned = not collision
        if hom and onto and aligned and class_count == element_count:
            verdicts.append(
                DegreeVerdict(degree, class_count, element_count, True, "verified")
            )
        else:
            verdicts.append(
                DegreeVerdict(degree, class_count, element_count, aligned, "unresolved")
            )

    return VerificationReport(
        description=description,
        semigroup=repr(sg),
        alphabet_size=pres.alphabet_size,
        max_len=max_len,
        pad=pad,
        phi=phi,
        homomorphism=hom,
        degrees=tuple(verdicts),
        warnings=warnings,
    )


# -- theorem checks for the built-in families --------------------------------


def verify_trivial(max_len: int = 4, pad: int = 2, budget: int = DEFAULT_WORD_BUDGET):
    pres = presentation_from_diagram(build_trivial())
    sg = AltSumSemigroup(Zmod(1), (0,))
    return verify_isomorphism(
        pres, (0,), sg, max_len, pad=pad, budget=budget, description="trivial"
    )


def verify_torus(n: int, max_len: int = 4, pad: int = 2, budget: int = DEFAULT_WORD_BUDGET):
    """Closed 2-strand braid against the alternating sums on all of Z_n.

    Odd n gives a knot and the plain semigroup; even n gives a two-component
    link and the strong (even-letter-count) refinement.
    """
    pres = presentation_from_diagram(build_torus2(n))
    sg = AltSumSemigroup(Zmod(n), tuple(range(n)), strong=(n % 2 == 0))
    phi = tuple(range(n))
    return verify_isomorphism(
        pres, phi, sg, max_len, pad=pad, budget=budget, description=f"torus2:{n}"
    )


def verify_dtw(
    n: int, l: int, max_len: int = 3, pad: int = 2, budget: int = DEFAULT_WORD_BUDGET
):
    """Double twist diagram against alternating sums on its subscript set."""
    pres = presentation_from_diagram(build_double_twist(n, l))
    alphabet = dtw_alphabet(n, l)
    sg = alphabet.semigroup()
    modulus = alphabet.modulus
    phi = tuple(v % modulus for v in double_twist_arc_values(n, l))
    warnings = ()
    if (n * l) % 2 == 1:
        warnings = (
            f"twist product {n}*{l} is odd; the isomorphism is only asserted "
            "for even products",
        )
    return verify_isomorphism(
        pres,
        phi,
        sg,
        max_len,
        pad=pad,
        budget=budget,
        description=f"dtw:{n},{l}",
        warnings=warnings,
    )


def verify_twist(n: int, max_len: int = 3, pad: int = 2, budget: int = DEFAULT_WORD_BUDGET):
    report = verify_dtw(n, 2, max_len, pad=pad, budget=budget)
    return replace(report, description=f"twist:{n}")


# -- probing the three-parameter conjecture -----------------------------------


def _propagate_labels(
    crossings, arc_count: int, anchors: dict[int, int], modulus: int
) -> dict[int, int] | None:
    """Solve phi[x] + phi[z] = 2 phi[y] per crossing from anchor values.

    Returns the full labeling, or None if the constraints are inconsistent
    or leave an arc undetermined.
    """
    half = pow(2, -1, modulus) if modulus % 2 == 1 else None
    phi: dict[int, int] = dict(anchors)
    progress = True
    while progress:
        progress = False
        for c in crossings:
            x, z = c.under
            y = c.over
            if x == z:
                if y in phi and x not in phi and half is not None:
                    phi[x] = phi[y]
                    progress = True
                elif x in phi and y not in phi and half is not None:
                    phi[y] = phi[x]
                    progress = True
                continue
            if x in phi and y in phi and z not in phi:
                phi[z] = (2 * phi[y] - phi[x]) % modulus
                progress = True
            elif z in phi and y in phi and x not in phi:
                phi[x] = (2 * phi[y] - phi[z]) % modulus
                progress = True
            elif x in phi and z in phi and y not in phi and half is not None:
                phi[y] = (phi[x] + phi[z]) * half % modulus
                progress = True
    if len(phi) < arc_count:
        return None
    for c in crossings:
        x, z = c.under
        y = c.over
        if (phi[x] + phi[z]) % modulus != (2 * phi[y]) % modulus:
            return None
    return phi


def conjecture_probe(
    m: int,
    l: int,
    n: int,
    max_len: int = 3,
    pad: int = 2,
    budget: int = DEFAULT_WORD_BUDGET,
    search_anchors: bool = True,
) -> VerificationReport:
    """Test the three-twist-region diagram against its conjectured semigroup.

    The diagram for twist counts (m, l, n) is compared with alternating sums
    on the conjectured generator set inside Z over (ml+1)n+m.  Arc labels are
    found by propagating the per-crossing constraint phi[x] + phi[z] =
    2 phi[y] from an anchor pair on the last twist region; if the natural
    anchors (0, 1) fail to produce generator values, every anchor pair from
    the generator set is tried.
    """
    diagram, traces = conway_with_traces((m, l, n))
    alphabet = conjecture_alphabet(m, l, n)
    sg = alphabet.semigroup()
    modulus = alphabet.modulus
    generators = set(alphabet.elements)
    pres = presentation_from_diagram(diagram)

    warnings = []
    if not alphabet.modulus_is_odd:
        warnings.append(
            f"modulus {modulus} is even; the conjecture is stated for odd moduli"
        )
    if len(alphabet.elements) != diagram.arc_count:
        warnings.append(
            f"generator set has {len(alphabet.elements)} values but the diagram "
            f"has {diagram.arc_count} arcs; no letter bijection can exist"
        )

    last = traces[-1]
    anchor_arcs = (last[0], last[1])
    candidates = [(0 % modulus, 1 % modulus)]
    if search_anchors:
        candidates += [
            (b0, b1)
            for b0 in alphabet.elements
            for b1 in alphabet.elements
            if (b0, b1) != candidates[0]
        ]

    phi_map = None
    used = None
    for b0, b1 in candidates:
        if anchor_arcs[0] == anchor_arcs[1] and b0 != b1:
            continue
        anchors = {anchor_arcs[0]: b0, anchor_arcs[1]: b1}
        solved = _propagate_labels(diagram.crossings, diagram.arc_count, anchors, modulus)
        if solved is None:
            continue
        if all(v in generators for v in solved.values()):
            phi_map = solved
            used = (b0, b1)
            break
    if phi_map is None:
        warnings.append(
            "no arc labeling satisfies the crossing constraints with values in "
            "the generator set"
        )
        partition = enumerate_classes(pres, max_len, pad=pad, budget=budget)
        verdicts = tuple(
            DegreeVerdict(
                d,
                partition.degree_counts[d - 1],
                sg.count_elements(d),
                False,
                "unresolved",
            )
            for d in range(1, max_len + 1)
        )
        return VerificationReport(
            description=f"cmln:{m},{l},{n}",
            semigroup=repr(sg),
            alphabet_size=pres.alphabet_size,
            max_len=max_len,
            pad=pad,
            phi=None,
            homomorphism=False,
            degrees=verdicts,
            warnings=tuple(warnings),
        )

    if used != (0 % modulus, 1 % modulus):
        warnings.append(f"natural anchors failed; using anchor pair {used}")
    phi = tuple(phi_map[a] for a in range(diagram.arc_count))
    return verify_isomorphism(
        pres,
        phi,
        sg,
        max_len,
        pad=pad,
        budget=budget,
        description=f"cmln:{m},{l},{n}",
        warnings=tuple(warnings),
    )
