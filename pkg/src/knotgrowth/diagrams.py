"""Knot and link diagrams as combinatorial data.

A diagram is a set of arcs (numbered 0..k-1) together with crossings; a
crossing records which arc passes over and the unordered pair of arcs that
meet it from below.  This is exactly the data needed to read off semigroup
relations, so no planar embedding is stored and none is checked.

Families
--------

* trivial: one arc, no crossings.
* torus2(n): the closed 2-strand braid with n crossings; arc i passes over
  the pair (i-1, i+1) mod n.  torus2(2) is the Hopf link.
* double_twist(n, l): n clockwise half-twists in one group and l
  anticlockwise in the other.  Arcs carry labels a_i with subscripts in
  {0..n} + {jn+1 : 1 <= j < l}, read mod ln+1; crossing subscripts follow
  the two twist groups.
* twist(n): double_twist(n, 2).
* conway(a1..ak): the two-bridge diagram in plat form.  Twist regions are
  laid left to right on four strand positions, alternating between the two
  inner pairs, with the strand shared by both pairs always passing under
  first; the closing caps on the right depend on the parity of k.  This
  normalization makes conway([n]) literally torus2(n) and conway([l, n])
  the double twist diagram with (n, l) twists, up to arc relabeling.
* conway_mln(m, l, n): conway([m, l, n]).
* custom diagrams can be loaded from a small JSON format.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from pathlib import Path
from string import ascii_lowercase

from .errors import MoveError, ParameterError


@dataclass(frozen=True)
class Crossing:
    """One crossing: the over arc and the unordered under pair."""

    over: int
    under: tuple[int, int]

    def __post_init__(self):
        a, b = self.under
        if a > b:
            object.__setattr__(self, "under", (b, a))

    def arcs(self) -> tuple[int, int, int]:
        return (self.over,) + self.under


def crossing(over: int, under_a: int, under_b: int) -> Crossing:
    return Crossing(over, (under_a, under_b))


@dataclass(frozen=True, eq=False)
class Diagram:
    arc_count: int
    crossings: tuple[Crossing, ...]
    provenance: str = "custom"
    arc_names: tuple[str, ...] | None = None

    def __post_init__(self):
        if self.arc_count < 1:
            raise ParameterError(f"a diagram needs at least one arc, got {self.arc_count}")
        for c in self.crossings:
            for a in c.arcs():
                if not 0 <= a < self.arc_count:
                    raise ParameterError(
                        f"crossing {c} references arc {a}, out of range for "
                        f"{self.arc_count} arcs"
                    )
        if self.arc_names is not None and len(self.arc_names) != self.arc_count:
            raise ParameterError("arc_names length does not match arc_count")

    # Equality is structural: same arc count and the same multiset of
    # crossings.  Crossing order only matters for addressing move sites.
    def __eq__(self, other):
        if not isinstance(other, Diagram):
            return NotImplemented
        return self.arc_count == other.arc_count and sorted(
            (c.over, c.under) for c in self.crossings
        ) == sorted((c.over, c.under) for c in other.crossings)

    def __hash__(self):
        return hash((self.arc_count, tuple(sorted((c.over, c.under) for c in self.crossings))))

    def under_degree(self, arc: int) -> int:
        """How many under-endpoints the arc has across all crossings."""
        return sum(1 for c in self.crossings for u in c.under if u == arc)

    def has_even_under_parity(self) -> bool:
        """Every arc should terminate at under-crossings in pairs.

        Built families always satisfy this.  The one modeled exception is a
        kink inserted on a closed arc, where the split into two arcs is a
        formal device.
        """
        return all(self.under_degree(a) % 2 == 0 for a in range(self.arc_count))

    def arc_endpoints(self, arc: int) -> list[tuple[int, int]]:
        """Under-endpoints of an arc as (crossing index, slot) pairs."""
        out = []
        for ci, c in enumerate(self.crossings):
            for slot in (0, 1):
                if c.under[slot] == arc:
                    out.append((ci, slot))
        return out

    def name_of(self, arc: int) -> str:
        if self.arc_names is not None:
            return self.arc_names[arc]
        return _default_names(self.arc_count)[arc]


def _default_names(k: int) -> tuple[str, ...]:
    if k <= len(ascii_lowercase):
        return tuple(ascii_lowercase[:k])
    return tuple(f"x{i}" for i in range(k))


# -- family builders --------------------------------------------------------


def build_trivial() -> Diagram:
    return Diagram(1, (), provenance="trivial", arc_names=("a",))


def build_torus2(n: int) -> Diagram:
    if n < 1:
        raise ParameterError(f"torus2 needs n >= 1, got {n}")
    crossings = tuple(crossing((i + 1) % n, i, (i + 2) % n) for i in range(n))
    return Diagram(n, crossings, provenance=f"torus2:{n}", arc_names=_default_names(n))


def build_hopf() -> Diagram:
    d = build_torus2(2)
    return Diagram(d.arc_count, d.crossings, provenance="hopf", arc_names=("a", "b"))


def double_twist_arc_values(n: int, l: int) -> tuple[int, ...]:
    """Subscript labels of the double twist arcs, in arc-index order.

    Arc i <= n carries subscript i; arc n+j carries subscript jn+1 for
    1 <= j < l.  These values, read mod ln+1, are the letter images under
    the natural map into the alternating-sum semigroup.
    """
    if n < 1 or l < 1:
        raise ParameterError(f"twist counts must be positive, got ({n}, {l})")
    return tuple(range(n + 1)) + tuple(j * n + 1 for j in range(1, l))


def build_double_twist(n: int, l: int) -> Diagram:
    values = double_twist_arc_values(n, l)
    modulus = l * n + 1
    index = {v: i for i, v in enumerate(values)}

    def arc(subscript: int) -> int:
        return index[subscript % modulus]

    crossings = []
    for i in range(1, n + 1):
        crossings.append(crossing(arc(i), arc(i - 1), arc(i + 1)))
    for j in range(l):
        crossings.append(
            crossing(
                arc((l - j) * n + 1),
                arc((l - j - 1) * n + 1),
                arc((l - j + 1) * n + 1),
            )
        )
    names = tuple(f"a{v}" for v in values)
    return Diagram(n + l, tuple(crossings), provenance=f"dtw:{n},{l}", arc_names=names)


def build_twist(n: int) -> Diagram:
    d = build_double_twist(n, 2)
    return Diagram(d.arc_count, d.crossings, provenance=f"twist:{n}", arc_names=d.arc_names)


def conway_with_traces(twists: tuple[int, ...]) -> tuple[Diagram, list[list[int]]]:
    """Plat-form two-bridge builder; also returns each region's arc sequence.

    Four strand positions.  The left caps join positions (0,1) and (2,3).
    Odd-numbered regions twist positions (1,2), even-numbered (2,3); the
    shared position 2 passes under first in every region, which keeps the
    whole diagram alternating.  A region consuming arcs (p: x, q: y) with c
    crossings produces the arc sequence m with m[-1] = y, m[0] = x and
    crossing i reading (over m[i-1], under {m[i-2], m[i]}); it exits with
    m[c] at p and m[c-1] at q.  The right caps join (0,1),(2,3) for an odd
    region count and (1,2),(0,3) for an even one.
    """
    if len(twists) == 0:
        raise ParameterError("conway twist list must be nonempty")
    for a in twists:
        if a < 1:
            raise ParameterError(f"conway twist counts must be positive, got {a}")

    pos = [0, 0, 1, 1]
    next_id = 2
    raw_crossings: list[tuple[int, int, int]] = []
    traces: list[list[int]] = []
    for r, count in enumerate(twists, start=1):
        p = 1 if r % 2 == 1 else 3
        q = 2
        seq = [pos[q], pos[p]]
        for _ in range(count):
            new = next_id
            next_id += 1
            raw_crossings.append((seq[-1], seq[-2], new))
            seq.append(new)
        pos[p] = seq[-1]
        pos[q] = seq[-2]
        traces.append(seq)

    if len(twists) % 2 == 1:
        unions = [(pos[0], pos[1]), (pos[2], pos[3])]
    else:
        unions = [(pos[1], pos[2]), (pos[0], pos[3])]

    parent = list(range(next_id))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for a, b in unions:
        ra, rb = find(a), find(b)
        if ra != rb:
            parent[max(ra, rb)] = min(ra, rb)

    roots = sorted({find(x) for x in range(next_id)})
    relabel = {}
    for new_id, root in enumerate(roots):
        relabel[root] = new_id
    label = [relabel[find(x)] for x in range(next_id)]

    crossings = tuple(crossing(label[o], label[u1], label[u2]) for o, u1, u2 in raw_crossings)
    traces = [[label[x] for x in seq] for seq in traces]
    name = ",".join(map(str, twists))
    diagram = Diagram(
        len(roots),
        crossings,
        provenance=f"conway:{name}",
        arc_names=_default_names(len(roots)),
    )
    return diagram, traces


def build_conway(twists) -> Diagram:
    diagram, _ = conway_with_traces(tuple(twists))
    return diagram


def build_conway_mln(m: int, l: int, n: int) -> Diagram:
    d = build_conway((m, l, n))
    return Diagram(d.arc_count, d.crossings, provenance=f"cmln:{m},{l},{n}", arc_names=d.arc_names)


# -- family specs and dispatch ----------------------------------------------


@dataclass(frozen=True)
class FamilySpec:
    kind: str
    params: tuple[int, ...] = ()

    KINDS = ("trivial", "hopf", "torus2", "twist", "dtw", "conway", "cmln", "pd")

    def __post_init__(self):
        if self.kind not in self.KINDS:
            raise ParameterError(f"unknown family kind {self.kind!r}")


def parse_family_spec(text: str) -> FamilySpec:
    """Parse 'trivial', 'hopf', 'torus2:5', 'dtw:2,2', 'conway:2,1', ..."""
    head, _, tail = text.partition(":")
    head = head.strip()
    if head in ("trivial", "hopf"):
        if tail:
            raise ParameterError(f"family {head!r} takes no parameters")
        return FamilySpec(head)
    if head not in ("torus2", "twist", "dtw", "conway", "cmln"):
        raise ParameterError(f"unknown family {head!r}")
    if not tail:
        raise ParameterError(f"family {head!r} needs parameters, e.g. {head}:2")
    try:
        params = tuple(int(x) for x in tail.split(","))
    except ValueError:
        raise ParameterError(f"bad parameter list {tail!r} for family {head!r}") from None
    arity = {"torus2": 1, "twist": 1, "dtw": 2, "cmln": 3}
    if head in arity and len(params) != arity[head]:
        raise ParameterError(f"family {head!r} takes {arity[head]} parameter(s), got {len(params)}")
    return FamilySpec(head, params)


def build_family(spec: FamilySpec) -> Diagram:
    if spec.kind == "trivial":
        return build_trivial()
    if spec.kind == "hopf":
        return build_hopf()
    if spec.kind == "torus2":
        return build_torus2(*spec.params)
    if spec.kind == "twist":
        return build_twist(*spec.params)
    if spec.kind == "dtw":
        return build_double_twist(*spec.params)
    if spec.kind == "conway":
        return build_conway(spec.params)
    if spec.kind == "cmln":
        return build_conway_mln(*spec.params)
    raise ParameterError(f"cannot build family kind {spec.kind!r} directly")


# -- custom diagrams ---------------------------------------------------------


def diagram_from_dict(data: dict) -> Diagram:
    """Read {"arcs": k, "crossings": [{"over": i, "under": [j1, j2]}, ...]}."""
    try:
        arcs = int(data["arcs"])
        raw = data["crossings"]
    except (KeyError, TypeError, ValueError) as exc:
        raise ParameterError(f"malformed diagram data: {exc}") from None
    crossings = []
    for entry in raw:
        try:
            over = int(entry["over"])
            u1, u2 = (int(x) for x in entry["under"])
        except (KeyError, TypeError, ValueError) as exc:
            raise ParameterError(f"malformed crossing entry {entry!r}: {exc}") from None
        crossings.append(crossing(over, u1, u2))
    return Diagram(arcs, tuple(crossings), provenance="pd")


def diagram_to_dict(d: Diagram) -> dict:
    return {
        "arcs": d.arc_count,
        "crossings": [{"over": c.over, "under": list(c.under)} for c in d.crossings],
    }


def load_pd(path) -> Diagram:
    with open(Path(path)) as fh:
        return diagram_from_dict(json.load(fh))


# -- Reidemeister moves -------------------------------------------------------


@dataclass(frozen=True)
class ReidemeisterMove:
    """A local diagram rewrite.

    kind/direction select the rewrite; the remaining fields address it:

    * r1 insert: ``arc`` and ``end`` (which of the arc's under-endpoints,
      in crossing order, the kink sits before; 0 for a closed arc).
    * r2 insert: ``arc`` (pushed-under arc), ``over_arc``, ``end``.
    * r1 remove: ``crossings`` = (kink crossing index,).
    * r2 remove: ``crossings`` = the two crossing indices of the bigon.
    * r3: ``crossings`` = the three crossing indices of the triangle.
    """

    kind: str
    direction: str = "insert"
    arc: int | None = None
    end: int = 0
    over_arc: int | None = None
    crossings: tuple[int, ...] = ()

    def __post_init__(self):
        if self.kind not in ("r1", "r2", "r3"):
            raise ParameterError(f"unknown move kind {self.kind!r}")
        if self.direction not in ("insert", "remove"):
            raise ParameterError(f"unknown move direction {self.direction!r}")
        if self.kind == "r3" and self.direction != "insert":
            raise ParameterError("the triangle move has no separate remove direction")


def r1_insert(arc: int, end: int = 0) -> ReidemeisterMove:
    return ReidemeisterMove("r1", "insert", arc=arc, end=end)


def r2_insert(arc: int, over_arc: int, end: int = 0) -> ReidemeisterMove:
    return ReidemeisterMove("r2", "insert", arc=arc, end=end, over_arc=over_arc)


def r1_remove(crossing_index: int) -> ReidemeisterMove:
    return ReidemeisterMove("r1", "remove", crossings=(crossing_index,))


def r2_remove(c1: int, c2: int) -> ReidemeisterMove:
    return ReidemeisterMove("r2", "remove", crossings=(c1, c2))


def r3_move(c1: int, c2: int, c3: int) -> ReidemeisterMove:
    return ReidemeisterMove("r3", "insert", crossings=(c1, c2, c3))


def _extended_names(d: Diagram, extra: int) -> tuple[str, ...]:
    base = d.arc_names if d.arc_names is not None else _default_names(d.arc_count)
    return tuple(base) + tuple(f"n{d.arc_count + i}" for i in range(extra))


def _require_arc(d: Diagram, arc: int | None, role: str) -> int:
    if arc is None or not 0 <= arc < d.arc_count:
        raise MoveError(f"{role} arc {arc} is not an arc of the diagram")
    return arc


def _split_site(d: Diagram, arc: int, end: int) -> tuple[int, int] | None:
    """The (crossing, slot) whose under-reference moves past the insertion,
    or None for an arc with no under-endpoints."""
    ends = d.arc_endpoints(arc)
    if not ends:
        if end != 0:
            raise MoveError(f"arc {arc} has no under-endpoints; end must be 0")
        return None
    if not 0 <= end < len(ends):
        raise MoveError(f"arc {arc} has {len(ends)} under-endpoints; end {end} out of range")
    return ends[end]


def _replace_under(c: Crossing, slot_arc_old: int, new: int, slot: int) -> Crossing:
    under = list(c.under)
    assert under[slot] == slot_arc_old
    under[slot] = new
    return Crossing(c.over, (under[0], under[1]))


def _merge_arcs(d: Diagram, groups: list[set[int]], drop_crossings: set[int]) -> Diagram:
    """Quotient arcs by the given groups, drop crossings, relabel densely."""
    target = list(range(d.arc_count))
    for group in groups:
        keep = min(group)
        for a in group:
            target[a] = keep
    kept_arcs = sorted({target[a] for a in range(d.arc_count)})
    dense = {a: i for i, a in enumerate(kept_arcs)}
    label = [dense[target[a]] for a in range(d.arc_count)]
    crossings = tuple(
        crossing(label[c.over], label[c.under[0]], label[c.under[1]])
        for ci, c in enumerate(d.crossings)
        if ci not in drop_crossings
    )
    names = None
    if d.arc_names is not None:
        names = tuple(d.arc_names[a] for a in kept_arcs)
    return Diagram(len(kept_arcs), crossings, provenance=d.provenance, arc_names=names)


def apply_reidemeister(d: Diagram, move: ReidemeisterMove) -> Diagram:
    if move.kind == "r1" and move.direction == "insert":
        arc = _require_arc(d, move.arc, "kink")
        site = _split_site(d, arc, move.end)
        p = d.arc_count
        crossings = list(d.crossings)
        if site is not None:
            ci, slot = site
            crossings[ci] = _replace_under(crossings[ci], arc, p, slot)
        crossings.append(crossing(p, arc, p))
        return Diagram(
            d.arc_count + 1,
            tuple(crossings),
            provenance=d.provenance,
            arc_names=_extended_names(d, 1),
        )

    if move.kind == "r2" and move.direction == "insert":
        arc = _require_arc(d, move.arc, "under")
        over = _require_arc(d, move.over_arc, "over")
        site = _split_site(d, arc, move.end)
        mid, p = d.arc_count, d.arc_count + 1
        crossings = list(d.crossings)
        if site is not None:
            ci, slot = site
            crossings[ci] = _replace_under(crossings[ci], arc, p, slot)
        crossings.append(crossing(over, arc, mid))
        crossings.append(crossing(over, mid, p))
        return Diagram(
            d.arc_count + 2,
            tuple(crossings),
            provenance=d.provenance,
            arc_names=_extended_names(d, 2),
        )

    if move.kind == "r1" and move.direction == "remove":
        (ci,) = _check_crossing_indices(d, move.crossings, 1)
        c = d.crossings[ci]
        if c.over not in c.under:
            raise MoveError(f"crossing {ci} is not a kink: over arc is not an under arc")
        other = c.under[0] if c.under[1] == c.over else c.under[1]
        groups = [] if other == c.over else [{other, c.over}]
        return _merge_arcs(d, groups, {ci})

    if move.kind == "r2" and move.direction == "remove":
        i, j = _check_crossing_indices(d, move.crossings, 2)
        a, b = d.crossings[i], d.crossings[j]
        if a.over != b.over:
            raise MoveError("the two crossings do not share an over arc")
        shared = set(a.under) & set(b.under)
        if len(shared) != 1:
            raise MoveError("the two under pairs must share exactly one middle arc")
        mid = shared.pop()
        for ci, c in enumerate(d.crossings):
            if ci in (i, j):
                continue
            if mid in c.arcs():
                raise MoveError(f"middle arc {mid} is used by crossing {ci}; not a free bigon")
        if a.over == mid:
            raise MoveError("middle arc may not be the over arc")
        ends = set(a.under) | set(b.under)
        return _merge_arcs(d, [ends], {i, j})

    if move.kind == "r3":
        return _apply_triangle(d, move)

    raise MoveError(f"unsupported move {move.kind}/{move.direction}")


def _check_crossing_indices(d: Diagram, idx: tuple[int, ...], want: int) -> tuple[int, ...]:
    if len(idx) != want or len(set(idx)) != want:
        raise MoveError(f"move needs {want} distinct crossing indices, got {idx}")
    for ci in idx:
        if not 0 <= ci < len(d.crossings):
            raise MoveError(f"crossing index {ci} out of range")
    return idx


def _apply_triangle(d: Diagram, move: ReidemeisterMove) -> Diagram:
    """Slide the middle strand of a triangle across the top-bottom crossing.

    The three crossings must look like, for some arcs t, m1, m2, b1, b2, b3:

        (t; m1, m2)   top over middle
        (ms; bi, bmid) middle over bottom, ms one of m1/m2
        (t; bmid, bk) top over bottom

    where the two bottom under-pairs share exactly the arc bmid.  The
    rewrite toggles the middle crossing to the other middle segment and
    swaps the two bottom under-pairs; arc count is unchanged and applying
    the move again at the same site restores the diagram.
    """
    i, j, k = _check_crossing_indices(d, move.crossings, 3)
    triple = {i: d.crossings[i], j: d.crossings[j], k: d.crossings[k]}
    matches = []
    for mb_idx in (i, j, k):
        t_idx = [x for x in (i, j, k) if x != mb_idx]
        c_mb = triple[mb_idx]
        for tm_idx, tb_idx in (t_idx, t_idx[::-1]):
            c_tm, c_tb = triple[tm_idx], triple[tb_idx]
            if c_tm.over != c_tb.over:
                continue
            t = c_tm.over
            if c_mb.over not in c_tm.under or c_mb.over == t:
                continue
            shared = set(c_mb.under) & set(c_tb.under)
            if len(shared) != 1:
                continue
            matches.append((tm_idx, mb_idx, tb_idx))
    if not matches:
        raise MoveError("the three crossings do not form a slideable triangle")
    matches.sort()
    tm_idx, mb_idx, tb_idx = matches[0]
    c_tm, c_mb, c_tb = triple[tm_idx], triple[mb_idx], triple[tb_idx]
    other_mid = c_tm.under[0] if c_tm.under[1] == c_mb.over else c_tm.under[1]
    crossings = list(d.crossings)
    crossings[mb_idx] = Crossing(other_mid, c_tb.under)
    crossings[tb_idx] = Crossing(c_tb.over, c_mb.under)
    return Diagram(d.arc_count, tuple(crossings), provenance=d.provenance, arc_names=d.arc_names)
