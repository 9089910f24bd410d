"""Growth series, skew growth, and dimension estimates.

The growth series of a graded semigroup with an identity adjoined is
P(t) = 1 + sum_d c_d t^d where c_d counts the elements of degree d.  The
skew series is its formal reciprocal, N(t) = 1/P(t).  Both are represented
here by their coefficient lists, with an exact rational form attached when
one is known or detected.

Dimension estimates follow the usual pattern for graded growth: the
cumulative dimension 1 + c_1 + ... + c_d grows like d^k exactly when P has
a pole of order k at t = 1, and the estimate falls back to finite
differences of the cumulative sequence, then to a ratio test for
exponential growth, when no exact form is available.
"""

from __future__ import annotations

import warnings as _warnings
from dataclasses import dataclass

from .altsum import AltSumSemigroup, Zmod
from .diagrams import Diagram
from .errors import InternalConsistencyError, ParameterError
from .oracle import DEFAULT_WORD_BUDGET, enumerate_classes
from .presentation import presentation_from_diagram

# -- small polynomial helpers (ascending coefficient tuples) -----------------


def _trim(p) -> tuple[int, ...]:
    p = list(p)
    while len(p) > 1 and p[-1] == 0:
        p.pop()
    return tuple(p)


def _mul(p, q) -> tuple[int, ...]:
    out = [0] * (len(p) + len(q) - 1)
    for i, a in enumerate(p):
        for j, b in enumerate(q):
            out[i + j] += a * b
    return tuple(out)


def _divide_by_one_minus_t(p) -> tuple[int, ...] | None:
    """Quotient p / (1 - t) when exact, else None.  The quotient's
    coefficients are the partial sums of p, and exactness means the full
    sum p(1) vanishes."""
    sums = []
    acc = 0
    for a in p:
        acc += a
        sums.append(acc)
    if sums[-1] != 0:
        return None
    return _trim(sums[:-1]) if len(sums) > 1 else (0,)


@dataclass(frozen=True)
class RationalForm:
    """numerator/denominator, both ascending, denominator constant term 1."""

    numerator: tuple[int, ...]
    denominator: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "numerator", _trim(self.numerator))
        object.__setattr__(self, "denominator", _trim(self.denominator))
        if self.denominator[0] != 1:
            raise ParameterError(
                f"denominator constant term must be 1, got {self.denominator[0]}"
            )

    def expand(self, terms: int) -> tuple[int, ...]:
        num, den = self.numerator, self.denominator
        out = []
        for i in range(terms):
            c = num[i] if i < len(num) else 0
            for j in range(1, min(i, len(den) - 1) + 1):
                c -= den[j] * out[i - j]
            out.append(c)
        return tuple(out)

    def to_json_dict(self) -> dict:
        return {"num": list(self.numerator), "den": list(self.denominator)}


@dataclass(frozen=True)
class GrowthSeries:
    """Coefficients of P(t), starting with the constant term 1."""

    coefficients: tuple[int, ...]
    rational: RationalForm | None = None
    source: str = "counts"
    warnings: tuple[str, ...] = ()

    def __post_init__(self):
        if not self.coefficients or self.coefficients[0] != 1:
            raise ParameterError("growth coefficients must start with the constant term 1")
        if self.rational is not None:
            expanded = self.rational.expand(len(self.coefficients))
            if expanded != tuple(self.coefficients):
                raise InternalConsistencyError(
                    "rational form does not expand to the stated coefficients"
                )

    def counts(self) -> tuple[int, ...]:
        return self.coefficients[1:]

    def to_json_dict(self) -> dict:
        return {
            "coefficients": list(self.coefficients),
            "rational": self.rational.to_json_dict() if self.rational else None,
            "source": self.source,
            "warnings": list(self.warnings),
        }


@dataclass(frozen=True)
class SkewSeries:
    """Coefficients of N(t) = 1/P(t), starting with 1."""

    coefficients: tuple[int, ...]
    rational: RationalForm | None = None
    source: str = "counts"

    def to_json_dict(self) -> dict:
        return {
            "coefficients": list(self.coefficients),
            "rational": self.rational.to_json_dict() if self.rational else None,
            "source": self.source,
        }


def growth_from_counts(counts, source: str = "counts", stable_window: int = 3) -> GrowthSeries:
    """Wrap per-degree counts; attach num/(1-t) when the tail has settled.

    The rational form asserts the counts continue at their last value, which
    is sound for the families here (their counts are eventually constant) and
    is only claimed when the last stable_window counts agree.
    """
    counts = tuple(int(c) for c in counts)
    if not counts:
        raise ParameterError("need at least one count")
    if any(c < 1 for c in counts):
        raise ParameterError("counts must be positive")
    coefficients = (1,) + counts
    rational = None
    if len(counts) >= stable_window and len(set(counts[-stable_window:])) == 1:
        q = _mul(coefficients, (1, -1))
        num = _trim(q[:-1])
        rational = RationalForm(num, (1, -1))
    return GrowthSeries(coefficients, rational=rational, source=source)


def torus_growth(n: int, terms: int = 10) -> GrowthSeries:
    """Closed form (1 + (n-1)t)/(1 - t) for the n-crossing closed 2-braid.

    Exact for odd n (the knot case, where the degree counts are constant n).
    For even n the diagram closes to a two-component link whose counts grow,
    so the closed form is only a floor; a warning marks that case.
    """
    if n < 1:
        raise ParameterError(f"torus parameter must be positive, got {n}")
    if terms < 2:
        raise ParameterError("need at least two terms")
    notes = ()
    if n % 2 == 0:
        notes = (
            f"crossing count {n} is even; the closed form is stated for odd "
            "counts and undercounts the link case",
        )
        _warnings.warn(notes[0], stacklevel=2)
    rational = RationalForm((1, n - 1), (1, -1))
    return GrowthSeries(
        rational.expand(terms), rational=rational, source=f"torus2:{n}", warnings=notes
    )


def dtw_growth(n_twists: int, l_twists: int, terms: int = 10) -> GrowthSeries:
    """Closed form for the double twist: quadratic numerator over 1 - t.

    The degree counts are n+l, then nl+1, constant from degree 2 on, giving
    (1 + (n+l-1)t + (nl-n-l+1)t^2)/(1-t).  Stated for even twist products;
    odd products get a warning.
    """
    n, l = n_twists, l_twists
    if n < 1 or l < 1:
        raise ParameterError(f"twist counts must be positive, got ({n}, {l})")
    if terms < 3:
        raise ParameterError("need at least three terms")
    notes = ()
    if (n * l) % 2 == 1:
        notes = (
            f"twist product {n}*{l} is odd; the closed form is stated for even "
            "products",
        )
        _warnings.warn(notes[0], stacklevel=2)
    rational = RationalForm((1, n + l - 1, n * l - n - l + 1), (1, -1))
    return GrowthSeries(
        rational.expand(terms), rational=rational, source=f"dtw:{n},{l}", warnings=notes
    )


def semigroup_growth(sg: AltSumSemigroup, terms: int = 10, source: str | None = None) -> GrowthSeries:
    counts = tuple(sg.count_elements(t) for t in range(1, terms))
    return growth_from_counts(counts, source=source if source is not None else repr(sg))


def skew_growth(growth: GrowthSeries, terms: int | None = None) -> SkewSeries:
    """Formal reciprocal of the growth series, n_0 = 1 and
    n_k = -(p_1 n_{k-1} + ... + p_k n_0)."""
    if terms is None:
        terms = len(growth.coefficients)
    if growth.rational is not None:
        p = growth.rational.expand(terms)
        rational = RationalForm(growth.rational.denominator, growth.rational.numerator)
    else:
        if terms > len(growth.coefficients):
            raise ParameterError(
                f"only {len(growth.coefficients)} growth coefficients known; "
                f"cannot expand the reciprocal to {terms} terms"
            )
        p = growth.coefficients[:terms]
        rational = None
    out = [1]
    for k in range(1, terms):
        acc = 0
        for i in range(1, k + 1):
            if i < len(p):
                acc += p[i] * out[k - i]
        out.append(-acc)
    return SkewSeries(tuple(out), rational=rational, source=growth.source)


def cumulative_dimension(counts, degree: int) -> int:
    """1 + c_1 + ... + c_degree: elements of degree at most `degree`, plus
    the adjoined identity."""
    counts = tuple(counts)
    if degree < 0 or degree > len(counts):
        raise ParameterError(f"degree {degree} outside the known range 0..{len(counts)}")
    return 1 + sum(counts[:degree])


# -- dimension estimation -----------------------------------------------------


@dataclass(frozen=True)
class GkEstimate:
    value: int | None
    infinite: bool
    method: str  # "rational", "difference", "ratio", "unresolved"
    evidence: dict

    def label(self) -> str:
        if self.infinite:
            return "infinity"
        if self.value is None:
            return "unresolved"
        return str(self.value)

    def to_json_dict(self) -> dict:
        return {"gk": self.label(), "method": self.method, "evidence": self.evidence}


def _pole_order_at_one(rational: RationalForm) -> int | None:
    """Order of the pole of num/den at t = 1 when den is a pure power of
    (1 - t); None when it is not."""
    num, den = rational.numerator, rational.denominator
    while True:
        n2 = _divide_by_one_minus_t(num)
        d2 = _divide_by_one_minus_t(den)
        if n2 is None or d2 is None:
            break
        num, den = n2, d2
    order = 0
    while den != (1,):
        d2 = _divide_by_one_minus_t(den)
        if d2 is None:
            return None
        den = d2
        order += 1
    if sum(num) == 0:
        return None
    return order


def _differences(values):
    return tuple(b - a for a, b in zip(values, values[1:]))


def gk_dimension(
    source,
    method: str | None = None,
    ratio_delta: float = 0.2,
    diff_window: int = 3,
    ratio_window: int = 4,
) -> GkEstimate:
    """Estimate the growth rate exponent of the cumulative dimension.

    source is a GrowthSeries or a plain sequence of per-degree counts.  With
    an exact rational form the answer is the pole order of P(t) at t = 1.
    Otherwise the finite differences of the cumulative dimensions are
    scanned for the first order whose tail vanishes (polynomial growth of
    one degree less), and failing that a ratio test on the tail decides
    exponential growth.
    """
    if isinstance(source, GrowthSeries):
        series = source
        counts = series.counts()
    else:
        counts = tuple(int(c) for c in source)
        series = None
    if method not in (None, "rational", "difference", "ratio"):
        raise ParameterError(f"unknown method {method!r}")

    if method in (None, "rational") and series is not None and series.rational is not None:
        order = _pole_order_at_one(series.rational)
        if order is not None:
            return GkEstimate(
                value=order,
                infinite=False,
                method="rational",
                evidence={"pole_order": order, "rational": series.rational.to_json_dict()},
            )
        if method == "rational":
            return GkEstimate(
                value=None,
                infinite=False,
                method="unresolved",
                evidence={"reason": "denominator is not a power of 1-t"},
            )
    if method == "rational":
        raise ParameterError("no rational form available for the rational method")

    cumulative = [cumulative_dimension(counts, d) for d in range(len(counts) + 1)]

    if method in (None, "difference"):
        level = tuple(cumulative)
        for order in range(1, len(cumulative)):
            level = _differences(level)
            if len(level) < diff_window:
                break
            if all(v == 0 for v in level[-diff_window:]):
                return GkEstimate(
                    value=order - 1,
                    infinite=False,
                    method="difference",
                    evidence={
                        "difference_order": order,
                        "cumulative": cumulative,
                    },
                )
        if method == "difference":
            return GkEstimate(
                value=None,
                infinite=False,
                method="unresolved",
                evidence={"reason": "no vanishing difference order", "cumulative": cumulative},
            )

    ratios = [
        b / a for a, b in zip(cumulative, cumulative[1:]) if a > 0
    ][-ratio_window:]
    if len(ratios) >= ratio_window and all(r >= 1 + ratio_delta for r in ratios):
        return GkEstimate(
            value=None,
            infinite=True,
            method="ratio",
            evidence={"ratios": [round(r, 4) for r in ratios], "threshold": 1 + ratio_delta},
        )
    return GkEstimate(
        value=None,
        infinite=False,
        method="unresolved",
        evidence={"cumulative": cumulative},
    )


# -- dimension comparison across a diagram rewrite ----------------------------


@dataclass(frozen=True)
class DimensionComparison:
    degree: int
    left_count: int
    right_count: int
    left_cumulative: int
    right_cumulative: int

    @property
    def equal(self) -> bool:
        return self.left_cumulative == self.right_cumulative

    def to_json_dict(self) -> dict:
        return {
            "degree": self.degree,
            "left": {"count": self.left_count, "cumulative": self.left_cumulative},
            "right": {"count": self.right_count, "cumulative": self.right_cumulative},
            "equal": self.equal,
        }


@dataclass(frozen=True)
class RmoveReport:
    description: str
    max_len: int
    pad: int
    degrees: tuple[DimensionComparison, ...]

    @property
    def all_equal(self) -> bool:
        return all(d.equal for d in self.degrees)

    def to_json_dict(self) -> dict:
        return {
            "description": self.description,
            "max_len": self.max_len,
            "pad": self.pad,
            "degrees": [d.to_json_dict() for d in self.degrees],
            "all_equal": self.all_equal,
        }


def reidemeister_dimension_check(
    left: Diagram,
    right: Diagram,
    max_len: int,
    pad: int = 2,
    budget: int = DEFAULT_WORD_BUDGET,
    description: str = "",
) -> RmoveReport:
    """Compare cumulative class counts of two diagrams degree by degree.

    A diagram rewrite that preserves the knot must preserve the semigroup,
    and with it every cumulative dimension; the bounded closure computes
    upper bounds that in practice settle at these small degrees.
    """
    lp = enumerate_classes(presentation_from_diagram(left), max_len, pad=pad, budget=budget)
    rp = enumerate_classes(presentation_from_diagram(right), max_len, pad=pad, budget=budget)
    rows = []
    for degree in range(1, max_len + 1):
        rows.append(
            DimensionComparison(
                degree=degree,
                left_count=lp.degree_counts[degree - 1],
                right_count=rp.degree_counts[degree - 1],
                left_cumulative=cumulative_dimension(lp.degree_counts, degree),
                right_cumulative=cumulative_dimension(rp.degree_counts, degree),
            )
        )
    return RmoveReport(
        description=description, max_len=max_len, pad=pad, degrees=tuple(rows)
    )


def growth_for_family(kind: str, params: tuple[int, ...], terms: int = 10) -> GrowthSeries:
    """Growth series for the families with known counts.

    trivial, hopf and even torus2 go through the state recurrence of their
    alternating-sum semigroups; odd torus2, twist and dtw use their closed
    forms.  Other families have no stated growth and must be measured
    through the congruence closure instead.
    """
    if kind == "trivial":
        return growth_from_counts((1,) * (terms - 1), source="trivial")
    if kind == "hopf":
        sg = AltSumSemigroup(Zmod(2), (0, 1), strong=True)
        return semigroup_growth(sg, terms=terms, source="hopf")
    if kind == "torus2":
        (n,) = params
        if n % 2 == 1:
            return torus_growth(n, terms=terms)
        sg = AltSumSemigroup(Zmod(n), tuple(range(n)), strong=True)
        return semigroup_growth(sg, terms=terms, source=f"torus2:{n}")
    if kind == "twist":
        (n,) = params
        series = dtw_growth(n, 2, terms=terms)
        return GrowthSeries(
            series.coefficients,
            rational=series.rational,
            source=f"twist:{n}",
            warnings=series.warnings,
        )
    if kind == "dtw":
        n, l = params
        return dtw_growth(n, l, terms=terms)
    raise ParameterError(
        f"no stated growth for family {kind!r}; compute counts with the "
        "congruence closure and pass them explicitly"
    )
