"""Certification of rigid-curve existence on the five Calabi-Yau families.

Two independent decision modes are run side by side:

* ``stated_conditions`` transcribes the per-family case conditions literally
  (degree bound, genus cap, forbidden pair, exceptional pair, degree slack);
* ``derived_conditions`` reconstructs the hypothesis chain through the node
  table: a K3 embedding must exist whose curve class is realizable, whose
  node count satisfies n >= g + 2, and for which non-speciality holds.

The two modes do not always agree; certificates report both verdicts and
flag disagreements instead of adjudicating them.  The rigid-curve count of
an accepted certificate is C(n - 2, g) for the chosen embedding row.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum

from .chern import degeneracy_count, rigid_count
from .k3 import (
    DegreeRangeError,
    KnutsenVerdict,
    NonspecialityRoute,
    RouteResult,
    knutsen_exists,
    nonspeciality_route,
)

ENUMERATION_GUARD = 10_000

WARN_DISAGREEMENT = "stated-derived-disagreement"
WARN_EXTRAPOLATED = "knutsen-extrapolated"
WARN_TABLE_DISCREPANCY = "node-table-discrepancy"


class CicyType(Enum):
    """The five families of Calabi-Yau complete intersection threefolds."""

    QUINTIC = (5,)
    QUARTIC_QUADRIC = (4, 2)
    BICUBIC = (3, 3)
    CUBIC_TWO_QUADRICS = (3, 2, 2)
    FOUR_QUADRICS = (2, 2, 2, 2)

    @property
    def degrees(self) -> tuple[int, ...]:
        return self.value

    def type_string(self) -> str:
        return ",".join(str(b) for b in self.degrees)

    @classmethod
    def from_string(cls, text: str) -> "CicyType":
        try:
            degrees = tuple(int(part) for part in text.split(","))
        except ValueError:
            raise ValueError(f"cannot parse multidegree {text!r}") from None
        try:
            return cls(degrees)
        except ValueError:
            raise ValueError(
                f"{text!r} is not one of the five families "
                "(5; 4,2; 3,3; 3,2,2; 2,2,2,2)"
            ) from None


@dataclass(frozen=True)
class EmbeddingRow:
    """One admissible (threefold family, K3 type) pair with its node count."""

    cicy: CicyType
    k3_degrees: tuple[int, ...]
    nodes: int

    def __post_init__(self) -> None:
        product = math.prod(self.k3_degrees)
        if product % 2 != 0 or product // 2 not in (2, 3, 4):
            raise ValueError(
                f"K3 type {self.k3_degrees} has degree {product}, "
                "expected 4, 6 or 8"
            )

    @property
    def m(self) -> int:
        return math.prod(self.k3_degrees) // 2

    def to_dict(self) -> dict:
        return {
            "cicy": list(self.cicy.degrees),
            "k3": list(self.k3_degrees),
            "n": self.nodes,
            "m": self.m,
        }


_NODE_TABLE = (
    EmbeddingRow(CicyType.QUINTIC, (4, 1), 16),
    EmbeddingRow(CicyType.QUINTIC, (3, 2), 36),
    EmbeddingRow(CicyType.QUARTIC_QUADRIC, (4, 1, 1), 4),
    EmbeddingRow(CicyType.QUARTIC_QUADRIC, (3, 2, 1), 18),
    EmbeddingRow(CicyType.QUARTIC_QUADRIC, (2, 2, 2), 32),
    EmbeddingRow(CicyType.BICUBIC, (3, 2, 1), 12),
    EmbeddingRow(CicyType.BICUBIC, (2, 2, 2), 32),
    EmbeddingRow(CicyType.CUBIC_TWO_QUADRICS, (3, 2, 1, 1), 6),
    EmbeddingRow(CicyType.CUBIC_TWO_QUADRICS, (2, 2, 2, 1), 16),
    EmbeddingRow(CicyType.FOUR_QUADRICS, (2, 2, 2, 1, 1), 8),
)


def node_table() -> list[EmbeddingRow]:
    """The known node counts for a general threefold of each family that
    contains a smooth complete intersection K3 of the given type."""
    return list(_NODE_TABLE)


@dataclass(frozen=True)
class _StatedCase:
    half_degree: int
    genus_cap: int
    forbidden: tuple[int, int]
    exceptional: tuple[int, int] | None


_STATED_CASES = {
    CicyType.QUINTIC: _StatedCase(2, 35, (5, 3), None),
    CicyType.QUARTIC_QUADRIC: _StatedCase(2, 31, (5, 3), None),
    CicyType.BICUBIC: _StatedCase(3, 31, (7, 4), (3, 1)),
    CicyType.CUBIC_TWO_QUADRICS: _StatedCase(3, 15, (7, 4), (3, 1)),
    CicyType.FOUR_QUADRICS: _StatedCase(4, 9, (9, 5), (4, 1)),
}


@dataclass(frozen=True)
class Clause:
    name: str
    holds: bool
    detail: str = ""

    def to_dict(self) -> dict:
        return {"name": self.name, "holds": self.holds, "detail": self.detail}


@dataclass(frozen=True)
class StatedVerdict:
    accept: bool
    reason: str
    clauses: tuple[Clause, ...]

    def to_dict(self) -> dict:
        return {
            "accept": self.accept,
            "reason": self.reason,
            "clauses": [c.to_dict() for c in self.clauses],
        }


def stated_conditions(cicy: CicyType, d: int, g: int) -> StatedVerdict:
    """Literal per-family case conditions, with every clause traced."""
    case = _STATED_CASES[cicy]
    m = case.half_degree

    genus_ok = g >= 0
    range_ok = d >= 2 * g - 3
    exceptional = case.exceptional is not None and (d, g) == case.exceptional
    bound_ok = 4 * m * g < d * d
    cap_ok = g < case.genus_cap
    not_forbidden = (d, g) != case.forbidden
    slack_ok = d > 2 * g - 2 or d > g + m

    clauses = [
        Clause("genus-nonnegative", genus_ok, f"g={g}"),
        Clause("degree-range", range_ok, f"d={d} >= 2g-3={2 * g - 3}"),
    ]
    if case.exceptional is not None:
        clauses.append(
            Clause("exceptional-pair", exceptional, f"(d,g)={case.exceptional}")
        )
    clauses += [
        Clause(
            "genus-degree-bound",
            bound_ok,
            f"{4 * m}*g={4 * m * g} < d^2={d * d}",
        ),
        Clause("genus-cap", cap_ok, f"g={g} < {case.genus_cap}"),
        Clause(
            "forbidden-pair-avoided",
            not_forbidden,
            f"(d,g) != {case.forbidden}",
        ),
        Clause(
            "degree-dominates",
            slack_ok,
            f"d > 2g-2={2 * g - 2} or d > g+{m}={g + m}",
        ),
    ]

    accept = genus_ok and range_ok and (
        exceptional or (bound_ok and cap_ok and not_forbidden and slack_ok)
    )
    if not genus_ok:
        reason = "genus-negative"
    elif not range_ok:
        reason = "degree-out-of-range"
    elif exceptional:
        reason = "exceptional-pair"
    elif not bound_ok:
        reason = "genus-degree-bound-failed"
    elif not cap_ok:
        reason = "genus-cap-exceeded"
    elif not not_forbidden:
        reason = "forbidden-pair"
    elif not slack_ok:
        reason = "degree-too-small"
    else:
        reason = "accepted"
    return StatedVerdict(accept, reason, tuple(clauses))


@dataclass(frozen=True)
class RowAssessment:
    """Evaluation of one embedding row against the derived hypothesis chain."""

    row: EmbeddingRow
    knutsen: KnutsenVerdict
    node_margin_ok: bool
    route: RouteResult
    viable: bool
    count: int | None
    failure: str | None

    def to_dict(self) -> dict:
        return {
            **self.row.to_dict(),
            "knutsen": self.knutsen.to_dict(),
            "node_margin_ok": self.node_margin_ok,
            "route": self.route.to_dict(),
            "viable": self.viable,
            "count": str(self.count) if self.count is not None else None,
            "failure": self.failure,
        }


# Construction facts that hold for every table embedding and are recorded
# rather than recomputed: they are properties of the embeddings themselves,
# not of the (d, g) input.
_CITED_CONSTRUCTION_FACTS = (
    "k-trivial-threefold",
    "linear-system-universality",
    "node-smoothing-section-exists",
)


@dataclass(frozen=True)
class DerivedVerdict:
    accept: bool
    reason: str
    ell: int
    chosen: RowAssessment | None
    rows: tuple[RowAssessment, ...]
    assumed: tuple[str, ...]

    @property
    def count(self) -> int | None:
        return self.chosen.count if self.chosen is not None else None

    def to_dict(self) -> dict:
        return {
            "accept": self.accept,
            "reason": self.reason,
            "ell": self.ell,
            "chosen": self.chosen.to_dict() if self.chosen else None,
            "rows": [a.to_dict() for a in self.rows],
            "assumed_by_citation": list(self.assumed),
        }


def _assess_row(row: EmbeddingRow, d: int, g: int) -> RowAssessment:
    verdict = knutsen_exists(row.m, d, g)
    margin_ok = row.nodes >= g + 2
    route = nonspeciality_route(row.m, d, g)
    viable = (
        verdict.exists
        and margin_ok
        and route.route is not NonspecialityRoute.FAIL
    )
    if viable:
        failure = None
    elif not verdict.exists:
        failure = "k3-existence"
    elif not margin_ok:
        failure = "node-margin"
    else:
        failure = "nonspeciality"
    count = rigid_count(row.nodes, g) if viable else None
    return RowAssessment(row, verdict, margin_ok, route, viable, count, failure)


def derived_conditions(cicy: CicyType, d: int, g: int) -> DerivedVerdict:
    """Hypothesis chain through the node table: the linear system of genus-g
    curves has dimension ell = g, so an embedding row is viable when the
    curve exists on its K3, n >= g + 2, and non-speciality holds.

    The chosen row maximizes n (ties broken by table order); the count is
    C(n - 2, g) for the chosen row.
    """
    if g < 0:
        raise DegreeRangeError(f"genus must be nonnegative, got {g}")
    if d < 1:
        raise DegreeRangeError(f"degree must be positive, got {d}")
    if d < 2 * g - 3:
        raise DegreeRangeError(
            f"degree {d} below the supported floor 2g-3 = {2 * g - 3}"
        )
    assessments = []
    chosen: RowAssessment | None = None
    for row in node_table():
        if row.cicy is not cicy:
            continue
        assessment = _assess_row(row, d, g)
        assessments.append(assessment)
        if assessment.viable and (
            chosen is None or assessment.row.nodes > chosen.row.nodes
        ):
            chosen = assessment
    accept = chosen is not None
    reason = "accepted" if accept else "no-viable-embedding"
    return DerivedVerdict(
        accept=accept,
        reason=reason,
        ell=g,
        chosen=chosen,
        rows=tuple(assessments),
        assumed=_CITED_CONSTRUCTION_FACTS if assessments else (),
    )


@dataclass(frozen=True)
class Certificate:
    """Verdicts of both modes for one (family, d, g) input, plus warnings."""

    cicy: CicyType
    d: int
    g: int
    stated: StatedVerdict
    derived: DerivedVerdict
    warnings: tuple[str, ...]

    @property
    def count(self) -> int | None:
        return self.derived.count

    def to_dict(self) -> dict:
        return {
            "input": {
                "type": self.cicy.type_string(),
                "degrees": list(self.cicy.degrees),
                "d": self.d,
                "g": self.g,
            },
            "stated": self.stated.to_dict(),
            "derived": self.derived.to_dict(),
            "count": str(self.count) if self.count is not None else None,
            "warnings": list(self.warnings),
        }


def certify(cicy: CicyType, d: int, g: int) -> Certificate:
    """Run both decision modes and cross-flag their disagreements.

    Gate violations in derived mode (d < 2g - 3, nonpositive degree) become
    rejections with a reason, never exceptions.
    """
    stated = stated_conditions(cicy, d, g)
    try:
        derived = derived_conditions(cicy, d, g)
    except DegreeRangeError as exc:
        derived = DerivedVerdict(
            accept=False,
            reason=f"out-of-range: {exc}",
            ell=max(g, 0),
            chosen=None,
            rows=(),
            assumed=(),
        )
    warnings = []
    if stated.accept != derived.accept:
        warnings.append(WARN_DISAGREEMENT)
    if any(a.knutsen.extrapolated for a in derived.rows):
        warnings.append(WARN_EXTRAPOLATED)
    if any(
        a.viable
        and degeneracy_count(a.row.cicy.degrees, a.row.k3_degrees)
        != a.row.nodes
        for a in derived.rows
    ):
        warnings.append(WARN_TABLE_DISCREPANCY)
    return Certificate(cicy, d, g, stated, derived, tuple(warnings))


@dataclass(frozen=True)
class TableCheck:
    """Tabulated node count next to its independent Thom-Porteous value."""

    row: EmbeddingRow
    computed: int

    @property
    def agree(self) -> bool:
        return self.computed == self.row.nodes

    def to_dict(self) -> dict:
        return {
            **self.row.to_dict(),
            "computed_n": self.computed,
            "agree": self.agree,
        }


def verify_node_table() -> list[TableCheck]:
    """Recompute every node count via the degeneracy-locus formula.

    Both values are reported side by side; the table itself is never
    altered, even where the computation disagrees with it.
    """
    return [
        TableCheck(row, degeneracy_count(row.cicy.degrees, row.k3_degrees))
        for row in node_table()
    ]


def enumerate_region(
    cicy: CicyType, d_max: int, g_max: int
) -> list[Certificate]:
    """Certificates for all (d, g) with 0 <= g <= g_max and
    max(1, 2g-3) <= d <= d_max, in (g asc, d asc) order."""
    if d_max < 0 or g_max < 0:
        raise ValueError(
            f"bounds must be nonnegative, got d_max={d_max}, g_max={g_max}"
        )
    if d_max > ENUMERATION_GUARD:
        raise ValueError(
            f"d_max={d_max} exceeds the enumeration guard {ENUMERATION_GUARD}"
        )
    certificates = []
    for g in range(g_max + 1):
        for d in range(max(1, 2 * g - 3), d_max + 1):
            certificates.append(certify(cicy, d, g))
    return certificates
