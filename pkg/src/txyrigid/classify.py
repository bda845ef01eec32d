"""The three rigid two-point families, the classifier, and a step-by-step
replay of the argument that pins two-point rigid data down to them.

Families (all with exactly two fixed points):

* Z   - both points carry the same weights, opposite signs; such data is
        null-cobordant and trivially rigid with constant 0.
* L1  - n = 1, weights (a) and (-a) with a > 0, equal signs; rigid with
        constant x - y.
* S3  - n = 3, weights (a, b, -(a+b)) and (-a, -b, a+b) with a, b > 0,
        equal signs; rigid with constant x*y^2 - x^2*y.

For two-point data outside family Z the matched weights must be exact
negatives of each other; splitting the lead point's weights into the
positive group (a-values) and the magnitudes of the negative group
(b-values) gives the chain of conditions replayed by ``replay_proof``:
equal group sums, then k * max = sum of the b-values, forcing k = 1,
l = 2 and max = b1 + b2, which is exactly the S3 shape.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from typing import Optional, Sequence

from .genera import FixedPoint, FixedPointData, rigidity_defect


@dataclass(frozen=True)
class FamilyTag:
    """Classification outcome for two-point data.

    ``kind`` is one of "Z", "L1", "S3", "NotRigid", "RigidUnclassified";
    RigidUnclassified marks rigid data outside the three families and is
    never expected to occur.
    """

    kind: str
    params: tuple[int, ...] = ()


NOT_RIGID = FamilyTag("NotRigid")
RIGID_UNCLASSIFIED = FamilyTag("RigidUnclassified")


def make_z(weights: Sequence[int]) -> FixedPointData:
    """Family Z data: two points with identical weights and opposite signs."""
    weights = tuple(int(w) for w in weights)
    if not weights or any(w == 0 for w in weights):
        raise ValueError("family Z needs a nonempty list of nonzero weights")
    return FixedPointData(
        len(weights), (FixedPoint(weights, 1), FixedPoint(weights, -1))
    )


def make_l1(a: int) -> FixedPointData:
    """Family L1 data: n = 1, weights (a) and (-a), equal signs."""
    a = int(a)
    if a <= 0:
        raise ValueError("family L1 needs a positive weight")
    return FixedPointData(1, (FixedPoint((a,), 1), FixedPoint((-a,), 1)))


def make_s3(a: int, b: int) -> FixedPointData:
    """Family S3 data: n = 3, weights (a, b, -(a+b)) and (-a, -b, a+b)."""
    a, b = int(a), int(b)
    if a <= 0 or b <= 0:
        raise ValueError("family S3 needs two positive weights")
    return FixedPointData(
        3,
        (FixedPoint((a, b, -(a + b)), 1), FixedPoint((-a, -b, a + b), 1)),
    )


def _require_two_points(data: FixedPointData) -> tuple[FixedPoint, FixedPoint]:
    if data.m != 2:
        raise ValueError(f"exactly two fixed points required, got {data.m}")
    return data.points[0], data.points[1]


def _is_family_z(p1: FixedPoint, p2: FixedPoint) -> bool:
    # weight order inside a point is not meaningful: compare multisets
    return p1.sign == -p2.sign and Counter(p1.weights) == Counter(p2.weights)


def pairing_check(data: FixedPointData) -> bool:
    """Whether the two points carry the same weight magnitudes (as
    multisets) - a necessary condition for two-point rigidity."""
    p1, p2 = _require_two_points(data)
    return sorted(abs(w) for w in p1.weights) == sorted(abs(w) for w in p2.weights)


def classify_two_points(data: FixedPointData) -> FamilyTag:
    """Match two-point data against the families Z, L1, S3 exactly; data in
    no family is split by the exact rigidity check into NotRigid and
    RigidUnclassified."""
    p1, p2 = _require_two_points(data)
    if _is_family_z(p1, p2):
        plus = p1 if p1.sign == 1 else p2
        return FamilyTag("Z", tuple(sorted(plus.weights, reverse=True)))
    if p1.sign == p2.sign:
        if data.n == 1 and p2.weights[0] == -p1.weights[0]:
            return FamilyTag("L1", (abs(p1.weights[0]),))
        if data.n == 3:
            for lead, other in ((p1, p2), (p2, p1)):
                positive = sorted(w for w in lead.weights if w > 0)
                negative = [w for w in lead.weights if w < 0]
                if (
                    len(positive) == 2
                    and len(negative) == 1
                    and negative[0] == -(positive[0] + positive[1])
                    and Counter(other.weights) == Counter(-w for w in lead.weights)
                ):
                    return FamilyTag("S3", (positive[0], positive[1]))
    if rigidity_defect(data).is_zero():
        return RIGID_UNCLASSIFIED
    return NOT_RIGID


@dataclass(frozen=True)
class ProofTrace:
    """Record of the two-point classification argument on one candidate.

    ``a_values`` are the lead point's positive weights (largest first) and
    ``b_values`` the magnitudes of its negative weights (smallest first),
    after relabeling the points so the largest magnitude sits among the
    a-values; k and l are the group sizes, k + l = n.

    ``balance_holds`` is the y = 0 specialization of the defect vanishing
    (for k, l >= 1 this is exactly "equal group sums" plus the matching
    sign condition).  ``max_rule_holds`` checks k * max = sum of b-values.
    ``final_form`` is (k, l, shape-ok) for n > 1, where shape-ok means
    k = 1, l = 2 and max = b1 + b2; for n = 1 the argument stops early
    (``n1_shortcut``) and final_form is None.
    """

    paired: bool
    negation_pairing: bool
    max_weight_tie: bool
    n1_shortcut: bool
    k: int
    l: int
    a_values: tuple[int, ...]
    b_values: tuple[int, ...]
    balance_holds: bool
    max_rule_holds: bool
    final_form: Optional[tuple[int, int, bool]]


def replay_proof(data: FixedPointData) -> ProofTrace:
    """Replay the two-point classification argument on non-Z paired data.

    Rejects data with m != 2, data whose weight magnitudes do not match,
    and family Z data (the argument does not apply there).  The recorded
    conditions must all hold for rigid data; for non-rigid data they may
    fail in any pattern, and the verdict always comes from the exact
    defect, never from this trace.
    """
    p1, p2 = _require_two_points(data)
    if not pairing_check(data):
        raise ValueError("the two points carry different weight magnitudes")
    if _is_family_z(p1, p2):
        raise ValueError("family Z data: the non-Z branch does not apply")

    negation_pairing = Counter(p1.weights) == Counter(-w for w in p2.weights)

    big = max(abs(w) for w in p1.weights)
    lead = p1
    if big not in p1.weights and big in p2.weights:
        lead = p2  # put the largest magnitude into the positive group
    a_values = tuple(sorted((w for w in lead.weights if w > 0), reverse=True))
    b_values = tuple(sorted(-w for w in lead.weights if w < 0))
    k, l = len(a_values), len(b_values)
    max_weight_tie = big in a_values and big in b_values

    n1_shortcut = data.n == 1
    balance_holds = rigidity_defect(data).specialize(1, 0).is_zero()
    if n1_shortcut:
        max_rule_holds = True  # the chain below is skipped for n = 1
        final_form = None
    else:
        top = a_values[0] if a_values else 0
        max_rule_holds = k >= 1 and k * top == sum(b_values)
        final_form = (k, l, k == 1 and l == 2 and top == sum(b_values))
    return ProofTrace(
        paired=True,
        negation_pairing=negation_pairing,
        max_weight_tie=max_weight_tie,
        n1_shortcut=n1_shortcut,
        k=k,
        l=l,
        a_values=a_values,
        b_values=b_values,
        balance_holds=balance_holds,
        max_rule_holds=max_rule_holds,
        final_form=final_form,
    )
