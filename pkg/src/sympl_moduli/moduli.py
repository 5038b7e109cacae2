"""Admissibility and enumeration of moduli-component labels.

A two-ended (three-punctured, one concave end) component is labeled by
an ordered set {(p, p'), (q, q')} of integer pairs; the concave end
carries the derived pair (k, k') = (p + q, p' + q').  Admissibility:

  1. no pair vanishes identically;
  (a) Delta = p q' - q p' > 0 (this fixes the canonical ordering: the
      swap flips the sign of Delta);
  (b) q' - p' > 0 unless p' q' > 0 (for integers, "p' q' > 0" is the
      same as "both non-zero with equal signs");
  (c) each end pair (m, m'), including (k, k'), satisfies the quadrant
      rule: m > 0 when 2 m'^2 < 3 m^2, and 2 m'^2 > 3 m^2 when m < 0.

A three-convex-ended component is labeled by an unordered set of three
pairs summing to (0, 0) componentwise that can be ordered so that the
last pair (k, k') has k != 0 and 2 k'^2 > 3 k^2 while the first two
form an admissible two-end label; an admissible set has precisely two
such orderings, and the two-end labels they begin with are the two
boundary degenerations of the component.

Everything here is exact integer arithmetic; no floating point enters
any admissibility decision.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from .errors import InternalError, InvalidLabel, OutOfRegime
from .reeb import EndClass

Pair = tuple[int, int]


def _as_pair(x) -> Pair:
    if isinstance(x, EndClass):
        return (x.m, x.m_prime)
    m, mp = x
    return (int(m), int(mp))


def _quadrant_violation(m: int, mp: int, tag: str) -> list[str]:
    """Rule (c) for one end pair; exact 2 m'^2 vs 3 m^2 comparison."""
    out = []
    lhs, rhs = 2 * mp * mp, 3 * m * m
    if m < 0 and lhs <= rhs:
        out.append(f"(c) {tag}=({m},{mp}): m < 0 needs 2 m'^2 > 3 m^2 "
                   f"({lhs} <= {rhs})")
    if lhs < rhs and m <= 0:
        out.append(f"(c) {tag}=({m},{mp}): 2 m'^2 < 3 m^2 needs m > 0 "
                   f"({lhs} < {rhs})")
    return out


def validate_label2(p_pair, q_pair) -> tuple[bool, list[str]]:
    """Check an ordered two-end label; returns (ok, violated rules)."""
    p, pp = _as_pair(p_pair)
    q, qp = _as_pair(q_pair)
    violations: list[str] = []
    if (p, pp) == (0, 0):
        violations.append("(1) first pair is (0, 0)")
    if (q, qp) == (0, 0):
        violations.append("(1) second pair is (0, 0)")
    if violations:
        return False, violations

    d = p * qp - q * pp
    if d <= 0:
        violations.append(f"(a) Delta = {p}*{qp} - {q}*{pp} = {d} <= 0")
    if not (qp - pp > 0 or pp * qp > 0):
        violations.append(f"(b) q' - p' = {qp - pp} <= 0 and p'q' = {pp * qp} <= 0")
    k, kp = p + q, pp + qp
    if (k, kp) == (0, 0):
        violations.append("(1) derived pair (p+q, p'+q') is (0, 0)")
    violations += _quadrant_violation(p, pp, "p")
    violations += _quadrant_violation(q, qp, "q")
    if (k, kp) != (0, 0):
        violations += _quadrant_violation(k, kp, "k")
    return not violations, violations


@dataclass(frozen=True, order=True)
class Label2:
    """An admissible ordered two-end label (Delta > 0 ordering)."""

    p_pair: EndClass
    q_pair: EndClass

    @classmethod
    def make(cls, p_pair, q_pair) -> "Label2":
        ok, why = validate_label2(p_pair, q_pair)
        if not ok:
            raise InvalidLabel("; ".join(why))
        p, pp = _as_pair(p_pair)
        q, qp = _as_pair(q_pair)
        return cls(EndClass(p, pp), EndClass(q, qp))

    @property
    def k_pair(self) -> EndClass:
        return EndClass(self.p_pair.m + self.q_pair.m,
                        self.p_pair.m_prime + self.q_pair.m_prime)

    @property
    def delta(self) -> int:
        return (self.p_pair.m * self.q_pair.m_prime
                - self.q_pair.m * self.p_pair.m_prime)

    def pairs(self) -> tuple[Pair, Pair]:
        return (self.p_pair.as_tuple(), self.q_pair.as_tuple())

    def to_json(self) -> dict:
        return {"pairs": [list(self.p_pair.as_tuple()),
                          list(self.q_pair.as_tuple())]}


Ordering3 = tuple[Pair, Pair, Pair]


def validate_label3(pairs) -> tuple[bool, list[Ordering3]]:
    """Check an unordered set of three pairs; returns (ok, valid orderings).

    An ordering ((p,p'), (q,q'), (k,k')) is valid when the three pairs
    sum to zero, 2 k'^2 > 3 k^2 (k = 0 passes: the ratio |k'/k| is then
    infinite, and rejecting it would leave some admissible sets with a
    single valid ordering, contradicting the two-orderings structure),
    and the first two pairs form an admissible two-end label.  ok iff
    exactly two orderings are valid.
    """
    ps = [_as_pair(x) for x in pairs]
    if len(ps) != 3:
        raise ValueError("a three-end label needs exactly three pairs")
    if any(p == (0, 0) for p in ps):
        return False, []
    if sum(p[0] for p in ps) != 0 or sum(p[1] for p in ps) != 0:
        return False, []
    orderings: list[Ordering3] = []
    for perm in itertools.permutations(ps):
        (p, pp), (q, qp), (k, kp) = perm
        if 2 * kp * kp <= 3 * k * k:
            continue
        if validate_label2((p, pp), (q, qp))[0]:
            orderings.append(perm)
    # Duplicate pairs in the set make permutations collide; dedup.
    orderings = sorted(set(orderings))
    return len(orderings) == 2, orderings


@dataclass(frozen=True, order=True)
class Label3:
    """An admissible unordered three-end label, stored sorted."""

    pairs: tuple[EndClass, EndClass, EndClass]

    @classmethod
    def make(cls, pairs) -> "Label3":
        ok, _ = validate_label3(pairs)
        if not ok:
            raise InvalidLabel(f"{[_as_pair(p) for p in pairs]} is not admissible")
        canon = tuple(EndClass(*p) for p in sorted(_as_pair(p) for p in pairs))
        return cls(canon)  # type: ignore[arg-type]

    def orderings(self) -> list[Ordering3]:
        return validate_label3(self.pairs)[1]

    def to_json(self) -> dict:
        return {"pairs": [list(p.as_tuple()) for p in self.pairs]}


@dataclass(frozen=True)
class OrderedLabel3:
    """A three-end label together with one of its two valid orderings."""

    label: Label3
    ordering: Ordering3

    @classmethod
    def make(cls, pairs, which: int = 0) -> "OrderedLabel3":
        label = Label3.make(pairs)
        orderings = label.orderings()
        if not 0 <= which < len(orderings):
            raise InvalidLabel(f"ordering index {which} out of range")
        return cls(label, orderings[which])

    def pairs(self) -> Ordering3:
        return self.ordering


def boundary_labels(l3: Label3 | OrderedLabel3) -> tuple[Label2, Label2]:
    """The two two-end labels compactifying a three-end component.

    They are formed by the first two pairs of the two valid orderings;
    the theory guarantees they are distinct, which is asserted.
    """
    label = l3.label if isinstance(l3, OrderedLabel3) else l3
    ok, orderings = validate_label3(label.pairs)
    if not ok:
        raise InvalidLabel("not an admissible three-end label")
    out = tuple(Label2.make(o[0], o[1]) for o in orderings)
    if out[0] == out[1]:
        raise InternalError(f"boundary labels coincide for {label}")
    return out  # type: ignore[return-value]


def canonical_pair(l2: Label2) -> tuple[EndClass, Label2]:
    """The distinguished end pair of l2 and the partner label.

    Requires the derived pair (k, k') = (p+q, p'+q') to satisfy k != 0
    and 2 k'^2 > 3 k^2.  Among the two pairs of l2 there is then exactly
    one, (m, m'), with 2 m'^2 > 3 m^2 whose associated partner label --
    {(q, q'), (-k, -k')} if (m, m') is the first pair, else
    {(-k, -k'), (p, p')} -- is itself admissible.  Anything other than
    exactly one such pair would contradict the boundary structure and
    is surfaced as InternalError.
    """
    k, kp = l2.k_pair.as_tuple()
    if k == 0 or 2 * kp * kp <= 3 * k * k:
        raise OutOfRegime(f"(k, k') = ({k}, {kp}) fails 2 k'^2 > 3 k^2 with k != 0")
    p, pp = l2.p_pair.as_tuple()
    q, qp = l2.q_pair.as_tuple()
    candidates: list[tuple[EndClass, tuple[Pair, Pair]]] = []
    for pair, partner in (
            (l2.p_pair, ((q, qp), (-k, -kp))),
            (l2.q_pair, ((-k, -kp), (p, pp)))):
        m, mp = pair.as_tuple()
        if 2 * mp * mp > 3 * m * m and validate_label2(*partner)[0]:
            candidates.append((pair, partner))
    if len(candidates) != 1:
        raise InternalError(
            f"expected exactly one distinguished pair in {l2}, got {len(candidates)}")
    pair, partner = candidates[0]
    return pair, Label2.make(*partner)


def enumerate_labels(bound: int, ends: int) -> list[Label2] | list[Label3]:
    """All admissible labels with every entry in [-bound, bound].

    Two-end labels are emitted in their canonical Delta > 0 ordering
    (the swapped ordering never appears); three-end labels are
    deduplicated as unordered sets via the sorted representation.
    Output order is lexicographic, hence deterministic.
    """
    if bound < 1:
        raise ValueError("bound must be >= 1")
    rng = range(-bound, bound + 1)
    if ends == 2:
        out2: list[Label2] = []
        for p, pp, q, qp in itertools.product(rng, rng, rng, rng):
            if (p, pp) == (0, 0) or (q, qp) == (0, 0):
                continue
            if validate_label2((p, pp), (q, qp))[0]:
                out2.append(Label2.make((p, pp), (q, qp)))
        return out2
    if ends == 3:
        seen: set[tuple[Pair, Pair, Pair]] = set()
        out3: list[Label3] = []
        pairs = [(m, mp) for m in rng for mp in rng if (m, mp) != (0, 0)]
        for a, b in itertools.product(pairs, pairs):
            c = (-a[0] - b[0], -a[1] - b[1])
            if c == (0, 0) or abs(c[0]) > bound or abs(c[1]) > bound:
                continue
            canon = tuple(sorted((a, b, c)))
            if canon in seen:
                continue
            seen.add(canon)
            if validate_label3(canon)[0]:
                out3.append(Label3.make(canon))
        return sorted(out3)
    raise ValueError("ends must be 2 or 3")


def label_from_pairs(pairs) -> Label2 | Label3:
    """Build a validated label from two or three integer pairs."""
    ps = [_as_pair(p) for p in pairs]
    if len(ps) == 2:
        return Label2.make(*ps)
    if len(ps) == 3:
        return Label3.make(ps)
    raise ValueError("a label has two or three pairs")
