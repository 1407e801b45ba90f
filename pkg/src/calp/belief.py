"""Frames of discernment, mass functions, and belief-function capacities.

Evidence for a domain is a mass function: a set of focal sets with positive
mass summing to 1.  The belief of an event sums the mass lying entirely inside
it; plausibility is the conjugate 1 - belief(complement).  Events are plain
frozensets of element names at the API surface and bitmasks over the frame
ordering internally, so subset tests and powerset sweeps stay cheap.

The set-level operations on belief facts live here too: canonicalization
(intersecting a domain's facts down to one), completion (superset closure, so
strong evidence satisfies weak requirements), and evidence pooling by union.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Iterable, Iterator, Mapping

from .errors import DomainMismatchError
from .intervals import UNIT, CapacityInterval

MAX_FRAME = 16
MASS_TOLERANCE = 1e-9


@dataclass(frozen=True)
class Frame:
    """Ordered frame of discernment for one belief domain."""

    domain_id: str
    elements: tuple[str, ...]

    def __post_init__(self):
        object.__setattr__(self, "elements", tuple(self.elements))
        if not self.elements:
            raise ValueError(f"frame {self.domain_id!r} has no elements")
        if len(self.elements) > MAX_FRAME:
            raise ValueError(
                f"frame {self.domain_id!r} has {len(self.elements)} elements (max {MAX_FRAME})"
            )
        if len(set(self.elements)) != len(self.elements):
            raise ValueError(f"frame {self.domain_id!r} has duplicate elements")

    @property
    def size(self) -> int:
        return len(self.elements)

    @property
    def full_mask(self) -> int:
        return (1 << len(self.elements)) - 1

    def mask(self, members: Iterable[str]) -> int:
        m = 0
        for name in members:
            try:
                i = self.elements.index(name)
            except ValueError:
                raise DomainMismatchError(
                    f"{name!r} is not an element of domain {self.domain_id!r}"
                ) from None
            m |= 1 << i
        return m

    def members(self, mask: int) -> frozenset[str]:
        return frozenset(self.member_tuple(mask))

    def member_tuple(self, mask: int) -> tuple[str, ...]:
        """Members of an event in frame order (stable for printing)."""
        return tuple(e for i, e in enumerate(self.elements) if mask & (1 << i))

    def complement_mask(self, mask: int) -> int:
        return self.full_mask & ~mask

    def nonempty_masks(self) -> range:
        return range(1, self.full_mask + 1)


@dataclass(frozen=True)
class BeliefFact:
    """Ground assertion that a domain's outcome lies inside an event.

    An empty event never carries evidence; it only arises as the marker of an
    inconsistent canonicalized belief set.
    """

    domain: str
    members: frozenset[str]

    def __post_init__(self):
        object.__setattr__(self, "members", frozenset(self.members))

    @classmethod
    def of(cls, domain: str, *members: str) -> "BeliefFact":
        return cls(domain, frozenset(members))

    def sort_key(self) -> tuple:
        return (self.domain, tuple(sorted(self.members)))

    def __str__(self) -> str:
        inner = ", ".join(sorted(self.members))
        return f"belief({self.domain}, [{inner}])"


@dataclass(frozen=True)
class MassFunction:
    """Evidence masses over the focal sets of one domain.

    Only focal sets are stored: zero-mass entries are rejected rather than
    dropped, the empty set gets no entry, and the masses must sum to 1 within
    ``MASS_TOLERANCE``.
    """

    domain_id: str
    assignments: Mapping[frozenset[str], float]

    def __post_init__(self):
        normalized = {frozenset(k): float(v) for k, v in self.assignments.items()}
        object.__setattr__(self, "assignments", normalized)
        for event, value in normalized.items():
            if not event:
                raise ValueError(f"domain {self.domain_id!r}: mass assigned to the empty set")
            if value <= 0.0:
                raise ValueError(
                    f"domain {self.domain_id!r}: non-positive mass {value} for {sorted(event)}"
                )
        total = math.fsum(normalized.values())
        if abs(total - 1.0) > MASS_TOLERANCE:
            raise ValueError(f"domain {self.domain_id!r}: masses sum to {total}, expected 1")

    def focal_sets(self) -> tuple[tuple[frozenset[str], float], ...]:
        return tuple(sorted(self.assignments.items(), key=lambda kv: tuple(sorted(kv[0]))))


@dataclass(frozen=True, eq=True)
class BeliefDomain:
    """A frame together with the mass function carrying its evidence."""

    frame: Frame
    mass: MassFunction
    _focal: tuple[tuple[int, float], ...] = field(
        init=False, compare=False, repr=False, default=()
    )

    def __post_init__(self):
        if self.mass.domain_id != self.frame.domain_id:
            raise ValueError(
                f"mass function for {self.mass.domain_id!r} attached to frame {self.frame.domain_id!r}"
            )
        focal = []
        for event, value in self.mass.assignments.items():
            focal.append((self.frame.mask(event), value))
        focal.sort()
        object.__setattr__(self, "_focal", tuple(focal))

    @property
    def domain_id(self) -> str:
        return self.frame.domain_id

    def belief_mask(self, mask: int) -> float:
        return math.fsum(v for fm, v in self._focal if fm & ~mask == 0)

    def plausibility_mask(self, mask: int) -> float:
        return 1.0 - self.belief_mask(self.frame.complement_mask(mask))

    def interval_mask(self, mask: int) -> CapacityInterval:
        return CapacityInterval.from_belief_plausibility(
            self.belief_mask(mask), self.plausibility_mask(mask)
        )


def belief(dom: BeliefDomain, members: Iterable[str]) -> float:
    """Total mass of focal sets contained in the event."""
    return dom.belief_mask(dom.frame.mask(members))


def plausibility(dom: BeliefDomain, members: Iterable[str]) -> float:
    """Conjugate capacity: 1 - belief of the complement event."""
    return 1.0 - belief(dom, complement(dom, members))


def complement(dom: BeliefDomain, members: Iterable[str]) -> frozenset[str]:
    return dom.frame.members(dom.frame.complement_mask(dom.frame.mask(members)))


def canonicalize(facts: Iterable[BeliefFact]) -> frozenset[BeliefFact]:
    """Replace each domain's facts by one fact holding their intersection.

    The result may contain empty events; those mark an inconsistent set (see
    :func:`is_consistent`).
    """
    merged: dict[str, frozenset[str]] = {}
    for fact in facts:
        if fact.domain in merged:
            merged[fact.domain] = merged[fact.domain] & fact.members
        else:
            merged[fact.domain] = fact.members
    return frozenset(BeliefFact(d, e) for d, e in merged.items())


def is_consistent(facts: Iterable[BeliefFact]) -> bool:
    return all(fact.members for fact in canonicalize(facts))


def complete(
    facts: Iterable[BeliefFact], domains: Mapping[str, BeliefDomain]
) -> frozenset[BeliefFact]:
    """Superset closure of a canonical, consistent belief set.

    Evidence for an event also supports every weaker (larger) event, so a fact
    belief(D, B1) induces belief(D, B2) for every B1 <= B2 <= frame(D).
    """
    facts = list(facts)
    seen_domains = [f.domain for f in facts]
    if len(set(seen_domains)) != len(seen_domains):
        raise ValueError("belief set is not canonical (repeated domain)")
    out: set[BeliefFact] = set()
    for fact in facts:
        if not fact.members:
            raise ValueError(f"belief set is inconsistent (empty event for {fact.domain!r})")
        dom = domains.get(fact.domain)
        if dom is None:
            raise DomainMismatchError(f"unknown domain {fact.domain!r}")
        base = dom.frame.mask(fact.members)
        rest = dom.frame.complement_mask(base)
        # enumerate submasks of the complement, OR-ing each onto the base
        sub = rest
        while True:
            out.add(BeliefFact(fact.domain, dom.frame.members(base | sub)))
            if sub == 0:
                break
            sub = (sub - 1) & rest
    return frozenset(out)


def facts_for(domain_id: str, facts: Iterable[BeliefFact]) -> frozenset[BeliefFact]:
    """Select the facts belonging to one domain."""
    return frozenset(f for f in facts if f.domain == domain_id)


def union_interval(dom: BeliefDomain, facts: Iterable[BeliefFact]) -> CapacityInterval:
    """Pool one domain's evidence by union.

    Returns [belief, plausibility] of the united event, or [1, 1] when no fact
    constrains the domain (trivial evidence for the whole frame).
    """
    mask = 0
    seen = False
    for fact in facts:
        if fact.domain != dom.domain_id:
            raise DomainMismatchError(
                f"fact for domain {fact.domain!r} passed to {dom.domain_id!r}"
            )
        mask |= dom.frame.mask(fact.members)
        seen = True
    if not seen:
        return UNIT
    return dom.interval_mask(mask)


def all_events(dom: BeliefDomain) -> Iterator[frozenset[str]]:
    """Every event of the domain's event space, the empty set included."""
    for mask in range(dom.frame.full_mask + 1):
        yield dom.frame.members(mask)
