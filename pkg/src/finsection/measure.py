"""Finite probability spaces, finite sigma-algebras as partitions, and the
outer measure induced by measurable covers.

All quantities are exact rationals; every equality test in the package is
exact, so no tolerances appear anywhere.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction

__all__ = [
    "SampleSpace",
    "SigmaAlgebra",
    "OuterMeasure",
    "parse_rational",
    "format_rational",
    "trivial_sigma",
    "discrete_sigma",
    "generate_sigma",
    "refines",
    "is_measurable",
    "measurable_cover",
    "outer_measure",
]

_RATIONAL = re.compile(r"^-?\d+(/\d+)?$")


def parse_rational(text) -> Fraction:
    """Parse a "p/q" (or bare integer) literal into an exact Fraction."""
    if not isinstance(text, str) or not _RATIONAL.match(text):
        raise ValueError(f"not a rational literal: {text!r}")
    value = Fraction(text)
    return value


def format_rational(value: Fraction) -> str:
    """Canonical "p/q" form, denominator always present (e.g. "0/1")."""
    value = Fraction(value)
    return f"{value.numerator}/{value.denominator}"


@dataclass(frozen=True)
class SampleSpace:
    """Ordered finite atom list with exact nonnegative weights summing to 1."""

    atoms: tuple[str, ...]
    weights: tuple[Fraction, ...]

    def __post_init__(self):
        object.__setattr__(self, "atoms", tuple(self.atoms))
        object.__setattr__(self, "weights", tuple(Fraction(w) for w in self.weights))
        if not self.atoms:
            raise ValueError("sample space needs at least one atom")
        if len(set(self.atoms)) != len(self.atoms):
            raise ValueError("atom ids must be distinct")
        if len(self.weights) != len(self.atoms):
            raise ValueError("exactly one weight per atom required")
        if any(w < 0 for w in self.weights):
            raise ValueError("weights must be nonnegative")
        if sum(self.weights) != 1:
            raise ValueError("weights must sum to exactly 1")

    @classmethod
    def uniform(cls, atoms) -> "SampleSpace":
        atoms = tuple(atoms)
        return cls(atoms, tuple(Fraction(1, len(atoms)) for _ in atoms))

    def weight(self, atom: str) -> Fraction:
        return self._weight_map[atom]

    def prob(self, subset) -> Fraction:
        """Exact probability of a set of atoms."""
        w = self._weight_map
        total = Fraction(0)
        for atom in set(subset):
            if atom not in w:
                raise ValueError(f"unknown atom {atom!r}")
            total += w[atom]
        return total

    @property
    def _weight_map(self):
        return dict(zip(self.atoms, self.weights))


@dataclass(frozen=True)
class SigmaAlgebra:
    """A finite sigma-algebra, represented by its partition into blocks.

    A set is measurable exactly when it is a union of blocks, which makes
    refinement between sigma-algebras a plain partition relation.
    """

    blocks: tuple[frozenset, ...]

    def __post_init__(self):
        blocks = tuple(sorted((frozenset(b) for b in self.blocks), key=sorted))
        object.__setattr__(self, "blocks", blocks)
        if not blocks:
            raise ValueError("partition needs at least one block")
        seen = set()
        for block in blocks:
            if not block:
                raise ValueError("partition blocks must be nonempty")
            if block & seen:
                raise ValueError("partition blocks must be pairwise disjoint")
            seen |= block
        object.__setattr__(self, "_universe", frozenset(seen))

    @property
    def universe(self) -> frozenset:
        return self._universe

    def block_of(self, atom) -> frozenset:
        for block in self.blocks:
            if atom in block:
                return block
        raise ValueError(f"atom {atom!r} not covered by the partition")


def trivial_sigma(atoms) -> SigmaAlgebra:
    return SigmaAlgebra((frozenset(atoms),))


def discrete_sigma(atoms) -> SigmaAlgebra:
    return SigmaAlgebra(tuple(frozenset((a,)) for a in atoms))


def generate_sigma(atoms, family) -> SigmaAlgebra:
    """Coarsest partition of ``atoms`` under which every family member is a
    union of blocks: atoms are grouped by their membership signature.
    Idempotent, and the empty family yields the trivial partition."""
    atoms = tuple(atoms)
    members = [frozenset(m) for m in family]
    for member in members:
        if not member <= set(atoms):
            raise ValueError("family members must be subsets of the atoms")
    groups: dict[tuple[bool, ...], set] = {}
    for atom in atoms:
        signature = tuple(atom in member for member in members)
        groups.setdefault(signature, set()).add(atom)
    return SigmaAlgebra(tuple(frozenset(g) for g in groups.values()))


def refines(finer: SigmaAlgebra, coarser: SigmaAlgebra) -> bool:
    """True iff every block of ``finer`` sits inside a block of ``coarser``."""
    if finer.universe != coarser.universe:
        return False
    return all(any(fb <= cb for cb in coarser.blocks) for fb in finer.blocks)


def is_measurable(subset, sigma: SigmaAlgebra) -> bool:
    subset = frozenset(subset)
    if not subset <= sigma.universe:
        raise ValueError("subset must live inside the sigma-algebra's universe")
    return all(block <= subset or not block & subset for block in sigma.blocks)


def measurable_cover(subset, sigma: SigmaAlgebra) -> frozenset:
    """The smallest measurable superset: the union of all blocks meeting the
    subset.  Independent of any measure on the space."""
    subset = frozenset(subset)
    if not subset <= sigma.universe:
        raise ValueError("subset must live inside the sigma-algebra's universe")
    cover: set = set()
    for block in sigma.blocks:
        if block & subset:
            cover |= block
    return frozenset(cover)


def outer_measure(subset, sigma: SigmaAlgebra, space: SampleSpace) -> Fraction:
    """Infimum of probabilities of measurable supersets, attained by the
    measurable cover; agrees with the plain probability on measurable sets."""
    return space.prob(measurable_cover(subset, sigma))


class OuterMeasure:
    """Outer measure bound to one space and sigma-algebra, with a small
    evaluation cache for repeated queries."""

    def __init__(self, space: SampleSpace, sigma: SigmaAlgebra):
        self.space = space
        self.sigma = sigma
        self._cache: dict = {}

    def __call__(self, subset) -> Fraction:
        key = frozenset(subset)
        if key not in self._cache:
            self._cache[key] = outer_measure(key, self.sigma, self.space)
        return self._cache[key]

    def cover(self, subset) -> frozenset:
        return measurable_cover(subset, self.sigma)
