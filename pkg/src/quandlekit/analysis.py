"""Structural analysis of validated racks.

Covers the inner and full automorphism groups, connectedness, faithfulness,
fibers of the translation map, the profile (common translation cycle type of
a connected rack), per-length translation-part multisets, orbit divisibility,
and primitivity of the inner action.

Facts that are theorems for these structures (uniform fiber size on
connected racks, profile well-definedness, conjugation-orbit divisibility)
are still checked at runtime; a failure raises :class:`TheoremViolation`
since it can only mean an implementation bug.
"""
from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from typing import Iterable, Optional, Sequence

from .errors import (
    BoundExceeded,
    NotConnected,
    TheoremViolation,
)
from .perm import DEFAULT_CAP, CycleType, PermutationGroup
from .racktable import RackTable, _isomorphism_search

AUT_SEARCH_BOUND = 16


@dataclass(frozen=True)
class Profile:
    """The common translation cycle type of a connected rack."""
    cycle_type: CycleType

    @property
    def lengths(self) -> tuple:
        return self.cycle_type.lengths

    @property
    def largest(self) -> int:
        return self.cycle_type.largest

    def __str__(self):
        return str(self.cycle_type)


@dataclass(frozen=True)
class FiberPartition:
    """Point classes with identical translation rows; ``f`` is the common
    fiber size when the sizes are uniform, else None."""
    fibers: tuple
    f: Optional[int]

    @property
    def uniform(self) -> bool:
        return self.f is not None


@dataclass(frozen=True)
class OrbitSizes:
    """Orbit of y under powers of the translation by x (``lam``) and orbit
    of the translation by y under conjugation by those powers (``lam_bar``).
    The second always divides the first."""
    lam: int
    lam_bar: int


@dataclass(frozen=True)
class PrimitivityReport:
    primitive: bool
    witness_blocks: Optional[tuple]  # cells of a minimal nontrivial system


@dataclass(frozen=True)
class KTildeDiagnostic:
    """Outcome of the block-system probe for one profile length: do the
    distinct k-tilde parts of the translations partition the points, and if
    so does the partition pass the block test?  Reported, never asserted."""
    k: int
    cells: tuple
    is_partition: bool
    is_block_system: Optional[bool]


def inner_group(X: RackTable, cap: int = DEFAULT_CAP) -> PermutationGroup:
    """The group generated by all left translations."""
    X._require_rack()
    return PermutationGroup(X.n, X.distinct_translations(), cap=cap)


def is_connected(X: RackTable) -> bool:
    """The inner group acts transitively on the points."""
    X._require_rack()
    return len(X.inner_orbit_partition()) == 1


def fibers(X: RackTable) -> FiberPartition:
    """Group points by identical translation rows.

    For connected racks the fiber sizes are uniform; that guarantee is
    re-checked and its failure raises :class:`TheoremViolation`.
    """
    X._require_rack()
    groups = {}
    for x in range(X.n):
        groups.setdefault(X.table[x], []).append(x)
    cells = tuple(sorted((frozenset(c) for c in groups.values()), key=min))
    sizes = {len(c) for c in cells}
    f = sizes.pop() if len(sizes) == 1 else None
    if is_connected(X) and f is None:
        raise TheoremViolation(
            "connected rack produced non-uniform fiber sizes")
    return FiberPartition(cells, f)


def is_faithful(X: RackTable) -> bool:
    """The map from points to translations is injective."""
    X._require_rack()
    return len(set(X.table)) == X.n


def per_element_cycle_types(X: RackTable) -> list:
    """Cycle type of every translation (serves non-connected racks, where
    no single profile exists)."""
    X._require_rack()
    return [X.phi(x).cycle_type() for x in range(X.n)]


def profile(X: RackTable) -> Profile:
    """The common cycle type of the translations of a connected rack."""
    X._require_rack()
    if not is_connected(X):
        raise NotConnected("profile is defined for connected racks only")
    types = {X.phi(x).cycle_type() for x in range(X.n)}
    if len(types) != 1:
        raise TheoremViolation(
            "connected rack has translations of unequal cycle type")
    ct = types.pop()
    if X.is_quandle and ct.lengths[0] != 1:
        raise TheoremViolation("quandle profile must start with length 1")
    return Profile(ct)


def lambda_part(X: RackTable, k: int) -> Counter:
    """Multiset union of the k-parts of the distinct translations.

    ``k`` must be a length occurring in the profile.  The returned Counter
    maps 0-based points to occurrence counts.
    """
    p = profile(X)
    if k not in p.lengths:
        raise ValueError(f"length {k} does not occur in profile {p}")
    counts: Counter = Counter()
    for t in X.distinct_translations():
        counts.update(t.k_part(k))
    return counts


def expected_lambda_part_count(X: RackTable, k: int) -> int:
    """The uniform per-point occurrence count ``a_s * k / f`` for length k."""
    p = profile(X)
    f = fibers(X).f
    mult = p.cycle_type.multiplicity(k)
    total = mult * k * (X.n // f)
    if total % X.n:
        raise TheoremViolation(
            f"translation-part multiset of length {k} does not distribute evenly")
    return total // X.n


def orbit_divisibility(X: RackTable, x: int, y: int) -> OrbitSizes:
    """Sizes of the two orbits attached to (x, y); the conjugation orbit
    size always divides the point orbit size."""
    X._require_rack()
    px, py = X.phi(x), X.phi(y)
    lam = next(len(c) for c in px.cycles() if y in c)
    q = px.conj(py)
    lam_bar = 1
    while q != py:
        q = px.conj(q)
        lam_bar += 1
    if lam % lam_bar:
        raise TheoremViolation(
            f"conjugation orbit size {lam_bar} does not divide point orbit size {lam}")
    return OrbitSizes(lam, lam_bar)


def inner_action_primitivity(X: RackTable,
                             cap: int = DEFAULT_CAP) -> PrimitivityReport:
    """Primitivity of the inner action of a connected rack; when imprimitive
    the witness is the block system generated by a minimal nontrivial block.
    """
    if not is_connected(X):
        raise NotConnected("primitivity concerns connected racks")
    G = inner_group(X, cap=cap)
    witness = G.block_system_witness()
    if witness is None:
        return PrimitivityReport(True, None)
    return PrimitivityReport(False, tuple(witness))


def center_check(X: RackTable, cap: int = DEFAULT_CAP) -> bool:
    """True iff the center of the inner group is trivial (faithful racks
    are guaranteed this; the check is still a computation)."""
    if not is_faithful(X):
        raise ValueError("center check requires a faithful rack")
    return inner_group(X, cap=cap).center_order() == 1


def automorphism_group(X: RackTable, bound: int = AUT_SEARCH_BOUND,
                       cap: int = DEFAULT_CAP) -> PermutationGroup:
    """All table automorphisms, found by backtracking with invariant-class
    pruning.  Contains the inner group (verified)."""
    X._require_rack()
    if X.n > bound:
        raise BoundExceeded(
            f"automorphism search bound is {bound}, table has {X.n} elements")
    sols = _isomorphism_search(X, X, collect=True)
    elems = tuple(sols)
    group = PermutationGroup(X.n, elems, cap=cap)
    group._elements = elems
    group._element_set = frozenset(elems)
    for t in X.distinct_translations():
        if t not in group._element_set:
            raise TheoremViolation(
                "a translation map is missing from the automorphism set")
    return group


def conjugation_rack_quotient_check(perms: Sequence[Permutation],
                                    cap: int = DEFAULT_CAP) -> bool:
    """For a conjugation-closed set of permutations, check that the inner
    group of the induced rack has order |G| / |Z(G)| with G the generated
    group."""
    from .constructors import rack_from_conjugation_closed

    rack, _ = rack_from_conjugation_closed(perms)
    degree = perms[0].degree
    G = PermutationGroup(degree, perms, cap=cap)
    inn_order = inner_group(rack, cap=cap).order()
    return inn_order * G.center_order() == G.order()


def k_tilde_block_diagnostic(X: RackTable,
                             ks: Optional[Iterable[int]] = None) -> list:
    """Probe, for each profile length k, whether the distinct k-tilde parts
    of the translations form a partition and, if so, a block system of the
    inner action.  No general theorem backs this; outcomes are recorded."""
    p = profile(X)
    G = inner_group(X)
    out = []
    for k in (p.lengths if ks is None else ks):
        cells = sorted({t.k_tilde_part(k) for t in X.distinct_translations()},
                       key=min)
        flat = sorted(q for c in cells for q in c)
        is_partition = flat == list(range(X.n))
        blocks = G.is_block(cells) if is_partition else None
        out.append(KTildeDiagnostic(k, tuple(cells), is_partition, blocks))
    return out
