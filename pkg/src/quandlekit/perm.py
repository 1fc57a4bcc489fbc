"""Permutations on finite point sets and finitely generated permutation groups.

Points are 0-based integers ``0..n-1`` throughout the library; the 1-based
convention of the text formats is applied only when parsing and printing
(see :func:`Permutation.parse` / :meth:`Permutation.cycle_string`).

Composition is right-to-left: ``(p * q)(i) == p(q(i))``, i.e. ``q`` acts
first.  All values are immutable; the one exception is the group's memoized
element set, which is filled at most once.
"""
from __future__ import annotations

import itertools
import math
import re
from typing import Iterable, Optional, Sequence

from . import _kernels
from .errors import CapExceeded, DegreeMismatch, NotTransitive, ParseError

DEFAULT_CAP = 1_000_000

_CYCLE_RE = re.compile(r"\(([^()]*)\)")


class Permutation:
    """An immutable bijection of ``{0..n-1}`` stored as an image tuple."""

    __slots__ = ("_images",)

    def __init__(self, images: Iterable[int]):
        images = tuple(images)
        if sorted(images) != list(range(len(images))):
            raise ValueError(f"not a permutation of 0..{len(images)-1}: {images!r}")
        self._images = images

    @classmethod
    def identity(cls, degree: int) -> "Permutation":
        return cls(range(degree))

    @classmethod
    def from_cycles(cls, degree: int, cycles: Sequence[Sequence[int]]) -> "Permutation":
        """Build from disjoint cycles of 0-based points; fixed points implied."""
        images = list(range(degree))
        seen = set()
        for cycle in cycles:
            for a, b in zip(cycle, tuple(cycle[1:]) + (cycle[0],)):
                if not 0 <= a < degree:
                    raise ValueError(f"point {a} out of range for degree {degree}")
                if a in seen:
                    raise ValueError(f"point {a} appears in two cycles")
                seen.add(a)
                images[a] = b
        return cls(images)

    @classmethod
    def parse(cls, text: str, degree: int) -> "Permutation":
        """Parse 1-based disjoint-cycle notation, e.g. ``(1)(5,9)(2,4,3)``.

        Fixed points may be omitted; ``()`` denotes the identity.
        """
        stripped = text.strip()
        if not stripped:
            raise ParseError("empty permutation")
        consumed = _CYCLE_RE.sub("", stripped).strip()
        if consumed:
            raise ParseError(f"unexpected text in cycle notation: {consumed!r}")
        cycles = []
        for body in _CYCLE_RE.findall(stripped):
            body = body.strip()
            if not body:
                continue
            try:
                pts = [int(tok) - 1 for tok in re.split(r"[,\s]+", body)]
            except ValueError:
                raise ParseError(f"bad cycle {body!r}") from None
            for p in pts:
                if not 0 <= p < degree:
                    raise ParseError(f"point {p + 1} out of range 1..{degree}")
            cycles.append(pts)
        return cls.from_cycles(degree, cycles)

    @classmethod
    def from_one_line(cls, text: str) -> "Permutation":
        """Parse the machine-exchange form: space-separated 1-based images."""
        try:
            images = [int(tok) - 1 for tok in text.split()]
        except ValueError:
            raise ParseError(f"bad image list: {text!r}") from None
        return cls(images)

    @property
    def degree(self) -> int:
        return len(self._images)

    @property
    def images(self) -> tuple:
        return self._images

    def __call__(self, point: int) -> int:
        return self._images[point]

    def __len__(self) -> int:
        return len(self._images)

    def __hash__(self):
        return hash(self._images)

    def __eq__(self, other):
        if not isinstance(other, Permutation):
            return NotImplemented
        return self._images == other._images

    def __lt__(self, other):
        return self._images < other._images

    def __mul__(self, other: "Permutation") -> "Permutation":
        if self.degree != other.degree:
            raise DegreeMismatch(f"degree {self.degree} vs {other.degree}")
        o = other._images
        s = self._images
        return Permutation(s[o[i]] for i in range(len(s)))

    def __pow__(self, k: int) -> "Permutation":
        n = self.degree
        images = [0] * n
        for cycle in self.cycles():
            l = len(cycle)
            for pos, pt in enumerate(cycle):
                images[pt] = cycle[(pos + k) % l]
        return Permutation(images)

    def inverse(self) -> "Permutation":
        out = [0] * len(self._images)
        for i, j in enumerate(self._images):
            out[j] = i
        return Permutation(out)

    def conj(self, other: "Permutation") -> "Permutation":
        """Conjugate ``other`` by self: ``self * other * self.inverse()``."""
        return self * other * self.inverse()

    def is_identity(self) -> bool:
        return all(i == j for i, j in enumerate(self._images))

    def cycles(self, nontrivial_only: bool = False) -> list:
        """Disjoint cycles, each rotated to start at its least point and
        listed in increasing order of that point."""
        seen = [False] * len(self._images)
        out = []
        for i in range(len(self._images)):
            if seen[i]:
                continue
            cyc = [i]
            seen[i] = True
            j = self._images[i]
            while j != i:
                seen[j] = True
                cyc.append(j)
                j = self._images[j]
            if len(cyc) > 1 or not nontrivial_only:
                out.append(cyc)
        return out

    def cycle_type(self) -> "CycleType":
        return CycleType.from_lengths(len(c) for c in self.cycles())

    def order(self) -> int:
        return math.lcm(*(len(c) for c in self.cycles()))

    def k_part(self, k: int) -> frozenset:
        """Points lying on cycles of length exactly ``k``."""
        return frozenset(
            p for c in self.cycles() if len(c) == k for p in c
        )

    def k_tilde_part(self, k: int) -> frozenset:
        """Points lying on cycles whose length divides ``k``."""
        return frozenset(
            p for c in self.cycles() if k % len(c) == 0 for p in c
        )

    def sign(self) -> int:
        """+1 for even permutations, -1 for odd."""
        swaps = sum(len(c) - 1 for c in self.cycles())
        return -1 if swaps % 2 else 1

    def cycle_string(self) -> str:
        """1-based disjoint-cycle text: nontrivial cycles in increasing order
        of least moved point; the identity prints as ``()``."""
        cycles = self.cycles(nontrivial_only=True)
        if not cycles:
            return "()"
        return "".join(
            "(" + ",".join(str(p + 1) for p in c) + ")" for c in cycles
        )

    def one_line(self) -> str:
        """1-based image list, e.g. ``"1 4 2 3"``."""
        return " ".join(str(i + 1) for i in self._images)

    def __repr__(self):
        return f"Permutation[{self.cycle_string()} deg={self.degree}]"


def compose(p: Permutation, q: Permutation) -> Permutation:
    """The permutation mapping ``i`` to ``p(q(i))`` (``q`` acts first)."""
    return p * q


def conjugate(a: Permutation, b: Permutation) -> Permutation:
    """``a * b * a.inverse()``."""
    return a.conj(b)


class CycleType:
    """A multiset of cycle lengths stored as (length, multiplicity) pairs
    with strictly increasing lengths."""

    __slots__ = ("_parts",)

    def __init__(self, parts: Iterable):
        parts = tuple((int(l), int(m)) for l, m in parts)
        lengths = [l for l, _ in parts]
        if lengths != sorted(set(lengths)) or any(m < 1 for _, m in parts) or any(
            l < 1 for l, _ in parts
        ):
            raise ValueError(f"malformed cycle type parts: {parts!r}")
        self._parts = parts

    @classmethod
    def from_lengths(cls, lengths: Iterable[int]) -> "CycleType":
        counts = {}
        for l in lengths:
            counts[l] = counts.get(l, 0) + 1
        return cls(sorted(counts.items()))

    @property
    def parts(self) -> tuple:
        return self._parts

    @property
    def degree(self) -> int:
        return sum(l * m for l, m in self._parts)

    @property
    def lengths(self) -> tuple:
        """Distinct lengths, increasing."""
        return tuple(l for l, _ in self._parts)

    @property
    def largest(self) -> int:
        return self._parts[-1][0]

    def multiplicity(self, length: int) -> int:
        for l, m in self._parts:
            if l == length:
                return m
        return 0

    def expanded(self) -> tuple:
        """All lengths with repetition, increasing."""
        return tuple(
            l for l, m in self._parts for _ in range(m)
        )

    def __eq__(self, other):
        if not isinstance(other, CycleType):
            return NotImplemented
        return self._parts == other._parts

    def __hash__(self):
        return hash(self._parts)

    def __lt__(self, other):
        return self._parts < other._parts

    def __iter__(self):
        return iter(self._parts)

    def __str__(self):
        return " ".join(f"{l}^{m}" for l, m in self._parts)

    def __repr__(self):
        return f"CycleType({self})"


class PermutationGroup:
    """A permutation group given by generators, with lazy materialization.

    The full element set is computed at most once by breadth-first closure
    and is capped: exceeding ``cap`` raises :class:`CapExceeded` instead of
    silently truncating.
    """

    def __init__(self, degree: int, generators: Iterable[Permutation],
                 cap: int = DEFAULT_CAP):
        self.degree = degree
        gens = []
        seen = set()
        for g in generators:
            if g.degree != degree:
                raise DegreeMismatch(
                    f"generator degree {g.degree} != group degree {degree}")
            if g.images not in seen and not g.is_identity():
                seen.add(g.images)
                gens.append(g)
        self.generators = tuple(gens)
        self.cap = cap
        self._elements: Optional[tuple] = None
        self._element_set: Optional[frozenset] = None

    # -- materialization ------------------------------------------------

    def elements(self) -> tuple:
        """All group elements in deterministic BFS order (identity first)."""
        if self._elements is None:
            raw = _kernels.closure_elements(
                self.degree, [g.images for g in self.generators], self.cap)
            if raw is None:
                raise CapExceeded(
                    f"group closure on {self.degree} points exceeds cap {self.cap}")
            elems = tuple(Permutation(t) for t in raw)
            self._elements = elems
            self._element_set = frozenset(elems)
        return self._elements

    def element_set(self) -> frozenset:
        self.elements()
        return self._element_set

    def order(self) -> int:
        return len(self.elements())

    def __contains__(self, p: Permutation) -> bool:
        return p in self.element_set()

    # -- orbits ----------------------------------------------------------

    def orbit(self, point: int) -> frozenset:
        if not 0 <= point < self.degree:
            raise ValueError(f"point {point} out of range 0..{self.degree - 1}")
        seen = {point}
        frontier = [point]
        while frontier:
            p = frontier.pop()
            for g in self.generators:
                q = g(p)
                if q not in seen:
                    seen.add(q)
                    frontier.append(q)
        return frozenset(seen)

    def orbits(self) -> list:
        """Orbit partition as a list of frozensets, ordered by least point."""
        remaining = set(range(self.degree))
        out = []
        while remaining:
            p = min(remaining)
            orb = self.orbit(p)
            out.append(orb)
            remaining -= orb
        return out

    def is_transitive(self) -> bool:
        """Single orbit; degree-1 groups are transitive by convention."""
        if self.degree == 1:
            return True
        return len(self.orbit(0)) == self.degree

    # -- centralizers and centers -----------------------------------------

    def centralizer(self, p: Permutation) -> "PermutationGroup":
        """Subgroup of elements commuting with ``p``, computed by filtering
        the materialized element set; returned fully materialized."""
        if p.degree != self.degree:
            raise DegreeMismatch(f"degree {p.degree} vs {self.degree}")
        elems = tuple(g for g in self.elements() if g * p == p * g)
        sub = PermutationGroup(self.degree, elems, cap=self.cap)
        sub._elements = elems
        sub._element_set = frozenset(elems)
        return sub

    def center_order(self) -> int:
        """Order of the center (elements commuting with every generator)."""
        gens = self.generators
        return sum(
            1 for g in self.elements()
            if all(g * h == h * g for h in gens)
        )

    # -- conjugation orbits ------------------------------------------------

    def conjugacy_class(self, p: Permutation) -> list:
        """Orbit of ``p`` under conjugation by the group, in BFS order."""
        if p.degree != self.degree:
            raise DegreeMismatch(f"degree {p.degree} vs {self.degree}")
        seen = {p.images}
        queue = [p]
        qi = 0
        while qi < len(queue):
            e = queue[qi]
            qi += 1
            for g in self.generators:
                w = g.conj(e)
                if w.images not in seen:
                    if len(seen) >= self.cap:
                        raise CapExceeded(
                            f"conjugacy class exceeds cap {self.cap}")
                    seen.add(w.images)
                    queue.append(w)
        return queue

    # -- blocks and primitivity ---------------------------------------------

    def is_block(self, cells: Sequence[Iterable[int]]) -> bool:
        """True iff the partition ``cells`` is a block system: every
        generator maps each cell onto a cell."""
        cells = [frozenset(c) for c in cells]
        covered = sorted(p for c in cells for p in c)
        if covered != list(range(self.degree)):
            raise ValueError("cells do not partition the point set")
        cell_set = set(cells)
        for g in self.generators:
            for c in cells:
                if frozenset(g(p) for p in c) not in cell_set:
                    return False
        return True

    def _minimal_block_partition(self, a: int, b: int) -> list:
        """Classes of the finest block system merging ``a`` and ``b``.

        Classical refinement: start from {a, b}, repeatedly merge cells
        joined by generator images (union-find over points).
        """
        if not self.is_transitive():
            raise NotTransitive("blocks are defined for transitive actions")
        if a == b:
            raise ValueError("points must differ")
        n = self.degree
        parent = list(range(n))

        def find(x):
            root = x
            while parent[root] != root:
                root = parent[root]
            while parent[x] != root:
                parent[x], x = root, parent[x]
            return root

        parent[find(b)] = find(a)
        queue = [b]
        gens = [g.images for g in self.generators]
        while queue:
            gamma = queue.pop()
            delta = find(gamma)
            for g in gens:
                r1, r2 = find(g[gamma]), find(g[delta])
                if r1 != r2:
                    parent[r2] = r1
                    queue.append(r2)
        cells = {}
        for p in range(n):
            cells.setdefault(find(p), []).append(p)
        return sorted((frozenset(c) for c in cells.values()), key=min)

    def minimal_block(self, a: int, b: int) -> frozenset:
        """Smallest block containing ``{a, b}`` of some block system."""
        for cell in self._minimal_block_partition(a, b):
            if a in cell:
                return cell
        raise AssertionError("unreachable: partitions cover all points")

    def is_primitive(self) -> bool:
        """Only trivial block systems exist.

        Non-transitive groups report False (imprimitivity presumes a
        transitive action); degree-1 groups are primitive by convention.
        """
        if self.degree == 1:
            return True
        if not self.is_transitive():
            return False
        return all(
            len(self.minimal_block(0, b)) == self.degree
            for b in range(1, self.degree)
        )

    def block_system_witness(self) -> Optional[list]:
        """A minimal nontrivial block system, or None when primitive.

        Chooses the smallest block over ``minimal_block(0, b)`` (ties to the
        smallest ``b``) and returns its cell partition.
        """
        if self.degree == 1 or not self.is_transitive():
            return None
        best = None
        for b in range(1, self.degree):
            cells = self._minimal_block_partition(0, b)
            size = len(next(c for c in cells if 0 in c))
            if size == self.degree:
                continue
            if best is None or size < best[0]:
                best = (size, cells)
        return None if best is None else best[1]

    def __repr__(self):
        return (f"PermutationGroup(degree={self.degree}, "
                f"generators={len(self.generators)})")


def symmetric_group(degree: int, cap: int = DEFAULT_CAP) -> PermutationGroup:
    """The full symmetric group on ``degree`` points."""
    if degree <= 1:
        return PermutationGroup(degree, [], cap=cap)
    gens = [Permutation.from_cycles(degree, [[0, 1]])]
    if degree > 2:
        gens.append(Permutation.from_cycles(degree, [list(range(degree))]))
    return PermutationGroup(degree, gens, cap=cap)


def alternating_group(degree: int, cap: int = DEFAULT_CAP) -> PermutationGroup:
    """The alternating group, generated by the 3-cycles (0,1,k)."""
    if degree <= 2:
        return PermutationGroup(degree, [], cap=cap)
    gens = [
        Permutation.from_cycles(degree, [[0, 1, k]]) for k in range(2, degree)
    ]
    return PermutationGroup(degree, gens, cap=cap)


def all_partitions(n: int) -> list:
    """All partitions of ``n`` as decreasing tuples, in a fixed order."""

    def rec(remaining, maxpart):
        if remaining == 0:
            yield ()
            return
        for p in range(min(remaining, maxpart), 0, -1):
            for rest in rec(remaining - p, p):
                yield (p,) + rest

    return list(rec(n, n))


def canonical_of_cycle_type(degree: int, parts: Sequence[int]) -> Permutation:
    """The permutation with the given cycle lengths on consecutive points,
    longest cycle first; e.g. parts (2, 1) in degree 3 gives (1,2)(3)."""
    if sum(parts) != degree:
        raise ValueError(f"parts {parts!r} do not sum to degree {degree}")
    images = list(range(degree))
    pos = 0
    for l in sorted(parts, reverse=True):
        for k in range(l):
            images[pos + k] = pos + (k + 1) % l
        pos += l
    return Permutation(images)
