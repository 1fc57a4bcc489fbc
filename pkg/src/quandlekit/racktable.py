"""Finite racks as operation tables: validation, translations, isomorphism.

A rack on ``{0..n-1}`` is stored as an n-by-n table with ``table[x][y]`` the
result of ``x ▷ y`` (row x = the left translation by x, matching the map
``y -> x ▷ y``).  Axioms checked:

  A1  x ▷ (y ▷ z) == (x ▷ y) ▷ (x ▷ z)      (left self-distributivity)
  A2  every row is a bijection               (left translations invertible)
  A3  x ▷ x == x                             (quandle condition)

A table passing A1 and A2 is a rack; passing A3 as well makes it a quandle.
Validation reports every violating witness, not just the first.

Text formats (1-based, '#' starts a comment):

  RTBL:  ``rtbl <n>`` then n lines of n space-separated integers
         (line x lists the images of the translation by x).
  PERM:  ``perm <n>`` then one disjoint-cycle permutation per line;
         fixed points are optional on input.

Both formats round-trip bit-exactly through their writers.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Optional, Sequence

from . import _kernels
from .errors import DegreeMismatch, NotARack, ParseError
from .perm import Permutation


@dataclass(frozen=True)
class AxiomWitness:
    """One failed axiom instance: the axiom name and the violating tuple
    (``(x, y, z)`` for A1, ``(x,)`` for A2/A3; 0-based)."""
    axiom: str
    at: tuple

    def describe(self) -> str:
        pts = ",".join(str(p + 1) for p in self.at)
        return f"{self.axiom} fails at ({pts})"


@dataclass(frozen=True)
class AxiomDiagnosis:
    """Validation verdict plus all collected witnesses."""
    verdict: str  # "quandle" | "rack" | "not-a-rack"
    witnesses: tuple

    @property
    def is_rack(self) -> bool:
        return self.verdict in ("rack", "quandle")

    @property
    def is_quandle(self) -> bool:
        return self.verdict == "quandle"

    def witnesses_for(self, axiom: str) -> list:
        return [w for w in self.witnesses if w.axiom == axiom]


def validate(table: Sequence[Sequence[int]]) -> AxiomDiagnosis:
    """Full axiom scan of a square table with entries in ``0..n-1``.

    Out-of-range entries are a usage error and raise ``ValueError``; axiom
    failures are collected into the diagnosis.
    """
    n = len(table)
    rows = [tuple(r) for r in table]
    for x, row in enumerate(rows):
        if len(row) != n:
            raise ValueError(f"row {x + 1} has length {len(row)}, expected {n}")
        for e in row:
            if not 0 <= e < n:
                raise ValueError(f"entry {e} in row {x + 1} out of range 0..{n - 1}")
    witnesses = []
    for x, row in enumerate(rows):
        if len(set(row)) != n:
            witnesses.append(AxiomWitness("A2", (x,)))
    witnesses.extend(
        AxiomWitness("A1", t) for t in _kernels.a1_violations(rows)
    )
    a3 = [AxiomWitness("A3", (x,)) for x in range(n) if rows[x][x] != x]
    rack_ok = not witnesses
    witnesses.extend(a3)
    if not rack_ok:
        verdict = "not-a-rack"
    elif a3:
        verdict = "rack"
    else:
        verdict = "quandle"
    return AxiomDiagnosis(verdict, tuple(witnesses))


class RackTable:
    """An immutable operation table together with its validation verdict."""

    __slots__ = ("n", "table", "diagnosis", "_rows", "_orbits")

    def __init__(self, table: Sequence[Sequence[int]],
                 diagnosis: Optional[AxiomDiagnosis] = None):
        self.table = tuple(tuple(r) for r in table)
        self.n = len(self.table)
        self.diagnosis = diagnosis if diagnosis is not None else validate(self.table)
        self._rows = None
        self._orbits = None

    # -- constructors -----------------------------------------------------

    @classmethod
    def from_permutation_rows(cls, rows: Sequence[Permutation]) -> "RackTable":
        """Table with row x the image array of ``rows[x]``; validated, with
        the diagnosis attached (axiom failure is reported, never silent)."""
        n = len(rows)
        for p in rows:
            if p.degree != n:
                raise DegreeMismatch(
                    f"need {n} rows of degree {n}, got degree {p.degree}")
        return cls([p.images for p in rows])

    # -- basic access -------------------------------------------------------

    @property
    def kind(self) -> str:
        return self.diagnosis.verdict

    @property
    def is_rack(self) -> bool:
        return self.diagnosis.is_rack

    @property
    def is_quandle(self) -> bool:
        return self.diagnosis.is_quandle

    def op(self, x: int, y: int) -> int:
        """The product ``x ▷ y``."""
        return self.table[x][y]

    def _require_rack(self):
        if not self.is_rack:
            bad = "; ".join(w.describe() for w in self.diagnosis.witnesses[:4])
            raise NotARack(f"table is not a rack: {bad}")

    def phi(self, x: int) -> Permutation:
        """The left translation by ``x`` as a permutation."""
        self._require_rack()
        rows = self._phi_rows()
        return rows[x]

    def _phi_rows(self):
        if self._rows is None:
            self._rows = tuple(Permutation(r) for r in self.table)
        return self._rows

    def translations(self) -> tuple:
        """All left translations, indexed by acting element."""
        self._require_rack()
        return self._phi_rows()

    def distinct_translations(self) -> tuple:
        """Distinct translation permutations in first-occurrence order."""
        self._require_rack()
        seen = {}
        for p in self._phi_rows():
            if p.images not in seen:
                seen[p.images] = p
        return tuple(seen.values())

    def inner_orbit_partition(self) -> list:
        """Orbits of the point set under all rows (frozensets, by least point)."""
        if self._orbits is None:
            remaining = set(range(self.n))
            out = []
            while remaining:
                start = min(remaining)
                seen = {start}
                frontier = [start]
                while frontier:
                    p = frontier.pop()
                    for row in self.table:
                        q = row[p]
                        if q not in seen:
                            seen.add(q)
                            frontier.append(q)
                out.append(frozenset(seen))
                remaining -= seen
            self._orbits = out
        return self._orbits

    def relabel(self, sigma: Permutation) -> "RackTable":
        """The isomorphic table under the point relabeling ``sigma``."""
        if sigma.degree != self.n:
            raise DegreeMismatch(f"degree {sigma.degree} vs {self.n}")
        inv = sigma.inverse()
        return RackTable(
            [
                [sigma(self.table[inv(x)][inv(y)]) for y in range(self.n)]
                for x in range(self.n)
            ]
        )

    def __eq__(self, other):
        if not isinstance(other, RackTable):
            return NotImplemented
        return self.table == other.table

    def __hash__(self):
        return hash(self.table)

    def __repr__(self):
        return f"RackTable(n={self.n}, kind={self.kind})"


# -- isomorphism ------------------------------------------------------------


@dataclass(frozen=True)
class IsoWitness:
    """Result of an isomorphism search; ``bijection`` maps X-points to
    Y-points and satisfies f(x ▷ y) = f(x) ▷' f(y) when found."""
    found: bool
    bijection: Optional[Permutation] = None


def _element_invariant(X: RackTable, x: int, orbit_size) -> tuple:
    return (
        X.phi(x).cycle_type().parts,
        X.table[x][x] == x,
        orbit_size[x],
    )


def _orbit_size_map(X: RackTable) -> list:
    sizes = [0] * X.n
    for orb in X.inner_orbit_partition():
        for p in orb:
            sizes[p] = len(orb)
    return sizes


def fingerprint(X: RackTable) -> str:
    """Relabeling-invariant key: multiset of per-element invariants plus the
    orbit-size multiset.  Equal for isomorphic racks; used to prune searches
    (it is not a canonical form, so equal keys still need a witness search).
    """
    X._require_rack()
    sizes = _orbit_size_map(X)
    items = sorted(
        f"{X.phi(x).cycle_type()}|{'q' if X.table[x][x] == x else 'r'}|{sizes[x]}"
        for x in range(X.n)
    )
    orbit_sizes = sorted(len(o) for o in X.inner_orbit_partition())
    return f"n={X.n};elems=[{';'.join(items)}];orbits={orbit_sizes}"


def is_homomorphic_image(X: RackTable, Y: RackTable, f: Permutation) -> bool:
    """Full scan: f(x ▷ y) == f(x) ▷' f(y) for all x, y."""
    return all(
        f(X.table[x][y]) == Y.table[f(x)][f(y)]
        for x in range(X.n)
        for y in range(X.n)
    )

def _isomorphism_search(X: RackTable, Y: RackTable, collect: bool = False) -> list:
    """Backtracking search for table isomorphisms X -> Y.

    Candidate images must share the source element's invariant (translation
    cycle type, idempotence flag, inner orbit size); source elements are
    processed smallest invariant class first.  Returns the solutions found
    (all of them with ``collect``, else at most one).
    """
    X._require_rack()
    Y._require_rack()
    if X.n != Y.n:
        return []
    n = X.n
    sx, sy = _orbit_size_map(X), _orbit_size_map(Y)
    inv_x = [_element_invariant(X, x, sx) for x in range(n)]
    inv_y = [_element_invariant(Y, y, sy) for y in range(n)]
    classes_y = {}
    for y in range(n):
        classes_y.setdefault(inv_y[y], []).append(y)
    classes_x = {}
    for x in range(n):
        classes_x.setdefault(inv_x[x], []).append(x)
    if {k: len(v) for k, v in classes_x.items()} != {
        k: len(v) for k, v in classes_y.items()
    }:
        return []

    # assignment order: smallest invariant class first, then by point
    order = sorted(range(n), key=lambda x: (len(classes_x[inv_x[x]]), x))
    pos_of = {x: i for i, x in enumerate(order)}
    # triples (a, b) with X.table[a][b] == w, for deferred checks
    preimage = [[] for _ in range(n)]
    for a in range(n):
        for b in range(n):
            preimage[X.table[a][b]].append((a, b))

    f = [-1] * n
    used = [False] * n
    solutions = []

    def consistent(x: int) -> bool:
        assigned = order[: pos_of[x] + 1]
        for a in assigned:
            w = X.table[x][a]
            if f[w] >= 0 and Y.table[f[x]][f[a]] != f[w]:
                return False
            w = X.table[a][x]
            if f[w] >= 0 and Y.table[f[a]][f[x]] != f[w]:
                return False
        for a, b in preimage[x]:
            if f[a] >= 0 and f[b] >= 0 and Y.table[f[a]][f[b]] != f[x]:
                return False
        return True

    def rec(i: int) -> bool:
        if i == n:
            solutions.append(Permutation(f))
            return not collect
        x = order[i]
        for y in classes_y[inv_x[x]]:
            if used[y]:
                continue
            f[x] = y
            used[y] = True
            if consistent(x) and rec(i + 1):
                return True
            f[x] = -1
            used[y] = False
        return False

    rec(0)
    return solutions


def is_isomorphic(X: RackTable, Y: RackTable) -> IsoWitness:
    """Search for an isomorphism; racks of unequal size are simply not
    isomorphic (no error)."""
    sols = _isomorphism_search(X, Y)
    if sols:
        return IsoWitness(True, sols[0])
    return IsoWitness(False)


# -- text formats -------------------------------------------------------------


def _content_lines(text: str):
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if line:
            yield lineno, line


def parse_rtbl(text: str) -> RackTable:
    lines = list(_content_lines(text))
    if not lines:
        raise ParseError("empty RTBL input")
    lineno, header = lines[0]
    parts = header.split()
    if len(parts) != 2 or parts[0] != "rtbl":
        raise ParseError(f"expected 'rtbl <n>' header, got {header!r}", lineno)
    try:
        n = int(parts[1])
    except ValueError:
        raise ParseError(f"bad size {parts[1]!r}", lineno) from None
    if n < 1:
        raise ParseError(f"size must be positive, got {n}", lineno)
    if len(lines) - 1 != n:
        raise ParseError(f"expected {n} table rows, found {len(lines) - 1}")
    table = []
    for lineno, line in lines[1:]:
        try:
            row = [int(tok) - 1 for tok in line.split()]
        except ValueError:
            raise ParseError(f"bad table row {line!r}", lineno) from None
        if len(row) != n:
            raise ParseError(f"row has {len(row)} entries, expected {n}", lineno)
        for e in row:
            if not 0 <= e < n:
                raise ParseError(f"entry {e + 1} out of range 1..{n}", lineno)
        table.append(row)
    return RackTable(table)


def emit_rtbl(X: RackTable, comment: Optional[str] = None) -> str:
    out = []
    if comment:
        out.extend(f"# {line}" for line in comment.splitlines())
    out.append(f"rtbl {X.n}")
    out.extend(
        " ".join(str(e + 1) for e in row) for row in X.table
    )
    return "\n".join(out) + "\n"


def parse_perm_file(text: str) -> tuple:
    """Parse a PERM file into ``(degree, [Permutation, ...])``."""
    lines = list(_content_lines(text))
    if not lines:
        raise ParseError("empty PERM input")
    lineno, header = lines[0]
    parts = header.split()
    if len(parts) != 2 or parts[0] != "perm":
        raise ParseError(f"expected 'perm <n>' header, got {header!r}", lineno)
    try:
        n = int(parts[1])
    except ValueError:
        raise ParseError(f"bad degree {parts[1]!r}", lineno) from None
    perms = []
    for lineno, line in lines[1:]:
        try:
            perms.append(Permutation.parse(line, n))
        except ParseError as exc:
            raise ParseError(str(exc), lineno) from None
    return n, perms


def emit_perm_file(degree: int, perms: Iterable[Permutation],
                   comment: Optional[str] = None) -> str:
    out = []
    if comment:
        out.extend(f"# {line}" for line in comment.splitlines())
    out.append(f"perm {degree}")
    out.extend(p.cycle_string() for p in perms)
    return "\n".join(out) + "\n"


def parse_rack_file(text: str) -> RackTable:
    """Dispatch on the header: RTBL is read directly, PERM rows become the
    translation maps of the table."""
    for _, line in _content_lines(text):
        head = line.split()[0]
        break
    else:
        raise ParseError("empty input")
    if head == "rtbl":
        return parse_rtbl(text)
    if head == "perm":
        degree, perms = parse_perm_file(text)
        if len(perms) != degree:
            raise ParseError(
                f"PERM rack input needs {degree} permutations, found {len(perms)}")
        return RackTable.from_permutation_rows(perms)
    raise ParseError(f"unknown format header {head!r}")
