"""Profile-divisibility verdicts and their group-theoretic evidence.

The central question: in the profile of a finite connected rack, does every
cycle length divide the largest one (Hayashi's conjecture)?  Two proved
special cases act as harnesses here -- a primitive inner action forces the
divisibility, and so does being a connected conjugacy class of a symmetric
group.  A computed violation of either harness therefore aborts with
:class:`TheoremViolation` (it can only be an implementation bug), while a
violation outside them would be a genuine counterexample candidate and is
reported as data.

CLI exit codes derive from these outcomes:

  0  all checks pass
  1  counterexample candidate (connected rack failing the divisibility)
  2  theorem falsification (bug; never a discovery)
  3  resource cap exceeded
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .errors import NotConnected, TheoremViolation
from .perm import DEFAULT_CAP, Permutation
from .racktable import RackTable
from . import analysis
from . import constructors
from .analysis import Profile


@dataclass(frozen=True)
class HayashiVerdict:
    """Divisibility outcome for one profile: ``violations`` lists the
    (length, largest) pairs where the length does not divide the largest."""
    holds: bool
    violations: tuple

    def __str__(self):
        if self.holds:
            return "holds"
        pairs = ", ".join(f"{a} does not divide {b}" for a, b in self.violations)
        return f"fails ({pairs})"


def hayashi_check(p) -> HayashiVerdict:
    """Check every profile length against the largest.  Accepts a Profile
    or a CycleType; racks (least length > 1) use the same rule."""
    cycle_type = p.cycle_type if isinstance(p, Profile) else p
    largest = cycle_type.largest
    violations = tuple(
        (l, largest) for l in cycle_type.lengths if largest % l
    )
    return HayashiVerdict(not violations, violations)


@dataclass(frozen=True)
class IntersectionEvidence:
    """For a fixed base point x: the order of the cyclic group F generated
    by the translation of x, and for every point y the order of the
    intersection of F with the conjugate by the translation of y of the
    centralizer of F in the inner group.  A ``trivial_witness`` is a y whose
    intersection is just the identity; its existence forces the divisibility
    verdict (and is forced by it on faithful racks)."""
    base_x: int
    F_order: int
    witnesses: tuple  # (y, intersection_order) for every y
    trivial_witness: Optional[int]


def intersection_evidence(X: RackTable, x: int,
                          cap: int = DEFAULT_CAP) -> IntersectionEvidence:
    """Materialize the inner group, take the centralizer H of the base
    translation, and intersect F with every translation-conjugate of H by
    membership tests (F has at most profile-largest many elements)."""
    if not analysis.is_connected(X):
        raise NotConnected("intersection evidence concerns connected racks")
    G = analysis.inner_group(X, cap=cap)
    px = X.phi(x)
    H = G.centralizer(px).element_set()
    F = [Permutation.identity(X.n)]
    q = px
    while not q.is_identity():
        F.append(q)
        q = q * px
    witnesses = []
    trivial = None
    for y in range(X.n):
        py = X.phi(y)
        pyinv = py.inverse()
        order = sum(1 for f in F if (pyinv * f) * py in H)
        if len(F) % order:
            raise TheoremViolation(
                f"intersection order {order} does not divide |F| = {len(F)}")
        witnesses.append((y, order))
        if order == 1 and trivial is None:
            trivial = y
    return IntersectionEvidence(x, len(F), tuple(witnesses), trivial)


@dataclass(frozen=True)
class CrosscheckResult:
    """The two implications, evaluated literally over every base point:
    ``forward_ok`` -- a trivial witness forces the divisibility verdict;
    ``converse_ok`` -- on faithful racks the verdict forces a witness
    (None when the rack is not faithful, as the hypothesis is absent)."""
    forward_ok: bool
    converse_ok: Optional[bool]


def divisibility_crosscheck(X: RackTable,
                            cap: int = DEFAULT_CAP) -> CrosscheckResult:
    verdict = hayashi_check(analysis.profile(X))
    faithful = analysis.is_faithful(X)
    forward_ok = True
    converse_ok = True if faithful else None
    for x in range(X.n):
        ev = intersection_evidence(X, x, cap=cap)
        if ev.trivial_witness is not None and not verdict.holds:
            forward_ok = False
        if faithful and verdict.holds and ev.trivial_witness is None:
            converse_ok = False
    return CrosscheckResult(forward_ok, converse_ok)


@dataclass(frozen=True)
class PrimitiveCheckResult:
    primitive: bool
    hayashi: Optional[HayashiVerdict]  # None when the hypothesis is not met

    @property
    def vacuous(self) -> bool:
        return not self.primitive


def primitive_divisibility_check(X: RackTable,
                                 cap: int = DEFAULT_CAP) -> PrimitiveCheckResult:
    """If the inner action is primitive, the divisibility verdict must hold;
    a computed failure falsifies a proved statement and raises."""
    report = analysis.inner_action_primitivity(X, cap=cap)
    if not report.primitive:
        return PrimitiveCheckResult(False, None)
    verdict = hayashi_check(analysis.profile(X))
    if not verdict.holds:
        raise TheoremViolation(
            "primitive connected rack failing profile divisibility: "
            f"{analysis.profile(X)}")
    return PrimitiveCheckResult(True, verdict)


def symmetric_class_divisibility_check(d: int,
                                       bound: int = constructors.CLASS_SCAN_BOUND,
                                       cap: int = DEFAULT_CAP) -> list:
    """Scan the symmetric-group classes of degree d and assert the
    divisibility verdict on every connected one."""
    records = constructors.symmetric_class_scan(d, bound=bound, cap=cap)
    for rec in records:
        if rec.connected and not rec.hayashi.holds:
            raise TheoremViolation(
                f"connected symmetric-group class {rec.parts} of degree {d} "
                f"fails divisibility: {rec.hayashi}")
    return records


# -- aggregated report -----------------------------------------------------------


@dataclass(frozen=True)
class LambdaPartCheck:
    """Occurrence counts in the length-k translation-part multiset: uniform
    iff every point occurs ``expected`` times."""
    k: int
    expected: int
    uniform: bool


@dataclass(frozen=True)
class AnalysisReport:
    """Aggregated verdicts for one rack, with stable field order; analyses
    whose prerequisites fail are recorded in ``skipped``."""
    n: int
    kind: str
    connected: bool
    faithful: bool
    fiber_size: Optional[int]
    profile: Optional[Profile]
    least_length_above_one: Optional[bool]
    primitive: Optional[bool]
    block_witness: Optional[tuple]
    hayashi: Optional[HayashiVerdict]
    evidence: Optional[IntersectionEvidence]
    lambda_parts: Optional[tuple]
    k_tilde: Optional[tuple]
    skipped: tuple  # (analysis name, reason) pairs

    def to_json_dict(self) -> dict:
        blocks = None
        if self.block_witness is not None:
            blocks = [sorted(p + 1 for p in cell) for cell in self.block_witness]
        evidence = None
        if self.evidence is not None:
            evidence = {
                "base": self.evidence.base_x + 1,
                "cyclic_order": self.evidence.F_order,
                "intersection_orders": [
                    [y + 1, o] for y, o in self.evidence.witnesses
                ],
                "trivial_witness": (
                    None if self.evidence.trivial_witness is None
                    else self.evidence.trivial_witness + 1
                ),
            }
        lam = None
        if self.lambda_parts is not None:
            lam = [
                {"length": c.k, "count": c.expected, "uniform": c.uniform}
                for c in self.lambda_parts
            ]
        ktilde = None
        if self.k_tilde is not None:
            ktilde = [
                {
                    "k": d.k,
                    "cells": [sorted(p + 1 for p in cell) for cell in d.cells],
                    "partition": d.is_partition,
                    "block_system": d.is_block_system,
                }
                for d in self.k_tilde
            ]
        return {
            "n": self.n,
            "kind": self.kind,
            "connected": self.connected,
            "faithful": self.faithful,
            "fiber_size": self.fiber_size,
            "profile": None if self.profile is None else str(self.profile),
            "least_length_above_one": self.least_length_above_one,
            "primitive": self.primitive,
            "block_witness": blocks,
            "hayashi": None if self.hayashi is None else str(self.hayashi),
            "evidence": evidence,
            "lambda_parts": lam,
            "k_tilde": ktilde,
            "skipped": {name: reason for name, reason in self.skipped},
        }

    def to_text(self) -> str:
        skipped = dict(self.skipped)

        def line(label, value, key=None):
            if key is not None and key in skipped:
                return f"{label}: n/a ({skipped[key]})"
            return f"{label}: {value}"

        out = [
            f"n: {self.n}",
            f"kind: {self.kind}",
            f"connected: {'yes' if self.connected else 'no'}",
            f"faithful: {'yes' if self.faithful else 'no'}",
            f"fiber size: {self.fiber_size if self.fiber_size is not None else 'non-uniform'}",
            line("profile", self.profile, "profile"),
        ]
        if self.least_length_above_one:
            out.append("note: rack profile with least length above 1")
        if "primitive" in skipped:
            out.append(f"primitive: n/a ({skipped['primitive']})")
        else:
            out.append(f"primitive: {'yes' if self.primitive else 'no'}")
            if self.block_witness is not None:
                cells = " ".join(
                    "{" + ",".join(str(p + 1) for p in sorted(cell)) + "}"
                    for cell in self.block_witness
                )
                out.append(f"block witness: {cells}")
        out.append(line("hayashi", self.hayashi, "hayashi"))
        if self.evidence is not None:
            w = self.evidence.trivial_witness
            out.append(
                "trivial-intersection witness: "
                + (f"element {w + 1}" if w is not None else "none")
                + f" (cyclic order {self.evidence.F_order})"
            )
        elif "evidence" in skipped:
            out.append(f"trivial-intersection witness: n/a ({skipped['evidence']})")
        if self.lambda_parts is not None:
            for c in self.lambda_parts:
                out.append(
                    f"length-{c.k} part: each point {c.expected}x, "
                    f"uniform: {'yes' if c.uniform else 'NO'}"
                )
        if self.k_tilde is not None:
            for d in self.k_tilde:
                if not d.is_partition:
                    out.append(f"k~={d.k}: parts do not partition the points")
                else:
                    out.append(
                        f"k~={d.k}: partition into {len(d.cells)} cells, "
                        f"block system: {'yes' if d.is_block_system else 'no'}"
                    )
        return "\n".join(out) + "\n"


def full_report(X: RackTable, cap: int = DEFAULT_CAP) -> AnalysisReport:
    """Aggregate every analysis that applies to the rack; prerequisites that
    fail are recorded as skips, harness violations raise."""
    X._require_rack()
    connected = analysis.is_connected(X)
    faithful = analysis.is_faithful(X)
    fib = analysis.fibers(X)
    skipped = []
    prof = None
    least_above_one = None
    verdict = None
    primitive = None
    witness_blocks = None
    evidence = None
    lambda_parts = None
    k_tilde = None
    if connected:
        prof = analysis.profile(X)
        least_above_one = prof.lengths[0] > 1
        verdict = hayashi_check(prof)
        prim = analysis.inner_action_primitivity(X, cap=cap)
        primitive = prim.primitive
        witness_blocks = prim.witness_blocks
        if primitive and not verdict.holds:
            raise TheoremViolation(
                "primitive connected rack failing profile divisibility")
        evidence = intersection_evidence(X, 0, cap=cap)
        lambda_parts = tuple(
            LambdaPartCheck(
                k,
                analysis.expected_lambda_part_count(X, k),
                _lambda_part_uniform(X, k),
            )
            for k in prof.lengths
        )
        k_tilde = tuple(analysis.k_tilde_block_diagnostic(X))
    else:
        reason = "rack is not connected"
        skipped = [
            ("profile", reason),
            ("hayashi", reason),
            ("primitive", reason),
            ("evidence", reason),
            ("lambda_parts", reason),
            ("k_tilde", reason),
        ]
    return AnalysisReport(
        n=X.n,
        kind=X.kind,
        connected=connected,
        faithful=faithful,
        fiber_size=fib.f,
        profile=prof,
        least_length_above_one=least_above_one,
        primitive=primitive,
        block_witness=witness_blocks,
        hayashi=verdict,
        evidence=evidence,
        lambda_parts=lambda_parts,
        k_tilde=k_tilde,
        skipped=tuple(skipped),
    )


def _lambda_part_uniform(X: RackTable, k: int) -> bool:
    counts = analysis.lambda_part(X, k)
    expected = analysis.expected_lambda_part_count(X, k)
    return all(counts.get(p, 0) == expected for p in range(X.n))
