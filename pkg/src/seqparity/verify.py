"""Empirical verification of parity relations against the master sequence.

Every catalogued claim is checked term by term over a configurable range, and
independently of the claim a best-fitting (shift, complement) pair is searched
for.  Where the recorded claim disagrees with the data by an index shift, the
report shows both; it never substitutes the fit for the claim.
"""

from __future__ import annotations

import time
from dataclasses import dataclass, field

from .catalogue import (
    BIGNUM_HEAVY,
    ParityRelation,
    SequenceDescriptor,
    parity_catalogue,
)
from .parity import master_prefix

MAX_SHIFT = 4
MISMATCH_SAMPLE_CAP = 10


def _sequence_parities(seq: SequenceDescriptor, n_max: int) -> list[int]:
    if n_max < seq.offset:
        raise ValueError(f"n_max {n_max} is below the offset of {seq.id}")
    return [value & 1 for value in seq.terms(n_max - seq.offset + 1)]


def _mismatches(
    parities: list[int],
    offset: int,
    rel: ParityRelation,
    n_max: int,
    m_bits: list[int],
) -> list[int]:
    # indices with n + shift < 0 are outside the master sequence's domain
    start = max(offset, -rel.shift)
    want = 1 if rel.complement else 0
    return [
        n
        for n in range(start, n_max + 1)
        if parities[n - offset] != want ^ m_bits[n + rel.shift]
    ]


def check_relation(
    seq: SequenceDescriptor, rel: ParityRelation, n_max: int
) -> list[int]:
    """All n in [max(offset, -shift), n_max] where the relation fails."""
    parities = _sequence_parities(seq, n_max)
    m_bits = master_prefix(n_max + abs(rel.shift) + 1)
    return _mismatches(parities, seq.offset, rel, n_max, m_bits)


def _candidate_relations(max_shift: int) -> list[ParityRelation]:
    return [
        ParityRelation(shift, complement)
        for shift in range(-max_shift, max_shift + 1)
        for complement in (False, True)
    ]


def fit_relation(
    seq: SequenceDescriptor, n_max: int, max_shift: int = MAX_SHIFT
) -> ParityRelation | None:
    """The unique relation with zero mismatches on [offset, n_max], if any.

    Scans shifts -max_shift..+max_shift with and without complement; returns
    None when no candidate fits or when several do (ambiguity is surfaced,
    never resolved silently).
    """
    if n_max < seq.offset + 2 * max_shift:
        raise ValueError(
            f"n_max {n_max} too small to fit relations for {seq.id} "
            f"(need at least offset + {2 * max_shift})"
        )
    parities = _sequence_parities(seq, n_max)
    m_bits = master_prefix(n_max + max_shift + 1)
    hits = [
        rel
        for rel in _candidate_relations(max_shift)
        if not _mismatches(parities, seq.offset, rel, n_max, m_bits)
    ]
    return hits[0] if len(hits) == 1 else None


@dataclass
class SequenceCheck:
    """Outcome of checking one sequence: the claim's fate and the fitted relation."""

    sequence_id: str
    offset: int
    n_max: int
    claimed: ParityRelation | None
    claimed_mismatch_count: int = 0
    claimed_mismatch_sample: list[int] = field(default_factory=list)
    fitted: ParityRelation | None = None
    wall_time: float = 0.0
    error: str | None = None

    @property
    def claimed_passed(self) -> bool | None:
        if self.claimed is None or self.error is not None:
            return None
        return self.claimed_mismatch_count == 0

    def to_record(self) -> dict:
        def rel_dict(rel: ParityRelation | None) -> dict | None:
            if rel is None:
                return None
            return {
                "shift": rel.shift,
                "complement": rel.complement,
                "text": rel.describe(),
            }

        status = self.claimed_passed
        return {
            "id": self.sequence_id,
            "range": [self.offset, self.n_max],
            "claimed": rel_dict(self.claimed),
            "claimed_status": None if status is None else ("PASS" if status else "FAIL"),
            "fitted": rel_dict(self.fitted),
            "mismatch_count": self.claimed_mismatch_count,
            "mismatch_sample": list(self.claimed_mismatch_sample),
            "error": self.error,
        }

    def to_line(self) -> str:
        if self.error is not None:
            return f"{self.sequence_id}  error: {self.error}"
        status = "PASS" if self.claimed_passed else "FAIL"
        claimed = self.claimed.describe() if self.claimed else "none"
        if self.fitted is None:
            fitted = "fitted: none"
        else:
            fitted = (
                f"fitted: shift={self.fitted.shift} "
                f"complement={'yes' if self.fitted.complement else 'no'} "
                f"[{self.fitted.describe()}]"
            )
        return (
            f"{self.sequence_id}  claimed: {status} [{claimed}]  {fitted}  "
            f"range: {self.offset}..{self.n_max}  "
            f"mismatches: {self.claimed_mismatch_count}"
        )


@dataclass
class VerificationReport:
    """Per-sequence results in catalogue order, plus the ranges used."""

    n_max_cheap: int
    n_max_heavy: int
    checks: list[SequenceCheck] = field(default_factory=list)

    def all_fitted(self) -> bool:
        return all(c.fitted is not None and c.error is None for c in self.checks)

    def failed_claims(self) -> list[str]:
        return [c.sequence_id for c in self.checks if c.claimed_passed is False]

    def to_text(self) -> str:
        return "\n".join(c.to_line() for c in self.checks) + "\n"

    def to_records(self) -> list[dict]:
        return [c.to_record() for c in self.checks]


def _check_sequence(seq: SequenceDescriptor, n_max: int) -> SequenceCheck:
    started = time.perf_counter()
    check = SequenceCheck(
        sequence_id=seq.id, offset=seq.offset, n_max=n_max, claimed=seq.claimed
    )
    try:
        parities = _sequence_parities(seq, n_max)
        m_bits = master_prefix(n_max + MAX_SHIFT + 1)
        if seq.claimed is not None:
            bad = _mismatches(parities, seq.offset, seq.claimed, n_max, m_bits)
            check.claimed_mismatch_count = len(bad)
            check.claimed_mismatch_sample = bad[:MISMATCH_SAMPLE_CAP]
        hits = [
            rel
            for rel in _candidate_relations(MAX_SHIFT)
            if not _mismatches(parities, seq.offset, rel, n_max, m_bits)
        ]
        check.fitted = hits[0] if len(hits) == 1 else None
    except Exception as exc:  # aggregate failures instead of aborting the run
        check.error = f"{type(exc).__name__}: {exc}"
    check.wall_time = time.perf_counter() - started
    return check


def verify_sequences(
    sequences: list[SequenceDescriptor], n_max_cheap: int, n_max_heavy: int
) -> VerificationReport:
    """Check and fit each given sequence, choosing the range by cost class."""
    if n_max_cheap < 32 or n_max_heavy < 32:
        raise ValueError("verification ranges must be at least 32")
    report = VerificationReport(n_max_cheap=n_max_cheap, n_max_heavy=n_max_heavy)
    for seq in sequences:
        n_max = n_max_heavy if seq.cost_class == BIGNUM_HEAVY else n_max_cheap
        report.checks.append(_check_sequence(seq, n_max))
    return report


def verify_all(n_max_cheap: int, n_max_heavy: int) -> VerificationReport:
    """Run every catalogued parity claim plus a relation fit for each sequence."""
    return verify_sequences(parity_catalogue(), n_max_cheap, n_max_heavy)
