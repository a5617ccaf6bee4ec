from __future__ import annotations

from dataclasses import asdict, dataclass, field
from typing import Any


@dataclass
class VerificationReport:
    """Outcome of a certificate or combinatorial check.

    ``failures`` itemizes every violation found; ``details`` carries whatever
    summary data the particular check produces (multiplicity tables, counts).
    """

    kind: str
    valid: bool
    failures: list[dict[str, Any]] = field(default_factory=list)
    details: dict[str, Any] = field(default_factory=dict)

    def __bool__(self) -> bool:
        return self.valid

    def to_dict(self) -> dict[str, Any]:
        return asdict(self)
