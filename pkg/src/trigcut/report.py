"""Structured pass/fail records for certification scans.

A :class:`CertificateReport` carries enough context (seed, grid, per-point
witnesses) that a failure can be reproduced and audited rather than just
observed. Serialization is line-oriented text with a versioned header so
reports diff cleanly in CI.
"""

from __future__ import annotations

from dataclasses import dataclass

FORMAT_HEADER = "trigcut-certificate v1"


def fmt(value) -> str:
    """Render a number so a float64 round-trips exactly (17 significant digits)."""
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, int):
        return str(value)
    return "%.17g" % float(value)


@dataclass(frozen=True)
class CertificateReport:
    """Outcome of a property scan with witnesses for every failure.

    ``point_values`` holds one summary number per scanned point (typically a
    minimum eigenvalue or coefficient), ``stats`` named aggregates, and
    ``witnesses`` one human-readable line per violated check.
    """

    kind: str
    passed: bool
    seed: int | None = None
    grid: tuple[float, ...] = ()
    point_values: tuple[float, ...] = ()
    stats: tuple[tuple[str, float], ...] = ()
    witnesses: tuple[str, ...] = ()

    def to_text(self) -> str:
        lines = [FORMAT_HEADER]
        lines.append(f"kind {self.kind}")
        lines.append(f"passed {fmt(self.passed)}")
        if self.seed is not None:
            lines.append(f"seed {self.seed}")
        if self.grid:
            lines.append("grid " + " ".join(fmt(g) for g in self.grid))
        for name, value in self.stats:
            lines.append(f"stat {name} {fmt(value)}")
        lines.append(f"points {len(self.point_values)}")
        for i, v in enumerate(self.point_values):
            lines.append(f"point {i} {fmt(v)}")
        lines.append(f"witnesses {len(self.witnesses)}")
        for w in self.witnesses:
            lines.append(f"witness {w}")
        return "\n".join(lines) + "\n"
