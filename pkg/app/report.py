"""Отчёт о прогоне сценария: записи шагов, частоты, текстовый и JSON-вывод."""

from __future__ import annotations

import json
from dataclasses import dataclass, field

from app.bridge import ObservationEvent
from app.constants import REPORT_HEADER
from app.derivation import Derivation, NotDerivable, Observer
from app.formulas import ClassicalStatus, Judgement, render_judgement
from app.utils import format_amplitudes, format_complex, round_real

# Ключи подсчёта для шагов-запросов
DERIVABLE_KEY = "derivable"
NOT_DERIVABLE_KEY = "not-derivable"


@dataclass(frozen=True)
class StepRecord:
    """Результат одного шага в одном испытании."""

    index: int
    directive: str
    judgement: Judgement
    line: int | None = None
    observer: Observer | None = None
    event: ObservationEvent | None = None
    derivation: Derivation | NotDerivable | None = None
    classical_status: ClassicalStatus | None = None

    @property
    def tally_key(self) -> str:
        """По чему считаются частоты при trials > 1."""
        if self.event is not None:
            return render_judgement(self.judgement)
        if self.derivation is not None:
            return DERIVABLE_KEY if self.derivation.derivable else NOT_DERIVABLE_KEY
        if self.classical_status is not None:
            return self.classical_status.value
        return render_judgement(self.judgement)

    def to_dict(self) -> dict:
        data = {
            "index": self.index,
            "kind": self.directive,
            "line": self.line,
            "judgement": render_judgement(self.judgement),
        }
        if self.observer is not None:
            data["observer"] = self.observer.value
        if self.event is not None:
            data.update(self.event.to_dict())
        if self.derivation is not None:
            data["derivable"] = self.derivation.derivable
            data["derivation"] = self.derivation.to_dict()
        if self.classical_status is not None:
            data["classicalStatus"] = self.classical_status.value
        return data


@dataclass(frozen=True)
class Report:
    seed: int
    trials: int
    steps: tuple[StepRecord, ...] = ()
    # индекс шага (строкой) → ключ → доля испытаний
    frequencies: dict[str, dict[str, float]] = field(default_factory=dict)

    def to_dict(self) -> dict:
        data = {
            "seed": self.seed,
            "trials": self.trials,
            "steps": [record.to_dict() for record in self.steps],
        }
        if self.trials > 1:
            data["frequencies"] = self.frequencies
        return data


# --- Текстовый формат ---


def _event_lines(event: ObservationEvent) -> list[str]:
    basis = event.basis
    lines = [
        f"  event: {event.kind.value}",
        f"  basis: {basis.atom} gamma={round_real(basis.gamma)!r} phi={round_real(basis.phi)!r}",
        f"  before: {format_amplitudes(event.amplitudes_before)}",
    ]
    if event.outcome is not None:
        outcome = event.outcome
        lines.append(f"  outcome: {outcome.label} p={round_real(outcome.probability)!r}")
    if event.phases is not None:
        theta0, theta1 = event.phases
        lines.append(f"  phases: {format_complex(theta0)} {format_complex(theta1)}")
    if event.resulting_state is not None:
        lines.append(f"  state: {format_amplitudes(event.resulting_state)}")
    if event.seed is not None:
        lines.append(f"  seed: {event.seed}")
    return lines


def _record_lines(record: StepRecord) -> list[str]:
    where = f" (line {record.line})" if record.line is not None else ""
    observer = f" [{record.observer.value}]" if record.observer is not None else ""
    lines = [f"step {record.index}: {record.directive}{where}{observer}"]
    if record.event is not None:
        lines.extend(_event_lines(record.event))
        label = "judgement" if record.event.kind.is_standard else "axiom"
    else:
        label = "judgement"
    lines.append(f"  {label}: {render_judgement(record.judgement)}")
    if record.derivation is not None:
        if record.derivation.derivable:
            lines.append("  derivation:")
            lines.extend(f"    {line}" for line in record.derivation.render_lines())
        else:
            lines.append("  derivation: not derivable")
    if record.classical_status is not None:
        lines.append(f"  classical status: {record.classical_status.value}")
    return lines


def render_text(report: Report) -> str:
    lines = [REPORT_HEADER, f"seed: {report.seed}", f"trials: {report.trials}"]
    for record in report.steps:
        lines.extend(_record_lines(record))
    if report.trials > 1 and report.frequencies:
        lines.append("frequencies:")
        for step_index, tally in report.frequencies.items():
            for key, frequency in tally.items():
                lines.append(f"  step {step_index}: {key} = {frequency!r}")
    return "\n".join(lines) + "\n"


def render_json(report: Report) -> str:
    return json.dumps(report.to_dict(), indent=2, sort_keys=True, ensure_ascii=False) + "\n"


def emit_report(report: Report, fmt: str = "text") -> bytes:
    """Отчёт в выбранном формате, UTF-8."""
    if fmt == "json":
        return render_json(report).encode("utf-8")
    if fmt == "text":
        return render_text(report).encode("utf-8")
    raise ValueError(f"неизвестный формат отчёта: {fmt}")
