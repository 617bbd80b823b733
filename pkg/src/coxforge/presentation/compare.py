"""Windowed comparison of presentation dimensions against the cohomological oracle."""

from __future__ import annotations

import csv
import io
import json
import time
from dataclasses import dataclass, field
from typing import Callable

from ..coxoracle import HypersurfaceInstance, IndexSequence, cox_dim, detect_index_sequence, is_regular_sequence
from .model import Presentation, build_main_presentation, quotient_dim

WINDOW_NOTE = ("agreement on a finite window of bidegrees is evidence, not proof, "
               "of an isomorphism of graded rings")


@dataclass(frozen=True)
class Window:
    a_min: int
    a_max: int
    b_min: int
    b_max: int

    def __post_init__(self):
        if self.a_min > self.a_max or self.b_min > self.b_max:
            raise ValueError("empty window")

    @classmethod
    def default(cls, inst: HypersurfaceInstance, seq: IndexSequence | None = None) -> Window:
        seq = seq or detect_index_sequence(inst)
        return cls(-(inst.d + 2), inst.d + 2, 0, inst.e * (seq.l + 2))

    @classmethod
    def parse(cls, text: str) -> Window:
        parts = text.split(",")
        if len(parts) != 4:
            raise ValueError("window must be a_min,a_max,b_min,b_max")
        return cls(*(int(p) for p in parts))

    def degrees(self):
        for a in range(self.a_min, self.a_max + 1):
            for b in range(self.b_min, self.b_max + 1):
                yield a, b

    def restrict(self, a_min: int | None = None, a_max: int | None = None) -> Window:
        lo = self.a_min if a_min is None else max(self.a_min, a_min)
        hi = self.a_max if a_max is None else min(self.a_max, a_max)
        return Window(lo, hi, self.b_min, self.b_max)

    def as_dict(self) -> dict:
        return {"a_min": self.a_min, "a_max": self.a_max, "b_min": self.b_min, "b_max": self.b_max}


@dataclass(frozen=True)
class DimRecord:
    a: int
    b: int
    dim_oracle: int
    dim_presentation: int

    @property
    def match(self) -> bool:
        return self.dim_oracle == self.dim_presentation

    def as_dict(self) -> dict:
        return {"a": self.a, "b": self.b, "dim_oracle": self.dim_oracle, "dim_presentation": self.dim_presentation}


@dataclass
class ComparisonReport:
    instance: dict
    window: Window
    records: list[DimRecord]
    assumed_smooth: bool
    elapsed_ms: int = 0
    presentation: str = "main"
    notes: list[str] = field(default_factory=list)

    def __post_init__(self):
        self.records = sorted(self.records, key=lambda r: (r.a, r.b))

    @property
    def verdict(self) -> str:
        return "pass" if all(r.match for r in self.records) else "fail"

    @property
    def passed(self) -> bool:
        return self.verdict == "pass"

    def mismatches(self) -> list[DimRecord]:
        return [r for r in self.records if not r.match]

    def as_dict(self) -> dict:
        return {
            "instance": self.instance,
            "window": self.window.as_dict(),
            "records": [r.as_dict() for r in self.records],
            "verdict": self.verdict,
            "assumed_smooth": self.assumed_smooth,
            "elapsed_ms": self.elapsed_ms,
        }

    def to_json(self, extra: dict | None = None) -> str:
        d = self.as_dict()
        if extra:
            d.update(extra)
        return json.dumps(d, indent=2) + "\n"

    def to_csv(self) -> str:
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["a", "b", "dim_oracle", "dim_presentation", "match"])
        for r in self.records:
            w.writerow([r.a, r.b, r.dim_oracle, r.dim_presentation, int(r.match)])
        return buf.getvalue()


def instance_echo(inst: HypersurfaceInstance, seq: IndexSequence, regular: bool | None) -> dict:
    return {
        "n": inst.n, "d": inst.d, "e": inst.e, "field": str(inst.field), "seed": inst.seed,
        "index_sequence": list(seq.indices), "regular": regular,
    }


def compare_dims(inst: HypersurfaceInstance, window: Window,
                 presentation_dim: Callable[[tuple[int, int]], int],
                 oracle_dim: Callable[[tuple[int, int]], int] | None = None,
                 regular: bool | None = None, label: str = "main") -> ComparisonReport:
    seq = detect_index_sequence(inst)
    oracle_dim = oracle_dim or (lambda deg: cox_dim(inst, deg))
    start = time.perf_counter()
    records = [DimRecord(a, b, oracle_dim((a, b)), presentation_dim((a, b))) for a, b in window.degrees()]
    elapsed = int((time.perf_counter() - start) * 1000)
    return ComparisonReport(instance_echo(inst, seq, regular), window, records, inst.assumed_smooth,
                            elapsed, label, [WINDOW_NOTE])


def compare_with_oracle(inst: HypersurfaceInstance, p: Presentation | None = None,
                        window: Window | None = None, regular: bool | None = None) -> ComparisonReport:
    p = p or build_main_presentation(inst)
    window = window or Window.default(inst, p.seq)
    if regular is None:
        regular = is_regular_sequence(inst).regular
    p.groebner(window.b_max)
    return compare_dims(inst, window, lambda deg: quotient_dim(p, deg), regular=regular, label=p.kind)


@dataclass
class ProbeReport:
    regular: bool
    match: bool
    high_slice_match: bool
    low_mismatches: list[DimRecord]
    comparison: ComparisonReport
    warnings: list[str] = field(default_factory=list)

    def as_dict(self) -> dict:
        return {
            "regular": self.regular,
            "match": self.match,
            "high_slice_match": self.high_slice_match,
            "low_mismatches": [r.as_dict() for r in self.low_mismatches],
            "warnings": self.warnings,
        }


def converse_probe(inst: HypersurfaceInstance, window: Window | None = None) -> ProbeReport:
    """Cross-tabulate regularity against agreement of the main presentation with the oracle.

    Agreement for first degree >= -1 holds for every instance; disagreement
    must therefore sit at first degree <= -2.
    """
    reg = is_regular_sequence(inst).regular
    rep = compare_with_oracle(inst, window=window, regular=reg)
    high = all(r.match for r in rep.records if r.a >= -1)
    low = [r for r in rep.mismatches() if r.a <= -2]
    warnings = []
    if rep.passed and not reg:
        warnings.append("dimensions agree on the window although the sequence is not regular; "
                        "the window is too small to exhibit the failure")
    if not high:
        warnings.append("mismatch with first degree >= -1, which no instance should produce")
    return ProbeReport(reg, rep.passed, high, low, rep, warnings)
