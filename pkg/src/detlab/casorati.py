"""Casorati determinants ``det(P_{f_i}(a_{k+j}))`` and sign scans over them."""

from __future__ import annotations

import json
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from datetime import datetime, timezone
from typing import Iterable, Sequence

from .det import det_bareiss, det_modular
from .errors import DegreeOutOfRange, InternalDisagreement, NodeIndexOutOfRange
from .gen import GENERATOR_ID
from .matrix import IntMatrix, allow_long_int_strings, render_sci
from .orthopoly import DiscreteMeasure, eval_poly, orthogonal_poly


@dataclass(frozen=True)
class IndexSet:
    indices: tuple[int, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "indices", tuple(self.indices))
        if not self.indices:
            raise ValueError("index set must be nonempty")
        if self.indices[0] < 0:
            raise ValueError("indices must be nonnegative")
        if any(b <= a for a, b in zip(self.indices, self.indices[1:])):
            raise ValueError("indices must be strictly increasing")

    @classmethod
    def consecutive(cls, start: int, length: int) -> IndexSet:
        return cls(tuple(range(start, start + length)))

    def __len__(self) -> int:
        return len(self.indices)


def _check_cell(mu: DiscreteMeasure, f: IndexSet, k: int) -> None:
    n_nodes = len(mu)
    if f.indices[-1] > n_nodes - 1:
        raise DegreeOutOfRange(f"degree {f.indices[-1]} exceeds {n_nodes - 1}")
    if k < 0 or k + len(f) - 1 > n_nodes - 1:
        raise NodeIndexOutOfRange(f"nodes {k}..{k + len(f) - 1} outside 0..{n_nodes - 1}")


def casorati_matrix(mu: DiscreteMeasure, f: IndexSet, k: int) -> IntMatrix:
    """Square ``l x l`` matrix with entry ``(i, j) = P_{f_i}(a_{k+j})``."""
    _check_cell(mu, f, k)
    l = len(f)
    nodes = mu.nodes[k : k + l]
    return IntMatrix.from_rows(
        [[eval_poly(orthogonal_poly(mu, d), a) for a in nodes] for d in f.indices]
    )


def casorati_det(mu: DiscreteMeasure, f: IndexSet, k: int) -> int:
    m = casorati_matrix(mu, f, k)
    value = det_bareiss(m)
    check = det_modular(m)
    if value != check:
        raise InternalDisagreement({"bareiss": value, "modular": check})
    return value


@dataclass(frozen=True)
class ScanCell:
    k: int
    indices: tuple[int, ...]
    value: int
    n: int | None = None

    @property
    def sign(self) -> int:
        return (self.value > 0) - (self.value < 0)

    def to_json(self) -> dict:
        out = {
            "n": self.n,
            "k": self.k,
            "indices": list(self.indices),
            "sign": self.sign,
            "rendered": render_sci(self.value),
            "value": str(self.value),
        }
        if self.value <= 0:
            out["marker"] = "zero" if self.value == 0 else "negative"
        return out


@dataclass
class ScanReport:
    kind: str
    measure: DiscreteMeasure
    parameters: dict
    cells: list[ScanCell]
    seed: int | None = None
    generator_id: str | None = None
    started: str = ""
    finished: str = ""
    violations: list[ScanCell] = field(init=False)

    def __post_init__(self) -> None:
        self.violations = [c for c in self.cells if c.value <= 0]

    @property
    def min_value(self) -> int | None:
        return min((c.value for c in self.cells), default=None)

    def to_json(self) -> dict:
        allow_long_int_strings()
        low = self.min_value
        return {
            "kind": self.kind,
            "measure": self.measure.describe(),
            "parameters": self.parameters,
            "seed": self.seed,
            "generator_id": self.generator_id,
            "started": self.started,
            "finished": self.finished,
            "cells_scanned": len(self.cells),
            "min_value": None if low is None else str(low),
            "min_value_rendered": None if low is None else render_sci(low),
            "violations": [c.to_json() for c in self.violations],
            "cells": [c.to_json() for c in self.cells],
        }

    def dumps(self) -> str:
        return json.dumps(self.to_json(), indent=2) + "\n"

    def sign_table(self) -> str:
        """One line per row of cells: ``+``, ``0`` or ``-`` per k."""
        rows: dict[object, list[str]] = {}
        for c in self.cells:
            key = c.n if c.n is not None else c.indices
            rows.setdefault(key, []).append("+0-"[1 - c.sign])
        return "\n".join(f"{key}: {''.join(marks)}" for key, marks in rows.items())


def _now() -> str:
    return datetime.now(timezone.utc).isoformat(timespec="seconds")


def _evaluate(task: tuple[DiscreteMeasure, tuple[int, ...], int]) -> int:
    mu, indices, k = task
    return casorati_det(mu, IndexSet(indices), k)


def _run_cells(
    mu: DiscreteMeasure, plan: Sequence[tuple[int | None, tuple[int, ...], int]], jobs: int
) -> list[ScanCell]:
    tasks = [(mu, indices, k) for _, indices, k in plan]
    if jobs > 1 and len(tasks) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            values: Iterable[int] = list(pool.map(_evaluate, tasks, chunksize=8))
    else:
        values = map(_evaluate, tasks)
    return [ScanCell(k=k, indices=indices, value=v, n=n) for (n, indices, k), v in zip(plan, values)]


def ks_scan(
    mu: DiscreteMeasure,
    l: int,
    n_max: int,
    k_max: int,
    *,
    jobs: int = 1,
    seed: int | None = None,
) -> ScanReport:
    """Consecutive-index determinants for every valid ``n <= n_max``, ``k <= k_max``.

    Cells needing degree or node index above ``N - 1`` are skipped.
    """
    if l < 1:
        raise ValueError(f"block size must be positive, got {l}")
    started = _now()
    top = len(mu) - l
    plan = [
        (n, tuple(range(n, n + l)), k)
        for n in range(min(n_max, top) + 1)
        for k in range(min(k_max, top) + 1)
    ]
    return ScanReport(
        kind="ks-scan",
        measure=mu,
        parameters={"l": l, "n_max": n_max, "k_max": k_max},
        cells=_run_cells(mu, plan, jobs),
        seed=seed,
        generator_id=GENERATOR_ID if seed is not None else None,
        started=started,
        finished=_now(),
    )


def general_scan(
    mu: DiscreteMeasure,
    f: IndexSet,
    k_max: int,
    *,
    jobs: int = 1,
    seed: int | None = None,
) -> ScanReport:
    """Determinants for a fixed index set at every valid ``k <= k_max``. No sign is asserted."""
    if f.indices[-1] > len(mu) - 1:
        raise DegreeOutOfRange(f"degree {f.indices[-1]} exceeds {len(mu) - 1}")
    started = _now()
    top = len(mu) - len(f)
    plan = [(None, f.indices, k) for k in range(min(k_max, top) + 1)]
    return ScanReport(
        kind="general-scan",
        measure=mu,
        parameters={"indices": list(f.indices), "k_max": k_max},
        cells=_run_cells(mu, plan, jobs),
        seed=seed,
        generator_id=GENERATOR_ID if seed is not None else None,
        started=started,
        finished=_now(),
    )
