"""Differential determinant testing: cross-checks, seeded fuzzing, CAS bridges.

A fuzz run derives one seed per iteration from the base seed, builds the
big-integer matrix for that seed and evaluates it with independent
algorithms. Every disagreement is written to the corpus before the next
iteration starts. Corpus layout, one directory per case::

    <corpus>/case-<iteration:06d>-<seed:016x>/matrix.txt   detlab-matrix v1
    <corpus>/case-<iteration:06d>-<seed:016x>/meta.json    seed, config, values
"""

from __future__ import annotations

import enum
import hashlib
import json
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field, replace
from pathlib import Path
from typing import Callable, Iterable, Mapping, Union

from .det import ALGORITHMS, DetAlgorithm
from .errors import CorpusWriteFailure, NotSquare, ParseFailure
from .gen import GENERATOR_ID, GenConfig, derive_seed, generate
from .matrix import IntMatrix, allow_long_int_strings, format_matrix, read_matrix, render_sci

DetFunction = Callable[[IntMatrix], int]
AlgorithmSpec = Union[Iterable[DetAlgorithm], Mapping[str, DetFunction]]

DEFAULT_FUZZ_ALGORITHMS = (DetAlgorithm.BAREISS, DetAlgorithm.MODULAR)


@dataclass(frozen=True)
class Verdict:
    values: dict[str, int]

    @property
    def agreement(self) -> bool:
        return len(set(self.values.values())) == 1

    @property
    def value(self) -> int | None:
        """The common value on agreement, else ``None``."""
        return next(iter(self.values.values())) if self.agreement else None

    def to_json(self) -> dict:
        allow_long_int_strings()
        return {
            "agreement": self.agreement,
            "values": {
                name: {"exact": str(v), "rendered": render_sci(v)} for name, v in self.values.items()
            },
        }


def _resolve(algorithms: AlgorithmSpec) -> dict[str, DetFunction]:
    if isinstance(algorithms, Mapping):
        resolved = dict(algorithms)
    else:
        resolved = {a.value: ALGORITHMS[a] for a in algorithms}
    if not resolved:
        raise ValueError("at least one algorithm is required")
    return resolved


def cross_check(m: IntMatrix, algorithms: AlgorithmSpec = DEFAULT_FUZZ_ALGORITHMS) -> Verdict:
    """Evaluate ``det(m)`` with every requested algorithm and compare bit-exactly.

    ``algorithms`` is a collection of :class:`DetAlgorithm` or a mapping from
    a label to any determinant callable (used to inject faulty oracles).
    """
    if not m.is_square:
        raise NotSquare(f"determinant of a {m.rows}x{m.cols} matrix")
    return Verdict({name: fn(m) for name, fn in _resolve(algorithms).items()})


# --- fuzzing ----------------------------------------------------------------


@dataclass
class FuzzReport:
    generator_id: str
    seed: int
    config: GenConfig
    iterations: int
    disagreements: int = 0
    corpus_entries: list[str] = field(default_factory=list)
    algorithms: list[str] = field(default_factory=list)
    results_sha256: str = ""
    wall_time: float = 0.0
    completed: int = 0

    def to_json(self, *, include_wall_time: bool = True) -> dict:
        out = {
            "generator_id": self.generator_id,
            "seed": self.seed,
            "config": self.config.to_json(),
            "algorithms": self.algorithms,
            "iterations": self.iterations,
            "completed": self.completed,
            "disagreements": self.disagreements,
            "corpus_entries": self.corpus_entries,
            "results_sha256": self.results_sha256,
        }
        if include_wall_time:
            out["wall_time_s"] = round(self.wall_time, 3)
        return out

    def dumps(self, *, include_wall_time: bool = True) -> str:
        return json.dumps(self.to_json(include_wall_time=include_wall_time), indent=2) + "\n"


def _iteration(task: tuple[GenConfig, dict[str, DetFunction]]) -> tuple[IntMatrix, Verdict]:
    config, algorithms = task
    _, _, big = generate(config)
    return big, cross_check(big, algorithms)


def _case_name(iteration: int, seed: int) -> str:
    return f"case-{iteration:06d}-{seed:016x}"


def write_case(corpus_dir: Path, iteration: int, config: GenConfig, m: IntMatrix, verdict: Verdict) -> str:
    name = _case_name(iteration, config.seed)
    case = corpus_dir / name
    meta = {
        "generator_id": GENERATOR_ID,
        "seed": config.seed,
        "iteration": iteration,
        "config": config.to_json(),
        **verdict.to_json(),
    }
    try:
        case.mkdir(parents=True, exist_ok=True)
        (case / "matrix.txt").write_text(format_matrix(m), encoding="ascii")
        (case / "meta.json").write_text(json.dumps(meta, indent=2) + "\n", encoding="ascii")
    except OSError as exc:
        raise CorpusWriteFailure(f"cannot persist {case}: {exc}") from exc
    return name


def load_case(case_dir: str | Path) -> tuple[IntMatrix, dict]:
    case_dir = Path(case_dir)
    allow_long_int_strings()
    meta = json.loads((case_dir / "meta.json").read_text(encoding="ascii"))
    return read_matrix(case_dir / "matrix.txt"), meta


def replay_case(case_dir: str | Path, algorithms: AlgorithmSpec | None = None) -> Verdict:
    """Re-run a stored case with the algorithms recorded in its metadata."""
    m, meta = load_case(case_dir)
    if algorithms is None:
        algorithms = [DetAlgorithm(name) for name in meta["values"]]
    return cross_check(m, algorithms)


def fuzz_run(
    config: GenConfig,
    iterations: int,
    corpus_dir: str | Path,
    *,
    algorithms: AlgorithmSpec = DEFAULT_FUZZ_ALGORITHMS,
    jobs: int = 1,
) -> FuzzReport:
    """Generate ``iterations`` matrices from ``config.seed`` and cross-check each.

    Iteration ``i`` uses ``replace(config, seed=derive_seed(config.seed, i))``.
    On :class:`CorpusWriteFailure` the partial report is attached to the
    exception as ``partial_report``.
    """
    if iterations < 1:
        raise ValueError(f"iterations must be positive, got {iterations}")
    resolved = _resolve(algorithms)
    corpus = Path(corpus_dir)
    report = FuzzReport(
        generator_id=GENERATOR_ID,
        seed=config.seed,
        config=config,
        iterations=iterations,
        algorithms=sorted(resolved),
    )
    digest = hashlib.sha256()
    configs = [replace(config, seed=derive_seed(config.seed, i)) for i in range(iterations)]
    tasks = [(c, resolved) for c in configs]
    started = time.perf_counter()
    pool = ProcessPoolExecutor(max_workers=jobs) if jobs > 1 else None
    try:
        results = pool.map(_iteration, tasks) if pool else map(_iteration, tasks)
        for i, (cfg, (m, verdict)) in enumerate(zip(configs, results)):
            digest.update(json.dumps([cfg.seed, verdict.to_json()], sort_keys=True).encode())
            if not verdict.agreement:
                try:
                    name = write_case(corpus, i, cfg, m, verdict)
                except CorpusWriteFailure as exc:
                    report.wall_time = time.perf_counter() - started
                    report.results_sha256 = digest.hexdigest()
                    exc.partial_report = report
                    raise
                report.disagreements += 1
                report.corpus_entries.append(name)
            report.completed = i + 1
    finally:
        if pool:
            pool.shutdown(cancel_futures=True)
    report.results_sha256 = digest.hexdigest()
    report.wall_time = time.perf_counter() - started
    return report


# --- external CAS bridges ----------------------------------------------------


class CasDialect(enum.Enum):
    MATHEMATICA = "mathematica"
    MAPLE = "maple"
    SAGE = "sage"


def _nested(m: IntMatrix, open_: str, close: str) -> str:
    rows = (open_ + ", ".join(str(x) for x in m.row(i)) + close for i in range(m.rows))
    return open_ + ", ".join(rows) + close


def export_cas(m: IntMatrix, dialect: CasDialect) -> str:
    """Single determinant expression for an external computer algebra system."""
    if not m.is_square:
        raise NotSquare(f"determinant of a {m.rows}x{m.cols} matrix")
    allow_long_int_strings()
    if dialect is CasDialect.MATHEMATICA:
        return f"Det[{_nested(m, '{', '}')}]"
    if dialect is CasDialect.MAPLE:
        return f"LinearAlgebra:-Determinant(Matrix({_nested(m, '[', ']')}));"
    return f"matrix(ZZ, {_nested(m, '[', ']')}).det()"


def import_result(text: str) -> int:
    """Parse one signed decimal integer printed by an external system.

    Surrounding whitespace and backslash line continuations between digits
    are accepted; anything else raises :class:`ParseFailure`.
    """
    allow_long_int_strings()
    pos, end = 0, len(text)
    while pos < end and text[pos].isspace():
        pos += 1
    digits: list[str] = []
    if pos < end and text[pos] in "+-":
        digits.append(text[pos])
        pos += 1
    if pos >= end or not text[pos].isdigit():
        raise ParseFailure("expected a digit", (pos, min(pos + 1, end)))
    while pos < end:
        ch = text[pos]
        if "0" <= ch <= "9":
            digits.append(ch)
            pos += 1
        elif ch == "\\":
            start = pos
            pos += 1
            while pos < end and text[pos] in " \t\r":
                pos += 1
            if pos >= end or text[pos] != "\n":
                raise ParseFailure("backslash not followed by a line break", (start, pos + 1))
            while pos < end and text[pos].isspace():
                pos += 1
            if pos >= end or not text[pos].isdigit():
                raise ParseFailure("line continuation not followed by digits", (start, min(pos + 1, end)))
        elif ch.isspace():
            rest = pos
            while rest < end and text[rest].isspace():
                rest += 1
            if rest != end:
                raise ParseFailure("trailing content after integer", (rest, end))
            break
        else:
            raise ParseFailure(f"unexpected character {ch!r}", (pos, pos + 1))
    return int("".join(digits))
