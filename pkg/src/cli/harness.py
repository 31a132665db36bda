"""
Batch experiment harness.

Runs consecutive seeds as independent searches, streams one JSON record
per instance and finishes with a summary line.
"""

import json
import logging
import sys
import time
from concurrent.futures import FIRST_COMPLETED, Future, ProcessPoolExecutor, wait
from concurrent.futures.process import BrokenProcessPool
from pathlib import Path
from typing import IO, Dict, Iterable, List, Optional, Tuple

from pydantic import BaseModel, Field, ValidationError

from src.deal.dealer import deal
from src.exceptions import EmptySample, RecordFormatError
from src.rules.models import RuleSet
from src.rules.parser import load_rules
from src.search.dfs import SearchLimits, Verdict
from src.search.solver import SolveOptions, solve
from src.stats.report import BatchSummary, build_summary, summary_json
from src.stats.wilson import SampleSummary

logger = logging.getLogger(__name__)

UNKNOWN_VERDICTS = (Verdict.TIMED_OUT.value, Verdict.MEMED_OUT.value)


class InstanceRecord(BaseModel):
    """Result of one seeded instance."""

    game: str = Field(description="Rule-file name")
    seed: int = Field(ge=0, description="Deal seed")
    verdict: Verdict = Field(description="Winnable, Unwinnable, TimedOut or MemedOut")
    nodes: int = Field(default=0, ge=0)
    max_depth: int = Field(default=0, ge=0)
    wall_ms: int = Field(default=0, ge=0)
    peak_bytes: int = Field(default=0, ge=0, description="Peak transposition table bytes")
    solution_length: Optional[int] = Field(default=None, description="Moves in the solution, if winnable")
    phase: str = Field(default="full", description="Search phase that settled the instance")
    error: Optional[str] = Field(default=None, description="Worker failure, recorded as TimedOut")

    def to_json(self) -> str:
        return json.dumps(self.model_dump(mode="json"), sort_keys=True)


def game_name(rules_path: str) -> str:
    return Path(rules_path).stem


def solve_seed(
    rules: RuleSet,
    game: str,
    seed: int,
    limits: SearchLimits,
    options: SolveOptions,
    solution_path: Optional[str] = None,
) -> InstanceRecord:
    """Deal and solve one seed; write the solution file when one is found."""
    started = time.monotonic()
    layout = deal(rules, seed)
    outcome = solve(rules, layout, limits, options)
    if solution_path and outcome.solution is not None:
        with open(solution_path, "w") as f:
            f.writelines(f"{move}\n" for move in outcome.solution)
        logger.info(f"Wrote {len(outcome.solution)} moves to {solution_path}")
    return InstanceRecord(
        game=game,
        seed=seed,
        verdict=outcome.verdict,
        nodes=outcome.nodes,
        max_depth=outcome.max_depth,
        wall_ms=int((time.monotonic() - started) * 1000),
        peak_bytes=outcome.peak_bytes,
        solution_length=len(outcome.solution) if outcome.solution is not None else None,
        phase=outcome.phase,
    )


def run_single(
    rules_path: str,
    seed: int,
    limits: SearchLimits,
    options: SolveOptions,
    solution_path: Optional[str] = None,
    rules: Optional[RuleSet] = None,
) -> InstanceRecord:
    """
    Solve one seed of a rules file.

    Args:
        rules_path: rules file
        seed: deal seed
        limits: search budget
        options: streamliner and dominance switches
        solution_path: where to write the winning moves, if any
        rules: already-loaded rules, such as a reduced pack of the file's game

    Returns:
        InstanceRecord: the instance record
    """
    rules = rules if rules is not None else load_rules(rules_path)
    record = solve_seed(rules, game_name(rules_path), seed, limits, options, solution_path)
    logger.info(f"{record.game} seed {seed}: {record.verdict.value} ({record.nodes} nodes, {record.wall_ms} ms)")
    return record


def _failed(game: str, seed: int, error: BaseException) -> InstanceRecord:
    logger.error(f"Error solving {game} seed {seed}: {str(error)}")
    return InstanceRecord(game=game, seed=seed, verdict=Verdict.TIMED_OUT, error=str(error) or type(error).__name__)


def summarize_records(game: str, records: Iterable[InstanceRecord], interrupted: bool = False) -> BatchSummary:
    """Counts, means and conservative interval of a set of records."""
    records = list(records)
    if not records:
        raise EmptySample("No records to summarize")
    counts: Dict[str, int] = {verdict.value: 0 for verdict in Verdict}
    for record in records:
        counts[record.verdict.value] += 1
    sample = SampleSummary(
        wins=counts[Verdict.WINNABLE.value],
        losses=counts[Verdict.UNWINNABLE.value],
        unknowns=sum(counts[name] for name in UNKNOWN_VERDICTS),
    )
    return build_summary(
        game,
        sample,
        timed_out=counts[Verdict.TIMED_OUT.value],
        memed_out=counts[Verdict.MEMED_OUT.value],
        errors=sum(1 for record in records if record.error),
        mean_nodes=sum(record.nodes for record in records) / len(records),
        mean_seconds=sum(record.wall_ms for record in records) / len(records) / 1000,
        interrupted=interrupted,
    )


class RecordWriter:
    """Single appender for the record stream."""

    def __init__(self, stream: IO[str]):
        self.stream = stream
        self.records: List[InstanceRecord] = []

    def write(self, record: InstanceRecord) -> None:
        self.records.append(record)
        self.stream.write(record.to_json() + "\n")
        self.stream.flush()

    def finish(self, summary: BatchSummary) -> None:
        self.stream.write(json.dumps({"summary": json.loads(summary_json(summary))}, sort_keys=True) + "\n")
        self.stream.flush()


def run_batch(
    rules_path: str,
    seed_start: int,
    count: int,
    limits: SearchLimits,
    options: SolveOptions,
    jobs: int = 1,
    out_path: Optional[str] = None,
    progress_every: int = 100,
    rules: Optional[RuleSet] = None,
) -> BatchSummary:
    """
    Solve seeds [seed_start, seed_start + count) and stream their records.

    Records are written as each instance finishes; the last line holds the
    summary. An interrupt or a worker process dying stops the batch; the
    summary of the recorded instances is still written, marked interrupted.
    Seeds in flight when a worker dies are recorded as TimedOut with the error.

    Args:
        rules_path: rules file
        seed_start: first seed
        count: number of seeds
        limits: per-instance search budget
        options: streamliner and dominance switches
        jobs: worker processes; 1 solves in this process
        out_path: record file, stdout when None
        progress_every: log progress after this many records
        rules: already-loaded rules, such as a reduced pack of the file's game

    Returns:
        BatchSummary: counts and conservative interval
    """
    if count < 1:
        raise ValueError("count must be at least 1")
    rules = rules if rules is not None else load_rules(rules_path)
    game = game_name(rules_path)
    seeds = range(seed_start, seed_start + count)

    stream = open(out_path, "w") if out_path else sys.stdout
    writer = RecordWriter(stream)
    completed = False
    summary: Optional[BatchSummary] = None
    try:
        try:
            for record in _records(rules, game, seeds, limits, options, jobs):
                writer.write(record)
                done = len(writer.records)
                if done % progress_every == 0:
                    logger.info(f"{game}: {done}/{count} instances done")
            completed = True
        except KeyboardInterrupt:
            logger.warning(f"{game}: interrupted after {len(writer.records)} of {count} instances")
        except BrokenProcessPool as e:
            logger.error(f"Error in worker pool for {game} after {len(writer.records)} of {count} instances: {str(e)}")
    finally:
        if writer.records:
            summary = summarize_records(game, writer.records, interrupted=not completed)
            writer.finish(summary)
        if out_path:
            stream.close()
    if summary is None:
        raise EmptySample("Batch finished no instances")
    logger.info(f"{game}: {summary.wins} won, {summary.losses} lost, {summary.unknowns} unknown, {summary.interval}")
    return summary


def _records(
    rules: RuleSet,
    game: str,
    seeds: Iterable[int],
    limits: SearchLimits,
    options: SolveOptions,
    jobs: int,
) -> Iterable[InstanceRecord]:
    if jobs <= 1:
        for seed in seeds:
            try:
                yield solve_seed(rules, game, seed, limits, options)
            except KeyboardInterrupt:
                raise
            except Exception as e:
                yield _failed(game, seed, e)
        return

    executor = ProcessPoolExecutor(max_workers=jobs)
    pending: Dict[Future, int] = {}
    seed_iter = iter(seeds)
    broken: Optional[BrokenProcessPool] = None

    def submit(seed: int) -> Optional[InstanceRecord]:
        nonlocal broken
        try:
            pending[executor.submit(solve_seed, rules, game, seed, limits, options)] = seed
        except BrokenProcessPool as e:
            broken = e
            return _failed(game, seed, e)
        return None

    try:
        for seed in seed_iter:
            failed = submit(seed)
            if failed is not None:
                yield failed
                break
            if len(pending) >= jobs * 2:
                break
        while pending:
            finished, _ = wait(pending, return_when=FIRST_COMPLETED)
            for future in finished:
                seed = pending.pop(future)
                error = future.exception()
                if isinstance(error, BrokenProcessPool):
                    broken = error
                yield _failed(game, seed, error) if error else future.result()
                next_seed = next(seed_iter, None) if broken is None else None
                if next_seed is not None:
                    failed = submit(next_seed)
                    if failed is not None:
                        yield failed
        # unsubmitted seeds are left out; the caller marks the batch interrupted
        if broken is not None:
            raise broken
    finally:
        executor.shutdown(wait=False, cancel_futures=True)


def read_records(records_path: str) -> Tuple[str, List[InstanceRecord]]:
    """
    Parse a record stream, skipping its summary line.

    Raises:
        RecordFormatError: a line is not a valid record
    """
    records: List[InstanceRecord] = []
    with open(records_path, "r") as f:
        for line_number, line in enumerate(f, start=1):
            if not line.strip():
                continue
            try:
                data = json.loads(line)
            except json.JSONDecodeError as e:
                raise RecordFormatError(line_number, str(e))
            if isinstance(data, dict) and set(data) == {"summary"}:
                continue
            try:
                records.append(InstanceRecord.model_validate(data))
            except ValidationError as e:
                raise RecordFormatError(line_number, str(e).splitlines()[0])
    game = records[0].game if records else Path(records_path).stem
    return game, records


def summarize(records_path: str) -> BatchSummary:
    """Recompute counts and interval from a record file alone."""
    game, records = read_records(records_path)
    return summarize_records(game, records)
