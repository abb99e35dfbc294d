"""Exhaustive search for closed 2-cell partial duals, and the cross-check harness."""

from __future__ import annotations

import csv
import hashlib
import io as _io
import random
from collections.abc import Iterable, Mapping, Sequence
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field

from .c2c import Verdict, is_closed_2cell, separating_features
from .conditions import conditions_predict_c2c
from .duality import partial_dual
from .gem import Gem
from .io import serialize_gem

MODES = ("direct", "conditions", "cross-check")
DEFAULT_CAPS = {"direct": 20, "conditions": 16, "cross-check": 16}


class SearchCapError(ValueError):
    """Raised when a full enumeration would exceed the configured edge cap."""


@dataclass(frozen=True)
class SubsetRecord:
    mask: int
    verdict: Verdict
    source: str  # "direct", "conditions", "both-agree", "disagree" or "pruned"
    failing: tuple[str, ...] = ()
    direct: Verdict | None = None
    predicted: Verdict | None = None


@dataclass(frozen=True)
class SearchReport:
    fingerprint: str
    num_edges: int
    mode: str
    total: int
    c2c: tuple[int, ...]
    pruned: int
    records: tuple[SubsetRecord, ...] = field(repr=False)
    disagreements: tuple[int, ...] = ()
    exhaustive: bool = True

    def to_json(self) -> dict:
        return {
            "fingerprint": self.fingerprint,
            "num_edges": self.num_edges,
            "mode": self.mode,
            "exhaustive": self.exhaustive,
            "total": self.total,
            "c2c": list(self.c2c),
            "pruned": self.pruned,
            "sources": _count(r.source for r in self.records),
            "disagreements": list(self.disagreements),
        }

    def to_csv(self) -> str:
        buf = _io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["bitmask", "verdict", "source", "failing"])
        for r in self.records:
            w.writerow([r.mask, r.verdict.value, r.source, "+".join(r.failing)])
        return buf.getvalue()


def _count(items: Iterable[str]) -> dict[str, int]:
    out: dict[str, int] = {}
    for x in items:
        out[x] = out.get(x, 0) + 1
    return dict(sorted(out.items()))


def fingerprint(g: Gem) -> str:
    return hashlib.sha256(serialize_gem(g).encode()).hexdigest()


def evaluate_subset(g: Gem, mask: int, mode: str) -> SubsetRecord:
    direct = predicted = None
    failing: tuple[str, ...] = ()
    if mode in ("direct", "cross-check"):
        direct = is_closed_2cell(partial_dual(g, mask)).verdict
    if mode in ("conditions", "cross-check"):
        cv = conditions_predict_c2c(g, mask)
        predicted, failing = cv.predicted_c2c, tuple(cv.failing)
    if mode == "direct":
        return SubsetRecord(mask, direct, "direct", direct=direct)
    if mode == "conditions":
        return SubsetRecord(mask, predicted, "conditions", failing, predicted=predicted)
    source = "both-agree" if direct == predicted else "disagree"
    return SubsetRecord(mask, direct, source, failing, direct, predicted)


def _evaluate_chunk(args) -> list[SubsetRecord]:
    g, masks, mode = args
    return [evaluate_subset(g, m, mode) for m in masks]


def _run(g: Gem, masks: Sequence[int], mode: str, workers: int) -> list[SubsetRecord]:
    if workers <= 1 or len(masks) < 256:
        return [evaluate_subset(g, m, mode) for m in masks]
    size = max(64, len(masks) // (workers * 4))
    chunks = [(g, masks[i : i + size], mode) for i in range(0, len(masks), size)]
    with ProcessPoolExecutor(max_workers=workers) as pool:
        parts = list(pool.map(_evaluate_chunk, chunks))
    # chunks come back in submission order, so the merge stays sorted by mask
    return [r for part in parts for r in part]


def find_c2c_duals(
    g: Gem,
    mode: str = "cross-check",
    cap: int | None = None,
    allow_large: bool = False,
    audit: bool = False,
    workers: int = 1,
    subsets: Iterable[int] | None = None,
) -> SearchReport:
    """Evaluate partial duals of ``g`` over every subset (or just ``subsets``).

    Subsets are visited as a plain binary counter.  If ``g`` has a
    separating vertex/face pair, loop or coloop nothing is evaluated and
    every subset counts as pruned, unless ``audit`` asks for the direct
    check anyway.
    """
    if mode not in MODES:
        raise ValueError(f"unknown mode {mode!r}; expected one of {', '.join(MODES)}")
    m = g.num_edges
    cap = DEFAULT_CAPS[mode] if cap is None else cap
    if subsets is None:
        if m > cap and not allow_large:
            raise SearchCapError(f"{m} edges exceeds the cap of {cap} for mode {mode}; pass allow_large to override")
        masks = list(range(1 << m))
        exhaustive = True
    else:
        masks = sorted(set(subsets))
        if any(not 0 <= x < (1 << m) for x in masks):
            raise ValueError("subset mask out of range")
        exhaustive = False
    fp = fingerprint(g)
    if separating_features(g).blocks_all_partial_duals:
        if audit:
            records = _run(g, masks, "direct", workers)
            c2c = tuple(r.mask for r in records if r.verdict is Verdict.YES)
            if c2c:
                raise AssertionError(f"pruned gem has closed 2-cell partial duals {c2c}")
        records = [SubsetRecord(x, Verdict.NO, "pruned", ("obstruction",)) for x in masks]
        return SearchReport(fp, m, mode, len(masks), (), len(masks), tuple(records), (), exhaustive)
    records = _run(g, masks, mode, workers)
    c2c = tuple(r.mask for r in records if r.verdict is Verdict.YES)
    dis = tuple(r.mask for r in records if r.source == "disagree")
    return SearchReport(fp, m, mode, len(masks), c2c, 0, tuple(records), dis, exhaustive)


@dataclass(frozen=True)
class SweepEntry:
    name: str
    num_edges: int
    subsets: int
    exhaustive: bool
    c2c: int
    disagreements: tuple[tuple[int, str, str], ...]  # (mask, predicted, direct)


@dataclass(frozen=True)
class SweepReport:
    entries: tuple[SweepEntry, ...]

    @property
    def total(self) -> int:
        return sum(e.subsets for e in self.entries)

    @property
    def disagreements(self) -> list[tuple[str, int, str, str]]:
        return [(e.name, *d) for e in self.entries for d in e.disagreements]

    @property
    def ok(self) -> bool:
        return not self.disagreements


def oracle_equivalence_sweep(
    corpus: Mapping[str, Gem] | Sequence[Gem],
    cap: int = 16,
    samples: int = 256,
    seed: int = 0,
    extra: Mapping[str, Iterable[int]] | None = None,
) -> SweepReport:
    """Compare the condition check with the direct check on every gem.

    Gems with at most ``cap`` edges are swept exhaustively.  Larger gems get
    ``samples`` random subsets plus the empty set, the full set and any
    masks listed for them in ``extra``.
    """
    if not isinstance(corpus, Mapping):
        corpus = {f"gem{i}": g for i, g in enumerate(corpus)}
    rng = random.Random(seed)
    extra = extra or {}
    entries = []
    for name, g in corpus.items():
        m = g.num_edges
        if m <= cap:
            masks: Iterable[int] = range(1 << m)
            exhaustive = True
        else:
            chosen = {0, (1 << m) - 1, *extra.get(name, ())}
            chosen |= {rng.getrandbits(m) for _ in range(samples)}
            masks = sorted(chosen)
            exhaustive = False
        count = yes = 0
        bad = []
        for mask in masks:
            r = evaluate_subset(g, mask, "cross-check")
            count += 1
            yes += r.direct is Verdict.YES
            if r.source == "disagree":
                bad.append((mask, r.predicted.value, r.direct.value))
        entries.append(SweepEntry(name, m, count, exhaustive, yes, tuple(bad)))
    return SweepReport(tuple(entries))
