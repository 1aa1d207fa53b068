"""Corpus-wide checks of the solid-brick results and their supporting lemmas.

Each claim is a per-graph check that either skips a graph (outside the
claim's hypothesis), accepts it, or reports a violation. ``verify_claim``
runs a check over a corpus and folds the outcomes into a
``VerificationReport``, which can be emitted as text, JSON or CSV.
"""

from __future__ import annotations

import csv
import io
import json
import random
import time
from collections import Counter
from dataclasses import dataclass, field
from functools import cache
from typing import Any, Callable

from .corpus import CorpusSource, ingest
from .edges import classify_all_edges, vertex_tallies
from .families import c6_complement, complete, moebius_ladder, petersen, prism
from .graph import Graph
from .graph6 import parse_graph6, to_graph6
from .isomorphism import are_isomorphic, same_multiset
from .structure import _nonsolid_witness, is_brick, is_matching_covered, is_wheel, tight_cut_decomposition

SCHEMA_VERSION = 1


@dataclass
class Outcome:
    status: str  # "skip" | "ok" | "fail"
    tags: list[str] = field(default_factory=list)
    row: dict[str, Any] = field(default_factory=dict)
    detail: str | None = None


def _skip(reason: str) -> Outcome:
    return Outcome("skip", [f"skipped: {reason}"])


def _solid_brick_or_skip(g: Graph, min_order: int = 4) -> Outcome | None:
    if not is_brick(g):
        return _skip("not a brick")
    if g.n < min_order:
        return _skip(f"order below {min_order}")
    if _nonsolid_witness(g) is not None:
        return _skip("nonsolid brick")
    return None


def _check_main_theorem(g: Graph) -> Outcome:
    if not is_brick(g):
        return _skip("not a brick")
    if g.n == 4:
        return _skip("K4")
    if _nonsolid_witness(g) is not None:
        return _skip("nonsolid brick")
    cls = classify_all_edges(g)
    binv = [r for r in cls if r.b_invariant]
    all_solitary = all(r.solitary for r in binv)
    wheel = is_wheel(g)
    tags = ["solid brick"]
    if wheel:
        tags.append("wheel")
    if not binv:
        tags.append("vacuous")
    if all_solitary:
        tags.append("all b-invariant edges solitary")
    row = {
        "bInvariant": len(binv),
        "bInvariantSolitary": sum(r.solitary for r in binv),
        "allSolitary": all_solitary,
        "wheel": wheel,
    }
    if all_solitary and not wheel:
        return Outcome("fail", tags, row, "every b-invariant edge is solitary but the graph is not a wheel")
    if wheel and not all_solitary:
        bad = [r.edge for r in binv if not r.solitary]
        return Outcome("fail", tags, row, f"wheel with nonsolitary b-invariant edges {bad}")
    return Outcome("ok", tags, row)


def _check_solid_removable_b(g: Graph) -> Outcome:
    skip = _solid_brick_or_skip(g)
    if skip:
        return skip
    cls = classify_all_edges(g)
    bad = [r.edge for r in cls if r.removable and not r.b_invariant]
    row = {"removable": sum(r.removable for r in cls), "bInvariant": sum(r.b_invariant for r in cls)}
    if bad:
        return Outcome("fail", ["solid brick"], row, f"removable edges that are not b-invariant: {bad}")
    return Outcome("ok", ["solid brick"], row)


def _check_two_nonremovable(g: Graph) -> Outcome:
    skip = _solid_brick_or_skip(g, min_order=6)
    if skip:
        return skip
    tallies = vertex_tallies(g)
    worst = max(t.nonremovable for t in tallies)
    row = {"maxNonremovableAtVertex": worst}
    if worst > 2:
        bad = [v for v, t in enumerate(tallies) if t.nonremovable > 2]
        return Outcome("fail", ["solid brick"], row, f"vertices with more than two nonremovable edges: {bad}")
    return Outcome("ok", ["solid brick"], row)


def _check_two_nonsolitary(g: Graph) -> Outcome:
    skip = _solid_brick_or_skip(g, min_order=6)
    if skip:
        return skip
    cls = classify_all_edges(g)
    if not all(r.solitary for r in cls if r.b_invariant):
        return _skip("some b-invariant edge is nonsolitary")
    tallies = vertex_tallies(g, cls)
    worst = max(t.nonsolitary for t in tallies)
    row = {"maxNonsolitaryAtVertex": worst}
    if worst > 2:
        bad = [v for v, t in enumerate(tallies) if t.nonsolitary > 2]
        return Outcome("fail", ["solid brick"], row, f"vertices with more than two nonsolitary edges: {bad}")
    return Outcome("ok", ["solid brick"], row)


def _check_wheel_solitary(g: Graph) -> Outcome:
    if not is_wheel(g) or g.n % 2:
        return _skip("not an even wheel")
    cls = classify_all_edges(g)
    binv = [r for r in cls if r.b_invariant]
    row = {"bInvariant": len(binv), "bInvariantSolitary": sum(r.solitary for r in binv)}
    bad = [r.edge for r in binv if not r.solitary]
    if bad:
        return Outcome("fail", ["wheel"], row, f"nonsolitary b-invariant edges {bad}")
    return Outcome("ok", ["wheel"], row)


@cache
def _exceptional_bricks() -> list[tuple[str, Graph]]:
    return [("K4", complete(4)), ("C6-complement", c6_complement()), ("Petersen", petersen())]


def _check_b_invariant_exists(g: Graph) -> Outcome:
    if not is_brick(g):
        return _skip("not a brick")
    for name, h in _exceptional_bricks():
        if are_isomorphic(g, h):
            return _skip(f"excluded brick {name}")
    count = sum(r.b_invariant for r in classify_all_edges(g))
    row = {"bInvariant": count}
    if count == 0:
        return Outcome("fail", ["brick"], row, "brick without a b-invariant edge")
    return Outcome("ok", ["brick"], row)


def _extremal_family(g: Graph) -> str | None:
    n = g.n
    if n >= 10 and n % 4 == 2 and are_isomorphic(g, prism(n)):
        return f"prism({n})"
    if n >= 8 and n % 4 == 0 and are_isomorphic(g, moebius_ladder(n)):
        return f"moebius-ladder({n})"
    return None


def _check_extremal_count(g: Graph) -> Outcome:
    family = _extremal_family(g)
    if family is None:
        return _skip("not an extremal witness")
    count = sum(r.b_invariant for r in classify_all_edges(g))
    row = {"family": family, "bInvariant": count, "expected": g.n // 2}
    if count != g.n // 2:
        return Outcome("fail", ["extremal witness"], row, f"{count} b-invariant edges, expected {g.n // 2}")
    return Outcome("ok", ["extremal witness"], row)


def _leaf_signature(result) -> tuple[list[Graph], list[Graph]]:
    return result.bricks, result.braces


def make_uniqueness_check(runs: int = 5, seed: int = 0) -> Callable[[Graph], Outcome]:
    """Decomposition-order invariance with ``runs`` randomised cut choices per graph."""

    def check(g: Graph) -> Outcome:
        if not is_matching_covered(g):
            return _skip("not matching covered")
        base = tight_cut_decomposition(g)
        bricks, braces = _leaf_signature(base)
        rng = random.Random(f"{seed}:{to_graph6(g)}")
        tags = ["matching covered"]
        if base.trace:
            tags.append("has nontrivial tight cut")
        row = {"bricks": len(bricks), "braces": len(braces), "cuts": len(base.trace)}
        for run in range(runs):
            other = tight_cut_decomposition(g, rng=rng)
            ob, oc = _leaf_signature(other)
            if not (same_multiset(bricks, ob) and same_multiset(braces, oc)):
                return Outcome("fail", tags, row, f"randomised run {run} produced a different leaf list")
        return Outcome("ok", tags, row)

    return check


CLAIMS: dict[str, tuple[str, Callable[..., Callable[[Graph], Outcome]]]] = {
    "main-theorem": (
        "solid brick other than K4: every b-invariant edge solitary <=> wheel",
        lambda: _check_main_theorem,
    ),
    "lemma-solid-removable-b": (
        "solid brick: every removable edge is b-invariant",
        lambda: _check_solid_removable_b,
    ),
    "lemma-two-nonremovable": (
        "solid brick of order >= 6: at most two nonremovable edges at each vertex",
        lambda: _check_two_nonremovable,
    ),
    "lemma-two-nonsolitary": (
        "solid brick of order >= 6 with all b-invariant edges solitary: at most two nonsolitary edges at each vertex",
        lambda: _check_two_nonsolitary,
    ),
    "lemma-wheel-solitary": (
        "even wheel: every b-invariant edge is solitary",
        lambda: _check_wheel_solitary,
    ),
    "clm2002-existence": (
        "brick other than K4, C6-complement, Petersen: at least one b-invariant edge",
        lambda: _check_b_invariant_exists,
    ),
    "lfw2020-extremal": (
        "prism of order 4k+2 / Moebius ladder of order 4k (k >= 2): exactly n/2 b-invariant edges",
        lambda: _check_extremal_count,
    ),
    "lovasz-uniqueness": (
        "matching covered graph: randomised tight cut decompositions give the same bricks and braces",
        make_uniqueness_check,
    ),
}


@dataclass
class VerificationReport:
    claim_id: str
    statement: str
    source: str
    stage_counts: list[tuple[str, int]]
    counts: dict[str, int]
    verdict: str
    counterexamples: list[dict[str, Any]]
    per_graph: list[dict[str, Any]]
    seconds: float
    schema_version: int = SCHEMA_VERSION

    @property
    def passed(self) -> bool:
        return self.verdict == "pass"

    def to_dict(self) -> dict[str, Any]:
        return {
            "schemaVersion": self.schema_version,
            "claimId": self.claim_id,
            "statement": self.statement,
            "verdict": self.verdict,
            "universe": {
                "source": self.source,
                "stages": [[name, count] for name, count in self.stage_counts],
                "counts": dict(self.counts),
            },
            "counterexamples": list(self.counterexamples),
            "perGraph": list(self.per_graph),
            "timing": {"seconds": self.seconds},
        }

    @classmethod
    def from_dict(cls, d: dict[str, Any]) -> VerificationReport:
        u = d["universe"]
        return cls(
            claim_id=d["claimId"],
            statement=d["statement"],
            source=u["source"],
            stage_counts=[(name, count) for name, count in u["stages"]],
            counts=dict(u["counts"]),
            verdict=d["verdict"],
            counterexamples=list(d["counterexamples"]),
            per_graph=list(d["perGraph"]),
            seconds=d["timing"]["seconds"],
            schema_version=d["schemaVersion"],
        )

    def without_timing(self) -> dict[str, Any]:
        d = self.to_dict()
        del d["timing"]
        return d


def verify_claim(claim_id: str, source: CorpusSource, **options: Any) -> VerificationReport:
    """Run one claim over every graph of ``source``.

    ``options`` are passed to the claim's check factory (only
    ``lovasz-uniqueness`` takes any: ``runs`` and ``seed``).
    """
    if claim_id not in CLAIMS:
        raise KeyError(f"unknown claim {claim_id!r}; known: {', '.join(CLAIMS)}")
    statement, factory = CLAIMS[claim_id]
    check = factory(**options)
    start = time.perf_counter()
    stream = ingest(source)
    counts: Counter[str] = Counter()
    rows = []
    failures = []
    for index, g in enumerate(stream):
        out = check(g)
        counts.update(out.tags)
        if out.status == "skip":
            continue
        code = to_graph6(g) if g.n else ""
        rows.append({"index": index, "graph6": code, "n": g.n, "m": g.m, "status": out.status, **out.row})
        if out.status == "fail":
            failures.append({"index": index, "graph6": code, "detail": out.detail})
    counts["checked"] = len(rows)
    return VerificationReport(
        claim_id=claim_id,
        statement=statement,
        source=source.description,
        stage_counts=list(stream.stage_counts),
        counts=dict(sorted(counts.items())),
        verdict="fail" if failures else "pass",
        counterexamples=failures,
        per_graph=rows,
        seconds=round(time.perf_counter() - start, 6),
    )


def verify_main_theorem(source: CorpusSource) -> VerificationReport:
    return verify_claim("main-theorem", source)


def recheck_counterexample(claim_id: str, graph6: str, **options: Any) -> bool:
    """Re-parse a reported counterexample and confirm it still violates the claim."""
    _, factory = CLAIMS[claim_id]
    return factory(**options)(parse_graph6(graph6)).status == "fail"


def all_solitary_graphs(report: VerificationReport) -> list[str]:
    """graph6 codes of the main-theorem rows where every b-invariant edge is solitary."""
    return [r["graph6"] for r in report.per_graph if r.get("allSolitary")]


def emit_report(report: VerificationReport, fmt: str = "text") -> str:
    if fmt == "json":
        return json.dumps(report.to_dict(), indent=2) + "\n"
    if fmt == "csv":
        return _emit_csv(report)
    if fmt == "text":
        return _emit_text(report)
    raise ValueError(f"unknown report format {fmt!r}")


def load_report(text: str) -> VerificationReport:
    data = json.loads(text)
    if data.get("schemaVersion") != SCHEMA_VERSION:
        raise ValueError(f"unsupported report schema version {data.get('schemaVersion')!r}")
    return VerificationReport.from_dict(data)


def _emit_csv(report: VerificationReport) -> str:
    columns = ["claimId", "verdict", "index", "graph6", "n", "m", "status"]
    for row in report.per_graph:
        for k in row:
            if k not in columns:
                columns.append(k)
    buf = io.StringIO()
    writer = csv.DictWriter(buf, fieldnames=columns, lineterminator="\n")
    writer.writeheader()
    for row in report.per_graph:
        writer.writerow({"claimId": report.claim_id, "verdict": report.verdict, **row})
    return buf.getvalue()


def _emit_text(report: VerificationReport) -> str:
    lines = [
        f"{report.claim_id}: {report.verdict.upper()}",
        f"  claim   {report.statement}",
        f"  source  {report.source}",
        "  stages  " + ", ".join(f"{name}={count}" for name, count in report.stage_counts),
    ]
    width = max((len(k) for k in report.counts), default=0)
    for k, v in report.counts.items():
        lines.append(f"    {k:<{width}}  {v}")
    for cx in report.counterexamples[:10]:
        lines.append(f"  COUNTEREXAMPLE #{cx['index']} {cx['graph6']}: {cx['detail']}")
    if len(report.counterexamples) > 10:
        lines.append(f"  ... {len(report.counterexamples) - 10} more counterexamples")
    if 0 < len(report.per_graph) <= 20:
        keys = list(report.per_graph[0])
        cells = [keys] + [[str(row.get(k, "")) for k in keys] for row in report.per_graph]
        widths = [max(len(c[i]) for c in cells) for i in range(len(keys))]
        for c in cells:
            lines.append("  " + "  ".join(c[i].ljust(widths[i]) for i in range(len(keys))).rstrip())
    lines.append(f"  time    {report.seconds:.3f} s")
    return "\n".join(lines) + "\n"
