"""Corpus classification: property flags, filter buckets, and the R_pi spectrum."""
from __future__ import annotations

import csv
import io
import json
import logging
import re
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable

from .electrical import is_reversible, r_pi, spectral_gap_estimate
from .errors import BadFilter, Disconnected, LatticeViolation, NotReversible, WalksymError
from .exact import format_rational
from .graph import Graph, is_connected, write_graph6
from .symmetry import IntersectionArray, is_distance_regular, is_vertex_transitive
from .walks import is_walk_regular, satisfies_return_condition

log = logging.getLogger(__name__)

# well inside the 1e-9 accuracy target; keeps reports identical across LAPACK builds
GAP_DECIMALS = 12

FLAGS = ("regular", "walk_regular", "return_condition", "vertex_transitive", "distance_regular", "reversible")


@dataclass(frozen=True)
class ClassificationReport:
    graph6: str
    n: int
    m: int
    regular: bool
    degree: int | None
    walk_regular: bool
    return_condition: bool
    vertex_transitive: bool
    distance_regular: bool
    intersection_array: IntersectionArray | None
    reversible: bool
    r_d: tuple[Fraction, ...]
    r_pi: Fraction | None
    spectral_gap: float | None
    max_hitting_asymmetry: Fraction

    def flag(self, name: str) -> bool:
        return getattr(self, name)

    def to_dict(self):
        return {
            "graph6": self.graph6,
            "n": self.n,
            "m": self.m,
            "regular": self.regular,
            "degree": self.degree,
            "walk_regular": self.walk_regular,
            "return_condition": self.return_condition,
            "vertex_transitive": self.vertex_transitive,
            "distance_regular": self.distance_regular,
            "intersection_array": None if self.intersection_array is None else self.intersection_array.to_dict(),
            "reversible": self.reversible,
            "r_d": [format_rational(q) for q in self.r_d],
            "r_pi": None if self.r_pi is None else format_rational(self.r_pi),
            "spectral_gap": self.spectral_gap,
            "max_hitting_asymmetry": format_rational(self.max_hitting_asymmetry),
        }


def _check_lattice(rep: ClassificationReport):
    rules = [
        ("walk_regular", "regular"),
        ("return_condition", "regular"),
        ("distance_regular", "walk_regular"),
        ("vertex_transitive", "walk_regular"),
        ("walk_regular", "reversible"),
    ]
    for a, b in rules:
        if rep.flag(a) and not rep.flag(b):
            raise LatticeViolation(f"{a} holds but {b} does not", rep.graph6)
    if rep.return_condition != rep.walk_regular:
        raise LatticeViolation(
            f"return condition ({rep.return_condition}) differs from walk-regularity ({rep.walk_regular})", rep.graph6
        )


def classify(g: Graph) -> ClassificationReport:
    """Every property flag and invariant for one connected graph.

    The single-vertex graph is reported as reversible with no pairs to
    compare; it has no ``R_pi`` (``2m = 0``) and no spectral gap.
    """
    if not is_connected(g):
        raise Disconnected(f"classify needs a connected graph: {write_graph6(g)}")
    regular = g.is_regular()
    dra = is_distance_regular(g)
    if g.n >= 2:
        rev = is_reversible(g)
        reversible, r_d, rpi, asym = rev.reversible, rev.r_d, rev.r_pi, rev.max_asymmetry
    else:
        reversible, r_d, rpi, asym = True, (), None, Fraction(0)
    rep = ClassificationReport(
        graph6=write_graph6(g),
        n=g.n,
        m=g.m,
        regular=regular,
        degree=g.degrees[0] if regular else None,
        walk_regular=is_walk_regular(g),
        return_condition=satisfies_return_condition(g),
        vertex_transitive=is_vertex_transitive(g),
        distance_regular=dra is not None,
        intersection_array=dra,
        reversible=reversible,
        r_d=r_d,
        r_pi=rpi,
        spectral_gap=round(spectral_gap_estimate(g), GAP_DECIMALS) if regular and g.n >= 2 else None,
        max_hitting_asymmetry=asym,
    )
    _check_lattice(rep)
    return rep


# --------------------------------------------------------------------------
# filters


_AND = re.compile(r"\s*(?:∧|&&|&|\band\b|\bAND\b|,)\s*")
_NOT = re.compile(r"^(?:¬|!|~|not\s+|NOT\s+)\s*")


@dataclass(frozen=True)
class Filter:
    """Conjunction of possibly negated flags, e.g. ``walk_regular ∧ ¬vertex_transitive``."""

    text: str
    literals: tuple[tuple[str, bool], ...]

    def __call__(self, rep: ClassificationReport) -> bool:
        return all(rep.flag(name) == positive for name, positive in self.literals)


def parse_filter(text: str) -> Filter:
    parts = [p for p in _AND.split(text.strip()) if p.strip()]
    if not parts:
        raise BadFilter("empty filter expression")
    literals = []
    for part in parts:
        part = part.strip()
        positive = True
        while True:
            m = _NOT.match(part)
            if not m:
                break
            positive = not positive
            part = part[m.end():]
        if part not in FLAGS:
            raise BadFilter(f"unknown flag {part!r} in {text!r}; flags are {', '.join(FLAGS)}")
        literals.append((part, positive))
    return Filter(text, tuple(literals))


# --------------------------------------------------------------------------
# scanning


@dataclass
class ScanSummary:
    total: int = 0
    classified: int = 0
    skipped_disconnected: int = 0
    errors: list = field(default_factory=list)
    counts: dict = field(default_factory=lambda: {f: 0 for f in FLAGS})
    buckets: dict = field(default_factory=dict)
    r_pi_spectrum: list = field(default_factory=list)

    def to_dict(self):
        return {
            "total": self.total,
            "classified": self.classified,
            "skipped_disconnected": self.skipped_disconnected,
            "errors": self.errors,
            "counts": self.counts,
            "buckets": self.buckets,
            "r_pi_spectrum": [{"value": format_rational(v), "witness": w} for v, w in self.r_pi_spectrum],
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2, ensure_ascii=False) + "\n"


def _classify_outcome(g: Graph):
    try:
        return "ok", classify(g)
    except Disconnected as exc:
        return "disconnected", str(exc)
    except WalksymError as exc:
        return "error", f"{type(exc).__name__}: {exc}"


def _outcomes(graphs, jobs):
    if jobs <= 1:
        for g in graphs:
            yield g, _classify_outcome(g)
        return
    graphs = list(graphs)
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        # map preserves input order, which is what makes the summary deterministic
        yield from zip(graphs, pool.map(_classify_outcome, graphs, chunksize=8))


def _dedup_spectrum(pairs):
    seen = {}
    for value, witness in pairs:
        seen.setdefault(value, witness)
    return sorted(seen.items())


def scan_stream(graphs: Iterable[Graph], filters: Iterable[str | Filter] = (), jobs: int = 1) -> ScanSummary:
    """Classify every graph and aggregate in input order.

    Disconnected graphs are counted and skipped; other data errors are
    tallied.  A broken implication between flags aborts the scan.
    """
    if jobs < 1:
        raise ValueError("jobs must be >= 1")
    filters = [f if isinstance(f, Filter) else parse_filter(f) for f in filters]
    summary = ScanSummary(buckets={f.text: [] for f in filters})
    spectrum = []
    for index, (g, (status, payload)) in enumerate(_outcomes(graphs, jobs)):
        summary.total += 1
        if status == "disconnected":
            summary.skipped_disconnected += 1
            log.warning("skipping disconnected graph #%d %s", index, write_graph6(g))
            continue
        if status == "error":
            summary.errors.append({"index": index, "graph6": write_graph6(g), "error": payload})
            continue
        rep = payload
        summary.classified += 1
        for flag in FLAGS:
            summary.counts[flag] += rep.flag(flag)
        for f in filters:
            if f(rep):
                summary.buckets[f.text].append(rep.graph6)
        if rep.r_pi is not None:
            spectrum.append((rep.r_pi, rep.graph6))
    summary.r_pi_spectrum = _dedup_spectrum(spectrum)
    return summary


def r_pi_spectrum(graphs: Iterable[Graph]) -> list[tuple[Fraction, str]]:
    """Distinct ``R_pi`` values over the reversible graphs of a stream, ascending, first witness kept."""
    pairs = []
    for g in graphs:
        if g.n < 2 or not is_connected(g):
            continue
        try:
            pairs.append((r_pi(g), write_graph6(g)))
        except NotReversible:
            continue
    return _dedup_spectrum(pairs)


def spectrum_csv(spectrum) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(["value_num", "value_den", "witness_graph6"])
    for value, witness in spectrum:
        w.writerow([value.numerator, value.denominator, witness])
    return buf.getvalue()
