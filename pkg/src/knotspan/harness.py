"""Corpus ingestion, an invariant cache, and batch verification over knot tables.

Crossing numbers and minimality come from the corpus ``c=`` annotations; the
diagram quantities (Turaev genus, adequacy, state counts) are computed from
the given diagrams.  Reports say which is which.
"""

from __future__ import annotations

import hashlib
import json
import logging
import os
import pathlib
import time
from dataclasses import asdict, dataclass, field
from fractions import Fraction
from typing import Callable, Dict, Iterable, List, Optional, Sequence, Tuple

from .bracket import bracket_report, jones, kauffman_bracket
from .diagram import LinkDiagram, PDError, is_connected, is_reduced, parse_pd_line, serialize_pd, writhe
from .kauffman import (
    DEFAULT_MAX_CROSSINGS,
    PreconditionError,
    _pieces,
    canonical_code,
    corollary_5_1_check,
    lambda_poly,
)
from .laurent import LaurentPoly1, LaurentPoly2, span_a
from .states import is_adequate_diagram, turaev_genus_diagram

__all__ = [
    "CACHE_ENV",
    "CorpusEntry",
    "Corpus",
    "InvariantCache",
    "VerificationRecord",
    "TheoremViolation",
    "NonMinimalEntry",
    "ingest",
    "diagram_key",
    "verify_theorem_1_1",
    "verify_conjecture_3_3",
    "verify_corollary_5_1",
    "verify_corollary_5_2",
    "verify_corollary_5_3",
    "scan_table_1",
    "load_corpus_dir",
]

log = logging.getLogger(__name__)

CACHE_ENV = "KNOTSPAN_CACHE"

ADEQUATE_GENUS_ONE = "adequate-genus-one"
ALTERNATING = "alternating"
OTHER = "other"
VIOLATION = "VIOLATION"


class TheoremViolation(RuntimeError):
    def __init__(self, record: "VerificationRecord", pd: str):
        super().__init__(f"{record.name}: span V = {record.span_jones}, adequate={record.adequate}, "
                         f"g_T(D)={record.gT_diagram}; diagram {pd}")
        self.record = record
        self.pd = pd


class NonMinimalEntry(ValueError):
    pass


# -- corpus files ----------------------------------------------------------

@dataclass(frozen=True)
class CorpusEntry:
    name: str
    pd: LinkDiagram
    declared_crossing_number: Optional[int] = None
    declared_alternating: Optional[bool] = None
    notes: Dict[str, str] = field(default_factory=dict, compare=False)
    line: int = 0


class Corpus(list):
    """A list of entries that also remembers the lines it could not read."""

    def __init__(self, entries=(), errors=(), source=""):
        super().__init__(entries)
        self.errors: List[Tuple[int, str]] = list(errors)
        self.source = source


def _flag(value: Optional[str], key: str) -> Optional[bool]:
    if value is None:
        return None
    if value not in ("0", "1"):
        raise PDError(f"{key}= must be 0 or 1, got {value!r}")
    return value == "1"


def ingest(path) -> Corpus:
    """Read a corpus file; malformed lines are logged and skipped."""
    path = pathlib.Path(path)
    entries, errors = [], []
    with path.open() as fh:
        for lineno, raw in enumerate(fh, 1):
            line = raw.strip()
            if not line or line.startswith("#"):
                continue
            try:
                name, notes, D = parse_pd_line(line)
                declared = int(notes["c"]) if "c" in notes else None
                alt = _flag(notes.get("alt"), "alt")
            except (PDError, ValueError) as exc:
                errors.append((lineno, str(exc)))
                log.warning("%s:%d: %s", path, lineno, exc)
                continue
            entries.append(CorpusEntry(name, D, declared, alt, notes, lineno))
    return Corpus(entries, errors, str(path))


def load_corpus_dir(directory, crossing_numbers: Optional[Iterable[int]] = None) -> Dict[int, Corpus]:
    """Corpora named ``knots_cNN.pd`` in ``directory``, keyed by crossing number."""
    directory = pathlib.Path(directory)
    if not directory.is_dir():
        raise FileNotFoundError(f"no corpus directory {directory}")
    found = {}
    for p in sorted(directory.glob("knots_c*.pd")):
        try:
            found[int(p.stem[len("knots_c"):])] = p
        except ValueError:
            continue
    wanted = sorted(found) if crossing_numbers is None else list(crossing_numbers)
    missing = [c for c in wanted if c not in found]
    if missing:
        raise FileNotFoundError(f"missing corpus for crossing numbers {missing} in {directory}")
    return {c: ingest(found[c]) for c in wanted}


# -- cache -----------------------------------------------------------------

def diagram_key(D: LinkDiagram) -> str:
    """Hash of the diagram up to relabeling and orientation of its strands."""
    codes = sorted(canonical_code(p) for p in _pieces(D.crossings))
    return hashlib.sha1(repr((codes, D.free_loops)).encode()).hexdigest()


class InvariantCache:
    """Append-only JSONL store of polynomial text keyed by (diagram key, kind).

    Each record is written with a single append, so concurrent writers only
    produce duplicates.  On load the last readable record for a key wins;
    unreadable lines are skipped with a warning.
    """

    def __init__(self, path=None):
        path = path or os.environ.get(CACHE_ENV)
        self.path = pathlib.Path(path) if path else None
        self._data: Dict[Tuple[str, str], str] = {}
        if self.path is not None and self.path.exists():
            self._load()

    def _load(self):
        with self.path.open() as fh:
            for lineno, line in enumerate(fh, 1):
                if not line.strip():
                    continue
                try:
                    rec = json.loads(line)
                    self._data[(rec["key"], rec["kind"])] = rec["value"]
                except (ValueError, KeyError, TypeError):
                    log.warning("cache %s:%d: skipping unreadable record", self.path, lineno)

    def get(self, key: str, kind: str) -> Optional[str]:
        return self._data.get((key, kind))

    def put(self, key: str, kind: str, value: str) -> None:
        self._data[(key, kind)] = value
        if self.path is None:
            return
        line = json.dumps({"key": key, "kind": kind, "value": value}) + "\n"
        fd = os.open(self.path, os.O_WRONLY | os.O_APPEND | os.O_CREAT, 0o644)
        try:
            os.write(fd, line.encode())
        finally:
            os.close(fd)

    def bracket(self, D: LinkDiagram, max_crossings: int = 24) -> LaurentPoly1:
        key = diagram_key(D)
        hit = self.get(key, "bracket")
        if hit is not None:
            return LaurentPoly1.parse(hit, "A")
        value = kauffman_bracket(D, max_crossings)
        self.put(key, "bracket", str(value))
        return value

    def lam(self, D: LinkDiagram, max_crossings: int = DEFAULT_MAX_CROSSINGS) -> LaurentPoly2:
        key = diagram_key(D)
        hit = self.get(key, "lambda")
        if hit is not None:
            return LaurentPoly2.parse(hit)
        value = lambda_poly(D, max_crossings)
        self.put(key, "lambda", str(value))
        return value


# -- records ---------------------------------------------------------------

@dataclass
class VerificationRecord:
    name: str
    c: int
    writhe: int
    span_jones: Fraction
    gT_diagram: Optional[int]
    adequate: bool
    aM: int
    am: int
    spanA_Lambda: Optional[int]
    theorem11_status: str
    jones_leading: int = 0
    jones_trailing: int = 0
    quasi_alternating: Optional[bool] = None
    corollary_5_4: Optional[bool] = None
    timing: float = 0.0

    def as_dict(self) -> dict:
        out = asdict(self)
        out["span_jones"] = str(self.span_jones)
        return out

    @staticmethod
    def columns() -> List[str]:
        return list(VerificationRecord.__dataclass_fields__)


def _classify(span: Fraction, c: int, adequate: bool, g: Optional[int], alternating: Optional[bool]) -> str:
    genus_one = adequate and g == 1
    if (span == c - 1) != genus_one:
        return VIOLATION
    if genus_one:
        return ADEQUATE_GENUS_ONE
    if span == c and alternating is not False:
        return ALTERNATING
    return OTHER


def _check_minimal(entry: CorpusEntry) -> int:
    c = entry.pd.n_crossings
    if entry.declared_crossing_number is None:
        raise NonMinimalEntry(f"{entry.name}: no c= annotation, minimality unknown")
    if entry.declared_crossing_number != c:
        raise NonMinimalEntry(f"{entry.name}: declared c={entry.declared_crossing_number} "
                              f"but the diagram has {c} crossings")
    return c


def verify_entry(entry: CorpusEntry, cache: Optional[InvariantCache] = None,
                 with_lambda: bool = False, max_crossings: int = DEFAULT_MAX_CROSSINGS) -> VerificationRecord:
    """Compute one record; the Kauffman polynomial only when ``with_lambda``."""
    t0 = time.perf_counter()
    D = entry.pd
    c = _check_minimal(entry)
    if c > max_crossings:
        from .bracket import CutoffError

        raise CutoffError(f"{entry.name}: {c} crossings exceeds the cutoff of {max_crossings}")
    cache = cache or InvariantCache(None)
    br = cache.bracket(D)
    V = jones(D, br)
    rep = bracket_report(D, br)
    adequate = is_adequate_diagram(D)
    g = turaev_genus_diagram(D) if is_connected(D) else None
    spanA = span_a(cache.lam(D, max_crossings)) if with_lambda else None
    coeffs = [v for _, v in sorted(V.items())]
    span = V.span_t
    qa = _flag(entry.notes.get("qa"), "qa")
    cor54 = None if qa is not True else (span == c or span <= c - 2)
    return VerificationRecord(
        name=entry.name, c=c, writhe=writhe(D), span_jones=span, gT_diagram=g,
        adequate=adequate, aM=rep.aM, am=rep.am, spanA_Lambda=spanA,
        theorem11_status=_classify(span, c, adequate, g, entry.declared_alternating),
        jones_leading=coeffs[-1], jones_trailing=coeffs[0],
        quasi_alternating=qa, corollary_5_4=cor54,
        timing=time.perf_counter() - t0,
    )


def verify_theorem_1_1(entries: Sequence[CorpusEntry], cache: Optional[InvariantCache] = None,
                       abort_on_violation: bool = True, with_lambda: bool = False,
                       max_crossings: int = DEFAULT_MAX_CROSSINGS,
                       progress: Optional[Callable[[VerificationRecord], None]] = None) -> List[VerificationRecord]:
    """Check ``span V = c - 1  <=>  adequate and g_T(D) = 1`` entry by entry.

    Raises :class:`TheoremViolation` at the first disagreement unless
    ``abort_on_violation`` is false, and :class:`NonMinimalEntry` when an
    entry's declared crossing number differs from its diagram.
    """
    records = []
    for entry in entries:
        rec = verify_entry(entry, cache, with_lambda, max_crossings)
        records.append(rec)
        if progress:
            progress(rec)
        if rec.theorem11_status == VIOLATION and abort_on_violation:

            raise TheoremViolation(rec, serialize_pd(entry.pd))
    return records


def verify_conjecture_3_3(entries: Sequence[CorpusEntry], max_c: int,
                          cache: Optional[InvariantCache] = None,
                          max_crossings: int = DEFAULT_MAX_CROSSINGS) -> dict:
    """``span_a Lambda <= c - 2 g_T`` with the diagram genus standing in for ``g_T(L)``.

    For adequate entries the diagram genus is the link genus, so a failure
    is a violation.  For the rest the diagram genus only bounds ``g_T(L)``
    from above and a negative slack is flagged, not counted.
    """
    cache = cache or InvariantCache(None)
    rows, violations, flagged = [], [], []
    for entry in entries:
        D = entry.pd
        c = _check_minimal(entry)
        if c > max_c or not is_connected(D):
            continue
        lam = cache.lam(D, max_crossings)
        g = turaev_genus_diagram(D)
        adequate = is_adequate_diagram(D)
        slack = c - 2 * g - span_a(lam)
        row = {"name": entry.name, "c": c, "span_a": span_a(lam), "gT_diagram": g,
               "adequate": adequate, "slack": slack}
        rows.append(row)
        if slack < 0:
            (violations if adequate else flagged).append(entry.name)
    return {
        "checked": len(rows),
        "adequate_checked": sum(r["adequate"] for r in rows),
        "violations": violations,
        "flagged_non_adequate": flagged,
        "rows": rows,
    }


def verify_corollary_5_1(entries: Sequence[CorpusEntry], max_c: int,
                         cache: Optional[InvariantCache] = None,
                         max_crossings: int = DEFAULT_MAX_CROSSINGS) -> dict:
    """Run the a-degree check on every adequate, Turaev-genus-one entry up to ``max_c``."""
    cache = cache or InvariantCache(None)
    rows = []
    for entry in entries:
        D = entry.pd
        c = _check_minimal(entry)
        if c > max_c or not is_connected(D):
            continue
        if not is_adequate_diagram(D) or turaev_genus_diagram(D) != 1:
            continue
        out = corollary_5_1_check(D, cache.lam(D, max_crossings))
        out["name"] = entry.name
        rows.append(out)
    return {
        "checked": len(rows),
        "failures": [r["name"] for r in rows if not r["ok"]],
        "span_failures": [r["name"] for r in rows if r["span_a"] != r["expected_span_a"]],
        "rows": rows,
    }


def verify_corollary_5_2(records: Sequence[VerificationRecord]) -> dict:
    """Entries with ``span V = c - 1`` have Jones leading/trailing coefficients of absolute value one."""
    hits = [r for r in records if r.span_jones == r.c - 1]
    bad = [r.name for r in hits if abs(r.jones_leading) != 1 or abs(r.jones_trailing) != 1]
    return {"checked": len(hits), "failures": bad,
            "note": "arc index alpha(L) = c(L) is implied for these entries, not computed"}


def verify_corollary_5_3(diagrams: Iterable[LinkDiagram]) -> dict:
    """Among connected reduced diagrams, ``span <D> = 4(c - 1)`` should mean adequate with genus one.

    Diagrams that reach the bound without being adequate of genus one fall
    under the other branch (an alternating link with one fewer crossing),
    which cannot be decided from a single diagram; they are listed, not
    counted as failures.
    """
    checked, hits, genus_one, undecided = 0, 0, 0, []
    for D in diagrams:
        if D.n_crossings < 2 or not is_connected(D) or not is_reduced(D):
            continue
        checked += 1
        br = kauffman_bracket(D)
        if br.span != 4 * (D.n_crossings - 1):
            continue
        hits += 1
        if is_adequate_diagram(D) and turaev_genus_diagram(D) == 1:
            genus_one += 1
        else:

            undecided.append(serialize_pd(D))
    return {"checked": checked, "at_bound": hits, "adequate_genus_one": genus_one,
            "alternating_branch_undecided": undecided}


def scan_table_1(corpus_dir, crossing_numbers: Optional[Iterable[int]] = None,
                 cache: Optional[InvariantCache] = None) -> Dict[int, int]:
    """Per crossing number, how many corpus entries have ``span V = c - 1``."""
    corpora = load_corpus_dir(corpus_dir, crossing_numbers)
    cache = cache or InvariantCache(None)
    counts = {}
    for c, corpus in corpora.items():
        n = 0
        for entry in corpus:
            D = entry.pd
            if jones(D, cache.bracket(D)).span_t == c - 1:
                n += 1
        counts[c] = n
    return counts
