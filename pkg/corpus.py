"""Verification sweep over the versioned group manifest."""

import logging
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field

from sympy import primefactors

from catalog import build_group, canonical_name
from char_table import character_table
from errors import OrderCapExceeded, VerificationError
from group_core import conjugacy_classes, is_p_solvable, is_solvable
from partitions_mn import cycle_type, mn_character, partitions_of
from settings import CORPUS_MANIFEST, LARGE_PRODUCT_CAP, ORACLE_COMPARE_MAX
import spectra

logger = logging.getLogger(__name__)


def load_manifest(path=CORPUS_MANIFEST):
    """(version, names) from a manifest whose first line is '# corpus <version>'."""
    lines = path.read_text().splitlines()
    version = lines[0].removeprefix("#").strip().removeprefix("corpus").strip() if lines else ""
    names = []
    for line in lines:
        line = line.split("#", 1)[0].strip()
        if line:
            names.append(canonical_name(line))
    return version, names


@dataclass
class GroupResult:
    group: str
    order: int
    reports: list = field(default_factory=list)
    verdicts: list = field(default_factory=list)
    errors: list = field(default_factory=list)
    seconds: float = 0.0

    @property
    def passed(self):
        return not self.errors and all(v.passed for v in self.verdicts)

    def failures(self):
        out = [f"{v.name} p={v.prime}: " + ", ".join(k for k, ok in v.clauses.items() if not ok)
               for v in self.verdicts if not v.passed]
        return out + self.errors


def pair_verdicts(G, p, oracle=True):
    """Every check that applies to (G, p)."""
    verdicts = [
        spectra.verify_spectrum_invariants(G, p),
        spectra.verify_block_consistency(G, p),
        spectra.verify_singularity_predicates(G, p),
        spectra.verify_diameter_conjecture(G, p),
    ]
    if is_p_solvable(G, p):
        verdicts.append(spectra.verify_theorem_energy(G, p))
    if spectra.nil_hypothesis(G, p):
        verdicts.append(spectra.verify_theorem_nil(G, p))
    if oracle and G.order <= ORACLE_COMPARE_MAX:
        verdicts.append(spectra.verify_oracle(G, p))
    return verdicts


def mn_matches_character_table(n):
    """The MN rows for S_n coincide with the computed character table."""
    G = build_group(f"S{n}")
    T = character_table(G)
    types = [cycle_type(G.elements[c.representative]) for c in conjugacy_classes(G)]
    mn_rows = sorted(tuple(mn_character(lam, mu) for mu in types) for lam in partitions_of(n))
    table_rows = sorted(tuple(v.to_int() for v in row) for row in T.values)
    return mn_rows == table_rows


def run_group(name, oracle=True):
    started = time.perf_counter()
    G = build_group(name)
    result = GroupResult(group=G.label, order=G.order)
    try:
        for p in primefactors(G.order):
            verdicts = pair_verdicts(G, p, oracle)
            result.verdicts.extend(verdicts)
            result.reports.append(spectra.report_dict(G, p, verdicts))
        if G.order > 1 and is_solvable(G):
            result.verdicts.append(spectra.verify_corollary_solvable(G))
        if 6 * G.order <= LARGE_PRODUCT_CAP:
            result.verdicts.append(spectra.verify_corollary_large(G, cap=LARGE_PRODUCT_CAP))
    except VerificationError as exc:
        result.errors.append(f"{type(exc).__name__}: {exc}")
    result.seconds = time.perf_counter() - started
    logger.info("%s (order %d) done in %.2fs", G.label, G.order, result.seconds)
    return result


def select(names, max_order):
    """Manifest names whose group order is at most max_order, in manifest order."""
    chosen = []
    for name in names:
        try:
            build_group(name, cap=max_order)
        except OrderCapExceeded:
            continue
        chosen.append(name)
    return chosen


def run_corpus(max_order, jobs=1, oracle=True, path=CORPUS_MANIFEST):
    """Results in manifest order, whatever order the workers finish in."""
    version, names = load_manifest(path)
    names = select(names, max_order)
    logger.info("corpus %s: %d group(s) with order <= %d", version, len(names), max_order)
    if jobs > 1 and len(names) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            return list(pool.map(run_group, names, [oracle] * len(names)))
    return [run_group(name, oracle) for name in names]


def summary_rows(results):
    """One row per (group, prime) pair for the pass/fail matrix."""
    rows = []
    for result in results:
        for report in result.reports:
            verdicts = report["verdicts"]
            rows.append({
                "group": result.group,
                "order": result.order,
                "prime": report["prime"],
                "energy": report["energy"],
                "nullity": report["nullity"],
                "blocks": len(report["blocks"]),
                "singular": report["singular"],
                "checks": {name: v["passed"] for name, v in verdicts.items()},
            })
    return rows
