"""psingular: spectra of p-singular Cayley graphs from the command line.

    python cli.py analyze --group S4 --prime 2 --oracle
    python cli.py corpus --max-order 60
    python cli.py blocks --group A5 --prime 5
    python cli.py mn-table 5
    python cli.py catalog
"""

import argparse
import json
import logging
import sys
from dataclasses import dataclass
from pathlib import Path

from catalog import build_group, catalog_names
from corpus import mn_matches_character_table, pair_verdicts, run_corpus, summary_rows
from errors import InputError, NTooLarge, UsageError, VerificationError
from group_core import enumerate_group, parse_generators
from partitions_mn import mn_table
from settings import DEFAULT_MAX_ORDER, MN_MAX_N, ORDER_CAP
import spectra

logger = logging.getLogger(__name__)

COMMANDS = ("analyze", "corpus", "blocks", "mn-table", "catalog")


@dataclass(frozen=True)
class RunConfig:
    command: str
    group: str = None
    gens: str = None
    prime: int = None
    oracle: bool = False
    json_out: str = None
    max_order: int = DEFAULT_MAX_ORDER
    jobs: int = 1
    n: int = None

    def __post_init__(self):
        if self.command not in COMMANDS:
            raise UsageError(f"unknown command {self.command!r}")
        if self.command in ("analyze", "blocks"):
            if not (self.group or self.gens):
                raise UsageError(f"{self.command} needs --group or --gens")
            if self.prime is None:
                raise UsageError(f"{self.command} needs --prime")
        if self.command == "corpus":
            if not 1 <= self.max_order <= ORDER_CAP:
                raise UsageError(f"--max-order must lie in 1..{ORDER_CAP}")
            if self.jobs < 1:
                raise UsageError("--jobs must be positive")
        if self.command == "mn-table":
            if self.n is None or self.n < 1:
                raise UsageError("mn-table needs n >= 1")
            if self.n > MN_MAX_N:
                raise NTooLarge(f"n = {self.n} exceeds {MN_MAX_N}")

    @classmethod
    def from_args(cls, args):
        return cls(
            command=args.command,
            group=getattr(args, "group", None),
            gens=getattr(args, "gens", None),
            prime=getattr(args, "prime", None),
            oracle=getattr(args, "oracle", False),
            json_out=getattr(args, "json", None),
            max_order=getattr(args, "max_order", DEFAULT_MAX_ORDER),
            jobs=getattr(args, "jobs", 1),
            n=getattr(args, "n", None),
        )


def build_argparser():
    parser = argparse.ArgumentParser(
        prog="psingular",
        description="Spectra, energy and p-blocks of Cayley graphs on p-singular elements.",
    )
    parser.add_argument("-v", "--verbose", action="count", default=0, help="-v for INFO, -vv for DEBUG")
    sub = parser.add_subparsers(dest="command", required=True)

    def group_args(p):
        p.add_argument("--group", help="catalog name (see 'catalog') or a generator file")
        p.add_argument("--gens", help="file with one generator per line in cycle notation")
        p.add_argument("--prime", type=int, help="prime dividing |G|")
        p.add_argument("--json", help="also write the result as JSON to this path")

    analyze = sub.add_parser("analyze", help="spectrum, energy, nullity, diameter and checks for one pair")
    group_args(analyze)
    analyze.add_argument("--oracle", action="store_true", help="cross-check against the adjacency matrix")

    blocks = sub.add_parser("blocks", help="p-block partition of Irr(G)")
    group_args(blocks)

    corpus = sub.add_parser("corpus", help="run every check over the manifest groups")
    corpus.add_argument("--max-order", type=int, default=DEFAULT_MAX_ORDER)
    corpus.add_argument("--jobs", type=int, default=1, help="worker processes")
    corpus.add_argument("--no-oracle", dest="oracle", action="store_false", help="skip the numeric oracle")
    corpus.add_argument("--json", help="write per-pair reports as JSON to this path")

    mn = sub.add_parser("mn-table", help="S_n character table by the Murnaghan-Nakayama rule")
    mn.add_argument("n", type=int)
    mn.add_argument("--json", help="write the table to this path instead of stdout")

    sub.add_parser("catalog", help="list the built-in groups")
    return parser


def load_group(cfg):
    source = cfg.gens or cfg.group
    path = Path(source)
    if cfg.gens or path.is_file():
        if not path.is_file():
            raise UsageError(f"generator file {source} not found")
        return enumerate_group(parse_generators(path.read_text()), label=path.stem)
    return build_group(source)


def _write_json(data, path):
    text = json.dumps(data, indent=2)
    if path:
        Path(path).write_text(text + "\n")
        logger.info("wrote %s", path)
    return text


def _eig_text(eigs):
    return ", ".join(f"{v}^{m}" for v, m in eigs)


def cmd_analyze(cfg):
    G = load_group(cfg)
    verdicts = pair_verdicts(G, cfg.prime, oracle=False)
    if cfg.oracle:
        verdicts.append(spectra.verify_oracle(G, cfg.prime))
    report = spectra.report_dict(G, cfg.prime, verdicts)
    if cfg.oracle:
        report["verified"] = verdicts[-1].passed
    _write_json(report, cfg.json_out)

    print(f"{report['group']}  |G| = {report['order']}  p = {report['prime']}")
    print(f"  d_p = {report['d_p']}  c_p = {report['c_p']}  r_p = {report['r_p']}  |G|_p = {report['order_p']}")
    print(f"  spectrum: {_eig_text(report['eigs'])}")
    print(f"  nullity {report['nullity']}  energy {report['energy']}"
          f"  (bounds {report['bound_additive']}, {report['bound_sqrt']:.3f})")
    print(f"  diameter per component {report['diameter_per_component']}")
    print(f"  singular {report['singular']}  hyperenergetic {report['hyperenergetic']}")
    for v in verdicts:
        print(f"  [{'ok' if v.passed else 'FAIL'}] {v.name}")
    if "verified" in report:
        print(f"  verified {report['verified']}")
    return 0 if all(v.passed for v in verdicts) else 2


def cmd_blocks(cfg):
    G = load_group(cfg)
    a = spectra.analyze(G, cfg.prime)
    T = a.table
    data = {
        "group": G.label,
        "prime": a.profile.p,
        "blocks": [
            {"rows": list(b), "degrees": [T.degrees[r] for r in b], "principal": i == a.blocks.principal_index}
            for i, b in enumerate(a.blocks.blocks)
        ],
    }
    _write_json(data, cfg.json_out)
    print(f"{G.label} p = {a.profile.p}: {len(a.blocks)} block(s)")
    for block in data["blocks"]:
        mark = "*" if block["principal"] else " "
        print(f" {mark} degrees {block['degrees']}  rows {block['rows']}")
    return 0


def cmd_corpus(cfg):
    results = run_corpus(cfg.max_order, jobs=cfg.jobs, oracle=cfg.oracle)
    rows = summary_rows(results)
    if cfg.json_out:
        _write_json([r for result in results for r in result.reports], cfg.json_out)
    for row in rows:
        bad = [name for name, ok in row["checks"].items() if not ok]
        status = "ok" if not bad else "FAIL " + ",".join(bad)
        print(f"{row['group']:>7} {row['order']:>4}  p={row['prime']:<2} energy {row['energy']:>6}"
              f"  nullity {row['nullity']:>4}  blocks {row['blocks']:>2}  {status}")
    failed = [r for r in results if not r.passed]
    for result in failed:
        for line in result.failures():
            print(f"FAIL {result.group}: {line}")
    print(f"{len(results)} group(s), {len(rows)} pair(s), {len(failed)} failing group(s)")
    return 0 if not failed else 2


def cmd_mn_table(cfg):
    parts, values = mn_table(cfg.n)
    text = _write_json({"n": cfg.n, "partitions": [list(p.parts) for p in parts], "values": values}, cfg.json_out)
    if not cfg.json_out:
        print(text)
    if cfg.n <= 6 and not mn_matches_character_table(cfg.n):
        print(f"error: MN table for S{cfg.n} disagrees with the character table", file=sys.stderr)
        return 2
    return 0


def cmd_catalog(cfg):
    for name in catalog_names():
        print(f"{name:>6}  {build_group(name).order}")
    return 0


HANDLERS = {
    "analyze": cmd_analyze,
    "corpus": cmd_corpus,
    "blocks": cmd_blocks,
    "mn-table": cmd_mn_table,
    "catalog": cmd_catalog,
}


def main(argv=None):
    args = build_argparser().parse_args(argv)
    level = {0: logging.WARNING, 1: logging.INFO}.get(args.verbose, logging.DEBUG)
    logging.basicConfig(level=level, format="%(asctime)s - %(levelname)s - %(name)s - %(message)s")
    try:
        cfg = RunConfig.from_args(args)
        return HANDLERS[cfg.command](cfg)
    except InputError as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 1
    except VerificationError as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
