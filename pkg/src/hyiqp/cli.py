"""Command-line surface.

Subcommands: ``energy`` (one closed-form level), ``expect`` (the
discrepancy report for one observable), ``table`` (regenerate a bundled
reference table), ``figure`` (plot-ready CSV for the potential and
wave-function figures), ``check`` (verification suites), ``molecules``
(registry listing).

Output is deterministic: fixed row ordering, floats at 12 significant
digits, no timestamps.  Exit codes: 0 success, 1 check failure, 2 domain
error, 3 unknown molecule/table lookup.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import checks
from .constants import PAPER, for_mode, get_molecule, registry
from .errors import DomainError, HyiqpError, UnknownMoleculeError
from .hft import OBSERVABLES, expectation_report
from .oracle import default_config, solve_matrix
from .potential import PotentialParams
from .spectrum import WAVEFUNCTION_CONVENTIONS, energy
from .tables import (MISSING_TABLE_IDS, TABLE_SPECS, figure_potential_data,
                     figure_wavefunction_data, load_fixture, regenerate_table,
                     table_spec)

EXIT_OK = 0
EXIT_CHECK_FAILED = 1
EXIT_DOMAIN = 2
EXIT_LOOKUP = 3


def fmt(value) -> str:
    """Fixed 12-significant-digit formatting; empty string for missing cells."""
    if value is None:
        return ""
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, float):
        return f"{value:.12g}"
    return str(value)


class Envelope:
    """Deterministic CSV/JSON writer with a metadata block."""

    def __init__(self, meta: dict, columns, rows):
        self.meta = meta
        self.columns = list(columns)
        self.rows = [[fmt(v) for v in row] for row in rows]

    def render(self, out_format: str) -> str:
        if out_format == "json":
            doc = {"meta": self.meta, "columns": self.columns, "rows": self.rows}
            return json.dumps(doc, indent=2) + "\n"
        lines = [f"# {k}: {v}" for k, v in self.meta.items()]
        lines.append(",".join(self.columns))
        lines.extend(",".join(row) for row in self.rows)
        return "\n".join(lines) + "\n"


def _emit(env: Envelope, args) -> None:
    text = env.render(args.format)
    if args.output:
        with open(args.output, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _meta(args, mode: str, extra: dict | None = None) -> dict:
    meta = {
        "mode": mode,
        "constants": for_mode(mode).version,
        "command": "hyiqp " + " ".join(args.raw_argv),
    }
    if extra:
        meta.update(extra)
    return meta


def _parse_params(text: str) -> PotentialParams:
    parts = [p.strip() for p in text.split(",")]
    if len(parts) != 5:
        raise DomainError("--params expects five comma-separated values V0,A,B,C,alpha")
    v0, a, b, c, alpha = (float(p) for p in parts)
    return PotentialParams(v0=v0, a=a, b=b, c=c, alpha=alpha)


def cmd_energy(args) -> int:
    constants = for_mode(args.mode)
    if args.params is not None:
        if args.mu is None:
            raise DomainError("--params requires --mu")
        if args.v0 is not None:
            raise DomainError("--v0 applies to --molecule; with --params set V0 "
                              "as the first of the five values")
        p = _parse_params(args.params)
        mu = args.mu
        label = "params"
    else:
        if args.mu is not None:
            raise DomainError("--mu applies to --params; molecules carry their "
                              "own reduced mass")
        mol = get_molecule(args.molecule)
        p = PotentialParams.from_molecule(mol, v0=args.v0 or 0.0)
        mu = mol.mu
        label = mol.name
    res = energy(p, mu, args.n, args.l, constants)
    env = Envelope(
        _meta(args, args.mode, {"system": label, "v0": fmt(p.v0)}),
        ("n", "l", "energy", "gamma", "nu_residual", "eps2", "tau_slope",
         "bound_condition_ok", "below_asymptote"),
        [(res.n, res.l, res.energy, res.gamma, res.nu_residual, res.eps2,
          res.tau_slope, res.bound_condition_ok, res.below_asymptote)],
    )
    _emit(env, args)
    return EXIT_OK


REPORT_COLUMNS = ("n", "l", "paper_formula", "machine_derivative", "oracle",
                  "paper_table", "dev_pf_md", "dev_md_oracle", "dev_vs_table",
                  "note")


def _report_rows(rows):
    return [(r.n, r.l, r.paper_formula, r.machine_derivative, r.oracle,
             r.paper_table, r.dev_pf_md, r.dev_md_oracle, r.dev_vs_table,
             r.note) for r in rows]


def cmd_expect(args) -> int:
    constants = for_mode(args.mode)
    mol = get_molecule(args.molecule)
    oracle_solutions = None
    if args.oracle:
        p = PotentialParams.from_molecule(mol, v0=args.v0)
        cfg = default_config(mol.alpha, n_points=args.oracle_points)
        oracle_solutions = {
            l: solve_matrix(p, l, mol.mu, cfg, args.n_max + 1, constants)
            for l in range(args.l_max + 1)
        }
    fixtures = None
    for spec in TABLE_SPECS.values():
        if (spec.observable == args.observable and spec.molecule == mol.name
                and spec.fixture_file):
            fixtures = load_fixture(spec.table_id)
            break
    rows = expectation_report(
        mol, args.observable, n_max=args.n_max, l_max=args.l_max,
        constants=constants, v0=args.v0, exp_factor_r=args.exp_factor_r,
        fixtures=fixtures, oracle_solutions=oracle_solutions)
    env = Envelope(
        _meta(args, args.mode, {"molecule": mol.name, "observable": args.observable,
                                "v0": fmt(args.v0)}),
        REPORT_COLUMNS, _report_rows(rows))
    _emit(env, args)
    return EXIT_OK


def cmd_table(args) -> int:
    spec = table_spec(args.id)
    constants = for_mode(args.mode)
    result = regenerate_table(spec.table_id, constants, v0=args.v0)
    extra = {"table": result.table_id, "label": result.label}
    for i, note in enumerate(result.notes):
        extra[f"note{i + 1}"] = note
    env = Envelope(_meta(args, args.mode, extra), REPORT_COLUMNS,
                   _report_rows(result.rows))
    _emit(env, args)
    if result.missing:
        sys.stderr.write(
            f"table {spec.table_id}: missing from the reference set "
            "(see table 2b for the unattributed candidate block)\n")
    return EXIT_OK


def cmd_figure(args) -> int:
    constants = for_mode(args.mode)
    if args.id in (1, 2):
        r_max = args.r_max if args.r_max is not None else 10.0
        mol = get_molecule(args.molecule)
        p = PotentialParams.from_molecule(mol, v0=args.v0)
        alphas = tuple(float(x) for x in args.alphas.split(","))
        columns, cols, extra = figure_potential_data(
            args.id, p, alphas=alphas, r_min=args.r_min, r_max=r_max,
            n_points=args.points)
        rows = list(zip(*cols))
        extra.update({"figure": str(args.id), "molecule": mol.name, "v0": fmt(args.v0)})
    else:
        r_max = args.r_max if args.r_max is not None else 20.0
        columns, rows, extra = figure_wavefunction_data(
            args.id, constants, n=args.n, v0=args.v0, convention=args.convention,
            r_min=args.r_min, r_max=r_max, n_points=args.points)
        extra["figure"] = str(args.id)
    env = Envelope(_meta(args, args.mode, extra), columns, rows)
    _emit(env, args)
    return EXIT_OK


def cmd_check(args) -> int:
    results = checks.run_suite(args.suite)
    failed = [r for r in results if not r.ok]
    for r in results:
        status = "ok  " if r.ok else "FAIL"
        line = f"{status} - {r.name}"
        if r.detail:
            line += f" ({r.detail})"
        print(line)
    if failed:
        print(f"FAILED: {failed[0].name}")
        return EXIT_CHECK_FAILED
    print(f"passed {len(results)} assertions")
    return EXIT_OK


def cmd_molecules(args) -> int:
    reg = registry(args.registry)
    rows = [(m.name, m.a, m.b, m.c, m.alpha, m.mu)
            for m in sorted(reg.values(), key=lambda m: m.name.lower())]
    env = Envelope(_meta(args, "paper"), ("name", "A", "B", "C", "alpha", "mu"), rows)
    _emit(env, args)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="hyiqp",
        description="Bound states of the combined screened potential: closed forms, "
                    "expectation values, reference-table regeneration, and numerical "
                    "cross-checks.")
    sub = parser.add_subparsers(dest="command", required=True)

    def add_io(sp):
        sp.add_argument("--format", choices=("csv", "json"), default="csv")
        sp.add_argument("--output", default=None, help="write to a file instead of stdout")

    sp = sub.add_parser("energy", help="one closed-form level")
    group = sp.add_mutually_exclusive_group(required=True)
    group.add_argument("--molecule")
    group.add_argument("--params", help="V0,A,B,C,alpha")
    sp.add_argument("--mu", type=float, default=None, help="reduced mass for --params")
    sp.add_argument("--n", type=int, required=True)
    sp.add_argument("--l", type=int, required=True)
    sp.add_argument("--mode", choices=("paper", "physical"), default="physical")
    sp.add_argument("--v0", type=float, default=None,
                    help="well depth for --molecule runs (default 0; absent from "
                         "the tabulated constants)")
    add_io(sp)
    sp.set_defaults(func=cmd_energy)

    sp = sub.add_parser("expect", help="expectation-value discrepancy report")
    sp.add_argument("--molecule", required=True)
    sp.add_argument("--observable", choices=OBSERVABLES, required=True)
    sp.add_argument("--n-max", type=int, default=8)
    sp.add_argument("--l-max", type=int, default=3)
    sp.add_argument("--mode", choices=("paper", "physical"), default="physical")
    sp.add_argument("--v0", type=float, default=0.0)
    sp.add_argument("--exp-factor-r", type=float, default=None,
                    help="r* in the exp(alpha r*) prefactor of <r^-1> (default: unit prefactor)")
    sp.add_argument("--oracle", action="store_true",
                    help="add the grid-oracle column (slow)")
    sp.add_argument("--oracle-points", type=int, default=20000)
    add_io(sp)
    sp.set_defaults(func=cmd_expect)

    sp = sub.add_parser("table", help="regenerate a bundled reference table")
    sp.add_argument("id", help="2, 2b, or 3..17")
    sp.add_argument("--mode", choices=("paper", "physical"), default="paper")
    sp.add_argument("--v0", type=float, default=0.0)
    add_io(sp)
    sp.set_defaults(func=cmd_table)

    sp = sub.add_parser("figure", help="plot-ready data for figures 1..9")
    sp.add_argument("id", type=int, choices=range(1, 10))
    sp.add_argument("--molecule", default="H2", help="molecule for figures 1-2")
    sp.add_argument("--mode", choices=("paper", "physical"), default="paper")
    sp.add_argument("--v0", type=float, default=0.0)
    sp.add_argument("--alphas", default="0.1,0.2,0.3,0.4",
                    help="four screening values for figure 1")
    sp.add_argument("--n", type=int, default=0, help="radial quantum number, figures 3-9")
    sp.add_argument("--convention", choices=WAVEFUNCTION_CONVENTIONS, default="literal")
    sp.add_argument("--r-min", type=float, default=0.05)
    sp.add_argument("--r-max", type=float, default=None,
                    help="default 10 for figures 1-2, 20 for figures 3-9")
    sp.add_argument("--points", type=int, default=512)
    add_io(sp)
    sp.set_defaults(func=cmd_figure)

    sp = sub.add_parser("check", help="run a verification suite")
    sp.add_argument("suite", choices=("hft", "reduction", "nu", "oracle", "all"))
    sp.set_defaults(func=cmd_check)

    sp = sub.add_parser("molecules", help="list the molecule registry")
    sp.add_argument("--registry", default=None,
                    help="extra registry file (else HYIQP_REGISTRY)")
    add_io(sp)
    sp.set_defaults(func=cmd_molecules)
    return parser


def main(argv=None) -> int:
    argv = list(sys.argv[1:]) if argv is None else list(argv)
    parser = build_parser()
    args = parser.parse_args(argv)
    args.raw_argv = argv
    try:
        return args.func(args)
    except UnknownMoleculeError as exc:
        sys.stderr.write(f"error: {exc}\n")
        return EXIT_LOOKUP
    except (HyiqpError, ValueError) as exc:
        sys.stderr.write(f"error: {exc}\n")
        return EXIT_DOMAIN


if __name__ == "__main__":
    sys.exit(main())
