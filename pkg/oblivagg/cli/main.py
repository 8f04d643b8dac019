"""Command line front end.

Exit codes: 0 success, 1 protocol error or oracle mismatch, 2 configuration
error, 3 enumeration budget exceeded, 4 audit failure or non-optimal rates.
"""
import argparse
import json
import logging
import os
import sys
from pathlib import Path
from typing import Callable, Dict, List, Optional, Sequence, TextIO

from pydantic import ValidationError

import oblivagg.auditor.api as auditor
import oblivagg.rates.api as rates
from oblivagg.data_models.audit import DEFAULT_BUDGET, AuditConfig
from oblivagg.data_models.cli import CliConfig
from oblivagg.data_models.enum import SchemeEnum, TransportEnum
from oblivagg.data_models.field import FieldVector
from oblivagg.data_models.keys import SourceKey
from oblivagg.data_models.messages import SurvivorSet
from oblivagg.data_models.session import SessionParams
from oblivagg.data_models.transport import DropPlan
from oblivagg.dealer.dealer import derive_user_keys
from oblivagg.dealer.keyfile import write_source_key, write_user_key
from oblivagg.errors import BudgetExceededError, CodecError, ProtocolError
from oblivagg.field.vectors import make_rng, sample_uniform
from oblivagg.transport.harness import expected_sum
from oblivagg.transport.network import run_session

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_PROTOCOL = 1
EXIT_CONFIG = 2
EXIT_BUDGET = 3
EXIT_AUDIT = 4

BUDGET_ENV = "OBLIVAGG_AUDIT_BUDGET"
LOG_FORMAT = "%(asctime)s:%(levelname)s:%(name)s:%(message)s"

SCHEME_NAMES = {
    "nodropout": SchemeEnum.NO_DROPOUT,
    "dropout": SchemeEnum.DROPOUT_TOLERANT,
    "summation": SchemeEnum.SUMMATION,
}
TRANSPORT_NAMES = {"sim": TransportEnum.SIM, "stream": TransportEnum.STREAM}


def int_list(value: str) -> List[int]:
    """Parses `1,3` into [1, 3]."""
    try:
        return [int(v) for v in value.split(",") if v.strip() != ""]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma separated integers, got {value!r}")


def default_budget() -> int:
    value = os.environ.get(BUDGET_ENV)
    if value is None:
        return DEFAULT_BUDGET
    try:
        return int(value)
    except ValueError:
        raise ValueError(f"{BUDGET_ENV} has to be an integer, got {value!r}")


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--log-level", default="WARNING", choices=["DEBUG", "INFO", "WARNING", "ERROR"])
    common.add_argument("--output", help="path of the json report")

    session = argparse.ArgumentParser(add_help=False)
    session.add_argument("--k", type=int, default=3, help="number of users K")
    session.add_argument("--q", type=int, default=5, help="prime modulus")
    session.add_argument("--len", type=int, default=1, help="input length L")
    session.add_argument("--scheme", choices=sorted(SCHEME_NAMES), default="dropout")

    parser = argparse.ArgumentParser(
        prog="oblivagg", description="Secure aggregation with an oblivious server."
    )
    sub = parser.add_subparsers(dest="subcommand", required=True)

    run = sub.add_parser("run", parents=[common, session], help="run seeded sessions")
    run.add_argument("--drop", type=int_list, default=[], help="users dropping before sending")
    run.add_argument("--drop-after", type=int_list, default=[], help="users dropping after sending")
    run.add_argument("--seed", type=int, default=0)
    run.add_argument("--entropy", action="store_true", help="draw keys from OS randomness")
    run.add_argument("--broadcast", action="store_true", help="one reply frame for all users")
    run.add_argument("--transport", choices=sorted(TRANSPORT_NAMES), default="sim")
    run.add_argument("--shuffle", action="store_true", help="shuffle phase-one delivery")
    run.add_argument("--trials", type=int, default=1)
    run.add_argument("--input", type=int_list, action="append", dest="inputs", help="one per user")
    run.add_argument("--keys-dir", help="write the key files of the first session here")

    audit = sub.add_parser("audit", parents=[common, session], help="exhaustive security audit")
    audit.add_argument("--survivors", type=int_list)
    audit.add_argument("--colluders", type=int_list, action="append", default=[])
    audit.add_argument("--budget", type=int, help=f"states, defaults to ${BUDGET_ENV} or {DEFAULT_BUDGET}")
    audit.add_argument("--n-procs", type=int, default=1)

    sub.add_parser("rates", parents=[common, session], help="rate optimality")

    leakage = sub.add_parser("demo-leakage", parents=[common], help="what the sum alone reveals")
    leakage.add_argument("--preset", choices=["three-user", "binary-f3", "all"])
    leakage.add_argument("--alphabet", type=int_list, action="append", dest="alphabets", default=[])
    leakage.add_argument("--q", type=int, default=5, help="modulus of user supplied alphabets")
    return parser


def make_config(args: argparse.Namespace) -> CliConfig:
    """Validates parsed arguments, see `CliConfig`."""
    fields = dict(subcommand=args.subcommand)
    if args.subcommand in ("run", "audit", "rates"):
        fields.update(
            n_users=args.k, q=args.q, length=args.len, scheme=SCHEME_NAMES[args.scheme]
        )
    if args.subcommand == "run":
        fields.update(
            drops=args.drop,
            drops_after=args.drop_after,
            seed=args.seed,
            entropy=args.entropy,
            broadcast=args.broadcast,
            transport=TRANSPORT_NAMES[args.transport],
            shuffle=args.shuffle,
            trials=args.trials,
            inputs=args.inputs,
            keys_dir=args.keys_dir,
        )
    if args.subcommand == "audit":
        fields.update(
            survivors=args.survivors,
            colluders=[tuple(c) for c in args.colluders],
            budget=args.budget if args.budget is not None else default_budget(),
            n_procs=args.n_procs,
        )
    if args.subcommand == "demo-leakage":
        fields.update(preset=args.preset, alphabets=args.alphabets, q=args.q)
    fields["output"] = args.output
    return CliConfig(**fields)


def _write_json(path: Optional[str], payload) -> None:
    if path is None:
        return
    Path(path).write_text(json.dumps(payload, indent=2, sort_keys=True) + "\n")


def _fmt(v: FieldVector) -> str:
    return "[" + ",".join(str(e) for e in v.elems) + "]"


def cmd_run(config: CliConfig, out: TextIO) -> int:
    """Runs seeded sessions and cross-checks every decoded sum against recomputation."""
    params = config.session_params()
    drop_plan = DropPlan(before_send=tuple(config.drops), after_send=tuple(config.drops_after))
    records = []
    ok = True
    for trial in range(config.trials):
        seed = None if config.entropy else config.seed + trial
        rng = make_rng(seed)
        if config.inputs is not None:
            inputs = [FieldVector.of(config.q, w) for w in config.inputs]
        else:
            inputs = [sample_uniform(params.spec, params.length, rng) for _ in params.users]
        outcome = run_session(
            params,
            inputs,
            drop_plan=drop_plan,
            seed=seed,
            shuffle=config.shuffle,
            transport=config.transport,
        )
        if config.keys_dir is not None and trial == 0 and outcome.source_key is not None:
            _write_keys(config.keys_dir, params, outcome.source_key)
        target = expected_sum(inputs, outcome.survivors.members)
        bad = [k for k, v in outcome.decoded.items() if v != target] + list(outcome.errors)
        ok = ok and len(bad) == 0
        out.write(f"session {trial} seed={seed} U={outcome.survivors} reply_frames={outcome.reply_frames}\n")
        for k, v in sorted(outcome.decoded.items()):
            out.write(f"  user {k} decoded {_fmt(v)}\n")
        for k, err in sorted(outcome.errors.items()):
            out.write(f"  user {k} failed: {err}\n")
        out.write(f"  oracle {_fmt(target)} {'OK' if len(bad) == 0 else 'MISMATCH'}\n")
        records.append(
            {
                "trial": trial,
                "seed": seed,
                "survivors": list(outcome.survivors.members),
                "decoded": {str(k): list(v.elems) for k, v in outcome.decoded.items()},
                "errors": {str(k): e for k, e in outcome.errors.items()},
                "expected": list(target.elems),
                "ok": len(bad) == 0,
            }
        )
    _write_json(config.output, {"sessions": records})
    return EXIT_OK if ok else EXIT_PROTOCOL


def _write_keys(keys_dir: str, params: SessionParams, src: SourceKey) -> None:
    path = Path(keys_dir)
    path.mkdir(parents=True, exist_ok=True)
    write_source_key(path / "source.key", params, src)
    for key in derive_user_keys(src, params):
        write_user_key(path / f"user{key.user_id}.key", params, key)
    logger.info("wrote %d key files to %s", params.n_users + 1, path)


def cmd_audit(config: CliConfig, out: TextIO) -> int:
    """Runs every exhaustive check within the budget."""
    params = config.session_params()
    audit_config = AuditConfig(
        budget=config.budget,
        n_procs=config.n_procs,
        survivor_sets=None
        if config.survivors is None
        else [SurvivorSet(members=tuple(config.survivors))],
        colluder_sets=config.colluders,
    )
    report = auditor.run_audit(params, audit_config)
    out.write(report.to_text())
    _write_json(
        config.output,
        {"params": json.loads(params.json()), "entries": report.to_records()},
    )
    return EXIT_OK if report.passed else EXIT_AUDIT


def cmd_rates(config: CliConfig, out: TextIO) -> int:
    """Measures rates and compares them with the optimal region."""
    params = config.session_params()
    report = rates.verify_optimality(params)
    out.write(
        f"measured {report.measured} optimal {report.optimal} verdict {report.verdict.value}\n"
    )
    out.write(rates.rates_table([report]).to_string(index=False) + "\n")
    _write_json(config.output, json.loads(report.json()))
    return EXIT_OK if report.is_optimal else EXIT_AUDIT


def cmd_demo_leakage(config: CliConfig, out: TextIO) -> int:
    """Prints the posterior of the inputs given their sum."""
    tables = {}
    if config.preset == "all" or (config.preset is None and len(config.alphabets) == 0):
        names = sorted(auditor.PRESETS)
    else:
        names = [] if config.preset is None else [config.preset]
    for name in names:
        tables[name] = auditor.preset_leakage(name)
    if len(config.alphabets) > 0:
        tables["custom"] = auditor.sum_leakage(config.alphabets, config.q)
    for name, table in tables.items():
        out.write(f"leakage {name} q={table.spec.q} alphabets={table.alphabets}\n")
        out.write(auditor.leakage_frame(table).to_string(index=False) + "\n")
        out.write(f"deterministic sums: {table.deterministic_sums}\n")
    _write_json(config.output, {name: json.loads(t.json()) for name, t in tables.items()})
    return EXIT_OK


COMMANDS: Dict[str, Callable[[CliConfig, TextIO], int]] = {
    "run": cmd_run,
    "audit": cmd_audit,
    "rates": cmd_rates,
    "demo-leakage": cmd_demo_leakage,
}


def main(argv: Optional[Sequence[str]] = None, out: Optional[TextIO] = None) -> int:
    out = out if out is not None else sys.stdout
    args = build_parser().parse_args(argv)
    logging.basicConfig(format=LOG_FORMAT, level=getattr(logging, args.log_level))
    try:
        config = make_config(args)
    except (ValidationError, ValueError) as err:
        sys.stderr.write(f"configuration error: {err}\n")
        return EXIT_CONFIG
    try:
        return COMMANDS[config.subcommand](config, out)
    except BudgetExceededError as err:
        sys.stderr.write(f"budget exceeded: {err}\n")
        return EXIT_BUDGET
    except (ProtocolError, CodecError) as err:
        sys.stderr.write(f"{type(err).__name__}: {err}\n")
        return EXIT_PROTOCOL
    except ValueError as err:
        sys.stderr.write(f"configuration error: {err}\n")
        return EXIT_CONFIG
