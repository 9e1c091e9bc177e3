"""Точка входа: команды run и check-axioms."""

import argparse
import dataclasses
import logging
import os
import sys

from app.axioms import check_axioms
from app.config import (
    AXIOM_CHECK_SAMPLES,
    DEFAULT_REPORT_FORMAT,
    DEFAULT_SEED,
    SUPPORTED_REPORT_FORMATS,
    TRIAL_CHUNK_SIZE,
    TRIAL_WORKERS,
)
from app.constants import DEFAULT_ATOM, EXIT_NUMERIC_ERROR, EXIT_OK, EXIT_SCENARIO_ERROR
from app.errors import NumericDriftError, SimulatorError, StepError
from app.logger import setup_logging
from app.quantum import make_basis
from app.report import emit_report
from app.rng import SeededSource
from app.runner import run_scenario
from app.scenario import parse_real_expression, parse_scenario


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="judgements",
        description="Симулятор внутреннего и внешнего наблюдателя одного кубита",
    )
    commands = parser.add_subparsers(dest="command", required=True)

    run = commands.add_parser("run", help="выполнить сценарий и напечатать отчёт")
    run.add_argument("file", help="файл сценария (UTF-8)")
    run.add_argument("--seed", type=int, default=None, help="семя (перекрывает seed сценария)")
    run.add_argument("--trials", type=int, default=None, help="число испытаний (перекрывает trials сценария)")
    run.add_argument("--format", choices=SUPPORTED_REPORT_FORMATS, default=DEFAULT_REPORT_FORMAT)
    run.add_argument("--output", default=None, help="записать отчёт в файл вместо stdout")
    run.add_argument("--workers", type=int, default=TRIAL_WORKERS, help="потоков для пачек испытаний")

    check = commands.add_parser("check-axioms", help="вывести обе аксиомы и их классический статус")
    check.add_argument("--basis", nargs=2, metavar=("GAMMA", "PHI"), default=None)
    check.add_argument("--atom", default=DEFAULT_ATOM)
    check.add_argument("--samples", type=int, default=AXIOM_CHECK_SAMPLES)
    check.add_argument("--seed", type=int, default=DEFAULT_SEED)
    check.add_argument("--ascii", action="store_true", help="ASCII-нотация вместо Unicode")
    return parser


def _exit_code(exc: Exception) -> int:
    cause = exc.cause if isinstance(exc, StepError) else exc
    if isinstance(cause, NumericDriftError):
        return EXIT_NUMERIC_ERROR
    return EXIT_SCENARIO_ERROR


def _write(payload: bytes, output: str | None) -> None:
    if output is None:
        sys.stdout.buffer.write(payload)
        sys.stdout.flush()
        return
    directory = os.path.dirname(output)
    if directory:
        os.makedirs(directory, exist_ok=True)
    with open(output, "wb") as fh:
        fh.write(payload)
    logging.info("Отчёт записан: %s", output)


def command_run(args: argparse.Namespace) -> int:
    try:
        with open(args.file, encoding="utf-8") as fh:
            text = fh.read()
    except OSError as exc:
        logging.error("Не удалось прочитать сценарий %s: %s", args.file, exc)
        return EXIT_SCENARIO_ERROR

    try:
        scenario = parse_scenario(text)
        overrides = {}
        if args.seed is not None:
            overrides["seed"] = args.seed
        if args.trials is not None:
            overrides["trials"] = args.trials
        if overrides:
            scenario = dataclasses.replace(scenario, **overrides)
        report = run_scenario(scenario, workers=args.workers, chunk_size=TRIAL_CHUNK_SIZE)
    except (SimulatorError, ArithmeticError) as exc:
        logging.error("%s: %s", args.file, exc)
        return _exit_code(exc)

    _write(emit_report(report, args.format), args.output)
    return EXIT_OK


def command_check_axioms(args: argparse.Namespace) -> int:
    try:
        basis = None
        if args.basis is not None:
            gamma, phi = (parse_real_expression(value) for value in args.basis)
            basis = make_basis(gamma, phi, args.atom)
        result = check_axioms(SeededSource(args.seed), basis=basis, samples=args.samples)
    except (SimulatorError, ValueError) as exc:
        logging.error("check-axioms: %s", exc)
        return _exit_code(exc)

    sys.stdout.write(result.render(unicode=not args.ascii))
    sys.stdout.flush()
    return EXIT_OK if result.passed else EXIT_SCENARIO_ERROR


def main(argv: list[str] | None = None) -> int:
    """Разбирает аргументы и выполняет команду; возвращает код выхода."""
    args = build_parser().parse_args(argv)
    setup_logging()
    if args.command == "run":
        return command_run(args)
    return command_check_axioms(args)


if __name__ == "__main__":
    sys.exit(main())
