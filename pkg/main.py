"""
Moduli - intersection pairings and Poincare duality on M_g(2,1)
Main entry point for the command line

Subcommands: pair, table, gram, dual, newstead, verify-rep, collapse.
Exit codes: 0 success, 1 bad input, 2 strict degree mismatch, 3 failed check.
"""

import argparse
import sys
import traceback

from algebra.monomials import label, render
from arith.exact import rational_to_json, rational_to_text
from engine.engine import ModuliEngine
from engine.pairing import PairingConvention
from utils.config import FORMATS, CliConfig, normalize_convention
from utils.errors import ConfigError, ModuliError, NoDualFound
from utils.logging_utils import logger
from utils.output import (dual_csv, gram_csv, gram_plain, pair_csv, table_csv, table_json, table_plain,
                          to_json)

EXIT_OK = 0
EXIT_INPUT = 1
EXIT_DEGREE = 2
EXIT_CHECK = 3

SIGN_HELP = (
    "sign of the closed a^n f^m formula: 'consistent' uses (-1)^g and gives the single point M_1 "
    "the value 1; 'paper-literal' uses (-1)^(g-1) as printed, which gives M_1 the value -1 "
    "(default: consistent)"
)


class ArgumentParser(argparse.ArgumentParser):
    """argparse exits with 2 on usage errors; here usage errors are input errors"""

    def error(self, message):
        raise ConfigError(message)


def emit(text: str) -> None:
    sys.stdout.write(text if text.endswith("\n") else text + "\n")


def cmd_pair(config: CliConfig, engine: ModuliEngine, monomial_text: str) -> int:
    """Print the exact pairing of one monomial"""
    raw, x, value = engine.run("pair", monomial_text)
    top = 6 * config.genus - 6
    if raw.degree != top:
        if config.strict:
            logger.warning(f"Degree {raw.degree} of {monomial_text!r} differs from {top}")
            print(f"error: degree {raw.degree} differs from the top degree {top} of M_{config.genus}",
                  file=sys.stderr)
            return EXIT_DEGREE
        logger.info(f"Degree {raw.degree} of {monomial_text!r} is not {top}; pairing is 0")

    if config.format == "json":
        emit(to_json({
            "genus": config.genus,
            "monomial": render(x),
            "degree": raw.degree,
            "value": rational_to_json(value),
        }))
    elif config.format == "csv":
        emit(pair_csv(render(x), value))
    else:
        emit(rational_to_text(value))
    return EXIT_OK


def cmd_table(config: CliConfig, engine: ModuliEngine) -> int:
    """Print every admissible (m, n, p) with its pairing"""
    rows = engine.run("table")
    if config.format == "json":
        emit(table_json(config.genus, config.sign_convention, rows))
    elif config.format == "csv":
        emit(table_csv(rows))
    else:
        emit(table_plain(rows))
    return EXIT_OK


def cmd_gram(config: CliConfig, engine: ModuliEngine, degree: int) -> int:
    """Print the Gram matrix with its rank and radical"""
    matrix, rank, radical = engine.run("gram", degree)
    if config.format == "json":
        payload = matrix.to_dict()
        payload["rank"] = rank
        payload["radical"] = [element.render() for element in radical]
        emit(to_json(payload))
    elif config.format == "csv":
        emit(gram_csv(matrix.row_labels, matrix.col_labels, matrix.entries))
        print(f"rank {rank}, radical dimension {len(radical)}", file=sys.stderr)
    else:
        if matrix.rows and matrix.cols:
            emit(gram_plain(matrix.row_labels, matrix.col_labels, matrix.entries))
        emit(f"rank: {rank}")
        emit(f"radical dimension: {len(radical)}")
        for element in radical:
            emit(f"  {element.render()}")
    return EXIT_OK


def cmd_dual(config: CliConfig, engine: ModuliEngine, generator: str) -> int:
    """Print the dual partner of a generator and its full pairing vector"""
    partner, basis, values = engine.run("dual", generator)
    if config.format == "json":
        emit(to_json({
            "genus": config.genus,
            "generator": generator,
            "partner": partner.render(),
            "functional": [{"monomial": label(y), "value": rational_to_json(v)} for y, v in zip(basis, values)],
        }))
    elif config.format == "csv":
        emit(dual_csv([label(y) for y in basis], values, [partner.terms.get(y.key, 0) for y in basis]))
    else:
        emit(partner.render())
        for y, v in zip(basis, values):
            emit(f"{label(y)}: {rational_to_text(v)}")
    return EXIT_OK


def cmd_newstead(config: CliConfig, engine: ModuliEngine) -> int:
    """Exit 0 iff a^g pairs to zero with every complementary monomial"""
    report = engine.run("newstead")
    if not report.passed:
        emit(to_json(report.to_dict()))
        return EXIT_CHECK
    if config.format == "json":
        emit(to_json(report.to_dict()))
    elif report.vacuous:
        g = config.genus
        emit(f"vacuous: deg a^{g} = {4 * g} exceeds {6 * g - 6}")
    else:
        emit(f"a^{config.genus} pairs to zero with all {report.checked} complementary monomials")
    return EXIT_OK


def cmd_verify_rep(config: CliConfig, engine: ModuliEngine) -> int:
    """Fiber residual, d mu rank and stabilizer rank over seeded samples"""
    report = engine.run("verify_rep", config.seed, config.samples, config.tol)
    if not report.passed or config.format == "json":
        emit(to_json(report.to_dict()))
    else:
        dims = report.dims
        emit(f"samples: {report.samples}")
        emit(f"mu residual max: {report.mu_residual_max:.3e}")
        emit(f"jacobian ranks: {dict(sorted(report.jacobian_rank_histogram.items()))}")
        emit(f"stabilizer ranks: {dict(sorted(report.stabilizer_rank_histogram.items()))}")
        emit(f"dimensions: ambient {dims.ambient}, fiber {dims.fiber}, quotient {dims.quotient}")
    return EXIT_OK if report.passed else EXIT_CHECK


def cmd_collapse(config: CliConfig, engine: ModuliEngine, monomial_text) -> int:
    """gamma_i * x on M_g against the collapsed x on M_(g-1)"""
    if monomial_text is None:
        report = engine.run("collapse_report")
        if not report.passed or config.format == "json":
            emit(to_json(report.to_dict()))
        else:
            emit(f"handle collapse identity holds in all {report.checked} cases")
        return EXIT_OK if report.passed else EXIT_CHECK

    if config.handle is None:
        raise ConfigError("collapse with a monomial needs --handle")
    result = engine.run("collapse", config.handle, monomial_text)
    agree = result["upstairs"] == result["downstairs"]
    if config.format == "json":
        emit(to_json({
            "genus": config.genus,
            "handle": config.handle,
            "monomial": render(result["monomial"]),
            "collapsed": render(result["collapsed"]),
            "upstairs": rational_to_json(result["upstairs"]),
            "downstairs": rational_to_json(result["downstairs"]),
            "agree": agree,
        }))
    else:
        emit(f"gamma{config.handle} {render(result['monomial'])} on M_{config.genus}: "
             f"{rational_to_text(result['upstairs'])}")
        emit(f"{render(result['collapsed'])} on M_{config.genus - 1}: {rational_to_text(result['downstairs'])}")
    return EXIT_OK if agree else EXIT_CHECK


def build_parser() -> argparse.ArgumentParser:
    defaults = CliConfig.from_env()

    common = ArgumentParser(add_help=False)
    common.add_argument("--genus", type=int, required=True, help="genus g >= 1 of the surface")
    common.add_argument("--sign-convention", choices=["consistent", "paper-literal", "paper_literal"],
                        default=defaults.sign_convention.replace("_", "-"), help=SIGN_HELP)
    common.add_argument("--format", choices=FORMATS, default=defaults.format)
    common.add_argument("--strict", action="store_true", default=defaults.strict,
                        help="treat a pairing of non-top degree as an error (exit 2)")
    common.add_argument("--seed", type=int, default=defaults.seed)
    common.add_argument("--samples", type=int, default=defaults.samples)
    common.add_argument("--tol", type=float, default=defaults.tol)
    common.add_argument("--jobs", type=int, default=defaults.jobs,
                        help="worker threads for table, Gram and sample evaluation")

    parser = ArgumentParser(prog="moduli", description=__doc__,
                            formatter_class=argparse.RawDescriptionHelpFormatter)
    commands = parser.add_subparsers(dest="command", required=True, parser_class=ArgumentParser)

    pair = commands.add_parser("pair", parents=[common], help="pair a monomial with [M_g]")
    pair.add_argument("monomial", help='e.g. "f^2 a", "b1 b2 b4 b5", "gamma gamma1"')

    commands.add_parser("table", parents=[common], help="all admissible f^m a^n gamma^p pairings")

    gram = commands.add_parser("gram", parents=[common], help="Gram matrix of the pairing in one degree")
    gram.add_argument("--degree", type=int, required=True)

    dual = commands.add_parser("dual", parents=[common], help="dual partner of a generator")
    dual.add_argument("--gen", required=True, help="f, a or b1..b2g")

    commands.add_parser("newstead", parents=[common], help="check a^g = 0 at the pairing level")
    commands.add_parser("verify-rep", parents=[common], help="numerical checks on mu^-1(-I)")

    collapse = commands.add_parser("collapse", parents=[common], help="compare gamma_i x with the collapsed x")
    collapse.add_argument("--handle", type=int, default=None)
    collapse.add_argument("monomial", nargs="?", default=None)
    return parser


def parse_config(args: argparse.Namespace) -> CliConfig:
    return CliConfig(
        genus=args.genus,
        sign_convention=normalize_convention(args.sign_convention),
        format=args.format,
        strict=args.strict,
        seed=args.seed,
        samples=args.samples,
        tol=args.tol,
        jobs=args.jobs,
        handle=getattr(args, "handle", None),
    ).validate()


def main(argv=None) -> int:
    """Main function for the command line"""
    try:
        args = build_parser().parse_args(argv)
        config = parse_config(args)
        logger.info(f"Running {args.command} with {config}")

        commands = {
            'pair': lambda engine: cmd_pair(config, engine, args.monomial),
            'table': lambda engine: cmd_table(config, engine),
            'gram': lambda engine: cmd_gram(config, engine, args.degree),
            'dual': lambda engine: cmd_dual(config, engine, args.gen),
            'newstead': lambda engine: cmd_newstead(config, engine),
            'verify-rep': lambda engine: cmd_verify_rep(config, engine),
            'collapse': lambda engine: cmd_collapse(config, engine, args.monomial),
        }
        convention = PairingConvention.from_text(config.sign_convention)
        with ModuliEngine(config.genus, convention, config.jobs) as engine:
            return commands[args.command](engine)
    except NoDualFound as e:
        logger.error(f"Dual partner search failed: {str(e)}")
        emit(to_json({"error": "NoDualFound", "message": str(e)}))
        return EXIT_CHECK
    except ModuliError as e:
        logger.error(f"{type(e).__name__}: {str(e)}")
        print(f"error: {type(e).__name__}: {e}", file=sys.stderr)
        return EXIT_INPUT
    except Exception as e:
        logger.error(f"Unexpected error: {str(e)}")
        logger.debug(f"Error details: {traceback.format_exc()}")
        print(f"error: {e}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
