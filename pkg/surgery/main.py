import argparse
import logging
import sys
from typing import List, Optional

from surgery import __version__
from surgery.commands import group_commands, knot_commands, morse_commands
from surgery.config import Config
from surgery.errors import SurgeryError, UsageError
from surgery.knots.catalog import catalog_names

logger = logging.getLogger(__name__)

LOG_FORMAT = '%(asctime)s - %(name)s - %(levelname)s - %(message)s'


class Parser(argparse.ArgumentParser):
    """argparse that raises instead of exiting, so usage errors share the error line format"""

    def error(self, message):
        raise UsageError(f"{self.prog}: {message}")


def _input_parsers():
    diagram_input = argparse.ArgumentParser(add_help=False)
    diagram_input.add_argument('input', nargs='?', default=None, help='Diagram file (stdin when omitted or -)')
    diagram_input.add_argument('--knot', default=None, help=f"Built-in diagram: {', '.join(catalog_names())}")
    diagram_input.add_argument('--from', dest='input_format', choices=['gauss', 'pd', 'json'], default=None)

    group_input = argparse.ArgumentParser(add_help=False)
    group_input.add_argument('input', nargs='?', default=None, help='Presentation or diagram file (stdin when omitted or -)')
    group_input.add_argument('--knot', default=None, help='Use the knot group of a built-in diagram')

    presentation_output = argparse.ArgumentParser(add_help=False)
    presentation_output.add_argument('--format', choices=['text', 'json'], default='text')
    presentation_output.add_argument('--simplify', action='store_true', help='Apply Tietze elimination first')

    form_input = argparse.ArgumentParser(add_help=False)
    form_input.add_argument('--dim', type=int, required=True, help='Ambient dimension D')
    form_input.add_argument('--index', type=int, required=True, help='Morse index i')
    form_input.add_argument('--reversed', action='store_true', help='Use the time-reversed form')

    cloud_input = argparse.ArgumentParser(add_help=False)
    cloud_input.add_argument('input', nargs='?', default=None, help='CSV points or JSON samples (stdin when omitted or -)')

    return diagram_input, group_input, presentation_output, form_input, cloud_input


def build_parser() -> argparse.ArgumentParser:
    parser = Parser(prog='surgery', description='Knot surgery groups and Morse pictures of surgery')
    parser.add_argument('--version', action='version', version=f"%(prog)s {__version__}")
    parser.add_argument('--config', default=None, help='key=value config file')
    parser.add_argument('--seed', type=int, default=None, help='Seed for every randomized step')
    parser.add_argument('--log-level', type=str.upper, default=None,
                        choices=['DEBUG', 'INFO', 'WARNING', 'ERROR', 'CRITICAL'])

    diagram_input, group_input, presentation_output, form_input, cloud_input = _input_parsers()
    subparsers = parser.add_subparsers(dest='command', required=True)
    knot_commands.register(subparsers, diagram_input)
    group_commands.register(subparsers, diagram_input, group_input, presentation_output)
    morse_commands.register(subparsers, form_input, cloud_input)
    return parser


def _fail(code: int, error: BaseException) -> int:
    message = " ".join(str(error).split())
    sys.stderr.write(f"ERROR {code}: {type(error).__name__}: {message}\n")
    return code


def run(argv: Optional[List[str]] = None) -> int:
    """
    Run one subcommand.

    Args:
        argv: Arguments without the program name (sys.argv[1:] when None)

    Returns:
        Exit code: 0 success, 2 input error, 3 inconclusive, 4 internal failure
    """
    try:
        args = build_parser().parse_args(argv)
        if args.config:
            Config.load_file(args.config)
        Config.override(SEED=args.seed, LOG_LEVEL=args.log_level)
        logging.getLogger().setLevel(Config.LOG_LEVEL)
        logger.debug(f"Running {args.command} {args.action} with {Config.snapshot()}")
        return args.handler(args)
    except SystemExit as e:
        # --help and --version
        return e.code if isinstance(e.code, int) else 0
    except SurgeryError as e:
        return _fail(e.exit_code, e)
    except ValueError as e:
        # configuration problems and model validation
        return _fail(2, e)
    except Exception as e:
        logger.exception(f"Unexpected error: {e}")
        return _fail(4, e)


def main():
    logging.basicConfig(
        level=logging.WARNING,
        format=LOG_FORMAT,
        stream=sys.stderr
    )
    sys.exit(run())


if __name__ == "__main__":
    main()
