import argparse
import enum
import logging
import os
import sys
from typing import Optional, Sequence
from .constructor import construct_good_digraph, flower_digraph
from .constructor import recognize_flower
from .digraph import is_good_digraph, niche_hypergraph
from .exceptions import BadSpec
from .exceptions import BudgetExceeded
from .exceptions import ConstructionError
from .exceptions import DigraphError
from .exceptions import HypergraphError
from .exceptions import NicheError
from .exceptions import NotInT
from .exceptions import ParseError
from .hypergraph import FamilySpec, classify_t, generate, validate
from .oracle import LowerBound, SearchBudget, niche_number_upto
from .util.codec import Format, decode, dump_digraph, dump_hypergraph
from .util.codec import dump_trace, encode, parse_digraph, parse_hypergraph
from .util.dot import digraph_to_dot, hypergraph_to_dot
from .version import __version__


class ExitCode(enum.IntEnum):
    OK = 0
    FAILED = 1
    BAD_INPUT = 2
    NOT_IN_T = 3
    BUDGET = 4


_EXIT_CODES = {
    ParseError: ExitCode.BAD_INPUT,
    HypergraphError: ExitCode.BAD_INPUT,
    DigraphError: ExitCode.BAD_INPUT,
    BadSpec: ExitCode.BAD_INPUT,
    OSError: ExitCode.BAD_INPUT,
    NotInT: ExitCode.NOT_IN_T,
    BudgetExceeded: ExitCode.BUDGET,
    ConstructionError: ExitCode.FAILED,
}


def exit_code_for(exc: BaseException) -> ExitCode:
    for cls in type(exc).__mro__:
        if cls in _EXIT_CODES:
            return _EXIT_CODES[cls]
    return ExitCode.FAILED


def _read(path: Optional[str]) -> bytes:
    if path is None or path == '-':
        return sys.stdin.buffer.read()
    with open(path, 'rb') as f:
        return f.read()


def _write(data: bytes, path: Optional[str]):
    if path is None or path == '-':
        sys.stdout.buffer.write(data)
        sys.stdout.buffer.flush()
        return
    with open(path, 'wb') as f:
        f.write(data)


def _say(text: str):
    sys.stdout.write(text + '\n')
    sys.stdout.flush()


def cmd_gen(args) -> ExitCode:
    if args.type == 'path':
        spec = FamilySpec.hyperpath(args.k, args.r)
    elif args.type == 'nova':
        spec = FamilySpec.hypernova(args.m, args.r)
    elif args.type == 'flower':
        spec = FamilySpec.flower(args.s, args.r)
    else:
        spec = FamilySpec.random_t(
            args.edges, (args.min_size, args.max_size), args.seed)
    _write(dump_hypergraph(generate(spec), args.format), args.output)
    return ExitCode.OK


def cmd_analyze(args) -> ExitCode:
    h = parse_hypergraph(_read(args.input))
    _write(encode(validate(h).to_dict(), Format.JSON), args.output)
    return ExitCode.OK


def cmd_classify(args) -> ExitCode:
    membership = classify_t(parse_hypergraph(_read(args.input)))
    _say(str(membership))
    return ExitCode.OK if membership.in_t else ExitCode.NOT_IN_T


def cmd_construct(args) -> ExitCode:
    h = parse_hypergraph(_read(args.input))
    membership = classify_t(h)
    trace = None
    if membership.in_t:
        d, trace = construct_good_digraph(h)
    else:
        found = recognize_flower(h)
        if found is None:
            raise NotInT(membership)
        s, r = found
        logging.info(f'input is the flower F({s}) of rank {r}')
        _, d = flower_digraph(r, s)
    _write(dump_digraph(d, args.format), args.output)
    if args.trace:
        if trace is None:
            logging.warning('flower constructions have no trace')
        else:
            _write(dump_trace(trace, args.format), args.trace)
    return ExitCode.OK


def cmd_verify(args) -> ExitCode:
    h = parse_hypergraph(_read(args.hypergraph))
    d = parse_digraph(_read(args.digraph))
    report = is_good_digraph(d, h)
    if report:
        _say('OK')
        return ExitCode.OK
    for violation in report.violations:
        _say(str(violation))
    return ExitCode.FAILED


def cmd_nh(args) -> ExitCode:
    # a non-simple result is logged as a warning by niche_hypergraph
    result = niche_hypergraph(parse_digraph(_read(args.input)))
    _write(dump_hypergraph(result.hypergraph, args.format), args.output)
    return ExitCode.OK


def cmd_number(args) -> ExitCode:
    h = parse_hypergraph(_read(args.input))
    budget = SearchBudget(
        max_vertices=args.max_vertices,
        max_dags=args.max_dags,
        time_limit=args.time_limit,
        worker_count=args.workers)
    result = niche_number_upto(h, args.kmax, budget)
    _say(str(result))
    return ExitCode.FAILED if isinstance(result, LowerBound) else ExitCode.OK


def cmd_export_dot(args) -> ExitCode:
    raw = _read(args.input)
    data = decode(raw)
    if isinstance(data, dict) and 'arcs' in data:
        text = digraph_to_dot(parse_digraph(raw))
    else:
        text = hypergraph_to_dot(parse_hypergraph(raw))
    _write(text.encode('utf-8'), args.output)
    return ExitCode.OK


def _env_seed() -> int:
    value = os.environ.get('NICHE_SEED', '0')
    try:
        return int(value)
    except ValueError:
        logging.warning(f'ignoring NICHE_SEED={value!r}, not an integer')
        return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog='nichehyper',
        description='Niche hypergraphs of acyclic digraphs.')
    parser.add_argument(
        '--version', action='version', version=f'%(prog)s {__version__}')
    parser.add_argument(
        '--log-level',
        default='WARNING',
        choices=['DEBUG', 'INFO', 'WARNING', 'ERROR'])
    sub = parser.add_subparsers(dest='command', required=True)

    def output(p, fmt=True):
        p.add_argument('-o', '--output', help='output file (default stdout)')
        if fmt:
            p.add_argument(
                '--format', type=Format, default=Format.JSON,
                choices=list(Format), metavar='{json,msgpack}')

    p = sub.add_parser('gen', help='generate a hypergraph of a family')
    p.add_argument(
        '--type', required=True, choices=['path', 'nova', 'flower', 'random'])
    p.add_argument('--r', type=int, default=3, help='edge size')
    p.add_argument('--k', type=int, default=3, help='hyperpath length')
    p.add_argument('--m', type=int, default=3, help='hypernova edges')
    p.add_argument('--s', type=int, default=3, help='flower degree')
    p.add_argument('--edges', type=int, default=5)
    p.add_argument('--min-size', type=int, default=3)
    p.add_argument('--max-size', type=int, default=6)
    p.add_argument('--seed', type=int, default=None)
    output(p)
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser('analyze', help='print the structure report')
    p.add_argument('input', nargs='?')
    output(p, fmt=False)
    p.set_defaults(func=cmd_analyze)

    p = sub.add_parser('classify', help='decide membership in class T')
    p.add_argument('input', nargs='?')
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser('construct', help='build a realizing digraph')
    p.add_argument('input', nargs='?')
    p.add_argument('--trace', help='write the construction trace here')
    output(p)
    p.set_defaults(func=cmd_construct)

    p = sub.add_parser('verify', help='check a digraph against a hypergraph')
    p.add_argument('hypergraph')
    p.add_argument('digraph', nargs='?')
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser('nh', help='niche hypergraph of a digraph')
    p.add_argument('input', nargs='?')
    output(p)
    p.set_defaults(func=cmd_nh)

    p = sub.add_parser('number', help='niche number by exhaustive search')
    p.add_argument('input', nargs='?')
    p.add_argument('--kmax', type=int, default=2)
    p.add_argument(
        '--workers', type=int, default=SearchBudget.DEFAULT_WORKERS)
    p.add_argument(
        '--max-dags', type=int, default=SearchBudget.DEFAULT_MAX_DAGS)
    p.add_argument(
        '--time-limit', type=float, default=SearchBudget.DEFAULT_TIME_LIMIT)
    p.add_argument(
        '--max-vertices', type=int,
        default=SearchBudget.DEFAULT_MAX_VERTICES)
    p.set_defaults(func=cmd_number)

    p = sub.add_parser('export-dot', help='DOT text for a file')
    p.add_argument('input', nargs='?')
    output(p, fmt=False)
    p.set_defaults(func=cmd_export_dot)

    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    logging.basicConfig(
        level=args.log_level,
        stream=sys.stderr,
        format='%(levelname)s %(message)s')
    if getattr(args, 'seed', 0) is None:
        args.seed = _env_seed()
    try:
        return int(args.func(args))
    except (NicheError, OSError) as e:
        code = exit_code_for(e)
        sys.stderr.write(f'error: {e}\n')
        return int(code)


if __name__ == '__main__':
    sys.exit(main())
