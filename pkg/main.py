#!/usr/bin/env python
# -*- coding: utf-8 -*-
"""
Command line front end.

    main.py expand --family paw
    main.py formula cycle --n 6
    main.py expand --graph6 'Cr' | main.py infer --input -
    main.py collisions --n 12 --cycle 4 --out report.json
"""

import argparse
import json
import sys
from typing import List, Optional

from config.settings import load_settings
from utils.logger import setup_logger
from handlers.exception_handler import EXIT_DATA_ERROR, EXIT_OK, setup_exception_handler
from handlers.exceptions import UsageError
from handlers.message_handler import MessageHandler, to_json
from models.expansion import StarExpansion
from models.partition import Partition
from models.reports import HookParams
from models.unicyclic import DeepVertexProfile
from services import closed_forms as cf
from services.collision_service import collision_search
from services.enumeration import enumerate_unicyclic, enumerate_unicyclic_slow
from services.families import build_family
from services.fingerprint_store import FingerprintStore
from services.graph_io import format_graph6_lines, parse_graph6, read_graph
from services.graph_ops import cycle_vertices
from services.inference import infer
from services.lambda_words import enumerate_lambda_words
from services.psum_oracle import oracle_check
from services.star_engine import StarEngine, get_engine
from services.theorem_checks import verify_theorems
from utils.file_utils import read_text_input, write_text_output

FORMULAS = (
    'tree-hook', 'unicyclic-hook', 'path', 'cycle', 'pan', 'lambda-words',
    'leading-unicyclic', 'leaves-from-leading', 'lead-tree', 'lead-r1',
    'lead-rge2', 'cuttlefish', 'bicyclic', 'longest-hook',
)

class CliArgumentParser(argparse.ArgumentParser):
    """Parser that reports bad arguments as UsageError instead of exiting"""

    def error(self, message):
        raise UsageError("%s: %s" % (self.prog, message))

def _int_list(text: str) -> List[int]:
    try:
        return [int(v) for v in text.replace('+', ',').split(',') if v.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError("expected comma separated integers, got %r" % text)

def _common_options() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument('--pretty', action='store_true', help='aligned text tables instead of JSON')
    common.add_argument('--jobs', type=int, default=None, help='worker processes (default CSF_JOBS)')
    common.add_argument('--cache-dir', default=None, help='fingerprint cache directory (default CSF_CACHE_DIR)')
    common.add_argument('--log-level', default=None, help='DEBUG, INFO, WARNING or ERROR')
    common.add_argument('--quiet', action='store_true', help='no progress bars')
    return common

def _graph_options() -> argparse.ArgumentParser:
    graph = argparse.ArgumentParser(add_help=False)
    source = graph.add_argument_group('graph input')
    source.add_argument('--edges', metavar='FILE', help="edge-list file, '-' for stdin")
    source.add_argument('--graph6', metavar='STRING', help='graph6 string')
    source.add_argument('--family', metavar='NAME', help='builtin family or worked example')
    source.add_argument('--n', type=int)
    source.add_argument('--c', type=int)
    source.add_argument('--t', type=int)
    source.add_argument('--s', type=int)
    source.add_argument('--ell', type=int)
    source.add_argument('--shape', help='typeI or typeII')
    source.add_argument('--tentacles', type=_int_list, help='tentacle lengths, e.g. 2,1')
    return graph

def build_parser() -> argparse.ArgumentParser:
    common = _common_options()
    graph = _graph_options()
    parser = CliArgumentParser(prog='main.py', description='Star-basis expansions of chromatic symmetric functions')
    sub = parser.add_subparsers(dest='command', parser_class=CliArgumentParser)
    sub.required = True

    expand = sub.add_parser('expand', parents=[common, graph], help='star expansion of a graph')
    expand.add_argument('--policy', default=None, help='canonical, lowest or highest')
    expand.add_argument('--no-memo', action='store_true', help='walk the DNC tree without memoization')

    sub.add_parser('leading', parents=[common, graph], help='leading partition and coefficient')

    formula = sub.add_parser('formula', parents=[common, graph], help='evaluate a closed form')
    formula.add_argument('name', choices=FORMULAS)
    formula.add_argument('--k', type=int)
    formula.add_argument('--r', type=int)
    formula.add_argument('--m1', type=int)
    formula.add_argument('--lam', help='partition, e.g. 3+2+1')
    formula.add_argument('--r-case', choices=('r1', 'rge2'))
    formula.add_argument('--degrees', type=_int_list, default=None, help='deep-vertex degrees')
    formula.add_argument('--sprout-degrees', type=_int_list, default=None)
    formula.add_argument('--deep-degrees', type=_int_list, default=None, help='non-sprout deep degrees')
    formula.add_argument('--root-sprout', action='store_true')

    infer = sub.add_parser('infer', parents=[common], help='structural report from an expansion')
    infer.add_argument('--input', default='-', metavar='FILE', help="expansion JSON, '-' for stdin")

    oracle = sub.add_parser('oracle-check', parents=[common, graph], help='engine against the power-sum route')
    oracle.add_argument('--method', default='subsets', choices=('subsets', 'blocks'))

    enum = sub.add_parser('enumerate', parents=[common], help='graph6 lines of unicyclic graphs')
    enum.add_argument('--n', type=int, required=True)
    enum.add_argument('--cycle', type=int, default=None)
    enum.add_argument('--slow', action='store_true', help='use the leaf-extension generator')

    collisions = sub.add_parser('collisions', parents=[common], help='equal-CSF unicyclic classes')
    collisions.add_argument('--n', type=int, required=True)
    collisions.add_argument('--cycle', type=int, default=None)
    collisions.add_argument('--out', default=None, metavar='FILE')
    collisions.add_argument('--no-cache', action='store_true')

    verify = sub.add_parser('verify', parents=[common], help='re-check every theorem exhaustively')
    verify.add_argument('--n-max', type=int, required=True)
    verify.add_argument('--no-cache', action='store_true')
    return parser

# input helpers

def _read_graph(args):
    chosen = [name for name in ('edges', 'graph6', 'family') if getattr(args, name, None)]
    if len(chosen) != 1:
        raise UsageError("give exactly one of --edges, --graph6, --family")
    if args.edges:
        try:
            return read_graph(read_text_input(args.edges))
        except OSError as err:
            raise UsageError("cannot read %s: %s" % (args.edges, err))
    if args.graph6:
        return parse_graph6(args.graph6)
    params = {name: getattr(args, name, None) for name in ('n', 'c', 't', 's', 'ell', 'shape', 'tentacles')}
    return build_family(args.family, **params)

def _require(args, *names):
    missing = [name for name in names if getattr(args, name.replace('-', '_'), None) is None]
    if missing:
        raise UsageError("%s needs %s" % (args.name, ', '.join('--' + m for m in missing)))

def _store(args):
    if getattr(args, 'no_cache', False):
        return None
    return FingerprintStore(args.cache_dir)

# commands

def cmd_expand(args, messages: MessageHandler) -> int:
    g = _read_graph(args)
    if args.policy or args.no_memo:
        engine = StarEngine(policy=args.policy or StarEngine.POLICY_CANONICAL, memoize=not args.no_memo)
    else:
        engine = get_engine()
    messages.show_result(engine.star_expand(g).to_dict())
    return EXIT_OK

def cmd_leading(args, messages: MessageHandler) -> int:
    lam, value = get_engine().leading_term(_read_graph(args))
    messages.show_result({'partition': list(lam), 'c': value})
    return EXIT_OK

def cmd_formula(args, messages: MessageHandler) -> int:
    name = args.name
    if name == 'tree-hook':
        _require(args, 'k', 'm1')
        result = {'value': cf.tree_hook_coeff(args.k, args.m1)}
    elif name == 'unicyclic-hook':
        _require(args, 'n', 'c', 'k', 'r', 'm1')
        result = {'value': cf.unicyclic_hook_coeff(HookParams(args.n, args.c, args.k, args.r, args.m1))}
    elif name in ('path', 'cycle', 'pan'):
        _require(args, 'n')
        builder = {'path': cf.path_csf, 'cycle': cf.cycle_csf, 'pan': cf.pan_csf}[name]
        result = builder(args.n).to_dict()
    elif name == 'lambda-words':
        _require(args, 'family', 'n', 'lam')
        words = enumerate_lambda_words(args.family, args.n, Partition.from_text(args.lam))
        result = {'count': len(words), 'words': [str(w) for w in words]}
    elif name == 'leading-unicyclic':
        lam, value = cf.predict_leading_term(_read_graph(args))
        result = {'partition': list(lam), 'c': value}
    elif name == 'leaves-from-leading':
        _require(args, 'lam', 'r-case')
        result = {'value': cf.num_leaves_from_leading(Partition.from_text(args.lam), args.r_case)}
    elif name == 'lead-tree':
        result = {'value': cf.lead_coeff_tree(args.degrees or [])}
    elif name == 'lead-r1':
        _require(args, 'c')
        result = {'value': cf.lead_coeff_unicyclic_r1(args.c, args.degrees or [], args.root_sprout)}
    elif name == 'lead-rge2':
        _require(args, 'r')
        profile = DeepVertexProfile(tuple(args.sprout_degrees or ()), tuple(args.deep_degrees or ()))
        result = {'value': cf.lead_coeff_unicyclic_rge2(profile, args.r)}
    elif name == 'cuttlefish':
        _require(args, 'c', 't')
        result = {'partition': list(cf.cuttlefish_leading(args.c, args.t))}
    elif name == 'bicyclic':
        _require(args, 'shape', 's', 't', 'ell')
        result = {'value': cf.bicyclic_cn(args.shape, args.s, args.t, args.ell)}
    else:
        _require(args, 'c', 'k', 'r')
        m1, value = cf.longest_hook(args.c, args.k, args.r)
        result = {'m1': m1, 'value': value}
    messages.show_result(dict({'formula': name}, **result))
    return EXIT_OK

def cmd_infer(args, messages: MessageHandler) -> int:
    try:
        document = json.loads(read_text_input(args.input))
    except OSError as err:
        raise UsageError("cannot read %s: %s" % (args.input, err))
    except ValueError as err:
        raise UsageError("expansion input is not JSON: %s" % err)
    messages.show_result(infer(StarExpansion.from_dict(document)).to_dict())
    return EXIT_OK

def cmd_oracle_check(args, messages: MessageHandler) -> int:
    engine_x, oracle_x, equal = oracle_check(_read_graph(args), method=args.method)
    messages.show_result({'equal': equal, 'engine': engine_x.to_dict(), 'oracle': oracle_x.to_dict()})
    if not equal:
        messages.show_error("engine and power-sum oracle disagree")
        return EXIT_DATA_ERROR
    return EXIT_OK

def cmd_enumerate(args, messages: MessageHandler) -> int:
    if args.slow:
        graphs = enumerate_unicyclic_slow(args.n)
        if args.cycle is not None:
            graphs = [g for g in graphs if len(cycle_vertices(g)) == args.cycle]
    else:
        graphs = enumerate_unicyclic(args.n, args.cycle)
    messages.show_lines(format_graph6_lines(graphs))
    return EXIT_OK

def cmd_collisions(args, messages: MessageHandler) -> int:
    report = collision_search(args.n, args.cycle, jobs=args.jobs, store=_store(args), progress=not args.quiet)
    if args.out:
        write_text_output(args.out, to_json(report.to_dict()), stream=messages.out_stream)
        if args.out != '-':
            messages.show_info("wrote %s (%d pairs)" % (args.out, report.pair_count))
    else:
        messages.show_result(report.to_dict())
    return EXIT_OK

def cmd_verify(args, messages: MessageHandler) -> int:
    report = verify_theorems(args.n_max, jobs=args.jobs, store=_store(args), progress=not args.quiet)
    messages.show_result(report.to_dict())
    return EXIT_OK if report.ok else EXIT_DATA_ERROR

HANDLERS = {
    'expand': cmd_expand,
    'leading': cmd_leading,
    'formula': cmd_formula,
    'infer': cmd_infer,
    'oracle-check': cmd_oracle_check,
    'enumerate': cmd_enumerate,
    'collisions': cmd_collisions,
    'verify': cmd_verify,
}

def run(argv: Optional[List[str]] = None, out=None, err=None) -> int:
    """
    Parse arguments, run one command and return its exit code

    Args:
        argv (list, optional): Arguments without the program name, sys.argv[1:] by default
        out (TextIO, optional): Result stream, stdout by default
        err (TextIO, optional): Notice stream, stderr by default

    Returns:
        int: 0 on success, 1 on failed checks or data errors, 2 on usage errors
    """
    load_settings()
    handler = setup_exception_handler(err)
    try:
        args = build_parser().parse_args(argv)
        setup_logger(args.log_level)
        messages = MessageHandler(pretty=args.pretty, out=out, err=err)
        return HANDLERS[args.command](args, messages)
    except SystemExit as exit_request:
        # --help and --version
        return exit_request.code or EXIT_OK
    except Exception as error:
        return handler.handle_error(error)

def main():
    """Application entry point"""
    sys.exit(run())

if __name__ == "__main__":
    main()
