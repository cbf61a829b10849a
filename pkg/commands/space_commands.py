import argparse
import logging
import sys

from chains.merge_tree import merge_tree
from config.config_manager import ConfigManager
from commands.common import analysis_service, budget, input_service
from commands.router import CommandRouter, argument
from handlers.report_handlers import envelope, merge_events_csv, merge_events_dot, write_json
from models.model import Model1D
from services.errors import InputError
from services.input_service import subset_digest
from spaces.errors import ChainscopeError

logger = logging.getLogger(__name__)

space_router = CommandRouter('space')


@space_router.command('validate', help="Check a space or model file; exit 1 names the violated condition",
                      arguments=[argument('path')])
def cmd_validate(args: argparse.Namespace) -> int:
    try:
        subject = input_service.load(args.path)
    except InputError:
        raise
    except ChainscopeError as e:
        write_json(envelope('validate', {'valid': False, 'violation': e.to_dict()}))
        return 1
    if isinstance(subject, Model1D):
        result = {'valid': True, 'kind': 'model1d', 'pieces': len(subject.pieces)}
    else:
        result = {'valid': True, 'kind': 'finite', 'points': len(subject)}
    write_json(envelope('validate', result, {args.path: subject.digest}))
    return 0


@space_router.command('analyze', help="Isolation, merge events, f_c table and classifier report",
                      arguments=[
                          argument('path'),
                          argument('--subset', help="subset file for the functional and subset verdicts"),
                          argument('--k', type=budget, default=1, help="centres for the finite functionals"),
                          argument('--m', type=budget, default=1, help="chain steps for the finite functionals"),
                      ])
def cmd_analyze(args: argparse.Namespace) -> int:
    subject = input_service.load(args.path)
    inputs = {args.path: subject.digest}
    subset = None
    if args.subset:
        subset = input_service.load_subset(args.subset, subject)
        inputs[args.subset] = subset_digest(subset)
    if isinstance(subject, Model1D):
        report = analysis_service.analyze_model(subject, subset)
    else:
        report = analysis_service.analyze_space(subject, subset, args.k, args.m)
    write_json(envelope('analyze', report.to_dict(), inputs))
    return 0


@space_router.command('scales', help="Merge events of the single-linkage tree as JSON, CSV or DOT",
                      arguments=[
                          argument('path'),
                          argument('--format', choices=['json', 'csv', 'dot'], default='json'),
                      ])
def cmd_scales(args: argparse.Namespace) -> int:
    space = input_service.load_space(args.path)
    if args.format == 'csv':
        sys.stdout.write(merge_events_csv(merge_tree(space)))
    elif args.format == 'dot':
        sys.stdout.write(f"// chainscope {ConfigManager.get_version()} {space.digest}\n")
        sys.stdout.write(merge_events_dot(merge_tree(space)))
    else:
        write_json(envelope('scales', analysis_service.scales(space), {args.path: space.digest}))
    return 0


@space_router.command('hausdorff', help="Hausdorff distance and gap between two subsets of one space",
                      arguments=[argument('path'), argument('first'), argument('second')])
def cmd_hausdorff(args: argparse.Namespace) -> int:
    space = input_service.load_space(args.path)
    A = input_service.load_point_subset(args.first, space)
    B = input_service.load_point_subset(args.second, space)
    inputs = {args.path: space.digest, args.first: subset_digest(A), args.second: subset_digest(B)}
    write_json(envelope('hausdorff', analysis_service.compare(A, B), inputs))
    return 0


@space_router.command('product', help="Box product of two finite spaces, as a matrix file",
                      arguments=[argument('first'), argument('second')])
def cmd_product(args: argparse.Namespace) -> int:
    X = input_service.load_space(args.first)
    Y = input_service.load_space(args.second)
    write_json(envelope('product', analysis_service.product(X, Y),
                        {args.first: X.digest, args.second: Y.digest}))
    return 0
