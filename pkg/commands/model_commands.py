import argparse

from commands.common import analysis_service, input_service
from commands.router import CommandRouter, argument
from handlers.report_handlers import envelope, write_json
from services.input_service import subset_digest

model_router = CommandRouter('model')


@model_router.command('classify', help="Hierarchy verdicts for a model, a subset of it, or a product",
                      arguments=[
                          argument('path'),
                          argument('--subset', help="subset file"),
                          argument('--product', help="second model file for the box-product verdict"),
                      ])
def cmd_classify(args: argparse.Namespace) -> int:
    model = input_service.load_model(args.path)
    inputs = {args.path: model.digest}
    subset = other = None
    if args.subset:
        subset = input_service.load_model_subset(args.subset, model)
        inputs[args.subset] = subset_digest(subset)
    if args.product:
        other = input_service.load_model(args.product)
        inputs[args.product] = other.digest
    write_json(envelope('classify', analysis_service.classify(model, subset, other), inputs))
    return 0


@model_router.command('sample', help="Finite sample of a model over a window, as a matrix file",
                      arguments=[
                          argument('path'),
                          argument('--window', nargs=2, required=True, metavar=('LO', 'HI')),
                          argument('--resolution', required=True, help="grid step for convex parts"),
                      ])
def cmd_sample(args: argparse.Namespace) -> int:
    model = input_service.load_model(args.path)
    result = analysis_service.sample(model, tuple(args.window), args.resolution)
    write_json(envelope('sample', result, {args.path: model.digest}))
    return 0
