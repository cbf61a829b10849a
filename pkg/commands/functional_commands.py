import argparse

from commands.common import analysis_service, budget, input_service
from commands.router import CommandRouter, argument
from functionals.covering import Mode
from handlers.report_handlers import envelope, write_json
from models.model import Model1D
from services.input_service import subset_digest

functional_router = CommandRouter('functionals')


@functional_router.command('functionals', help="Covering functionals of a subset",
                           arguments=[
                               argument('path'),
                               argument('subset'),
                               argument('--k', type=budget, default=1, help="number of centres (or inf)"),
                               argument('--m', type=budget, default=1, help="chain steps per centre (or inf)"),
                               argument('--mode', choices=[m.value for m in Mode], default=Mode.EXACT.value),
                           ])
def cmd_functionals(args: argparse.Namespace) -> int:
    subject = input_service.load(args.path)
    subset = input_service.load_subset(args.subset, subject)
    inputs = {args.path: subject.digest, args.subset: subset_digest(subset)}
    if isinstance(subject, Model1D):
        result = analysis_service.model_functionals(subject, subset)
    else:
        result = analysis_service.functionals(subset, args.k, args.m, Mode(args.mode))
    write_json(envelope('functionals', result, inputs))
    return 0
