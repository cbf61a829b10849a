import argparse

from commands.router import CommandRouter, argument
from handlers.report_handlers import envelope, write_json
from lab.suites import SUITES, run_suite

lab_router = CommandRouter('lab')


@lab_router.command('propcheck', help="Run a property suite; exit 1 when any assertion fails",
                    arguments=[
                        argument('--suite', required=True, help="suite name, or 'all'"),
                        argument('--seed', type=int, default=0),
                        argument('--trials', type=int, default=100),
                        argument('--workers', type=int, default=None, help="worker processes"),
                        argument('--timing', action='store_true', help="include elapsed seconds"),
                    ])
def cmd_propcheck(args: argparse.Namespace) -> int:
    names = sorted(SUITES) if args.suite == 'all' else [args.suite]
    reports = [run_suite(name, args.seed, args.trials, args.workers) for name in names]
    documents = [report.to_dict(timing=args.timing) for report in reports]
    result = documents[0] if args.suite != 'all' else {'suites': documents}
    write_json(envelope('propcheck', result))
    return 0 if all(report.passed for report in reports) else 1
