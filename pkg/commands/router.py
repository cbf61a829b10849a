import argparse
import logging
from dataclasses import dataclass, field
from typing import Any, Callable, Dict, List, Optional, Sequence, Tuple

logger = logging.getLogger(__name__)

Handler = Callable[[argparse.Namespace], int]
Middleware = Callable[[Handler, argparse.Namespace], int]


@dataclass(frozen=True)
class Argument:
    flags: Tuple[str, ...]
    options: Dict[str, Any] = field(default_factory=dict)


def argument(*flags: str, **options: Any) -> Argument:
    return Argument(flags, options)


@dataclass
class Command:
    name: str
    help: str
    handler: Handler
    arguments: Tuple[Argument, ...] = ()


class CommandRouter:
    """A group of subcommands registered with ``@router.command(...)``."""

    def __init__(self, name: str):
        self.name = name
        self.commands: List[Command] = []

    def command(self, name: str, help: str, arguments: Sequence[Argument] = ()) -> Callable[[Handler], Handler]:
        def register(handler: Handler) -> Handler:
            self.commands.append(Command(name, help, handler, tuple(arguments)))
            return handler
        return register


class Dispatcher:
    """Builds the argument parser from the included routers and runs commands through the middlewares."""

    def __init__(self, prog: str = 'chainscope', description: Optional[str] = None):
        self.prog = prog
        self.description = description
        self.routers: List[CommandRouter] = []
        self.middlewares: List[Middleware] = []
        self.last_command: Optional[str] = None

    def include_router(self, router: CommandRouter) -> None:
        self.routers.append(router)

    def middleware(self, middleware: Middleware) -> None:
        self.middlewares.append(middleware)

    def build_parser(self) -> argparse.ArgumentParser:
        parser = argparse.ArgumentParser(prog=self.prog, description=self.description)
        subparsers = parser.add_subparsers(dest='command', metavar='COMMAND')
        subparsers.required = True
        for router in self.routers:
            for command in router.commands:
                sub = subparsers.add_parser(command.name, help=command.help, description=command.help)
                for arg in command.arguments:
                    sub.add_argument(*arg.flags, **arg.options)
                sub.set_defaults(handler=command.handler)
        return parser

    def dispatch(self, argv: Optional[Sequence[str]] = None) -> int:
        args = self.build_parser().parse_args(argv)
        self.last_command = args.command
        handler: Handler = args.handler
        for middleware in reversed(self.middlewares):
            handler = _wrap(middleware, handler)
        return handler(args)


def _wrap(middleware: Middleware, handler: Handler) -> Handler:
    def wrapped(args: argparse.Namespace) -> int:
        return middleware(handler, args)
    return wrapped
