from commands.functional_commands import functional_router
from commands.lab_commands import lab_router
from commands.model_commands import model_router
from commands.router import CommandRouter, Dispatcher, argument
from commands.space_commands import space_router

__all__ = [
    'CommandRouter',
    'Dispatcher',
    'argument',
    'functional_router',
    'lab_router',
    'model_router',
    'space_router',
]
