from middlewares.command_logging import CommandLoggingMiddleware

__all__ = ['CommandLoggingMiddleware']
