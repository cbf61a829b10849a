import argparse
import logging
import time
from typing import Callable

from spaces.errors import ChainscopeError

logger = logging.getLogger(__name__)


class CommandLoggingMiddleware:
    def __call__(self, handler: Callable[[argparse.Namespace], int], args: argparse.Namespace) -> int:
        options = {k: v for k, v in vars(args).items() if k not in ('handler', 'command')}
        logger.info(f"Command received - {args.command}, options: {options}")
        started = time.perf_counter()
        try:
            status = handler(args)
        except ChainscopeError as e:
            logger.warning(f"Command {args.command} rejected its input: {e.code} - {e.message}")
            raise
        except Exception as e:
            logger.error(f"Command {args.command} failed: {str(e)}", exc_info=True)
            raise
        logger.info(f"Command {args.command} finished with status {status} "
                    f"in {time.perf_counter() - started:.3f}s")
        return status
