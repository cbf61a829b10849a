import logging
import sys
from typing import Optional, Sequence

from commands import Dispatcher, functional_router, lab_router, model_router, space_router
from config.config_manager import ConfigManager
from handlers.report_handlers import diagnostic, write_json
from middlewares.command_logging import CommandLoggingMiddleware
from spaces.errors import ChainscopeError

logger = logging.getLogger(__name__)


def setup_logging() -> None:
    """Logs go to stderr (and the optional log file); stdout carries machine output only."""
    handlers = [logging.StreamHandler(sys.stderr)]
    log_file = ConfigManager.get_log_file()
    if log_file:
        handlers.append(logging.FileHandler(log_file))
    logging.basicConfig(
        level=ConfigManager.get_log_level(),
        format='%(asctime)s - %(name)s - %(levelname)s - %(message)s',
        handlers=handlers,
    )


def build_dispatcher() -> Dispatcher:
    dp = Dispatcher(description="Epsilon-chain geometry on finite metric spaces and 1-D models")
    dp.middleware(CommandLoggingMiddleware())
    dp.include_router(space_router)
    dp.include_router(functional_router)
    dp.include_router(model_router)
    dp.include_router(lab_router)
    return dp


def main(argv: Optional[Sequence[str]] = None) -> int:
    """Exit codes: 0 success, 1 failed verdict (invalid input to validate, failing propcheck), 2 rejected input."""
    setup_logging()
    dp = build_dispatcher()
    try:
        return dp.dispatch(argv)
    except ChainscopeError as e:
        write_json(diagnostic(e, dp.last_command))
        return 2
    except Exception as e:
        logger.critical(f"Unhandled exception: {str(e)}", exc_info=True)
        raise


if __name__ == "__main__":
    sys.exit(main())
