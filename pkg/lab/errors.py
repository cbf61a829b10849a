from typing import Sequence

from spaces.errors import ChainscopeError


class TooLarge(ChainscopeError):
    code = "too_large"

    def __init__(self, what: str, size: int, bound: int):
        super().__init__(f"{what} accepts at most {bound}, got {size}", what=what, size=size, bound=bound)


class UnknownSuite(ChainscopeError):
    code = "unknown_suite"

    def __init__(self, name: str, known: Sequence[str]):
        super().__init__(f"Unknown suite {name!r}; known suites: {', '.join(known)}",
                         suite=name, known=list(known))


class InvalidGeneratorConfig(ChainscopeError):
    code = "invalid_generator_config"
