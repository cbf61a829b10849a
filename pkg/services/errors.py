from typing import Any, Optional

from spaces.errors import ChainscopeError


class InputError(ChainscopeError):
    """A file that cannot be read as the expected input, with its location."""

    code = "input_error"

    def __init__(self, message: str, file: Optional[str] = None, field: Optional[str] = None,
                 line: Optional[int] = None, **extra: Any):
        context = {key: value for key, value in (('file', file), ('field', field), ('line', line))
                   if value is not None}
        super().__init__(message, **context, **extra)
        self.file, self.field, self.line = file, field, line
