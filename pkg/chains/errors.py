from spaces.errors import ChainscopeError


class NotJoinable(ChainscopeError):
    """The two points lie in different components at the requested scale."""

    code = "not_joinable"

    def __init__(self, x: int, y: int, c_value: float, scale: float):
        super().__init__(
            f"Points {x} and {y} need a scale above {c_value} to be chained, got {scale}",
            x=x, y=y, c_value=c_value, scale=scale,
        )
        self.c_value = c_value


class InvalidChainLength(ChainscopeError):
    code = "invalid_chain_length"

    def __init__(self, m):
        super().__init__(f"Chain length must be a positive integer, got {m}", m=str(m))
