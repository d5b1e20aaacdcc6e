class ExtraException(Exception):
    def __init__(self, message: str = None, **kwargs):
        if message:
            self.message = message
        self.extra = kwargs
        super().__init__(message, kwargs)

    def __str__(self) -> str:
        return self.message


class GraphError(ExtraException, ValueError):
    message = 'invalid graph'


class GraphFormatError(GraphError):
    message = 'cannot parse graph'


class DisconnectedGraphError(GraphError):
    message = 'graph is not connected'


class VertexSetError(ExtraException, ValueError):
    message = 'invalid vertex set'


class GeneratorSpecError(ExtraException, ValueError):
    message = 'invalid generator parameters'


class CapExceededError(ExtraException, RuntimeError):
    message = 'graph is too large for exhaustive search'


class SelfTestError(ExtraException, AssertionError):
    message = 'proven inequality violated'
