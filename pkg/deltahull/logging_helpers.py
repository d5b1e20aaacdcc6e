# built-in
import logging


__all__ = ['ColoredFormatter', 'LevelFilter']


try:
    # external
    from colorama import Fore, init
    init()
except ImportError:
    Fore = None


class _ForeAnsi:
    _f = '\x1b[{}m'.format

    BLUE = _f(34)
    CYAN = _f(36)
    GREEN = _f(32)
    MAGENTA = _f(35)
    RED = _f(31)
    WHITE = _f(37)
    YELLOW = _f(33)
    RESET = _f(39)


if Fore is None:
    Fore = _ForeAnsi


COLORS = {
    'DEBUG': Fore.BLUE,
    'INFO': Fore.GREEN,
    'WARNING': Fore.YELLOW,
    'ERROR': Fore.RED,
    'CRITICAL': Fore.CYAN,
}

# http://docs.python.org/library/logging.html#logrecord-attributes
RESERVED_ATTRS = frozenset(vars(logging.LogRecord('', 0, '', 0, '', (), None))) | {'message', 'asctime'}


def merge_record_extra(record: logging.LogRecord, target: dict, reserved) -> dict:
    """Copy `extra=` fields of the record into `target`.
    """
    for key, value in record.__dict__.items():
        if key in reserved:
            continue
        if isinstance(key, str) and key.startswith('_'):
            continue
        target[key] = value
    return target


class ColoredFormatter(logging.Formatter):
    def __init__(self, *args, colors=True, extras=True, traceback=True, **kwargs):
        super().__init__(*args, **kwargs)
        self.colors = colors
        self.extras = extras
        self.traceback = traceback

    def format(self, record):
        # extras are collected before the formatter adds its own fields
        extras = ''
        if self.extras:
            fields = merge_record_extra(record=record, target=dict(), reserved=RESERVED_ATTRS)
            extras = ', '.join('{}={}'.format(k, v) for k, v in fields.items())
            if extras:
                extras = '({})'.format(extras)

        # work on a copy: other handlers get the same record
        record = logging.makeLogRecord(record.__dict__)
        record.extras = extras
        if self.colors and record.levelname in COLORS:
            record.levelname = COLORS[record.levelname] + record.levelname + Fore.RESET
            record.msg = Fore.WHITE + str(record.msg) + Fore.RESET
            if extras:
                record.extras = Fore.MAGENTA + extras + Fore.RESET

        # hide traceback
        if not self.traceback:
            record.exc_text = None
            record.exc_info = None
            record.stack_info = None

        return super().format(record)


class LevelFilter(logging.Filter):
    """Filter log by min or max severity level.
    """

    def __init__(self, low=logging.DEBUG, high=logging.CRITICAL):
        # "DEBUG" -> 10
        if isinstance(low, str):
            low = getattr(logging, low)
        if isinstance(high, str):
            high = getattr(logging, high)

        self._low = low
        self._high = high
        super().__init__()

    def filter(self, record):
        return self._low <= record.levelno <= self._high
