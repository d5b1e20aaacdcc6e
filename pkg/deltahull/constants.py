# built-in
from enum import Enum, unique


@unique
class ReturnCodes(Enum):
    OK = 0
    CHECKS_FAILED = 1
    USAGE_ERROR = 2
    UNKNOWN_EXCEPTION = 3


CONFIG_NAMES = ('deltahull.toml', 'pyproject.toml')
ENV_VAR_TEMPLATE = 'DELTAHULL_{}'

# input formats, aliases resolve to the converter name
FORMATS = ('g6', 'graph6', 'el', 'edgelist')
FORMAT_ALIASES = dict(g6='graph6', graph6='graph6', el='edgelist', edgelist='edgelist')
GRAPH6_HEADER = '>>graph6<<'
GRAPH6_MAX_N = 62

FAMILIES = ('triangle_chain', 'triangle_fan')
INDEPENDENCE_KINDS = ('helly', 'radon', 'caratheodory', 'convex')

# audit checks, in report and CSV column order
CHECK_NAMES = (
    'levi',
    'eckhoff_jamison',
    'rank_dominates',
    'alpha_lower_bounds',
    'm2k_upper_bounds',
    'closed_form_match',
    'conjecture_h_eq_r',
)
# proven inequalities: a failure means a bug, not a finding
SELF_TEST_CHECKS = ('levi', 'rank_dominates', 'alpha_lower_bounds', 'm2k_upper_bounds')

CHECK_PASS = 'pass'
CHECK_FAIL = 'fail'
CHECK_SKIPPED = 'skipped'

CSV_COLUMNS = ('graph_id', 'graph6', 'n', 'edges', 'k', 'm', 'alpha', 'h', 'r', 'c', 'd') + CHECK_NAMES

# size caps for exhaustive searches
DEFAULT_CAPS = dict(full=10, partial=12, cara=16)

LOG_LEVELS = ('DEBUG', 'INFO', 'WARNING', 'ERROR', 'EXCEPTION')
LOG_FORMATTERS = ('short', 'full')
