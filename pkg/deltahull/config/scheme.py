# app
from ..constants import CHECK_NAMES, FORMATS, LOG_FORMATTERS, LOG_LEVELS


_CAP = dict(type='integer', min=0, required=True)


# + Scheme for deltahull config, validated by Cerberus:
#   https://docs.python-cerberus.org/en/stable/validation-rules.html
# + All fields with default value (defaults.py) marked as required.
# + dict() for rules, {} for content.
# + Grouped in the same groups as builders (./builders.py)
SCHEME = {
    # input
    'graph':    dict(type='string', required=True),
    'format':   dict(type='string', required=False, allowed=FORMATS),
    'set':      dict(type='string', required=True, regex=r'[\d,\s]*'),

    # search limits
    'caps': dict(
        type='dict',
        required=True,
        schema={
            'full':     _CAP,
            'partial':  _CAP,
            'cara':     _CAP,
        },
    ),
    'cap':      dict(type='integer', min=0, required=False),
    'force':    dict(type='boolean', required=True),
    'workers':  dict(type='integer', min=1, required=True),

    # report
    'check':    dict(
        type='list',
        schema=dict(type='string', allowed=CHECK_NAMES),
        required=False,
        empty=False,
    ),
    'json':     dict(type='boolean', required=True),
    'csv':      dict(type='boolean', required=True),
    'trace':    dict(type='boolean', required=True),
    'failing':  dict(type='boolean', required=True),
    'roles':    dict(type='boolean', required=True),

    # output
    'silent':       dict(type='boolean', required=True),
    'level':        dict(type='string', required=True, allowed=LOG_LEVELS),
    'logformat':    dict(type='string', required=True, allowed=LOG_FORMATTERS),
    'nocolors':     dict(type='boolean', required=True),
    'filter':       dict(type='string', required=False),
    'traceback':    dict(type='boolean', required=True),
    'pdb':          dict(type='boolean', required=True),
    'table':        dict(type='boolean', required=True),
}
