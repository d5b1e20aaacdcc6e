# app
from ..constants import DEFAULT_CAPS


DEFAULT = dict(
    # input
    graph='-',
    set='',

    # search limits
    caps=dict(DEFAULT_CAPS),
    force=False,
    workers=1,

    # report
    json=False,
    csv=False,
    trace=False,
    failing=False,
    roles=False,

    # output
    logformat='short',
    level='INFO',
    nocolors=False,
    silent=False,
    traceback=False,
    pdb=False,
    table=False,
)
