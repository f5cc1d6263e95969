"""Python front end for the monoendo library.

Reports are the same JSON documents the command-line tool prints.
"""

import json

from ._monoendo import (
    REPORT_SCHEMA,
    InputError,
    RefusalError,
    __version__,
    count_torus_case,
    endoscopic_type,
    run,
)

__all__ = [
    "REPORT_SCHEMA",
    "InputError",
    "RefusalError",
    "__version__",
    "analyze",
    "bsl",
    "cells",
    "cocycle",
    "count",
    "count_torus_case",
    "endoscopic_type",
    "kl",
    "report",
]


def _text(config):
    if isinstance(config, str):
        return config
    return json.dumps(config)


def report(command, config, **options):
    """Run a command on a config (dict or JSON text) and return the parsed report."""
    return json.loads(run(command, _text(config), **options))


def analyze(config, q=None):
    return report("analyze", config, q=q)


def kl(config, depth=None):
    return report("kl", config, depth=depth)


def cells(config):
    return report("cells", config)


def cocycle(config, q=None):
    return report("cocycle", config, q=q)


def count(config, q=None, cell=None):
    return report("count", config, q=q, cell=cell)


def bsl(config, word):
    if not isinstance(word, str):
        word = ",".join(str(i) for i in word)
    return report("bsl", config, word=word)
