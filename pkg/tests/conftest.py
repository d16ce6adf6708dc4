import functools
import os
import sys

sys.path.insert(0, os.path.dirname(__file__))

from hyperlab import theorems


@functools.cache
def verify_cached(theorem, order, drop_premises=False, oracle=False, workers=4):
    """Verifier reports are deterministic, so tests share one run per input."""
    return theorems.verify(
        theorem, order, drop_premises=drop_premises, oracle=oracle, workers=workers
    )
