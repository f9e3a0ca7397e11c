"""Numba switch.

Hot kernels are written once as plain Python over numpy arrays and decorated
with :func:`jit`. Setting ``GEOLAB_NUMBA=0`` (or running without numba
installed) leaves them undecorated, so the same source runs under CPython.
"""

import os

_flag = os.environ.get("GEOLAB_NUMBA", "1").strip().lower()
USE_NUMBA = _flag not in ("0", "false", "no", "off")

if USE_NUMBA:
    try:
        import numba
    except ImportError:  # pragma: no cover
        USE_NUMBA = False

if USE_NUMBA:
    # the bundled TBB is too old; avoid the probe warning
    if "NUMBA_THREADING_LAYER" not in os.environ:
        numba.config.THREADING_LAYER = "workqueue"
    prange = numba.prange

    def jit(*args, parallel=False):
        def wrap(fn):
            return numba.njit(cache=True, parallel=parallel)(fn)

        if args and callable(args[0]):
            return wrap(args[0])
        return wrap

    def set_workers(n):
        if n is None:
            return
        n = max(1, min(int(n), numba.config.NUMBA_NUM_THREADS))
        numba.set_num_threads(n)

else:
    prange = range

    def jit(*args, parallel=False):
        if args and callable(args[0]):
            return args[0]
        return lambda fn: fn

    def set_workers(n):
        pass


def backend():
    return "numba" if USE_NUMBA else "python"
