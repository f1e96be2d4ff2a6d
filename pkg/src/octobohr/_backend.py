"""Backend selection for the numeric kernels.

Two interchangeable kernel implementations exist: a pure-numpy one and a
numba-compiled one.  The active implementation is chosen once at import time
from the environment:

    OCTOBOHR_BACKEND = auto | numba | numpy   (default: auto)
    OCTOBOHR_THREADS = <positive int>         (caps numba threads)

``auto`` uses numba when it imports cleanly and falls back to numpy
otherwise.  ``numba`` insists on numba and raises if it is unavailable.
"""

import os

_VALID = ("auto", "numba", "numpy")


def requested_backend():
    """Return the backend requested via OCTOBOHR_BACKEND, validated."""
    value = os.environ.get("OCTOBOHR_BACKEND", "auto").strip().lower()
    if value not in _VALID:
        raise ValueError(
            "OCTOBOHR_BACKEND must be one of %s, got %r" % (", ".join(_VALID), value)
        )
    return value


def thread_cap():
    """Return the requested thread cap, or None when unset."""
    raw = os.environ.get("OCTOBOHR_THREADS")
    if raw is None or not raw.strip():
        return None
    count = int(raw)
    if count < 1:
        raise ValueError("OCTOBOHR_THREADS must be a positive integer, got %r" % raw)
    return count


def resolve_backend():
    """Decide the active backend name, importing numba only if needed."""
    choice = requested_backend()
    if choice == "numpy":
        return "numpy"
    try:
        import numba
    except ImportError:
        if choice == "numba":
            raise ImportError(
                "OCTOBOHR_BACKEND=numba but numba is not importable"
            )
        return "numpy"
    cap = thread_cap()
    if cap is not None:
        numba.set_num_threads(min(cap, numba.config.NUMBA_NUM_THREADS))
    return "numba"
