"""Global resource caps, in the style of ``sklearn.set_config``."""

import threading
from contextlib import contextmanager

_DEFAULTS = {
    # vertex count of any line-graph iterate
    "vertex_cap": 10**6,
    # number of automorphisms materialised as an explicit list
    "group_cap": 10**6,
    # elementary steps (search nodes) in colouring enumeration
    "work_cap": 10**9,
    # largest graph handed to the automorphism search
    "search_cap": 10**5,
}

_local = threading.local()


def _get_threadlocal_config():
    if not hasattr(_local, "config"):
        _local.config = dict(_DEFAULTS)
    return _local.config


def get_config():
    """Return a copy of the current cap configuration."""
    return dict(_get_threadlocal_config())


def set_config(vertex_cap=None, group_cap=None, work_cap=None, search_cap=None):
    """Set caps; ``None`` leaves a value unchanged."""
    config = _get_threadlocal_config()
    for key, value in (
        ("vertex_cap", vertex_cap),
        ("group_cap", group_cap),
        ("work_cap", work_cap),
        ("search_cap", search_cap),
    ):
        if value is None:
            continue
        if int(value) <= 0:
            raise ValueError(f"{key} must be positive, got {value}")
        config[key] = int(value)


@contextmanager
def config_context(**new_config):
    """Temporarily override caps inside a ``with`` block."""
    old = get_config()
    set_config(**new_config)
    try:
        yield
    finally:
        _get_threadlocal_config().clear()
        _get_threadlocal_config().update(old)
