"""Explicit one-stage ERKN integrators for multi-frequency oscillatory systems."""

from ._erkn import *  # noqa: F401,F403
from ._erkn import __doc__  # noqa: F401

SCHEMES = tuple(builtin_scheme_names())  # noqa: F405
