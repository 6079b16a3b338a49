"""Certified simultaneous polynomial root finding."""

from ._wcert import *  # noqa: F401,F403
from ._wcert import __version__, WcertError  # noqa: F401
