"""Exact sexagesimal arithmetic, scribal procedures and tablet replay."""

from ._sexakit import *  # noqa: F401,F403
from ._sexakit import SexakitError, Sexa, Quantity  # noqa: F401
