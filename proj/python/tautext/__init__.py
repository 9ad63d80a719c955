"""Dimensions of Ext groups of tautological bundles on symmetric products of curves."""

from ._tautext import *  # noqa: F401,F403
from ._tautext import __doc__  # noqa: F401
