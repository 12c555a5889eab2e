"""Chung-Lu style bipartite graphs, one-mode projections and clustering
statistics, with closed-form predictions for the projected graph."""

from ._core import *  # noqa: F401,F403
from ._core import __version__  # noqa: F401
