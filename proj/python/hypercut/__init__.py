"""Normalized-Laplacian spectra and Cheeger cuts for uniform hypergraphs."""

from ._hypercut import *  # noqa: F401,F403
from ._hypercut import __version__  # noqa: F401
