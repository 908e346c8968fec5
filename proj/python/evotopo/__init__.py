"""Persistent homology of evolving networks."""

try:
    from ._evotopo import *  # noqa: F401,F403
    from ._evotopo import __doc__  # noqa: F401
except ImportError:  # in-tree build: extension sits next to the package
    from _evotopo import *  # noqa: F401,F403


def persist(network, max_dim=2):
    """Diagrams of dimensions 0..max_dim for a parsed network."""
    return compute_persistence(build_clique_filtration(network, max_dim), max_dim)  # noqa: F405
