"""Index computations for Diffie-Hellman mappings on finite cyclic groups."""

from ._dhindex import *  # noqa: F401,F403
from ._dhindex import __doc__  # noqa: F401

__version__ = "0.1.0"
