"""Initialize the module."""

__name__ = "polyadica"
__version__ = "0.1.0"

import logging
import sys

logging.basicConfig(stream=sys.stderr, level=logging.WARNING)
logger = logging.getLogger(__name__)
