"""Distance-based vertex partitions and the quasi-(lambda,n)-distance-balanced property."""

__author__    = "Quasi DB Developers"
__copyright__ = "Copyright (c) 2026 by the Quasi DB Developers"
__license__   = "MIT"
__version__   = "1.0.0"
