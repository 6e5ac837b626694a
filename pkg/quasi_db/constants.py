"""Quasi DB - Constants"""

import logging
import os


_logger = logging.getLogger(__name__)


# Envelope Constants
# ==================
GRAPH6_MAX_ORDER        = 62
ENUMERATION_MAX_ORDER   = 10
IN_PROCESS_MAX_ORDER    = 8      # orders 9-10 come from a graph6 ingest file
AUTOMORPHISM_MAX_ORDER  = 12
CORONA_MAX_ORDER        = 5
TENSOR_MAX_ORDER        = 6

MAX_ORDER_ENV           = "QDB_MAX_ORDER"


# Verdict Constants
# =================
VERDICT_BALANCED        = 0x00000001
VERDICT_QUASI           = 0x00000002
VERDICT_UNBALANCED      = 0x00000004
VERDICT_NO_PAIRS        = 0x00000008

VERDICT_NAMES = {
    VERDICT_BALANCED:   "balanced",
    VERDICT_QUASI:      "quasi",
    VERDICT_UNBALANCED: "unbalanced",
    VERDICT_NO_PAIRS:   "no-pairs"
}


# Finding Constants
# =================
FINDING_CONFIRMED       = 0x00000010
FINDING_COUNTEREXAMPLE  = 0x00000020
FINDING_MISMATCH        = 0x00000040

FINDING_NAMES = {
    FINDING_CONFIRMED:      "confirmed",
    FINDING_COUNTEREXAMPLE: "counterexample",
    FINDING_MISMATCH:       "mismatch"
}


# Exit Codes
# ==========
EXIT_OK                 = 0
EXIT_FINDINGS           = 1
EXIT_USAGE              = 2


# Functions
# =========
def max_enumeration_order():
    """Return the enumeration envelope, lowered by QDB_MAX_ORDER if it is set."""
    value = os.environ.get(MAX_ORDER_ENV)

    if value is None:
        return ENUMERATION_MAX_ORDER

    try:
        order = int(value)

    except ValueError:
        _logger.warning("ignoring non-integer %s=%r", MAX_ORDER_ENV, value)
        return ENUMERATION_MAX_ORDER

    # The variable may only lower the envelope
    return max(1, min(order, ENUMERATION_MAX_ORDER))
