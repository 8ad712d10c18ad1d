# mincodes/utils/constants.py

"""
Global constants for checker methods, construction families, statuses and budgets.
These constants are imported by models, services and commands.
"""

# --- Field limits ---
MAX_FIELD_ORDER = 2 ** 16  # reject q above this
TABLE_FIELD_ORDER = 256  # precompute add/mul tables up to this q

# --- Enumeration budgets (counted in messages, i.e. q^k) ---
WEIGHT_ENUMERATION_LIMIT = 2 ** 24
PAIR_ENUMERATION_LIMIT = 2 ** 16
FULL_SPACE_LIMIT = 2 ** 16

# Rows of the message space evaluated per numpy batch
MESSAGE_CHUNK = 4096

# --- Search ---
DEFAULT_NODE_BUDGET = 10 ** 7
DEFAULT_SPLIT_DEPTH = 1


class Method:
    SPAN = "span"
    DHZ = "dhz"
    BRUTE = "brute"
    AB = "ab"
    ALL = "all"

    CHOICES = (SPAN, DHZ, BRUTE, AB, ALL)


class Family:
    FULL = "full"
    D0 = "d0"
    D1 = "d1"
    D2 = "d2"
    D3 = "d3"
    D4 = "d4"
    WT2 = "wt2"

    SPLIT = (D1, D2, D3, D4)
    CHOICES = (FULL, D0, D1, D2, D3, D4, WT2)


class Padding:
    REPEAT_LAST = "repeat_last"
    CYCLE = "cycle"
    FROM_FILE = "from_file"

    CHOICES = (REPEAT_LAST, CYCLE, FROM_FILE)


class SearchStatus:
    EXACT = "exact"
    BRACKET = "bracket"
    BUDGET_EXHAUSTED = "budget_exhausted"


class Existence:
    FOUND = "found"
    EXHAUSTED = "exhausted"
    BUDGET_EXHAUSTED = "budget_exhausted"


class LengthClass:
    EXISTS = "exists"
    IMPOSSIBLE = "impossible"
    OPEN = "open"


class OutputFormat:
    TEXT = "text"
    STRUCTURED = "structured"

    CHOICES = (TEXT, STRUCTURED)


class ExitCode:
    OK = 0
    DOMAIN = 1
    USAGE = 2
    BUDGET = 3


# Three-valued verdict used by the Ashikhmin-Barg test
INCONCLUSIVE = "inconclusive"
