import json
from pathlib import Path

# Load named class specifications from JSON file
catalog_path = Path(__file__).parent / "catalog.json"
with open(catalog_path, "r", encoding="utf-8") as f:
    catalog_data = json.load(f)


class Builtin:
    """Builtin constraint names for binary symbols"""

    IRREFLEXIVE = "irreflexive"
    REFLEXIVE = "reflexive"
    SYMMETRIC = "symmetric"
    CONNECTED = "connected"
    TRANSITIVE = "transitive"

    ALL = (IRREFLEXIVE, REFLEXIVE, SYMMETRIC, CONNECTED, TRANSITIVE)

    # Builtins that shape the interpretation space rather than filter it
    STRUCTURAL = (IRREFLEXIVE, REFLEXIVE, SYMMETRIC)

    DUAL = {
        IRREFLEXIVE: REFLEXIVE,
        REFLEXIVE: IRREFLEXIVE,
        SYMMETRIC: SYMMETRIC,
    }


class Direction:
    """Search directions"""

    UP = "up"
    DOWN = "down"

    MAX = "max"
    MIN = "min"

    UNION = "union"
    INTERSECTION = "intersection"


class SearchMode:
    """Maximality/minimality check modes"""

    LOCAL = "local"
    EXACT = "exact"


class Guarantee:
    """What an ExtremeReport actually certifies"""

    CLOSURE = "closure"  # local check, sound by monotonicity
    EXACT = "exact"  # exhaustive search found nothing
    LOCAL = "local"  # only single moves were ruled out
    INCONCLUSIVE = "inconclusive"  # budget ran out
    REFUTED = "refuted"  # a strictly larger / smaller member was found


class CensusWhat:
    """Census selectors"""

    ALL = "all"
    MAX = "max"
    MIN = "min"


class ExitCode:
    """Process exit codes"""

    OK = 0
    FALSE = 1
    USAGE = 2
    BUDGET = 3


class CatalogConstants:
    # Named class specifications, raw JSON dictionaries
    CLASSES = catalog_data["classes"]
