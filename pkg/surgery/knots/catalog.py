import logging
from typing import Callable, Dict, List

from surgery.errors import InconsistentCode
from .codec import parse_gauss
from .models import KnotDiagram

logger = logging.getLogger(__name__)

GAUSS_CODES = {
    'unknot': "",
    'positive_curl': "U1+,O1+",
    'negative_curl': "U1-,O1-",
    'trefoil': "U1+,O2+,U3+,O1+,U2+,O3+",
    # trefoil with two negative curls where arc a leaves its undercrossing: writhe 3 - 2 = 1.
    # The curl arcs come last in traversal, so a, b, c keep their trefoil names.
    'trefoil_framing_one': "U1-,O2+,U3+,O4+,U2+,O3+,U4+,O5-,U5-,O1-",
    'figure_eight': "O1-,U2+,O3+,U1-,O4-,U3+,O2+,U4-",
}

TREFOIL_PD = "X(1,4,2,5),X(3,6,4,1),X(5,2,6,3)"
FIGURE_EIGHT_PD = "X(4,2,5,1),X(8,6,1,5),X(6,3,7,4),X(2,7,3,8)"

BUILDERS: Dict[str, Callable[[], KnotDiagram]] = {
    name: (lambda code=code: parse_gauss(code)) for name, code in GAUSS_CODES.items()
}


def catalog_names() -> List[str]:
    return sorted(BUILDERS)


def catalog(name: str) -> KnotDiagram:
    """Named diagram from the built-in corpus"""
    key = name.strip().lower().replace('-', '_')
    if key not in BUILDERS:
        raise InconsistentCode(f"Unknown diagram '{name}'. Known: {', '.join(catalog_names())}")
    logger.debug(f"Building catalog diagram '{key}'")
    return BUILDERS[key]()
