from enum import Enum, auto


class CellKind(Enum):
    VERTEX = auto()
    MIDPOINT = auto()
    EDGE = auto()
    CHAMBER = auto()
    SUBDIVIDED_CHAMBER = auto()


class BoundaryClass(Enum):
    STANDARD = "standard"
    BOUNDARY_J0 = "boundary-j0"
    BOUNDARY_IJ = "boundary-ij"
    INTERIOR = "interior"


class Command(Enum):
    VERIFY = "verify"
    STAB = "stab"
    HEIGHTS = "heights"
    FLAT_EDGES = "flat-edges"
    LINK = "link"
    CYCLE = "cycle"
    PAIRING = "pairing"
    RENDER = "render"
