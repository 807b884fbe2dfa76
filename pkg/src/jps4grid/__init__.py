"""Jump point search on 4-connected uniform-cost grids."""

from ._accel import backend_name
from .canonical import (
    TurningPoint,
    TurnKind,
    is_horizontal_first,
    to_horizontal_first,
    turning_points,
)
from .generators import generate_empty, generate_rooms
from .grid import (
    DIRECTIONS,
    HORIZONTAL,
    VERTICAL,
    Coord,
    Direction,
    GridError,
    GridMap,
    Path,
    direction,
    neighbors,
    opposite,
)
from .mapio import MapFormatError, format_map, load_map, parse_map, save_map
from .pruning import (
    MoveContext,
    forced_neighbors,
    identify_successors,
    jump,
    natural_neighbors,
    prune,
)
from .search import (
    SearchInputError,
    SearchMetrics,
    SearchProblem,
    SearchResult,
    astar,
    bfs_oracle,
    jps4,
    reconstruct_path,
    solve,
)

__version__ = "0.1.0"
