"""(k,l)-sparse hypergraphs: pebble games, components, representations and decompositions."""

from .components import components, decide_with_components
from .decomposition import (MapDecomposition, MixedDecomposition, Report, check_lovasz_recski,
                            check_maps_after_adding, is_k_arborescence, k_map_decompose,
                            verify_map_decomposition, verify_maps_and_trees)
from .errors import CapExceeded, HypergraphError, IllegalMove, NotSparse, NotTight, ParseError
from .generators import complete_hypergraph, generate_tight, min_n1, random_hypergraph
from .hypercore import (Hypergraph, SparsityParams, degrees, parse_hypergraph, parse_oriented,
                        reach, serialize_hypergraph, span_of_edges, span_of_vertices)
from .oracle import Component
from .pebble import GameState, GameVerdict, Verdict, decide, extract, optimize
from .representation import RepresentationMap, is_critical, represent, representation_map

__version__ = "0.1.0"
