"""Cops-and-robbers pursuit engine with structural certificates.

Core pieces: immutable graphs and generators (``graph``), hole/chordality/
z-value/Dilworth analysis (``structure``), the game referee (``engine``), the
Gyarfas-path cop strategy (``gyarfas``), an exact game oracle (``oracle``),
corpus builders and verification suites (``corpus``, ``verify``), a CLI
(``cli``) and an HTTP play service (``service``).
"""

from .engine import (GameError, GameState, GreedyCop, GreedyMaxDistanceRobber,
                     RandomWalkRobber, StationaryRobber, Transcript, Turn,
                     apply_cop_turn, apply_robber_turn, new_game, place_cops,
                     place_robber, play_match, replay)
from .graph import (Graph, GraphError, ParseError, build_graph,
                    closed_neighborhood, component_of, components_within,
                    generate, is_connected, is_induced_path, parse_graph,
                    serialize_graph, shortest_path_within)
from .gyarfas import (Confinement, ExtensionImpossible, ExtractionError,
                      GyarfasCopStrategy, GyarfasState, PursuitResult, V0Rule,
                      confinement_check, extract_long_hole, new_gyarfas, pursue)
from .oracle import (BudgetExceeded, OracleTable, cop_number, is_k_copwin,
                     optimal_evader, optimal_pursuer, solve, verify_fixpoint)
from .structure import (DilworthCertificate, HoleCertificate, dilworth_brute,
                        dilworth_number, has_hole_at_least, is_chordal,
                        is_induced_cycle, is_pt_free, longest_hole, lexbfs_order,
                        vicinal_leq, z_of_graph, z_value)

__version__ = "0.1.0"
