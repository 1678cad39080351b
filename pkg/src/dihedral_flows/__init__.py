"""Nowhere-identity dihedral flows on graphs embedded in orientable surfaces."""

from .algebra import (DihedralElement, GroupContext, Kind, commutator_subgroup_order,
                      in_commutator_subgroup, inverse, multiply, parse_context, parse_element,
                      project)
from .coloring import (EdgeColoring, almost_hamiltonian_flow, avc_flow, coloring_to_flow,
                       find_3_edge_coloring, flow_to_coloring, flow_to_special4,
                       four_flow_from_coloring, is_proper, special4_check, special4_to_flow,
                       structure_sets)
from .corpus import CorpusEntry, corpus
from .embedded import (CycleRef, EmbeddedGraph, Multigraph, bridges, contract_edge,
                       cut_along_cycle, delete_edge, enumerate_rotation_systems,
                       from_coordinates, from_edge_rotations, insert_edge, is_contractible,
                       make_cycle, trace_faces, y_delta)
from .errors import *  # noqa: F401,F403
from .existence import (ExistenceVerdict, devos_verdict, find_odd_bridge_set, obstrd6_check,
                        plane_sided_bridges)
from .flows import (FlowAssignment, count_flows, cutset_product, find_flow, iter_flows, lift,
                    reflection_cycles, verify)
from .formats import (emit_coloring, emit_flow, emit_graph, parse_adjacency, parse_coloring,
                      parse_flow, parse_graph)
from .transforms import (extend_over_triangle, multiply_cycle, reduce_to_rotation_flow,
                         removal_construction, removal_flow, shift_reflection_cycle)

__version__ = "0.1.0"
