"""Discrete configuration complexes of graphs and their braid groups.

The package builds the n-particle configuration cube complex of a finite
graph, equips it with the disjointness coloring whose legal words give
canonical normal forms for the fundamental groupoid, decides structural
properties of the resulting groups (triviality, cyclicity, freeness,
hyperbolicity, relative hyperbolicity with abelian peripherals,
acylindrical hyperbolicity, free and free-times-cyclic subgroups), checks
peripheral collections for the two-particle relative-hyperbolicity
criterion, and cross-validates everything with a brute-force oracle
(presentations, integer homology, surfaces, growth).
"""

from .graphs import (Graph, GraphError, Subgraph, ekey, chordless_cycles,
                     disjoint_cycle_pairs, abrams_sufficient, subdivide_for,
                     recognize_shape, parse_graph_text, load_graph_text,
                     graph_to_text, graph_to_dot, parse_dot, load_dot)
from .families import (complete, complete_bipartite, path_graph, cycle_graph,
                       star, rose, sun, pulsar, theta, star3, star4, tripod,
                       two_triangle_wedge, triangle_bouquets_with_segment,
                       build_family, family_names)
from .complexes import (CubeComplex, build_uc, verify_npc, Hyperplane,
                        hyperplanes, crossing_graph, complex_to_dot,
                        summary_dict)
from .coloring import (ColorGraph, SpecialColoring, canonical_coloring,
                       verify_axioms, coloring_table_dict)
from .words import (LegalityError, Diagram, parse_word, word_to_text,
                    is_legal, check_legal, normal_form, cyclic_reduce,
                    split_factors, support_and_particles,
                    has_cyclic_centralizer_witness, star_word,
                    cycle_rotation_word, raag_image)
from .classify import (Verdict, default_config, is_trivial,
                       is_infinite_cyclic, is_free, is_hyperbolic,
                       contains_free2, contains_f2_x_z, is_relhyp_abelian,
                       is_acyl_hyperbolic, classification_report,
                       verify_flat_witness, PROPERTIES)
from .relhyp import (PeripheralCollection, CollectionVerdict, simple_cycles,
                     check_collection, generate_collection,
                     pair_seed_collection, triangle_pair_collection)
from .oracle import (pi1_presentation, tietze_trivialize, homology,
                     snf_invariants, group_trivial, surface_check,
                     ball_growth, rewrite_trivial, cube_counts,
                     euler_characteristic_full, word_in_presentation,
                     vankampen_trivial)

__version__ = "0.1.0"
