"""Factorization theory and irreducible divisor graphs of finite commutative rings."""

from .associates import Assoc, beta_partition, is_presimplifiable, is_strongly_associate_ring
from .atoms import Atom, atom_set, check_hierarchy, classify
from .common import INF, UnitElementError, Verdict, fmt_ext
from .factorization import (Factorization, alpha_closure, enumerate_factorizations, is_atomic_ring,
                            loop_count)
from .graphs import (DivisorGraph, build_divisor_graph, check_quotient, clique_number, degl, degree,
                     diameter, distance, factorization_subgraph, is_subgraph_of, merged_edges, phi,
                     pseudo_clique_number, reduced_graph, to_dict, to_dot)
from .harness import DEFAULT_CORPUS, SuiteConfig, TheoremReport, run_suite
from .props import (is_accp, is_bfr, is_df, is_ffr, is_hfr, is_ufr, is_wffr, property_report,
                    structure_class)
from .rings import FiniteRing, Product, PolyQuotient, TableRing, Zmod, build_ring, load_table

__version__ = "0.1.0"
