"""Monomial ideals, their linear quotients, and the simplicial complexes
attached to them."""

from .core import (ZERO, IrreducibleIdeal, Monomial, MonomialIdeal, SignedMonomial,
                   alexander_dual_ideal, colon_ideal, colon_principal, degree_component,
                   gminus, ideal_wedge, intersect, lex_compare, minimalize, shakin_compare,
                   squarefree_part, std_form, support, support_component, suppdeg, wedge)
from .reports import CapExceeded, PropertyReport, Verdict
from .quotients import (GeneratorOrder, componentwise_lq, find_admissible_order,
                        has_linear_quotients, is_admissible_order, is_popescu_order,
                        pack_compatibility, wedge_order_construction)
from .classes import (SheddingTree, is_I_stable, is_sequentially_pure,
                      is_variable_decomposable, is_weakly_polymatroidal, stable_m_closure,
                      stable_prefix_family, vd_admissible_order, wp_profile,
                      wp_shedding_decomposition)
from .complexes import (SimplicialComplex, co_stable_check, deletion, dual_ideal,
                        eagon_complex, facet_skeleton, homology_rank, is_shellable,
                        is_vertex_decomposable, is_weakly_co_polymatroidal, link, skeleton,
                        sr_complex, stanley_reisner)
from .betti import (BettiTable, betti_table, is_componentwise_support_linear,
                    is_support_linear, koszul_complex, reg, suppreg,
                    suppreg_truncation_profile, taylor_betti_table)
from .io import format_complex, format_ideal, parse_complex, parse_ideal

__version__ = "0.1.0"
