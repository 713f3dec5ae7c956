"""Exact computer algebra for monoidal comonads, their coalgebra categories,
Hopf fusion maps, and creation of duals along the forgetful functor.

Concrete engines: finitely generated abelian groups in Smith normal form,
graded abelian groups, and chain complexes with the degree-shift comonad.
Abstract engine: finite tabulated strict monoidal categories with comonads
given by lookup tables, checked by exhaustive enumeration.
"""

from .intmat import IntMatrix, smith_decompose, solve_diophantine
from .abgroup import (AbObject, AbMorphism, direct_sum, tensor, try_dual,
                      check_triangle_identities, normalize_presentation)
from .graded import (GradedObject, GradedMorphism, ChainComplex,
                     tensor_graded, dual_graded)
from .dg import (dg_comonad, check_dg_comonad, fusion, hopf_witness,
                 create_dual_chain, check_created_dual,
                 check_creation_corollary)
from .fincat import (FiniteMonoidalCategory, ComonadData, check_monoidal,
                     check_comonad, build_em, em_as_category, check_hopf,
                     find_lan, find_lan_universal, verify_create_kan,
                     has_right_adjoint, coalgebra_right_adjoint)
from .report import Verdict, report_merge

__version__ = "0.1.0"
