"""Cell decompositions of generic character varieties from braid walks."""

from .coxeter import BraidWord, Permutation, length, goes_up, min_coset_reps, positive_lift
from .walks import Walk, CellShape, cell_shape, count_walks, enumerate_walks, stay_graph_connected
from .lattice_tsv import (ReducedCell, ToricTSV, cell_tsv, check_axioms, convolve, fiber_reduction,
                          handle_tsv, rank_formula_check, stay_tsv)
from .seifert import build_surface, surface_invariants
from .strata import (CharVarSpec, EigenvalueSpec, NotGeneric, SpecError, UnsupportedSpec, cell_census,
                     dim_charvar, e_polynomial, enumerate_strata, genericity_check, parse_spec,
                     stratum_braid, weights_report)
from .lefschetz import GradedSkewModule, curious_lefschetz_check, mh_from_kernels, monodromic_filtration
from .hlv import hlv_prediction, macdonald_htilde
from .fq_oracle import count_points, conjugacy_class
from .laurent import LaurentQ, LaurentQT

__version__ = "0.1.0"
