"""Free-group computation with Stallings graphs and finite quotients."""

from .equations import (Assignment, ConstLetter, Equation, VarLetter,
                        commutator_equation, evaluate, parse_equation,
                        power_equation, word_equation)
from .factors import (DirectedFamilyFactor, FreeFactorCertificate,
                      GraphMorphism, SpanningTreeBasis, directed_family_factor,
                      free_factor_certificate, is_injective, spanning_tree_basis,
                      subgroup_of)
from .graphs import (LabeledGraph, StallingsGraph, fold, graph_from_generators,
                     intersect, load_graph_file, load_words_file, membership,
                     parse_graph_text, wedge_of_cycles)
from .localglobal import (EXIT_CODES, ReductionReport, ReductionStep, SweepRow,
                          WitnessMode, WitnessReport, default_max_degree,
                          is_m_power, local_global_mpower_check,
                          reduction_pipeline, sweep_mpowers)
from .quotients import (FiniteQuotientHom, GuardExceededError, Perm,
                        QuotientSolution, apply_hom, enumerate_homs,
                        factors_through, format_perm, image_elements,
                        monotonicity_check, parse_perm, perm_identity,
                        perm_inv, perm_mul, perm_pow, product_hom,
                        solve_in_quotient)
from .words import (Alphabet, AlphabetMismatchError, MalformedWordError, Word,
                    cyclic_reduce, enumerate_cyclically_reduced,
                    enumerate_reduced, free_reduce, gen_name,
                    is_cyclically_reduced, is_proper_power, mth_root)

__all__ = [name for name in dir() if not name.startswith("_")]
__version__ = "0.1.0"
