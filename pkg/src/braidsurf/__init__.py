"""Braided surfaces in the 4-ball from band factorizations: invariants,
complement fundamental groups, finite-quotient fingerprints, and double
branched covers."""

from .braid import (BraidWord, FreeWord, Permutation, artin_apply, braid_equal,
                    cycle_count, free_reduce, letter_apply, perm_image, word_concat,
                    word_inverse)
from .factorization import (Band, Factorization, FactorizationError, SurfaceInvariants,
                            band_transposition, band_word, invariants, parse_factorization,
                            product_word, serialize_factorization)
from .presentation import (Presentation, band_relator, complement_presentation,
                           conjugate_in_free, cyclic_reduce, relation_sides, tietze_simplify)
from .abelian import AbelianInvariants, IntegerMatrix, abelianize, smith_normal_form
from .finite import (FiniteGroup, count_homs, cyclic, default_panel, dihedral,
                     evaluate_word, exists_surjection, fingerprint, fingerprints_equal,
                     parse_panel, symmetric)
from .cover import (CoverPresentation, Inconclusive, Order, coset_enumerate,
                    cover_presentation, degree_zero_check, rs_rewrite)
from .fixtures import load_fixture, variant

__version__ = "0.1.0"
