"""Exact-arithmetic verification toolkit for conic bundle threefolds that
arise as double covers of P^1 x P^2 branched over a (2,2) divisor.

From a triple of ternary quadratic forms the library derives the discriminant
quartic, its double cover in P^4, and the genus-2 curve of the quadric
surface pencil, then certifies smoothness, the real topology of the total
space, divisor-certificate component membership, local solvability of the
genus-2 curve, and the tangent-line coverage audit.  Every decision is made
in exact arithmetic (rationals, one square root, or isolated algebraic
numbers).
"""

from .bundle import (CoverPresentation, DegenerateCurveError, FormTriple,
                     Genus2Curve, SmoothnessCertificate, cover_equations,
                     cover_smooth_witness, degenerate_fiber_form,
                     discriminant_quartic, fiber_form, pencil_form, pgl2_act,
                     prym_sextic, smooth_quartic_check)
from .certificates import (ComponentVerdict, DivisorCertificate, QuadFieldPoint,
                           apply_involution, parity_compare,
                           pushforward_line_match, span_rank_verdict,
                           verify_galois_stable, verify_on_cover)
from .localpoints import (LocalVerdict, qp_points_exist, real_points_exist,
                          weierstrass_real)
from .oval import OvalReport, diagonal_quartic_oval_report
from .quadext import QuadExt, parse_rational
from .quadform import Signature, SymQuadraticForm, gram_matrix, signature
from .realroots import (RealAlgebraic, count_roots_in_interval,
                        isolate_real_roots, isolated_roots, sign_at)
from .report import (AnalysisRequest, emit_outputs, load_request, parse_request,
                     run_full_report)
from .sigma import (ProjLine, TangencyCertificate, line_covered_certificate,
                    pencil_boundary_params, pencil_through, sigma_membership,
                    surjectivity_audit, tangency_polynomial)
from .ternary import TernaryForm
from .topology import (RealTopologyReport, SignatureProfile, classify_real_locus,
                       cover_real_points_empty, real_line_intervals,
                       real_point_intervals, signature_profile)
from .unipoly import (BinaryForm, UniPoly, discriminant, resultant,
                      squarefree_decompose)

__version__ = "0.1.0"
