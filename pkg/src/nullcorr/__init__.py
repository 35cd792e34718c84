"""Exact numerical invariants of special generalized null correlation bundles.

Everything here is integer arithmetic: line-bundle cohomology on projective
space, truncated Chern polynomial algebra, Hilbert functions of graded
complete intersections, moduli-component dimensions, and the Diophantine
search that certifies moduli spaces with many irreducible components.
"""

from .combinat import (
    SplitBundle,
    chi_line,
    dim_symp,
    h0_line,
    h0_split,
    h0_tensor,
    h0_wedge2,
    h_top_line,
    hi_line,
)
from .monad import (
    CohomologyTable,
    HilbertFunction,
    MonadSpec,
    chi_monad,
    cohomology_table,
    h0_E,
    h1_E,
    hilbert_M,
    hilbert_function,
    koszul_alternating_sum,
)
from .chern import (
    ChernVector,
    chern_closed_form_p5,
    chern_invert,
    chern_line,
    chern_mul,
    chern_of_E,
    chern_split,
)
from .moduli import (
    ModuliReport,
    StabilityReport,
    dim_N_quotient,
    h1_end,
    h2_end,
    moduli_report,
    stability_flags,
)
from .dioph import (
    ComponentCertificate,
    MSearchExhausted,
    TripleClass,
    brute_force_triples,
    components_certificate,
    find_M_with_representations,
    piezas_triple,
    representations_x2_3y2,
    triple_family,
)

__version__ = "0.1.0"

__all__ = [
    "SplitBundle", "h0_line", "h_top_line", "hi_line", "chi_line",
    "h0_split", "h0_tensor", "h0_wedge2", "dim_symp",
    "MonadSpec", "HilbertFunction", "CohomologyTable",
    "hilbert_M", "hilbert_function", "koszul_alternating_sum",
    "h0_E", "h1_E", "chi_monad", "cohomology_table",
    "ChernVector", "chern_line", "chern_mul", "chern_invert",
    "chern_split", "chern_of_E", "chern_closed_form_p5",
    "StabilityReport", "ModuliReport", "stability_flags",
    "h1_end", "h2_end", "dim_N_quotient", "moduli_report",
    "TripleClass", "ComponentCertificate", "MSearchExhausted",
    "brute_force_triples", "piezas_triple", "representations_x2_3y2",
    "find_M_with_representations", "triple_family", "components_certificate",
    "__version__",
]
