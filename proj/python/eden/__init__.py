"""Garden-of-Eden theory toolbox: subshifts, block codes, entropy, principal actions."""

from ._core import (
    BlockCode,
    ClassificationReport,
    EntropyValue,
    GlueTarget,
    GluingCertificate,
    InvertibilityResult,
    LaurentPoly,
    Pattern,
    PrincipalPoint,
    Subshift,
    SummableHomoclinic,
    Verdict,
    Window,
    corpus_names,
    entropy_estimate,
    entropy_exact,
    entropy_gap_bound,
    fundamental_homoclinic,
    glue_specification,
    is_l1_invertible,
    l1_inverse,
    load_block_code,
    load_subshift,
    make_poly,
    mod1_dist,
    parse_poly,
    parse_subshift,
    pattern_allowed,
    strong_irreducibility_gap,
    weak_specification_check,
)

__all__ = [
    "BlockCode",
    "ClassificationReport",
    "EntropyValue",
    "GlueTarget",
    "GluingCertificate",
    "InvertibilityResult",
    "LaurentPoly",
    "Pattern",
    "PrincipalPoint",
    "Subshift",
    "SummableHomoclinic",
    "Verdict",
    "Window",
    "corpus_names",
    "entropy_estimate",
    "entropy_exact",
    "entropy_gap_bound",
    "fundamental_homoclinic",
    "glue_specification",
    "is_l1_invertible",
    "l1_inverse",
    "load_block_code",
    "load_subshift",
    "make_poly",
    "mod1_dist",
    "parse_poly",
    "parse_subshift",
    "pattern_allowed",
    "strong_irreducibility_gap",
    "weak_specification_check",
]

__version__ = "0.1.0"
