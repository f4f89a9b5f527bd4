"""Exact-arithmetic module theory over the double of a rank-one pointed
Hopf algebra attached to a finite abelian group datum."""

from .cyclo import CycScalar
from .datum import (
    NILPOTENT,
    NON_NILPOTENT,
    DatumError,
    FinAbGroup,
    GroupChar,
    ValidatedDatum,
    Weight,
    datum_from_json,
    validate_datum,
)
from .repmod import ModuleRep, direct_sum, quotient_module, spin_submodule
from .constructors import (
    EtaParam,
    band,
    build_family,
    projective,
    simple,
    t_chain,
    t_chain_bar,
    verma,
    w_band,
)
from .homology import (
    IsoVerdict,
    LoewyType,
    Morphism,
    SesReport,
    ar_candidate_check,
    ar_sequences_for_lemma,
    composition_factors,
    end_local_dim,
    end_local_dim_of_sum,
    head,
    hom_space,
    injective_hull_map,
    is_isomorphic,
    loewy_type,
    match_family,
    omega,
    omega_power,
    projective_cover_map,
    radical,
    ses_candidate,
    ses_check,
    socle,
    syzygy,
    cosyzygy,
    zero_module,
)

__version__ = "0.1.0"

__all__ = [
    "CycScalar",
    "NILPOTENT",
    "NON_NILPOTENT",
    "DatumError",
    "FinAbGroup",
    "GroupChar",
    "ValidatedDatum",
    "Weight",
    "datum_from_json",
    "validate_datum",
    "ModuleRep",
    "direct_sum",
    "quotient_module",
    "spin_submodule",
    "EtaParam",
    "band",
    "build_family",
    "projective",
    "simple",
    "t_chain",
    "t_chain_bar",
    "verma",
    "w_band",
    "IsoVerdict",
    "LoewyType",
    "Morphism",
    "SesReport",
    "ar_candidate_check",
    "ar_sequences_for_lemma",
    "composition_factors",
    "end_local_dim",
    "end_local_dim_of_sum",
    "head",
    "hom_space",
    "injective_hull_map",
    "is_isomorphic",
    "loewy_type",
    "match_family",
    "omega",
    "omega_power",
    "projective_cover_map",
    "radical",
    "ses_candidate",
    "ses_check",
    "socle",
    "syzygy",
    "cosyzygy",
    "zero_module",
    "__version__",
]
