"""Finite-instance laboratory: PERs, enumerations, random generation, the
rewrite-closure conversion oracle and the law suites."""

from .enumerate import (Bounds, enum_ctxts, enum_rnms, enum_substs, enum_terms,
                        enum_types)
from .gen import GenConfig, gen_corpus, gen_sample, gen_term, random_rewrite
from .laws import (SUITES, laws_actions, laws_cartesian, laws_ccc, laws_qu_naturality,
                   laws_rnm_category, laws_subst_category, run_all)
from .oracle import conv_oracle, is_long_normal
from .per import (PerRel, check_per, per_arrow, per_discrete, per_from_blocks, per_prod,
                  per_sub, per_unit)
from .report import LawReport

__all__ = [
    "Bounds", "enum_ctxts", "enum_rnms", "enum_substs", "enum_terms", "enum_types",
    "GenConfig", "gen_corpus", "gen_sample", "gen_term", "random_rewrite",
    "SUITES", "laws_actions", "laws_cartesian", "laws_ccc", "laws_qu_naturality",
    "laws_rnm_category", "laws_subst_category", "run_all",
    "conv_oracle", "is_long_normal",
    "PerRel", "check_per", "per_arrow", "per_discrete", "per_from_blocks", "per_prod",
    "per_sub", "per_unit", "LawReport",
]
