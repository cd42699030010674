"""Schur calculus and characteristic-0 cohomology on Grassmannians, with
checks of a tilting bundle built from tensor products of exterior powers of
the tautological quotient bundle."""

__version__ = "0.1.0"

from .bott import (  # noqa: E402
    CohomologyTable,
    GLWeight,
    GrassContext,
    InvalidBundle,
    TwistedSchurBundle,
    bott,
    bundle_cohomology,
    bundle_weight,
    projective_line_bundle_oracle,
)
from .partitions import (  # noqa: E402
    Partition,
    PartitionBox,
    conjugate,
    dominance_compare,
    enumerate_box,
    lex_compare,
)
from .schur import (  # noqa: E402
    VirtualSchurSum,
    exterior_product_character,
    lr_coefficient_oracle,
    lr_expand,
    pieri_column,
    schur_dim,
)
from .verifier import (  # noqa: E402
    VerificationReport,
    dual_summand_decompose,
    enumerate_summands,
    example_grass24_analysis,
    kapranov_decomposition,
    report_all,
    summand_rank,
    sweep_prop3,
    verify_generation_order,
    verify_kapranov,
    verify_prop3,
    verify_tilting_ext,
)
