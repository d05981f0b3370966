"""L-groups of real C*-algebras computed from their real K-theory."""

from .abelian import (
    AbHom,
    FGAbGroup,
    GroupElement,
    check_exact,
    cokernel,
    fiber_product,
    image,
    kernel,
    mod_n,
    n_torsion,
    smith_normal_form,
)
from .komodule import (
    ComplexificationData,
    GradedKOModule,
    GradedKUModule,
    complex_numbers,
    direct_sum,
    ko,
    ksp,
    shift,
    validate,
    wood_check,
)
from .ltheory import (
    LGroups,
    ProductDatum,
    alt_l12,
    boundary_to_tate,
    free_l_groups,
    l_groups,
    l_product,
    tau_map,
)

__version__ = "0.1.0"

__all__ = [
    "AbHom",
    "ComplexificationData",
    "FGAbGroup",
    "GradedKOModule",
    "GradedKUModule",
    "GroupElement",
    "LGroups",
    "ProductDatum",
    "alt_l12",
    "boundary_to_tate",
    "check_exact",
    "cokernel",
    "complex_numbers",
    "direct_sum",
    "fiber_product",
    "free_l_groups",
    "image",
    "kernel",
    "ko",
    "ksp",
    "l_groups",
    "l_product",
    "mod_n",
    "n_torsion",
    "shift",
    "smith_normal_form",
    "tau_map",
    "validate",
    "wood_check",
]
