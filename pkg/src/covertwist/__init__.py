"""covertwist: specializations of covers of the projective line.

Fiber censuses over finite fields with exact estimate verdicts, the
finite group theory of twisted covers, and local-global arithmetic
progressions assembled by CRT from per-prime residue plans.
"""

__version__ = "0.1.0"

from .ffield import Field, FieldElem, is_prime, make_field
from .polyfactor import (
    BiPoly,
    DegreeDivisor,
    Poly,
    degree_divisor,
    disc_y,
    equal_degree_split,
    distinct_degree,
    factor,
    is_irreducible,
    poly_gcd,
    specialize,
    squarefree_decomposition,
)
from .permgroup import (
    GroupHom,
    Perm,
    PermGroup,
    centralizer_order,
    class_size_sn,
    conjugacy_classes,
    cycle_type,
    generate,
    hom_from_images,
    is_normal,
    simultaneous_conjugacy,
    symmetric_group,
)
from .twist import (
    ChiClass,
    SpecializationDatum,
    TwistProblem,
    check_const_comp,
    check_ii2,
    count_ii2,
    cyclic_chi_a,
    cyclic_situation_c,
    enumerate_isoms,
    gamma_representatives,
    twisted_fixed_points,
)
from .tchebotarev import (
    CensusReport,
    branch_bound,
    census,
    chowla_count,
    tcheb_check,
)
from .localglobal import (
    PrimePlan,
    Progression,
    beta_plans,
    bound_m0,
    build_progression,
    find_residue,
    good_primes,
    hilbert_certificate,
    observed_types,
    verify_progression,
)
