"""Counting Dirichlet characters of bounded order, with censuses and
high-precision Euler-product constants."""

from .arith import (Factorization, LocalFunction, eval_multiplicative,
                    factorize, kronecker, mobius, spf_sieve, totient)
from .census import (CensusRecord, FitResult, census_sums, f_indicator,
                     fit_growth, representation_count)
from .charcount import (a_value, b_value, b_via_inversion,
                        count_order_dividing, unit_group_structure)
from .eulerprod import (EulerProductSpec, LocalFactor, ResidueClassSet,
                        coefficient, euler_product, kappa, landau_ramanujan,
                        log_local_expansion, verify_residue_formulas)
from .lfun import (CharacterTable, PrecisionContext, RootOfUnity,
                   characters_mod, hurwitz_zeta, l_one, l_value,
                   prime_class_sum, zeta_value)
from .series import (SeriesTruncation, lambda_truncated,
                     nonmultiplicativity_report, truncated_series,
                     verify_inversion_identity, verify_lambda_identity)

__all__ = [name for name in dir() if not name.startswith("_")]
__version__ = "0.1.0"
