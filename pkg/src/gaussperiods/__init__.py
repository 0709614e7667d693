"""Exact construction of Gaussian period polynomials for prime cyclotomic
fields, their discriminants, and the associated tables of totally real
cyclic fields of prime degree."""

from .discriminant import (DiscriminantReport, SignedPrimePower, analyze,
                           field_discriminant, field_discriminant_by_pairs,
                           index_k, poly_discriminant, real_root_count)
from .errors import (DomainError, IntegrityError, PrecisionError,
                     UnsupportedRangeError)
from .numtheory import (AuxConfig, aux_primes, factor, is_prime, mult_order,
                        primitive_root)
from .period_core import (CycNumbers, PeriodElem, PeriodSystem, mul_by_eta,
                          period_classes, period_mul, period_trace,
                          structure_constants)
from .periodpoly import (IntPoly, float_oracle_polynomial, period_polynomial,
                         period_polynomial_dense, period_polynomial_float,
                         power_sums)
from .tables import (TableRecord, diff_reference, generate_records,
                     parse_records, recheck_record, records_for_reference,
                     serialize_records, table_discriminants, table_polynomials)

__version__ = "0.1.0"
