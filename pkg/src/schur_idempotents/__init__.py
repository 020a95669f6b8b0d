"""Primitive idempotents of the centraliser algebras ``1_lambda S_K(2, r) 1_lambda``.

Modules:

- :mod:`.padic_arith` -- digits, Lucas binomials, the two-part Kostka predicate, carries.
- :mod:`.centraliser_algebra` -- the algebra in its canonical basis ``b(0), ..., b(lambda2)``.
- :mod:`.idempotents` -- the characteristic-two idempotents ``e_{m,g}`` and their checks.
- :mod:`.tensor_oracle` -- matrices of ``b(i)`` on tensor space, used as an independent check.
- :mod:`.cli` -- the ``schur-idem`` command.
"""

from .centraliser_algebra import AlgebraContext, AlgebraElement, mult_basis, multiply
from .errors import CostBoundExceeded, InvalidArgument, OutOfDegree, SchurError, Unsupported, ZeroElement
from .idempotents import admissible_g, build_idempotent, verify_complete_set
from .padic_arith import kostka_entry, lucas_binomial, p_adic

__version__ = "0.1.0"
