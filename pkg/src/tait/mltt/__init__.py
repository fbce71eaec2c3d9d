from tait.mltt.enumerate import Enumerator, enumerate_dterms
from tait.mltt.kernel import (
    EMPTY,
    Ctx,
    check,
    check_type,
    context,
    convert,
    convert_ty,
    d_canonicity,
    d_normalize,
    infer,
)
