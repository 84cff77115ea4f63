"""Character values at the identity and at the order-2 generator s1.

Values are integer polynomials in q, computed by recursing through the
restriction formulas: both group elements lie in every parabolic of the
chain, so the value of a rank-n parameter is the coefficient-weighted sum
of the values of its rank n-1 restriction terms.  The recursion bottoms
out at rank 1, where the values are fixed base data; rank 0 carries the
trivial character.

The memo table is a plain dict shared across calls.  Reads and inserts
are atomic under the GIL and recomputation is idempotent, so concurrent
use from threads is safe.  SPRINGERBC_MEMO_CAP caps the number of cached
entries (unbounded by default); past the cap results are still correct,
just recomputed.
"""

import os

from .errors import InvalidParam
from .params import (
    Bipartition,
    OmegaParam,
    enumerate_bipartitions,
    enumerate_omega,
)
from .partitions import Partition
from .qpoly import ONE, QPoly, ZERO

GROUP_ELEMENTS = ("id", "s1")


def _base_table():
    sp_top = OmegaParam.make(Partition([2]), {2: 1})
    sp_reg = OmegaParam.make(Partition([1, 1]), {1: 0})
    ex_top = Bipartition(Partition([1]), Partition())
    ex_reg = Bipartition(Partition(), Partition([1]))
    qp1 = QPoly((1, 1))
    one_minus_q = QPoly((1, -1))
    return {
        (sp_top, "id"): ONE,
        (sp_top, "s1"): ONE,
        (sp_reg, "id"): qp1,
        (sp_reg, "s1"): one_minus_q,
        (ex_top, "id"): ONE,
        (ex_top, "s1"): ONE,
        (ex_reg, "id"): qp1,
        (ex_reg, "s1"): one_minus_q,
    }


_BASE = _base_table()
_memo = {}


def _memo_cap():
    raw = os.environ.get("SPRINGERBC_MEMO_CAP")
    return int(raw) if raw else None


def clear_cache():
    _memo.clear()


def value(param, w):
    """Character value of the given parameter at w in {"id", "s1"}."""
    from .restrict import restrict_exotic, restrict_symplectic

    if w not in GROUP_ELEMENTS:
        raise InvalidParam(f"group element must be one of {GROUP_ELEMENTS}, got {w!r}")
    n = param.rank
    if n == 0:
        return ONE
    if n == 1:
        try:
            return _BASE[(param, w)]
        except KeyError:
            raise InvalidParam(f"not a valid rank-1 parameter: {param}") from None
    key = (param, w)
    cached = _memo.get(key)
    if cached is not None:
        return cached
    if isinstance(param, OmegaParam):
        terms = restrict_symplectic(param)
    else:
        terms = restrict_exotic(param)
    total = ZERO
    for sub, coeff in terms.terms.items():
        total = total + coeff * value(sub, w)
    cap = _memo_cap()
    if cap is None or len(_memo) < cap:
        _memo[key] = total
    return total


def value_table(n, theory):
    """Rows (parameter, value at id, value at s1) for every rank-n parameter,
    in enumeration order.  ``theory`` is "sp2" or "exotic"."""
    if theory == "sp2":
        params = enumerate_omega(n)
    elif theory == "exotic":
        params = enumerate_bipartitions(n)
    else:
        raise InvalidParam(f"theory must be 'sp2' or 'exotic', got {theory!r}")
    return [(p, value(p, "id"), value(p, "s1")) for p in params]
