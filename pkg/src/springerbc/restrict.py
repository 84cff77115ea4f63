"""Restriction of graded characters to the rank n-1 parabolic, as formal sums.

Both theories restrict by a case analysis over the distinct parts r of the
relevant partition.  Each case emits finitely many terms: an integer
polynomial coefficient in q times a rank n-1 parameter.  Terms whose
coefficient is the zero polynomial are skipped before their target
parameter is even constructed, and like terms are collected.
"""

from .errors import InvalidParam
from .params import (
    Bipartition,
    OmegaParam,
    nabla_delta,
    param_sort_key,
    psi,
    und_v,
    x_crit,
)
from .partitions import (
    multiplicity,
    shift,
    substitute,
    sum_partitions,
    underlying_set,
)
from .qpoly import QPoly, ZERO, geometric_sum, monomial

__all__ = [
    "CharSum",
    "geometric_sum",
    "restrict_symplectic",
    "restrict_exotic",
    "restrict_symplectic_q1",
    "restrict_exotic_q1",
    "check_equivalence",
    "EquivalenceReport",
]


class CharSum:
    """Formal finite sum of orbit parameters with QPoly coefficients.

    Terms with zero coefficient are never stored; iteration order is the
    deterministic enumeration order of the parameters.
    """

    def __init__(self, terms=None):
        self.terms = {}
        if terms:
            items = terms.items() if hasattr(terms, "items") else terms
            for param, coeff in items:
                self.add(param, coeff)

    def add(self, param, coeff):
        coeff = coeff if isinstance(coeff, QPoly) else QPoly(coeff)
        total = self.terms.get(param, ZERO) + coeff
        if total:
            self.terms[param] = total
        else:
            self.terms.pop(param, None)

    def items(self):
        return sorted(self.terms.items(), key=lambda kv: param_sort_key(kv[0]))

    def map_params(self, fn):
        out = CharSum()
        for param, coeff in self.terms.items():
            out.add(fn(param), coeff)
        return out

    def at_q1(self):
        out = CharSum()
        for param, coeff in self.terms.items():
            out.add(param, QPoly((coeff(1),)))
        return out

    def evaluate(self, q):
        return {param: coeff(q) for param, coeff in self.terms.items()}

    def __eq__(self, other):
        return isinstance(other, CharSum) and self.terms == other.terms

    def __len__(self):
        return len(self.terms)

    def __bool__(self):
        return bool(self.terms)

    def __repr__(self):
        body = " + ".join(f"({coeff})*({param})" for param, coeff in self.items())
        return f"CharSum[{body}]"


def _largest_j_sp(und, chi, r):
    """Largest part value with the same chi as r whose slack is not repeated
    at any larger part.  Exists whenever r is a corner."""
    c = chi[r]
    for j in und:  # decreasing
        if chi[j] != c:
            continue
        if all(rp - chi[rp] != j - c for rp in und if rp > j):
            assert j >= r
            return j
    raise AssertionError(f"no valid j for r={r}, chi={chi}")


def restrict_symplectic(p):
    """Graded restriction for a (lam, chi) parameter of rank n >= 1."""
    n = p.rank
    if n < 1:
        raise InvalidParam("restriction needs rank >= 1")
    lam = p.lam
    und = underlying_set(lam)
    chi = p.chi_map()
    crit_pts = x_crit(p)
    crit = {r for r, _ in crit_pts}
    out = CharSum()

    def emit(coeff, lam_new, points):
        # zero-coefficient skip happens before the target is built
        if not coeff:
            return
        sub = OmegaParam.make(lam_new, psi(lam_new, points))
        assert sub.rank == n - 1
        out.add(sub, coeff)

    for r in und:
        m_ge = multiplicity(lam, r, "geq")
        m_gt = multiplicity(lam, r, "gt")
        c = chi[r]
        if r not in crit:
            pair = substitute(lam, (r, r), (r - 1, r - 1))
            if c == 0 or any(chi[rp] == c for rp in und if rp < r):
                # the two would-be targets coincide; merged coefficient
                emit(geometric_sum(m_ge, m_gt), pair, crit_pts)
            else:
                # slack is repeated at some larger part, so m(>r) >= 1
                emit(geometric_sum(m_ge - 1, m_gt - 1), pair, crit_pts)
                emit(
                    monomial(m_ge - 1) - monomial(m_gt - 1),
                    pair,
                    crit_pts | {(r - 1, c)},
                )
            continue

        j = _largest_j_sp(und, chi, r)
        m_gt_j = multiplicity(lam, j, "gt")
        ks = [k for k in und if r < k <= j]
        if 2 * c != r:
            # corner with chi below the ceiling; multiplicity is even >= 2
            pair = substitute(lam, (r, r), (r - 1, r - 1))
            star = (crit_pts | {(r - 1, c - 1)}) - {(r, c)}
            emit(monomial(m_ge - 1), pair, crit_pts | {(r - 1, c)})
            emit(geometric_sum(m_ge - 1, m_gt + 1), pair, crit_pts)
            emit(monomial(m_gt_j), pair, star)
            for k in ks:
                coeff = monomial(multiplicity(lam, k, "geq")) - monomial(
                    multiplicity(lam, k, "gt")
                )
                emit(coeff, pair, star | {(k, c)})
        elif multiplicity(lam, r) % 2 == 1:
            # corner at the ceiling, odd multiplicity (r even)
            dstar = (crit_pts | {(r - 2, (r - 2) // 2)}) - {(r, c)}
            coeff = geometric_sum(m_ge - 1, m_gt)
            if coeff:  # zero exactly when the part occurs once
                emit(coeff, substitute(lam, (r, r), (r - 1, r - 1)), crit_pts)
            drop = substitute(lam, (r,), (r - 2,))
            emit(
                monomial(m_ge - 1) - monomial(m_gt),
                drop,
                crit_pts | {(r - 2, (r - 2) // 2)},
            )
            emit(monomial(m_gt_j), drop, dstar)
            for k in ks:
                coeff = monomial(multiplicity(lam, k, "geq")) - monomial(
                    multiplicity(lam, k, "gt")
                )
                emit(coeff, drop, dstar | {(k, c)})
        else:
            # corner at the ceiling, even multiplicity (r even)
            tstar = (crit_pts | {(r - 1, (r - 2) // 2)}) - {(r, c)}
            drop = substitute(lam, (r,), (r - 2,))
            pair = substitute(lam, (r, r), (r - 1, r - 1))
            emit(monomial(m_ge - 1), drop, crit_pts | {(r - 2, (r - 2) // 2)})
            emit(geometric_sum(m_ge - 1, m_gt + 1), pair, crit_pts)
            emit(monomial(m_gt_j), pair, tstar)
            for k in ks:
                coeff = monomial(multiplicity(lam, k, "geq")) - monomial(
                    multiplicity(lam, k, "gt")
                )
                emit(coeff, pair, tstar | {(k, c)})
    return out


def restrict_symplectic_q1(p):
    """Ungraded (q = 1) restriction, computed by its own closed formula."""
    n = p.rank
    if n < 1:
        raise InvalidParam("restriction needs rank >= 1")
    lam = p.lam
    und = underlying_set(lam)
    chi = p.chi_map()
    crit_pts = x_crit(p)
    crit = {r for r, _ in crit_pts}
    out = CharSum()

    def emit(const, lam_new, points):
        if const == 0:
            return
        sub = OmegaParam.make(lam_new, psi(lam_new, points))
        out.add(sub, QPoly((const,)))

    for r in und:
        m_r = multiplicity(lam, r)
        c = chi[r]
        if r not in crit:
            pair = substitute(lam, (r, r), (r - 1, r - 1))
            emit(m_r, pair, crit_pts)
            continue
        if 2 * c != r:
            pair = substitute(lam, (r, r), (r - 1, r - 1))
            star = (crit_pts | {(r - 1, c - 1)}) - {(r, c)}
            emit(1, pair, crit_pts | {(r - 1, c)})
            emit(m_r - 2, pair, crit_pts)
            emit(1, pair, star)
        elif m_r % 2 == 1:
            dstar = (crit_pts | {(r - 2, (r - 2) // 2)}) - {(r, c)}
            if m_r > 1:
                emit(m_r - 1, substitute(lam, (r, r), (r - 1, r - 1)), crit_pts)
            emit(1, substitute(lam, (r,), (r - 2,)), dstar)
        else:
            tstar = (crit_pts | {(r - 1, (r - 2) // 2)}) - {(r, c)}
            drop = substitute(lam, (r,), (r - 2,))
            pair = substitute(lam, (r, r), (r - 1, r - 1))
            emit(1, drop, crit_pts | {(r - 2, (r - 2) // 2)})
            emit(m_r - 2, pair, crit_pts)
            emit(1, pair, tstar)
    return out


def _largest_j_exo(b, und, r):
    """Largest part with the same mu-component as r whose nu-component is not
    repeated at any larger part."""
    nab = nabla_delta(b, r)[0]
    for j in und:  # decreasing
        if nabla_delta(b, j)[0] != nab:
            continue
        dj = nabla_delta(b, j)[1]
        if all(nabla_delta(b, rp)[1] != dj for rp in und if rp > j):
            assert j >= r
            return j
    raise AssertionError(f"no valid j for r={r} in {b}")


def restrict_exotic(b):
    """Graded restriction for a bipartition of rank n >= 1."""
    n = b.rank
    if n < 1:
        raise InvalidParam("restriction needs rank >= 1")
    mu, nu = b.mu, b.nu
    lam = sum_partitions(mu, nu)
    und = underlying_set(lam)
    marked = set(und_v(b))
    out = CharSum()

    def emit(coeff, mu2, nu2):
        if not coeff:
            return
        sub = Bipartition(mu2, nu2)
        assert sub.rank == n - 1, (b, sub)
        out.add(sub, coeff)

    for r in und:
        m_ge = multiplicity(lam, r, "geq")
        m_gt = multiplicity(lam, r, "gt")
        nab, delt = nabla_delta(b, r)
        if r not in marked:
            # unmarked parts have a positive nu-component
            emit(
                geometric_sum(2 * m_ge, 2 * m_gt),
                mu,
                substitute(nu, (delt,), (delt - 1,)),
            )
            continue
        bigger = [rp for rp in und if rp > r]
        case3 = any(nabla_delta(b, rp)[1] == delt for rp in bigger)
        case4 = any(nabla_delta(b, rp)[0] == nab for rp in bigger)
        assert not (case3 and case4), (b, r)
        if delt > 0:
            # growth term; dropped when the nu-component is 0 (empty fiber)
            m_nu = multiplicity(nu, delt, "geq")
            grown = (shift(mu, "up", m_ge + 1, m_nu), shift(nu, "down", m_ge, m_nu))
            if case3:
                emit(monomial(2 * m_ge - 1) - monomial(2 * m_gt - 1), *grown)
            else:
                emit(monomial(2 * m_ge - 1), *grown)
        if case3:
            emit(
                geometric_sum(2 * m_ge - 1, 2 * m_gt - 1),
                substitute(mu, (nab,), (nab - 1,)),
                nu,
            )
            continue
        emit(
            geometric_sum(2 * m_ge - 1, 2 * m_gt + 1),
            substitute(mu, (nab,), (nab - 1,)),
            nu,
        )
        m_mu = multiplicity(mu, nab, "geq")
        if case4:
            j = _largest_j_exo(b, und, r)
            m_gt_j = multiplicity(lam, j, "gt")
            emit(
                monomial(2 * m_gt_j),
                shift(mu, "down", m_gt_j + 1, m_mu),
                shift(nu, "up", m_gt_j + 1, m_mu - 1),
            )
            for k in und:
                if not (r < k <= j):
                    continue
                m_ge_k = multiplicity(lam, k, "geq")
                m_gt_k = multiplicity(lam, k, "gt")
                emit(
                    monomial(2 * m_ge_k) - monomial(2 * m_gt_k),
                    shift(mu, "down", m_ge_k + 1, m_mu),
                    shift(nu, "up", m_ge_k + 1, m_mu - 1),
                )
        else:
            emit(
                monomial(2 * m_gt),
                shift(mu, "down", m_gt + 1, m_mu),
                shift(nu, "up", m_gt + 1, m_mu - 1),
            )
    return out


def restrict_exotic_q1(b):
    """Ungraded (q = 1) restriction, computed by its own closed formula."""
    n = b.rank
    if n < 1:
        raise InvalidParam("restriction needs rank >= 1")
    mu, nu = b.mu, b.nu
    lam = sum_partitions(mu, nu)
    und = underlying_set(lam)
    marked = set(und_v(b))
    out = CharSum()

    def emit(const, mu2, nu2):
        if const == 0:
            return
        out.add(Bipartition(mu2, nu2), QPoly((const,)))

    for r in und:
        m_r = multiplicity(lam, r)
        m_ge = multiplicity(lam, r, "geq")
        m_gt = multiplicity(lam, r, "gt")
        nab, delt = nabla_delta(b, r)
        if r not in marked:
            emit(2 * m_r, mu, substitute(nu, (delt,), (delt - 1,)))
            continue
        bigger = [rp for rp in und if rp > r]
        case3 = any(nabla_delta(b, rp)[1] == delt for rp in bigger)
        case4 = any(nabla_delta(b, rp)[0] == nab for rp in bigger)
        if case3:
            emit(2 * m_r, substitute(mu, (nab,), (nab - 1,)), nu)
            continue
        if delt > 0:
            m_nu = multiplicity(nu, delt, "geq")
            emit(1, shift(mu, "up", m_ge + 1, m_nu), shift(nu, "down", m_ge, m_nu))
        emit(2 * m_r - 2, substitute(mu, (nab,), (nab - 1,)), nu)
        m_mu = multiplicity(mu, nab, "geq")
        if case4:
            j = _largest_j_exo(b, und, r)
            m_gt_j = multiplicity(lam, j, "gt")
            emit(
                1,
                shift(mu, "down", m_gt_j + 1, m_mu),
                shift(nu, "up", m_gt_j + 1, m_mu - 1),
            )
        else:
            emit(
                1,
                shift(mu, "down", m_gt + 1, m_mu),
                shift(nu, "up", m_gt + 1, m_mu - 1),
            )
    return out


class EquivalenceReport:
    """Per-parameter outcome of transporting one restriction formula onto the
    other through the block bijection."""

    def __init__(self, n, rows):
        self.n = n
        self.rows = rows  # list of (param, ok, detail)

    @property
    def passed(self):
        return all(ok for _, ok, _ in self.rows)

    def __repr__(self):
        state = "pass" if self.passed else "FAIL"
        return f"EquivalenceReport(n={self.n}, {len(self.rows)} params, {state})"


def check_equivalence(n):
    """Transport every rank-n restriction through the bijection and compare
    term-for-term against the bipartition-side formula."""
    from .params import enumerate_omega, iota

    rows = []
    for p in enumerate_omega(n):
        transported = restrict_symplectic(p).map_params(iota)
        direct = restrict_exotic(iota(p))
        ok = transported == direct
        detail = ""
        if not ok:
            keys = sorted(
                set(transported.terms) | set(direct.terms), key=param_sort_key
            )
            for key in keys:
                lhs = transported.terms.get(key, ZERO)
                rhs = direct.terms.get(key, ZERO)
                if lhs != rhs:
                    detail = f"first differing term {key}: {lhs} vs {rhs}"
                    break
        rows.append((p, ok, detail))
    return EquivalenceReport(n, rows)
