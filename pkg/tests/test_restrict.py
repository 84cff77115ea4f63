import pytest

from golden_data import (
    EXOTIC_RESTRICTION_2,
    EXOTIC_RESTRICTION_3,
    IOTA_PAIRS,
    SP2_RESTRICTION_2,
)
from springerbc.errors import InvalidParam
from springerbc.params import (
    bipartition_from_text,
    bipartition_to_text,
    enumerate_bipartitions,
    enumerate_omega,
    iota,
    iota_inv,
    omega_from_text,
    omega_to_text,
    validate_omega,
)
from springerbc.qpoly import QPoly, ZERO
from springerbc.restrict import (
    CharSum,
    check_equivalence,
    restrict_exotic,
    restrict_exotic_q1,
    restrict_symplectic,
    restrict_symplectic_q1,
)


def exotic_charsum(table):
    return CharSum(
        {bipartition_from_text(k): QPoly(v) for k, v in table.items()}
    )


def sp2_charsum(table):
    return CharSum({omega_from_text(k): QPoly(v) for k, v in table.items()})


def test_golden_exotic_tables():
    for src, table in {**EXOTIC_RESTRICTION_2, **EXOTIC_RESTRICTION_3}.items():
        got = restrict_exotic(bipartition_from_text(src))
        assert got == exotic_charsum(table), src


def test_golden_sp2_table_rank2():
    for src, table in SP2_RESTRICTION_2.items():
        got = restrict_symplectic(omega_from_text(src))
        assert got == sp2_charsum(table), src


def test_golden_sp2_table_rank3_via_bijection():
    # the rank-3 rows transported through the inverse bijection
    for src, table in EXOTIC_RESTRICTION_3.items():
        p = iota_inv(bipartition_from_text(src))
        expected = CharSum(
            {
                iota_inv(bipartition_from_text(k)): QPoly(v)
                for k, v in table.items()
            }
        )
        assert restrict_symplectic(p) == expected, src


def test_iota_pairing_table():
    for sp_text, exo_text in IOTA_PAIRS:
        assert iota(omega_from_text(sp_text)) == bipartition_from_text(exo_text)
        assert iota_inv(bipartition_from_text(exo_text)) == omega_from_text(sp_text)


def test_rank1_restrictions():
    assert restrict_symplectic(omega_from_text("2^1_1")).items() == [
        (omega_from_text(""), QPoly((1,)))
    ]
    assert restrict_symplectic(omega_from_text("1^2_0")).items() == [
        (omega_from_text(""), QPoly((1, 1)))
    ]
    assert restrict_exotic(bipartition_from_text("mu=[1] nu=[]")).items() == [
        (bipartition_from_text("mu=[] nu=[]"), QPoly((1,)))
    ]
    assert restrict_exotic(bipartition_from_text("mu=[] nu=[1]")).items() == [
        (bipartition_from_text("mu=[] nu=[]"), QPoly((1, 1)))
    ]


def test_rank0_rejected():
    with pytest.raises(InvalidParam):
        restrict_symplectic(omega_from_text(""))
    with pytest.raises(InvalidParam):
        restrict_exotic(bipartition_from_text("mu=[] nu=[]"))


def test_rank_drop_and_validity():
    for n in range(1, 6):
        for p in enumerate_omega(n):
            for sub in restrict_symplectic(p).terms:
                assert sub.rank == n - 1
                assert validate_omega(sub.lam, sub.chi_map()) == []
        for b in enumerate_bipartitions(n):
            for sub in restrict_exotic(b).terms:
                assert sub.rank == n - 1


def test_coefficients_positive_at_prime_powers():
    for n in range(1, 7):
        for p in enumerate_omega(n):
            for coeff in restrict_symplectic(p).terms.values():
                assert all(coeff(q) > 0 for q in (2, 3, 4, 5)), (p, coeff)
        for b in enumerate_bipartitions(n):
            for coeff in restrict_exotic(b).terms.values():
                assert all(coeff(q) > 0 for q in (2, 3, 4, 5)), (b, coeff)


def test_q1_matches_graded():
    for n in range(1, 7):
        for p in enumerate_omega(n):
            assert restrict_symplectic(p).at_q1() == restrict_symplectic_q1(p), p
        for b in enumerate_bipartitions(n):
            assert restrict_exotic(b).at_q1() == restrict_exotic_q1(b), b


def test_q1_examples():
    got = restrict_symplectic_q1(omega_from_text("2^2_1"))
    assert got == sp2_charsum({"2^1_1": (1,), "1^2_0": (1,)})
    got = restrict_symplectic_q1(omega_from_text("1^4_0"))
    assert got == sp2_charsum({"1^2_0": (4,)})
    got = restrict_symplectic_q1(omega_from_text("2^1_1 1^2_0"))
    assert got == sp2_charsum({"2^1_1": (2,), "1^2_0": (1,)})
    got = restrict_exotic_q1(bipartition_from_text("mu=[1] nu=[1]"))
    assert got == exotic_charsum({"mu=[1] nu=[]": (1,), "mu=[] nu=[1]": (1,)})
    got = restrict_exotic_q1(bipartition_from_text("mu=[] nu=[1,1]"))
    assert got == exotic_charsum({"mu=[] nu=[1]": (4,)})
    got = restrict_exotic_q1(bipartition_from_text("mu=[1,1] nu=[]"))
    assert got == exotic_charsum({"mu=[1] nu=[]": (2,), "mu=[] nu=[1]": (1,)})


def test_symplectic_line_count_sum():
    # total coefficient mass counts the rational points of a projective space
    for n in range(1, 5):
        for p in enumerate_omega(n):
            total = sum(restrict_symplectic(p).terms.values(), ZERO)
            d = len(p.lam)
            for q in (2, 4):
                assert total(q) == (q**d - 1) // (q - 1), (p, q)


def test_check_equivalence_small():
    for n in range(1, 5):
        report = check_equivalence(n)
        assert report.passed
        assert len(report.rows) == len(enumerate_omega(n))
        assert all(detail == "" for _, _, detail in report.rows)


def test_charsum_collects_like_terms():
    b = bipartition_from_text("mu=[1] nu=[]")
    cs = CharSum()
    cs.add(b, QPoly((1, 1)))
    cs.add(b, QPoly((0, 2)))
    assert cs.terms[b] == (1, 3)
    cs.add(b, QPoly((-1, -3)))
    assert not cs  # cancelled to zero


def test_charsum_term_order_is_enumeration_order():
    cs = restrict_exotic(bipartition_from_text("mu=[1,1] nu=[1]"))
    got = [bipartition_to_text(param) for param, _ in cs.items()]
    assert got == ["mu=[1,1] nu=[]", "mu=[1] nu=[1]", "mu=[] nu=[2]"]
