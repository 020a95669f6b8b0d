import json
import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from schur_idempotents.centraliser_algebra import AlgebraContext
from schur_idempotents.errors import CostBoundExceeded, InvalidArgument, Unsupported
from schur_idempotents.tensor_oracle import (
    b_matrix,
    compare_structure_constants,
    divided_power_transfer,
    element_matrix,
    idempotent_rank_report,
    weight_basis,
)


def test_weight_basis_examples():
    assert weight_basis(2, 1).words == ((1, 2), (2, 1))
    assert len(weight_basis(4, 2)) == 6
    assert len(weight_basis(5, 2)) == 10
    words = weight_basis(7, 3).words
    assert list(words) == sorted(words)
    assert all(w.count(2) == 3 for w in words)


def test_weight_basis_cost_bound():
    with pytest.raises(CostBoundExceeded):
        weight_basis(40, 20)
    with pytest.raises(CostBoundExceeded):
        weight_basis(10, 5, cost_bound=100)
    with pytest.raises(InvalidArgument):
        weight_basis(3, 4)


def test_transfer_examples():
    assert divided_power_transfer((1, 2), 2, 1) == [(1, 1)]
    assert divided_power_transfer((1, 1, 2, 2), 2, 2) == [(1, 1, 1, 1)]
    assert sorted(divided_power_transfer((1, 2, 2), 2, 1)) == [(1, 1, 2), (1, 2, 1)]
    assert divided_power_transfer((1, 2), 2, 2) == []
    assert divided_power_transfer((1, 2), 1, 0) == [(1, 2)]


def test_b_matrix_examples():
    assert b_matrix(0, 5, 2, 3).entries.tolist() == np.eye(10, dtype=int).tolist()
    m = b_matrix(1, 2, 1, 2)
    assert m.entries.tolist() == [[1, 1], [1, 1]]
    m7 = b_matrix(1, 2, 1, 7)
    assert (m7 @ m7).entries.tolist() == (2 * m7.entries % 7).tolist()
    assert b_matrix(3, 5, 2, 2).is_zero()


def test_b_matrix_counts_subsets():
    # to reach u from w, the cleared twos must contain the twos u lacks, plus
    # i - moved of the shared ones; the set twos are then forced

    words = weight_basis(6, 3).words
    mat = b_matrix(2, 6, 3, 1_000_003).entries
    for col, w in enumerate(words):
        for row, u in enumerate(words):
            both = sum(1 for a, b in zip(w, u) if a == b == 2)
            moved = 3 - both
            expected = math.comb(both, 2 - moved) if moved <= 2 else 0
            assert mat[row, col] == expected


@pytest.mark.parametrize("r, k, p", [(2, 1, 2), (5, 2, 2), (6, 3, 3), (9, 4, 5), (8, 0, 2)])
def test_structure_constant_examples(r, k, p):
    report = compare_structure_constants(r, k, p)
    assert report.passed
    assert report.products_checked == (k + 1) ** 2
    assert report.to_dict()["pass"] is True


@st.composite
def contexts_with_pairs(draw):
    p = draw(st.sampled_from([2, 3, 5]))
    k = draw(st.integers(0, 4))
    m = draw(st.integers(0, 4))
    c = AlgebraContext(p, m, k)
    vec = st.lists(st.integers(0, p - 1), min_size=c.dim, max_size=c.dim)
    return c.element(draw(vec)), c.element(draw(vec))


@settings(max_examples=40)
@given(contexts_with_pairs())
def test_element_matrix_is_algebra_map(pair):
    x, y = pair
    assert element_matrix(x * y) == element_matrix(x) @ element_matrix(y)
    assert element_matrix(x + y).entries.tolist() == (
        (element_matrix(x).entries + element_matrix(y).entries) % x.context.characteristic
    ).tolist()


def test_element_matrix_char0_refused():
    with pytest.raises(Unsupported):
        element_matrix(AlgebraContext(0, 1, 1).one())


def test_rank_report_examples():
    for r in (0, 2, 4, 6, 8):
        rep = idempotent_rank_report(r, r // 2)
        assert rep.passed
        assert [item["rank"] for item in rep.per_g] == [math.comb(r, r // 2)]
    rep = idempotent_rank_report(5, 2)
    assert rep.passed and len(rep.per_g) == 2
    assert rep.rank_sum == 10 and all(item["rank"] > 0 for item in rep.per_g)
    data = json.loads(rep.to_json())
    for key in ("r", "m", "p", "per_g", "rank_sum", "dim", "pass"):
        assert key in data
    assert data["p"] == 2 and data["m"] == 1


def test_rank_report_refusals():
    with pytest.raises(Unsupported):
        idempotent_rank_report(5, 2, p=3)
    with pytest.raises(CostBoundExceeded):
        idempotent_rank_report(40, 20)
