"""Datum validation, weight helpers, and quiver plumbing."""

import pytest

from gkm_crystals.cartan import (
    Arrow,
    Quiver,
    add_weights,
    bilinear_form,
    dim_x,
    in_positive_cone,
    load_cartan,
    load_quiver,
    negate_weight,
    pairing,
    quiver_to_cartan,
    simple_root,
    validate_datum,
    weight_height,
    zero_weight,
)
from gkm_crystals.errors import (
    BadDiagonalError,
    IndexOutOfRangeError,
    InputError,
    LengthMismatchError,
    NegativeCoordinateError,
    NotSymmetricError,
    PositiveOffDiagonalError,
)

GOOD_MATRICES = [
    [[2]],
    [[0]],
    [[-2]],
    [[2, -1], [-1, 2]],
    [[0, -1], [-1, 2]],
    [[0, -1], [-1, 0]],
    [[-2, -1], [-1, 2]],
]


@pytest.mark.parametrize("matrix", GOOD_MATRICES)
def test_validate_accepts(matrix):
    d = validate_datum(matrix)
    assert d.index_count == len(matrix)


def test_real_imaginary_split():
    d = validate_datum([[0, -1], [-1, 2]])
    assert d.imaginary_indices == frozenset({1})
    assert d.real_indices == frozenset({2})
    assert not d.is_real(1) and d.is_real(2)


def test_validate_rejections():
    with pytest.raises(NotSymmetricError):
        validate_datum([[2, -1], [0, 2]])
    with pytest.raises(NotSymmetricError):
        validate_datum([[2, -1]])
    with pytest.raises(BadDiagonalError):
        validate_datum([[1]])
    with pytest.raises(BadDiagonalError):
        validate_datum([[4]])
    with pytest.raises(BadDiagonalError):
        validate_datum([[-1]])
    with pytest.raises(PositiveOffDiagonalError):
        validate_datum([[2, 1], [1, 2]])
    with pytest.raises(InputError):
        validate_datum([])
    with pytest.raises(InputError):
        validate_datum([[2.5]])


def test_datum_accessors():
    d = validate_datum([[2, -1], [-1, 2]])
    assert d.a(1, 2) == -1
    with pytest.raises(IndexOutOfRangeError):
        d.a(0, 1)
    with pytest.raises(IndexOutOfRangeError):
        d.check_index(3)


def test_weight_helpers():
    assert zero_weight(3) == (0, 0, 0)
    assert simple_root(2, 2) == (0, 1)
    assert add_weights((1, 2), (3, -1)) == (4, 1)
    assert negate_weight((1, -2)) == (-1, 2)
    assert weight_height((2, 3)) == 5
    assert in_positive_cone((0, 1)) and not in_positive_cone((1, -1))
    with pytest.raises(LengthMismatchError):
        add_weights((1,), (1, 2))


def test_pairing_and_form():
    d = validate_datum([[2, -1], [-1, 2]])
    # <h_i, alpha_j> = a_ij
    assert pairing(d, 1, (1, 0)) == 2
    assert pairing(d, 1, (0, 1)) == -1
    assert bilinear_form(d, (1, 0), (0, 1)) == -1
    assert bilinear_form(d, (1, 1), (1, 1)) == 2
    with pytest.raises(LengthMismatchError):
        pairing(d, 1, (1,))


def test_dim_x_values():
    a2 = validate_datum([[2, -1], [-1, 2]])
    exb = validate_datum([[0, -1], [-1, 2]])
    # one arrow pair between the vertices
    assert dim_x(a2, (1, 1)) == 2
    # one loop pair at the imaginary vertex
    assert dim_x(exb, (1, 0)) == 2
    assert dim_x(exb, (2, 1)) == 12
    assert dim_x(a2, (0, 0)) == 0
    with pytest.raises(NegativeCoordinateError):
        dim_x(a2, (-1, 0))


def test_quiver_construction():
    q = Quiver.from_omega_arrows(2, [(1, 1), (1, 2)])
    assert len(q.arrows) == 4
    assert q.partner(0) == 2 and q.partner(2) == 0
    # bar arrows reverse their partners
    assert q.arrows[3].source == 2 and q.arrows[3].target == 1
    assert not q.arrows[2].in_omega
    assert q.loop_positions() == (0, 2)
    assert q.weak_positions() == (2,)
    assert q.arrow_count(1, 2) == 1


def test_quiver_involution_rejections():
    a = Arrow(1, 2, True)
    b = Arrow(2, 1, False)
    with pytest.raises(InputError):
        Quiver(2, (a, b), (1, 0, 9))  # wrong length
    with pytest.raises(InputError):
        Quiver(2, (a, b), (0, 1))  # fixed point
    with pytest.raises(InputError):
        Quiver(2, (a, Arrow(1, 2, False)), (1, 0))  # partner does not reverse
    with pytest.raises(InputError):
        Quiver(2, (a, Arrow(2, 1, True)), (1, 0))  # paired inside one orientation
    with pytest.raises(IndexOutOfRangeError):
        Quiver.from_omega_arrows(2, [(1, 3)])
    with pytest.raises(InputError):
        Quiver.from_omega_arrows(0, [])


def test_quiver_to_cartan():
    assert quiver_to_cartan(Quiver.from_omega_arrows(2, [(1, 1), (1, 2)])).matrix == ((0, -1), (-1, 2))
    assert quiver_to_cartan(Quiver.from_omega_arrows(2, [(1, 2)])).matrix == ((2, -1), (-1, 2))
    assert quiver_to_cartan(Quiver.from_omega_arrows(1, [(1, 1)])).matrix == ((0,),)
    assert quiver_to_cartan(Quiver.from_omega_arrows(1, [(1, 1), (1, 1)])).matrix == ((-2,),)


def test_load_cartan():
    d = load_cartan('{"matrix": [[0, -1], [-1, 2]]}')
    assert d.matrix == ((0, -1), (-1, 2))
    assert load_cartan({"matrix": [[2]]}).matrix == ((2,),)
    with pytest.raises(InputError):
        load_cartan("not json")
    with pytest.raises(InputError):
        load_cartan('{"rows": [[2]]}')
    with pytest.raises(InputError):
        load_cartan("[1, 2]")


def test_load_quiver():
    q = load_quiver('{"vertices": 2, "omega_arrows": [[1, 1], [1, 2]]}')
    assert q.vertex_count == 2 and len(q.arrows) == 4
    with pytest.raises(InputError):
        load_quiver('{"vertices": 2}')
    with pytest.raises(InputError):
        load_quiver('{"vertices": "x", "omega_arrows": []}')
    with pytest.raises(InputError):
        load_quiver('{"vertices": 1, "omega_arrows": [[1]]}')
