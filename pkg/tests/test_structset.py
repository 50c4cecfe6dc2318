from math import gcd

import pytest

from spherestruct import (
    DInvariant,
    KnownGroup,
    del_map,
    eta_fiber_size,
    forgetful_fiber,
    group_structure_possible,
    parse_table,
    present,
    residual_group,
    stabilizer,
    subgroup_generated,
    t,
    top_structure_set,
)
from spherestruct.structset import ACTION_FREE, ACTION_STABILIZER, normalize_dims


def test_normalize_dims():
    assert normalize_dims(3, 4) == (3, 4, False)
    assert normalize_dims(4, 3) == (3, 4, True)
    assert normalize_dims(2, 3) == (3, 2, True)
    assert normalize_dims(4, 4) == (4, 4, False)
    assert normalize_dims(3, 5) == (3, 5, False)
    with pytest.raises(ValueError):
        normalize_dims(1, 10)
    with pytest.raises(ValueError):
        normalize_dims(2, 2)


def test_present_s3_s4():
    pres = present(3, 4)
    assert (pres.p, pres.q) == (3, 4)
    assert pres.theta_group == KnownGroup.finite(28)
    assert pres.bp_next == KnownGroup.finite(28)
    assert pres.residual.order == 1
    assert pres.action_case == ACTION_STABILIZER
    assert pres.stabilizer_coefficient == 32
    assert pres.stabilizer_rule(1) == subgroup_generated(28, 32)
    assert pres.stabilizer_rule(DInvariant(7)).order == 1
    assert pres.normal_invariants[0] == KnownGroup.trivial()
    assert pres.normal_invariants[1] == KnownGroup.z_times_finite(1)


def test_present_s4_s4():
    pres = present(4, 4)
    assert pres.theta_group == KnownGroup.finite(2)
    assert pres.bp_next == KnownGroup.trivial()
    assert pres.residual.order == 7
    assert pres.action_case == ACTION_FREE
    assert pres.stabilizer_coefficient is None
    payload = pres.as_dict()
    assert payload["residual_order"] == 7
    assert payload["fiber_group_order"] == 2
    assert payload["residual_generator_coefficient"] == 32


def test_present_low_dimensional_free_case():
    pres = present(2, 3)
    assert (pres.p, pres.q) == (3, 2)
    assert (pres.input_p, pres.input_q) == (2, 3)
    assert pres.action_case == ACTION_FREE
    assert pres.residual.order == 1
    assert pres.theta_group == KnownGroup.finite(1)
    assert pres.bp_next == KnownGroup.trivial()  # forced table entry


def test_present_unknown_dimensions_render_symbolically():
    pres = present(17, 5)
    assert pres.theta_group.is_unknown
    assert "Theta_22(order unknown)" in pres.sequence_text()
    assert pres.as_dict()["fiber_group_order"] == "unknown"


def test_del_map_values():
    assert del_map(4, 4, 1, 1).value == 4
    assert del_map(4, 4, 1, 1).group.order == 28
    assert del_map(4, 4, 1, 7).is_zero
    assert del_map(4, 4, -1, 1).value == 24
    assert del_map(3, 4, 5, 9).is_zero
    assert del_map(3, 4, 5, 9).group.order == 1
    assert del_map(2, 6, 1, 1).is_zero  # p + q = 0 mod 4 but t_2 = 0
    assert del_map(2, 6, 1, 1).group.order == 28


def test_del_map_vanishing_iff_7_divides_uv():
    for u in range(-50, 51):
        for v in range(-50, 51):
            assert del_map(4, 4, u, v).is_zero == ((u * v) % 7 == 0), (u, v)


def test_stabilizer_shapes():
    assert stabilizer(3, 4, 1) == subgroup_generated(28, 32)
    assert stabilizer(3, 4, 1).order == 7
    assert stabilizer(3, 4, 7).order == 1
    assert stabilizer(3, 4, 0).order == 1
    assert stabilizer(3, 4, -1).order == 7
    assert stabilizer(4, 3, 1).order == 7  # normalised to (3, 4)
    assert stabilizer(7, 8, 1).ambient.order == t(16)
    assert stabilizer(7, 8, 1).order == 127


def test_stabilizer_free_shapes_are_trivial():
    assert stabilizer(4, 4, 5).order == 1
    assert stabilizer(2, 3, 9).order == 1
    assert stabilizer(5, 4, 2).order == 1
    assert stabilizer(2, 5, 1).ambient.order == 28  # bP_8 ambient, trivial subgroup
    assert stabilizer(2, 5, 1).order == 1


def test_stabilizer_orders_divide_ambient():
    for j in range(1, 4):
        for k in range(1, 4):
            p, q = 4 * j - 1, 4 * k
            ambient = t(4 * (j + k))
            for d in range(-6, 7):
                sub = stabilizer(p, q, d)
                assert sub.ambient.order == ambient
                assert ambient % sub.order == 0
                # <8 d t t> always sits inside <8 t t>
                coefficient = 8 * t(p + 1) * t(q)
                assert (coefficient * d) % sub.generator_value == 0


def test_eta_fiber_sizes_s3_s4():
    assert eta_fiber_size(3, 4, 1) == KnownGroup.finite(4)
    assert eta_fiber_size(3, 4, 7) == KnownGroup.finite(28)
    for d in range(-100, 101):
        expected = 4 if gcd(d, 7) == 1 else 28
        assert eta_fiber_size(3, 4, d) == KnownGroup.finite(expected), d


def test_eta_fiber_sizes_s4_s4():
    for d in range(-100, 101):
        assert eta_fiber_size(4, 4, d) == KnownGroup.finite(2), d


def test_eta_fiber_unknown_theta():
    assert eta_fiber_size(17, 5, 0).is_unknown
    # an override can make it known
    table = parse_table('{"theta": {"22": "4"}}')
    assert eta_fiber_size(17, 5, 0, table) == KnownGroup.finite(4)


def test_eta_fiber_rejects_inconsistent_table():
    table = parse_table('{"theta": {"7": "5"}}')
    with pytest.raises(ValueError, match="does not divide"):
        eta_fiber_size(3, 4, 1, table)


def test_top_structure_set():
    top = top_structure_set(3, 4)
    assert (top.p_factor.symbol, top.q_factor.symbol) == ("0", "Z")
    assert top.is_group
    assert not top.is_singleton
    assert top_structure_set(4, 4).p_factor.symbol == "Z"
    assert top_structure_set(3, 3).is_singleton
    assert top_structure_set(2, 6).p_factor.symbol == "Z/2"


def test_group_structure_verdicts():
    verdict = group_structure_possible(3, 4)
    assert not verdict
    assert verdict.reason == "non-constant stabilizers"
    verdict = group_structure_possible(4, 4)
    assert not verdict.possible
    assert verdict.reason == "image not a subgroup"
    assert group_structure_possible(2, 5).possible
    assert group_structure_possible(2, 5).reason is None
    assert group_structure_possible(3, 5).possible
    assert not group_structure_possible(4, 3).possible  # normalised (3, 4)


def test_group_structure_cross_check_against_component_tests():
    # Reconstruct the two obstructions from del_map and stabilizer outputs
    # and compare with the verdict, p + q <= 16.
    for p in range(2, 15):
        for q in range(2, 15):
            if p + q < 5 or p + q > 16:
                continue
            image_is_subgroup = residual_group(p, q).order == 1
            stabilizers = {stabilizer(p, q, d) for d in range(0, 30)}
            constant = len(stabilizers) == 1
            expected = image_is_subgroup and constant
            assert group_structure_possible(p, q).possible == expected, (p, q)


def test_forgetful_fiber():
    assert forgetful_fiber(3, 4, 2) == KnownGroup.finite(4)
    assert forgetful_fiber(3, 4, 14) == KnownGroup.finite(28)
    assert forgetful_fiber(3, 4, 0) == KnownGroup.finite(28)
    assert forgetful_fiber(4, 3, 2) == KnownGroup.finite(4)
    with pytest.raises(ValueError, match="odd"):
        forgetful_fiber(3, 4, 3)
    with pytest.raises(ValueError, match="S\\^3 x S\\^4"):
        forgetful_fiber(4, 4, 2)


def test_forgetful_fiber_split_matches_divisibility():
    for y in range(-60, 61):
        expected = 28 if y % 7 == 0 else 4
        assert forgetful_fiber(3, 4, 2 * y) == KnownGroup.finite(expected), y


def test_exactness_bookkeeping_over_boxes():
    # Image values of del_map generate exactly the residual subgroup, and
    # the kernel over a box is cut out by divisibility by the residual
    # order.
    for p, q in [(4, 4), (4, 8), (8, 8)]:
        ambient = t(p + q)
        coefficient = 8 * t(p) * t(q)
        residual_order = residual_group(p, q).order
        index = ambient // residual_order
        image = set()
        for u in range(-20, 21):
            for v in range(-20, 21):
                value = del_map(p, q, u, v)
                assert value.value % index == 0  # lands in the subgroup
                image.add(value.value)
                assert value.is_zero == ((u * v) % residual_order == 0)
        assert image <= set(range(0, ambient, index))
        assert coefficient % ambient in image  # u = v = 1, so the image generates
        assert subgroup_generated(ambient, coefficient).order == residual_order


def test_present_validates_range():
    with pytest.raises(ValueError):
        present(1, 6)
    with pytest.raises(ValueError):
        del_map(2, 2, 1, 1)
