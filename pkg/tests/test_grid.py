import io
import math

import pytest

from ucsieve.grid import (
    BUILTIN_NAMES,
    GeneratorSpec,
    GridInstance,
    InstanceFormatError,
    InvalidInstanceError,
    LoadProfile,
    UnknownInstanceError,
    builtin_instance,
    cost,
    instance_to_csv,
    load_instance,
    load_profile,
    profile_to_csv,
)


def test_cost_quadratic(uc3):
    inst, _ = uc3
    assert math.isclose(cost(inst.units[2], 170.0), 1264.5, rel_tol=1e-12)
    assert math.isclose(cost(inst.units[0], 100.0), 1520.0, rel_tol=1e-12)


def test_cost_constant_unit():
    # cost() is a total function; degenerate coefficients are fine for analysis
    gen = GeneratorSpec(index=0, p_min=10.0, p_max=100.0, a=0.0, b=0.0, c=5.0)
    assert cost(gen, 50.0) == 5.0


def test_builtin_uc3(uc3):
    inst, profile = uc3
    assert inst.n == 3
    assert inst.units[0].p_max == 600.0
    assert profile.loads == (170.0, 520.0, 1100.0, 330.0)
    assert profile.loads[2] == 1100.0


def test_builtin_uc10(uc10):
    inst, profile = uc10
    assert inst.n == 10
    assert profile.n_periods == 24
    assert profile.loads[0] == 700.0
    assert inst.units[4].p_max == 162.0
    assert inst.units[9].b == 27.79


def test_builtin_uc26(uc26):
    inst, profile = uc26
    assert inst.n == 26
    assert profile.n_periods == 24
    assert inst.units[25].b == 7.5
    assert profile.loads[7] == 2430.0


def test_builtin_capacity_covers_every_load():
    expected_capacity = {"uc3": 1200.0, "uc10": 1662.0, "uc26": 3105.0}
    for name in BUILTIN_NAMES:
        inst, profile = builtin_instance(name)
        assert inst.total_capacity == expected_capacity[name]
        assert max(profile.loads) <= inst.total_capacity


def test_unknown_builtin():
    with pytest.raises(UnknownInstanceError):
        builtin_instance("uc99")


def test_csv_round_trip(uc26):
    inst, _ = uc26
    text = instance_to_csv(inst)
    again = load_instance(io.StringIO(text), name=inst.name)
    assert again == inst


def test_profile_round_trip(uc10):
    _, profile = uc10
    assert load_profile(io.StringIO(profile_to_csv(profile))) == profile


def test_load_instance_from_path(tmp_path, uc3):
    inst, _ = uc3
    path = tmp_path / "units.csv"
    path.write_text(instance_to_csv(inst))
    assert load_instance(path, name="uc3") == inst


def test_csv_bad_header():
    with pytest.raises(InstanceFormatError, match="header"):
        load_instance(io.StringIO("unit,pmax,pmin,c,b,a\n0,1,2,3,4,5\n"))


def test_csv_bad_field_reports_location():
    text = "unit,pmin,pmax,c,b,a\n0,100,600,500,ten,0.002\n"
    with pytest.raises(InstanceFormatError, match="row 1.*'b'"):
        load_instance(io.StringIO(text))


def test_csv_pmin_above_pmax_names_unit():
    text = "unit,pmin,pmax,c,b,a\n0,100,600,500,10,0.002\n1,400,100,300,8,0.0025\n"
    with pytest.raises(InvalidInstanceError, match="unit 1"):
        load_instance(io.StringIO(text))


def test_nonpositive_quadratic_rejected_at_instance_level():
    with pytest.raises(InvalidInstanceError, match="unit 0"):
        GridInstance(
            name="bad",
            units=(GeneratorSpec(index=0, p_min=1.0, p_max=2.0, a=0.0, b=1.0, c=0.0),),
        )


def test_unit_index_must_match_position():
    units = (
        GeneratorSpec(index=0, p_min=1.0, p_max=2.0, a=0.1, b=1.0, c=0.0),
        GeneratorSpec(index=2, p_min=1.0, p_max=2.0, a=0.1, b=1.0, c=0.0),
    )
    with pytest.raises(InvalidInstanceError, match="contiguous"):
        GridInstance(name="bad", units=units)


def test_load_profile_positive():
    with pytest.raises(InvalidInstanceError, match="period 1"):
        LoadProfile(loads=(100.0, 0.0))


def test_profile_validate_against(uc3):
    inst, _ = uc3
    with pytest.raises(InvalidInstanceError, match="exceeds total capacity"):
        LoadProfile(loads=(1300.0,)).validate_against(inst)
