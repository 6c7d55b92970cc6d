import math

import pytest

from src.common.errors import ConfigError
from src.utils import format_si, parse_quantity


@pytest.mark.parametrize(
    ("text", "expected"),
    [
        ("1e-15", 1e-15),
        ("23um", 23e-6),
        ("23 µm", 23e-6),
        ("23 мкм", 23e-6),
        ("500 ms", 0.5),
        ("1e4 T/m", 1e4),
        ("3.5 g/cm3", 3500.0),
        ("4 K", 4.0),
        ("10 mrad", 0.01),
        ("1e7 m-3", 1e7),
        ("2 MPa", 2e6),
        ("137 GPa", 1.37e11),
        ("50 mK", 0.05),
    ],
)
def test_parse_quantity_units(text, expected):
    assert math.isclose(parse_quantity(text), expected, rel_tol=1e-12)


@pytest.mark.parametrize(
    "text", ["", "abc", "12 parsecs", "1..2", "1 Ms", "4 k", "1e4 t/m"]
)
def test_parse_quantity_rejects_garbage(text):
    assert parse_quantity(text) is None


def test_unit_case_matters():
    assert parse_quantity("1 ms") == pytest.approx(1e-3)
    assert parse_quantity("1 Ms") is None
    assert parse_quantity("1 mPa") is None


def test_format_si_picks_prefix():
    assert format_si(2.3185e-5, "m") == "23.2 µm"
    assert format_si(0.0, "m") == "0 m"
    assert format_si(1.5e4, "rad/s") == "15 krad/s"


def test_config_error_prefix():
    error = ConfigError("must be > 1", line=3, key="N")
    assert str(error) == "line 3, key 'N': must be > 1"
    assert error.line == 3
    assert error.key == "N"
    assert str(ConfigError("boom")) == "boom"
