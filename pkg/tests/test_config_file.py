import pytest

from src.commands.config_file import (
    check_material,
    check_number,
    config_hash,
    parse_config,
    parse_config_text,
)
from src.common.errors import ConfigError
from src.designer.experiment import FLAGSHIP


def test_empty_file_is_flagship(flagship):
    assert parse_config_text("") == flagship
    assert parse_config_text("# только комментарий\n\n") == flagship


def test_explicit_flagship_has_same_hash(flagship):
    text = "\n".join(f"{key} = {value}" for key, value in FLAGSHIP.items())
    config = parse_config_text(text)
    assert config == flagship
    assert config_hash(config) == config_hash(flagship)


def test_hash_changes_with_values(flagship):
    other = parse_config_text("N = 60")
    assert config_hash(other) != config_hash(flagship)
    assert len(config_hash(flagship)) == 64


def test_units_and_comments():
    config = parse_config_text(
        "tau_s = 500 ms  # расщепление\n"
        "plate_thickness_m = 1 um\n"
        "material = Diamond\n"
        "dephasing = Independent\n"
        "saturate_n = да\n"
    )
    assert config.drive.split_time == 0.5
    assert config.geometry.plate_thickness == 1e-6
    assert config.material == "diamond"
    assert config.dephasing == "independent"
    assert config.saturate_n is True


@pytest.mark.parametrize(
    ("text", "line", "key"),
    [
        ("N = 0.5", 1, "N"),
        ("\nmass_kg = -1", 2, "mass_kg"),
        ("colour = red", 1, "colour"),
        ("N = 57\nN = 60", 2, "N"),
        ("u = 0.7", 1, "u"),
        ("material = unobtainium", 1, "material"),
        ("material = copper", 1, "material"),
        ("plate_material = diamond", 1, "plate_material"),
        ("tau_s = half a second", 1, "tau_s"),
        ("tau_s =", 1, "tau_s"),
        ("witness = II + QQ", 1, "witness"),
        ("saturate_n = maybe", 1, "saturate_n"),
    ],
)
def test_bad_values_name_line_and_key(text, line, key):
    with pytest.raises(ConfigError) as info:
        parse_config_text(text)
    assert info.value.line == line
    assert info.value.key == key
    assert f"line {line}, key '{key}'" in str(info.value)


def test_missing_separator():
    with pytest.raises(ConfigError) as info:
        parse_config_text("N 57")
    assert info.value.line == 1
    assert info.value.key is None


def test_inconsistent_geometry_is_config_error():
    with pytest.raises(ConfigError, match="does not fit") as info:
        parse_config_text("N = 2\nplate_thickness_m = 1e-6")
    assert info.value.key == "N"
    assert info.value.line == 1


def test_short_plate_names_length_key():
    with pytest.raises(ConfigError) as info:
        parse_config_text("# plate\nplate_length_m = 10 um")
    assert info.value.key == "plate_length_m"
    assert info.value.line == 2
    assert "thicknesses" in str(info.value)


def test_missing_file(tmp_path):
    with pytest.raises(ConfigError, match="not found"):
        parse_config(tmp_path / "absent.cfg")


def test_validators():
    assert check_number("multiplier", 1.0) == "must be > 1"
    assert check_number("non_negative", 0.0) is None
    assert check_material("dielectric", "diamond") is None
    assert check_material("conductor", "diamond") is not None
