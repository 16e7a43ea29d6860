from fractions import Fraction

import pytest
from pydantic import ValidationError

from eulerZeta.config import Settings, load_settings
from eulerZeta.exceptions import InvalidInputError


def test_packaged_defaults():
    settings = load_settings()
    assert settings.max_len == 12
    assert settings.truncate == 20
    assert settings.oracle_q == 2
    assert settings.points == [Fraction(1, 2), Fraction(1, 3), Fraction(2)]


def test_user_overrides(write):
    settings = load_settings(write("config.yml", "max_len: 6\ncheck_points: [3, 1/4]\n"))
    assert settings.max_len == 6
    assert settings.truncate == 20
    assert settings.points == [Fraction(3), Fraction(1, 4)]


@pytest.mark.parametrize(
    "text",
    [
        "max_len: -1\n",
        "oracle_q: 1\n",
        "truncate: 0\n",
        "unknown_key: 3\n",
        "check_points: [abc]\n",
        "check_points: [1/0]\n",
        "- just\n- a list\n",
        "max_len: [unclosed\n",
    ],
)
def test_invalid_overrides(write, text):
    with pytest.raises(InvalidInputError):
        load_settings(write("config.yml", text))


def test_missing_override_file(tmp_path):
    with pytest.raises(InvalidInputError):
        load_settings(tmp_path / "absent.yml")


def test_settings_are_frozen():
    settings = Settings()
    with pytest.raises(ValidationError):
        settings.max_len = 3
