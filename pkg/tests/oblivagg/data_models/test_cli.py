import pytest
from pydantic import ValidationError

from oblivagg.data_models.api import CliConfig, SchemeEnum


def test_cli_config_builds_session_params():
    config = CliConfig(subcommand="run", n_users=4, q=7, length=3, scheme=SchemeEnum.NO_DROPOUT)
    params = config.session_params()
    assert params.n_users == 4
    assert params.q == 7
    assert params.length == 3
    assert config.seed == 0


@pytest.mark.parametrize(
    "fields",
    [
        {"n_users": 1},
        {"q": 6},
        {"length": 0},
        {"drops": [4]},
        {"drops_after": [0]},
        {"inputs": [[1], [2]]},
    ],
)
def test_cli_config_invalid(fields):
    with pytest.raises(ValidationError):
        CliConfig(subcommand="run", **fields)


def test_cli_config_leakage_skips_session():
    config = CliConfig(subcommand="demo-leakage", n_users=1, preset="binary-f3")
    assert config.preset == "binary-f3"
