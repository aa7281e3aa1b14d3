"""Tests the run configuration.
"""
import pytest

def test_defaults():
    """Tests the default values and the expanded modes.
    """
    from eisdet.config import RunConfig
    config = RunConfig()
    assert config.to_dict() == {"order": 64, "mode": "both", "output": "json",
                                "guard": 8}
    assert config.modes == ["series", "symbolic"]
    assert RunConfig(mode="series").modes == ["series"]

def test_invalid():
    """Tests that out-of-range values raise ConfigError.
    """
    from eisdet.config import RunConfig
    from eisdet.exceptions import ConfigError
    for kwargs in [{"order": 3}, {"guard": -1}, {"mode": "fast"},
                   {"output": "xml"}, {"order": "many"}]:
        with pytest.raises(ConfigError):
            RunConfig(**kwargs)

def test_from_args(tmpdir):
    """Tests the priority of defaults, file values and flags.
    """
    from eisdet.config import RunConfig
    from eisdet.exceptions import ConfigError
    target = tmpdir.join("run.yml")
    target.write("order: 32\nguard: 4\n")

    config = RunConfig.from_args({"config": str(target), "order": None,
                                  "guard": 2})
    assert config.order == 32
    assert config.guard == 2
    assert config.mode == "both"

    assert RunConfig.from_args({}).order == 64

    target.write("- 1\n- 2\n")
    with pytest.raises(ConfigError):
        RunConfig.from_args({"config": str(target)})
    with pytest.raises(ConfigError):
        RunConfig.from_args({"config": str(tmpdir.join("missing.yml"))})
