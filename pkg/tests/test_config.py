import fractions

import pytest
import voluptuous as vol

from degenerate_sums import config
from degenerate_sums.stirling import Family


Fraction = fractions.Fraction


def test_suite_config_defaults():
    cfg = config.SUITE_CONFIG_SCHEMA({})
    assert isinstance(cfg, config.SuiteConfig)
    assert (cfg.alpha_max, cfg.m_max, cfg.n_max) == (6, 10, 8)
    assert (cfg.sample_count, cfg.seed, cfg.egf_order) == (3, 42, 10)
    assert cfg.egf_points == (2, -1, Fraction(1, 2))
    assert len(cfg.x_samples) == 3
    assert len(cfg.t_samples) == 3
    assert config.SUITE_CONFIG_SCHEMA(None) == cfg


def test_samples_are_seeded():
    first = config.SUITE_CONFIG_SCHEMA({"seed": 7, "sample_count": 5})
    second = config.SUITE_CONFIG_SCHEMA({"seed": 7, "sample_count": 5})
    other = config.SUITE_CONFIG_SCHEMA({"seed": 8, "sample_count": 5})
    assert first == second
    assert first.x_samples != other.x_samples
    for value in first.x_samples + first.t_samples:
        assert value not in (0, 1)
    assert len(set(first.x_samples)) == 5


def test_explicit_samples():
    cfg = config.SUITE_CONFIG_SCHEMA({"x_samples": ["1/2", -3], "t_samples": []})
    assert cfg.x_samples == (Fraction(1, 2), -3)
    assert cfg.t_samples == ()


@pytest.mark.parametrize(
    "raw",
    [
        {"x_samples": [0]},
        {"t_samples": ["1"]},
        {"egf_points": [1]},
        {"alpha_max": 0},
        {"alpha_max": 11},
        {"seed": -1},
        {"seed": True},
        {"n_max": "3"},
        {"unknown": 1},
    ],
)
def test_suite_config_rejects(raw):
    with pytest.raises(vol.Invalid):
        config.SUITE_CONFIG_SCHEMA(raw)


def test_table_args():
    opts = config.TABLE_ARGS_SCHEMA({"family": "s2", "rows": 2})
    assert opts == {
        "family": Family.S2_LAMBDA,
        "rows": 2,
        "lambda": None,
        "format": "json",
    }
    opts = config.TABLE_ARGS_SCHEMA(
        {"family": "eulerian", "rows": 64, "lambda": "1/2", "format": "csv"}
    )
    assert opts["lambda"] == Fraction(1, 2)


@pytest.mark.parametrize(
    "raw",
    [
        {"family": "s3", "rows": 2},
        {"family": "s2", "rows": 65},
        {"family": "s2", "rows": -1},
        {"family": "s2", "rows": 2, "format": "xml"},
        {"family": "s2", "rows": 2, "lambda": "x"},
    ],
)
def test_table_args_reject(raw):
    with pytest.raises(vol.Invalid):
        config.TABLE_ARGS_SCHEMA(raw)


def test_eval_args():
    opts = config.EVAL_ARGS_SCHEMA({"family": "frobenius", "n": 2, "u": "2"})
    assert opts["u"] == 2
    assert opts["format"] == "text"
    assert config.EVAL_ARGS_SCHEMA({"family": "carlitz", "n": 0})["u"] is None


@pytest.mark.parametrize(
    "raw",
    [
        {"family": "frobenius", "n": 2},
        {"family": "frobenius", "n": 2, "u": 1},
        {"family": "bernoulli", "n": 2, "u": 2},
        {"family": "bernoulli", "n": -2},
        {"family": "euler", "n": 2},
    ],
)
def test_eval_args_reject(raw):
    with pytest.raises(vol.Invalid):
        config.EVAL_ARGS_SCHEMA(raw)


def test_verify_args():
    opts = config.VERIFY_ARGS_SCHEMA({})
    assert opts["suite"] == "all"
    assert opts["list"] is False
    assert opts["config"] == config.SUITE_CONFIG_SCHEMA({})
    with pytest.raises(vol.Invalid):
        config.VERIFY_ARGS_SCHEMA({"suite": "thm6"})
