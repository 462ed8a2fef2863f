"""
This module contains the voluptuous schemas for the suite configuration
and the command line arguments, as well as the SuiteConfig they build.
"""

import typing as T

import fractions

import voluptuous as vol

from . import identities, stirling, util


# triangles emitted on the command line are capped at this many rows
MAX_TABLE_ROWS = 64
MAX_SEED = 2 ** 64 - 1

TABLE_FAMILIES = ("s1", "s2", "bracket", "eulerian")
EVAL_FAMILIES = ("bernoulli", "frobenius", "eulerian-poly", "carlitz")
OUTPUT_FORMATS = ("json", "csv")


class SuiteConfig:
    """The validated parameter bounds and samples of a suite run.
    Build it through SUITE_CONFIG_SCHEMA, which inserts the defaults and
    draws the samples."""

    # pylint: disable=too-many-instance-attributes

    FIELDS = (
        "alpha_max",
        "m_max",
        "n_max",
        "sample_count",
        "seed",
        "egf_order",
        "egf_points",
        "x_samples",
        "t_samples",
    )

    def __init__(self, cfg: T.Dict[str, T.Any]) -> None:
        self.alpha_max = cfg["alpha_max"]  # type: int
        self.m_max = cfg["m_max"]  # type: int
        self.n_max = cfg["n_max"]  # type: int
        self.sample_count = cfg["sample_count"]  # type: int
        self.seed = cfg["seed"]  # type: int
        self.egf_order = cfg["egf_order"]  # type: int
        self.egf_points = tuple(cfg["egf_points"])  # type: T.Tuple[fractions.Fraction, ...]
        self.x_samples = tuple(cfg["x_samples"])  # type: T.Tuple[fractions.Fraction, ...]
        self.t_samples = tuple(cfg["t_samples"])  # type: T.Tuple[fractions.Fraction, ...]

    def __repr__(self) -> str:
        return "<SuiteConfig {}>".format(
            ", ".join("{}={}".format(f, getattr(self, f)) for f in self.FIELDS)
        )

    def __eq__(self, other: T.Any) -> bool:
        if not isinstance(other, SuiteConfig):
            return NotImplemented
        return self.to_dict() == other.to_dict()

    def to_dict(self) -> T.Dict[str, T.Any]:
        """Returns the fields as a plain dict."""

        return {f: getattr(self, f) for f in self.FIELDS}


def config_post_hook(cfg: dict) -> SuiteConfig:
    """Draws the samples that weren't given and builds the SuiteConfig."""

    for key in ("x_samples", "t_samples"):
        if cfg.get(key) is None:
            rng = util.derive_rng(cfg["seed"], key)
            cfg[key] = util.sample_rationals(rng, cfg["sample_count"])
    if cfg["alpha_max"] > cfg["m_max"]:
        raise vol.Invalid(
            "alpha_max ({}) must not exceed m_max ({})".format(
                cfg["alpha_max"], cfg["m_max"]
            )
        )
    return SuiteConfig(cfg)


SUITE_CONFIG_SCHEMA = vol.Schema(
    vol.All(
        lambda v: v or {},
        vol.Schema(
            {
                vol.Optional("alpha_max", default=6): util.POSITIVE_VALIDATOR,
                vol.Optional("m_max", default=10): util.POSITIVE_VALIDATOR,
                vol.Optional("n_max", default=8): util.NAT_VALIDATOR,
                vol.Optional("sample_count", default=3): util.NAT_VALIDATOR,
                vol.Optional("seed", default=42): vol.All(
                    util.NAT_VALIDATOR, vol.Range(max=MAX_SEED)
                ),
                vol.Optional("egf_order", default=10): util.NAT_VALIDATOR,
                vol.Optional(
                    "egf_points",
                    default=lambda: [2, -1, fractions.Fraction(1, 2)],
                ): [vol.All(util.RATIONAL_VALIDATOR, vol.NotIn([1], msg="1 is a pole"))],
                vol.Optional("x_samples", default=None): vol.Any(
                    None, [util.SAMPLE_VALIDATOR]
                ),
                vol.Optional("t_samples", default=None): vol.Any(
                    None, [util.SAMPLE_VALIDATOR]
                ),
            }
        ),
        config_post_hook,
    )
)


TABLE_ARGS_SCHEMA = vol.Schema(
    {
        vol.Required("family"): vol.All(vol.In(TABLE_FAMILIES), vol.Coerce(stirling.Family)),
        vol.Required("rows"): vol.All(
            util.NAT_VALIDATOR, vol.Range(max=MAX_TABLE_ROWS)
        ),
        vol.Optional("lambda", default=None): vol.Any(None, util.RATIONAL_VALIDATOR),
        vol.Optional("format", default="json"): vol.In(OUTPUT_FORMATS),
    }
)


def eval_args_post_hook(args: dict) -> dict:
    """Checks the parameters a family needs."""

    if args["family"] == "frobenius":
        if args["u"] is None:
            raise vol.Invalid("the frobenius family needs u", path=["u"])
        if args["u"] == 1:
            raise vol.Invalid("u must differ from 1", path=["u"])
    elif args["u"] is not None:
        raise vol.Invalid(
            "u is only accepted by the frobenius family", path=["u"]
        )
    return args


EVAL_ARGS_SCHEMA = vol.Schema(
    vol.All(
        vol.Schema(
            {
                vol.Required("family"): vol.In(EVAL_FAMILIES),
                vol.Required("n"): util.NAT_VALIDATOR,
                vol.Optional("u", default=None): vol.Any(None, util.RATIONAL_VALIDATOR),
                vol.Optional("x", default=None): vol.Any(None, util.RATIONAL_VALIDATOR),
                vol.Optional("lambda", default=None): vol.Any(
                    None, util.RATIONAL_VALIDATOR
                ),
                vol.Optional("format", default="text"): vol.In(("text", "json")),
            }
        ),
        eval_args_post_hook,
    )
)


VERIFY_ARGS_SCHEMA = vol.Schema(
    {
        vol.Optional("suite", default=identities.ALL_SUITES): vol.In(
            identities.get_suite_names()
        ),
        vol.Optional("report", default=None): vol.Any(None, str),
        vol.Optional("list", default=False): bool,
        vol.Optional("config", default=dict): SUITE_CONFIG_SCHEMA,
    }
)
