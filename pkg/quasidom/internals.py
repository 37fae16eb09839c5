#!/usr/bin/env python3

"""
Internal quasidom objects and methods.

The exception hierarchy, the UNDEFINED/DOMINATED sentinels, the run context
singleton and logging setup live here.  Other modules import from this one,
never the other way around.
"""

quasidom_version = "dev"

import logging
import os
from typing import Optional, Union

import jinja2
from rich.console import Console
from rich.logging import RichHandler


class QuasidomError(Exception):
    """
    Base of all errors raised by quasidom.  `exit_code` is what the CLI exits with.
    """

    exit_code = 1


class PropertyViolation(QuasidomError):
    """
    A checked property (oracle agreement, witness validity) failed.
    """

    exit_code = 1


class DecodeError(QuasidomError):
    """
    A dominating set could not be read back as a truth assignment.
    """

    exit_code = 1


class InputError(QuasidomError, ValueError):
    """
    Malformed input: a bad line in a file, an out of range vertex, a malformed key.
    """

    exit_code = 2

    def __init__(self, msg: str, lineno: Optional[int] = None) -> None:
        if lineno is not None:
            msg = f"line {lineno}: {msg}"
        super().__init__(msg)
        self.lineno = lineno


class StructureError(QuasidomError):
    """
    The graph does not have the structure an algorithm depends on.
    """

    exit_code = 3


class ResourceError(QuasidomError, RuntimeError):
    """
    A configured size cap was exceeded.
    """

    exit_code = 4


class DomainAssumptionError(QuasidomError):
    """
    The input violates an assumption of the construction (e.g. repeated variable in a clause).
    """

    exit_code = 5


class Exit(Exception):
    """
    The exception raised to end a CLI run early with a given return code.
    """

    def __init__(self, msg: str, return_code: int) -> None:
        super().__init__(msg)
        self.return_code = return_code


class _Sentinel:
    """A named singleton marker."""

    _instances = {}

    def __new__(cls, name: str):
        if name not in cls._instances:
            inst = super().__new__(cls)
            inst.name = name
            cls._instances[name] = inst
        return cls._instances[name]

    def __repr__(self) -> str:
        return self.name

    def __str__(self) -> str:
        return self.name

    def __reduce__(self):
        return (_Sentinel, (self.name,))


#  No feasible set exists under the constraint.
UNDEFINED = _Sentinel("UNDEFINED")
#  Strictly beaten by another term of the same minimum; skipped by consumers.
DOMINATED = _Sentinel("DOMINATED")

Value = Union[int, _Sentinel]


def is_finite(value: Value) -> bool:
    """True for a real cardinality, False for UNDEFINED/DOMINATED."""
    return isinstance(value, int) and not isinstance(value, bool)


def value_min(*values: Value) -> Value:
    """
    Minimum where UNDEFINED and DOMINATED are identities.

    Returns:
        The smallest finite value, or UNDEFINED if there is none.
    """
    best = UNDEFINED
    for value in values:
        if is_finite(value) and (best is UNDEFINED or value < best):
            best = value
    return best


def value_to_json(value: Value) -> Union[int, str]:
    return value if is_finite(value) else str(value)


DEFAULTS = {
    "QUASIDOM_ORACLE_CAP": "25",
    "QUASIDOM_ORACLE_CAP_CONSTRAINED": "40",
    "QUASIDOM_MEMO_CAP": "5000000",
    "QUASIDOM_MODE": "literal",
}

EvalModes = ("literal", "transcribed", "arbitrated", "sweep")


class QdContext:
    """
    A singleton object holding the console, template environment and configuration.
    """

    def __init__(self):
        self.console = Console()
        self.err_console = Console(stderr=True)
        self.jinja_env = jinja2.Environment(
            undefined=jinja2.StrictUndefined,
            keep_trailing_newline=True,
            trim_blocks=True,
            lstrip_blocks=True,
        )
        self.jinja_env.filters["jsonvalue"] = value_to_json
        self.reload()

    def reload(self, environ: Optional[dict] = None) -> None:
        """(Re-)read configuration from the environment."""
        env = os.environ if environ is None else environ

        def get_int(name: str) -> int:
            raw = env.get(name, DEFAULTS[name])
            try:
                return int(raw)
            except ValueError:
                raise InputError(f"{name} must be an integer, got {raw!r}")

        self.oracle_cap = get_int("QUASIDOM_ORACLE_CAP")
        self.oracle_cap_constrained = get_int("QUASIDOM_ORACLE_CAP_CONSTRAINED")
        self.memo_cap = get_int("QUASIDOM_MEMO_CAP")
        mode = env.get("QUASIDOM_MODE", DEFAULTS["QUASIDOM_MODE"]).lower()
        if mode not in EvalModes:
            raise InputError(f"QUASIDOM_MODE must be one of {EvalModes}, got {mode!r}")
        self.mode = mode

    def render(self, template: str, **kwargs) -> str:
        """Render a template string with the shared jinja2 environment."""
        return self.jinja_env.from_string(template).render(**kwargs)


qd_context = QdContext()


def setup_logging(level: int = logging.WARNING) -> None:
    """
    Route the `quasidom` loggers through a rich handler on stderr.

    Args:
        level: Logging level for the package logger.
    """
    logger = logging.getLogger("quasidom")
    for handler in list(logger.handlers):
        if isinstance(handler, RichHandler):
            logger.removeHandler(handler)
    handler = RichHandler(console=qd_context.err_console, show_path=False)
    handler.setFormatter(logging.Formatter("%(message)s"))
    logger.addHandler(handler)
    logger.setLevel(level)
