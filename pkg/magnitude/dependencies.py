"""
Environment checks for the magnitude tools
"""

import importlib.util

from joblib import cpu_count

import config
from .rules import RULES


def has_module(name):
    """True if `name` can be imported without importing it."""
    return importlib.util.find_spec(name) is not None


def check_dependencies():
    """
    Verify configuration values and optional packages.

    Returns:
        Tuple of (errors: list, warnings: list)
        - errors: Settings that make every computation fail
        - warnings: Settings or packages that only limit some features
    """
    errors = []
    warnings = []

    if config.GENERATOR_CAP < 1:
        errors.append(f"MAGNITUDE_GENERATOR_CAP must be at least 1, got {config.GENERATOR_CAP}")
    if config.DEFAULT_TERMS < 1:
        errors.append(f"MAGNITUDE_TERMS must be at least 1, got {config.DEFAULT_TERMS}")
    if config.DEFAULT_MAX_L < 0:
        errors.append(f"MAGNITUDE_MAX_L must be non-negative, got {config.DEFAULT_MAX_L}")
    if config.JOBS == 0:
        errors.append("MAGNITUDE_JOBS must not be 0 (use 1 for serial, -1 for all cores)")

    if config.JOBS > cpu_count():
        warnings.append(f"MAGNITUDE_JOBS={config.JOBS} is above the {cpu_count()} available cores")
    if config.DEEP_MAX_L > 6:
        warnings.append(f"MAGNITUDE_DEEP_MAX_L={config.DEEP_MAX_L}: --deep runs may take hours")

    # sympy is only used for the independent Smith form cross-check
    if not has_module('sympy'):
        warnings.append("sympy not installed (Smith form cross-check disabled)")

    return errors, warnings


def get_available_methods():
    """
    Homology methods accepted by --method.

    Returns:
        Dict of method name -> bool (available)
    """
    methods = {'naive': True}
    methods.update({f"morse:{name}": True for name in RULES})
    return methods
