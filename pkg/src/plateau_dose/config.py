"""Reading and writing the human-readable trial configuration document.

The document is YAML (JSON is accepted too, being a YAML subset) with up
to four sections: ``grid``, ``prior``, ``quadrature``, and ``design``.
Only ``grid`` is mandatory; the prior is derived from the grid when
omitted, and node counts fall back to their defaults.
"""

from __future__ import annotations

import io
from typing import Any

import yaml

from .design import DesignConfig
from .errors import ConfigurationError
from .inference import Method, QuadratureConfig
from .models import DoseGrid, PriorSpec, default_prior

__all__ = [
    "grid_from_dict",
    "grid_to_dict",
    "prior_from_dict",
    "prior_to_dict",
    "quad_from_dict",
    "quad_to_dict",
    "design_from_dict",
    "design_to_dict",
    "load_config",
    "dump_config",
]


def _require(mapping: dict, key: str, section: str) -> Any:
    if key not in mapping:
        raise ConfigurationError(f"missing field '{key}' in {section} section")
    return mapping[key]


def grid_from_dict(d: dict) -> DoseGrid:
    return DoseGrid(
        levels=tuple(_require(d, "levels", "grid")),
        ref_level=int(_require(d, "ref_level", "grid")),
        target=float(_require(d, "target", "grid")),
        initial_guesses=tuple(_require(d, "initial_guesses", "grid")),
    )


def grid_to_dict(grid: DoseGrid) -> dict:
    return {
        "levels": list(grid.levels),
        "ref_level": grid.ref_level,
        "target": grid.target,
        "initial_guesses": list(grid.initial_guesses),
    }


def prior_from_dict(d: dict) -> PriorSpec:
    return PriorSpec(
        gamma0_mean=float(_require(d, "gamma0_mean", "prior")),
        gamma0_sd=float(_require(d, "gamma0_sd", "prior")),
        gamma1_shape=float(_require(d, "gamma1_shape", "prior")),
        gamma1_mean=float(_require(d, "gamma1_mean", "prior")),
        model_prior=tuple(_require(d, "model_prior", "prior")),
    )


def prior_to_dict(prior: PriorSpec) -> dict:
    return {
        "gamma0_mean": prior.gamma0_mean,
        "gamma0_sd": prior.gamma0_sd,
        "gamma1_shape": prior.gamma1_shape,
        "gamma1_mean": prior.gamma1_mean,
        "model_prior": list(prior.model_prior),
    }


def quad_from_dict(d: dict) -> QuadratureConfig:
    return QuadratureConfig(
        gauss_hermite_nodes=int(d.get("gauss_hermite_nodes", 40)),
        gauss_legendre_nodes=int(d.get("gauss_legendre_nodes", 40)),
        log_gamma1_halfwidth=(None if d.get("log_gamma1_halfwidth") is None
                              else float(d["log_gamma1_halfwidth"])),
    )


def quad_to_dict(quad: QuadratureConfig) -> dict:
    return {
        "gauss_hermite_nodes": quad.gauss_hermite_nodes,
        "gauss_legendre_nodes": quad.gauss_legendre_nodes,
        "log_gamma1_halfwidth": quad.log_gamma1_halfwidth,
    }


def design_from_dict(doc: dict) -> DesignConfig:
    """Build a full design from a parsed config document."""
    if "grid" not in doc:
        raise ConfigurationError("config document needs a 'grid' section")
    grid = grid_from_dict(doc["grid"])
    prior = prior_from_dict(doc["prior"]) if doc.get("prior") else default_prior(grid)
    quad = quad_from_dict(doc.get("quadrature") or {})
    design = doc.get("design") or {}
    return DesignConfig(
        grid=grid,
        n=int(_require(design, "n", "design")),
        k_model=int(design.get("k_model", 2)),
        c_f=float(design.get("c_f", 0.05)),
        s_base=float(design.get("s_base", 0.05)),
        method=Method(design.get("method", "selection")),
        prior=prior,
        quad=quad,
    )


def design_to_dict(config: DesignConfig) -> dict:
    return {
        "grid": grid_to_dict(config.grid),
        "prior": prior_to_dict(config.prior),
        "quadrature": quad_to_dict(config.quad),
        "design": {
            "n": config.n,
            "k_model": config.k_model,
            "c_f": config.c_f,
            "s_base": config.s_base,
            "method": config.method.value,
        },
    }


def load_config(source) -> DesignConfig:
    """Parse a design from a YAML/JSON path, file object, or string."""
    if hasattr(source, "read"):
        doc = yaml.safe_load(source)
    else:
        text = str(source)
        if "\n" not in text and not text.lstrip().startswith("{"):
            with open(text, "r", encoding="utf-8") as fh:
                doc = yaml.safe_load(fh)
        else:
            doc = yaml.safe_load(io.StringIO(text))
    if not isinstance(doc, dict):
        raise ConfigurationError("config document must be a mapping")
    return design_from_dict(doc)


def dump_config(config: DesignConfig) -> str:
    return yaml.safe_dump(design_to_dict(config), sort_keys=False)
