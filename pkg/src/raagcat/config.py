"""Experiment configurations shared by the scripts and the test suite."""

from __future__ import annotations

import argparse
from dataclasses import asdict, dataclass, fields
from typing import Any, TypeVar

from raagcat.complex import DEFAULT_BUDGET
from raagcat.verify import CORPUS_SEED

T = TypeVar("T")


@dataclass(frozen=True)
class CorpusConfig:
    count: int = 200
    max_vertices: int = 9
    seed: int = CORPUS_SEED
    budget: int = DEFAULT_BUDGET


@dataclass(frozen=True)
class SearchConfig:
    max_vertices: int = 8
    trials: int = 500
    seed: int = 7
    workers: int = 1
    budget: int = DEFAULT_BUDGET


def to_dict(cfg: Any) -> dict[str, Any]:
    return asdict(cfg)


def add_arguments(parser: argparse.ArgumentParser, cls: type) -> None:
    """One ``--field-name`` option per dataclass field, defaulting to the field default."""
    for f in fields(cls):
        parser.add_argument("--" + f.name.replace("_", "-"), type=type(f.default), default=f.default)


def from_namespace(cls: type[T], ns: argparse.Namespace) -> T:
    return cls(**{f.name: getattr(ns, f.name) for f in fields(cls)})
