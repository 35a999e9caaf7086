"""Algebra files (JSON or YAML) and preset names."""

import json
from pathlib import Path
from typing import Any

import yaml
from pydantic import ValidationError

from nakayama_ar.core.algebra import (
    NakayamaAlgebra,
    a4gamma,
    create_algebra,
    hereditary,
    longrel,
    radsquare,
)
from nakayama_ar.errors import AlgebraFileError
from nakayama_ar.models import AlgebraFile
from nakayama_ar.utils import get_logger

logger = get_logger(__name__)

PRESETS = ("a4gamma", "radsquare:n", "longrel:n", "hereditary:n")
_FAMILIES = {"radsquare": radsquare, "longrel": longrel, "hereditary": hereditary}


def _parse_content(content: str) -> Any:
    """Parse file content, JSON first and YAML second."""
    try:
        return json.loads(content)
    except json.JSONDecodeError:
        pass
    try:
        return yaml.safe_load(content)
    except yaml.YAMLError as e:
        raise AlgebraFileError(f"algebra file is neither JSON nor YAML: {e}") from e


def load_algebra_file(path: str | Path) -> NakayamaAlgebra:
    """Read an algebra file.

    Args:
        path: JSON or YAML file with ``n``, ``relations`` and an optional ``name``

    Returns:
        The validated algebra

    Raises:
        AlgebraFileError: Unreadable file, syntax error or unknown fields
        DomainError: Relations violating the algebra rules
    """
    path = Path(path)
    try:
        content = path.read_text(encoding="utf-8")
    except OSError as e:
        raise AlgebraFileError(f"cannot read algebra file {path}: {e}") from e

    data = _parse_content(content)
    if not isinstance(data, dict):
        raise AlgebraFileError(f"algebra file {path} must contain a mapping")
    try:
        parsed = AlgebraFile.model_validate(data)
    except ValidationError as e:
        raise AlgebraFileError(f"invalid algebra file {path}: {e}") from e

    logger.info("algebra.loaded", path=str(path), n=parsed.n, relations=len(parsed.relations))
    return create_algebra(parsed.n, parsed.relations, name=parsed.name or path.stem)


def parse_preset(text: str) -> NakayamaAlgebra:
    """Expand a preset name such as ``a4gamma`` or ``longrel:5``.

    Raises:
        AlgebraFileError: Unknown preset or malformed size
    """
    text = text.strip()
    if text == "a4gamma":
        return a4gamma()
    family, _, size = text.partition(":")
    if family not in _FAMILIES or not size:
        raise AlgebraFileError(f"unknown preset {text!r}, expected one of {', '.join(PRESETS)}")
    try:
        n = int(size)
    except ValueError as e:
        raise AlgebraFileError(f"preset size must be an integer, got {size!r}") from e
    if n < 1:
        raise AlgebraFileError(f"preset size must be positive, got {n}")
    return _FAMILIES[family](n)


def resolve_algebra(preset: str | None = None, path: str | Path | None = None) -> NakayamaAlgebra:
    """The algebra named by a preset or stored in a file; exactly one must be given."""
    if (preset is None) == (path is None):
        raise AlgebraFileError("give exactly one of a preset or an algebra file")
    if preset is not None:
        return parse_preset(preset)
    return load_algebra_file(path)  # type: ignore[arg-type]
