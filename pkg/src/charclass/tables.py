"""Catalogue of universal singularity-class polynomials.

The entries live in ``universal_classes.tab``, one per line in the format
``name | kappa | codim | polynomial | valid_to_weight``.  Locus classes
(``tp`` entries) are exact homogeneous polynomials; the ``sm:``-prefixed
entries are the truncated Euler-characteristic refinements whose leading
term reproduces the corresponding locus class.  Code never re-derives a
table row; the file is the ground truth and is covered by golden tests.
"""

from __future__ import annotations

from fractions import Fraction
from importlib import resources
from typing import Iterator

from .algebra import AbstractClass, constant, parse, render
from .report import Check

_DATA_FILE = "universal_classes.tab"
_SSM_PREFIX = "sm:"

# Leading-term references for the Euler-characteristic series: either the
# name of the locus class whose multiple they refine, or a literal constant.
_SSM_LEADING = {
    ("A1", 0): ("A1", Fraction(1)),
    ("A1", 1): ("A1", Fraction(1)),
    ("A0^2", 1): ("A0^2", Fraction(1)),
    ("image", 1): (None, Fraction(1)),
    ("image_double", 1): ("A0^2", Fraction(1, 2)),
}


class TableMissError(KeyError):
    """Requested (name, kappa) pair is not in the catalogue."""


def _parse_line(line: str) -> AbstractClass:
    fields = [f.strip() for f in line.split("|")]
    if len(fields) != 5:
        raise ValueError(f"malformed table line: {line!r}")
    name, kappa, codim, body, valid = fields
    kappa = int(kappa)
    return AbstractClass(
        name=name,
        kappa=kappa,
        codim=int(codim),
        body=parse(body, kappa=kappa),
        valid_to_weight=None if valid == "-" else int(valid),
    )


def _raw_lines() -> Iterator[str]:
    text = resources.files(__package__).joinpath(_DATA_FILE).read_text()
    for line in text.splitlines():
        line = line.strip()
        if line and not line.startswith("#"):
            yield line


_REGISTRY: dict | None = None


def _registry() -> dict:
    global _REGISTRY
    if _REGISTRY is None:
        reg = {}
        for line in _raw_lines():
            entry = _parse_line(line)
            key = (entry.name, entry.kappa)
            if key in reg:
                raise ValueError(f"duplicate table entry {key}")
            reg[key] = entry
        _REGISTRY = reg
    return _REGISTRY


def thom_polynomial(name: str, kappa: int) -> AbstractClass:
    """The exact locus class for a singularity type at the given kappa."""
    try:
        return _registry()[(name, kappa)]
    except KeyError:
        raise TableMissError(f"no locus class for {name!r} at kappa={kappa}") from None


def ssm_series(name: str, kappa: int) -> AbstractClass:
    """The truncated Euler-characteristic series for a locus or image set."""
    try:
        entry = _registry()[(_SSM_PREFIX + name, kappa)]
    except KeyError:
        raise TableMissError(f"no Euler series for {name!r} at kappa={kappa}") from None
    return AbstractClass(
        name=name,
        kappa=entry.kappa,
        codim=entry.codim,
        body=entry.body,
        valid_to_weight=entry.valid_to_weight,
    )


def entries() -> list:
    """All stored classes, in file order."""
    return list(_registry().values())


def validate_tables() -> list:
    """Structural validation of the catalogue.

    Locus classes must be homogeneous of their stated codimension under the
    kappa-weighting; every Euler series must open with the matching locus
    class (up to its recorded multiplicity).
    """
    checks = []
    for (name, kappa), entry in _registry().items():
        if name.startswith(_SSM_PREFIX):
            continue
        ok = entry.body.is_homogeneous(entry.codim) and not entry.body.is_zero()
        checks.append(
            Check(
                name=f"tables/homogeneous/{name}@kappa={kappa}",
                passed=ok,
                detail=f"codim {entry.codim}, body {render(entry.body)}",
            )
        )
    for (name, kappa), (ref, factor) in _SSM_LEADING.items():
        series = ssm_series(name, kappa)
        leading = series.body.component(series.codim)
        expected = (
            constant(factor)
            if ref is None
            else thom_polynomial(ref, kappa).body * factor
        )
        residual = leading - expected
        checks.append(
            Check(
                name=f"tables/leading-term/{name}@kappa={kappa}",
                passed=residual.is_zero(),
                residual=render(residual),
            )
        )
    return checks


def golden_roundtrip() -> list:
    """Bit-exact rendering check of every table line against the data file."""
    checks = []
    for line in _raw_lines():
        fields = [f.strip() for f in line.split("|")]
        entry = _parse_line(line)
        ok = render(entry.body) == fields[3]
        checks.append(
            Check(
                name=f"tables/golden/{entry.name}@kappa={entry.kappa}",
                passed=ok,
                detail=None if ok else f"file {fields[3]!r} != render {render(entry.body)!r}",
            )
        )
    return checks
