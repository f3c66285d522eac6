"""Grid data model: generating units, instances, and hourly load profiles.

Three benchmark instances (3, 10, and 26 units) are embedded so the
regression suite is hermetic; arbitrary instances load from CSV.
"""

from __future__ import annotations

import csv
import io
from dataclasses import dataclass
from functools import cached_property
from pathlib import Path
from typing import IO, Iterable, Union

import numpy as np

__all__ = [
    "GridError",
    "InvalidInstanceError",
    "InstanceFormatError",
    "UnknownInstanceError",
    "GeneratorSpec",
    "GridInstance",
    "LoadProfile",
    "cost",
    "load_instance",
    "instance_to_csv",
    "load_profile",
    "profile_to_csv",
    "builtin_instance",
    "BUILTIN_NAMES",
]

Source = Union[str, Path, IO]


class GridError(Exception):
    """Base class for grid-model errors."""


class InvalidInstanceError(GridError):
    """A unit or instance violates a structural invariant."""


class InstanceFormatError(GridError):
    """A CSV source is malformed; message carries row/column location."""


class UnknownInstanceError(GridError):
    """Requested builtin instance name does not exist."""


@dataclass(frozen=True)
class GeneratorSpec:
    """One generating unit: operating range and quadratic cost curve.

    Cost coefficients are a [$/MW^2 h], b [$/MWh], c [$/h] and are never
    rescaled.  Power bounds are MW.
    """

    index: int
    p_min: float
    p_max: float
    a: float
    b: float
    c: float

    def cost(self, p: float) -> float:
        """Operating cost a*p^2 + b*p + c at power level p (total function)."""
        return self.a * p * p + self.b * p + self.c

    def validate(self) -> None:
        if not 0.0 < self.p_min <= self.p_max:
            raise InvalidInstanceError(
                f"unit {self.index}: power bounds must satisfy 0 < p_min <= p_max, "
                f"got p_min={self.p_min}, p_max={self.p_max}"
            )
        if not self.a > 0.0:
            raise InvalidInstanceError(
                f"unit {self.index}: quadratic coefficient must be positive "
                f"(strict convexity of the dispatch problem), got a={self.a}"
            )


def cost(gen: GeneratorSpec, p: float) -> float:
    """Operating cost of running `gen` at power level p."""
    return gen.cost(p)


@dataclass(frozen=True)
class GridInstance:
    """An ordered, validated collection of generating units."""

    name: str
    units: tuple[GeneratorSpec, ...]

    def __post_init__(self) -> None:
        if not self.units:
            raise InvalidInstanceError("instance has no units")
        for pos, gen in enumerate(self.units):
            gen.validate()
            if gen.index != pos:
                raise InvalidInstanceError(
                    f"unit indices must be contiguous 0..N-1 in list order; "
                    f"position {pos} holds index {gen.index}"
                )

    @property
    def n(self) -> int:
        return len(self.units)

    # Hot paths (dispatch, QUBO evaluation) work off these arrays.
    @cached_property
    def p_min(self) -> np.ndarray:
        return np.array([g.p_min for g in self.units])

    @cached_property
    def p_max(self) -> np.ndarray:
        return np.array([g.p_max for g in self.units])

    @cached_property
    def coeff_a(self) -> np.ndarray:
        return np.array([g.a for g in self.units])

    @cached_property
    def coeff_b(self) -> np.ndarray:
        return np.array([g.b for g in self.units])

    @cached_property
    def coeff_c(self) -> np.ndarray:
        return np.array([g.c for g in self.units])

    @cached_property
    def min_power_cost(self) -> np.ndarray:
        """Per-unit operating cost at minimum power, F_j(p_min_j)."""
        return np.array([g.cost(g.p_min) for g in self.units])

    @property
    def total_capacity(self) -> float:
        return float(self.p_max.sum())


@dataclass(frozen=True)
class LoadProfile:
    """Hourly demand levels in MW, one per period t = 0..T-1."""

    loads: tuple[float, ...]

    def __post_init__(self) -> None:
        for t, load in enumerate(self.loads):
            if not load > 0.0:
                raise InvalidInstanceError(f"period {t}: load must be positive, got {load}")

    @property
    def n_periods(self) -> int:
        return len(self.loads)

    def validate_against(self, instance: GridInstance) -> None:
        """Every period must be servable by the instance at full capacity."""
        cap = instance.total_capacity
        for t, load in enumerate(self.loads):
            if load > cap:
                raise InvalidInstanceError(
                    f"period {t}: load {load} exceeds total capacity {cap} "
                    f"of instance {instance.name!r}"
                )


# ---------------------------------------------------------------------------
# CSV interchange
#
# Instance schema:  unit,pmin,pmax,c,b,a   (one row per unit, decimal point)
# Profile schema:   period,load
# ---------------------------------------------------------------------------

_INSTANCE_HEADER = ["unit", "pmin", "pmax", "c", "b", "a"]
_PROFILE_HEADER = ["period", "load"]


def _open_text(source: Source) -> IO:
    if isinstance(source, (str, Path)):
        return open(source, "r", newline="")
    if isinstance(source, io.RawIOBase) or isinstance(source, io.BufferedIOBase):
        return io.TextIOWrapper(source, newline="")
    return source


def _parse_field(row: int, name: str, raw: str) -> float:
    try:
        return float(raw)
    except ValueError as exc:
        raise InstanceFormatError(f"row {row}, column {name!r}: cannot parse {raw!r}") from exc


def load_instance(source: Source, name: str = "custom") -> GridInstance:
    """Read a GridInstance from a CSV path or stream.

    Raises InstanceFormatError on malformed input (with row/column location)
    and InvalidInstanceError when a row violates unit invariants.
    """
    stream = _open_text(source)
    try:
        reader = csv.reader(stream)
        try:
            header = next(reader)
        except StopIteration:
            raise InstanceFormatError("empty instance CSV") from None
        if [h.strip() for h in header] != _INSTANCE_HEADER:
            raise InstanceFormatError(
                f"bad header {header!r}; expected {','.join(_INSTANCE_HEADER)}"
            )
        units = []
        for lineno, row in enumerate(reader, start=1):
            if not row or all(not f.strip() for f in row):
                continue
            if len(row) != len(_INSTANCE_HEADER):
                raise InstanceFormatError(
                    f"row {lineno}: expected {len(_INSTANCE_HEADER)} fields, got {len(row)}"
                )
            values = [_parse_field(lineno, nm, raw) for nm, raw in zip(_INSTANCE_HEADER, row)]
            units.append(
                GeneratorSpec(
                    index=int(values[0]),
                    p_min=values[1],
                    p_max=values[2],
                    c=values[3],
                    b=values[4],
                    a=values[5],
                )
            )
    finally:
        if isinstance(source, (str, Path)):
            stream.close()
    return GridInstance(name=name, units=tuple(units))


def instance_to_csv(instance: GridInstance) -> str:
    """Serialize an instance to the CSV interchange format."""
    out = io.StringIO()
    writer = csv.writer(out, lineterminator="\n")
    writer.writerow(_INSTANCE_HEADER)
    for g in instance.units:
        writer.writerow([g.index, repr(g.p_min), repr(g.p_max), repr(g.c), repr(g.b), repr(g.a)])
    return out.getvalue()


def load_profile(source: Source) -> LoadProfile:
    """Read a LoadProfile from a CSV path or stream (header: period,load)."""
    stream = _open_text(source)
    try:
        reader = csv.reader(stream)
        try:
            header = next(reader)
        except StopIteration:
            raise InstanceFormatError("empty profile CSV") from None
        if [h.strip() for h in header] != _PROFILE_HEADER:
            raise InstanceFormatError(
                f"bad header {header!r}; expected {','.join(_PROFILE_HEADER)}"
            )
        loads = []
        for lineno, row in enumerate(reader, start=1):
            if not row or all(not f.strip() for f in row):
                continue
            if len(row) != 2:
                raise InstanceFormatError(f"row {lineno}: expected 2 fields, got {len(row)}")
            period = int(_parse_field(lineno, "period", row[0]))
            if period != len(loads):
                raise InstanceFormatError(
                    f"row {lineno}: periods must be 0..T-1 in order, got {period}"
                )
            loads.append(_parse_field(lineno, "load", row[1]))
    finally:
        if isinstance(source, (str, Path)):
            stream.close()
    return LoadProfile(loads=tuple(loads))


def profile_to_csv(profile: LoadProfile) -> str:
    out = io.StringIO()
    writer = csv.writer(out, lineterminator="\n")
    writer.writerow(_PROFILE_HEADER)
    for t, load in enumerate(profile.loads):
        writer.writerow([t, repr(load)])
    return out.getvalue()


# ---------------------------------------------------------------------------
# Embedded benchmark instances
#
# Rows are (pmin, pmax, c, b, a) in CSV column order.
# ---------------------------------------------------------------------------

_UC3_UNITS = (
    (100.0, 600.0, 500.0, 10.0, 0.002),
    (100.0, 400.0, 300.0, 8.0, 0.0025),
    (50.0, 200.0, 100.0, 6.0, 0.005),
)
_UC3_LOADS = (170.0, 520.0, 1100.0, 330.0)

_UC10_UNITS = (
    (150.0, 455.0, 1000.0, 16.19, 0.00048),
    (150.0, 455.0, 970.0, 17.26, 0.00031),
    (20.0, 130.0, 700.0, 16.6, 0.00200),
    (20.0, 130.0, 680.0, 16.5, 0.00211),
    (25.0, 162.0, 450.0, 19.7, 0.00398),
    (20.0, 80.0, 370.0, 22.26, 0.00712),
    (25.0, 85.0, 480.0, 27.74, 0.00079),
    (10.0, 55.0, 660.0, 25.92, 0.00413),
    (10.0, 55.0, 665.0, 27.27, 0.00222),
    (10.0, 55.0, 670.0, 27.79, 0.00173),
)
_UC10_LOADS = (
    700.0, 750.0, 850.0, 950.0, 1000.0, 1100.0, 1150.0, 1200.0,
    1300.0, 1400.0, 1450.0, 1500.0, 1400.0, 1300.0, 1200.0, 1050.0,
    1000.0, 1100.0, 1200.0, 1400.0, 1300.0, 1100.0, 900.0, 800.0,
)

_UC26_UNITS = (
    (2.4, 12.0, 24.3891, 25.55, 0.02533),
    (2.4, 12.0, 24.411, 25.68, 0.02649),
    (2.4, 12.0, 24.6382, 25.8, 0.02801),
    (2.4, 12.0, 24.7605, 25.93, 0.02842),
    (2.4, 12.0, 24.8882, 26.06, 0.02855),
    (4.0, 20.0, 117.755, 37.55, 0.01199),
    (4.0, 20.0, 118.108, 37.66, 0.01261),
    (4.0, 20.0, 118.458, 37.78, 0.01359),
    (4.0, 20.0, 118.821, 37.89, 0.01433),
    (15.2, 76.0, 81.1364, 13.33, 0.00876),
    (15.2, 76.0, 81.298, 13.36, 0.00895),
    (15.2, 76.0, 81.4641, 13.38, 0.0091),
    (15.2, 76.0, 81.6259, 13.41, 0.00932),
    (25.0, 100.0, 217.895, 18.0, 0.00623),
    (25.0, 100.0, 218.335, 18.1, 0.00612),
    (25.0, 100.0, 218.775, 18.2, 0.00598),
    (54.25, 155.0, 142.735, 10.69, 0.00463),
    (54.25, 155.0, 143.029, 10.72, 0.00473),
    (54.25, 155.0, 143.318, 10.74, 0.00481),
    (54.25, 155.0, 143.597, 10.76, 0.00487),
    (68.95, 197.0, 259.131, 23.0, 0.00259),
    (68.95, 197.0, 259.649, 23.1, 0.0026),
    (68.95, 197.0, 260.176, 23.2, 0.00263),
    (140.0, 350.0, 177.058, 10.86, 0.00153),
    (100.0, 400.0, 310.002, 7.49, 0.00194),
    (100.0, 400.0, 311.91, 7.5, 0.00195),
)
_UC26_LOADS = (
    1700.0, 1730.0, 1690.0, 1700.0, 1750.0, 1850.0, 2000.0, 2430.0,
    2540.0, 2600.0, 2670.0, 2590.0, 2590.0, 2550.0, 2620.0, 2650.0,
    2550.0, 2530.0, 2500.0, 2550.0, 2600.0, 2480.0, 2200.0, 1840.0,
)

_BUILTINS = {
    "uc3": (_UC3_UNITS, _UC3_LOADS),
    "uc10": (_UC10_UNITS, _UC10_LOADS),
    "uc26": (_UC26_UNITS, _UC26_LOADS),
}

BUILTIN_NAMES = tuple(_BUILTINS)


def builtin_instance(name: str) -> tuple[GridInstance, LoadProfile]:
    """Return one of the embedded benchmark instances with its load profile."""
    try:
        rows, loads = _BUILTINS[name]
    except KeyError:
        raise UnknownInstanceError(
            f"unknown instance {name!r}; choose from {', '.join(BUILTIN_NAMES)}"
        ) from None
    units = tuple(
        GeneratorSpec(index=i, p_min=r[0], p_max=r[1], c=r[2], b=r[3], a=r[4])
        for i, r in enumerate(rows)
    )
    instance = GridInstance(name=name, units=units)
    profile = LoadProfile(loads=loads)
    profile.validate_against(instance)
    return instance, profile
