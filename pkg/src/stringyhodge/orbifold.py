"""Orbifold Hodge numbers from twisted-sector data.

Input is per-conjugacy-class fixed-locus data: for each component, the
fermion shift (sum of the tangent eigenvalue angles of the group
element along it) and the centralizer-invariant Hodge numbers.  The
sector contributes those numbers shifted diagonally by the fermion
shift, and the orbifold diamond is the sum over sectors.  Classes that
act freely contribute nothing and may simply be omitted.

The fixed-locus data is supplied by the caller, not derived from a
variety: computing fixed loci of a group action on an arbitrary Kahler
manifold is out of scope, and the worked examples ship as fixtures.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from .errors import (IdentityViolation, NonIntegralShift,
                     PreconditionViolated, ShiftOutOfRange)


@dataclass(frozen=True)
class ComponentDatum:
    """One connected component of a sector's fixed locus."""

    fermion_shift: Fraction
    hodge: dict            # (p, q) -> nonnegative int

    def __post_init__(self):
        object.__setattr__(self, "fermion_shift", Fraction(self.fermion_shift))
        if self.fermion_shift < 0:
            raise PreconditionViolated("fermion shift must be >= 0")
        if any(h < 0 for h in self.hodge.values()):
            raise PreconditionViolated("Hodge numbers must be >= 0")


@dataclass(frozen=True)
class SectorDatum:
    label: str
    components: tuple


@dataclass(frozen=True)
class OrbifoldInput:
    dimension: int
    sectors: tuple
    is_calabi_yau: bool = False

    def __post_init__(self):
        idents = [s for s in self.sectors
                  if all(c.fermion_shift == 0 for c in s.components)]
        if len(idents) < 1:
            raise PreconditionViolated("no identity sector (all shifts zero)")


def sector_hodge(sector: SectorDatum, dimension: int) -> dict:
    """Shifted Hodge contribution of one sector: each component adds its
    invariant h^(p,q) at (p + F, q + F)."""
    out = {}
    for comp in sector.components:
        f = comp.fermion_shift
        if f.denominator != 1:
            raise NonIntegralShift(
                f"sector {sector.label!r} has fermion shift {f}")
        shift = int(f)
        for (p, q), h in comp.hodge.items():
            if h == 0:
                continue
            pp, qq = p + shift, q + shift
            if not (0 <= pp <= dimension and 0 <= qq <= dimension):
                raise ShiftOutOfRange(
                    f"sector {sector.label!r}: ({p},{q}) shifted by {shift} "
                    f"leaves the [0,{dimension}]^2 square")
            out[(pp, qq)] = out.get((pp, qq), 0) + h
    return out


def orbifold_hodge(data: OrbifoldInput) -> dict:
    """Orbifold Hodge diamond and Euler number of the quotient.

    The Euler number is the alternating sum over the diamond; because
    fermion shifts move (p, q) diagonally, it equals the plain sum of
    the component Euler numbers, which is asserted.
    """
    diamond = {}
    for sector in data.sectors:
        for key, h in sector_hodge(sector, data.dimension).items():
            diamond[key] = diamond.get(key, 0) + h
    euler = sum((-1) ** (p + q) * h for (p, q), h in diamond.items())
    unshifted = sum((-1) ** (p + q) * h
                    for sector in data.sectors
                    for comp in sector.components
                    for (p, q), h in comp.hodge.items())
    if euler != unshifted:
        raise IdentityViolation("shift parity broke the Euler consistency")
    if data.is_calabi_yau:
        n = data.dimension
        for (p, q), h in diamond.items():
            if diamond.get((n - p, n - q), 0) != h:
                raise IdentityViolation(
                    f"Poincare duality fails at ({p},{q}) on a "
                    "Calabi-Yau-flagged orbifold")
    return {"diamond": diamond, "euler": euler}


def orbifold_from_json(data) -> OrbifoldInput:
    try:
        sectors = []
        for s in data["sectors"]:
            comps = []
            for c in s["components"]:
                comps.append(ComponentDatum(
                    fermion_shift=Fraction(str(c["fermion_shift"])),
                    hodge={(int(p), int(q)): int(h) for p, q, h in c["hodge"]},
                ))
            sectors.append(SectorDatum(label=str(s["label"]),
                                       components=tuple(comps)))
        return OrbifoldInput(dimension=int(data["dimension"]),
                             sectors=tuple(sectors),
                             is_calabi_yau=bool(data.get("is_calabi_yau", False)))
    except (KeyError, TypeError, ValueError) as exc:
        raise PreconditionViolated(f"bad orbifold file: {exc}") from exc


def diamond_to_json(diamond: dict):
    return sorted([p, q, h] for (p, q), h in diamond.items() if h)
