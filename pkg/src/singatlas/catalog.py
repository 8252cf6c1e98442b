"""Closed-form component counts and explicit topological-type catalogs.

A component of the complement of the discriminant is indexed by the
topological type of the lower level set W(lambda) = {f_lambda <= 0}: a
family tag plus oval counts.  The catalogs here enumerate those descriptors
explicitly; `table1_count` gives the closed-form totals, and `cross_check`
compares both against the homological and surgery-theoretic counts.
"""

from __future__ import annotations

from dataclasses import dataclass

from . import dhomology, explore
from .lattice import Family, SingularityClass


@dataclass(frozen=True)
class TopologicalType:
    cls: SingularityClass
    family: str               # per-class family tag, e.g. "I".."IV" or "base"
    params: tuple[int, ...]   # oval counts / root count, family-dependent
    mirror: bool = False      # produced by the class's reflection symmetry


def table1_count(cls: SingularityClass) -> int:
    """Closed-form number of components of the discriminant complement."""
    f, mu = cls.family, cls.mu
    if f is Family.A:
        return (mu + 3) // 2
    k = cls.k if f in (
        Family.Dminus, Family.Dplus, Family.DoddPlus, Family.DoddMinus
    ) else 0
    if f is Family.Dminus:
        return (k + 2) * (k + 1) // 2 + 1
    if f in (Family.Dplus, Family.DoddPlus, Family.DoddMinus):
        return (k + 1) * k // 2
    if f in (Family.E6plus, Family.E6minus):
        return 5
    return 10  # E7, E8


def topological_types(cls: SingularityClass) -> list[TopologicalType]:
    """Explicit list of topological types of lower level sets for cls."""
    f = cls.family
    out: list[TopologicalType] = []
    if f is Family.A:
        # number of real roots of the degree mu+1 polynomial
        roots = cls.mu + 1
        while roots >= 0:
            out.append(TopologicalType(cls, "roots", (roots,)))
            roots -= 2
        return out
    if f is Family.Dminus:
        k = cls.k
        for i in range(k):
            out.append(TopologicalType(cls, "I", (i,)))
        out.append(TopologicalType(cls, "II", ()))
        out.append(TopologicalType(cls, "II", (), mirror=True))
        for p in range(k - 1):
            for m in range(k - 1 - p):
                out.append(TopologicalType(cls, "III", (p, m)))
        for i in range(k):
            out.append(TopologicalType(cls, "IV", (i,)))
        return out
    if f is Family.Dplus:
        k = cls.k
        for p in range(k):
            for m in range(k - p):
                out.append(TopologicalType(cls, "base", (p, m)))
        return out
    if f in (Family.DoddPlus, Family.DoddMinus):
        k = cls.k
        mirror = f is Family.DoddMinus
        for i in range(k):
            out.append(TopologicalType(cls, "I", (i,), mirror=mirror))
        for p in range(k - 1):
            for m in range(k - 1 - p):
                out.append(TopologicalType(cls, "II", (p, m), mirror=mirror))
        return out
    if f in (Family.E6plus, Family.E6minus):
        mirror = f is Family.E6minus
        for i in range(4):
            out.append(TopologicalType(cls, "ovals-below", (i,), mirror=mirror))
        out.append(TopologicalType(cls, "positive-oval", (), mirror=mirror))
        return out
    if f is Family.E7:
        for i in range(4):
            out.append(TopologicalType(cls, "ovals", (i,)))
        out.append(TopologicalType(cls, "positive-oval", ()))
        for i in range(4):
            out.append(TopologicalType(cls, "ovals", (i,), mirror=True))
        out.append(TopologicalType(cls, "positive-oval", (), mirror=True))
        return out
    if f is Family.E8:
        for i in range(5):
            out.append(TopologicalType(cls, "ovals", (i,)))
        out.append(TopologicalType(cls, "positive-oval", ()))
        # central symmetry fixes the no-oval and positive-oval pictures
        for i in range(1, 5):
            out.append(TopologicalType(cls, "ovals", (i,), mirror=True))
        return out
    raise ValueError(f"unsupported class {f.value}")


@dataclass(frozen=True)
class CrossCheckReport:
    cls: SingularityClass
    catalog: int
    closed_form: int
    duality: int | None
    surgery: int | None

    @property
    def ok(self) -> bool:
        legs = [self.catalog, self.closed_form]
        legs += [x for x in (self.duality, self.surgery) if x is not None]
        return len(set(legs)) == 1

    def failing_legs(self) -> list[str]:
        ref = self.closed_form
        bad = []
        if self.catalog != ref:
            bad.append(f"catalog={self.catalog}")
        if self.duality is not None and self.duality != ref:
            bad.append(f"duality={self.duality}")
        if self.surgery is not None and self.surgery != ref:
            bad.append(f"surgery={self.surgery}")
        return bad


def cross_check(
    cls: SingularityClass, state_cap: int = explore.DEFAULT_STATE_CAP
) -> CrossCheckReport:
    """Compare catalog size, closed form, and the class's independent count.

    D types get the Alexander-duality count from the GF(2) homology; E types
    get the surgery-closure class count.
    """
    f = cls.family
    duality = surgery = None
    if f in (Family.Dminus, Family.Dplus, Family.DoddPlus, Family.DoddMinus):
        duality = dhomology.component_count_via_duality(cls)
    if f in (Family.E6plus, Family.E6minus, Family.E7, Family.E8):
        surgery = explore.component_count(cls, state_cap)
    return CrossCheckReport(
        cls, len(topological_types(cls)), table1_count(cls), duality, surgery
    )
