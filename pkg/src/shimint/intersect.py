"""Arithmetic intersection numbers of Heegner divisors, computed two ways.

``explicit_*`` sums derivatives at 0 of finite Dirichlet series over n.
``repnum_total`` sums, prime by prime, genus-weighted local multiplicities;
the genus weight comes either from counting Eichler orders locally or from
brute-force representation numbers on an explicit maximal order.
"""

from __future__ import annotations

import logging
import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Literal, Optional

from .arith import factorize, vp
from .clifford import DeltaSplit, qn_form, split_delta
from .dirichlet import DirichletFactored, LogLinear
from .errors import ConsistencyError, InvalidInput, UnsupportedConfiguration
from .heegner import (
    HClass,
    HeegnerInput,
    ValidationReport,
    enumerate_n,
    eta,
    h_classes,
    validate,
)
from .localmult import alpha_coprime, alpha_ram, alpha_unram, gk_invariants

log = logging.getLogger(__name__)

Method = Literal["explicit", "repnum"]
GenusSource = Literal["local", "lattice"]


@dataclass(frozen=True)
class LocalTerm:
    """One (n, p) summand of the prime-by-prime formula."""

    p: int
    genus: Fraction
    alpha: Fraction

    @property
    def value(self) -> LogLinear:
        return LogLinear.log(self.p, self.genus * self.alpha)


@dataclass(frozen=True)
class TermRow:
    n: int
    delta: int
    plus: int
    minus: int
    Mplus: int
    Mminus: int
    contribution: LogLinear
    local_terms: tuple[LocalTerm, ...] = ()


@dataclass(frozen=True)
class IntersectionReport:
    input: HeegnerInput
    method: Method
    rows: tuple[TermRow, ...]
    prefactor: Fraction
    total: LogLinear
    h_class: Optional[HClass] = None
    genus_source: Optional[GenusSource] = None
    status: str = "ok"
    reason: Optional[str] = None
    warnings: tuple[str, ...] = field(default=())

    @property
    def total_float(self) -> float:
        return float(self.total)

    @property
    def eta_normalized(self) -> bool:
        return self.input.m is None


def _require_ok(inp: HeegnerInput) -> ValidationReport:
    rep = validate(inp)
    if rep.status == "invalid":
        raise InvalidInput(rep.reason)
    if math.gcd(inp.d1, inp.d2) != 1:
        raise InvalidInput(f"gcd({inp.d1}, {inp.d2}) != 1")
    return rep


def _zero_report(inp, method, rep, prefactor, h_class=None, genus_source=None) -> IntersectionReport:
    return IntersectionReport(
        inp, method, (), prefactor, LogLinear(), h_class, genus_source,
        status=rep.status, reason=rep.reason,
    )


def _split(inp: HeegnerInput, n: int) -> DeltaSplit:
    return split_delta(inp.d1, inp.d2, n, inp.level.Nplus, inp.level.Nminus)


def _explicit_row(inp: HeegnerInput, n: int) -> TermRow:
    s = _split(inp, n)
    contribution = DirichletFactored.of(s.Mplus, s.Mminus).deriv0()
    return TermRow(n, s.delta, s.plus, s.minus, s.Mplus, s.Mminus, contribution)


def _warnings(total: LogLinear) -> tuple[str, ...]:
    if not total.is_nonnegative_termwise():
        msg = (
            f"total {total} has a negative coefficient; the nonvanishing "
            "hypothesis on the divisors may fail for this input"
        )
        log.warning(msg)
        return (msg,)
    return ()


def explicit_pair(inp: HeegnerInput, cls: HClass) -> IntersectionReport:
    """eta * sum over n = +-h (2N), n^2 < D1*D2 of L'_{M+,M-}(0)."""
    rep = _require_ok(inp)
    if cls not in h_classes(inp.d1, inp.d2, inp.level):
        raise InvalidInput(f"{cls} is not an admissible h-class")
    pref = eta(inp.m)
    if not rep.ok:
        return _zero_report(inp, "explicit", rep, pref, h_class=cls)
    rows = tuple(_explicit_row(inp, n) for n in enumerate_n(inp.d1, inp.d2, inp.level, cls))
    total = sum((r.contribution for r in rows), LogLinear()) * pref
    return IntersectionReport(inp, "explicit", rows, pref, total, cls, warnings=_warnings(total))


def prefactor_total(inp: HeegnerInput) -> Fraction:
    """2^(r-1) * eta(m); r = 0 gives 1/2."""
    return Fraction(2) ** (inp.level.r - 1) * eta(inp.m)


def explicit_total(inp: HeegnerInput) -> IntersectionReport:
    """2^(r-1) * eta * sum over all n with N | delta_n of L'_{M+,M-}(0)."""
    rep = _require_ok(inp)
    pref = prefactor_total(inp)
    if not rep.ok:
        return _zero_report(inp, "explicit", rep, pref)
    rows = tuple(_explicit_row(inp, n) for n in enumerate_n(inp.d1, inp.d2, inp.level))
    total = sum((r.contribution for r in rows), LogLinear()) * pref
    return IntersectionReport(inp, "explicit", rows, pref, total, warnings=_warnings(total))


def local_alpha(inp: HeegnerInput, n: int, p: int, s: DeltaSplit) -> Fraction:
    """alpha_p(Q_n) under gcd(D1, D2) = 1.

    Odd p not dividing N goes through Gross-Keating invariants of Q_n; p = 2
    not dividing N uses the coprime closed form; p | N- uses v_p(delta)/2.
    """
    level = inp.level
    if level.Nminus % p == 0:
        return Fraction(alpha_ram(vp(s.minus, p)))
    if level.Nplus % p == 0:
        raise ConsistencyError(f"alpha requested at p = {p} dividing N+")
    if p == 2:
        return alpha_coprime(vp(s.Mminus, p))
    inv = gk_invariants(qn_form(inp.d1, inp.d2, n), p)
    return alpha_unram(inv)


def _genus_local(s: DeltaSplit, p: int) -> Fraction:
    return Fraction(DirichletFactored.of(s.Mplus, s.Mminus).value0_away_from(p))


def repnum_total(inp: HeegnerInput, genus_source: GenusSource = "local") -> IntersectionReport:
    """2^(r-1) * eta * sum_p sum_{n^2 < D1D2, pN | delta_n} genus_p(n) * alpha_p(Q_n) * log p."""
    if genus_source not in ("local", "lattice"):
        raise InvalidInput(f"unknown genus source {genus_source!r}")
    rep = _require_ok(inp)
    pref = prefactor_total(inp)
    if not rep.ok:
        return _zero_report(inp, "repnum", rep, pref, genus_source=genus_source)
    if genus_source == "lattice":
        from .lattice_oracle import ORACLE_PRIMES, genus_term

        if inp.level.N != 1:
            raise UnsupportedConfiguration("lattice genus source requires N+ = N- = 1")

    N = inp.level.N
    rows = []
    for n in enumerate_n(inp.d1, inp.d2, inp.level):
        s = _split(inp, n)
        terms = []
        quotient = -s.delta // N
        primes = factorize(quotient).primes() if quotient > 1 else []
        for p in primes:
            if genus_source == "local":
                genus = _genus_local(s, p)
            else:
                if p not in ORACLE_PRIMES:
                    raise UnsupportedConfiguration(
                        f"lattice oracle has no one-class genus for p = {p} (n = {n})"
                    )
                genus = genus_term(p, inp.d1, inp.d2, n)
            if genus == 0:
                continue
            terms.append(LocalTerm(p, genus, local_alpha(inp, n, p, s)))
        contribution = sum((t.value for t in terms), LogLinear())
        rows.append(
            TermRow(n, s.delta, s.plus, s.minus, s.Mplus, s.Mminus, contribution, tuple(terms))
        )
    total = sum((r.contribution for r in rows), LogLinear()) * pref
    return IntersectionReport(
        inp, "repnum", tuple(rows), pref, total, genus_source=genus_source,
        warnings=_warnings(total),
    )


@dataclass(frozen=True)
class CrosscheckReport:
    input: HeegnerInput
    totals: dict[str, LogLinear]
    skipped: dict[str, str]

    @property
    def equal(self) -> bool:
        values = list(self.totals.values())
        return all(v == values[0] for v in values)


def crosscheck(inp: HeegnerInput) -> CrosscheckReport:
    """Compare the explicit total with the prime-by-prime total(s) exactly."""
    totals = {
        "explicit": explicit_total(inp).total,
        "repnum-local": repnum_total(inp, "local").total,
    }
    skipped = {}
    try:
        totals["repnum-lattice"] = repnum_total(inp, "lattice").total
    except UnsupportedConfiguration as exc:
        skipped["repnum-lattice"] = str(exc)
    return CrosscheckReport(inp, totals, skipped)
