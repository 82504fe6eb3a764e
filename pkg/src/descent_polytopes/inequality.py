"""The f-vector inequality ``F_{u yx v} > F_{u yy vbar}`` and its consequences."""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from .algebra import TPoly
from .fvector import T1, f_recurrence, subset_term
from .words import XYWord, alternating_word, as_word, enumerate_words, index_set, kappa, subword

MIDDLES = ("yx", "yy")

_T = TPoly.t()
_T_INV = TPoly.t(-1)


@dataclass(frozen=True)
class InequalityReport:
    u: XYWord
    v: XYWord
    difference: TPoly
    positive_range_ok: bool
    top_vanishes: bool

    @property
    def n(self) -> int:
        return len(self.u) + len(self.v) + 3

    @property
    def ok(self) -> bool:
        return self.positive_range_ok and self.top_vanishes


def q_tu(u: str, v: str, t_set, u_set, middle: str = "yx") -> TPoly:
    """The four subset-sum terms of ``F_{u m v}`` that pick ``T`` from ``u`` and
    ``U`` from ``v``, where ``m`` is ``yx`` or ``yy``.

    For ``m = yy`` the word ``v`` is complemented, as in ``F_{u yy vbar}``.
    ``E`` ranges over subsets of the two middle positions.
    """
    if middle not in MIDDLES:
        raise ValueError(f"middle must be one of {MIDDLES}")
    u, v = as_word(u), as_word(v)
    t_set = index_set(t_set, len(u))
    u_set = index_set(u_set, len(v))
    left = subword(u, t_set)
    right = subword(v if middle == "yx" else v.complement(), u_set)
    size = len(t_set) + len(u_set)
    total = TPoly()
    for e in ((), (0,), (1,), (0, 1)):
        inserted = "".join(middle[i] for i in e)
        total = total + subset_term(kappa(left + inserted + right), size + len(e))
    return total


def verify_inequality(u: str, v: str) -> InequalityReport:
    u, v = as_word(u), as_word(v)
    if len(u) + len(v) > 12:
        raise ValueError("|u| + |v| must be at most 12")
    diff = f_recurrence(u + "yx" + v).poly - f_recurrence(u + "yy" + v.complement()).poly
    n = len(u) + len(v) + 3
    positive = all(diff.coeff(i) >= 1 for i in range(n))
    top = diff.coeff(n) == 0 and diff.is_polynomial() and (not diff or diff.degree <= n)
    return InequalityReport(u, v, diff, positive, top)


def verify_all_inequalities(max_total: int):
    """Check every pair with ``|u| + |v| <= max_total``.

    Returns ``(number_checked, first_failing_report_or_None)``; pairs are
    visited by total length, then lexicographically.
    """
    checked = 0
    for total in range(max_total + 1):
        for lu in range(total + 1):
            for u in enumerate_words(lu):
                for v in enumerate_words(total - lu):
                    report = verify_inequality(u, v)
                    checked += 1
                    if not report.ok:
                        return checked, report
    return checked, None


def _entry(expr: TPoly, t1_power: int = 0) -> tuple[TPoly, int]:
    return expr, t1_power


# Table entries as (numerator, d) meaning numerator / (t+1)^d.  Columns:
# kappa(u^T vbar^U) - k, Q/((t+1)^k t^(s+1-k)), Qbar/(same), (Q-Qbar)/((t+1)^(k-1) t^(s+1-k))
# where k = kappa(u^T v^U) and s = |T| + |U|.
TABLE_ONE = {
    ("x", "x"): (+1,
                 _entry(1 + _T + T1 ** 2 * _T_INV + T1 ** 2),
                 _entry(T1 * _T_INV * (1 + 2 * _T + _T ** 2)),
                 _entry(T1 ** 2)),
    ("x", "y"): (-1,
                 _entry(1 + _T + _T + T1 ** 2),
                 _entry(_T * (1 + 2 * T1 ** 2 * _T_INV + T1 ** 2), 1),
                 _entry(_T ** 2)),
    ("y", "x"): (-1,
                 _entry(1 + _T + _T + _T ** 2),
                 _entry(_T * (1 + 2 * _T + _T ** 2), 1),
                 _entry(T1 ** 2)),
    ("y", "y"): (+1,
                 _entry(1 + T1 ** 2 * _T_INV + _T + T1 ** 2),
                 _entry(T1 * _T_INV * (1 + 2 * _T + _T ** 2)),
                 _entry(T1 ** 2)),
    ("", "x"): (0,
                _entry(1 + _T + T1 + T1 * _T),
                _entry(1 + 2 * _T + _T ** 2),
                _entry(T1 ** 2)),
    ("", "y"): (0,
                _entry(1 + T1 + _T + T1 ** 2),
                _entry(1 + 2 * T1 + T1 * _T),
                _entry(_T ** 2 + _T)),
    ("x", ""): (0,
                _entry(1 + _T + T1 + T1 ** 2),
                _entry(1 + 2 * T1 + T1 * _T),
                _entry(_T ** 2 + _T)),
    ("y", ""): (0,
                _entry(1 + T1 + _T + T1 * _T),
                _entry(1 + 2 * _T + _T ** 2),
                _entry(T1 ** 2)),
    ("", ""): (0,
               _entry(1 + T1 + T1 + T1 ** 2),
               _entry(1 + 2 * T1 + T1 * _T),
               _entry(T1 ** 2)),
}

# (word, positions) realising u^T ending / v^U starting with the given letter
_U_WITNESSES = {"x": [("x", (1,)), ("yxy", (1, 2))],
                "y": [("y", (1,)), ("xxy", (2, 3))],
                "": [("", ()), ("xy", ())]}
_V_WITNESSES = {"x": [("x", (1,)), ("yxy", (2, 3))],
                "y": [("y", (1,)), ("xyx", (2, 3))],
                "": [("", ()), ("yx", ())]}


@dataclass(frozen=True)
class TableRow:
    u_end: str
    v_start: str
    witness: tuple
    kappa_offset_ok: bool
    q_ok: bool
    qbar_ok: bool
    difference_ok: bool
    difference: TPoly

    @property
    def ok(self) -> bool:
        return self.kappa_offset_ok and self.q_ok and self.qbar_ok and self.difference_ok


def _matches(value: TPoly, divisor: TPoly, entry: tuple[TPoly, int]) -> bool:
    num, d = entry
    return value * T1 ** d == num * divisor


def table1_rows() -> list[TableRow]:
    """Recompute every table entry from witness words, two witnesses per case."""
    rows = []
    for (u_end, v_start), (offset, col4, col5, col6) in TABLE_ONE.items():
        for (u, t_set), (v, u_set) in zip(_U_WITNESSES[u_end], _V_WITNESSES[v_start]):
            ut, vu = subword(u, t_set), subword(v, u_set)
            k = kappa(ut + vu)
            s = len(t_set) + len(u_set)
            q = q_tu(u, v, t_set, u_set, "yx")
            qbar = q_tu(u, v, t_set, u_set, "yy")
            common = (T1 ** k).shift(s + 1 - k)
            quotient_divisor = (T1 ** (k - 1)).shift(s + 1 - k)
            diff = (q - qbar).exact_div(quotient_divisor)
            rows.append(TableRow(
                u_end, v_start, ((u, t_set), (v, u_set)),
                kappa(ut + subword(as_word(v).complement(), u_set)) - k == offset,
                _matches(q, common, col4),
                _matches(qbar, common, col5),
                _matches(q - qbar, quotient_divisor, col6),
                diff,
            ))
    return rows


def verify_table1() -> bool:
    return all(row.ok for row in table1_rows())


def dominates(a: TPoly, b: TPoly) -> bool:
    """Coefficientwise ``a >= b``."""
    return all(c >= 0 for c in (a - b).terms.values())


def find_max_fvector(n: int) -> set[XYWord]:
    """Words of length ``n - 1`` whose f-polynomial dominates every other one."""
    if not 1 <= n <= 12:
        raise ValueError("n must lie in 1..12")
    polys = {w: f_recurrence(w).poly for w in enumerate_words(n - 1)}
    return {w for w, p in polys.items() if all(dominates(p, q) for q in polys.values())}


def verify_maxima(max_n: int):
    """For each ``n <= max_n`` check the maxima are exactly the two alternating
    words and that they beat every non-alternating word strictly in degrees
    ``0..n-1``.  Returns ``(ok, first_bad_n_or_None)``."""
    for n in range(1, max_n + 1):
        expected = {alternating_word(n - 1, "x"), alternating_word(n - 1, "y")}
        if find_max_fvector(n) != expected:
            return False, n
        top = f_recurrence(alternating_word(n - 1)).poly
        for w in enumerate_words(n - 1):
            if w in expected:
                continue
            diff = top - f_recurrence(w).poly
            if any(diff.coeff(i) < 1 for i in range(n)):
                return False, n
    return True, None


def signature(u: str, v: str, t_set, u_set) -> tuple:
    """The data ``Q_{T,U}`` depends on."""
    ut, vu = subword(u, t_set), subword(v, u_set)
    return (len(ut), len(vu), kappa(ut + vu), ut[-1:], vu[:1])


def all_q_pairs(u: str, v: str):
    """Iterate ``(T, U)`` over all position subsets of ``u`` and ``v``."""
    for a in range(len(u) + 1):
        for t_set in itertools.combinations(range(1, len(u) + 1), a):
            for b in range(len(v) + 1):
                for u_set in itertools.combinations(range(1, len(v) + 1), b):
                    yield t_set, u_set
