"""Named verification suites, each checking one identity over a finite grid.

A suite yields ``SuiteResult`` rows.  ``fail`` means a mathematical
mismatch; ``inconclusive`` means a stabilization horizon was too short to
decide and is reported separately.
"""

from functools import lru_cache
from typing import NamedTuple

from .bott import bott, bott_inverse, serre_dual
from .charpoly import WeightWindow, brute_sym_power_of_sym, decompose, mult_of
from .errors import VerificationFailure
from .weights import dominant_weights_between, dual, u_d
from .veronese import (
    a_lambda_j,
    d0_spectral,
    d2_table_predicate,
    det_sym_weight,
    dj_character,
    ext_closed_form,
    ext_via_bott,
    m_lambda,
    nu_at_level,
    nu_stable,
    p_mult,
    primitive_sum_check,
    s_mult,
)


class SuiteResult(NamedTuple):
    suite: str
    params: str
    status: str
    checked: int
    detail: str = ""

    def line(self):
        extra = f": {self.detail}" if self.detail else ""
        return f"[{self.status.upper()}] {self.suite} ({self.params}) checked={self.checked}{extra}"


def _partitions(length, max_size, step=1):
    for total in range(0, max_size + 1, step):
        yield from dominant_weights_between(length, total, 0, total=total)


def d2_table(n, l1max, lnmin):
    window = WeightWindow(n, l1max, lnmin)
    params = f"n={n}, l1<={l1max}, ln>={lnmin}"
    checked = 0
    for lam in window.weights():
        try:
            got = (a_lambda_j(lam, 0, 2), a_lambda_j(lam, 1, 2))
        except VerificationFailure as exc:
            return SuiteResult("d2-table", params, "fail", checked, str(exc))
        cell = d2_table_predicate(lam, n)
        expected = {"D0": (1, 0), "D1": (0, 1), None: (0, 0)}[cell]
        checked += 1
        if got != expected:
            return SuiteResult(
                "d2-table", params, "fail", checked, f"{lam}: computed {got}, table {expected}"
            )
    return SuiteResult("d2-table", params, "pass", checked)


@lru_cache(maxsize=None)
def _brute_decomposition(k, d, n):
    return decompose(brute_sym_power_of_sym(k, d, n))


def hook_shapes(n, size_max):
    for s in range(size_max + 1):
        if s == 0:
            yield (0,) * n
            continue
        for b in range(0, min(n - 1, s - 1) + 1):
            yield (s - b,) + (1,) * b + (0,) * (n - 1 - b)


def hooks(d, n, size_max, brute=True):
    params = f"d={d}, n={n}, size<={size_max}"
    checked = 0
    for lam in hook_shapes(n, size_max):
        s = sum(lam)
        expected = int((n < 2 or lam[1] == 0) and s % d == 0)
        got = s_mult(lam, d)
        if brute and s % d == 0:
            slow = mult_of(lam, _brute_decomposition(s // d, d, n))
            if slow != got:
                return SuiteResult(
                    "hooks", params, "fail", checked, f"{lam}: series {got}, enumeration {slow}"
                )
        checked += 1
        if got != expected:
            return SuiteResult("hooks", params, "fail", checked, f"{lam}: {got} != {expected}")
    return SuiteResult("hooks", params, "pass", checked)


def stabilization(n, d, musize, extra=2):
    params = f"n={n}, d={d}, |mu|<={musize}"
    checked = 0
    inconclusive = None
    for mu in _partitions(n - 1, musize):
        nu = nu_stable(mu, d)
        seq = [nu_at_level(mu, k, d, n) for k in range(sum(mu) + extra + 1)]
        checked += 1
        if any(a > b for a, b in zip(seq, seq[1:])):
            return SuiteResult("stabilization", params, "fail", checked, f"{mu}: {seq} decreases")
        if seq[-1] > nu:
            return SuiteResult("stabilization", params, "fail", checked, f"{mu}: {seq} exceeds {nu}")
        if seq[-1] != nu and inconclusive is None:
            inconclusive = f"{mu}: {seq} has not reached {nu} at the horizon"
    if inconclusive:
        return SuiteResult("stabilization", params, "inconclusive", checked, inconclusive)
    return SuiteResult("stabilization", params, "pass", checked)


def primitive_sum(n, d, size):
    params = f"n={n}, d={d}, |tail|<={size}"
    checked = 0
    for tail in _partitions(n - 1, size):
        res = primitive_sum_check(tail, d)
        checked += 1
        if res.total != res.nu:
            return SuiteResult(
                "primitive-sum", params, "fail", checked, f"{tail}: sum {res.total} != nu {res.nu}"
            )
        if not res.tail_zero:
            return SuiteResult(
                "primitive-sum", params, "inconclusive", checked, f"{tail}: p not yet zero"
            )
    return SuiteResult("primitive-sum", params, "pass", checked)


def ext_two_route(n, d, musize, l1max, lnmin):
    params = f"n={n}, d={d}, |mu|<={musize}, l1<={l1max}, ln>={lnmin}"
    window = WeightWindow(n, l1max, lnmin)
    targets = [lam for lam in window.weights() if sum(lam) % d == 0]
    checked = 0
    for mu in _partitions(n, musize, d):
        table = ext_via_bott(mu, d, window)
        for j in range(n):
            for lam in targets:
                a = ext_closed_form(mu, lam, j, d)
                b = table.mult(j, lam)
                checked += 1
                if a != b:
                    return SuiteResult(
                        "ext-two-route", params, "fail", checked,
                        f"mu={mu}, j={j}, lambda={lam}: closed form {a}, Bott {b}",
                    )
    return SuiteResult("ext-two-route", params, "pass", checked)


def det_exclusion(n, d, musize):
    params = f"n={n}, d={d}, |mu|<={musize}"
    det = det_sym_weight(n, d)
    window = WeightWindow(n, det[0], det[0])
    checked = 0
    for mu in _partitions(n, musize, d):
        if not p_mult(mu, d):
            continue
        table = ext_via_bott(mu, d, window)
        for j in range(n):
            checked += 1
            if ext_closed_form(mu, det, j, d) or table.mult(j, det):
                return SuiteResult(
                    "det-exclusion", params, "fail", checked, f"mu={mu} has det in Ext^(n_d+{j})"
                )
    return SuiteResult("det-exclusion", params, "pass", checked)


def d0_two_route(n, d, l1max, lnmin):
    params = f"n={n}, d={d}, l1<={l1max}, ln>={lnmin}"
    window = WeightWindow(n, l1max, lnmin)
    try:
        spectral = d0_spectral(d, n, window)
    except VerificationFailure as exc:
        return SuiteResult("d0-two-route", params, "fail", 0, str(exc))
    direct = dj_character(0, d, window)
    checked = sum(1 for _ in window.with_residue(0, d).weights())
    if spectral != direct:
        diff = (spectral - direct).sorted_items()
        return SuiteResult("d0-two-route", params, "fail", checked, f"first difference {diff[0]}")
    return SuiteResult("d0-two-route", params, "pass", checked)


def series_coefficients(d, tmax):
    """Coefficients of 1/((1-t^2)...(1-t^d)) up to t^tmax."""
    coeffs = [1] + [0] * tmax
    for k in range(2, d + 1):
        for t in range(k, tmax + 1):
            coeffs[t] += coeffs[t - k]
    return coeffs


def gen_function(d, tmax):
    params = f"n=2, d={d}, t<={tmax}"
    expected = series_coefficients(d, tmax)
    for t in range(tmax + 1):
        got = nu_stable((t,), d)
        if got != expected[t]:
            return SuiteResult("gen-function", params, "fail", t, f"t={t}: {got} != {expected[t]}")
    return SuiteResult("gen-function", params, "pass", tmax + 1)


def _bott_degrees(mu, r, n):
    # every l satisfying the defining inequalities, by direct scan
    bounds = [float("inf")] + [m - i for i, m in enumerate(mu, start=1)] + [float("-inf")]
    return [l for l in range(n) if bounds[l] > r > bounds[l + 1]]


def bott_checks(n, lo, hi):
    params = f"n={n}, entries in [{lo},{hi}]"
    checked = 0
    for lam in dominant_weights_between(n, hi, lo):
        for l in range(n):
            mu, r = bott_inverse(lam, l)
            got = bott(mu, r, n)
            checked += 1
            if got is None or got.l != l or got.weight != lam:
                return SuiteResult("bott", params, "fail", checked, f"{lam}, l={l}: {got}")
    for mu in dominant_weights_between(n - 1, hi, lo):
        for r in range(2 * lo - n, 2 * hi + n + 1):
            degrees = _bott_degrees(mu, r, n)
            got = bott(mu, r, n)
            checked += 1
            vanishes = any(r == m - i for i, m in enumerate(mu, start=1))
            if vanishes:
                ok = got is None
            else:
                ok = len(degrees) == 1 and got is not None and got.l == degrees[0]
            if ok and got is not None:
                mu_s, r_s = serre_dual(mu, r, n)
                other = bott(mu_s, r_s, n)
                ok = other is not None and other.l == n - 1 - got.l and other.weight == dual(got.weight)
            if not ok:
                return SuiteResult("bott", params, "fail", checked, f"mu={mu}, r={r}: {got}")
    return SuiteResult("bott", params, "pass", checked)


def witness(n, d):
    params = f"n={n}, d={d}"
    u = u_d(n, d)
    residues = set()
    checked = 0
    for last in range(u - 1, u - 1 - 3 * d, -1):
        lam = (u + 1,) + (u - 1,) * (n - 2) + (last,)
        checked += 1
        if m_lambda(lam, d) != 1:
            return SuiteResult("witness", params, "fail", checked, f"m_{lam} = {m_lambda(lam, d)}")
        residues.add(sum(lam) % d)
    if residues != set(range(d)):
        return SuiteResult("witness", params, "fail", checked, f"residues covered {sorted(residues)}")
    return SuiteResult("witness", params, "pass", checked)


# Default grids reproduce the acceptance ranges.
SUITES = {
    "d2-table": lambda o: [
        d2_table(n, o.get("l1max", 10), o.get("lnmin", -6)) for n in o.get("n", [2, 3, 4, 5])
    ],
    "hooks": lambda o: [
        hooks(d, n, o.get("sizemax", 12)) for d in o.get("d", [2, 3, 4]) for n in o.get("n", [2, 3, 4])
    ],
    "stabilization": lambda o: [
        stabilization(n, d, o.get("musize", 8))
        for n in o.get("n", [2, 3, 4])
        for d in o.get("d", [2, 3, 4])
    ],
    "primitive-sum": lambda o: [
        primitive_sum(n, d, o.get("musize", 6)) for n in o.get("n", [2, 3]) for d in o.get("d", [2, 3])
    ],
    "ext-two-route": lambda o: [
        ext_two_route(n, d, o.get("musize", 8), o.get("l1max", 8), o.get("lnmin", -8))
        for n in o.get("n", [2, 3])
        for d in o.get("d", [2, 3])
    ],
    "det-exclusion": lambda o: [
        det_exclusion(n, d, o.get("musize", 8)) for n in o.get("n", [2, 3]) for d in o.get("d", [2, 3])
    ],
    "d0-two-route": lambda o: [
        d0_two_route(n, d, o.get("l1max", 8), o.get("lnmin", -4))
        for n in o.get("n", [2, 3])
        for d in o.get("d", [2, 3])
    ],
    "gen-function": lambda o: [gen_function(d, o.get("sizemax", 20)) for d in o.get("d", [2, 3, 4])],
    "bott": lambda o: [bott_checks(n, -5, 5) for n in o.get("n", [2, 3, 4])],
    "witness": lambda o: [witness(n, d) for n in o.get("n", [2, 3, 4]) for d in o.get("d", [2, 3])],
}


def run_suite(name, options=None):
    return SUITES[name](options or {})

