"""The local-cohomology route to the character of D_0, and the facts about
primitive multiplicities it rests on.

The ideals I_r are filtered by partitions with p_l != 0, ordered so that the
subquotients are copies of M_l.  Only their multiplicities enter here.
"""

from typing import NamedTuple

from ..charpoly import VirtualCharacter
from ..errors import VerificationFailure
from ..weights import (
    add_k_delta,
    contains,
    dominant,
    dominant_weights_between,
    is_dominant,
    is_partition,
    lambda_sup_i,
    mu_bracket_r,
)
from .characters import prepare_window
from .ext import ext_closed_form
from .multiplicities import e_lambda, nu_stable, p_mult, s_mult

DEFAULT_HORIZON_EXTRA = 2


def string_levels(tail, d, top):
    """The partitions (mu_1, *tail) with |mu| = kd, for k up to ``top``,
    as (k, mu) pairs in increasing k."""
    tail = tuple(tail)
    for k in range(top + 1):
        mu = mu_bracket_r(tail, k * d)
        if is_dominant(mu) and is_partition(mu):
            yield k, mu


def horizon(tail, extra=DEFAULT_HORIZON_EXTRA):
    """Last level summed along the delta-string through ``tail``."""
    return sum(tail) + extra


def d0_spectral(d, n, window, extra=DEFAULT_HORIZON_EXTRA):
    """Character of D_0 on ``window`` from the Ext spectral sequence.

    Route A sums p_mu * Ext^{n_d + j}(M_mu, S) literally over partitions mu on
    the delta-strings that can reach the window.  Route B uses the reduced
    form sum_{j<n-1} (-1)^j nu_{l^{n-j}} + (-1)^(n-1) (nu_{l^1} - e_l).  Route A
    is returned; any disagreement raises ``VerificationFailure``.
    """
    if window.n != n:
        raise ValueError(f"window is for n={window.n}, expected n={n}")
    win = window.with_residue(0, d)
    prepare_window(d, window)
    result = {}
    for lam in win.weights():
        route_a = 0
        route_b = 0
        for j in range(n):
            sign = -1 if j % 2 else 1
            tail = lambda_sup_i(lam, n - j, d)
            if j <= n - 2:
                route_b += sign * nu_stable(tail, d)
            else:
                route_b += sign * (nu_stable(tail, d) - e_lambda(lam, d))
            if not is_partition(tail):
                continue
            for _, mu in string_levels(tail, d, horizon(tail, extra)):
                p = p_mult(mu, d)
                if p:
                    route_a += sign * p * ext_closed_form(mu, lam, j, d)
        if route_a != route_b:
            raise VerificationFailure(
                f"D_0 routes disagree at {lam}: literal sum {route_a}, reduced form {route_b}", lam
            )
        if route_a:
            result[lam] = route_a
    return VirtualCharacter(n, result, win)


class PrimitiveSum(NamedTuple):
    tail: tuple
    total: int
    nu: int
    tail_zero: bool

    @property
    def ok(self):
        return self.total == self.nu and self.tail_zero


def primitive_sum_check(tail, d, top=None, extra=DEFAULT_HORIZON_EXTRA):
    """Sum p along the delta-string through ``tail`` up to level ``top`` and
    compare with nu_tail; also report whether p vanishes on the two levels
    after ``top``."""
    tail = dominant(tail)
    top = horizon(tail, extra) if top is None else top
    total = sum(p_mult(mu, d) for _, mu in string_levels(tail, d, top))
    beyond = [mu_bracket_r(tail, k * d) for k in (top + 1, top + 2)]
    tail_zero = all(p_mult(mu, d) == 0 for mu in beyond if is_partition(mu))
    return PrimitiveSum(tail, total, nu_stable(tail, d), tail_zero)


def filtration_multiplicity(weight, d):
    """Multiplicity of S_weight V in the associated graded of the filtration
    by the I_r: the sum of p_{weight - k delta} over k >= 0.  Equals s_weight."""
    lam = dominant(weight)
    total = 0
    k = 0
    while True:
        mu = add_k_delta(lam, -k, d)
        if not is_partition(mu):
            return total
        total += p_mult(mu, d)
        k += 1


def primitive_partitions(n, d, gmax, extra=DEFAULT_HORIZON_EXTRA):
    """Partitions l of length n with p_l != 0 and l_2 + ... + l_n <= gmax,
    each delta-string searched up to its horizon."""
    out = []
    for g in range(gmax + 1):
        for tail in dominant_weights_between(n - 1, g, 0, total=g):
            for _, mu in string_levels(tail, d, horizon(tail, extra)):
                if p_mult(mu, d):
                    out.append(mu)
    return out


def order_key(weight):
    """Sort key: g = l_2 + ... + l_n first, then lexicographic."""
    return (sum(weight[1:]), tuple(weight))


def check_ordering(sequence):
    """First violated condition in an ordering of primitive partitions, or None.

    (1) no earlier partition contains a later one; (2) g is non-decreasing.
    """
    for i in range(len(sequence) - 1):
        if sum(sequence[i][1:]) > sum(sequence[i + 1][1:]):
            return ("g decreases", sequence[i], sequence[i + 1])
    for i, earlier in enumerate(sequence):
        for later in sequence[i + 1 :]:
            if contains(earlier, later):
                return ("containment", earlier, later)
    return None


def hook_string_orderability(n, d, gmax, extra=DEFAULT_HORIZON_EXTRA):
    """Build the (g, lex) ordering of primitive partitions with g <= gmax and
    check it satisfies both conditions, and that each delta-string has
    finitely many primitives in the tested range.

    Returns (ordering, problem) with ``problem`` None on success.
    """
    seq = sorted(primitive_partitions(n, d, gmax, extra), key=order_key)
    problem = check_ordering(seq)
    if problem is None:
        for g in range(gmax + 1):
            for tail in dominant_weights_between(n - 1, g, 0, total=g):
                if not primitive_sum_check(tail, d, extra=extra).tail_zero:
                    problem = ("primitives do not die out", tail, None)
                    break
            if problem:
                break
    return seq, problem


def filtration_check(n, d, size_max):
    """s_l equals the filtration multiplicity for every partition of size at
    most ``size_max``; returns the first failing weight or None."""
    for total in range(0, size_max + 1, d):
        for lam in dominant_weights_between(n, total, 0, total=total):
            if filtration_multiplicity(lam, d) != s_mult(lam, d):
                return lam
    return None
