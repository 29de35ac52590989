"""Bott's theorem on P^{n-1} for the bundles S_mu R (x) Q^r.

R is the rank n-1 tautological subbundle and Q = O(1) the quotient line
bundle.  At most one cohomology group is nonzero, and it is irreducible.
"""

from typing import NamedTuple

from .errors import WeightError
from .weights import dominant, tilde_lambda_sup_i


class Cohomology(NamedTuple):
    """H^l(P^{n-1}, S_mu R (x) Q^r) = S_lambda V, all other degrees zero."""

    l: int
    weight: tuple


# Serre duality on X = P^{n-1}: H^l(F)^* = H^{n-1-l}(F^* (x) omega_X), with
#   omega_X = det(R (x) Q^*) = S_{(1^{n-1})} R (x) Q^{-(n-1)}
#   (S_mu R)^* = S_{(-mu_{n-1}, ..., -mu_1)} R.
# So (mu, r) pairs with (reverse(-mu) + SERRE_MU_TWIST, -r + SERRE_R_TWIST * (n-1)),
# and the cohomology weight l pairs with its dual (-l_n, ..., -l_1).
# Checked by hand for n=2 (O(0) <-> R (x) Q^{-1} = omega) and n=3 (O(0) <-> omega).
SERRE_MU_TWIST = 1
SERRE_R_TWIST = -1


def _check_mu(mu, n):
    mu = dominant(mu)
    if len(mu) != n - 1:
        raise WeightError(f"mu must have n-1 = {n - 1} entries, got {mu}")
    return mu


def bott(mu, r, n):
    """Cohomology of S_mu R (x) Q^r on P^{n-1}; ``None`` if it all vanishes.

    Vanishes iff r = mu_i - i for some 1 <= i <= n-1.  Otherwise l is the
    unique index with mu_l - l > r > mu_{l+1} - (l+1) (mu_0 = +inf,
    mu_n = -inf) and the weight is (mu_1-1, ..., mu_l-1, r+l, mu_{l+1}, ...).
    """
    mu = _check_mu(mu, n)
    for i in range(1, n):
        if r == mu[i - 1] - i:
            return None
    for l in range(n):
        upper_ok = l == 0 or mu[l - 1] - l > r
        lower_ok = l == n - 1 or r > mu[l] - (l + 1)
        if upper_ok and lower_ok:
            weight = tuple(m - 1 for m in mu[:l]) + (r + l,) + tuple(mu[l:])
            return Cohomology(l, weight)
    raise AssertionError(f"no Bott degree found for mu={mu}, r={r}")


def bott_inverse(weight, l):
    """The unique (mu, r) with H^l(S_mu R (x) Q^r) = S_weight V."""
    lam = dominant(weight)
    n = len(lam)
    if not 0 <= l <= n - 1:
        raise IndexError(f"l={l} out of range 0..{n - 1}")
    return tilde_lambda_sup_i(lam, l + 1), lam[l] - l


def serre_dual(mu, r, n):
    """The pair (mu*, r*) whose cohomology is Serre dual to that of (mu, r)."""
    mu = _check_mu(mu, n)
    mu_star = tuple(-m + SERRE_MU_TWIST for m in reversed(mu))
    return mu_star, -r + SERRE_R_TWIST * (n - 1)
