"""Ext^*_S(M_mu, S) as GL(W)-representations, by two independent routes.

``ext_closed_form`` evaluates the explicit 0/1 rule.  ``ext_via_bott``
instead expands the dual sheaf on P(V) as a sum of line-bundle twists,
runs each through ``bott`` and re-twists by det(Sym^d W).
"""

from dataclasses import dataclass, field

from ..bott import bott
from ..charpoly import WeightWindow
from ..errors import ResourceCapExceeded, VerificationFailure, WindowError
from ..weights import Partition, dominant, lambda_sup_i, n_d, u_d

DEFAULT_MAX_STEPS = 100_000


@dataclass
class ExtTable:
    """Multiplicities of S_l W in Ext^{n_d + j}(M_mu, S), keyed by
    (n_d + j, l), complete inside ``window``."""

    mu: tuple
    d: int
    n: int
    window: WeightWindow
    entries: dict = field(default_factory=dict)

    @property
    def codim(self):
        return n_d(self.n, self.d)

    def mult(self, j, weight):
        weight = tuple(weight)
        if not self.window.contains(weight):
            raise WindowError(f"{weight} lies outside the window {self.window.to_dict()}")
        return self.entries.get((self.codim + j, weight), 0)

    def degree(self, j):
        """{l: multiplicity} for Ext^{n_d + j}."""
        index = self.codim + j
        return {lam: v for (i, lam), v in self.entries.items() if i == index}

    def to_dict(self):
        rows = sorted(self.entries.items(), key=lambda kv: (kv[0][0], kv[0][1]), reverse=True)
        return {
            "kind": "ext",
            "mu": list(self.mu),
            "n": self.n,
            "d": self.d,
            "window": self.window.to_dict(),
            "entries": [
                {"index": i, "j": i - self.codim, "lambda": list(lam), "mult": v}
                for (i, lam), v in rows
            ],
        }


def ext_closed_form(mu, weight, j, d):
    """Multiplicity (0 or 1) of S_weight W in Ext^{n_d + j}(M_mu, S).

    For j <= n-2 it is 1 iff (mu_2, ..., mu_n) = weight^{n-j}; for j = n-1 iff
    (mu_2, ..., mu_n) = weight^1 and mu_1 - weight_1 + u_d > 0.
    Requires |mu| = |weight| = 0 (mod d).
    """
    mu = Partition(mu)
    lam = dominant(weight, len(mu))
    n = len(lam)
    if sum(mu) % d or sum(lam) % d:
        raise ValueError(f"need |mu| = |lambda| = 0 mod {d}; got |{tuple(mu)}|, |{lam}|")
    if not 0 <= j <= n - 1:
        raise ValueError(f"j must be in 0..{n - 1}, got {j}")
    tail = tuple(mu[1:])
    if j <= n - 2:
        return int(tail == lambda_sup_i(lam, n - j, d))
    return int(tail == lambda_sup_i(lam, 1, d) and mu[0] - lam[0] + u_d(n, d) > 0)


def ext_via_bott(mu, d, target_window, max_steps=DEFAULT_MAX_STEPS):
    """All of Ext^*(M_mu, S) inside ``target_window``, through Bott's theorem.

    The dual sheaf is det(Sym^d V) (x) S_{mu_bar} R (x) Q^{mu_1 - kd} summed
    over k > 0; H^{n-1-j} of each summand feeds Ext^{n_d + j}.  Each target
    weight must be hit at most once per degree.
    """
    mu = Partition(mu)
    n = len(mu)
    if sum(mu) % d:
        raise ValueError(f"|mu| = {sum(mu)} is not divisible by d = {d}")
    u = u_d(n, d)
    codim = n_d(n, d)
    tail = tuple(mu[1:])
    table = ExtTable(tuple(mu), d, n, target_window)
    if target_window.is_empty:
        return table
    k = 0
    while True:
        k += 1
        if k > max_steps:
            raise ResourceCapExceeded(
                f"ext_via_bott for mu={tuple(mu)} did not reach its cutoff in {max_steps} steps"
            )
        r = mu[0] - k * d
        # once r is below every mu_i - i the degree is n-1 for good and only
        # the last part (r + n - 1 + u) keeps moving down
        settled = n == 1 or r < tail[-1] - (n - 1)
        if settled and r + (n - 1) + u < target_window.lambdan_min:
            break
        result = bott(tail, r, n)
        if result is None:
            continue
        lam = tuple(p + u for p in result.weight)
        if not target_window.contains(lam):
            continue
        key = (codim + n - 1 - result.l, lam)
        if key in table.entries:
            raise VerificationFailure(
                f"S_{lam} W hit twice in Ext^{key[0]}(M_{tuple(mu)}, S)", lam
            )
        table.entries[key] = 1
    return table
