"""Multiplicities attached to the degree-d Veronese cone.

Conventions: S = Sym(Sym^d V) with V = W^*, delta = (d, 0, ..., 0) and
u = u_d(n, d), so that det(Sym^d W) = S_{(u^n)} W.

    s_l      multiplicity of S_l V in S
    a_l      s_{l - delta}, the part of S^l reached by multiplying by Sym^d V
    p_l      s_l - a_l, the primitive part
    nu_mu    stable plethysm multiplicity, mu of length n-1
    m_l      sum_i (-1)^(n-i) nu_{l^i}
    e_l      multiplicity of S_l W in E = det(Sym^d W) (x) Sym(Sym^d W)
    a^j_l    multiplicity of S_l W in the simple D-module D_j
"""

from functools import lru_cache

from ..charpoly import VirtualCharacter, tensor_sym_multiplicity
from ..errors import VerificationFailure, WeightError
from ..weights import (
    add_k_delta,
    constant,
    dominant,
    is_dominant,
    is_partition,
    lambda_sup_i,
    mu_bracket_r,
    u_d,
)


def _check_d(d):
    if d < 2:
        raise ValueError(f"d must be at least 2, got {d}")


@lru_cache(maxsize=None)
def _s(lam, d):
    if not is_partition(lam) or sum(lam) % d:
        return 0
    return tensor_sym_multiplicity((d,), lam)


def s_mult(weight, d):
    """Multiplicity of S_weight V in Sym(Sym^d V); zero off the partitions
    and off |weight| = 0 (mod d)."""
    _check_d(d)
    return _s(dominant(weight), d)


def a_pleth(weight, d):
    """s_{weight - delta}, or 0 when that is not a partition."""
    _check_d(d)
    shifted = add_k_delta(dominant(weight), -1, d)
    if not is_partition(shifted):
        return 0
    return _s(shifted, d)


def p_mult(weight, d):
    lam = dominant(weight)
    value = s_mult(lam, d) - a_pleth(lam, d)
    if value < 0:
        raise VerificationFailure(f"primitive multiplicity p_{lam} = {value} < 0", lam)
    return value


@lru_cache(maxsize=None)
def _nu(mu, d):
    if not mu:
        return 1
    if not is_partition(mu):
        return 0
    return tensor_sym_multiplicity(range(2, d + 1), mu)


def nu_stable(mu, d):
    """Multiplicity of S_mu C^{n-1} in the degree-|mu| part of
    Sym(Sym^2) (x) ... (x) Sym(Sym^d); zero when mu is not a partition."""
    _check_d(d)
    mu = tuple(mu)
    if not is_dominant(mu):
        raise WeightError(f"{mu} is not nonincreasing")
    return _nu(mu, d)


def nu_at_level(mu, k, d, n):
    """Multiplicity of S_{mu[kd]} C^n in Sym^k(Sym^d C^n).

    Nondecreasing in k with limit ``nu_stable(mu, d)``.
    """
    _check_d(d)
    mu = dominant(mu, n - 1)
    if not is_partition(mu):
        raise WeightError(f"{mu} is not a partition")
    lam = mu_bracket_r(mu, k * d)
    if not is_dominant(lam):
        return 0
    return _s(lam, d)


def m_lambda(weight, d):
    """Alternating sum of nu over the n vectors l^1, ..., l^n."""
    _check_d(d)
    lam = dominant(weight)
    n = len(lam)
    total = 0
    for i in range(1, n + 1):
        sign = -1 if (n - i) % 2 else 1
        total += sign * _nu(lambda_sup_i(lam, i, d), d)
    return total


def e_lambda(weight, d):
    """s_{weight - (u^n)} if that is a partition, else 0."""
    _check_d(d)
    lam = dominant(weight)
    shifted = tuple(p - u_d(len(lam), d) for p in lam)
    if not is_partition(shifted):
        return 0
    return _s(shifted, d)


def a_lambda_j(weight, j, d):
    """Multiplicity of S_weight W in D_j.

    Zero unless |weight| = j (mod d); then m_l, plus (-1)^n e_l when j = 0.
    A negative result contradicts the theorem and raises
    ``VerificationFailure``.
    """
    _check_d(d)
    if not 0 <= j < d:
        raise ValueError(f"j must be in 0..{d - 1}, got {j}")
    lam = dominant(weight)
    if sum(lam) % d != j:
        return 0
    value = m_lambda(lam, d)
    if j == 0:
        value += (-1) ** len(lam) * e_lambda(lam, d)
    if value < 0:
        raise VerificationFailure(f"a^{j}_{lam} = {value} is negative", lam)
    return value


def module_character(weight, d, kmax):
    """The weights S_{l + k delta} V, 0 <= k <= kmax, of the S-module M_l
    (each with multiplicity one)."""
    lam = dominant(weight)
    if not is_partition(lam):
        raise WeightError(f"{lam} is not a partition")
    return VirtualCharacter(len(lam), {add_k_delta(lam, k, d): 1 for k in range(kmax + 1)})


def det_sym_weight(n, d):
    """(u^n), the weight of det(Sym^d W)."""
    return constant(u_d(n, d), n)


def clear_caches():
    _s.cache_clear()
    _nu.cache_clear()
