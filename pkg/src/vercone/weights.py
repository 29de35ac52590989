"""Dominant weights of GL(n) and the index transforms built on them.

Weights are plain integer tuples, most significant part first.  The
``DominantWeight`` and ``Partition`` classes are tuple subclasses that
validate on construction; they hash and compare exactly like the underlying
tuple, so either form can be used as a dictionary key.

Transforms that can leave the dominant cone (``mu_bracket_r``,
``lambda_sup_i`` on small weights, ...) return plain tuples and leave the
judgement to the caller.
"""

from math import comb

from .errors import WeightError

INT64_MAX = 2**63 - 1
INT64_MIN = -(2**63)


def _check_int64(value, what="value"):
    if not INT64_MIN <= value <= INT64_MAX:
        raise OverflowError(f"{what} {value} does not fit in a signed 64-bit integer")
    return value


def _as_parts(parts):
    out = []
    for p in parts:
        if isinstance(p, bool) or int(p) != p:
            raise WeightError(f"weight entries must be integers, got {p!r}")
        out.append(_check_int64(int(p), "weight entry"))
    return tuple(out)


def is_dominant(parts):
    return all(parts[i] >= parts[i + 1] for i in range(len(parts) - 1))


def is_partition(parts):
    return is_dominant(parts) and (len(parts) == 0 or parts[-1] >= 0)


class DominantWeight(tuple):
    """A nonincreasing integer vector ``(l_1 >= ... >= l_n)``."""

    def __new__(cls, parts, n=None):
        parts = _as_parts(parts)
        if n is not None and len(parts) != n:
            raise WeightError(f"expected {n} parts, got {len(parts)}: {parts}")
        if not is_dominant(parts):
            raise WeightError(f"{parts} is not dominant (parts must be nonincreasing)")
        return super().__new__(cls, parts)

    @property
    def n(self):
        return len(self)

    @property
    def size(self):
        return size(self)

    def __repr__(self):
        return f"{type(self).__name__}({tuple(self)!r})"


class Partition(DominantWeight):
    """A dominant weight with nonnegative parts."""

    def __new__(cls, parts, n=None):
        self = super().__new__(cls, parts, n)
        if len(self) and self[-1] < 0:
            raise WeightError(f"{tuple(self)} has a negative part, not a partition")
        return self


def dominant(parts, n=None):
    """Validate ``parts`` as a dominant weight and return it as a plain tuple."""
    return tuple(DominantWeight(parts, n))


def size(weight):
    """|l| = l_1 + ... + l_n."""
    return _check_int64(sum(weight), "weight size")


def u_d(n, d):
    """Exponent of det(W) in det(Sym^d W): binomial(n-1+d, n)."""
    if n < 1 or d < 2:
        raise ValueError(f"u_d needs n >= 1 and d >= 2, got n={n}, d={d}")
    return _check_int64(comb(n - 1 + d, n), "u_d")


def n_d(n, d):
    """Codimension of the degree-d Veronese cone: binomial(n-1+d, d) - n."""
    if n < 1 or d < 2:
        raise ValueError(f"n_d needs n >= 1 and d >= 2, got n={n}, d={d}")
    return _check_int64(comb(n - 1 + d, d) - n, "n_d")


def _index(weight, i):
    if not 1 <= i <= len(weight):
        raise IndexError(f"index i={i} out of range 1..{len(weight)}")


def lambda_sup_i(weight, i, d):
    """The length n-1 vector obtained from ``weight`` by deleting the i-th part
    (1-based), raising the earlier parts by one, and shifting all by -u_d.

    The result is always nonincreasing but need not be a partition.
    """
    weight = dominant(weight)
    _index(weight, i)
    u = u_d(len(weight), d)
    head = tuple(p + 1 - u for p in weight[: i - 1])
    tail = tuple(p - u for p in weight[i:])
    return head + tail


def tilde_lambda_sup_i(weight, i):
    """Same as ``lambda_sup_i`` without the -u_d shift."""
    weight = dominant(weight)
    _index(weight, i)
    return tuple(p + 1 for p in weight[: i - 1]) + tuple(weight[i:])


def mu_bracket_r(mu, r):
    """``(r - |mu|, mu_1, ..., mu_{n-1})``; dominant iff ``r - |mu| >= mu_1``."""
    mu = tuple(mu)
    return (r - size(mu),) + mu


def is_hook(weight):
    """True when the second part is at most 1 (vacuous for n = 1)."""
    return len(weight) < 2 or weight[1] <= 1


def contains(lam, mu):
    """Componentwise ``lam >= mu`` (Young diagram containment)."""
    if len(lam) != len(mu):
        raise WeightError(f"length mismatch: {tuple(lam)} vs {tuple(mu)}")
    return all(a >= b for a, b in zip(lam, mu))


def add_k_delta(weight, k, d):
    """``weight + k*(d, 0, ..., 0)``."""
    weight = tuple(weight)
    if not weight:
        return weight
    return (weight[0] + k * d,) + weight[1:]


def drop_first(weight):
    return tuple(weight)[1:]


def det_twist(weight, c):
    """``weight + (c, ..., c)``; tensoring with the c-th power of the determinant."""
    return tuple(p + c for p in weight)


def dual(weight):
    """``(-l_n, ..., -l_1)``, the weight of the dual representation."""
    return tuple(-p for p in reversed(tuple(weight)))


def constant(u, n):
    """The weight ``(u^n)``."""
    return (u,) * n


def dominant_weights_between(n, max_part, min_part=0, total=None):
    """Nonincreasing length-n tuples with entries in [min_part, max_part].

    With ``total`` given, only those of that size.  Yields in lexicographically
    decreasing order.
    """

    def rec(prefix, remaining, upper):
        if remaining == 0:
            if total is None or sum(prefix) == total:
                yield tuple(prefix)
            return
        for p in range(upper, min_part - 1, -1):
            if total is not None:
                s = sum(prefix) + p
                # the rest are between min_part and p
                if s + (remaining - 1) * min_part > total or s + (remaining - 1) * p < total:
                    continue
            prefix.append(p)
            yield from rec(prefix, remaining - 1, p)
            prefix.pop()

    if max_part < min_part:
        return
    yield from rec([], n, max_part)
