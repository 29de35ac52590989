"""Exact GL(n) character arithmetic.

A ``CharacterPoly`` is the weight-multiplicity map of a finite dimensional
representation of GL(n): exponent vector -> multiplicity.  A
``VirtualCharacter`` is an integer combination of irreducibles indexed by
dominant weights, i.e. an element of the Grothendieck group restricted to a
finite window.

Plethysm characters (symmetric powers of symmetric powers, and tensor
products of their symmetric algebras) come from a truncated product of
geometric series over the monomials, one factor per monomial.  The
multiset enumeration the definition suggests is kept as
``brute_sym_power_of_sym``; the two routes are cross-checked in the tests.
"""

import json
import os
import threading
from dataclasses import dataclass
from functools import lru_cache
from math import comb, prod

from .errors import NotACharacterError, ResourceCapExceeded, WeightError, WindowError
from .weights import dominant, dominant_weights_between, is_dominant

DEFAULT_TERM_CAP = 4_000_000
DEFAULT_MULTISET_CAP = 2_000_000


@dataclass(frozen=True)
class WeightWindow:
    """Dominant weights of length ``n`` with ``lambdan_min <= l_n`` and
    ``l_1 <= lambda1_max``, optionally restricted to ``|l| = j (mod d)``.

    ``lambda1_max < lambdan_min`` is accepted and describes the empty window.
    """

    n: int
    lambda1_max: int
    lambdan_min: int
    residue: tuple = None

    def __post_init__(self):
        if self.n < 1:
            raise WindowError(f"window needs n >= 1, got {self.n}")
        if self.residue is not None:
            j, d = self.residue
            if d < 1:
                raise WindowError(f"residue modulus must be positive, got {d}")
            object.__setattr__(self, "residue", (j % d, d))

    @property
    def is_empty(self):
        return self.lambda1_max < self.lambdan_min

    def with_residue(self, j, d):
        return WeightWindow(self.n, self.lambda1_max, self.lambdan_min, (j, d))

    def contains(self, weight):
        weight = tuple(weight)
        if len(weight) != self.n or not is_dominant(weight):
            return False
        if weight[0] > self.lambda1_max or weight[-1] < self.lambdan_min:
            return False
        if self.residue is not None:
            j, d = self.residue
            if sum(weight) % d != j:
                return False
        return True

    def weights(self):
        """All weights in the window, lexicographically decreasing."""
        for w in dominant_weights_between(self.n, self.lambda1_max, self.lambdan_min):
            if self.residue is None or sum(w) % self.residue[1] == self.residue[0]:
                yield w

    def to_dict(self):
        out = {"n": self.n, "lambda1_max": self.lambda1_max, "lambdan_min": self.lambdan_min}
        if self.residue is not None:
            out["residue"] = {"j": self.residue[0], "d": self.residue[1]}
        return out


class CharacterPoly:
    """Finitely supported map from length-n exponent vectors to positive
    multiplicities."""

    __slots__ = ("n", "terms")

    def __init__(self, n, terms=None):
        self.n = n
        self.terms = {}
        for key, mult in (terms or {}).items():
            key = tuple(key)
            if len(key) != n:
                raise WeightError(f"exponent {key} does not have length {n}")
            if mult < 0:
                raise NotACharacterError(f"negative multiplicity {mult} at {key}", key)
            if mult:
                self.terms[key] = mult

    @classmethod
    def trivial(cls, n):
        return cls(n, {(0,) * n: 1})

    def __eq__(self, other):
        return isinstance(other, CharacterPoly) and self.n == other.n and self.terms == other.terms

    def __mul__(self, other):
        return multiply(self, other)

    def __len__(self):
        return len(self.terms)

    def __repr__(self):
        return f"CharacterPoly(n={self.n}, terms={len(self.terms)}, dim={self.dimension()})"

    def dimension(self):
        return sum(self.terms.values())

    def is_symmetric(self):
        for key, mult in self.terms.items():
            if self.terms.get(tuple(sorted(key, reverse=True)), 0) != mult:
                return False
        return True


class VirtualCharacter:
    """Integer combination of irreducibles S_l, keyed by dominant weight.

    When ``window`` is set, every weight inside it carries its exact
    coefficient and lookups outside it are refused (see ``mult_of``).
    """

    __slots__ = ("n", "terms", "window")

    def __init__(self, n, terms=None, window=None):
        self.n = n
        self.window = window
        self.terms = {}
        for key, mult in (terms or {}).items():
            key = dominant(key, n)
            if mult:
                self.terms[key] = self.terms.get(key, 0) + mult
        self.terms = {k: v for k, v in self.terms.items() if v}

    def _combine(self, other, sign):
        if self.n != other.n:
            raise WeightError(f"cannot combine characters for n={self.n} and n={other.n}")
        terms = dict(self.terms)
        for key, mult in other.terms.items():
            terms[key] = terms.get(key, 0) + sign * mult
        window = self.window if self.window == other.window else None
        return VirtualCharacter(self.n, terms, window)

    def __add__(self, other):
        return self._combine(other, 1)

    def __sub__(self, other):
        return self._combine(other, -1)

    def __neg__(self):
        return VirtualCharacter(self.n, {k: -v for k, v in self.terms.items()}, self.window)

    def __rmul__(self, scalar):
        return VirtualCharacter(self.n, {k: scalar * v for k, v in self.terms.items()}, self.window)

    def __eq__(self, other):
        return isinstance(other, VirtualCharacter) and self.n == other.n and self.terms == other.terms

    def __len__(self):
        return len(self.terms)

    def __repr__(self):
        return f"VirtualCharacter(n={self.n}, {dict(self.sorted_items())})"

    def sorted_items(self):
        """(weight, coefficient) pairs, weights in descending lexicographic order."""
        return sorted(self.terms.items(), reverse=True)

    def restrict(self, window):
        return VirtualCharacter(
            self.n, {k: v for k, v in self.terms.items() if window.contains(k)}, window
        )

    def to_dict(self):
        return {
            "n": self.n,
            "entries": [{"lambda": list(k), "mult": v} for k, v in self.sorted_items()],
        }

    def to_json(self):
        return json.dumps(self.to_dict())

    @classmethod
    def from_dict(cls, data):
        return cls(data["n"], {tuple(e["lambda"]): e["mult"] for e in data["entries"]})


def mult_of(weight, character):
    """Coefficient of S_weight in ``character``; 0 if absent.

    Raises ``WindowError`` when the character carries a window and
    ``weight`` lies outside it, because the value there was never computed.
    """
    weight = tuple(weight)
    if character.window is not None and not character.window.contains(weight):
        raise WindowError(f"{weight} lies outside the window {character.window.to_dict()}")
    return character.terms.get(weight, 0)


# -- Schur characters -------------------------------------------------------


@lru_cache(maxsize=None)
def _schur_partition(lam):
    # Branching rule: strip the cells labelled n from a semistandard tableau of
    # shape lam; what remains is a tableau of an interlacing shape mu with
    # entries < n, and the stripped cells form a horizontal strip.
    n = len(lam)
    if n == 0:
        return {(): 1}
    if n == 1:
        return {lam: 1}
    total = sum(lam)
    out = {}

    def interlacing(i, prefix):
        if i == n - 1:
            yield tuple(prefix)
            return
        for m in range(lam[i + 1], lam[i] + 1):
            prefix.append(m)
            yield from interlacing(i + 1, prefix)
            prefix.pop()

    for mu in interlacing(0, []):
        last = total - sum(mu)
        for key, mult in _schur_partition(mu).items():
            k = key + (last,)
            out[k] = out.get(k, 0) + mult
    return out


def schur_char(weight):
    """Weight multiplicities of the irreducible GL(n)-representation S_weight C^n.

    Computed by counting semistandard tableaux by content.  A negative last
    part is handled by twisting with a power of the determinant.
    """
    lam = dominant(weight)
    n = len(lam)
    shift = min(lam[-1], 0) if n else 0
    base = _schur_partition(tuple(p - shift for p in lam))
    if shift:
        base = {tuple(e + shift for e in k): v for k, v in base.items()}
    return CharacterPoly(n, base)


def weyl_dimension(weight):
    """dim S_weight C^n from the Weyl dimension formula."""
    lam = dominant(weight)
    n = len(lam)
    num = prod(lam[i] - lam[j] + j - i for i in range(n) for j in range(i + 1, n))
    den = prod(j - i for i in range(n) for j in range(i + 1, n))
    return num // den


def multiply(a, b):
    """Character of the tensor product."""
    if a.n != b.n:
        raise WeightError(f"cannot multiply characters for n={a.n} and n={b.n}")
    out = {}
    for ka, va in a.terms.items():
        for kb, vb in b.terms.items():
            k = tuple(x + y for x, y in zip(ka, kb))
            out[k] = out.get(k, 0) + va * vb
    return CharacterPoly(a.n, out)


def decompose(character):
    """Write a genuine character as a nonnegative sum of Schur characters.

    Peels off the lexicographically largest exponent present, which for a
    symmetric polynomial is dominant and maximal in dominance order, and
    repeats.  Raises ``NotACharacterError`` for non-symmetric input or when a
    subtraction would go negative.
    """
    n = character.n
    if not character.is_symmetric():
        raise NotACharacterError("input is not symmetric under permuting coordinates")
    work = dict(character.terms)
    result = {}
    while work:
        lead = max(work)
        coeff = work[lead]
        if coeff < 0:
            raise NotACharacterError(f"negative coefficient {coeff} at leading weight {lead}", lead)
        result[lead] = coeff
        for key, mult in schur_char(lead).terms.items():
            left = work.get(key, 0) - coeff * mult
            if left < 0:
                raise NotACharacterError(
                    f"subtracting {coeff} x S_{lead} leaves {left} at weight {key}", key
                )
            if left:
                work[key] = left
            else:
                work.pop(key, None)
    return VirtualCharacter(n, result)


def alternant_terms(weight):
    """(sign, weight + rho - sigma(rho)) over permutations sigma, skipping
    every sigma that leaves a negative entry.

    Coordinates are filled from the last one back, so long zero tails force
    sigma to be the identity there and the search stays small.
    """
    lam = tuple(weight)
    n = len(lam)
    rho = [n - 1 - i for i in range(n)]
    exps = [0] * n
    used = [False] * n

    def rec(i, sign):
        if i < 0:
            yield sign, tuple(exps)
            return
        # v is the rho entry placed at i; the identity puts rho[i] there, so
        # each larger rho entry already placed to the right is one inversion
        for v in range(n):
            if used[v]:
                continue
            e = lam[i] + rho[i] - v
            if e < 0:
                continue
            larger = sum(1 for w in range(v + 1, n) if used[w])
            used[v] = True
            exps[i] = e
            yield from rec(i - 1, -sign if larger % 2 else sign)
            used[v] = False

    yield from rec(n - 1, 1)


def schur_multiplicity(character, weight):
    """Multiplicity of S_weight in a symmetric ``character`` without a full
    decomposition.

    Uses the coefficient of x^(weight + rho) in character * a_rho, where a_rho
    is the Vandermonde alternant.
    """
    lam = dominant(weight, character.n)
    return sum(sign * character.terms.get(e, 0) for sign, e in alternant_terms(lam))


# -- plethysm series --------------------------------------------------------


def term_cap():
    """Cap on stored terms per series; the VERONESE_CACHE_CAP environment
    variable overrides the default."""
    raw = os.environ.get("VERONESE_CACHE_CAP")
    return int(raw) if raw else DEFAULT_TERM_CAP


def monomial_exponents(n, degree):
    """All length-n exponent vectors of the given total degree, lex decreasing."""
    return list(_compositions(n, degree))


def _compositions(n, degree):
    if n == 0:
        if degree == 0:
            yield ()
        return
    if n == 1:
        yield (degree,)
        return
    for first in range(degree, -1, -1):
        for rest in _compositions(n - 1, degree - first):
            yield (first,) + rest


class _Series:
    """Character of the tensor product of Sym(Sym^k C^m) over k in
    ``degrees``, truncated at total exponent sum ``max_total``.

    Exponent vectors are packed into integers in base ``max_total + 1`` so
    that multiplying monomials is integer addition.  ``layers[t]`` holds the
    part of total degree t.
    """

    def __init__(self, degrees, m, max_total, cap):
        self.degrees = degrees
        self.m = m
        self.max_total = max_total
        self.base = max_total + 1
        layers = [dict() for _ in range(max_total + 1)]
        layers[0][0] = 1
        count = 1
        for k in degrees:
            if k > max_total:
                continue
            for w in _compositions(m, k):
                pw = self.pack(w)
                # multiply by 1/(1 - x^w): layer t is final before it feeds t + k
                for t in range(0, max_total - k + 1):
                    src = layers[t]
                    if not src:
                        continue
                    dst = layers[t + k]
                    before = len(dst)
                    for key, val in src.items():
                        nk = key + pw
                        dst[nk] = dst.get(nk, 0) + val
                    count += len(dst) - before
                    if count > cap:
                        raise ResourceCapExceeded(
                            f"plethysm series for degrees {degrees} in {m} variables up to "
                            f"degree {max_total} exceeds the cap of {cap} terms "
                            "(raise VERONESE_CACHE_CAP to allow it)"
                        )
        self.layers = layers
        self.size = count

    def pack(self, exps):
        key = 0
        for e in exps:
            key = key * self.base + e
        return key

    def unpack(self, key):
        out = []
        for _ in range(self.m):
            key, e = divmod(key, self.base)
            out.append(e)
        return tuple(reversed(out))

    def character(self, total):
        return CharacterPoly(self.m, {self.unpack(k): v for k, v in self.layers[total].items()})

    def multiplicity(self, lam):
        total = sum(lam)
        layer = self.layers[total]
        return sum(sign * layer.get(self.pack(e), 0) for sign, e in alternant_terms(lam))


_series_cache = {}
_series_lock = threading.Lock()


def _series(degrees, m, max_total):
    degrees = tuple(sorted(set(degrees)))
    key = (degrees, m)
    s = _series_cache.get(key)
    if s is not None and s.max_total >= max_total:
        return s
    with _series_lock:
        s = _series_cache.get(key)
        if s is not None and s.max_total >= max_total:
            return s
        target = max_total if s is None else max(max_total, s.max_total + s.max_total // 2)
        s = _Series(degrees, m, target, term_cap())
        _series_cache[key] = s
        return s


def prepare(degrees, m, max_total):
    """Build (or extend) the cached series ahead of a sweep."""
    _series(degrees, m, max_total)


def clear_cache():
    with _series_lock:
        _series_cache.clear()


def graded_tensor_sym_algebra(degrees, n, degree_cap):
    """Graded pieces of the tensor product of Sym(Sym^k C^n), k in ``degrees``.

    Returns ``{t: CharacterPoly}`` for every total degree 0 <= t <= degree_cap
    (pieces that vanish are returned as empty characters).
    """
    if degree_cap < 0:
        raise ValueError("degree_cap must be nonnegative")
    s = _series(degrees, n, degree_cap)
    return {t: s.character(t) for t in range(degree_cap + 1)}


def sym_power_of_sym(k, d, n):
    """Character of Sym^k(Sym^d C^n); every exponent has total degree k*d."""
    if k < 0 or d < 1 or n < 1:
        raise ValueError(f"need k >= 0, d >= 1, n >= 1; got k={k}, d={d}, n={n}")
    if k == 0:
        return CharacterPoly.trivial(n)
    return _series((d,), n, k * d).character(k * d)


def tensor_sym_multiplicity(degrees, weight):
    """Multiplicity of S_weight C^m (m = len(weight)) in the degree-|weight|
    piece of the tensor product of Sym(Sym^k C^m) over k in ``degrees``.

    Non-partitions give 0.
    """
    lam = tuple(weight)
    if not lam:
        return 1
    if lam[-1] < 0 or not is_dominant(lam):
        return 0
    return _series(degrees, len(lam), sum(lam)).multiplicity(lam)


def brute_sym_power_of_sym(k, d, n, cap=DEFAULT_MULTISET_CAP):
    """Character of Sym^k(Sym^d C^n) by enumerating size-k multisets of
    degree-d monomials.

    Independent of the series route; used as an oracle.
    """
    monos = list(_compositions(n, d))
    count = comb(len(monos) + k - 1, k)
    if count > cap:
        raise ResourceCapExceeded(
            f"Sym^{k}(Sym^{d} C^{n}) has {count} monomials, above the cap of {cap}"
        )
    if k == 0:
        return CharacterPoly.trivial(n)
    last = len(monos) - 1
    idx = [0] * k
    # partial[i] is the exponent sum of the monomials idx[0..i-1]
    partial = [(0,) * n]
    for i in range(k):
        partial.append(tuple(a + b for a, b in zip(partial[-1], monos[0])))
    out = {}
    while True:
        top = partial[k]
        out[top] = out.get(top, 0) + 1
        i = k - 1
        while i >= 0 and idx[i] == last:
            i -= 1
        if i < 0:
            break
        idx[i] += 1
        for j in range(i + 1, k):
            idx[j] = idx[i]
        del partial[i + 1 :]
        for j in range(i, k):
            partial.append(tuple(a + b for a, b in zip(partial[j], monos[idx[j]])))
    return CharacterPoly(n, out)
