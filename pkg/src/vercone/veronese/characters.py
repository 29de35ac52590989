"""Windowed characters of D_0, ..., D_{d-1} and E, plus table export."""

import csv
import io
import json
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field

from ..charpoly import VirtualCharacter, WeightWindow, prepare
from ..weights import u_d
from .multiplicities import a_lambda_j, e_lambda, m_lambda

KINDS = ("s", "a_pleth", "p", "nu", "m", "e", "a_j")


def prepare_window(d, window):
    """Size the plethysm caches for every lookup a sweep over ``window`` makes."""
    n = window.n
    u = u_d(n, d)
    if window.is_empty:
        return
    nu_reach = max(0, (n - 1) * (window.lambda1_max + 1 - u))
    if n > 1 and nu_reach:
        prepare(range(2, d + 1), n - 1, nu_reach)
    e_reach = max(0, n * (window.lambda1_max - u))
    if e_reach:
        prepare((d,), n, e_reach - e_reach % d)


def _sweep(func, weights, workers):
    if workers and workers > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            return list(pool.map(func, weights))
    return [func(w) for w in weights]


def dj_character(j, d, window, workers=1):
    """Character of D_j on the window, complete for |l| = j (mod d)."""
    if not 0 <= j < d:
        raise ValueError(f"j must be in 0..{d - 1}, got {j}")
    win = window.with_residue(j, d)
    prepare_window(d, window)
    weights = list(win.weights())
    values = _sweep(lambda lam: a_lambda_j(lam, j, d), weights, workers)
    return VirtualCharacter(window.n, dict(zip(weights, values)), win)


def e_character(d, window, workers=1):
    """Character of E = det(Sym^d W) (x) Sym(Sym^d W) on the window."""
    prepare_window(d, window)
    weights = list(window.weights())
    values = _sweep(lambda lam: e_lambda(lam, d), weights, workers)
    return VirtualCharacter(window.n, dict(zip(weights, values)), window)


def m_character(d, window, workers=1):
    """sum_l m_l S_l W on the window (all residues)."""
    prepare_window(d, window)
    weights = list(window.weights())
    values = _sweep(lambda lam: m_lambda(lam, d), weights, workers)
    return VirtualCharacter(window.n, dict(zip(weights, values)), window)


def d2_table_predicate(weight, n=None):
    """Which of D_0, D_1 (d = 2) contains S_weight W, from the closed-form
    table; ``None`` if neither."""
    lam = tuple(weight)
    n = len(lam) if n is None else n
    head, last = lam[: n - 1], lam[n - 1]
    if not all(p >= n for p in head):
        return None
    if n % 2 == 0:
        if all(p % 2 == 0 for p in head):
            if last % 2 == 0:
                return "D0"
            if last <= n - 1:
                return "D1"
        return None
    if all(p % 2 == 1 for p in head):
        if last % 2 == 1:
            return "D1"
        if last <= n - 1:
            return "D0"
    return None


@dataclass
class MultiplicityTable:
    kind: str
    n: int
    d: int
    window: WeightWindow
    entries: dict = field(default_factory=dict)
    j: int = None

    def __post_init__(self):
        if self.kind not in KINDS:
            raise ValueError(f"unknown table kind {self.kind!r}")

    @classmethod
    def from_character(cls, kind, d, character, j=None):
        return cls(kind, character.n, d, character.window, dict(character.terms), j)

    def sorted_items(self):
        return sorted(((k, v) for k, v in self.entries.items() if v), reverse=True)

    def to_dict(self):
        return {
            "kind": self.kind,
            "n": self.n,
            "d": self.d,
            "j": self.j,
            "window": self.window.to_dict() if self.window else None,
            "entries": [{"lambda": list(k), "mult": v} for k, v in self.sorted_items()],
        }

    def to_json(self):
        return json.dumps(self.to_dict())

    def to_csv(self):
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow([f"lambda_{i + 1}" for i in range(self.n)] + ["mult"])
        for k, v in self.sorted_items():
            writer.writerow(list(k) + [v])
        return buf.getvalue()
