"""Sparse integer polynomials, key polynomials, and split-Schur expansions.

A Poly is a map from exponent tuples to nonzero integer coefficients, with a
fixed variable count. Everything is exact: Demazure operators use the
telescoping quotient term by term, Schur polynomials come from the branching
recursion, and expansions subtract basis elements until the remainder is 0.

A split set D = {d_1 < ... < d_k} inside [n-1] cuts x_1..x_n into consecutive
blocks. Polynomials symmetric within every block form the ring Pi_D, whose
basis is the products of one Schur polynomial per block ("D-Schur" products).
`split_expand` peels the lexicographically largest monomial, whose per-block
exponents are weakly decreasing and name the basis element to subtract.
`expand_in_keys` runs the same loop from the lexicographically smallest
monomial, which names a key polynomial.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import product as _iproduct

from .typea import act_on_composition, left_descents


class Poly:
    """Sparse polynomial with integer coefficients in nvars variables."""

    __slots__ = ("nvars", "terms")

    def __init__(self, nvars: int, terms: dict | None = None):
        self.nvars = nvars
        self.terms = terms or {}

    @staticmethod
    def zero(nvars: int) -> "Poly":
        return Poly(nvars)

    @staticmethod
    def one(nvars: int) -> "Poly":
        return Poly(nvars, {(0,) * nvars: 1})

    @staticmethod
    def monomial(exps, coeff: int = 1) -> "Poly":
        exps = tuple(exps)
        if coeff == 0:
            return Poly(len(exps))
        return Poly(len(exps), {exps: coeff})

    @staticmethod
    def variable(i: int, nvars: int) -> "Poly":
        exp = tuple(1 if j == i - 1 else 0 for j in range(nvars))
        return Poly(nvars, {exp: 1})

    def _check(self, other: "Poly"):
        if self.nvars != other.nvars:
            raise ValueError("polynomials live in different variable counts")

    def __add__(self, other: "Poly") -> "Poly":
        self._check(other)
        out = dict(self.terms)
        for e, c in other.terms.items():
            nc = out.get(e, 0) + c
            if nc:
                out[e] = nc
            else:
                out.pop(e, None)
        return Poly(self.nvars, out)

    def __sub__(self, other: "Poly") -> "Poly":
        self._check(other)
        out = dict(self.terms)
        for e, c in other.terms.items():
            nc = out.get(e, 0) - c
            if nc:
                out[e] = nc
            else:
                out.pop(e, None)
        return Poly(self.nvars, out)

    def __mul__(self, other):
        if isinstance(other, int):
            return self.scale(other)
        self._check(other)
        out: dict = {}
        a, b = self.terms, other.terms
        if len(a) > len(b):
            a, b = b, a
        for e1, c1 in a.items():
            for e2, c2 in b.items():
                e = tuple(x + y for x, y in zip(e1, e2))
                nc = out.get(e, 0) + c1 * c2
                if nc:
                    out[e] = nc
                else:
                    del out[e]
        return Poly(self.nvars, out)

    __rmul__ = __mul__

    def scale(self, c: int) -> "Poly":
        if c == 0:
            return Poly(self.nvars)
        return Poly(self.nvars, {e: c * v for e, v in self.terms.items()})

    def __eq__(self, other):
        return (
            isinstance(other, Poly)
            and self.nvars == other.nvars
            and self.terms == other.terms
        )

    def __bool__(self):
        return bool(self.terms)

    def coeff(self, exps) -> int:
        return self.terms.get(tuple(exps), 0)

    def swap_variables(self, j: int) -> "Poly":
        """Exchange x_j and x_{j+1} (1-based)."""
        out = {}
        for e, c in self.terms.items():
            le = list(e)
            le[j - 1], le[j] = le[j], le[j - 1]
            out[tuple(le)] = c
        return Poly(self.nvars, out)

    def is_symmetric_in(self, j: int) -> bool:
        for e, c in self.terms.items():
            if e[j - 1] != e[j]:
                le = list(e)
                le[j - 1], le[j] = le[j], le[j - 1]
                if self.terms.get(tuple(le), 0) != c:
                    return False
        return True

    def __str__(self):
        if not self.terms:
            return "0"
        bits = []
        for e in sorted(self.terms, reverse=True):
            c = self.terms[e]
            mono = " ".join(
                f"x{i + 1}^{p}" if p > 1 else f"x{i + 1}"
                for i, p in enumerate(e)
                if p
            )
            bits.append(f"{c} * {mono}" if mono else str(c))
        return "  +  ".join(bits)

    __repr__ = __str__


def demazure_pi(j: int, f: Poly) -> Poly:
    """Isobaric divided difference (x_j f - x_{j+1} s_j f) / (x_j - x_{j+1}).

    The quotient is exact and expands monomial by monomial:
    for p >= q the pair x_j^p x_{j+1}^q contributes the shuffle sum
    x^{p} y^{q} + x^{p-1} y^{q+1} + ... + x^{q} y^{p}; for p < q it
    contributes the negated interior sum.
    """
    if not 1 <= j <= f.nvars - 1:
        raise ValueError(f"operator index {j} out of range 1..{f.nvars - 1}")
    out: dict = {}

    def bump(e, c):
        nc = out.get(e, 0) + c
        if nc:
            out[e] = nc
        else:
            del out[e]

    for e, c in f.terms.items():
        p, q = e[j - 1], e[j]
        le = list(e)
        if p >= q:
            for t in range(p - q + 1):
                le[j - 1], le[j] = p - t, q + t
                bump(tuple(le), c)
        else:
            for t in range(q - p - 1):
                le[j - 1], le[j] = q - 1 - t, p + 1 + t
                bump(tuple(le), -c)
    return Poly(f.nvars, out)


def key_polynomial(alpha, cache: dict | None = None) -> Poly:
    """Key polynomial of a weak composition, by the sorting recursion.

    Weakly decreasing alpha gives the monomial x^alpha; otherwise swap an
    ascent pair and apply the Demazure operator there. An explicit `cache`
    dict may be shared across calls that walk the same orbit of exponents.
    """
    alpha = tuple(alpha)
    if cache is None:
        cache = {}

    def build(a: tuple) -> Poly:
        got = cache.get(a)
        if got is not None:
            return got
        j = next((i for i in range(len(a) - 1) if a[i] < a[i + 1]), None)
        if j is None:
            out = Poly.monomial(a)
        else:
            hat = list(a)
            hat[j], hat[j + 1] = hat[j + 1], hat[j]
            out = demazure_pi(j + 1, build(tuple(hat)))
        cache[a] = out
        return out

    return build(alpha)


def key_via_kohnert(alpha) -> Poly:
    """Key polynomial by diagram moves, an independent route.

    Start from the left-justified diagram of alpha; a move takes the
    rightmost cell of a row to the nearest empty position above it in its
    column (smaller row index, jumping over filled cells). Sum x^(row
    weights) over all distinct reachable diagrams.
    """
    alpha = tuple(alpha)
    n = len(alpha)
    start = frozenset(
        (r, c) for r, a in enumerate(alpha, start=1) for c in range(1, a + 1)
    )
    seen = {start}
    frontier = [start]
    while frontier:
        nxt = []
        for diag in frontier:
            rows: dict[int, int] = {}
            for r, c in diag:
                if c > rows.get(r, 0):
                    rows[r] = c
            for r, c in rows.items():
                target = None
                for rr in range(r - 1, 0, -1):
                    if (rr, c) not in diag:
                        target = rr
                        break
                if target is not None:
                    moved = frozenset(diag - {(r, c)} | {(target, c)})
                    if moved not in seen:
                        seen.add(moved)
                        nxt.append(moved)
        frontier = nxt
    out: dict = {}
    for diag in seen:
        weight = [0] * n
        for r, _ in diag:
            weight[r - 1] += 1
        e = tuple(weight)
        out[e] = out.get(e, 0) + 1
    return Poly(n, out)


@lru_cache(maxsize=None)
def _schur_cached(lam: tuple[int, ...], m: int) -> Poly:
    if m == 0:
        return Poly.one(0)
    if not lam:
        return Poly.one(m)
    if len(lam) > m:
        raise ValueError(f"partition {lam} has more than {m} parts")
    out: dict = {}
    ranges = [range(lam[i + 1] if i + 1 < len(lam) else 0, lam[i] + 1)
              for i in range(len(lam))]
    total = sum(lam)
    for mu in _iproduct(*ranges):
        mu_clean = tuple(p for p in mu if p)
        if len(mu_clean) > m - 1:
            continue
        sub = _schur_cached(mu_clean, m - 1)
        last = total - sum(mu)
        for e, c in sub.terms.items():
            key = e + (last,)
            out[key] = out.get(key, 0) + c
    return Poly(m, out)


def schur(lam, m: int) -> Poly:
    """Schur polynomial s_lam(x_1..x_m) via the one-variable branching rule."""
    lam = tuple(p for p in lam if p)
    if any(lam[i] < lam[i + 1] for i in range(len(lam) - 1)) or any(
        p < 0 for p in lam
    ):
        raise ValueError(f"{lam} is not a partition")
    return _schur_cached(lam, m)


@dataclass(frozen=True)
class SplitSet:
    """Block structure on x_1..x_n cut after the positions in D."""

    n: int
    D: tuple[int, ...]

    def __post_init__(self):
        D = tuple(sorted(set(self.D)))
        object.__setattr__(self, "D", D)
        if any(not 1 <= d <= self.n - 1 for d in D):
            raise ValueError(f"split positions {D} must lie in 1..{self.n - 1}")

    @property
    def blocks(self) -> tuple[tuple[int, int], ...]:
        """Inclusive 1-based (start, end) per block."""
        cuts = (0,) + self.D + (self.n,)
        return tuple(
            (cuts[i] + 1, cuts[i + 1]) for i in range(len(cuts) - 1)
        )

    def block_sizes(self) -> tuple[int, ...]:
        return tuple(b - a + 1 for a, b in self.blocks)


@dataclass
class SplitExpansion:
    """Coefficients of a polynomial on the D-Schur basis of Pi_D.

    Keys are tuples of per-block partitions, each padded with zeros to its
    block size; values are the (nonzero) integer coefficients.
    """

    split: SplitSet
    coefficients: dict

    def __eq__(self, other):
        return (
            isinstance(other, SplitExpansion)
            and self.split == other.split
            and self.coefficients == other.coefficients
        )

    def is_multiplicity_free(self) -> bool:
        return all(c == 1 for c in self.coefficients.values())

    def reconstruct(self) -> Poly:
        out = Poly.zero(self.split.n)
        for lams, c in self.coefficients.items():
            out = out + d_schur(self.split, lams).scale(c)
        return out

    def to_json_dict(self) -> dict:
        terms = [
            {"lambdas": [list(lam) for lam in lams], "coeff": c}
            for lams, c in sorted(self.coefficients.items(), reverse=True)
        ]
        return {"n": self.split.n, "D": list(self.split.D), "terms": terms}


@lru_cache(maxsize=100000)
def _embedded_schur(lam: tuple[int, ...], start: int, size: int, n: int) -> Poly:
    base = schur(lam, size)
    out = {}
    for e, c in base.terms.items():
        full = [0] * n
        full[start - 1 : start - 1 + size] = e
        out[tuple(full)] = c
    return Poly(n, out)


def d_schur(split: SplitSet, lams) -> Poly:
    """Product of one Schur polynomial per block."""
    lams = tuple(tuple(lam) for lam in lams)
    if len(lams) != len(split.blocks):
        raise ValueError("one partition per block required")
    out = Poly.one(split.n)
    for (a, b), lam in zip(split.blocks, lams):
        lam_clean = tuple(p for p in lam if p)
        if len(lam_clean) > b - a + 1:
            raise ValueError(f"partition {lam} too long for block {(a, b)}")
        out = out * _embedded_schur(lam_clean, a, b - a + 1, split.n)
    return out


def is_split_symmetric(f: Poly, split: SplitSet) -> bool:
    if f.nvars != split.n:
        raise ValueError("variable count does not match the split")
    for a, b in split.blocks:
        for j in range(a, b):
            if not f.is_symmetric_in(j):
                return False
    return True


def _read_block_partitions(split: SplitSet, exps) -> tuple:
    lams = []
    for a, b in split.blocks:
        lam = tuple(exps[a - 1 : b])
        if any(lam[i] < lam[i + 1] for i in range(len(lam) - 1)):
            raise ValueError(
                "leading monomial is not weakly decreasing per block; "
                "input is not split-symmetric"
            )
        lams.append(lam)
    return tuple(lams)


def split_expand(f: Poly, split: SplitSet, *, _halt_on_multiplicity=False):
    """Expand a split-symmetric polynomial on the D-Schur basis.

    Greedy peeling: the lex-largest monomial of any element of Pi_D is
    weakly decreasing inside each block and is the lead monomial (with
    coefficient 1) of exactly one D-Schur product; subtract and repeat.
    """
    if not is_split_symmetric(f, split):
        raise ValueError("polynomial is not split-symmetric for this D")
    if all(s == 1 for s in split.block_sizes()):
        coeffs = {
            tuple((p,) for p in e): c for e, c in f.terms.items()
        }
        if _halt_on_multiplicity and any(
            c != 1 for c in coeffs.values()
        ):
            return None
        return SplitExpansion(split, coeffs)
    rem = dict(f.terms)
    out: dict = {}
    while rem:
        lead = max(rem)
        c = rem[lead]
        if _halt_on_multiplicity and c != 1:
            return None
        lams = _read_block_partitions(split, lead)
        out[lams] = c
        for e, cc in d_schur(split, lams).terms.items():
            nc = rem.get(e, 0) - c * cc
            if nc:
                rem[e] = nc
            else:
                rem.pop(e, None)
    return SplitExpansion(split, out)


def is_D_multiplicity_free(f: Poly, split: SplitSet) -> bool:
    """True iff every D-Schur coefficient of f lies in {0, 1}."""
    return split_expand(f, split, _halt_on_multiplicity=True) is not None


def expand_in_keys(f: Poly) -> dict:
    """Coefficients of f on the key-polynomial basis.

    The lex-smallest monomial of a key polynomial is its own index (with
    coefficient 1), so peeling from the bottom is exact.
    """
    rem = dict(f.terms)
    out: dict = {}
    cache: dict = {}
    while rem:
        low = min(rem)
        c = rem[low]
        out[low] = c
        for e, cc in key_polynomial(low, cache).terms.items():
            nc = rem.get(e, 0) - c * cc
            if nc:
                rem[e] = nc
            else:
                rem.pop(e, None)
    return out


def split_expand_via_solver(f: Poly, split: SplitSet) -> SplitExpansion:
    """Independent expansion oracle: exact linear solve against all candidate
    D-Schur products. Exponential; test and cross-check use only."""
    if not is_split_symmetric(f, split):
        raise ValueError("polynomial is not split-symmetric for this D")
    blocks = split.blocks
    profiles = {}
    for e, c in f.terms.items():
        prof = tuple(sum(e[a - 1 : b]) for a, b in blocks)
        profiles.setdefault(prof, {})[e] = c
    coeffs: dict = {}
    for prof, sub in profiles.items():
        cands = []
        per_block = [
            _partitions_fixed(total, b - a + 1) for total, (a, b) in zip(prof, blocks)
        ]
        for lams in _iproduct(*per_block):
            cands.append(lams)
        polys = [d_schur(split, lams) for lams in cands]
        monos = sorted(
            set(sub) | {e for p in polys for e in p.terms}, reverse=True
        )
        mindex = {e: i for i, e in enumerate(monos)}
        rows = len(monos)
        mat = [[Fraction(0)] * len(cands) for _ in range(rows)]
        rhs = [Fraction(sub.get(e, 0)) for e in monos]
        for cidx, p in enumerate(polys):
            for e, c in p.terms.items():
                mat[mindex[e]][cidx] = Fraction(c)
        sol = _solve_exact(mat, rhs)
        for lams, value in zip(cands, sol):
            if value:
                assert value.denominator == 1
                coeffs[lams] = int(value)
    return SplitExpansion(split, coeffs)


def _partitions_fixed(total: int, max_parts: int):
    """Partitions of `total` with at most max_parts parts, zero padded."""
    out = []

    def rec(rest, maxpart, acc):
        if rest == 0:
            out.append(tuple(acc) + (0,) * (max_parts - len(acc)))
            return
        if len(acc) == max_parts:
            return
        for p in range(min(rest, maxpart), 0, -1):
            rec(rest - p, p, acc + [p])

    rec(total, total, [])
    return out


def _solve_exact(mat, rhs):
    """Gaussian elimination over the rationals; requires a unique solution."""
    rows, cols = len(mat), len(mat[0]) if mat else 0
    pivots = []
    r = 0
    for c in range(cols):
        pivot = next((i for i in range(r, rows) if mat[i][c] != 0), None)
        if pivot is None:
            continue
        mat[r], mat[pivot] = mat[pivot], mat[r]
        rhs[r], rhs[pivot] = rhs[pivot], rhs[r]
        inv = 1 / mat[r][c]
        mat[r] = [v * inv for v in mat[r]]
        rhs[r] = rhs[r] * inv
        for i in range(rows):
            if i != r and mat[i][c] != 0:
                factor = mat[i][c]
                mat[i] = [a - factor * b for a, b in zip(mat[i], mat[r])]
                rhs[i] = rhs[i] - factor * rhs[r]
        pivots.append(c)
        r += 1
        if r == rows:
            break
    if len(pivots) != cols:
        raise ValueError("expansion is not unique; basis candidates degenerate")
    for i in range(r, rows):
        if rhs[i] != 0:
            raise ValueError("inconsistent system; input outside the span")
    sol = [Fraction(0)] * cols
    for row, c in enumerate(pivots):
        sol[c] = rhs[row]
    return sol


def staircase_composition(line) -> tuple[int, ...]:
    """w applied to (n, n-1, ..., 1)."""
    n = len(line)
    return act_on_composition(line, tuple(range(n, 0, -1)))


def staircase_test(line, I) -> bool:
    """Multiplicity-freeness of the staircase key for D = [n-1] - I.

    `line` is a one-line permutation; I must sit inside its left descents.
    """
    n = len(line)
    I = frozenset(I)
    if not I <= set(left_descents(line)):
        raise ValueError("I is not a subset of the left descent set of w")
    D = tuple(j for j in range(1, n) if j not in I)
    split = SplitSet(n, D)
    return is_D_multiplicity_free(key_polynomial(staircase_composition(line)), split)
