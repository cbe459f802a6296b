"""The ambient polynomial ring Z[a_1..a_k][x_1..x_k] and its reduction ideal.

The quotient ring is presented as P/J where J is generated by the k
polynomials

    b_i = h_{n-k+i}(x_i, ..., x_k)
          - sum_{t=0}^{i-1} (-1)^t e_t(x_1, ..., x_{i-1}) a_{i-t}

whose deglex leading terms x_i^{n-k+i} are pairwise coprime, so {b_1..b_k}
is a Groebner basis and division needs nothing beyond a per-coordinate
exponent check.  Monomials are compared degree-lexicographically with
x_1 > x_2 > ... > x_k.
"""

from functools import lru_cache
from itertools import combinations

from .apoly import APoly, attach_coefficient, iter_poly_terms
import re


def deglex_key(mono):
    """Sort key: ascending by total degree, then lexicographically with a
    larger exponent on an earlier variable winning."""
    return (sum(mono), mono)


def deglex_compare(u, v):
    """-1, 0, or 1 as u <, =, > v in deglex."""
    ku, kv = deglex_key(u), deglex_key(v)
    return (ku > kv) - (ku < kv)


class XPoly:
    """Sparse polynomial in x_1..x_k with APoly coefficients."""

    __slots__ = ("k", "terms")

    def __init__(self, k, terms=None):
        self.k = k
        self.terms = {}
        if terms:
            for mono, c in terms.items():
                mono = tuple(mono)
                if len(mono) != k:
                    raise ValueError(f"monomial {mono} is not length {k}")
                c = c if isinstance(c, APoly) else APoly.const(c)
                if c:
                    self.terms[mono] = c

    @classmethod
    def zero(cls, k):
        return cls(k)

    @classmethod
    def monomial(cls, k, mono, c=1):
        return cls(k, {tuple(mono): c})

    @classmethod
    def const(cls, k, c):
        return cls(k, {(0,) * k: c})

    def _check_same(self, other):
        if self.k != other.k:
            raise ValueError(f"mixed variable counts {self.k} and {other.k}")

    def __bool__(self):
        return bool(self.terms)

    def __eq__(self, other):
        if not isinstance(other, XPoly):
            return NotImplemented
        return self.k == other.k and self.terms == other.terms

    def __add__(self, other):
        if not isinstance(other, XPoly):
            return NotImplemented
        self._check_same(other)
        out = dict(self.terms)
        for m, c in other.terms.items():
            s = out.get(m)
            s = c if s is None else s + c
            if s:
                out[m] = s
            else:
                out.pop(m, None)
        p = XPoly(self.k)
        p.terms = out
        return p

    def __neg__(self):
        p = XPoly(self.k)
        p.terms = {m: -c for m, c in self.terms.items()}
        return p

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, (int, APoly)):
            other_c = other if isinstance(other, APoly) else APoly.const(other)
            if not other_c:
                return XPoly(self.k)
            p = XPoly(self.k)
            p.terms = {m: c * other_c for m, c in self.terms.items()}
            return p
        if not isinstance(other, XPoly):
            return NotImplemented
        self._check_same(other)
        out = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                m = tuple(a + b for a, b in zip(m1, m2))
                c = c1 * c2
                s = out.get(m)
                s = c if s is None else s + c
                if s:
                    out[m] = s
                else:
                    out.pop(m, None)
        p = XPoly(self.k)
        p.terms = out
        return p

    __rmul__ = __mul__

    def leading_monomial(self):
        if not self.terms:
            raise ValueError("the zero polynomial has no leading monomial")
        return max(self.terms, key=deglex_key)

    def render(self):
        """Canonical text: terms in descending deglex; single-monomial
        coefficients are inlined with sign extraction, general coefficients
        parenthesized (or inlined for the x-constant term)."""
        if not self.terms:
            return "0"
        pieces = []
        for idx, mono in enumerate(sorted(self.terms, key=deglex_key,
                                          reverse=True)):
            c = self.terms[mono]
            xfactors = []
            for i, power in enumerate(mono):
                if power == 0:
                    continue
                sym = f"x{i + 1}"
                xfactors.append(sym if power == 1 else f"{sym}^{power}")
            body, positive = attach_coefficient(c, xfactors)
            if idx == 0:
                pieces.append(body if positive else "-" + body)
            else:
                pieces.append((" + " if positive else " - ") + body)
        return "".join(pieces)

    def __repr__(self):
        return self.render()


def parse_xpoly(text, k):
    """Parse polynomial text in x_1..x_k with a_1..a_k coefficients."""
    result = XPoly(k)
    for coeff, powers in iter_poly_terms(text):
        xexp = [0] * k
        aexp = {}
        for name, power in powers.items():
            m = re.fullmatch(r"([ax])(\d+)", name)
            if not m:
                raise ValueError(f"unknown symbol {name!r}")
            idx = int(m.group(2))
            if not 1 <= idx <= k:
                raise ValueError(f"symbol {name!r} out of range for k={k}")
            if m.group(1) == "x":
                xexp[idx - 1] += power
            else:
                aexp[idx - 1] = aexp.get(idx - 1, 0) + power
        width = max(aexp) + 1 if aexp else 0
        c = APoly.monomial(tuple(aexp.get(j, 0) for j in range(width)), coeff)
        result = result + XPoly.monomial(k, tuple(xexp), c)
    return result


# -- symmetric polynomial generators ----------------------------------------

def h_on_vars(m, k, lo=1):
    """Complete homogeneous h_m(x_lo, ..., x_k) as an XPoly in k variables.
    h_0 = 1; h_m = 0 when m < 0 or the variable range is empty with m > 0."""
    if m < 0:
        return XPoly(k)
    if m == 0:
        return XPoly.const(k, 1)
    if lo > k:
        return XPoly(k)
    out = {}

    def rec(i, remaining, mono):
        if i == k - 1:
            out[tuple(mono) + (remaining,)] = APoly.const(1)
            return
        for d in range(remaining + 1):
            rec(i + 1, remaining - d, mono + [d])

    rec(lo - 1, m, [0] * (lo - 1))
    p = XPoly(k)
    p.terms = out
    return p


def e_on_vars(t, k, hi=None):
    """Elementary e_t(x_1, ..., x_hi) as an XPoly in k variables; e_0 = 1,
    e_t = 0 for t < 0 or t > hi."""
    if hi is None:
        hi = k
    if t < 0 or t > hi:
        return XPoly(k)
    if t == 0:
        return XPoly.const(k, 1)
    out = {}
    for subset in combinations(range(hi), t):
        mono = [0] * k
        for i in subset:
            mono[i] = 1
        out[tuple(mono)] = APoly.const(1)
    p = XPoly(k)
    p.terms = out
    return p


def power_sum_xpoly(r, k):
    """The power sum x_1^r + ... + x_k^r (r >= 1)."""
    if r < 1:
        raise ValueError("power sum index must be >= 1")
    p = XPoly(k)
    for i in range(k):
        mono = [0] * k
        mono[i] = r
        p = p + XPoly.monomial(k, tuple(mono), 1)
    return p


@lru_cache(maxsize=None)
def groebner_generators(k, n):
    """The Groebner basis (b_1, ..., b_k) of the defining ideal, deglex
    leading terms x_i^{n-k+i}."""
    if not 1 <= k <= n:
        raise ValueError(f"need 1 <= k <= n, got k={k}, n={n}")
    gens = []
    for i in range(1, k + 1):
        b = h_on_vars(n - k + i, k, lo=i)
        for t in range(i):
            sign = -1 if t % 2 else 1
            b = b - e_on_vars(t, k, hi=i - 1) * (APoly.gen(i - t) * sign)
        gens.append(b)
    return tuple(gens)


@lru_cache(maxsize=None)
def _reduction_tails(k, n):
    """tails[i] = x_i^{n-k+i} - b_i, i.e. what the leading power rewrites to."""
    tails = []
    for i, b in enumerate(groebner_generators(k, n), start=1):
        lead = [0] * k
        lead[i - 1] = n - k + i
        tails.append(XPoly.monomial(k, tuple(lead), 1) - b)
    return tuple(tails)


def normal_form(k, n, p):
    """The unique representative of p modulo the ideal supported on monomials
    with every exponent alpha_i < n - k + i.  Repeatedly rewrites the deglex
    leading reducible monomial."""
    if p.k != k:
        raise ValueError(f"polynomial has {p.k} variables, context has {k}")
    bounds = tuple(n - k + i for i in range(1, k + 1))
    tails = _reduction_tails(k, n)
    terms = dict(p.terms)
    while True:
        worst = None
        for mono in terms:
            for i in range(k):
                if mono[i] >= bounds[i]:
                    if worst is None or deglex_key(mono) > deglex_key(worst):
                        worst = mono
                    break
        if worst is None:
            break
        c = terms.pop(worst)
        i = next(j for j in range(k) if worst[j] >= bounds[j])
        rem = list(worst)
        rem[i] -= bounds[i]
        for tmono, tc in tails[i].terms.items():
            m = tuple(r + t for r, t in zip(rem, tmono))
            s = terms.get(m)
            s = c * tc if s is None else s + c * tc
            if s:
                terms[m] = s
            else:
                terms.pop(m, None)
    out = XPoly(k)
    out.terms = terms
    return out


def is_normal(k, n, p):
    """True iff no monomial of p is divisible by any x_i^{n-k+i}."""
    bounds = tuple(n - k + i for i in range(1, k + 1))
    return all(all(m[i] < bounds[i] for i in range(k)) for m in p.terms)


def monomial_basis(k, n):
    """All monomials x^alpha with alpha_i < n - k + i, in ascending deglex
    order; a Z[a]-module basis of the quotient, of size n(n-1)...(n-k+1)."""
    if not 1 <= k <= n:
        raise ValueError(f"need 1 <= k <= n, got k={k}, n={n}")
    monos = [()]
    for i in range(1, k + 1):
        monos = [m + (e,) for m in monos for e in range(n - k + i)]
    return sorted(monos, key=deglex_key)


@lru_cache(maxsize=None)
def schur_xpoly(lam, k):
    """The Schur polynomial s_lam(x_1, ..., x_k), computed by enumerating
    semistandard tableaux of shape lam with entries at most k.  Zero when
    lam has more than k rows."""
    from .partitions import check_partition
    lam = check_partition(lam)
    if len(lam) > k:
        return XPoly(k)
    if not lam:
        return XPoly.const(k, 1)
    out = {}

    def fill_row(r, prev_row, content):
        if r == len(lam):
            mono = tuple(content)
            out[mono] = out.get(mono, 0) + 1
            return
        width = lam[r]

        def fill_cell(c, lo, content):
            if c == width:
                fill_row(r + 1, row, content)
                return
            floor = prev_row[c] + 1 if prev_row and c < len(prev_row) else 1
            for v in range(max(lo, floor), k + 1):
                row[c] = v
                content[v - 1] += 1
                fill_cell(c + 1, v, content)
                content[v - 1] -= 1

        row = [0] * width
        fill_cell(0, 1, content)

    fill_row(0, None, [0] * k)
    p = XPoly(k)
    p.terms = {m: APoly.const(c) for m, c in out.items()}
    return p
