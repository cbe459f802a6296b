"""The quotient of symmetric polynomials in k variables by the relations
h_{n-k+1} = a_1, ..., h_n = a_k, in its Schur basis.

Elements are Z[a_1..a_k]-linear combinations of the classes s[lam] for lam
in the k x (n-k) box.  Setting every a_i = 0 recovers the cohomology ring of
the Grassmannian Gr(k, n); a_i = 0 for i < k with a_k = -(-1)^k q recovers
its quantum cohomology.

The workhorse is ``straighten_schur``: the class of s_mu for an arbitrary
partition mu with at most k parts, computed by the rim-hook recursion

    s[mu] = sum_{j=1..k} (-1)^{k-j} a_j
            sum_{tau in V, -|tau| = n-k+j} s[mu + tau]          (mu_1 > n-k)

over the vector set V = {(-n, t_2, ..., t_k) : t_i in {0,1}}, each summand
resolved through the alternant straightening of integer vectors.
"""

from functools import lru_cache
from itertools import combinations_with_replacement

from .apoly import APoly, ZERO, ONE, attach_coefficient
from .partitions import (
    check_box, check_partition, complement, enumerate_pkn, enumerate_v_set,
    horizontal_strip_extensions, in_box, pad, size, straighten_vector,
    subpartitions_of_size,
)
from .tableaux import lr_coefficient, schur_product_expand


def check_context(k, n):
    """Validate a quotient context: integers with 1 <= k <= n."""
    check_box(k, n)
    if k == 0:
        raise ValueError("quotient contexts need k >= 1")
    return k, n


def omega(k, n):
    """The full box (n-k, ..., n-k), the top class."""
    return ((n - k),) * k if n > k else ()


class QuotElem:
    """An element sum_lam c_lam s[lam] with c_lam in Z[a_1..a_k] and every
    lam inside the k x (n-k) box."""

    __slots__ = ("k", "n", "terms")

    def __init__(self, k, n, terms=None):
        check_context(k, n)
        self.k, self.n = k, n
        self.terms = {}
        if terms:
            for lam, c in terms.items():
                lam = check_partition(lam)
                if not in_box(lam, k, n):
                    raise ValueError(
                        f"{lam} does not fit in the {k} x {n - k} box")
                c = c if isinstance(c, APoly) else APoly.const(c)
                if c:
                    self.terms[lam] = c

    @classmethod
    def basis(cls, k, n, lam):
        return cls(k, n, {check_partition(lam): ONE})

    @classmethod
    def zero(cls, k, n):
        return cls(k, n)

    @classmethod
    def one(cls, k, n):
        return cls(k, n, {(): ONE})

    def _check_same(self, other):
        if (self.k, self.n) != (other.k, other.n):
            raise ValueError(
                f"mixed contexts ({self.k},{self.n}) and ({other.k},{other.n})")

    def __bool__(self):
        return bool(self.terms)

    def __eq__(self, other):
        if not isinstance(other, QuotElem):
            return NotImplemented
        return (self.k, self.n) == (other.k, other.n) and \
            self.terms == other.terms

    def __add__(self, other):
        if not isinstance(other, QuotElem):
            return NotImplemented
        self._check_same(other)
        out = dict(self.terms)
        for lam, c in other.terms.items():
            s = out.get(lam)
            s = c if s is None else s + c
            if s:
                out[lam] = s
            else:
                out.pop(lam, None)
        p = QuotElem(self.k, self.n)
        p.terms = out
        return p

    def __neg__(self):
        p = QuotElem(self.k, self.n)
        p.terms = {lam: -c for lam, c in self.terms.items()}
        return p

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, (int, APoly)):
            c0 = other if isinstance(other, APoly) else APoly.const(other)
            if not c0:
                return QuotElem(self.k, self.n)
            p = QuotElem(self.k, self.n)
            p.terms = {lam: c * c0 for lam, c in self.terms.items()}
            return p
        if not isinstance(other, QuotElem):
            return NotImplemented
        return multiply(self, other)

    __rmul__ = __mul__

    def coeff(self, mu):
        """The coefficient of s[mu] (mu must fit in the box)."""
        mu = check_partition(mu)
        if not in_box(mu, self.k, self.n):
            raise ValueError(
                f"{mu} does not fit in the {self.k} x {self.n - self.k} box")
        return self.terms.get(mu, ZERO)

    def support(self):
        return set(self.terms)

    def map_coeffs(self, fn):
        p = QuotElem(self.k, self.n)
        for lam, c in self.terms.items():
            c2 = fn(c)
            if c2:
                p.terms[lam] = c2
        return p

    def render(self):
        """Text form, largest basis element first:
        '-a2*s[3,1,1] + a1^2*s[1,1] - a1*a2*s[1] + a1*a3*s[]'."""
        return render_terms(self.terms, self.k, self.n)

    def payload(self):
        """JSON-ready dict; terms follow the canonical enumeration order."""
        ordering = {lam: i for i, lam in enumerate(enumerate_pkn(self.k, self.n))}
        terms = [{"partition": list(lam), "coeff": self.terms[lam].render()}
                 for lam in sorted(self.terms, key=ordering.__getitem__)]
        return {"k": self.k, "n": self.n, "basis": "s", "terms": terms}

    def __repr__(self):
        return self.render()


def render_terms(terms, k, n, var="a"):
    """Shared text renderer for basis-indexed term dicts (APoly or
    q-polynomial coefficients)."""
    if not terms:
        return "0"
    ordering = {lam: i for i, lam in enumerate(enumerate_pkn(k, n))}
    pieces = []
    for idx, lam in enumerate(sorted(terms, key=ordering.__getitem__,
                                     reverse=True)):
        body, positive = attach_coefficient(
            terms[lam], [f"s[{','.join(map(str, lam))}]"], var=var)
        if idx == 0:
            pieces.append(body if positive else "-" + body)
        else:
            pieces.append((" + " if positive else " - ") + body)
    return "".join(pieces)


# -- straightening -----------------------------------------------------------

@lru_cache(maxsize=None)
def _straighten(k, n, mu):
    """Frozen item tuple of the class of s_mu, for mu with at most k parts."""
    if in_box(mu, k, n):
        return ((mu, ONE),)
    out = {}
    mu_p = pad(mu, k)
    for tau in enumerate_v_set(k, n):
        j = -sum(tau) - (n - k)
        res = straighten_vector(tuple(m + t for m, t in zip(mu_p, tau)))
        if res is None:
            continue
        sgn, lam = res
        coeff = APoly.gen(j) * (sgn * (-1 if (k - j) % 2 else 1))
        for nu, c in _straighten(k, n, lam):
            s = out.get(nu, ZERO) + coeff * c
            if s:
                out[nu] = s
            else:
                out.pop(nu, None)
    return tuple(sorted(out.items()))


def straighten_schur(k, n, mu):
    """The class of s_mu in the quotient, for an arbitrary partition mu with
    at most k parts (the zero element when mu has more rows than k)."""
    check_context(k, n)
    mu = check_partition(mu)
    if len(mu) > k:
        return QuotElem.zero(k, n)
    p = QuotElem(k, n)
    p.terms = dict(_straighten(k, n, mu))
    return p


# -- multiplication ----------------------------------------------------------

@lru_cache(maxsize=None)
def _basis_product(k, n, lam, mu):
    """Frozen item tuple of s[lam] * s[mu] for box partitions lam, mu.  The
    cache key is the ordered pair, so commutativity is computed, not assumed."""
    out = {}
    for rho, c in schur_product_expand(lam, mu, k).items():
        for nu, ap in _straighten(k, n, rho):
            s = out.get(nu, ZERO) + ap * c
            if s:
                out[nu] = s
            else:
                out.pop(nu, None)
    return tuple(sorted(out.items()))


def multiply(f, g):
    """The product of two elements."""
    f._check_same(g)
    k, n = f.k, f.n
    out = {}
    for lam, cf in f.terms.items():
        for mu, cg in g.terms.items():
            c = cf * cg
            for nu, ap in _basis_product(k, n, lam, mu):
                s = out.get(nu, ZERO) + c * ap
                if s:
                    out[nu] = s
                else:
                    out.pop(nu, None)
    p = QuotElem(k, n)
    p.terms = out
    return p


def coeff(f, mu):
    """Extract the s[mu]-coefficient of an element."""
    return f.coeff(mu)


def structure_constant(k, n, alpha, beta, gamma):
    """g(alpha, beta, gamma) = coeff of s[complement(gamma)] in
    s[alpha] * s[beta]; symmetric in all three arguments."""
    check_context(k, n)
    alpha, beta, gamma = (check_partition(p) for p in (alpha, beta, gamma))
    for p in (alpha, beta, gamma):
        if not in_box(p, k, n):
            raise ValueError(f"{p} does not fit in the {k} x {n - k} box")
    prod = dict(_basis_product(k, n, alpha, beta))
    return prod.get(complement(gamma, k, n), ZERO)


# -- Pieri rule --------------------------------------------------------------

def pieri_h(k, n, lam, j):
    """Multiply s[lam] by the class of h_j (0 <= j <= n-k), by the closed
    rule: horizontal j-strip extensions inside the box, plus hook-shaped
    Littlewood-Richardson corrections weighted by (-1)^{i+1} a_i:

        s[lam] h_j = sum_{mu} s[mu]
                     - sum_{i=1..k} (-1)^i a_i
                       sum_{nu <= lam} c^{lam}_{(n-k-j+1, 1^{i-1}), nu} s[nu]
    """
    check_context(k, n)
    lam = check_partition(lam)
    if not in_box(lam, k, n):
        raise ValueError(f"{lam} does not fit in the {k} x {n - k} box")
    if not 0 <= j <= n - k:
        raise ValueError(f"need 0 <= j <= n-k = {n - k}, got j={j}")
    out = {}
    for mu in horizontal_strip_extensions(lam, j, k, n - k):
        out[mu] = out.get(mu, ZERO) + ONE
    for i in range(1, k + 1):
        hook = (n - k - j + 1,) + (1,) * (i - 1)
        d = size(lam) - (n - k - j + i)
        if d < 0:
            continue
        coeff_i = APoly.gen(i) * (1 if i % 2 else -1)
        for nu in subpartitions_of_size(lam, d):
            c = lr_coefficient(lam, hook, nu)
            if c:
                s = out.get(nu, ZERO) + coeff_i * c
                if s:
                    out[nu] = s
                else:
                    out.pop(nu, None)
    p = QuotElem(k, n)
    p.terms = {lam2: c for lam2, c in out.items() if c}
    return p


def reduce_h_overflow(k, n, m):
    """The class of h_{n+m} for m >= 1:
    sum_{j=0}^{k-1} (-1)^j a_{k-j} s[(m, 1^j)], straightened."""
    check_context(k, n)
    if m < 1:
        raise ValueError(f"overflow index must be >= 1, got {m}")
    out = QuotElem.zero(k, n)
    for j in range(k):
        hook = (m,) + (1,) * j
        sign = -1 if j % 2 else 1
        out = out + straighten_schur(k, n, hook) * (APoly.gen(k - j) * sign)
    return out


# -- specialization ----------------------------------------------------------

def specialize_elem(f, values):
    """Substitute the a_i; returns {partition: q-polynomial} over the basis
    (zero coefficients dropped)."""
    out = {}
    for lam, c in f.terms.items():
        c2 = c.specialize(values)
        if c2:
            out[lam] = c2
    return out


# -- verification scans ------------------------------------------------------

def s3_report(k, n, jobs=1):
    """Check full symmetry of the structure constants: for every unordered
    triple {alpha, beta, gamma} of box partitions, the six permuted values
    g(., ., .) agree with each other and with the coefficient of s[omega] in
    the triple product s[alpha] s[beta] s[gamma].  Returns a report dict."""
    check_context(k, n)
    basis = enumerate_pkn(k, n)
    triples = list(combinations_with_replacement(basis, 3))
    if jobs > 1:
        results = _parallel_map(_s3_triple, [(k, n, t) for t in triples], jobs)
    else:
        results = [_s3_triple((k, n, t)) for t in triples]
    counterexamples = [r for r in results if r is not None]
    return {
        "k": k, "n": n,
        "triples": len(triples),
        "ok": not counterexamples,
        "counterexamples": counterexamples,
    }


def _s3_triple(args):
    k, n, (alpha, beta, gamma) = args
    w = omega(k, n)
    comp = {p: complement(p, k, n) for p in (alpha, beta, gamma)}
    values = [
        dict(_basis_product(k, n, alpha, beta)).get(comp[gamma], ZERO),
        dict(_basis_product(k, n, alpha, gamma)).get(comp[beta], ZERO),
        dict(_basis_product(k, n, beta, alpha)).get(comp[gamma], ZERO),
        dict(_basis_product(k, n, beta, gamma)).get(comp[alpha], ZERO),
        dict(_basis_product(k, n, gamma, alpha)).get(comp[beta], ZERO),
        dict(_basis_product(k, n, gamma, beta)).get(comp[alpha], ZERO),
    ]
    triple = ZERO
    for lam, c in _basis_product(k, n, alpha, beta):
        wc = dict(_basis_product(k, n, lam, gamma)).get(w, ZERO)
        if wc:
            triple = triple + c * wc
    if all(v == values[0] for v in values[1:]) and triple == values[0]:
        return None
    return {
        "alpha": alpha, "beta": beta, "gamma": gamma,
        "permuted": [v.render() for v in values],
        "triple_product": triple.render(),
    }


def positivity_scan(k, n, jobs=1):
    """Scan every product of two basis classes for the sign-alternation
    pattern: (-1)^{|lam|+|mu|-|nu|} coeff_nu(s[lam] s[mu]), rewritten in the
    variables b_i = (-1)^{n-k-1} a_i, must have nonnegative coefficients.
    Returns a report dict listing violations (expected none)."""
    check_context(k, n)
    basis = enumerate_pkn(k, n)
    pairs = list(combinations_with_replacement(basis, 2))
    if jobs > 1:
        chunks = _parallel_map(_positivity_pair, [(k, n, p) for p in pairs],
                               jobs)
    else:
        chunks = [_positivity_pair((k, n, p)) for p in pairs]
    violations = [v for chunk in chunks for v in chunk]
    return {
        "k": k, "n": n,
        "pairs": len(pairs),
        "ok": not violations,
        "violations": violations,
    }


def _positivity_pair(args):
    k, n, (lam, mu) = args
    flip = (n - k - 1) % 2 == 1
    bad = []
    for nu, g in _basis_product(k, n, lam, mu):
        poly = g * (-1 if (size(lam) + size(mu) - size(nu)) % 2 else 1)
        if flip:
            poly = poly.flip_by_degree_parity()
        if any(c < 0 for c in poly.terms.values()):
            bad.append({"lam": lam, "mu": mu, "nu": nu,
                        "in_b_variables": poly.render().replace("a", "b")})
    return bad


def _parallel_map(fn, items, jobs):
    from concurrent.futures import ProcessPoolExecutor
    with ProcessPoolExecutor(max_workers=jobs) as ex:
        return list(ex.map(fn, items, chunksize=max(1, len(items) // (jobs * 4))))
