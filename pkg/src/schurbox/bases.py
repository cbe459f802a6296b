"""Alternative families indexed by box partitions and their basis status.

For lam in P_{k,n} the candidate families are

    h:  h_lam = h_{lam_1} h_{lam_2} ...      (complete homogeneous)
    m:  m_lam                                 (monomial symmetric)
    e:  e_{lam^t}                             (elementary, conjugate index)
    p:  p_lam = p_{lam_1} p_{lam_2} ...      (power sums)
    ht: h_{lam^t}                             (h on the conjugate index)

h, m and e are always bases.  p and ht may fail, or be bases only over
fields of certain characteristics; ``classify_family`` decides by computing
the determinant of the change-of-basis matrix against (s[lam]).  Because the
quotient is graded with deg a_i = n-k+i, that determinant is an integer
constant, so it is evaluated at two integer specializations of the a_i and
cross-checked rather than expanded symbolically.
"""

from functools import lru_cache

from .apoly import APoly, ZERO, ONE
from .partitions import (
    check_partition, cmp_graded_dominance, cmp_size_antidominance, conjugate,
    enumerate_pkn, in_box, partitions_in_rect, size, GREATER,
)
from .quotient import QuotElem, check_context, multiply, straighten_schur
from .tableaux import kostka

FAMILIES = ("h", "m", "e", "p", "ht")


def _check_indexing(k, n, lam):
    lam = check_partition(lam)
    if not in_box(lam, k, n):
        raise ValueError(f"{lam} does not fit in the {k} x {n - k} box")
    return lam


def _expand_h_product(k, n, nu):
    """Class of h_nu = h_{nu_1} h_{nu_2} ... for an arbitrary partition nu:
    h_nu = sum over partitions mu of |nu| with at most k parts of
    K_{mu,nu} s_mu, then straightened."""
    out = QuotElem.zero(k, n)
    d = sum(nu)
    for mu in partitions_in_rect(d, k, d):
        c = kostka(mu, nu)
        if c:
            out = out + straighten_schur(k, n, mu) * c
    return out


def expand_h(k, n, lam):
    """Class of h_lam for lam in the box."""
    check_context(k, n)
    return _expand_h_product(k, n, _check_indexing(k, n, lam))


def expand_h_conj(k, n, lam):
    """Class of h_{lam^t} for lam in the box."""
    check_context(k, n)
    return _expand_h_product(k, n, conjugate(_check_indexing(k, n, lam)))


@lru_cache(maxsize=None)
def _kostka_inverse(k, d):
    """(stratum, inv) where stratum lists the partitions of d with at most k
    parts in lex-descending order and inv is the exact integer inverse of the
    Kostka matrix K[i][j] = K_{stratum_i, stratum_j} (upper unitriangular
    since K_{lam,mu} != 0 forces lam >= mu in dominance, hence in lex)."""
    stratum = sorted(partitions_in_rect(d, k, d), reverse=True)
    r = len(stratum)
    K = [[kostka(stratum[i], stratum[j]) for j in range(r)] for i in range(r)]
    inv = [[0] * r for _ in range(r)]
    for i in range(r):
        inv[i][i] = 1
        for j in range(i + 1, r):
            inv[i][j] = -sum(inv[i][t] * K[t][j] for t in range(i, j))
    return tuple(stratum), tuple(tuple(row) for row in inv)


def expand_m(k, n, lam):
    """Class of the monomial symmetric polynomial m_lam for lam in the box,
    via exact inversion of the stratum Kostka matrix: m_lam =
    sum_j inv[lam][j] s_{mu_j}, each s_{mu_j} straightened."""
    check_context(k, n)
    lam = _check_indexing(k, n, lam)
    stratum, inv = _kostka_inverse(k, size(lam))
    r = stratum.index(lam)
    out = QuotElem.zero(k, n)
    for j, mu in enumerate(stratum):
        c = inv[r][j]
        if c:
            out = out + straighten_schur(k, n, mu) * c
    return out


def s_in_m(k, n, lam):
    """The forward expansion s[lam] = sum_mu K_{lam,mu} m[mu]; nonzero
    entries land inside the box automatically (dominated by lam)."""
    check_context(k, n)
    lam = _check_indexing(k, n, lam)
    out = {}
    for mu in partitions_in_rect(size(lam), k, n - k):
        c = kostka(lam, mu)
        if c:
            out[mu] = c
    return out


def expand_e_conj(k, n, lam):
    """Class of e_{lam^t} = e_{(lam^t)_1} e_{(lam^t)_2} ... for lam in the
    box; each factor e_r is the class of the column s_{(1^r)}."""
    check_context(k, n)
    lam = _check_indexing(k, n, lam)
    out = QuotElem.one(k, n)
    for r in conjugate(lam):
        out = multiply(out, straighten_schur(k, n, (1,) * r))
    return out


def power_sum_class(k, n, r):
    """Class of the power sum p_r (r >= 1), via its hook expansion
    p_r = sum_{j=0}^{min(r,k)-1} (-1)^j s_{(r-j, 1^j)}."""
    check_context(k, n)
    if r < 1:
        raise ValueError("power sum index must be >= 1")
    out = QuotElem.zero(k, n)
    for j in range(min(r, k)):
        hook = (r - j,) + (1,) * j
        out = out + straighten_schur(k, n, hook) * (-1 if j % 2 else 1)
    return out


def expand_p(k, n, lam):
    """Class of p_lam = p_{lam_1} p_{lam_2} ... for lam in the box."""
    check_context(k, n)
    lam = _check_indexing(k, n, lam)
    out = QuotElem.one(k, n)
    for r in lam:
        out = multiply(out, power_sum_class(k, n, r))
    return out


def family_element(k, n, lam, family):
    """The class of the family member indexed by lam."""
    if family == "h":
        return expand_h(k, n, lam)
    if family == "m":
        return expand_m(k, n, lam)
    if family == "e":
        return expand_e_conj(k, n, lam)
    if family == "p":
        return expand_p(k, n, lam)
    if family == "ht":
        return expand_h_conj(k, n, lam)
    raise ValueError(f"unknown family {family!r} (expected one of {FAMILIES})")


def change_of_basis_matrix(k, n, family):
    """Rows: expansions of the family members in the Schur basis, rows and
    columns both in canonical enumeration order.  Entries are APoly."""
    check_context(k, n)
    basis = enumerate_pkn(k, n)
    rows = []
    for lam in basis:
        elem = family_element(k, n, lam, family)
        rows.append([elem.terms.get(mu, ZERO) for mu in basis])
    return rows


def unitriangularity_check(k, n, family):
    """Verify the triangularity statements: the h family is unitriangular
    against s under size-then-antidominance, and s is unitriangular against
    m under graded dominance (within each size stratum).  Returns a report
    with any offending entries."""
    check_context(k, n)
    basis = enumerate_pkn(k, n)
    failures = []
    if family == "h":
        for lam in basis:
            elem = expand_h(k, n, lam)
            for mu, c in elem.terms.items():
                if mu == lam:
                    if c != ONE:
                        failures.append({"row": lam, "col": mu,
                                         "entry": c.render(),
                                         "why": "diagonal not 1"})
                elif cmp_size_antidominance(lam, mu) != GREATER:
                    failures.append({"row": lam, "col": mu,
                                     "entry": c.render(),
                                     "why": "entry above the diagonal order"})
    elif family == "m":
        for lam in basis:
            row = s_in_m(k, n, lam)
            for mu, c in row.items():
                if mu == lam:
                    if c != 1:
                        failures.append({"row": lam, "col": mu, "entry": c,
                                         "why": "diagonal not 1"})
                elif cmp_graded_dominance(lam, mu) != GREATER:
                    failures.append({"row": lam, "col": mu, "entry": c,
                                     "why": "entry above the diagonal order"})
    else:
        raise ValueError("triangularity is checked for the h and m families")
    return {"k": k, "n": n, "family": family,
            "ok": not failures, "failures": failures}


_PRIMES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)


def _eval_int(c, vals):
    """Evaluate an APoly at integer points (vals[i] for a_{i+1})."""
    total = 0
    for e, coeff in c.terms.items():
        term = coeff
        for i, power in enumerate(e):
            if power:
                term *= vals[i] ** power
        total += term
    return total


def _bareiss_det(mat):
    """Exact determinant of an integer matrix (fraction-free elimination)."""
    m = [list(row) for row in mat]
    size_ = len(m)
    if size_ == 0:
        return 1
    sign = 1
    prev = 1
    for i in range(size_ - 1):
        if m[i][i] == 0:
            for r in range(i + 1, size_):
                if m[r][i]:
                    m[i], m[r] = m[r], m[i]
                    sign = -sign
                    break
            else:
                return 0
        pivot = m[i][i]
        for r in range(i + 1, size_):
            row_r = m[r]
            row_i = m[i]
            lead = row_r[i]
            for c in range(i + 1, size_):
                row_r[c] = (row_r[c] * pivot - lead * row_i[c]) // prev
            row_r[i] = 0
        prev = pivot
    return sign * m[-1][-1]


def classify_family(k, n, family):
    """Decide whether the family is a basis of the quotient, returning
    (verdict, detail):

        ("yes", 1)    unimodular transition: a basis over Z[a] and every field
        ("no", 0)     determinant identically zero: never a basis
        ("st", d)     determinant +-d with d > 1: a basis except in
                      characteristics dividing d
        ("a-dep", None)  determinant genuinely depends on the a_i (the graded
                      structure rules this out; kept as a safeguard)

    The grading deg a_i = n-k+i makes the transition determinant a degree-0,
    hence constant, polynomial; it is therefore read off from two integer
    specializations, all a_i = 0 and a_i = i-th prime, which must agree."""
    check_context(k, n)
    if family not in FAMILIES:
        raise ValueError(f"unknown family {family!r} (expected one of {FAMILIES})")
    rows = change_of_basis_matrix(k, n, family)
    at_zero = [[c.terms.get((), 0) for c in row] for row in rows]
    primes = _PRIMES[:k]
    at_primes = [[_eval_int(c, primes) for c in row] for row in rows]
    d0 = _bareiss_det(at_zero)
    d1 = _bareiss_det(at_primes)
    if d0 != d1:
        return ("a-dep", None)
    if d0 == 0:
        return ("no", 0)
    if abs(d0) == 1:
        return ("yes", 1)
    return ("st", abs(d0))


def basis_table(family, n_max, jobs=1):
    """Classification of every cell 1 <= k < n <= n_max; returns
    {(k, n): (verdict, detail)}."""
    cells = [(k, n) for n in range(2, n_max + 1) for k in range(1, n)]
    if jobs > 1:
        from .quotient import _parallel_map
        results = _parallel_map(_classify_cell,
                                [(k, n, family) for (k, n) in cells], jobs)
    else:
        results = [_classify_cell((k, n, family)) for (k, n) in cells]
    return dict(zip(cells, results))


def _classify_cell(args):
    k, n, family = args
    return classify_family(k, n, family)
