"""Partitions in a k x (n-k) box, partial orders, and vector straightening.

A partition is a tuple of weakly decreasing positive integers, e.g. (3, 1);
the empty partition is ().  Throughout, ``P_{k,n}`` denotes the partitions
with at most k parts, each part at most n-k, i.e. those fitting in a k-row,
(n-k)-column rectangle.  These index the Schur basis of the quotient ring
implemented in :mod:`schurbox.quotient`.
"""

from functools import lru_cache
from itertools import product
from math import comb

# Four-valued outcome of the partial-order comparisons.
GREATER = "greater"
LESS = "less"
EQUAL = "equal"
INCOMPARABLE = "incomparable"


def check_partition(parts):
    """Validate and normalize a partition given as any integer iterable.

    Trailing zeros are dropped; raises ValueError if entries are negative,
    not weakly decreasing, or not integers.
    """
    parts = tuple(parts)
    for p in parts:
        if not isinstance(p, int) or isinstance(p, bool):
            raise ValueError(f"partition entries must be integers, got {p!r}")
        if p < 0:
            raise ValueError(f"partition entries must be nonnegative, got {p}")
    for a, b in zip(parts, parts[1:]):
        if a < b:
            raise ValueError(f"partition must be weakly decreasing, got {parts}")
    while parts and parts[-1] == 0:
        parts = parts[:-1]
    return parts


def size(lam):
    """Number of boxes |lambda|."""
    return sum(lam)


def in_box(lam, k, n):
    """True iff lambda has at most k parts, each at most n-k."""
    return len(lam) <= k and (not lam or lam[0] <= n - k)


def check_box(k, n):
    """Validate 0 <= k <= n."""
    if not (isinstance(k, int) and isinstance(n, int)):
        raise ValueError("k and n must be integers")
    if not (0 <= k <= n):
        raise ValueError(f"need 0 <= k <= n, got k={k}, n={n}")


def partitions_in_rect(d, max_len, max_part):
    """Yield the partitions of d with at most max_len parts, each <= max_part,
    in lexicographically descending order."""
    if d == 0:
        yield ()
        return
    if max_len == 0 or max_part == 0 or d > max_len * max_part:
        return
    for first in range(min(d, max_part), 0, -1):
        if d - first > (max_len - 1) * first:
            continue
        for rest in partitions_in_rect(d - first, max_len - 1, first):
            yield (first,) + rest


@lru_cache(maxsize=None)
def enumerate_pkn(k, n):
    """All partitions in the k x (n-k) box, graded by size and lexicographically
    descending within each size.  This is the canonical enumeration order used
    everywhere (matrix rows/columns, JSON term order).  Length is C(n, k).
    """
    check_box(k, n)
    out = []
    for d in range(k * (n - k) + 1):
        out.extend(partitions_in_rect(d, k, n - k))
    assert len(out) == comb(n, k)
    return tuple(out)


def complement(nu, k, n):
    """The box complement: rotate the complement of nu in the k x (n-k)
    rectangle by 180 degrees.  An involution on P_{k,n}."""
    if not in_box(nu, k, n):
        raise ValueError(f"{nu} does not fit in the {k} x {n - k} box")
    padded = pad(nu, k)
    return check_partition(tuple(n - k - padded[k - 1 - i] for i in range(k)))


def conjugate(lam):
    """Transpose of the Young diagram."""
    if not lam:
        return ()
    return tuple(sum(1 for p in lam if p > i) for i in range(lam[0]))


def pad(lam, k):
    """lambda extended with zeros to length k."""
    if len(lam) > k:
        raise ValueError(f"{lam} has more than {k} parts")
    return tuple(lam) + (0,) * (k - len(lam))


def contains(lam, mu):
    """True iff the diagram of mu sits inside the diagram of lambda."""
    if len(mu) > len(lam):
        return False
    return all(m <= l for l, m in zip(lam, mu))


def dominates(lam, mu):
    """Dominance order: every prefix sum of lambda is >= the corresponding
    prefix sum of mu.  Defined only within a fixed size; returns False when
    |lambda| != |mu| (partitions of different sizes never dominate)."""
    if sum(lam) != sum(mu):
        return False
    acc_l = acc_m = 0
    for i in range(max(len(lam), len(mu))):
        acc_l += lam[i] if i < len(lam) else 0
        acc_m += mu[i] if i < len(mu) else 0
        if acc_l < acc_m:
            return False
    return True


def cmp_size_antidominance(lam, mu):
    """Compare in the size-then-antidominance order: lam > mu when
    |lam| > |mu|, or when the sizes agree and mu strictly dominates lam.
    Equal-size dominance-incomparable pairs are INCOMPARABLE."""
    if lam == mu:
        return EQUAL
    if sum(lam) != sum(mu):
        return GREATER if sum(lam) > sum(mu) else LESS
    lam_dom = dominates(lam, mu)
    mu_dom = dominates(mu, lam)
    if mu_dom and not lam_dom:
        return GREATER
    if lam_dom and not mu_dom:
        return LESS
    return INCOMPARABLE


def cmp_graded_dominance(lam, mu):
    """Compare in the graded dominance order: comparable only within a size,
    where lam > mu means lam strictly dominates mu."""
    if lam == mu:
        return EQUAL
    if sum(lam) != sum(mu):
        return INCOMPARABLE
    if dominates(lam, mu):
        return GREATER
    if dominates(mu, lam):
        return LESS
    return INCOMPARABLE


def is_horizontal_strip(lam, mu, j):
    """True iff mu <= lam, |lam/mu| = j, and lam/mu has at most one box per
    column (equivalently lam_{i+1} <= mu_i for all i)."""
    if not contains(lam, mu):
        return False
    if sum(lam) - sum(mu) != j:
        return False
    mu_p = pad(mu, len(lam)) if len(lam) else ()
    return all(lam[i + 1] <= mu_p[i] for i in range(len(lam) - 1))


def is_vertical_strip(lam, mu, i):
    """True iff mu <= lam, |lam/mu| = i, and lam/mu has at most one box per
    row (lam_j - mu_j <= 1 for all j)."""
    if not contains(lam, mu):
        return False
    if sum(lam) - sum(mu) != i:
        return False
    mu_p = pad(mu, len(lam)) if len(lam) else ()
    return all(lam[j] - mu_p[j] <= 1 for j in range(len(lam)))


def entrywise_sum(mu, nu):
    """The partition mu + nu (componentwise, after zero padding)."""
    k = max(len(mu), len(nu))
    return check_partition(tuple(
        (mu[i] if i < len(mu) else 0) + (nu[i] if i < len(nu) else 0)
        for i in range(k)))


def sorted_concat(mu, nu):
    """The partition whose multiset of parts is the union of those of mu, nu."""
    return tuple(sorted(mu + nu, reverse=True))


def straighten_vector(alpha):
    """Straighten the Schur 'function' of an arbitrary integer vector.

    For alpha in Z^k let beta = alpha + (k-1, k-2, ..., 0).  If beta has a
    negative or repeated entry the alternant vanishes and None is returned.
    Otherwise returns (sign, lam) where sign = (-1)^sigma for the permutation
    sigma sorting beta strictly decreasing and lam is the partition with
    lam_i = beta_{sigma(i)} - (k - i); then s_alpha = sign * s_lam.
    """
    k = len(alpha)
    beta = tuple(alpha[i] + (k - 1 - i) for i in range(k))
    if any(b < 0 for b in beta):
        return None
    if len(set(beta)) != k:
        return None
    order = sorted(range(k), key=lambda i: -beta[i])
    sign = 1
    seen = [False] * k
    for start in range(k):
        if seen[start]:
            continue
        length = 0
        i = start
        while not seen[i]:
            seen[i] = True
            i = order[i]
            length += 1
        if length % 2 == 0:
            sign = -sign
    lam = tuple(beta[order[i]] - (k - 1 - i) for i in range(k))
    return sign, check_partition(lam)


@lru_cache(maxsize=None)
def enumerate_v_set(k, n):
    """The 2^(k-1) vectors (-n, t_2, ..., t_k) with t_i in {0, 1} that drive
    the rim-hook straightening step; -|tau| ranges over n-k+1, ..., n."""
    check_box(k, n)
    if k == 0:
        raise ValueError("the straightening vector set needs k >= 1")
    return tuple((-n,) + tail for tail in product((0, 1), repeat=k - 1))


def horizontal_strip_extensions(lam, j, k, max_part):
    """All partitions mu >= lam with at most k parts, mu_1 <= max_part, such
    that mu/lam is a horizontal strip of size j."""
    lam_p = pad(lam, k)
    out = []

    def rec(i, remaining, prefix, prev):
        if i == k:
            if remaining == 0:
                out.append(check_partition(prefix))
            return
        lo = lam_p[i]
        # one box per column: mu_i <= lam_{i-1}; also mu weakly decreasing
        hi = min(prev, (lam_p[i - 1] if i > 0 else max_part), lo + remaining)
        if i == 0:
            hi = min(max_part, lo + remaining)
        for m in range(lo, hi + 1):
            rec(i + 1, remaining - (m - lo), prefix + [m], m)

    rec(0, j, [], max_part)
    return out


def horizontal_strip_restrictions(lam, j):
    """All partitions mu <= lam such that lam/mu is a horizontal strip of
    size j."""
    k = len(lam)
    out = []

    def rec(i, remaining, prefix):
        if i == k:
            if remaining == 0:
                out.append(check_partition(prefix))
            return
        # strip condition: mu_i >= lam_{i+1}; containment: mu_i <= lam_i;
        # weakly decreasing is automatic since mu_i >= lam_{i+1} >= mu_{i+1}.
        lo = max(lam[i + 1] if i + 1 < k else 0, lam[i] - remaining)
        for m in range(lam[i], lo - 1, -1):
            rec(i + 1, remaining - (lam[i] - m), prefix + [m])

    rec(0, j, [])
    return out


def subpartitions_of_size(lam, d):
    """All partitions nu <= lam with |nu| = d."""
    k = len(lam)
    out = []

    def rec(i, remaining, prefix, prev):
        if remaining == 0:
            out.append(check_partition(tuple(prefix)))
            return
        if i == k:
            return
        hi = min(lam[i], prev, remaining)
        for m in range(hi, 0, -1):
            spare = sum(min(lam[t], m) for t in range(i + 1, k))
            if remaining - m <= spare:
                rec(i + 1, remaining - m, prefix + [m], m)

    if 0 <= d <= sum(lam):
        rec(0, d, [], lam[0] if lam else 0)
    return out
