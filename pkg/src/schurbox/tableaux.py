"""Tableau counting: Kostka numbers and Littlewood-Richardson coefficients.

Two deliberately different algorithms coexist here.  ``lr_coefficient``
counts lattice skew semistandard tableaux cell by cell, straight from the
definition.  ``schur_product_expand`` enumerates chains of horizontal strips
with ballot-sequence bookkeeping, producing a whole product expansion
s_mu * s_nu = sum_lam c_{mu,nu}^lam s_lam in one pass.  The tests check the
routes against each other and against exact polynomial multiplication.
"""

from functools import lru_cache

from .partitions import (
    check_partition, contains, dominates, entrywise_sum, pad,
    sorted_concat, straighten_vector,
)


@lru_cache(maxsize=None)
def kostka(lam, mu):
    """The Kostka number: semistandard tableaux of shape lam and content mu
    (mu a partition).  Zero unless |lam| = |mu| and lam dominates mu;
    K_{lam,lam} = 1.  Computed by stripping the maximal entry, which always
    occupies a horizontal strip."""
    lam, mu = check_partition(lam), check_partition(mu)
    if sum(lam) != sum(mu):
        return 0
    if not lam:
        return 1
    if not dominates(lam, mu):
        return 0
    if lam == mu:
        return 1
    last = mu[-1]
    rest = mu[:-1]
    total = 0
    for kappa in _strip_removals(lam, last):
        total += kostka(kappa, rest)
    return total


def _strip_removals(lam, j):
    """Partitions kappa <= lam with lam/kappa a horizontal strip of size j."""
    k = len(lam)
    out = []

    def rec(i, remaining, prefix):
        if i == k:
            if remaining == 0:
                out.append(check_partition(tuple(prefix)))
            return
        lo = max(lam[i + 1] if i + 1 < k else 0, lam[i] - remaining)
        for m in range(lam[i], lo - 1, -1):
            rec(i + 1, remaining - (lam[i] - m), prefix + [m])

    rec(0, j, [])
    return out


@lru_cache(maxsize=None)
def lr_coefficient(lam, mu, nu):
    """The Littlewood-Richardson coefficient c_{mu,nu}^{lam}: the number of
    semistandard fillings of the skew shape lam/mu with content nu whose
    reverse reading word (rows top to bottom, each read right to left) is a
    lattice word.  Counted by direct backtracking over cells in reverse
    reading order."""
    lam, mu, nu = check_partition(lam), check_partition(mu), check_partition(nu)
    if sum(mu) + sum(nu) != sum(lam):
        return 0
    if not contains(lam, mu):
        return 0
    if not nu:
        return 1 if lam == mu else 0
    # dominance sandwich: mu + nu >= lam >= sorted(mu cup nu)
    if not dominates(entrywise_sum(mu, nu), lam):
        return 0
    if not dominates(lam, sorted_concat(mu, nu)):
        return 0
    if lam[0] > (mu[0] if mu else 0) + nu[0]:
        return 0
    rows = len(lam)
    mu_p = pad(mu, rows)
    nvals = len(nu)
    # cells in reverse reading order
    cells = []
    for r in range(rows):
        for c in range(lam[r] - 1, mu_p[r] - 1, -1):
            cells.append((r, c))
    grid = [[0] * lam[r] for r in range(rows)]
    counts = [0] * (nvals + 1)

    def rec(idx):
        if idx == len(cells):
            return 1
        r, c = cells[idx]
        right = grid[r][c + 1] if c + 1 < lam[r] else nvals
        # the cell above constrains strictly unless it lies inside mu
        lo = grid[r - 1][c] + 1 if r > 0 and c >= mu_p[r - 1] else 1
        total = 0
        for v in range(lo, right + 1):
            if counts[v] >= nu[v - 1]:
                continue
            if v > 1 and counts[v - 1] <= counts[v]:
                continue
            counts[v] += 1
            grid[r][c] = v
            total += rec(idx + 1)
            counts[v] -= 1
        grid[r][c] = 0
        return total

    return rec(0)


def _chain_products(mu, nu, max_len):
    """Expand s_mu * s_nu as a multiset of partitions lam (with at most
    max_len parts) by growing mu with horizontal strips of sizes nu_1, nu_2,
    ... subject to the ballot condition: after placing value t, the number of
    t's in rows 1..i never exceeds the number of (t-1)'s in rows 1..i-1."""
    results = {}
    nrows = max_len

    def place_strip(t, shape, strip_rows):
        """Advance to value t placed as given per-row counts; recurse."""
        if t == len(nu):
            lam = check_partition(shape)
            results[lam] = results.get(lam, 0) + 1
            return
        target = nu[t]
        prev_rows = strip_rows
        new_shape = list(shape)

        def rec(row, remaining, placed, new_rows):
            if remaining == 0:
                place_strip(t + 1, tuple(new_shape), new_rows)
                return
            if row >= nrows:
                return
            # boxes of value t+1 placed in this row
            cap = remaining
            if row > 0:
                # horizontal strip: new row length <= previous row's old length
                cap = min(cap, shape[row - 1] - new_shape[row])
                # ballot: (t+1)'s in rows <= row can't exceed t's in rows < row
                if t > 0:
                    cap = min(cap, sum(prev_rows[:row]) - placed)
            elif t > 0:
                cap = 0  # values >= 2 can never sit in the top row
            for add in range(cap, -1, -1):
                old = new_shape[row]
                new_shape[row] = old + add
                rec(row + 1, remaining - add, placed + add, new_rows + [add])
                new_shape[row] = old

        rec(0, target, 0, [])

    start = list(pad(mu, nrows))
    if not nu:
        lam = check_partition(tuple(start))
        return {lam: 1}
    place_strip(0, tuple(start), [])
    return results


def schur_product_expand(mu, nu, k):
    """The multiset {lam: c_{mu,nu}^{lam}} over partitions lam with at most
    k parts.  Partitions needing more than k rows are dropped (they vanish
    in k variables)."""
    mu, nu = check_partition(mu), check_partition(nu)
    if len(mu) > k or len(nu) > k:
        raise ValueError(f"factors must have at most k={k} parts")
    if sum(nu) == 0:
        return {mu: 1}
    if sum(mu) == 0:
        return {nu: 1}
    return _chain_products(mu, nu, k)


def skew_schur_expand(lam, mu):
    """Expansion of the skew Schur function s_{lam/mu} = sum_nu c_{mu,nu}^lam
    s_nu; empty when mu is not contained in lam."""
    lam, mu = check_partition(lam), check_partition(mu)
    if not contains(lam, mu):
        return {}
    d = sum(lam) - sum(mu)
    out = {}
    for nu in _bounded_partitions(d, len(lam), lam[0] if lam else 0):
        c = lr_coefficient(lam, mu, nu)
        if c:
            out[nu] = c
    return out


def _bounded_partitions(d, max_len, max_part):
    from .partitions import partitions_in_rect
    return partitions_in_rect(d, max_len, max_part)


def uncancelled_pieri(alpha, m):
    """Multiply s_alpha by h_m before straightening: the signed multiset of
    partitions obtained from s_{alpha + beta} over all compositions beta of m
    into len(alpha) slots.  alpha may be any integer vector with
    alpha + (k-1, ..., 0) componentwise nonnegative."""
    k = len(alpha)
    rho = tuple(range(k - 1, -1, -1))
    if any(a + r < 0 for a, r in zip(alpha, rho)):
        raise ValueError(f"alpha + rho must be nonnegative, got {alpha}")
    if m < 0:
        raise ValueError("h index must be nonnegative")
    out = {}

    def rec(i, remaining, vec):
        if i == k - 1:
            res = straighten_vector(tuple(vec) + (alpha[i] + remaining,))
            if res is not None:
                sign, lam = res
                val = out.get(lam, 0) + sign
                if val:
                    out[lam] = val
                else:
                    del out[lam]
            return
        for add in range(remaining + 1):
            rec(i + 1, remaining - add, vec + [alpha[i] + add])

    if k == 0:
        return {(): 1} if m == 0 else {}
    rec(0, m, [])
    return out
