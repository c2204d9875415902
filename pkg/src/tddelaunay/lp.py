"""Exact phase-one simplex over the rationals.

Finds a point of ``{x >= 0 : A x = b}`` or proves the set empty.  The
tableau is kept sparse (one dict per row) and all arithmetic is done with
``gmpy2.mpq``.  Pricing picks the most negative reduced cost.  A cycle
needs an unbroken run of degenerate pivots, so once such a run gets long
Bland's rule takes over until the next pivot that makes progress; Bland's
rule cannot cycle, and every progressing pivot lowers the objective.
"""

from fractions import Fraction

from gmpy2 import mpq

__all__ = ["nonnegative_solution", "to_fraction"]

# degenerate pivots in a row before Bland's rule is switched on
DEGENERATE_RUN = 50


def to_fraction(q):
    return Fraction(int(q.numerator), int(q.denominator))


def _mpq(v):
    if isinstance(v, Fraction):
        return mpq(v.numerator, v.denominator)
    return mpq(v)


def nonnegative_solution(rows, rhs, ncols):
    """Solve ``A x = b, x >= 0`` exactly.

    Parameters
    ----------
    rows : list of dict
        Sparse rows of ``A``, mapping column index to coefficient.
    rhs : list
        The right-hand side ``b``.
    ncols : int
        Number of columns of ``A``.

    Returns
    -------
    list of Fraction or None
        A basic feasible solution, or ``None`` when the system is infeasible.
    """
    tab = []
    b = []
    for row, beta in zip(rows, rhs):
        row = {j: _mpq(v) for j, v in row.items() if v != 0}
        beta = _mpq(beta)
        if not row:
            if beta != 0:
                return None
            continue
        if beta < 0:
            row = {j: -v for j, v in row.items()}
            beta = -beta
        tab.append(row)
        b.append(beta)

    m = len(tab)
    basis = []
    cost = {}
    value = mpq(0)
    for r in range(m):
        art = ncols + r
        tab[r][art] = mpq(1)
        basis.append(art)
        value += b[r]
        for j, v in tab[r].items():
            if j < ncols:
                cost[j] = cost.get(j, 0) - v
    cost = {j: v for j, v in cost.items() if v != 0}

    run = 0
    while value > 0:
        if run >= DEGENERATE_RUN:
            entering = min((j for j, v in cost.items() if v < 0), default=None)
        else:
            entering = min(cost, key=lambda j: (cost[j], j), default=None)
            if entering is not None and cost[entering] >= 0:
                entering = None
        if entering is None:
            break
        leave = None
        best = None
        for r in range(m):
            a = tab[r].get(entering)
            if a is not None and a > 0:
                ratio = b[r] / a
                if best is None or ratio < best or (ratio == best and basis[r] < basis[leave]):
                    best, leave = ratio, r
        if leave is None:
            # phase-one objective is bounded below by 0, so this cannot happen
            raise RuntimeError("unbounded phase-one direction")
        run = run + 1 if best == 0 else 0
        value = _pivot(tab, b, cost, value, leave, entering)
        left, basis[leave] = basis[leave], entering
        if left >= ncols:
            # a nonbasic artificial is never needed again
            for row in tab:
                row.pop(left, None)
            cost.pop(left, None)

    if value > 0:
        return None
    x = [Fraction(0)] * ncols
    for r, j in enumerate(basis):
        if j < ncols:
            x[j] = to_fraction(b[r])
    return x


def _pivot(tab, b, cost, value, r, j):
    prow = tab[r]
    piv = prow[j]
    if piv != 1:
        for k in prow:
            prow[k] /= piv
        b[r] /= piv
    beta = b[r]
    items = list(prow.items())
    for s, row in enumerate(tab):
        if s == r:
            continue
        f = row.get(j)
        if f is None:
            continue
        for k, v in items:
            nv = row.get(k, 0) - f * v
            if nv == 0:
                row.pop(k, None)
            else:
                row[k] = nv
        b[s] -= f * beta
    f = cost.get(j)
    if f is not None:
        for k, v in items:
            nv = cost.get(k, 0) - f * v
            if nv == 0:
                cost.pop(k, None)
            else:
                cost[k] = nv
        value += f * beta
    return value
