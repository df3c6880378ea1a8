"""Exact dense and sparse linear algebra over Q and F_p.

Dense ``Matrix`` covers the small reproducible computations (rank, kernel
in reduced echelon form).  ``row_reduce_sparse`` is the workhorse for the
evaluation matrices in the identities module, where rows are sparse dicts
keyed by arbitrary comparable coordinates.
"""


class Matrix:
    """Dense row-major matrix of exact field elements."""

    __slots__ = ("field", "rows", "cols", "entries")

    def __init__(self, field, rows, cols, entries):
        if len(entries) != rows * cols:
            raise ValueError("entries length must be rows*cols")
        self.field = field
        self.rows = rows
        self.cols = cols
        self.entries = [field.of(e) if isinstance(e, int) else e for e in entries]

    @classmethod
    def from_rows(cls, field, row_lists):
        rows = len(row_lists)
        cols = len(row_lists[0]) if rows else 0
        flat = [e for row in row_lists for e in row]
        return cls(field, rows, cols, flat)

    def row(self, i):
        return self.entries[i * self.cols : (i + 1) * self.cols]

    def _rref(self):
        """Reduced row echelon form; returns (rows as lists, pivot columns).

        Deterministic: pivot is the first nonzero entry in column order.
        """
        F = self.field
        rows = [self.row(i) for i in range(self.rows)]
        pivots = []
        r = 0
        for c in range(self.cols):
            pivot = None
            for i in range(r, self.rows):
                if not F.is_zero(rows[i][c]):
                    pivot = i
                    break
            if pivot is None:
                continue
            rows[r], rows[pivot] = rows[pivot], rows[r]
            inv = F.inv(rows[r][c])
            rows[r] = [F.mul(inv, e) for e in rows[r]]
            for i in range(self.rows):
                if i != r and not F.is_zero(rows[i][c]):
                    factor = rows[i][c]
                    rows[i] = [F.sub(a, F.mul(factor, b)) for a, b in zip(rows[i], rows[r])]
            pivots.append(c)
            r += 1
            if r == self.rows:
                break
        return rows, pivots

    def rank(self):
        return len(self._rref()[1])

    def kernel_basis(self):
        """Basis of the right null space.

        One vector per free column, in column order; the free coordinate is
        set to 1 and pivot coordinates are filled from the RREF (so the
        basis is the reduced echelon form of the null space).
        """
        F = self.field
        rows, pivots = self._rref()
        pivot_set = set(pivots)
        basis = []
        for free in range(self.cols):
            if free in pivot_set:
                continue
            v = [F.zero] * self.cols
            v[free] = F.one
            for r, pc in enumerate(pivots):
                v[pc] = F.neg(rows[r][free])
            basis.append(v)
        return basis

    def __eq__(self, other):
        return (
            isinstance(other, Matrix)
            and self.field == other.field
            and (self.rows, self.cols) == (other.rows, other.cols)
            and self.entries == other.entries
        )

    def __repr__(self):
        return f"Matrix({self.field!r}, {self.rows}x{self.cols})"


def row_reduce_sparse(rows, field, want_kernel=False):
    """Incremental Gaussian elimination on sparse rows.

    ``rows`` is an iterable of dicts mapping comparable coordinate keys to
    scalars.  Returns ``(rank, kernel)`` where ``kernel`` is a list of dicts
    mapping row indices to coefficients of a vanishing combination (empty
    unless ``want_kernel``).  Deterministic: rows are consumed in order and
    the pivot of each row is its minimal coordinate.
    """
    F = field
    pivots = {}  # coord -> (row dict, aug dict)
    kernel = []
    rank = 0
    for idx, row in enumerate(rows):
        row = {c: v for c, v in row.items() if not F.is_zero(v)}
        aug = {idx: F.one} if want_kernel else None
        while row:
            c = min(row)
            if c not in pivots:
                break
            prow, paug = pivots[c]
            factor = row[c]
            for pc, pv in prow.items():
                nv = F.sub(row.get(pc, F.zero), F.mul(factor, pv))
                if F.is_zero(nv):
                    row.pop(pc, None)
                else:
                    row[pc] = nv
            if want_kernel:
                for pc, pv in paug.items():
                    nv = F.sub(aug.get(pc, F.zero), F.mul(factor, pv))
                    if F.is_zero(nv):
                        aug.pop(pc, None)
                    else:
                        aug[pc] = nv
        if row:
            c = min(row)
            inv = F.inv(row[c])
            row = {k: F.mul(inv, v) for k, v in row.items()}
            if want_kernel:
                aug = {k: F.mul(inv, v) for k, v in aug.items()}
            pivots[c] = (row, aug)
            rank += 1
        elif want_kernel:
            kernel.append(aug)
    return rank, kernel


def rref_vectors(vectors, length, field):
    """Reduced echelon form of a small list of dense coefficient vectors."""
    if not vectors:
        return []
    mat = Matrix.from_rows(field, [list(v) + [field.zero] * (length - len(v)) for v in vectors])
    rows, pivots = mat._rref()
    return [rows[i] for i in range(len(pivots))]
