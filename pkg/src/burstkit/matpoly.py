"""Dense matrices and univariate polynomials over a FieldCtx.

Polynomials are tuples of element indices, lowest degree first, with no
trailing zeros; the zero polynomial is the empty tuple and its degree is
the distinguished NEG_INF marker. Matrices are dense and small (nothing
in scope exceeds a few hundred rows), so plain Gaussian elimination with
explicit row-swap sign tracking is exact and fast enough.
"""

from __future__ import annotations

from .gf import Fe, FieldCtx

Poly = tuple[Fe, ...]

NEG_INF = float("-inf")


# -- polynomials ------------------------------------------------------

def poly_trim(coeffs) -> Poly:
    c = list(coeffs)
    while c and c[-1] == 0:
        c.pop()
    return tuple(c)


def poly_degree(a: Poly):
    return len(a) - 1 if a else NEG_INF


def poly_add(ctx: FieldCtx, a: Poly, b: Poly) -> Poly:
    if len(a) < len(b):
        a, b = b, a
    out = list(a)
    for i, c in enumerate(b):
        out[i] = ctx.add(out[i], c)
    return poly_trim(out)


def poly_neg(ctx: FieldCtx, a: Poly) -> Poly:
    return tuple(ctx.neg(c) for c in a)


def poly_sub(ctx: FieldCtx, a: Poly, b: Poly) -> Poly:
    return poly_add(ctx, a, poly_neg(ctx, b))


def poly_scale(ctx: FieldCtx, a: Poly, c: Fe) -> Poly:
    if c == 0:
        return ()
    return poly_trim(ctx.mul(x, c) for x in a)


def poly_mul(ctx: FieldCtx, a: Poly, b: Poly) -> Poly:
    if not a or not b:
        return ()
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                if y:
                    out[i + j] = ctx.add(out[i + j], ctx.mul(x, y))
    return poly_trim(out)


def poly_eval(ctx: FieldCtx, a: Poly, x: Fe) -> Fe:
    """Horner evaluation."""
    acc = 0
    for c in reversed(a):
        acc = ctx.add(ctx.mul(acc, x), c)
    return acc


def poly_divmod(ctx: FieldCtx, a: Poly, b: Poly) -> tuple[Poly, Poly]:
    """Quotient and remainder with deg(remainder) < deg(b)."""
    if not b:
        raise ZeroDivisionError("polynomial division by the zero polynomial")
    rem = list(a)
    db = len(b) - 1
    lead_inv = ctx.inv(b[-1])
    if len(rem) <= db:
        return (), poly_trim(rem)
    quot = [0] * (len(rem) - db)
    for top in range(len(rem) - 1, db - 1, -1):
        c = rem[top]
        if c == 0:
            continue
        f = ctx.mul(c, lead_inv)
        quot[top - db] = f
        for j in range(db + 1):
            rem[top - db + j] = ctx.sub(rem[top - db + j], ctx.mul(f, b[j]))
    return poly_trim(quot), poly_trim(rem)


def poly_from_roots(ctx: FieldCtx, roots) -> Poly:
    """Monic polynomial with the given root multiset."""
    out: Poly = (1,)
    for r in roots:
        out = poly_mul(ctx, out, (ctx.neg(r), 1))
    return out


# -- matrices ---------------------------------------------------------

class Mat:
    """Dense row-major matrix over a fixed field."""

    __slots__ = ("ctx", "rows", "cols", "data")

    def __init__(self, ctx: FieldCtx, rows: int, cols: int, data=None):
        self.ctx = ctx
        self.rows = rows
        self.cols = cols
        if data is None:
            self.data = [0] * (rows * cols)
        else:
            self.data = list(data)
            if len(self.data) != rows * cols:
                raise ValueError("data length does not match dimensions")

    @classmethod
    def from_rows(cls, ctx: FieldCtx, rows, cols: int | None = None) -> "Mat":
        rows = [list(r) for r in rows]
        if cols is None:
            if not rows:
                raise ValueError("cannot infer column count from an empty row list")
            cols = len(rows[0])
        flat = []
        for r in rows:
            if len(r) != cols:
                raise ValueError("ragged rows")
            flat.extend(r)
        return cls(ctx, len(rows), cols, flat)

    @classmethod
    def identity(cls, ctx: FieldCtx, n: int) -> "Mat":
        m = cls(ctx, n, n)
        for i in range(n):
            m.data[i * n + i] = 1
        return m

    def at(self, i: int, j: int) -> Fe:
        return self.data[i * self.cols + j]

    def row(self, i: int) -> list[Fe]:
        return self.data[i * self.cols : (i + 1) * self.cols]

    def col(self, j: int) -> list[Fe]:
        return self.data[j :: self.cols]

    def to_rows(self) -> list[list[Fe]]:
        return [self.row(i) for i in range(self.rows)]

    def transpose(self) -> "Mat":
        out = Mat(self.ctx, self.cols, self.rows)
        for i in range(self.rows):
            base = i * self.cols
            for j in range(self.cols):
                out.data[j * self.rows + i] = self.data[base + j]
        return out

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, Mat)
            and self.ctx == other.ctx
            and self.rows == other.rows
            and self.cols == other.cols
            and self.data == other.data
        )

    def __repr__(self) -> str:
        return f"Mat({self.rows}x{self.cols} over {self.ctx!r})"


def _check_same_field(a: Mat, b: Mat) -> None:
    if a.ctx != b.ctx:
        raise ValueError("matrices live over different fields")


def mat_mul(a: Mat, b: Mat) -> Mat:
    _check_same_field(a, b)
    if a.cols != b.rows:
        raise ValueError("inner dimensions do not match")
    ctx = a.ctx
    out = Mat(ctx, a.rows, b.cols)
    for i in range(a.rows):
        arow = a.row(i)
        orow = out.data
        base = i * b.cols
        for k, av in enumerate(arow):
            if av == 0:
                continue
            bbase = k * b.cols
            for j in range(b.cols):
                bv = b.data[bbase + j]
                if bv:
                    orow[base + j] = ctx.add(orow[base + j], ctx.mul(av, bv))
    return out


def mat_vec(a: Mat, v) -> list[Fe]:
    if a.cols != len(v):
        raise ValueError("vector length does not match column count")
    ctx = a.ctx
    out = []
    for i in range(a.rows):
        acc = 0
        base = i * a.cols
        for j, x in enumerate(v):
            if x:
                h = a.data[base + j]
                if h:
                    acc = ctx.add(acc, ctx.mul(h, x))
        out.append(acc)
    return out


def vstack(mats: list[Mat]) -> Mat:
    if not mats:
        raise ValueError("nothing to stack")
    cols = mats[0].cols
    ctx = mats[0].ctx
    flat = []
    rows = 0
    for m in mats:
        if m.cols != cols or m.ctx != ctx:
            raise ValueError("stacked matrices must agree on field and width")
        flat.extend(m.data)
        rows += m.rows
    return Mat(ctx, rows, cols, flat)


def determinant(m: Mat) -> Fe:
    """Exact determinant via pivoted elimination with swap-sign tracking."""
    if m.rows != m.cols:
        raise ValueError("determinant of a non-square matrix")
    ctx = m.ctx
    n = m.rows
    rs = m.to_rows()
    det = 1
    for c in range(n):
        sel = next((i for i in range(c, n) if rs[i][c] != 0), None)
        if sel is None:
            return 0
        if sel != c:
            rs[c], rs[sel] = rs[sel], rs[c]
            det = ctx.neg(det)
        piv = rs[c][c]
        det = ctx.mul(det, piv)
        inv = ctx.inv(piv)
        prow = rs[c]
        for i in range(c + 1, n):
            f = rs[i][c]
            if f:
                f = ctx.mul(f, inv)
                rs[i] = [ctx.sub(x, ctx.mul(f, y)) for x, y in zip(rs[i], prow)]
    return det


def rref(m: Mat) -> tuple[Mat, tuple[int, ...]]:
    """Reduced row-echelon form and the tuple of pivot columns."""
    ctx = m.ctx
    rs = m.to_rows()
    pivots = []
    pr = 0
    for c in range(m.cols):
        if pr == m.rows:
            break
        sel = next((i for i in range(pr, m.rows) if rs[i][c] != 0), None)
        if sel is None:
            continue
        rs[pr], rs[sel] = rs[sel], rs[pr]
        inv = ctx.inv(rs[pr][c])
        if inv != 1:
            rs[pr] = [ctx.mul(inv, x) for x in rs[pr]]
        prow = rs[pr]
        for i in range(m.rows):
            if i != pr and rs[i][c] != 0:
                f = rs[i][c]
                rs[i] = [ctx.sub(x, ctx.mul(f, y)) for x, y in zip(rs[i], prow)]
        pivots.append(c)
        pr += 1
    return Mat.from_rows(ctx, rs, cols=m.cols), tuple(pivots)


def rank(m: Mat) -> int:
    return len(rref(m)[1])


def _null_basis_from_rref(r: Mat, pivots: tuple[int, ...], cols: int) -> list[list[Fe]]:
    ctx = r.ctx
    pivot_set = set(pivots)
    basis = []
    for f in range(cols):
        if f in pivot_set:
            continue
        v = [0] * cols
        v[f] = 1
        for i, c in enumerate(pivots):
            v[c] = ctx.neg(r.at(i, f))
        basis.append(v)
    return basis


def null_space(m: Mat) -> list[list[Fe]]:
    """Canonical reduced-echelon basis of {x : m x = 0}."""
    r, pivots = rref(m)
    return _null_basis_from_rref(r, pivots, m.cols)


def left_null_space(m: Mat) -> list[list[Fe]]:
    """Canonical basis of {u : u m = 0}."""
    return null_space(m.transpose())


def solve_affine(a: Mat, b) -> tuple[list[Fe], list[list[Fe]]] | None:
    """Solve a x = b; None iff inconsistent.

    Returns a particular solution (free variables set to zero) together
    with the canonical reduced-echelon null-space basis, so the full
    solution set has exactly q^len(basis) members.
    """
    if a.rows != len(b):
        raise ValueError("right-hand side length does not match row count")
    aug_rows = [a.row(i) + [b[i]] for i in range(a.rows)]
    if a.rows == 0:
        # no constraints: the whole space solves
        return [0] * a.cols, [
            [1 if j == f else 0 for j in range(a.cols)] for f in range(a.cols)
        ]
    aug = Mat.from_rows(a.ctx, aug_rows, cols=a.cols + 1)
    r, pivots = rref(aug)
    if a.cols in pivots:
        return None
    particular = [0] * a.cols
    for i, c in enumerate(pivots):
        particular[c] = r.at(i, a.cols)
    basis = []
    pivot_set = set(pivots)
    for f in range(a.cols):
        if f in pivot_set:
            continue
        v = [0] * a.cols
        v[f] = 1
        for i, c in enumerate(pivots):
            v[c] = a.ctx.neg(r.at(i, f))
        basis.append(v)
    return particular, basis


def vandermonde(ctx: FieldCtx, xs) -> Mat:
    """Square matrix with entry (s, t) = xs[t]^s."""
    xs = list(xs)
    m = len(xs)
    rows = [[ctx.pow(x, s) for x in xs] for s in range(m)]
    if m == 0:
        return Mat(ctx, 0, 0)
    return Mat.from_rows(ctx, rows, cols=m)
