"""Generalized resultant of polynomials with geometric root runs.

An instance fixes a field, an element alpha of multiplicative order at
least r, a composition mu_0 + ... + mu_ell = r, and nonzero parameters
beta_i. Block i contributes the monic polynomial whose roots are the
run beta_i, beta_i*alpha, ..., beta_i*alpha^(tau_i - 1) with
tau_i = r - mu_i. Stacking the shift (band) matrices of these
polynomials gives an r x r matrix; its determinant factors as a
beta-independent constant times the product of all cross-block root
differences, and it vanishes exactly when two blocks collide, i.e.
beta_k / beta_i is a power alpha^t with -mu_i < t < mu_k. For two
blocks the stacked matrix is the Sylvester arrangement and the
determinant is the classical resultant.

Everything here is certified by evaluation over the finite field; no
symbolic computation is performed.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from random import Random

from .gf import Fe, FieldCtx
from .matpoly import (
    Mat,
    Poly,
    determinant,
    left_null_space,
    poly_add,
    poly_from_roots,
    poly_mul,
    poly_trim,
    vstack,
)


@dataclass(frozen=True)
class ResultantInstance:
    """(alpha, mu, beta) with the derived block sizes.

    Invariants: all beta_i nonzero, all mu_i >= 1, at least two blocks,
    and order(alpha) >= r = sum(mu).
    """

    ctx: FieldCtx
    alpha: Fe
    mu: tuple[int, ...]
    beta: tuple[Fe, ...]

    def __post_init__(self):
        object.__setattr__(self, "mu", tuple(int(m) for m in self.mu))
        object.__setattr__(self, "beta", tuple(int(b) for b in self.beta))
        if len(self.mu) < 2:
            raise ValueError("an instance needs at least two blocks")
        if len(self.beta) != len(self.mu):
            raise ValueError("mu and beta must have the same length")
        if any(m < 1 for m in self.mu):
            raise ValueError("block sizes must be positive")
        if any(b == 0 for b in self.beta):
            raise ValueError("beta entries must be nonzero")
        if self.alpha == 0 or self.ctx.order(self.alpha) < self.r:
            raise ValueError(
                f"alpha must have multiplicative order at least r = {self.r}"
            )

    @property
    def ell(self) -> int:
        return len(self.mu) - 1

    @property
    def r(self) -> int:
        return sum(self.mu)

    @property
    def taus(self) -> tuple[int, ...]:
        r = self.r
        return tuple(r - m for m in self.mu)

    @property
    def prefix_sums(self) -> tuple[int, ...]:
        """r_i = mu_0 + ... + mu_i."""
        out = []
        acc = 0
        for m in self.mu:
            acc += m
            out.append(acc)
        return tuple(out)


@dataclass(frozen=True)
class RelationWitness:
    """Polynomials u_i with deg u_i < mu_i, not all zero, satisfying
    sum_i u_i * M_i = 0. Verified on construction."""

    polys: tuple[Poly, ...]


def root_run_poly(inst: ResultantInstance, i: int) -> Poly:
    """Monic polynomial of block i: roots beta_i * alpha^j, j < tau_i."""
    ctx = inst.ctx
    tau_i = inst.taus[i]
    roots = [ctx.mul(inst.beta[i], ctx.pow(inst.alpha, j)) for j in range(tau_i)]
    return poly_from_roots(ctx, roots)


def coeff_band(inst: ResultantInstance, i: int) -> Mat:
    """mu_i x r band matrix: row h holds the coefficients of x^h * M_i."""
    coeffs = root_run_poly(inst, i)
    r = inst.r
    rows = []
    for h in range(inst.mu[i]):
        row = [0] * r
        row[h : h + len(coeffs)] = coeffs
        rows.append(row)
    return Mat.from_rows(inst.ctx, rows, cols=r)


def stacked_matrix(inst: ResultantInstance) -> Mat:
    """The r x r stack of all block band matrices."""
    return vstack([coeff_band(inst, i) for i in range(inst.ell + 1)])


def det_stacked(inst: ResultantInstance) -> Fe:
    """The determinant, computed directly by elimination."""
    return determinant(stacked_matrix(inst))


def _power_node_vdet(ctx: FieldCtx, alpha: Fe, k: int) -> Fe:
    """det of the Vandermonde on nodes 1, alpha, ..., alpha^(k-1):
    the pair product of node differences."""
    acc = 1
    pows = [ctx.pow(alpha, j) for j in range(k)]
    for s in range(k):
        for t in range(s + 1, k):
            acc = ctx.mul(acc, ctx.sub(pows[t], pows[s]))
    return acc


def leading_constant(ctx: FieldCtx, alpha: Fe, mu) -> Fe:
    """The beta-independent constant of the determinant factorization.

    kappa = alpha^(P-N) * detV(r)^(-2)
            * prod_i [ detV(mu_i)^2 * prod_{s<mu_i} prod_{mu_i<=t<r} (alpha^t - alpha^s) ]

    with detV(k) the power-node Vandermonde determinant and
    P - N = sum_i mu_i * C(tau_i, 2). The exponent is carried as an
    exact integer and reduced only at the final exponentiation.
    """
    mu = tuple(int(m) for m in mu)
    if any(m < 1 for m in mu):
        raise ValueError("block sizes must be positive")
    r = sum(mu)
    if alpha == 0 or ctx.order(alpha) < r:
        raise ValueError(f"alpha must have multiplicative order at least r = {r}")
    taus = [r - m for m in mu]
    exponent = sum(m * math.comb(t, 2) for m, t in zip(mu, taus))
    pows = [ctx.pow(alpha, j) for j in range(r)]
    vr = _power_node_vdet(ctx, alpha, r)
    acc = ctx.mul(ctx.pow(alpha, exponent), ctx.inv(ctx.mul(vr, vr)))
    for m_i in mu:
        v = _power_node_vdet(ctx, alpha, m_i)
        acc = ctx.mul(acc, ctx.mul(v, v))
        for s in range(m_i):
            for t in range(m_i, r):
                acc = ctx.mul(acc, ctx.sub(pows[t], pows[s]))
    return acc


def det_product_form(inst: ResultantInstance) -> Fe:
    """The closed form: leading constant times all cross-block root
    differences prod_{i<k} prod_{s<mu_i} prod_{t<mu_k}
    (beta_k alpha^s - beta_i alpha^t)."""
    ctx = inst.ctx
    acc = leading_constant(ctx, inst.alpha, inst.mu)
    pows = [ctx.pow(inst.alpha, j) for j in range(max(inst.mu))]
    for i in range(inst.ell + 1):
        for k in range(i + 1, inst.ell + 1):
            bi, bk = inst.beta[i], inst.beta[k]
            for s in range(inst.mu[i]):
                lhs = ctx.mul(bk, pows[s])
                for t in range(inst.mu[k]):
                    acc = ctx.mul(acc, ctx.sub(lhs, ctx.mul(bi, pows[t])))
    return acc


def _t_scan_order(mu_i: int, mu_k: int):
    # 0, 1, -1, 2, -2, ... clipped to the open range (-mu_i, mu_k)
    for a in range(max(mu_i, mu_k)):
        if a < mu_k:
            yield a
        if 0 < a < mu_i:
            yield -a


def find_ratio_collision(inst: ResultantInstance) -> tuple[int, int, int] | None:
    """A triple (i, k, t) with beta_k / beta_i = alpha^t and
    -mu_i < t < mu_k, or None. Deterministic scan: smallest (i, k, |t|)
    with the nonnegative t tried first on ties."""
    ctx = inst.ctx
    for i in range(inst.ell + 1):
        for k in range(inst.ell + 1):
            if k == i:
                continue
            ratio = ctx.div(inst.beta[k], inst.beta[i])
            for t in _t_scan_order(inst.mu[i], inst.mu[k]):
                if ratio == ctx.pow(inst.alpha, t):
                    return (i, k, t)
    return None


def find_kernel_relation(inst: ResultantInstance) -> RelationWitness | None:
    """A nonzero left-kernel vector of the stacked matrix, reassembled
    into the block polynomials u_i; None iff the matrix is nonsingular.
    The returned relation is re-verified by polynomial arithmetic."""
    a = stacked_matrix(inst)
    basis = left_null_space(a)
    if not basis:
        return None
    u = basis[0]
    ctx = inst.ctx
    polys = []
    off = 0
    for m_i in inst.mu:
        polys.append(poly_trim(u[off : off + m_i]))
        off += m_i
    total: Poly = ()
    for i, u_i in enumerate(polys):
        total = poly_add(ctx, total, poly_mul(ctx, u_i, root_run_poly(inst, i)))
    if total != ():
        raise AssertionError("left-kernel vector does not cancel the blocks")
    if all(p == () for p in polys):
        raise AssertionError("kernel basis produced the zero relation")
    return RelationWitness(tuple(polys))


def verify_relation(inst: ResultantInstance, witness: RelationWitness) -> bool:
    """Independent replay: degree constraints, not all zero, and
    sum_i u_i * M_i = 0."""
    ctx = inst.ctx
    if len(witness.polys) != inst.ell + 1:
        return False
    if all(p == () for p in witness.polys):
        return False
    total: Poly = ()
    for i, u_i in enumerate(witness.polys):
        if len(u_i) > inst.mu[i]:
            return False
        total = poly_add(ctx, total, poly_mul(ctx, u_i, root_run_poly(inst, i)))
    return total == ()


# -- instance sampling (seeded, for certification corpora) -------------

def order_at_least(ctx: FieldCtx, r: int) -> list[Fe]:
    """All elements of multiplicative order >= r, ascending."""
    return [x for x in ctx.nonzero_elements() if ctx.order(x) >= r]


def sample_instance(ctx: FieldCtx, rng: Random, ell: int, r: int) -> ResultantInstance:
    """A uniform instance with the given block count and total size."""
    if r < ell + 1:
        raise ValueError("r must be at least ell + 1")
    candidates = order_at_least(ctx, r)
    if not candidates:
        raise ValueError(f"no element of order >= {r} in {ctx!r}")
    alpha = rng.choice(candidates)
    cuts = sorted(rng.sample(range(1, r), ell)) if ell else []
    bounds_ = [0, *cuts, r]
    mu = tuple(bounds_[i + 1] - bounds_[i] for i in range(ell + 1))
    beta = tuple(rng.randrange(1, ctx.q) for _ in range(ell + 1))
    return ResultantInstance(ctx, alpha, mu, beta)


def boundary_instance(
    ctx: FieldCtx, rng: Random, ell: int, r: int, t_offset: str
) -> ResultantInstance:
    """An instance with one ratio pinned to the edge of the collision
    range: t_offset selects t = -mu_i (just outside), mu_k - 1 (the last
    inside value) or mu_k (just outside)."""
    inst = sample_instance(ctx, rng, ell, r)
    i = rng.randrange(ell + 1)
    k = rng.randrange(ell + 1)
    while k == i:
        k = rng.randrange(ell + 1)
    if t_offset == "-mu_i":
        t = -inst.mu[i]
    elif t_offset == "mu_k-1":
        t = inst.mu[k] - 1
    elif t_offset == "mu_k":
        t = inst.mu[k]
    else:
        raise ValueError(f"unknown boundary kind {t_offset!r}")
    beta = list(inst.beta)
    beta[k] = ctx.mul(beta[i], ctx.pow(inst.alpha, t))
    return ResultantInstance(ctx, inst.alpha, inst.mu, tuple(beta))
