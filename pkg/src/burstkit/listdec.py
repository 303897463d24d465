"""The complete burst list decoder, detection predicate, and exhaustive
list-size certification.

decode(y) returns exactly the codewords within a single tau-burst of y
(the set-valued complete decoder; words near no codeword decode to the
empty set). For linear codes each candidate window costs one affine
solve against the syndrome. Certification never scans received words:
the linear path buckets every tau-burst by syndrome and reads the
largest bucket, the explicit path buckets codeword+burst sums; the two
paths compute the same maximum and are cross-checked in the tests.
"""

from __future__ import annotations

from dataclasses import dataclass

from . import _caps
from .burst import (
    BurstPattern,
    BurstSpace,
    Word,
    anchored_spans,
    count_bursts,
    count_bursts_phased,
    enumerate_bursts,
    is_burst,
)
from .codes import CodeHandle, ExplicitCode, LinearCode
from .matpoly import Mat, rank, solve_affine


@dataclass
class ListDecodeResult:
    """Complete candidate list plus per-window bookkeeping.

    candidates holds (codeword, burst) pairs sorted by codeword with one
    entry per codeword; window_stats[start] counts the candidates whose
    burst support fits the window starting there.
    """

    candidates: list[tuple[Word, BurstPattern]]
    window_stats: dict[int, int]

    @property
    def list_size(self) -> int:
        return len(self.candidates)


@dataclass
class CertReport:
    detects: bool
    max_list: int
    witness: tuple[tuple[Word, BurstPattern], ...] | None
    work: dict[str, int]
    ell: int | None = None

    @property
    def decodable(self) -> bool | None:
        return None if self.ell is None else self.max_list <= self.ell


def _as_code(code):
    return code.code if isinstance(code, CodeHandle) else code


def _word_sub(ctx, a, b) -> Word:
    return tuple(ctx.sub(x, y) for x, y in zip(a, b))


def _word_add(ctx, a, b) -> Word:
    return tuple(ctx.add(x, y) for x, y in zip(a, b))


def _support_in(word, win: range) -> bool:
    return all(x == 0 for i, x in enumerate(word) if i not in win)


# -- decoding ----------------------------------------------------------

def decode(code, y, tau: int, phased: bool = False, cap: int | None = None) -> ListDecodeResult:
    """All codewords c such that y - c is a tau-burst (support inside an
    aligned window for the phased variant), each with its burst."""
    code = _as_code(code)
    y = tuple(y)
    if len(y) != code.n:
        raise ValueError(f"received word has length {len(y)}, expected {code.n}")
    space = BurstSpace(code.n, tau, phased)
    if isinstance(code, LinearCode):
        return _decode_linear(code, y, tau, space, cap)
    return _decode_explicit(code, y, tau, space, cap)


def _decode_linear(code: LinearCode, y: Word, tau: int, space: BurstSpace, cap) -> ListDecodeResult:
    ctx = code.ctx
    limit = _caps.solutions_cap(cap)
    syn = list(code.syndrome(y))
    found: dict[Word, BurstPattern] = {}
    stats: dict[int, int] = {}
    for win in space.windows:
        cols = list(win)
        a = Mat.from_rows(
            ctx, [[code.H.at(i, j) for j in cols] for i in range(code.r)], cols=len(cols)
        )
        sol = solve_affine(a, syn)
        if sol is None:
            stats[win.start] = 0
            continue
        particular, basis = sol
        _caps.check("window solution set q^b", ctx.q ** len(basis), limit)
        kept = 0
        for ew in _affine_members(ctx, particular, basis):
            e = [0] * code.n
            for j, v in zip(cols, ew):
                e[j] = v
            e = tuple(e)
            if not is_burst(e, tau):
                continue
            kept += 1
            c = _word_sub(ctx, y, e)
            if c not in found:
                found[c] = BurstPattern.from_word(e, tau)
        stats[win.start] = kept
    candidates = sorted(found.items())
    return ListDecodeResult(candidates, stats)


def _affine_members(ctx, particular, basis):
    """Iterate the affine set particular + span(basis)."""
    words = [tuple(particular)]
    q = ctx.q
    for b in basis:
        scaled = [tuple(ctx.mul(a, x) for x in b) for a in range(1, q)]
        nxt = []
        for w in words:
            nxt.append(w)
            for sc in scaled:
                nxt.append(tuple(ctx.add(x, s) for x, s in zip(w, sc)))
        words = nxt
    return iter(words)


def _decode_explicit(code: ExplicitCode, y: Word, tau: int, space: BurstSpace, cap) -> ListDecodeResult:
    ctx = code.ctx
    _caps.check("explicit codeword scan", code.size, _caps.codewords_cap(cap))
    windows = space.windows
    found: dict[Word, BurstPattern] = {}
    stats: dict[int, int] = {win.start: 0 for win in windows}
    for c in code.codewords:
        e = _word_sub(ctx, y, c)
        if not is_burst(e, tau):
            continue
        hit = False
        for win in windows:
            if _support_in(e, win):
                stats[win.start] += 1
                hit = True
        if hit:
            found[c] = BurstPattern.from_word(e, tau)
    candidates = sorted(found.items())
    return ListDecodeResult(candidates, stats)


# -- detection ----------------------------------------------------------

def detects_single_burst(code, tau: int, cap: int | None = None) -> bool:
    """True iff no difference of two distinct codewords is a tau-burst.

    For a linear code this is the window test: every set of tau
    consecutive parity-check columns must be linearly independent
    (a dependent window is exactly a nonzero tau-burst codeword). The
    explicit path scans pairwise differences.
    """
    code = _as_code(code)
    if isinstance(code, LinearCode):
        for win in BurstSpace(code.n, tau).windows:
            cols = list(win)
            a = Mat.from_rows(
                code.ctx,
                [[code.H.at(i, j) for j in cols] for i in range(code.r)],
                cols=len(cols),
            )
            if rank(a) != len(cols):
                return False
        return True
    limit = _caps.enum_cap(cap)
    _caps.check("pairwise difference scan |C|^2", code.size**2, limit)
    ctx = code.ctx
    for i, c1 in enumerate(code.codewords):
        for c2 in code.codewords[i + 1 :]:
            if is_burst(_word_sub(ctx, c1, c2), tau):
                return False
    return True


# -- certification -------------------------------------------------------

def _syndrome_ops(code: LinearCode):
    """Per-field encoding of syndrome vectors for the bucketing scan.

    Returns (zero, scaled, combine, finalize): scaled[j][d] is d times
    column j of H, combine adds two encoded syndromes, finalize turns an
    encoded syndrome into a hashable integer key. Characteristic-2
    fields pack the whole vector into one int so combine is XOR.
    """
    ctx = code.ctx
    r, n, q = code.r, code.n, ctx.q
    if ctx.p == 2:
        bits = max(1, ctx.m)

        def pack(vec):
            k = 0
            for i in reversed(range(r)):
                k = (k << bits) | vec[i]
            return k

        scaled = [
            [pack([ctx.mul(d, code.H.at(i, j)) for i in range(r)]) for d in range(q)]
            for j in range(n)
        ]
        return 0, scaled, (lambda a, b: a ^ b), (lambda a: a)

    if ctx.m == 1:
        p = ctx.p

        def combine(a, b):
            return tuple((x + y) % p for x, y in zip(a, b))
    else:
        add = ctx.add

        def combine(a, b):
            return tuple(add(x, y) for x, y in zip(a, b))

    def finalize(vec):
        k = 0
        for x in reversed(vec):
            k = k * q + x
        return k

    zero = (0,) * r
    scaled = [
        [tuple(ctx.mul(d, code.H.at(i, j)) for i in range(r)) for d in range(q)]
        for j in range(n)
    ]
    return zero, scaled, combine, finalize


def _bucket_syndromes(code: LinearCode, space: BurstSpace, cap: int | None = None) -> dict[int, int]:
    """Count tau-bursts per syndrome key, the zero burst included."""
    ctx = code.ctx
    limit = _caps.enum_cap(cap)
    _caps.check("burst bucketing q^tau * n", ctx.q ** space.tau * space.n, limit)
    zero, scaled, combine, finalize = _syndrome_ops(code)
    q = ctx.q
    buckets: dict[int, int] = {finalize(zero): 1}
    get = buckets.get
    for start, width in anchored_spans(space):
        local = scaled[start : start + width]

        def rec(idx: int, acc) -> None:
            if idx == width:
                k = finalize(acc)
                buckets[k] = get(k, 0) + 1
                return
            tab = local[idx]
            if idx > 0:
                rec(idx + 1, acc)
            for d in range(1, q):
                rec(idx + 1, combine(acc, tab[d]))

        rec(0, zero)
    total = count_bursts_phased(q, space.n, space.tau) if space.phased else count_bursts(
        q, space.n, space.tau
    )
    if sum(buckets.values()) != total:
        raise AssertionError("bucketed burst count disagrees with the closed form")
    return buckets


def _collect_bucket(
    code: LinearCode, space: BurstSpace, target: int, limit: int
) -> list[Word]:
    """First `limit` bursts (enumeration order) whose syndrome key is target."""
    ctx = code.ctx
    zero, scaled, combine, finalize = _syndrome_ops(code)
    q = ctx.q
    n = space.n
    out: list[Word] = []
    if finalize(zero) == target:
        out.append((0,) * n)
    for start, width in anchored_spans(space):
        if len(out) >= limit:
            break
        local = scaled[start : start + width]
        digits = [0] * width

        def rec(idx: int, acc) -> bool:
            if idx == width:
                if finalize(acc) == target:
                    w = [0] * n
                    w[start : start + width] = digits
                    out.append(tuple(w))
                    if len(out) >= limit:
                        return True
                return False
            tab = local[idx]
            lo = 1 if idx == 0 else 0
            for d in range(lo, q):
                digits[idx] = d
                nxt = acc if d == 0 else combine(acc, tab[d])
                if rec(idx + 1, nxt):
                    return True
            return False

        rec(0, zero)
    return out


def max_list_size(
    code,
    tau: int,
    phased: bool = False,
    ell: int | None = None,
    cap: int | None = None,
) -> CertReport:
    """The definitional maximum of |decode(y)| over all received words.

    When ell is given and the maximum exceeds it, the report carries an
    (ell+1)-tuple witness of distinct (codeword, burst) pairs summing to
    one common word.
    """
    code = _as_code(code)
    space = BurstSpace(code.n, tau, phased)
    if isinstance(code, LinearCode):
        report = _max_list_linear(code, space, ell, cap)
    else:
        report = _max_list_explicit(code, space, ell, cap)
    report.ell = ell
    return report


def _max_list_linear(code: LinearCode, space: BurstSpace, ell, cap) -> CertReport:
    ctx = code.ctx
    buckets = _bucket_syndromes(code, space, cap)
    max_count = max(buckets.values())
    witness = None
    if ell is not None and max_count > ell:
        target = min(k for k, v in buckets.items() if v == max_count)
        bursts = _collect_bucket(code, space, target, ell + 1)
        y = bursts[0]
        witness = tuple(
            (_word_sub(ctx, y, e), BurstPattern.from_word(e, space.tau)) for e in bursts
        )
    work = {
        "bursts": sum(buckets.values()),
        "buckets": len(buckets),
        "windows": len(space.windows),
    }
    detects = detects_single_burst(code, space.tau)
    return CertReport(detects, max_count, witness, work)


def _max_list_explicit(code: ExplicitCode, space: BurstSpace, ell, cap) -> CertReport:
    ctx = code.ctx
    limit = _caps.enum_cap(cap)
    n_bursts = (
        count_bursts_phased(ctx.q, space.n, space.tau)
        if space.phased
        else count_bursts(ctx.q, space.n, space.tau)
    )
    _caps.check("sum bucketing |C| * V", code.size * n_bursts, limit)
    buckets: dict[Word, int] = {}
    get = buckets.get
    for e in enumerate_bursts(ctx, space, cap):
        for c in code.codewords:
            y = _word_add(ctx, c, e)
            buckets[y] = get(y, 0) + 1
    max_count = max(buckets.values())
    witness = None
    if ell is not None and max_count > ell:
        y = min(k for k, v in buckets.items() if v == max_count)
        pairs = []
        for c in code.codewords:
            e = _word_sub(ctx, y, c)
            if is_burst(e, space.tau) and (
                not space.phased or any(_support_in(e, w) for w in space.windows)
            ):
                pairs.append((c, BurstPattern.from_word(e, space.tau)))
            if len(pairs) == ell + 1:
                break
        witness = tuple(pairs)
    work = {
        "bursts": n_bursts,
        "pairs": code.size * n_bursts,
        "buckets": len(buckets),
    }
    detects = detects_single_burst(code, space.tau, cap)
    return CertReport(detects, max_count, witness, work)


def certify(code, tau: int, ell: int, cap: int | None = None) -> CertReport:
    """Detection plus list-decodability at list size ell; when the code
    is not decodable the witness replays the refutation."""
    if ell < 1:
        raise ValueError("the list size bound must be at least 1")
    return max_list_size(code, tau, phased=False, ell=ell, cap=cap)


def replay_witness(code, witness, tau: int, phased: bool = False) -> bool:
    """Re-validate a refutation witness through independent arithmetic:
    pairs distinct, bursts valid, codewords in the code, sums equal."""
    code = _as_code(code)
    ctx = code.ctx
    if witness is None or len(witness) < 2:
        return False
    space = BurstSpace(code.n, tau, phased)
    seen_pairs = set()
    common = None
    for c, pat in witness:
        e = pat.expand(code.n)
        if not is_burst(e, tau):
            return False
        if phased and not any(_support_in(e, w) for w in space.windows):
            return False
        if isinstance(code, LinearCode):
            if not code.contains(c):
                return False
        elif not code.contains(c):
            return False
        y = _word_add(ctx, c, e)
        if common is None:
            common = y
        elif y != common:
            return False
        if (c, e) in seen_pairs:
            return False
        seen_pairs.add((c, e))
    return True
