"""Ground-truth index from first principles.

A seaweed is realized as the stabilizer of its flag pair: subspaces
spanned by leading coordinates (prefix sums of the first composition) and
by trailing coordinates (prefix sums of the second), inside gl(n) for type
A and inside the algebra preserving the antidiagonal bilinear form for
types B/C/D.  The stabilizer is the solution space of an explicit linear
constraint system (flag stabilization entries, plus the form relations
X^T J + J X = 0), solved exactly over the integers.

The index is then dim minus the maximal rank of the antisymmetric matrix
M_ij = f([x_i, x_j]) over sampled functionals f, with entries drawn mod a
31-bit prime (exact rational arithmetic available as a fallback for
certification).  None of this shares conventions with the meander or
reduction modules; that independence is what makes the cross-checks
meaningful.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .core import SeaweedSpec, xi_membership

DEFAULT_PRIME = 2**31 - 1
DEFAULT_AMBIENT_BOUND = 24


class OracleBoundError(ValueError):
    """Ambient matrix size above the configured realization bound."""


def form_matrix(algebra_type: str, m: int):
    """Gram matrix of the bilinear form: antidiagonal ones (orthogonal),
    or +1/-1 split at the middle (symplectic); None for type A."""
    if algebra_type == "A":
        return None
    G = np.zeros((m, m), dtype=np.int64)
    idx = np.arange(m)
    anti = m - 1 - idx
    if algebra_type == "C":
        half = m // 2
        G[idx[:half], anti[:half]] = 1
        G[idx[half:], anti[half:]] = -1
    else:
        G[idx, anti] = 1
    return G


@dataclass
class MatrixAlgebraBasis:
    """Integer basis of the stabilizer, each element a sum of at most two
    elementary matrices: (p1,q1,s1) and optionally (p2,q2,s2), 0-indexed.
    Elements are ordered by their lexicographically-least position, so the
    basis is deterministic and visibly independent."""

    algebra_type: str
    m: int
    p1: np.ndarray
    q1: np.ndarray
    s1: np.ndarray
    p2: np.ndarray
    q2: np.ndarray
    s2: np.ndarray

    @property
    def dim(self) -> int:
        return len(self.p1)

    def matrices(self) -> list[np.ndarray]:
        out = []
        for i in range(self.dim):
            X = np.zeros((self.m, self.m), dtype=np.int64)
            X[self.p1[i], self.q1[i]] = self.s1[i]
            if self.s2[i]:
                X[self.p2[i], self.q2[i]] += self.s2[i]
            out.append(X)
        return out

    def terms(self, i: int) -> list[tuple[int, int, int]]:
        t = [(int(self.p1[i]), int(self.q1[i]), int(self.s1[i]))]
        if self.s2[i]:
            t.append((int(self.p2[i]), int(self.q2[i]), int(self.s2[i])))
        return t

    def validate(self) -> None:
        """Linear independence, form membership, and bracket closure."""
        leads = set(zip(self.p1.tolist(), self.q1.tolist()))
        assert len(leads) == self.dim, "basis elements must have distinct leads"
        G = form_matrix(self.algebra_type, self.m)
        if G is not None:
            for X in self.matrices():
                assert not (X.T @ G + G @ X).any(), "element leaves the form algebra"
        class_of = np.full((self.m, self.m), -1, dtype=np.int64)
        rel = np.zeros((self.m, self.m), dtype=np.int64)
        for i in range(self.dim):
            for (p, q, s) in self.terms(i):
                class_of[p, q] = i
                rel[p, q] = s
        for i in range(self.dim):
            for j in range(i + 1, self.dim):
                net: dict[tuple[int, int], int] = {}
                for (a, b, s) in self.terms(i):
                    for (c, d, t) in self.terms(j):
                        if b == c:
                            net[(a, d)] = net.get((a, d), 0) + s * t
                        if d == a:
                            net[(c, b)] = net.get((c, b), 0) - s * t
                seen = set()
                for (p, q), v in net.items():
                    ci = int(class_of[p, q])
                    if v != 0 and ci < 0:
                        raise AssertionError(
                            f"bracket of elements {i},{j} leaves the span at {(p, q)}")
                    if ci < 0 or ci in seen:
                        continue
                    seen.add(ci)
                    ts = self.terms(ci)
                    lam = net.get((ts[0][0], ts[0][1]), 0) * ts[0][2]
                    for (pp, qq, ss) in ts[1:]:
                        if net.get((pp, qq), 0) != lam * ss:
                            raise AssertionError(
                                f"bracket of elements {i},{j} breaks class {ci}")


def _flag_kills(spec: SeaweedSpec, m: int) -> np.ndarray:
    """Entries forced to zero by stabilizing both flags (0-indexed mask).

    Flags are spans of leading coordinates (first composition) and of
    trailing coordinates (second composition).  One type-D quirk: in the
    crossed-arc regime the side of total n-1 stabilizes not the literal
    (n-1)-dimensional isotropic but its n-dimensional completion by the
    coordinate just across the center (e_{n+1} on the leading side, e_n on
    the trailing side), the counterpart of the two rewired crossing arcs.
    Outside that regime the literal (n-1)-dimensional space is correct:
    its stabilizer fixes both n-dimensional completions at once.
    """
    kills = np.zeros((m, m), dtype=bool)
    xi = xi_membership(spec)
    n = spec.n

    def kill_span(members: np.ndarray) -> None:
        inside = np.zeros(m, dtype=bool)
        inside[members] = True
        kills[np.ix_(~inside, inside)] = True

    if spec.algebra_type == "A":
        # descending flag of gl(n): trailing spans of suffix-sum dimension
        trailing_dims = [spec.bottom.total - P for P in spec.bottom.prefix[1:-1]]
    else:
        trailing_dims = list(spec.bottom.prefix[1:])
    cross_top = xi.in_xi and xi.full_side == "bottom"  # top has total n-1
    for P in spec.top.prefix[1:]:
        if cross_top and P == n - 1:
            kill_span(np.concatenate([np.arange(n - 1), [n]]))
        elif 0 < P < m:
            kills[P:, :P] = True
    cross_bottom = xi.in_xi and xi.full_side == "top"
    for D in trailing_dims:
        if cross_bottom and D == n - 1:
            kill_span(np.concatenate([[n - 1], np.arange(n + 1, m)]))
        elif 0 < D < m:
            kills[:m - D, m - D:] = True
    return kills


def realize(spec: SeaweedSpec, ambient_bound: int = DEFAULT_AMBIENT_BOUND,
            check: bool = True) -> MatrixAlgebraBasis:
    """Solve the stabilizer constraint system and return an integer basis.

    Flag constraints kill single entries.  The form constraints relate each
    entry to its mirror across the antidiagonal with a sign; entries on the
    antidiagonal itself are killed (orthogonal case) or free (symplectic).
    A kill on either member of a mirror pair propagates to both.
    """
    m = spec.ambient_size
    if m > ambient_bound:
        raise OracleBoundError(
            f"ambient size {m} exceeds the realization bound {ambient_bound}")
    kills = _flag_kills(spec, m)
    if spec.algebra_type == "A":
        pos = np.argwhere(~kills)
        dim = len(pos)
        zero = np.zeros(dim, dtype=np.int64)
        basis = MatrixAlgebraBasis(
            "A", m, pos[:, 0].astype(np.int64), pos[:, 1].astype(np.int64),
            np.ones(dim, dtype=np.int64), zero, zero.copy(), zero.copy())
    else:
        symmetric = spec.algebra_type in ("B", "D")
        idx = np.arange(m)
        if symmetric:
            kills[m - 1 - idx, idx] = True
        dead = kills | kills[::-1, ::-1].T  # mirror-propagated kills
        if symmetric:
            sgn = -np.ones((m, m), dtype=np.int64)
        else:
            g = np.ones(m, dtype=np.int64)
            g[m // 2:] = -1
            sgn = g[np.newaxis, :] * g[::-1][:, np.newaxis]  # g[q] * g[m-1-p]
        P1, Q1, S1, P2, Q2, S2 = [], [], [], [], [], []
        assigned = np.zeros((m, m), dtype=bool)
        for p, q in np.argwhere(~dead):
            if assigned[p, q]:
                continue
            pp, qq = m - 1 - q, m - 1 - p
            P1.append(p)
            Q1.append(q)
            S1.append(1)
            if (pp, qq) == (p, q):
                P2.append(0); Q2.append(0); S2.append(0)
            else:
                assigned[pp, qq] = True
                P2.append(pp); Q2.append(qq); S2.append(int(sgn[p, q]))
        basis = MatrixAlgebraBasis(
            spec.algebra_type, m,
            np.array(P1, dtype=np.int64), np.array(Q1, dtype=np.int64),
            np.array(S1, dtype=np.int64), np.array(P2, dtype=np.int64),
            np.array(Q2, dtype=np.int64), np.array(S2, dtype=np.int64))
    if check:
        basis.validate()
    return basis


def oracle_dim(spec: SeaweedSpec, ambient_bound: int = DEFAULT_AMBIENT_BOUND) -> int:
    return realize(spec, ambient_bound, check=False).dim


# ---------------------------------------------------------------------------
# the antisymmetric pairing and its rank


def _bracket_structure(basis: MatrixAlgebraBasis):
    """COO description of all pairwise brackets: entry arrays (row, col)
    into the dim x dim matrix, (lr, lc) into the functional table F, and a
    +-1 coefficient, using [E_ab, E_cd] = d(b,c) E_ad - d(d,a) E_cb and
    f(E_pq) = F[q, p]."""
    dim = basis.dim
    I, J = np.triu_indices(dim, 1)
    term_arrays = [(basis.p1, basis.q1, basis.s1), (basis.p2, basis.q2, basis.s2)]
    rows, cols, lr, lc, coef = [], [], [], [], []
    for (pu, qu, su) in term_arrays:
        siu = su[I]
        for (pv, qv, sv) in term_arrays:
            s = siu * sv[J]
            live = s != 0
            mask = live & (qu[I] == pv[J])
            rows.append(I[mask]); cols.append(J[mask])
            lr.append(qv[J][mask]); lc.append(pu[I][mask]); coef.append(s[mask])
            mask = live & (qv[J] == pu[I])
            rows.append(I[mask]); cols.append(J[mask])
            lr.append(qu[I][mask]); lc.append(pv[J][mask]); coef.append(-s[mask])
    cat = lambda xs: np.concatenate(xs) if xs else np.zeros(0, dtype=np.int64)
    return cat(rows), cat(cols), cat(lr), cat(lc), cat(coef)


def _rank_modp_numpy(M: np.ndarray, p: int) -> int:
    """Exact rank over F_p by vectorized Gaussian elimination (int64-safe:
    products stay below 2^63 for p < 2^31.5)."""
    A = np.array(M % p, dtype=np.int64)
    nrows, ncols = A.shape
    r = 0
    for c in range(ncols):
        piv = np.nonzero(A[r:, c])[0]
        if piv.size == 0:
            continue
        pr = r + int(piv[0])
        if pr != r:
            A[[r, pr]] = A[[pr, r]]
        inv = pow(int(A[r, c]), -1, p)
        A[r] = A[r] * inv % p
        below = np.nonzero(A[r + 1:, c])[0]
        if below.size:
            rows = below + r + 1
            A[rows] = (A[rows] - np.outer(A[rows, c], A[r])) % p
        r += 1
        if r == nrows:
            break
    return r


try:  # compiled elimination: ~10x on the exhaustive sweeps
    from numba import njit

    @njit(cache=True)
    def _rank_modp_compiled(A, p):  # pragma: no cover - numba source
        nrows, ncols = A.shape
        r = 0
        for c in range(ncols):
            piv = -1
            for i in range(r, nrows):
                if A[i, c] != 0:
                    piv = i
                    break
            if piv < 0:
                continue
            if piv != r:
                for j in range(c, ncols):
                    tmp = A[r, j]
                    A[r, j] = A[piv, j]
                    A[piv, j] = tmp
            # Fermat inverse; p is prime
            inv = 1
            base = A[r, c] % p
            e = p - 2
            while e > 0:
                if e & 1:
                    inv = inv * base % p
                base = base * base % p
                e >>= 1
            for j in range(c, ncols):
                A[r, j] = A[r, j] * inv % p
            for i in range(r + 1, nrows):
                f = A[i, c]
                if f != 0:
                    for j in range(c, ncols):
                        A[i, j] = (A[i, j] - f * A[r, j]) % p
            r += 1
            if r == nrows:
                break
        return r

    def _rank_modp(M: np.ndarray, p: int) -> int:
        return int(_rank_modp_compiled(np.array(M % p, dtype=np.int64), p))

except ImportError:  # pragma: no cover
    _rank_modp = _rank_modp_numpy


def _rank_exact(M: list[list[int]]) -> int:
    """Exact rank over the rationals (slow path, certification only)."""
    from fractions import Fraction

    A = [[Fraction(x) for x in row] for row in M]
    nrows = len(A)
    ncols = len(A[0]) if nrows else 0
    r = 0
    for c in range(ncols):
        piv = next((i for i in range(r, nrows) if A[i][c]), None)
        if piv is None:
            continue
        if piv != r:
            A[r], A[piv] = A[piv], A[r]
        inv = 1 / A[r][c]
        A[r] = [x * inv for x in A[r]]
        for i in range(r + 1, nrows):
            f = A[i][c]
            if f:
                A[i] = [x - f * y for x, y in zip(A[i], A[r])]
        r += 1
        if r == nrows:
            break
    return r


@dataclass(frozen=True)
class OracleResult:
    index: int
    trials: int
    ranks: tuple[int, ...]
    prime: int
    dim: int


def oracle_index(spec: SeaweedSpec, trials: int = 3, seed: int = 0,
                 prime: int = DEFAULT_PRIME,
                 ambient_bound: int = DEFAULT_AMBIENT_BOUND,
                 basis: MatrixAlgebraBasis | None = None,
                 check: bool = False) -> OracleResult:
    """dim minus the maximal observed rank of f([x_i, x_j]).

    Functionals are sampled from a seeded generator, one fresh table per
    trial; prime=0 switches to exact integer arithmetic (slow, for
    certifying single instances).  Observed ranks are always even (the
    pairing is antisymmetric); increasing trials can only refine the
    maximum.
    """
    if trials < 1:
        raise ValueError("need at least one trial")
    if basis is None:
        basis = realize(spec, ambient_bound, check=check)
    dim, m = basis.dim, basis.m
    rows, cols, lr, lc, coef = _bracket_structure(basis)
    rng = np.random.default_rng(seed % 2**63)  # any integer seed is accepted
    ranks = []
    for _ in range(trials):
        if prime:
            F = rng.integers(0, prime, size=(m, m), dtype=np.int64)
            vals = coef * F[lr, lc] % prime
            M = np.zeros((dim, dim), dtype=np.int64)
            np.add.at(M, (rows, cols), vals)
            M = (M - M.T) % prime
            rank = _rank_modp(M, prime)
        else:
            F = rng.integers(-2**20, 2**20, size=(m, m), dtype=np.int64)
            vals = coef * F[lr, lc]
            M = np.zeros((dim, dim), dtype=np.int64)
            np.add.at(M, (rows, cols), vals)
            M = M - M.T
            rank = _rank_exact(M.tolist())
        assert rank % 2 == 0, "rank of an antisymmetric pairing must be even"
        ranks.append(int(rank))
    return OracleResult(dim - max(ranks), trials, tuple(ranks), prime, dim)
