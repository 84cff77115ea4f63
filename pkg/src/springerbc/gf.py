"""Small finite fields GF(p^k) with p^k <= 64, and exact dense linear algebra.

Field elements are integers in [0, q) encoding base-p digit vectors, i.e.
coefficients of the residue polynomial modulo a fixed irreducible.  All
field operations are dense table lookups; the tables are built once per
field from a log/antilog pair over a multiplicative generator.  Matrices
are lists of row lists of element codes.  Gaussian elimination pivots on
the first nonzero entry, so every computation is reproducible.
"""

import itertools


def _smallest_prime_factor(n):
    d = 2
    while d * d <= n:
        if n % d == 0:
            return d
        d += 1
    return n


def _prime_power(q):
    if not (2 <= q <= 64):
        raise ValueError(f"field size must be in [2, 64], got {q}")
    p = _smallest_prime_factor(q)
    k, m = 0, q
    while m % p == 0:
        m //= p
        k += 1
    if m != 1:
        raise ValueError(f"{q} is not a prime power")
    return p, k


def _poly_trim(a):
    while a and a[-1] == 0:
        a.pop()
    return a


def _poly_mul(a, b, p):
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] = (out[i + j] + x * y) % p
    return _poly_trim(out)


def _poly_mod(a, m, p):
    a = list(a)
    inv_lead = pow(m[-1], p - 2, p)
    while len(a) >= len(m):
        c = (a[-1] * inv_lead) % p
        shiftlen = len(a) - len(m)
        if c:
            for i, y in enumerate(m):
                a[shiftlen + i] = (a[shiftlen + i] - c * y) % p
        _poly_trim(a)
        if not a:
            break
    return a


def _irreducible(p, k):
    """First monic irreducible of degree k over GF(p), ascending coefficients."""
    lower = []
    for d in range(1, k // 2 + 1):
        for tail in itertools.product(range(p), repeat=d):
            lower.append(list(tail) + [1])
    for tail in itertools.product(range(p), repeat=k):
        cand = list(tail) + [1]
        if cand[0] == 0:
            continue  # divisible by x
        if all(_poly_mod(cand, den, p) for den in lower):
            return cand
    raise AssertionError(f"no irreducible of degree {k} over GF({p})")


class FieldCtx:
    """A fixed small finite field with dense operation tables."""

    def __init__(self, q):
        p, k = _prime_power(q)
        self.q, self.p, self.k = q, p, k
        self.modulus = tuple(_irreducible(p, k)) if k > 1 else (0, 1)
        digits = [self._digits(a) for a in range(q)]
        self.add_table = [
            [self._encode([(x + y) % p for x, y in zip(da, db)]) for db in digits]
            for da in digits
        ]
        self.mul_table = [
            [
                self._encode(_poly_mod(_poly_mul(da, db, p), list(self.modulus), p))
                if k > 1
                else (a * b) % p
                for b, db in enumerate(digits)
            ]
            for a, da in enumerate(digits)
        ]
        self.neg_table = [self._encode([(-x) % p for x in d]) for d in digits]
        self.sub_table = [
            [self.add_table[a][self.neg_table[b]] for b in range(q)] for a in range(q)
        ]
        self._build_logs()

    def _digits(self, a):
        out = []
        for _ in range(self.k):
            out.append(a % self.p)
            a //= self.p
        return out

    def _encode(self, digits):
        a = 0
        for d in reversed(digits):
            a = a * self.p + d
        return a

    def _build_logs(self):
        q = self.q
        gen = None
        for g in range(2, q):
            x, order = g, 1
            while x != 1:
                x = self.mul_table[x][g]
                order += 1
            if order == q - 1:
                gen = g
                break
        if gen is None:
            gen = 1  # GF(2): the unit group is trivial
        self.generator = gen
        self.exp_table = [1] * (q - 1)
        for i in range(1, q - 1):
            self.exp_table[i] = self.mul_table[self.exp_table[i - 1]][gen]
        self.log_table = [0] * q
        for i, v in enumerate(self.exp_table):
            self.log_table[v] = i
        self.inv_table = [0] * q
        for a in range(1, q):
            self.inv_table[a] = self.exp_table[(q - 1 - self.log_table[a]) % (q - 1)]

    def add(self, a, b):
        return self.add_table[a][b]

    def sub(self, a, b):
        return self.sub_table[a][b]

    def mul(self, a, b):
        return self.mul_table[a][b]

    def neg(self, a):
        return self.neg_table[a]

    def inv(self, a):
        if a == 0:
            raise ZeroDivisionError("inverse of 0")
        return self.inv_table[a]

    def pow(self, a, e):
        out = 1
        base = a
        while e:
            if e & 1:
                out = self.mul_table[out][base]
            base = self.mul_table[base][base]
            e >>= 1
        return out

    def frobenius(self, a):
        """The q-power map; the identity on this field's own points."""
        return self.pow(a, self.q)

    def __reduce__(self):
        return (FieldCtx, (self.q,))

    def __repr__(self):
        return f"FieldCtx(GF({self.q}))"


_FIELDS = {}


def field(q):
    """Cached field constructor."""
    if q not in _FIELDS:
        _FIELDS[q] = FieldCtx(q)
    return _FIELDS[q]


# ---------------------------------------------------------------------------
# Dense exact linear algebra


def zero_vector(n):
    return [0] * n


def identity_matrix(n):
    return [[1 if i == j else 0 for j in range(n)] for i in range(n)]


def mat_vec(F, mat, vec):
    add = F.add_table
    mul = F.mul_table
    out = []
    for row in mat:
        acc = 0
        for a, x in zip(row, vec):
            if a and x:
                acc = add[acc][mul[a][x]]
        out.append(acc)
    return out


def mat_mul(F, A, B):
    add = F.add_table
    mul = F.mul_table
    cols = list(zip(*B))
    out = []
    for row in A:
        orow = []
        for col in cols:
            acc = 0
            for a, b in zip(row, col):
                if a and b:
                    acc = add[acc][mul[a][b]]
            orow.append(acc)
        out.append(orow)
    return out


def vec_dot(F, x, y):
    add = F.add_table
    mul = F.mul_table
    acc = 0
    for a, b in zip(x, y):
        if a and b:
            acc = add[acc][mul[a][b]]
    return acc


def pair(F, gram, x, y):
    """The bilinear pairing x^T gram y."""
    return vec_dot(F, x, mat_vec(F, gram, y))


def scale_vec(F, c, vec):
    mc = F.mul_table[c]
    return [mc[x] for x in vec]


def normalize_vector(F, vec):
    """Scale so the first nonzero coordinate is 1; zero vectors unchanged."""
    for x in vec:
        if x:
            if x == 1:
                return list(vec)
            return scale_vec(F, F.inv(x), vec)
    return list(vec)


class Echelon:
    """Incrementally built row-echelon basis of a subspace of F^dim.

    Each stored row has leading coefficient 1 at its pivot column and is
    reduced against all previously stored rows, which makes ``reduce`` a
    single forward pass.  The reduced vector of x is the canonical
    representative of x modulo the subspace: zero at every pivot column.
    """

    def __init__(self, F, dim):
        self.F = F
        self.dim = dim
        self.rows = []
        self.pivots = []

    @property
    def size(self):
        return len(self.rows)

    def reduce(self, vec):
        sub = self.F.sub_table
        mul = self.F.mul_table
        v = list(vec)
        for row, piv in zip(self.rows, self.pivots):
            c = v[piv]
            if c:
                mc = mul[c]
                v = [sub[a][mc[b]] if b else a for a, b in zip(v, row)]
        return v

    def contains(self, vec):
        return not any(self.reduce(vec))

    def add(self, vec):
        """Insert vec; return True if it enlarged the span."""
        v = self.reduce(vec)
        piv = next((i for i, x in enumerate(v) if x), None)
        if piv is None:
            return False
        if v[piv] != 1:
            v = scale_vec(self.F, self.F.inv(v[piv]), v)
        self.rows.append(v)
        self.pivots.append(piv)
        return True


def rank(F, mat):
    if not mat:
        return 0
    ech = Echelon(F, len(mat[0]))
    for row in mat:
        ech.add(row)
    return ech.size


def rref(F, mat):
    """Reduced row-echelon form (copy) and the pivot column list."""
    M = [list(row) for row in mat]
    rows = len(M)
    cols = len(M[0]) if rows else 0
    pivots = []
    rpos = 0
    for c in range(cols):
        sel = next((r for r in range(rpos, rows) if M[r][c]), None)
        if sel is None:
            continue
        M[rpos], M[sel] = M[sel], M[rpos]
        if M[rpos][c] != 1:
            M[rpos] = scale_vec(F, F.inv(M[rpos][c]), M[rpos])
        piv_row = M[rpos]
        sub = F.sub_table
        mul = F.mul_table
        for r in range(rows):
            if r != rpos and M[r][c]:
                mc = mul[M[r][c]]
                M[r] = [sub[a][mc[b]] if b else a for a, b in zip(M[r], piv_row)]
        pivots.append(c)
        rpos += 1
        if rpos == rows:
            break
    return M, pivots


def nullspace(F, mat):
    """Deterministic basis of the right kernel of mat."""
    if not mat:
        return []
    cols = len(mat[0])
    R, pivots = rref(F, mat)
    free = [c for c in range(cols) if c not in pivots]
    basis = []
    for fc in free:
        v = [0] * cols
        v[fc] = 1
        for ridx, pc in enumerate(pivots):
            v[pc] = F.neg(R[ridx][fc])
        basis.append(v)
    return basis


def is_invertible(F, mat):
    return bool(mat) and rank(F, mat) == len(mat)
