"""The 4x4 Hartley number-theoretic transform over GF(3).

The transform matrix has entries cas(i*k mod 4):

    H4 = [[1, 1, 1, 1],
          [1, 1, 2, 2],
          [1, 2, 1, 2],
          [1, 2, 2, 1]]      (2 == -1 mod 3)

H4 is symmetric and H4*H4 == I mod 3, and the usual inverse scale
N^-1 = 4^-1 == 1 mod 3, so forward and inverse transforms are the same
computation.  The fast 1-D path is two stages of mod-3 add/sub
butterflies (eight in total) and performs no multiplications; plain
add/subtract-then-reduce benchmarked ahead of both 3x3 lookup tables and
conditional subtraction in CPython, so the butterflies use arithmetic.

The public transforms are fixed to N=4, p=3.  A module-level counter
instruments the modular products of the naive matrix route, so tests can
assert the butterfly path performs none.
"""

from .galois import DEFAULT_PARAMS, FieldParams, cas_table

N = 4

_mul_count = 0


def reset_mul_count() -> None:
    global _mul_count
    _mul_count = 0


def mul_count() -> int:
    return _mul_count


def _mul3(a: int, b: int) -> int:
    """Counted mod-3 product, used wherever a transform route multiplies."""
    global _mul_count
    _mul_count += 1
    return (a * b) % 3


def build_matrix(params: FieldParams = DEFAULT_PARAMS) -> list[list[int]]:
    """N x N transform matrix with entries cas(i*k mod N)."""
    cas = cas_table(params)
    n = params.order_n
    return [[cas[(i * k) % n] for k in range(n)] for i in range(n)]


H4 = tuple(tuple(row) for row in build_matrix())

# Index reversal i -> (4 - i) mod 4 used by the full 2-D combination.
_REV = (0, 3, 2, 1)

# Direct 2-D kernel, flattened over (i, k): cas((u*i + v*k) mod 4).
_CAS = tuple(cas_table())
_KERNEL = tuple(
    tuple(tuple(_CAS[(u * i + v * k) % 4] for i in range(4) for k in range(4)) for v in range(4))
    for u in range(4)
)


def _check_vector(x) -> None:
    if len(x) != 4:
        raise ValueError("expected a length-4 vector, got length %d" % len(x))
    for v in x:
        if not 0 <= v <= 2:
            raise ValueError("vector values must be in GF(3), got %r" % (v,))


def _check_block(a) -> None:
    if len(a) != 4:
        raise ValueError("expected a 4x4 block, got %d rows" % len(a))
    for row in a:
        _check_vector(row)


def hntt_1d(x) -> list[int]:
    """Naive matrix-vector transform X[k] = sum_i H[k][i] * x[i] mod 3.

    The reference implementation the fast path is checked against.
    """
    _check_vector(x)
    out = []
    for row in H4:
        acc = 0
        for h, v in zip(row, x):
            acc += _mul3(h, v)
        out.append(acc % 3)
    return out


def hntt_1d_fast(x) -> list[int]:
    """Two-stage butterfly transform, multiplication-free.

    Stage 1 pairs (x0,x1) and (x2,x3); stage 2 combines across pairs.
    The butterfly outputs land directly in H4 row order, so no output
    permutation is needed for this matrix.
    """
    _check_vector(x)
    x0, x1, x2, x3 = x
    a0 = (x0 + x1) % 3
    a1 = (x0 - x1) % 3
    a2 = (x2 + x3) % 3
    a3 = (x2 - x3) % 3
    return [(a0 + a2) % 3, (a0 - a2) % 3, (a1 + a3) % 3, (a1 - a3) % 3]


def inverse_hntt_1d(x) -> list[int]:
    """Inverse transform; equals the forward one since N^-1 == 1 mod 3."""
    return hntt_1d_fast(x)


def special_hntt_2d(a) -> list[list[int]]:
    """Separable 2-D transform H * A * H: fast 1-D down the columns of A,
    then along the rows of the intermediate."""
    _check_block(a)
    c0 = hntt_1d_fast([a[0][0], a[1][0], a[2][0], a[3][0]])
    c1 = hntt_1d_fast([a[0][1], a[1][1], a[2][1], a[3][1]])
    c2 = hntt_1d_fast([a[0][2], a[1][2], a[2][2], a[3][2]])
    c3 = hntt_1d_fast([a[0][3], a[1][3], a[2][3], a[3][3]])
    return [hntt_1d_fast([c0[i], c1[i], c2[i], c3[i]]) for i in range(4)]


def inverse_special_hntt_2d(b) -> list[list[int]]:
    """Inverse of the separable 2-D transform.

    H4*H4 == I makes special_hntt_2d an involution, so this is the same
    computation under its own name for pipeline clarity.
    """
    return special_hntt_2d(b)


def full_hntt_2d(a) -> list[list[int]]:
    """Full 2-D transform: (B + B_colrev + B_rowrev - B_bothrev) / 2,
    where B = special_hntt_2d(a) and the reversed copies remap indices
    by i -> (4 - i) mod 4.  The 1/2 scale is 2^-1 == 2 == -1 mod 3,
    applied as a negation."""
    b = special_hntt_2d(a)
    out = []
    for i in range(4):
        bi = b[i]
        br = b[_REV[i]]
        row = []
        for j in range(4):
            rj = _REV[j]
            combined = bi[j] + bi[rj] + br[j] - br[rj]
            row.append((-combined) % 3)
        out.append(row)
    return out


def full_hntt_2d_direct(a) -> list[list[int]]:
    """O(N^4) kernel-sum evaluation X[u][v] = sum_{i,k} a[i][k] * cas(u*i + v*k).

    Independent oracle for full_hntt_2d; kept out of production paths.
    """
    _check_block(a)
    flat = [v for row in a for v in row]
    return [
        [sum([x * w for x, w in zip(flat, _KERNEL[u][v])]) % 3 for v in range(4)]
        for u in range(4)
    ]
