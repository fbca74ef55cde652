"""Plain nested-loop oracles.

Nothing here touches numpy or the package's fast paths; tables are lists of
lists and every quantifier is an explicit loop.
"""
from itertools import permutations, product


def rows(t):
    return t.tolist() if hasattr(t, "tolist") else [list(r) for r in t]


def identity(T):
    n = len(T)
    for e in range(n):
        if all(T[e][x] == x and T[x][e] == x for x in range(n)):
            return e
    return None


def first_failure(n, arity, holds):
    for tup in product(range(n), repeat=arity):
        if not holds(*tup):
            return tup
    return None


def lc(T):
    return first_failure(len(T), 3, lambda x, y, z: T[T[x][x]][T[y][z]] == T[T[x][T[x][y]]][z])


def rc(T):
    return first_failure(len(T), 3, lambda x, y, z: T[T[z][y]][T[x][x]] == T[z][T[T[y][x]][x]])


def c(T):
    return first_failure(len(T), 3, lambda x, y, z: T[x][T[y][T[y][z]]] == T[T[T[x][y]][y]][z])


def associative(T):
    return first_failure(len(T), 3, lambda x, y, z: T[T[x][y]][z] == T[x][T[y][z]])


def commutative(T):
    return first_failure(len(T), 2, lambda x, y: T[x][y] == T[y][x])


def left_alt(T):
    return first_failure(len(T), 2, lambda x, y: T[x][T[x][y]] == T[T[x][x]][y])


def right_alt(T):
    return first_failure(len(T), 2, lambda x, y: T[T[y][x]][x] == T[y][T[x][x]])


def lip(T):
    """True iff for every x some u satisfies u(xy) = y for all y."""
    n = len(T)
    return all(any(all(T[u][T[x][y]] == y for y in range(n)) for u in range(n)) for x in range(n))


def rip(T):
    n = len(T)
    return all(any(all(T[T[y][x]][u] == y for y in range(n)) for u in range(n)) for x in range(n))


def nuclei(T):
    n = len(T)
    pairs = list(product(range(n), repeat=2))
    left = [a for a in range(n) if all(T[a][T[x][y]] == T[T[a][x]][y] for x, y in pairs)]
    mid = [a for a in range(n) if all(T[x][T[a][y]] == T[T[x][a]][y] for x, y in pairs)]
    right = [a for a in range(n) if all(T[x][T[y][a]] == T[T[x][y]][a] for x, y in pairs)]
    return left, mid, right


def center(T):
    n = len(T)
    left, mid, right = nuclei(T)
    return [a for a in range(n) if all(T[a][x] == T[x][a] for x in range(n))
            and a in left and a in mid and a in right]


def central_square(T):
    z = set(center(T))
    return all(T[x][x] in z for x in range(len(T)))


def is_latin(T):
    n = len(T)
    full = list(range(n))
    return all(sorted(r) == full for r in T) and all(sorted(T[x][y] for x in range(n)) == full for y in range(n))


def all_normalized_loops(n):
    """Brute force over all fillings of the inner (n-1)x(n-1) block; n <= 4."""
    out = []
    for inner in product(range(n), repeat=(n - 1) * (n - 1)):
        T = [list(range(n))] + [[r] + [0] * (n - 1) for r in range(1, n)]
        k = 0
        for r in range(1, n):
            for s in range(1, n):
                T[r][s] = inner[k]
                k += 1
        if is_latin(T):
            out.append(T)
    return out


def autotopisms(T):
    """Every (U, V, W) in S_n^3 with U[x]*V[y] == W[x*y]."""
    n = len(T)
    perms = list(permutations(range(n)))
    out = set()
    for u in perms:
        for v in perms:
            for w in perms:
                if all(T[u[x]][v[y]] == w[T[x][y]] for x in range(n) for y in range(n)):
                    out.add((u, v, w))
    return out


def compose(a, b):
    return tuple(b[i] for i in a)


def cycles_to_images(cycles, n):
    img = list(range(n))
    for cyc in cycles:
        for i, p in enumerate(cyc):
            img[p] = cyc[(i + 1) % len(cyc)]
    return tuple(img)
