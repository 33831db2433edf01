"""Reference counts for lattice maps and products of simplices.

Brute force over all value tables; shares nothing with the C++ sources.
Run: python3 tests/oracle/lattice_counts.py
"""
from itertools import product, combinations


def monotone_grid_maps(p, n, q):
    """All monotone f: [p] x [n] -> [q], as tuples of columns."""
    out = []
    for vals in product(range(q + 1), repeat=(p + 1) * (n + 1)):
        cols = [vals[i * (n + 1):(i + 1) * (n + 1)] for i in range(p + 1)]
        ok = all(cols[i][j] <= cols[i][j + 1] for i in range(p + 1) for j in range(n))
        ok = ok and all(cols[i][j] <= cols[i + 1][j] for i in range(p) for j in range(n + 1))
        if ok:
            out.append(cols)
    return out


def nondegenerate(cols):
    return all(cols[i] != cols[i + 1] for i in range(len(cols) - 1))


def chains(points, less, k):
    """Strict chains of length k in a poset."""
    return sum(1 for c in combinations(points, k)
               if all(less(c[i], c[i + 1]) for i in range(k - 1)))


def product_cells(p, n):
    pts = sorted((i, j) for i in range(p + 1) for j in range(n + 1))
    less = lambda a, b: a != b and a[0] <= b[0] and a[1] <= b[1]
    return [chains(pts, less, k) for k in range(1, p + n + 2)]


if __name__ == "__main__":
    print("# (p, n, q): total, nondegenerate")
    for q in range(0, 3):
        for n in range(0, 3):
            for p in range(0, 7 - n):
                if (p + 1) * (n + 1) > 12:
                    continue
                maps = monotone_grid_maps(p, n, q)
                print(f"({p}, {n}, {q}): {len(maps)}, {sum(map(nondegenerate, maps))}")
    print("# product cells by dimension")
    for p, n in [(1, 1), (2, 1), (2, 2), (3, 1)]:
        print(f"delta({p}) x delta({n}): {product_cells(p, n)}")
