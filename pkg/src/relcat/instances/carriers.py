"""Index arithmetic for product and sum carriers.

Product carriers number the tuple (x, z) as x * |Z| + z; sum carriers
place the blocks of a word one after the other.
"""


def prod_identity(n):
    return tuple(range(n))


def prod_copy(n):
    return tuple(i * n + i for i in range(n))


def prod_discard(n):
    return (0,) * n


def prod_sym(n1, n2):
    return tuple(y * n1 + x for x in range(n1) for y in range(n2))


def prod_pair(i, j, nj):
    return i * nj + j


def sum_sym(n1, n2):
    return tuple(i + n2 for i in range(n1)) + tuple(range(n2))


def sum_copy_pairs(n):
    return [(i, i) for i in range(n)] + [(i, n + i) for i in range(n)]


def graph(table):
    """Pairs (i, table[i]) of a function table."""
    return [(i, j) for i, j in enumerate(table)]


def converse(pairs):
    return [(j, i) for i, j in pairs]
