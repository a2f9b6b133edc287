"""Pure-Python bitmask kernels.

A digraph on ``n`` vertices is a list ``rows`` of ints where bit ``j`` of
``rows[i]`` is set iff there is an edge from vertex ``i`` to vertex ``j``.
Saturating count matrices are pairs ``(ge1, ge2)`` of such row lists: bit
``j`` of ``ge1[i]`` means at least one walk, of ``ge2[i]`` at least two.
"""


def _bits(mask):
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def transpose(rows, n):
    cols = [0] * n
    for i in range(n):
        bit = 1 << i
        for j in _bits(rows[i]):
            cols[j] |= bit
    return cols


def bool_matmul(a, b):
    out = []
    for r in a:
        acc = 0
        for w in _bits(r):
            acc |= b[w]
        out.append(acc)
    return out


def bool_power(rows, k):
    result = list(rows)
    for _ in range(k - 1):
        result = bool_matmul(result, rows)
    return result


def sat_matmul(a1, a2, b1, b2):
    c1 = []
    c2 = []
    for i in range(len(a1)):
        seen = 0
        many = 0
        r2 = a2[i]
        for w in _bits(a1[i]):
            contrib = b1[w]
            many |= (seen & contrib) | b2[w]
            if (r2 >> w) & 1:
                many |= contrib
            seen |= contrib
        c1.append(seen)
        c2.append(many)
    return c1, c2


def sat_power(rows, k):
    base2 = [0] * len(rows)
    c1, c2 = list(rows), list(base2)
    for _ in range(k - 1):
        c1, c2 = sat_matmul(c1, c2, rows, base2)
    return c1, c2


def image(rows, mask):
    """Union of the rows selected by ``mask``."""
    acc = 0
    for w in _bits(mask):
        acc |= rows[w]
    return acc


def closure(rows, cols, seed):
    current = seed
    while True:
        nxt = image(cols, image(rows, current))
        if nxt == current:
            return current
        current = nxt


def coreset_labels(rows, cols, n):
    """Label every vertex with the index of its coreset.

    Labels are assigned in order of each class's smallest vertex.  Returns
    ``(labels, trivial)`` where ``trivial`` is the label of the sink class or
    ``-1`` when there are no sinks.
    """
    labels = [-1] * n
    trivial = -1
    count = 0
    for v in range(n):
        if labels[v] >= 0:
            continue
        if rows[v] == 0:
            trivial = count
            for u in range(v, n):
                if rows[u] == 0:
                    labels[u] = count
        else:
            for u in _bits(closure(rows, cols, 1 << v)):
                labels[u] = count
        count += 1
    return labels, trivial


def identical_or_disjoint(rows):
    seen = set()
    union = 0
    for r in rows:
        if r == 0 or r in seen:
            continue
        if union & r:
            return False
        union |= r
        seen.add(r)
    return True
