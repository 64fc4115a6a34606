"""Pure-Python bitmask kernels.

Vertex sets are ints where bit i stands for the i-th declared vertex.
``succ[i]`` is the mask of ranges of edges leaving vertex i and
``reach[i]`` the mask of vertices reachable from i (i included).
The compiled module ``_ckernels`` exposes the same functions.
"""


def reach_masks(succ):
    n = len(succ)
    reach = []
    for v in range(n):
        seen = 1 << v
        frontier = seen
        while frontier:
            low = frontier & -frontier
            frontier ^= low
            new = succ[low.bit_length() - 1] & ~seen
            seen |= new
            frontier |= new
        reach.append(seen)
    return reach


def is_hereditary(reach, mask):
    m = mask
    while m:
        low = m & -m
        m ^= low
        if reach[low.bit_length() - 1] & ~mask:
            return False
    return True


def is_saturated(succ, mask):
    for v, out in enumerate(succ):
        if out and not (mask >> v) & 1 and not out & ~mask:
            return False
    return True


def closure_stages(succ, reach, x):
    level = 0
    m = x
    while m:
        low = m & -m
        m ^= low
        level |= reach[low.bit_length() - 1]
    stages = [level]
    while True:
        grown = level
        for v, out in enumerate(succ):
            if out and not out & ~level:
                grown |= 1 << v
        if grown == level:
            return stages
        level = grown
        stages.append(level)


def enumerate_hsat(succ, reach):
    n = len(succ)
    found = []
    for mask in range(1 << n):
        if is_hereditary(reach, mask) and is_saturated(succ, mask):
            found.append(mask)
    return found
