# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled search kernels; same algorithms and outputs as ``_pykernels``."""

cdef extern from *:
    """
    static inline int pc64(unsigned long long x) { return __builtin_popcountll(x); }
    static inline int ctz64(unsigned long long x) { return __builtin_ctzll(x); }
    """
    int pc64(unsigned long long x) nogil
    int ctz64(unsigned long long x) nogil

ctypedef unsigned long long u64

BACKEND = "cython"


cdef inline u64 _full(int n) nogil:
    if n >= 64:
        return <u64>(~(<u64>0))
    return ((<u64>1) << n) - 1


# --- Hamiltonian completion --------------------------------------------------

cdef struct HamState:
    int n
    u64 full
    u64 adj[64]
    int left[64]
    int nleft
    int right[64]
    int nright


cdef bint _reaches_all(HamState* s, u64 mask) nogil:
    cdef u64 seen = mask & (~mask + 1)
    cdef u64 frontier = seen
    cdef u64 nxt, f
    while frontier:
        nxt = 0
        f = frontier
        while f:
            nxt |= s.adj[ctz64(f)]
            f &= f - 1
        frontier = nxt & mask & ~seen
        seen |= frontier
    return seen == mask


cdef bint _ham_rec(HamState* s, int head, int tail, u64 visited) nogil:
    cdef u64 unvisited = s.full & ~visited
    cdef u64 avail, m, hn, tn, cand, low
    cdef int hc, tc, w
    cdef bint at_head
    if not unvisited:
        return head != tail and ((s.adj[head] >> tail) & 1)
    avail = unvisited | ((<u64>1) << head) | ((<u64>1) << tail)
    m = unvisited
    while m:
        if pc64(s.adj[ctz64(m)] & avail) < 2:
            return False
        m &= m - 1
    hn = s.adj[head] & unvisited
    tn = s.adj[tail] & unvisited
    if not hn or not tn:
        return False
    if not _reaches_all(s, unvisited):
        return False

    if head == tail:
        at_head = False
        cand = tn
    else:
        hc = pc64(hn)
        tc = pc64(tn)
        at_head = hc < tc or (hc == tc and head < tail)
        cand = hn if at_head else tn
    while cand:
        w = ctz64(cand)
        low = cand & (~cand + 1)
        cand &= cand - 1
        if at_head:
            s.left[s.nleft] = w
            s.nleft += 1
            if _ham_rec(s, w, tail, visited | low):
                return True
            s.nleft -= 1
        else:
            s.right[s.nright] = w
            s.nright += 1
            if _ham_rec(s, head, w, visited | low):
                return True
            s.nright -= 1
    return False


def ham_complete(adj, int n, path):
    """Extend ``path`` at both ends to a Hamiltonian cycle, or return None."""
    cdef HamState s
    cdef u64 visited = 0
    cdef int i, v
    cdef bint ok
    if not path:
        return None
    s.n = n
    s.full = _full(n)
    s.nleft = 0
    s.nright = 0
    for i in range(n):
        s.adj[i] = <u64>adj[i]
    for v in path:
        visited |= (<u64>1) << v
    cdef int head = path[0]
    cdef int tail = path[len(path) - 1]
    with nogil:
        ok = _ham_rec(&s, head, tail, visited)
    if not ok:
        return None
    out = [s.left[i] for i in range(s.nleft - 1, -1, -1)]
    out.extend(path)
    out.extend([s.right[i] for i in range(s.nright)])
    return out


# --- canonical labelling -----------------------------------------------------

cdef struct CanonState:
    int n
    u64 adj[64]
    u64 col[64]
    u64 cur[64]
    u64 best[64]
    int placed[64]
    int perm[64]
    bint has_best
    bint checking
    long version


cdef bint _canon_rec(CanonState* s, int j, u64 remaining, bint tie_equal) nogil:
    cdef u64 m, lo, cands, rest, row, r
    cdef int v, w, i
    cdef long version
    cdef bint first
    if j == s.n:
        if not s.has_best or not tie_equal:
            for i in range(s.n):
                s.best[i] = s.cur[i]
                s.perm[i] = s.placed[i]
            s.has_best = True
            s.version += 1
        return False
    m = remaining
    first = True
    lo = 0
    while m:
        v = ctz64(m)
        if first or s.col[v] < lo:
            lo = s.col[v]
            first = False
        m &= m - 1
    if s.has_best and tie_equal:
        if lo > s.best[j]:
            return False
        if lo < s.best[j]:
            if s.checking:
                return True
            tie_equal = False
    cands = 0
    m = remaining
    while m:
        v = ctz64(m)
        if s.col[v] == lo:
            cands |= (<u64>1) << v
        m &= m - 1
    while cands:
        v = ctz64(cands)
        cands &= cands - 1
        rest = remaining & ~((<u64>1) << v)
        row = s.adj[v]
        r = rest
        while r:
            w = ctz64(r)
            s.col[w] = (s.col[w] << 1) | ((row >> w) & 1)
            r &= r - 1
        s.cur[j] = lo
        s.placed[j] = v
        version = s.version
        if _canon_rec(s, j + 1, rest, tie_equal):
            return True
        r = rest
        while r:
            s.col[ctz64(r)] >>= 1
            r &= r - 1
        if s.version != version:
            tie_equal = True
    return False


cdef void _canon_init(CanonState* s, adj, int n):
    cdef int i
    s.n = n
    s.version = 0
    s.has_best = False
    s.checking = False
    for i in range(n):
        s.adj[i] = <u64>adj[i]
        s.col[i] = 0


def canonical_perm(adj, int n):
    """Labelling ``perm`` (position -> vertex) giving the least column string."""
    cdef CanonState s
    cdef int i
    _canon_init(&s, adj, n)
    with nogil:
        _canon_rec(&s, 0, _full(n), True)
    return [s.perm[i] for i in range(n)]


def is_canonical(adj, int n):
    """Whether the identity labelling already gives the least column string."""
    cdef CanonState s
    cdef int i, j
    cdef u64 c
    cdef bint smaller
    _canon_init(&s, adj, n)
    for j in range(n):
        c = 0
        for i in range(j):
            c = (c << 1) | ((s.adj[j] >> i) & 1)
        s.best[j] = c
    s.has_best = True
    s.checking = True
    with nogil:
        smaller = _canon_rec(&s, 0, _full(n), True)
    return not smaller
