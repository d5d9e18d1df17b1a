# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled compute kernels (bit-mask tables, 64-element universes).

Twin of ``transitgeo._kernel_py``: same functions, same results, same
witness tie-breaking; selected by ``transitgeo._backend`` when importable.
"""

from libc.stdlib cimport free, malloc

cdef extern from *:
    """
    #define CTZLL(x) __builtin_ctzll(x)
    #define POPCLL(x) __builtin_popcountll(x)
    """
    int CTZLL(unsigned long long) nogil
    int POPCLL(unsigned long long) nogil

ctypedef unsigned long long ull

BACKEND_NAME = "c"


cdef ull* _copy_table(int size, table) except NULL:
    cdef ull* buf = <ull*> malloc(size * sizeof(ull))
    if buf == NULL:
        raise MemoryError()
    cdef int i
    for i in range(size):
        buf[i] = table[i]
    return buf


def axiom_b1(int n, table):
    cdef ull* t = _copy_table(n * n, table)
    cdef int u, v, x
    cdef ull r
    try:
        for u in range(n):
            for v in range(n):
                r = t[u * n + v]
                while r:
                    x = CTZLL(r)
                    r &= r - 1
                    if x != v and (t[u * n + x] >> v) & 1:
                        return (u, v, x)
        return None
    finally:
        free(t)


def axiom_b3(int n, table):
    cdef ull* t = _copy_table(n * n, table)
    cdef int u, v, x, y
    cdef ull r, s
    try:
        for u in range(n):
            for v in range(n):
                r = t[u * n + v]
                while r:
                    x = CTZLL(r)
                    r &= r - 1
                    s = t[u * n + x]
                    while s:
                        y = CTZLL(s)
                        s &= s - 1
                        if not (t[y * n + v] >> x) & 1:
                            return (u, v, x, y)
        return None
    finally:
        free(t)


def axiom_m(int n, table):
    cdef ull* t = _copy_table(n * n, table)
    cdef int u, v, x, y
    cdef ull r, s, q
    try:
        for u in range(n):
            for v in range(n):
                r = t[u * n + v]
                s = r
                while s:
                    x = CTZLL(s)
                    s &= s - 1
                    q = r
                    while q:
                        y = CTZLL(q)
                        q &= q - 1
                        if t[x * n + y] & ~r:
                            return (u, v, x, y)
        return None
    finally:
        free(t)


def axiom_j0(int n, table):
    cdef ull* t = _copy_table(n * n, table)
    cdef int u, v, x, y
    try:
        for u in range(n):
            for v in range(n):
                if v == u:
                    continue
                for x in range(n):
                    if x == u or x == v:
                        continue
                    for y in range(n):
                        if y == u or y == v or y == x:
                            continue
                        if (
                            (t[u * n + y] >> x) & 1
                            and (t[x * n + v] >> y) & 1
                            and not (t[u * n + v] >> x) & 1
                        ):
                            return (u, v, x, y)
        return None
    finally:
        free(t)


def axiom_ch(int n, table):
    cdef ull* t = _copy_table(n * n, table)
    cdef int u, v, w, x, y
    cdef ull r_uv, cover, bad, s
    try:
        for u in range(n):
            for v in range(n):
                r_uv = t[u * n + v]
                for w in range(n):
                    cover = t[u * n + w] | t[v * n + w] | r_uv
                    s = r_uv
                    while s:
                        x = CTZLL(s)
                        s &= s - 1
                        bad = t[x * n + w] & ~cover
                        if bad:
                            y = CTZLL(bad)
                            return (u, v, w, x, y)
        return None
    finally:
        free(t)


def axiom_p(int n, table):
    cdef ull* t = _copy_table(n * n, table)
    cdef int u, v, w, x, y, z
    cdef ull r_uv, r_uw, s, q, zz
    cdef bint ok
    try:
        for u in range(n):
            for v in range(n):
                r_uv = t[u * n + v]
                for w in range(n):
                    r_uw = t[u * n + w]
                    s = r_uv
                    while s:
                        x = CTZLL(s)
                        s &= s - 1
                        q = t[x * n + w]
                        while q:
                            y = CTZLL(q)
                            q &= q - 1
                            ok = False
                            zz = r_uw
                            while zz:
                                z = CTZLL(zz)
                                zz &= zz - 1
                                if (t[z * n + v] >> y) & 1:
                                    ok = True
                                    break
                            if not ok:
                                return (u, v, w, x, y)
        return None
    finally:
        free(t)


def axiom_aprime(int n, table):
    cdef ull* t = _copy_table(n * n, table)
    cdef ull full = (<ull> 1 << n) - 1 if n < 64 else <ull> 0xFFFFFFFFFFFFFFFF
    cdef int u, v
    try:
        for u in range(n):
            for v in range(u, n):
                if t[u * n + v] == full:
                    return (u, v)
        return None
    finally:
        free(t)


def axiom_k(int n, table):
    cdef ull* t = _copy_table(n * n, table)
    cdef int u, v, x, y
    cdef ull inter
    transit_sets = set(table)
    try:
        for u in range(n):
            for v in range(u, n):
                for x in range(u, n):
                    for y in range(x, n):
                        if x == u and y < v:
                            continue
                        inter = t[u * n + v] & t[x * n + y]
                        if inter and inter not in transit_sets:
                            return (u, v, x, y)
        return None
    finally:
        free(t)


def axiom_cg(int n, table):
    cdef ull* t = _copy_table(n * n, table)
    cdef ull full = (<ull> 1 << n) - 1 if n < 64 else <ull> 0xFFFFFFFFFFFFFFFF
    cdef int x, y, w, z
    cdef ull r, target, s
    cdef bint found
    try:
        for x in range(n):
            for y in range(x, n):
                r = t[x * n + y]
                if r == full:
                    continue
                found = False
                for w in range(n):
                    if (r >> w) & 1:
                        continue
                    target = r | (<ull> 1 << w)
                    s = r
                    while s:
                        z = CTZLL(s)
                        s &= s - 1
                        if t[w * n + z] == target:
                            found = True
                            break
                    if found:
                        break
                if not found:
                    return (x, y)
        return None
    finally:
        free(t)


cdef ull _hull(int n, ull* t, ull seed) nogil:
    cdef ull hull = seed
    cdef ull work = seed
    cdef ull added, members
    cdef int x, y
    while work:
        x = CTZLL(work)
        work &= work - 1
        added = 0
        members = hull
        while members:
            y = CTZLL(members)
            members &= members - 1
            added |= t[x * n + y]
        added &= ~hull
        if added:
            hull |= added
            work |= added
            work |= (<ull> 1 << x)
    return hull


def hull_mask(int n, table, seed):
    cdef ull* t = _copy_table(n * n, table)
    try:
        return _hull(n, t, <ull> seed)
    finally:
        free(t)


def convex_sets_scan(int n, table):
    cdef ull* t = _copy_table(n * n, table)
    cdef ull mask, s, q
    cdef int u, v
    cdef bint ok
    out = []
    try:
        for mask in range(<ull> 1 << n):
            ok = True
            s = mask
            while ok and s:
                u = CTZLL(s)
                s &= s - 1
                q = mask
                while q:
                    v = CTZLL(q)
                    q &= q - 1
                    if t[u * n + v] & ~mask:
                        ok = False
                        break
            if ok:
                out.append(mask)
        return out
    finally:
        free(t)


def convex_sets_closure(int n, table):
    cdef ull* t = _copy_table(n * n, table)
    cdef ull full = (<ull> 1 << n) - 1
    cdef ull current, below, candidate
    cdef int i
    cdef bint advanced
    out = []
    try:
        current = _hull(n, t, 0)
        out.append(current)
        while current != full:
            advanced = False
            for i in range(n - 1, -1, -1):
                if (current >> i) & 1:
                    continue
                below = (<ull> 1 << i) - 1
                candidate = _hull(n, t, (current & below) | (<ull> 1 << i))
                if (candidate & below) == (current & below):
                    current = candidate
                    out.append(current)
                    advanced = True
                    break
            if not advanced:
                break
        return out
    finally:
        free(t)


cdef int _find_mask(ull* vals, int count, ull needle) nogil:
    cdef int lo = 0, hi = count - 1, mid
    while lo <= hi:
        mid = (lo + hi) >> 1
        if vals[mid] == needle:
            return mid
        if vals[mid] < needle:
            lo = mid + 1
        else:
            hi = mid - 1
    return -1


cdef ull _family_hull(ull* fam, int count, ull target) nogil:
    cdef int i
    for i in range(count):
        if (fam[i] & target) == target:
            return fam[i]
    return <ull> 0xFFFFFFFFFFFFFFFF


def family_geometry(int n, fam_sorted):
    cdef int count = len(fam_sorted)
    cdef ull* fam = _copy_table(count, fam_sorted)
    cdef ull* vals = <ull*> malloc(count * sizeof(ull))
    cdef ull* hulls = <ull*> malloc(n * sizeof(ull))
    cdef ull full = (<ull> 1 << n) - 1
    cdef int i, j, k, p, q
    cdef ull k_mask, ex, outside, s, bit
    if vals == NULL or hulls == NULL:
        free(fam)
        if vals != NULL:
            free(vals)
        if hulls != NULL:
            free(hulls)
        raise MemoryError()
    # values-sorted copy for membership bisection
    py_vals = sorted(fam_sorted)
    for i in range(count):
        vals[i] = py_vals[i]

    mkm_witness = None
    ae_witness = None
    ext_witness = None
    chain = None
    try:
        for i in range(count):
            k_mask = fam[i]
            ex = 0
            s = k_mask
            while s:
                k = CTZLL(s)
                s &= s - 1
                if _find_mask(vals, count, k_mask ^ (<ull> 1 << k)) >= 0:
                    ex |= <ull> 1 << k
            if _family_hull(fam, count, ex) != k_mask:
                mkm_witness = k_mask
                break

        for i in range(count):
            if ae_witness is not None:
                break
            k_mask = fam[i]
            outside = full & ~k_mask
            for p in range(n):
                if (outside >> p) & 1:
                    hulls[p] = _family_hull(fam, count, k_mask | (<ull> 1 << p))
            s = outside
            while s and ae_witness is None:
                p = CTZLL(s)
                s &= s - 1
                bit = outside & ~(((<ull> 1 << p) << 1) - 1)
                while bit:
                    q = CTZLL(bit)
                    bit &= bit - 1
                    if (hulls[p] >> q) & 1 and (hulls[q] >> p) & 1:
                        ae_witness = (k_mask, p, q)
                        break

        for i in range(count):
            k_mask = fam[i]
            if k_mask == full:
                continue
            s = full & ~k_mask
            ext_found = False
            while s:
                p = CTZLL(s)
                s &= s - 1
                if _find_mask(vals, count, k_mask | (<ull> 1 << p)) >= 0:
                    ext_found = True
                    break
            if not ext_found:
                ext_witness = k_mask
                break

        if mkm_witness is None and ae_witness is None and ext_witness is None:
            order = []
            current = <ull> 0
            while current != full:
                s = full & ~current
                step = -1
                while s:
                    p = CTZLL(s)
                    s &= s - 1
                    if _find_mask(vals, count, current | (<ull> 1 << p)) >= 0:
                        step = p
                        break
                if step < 0:
                    order = None
                    break
                order.append(step)
                current |= <ull> 1 << step
            if order is not None:
                chain = list(reversed(order))
        return (mkm_witness, ae_witness, ext_witness, chain)
    finally:
        free(fam)
        free(vals)
        free(hulls)


cdef ull _neigh(int n, ull* adj, ull mask) nogil:
    cdef ull out = 0
    cdef int x
    while mask:
        x = CTZLL(mask)
        mask &= mask - 1
        out |= adj[x]
    return out


def bfs_dist(int n, adj):
    cdef ull* a = _copy_table(n, adj)
    cdef int src, x, d
    cdef ull frontier, seen, reach
    dist = [-1] * (n * n)
    try:
        for src in range(n):
            dist[src * n + src] = 0
            frontier = <ull> 1 << src
            seen = frontier
            d = 0
            while frontier:
                d += 1
                reach = _neigh(n, a, frontier)
                frontier = reach & ~seen
                seen |= frontier
                x = 0
                reach = frontier
                while reach:
                    x = CTZLL(reach)
                    reach &= reach - 1
                    dist[src * n + x] = d
        return dist
    finally:
        free(a)


def interval_table(int n, adj, dist):
    cdef ull* a = _copy_table(n, adj)
    cdef int* d = <int*> malloc(n * n * sizeof(int))
    cdef int u, v, w, duv
    cdef ull mask
    if d == NULL:
        free(a)
        raise MemoryError()
    for u in range(n * n):
        d[u] = dist[u]
    table = [0] * (n * n)
    try:
        for u in range(n):
            for v in range(u, n):
                duv = d[u * n + v]
                mask = 0
                for w in range(n):
                    if d[u * n + w] >= 0 and d[w * n + v] >= 0 and d[u * n + w] + d[w * n + v] == duv:
                        mask |= <ull> 1 << w
                table[u * n + v] = mask
                table[v * n + u] = mask
        return table
    finally:
        free(a)
        free(d)


cdef int _components(int n, ull* adj, ull inside, ull* comps) nogil:
    cdef int count = 0
    cdef ull left = inside, comp, frontier, reach
    while left:
        comp = left & (~left + 1)
        frontier = comp
        while frontier:
            reach = _neigh(n, adj, frontier)
            frontier = reach & inside & ~comp
            comp |= frontier
        comps[count] = comp
        count += 1
        left &= ~comp
    return count


def toll_table(int n, adj):
    cdef ull* a = _copy_table(n, adj)
    cdef ull* comps = <ull*> malloc(n * sizeof(ull))
    cdef int u, v, aa, bb, ci, ncomps
    cdef ull ends, t_mask, interior, a_side, b_side, s, q, full = (<ull> 1 << n) - 1
    if comps == NULL:
        free(a)
        raise MemoryError()
    table = [0] * (n * n)
    try:
        for u in range(n):
            table[u * n + u] = <ull> 1 << u
        for u in range(n):
            for v in range(u + 1, n):
                ends = (<ull> 1 << u) | (<ull> 1 << v)
                if (a[u] >> v) & 1:
                    t_mask = ends
                else:
                    t_mask = ends | (a[u] & a[v])
                    interior = full & ~(a[u] | a[v] | ends)
                    ncomps = _components(n, a, interior, comps)
                    a_side = a[u] & ~a[v] & ~(<ull> 1 << v)
                    b_side = a[v] & ~a[u] & ~(<ull> 1 << u)
                    s = a_side
                    while s:
                        aa = CTZLL(s)
                        s &= s - 1
                        q = b_side
                        while q:
                            bb = CTZLL(q)
                            q &= q - 1
                            if (a[aa] >> bb) & 1:
                                t_mask |= (<ull> 1 << aa) | (<ull> 1 << bb)
                            for ci in range(ncomps):
                                if comps[ci] & a[aa] and comps[ci] & a[bb]:
                                    t_mask |= (<ull> 1 << aa) | (<ull> 1 << bb) | comps[ci]
                table[u * n + v] = t_mask
                table[v * n + u] = t_mask
        return table
    finally:
        free(a)
        free(comps)


def wtoll_table(int n, adj):
    cdef ull* a = _copy_table(n, adj)
    cdef ull* comps = <ull*> malloc(n * sizeof(ull))
    cdef int u, v, aa, bb, cc, ci, ncomps
    cdef ull ends, t_mask, quiet, a_side, b_side, allowed, s, q, full = (<ull> 1 << n) - 1
    if comps == NULL:
        free(a)
        raise MemoryError()
    table = [0] * (n * n)
    try:
        for u in range(n):
            table[u * n + u] = <ull> 1 << u
        for u in range(n):
            for v in range(u + 1, n):
                ends = (<ull> 1 << u) | (<ull> 1 << v)
                t_mask = ends
                if not (a[u] >> v) & 1:
                    quiet = full & ~(a[u] | a[v]) & ~ends
                    s = a[u] & a[v]
                    while s:
                        cc = CTZLL(s)
                        s &= s - 1
                        ncomps = _components(n, a, quiet | (<ull> 1 << cc), comps)
                        for ci in range(ncomps):
                            if (comps[ci] >> cc) & 1:
                                t_mask |= comps[ci]
                                break
                    a_side = a[u] & ~a[v] & ~(<ull> 1 << v)
                    b_side = a[v] & ~a[u] & ~(<ull> 1 << u)
                    s = a_side
                    while s:
                        aa = CTZLL(s)
                        s &= s - 1
                        q = b_side
                        while q:
                            bb = CTZLL(q)
                            q &= q - 1
                            allowed = quiet | (<ull> 1 << aa) | (<ull> 1 << bb)
                            ncomps = _components(n, a, allowed, comps)
                            for ci in range(ncomps):
                                if (comps[ci] >> aa) & 1:
                                    if (comps[ci] >> bb) & 1:
                                        t_mask |= comps[ci]
                                    break
                table[u * n + v] = t_mask
                table[v * n + u] = t_mask
        return table
    finally:
        free(a)
        free(comps)


def toll_walk_table(int n, adj):
    cdef ull* a = _copy_table(n, adj)
    cdef int max_positions = 2 * n + 1
    cdef ull* allow = <ull*> malloc((max_positions + 1) * sizeof(ull))
    cdef ull* fwd = <ull*> malloc((max_positions + 1) * sizeof(ull))
    cdef ull* bwd = <ull*> malloc((max_positions + 1) * sizeof(ull))
    cdef int u, v, k, i
    cdef ull t_mask, m, full = (<ull> 1 << n) - 1
    cdef bint feasible
    if allow == NULL or fwd == NULL or bwd == NULL:
        free(a)
        raise MemoryError()
    table = [0] * (n * n)
    try:
        for u in range(n):
            table[u * n + u] = <ull> 1 << u
        for u in range(n):
            for v in range(u + 1, n):
                t_mask = 0
                for k in range(2, max_positions + 1):
                    feasible = True
                    for i in range(1, k + 1):
                        m = full
                        if i == 1:
                            m = <ull> 1 << u
                        elif i == k:
                            m = <ull> 1 << v
                        if i == 2:
                            m &= a[u]
                        else:
                            m &= ~a[u]
                        if i == k - 1:
                            m &= a[v]
                        else:
                            m &= ~a[v]
                        if m == 0:
                            feasible = False
                            break
                        allow[i - 1] = m
                    if not feasible:
                        continue
                    fwd[0] = allow[0]
                    for i in range(1, k):
                        fwd[i] = _neigh(n, a, fwd[i - 1]) & allow[i]
                    if fwd[k - 1] == 0:
                        continue
                    bwd[k - 1] = allow[k - 1]
                    for i in range(k - 2, -1, -1):
                        bwd[i] = _neigh(n, a, bwd[i + 1]) & allow[i]
                    for i in range(k):
                        t_mask |= fwd[i] & bwd[i]
                table[u * n + v] = t_mask
                table[v * n + u] = t_mask
        return table
    finally:
        free(a)
        free(allow)
        free(fwd)
        free(bwd)


def wtoll_walk_table(int n, adj):
    cdef ull* a = _copy_table(n, adj)
    cdef int steps = 2 * n
    cdef int u, v, aa, bb, it
    cdef ull ends, t_mask, allowed, reach_a, reach_b, grown, s, q, full = (<ull> 1 << n) - 1
    table = [0] * (n * n)
    try:
        for u in range(n):
            table[u * n + u] = <ull> 1 << u
        for u in range(n):
            for v in range(u + 1, n):
                ends = (<ull> 1 << u) | (<ull> 1 << v)
                t_mask = ends
                if not (a[u] >> v) & 1:
                    s = a[u]
                    while s:
                        aa = CTZLL(s)
                        s &= s - 1
                        q = a[v]
                        while q:
                            bb = CTZLL(q)
                            q &= q - 1
                            allowed = full & ~ends
                            allowed &= ~a[u] | (<ull> 1 << aa)
                            allowed &= ~a[v] | (<ull> 1 << bb)
                            if not (allowed >> aa) & 1 or not (allowed >> bb) & 1:
                                continue
                            reach_a = <ull> 1 << aa
                            for it in range(steps):
                                grown = reach_a | (_neigh(n, a, reach_a) & allowed)
                                if grown == reach_a:
                                    break
                                reach_a = grown
                            if not (reach_a >> bb) & 1:
                                continue
                            reach_b = <ull> 1 << bb
                            for it in range(steps):
                                grown = reach_b | (_neigh(n, a, reach_b) & allowed)
                                if grown == reach_b:
                                    break
                                reach_b = grown
                            t_mask |= reach_a & reach_b
                table[u * n + v] = t_mask
                table[v * n + u] = t_mask
        return table
    finally:
        free(a)


cdef void _allpaths_dfs(int n, ull* adj, int x, int v, ull visited, ull pathset, ull* found, ull full) nogil:
    cdef ull cand
    cdef int y
    if x == v:
        found[0] |= pathset
        return
    if found[0] == full:
        return
    cand = adj[x] & ~visited
    while cand:
        y = CTZLL(cand)
        cand &= cand - 1
        _allpaths_dfs(n, adj, y, v, visited | (<ull> 1 << y), pathset | (<ull> 1 << y), found, full)


def allpaths_walk_table(int n, adj):
    cdef ull* a = _copy_table(n, adj)
    cdef int u, v
    cdef ull found, full = (<ull> 1 << n) - 1
    table = [0] * (n * n)
    try:
        for u in range(n):
            table[u * n + u] = <ull> 1 << u
        for u in range(n):
            for v in range(u + 1, n):
                found = 0
                _allpaths_dfs(n, a, u, v, <ull> 1 << u, <ull> 1 << u, &found, full)
                table[u * n + v] = found
                table[v * n + u] = found
        return table
    finally:
        free(a)


cdef void _ipath_dfs(int n, ull* adj, int last, int v, ull pathset, ull closed, int edges, ull* j_acc, ull* m3_acc) nogil:
    cdef ull cand = adj[last] & ~closed
    cdef int y
    while cand:
        y = CTZLL(cand)
        cand &= cand - 1
        if y == v:
            j_acc[0] |= pathset
            if edges + 1 >= 3:
                m3_acc[0] |= pathset
        else:
            _ipath_dfs(
                n, adj, y, v,
                pathset | (<ull> 1 << y),
                closed | adj[last] | (<ull> 1 << y),
                edges + 1, j_acc, m3_acc,
            )


def induced_path_tables(int n, adj):
    cdef ull* a = _copy_table(n, adj)
    cdef int u, v
    cdef ull ends, j_acc, m3_acc
    j_table = [0] * (n * n)
    m3_table = [0] * (n * n)
    try:
        for u in range(n):
            j_table[u * n + u] = <ull> 1 << u
            m3_table[u * n + u] = <ull> 1 << u
        for u in range(n):
            for v in range(u + 1, n):
                ends = (<ull> 1 << u) | (<ull> 1 << v)
                j_acc = ends
                m3_acc = ends
                _ipath_dfs(n, a, u, v, <ull> 1 << u, <ull> 1 << u, 0, &j_acc, &m3_acc)
                j_table[u * n + v] = j_acc
                j_table[v * n + u] = j_acc
                m3_table[u * n + v] = m3_acc
                m3_table[v * n + u] = m3_acc
        return j_table, m3_table
    finally:
        free(a)


def eb1_witness(int n, btable):
    cdef ull* t = _copy_table(n * n, btable)
    cdef ull x_mask, ex, rest, s, q, between, tmp, limit = <ull> 1 << n
    cdef int x, a, b, x1, x2, x3, e1, e3
    cdef bint extreme, ok
    try:
        x_mask = 0
        while x_mask < limit:
            ex = 0
            s = x_mask
            while s:
                x = CTZLL(s)
                s &= s - 1
                rest = x_mask ^ (<ull> 1 << x)
                extreme = True
                q = rest
                while extreme and q:
                    a = CTZLL(q)
                    q &= q - 1
                    between = rest
                    while between:
                        b = CTZLL(between)
                        between &= between - 1
                        if (t[a * n + b] >> x) & 1:
                            extreme = False
                            break
                if extreme:
                    ex |= <ull> 1 << x
            s = x_mask
            while s:
                x1 = CTZLL(s)
                s &= s - 1
                q = x_mask
                while q:
                    x3 = CTZLL(q)
                    q &= q - 1
                    between = t[x1 * n + x3] & x_mask
                    while between:
                        x2 = CTZLL(between)
                        between &= between - 1
                        ok = False
                        rest = ex
                        while not ok and rest:
                            e1 = CTZLL(rest)
                            rest &= rest - 1
                            tmp = ex
                            while tmp:
                                e3 = CTZLL(tmp)
                                tmp &= tmp - 1
                                if (t[e1 * n + e3] >> x2) & 1:
                                    ok = True
                                    break
                        if not ok:
                            return (x_mask, x1, x2, x3)
            x_mask += 1
        return None
    finally:
        free(t)


def ptolemy_witness(int n, dist):
    cdef int* d = <int*> malloc(n * n * sizeof(int))
    cdef int u, v, w, x
    if d == NULL:
        raise MemoryError()
    for u in range(n * n):
        d[u] = dist[u]
    try:
        for u in range(n):
            for v in range(n):
                for w in range(n):
                    for x in range(n):
                        if (
                            d[u * n + v] * d[w * n + x] + d[u * n + x] * d[v * n + w]
                            < d[u * n + w] * d[v * n + x]
                        ):
                            return (u, v, w, x)
        return None
    finally:
        free(d)


# --- canonical labeling -----------------------------------------------------
# Same individualization-refinement algorithm as the pure twin; compiled for
# speed, kept structurally identical so both backends emit equal keys.


def _refine_colors(int n, adj, colors):
    cdef int v, w
    cdef ull row
    while True:
        signatures = []
        for v in range(n):
            row = adj[v]
            neigh = []
            while row:
                w = CTZLL(row)
                row &= row - 1
                neigh.append(colors[w])
            neigh.sort()
            signatures.append((colors[v], tuple(neigh)))
        ranks = {sig: i for i, sig in enumerate(sorted(set(signatures)))}
        new_colors = [ranks[signatures[v]] for v in range(n)]
        if new_colors == colors:
            return colors
        colors = new_colors


def _canon_search(int n, adj, colors, best):
    cdef int v, pos, u, w
    cdef ull row
    classes = {}
    for v in range(n):
        classes.setdefault(colors[v], []).append(v)
    ordered = [classes[c] for c in sorted(classes)]
    if all(len(c) == 1 for c in ordered):
        perm = [0] * n
        for pos, cell in enumerate(ordered):
            perm[cell[0]] = pos
        rows = [0] * n
        for u in range(n):
            row = adj[u]
            r = 0
            while row:
                w = CTZLL(row)
                row &= row - 1
                r |= 1 << perm[w]
            rows[perm[u]] = r
        key = b"".join(r.to_bytes(2, "big") for r in rows)
        if best[0] is None or key < best[0]:
            best[0] = key
        return
    target = next(c for c in ordered if len(c) > 1)
    base = max(colors) + 1
    for v in target:
        child = list(colors)
        child[v] = base
        _canon_search(n, adj, _refine_colors(n, adj, child), best)


def canon_key(int n, adj):
    cdef int v
    full = (1 << n) - 1
    adj = list(adj)
    edgeless = all(a == 0 for a in adj)
    complete = all(adj[v] == full ^ (1 << v) for v in range(n))
    if edgeless or complete:
        rows = [0] * n if edgeless else [full ^ (1 << v) for v in range(n)]
        return b"".join(r.to_bytes(2, "big") for r in rows)
    best = [None]
    _canon_search(n, adj, _refine_colors(n, adj, [0] * n), best)
    return best[0]
