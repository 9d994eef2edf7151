"""Pure-Python canonical labeling kernel.

The hypergraph is viewed as a bipartite vertex/edge incidence graph.  Nodes
``0..n-1`` are vertices and ``n..n+m-1`` are edges.  Search is
individualization-refinement over edge cells only: once every edge sits in a
singleton cell, each vertex is pinned down by its edge-membership mask up to
twins, which are interchangeable anyway.

Leaf certificate: ``(edge colors in order, sorted vertex masks)`` where bit
``r`` of a mask means "member of the r-th edge".  The canonical leaf is the
lexicographically smallest certificate.  Subtrees are pruned with
automorphisms discovered by comparing leaves against the first and best leaf.

The compiled kernel in ``_canon_cy.pyx`` follows this file step for step;
keep them in sync.
"""

BACKEND = "python"


def _refine(adj, lab, start_of, size_at, queue, N):
    inq = [False] * N
    for s in queue:
        inq[s] = True
    qi = 0
    while qi < len(queue):
        w = queue[qi]
        qi += 1
        inq[w] = False
        cnt = [0] * N
        for pos in range(w, w + size_at[w]):
            for y in adj[lab[pos]]:
                cnt[y] += 1
        s = 0
        while s < N:
            sz = size_at[s]
            if sz > 1:
                c0 = cnt[lab[s]]
                split = False
                for pos in range(s + 1, s + sz):
                    if cnt[lab[pos]] != c0:
                        split = True
                        break
                if split:
                    block = sorted(lab[s:s + sz], key=cnt.__getitem__)
                    lab[s:s + sz] = block
                    f = s
                    i = s
                    end = s + sz
                    while i < end:
                        c = cnt[lab[i]]
                        j = i
                        while j < end and cnt[lab[j]] == c:
                            start_of[lab[j]] = f
                            j += 1
                        size_at[f] = j - f
                        if not inq[f]:
                            inq[f] = True
                            queue.append(f)
                        f = j
                        i = j
            s += sz


def _orbit_of(x, gens, m):
    parent = list(range(m))

    def find(a):
        while parent[a] != a:
            parent[a] = parent[parent[a]]
            a = parent[a]
        return a

    for g in gens:
        for a in range(m):
            ra, rb = find(a), find(g[a])
            if ra != rb:
                if ra < rb:
                    parent[rb] = ra
                else:
                    parent[ra] = rb
    return find


def _leaf_certificate(lab, n, m, members, colors):
    order = [lab[pos] - n for pos in range(n, n + m)]
    masks = [0] * n
    for r, e in enumerate(order):
        bit = 1 << r
        for v in members[e]:
            masks[v] |= bit
    masks.sort()
    return (tuple(colors[e] for e in order), tuple(masks)), order


def canonical_label(n, edges, colors=None):
    """Return ``(certificate, canonical edge order, automorphism generators)``.

    ``edges`` is a list of vertex-index tuples; ``colors`` optionally assigns
    an integer color to each edge (isomorphisms must preserve it).  Generators
    are edge permutations as tuples, ``g[e]`` being the image of edge ``e``.
    """
    m = len(edges)
    if colors is None:
        colors = [0] * m
    N = n + m
    adj = [[] for _ in range(N)]
    for e, verts in enumerate(edges):
        for v in verts:
            adj[v].append(n + e)
            adj[n + e].append(v)

    lab = list(range(n)) + [n + e for e in sorted(range(m), key=lambda e: colors[e])]
    start_of = [0] * N
    size_at = [0] * N
    queue = []
    if n:
        size_at[0] = n
        queue.append(0)
    pos = n
    while pos < N:
        c = colors[lab[pos] - n]
        j = pos
        while j < N and colors[lab[j] - n] == c:
            start_of[lab[j]] = pos
            j += 1
        size_at[pos] = j - pos
        queue.append(pos)
        pos = j
    _refine(adj, lab, start_of, size_at, queue, N)

    state = {"first": None, "best": None, "gens": []}
    gens = state["gens"]

    def leaf(lab_):
        cert, order = _leaf_certificate(lab_, n, m, edges, colors)
        if state["first"] is None:
            state["first"] = (cert, order)
            state["best"] = (cert, order)
            return
        fcert, forder = state["first"]
        if cert == fcert:
            g = [0] * m
            for a, b in zip(forder, order):
                g[a] = b
            gens.append(tuple(g))
        bcert, border = state["best"]
        if cert < bcert:
            state["best"] = (cert, order)
        elif cert == bcert and cert != fcert:
            g = [0] * m
            for a, b in zip(border, order):
                g[a] = b
            gens.append(tuple(g))

    def visit(lab_, start_of_, size_at_, prefix):
        target = -1
        pos = n
        while pos < N:
            if size_at_[pos] > 1:
                target = pos
                break
            pos += size_at_[pos]
        if target < 0:
            leaf(lab_)
            return
        sz = size_at_[target]
        cell = sorted(lab_[target:target + sz])
        explored = []
        for x in cell:
            if explored:
                stab = [g for g in gens if all(g[p] == p for p in prefix)]
                if stab:
                    find = _orbit_of(x, stab, m)
                    rx = find(x - n)
                    if any(find(y - n) == rx for y in explored):
                        continue
            lab2 = lab_[:]
            so2 = start_of_[:]
            sa2 = size_at_[:]
            i = lab2.index(x, target, target + sz)
            lab2[i], lab2[target] = lab2[target], lab2[i]
            sa2[target] = 1
            sa2[target + 1] = sz - 1
            for p in range(target + 1, target + sz):
                so2[lab2[p]] = target + 1
            so2[x] = target
            _refine(adj, lab2, so2, sa2, [target], N)
            visit(lab2, so2, sa2, prefix + [x - n])
            explored.append(x)

    visit(lab, start_of, size_at, [])
    cert, order = state["best"]
    return cert, order, gens
