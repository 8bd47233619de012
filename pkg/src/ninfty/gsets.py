"""Finite G-sets, H-set structures on n letters, and graph subgroups.

An H-set of size n is recorded intensionally as a multiset of orbit types
(H-conjugacy classes of subgroups K with sum of indices [H:K] equal to n);
the equivalent homomorphism H -> Sigma_n is materialized on demand with
the lexicographically first block assignment, and its graph realizes the
corresponding subgroup of G x Sigma_n.
"""

from __future__ import annotations

from .errors import DomainError
from .groups import Subgroup, _cosets, lattice_of, pidentity

__all__ = [
    "GSet",
    "GraphSubgroup",
    "HClasses",
    "HSetStructure",
    "conjugate_structure",
    "fixed_points",
    "graph_subgroup",
    "h_classes",
    "hset_structures",
    "orbit_gset",
    "restrict_structure",
    "trivial_structure",
]


class GSet:
    """A finite left G-set with a full action table act[element][point]."""

    def __init__(self, group, act, labels=None, name=None, _trusted=False):
        act = tuple(tuple(row) for row in act)
        if len(act) != group.order:
            raise DomainError("action table must have one row per group element")
        self.group = group
        self.act = act
        self.size = len(act[0]) if act else 0
        self.labels = tuple(labels) if labels is not None else None
        self.name = name
        if not _trusted:
            self._validate()

    def _validate(self):
        G = self.group
        n = self.size
        if self.act[G.identity] != pidentity(n):
            raise DomainError("identity must act trivially")
        pts = set(range(n))
        for row in self.act:
            if set(row) != pts:
                raise DomainError("each element must act by a permutation")
        for g in G.gen_indices():
            for h in range(G.order):
                gh = G.mul(g, h)
                if any(
                    self.act[g][self.act[h][p]] != self.act[gh][p] for p in range(n)
                ):
                    raise DomainError("action does not respect composition")

    def apply(self, element, pt):
        return self.act[element][pt]

    def orbits(self):
        """Orbits as sorted tuples, ordered by minimal point."""
        seen = set()
        out = []
        for start in range(self.size):
            if start in seen:
                continue
            orb = {start}
            queue = [start]
            while queue:
                p = queue.pop()
                for row in self.act:
                    q = row[p]
                    if q not in orb:
                        orb.add(q)
                        queue.append(q)
            seen |= orb
            out.append(tuple(sorted(orb)))
        return out

    def orbits_under(self, members):
        """Orbits under a subset of group elements (e.g. a subgroup)."""
        rows = [self.act[m] for m in members]
        seen = set()
        out = []
        for start in range(self.size):
            if start in seen:
                continue
            orb = {start}
            queue = [start]
            while queue:
                p = queue.pop()
                for row in rows:
                    q = row[p]
                    if q not in orb:
                        orb.add(q)
                        queue.append(q)
            seen |= orb
            out.append(tuple(sorted(orb)))
        return out

    def orbit_count(self, members):
        return len(self.orbits_under(members))

    def stabilizer(self, pt):
        G = self.group
        mem = frozenset(g for g in range(G.order) if self.act[g][pt] == pt)
        return Subgroup(G, mem, _trusted=True)

    def fixed_by(self, members):
        """Points fixed by every listed group element."""
        return [
            p
            for p in range(self.size)
            if all(self.act[m][p] == p for m in members)
        ]

    def disjoint_union(self, other):
        if self.group != other.group:
            raise DomainError("disjoint union requires the same acting group")
        off = self.size
        act = [
            tuple(row) + tuple(off + q for q in row2)
            for row, row2 in zip(self.act, other.act)
        ]
        labels = None
        if self.labels is not None and other.labels is not None:
            labels = self.labels + other.labels
        return GSet(self.group, act, labels=labels, _trusted=True)

    def product(self, other):
        """Cartesian product with the diagonal action."""
        if self.group != other.group:
            raise DomainError("product requires the same acting group")
        pairs = [(p, q) for p in range(self.size) for q in range(other.size)]
        pos = {pq: i for i, pq in enumerate(pairs)}
        act = [
            tuple(pos[(row[p], row2[q])] for (p, q) in pairs)
            for row, row2 in zip(self.act, other.act)
        ]
        return GSet(self.group, act, labels=pairs, _trusted=True)

    def __repr__(self):
        nm = self.name or "GSet"
        return f"{nm}({self.size} points over {self.group.label})"


def orbit_gset(G, K):
    """The coset G-set G/K."""
    if K.parent != G:
        raise DomainError("K must be a subgroup of G")
    reps, coset_of = _cosets(G, range(G.order), K.members)
    act = [
        tuple(coset_of[G.mul(g, r)] for r in reps) for g in range(G.order)
    ]
    return GSet(G, act, labels=tuple(reps), name="orbit", _trusted=True)


def trivial_gset(G, n=1):
    row = pidentity(n)
    return GSet(G, [row] * G.order, _trusted=True)


def fixed_points(X, H, lattice=None):
    """The fixed-point set X^H with its residual Weyl-group action.

    Returns a GSet over the Weyl group N(H)/H whose labels are the fixed
    points' indices in X.
    """
    if H.parent != X.group:
        raise DomainError("H must be a subgroup of the acting group")
    if lattice is None:
        lattice = lattice_of(X.group)
    w = lattice.weyl(H)
    pts = X.fixed_by(sorted(H.members))
    pos = {p: i for i, p in enumerate(pts)}
    act = []
    for widx in range(w.group.order):
        n_el = w.section[widx]
        act.append(tuple(pos[X.act[n_el][p]] for p in pts))
    return GSet(w.group, act, labels=tuple(pts), _trusted=True)


# ---------------------------------------------------------------------------
# subgroup classes internal to one subgroup

class HClasses:
    """Conjugacy classes, inside H, of the subgroups of H.

    Classes are sorted ascending by (order, representative key), the same
    convention as the ambient lattice, and indexed 0..r-1.
    """

    def __init__(self, lattice, H):
        G = lattice.group
        sub_idx = lattice.subgroups_of(H)
        idx_set = set(sub_idx)
        assigned = {}
        classes = []
        for i in sorted(sub_idx, key=lambda i: lattice.subgroups[i].key):
            if i in assigned:
                continue
            orbit = {i}
            queue = [i]
            while queue:
                j = queue.pop()
                for h in H.members:
                    mem = frozenset(G.conj(h, m) for m in lattice.subgroups[j].members)
                    k = lattice._byset[mem]
                    if k not in orbit:
                        orbit.add(k)
                        queue.append(k)
            assert orbit <= idx_set
            cls = tuple(sorted(orbit, key=lambda j: lattice.subgroups[j].key))
            for j in orbit:
                assigned[j] = len(classes)
            classes.append(cls)
        order = sorted(
            range(len(classes)),
            key=lambda c: (
                lattice.subgroups[classes[c][0]].order,
                lattice.subgroups[classes[c][0]].key,
            ),
        )
        self.lattice = lattice
        self.H = H
        self.classes = tuple(classes[c] for c in order)
        self.reps = tuple(lattice.subgroups[c[0]] for c in self.classes)
        self.orbit_sizes = tuple(H.order // rep.order for rep in self.reps)
        self.class_of = {}
        for c, idxs in enumerate(self.classes):
            for i in idxs:
                self.class_of[i] = c

    @property
    def n_classes(self):
        return len(self.classes)

    def class_of_subgroup(self, K):
        return self.class_of[self.lattice.subgroup_index(K)]


def h_classes(lattice, H):
    """Cached HClasses for a subgroup of the lattice's group."""
    key = ("hclasses", H.members)
    got = lattice.memo.get(key)
    if got is None:
        got = HClasses(lattice, H)
        lattice.memo[key] = got
    return got


# ---------------------------------------------------------------------------
# H-set structures

class HSetStructure:
    """An H-set of size n, recorded as a multiset of orbit types."""

    def __init__(self, lattice, H, orbit_types):
        hd = h_classes(lattice, H)
        orbit_types = tuple(sorted(orbit_types))
        if any(not 0 <= t < hd.n_classes for t in orbit_types):
            raise DomainError("orbit type out of range for this subgroup")
        self.lattice = lattice
        self.H = H
        self.orbit_types = orbit_types
        self.hdata = hd
        self.size = sum(hd.orbit_sizes[t] for t in orbit_types)
        self._hom = None

    @property
    def is_trivial(self):
        """All orbits are fixed points."""
        hd = self.hdata
        return all(hd.orbit_sizes[t] == 1 for t in self.orbit_types)

    def orbit_reps(self):
        return [self.hdata.reps[t] for t in self.orbit_types]

    def hom(self):
        """The encoded homomorphism H -> Sigma_n as {element: perm}.

        Blocks of points are assigned to orbits in orbit-type order, and
        points within one orbit follow the coset enumeration of H.
        """
        if self._hom is None:
            G = self.lattice.group
            members = sorted(self.H.members)
            maps = {h: [] for h in members}
            offset = 0
            for t in self.orbit_types:
                K = self.hdata.reps[t]
                reps, coset_of = _cosets(G, members, K.members)
                for h in members:
                    row = maps[h]
                    for r in reps:
                        row.append(offset + coset_of[G.mul(h, r)])
                offset += len(reps)
            self._hom = {h: tuple(row) for h, row in maps.items()}
        return self._hom

    def describe(self):
        """Readable orbit-type string like "[C2/C2 + C2/1]"."""
        lat = self.lattice
        hlabel = lat.class_labels()[lat.class_index(self.H)]
        parts = []
        for t in self.orbit_types:
            rep = self.hdata.reps[t]
            klabel = lat.class_labels()[lat.class_index(rep)]
            parts.append(f"{hlabel}/{klabel}")
        return "[" + " + ".join(parts) + "]"

    def __eq__(self, other):
        return (
            isinstance(other, HSetStructure)
            and self.H == other.H
            and self.orbit_types == other.orbit_types
        )

    def __hash__(self):
        return hash((self.H, self.orbit_types))

    def __repr__(self):
        return f"HSetStructure({self.describe()}, n={self.size})"


def trivial_structure(lattice, H, n):
    """The trivial H-set of size n (n fixed points)."""
    hd = h_classes(lattice, H)
    full = hd.n_classes - 1
    assert hd.orbit_sizes[full] == 1
    return HSetStructure(lattice, H, (full,) * n)


def hset_structures(lattice, H, n):
    """All H-sets of size n up to isomorphism, as orbit-type multisets.

    Deterministic order: lexicographic in the sorted orbit-type tuples.
    """
    if n < 1:
        raise DomainError("H-set size must be a positive integer")
    hd = h_classes(lattice, H)
    sizes = hd.orbit_sizes
    out = []

    def extend(start, remaining, acc):
        if remaining == 0:
            out.append(HSetStructure(lattice, H, tuple(acc)))
            return
        for t in range(start, hd.n_classes):
            if sizes[t] <= remaining:
                acc.append(t)
                extend(t, remaining - sizes[t], acc)
                acc.pop()

    extend(0, n, [])
    out.sort(key=lambda s: s.orbit_types)
    return out


def restrict_structure(T, K):
    """The restriction of an H-set structure to a subgroup K of H."""
    lattice = T.lattice
    G = lattice.group
    if not K.members <= T.H.members:
        raise DomainError("restriction target must be a subgroup of H")
    kd = h_classes(lattice, K)
    members = sorted(T.H.members)
    kmembers = sorted(K.members)
    types = []
    for t in T.orbit_types:
        J = T.hdata.reps[t]
        reps, coset_of = _cosets(G, members, J.members)
        rows = {k: [coset_of[G.mul(k, r)] for r in reps] for k in kmembers}
        seen = set()
        for start in range(len(reps)):
            if start in seen:
                continue
            orb = {start}
            queue = [start]
            while queue:
                p = queue.pop()
                for k in kmembers:
                    q = rows[k][p]
                    if q not in orb:
                        orb.add(q)
                        queue.append(q)
            seen |= orb
            stab = frozenset(k for k in kmembers if rows[k][start] == start)
            types.append(kd.class_of[lattice._byset[stab]])
    return HSetStructure(lattice, K, tuple(types))


def conjugate_structure(T, g):
    """Transport an H-set structure along conjugation by a group element."""
    lattice = T.lattice
    G = lattice.group
    H2 = T.H.conjugate(g)
    h2d = h_classes(lattice, H2)
    types = []
    for t in T.orbit_types:
        K2 = T.hdata.reps[t].conjugate(g)
        types.append(h2d.class_of[lattice._byset[K2.members]])
    return HSetStructure(lattice, H2, tuple(types))


# ---------------------------------------------------------------------------
# graph subgroups of G x Sigma_n

class GraphSubgroup:
    """The graph {(h, f(h))} <= G x Sigma_n of an H-set structure."""

    def __init__(self, structure):
        hom = structure.hom()
        pairs = frozenset(hom.items())
        G = structure.lattice.group
        ident = pidentity(structure.size) if structure.size else ()
        assert all(perm == ident for h, perm in pairs if h == G.identity)
        self.structure = structure
        self.H = structure.H
        self.n = structure.size
        self.hom = hom
        self.pairs = pairs

    @property
    def order(self):
        return len(self.pairs)

    def projection(self):
        """p_G of the graph: the subgroup H itself."""
        return Subgroup(
            self.H.parent, frozenset(h for h, _ in self.pairs), _trusted=True
        )

    def is_sigma_trivial(self):
        """Whether the graph is H x {e}, i.e. the hom is trivial."""
        ident = pidentity(self.n)
        return all(perm == ident for _, perm in self.pairs)

    def __repr__(self):
        return f"GraphSubgroup({self.structure.describe()}, n={self.n})"


def graph_subgroup(T):
    """Realize an H-set structure as a graph subgroup of G x Sigma_n."""
    return GraphSubgroup(T)
