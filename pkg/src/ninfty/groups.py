"""Finite permutation groups, subgroup lattices, Weyl groups.

Groups are realized by permutations of {0..degree-1}, stored as tuples of
images.  Elements of a group are globally sorted, so every element has a
stable index and the identity always sits at index 0.  Subgroups are
frozensets of element indices.  All derived lattice data (conjugacy
classes of subgroups, inclusion, Mobius values, normalizers) is exact and
deterministic.
"""

from __future__ import annotations

import itertools
from fractions import Fraction
from functools import lru_cache

from .errors import DomainError, ResourceError

ORDER_CAP = 10000          # element-enumeration cap for a single group
LATTICE_ORDER_CAP = 200    # subgroup enumeration is desk-scale up to here
_MUL_TABLE_MAX = 1500      # precompute the full multiplication table below this


# ---------------------------------------------------------------------------
# permutations as tuples of images

def pmul(a, b):
    """Compose permutations: apply b first, then a."""
    return tuple(a[x] for x in b)


def pinv(a):
    inv = [0] * len(a)
    for i, x in enumerate(a):
        inv[x] = i
    return tuple(inv)


def pidentity(degree):
    return tuple(range(degree))


def perm_order(a):
    n, p = 1, a
    e = pidentity(len(a))
    while p != e:
        p = pmul(a, p)
        n += 1
    return n


def cycles_of(perm):
    """Disjoint cycles of a permutation, minimal elements first."""
    seen, out = set(), []
    for start in range(len(perm)):
        if start in seen or perm[start] == start:
            seen.add(start)
            continue
        cyc, x = [], start
        while x not in seen:
            seen.add(x)
            cyc.append(x)
            x = perm[x]
        out.append(tuple(cyc))
    return out


def format_perm(perm):
    cyc = cycles_of(perm)
    if not cyc:
        return "()"
    return "".join("(" + " ".join(str(x) for x in c) + ")" for c in cyc)


# ---------------------------------------------------------------------------
# groups

class FiniteGroup:
    """A finite permutation group with a fixed, sorted element list.

    Immutable after construction; all mutating state is memo caches with
    idempotent fill, so concurrent reads are safe.
    """

    def __init__(self, degree, generators, name=None, order_cap=ORDER_CAP):
        if degree < 1:
            raise DomainError("degree must be a positive integer")
        gens = []
        for g in generators:
            g = tuple(g)
            if sorted(g) != list(range(degree)):
                raise DomainError(f"not a permutation of 0..{degree - 1}: {g}")
            gens.append(g)
        elements = _close(gens, degree, order_cap)
        self.degree = degree
        self.generators = tuple(gens)
        self.elements = elements
        self.name = name
        self.index = {p: i for i, p in enumerate(elements)}
        self.order = len(elements)
        assert elements[0] == pidentity(degree)  # identity is lex-minimal
        self.identity = 0
        self._inv = tuple(self.index[pinv(p)] for p in elements)
        self._table = None
        if self.order <= _MUL_TABLE_MAX:
            idx = self.index
            self._table = [
                tuple(idx[pmul(a, b)] for b in elements) for a in elements
            ]
        self._hash = hash((degree, elements))
        self._gen_indices = tuple(sorted({self.index[g] for g in gens}))

    def mul(self, i, j):
        if self._table is not None:
            return self._table[i][j]
        return self.index[pmul(self.elements[i], self.elements[j])]

    def inv(self, i):
        return self._inv[i]

    def conj(self, g, x):
        """Index of g x g^-1."""
        return self.mul(g, self.mul(x, self._inv[g]))

    def element_order(self, i):
        return perm_order(self.elements[i])

    def gen_indices(self):
        return self._gen_indices

    @property
    def label(self):
        return self.name if self.name else f"<group of order {self.order}>"

    def __eq__(self, other):
        return (
            isinstance(other, FiniteGroup)
            and self.degree == other.degree
            and self.elements == other.elements
        )

    def __hash__(self):
        return self._hash

    def __repr__(self):
        return f"FiniteGroup({self.label}, order={self.order}, degree={self.degree})"


def _close(gens, degree, cap):
    """Closure of a generator list under composition; sorted element tuple."""
    ident = pidentity(degree)
    els = {ident}
    frontier = [ident]
    while frontier:
        new = []
        for a in frontier:
            for g in gens:
                b = pmul(g, a)
                if b not in els:
                    els.add(b)
                    new.append(b)
                    if len(els) > cap:
                        raise ResourceError(
                            f"group order exceeds cap {cap}; raise the cap to proceed"
                        )
        frontier = new
    return tuple(sorted(els))


class Subgroup:
    """A subgroup given by the frozenset of its element indices."""

    def __init__(self, parent, members, _trusted=False):
        members = frozenset(members)
        if not _trusted:
            _check_subgroup(parent, members)
        self.parent = parent
        self.members = members
        self.order = len(members)
        self.key = tuple(sorted(members))
        self._gens = None

    def contains(self, other):
        return other.members <= self.members

    def conjugate(self, g):
        G = self.parent
        return Subgroup(
            G, frozenset(G.conj(g, m) for m in self.members), _trusted=True
        )

    def gens(self):
        """A small generating list, computed greedily and cached."""
        if self._gens is None:
            G = self.parent
            have = {G.identity}
            gens = []
            for m in self.key:
                if m not in have:
                    gens.append(m)
                    have = _close_indices(G, gens)
            self._gens = tuple(gens)
        return self._gens

    def as_group(self):
        """This subgroup as a standalone FiniteGroup on the same points."""
        G = self.parent
        gens = [G.elements[i] for i in self.gens()]
        return FiniteGroup(G.degree, gens, name=None)

    def __eq__(self, other):
        return (
            isinstance(other, Subgroup)
            and self.parent == other.parent
            and self.members == other.members
        )

    def __hash__(self):
        return hash((self.parent, self.members))

    def __repr__(self):
        return f"Subgroup(order={self.order}, of {self.parent.label})"


def _check_subgroup(G, members):
    if G.identity not in members:
        raise DomainError("subgroup must contain the identity")
    for a in members:
        if G.inv(a) not in members:
            raise DomainError("subgroup member set not closed under inverse")
        for b in members:
            if G.mul(a, b) not in members:
                raise DomainError("subgroup member set not closed under composition")
    if G.order % len(members) != 0:
        raise DomainError("subgroup size does not divide the group order")


def _close_indices(G, gen_indices):
    """Closure of element indices under the group operation."""
    els = {G.identity}
    frontier = [G.identity]
    while frontier:
        new = []
        for a in frontier:
            for g in gen_indices:
                b = G.mul(g, a)
                if b not in els:
                    els.add(b)
                    new.append(b)
        frontier = new
    return els


# ---------------------------------------------------------------------------
# the subgroup lattice

class SubgroupLattice:
    """All subgroups of a group with classes, inclusion, Mobius, normalizers.

    Subgroups are sorted by (order, member tuple); conjugacy classes by
    (order, representative member tuple), so class 0 is the trivial
    subgroup and the last class is the whole group.  Class representatives
    are the lexicographically minimal member sets.
    """

    def __init__(self, group, subgroups, classes, normalizer_idx, mobius_table):
        self.group = group
        self.subgroups = subgroups              # tuple[Subgroup]
        self.classes = classes                  # tuple[tuple[int]] subgroup indices
        self.normalizer_idx = normalizer_idx    # tuple[int] subgroup -> subgroup
        self._mobius = mobius_table             # dict[(int, int), int]
        self._byset = {s.members: i for i, s in enumerate(subgroups)}
        self.class_of = [0] * len(subgroups)
        for c, idxs in enumerate(classes):
            for i in idxs:
                self.class_of[i] = c
        self.class_reps = tuple(self.subgroups[idxs[0]] for idxs in classes)
        self._leq = [
            frozenset(
                j for j, t in enumerate(subgroups) if s.members <= t.members
            )
            for s in subgroups
        ]  # _leq[i] = indices of subgroups containing subgroup i
        self._labels = None
        self._weyl_cache = {}
        self._below_cache = {}
        self.memo = {}  # namespaced scratch cache; fills are idempotent

    # -- lookups ------------------------------------------------------------

    def subgroup_index(self, sub):
        if sub.parent is not self.group and sub.parent != self.group:
            raise DomainError("subgroup belongs to a different group")
        try:
            return self._byset[sub.members]
        except KeyError:
            raise DomainError("not a subgroup of this lattice's group") from None

    def class_index(self, sub):
        return self.class_of[self.subgroup_index(sub)]

    def leq(self, i, j):
        """Whether subgroup i is contained in subgroup j."""
        return j in self._leq[i]

    def subgroups_of(self, sub):
        """Indices of lattice subgroups contained in `sub`."""
        m = sub.members
        return [i for i, s in enumerate(self.subgroups) if s.members <= m]

    def classes_below(self, sub):
        """Class indices with a representative subconjugate to `sub`."""
        key = sub.members
        got = self._below_cache.get(key)
        if got is None:
            got = frozenset(
                self.class_of[i]
                for i, s in enumerate(self.subgroups)
                if s.members <= key
            )
            self._below_cache[key] = got
        return got

    @property
    def n_classes(self):
        return len(self.classes)

    def trivial_class(self):
        return 0

    # -- Mobius -------------------------------------------------------------

    def mobius(self, lower, upper):
        i = self.subgroup_index(lower)
        j = self.subgroup_index(upper)
        if not self.leq(i, j):
            raise DomainError("mobius requires the first subgroup inside the second")
        return self._mobius[(i, j)]

    # -- normalizers and Weyl groups -----------------------------------------

    def normalizer(self, sub):
        return self.subgroups[self.normalizer_idx[self.subgroup_index(sub)]]

    def weyl(self, sub):
        """Weyl data N(H)/H for a subgroup of this lattice (cached)."""
        i = self.subgroup_index(sub)
        got = self._weyl_cache.get(i)
        if got is None:
            got = _weyl_of(self, self.subgroups[i])
            self._weyl_cache[i] = got
        return got

    # -- Hasse diagram --------------------------------------------------------

    def cover_pairs(self):
        """Pairs (i, j) where subgroup j covers subgroup i."""
        n = len(self.subgroups)
        out = []
        for i in range(n):
            ups = [j for j in self._leq[i] if j != i]
            for j in ups:
                if not any(k != j and self.leq(k, j) for k in ups):
                    out.append((i, j))
        return out

    # -- labels ---------------------------------------------------------------

    def class_labels(self):
        if self._labels is None:
            from .catalog import class_labels
            self._labels = class_labels(self)
        return self._labels

    def class_by_label(self, label):
        labels = self.class_labels()
        try:
            return labels.index(label)
        except ValueError:
            raise DomainError(
                f"unknown subgroup label {label!r}; choices: {', '.join(labels)}"
            ) from None

    def __repr__(self):
        return (
            f"SubgroupLattice({self.group.label}: {len(self.subgroups)} subgroups,"
            f" {len(self.classes)} classes)"
        )


def enumerate_subgroups(G, max_order=LATTICE_ORDER_CAP):
    """The full subgroup lattice of G.

    Enumeration is by layered cyclic extension: start from the cyclic
    subgroups and repeatedly join known subgroups with cyclic ones until
    closure.  Every subgroup is generated by its cyclic subgroups, so the
    result is complete.
    """
    if G.order > max_order:
        raise ResourceError(
            f"subgroup enumeration capped at order {max_order} (group has {G.order})"
        )

    # cyclic subgroups, with a generator for each
    cyclic = {}
    for e in range(G.order):
        mem = frozenset(_cycle_span(G, e))
        cyclic.setdefault(mem, e)
    cyclic_items = sorted(cyclic.items(), key=lambda kv: (len(kv[0]), sorted(kv[0])))

    seen = {}
    gens_of = {}
    for mem, gen in cyclic_items:
        seen[mem] = None
        gens_of[mem] = (gen,) if gen != G.identity else ()
    trivial = frozenset([G.identity])
    seen.setdefault(trivial, None)
    gens_of.setdefault(trivial, ())
    frontier = list(seen)
    while frontier:
        new = []
        for mem in frontier:
            for cyc, cgen in cyclic_items:
                if cyc <= mem:
                    continue
                gens = gens_of[mem] + (cgen,)
                joined = frozenset(_close_indices(G, gens))
                if joined not in seen:
                    seen[joined] = None
                    gens_of[joined] = tuple(sorted(set(gens)))
                    new.append(joined)
        frontier = new

    member_sets = sorted(seen, key=lambda m: (len(m), sorted(m)))
    subgroups = tuple(Subgroup(G, m, _trusted=True) for m in member_sets)
    index_of = {s.members: i for i, s in enumerate(subgroups)}

    # conjugacy classes under conjugation by generators of G
    gen_idx = G.gen_indices()
    unassigned = set(range(len(subgroups)))
    raw_classes = []
    while unassigned:
        start = min(unassigned)
        orbit = {start}
        queue = [start]
        while queue:
            i = queue.pop()
            for g in gen_idx:
                mem = frozenset(G.conj(g, m) for m in subgroups[i].members)
                j = index_of[mem]
                if j not in orbit:
                    orbit.add(j)
                    queue.append(j)
        unassigned -= orbit
        raw_classes.append(tuple(sorted(orbit)))
    raw_classes.sort(key=lambda c: (subgroups[c[0]].order, subgroups[c[0]].key))
    classes = tuple(raw_classes)

    normalizer_idx = tuple(
        index_of[_normalizer_members(G, s.members)] for s in subgroups
    )

    mobius_table = _mobius_all(subgroups)

    return SubgroupLattice(G, subgroups, classes, normalizer_idx, mobius_table)


def _cycle_span(G, e):
    out = [G.identity]
    x = e
    while x != G.identity:
        out.append(x)
        x = G.mul(e, x)
    return out


def _normalizer_members(G, members):
    out = set()
    for g in range(G.order):
        if all(G.conj(g, m) in members for m in members):
            out.add(g)
    return frozenset(out)


def _mobius_all(subgroups):
    """Mobius values mu(K, H) for every comparable pair in the lattice."""
    n = len(subgroups)
    below = [
        [k for k in range(n) if subgroups[k].members <= subgroups[h].members]
        for h in range(n)
    ]
    table = {}
    for k in range(n):
        # process upper subgroups in ascending order; intermediates come first
        for h in range(n):
            if not subgroups[k].members <= subgroups[h].members:
                continue
            if h == k:
                table[(k, k)] = 1
                continue
            acc = 0
            for m in below[h]:
                if m != h and (k, m) in table:
                    acc += table[(k, m)]
            table[(k, h)] = -acc
    return table


@lru_cache(maxsize=None)
def lattice_of(G):
    """Cached subgroup lattice at the default cap."""
    return enumerate_subgroups(G)


def full_subgroup(G):
    return Subgroup(G, frozenset(range(G.order)), _trusted=True)


def trivial_subgroup(G):
    return Subgroup(G, frozenset([G.identity]), _trusted=True)


# ---------------------------------------------------------------------------
# Weyl groups

class Weyl:
    """The Weyl group N(H)/H acting on the cosets of H in N(H).

    `group` is the quotient as a permutation group of degree [N:H];
    `coset_reps[i]` is the minimal element of the i-th coset; `section[w]`
    maps an element index of the quotient back to a representative element
    of the ambient group.
    """

    def __init__(self, group, subgroup, normalizer, coset_reps, section):
        self.group = group
        self.subgroup = subgroup
        self.normalizer = normalizer
        self.coset_reps = coset_reps
        self.section = section

    @property
    def order(self):
        return self.group.order


def _weyl_of(lattice, H):
    G = lattice.group
    N = lattice.normalizer(H)
    reps, coset_of = _cosets(G, sorted(N.members), H.members)
    degree = len(reps)
    perm_to_n = {}
    for nel in sorted(N.members):
        perm = tuple(coset_of[G.mul(nel, r)] for r in reps)
        perm_to_n.setdefault(perm, nel)
    elements = tuple(sorted(perm_to_n))
    gens = [
        tuple(coset_of[G.mul(g, r)] for r in reps)
        for g in Subgroup(G, N.members, _trusted=True).gens()
    ]
    W = FiniteGroup(degree, gens or [pidentity(degree)], name=None)
    assert W.elements == elements
    section = tuple(perm_to_n[p] for p in W.elements)
    return Weyl(W, H, N, tuple(reps), section)


def _cosets(G, ambient_sorted, members):
    """Left cosets of `members` inside the sorted ambient element list."""
    reps = []
    coset_of = {}
    for g in ambient_sorted:
        if g in coset_of:
            continue
        c = len(reps)
        reps.append(g)
        for m in members:
            coset_of[G.mul(g, m)] = c
    return reps, coset_of


def weyl_group(lattice, H):
    """The Weyl group N(H)/H as a permutation group on the cosets."""
    return lattice.weyl(H).group


def mobius(lattice, lower, upper):
    """Mobius value of the subgroup-lattice interval [lower, upper]."""
    return lattice.mobius(lower, upper)


# ---------------------------------------------------------------------------
# misc exact helpers used around the package

def fraction_str(q):
    """Canonical string for an exact rational: '3', '-1/2'."""
    q = Fraction(q)
    if q.denominator == 1:
        return str(q.numerator)
    return f"{q.numerator}/{q.denominator}"


def parse_fraction(text):
    return Fraction(text)


def divisors(n):
    out = [d for d in range(1, n + 1) if n % d == 0]
    return out


def subsets(iterable):
    items = list(iterable)
    return itertools.chain.from_iterable(
        itertools.combinations(items, r) for r in range(len(items) + 1)
    )
