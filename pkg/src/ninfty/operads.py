"""N-infinity operad models as admissible-set oracles.

An operad model keeps no spaces: it is the family sequence itself,
presented by a decidable predicate "this H-set is admissible".  Four
kinds: minimal (only trivial H-sets), maximal (everything), geometric
(embeddability into a permutation universe), and custom (user oracle).

The geometric criterion: an orbit H/K embeds into the universe iff for
every L with K < L <= H some generator's fixed-subspace dimension drops
strictly from K to L.  Fixed-subspace dimensions of permutation summands
are orbit counts, and infinite multiplicity makes orbit disjointness
free, so this is exact.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .errors import DomainError, ResourceError
from .gsets import (
    GraphSubgroup,
    HSetStructure,
    conjugate_structure,
    h_classes,
    hset_structures,
    restrict_structure,
    trivial_structure,
)

FAMILY_N_MAX = 8
TRANSFER_SUBGROUP_CAP = 20


class PermutationUniverse:
    """A universe generated by finitely many G-sets, each taken with
    countably infinite multiplicity (the trivial summand is implicit)."""

    def __init__(self, lattice, generators):
        if not generators:
            raise DomainError("a permutation universe needs at least one generator")
        G = lattice.group
        for S in generators:
            if S.group != G:
                raise DomainError("universe generators must share one group")
        self.lattice = lattice
        self.generators = tuple(generators)
        self._counts = {}

    def orbit_count(self, gen_idx, members):
        key = (gen_idx, members)
        got = self._counts.get(key)
        if got is None:
            got = self.generators[gen_idx].orbit_count(sorted(members))
            self._counts[key] = got
        return got

    def drops(self, K_members, L_members):
        """Whether some generator's fixed-subspace dimension strictly
        decreases from K to L."""
        return any(
            self.orbit_count(i, L_members) < self.orbit_count(i, K_members)
            for i in range(len(self.generators))
        )


class OperadModel:
    """An operad presented by its admissibility oracle, with memo table."""

    def __init__(self, lattice, kind, universe=None, oracle=None, name=None,
                 n_max=FAMILY_N_MAX):
        if kind not in ("e1", "eG", "geometric", "custom"):
            raise DomainError(f"unknown operad kind {kind!r}")
        if kind == "geometric" and universe is None:
            raise DomainError("geometric operads need a permutation universe")
        if kind == "custom" and oracle is None:
            raise DomainError("custom operads need an oracle")
        self.lattice = lattice
        self.kind = kind
        self.universe = universe
        self.oracle = oracle
        self.name = name or kind
        self.n_max = n_max
        self._memo = {}
        self._family_cache = {}

    # -- constructors --------------------------------------------------------

    @classmethod
    def minimal(cls, lattice):
        """Only trivial H-sets are admissible."""
        return cls(lattice, "e1", name="e1")

    @classmethod
    def maximal(cls, lattice):
        """Every H-set is admissible."""
        return cls(lattice, "eG", name="eG")

    @classmethod
    def geometric(cls, lattice, universe, name=None):
        return cls(lattice, "geometric", universe=universe,
                   name=name or "geometric")

    @classmethod
    def custom(cls, lattice, oracle, name="custom"):
        return cls(lattice, "custom", oracle=oracle, name=name)

    # -- the oracle ------------------------------------------------------------

    def admissible(self, H, T):
        """Whether the H-set structure T is admissible for this operad."""
        if T.H != H:
            raise DomainError("structure does not belong to the given subgroup")
        key = (H.members, T.orbit_types)
        got = self._memo.get(key)
        if got is None:
            got = self._admissible(H, T)
            self._memo[key] = got
        return got

    def _admissible(self, H, T):
        if self.kind == "e1":
            return T.is_trivial
        if self.kind == "eG":
            return True
        if self.kind == "custom":
            return bool(self.oracle(H, T))
        return all(
            self._orbit_embeds(H, T.hdata.reps[t]) for t in set(T.orbit_types)
        )

    def admissible_orbit(self, H, K):
        """Whether the single orbit H/K is admissible."""
        hd = h_classes(self.lattice, H)
        t = hd.class_of[self.lattice.subgroup_index(K)]
        return self.admissible(H, HSetStructure(self.lattice, H, (t,)))

    def _orbit_embeds(self, H, K):
        key = ("orbit", H.members, K.members)
        got = self._memo.get(key)
        if got is not None:
            return got
        lat = self.lattice
        k_idx = lat.subgroup_index(K)
        h_set = set(lat.subgroups_of(H))
        over = [
            j for j in lat._leq[k_idx] if j != k_idx and j in h_set
        ]
        ok = all(
            self.universe.drops(K.members, lat.subgroups[j].members) for j in over
        )
        self._memo[key] = ok
        return ok

    # -- the family sequence ----------------------------------------------------

    def family(self, n):
        """Conjugacy classes of admissible graph subgroups at level n.

        Members are returned for every admissible pair (H, T) with
        |T| = n, deduplicated up to conjugacy in G x Sigma_n and sorted by
        (class of H, canonical orbit types).
        """
        if n < 1:
            raise DomainError("family level must be a positive integer")
        if n > self.n_max:
            raise ResourceError(
                f"family level {n} beyond cap {self.n_max}; raise n_max to proceed"
            )
        got = self._family_cache.get(n)
        if got is None:
            got = self._materialize(n)
            self._family_cache[n] = got
        return got

    def _materialize(self, n):
        lat = self.lattice
        out = []
        for c, H in enumerate(lat.class_reps):
            perms = _normalizer_type_maps(lat, H)
            seen = set()
            for T in hset_structures(lat, H, n):
                if not self.admissible(H, T):
                    continue
                key = min(
                    tuple(sorted(p[t] for t in T.orbit_types)) for p in perms
                )
                if key in seen:
                    continue
                seen.add(key)
                out.append(FamilyMember(c, H, T, GraphSubgroup(T)))
        out.sort(key=lambda m: (m.h_class, m.structure.orbit_types))
        return tuple(out)


@dataclass(frozen=True)
class FamilyMember:
    """One conjugacy class of admissible graph subgroups."""

    h_class: int
    H: object
    structure: HSetStructure
    graph: GraphSubgroup = field(compare=False)

    def describe(self):
        return self.structure.describe()


def _normalizer_type_maps(lattice, H):
    """Permutations of H's orbit-type ids induced by the normalizer of H."""
    key = ("ntypemaps", H.members)
    got = lattice.memo.get(key)
    if got is not None:
        return got
    G = lattice.group
    hd = h_classes(lattice, H)
    N = lattice.normalizer(H)
    maps = set()
    for nel in sorted(N.members):
        m = tuple(
            hd.class_of[
                lattice._byset[
                    frozenset(G.conj(nel, x) for x in rep.members)
                ]
            ]
            for rep in hd.reps
        )
        maps.add(m)
    got = tuple(sorted(maps))
    lattice.memo[key] = got
    return got


def family(O, n):
    """The family of the operad at level n (module-level convenience)."""
    return O.family(n)


# ---------------------------------------------------------------------------
# indexing-system validation

@dataclass(frozen=True)
class Violation:
    axiom: str
    subject: str
    detail: str


@dataclass(frozen=True)
class ValidationReport:
    operad: str
    n_max: int
    n_checked: int
    violations: tuple

    @property
    def ok(self):
        return not self.violations


def validate_indexing_system(O, n_max=4):
    """Check the closure axioms of an admissible-set oracle up to n_max.

    Violations are reported as data, never raised: a custom oracle that
    fails closure is still a queryable object, it just is not the family
    sequence of any operad of this shape.
    """
    lat = O.lattice
    G = lat.group
    violations = []
    checked = 0

    def note(axiom, subject, detail):
        violations.append(Violation(axiom, subject, detail))

    for H in lat.subgroups:
        admissible_here = []
        for n in range(1, n_max + 1):
            triv = trivial_structure(lat, H, n)
            if not O.admissible(H, triv):
                note("trivial", _sname(lat, H), f"trivial set of size {n} rejected")
            for T in hset_structures(lat, H, n):
                checked += 1
                if not O.admissible(H, T):
                    continue
                admissible_here.append(T)
                # suborbit closure: drop one orbit
                if len(T.orbit_types) > 1:
                    for drop in sorted(set(T.orbit_types)):
                        rest = list(T.orbit_types)
                        rest.remove(drop)
                        sub = HSetStructure(lat, H, tuple(rest))
                        if not O.admissible(H, sub):
                            note(
                                "suborbit",
                                _sname(lat, H),
                                f"{T.describe()} admissible but {sub.describe()} not",
                            )
                # restriction closure
                for k_idx in lat.subgroups_of(H):
                    K = lat.subgroups[k_idx]
                    if K.members == H.members:
                        continue
                    TK = restrict_structure(T, K)
                    if not O.admissible(K, TK):
                        note(
                            "restriction",
                            _sname(lat, H),
                            f"{T.describe()} restricted to {_sname(lat, K)} "
                            f"gives inadmissible {TK.describe()}",
                        )
                # conjugation closure (generators suffice)
                for g in G.gen_indices():
                    Tg = conjugate_structure(T, g)
                    if not O.admissible(Tg.H, Tg):
                        note(
                            "conjugation",
                            _sname(lat, H),
                            f"{T.describe()} conjugate {Tg.describe()} inadmissible",
                        )
            # disjoint-union closure within this level budget
        for i, T1 in enumerate(admissible_here):
            for T2 in admissible_here[i:]:
                if T1.size + T2.size > n_max:
                    continue
                union = HSetStructure(
                    lat, H, T1.orbit_types + T2.orbit_types
                )
                if not O.admissible(H, union):
                    note(
                        "disjoint-union",
                        _sname(lat, H),
                        f"{T1.describe()} + {T2.describe()} inadmissible",
                    )
    if O.kind == "e1":
        for H in lat.subgroups:
            if H.order > 1 and H.order <= n_max:
                free = _free_orbit(lat, H)
                if O.admissible(H, free):
                    note("no-accidental-free", _sname(lat, H),
                         "free orbit admissible in the minimal model")
    return ValidationReport(O.name, n_max, checked, tuple(violations))


def _free_orbit(lattice, H):
    hd = h_classes(lattice, H)
    t = hd.class_of[lattice._byset[frozenset([lattice.group.identity])]]
    return HSetStructure(lattice, H, (t,))


def _sname(lattice, sub):
    return lattice.class_labels()[lattice.class_index(sub)]


# ---------------------------------------------------------------------------
# transfer systems

class TransferSystem:
    """A refinement of the inclusion order closed under conjugation,
    restriction and composition; pairs are (lower idx, upper idx) with the
    reflexive pairs left implicit."""

    def __init__(self, lattice, pairs):
        self.lattice = lattice
        self.pairs = frozenset(pairs)

    def relates(self, K, L):
        i = self.lattice.subgroup_index(K)
        j = self.lattice.subgroup_index(L)
        return i == j or (i, j) in self.pairs

    def sorted_pairs(self):
        return sorted(self.pairs)

    def __eq__(self, other):
        return isinstance(other, TransferSystem) and self.pairs == other.pairs

    def __hash__(self):
        return hash(self.pairs)

    def __len__(self):
        return len(self.pairs)

    def __repr__(self):
        return f"TransferSystem({len(self.pairs)} pairs)"


def enumerate_transfer_systems(lattice, max_subgroups=TRANSFER_SUBGROUP_CAP):
    """All transfer systems on the subgroup lattice, deterministically.

    Walks the closure lattice: start from the empty relation and saturate
    unions with single pairs; each closure is again a transfer system and
    every transfer system is reached this way.
    """
    n = len(lattice.subgroups)
    if n > max_subgroups:
        raise ResourceError(
            f"transfer-system enumeration capped at {max_subgroups} subgroups"
            f" (lattice has {n})"
        )
    pairs_all, conj_maps, meets, belows = _transfer_context(lattice)

    def close(pairs):
        rel = set(pairs)
        queue = list(pairs)
        while queue:
            i, j = queue.pop()
            new = []
            for cmap in conj_maps:
                new.append((cmap[i], cmap[j]))
            for m in belows[j]:
                p = (meets[(i, m)], m)
                if p[0] != p[1]:
                    new.append(p)
            for (a, b) in list(rel):
                if b == i:
                    new.append((a, j))
                if a == j:
                    new.append((i, b))
            for p in new:
                if p not in rel and p[0] != p[1]:
                    rel.add(p)
                    queue.append(p)
        return frozenset(rel)

    empty = close(frozenset())
    seen = {empty}
    queue = [empty]
    while queue:
        rel = queue.pop()
        for p in pairs_all:
            if p in rel:
                continue
            bigger = close(rel | {p})
            if bigger not in seen:
                seen.add(bigger)
                queue.append(bigger)
    systems = [TransferSystem(lattice, rel) for rel in seen]
    systems.sort(key=lambda t: (len(t.pairs), t.sorted_pairs()))
    return systems


def _transfer_context(lattice):
    key = "transfer-context"
    got = lattice.memo.get(key)
    if got is not None:
        return got
    G = lattice.group
    n = len(lattice.subgroups)
    pairs_all = [
        (i, j) for i in range(n) for j in lattice._leq[i] if i != j
    ]
    pairs_all.sort()
    conj_maps = []
    for g in G.gen_indices():
        cmap = tuple(
            lattice._byset[frozenset(G.conj(g, m) for m in s.members)]
            for s in lattice.subgroups
        )
        conj_maps.append(cmap)
    meets = {}
    for i in range(n):
        for j in range(n):
            meets[(i, j)] = lattice._byset[
                lattice.subgroups[i].members & lattice.subgroups[j].members
            ]
    belows = [
        [i for i in range(n) if j in lattice._leq[i]] for j in range(n)
    ]
    got = (pairs_all, conj_maps, meets, belows)
    lattice.memo[key] = got
    return got
