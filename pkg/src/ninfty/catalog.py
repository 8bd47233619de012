"""Group catalog, cycle-notation parsing, and subgroup-class naming.

Catalog names: Cn (cyclic), Dn (dihedral of order 2n, n >= 3), Sn and An
for n <= 5, and Q8.  Generator choices are fixed so that identical names
always produce identical element lists.
"""

from __future__ import annotations

import math
import re

from .errors import ParseError, ResourceError
from .groups import ORDER_CAP, FiniteGroup, divisors, pidentity, pmul

_NAME_RE = re.compile(r"^([A-Za-z]+)(\d+)$")


def catalog_group(name, order_cap=ORDER_CAP):
    """A catalog group by name; raises ParseError for unknown names."""
    m = _NAME_RE.match(name.strip())
    if not m:
        raise ParseError(f"unknown group name {name!r}")
    kind, n = m.group(1).upper(), int(m.group(2))
    label = f"{kind}{n}"
    if kind == "C":
        if n < 1:
            raise ParseError("Cn requires n >= 1")
        if n > order_cap:
            raise ResourceError(f"C{n} exceeds the order cap {order_cap}")
        return _cyclic(n, label)
    if kind == "D":
        if n < 3:
            raise ParseError("Dn catalog starts at D3 (order 6); use Cn below that")
        if 2 * n > order_cap:
            raise ResourceError(f"D{n} exceeds the order cap {order_cap}")
        rot = tuple((i + 1) % n for i in range(n))
        ref = tuple((n - i) % n for i in range(n))
        return FiniteGroup(n, [rot, ref], name=label, order_cap=order_cap)
    if kind == "S":
        if not 1 <= n <= 5:
            raise ParseError("Sn catalog covers n <= 5")
        if n == 1:
            return FiniteGroup(1, [], name=label)
        cyc = tuple((i + 1) % n for i in range(n))
        swap = _transposition(n, 0, 1)
        return FiniteGroup(n, [swap, cyc], name=label, order_cap=order_cap)
    if kind == "A":
        if not 1 <= n <= 5:
            raise ParseError("An catalog covers n <= 5")
        if n <= 2:
            return FiniteGroup(max(n, 1), [], name=label)
        three = _cycle_perm(n, (0, 1, 2))
        if n == 3:
            gens = [three]
        elif n % 2 == 1:
            gens = [three, tuple((i + 1) % n for i in range(n))]
        else:
            gens = [three, _cycle_perm(n, tuple(range(1, n)))]
        return FiniteGroup(n, gens, name=label, order_cap=order_cap)
    if kind == "Q" and n == 8:
        # points are 1, i, j, k, -1, -i, -j, -k; generators act by left
        # multiplication by i and j
        gi = _perm_from_cycles(8, [(0, 1, 4, 5), (2, 3, 6, 7)])
        gj = _perm_from_cycles(8, [(0, 2, 4, 6), (1, 7, 5, 3)])
        return FiniteGroup(8, [gi, gj], name="Q8", order_cap=order_cap)
    raise ParseError(f"unknown group name {name!r}")


def _cyclic(n, label):
    if n == 1:
        return FiniteGroup(1, [], name=label)
    return FiniteGroup(n, [tuple((i + 1) % n for i in range(n))], name=label)


def _transposition(degree, a, b):
    p = list(range(degree))
    p[a], p[b] = p[b], p[a]
    return tuple(p)


def _cycle_perm(degree, cycle):
    p = list(range(degree))
    for pos, x in enumerate(cycle):
        p[x] = cycle[(pos + 1) % len(cycle)]
    return tuple(p)


def _perm_from_cycles(degree, cycles):
    p = list(range(degree))
    for cyc in cycles:
        for pos, x in enumerate(cyc):
            p[x] = cyc[(pos + 1) % len(cyc)]
    return tuple(p)


# ---------------------------------------------------------------------------
# cycle-notation input

def parse_cycles(text):
    """Parse one permutation written as a product of cycles, e.g. "(0 1)(2 3)".

    Cycles are applied left to right.  Returns (perm tuple, degree).
    """
    cycles = []
    i, n = 0, len(text)
    maxpt = -1
    while i < n:
        ch = text[i]
        if ch.isspace():
            i += 1
            continue
        if ch != "(":
            raise ParseError(f"expected '(' in cycle notation, got {ch!r}", position=i)
        j = text.find(")", i)
        if j < 0:
            raise ParseError("unclosed cycle", position=i)
        body = text[i + 1 : j].replace(",", " ").split()
        try:
            pts = [int(tok) for tok in body]
        except ValueError:
            raise ParseError(f"non-integer point in cycle {text[i:j+1]!r}", position=i)
        if any(p < 0 for p in pts):
            raise ParseError("cycle points must be nonnegative", position=i)
        if len(set(pts)) != len(pts):
            raise ParseError(f"repeated point in cycle {text[i:j+1]!r}", position=i)
        if pts:
            cycles.append(tuple(pts))
            maxpt = max(maxpt, max(pts))
        i = j + 1
    degree = maxpt + 1 if maxpt >= 0 else 1
    perm = pidentity(degree)
    for cyc in cycles:
        perm = pmul(_cycle_perm(degree, cyc), perm)
    return perm, degree


def _split_generators(text):
    """Split a generator list on commas that sit outside parentheses."""
    parts, depth, start = [], 0, 0
    for i, ch in enumerate(text):
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth -= 1
            if depth < 0:
                raise ParseError("unbalanced ')'", position=i)
        elif ch == "," and depth == 0:
            parts.append(text[start:i])
            start = i + 1
    if depth != 0:
        raise ParseError("unbalanced '('")
    parts.append(text[start:])
    return [p for p in parts if p.strip()]


def parse_group(spec, order_cap=ORDER_CAP):
    """A group from a catalog name or an explicit cycle-notation generator list."""
    spec = spec.strip()
    if not spec:
        raise ParseError("empty group specification")
    if "(" not in spec:
        return catalog_group(spec, order_cap=order_cap)
    parts = _split_generators(spec)
    parsed = [parse_cycles(p) for p in parts]
    degree = max(d for _, d in parsed)
    gens = []
    for perm, d in parsed:
        gens.append(tuple(perm) + tuple(range(d, degree)))
    return FiniteGroup(degree, gens, name=None, order_cap=order_cap)


# ---------------------------------------------------------------------------
# structural names for subgroup classes

def structure_name(sub):
    """A human name for the isomorphism type of a subgroup (best effort).

    Recognizes cyclic and abelian groups exactly (via element-order
    counts), dihedral groups, Q8, and the handful of nonabelian types that
    occur inside the catalog; anything else falls back to `X<order>`.
    """
    G = sub.parent
    n = sub.order
    if n == 1:
        return "1"
    orders = sorted(G.element_order(m) for m in sub.members)
    if orders[-1] == n:
        return f"C{n}"
    members = sub.key
    abelian = all(
        G.mul(a, b) == G.mul(b, a) for a in members for b in members
    )
    if abelian:
        facs = _abelian_invariants(n, orders)
        if facs:
            return "x".join(f"C{d}" for d in facs)
        return f"X{n}"
    involutions = orders.count(2)
    if n == 8 and involutions == 1:
        return "Q8"
    if n % 2 == 0 and _is_dihedral(G, sub, n):
        return "S3" if n == 6 else f"D{n // 2}"
    if n == 12 and involutions == 3:
        return "A4"
    if n == 20 and involutions == 5:
        return "F20"
    if n in (24, 60, 120) and _center_order(G, sub) == 1:
        return {24: "S4", 60: "A5", 120: "S5"}[n]
    return f"X{n}"


def _abelian_invariants(n, orders):
    """Invariant factors of an abelian group from its element-order multiset."""
    counts = {d: sum(1 for o in orders if d % o == 0) for d in divisors(n)}
    for chain in _divisor_chains(n, n):
        ok = all(
            counts[d] == _count_order_dividing(chain, d) for d in divisors(n)
        )
        if ok:
            return chain
    return None


def _divisor_chains(m, dmax):
    """Ascending divisor chains d1 | d2 | ... with product m, all di <= dmax."""
    if m == 1:
        yield ()
        return
    for d in divisors(m):
        if d > 1 and dmax % d == 0:
            for rest in _divisor_chains(m // d, d):
                yield rest + (d,)


def _count_order_dividing(chain, d):
    """Elements of order dividing d in a product of cyclic groups."""
    out = 1
    for f in chain:
        out *= math.gcd(f, d)
    return out


def _is_dihedral(G, sub, n):
    half = n // 2
    if half < 3:
        return False
    rots = [m for m in sub.key if G.element_order(m) == half]
    if not rots:
        return False
    r = rots[0]
    rgroup = set()
    x = G.identity
    for _ in range(half):
        rgroup.add(x)
        x = G.mul(r, x)
    for s in sub.key:
        if G.element_order(s) == 2 and s not in rgroup:
            if G.conj(s, r) == G.inv(r):
                return True
    return False


def _center_order(G, sub):
    return sum(
        1
        for a in sub.members
        if all(G.mul(a, b) == G.mul(b, a) for b in sub.members)
    )


def class_labels(lattice):
    """Deterministic unique labels for the subgroup classes of a lattice.

    Labels are purely structural (never the catalog name), so groups with
    equal element lists -- D3 and S3, say -- agree on their labels.
    """
    base = [structure_name(rep) for rep in lattice.class_reps]
    counts = {}
    for b in base:
        counts[b] = counts.get(b, 0) + 1
    seen = {}
    out = []
    for b in base:
        if counts[b] == 1:
            out.append(b)
        else:
            k = seen.get(b, 0)
            seen[b] = k + 1
            out.append(b + "abcdefghijklmnopqrstuvwxyz"[k])
    return out
