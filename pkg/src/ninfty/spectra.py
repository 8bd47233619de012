"""Spectrum expressions and their geometric-isotropy sets.

The expression language has four leaves -- suspension orbit spectra,
idempotent-localized rational spheres, the rational sphere, and the point
-- combined by wedge and smash.  Isotropy is computed by exact leaf rules
(orbits give subconjugates, idempotent spheres give one class, the
rational sphere gives everything) with union along wedges and
intersection along smashes.
"""

from __future__ import annotations

import re
from dataclasses import dataclass

from .errors import DomainError, ParseError
from .groups import Subgroup, lattice_of

__all__ = [
    "IsotropySet",
    "SpectrumExpr",
    "format_spectrum",
    "idem_sphere",
    "is_free",
    "isotropy",
    "orbit_spectrum",
    "parse_spectrum",
    "point",
    "rational_sphere",
    "smash",
    "wedge",
]


class SpectrumExpr:
    """Base class; concrete nodes below."""

    group = None


@dataclass(frozen=True)
class OrbitSpectrum(SpectrumExpr):
    subgroup: Subgroup

    @property
    def group(self):
        return self.subgroup.parent


@dataclass(frozen=True)
class IdempotentSphere(SpectrumExpr):
    """The rational sphere cut down by the idempotent of one class,
    recorded by a representative subgroup of that class."""

    subgroup: Subgroup

    @property
    def group(self):
        return self.subgroup.parent


@dataclass(frozen=True)
class RationalSphere(SpectrumExpr):
    group_: object

    @property
    def group(self):
        return self.group_


@dataclass(frozen=True)
class Point(SpectrumExpr):
    group_: object

    @property
    def group(self):
        return self.group_


@dataclass(frozen=True)
class Wedge(SpectrumExpr):
    left: SpectrumExpr
    right: SpectrumExpr

    @property
    def group(self):
        return self.left.group


@dataclass(frozen=True)
class Smash(SpectrumExpr):
    left: SpectrumExpr
    right: SpectrumExpr

    @property
    def group(self):
        return self.left.group


def orbit_spectrum(K):
    return OrbitSpectrum(K)


def idem_sphere(K):
    return IdempotentSphere(K)


def rational_sphere(G):
    return RationalSphere(G)


def point(G):
    return Point(G)


def wedge(a, b):
    _same_group(a, b)
    return Wedge(a, b)


def smash(a, b):
    _same_group(a, b)
    return Smash(a, b)


def _same_group(a, b):
    if a.group != b.group:
        raise DomainError("spectrum expressions must live over one group")


def leaves(X):
    if isinstance(X, (Wedge, Smash)):
        return leaves(X.left) + leaves(X.right)
    return [X]


# ---------------------------------------------------------------------------
# isotropy

class IsotropySet:
    """A conjugation-closed set of subgroup classes of one lattice."""

    def __init__(self, lattice, class_ids):
        self.lattice = lattice
        self.class_ids = frozenset(class_ids)

    def labels(self):
        names = self.lattice.class_labels()
        return [names[c] for c in sorted(self.class_ids)]

    def contains_class(self, c):
        return c in self.class_ids

    def contains(self, sub):
        return self.lattice.class_index(sub) in self.class_ids

    @property
    def is_free(self):
        return self.class_ids <= {self.lattice.trivial_class()}

    def __eq__(self, other):
        return (
            isinstance(other, IsotropySet)
            and self.lattice is other.lattice
            and self.class_ids == other.class_ids
        )

    def __hash__(self):
        return hash(self.class_ids)

    def __iter__(self):
        return iter(sorted(self.class_ids))

    def __len__(self):
        return len(self.class_ids)

    def __repr__(self):
        return f"IsotropySet({{{', '.join(self.labels())}}})"


def isotropy(X, lattice=None):
    """The geometric-isotropy set of a spectrum expression."""
    groups = {leaf.group for leaf in leaves(X)}
    if len(groups) != 1:
        raise DomainError("expression mixes distinct parent groups")
    (G,) = groups
    if lattice is None:
        lattice = lattice_of(G)
    return IsotropySet(lattice, _iso(X, lattice))


def _iso(X, lattice):
    if isinstance(X, OrbitSpectrum):
        return lattice.classes_below(X.subgroup)
    if isinstance(X, IdempotentSphere):
        return frozenset([lattice.class_index(X.subgroup)])
    if isinstance(X, RationalSphere):
        return frozenset(range(lattice.n_classes))
    if isinstance(X, Point):
        return frozenset()
    if isinstance(X, Wedge):
        return _iso(X.left, lattice) | _iso(X.right, lattice)
    if isinstance(X, Smash):
        return _iso(X.left, lattice) & _iso(X.right, lattice)
    raise DomainError(f"unknown spectrum node {type(X).__name__}")


def is_free(X, lattice=None):
    """Whether the expression's isotropy is contained in the trivial class."""
    return isotropy(X, lattice).is_free


# ---------------------------------------------------------------------------
# concrete syntax:  orbit:C6/C2   idem:(C2)   SQ   pt   v (wedge)   ^ (smash)

_TOKEN = re.compile(
    r"\s*(?:(?P<idem>idem:\([^()]+\))|(?P<orbit>orbit:[^\s()^]+)"
    r"|(?P<sq>SQ)|(?P<pt>pt)|(?P<wedge>v)|(?P<smash>\^)"
    r"|(?P<open>\()|(?P<close>\)))"
)


def _tokenize(text):
    out, pos = [], 0
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m:
            if text[pos:].strip() == "":
                break
            raise ParseError(
                f"unexpected input {text[pos:pos + 12]!r} in spectrum expression",
                position=pos,
            )
        kind = m.lastgroup
        out.append((kind, m.group(kind), m.start(kind)))
        pos = m.end()
    return out


class _Parser:
    def __init__(self, tokens, group, lattice):
        self.tokens = tokens
        self.i = 0
        self.group = group
        self.lattice = lattice

    def peek(self):
        return self.tokens[self.i] if self.i < len(self.tokens) else (None, None, None)

    def take(self):
        tok = self.peek()
        self.i += 1
        return tok

    def expr(self):
        node = self.term()
        while self.peek()[0] == "wedge":
            self.take()
            node = Wedge(node, self.term())
        return node

    def term(self):
        node = self.factor()
        while self.peek()[0] == "smash":
            self.take()
            node = Smash(node, self.factor())
        return node

    def factor(self):
        kind, text, pos = self.take()
        if kind == "open":
            node = self.expr()
            k2, _, p2 = self.take()
            if k2 != "close":
                raise ParseError("expected ')'", position=p2)
            return node
        if kind == "sq":
            return RationalSphere(self.group)
        if kind == "pt":
            return Point(self.group)
        if kind == "orbit":
            return self._orbit(text, pos)
        if kind == "idem":
            label = text[len("idem:("):-1].strip()
            return IdempotentSphere(self._resolve(label, pos))
        raise ParseError("expected a spectrum leaf or '('", position=pos)

    def _orbit(self, text, pos):
        body = text[len("orbit:"):]
        if "/" not in body:
            raise ParseError(
                f"orbit leaf must look like orbit:{self.group.label}/<subgroup>",
                position=pos,
            )
        gname, klabel = body.split("/", 1)
        if self.group.name and gname.upper() != self.group.name.upper():
            raise ParseError(
                f"orbit leaf names group {gname!r} but the command group is "
                f"{self.group.name!r}",
                position=pos,
            )
        return OrbitSpectrum(self._resolve(klabel, pos))

    def _resolve(self, label, pos):
        try:
            c = self.lattice.class_by_label(label)
        except DomainError as exc:
            raise ParseError(str(exc), position=pos) from None
        # reparent onto the caller's group object so leaf formatting uses
        # the caller's chosen name (equal groups share cached lattices)
        return Subgroup(self.group, self.lattice.class_reps[c].members, _trusted=True)


def parse_spectrum(text, group, lattice=None):
    """Parse the concrete expression syntax over a given group."""
    if lattice is None:
        lattice = lattice_of(group)
    tokens = _tokenize(text)
    if not tokens:
        raise ParseError("empty spectrum expression")
    p = _Parser(tokens, group, lattice)
    node = p.expr()
    if p.i != len(tokens):
        raise ParseError("trailing input after expression", position=p.peek()[2])
    return node


def format_spectrum(X, lattice=None):
    """Render an expression back into the concrete syntax."""
    if lattice is None:
        lattice = lattice_of(X.group)
    names = lattice.class_labels()

    def fmt(node, parent):
        if isinstance(node, RationalSphere):
            return "SQ"
        if isinstance(node, Point):
            return "pt"
        if isinstance(node, OrbitSpectrum):
            g = node.group.name or "G"
            return f"orbit:{g}/{names[lattice.class_index(node.subgroup)]}"
        if isinstance(node, IdempotentSphere):
            return f"idem:({names[lattice.class_index(node.subgroup)]})"
        if isinstance(node, Wedge):
            s = f"{fmt(node.left, 'v')} v {fmt(node.right, 'v')}"
            return f"({s})" if parent == "^" else s
        if isinstance(node, Smash):
            return f"{fmt(node.left, '^')} ^ {fmt(node.right, '^')}"
        raise DomainError(f"unknown spectrum node {type(node).__name__}")

    return fmt(X, None)
