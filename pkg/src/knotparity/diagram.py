"""Knot diagram codes and their traversal.

A diagram is a cyclic sequence of tokens read along the oriented knot:

* ``O<id><sign>`` / ``U<id><sign>`` -- the over/under passage of a classical
  crossing; each crossing id appears exactly twice, once per strand, with the
  same sign on both passages.
* ``x<m><sign>`` -- crossing side m of the fundamental polygon of a genus-g
  surface (m in 1..2g); ``+`` is the selected copy of the side (label
  exponent +1), ``-`` the non-selected copy (-1).  Genus-0 diagrams are
  ordinary Gauss codes and carry no side tokens.
* ``v<id>`` -- a degree-2 vertex from arc subdivision.  Not part of the file
  grammar for census data but accepted everywhere so that diagrams produced
  by the subdivision move can be printed and re-read.

The basepoint is always token position 0 of the parsed text.  Crossing ids
from input are renumbered 1..n in order of first appearance; renumbering is
harmless because every downstream quantity is either id-independent or
covariant with it.
"""

from __future__ import annotations

import re
from dataclasses import dataclass


class DiagramError(ValueError):
    pass


class MalformedToken(DiagramError):
    pass


class CrossingSeenOnce(DiagramError):
    pass


class CrossingSeenTwiceSameStrand(DiagramError):
    pass


class SignMismatch(DiagramError):
    pass


class SideIndexOutOfRange(DiagramError):
    pass


@dataclass(frozen=True)
class Passage:
    crossing: int
    over: bool
    sign: int

    def text(self):
        return f"{'O' if self.over else 'U'}{self.crossing}{'+' if self.sign > 0 else '-'}"


@dataclass(frozen=True)
class SideToken:
    side: int
    sign: int

    def text(self):
        return f"x{self.side}{'+' if self.sign > 0 else '-'}"


@dataclass(frozen=True)
class Vertex:
    vid: int

    def text(self):
        return f"v{self.vid}"


_TOKEN_RE = re.compile(r"^(?:([OUx])(\d+)([+-])|v(\d+))$")


@dataclass(frozen=True)
class Diagram:
    """Validated diagram code; genus 0 is the Gauss-code case."""

    name: str
    genus: int
    tokens: tuple

    def __post_init__(self):
        seen = {}
        for tok in self.tokens:
            if isinstance(tok, SideToken):
                if not (1 <= tok.side <= 2 * self.genus):
                    raise SideIndexOutOfRange(
                        f"{self.name}: side {tok.side} > 2g = {2 * self.genus}"
                    )
            elif isinstance(tok, Passage):
                rec = seen.setdefault(tok.crossing, [])
                rec.append(tok)
        for cid, passages in seen.items():
            if len(passages) == 1:
                raise CrossingSeenOnce(f"{self.name}: crossing {cid} appears once")
            if len(passages) > 2 or passages[0].over == passages[1].over:
                raise CrossingSeenTwiceSameStrand(
                    f"{self.name}: crossing {cid} repeats a strand"
                )
            if passages[0].sign != passages[1].sign:
                raise SignMismatch(f"{self.name}: crossing {cid} signs disagree")

    @property
    def crossings(self):
        out = []
        for tok in self.tokens:
            if isinstance(tok, Passage) and tok.crossing not in out:
                out.append(tok.crossing)
        return out

    @property
    def vertex_ids(self):
        return [tok.vid for tok in self.tokens if isinstance(tok, Vertex)]

    def sign_of(self, crossing):
        for tok in self.tokens:
            if isinstance(tok, Passage) and tok.crossing == crossing:
                return tok.sign
        raise KeyError(crossing)

    def rotated(self, k):
        """Basepoint moved k tokens forward."""
        n = len(self.tokens)
        if n == 0:
            return self
        k %= n
        return Diagram(self.name, self.genus, self.tokens[k:] + self.tokens[:k])

    def renumbered(self, mapping):
        """Relabel crossing ids through the given dict."""
        toks = tuple(
            Passage(mapping[t.crossing], t.over, t.sign) if isinstance(t, Passage) else t
            for t in self.tokens
        )
        return Diagram(self.name, self.genus, toks)

    def homology_class(self):
        """Total signed side crossings, one entry per side 1..2g."""
        vec = [0] * (2 * self.genus)
        for tok in self.tokens:
            if isinstance(tok, SideToken):
                vec[tok.side - 1] += tok.sign
        return tuple(vec)

    def serialize(self):
        body = " ".join(tok.text() for tok in self.tokens)
        head = f"genus {self.genus}; " if self.genus else ""
        return f"{head}{self.name}: {body}".rstrip()

    def __str__(self):
        return self.serialize()


def _parse_tokens(name, genus, body):
    tokens = []
    for word in body.split():
        m = _TOKEN_RE.match(word)
        if not m:
            raise MalformedToken(f"{name}: bad token {word!r}")
        if m.group(4) is not None:
            tokens.append(Vertex(int(m.group(4))))
            continue
        kind, num, sign = m.group(1), int(m.group(2)), 1 if m.group(3) == "+" else -1
        if kind == "x":
            tokens.append(SideToken(num, sign))
        else:
            tokens.append(Passage(num, kind == "O", sign))
    # renumber crossings by first appearance
    order = {}
    for tok in tokens:
        if isinstance(tok, Passage) and tok.crossing not in order:
            order[tok.crossing] = len(order) + 1
    tokens = [
        Passage(order[t.crossing], t.over, t.sign) if isinstance(t, Passage) else t
        for t in tokens
    ]
    return Diagram(name, genus, tuple(tokens))


def parse_gauss(text):
    """Parse ``name: O1+ U2- ...`` into a genus-0 diagram."""
    line = text.strip()
    if ":" not in line:
        raise MalformedToken(f"missing 'name:' in {line!r}")
    name, body = line.split(":", 1)
    return _parse_tokens(name.strip(), 0, body)


def parse_surface(text):
    """Parse ``genus g; name: ...`` into a surface diagram."""
    line = text.strip()
    m = re.match(r"^genus\s+(\d+)\s*;\s*(.*)$", line)
    if not m:
        raise MalformedToken(f"missing 'genus g;' header in {line!r}")
    genus = int(m.group(1))
    rest = m.group(2)
    if ":" not in rest:
        raise MalformedToken(f"missing 'name:' in {line!r}")
    name, body = rest.split(":", 1)
    return _parse_tokens(name.strip(), genus, body)


def parse_line(text):
    """Parse either format (surface when the genus header is present)."""
    if text.lstrip().startswith("genus"):
        return parse_surface(text)
    return parse_gauss(text)


def parse_file(path, lenient=False):
    """Parse a census file, one diagram per non-comment line.

    With ``lenient`` malformed lines are collected instead of raised.
    Returns (diagrams, errors) where errors is a list of (lineno, message).
    """
    diagrams, errors = [], []
    with open(path) as fh:
        for lineno, raw in enumerate(fh, start=1):
            line = raw.split("#", 1)[0].strip()
            if not line:
                continue
            try:
                diagrams.append(parse_line(line))
            except DiagramError as exc:
                if not lenient:
                    raise
                errors.append((lineno, str(exc)))
    return diagrams, errors


# ---------------------------------------------------------------------------
# Arc extraction


@dataclass(frozen=True)
class Incidence:
    site: int            # crossing id, or vertex id for subdivision vertices
    site_kind: str       # "crossing" | "vertex"
    role: str            # "out" | "in" | "over"
    label: tuple         # accumulated side exponents (alpha_1 .. alpha_2g)


@dataclass(frozen=True)
class Arc:
    origin: int
    origin_kind: str
    incidences: tuple


@dataclass(frozen=True)
class ArcTable:
    arcs: tuple

    def by_origin(self):
        return {(a.origin_kind, a.origin): a for a in self.arcs}

    def __len__(self):
        return len(self.arcs)


def _delimiters(d):
    """Token positions at which arcs end/start: under-passages and vertices."""
    out = []
    for i, tok in enumerate(d.tokens):
        if isinstance(tok, Vertex) or (isinstance(tok, Passage) and not tok.over):
            out.append(i)
    return out


def arcs(d):
    """Arcs of a diagram with accumulated side labels at every incidence.

    An arc starts just after an under-passage (or subdivision vertex) and
    ends at the next one; its label vector is zero at the origin and moves by
    +-1 in coordinate m at each side token.  The table is empty for a
    diagram with no delimiters.
    """
    stops = _delimiters(d)
    if not stops:
        return ArcTable(())
    n = len(d.tokens)
    table = []
    for start in stops:
        tok0 = d.tokens[start]
        if isinstance(tok0, Vertex):
            origin, okind = tok0.vid, "vertex"
        else:
            origin, okind = tok0.crossing, "crossing"
        label = [0] * (2 * d.genus)
        incs = [Incidence(origin, okind, "out", tuple(label))]
        i = (start + 1) % n
        while True:
            tok = d.tokens[i]
            if isinstance(tok, SideToken):
                label[tok.side - 1] += tok.sign
            elif isinstance(tok, Vertex):
                incs.append(Incidence(tok.vid, "vertex", "in", tuple(label)))
                break
            elif tok.over:
                incs.append(Incidence(tok.crossing, "crossing", "over", tuple(label)))
            else:
                incs.append(Incidence(tok.crossing, "crossing", "in", tuple(label)))
                break
            i = (i + 1) % n
        table.append(Arc(origin, okind, tuple(incs)))
    return ArcTable(tuple(table))


# ---------------------------------------------------------------------------
# Short arcs (for the virtual-knot matrix)


@dataclass(frozen=True)
class ShortIncidence:
    crossing: int
    role: str            # "out" | "in" | "over"
    s_exp: int


@dataclass(frozen=True)
class ShortArc:
    origin: int          # type-1/2 crossing whose under-passage starts the arc
    incidences: tuple


@dataclass(frozen=True)
class ShortArcTable:
    arcs: tuple

    def __len__(self):
        return len(self.arcs)


def short_arcs(d, types):
    """Short arcs of a Gauss diagram under a type assignment.

    Arcs are delimited only by under-passages at crossings of types 1 and 2.
    Passing a type-0 crossing of sign e multiplies the running label by s^e
    on the under strand and s^-e on the over strand; over-passages at
    type-1/2 crossings are recorded as incidences with the accumulated
    exponent.  All crossings type 0 gives the empty table.
    """
    for cid in d.crossings:
        if cid not in types:
            raise KeyError(f"type missing for crossing {cid}")
    stops = [
        i
        for i, tok in enumerate(d.tokens)
        if isinstance(tok, Passage) and not tok.over and types[tok.crossing] != 0
    ]
    if not stops:
        return ShortArcTable(())
    n = len(d.tokens)
    table = []
    for start in stops:
        origin = d.tokens[start].crossing
        exp = 0
        incs = [ShortIncidence(origin, "out", 0)]
        i = (start + 1) % n
        while True:
            tok = d.tokens[i]
            if isinstance(tok, Passage):
                ty = types[tok.crossing]
                if ty == 0:
                    exp += tok.sign if not tok.over else -tok.sign
                elif tok.over:
                    incs.append(ShortIncidence(tok.crossing, "over", exp))
                else:
                    incs.append(ShortIncidence(tok.crossing, "in", exp))
                    break
            i = (i + 1) % n
        table.append(ShortArc(origin, tuple(incs)))
    return ShortArcTable(tuple(table))
