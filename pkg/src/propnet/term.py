"""Free symmetric monoidal syntax over a signature, plus generic evaluation.

Terms are immutable trees.  ``Seq(f, g)`` is diagrammatic order: f happens
first, g second.  A model supplies the meaning of generators, identities,
symmetries and the two compositions; ``evaluate`` is then the unique strict
symmetric monoidal extension.
"""

from __future__ import annotations

from dataclasses import dataclass


class UnknownGenerator(KeyError):
    pass


class ArityMismatch(ValueError):
    pass


class TermParseError(ValueError):
    pass


class PropTerm:
    __slots__ = ()


@dataclass(frozen=True)
class Gen(PropTerm):
    name: str


@dataclass(frozen=True)
class Id(PropTerm):
    n: int


@dataclass(frozen=True)
class Sym(PropTerm):
    m: int
    n: int


@dataclass(frozen=True)
class Seq(PropTerm):
    first: PropTerm
    then: PropTerm


@dataclass(frozen=True)
class Par(PropTerm):
    top: PropTerm
    bottom: PropTerm


def seq(*terms: PropTerm) -> PropTerm:
    if not terms:
        raise ValueError("seq needs at least one term")
    out = terms[0]
    for t in terms[1:]:
        out = Seq(out, t)
    return out


def par(*terms: PropTerm) -> PropTerm:
    if not terms:
        return Id(0)
    out = terms[0]
    for t in terms[1:]:
        out = Par(out, t)
    return out


class Signature:
    """Generator name -> (dom, cod) arity table.

    ``resolver`` may supply arities for structured names (label/scalar
    sugar) not listed up front; it returns an arity pair or None.
    """

    def __init__(self, table, resolver=None):
        self.table = dict(table)
        self.resolver = resolver

    def arity_of(self, name):
        if name in self.table:
            return self.table[name]
        if self.resolver is not None:
            got = self.resolver(name)
            if got is not None:
                return got
        raise UnknownGenerator(name)

    def __contains__(self, name):
        try:
            self.arity_of(name)
            return True
        except UnknownGenerator:
            return False


def arity(t: PropTerm, sig: Signature):
    """(dom, cod) of a term, checking interfaces along the way."""
    if isinstance(t, Gen):
        return sig.arity_of(t.name)
    if isinstance(t, Id):
        return (t.n, t.n)
    if isinstance(t, Sym):
        return (t.m + t.n, t.n + t.m)
    if isinstance(t, Seq):
        d1, c1 = arity(t.first, sig)
        d2, c2 = arity(t.then, sig)
        if c1 != d2:
            raise ArityMismatch(
                f"cannot compose: codomain {c1} != domain {d2} at {t!r}")
        return (d1, c2)
    if isinstance(t, Par):
        d1, c1 = arity(t.top, sig)
        d2, c2 = arity(t.bottom, sig)
        return (d1 + d2, c1 + c2)
    raise TypeError(f"not a term: {t!r}")


class PropModel:
    """Contract for semantic models; subclasses fill in the operations.

    ``width`` is the number of carried wires per object unit (e.g. 2 when a
    port carries a potential/current pair).
    """

    signature: Signature
    width: int = 1

    def gen(self, name):
        raise NotImplementedError

    def identity(self, n):
        raise NotImplementedError

    def symmetry(self, m, n):
        raise NotImplementedError

    def seq(self, a, b):
        raise NotImplementedError

    def par(self, a, b):
        raise NotImplementedError

    def eq(self, a, b) -> bool:
        raise NotImplementedError


def evaluate(t: PropTerm, model: PropModel):
    arity(t, model.signature)
    return _eval(t, model)


def _eval(t, model):
    if isinstance(t, Gen):
        return model.gen(t.name)
    if isinstance(t, Id):
        return model.identity(t.n)
    if isinstance(t, Sym):
        return model.symmetry(t.m, t.n)
    if isinstance(t, Seq):
        return model.seq(_eval(t.first, model), _eval(t.then, model))
    if isinstance(t, Par):
        return model.par(_eval(t.top, model), _eval(t.bottom, model))
    raise TypeError(f"not a term: {t!r}")


def model_equal(model: PropModel, s: PropTerm, t: PropTerm) -> bool:
    return model.eq(evaluate(s, model), evaluate(t, model))


# ---------------------------------------------------------------------------
# S-expression grammar:
#   (gen NAME) (id N) (sym M N) (seq T1 T2 ...) (par T1 T2 ...)
#   (label KIND LIT?) and (scalar LIT) are generator sugar; they parse to
#   Gen nodes with structured names "label:kind:lit" / "scalar:lit".

def _tokenize(src: str):
    tokens = []
    i = 0
    while i < len(src):
        ch = src[i]
        if ch.isspace():
            i += 1
        elif ch in "()":
            tokens.append((ch, i))
            i += 1
        else:
            j = i
            while j < len(src) and not src[j].isspace() and src[j] not in "()":
                j += 1
            tokens.append((src[i:j], i))
            i = j
    return tokens


def parse_term(src: str) -> PropTerm:
    tokens = _tokenize(src)
    term, pos = _parse_sexpr(tokens, 0)
    if pos != len(tokens):
        raise TermParseError(f"trailing input at token {pos}")
    return term


def _expect(tokens, pos, what):
    if pos >= len(tokens):
        raise TermParseError(f"unexpected end of input, expected {what}")
    return tokens[pos]


def _parse_sexpr(tokens, pos):
    tok, at = _expect(tokens, pos, "'('")
    if tok != "(":
        raise TermParseError(f"expected '(' at position {at}")
    head, at = _expect(tokens, pos + 1, "form head")
    pos += 2
    if head == "gen":
        name, _ = _expect(tokens, pos, "generator name")
        pos += 1
        term = Gen(name)
    elif head == "label":
        parts = []
        while _expect(tokens, pos, "label literal or ')'")[0] != ")":
            parts.append(tokens[pos][0])
            pos += 1
        if not parts:
            raise TermParseError(f"empty label at position {at}")
        term = Gen("label:" + ":".join(parts))
    elif head == "scalar":
        lit, _ = _expect(tokens, pos, "scalar literal")
        pos += 1
        term = Gen(f"scalar:{lit}")
    elif head == "id":
        n, _ = _expect(tokens, pos, "object count")
        pos += 1
        term = Id(_parse_nat(n, at))
    elif head == "sym":
        m, _ = _expect(tokens, pos, "object count")
        n, _ = _expect(tokens, pos + 1, "object count")
        pos += 2
        term = Sym(_parse_nat(m, at), _parse_nat(n, at))
    elif head in ("seq", "par"):
        subterms = []
        while _expect(tokens, pos, "term or ')'")[0] != ")":
            sub, pos = _parse_sexpr(tokens, pos)
            subterms.append(sub)
        if not subterms:
            raise TermParseError(f"empty ({head} ...) at position {at}")
        term = seq(*subterms) if head == "seq" else par(*subterms)
    else:
        raise TermParseError(f"unknown form {head!r} at position {at}")
    tok, at = _expect(tokens, pos, "')'")
    if tok != ")":
        raise TermParseError(f"expected ')' at position {at}")
    return term, pos + 1


def _parse_nat(tok, at) -> int:
    if not tok.isdigit():
        raise TermParseError(f"expected a natural number near position {at}")
    return int(tok)


def format_term(t: PropTerm) -> str:
    if isinstance(t, Gen):
        if t.name.startswith("label:"):
            return "(label " + " ".join(t.name.split(":")[1:]) + ")"
        if t.name.startswith("scalar:"):
            return f"(scalar {t.name.split(':', 1)[1]})"
        return f"(gen {t.name})"
    if isinstance(t, Id):
        return f"(id {t.n})"
    if isinstance(t, Sym):
        return f"(sym {t.m} {t.n})"
    if isinstance(t, Seq):
        return f"(seq {format_term(t.first)} {format_term(t.then)})"
    if isinstance(t, Par):
        return f"(par {format_term(t.top)} {format_term(t.bottom)})"
    raise TypeError(f"not a term: {t!r}")
