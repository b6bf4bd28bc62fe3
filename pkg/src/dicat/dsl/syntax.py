"""Tokens, syntax tree, parser and printer for ``.dicat`` documents.

Declarations start with a keyword and bodies sit in braces; newlines are
plain whitespace and ``#`` starts a comment.  ASCII spellings are canonical;
``⊗ ⊙ ∘ → ⇒ ⇸`` are accepted for ``(x) ; . -> => -|->``.
"""
from __future__ import annotations

from dataclasses import dataclass, field, replace
from typing import Union

from ..core import DicatError

MAX_DEPTH = 64


@dataclass(frozen=True)
class Span:
    """Byte offsets into the UTF-8 input plus a 1-based line and column."""

    start: int
    end: int
    line: int
    col: int

    def __str__(self):
        return f"{self.line}:{self.col}"


class DslError(DicatError):
    def __init__(self, message: str, span: Span):
        self.message = message
        self.span = span
        super().__init__(f"{span}: {message}")

    def to_json(self) -> dict:
        return {"message": self.message, "line": self.span.line, "col": self.span.col,
                "start": self.span.start, "end": self.span.end}


class ParseError(DslError):
    def __init__(self, message: str, span: Span, expected=()):
        self.expected = frozenset(expected)
        if self.expected:
            message = f"{message}; expected {', '.join(sorted(self.expected))}"
        super().__init__(message, span)

    def to_json(self) -> dict:
        return {**super().to_json(), "expected": sorted(self.expected)}


# ---------------------------------------------------------------------------
# lexer

SYMBOLS = [
    ("-|->", "-|->"), ("(x)", "(x)"), ("->", "->"), ("=>", "=>"),
    ("⇸", "-|->"), ("⊗", "(x)"), ("→", "->"), ("⇒", "=>"), ("⊙", ";"), ("∘", "."),
    ("{", "{"), ("}", "}"), ("(", "("), (")", ")"), (",", ","), (":", ":"), (";", ";"),
    (".", "."), ("*", "*"), ("=", "="),
]


@dataclass(frozen=True)
class Token:
    kind: str  # "ident", "number", "eof" or a symbol
    text: str
    span: Span


def _ident_start(ch: str) -> bool:
    return ch == "_" or (ch.isalpha() and ch.isprintable())


def _ident_char(ch: str) -> bool:
    return ch in "_'" or (ch.isalnum() and ch.isprintable())


def tokenize(text: str) -> list[Token]:
    out: list[Token] = []
    offsets = [0]
    for ch in text:
        offsets.append(offsets[-1] + len(ch.encode("utf-8", "surrogatepass")))
    i, line, col = 0, 1, 1
    n = len(text)

    def span(a: int, b: int, ln: int, cl: int) -> Span:
        return Span(offsets[a], offsets[b], ln, cl)

    while i < n:
        ch = text[i]
        if ch == "\n":
            i, line, col = i + 1, line + 1, 1
            continue
        if ch in " \t\r\f\v" or ch == "\ufeff":
            i, col = i + 1, col + 1
            continue
        if ch == "#":
            while i < n and text[i] != "\n":
                i += 1
            continue
        start, start_col = i, col
        if "0" <= ch <= "9":
            while i < n and "0" <= text[i] <= "9":
                i += 1
            out.append(Token("number", text[start:i], span(start, i, line, start_col)))
        elif _ident_start(ch):
            while i < n and _ident_char(text[i]):
                i += 1
            out.append(Token("ident", text[start:i], span(start, i, line, start_col)))
        else:
            for sym, kind in SYMBOLS:
                if text.startswith(sym, i):
                    i += len(sym)
                    out.append(Token(kind, sym, span(start, i, line, start_col)))
                    break
            else:
                raise ParseError(f"unexpected character {ch!r}", span(i, i + 1, line, col))
        col += i - start
    out.append(Token("eof", "", span(n, n, line, col)))
    return out


# ---------------------------------------------------------------------------
# syntax tree; spans never take part in equality

Label = Union[str, int]


def _span():
    return field(default=None, compare=False, repr=False)


@dataclass(frozen=True)
class Name:
    text: str
    span: Span | None = _span()


@dataclass(frozen=True)
class Num:
    value: int
    span: Span | None = _span()


@dataclass(frozen=True)
class Call:
    head: str
    args: tuple
    span: Span | None = _span()


@dataclass(frozen=True)
class Tup:
    items: tuple
    span: Span | None = _span()


@dataclass(frozen=True)
class Seq:
    """Diagrammatic composite ``a ; b ; c``."""

    parts: tuple
    span: Span | None = _span()


Term = Union[Name, Num, Call, Tup, Seq]


@dataclass(frozen=True)
class InstanceDecl:
    kind: str
    span: Span | None = _span()


@dataclass(frozen=True)
class SetDecl:
    name: str
    elements: tuple
    span: Span | None = _span()


@dataclass(frozen=True)
class RelDecl:
    name: str
    src: tuple  # tensor factors; the name I is the unit
    tgt: tuple
    pairs: tuple
    span: Span | None = _span()


@dataclass(frozen=True)
class FunctionDecl:
    name: str
    src: tuple
    tgt: tuple
    mapping: tuple
    span: Span | None = _span()


@dataclass(frozen=True)
class CategoryDecl:
    name: str
    objects: tuple
    arrows: tuple  # (name, src, tgt)
    compose: tuple  # (f, g, h) meaning f ; g = h
    span: Span | None = _span()


@dataclass(frozen=True)
class ProfunctorDecl:
    name: str
    src: str
    tgt: str
    elements: tuple = ()  # (x, a, b)
    left: tuple = ()  # (f, x, y) meaning f . x = y
    right: tuple = ()  # (x, g, y) meaning x . g = y
    hom_of: str | None = None
    span: Span | None = _span()


@dataclass(frozen=True)
class FunctorDecl:
    name: str
    src: str
    tgt: str
    mapping: tuple  # (key, value); value is a label or Call("id", (label,))
    span: Span | None = _span()


@dataclass(frozen=True)
class ObjectDecl:
    names: tuple
    span: Span | None = _span()


@dataclass(frozen=True)
class ArrowDecl:
    name: str
    src: str
    tgt: str
    span: Span | None = _span()


@dataclass(frozen=True)
class ProarrowDecl:
    name: str
    src: str
    tgt: str
    span: Span | None = _span()


@dataclass(frozen=True)
class PathTerm:
    """A generator word, or the empty word at ``at``."""

    gens: tuple
    at: str | None = None
    span: Span | None = _span()


@dataclass(frozen=True)
class SquareDecl:
    name: str
    left: PathTerm
    right: PathTerm
    top: PathTerm
    bottom: PathTerm
    span: Span | None = _span()


@dataclass(frozen=True)
class NaturalDecl:
    name: str
    expr: Term | None = None
    source: Term | None = None
    target: Term | None = None
    table: tuple = ()  # (key term, relation name)
    span: Span | None = _span()


@dataclass(frozen=True)
class DinaturalDecl:
    name: str
    orientation: str | None = None
    expr: Term | None = None
    source: Term | None = None
    target: Term | None = None
    table: tuple = ()
    span: Span | None = _span()


@dataclass(frozen=True)
class ModificationDecl:
    name: str
    expr: Term
    span: Span | None = _span()


@dataclass(frozen=True)
class DimodificationDecl:
    name: str
    expr: Term
    span: Span | None = _span()


@dataclass(frozen=True)
class ConnectorDecl:
    name: str
    letters: tuple
    args: tuple
    letter_spans: tuple = field(default=(), compare=False, repr=False)
    span: Span | None = _span()


Declaration = Union[InstanceDecl, SetDecl, RelDecl, FunctionDecl, CategoryDecl, ProfunctorDecl, FunctorDecl,
                    ObjectDecl, ArrowDecl, ProarrowDecl, SquareDecl, NaturalDecl, DinaturalDecl,
                    ModificationDecl, DimodificationDecl, ConnectorDecl]


@dataclass(frozen=True)
class Document:
    declarations: tuple

    def named(self) -> list:
        return [d for d in self.declarations if hasattr(d, "name")]


INSTANCES = ("rel", "fincat", "free")
ORIENTATIONS = ("pseudo", "oplax", "lax", "strict")
KEYWORDS = ("instance", "set", "rel", "function", "category", "profunctor", "functor", "object", "arrow",
            "proarrow", "square", "natural", "dinatural", "modification", "dimodification", "connector")


# ---------------------------------------------------------------------------
# parser


class Parser:
    def __init__(self, text: str):
        self.tokens = tokenize(text)
        self.pos = 0
        self.depth = 0

    @property
    def tok(self) -> Token:
        return self.tokens[self.pos]

    def error(self, expected) -> ParseError:
        t = self.tok
        found = "end of input" if t.kind == "eof" else repr(t.text)
        return ParseError(f"unexpected {found}", t.span, expected)

    def at(self, kind: str, text: str | None = None) -> bool:
        t = self.tok
        return t.kind == kind and (text is None or t.text == text)

    def expect(self, kind: str, text: str | None = None) -> Token:
        if not self.at(kind, text):
            raise self.error([text or kind] if kind != "ident" or text else ["identifier"])
        t = self.tok
        self.pos += 1
        return t

    def accept(self, kind: str, text: str | None = None) -> Token | None:
        if self.at(kind, text):
            return self.expect(kind, text)
        return None

    def ident(self) -> str:
        if not self.at("ident"):
            raise self.error(["identifier"])
        return self.expect("ident").text

    def number(self) -> int:
        t = self.expect("number")
        if len(t.text) > 18:
            raise ParseError("number too large", t.span)
        return int(t.text)

    def label(self) -> Label:
        if self.at("number"):
            return self.number()
        if self.at("ident"):
            return self.expect("ident").text
        raise self.error(["identifier", "number"])

    def keyword(self, choices) -> str:
        if self.at("ident") and self.tok.text in choices:
            return self.expect("ident").text
        raise self.error(choices)

    def span_from(self, first: Token) -> Span:
        last = self.tokens[self.pos - 1] if self.pos else first
        return Span(first.span.start, max(last.span.end, first.span.start), first.span.line, first.span.col)

    # -- document
    def document(self) -> Document:
        decls = []
        while not self.at("eof"):
            decls.append(self.declaration())
        return Document(tuple(decls))

    def declaration(self):
        first = self.tok
        kw = self.keyword(KEYWORDS)
        decl = getattr(self, "p_" + kw)()
        return replace(decl, span=self.span_from(first))

    def p_instance(self):
        return InstanceDecl(self.keyword(INSTANCES))

    def element(self) -> Label | tuple:
        """A label, or a tuple of labels for elements of tensor products; ``()`` is the unit element."""
        if self.at("(x)"):
            self.expect("(x)")
            return "x"
        if not self.at("("):
            if not (self.at("ident") or self.at("number")):
                raise self.error(["identifier", "number", "("])
            return self.label()
        self.expect("(")
        items = []
        if not self.accept(")"):
            items.append(self.label())
            while self.accept(","):
                items.append(self.label())
            self.expect(")")
        return items[0] if len(items) == 1 else tuple(items)

    def set_term(self) -> tuple:
        factors = [self.ident()]
        while self.accept("(x)"):
            factors.append(self.ident())
        return tuple(factors)

    def p_set(self):
        name = self.ident()
        self.expect("{")
        elems = []
        while not self.accept("}"):
            if not (self.at("ident") or self.at("number") or self.at("(") or self.at("(x)")):
                raise self.error(["identifier", "number", "(", "}"])
            elems.append(self.element())
        return SetDecl(name, tuple(elems))

    def _typed(self, arrow: str = "->"):
        self.expect(":")
        src = self.ident()
        self.expect(arrow)
        return src, self.ident()

    def _set_typed(self):
        self.expect(":")
        src = self.set_term()
        self.expect("->")
        return src, self.set_term()

    def p_rel(self):
        name = self.ident()
        src, tgt = self._set_typed()
        self.expect("{")
        pairs = []
        while not self.accept("}"):
            if not self.at("("):
                raise self.error(["(", "}"])
            self.expect("(")
            a = self.element()
            self.expect(",")
            b = self.element()
            self.expect(")")
            pairs.append((a, b))
        return RelDecl(name, src, tgt, tuple(pairs))

    def p_function(self):
        name = self.ident()
        src, tgt = self._set_typed()
        self.expect("{")
        mapping = []
        while not self.accept("}"):
            if not (self.at("ident") or self.at("number") or self.at("(") or self.at("(x)")):
                raise self.error(["identifier", "number", "(", "}"])
            a = self.element()
            self.expect("->")
            mapping.append((a, self.element()))
        return FunctionDecl(name, src, tgt, tuple(mapping))

    def _labels(self) -> list:
        out = [self.label()]
        while self.accept(","):
            out.append(self.label())
        return out

    def p_category(self):
        name = self.ident()
        self.expect("{")
        objects, arrows, compose = [], [], []
        while not self.accept("}"):
            if not self.at("ident"):
                raise self.error(["objects", "arrow", "compose", "}"])
            kw = self.keyword(("objects", "arrow", "compose"))
            if kw == "objects":
                objects.extend(self._labels())
            elif kw == "arrow":
                f = self.ident()
                self.expect(":")
                a = self.label()
                self.expect("->")
                arrows.append((f, a, self.label()))
            else:
                f, g = self.ident(), self.ident()
                self.expect("=")
                compose.append((f, g, self.ident()))
        return CategoryDecl(name, tuple(objects), tuple(arrows), tuple(compose))

    def p_profunctor(self):
        name = self.ident()
        if self.accept("="):
            self.keyword(("hom",))
            self.expect("(")
            cat = self.ident()
            self.expect(")")
            return ProfunctorDecl(name, cat, cat, hom_of=cat)
        src, tgt = self._typed("-|->")
        self.expect("{")
        elements, left, right = [], [], []
        while not self.accept("}"):
            if not self.at("ident"):
                raise self.error(["element", "left", "right", "}"])
            kw = self.keyword(("element", "left", "right"))
            if kw == "element":
                x = self.label()
                self.expect(":")
                a = self.label()
                self.expect("->")
                elements.append((x, a, self.label()))
            elif kw == "left":
                f, x = self.ident(), self.label()
                self.expect("=")
                left.append((f, x, self.label()))
            else:
                x, g = self.label(), self.ident()
                self.expect("=")
                right.append((x, g, self.label()))
        return ProfunctorDecl(name, src, tgt, tuple(elements), tuple(left), tuple(right))

    def p_functor(self):
        name = self.ident()
        src, tgt = self._typed()
        self.expect("{")
        mapping = []
        while not self.accept("}"):
            if not (self.at("ident") or self.at("number")):
                raise self.error(["identifier", "number", "}"])
            key = self.label()
            self.expect("->")
            if self.at("ident", "id") and self.tokens[self.pos + 1].kind == "(":
                t = self.expect("ident")
                self.expect("(")
                obj = self.label()
                self.expect(")")
                value = Call("id", (obj,), self.span_from(t))
            else:
                value = self.label()
            mapping.append((key, value))
        return FunctorDecl(name, src, tgt, tuple(mapping))

    def p_object(self):
        names = [self.ident()]
        while self.accept(","):
            names.append(self.ident())
        return ObjectDecl(tuple(names))

    def p_arrow(self):
        name = self.ident()
        src, tgt = self._typed()
        return ArrowDecl(name, src, tgt)

    def p_proarrow(self):
        name = self.ident()
        src, tgt = self._typed("-|->")
        return ProarrowDecl(name, src, tgt)

    def path(self, empty: str, sep: str) -> PathTerm:
        first = self.tok
        if self.at("ident", empty) and self.tokens[self.pos + 1].kind == "(":
            self.expect("ident")
            self.expect("(")
            at = self.ident()
            self.expect(")")
            return PathTerm((), at, self.span_from(first))
        gens = [self.ident()]
        while self.accept(sep):
            gens.append(self.ident())
        return PathTerm(tuple(gens), None, self.span_from(first))

    def p_square(self):
        name = self.ident()
        self.expect(":")
        left = self.path("unit", ";")
        self.expect("=>")
        right = self.path("unit", ";")
        self.keyword(("along",))
        top = self.path("id", ".")
        self.expect(",")
        bottom = self.path("id", ".")
        return SquareDecl(name, left, right, top, bottom)

    def table(self) -> tuple:
        self.expect("{")
        rows = []
        while not self.accept("}"):
            if not (self.at("ident") or self.at("(") or self.at("number")):
                raise self.error(["identifier", "(", "}"])
            key = self.atom()
            self.expect("=")
            rows.append((key, self.ident()))
        return tuple(rows)

    def p_natural(self):
        name = self.ident()
        if self.accept("="):
            return NaturalDecl(name, expr=self.term())
        self.expect(":")
        src = self.term()
        self.expect("=>")
        tgt = self.term()
        return NaturalDecl(name, source=src, target=tgt, table=self.table())

    def p_dinatural(self):
        name = self.ident()
        orientation = self.keyword(ORIENTATIONS) if self.at("ident") else None
        if self.accept("="):
            return DinaturalDecl(name, orientation, expr=self.term())
        if not self.at(":"):
            raise self.error(["=", ":"] + ([] if orientation else list(ORIENTATIONS)))
        self.expect(":")
        src = self.term()
        self.expect("->")
        tgt = self.term()
        return DinaturalDecl(name, orientation, source=src, target=tgt, table=self.table())

    def p_modification(self):
        name = self.ident()
        self.expect("=")
        return ModificationDecl(name, self.term())

    def p_dimodification(self):
        name = self.ident()
        self.expect("=")
        return DimodificationDecl(name, self.term())

    def letter(self) -> tuple[str, Span]:
        first = self.tok
        text = self.ident()
        if self.at("*") and self.tok.span.start == first.span.end:
            self.expect("*")
            text += "*"
        return text, self.span_from(first)

    def p_connector(self):
        name = self.ident()
        self.expect("=")
        self.expect("(")
        letters = [self.letter()]
        while self.accept("(x)"):
            letters.append(self.letter())
        self.expect(")")
        self.expect("(")
        args = []
        if not self.accept(")"):
            args.append(self.ident())
            while self.accept(","):
                args.append(self.ident())
            self.expect(")")
        return ConnectorDecl(name, tuple(x for x, _ in letters), tuple(args), tuple(s for _, s in letters))

    # -- terms
    def term(self) -> Term:
        first = self.tok
        parts = [self.atom()]
        while self.accept(";"):
            parts.append(self.atom())
        return parts[0] if len(parts) == 1 else Seq(tuple(parts), self.span_from(first))

    def atom(self) -> Term:
        self.depth += 1
        if self.depth > MAX_DEPTH:
            raise ParseError("expression nested too deeply", self.tok.span)
        try:
            first = self.tok
            if self.at("number"):
                return Num(self.number(), first.span)
            if self.accept("("):
                items = [self.term()]
                while self.accept(","):
                    items.append(self.term())
                self.expect(")")
                return items[0] if len(items) == 1 else Tup(tuple(items), self.span_from(first))
            if not self.at("ident"):
                raise self.error(["identifier", "number", "("])
            text, span = self.letter()
            if self.accept("("):
                args = []
                if not self.accept(")"):
                    args.append(self.term())
                    while self.accept(","):
                        args.append(self.term())
                    self.expect(")")
                return Call(text, tuple(args), self.span_from(first))
            return Name(text, span)
        finally:
            self.depth -= 1


def parse(text: str | bytes) -> Document:
    """Parse a document; every failure is a ParseError with a span."""
    if isinstance(text, (bytes, bytearray)):
        try:
            text = bytes(text).decode("utf-8")
        except UnicodeDecodeError as exc:
            before = bytes(text[:exc.start]).decode("utf-8", "replace")
            line = before.count("\n") + 1
            col = len(before) - (before.rfind("\n") + 1) + 1
            raise ParseError("input is not valid UTF-8", Span(exc.start, exc.end, line, col)) from None
    return Parser(text).document()


# ---------------------------------------------------------------------------
# printer


def show_label(x) -> str:
    if isinstance(x, tuple):
        return f"({', '.join(map(str, x))})"
    return str(x)


def _factors(names) -> str:
    return " (x) ".join(names)


def show_term(t) -> str:
    if isinstance(t, Name):
        return t.text
    if isinstance(t, Num):
        return str(t.value)
    if isinstance(t, Call):
        return f"{t.head}({', '.join(show_term(a) for a in t.args)})"
    if isinstance(t, Tup):
        return f"({', '.join(show_term(a) for a in t.items)})"
    if isinstance(t, Seq):
        return " ; ".join(show_term(a) if not isinstance(a, Seq) else f"({show_term(a)})" for a in t.parts)
    return show_label(t)


def _path(p: PathTerm, empty: str, sep: str) -> str:
    return f"{empty}({p.at})" if not p.gens else sep.join(p.gens)


def _block(head: str, lines) -> str:
    lines = list(lines)
    if not lines:
        return head + " { }"
    return head + " {\n" + "".join(f"  {x}\n" for x in lines) + "}"


def show_declaration(d) -> str:
    if isinstance(d, InstanceDecl):
        return f"instance {d.kind}"
    if isinstance(d, SetDecl):
        return f"set {d.name} {{ {' '.join(map(show_label, d.elements))} }}".replace("{  }", "{ }")
    if isinstance(d, RelDecl):
        body = " ".join(f"({show_label(a)}, {show_label(b)})" for a, b in d.pairs)
        return f"rel {d.name} : {_factors(d.src)} -> {_factors(d.tgt)} {{ {body} }}".replace("{  }", "{ }")
    if isinstance(d, FunctionDecl):
        body = "  ".join(f"{show_label(a)} -> {show_label(b)}" for a, b in d.mapping)
        return f"function {d.name} : {_factors(d.src)} -> {_factors(d.tgt)} {{ {body} }}".replace("{  }", "{ }")
    if isinstance(d, CategoryDecl):
        lines = [f"objects {', '.join(map(show_label, d.objects))}"] if d.objects else []
        lines += [f"arrow {f} : {show_label(a)} -> {show_label(b)}" for f, a, b in d.arrows]
        lines += [f"compose {f} {g} = {h}" for f, g, h in d.compose]
        return _block(f"category {d.name}", lines)
    if isinstance(d, ProfunctorDecl):
        if d.hom_of is not None:
            return f"profunctor {d.name} = hom({d.hom_of})"
        lines = [f"element {show_label(x)} : {show_label(a)} -> {show_label(b)}" for x, a, b in d.elements]
        lines += [f"left {f} {show_label(x)} = {show_label(y)}" for f, x, y in d.left]
        lines += [f"right {show_label(x)} {g} = {show_label(y)}" for x, g, y in d.right]
        return _block(f"profunctor {d.name} : {d.src} -|-> {d.tgt}", lines)
    if isinstance(d, FunctorDecl):
        lines = [f"{show_label(k)} -> {show_term(v)}" for k, v in d.mapping]
        return _block(f"functor {d.name} : {d.src} -> {d.tgt}", lines)
    if isinstance(d, ObjectDecl):
        return f"object {', '.join(d.names)}"
    if isinstance(d, ArrowDecl):
        return f"arrow {d.name} : {d.src} -> {d.tgt}"
    if isinstance(d, ProarrowDecl):
        return f"proarrow {d.name} : {d.src} -|-> {d.tgt}"
    if isinstance(d, SquareDecl):
        return (f"square {d.name} : {_path(d.left, 'unit', ' ; ')} => {_path(d.right, 'unit', ' ; ')} "
                f"along {_path(d.top, 'id', '.')}, {_path(d.bottom, 'id', '.')}")
    if isinstance(d, (NaturalDecl, DinaturalDecl)):
        kw = "natural" if isinstance(d, NaturalDecl) else "dinatural"
        head = f"{kw} {d.name}"
        if isinstance(d, DinaturalDecl) and d.orientation:
            head += f" {d.orientation}"
        if d.expr is not None:
            return f"{head} = {show_term(d.expr)}"
        arrow = "=>" if kw == "natural" else "->"
        lines = [f"{show_term(k)} = {v}" for k, v in d.table]
        return _block(f"{head} : {show_term(d.source)} {arrow} {show_term(d.target)}", lines)
    if isinstance(d, ModificationDecl):
        return f"modification {d.name} = {show_term(d.expr)}"
    if isinstance(d, DimodificationDecl):
        return f"dimodification {d.name} = {show_term(d.expr)}"
    if isinstance(d, ConnectorDecl):
        return f"connector {d.name} = ({' (x) '.join(d.letters)})({', '.join(d.args)})"
    raise TypeError(f"not a declaration: {d!r}")


def show(doc: Document) -> str:
    return "\n".join(show_declaration(d) for d in doc.declarations) + "\n"


__all__ = [
    "Span", "DslError", "ParseError", "Token", "tokenize", "Name", "Num", "Call", "Tup", "Seq", "InstanceDecl",
    "SetDecl", "RelDecl", "FunctionDecl", "CategoryDecl", "ProfunctorDecl", "FunctorDecl", "ObjectDecl",
    "ArrowDecl", "ProarrowDecl", "PathTerm", "SquareDecl", "NaturalDecl", "DinaturalDecl", "ModificationDecl",
    "DimodificationDecl", "ConnectorDecl", "Document", "parse", "show", "show_declaration", "show_term",
]
