"""Plain-text documents for models, morphisms, and construction data.

Grammar (whitespace-insensitive, # starts a line comment):

    model NAME { gen IDENT : INT ;  d IDENT = EXPR ;  ... }
    morphism NAME : SRC -> DST { IDENT -> EXPR ; ... }
    biquotient NAME { wh IDENT : INT ;  wk IDENT : INT ;
                      v IDENT : INT [as IDENT] ;
                      phiH IDENT = EXPR ;  phiK IDENT = EXPR ; ... }
    pontryagin NAME { p INT = EXPR ; ... }

An EXPR is a signed sum of terms; a term is an optional rational
coefficient p or p/q, then * separated generator powers IDENT or
IDENT^INT.  ^ binds tighter than *.  Identifiers may carry trailing
primes.  Every error carries a line and column.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Mapping, Optional

from sullivan.cdga import FreeCDGA, Morphism, compose_and_check, validate
from sullivan.constructors import ClassifyingData, PontryaginData
from sullivan.gradedalg import Generator, Polynomial


class DslError(Exception):
    def __init__(self, message: str, line: int, col: int):
        super().__init__(f"line {line}, column {col}: {message}")
        self.message = message
        self.line = line
        self.col = col


@dataclass(frozen=True)
class Token:
    kind: str  # IDENT | INT | PUNCT | EOF
    text: str
    line: int
    col: int


_TOKEN_RE = re.compile(
    r"""(?P<ws>[ \t\r]+)
      | (?P<comment>\#[^\n]*)
      | (?P<nl>\n)
      | (?P<ident>[A-Za-z_][A-Za-z0-9_]*'*)
      | (?P<int>[0-9]+)
      | (?P<arrow>->)
      | (?P<punct>[{}():;=+\-*^/,])
    """,
    re.VERBOSE,
)


def _lex(text: str) -> list[Token]:
    tokens: list[Token] = []
    line, col = 1, 1
    pos = 0
    while pos < len(text):
        m = _TOKEN_RE.match(text, pos)
        if not m:
            raise DslError(f"unexpected character {text[pos]!r}", line, col)
        kind = m.lastgroup
        lexeme = m.group()
        if kind == "nl":
            line += 1
            col = 1
        elif kind in ("ws", "comment"):
            col += len(lexeme)
        else:
            out_kind = {"ident": "IDENT", "int": "INT"}.get(kind, "PUNCT")
            tokens.append(Token(out_kind, lexeme, line, col))
            col += len(lexeme)
        pos = m.end()
    tokens.append(Token("EOF", "", line, col))
    return tokens


@dataclass(frozen=True)
class RawFactor:
    name: str
    exponent: int
    line: int
    col: int


@dataclass(frozen=True)
class RawTerm:
    coefficient: Fraction
    factors: tuple[RawFactor, ...]
    line: int
    col: int


@dataclass(frozen=True)
class RawExpr:
    terms: tuple[RawTerm, ...]
    line: int
    col: int

    def resolve(self, env: Mapping[str, Generator]) -> Polynomial:
        total = Polynomial.zero()
        for term in self.terms:
            acc = Polynomial.scalar(term.coefficient)
            for f in term.factors:
                g = env.get(f.name)
                if g is None:
                    raise DslError(f"unknown generator {f.name!r}", f.line, f.col)
                if g.odd and f.exponent > 1:
                    acc = Polynomial.zero()
                    break
                acc = acc * Polynomial.gen(g, f.exponent)
            total = total + acc
        return total


class _Parser:
    def __init__(self, tokens: list[Token]):
        self.tokens = tokens
        self.pos = 0

    def peek(self) -> Token:
        return self.tokens[self.pos]

    def next(self) -> Token:
        tok = self.tokens[self.pos]
        self.pos += 1
        return tok

    def fail(self, message: str, tok: Optional[Token] = None) -> "DslError":
        tok = tok or self.peek()
        return DslError(message, tok.line, tok.col)

    def expect(self, kind: str, text: Optional[str] = None) -> Token:
        tok = self.peek()
        if tok.kind != kind or (text is not None and tok.text != text):
            want = text if text is not None else kind
            got = tok.text if tok.text else "end of input"
            raise self.fail(f"expected {want!r}, found {got!r}")
        return self.next()

    def at_punct(self, text: str) -> bool:
        tok = self.peek()
        return tok.kind == "PUNCT" and tok.text == text

    def ident(self, what: str) -> Token:
        tok = self.peek()
        if tok.kind != "IDENT":
            raise self.fail(f"expected {what}, found {tok.text or 'end of input'!r}")
        return self.next()

    def integer(self, what: str) -> tuple[int, Token]:
        tok = self.peek()
        if tok.kind != "INT":
            raise self.fail(f"expected {what}, found {tok.text or 'end of input'!r}")
        self.next()
        return int(tok.text), tok

    # -- expressions -----------------------------------------------------

    def parse_expr(self) -> RawExpr:
        start = self.peek()
        terms: list[RawTerm] = []
        sign = Fraction(1)
        if self.at_punct("+") or self.at_punct("-"):
            if self.next().text == "-":
                sign = Fraction(-1)
        terms.append(self.parse_term(sign))
        while self.at_punct("+") or self.at_punct("-"):
            sign = Fraction(1) if self.next().text == "+" else Fraction(-1)
            terms.append(self.parse_term(sign))
        return RawExpr(tuple(terms), start.line, start.col)

    def parse_term(self, sign: Fraction) -> RawTerm:
        start = self.peek()
        coeff = sign
        factors: list[RawFactor] = []
        if self.peek().kind == "INT":
            num, _ = self.integer("coefficient")
            coeff *= num
            if self.at_punct("/"):
                self.next()
                den, dtok = self.integer("denominator")
                if den == 0:
                    raise self.fail("zero denominator", dtok)
                coeff /= den
            if self.at_punct("*"):
                self.next()
                factors = self.parse_factors()
        elif self.peek().kind == "IDENT":
            factors = self.parse_factors()
        else:
            raise self.fail(f"expected a term, found {self.peek().text or 'end of input'!r}")
        return RawTerm(coeff, tuple(factors), start.line, start.col)

    def parse_factors(self) -> list[RawFactor]:
        factors = [self.parse_factor()]
        while self.at_punct("*"):
            self.next()
            factors.append(self.parse_factor())
        return factors

    def parse_factor(self) -> RawFactor:
        tok = self.ident("a generator name")
        exp = 1
        if self.at_punct("^"):
            self.next()
            exp, etok = self.integer("exponent")
            if exp < 1:
                raise self.fail("exponent must be positive", etok)
        return RawFactor(tok.text, exp, tok.line, tok.col)


@dataclass(frozen=True)
class GenDecl:
    name: str
    degree: int
    line: int
    col: int


@dataclass(frozen=True)
class DiffDecl:
    gen_name: str
    expr: RawExpr
    line: int
    col: int


@dataclass
class ModelDocument:
    name: str
    gens: list[GenDecl]
    diffs: list[DiffDecl]

    def to_model(self) -> FreeCDGA:
        env: dict[str, Generator] = {}
        for decl in self.gens:
            if decl.name in env:
                raise DslError(f"generator {decl.name!r} declared twice", decl.line, decl.col)
            if decl.degree < 1:
                raise DslError(
                    f"generator degree must be >= 1, got {decl.degree}", decl.line, decl.col
                )
            env[decl.name] = Generator(decl.name, decl.degree)
        diff: dict[Generator, Polynomial] = {}
        for decl in self.diffs:
            g = env.get(decl.gen_name)
            if g is None:
                raise DslError(f"unknown generator {decl.gen_name!r}", decl.line, decl.col)
            if g in diff:
                raise DslError(
                    f"differential of {decl.gen_name!r} assigned twice", decl.line, decl.col
                )
            diff[g] = decl.expr.resolve(env)
        return FreeCDGA(tuple(env.values()), diff)


@dataclass
class MorphismDocument:
    name: str
    source_name: str
    target_name: str
    assignments: list[tuple[str, RawExpr, int, int]]
    line: int
    col: int

    def to_morphism(self, models: Mapping[str, FreeCDGA], check: bool = True) -> Morphism:
        if self.source_name not in models:
            raise DslError(f"unknown source model {self.source_name!r}", self.line, self.col)
        if self.target_name not in models:
            raise DslError(f"unknown target model {self.target_name!r}", self.line, self.col)
        source = models[self.source_name]
        target = models[self.target_name]
        target_env = {g.name: g for g in target.generators}
        images: dict[Generator, Polynomial] = {}
        for gen_name, expr, line, col in self.assignments:
            if not source.has_gen(gen_name):
                raise DslError(f"unknown source generator {gen_name!r}", line, col)
            g = source.gen(gen_name)
            if g in images:
                raise DslError(f"image of {gen_name!r} assigned twice", line, col)
            images[g] = expr.resolve(target_env)
        morphism = Morphism(source, target, images)
        if check:
            violations = compose_and_check(morphism)
            if violations:
                raise DslError(
                    f"morphism {self.name!r} is not a CDGA map: " + "; ".join(violations),
                    self.line,
                    self.col,
                )
        return morphism


@dataclass
class BiquotientDocument:
    name: str
    wh: list[GenDecl]
    wk: list[GenDecl]
    v: list[tuple[GenDecl, Optional[str]]]  # declaration, suspension name
    phi_h: list[DiffDecl]
    phi_k: list[DiffDecl]

    def to_classifying_data(self) -> ClassifyingData:
        def build(decls: list[GenDecl], seen: dict[str, GenDecl]) -> tuple[Generator, ...]:
            out = []
            for decl in decls:
                if decl.name in seen:
                    raise DslError(f"name {decl.name!r} declared twice", decl.line, decl.col)
                seen[decl.name] = decl
                out.append(Generator(decl.name, decl.degree))
            return tuple(out)

        seen: dict[str, GenDecl] = {}
        wh = build(self.wh, seen)
        wk = build(self.wk, seen)
        v = build([decl for decl, _ in self.v], seen)
        v_by_name = {g.name: g for g in v}
        wh_env = {g.name: g for g in wh}
        wk_env = {g.name: g for g in wk}
        suspension_names: dict[Generator, str] = {}
        for (decl, sname), g in zip(self.v, v):
            if sname is not None:
                suspension_names[g] = sname

        def resolve_maps(decls: list[DiffDecl], env: dict[str, Generator], side: str):
            out: dict[Generator, Polynomial] = {}
            for decl in decls:
                g = v_by_name.get(decl.gen_name)
                if g is None:
                    raise DslError(
                        f"{side} assigned to unknown middle generator {decl.gen_name!r}",
                        decl.line,
                        decl.col,
                    )
                if g in out:
                    raise DslError(
                        f"{side}({decl.gen_name}) assigned twice", decl.line, decl.col
                    )
                out[g] = decl.expr.resolve(env)
            return out

        return ClassifyingData(
            wh=wh,
            wk=wk,
            v=v,
            phi_h=resolve_maps(self.phi_h, wh_env, "phiH"),
            phi_k=resolve_maps(self.phi_k, wk_env, "phiK"),
            suspension_names=suspension_names,
        )


@dataclass
class PontryaginDocument:
    name: str
    entries: list[tuple[int, RawExpr, int, int]]

    def to_data(self, base: FreeCDGA, rank: int) -> PontryaginData:
        env = {g.name: g for g in base.generators}
        classes = [Polynomial.zero()] * rank
        seen: set[int] = set()
        for idx, expr, line, col in self.entries:
            if idx < 1 or idx > rank:
                raise DslError(f"class index {idx} outside 1..{rank}", line, col)
            if idx in seen:
                raise DslError(f"class p_{idx} assigned twice", line, col)
            seen.add(idx)
            classes[idx - 1] = expr.resolve(env)
        return PontryaginData(base=base, rank=rank, classes=tuple(classes))


@dataclass
class Source:
    """All documents of one file, in order, with name lookup by kind."""

    models: dict[str, ModelDocument] = field(default_factory=dict)
    morphisms: dict[str, MorphismDocument] = field(default_factory=dict)
    biquotients: dict[str, BiquotientDocument] = field(default_factory=dict)
    pontryagin: dict[str, PontryaginDocument] = field(default_factory=dict)

    def resolved_models(self) -> dict[str, FreeCDGA]:
        return {name: doc.to_model() for name, doc in self.models.items()}


def parse_source(text: str) -> Source:
    parser = _Parser(_lex(text))
    source = Source()

    def register(table: dict, name: str, doc, tok: Token) -> None:
        if name in table:
            raise DslError(f"document {name!r} defined twice", tok.line, tok.col)
        table[name] = doc

    while parser.peek().kind != "EOF":
        head = parser.ident("a document keyword")
        if head.text == "model":
            name_tok = parser.ident("a model name")
            register(source.models, name_tok.text, _parse_model_body(parser, name_tok.text), name_tok)
        elif head.text == "morphism":
            name_tok = parser.ident("a morphism name")
            register(
                source.morphisms, name_tok.text, _parse_morphism_body(parser, name_tok), name_tok
            )
        elif head.text == "biquotient":
            name_tok = parser.ident("a biquotient name")
            register(
                source.biquotients,
                name_tok.text,
                _parse_biquotient_body(parser, name_tok.text),
                name_tok,
            )
        elif head.text == "pontryagin":
            name_tok = parser.ident("a pontryagin name")
            register(
                source.pontryagin,
                name_tok.text,
                _parse_pontryagin_body(parser, name_tok.text),
                name_tok,
            )
        else:
            raise parser.fail(
                f"expected 'model', 'morphism', 'biquotient', or 'pontryagin', "
                f"found {head.text!r}",
                head,
            )
    return source


def _parse_model_body(parser: _Parser, name: str) -> ModelDocument:
    parser.expect("PUNCT", "{")
    doc = ModelDocument(name, [], [])
    while not parser.at_punct("}"):
        key = parser.ident("'gen' or 'd'")
        if key.text == "gen":
            gen_tok = parser.ident("a generator name")
            parser.expect("PUNCT", ":")
            degree, _ = parser.integer("a degree")
            parser.expect("PUNCT", ";")
            doc.gens.append(GenDecl(gen_tok.text, degree, gen_tok.line, gen_tok.col))
        elif key.text == "d":
            gen_tok = parser.ident("a generator name")
            parser.expect("PUNCT", "=")
            expr = parser.parse_expr()
            parser.expect("PUNCT", ";")
            doc.diffs.append(DiffDecl(gen_tok.text, expr, gen_tok.line, gen_tok.col))
        else:
            raise parser.fail(f"expected 'gen' or 'd', found {key.text!r}", key)
    parser.expect("PUNCT", "}")
    return doc


def _parse_morphism_body(parser: _Parser, name_tok: Token) -> MorphismDocument:
    parser.expect("PUNCT", ":")
    src = parser.ident("a source model name")
    parser.expect("PUNCT", "->")
    dst = parser.ident("a target model name")
    parser.expect("PUNCT", "{")
    doc = MorphismDocument(
        name_tok.text, src.text, dst.text, [], name_tok.line, name_tok.col
    )
    while not parser.at_punct("}"):
        gen_tok = parser.ident("a source generator name")
        parser.expect("PUNCT", "->")
        expr = parser.parse_expr()
        parser.expect("PUNCT", ";")
        doc.assignments.append((gen_tok.text, expr, gen_tok.line, gen_tok.col))
    parser.expect("PUNCT", "}")
    return doc


def _parse_biquotient_body(parser: _Parser, name: str) -> BiquotientDocument:
    parser.expect("PUNCT", "{")
    doc = BiquotientDocument(name, [], [], [], [], [])
    while not parser.at_punct("}"):
        key = parser.ident("'wh', 'wk', 'v', 'phiH', or 'phiK'")
        if key.text in ("wh", "wk", "v"):
            gen_tok = parser.ident("a generator name")
            parser.expect("PUNCT", ":")
            degree, _ = parser.integer("a degree")
            sname: Optional[str] = None
            if key.text == "v" and parser.peek().kind == "IDENT" and parser.peek().text == "as":
                parser.next()
                sname = parser.ident("a suspension name").text
            parser.expect("PUNCT", ";")
            decl = GenDecl(gen_tok.text, degree, gen_tok.line, gen_tok.col)
            if key.text == "wh":
                doc.wh.append(decl)
            elif key.text == "wk":
                doc.wk.append(decl)
            else:
                doc.v.append((decl, sname))
        elif key.text in ("phiH", "phiK"):
            gen_tok = parser.ident("a middle generator name")
            parser.expect("PUNCT", "=")
            expr = parser.parse_expr()
            parser.expect("PUNCT", ";")
            decl = DiffDecl(gen_tok.text, expr, gen_tok.line, gen_tok.col)
            (doc.phi_h if key.text == "phiH" else doc.phi_k).append(decl)
        else:
            raise parser.fail(
                f"expected 'wh', 'wk', 'v', 'phiH', or 'phiK', found {key.text!r}", key
            )
    parser.expect("PUNCT", "}")
    return doc


def _parse_pontryagin_body(parser: _Parser, name: str) -> PontryaginDocument:
    parser.expect("PUNCT", "{")
    doc = PontryaginDocument(name, [])
    while not parser.at_punct("}"):
        key = parser.ident("'p'")
        if key.text != "p":
            raise parser.fail(f"expected 'p', found {key.text!r}", key)
        idx, itok = parser.integer("a class index")
        parser.expect("PUNCT", "=")
        expr = parser.parse_expr()
        parser.expect("PUNCT", ";")
        doc.entries.append((idx, expr, itok.line, itok.col))
    parser.expect("PUNCT", "}")
    return doc


# -- convenience entry points -------------------------------------------


def parse_model(text: str, name: Optional[str] = None) -> ModelDocument:
    """The single (or named) model document of a file."""
    source = parse_source(text)
    if name is not None:
        if name not in source.models:
            raise DslError(f"no model named {name!r} in the file", 1, 1)
        return source.models[name]
    if len(source.models) != 1:
        raise DslError(
            f"expected exactly one model document, found {len(source.models)}", 1, 1
        )
    return next(iter(source.models.values()))


def parse_morphism(text: str, check: bool = True) -> Morphism:
    """The single morphism of a file, resolved against its model documents."""
    source = parse_source(text)
    if len(source.morphisms) != 1:
        raise DslError(
            f"expected exactly one morphism document, found {len(source.morphisms)}", 1, 1
        )
    doc = next(iter(source.morphisms.values()))
    return doc.to_morphism(source.resolved_models(), check=check)


def parse_classifying(text: str, name: Optional[str] = None) -> ClassifyingData:
    """The single (or named) biquotient document of a file, resolved."""
    source = parse_source(text)
    if name is not None:
        if name not in source.biquotients:
            raise DslError(f"no biquotient named {name!r} in the file", 1, 1)
        return source.biquotients[name].to_classifying_data()
    if len(source.biquotients) != 1:
        raise DslError(
            f"expected exactly one biquotient document, found {len(source.biquotients)}",
            1,
            1,
        )
    return next(iter(source.biquotients.values())).to_classifying_data()


def parse_pontryagin(text: str, base: FreeCDGA, rank: int) -> PontryaginData:
    """The single pontryagin document of a file, resolved over a base model."""
    source = parse_source(text)
    if len(source.pontryagin) != 1:
        raise DslError(
            f"expected exactly one pontryagin document, found {len(source.pontryagin)}",
            1,
            1,
        )
    return next(iter(source.pontryagin.values())).to_data(base, rank)


def parse_expression(text: str, gens: Mapping[str, Generator]) -> Polynomial:
    """A standalone expression over the given generators."""
    parser = _Parser(_lex(text))
    expr = parser.parse_expr()
    tok = parser.peek()
    if tok.kind != "EOF":
        raise DslError(f"unexpected trailing input {tok.text!r}", tok.line, tok.col)
    return expr.resolve(gens)


def check_document(doc: ModelDocument) -> list[str]:
    """Validation diagnostics for a model document, tagged with positions.

    Differential violations are mapped back to the assignment that caused
    them so the offending line is part of the message.
    """
    model = doc.to_model()
    positions = {decl.gen_name: (decl.line, decl.col) for decl in doc.diffs}
    out = []
    for violation in validate(model):
        hit = re.search(r"\(([A-Za-z_][A-Za-z0-9_']*)\)", violation)
        pos = positions.get(hit.group(1)) if hit else None
        if pos:
            out.append(f"line {pos[0]}, column {pos[1]}: {violation}")
        else:
            out.append(violation)
    return out


def render_model(model: FreeCDGA, name: str = "M") -> str:
    """Render a model as a document; parsing it back gives an equal model."""
    lines = [f"model {name} {{"]
    for g in model.generators:
        lines.append(f"  gen {g.name} : {g.degree};")
    for g in model.generators:
        dg = model.d(g)
        if not dg.is_zero():
            lines.append(f"  d {g.name} = {dg};")
    lines.append("}")
    return "\n".join(lines) + "\n"


def render_morphism(
    m: Morphism, name: str = "f", source_name: str = "A", target_name: str = "B"
) -> str:
    lines = [
        render_model(m.source, source_name),
        render_model(m.target, target_name),
        f"morphism {name} : {source_name} -> {target_name} {{",
    ]
    for g in m.source.generators:
        lines.append(f"  {g.name} -> {m.image_of(g)};")
    lines.append("}")
    return "\n".join(lines) + "\n"


def render_classifying(data: ClassifyingData, name: str = "B") -> str:
    """Render classifying data as a biquotient document (round-trips).

    Zero restriction images are omitted; parsing the result gives back
    equal ClassifyingData provided the input also omits them.
    """
    lines = [f"biquotient {name} {{"]
    for g in data.wh:
        lines.append(f"  wh {g.name} : {g.degree};")
    for g in data.wk:
        lines.append(f"  wk {g.name} : {g.degree};")
    for g in data.v:
        suffix = ""
        sname = data.suspension_names.get(g)
        if sname is not None:
            suffix = f" as {sname}"
        lines.append(f"  v {g.name} : {g.degree}{suffix};")
    for label, phi in (("phiH", data.phi_h), ("phiK", data.phi_k)):
        for g in data.v:
            img = phi.get(g)
            if img is not None and not img.is_zero():
                lines.append(f"  {label} {g.name} = {img};")
    lines.append("}")
    return "\n".join(lines) + "\n"


def render_pontryagin(data: PontryaginData, name: str = "P") -> str:
    """Render the nonzero characteristic classes as a pontryagin document."""
    lines = [f"pontryagin {name} {{"]
    for i, p in enumerate(data.padded_classes(), start=1):
        if not p.is_zero():
            lines.append(f"  p {i} = {p};")
    lines.append("}")
    return "\n".join(lines) + "\n"
