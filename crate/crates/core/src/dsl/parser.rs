//! Recursive-descent parser for check documents. One statement per line;
//! every error carries a line:column position.

use std::fmt;

use super::ast::*;
use super::lexer::{lex, Pos, Tok, Token};
use crate::pro::ProWord;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ParseError {
    pub line: usize,
    pub col: usize,
    pub message: String,
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:{}: {}", self.line, self.col, self.message)
    }
}

impl std::error::Error for ParseError {}

struct Parser {
    tokens: Vec<Token>,
    pos: usize,
}

type PResult<T> = Result<T, ParseError>;

impl Parser {
    fn err<T>(&self, message: impl Into<String>) -> PResult<T> {
        let pos = self.here();
        Err(ParseError {
            line: pos.line,
            col: pos.col,
            message: message.into(),
        })
    }

    fn here(&self) -> Pos {
        self.tokens
            .get(self.pos)
            .or_else(|| self.tokens.last())
            .map(|t| t.pos)
            .unwrap_or(Pos { line: 1, col: 1 })
    }

    fn peek(&self) -> Option<&Tok> {
        self.tokens.get(self.pos).map(|t| &t.tok)
    }

    fn eat(&mut self, tok: &Tok) -> bool {
        if self.peek() == Some(tok) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expect(&mut self, tok: Tok) -> PResult<()> {
        match self.peek() {
            Some(t) if *t == tok => {
                self.pos += 1;
                Ok(())
            }
            Some(t) => {
                let t = t.clone();
                self.err(format!("expected `{tok}`, found `{t}`"))
            }
            None => self.err(format!("expected `{tok}`, found end of input")),
        }
    }

    fn ident(&mut self) -> PResult<String> {
        match self.peek() {
            Some(Tok::Ident(s)) => {
                let s = s.clone();
                self.pos += 1;
                Ok(s)
            }
            Some(t) => {
                let t = t.clone();
                self.err(format!("expected a name, found `{t}`"))
            }
            None => self.err("expected a name, found end of input"),
        }
    }

    fn keyword(&mut self, kw: &str) -> PResult<()> {
        match self.peek() {
            Some(Tok::Ident(s)) if s == kw => {
                self.pos += 1;
                Ok(())
            }
            Some(t) => {
                let t = t.clone();
                self.err(format!("expected keyword `{kw}`, found `{t}`"))
            }
            None => self.err(format!("expected keyword `{kw}`, found end of input")),
        }
    }

    fn peek_keyword(&self, kw: &str) -> bool {
        matches!(self.peek(), Some(Tok::Ident(s)) if s == kw)
    }

    fn int(&mut self) -> PResult<i64> {
        match self.peek() {
            Some(Tok::Int(n)) => {
                let n = *n;
                self.pos += 1;
                Ok(n)
            }
            Some(t) => {
                let t = t.clone();
                self.err(format!("expected an integer, found `{t}`"))
            }
            None => self.err("expected an integer, found end of input"),
        }
    }

    fn unsigned(&mut self) -> PResult<usize> {
        let n = self.int()?;
        if n < 0 {
            return self.err(format!("expected a non-negative integer, found {n}"));
        }
        Ok(n as usize)
    }

    fn usize_list(&mut self) -> PResult<Vec<usize>> {
        self.expect(Tok::LBracket)?;
        let mut out = Vec::new();
        if self.eat(&Tok::RBracket) {
            return Ok(out);
        }
        loop {
            out.push(self.unsigned()?);
            if self.eat(&Tok::RBracket) {
                return Ok(out);
            }
            self.expect(Tok::Comma)?;
        }
    }

    fn int_list(&mut self) -> PResult<Vec<i64>> {
        self.expect(Tok::LBracket)?;
        let mut out = Vec::new();
        if self.eat(&Tok::RBracket) {
            return Ok(out);
        }
        loop {
            out.push(self.int()?);
            if self.eat(&Tok::RBracket) {
                return Ok(out);
            }
            self.expect(Tok::Comma)?;
        }
    }

    fn nested_int_lists(&mut self) -> PResult<Vec<Vec<i64>>> {
        self.expect(Tok::LBracket)?;
        let mut out = Vec::new();
        if self.eat(&Tok::RBracket) {
            return Ok(out);
        }
        loop {
            out.push(self.int_list()?);
            if self.eat(&Tok::RBracket) {
                return Ok(out);
            }
            self.expect(Tok::Comma)?;
        }
    }

    fn pair_list(&mut self) -> PResult<Vec<(usize, usize)>> {
        self.expect(Tok::LBracket)?;
        let mut out = Vec::new();
        if self.eat(&Tok::RBracket) {
            return Ok(out);
        }
        loop {
            self.expect(Tok::LParen)?;
            let a = self.unsigned()?;
            self.expect(Tok::Comma)?;
            let b = self.unsigned()?;
            self.expect(Tok::RParen)?;
            out.push((a, b));
            if self.eat(&Tok::RBracket) {
                return Ok(out);
            }
            self.expect(Tok::Comma)?;
        }
    }

    /// word := seqterm (`+` seqterm)* ; seqterm := atom (`.` atom)* ;
    /// atom := `id` INT | NAME | `(` word `)`
    fn word(&mut self) -> PResult<ProWord> {
        let mut acc = self.word_seq()?;
        while self.eat(&Tok::Plus) {
            let rhs = self.word_seq()?;
            acc = ProWord::par(acc, rhs);
        }
        Ok(acc)
    }

    fn word_seq(&mut self) -> PResult<ProWord> {
        let mut acc = self.word_atom()?;
        while self.eat(&Tok::Dot) {
            let rhs = self.word_atom()?;
            acc = ProWord::seq(acc, rhs);
        }
        Ok(acc)
    }

    fn word_atom(&mut self) -> PResult<ProWord> {
        if self.eat(&Tok::LParen) {
            let w = self.word()?;
            self.expect(Tok::RParen)?;
            return Ok(w);
        }
        match self.peek() {
            Some(Tok::Ident(s)) if s == "id" => {
                self.pos += 1;
                Ok(ProWord::Id(self.unsigned()?))
            }
            Some(Tok::Ident(s)) => {
                let s = s.clone();
                self.pos += 1;
                Ok(ProWord::Gen(s))
            }
            Some(t) => {
                let t = t.clone();
                self.err(format!("expected a word, found `{t}`"))
            }
            None => self.err("expected a word, found end of input"),
        }
    }

    fn end_of_statement(&mut self) -> PResult<()> {
        match self.peek() {
            None => Ok(()),
            Some(Tok::Newline) => {
                self.pos += 1;
                Ok(())
            }
            Some(t) => {
                let t = t.clone();
                self.err(format!("unexpected `{t}` at end of statement"))
            }
        }
    }

    fn statement(&mut self) -> PResult<Item> {
        let head = self.ident()?;
        let item = match head.as_str() {
            "option" => Item::Option(self.option_decl()?),
            "category" => Item::Decl(self.category_decl()?),
            "functor" => Item::Decl(self.functor_decl()?),
            "nattrans" => Item::Decl(self.nattrans_decl()?),
            "monad" => Item::Decl(self.monad_decl()?),
            "comonad" => Item::Decl(self.comonad_decl()?),
            "distlaw" => Item::Decl(self.distlaw_decl()?),
            "lift" => Item::Decl(self.lift_decl()?),
            "monadmap" => Item::Decl(self.monadmap_decl()?),
            "pro" => Item::Decl(self.pro_decl()?),
            "representation" => Item::Decl(self.representation_decl()?),
            "pairmap" => Item::Decl(self.pairmap_decl()?),
            "transformation" => Item::Decl(self.transformation_decl()?),
            "check" => Item::Check(self.check()?),
            other => {
                return self.err(format!(
                    "unknown statement `{other}` (expected a declaration, `option` or `check`)"
                ))
            }
        };
        self.end_of_statement()?;
        Ok(item)
    }

    fn option_decl(&mut self) -> PResult<OptionDecl> {
        let key = self.ident()?;
        match key.as_str() {
            "bound" => Ok(OptionDecl::Bound(self.unsigned()?)),
            "format" => {
                let v = self.ident()?;
                match v.as_str() {
                    "text" => Ok(OptionDecl::Format(FormatKind::Text)),
                    "json" => Ok(OptionDecl::Format(FormatKind::Json)),
                    other => self.err(format!("unknown format `{other}` (text or json)")),
                }
            }
            other => self.err(format!("unknown option `{other}` (bound or format)")),
        }
    }

    fn category_decl(&mut self) -> PResult<Decl> {
        let name = self.ident()?;
        self.expect(Tok::Equals)?;
        let kind = self.ident()?;
        let body = match kind.as_str() {
            "poset" => {
                if self.peek_keyword("chain") {
                    self.keyword("chain")?;
                    CategoryBody::PosetChain(self.unsigned()?)
                } else {
                    self.keyword("table")?;
                    let rows = self.nested_int_lists()?;
                    let mut table = Vec::new();
                    for row in rows {
                        let mut r = Vec::new();
                        for v in row {
                            match v {
                                0 => r.push(0u8),
                                1 => r.push(1u8),
                                other => {
                                    return self
                                        .err(format!("poset table entries are 0 or 1, found {other}"))
                                }
                            }
                        }
                        table.push(r);
                    }
                    CategoryBody::PosetTable(table)
                }
            }
            "monoid" => {
                if self.peek_keyword("table") {
                    self.keyword("table")?;
                    let rows = self.nested_int_lists()?;
                    let mut table = Vec::new();
                    for row in rows {
                        let mut r = Vec::new();
                        for v in row {
                            if v < 0 {
                                return self.err("monoid table entries are element indices");
                            }
                            r.push(v as usize);
                        }
                        table.push(r);
                    }
                    CategoryBody::MonoidTable(table)
                } else {
                    let which = self.ident()?;
                    if which.eq_ignore_ascii_case("z2") {
                        CategoryBody::MonoidZ2
                    } else {
                        return self.err(format!("unknown monoid `{which}` (z2 or table [[..]])"));
                    }
                }
            }
            "explicit" => {
                self.keyword("objects")?;
                let objects = self.unsigned()?;
                self.keyword("morphisms")?;
                let morphisms = self.pair_list()?;
                self.keyword("identity")?;
                let identity = self.usize_list()?;
                self.keyword("compose")?;
                let compose = self.nested_int_lists()?;
                CategoryBody::Explicit {
                    objects,
                    morphisms,
                    identity,
                    compose,
                }
            }
            other => return self.err(format!("unknown category form `{other}`")),
        };
        Ok(Decl::Category { name, body })
    }

    fn functor_decl(&mut self) -> PResult<Decl> {
        let name = self.ident()?;
        if self.eat(&Tok::Colon) {
            let source = self.ident()?;
            self.expect(Tok::Arrow)?;
            let target = self.ident()?;
            self.expect(Tok::Equals)?;
            self.keyword("objects")?;
            let objects = self.usize_list()?;
            let morphisms = if self.peek_keyword("morphisms") {
                self.keyword("morphisms")?;
                Some(self.usize_list()?)
            } else {
                None
            };
            return Ok(Decl::Functor {
                name,
                body: FunctorBody::Tables {
                    source,
                    target,
                    objects,
                    morphisms,
                },
            });
        }
        self.expect(Tok::Equals)?;
        let kind = self.ident()?;
        let body = match kind.as_str() {
            "identity" => FunctorBody::Identity(self.ident()?),
            "compose" => FunctorBody::Compose(self.ident()?, self.ident()?),
            "power" => FunctorBody::Power(self.ident()?, self.unsigned()?),
            other => return self.err(format!("unknown functor form `{other}`")),
        };
        Ok(Decl::Functor { name, body })
    }

    fn nattrans_decl(&mut self) -> PResult<Decl> {
        let name = self.ident()?;
        if self.eat(&Tok::Colon) {
            let source = self.ident()?;
            self.expect(Tok::FatArrow)?;
            let target = self.ident()?;
            self.expect(Tok::Equals)?;
            if self.peek_keyword("auto") {
                self.keyword("auto")?;
                return Ok(Decl::NatTrans {
                    name,
                    body: NatTransBody::Auto { source, target },
                });
            }
            let components = self.usize_list()?;
            return Ok(Decl::NatTrans {
                name,
                body: NatTransBody::Components {
                    source,
                    target,
                    components,
                },
            });
        }
        self.expect(Tok::Equals)?;
        let kind = self.ident()?;
        let body = match kind.as_str() {
            "id" => NatTransBody::Id(self.ident()?),
            "vcompose" => NatTransBody::VCompose(self.ident()?, self.ident()?),
            "hcompose" => NatTransBody::HCompose(self.ident()?, self.ident()?),
            "whisker_left" => NatTransBody::WhiskerLeft(self.ident()?, self.ident()?),
            "whisker_right" => NatTransBody::WhiskerRight(self.ident()?, self.ident()?),
            other => return self.err(format!("unknown transformation form `{other}`")),
        };
        Ok(Decl::NatTrans { name, body })
    }

    fn monad_decl(&mut self) -> PResult<Decl> {
        let name = self.ident()?;
        if self.peek_keyword("on") {
            self.keyword("on")?;
            let cat = self.ident()?;
            self.expect(Tok::Equals)?;
            if self.peek_keyword("identity") {
                self.keyword("identity")?;
                return Ok(Decl::Monad {
                    name,
                    body: MonadBody::IdentityOn { cat },
                });
            }
            self.keyword("closure")?;
            let image = self.usize_list()?;
            return Ok(Decl::Monad {
                name,
                body: MonadBody::Closure { cat, image },
            });
        }
        self.expect(Tok::Equals)?;
        self.expect(Tok::LParen)?;
        let functor = self.ident()?;
        self.expect(Tok::Comma)?;
        let mu = self.ident()?;
        self.expect(Tok::Comma)?;
        let eta = self.ident()?;
        self.expect(Tok::RParen)?;
        Ok(Decl::Monad {
            name,
            body: MonadBody::Parts { functor, mu, eta },
        })
    }

    fn comonad_decl(&mut self) -> PResult<Decl> {
        let name = self.ident()?;
        if self.peek_keyword("on") {
            self.keyword("on")?;
            let cat = self.ident()?;
            self.expect(Tok::Equals)?;
            self.keyword("interior")?;
            let image = self.usize_list()?;
            return Ok(Decl::Comonad {
                name,
                body: ComonadBody::Interior { cat, image },
            });
        }
        self.expect(Tok::Equals)?;
        self.expect(Tok::LParen)?;
        let functor = self.ident()?;
        self.expect(Tok::Comma)?;
        let delta = self.ident()?;
        self.expect(Tok::Comma)?;
        let epsilon = self.ident()?;
        self.expect(Tok::RParen)?;
        Ok(Decl::Comonad {
            name,
            body: ComonadBody::Parts {
                functor,
                delta,
                epsilon,
            },
        })
    }

    fn distlaw_decl(&mut self) -> PResult<Decl> {
        let name = self.ident()?;
        self.expect(Tok::Equals)?;
        let monad = self.ident()?;
        self.keyword("over")?;
        let companion = self.ident()?;
        let law = if self.peek_keyword("with") {
            self.keyword("with")?;
            Some(self.ident()?)
        } else {
            None
        };
        Ok(Decl::DistLaw {
            name,
            monad,
            companion,
            law,
        })
    }

    fn lift_decl(&mut self) -> PResult<Decl> {
        let name = self.ident()?;
        self.expect(Tok::Equals)?;
        let companion = self.ident()?;
        self.keyword("over")?;
        let monad = self.ident()?;
        self.keyword("objects")?;
        let objects = self.usize_list()?;
        Ok(Decl::Lift {
            name,
            companion,
            monad,
            objects,
        })
    }

    fn monadmap_decl(&mut self) -> PResult<Decl> {
        let name = self.ident()?;
        self.expect(Tok::Equals)?;
        let k = self.ident()?;
        self.keyword("with")?;
        self.keyword("alpha")?;
        let alpha = self.ident()?;
        self.expect(Tok::Colon)?;
        let t = self.ident()?;
        self.expect(Tok::Arrow)?;
        let s = self.ident()?;
        Ok(Decl::MonadMap { name, k, alpha, t, s })
    }

    fn pro_decl(&mut self) -> PResult<Decl> {
        let name = self.ident()?;
        self.expect(Tok::Equals)?;
        if self.peek_keyword("monoid") {
            self.keyword("monoid")?;
            return Ok(Decl::Pro {
                name,
                body: ProBody::Monoid,
            });
        }
        if self.peek_keyword("counital") {
            self.keyword("counital")?;
            return Ok(Decl::Pro {
                name,
                body: ProBody::Counital,
            });
        }
        self.keyword("generators")?;
        self.expect(Tok::LBracket)?;
        let mut generators = Vec::new();
        if !self.eat(&Tok::RBracket) {
            loop {
                let g = self.ident()?;
                self.expect(Tok::Colon)?;
                let dom = self.unsigned()?;
                self.expect(Tok::Arrow)?;
                let cod = self.unsigned()?;
                generators.push((g, dom, cod));
                if self.eat(&Tok::RBracket) {
                    break;
                }
                self.expect(Tok::Comma)?;
            }
        }
        self.keyword("relations")?;
        self.expect(Tok::LBracket)?;
        let mut relations = Vec::new();
        if !self.eat(&Tok::RBracket) {
            loop {
                let lhs = self.word()?;
                self.expect(Tok::EqEq)?;
                let rhs = self.word()?;
                relations.push((lhs, rhs));
                if self.eat(&Tok::RBracket) {
                    break;
                }
                self.expect(Tok::Comma)?;
            }
        }
        Ok(Decl::Pro {
            name,
            body: ProBody::Custom {
                generators,
                relations,
            },
        })
    }

    fn representation_decl(&mut self) -> PResult<Decl> {
        let name = self.ident()?;
        self.keyword("of")?;
        let pro = self.ident()?;
        self.expect(Tok::Equals)?;
        if self.peek_keyword("monad") {
            self.keyword("monad")?;
            return Ok(Decl::Representation {
                name,
                pro,
                body: RepBody::FromMonad(self.ident()?),
            });
        }
        if self.peek_keyword("comonad") {
            self.keyword("comonad")?;
            return Ok(Decl::Representation {
                name,
                pro,
                body: RepBody::FromComonad(self.ident()?),
            });
        }
        self.keyword("functor")?;
        let functor = self.ident()?;
        self.keyword("images")?;
        self.expect(Tok::LBracket)?;
        let mut images = Vec::new();
        if !self.eat(&Tok::RBracket) {
            loop {
                let g = self.ident()?;
                self.expect(Tok::Colon)?;
                let nt = self.ident()?;
                images.push((g, nt));
                if self.eat(&Tok::RBracket) {
                    break;
                }
                self.expect(Tok::Comma)?;
            }
        }
        Ok(Decl::Representation {
            name,
            pro,
            body: RepBody::Explicit { functor, images },
        })
    }

    fn pairmap_decl(&mut self) -> PResult<Decl> {
        let name = self.ident()?;
        self.expect(Tok::Equals)?;
        let k = self.ident()?;
        self.keyword("with")?;
        self.keyword("zeta")?;
        let zeta = self.ident()?;
        self.keyword("alpha")?;
        let alpha = self.ident()?;
        self.expect(Tok::Colon)?;
        self.expect(Tok::LParen)?;
        let t_rep = self.ident()?;
        self.expect(Tok::Comma)?;
        let t_law = self.ident()?;
        self.expect(Tok::RParen)?;
        self.expect(Tok::Arrow)?;
        self.expect(Tok::LParen)?;
        let s_rep = self.ident()?;
        self.expect(Tok::Comma)?;
        let s_law = self.ident()?;
        self.expect(Tok::RParen)?;
        Ok(Decl::PairMap {
            name,
            k,
            zeta,
            alpha,
            t_rep,
            t_law,
            s_rep,
            s_law,
        })
    }

    fn transformation_decl(&mut self) -> PResult<Decl> {
        let name = self.ident()?;
        self.expect(Tok::Colon)?;
        let from = self.ident()?;
        self.expect(Tok::FatArrow)?;
        let to = self.ident()?;
        self.expect(Tok::Equals)?;
        let sigma = self.ident()?;
        Ok(Decl::Transformation {
            name,
            from,
            to,
            sigma,
        })
    }

    fn check(&mut self) -> PResult<Check> {
        let op = self.ident()?;
        let check = match op.as_str() {
            "validate_category" => Check::ValidateCategory(self.ident()?),
            "compose" => {
                let cat = self.ident()?;
                let g = self.unsigned()?;
                let f = self.unsigned()?;
                self.expect(Tok::Equals)?;
                let expect = self.unsigned()?;
                Check::Compose { cat, g, f, expect }
            }
            "validate_functor" => Check::ValidateFunctor(self.ident()?),
            "validate_nat_trans" => Check::ValidateNatTrans(self.ident()?),
            "nat_trans_equal" => {
                let a = self.ident()?;
                let b = self.ident()?;
                self.expect(Tok::Equals)?;
                let v = self.ident()?;
                let expect = match v.as_str() {
                    "true" => true,
                    "false" => false,
                    other => return self.err(format!("expected true or false, found `{other}`")),
                };
                Check::NatTransEqual { a, b, expect }
            }
            "interchange" => Check::Interchange(self.ident()?),
            "power_additivity" => {
                let functor = self.ident()?;
                self.keyword("bound")?;
                Check::PowerAdditivity {
                    functor,
                    bound: self.unsigned()?,
                }
            }
            "count_functors" => {
                let cat = self.ident()?;
                self.expect(Tok::Equals)?;
                Check::CountFunctors {
                    cat,
                    expect: self.unsigned()? as u64,
                }
            }
            "count_nat_trans" => {
                let f = self.ident()?;
                let g = self.ident()?;
                self.expect(Tok::Equals)?;
                Check::CountNatTrans {
                    f,
                    g,
                    expect: self.unsigned()? as u64,
                }
            }
            "count_monads" => {
                let cat = self.ident()?;
                self.expect(Tok::Equals)?;
                Check::CountMonads {
                    cat,
                    expect: self.unsigned()? as u64,
                }
            }
            "count_laws" => {
                let monad = self.ident()?;
                let companion = self.ident()?;
                self.expect(Tok::Equals)?;
                Check::CountLaws {
                    monad,
                    companion,
                    expect: self.unsigned()? as u64,
                }
            }
            "validate_monad" => Check::ValidateMonad(self.ident()?),
            "validate_comonad" => Check::ValidateComonad(self.ident()?),
            "em_count" => {
                let monad = self.ident()?;
                self.expect(Tok::Equals)?;
                Check::EmCount {
                    monad,
                    expect: self.unsigned()? as u64,
                }
            }
            "validate_monad_map" => {
                let alpha = self.ident()?;
                self.expect(Tok::Colon)?;
                let from = self.ident()?;
                self.expect(Tok::Arrow)?;
                let to = self.ident()?;
                Check::ValidateMonadMap { alpha, from, to }
            }
            "monad_map_roundtrip" => Check::MonadMapRoundtrip {
                from: self.ident()?,
                to: self.ident()?,
            },
            "validate_monad_map_across" => Check::ValidateMonadMapAcross(self.ident()?),
            "compose_monad_maps" => Check::ComposeMonadMaps {
                outer: self.ident()?,
                inner: self.ident()?,
            },
            "across_roundtrip" => Check::AcrossRoundtrip(self.ident()?),
            "validate_map_transformation" => Check::ValidateMapTransformation(self.ident()?),
            "transformation_roundtrip" => Check::TransformationRoundtrip(self.ident()?),
            "eps_identity" => Check::EpsIdentity {
                from: self.ident()?,
                to: self.ident()?,
            },
            "validate_dist_law" => Check::ValidateDistLaw(self.ident()?),
            "lift_from_law" => Check::LiftFromLaw(self.ident()?),
            "law_from_lift" => Check::LawFromLift(self.ident()?),
            "beck_roundtrip" => Check::BeckRoundtrip {
                monad: self.ident()?,
                companion: self.ident()?,
            },
            "validate_distr_morphism" => {
                let alpha = self.ident()?;
                self.expect(Tok::Colon)?;
                let from = self.ident()?;
                self.expect(Tok::Arrow)?;
                let to = self.ident()?;
                Check::ValidateDistrMorphism { alpha, from, to }
            }
            "halpha_equivariance" => {
                let alpha = self.ident()?;
                self.expect(Tok::Colon)?;
                let from = self.ident()?;
                self.expect(Tok::Arrow)?;
                let to = self.ident()?;
                Check::HalphaEquivariance { alpha, from, to }
            }
            "mixed_pentagon_h" => Check::MixedPentagonH {
                law: self.ident()?,
                law2: self.ident()?,
            },
            "mixed_pentagon_alpha" => {
                let alpha = self.ident()?;
                self.expect(Tok::Colon)?;
                let from = self.ident()?;
                self.expect(Tok::Arrow)?;
                let to = self.ident()?;
                Check::MixedPentagonAlpha { alpha, from, to }
            }
            "vertical_agreement" => {
                let alpha = self.ident()?;
                self.expect(Tok::Colon)?;
                let from = self.ident()?;
                self.expect(Tok::Arrow)?;
                let to = self.ident()?;
                Check::VerticalAgreement { alpha, from, to }
            }
            "contravariant" => Check::Contravariant(self.ident()?),
            "word_arity" => {
                let pro = self.ident()?;
                self.expect(Tok::Colon)?;
                let word = self.word()?;
                self.expect(Tok::Equals)?;
                let dom = self.unsigned()?;
                self.expect(Tok::Arrow)?;
                let cod = self.unsigned()?;
                Check::WordArity {
                    pro,
                    word,
                    dom,
                    cod,
                }
            }
            "eval_word" => {
                let rep = self.ident()?;
                self.expect(Tok::Colon)?;
                let lhs = self.word()?;
                self.expect(Tok::EqEq)?;
                let rhs = self.word()?;
                Check::EvalWord { rep, lhs, rhs }
            }
            "validate_representation" => Check::ValidateRepresentation(self.ident()?),
            "decomposition" => {
                let law = self.ident()?;
                self.keyword("bound")?;
                Check::Decomposition {
                    law,
                    bound: self.unsigned()?,
                }
            }
            "ln_consistency" => {
                let law = self.ident()?;
                self.keyword("bound")?;
                Check::LnConsistency {
                    law,
                    bound: self.unsigned()?,
                }
            }
            "multigon" => {
                let rep = self.ident()?;
                let gen = self.ident()?;
                let law = self.ident()?;
                self.keyword("edges")?;
                Check::Multigon {
                    rep,
                    gen,
                    law,
                    edges: self.unsigned()? as u64,
                }
            }
            "equivariant_rep" => Check::EquivariantRep {
                rep: self.ident()?,
                law: self.ident()?,
            },
            "validate_pair_map" => Check::ValidatePairMap(self.ident()?),
            "power_lemma" => {
                let outer = self.ident()?;
                let inner = self.ident()?;
                self.keyword("bound")?;
                Check::PowerLemma {
                    outer,
                    inner,
                    bound: self.unsigned()?,
                }
            }
            "compose_pair_maps" => Check::ComposePairMaps {
                outer: self.ident()?,
                inner: self.ident()?,
            },
            "mixed_heptagon" => Check::MixedHeptagon {
                pairmap: self.ident()?,
                gen: self.ident()?,
            },
            "validate_pair_transformation" => Check::ValidatePairTransformation(self.ident()?),
            "cube" => Check::Cube(self.ident()?),
            "yang_baxter" => {
                let law = self.ident()?;
                self.keyword("over")?;
                Check::YangBaxter {
                    law,
                    comonad: self.ident()?,
                }
            }
            "braided_tower" => {
                let law = self.ident()?;
                self.keyword("over")?;
                let comonad = self.ident()?;
                self.keyword("bound")?;
                Check::BraidedTower {
                    law,
                    comonad,
                    bound: self.unsigned()?,
                }
            }
            "builtin_pros" => Check::BuiltinPros,
            other => return self.err(format!("unknown check operation `{other}`")),
        };
        Ok(check)
    }
}

/// Parses a whole document, reporting the first error with its position.
pub fn parse_document(text: &str) -> Result<Document, ParseError> {
    let tokens = lex(text).map_err(|e| ParseError {
        line: e.pos.line,
        col: e.pos.col,
        message: e.message,
    })?;
    let mut parser = Parser { tokens, pos: 0 };
    let mut items = Vec::new();
    let mut spans = Vec::new();
    loop {
        while parser.eat(&Tok::Newline) {}
        if parser.peek().is_none() {
            break;
        }
        let pos = parser.here();
        let item = parser.statement()?;
        items.push(item);
        spans.push((pos.line, pos.col));
    }
    Ok(Document { items, spans })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_a_small_document() {
        let doc = parse_document(
            "# demo\ncategory C3 = poset chain 3\nmonad T on C3 = closure [1, 1, 2]\ncheck validate_monad T\n",
        )
        .unwrap();
        assert_eq!(doc.items.len(), 3);
        assert_eq!(doc.spans[0], (2, 1));
        assert!(matches!(
            &doc.items[2],
            Item::Check(Check::ValidateMonad(name)) if name == "T"
        ));
    }

    #[test]
    fn parses_words_with_precedence() {
        let doc = parse_document("check word_arity P : (eps + id 1) . delta = 1 -> 1\n").unwrap();
        match &doc.items[0] {
            Item::Check(Check::WordArity { word, .. }) => {
                assert_eq!(
                    *word,
                    ProWord::seq(
                        ProWord::par(ProWord::gen("eps"), ProWord::Id(1)),
                        ProWord::gen("delta")
                    )
                );
            }
            other => panic!("unexpected item {other:?}"),
        }
    }

    #[test]
    fn error_carries_position() {
        let err = parse_document("category C3 = poset chain\n").unwrap_err();
        assert_eq!(err.line, 1);
        assert_eq!(err.col, 26);
    }
}
