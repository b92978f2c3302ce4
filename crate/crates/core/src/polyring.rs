//! Exact multivariate polynomial arithmetic over the prime field F_p.
//!
//! Polynomials are immutable canonical values: terms are stored with nonzero
//! coefficients in [0, p), strictly descending in the ring's term order. Every
//! operation that can grow degrees checks the ring's total-degree cap and
//! reports an explicit error instead of truncating.

use alloc::string::{String, ToString};
use alloc::sync::Arc;
use alloc::vec::Vec;
use alloc::{format, vec};
use core::cmp::Ordering;
use core::fmt;

use crate::error::{Error, Result};

/// A residue in F_p together with its modulus.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct FpScalar {
    value: u64,
    p: u64,
}

impl FpScalar {
    /// Reduce an integer mod p.
    pub fn new(value: i128, p: u64) -> Self {
        let m = p as i128;
        let mut v = value % m;
        if v < 0 {
            v += m;
        }
        FpScalar { value: v as u64, p }
    }

    pub fn zero(p: u64) -> Self {
        FpScalar { value: 0, p }
    }

    pub fn one(p: u64) -> Self {
        FpScalar { value: 1 % p, p }
    }

    pub fn value(&self) -> u64 {
        self.value
    }

    pub fn modulus(&self) -> u64 {
        self.p
    }

    pub fn is_zero(&self) -> bool {
        self.value == 0
    }

    pub fn add(&self, other: &FpScalar) -> FpScalar {
        debug_assert_eq!(self.p, other.p);
        FpScalar {
            value: (self.value + other.value) % self.p,
            p: self.p,
        }
    }

    pub fn sub(&self, other: &FpScalar) -> FpScalar {
        debug_assert_eq!(self.p, other.p);
        FpScalar {
            value: (self.value + self.p - other.value) % self.p,
            p: self.p,
        }
    }

    pub fn neg(&self) -> FpScalar {
        FpScalar {
            value: (self.p - self.value) % self.p,
            p: self.p,
        }
    }

    pub fn mul(&self, other: &FpScalar) -> FpScalar {
        debug_assert_eq!(self.p, other.p);
        let prod = (self.value as u128 * other.value as u128) % self.p as u128;
        FpScalar {
            value: prod as u64,
            p: self.p,
        }
    }

    pub fn pow(&self, mut n: u64) -> FpScalar {
        let mut base = *self;
        let mut acc = FpScalar::one(self.p);
        while n > 0 {
            if n & 1 == 1 {
                acc = acc.mul(&base);
            }
            base = base.mul(&base);
            n >>= 1;
        }
        acc
    }

    /// Multiplicative inverse via Fermat; the caller guarantees nonzero.
    pub fn inv(&self) -> FpScalar {
        debug_assert!(!self.is_zero());
        self.pow(self.p - 2)
    }
}

/// An exponent vector; its length always equals the ambient variable count.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Monomial {
    exps: Vec<u32>,
}

impl Monomial {
    pub fn new(exps: Vec<u32>) -> Self {
        Monomial { exps }
    }

    pub fn one(nvars: usize) -> Self {
        Monomial {
            exps: vec![0; nvars],
        }
    }

    pub fn var(nvars: usize, index: usize) -> Self {
        let mut exps = vec![0; nvars];
        exps[index] = 1;
        Monomial { exps }
    }

    pub fn exponents(&self) -> &[u32] {
        &self.exps
    }

    pub fn degree(&self) -> u64 {
        self.exps.iter().map(|&e| e as u64).sum()
    }

    pub fn is_one(&self) -> bool {
        self.exps.iter().all(|&e| e == 0)
    }

    pub fn is_squarefree(&self) -> bool {
        self.exps.iter().all(|&e| e <= 1)
    }

    /// Indices of variables occurring with positive exponent.
    pub fn support(&self) -> impl Iterator<Item = usize> + '_ {
        self.exps
            .iter()
            .enumerate()
            .filter(|(_, &e)| e > 0)
            .map(|(i, _)| i)
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        Monomial {
            exps: self
                .exps
                .iter()
                .zip(&other.exps)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.exps.iter().zip(&other.exps).all(|(a, b)| a <= b)
    }

    /// other / self, assuming divisibility.
    pub fn quotient_into(&self, other: &Monomial) -> Monomial {
        Monomial {
            exps: other
                .exps
                .iter()
                .zip(&self.exps)
                .map(|(b, a)| b - a)
                .collect(),
        }
    }

    /// Componentwise max(self - other, 0), the monomial colon.
    pub fn colon(&self, other: &Monomial) -> Monomial {
        Monomial {
            exps: self
                .exps
                .iter()
                .zip(&other.exps)
                .map(|(a, b)| a.saturating_sub(*b))
                .collect(),
        }
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        Monomial {
            exps: self
                .exps
                .iter()
                .zip(&other.exps)
                .map(|(a, b)| *a.max(b))
                .collect(),
        }
    }

    pub fn gcd(&self, other: &Monomial) -> Monomial {
        Monomial {
            exps: self
                .exps
                .iter()
                .zip(&other.exps)
                .map(|(a, b)| *a.min(b))
                .collect(),
        }
    }

    pub fn coprime(&self, other: &Monomial) -> bool {
        self.exps
            .iter()
            .zip(&other.exps)
            .all(|(a, b)| *a == 0 || *b == 0)
    }

    /// Scale every exponent by q.
    pub fn power_scale(&self, q: u64) -> Result<Monomial> {
        let mut exps = Vec::with_capacity(self.exps.len());
        for &e in &self.exps {
            let scaled = (e as u64).saturating_mul(q);
            if scaled > u32::MAX as u64 {
                return Err(Error::DegreeCapExceeded {
                    degree: scaled,
                    cap: u32::MAX as u64,
                });
            }
            exps.push(scaled as u32);
        }
        Ok(Monomial { exps })
    }

    /// Split each exponent as e = q*quotient + remainder with remainder < q.
    pub fn split_mod(&self, q: u64) -> (Monomial, Monomial) {
        let mut quo = Vec::with_capacity(self.exps.len());
        let mut rem = Vec::with_capacity(self.exps.len());
        for &e in &self.exps {
            quo.push((e as u64 / q) as u32);
            rem.push((e as u64 % q) as u32);
        }
        (Monomial { exps: quo }, Monomial { exps: rem })
    }
}

/// Total orders on monomials compatible with multiplication.
///
/// `Block { first }` eliminates the leading `first` variables: both blocks are
/// compared by graded reverse lex, the leading block first.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TermOrder {
    GrevLex,
    Lex,
    Block { first: usize },
}

fn grevlex_cmp(a: &[u32], b: &[u32]) -> Ordering {
    let da: u64 = a.iter().map(|&e| e as u64).sum();
    let db: u64 = b.iter().map(|&e| e as u64).sum();
    match da.cmp(&db) {
        Ordering::Equal => {
            for (x, y) in a.iter().zip(b.iter()).rev() {
                match x.cmp(y) {
                    Ordering::Equal => continue,
                    // rightmost difference: smaller exponent wins
                    Ordering::Less => return Ordering::Greater,
                    Ordering::Greater => return Ordering::Less,
                }
            }
            Ordering::Equal
        }
        other => other,
    }
}

impl TermOrder {
    pub fn cmp(&self, a: &Monomial, b: &Monomial) -> Ordering {
        match self {
            TermOrder::GrevLex => grevlex_cmp(&a.exps, &b.exps),
            TermOrder::Lex => {
                for (x, y) in a.exps.iter().zip(&b.exps) {
                    match x.cmp(y) {
                        Ordering::Equal => continue,
                        other => return other,
                    }
                }
                Ordering::Equal
            }
            TermOrder::Block { first } => {
                let k = *first;
                match grevlex_cmp(&a.exps[..k], &b.exps[..k]) {
                    Ordering::Equal => grevlex_cmp(&a.exps[k..], &b.exps[k..]),
                    other => other,
                }
            }
        }
    }
}

fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    if p.is_multiple_of(2) {
        return p == 2;
    }
    let mut d = 3;
    while d * d <= p {
        if p.is_multiple_of(d) {
            return false;
        }
        d += 2;
    }
    true
}

fn valid_var_name(name: &str) -> bool {
    let mut chars = name.chars();
    match chars.next() {
        Some(c) if c.is_ascii_alphabetic() || c == '_' => {}
        _ => return false,
    }
    chars.all(|c| c.is_ascii_alphanumeric() || c == '_')
}

/// The default total-degree cap guarding q = p^e exponent blowup.
pub const DEFAULT_DEGREE_CAP: u64 = 512;

/// A polynomial ring F_p[x_1..x_n] with a fixed term order and degree cap.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PolyRing {
    p: u64,
    vars: Vec<String>,
    order: TermOrder,
    degree_cap: u64,
}

impl PolyRing {
    pub fn new(p: u64, vars: &[&str], order: TermOrder, degree_cap: u64) -> Result<Arc<Self>> {
        if !is_prime(p) {
            return Err(Error::InvalidArgument(format!("{p} is not prime")));
        }
        if vars.is_empty() {
            return Err(Error::InvalidArgument("no variables declared".into()));
        }
        for (i, v) in vars.iter().enumerate() {
            if !valid_var_name(v) {
                return Err(Error::InvalidArgument(format!("bad variable name `{v}`")));
            }
            if vars[..i].contains(v) {
                return Err(Error::InvalidArgument(format!("duplicate variable `{v}`")));
            }
        }
        if degree_cap == 0 {
            return Err(Error::InvalidArgument("degree cap must be positive".into()));
        }
        if let TermOrder::Block { first } = order {
            if first == 0 || first >= vars.len() {
                return Err(Error::InvalidArgument("bad elimination block size".into()));
            }
        }
        Ok(Arc::new(PolyRing {
            p,
            vars: vars.iter().map(|v| v.to_string()).collect(),
            order,
            degree_cap,
        }))
    }

    /// Constructor for internal helper rings whose variable names are
    /// deliberately unparseable (auxiliary elimination variables).
    pub(crate) fn new_internal(
        p: u64,
        vars: &[&str],
        order: TermOrder,
        degree_cap: u64,
    ) -> Result<Arc<Self>> {
        Ok(Arc::new(PolyRing {
            p,
            vars: vars.iter().map(|v| v.to_string()).collect(),
            order,
            degree_cap,
        }))
    }

    pub fn prime(&self) -> u64 {
        self.p
    }

    pub fn variables(&self) -> &[String] {
        &self.vars
    }

    pub fn nvars(&self) -> usize {
        self.vars.len()
    }

    pub fn order(&self) -> TermOrder {
        self.order
    }

    pub fn degree_cap(&self) -> u64 {
        self.degree_cap
    }

    pub fn variable_index(&self, name: &str) -> Option<usize> {
        self.vars.iter().position(|v| v == name)
    }

    /// Structural compatibility for mixed-operand checks; the degree cap is
    /// an operational limit, not part of the ring's identity.
    pub fn compatible(&self, other: &PolyRing) -> bool {
        self.p == other.p && self.vars == other.vars && self.order == other.order
    }

    pub fn cmp_monomials(&self, a: &Monomial, b: &Monomial) -> Ordering {
        self.order.cmp(a, b)
    }
}

/// Builds polynomials bound to a shared ring handle.
pub trait RingHandle {
    fn zero_poly(&self) -> Polynomial;
    fn one_poly(&self) -> Polynomial;
    fn constant(&self, c: i128) -> Polynomial;
    fn var_poly(&self, index: usize) -> Polynomial;
    fn parse(&self, text: &str) -> Result<Polynomial>;
}

impl RingHandle for Arc<PolyRing> {
    fn zero_poly(&self) -> Polynomial {
        Polynomial {
            ring: self.clone(),
            terms: Vec::new(),
        }
    }

    fn one_poly(&self) -> Polynomial {
        self.constant(1)
    }

    fn constant(&self, c: i128) -> Polynomial {
        let s = FpScalar::new(c, self.p);
        if s.is_zero() {
            return self.zero_poly();
        }
        Polynomial {
            ring: self.clone(),
            terms: vec![(Monomial::one(self.nvars()), s)],
        }
    }

    fn var_poly(&self, index: usize) -> Polynomial {
        Polynomial {
            ring: self.clone(),
            terms: vec![(Monomial::var(self.nvars(), index), FpScalar::one(self.p))],
        }
    }

    fn parse(&self, text: &str) -> Result<Polynomial> {
        parse_polynomial(self, text)
    }
}

/// An element of the ambient polynomial ring in canonical form.
#[derive(Debug, Clone)]
pub struct Polynomial {
    ring: Arc<PolyRing>,
    terms: Vec<(Monomial, FpScalar)>,
}

impl PartialEq for Polynomial {
    fn eq(&self, other: &Self) -> bool {
        self.ring.compatible(&other.ring) && self.terms == other.terms
    }
}

impl Eq for Polynomial {}

impl Polynomial {
    /// Canonicalize raw terms: merge duplicates, drop zeros, sort descending,
    /// and enforce the degree cap.
    pub fn from_terms(ring: &Arc<PolyRing>, raw: Vec<(Monomial, FpScalar)>) -> Result<Polynomial> {
        let n = ring.nvars();
        let mut acc: alloc::collections::BTreeMap<Monomial, FpScalar> =
            alloc::collections::BTreeMap::new();
        for (m, c) in raw {
            if m.exponents().len() != n {
                return Err(Error::RingMismatch);
            }
            let entry = acc.entry(m).or_insert_with(|| FpScalar::zero(ring.p));
            *entry = entry.add(&c);
        }
        let mut terms: Vec<(Monomial, FpScalar)> =
            acc.into_iter().filter(|(_, c)| !c.is_zero()).collect();
        for (m, _) in &terms {
            let d = m.degree();
            if d > ring.degree_cap {
                return Err(Error::DegreeCapExceeded {
                    degree: d,
                    cap: ring.degree_cap,
                });
            }
        }
        terms.sort_by(|(a, _), (b, _)| ring.cmp_monomials(b, a));
        Ok(Polynomial {
            ring: ring.clone(),
            terms,
        })
    }

    pub fn ring(&self) -> &Arc<PolyRing> {
        &self.ring
    }

    pub fn terms(&self) -> &[(Monomial, FpScalar)] {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Single-term test; constants count as monomials.
    pub fn is_monomial(&self) -> bool {
        self.terms.len() == 1
    }

    pub fn is_constant(&self) -> bool {
        self.terms.is_empty() || (self.terms.len() == 1 && self.terms[0].0.is_one())
    }

    pub fn leading(&self) -> Option<&(Monomial, FpScalar)> {
        self.terms.first()
    }

    pub fn leading_monomial(&self) -> Option<&Monomial> {
        self.terms.first().map(|(m, _)| m)
    }

    /// Total degree, None for zero.
    pub fn total_degree(&self) -> Option<u64> {
        self.terms.iter().map(|(m, _)| m.degree()).max()
    }

    pub fn is_homogeneous(&self) -> bool {
        match self.terms.first() {
            None => true,
            Some((m0, _)) => {
                let d = m0.degree();
                self.terms.iter().all(|(m, _)| m.degree() == d)
            }
        }
    }

    fn check_ring(&self, other: &Polynomial) -> Result<()> {
        if self.ring.compatible(&other.ring) {
            Ok(())
        } else {
            Err(Error::RingMismatch)
        }
    }

    pub fn add(&self, other: &Polynomial) -> Result<Polynomial> {
        self.check_ring(other)?;
        let mut raw = self.terms.clone();
        raw.extend(other.terms.iter().cloned());
        Polynomial::from_terms(&self.ring, raw)
    }

    pub fn sub(&self, other: &Polynomial) -> Result<Polynomial> {
        self.check_ring(other)?;
        let mut raw = self.terms.clone();
        raw.extend(other.terms.iter().map(|(m, c)| (m.clone(), c.neg())));
        Polynomial::from_terms(&self.ring, raw)
    }

    pub fn neg(&self) -> Polynomial {
        Polynomial {
            ring: self.ring.clone(),
            terms: self
                .terms
                .iter()
                .map(|(m, c)| (m.clone(), c.neg()))
                .collect(),
        }
    }

    pub fn mul(&self, other: &Polynomial) -> Result<Polynomial> {
        self.check_ring(other)?;
        // cheap pre-check keeps huge products from being materialized
        if let (Some(da), Some(db)) = (self.total_degree(), other.total_degree()) {
            let bound = da.saturating_add(db);
            if bound > self.ring.degree_cap {
                return Err(Error::DegreeCapExceeded {
                    degree: bound,
                    cap: self.ring.degree_cap,
                });
            }
        }
        let mut raw = Vec::with_capacity(self.terms.len() * other.terms.len());
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                raw.push((ma.mul(mb), ca.mul(cb)));
            }
        }
        Polynomial::from_terms(&self.ring, raw)
    }

    /// Multiply by a single term.
    pub fn mul_term(&self, m: &Monomial, c: &FpScalar) -> Result<Polynomial> {
        if c.is_zero() {
            return Ok(self.ring.zero_poly());
        }
        let raw = self
            .terms
            .iter()
            .map(|(mm, cc)| (mm.mul(m), cc.mul(c)))
            .collect();
        Polynomial::from_terms(&self.ring, raw)
    }

    pub fn scale(&self, c: &FpScalar) -> Polynomial {
        if c.is_zero() {
            return self.ring.zero_poly();
        }
        Polynomial {
            ring: self.ring.clone(),
            terms: self
                .terms
                .iter()
                .map(|(m, cc)| (m.clone(), cc.mul(c)))
                .collect(),
        }
    }

    /// Normalize the leading coefficient to 1.
    pub fn monic(&self) -> Polynomial {
        match self.leading() {
            None => self.clone(),
            Some((_, c)) => self.scale(&c.inv()),
        }
    }

    pub fn pow(&self, n: u32) -> Result<Polynomial> {
        let mut acc = self.ring.one_poly();
        for _ in 0..n {
            acc = acc.mul(self)?;
        }
        Ok(acc)
    }

    /// f^(p^e) computed termwise: exponents scale by p^e and F_p coefficients
    /// are fixed by the Frobenius.
    pub fn frobenius_pow(&self, e: u32) -> Result<Polynomial> {
        let q = checked_q(self.ring.p, e)?;
        let raw = self
            .terms
            .iter()
            .map(|(m, c)| Ok((m.power_scale(q)?, *c)))
            .collect::<Result<Vec<_>>>()?;
        Polynomial::from_terms(&self.ring, raw)
    }
}

/// p^e with overflow detection.
pub fn checked_q(p: u64, e: u32) -> Result<u64> {
    p.checked_pow(e).ok_or(Error::InvalidLevel(e))
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let vars = self.ring.variables();
        for (i, (m, c)) in self.terms.iter().enumerate() {
            if i > 0 {
                write!(f, " + ")?;
            }
            if m.is_one() {
                write!(f, "{}", c.value())?;
                continue;
            }
            let mut lead = true;
            if c.value() != 1 {
                write!(f, "{}*", c.value())?;
            }
            for (vi, &e) in m.exponents().iter().enumerate() {
                if e == 0 {
                    continue;
                }
                if !lead {
                    write!(f, "*")?;
                }
                lead = false;
                if e == 1 {
                    write!(f, "{}", vars[vi])?;
                } else {
                    write!(f, "{}^{}", vars[vi], e)?;
                }
            }
        }
        Ok(())
    }
}

// ------------------------------------------------------------------
// Parsing
// ------------------------------------------------------------------

#[derive(Debug, Clone, PartialEq)]
enum Token {
    Number(u128),
    Ident(String),
    Plus,
    Minus,
    Star,
    Caret,
    LParen,
    RParen,
}

fn tokenize(text: &str) -> Result<Vec<Token>> {
    let mut tokens = Vec::new();
    let bytes: Vec<char> = text.chars().collect();
    let mut i = 0;
    while i < bytes.len() {
        let c = bytes[i];
        match c {
            ' ' | '\t' | '\n' | '\r' => i += 1,
            '+' => {
                tokens.push(Token::Plus);
                i += 1;
            }
            '-' => {
                tokens.push(Token::Minus);
                i += 1;
            }
            '*' => {
                tokens.push(Token::Star);
                i += 1;
            }
            '^' => {
                tokens.push(Token::Caret);
                i += 1;
            }
            '(' => {
                tokens.push(Token::LParen);
                i += 1;
            }
            ')' => {
                tokens.push(Token::RParen);
                i += 1;
            }
            '0'..='9' => {
                let start = i;
                while i < bytes.len() && bytes[i].is_ascii_digit() {
                    i += 1;
                }
                let s: String = bytes[start..i].iter().collect();
                let n: u128 = s
                    .parse()
                    .map_err(|_| Error::Parse(format!("number `{s}` too large")))?;
                tokens.push(Token::Number(n));
            }
            c if c.is_ascii_alphabetic() || c == '_' => {
                let start = i;
                while i < bytes.len() && (bytes[i].is_ascii_alphanumeric() || bytes[i] == '_') {
                    i += 1;
                }
                tokens.push(Token::Ident(bytes[start..i].iter().collect()));
            }
            other => {
                return Err(Error::Parse(format!(
                    "unexpected character `{other}` at offset {i}"
                )))
            }
        }
    }
    Ok(tokens)
}

struct Parser<'a> {
    ring: &'a Arc<PolyRing>,
    tokens: Vec<Token>,
    pos: usize,
}

impl<'a> Parser<'a> {
    fn peek(&self) -> Option<&Token> {
        self.tokens.get(self.pos)
    }

    fn next(&mut self) -> Option<Token> {
        let t = self.tokens.get(self.pos).cloned();
        if t.is_some() {
            self.pos += 1;
        }
        t
    }

    // expr := term (('+' | '-') term)*
    fn expr(&mut self) -> Result<Polynomial> {
        let mut acc = self.term()?;
        while let Some(tok) = self.peek() {
            match tok {
                Token::Plus => {
                    self.pos += 1;
                    acc = acc.add(&self.term()?)?;
                }
                Token::Minus => {
                    self.pos += 1;
                    acc = acc.sub(&self.term()?)?;
                }
                _ => break,
            }
        }
        Ok(acc)
    }

    // term := ('-')* factor ('*' factor)*
    fn term(&mut self) -> Result<Polynomial> {
        let mut negate = false;
        while self.peek() == Some(&Token::Minus) {
            self.pos += 1;
            negate = !negate;
        }
        let mut acc = self.factor()?;
        while self.peek() == Some(&Token::Star) {
            self.pos += 1;
            acc = acc.mul(&self.factor()?)?;
        }
        Ok(if negate { acc.neg() } else { acc })
    }

    // factor := atom ('^' number)?
    fn factor(&mut self) -> Result<Polynomial> {
        let base = self.atom()?;
        if self.peek() == Some(&Token::Caret) {
            self.pos += 1;
            match self.next() {
                Some(Token::Number(n)) => {
                    let n32: u32 = n
                        .try_into()
                        .map_err(|_| Error::Parse("exponent too large".into()))?;
                    if let Some(d) = base.total_degree() {
                        let target = d.saturating_mul(n32 as u64);
                        if target > self.ring.degree_cap() {
                            return Err(Error::DegreeCapExceeded {
                                degree: target,
                                cap: self.ring.degree_cap(),
                            });
                        }
                    }
                    base.pow(n32)
                }
                other => Err(Error::Parse(format!("expected exponent, got {other:?}"))),
            }
        } else {
            Ok(base)
        }
    }

    fn atom(&mut self) -> Result<Polynomial> {
        match self.next() {
            Some(Token::Number(n)) => {
                Ok(self.ring.constant((n % self.ring.prime() as u128) as i128))
            }
            Some(Token::Ident(name)) => match self.ring.variable_index(&name) {
                Some(i) => Ok(self.ring.var_poly(i)),
                None => Err(Error::UnknownVariable(name)),
            },
            Some(Token::LParen) => {
                let inner = self.expr()?;
                match self.next() {
                    Some(Token::RParen) => Ok(inner),
                    _ => Err(Error::Parse("missing `)`".into())),
                }
            }
            other => Err(Error::Parse(format!("unexpected token {other:?}"))),
        }
    }
}

fn parse_polynomial(ring: &Arc<PolyRing>, text: &str) -> Result<Polynomial> {
    let tokens = tokenize(text)?;
    if tokens.is_empty() {
        return Err(Error::Parse("empty polynomial".into()));
    }
    let mut parser = Parser {
        ring,
        tokens,
        pos: 0,
    };
    let poly = parser.expr()?;
    if parser.pos != parser.tokens.len() {
        return Err(Error::Parse(format!(
            "trailing input at token {}",
            parser.pos
        )));
    }
    Ok(poly)
}
