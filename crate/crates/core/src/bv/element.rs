//! Basis monomials, linear combinations, and the BV algebra operations
//! (product, bracket, `Δ`) on normal forms.
//!
//! Degrees are homological: a bracket and a `Δ` each add one. A monomial is
//! a product of blocks; a block is a left-normed comb `[[l_0, l_1], ..., l_k]`
//! whose first letter carries the smallest generator, and blocks are sorted
//! by smallest generator. A letter is `x_k` or `Δx_k`.

use std::collections::btree_map::Entry;
use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::lie::bracket_combs;
use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Letter {
    pub gen: usize,
    pub delta: bool,
}

impl Letter {
    pub fn plain(gen: usize) -> Self {
        Letter { gen, delta: false }
    }

    pub fn decorated(gen: usize) -> Self {
        Letter { gen, delta: true }
    }

    pub fn degree(self) -> usize {
        self.delta as usize
    }

    /// Parity of the shifted degree `|l| + 1`.
    pub(crate) fn shifted_odd(self) -> bool {
        !self.delta
    }
}

impl fmt::Display for Letter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.delta {
            write!(f, "D(x{})", self.gen)
        } else {
            write!(f, "x{}", self.gen)
        }
    }
}

/// A left-normed bracket comb; the first letter has the smallest generator.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Comb(Vec<Letter>);

impl Comb {
    pub(crate) fn from_letters(letters: Vec<Letter>) -> Self {
        debug_assert!(!letters.is_empty());
        debug_assert!(letters.iter().all(|l| l.gen >= letters[0].gen));
        Comb(letters)
    }

    pub fn letters(&self) -> &[Letter] {
        &self.0
    }

    pub fn min_gen(&self) -> usize {
        self.0[0].gen
    }

    pub fn degree(&self) -> usize {
        self.0.iter().map(|l| l.degree()).sum::<usize>() + self.0.len() - 1
    }

    pub(crate) fn shifted_odd(&self) -> bool {
        self.0.iter().filter(|l| l.shifted_odd()).count() % 2 == 1
    }

    /// `Δ` of a comb, using that `Δ` is a derivation of the bracket:
    /// `Δ[u, v] = [Δu, v] + (-1)^{|u|+1} [u, Δv]`.
    fn delta(&self) -> Vec<(Comb, i64)> {
        fn rec(letters: &[Letter]) -> Vec<(Vec<Letter>, i64)> {
            let (&last, init) = letters.split_last().expect("nonempty comb");
            if init.is_empty() {
                return if last.delta { vec![] } else { vec![(vec![Letter::decorated(last.gen)], 1)] };
            }
            let mut out: Vec<(Vec<Letter>, i64)> = rec(init)
                .into_iter()
                .map(|(mut w, s)| {
                    w.push(last);
                    (w, s)
                })
                .collect();
            if !last.delta {
                let deg_init = Comb(init.to_vec()).degree();
                let mut w = init.to_vec();
                w.push(Letter::decorated(last.gen));
                out.push((w, sign(deg_init + 1)));
            }
            out
        }
        rec(&self.0).into_iter().map(|(w, s)| (Comb(w), s)).collect()
    }
}

impl fmt::Display for Comb {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut s = self.0[0].to_string();
        for l in &self.0[1..] {
            s = format!("[{s},{l}]");
        }
        f.write_str(&s)
    }
}

/// A product of combs on pairwise distinct generators, in normal order.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Monomial(Vec<Comb>);

impl Monomial {
    pub fn unit() -> Self {
        Monomial(Vec::new())
    }

    pub fn generator(gen: usize) -> Self {
        Monomial(vec![Comb(vec![Letter::plain(gen)])])
    }

    pub fn letter(l: Letter) -> Self {
        Monomial(vec![Comb(vec![l])])
    }

    /// Blocks must already be in normal order.
    pub(crate) fn from_raw(blocks: Vec<Comb>) -> Self {
        debug_assert!(blocks.windows(2).all(|w| w[0].min_gen() < w[1].min_gen()));
        Monomial(blocks)
    }

    pub(crate) fn from_comb(c: Comb) -> Self {
        Monomial(vec![c])
    }

    /// Sorts blocks into normal order, returning the Koszul sign; `None` if
    /// a generator occurs twice.
    pub(crate) fn from_blocks(mut blocks: Vec<Comb>) -> Option<(Monomial, i64)> {
        let mut gens: Vec<usize> = blocks.iter().flat_map(|b| b.0.iter().map(|l| l.gen)).collect();
        gens.sort_unstable();
        if gens.windows(2).any(|w| w[0] == w[1]) {
            return None;
        }
        let mut s = 1;
        for i in 1..blocks.len() {
            let mut j = i;
            while j > 0 && blocks[j - 1].min_gen() > blocks[j].min_gen() {
                s *= sign(blocks[j - 1].degree() * blocks[j].degree());
                blocks.swap(j - 1, j);
                j -= 1;
            }
        }
        Some((Monomial(blocks), s))
    }

    pub fn blocks(&self) -> &[Comb] {
        &self.0
    }

    pub fn degree(&self) -> usize {
        self.0.iter().map(Comb::degree).sum()
    }

    /// Sorted generators occurring in the monomial.
    pub fn generators(&self) -> Vec<usize> {
        let mut g: Vec<usize> = self.0.iter().flat_map(|b| b.0.iter().map(|l| l.gen)).collect();
        g.sort_unstable();
        g
    }

    /// Letters in reading order.
    pub fn letters(&self) -> impl Iterator<Item = Letter> + '_ {
        self.0.iter().flat_map(|b| b.0.iter().copied())
    }

    fn split_first(&self) -> (Monomial, Monomial) {
        (Monomial(vec![self.0[0].clone()]), Monomial(self.0[1..].to_vec()))
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return f.write_str("1");
        }
        let parts: Vec<String> = self.0.iter().map(Comb::to_string).collect();
        f.write_str(&parts.join("*"))
    }
}

pub(crate) fn sign(k: usize) -> i64 {
    if k % 2 == 0 {
        1
    } else {
        -1
    }
}

/// Linear combinations of monomials with exact coefficients, zero terms
/// dropped.
pub(crate) type Terms = BTreeMap<Monomial, BigRational>;

pub(crate) fn add_term(t: &mut Terms, m: Monomial, c: BigRational) {
    match t.entry(m) {
        Entry::Occupied(mut e) => {
            *e.get_mut() += c;
            if e.get().is_zero() {
                e.remove();
            }
        }
        Entry::Vacant(e) => {
            if !c.is_zero() {
                e.insert(c);
            }
        }
    }
}

pub(crate) fn rat(k: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(k))
}

pub(crate) fn single(m: Monomial) -> Terms {
    Terms::from([(m, BigRational::one())])
}

pub(crate) fn scale(t: &Terms, c: &BigRational) -> Terms {
    if c.is_zero() {
        return Terms::new();
    }
    t.iter().map(|(m, v)| (m.clone(), v * c)).collect()
}

pub(crate) fn add_into(acc: &mut Terms, t: Terms) {
    for (m, c) in t {
        add_term(acc, m, c);
    }
}

fn overlap(a: &Monomial, b: &Monomial) -> Option<usize> {
    let gb = b.generators();
    a.generators().into_iter().find(|g| gb.binary_search(g).is_ok())
}

fn reuse(g: usize) -> Error {
    Error::MalformedTerm(format!("generator x{g} used more than once"))
}

fn product_mono(a: &Monomial, b: &Monomial) -> Result<(Monomial, i64)> {
    let blocks = a.0.iter().chain(&b.0).cloned().collect();
    Monomial::from_blocks(blocks).ok_or_else(|| reuse(overlap(a, b).unwrap_or(0)))
}

pub(crate) fn product(a: &Terms, b: &Terms) -> Result<Terms> {
    let mut out = Terms::new();
    for (ma, ca) in a {
        for (mb, cb) in b {
            let (m, s) = product_mono(ma, mb)?;
            add_term(&mut out, m, ca * cb * rat(s));
        }
    }
    Ok(out)
}

/// Bracket of monomials on disjoint generators, by the Leibniz rule
/// `[a, bc] = [a, b]c + (-1)^{(|a|+1)|b|} b[a, c]` and antisymmetry
/// `[a, b] = -(-1)^{(|a|+1)(|b|+1)} [b, a]`.
fn bracket_mono(a: &Monomial, b: &Monomial) -> Terms {
    if a.0.is_empty() || b.0.is_empty() {
        return Terms::new();
    }
    if b.0.len() >= 2 {
        let (b1, rest) = b.split_first();
        let left = product(&bracket_mono(a, &b1), &single(rest.clone())).expect("disjoint");
        let right = product(&single(b1.clone()), &bracket_mono(a, &rest)).expect("disjoint");
        let mut out = left;
        add_into(&mut out, scale(&right, &rat(sign((a.degree() + 1) * b1.degree()))));
        return out;
    }
    if a.0.len() >= 2 {
        let s = -sign((a.degree() + 1) * (b.degree() + 1));
        return scale(&bracket_mono(b, a), &rat(s));
    }
    let mut out = Terms::new();
    for (c, k) in bracket_combs(&a.0[0], &b.0[0]) {
        add_term(&mut out, Monomial::from_comb(c), rat(k));
    }
    out
}

pub(crate) fn bracket(a: &Terms, b: &Terms) -> Result<Terms> {
    let mut out = Terms::new();
    for (ma, ca) in a {
        for (mb, cb) in b {
            if let Some(g) = overlap(ma, mb) {
                return Err(reuse(g));
            }
            add_into(&mut out, scale(&bracket_mono(ma, mb), &(ca * cb)));
        }
    }
    Ok(out)
}

/// `Δ(b R) = Δ(b) R + (-1)^{|b|} b Δ(R) + (-1)^{|b|} [b, R]` for the first
/// block `b`.
fn delta_mono(m: &Monomial) -> Terms {
    match m.0.len() {
        0 => Terms::new(),
        1 => {
            let mut out = Terms::new();
            for (c, k) in m.0[0].delta() {
                add_term(&mut out, Monomial::from_comb(c), rat(k));
            }
            out
        }
        _ => {
            let (b1, rest) = m.split_first();
            let s = rat(sign(b1.degree()));
            let mut out = product(&delta_mono(&b1), &single(rest.clone())).expect("disjoint");
            let t2 = product(&single(b1.clone()), &delta_mono(&rest)).expect("disjoint");
            add_into(&mut out, scale(&t2, &s));
            add_into(&mut out, scale(&bracket_mono(&b1, &rest), &s));
            out
        }
    }
}

pub(crate) fn delta(a: &Terms) -> Terms {
    let mut out = Terms::new();
    for (m, c) in a {
        add_into(&mut out, scale(&delta_mono(m), c));
    }
    out
}

/// An element of `H_*(FLD_n)`: a rational combination of basis monomials
/// using each of `x_1, ..., x_n` exactly once.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BVElement {
    arity: usize,
    terms: Terms,
}

impl BVElement {
    pub fn zero(arity: usize) -> Self {
        BVElement { arity, terms: Terms::new() }
    }

    pub fn from_monomial(arity: usize, m: Monomial) -> Result<Self> {
        Self::from_terms(arity, single(m))
    }

    pub(crate) fn from_terms(arity: usize, terms: Terms) -> Result<Self> {
        let expected: Vec<usize> = (1..=arity).collect();
        for m in terms.keys() {
            if m.generators() != expected {
                return Err(Error::MalformedTerm(format!(
                    "{m} does not use each of x1..x{arity} exactly once"
                )));
            }
        }
        Ok(BVElement { arity, terms })
    }

    pub fn arity(&self) -> usize {
        self.arity
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &BigRational)> {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coefficient(&self, m: &Monomial) -> BigRational {
        self.terms.get(m).cloned().unwrap_or_else(BigRational::zero)
    }

    /// The common degree of all terms, if homogeneous and nonzero.
    pub fn degree(&self) -> Option<usize> {
        let mut degs = self.terms.keys().map(Monomial::degree);
        let d = degs.next()?;
        degs.all(|e| e == d).then_some(d)
    }

    /// The degree-`d` component.
    pub fn component(&self, d: usize) -> BVElement {
        let terms = self.terms.iter().filter(|(m, _)| m.degree() == d).map(|(m, c)| (m.clone(), c.clone())).collect();
        BVElement { arity: self.arity, terms }
    }

    pub fn scaled(&self, c: &BigRational) -> BVElement {
        BVElement { arity: self.arity, terms: scale(&self.terms, c) }
    }

    /// The action of `Δ` on the whole operation (`Δ ∘_1 self`).
    pub fn delta(&self) -> BVElement {
        BVElement { arity: self.arity, terms: delta(&self.terms) }
    }
}

impl std::ops::Add for &BVElement {
    type Output = BVElement;
    fn add(self, rhs: &BVElement) -> BVElement {
        assert_eq!(self.arity, rhs.arity, "adding elements of different arity");
        let mut terms = self.terms.clone();
        add_into(&mut terms, rhs.terms.clone());
        BVElement { arity: self.arity, terms }
    }
}

impl std::ops::Sub for &BVElement {
    type Output = BVElement;
    fn sub(self, rhs: &BVElement) -> BVElement {
        self + &(-rhs)
    }
}

impl std::ops::Neg for &BVElement {
    type Output = BVElement;
    fn neg(self) -> BVElement {
        self.scaled(&rat(-1))
    }
}

pub(crate) fn format_coeff(c: &BigRational) -> String {
    if c.is_integer() {
        c.numer().to_string()
    } else {
        format!("{}/{}", c.numer(), c.denom())
    }
}

impl fmt::Display for BVElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (k, (m, c)) in self.terms.iter().enumerate() {
            let neg = c.is_negative();
            match (k, neg) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            let a = c.abs();
            if !a.is_one() {
                write!(f, "{}*", format_coeff(&a))?;
            }
            write!(f, "{m}")?;
        }
        Ok(())
    }
}

impl serde::Serialize for BVElement {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        use serde::ser::SerializeStruct;
        #[derive(serde::Serialize)]
        struct Term {
            coeff: String,
            monomial: String,
            degree: usize,
        }
        let terms: Vec<Term> = self
            .terms
            .iter()
            .map(|(m, c)| Term { coeff: format_coeff(c), monomial: m.to_string(), degree: m.degree() })
            .collect();
        let mut st = s.serialize_struct("BVElement", 3)?;
        st.serialize_field("arity", &self.arity)?;
        st.serialize_field("expr", &self.to_string())?;
        st.serialize_field("terms", &terms)?;
        st.end()
    }
}
