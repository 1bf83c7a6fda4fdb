//! The operad of framed little curves at descriptor level.
//!
//! `FLC_n` is `(Mbar_{0,n+1}, boundary, (L_0, ..., L_n))_log` for `n >= 2`
//! and the log point for `n = 1`. Composition maps are monomial maps into
//! the pullback of the target log structure to the grafted stratum: each
//! cotangent label is matched to a cotangent label of one factor and the
//! normal bundle of the new node goes to the quadratic monomial
//! `L_i ⊠ L_0`.
//!
//! Most checks here run on [`FlcPoint`]s: the generic point of a stratum,
//! with every coordinate of the pulled-back log structure written as a
//! monomial in formal variables. Composing generic points is the same
//! computation as composing the monomial maps.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use num_rational::BigRational;
use num_traits::{One, Zero};
use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::logspace::{
    pullback_along_stratum, tree_stratum, BundleLabel, Component, Dims, LogStructureMap,
    Monomial, NCLogDescriptor, UnderlyingMap,
};
use crate::trees::{enumerate_all_trees, LeafSet, Permutation, StableTree};

/// `FLC_n` as a log descriptor.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FlcSpace {
    arity: usize,
    descriptor: NCLogDescriptor,
}

impl FlcSpace {
    pub fn arity(&self) -> usize {
        self.arity
    }

    pub fn descriptor(&self) -> &NCLogDescriptor {
        &self.descriptor
    }

    pub fn dims(&self) -> Dims {
        self.descriptor.dims()
    }
}

pub fn flc_space(n: usize) -> Result<FlcSpace> {
    let descriptor = match n {
        0 => return Err(Error::Arity { got: 0, min: 1 }),
        1 => NCLogDescriptor::ptlog(),
        n => NCLogDescriptor::moduli(n, (0..=n).map(BundleLabel::cotangent).collect())?,
    };
    Ok(FlcSpace { arity: n, descriptor })
}

/// A coordinate of the pulled-back log structure on a stratum.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Coord {
    /// Cotangent line at a mark.
    Cotangent(usize),
    /// Normal bundle of the boundary divisor of an internal edge.
    Normal(LeafSet),
    /// The coordinate of `FLC_1 = pt_log`.
    Log,
}

impl Coord {
    pub fn label(&self) -> BundleLabel {
        match self {
            Coord::Cotangent(k) => BundleLabel::cotangent(*k),
            Coord::Normal(s) => BundleLabel::normal(&Component::boundary(s)),
            Coord::Log => BundleLabel::log_point(),
        }
    }
}

impl fmt::Display for Coord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.label())
    }
}

/// A point of a stratum of `FLC_n`, coordinates given as monomials.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct FlcPoint {
    arity: usize,
    /// `None` exactly for arity 1.
    tree: Option<StableTree>,
    coords: BTreeMap<Coord, Monomial>,
}

impl FlcPoint {
    /// Generic point of the stratum `tree`; coordinate `c` is the variable
    /// `name(c)`.
    pub fn generic(tree: &StableTree, name: impl Fn(&Coord) -> BundleLabel) -> Self {
        let n = tree.arity();
        let coords = (0..=n)
            .map(Coord::Cotangent)
            .chain(tree.edge_sets().into_iter().map(Coord::Normal))
            .map(|c| {
                let v = Monomial::var(name(&c));
                (c, v)
            })
            .collect();
        Self { arity: n, tree: Some(tree.clone()), coords }
    }

    /// Generic point of `FLC_1 = pt_log`.
    pub fn generic_unit(name: impl Fn(&Coord) -> BundleLabel) -> Self {
        Self {
            arity: 1,
            tree: None,
            coords: BTreeMap::from([(Coord::Log, Monomial::var(name(&Coord::Log)))]),
        }
    }

    pub fn arity(&self) -> usize {
        self.arity
    }

    pub fn tree(&self) -> Option<&StableTree> {
        self.tree.as_ref()
    }

    pub fn coords(&self) -> &BTreeMap<Coord, Monomial> {
        &self.coords
    }

    fn coord(&self, c: &Coord) -> &Monomial {
        &self.coords[c]
    }

    /// Operadic composition `self ∘_slot inner`.
    pub fn compose(&self, inner: &FlcPoint, slot: usize) -> Result<FlcPoint> {
        let n = self.arity;
        let m = inner.arity;
        if slot == 0 || slot > n {
            return Err(Error::SlotOutOfRange { slot, arity: n });
        }
        let mut coords = BTreeMap::new();
        let out = match (&self.tree, &inner.tree) {
            (None, None) => {
                coords.insert(Coord::Log, self.coord(&Coord::Log).mul(inner.coord(&Coord::Log)));
                FlcPoint { arity: 1, tree: None, coords }
            }
            // left action of the log point: scales L_0
            (None, Some(t)) => {
                let p = self.coord(&Coord::Log);
                for (c, v) in &inner.coords {
                    let v = if *c == Coord::Cotangent(0) { p.mul(v) } else { v.clone() };
                    coords.insert(c.clone(), v);
                }
                FlcPoint { arity: m, tree: Some(t.clone()), coords }
            }
            // right action at an input: scales L_slot
            (Some(t), None) => {
                let p = inner.coord(&Coord::Log);
                for (c, v) in &self.coords {
                    let v = if *c == Coord::Cotangent(slot) { v.mul(p) } else { v.clone() };
                    coords.insert(c.clone(), v);
                }
                FlcPoint { arity: n, tree: Some(t.clone()), coords }
            }
            (Some(outer_tree), Some(inner_tree)) => {
                let tree = outer_tree.graft(inner_tree, slot)?;
                let total = n + m - 1;
                for k in 0..=total {
                    let v = if k < slot {
                        self.coord(&Coord::Cotangent(k))
                    } else if k < slot + m {
                        inner.coord(&Coord::Cotangent(k - slot + 1))
                    } else {
                        self.coord(&Coord::Cotangent(k - m + 1))
                    };
                    coords.insert(Coord::Cotangent(k), v.clone());
                }
                let block: Vec<usize> = (slot..slot + m).collect();
                let outer_leaf = |k: usize| -> Vec<usize> {
                    if k < slot {
                        vec![k]
                    } else if k == slot {
                        block.clone()
                    } else {
                        vec![k + m - 1]
                    }
                };
                for (c, v) in &self.coords {
                    if let Coord::Normal(s) = c {
                        let mut image: Vec<usize> = s.iter().flat_map(|&k| outer_leaf(k)).collect();
                        image.sort_unstable();
                        coords.insert(Coord::Normal(image), v.clone());
                    }
                }
                for (c, v) in &inner.coords {
                    if let Coord::Normal(s) = c {
                        let image = s.iter().map(|&j| slot + j - 1).collect();
                        coords.insert(Coord::Normal(image), v.clone());
                    }
                }
                let quadratic = self.coord(&Coord::Cotangent(slot)).mul(inner.coord(&Coord::Cotangent(0)));
                coords.insert(Coord::Normal(block), quadratic);
                FlcPoint { arity: total, tree: Some(tree), coords }
            }
        };
        Ok(out)
    }

    /// Relabels input `k` as `p(k)`, together with its cotangent line.
    pub fn act(&self, p: &Permutation) -> Result<FlcPoint> {
        if p.arity() != self.arity || p.apply(0) != 0 {
            return Err(Error::InvalidPermutation(format!(
                "{:?} does not act on arity {}",
                p.images(),
                self.arity
            )));
        }
        let Some(tree) = &self.tree else {
            return Ok(self.clone());
        };
        let coords = self
            .coords
            .iter()
            .map(|(c, v)| {
                let c = match c {
                    Coord::Cotangent(k) => Coord::Cotangent(p.apply(*k)),
                    Coord::Normal(s) => {
                        let mut image: Vec<usize> = s.iter().map(|&k| p.apply(k)).collect();
                        image.sort_unstable();
                        Coord::Normal(image)
                    }
                    Coord::Log => Coord::Log,
                };
                (c, v.clone())
            })
            .collect();
        Ok(FlcPoint { arity: self.arity, tree: Some(tree.act(p)?), coords })
    }

    /// Image of the point under the forgetful map to the log point that
    /// keeps only input `i`: `L_0 · L_i` times the normal coordinate of
    /// every node separating `0` from `i`.
    pub fn theta(&self, i: usize) -> Result<Monomial> {
        if i == 0 || i > self.arity {
            return Err(Error::SlotOutOfRange { slot: i, arity: self.arity });
        }
        if self.tree.is_none() {
            return Ok(self.coord(&Coord::Log).clone());
        }
        let mut m = self.coord(&Coord::Cotangent(0)).mul(self.coord(&Coord::Cotangent(i)));
        for (c, v) in &self.coords {
            if matches!(c, Coord::Normal(s) if s.contains(&i)) {
                m = m.mul(v);
            }
        }
        Ok(m)
    }

    /// All forgetful images `(θ_1, ..., θ_n)`, a point of `Comm^{pt_log}_n`.
    pub fn thetas(&self) -> Vec<Monomial> {
        (1..=self.arity).map(|i| self.theta(i).expect("in range")).collect()
    }
}

/// Descriptor of `Y ⊂ FLC_n` pulled back to the stratum of `tree`.
fn stratum_descriptor(tree: &StableTree) -> Result<NCLogDescriptor> {
    let space = flc_space(tree.arity())?;
    pullback_along_stratum(space.descriptor(), &tree_stratum(tree))
}

/// The composition map `FLC_n × FLC_m → FLC_{n+m-1}` at input `i` of the
/// arity-`n` factor, as a monomial map into the pullback of the target log
/// structure along the grafted stratum.
pub fn flc_comp(m: usize, n: usize, i: usize) -> Result<LogStructureMap> {
    let outer = flc_space(n)?;
    let inner = flc_space(m)?;
    if i == 0 || i > n {
        return Err(Error::SlotOutOfRange { slot: i, arity: n });
    }
    let left = |c: &Coord| c.label().left();
    let right = |c: &Coord| c.label().right();
    let a = match n {
        1 => FlcPoint::generic_unit(left),
        n => FlcPoint::generic(&StableTree::corolla(n)?, left),
    };
    let b = match m {
        1 => FlcPoint::generic_unit(right),
        m => FlcPoint::generic(&StableTree::corolla(m)?, right),
    };
    let point = a.compose(&b, i)?;
    let source = outer.descriptor().product(inner.descriptor());
    let (target, underlying) = match point.tree() {
        Some(tree) => {
            let ambient = flc_space(tree.arity())?;
            (
                stratum_descriptor(tree)?,
                UnderlyingMap::StratumEmbedding {
                    ambient: ambient.descriptor().base().clone(),
                    stratum: tree_stratum(tree),
                },
            )
        }
        None => (NCLogDescriptor::ptlog(), UnderlyingMap::Identity),
    };
    let matching = target
        .bundles()
        .iter()
        .map(|label| {
            point
                .coords()
                .iter()
                .find(|(c, _)| c.label() == *label)
                .map(|(_, v)| v.clone())
                .ok_or_else(|| Error::Shape(format!("no coordinate for target label {label}")))
        })
        .collect::<Result<Vec<_>>>()?;
    LogStructureMap::new(source, target, underlying, matching)
}

/// Forgetful map `θ_i : FLC_n → FLC_1 = pt_log`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ThetaMap {
    /// Bundle part on the open stratum: `P ↦ L_0 · L_i`.
    pub log_map: LogStructureMap,
    /// Vanishing order of the `P` coordinate along each boundary divisor:
    /// one for every divisor separating mark `0` from mark `i`.
    pub divisor_orders: BTreeMap<Component, u32>,
    pub slot: usize,
}

impl ThetaMap {
    /// The map restricted to the closed stratum of `tree`, where the
    /// divisor orders become exponents of normal-bundle labels.
    pub fn on_stratum(&self, tree: &StableTree) -> Result<LogStructureMap> {
        let source = stratum_descriptor(tree)?;
        let point = FlcPoint::generic(tree, Coord::label);
        let m = point.theta(self.slot)?;
        LogStructureMap::new(source, NCLogDescriptor::ptlog(), UnderlyingMap::ToPoint, vec![m])
    }
}

pub fn theta_log(n: usize, i: usize) -> Result<ThetaMap> {
    if n < 2 {
        return Err(Error::Arity { got: n, min: 2 });
    }
    if i == 0 || i > n {
        return Err(Error::SlotOutOfRange { slot: i, arity: n });
    }
    let source = flc_space(n)?.descriptor;
    let log_map = LogStructureMap::new(
        source.clone(),
        NCLogDescriptor::ptlog(),
        UnderlyingMap::ToPoint,
        vec![Monomial::var(BundleLabel::cotangent(0)).mul(&Monomial::var(BundleLabel::cotangent(i)))],
    )?;
    let divisor_orders = source
        .components()
        .into_iter()
        .filter(|c| separates(c, i))
        .map(|c| (c, 1))
        .collect();
    Ok(ThetaMap { log_map, divisor_orders, slot: i })
}

fn separates(c: &Component, i: usize) -> bool {
    // boundary components are named D{a,b,...} after the leaves below the node
    c.0.strip_prefix("D{")
        .and_then(|s| s.strip_suffix('}'))
        .is_some_and(|s| s.split(',').any(|x| x.parse() == Ok(i)))
}

/// A monoid, for the equivariant commutative operads `Comm^G`.
pub trait Monoid {
    type Elem: Clone + PartialEq + fmt::Debug;
    fn unit(&self) -> Self::Elem;
    fn op(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
}

/// Which monoid `G` a `Comm^G` operad is built from.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum MonoidTag {
    Trivial,
    Circle,
    Reals,
    LogPoint,
}

/// The trivial group; `Comm^{1}` is `Comm`.
#[derive(Clone, Copy, Debug, Default)]
pub struct Trivial;

impl Monoid for Trivial {
    type Elem = ();
    fn unit(&self) {}
    fn op(&self, _: &(), _: &()) {}
}

/// The circle as exact angles in `[0, 1)` under addition mod 1.
#[derive(Clone, Copy, Debug, Default)]
pub struct Circle;

impl Monoid for Circle {
    type Elem = BigRational;
    fn unit(&self) -> BigRational {
        BigRational::zero()
    }
    fn op(&self, a: &BigRational, b: &BigRational) -> BigRational {
        let s = a + b;
        &s - s.floor()
    }
}

/// The multiplicative monoid of the reals, exact rational points only.
#[derive(Clone, Copy, Debug, Default)]
pub struct Reals;

impl Monoid for Reals {
    type Elem = BigRational;
    fn unit(&self) -> BigRational {
        BigRational::one()
    }
    fn op(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a * b
    }
}

/// The log point: its points are monomials in the log coordinates, and the
/// monoid law multiplies them.
#[derive(Clone, Copy, Debug, Default)]
pub struct LogPoint;

impl Monoid for LogPoint {
    type Elem = Monomial;
    fn unit(&self) -> Monomial {
        Monomial::one()
    }
    fn op(&self, a: &Monomial, b: &Monomial) -> Monomial {
        a.mul(b)
    }
}

/// The free monoid on characters (concatenation), a noncommutative test case.
#[derive(Clone, Copy, Debug, Default)]
pub struct Words;

impl Monoid for Words {
    type Elem = String;
    fn unit(&self) -> String {
        String::new()
    }
    fn op(&self, a: &String, b: &String) -> String {
        format!("{a}{b}")
    }
}

/// `(g_1..g_n) ∘_i (h_1..h_k) = (g_1, .., g_{i-1}, g_i h_1, .., g_i h_k, g_{i+1}, .., g_n)`.
pub fn comm_compose<G: Monoid>(
    monoid: &G,
    g: &[G::Elem],
    h: &[G::Elem],
    i: usize,
) -> Result<Vec<G::Elem>> {
    if i == 0 || i > g.len() {
        return Err(Error::SlotOutOfRange { slot: i, arity: g.len() });
    }
    let gi = &g[i - 1];
    Ok(g[..i - 1]
        .iter()
        .cloned()
        .chain(h.iter().map(|x| monoid.op(gi, x)))
        .chain(g[i..].iter().cloned())
        .collect())
}

/// `Comm^G` with `Comm^G_n = G^n`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct CommGOperad {
    pub monoid: MonoidTag,
}

impl CommGOperad {
    /// Name of the arity-`n` space `G^n`.
    pub fn space_name(&self, n: usize) -> String {
        let g = match self.monoid {
            MonoidTag::Trivial => return "pt".into(),
            MonoidTag::Circle => "S^1",
            MonoidTag::Reals => "R",
            MonoidTag::LogPoint => "pt_log",
        };
        format!("({g})^{n}")
    }

    /// For the log point, `G^n` is the descriptor `pt_log^n`.
    pub fn log_descriptor(&self, n: usize) -> Option<NCLogDescriptor> {
        (self.monoid == MonoidTag::LogPoint).then(|| NCLogDescriptor::ptlog_power(n))
    }
}

/// One failed identity found by the axiom checker.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct AxiomFailure {
    pub axiom: &'static str,
    pub detail: String,
}

/// Counts of identities checked per axiom, and any failures.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct AxiomReport {
    pub checked: BTreeMap<&'static str, usize>,
    pub failures: Vec<AxiomFailure>,
}

impl AxiomReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }

    pub fn total(&self) -> usize {
        self.checked.values().sum()
    }

    pub(crate) fn merge(mut self, other: AxiomReport) -> AxiomReport {
        for (k, v) in other.checked {
            *self.checked.entry(k).or_insert(0) += v;
        }
        self.failures.extend(other.failures);
        self
    }

    pub(crate) fn record(&mut self, axiom: &'static str, ok: bool, detail: impl FnOnce() -> String) {
        *self.checked.entry(axiom).or_insert(0) += 1;
        if !ok {
            self.failures.push(AxiomFailure { axiom, detail: detail() });
        }
    }
}

fn name_with(prefix: &'static str) -> impl Fn(&Coord) -> BundleLabel {
    move |c| BundleLabel::named(format!("{prefix}.{c}"))
}

/// Generic points used by the checker: arity 1, the open stratum of every
/// arity up to `max_arity`, and every stratum for arities up to
/// `all_strata_up_to`.
fn sample_points(
    prefix: &'static str,
    max_arity: usize,
    all_strata_up_to: usize,
) -> Vec<FlcPoint> {
    let mut out = vec![FlcPoint::generic_unit(name_with(prefix))];
    for n in 2..=max_arity {
        if n <= all_strata_up_to {
            out.extend(enumerate_all_trees(n).iter().map(|t| FlcPoint::generic(t, name_with(prefix))));
        } else {
            out.push(FlcPoint::generic(&StableTree::corolla(n).expect("n >= 2"), name_with(prefix)));
        }
    }
    out
}

/// Exhaustive operad-axiom check for `FLC` on generic points of arity
/// `<= max_arity`: sequential and parallel associativity, equivariance,
/// the log-point actions, and compatibility of the forgetful maps with
/// the `Comm^{pt_log}` insertion law.
pub fn check_flc_axioms(max_arity: usize) -> AxiomReport {
    let a_pts = sample_points("a", max_arity, 3.min(max_arity));
    let b_pts = sample_points("b", max_arity, 3.min(max_arity));
    let c_pts = sample_points("c", max_arity, 2.min(max_arity));
    a_pts
        .par_iter()
        .map(|a| {
            let mut rep = AxiomReport::default();
            let n = a.arity();
            for b in &b_pts {
                let m = b.arity();
                for i in 1..=n {
                    let ab = a.compose(b, i).expect("slot in range");
                    // forgetful maps intertwine with Comm^{pt_log}
                    let expected = comm_compose(&LogPoint, &a.thetas(), &b.thetas(), i).expect("slot");
                    rep.record("theta-compatibility", ab.thetas() == expected, || {
                        format!("theta(a ∘_{i} b) for arities ({n},{m})")
                    });
                    for c in &c_pts {
                        let p = c.arity();
                        for j in 1..=m {
                            let lhs = ab.compose(c, i + j - 1).expect("slot");
                            let rhs = a.compose(&b.compose(c, j).expect("slot"), i).expect("slot");
                            rep.record("sequential-associativity", lhs == rhs, || {
                                format!("(a ∘_{i} b) ∘_{} c vs a ∘_{i} (b ∘_{j} c), arities ({n},{m},{p})", i + j - 1)
                            });
                        }
                        for j in i + 1..=n {
                            let lhs = ab.compose(c, j + m - 1).expect("slot");
                            let rhs = a.compose(c, j).expect("slot").compose(b, i).expect("slot");
                            rep.record("parallel-associativity", lhs == rhs, || {
                                format!("(a ∘_{i} b) ∘_{} c vs (a ∘_{j} c) ∘_{i} b, arities ({n},{m},{p})", j + m - 1)
                            });
                        }
                    }
                }
            }
            rep.merge(check_equivariance(a, &b_pts))
        })
        .reduce(AxiomReport::default, AxiomReport::merge)
}

fn check_equivariance(a: &FlcPoint, b_pts: &[FlcPoint]) -> AxiomReport {
    let mut rep = AxiomReport::default();
    let n = a.arity();
    let sigmas = Permutation::all_of_inputs(n);
    for sigma in &sigmas {
        let sa = a.act(sigma).expect("arity matches");
        for i in 1..=n {
            let ok = sa.theta(sigma.apply(i)).ok() == a.theta(i).ok();
            rep.record("theta-equivariance", ok, || format!("theta_{} on arity {n}", i));
        }
        for b in b_pts.iter().filter(|b| b.arity() <= 3) {
            let m = b.arity();
            for tau in Permutation::all_of_inputs(m) {
                let tb = b.act(&tau).expect("arity matches");
                for i in 1..=n {
                    let lhs = sa.compose(&tb, sigma.apply(i)).expect("slot");
                    let rhs = a
                        .compose(b, i)
                        .expect("slot")
                        .act(&Permutation::block(sigma, &tau, i))
                        .expect("arity matches");
                    rep.record("equivariance", lhs == rhs, || {
                        format!("σ={:?} τ={:?} slot {i}", sigma.images(), tau.images())
                    });
                }
            }
        }
    }
    rep
}

/// Grafting axioms on stable trees of arity `<= max_arity`, every stratum.
pub fn check_tree_axioms(max_arity: usize) -> AxiomReport {
    let trees: Vec<StableTree> = (2..=max_arity).flat_map(enumerate_all_trees).collect();
    // the third operand only shifts labels, so corollas suffice for it
    let thirds: Vec<StableTree> =
        (2..=max_arity).map(|p| StableTree::corolla(p).expect("p >= 2")).collect();
    trees
        .par_iter()
        .map(|a| {
            let mut rep = AxiomReport::default();
            let n = a.arity();
            for b in &trees {
                let m = b.arity();
                for i in 1..=n {
                    let ab = a.graft(b, i).expect("slot");
                    rep.record("codimension", ab.codim() == a.codim() + b.codim() + 1, || {
                        format!("codim({a} ∘_{i} {b})")
                    });
                    for c in &thirds {
                        for j in 1..=m {
                            let lhs = ab.graft(c, i + j - 1).expect("slot");
                            let rhs = a.graft(&b.graft(c, j).expect("slot"), i).expect("slot");
                            rep.record("sequential-associativity", lhs == rhs, || {
                                format!("{a} ∘_{i} {b} ∘ {c} at {j}")
                            });
                        }
                        for j in i + 1..=n {
                            let lhs = ab.graft(c, j + m - 1).expect("slot");
                            let rhs = a.graft(c, j).expect("slot").graft(b, i).expect("slot");
                            rep.record("parallel-associativity", lhs == rhs, || {
                                format!("{a}: {b} at {i}, {c} at {j}")
                            });
                        }
                    }
                }
            }
            // equivariance against corollas of arity <= 3 keeps the sweep small
            for sigma in Permutation::all_of_inputs(n) {
                let sa = a.act(&sigma).expect("arity");
                for b in thirds.iter().filter(|b| b.arity() <= 3) {
                    for tau in Permutation::all_of_inputs(b.arity()) {
                        let tb = b.act(&tau).expect("arity");
                        for i in 1..=n {
                            let lhs = sa.graft(&tb, sigma.apply(i)).expect("slot");
                            let rhs = a
                                .graft(b, i)
                                .expect("slot")
                                .act(&Permutation::block(&sigma, &tau, i))
                                .expect("arity");
                            rep.record("equivariance", lhs == rhs, || {
                                format!("{a} σ={:?} τ={:?} slot {i}", sigma.images(), tau.images())
                            });
                        }
                    }
                }
            }
            rep
        })
        .reduce(AxiomReport::default, AxiomReport::merge)
}

/// Codimension-one strata of arity `n` reached as `Σ_n`-translates of
/// images of `∘_1` over all splittings `m + m' = n + 1`.
pub fn comp1_translates(n: usize) -> BTreeSet<StableTree> {
    let mut out = BTreeSet::new();
    for m in 2..n {
        let outer_arity = n + 1 - m;
        let (Ok(outer), Ok(inner)) = (StableTree::corolla(outer_arity), StableTree::corolla(m)) else {
            continue;
        };
        let base = outer.graft(&inner, 1).expect("slot 1");
        for sigma in Permutation::all_of_inputs(n) {
            out.insert(base.act(&sigma).expect("arity"));
        }
    }
    out
}
