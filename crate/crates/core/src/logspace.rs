//! Symbolic strict normal-crossings log descriptors `(X, D, L)` and the
//! homogeneous (monomial) maps between them.
//!
//! Line bundles and divisor components are opaque tags. A map of log
//! structures is stored target-label by target-label: each target bundle
//! label is sent to a monomial in the source labels, and the exponent
//! matrix is read off from those monomials.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::trees::{enumerate_all_trees, StableTree};

/// An irreducible component of the divisor (a codimension-one stratum).
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Component(pub String);

impl Component {
    pub fn named(s: impl Into<String>) -> Self {
        Self(s.into())
    }

    /// Boundary divisor of `Mbar_{0,n+1}` whose node separates `leaves`
    /// from the output mark.
    pub fn boundary(leaves: &[usize]) -> Self {
        Self(format!("D{}", brace_list(leaves)))
    }
}

impl fmt::Display for Component {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

/// A line-bundle label. Labels only ever get matched and multiplied.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct BundleLabel(pub String);

impl BundleLabel {
    pub fn named(s: impl Into<String>) -> Self {
        Self(s.into())
    }

    /// Cotangent line `L_k` at mark `k`.
    pub fn cotangent(k: usize) -> Self {
        Self(format!("L{k}"))
    }

    /// Pulled-back normal bundle of a divisor component.
    pub fn normal(c: &Component) -> Self {
        match c.0.strip_prefix('D') {
            Some(rest) => Self(format!("N{rest}")),
            None => Self(format!("N[{}]", c.0)),
        }
    }

    /// Label of the trivial-bundle coordinate of the log point.
    pub fn log_point() -> Self {
        Self("P".into())
    }

    /// `L ⊠ O`: the label pulled back from the left factor of a product.
    pub fn left(&self) -> Self {
        Self(format!("{}⊠O", self.0))
    }

    /// `O ⊠ L`: the label pulled back from the right factor of a product.
    pub fn right(&self) -> Self {
        Self(format!("O⊠{}", self.0))
    }
}

impl fmt::Display for BundleLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

fn brace_list(items: &[usize]) -> String {
    let inner: Vec<String> = items.iter().map(|x| x.to_string()).collect();
    format!("{{{}}}", inner.join(","))
}

/// A stratum, named by the set of divisor components containing it; the
/// open stratum is the empty set and codimension is the set size.
pub type StratumTag = BTreeSet<Component>;

/// Underlying space: a named scheme, possibly restricted to a closed stratum.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct BaseTag {
    pub space: String,
    #[serde(default, skip_serializing_if = "BTreeSet::is_empty")]
    pub stratum: StratumTag,
}

impl BaseTag {
    pub fn new(space: impl Into<String>) -> Self {
        Self { space: space.into(), stratum: StratumTag::new() }
    }
}

impl fmt::Display for BaseTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.space)?;
        if !self.stratum.is_empty() {
            let names: Vec<&str> = self.stratum.iter().map(|c| c.0.as_str()).collect();
            write!(f, "|{}", names.join("∩"))?;
        }
        Ok(())
    }
}

/// Geometric, log and log-fiber dimensions.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Dims {
    pub geometric: usize,
    pub log: usize,
    pub fiber: usize,
}

/// A strict normal-crossings log space `(X, D, (L_1, ..., L_d))_log`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct NCLogDescriptor {
    base: BaseTag,
    base_dim: usize,
    /// Nonempty strata including the open one; closed under taking subsets.
    strata: BTreeSet<StratumTag>,
    bundles: Vec<BundleLabel>,
}

impl NCLogDescriptor {
    /// Builds a descriptor from explicit strata. Every subset of a listed
    /// stratum is added (faces of a normal-crossings intersection are
    /// strata), and codimensions may not exceed `base_dim`.
    pub fn new(
        base: BaseTag,
        base_dim: usize,
        strata: impl IntoIterator<Item = StratumTag>,
        bundles: Vec<BundleLabel>,
    ) -> Result<Self> {
        let mut all: BTreeSet<StratumTag> = BTreeSet::new();
        all.insert(StratumTag::new());
        for s in strata {
            if s.len() > base_dim {
                return Err(Error::Shape(format!(
                    "stratum of codimension {} in a base of dimension {base_dim}",
                    s.len()
                )));
            }
            let items: Vec<&Component> = s.iter().collect();
            for mask in 0u64..(1 << items.len()) {
                all.insert(
                    items
                        .iter()
                        .enumerate()
                        .filter(|(k, _)| mask >> k & 1 == 1)
                        .map(|(_, c)| (*c).clone())
                        .collect(),
                );
            }
        }
        let distinct: BTreeSet<&BundleLabel> = bundles.iter().collect();
        if distinct.len() != bundles.len() {
            return Err(Error::Shape("bundle labels must be distinct".into()));
        }
        Ok(Self { base, base_dim, strata: all, bundles })
    }

    /// `X` with divisor given by pairwise-disjoint components.
    pub fn with_disjoint_divisor(
        base: BaseTag,
        base_dim: usize,
        components: &[Component],
        bundles: Vec<BundleLabel>,
    ) -> Result<Self> {
        let strata = components.iter().map(|c| StratumTag::from([c.clone()]));
        Self::new(base, base_dim, strata, bundles)
    }

    /// `pt_log^d`: a point with `d` trivial bundles.
    pub fn ptlog_power(d: usize) -> Self {
        let bundles = if d == 1 {
            vec![BundleLabel::log_point()]
        } else {
            (1..=d).map(|k| BundleLabel::named(format!("P{k}"))).collect()
        };
        Self::new(BaseTag::new("pt"), 0, [], bundles).expect("valid")
    }

    pub fn ptlog() -> Self {
        Self::ptlog_power(1)
    }

    /// `(Mbar_{0,n+1}, boundary)` with strata indexed by stable trees of
    /// arity `n`, and the given bundles.
    pub fn moduli(n: usize, bundles: Vec<BundleLabel>) -> Result<Self> {
        if n < 2 {
            return Err(Error::Arity { got: n, min: 2 });
        }
        // contracting edges of a stable tree gives a stable tree, so the
        // tree strata are already closed under taking subsets
        let strata = enumerate_all_trees(n).iter().map(tree_stratum).collect();
        let mut desc = Self::new(BaseTag::new(format!("Mbar_0,{}", n + 1)), n - 2, [], bundles)?;
        desc.strata = strata;
        Ok(desc)
    }

    pub fn base(&self) -> &BaseTag {
        &self.base
    }

    pub fn base_dim(&self) -> usize {
        self.base_dim
    }

    pub fn bundles(&self) -> &[BundleLabel] {
        &self.bundles
    }

    pub fn strata(&self) -> &BTreeSet<StratumTag> {
        &self.strata
    }

    /// Irreducible divisor components (codimension-one strata).
    pub fn components(&self) -> BTreeSet<Component> {
        self.strata.iter().filter(|s| s.len() == 1).flat_map(|s| s.iter().cloned()).collect()
    }

    /// Strata of codimension `c`.
    pub fn strata_of_codim(&self, c: usize) -> impl Iterator<Item = &StratumTag> {
        self.strata.iter().filter(move |s| s.len() == c)
    }

    /// Meet of two strata (their intersection), if it is nonempty.
    pub fn meet(&self, a: &StratumTag, b: &StratumTag) -> Option<StratumTag> {
        let m: StratumTag = a.union(b).cloned().collect();
        self.strata.contains(&m).then_some(m)
    }

    pub fn dims(&self) -> Dims {
        dims(self)
    }

    /// Product descriptor; labels and components are tagged `⊠O` / `O⊠`.
    pub fn product(&self, other: &NCLogDescriptor) -> NCLogDescriptor {
        let lc = |c: &Component| Component(format!("{}⊠X", c.0));
        let rc = |c: &Component| Component(format!("X⊠{}", c.0));
        let mut strata = BTreeSet::new();
        for a in &self.strata {
            for b in &other.strata {
                strata.insert(a.iter().map(lc).chain(b.iter().map(rc)).collect::<StratumTag>());
            }
        }
        let bundles = self
            .bundles
            .iter()
            .map(BundleLabel::left)
            .chain(other.bundles.iter().map(BundleLabel::right))
            .collect();
        NCLogDescriptor {
            base: BaseTag::new(format!("{} x {}", self.base, other.base)),
            base_dim: self.base_dim + other.base_dim,
            strata,
            bundles,
        }
    }

    /// Replaces the bundle tuple, keeping base and divisor.
    pub fn with_bundles(&self, bundles: Vec<BundleLabel>) -> Result<Self> {
        Self::new(self.base.clone(), self.base_dim, self.strata.iter().cloned(), bundles)
    }
}

/// The stratum of `Mbar_{0,n+1}` indexed by a stable tree.
pub fn tree_stratum(t: &StableTree) -> StratumTag {
    t.edge_sets().iter().map(|s| Component::boundary(s)).collect()
}

/// `(geometric, log, fiber)` dimensions: `(dim X, dim X + d, d)`.
pub fn dims(desc: &NCLogDescriptor) -> Dims {
    let d = desc.bundles.len();
    Dims { geometric: desc.base_dim, log: desc.base_dim + d, fiber: d }
}

/// Restriction to a closed stratum `Y` of codimension `c`: the base drops
/// by `c`, one normal-bundle label per divisor component containing `Y` is
/// appended, and only the strata inside `Y` survive.
pub fn pullback_along_stratum(desc: &NCLogDescriptor, y: &StratumTag) -> Result<NCLogDescriptor> {
    if !desc.strata.contains(y) {
        let names: Vec<&str> = y.iter().map(|c| c.0.as_str()).collect();
        return Err(Error::UnknownStratum(format!("{{{}}} in {}", names.join(","), desc.base)));
    }
    let strata: BTreeSet<StratumTag> = desc
        .strata
        .iter()
        .filter(|s| y.is_subset(s))
        .map(|s| s.difference(y).cloned().collect())
        .collect();
    let mut bundles = desc.bundles.clone();
    bundles.extend(y.iter().map(BundleLabel::normal));
    let mut base = desc.base.clone();
    base.stratum.extend(y.iter().cloned());
    Ok(NCLogDescriptor { base, base_dim: desc.base_dim - y.len(), strata, bundles })
}

/// A monomial in bundle labels (a homogeneous map of total spaces, one
/// target coordinate at a time).
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Monomial(BTreeMap<BundleLabel, u32>);

impl Monomial {
    pub fn one() -> Self {
        Self::default()
    }

    pub fn var(l: BundleLabel) -> Self {
        Self(BTreeMap::from([(l, 1)]))
    }

    pub fn from_exponents(pairs: impl IntoIterator<Item = (BundleLabel, u32)>) -> Self {
        let mut m = Self::one();
        for (l, e) in pairs {
            m.mul_var(l, e);
        }
        m
    }

    pub fn exponent(&self, l: &BundleLabel) -> u32 {
        self.0.get(l).copied().unwrap_or(0)
    }

    pub fn degree(&self) -> u32 {
        self.0.values().sum()
    }

    pub fn mul_var(&mut self, l: BundleLabel, e: u32) {
        if e > 0 {
            *self.0.entry(l).or_insert(0) += e;
        }
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        let mut out = self.clone();
        for (l, &e) in &other.0 {
            out.mul_var(l.clone(), e);
        }
        out
    }

    pub fn pow(&self, e: u32) -> Monomial {
        Monomial(self.0.iter().filter(|_| e > 0).map(|(l, &x)| (l.clone(), x * e)).collect())
    }

    pub fn labels(&self) -> impl Iterator<Item = (&BundleLabel, u32)> {
        self.0.iter().map(|(l, &e)| (l, e))
    }

    /// Substitutes each label by a monomial.
    pub fn substitute(&self, f: impl Fn(&BundleLabel) -> Monomial) -> Monomial {
        self.0.iter().fold(Monomial::one(), |acc, (l, &e)| acc.mul(&f(l).pow(e)))
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return f.write_str("1");
        }
        // products of one left and one right label print as `A⊠B`
        let left: Vec<_> = self.0.keys().filter_map(|l| l.0.strip_suffix("⊠O")).collect();
        let right: Vec<_> = self.0.keys().filter_map(|l| l.0.strip_prefix("O⊠")).collect();
        if self.degree() == 2 && left.len() == 1 && right.len() == 1 {
            return write!(f, "{}⊠{}", left[0], right[0]);
        }
        let parts: Vec<String> = self
            .0
            .iter()
            .map(|(l, &e)| if e == 1 { l.0.clone() } else { format!("{}^{e}", l.0) })
            .collect();
        f.write_str(&parts.join("·"))
    }
}

/// The map of underlying schemes a log map lies over.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum UnderlyingMap {
    /// A map of log structures on a fixed scheme.
    Identity,
    /// The embedding of a closed stratum of `ambient`; the log map lands in
    /// the pullback of `ambient`'s log structure to that stratum.
    StratumEmbedding { ambient: BaseTag, stratum: StratumTag },
    /// The constant map to a point.
    ToPoint,
}

/// A homogeneous map of log structures, stored target label by target label.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LogStructureMap {
    source: NCLogDescriptor,
    target: NCLogDescriptor,
    underlying: UnderlyingMap,
    /// One monomial per target bundle, in target order.
    matching: Vec<Monomial>,
}

impl LogStructureMap {
    /// Checks that every monomial only uses source labels.
    pub fn new(
        source: NCLogDescriptor,
        target: NCLogDescriptor,
        underlying: UnderlyingMap,
        matching: Vec<Monomial>,
    ) -> Result<Self> {
        if matching.len() != target.bundles.len() {
            return Err(Error::Shape(format!(
                "{} monomials for {} target bundles",
                matching.len(),
                target.bundles.len()
            )));
        }
        let known: BTreeSet<&BundleLabel> = source.bundles.iter().collect();
        for m in &matching {
            if let Some((l, _)) = m.labels().find(|(l, _)| !known.contains(l)) {
                return Err(Error::Shape(format!("label {l} is not a source bundle")));
            }
        }
        Ok(Self { source, target, underlying, matching })
    }

    pub fn source(&self) -> &NCLogDescriptor {
        &self.source
    }

    pub fn target(&self) -> &NCLogDescriptor {
        &self.target
    }

    pub fn underlying(&self) -> &UnderlyingMap {
        &self.underlying
    }

    pub fn matching(&self) -> &[Monomial] {
        &self.matching
    }

    /// The monomial assigned to a target label.
    pub fn image_of(&self, target_label: &BundleLabel) -> Option<&Monomial> {
        self.target.bundles.iter().position(|l| l == target_label).map(|k| &self.matching[k])
    }

    /// `d × d'` exponents: rows are source labels, columns target labels.
    pub fn exponent_matrix(&self) -> Vec<Vec<u32>> {
        self.source
            .bundles
            .iter()
            .map(|s| self.matching.iter().map(|m| m.exponent(s)).collect())
            .collect()
    }

    /// `self` followed by `next`. Exponent matrices multiply: the result is
    /// `self.exponent_matrix() * next.exponent_matrix()`.
    pub fn then(&self, next: &LogStructureMap) -> Result<LogStructureMap> {
        if self.target.bundles != next.source.bundles || self.target.base != next.source.base {
            return Err(Error::Shape(format!(
                "cannot compose: target {} does not match source {}",
                self.target.base, next.source.base
            )));
        }
        let matching = next
            .matching
            .iter()
            .map(|m| m.substitute(|l| self.image_of(l).cloned().expect("checked in new")))
            .collect();
        let underlying = match (&self.underlying, &next.underlying) {
            (UnderlyingMap::Identity, u) | (u, UnderlyingMap::Identity) => u.clone(),
            (_, UnderlyingMap::ToPoint) => UnderlyingMap::ToPoint,
            (u, _) => u.clone(),
        };
        Ok(LogStructureMap {
            source: self.source.clone(),
            target: next.target.clone(),
            underlying,
            matching,
        })
    }

    /// `target label ↦ source monomial` lines, e.g. `N{1,2} ↦ L1⊠L0`.
    pub fn matching_lines(&self) -> Vec<String> {
        self.target
            .bundles
            .iter()
            .zip(&self.matching)
            .map(|(l, m)| format!("{l} ↦ {m}"))
            .collect()
    }
}

impl Serialize for LogStructureMap {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        struct Json<'a> {
            source: &'a BaseTag,
            target: &'a BaseTag,
            underlying: &'a UnderlyingMap,
            source_labels: &'a [BundleLabel],
            target_labels: &'a [BundleLabel],
            exponent_matrix: Vec<Vec<u32>>,
            matching: Vec<String>,
        }
        Json {
            source: &self.source.base,
            target: &self.target.base,
            underlying: &self.underlying,
            source_labels: &self.source.bundles,
            target_labels: &self.target.bundles,
            exponent_matrix: self.exponent_matrix(),
            matching: self.matching_lines(),
        }
        .serialize(s)
    }
}

/// All maps `src -> dst` over the identity of the common base, as a family
/// parameterized by homogeneous bundle maps.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MapFamily {
    source: NCLogDescriptor,
    target: NCLogDescriptor,
    positive: bool,
}

impl MapFamily {
    /// Whether exponents must be `>= 1` (maps between log-point powers).
    pub fn requires_positive(&self) -> bool {
        self.positive
    }

    /// Shape `(d, d')` of the exponent matrices parameterizing the family.
    pub fn shape(&self) -> (usize, usize) {
        (self.source.bundles.len(), self.target.bundles.len())
    }

    /// The member with the given `d × d'` exponent matrix.
    pub fn instantiate(&self, matrix: &[Vec<u32>]) -> Result<LogStructureMap> {
        let (d, dp) = self.shape();
        if matrix.len() != d || matrix.iter().any(|row| row.len() != dp) {
            return Err(Error::Shape(format!("expected a {d}×{dp} exponent matrix")));
        }
        if self.positive {
            for (row, r) in matrix.iter().enumerate() {
                if let Some((col, &value)) = r.iter().enumerate().find(|(_, &v)| v == 0) {
                    return Err(Error::Positivity { row, col, value });
                }
            }
        }
        let matching = (0..dp)
            .map(|t| {
                Monomial::from_exponents(
                    self.source.bundles.iter().cloned().zip(matrix.iter().map(|r| r[t])),
                )
            })
            .collect();
        LogStructureMap::new(
            self.source.clone(),
            self.target.clone(),
            UnderlyingMap::Identity,
            matching,
        )
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum MapClass {
    /// No maps: the target divisor is not contained in the source divisor.
    Empty,
    Family(MapFamily),
}

/// Maps of log structures over a fixed base: empty unless the target
/// divisor is contained in the source divisor, otherwise all homogeneous
/// bundle maps.
pub fn classify_maps(src: &NCLogDescriptor, dst: &NCLogDescriptor) -> Result<MapClass> {
    if src.base != dst.base {
        return Err(Error::BaseMismatch(src.base.to_string(), dst.base.to_string()));
    }
    if !dst.components().is_subset(&src.components()) {
        return Ok(MapClass::Empty);
    }
    let is_ptlog_power = |d: &NCLogDescriptor| d.base_dim == 0 && d.strata.len() == 1;
    Ok(MapClass::Family(MapFamily {
        source: src.clone(),
        target: dst.clone(),
        positive: is_ptlog_power(src) && is_ptlog_power(dst),
    }))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn family(src: &NCLogDescriptor, dst: &NCLogDescriptor) -> MapFamily {
        match classify_maps(src, dst).unwrap() {
            MapClass::Family(f) => f,
            MapClass::Empty => panic!("expected a family"),
        }
    }

    #[test]
    fn ptlog_dims() {
        let d = NCLogDescriptor::ptlog().dims();
        assert_eq!(d, Dims { geometric: 0, log: 1, fiber: 1 });
        assert_eq!(NCLogDescriptor::ptlog_power(3).dims().log, 3);
    }

    #[test]
    fn ptlog_self_maps_are_positive_matrices() {
        let p = NCLogDescriptor::ptlog();
        let fam = family(&p, &p);
        assert!(fam.requires_positive());
        assert_eq!(fam.shape(), (1, 1));
        assert!(matches!(fam.instantiate(&[vec![0]]), Err(Error::Positivity { .. })));
        let f = fam.instantiate(&[vec![2]]).unwrap();
        let g = fam.instantiate(&[vec![3]]).unwrap();
        assert_eq!(f.then(&g).unwrap().exponent_matrix(), vec![vec![6]]);
    }

    #[test]
    fn divisor_containment_decides_emptiness() {
        let l = vec![BundleLabel::named("L")];
        let x = BaseTag::new("X");
        let empty = NCLogDescriptor::new(x.clone(), 1, [], l.clone()).unwrap();
        let with_s =
            NCLogDescriptor::with_disjoint_divisor(x, 1, &[Component::named("s")], l).unwrap();
        assert_eq!(classify_maps(&empty, &with_s).unwrap(), MapClass::Empty);
        let fam = family(&with_s, &empty);
        assert!(!fam.requires_positive());
        // general homogeneous maps may send a bundle to a constant
        assert!(fam.instantiate(&[vec![0]]).is_ok());
    }

    #[test]
    fn base_mismatch_is_an_error() {
        let a = NCLogDescriptor::new(BaseTag::new("X"), 1, [], vec![]).unwrap();
        let b = NCLogDescriptor::new(BaseTag::new("Y"), 1, [], vec![]).unwrap();
        assert!(matches!(classify_maps(&a, &b), Err(Error::BaseMismatch(..))));
    }

    #[test]
    fn pullback_trades_base_dimension_for_normal_labels() {
        let l: Vec<BundleLabel> = (0..=4).map(BundleLabel::cotangent).collect();
        let x = NCLogDescriptor::moduli(4, l).unwrap();
        assert_eq!(x.dims(), Dims { geometric: 2, log: 7, fiber: 5 });
        let y = StratumTag::from([Component::boundary(&[1, 2])]);
        let p = pullback_along_stratum(&x, &y).unwrap();
        assert_eq!(p.dims(), Dims { geometric: 1, log: 7, fiber: 6 });
        assert_eq!(p.bundles().last().unwrap().0, "N{1,2}");
        // the divisor D{1,2} of Mbar_{0,5} is Mbar_{0,3} x Mbar_{0,4}: three boundary points
        assert_eq!(p.strata_of_codim(1).count(), 3);
        let open = pullback_along_stratum(&x, &StratumTag::new()).unwrap();
        assert_eq!(open, x);
        let bogus = StratumTag::from([Component::boundary(&[1, 2]), Component::boundary(&[2, 3])]);
        assert!(matches!(pullback_along_stratum(&x, &bogus), Err(Error::UnknownStratum(_))));
    }

    #[test]
    fn meets_in_mbar05() {
        let x = NCLogDescriptor::moduli(4, vec![]).unwrap();
        let a = StratumTag::from([Component::boundary(&[1, 2])]);
        let b = StratumTag::from([Component::boundary(&[3, 4])]);
        let c = StratumTag::from([Component::boundary(&[2, 3])]);
        assert_eq!(x.meet(&a, &b).map(|m| m.len()), Some(2));
        assert_eq!(x.meet(&a, &c), None);
        assert_eq!(x.components().len(), 10);
    }

    #[test]
    fn monomial_display() {
        let m = Monomial::from_exponents([
            (BundleLabel::cotangent(1).left(), 1),
            (BundleLabel::cotangent(0).right(), 1),
        ]);
        assert_eq!(m.to_string(), "L1⊠L0");
        assert_eq!(Monomial::var(BundleLabel::cotangent(2).left()).to_string(), "L2⊠O");
    }
}
