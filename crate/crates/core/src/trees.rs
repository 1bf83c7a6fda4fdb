//! Stable rooted trees with labeled leaves.
//!
//! A [`StableTree`] of arity `n` is the dual graph of a stable genus-zero
//! curve with marks `0..=n`: internal vertices are components, internal edges
//! are nodes, and leaf `0` is the output. Trees are stored in canonical form
//! (rooted at the vertex carrying leaf `0`, children ordered by their minimal
//! descendant leaf), so derived equality is equality of isomorphism classes.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use serde::de::Error as _;
use serde::ser::SerializeMap;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

/// Set of input leaves sitting below an internal edge. Identifies the
/// boundary divisor (and its normal bundle) that the edge contributes.
pub type LeafSet = Vec<usize>;

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
enum Node {
    Leaf(usize),
    Vertex(Vec<Node>),
}

impl Node {
    fn min_leaf(&self) -> usize {
        match self {
            Node::Leaf(l) => *l,
            // children are sorted, so the first child carries the minimum
            Node::Vertex(children) => children[0].min_leaf(),
        }
    }

    fn relabel(&self, f: &impl Fn(usize) -> Node) -> Node {
        match self {
            Node::Leaf(l) => f(*l),
            Node::Vertex(children) => {
                let mut children: Vec<Node> = children.iter().map(|c| c.relabel(f)).collect();
                children.sort_by_key(Node::min_leaf);
                Node::Vertex(children)
            }
        }
    }

    fn leaves(&self, out: &mut Vec<usize>) {
        match self {
            Node::Leaf(l) => out.push(*l),
            Node::Vertex(children) => children.iter().for_each(|c| c.leaves(out)),
        }
    }
}

/// A permutation of the marks `{0, ..., n}`, stored as the list of images.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Permutation(Vec<usize>);

impl Permutation {
    /// Validates that `images` is a bijection of `0..images.len()`.
    pub fn new(images: Vec<usize>) -> Result<Self> {
        let mut seen = vec![false; images.len()];
        for &x in &images {
            if x >= images.len() || std::mem::replace(&mut seen[x], true) {
                return Err(Error::InvalidPermutation(format!("{images:?} is not a bijection")));
            }
        }
        Ok(Self(images))
    }

    /// A permutation of the inputs `1..=n` given by their images; `0` is fixed.
    pub fn of_inputs(images: &[usize]) -> Result<Self> {
        let mut all = Vec::with_capacity(images.len() + 1);
        all.push(0);
        all.extend_from_slice(images);
        Self::new(all)
    }

    pub fn identity(n: usize) -> Self {
        Self((0..=n).collect())
    }

    /// Number of inputs (the permutation acts on `0..=n`).
    pub fn arity(&self) -> usize {
        self.0.len().saturating_sub(1)
    }

    pub fn apply(&self, k: usize) -> usize {
        self.0[k]
    }

    pub fn images(&self) -> &[usize] {
        &self.0
    }

    /// `self ∘ other`: first `other`, then `self`.
    pub fn compose(&self, other: &Permutation) -> Permutation {
        Permutation(other.0.iter().map(|&k| self.0[k]).collect())
    }

    pub fn inverse(&self) -> Permutation {
        let mut inv = vec![0; self.0.len()];
        for (k, &v) in self.0.iter().enumerate() {
            inv[v] = k;
        }
        Permutation(inv)
    }

    /// All permutations of `0..=n` fixing `0`, in lexicographic order.
    pub fn all_of_inputs(n: usize) -> Vec<Permutation> {
        let mut out = Vec::new();
        let mut current: Vec<usize> = (1..=n).collect();
        loop {
            out.push(Permutation::of_inputs(&current).expect("valid"));
            if !next_permutation(&mut current) {
                break;
            }
        }
        out
    }

    /// The block permutation induced on `n + m - 1` inputs by acting with
    /// `outer` on the `n` outer inputs and `inner` inside the block that
    /// replaced outer input `slot`.
    pub fn block(outer: &Permutation, inner: &Permutation, slot: usize) -> Permutation {
        let n = outer.arity();
        let m = inner.arity();
        let target_slot = outer.apply(slot);
        // image of an outer input k != slot after the block is inserted at target_slot
        let shift = |k: usize| if k < target_slot { k } else { k + m - 1 };
        let mut images = vec![0];
        for k in 1..=n {
            if k == slot {
                for j in 1..=m {
                    images.push(target_slot + inner.apply(j) - 1);
                }
            } else {
                images.push(shift(outer.apply(k)));
            }
        }
        // images are listed in source order: outer 1..slot-1, block, outer slot+1..n
        Permutation(images)
    }
}

fn next_permutation(v: &mut [usize]) -> bool {
    if v.len() < 2 {
        return false;
    }
    let mut i = v.len() - 1;
    while i > 0 && v[i - 1] >= v[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = v.len() - 1;
    while v[j] <= v[i - 1] {
        j -= 1;
    }
    v.swap(i - 1, j);
    v[i..].reverse();
    true
}

/// Dual tree of a stable genus-zero curve with marks `0..=n`, `n >= 2`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct StableTree {
    arity: usize,
    /// Children of the root vertex (the vertex carrying leaf 0).
    root: Vec<Node>,
}

impl StableTree {
    /// The open stratum: one vertex carrying all `n + 1` leaves.
    pub fn corolla(n: usize) -> Result<Self> {
        if n < 2 {
            return Err(Error::Arity { got: n, min: 2 });
        }
        Ok(Self { arity: n, root: (1..=n).map(Node::Leaf).collect() })
    }

    pub fn arity(&self) -> usize {
        self.arity
    }

    /// Number of internal edges (nodes of the curve).
    pub fn codim(&self) -> usize {
        self.num_vertices() - 1
    }

    pub fn num_vertices(&self) -> usize {
        fn count(children: &[Node]) -> usize {
            1 + children
                .iter()
                .map(|c| match c {
                    Node::Leaf(_) => 0,
                    Node::Vertex(ch) => count(ch),
                })
                .sum::<usize>()
        }
        count(&self.root)
    }

    /// Total valence (number of special points) of each vertex, preorder.
    pub fn vertex_valences(&self) -> Vec<usize> {
        fn walk(children: &[Node], out: &mut Vec<usize>) {
            out.push(children.len() + 1);
            for c in children {
                if let Node::Vertex(ch) = c {
                    walk(ch, out);
                }
            }
        }
        let mut out = Vec::new();
        walk(&self.root, &mut out);
        out
    }

    /// The leaf sets below each internal edge, sorted. Each is a subset of
    /// `1..=n` with `2 <= |S| <= n - 1`.
    pub fn edge_sets(&self) -> Vec<LeafSet> {
        fn walk(children: &[Node], out: &mut Vec<LeafSet>) {
            for c in children {
                if let Node::Vertex(ch) = c {
                    let mut leaves = Vec::new();
                    c.leaves(&mut leaves);
                    leaves.sort_unstable();
                    out.push(leaves);
                    walk(ch, out);
                }
            }
        }
        let mut out = Vec::new();
        walk(&self.root, &mut out);
        out.sort();
        out
    }

    /// Whether the stratum of `self` lies in the closure of the stratum of
    /// `other`, i.e. `self` is obtained from `other` by adding edges.
    pub fn degenerates(&self, other: &StableTree) -> bool {
        if self.arity != other.arity {
            return false;
        }
        let mine: BTreeSet<LeafSet> = self.edge_sets().into_iter().collect();
        other.edge_sets().iter().all(|e| mine.contains(e))
    }

    /// Rebuilds a tree from a compatible family of edge leaf sets.
    pub fn from_edge_sets(n: usize, sets: &[LeafSet]) -> Result<Self> {
        if n < 2 {
            return Err(Error::Arity { got: n, min: 2 });
        }
        let mut split: Vec<BTreeSet<usize>> = Vec::with_capacity(sets.len());
        for s in sets_sorted(sets) {
            let set: BTreeSet<usize> = s.iter().copied().collect();
            if set.len() != s.len() || set.len() < 2 || set.len() > n - 1 {
                return Err(Error::InvalidTree(format!("edge set {s:?} is not a proper split")));
            }
            if set.iter().any(|&l| l == 0 || l > n) {
                return Err(Error::InvalidTree(format!("edge set {s:?} has labels outside 1..={n}")));
            }
            if split.contains(&set) {
                return Err(Error::InvalidTree(format!("duplicate edge set {s:?}")));
            }
            split.push(set);
        }
        for (a, s) in split.iter().enumerate() {
            for t in &split[a + 1..] {
                if !(s.is_disjoint(t) || s.is_subset(t) || t.is_subset(s)) {
                    return Err(Error::InvalidTree(format!("edge sets {s:?} and {t:?} cross")));
                }
            }
        }
        fn build(universe: &BTreeSet<usize>, sets: &[BTreeSet<usize>]) -> Vec<Node> {
            let inside: Vec<&BTreeSet<usize>> =
                sets.iter().filter(|s| s.is_subset(universe) && *s != universe).collect();
            let maximal: Vec<&BTreeSet<usize>> = inside
                .iter()
                .copied()
                .filter(|s| !inside.iter().any(|t| t != s && s.is_subset(t)))
                .collect();
            let mut children: Vec<Node> = maximal
                .iter()
                .map(|s| Node::Vertex(build(s, sets)))
                .collect();
            for &l in universe {
                if !maximal.iter().any(|s| s.contains(&l)) {
                    children.push(Node::Leaf(l));
                }
            }
            children.sort_by_key(Node::min_leaf);
            children
        }
        let universe: BTreeSet<usize> = (1..=n).collect();
        Ok(Self { arity: n, root: build(&universe, &split) })
    }

    /// Operadic grafting: plug the output of `inner` into input `slot` of
    /// `self`. Inputs of `inner` occupy slots `slot..slot + m`.
    pub fn graft(&self, inner: &StableTree, slot: usize) -> Result<StableTree> {
        let n = self.arity;
        let m = inner.arity;
        if slot == 0 || slot > n {
            return Err(Error::SlotOutOfRange { slot, arity: n });
        }
        let inner_root = Node::Vertex(inner.root.clone())
            .relabel(&|j| Node::Leaf(slot + j - 1));
        let relabel = |k: usize| {
            if k < slot {
                Node::Leaf(k)
            } else if k == slot {
                inner_root.clone()
            } else {
                Node::Leaf(k + m - 1)
            }
        };
        let Node::Vertex(root) = Node::Vertex(self.root.clone()).relabel(&relabel) else {
            unreachable!()
        };
        Ok(StableTree { arity: n + m - 1, root })
    }

    /// Relabels input leaf `k` as `p(k)`.
    pub fn act(&self, p: &Permutation) -> Result<StableTree> {
        if p.arity() != self.arity {
            return Err(Error::InvalidPermutation(format!(
                "permutation of {} inputs applied to a tree of arity {}",
                p.arity(),
                self.arity
            )));
        }
        if p.apply(0) != 0 {
            return Err(Error::InvalidPermutation("permutation moves the output mark 0".into()));
        }
        let Node::Vertex(root) = Node::Vertex(self.root.clone()).relabel(&|k| Node::Leaf(p.apply(k)))
        else {
            unreachable!()
        };
        Ok(StableTree { arity: self.arity, root })
    }

    /// Plain graph data: internal vertices numbered in preorder (root = 0),
    /// internal edges as `(parent, child)`, and the vertex of each leaf.
    pub fn graph(&self) -> TreeGraph {
        fn walk(children: &[Node], me: usize, g: &mut TreeGraph) {
            for c in children {
                match c {
                    Node::Leaf(l) => g.labels[*l] = me,
                    Node::Vertex(ch) => {
                        let id = g.num_vertices;
                        g.num_vertices += 1;
                        g.edges.push((me, id));
                        walk(ch, id, g);
                    }
                }
            }
        }
        let mut g = TreeGraph {
            num_vertices: 1,
            edges: Vec::new(),
            labels: vec![0; self.arity + 1],
        };
        walk(&self.root, 0, &mut g);
        g
    }

    /// Inverse of [`StableTree::graph`]; edge orientation is ignored and the
    /// tree is re-rooted at the vertex carrying leaf 0.
    pub fn from_graph(g: &TreeGraph) -> Result<StableTree> {
        let leaves = g.labels.len();
        if leaves < 3 {
            return Err(Error::Arity { got: leaves.saturating_sub(1), min: 2 });
        }
        let nv = g.num_vertices;
        if g.labels.iter().any(|&v| v >= nv) || g.edges.iter().any(|&(a, b)| a >= nv || b >= nv) {
            return Err(Error::InvalidTree("vertex index out of range".into()));
        }
        if g.edges.len() + 1 != nv {
            return Err(Error::InvalidTree(format!(
                "{} edges on {nv} vertices cannot form a tree",
                g.edges.len()
            )));
        }
        let mut adj = vec![Vec::new(); nv];
        for &(a, b) in &g.edges {
            adj[a].push(b);
            adj[b].push(a);
        }
        let mut leaf_at = vec![Vec::new(); nv];
        for (l, &v) in g.labels.iter().enumerate() {
            leaf_at[v].push(l);
        }
        for v in 0..nv {
            if adj[v].len() + leaf_at[v].len() < 3 {
                return Err(Error::InvalidTree(format!("vertex {v} is unstable")));
            }
        }
        let root = g.labels[0];
        let mut seen = vec![false; nv];
        fn build(
            v: usize,
            adj: &[Vec<usize>],
            leaf_at: &[Vec<usize>],
            seen: &mut [bool],
        ) -> Result<Vec<Node>> {
            seen[v] = true;
            let mut children: Vec<Node> =
                leaf_at[v].iter().filter(|&&l| l != 0).map(|&l| Node::Leaf(l)).collect();
            for &w in &adj[v] {
                if seen[w] {
                    continue;
                }
                children.push(Node::Vertex(build(w, adj, leaf_at, seen)?));
            }
            children.sort_by_key(Node::min_leaf);
            Ok(children)
        }
        let children = build(root, &adj, &leaf_at, &mut seen)?;
        if seen.iter().any(|s| !s) {
            return Err(Error::InvalidTree("graph is disconnected".into()));
        }
        Ok(StableTree { arity: leaves - 1, root: children })
    }
}

fn sets_sorted(sets: &[LeafSet]) -> Vec<LeafSet> {
    let mut v: Vec<LeafSet> = sets
        .iter()
        .map(|s| {
            let mut s = s.clone();
            s.sort_unstable();
            s
        })
        .collect();
    v.sort();
    v
}

impl fmt::Display for StableTree {
    /// Nested-parenthesis form, e.g. `0(1 (2 3))`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fn write_children(children: &[Node], f: &mut fmt::Formatter<'_>) -> fmt::Result {
            for (k, c) in children.iter().enumerate() {
                if k > 0 {
                    write!(f, " ")?;
                }
                match c {
                    Node::Leaf(l) => write!(f, "{l}")?,
                    Node::Vertex(ch) => {
                        write!(f, "(")?;
                        write_children(ch, f)?;
                        write!(f, ")")?;
                    }
                }
            }
            Ok(())
        }
        write!(f, "0(")?;
        write_children(&self.root, f)?;
        write!(f, ")")
    }
}

/// Vertex/edge/label data of a tree, the shape of the JSON encoding.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TreeGraph {
    pub num_vertices: usize,
    pub edges: Vec<(usize, usize)>,
    /// `labels[l]` is the vertex carrying leaf `l`.
    pub labels: Vec<usize>,
}

impl Serialize for StableTree {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        struct Labels<'a>(&'a [usize]);
        impl Serialize for Labels<'_> {
            fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
                let mut map = s.serialize_map(Some(self.0.len()))?;
                for (l, v) in self.0.iter().enumerate() {
                    map.serialize_entry(&l.to_string(), v)?;
                }
                map.end()
            }
        }
        #[derive(Serialize)]
        struct Json<'a> {
            leaves: usize,
            edges: Vec<[usize; 2]>,
            labels: Labels<'a>,
        }
        let g = self.graph();
        Json {
            leaves: self.arity + 1,
            edges: g.edges.iter().map(|&(a, b)| [a, b]).collect(),
            labels: Labels(&g.labels),
        }
        .serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for StableTree {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        #[derive(Deserialize)]
        struct Json {
            leaves: usize,
            edges: Vec<[usize; 2]>,
            labels: BTreeMap<usize, usize>,
        }
        let json = Json::deserialize(deserializer)?;
        if json.labels.len() != json.leaves || json.labels.keys().copied().ne(0..json.leaves) {
            return Err(D::Error::custom("labels must be a bijection onto 0..leaves"));
        }
        let num_vertices = json
            .edges
            .iter()
            .flat_map(|e| e.iter())
            .chain(json.labels.values())
            .max()
            .map_or(0, |m| m + 1);
        let graph = TreeGraph {
            num_vertices,
            edges: json.edges.iter().map(|e| (e[0], e[1])).collect(),
            labels: json.labels.values().copied().collect(),
        };
        StableTree::from_graph(&graph).map_err(D::Error::custom)
    }
}

/// Set partitions of `items` into at least `min_blocks` blocks; blocks appear
/// in order of their smallest element when `items` is sorted.
pub(crate) fn set_partitions(items: &[usize], min_blocks: usize) -> Vec<Vec<Vec<usize>>> {
    let mut out = Vec::new();
    let mut blocks: Vec<Vec<usize>> = Vec::new();
    fn rec(
        items: &[usize],
        k: usize,
        blocks: &mut Vec<Vec<usize>>,
        min_blocks: usize,
        out: &mut Vec<Vec<Vec<usize>>>,
    ) {
        if k == items.len() {
            if blocks.len() >= min_blocks {
                out.push(blocks.clone());
            }
            return;
        }
        for b in 0..blocks.len() {
            blocks[b].push(items[k]);
            rec(items, k + 1, blocks, min_blocks, out);
            blocks[b].pop();
        }
        blocks.push(vec![items[k]]);
        rec(items, k + 1, blocks, min_blocks, out);
        blocks.pop();
    }
    rec(items, 0, &mut blocks, min_blocks, &mut out);
    out
}

/// All canonical vertex-children lists on the given sorted leaf set.
fn vertex_children(items: &[usize]) -> Vec<Vec<Node>> {
    let mut out = Vec::new();
    for partition in set_partitions(items, 2) {
        let options: Vec<Vec<Node>> = partition
            .iter()
            .map(|block| {
                if block.len() == 1 {
                    vec![Node::Leaf(block[0])]
                } else {
                    vertex_children(block).into_iter().map(Node::Vertex).collect()
                }
            })
            .collect();
        let mut acc: Vec<Vec<Node>> = vec![Vec::new()];
        for opts in &options {
            let mut next = Vec::with_capacity(acc.len() * opts.len());
            for prefix in &acc {
                for o in opts {
                    let mut v = prefix.clone();
                    v.push(o.clone());
                    next.push(v);
                }
            }
            acc = next;
        }
        out.extend(acc);
    }
    out
}

/// Every stable tree of arity `n`, all codimensions, sorted by
/// `(codim, canonical form)`.
pub fn enumerate_all_trees(n: usize) -> Vec<StableTree> {
    if n < 2 {
        return Vec::new();
    }
    let items: Vec<usize> = (1..=n).collect();
    let mut trees: Vec<StableTree> = vertex_children(&items)
        .into_iter()
        .map(|root| StableTree { arity: n, root })
        .collect();
    trees.sort_by_cached_key(|t| (t.codim(), t.clone()));
    trees
}

/// One representative per isomorphism class of stable trees of arity `n`
/// and codimension `c`; empty when `c > n - 2`.
pub fn enumerate_trees(n: usize, c: usize) -> Vec<StableTree> {
    enumerate_all_trees(n).into_iter().filter(|t| t.codim() == c).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(n: usize) -> StableTree {
        StableTree::corolla(n).unwrap()
    }

    #[test]
    fn corolla_shapes() {
        let t = c(2);
        assert_eq!(t.num_vertices(), 1);
        assert_eq!(t.vertex_valences(), vec![3]);
        let t = c(4);
        assert_eq!(t.codim(), 0);
        assert_eq!(t.graph().labels.len(), 5);
        assert_eq!(StableTree::corolla(1), Err(Error::Arity { got: 1, min: 2 }));
    }

    #[test]
    fn graft_two_corollas() {
        let t = c(2).graft(&c(2), 1).unwrap();
        assert_eq!(t.arity(), 3);
        assert_eq!(t.codim(), 1);
        assert_eq!(t.edge_sets(), vec![vec![1, 2]]);
        assert_eq!(t.to_string(), "0((1 2) 3)");
        let t = c(2).graft(&c(2), 2).unwrap();
        assert_eq!(t.edge_sets(), vec![vec![2, 3]]);
        assert!(matches!(c(2).graft(&c(2), 3), Err(Error::SlotOutOfRange { slot: 3, arity: 2 })));
        assert!(matches!(c(2).graft(&c(2), 0), Err(Error::SlotOutOfRange { .. })));
    }

    #[test]
    fn small_counts() {
        assert_eq!(enumerate_trees(3, 1).len(), 3);
        assert_eq!(enumerate_trees(4, 1).len(), 10);
        assert_eq!(enumerate_trees(4, 2).len(), 15);
        assert_eq!(enumerate_trees(4, 3).len(), 0);
        assert_eq!(enumerate_trees(2, 0), vec![c(2)]);
    }

    #[test]
    fn action_rejects_moving_output() {
        let p = Permutation::new(vec![1, 0, 2]).unwrap();
        assert!(matches!(c(2).act(&p), Err(Error::InvalidPermutation(_))));
        assert!(Permutation::new(vec![0, 0, 1]).is_err());
    }

    #[test]
    fn identity_action_is_trivial() {
        for t in enumerate_all_trees(4) {
            assert_eq!(t.act(&Permutation::identity(4)).unwrap(), t);
        }
    }

    #[test]
    fn edge_sets_round_trip() {
        for t in enumerate_all_trees(5) {
            assert_eq!(StableTree::from_edge_sets(5, &t.edge_sets()).unwrap(), t);
        }
        assert!(StableTree::from_edge_sets(4, &[vec![1, 2], vec![2, 3]]).is_err());
        assert!(StableTree::from_edge_sets(3, &[vec![1, 2, 3]]).is_err());
    }

    #[test]
    fn json_shape_is_stable() {
        let t = c(2).graft(&c(2), 1).unwrap();
        let s = serde_json::to_string(&t).unwrap();
        assert_eq!(s, r#"{"leaves":4,"edges":[[0,1]],"labels":{"0":0,"1":1,"2":1,"3":0}}"#);
        let back: StableTree = serde_json::from_str(&s).unwrap();
        assert_eq!(back, t);
    }

    #[test]
    fn json_rejects_unstable_and_cyclic() {
        let unstable = r#"{"leaves":3,"edges":[[0,1]],"labels":{"0":0,"1":0,"2":1}}"#;
        assert!(serde_json::from_str::<StableTree>(unstable).is_err());
        let cyclic =
            r#"{"leaves":4,"edges":[[0,1],[1,0]],"labels":{"0":0,"1":1,"2":1,"3":0}}"#;
        assert!(serde_json::from_str::<StableTree>(cyclic).is_err());
    }

    #[test]
    fn block_permutation_matches_graft() {
        // graft then relabel agrees with relabel then graft at the moved slot
        let s = c(3);
        let t = c(2);
        for outer in Permutation::all_of_inputs(3) {
            for inner in Permutation::all_of_inputs(2) {
                for slot in 1..=3 {
                    let lhs = s
                        .act(&outer)
                        .unwrap()
                        .graft(&t.act(&inner).unwrap(), outer.apply(slot))
                        .unwrap();
                    let rhs = s
                        .graft(&t, slot)
                        .unwrap()
                        .act(&Permutation::block(&outer, &inner, slot))
                        .unwrap();
                    assert_eq!(lhs, rhs);
                }
            }
        }
    }
}
