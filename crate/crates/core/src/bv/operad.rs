//! Operadic structure on BV elements: insertion, the symmetric group
//! action, basis enumeration and the relation and axiom suites.

use rayon::prelude::*;

use super::element::{
    add_into, bracket, delta, product, rat, scale, sign, single, BVElement, Comb, Letter, Monomial,
    Terms,
};
use crate::error::{Error, Result};
use crate::flc::AxiomReport;
use crate::poly::PoincarePolynomial;
use crate::trees::{set_partitions, Permutation};

/// Largest arity for which bases are enumerated.
pub const BV_MAX_ARITY: usize = 6;

/// Evaluates the operation `m` on the inputs `subst(k)`. Inputs are taken
/// in reading order, so the caller accounts for Koszul signs of odd inputs.
fn eval(m: &Monomial, subst: &dyn Fn(usize) -> Terms) -> Result<Terms> {
    let input = |l: Letter| {
        let t = subst(l.gen);
        if l.delta {
            delta(&t)
        } else {
            t
        }
    };
    let mut acc = single(Monomial::unit());
    for block in m.blocks() {
        let letters = block.letters();
        let mut b = input(letters[0]);
        for &l in &letters[1..] {
            b = bracket(&b, &input(l))?;
        }
        acc = product(&acc, &b)?;
    }
    Ok(acc)
}

/// Number of odd operation symbols (`Δ`s and brackets) written after the
/// letter with generator `gen`, reading a comb infix as
/// `l_0 [ l_1 [ l_2 ...`.
fn odd_symbols_after(m: &Monomial, gen: usize) -> usize {
    let mut seen = false;
    let mut count = 0;
    for block in m.blocks() {
        let k = block.letters().len() - 1;
        if seen {
            count += k;
        }
        for (j, l) in block.letters().iter().enumerate() {
            if seen {
                count += l.degree();
            }
            if l.gen == gen {
                seen = true;
                count += if j == 0 { k } else { k - j };
            }
        }
    }
    count
}

fn relabel(m: &Monomial, f: impl Fn(usize) -> usize) -> Monomial {
    let blocks: Vec<Comb> = m
        .blocks()
        .iter()
        .map(|b| {
            Comb::from_letters(b.letters().iter().map(|l| Letter { gen: f(l.gen), delta: l.delta }).collect())
        })
        .collect();
    Monomial::from_raw(blocks)
}

impl BVElement {
    /// Rewrites every term from scratch; the identity on valid elements.
    pub fn normal_form(&self) -> Result<BVElement> {
        let mut out = Terms::new();
        for (m, c) in self.terms() {
            let t = eval(m, &|g| single(Monomial::generator(g)))?;
            add_into(&mut out, scale(&t, c));
        }
        BVElement::from_terms(self.arity(), out)
    }

    /// `self ∘_slot other`: inputs of `other` occupy `slot..slot + m - 1`.
    pub fn compose(&self, other: &BVElement, slot: usize) -> Result<BVElement> {
        let n = self.arity();
        let m = other.arity();
        if slot == 0 || slot > n {
            return Err(Error::SlotOutOfRange { slot, arity: n });
        }
        if m == 0 {
            return Err(Error::Arity { got: 0, min: 1 });
        }
        let mut out = Terms::new();
        for (ma, ca) in self.terms() {
            let after = odd_symbols_after(ma, slot);
            for (mb, cb) in other.terms() {
                let inner = single(relabel(mb, |g| g + slot - 1));
                let subst = |g: usize| {
                    if g < slot {
                        single(Monomial::generator(g))
                    } else if g == slot {
                        inner.clone()
                    } else {
                        single(Monomial::generator(g + m - 1))
                    }
                };
                let t = eval(ma, &subst)?;
                let c = ca * cb * rat(sign(mb.degree() * after));
                add_into(&mut out, scale(&t, &c));
            }
        }
        BVElement::from_terms(n + m - 1, out)
    }

    /// Relabels input `k` as `p(k)`.
    pub fn act(&self, p: &Permutation) -> Result<BVElement> {
        if p.arity() != self.arity() {
            return Err(Error::InvalidPermutation(format!(
                "permutation of {} inputs applied to an element of arity {}",
                p.arity(),
                self.arity()
            )));
        }
        let mut out = Terms::new();
        for (m, c) in self.terms() {
            let t = eval(m, &|g| single(Monomial::generator(p.apply(g))))?;
            add_into(&mut out, scale(&t, c));
        }
        BVElement::from_terms(self.arity(), out)
    }

    /// The arity-one operation `Δ`.
    pub fn delta_unit() -> BVElement {
        BVElement::from_monomial(1, Monomial::letter(Letter::decorated(1))).expect("arity 1")
    }

    /// The operadic unit `x_1`.
    pub fn unit() -> BVElement {
        BVElement::from_monomial(1, Monomial::generator(1)).expect("arity 1")
    }
}

fn permutations(items: &[usize]) -> Vec<Vec<usize>> {
    if items.is_empty() {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for (k, &x) in items.iter().enumerate() {
        let mut rest = items.to_vec();
        rest.remove(k);
        for mut p in permutations(&rest) {
            p.insert(0, x);
            out.push(p);
        }
    }
    out
}

/// Basis monomials on the given generators: forests of combs, letters
/// optionally decorated when `decorated` is set.
pub fn basis_on(gens: &[usize], decorated: bool) -> Vec<Monomial> {
    if gens.is_empty() {
        return vec![Monomial::unit()];
    }
    let mut out = Vec::new();
    for partition in set_partitions(gens, 1) {
        // all combs for each block, then their products
        let per_block: Vec<Vec<Comb>> = partition
            .iter()
            .map(|block| {
                let mut combs = Vec::new();
                for rest in permutations(&block[1..]) {
                    let order: Vec<usize> = std::iter::once(block[0]).chain(rest).collect();
                    let decos = if decorated { 1usize << order.len() } else { 1 };
                    for mask in 0..decos {
                        let letters = order
                            .iter()
                            .enumerate()
                            .map(|(k, &g)| Letter { gen: g, delta: mask >> k & 1 == 1 })
                            .collect();
                        combs.push(Comb::from_letters(letters));
                    }
                }
                combs
            })
            .collect();
        let mut acc: Vec<Vec<Comb>> = vec![vec![]];
        for options in &per_block {
            acc = acc
                .into_iter()
                .flat_map(|prefix| {
                    options.iter().map(move |c| {
                        let mut p = prefix.clone();
                        p.push(c.clone());
                        p
                    })
                })
                .collect();
        }
        out.extend(acc.into_iter().map(Monomial::from_raw));
    }
    out.sort();
    out
}

fn check_arity(n: usize) -> Result<()> {
    if n == 0 || n > BV_MAX_ARITY {
        return Err(Error::ArityRange { got: n, min: 1, max: BV_MAX_ARITY });
    }
    Ok(())
}

/// Basis of `H_*(FLD_n)`.
pub fn bv_basis(n: usize) -> Result<Vec<BVElement>> {
    check_arity(n)?;
    let gens: Vec<usize> = (1..=n).collect();
    basis_on(&gens, true).into_iter().map(|m| BVElement::from_monomial(n, m)).collect()
}

/// Basis of the Gerstenhaber part `H_*(LD_n)`.
pub fn ger_basis(n: usize) -> Result<Vec<BVElement>> {
    check_arity(n)?;
    let gens: Vec<usize> = (1..=n).collect();
    basis_on(&gens, false).into_iter().map(|m| BVElement::from_monomial(n, m)).collect()
}

fn degree_counts(basis: &[BVElement]) -> PoincarePolynomial {
    let mut coeffs = Vec::new();
    for e in basis {
        let d = e.degree().expect("basis elements are homogeneous");
        if coeffs.len() <= d {
            coeffs.resize(d + 1, 0);
        }
        coeffs[d] += 1;
    }
    PoincarePolynomial::new(coeffs)
}

/// Basis monomials of `H_*(FLD_n)` counted by degree.
pub fn bv_dims(n: usize) -> Result<PoincarePolynomial> {
    Ok(degree_counts(&bv_basis(n)?))
}

/// Basis monomials of `H_*(LD_n)` counted by degree.
pub fn ger_dims(n: usize) -> Result<PoincarePolynomial> {
    Ok(degree_counts(&ger_basis(n)?))
}

/// Operad axioms with the first two operands ranging over every basis
/// element of arity `<= max_arity` and the third over arity
/// `<= min(max_arity, 2)`: unit, sequential and parallel associativity and
/// equivariance.
pub fn check_bv_operad(max_arity: usize) -> Result<AxiomReport> {
    let basis = |k: usize| -> Result<Vec<BVElement>> {
        Ok((1..=k).map(bv_basis).collect::<Result<Vec<_>>>()?.into_iter().flatten().collect())
    };
    let full = basis(max_arity)?;
    let thirds = basis(max_arity.min(2))?;
    Ok(check_operad_on(&full, &full, &thirds))
}

/// The same checks on explicit operand lists.
pub fn check_operad_on(xs: &[BVElement], ys: &[BVElement], zs: &[BVElement]) -> AxiomReport {
    let unit = BVElement::unit();
    xs.par_iter()
        .map(|a| {
            let mut rep = AxiomReport::default();
            let n = a.arity();
            let lu = unit.compose(a, 1).ok();
            rep.record("unit", lu.as_ref() == Some(a), || format!("x1 ∘ {a}"));
            for i in 1..=n {
                let ru = a.compose(&unit, i).ok();
                rep.record("unit", ru.as_ref() == Some(a), || format!("{a} ∘_{i} x1"));
            }
            for b in ys {
                let m = b.arity();
                for i in 1..=n {
                    let ab = a.compose(b, i).expect("slot");
                    for c in zs {
                        for j in 1..=m {
                            let lhs = ab.compose(c, i + j - 1).expect("slot");
                            let rhs = a.compose(&b.compose(c, j).expect("slot"), i).expect("slot");
                            rep.record("sequential-associativity", lhs == rhs, || {
                                format!("({a} ∘_{i} {b}) ∘_{} {c}", i + j - 1)
                            });
                        }
                        for j in i + 1..=n {
                            let lhs = ab.compose(c, j + m - 1).expect("slot");
                            let s = sign(
                                b.degree().unwrap_or(0) * c.degree().unwrap_or(0),
                            );
                            let rhs = a
                                .compose(c, j)
                                .expect("slot")
                                .compose(b, i)
                                .expect("slot")
                                .scaled(&rat(s));
                            rep.record("parallel-associativity", lhs == rhs, || {
                                format!("({a} ∘_{i} {b}) ∘_{} {c}", j + m - 1)
                            });
                        }
                    }
                }
            }
            rep.merge(check_equivariance(a, ys))
        })
        .reduce(AxiomReport::default, AxiomReport::merge)
}

fn check_equivariance(a: &BVElement, ys: &[BVElement]) -> AxiomReport {
    let mut rep = AxiomReport::default();
    let n = a.arity();
    for sigma in Permutation::all_of_inputs(n) {
        let sa = a.act(&sigma).expect("arity");
        for b in ys {
            for tau in Permutation::all_of_inputs(b.arity()) {
                let tb = b.act(&tau).expect("arity");
                for i in 1..=n {
                    let lhs = sa.compose(&tb, sigma.apply(i)).expect("slot");
                    let rhs = a
                        .compose(b, i)
                        .expect("slot")
                        .act(&Permutation::block(&sigma, &tau, i))
                        .expect("arity");
                    rep.record("equivariance", lhs == rhs, || {
                        format!("σ={:?} τ={:?} on {a} ∘_{i} {b}", sigma.images(), tau.images())
                    });
                }
            }
        }
    }
    rep
}

/// Ordered tuples of nonempty disjoint generator sets covering `1..=n`.
fn ordered_splits(n: usize, parts: usize) -> Vec<Vec<Vec<usize>>> {
    let gens: Vec<usize> = (1..=n).collect();
    let mut out = Vec::new();
    for labels in 0..parts.pow(n as u32) {
        let mut split = vec![Vec::new(); parts];
        let mut l = labels;
        for &g in &gens {
            split[l % parts].push(g);
            l /= parts;
        }
        if split.iter().all(|s| !s.is_empty()) {
            out.push(split);
        }
    }
    out
}

/// Operand tuples: each operand ranges over basis monomials on its part.
fn operand_tuples(max_arity: usize, parts: usize) -> Vec<Vec<Terms>> {
    let mut out = Vec::new();
    for n in parts..=max_arity {
        for split in ordered_splits(n, parts) {
            let mut acc: Vec<Vec<Terms>> = vec![vec![]];
            for gens in &split {
                let options = basis_on(gens, true);
                acc = acc
                    .into_iter()
                    .flat_map(|prefix| {
                        options.iter().map(move |m| {
                            let mut p = prefix.clone();
                            p.push(single(m.clone()));
                            p
                        })
                    })
                    .collect();
            }
            out.extend(acc);
        }
    }
    out
}

fn deg(t: &Terms) -> usize {
    t.keys().next().map_or(0, Monomial::degree)
}

fn sub(a: &Terms, b: &Terms) -> Terms {
    let mut out = a.clone();
    add_into(&mut out, scale(b, &rat(-1)));
    out
}

fn plus(a: &Terms, b: &Terms) -> Terms {
    let mut out = a.clone();
    add_into(&mut out, b.clone());
    out
}

fn sc(t: &Terms, s: i64) -> Terms {
    scale(t, &rat(s))
}

fn show(ts: &[&Terms]) -> String {
    let parts: Vec<String> = ts
        .iter()
        .map(|t| t.keys().next().map_or_else(|| "0".to_string(), |m| m.to_string()))
        .collect();
    parts.join(", ")
}

/// BV algebra relations as normal-form identities on all tuples of basis
/// monomials with disjoint generators and total arity `<= max_arity`.
pub fn check_bv_relations(max_arity: usize) -> Result<AxiomReport> {
    let mut rep = AxiomReport::default();
    let p = |a: &Terms, b: &Terms| product(a, b).expect("disjoint");
    let br = |a: &Terms, b: &Terms| bracket(a, b).expect("disjoint");

    for n in 1..=max_arity {
        let gens: Vec<usize> = (1..=n).collect();
        for m in basis_on(&gens, true) {
            let t = single(m.clone());
            rep.record("delta-squared", delta(&delta(&t)).is_empty(), || format!("ΔΔ({m})"));
        }
    }

    for ops in operand_tuples(max_arity, 2) {
        let (a, b) = (&ops[0], &ops[1]);
        let (da, db) = (deg(a), deg(b));
        rep.record("commutativity", p(a, b) == sc(&p(b, a), sign(da * db)), || show(&[a, b]));
        rep.record(
            "antisymmetry",
            br(a, b) == sc(&br(b, a), -sign((da + 1) * (db + 1))),
            || show(&[a, b]),
        );
        // [a, b] = (-1)^{|a|} (Δ(ab) - Δ(a)b - (-1)^{|a|} aΔ(b))
        let dev = sub(&sub(&delta(&p(a, b)), &p(&delta(a), b)), &sc(&p(a, &delta(b)), sign(da)));
        rep.record("bv-deviation", br(a, b) == sc(&dev, sign(da)), || show(&[a, b]));
        // Δ[a, b] = [Δa, b] + (-1)^{|a|+1} [a, Δb]
        let rhs = plus(&br(&delta(a), b), &sc(&br(a, &delta(b)), sign(da + 1)));
        rep.record("delta-derivation", delta(&br(a, b)) == rhs, || show(&[a, b]));
    }

    for ops in operand_tuples(max_arity, 3) {
        let (a, b, c) = (&ops[0], &ops[1], &ops[2]);
        let (da, db, dc) = (deg(a), deg(b), deg(c));
        rep.record("associativity", p(&p(a, b), c) == p(a, &p(b, c)), || show(&[a, b, c]));
        // [a, [b, c]] = [[a, b], c] + (-1)^{(|a|+1)(|b|+1)} [b, [a, c]]
        let rhs = plus(&br(&br(a, b), c), &sc(&br(b, &br(a, c)), sign((da + 1) * (db + 1))));
        rep.record("jacobi", br(a, &br(b, c)) == rhs, || show(&[a, b, c]));
        // [a, bc] = [a, b]c + (-1)^{(|a|+1)|b|} b[a, c]
        let rhs = plus(&p(&br(a, b), c), &sc(&p(b, &br(a, c)), sign((da + 1) * db)));
        rep.record("leibniz", br(a, &p(b, c)) == rhs, || show(&[a, b, c]));
        // [ab, c] = a[b, c] + (-1)^{|b|(|c|+1)} [a, c]b
        let rhs = plus(&p(a, &br(b, c)), &sc(&p(&br(a, c), b), sign(db * (dc + 1))));
        rep.record("leibniz-right", br(&p(a, b), c) == rhs, || show(&[a, b, c]));
        // the seven-term relation
        let abc = p(&p(a, b), c);
        let mut rhs = p(&delta(&p(a, b)), c);
        add_into(&mut rhs, sc(&p(a, &delta(&p(b, c))), sign(da)));
        add_into(&mut rhs, sc(&p(b, &delta(&p(a, c))), sign((da + 1) * db)));
        add_into(&mut rhs, sc(&p(&p(&delta(a), b), c), -1));
        add_into(&mut rhs, sc(&p(&p(a, &delta(b)), c), -sign(da)));
        add_into(&mut rhs, sc(&p(&p(a, b), &delta(c)), -sign(da + db)));
        rep.record("seven-term", delta(&abc) == rhs, || show(&[a, b, c]));
    }
    Ok(rep)
}
