//! The eight aggregate acceptance checks, each returning a one-line verdict.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::time::{Duration, Instant};

use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};
use serde::Serialize;

use crate::betti::{
    betti_flc_top, betti_fld, betti_ld, betti_open_counted, betti_open_recursion, count_open,
    primes_from_five,
};
use crate::bv::{assemble_formal_model, bv_dims, check_bv_relations, ger_dims, ld_pushout};
use crate::error::Result;
use crate::flc::{check_flc_axioms, check_tree_axioms, AxiomReport};
use crate::logspace::{classify_maps, BaseTag, BundleLabel, Component, MapClass, NCLogDescriptor};
use crate::trees::{enumerate_trees, Permutation, StableTree};
use crate::weights::{acyclicity_certificate, build_e1, purity_check, AcyclicSpace};

pub const CRITERIA: [&str; 8] = [
    "operad axioms",
    "stratum census",
    "purity identities",
    "weight rows",
    "acyclicity certificates",
    "formality dimensions",
    "LD pushout",
    "log-map classification",
];

/// Wall-clock budget for criterion 1 and criterion 3.
pub const TIME_BUDGET: Duration = Duration::from_secs(60);

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct VerifyConfig {
    /// Upper bound applied to every arity range below.
    pub max_n: usize,
    /// Seed for the randomized log-map compositions.
    pub seed: u64,
}

impl Default for VerifyConfig {
    fn default() -> Self {
        VerifyConfig { max_n: 7, seed: 0x5eed }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Verdict {
    pub id: usize,
    pub name: &'static str,
    pub pass: bool,
    pub detail: String,
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let tag = if self.pass { "PASS" } else { "FAIL" };
        write!(f, "[{tag}] {}. {}: {}", self.id, self.name, self.detail)
    }
}

fn verdict(id: usize, pass: bool, detail: String) -> Verdict {
    Verdict { id, name: CRITERIA[id - 1], pass, detail }
}

fn failed(id: usize, e: crate::Error) -> Verdict {
    verdict(id, false, format!("error: {e}"))
}

/// Runs one criterion (`1..=8`) and reports its wall time separately.
pub fn run_criterion(id: usize, cfg: &VerifyConfig) -> (Verdict, Duration) {
    let start = Instant::now();
    let v = match id {
        1 => operad_axioms(cfg, start),
        2 => stratum_census(cfg),
        3 => purity_identities(cfg, start),
        4 => weight_rows(cfg),
        5 => acyclicity(cfg),
        6 => formality(cfg),
        7 => pushout(cfg),
        8 => log_maps(cfg),
        _ => panic!("criteria are numbered 1..=8"),
    };
    let v = v.unwrap_or_else(|e| failed(id, e));
    (v, start.elapsed())
}

pub fn run_all(cfg: &VerifyConfig) -> Vec<(Verdict, Duration)> {
    (1..=8).map(|id| run_criterion(id, cfg)).collect()
}

fn first_failure(rep: &AxiomReport) -> String {
    rep.failures.first().map_or_else(String::new, |f| format!("; first failure {}: {}", f.axiom, f.detail))
}

fn operad_axioms(cfg: &VerifyConfig, start: Instant) -> Result<Verdict> {
    let flc_n = cfg.max_n.min(4);
    let tree_n = cfg.max_n.min(5);
    let flc = check_flc_axioms(flc_n);
    let trees = check_tree_axioms(tree_n);
    let in_time = start.elapsed() < TIME_BUDGET;
    let failures = flc.failures.len() + trees.failures.len();
    let mut detail = format!(
        "flc arity ≤ {flc_n}: {} checks, trees arity ≤ {tree_n}: {} checks, {failures} failures",
        flc.total(),
        trees.total()
    );
    detail += &first_failure(&flc);
    detail += &first_failure(&trees);
    if !in_time {
        detail += "; over the 60 s budget";
    }
    Ok(verdict(1, failures == 0 && in_time, detail))
}

/// Subsets `A ⊂ {1..n-1}` with `2 <= |A| <= n-2`: the sides away from mark
/// `0` of the boundary bipartitions of `Mbar_{0,n}`.
fn bipartition_sides(n: usize) -> Vec<u32> {
    (0u32..1 << (n - 1))
        .map(|m| m << 1)
        .filter(|m| (2..=n as u32 - 2).contains(&m.count_ones()))
        .collect()
}

fn compatible(a: u32, b: u32) -> bool {
    a & b == 0 || a & b == a || a & b == b
}

/// Every stable tree of arity `n`, generated by grafting smaller trees and
/// relabeling.
pub fn trees_by_grafting(n: usize) -> BTreeSet<StableTree> {
    let mut memo: BTreeMap<usize, BTreeSet<StableTree>> = BTreeMap::new();
    for k in 2..=n {
        let mut set = BTreeSet::from([StableTree::corolla(k).expect("k >= 2")]);
        for a in 2..k {
            let b = k + 1 - a;
            for t1 in &memo[&a] {
                for t2 in &memo[&b] {
                    for i in 1..=a {
                        let g = t1.graft(t2, i).expect("slot");
                        for p in Permutation::all_of_inputs(k) {
                            set.insert(g.act(&p).expect("arity"));
                        }
                    }
                }
            }
        }
        memo.insert(k, set);
    }
    memo.remove(&n).unwrap_or_default()
}

fn stratum_census(cfg: &VerifyConfig) -> Result<Verdict> {
    let top = cfg.max_n.clamp(5, 6);
    let mut parts = Vec::new();
    let mut ok = true;
    let expected: [(usize, usize, usize); 3] = [(5, 1, 10), (5, 2, 15), (6, 1, 25)];
    for &(marks, codim, want) in expected.iter().filter(|e| e.0 <= top) {
        let arity = marks - 1;
        let enumerated = enumerate_trees(arity, codim).len();
        let grafted = trees_by_grafting(arity).iter().filter(|t| t.codim() == codim).count();
        let sides = bipartition_sides(marks);
        let brute = match codim {
            1 => sides.len(),
            _ => {
                let mut c = 0;
                for (k, &a) in sides.iter().enumerate() {
                    c += sides[k + 1..].iter().filter(|&&b| compatible(a, b)).count();
                }
                c
            }
        };
        ok &= enumerated == want && grafted == want && brute == want;
        parts.push(format!("Mbar_0,{marks} codim {codim}: {enumerated}/{grafted}/{brute}"));
    }
    Ok(verdict(2, ok, format!("enumerated/grafted/bipartitions: {}", parts.join(", "))))
}

fn purity_identities(cfg: &VerifyConfig, start: Instant) -> Result<Verdict> {
    let top = cfg.max_n.min(7);
    let mut ok = true;
    let mut checked = 0;
    for n in 4..=top {
        let dim = n - 3;
        let betti = betti_open_recursion(n)?;
        let primes = primes_from_five((dim + 2).max(3));
        for &q in &primes {
            let predicted: i128 = (0..=dim)
                .map(|k| {
                    let term = betti.coeff(k) as i128 * (q as i128).pow((dim - k) as u32);
                    if k % 2 == 0 {
                        term
                    } else {
                        -term
                    }
                })
                .sum();
            ok &= predicted == count_open(n, q)? as i128;
            checked += 1;
        }
        ok &= betti_open_counted(n, &primes)? == betti;
    }
    let in_time = start.elapsed() < TIME_BUDGET;
    Ok(verdict(
        3,
        ok && in_time,
        format!("M_0,n for 4 ≤ n ≤ {top}: {checked} point counts match the signed Betti polynomial"),
    ))
}

fn weight_rows(cfg: &VerifyConfig) -> Result<Verdict> {
    let top = cfg.max_n.min(7);
    let mut rows = 0;
    let mut sample = String::new();
    for n in 4..=top {
        let rep = purity_check(&build_e1(n)?)?;
        rows += rep.rows.len();
        if n == 5 {
            sample = rep.rows.iter().skip(1).map(|r| r.identity.clone()).collect::<Vec<_>>().join(", ");
        }
    }
    Ok(verdict(4, true, format!("{rows} rows for 4 ≤ n ≤ {top} hold; n = 5: {sample}")))
}

fn acyclicity(cfg: &VerifyConfig) -> Result<Verdict> {
    let mut ok = true;
    for d in 1..=10 {
        let c = acyclicity_certificate(AcyclicSpace::P1WithPoints(d))?;
        ok &= c.pass && c.hodge_dims == [1, d as u64 - 1];
    }
    let top = cfg.max_n.min(5);
    for n in 1..=top {
        let c = acyclicity_certificate(AcyclicSpace::Flc(n))?;
        ok &= c.pass && c.hodge_dims == betti_flc_top(n)?.coeffs();
    }
    Ok(verdict(5, ok, format!("(P^1, d pts) for 1 ≤ d ≤ 10 and FLC_n for 1 ≤ n ≤ {top}")))
}

fn formality(cfg: &VerifyConfig) -> Result<Verdict> {
    let top = cfg.max_n.min(5);
    let mut ok = true;
    for n in 1..=top {
        ok &= bv_dims(n)? == betti_fld(n)?;
        ok &= ger_dims(n)? == betti_ld(n)?;
        let m = assemble_formal_model(n)?;
        ok &= m.zero_differential() && m.dims == betti_flc_top(n)?;
    }
    let rel = check_bv_relations(cfg.max_n.min(3))?;
    ok &= rel.passed();
    Ok(verdict(
        6,
        ok,
        format!(
            "bv/ger dims and formal models for n ≤ {top}; {} relation checks, {} failures{}",
            rel.total(),
            rel.failures.len(),
            first_failure(&rel)
        ),
    ))
}

fn pushout(cfg: &VerifyConfig) -> Result<Verdict> {
    let top = cfg.max_n.min(7);
    let quotients: Vec<String> = (2..=top).map(|n| ld_pushout(n).map(|q| q.to_string())).collect::<Result<_>>()?;
    Ok(verdict(7, true, format!("fld(n)/(1+t)^n = ld(n) for 2 ≤ n ≤ {top}; n = {top}: {}", quotients.last().map_or("", |s| s))))
}

fn mat_mul(a: &[Vec<u32>], b: &[Vec<u32>]) -> Vec<Vec<u32>> {
    a.iter()
        .map(|row| (0..b[0].len()).map(|j| row.iter().zip(b).map(|(x, r)| x * r[j]).sum()).collect())
        .collect()
}

fn log_maps(cfg: &VerifyConfig) -> Result<Verdict> {
    let mut rng = StdRng::seed_from_u64(cfg.seed);
    let mut agree = 0;
    let cases = 100;
    for _ in 0..cases {
        let d: Vec<usize> = (0..3).map(|_| rng.gen_range(1..=4)).collect();
        let spaces: Vec<NCLogDescriptor> = d.iter().map(|&k| NCLogDescriptor::ptlog_power(k)).collect();
        let mut mats = Vec::new();
        let mut maps = Vec::new();
        for k in 0..2 {
            let MapClass::Family(fam) = classify_maps(&spaces[k], &spaces[k + 1])? else {
                return Ok(verdict(8, false, "pt_log powers have no maps".into()));
            };
            let m: Vec<Vec<u32>> = (0..d[k]).map(|_| (0..d[k + 1]).map(|_| rng.gen_range(1..=5)).collect()).collect();
            maps.push(fam.instantiate(&m)?);
            mats.push(m);
        }
        if maps[0].then(&maps[1])?.exponent_matrix() == mat_mul(&mats[0], &mats[1]) {
            agree += 1;
        }
    }
    // targets whose divisor is not inside the source divisor
    let x = BaseTag::new("X");
    let l = vec![BundleLabel::named("L")];
    let a = Component::named("a");
    let b = Component::named("b");
    let none = NCLogDescriptor::new(x.clone(), 1, [], l.clone())?;
    let only_a = NCLogDescriptor::with_disjoint_divisor(x.clone(), 1, &[a.clone()], l.clone())?;
    let both = NCLogDescriptor::with_disjoint_divisor(x, 1, &[a, b], l)?;
    let empty_cases = [(&none, &only_a), (&none, &both), (&only_a, &both)];
    let empties = empty_cases.iter().filter(|(s, t)| matches!(classify_maps(s, t), Ok(MapClass::Empty))).count();
    let nonempty = [(&both, &only_a), (&only_a, &none), (&both, &both)];
    let families = nonempty.iter().filter(|(s, t)| matches!(classify_maps(s, t), Ok(MapClass::Family(_)))).count();
    Ok(verdict(
        8,
        agree == cases && empties == empty_cases.len() && families == nonempty.len(),
        format!(
            "{agree}/{cases} compositions equal matrix products; {empties}/{} D' ⊄ D cases empty",
            empty_cases.len()
        ),
    ))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn census_oracles_agree_on_small_cases() {
        assert_eq!(trees_by_grafting(3).len(), 4);
        assert_eq!(bipartition_sides(5).len(), 10);
        assert_eq!(bipartition_sides(6).len(), 25);
    }

    #[test]
    fn cheap_criteria_pass() {
        let cfg = VerifyConfig { max_n: 5, ..Default::default() };
        for id in [2, 4, 7, 8] {
            let (v, _) = run_criterion(id, &cfg);
            assert!(v.pass, "{v}");
        }
    }
}
