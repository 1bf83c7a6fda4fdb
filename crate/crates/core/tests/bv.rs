use logflc_core::bv::{bv_basis, check_operad_on, BVElement};
use logflc_core::Permutation;
use proptest::prelude::*;
use rand::rngs::StdRng;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};

/// A random well-formed expression using each of `gens` exactly once.
fn random_expr(rng: &mut StdRng, gens: &[usize]) -> String {
    let body = if gens.len() == 1 {
        format!("x{}", gens[0])
    } else {
        let cut = rng.gen_range(1..gens.len());
        let (l, r) = gens.split_at(cut);
        let (l, r) = (random_expr(rng, l), random_expr(rng, r));
        if rng.gen_bool(0.5) {
            format!("{l}*{r}")
        } else {
            format!("[{l},{r}]")
        }
    };
    if rng.gen_bool(0.25) {
        format!("D({body})")
    } else {
        body
    }
}

fn random_element(seed: u64, n: usize) -> (String, BVElement) {
    let mut rng = StdRng::seed_from_u64(seed);
    let mut gens: Vec<usize> = (1..=n).collect();
    gens.shuffle(&mut rng);
    let src = random_expr(&mut rng, &gens);
    let e = BVElement::parse(n, &src).unwrap();
    (src, e)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn normal_form_is_idempotent(seed in any::<u64>(), n in 1usize..=5) {
        let (src, e) = random_element(seed, n);
        let nf = e.normal_form().unwrap();
        prop_assert_eq!(nf.normal_form().unwrap(), nf.clone(), "{}", src);
        // the printed normal form parses back to itself
        if !nf.is_zero() {
            prop_assert_eq!(BVElement::parse(n, &nf.to_string()).unwrap().normal_form().unwrap(), nf);
        }
    }

    #[test]
    fn delta_squares_to_zero(seed in any::<u64>(), n in 1usize..=4) {
        let (_, e) = random_element(seed, n);
        prop_assert!(e.delta().delta().is_zero());
    }

    #[test]
    fn action_is_invertible(seed in any::<u64>(), n in 2usize..=4, k in 0usize..24) {
        let (_, e) = random_element(seed, n);
        let perms = Permutation::all_of_inputs(n);
        let p = &perms[k % perms.len()];
        prop_assert_eq!(e.act(p).unwrap().act(&p.inverse()).unwrap(), e);
    }
}

#[test]
fn operad_axioms_with_arity_four_samples() {
    let mut rng = StdRng::seed_from_u64(4);
    let three = bv_basis(3).unwrap();
    let mut four = bv_basis(4).unwrap();
    four.shuffle(&mut rng);
    four.truncate(3);
    let two = bv_basis(2).unwrap();
    let xs: Vec<BVElement> = three.choose_multiple(&mut rng, 6).cloned().collect();
    let report = check_operad_on(&xs, &two, &four);
    assert!(report.passed(), "{:?}", &report.failures[..report.failures.len().min(3)]);
    let report = check_operad_on(&four, &two, &two);
    assert!(report.passed(), "{:?}", &report.failures[..report.failures.len().min(3)]);
}
