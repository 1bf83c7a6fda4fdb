//! Reduction of Lie words to the left-normed comb basis.
//!
//! The multilinear part of the free graded Lie algebra embeds into the free
//! associative algebra by `[u, v] = uv - (-1)^{s(u)s(v)} vu`, where `s` is
//! the shifted degree `|.| + 1`. The comb `[[x_m, y_1], ..., y_k]` with `m`
//! the smallest generator is the only basis comb whose expansion contains a
//! word starting with `x_m`, and it contains exactly `x_m y_1 ... y_k` with
//! coefficient one, so comb coordinates are read off from those words.

use std::collections::btree_map::Entry;
use std::collections::BTreeMap;

use super::element::{Comb, Letter};

type Word = Vec<Letter>;
type AssocPoly = BTreeMap<Word, i64>;

fn add(p: &mut AssocPoly, w: Word, c: i64) {
    match p.entry(w) {
        Entry::Occupied(mut e) => {
            *e.get_mut() += c;
            if *e.get() == 0 {
                e.remove();
            }
        }
        Entry::Vacant(e) => {
            if c != 0 {
                e.insert(c);
            }
        }
    }
}

fn commutator(u: &AssocPoly, su: bool, v: &AssocPoly, sv: bool) -> AssocPoly {
    let sign = if su && sv { 1 } else { -1 };
    let mut out = AssocPoly::new();
    for (a, ca) in u {
        for (b, cb) in v {
            let ab: Word = a.iter().chain(b).copied().collect();
            let ba: Word = b.iter().chain(a).copied().collect();
            add(&mut out, ab, ca * cb);
            add(&mut out, ba, sign * ca * cb);
        }
    }
    out
}

fn expand(c: &Comb) -> AssocPoly {
    let letters = c.letters();
    let mut acc = AssocPoly::from([(vec![letters[0]], 1)]);
    let mut s = letters[0].shifted_odd();
    for &l in &letters[1..] {
        let single = AssocPoly::from([(vec![l], 1)]);
        acc = commutator(&acc, s, &single, l.shifted_odd());
        s ^= l.shifted_odd();
    }
    acc
}

/// `[u, v]` in the comb basis.
pub(crate) fn bracket_combs(u: &Comb, v: &Comb) -> Vec<(Comb, i64)> {
    let p = commutator(&expand(u), u.shifted_odd(), &expand(v), v.shifted_odd());
    let m = u.min_gen().min(v.min_gen());
    p.into_iter()
        .filter(|(w, _)| w[0].gen == m)
        .map(|(w, c)| (Comb::from_letters(w), c))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn x(g: usize) -> Comb {
        Comb::from_letters(vec![Letter::plain(g)])
    }

    #[test]
    fn degree_zero_bracket_is_symmetric() {
        assert_eq!(bracket_combs(&x(2), &x(1)), vec![(Comb::from_letters(vec![Letter::plain(1), Letter::plain(2)]), 1)]);
    }

    #[test]
    fn jacobi_in_comb_basis() {
        // [x1,[x2,x3]] = [[x1,x2],x3] + [[x1,x3],x2] when every letter is odd after the shift
        let x23 = bracket_combs(&x(2), &x(3));
        assert_eq!(x23.len(), 1);
        let mut r = bracket_combs(&x(1), &x23[0].0);
        r.sort();
        let comb = |g: [usize; 3]| Comb::from_letters(g.iter().map(|&k| Letter::plain(k)).collect());
        assert_eq!(r, vec![(comb([1, 2, 3]), 1), (comb([1, 3, 2]), 1)]);
    }
}
