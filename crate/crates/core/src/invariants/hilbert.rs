//! Hilbert series of monomial ideals by pivot splitting.
//!
//! For a monomial ideal `M` in `n` variables the Hilbert series of `S/M` is
//! `K(t) / (1-t)^n`. The numerator follows from
//! `K(M) = K(M + ⟨x⟩) + t·K(M : x)`, splitting on a variable `x` until every
//! generator is a pure power.

use std::collections::HashMap;

type Exps = Vec<u32>;

/// Integer polynomial in `t`, lowest degree first.
pub(crate) type Series = Vec<i128>;

fn minimize(mut gens: Vec<Exps>) -> Vec<Exps> {
    gens.sort_by_key(|g| (g.iter().map(|&e| u64::from(e)).sum::<u64>(), g.clone()));
    gens.dedup();
    let mut out: Vec<Exps> = Vec::with_capacity(gens.len());
    for g in gens {
        if !out.iter().any(|h| h.iter().zip(&g).all(|(a, b)| a <= b)) {
            out.push(g);
        }
    }
    out.sort();
    out
}

fn mul(a: &Series, b: &Series) -> Series {
    let mut out = vec![0i128; a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if *x == 0 {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    out
}

fn add_shifted(a: &mut Series, b: &Series, shift: usize) {
    if a.len() < b.len() + shift {
        a.resize(b.len() + shift, 0);
    }
    for (j, y) in b.iter().enumerate() {
        a[j + shift] += y;
    }
}

fn trim(mut s: Series) -> Series {
    while s.len() > 1 && *s.last().unwrap() == 0 {
        s.pop();
    }
    s
}

#[derive(Default)]
pub(crate) struct HilbertNumerator {
    memo: HashMap<Vec<Exps>, Series>,
}

impl HilbertNumerator {
    /// Numerator `K(t)` of the Hilbert series of `S / ⟨gens⟩`.
    pub(crate) fn compute(&mut self, gens: Vec<Exps>) -> Series {
        let gens = minimize(gens);
        if let Some(s) = self.memo.get(&gens) {
            return s.clone();
        }
        let result = self.split(&gens);
        self.memo.insert(gens, result.clone());
        result
    }

    fn split(&mut self, gens: &[Exps]) -> Series {
        if gens.is_empty() {
            return vec![1];
        }
        let n = gens[0].len();
        let support = |g: &Exps| g.iter().filter(|&&e| e > 0).count();
        if gens.iter().all(|g| support(g) <= 1) {
            // pure powers in distinct variables: product of (1 - t^a)
            let mut s: Series = vec![1];
            for g in gens {
                let a: u32 = g.iter().sum();
                let mut f = vec![0i128; a as usize + 1];
                f[0] = 1;
                f[a as usize] -= 1;
                s = mul(&s, &f);
            }
            return trim(s);
        }
        // pivot: the variable occurring in the most mixed generators
        let pivot = (0..n)
            .max_by_key(|&v| {
                let count = gens.iter().filter(|g| support(g) > 1 && g[v] > 0).count();
                (count, std::cmp::Reverse(v))
            })
            .expect("nonempty ring");

        let mut with_var: Vec<Exps> = gens.iter().filter(|g| g[pivot] == 0).cloned().collect();
        let mut unit = vec![0; n];
        unit[pivot] = 1;
        with_var.push(unit);

        let colon: Vec<Exps> = gens
            .iter()
            .map(|g| {
                let mut h = g.clone();
                h[pivot] = h[pivot].saturating_sub(1);
                h
            })
            .collect();

        let mut s = self.compute(with_var);
        let c = self.compute(colon);
        add_shifted(&mut s, &c, 1);
        trim(s)
    }
}

/// Dimension and degree read off `K(t) / (1-t)^n`: divide out `(1-t)` while
/// `K(1) = 0`; the remaining exponent is the dimension and `K(1)` the degree.
pub(crate) fn dimension_and_degree(numerator: &Series, nvars: usize) -> Option<(usize, i128)> {
    let mut k = numerator.clone();
    let mut dim = nvars;
    loop {
        let at_one: i128 = k.iter().sum();
        if at_one != 0 {
            return Some((dim, at_one));
        }
        if dim == 0 || k.iter().all(|&c| c == 0) {
            return None;
        }
        // synthetic division by (1 - t): q_i = sum_{j<=i} k_j
        let mut q = Vec::with_capacity(k.len().saturating_sub(1));
        let mut acc = 0i128;
        for &c in &k[..k.len() - 1] {
            acc += c;
            q.push(acc);
        }
        k = trim(q);
        dim -= 1;
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn hs(gens: &[&[u32]]) -> Series {
        HilbertNumerator::default().compute(gens.iter().map(|g| g.to_vec()).collect())
    }

    #[test]
    fn numerators() {
        assert_eq!(hs(&[]), vec![1]);
        assert_eq!(hs(&[&[2, 0]]), vec![1, 0, -1]);
        // <xy> in k[x,y]: 1 - t^2
        assert_eq!(hs(&[&[1, 1]]), vec![1, 0, -1]);
        // <x^2, xy> : 1 - 2t^2 + t^3
        assert_eq!(hs(&[&[2, 0], &[1, 1]]), vec![1, 0, -2, 1]);
    }

    #[test]
    fn dims() {
        assert_eq!(dimension_and_degree(&hs(&[&[0, 2]]), 2), Some((1, 2)));
        assert_eq!(dimension_and_degree(&hs(&[&[1, 0], &[0, 1]]), 2), Some((0, 1)));
        assert_eq!(dimension_and_degree(&hs(&[]), 3), Some((3, 1)));
        // <x^2, xy>: line with an embedded point, dimension 1 degree 1
        assert_eq!(dimension_and_degree(&hs(&[&[2, 0], &[1, 1]]), 2), Some((1, 1)));
    }
}
