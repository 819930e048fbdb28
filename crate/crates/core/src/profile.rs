//! Classification of the code of a cubelike graph.

use num_integer::Integer;

use crate::gf2::{BitVec, ConnectionSet};

/// Summary of the code spanned by the rows of `M`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CodeProfile {
    pub dim: usize,
    pub m: usize,
    /// gcd of the nonzero codeword weights.
    pub divisor: u32,
    /// gcd of the row weights of `M`.
    pub row_gcd: u32,
    pub center: BitVec,
    pub sigma: BitVec,
    pub even: bool,
    pub doubly_even: bool,
    pub self_orthogonal: bool,
    pub spanning: bool,
}

/// `n_ij = |{c in C : c_i = c_j = 1}|` for `i <= j`, row-major upper triangle.
pub(crate) fn pair_counts(c: &ConnectionSet) -> Vec<u32> {
    let d = c.dim();
    let mut n = vec![0u32; d * (d + 1) / 2];
    for &e in c.elements() {
        let mut k = 0;
        for i in 0..d {
            let bi = (e >> i) & 1;
            for j in i..d {
                n[k] += bi & (e >> j);
                k += 1;
            }
        }
    }
    n
}

/// Every pair of rows of `M`, including a row with itself, meets in an even
/// number of positions.
pub fn self_orthogonal(c: &ConnectionSet) -> bool {
    pair_counts(c).iter().all(|n| n % 2 == 0)
}

pub fn row_gcd(c: &ConnectionSet) -> u32 {
    c.row_weights().into_iter().fold(0, |g, w| g.gcd(&w))
}

/// Coordinate `i` is `(w_i / row_gcd) mod 2` where `w_i` is the weight of row `i`.
pub fn center(c: &ConnectionSet) -> BitVec {
    let weights = c.row_weights();
    let g = weights.iter().fold(0u32, |g, w| g.gcd(w));
    assert!(g > 0, "nonzero columns give a nonzero row weight");
    let bits = weights
        .iter()
        .enumerate()
        .filter(|(_, &w)| (w / g) % 2 == 1)
        .fold(0u32, |acc, (i, _)| acc | (1 << i));
    let center = BitVec::new(c.dim(), bits).expect("bits within dimension");
    debug_assert!(!center.is_zero());
    center
}

pub fn classify(c: &ConnectionSet) -> CodeProfile {
    let divisor = c.divisor();
    CodeProfile {
        dim: c.dim(),
        m: c.len(),
        divisor,
        row_gcd: row_gcd(c),
        center: center(c),
        sigma: c.sigma(),
        even: divisor.is_multiple_of(2),
        doubly_even: divisor.is_multiple_of(4),
        self_orthogonal: self_orthogonal(c),
        spanning: c.spans(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::construct::{example_graph, hypercube};
    use crate::gf2::Codeword;
    use proptest::prelude::*;

    fn simplex3() -> ConnectionSet {
        ConnectionSet::new(3, 1..8).unwrap()
    }

    /// Codeword-pair definition, independent of the row-pair shortcut.
    fn self_orthogonal_by_codewords(c: &ConnectionSet) -> bool {
        let words: Vec<Codeword> = (0..1u32 << c.dim())
            .map(|a| c.codeword(BitVec::new(c.dim(), a).unwrap()).unwrap())
            .collect();
        words
            .iter()
            .all(|x| words.iter().all(|y| x.intersection(y) % 2 == 0))
    }

    #[test]
    fn self_orthogonal_examples() {
        assert!(self_orthogonal(&example_graph()));
        assert!(!self_orthogonal(&hypercube(2).unwrap()));
        assert!(self_orthogonal(&simplex3()));
        assert!(self_orthogonal_by_codewords(&example_graph()));
        assert!(self_orthogonal_by_codewords(&simplex3()));
    }

    #[test]
    fn center_examples() {
        let x = example_graph();
        assert_eq!(x.row_weights(), vec![4, 4, 4, 4, 6]);
        assert_eq!(row_gcd(&x), 2);
        assert_eq!(center(&x).to_string(), "00001");
        assert_eq!(center(&hypercube(4).unwrap()).to_string(), "1111");
        assert_eq!(center(&hypercube(1).unwrap()).to_string(), "1");
    }

    #[test]
    fn classify_examples() {
        let p = classify(&example_graph());
        assert_eq!(p.divisor, 2);
        assert!(p.even && !p.doubly_even && p.self_orthogonal && p.spanning);
        assert_eq!(p.center.to_string(), "00001");
        assert!(p.sigma.is_zero());

        let p = classify(&hypercube(4).unwrap());
        assert_eq!(p.divisor, 1);
        assert!(!p.even && !p.self_orthogonal);
        assert_eq!(p.center, p.sigma);
        assert_eq!(p.center.to_string(), "1111");

        let p = classify(&simplex3());
        assert_eq!(p.divisor, 4);
        assert_eq!(p.row_gcd, 4);
        assert!(p.doubly_even && p.self_orthogonal);
        assert_eq!(p.center.to_string(), "111");
    }

    fn arb_set(max_dim: usize) -> impl Strategy<Value = ConnectionSet> {
        (1..=max_dim).prop_flat_map(|dim| {
            let n = (1u32 << dim) - 1;
            proptest::collection::btree_set(1..=n, 1..=n as usize)
                .prop_map(move |s| ConnectionSet::new(dim, s).unwrap())
        })
    }

    proptest! {
        #[test]
        fn profile_invariants(c in arb_set(6)) {
            let p = classify(&c);
            prop_assert!(!p.center.is_zero());
            prop_assert_eq!(p.even, p.divisor.is_multiple_of(2));
            prop_assert!(!p.doubly_even || p.even);
            prop_assert!(!p.doubly_even || p.self_orthogonal);
            // rows are codewords, so the divisor divides each row weight
            prop_assert_eq!(p.row_gcd % p.divisor, 0);
            if !p.sigma.is_zero() {
                prop_assert_eq!(p.divisor % 2, 1);
            }
            if p.row_gcd % 2 == 1 {
                prop_assert_eq!(p.center, p.sigma);
            }
        }

        #[test]
        fn row_pairs_match_codeword_pairs(c in arb_set(5)) {
            prop_assert_eq!(self_orthogonal(&c), self_orthogonal_by_codewords(&c));
        }
    }
}
