//! Named cubelike graphs and operations on connection sets.

use crate::error::{Error, Result};
use crate::gf2::{check_dim, BitVec, ColumnOrder, ConnectionSet, MAX_DENSE_DIM, MAX_DIM};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Provenance {
    Hypercube,
    Example,
    Complement,
    DirectSum,
    Custom,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NamedGraph {
    pub name: String,
    pub connection_set: ConnectionSet,
    pub provenance: Provenance,
}

impl NamedGraph {
    pub fn new(name: impl Into<String>, connection_set: ConnectionSet, provenance: Provenance) -> Self {
        Self {
            name: name.into(),
            connection_set,
            provenance,
        }
    }
}

/// The `d`-cube: `C` is the standard basis, `M` the identity.
pub fn hypercube(d: usize) -> Result<ConnectionSet> {
    check_dim(d, MAX_DENSE_DIM)?;
    ConnectionSet::new(d, (0..d).map(|i| 1u32 << i))
}

/// Columns of the 5 x 11 generator matrix
///
/// ```text
/// 0 0 0 0 0 0 0 1 1 1 1
/// 0 0 0 0 0 1 1 0 0 1 1
/// 0 0 0 1 1 0 0 0 0 1 1
/// 0 1 1 0 0 0 0 0 0 1 1
/// 1 0 1 0 1 0 1 0 1 0 1
/// ```
///
/// in the displayed column order. Its code is self-orthogonal with divisor 2.
pub fn example_graph() -> ConnectionSet {
    const COLUMNS: [u32; 11] = [16, 8, 24, 4, 20, 2, 18, 1, 17, 15, 31];
    ConnectionSet::with_order(5, COLUMNS, ColumnOrder::AsGiven).expect("valid example")
}

pub fn named_example() -> NamedGraph {
    NamedGraph::new("example-5x11", example_graph(), Provenance::Example)
}

/// Modifies `C` in at most two elements so that the elements sum to `u`,
/// giving transfer from 0 to `u` at time pi/2.
pub fn pst_to_target(c: &ConnectionSet, u: BitVec) -> Result<ConnectionSet> {
    if u.dim() != c.dim() {
        return Err(Error::DimensionMismatch {
            expected: c.dim(),
            found: u.dim(),
        });
    }
    if u.is_zero() {
        return Err(Error::ZeroTarget);
    }
    let sigma = c.sigma();
    if sigma == u {
        return Ok(c.clone());
    }
    let base = if sigma.is_zero() {
        c.clone()
    } else {
        c.toggled(sigma)?
    };
    base.toggled(u)
}

/// Cayley complement: all nonzero vectors not in `C`.
pub fn complement(c: &ConnectionSet) -> Result<ConnectionSet> {
    let dim = c.dim();
    if dim < 2 {
        return Err(Error::Unsupported(
            "complement requires dimension at least 2".into(),
        ));
    }
    check_dim(dim, MAX_DENSE_DIM)?;
    let mut present = vec![false; 1 << dim];
    for &e in c.elements() {
        present[e as usize] = true;
    }
    let rest: Vec<u32> = (1..1u32 << dim).filter(|&v| !present[v as usize]).collect();
    if rest.is_empty() {
        return Err(Error::Degenerate("complement of the full set is empty".into()));
    }
    ConnectionSet::with_order(dim, rest, c.order())
}

/// Block-diagonal direct sum; `a` occupies the low coordinates.
/// The Cayley graph is the Cartesian product of the two graphs.
pub fn direct_sum(a: &ConnectionSet, b: &ConnectionSet) -> Result<ConnectionSet> {
    let dim = a.dim() + b.dim();
    check_dim(dim, MAX_DIM)?;
    let shift = a.dim();
    let elements = a
        .elements()
        .iter()
        .copied()
        .chain(b.elements().iter().map(|&e| e << shift));
    let order = if a.order() == ColumnOrder::AsGiven || b.order() == ColumnOrder::AsGiven {
        ColumnOrder::AsGiven
    } else {
        ColumnOrder::Sorted
    };
    ConnectionSet::with_order(dim, elements, order)
}

/// `k`-fold direct sum of `C` with itself.
pub fn power(c: &ConnectionSet, k: usize) -> Result<ConnectionSet> {
    if k == 0 {
        return Err(Error::Unsupported("power requires k >= 1".into()));
    }
    let dim = k * c.dim();
    check_dim(dim, MAX_DENSE_DIM)?;
    let mut out = c.clone();
    for _ in 1..k {
        out = direct_sum(&out, c)?;
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::profile::classify;
    use proptest::prelude::*;

    fn sym_diff(a: &ConnectionSet, b: &ConnectionSet) -> usize {
        let x: std::collections::BTreeSet<u32> = a.elements().iter().copied().collect();
        let y: std::collections::BTreeSet<u32> = b.elements().iter().copied().collect();
        x.symmetric_difference(&y).count()
    }

    #[test]
    fn hypercube_examples() {
        assert_eq!(hypercube(1).unwrap().elements(), &[1]);
        let c = hypercube(3).unwrap();
        let bits: Vec<String> = c.iter().map(|v| v.to_string()).collect();
        assert_eq!(bits, ["100", "010", "001"]);
        assert!(hypercube(0).is_err());
        assert!(hypercube(25).is_err());
    }

    #[test]
    fn example_first_column() {
        let x = example_graph();
        assert_eq!(x.iter().next().unwrap().to_string(), "00001");
        assert_eq!((x.dim(), x.len()), (5, 11));
        let rows = x.matrix();
        assert_eq!(rows[0], [0, 0, 0, 0, 0, 0, 0, 1, 1, 1, 1]);
        assert_eq!(rows[1], [0, 0, 0, 0, 0, 1, 1, 0, 0, 1, 1]);
        assert_eq!(rows[2], [0, 0, 0, 1, 1, 0, 0, 0, 0, 1, 1]);
        assert_eq!(rows[3], [0, 1, 1, 0, 0, 0, 0, 0, 0, 1, 1]);
        assert_eq!(rows[4], [1, 0, 1, 0, 1, 0, 1, 0, 1, 0, 1]);
    }

    #[test]
    fn pst_to_target_examples() {
        let k2 = hypercube(1).unwrap();
        assert_eq!(pst_to_target(&k2, "1".parse().unwrap()).unwrap(), k2);

        let sq = hypercube(2).unwrap();
        let out = pst_to_target(&sq, "10".parse().unwrap()).unwrap();
        let expect = ConnectionSet::new(2, [2, 3]).unwrap();
        assert!(out.same_set(&expect));
        assert_eq!(sym_diff(&sq, &out), 2);
        assert_eq!(out.sigma().to_string(), "10");

        assert_eq!(pst_to_target(&sq, "11".parse().unwrap()).unwrap(), sq);
        assert_eq!(
            pst_to_target(&sq, "00".parse().unwrap()),
            Err(Error::ZeroTarget)
        );
    }

    #[test]
    fn pst_to_target_degenerate() {
        // C = {sigma} and u = sigma' forces removing the only element first
        let c = ConnectionSet::new(2, [3]).unwrap();
        let out = pst_to_target(&c, "10".parse().unwrap());
        assert!(matches!(out, Err(Error::Degenerate(_))));
    }

    #[test]
    fn complement_examples() {
        let sq = hypercube(2).unwrap();
        assert_eq!(complement(&sq).unwrap().elements(), &[3]);
        let x = example_graph();
        let xc = complement(&x).unwrap();
        assert_eq!(xc.len(), 20);
        assert!(complement(&xc).unwrap().same_set(&x));
        assert!(complement(&ConnectionSet::new(2, [1, 2, 3]).unwrap()).is_err());
        assert!(complement(&hypercube(1).unwrap()).is_err());
    }

    #[test]
    fn direct_sum_examples() {
        let s = direct_sum(&hypercube(2).unwrap(), &hypercube(3).unwrap()).unwrap();
        assert_eq!(s, hypercube(5).unwrap());
        let x = example_graph();
        let xx = direct_sum(&x, &x).unwrap();
        assert_eq!((xx.dim(), xx.len()), (10, 22));
    }

    /// Brute-force divisor of a direct sum: gcd over all pairs of weights.
    #[test]
    fn direct_sum_divisor_brute_force() {
        use num_integer::Integer;
        let pairs = [
            (ConnectionSet::new(3, 1..8).unwrap(), example_graph()),
            (hypercube(2).unwrap(), ConnectionSet::new(3, 1..8).unwrap()),
            (ConnectionSet::new(3, [3, 5, 6]).unwrap(), ConnectionSet::new(2, [1, 2, 3]).unwrap()),
        ];
        for (a, b) in pairs {
            let mut g = 0u32;
            for x in 0..1u32 << a.dim() {
                for y in 0..1u32 << b.dim() {
                    let w = a.codeword_weight(BitVec::new(a.dim(), x).unwrap()).unwrap()
                        + b.codeword_weight(BitVec::new(b.dim(), y).unwrap()).unwrap();
                    g = g.gcd(&w);
                }
            }
            assert_eq!(direct_sum(&a, &b).unwrap().divisor(), g);
        }
    }

    #[test]
    fn power_examples() {
        let x = example_graph();
        assert_eq!(power(&x, 1).unwrap(), x);
        let x2 = power(&x, 2).unwrap();
        assert_eq!((x2.dim(), x2.len()), (10, 22));
        assert_eq!(power(&hypercube(1).unwrap(), 6).unwrap(), hypercube(6).unwrap());
        assert!(power(&x, 5).is_err());
        assert!(power(&x, 0).is_err());
    }

    #[test]
    fn power_preserves_class() {
        let x = example_graph();
        for k in 1..=4 {
            let p = classify(&power(&x, k).unwrap());
            assert!(p.self_orthogonal && p.even && !p.doubly_even, "k = {k}");
        }
    }

    proptest! {
        #[test]
        fn pst_to_target_sums_to_target(
            dim in 1usize..=6,
            raw in proptest::collection::btree_set(1u32..64, 1..20),
            u in 1u32..64,
        ) {
            let mask = (1u32 << dim) - 1;
            let elems: std::collections::BTreeSet<u32> =
                raw.into_iter().map(|e| e & mask).filter(|&e| e != 0).collect();
            prop_assume!(!elems.is_empty() && u & mask != 0);
            let c = ConnectionSet::new(dim, elems).unwrap();
            let u = BitVec::new(dim, u & mask).unwrap();
            match pst_to_target(&c, u) {
                Ok(out) => {
                    prop_assert_eq!(out.sigma(), u);
                    prop_assert!(sym_diff(&c, &out) <= 2);
                }
                Err(Error::Degenerate(_)) => {
                    // only when C is exactly {sigma}
                    prop_assert_eq!(c.len(), 1);
                }
                Err(e) => prop_assert!(false, "unexpected error {e}"),
            }
        }
    }
}
