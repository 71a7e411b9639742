use std::collections::BTreeMap;

use super::BettiTable;
use crate::complex::SimplicialComplex;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::splitting::{EdgeSplit, FacetSplit, VertexSplit};

/// `C(n, k)`, zero outside `0 ≤ k ≤ n`.
pub fn binomial(n: i64, k: i64) -> u64 {
    if k < 0 || n < 0 || k > n {
        return 0;
    }
    let k = k.min(n - k) as u128;
    let mut acc: u128 = 1;
    for t in 0..k {
        acc = acc * (n as u128 - t) / (t + 1);
    }
    u64::try_from(acc).expect("binomial coefficient overflows u64")
}

/// Betti table of the edge ideal of the star `K_{1,d}`:
/// `β_{i,i+2} = C(d, i+1)` for `0 ≤ i < d`.
pub fn betti_k1d(d: usize) -> Result<BettiTable> {
    if d < 1 {
        return Err(Error::InvalidInput("K_{1,d} needs d ≥ 1".into()));
    }
    let d = d as i64;
    Ok(BettiTable::from_entries(
        (0..d).map(|i| (i as i32, i as i32 + 2, binomial(d, i + 1))),
    ))
}

fn convolve(a: &BTreeMap<(i32, i32), u64>, b: &BTreeMap<(i32, i32), u64>) -> BTreeMap<(i32, i32), u64> {
    let mut out = BTreeMap::new();
    for (&(i1, j1), &x) in a {
        for (&(i2, j2), &y) in b {
            *out.entry((i1 + i2, j1 + j2)).or_insert(0) += x * y;
        }
    }
    out
}

/// Betti table of `I + J` for ideals in disjoint sets of variables, via the
/// convolution of the quotient-level tables.
pub fn tensor_combine(a: &BettiTable, b: &BettiTable) -> BettiTable {
    BettiTable::from_quotient(&convolve(&a.quotient(), &b.quotient()))
}

/// Edge recursion: `β_{i,j}(G) = β_{i,j}(G\e) + Σ_l C(n,l) β_{i-l-1,j-2-l}(H)`
/// for `i ≥ 1`, with row `0` from the generator count.
pub fn edge_split_combine(n: usize, minus_e: &BettiTable, h: &BettiTable) -> BettiTable {
    let mut out = minus_e.nonnegative_part();
    out.add(0, 2, 1);
    let n = n as i64;
    // β_{-1,0}(H) = 1 for every ideal
    let q = h.quotient();
    for (&(a, b), &x) in &q {
        let (hi, hj) = (a - 1, b);
        for l in 0..=n {
            let i = hi + l as i32 + 1;
            if i >= 1 {
                out.add(i, hj + 2 + l as i32, binomial(n, l) * x);
            }
        }
    }
    out
}

/// Facet recursion: `β_{i,j}(Δ) = β_{i,j}(Δ') + Σ β_{l1-1,l2}(conn̄) β_{i-l1-1,j-|F|-l2}(Ω)`
/// for `i ≥ 1`, with row `0` from the generator count.
pub fn facet_split_combine(
    facet_size: usize,
    minus_f: &BettiTable,
    conn_bar: &BettiTable,
    omega: &BettiTable,
) -> BettiTable {
    let mut out = minus_f.nonnegative_part();
    out.add(0, facet_size as i32, 1);
    for (&(i, j), &x) in &convolve(&conn_bar.quotient(), &omega.quotient()) {
        if i >= 1 {
            out.add(i, j + facet_size as i32, x);
        }
    }
    out
}

/// Vertex recursion: `β_{i,j}(G) = β_{i,j}(K_{1,d}) + β_{i,j}(G\v) + β_{i-1,j}(L)`.
pub fn vertex_split_combine(d: usize, minus_v: &BettiTable, l: &BettiTable) -> Result<BettiTable> {
    Ok(betti_k1d(d)?
        .plus(&minus_v.nonnegative_part())
        .plus(&l.shifted(1, 0)))
}

pub fn edge_split_betti(
    split: &EdgeSplit,
    mut betti_of: impl FnMut(&Graph) -> Result<BettiTable>,
) -> Result<BettiTable> {
    let minus_e = betti_of(&split.g_minus_e)?;
    let h = betti_of(&split.h)?;
    Ok(edge_split_combine(split.n, &minus_e, &h))
}

/// `l_betti` is the Betti table of `split.l`, which is not an edge ideal.
pub fn vertex_split_betti(
    split: &VertexSplit,
    l_betti: &BettiTable,
    mut betti_of: impl FnMut(&Graph) -> Result<BettiTable>,
) -> Result<BettiTable> {
    let minus_v = betti_of(&split.g_minus_v)?;
    vertex_split_combine(split.neighbors.len(), &minus_v, l_betti)
}

pub fn facet_split_betti(
    split: &FacetSplit,
    mut betti_of: impl FnMut(&SimplicialComplex) -> Result<BettiTable>,
) -> Result<BettiTable> {
    let minus_f = betti_of(&split.delta_minus_f)?;
    let conn_bar = betti_of(&split.conn_bar)?;
    let omega = betti_of(&split.omega)?;
    Ok(facet_split_combine(split.facet.len(), &minus_f, &conn_bar, &omega))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn table(e: &[(i32, i32, u64)]) -> BettiTable {
        BettiTable::from_entries(e.iter().copied())
    }

    #[test]
    fn binomial_conventions() {
        assert_eq!(binomial(0, 0), 1);
        assert_eq!(binomial(5, 3), 10);
        assert_eq!(binomial(3, -1), 0);
        assert_eq!(binomial(3, 4), 0);
    }

    #[test]
    fn k1d_examples() {
        assert_eq!(betti_k1d(1).unwrap(), table(&[(0, 2, 1)]));
        assert_eq!(betti_k1d(3).unwrap(), table(&[(0, 2, 3), (1, 3, 3), (2, 4, 1)]));
        assert_eq!(betti_k1d(5).unwrap().get(2, 4), 10);
        assert!(matches!(betti_k1d(0), Err(Error::InvalidInput(_))));
    }

    #[test]
    fn tensor_examples() {
        let p3 = table(&[(0, 2, 2), (1, 3, 1)]);
        assert_eq!(tensor_combine(&BettiTable::zero_ideal(), &p3), p3);
        assert_eq!(
            tensor_combine(&p3, &p3),
            table(&[(0, 2, 4), (1, 3, 2), (1, 4, 4), (2, 5, 4), (3, 6, 1)])
        );
        let e = table(&[(0, 2, 1)]);
        assert_eq!(tensor_combine(&e, &e), table(&[(0, 2, 2), (1, 4, 1)]));
        let z = BettiTable::zero_ideal();
        assert_eq!(tensor_combine(&z, &z), z);
    }

    #[test]
    fn combine_examples() {
        // P4 at leaf ab: G\e has I(P3), H is the zero ideal
        let p3 = table(&[(0, 2, 2), (1, 3, 1)]);
        let z = BettiTable::zero_ideal();
        assert_eq!(edge_split_combine(1, &p3, &z), table(&[(0, 2, 3), (1, 3, 2)]));
        assert_eq!(edge_split_combine(0, &z, &z), table(&[(0, 2, 1)]));
        // two triangles sharing a vertex
        let single = table(&[(0, 3, 1)]);
        let conn_bar = table(&[(0, 2, 1)]);
        assert_eq!(facet_split_combine(3, &single, &conn_bar, &z), table(&[(0, 3, 2), (1, 5, 1)]));
        assert_eq!(facet_split_combine(3, &z, &z, &z), table(&[(0, 3, 1)]));
        // P3 at vertex a: K_{1,1} + (bc) + shift (abc)
        let v = vertex_split_combine(1, &table(&[(0, 2, 1)]), &table(&[(0, 3, 1)])).unwrap();
        assert_eq!(v, betti_k1d(2).unwrap());
    }

    #[test]
    fn edge_formula_is_facet_formula_in_dimension_one() {
        // conn̄ of a leaf edge is generated by n variables (Koszul complex)
        let samples = [
            table(&[(0, 2, 2), (1, 3, 1)]),
            table(&[(0, 2, 4), (1, 3, 2), (1, 4, 4), (2, 5, 4), (3, 6, 1)]),
            BettiTable::zero_ideal(),
        ];
        for minus in &samples {
            for h in &samples {
                for n in 0..4usize {
                    let koszul = if n == 0 {
                        BettiTable::zero_ideal()
                    } else {
                        BettiTable::from_entries((0..n as i64).map(|a| (a as i32, a as i32 + 1, binomial(n as i64, a + 1))))
                    };
                    assert_eq!(
                        edge_split_combine(n, minus, h),
                        facet_split_combine(2, minus, &koszul, h)
                    );
                }
            }
        }
    }
}
