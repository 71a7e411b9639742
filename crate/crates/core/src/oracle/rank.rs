//! Exact rank of sparse integer matrices over ℚ or GF(p).
//!
//! Columns are sparse vectors of `(row, coefficient)` sorted by row. Both
//! eliminations keep an echelon basis keyed by each vector's largest row
//! index and reduce incoming columns against it.

use std::collections::HashMap;

use num_bigint::BigInt;
use num_traits::{Signed, Zero};

use super::FieldSpec;

pub type SparseCol = Vec<(u32, i64)>;

pub fn rank(cols: &[SparseCol], field: FieldSpec) -> usize {
    match field {
        FieldSpec::Prime(p) => rank_mod_p(cols, p),
        FieldSpec::Rational => rank_integer::<i128>(cols).unwrap_or_else(|| {
            log::debug!("i128 elimination overflowed, retrying with big integers");
            rank_integer::<BigInt>(cols).expect("big integer elimination cannot overflow")
        }),
    }
}

/// Rank of a dense matrix given as rows.
pub fn exact_rank(matrix: &[Vec<i64>], field: FieldSpec) -> usize {
    let ncols = matrix.iter().map(|r| r.len()).max().unwrap_or(0);
    let cols: Vec<SparseCol> = (0..ncols)
        .map(|c| {
            matrix
                .iter()
                .enumerate()
                .filter_map(|(r, row)| row.get(c).filter(|&&x| x != 0).map(|&x| (r as u32, x)))
                .collect()
        })
        .collect();
    rank(&cols, field)
}

fn mod_pow(mut b: u64, mut e: u64, p: u64) -> u64 {
    let mut acc = 1u64;
    b %= p;
    while e > 0 {
        if e & 1 == 1 {
            acc = acc * b % p;
        }
        b = b * b % p;
        e >>= 1;
    }
    acc
}

/// `v + k * b` mod `p` over sorted sparse vectors.
fn axpy_mod(v: &[(u32, u64)], k: u64, b: &[(u32, u64)], p: u64) -> Vec<(u32, u64)> {
    let mut out = Vec::with_capacity(v.len() + b.len());
    let (mut x, mut y) = (0, 0);
    while x < v.len() || y < b.len() {
        let rv = v.get(x).map_or(u32::MAX, |e| e.0);
        let rb = b.get(y).map_or(u32::MAX, |e| e.0);
        let (row, val) = if rv < rb {
            x += 1;
            (rv, v[x - 1].1)
        } else if rb < rv {
            y += 1;
            (rb, k * b[y - 1].1 % p)
        } else {
            x += 1;
            y += 1;
            (rv, (v[x - 1].1 + k * b[y - 1].1) % p)
        };
        if val != 0 {
            out.push((row, val));
        }
    }
    out
}

fn rank_mod_p(cols: &[SparseCol], p: u64) -> usize {
    let mut basis: HashMap<u32, Vec<(u32, u64)>> = HashMap::new();
    for col in cols {
        let mut v: Vec<(u32, u64)> = col
            .iter()
            .map(|&(r, c)| (r, c.rem_euclid(p as i64) as u64))
            .filter(|e| e.1 != 0)
            .collect();
        while let Some(&(lead, c)) = v.last() {
            match basis.get(&lead) {
                Some(b) => v = axpy_mod(&v, p - c, b, p),
                None => {
                    let inv = mod_pow(c, p - 2, p);
                    for e in v.iter_mut() {
                        e.1 = e.1 * inv % p;
                    }
                    basis.insert(lead, v);
                    break;
                }
            }
        }
    }
    basis.len()
}

/// Integer arithmetic used by the fraction-free elimination; `None` signals
/// overflow.
trait Int: Clone + PartialEq + Sized {
    fn from_i64(x: i64) -> Self;
    fn is_zero(&self) -> bool;
    fn mul(&self, o: &Self) -> Option<Self>;
    fn sub(&self, o: &Self) -> Option<Self>;
    fn gcd(&self, o: &Self) -> Self;
    fn div(&self, o: &Self) -> Self;
    fn is_one_abs(&self) -> bool;
}

impl Int for i128 {
    fn from_i64(x: i64) -> Self {
        x as i128
    }
    fn is_zero(&self) -> bool {
        *self == 0
    }
    fn mul(&self, o: &Self) -> Option<Self> {
        self.checked_mul(*o)
    }
    fn sub(&self, o: &Self) -> Option<Self> {
        self.checked_sub(*o)
    }
    fn gcd(&self, o: &Self) -> Self {
        let (mut a, mut b) = (self.unsigned_abs(), o.unsigned_abs());
        while b != 0 {
            (a, b) = (b, a % b);
        }
        a as i128
    }
    fn div(&self, o: &Self) -> Self {
        self / o
    }
    fn is_one_abs(&self) -> bool {
        *self == 1 || *self == -1
    }
}

impl Int for BigInt {
    fn from_i64(x: i64) -> Self {
        BigInt::from(x)
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn mul(&self, o: &Self) -> Option<Self> {
        Some(self * o)
    }
    fn sub(&self, o: &Self) -> Option<Self> {
        Some(self - o)
    }
    fn gcd(&self, o: &Self) -> Self {
        num_integer::Integer::gcd(self, o)
    }
    fn div(&self, o: &Self) -> Self {
        self / o
    }
    fn is_one_abs(&self) -> bool {
        self.abs() == BigInt::from(1)
    }
}

/// `a * v - c * b` over sorted sparse vectors, dropping zeros.
fn combine<T: Int>(a: &T, v: &[(u32, T)], c: &T, b: &[(u32, T)]) -> Option<Vec<(u32, T)>> {
    let mut out = Vec::with_capacity(v.len() + b.len());
    let (mut x, mut y) = (0, 0);
    let zero = T::from_i64(0);
    while x < v.len() || y < b.len() {
        let rv = v.get(x).map_or(u32::MAX, |e| e.0);
        let rb = b.get(y).map_or(u32::MAX, |e| e.0);
        let (row, left, right) = if rv < rb {
            x += 1;
            (rv, &v[x - 1].1, &zero)
        } else if rb < rv {
            y += 1;
            (rb, &zero, &b[y - 1].1)
        } else {
            x += 1;
            y += 1;
            (rv, &v[x - 1].1, &b[y - 1].1)
        };
        let val = a.mul(left)?.sub(&c.mul(right)?)?;
        if !val.is_zero() {
            out.push((row, val));
        }
    }
    Some(out)
}

fn remove_content<T: Int>(v: &mut [(u32, T)]) {
    let mut g = match v.first() {
        Some(e) => e.1.clone(),
        None => return,
    };
    for e in v.iter().skip(1) {
        if g.is_one_abs() {
            return;
        }
        g = g.gcd(&e.1);
    }
    if !g.is_one_abs() {
        for e in v.iter_mut() {
            e.1 = e.1.div(&g);
        }
    }
}

fn rank_integer<T: Int>(cols: &[SparseCol]) -> Option<usize> {
    let mut basis: HashMap<u32, Vec<(u32, T)>> = HashMap::new();
    for col in cols {
        let mut v: Vec<(u32, T)> = col
            .iter()
            .filter(|e| e.1 != 0)
            .map(|&(r, c)| (r, T::from_i64(c)))
            .collect();
        while let Some((lead, c)) = v.last().cloned() {
            match basis.get(&lead) {
                Some(b) => {
                    let a = b.last().unwrap().1.clone();
                    v = combine(&a, &v, &c, b)?;
                    remove_content(&mut v);
                }
                None => {
                    basis.insert(lead, v);
                    break;
                }
            }
        }
    }
    Some(basis.len())
}
