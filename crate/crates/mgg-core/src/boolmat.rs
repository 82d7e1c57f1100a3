//! Bit-packed Boolean matrices and vectors.
//!
//! These carry every piece of graph data in the engine: adjacency matrices,
//! node-presence vectors, deletion/addition matrices and nihilation matrices.
//! All operations are pure; values are immutable once built (mutators are
//! crate-internal and used only during construction).

use crate::error::{MggError, Result};
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

const WORD: usize = 64;

fn words_for(bits: usize) -> usize {
    bits.div_ceil(WORD)
}

/// Row-major bit matrix. Square in every adjacency use, but the kernel itself
/// supports any shape so completed e/r matrices can be built incrementally.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct BoolMatrix {
    rows: usize,
    cols: usize,
    words_per_row: usize,
    bits: Vec<u64>,
}

impl BoolMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        let words_per_row = words_for(cols);
        BoolMatrix { rows, cols, words_per_row, bits: vec![0; rows * words_per_row] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.set(i, i, true);
        }
        m
    }

    /// Builds from row slices of 0/1 values; rows must have equal length.
    pub fn from_rows(rows: &[&[u8]]) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, |x| x.len());
        let mut m = Self::zeros(r, c);
        for (i, row) in rows.iter().enumerate() {
            assert_eq!(row.len(), c, "ragged rows");
            for (j, &b) in row.iter().enumerate() {
                m.set(i, j, b != 0);
            }
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> bool {
        debug_assert!(i < self.rows && j < self.cols);
        let w = self.bits[i * self.words_per_row + j / WORD];
        w >> (j % WORD) & 1 == 1
    }

    #[inline]
    pub(crate) fn set(&mut self, i: usize, j: usize, v: bool) {
        debug_assert!(i < self.rows && j < self.cols);
        let idx = i * self.words_per_row + j / WORD;
        let mask = 1u64 << (j % WORD);
        if v {
            self.bits[idx] |= mask;
        } else {
            self.bits[idx] &= !mask;
        }
    }

    fn check_shape(&self, other: &Self, context: &'static str) -> Result<()> {
        if self.rows != other.rows || self.cols != other.cols {
            return Err(MggError::Dimension {
                expected: (self.rows, self.cols),
                got: (other.rows, other.cols),
                context,
            });
        }
        Ok(())
    }

    fn zip(&self, other: &Self, context: &'static str, f: impl Fn(u64, u64) -> u64) -> Result<Self> {
        self.check_shape(other, context)?;
        let mut out = self.clone();
        for (a, &b) in out.bits.iter_mut().zip(other.bits.iter()) {
            *a = f(*a, b);
        }
        out.mask_tail();
        Ok(out)
    }

    pub fn and(&self, other: &Self) -> Result<Self> {
        self.zip(other, "and", |a, b| a & b)
    }

    pub fn or(&self, other: &Self) -> Result<Self> {
        self.zip(other, "or", |a, b| a | b)
    }

    pub fn xor(&self, other: &Self) -> Result<Self> {
        self.zip(other, "xor", |a, b| a ^ b)
    }

    pub fn not(&self) -> Self {
        let mut out = self.clone();
        for w in out.bits.iter_mut() {
            *w = !*w;
        }
        out.mask_tail();
        out
    }

    /// Clears the padding bits beyond `cols` in each row word.
    fn mask_tail(&mut self) {
        let rem = self.cols % WORD;
        if rem == 0 || self.cols == 0 {
            return;
        }
        let mask = (1u64 << rem) - 1;
        for r in 0..self.rows {
            self.bits[r * self.words_per_row + self.words_per_row - 1] &= mask;
        }
    }

    pub fn transpose(&self) -> Self {
        let mut out = Self::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                if self.get(i, j) {
                    out.set(j, i, true);
                }
            }
        }
        out
    }

    /// Boolean matrix product: out[i][j] = OR_k (self[i][k] AND other[k][j]).
    pub fn bool_product(&self, other: &Self) -> Result<Self> {
        if self.cols != other.rows {
            return Err(MggError::Dimension {
                expected: (self.cols, self.cols),
                got: (other.rows, other.cols),
                context: "bool_product",
            });
        }
        let mut out = Self::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            let base = i * out.words_per_row;
            for k in 0..self.cols {
                if self.get(i, k) {
                    let obase = k * other.words_per_row;
                    for w in 0..other.words_per_row {
                        out.bits[base + w] |= other.bits[obase + w];
                    }
                }
            }
        }
        out
    }

    /// Boolean matrix-vector product.
    pub fn bool_product_vec(&self, v: &BoolVector) -> Result<BoolVector> {
        if self.cols != v.len() {
            return Err(MggError::Dimension {
                expected: (self.cols, 1),
                got: (v.len(), 1),
                context: "bool_product_vec",
            });
        }
        let mut out = BoolVector::zeros(self.rows);
        for i in 0..self.rows {
            let base = i * self.words_per_row;
            let mut acc = 0u64;
            for w in 0..self.words_per_row {
                acc |= self.bits[base + w] & v.bits[w];
            }
            if acc != 0 {
                out.set(i, true);
            }
        }
        Ok(out)
    }

    pub fn is_zero(&self) -> bool {
        self.bits.iter().all(|&w| w == 0)
    }

    pub fn count_ones(&self) -> usize {
        self.bits.iter().map(|w| w.count_ones() as usize).sum()
    }

    /// Iterator over set positions in row-major order.
    pub fn iter_ones(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.rows).flat_map(move |i| (0..self.cols).filter_map(move |j| self.get(i, j).then_some((i, j))))
    }

    /// Copies into a larger zero matrix (used by completion; never shrinks).
    pub(crate) fn embed(&self, rows: usize, cols: usize, row_map: &[usize], col_map: &[usize]) -> Self {
        let mut out = Self::zeros(rows, cols);
        for (i, j) in self.iter_ones() {
            out.set(row_map[i], col_map[j], true);
        }
        out
    }
}

impl fmt::Debug for BoolMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "BoolMatrix {}x{}", self.rows, self.cols)?;
        for i in 0..self.rows {
            for j in 0..self.cols {
                write!(f, "{}", if self.get(i, j) { '1' } else { '0' })?;
            }
            writeln!(f)?;
        }
        Ok(())
    }
}

/// Bit vector marking node presence (and deletion/addition vectors).
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct BoolVector {
    len: usize,
    bits: Vec<u64>,
}

impl BoolVector {
    pub fn zeros(len: usize) -> Self {
        BoolVector { len, bits: vec![0; words_for(len)] }
    }

    pub fn ones(len: usize) -> Self {
        let mut v = Self::zeros(len);
        for i in 0..len {
            v.set(i, true);
        }
        v
    }

    pub fn from_bits(bits: &[u8]) -> Self {
        let mut v = Self::zeros(bits.len());
        for (i, &b) in bits.iter().enumerate() {
            v.set(i, b != 0);
        }
        v
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    #[inline]
    pub fn get(&self, i: usize) -> bool {
        debug_assert!(i < self.len);
        self.bits[i / WORD] >> (i % WORD) & 1 == 1
    }

    #[inline]
    pub(crate) fn set(&mut self, i: usize, v: bool) {
        debug_assert!(i < self.len);
        let mask = 1u64 << (i % WORD);
        if v {
            self.bits[i / WORD] |= mask;
        } else {
            self.bits[i / WORD] &= !mask;
        }
    }

    fn check_len(&self, other: &Self, context: &'static str) -> Result<()> {
        if self.len != other.len {
            return Err(MggError::Dimension {
                expected: (self.len, 1),
                got: (other.len, 1),
                context,
            });
        }
        Ok(())
    }

    pub fn and(&self, other: &Self) -> Result<Self> {
        self.check_len(other, "and")?;
        let mut out = self.clone();
        for (a, &b) in out.bits.iter_mut().zip(&other.bits) {
            *a &= b;
        }
        Ok(out)
    }

    pub fn or(&self, other: &Self) -> Result<Self> {
        self.check_len(other, "or")?;
        let mut out = self.clone();
        for (a, &b) in out.bits.iter_mut().zip(&other.bits) {
            *a |= b;
        }
        Ok(out)
    }

    pub fn xor(&self, other: &Self) -> Result<Self> {
        self.check_len(other, "xor")?;
        let mut out = self.clone();
        for (a, &b) in out.bits.iter_mut().zip(&other.bits) {
            *a ^= b;
        }
        Ok(out)
    }

    pub fn not(&self) -> Self {
        let mut out = self.clone();
        for w in out.bits.iter_mut() {
            *w = !*w;
        }
        let rem = out.len % WORD;
        if rem != 0 {
            let last = out.bits.len() - 1;
            out.bits[last] &= (1u64 << rem) - 1;
        }
        out
    }

    /// The or of all components.
    pub fn norm1(&self) -> bool {
        self.bits.iter().any(|&w| w != 0)
    }

    pub fn count_ones(&self) -> usize {
        self.bits.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn iter_ones(&self) -> impl Iterator<Item = usize> + '_ {
        (0..self.len).filter(move |&i| self.get(i))
    }

    /// Outer product: out[i][j] = self[i] AND vt[j].
    pub fn tensor(&self, vt: &BoolVector) -> BoolMatrix {
        let mut out = BoolMatrix::zeros(self.len, vt.len);
        for i in 0..self.len {
            if self.get(i) {
                for j in 0..vt.len {
                    if vt.get(j) {
                        out.set(i, j, true);
                    }
                }
            }
        }
        out
    }

    pub(crate) fn embed(&self, len: usize, map: &[usize]) -> Self {
        let mut out = Self::zeros(len);
        for i in self.iter_ones() {
            out.set(map[i], true);
        }
        out
    }
}

impl fmt::Debug for BoolVector {
    fmt_bool_vec!();
}

macro_rules! fmt_bool_vec {
    () => {
        fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
            write!(f, "(")?;
            for i in 0..self.len {
                write!(f, "{}", if self.get(i) { '1' } else { '0' })?;
            }
            write!(f, ")")
        }
    };
}
use fmt_bool_vec;

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn mat(rows: &[&[u8]]) -> BoolMatrix {
        BoolMatrix::from_rows(rows)
    }

    #[test]
    fn not_involution_base() {
        let m = mat(&[&[0, 1], &[1, 0]]);
        assert_eq!(m.not(), mat(&[&[1, 0], &[0, 1]]));
        assert_eq!(m.not().not(), m);
    }

    #[test]
    fn or_identity_element() {
        let m = mat(&[&[1, 0, 1], &[0, 0, 1], &[1, 1, 0]]);
        let z = BoolMatrix::zeros(3, 3);
        assert_eq!(m.or(&z).unwrap(), m);
    }

    #[test]
    fn shape_mismatch_is_error() {
        let a = BoolMatrix::zeros(2, 2);
        let b = BoolMatrix::zeros(2, 3);
        assert!(matches!(a.and(&b), Err(MggError::Dimension { .. })));
        let u = BoolVector::zeros(2);
        let w = BoolVector::zeros(3);
        assert!(matches!(u.or(&w), Err(MggError::Dimension { .. })));
    }

    #[test]
    fn identity_product() {
        let m = mat(&[&[1, 0, 1], &[0, 1, 1], &[0, 0, 0]]);
        let i = BoolMatrix::identity(3);
        assert_eq!(i.bool_product(&m).unwrap(), m);
        assert_eq!(m.bool_product(&i).unwrap(), m);
    }

    #[test]
    fn single_edge_reachability() {
        // [[0,1],[0,0]] ⊙ (0,1)^t = (1,0)^t
        let m = mat(&[&[0, 1], &[0, 0]]);
        let v = BoolVector::from_bits(&[0, 1]);
        let r = m.bool_product_vec(&v).unwrap();
        assert_eq!(r, BoolVector::from_bits(&[1, 0]));
    }

    #[test]
    fn norm1_cases() {
        assert!(!BoolVector::from_bits(&[0, 0, 0]).norm1());
        assert!(BoolVector::from_bits(&[0, 1, 0]).norm1());
    }

    #[test]
    fn tensor_paper_dbar() {
        // ē^V = (1,1,1,0); D = ē ⊗ ē^t; D̄ as displayed for startProcess.
        let ev = BoolVector::from_bits(&[1, 1, 1, 0]);
        let dbar = ev.tensor(&ev).not();
        let expected = mat(&[&[0, 0, 0, 1], &[0, 0, 0, 1], &[0, 0, 0, 1], &[1, 1, 1, 1]]);
        assert_eq!(dbar, expected);
    }

    #[test]
    fn tensor_trivial() {
        let z = BoolVector::zeros(3);
        let v = BoolVector::from_bits(&[1, 1, 1]);
        assert!(z.tensor(&v).is_zero());
        let a = BoolVector::from_bits(&[1, 0]);
        let b = BoolVector::from_bits(&[0, 1]);
        assert_eq!(a.tensor(&b), mat(&[&[0, 1], &[0, 0]]));
    }

    /// Reference per-entry product used as the oracle for the property tests.
    fn naive_product(a: &BoolMatrix, b: &BoolMatrix) -> BoolMatrix {
        let mut out = BoolMatrix::zeros(a.rows(), b.cols());
        for i in 0..a.rows() {
            for j in 0..b.cols() {
                let mut v = false;
                for k in 0..a.cols() {
                    v |= a.get(i, k) && b.get(k, j);
                }
                out.set(i, j, v);
            }
        }
        out
    }

    fn arb_matrix(n: usize) -> impl Strategy<Value = BoolMatrix> {
        proptest::collection::vec(proptest::bool::ANY, n * n).prop_map(move |bits| {
            let mut m = BoolMatrix::zeros(n, n);
            for (idx, b) in bits.into_iter().enumerate() {
                m.set(idx / n, idx % n, b);
            }
            m
        })
    }

    proptest! {
        #[test]
        fn prop_not_involution(m in (1usize..8).prop_flat_map(arb_matrix)) {
            prop_assert_eq!(m.not().not(), m);
        }

        #[test]
        fn prop_product_matches_enumeration_and_assoc(
            (a, b, c) in (1usize..8).prop_flat_map(|n| (arb_matrix(n), arb_matrix(n), arb_matrix(n)))
        ) {
            let ab = a.bool_product(&b).unwrap();
            prop_assert_eq!(&ab, &naive_product(&a, &b));
            let abc1 = ab.bool_product(&c).unwrap();
            let abc2 = a.bool_product(&b.bool_product(&c).unwrap()).unwrap();
            prop_assert_eq!(abc1, abc2);
        }

        #[test]
        fn prop_product_distributes_over_or(
            (a, b, c) in (1usize..8).prop_flat_map(|n| (arb_matrix(n), arb_matrix(n), arb_matrix(n)))
        ) {
            let left = a.bool_product(&b.or(&c).unwrap()).unwrap();
            let right = a.bool_product(&b).unwrap().or(&a.bool_product(&c).unwrap()).unwrap();
            prop_assert_eq!(left, right);
        }

        #[test]
        fn prop_tensor_pointwise(
            (u, v) in (1usize..9, 1usize..9).prop_flat_map(|(n, m)| (
                proptest::collection::vec(proptest::bool::ANY, n),
                proptest::collection::vec(proptest::bool::ANY, m),
            ))
        ) {
            let ub = BoolVector::from_bits(&u.iter().map(|&b| b as u8).collect::<Vec<_>>());
            let vb = BoolVector::from_bits(&v.iter().map(|&b| b as u8).collect::<Vec<_>>());
            let t = ub.tensor(&vb);
            for i in 0..u.len() {
                for j in 0..v.len() {
                    prop_assert_eq!(t.get(i, j), u[i] && v[j]);
                }
            }
        }
    }
}
