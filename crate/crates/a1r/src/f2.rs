//! Dense bit-packed linear algebra over F2.
//!
//! Rows are packed into `u64` words; Gaussian elimination is the only
//! rank/kernel/solve routine in the crate. Vectors act on the left
//! (`v * M`), matching the row-major convention of `GradedMatrix`.

/// A dense F2 matrix with bit-packed rows.
#[derive(Clone, PartialEq, Eq)]
pub struct BitMatrix {
    rows: usize,
    cols: usize,
    words: usize,
    data: Vec<u64>,
}

/// A bit-packed F2 row vector.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct BitVec {
    len: usize,
    data: Vec<u64>,
}

fn words_for(bits: usize) -> usize {
    bits.div_ceil(64)
}

impl BitVec {
    pub fn zeros(len: usize) -> Self {
        BitVec {
            len,
            data: vec![0; words_for(len)],
        }
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    pub fn get(&self, i: usize) -> bool {
        debug_assert!(i < self.len);
        (self.data[i / 64] >> (i % 64)) & 1 == 1
    }

    pub fn set(&mut self, i: usize, v: bool) {
        debug_assert!(i < self.len);
        if v {
            self.data[i / 64] |= 1 << (i % 64);
        } else {
            self.data[i / 64] &= !(1 << (i % 64));
        }
    }

    pub fn xor_assign(&mut self, other: &BitVec) {
        debug_assert_eq!(self.len, other.len);
        for (a, b) in self.data.iter_mut().zip(&other.data) {
            *a ^= b;
        }
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|&w| w == 0)
    }

    /// Index of the first set bit, if any.
    pub fn first_one(&self) -> Option<usize> {
        for (w, &word) in self.data.iter().enumerate() {
            if word != 0 {
                return Some(w * 64 + word.trailing_zeros() as usize);
            }
        }
        None
    }

    pub fn ones(&self) -> impl Iterator<Item = usize> + '_ {
        (0..self.len).filter(|&i| self.get(i))
    }

    /// v * M for a row vector v of length `m.rows()`.
    pub fn apply(&self, m: &BitMatrix) -> BitVec {
        debug_assert_eq!(self.len, m.rows);
        let mut out = BitVec::zeros(m.cols);
        for i in self.ones() {
            out.xor_assign(&m.row(i));
        }
        out
    }
}

impl std::fmt::Debug for BitMatrix {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        writeln!(f, "BitMatrix {}x{}", self.rows, self.cols)?;
        for i in 0..self.rows {
            for j in 0..self.cols {
                write!(f, "{}", u8::from(self.get(i, j)))?;
            }
            writeln!(f)?;
        }
        Ok(())
    }
}

impl BitMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        let words = words_for(cols);
        BitMatrix {
            rows,
            cols,
            words,
            data: vec![0; rows * words],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = BitMatrix::zeros(n, n);
        for i in 0..n {
            m.set(i, i, true);
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> bool {
        debug_assert!(i < self.rows && j < self.cols);
        (self.data[i * self.words + j / 64] >> (j % 64)) & 1 == 1
    }

    pub fn set(&mut self, i: usize, j: usize, v: bool) {
        debug_assert!(i < self.rows && j < self.cols);
        let w = i * self.words + j / 64;
        if v {
            self.data[w] |= 1 << (j % 64);
        } else {
            self.data[w] &= !(1 << (j % 64));
        }
    }

    pub fn row(&self, i: usize) -> BitVec {
        BitVec {
            len: self.cols,
            data: self.data[i * self.words..(i + 1) * self.words].to_vec(),
        }
    }

    pub fn set_row(&mut self, i: usize, v: &BitVec) {
        debug_assert_eq!(v.len, self.cols);
        self.data[i * self.words..(i + 1) * self.words].copy_from_slice(&v.data);
    }

    fn xor_row_into(&mut self, src: usize, dst: usize) {
        let (a, b) = (src * self.words, dst * self.words);
        for k in 0..self.words {
            let v = self.data[a + k];
            self.data[b + k] ^= v;
        }
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|&w| w == 0)
    }

    /// self * other (composition of row-vector maps: v ↦ (v·self)·other).
    pub fn mul(&self, other: &BitMatrix) -> BitMatrix {
        assert_eq!(self.cols, other.rows);
        let mut out = BitMatrix::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            let mut acc = BitVec::zeros(other.cols);
            for j in 0..self.cols {
                if self.get(i, j) {
                    acc.xor_assign(&other.row(j));
                }
            }
            out.set_row(i, &acc);
        }
        out
    }

    pub fn add(&self, other: &BitMatrix) -> BitMatrix {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        let mut out = self.clone();
        for (a, b) in out.data.iter_mut().zip(&other.data) {
            *a ^= b;
        }
        out
    }

    pub fn transpose(&self) -> BitMatrix {
        let mut out = BitMatrix::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                if self.get(i, j) {
                    out.set(j, i, true);
                }
            }
        }
        out
    }

    /// Row echelon form; returns (echelon matrix, pivot column per surviving row).
    ///
    /// Pivot columns come out in increasing order, so the choice of
    /// representatives downstream is deterministic.
    pub fn echelon(&self) -> (BitMatrix, Vec<usize>) {
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..m.cols {
            if r == m.rows {
                break;
            }
            let mut pivot = None;
            for i in r..m.rows {
                if m.get(i, c) {
                    pivot = Some(i);
                    break;
                }
            }
            let Some(p) = pivot else { continue };
            if p != r {
                for k in 0..m.words {
                    m.data.swap(p * m.words + k, r * m.words + k);
                }
            }
            for i in 0..m.rows {
                if i != r && m.get(i, c) {
                    m.xor_row_into(r, i);
                }
            }
            pivots.push(c);
            r += 1;
        }
        (m, pivots)
    }

    pub fn rank(&self) -> usize {
        self.echelon().1.len()
    }

    /// Basis of the left kernel: rows v with v * self = 0.
    pub fn kernel(&self) -> Vec<BitVec> {
        // Eliminate on [self | I] and read off the rows whose self-part vanished.
        let n = self.rows;
        let mut aug = BitMatrix::zeros(n, self.cols + n);
        for i in 0..n {
            for j in 0..self.cols {
                if self.get(i, j) {
                    aug.set(i, j, true);
                }
            }
            aug.set(i, self.cols + i, true);
        }
        let mut r = 0;
        for c in 0..self.cols {
            if r == n {
                break;
            }
            let mut pivot = None;
            for i in r..n {
                if aug.get(i, c) {
                    pivot = Some(i);
                    break;
                }
            }
            let Some(p) = pivot else { continue };
            if p != r {
                for k in 0..aug.words {
                    aug.data.swap(p * aug.words + k, r * aug.words + k);
                }
            }
            for i in 0..n {
                if i != r && aug.get(i, c) {
                    aug.xor_row_into(r, i);
                }
            }
            r += 1;
        }
        let mut basis = Vec::new();
        for i in r..n {
            let mut v = BitVec::zeros(n);
            for j in 0..n {
                if aug.get(i, self.cols + j) {
                    v.set(j, true);
                }
            }
            basis.push(v);
        }
        basis
    }

    /// One solution x of x * self = target, if any.
    pub fn solve(&self, target: &BitVec) -> Option<BitVec> {
        assert_eq!(target.len, self.cols);
        let n = self.rows;
        let mut aug = BitMatrix::zeros(n + 1, self.cols + n + 1);
        for i in 0..n {
            for j in 0..self.cols {
                if self.get(i, j) {
                    aug.set(i, j, true);
                }
            }
            aug.set(i, self.cols + i, true);
        }
        for j in target.ones() {
            aug.set(n, j, true);
        }
        aug.set(n, self.cols + n, true);
        // Eliminate the self-columns; the target row participates last so it
        // gets expressed in terms of the generator rows.
        let mut r = 0;
        for c in 0..self.cols {
            if r == n {
                break;
            }
            let mut pivot = None;
            for i in r..n {
                if aug.get(i, c) {
                    pivot = Some(i);
                    break;
                }
            }
            let Some(p) = pivot else { continue };
            if p != r {
                for k in 0..aug.words {
                    aug.data.swap(p * aug.words + k, r * aug.words + k);
                }
            }
            for i in 0..=n {
                if i != r && aug.get(i, c) {
                    aug.xor_row_into(r, i);
                }
            }
            r += 1;
        }
        // Leftover self-part on the target row means inconsistency.
        for j in 0..self.cols {
            if aug.get(n, j) {
                return None;
            }
        }
        let mut x = BitVec::zeros(n);
        for j in 0..n {
            if aug.get(n, self.cols + j) {
                x.set(j, true);
            }
        }
        Some(x)
    }

    /// Row-space membership test.
    pub fn contains_in_row_space(&self, v: &BitVec) -> bool {
        self.solve(v).is_some()
    }
}

/// Stack row vectors into a matrix.
pub fn from_rows(rows: &[BitVec], cols: usize) -> BitMatrix {
    let mut m = BitMatrix::zeros(rows.len(), cols);
    for (i, r) in rows.iter().enumerate() {
        m.set_row(i, r);
    }
    m
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn echelon_and_rank() {
        let mut m = BitMatrix::zeros(3, 3);
        m.set(0, 0, true);
        m.set(0, 1, true);
        m.set(1, 1, true);
        m.set(2, 0, true); // row2 = row0 + row1
        m.set(2, 0, false);
        m.set(2, 0, true);
        m.set(2, 1, false);
        assert_eq!(m.rank(), 2);
    }

    #[test]
    fn kernel_left() {
        // rows r0 = (1,0), r1 = (0,1), r2 = r0+r1 → kernel spanned by (1,1,1)
        let mut m = BitMatrix::zeros(3, 2);
        m.set(0, 0, true);
        m.set(1, 1, true);
        m.set(2, 0, true);
        m.set(2, 1, true);
        let k = m.kernel();
        assert_eq!(k.len(), 1);
        assert!(k[0].get(0) && k[0].get(1) && k[0].get(2));
        assert!(k[0].apply(&m).is_zero());
    }

    #[test]
    fn solve_consistent_and_not() {
        let mut m = BitMatrix::zeros(2, 3);
        m.set(0, 0, true);
        m.set(0, 2, true);
        m.set(1, 1, true);
        let mut t = BitVec::zeros(3);
        t.set(0, true);
        t.set(1, true);
        t.set(2, true);
        let x = m.solve(&t).unwrap();
        assert_eq!(x.apply(&m), t);
        let mut bad = BitVec::zeros(3);
        bad.set(2, true);
        assert!(m.solve(&bad).is_none());
    }

    #[test]
    fn mul_identity() {
        let mut m = BitMatrix::zeros(2, 3);
        m.set(0, 1, true);
        m.set(1, 2, true);
        assert_eq!(BitMatrix::identity(2).mul(&m), m);
        assert_eq!(m.mul(&BitMatrix::identity(3)), m);
    }
}
