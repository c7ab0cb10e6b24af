//! Dense linear algebra over `F₂` with bit-packed rows.

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct BitRow {
    len: usize,
    words: Vec<u64>,
}

impl BitRow {
    pub fn zeros(len: usize) -> BitRow {
        BitRow { len, words: vec![0; len.div_ceil(64)] }
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    #[inline]
    pub fn get(&self, i: usize) -> bool {
        self.words[i / 64] >> (i % 64) & 1 == 1
    }

    #[inline]
    pub fn set(&mut self, i: usize, v: bool) {
        if v {
            self.words[i / 64] |= 1 << (i % 64);
        } else {
            self.words[i / 64] &= !(1 << (i % 64));
        }
    }

    #[inline]
    pub fn toggle(&mut self, i: usize) {
        self.words[i / 64] ^= 1 << (i % 64);
    }

    pub fn xor_assign(&mut self, other: &BitRow) {
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a ^= b;
        }
    }

    pub fn is_zero(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    pub fn ones(&self) -> impl Iterator<Item = usize> + '_ {
        (0..self.len).filter(|&i| self.get(i))
    }
}

/// A matrix over `F₂`, one bit-packed row per equation.
#[derive(Clone, Debug, Default)]
pub struct F2Matrix {
    ncols: usize,
    rows: Vec<BitRow>,
}

/// Outcome of solving `A x = b`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Solution {
    /// A solution, with free variables set to zero.
    Solved(Vec<bool>),
    /// Indices of original rows whose sum has zero coefficients and
    /// right-hand side 1.
    Inconsistent(Vec<usize>),
}

impl F2Matrix {
    pub fn new(ncols: usize) -> F2Matrix {
        F2Matrix { ncols, rows: Vec::new() }
    }

    pub fn ncols(&self) -> usize {
        self.ncols
    }

    pub fn nrows(&self) -> usize {
        self.rows.len()
    }

    pub fn push_row(&mut self, row: BitRow) {
        assert_eq!(row.len(), self.ncols, "row width");
        self.rows.push(row);
    }

    pub fn row(&self, i: usize) -> &BitRow {
        &self.rows[i]
    }

    /// Appends a column whose entries are `col[i]` in row `i`.
    pub fn with_extra_columns(&self, cols: &[Vec<bool>]) -> F2Matrix {
        let ncols = self.ncols + cols.len();
        let rows = self
            .rows
            .iter()
            .enumerate()
            .map(|(i, r)| {
                let mut out = BitRow::zeros(ncols);
                for j in r.ones() {
                    out.set(j, true);
                }
                for (k, c) in cols.iter().enumerate() {
                    out.set(self.ncols + k, c[i]);
                }
                out
            })
            .collect();
        F2Matrix { ncols, rows }
    }

    pub fn rank(&self) -> usize {
        let mut rows = self.rows.clone();
        let mut r = 0;
        for col in 0..self.ncols {
            let Some(p) = (r..rows.len()).find(|&i| rows[i].get(col)) else {
                continue;
            };
            rows.swap(r, p);
            let pivot = rows[r].clone();
            for row in rows.iter_mut().skip(r + 1) {
                if row.get(col) {
                    row.xor_assign(&pivot);
                }
            }
            r += 1;
        }
        r
    }

    /// Gauss–Jordan elimination on `[A | b]`, tracking which original rows
    /// were combined so that an inconsistency can be certified.
    pub fn solve(&self, rhs: &[bool]) -> Solution {
        assert_eq!(rhs.len(), self.rows.len(), "rhs length");
        let n = self.ncols;
        let m = self.rows.len();
        let mut rows: Vec<BitRow> = self
            .rows
            .iter()
            .zip(rhs)
            .map(|(r, &b)| {
                let mut a = BitRow::zeros(n + 1);
                for j in r.ones() {
                    a.set(j, true);
                }
                a.set(n, b);
                a
            })
            .collect();
        let mut combo: Vec<BitRow> = (0..m)
            .map(|i| {
                let mut c = BitRow::zeros(m);
                c.set(i, true);
                c
            })
            .collect();
        let mut pivots = Vec::new();
        let mut r = 0;
        for col in 0..n {
            let Some(p) = (r..m).find(|&i| rows[i].get(col)) else {
                continue;
            };
            rows.swap(r, p);
            combo.swap(r, p);
            let (pr, pc) = (rows[r].clone(), combo[r].clone());
            for i in 0..m {
                if i != r && rows[i].get(col) {
                    rows[i].xor_assign(&pr);
                    combo[i].xor_assign(&pc);
                }
            }
            pivots.push(col);
            r += 1;
        }
        if let Some(i) = (r..m).find(|&i| rows[i].get(n)) {
            return Solution::Inconsistent(combo[i].ones().collect());
        }
        let mut x = vec![false; n];
        for (i, &col) in pivots.iter().enumerate() {
            x[col] = rows[i].get(n);
        }
        Solution::Solved(x)
    }
}
