use std::fmt;

use qalgebra::LaurentPoly;

/// Dense matrix over `Z[q, q^-1]`, row-major.
#[derive(Clone, PartialEq, Eq)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    data: Vec<LaurentPoly>,
}

/// Inverse of `±q^e`.
pub(crate) fn inv_unit(p: &LaurentPoly) -> Option<LaurentPoly> {
    let (c, e) = p.as_monomial()?;
    if *c == 1.into() {
        Some(LaurentPoly::q_pow(-e))
    } else if *c == (-1).into() {
        Some(LaurentPoly::signed_q_pow(1, -e))
    } else {
        None
    }
}

impl Matrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self {
            rows,
            cols,
            data: vec![LaurentPoly::zero(); rows * cols],
        }
    }

    pub fn identity(d: usize) -> Self {
        Self::diagonal(vec![LaurentPoly::one(); d])
    }

    pub fn diagonal(entries: Vec<LaurentPoly>) -> Self {
        let d = entries.len();
        let mut m = Self::zeros(d, d);
        for (i, x) in entries.into_iter().enumerate() {
            m.data[i * d + i] = x;
        }
        m
    }

    pub(crate) fn from_data(rows: usize, cols: usize, data: Vec<LaurentPoly>) -> Self {
        assert_eq!(data.len(), rows * cols);
        Self { rows, cols, data }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &LaurentPoly {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, x: LaurentPoly) {
        self.data[i * self.cols + j] = x;
    }

    pub fn add_at(&mut self, i: usize, j: usize, x: &LaurentPoly) {
        self.data[i * self.cols + j] += x;
    }

    pub fn data(&self) -> &[LaurentPoly] {
        &self.data
    }

    /// Nonzero entries as `(row, col, value)`.
    pub fn nonzeros(&self) -> impl Iterator<Item = (usize, usize, &LaurentPoly)> {
        let c = self.cols;
        self.data
            .iter()
            .enumerate()
            .filter(|(_, x)| !x.is_zero())
            .map(move |(i, x)| (i / c, i % c, x))
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(LaurentPoly::is_zero)
    }

    pub fn is_diagonal(&self) -> bool {
        self.nonzeros().all(|(i, j, _)| i == j)
    }

    pub fn diagonal_entries(&self) -> Vec<LaurentPoly> {
        (0..self.rows.min(self.cols)).map(|i| self.get(i, i).clone()).collect()
    }

    pub fn mul(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.cols, other.rows, "matrix product shape mismatch");
        let mut out = Matrix::zeros(self.rows, other.cols);
        for (i, k, x) in self.nonzeros() {
            for j in 0..other.cols {
                let y = other.get(k, j);
                if !y.is_zero() {
                    out.data[i * other.cols + j] += &(x * y);
                }
            }
        }
        out
    }

    pub fn transpose(&self) -> Matrix {
        let mut out = Matrix::zeros(self.cols, self.rows);
        for (i, j, x) in self.nonzeros() {
            out.data[j * self.rows + i] = x.clone();
        }
        out
    }

    pub fn scale(&self, c: &LaurentPoly) -> Matrix {
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|x| x * c).collect(),
        }
    }

    pub fn neg(&self) -> Matrix {
        self.scale(&-LaurentPoly::one())
    }

    pub fn add(&self, other: &Matrix) -> Matrix {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&other.data).map(|(x, y)| x + y).collect(),
        }
    }

    pub fn sub(&self, other: &Matrix) -> Matrix {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&other.data).map(|(x, y)| x - y).collect(),
        }
    }

    pub fn kron(&self, other: &Matrix) -> Matrix {
        let (r, c) = (self.rows * other.rows, self.cols * other.cols);
        let mut out = Matrix::zeros(r, c);
        for (i, j, x) in self.nonzeros() {
            for (k, l, y) in other.nonzeros() {
                out.data[(i * other.rows + k) * c + j * other.cols + l] = x * y;
            }
        }
        out
    }

    /// Inverse of a matrix with exactly one `±q^e` in each row and column.
    pub fn unit_inverse(&self) -> Option<Matrix> {
        if self.rows != self.cols {
            return None;
        }
        let mut out = Matrix::zeros(self.rows, self.cols);
        let mut seen_r = vec![false; self.rows];
        let mut seen_c = vec![false; self.cols];
        for (i, j, x) in self.nonzeros() {
            if seen_r[i] || seen_c[j] {
                return None;
            }
            seen_r[i] = true;
            seen_c[j] = true;
            out.set(j, i, inv_unit(x)?);
        }
        seen_r.iter().all(|&b| b).then_some(out)
    }

    /// `c` with `self == c * other`, if any.
    pub fn ratio(&self, other: &Matrix) -> Option<qalgebra::RatFunc> {
        use qalgebra::RatFunc;
        if (self.rows, self.cols) != (other.rows, other.cols) {
            return None;
        }
        let mut c: Option<RatFunc> = None;
        for (x, y) in self.data.iter().zip(&other.data) {
            match (x.is_zero(), y.is_zero()) {
                (true, true) => {}
                (false, true) | (true, false) => return None,
                (false, false) => {
                    let r = RatFunc::new(x.clone(), y.clone()).ok()?;
                    match &c {
                        None => c = Some(r),
                        Some(c0) if *c0 == r => {}
                        Some(_) => return None,
                    }
                }
            }
        }
        c
    }
}

impl fmt::Debug for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "Matrix {}x{} [", self.rows, self.cols)?;
        for i in 0..self.rows {
            let row: Vec<String> = (0..self.cols).map(|j| self.get(i, j).to_string()).collect();
            writeln!(f, "  [{}]", row.join(", "))?;
        }
        write!(f, "]")
    }
}
