//! Prime fields `F_q` for small `q` and the dense linear algebra the oracle
//! needs: products, determinants, and affine solution spaces of linear
//! systems.

use crate::error::OracleError;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PrimeField {
    q: u8,
}

impl PrimeField {
    pub const MAX_ORDER: u8 = 7;

    pub fn new(q: u8) -> Result<Self, OracleError> {
        match q {
            2 | 3 | 5 | 7 => Ok(PrimeField { q }),
            _ => Err(OracleError::UnsupportedField(q)),
        }
    }

    pub fn order(self) -> u8 {
        self.q
    }

    #[inline]
    pub fn add(self, a: u8, b: u8) -> u8 {
        ((a as u16 + b as u16) % self.q as u16) as u8
    }

    #[inline]
    pub fn sub(self, a: u8, b: u8) -> u8 {
        ((a as u16 + self.q as u16 - b as u16) % self.q as u16) as u8
    }

    #[inline]
    pub fn mul(self, a: u8, b: u8) -> u8 {
        ((a as u16 * b as u16) % self.q as u16) as u8
    }

    pub fn neg(self, a: u8) -> u8 {
        self.sub(0, a)
    }

    /// Multiplicative inverse by exhaustive search; `q` is tiny.
    pub fn inv(self, a: u8) -> Option<u8> {
        (1..self.q)
            .find(|&b| self.mul(a, b) == 1)
            .filter(|_| !a.is_multiple_of(self.q))
    }

    /// Row-major `n × n` product.
    pub fn mat_mul(self, n: usize, a: &[u8], b: &[u8]) -> Vec<u8> {
        let q = self.q as u32;
        let mut out = vec![0u8; n * n];
        for i in 0..n {
            for j in 0..n {
                let mut acc = 0u32;
                for k in 0..n {
                    acc += a[i * n + k] as u32 * b[k * n + j] as u32;
                }
                out[i * n + j] = (acc % q) as u8;
            }
        }
        out
    }

    pub fn identity(n: usize) -> Vec<u8> {
        let mut id = vec![0u8; n * n];
        for i in 0..n {
            id[i * n + i] = 1;
        }
        id
    }

    pub fn det(self, n: usize, m: &[u8]) -> u8 {
        let mut a = m.to_vec();
        let mut det = 1u8;
        for col in 0..n {
            let Some(p) = (col..n).find(|&r| a[r * n + col] != 0) else {
                return 0;
            };
            if p != col {
                for k in 0..n {
                    a.swap(p * n + k, col * n + k);
                }
                det = self.neg(det);
            }
            let pivot = a[col * n + col];
            det = self.mul(det, pivot);
            let pinv = self.inv(pivot).expect("pivot is nonzero");
            for r in col + 1..n {
                let f = self.mul(a[r * n + col], pinv);
                if f == 0 {
                    continue;
                }
                for k in col..n {
                    a[r * n + k] = self.sub(a[r * n + k], self.mul(f, a[col * n + k]));
                }
            }
        }
        det
    }

    /// Solves `A z = b` for `A` with `rows × cols` entries (row-major).
    pub fn solve(self, rows: usize, cols: usize, a: &[u8], b: &[u8]) -> Option<AffineSpace> {
        let width = cols + 1;
        let mut m = vec![0u8; rows * width];
        for r in 0..rows {
            m[r * width..r * width + cols].copy_from_slice(&a[r * cols..(r + 1) * cols]);
            m[r * width + cols] = b[r];
        }
        let mut pivots = Vec::new();
        let mut row = 0;
        for col in 0..cols {
            let Some(p) = (row..rows).find(|&r| m[r * width + col] != 0) else {
                continue;
            };
            for k in 0..width {
                m.swap(p * width + k, row * width + k);
            }
            let pinv = self.inv(m[row * width + col]).expect("pivot is nonzero");
            for k in 0..width {
                m[row * width + k] = self.mul(m[row * width + k], pinv);
            }
            for r in 0..rows {
                if r == row {
                    continue;
                }
                let f = m[r * width + col];
                if f == 0 {
                    continue;
                }
                for k in 0..width {
                    m[r * width + k] = self.sub(m[r * width + k], self.mul(f, m[row * width + k]));
                }
            }
            pivots.push(col);
            row += 1;
            if row == rows {
                break;
            }
        }
        if (row..rows).any(|r| m[r * width + cols] != 0) {
            return None;
        }
        let mut particular = vec![0u8; cols];
        for (r, &pc) in pivots.iter().enumerate() {
            particular[pc] = m[r * width + cols];
        }
        let free: Vec<usize> = (0..cols).filter(|c| !pivots.contains(c)).collect();
        let basis = free
            .iter()
            .map(|&fc| {
                let mut v = vec![0u8; cols];
                v[fc] = 1;
                for (r, &pc) in pivots.iter().enumerate() {
                    v[pc] = self.neg(m[r * width + fc]);
                }
                v
            })
            .collect();
        Some(AffineSpace {
            field: self,
            particular,
            basis,
        })
    }
}

/// `particular + span(basis)` over a prime field.
#[derive(Debug, Clone)]
pub struct AffineSpace {
    field: PrimeField,
    pub particular: Vec<u8>,
    pub basis: Vec<Vec<u8>>,
}

impl AffineSpace {
    pub fn dimension(&self) -> usize {
        self.basis.len()
    }

    /// Every point, ordered by the free-variable coordinates read as a
    /// base-`q` counter (first free variable most significant).
    pub fn points(&self) -> impl Iterator<Item = Vec<u8>> + '_ {
        let q = self.field.order() as u64;
        let total = q.pow(self.basis.len() as u32);
        (0..total).map(move |mut k| {
            let mut v = self.particular.clone();
            for b in self.basis.iter().rev() {
                let c = (k % q) as u8;
                k /= q;
                if c != 0 {
                    for (vi, bi) in v.iter_mut().zip(b) {
                        *vi = self.field.add(*vi, self.field.mul(c, *bi));
                    }
                }
            }
            v
        })
    }
}
