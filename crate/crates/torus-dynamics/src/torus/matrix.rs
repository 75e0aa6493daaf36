//! Square matrices over the quadratic rings and over the integers, with the
//! exact operations the degree pipeline needs: realification, exterior
//! powers, characteristic polynomials, determinants, inverses and
//! finite-order detection.

use crate::error::{Error, Result};
use crate::num::poly::IntPolynomial;
use crate::torus::ring::{RingElement, RingTag};
use itertools::Itertools;
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};
use std::fmt;

/// A square matrix over Z, Z[i] or Z[w], acting as an automorphism candidate
/// of the torus `E^n`.
#[derive(Clone, PartialEq, Eq)]
pub struct TorusMatrix {
    n: usize,
    tag: RingTag,
    entries: Vec<RingElement>,
}

impl fmt::Debug for TorusMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "TorusMatrix({})", self.to_text())
    }
}

impl TorusMatrix {
    pub fn new(rows: Vec<Vec<RingElement>>) -> Result<Self> {
        let n = rows.len();
        if n == 0 {
            return Err(Error::invalid("matrix must be nonempty"));
        }
        let tag = rows[0]
            .first()
            .ok_or_else(|| Error::invalid("matrix rows must be nonempty"))?
            .tag();
        let mut entries = Vec::with_capacity(n * n);
        for row in &rows {
            if row.len() != n {
                return Err(Error::invalid("matrix must be square"));
            }
            for e in row {
                if e.tag() != tag {
                    return Err(Error::invalid("mixed ring tags in matrix"));
                }
                entries.push(e.clone());
            }
        }
        Ok(TorusMatrix { n, tag, entries })
    }

    pub fn identity(n: usize, tag: RingTag) -> Self {
        let mut entries = vec![RingElement::zero(tag); n * n];
        for i in 0..n {
            entries[i * n + i] = RingElement::one(tag);
        }
        TorusMatrix { n, tag, entries }
    }

    pub fn diagonal(diag: &[RingElement]) -> Result<Self> {
        let n = diag.len();
        if n == 0 {
            return Err(Error::invalid("matrix must be nonempty"));
        }
        let tag = diag[0].tag();
        let mut m = Self::identity(n, tag);
        for (i, d) in diag.iter().enumerate() {
            if d.tag() != tag {
                return Err(Error::invalid("mixed ring tags in matrix"));
            }
            m.entries[i * n + i] = d.clone();
        }
        Ok(m)
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    pub fn tag(&self) -> RingTag {
        self.tag
    }

    pub fn get(&self, i: usize, j: usize) -> &RingElement {
        &self.entries[i * self.n + j]
    }

    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.n, other.n);
        assert_eq!(self.tag, other.tag);
        let n = self.n;
        let mut entries = Vec::with_capacity(n * n);
        for i in 0..n {
            for j in 0..n {
                let mut acc = RingElement::zero(self.tag);
                for k in 0..n {
                    acc = acc.add(&self.get(i, k).mul(other.get(k, j)));
                }
                entries.push(acc);
            }
        }
        TorusMatrix {
            n,
            tag: self.tag,
            entries,
        }
    }

    pub fn is_identity(&self) -> bool {
        *self == Self::identity(self.n, self.tag)
    }

    /// Exact determinant by cofactor expansion (desk-scale dimensions).
    pub fn det(&self) -> RingElement {
        det_cofactor(&self.entries, self.n, self.tag)
    }

    pub fn is_automorphism(&self) -> bool {
        self.det().is_unit()
    }

    /// Exact inverse; defined exactly when the determinant is a unit.
    pub fn inverse(&self) -> Result<Self> {
        let det = self.det();
        let det_inv = det.unit_inverse().map_err(|_| {
            Error::invalid("matrix is not an automorphism (determinant is not a unit)")
        })?;
        let n = self.n;
        let mut entries = vec![RingElement::zero(self.tag); n * n];
        for i in 0..n {
            for j in 0..n {
                // adjugate: (-1)^(i+j) * minor(j, i)
                let minor = self.minor(j, i);
                let c = if (i + j) % 2 == 0 { minor } else { minor.neg() };
                entries[i * n + j] = c.mul(&det_inv);
            }
        }
        Ok(TorusMatrix {
            n,
            tag: self.tag,
            entries,
        })
    }

    fn minor(&self, drop_row: usize, drop_col: usize) -> RingElement {
        let n = self.n;
        let sub: Vec<RingElement> = (0..n)
            .filter(|&i| i != drop_row)
            .flat_map(|i| {
                (0..n)
                    .filter(|&j| j != drop_col)
                    .map(move |j| self.get(i, j).clone())
            })
            .collect();
        det_cofactor(&sub, n - 1, self.tag)
    }

    /// The action on the rank-`2n` lattice: each entry `a + b*mu` becomes its
    /// 2x2 regular-representation block in the per-factor basis `(1, mu)`.
    pub fn realify(&self) -> IntegerMatrix {
        let n = self.n;
        let m = 2 * n;
        let mut entries = vec![BigInt::zero(); m * m];
        for r in 0..n {
            for c in 0..n {
                let e = self.get(r, c);
                let (a, b) = (e.re().clone(), e.im().clone());
                let (tl, tr, bl, br) = match self.tag {
                    RingTag::Integer => (a.clone(), BigInt::zero(), BigInt::zero(), a),
                    // i: 1 -> (a, b), i -> (-b, a)
                    RingTag::Gaussian => (a.clone(), -&b, b, a),
                    // w: 1 -> (a, b), w -> (-b, a - b)
                    RingTag::Eisenstein => (a.clone(), -&b, b.clone(), a - b),
                };
                entries[(2 * r) * m + 2 * c] = tl;
                entries[(2 * r) * m + 2 * c + 1] = tr;
                entries[(2 * r + 1) * m + 2 * c] = bl;
                entries[(2 * r + 1) * m + 2 * c + 1] = br;
            }
        }
        IntegerMatrix { m, entries }
    }

    /// Smallest `m <= bound` with `M^m = I`, or `None` if no such power
    /// exists within the bound. Requires an automorphism.
    pub fn finite_order(&self, bound: usize) -> Result<Option<usize>> {
        if !self.is_automorphism() {
            return Err(Error::invalid(
                "finite order is defined for automorphisms (unit determinant)",
            ));
        }
        let mut acc = self.clone();
        for m in 1..=bound {
            if acc.is_identity() {
                return Ok(Some(m));
            }
            acc = acc.mul(self);
        }
        Ok(None)
    }

    /// Row-major text form matching the CLI matrix grammar.
    pub fn to_text(&self) -> String {
        let rows: Vec<String> = (0..self.n)
            .map(|i| {
                let cells: Vec<String> =
                    (0..self.n).map(|j| self.get(i, j).to_string()).collect();
                format!("[{}]", cells.join(","))
            })
            .collect();
        format!("[{}]", rows.join(","))
    }
}

fn det_cofactor(entries: &[RingElement], n: usize, tag: RingTag) -> RingElement {
    if n == 0 {
        return RingElement::one(tag);
    }
    if n == 1 {
        return entries[0].clone();
    }
    if n == 2 {
        return entries[0]
            .mul(&entries[3])
            .sub(&entries[1].mul(&entries[2]));
    }
    let mut acc = RingElement::zero(tag);
    for j in 0..n {
        if entries[j].is_zero() {
            continue;
        }
        let sub: Vec<RingElement> = (1..n)
            .flat_map(|i| {
                (0..n)
                    .filter(|&c| c != j)
                    .map(move |c| entries[i * n + c].clone())
            })
            .collect();
        let term = entries[j].mul(&det_cofactor(&sub, n - 1, tag));
        acc = if j % 2 == 0 { acc.add(&term) } else { acc.sub(&term) };
    }
    acc
}

/// An exact integer matrix (the realified lattice action and its exterior
/// powers).
#[derive(Clone, PartialEq, Eq)]
pub struct IntegerMatrix {
    m: usize,
    entries: Vec<BigInt>,
}

impl fmt::Debug for IntegerMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "IntegerMatrix {}x{} [", self.m, self.m)?;
        for i in 0..self.m {
            let row: Vec<String> = (0..self.m).map(|j| self.get(i, j).to_string()).collect();
            writeln!(f, "  [{}]", row.join(", "))?;
        }
        write!(f, "]")
    }
}

impl IntegerMatrix {
    pub fn new(rows: Vec<Vec<BigInt>>) -> Result<Self> {
        let m = rows.len();
        if m == 0 {
            return Err(Error::invalid("matrix must be nonempty"));
        }
        let mut entries = Vec::with_capacity(m * m);
        for row in &rows {
            if row.len() != m {
                return Err(Error::invalid("matrix must be square"));
            }
            entries.extend(row.iter().cloned());
        }
        Ok(IntegerMatrix { m, entries })
    }

    pub fn from_i64(rows: &[&[i64]]) -> Self {
        Self::new(
            rows.iter()
                .map(|r| r.iter().map(|&x| BigInt::from(x)).collect())
                .collect(),
        )
        .unwrap()
    }

    pub fn identity(m: usize) -> Self {
        let mut entries = vec![BigInt::zero(); m * m];
        for i in 0..m {
            entries[i * m + i] = BigInt::one();
        }
        IntegerMatrix { m, entries }
    }

    pub fn dim(&self) -> usize {
        self.m
    }

    pub fn get(&self, i: usize, j: usize) -> &BigInt {
        &self.entries[i * self.m + j]
    }

    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.m, other.m);
        let m = self.m;
        let mut entries = vec![BigInt::zero(); m * m];
        for i in 0..m {
            for k in 0..m {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..m {
                    let t = a * other.get(k, j);
                    entries[i * m + j] += t;
                }
            }
        }
        IntegerMatrix { m, entries }
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!(self.m, other.m);
        IntegerMatrix {
            m: self.m,
            entries: self
                .entries
                .iter()
                .zip(other.entries.iter())
                .map(|(a, b)| a + b)
                .collect(),
        }
    }

    pub fn trace(&self) -> BigInt {
        (0..self.m).map(|i| self.get(i, i).clone()).sum()
    }

    /// Fraction-free determinant (Bareiss).
    pub fn det(&self) -> BigInt {
        let m = self.m;
        let mut a: Vec<Vec<BigInt>> = (0..m)
            .map(|i| (0..m).map(|j| self.get(i, j).clone()).collect())
            .collect();
        let mut sign = 1i32;
        let mut prev = BigInt::one();
        for k in 0..m.saturating_sub(1) {
            if a[k][k].is_zero() {
                match (k + 1..m).find(|&r| !a[r][k].is_zero()) {
                    Some(r) => {
                        a.swap(k, r);
                        sign = -sign;
                    }
                    None => return BigInt::zero(),
                }
            }
            for i in k + 1..m {
                for j in k + 1..m {
                    let t = &a[k][k] * &a[i][j] - &a[i][k] * &a[k][j];
                    let (q, r) = t.div_rem(&prev);
                    debug_assert!(r.is_zero());
                    a[i][j] = q;
                }
                a[i][k] = BigInt::zero();
            }
            prev = a[k][k].clone();
        }
        let det = a[m - 1][m - 1].clone();
        if sign < 0 {
            -det
        } else {
            det
        }
    }

    /// The `k`-th exterior power: the `C(m,k) x C(m,k)` matrix of `k x k`
    /// minors, rows and columns indexed by sorted `k`-subsets in
    /// lexicographic order.
    pub fn exterior_power(&self, k: usize) -> Result<IntegerMatrix> {
        if k > self.m {
            return Err(Error::invalid(format!(
                "exterior power {k} out of range for dimension {}",
                self.m
            )));
        }
        let subsets: Vec<Vec<usize>> = (0..self.m).combinations(k).collect();
        let dim = subsets.len();
        let mut entries = Vec::with_capacity(dim * dim);
        for rows in &subsets {
            for cols in &subsets {
                entries.push(self.minor_det(rows, cols));
            }
        }
        Ok(IntegerMatrix { m: dim, entries })
    }

    fn minor_det(&self, rows: &[usize], cols: &[usize]) -> BigInt {
        let k = rows.len();
        if k == 0 {
            return BigInt::one();
        }
        let sub = IntegerMatrix {
            m: k,
            entries: rows
                .iter()
                .flat_map(|&i| cols.iter().map(move |&j| self.get(i, j).clone()))
                .collect(),
        };
        sub.det()
    }

    /// Exact monic characteristic polynomial `det(x*I - A)` by the
    /// Faddeev-LeVerrier recurrence (the interior divisions are exact).
    pub fn char_poly(&self) -> IntPolynomial {
        let m = self.m;
        // c[m] = 1, N = A, c[m-k] = -tr(A*N)/k, N = A*(N + c*I)
        let mut coeffs = vec![BigInt::zero(); m + 1];
        coeffs[m] = BigInt::one();
        let mut n_mat = Self::identity(m);
        for k in 1..=m {
            n_mat = self.mul(&n_mat);
            let (c, r) = (-n_mat.trace()).div_rem(&BigInt::from(k));
            debug_assert!(r.is_zero(), "Faddeev-LeVerrier division must be exact");
            coeffs[m - k] = c.clone();
            for i in 0..m {
                let idx = i * m + i;
                n_mat.entries[idx] += &c;
            }
        }
        IntPolynomial::new(coeffs)
    }
}
