//! Seifert matrices, their Alexander polynomials and symplectic basis changes.
//!
//! Bases are ordered `x1, y1, x2, y2, ...`, so the standard intersection form
//! `J` is block diagonal with 2x2 blocks `[[0, 1], [-1, 0]]`.

use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::laurent::LaurentPoly;

/// Square integer matrix, row-major. Serializes as an array of arrays.
#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "Vec<Vec<i64>>", into = "Vec<Vec<i64>>")]
pub struct IntMatrix {
    rows: Vec<Vec<i64>>,
}

impl IntMatrix {
    pub fn new(rows: Vec<Vec<i64>>) -> Result<Self> {
        let n = rows.len();
        if let Some((row, r)) = rows.iter().enumerate().find(|(_, r)| r.len() != n) {
            return Err(Error::NotSquare { rows: n, row, cols: r.len() });
        }
        Ok(IntMatrix { rows })
    }

    pub fn zeros(n: usize) -> Self {
        IntMatrix { rows: vec![vec![0; n]; n] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n);
        for i in 0..n {
            m.rows[i][i] = 1;
        }
        m
    }

    /// Standard symplectic form of size `2g`.
    pub fn standard_form(g: usize) -> Self {
        let mut m = Self::zeros(2 * g);
        for i in 0..g {
            m.rows[2 * i][2 * i + 1] = 1;
            m.rows[2 * i + 1][2 * i] = -1;
        }
        m
    }

    pub fn size(&self) -> usize {
        self.rows.len()
    }

    pub fn get(&self, i: usize, j: usize) -> i64 {
        self.rows[i][j]
    }

    pub fn rows(&self) -> &[Vec<i64>] {
        &self.rows
    }

    pub fn transpose(&self) -> Self {
        let n = self.size();
        let mut t = Self::zeros(n);
        for i in 0..n {
            for j in 0..n {
                t.rows[j][i] = self.rows[i][j];
            }
        }
        t
    }

    pub fn checked_sub(&self, other: &Self) -> Result<Self> {
        self.same_size(other)?;
        let mut out = self.clone();
        for (orow, brow) in out.rows.iter_mut().zip(&other.rows) {
            for (a, b) in orow.iter_mut().zip(brow) {
                *a = a.checked_sub(*b).ok_or(Error::Overflow("matrix subtraction"))?;
            }
        }
        Ok(out)
    }

    pub fn checked_mul(&self, other: &Self) -> Result<Self> {
        self.same_size(other)?;
        let n = self.size();
        let mut out = Self::zeros(n);
        for i in 0..n {
            for j in 0..n {
                let mut acc: i128 = 0;
                for k in 0..n {
                    acc += self.rows[i][k] as i128 * other.rows[k][j] as i128;
                }
                out.rows[i][j] =
                    i64::try_from(acc).map_err(|_| Error::Overflow("matrix product"))?;
            }
        }
        Ok(out)
    }

    /// Exact determinant (fraction-free elimination over the integers).
    pub fn det(&self) -> BigInt {
        let m: Vec<Vec<BigInt>> = self
            .rows
            .iter()
            .map(|r| r.iter().map(|&x| BigInt::from(x)).collect())
            .collect();
        bareiss(m, |a, b| a / b)
    }

    fn same_size(&self, other: &Self) -> Result<()> {
        if self.size() != other.size() {
            return Err(Error::SizeMismatch(self.size(), other.size()));
        }
        Ok(())
    }
}

impl TryFrom<Vec<Vec<i64>>> for IntMatrix {
    type Error = Error;
    fn try_from(rows: Vec<Vec<i64>>) -> Result<Self> {
        IntMatrix::new(rows)
    }
}

impl From<IntMatrix> for Vec<Vec<i64>> {
    fn from(m: IntMatrix) -> Self {
        m.rows
    }
}

impl fmt::Debug for IntMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.rows)
    }
}

trait RingElem: Clone {
    fn is_zero(&self) -> bool;
    fn zero() -> Self;
    fn one() -> Self;
    fn mul(&self, other: &Self) -> Self;
    fn sub(&self, other: &Self) -> Self;
    fn neg(&self) -> Self;
}

impl RingElem for BigInt {
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn zero() -> Self {
        Zero::zero()
    }
    fn one() -> Self {
        One::one()
    }
    fn mul(&self, other: &Self) -> Self {
        self * other
    }
    fn sub(&self, other: &Self) -> Self {
        self - other
    }
    fn neg(&self) -> Self {
        -self
    }
}

impl RingElem for LaurentPoly {
    fn is_zero(&self) -> bool {
        LaurentPoly::is_zero(self)
    }
    fn zero() -> Self {
        LaurentPoly::zero()
    }
    fn one() -> Self {
        LaurentPoly::one()
    }
    fn mul(&self, other: &Self) -> Self {
        self * other
    }
    fn sub(&self, other: &Self) -> Self {
        self - other
    }
    fn neg(&self) -> Self {
        -self
    }
}

/// Bareiss elimination. Every intermediate pivot division is exact in an
/// integral domain, so `div` only ever sees exact quotients.
fn bareiss<T: RingElem>(mut m: Vec<Vec<T>>, div: impl Fn(&T, &T) -> T) -> T {
    let n = m.len();
    if n == 0 {
        return T::one();
    }
    let mut negate = false;
    let mut prev = T::one();
    for k in 0..n - 1 {
        if m[k][k].is_zero() {
            match (k + 1..n).find(|&i| !m[i][k].is_zero()) {
                Some(i) => {
                    m.swap(i, k);
                    negate = !negate;
                }
                None => return T::zero(),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let num = m[k][k].mul(&m[i][j]).sub(&m[i][k].mul(&m[k][j]));
                m[i][j] = div(&num, &prev);
            }
        }
        prev = m[k][k].clone();
    }
    let d = m[n - 1][n - 1].clone();
    if negate {
        d.neg()
    } else {
        d
    }
}

/// Integer Seifert matrix of even size `2g` (size 0 is the disc).
#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "IntMatrix", into = "IntMatrix")]
pub struct SeifertMatrix(IntMatrix);

impl SeifertMatrix {
    pub fn new(m: IntMatrix) -> Result<Self> {
        if m.size() % 2 != 0 {
            return Err(Error::OddSize(m.size()));
        }
        Ok(SeifertMatrix(m))
    }

    pub fn from_rows(rows: Vec<Vec<i64>>) -> Result<Self> {
        Self::new(IntMatrix::new(rows)?)
    }

    pub fn empty() -> Self {
        SeifertMatrix(IntMatrix::zeros(0))
    }

    pub fn matrix(&self) -> &IntMatrix {
        &self.0
    }

    pub fn size(&self) -> usize {
        self.0.size()
    }

    /// Genus of the surface the matrix came from: `size / 2`.
    pub fn genus(&self) -> usize {
        self.size() / 2
    }

    /// The pretzel-family matrix `theta_n` of size `2n`.
    ///
    /// Odd rows (1-based `2k-1`) carry `-2` left of the diagonal (except the
    /// first) and `2` right of it; even rows carry `1` left and `-1` right
    /// (except the last).
    pub fn theta(n: i64) -> Result<Self> {
        if n < 1 {
            return Err(Error::ThetaIndex(n));
        }
        let size = 2 * n as usize;
        let mut m = IntMatrix::zeros(size);
        for i in 0..size {
            if i % 2 == 0 {
                if i > 0 {
                    m.rows[i][i - 1] = -2;
                }
                m.rows[i][i + 1] = 2;
            } else {
                m.rows[i][i - 1] = 1;
                if i + 1 < size {
                    m.rows[i][i + 1] = -1;
                }
            }
        }
        Ok(SeifertMatrix(m))
    }

    /// `det(V - t V^T)`, exact. The empty matrix gives 1.
    pub fn alexander(&self) -> LaurentPoly {
        let n = self.size();
        let t = LaurentPoly::t();
        let m: Vec<Vec<LaurentPoly>> = (0..n)
            .map(|i| {
                (0..n)
                    .map(|j| {
                        LaurentPoly::from(self.0.rows[i][j]) - &t * &LaurentPoly::from(self.0.rows[j][i])
                    })
                    .collect()
            })
            .collect();
        bareiss(m, |a, b| {
            a.div_exact(b).expect("Bareiss pivot division is exact over Z[t]")
        })
    }

    /// `P V P^T`.
    pub fn change_basis(&self, p: &BasisChange) -> Result<Self> {
        let pv = p.0.checked_mul(&self.0)?;
        Ok(SeifertMatrix(pv.checked_mul(&p.0.transpose())?))
    }

    /// `V - V^T` and whether it equals the standard form.
    pub fn intersection(&self) -> Result<(IntMatrix, bool)> {
        let form = self.0.checked_sub(&self.0.transpose())?;
        let standard = form == IntMatrix::standard_form(self.genus());
        Ok((form, standard))
    }
}

impl TryFrom<IntMatrix> for SeifertMatrix {
    type Error = Error;
    fn try_from(m: IntMatrix) -> Result<Self> {
        SeifertMatrix::new(m)
    }
}

impl From<SeifertMatrix> for IntMatrix {
    fn from(m: SeifertMatrix) -> Self {
        m.0
    }
}

impl TryFrom<IntMatrix> for BasisChange {
    type Error = Error;
    fn try_from(m: IntMatrix) -> Result<Self> {
        BasisChange::new(m)
    }
}

impl From<BasisChange> for IntMatrix {
    fn from(p: BasisChange) -> Self {
        p.0
    }
}

impl fmt::Debug for SeifertMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "SeifertMatrix({:?})", self.0)
    }
}

/// Unimodular integer change of basis `P`; row `i` expresses the new `i`-th
/// basis curve in the old basis.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "IntMatrix", into = "IntMatrix")]
pub struct BasisChange(IntMatrix);

impl BasisChange {
    pub fn new(m: IntMatrix) -> Result<Self> {
        let d = m.det();
        if d.abs() != <BigInt as num_traits::One>::one() {
            return Err(Error::NotUnimodular(d.to_string()));
        }
        Ok(BasisChange(m))
    }

    pub fn from_rows(rows: Vec<Vec<i64>>) -> Result<Self> {
        Self::new(IntMatrix::new(rows)?)
    }

    pub fn identity(n: usize) -> Self {
        BasisChange(IntMatrix::identity(n))
    }

    pub fn matrix(&self) -> &IntMatrix {
        &self.0
    }

    pub fn size(&self) -> usize {
        self.0.size()
    }

    /// `P J P^T == J`.
    pub fn is_symplectic(&self) -> bool {
        if self.size() % 2 != 0 {
            return false;
        }
        let j = IntMatrix::standard_form(self.size() / 2);
        self.0
            .checked_mul(&j)
            .and_then(|pj| pj.checked_mul(&self.0.transpose()))
            .map(|r| r == j)
            .unwrap_or(false)
    }

    /// `self` followed by `next`: the product `next * self`.
    pub fn then(&self, next: &BasisChange) -> Result<Self> {
        Ok(BasisChange(next.0.checked_mul(&self.0)?))
    }

    /// Product of `length` pseudo-random symplectic generators of `Sp(2g, Z)`:
    /// transvections `w -> w ± <w, v> v` along `v = e_k` or `v = e_k ± e_l`,
    /// and swaps of two `(x_i, y_i)` blocks.
    ///
    /// Generators that would overflow `i64` are skipped, so the result is
    /// always an exact symplectic matrix.
    pub fn random_symplectic(g: usize, seed: u64, length: usize) -> Result<Self> {
        if g == 0 {
            return Err(Error::ZeroGenus);
        }
        let n = 2 * g;
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let mut acc = IntMatrix::identity(n);
        let mut applied = 0;
        while applied < length {
            let gen = random_symplectic_generator(g, &mut rng);
            if let Ok(next) = gen.checked_mul(&acc) {
                acc = next;
                applied += 1;
            }
        }
        Ok(BasisChange(acc))
    }

    /// Product of `length` random elementary unimodular moves (row additions,
    /// negations, swaps). Not symplectic in general; `det = ±1`.
    pub fn random_unimodular(n: usize, seed: u64, length: usize) -> Self {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let mut acc = IntMatrix::identity(n);
        if n == 0 {
            return BasisChange(acc);
        }
        let mut applied = 0;
        while applied < length {
            let mut e = IntMatrix::identity(n);
            let i = rng.gen_range(0..n);
            match rng.gen_range(0..3) {
                0 if n > 1 => {
                    let j = (i + rng.gen_range(1..n)) % n;
                    e.rows[i][j] = if rng.gen_bool(0.5) { 1 } else { -1 };
                }
                1 => e.rows[i][i] = -1,
                _ if n > 1 => {
                    let j = (i + rng.gen_range(1..n)) % n;
                    e.rows.swap(i, j);
                }
                _ => e.rows[i][i] = -1,
            }
            if let Ok(next) = e.checked_mul(&acc) {
                acc = next;
                applied += 1;
            }
        }
        BasisChange(acc)
    }
}

fn random_symplectic_generator(g: usize, rng: &mut ChaCha8Rng) -> IntMatrix {
    let n = 2 * g;
    if g > 1 && rng.gen_ratio(1, 5) {
        let a = rng.gen_range(0..g);
        let b = (a + rng.gen_range(1..g)) % g;
        let mut m = IntMatrix::identity(n);
        m.rows.swap(2 * a, 2 * b);
        m.rows.swap(2 * a + 1, 2 * b + 1);
        return m;
    }
    let mut v = vec![0i64; n];
    let k = rng.gen_range(0..n);
    v[k] = 1;
    if n > 1 && rng.gen_bool(0.5) {
        let l = (k + rng.gen_range(1..n)) % n;
        v[l] = if rng.gen_bool(0.5) { 1 } else { -1 };
    }
    let sign = if rng.gen_bool(0.5) { 1 } else { -1 };
    transvection(&v, sign)
}

/// Matrix of `w -> w + sign * <w, v> v` acting on basis rows, where
/// `<a, b> = a^T J b`.
fn transvection(v: &[i64], sign: i64) -> IntMatrix {
    let n = v.len();
    let j = IntMatrix::standard_form(n / 2);
    let mut m = IntMatrix::identity(n);
    for k in 0..n {
        // <e_k, v> = (J v)_k
        let pairing: i64 = (0..n).map(|c| j.rows[k][c] * v[c]).sum();
        for c in 0..n {
            m.rows[k][c] += sign * pairing * v[c];
        }
    }
    m
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sm(rows: Vec<Vec<i64>>) -> SeifertMatrix {
        SeifertMatrix::from_rows(rows).unwrap()
    }

    #[test]
    fn theta_matches_displayed_rows() {
        assert_eq!(SeifertMatrix::theta(1).unwrap(), sm(vec![vec![0, 2], vec![1, 0]]));
        assert_eq!(
            SeifertMatrix::theta(2).unwrap(),
            sm(vec![
                vec![0, 2, 0, 0],
                vec![1, 0, -1, 0],
                vec![0, -2, 0, 2],
                vec![0, 0, 1, 0],
            ])
        );
        let t3 = SeifertMatrix::theta(3).unwrap();
        assert_eq!(t3.matrix().rows()[4], vec![0, 0, 0, -2, 0, 2]);
        assert_eq!(t3.matrix().rows()[5], vec![0, 0, 0, 0, 1, 0]);
        assert_eq!(t3.matrix().rows()[2], vec![0, -2, 0, 2, 0, 0]);
        assert_eq!(t3.matrix().rows()[3], vec![0, 0, 1, 0, -1, 0]);
    }

    #[test]
    fn theta_rejects_nonpositive() {
        assert_eq!(SeifertMatrix::theta(0), Err(Error::ThetaIndex(0)));
        assert_eq!(SeifertMatrix::theta(-3), Err(Error::ThetaIndex(-3)));
    }

    #[test]
    fn alexander_examples() {
        let theta1 = SeifertMatrix::theta(1).unwrap();
        assert_eq!(theta1.alexander(), LaurentPoly::from_i64s(0, &[-2, 5, -2]));
        let trefoil = sm(vec![vec![-1, 1], vec![0, -1]]);
        assert_eq!(trefoil.alexander(), LaurentPoly::from_i64s(0, &[1, -1, 1]));
        assert!(SeifertMatrix::empty().alexander().is_one());
    }

    #[test]
    fn alexander_with_zero_pivot() {
        // Leading entry of V - tV^T is zero; needs a row swap.
        let v = sm(vec![vec![0, 1], vec![0, 0]]);
        // det [[0, 1], [-t, 0]] = t
        assert_eq!(v.alexander(), LaurentPoly::t());
        let zero = sm(vec![vec![0, 0], vec![0, 0]]);
        assert!(zero.alexander().is_zero());
    }

    #[test]
    fn change_basis_examples() {
        let v = sm(vec![vec![0, 2], vec![1, 0]]);
        let p = BasisChange::from_rows(vec![vec![1, 1], vec![0, 1]]).unwrap();
        let w = v.change_basis(&p).unwrap();
        assert_eq!(w, sm(vec![vec![3, 2], vec![1, 0]]));
        assert!(w.alexander().equiv(&LaurentPoly::from_i64s(0, &[-2, 5, -2])));
        assert_eq!(v.change_basis(&BasisChange::identity(2)).unwrap(), v);
    }

    #[test]
    fn basis_change_must_be_unimodular() {
        let err = BasisChange::from_rows(vec![vec![2, 0], vec![0, 1]]).unwrap_err();
        assert_eq!(err, Error::NotUnimodular("2".into()));
        assert!(BasisChange::from_rows(vec![vec![0, 1], vec![1, 0]]).is_ok());
    }

    #[test]
    fn change_basis_size_mismatch() {
        let v = SeifertMatrix::theta(2).unwrap();
        assert_eq!(
            v.change_basis(&BasisChange::identity(2)),
            Err(Error::SizeMismatch(2, 4))
        );
    }

    #[test]
    fn intersection_examples() {
        let j = IntMatrix::standard_form(1);
        assert_eq!(SeifertMatrix::theta(1).unwrap().intersection().unwrap(), (j.clone(), true));
        assert_eq!(sm(vec![vec![-1, 1], vec![0, -1]]).intersection().unwrap(), (j, true));
        let z = sm(vec![vec![0, 0], vec![0, 0]]);
        assert_eq!(z.intersection().unwrap(), (IntMatrix::zeros(2), false));
        assert_eq!(SeifertMatrix::empty().intersection().unwrap(), (IntMatrix::zeros(0), true));
    }

    #[test]
    fn genus_is_half_size() {
        assert_eq!(SeifertMatrix::theta(3).unwrap().genus(), 3);
        assert_eq!(SeifertMatrix::theta(1).unwrap().genus(), 1);
        assert_eq!(SeifertMatrix::empty().genus(), 0);
        assert_eq!(
            SeifertMatrix::from_rows(vec![vec![1; 3]; 3]),
            Err(Error::OddSize(3))
        );
    }

    #[test]
    fn not_square_is_rejected() {
        let err = IntMatrix::new(vec![vec![1, 2], vec![3]]).unwrap_err();
        assert_eq!(err, Error::NotSquare { rows: 2, row: 1, cols: 1 });
    }

    #[test]
    fn random_symplectic_examples() {
        assert_eq!(BasisChange::random_symplectic(2, 9, 0).unwrap(), BasisChange::identity(4));
        for seed in 0..20 {
            let p = BasisChange::random_symplectic(1, seed, 12).unwrap();
            assert!(p.is_symplectic());
            let v = SeifertMatrix::theta(1).unwrap().change_basis(&p).unwrap();
            assert!(v.alexander().equiv(&LaurentPoly::from_i64s(0, &[-2, 5, -2])));
        }
        assert_eq!(BasisChange::random_symplectic(0, 1, 3), Err(Error::ZeroGenus));
    }

    #[test]
    fn random_symplectic_is_deterministic() {
        let a = BasisChange::random_symplectic(3, 42, 30).unwrap();
        let b = BasisChange::random_symplectic(3, 42, 30).unwrap();
        assert_eq!(a, b);
        assert!(a.is_symplectic());
    }

    #[test]
    fn integer_det() {
        let m = IntMatrix::new(vec![vec![2, 0, 1], vec![1, 3, 2], vec![1, 1, 1]]).unwrap();
        // 2(3-2) - 0 + 1(1-3) = 0
        assert_eq!(m.det(), BigInt::from(0));
        let m = IntMatrix::new(vec![vec![0, 1], vec![1, 0]]).unwrap();
        assert_eq!(m.det(), BigInt::from(-1));
    }

    #[test]
    fn json_rows() {
        let v = SeifertMatrix::theta(1).unwrap();
        assert_eq!(serde_json::to_string(&v).unwrap(), "[[0,2],[1,0]]");
        let back: SeifertMatrix = serde_json::from_str("[[0,2],[1,0]]").unwrap();
        assert_eq!(back, v);
        assert!(serde_json::from_str::<SeifertMatrix>("[[1]]").is_err());
    }
}
