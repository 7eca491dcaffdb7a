//! Homogeneous binary forms over F_p and syzygy spaces on the projective
//! line.
//!
//! A form of degree n is a coefficient vector `c` with `c[i]` the
//! coefficient of X^i Y^(n-i). The gcd here is the honest gcd of forms in
//! K[X,Y]: common powers of X and Y are factored out first, the rest is a
//! univariate Euclid after dehomogenizing, so the result is 1 exactly when
//! the inputs share no projective root over the algebraic closure.

use crate::error::Error;
use crate::field::Prime;
use crate::linalg::FpMatrix;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BinaryForm {
    p: Prime,
    coeffs: Vec<u64>,
}

impl BinaryForm {
    /// A form from raw coefficients `c[i] ~ X^i Y^(len-1-i)`, reduced mod p.
    pub fn new(p: Prime, coeffs: Vec<u64>) -> BinaryForm {
        assert!(!coeffs.is_empty(), "a form needs at least one coefficient");
        let coeffs = coeffs.into_iter().map(|c| p.reduce(c)).collect();
        BinaryForm { p, coeffs }
    }

    pub fn from_signed(p: Prime, coeffs: &[i64]) -> BinaryForm {
        BinaryForm::new(p, coeffs.iter().map(|&c| p.reduce_signed(c)).collect())
    }

    pub fn zero(p: Prime, degree: usize) -> BinaryForm {
        BinaryForm { p, coeffs: vec![0; degree + 1] }
    }

    /// X^xexp Y^(degree - xexp).
    pub fn monomial(p: Prime, degree: usize, xexp: usize) -> BinaryForm {
        assert!(xexp <= degree);
        let mut coeffs = vec![0; degree + 1];
        coeffs[xexp] = 1 % p.value();
        BinaryForm { p, coeffs }
    }

    pub fn one(p: Prime) -> BinaryForm {
        BinaryForm::new(p, vec![1])
    }

    pub fn modulus(&self) -> Prime {
        self.p
    }

    /// Formal degree (length of the coefficient vector minus one).
    pub fn degree(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeff(&self, i: usize) -> u64 {
        self.coeffs.get(i).copied().unwrap_or(0)
    }

    pub fn coeffs(&self) -> &[u64] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|&c| c == 0)
    }

    /// True for a nonzero constant, i.e. a unit.
    pub fn is_constant(&self) -> bool {
        !self.is_zero() && self.degree() == 0
    }

    pub fn add(&self, other: &BinaryForm) -> BinaryForm {
        assert_eq!(self.degree(), other.degree());
        let coeffs =
            self.coeffs.iter().zip(&other.coeffs).map(|(&a, &b)| self.p.add(a, b)).collect();
        BinaryForm { p: self.p, coeffs }
    }

    pub fn scale(&self, c: u64) -> BinaryForm {
        let c = self.p.reduce(c);
        BinaryForm {
            p: self.p,
            coeffs: self.coeffs.iter().map(|&a| self.p.mul(a, c)).collect(),
        }
    }

    pub fn mul(&self, other: &BinaryForm) -> BinaryForm {
        let p = self.p;
        let n = self.degree() + other.degree();
        let mut coeffs = vec![0u64; n + 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            if a == 0 {
                continue;
            }
            for (j, &b) in other.coeffs.iter().enumerate() {
                if b == 0 {
                    continue;
                }
                coeffs[i + j] = p.add(coeffs[i + j], p.mul(a, b));
            }
        }
        BinaryForm { p, coeffs }
    }

    pub fn pow(&self, e: u32) -> BinaryForm {
        let mut acc = BinaryForm::one(self.p);
        for _ in 0..e {
            acc = acc.mul(self);
        }
        acc
    }

    pub fn derivative_x(&self) -> BinaryForm {
        let p = self.p;
        if self.degree() == 0 {
            return BinaryForm::zero(p, 0);
        }
        let mut coeffs = vec![0u64; self.degree()];
        for (i, &c) in self.coeffs.iter().enumerate().skip(1) {
            coeffs[i - 1] = p.mul(c, (i as u64) % p.value());
        }
        BinaryForm { p, coeffs }
    }

    pub fn derivative_y(&self) -> BinaryForm {
        let p = self.p;
        let n = self.degree();
        if n == 0 {
            return BinaryForm::zero(p, 0);
        }
        let mut coeffs = vec![0u64; n];
        for (i, &c) in self.coeffs.iter().enumerate().take(n) {
            coeffs[i] = p.mul(c, ((n - i) as u64) % p.value());
        }
        BinaryForm { p, coeffs }
    }

    /// F(X^d, Y^d).
    pub fn substitute_power(&self, d: u32) -> BinaryForm {
        let d = d as usize;
        let n = self.degree() * d;
        let mut coeffs = vec![0u64; n + 1];
        for (i, &c) in self.coeffs.iter().enumerate() {
            coeffs[i * d] = c;
        }
        BinaryForm { p: self.p, coeffs }
    }

    fn x_valuation(&self) -> usize {
        self.coeffs.iter().position(|&c| c != 0).expect("nonzero form")
    }

    fn y_valuation(&self) -> usize {
        self.degree() - self.coeffs.iter().rposition(|&c| c != 0).expect("nonzero form")
    }

    /// Normalization used by the gcd: X^a Y^b times a dehomogenized-monic
    /// core.
    pub fn normalize(&self) -> BinaryForm {
        assert!(!self.is_zero());
        let a = self.x_valuation();
        let b = self.y_valuation();
        let core: Vec<u64> = self.coeffs[a..=self.degree() - b].to_vec();
        let lead = *core.last().unwrap();
        let inv = self.p.inv(lead);
        let mut coeffs = vec![0u64; self.degree() + 1];
        for (i, &c) in core.iter().enumerate() {
            coeffs[a + i] = self.p.mul(c, inv);
        }
        BinaryForm { p: self.p, coeffs }
    }

    /// Whether the form has no repeated projective root over the closure.
    pub fn is_squarefree(&self) -> bool {
        if self.is_zero() {
            return false;
        }
        if self.degree() == 0 {
            return true;
        }
        let dx = self.derivative_x();
        let dy = self.derivative_y();
        if dx.is_zero() && dy.is_zero() {
            // Both partials vanish only for a p-th power.
            return false;
        }
        let mut g = self.clone();
        for der in [dx, dy] {
            if !der.is_zero() {
                g = gcd(&g, &der).expect("gcd of nonzero forms");
            }
        }
        g.degree() == 0
    }
}

/// Monic gcd of two binary forms; 1 (a constant) exactly when the inputs
/// have no common projective root.
pub fn gcd(f: &BinaryForm, g: &BinaryForm) -> Result<BinaryForm, Error> {
    assert_eq!(f.modulus(), g.modulus());
    match (f.is_zero(), g.is_zero()) {
        (true, true) => return Err(Error::UndefinedGcd),
        (true, false) => return Ok(g.normalize()),
        (false, true) => return Ok(f.normalize()),
        _ => {}
    }
    let p = f.modulus();
    let a = f.x_valuation().min(g.x_valuation());
    let b = f.y_valuation().min(g.y_valuation());
    let uf = dehomogenize(f);
    let ug = dehomogenize(g);
    let core = univariate_gcd(p, uf, ug);
    // Re-homogenize: coefficient of t^i becomes X^(a+i) Y^(b + r - i).
    let r = core.len() - 1;
    let mut coeffs = vec![0u64; a + b + r + 1];
    for (i, &c) in core.iter().enumerate() {
        coeffs[a + i] = c;
    }
    Ok(BinaryForm { p, coeffs })
}

/// Strips X^vx Y^vy and reads the rest as a univariate polynomial in t =
/// X/Y; the result has a nonzero constant term and exact degree.
fn dehomogenize(f: &BinaryForm) -> Vec<u64> {
    let a = f.x_valuation();
    let b = f.y_valuation();
    f.coeffs()[a..=f.degree() - b].to_vec()
}

fn trim(mut v: Vec<u64>) -> Vec<u64> {
    while v.len() > 1 && *v.last().unwrap() == 0 {
        v.pop();
    }
    v
}

fn univariate_rem(p: Prime, mut a: Vec<u64>, b: &[u64]) -> Vec<u64> {
    let db = b.len() - 1;
    let lead_inv = p.inv(b[db]);
    while a.len() > db && !(a.len() == 1 && a[0] == 0) {
        let da = a.len() - 1;
        let q = p.mul(a[da], lead_inv);
        if q != 0 {
            for (i, &bc) in b.iter().enumerate() {
                let idx = da - db + i;
                a[idx] = p.sub(a[idx], p.mul(q, bc));
            }
        }
        a = trim(a);
        if a.len() == 1 && a[0] == 0 {
            break;
        }
        if a.len() - 1 < db {
            break;
        }
    }
    trim(a)
}

fn univariate_gcd(p: Prime, a: Vec<u64>, b: Vec<u64>) -> Vec<u64> {
    let mut a = trim(a);
    let mut b = trim(b);
    while !(b.len() == 1 && b[0] == 0) {
        let r = univariate_rem(p, a, &b);
        a = b;
        b = r;
    }
    // monic
    let lead = *a.last().unwrap();
    if lead != 0 && lead != 1 {
        let inv = p.inv(lead);
        for c in a.iter_mut() {
            *c = p.mul(*c, inv);
        }
    }
    a
}

/// Matrix of multiplication by `f` from K[U,V]_m to K[U,V]_(m + deg f),
/// bases ordered by ascending U-exponent. Negative `m` gives zero columns.
pub fn mult_matrix_p1(f: &BinaryForm, m: i64) -> FpMatrix {
    let p = f.modulus();
    let rows = (m + f.degree() as i64 + 1).max(0) as usize;
    if m < 0 {
        return FpMatrix::zeros(p, rows, 0);
    }
    let cols = m as usize + 1;
    let mut out = FpMatrix::zeros(p, rows, cols);
    for c in 0..cols {
        for (i, &fc) in f.coeffs().iter().enumerate() {
            if fc != 0 {
                out.set(c + i, c, fc);
            }
        }
    }
    out
}

/// The stacked matrix whose kernel is the degree-m syzygy space of `forms`.
pub fn syzygy_matrix_p1(forms: &[BinaryForm], m: i64) -> FpMatrix {
    let p = forms[0].modulus();
    let blocks: Vec<FpMatrix> =
        forms.iter().map(|f| mult_matrix_p1(f, m - f.degree() as i64)).collect();
    FpMatrix::hstack(p, &blocks)
}

pub fn syzygy_dim_p1(forms: &[BinaryForm], m: i64) -> usize {
    let mat = syzygy_matrix_p1(forms, m);
    mat.cols() - mat.rank()
}

/// Kernel vectors in concatenated coordinates, one block of length
/// max(0, m - deg f_i + 1) per form.
pub fn syzygy_kernel_p1(forms: &[BinaryForm], m: i64) -> Vec<Vec<u64>> {
    syzygy_matrix_p1(forms, m).kernel_basis()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(v: u64) -> Prime {
        Prime::new(v).unwrap()
    }

    #[test]
    fn gcd_of_coprime_quadrics_char3() {
        // X^2 - Y^2 and X^2 + Y^2 share no root since -1 is a non-square mod 3.
        let p3 = p(3);
        let f = BinaryForm::from_signed(p3, &[-1, 0, 1]);
        let g = BinaryForm::from_signed(p3, &[1, 0, 1]);
        let d = gcd(&f, &g).unwrap();
        assert!(d.is_constant());
    }

    #[test]
    fn gcd_with_itself_normalizes() {
        let p5 = p(5);
        let f = BinaryForm::from_signed(p5, &[2, 4, 2]); // 2(X+Y)^2
        let d = gcd(&f, &f).unwrap();
        assert_eq!(d, f.normalize());
        assert_eq!(d.coeffs(), &[1, 2, 1]);
    }

    #[test]
    fn gcd_extracts_common_linear_factor() {
        // X(X+Y) and X(X-Y) in char 5.
        let p5 = p(5);
        let x = BinaryForm::monomial(p5, 1, 1);
        let xpy = BinaryForm::from_signed(p5, &[1, 1]);
        let xmy = BinaryForm::from_signed(p5, &[-1, 1]);
        let f = x.mul(&xpy);
        let g = x.mul(&xmy);
        let d = gcd(&f, &g).unwrap();
        assert_eq!(d, BinaryForm::monomial(p5, 1, 1));
    }

    #[test]
    fn gcd_of_two_zeros_errors() {
        let p3 = p(3);
        let z = BinaryForm::zero(p3, 2);
        assert!(matches!(gcd(&z, &z), Err(Error::UndefinedGcd)));
    }

    #[test]
    fn freshman_dream_char2() {
        let p2 = p(2);
        let upv = BinaryForm::from_signed(p2, &[1, 1]);
        assert_eq!(upv.pow(2).coeffs(), &[1, 0, 1]);
    }

    #[test]
    fn squarefree_checks() {
        let p3 = p(3);
        // Fermat forms with p not dividing d are squarefree.
        for d in [2usize, 4, 5] {
            let mut c = vec![0i64; d + 1];
            c[0] = 1;
            c[d] = 1;
            assert!(BinaryForm::from_signed(p3, &c).is_squarefree(), "d={d}");
        }
        // X^2 Y is not.
        let x2y = BinaryForm::monomial(p3, 3, 2);
        assert!(!x2y.is_squarefree());
        // X^3 + Y^3 = (X+Y)^3 in char 3 is a p-th power.
        let p3cube = BinaryForm::from_signed(p3, &[1, 0, 0, 1]);
        assert!(!p3cube.is_squarefree());
    }

    #[test]
    fn substitution_scales_exponents() {
        let p5 = p(5);
        let f = BinaryForm::from_signed(p5, &[1, 2]); // Y + 2X
        let g = f.substitute_power(3);
        assert_eq!(g.coeffs(), &[1, 0, 0, 2]);
    }

    #[test]
    fn p1_multiplication_matrix() {
        // (U + V) * (aU + bV) in char 7, m = 1.
        let p7 = p(7);
        let f = BinaryForm::from_signed(p7, &[1, 1]);
        let m = mult_matrix_p1(&f, 1);
        assert_eq!((m.rows(), m.cols()), (3, 2));
        // column for V (U-exp 0): V*(U+V) = UV + V^2 -> (1,1,0)
        assert_eq!((m.get(0, 0), m.get(1, 0), m.get(2, 0)), (1, 1, 0));
    }

    #[test]
    fn p1_syzygy_dims_match_split_model() {
        // (U, V, U+V) has splitting type (1,2): dims 0,1,3,5,... from m=0.
        let p3 = p(3);
        let forms = vec![
            BinaryForm::monomial(p3, 1, 1),
            BinaryForm::monomial(p3, 1, 0),
            BinaryForm::from_signed(p3, &[1, 1]),
        ];
        let dims: Vec<usize> = (0..5).map(|m| syzygy_dim_p1(&forms, m)).collect();
        assert_eq!(dims, vec![0, 1, 3, 5, 7]);
    }
}
