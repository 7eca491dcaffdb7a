//! The graded coordinate ring R = K[X,Y,Z]/(Z^d - P(X,Y)) of a plane
//! trinomial curve over F_p.
//!
//! Because the single relation rewrites Z^d into a binary form, R has the
//! canonical K-basis {X^i Y^j Z^k : i+j+k = m, 0 <= k < d} in each degree m,
//! ordered by (k ascending, then X-exponent ascending). Every matrix layout
//! and serialized element in the crate is pinned to that ordering.

use std::collections::HashMap;
use std::sync::{Arc, RwLock};

use crate::binform::{self, BinaryForm};
use crate::error::Error;
use crate::field::Prime;
use crate::linalg::FpMatrix;

/// Exponent triple (X, Y, Z).
pub type Exponents = (u32, u32, u32);

#[derive(Debug)]
pub struct CurveRing {
    p: Prime,
    d: u32,
    relation: BinaryForm,
    genus: u64,
    pow_cache: RwLock<HashMap<u32, Arc<BinaryForm>>>,
}

impl CurveRing {
    /// The Fermat curve X^d + Y^d - Z^d = 0, i.e. P(X,Y) = X^d + Y^d.
    pub fn fermat(p: Prime, d: u32) -> Result<CurveRing, Error> {
        let mut coeffs = vec![0u64; d as usize + 1];
        coeffs[0] = 1;
        coeffs[d as usize] = 1;
        CurveRing::new(p, d, BinaryForm::new(p, coeffs))
    }

    /// A general trinomial curve Z^d = P(X,Y); P must be a squarefree form
    /// of degree exactly d and p must not divide d, so the curve is smooth.
    pub fn new(p: Prime, d: u32, relation: BinaryForm) -> Result<CurveRing, Error> {
        if d < 2 {
            return Err(Error::InvalidParameter(format!("curve degree {d} < 2")));
        }
        if u64::from(d) % p.value() == 0 {
            return Err(Error::SingularCurve(format!(
                "characteristic {} divides the degree {}",
                p.value(),
                d
            )));
        }
        if relation.modulus() != p {
            return Err(Error::InvalidParameter("relation form has a different modulus".into()));
        }
        if relation.degree() != d as usize || relation.is_zero() {
            return Err(Error::InvalidParameter(format!(
                "relation form must be a nonzero form of degree {d}"
            )));
        }
        if !relation.is_squarefree() {
            return Err(Error::SingularCurve(
                "the relation form has a repeated root over the closure".into(),
            ));
        }
        let genus = (u64::from(d) - 1) * (u64::from(d) - 2) / 2;
        Ok(CurveRing { p, d, relation, genus, pow_cache: RwLock::new(HashMap::new()) })
    }

    pub fn p(&self) -> Prime {
        self.p
    }

    pub fn d(&self) -> u32 {
        self.d
    }

    pub fn genus(&self) -> u64 {
        self.genus
    }

    /// The binary form P with Z^d = P(X,Y).
    pub fn relation_form(&self) -> &BinaryForm {
        &self.relation
    }

    /// P^s, memoized. The cache is populated race-free: a losing writer
    /// recomputes the same deterministic value.
    pub fn relation_power(&self, s: u32) -> Arc<BinaryForm> {
        if let Some(f) = self.pow_cache.read().unwrap().get(&s) {
            return Arc::clone(f);
        }
        let value = Arc::new(self.relation.pow(s));
        let mut cache = self.pow_cache.write().unwrap();
        Arc::clone(cache.entry(s).or_insert(value))
    }

    /// dim_K R_m.
    pub fn hilbert_dim(&self, m: i64) -> usize {
        if m < 0 {
            return 0;
        }
        let m = m as u64;
        let kmax = u64::from(self.d - 1).min(m);
        ((0..=kmax).map(|k| m - k + 1).sum::<u64>()) as usize
    }

    /// h^0(C, O_C(k)): the curve is projectively normal, so sections of the
    /// k-th twist are exactly R_k.
    pub fn h0(&self, k: i64) -> usize {
        self.hilbert_dim(k)
    }

    /// The canonical monomial basis of R_m.
    pub fn monomial_basis(&self, m: i64) -> Vec<Exponents> {
        if m < 0 {
            return Vec::new();
        }
        let m = m as u32;
        let mut out = Vec::with_capacity(self.hilbert_dim(i64::from(m)));
        for k in 0..self.d.min(m + 1) {
            for i in 0..=(m - k) {
                out.push((i, m - k - i, k));
            }
        }
        out
    }

    /// Index of X^i Y^j Z^k (already reduced, i+j+k = m) in the degree-m
    /// basis.
    #[inline]
    pub fn basis_index(&self, m: u32, i: u32, k: u32) -> usize {
        debug_assert!(k < self.d && i + k <= m);
        let (m, i, k) = (m as usize, i as usize, k as usize);
        k * (m + 1) - k * (k - 1).max(0) / 2 + i
    }

    pub fn zero_element(&self, degree: i64) -> GradedElement {
        GradedElement { degree, coeffs: vec![0; self.hilbert_dim(degree)] }
    }

    pub fn one(&self) -> GradedElement {
        GradedElement { degree: 0, coeffs: vec![1 % self.p.value()] }
    }

    /// Canonical representative of X^i Y^j Z^k as a graded element of
    /// degree i + j + k (Z^d rewrites to P until the Z-exponent is < d).
    pub fn reduce_monomial(&self, e: Exponents) -> GradedElement {
        let degree = i64::from(e.0) + i64::from(e.1) + i64::from(e.2);
        let mut elem = self.zero_element(degree);
        self.accumulate_monomial(&mut elem.coeffs, degree as u32, e, 1 % self.p.value());
        elem
    }

    /// Adds c * reduce(X^i Y^j Z^k) into a degree-(i+j+k) coefficient
    /// vector.
    fn accumulate_monomial(&self, acc: &mut [u64], m: u32, e: Exponents, c: u64) {
        if c == 0 {
            return;
        }
        let s = e.2 / self.d;
        let r = e.2 % self.d;
        if s == 0 {
            let idx = self.basis_index(m, e.0, r);
            acc[idx] = self.p.add(acc[idx], c);
            return;
        }
        let pw = self.relation_power(s);
        let sd = (s * self.d) as usize;
        for (t, &pc) in pw.coeffs().iter().enumerate() {
            if pc == 0 {
                continue;
            }
            // X^i Y^j Z^(sd+r) -> pc * X^(i+t) Y^(j + sd - t) Z^r
            let idx = self.basis_index(m, e.0 + t as u32, r);
            debug_assert_eq!(sd, pw.degree());
            acc[idx] = self.p.add(acc[idx], self.p.mul(c, pc));
        }
    }

    /// Embeds a binary form f(X,Y) as the graded element with Z-exponent 0.
    pub fn element_from_form(&self, f: &BinaryForm) -> GradedElement {
        let degree = f.degree() as i64;
        let mut elem = self.zero_element(degree);
        for (i, &c) in f.coeffs().iter().enumerate() {
            if c != 0 {
                let idx = self.basis_index(degree as u32, i as u32, 0);
                elem.coeffs[idx] = c;
            }
        }
        elem
    }

    pub fn monomial_element(&self, e: Exponents) -> GradedElement {
        self.reduce_monomial(e)
    }

    /// The matrix of multiplication by f from R_m to R_(m + deg f) in the
    /// canonical bases. Negative m gives a matrix with zero columns.
    pub fn mult_map(&self, f: &GradedElement, m: i64) -> FpMatrix {
        let target = m.max(0) + f.degree; // row count degree when m >= 0
        let rows = self.hilbert_dim(m + f.degree);
        if m < 0 {
            return FpMatrix::zeros(self.p, self.hilbert_dim(target.max(0)).min(rows).max(rows), 0);
        }
        let cols = self.hilbert_dim(m);
        let mut mat = FpMatrix::zeros(self.p, rows, cols);
        let basis = self.monomial_basis(m);
        let fterms = f.terms(self);
        let tm = (m + f.degree) as u32;
        let mut column = vec![0u64; rows];
        for (cidx, &(bi, bj, bk)) in basis.iter().enumerate() {
            column.iter_mut().for_each(|x| *x = 0);
            for &((fi, fj, fk), fc) in &fterms {
                self.accumulate_monomial(&mut column, tm, (bi + fi, bj + fj, bk + fk), fc);
            }
            for (r, &v) in column.iter().enumerate() {
                if v != 0 {
                    mat.set(r, cidx, v);
                }
            }
        }
        mat
    }

    /// Product of two graded elements.
    pub fn mul_elements(&self, a: &GradedElement, b: &GradedElement) -> GradedElement {
        let degree = a.degree + b.degree;
        let mut out = self.zero_element(degree);
        if degree < 0 {
            return out;
        }
        let tm = degree as u32;
        let bterms = b.terms(self);
        for ((ai, aj, ak), ac) in a.terms(self) {
            for &((bi, bj, bk), bc) in &bterms {
                self.accumulate_monomial(
                    &mut out.coeffs,
                    tm,
                    (ai + bi, aj + bj, ak + bk),
                    self.p.mul(ac, bc),
                );
            }
        }
        out
    }

    /// Product with a single (possibly unreduced) monomial.
    pub fn mul_monomial(&self, a: &GradedElement, e: Exponents) -> GradedElement {
        let degree = a.degree + i64::from(e.0) + i64::from(e.1) + i64::from(e.2);
        let mut out = self.zero_element(degree);
        if degree < 0 {
            return out;
        }
        let tm = degree as u32;
        for ((ai, aj, ak), ac) in a.terms(self) {
            self.accumulate_monomial(&mut out.coeffs, tm, (ai + e.0, aj + e.1, ak + e.2), ac);
        }
        out
    }

    pub fn add_elements(&self, a: &GradedElement, b: &GradedElement) -> GradedElement {
        assert_eq!(a.degree, b.degree, "degree mismatch");
        GradedElement {
            degree: a.degree,
            coeffs: a.coeffs.iter().zip(&b.coeffs).map(|(&x, &y)| self.p.add(x, y)).collect(),
        }
    }

    pub fn scale_element(&self, a: &GradedElement, c: u64) -> GradedElement {
        let c = self.p.reduce(c);
        GradedElement {
            degree: a.degree,
            coeffs: a.coeffs.iter().map(|&x| self.p.mul(x, c)).collect(),
        }
    }
}

/// A homogeneous element of R, held as coefficients over the canonical
/// basis of its degree. Negative degrees denote the zero space and carry no
/// coefficients.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GradedElement {
    degree: i64,
    coeffs: Vec<u64>,
}

impl GradedElement {
    pub fn from_coeffs(ring: &CurveRing, degree: i64, coeffs: Vec<u64>) -> GradedElement {
        assert_eq!(coeffs.len(), ring.hilbert_dim(degree));
        let coeffs = coeffs.into_iter().map(|c| ring.p().reduce(c)).collect();
        GradedElement { degree, coeffs }
    }

    pub fn degree(&self) -> i64 {
        self.degree
    }

    pub fn coeffs(&self) -> &[u64] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|&c| c == 0)
    }

    /// Nonzero terms in canonical basis order.
    pub fn terms(&self, ring: &CurveRing) -> Vec<(Exponents, u64)> {
        if self.degree < 0 {
            return Vec::new();
        }
        ring.monomial_basis(self.degree)
            .into_iter()
            .zip(self.coeffs.iter().copied())
            .filter(|&(_, c)| c != 0)
            .collect()
    }

    /// Splits into the d pieces of constant Z-exponent; piece `l` collects
    /// the terms X^i Y^j Z^l.
    pub fn split_z_levels(&self, ring: &CurveRing) -> Vec<GradedElement> {
        let d = ring.d() as usize;
        let mut pieces = vec![ring.zero_element(self.degree); d];
        for ((i, _, k), c) in self.terms(ring) {
            let idx = ring.basis_index(self.degree as u32, i, k);
            pieces[k as usize].coeffs[idx] = c;
        }
        pieces
    }

    /// JSON value {degree, terms: [[i, j, k, coeff], ...]}.
    pub fn to_json(&self, ring: &CurveRing) -> serde_json::Value {
        let terms: Vec<serde_json::Value> = self
            .terms(ring)
            .into_iter()
            .map(|((i, j, k), c)| serde_json::json!([i, j, k, c]))
            .collect();
        serde_json::json!({ "degree": self.degree, "terms": terms })
    }
}

/// Convenience used across the higher modules: X^a, Y^a or Z^a as elements.
pub fn axis_power(ring: &CurveRing, axis: usize, a: u32) -> GradedElement {
    match axis {
        0 => ring.reduce_monomial((a, 0, 0)),
        1 => ring.reduce_monomial((0, a, 0)),
        2 => ring.reduce_monomial((0, 0, a)),
        _ => panic!("axis out of range"),
    }
}

pub use binform::gcd as form_gcd;
