//! Graded polynomial algebras `C[h]` and `C[h*]` with their operator
//! calculus: directional derivatives, multiplications, the group action,
//! divided differences, integral operators, and the polynomial pairing
//! `<p, q> = (p(d)q)(0)`.
//!
//! A `Poly` is sparse in a fixed number of variables; the same type serves
//! both `C[h]` (variables = a basis of `h*`) and `C[h*]` (variables = the dual
//! basis of `h`). Which ring is meant is decided by the reflection data passed
//! to the operators.

use crate::field::Scalar;
use std::collections::BTreeMap;
use std::fmt;

pub type Expo = Vec<u16>;

#[derive(Clone, PartialEq)]
pub struct Poly<S> {
    pub nvars: usize,
    pub terms: BTreeMap<Expo, S>,
}

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum PolyError {
    #[error("inexact division by linear form (corrupted reflection data?)")]
    DivisionFailure,
}

/// Everything the polynomial operators need to know about one reflection,
/// prepared for one of the two polynomial rings:
/// * `act[i]` is the coefficient vector of the image of variable `i` under
///   the reflection;
/// * `alpha` is the eigenvector linear form (`alpha_s` on `C[h]`,
///   `alpha_s^vee` on `C[h*]`) written in the ring's variables;
/// * `dual_deriv[i]` is the value of the dual eigenvector's derivation on
///   variable `i` (so the derivation `d_{alpha_s^vee}` on `C[h]`);
/// * `d` is `d_s` on `C[h]` and `d_s^vee` on `C[h*]`.
#[derive(Clone)]
pub struct ReflOps<S> {
    pub act: Vec<Vec<S>>,
    pub alpha: Vec<S>,
    pub dual_deriv: Vec<S>,
    pub d: S,
}

impl<S: Scalar> Poly<S> {
    pub fn zero(nvars: usize) -> Self {
        Poly { nvars, terms: BTreeMap::new() }
    }

    pub fn one(nvars: usize) -> Self {
        Self::constant(nvars, S::one())
    }

    pub fn constant(nvars: usize, c: S) -> Self {
        let mut p = Self::zero(nvars);
        p.insert_add(vec![0; nvars], c);
        p
    }

    pub fn var(nvars: usize, i: usize) -> Self {
        let mut e = vec![0u16; nvars];
        e[i] = 1;
        Self::monomial(nvars, e, S::one())
    }

    pub fn monomial(nvars: usize, e: Expo, c: S) -> Self {
        let mut p = Self::zero(nvars);
        p.insert_add(e, c);
        p
    }

    /// Linear form with the given coefficients.
    pub fn linear(coeffs: &[S]) -> Self {
        let mut p = Self::zero(coeffs.len());
        for (i, c) in coeffs.iter().enumerate() {
            let mut e = vec![0u16; coeffs.len()];
            e[i] = 1;
            p.insert_add(e, c.clone());
        }
        p
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn insert_add(&mut self, e: Expo, c: S) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&e) {
            Some(old) => {
                let v = old.add(&c);
                if v.is_zero() {
                    self.terms.remove(&e);
                } else {
                    *old = v;
                }
            }
            None => {
                self.terms.insert(e, c);
            }
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.insert_add(e.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Self {
        Poly {
            nvars: self.nvars,
            terms: self.terms.iter().map(|(e, c)| (e.clone(), c.neg())).collect(),
        }
    }

    pub fn scale(&self, s: &S) -> Self {
        if s.is_zero() {
            return Self::zero(self.nvars);
        }
        Poly {
            nvars: self.nvars,
            terms: self.terms.iter().map(|(e, c)| (e.clone(), c.mul(s))).collect(),
        }
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut out = Self::zero(self.nvars);
        for (ea, ca) in &self.terms {
            for (eb, cb) in &other.terms {
                let e: Expo = ea.iter().zip(eb).map(|(x, y)| x + y).collect();
                out.insert_add(e, ca.mul(cb));
            }
        }
        out
    }

    pub fn pow(&self, n: usize) -> Self {
        let mut out = Self::one(self.nvars);
        for _ in 0..n {
            out = out.mul(self);
        }
        out
    }

    pub fn total_degree(&self) -> Option<u32> {
        self.terms
            .keys()
            .map(|e| e.iter().map(|&x| x as u32).sum())
            .max()
    }

    pub fn homogeneous_component(&self, d: u32) -> Self {
        Poly {
            nvars: self.nvars,
            terms: self
                .terms
                .iter()
                .filter(|(e, _)| e.iter().map(|&x| x as u32).sum::<u32>() == d)
                .map(|(e, c)| (e.clone(), c.clone()))
                .collect(),
        }
    }

    /// Directional derivative along the derivation `var_i -> coeffs[i]`.
    pub fn deriv_linear(&self, coeffs: &[S]) -> Self {
        let mut out = Self::zero(self.nvars);
        for (e, c) in &self.terms {
            for i in 0..self.nvars {
                if e[i] == 0 || coeffs[i].is_zero() {
                    continue;
                }
                let mut e2 = e.clone();
                e2[i] -= 1;
                out.insert_add(e2, c.mul(&coeffs[i]).mul(&S::from_int(e[i] as i64)));
            }
        }
        out
    }

    /// Substitution `var_i -> images[i]` (an algebra homomorphism).
    pub fn substitute(&self, images: &[Poly<S>]) -> Self {
        let mut out = Self::zero(self.nvars);
        for (e, c) in &self.terms {
            let mut term = Self::constant(self.nvars, c.clone());
            for (i, &pow) in e.iter().enumerate() {
                if pow > 0 {
                    term = term.mul(&images[i].pow(pow as usize));
                }
            }
            out = out.add(&term);
        }
        out
    }

    /// Group action by the linear map `var_i -> sum_j act[i][j] var_j`.
    pub fn apply_linear(&self, act: &[Vec<S>]) -> Self {
        let images: Vec<Poly<S>> = act.iter().map(|row| Self::linear(row)).collect();
        self.substitute(&images)
    }

    /// Exact division by a linear form; errors if the division is inexact.
    pub fn divide_by_linear(&self, form: &[S]) -> Result<Self, PolyError> {
        let n = self.nvars;
        if self.is_zero() {
            return Ok(Self::zero(n));
        }
        let i0 = form
            .iter()
            .position(|c| !c.is_zero())
            .expect("zero linear form");
        let binv = form[i0].inv().expect("nonzero coefficient");
        // coordinates w: w_{i0} = form, w_i = var_i otherwise.
        // forward: var_{i0} = (w_{i0} - sum_{i != i0} b_i w_i) / b_{i0}
        let mut fwd_images: Vec<Poly<S>> = (0..n).map(|i| Self::var(n, i)).collect();
        let mut pivot_image = Self::var(n, i0).scale(&binv);
        for i in 0..n {
            if i != i0 && !form[i].is_zero() {
                pivot_image = pivot_image.sub(&Self::var(n, i).scale(&form[i].mul(&binv)));
            }
        }
        fwd_images[i0] = pivot_image;
        let in_w = self.substitute(&fwd_images);
        // divide every monomial by w_{i0}
        let mut quotient_w = Self::zero(n);
        for (e, c) in &in_w.terms {
            if e[i0] == 0 {
                return Err(PolyError::DivisionFailure);
            }
            let mut e2 = e.clone();
            e2[i0] -= 1;
            quotient_w.insert_add(e2, c.clone());
        }
        // back: w_{i0} = form, w_i = var_i
        let mut back_images: Vec<Poly<S>> = (0..n).map(|i| Self::var(n, i)).collect();
        back_images[i0] = Self::linear(form);
        Ok(quotient_w.substitute(&back_images))
    }

    /// An antiderivative along the derivation `var_i -> deriv[i]`: returns `P`
    /// with `P.deriv_linear(deriv) == self`. The primitive is taken in the
    /// coordinate singled out by the first nonzero entry of `deriv`, which
    /// fixes the choice deterministically.
    pub fn antiderivative(&self, deriv: &[S]) -> Self {
        let n = self.nvars;
        if self.is_zero() {
            return Self::zero(n);
        }
        let j0 = deriv
            .iter()
            .position(|c| !c.is_zero())
            .expect("zero derivation");
        let a0inv = deriv[j0].inv().expect("nonzero derivation entry");
        // forward to u-coordinates: var_{j0} = a_{j0} u_{j0},
        // var_i = u_i + a_i u_{j0} (i != j0)
        let fwd: Vec<Poly<S>> = (0..n)
            .map(|i| {
                if i == j0 {
                    Self::var(n, j0).scale(&deriv[j0])
                } else if deriv[i].is_zero() {
                    Self::var(n, i)
                } else {
                    Self::var(n, i).add(&Self::var(n, j0).scale(&deriv[i]))
                }
            })
            .collect();
        let in_u = self.substitute(&fwd);
        // integrate u_{j0}
        let mut integrated = Self::zero(n);
        for (e, c) in &in_u.terms {
            let mut e2 = e.clone();
            e2[j0] += 1;
            let denom = S::from_int(e2[j0] as i64).inv().unwrap();
            integrated.insert_add(e2, c.mul(&denom));
        }
        // back: u_{j0} = var_{j0}/a_{j0}, u_i = var_i - (a_i/a_{j0}) var_{j0}
        let back: Vec<Poly<S>> = (0..n)
            .map(|i| {
                if i == j0 {
                    Self::var(n, j0).scale(&a0inv)
                } else if deriv[i].is_zero() {
                    Self::var(n, i)
                } else {
                    Self::var(n, i).sub(&Self::var(n, j0).scale(&deriv[i].mul(&a0inv)))
                }
            })
            .collect();
        integrated.substitute(&back)
    }

    pub fn to_display_string(&self, var_name: &str) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut entries: Vec<(&Expo, &S)> = self.terms.iter().collect();
        entries.sort_by(|(a, _), (b, _)| {
            let da: u32 = a.iter().map(|&x| x as u32).sum();
            let db: u32 = b.iter().map(|&x| x as u32).sum();
            da.cmp(&db).then_with(|| a.cmp(b))
        });
        let pieces: Vec<String> = entries
            .iter()
            .map(|(e, c)| {
                let mono: Vec<String> = e
                    .iter()
                    .enumerate()
                    .filter(|(_, &p)| p > 0)
                    .map(|(i, &p)| {
                        if p == 1 {
                            format!("{}{}", var_name, i + 1)
                        } else {
                            format!("{}{}^{}", var_name, i + 1, p)
                        }
                    })
                    .collect();
                if mono.is_empty() {
                    format!("{}", c)
                } else {
                    format!("{} * {}", c, mono.join(" "))
                }
            })
            .collect();
        pieces.join(" + ")
    }
}

impl<S: Scalar> fmt::Debug for Poly<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_display_string("v"))
    }
}

/// `Delta_s(p) = (p - s(p)) / alpha_s`, exact by construction; an inexact
/// division signals corrupted reflection data.
pub fn divided_diff<S: Scalar>(rd: &ReflOps<S>, p: &Poly<S>) -> Result<Poly<S>, PolyError> {
    let sp = p.apply_linear(&rd.act);
    p.sub(&sp).divide_by_linear(&rd.alpha)
}

/// `I_s(p) = (1 - s)(P)` for any antiderivative `P` of `p` along
/// `d_{alpha_s^vee}`. Independent of the choice of `P` because the kernel of
/// the derivation is s-invariant.
pub fn integral_op<S: Scalar>(rd: &ReflOps<S>, p: &Poly<S>) -> Poly<S> {
    let prim = p.antiderivative(&rd.dual_deriv);
    prim.sub(&prim.apply_linear(&rd.act))
}

/// The bilinear pairing `<p, q> = (p(d)q)(0)` between `C[h]` and `C[h*]` in
/// dual bases: `<x^a, y^b> = delta_{a,b} * a!`.
pub fn pairing<S: Scalar>(p: &Poly<S>, q: &Poly<S>) -> S {
    assert_eq!(p.nvars, q.nvars);
    let mut acc = S::zero();
    for (e, cp) in &p.terms {
        if let Some(cq) = q.terms.get(e) {
            let mut fact = S::one();
            for &x in e.iter() {
                for k in 2..=(x as i64) {
                    fact = fact.mul(&S::from_int(k));
                }
            }
            acc = acc.add(&cp.mul(cq).mul(&fact));
        }
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::{rat, Rational};

    type P = Poly<Rational>;

    fn s_z2() -> ReflOps<Rational> {
        // Z2 on a 1-dim h with alpha = x, alpha^vee = 2y
        ReflOps {
            act: vec![vec![rat(-1)]],
            alpha: vec![rat(1)],
            dual_deriv: vec![rat(2)],
            d: rat(1),
        }
    }

    #[test]
    fn derivative_basics() {
        let x = P::var(1, 0);
        let xn = x.pow(5);
        // d_y(x^5) = 5 x^4 when x(y) = 1
        assert_eq!(xn.deriv_linear(&[rat(1)]), x.pow(4).scale(&rat(5)));
        assert_eq!(P::one(1).deriv_linear(&[rat(1)]), P::zero(1));
        // rank 2 mixed monomial x1^2 x2, d along y1 -> 2 x1 x2
        let p = P::monomial(2, vec![2, 1], rat(1));
        assert_eq!(
            p.deriv_linear(&[rat(1), rat(0)]),
            P::monomial(2, vec![1, 1], rat(2))
        );
    }

    #[test]
    fn divided_difference_z2() {
        let rd = s_z2();
        let x = P::var(1, 0);
        // Delta_s(x^2) = 0, Delta_s(x^3) = 2x^2
        assert_eq!(divided_diff(&rd, &x.pow(2)).unwrap(), P::zero(1));
        assert_eq!(divided_diff(&rd, &x.pow(3)).unwrap(), x.pow(2).scale(&rat(2)));
        // Delta_s(alpha_s) = 1 - lambda_s = 2 d_s = 2
        assert_eq!(divided_diff(&rd, &x).unwrap(), P::constant(1, rat(2)));
    }

    #[test]
    fn integral_op_z2_parity() {
        // I^vee on C[h*] for Z2: alpha^vee-form is 2y, dual derivation d_alpha
        // sends y -> 1. I^vee(y^d) = 0 for odd d, 2/(d+1) y^{d+1} for even d.
        let rd = ReflOps {
            act: vec![vec![rat(-1)]],
            alpha: vec![rat(2)],
            dual_deriv: vec![rat(1)],
            d: rat(1),
        };
        let y = P::var(1, 0);
        assert_eq!(integral_op(&rd, &y.pow(3)), P::zero(1));
        assert_eq!(
            integral_op(&rd, &y.pow(4)),
            y.pow(5).scale(&Rational::new(2.into(), 5.into()))
        );
    }

    #[test]
    fn pairing_factorial() {
        let x = P::var(1, 0);
        let y = P::var(1, 0);
        // <x^n, y^n> = n!
        assert_eq!(pairing(&x.pow(4), &y.pow(4)), rat(24));
        assert_eq!(pairing(&x.pow(2), &y.pow(3)), rat(0));
        assert_eq!(pairing(&x, &y), rat(1));
    }

    #[test]
    fn antiderivative_inverts_derivative() {
        let p = P::monomial(2, vec![2, 3], rat(7)).add(&P::var(2, 1));
        let deriv = vec![rat(3), rat(-2)];
        let prim = p.antiderivative(&deriv);
        assert_eq!(prim.deriv_linear(&deriv), p);
    }

    #[test]
    fn division_failure_detected() {
        let p = P::monomial(2, vec![0, 1], rat(1)); // x2 is not divisible by x1
        assert_eq!(
            p.divide_by_linear(&[rat(1), rat(0)]),
            Err(PolyError::DivisionFailure)
        );
    }
}
