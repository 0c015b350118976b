//! The cyclotomic field `Q(zeta_m)`, represented as residues modulo the m-th
//! cyclotomic polynomial `Phi_m`. Elements of different conductors embed into
//! the lcm conductor before arithmetic, so mixed-conductor expressions just
//! work.

use super::{rat, FieldError, Rational, Scalar};
use num_integer::Integer;
use std::collections::HashMap;
use std::fmt;
use std::sync::{Mutex, OnceLock};


fn qz(c: &Rational) -> bool {
    num_traits::Zero::is_zero(c)
}

fn q_one(c: &Rational) -> bool {
    num_traits::One::is_one(c)
}

fn euler_phi(m: u32) -> usize {
    let mut n = m;
    let mut result = m;
    let mut p = 2;
    while p * p <= n {
        if n % p == 0 {
            while n % p == 0 {
                n /= p;
            }
            result = result / p * (p - 1);
        }
        p += 1;
    }
    if n > 1 {
        result = result / n * (n - 1);
    }
    result as usize
}

fn poly_trim(p: &mut Vec<Rational>) {
    while p.last().map_or(false, |c| qz(c)) {
        p.pop();
    }
}

/// Quotient of exact polynomial division; panics if not exact (internal use).
fn poly_div_exact(num: &[Rational], den: &[Rational]) -> Vec<Rational> {
    let mut rem: Vec<Rational> = num.to_vec();
    poly_trim(&mut rem);
    let mut d = den.to_vec();
    poly_trim(&mut d);
    assert!(!d.is_empty(), "division by zero polynomial");
    let mut quot = vec![rat(0); rem.len().saturating_sub(d.len()) + 1];
    let lead = d.last().unwrap().clone();
    while rem.len() >= d.len() && !rem.is_empty() {
        let k = rem.len() - d.len();
        let q = rem.last().unwrap() / &lead;
        for (i, c) in d.iter().enumerate() {
            let v = &rem[k + i] - &(c * &q);
            rem[k + i] = v;
        }
        quot[k] = q;
        poly_trim(&mut rem);
    }
    assert!(rem.is_empty(), "inexact polynomial division");
    quot
}

/// Coefficients of the m-th cyclotomic polynomial, ascending degree.
pub fn cyclotomic_polynomial(m: u32) -> Vec<Rational> {
    static CACHE: OnceLock<Mutex<HashMap<u32, Vec<Rational>>>> = OnceLock::new();
    let cache = CACHE.get_or_init(|| Mutex::new(HashMap::new()));
    if let Some(p) = cache.lock().unwrap().get(&m) {
        return p.clone();
    }
    // Phi_m = (x^m - 1) / prod_{d | m, d < m} Phi_d
    let mut num = vec![rat(0); m as usize + 1];
    num[0] = rat(-1);
    num[m as usize] = rat(1);
    let mut den = vec![rat(1)];
    for d in 1..m {
        if m % d == 0 {
            let phi_d = cyclotomic_polynomial(d);
            den = poly_mul_q(&den, &phi_d);
        }
    }
    let result = poly_div_exact(&num, &den);
    cache.lock().unwrap().insert(m, result.clone());
    result
}

fn poly_mul_q(a: &[Rational], b: &[Rational]) -> Vec<Rational> {
    if a.is_empty() || b.is_empty() {
        return vec![];
    }
    let mut out = vec![rat(0); a.len() + b.len() - 1];
    for (i, ca) in a.iter().enumerate() {
        if qz(ca) {
            continue;
        }
        for (j, cb) in b.iter().enumerate() {
            let v = &out[i + j] + &(ca * cb);
            out[i + j] = v;
        }
    }
    out
}

/// An element of `Q(zeta_m)`: the residue of a polynomial in `zeta_m` modulo
/// `Phi_m`. The coefficient vector always has length `phi(m)`.
#[derive(Clone)]
pub struct Cyclotomic {
    conductor: u32,
    coeffs: Vec<Rational>,
}

/// Canonical residue of an arbitrary polynomial in `zeta_m` modulo `Phi_m`.
pub fn cyclo_reduce(poly_in_zeta: &[Rational], m: u32) -> Cyclotomic {
    assert!(m >= 1, "conductor must be >= 1");
    let deg = euler_phi(m);
    let phi = cyclotomic_polynomial(m);
    let mut rem: Vec<Rational> = poly_in_zeta.to_vec();
    poly_trim(&mut rem);
    // reduce mod Phi_m (monic)
    while rem.len() > deg {
        let k = rem.len() - phi.len();
        let q = rem.last().unwrap().clone();
        for (i, c) in phi.iter().enumerate() {
            let v = &rem[k + i] - &(c * &q);
            rem[k + i] = v;
        }
        poly_trim(&mut rem);
    }
    rem.resize(deg.max(1), rat(0));
    if m == 1 {
        // Q itself: Phi_1 = x - 1, residues are constants
    }
    Cyclotomic { conductor: m, coeffs: rem }
}

impl Cyclotomic {
    pub fn from_rational(q: &Rational) -> Self {
        Cyclotomic { conductor: 1, coeffs: vec![q.clone()] }
    }

    pub fn from_int(n: i64) -> Self {
        Self::from_rational(&rat(n))
    }

    /// `zeta_m^k`.
    pub fn zeta(m: u32, k: i64) -> Self {
        let kk = k.rem_euclid(m as i64) as usize;
        let mut poly = vec![rat(0); kk + 1];
        poly[kk] = rat(1);
        cyclo_reduce(&poly, m)
    }

    pub fn conductor(&self) -> u32 {
        self.conductor
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    /// Re-express in conductor `big` (a multiple of the current conductor).
    pub fn embed(&self, big: u32) -> Self {
        assert!(big % self.conductor == 0, "embedding requires divisibility");
        if big == self.conductor {
            return self.clone();
        }
        let step = (big / self.conductor) as usize;
        let mut poly = vec![rat(0); self.coeffs.len() * step];
        for (i, c) in self.coeffs.iter().enumerate() {
            if !qz(c) {
                poly[i * step] = c.clone();
            }
        }
        cyclo_reduce(&poly, big)
    }

    fn common(a: &Self, b: &Self) -> (Self, Self) {
        if a.conductor == b.conductor {
            (a.clone(), b.clone())
        } else {
            let m = a.conductor.lcm(&b.conductor);
            (a.embed(m), b.embed(m))
        }
    }

    /// Galois automorphism `zeta -> zeta^k`, for `gcd(k, m) = 1`.
    pub fn galois(&self, k: i64) -> Self {
        let m = self.conductor;
        assert!(k.rem_euclid(m as i64).gcd(&(m as i64)) == 1, "not a unit mod m");
        let mut poly = vec![rat(0); euler_phi(m).max(1) * (m as usize).max(1)];
        for (i, c) in self.coeffs.iter().enumerate() {
            if qz(c) {
                continue;
            }
            let e = ((i as i64) * k).rem_euclid(m as i64) as usize;
            let v = &poly[e] + c;
            poly[e] = v;
        }
        cyclo_reduce(&poly, m)
    }

    /// Complex conjugation (`zeta -> zeta^{-1}`).
    pub fn conj(&self) -> Self {
        if self.conductor == 1 {
            self.clone()
        } else {
            self.galois(self.conductor as i64 - 1)
        }
    }

    /// Serialize as a polynomial string in `z{m}`, ascending powers.
    pub fn to_display_string(&self) -> String {
        if Scalar::is_zero(self) {
            return "0".to_string();
        }
        let mut out = String::new();
        for (i, c) in self.coeffs.iter().enumerate() {
            if qz(c) {
                continue;
            }
            let mono = if i == 0 {
                String::new()
            } else if i == 1 {
                format!("z{}", self.conductor)
            } else {
                format!("z{}^{}", self.conductor, i)
            };
            let (sign, abs) = if c < &rat(0) { ("-", -c.clone()) } else { ("+", c.clone()) };
            if out.is_empty() {
                if sign == "-" {
                    out.push('-');
                }
            } else {
                out.push_str(sign);
            }
            if mono.is_empty() {
                out.push_str(&abs.to_string());
            } else if q_one(&abs) {
                out.push_str(&mono);
            } else {
                out.push_str(&format!("{}*{}", abs, mono));
            }
        }
        out
    }
}

impl PartialEq for Cyclotomic {
    fn eq(&self, other: &Self) -> bool {
        if self.conductor == other.conductor {
            self.coeffs == other.coeffs
        } else {
            let (a, b) = Cyclotomic::common(self, other);
            a.coeffs == b.coeffs
        }
    }
}
impl Eq for Cyclotomic {}

impl fmt::Debug for Cyclotomic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_display_string())
    }
}

impl fmt::Display for Cyclotomic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_display_string())
    }
}

impl Scalar for Cyclotomic {
    fn zero() -> Self {
        Self::from_int(0)
    }
    fn one() -> Self {
        Self::from_int(1)
    }
    fn is_zero(&self) -> bool {
        self.coeffs.iter().all(qz)
    }
    fn add(&self, other: &Self) -> Self {
        let (mut a, b) = Cyclotomic::common(self, other);
        for (x, y) in a.coeffs.iter_mut().zip(b.coeffs.iter()) {
            *x = &*x + y;
        }
        a
    }
    fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }
    fn mul(&self, other: &Self) -> Self {
        let (a, b) = Cyclotomic::common(self, other);
        let prod = poly_mul_q(&a.coeffs, &b.coeffs);
        cyclo_reduce(&prod, a.conductor)
    }
    fn neg(&self) -> Self {
        Cyclotomic {
            conductor: self.conductor,
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
    fn inv(&self) -> Result<Self, FieldError> {
        if Scalar::is_zero(self) {
            return Err(FieldError::DivisionByZero);
        }
        // extended Euclid: a * self + b * Phi_m = gcd = 1 (Phi_m irreducible)
        let phi = cyclotomic_polynomial(self.conductor);
        let mut r0: Vec<Rational> = phi.clone();
        let mut r1: Vec<Rational> = self.coeffs.clone();
        poly_trim(&mut r1);
        let mut s0: Vec<Rational> = vec![];
        let mut s1: Vec<Rational> = vec![rat(1)];
        while !r1.is_empty() {
            let (q, r) = poly_divmod_q(&r0, &r1);
            let s_new = poly_sub_q(&s0, &poly_mul_q(&q, &s1));
            r0 = r1;
            r1 = r;
            s0 = s1;
            s1 = s_new;
        }
        // r0 = gcd (nonzero constant since Phi_m is irreducible and self != 0)
        assert!(r0.len() == 1, "cyclotomic inverse: gcd not constant");
        let scale = r0[0].recip();
        let coeffs: Vec<Rational> = s0.iter().map(|c| c * &scale).collect();
        Ok(cyclo_reduce(&coeffs, self.conductor))
    }
    fn from_rational(q: &Rational) -> Self {
        Cyclotomic::from_rational(q)
    }
    fn from_cyclotomic(z: &Cyclotomic) -> Self {
        z.clone()
    }
    fn as_rational(&self) -> Option<Rational> {
        if self.coeffs[1..].iter().all(qz) {
            Some(self.coeffs[0].clone())
        } else {
            None
        }
    }
}

fn poly_sub_q(a: &[Rational], b: &[Rational]) -> Vec<Rational> {
    let mut out = vec![rat(0); a.len().max(b.len())];
    for (i, c) in a.iter().enumerate() {
        out[i] = out[i].clone() + c;
    }
    for (i, c) in b.iter().enumerate() {
        out[i] = out[i].clone() - c;
    }
    poly_trim(&mut out);
    out
}

fn poly_divmod_q(num: &[Rational], den: &[Rational]) -> (Vec<Rational>, Vec<Rational>) {
    let mut rem: Vec<Rational> = num.to_vec();
    poly_trim(&mut rem);
    let mut d = den.to_vec();
    poly_trim(&mut d);
    assert!(!d.is_empty());
    if rem.len() < d.len() {
        return (vec![], rem);
    }
    let mut quot = vec![rat(0); rem.len() - d.len() + 1];
    let lead = d.last().unwrap().clone();
    while rem.len() >= d.len() && !rem.is_empty() {
        let k = rem.len() - d.len();
        let q = rem.last().unwrap() / &lead;
        for (i, c) in d.iter().enumerate() {
            let v = &rem[k + i] - &(c * &q);
            rem[k + i] = v;
        }
        quot[k] = q;
        poly_trim(&mut rem);
    }
    (quot, rem)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::ratio;

    #[test]
    fn phi_polynomials() {
        // Phi_1 = x-1, Phi_2 = x+1, Phi_4 = x^2+1, Phi_12 = x^4 - x^2 + 1
        assert_eq!(cyclotomic_polynomial(1), vec![rat(-1), rat(1)]);
        assert_eq!(cyclotomic_polynomial(2), vec![rat(1), rat(1)]);
        assert_eq!(cyclotomic_polynomial(4), vec![rat(1), rat(0), rat(1)]);
        assert_eq!(
            cyclotomic_polynomial(12),
            vec![rat(1), rat(0), rat(-1), rat(0), rat(1)]
        );
    }

    #[test]
    fn zeta4_squared_is_minus_one() {
        let i = Cyclotomic::zeta(4, 1);
        assert_eq!(i.mul(&i), Cyclotomic::from_int(-1));
    }

    #[test]
    fn zeta3_sum_of_roots() {
        // zeta_3 + zeta_3^2 = -1 (root sum of Phi_3)
        let z = Cyclotomic::zeta(3, 1);
        assert_eq!(z.add(&z.mul(&z)), Cyclotomic::from_int(-1));
    }

    #[test]
    fn real_quadratic_in_q_zeta12() {
        // (zeta_12 + zeta_12^{-1})^2 = (2 cos(pi/6))^2 = 3
        let z = Cyclotomic::zeta(12, 1);
        let s = z.add(&Cyclotomic::zeta(12, -1));
        assert_eq!(s.mul(&s), Cyclotomic::from_int(3));
    }

    #[test]
    fn embedding_equality_across_conductors() {
        // zeta_3 = zeta_12^4, zeta_4 = zeta_12^3; equality tested at lcm
        let z3 = Cyclotomic::zeta(3, 1);
        let z12 = Cyclotomic::zeta(12, 4);
        assert_eq!(z3, z12);
        let z4 = Cyclotomic::zeta(4, 1);
        assert_eq!(z4, Cyclotomic::zeta(12, 3));
        assert_ne!(z3, z4);
    }

    #[test]
    fn inverse() {
        let z = Cyclotomic::zeta(12, 5);
        let w = z.inv().unwrap();
        assert_eq!(z.mul(&w), Cyclotomic::one());
        let y = Cyclotomic::zeta(6, 1).add(&Cyclotomic::from_rational(&ratio(1, 2)));
        assert_eq!(y.mul(&y.inv().unwrap()), Cyclotomic::one());
        assert_eq!(Cyclotomic::zero().inv(), Err(FieldError::DivisionByZero));
    }

    #[test]
    fn conjugation() {
        let z = Cyclotomic::zeta(5, 1);
        assert_eq!(z.conj(), Cyclotomic::zeta(5, -1));
        // norm is rational
        let n = z.mul(&z.conj());
        assert_eq!(n, Cyclotomic::zeta(5, 0).mul(&n)); // sanity: stable
    }
}
