//! Rational functions in formal parameter symbols (the deformation parameters
//! `c_1, ..., c_k` and optionally `t`) with cyclotomic coefficients.
//!
//! A [`ParamScalar`] is a reduced fraction of two [`MPoly`]s with a monic
//! denominator under graded-lex ordering, which makes zero-testing decidable.

use super::{FieldError, Rational, Scalar};
use crate::field::Cyclotomic;
use std::collections::BTreeMap;
use std::fmt;

type Expo = Vec<u16>;

/// Sparse multivariate polynomial in the parameter symbols over a cyclotomic
/// field. No zero coefficients are stored.
#[derive(Clone, PartialEq)]
pub struct MPoly {
    nvars: usize,
    terms: BTreeMap<Expo, Cyclotomic>,
}

fn grlex_cmp(a: &Expo, b: &Expo) -> std::cmp::Ordering {
    let da: u32 = a.iter().map(|&e| e as u32).sum();
    let db: u32 = b.iter().map(|&e| e as u32).sum();
    da.cmp(&db).then_with(|| a.cmp(b))
}

impl MPoly {
    pub fn zero(nvars: usize) -> Self {
        MPoly { nvars, terms: BTreeMap::new() }
    }

    pub fn constant(nvars: usize, c: Cyclotomic) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(vec![0; nvars], c);
        }
        MPoly { nvars, terms }
    }

    pub fn var(nvars: usize, i: usize) -> Self {
        assert!(i < nvars);
        let mut e = vec![0u16; nvars];
        e[i] = 1;
        let mut terms = BTreeMap::new();
        terms.insert(e, Cyclotomic::one());
        MPoly { nvars, terms }
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.keys().all(|e| e.iter().all(|&x| x == 0))
    }

    pub fn constant_part(&self) -> Cyclotomic {
        self.terms
            .get(&vec![0u16; self.nvars])
            .cloned()
            .unwrap_or_else(Cyclotomic::zero)
    }

    fn insert_add(&mut self, e: Expo, c: Cyclotomic) {
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
        assert_eq!(self.nvars, other.nvars);
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.insert_add(e.clone(), c.clone());
        }
        out
    }

    pub fn neg(&self) -> Self {
        MPoly {
            nvars: self.nvars,
            terms: self.terms.iter().map(|(e, c)| (e.clone(), c.neg())).collect(),
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.nvars, other.nvars);
        let mut out = MPoly::zero(self.nvars);
        for (ea, ca) in &self.terms {
            for (eb, cb) in &other.terms {
                let e: Expo = ea.iter().zip(eb).map(|(x, y)| x + y).collect();
                out.insert_add(e, ca.mul(cb));
            }
        }
        out
    }

    pub fn scale(&self, c: &Cyclotomic) -> Self {
        if c.is_zero() {
            return MPoly::zero(self.nvars);
        }
        MPoly {
            nvars: self.nvars,
            terms: self.terms.iter().map(|(e, k)| (e.clone(), k.mul(c))).collect(),
        }
    }

    /// Leading (exponent, coefficient) under graded lex.
    fn leading(&self) -> Option<(&Expo, &Cyclotomic)> {
        self.terms.iter().max_by(|(a, _), (b, _)| grlex_cmp(a, b))
    }

    pub fn total_degree(&self) -> u32 {
        self.terms
            .keys()
            .map(|e| e.iter().map(|&x| x as u32).sum())
            .max()
            .unwrap_or(0)
    }

    pub fn eval(&self, assignment: &[Cyclotomic]) -> Cyclotomic {
        assert_eq!(assignment.len(), self.nvars);
        let mut acc = Cyclotomic::zero();
        for (e, c) in &self.terms {
            let mut term = c.clone();
            for (i, &pow) in e.iter().enumerate() {
                for _ in 0..pow {
                    term = term.mul(&assignment[i]);
                }
            }
            acc = acc.add(&term);
        }
        acc
    }

    /// Exact division; `None` if not divisible.
    pub fn div_exact(&self, d: &Self) -> Option<Self> {
        assert_eq!(self.nvars, d.nvars);
        assert!(!d.is_zero());
        let mut rem = self.clone();
        let mut quot = MPoly::zero(self.nvars);
        let (dlead_e, dlead_c) = {
            let (e, c) = d.leading().unwrap();
            (e.clone(), c.clone())
        };
        let dlead_inv = dlead_c.inv().ok()?;
        while !rem.is_zero() {
            let (rlead_e, rlead_c) = {
                let (e, c) = rem.leading().unwrap();
                (e.clone(), c.clone())
            };
            let mut q_e = vec![0u16; self.nvars];
            for i in 0..self.nvars {
                if rlead_e[i] < dlead_e[i] {
                    return None;
                }
                q_e[i] = rlead_e[i] - dlead_e[i];
            }
            let q_c = rlead_c.mul(&dlead_inv);
            let mut mono = MPoly::zero(self.nvars);
            mono.terms.insert(q_e.clone(), q_c.clone());
            quot.insert_add(q_e, q_c);
            rem = rem.sub(&mono.mul(d));
        }
        Some(quot)
    }

    /// Degree in variable `v`.
    fn deg_in(&self, v: usize) -> u16 {
        self.terms.keys().map(|e| e[v]).max().unwrap_or(0)
    }

    /// Coefficient of `v^k` as a polynomial in the remaining variables
    /// (the `v` slot of the exponent is zeroed).
    fn coeff_of(&self, v: usize, k: u16) -> MPoly {
        let mut out = MPoly::zero(self.nvars);
        for (e, c) in &self.terms {
            if e[v] == k {
                let mut e2 = e.clone();
                e2[v] = 0;
                out.insert_add(e2, c.clone());
            }
        }
        out
    }

    fn vars_present(&self) -> Vec<usize> {
        let mut present = vec![false; self.nvars];
        for e in self.terms.keys() {
            for (i, &x) in e.iter().enumerate() {
                if x > 0 {
                    present[i] = true;
                }
            }
        }
        present
            .iter()
            .enumerate()
            .filter_map(|(i, &p)| if p { Some(i) } else { None })
            .collect()
    }

    /// Make the graded-lex leading coefficient 1.
    fn monic(&self) -> Self {
        match self.leading() {
            None => self.clone(),
            Some((_, c)) => self.scale(&c.inv().expect("nonzero leading coefficient")),
        }
    }

    /// Gcd, normalized monic. Primitive PRS in the highest occurring variable,
    /// recursing on the variable count for contents.
    pub fn gcd(a: &Self, b: &Self) -> Self {
        assert_eq!(a.nvars, b.nvars);
        if a.is_zero() {
            return b.monic();
        }
        if b.is_zero() {
            return a.monic();
        }
        let mut vars = a.vars_present();
        for v in b.vars_present() {
            if !vars.contains(&v) {
                vars.push(v);
            }
        }
        if vars.is_empty() {
            return MPoly::constant(a.nvars, Cyclotomic::one());
        }
        let v = *vars.iter().max().unwrap();
        // content/primitive-part with respect to v
        let (ca, pa) = a.cont_prim(v);
        let (cb, pb) = b.cont_prim(v);
        let cont = MPoly::gcd(&ca, &cb);
        // pseudo-remainder sequence on primitive parts
        let mut r0 = pa;
        let mut r1 = pb;
        if r0.deg_in(v) < r1.deg_in(v) {
            std::mem::swap(&mut r0, &mut r1);
        }
        while !r1.is_zero() {
            let r = MPoly::pseudo_rem(&r0, &r1, v);
            r0 = r1;
            r1 = if r.is_zero() { r } else { r.cont_prim(v).1 };
        }
        let prim = r0.cont_prim(v).1;
        cont.mul(&prim).monic()
    }

    fn cont_prim(&self, v: usize) -> (MPoly, MPoly) {
        let d = self.deg_in(v);
        let mut cont = MPoly::zero(self.nvars);
        for k in 0..=d {
            let c = self.coeff_of(v, k);
            if !c.is_zero() {
                cont = MPoly::gcd(&cont, &c);
            }
        }
        let prim = self.div_exact(&cont).expect("content divides");
        (cont, prim)
    }

    fn pseudo_rem(a: &Self, b: &Self, v: usize) -> MPoly {
        let da = a.deg_in(v);
        let db = b.deg_in(v);
        assert!(db <= da && !b.is_zero());
        let lb = b.coeff_of(v, db);
        let mut rem = a.clone();
        while !rem.is_zero() && rem.deg_in(v) >= db {
            let dr = rem.deg_in(v);
            let lr = rem.coeff_of(v, dr);
            // rem <- lb * rem - lr * v^{dr-db} * b
            let mut shift = MPoly::zero(a.nvars);
            let mut e = vec![0u16; a.nvars];
            e[v] = dr - db;
            shift.terms.insert(e, Cyclotomic::one());
            rem = rem.mul(&lb).sub(&lr.mul(&shift).mul(b));
        }
        rem
    }

    pub fn to_display_string(&self, names: &[String]) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut entries: Vec<(&Expo, &Cyclotomic)> = self.terms.iter().collect();
        entries.sort_by(|(a, _), (b, _)| grlex_cmp(a, b));
        let mut out = String::new();
        for (e, c) in entries {
            let mono: Vec<String> = e
                .iter()
                .enumerate()
                .filter(|(_, &p)| p > 0)
                .map(|(i, &p)| {
                    let n = names.get(i).cloned().unwrap_or_else(|| format!("c{}", i));
                    if p == 1 {
                        n
                    } else {
                        format!("{}^{}", n, p)
                    }
                })
                .collect();
            let mono = mono.join("*");
            let cs = c.to_display_string();
            let piece = if mono.is_empty() {
                cs.clone()
            } else if cs == "1" {
                mono.clone()
            } else if cs == "-1" {
                format!("-{}", mono)
            } else if cs.contains('+') || (cs.matches('-').count() > 0 && !cs.starts_with('-')) {
                format!("({})*{}", cs, mono)
            } else {
                format!("{}*{}", cs, mono)
            };
            if out.is_empty() {
                out.push_str(&piece);
            } else if let Some(rest) = piece.strip_prefix('-') {
                out.push_str(&format!("-{}", rest));
            } else {
                out.push_str(&format!("+{}", piece));
            }
        }
        out
    }
}

impl fmt::Debug for MPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self)
    }
}

impl fmt::Display for MPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let names: Vec<String> = (0..self.nvars).map(|i| format!("c{}", i)).collect();
        write!(f, "{}", self.to_display_string(&names))
    }
}

/// A reduced fraction `num/den` of parameter polynomials: numerator and
/// denominator coprime, denominator monic under graded lex.
#[derive(Clone)]
pub struct ParamScalar {
    num: MPoly,
    den: MPoly,
}

impl ParamScalar {
    pub fn from_mpoly(num: MPoly) -> Self {
        let nv = num.nvars();
        ParamScalar { num, den: MPoly::constant(nv, Cyclotomic::one()) }
    }

    pub fn fraction(num: MPoly, den: MPoly) -> Result<Self, FieldError> {
        if den.is_zero() {
            return Err(FieldError::DivisionByZero);
        }
        Ok(Self::reduced(num, den))
    }

    fn reduced(num: MPoly, den: MPoly) -> Self {
        if num.is_zero() {
            let nv = num.nvars();
            return ParamScalar { num, den: MPoly::constant(nv, Cyclotomic::one()) };
        }
        let g = MPoly::gcd(&num, &den);
        let mut num = num.div_exact(&g).expect("gcd divides numerator");
        let mut den = den.div_exact(&g).expect("gcd divides denominator");
        // monic denominator
        let lead = den.leading().expect("nonzero denominator").1.clone();
        let lead_inv = lead.inv().expect("leading coefficient invertible");
        num = num.scale(&lead_inv);
        den = den.scale(&lead_inv);
        ParamScalar { num, den }
    }

    pub fn symbol(nvars: usize, i: usize) -> Self {
        Self::from_mpoly(MPoly::var(nvars, i))
    }

    pub fn nvars(&self) -> usize {
        self.num.nvars()
    }

    pub fn num(&self) -> &MPoly {
        &self.num
    }

    pub fn den(&self) -> &MPoly {
        &self.den
    }

    /// Substitution homomorphism `symbol_i -> assignment[i]`.
    pub fn eval(&self, assignment: &[Cyclotomic]) -> Result<Cyclotomic, FieldError> {
        let d = self.den.eval(assignment);
        if d.is_zero() {
            return Err(FieldError::DenominatorVanishes);
        }
        Ok(self.num.eval(assignment).mul(&d.inv().unwrap()))
    }

    pub fn to_display_string(&self, names: &[String]) -> String {
        let n = self.num.to_display_string(names);
        if self.den.is_constant() && self.den.constant_part() == Cyclotomic::one() {
            n
        } else {
            format!("({})/({})", n, self.den.to_display_string(names))
        }
    }
}

impl PartialEq for ParamScalar {
    fn eq(&self, other: &Self) -> bool {
        // canonical form makes this structural, after padding to a common
        // variable count
        let (a, b) = self.promote(other);
        a.num == b.num && a.den == b.den
    }
}

impl fmt::Debug for ParamScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self)
    }
}

impl fmt::Display for ParamScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let names: Vec<String> = (0..self.nvars()).map(|i| format!("c{}", i)).collect();
        write!(f, "{}", self.to_display_string(&names))
    }
}

impl Scalar for ParamScalar {
    fn zero() -> Self {
        Self::from_mpoly(MPoly::zero(0))
    }
    fn one() -> Self {
        Self::from_mpoly(MPoly::constant(0, Cyclotomic::one()))
    }
    fn is_zero(&self) -> bool {
        self.num.is_zero()
    }
    fn add(&self, other: &Self) -> Self {
        let (a, b) = self.promote(other);
        Self::reduced(
            a.num.mul(&b.den).add(&b.num.mul(&a.den)),
            a.den.mul(&b.den),
        )
    }
    fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }
    fn mul(&self, other: &Self) -> Self {
        let (a, b) = self.promote(other);
        Self::reduced(a.num.mul(&b.num), a.den.mul(&b.den))
    }
    fn neg(&self) -> Self {
        ParamScalar { num: self.num.neg(), den: self.den.clone() }
    }
    fn inv(&self) -> Result<Self, FieldError> {
        if self.num.is_zero() {
            return Err(FieldError::DivisionByZero);
        }
        Ok(Self::reduced(self.den.clone(), self.num.clone()))
    }
    fn from_rational(q: &Rational) -> Self {
        Self::from_mpoly(MPoly::constant(0, Cyclotomic::from_rational(q)))
    }
    fn from_cyclotomic(z: &Cyclotomic) -> Self {
        Self::from_mpoly(MPoly::constant(0, z.clone()))
    }
    fn as_rational(&self) -> Option<Rational> {
        if !self.den.is_constant() || !self.num.is_constant() {
            return None;
        }
        let d = self.den.constant_part();
        let n = self.num.constant_part();
        let v = n.mul(&d.inv().ok()?);
        v.as_rational()
    }
}

impl ParamScalar {
    /// Bring two scalars to a common variable count (0-var constants promote).
    fn promote(&self, other: &Self) -> (Self, Self) {
        let nv = self.nvars().max(other.nvars());
        (self.with_nvars(nv), other.with_nvars(nv))
    }

    pub fn with_nvars(&self, nv: usize) -> Self {
        if self.nvars() == nv {
            return self.clone();
        }
        assert!(self.nvars() <= nv, "cannot shrink variable count");
        let pad = |p: &MPoly| {
            let mut out = MPoly::zero(nv);
            for (e, c) in &p.terms {
                let mut e2 = e.clone();
                e2.resize(nv, 0);
                out.insert_add(e2, c.clone());
            }
            out
        };
        ParamScalar { num: pad(&self.num), den: pad(&self.den) }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::{rat, ratio};

    fn c() -> ParamScalar {
        ParamScalar::symbol(1, 0)
    }

    #[test]
    fn geometric_quotient_evaluates() {
        // (1 - q^2)/(1 - q) at q = 2 is 3
        let q = c();
        let one = ParamScalar::one();
        let num = one.sub(&q.mul(&q));
        let den = one.sub(&q);
        let f = num.div(&den).unwrap();
        // reduced form is 1 + q
        assert_eq!(f, one.add(&q));
        assert_eq!(f.eval(&[Cyclotomic::from_int(2)]).unwrap(), Cyclotomic::from_int(3));
    }

    #[test]
    fn denominator_vanishes() {
        let f = c().div(&c().sub(&ParamScalar::one())).unwrap();
        assert_eq!(
            f.eval(&[Cyclotomic::from_int(1)]),
            Err(FieldError::DenominatorVanishes)
        );
    }

    #[test]
    fn linear_zero() {
        // 2c + 3 at c = -3/2 is 0
        let f = ParamScalar::from_int(2).mul(&c()).add(&ParamScalar::from_int(3));
        assert_eq!(
            f.eval(&[Cyclotomic::from_rational(&ratio(-3, 2))]).unwrap(),
            Cyclotomic::zero()
        );
    }

    #[test]
    fn eval_respects_ring_ops() {
        let a = c().mul(&c()).add(&ParamScalar::from_int(5));
        let b = c().sub(&ParamScalar::from_int(2));
        let at = Cyclotomic::from_rational(&ratio(7, 3));
        let lhs = a.mul(&b).eval(&[at.clone()]).unwrap();
        let rhs = a.eval(&[at.clone()]).unwrap().mul(&b.eval(&[at]).unwrap());
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn gcd_reduction_two_vars() {
        // (c0^2 - c1^2)/(c0 - c1) reduces to c0 + c1
        let c0 = ParamScalar::symbol(2, 0);
        let c1 = ParamScalar::symbol(2, 1);
        let f = c0.mul(&c0).sub(&c1.mul(&c1)).div(&c0.sub(&c1)).unwrap();
        assert_eq!(f, c0.add(&c1));
    }

    #[test]
    fn rational_detection() {
        assert_eq!(ParamScalar::from_rational(&rat(4)).as_rational(), Some(rat(4)));
        assert_eq!(c().as_rational(), None);
    }
}
