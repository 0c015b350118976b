//! Graded characters: Laurent polynomials in the grading variable `q` with
//! integer coefficients, maps from irrep labels to such polynomials (virtual
//! graded G-modules), and square matrices of them (multiplicity and Dirac
//! index polynomial matrices).

use crate::field::Cyclotomic;
use crate::group::{GroupError, ReflectionGroup};
use std::collections::BTreeMap;
use std::fmt;

/// Laurent polynomial in `q` with i64 coefficients, trimmed canonical form.
#[derive(Clone, PartialEq, Eq)]
pub struct LaurentPoly {
    coeffs: BTreeMap<i64, i64>,
}

impl LaurentPoly {
    pub fn zero() -> Self {
        LaurentPoly { coeffs: BTreeMap::new() }
    }

    pub fn one() -> Self {
        Self::monomial(0, 1)
    }

    pub fn monomial(deg: i64, coeff: i64) -> Self {
        let mut coeffs = BTreeMap::new();
        if coeff != 0 {
            coeffs.insert(deg, coeff);
        }
        LaurentPoly { coeffs }
    }

    pub fn from_coeffs(pairs: &[(i64, i64)]) -> Self {
        let mut p = Self::zero();
        for &(d, c) in pairs {
            p.add_term(d, c);
        }
        p
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn coeff(&self, deg: i64) -> i64 {
        *self.coeffs.get(&deg).unwrap_or(&0)
    }

    pub fn add_term(&mut self, deg: i64, coeff: i64) {
        if coeff == 0 {
            return;
        }
        let e = self.coeffs.entry(deg).or_insert(0);
        *e += coeff;
        if *e == 0 {
            self.coeffs.remove(&deg);
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (&d, &c) in &other.coeffs {
            out.add_term(d, c);
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (&d, &c) in &other.coeffs {
            out.add_term(d, -c);
        }
        out
    }

    pub fn neg(&self) -> Self {
        LaurentPoly {
            coeffs: self.coeffs.iter().map(|(&d, &c)| (d, -c)).collect(),
        }
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut out = Self::zero();
        for (&d1, &c1) in &self.coeffs {
            for (&d2, &c2) in &other.coeffs {
                out.add_term(d1 + d2, c1 * c2);
            }
        }
        out
    }

    pub fn scale(&self, k: i64) -> Self {
        if k == 0 {
            return Self::zero();
        }
        LaurentPoly {
            coeffs: self.coeffs.iter().map(|(&d, &c)| (d, c * k)).collect(),
        }
    }

    /// Translate every degree by `by`.
    pub fn shift(&self, by: i64) -> Self {
        LaurentPoly {
            coeffs: self.coeffs.iter().map(|(&d, &c)| (d + by, c)).collect(),
        }
    }

    pub fn min_degree(&self) -> Option<i64> {
        self.coeffs.keys().next().copied()
    }

    pub fn max_degree(&self) -> Option<i64> {
        self.coeffs.keys().next_back().copied()
    }

    pub fn terms(&self) -> impl Iterator<Item = (i64, i64)> + '_ {
        self.coeffs.iter().map(|(&d, &c)| (d, c))
    }

    pub fn eval_at_one(&self) -> i64 {
        self.coeffs.values().sum()
    }

    pub fn has_nonnegative_coeffs(&self) -> bool {
        self.coeffs.values().all(|&c| c >= 0)
    }

    /// Positive and negative parts: `self = pos - neg`, disjoint support.
    pub fn split_signs(&self) -> (Self, Self) {
        let mut pos = Self::zero();
        let mut neg = Self::zero();
        for (&d, &c) in &self.coeffs {
            if c > 0 {
                pos.add_term(d, c);
            } else {
                neg.add_term(d, -c);
            }
        }
        (pos, neg)
    }

    /// Canonical string: ascending powers, explicit signs, `q^-k` for Laurent
    /// parts. Examples: `0`, `1+q^2`, `-q-q^3`, `q^-2+1`.
    pub fn to_display_string(&self) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (&d, &c) in &self.coeffs {
            let mono = match d {
                0 => String::new(),
                1 => "q".to_string(),
                _ => format!("q^{}", d),
            };
            let abs = c.abs();
            let body = if mono.is_empty() {
                format!("{}", abs)
            } else if abs == 1 {
                mono
            } else {
                format!("{}*{}", abs, mono)
            };
            if out.is_empty() {
                if c < 0 {
                    out.push('-');
                }
            } else {
                out.push(if c < 0 { '-' } else { '+' });
            }
            out.push_str(&body);
        }
        out
    }
}

impl fmt::Debug for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_display_string())
    }
}

impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_display_string())
    }
}

/// A virtual graded G-module: irrep label -> Laurent polynomial. Genuine
/// modules have nonnegative coefficients.
#[derive(Clone, PartialEq)]
pub struct GradedChar {
    entries: BTreeMap<String, LaurentPoly>,
}

impl GradedChar {
    pub fn zero() -> Self {
        GradedChar { entries: BTreeMap::new() }
    }

    pub fn single(label: &str, poly: LaurentPoly) -> Self {
        let mut ch = Self::zero();
        ch.add_poly(label, &poly);
        ch
    }

    pub fn add_term(&mut self, label: &str, deg: i64, mult: i64) {
        if mult == 0 {
            return;
        }
        self.entries
            .entry(label.to_string())
            .or_insert_with(LaurentPoly::zero)
            .add_term(deg, mult);
        if self.entries[label].is_zero() {
            self.entries.remove(label);
        }
    }

    pub fn add_poly(&mut self, label: &str, p: &LaurentPoly) {
        for (d, c) in p.terms() {
            self.add_term(label, d, c);
        }
    }

    pub fn poly(&self, label: &str) -> LaurentPoly {
        self.entries.get(label).cloned().unwrap_or_else(LaurentPoly::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (l, p) in &other.entries {
            out.add_poly(l, p);
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (l, p) in &other.entries {
            out.add_poly(l, &p.neg());
        }
        out
    }

    pub fn shift(&self, by: i64) -> Self {
        GradedChar {
            entries: self
                .entries
                .iter()
                .map(|(l, p)| (l.clone(), p.shift(by)))
                .collect(),
        }
    }

    pub fn labels(&self) -> impl Iterator<Item = &String> {
        self.entries.keys()
    }

    pub fn entries(&self) -> impl Iterator<Item = (&String, &LaurentPoly)> {
        self.entries.iter()
    }

    /// Multiplicity vector at one degree, ordered by the group's irrep list.
    pub fn mults_at(&self, group: &ReflectionGroup, deg: i64) -> Vec<i64> {
        group
            .irreps
            .iter()
            .map(|ir| self.poly(&ir.label).coeff(deg))
            .collect()
    }

    pub fn min_degree(&self) -> Option<i64> {
        self.entries.values().filter_map(|p| p.min_degree()).min()
    }

    pub fn max_degree(&self) -> Option<i64> {
        self.entries.values().filter_map(|p| p.max_degree()).max()
    }

    /// Total dimension per degree.
    pub fn dim_at(&self, group: &ReflectionGroup, deg: i64) -> i64 {
        self.entries
            .iter()
            .map(|(l, p)| {
                let dim = group.irrep(l).map(|ir| ir.dim as i64).unwrap_or(0);
                p.coeff(deg) * dim
            })
            .sum()
    }

    pub fn total_dim(&self, group: &ReflectionGroup) -> i64 {
        self.entries
            .iter()
            .map(|(l, p)| {
                let dim = group.irrep(l).map(|ir| ir.dim as i64).unwrap_or(0);
                p.eval_at_one() * dim
            })
            .sum()
    }

    /// Graded tensor product: degrees add, representations multiply via the
    /// group's exact tensor decomposition.
    pub fn tensor(&self, other: &Self, group: &ReflectionGroup) -> Result<Self, GroupError> {
        let mut out = Self::zero();
        for (l1, p1) in &self.entries {
            let i1 = group.irrep_index(l1)?;
            for (l2, p2) in &other.entries {
                let i2 = group.irrep_index(l2)?;
                let dec = tensor_decompose(group, i1, i2)?;
                let pp = p1.mul(p2);
                for (k, mult) in dec.iter().enumerate() {
                    if *mult != 0 {
                        out.add_poly(&group.irreps[k].label, &pp.scale(*mult));
                    }
                }
            }
        }
        Ok(out)
    }

    /// The character value series `ch(X, g, q)` at one group element.
    pub fn value_series(&self, group: &ReflectionGroup, g: usize) -> BTreeMap<i64, Cyclotomic> {
        use crate::field::Scalar;
        let mut out: BTreeMap<i64, Cyclotomic> = BTreeMap::new();
        for (l, p) in &self.entries {
            let ir = group.irrep(l).expect("label belongs to the group");
            let chi = ir.char_at(g);
            for (d, c) in p.terms() {
                let cur = out.entry(d).or_insert_with(Cyclotomic::zero);
                *cur = cur.add(&chi.mul(&Cyclotomic::from_int(c)));
            }
        }
        out.retain(|_, v| !v.is_zero());
        out
    }

    /// Graded Hom-pairing
    /// `sum_gamma q^gamma sum_n dim Hom_G(X_n, Y_{n+gamma})`, with `gamma`
    /// restricted to the given window. Callers guarantee both characters are
    /// complete on the contributing degrees.
    pub fn hom_pairing(
        &self,
        other: &Self,
        group: &ReflectionGroup,
        window: (i64, i64),
    ) -> LaurentPoly {
        let mut out = LaurentPoly::zero();
        let (xmin, xmax) = match (self.min_degree(), self.max_degree()) {
            (Some(a), Some(b)) => (a, b),
            _ => return out,
        };
        for gamma in window.0..=window.1 {
            let mut total = 0i64;
            for n in xmin..=xmax {
                let a = self.mults_at(group, n);
                let b = other.mults_at(group, n + gamma);
                total += a.iter().zip(&b).map(|(x, y)| x * y).sum::<i64>();
            }
            out.add_term(gamma, total);
        }
        out
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::Value::Array(
            self.entries
                .iter()
                .map(|(l, p)| serde_json::json!({"irrep": l, "poly": p.to_display_string()}))
                .collect(),
        )
    }
}

impl fmt::Debug for GradedChar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .entries
            .iter()
            .map(|(l, p)| format!("({}) {}", p.to_display_string(), l))
            .collect();
        write!(f, "{}", if parts.is_empty() { "0".into() } else { parts.join(" + ") })
    }
}

/// Multiplicities of each irrep in `irr_a (x) irr_b`.
pub fn tensor_decompose(
    group: &ReflectionGroup,
    a: usize,
    b: usize,
) -> Result<Vec<i64>, GroupError> {
    use crate::field::Scalar;
    let chi: Vec<Cyclotomic> = (0..group.order())
        .map(|g| group.irreps[a].char_at(g).mul(&group.irreps[b].char_at(g)))
        .collect();
    group.decompose_character(&chi)
}

/// Square matrix of Laurent polynomials indexed by an ordered list of irrep
/// labels (a block of `Irr(G)`).
#[derive(Clone, PartialEq)]
pub struct PolyMatrix {
    pub labels: Vec<String>,
    pub entries: Vec<Vec<LaurentPoly>>,
}

impl PolyMatrix {
    pub fn new(labels: Vec<String>) -> Self {
        let n = labels.len();
        PolyMatrix { labels, entries: vec![vec![LaurentPoly::zero(); n]; n] }
    }

    pub fn identity(labels: Vec<String>) -> Self {
        let mut m = Self::new(labels);
        for i in 0..m.labels.len() {
            m.entries[i][i] = LaurentPoly::one();
        }
        m
    }

    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.labels, other.labels);
        let n = self.labels.len();
        let mut out = Self::new(self.labels.clone());
        for i in 0..n {
            for j in 0..n {
                let mut acc = LaurentPoly::zero();
                for k in 0..n {
                    acc = acc.add(&self.entries[i][k].mul(&other.entries[k][j]));
                }
                out.entries[i][j] = acc;
            }
        }
        out
    }

    pub fn scale(&self, p: &LaurentPoly) -> Self {
        let mut out = self.clone();
        for row in out.entries.iter_mut() {
            for e in row.iter_mut() {
                *e = e.mul(p);
            }
        }
        out
    }

    /// Aligned text table, rows and columns in block order.
    pub fn to_table_string(&self) -> String {
        let n = self.labels.len();
        let cells: Vec<Vec<String>> = (0..n)
            .map(|i| (0..n).map(|j| self.entries[i][j].to_display_string()).collect())
            .collect();
        let mut widths = vec![0usize; n + 1];
        widths[0] = self.labels.iter().map(|l| l.len()).max().unwrap_or(0);
        for j in 0..n {
            widths[j + 1] = cells
                .iter()
                .map(|row| row[j].len())
                .chain(std::iter::once(self.labels[j].len()))
                .max()
                .unwrap();
        }
        let mut out = String::new();
        out.push_str(&" ".repeat(widths[0] + 2));
        for j in 0..n {
            out.push_str(&format!("{:>w$}  ", self.labels[j], w = widths[j + 1]));
        }
        out.push('\n');
        for i in 0..n {
            out.push_str(&format!("{:>w$}  ", self.labels[i], w = widths[0]));
            for j in 0..n {
                out.push_str(&format!("{:>w$}  ", cells[i][j], w = widths[j + 1]));
            }
            out.push('\n');
        }
        out
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({
            "labels": self.labels,
            "rows": self.entries.iter().map(|row| {
                row.iter().map(|p| p.to_display_string()).collect::<Vec<_>>()
            }).collect::<Vec<_>>(),
        })
    }
}

impl fmt::Debug for PolyMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_table_string())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::build_dihedral;

    #[test]
    fn laurent_display() {
        let p = LaurentPoly::from_coeffs(&[(0, 1), (4, 1)]);
        assert_eq!(p.to_display_string(), "1+q^4");
        let m = LaurentPoly::from_coeffs(&[(1, -1), (3, -1)]);
        assert_eq!(m.to_display_string(), "-q-q^3");
        let l = LaurentPoly::from_coeffs(&[(-2, 1), (0, 3)]);
        assert_eq!(l.to_display_string(), "q^-2+3");
        assert_eq!(LaurentPoly::zero().to_display_string(), "0");
    }

    #[test]
    fn laurent_mul() {
        // (1-q^2)(1-q^4) = 1 - q^2 - q^4 + q^6
        let a = LaurentPoly::from_coeffs(&[(0, 1), (2, -1)]);
        let b = LaurentPoly::from_coeffs(&[(0, 1), (4, -1)]);
        assert_eq!(
            a.mul(&b),
            LaurentPoly::from_coeffs(&[(0, 1), (2, -1), (4, -1), (6, 1)])
        );
    }

    #[test]
    fn b2_tensor_rules() {
        let g = build_dihedral(4);
        let i11 = g.irrep_index("1x1").unwrap();
        // 1x1 (x) 1x1 = sum of all four linear characters
        let dec = tensor_decompose(&g, i11, i11).unwrap();
        let labels: Vec<&str> = g.irreps.iter().map(|ir| ir.label.as_str()).collect();
        for (k, l) in labels.iter().enumerate() {
            let expect = if *l == "1x1" { 0 } else { 1 };
            assert_eq!(dec[k], expect, "{}", l);
        }
        // 11x0 (x) 0x11 = 0x2
        let a = g.irrep_index("11x0").unwrap();
        let b = g.irrep_index("0x11").unwrap();
        let dec = tensor_decompose(&g, a, b).unwrap();
        for (k, l) in labels.iter().enumerate() {
            let expect = if *l == "0x2" { 1 } else { 0 };
            assert_eq!(dec[k], expect, "{}", l);
        }
    }

    #[test]
    fn poincare_polynomial() {
        let g = build_dihedral(4);
        assert_eq!(g.poincare_polynomial().to_display_string(), "1-q^2-q^4+q^6");
    }
}
