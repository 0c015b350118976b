//! Reflection-group data: elements as exact matrices on `h`, reflections with
//! eigenvector data, conjugacy classes, irreducible representations with
//! explicit matrices, fundamental degrees and coinvariant bases, and the
//! parameter functions `(t, c)`.
//!
//! Built-in groups: the cyclic groups `Z_l` acting on a 1-dimensional `h`
//! (complex reflections for `l >= 3`) and the dihedral groups `I2(m)`
//! (`W(B2) = I2(4)`, `W(G2) = I2(6)`). Dihedral matrices are written in the
//! rotation eigenbasis so all entries lie in `Q(zeta_m)`.

use crate::field::{ratio, Cyclotomic, ParamScalar, Scalar};
use crate::linalg::Mat;
use crate::poly::{Expo, ReflOps};

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum GroupError {
    #[error("the class sum does not act by a scalar (input not irreducible?)")]
    NotScalar,
    #[error("unknown irrep label: {0}")]
    UnknownIrrep(String),
}

#[derive(Clone)]
pub struct Reflection {
    /// Index into `ReflectionGroup::elements`.
    pub elem: usize,
    /// Which conjugacy class of reflections (= parameter slot).
    pub class_idx: usize,
    /// `alpha_s` in the dual basis of `h*` (coefficients of the x-variables).
    pub alpha: Vec<Cyclotomic>,
    /// `alpha_s^vee` in the basis of `h` (coefficients of the y-variables).
    pub alpha_vee: Vec<Cyclotomic>,
    /// Nontrivial eigenvalue of `s` on `h*`.
    pub lambda: Cyclotomic,
}

impl Reflection {
    pub fn d(&self) -> Cyclotomic {
        // d_s = (1 - lambda_s)/2
        Cyclotomic::one()
            .sub(&self.lambda)
            .mul(&Cyclotomic::from_rational(&ratio(1, 2)))
    }

    pub fn d_vee(&self) -> Cyclotomic {
        // d_s^vee = (1 - lambda_s^{-1})/2
        Cyclotomic::one()
            .sub(&self.lambda.inv().expect("lambda nonzero"))
            .mul(&Cyclotomic::from_rational(&ratio(1, 2)))
    }
}

#[derive(Clone)]
pub struct IrrepData {
    pub label: String,
    pub aliases: Vec<String>,
    pub dim: usize,
    /// One matrix per group element, same indexing as `elements`.
    pub mats: Vec<Mat<Cyclotomic>>,
}

impl IrrepData {
    pub fn char_at(&self, g: usize) -> Cyclotomic {
        self.mats[g].trace()
    }
}

/// A finite-dimensional representation given by explicit matrices (not
/// necessarily irreducible); used for tensor legs like `tau (x) Lambda h`.
#[derive(Clone)]
pub struct GRep {
    pub dim: usize,
    pub mats: Vec<Mat<Cyclotomic>>,
}

impl GRep {
    pub fn from_irrep(ir: &IrrepData) -> Self {
        GRep { dim: ir.dim, mats: ir.mats.clone() }
    }

    pub fn char_at(&self, g: usize) -> Cyclotomic {
        self.mats[g].trace()
    }

    /// Tensor product; index convention `i = a * b.dim + c` for `e_a (x) f_c`.
    pub fn tensor(a: &GRep, b: &GRep) -> GRep {
        let dim = a.dim * b.dim;
        let mats = a
            .mats
            .iter()
            .zip(&b.mats)
            .map(|(ma, mb)| {
                let mut m = Mat::zeros(dim, dim);
                for i1 in 0..a.dim {
                    for j1 in 0..a.dim {
                        let x = ma.get(i1, j1);
                        if x.is_zero() {
                            continue;
                        }
                        for i2 in 0..b.dim {
                            for j2 in 0..b.dim {
                                let y = mb.get(i2, j2);
                                if y.is_zero() {
                                    continue;
                                }
                                m.set(i1 * b.dim + i2, j1 * b.dim + j2, x.mul(y));
                            }
                        }
                    }
                }
                m
            })
            .collect();
        GRep { dim, mats }
    }
}

/// The parameter function: `t` and one value of `c` per conjugacy class of
/// reflections. Values live in any scalar domain (symbolic or specialized).
#[derive(Clone)]
pub struct Params<S> {
    pub t: S,
    pub c: Vec<S>,
}

impl<S: Scalar> Params<S> {
    pub fn zero_c(group: &ReflectionGroup, t: S) -> Self {
        Params { t, c: vec![S::zero(); group.num_refl_classes()] }
    }

    pub fn constant(group: &ReflectionGroup, t: S, c: S) -> Self {
        Params { t, c: vec![c; group.num_refl_classes()] }
    }

    pub fn c_of(&self, r: &Reflection) -> &S {
        &self.c[r.class_idx]
    }

    /// The check-dual parameter: `c_check(s) = c(s^{-1})`.
    pub fn check_dual(&self, group: &ReflectionGroup) -> Self {
        let mut c = self.c.clone();
        for r in &group.reflections {
            let inv_elem = group.inv[r.elem];
            let r_inv = group
                .reflections
                .iter()
                .find(|q| q.elem == inv_elem)
                .expect("inverse of a reflection is a reflection");
            c[r_inv.class_idx] = self.c[r.class_idx].clone();
        }
        Params { t: self.t.clone(), c }
    }
}

impl Params<ParamScalar> {
    /// One shared transcendental symbol `c` for every class ("constant c").
    pub fn generic_constant(group: &ReflectionGroup, t: i64) -> Self {
        let c = ParamScalar::symbol(1, 0);
        Params {
            t: ParamScalar::from_int(t).with_nvars(1),
            c: vec![c; group.num_refl_classes()],
        }
    }

    /// Independent symbols `c0, c1, ...` per reflection class.
    pub fn generic_per_class(group: &ReflectionGroup, t: i64) -> Self {
        let k = group.num_refl_classes().max(1);
        Params {
            t: ParamScalar::from_int(t).with_nvars(k),
            c: (0..group.num_refl_classes())
                .map(|i| ParamScalar::symbol(k, i))
                .collect(),
        }
    }
}

pub struct ReflectionGroup {
    pub name: String,
    pub rank: usize,
    /// Matrices on `h`; `elements[0]` is the identity. Column convention:
    /// `g(y_j) = sum_i M[i][j] y_i`.
    pub elements: Vec<Mat<Cyclotomic>>,
    pub mult: Vec<Vec<usize>>,
    pub inv: Vec<usize>,
    pub conj_classes: Vec<Vec<usize>>,
    pub reflections: Vec<Reflection>,
    pub irreps: Vec<IrrepData>,
    pub fundamental_degrees: Vec<usize>,
    pub conductor: u32,
    kind: GroupKind,
}

#[derive(Clone, Copy, PartialEq)]
enum GroupKind {
    Trivial,
    Cyclic { l: u32 },
    Dihedral { m: u32 },
}

impl ReflectionGroup {
    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn num_refl_classes(&self) -> usize {
        self.reflections
            .iter()
            .map(|r| r.class_idx + 1)
            .max()
            .unwrap_or(0)
    }

    pub fn irrep(&self, label: &str) -> Result<&IrrepData, GroupError> {
        self.irreps
            .iter()
            .find(|ir| ir.label == label || ir.aliases.iter().any(|a| a == label))
            .ok_or_else(|| GroupError::UnknownIrrep(label.to_string()))
    }

    pub fn irrep_index(&self, label: &str) -> Result<usize, GroupError> {
        self.irreps
            .iter()
            .position(|ir| ir.label == label || ir.aliases.iter().any(|a| a == label))
            .ok_or_else(|| GroupError::UnknownIrrep(label.to_string()))
    }

    /// Images of the x-variables under `g` acting on `C[h]`:
    /// row `i` is the coefficient vector of `g(x_i)`.
    pub fn act_on_ch<S: Scalar>(&self, g: usize) -> Vec<Vec<S>> {
        let minv = &self.elements[self.inv[g]];
        (0..self.rank)
            .map(|i| {
                (0..self.rank)
                    .map(|j| S::from_cyclotomic(minv.get(i, j)))
                    .collect()
            })
            .collect()
    }

    /// Images of the y-variables under `g` acting on `C[h*]`:
    /// row `i` is the coefficient vector of `g(y_i)`.
    pub fn act_on_chstar<S: Scalar>(&self, g: usize) -> Vec<Vec<S>> {
        let m = &self.elements[g];
        (0..self.rank)
            .map(|i| {
                (0..self.rank)
                    .map(|j| S::from_cyclotomic(m.get(j, i)))
                    .collect()
            })
            .collect()
    }

    /// Matrix of `g` on `h*` in the dual basis (columns are images).
    pub fn mat_on_hstar(&self, g: usize) -> Mat<Cyclotomic> {
        self.elements[self.inv[g]].transpose()
    }

    /// Reflection operator data for the ring `C[h]`.
    pub fn refl_ops_h<S: Scalar>(&self, ridx: usize) -> ReflOps<S> {
        let r = &self.reflections[ridx];
        ReflOps {
            act: self.act_on_ch(r.elem),
            alpha: r.alpha.iter().map(S::from_cyclotomic).collect(),
            dual_deriv: r.alpha_vee.iter().map(S::from_cyclotomic).collect(),
            d: S::from_cyclotomic(&r.d()),
        }
    }

    /// Reflection operator data for the ring `C[h*]`.
    pub fn refl_ops_hstar<S: Scalar>(&self, ridx: usize) -> ReflOps<S> {
        let r = &self.reflections[ridx];
        ReflOps {
            act: self.act_on_chstar(r.elem),
            alpha: r.alpha_vee.iter().map(S::from_cyclotomic).collect(),
            dual_deriv: r.alpha.iter().map(S::from_cyclotomic).collect(),
            d: S::from_cyclotomic(&r.d_vee()),
        }
    }

    /// Multiplicity of each irrep in a representation given by its character
    /// values per element; `<chi, psi> = |G|^{-1} sum_g chi(g) psi(g^{-1})`.
    pub fn decompose_character(&self, chi: &[Cyclotomic]) -> Result<Vec<i64>, GroupError> {
        let inv_order = Cyclotomic::from_int(self.order() as i64).inv().unwrap();
        let mut mults = Vec::with_capacity(self.irreps.len());
        for ir in &self.irreps {
            let mut acc = Cyclotomic::zero();
            for g in 0..self.order() {
                acc = acc.add(&chi[g].mul(&ir.char_at(self.inv[g])));
            }
            acc = acc.mul(&inv_order);
            let q = acc.as_rational().ok_or(GroupError::NotScalar)?;
            if !q.is_integer() {
                return Err(GroupError::NotScalar);
            }
            let n: i64 = i64::try_from(q.to_integer()).map_err(|_| GroupError::NotScalar)?;
            mults.push(n);
        }
        Ok(mults)
    }

    /// `N_c(sigma)`: the scalar by which `sum_s (c(s)/d_s) s` acts on an
    /// irreducible representation (checked to be scalar).
    pub fn n_c<S: Scalar>(&self, sigma: &IrrepData, params: &Params<S>) -> Result<S, GroupError> {
        let mut acc: Mat<S> = Mat::zeros(sigma.dim, sigma.dim);
        for r in &self.reflections {
            let coef = params
                .c_of(r)
                .mul(&S::from_cyclotomic(&r.d()).inv().expect("d_s nonzero"));
            let m = sigma.mats[r.elem].map_scalars(|z| S::from_cyclotomic(z).mul(&coef));
            acc = acc.add(&m);
        }
        acc.is_scalar_multiple_of_identity().ok_or(GroupError::NotScalar)
    }

    /// `h_c(sigma) = t r / 2 - N_c(sigma)`.
    pub fn h_c<S: Scalar>(&self, sigma: &IrrepData, params: &Params<S>) -> Result<S, GroupError> {
        let half_tr = params.t.mul(&S::from_rational(&ratio(self.rank as i64, 2)));
        Ok(half_tr.sub(&self.n_c(sigma, params)?))
    }

    /// The scalars `(h_{c,eps}, h*_{c,eps})` by which
    /// `zeta_{c,eps} = sum_s (c(s)/d_s) eps(s) (1 - s)` acts on `h` and `h*`;
    /// the trace formulas are cross-checked against the acting matrices.
    pub fn zeta_scalars<S: Scalar>(
        &self,
        eps: &IrrepData,
        params: &Params<S>,
    ) -> Result<(S, S), GroupError> {
        assert_eq!(eps.dim, 1, "zeta_scalars needs a linear character");
        let two_over_r = S::from_rational(&ratio(2, self.rank as i64));
        let mut h_scalar = S::zero();
        let mut hstar_scalar = S::zero();
        // h*_{c,eps} = (2/r) sum_s c(s) eps(s)
        // h_{c,eps}  = (2/r) sum_s -c(s) (eps (x) det_h)(s)
        for r in &self.reflections {
            let eps_s = S::from_cyclotomic(eps.mats[r.elem].get(0, 0));
            let det_h = S::from_cyclotomic(&det2(&self.elements[r.elem]));
            let c = params.c_of(r);
            hstar_scalar = hstar_scalar.add(&c.mul(&eps_s));
            h_scalar = h_scalar.sub(&c.mul(&eps_s).mul(&det_h));
        }
        h_scalar = h_scalar.mul(&two_over_r);
        hstar_scalar = hstar_scalar.mul(&two_over_r);
        let mut act_h: Mat<S> = Mat::zeros(self.rank, self.rank);
        let mut act_hstar: Mat<S> = Mat::zeros(self.rank, self.rank);
        let id: Mat<S> = Mat::identity(self.rank);
        for r in &self.reflections {
            let coef = params
                .c_of(r)
                .mul(&S::from_cyclotomic(&r.d()).inv().unwrap())
                .mul(&S::from_cyclotomic(eps.mats[r.elem].get(0, 0)));
            let on_h = self.elements[r.elem].map_scalars(S::from_cyclotomic);
            let on_hstar = self.mat_on_hstar(r.elem).map_scalars(S::from_cyclotomic);
            act_h = act_h.add(&id.sub(&on_h).scale(&coef));
            act_hstar = act_hstar.add(&id.sub(&on_hstar).scale(&coef));
        }
        let s1 = act_h.is_scalar_multiple_of_identity().ok_or(GroupError::NotScalar)?;
        let s2 = act_hstar
            .is_scalar_multiple_of_identity()
            .ok_or(GroupError::NotScalar)?;
        assert!(s1 == h_scalar && s2 == hstar_scalar, "zeta trace formula mismatch");
        Ok((h_scalar, hstar_scalar))
    }

    /// Monomial basis of the coinvariant algebra of `C[h]` (same shape for
    /// `C[h*]`), grouped by degree.
    pub fn coinvariant_basis(&self) -> Vec<Vec<Expo>> {
        match self.kind {
            GroupKind::Trivial => vec![vec![vec![]]],
            GroupKind::Cyclic { l } => (0..l).map(|d| vec![vec![d as u16]]).collect(),
            GroupKind::Dihedral { m } => {
                let m = m as u16;
                let mut out = vec![vec![vec![0, 0]]];
                for d in 1..m {
                    out.push(vec![vec![d, 0], vec![0, d]]);
                }
                out.push(vec![vec![m, 0]]);
                out
            }
        }
    }

    /// Normal form of a monomial modulo the ideal generated by the
    /// positive-degree invariants: `None` means it reduces to zero, otherwise
    /// the monomial is congruent to `coeff * basis_monomial`.
    pub fn coinv_reduce(&self, e: &Expo) -> Option<(Expo, Cyclotomic)> {
        match self.kind {
            GroupKind::Trivial => Some((e.clone(), Cyclotomic::one())),
            GroupKind::Cyclic { l } => {
                if (e[0] as u32) < l {
                    Some((e.clone(), Cyclotomic::one()))
                } else {
                    None
                }
            }
            GroupKind::Dihedral { m } => {
                let m = m as u16;
                let (a, b) = (e[0], e[1]);
                if (a > 0 && b > 0) || a > m || b > m {
                    None
                } else if b == m {
                    Some((vec![m, 0], Cyclotomic::from_int(-1)))
                } else {
                    Some((e.clone(), Cyclotomic::one()))
                }
            }
        }
    }

    /// Basis of the harmonic polynomials in `C[h]` (joint kernel of the
    /// positive-degree invariant differential operators), grouped by degree.
    /// Same shape for `C[h*]`.
    pub fn harmonic_basis<S: Scalar>(&self) -> Vec<Vec<crate::poly::Poly<S>>> {
        use crate::poly::Poly;
        match self.kind {
            GroupKind::Trivial => vec![vec![Poly::one(0)]],
            GroupKind::Cyclic { l } => (0..l)
                .map(|d| vec![Poly::monomial(1, vec![d as u16], S::one())])
                .collect(),
            GroupKind::Dihedral { m } => {
                let m = m as u16;
                let mut out = vec![vec![Poly::one(2)]];
                for d in 1..m {
                    out.push(vec![
                        Poly::monomial(2, vec![d, 0], S::one()),
                        Poly::monomial(2, vec![0, d], S::one()),
                    ]);
                }
                out.push(vec![Poly::monomial(2, vec![m, 0], S::one())
                    .sub(&Poly::monomial(2, vec![0, m], S::one()))]);
                out
            }
        }
    }

    /// `P_G(q) = prod_i (1 - q^{d_i})` over the fundamental degrees.
    pub fn poincare_polynomial(&self) -> crate::characters::LaurentPoly {
        use crate::characters::LaurentPoly;
        let mut p = LaurentPoly::one();
        for &d in &self.fundamental_degrees {
            p = p.mul(&LaurentPoly::one().sub(&LaurentPoly::monomial(d as i64, 1)));
        }
        p
    }

    pub fn trivial() -> Self {
        ReflectionGroup {
            name: "trivial".into(),
            rank: 0,
            elements: vec![Mat::zeros(0, 0)],
            mult: vec![vec![0]],
            inv: vec![0],
            conj_classes: vec![vec![0]],
            reflections: vec![],
            irreps: vec![IrrepData {
                label: "triv".into(),
                aliases: vec![],
                dim: 1,
                mats: vec![Mat::identity(1)],
            }],
            fundamental_degrees: vec![],
            conductor: 1,
            kind: GroupKind::Trivial,
        }
    }
}

fn det2(m: &Mat<Cyclotomic>) -> Cyclotomic {
    match m.nrows {
        0 => Cyclotomic::one(),
        1 => m.get(0, 0).clone(),
        2 => m
            .get(0, 0)
            .mul(m.get(1, 1))
            .sub(&m.get(0, 1).mul(m.get(1, 0))),
        _ => unreachable!("built-in groups have rank <= 2"),
    }
}

fn build_cayley(elements: &[Mat<Cyclotomic>]) -> (Vec<Vec<usize>>, Vec<usize>) {
    let n = elements.len();
    let find = |m: &Mat<Cyclotomic>| -> usize {
        elements
            .iter()
            .position(|e| e == m)
            .expect("group closure violated")
    };
    let mut mult = vec![vec![0; n]; n];
    for i in 0..n {
        for j in 0..n {
            mult[i][j] = find(&elements[i].matmul(&elements[j]));
        }
    }
    let inv = (0..n)
        .map(|i| (0..n).find(|&j| mult[i][j] == 0).expect("inverse exists"))
        .collect();
    (mult, inv)
}

fn conjugacy_classes(mult: &[Vec<usize>], inv: &[usize]) -> Vec<Vec<usize>> {
    let n = mult.len();
    let mut seen = vec![false; n];
    let mut classes = Vec::new();
    for i in 0..n {
        if seen[i] {
            continue;
        }
        let mut class: Vec<usize> = Vec::new();
        for g in 0..n {
            let c = mult[mult[g][i]][inv[g]];
            if !class.contains(&c) {
                class.push(c);
            }
        }
        class.sort();
        for &c in &class {
            seen[c] = true;
        }
        classes.push(class);
    }
    classes
}

/// The cyclic group `Z_l` on a 1-dimensional `h`, the generator acting by
/// `zeta_l`. Reflections are `s^j` for `1 <= j < l`, with
/// `lambda_{s^j} = zeta_l^{-j}` on `h*`; all powers share `alpha = x`,
/// `alpha^vee = 2y`.
pub fn build_cyclic(l: u32) -> ReflectionGroup {
    assert!(l >= 2, "cyclic reflection group needs l >= 2");
    let elements: Vec<Mat<Cyclotomic>> = (0..l)
        .map(|j| {
            let mut m = Mat::zeros(1, 1);
            m.set(0, 0, Cyclotomic::zeta(l, j as i64));
            m
        })
        .collect();
    let (mult, inv) = build_cayley(&elements);
    let conj_classes = conjugacy_classes(&mult, &inv);
    let reflections: Vec<Reflection> = (1..l)
        .map(|j| Reflection {
            elem: j as usize,
            class_idx: (j - 1) as usize,
            alpha: vec![Cyclotomic::one()],
            alpha_vee: vec![Cyclotomic::from_int(2)],
            lambda: Cyclotomic::zeta(l, -(j as i64)),
        })
        .collect();
    let irreps: Vec<IrrepData> = (0..l)
        .map(|k| {
            let mats = (0..l)
                .map(|j| {
                    let mut m = Mat::zeros(1, 1);
                    m.set(0, 0, Cyclotomic::zeta(l, (j * k) as i64));
                    m
                })
                .collect();
            let aliases = if k == 0 {
                vec!["triv".into()]
            } else if l == 2 {
                vec!["sgn".into(), "det".into()]
            } else {
                vec![]
            };
            IrrepData { label: format!("chi_{}", k), aliases, dim: 1, mats }
        })
        .collect();
    ReflectionGroup {
        name: format!("Z{}", l),
        rank: 1,
        elements,
        mult,
        inv,
        conj_classes,
        reflections,
        irreps,
        fundamental_degrees: vec![l as usize],
        conductor: l,
        kind: GroupKind::Cyclic { l },
    }
}

/// The dihedral group `I2(m)` of order `2m` in the rotation eigenbasis:
/// rotations `r^j = diag(zeta^j, zeta^{-j})` at indices `0..m` and reflections
/// `sigma_j = r^j sigma_0` at indices `m..2m`, `sigma_0` being the swap. All
/// reflections are real (`lambda_s = -1`). For `m = 4` and `m = 6` the irreps
/// carry the bipartition / Carter labels used in type-B2/G2 tables; which of
/// the two non-determinant linear characters gets the primed (resp. `11x0`)
/// name is a convention, fixed here by the value `+1` on the class of
/// `sigma_0`.
pub fn build_dihedral(m: u32) -> ReflectionGroup {
    assert!(m >= 3, "dihedral group I2(m) needs m >= 3");
    let z = |k: i64| Cyclotomic::zeta(m, k);
    let mut elements: Vec<Mat<Cyclotomic>> = Vec::with_capacity(2 * m as usize);
    for j in 0..m as i64 {
        let mut mat = Mat::zeros(2, 2);
        mat.set(0, 0, z(j));
        mat.set(1, 1, z(-j));
        elements.push(mat);
    }
    for j in 0..m as i64 {
        // sigma_j(y_1) = zeta^{-j} y_2, sigma_j(y_2) = zeta^j y_1
        let mut mat = Mat::zeros(2, 2);
        mat.set(0, 1, z(j));
        mat.set(1, 0, z(-j));
        elements.push(mat);
    }
    let (mult, inv) = build_cayley(&elements);
    let conj_classes = conjugacy_classes(&mult, &inv);
    let two_classes = m % 2 == 0;
    let reflections: Vec<Reflection> = (0..m as i64)
        .map(|j| Reflection {
            elem: (m as i64 + j) as usize,
            class_idx: if two_classes { (j % 2) as usize } else { 0 },
            // alpha_j = x1 - zeta^j x2, alpha_j^vee = y1 - zeta^{-j} y2
            alpha: vec![Cyclotomic::one(), z(j).neg()],
            alpha_vee: vec![Cyclotomic::one(), z(-j).neg()],
            lambda: Cyclotomic::from_int(-1),
        })
        .collect();

    // linear characters, given by their values on r^j and sigma_j
    let lin = |rot: fn(i64) -> i64, refl: fn(i64) -> i64| -> Vec<Mat<Cyclotomic>> {
        (0..2 * m as i64)
            .map(|idx| {
                let v = if idx < m as i64 { rot(idx) } else { refl(idx - m as i64) };
                let mut mat = Mat::zeros(1, 1);
                mat.set(0, 0, Cyclotomic::from_int(v));
                mat
            })
            .collect()
    };
    fn parity(j: i64) -> i64 {
        if j % 2 == 0 {
            1
        } else {
            -1
        }
    }
    fn neg_parity(j: i64) -> i64 {
        -parity(j)
    }

    let mut irreps: Vec<IrrepData> = Vec::new();
    irreps.push(IrrepData {
        label: "triv".into(),
        aliases: vec![],
        dim: 1,
        mats: lin(|_| 1, |_| 1),
    });
    if two_classes {
        irreps.push(IrrepData {
            label: "chi'".into(),
            aliases: vec![],
            dim: 1,
            mats: lin(parity, parity),
        });
        irreps.push(IrrepData {
            label: "chi''".into(),
            aliases: vec![],
            dim: 1,
            mats: lin(parity, neg_parity),
        });
    }
    irreps.push(IrrepData {
        label: "det".into(),
        aliases: vec!["sgn".into()],
        dim: 1,
        mats: lin(|_| 1, |_| -1),
    });
    for k in 1..=((m as i64 - 1) / 2).max(m as i64 / 2 - 1) {
        if 2 * k >= m as i64 {
            continue;
        }
        let mats: Vec<Mat<Cyclotomic>> = (0..2 * m as i64)
            .map(|idx| {
                let mut mat = Mat::zeros(2, 2);
                if idx < m as i64 {
                    mat.set(0, 0, z(k * idx));
                    mat.set(1, 1, z(-k * idx));
                } else {
                    let j = idx - m as i64;
                    mat.set(0, 1, z(k * j));
                    mat.set(1, 0, z(-k * j));
                }
                mat
            })
            .collect();
        irreps.push(IrrepData { label: format!("rho_{}", k), aliases: vec![], dim: 2, mats });
    }

    let (name, relabel): (String, Vec<(&str, &str, Vec<&str>)>) = match m {
        4 => (
            "B2".into(),
            vec![
                ("triv", "2x0", vec!["triv"]),
                ("det", "0x11", vec!["det", "sgn"]),
                ("chi'", "11x0", vec![]),
                ("chi''", "0x2", vec![]),
                ("rho_1", "1x1", vec![]),
            ],
        ),
        6 => (
            "G2".into(),
            vec![
                ("triv", "phi_{1,0}", vec!["triv"]),
                ("det", "phi_{1,6}", vec!["det", "sgn"]),
                ("chi'", "phi'_{1,3}", vec![]),
                ("chi''", "phi''_{1,3}", vec![]),
                ("rho_1", "phi_{2,1}", vec![]),
                ("rho_2", "phi_{2,2}", vec![]),
            ],
        ),
        _ => (format!("I2({})", m), vec![]),
    };
    for (old, new, aliases) in relabel {
        let ir = irreps.iter_mut().find(|ir| ir.label == old).unwrap();
        ir.label = new.to_string();
        ir.aliases = aliases.iter().map(|s| s.to_string()).collect();
    }

    ReflectionGroup {
        name,
        rank: 2,
        elements,
        mult,
        inv,
        conj_classes,
        reflections,
        irreps,
        fundamental_degrees: vec![2, m as usize],
        conductor: m,
        kind: GroupKind::Dihedral { m },
    }
}

/// Parse a group spec: `Z2`, `Z3`, ..., `B2`, `G2`, `I2(5)` / `I25`.
pub fn build_group(spec: &str) -> Option<ReflectionGroup> {
    let s = spec.trim();
    if s.eq_ignore_ascii_case("B2") {
        return Some(build_dihedral(4));
    }
    if s.eq_ignore_ascii_case("G2") {
        return Some(build_dihedral(6));
    }
    if let Some(rest) = s.strip_prefix('Z').or_else(|| s.strip_prefix('z')) {
        let l: u32 = rest.parse().ok()?;
        return if l >= 2 { Some(build_cyclic(l)) } else { None };
    }
    if let Some(rest) = s.strip_prefix("I2").or_else(|| s.strip_prefix("i2")) {
        let rest = rest.trim_matches(|ch| ch == '(' || ch == ')');
        let m: u32 = rest.parse().ok()?;
        return if m >= 3 { Some(build_dihedral(m)) } else { None };
    }
    None
}

/// Connected components of the linkage graph of a square matrix of Laurent
/// polynomials: an edge joins distinct indices with a nonzero entry in either
/// orientation.
pub fn blocks_from_matrix(
    labels: &[String],
    entries: &[Vec<crate::characters::LaurentPoly>],
) -> Vec<Vec<String>> {
    let n = labels.len();
    let mut parent: Vec<usize> = (0..n).collect();
    fn find(parent: &mut Vec<usize>, i: usize) -> usize {
        if parent[i] != i {
            let r = find(parent, parent[i]);
            parent[i] = r;
        }
        parent[i]
    }
    for i in 0..n {
        for j in 0..n {
            if i != j && (!entries[i][j].is_zero() || !entries[j][i].is_zero()) {
                let (a, b) = (find(&mut parent, i), find(&mut parent, j));
                if a != b {
                    parent[a] = b;
                }
            }
        }
    }
    let mut groups: std::collections::BTreeMap<usize, Vec<String>> = Default::default();
    for i in 0..n {
        let r = find(&mut parent, i);
        groups.entry(r).or_default().push(labels[i].clone());
    }
    groups.into_values().collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::rat;

    #[test]
    fn dihedral_4_order_and_degrees() {
        let g = build_dihedral(4);
        assert_eq!(g.order(), 8);
        assert_eq!(g.reflections.len(), 4);
        assert_eq!(g.fundamental_degrees, vec![2, 4]);
        assert_eq!(g.num_refl_classes(), 2);
        let s: usize = g.irreps.iter().map(|ir| ir.dim * ir.dim).sum();
        assert_eq!(s, 8);
    }

    #[test]
    fn dihedral_6_order_and_degrees() {
        let g = build_dihedral(6);
        assert_eq!(g.order(), 12);
        assert_eq!(g.fundamental_degrees, vec![2, 6]);
        assert_eq!(g.irreps.len(), 6);
    }

    #[test]
    fn dihedral_3_single_class() {
        let g = build_dihedral(3);
        assert_eq!(g.order(), 6);
        assert_eq!(g.reflections.len(), 3);
        assert_eq!(g.num_refl_classes(), 1);
        // oracle: count rank-1 (g - 1) among all elements
        let mut count = 0;
        for m in &g.elements {
            let mut a = m.clone();
            for i in 0..2 {
                a.set(i, i, a.get(i, i).sub(&Cyclotomic::one()));
            }
            if crate::linalg::rank(&a) == 1 {
                count += 1;
            }
        }
        assert_eq!(count, 3);
    }

    #[test]
    fn reflections_satisfy_eigendata_identities() {
        // alpha(alpha^vee) = 2 and s(x) = x - d_s x(alpha^vee) alpha
        for g in [build_cyclic(2), build_cyclic(3), build_dihedral(4), build_dihedral(5)] {
            for r in &g.reflections {
                let mut pair = Cyclotomic::zero();
                for i in 0..g.rank {
                    pair = pair.add(&r.alpha[i].mul(&r.alpha_vee[i]));
                }
                assert_eq!(pair, Cyclotomic::from_int(2), "normalization in {}", g.name);
                let act: Vec<Vec<Cyclotomic>> = g.act_on_ch(r.elem);
                for i in 0..g.rank {
                    for j in 0..g.rank {
                        let direct = act[i][j].clone();
                        let formula = if i == j { Cyclotomic::one() } else { Cyclotomic::zero() }
                            .sub(&r.d().mul(&r.alpha_vee[i]).mul(&r.alpha[j]));
                        assert_eq!(direct, formula, "eigendata in {}", g.name);
                    }
                }
            }
        }
    }

    #[test]
    fn irreps_are_homomorphisms_and_orthogonal() {
        for g in [build_cyclic(3), build_dihedral(4), build_dihedral(6)] {
            for ir in &g.irreps {
                for a in 0..g.order() {
                    for b in 0..g.order() {
                        let ab = g.mult[a][b];
                        assert_eq!(
                            ir.mats[a].matmul(&ir.mats[b]),
                            ir.mats[ab],
                            "homomorphism {} in {}",
                            ir.label,
                            g.name
                        );
                    }
                }
            }
            for (i, ir1) in g.irreps.iter().enumerate() {
                for (j, ir2) in g.irreps.iter().enumerate() {
                    let mut acc = Cyclotomic::zero();
                    for e in 0..g.order() {
                        acc = acc.add(&ir1.char_at(e).mul(&ir2.char_at(g.inv[e])));
                    }
                    let expect = if i == j { g.order() as i64 } else { 0 };
                    assert_eq!(acc, Cyclotomic::from_int(expect));
                }
            }
        }
    }

    #[test]
    fn cyclic_eigenvalue_data() {
        let g = build_cyclic(2);
        let r = &g.reflections[0];
        assert_eq!(r.lambda, Cyclotomic::from_int(-1));
        assert_eq!(r.d(), Cyclotomic::one());
        assert_eq!(r.d_vee(), Cyclotomic::one());

        let g3 = build_cyclic(3);
        assert_eq!(g3.reflections.len(), 2);
        assert_eq!(g3.reflections[0].lambda, Cyclotomic::zeta(3, -1));
        assert_eq!(*g3.elements[1].get(0, 0), Cyclotomic::zeta(3, 1));
    }

    #[test]
    fn n_c_values() {
        // Z2 triv, constant c: N_c = c; W(B2) triv: 4c; 11x0/0x2/1x1: 0
        let z2 = build_cyclic(2);
        let p = Params::generic_constant(&z2, 1);
        let c = ParamScalar::symbol(1, 0);
        assert_eq!(z2.n_c(z2.irrep("triv").unwrap(), &p).unwrap(), c);

        let b2 = build_dihedral(4);
        let p = Params::generic_constant(&b2, 0);
        let four_c = c.mul(&ParamScalar::from_int(4));
        assert_eq!(b2.n_c(b2.irrep("2x0").unwrap(), &p).unwrap(), four_c);
        for lbl in ["11x0", "0x2", "1x1"] {
            assert!(b2.n_c(b2.irrep(lbl).unwrap(), &p).unwrap().is_zero(), "{}", lbl);
        }
        let p0 = Params::zero_c(&b2, ParamScalar::from_int(1));
        for ir in &b2.irreps {
            assert!(b2.n_c(ir, &p0).unwrap().is_zero());
        }
    }

    #[test]
    fn zeta_scalar_values() {
        // Z2, eps = triv, r = 1: h*_{c,eps} = 2c
        let z2 = build_cyclic(2);
        let p = Params::generic_constant(&z2, 1);
        let c = ParamScalar::symbol(1, 0);
        let (_, hstar) = z2.zeta_scalars(z2.irrep("triv").unwrap(), &p).unwrap();
        assert_eq!(hstar, c.mul(&ParamScalar::from_int(2)));
        // real G, constant c, eps = triv: h* = 2|S|c/r = (Coxeter number) c
        for (m, h) in [(4u32, 4i64), (6, 6), (3, 3)] {
            let g = build_dihedral(m);
            let p = Params::generic_constant(&g, 1);
            let (hs, hstar) = g.zeta_scalars(g.irrep("triv").unwrap(), &p).unwrap();
            let expect = c.mul(&ParamScalar::from_int(h));
            assert_eq!(hstar, expect, "I2({})", m);
            assert_eq!(hs, expect, "real group: both scalars agree");
        }
        let g = build_dihedral(4);
        let p0: Params<Cyclotomic> = Params::zero_c(&g, Cyclotomic::from_rational(&rat(1)));
        let (a, b) = g.zeta_scalars(g.irrep("triv").unwrap(), &p0).unwrap();
        assert!(Scalar::is_zero(&a) && Scalar::is_zero(&b));
    }

    #[test]
    fn conjugation_preserves_reflection_structure() {
        for g in [build_cyclic(3), build_dihedral(4), build_dihedral(5)] {
            let refl_elems: Vec<usize> = g.reflections.iter().map(|r| r.elem).collect();
            for r in &g.reflections {
                for e in 0..g.order() {
                    let c = g.mult[g.mult[e][r.elem]][g.inv[e]];
                    assert!(refl_elems.contains(&c), "{}", g.name);
                }
            }
        }
    }

    #[test]
    fn coinvariant_dimensions() {
        let b2 = build_dihedral(4);
        let dims: Vec<usize> = b2.coinvariant_basis().iter().map(|v| v.len()).collect();
        assert_eq!(dims, vec![1, 2, 2, 2, 1]); // Hilbert series (1+q)(1+q+q^2+q^3)
        let g2 = build_dihedral(6);
        assert_eq!(g2.coinvariant_basis().iter().map(|v| v.len()).sum::<usize>(), 12);
        let z2 = build_cyclic(2);
        assert_eq!(z2.coinvariant_basis(), vec![vec![vec![0]], vec![vec![1]]]);
    }

    #[test]
    fn build_group_parsing() {
        assert_eq!(build_group("B2").unwrap().name, "B2");
        assert_eq!(build_group("G2").unwrap().name, "G2");
        assert_eq!(build_group("Z3").unwrap().name, "Z3");
        assert_eq!(build_group("I2(5)").unwrap().name, "I2(5)");
        assert!(build_group("Z1").is_none());
        assert!(build_group("E8").is_none());
    }
}
