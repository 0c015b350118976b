//! The Clifford algebra of `V = h + h*` (relation `v v' + v' v = -2 (v, v')`)
//! acting on the spin module `S = Lambda h` and its dual `S* = Lambda h*`.
//!
//! Clifford elements are represented by their action matrices on the
//! `2^r`-dimensional spin spaces, in the wedge basis indexed by subsets
//! (bitmasks). The distinguished elements `tau_s`, `tau_s_vee` and `kappa`
//! and the graded characters of `Lambda^{+/-}` live here.

use crate::characters::GradedChar;
use crate::field::{Cyclotomic, Scalar};
use crate::group::ReflectionGroup;
use crate::linalg::Mat;

/// Number of set bits below position `i`.
fn bits_below(mask: u8, i: usize) -> u32 {
    (mask & ((1u8 << i) - 1)).count_ones()
}

/// Matrix of the wedge operator `sum_i coeffs[i] (e_i /\ .)` on `Lambda`.
pub fn mat_wedge<S: Scalar>(rank: usize, coeffs: &[S]) -> Mat<S> {
    let dim = 1usize << rank;
    let mut m = Mat::zeros(dim, dim);
    for mask in 0..dim as u8 {
        for i in 0..rank {
            if mask & (1 << i) != 0 || coeffs[i].is_zero() {
                continue;
            }
            let sign = if bits_below(mask, i) % 2 == 0 { 1 } else { -1 };
            let target = mask | (1 << i);
            m.add_to(target as usize, mask as usize, &coeffs[i].mul(&S::from_int(sign)));
        }
    }
    m
}

/// Matrix of the odd contraction sending `e_{t1} /\ ... /\ e_{tk}` to
/// `sum_p (-1)^{p-1} vals[t_p] (omit t_p)`.
pub fn mat_contract<S: Scalar>(rank: usize, vals: &[S]) -> Mat<S> {
    let dim = 1usize << rank;
    let mut m = Mat::zeros(dim, dim);
    for mask in 0..dim as u8 {
        for i in 0..rank {
            if mask & (1 << i) == 0 || vals[i].is_zero() {
                continue;
            }
            let sign = if bits_below(mask, i) % 2 == 0 { 1 } else { -1 };
            let target = mask & !(1 << i);
            m.add_to(target as usize, mask as usize, &vals[i].mul(&S::from_int(sign)));
        }
    }
    m
}

/// Action matrix of `v = (x-part, y-part) in V` on the spin module `S` in the
/// wedge basis of `Lambda h`: `s(y) = y /\ .` and `s(x) = -2 d_x`.
pub fn spin_on_s<S: Scalar>(rank: usize, x_part: &[S], y_part: &[S]) -> Mat<S> {
    let wedge = mat_wedge(rank, y_part);
    let contract = mat_contract(rank, x_part);
    wedge.sub(&contract.scale(&S::from_int(2)))
}

/// Action matrix of `v` on the dual spin module `S* = Lambda h*`:
/// `s*(y) = -d_y` and `s*(x) = 2 mu_x`.
pub fn spin_on_sstar<S: Scalar>(rank: usize, x_part: &[S], y_part: &[S]) -> Mat<S> {
    let wedge = mat_wedge(rank, x_part);
    let contract = mat_contract(rank, y_part);
    wedge.scale(&S::from_int(2)).sub(&contract)
}

/// The bilinear pairing on `V` extending `h* x h -> C` with isotropic `h`
/// and `h*`: `(v, v') = x(y') + x'(y)`.
pub fn v_pairing<S: Scalar>(v: (&[S], &[S]), w: (&[S], &[S])) -> S {
    let mut acc = S::zero();
    for i in 0..v.0.len() {
        acc = acc.add(&v.0[i].mul(&w.1[i]));
        acc = acc.add(&w.0[i].mul(&v.1[i]));
    }
    acc
}

/// `tau_s_vee = d_s_vee (alpha_s_vee alpha_s)/2 + 1` acting on `S`; acts as
/// the reflection `s` on `Lambda h`.
pub fn tau_vee_on_s<S: Scalar>(group: &ReflectionGroup, ridx: usize) -> Mat<S> {
    let r = &group.reflections[ridx];
    let rank = group.rank;
    let zero = vec![S::zero(); rank];
    let alpha: Vec<S> = r.alpha.iter().map(S::from_cyclotomic).collect();
    let alpha_vee: Vec<S> = r.alpha_vee.iter().map(S::from_cyclotomic).collect();
    let a = spin_on_s(rank, &zero, &alpha_vee);
    let b = spin_on_s(rank, &alpha, &zero);
    let half_d = S::from_cyclotomic(&r.d_vee()).mul(&S::from_rational(&crate::field::ratio(1, 2)));
    a.matmul(&b).scale(&half_d).add(&Mat::identity(1 << rank))
}

/// `tau_s = d_s (alpha_s alpha_s_vee)/2 + 1` acting on `S*`; acts as the
/// reflection `s` on `Lambda h*`.
pub fn tau_on_sstar<S: Scalar>(group: &ReflectionGroup, ridx: usize) -> Mat<S> {
    let r = &group.reflections[ridx];
    let rank = group.rank;
    let zero = vec![S::zero(); rank];
    let alpha: Vec<S> = r.alpha.iter().map(S::from_cyclotomic).collect();
    let alpha_vee: Vec<S> = r.alpha_vee.iter().map(S::from_cyclotomic).collect();
    let a = spin_on_sstar(rank, &alpha, &zero);
    let b = spin_on_sstar(rank, &zero, &alpha_vee);
    let half_d = S::from_cyclotomic(&r.d()).mul(&S::from_rational(&crate::field::ratio(1, 2)));
    a.matmul(&b).scale(&half_d).add(&Mat::identity(1 << rank))
}

/// `kappa = sum_i (x_i y_i + 1)` on the chosen spin space; `kappa/2` is the
/// scalar `(-r/2 + l)` on `Lambda^l h` and `(r/2 - l)` on `Lambda^l h*`.
pub fn kappa<S: Scalar>(rank: usize, dual: bool) -> Mat<S> {
    let dim = 1usize << rank;
    let mut acc: Mat<S> = Mat::identity(dim).scale(&S::from_int(rank as i64));
    for i in 0..rank {
        let mut x = vec![S::zero(); rank];
        x[i] = S::one();
        let mut y = vec![S::zero(); rank];
        y[i] = S::one();
        let zero = vec![S::zero(); rank];
        let (mx, my) = if dual {
            (spin_on_sstar(rank, &x, &zero), spin_on_sstar(rank, &zero, &y))
        } else {
            (spin_on_s(rank, &x, &zero), spin_on_s(rank, &zero, &y))
        };
        acc = acc.add(&mx.matmul(&my));
    }
    acc
}

/// Matrix of the induced map on `Lambda^bullet` (all exterior powers at once,
/// in the mask basis): entries are minors of `m`.
pub fn exterior_power_matrix(m: &Mat<Cyclotomic>) -> Mat<Cyclotomic> {
    let rank = m.nrows;
    let dim = 1usize << rank;
    let mut out = Mat::zeros(dim, dim);
    for tcol in 0..dim as u8 {
        let cols: Vec<usize> = (0..rank).filter(|i| tcol & (1 << i) != 0).collect();
        for trow in 0..dim as u8 {
            if trow.count_ones() != tcol.count_ones() {
                continue;
            }
            let rows: Vec<usize> = (0..rank).filter(|i| trow & (1 << i) != 0).collect();
            out.set(trow as usize, tcol as usize, minor(m, &rows, &cols));
        }
    }
    out
}

fn minor(m: &Mat<Cyclotomic>, rows: &[usize], cols: &[usize]) -> Cyclotomic {
    match rows.len() {
        0 => Cyclotomic::one(),
        1 => m.get(rows[0], cols[0]).clone(),
        2 => m
            .get(rows[0], cols[0])
            .mul(m.get(rows[1], cols[1]))
            .sub(&m.get(rows[0], cols[1]).mul(m.get(rows[1], cols[0]))),
        _ => {
            let mut acc = Cyclotomic::zero();
            for (k, &c) in cols.iter().enumerate() {
                let sub_cols: Vec<usize> =
                    cols.iter().enumerate().filter(|(j, _)| *j != k).map(|(_, &x)| x).collect();
                let term = m.get(rows[0], c).mul(&minor(m, &rows[1..], &sub_cols));
                if k % 2 == 0 {
                    acc = acc.add(&term);
                } else {
                    acc = acc.sub(&term);
                }
            }
            acc
        }
    }
}

/// Graded character of `Lambda^+ h* - Lambda^- h*` with `Lambda^l h*` in
/// degree `+l`; equals `det_{h*}(1 - g q)` as a character-valued polynomial.
pub fn lambda_pm_hstar(group: &ReflectionGroup) -> GradedChar {
    lambda_pm(group, true, 1)
}

/// Graded character of `Lambda^+ h - Lambda^- h` with `Lambda^l h` in degree
/// `+l` (the grading used in the printed B2/G2 tables).
pub fn lambda_pm_h_pos(group: &ReflectionGroup) -> GradedChar {
    lambda_pm(group, false, 1)
}

/// Graded character of `Lambda^+ h - Lambda^- h` with `Lambda^l h` in degree
/// `-l` (the module grading, `deg y = -1`).
pub fn lambda_pm_h_neg(group: &ReflectionGroup) -> GradedChar {
    lambda_pm(group, false, -1)
}

/// Graded character of `Lambda^+ V - Lambda^- V`
/// `= (Lambda^{+/-} h, deg -1) (x) (Lambda^{+/-} h*, deg +1)`.
pub fn lambda_pm_v(group: &ReflectionGroup) -> GradedChar {
    lambda_pm_h_neg(group)
        .tensor(&lambda_pm_hstar(group), group)
        .expect("labels are the group's own")
}

fn lambda_pm(group: &ReflectionGroup, dual: bool, degree_sign: i64) -> GradedChar {
    let mut out = GradedChar::zero();
    if group.rank == 0 {
        out.add_term("triv", 0, 1);
        return out;
    }
    for l in 0..=group.rank {
        let chi: Vec<Cyclotomic> = (0..group.order())
            .map(|g| {
                let m = if dual { group.mat_on_hstar(g) } else { group.elements[g].clone() };
                let ext = exterior_power_matrix(&m);
                let mut acc = Cyclotomic::zero();
                for mask in 0..(1u8 << group.rank) {
                    if mask.count_ones() as usize == l {
                        acc = acc.add(ext.get(mask as usize, mask as usize));
                    }
                }
                acc
            })
            .collect();
        let mults = group.decompose_character(&chi).expect("integral multiplicities");
        let sign = if l % 2 == 0 { 1 } else { -1 };
        for (k, &mult) in mults.iter().enumerate() {
            out.add_term(&group.irreps[k].label, degree_sign * l as i64, sign * mult);
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::characters::LaurentPoly;
    use crate::field::{rat, Rational};
    use crate::group::{build_cyclic, build_dihedral};

    #[test]
    fn rank1_clifford_products() {
        // s(x) s(y) (1) = s(x)(y) = -2 with x(y) = 1
        let x = spin_on_s::<Rational>(1, &[rat(1)], &[rat(0)]);
        let y = spin_on_s::<Rational>(1, &[rat(0)], &[rat(1)]);
        let prod = x.matmul(&y);
        assert_eq!(*prod.get(0, 0), rat(-2));
        // s(y)(vol) = 0: wedge square
        assert!(y.matmul(&y).is_zero());
    }

    #[test]
    fn clifford_relation_on_v_basis() {
        // v v' + v' v = -2 (v, v') on a basis of V, rank 2, both spin modules
        let rank = 2;
        let mut basis: Vec<(Vec<Rational>, Vec<Rational>)> = Vec::new();
        for i in 0..rank {
            let mut x = vec![rat(0); rank];
            x[i] = rat(1);
            basis.push((x, vec![rat(0); rank]));
            let mut y = vec![rat(0); rank];
            y[i] = rat(1);
            basis.push((vec![rat(0); rank], y));
        }
        for dual in [false, true] {
            for v in &basis {
                for w in &basis {
                    let (mv, mw) = if dual {
                        (spin_on_sstar(rank, &v.0, &v.1), spin_on_sstar(rank, &w.0, &w.1))
                    } else {
                        (spin_on_s(rank, &v.0, &v.1), spin_on_s(rank, &w.0, &w.1))
                    };
                    let anti = mv.matmul(&mw).add(&mw.matmul(&mv));
                    let expect = Mat::identity(1 << rank)
                        .scale(&v_pairing((&v.0, &v.1), (&w.0, &w.1)).mul(&rat(-2)));
                    assert_eq!(anti, expect, "dual={}", dual);
                }
            }
        }
    }

    #[test]
    fn spin_action_flips_parity() {
        let rank = 2;
        let v = spin_on_s::<Rational>(rank, &[rat(1), rat(2)], &[rat(3), rat(0)]);
        for mask in 0..(1u8 << rank) {
            for target in 0..(1u8 << rank) {
                if target.count_ones() % 2 == mask.count_ones() % 2 {
                    assert_eq!(*v.get(target as usize, mask as usize), rat(0));
                }
            }
        }
    }

    #[test]
    fn tau_vee_acts_as_reflection_on_s() {
        // tau_s_vee on Lambda h equals the exterior power of the group matrix
        for g in [build_cyclic(2), build_cyclic(3), build_dihedral(4)] {
            for (ridx, r) in g.reflections.iter().enumerate() {
                let tau: Mat<Cyclotomic> = tau_vee_on_s(&g, ridx);
                let oracle = exterior_power_matrix(&g.elements[r.elem]);
                assert_eq!(tau, oracle, "{} reflection {}", g.name, ridx);
            }
        }
    }

    #[test]
    fn tau_acts_as_reflection_on_sstar() {
        for g in [build_cyclic(2), build_cyclic(3), build_dihedral(4)] {
            for (ridx, r) in g.reflections.iter().enumerate() {
                let tau: Mat<Cyclotomic> = tau_on_sstar(&g, ridx);
                let oracle = exterior_power_matrix(&g.mat_on_hstar(r.elem));
                assert_eq!(tau, oracle, "{} reflection {}", g.name, ridx);
            }
        }
        // Z2 concretely: +1 on Lambda^0 h, -1 on Lambda^1 h
        let z2 = build_cyclic(2);
        let tau: Mat<Cyclotomic> = tau_vee_on_s(&z2, 0);
        assert_eq!(*tau.get(0, 0), Cyclotomic::one());
        assert_eq!(*tau.get(1, 1), Cyclotomic::from_int(-1));
    }

    #[test]
    fn tau_multiplicativity() {
        let g = build_dihedral(4);
        for r1 in 0..g.reflections.len() {
            for r2 in 0..g.reflections.len() {
                let prod_elem = g.mult[g.reflections[r1].elem][g.reflections[r2].elem];
                let lhs = tau_vee_on_s::<Cyclotomic>(&g, r1).matmul(&tau_vee_on_s(&g, r2));
                let rhs = exterior_power_matrix(&g.elements[prod_elem]);
                assert_eq!(lhs, rhs);
            }
        }
    }

    #[test]
    fn kappa_scalars() {
        // kappa/2 acts by (-r/2 + l) on Lambda^l h and (r/2 - l) on Lambda^l h*
        let rank = 2;
        let k: Mat<Rational> = kappa(rank, false);
        let kd: Mat<Rational> = kappa(rank, true);
        for mask in 0..(1u8 << rank) {
            let l = mask.count_ones() as i64;
            assert_eq!(*k.get(mask as usize, mask as usize), rat(2 * l - rank as i64));
            assert_eq!(*kd.get(mask as usize, mask as usize), rat(rank as i64 - 2 * l));
        }
    }

    #[test]
    fn determinant_pairing_dual_bases() {
        // <x1 /\ x2, y1 /\ y2> = det of the evaluation matrix = 1
        let m: Mat<Cyclotomic> = Mat::identity(2);
        assert_eq!(minor(&m, &[0, 1], &[0, 1]), Cyclotomic::one());
    }

    #[test]
    fn lambda_characters_b2_g2() {
        let b2 = build_dihedral(4);
        let ch = lambda_pm_h_pos(&b2);
        let mut expect = GradedChar::zero();
        expect.add_term("2x0", 0, 1);
        expect.add_term("1x1", 1, -1);
        expect.add_term("0x11", 2, 1);
        assert_eq!(ch, expect);

        let g2 = build_dihedral(6);
        let ch = lambda_pm_h_pos(&g2);
        let mut expect = GradedChar::zero();
        expect.add_term("phi_{1,0}", 0, 1);
        expect.add_term("phi_{2,1}", 1, -1);
        expect.add_term("phi_{1,6}", 2, 1);
        assert_eq!(ch, expect);

        // real groups: h and h* have the same graded character
        assert_eq!(lambda_pm_hstar(&b2), lambda_pm_h_pos(&b2));

        let triv = crate::group::ReflectionGroup::trivial();
        assert_eq!(lambda_pm_hstar(&triv), GradedChar::single("triv", LaurentPoly::one()));
    }

    #[test]
    fn lambda_z3_distinguishes_h_and_hstar() {
        // for Z3, Lambda^1 h = chi_1 but Lambda^1 h* = chi_2
        let g = build_cyclic(3);
        let h = lambda_pm_h_pos(&g);
        let hs = lambda_pm_hstar(&g);
        assert_eq!(h.poly("chi_1").coeff(1), -1);
        assert_eq!(hs.poly("chi_2").coeff(1), -1);
    }
}
