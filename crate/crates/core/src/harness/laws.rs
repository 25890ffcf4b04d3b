//! Law bodies. Each body draws its inputs from a [`Trial`] and compares the
//! two sides of one identity.

use std::sync::Arc;

use super::trial::{expect_eq, Encode, Trial, Verdict};
use super::Operators;
use crate::error::Result;
use crate::kernel::{psi_map, FormalGroupLaw, KernelPoint, PsiPolicy};
use crate::ring::{Ring, RingElement};
use crate::shifted::ShiftedWittVector;
use crate::witt::{apply_universal, c_pi, delta, GhostVector, UniversalOp, WittVector};

pub(crate) struct Ctx<'a> {
    pub ops: &'a Operators,
    pub m: usize,
    pub n: usize,
    pub prec: u64,
    /// Restricts the kernel laws to one formal group.
    pub group: Option<&'a Arc<FormalGroupLaw>>,
}

/// A formal group together with the ring its points live in: exact for the
/// additive law, `R / pi^prec` otherwise.
struct Setting {
    label: String,
    group: Arc<FormalGroupLaw>,
    ring: Ring,
    prec: Option<u64>,
}

fn settings(t: &Trial, c: &Ctx) -> Vec<Setting> {
    let groups = match c.group {
        Some(g) => vec![g.clone()],
        None => vec![additive(t), multiplicative(t)],
    };
    groups
        .into_iter()
        .map(|group| {
            let exact = group.is_additive();
            Setting {
                label: group.tag().to_string(),
                ring: if exact { t.ring.clone() } else { t.ring.truncated(c.prec) },
                prec: if exact { None } else { Some(c.prec) },
                group,
            }
        })
        .collect()
}

/// The group used where the coordinates do not depend on the law.
fn point_group(t: &Trial, c: &Ctx) -> Arc<FormalGroupLaw> {
    c.group.cloned().unwrap_or_else(|| additive(t))
}

pub(crate) type Body = fn(&mut Trial, &Ctx) -> Result<Verdict>;

fn additive(t: &Trial) -> Arc<FormalGroupLaw> {
    Arc::new(FormalGroupLaw::additive(t.ring.order()))
}

fn multiplicative(t: &Trial) -> Arc<FormalGroupLaw> {
    Arc::new(FormalGroupLaw::multiplicative(t.ring.order()))
}

fn elementwise(a: &GhostVector, b: &GhostVector, f: impl Fn(&RingElement, &RingElement) -> RingElement) -> Vec<RingElement> {
    a.entries().iter().zip(b.entries()).map(|(x, y)| f(x, y)).collect()
}

pub(crate) fn ghost_hom(t: &mut Trial, c: &Ctx) -> Result<Verdict> {
    let u = t.witt("u", c.n + 1)?;
    let v = t.witt("v", c.n + 1)?;
    let (gu, gv) = (u.ghost(), v.ghost());
    expect_eq!("ghost(u+v)", u.add(&v)?.ghost().entries().to_vec(), elementwise(&gu, &gv, |x, y| x + y));
    expect_eq!("ghost(uv)", u.mul(&v)?.ghost().entries().to_vec(), elementwise(&gu, &gv, |x, y| x * y));
    Ok(Verdict::Pass)
}

pub(crate) fn ghost_roundtrip(t: &mut Trial, c: &Ctx) -> Result<Verdict> {
    let u = t.witt("u", c.n + 1)?;
    expect_eq!("ghost_solve(ghost(u))", WittVector::ghost_solve(&u.ghost())?, u);
    Ok(Verdict::Pass)
}

pub(crate) fn frobenius_verschiebung(t: &mut Trial, c: &Ctx) -> Result<Verdict> {
    let u = t.witt("u", c.n + 1)?;
    expect_eq!("F(V(u))", u.verschiebung().frobenius()?, u.mult_pi());
    Ok(Verdict::Pass)
}

/// Component-wise `x_i^q mod pi` for the Witt Frobenius and the lateral
/// Frobenius.
pub(crate) fn frobenius_congruence(t: &mut Trial, c: &Ctx) -> Result<Verdict> {
    let q = t.ring.q();
    let u = t.witt("u", c.n + 1)?;
    let f = u.frobenius()?;
    for (i, (a, b)) in f.components().iter().zip(u.components()).enumerate() {
        if !a.congruent_mod_pi_pow(&b.pow(q), 1) {
            return Ok(Verdict::fail(&format!("F(u)_{i} = u_{i}^q mod pi"), a.encode(), b.pow(q).encode()));
        }
    }
    {
        let v = t.shifted("v", c.m, c.n)?;
        let out = c.ops.lateral(&v)?.include();
        let inp = v.include();
        for (i, (a, b)) in out.components().iter().zip(inp.components()).enumerate() {
            if !a.congruent_mod_pi_pow(&b.pow(q), 1) {
                let check = format!("F_[m](v)_{i} = v_{i}^q mod pi");
                return Ok(Verdict::fail(&check, a.encode(), b.pow(q).encode()));
            }
        }
    }
    Ok(Verdict::Pass)
}

pub(crate) fn delta_axioms(t: &mut Trial, _: &Ctx) -> Result<Verdict> {
    let q = t.ring.q();
    let x = t.element("x")?;
    let y = t.element("y")?;
    let one = RingElement::one(&t.ring);
    expect_eq!("delta(1)", delta(&one)?, RingElement::zero(&t.ring));
    expect_eq!("delta(x+y)", delta(&(&x + &y))?, &(&delta(&x)? + &delta(&y)?) + &c_pi(&x, &y)?);
    let (dx, dy) = (delta(&x)?, delta(&y)?);
    let rhs = &(&(&x.pow(q) * &dy) + &(&y.pow(q) * &dx)) + &(&dx * &dy).mul_pi_pow(1);
    expect_eq!("delta(xy)", delta(&(&x * &y))?, rhs);
    Ok(Verdict::Pass)
}

/// `F^(m+2) I(v) = F^(m+1) I(F_[m] v)`.
pub(crate) fn lateral_identity(t: &mut Trial, c: &Ctx) -> Result<Verdict> {
    let v = t.shifted("v", c.m, c.n)?;
    let lhs = v.include().frobenius_pow(c.m + 2)?;
    let rhs = c.ops.lateral(&v)?.include().frobenius_pow(c.m + 1)?;
    expect_eq!("F^(m+2) I = F^(m+1) I F_[m]", lhs, rhs);
    Ok(Verdict::Pass)
}

/// `I E_[m] = F I`.
pub(crate) fn shift_include(t: &mut Trial, c: &Ctx) -> Result<Verdict> {
    let v = t.shifted("v", c.m, c.n)?;
    expect_eq!("I E_[m] = F I", c.ops.shift_e(&v)?.include(), v.include().frobenius()?);
    Ok(Verdict::Pass)
}

/// Shifted ghost of `E_[m] v` is the shifted ghost of `v` without `z_0`.
pub(crate) fn shift_ghost(t: &mut Trial, c: &Ctx) -> Result<Verdict> {
    let v = t.shifted("v", c.m, c.n)?;
    let lhs = c.ops.shift_e(&v)?.shifted_ghost().entries().to_vec();
    let rhs = v.shifted_ghost().entries()[1..].to_vec();
    expect_eq!("ghost E_[m] = right shift of ghost", lhs, rhs);
    Ok(Verdict::Pass)
}

/// `E_[m] F_[m] = F_[m-1] E_[m]`.
pub(crate) fn shift_lateral_commute(t: &mut Trial, c: &Ctx) -> Result<Verdict> {
    let v = t.shifted("v", c.m, c.n)?;
    let lhs = c.ops.shift_e(&c.ops.lateral(&v)?)?;
    let rhs = c.ops.lateral(&c.ops.shift_e(&v)?)?;
    expect_eq!("E F = F E", lhs, rhs);
    Ok(Verdict::Pass)
}

pub(crate) fn mult_pi_scalar(t: &mut Trial, c: &Ctx) -> Result<Verdict> {
    let u = t.witt("u", c.n + 1)?;
    expect_eq!("mult_pi(u) = pi.u", u.mult_pi(), u.scalar_mul(&RingElement::pi(&t.ring))?);
    Ok(Verdict::Pass)
}

/// Additive kernel: `f_m` on tails is the Witt Frobenius.
pub(crate) fn kernel_lateral(t: &mut Trial, c: &Ctx) -> Result<Verdict> {
    let g = point_group(t, c);
    let ring = t.ring.clone();
    let p = t.point("t", &g, &ring, c.m, c.n)?;
    let tail = WittVector::new(&ring, p.coords().to_vec())?.frobenius()?;
    expect_eq!("f_m(t) = F(t)", p.lateral_f()?.coords().to_vec(), tail.components().to_vec());
    Ok(Verdict::Pass)
}

/// Shifted ghost of `iota_m(t)` is `<0^(m+1), pi^(m+1) w(t)>`.
pub(crate) fn kernel_ghost(t: &mut Trial, c: &Ctx) -> Result<Verdict> {
    let g = point_group(t, c);
    let ring = t.ring.clone();
    let p = t.point("t", &g, &ring, c.m, c.n)?;
    let w = WittVector::new(&ring, p.coords().to_vec())?.ghost();
    let mut rhs = vec![RingElement::zero(&ring); c.m + 1];
    rhs.extend(w.entries().iter().map(|x| x.mul_pi_pow(c.m as u64 + 1)));
    expect_eq!("ghost iota_m", p.embed().shifted_ghost().entries().to_vec(), rhs);
    Ok(Verdict::Pass)
}

/// `F iota_m = iota_(m-1) Phi_[m]`.
pub(crate) fn kernel_phi_iota(t: &mut Trial, c: &Ctx) -> Result<Verdict> {
    let g = point_group(t, c);
    let ring = t.ring.clone();
    let p = t.point("t", &g, &ring, c.m, c.n)?;
    expect_eq!("F iota = iota Phi", p.embed_witt().frobenius()?, p.phi_map()?.embed_witt());
    Ok(Verdict::Pass)
}

/// `F^(m+j) iota_m = F^(m+j-1) iota_m f_m` for `2 <= j <= n`.
pub(crate) fn kernel_lateral_ladder(t: &mut Trial, c: &Ctx) -> Result<Verdict> {
    let g = point_group(t, c);
    let ring = t.ring.clone();
    let p = t.point("t", &g, &ring, c.m, c.n)?;
    let f = p.lateral_f()?;
    for j in 2..=c.n {
        let lhs = p.embed_witt().frobenius_pow(c.m + j)?;
        let rhs = f.embed_witt().frobenius_pow(c.m + j - 1)?;
        expect_eq!(format!("F^(m+{j}) iota = F^(m+{}) iota f", j - 1), lhs, rhs);
    }
    Ok(Verdict::Pass)
}

/// `Psi^[m-1] Phi_[m] = pi Psi^[m]` and additivity of `Psi^[m]`.
pub(crate) fn psi_ladder(t: &mut Trial, c: &Ctx) -> Result<Verdict> {
    for s in settings(t, c) {
        let a = t.point(&format!("{} t", s.label), &s.group, &s.ring, c.m, 1)?;
        let b = t.point(&format!("{} s", s.label), &s.group, &s.ring, c.m, 1)?;
        let psi = |m: usize, x: &RingElement| psi_map(&s.group, m, x, s.prec, PsiPolicy::Strict);
        let (t0, s0) = (&a.coords()[0], &b.coords()[0]);
        let lhs = psi(c.m - 1, &a.phi_map()?.coords()[0])?;
        expect_eq!(format!("{}: Psi^[m-1] Phi_[m] = pi Psi^[m]", s.label), lhs, psi(c.m, t0)?.mul_pi_pow(1));
        let sum = a.add(&b)?;
        expect_eq!(format!("{}: Psi(t + s) = Psi(t) + Psi(s)", s.label), psi(c.m, &sum.coords()[0])?, &psi(c.m, t0)? + &psi(c.m, s0)?);
    }
    Ok(Verdict::Pass)
}

/// The difference character only depends on `t_0`.
pub(crate) fn difference_factorization(t: &mut Trial, c: &Ctx) -> Result<Verdict> {
    for s in settings(t, c) {
        let label = s.label;
        let p = t.point(&label, &s.group, &s.ring, c.m, c.n)?;
        let lhs = p.difference_character()?;
        let rhs = p.project(1)?.section(c.n)?.difference_character()?;
        expect_eq!(format!("{label}: difference(t) = difference(sigma u t)"), lhs, rhs);
    }
    Ok(Verdict::Pass)
}

/// Both columns of identity (i): `F V^(m+1) = V^m pi` and
/// `F iota_m = iota_(m-1) Phi_[m]`.
pub(crate) fn table_i(t: &mut Trial, c: &Ctx) -> Result<Verdict> {
    let u = t.witt("u", c.n)?;
    let lhs = u.verschiebung_pow(c.m + 1).frobenius()?;
    expect_eq!("F V^(m+1) = V^m pi", lhs, u.mult_pi().verschiebung_pow(c.m));
    let g = point_group(t, c);
    let ring = t.ring.clone();
    let p = t.point("t", &g, &ring, c.m, c.n)?;
    expect_eq!("phi iota_m = iota_(m-1) Phi_[m]", p.embed_witt().frobenius()?, p.phi_map()?.embed_witt());
    Ok(Verdict::Pass)
}

/// Identity (ii): `F^(m+n) V^(m+1) = F^(m+n-1) V^(m+1) F` and
/// `phi^(m+n) iota_m = phi^(m+n-1) iota_m f_m`.
pub(crate) fn table_ii(t: &mut Trial, c: &Ctx) -> Result<Verdict> {
    let (m, n) = (c.m, c.n);
    let u = t.witt("u", n)?;
    let lhs = u.verschiebung_pow(m + 1).frobenius_pow(m + n)?;
    let rhs = u.frobenius()?.verschiebung_pow(m + 1).frobenius_pow(m + n - 1)?;
    expect_eq!("F^(m+n) V^(m+1) = F^(m+n-1) V^(m+1) F", lhs, rhs);
    let g = point_group(t, c);
    let ring = t.ring.clone();
    let p = t.point("t", &g, &ring, m, n)?;
    let lhs = p.embed_witt().frobenius_pow(m + n)?;
    let rhs = p.lateral_f()?.embed_witt().frobenius_pow(m + n - 1)?;
    expect_eq!("phi^(m+n) iota = phi^(m+n-1) iota f", lhs, rhs);
    Ok(Verdict::Pass)
}

/// Identity (iii): `pi F = F pi` and `Phi_[m] f_m = f_(m-1) Phi_[m]`.
pub(crate) fn table_iii(t: &mut Trial, c: &Ctx) -> Result<Verdict> {
    let u = t.witt("u", c.n)?;
    expect_eq!("pi F = F pi", u.frobenius()?.mult_pi(), u.mult_pi().frobenius()?);
    let g = point_group(t, c);
    let ring = t.ring.clone();
    let p = t.point("t", &g, &ring, c.m, c.n)?;
    expect_eq!("Phi f = f Phi", p.lateral_f()?.phi_map()?, p.phi_map()?.lateral_f()?);
    Ok(Verdict::Pass)
}

/// `E_[m](0^(m+1); t_0) = (0^m; pi t_0)`.
pub(crate) fn shift_on_kernel(t: &mut Trial, c: &Ctx) -> Result<Verdict> {
    let t0 = t.element("t0")?;
    let ring = t.ring.clone();
    let v = ShiftedWittVector::zero_head(&ring, c.m, vec![t0.clone()])?;
    let want = ShiftedWittVector::zero_head(&ring, c.m - 1, vec![t0.mul_pi_pow(1)])?;
    expect_eq!("E_[m](0; t0) = (0; pi t0)", c.ops.shift_e(&v)?, want);
    Ok(Verdict::Pass)
}

pub(crate) fn truncation_frobenius(t: &mut Trial, c: &Ctx) -> Result<Verdict> {
    let u = t.witt("u", c.n + 1)?;
    expect_eq!("T F = F T", u.frobenius()?.truncate()?, u.truncate()?.frobenius()?);
    Ok(Verdict::Pass)
}

/// Arithmetic over `R / pi^prec` agrees with exact arithmetic on two
/// different lifts of the same inputs.
pub(crate) fn lift_independence(t: &mut Trial, c: &Ctx) -> Result<Verdict> {
    let trunc = t.ring.truncated(c.prec);
    let u = t.witt("u", c.n + 1)?;
    let v = t.witt("v", c.n + 1)?;
    let shift = t.witt("lift", c.n + 1)?;
    let u2 = WittVector::new(
        &t.ring,
        u.components().iter().zip(shift.components()).map(|(a, b)| a + &b.mul_pi_pow(c.prec)).collect(),
    )?;
    let down = |w: WittVector| w.to_ring(&trunc);
    let (ut, vt) = (down(u.clone())?, down(v.clone())?);
    expect_eq!("lifts agree", down(u2.clone())?, ut);
    expect_eq!("sum", ut.add(&vt)?, down(u.add(&v)?)?);
    expect_eq!("sum, other lift", ut.add(&vt)?, down(u2.add(&v)?)?);
    expect_eq!("product", ut.mul(&vt)?, down(u.mul(&v)?)?);
    expect_eq!("product, other lift", ut.mul(&vt)?, down(u2.mul(&v)?)?);
    Ok(Verdict::Pass)
}

pub(crate) fn universal_specialization(t: &mut Trial, c: &Ctx) -> Result<Verdict> {
    let u = t.witt("u", c.n + 1)?;
    let v = t.witt("v", c.n + 1)?;
    expect_eq!("S(u, v)", apply_universal(UniversalOp::Sum, &u, Some(&v))?, u.add(&v)?);
    expect_eq!("P(u, v)", apply_universal(UniversalOp::Prod, &u, Some(&v))?, u.mul(&v)?);
    Ok(Verdict::Pass)
}

/// The coordinate, ghost and polynomial paths of `E_[m]` agree.
pub(crate) fn shift_paths(t: &mut Trial, c: &Ctx) -> Result<Verdict> {
    let v = t.shifted("v", c.m, c.n)?;
    let primary = c.ops.shift_e(&v)?;
    expect_eq!("coordinates = ghost", primary, v.shift_e_via_ghost(0)?);
    expect_eq!("coordinates = polynomials", primary, v.shift_e_via_polynomials()?);
    Ok(Verdict::Pass)
}

/// `F_[m]` and `E_[m]` respect sums and products.
pub(crate) fn shifted_homomorphisms(t: &mut Trial, c: &Ctx) -> Result<Verdict> {
    let u = t.shifted("u", c.m, c.n)?;
    let v = t.shifted("v", c.m, c.n)?;
    let (s, p) = (u.add(&v)?, u.mul(&v)?);
    let f = |x: &ShiftedWittVector| c.ops.lateral(x);
    expect_eq!("F_[m](u+v)", f(&s)?, f(&u)?.add(&f(&v)?)?);
    expect_eq!("F_[m](uv)", f(&p)?, f(&u)?.mul(&f(&v)?)?);
    if c.m >= 1 {
        let e = |x: &ShiftedWittVector| c.ops.shift_e(x);
        expect_eq!("E_[m](u+v)", e(&s)?, e(&u)?.add(&e(&v)?)?);
        expect_eq!("E_[m](uv)", e(&p)?, e(&u)?.mul(&e(&v)?)?);
    }
    Ok(Verdict::Pass)
}

/// The kernel group law is commutative and associative with identity 0.
pub(crate) fn kernel_group(t: &mut Trial, c: &Ctx) -> Result<Verdict> {
    let ring = t.ring.clone();
    for s in settings(t, c) {
        let (label, group, target) = (s.label, s.group, s.ring);
        let a = t.point(&format!("{label} t"), &group, &target, c.m, c.n)?;
        let b = t.point(&format!("{label} s"), &group, &target, c.m, c.n)?;
        let d = t.point(&format!("{label} r"), &group, &target, c.m, c.n)?;
        let zero = KernelPoint::zero(&group, &ring, &target, c.m, c.n)?;
        expect_eq!(format!("{label}: t + 0"), a.add(&zero)?, a);
        expect_eq!(format!("{label}: t + s = s + t"), a.add(&b)?, b.add(&a)?);
        expect_eq!(format!("{label}: (t + s) + r = t + (s + r)"), a.add(&b)?.add(&d)?, a.add(&b.add(&d)?)?);
    }
    Ok(Verdict::Pass)
}
