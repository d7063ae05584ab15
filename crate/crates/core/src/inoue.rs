//! Real quadratic fields and the cusp picture: a totally positive unit `u`
//! acting on a lattice `H` gives a cusp monodromy, and the totally positive
//! cone of `H` modulo `u` matches the cusp's lattice cone modulo `M`.

use std::cmp::Ordering;
use std::collections::BTreeSet;
use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

use crate::cusp::{
    dual_with_cut, fundamental_points, monodromy, recover_with_conjugator, CuspError, CuspGeometry, CuspSequence,
    Quadrant,
};
use crate::hjcf::{mono_product, Mat2, Vec2};
use crate::quadratic::{rat_to_f64, QuadElement, QuadError};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum InoueError {
    #[error(transparent)]
    Quad(#[from] QuadError),
    #[error(transparent)]
    Cusp(#[from] CuspError),
    #[error("u has norm -1; pass u^2 instead")]
    NormMinusOne,
    #[error("u has norm {0}, not 1")]
    BadNorm(BigRational),
    #[error("u is not totally positive")]
    NotTotallyPositive,
    #[error("trace of u is {0}, need at least 3")]
    TraceTooSmall(BigRational),
    #[error("u does not preserve the lattice spanned by the basis")]
    NotStable,
    #[error("basis elements are linearly dependent")]
    DegenerateBasis,
    #[error("zero has no sign cone")]
    Zero,
    #[error("field file line {line}: {msg}")]
    Parse { line: usize, msg: String },
}

/// Signs of `(m, m')` under the two real embeddings.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum SignCone {
    PlusPlus,
    PlusMinus,
    MinusPlus,
    MinusMinus,
}

impl SignCone {
    pub fn meaning(&self) -> &'static str {
        match self {
            SignCone::PlusPlus => "this cusp",
            SignCone::PlusMinus | SignCone::MinusPlus => "dual cusp",
            SignCone::MinusMinus => "this cusp, reversed boundary orientation",
        }
    }
}

impl fmt::Display for SignCone {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            SignCone::PlusPlus => "(+,+)",
            SignCone::PlusMinus => "(+,-)",
            SignCone::MinusPlus => "(-,+)",
            SignCone::MinusMinus => "(-,-)",
        };
        f.write_str(s)
    }
}

pub fn sign_cone(m: &QuadElement) -> Result<SignCone, InoueError> {
    match (m.sign(), m.conj_sign()) {
        (Ordering::Equal, _) | (_, Ordering::Equal) => Err(InoueError::Zero),
        (Ordering::Greater, Ordering::Greater) => Ok(SignCone::PlusPlus),
        (Ordering::Greater, Ordering::Less) => Ok(SignCone::PlusMinus),
        (Ordering::Less, Ordering::Greater) => Ok(SignCone::MinusPlus),
        (Ordering::Less, Ordering::Less) => Ok(SignCone::MinusMinus),
    }
}

/// A lattice `H = Z e1 + Z e2` in a real quadratic field.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Lattice {
    pub e1: QuadElement,
    pub e2: QuadElement,
}

impl Lattice {
    pub fn new(e1: QuadElement, e2: QuadElement) -> Result<Self, InoueError> {
        let det = &e1.a * &e2.b - &e2.a * &e1.b;
        if det.is_zero() {
            return Err(InoueError::DegenerateBasis);
        }
        Ok(Lattice { e1, e2 })
    }

    /// Rational coordinates of `x` in the basis.
    pub fn coords(&self, x: &QuadElement) -> (BigRational, BigRational) {
        let (a1, b1, a2, b2) = (&self.e1.a, &self.e1.b, &self.e2.a, &self.e2.b);
        let det = a1 * b2 - a2 * b1;
        let s = (&x.a * b2 - a2 * &x.b) / &det;
        let t = (a1 * &x.b - &x.a * b1) / &det;
        (s, t)
    }

    pub fn int_coords(&self, x: &QuadElement) -> Option<Vec2> {
        let (s, t) = self.coords(x);
        (s.is_integer() && t.is_integer()).then(|| Vec2 { x: s.to_integer(), y: t.to_integer() })
    }

    pub fn element(&self, w: &Vec2) -> QuadElement {
        let s = QuadElement::rational(BigRational::from_integer(w.x.clone()), self.e1.d.clone());
        let t = QuadElement::rational(BigRational::from_integer(w.y.clone()), self.e1.d.clone());
        s.try_mul(&self.e1)
            .and_then(|a| t.try_mul(&self.e2).and_then(|b| a.try_add(&b)))
            .expect("one field")
    }
}

/// Matrix of multiplication by `u` on the lattice: column `j` holds the
/// coordinates of `u e_j`.
pub fn quad_mult_matrix(u: &QuadElement, basis: &Lattice) -> Result<Mat2, InoueError> {
    let n = u.norm();
    if n == -BigRational::one() {
        return Err(InoueError::NormMinusOne);
    }
    if !n.is_one() {
        return Err(InoueError::BadNorm(n));
    }
    if u.sign() != Ordering::Greater || u.conj_sign() != Ordering::Greater {
        return Err(InoueError::NotTotallyPositive);
    }
    let tr = u.trace();
    if tr < BigRational::from_integer(3.into()) {
        return Err(InoueError::TraceTooSmall(tr));
    }
    let c1 = basis.int_coords(&u.try_mul(&basis.e1)?).ok_or(InoueError::NotStable)?;
    let c2 = basis.int_coords(&u.try_mul(&basis.e2)?).ok_or(InoueError::NotStable)?;
    Ok(Mat2 { p: c1.x, q: c2.x, r: c1.y, s: c2.y })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Orientation {
    /// The totally positive cone is the cusp's own cone.
    Direct,
    /// It is the complementary cone, reached from the dual cusp through `T`.
    ViaDual,
}

impl fmt::Display for Orientation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Orientation::Direct => "direct",
            Orientation::ViaDual => "via_dual",
        })
    }
}

#[derive(Clone, Debug)]
pub struct InoueReport {
    pub d: BigInt,
    pub m_u: Mat2,
    /// Sequence recovered from `M_u`.
    pub recovered: CuspSequence,
    /// Sequence whose cone is the totally positive cone.
    pub effective: CuspSequence,
    pub orientation: Orientation,
    /// Lattice coordinates are `frame * v` for cusp lattice vectors `v`.
    pub frame: Mat2,
    pub components: usize,
    pub checks: Vec<(String, bool)>,
    pub witness: Option<String>,
}

impl InoueReport {
    pub fn all_pass(&self) -> bool {
        self.checks.iter().all(|(_, ok)| *ok)
    }
}

fn check(report: &mut InoueReport, name: &str, ok: bool, witness: impl FnOnce() -> String) {
    if !ok && report.witness.is_none() {
        report.witness = Some(format!("{name}: {}", witness()));
    }
    report.checks.push((name.to_string(), ok));
}

/// Picks a frame `F` with `M_u F = F M(c)` sending the cone of `c` onto
/// the totally positive cone, trying `c` itself and then its dual.
fn find_frame(
    lattice: &Lattice,
    m_u: &Mat2,
) -> Result<(CuspSequence, CuspSequence, Orientation, Mat2), InoueError> {
    let (c, p) = recover_with_conjugator(m_u)?;
    let p_inv = p.inverse_unimodular().expect("conjugator is unimodular");
    let probe = Vec2::new(0, 1);
    let positive = |f: &Mat2| -> Result<Option<Mat2>, InoueError> {
        for f in [f.clone(), f.neg()] {
            if sign_cone(&lattice.element(&f.apply(&probe)))? == SignCone::PlusPlus {
                return Ok(Some(f));
            }
        }
        Ok(None)
    };
    if let Some(f) = positive(&p_inv)? {
        return Ok((c.clone(), c, Orientation::Direct, f));
    }
    let (rot, dual) = dual_with_cut(&c);
    let shift = (0..c.len()).find(|&r| c.rotated(r) == rot).expect("rotation of c");
    // M(rot) = A^-1 M(c) A with A the product of the first `shift` factors.
    let a = mono_product(&c.terms()[..shift]);
    let q_inv = &p_inv * &a;
    let via = &q_inv * &crate::cusp::duality_t();
    match positive(&via)? {
        Some(f) => Ok((c, dual, Orientation::ViaDual, f)),
        None => Err(InoueError::Cusp(CuspError::BadMatrix(Box::new(m_u.clone()), "no cone maps to the totally positive cone"))),
    }
}

pub fn inoue_cross_check(lattice: &Lattice, u: &QuadElement, n: u64) -> Result<InoueReport, InoueError> {
    let m_u = quad_mult_matrix(u, lattice)?;
    let (recovered, effective, orientation, frame) = find_frame(lattice, &m_u)?;
    let mc = monodromy(&effective);
    let geo = CuspGeometry::new(&effective);
    let frame_inv_det = frame.det();
    let mut report = InoueReport {
        d: lattice.e1.d.clone(),
        m_u: m_u.clone(),
        recovered,
        effective: effective.clone(),
        orientation,
        frame: frame.clone(),
        components: 0,
        checks: Vec::new(),
        witness: None,
    };
    check(&mut report, "frame is unimodular", frame_inv_det.abs().is_one(), || format!("det {frame_inv_det}"));
    let lhs = &m_u * &frame;
    let rhs = &frame * &mc;
    check(&mut report, "M_u F = F M", lhs == rhs, || format!("{lhs} vs {rhs}"));
    let to_cusp = |w: &Vec2| -> Vec2 {
        // F^-1 w with det F = +-1
        let x = &frame.s * &w.x - &frame.q * &w.y;
        let y = -&frame.r * &w.x + &frame.p * &w.y;
        if frame_inv_det.is_one() { Vec2 { x, y } } else { Vec2 { x: -x, y: -y } }
    };

    let points = fundamental_points(&effective, n);
    report.components = points.len();
    let mut bad_sign = None;
    let mut bad_action = None;
    let mut reps = BTreeSet::new();
    let mut bad_orbit = None;
    for (_, v) in &points {
        let w = frame.apply(v);
        let x = lattice.element(&w);
        if sign_cone(&x)? != SignCone::PlusPlus && bad_sign.is_none() {
            bad_sign = Some(format!("{x}"));
        }
        let ux = u.try_mul(&x)?;
        if lattice.int_coords(&ux) != Some(m_u.apply(&w)) && bad_action.is_none() {
            bad_action = Some(format!("u*{x}"));
        }
        reps.insert(v.clone());
        // every element of the u-orbit reduces back to v
        let mut y = x.clone();
        let u_inv = u.inverse()?;
        for _ in 0..2 {
            y = y.try_mul(&u_inv)?;
        }
        for _ in 0..5 {
            let wy = lattice.int_coords(&y).expect("lattice is u-stable");
            let (rep, _) = geo.reduce(&to_cusp(&wy))?;
            if &rep != v && bad_orbit.is_none() {
                bad_orbit = Some(format!("{y} reduces to {rep}, expected {v}"));
            }
            y = y.try_mul(u)?;
        }
    }
    let sign_ok = bad_sign.is_none();
    check(&mut report, "components are totally positive", sign_ok, || bad_sign.unwrap_or_default());
    let action_ok = bad_action.is_none();
    check(&mut report, "u acts as M_u", action_ok, || bad_action.unwrap_or_default());
    let orbit_ok = bad_orbit.is_none() && reps.len() == points.len();
    check(&mut report, "orbits biject with fundamental points", orbit_ok, || bad_orbit.unwrap_or_default());

    // The exact cone test of the cusp module and the sign cones agree on a
    // box of lattice elements, through one fixed pairing of the four cones.
    let mut pairing: Vec<(Quadrant, SignCone)> = Vec::new();
    let mut consistent = true;
    let mut witness = String::new();
    let r = 6i64;
    for s in -r..=r {
        for t in -r..=r {
            if s == 0 && t == 0 {
                continue;
            }
            let w = Vec2::new(s, t);
            let quad = geo.quadrant(&to_cusp(&w))?;
            let sc = sign_cone(&lattice.element(&w))?;
            match pairing.iter().find(|(q, _)| *q == quad) {
                Some((_, known)) if *known != sc => {
                    consistent = false;
                    witness = format!("{w}: {quad} vs {sc}");
                }
                Some(_) => {}
                None => pairing.push((quad, sc)),
            }
        }
    }
    let expected_cone = pairing.iter().find(|(q, _)| *q == Quadrant::Cone).map(|(_, s)| *s);
    let injective = pairing.iter().map(|(_, s)| *s).collect::<BTreeSet<_>>().len() == pairing.len();
    let ok = consistent && injective && expected_cone == Some(SignCone::PlusPlus);
    check(&mut report, "cusp cone test matches sign cones", ok, || witness);
    Ok(report)
}

/// Field data file: `d=<int>`, `basis=<quad> <quad>`, `u=<quad>`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FieldData {
    pub d: BigInt,
    pub lattice: Lattice,
    pub u: QuadElement,
}

pub fn parse_field_file(text: &str) -> Result<FieldData, InoueError> {
    let err = |line: usize, msg: &str| InoueError::Parse { line, msg: msg.to_string() };
    let mut d: Option<BigInt> = None;
    let mut basis: Option<(usize, String)> = None;
    let mut u: Option<(usize, String)> = None;
    for (i, raw) in text.lines().enumerate() {
        let ln = i + 1;
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let (key, val) = line.split_once('=').ok_or_else(|| err(ln, "expected key=value"))?;
        match key.trim() {
            "d" => d = Some(val.trim().parse().map_err(|_| err(ln, "bad d"))?),
            "basis" => basis = Some((ln, val.trim().to_string())),
            "u" => u = Some((ln, val.trim().to_string())),
            other => return Err(err(ln, &format!("unknown key `{other}`"))),
        }
    }
    let d = d.ok_or_else(|| err(0, "missing d"))?;
    if !d.is_positive() {
        return Err(err(0, "d must be positive"));
    }
    let (bl, b) = basis.ok_or_else(|| err(0, "missing basis"))?;
    let parts: Vec<&str> = b.split_whitespace().collect();
    if parts.len() != 2 {
        return Err(err(bl, "basis needs two elements"));
    }
    let e1 = QuadElement::parse(parts[0], d.clone()).map_err(|e| err(bl, &e.to_string()))?;
    let e2 = QuadElement::parse(parts[1], d.clone()).map_err(|e| err(bl, &e.to_string()))?;
    let (ul, us) = u.ok_or_else(|| err(0, "missing u"))?;
    let u = QuadElement::parse(&us, d.clone()).map_err(|e| err(ul, &e.to_string()))?;
    Ok(FieldData { d, lattice: Lattice::new(e1, e2)?, u })
}

/// A holomorphic arc `w -> (m w + sum a_n e(n w), m' w + sum b_n e(n w))`
/// with finitely many Fourier terms; coefficients are complex rationals
/// given as `(re, im)`.
#[derive(Clone, Debug)]
pub struct InoueArcSpec {
    pub m: QuadElement,
    pub a: Vec<(BigRational, BigRational)>,
    pub b: Vec<(BigRational, BigRational)>,
}

fn eval(slope: f64, coeffs: &[(BigRational, BigRational)], re: f64, im: f64) -> (f64, f64) {
    let mut out = (slope * re, slope * im);
    for (n, (cr, ci)) in coeffs.iter().enumerate() {
        let (cr, ci) = (rat_to_f64(cr), rat_to_f64(ci));
        // e^{2 pi i n w} with w = re + i im
        let t = 2.0 * std::f64::consts::PI * n as f64;
        let mag = (-t * im).exp();
        let (er, ei) = (mag * (t * re).cos(), mag * (t * re).sin());
        out.0 += cr * er - ci * ei;
        out.1 += cr * ei + ci * er;
    }
    out
}

/// Average of `phi(w + 1) - phi(w)` over sample points; a numeric check
/// that the translation class of the arc is `(m, m')`.
pub fn arc_translation_class(spec: &InoueArcSpec, samples: usize) -> (f64, f64) {
    let (m1, m2) = spec.m.embeddings_f64();
    let samples = samples.max(2);
    let (mut s1, mut s2) = (0.0, 0.0);
    for k in 0..samples {
        let re = k as f64 / samples as f64;
        let im = 0.05 + 0.1 * k as f64 / samples as f64;
        let d1 = eval(m1, &spec.a, re + 1.0, im).0 - eval(m1, &spec.a, re, im).0;
        let d2 = eval(m2, &spec.b, re + 1.0, im).0 - eval(m2, &spec.b, re, im).0;
        s1 += d1;
        s2 += d2;
    }
    (s1 / samples as f64, s2 / samples as f64)
}
