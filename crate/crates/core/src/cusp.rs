//! Cusp singularities: monodromy, the fan of `v` vectors, the cone of the
//! cusp and its lattice points modulo monodromy, and dual cusps.

use std::cmp::Ordering;
use std::collections::HashMap;
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};
use thiserror::Error;

use crate::arc::{ArcComponent, ComponentKind, FamilyTag, HomotopyType, WindingClass};
use crate::hjcf::{mono_product, Mat2, Vec2};
use crate::quadratic::surd_sign_int;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CuspError {
    #[error("invalid cusp sequence {0:?}: need every b >= 2 and some b >= 3")]
    Invalid(Vec<i64>),
    #[error("the zero vector has no cone position")]
    ZeroVector,
    #[error("vector {0} is not in the cone of the cusp")]
    NotInCone(Vec2),
    #[error("matrix {0} is not a cusp monodromy: {1}")]
    BadMatrix(Box<Mat2>, &'static str),
}

/// Cyclic sequence `(b1, ..., bk)` of a cusp resolution cycle.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct CuspSequence(Vec<i64>);

impl CuspSequence {
    pub fn new(b: Vec<i64>) -> Result<Self, CuspError> {
        if b.is_empty() || b.iter().any(|&x| x < 2) || b.iter().all(|&x| x == 2) {
            return Err(CuspError::Invalid(b));
        }
        Ok(CuspSequence(b))
    }

    pub fn terms(&self) -> &[i64] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// `b_i` with 1-based cyclic index.
    pub fn b(&self, i: i64) -> i64 {
        let k = self.0.len() as i64;
        self.0[(i - 1).rem_euclid(k) as usize]
    }

    pub fn rotated(&self, by: usize) -> CuspSequence {
        let mut b = self.0.clone();
        let k = b.len();
        b.rotate_left(by % k);
        CuspSequence(b)
    }

    /// Lexicographically smallest rotation.
    pub fn canonical(&self) -> CuspSequence {
        (0..self.len()).map(|r| self.rotated(r)).min_by(|a, b| a.0.cmp(&b.0)).expect("nonempty")
    }

    pub fn is_rotation_of(&self, other: &CuspSequence) -> bool {
        self.len() == other.len() && self.canonical() == other.canonical()
    }
}

impl fmt::Display for CuspSequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|b| b.to_string()).collect();
        write!(f, "({})", parts.join(","))
    }
}

pub fn parse_sequence(text: &str) -> Result<CuspSequence, CuspError> {
    let b: Result<Vec<i64>, _> = text.split(',').map(|t| t.trim().parse::<i64>()).collect();
    match b {
        Ok(b) => CuspSequence::new(b),
        Err(_) => Err(CuspError::Invalid(Vec::new())),
    }
}

pub fn monodromy(c: &CuspSequence) -> Mat2 {
    mono_product(c.terms())
}

/// `v_lo, ..., v_hi`.
pub fn v_sequence(c: &CuspSequence, lo: i64, hi: i64) -> Vec<Vec2> {
    let mut fan = Fan::new(c);
    fan.seek(lo);
    let mut out = Vec::new();
    for _ in lo..=hi {
        out.push(fan.cur.clone());
        fan.forward();
    }
    out
}

/// A sliding window `(v_i, v_{i+1})` over the fan.
struct Fan<'a> {
    c: &'a CuspSequence,
    i: i64,
    cur: Vec2,
    next: Vec2,
}

impl<'a> Fan<'a> {
    fn new(c: &'a CuspSequence) -> Self {
        Fan { c, i: 0, cur: Vec2::new(0, 1), next: Vec2::new(1, 0) }
    }

    fn forward(&mut self) {
        let b = BigInt::from(self.c.b(self.i + 1));
        let after = self.next.scale(&b).sub(&self.cur);
        self.cur = std::mem::replace(&mut self.next, after);
        self.i += 1;
    }

    fn backward(&mut self) {
        let b = BigInt::from(self.c.b(self.i));
        let before = self.cur.scale(&b).sub(&self.next);
        self.next = std::mem::replace(&mut self.cur, before);
        self.i -= 1;
    }

    fn seek(&mut self, i: i64) {
        while self.i < i {
            self.forward();
        }
        while self.i > i {
            self.backward();
        }
    }
}

/// `a + b sqrt(D)` with integer coefficients.
#[derive(Clone, Debug, PartialEq, Eq)]
struct Surd {
    a: BigInt,
    b: BigInt,
}

impl Surd {
    fn sign(&self, d: &BigInt) -> Ordering {
        surd_sign_int(&self.a, &self.b, d)
    }
}

/// Which of the four cones cut out by the eigenlines a vector lies in.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Quadrant {
    Cone,
    ConeMinus,
    DualCone,
    DualConeMinus,
}

impl fmt::Display for Quadrant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Quadrant::Cone => "Cone",
            Quadrant::ConeMinus => "ConeMinus",
            Quadrant::DualCone => "DualCone",
            Quadrant::DualConeMinus => "DualConeMinus",
        };
        f.write_str(s)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum ConeLabel {
    /// `m v_i`, index taken mod k.
    RayOfV { i: usize, m: BigInt },
    /// `mi v_i + mi1 v_{i+1}`, both coefficients positive.
    Sector { i: usize, mi: BigInt, mi1: BigInt },
    ConeMinus,
    DualCone,
    DualConeMinus,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConePosition {
    pub label: ConeLabel,
    pub witness: Vec2,
}

impl fmt::Display for ConeLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ConeLabel::RayOfV { i, m } => write!(f, "{m}*v{i}"),
            ConeLabel::Sector { i, mi, mi1 } => write!(f, "{mi}*v{i} + {mi1}*v{}", i + 1),
            ConeLabel::ConeMinus => f.write_str("this cusp, reversed boundary orientation"),
            ConeLabel::DualCone | ConeLabel::DualConeMinus => f.write_str("dual cusp"),
        }
    }
}

impl ConePosition {
    pub fn describe(&self) -> String {
        self.label.to_string()
    }
}

/// Exact eigen-geometry of a cusp monodromy.
pub struct CuspGeometry {
    pub seq: CuspSequence,
    pub m: Mat2,
    m_inv: Mat2,
    /// `trace^2 - 4`.
    pub disc: BigInt,
    v1: (Surd, Surd),
    v2: (Surd, Surd),
    v12_sign: Ordering,
}

impl CuspGeometry {
    pub fn new(c: &CuspSequence) -> Self {
        let m = monodromy(c);
        let m_inv = m.inverse_unimodular().expect("monodromy has det 1");
        let t = m.trace();
        let disc = &t * &t - BigInt::from(4);
        let sg = m.r.signum();
        let ps = &m.p - &m.s;
        let two_r = BigInt::from(2) * &m.r;
        // V1 in the fourth quadrant, V2 in the second.
        let v1 = (Surd { a: -&sg * &ps, b: -&sg }, Surd { a: -&sg * &two_r, b: BigInt::zero() });
        let v2 = (Surd { a: &sg * &ps, b: -&sg }, Surd { a: &sg * &two_r, b: BigInt::zero() });
        let mut g = CuspGeometry { seq: c.clone(), m, m_inv, disc, v1, v2, v12_sign: Ordering::Equal };
        let (x1, y1) = g.v1.clone();
        let (x2, y2) = g.v2.clone();
        // det(V1, V2) = x1 y2 - y1 x2; the y's are rational.
        let det = Surd { a: &x1.a * &y2.a - &y1.a * &x2.a, b: &x1.b * &y2.a - &y1.a * &x2.b };
        g.v12_sign = det.sign(&g.disc);
        g
    }

    pub fn k(&self) -> usize {
        self.seq.len()
    }

    /// Sign of `det(w, V)`.
    fn det_sign(&self, w: &Vec2, v: &(Surd, Surd)) -> Ordering {
        // w.x * v.y - w.y * v.x with v.y rational
        let a = &w.x * &v.1.a - &w.y * &v.0.a;
        let b = -&w.y * &v.0.b;
        surd_sign_int(&a, &b, &self.disc)
    }

    fn mul_sign(a: Ordering, b: Ordering) -> Ordering {
        match (a, b) {
            (Ordering::Equal, _) | (_, Ordering::Equal) => Ordering::Equal,
            (x, y) if x == y => Ordering::Greater,
            _ => Ordering::Less,
        }
    }

    /// Signs of the coefficients of `w = alpha V1 + beta V2`.
    pub fn eigen_signs(&self, w: &Vec2) -> (Ordering, Ordering) {
        let alpha = Self::mul_sign(self.det_sign(w, &self.v2), self.v12_sign);
        // det(V1, w) = -det(w, V1)
        let beta = Self::mul_sign(self.det_sign(w, &self.v1).reverse(), self.v12_sign);
        (alpha, beta)
    }

    pub fn quadrant(&self, w: &Vec2) -> Result<Quadrant, CuspError> {
        if w.is_zero() {
            return Err(CuspError::ZeroVector);
        }
        let (a, b) = self.eigen_signs(w);
        assert!(a != Ordering::Equal && b != Ordering::Equal, "lattice point {w} on an eigenline");
        Ok(match (a, b) {
            (Ordering::Greater, Ordering::Greater) => Quadrant::Cone,
            (Ordering::Less, Ordering::Less) => Quadrant::ConeMinus,
            (Ordering::Less, _) => Quadrant::DualCone,
            _ => Quadrant::DualConeMinus,
        })
    }

    /// For `w` in the cone: `(i, a, c)` with `w = a v_i + c v_{i+1}`,
    /// `a > 0`, `c >= 0`.
    fn locate(&self, w: &Vec2) -> (i64, BigInt, BigInt) {
        let mut fan = Fan::new(&self.seq);
        loop {
            let a = fan.next.det(w);
            let c = w.det(&fan.cur);
            if a.is_positive() && !c.is_negative() {
                return (fan.i, a, c);
            }
            if !a.is_positive() {
                fan.forward();
            } else {
                fan.backward();
            }
        }
    }

    pub fn position(&self, w: &Vec2) -> Result<ConePosition, CuspError> {
        let label = match self.quadrant(w)? {
            Quadrant::ConeMinus => ConeLabel::ConeMinus,
            Quadrant::DualCone => ConeLabel::DualCone,
            Quadrant::DualConeMinus => ConeLabel::DualConeMinus,
            Quadrant::Cone => {
                let (i, a, c) = self.locate(w);
                let i = i.rem_euclid(self.k() as i64) as usize;
                if c.is_zero() {
                    ConeLabel::RayOfV { i, m: a }
                } else {
                    ConeLabel::Sector { i, mi: a, mi1: c }
                }
            }
        };
        Ok(ConePosition { label, witness: w.clone() })
    }

    /// `(M^l w, l)` with `M^l w` in the fundamental sector.
    pub fn reduce(&self, w: &Vec2) -> Result<(Vec2, i64), CuspError> {
        if self.quadrant(w)? != Quadrant::Cone {
            return Err(CuspError::NotInCone(w.clone()));
        }
        let (i, _, _) = self.locate(w);
        let l = -Integer::div_floor(&i, &(self.k() as i64));
        let step = if l >= 0 { &self.m } else { &self.m_inv };
        let mut rep = w.clone();
        for _ in 0..l.unsigned_abs() {
            rep = step.apply(&rep);
        }
        Ok((rep, l))
    }
}

pub fn cone_position(w: &Vec2, c: &CuspSequence) -> Result<ConePosition, CuspError> {
    CuspGeometry::new(c).position(w)
}

pub fn reduce_mod_monodromy(w: &Vec2, c: &CuspSequence) -> Result<(Vec2, i64), CuspError> {
    CuspGeometry::new(c).reduce(w)
}

/// Lattice points of the fundamental sector with sector mass at most `n`,
/// ordered by sector index, then mass.
pub fn fundamental_points(c: &CuspSequence, n: u64) -> Vec<(ConeLabel, Vec2)> {
    let vs = v_sequence(c, 0, c.len() as i64);
    let mut out = Vec::new();
    for i in 0..c.len() {
        for m in 1..=n {
            let m = BigInt::from(m);
            out.push((ConeLabel::RayOfV { i, m: m.clone() }, vs[i].scale(&m)));
        }
        for total in 2..=n {
            for a in (1..total).rev() {
                let (a, b) = (BigInt::from(a), BigInt::from(total - a));
                let w = vs[i].scale(&a).add(&vs[i + 1].scale(&b));
                out.push((ConeLabel::Sector { i, mi: a, mi1: b }, w));
            }
        }
    }
    out
}

/// Names of the cycle curves `E_1..E_k` and, per sector `i`, the edge
/// joining `E_i` and `E_{i+1}` (with `E_0 = E_k`).
pub struct CuspNames {
    pub curves: Vec<String>,
    pub sector_edges: Vec<usize>,
}

impl CuspNames {
    pub fn standard(k: usize) -> Self {
        CuspNames { curves: (1..=k).map(|j| format!("E{j}")).collect(), sector_edges: (0..k).collect() }
    }

    /// Name of `E_i` for `i` in `0..=k`.
    fn curve(&self, i: usize) -> &str {
        let k = self.curves.len();
        &self.curves[(i + k - 1) % k]
    }
}

pub fn enumerate_cusp_components_named(c: &CuspSequence, n: u64, names: &CuspNames) -> Vec<ArcComponent> {
    fundamental_points(c, n)
        .into_iter()
        .map(|(label, w)| {
            let (kind, homotopy) = match label {
                ConeLabel::RayOfV { i, m } => (
                    ComponentKind::CurveInterior { vertex: names.curve(i).to_string(), m },
                    // two node branches on a rational curve
                    HomotopyType::CircleTimesWedge(1),
                ),
                ConeLabel::Sector { i, mi, mi1 } => (
                    ComponentKind::NodePoint {
                        edge: names.sector_edges[i],
                        u: names.curve(i).to_string(),
                        v: names.curve(i + 1).to_string(),
                        mu: mi,
                        mv: mi1,
                    },
                    HomotopyType::TwoTorus,
                ),
                _ => unreachable!("fundamental points lie in the cone"),
            };
            ArcComponent { kind, winding: WindingClass::CuspLattice(w), homotopy, family: FamilyTag::NotApplicable }
        })
        .collect()
}

pub fn enumerate_cusp_components(c: &CuspSequence, n: u64) -> Vec<ArcComponent> {
    enumerate_cusp_components_named(c, n, &CuspNames::standard(c.len()))
}

/// The rotation of `c` ending in a term `>= 3` (fewest steps) together
/// with its dual, before canonical rotation.
pub fn dual_with_cut(c: &CuspSequence) -> (CuspSequence, CuspSequence) {
    let k = c.len();
    let shift = (0..k).find(|&r| c.rotated(r).0[k - 1] >= 3).expect("some term is at least 3");
    let rot = c.rotated(shift);
    let mut dual = Vec::new();
    let mut twos = 0i64;
    for &b in &rot.0 {
        if b == 2 {
            twos += 1;
            continue;
        }
        // block 2^(k*-1), k+2  ->  k*+2, 2^(k-1)
        let kstar = twos + 1;
        dual.push(kstar + 2);
        dual.extend(std::iter::repeat_n(2, (b - 3) as usize));
        twos = 0;
    }
    (rot, CuspSequence(dual))
}

pub fn dual_sequence(c: &CuspSequence) -> CuspSequence {
    dual_with_cut(c).1.canonical()
}

/// The matrix `T` intertwining a cusp monodromy with its dual's.
pub fn duality_t() -> Mat2 {
    Mat2::new(-1, -1, 1, 2)
}

#[derive(Clone, Debug)]
pub struct DualityReport {
    pub b: CuspSequence,
    pub b_star: CuspSequence,
    pub m: Mat2,
    pub m_star: Mat2,
    pub mt: Mat2,
    pub tm_star: Mat2,
    pub t_identity_holds: bool,
    pub traces_equal: bool,
}

pub fn check_duality(c: &CuspSequence) -> DualityReport {
    let (b, b_star) = dual_with_cut(c);
    let m = monodromy(&b);
    let m_star = monodromy(&b_star);
    let t = duality_t();
    let mt = &m * &t;
    let tm_star = &t * &m_star;
    DualityReport {
        t_identity_holds: mt == tm_star,
        traces_equal: m.trace() == m_star.trace(),
        b,
        b_star,
        m,
        m_star,
        mt,
        tm_star,
    }
}

/// Recovers the cusp sequence of a hyperbolic matrix together with a
/// conjugator `P` such that `P M P^-1 = monodromy(c)`.
pub fn recover_with_conjugator(m: &Mat2) -> Result<(CuspSequence, Mat2), CuspError> {
    if !m.det().is_one() {
        return Err(CuspError::BadMatrix(Box::new(m.clone()), "determinant is not 1"));
    }
    let tau = m.trace();
    if tau < BigInt::from(3) {
        return Err(CuspError::BadMatrix(Box::new(m.clone()), "trace below 3"));
    }
    let disc = &tau * &tau - BigInt::from(4);
    let root = disc.sqrt();
    // Attracting fixed point y = (P + sqrt D)/Q of y -> (p y - q)/(-r y + s),
    // the action of M in the coordinate y = -x1/x2.
    let mut state = (&m.p - &m.s, BigInt::from(-2) * &m.r);
    let mut seen: HashMap<(BigInt, BigInt), usize> = HashMap::new();
    let mut terms: Vec<i64> = Vec::new();
    let start = loop {
        if let Some(&j) = seen.get(&state) {
            break j;
        }
        seen.insert(state.clone(), terms.len());
        let (p, q) = &state;
        let floor = if q.is_positive() {
            (p + &root).div_floor(q)
        } else {
            (-p - &root - BigInt::one()).div_floor(&-q)
        };
        let b = floor + BigInt::one();
        let p_next = &b * q - p;
        let q_next = (&p_next * &p_next - &disc) / q;
        terms.push(b.to_i64().ok_or(CuspError::BadMatrix(Box::new(m.clone()), "term overflow"))?);
        state = (p_next, q_next);
    };
    let period = terms[start..].to_vec();
    let base = mono_product(&period);
    let mut power = base.clone();
    let mut seq = period.clone();
    while power.trace() < tau {
        power = &power * &base;
        seq.extend_from_slice(&period);
    }
    if power.trace() != tau {
        return Err(CuspError::BadMatrix(Box::new(m.clone()), "not conjugate to a power of its primitive root"));
    }
    let c = CuspSequence::new(seq).map_err(|_| CuspError::BadMatrix(Box::new(m.clone()), "degenerate period"))?;
    // G maps y to y_start; in x coordinates it is conjugated by diag(-1, 1).
    let mut g = Mat2::identity();
    for &b in &terms[..start] {
        g = &Mat2::new(0, 1, -1, b) * &g;
    }
    let conj = Mat2::new(g.p.clone(), -&g.q, -&g.r, g.s.clone());
    let check = &(&conj * m) * &conj.inverse_unimodular().expect("unimodular");
    if check != monodromy(&c) {
        return Err(CuspError::BadMatrix(Box::new(m.clone()), "conjugator check failed"));
    }
    Ok((c, conj))
}

pub fn recover_sequence(m: &Mat2) -> Result<CuspSequence, CuspError> {
    recover_with_conjugator(m).map(|(c, _)| c)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn seq(b: &[i64]) -> CuspSequence {
        CuspSequence::new(b.to_vec()).unwrap()
    }

    fn big(n: i64) -> BigInt {
        BigInt::from(n)
    }

    #[test]
    fn monodromies() {
        assert_eq!(monodromy(&seq(&[3])), Mat2::new(3, 1, -1, 0));
        assert_eq!(monodromy(&seq(&[3, 3, 3])), Mat2::new(21, 8, -8, -3));
        assert!(CuspSequence::new(vec![2, 2]).is_err());
        assert!(CuspSequence::new(vec![1, 5]).is_err());
    }

    #[test]
    fn fan() {
        let c = seq(&[3]);
        assert_eq!(v_sequence(&c, 0, 2), vec![Vec2::new(0, 1), Vec2::new(1, 0), Vec2::new(3, -1)]);
        let c = seq(&[3, 3, 3]);
        let vs = v_sequence(&c, -4, 7);
        for w in vs.windows(2) {
            assert_eq!(w[1].det(&w[0]), big(1));
        }
        assert_eq!(v_sequence(&c, 3, 3)[0], Vec2::new(8, -3));
        let m = monodromy(&c);
        for i in -4..=4 {
            assert_eq!(m.apply(&v_sequence(&c, i, i)[0]), v_sequence(&c, i + 3, i + 3)[0]);
        }
    }

    #[test]
    fn positions() {
        let c = seq(&[3]);
        assert_eq!(cone_position(&Vec2::new(0, 5), &c).unwrap().label, ConeLabel::RayOfV { i: 0, m: big(5) });
        assert_eq!(
            cone_position(&Vec2::new(1, 1), &c).unwrap().label,
            ConeLabel::Sector { i: 0, mi: big(1), mi1: big(1) }
        );
        assert_eq!(cone_position(&Vec2::new(0, -1), &c).unwrap().label, ConeLabel::ConeMinus);
        assert_eq!(cone_position(&Vec2::new(-1, 0), &c).unwrap().label, ConeLabel::ConeMinus);
        assert!(matches!(cone_position(&Vec2::new(1, -1), &c).unwrap().label, ConeLabel::DualCone | ConeLabel::DualConeMinus));
        assert_eq!(cone_position(&Vec2::new(0, 0), &c), Err(CuspError::ZeroVector));
    }

    #[test]
    fn reduction() {
        let c = seq(&[3]);
        assert_eq!(reduce_mod_monodromy(&Vec2::new(1, 0), &c).unwrap(), (Vec2::new(0, 1), -1));
        assert_eq!(reduce_mod_monodromy(&Vec2::new(1, 1), &c).unwrap(), (Vec2::new(1, 1), 0));
        let c = seq(&[3, 3, 3]);
        let m2 = monodromy(&c).pow(2).unwrap();
        let w = m2.apply(&Vec2::new(1, 1));
        assert_eq!(reduce_mod_monodromy(&w, &c).unwrap(), (Vec2::new(1, 1), -2));
        assert!(reduce_mod_monodromy(&Vec2::new(0, -1), &c).is_err());
    }

    #[test]
    fn enumeration() {
        let c = seq(&[3]);
        let one = enumerate_cusp_components(&c, 1);
        assert_eq!(one.len(), 1);
        assert_eq!(one[0].kind, ComponentKind::CurveInterior { vertex: "E1".into(), m: big(1) });
        let two: Vec<Vec2> = enumerate_cusp_components(&c, 2)
            .into_iter()
            .map(|a| match a.winding {
                WindingClass::CuspLattice(w) => w,
                _ => unreachable!(),
            })
            .collect();
        assert_eq!(two, vec![Vec2::new(0, 1), Vec2::new(0, 2), Vec2::new(1, 1)]);
    }

    #[test]
    fn duals() {
        assert_eq!(dual_sequence(&seq(&[3, 3, 3])), seq(&[3, 3, 3]));
        assert_eq!(dual_sequence(&seq(&[2, 3])), seq(&[4]));
        assert!(dual_sequence(&seq(&[2, 2, 3, 4])).is_rotation_of(&seq(&[5, 3, 2])));
        let r = check_duality(&seq(&[2, 3]));
        assert_eq!(r.m, Mat2::new(5, 2, -3, -1));
        assert_eq!(r.m_star, Mat2::new(4, 1, -1, 0));
        assert_eq!(r.mt, Mat2::new(-3, -1, 2, 1));
        assert!(r.t_identity_holds && r.traces_equal);
        let r = check_duality(&seq(&[3, 3, 3]));
        assert_eq!(r.mt, Mat2::new(-13, -5, 5, 2));
        assert!(r.t_identity_holds);
        let r = check_duality(&seq(&[2, 2, 3, 4]));
        assert_eq!(r.m.trace(), big(20));
        assert!(r.t_identity_holds && r.traces_equal);
    }

    #[test]
    fn recovery() {
        assert_eq!(recover_sequence(&Mat2::new(3, 1, -1, 0)).unwrap(), seq(&[3]));
        assert_eq!(recover_sequence(&Mat2::new(1, 1, 1, 2)).unwrap(), seq(&[3]));
        assert!(recover_sequence(&Mat2::new(21, 8, -8, -3)).unwrap().is_rotation_of(&seq(&[3, 3, 3])));
        assert!(recover_sequence(&Mat2::new(18, 1, -1, 0)).unwrap().is_rotation_of(&seq(&[18])));
        // non-primitive: M(3)^2 has period (3) but trace 7
        assert_eq!(recover_sequence(&monodromy(&seq(&[3, 3]))).unwrap(), seq(&[3, 3]));
        assert!(recover_sequence(&Mat2::new(1, 1, 0, 1)).is_err());
        assert!(recover_sequence(&Mat2::new(2, 1, 1, 2)).is_err());
    }
}
