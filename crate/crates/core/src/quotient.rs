//! Quotient singularities: cyclic quotient labels, finite groups given by
//! generators, conjugacy classes and McKay counts, and the real A-type
//! catalog.

use std::collections::HashMap;
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

use crate::quadratic::{parse_rational, QuadElement};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum QuotientError {
    #[error("need gcd(m, q) = 1 and 0 < q < m (or m = 1), got m={m}, q={q}")]
    BadCyclic { m: BigInt, q: BigInt },
    #[error("generator {0} is not invertible")]
    NotInvertible(usize),
    #[error("generators mix quaternions and matrices or different sizes")]
    MixedGenerators,
    #[error("no generators given")]
    NoGenerators,
    #[error("closure exceeded {0} elements; the group is probably infinite")]
    TooLarge(usize),
    #[error("not a finite subgroup of SL(2): {0}")]
    NotSl2(String),
    #[error("group file line {line}: {msg}")]
    Parse { line: usize, msg: String },
    #[error("exponent {0} out of range")]
    BadExponent(u64),
}

/// `a + b i + c j + e k` with coordinates in one quadratic field.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Quaternion(pub [QuadElement; 4]);

impl Quaternion {
    pub fn new(coords: [QuadElement; 4]) -> Self {
        Quaternion(coords)
    }

    pub fn from_rationals(c: [(i64, i64); 4], d: i64) -> Self {
        Quaternion(c.map(|(n, den)| QuadElement::rational(BigRational::new(n.into(), den.into()), d)))
    }

    fn mul(&self, o: &Quaternion) -> Quaternion {
        let m = |x: &QuadElement, y: &QuadElement| x.try_mul(y).expect("one field");
        let s = |terms: [(i8, QuadElement); 4]| {
            terms.into_iter().fold(QuadElement::zero(self.0[0].d.clone()), |acc, (sg, t)| {
                if sg > 0 { acc.try_add(&t).expect("one field") } else { acc.try_sub(&t).expect("one field") }
            })
        };
        let [a1, b1, c1, d1] = &self.0;
        let [a2, b2, c2, d2] = &o.0;
        Quaternion([
            s([(1, m(a1, a2)), (-1, m(b1, b2)), (-1, m(c1, c2)), (-1, m(d1, d2))]),
            s([(1, m(a1, b2)), (1, m(b1, a2)), (1, m(c1, d2)), (-1, m(d1, c2))]),
            s([(1, m(a1, c2)), (-1, m(b1, d2)), (1, m(c1, a2)), (1, m(d1, b2))]),
            s([(1, m(a1, d2)), (1, m(b1, c2)), (-1, m(c1, b2)), (1, m(d1, a2))]),
        ])
    }

    pub fn norm(&self) -> QuadElement {
        self.0.iter().fold(QuadElement::zero(self.0[0].d.clone()), |acc, x| {
            acc.try_add(&x.try_mul(x).expect("one field")).expect("one field")
        })
    }

    fn identity(d: &BigInt) -> Quaternion {
        let z = QuadElement::zero(d.clone());
        Quaternion([QuadElement::one(d.clone()), z.clone(), z.clone(), z])
    }
}

impl fmt::Display for Quaternion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let [a, b, c, e] = &self.0;
        write!(f, "[{a}, {b}, {c}, {e}]")
    }
}

/// Square matrix over the rationals, row-major.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RatMatrix {
    pub n: usize,
    pub entries: Vec<BigRational>,
}

impl RatMatrix {
    pub fn from_ints(n: usize, e: &[i64]) -> Self {
        RatMatrix { n, entries: e.iter().map(|&x| BigRational::from_integer(x.into())).collect() }
    }

    pub fn identity(n: usize) -> Self {
        let mut e = vec![BigRational::zero(); n * n];
        for i in 0..n {
            e[i * n + i] = BigRational::one();
        }
        RatMatrix { n, entries: e }
    }

    pub fn get(&self, i: usize, j: usize) -> &BigRational {
        &self.entries[i * self.n + j]
    }

    fn mul(&self, o: &RatMatrix) -> RatMatrix {
        let n = self.n;
        let mut e = vec![BigRational::zero(); n * n];
        for i in 0..n {
            for k in 0..n {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..n {
                    let b = o.get(k, j);
                    if !b.is_zero() {
                        e[i * n + j] += a * b;
                    }
                }
            }
        }
        RatMatrix { n, entries: e }
    }

    pub fn det(&self) -> BigRational {
        let n = self.n;
        let mut a = self.entries.clone();
        let mut det = BigRational::one();
        for c in 0..n {
            let Some(p) = (c..n).find(|&r| !a[r * n + c].is_zero()) else {
                return BigRational::zero();
            };
            if p != c {
                for j in 0..n {
                    a.swap(p * n + j, c * n + j);
                }
                det = -det;
            }
            let piv = a[c * n + c].clone();
            det *= &piv;
            for r in c + 1..n {
                let f = &a[r * n + c] / &piv;
                if f.is_zero() {
                    continue;
                }
                for j in c..n {
                    let t = &f * &a[c * n + j];
                    a[r * n + j] -= t;
                }
            }
        }
        det
    }

    /// Block diagonal matrix `diag(a, b)`.
    pub fn block_diag(a: &RatMatrix, b: &RatMatrix) -> RatMatrix {
        let n = a.n + b.n;
        let mut m = RatMatrix { n, entries: vec![BigRational::zero(); n * n] };
        for i in 0..a.n {
            for j in 0..a.n {
                m.entries[i * n + j] = a.get(i, j).clone();
            }
        }
        for i in 0..b.n {
            for j in 0..b.n {
                m.entries[(a.n + i) * n + a.n + j] = b.get(i, j).clone();
            }
        }
        m
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Element {
    Quat(Quaternion),
    Matrix(RatMatrix),
}

impl Element {
    fn mul(&self, o: &Element) -> Element {
        match (self, o) {
            (Element::Quat(a), Element::Quat(b)) => Element::Quat(a.mul(b)),
            (Element::Matrix(a), Element::Matrix(b)) => Element::Matrix(a.mul(b)),
            _ => unreachable!("checked by group_closure"),
        }
    }

    fn shape(&self) -> (bool, usize, BigInt) {
        match self {
            Element::Quat(q) => (true, 4, q.0[0].d.clone()),
            Element::Matrix(m) => (false, m.n, BigInt::zero()),
        }
    }

    fn is_invertible(&self) -> bool {
        match self {
            Element::Quat(q) => !q.norm().is_zero(),
            Element::Matrix(m) => !m.det().is_zero(),
        }
    }

    fn identity_like(&self) -> Element {
        match self {
            Element::Quat(q) => Element::Quat(Quaternion::identity(&q.0[0].d)),
            Element::Matrix(m) => Element::Matrix(RatMatrix::identity(m.n)),
        }
    }

    /// Unit quaternion or a 2×2 matrix of determinant one.
    fn in_sl2(&self) -> bool {
        match self {
            Element::Quat(q) => q.norm() == QuadElement::one(q.0[0].d.clone()),
            Element::Matrix(m) => m.n == 2 && m.det().is_one(),
        }
    }
}

impl fmt::Display for Element {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Element::Quat(q) => write!(f, "{q}"),
            Element::Matrix(m) => {
                let rows: Vec<String> = (0..m.n)
                    .map(|i| (0..m.n).map(|j| m.get(i, j).to_string()).collect::<Vec<_>>().join(" "))
                    .collect();
                write!(f, "[{}]", rows.join("; "))
            }
        }
    }
}

pub const DEFAULT_CEILING: usize = 5000;

#[derive(Clone, Debug)]
pub struct FiniteGroup {
    pub elements: Vec<Element>,
    pub identity: usize,
    /// `table[a][b]` is the index of `elements[a] * elements[b]`.
    pub table: Vec<Vec<usize>>,
}

impl FiniteGroup {
    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn inverse(&self, a: usize) -> usize {
        self.table[a].iter().position(|&p| p == self.identity).expect("finite group has inverses")
    }

    pub fn element_order(&self, a: usize) -> usize {
        let mut x = a;
        let mut k = 1;
        while x != self.identity {
            x = self.table[x][a];
            k += 1;
        }
        k
    }

    pub fn is_closed(&self) -> bool {
        let n = self.order();
        self.table.len() == n && self.table.iter().all(|row| row.len() == n && row.iter().all(|&x| x < n))
    }

    pub fn is_abelian(&self) -> bool {
        let n = self.order();
        (0..n).all(|a| (0..n).all(|b| self.table[a][b] == self.table[b][a]))
    }
}

pub fn group_closure(generators: &[Element]) -> Result<FiniteGroup, QuotientError> {
    group_closure_with_ceiling(generators, DEFAULT_CEILING)
}

pub fn group_closure_with_ceiling(generators: &[Element], ceiling: usize) -> Result<FiniteGroup, QuotientError> {
    let first = generators.first().ok_or(QuotientError::NoGenerators)?;
    let shape = first.shape();
    if generators.iter().any(|g| g.shape() != shape) {
        return Err(QuotientError::MixedGenerators);
    }
    if let Some(i) = generators.iter().position(|g| !g.is_invertible()) {
        return Err(QuotientError::NotInvertible(i));
    }
    let mut elements = vec![first.identity_like()];
    let mut index: HashMap<Element, usize> = HashMap::new();
    index.insert(elements[0].clone(), 0);
    let mut head = 0;
    while head < elements.len() {
        let x = elements[head].clone();
        head += 1;
        for g in generators {
            let y = x.mul(g);
            if !index.contains_key(&y) {
                if elements.len() >= ceiling {
                    return Err(QuotientError::TooLarge(ceiling));
                }
                index.insert(y.clone(), elements.len());
                elements.push(y);
            }
        }
    }
    let table = elements
        .iter()
        .map(|a| elements.iter().map(|b| index[&a.mul(b)]).collect())
        .collect();
    Ok(FiniteGroup { elements, identity: 0, table })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConjClasses {
    pub classes: Vec<Vec<usize>>,
    pub representatives: Vec<usize>,
}

impl ConjClasses {
    pub fn count(&self) -> usize {
        self.classes.len()
    }
}

pub fn conjugacy_classes(g: &FiniteGroup) -> ConjClasses {
    let n = g.order();
    let inv: Vec<usize> = (0..n).map(|a| g.inverse(a)).collect();
    let mut class_of = vec![usize::MAX; n];
    let mut classes: Vec<Vec<usize>> = Vec::new();
    for x in 0..n {
        if class_of[x] != usize::MAX {
            continue;
        }
        let id = classes.len();
        let mut members = Vec::new();
        for h in 0..n {
            let y = g.table[g.table[h][x]][inv[h]];
            if class_of[y] == usize::MAX {
                class_of[y] = id;
                members.push(y);
            }
        }
        members.sort_unstable();
        classes.push(members);
    }
    let representatives = classes.iter().map(|c| c[0]).collect();
    ConjClasses { classes, representatives }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum AdeType {
    A(usize),
    D(usize),
    E(usize),
}

impl AdeType {
    pub fn vertex_count(&self) -> usize {
        match self {
            AdeType::A(n) | AdeType::D(n) | AdeType::E(n) => *n,
        }
    }
}

impl fmt::Display for AdeType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            AdeType::A(n) => write!(f, "A{n}"),
            AdeType::D(n) => write!(f, "D{n}"),
            AdeType::E(n) => write!(f, "E{n}"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct McKayReport {
    pub order: usize,
    pub class_count: usize,
    pub nontrivial_classes: usize,
    pub ade: AdeType,
    pub expected_exceptional_curves: usize,
    pub matches: bool,
}

impl fmt::Display for McKayReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "order={} classes={} mckay: {} = {} {} ({})",
            self.order,
            self.class_count,
            self.nontrivial_classes,
            self.expected_exceptional_curves,
            if self.matches { "OK" } else { "MISMATCH" },
            self.ade
        )
    }
}

/// Identifies a finite group as one of the SL(2) families from its
/// abstract structure: cyclic, or a unique involution plus the order
/// pattern of binary dihedral and binary polyhedral groups.
pub fn sl2_type(g: &FiniteGroup) -> Result<AdeType, QuotientError> {
    let n = g.order();
    let orders: Vec<usize> = (0..n).map(|a| g.element_order(a)).collect();
    let max = orders.iter().copied().max().unwrap_or(1);
    if max == n {
        return Ok(AdeType::A(n - 1));
    }
    let involutions = orders.iter().filter(|&&o| o == 2).count();
    if involutions != 1 {
        return Err(QuotientError::NotSl2(format!("{involutions} involutions in a noncyclic group of order {n}")));
    }
    if n.is_multiple_of(4) && max == n / 2 && n >= 8 {
        return Ok(AdeType::D(n / 4 + 2));
    }
    match n {
        24 => Ok(AdeType::E(6)),
        48 => Ok(AdeType::E(7)),
        120 => Ok(AdeType::E(8)),
        _ => Err(QuotientError::NotSl2(format!("order {n} with largest element order {max}"))),
    }
}

pub fn mckay_report(g: &FiniteGroup) -> Result<McKayReport, QuotientError> {
    if let Some(Element::Quat(_)) = g.elements.first() {
        if let Some(bad) = g.elements.iter().find(|e| !e.in_sl2()) {
            return Err(QuotientError::NotSl2(format!("{bad} is not a unit quaternion")));
        }
    }
    let ade = sl2_type(g)?;
    let class_count = conjugacy_classes(g).count();
    let expected = ade.vertex_count();
    Ok(McKayReport {
        order: g.order(),
        class_count,
        nontrivial_classes: class_count - 1,
        expected_exceptional_curves: expected,
        matches: class_count - 1 == expected,
        ade,
    })
}

/// Generators of standard groups.
pub mod presets {
    use super::*;

    fn q(c: [(i64, i64, i64, i64); 4], d: i64) -> Element {
        // each coordinate is (an/ad) + (bn/bd) sqrt(d), given as (an, ad, bn, bd)
        Element::Quat(Quaternion(c.map(|(an, ad, bn, bd)| QuadElement::from_fracs(an, ad, bn, bd, d))))
    }

    /// `Z/m` as an `m×m` permutation matrix.
    pub fn cyclic(m: usize) -> Vec<Element> {
        let mut e = vec![0i64; m * m];
        for i in 0..m {
            e[((i + 1) % m) * m + i] = 1;
        }
        vec![Element::Matrix(RatMatrix::from_ints(m, &e))]
    }

    /// `Z/5` inside the unit quaternions over `Q(sqrt 5)`.
    pub fn cyclic5_quaternion() -> Vec<Element> {
        let Element::Quat(x) = binary_icosahedral()[1].clone() else { unreachable!() };
        vec![Element::Quat(x.mul(&x))]
    }

    pub fn q8() -> Vec<Element> {
        vec![q([(0, 1, 0, 1), (1, 1, 0, 1), (0, 1, 0, 1), (0, 1, 0, 1)], 1), q([(0, 1, 0, 1), (0, 1, 0, 1), (1, 1, 0, 1), (0, 1, 0, 1)], 1)]
    }

    fn companion_of_cyclotomic(m: usize) -> RatMatrix {
        let phi = cyclotomic(m);
        let deg = phi.len() - 1;
        let mut e = vec![0i64; deg * deg];
        for i in 1..deg {
            e[i * deg + (i - 1)] = 1;
        }
        for i in 0..deg {
            e[i * deg + (deg - 1)] = -phi[i];
        }
        RatMatrix::from_ints(deg, &e)
    }

    /// Coefficients (constant term first) of the `m`-th cyclotomic polynomial.
    pub fn cyclotomic(m: usize) -> Vec<i64> {
        // x^m - 1 divided by every cyclotomic factor of a proper divisor
        let mut p = vec![0i64; m + 1];
        p[0] = -1;
        p[m] = 1;
        for d in (1..m).filter(|d| m.is_multiple_of(*d)) {
            let f = cyclotomic(d);
            let mut rem = p.clone();
            let mut quot = vec![0i64; rem.len() - f.len() + 1];
            for i in (0..quot.len()).rev() {
                let c = rem[i + f.len() - 1];
                quot[i] = c;
                for (j, &fj) in f.iter().enumerate() {
                    rem[i + j] -= c * fj;
                }
            }
            p = quot;
        }
        p
    }

    /// Binary dihedral group of order `4n`, `n >= 2`, as rational matrices
    /// `a = diag(C, C^-1)`, `x = ((0, I), (C^n, 0))` with `C` of order `2n`.
    pub fn binary_dihedral(n: usize) -> Vec<Element> {
        let c = companion_of_cyclotomic(2 * n);
        let k = c.n;
        let mut cinv = c.clone();
        for _ in 0..(2 * n - 2) {
            cinv = cinv.mul(&c);
        }
        let a = RatMatrix::block_diag(&c, &cinv);
        let mut cn = RatMatrix::identity(k);
        for _ in 0..n {
            cn = cn.mul(&c);
        }
        let mut x = RatMatrix { n: 2 * k, entries: vec![BigRational::zero(); 4 * k * k] };
        for i in 0..k {
            x.entries[i * 2 * k + k + i] = BigRational::one();
            for j in 0..k {
                x.entries[(k + i) * 2 * k + j] = cn.get(i, j).clone();
            }
        }
        vec![Element::Matrix(a), Element::Matrix(x)]
    }

    /// `(1+i+j+k)/2` and `i`.
    pub fn binary_tetrahedral() -> Vec<Element> {
        vec![q([(1, 2, 0, 1); 4], 1), q8()[0].clone()]
    }

    /// Binary tetrahedral generators plus `(1+i)/sqrt 2`.
    pub fn binary_octahedral() -> Vec<Element> {
        vec![
            q([(1, 2, 0, 1); 4], 2),
            q([(0, 1, 1, 2), (0, 1, 1, 2), (0, 1, 0, 1), (0, 1, 0, 1)], 2),
        ]
    }

    /// `(1+i+j+k)/2` and `(phi + phi^-1 i + j)/2`.
    pub fn binary_icosahedral() -> Vec<Element> {
        vec![
            q([(1, 2, 0, 1); 4], 5),
            q([(1, 4, 1, 4), (-1, 4, 1, 4), (1, 2, 0, 1), (0, 1, 0, 1)], 5),
        ]
    }
}

/// Reads a group file: optional `d=<int>`, then quaternion lines with four
/// coordinates, or `matrix <n>` followed by `n` rows.
pub fn parse_group_file(text: &str) -> Result<Vec<Element>, QuotientError> {
    let err = |line: usize, msg: &str| QuotientError::Parse { line, msg: msg.to_string() };
    let mut d = BigInt::one();
    let mut out = Vec::new();
    let mut lines = text.lines().enumerate().map(|(i, l)| (i + 1, l.split('#').next().unwrap_or("").trim()));
    while let Some((ln, line)) = lines.next() {
        if line.is_empty() {
            continue;
        }
        if let Some(v) = line.strip_prefix("d=") {
            d = v.trim().parse().map_err(|_| err(ln, "bad d"))?;
            continue;
        }
        let toks: Vec<&str> = line.split_whitespace().collect();
        if toks[0] == "matrix" {
            let n: usize = toks.get(1).and_then(|t| t.parse().ok()).ok_or_else(|| err(ln, "matrix needs a size"))?;
            let mut entries = Vec::with_capacity(n * n);
            while entries.len() < n * n {
                let (rl, row) = lines.next().ok_or_else(|| err(ln, "matrix is missing rows"))?;
                if row.is_empty() {
                    continue;
                }
                let vals: Option<Vec<BigRational>> = row.split_whitespace().map(parse_rational).collect();
                let vals = vals.ok_or_else(|| err(rl, "bad rational"))?;
                if vals.len() != n {
                    return Err(err(rl, "row has the wrong length"));
                }
                entries.extend(vals);
            }
            out.push(Element::Matrix(RatMatrix { n, entries }));
            continue;
        }
        if toks.len() != 4 {
            return Err(err(ln, "expected four quaternion coordinates"));
        }
        let coords: Result<Vec<QuadElement>, _> = toks.iter().map(|t| QuadElement::parse(t, d.clone())).collect();
        let coords = coords.map_err(|e| err(ln, &e.to_string()))?;
        let arr: [QuadElement; 4] = coords.try_into().expect("four coordinates");
        out.push(Element::Quat(Quaternion(arr)));
    }
    if out.is_empty() {
        return Err(QuotientError::NoGenerators);
    }
    Ok(out)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum Center {
    OnCurve,
    AtOrigin,
}

/// Component of short arcs on `C^2 / (1/m)(1, q)` with intersection
/// number `a/m`; the model arc is `t -> (t^m1, t^c)` upstairs.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct CyclicLabel {
    pub a: BigInt,
    pub m: BigInt,
    pub center: Center,
    pub m1: BigInt,
    pub c: BigInt,
}

impl CyclicLabel {
    pub fn value(&self) -> BigRational {
        BigRational::new(self.a.clone(), self.m.clone())
    }
}

pub fn cyclic_quotient_components(m: &BigInt, q: &BigInt, n: u64) -> Result<Vec<CyclicLabel>, QuotientError> {
    let bad = || QuotientError::BadCyclic { m: m.clone(), q: q.clone() };
    let smooth = m.is_one() && q.is_zero();
    if !smooth && (!m.is_positive() || !q.is_positive() || q >= m || !m.gcd(q).is_one()) {
        return Err(bad());
    }
    // c = a q^-1 mod m
    let q_inv = if smooth { BigInt::zero() } else { q.extended_gcd(m).x.mod_floor(m) };
    let top = m * BigInt::from(n);
    let mut out = Vec::new();
    let mut a = BigInt::one();
    while a <= top {
        let c = if smooth { BigInt::zero() } else { (&a * &q_inv).mod_floor(m) };
        let center = if a.is_multiple_of(m) { Center::OnCurve } else { Center::AtOrigin };
        out.push(CyclicLabel { a: a.clone(), m: m.clone(), center, m1: a.clone(), c });
        a += 1;
    }
    Ok(out)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum RealForm {
    /// `x^2 + y^2 = z^m`
    SumOfSquares,
    /// `xy = z^m`
    Hyperbolic,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RealCount {
    pub count: u64,
    /// Set when the count is the expected value rather than a proved one.
    pub caveat: Option<&'static str>,
}

pub fn real_a_component_count(form: RealForm, m: u64) -> Result<RealCount, QuotientError> {
    match form {
        RealForm::SumOfSquares if m >= 1 => Ok(RealCount { count: if m % 2 == 1 { 1 } else { 2 }, caveat: None }),
        RealForm::Hyperbolic if m >= 2 => Ok(RealCount {
            count: 4 * m - 6,
            caveat: Some("suggested by the examples, not proved"),
        }),
        _ => Err(QuotientError::BadExponent(m)),
    }
}

#[cfg(test)]
mod tests {
    use super::presets::*;
    use super::*;

    fn big(n: i64) -> BigInt {
        BigInt::from(n)
    }

    fn classes(gens: Vec<Element>) -> (usize, usize) {
        let g = group_closure(&gens).unwrap();
        assert!(g.is_closed());
        (g.order(), conjugacy_classes(&g).count())
    }

    #[test]
    fn small_groups() {
        assert_eq!(classes(q8()), (8, 5));
        assert_eq!(classes(cyclic(7)), (7, 7));
        assert_eq!(classes(cyclic5_quaternion()), (5, 5));
        assert_eq!(classes(binary_tetrahedral()), (24, 7));
        assert_eq!(classes(binary_octahedral()), (48, 8));
    }

    #[test]
    fn icosahedral() {
        let g = group_closure(&binary_icosahedral()).unwrap();
        assert_eq!(g.order(), 120);
        let r = mckay_report(&g).unwrap();
        assert_eq!(r.to_string(), "order=120 classes=9 mckay: 8 = 8 OK (E8)");
    }

    #[test]
    fn dihedral() {
        for n in 2..=6 {
            let g = group_closure(&binary_dihedral(n)).unwrap();
            assert_eq!(g.order(), 4 * n);
            let r = mckay_report(&g).unwrap();
            assert_eq!(r.ade, AdeType::D(n + 2));
            assert!(r.matches, "n={n}: {r}");
        }
    }

    #[test]
    fn cyclotomics() {
        assert_eq!(cyclotomic(1), vec![-1, 1]);
        assert_eq!(cyclotomic(4), vec![1, 0, 1]);
        assert_eq!(cyclotomic(12), vec![1, 0, -1, 0, 1]);
    }

    #[test]
    fn rejects_bad_input() {
        let inf = vec![Element::Matrix(RatMatrix::from_ints(2, &[1, 1, 0, 1]))];
        assert_eq!(group_closure_with_ceiling(&inf, 50).unwrap_err(), QuotientError::TooLarge(50));
        let sing = vec![Element::Matrix(RatMatrix::from_ints(2, &[1, 0, 0, 0]))];
        assert_eq!(group_closure(&sing).unwrap_err(), QuotientError::NotInvertible(0));
        // Klein four group has three involutions
        let v4 = vec![
            Element::Matrix(RatMatrix::from_ints(2, &[-1, 0, 0, 1])),
            Element::Matrix(RatMatrix::from_ints(2, &[1, 0, 0, -1])),
        ];
        assert!(mckay_report(&group_closure(&v4).unwrap()).is_err());
    }

    #[test]
    fn cyclic_labels() {
        let l = cyclic_quotient_components(&big(5), &big(2), 2).unwrap();
        assert_eq!(l.len(), 10);
        let on: Vec<BigInt> = l.iter().filter(|x| x.center == Center::OnCurve).map(|x| x.a.clone()).collect();
        assert_eq!(on, vec![big(5), big(10)]);
        assert_eq!(l[2].c, big(4));
        let smooth = cyclic_quotient_components(&big(1), &big(0), 3).unwrap();
        assert_eq!(smooth.len(), 3);
        assert!(smooth.iter().all(|x| x.center == Center::OnCurve));
        assert!(cyclic_quotient_components(&big(6), &big(2), 1).is_err());
    }

    #[test]
    fn parse_file() {
        let text = "# 2I\nd=5\n1/2 1/2 1/2 1/2\n1/4+1/4*sqrt -1/4+1/4*sqrt 1/2 0\n";
        let gens = parse_group_file(text).unwrap();
        assert_eq!(gens, binary_icosahedral());
        let text = "matrix 2\n0 -1\n1 0\n";
        assert_eq!(classes(parse_group_file(text).unwrap()), (4, 4));
        assert!(parse_group_file("1 2 3\n").is_err());
    }

    #[test]
    fn real_catalog() {
        assert_eq!(real_a_component_count(RealForm::SumOfSquares, 5).unwrap().count, 1);
        assert_eq!(real_a_component_count(RealForm::SumOfSquares, 4).unwrap().count, 2);
        let h = real_a_component_count(RealForm::Hyperbolic, 3).unwrap();
        assert_eq!(h.count, 6);
        assert!(h.caveat.is_some());
        assert!(real_a_component_count(RealForm::Hyperbolic, 1).is_err());
    }
}
