//! Projective rational points in normalized coprime integer coordinates,
//! the p-adic chordal valuation, and S-integrality tests.

use std::cmp::Ordering;
use std::collections::BTreeSet;

use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::exact::{vp_int, Int, Rat};
use crate::{Error, Result};

/// A point of P1(Q) as [a : b] with gcd(|a|,|b|) = 1 and b > 0, or
/// [1 : 0] for the point at infinity.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ProjPoint {
    a: Int,
    b: Int,
}

impl ProjPoint {
    /// Normalizes a raw coordinate pair; rejects (0,0).
    pub fn new(a: Int, b: Int) -> Result<Self> {
        if a.is_zero() && b.is_zero() {
            return Err(Error::ZeroPoint);
        }
        let g = a.gcd(&b);
        let (mut a, mut b) = (a / &g, b / &g);
        if b.is_negative() || (b.is_zero() && a.is_negative()) {
            a = -a;
            b = -b;
        }
        Ok(ProjPoint { a, b })
    }

    pub fn from_rational(q: &Rat) -> Self {
        ProjPoint {
            a: q.numer().clone(),
            b: q.denom().clone(),
        }
    }

    pub fn from_i64(a: i64, b: i64) -> Result<Self> {
        ProjPoint::new(Int::from(a), Int::from(b))
    }

    pub fn infinity() -> Self {
        ProjPoint {
            a: Int::one(),
            b: Int::zero(),
        }
    }

    pub fn zero() -> Self {
        ProjPoint {
            a: Int::zero(),
            b: Int::one(),
        }
    }

    pub fn a(&self) -> &Int {
        &self.a
    }

    pub fn b(&self) -> &Int {
        &self.b
    }

    pub fn is_infinity(&self) -> bool {
        self.b.is_zero()
    }

    /// Affine value a/b; None at infinity.
    pub fn to_rational(&self) -> Option<Rat> {
        if self.is_infinity() {
            None
        } else {
            Some(Rat::new(self.a.clone(), self.b.clone()))
        }
    }

    /// a_P b_Q - a_Q b_P; zero exactly when the points coincide.
    pub fn cross_term(&self, other: &ProjPoint) -> Int {
        &self.a * &other.b - &other.a * &self.b
    }
}

impl Ord for ProjPoint {
    /// Finite points in rational order, infinity last.
    fn cmp(&self, other: &Self) -> Ordering {
        match (self.is_infinity(), other.is_infinity()) {
            (true, true) => Ordering::Equal,
            (true, false) => Ordering::Greater,
            (false, true) => Ordering::Less,
            (false, false) => (&self.a * &other.b).cmp(&(&other.a * &self.b)),
        }
    }
}

impl PartialOrd for ProjPoint {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl std::fmt::Display for ProjPoint {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.is_infinity() {
            write!(f, "inf")
        } else if self.b.is_one() {
            write!(f, "{}", self.a)
        } else {
            write!(f, "{}/{}", self.a, self.b)
        }
    }
}

impl Serialize for ProjPoint {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

impl<'de> Deserialize<'de> for ProjPoint {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        parse_point(&s).map_err(serde::de::Error::custom)
    }
}

/// Parses "5", "-3/7", "inf", or "[4:6]" into a normalized point.
pub fn parse_point(s: &str) -> Result<ProjPoint> {
    let t = s.trim();
    let err = |msg: &str| Error::Parse {
        pos: 0,
        msg: format!("{msg}: {s:?}"),
    };
    if t == "inf" || t == "infinity" || t == "oo" {
        return Ok(ProjPoint::infinity());
    }
    if let Some(inner) = t.strip_prefix('[').and_then(|u| u.strip_suffix(']')) {
        let (a, b) = inner
            .split_once(':')
            .ok_or_else(|| err("expected [a:b]"))?;
        let a: Int = a.trim().parse().map_err(|_| err("bad coordinate"))?;
        let b: Int = b.trim().parse().map_err(|_| err("bad coordinate"))?;
        return ProjPoint::new(a, b);
    }
    let q = crate::exact::parse_rational(t).ok_or_else(|| err("expected a rational or inf"))?;
    Ok(ProjPoint::from_rational(&q))
}

/// Chordal valuation value: finite when the points are distinct, the
/// INFINITE sentinel when they coincide.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum ChordalVal {
    Finite(u64),
    Infinite,
}

impl std::fmt::Display for ChordalVal {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            ChordalVal::Finite(v) => write!(f, "{v}"),
            ChordalVal::Infinite => write!(f, "inf"),
        }
    }
}

/// delta_p(P, Q). In normalized coprime coordinates the min-terms of the
/// definition vanish, leaving the valuation of the cross term.
pub fn chordal_valuation(p1: &ProjPoint, p2: &ProjPoint, p: &Int) -> ChordalVal {
    let cross = p1.cross_term(p2);
    if cross.is_zero() {
        ChordalVal::Infinite
    } else {
        ChordalVal::Finite(vp_int(&cross, p))
    }
}

/// A finite set of primes; the archimedean place is implicit and always
/// counted, so the place count s = |S| is `primes.len() + 1`.
#[derive(Debug, Clone, PartialEq, Eq, Default, Serialize, Deserialize)]
pub struct PlaceSet {
    primes: BTreeSet<Int>,
}

impl PlaceSet {
    pub fn empty() -> Self {
        PlaceSet::default()
    }

    pub fn new(primes: impl IntoIterator<Item = Int>) -> Self {
        PlaceSet {
            primes: primes.into_iter().collect(),
        }
    }

    pub fn from_i64(primes: &[i64]) -> Self {
        PlaceSet::new(primes.iter().map(|&p| Int::from(p)))
    }

    pub fn primes(&self) -> impl Iterator<Item = &Int> {
        self.primes.iter()
    }

    pub fn contains(&self, p: &Int) -> bool {
        self.primes.contains(p)
    }

    pub fn insert(&mut self, p: Int) {
        self.primes.insert(p);
    }

    pub fn union(&self, other: &PlaceSet) -> PlaceSet {
        PlaceSet {
            primes: self.primes.union(&other.primes).cloned().collect(),
        }
    }

    pub fn len(&self) -> usize {
        self.primes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.primes.is_empty()
    }

    /// s = |S| including the archimedean place.
    pub fn s_value(&self) -> u32 {
        self.primes.len() as u32 + 1
    }

    /// Strips every prime of the set from `n`; the residue is what remains.
    pub fn residue_outside(&self, n: &Int) -> Int {
        let mut m = n.abs();
        for p in &self.primes {
            loop {
                let (q, r) = m.div_rem(p);
                if !r.is_zero() {
                    break;
                }
                m = q;
            }
        }
        m
    }

    /// True when every prime factor of n lies in the set.
    pub fn saturates(&self, n: &Int) -> bool {
        self.residue_outside(n).is_one()
    }
}

/// P is S-integral with respect to Q iff delta_p(P,Q) = 0 outside S, i.e.
/// every prime factor of the cross term lies in S.
pub fn is_s_integral(p: &ProjPoint, q: &ProjPoint, s: &PlaceSet) -> Result<bool> {
    let cross = p.cross_term(q);
    if cross.is_zero() {
        return Err(Error::CoincidentPoints(format!("{p} = {q}")));
    }
    Ok(s.saturates(&cross))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pt(a: i64, b: i64) -> ProjPoint {
        ProjPoint::from_i64(a, b).unwrap()
    }
    fn int(n: i64) -> Int {
        Int::from(n)
    }

    #[test]
    fn normalize_examples() {
        assert_eq!(pt(4, 6), pt(2, 3));
        let five = ProjPoint::from_rational(&Rat::new(int(5), int(1)));
        assert_eq!(five, pt(5, 1));
        assert_eq!(parse_point("inf").unwrap(), ProjPoint::infinity());
        assert!(ProjPoint::from_i64(0, 0).is_err());
        // sign normalization
        assert_eq!(pt(1, -2), pt(-1, 2));
        assert_eq!(*pt(1, -2).b(), int(2));
        assert_eq!(ProjPoint::new(int(-3), int(0)).unwrap(), ProjPoint::infinity());
    }

    #[test]
    fn normalize_is_idempotent() {
        for (a, b) in [(4i64, 6i64), (-9, 3), (7, -14), (5, 0), (0, -8)] {
            let p = pt(a, b);
            assert_eq!(ProjPoint::new(p.a().clone(), p.b().clone()).unwrap(), p);
        }
    }

    #[test]
    fn cross_term_examples() {
        assert_eq!(pt(0, 1).cross_term(&pt(1, 0)), int(-1));
        assert_eq!(pt(1, 1).cross_term(&pt(4, 1)), int(-3));
        assert_eq!(pt(2, 3).cross_term(&pt(2, 3)), int(0));
    }

    #[test]
    fn chordal_examples() {
        assert_eq!(
            chordal_valuation(&pt(1, 1), &pt(4, 1), &int(3)),
            ChordalVal::Finite(1)
        );
        assert_eq!(
            chordal_valuation(&pt(1, 1), &pt(0, 1), &int(2)),
            ChordalVal::Finite(0)
        );
        assert_eq!(
            chordal_valuation(&pt(5, 1), &pt(0, 1), &int(5)),
            ChordalVal::Finite(1)
        );
        assert_eq!(
            chordal_valuation(&pt(2, 3), &pt(2, 3), &int(7)),
            ChordalVal::Infinite
        );
    }

    #[test]
    fn s_integral_examples() {
        let empty = PlaceSet::empty();
        assert!(is_s_integral(&pt(1, 1), &pt(0, 1), &empty).unwrap());
        assert!(!is_s_integral(&pt(5, 1), &pt(0, 1), &empty).unwrap());
        let s23 = PlaceSet::from_i64(&[2, 3]);
        assert!(is_s_integral(&pt(6, 1), &pt(0, 1), &s23).unwrap());
        assert!(is_s_integral(&pt(5, 1), &pt(0, 1), &PlaceSet::from_i64(&[5])).unwrap());
        assert!(is_s_integral(&pt(1, 1), &pt(0, 1), &s23).is_err() == false);
        assert!(is_s_integral(&pt(1, 1), &pt(1, 1), &empty).is_err());
    }

    #[test]
    fn chordal_symmetry_and_triangle() {
        let pts = [pt(1, 1), pt(4, 1), pt(0, 1), pt(1, 0), pt(7, 3), pt(-5, 2), pt(9, 4)];
        let primes: Vec<Int> = crate::exact::primes_up_to(100).into_iter().map(Int::from).collect();
        for p1 in &pts {
            for p2 in &pts {
                for q in &primes {
                    assert_eq!(chordal_valuation(p1, p2, q), chordal_valuation(p2, p1, q));
                }
            }
        }
        // triangle: delta(P,Q) >= min(delta(P,R), delta(Q,R)) over distinct triples
        for p1 in &pts {
            for p2 in &pts {
                for p3 in &pts {
                    if p1 == p2 || p1 == p3 || p2 == p3 {
                        continue;
                    }
                    for q in &primes {
                        let (ChordalVal::Finite(dpq), ChordalVal::Finite(dpr), ChordalVal::Finite(dqr)) = (
                            chordal_valuation(p1, p2, q),
                            chordal_valuation(p1, p3, q),
                            chordal_valuation(p2, p3, q),
                        ) else {
                            unreachable!("points are distinct")
                        };
                        assert!(dpq >= dpr.min(dqr), "triangle failed at p={q}");
                    }
                }
            }
        }
    }

    #[test]
    fn point_parsing() {
        assert_eq!(parse_point("5").unwrap(), pt(5, 1));
        assert_eq!(parse_point("-3/7").unwrap(), pt(-3, 7));
        assert_eq!(parse_point("[4:6]").unwrap(), pt(2, 3));
        assert!(parse_point("[0:0]").is_err());
        assert!(parse_point("abc").is_err());
    }

    #[test]
    fn ordering_is_rational_with_infinity_last() {
        let mut v = vec![ProjPoint::infinity(), pt(1, 2), pt(-3, 1), pt(2, 1)];
        v.sort();
        assert_eq!(v, vec![pt(-3, 1), pt(1, 2), pt(2, 1), ProjPoint::infinity()]);
    }
}
