//! Rational self-maps of P1 over Q as primitive pairs of integer forms:
//! construction, evaluation, composition, iteration, bad primes, reduction
//! mod p, critical points, and PGL2 conjugation.

use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::exact::{factorize, Int, Rat};
use crate::homog::{rational_roots_with_multiplicity, resultant, wronskian, HomogForm};
use crate::point::{PlaceSet, ProjPoint};
use crate::{Error, Result};

/// Default cap on the degree of computed iterates.
pub const DEFAULT_DEGREE_CAP: usize = 4096;

/// phi = [F : G] with deg F = deg G >= 1, the combined coefficient list
/// primitive, Res(F,G) != 0, and the first nonzero coefficient of G positive
/// (of F when G's leading block is negative-free ambiguity never arises;
/// Res != 0 keeps G nonzero only for nonconstant maps with G = 0 excluded).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RationalMap {
    f: HomogForm,
    g: HomogForm,
}

impl RationalMap {
    /// Builds a map from a form pair of equal degree >= 1, normalizing to a
    /// primitive, sign-canonical pair and rejecting resultant zero.
    pub fn from_pair(f: HomogForm, g: HomogForm) -> Result<Self> {
        if f.degree() != g.degree() {
            return Err(Error::DegreeMismatch {
                expected: f.degree(),
                got: g.degree(),
            });
        }
        if f.degree() == 0 {
            return Err(Error::ConstantMap);
        }
        if f.is_zero() && g.is_zero() {
            return Err(Error::DegeneratePair);
        }
        // combined content
        let mut content = Int::zero();
        for c in f.coeffs().iter().chain(g.coeffs().iter()) {
            content = content.gcd(c);
            if content.is_one() {
                break;
            }
        }
        let mut f = HomogForm::new(f.coeffs().iter().map(|c| c / &content).collect());
        let mut g = HomogForm::new(g.coeffs().iter().map(|c| c / &content).collect());
        // sign: first nonzero coefficient of G (or F) positive
        let lead = g
            .coeffs()
            .iter()
            .chain(f.coeffs().iter())
            .find(|c| !c.is_zero())
            .cloned()
            .unwrap();
        if lead.is_negative() {
            f = f.neg();
            g = g.neg();
        }
        let map = RationalMap { f, g };
        if resultant(&map.f, &map.g)?.is_zero() {
            return Err(Error::DegeneratePair);
        }
        Ok(map)
    }

    /// Homogenizes a univariate polynomial f(x) = sum coeffs[i] x^i with
    /// rational coefficients into [c f_hom(X,Y) : c Y^d].
    pub fn from_polynomial(coeffs: &[Rat]) -> Result<Self> {
        let d = coeffs
            .iter()
            .rposition(|c| !c.is_zero())
            .ok_or(Error::ConstantMap)?;
        if d == 0 {
            return Err(Error::ConstantMap);
        }
        // clear denominators
        let mut lcm = Int::one();
        for c in &coeffs[..=d] {
            lcm = lcm.lcm(c.denom());
        }
        let ints: Vec<Int> = coeffs[..=d]
            .iter()
            .map(|c| c.numer() * (&lcm / c.denom()))
            .collect();
        let f = HomogForm::new(ints);
        let mut gy = vec![Int::zero(); d + 1];
        gy[0] = lcm;
        RationalMap::from_pair(f, HomogForm::new(gy))
    }

    /// The affine rational function num(x)/den(x) as a projective map.
    pub fn from_rational_function(num: &[Rat], den: &[Rat]) -> Result<Self> {
        let dn = num.iter().rposition(|c| !c.is_zero());
        let dd = den.iter().rposition(|c| !c.is_zero());
        let (dn, dd) = match (dn, dd) {
            (Some(a), Some(b)) => (a, b),
            _ => return Err(Error::DegeneratePair),
        };
        let d = dn.max(dd);
        if d == 0 {
            return Err(Error::ConstantMap);
        }
        let mut lcm = Int::one();
        for c in num[..=dn].iter().chain(den[..=dd].iter()) {
            lcm = lcm.lcm(c.denom());
        }
        let scaled = |cs: &[Rat], deg: usize| -> Vec<Int> {
            let mut v = vec![Int::zero(); d + 1];
            for (i, c) in cs[..=deg].iter().enumerate() {
                v[i] = c.numer() * (&lcm / c.denom());
            }
            v
        };
        // homogenize to common degree d: multiply by Y^(d - deg)
        let f = HomogForm::new(scaled(num, dn));
        let g = HomogForm::new(scaled(den, dd));
        RationalMap::from_pair(f, g)
    }

    pub fn numerator(&self) -> &HomogForm {
        &self.f
    }

    pub fn denominator(&self) -> &HomogForm {
        &self.g
    }

    pub fn degree(&self) -> usize {
        self.f.degree()
    }

    /// True when the map is [f_hom : c Y^d] for a monic integer polynomial f.
    pub fn is_monic_integer_polynomial(&self) -> bool {
        let d = self.degree();
        let g_is_yd = self.g.coeffs()[0].is_one()
            && self.g.coeffs()[1..].iter().all(|c| c.is_zero());
        g_is_yd && self.f.coeffs()[d].is_one()
    }

    pub fn evaluate(&self, p: &ProjPoint) -> ProjPoint {
        let fa = self.f.eval(p.a(), p.b());
        let ga = self.g.eval(p.a(), p.b());
        // Res != 0 and coprime coordinates guarantee (fa, ga) != (0, 0)
        ProjPoint::new(fa, ga).expect("image of a projective point")
    }

    /// psi o phi (self after other), degree d_psi * d_phi.
    pub fn compose(&self, inner: &RationalMap) -> Result<RationalMap> {
        let f = self.f.substitute(&inner.f, &inner.g)?;
        let g = self.g.substitute(&inner.f, &inner.g)?;
        RationalMap::from_pair(f, g)
    }

    /// phi^n with the default degree cap.
    pub fn iterate(&self, n: u32) -> Result<RationalMap> {
        self.iterate_with_cap(n, DEFAULT_DEGREE_CAP)
    }

    pub fn iterate_with_cap(&self, n: u32, cap: usize) -> Result<RationalMap> {
        assert!(n >= 1, "iterate needs n >= 1");
        let target = self.degree().checked_pow(n).unwrap_or(usize::MAX);
        if target > cap {
            return Err(Error::DegreeCapExceeded(target, cap));
        }
        let mut acc = self.clone();
        for _ in 1..n {
            acc = acc.compose(self)?;
        }
        Ok(acc)
    }

    pub fn resultant(&self) -> Int {
        resultant(&self.f, &self.g).expect("nonzero pair")
    }

    /// Primes dividing |Res(F,G)| of the primitive pair: exactly the primes
    /// of bad reduction over Q.
    pub fn bad_primes(&self) -> Result<PlaceSet> {
        let r = self.resultant();
        let f = factorize(&r)?;
        Ok(PlaceSet::new(f.factors.into_iter().map(|(p, _)| p)))
    }

    /// The induced self-map of P1(F_p), tabulated. Requires good reduction.
    pub fn reduce_mod_p(&self, p: &Int) -> Result<FpMap> {
        if !crate::exact::is_prime(p) {
            return Err(Error::Precondition(format!("{p} is not prime")));
        }
        let bad = self.bad_primes()?;
        if bad.contains(p) {
            return Err(Error::BadPrime(p.clone()));
        }
        let pu = p
            .to_u64()
            .ok_or_else(|| Error::Precondition("prime too large to tabulate".into()))?;
        let fm: Vec<u64> = self.f.coeffs().iter().map(|c| mod_u(c, pu)).collect();
        let gm: Vec<u64> = self.g.coeffs().iter().map(|c| mod_u(c, pu)).collect();
        let eval = |cs: &[u64], a: u64, b: u64| -> u64 {
            let d = cs.len() - 1;
            let mut acc: u64 = 0;
            for i in (0..=d).rev() {
                acc = (mulmod(acc, a, pu) + mulmod(cs[i], powmod(b, (d - i) as u64, pu), pu)) % pu;
            }
            acc
        };
        // indices 0..p-1 are [i:1], index p is [1:0]
        let mut table = Vec::with_capacity(pu as usize + 1);
        for i in 0..=pu {
            let (a, b) = if i == pu { (1, 0) } else { (i, 1) };
            let fa = eval(&fm, a, b);
            let ga = eval(&gm, a, b);
            debug_assert!(fa != 0 || ga != 0, "good reduction violated");
            let idx = if ga == 0 {
                pu
            } else {
                mulmod(fa, powmod(ga, pu - 2, pu), pu)
            };
            table.push(idx);
        }
        Ok(FpMap { p: pu, table })
    }

    /// Rational critical (ramified) points with multiplicities: the rational
    /// roots of the Wronskian.
    pub fn rational_critical_points(&self) -> Result<Vec<(ProjPoint, u32)>> {
        assert!(self.degree() >= 2, "critical points need degree >= 2");
        let w = wronskian(&self.f, &self.g)?;
        rational_roots_with_multiplicity(&w)
    }

    /// True when `p` is a rational ramified point of the map.
    pub fn is_ramified(&self, p: &ProjPoint) -> Result<bool> {
        let w = wronskian(&self.f, &self.g)?;
        Ok(w.eval(p.a(), p.b()).is_zero())
    }

    /// M o phi o M^{-1} for an integer matrix M = [[a,b],[c,d]], det != 0.
    pub fn conjugate(&self, m: &[[Int; 2]; 2]) -> Result<RationalMap> {
        let det = &m[0][0] * &m[1][1] - &m[0][1] * &m[1][0];
        if det.is_zero() {
            return Err(Error::SingularMatrix);
        }
        // M^{-1} up to scalar: [[d, -b], [-c, a]]
        let inv_x = HomogForm::new(vec![m[0][1].clone() * Int::from(-1), m[1][1].clone()]);
        let inv_y = HomogForm::new(vec![m[0][0].clone(), m[1][0].clone() * Int::from(-1)]);
        let f1 = self.f.substitute(&inv_x, &inv_y)?;
        let g1 = self.g.substitute(&inv_x, &inv_y)?;
        let f2 = f1.scale(&m[0][0]).add(&g1.scale(&m[0][1]))?;
        let g2 = f1.scale(&m[1][0]).add(&g1.scale(&m[1][1]))?;
        RationalMap::from_pair(f2, g2)
    }
}

impl std::fmt::Display for RationalMap {
    fn fmt(&self, fm: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(fm, "[{} : {}]", self.f, self.g)
    }
}

fn mod_u(c: &Int, p: u64) -> u64 {
    let r = c % Int::from(p);
    let r = if r.is_negative() { r + Int::from(p) } else { r };
    r.to_u64().unwrap()
}

fn mulmod(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 * b as u128) % p as u128) as u64
}

fn powmod(mut b: u64, mut e: u64, p: u64) -> u64 {
    let mut acc = 1u64 % p;
    b %= p;
    while e > 0 {
        if e & 1 == 1 {
            acc = mulmod(acc, b, p);
        }
        b = mulmod(b, b, p);
        e >>= 1;
    }
    acc
}

/// A tabulated self-map of P1(F_p): indices 0..p-1 are the affine residues,
/// index p is the point at infinity.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FpMap {
    pub p: u64,
    pub table: Vec<u64>,
}

impl FpMap {
    pub fn apply(&self, idx: u64) -> u64 {
        self.table[idx as usize]
    }

    pub fn size(&self) -> u64 {
        self.p + 1
    }

    /// Index of the reduction of a rational point with good coordinates.
    pub fn reduce_point(&self, pt: &ProjPoint) -> u64 {
        let a = mod_u(pt.a(), self.p);
        let b = mod_u(pt.b(), self.p);
        if b == 0 {
            self.p
        } else {
            mulmod(a, powmod(b, self.p - 2, self.p), self.p)
        }
    }
}
