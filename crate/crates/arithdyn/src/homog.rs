//! Integer binary homogeneous forms: evaluation, content, resultants via a
//! fraction-free Sylvester determinant, substitution, Wronskians, and exact
//! rational projective root extraction.

use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::exact::{divisors, Int};
use crate::point::ProjPoint;
use crate::{Error, Result};

/// H(X,Y) = sum c_i X^i Y^(D-i), stored as coefficients c_0..c_D.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct HomogForm {
    coeffs: Vec<Int>,
}

impl HomogForm {
    /// Builds a form of degree `coeffs.len() - 1` from c_0..c_D.
    pub fn new(coeffs: Vec<Int>) -> Self {
        assert!(!coeffs.is_empty(), "a form needs at least one coefficient");
        HomogForm { coeffs }
    }

    pub fn from_i64(coeffs: &[i64]) -> Self {
        HomogForm::new(coeffs.iter().map(|&c| Int::from(c)).collect())
    }

    /// The zero form of a given degree.
    pub fn zero(degree: usize) -> Self {
        HomogForm {
            coeffs: vec![Int::zero(); degree + 1],
        }
    }

    /// X as a degree-1 form.
    pub fn x() -> Self {
        HomogForm::from_i64(&[0, 1])
    }

    /// Y as a degree-1 form.
    pub fn y() -> Self {
        HomogForm::from_i64(&[1, 0])
    }

    pub fn degree(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[Int] {
        &self.coeffs
    }

    /// Coefficient of X^i Y^(D-i).
    pub fn coeff(&self, i: usize) -> &Int {
        &self.coeffs[i]
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_zero())
    }

    /// H(a, b), exactly.
    pub fn eval(&self, a: &Int, b: &Int) -> Int {
        // Horner in X: H = (((c_D x + c_{D-1}) x + ...) x + c_0 y^D) suitably
        // homogenized; accumulate powers of b explicitly instead.
        let d = self.degree();
        let mut acc = Int::zero();
        // acc = sum c_i a^i b^{d-i}; run i from d down using Horner in a
        for i in (0..=d).rev() {
            acc = acc * a + &self.coeffs[i] * b.pow((d - i) as u32);
        }
        acc
    }

    /// gcd of the absolute coefficients; errors on the zero form.
    pub fn content(&self) -> Result<Int> {
        if self.is_zero() {
            return Err(Error::ZeroForm("content"));
        }
        let mut g = Int::zero();
        for c in &self.coeffs {
            g = g.gcd(c);
            if g.is_one() {
                break;
            }
        }
        Ok(g)
    }

    /// Divides all coefficients by the content.
    pub fn primitive_part(&self) -> Result<HomogForm> {
        let g = self.content()?;
        Ok(HomogForm::new(self.coeffs.iter().map(|c| c / &g).collect()))
    }

    pub fn neg(&self) -> HomogForm {
        HomogForm::new(self.coeffs.iter().map(|c| -c).collect())
    }

    pub fn scale(&self, k: &Int) -> HomogForm {
        HomogForm::new(self.coeffs.iter().map(|c| c * k).collect())
    }

    /// Sum of two forms of equal degree.
    pub fn add(&self, other: &HomogForm) -> Result<HomogForm> {
        if self.degree() != other.degree() {
            return Err(Error::DegreeMismatch {
                expected: self.degree(),
                got: other.degree(),
            });
        }
        Ok(HomogForm::new(
            self.coeffs
                .iter()
                .zip(&other.coeffs)
                .map(|(a, b)| a + b)
                .collect(),
        ))
    }

    pub fn sub(&self, other: &HomogForm) -> Result<HomogForm> {
        self.add(&other.neg())
    }

    /// Product of two forms; degrees add.
    pub fn mul(&self, other: &HomogForm) -> HomogForm {
        let d = self.degree() + other.degree();
        let mut out = vec![Int::zero(); d + 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                if b.is_zero() {
                    continue;
                }
                out[i + j] += a * b;
            }
        }
        HomogForm::new(out)
    }

    /// k-th power by repeated squaring; `pow(0)` is the degree-0 form 1.
    pub fn pow(&self, k: usize) -> HomogForm {
        let mut result = HomogForm::new(vec![Int::one()]);
        let mut base = self.clone();
        let mut k = k;
        while k > 0 {
            if k & 1 == 1 {
                result = result.mul(&base);
            }
            k >>= 1;
            if k > 0 {
                base = base.mul(&base);
            }
        }
        result
    }

    /// Partial derivative with respect to X; degree drops by one.
    pub fn partial_x(&self) -> HomogForm {
        let d = self.degree();
        assert!(d >= 1);
        let mut out = vec![Int::zero(); d];
        for i in 1..=d {
            out[i - 1] = &self.coeffs[i] * Int::from(i as u64);
        }
        HomogForm::new(out)
    }

    /// Partial derivative with respect to Y; degree drops by one.
    pub fn partial_y(&self) -> HomogForm {
        let d = self.degree();
        assert!(d >= 1);
        let mut out = vec![Int::zero(); d];
        for i in 0..d {
            out[i] = &self.coeffs[i] * Int::from((d - i) as u64);
        }
        HomogForm::new(out)
    }

    /// H(F(X,Y), G(X,Y)); F and G must share a degree.
    pub fn substitute(&self, f: &HomogForm, g: &HomogForm) -> Result<HomogForm> {
        if f.degree() != g.degree() {
            return Err(Error::DegreeMismatch {
                expected: f.degree(),
                got: g.degree(),
            });
        }
        let d = self.degree();
        let inner = f.degree();
        let mut acc = HomogForm::zero(d * inner);
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let term = f.pow(i).mul(&g.pow(d - i)).scale(c);
            acc = acc.add(&term)?;
        }
        Ok(acc)
    }

    /// Exact division by the primitive linear form vanishing at `[a:b]`,
    /// i.e. bX - aY. Returns None when the division is not exact.
    pub fn divide_by_linear(&self, root: &ProjPoint) -> Option<HomogForm> {
        let d = self.degree();
        if d == 0 {
            return None;
        }
        let (a, b) = (root.a(), root.b());
        if b.is_zero() {
            // dividing by Y: possible iff the X^d coefficient... no: Y | H
            // iff every monomial has a Y, i.e. coeff of X^d vanishes
            if !self.coeffs[d].is_zero() {
                return None;
            }
            return Some(HomogForm::new(self.coeffs[..d].to_vec()));
        }
        // match coefficients of H = (bX - aY) * Q, q_j on X^j Y^{d-1-j}:
        // c_d = b q_{d-1}; c_i = b q_{i-1} - a q_i for 0 < i < d; c_0 = -a q_0
        let mut q = vec![Int::zero(); d];
        let mut carry = self.coeffs[d].clone();
        for i in (1..=d).rev() {
            let (quot, rem) = carry.div_rem(b);
            if !rem.is_zero() {
                return None;
            }
            q[i - 1] = quot;
            if i >= 2 {
                carry = &self.coeffs[i - 1] + a * &q[i - 1];
            }
        }
        // consistency at the Y^d coefficient
        if self.coeffs[0] != -(a * &q[0]) {
            return None;
        }
        Some(HomogForm::new(q))
    }

    /// Multiplicity of `[a:b]` as a projective root (0 when not a root).
    pub fn root_multiplicity(&self, root: &ProjPoint) -> u32 {
        let mut m = 0;
        let mut cur = self.clone();
        while let Some(q) = cur.divide_by_linear(root) {
            m += 1;
            if q.degree() == 0 {
                break;
            }
            cur = q;
        }
        m
    }
}

/// Resultant of two nonzero binary forms of formal degrees d_F and d_G,
/// computed as the fraction-free determinant of the Sylvester matrix with
/// G's coefficient rows on top.
pub fn resultant(f: &HomogForm, g: &HomogForm) -> Result<Int> {
    if f.is_zero() || g.is_zero() {
        return Err(Error::ZeroForm("resultant"));
    }
    let df = f.degree();
    let dg = g.degree();
    let n = df + dg;
    if n == 0 {
        return Ok(Int::one());
    }
    // rows list coefficients from X^deg down to Y^deg
    let mut m = vec![vec![Int::zero(); n]; n];
    for row in 0..df {
        for (j, c) in g.coeffs.iter().rev().enumerate() {
            m[row][row + j] = c.clone();
        }
    }
    for row in 0..dg {
        for (j, c) in f.coeffs.iter().rev().enumerate() {
            m[df + row][row + j] = c.clone();
        }
    }
    Ok(bareiss_determinant(m))
}

/// Fraction-free Bareiss elimination; exact integer determinant.
pub fn bareiss_determinant(mut m: Vec<Vec<Int>>) -> Int {
    let n = m.len();
    if n == 0 {
        return Int::one();
    }
    let mut sign = 1i8;
    let mut prev = Int::one();
    for k in 0..n - 1 {
        if m[k][k].is_zero() {
            // pivot search
            let Some(swap) = (k + 1..n).find(|&i| !m[i][k].is_zero()) else {
                return Int::zero();
            };
            m.swap(k, swap);
            sign = -sign;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let num = &m[i][j] * &m[k][k] - &m[i][k] * &m[k][j];
                m[i][j] = num / &prev; // exact by the Bareiss identity
            }
            m[i][k] = Int::zero();
        }
        prev = m[k][k].clone();
    }
    let det = m[n - 1][n - 1].clone();
    if sign < 0 {
        -det
    } else {
        det
    }
}

/// F_X G_Y - F_Y G_X, degree 2d-2; its projective roots are the critical
/// points of the map [F:G].
pub fn wronskian(f: &HomogForm, g: &HomogForm) -> Result<HomogForm> {
    if f.degree() != g.degree() {
        return Err(Error::DegreeMismatch {
            expected: f.degree(),
            got: g.degree(),
        });
    }
    let w = f
        .partial_x()
        .mul(&g.partial_y())
        .sub(&f.partial_y().mul(&g.partial_x()))?;
    Ok(w)
}

/// All rational projective roots of a nonzero form, without multiplicity,
/// sorted canonically. Strips monomial X/Y factors, then enumerates
/// numerator/denominator divisor candidates and tests exactly.
pub fn rational_roots(h: &HomogForm) -> Result<Vec<ProjPoint>> {
    if h.is_zero() {
        return Err(Error::ZeroForm("rational_roots"));
    }
    let mut roots: Vec<ProjPoint> = Vec::new();
    let mut coeffs = h.coeffs.clone();
    // strip Y^k: low-order zero coefficients in the X-major view are the
    // other way around; X^j | H iff c_0..c_{j-1} = 0
    let lead_zero = coeffs.iter().take_while(|c| c.is_zero()).count();
    if lead_zero > 0 {
        roots.push(ProjPoint::zero());
        coeffs.drain(..lead_zero);
    }
    let trail_zero = coeffs.iter().rev().take_while(|c| c.is_zero()).count();
    if trail_zero > 0 {
        roots.push(ProjPoint::infinity());
        coeffs.truncate(coeffs.len() - trail_zero);
    }
    if coeffs.len() > 1 {
        let trailing = coeffs[0].abs();
        let leading = coeffs[coeffs.len() - 1].abs();
        let primitive = HomogForm::new(coeffs);
        let nums = divisors(&trailing)?;
        let dens = divisors(&leading)?;
        for a in &nums {
            for b in &dens {
                if !a.gcd(b).is_one() {
                    continue;
                }
                for sign in [1i64, -1] {
                    let cand_a = a * Int::from(sign);
                    if primitive.eval(&cand_a, b).is_zero() {
                        roots.push(ProjPoint::new(cand_a, b.clone())?);
                    }
                }
            }
        }
    }
    roots.sort();
    roots.dedup();
    Ok(roots)
}

/// Rational roots paired with their exact multiplicities.
pub fn rational_roots_with_multiplicity(h: &HomogForm) -> Result<Vec<(ProjPoint, u32)>> {
    let roots = rational_roots(h)?;
    Ok(roots
        .into_iter()
        .map(|r| {
            let m = h.root_multiplicity(&r);
            (r, m)
        })
        .collect())
}

impl std::fmt::Display for HomogForm {
    fn fmt(&self, fm: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let d = self.degree();
        let mut first = true;
        for i in (0..=d).rev() {
            let c = &self.coeffs[i];
            if c.is_zero() {
                continue;
            }
            let (sign, mag) = if c.is_negative() {
                ("-", c.abs())
            } else {
                ("+", c.clone())
            };
            if first {
                if sign == "-" {
                    write!(fm, "-")?;
                }
                first = false;
            } else {
                write!(fm, " {} ", sign)?;
            }
            let xs = match i {
                0 => String::new(),
                1 => "X".into(),
                _ => format!("X^{i}"),
            };
            let ys = match d - i {
                0 => String::new(),
                1 => "Y".into(),
                _ => format!("Y^{}", d - i),
            };
            let vars = format!("{xs}{}{ys}", if !xs.is_empty() && !ys.is_empty() { "*" } else { "" });
            if mag.is_one() && !vars.is_empty() {
                write!(fm, "{vars}")?;
            } else if vars.is_empty() {
                write!(fm, "{mag}")?;
            } else {
                write!(fm, "{mag}*{vars}")?;
            }
        }
        if first {
            write!(fm, "0")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn form(c: &[i64]) -> HomogForm {
        HomogForm::from_i64(c)
    }
    fn int(n: i64) -> Int {
        Int::from(n)
    }
    fn pt(a: i64, b: i64) -> ProjPoint {
        ProjPoint::new(int(a), int(b)).unwrap()
    }

    #[test]
    fn eval_examples() {
        // X^2 + Y^2 at (1,2)
        assert_eq!(form(&[1, 0, 1]).eval(&int(1), &int(2)), int(5));
        // XY at (3,0)
        assert_eq!(form(&[0, 1, 0]).eval(&int(3), &int(0)), int(0));
        // X^3 - 3X^2Y + XY^2 + 2Y^3 at (0,1)
        assert_eq!(form(&[2, 1, -3, 1]).eval(&int(0), &int(1)), int(2));
    }

    #[test]
    fn content_examples() {
        assert_eq!(form(&[4, 0, 2]).content().unwrap(), int(2)); // 2X^2+4Y^2
        assert_eq!(form(&[-1, 1]).content().unwrap(), int(1)); // X - Y
        assert_eq!(form(&[0, 9, 0, 6]).content().unwrap(), int(3)); // 6X^3+9XY^2
        assert!(HomogForm::zero(2).content().is_err());
    }

    #[test]
    fn resultant_examples() {
        // Res(X, Y)
        let r = resultant(&form(&[0, 1]), &form(&[1, 0])).unwrap();
        assert_eq!(r.abs(), int(1));
        // Res(X^2, 5Y^2) = 25
        let r = resultant(&form(&[0, 0, 1]), &form(&[5, 0, 0])).unwrap();
        assert_eq!(r.abs(), int(25));
        // Res(X^2+Y^2, XY) = 1
        let r = resultant(&form(&[1, 0, 1]), &form(&[0, 1, 0])).unwrap();
        assert_eq!(r.abs(), int(1));
    }

    #[test]
    fn resultant_quadratic_closed_form() {
        // Res(aX^2+bXY+cY^2, dX^2+eXY+fY^2) = (af-cd)^2 - (ae-bd)(bf-ce)
        let cases = [
            [1i64, 2, 3, 4, 5, 6],
            [2, -1, 7, 0, 3, -5],
            [1, 0, 1, 1, 1, 1],
            [3, 3, 1, -2, 0, 5],
        ];
        for [a, b, c, d, e, f] in cases {
            let lhs = resultant(&form(&[c, b, a]), &form(&[f, e, d])).unwrap();
            let expected = (int(a * f - c * d)).pow(2) - int(a * e - b * d) * int(b * f - c * e);
            assert_eq!(lhs.abs(), expected.abs(), "case {a},{b},{c},{d},{e},{f}");
        }
    }

    #[test]
    fn resultant_zero_iff_common_factor() {
        // (X - 2Y) common to both
        let f = form(&[-2, 1]).mul(&form(&[1, 1])); // (X-2Y)(X+Y)
        let g = form(&[-2, 1]).mul(&form(&[3, 1])); // (X-2Y)(X+3Y)
        assert_eq!(resultant(&f, &g).unwrap(), int(0));
    }

    #[test]
    fn resultant_swap_and_multiplicativity() {
        let f = form(&[1, 2, 3]);
        let g = form(&[4, -1, 2]);
        let l = form(&[5, 1]);
        let rf = resultant(&f, &g).unwrap();
        let rg = resultant(&g, &f).unwrap();
        assert_eq!(rf.abs(), rg.abs());
        let rfl = resultant(&f.mul(&l), &g).unwrap();
        let rl = resultant(&l, &g).unwrap();
        assert_eq!(rfl.abs(), (rf * rl).abs());
    }

    #[test]
    fn substitute_examples() {
        let x2 = form(&[0, 0, 1]);
        let y2 = form(&[1, 0, 0]);
        // H = X with any (F,G) returns F
        let h = HomogForm::x();
        assert_eq!(h.substitute(&x2, &y2).unwrap(), x2);
        // H = X^2, F = X^2, G = Y^2 -> X^4
        assert_eq!(
            x2.substitute(&x2, &y2).unwrap(),
            form(&[0, 0, 0, 0, 1])
        );
        // H = X + Y, F = X^2, G = Y^2 -> X^2 + Y^2
        let h = form(&[1, 1]);
        assert_eq!(h.substitute(&x2, &y2).unwrap(), form(&[1, 0, 1]));
        // degree mismatch
        assert!(h.substitute(&x2, &HomogForm::y()).is_err());
    }

    #[test]
    fn wronskian_examples() {
        let x2 = form(&[0, 0, 1]);
        let y2 = form(&[1, 0, 0]);
        // F = X^2, G = Y^2: F_X G_Y - F_Y G_X = 2X*2Y - 0 = 4XY
        assert_eq!(wronskian(&x2, &y2).unwrap(), form(&[0, 4, 0]));
        // F = X^2+Y^2, G = XY -> 2X^2 - 2Y^2
        let w = wronskian(&form(&[1, 0, 1]), &form(&[0, 1, 0])).unwrap();
        assert_eq!(w, form(&[-2, 0, 2]));
        assert_eq!(rational_roots(&w).unwrap(), vec![pt(-1, 1), pt(1, 1)]);
        // F = XY, G = Y^2 -> 2Y^2
        let w = wronskian(&form(&[0, 1, 0]), &form(&[1, 0, 0])).unwrap();
        assert_eq!(w, form(&[2, 0, 0]));
    }

    #[test]
    fn rational_roots_examples() {
        // XY(X-Y) = X^2 Y - X Y^2
        let h = form(&[0, -1, 1, 0]);
        assert_eq!(
            rational_roots(&h).unwrap(),
            vec![pt(0, 1), pt(1, 1), pt(1, 0)]
        );
        // X^2 - 5XY + 6Y^2 = (X-2Y)(X-3Y)
        let h = form(&[6, -5, 1]);
        assert_eq!(rational_roots(&h).unwrap(), vec![pt(2, 1), pt(3, 1)]);
        // X^2 + Y^2 has no rational roots
        assert!(rational_roots(&form(&[1, 0, 1])).unwrap().is_empty());
    }

    #[test]
    fn roots_exhaustive_small_box_oracle() {
        let samples = [
            form(&[6, -5, 1]),
            form(&[0, -1, 1, 0]),
            form(&[4, 0, -5, 0, 1]), // (X^2-Y^2)(X^2-4Y^2)
            form(&[-30, 31, -10, 1]),
        ];
        for h in &samples {
            let found = rational_roots(h).unwrap();
            for r in &found {
                assert!(h.eval(r.a(), r.b()).is_zero());
            }
            for a in -30i64..=30 {
                for b in 0i64..=30 {
                    if (a, b) == (0, 0) || int(a).gcd(&int(b)) != int(1) {
                        continue;
                    }
                    if h.eval(&int(a), &int(b)).is_zero() {
                        let p = ProjPoint::new(int(a), int(b)).unwrap();
                        assert!(found.contains(&p), "missing root {p} of {h}");
                    }
                }
            }
        }
    }

    #[test]
    fn multiplicity_by_exact_division() {
        // (X - Y)^2 (X + 2Y)
        let h = form(&[-1, 1]).mul(&form(&[-1, 1])).mul(&form(&[2, 1]));
        let ms = rational_roots_with_multiplicity(&h).unwrap();
        assert!(ms.contains(&(pt(1, 1), 2)));
        assert!(ms.contains(&(pt(-2, 1), 1)));
        // Y^3 factor
        let h = HomogForm::y().pow(3).mul(&form(&[-1, 1]));
        assert_eq!(h.root_multiplicity(&pt(1, 0)), 3);
    }
}
