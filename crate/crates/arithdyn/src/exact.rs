//! Arbitrary-precision integer and rational arithmetic: p-adic valuations,
//! deterministic factorization with an explicit effort budget, and divisor
//! enumeration.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::{Error, Result};

pub type Int = BigInt;
pub type Rat = num_rational::BigRational;

/// Trial division limit before switching to Pollard-Brent rho.
const TRIAL_LIMIT: u64 = 1_000_000;

/// Default rho iteration budget per composite.
pub const DEFAULT_RHO_BUDGET: u64 = 2_000_000;

/// Exponent of `p` in the nonzero integer `n`.
pub fn vp_int(n: &Int, p: &Int) -> u64 {
    assert!(!n.is_zero(), "vp_int of zero");
    let mut v = 0u64;
    let mut cur = n.clone();
    loop {
        let (q, r) = cur.div_rem(p);
        if !r.is_zero() {
            return v;
        }
        v += 1;
        cur = q;
    }
}

/// Exponent of the prime `p` in the nonzero rational `q`; negative when `p`
/// divides the denominator.
pub fn vp(q: &Rat, p: &Int) -> Result<i64> {
    if q.is_zero() {
        return Err(Error::ZeroValuation);
    }
    let num = vp_int(q.numer(), p) as i64;
    let den = vp_int(q.denom(), p) as i64;
    Ok(num - den)
}

/// Complete prime factorization of a nonzero integer.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Factorization {
    pub sign: i8,
    /// (prime, exponent) with primes strictly increasing.
    pub factors: Vec<(Int, u32)>,
}

impl Factorization {
    /// Multiplies the factorization back together.
    pub fn reconstruct(&self) -> Int {
        let mut n = Int::from(self.sign);
        for (p, e) in &self.factors {
            n *= p.pow(*e);
        }
        n
    }
}

/// Deterministic Miller-Rabin. The witness set is provably sufficient for
/// n < 3.3 * 10^24, far beyond anything a resultant at desk scale produces.
pub fn is_prime(n: &Int) -> bool {
    if *n < Int::from(2) {
        return false;
    }
    for small in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        let sp = Int::from(small);
        if *n == sp {
            return true;
        }
        if (n % &sp).is_zero() {
            return false;
        }
    }
    let one = Int::one();
    let n_minus_1 = n - &one;
    let s = vp_int(&n_minus_1, &Int::from(2));
    let d = &n_minus_1 >> s;
    'witness: for a in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        let mut x = Int::from(a).modpow(&d, n);
        if x.is_one() || x == n_minus_1 {
            continue;
        }
        for _ in 0..s.saturating_sub(1) {
            x = x.modpow(&Int::from(2), n);
            if x == n_minus_1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

fn mulmod(a: &Int, b: &Int, m: &Int) -> Int {
    (a * b) % m
}

/// Pollard-Brent rho with fixed seeding; returns a nontrivial factor of the
/// odd composite `n`, or None when the iteration budget runs out.
fn pollard_brent(n: &Int, budget: u64) -> Option<Int> {
    let one = Int::one();
    let two = Int::from(2);
    let mut used = 0u64;
    // deterministic parameter sweep keeps runs reproducible
    for c in 1u64..64 {
        let c = Int::from(c);
        let mut y = two.clone();
        let mut r: u64 = 1;
        let mut q = one.clone();
        let (mut g, mut x, mut ys) = (one.clone(), y.clone(), y.clone());
        while g.is_one() {
            x = y.clone();
            for _ in 0..r {
                y = (mulmod(&y, &y, n) + &c) % n;
            }
            let mut k: u64 = 0;
            while k < r && g.is_one() {
                ys = y.clone();
                let m = 128.min(r - k);
                for _ in 0..m {
                    y = (mulmod(&y, &y, n) + &c) % n;
                    let diff = if x >= y { &x - &y } else { &y - &x };
                    q = mulmod(&q, &diff, n);
                }
                used += m;
                if used > budget {
                    return None;
                }
                g = q.gcd(n);
                k += m;
            }
            r *= 2;
        }
        if g == *n {
            // backtrack one step at a time
            loop {
                ys = (mulmod(&ys, &ys, n) + &c) % n;
                let diff = if x >= ys { &x - &ys } else { &ys - &x };
                g = diff.gcd(n);
                if !g.is_one() {
                    break;
                }
                used += 1;
                if used > budget {
                    return None;
                }
            }
        }
        if g != *n {
            return Some(g);
        }
        // cycle degenerated for this c; try the next one
    }
    None
}

/// Factorizes a nonzero integer with the default effort budget.
pub fn factorize(n: &Int) -> Result<Factorization> {
    factorize_with_budget(n, DEFAULT_RHO_BUDGET)
}

/// Factorizes a nonzero integer. A composite that survives trial division to
/// 10^6 and the rho budget is reported as an unfactored residue, never as a
/// silently wrong answer.
pub fn factorize_with_budget(n: &Int, budget: u64) -> Result<Factorization> {
    if n.is_zero() {
        return Err(Error::FactorizeZero);
    }
    let sign = if n.is_negative() { -1i8 } else { 1 };
    let mut m = n.abs();
    let mut factors: Vec<(Int, u32)> = Vec::new();
    let push = |p: Int, e: u32, factors: &mut Vec<(Int, u32)>| {
        factors.push((p, e));
    };
    for small in [2u64, 3, 5] {
        let sp = Int::from(small);
        let e = strip(&mut m, &sp);
        if e > 0 {
            push(sp, e, &mut factors);
        }
    }
    // wheel over 6k±1
    let mut d: u64 = 7;
    let mut step = 4;
    while d <= TRIAL_LIMIT && Int::from(d).pow(2) <= m {
        let dp = Int::from(d);
        let e = strip(&mut m, &dp);
        if e > 0 {
            push(dp, e, &mut factors);
        }
        d += step;
        step = 6 - step;
    }
    if !m.is_one() {
        // everything left is coprime to primes <= 10^6
        let mut stack = vec![m];
        let mut found: Vec<Int> = Vec::new();
        while let Some(c) = stack.pop() {
            if c.is_one() {
                continue;
            }
            if is_prime(&c) {
                found.push(c);
                continue;
            }
            // perfect-power check keeps rho off squares it handles poorly
            if let Some(root) = perfect_power_root(&c) {
                stack.push(root.0.clone());
                for _ in 1..root.1 {
                    stack.push(root.0.clone());
                }
                continue;
            }
            match pollard_brent(&c, budget) {
                Some(f) => {
                    stack.push(&c / &f);
                    stack.push(f);
                }
                None => return Err(Error::UnfactoredResidue(c)),
            }
        }
        found.sort();
        let mut i = 0;
        while i < found.len() {
            let mut e = 1u32;
            while i + 1 < found.len() && found[i + 1] == found[i] {
                e += 1;
                found.remove(i + 1);
            }
            factors.push((found[i].clone(), e));
            i += 1;
        }
    }
    factors.sort_by(|a, b| a.0.cmp(&b.0));
    Ok(Factorization { sign, factors })
}

fn strip(m: &mut Int, p: &Int) -> u32 {
    let mut e = 0u32;
    loop {
        let (q, r) = m.div_rem(p);
        if !r.is_zero() {
            return e;
        }
        *m = q;
        e += 1;
    }
}

/// Largest k-th root decomposition n = r^k with k maximal > 1, if any.
fn perfect_power_root(n: &Int) -> Option<(Int, u32)> {
    let bits = n.bits();
    for k in (2..=bits.max(2)).rev() {
        let r = n.nth_root(k as u32);
        if r.pow(k as u32) == *n && r > Int::one() {
            return Some((r, k as u32));
        }
    }
    None
}

/// All positive divisors of `n >= 1`, ascending.
pub fn divisors(n: &Int) -> Result<Vec<Int>> {
    if n.is_one() {
        return Ok(vec![Int::one()]);
    }
    let f = factorize(n)?;
    let mut divs = vec![Int::one()];
    for (p, e) in &f.factors {
        let mut next = Vec::with_capacity(divs.len() * (*e as usize + 1));
        for d in &divs {
            let mut pe = Int::one();
            for _ in 0..=*e {
                next.push(d * &pe);
                pe *= p;
            }
        }
        divs = next;
    }
    divs.sort();
    Ok(divs)
}

/// Primes up to `limit`, ascending.
pub fn primes_up_to(limit: u64) -> Vec<u64> {
    if limit < 2 {
        return vec![];
    }
    let n = limit as usize;
    let mut sieve = vec![true; n + 1];
    sieve[0] = false;
    sieve[1] = false;
    let mut i = 2;
    while i * i <= n {
        if sieve[i] {
            let mut j = i * i;
            while j <= n {
                sieve[j] = false;
                j += i;
            }
        }
        i += 1;
    }
    sieve
        .iter()
        .enumerate()
        .filter_map(|(i, &b)| if b { Some(i as u64) } else { None })
        .collect()
}

/// Parses an integer or `a/b` fraction into a reduced rational.
pub fn parse_rational(s: &str) -> Option<Rat> {
    if let Some((n, d)) = s.split_once('/') {
        let n: Int = n.trim().parse().ok()?;
        let d: Int = d.trim().parse().ok()?;
        if d.is_zero() {
            return None;
        }
        Some(Rat::new(n, d))
    } else {
        let n: Int = s.trim().parse().ok()?;
        Some(Rat::from_integer(n))
    }
}
