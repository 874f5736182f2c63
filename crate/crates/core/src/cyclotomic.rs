//! Exact arithmetic in the cyclotomic fields `Q(ζ_m)`.
//!
//! An element is a rational vector in the power basis
//! `1, ζ, ..., ζ^(φ(m)-1)`, stored as `i128` numerators over one positive
//! denominator. Products and powers of `ζ` beyond the basis are reduced
//! with a per-conductor table of the canonical forms of `ζ^i`, `i < m`.
//! Arithmetic is checked: an `i128` overflow panics rather than wrapping.

use std::cmp::Ordering;
use std::collections::HashMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::{Arc, Mutex, OnceLock};

use num_integer::Integer;

#[derive(Debug)]
struct Ring {
    m: u32,
    phi: usize,
    /// canonical coefficients of ζ^i for i in 0..m
    red: Vec<Vec<i128>>,
}

/// Integer coefficients of the `m`-th cyclotomic polynomial, lowest first.
pub fn cyclotomic_polynomial(m: u32) -> Vec<i128> {
    // x^m - 1 divided by Φ_d for every proper divisor d of m
    let mut num = vec![0i128; m as usize + 1];
    num[0] = -1;
    num[m as usize] = 1;
    for d in 1..m {
        if m % d == 0 {
            num = exact_div(&num, &cyclotomic_polynomial(d));
        }
    }
    num
}

fn exact_div(a: &[i128], b: &[i128]) -> Vec<i128> {
    let (da, db) = (a.len() - 1, b.len() - 1);
    debug_assert_eq!(*b.last().unwrap(), 1);
    let mut r = a.to_vec();
    let mut q = vec![0i128; da - db + 1];
    for i in (0..=da - db).rev() {
        let c = r[i + db];
        q[i] = c;
        for (j, &bj) in b.iter().enumerate() {
            r[i + j] -= c * bj;
        }
    }
    debug_assert!(r.iter().all(|&x| x == 0), "division is exact");
    q
}

fn ring(m: u32) -> Arc<Ring> {
    static RINGS: OnceLock<Mutex<HashMap<u32, Arc<Ring>>>> = OnceLock::new();
    assert!(m >= 1, "conductor must be positive");
    let rings = RINGS.get_or_init(|| Mutex::new(HashMap::new()));
    if let Some(r) = rings.lock().unwrap().get(&m) {
        return r.clone();
    }
    let poly = cyclotomic_polynomial(m);
    let phi = poly.len() - 1;
    let mut red = Vec::with_capacity(m as usize);
    let mut cur = vec![0i128; phi];
    cur[0] = 1;
    for _ in 0..m {
        red.push(cur.clone());
        // multiply by x and reduce x^phi = -sum poly[j] x^j
        let top = cur[phi - 1];
        for j in (1..phi).rev() {
            cur[j] = cur[j - 1];
        }
        cur[0] = 0;
        for j in 0..phi {
            cur[j] = checked_sub(cur[j], checked_mul(top, poly[j]));
        }
    }
    debug_assert_eq!(cur, red[0], "ζ^m = 1");
    let r = Arc::new(Ring { m, phi, red });
    rings.lock().unwrap().entry(m).or_insert(r).clone()
}

fn checked_mul(a: i128, b: i128) -> i128 {
    a.checked_mul(b).expect("cyclotomic coefficient overflow")
}

fn checked_add(a: i128, b: i128) -> i128 {
    a.checked_add(b).expect("cyclotomic coefficient overflow")
}

fn checked_sub(a: i128, b: i128) -> i128 {
    a.checked_sub(b).expect("cyclotomic coefficient overflow")
}

/// An element of `Q(ζ_m)` in canonical form.
#[derive(Clone)]
pub struct Cyclotomic {
    ring: Arc<Ring>,
    num: Vec<i128>,
    den: i128,
}

impl fmt::Debug for Cyclotomic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Cyclotomic({}; {})", self.ring.m, self)
    }
}

impl PartialEq for Cyclotomic {
    fn eq(&self, other: &Self) -> bool {
        if self.ring.m == other.ring.m {
            return self.den == other.den && self.num == other.num;
        }
        let (a, b) = common(self, other);
        a.den == b.den && a.num == b.num
    }
}

impl Eq for Cyclotomic {}

/// Equal values over different conductors must hash alike, so only the
/// rational part (which is conductor independent) is hashed.
impl std::hash::Hash for Cyclotomic {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.to_rational().hash(state);
    }
}

/// Lifts two elements to the least common conductor.
fn common(a: &Cyclotomic, b: &Cyclotomic) -> (Cyclotomic, Cyclotomic) {
    if a.ring.m == b.ring.m {
        return (a.clone(), b.clone());
    }
    let m = a.ring.m.lcm(&b.ring.m);
    (a.lift(m), b.lift(m))
}

impl Cyclotomic {
    pub fn zero(m: u32) -> Self {
        let ring = ring(m);
        let num = vec![0; ring.phi];
        Cyclotomic { ring, num, den: 1 }
    }

    pub fn one(m: u32) -> Self {
        Self::from_int(m, 1)
    }

    pub fn from_int(m: u32, a: i128) -> Self {
        Self::from_rational(m, a, 1)
    }

    pub fn from_rational(m: u32, num: i128, den: i128) -> Self {
        assert_ne!(den, 0, "zero denominator");
        let mut z = Self::zero(m);
        z.num[0] = num;
        z.den = den;
        z.normalize();
        z
    }

    /// `ζ_m^j`
    pub fn root(m: u32, j: i64) -> Self {
        let ring = ring(m);
        let idx = j.rem_euclid(m as i64) as usize;
        let num = ring.red[idx].clone();
        Cyclotomic { ring, num, den: 1 }
    }

    /// `(Σ full[i] ζ_m^i) / den` for any length-`m` coefficient vector.
    pub fn from_full(m: u32, full: &[i128], den: i128) -> Self {
        assert_eq!(full.len(), m as usize);
        assert_ne!(den, 0, "zero denominator");
        let ring = ring(m);
        let mut num = vec![0i128; ring.phi];
        for (i, &c) in full.iter().enumerate() {
            if c != 0 {
                for (n, &r) in num.iter_mut().zip(&ring.red[i]) {
                    *n = checked_add(*n, checked_mul(c, r));
                }
            }
        }
        let mut z = Cyclotomic { ring, num, den };
        z.normalize();
        z
    }

    fn normalize(&mut self) {
        if self.den < 0 {
            self.den = -self.den;
            for n in &mut self.num {
                *n = -*n;
            }
        }
        let g = self.num.iter().fold(self.den, |g, &n| g.gcd(&n));
        if g > 1 {
            self.den /= g;
            for n in &mut self.num {
                *n /= g;
            }
        }
    }

    pub fn conductor(&self) -> u32 {
        self.ring.m
    }

    /// Numerators of the power-basis coefficients.
    pub fn numerators(&self) -> &[i128] {
        &self.num
    }

    pub fn denominator(&self) -> i128 {
        self.den
    }

    /// Power-basis coefficients as reduced fractions `(num, den)`.
    pub fn coefficients(&self) -> Vec<(i128, i128)> {
        self.num
            .iter()
            .map(|&n| {
                let g = n.gcd(&self.den);
                (n / g, self.den / g)
            })
            .collect()
    }

    pub fn is_zero(&self) -> bool {
        self.num.iter().all(|&n| n == 0)
    }

    pub fn is_rational(&self) -> bool {
        self.num[1..].iter().all(|&n| n == 0)
    }

    /// `(num, den)` with `den > 0` if the element is rational.
    pub fn to_rational(&self) -> Option<(i128, i128)> {
        self.is_rational().then(|| self.coefficients()[0])
    }

    /// The value as a rational integer, if it is one.
    pub fn to_integer(&self) -> Option<i128> {
        self.to_rational().and_then(|(n, d)| (d == 1).then_some(n))
    }

    pub fn is_integer(&self) -> bool {
        self.to_integer().is_some()
    }

    /// Same element over conductor `m2`, a multiple of the current one.
    pub fn lift(&self, m2: u32) -> Self {
        let m = self.ring.m;
        assert_eq!(m2 % m, 0, "target conductor must be a multiple");
        if m2 == m {
            return self.clone();
        }
        let step = (m2 / m) as usize;
        let mut full = vec![0i128; m2 as usize];
        for (i, &c) in self.num.iter().enumerate() {
            full[i * step] = c;
        }
        Self::from_full(m2, &full, self.den)
    }

    #[cfg(test)]
    fn to_full(&self) -> Vec<i128> {
        let mut full = vec![0i128; self.ring.m as usize];
        full[..self.ring.phi].copy_from_slice(&self.num);
        full
    }

    /// Image under `ζ -> ζ^k`, `gcd(k, m) = 1`.
    pub fn galois(&self, k: i64) -> Self {
        let m = self.ring.m as i64;
        assert_eq!(k.rem_euclid(m).gcd(&m), 1, "galois exponent must be a unit mod the conductor");
        let mut full = vec![0i128; m as usize];
        for (i, &c) in self.num.iter().enumerate() {
            full[(i as i64 * k).rem_euclid(m) as usize] = c;
        }
        Self::from_full(m as u32, &full, self.den)
    }

    /// Complex conjugate.
    pub fn conj(&self) -> Self {
        self.galois(-1)
    }

    /// `self · ζ_m^j`
    pub fn mul_root(&self, j: i64) -> Self {
        let m = self.ring.m as i64;
        let mut full = vec![0i128; m as usize];
        for (i, &c) in self.num.iter().enumerate() {
            full[(i as i64 + j).rem_euclid(m) as usize] = c;
        }
        Self::from_full(m as u32, &full, self.den)
    }

    /// `self · num / den`
    pub fn scale(&self, num: i128, den: i128) -> Self {
        assert_ne!(den, 0, "zero denominator");
        let mut z = self.clone();
        for n in &mut z.num {
            *n = checked_mul(*n, num);
        }
        z.den = checked_mul(z.den, den);
        z.normalize();
        z
    }

    /// Approximate value as `(re, im)`.
    pub fn to_complex(&self) -> (f64, f64) {
        let m = self.ring.m as f64;
        let (mut re, mut im) = (0.0, 0.0);
        for (i, &c) in self.num.iter().enumerate() {
            let t = 2.0 * std::f64::consts::PI * i as f64 / m;
            re += c as f64 * t.cos();
            im += c as f64 * t.sin();
        }
        (re / self.den as f64, im / self.den as f64)
    }

    /// Coefficients as strings `"a"` or `"a/b"`, lowest basis power first.
    pub fn coefficient_strings(&self) -> Vec<String> {
        self.coefficients()
            .into_iter()
            .map(|(n, d)| if d == 1 { n.to_string() } else { format!("{n}/{d}") })
            .collect()
    }

    fn add_impl(&self, other: &Self, sign: i128) -> Self {
        if self.ring.m != other.ring.m {
            let (a, b) = common(self, other);
            return a.add_impl(&b, sign);
        }
        let l = self.den.lcm(&other.den);
        let (fa, fb) = (l / self.den, l / other.den);
        let num = self
            .num
            .iter()
            .zip(&other.num)
            .map(|(&a, &b)| checked_add(checked_mul(a, fa), checked_mul(sign, checked_mul(b, fb))))
            .collect();
        let mut z = Cyclotomic { ring: self.ring.clone(), num, den: l };
        z.normalize();
        z
    }

    fn mul_impl(&self, other: &Self) -> Self {
        if self.ring.m != other.ring.m {
            let (a, b) = common(self, other);
            return a.mul_impl(&b);
        }
        let m = self.ring.m as usize;
        let mut full = vec![0i128; m];
        for (i, &a) in self.num.iter().enumerate() {
            if a == 0 {
                continue;
            }
            for (j, &b) in other.num.iter().enumerate() {
                let k = (i + j) % m;
                full[k] = checked_add(full[k], checked_mul(a, b));
            }
        }
        Self::from_full(m as u32, &full, checked_mul(self.den, other.den))
    }
}

impl Add for &Cyclotomic {
    type Output = Cyclotomic;
    fn add(self, rhs: &Cyclotomic) -> Cyclotomic {
        self.add_impl(rhs, 1)
    }
}

impl Sub for &Cyclotomic {
    type Output = Cyclotomic;
    fn sub(self, rhs: &Cyclotomic) -> Cyclotomic {
        self.add_impl(rhs, -1)
    }
}

impl Mul for &Cyclotomic {
    type Output = Cyclotomic;
    fn mul(self, rhs: &Cyclotomic) -> Cyclotomic {
        self.mul_impl(rhs)
    }
}

impl Neg for &Cyclotomic {
    type Output = Cyclotomic;
    fn neg(self) -> Cyclotomic {
        self.scale(-1, 1)
    }
}

impl Add for Cyclotomic {
    type Output = Cyclotomic;
    fn add(self, rhs: Cyclotomic) -> Cyclotomic {
        &self + &rhs
    }
}

impl Sub for Cyclotomic {
    type Output = Cyclotomic;
    fn sub(self, rhs: Cyclotomic) -> Cyclotomic {
        &self - &rhs
    }
}

impl Mul for Cyclotomic {
    type Output = Cyclotomic;
    fn mul(self, rhs: Cyclotomic) -> Cyclotomic {
        &self * &rhs
    }
}

impl Neg for Cyclotomic {
    type Output = Cyclotomic;
    fn neg(self) -> Cyclotomic {
        -&self
    }
}

/// Total order on the coefficient vectors, compared as rationals from the
/// constant term up. Values over different conductors are compared in
/// their common field; the order carries no arithmetic meaning.
impl Ord for Cyclotomic {
    fn cmp(&self, other: &Self) -> Ordering {
        if self.ring.m != other.ring.m {
            let (a, b) = common(self, other);
            return a.cmp(&b);
        }
        for (&a, &b) in self.num.iter().zip(&other.num) {
            let o = checked_mul(a, other.den).cmp(&checked_mul(b, self.den));
            if o != Ordering::Equal {
                return o;
            }
        }
        Ordering::Equal
    }
}

impl PartialOrd for Cyclotomic {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Sums of the form `Σ c · ζ^s · x` accumulated in the full basis and
/// reduced once at the end.
#[derive(Debug, Clone)]
pub struct Accumulator {
    m: u32,
    full: Vec<i128>,
    den: i128,
}

impl Accumulator {
    pub fn new(m: u32) -> Self {
        Accumulator { m, full: vec![0; m as usize], den: 1 }
    }

    /// Adds `c · ζ_m^shift · x`; `x` must have conductor `m`.
    pub fn add_rotated(&mut self, x: &Cyclotomic, shift: i64, c: i128) {
        assert_eq!(x.conductor(), self.m, "accumulator conductor mismatch");
        if c == 0 || x.is_zero() {
            return;
        }
        if x.den != self.den {
            let l = self.den.lcm(&x.den);
            let f = l / self.den;
            if f != 1 {
                for v in &mut self.full {
                    *v = checked_mul(*v, f);
                }
            }
            self.den = l;
        }
        let fx = checked_mul(c, self.den / x.den);
        let m = self.m as i64;
        for (i, &n) in x.num.iter().enumerate() {
            if n != 0 {
                let k = (i as i64 + shift).rem_euclid(m) as usize;
                self.full[k] = checked_add(self.full[k], checked_mul(fx, n));
            }
        }
    }

    pub fn finish(&self) -> Cyclotomic {
        Cyclotomic::from_full(self.m, &self.full, self.den)
    }
}

impl fmt::Display for Cyclotomic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, (n, d)) in self.coefficients().into_iter().enumerate() {
            if n == 0 {
                continue;
            }
            let sign = if n < 0 { "-" } else if first { "" } else { "+" };
            let a = n.abs();
            let coeff = if d == 1 { a.to_string() } else { format!("{a}/{d}") };
            let root = match i {
                0 => String::new(),
                1 => format!("E({})", self.ring.m),
                _ => format!("E({})^{i}", self.ring.m),
            };
            match (i, a == 1 && d == 1) {
                (0, _) => write!(f, "{sign}{coeff}")?,
                (_, true) => write!(f, "{sign}{root}")?,
                (_, false) => write!(f, "{sign}{coeff}*{root}")?,
            }
            first = false;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn cyclotomic_polynomials() {
        assert_eq!(cyclotomic_polynomial(1), vec![-1, 1]);
        assert_eq!(cyclotomic_polynomial(4), vec![1, 0, 1]);
        assert_eq!(cyclotomic_polynomial(6), vec![1, -1, 1]);
        assert_eq!(cyclotomic_polynomial(12), vec![1, 0, -1, 0, 1]);
        // Φ_105 is the first with a coefficient of absolute value 2
        assert!(cyclotomic_polynomial(105).contains(&-2));
    }

    #[test]
    fn roots_of_unity_sum_to_zero() {
        for m in [2u32, 3, 4, 5, 6, 8, 9, 12, 24] {
            let mut s = Cyclotomic::zero(m);
            for j in 0..m as i64 {
                s = &s + &Cyclotomic::root(m, j);
            }
            assert!(s.is_zero(), "m = {m}");
            assert_eq!(Cyclotomic::root(m, m as i64), Cyclotomic::one(m));
        }
    }

    #[test]
    fn small_identities() {
        let w = Cyclotomic::root(3, 1);
        // 1 + w + w^2 = 0, so w^2 = -1 - w and w + conj(w) = -1
        assert_eq!(&w + &w.conj(), Cyclotomic::from_int(3, -1));
        let i = Cyclotomic::root(4, 1);
        assert_eq!(&i * &i, Cyclotomic::from_int(4, -1));
        // sqrt(2) = ζ8 + ζ8^-1
        let r2 = &Cyclotomic::root(8, 1) + &Cyclotomic::root(8, -1);
        assert_eq!(&r2 * &r2, Cyclotomic::from_int(8, 2));
        assert!(!r2.is_rational());
        assert_eq!(Cyclotomic::root(2, 1), Cyclotomic::from_int(2, -1));
    }

    #[test]
    fn mixed_conductors_lift() {
        let a = Cyclotomic::root(3, 1);
        let b = Cyclotomic::root(4, 1);
        let s = &a + &b;
        assert_eq!(s.conductor(), 12);
        assert_eq!(a.lift(12), Cyclotomic::root(12, 4));
        assert_eq!(a, Cyclotomic::root(12, 4));
    }

    #[test]
    fn rationals_and_display() {
        let h = Cyclotomic::from_rational(6, 3, -6);
        assert_eq!(h.to_rational(), Some((-1, 2)));
        assert_eq!(h.to_string(), "-1/2");
        assert_eq!(Cyclotomic::root(5, 2).to_string(), "E(5)^2");
        assert_eq!(Cyclotomic::root(3, 2).to_string(), "-1-E(3)");
        assert_eq!(Cyclotomic::from_int(7, 4).to_integer(), Some(4));
        assert!(!h.is_integer());
        assert_eq!(h.coefficient_strings()[0], "-1/2");
    }

    #[test]
    fn accumulator_matches_direct_sum() {
        let x = &Cyclotomic::root(12, 5) + &Cyclotomic::from_rational(12, 1, 3);
        let mut acc = Accumulator::new(12);
        acc.add_rotated(&x, 3, 2);
        acc.add_rotated(&Cyclotomic::from_rational(12, 1, 2), -1, 1);
        let direct = &x.mul_root(3).scale(2, 1) + &Cyclotomic::from_rational(12, 1, 2).mul_root(-1);
        assert_eq!(acc.finish(), direct);
    }

    #[test]
    #[should_panic(expected = "overflow")]
    fn overflow_panics() {
        let big = Cyclotomic::from_int(1, i128::MAX / 2);
        let _ = &big * &big;
    }

    fn arb(m: u32) -> impl Strategy<Value = Cyclotomic> {
        (proptest::collection::vec(-20i128..20, m as usize), 1i128..7)
            .prop_map(move |(full, den)| Cyclotomic::from_full(m, &full, den))
    }

    fn close(a: (f64, f64), b: (f64, f64)) -> bool {
        (a.0 - b.0).abs() < 1e-6 && (a.1 - b.1).abs() < 1e-6
    }

    proptest! {
        #[test]
        fn reduction_is_idempotent(x in arb(12)) {
            let full = x.to_full();
            prop_assert_eq!(Cyclotomic::from_full(12, &full, x.denominator()), x);
        }

        #[test]
        fn ring_axioms(a in arb(9), b in arb(9), c in arb(9)) {
            prop_assert_eq!(&(&a + &b) * &c, &(&a * &c) + &(&b * &c));
            prop_assert_eq!(&a * &b, &b * &a);
            prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
            prop_assert!((&a - &a).is_zero());
        }

        #[test]
        fn galois_maps_are_ring_homomorphisms(a in arb(8), b in arb(8), k in prop::sample::select(vec![1i64, 3, 5, 7])) {
            prop_assert_eq!((&a * &b).galois(k), &a.galois(k) * &b.galois(k));
            prop_assert_eq!((&a + &b).galois(k), &a.galois(k) + &b.galois(k));
            prop_assert_eq!(a.conj().conj(), a.clone());
        }

        #[test]
        fn complex_embedding_agrees(a in arb(10), b in arb(10)) {
            let (x, y) = (a.to_complex(), b.to_complex());
            let prod = (x.0 * y.0 - x.1 * y.1, x.0 * y.1 + x.1 * y.0);
            prop_assert!(close((&a * &b).to_complex(), prod));
            let c = a.conj().to_complex();
            prop_assert!(close(c, (x.0, -x.1)));
            prop_assert!(close(a.lift(30).to_complex(), x));
        }

        #[test]
        fn norm_of_conjugate_product_is_nonnegative(a in arb(5)) {
            let n = &a * &a.conj();
            prop_assert!(n.to_complex().0 >= -1e-9);
        }
    }
}
