//! `GF(p^k)` arithmetic and the `F_p`-linear algebra of `W x W^∨`.
//!
//! Field elements are encoded as integers `0..q` whose base-`p` digits are
//! the polynomial-basis coefficients, lowest degree first. The modulus is
//! the first monic irreducible of degree `k` when the lower coefficient
//! vectors are read as base-`p` integers, so every field is reproducible
//! without a table of Conway polynomials.

use std::collections::HashSet;

use crate::error::{Error, Result};
use crate::modp::{self, Matrix};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct FieldElement(pub u32);

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Field {
    p: u64,
    k: u32,
    q: u64,
    /// monic, lowest degree first, length k + 1
    modulus: Vec<u64>,
}

/// The unit group listed in index order together with a generator.
#[derive(Debug, Clone)]
pub struct Units {
    pub generator: FieldElement,
    pub elements: Vec<FieldElement>,
}

impl Field {
    pub fn new(p: u64, k: u32) -> Result<Field> {
        if !modp::is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        assert!(k >= 1, "extension degree must be positive");
        let q = p.checked_pow(k).filter(|&q| q <= 1 << 16).ok_or(Error::OrderBoundExceeded {
            order: usize::MAX,
            bound: 1 << 16,
        })?;
        let modulus = (0..q)
            .map(|low| {
                let mut m = digits(low, p, k as usize);
                m.push(1);
                m
            })
            .find(|m| is_irreducible(m, p))
            .expect("irreducible polynomials exist in every degree");
        Ok(Field { p, k, q, modulus })
    }

    /// Field of prime-power order `q`.
    pub fn of_order(q: u64) -> Result<Field> {
        let (p, k) = modp::prime_power(q).ok_or(Error::NotPrimePower(q))?;
        Field::new(p, k)
    }

    pub fn characteristic(&self) -> u64 {
        self.p
    }

    pub fn degree(&self) -> u32 {
        self.k
    }

    pub fn order(&self) -> u64 {
        self.q
    }

    pub fn modulus(&self) -> &[u64] {
        &self.modulus
    }

    pub fn zero(&self) -> FieldElement {
        FieldElement(0)
    }

    pub fn one(&self) -> FieldElement {
        FieldElement(1)
    }

    pub fn elements(&self) -> impl Iterator<Item = FieldElement> {
        (0..self.q as u32).map(FieldElement)
    }

    pub fn coeffs(&self, x: FieldElement) -> Vec<u64> {
        digits(x.0 as u64, self.p, self.k as usize)
    }

    pub fn from_coeffs(&self, c: &[u64]) -> FieldElement {
        assert!(c.len() <= self.k as usize);
        FieldElement(c.iter().rev().fold(0u64, |acc, &d| acc * self.p + d % self.p) as u32)
    }

    /// Image of an integer in the prime subfield.
    pub fn from_int(&self, a: i64) -> FieldElement {
        FieldElement(a.rem_euclid(self.p as i64) as u32)
    }

    pub fn add(&self, a: FieldElement, b: FieldElement) -> FieldElement {
        let (ca, cb) = (self.coeffs(a), self.coeffs(b));
        let s: Vec<u64> = ca.iter().zip(&cb).map(|(&x, &y)| modp::add(x, y, self.p)).collect();
        self.from_coeffs(&s)
    }

    pub fn neg(&self, a: FieldElement) -> FieldElement {
        let s: Vec<u64> = self.coeffs(a).iter().map(|&x| modp::sub(0, x, self.p)).collect();
        self.from_coeffs(&s)
    }

    pub fn sub(&self, a: FieldElement, b: FieldElement) -> FieldElement {
        self.add(a, self.neg(b))
    }

    pub fn mul(&self, a: FieldElement, b: FieldElement) -> FieldElement {
        let (ca, cb) = (self.coeffs(a), self.coeffs(b));
        let k = self.k as usize;
        let p = self.p;
        let mut prod = vec![0u64; 2 * k - 1];
        for (i, &x) in ca.iter().enumerate() {
            for (j, &y) in cb.iter().enumerate() {
                prod[i + j] = modp::add(prod[i + j], modp::mul(x, y, p), p);
            }
        }
        // reduce modulo the monic modulus, top degree down
        for d in (k..prod.len()).rev() {
            let c = prod[d];
            if c == 0 {
                continue;
            }
            for (i, &m) in self.modulus.iter().enumerate() {
                let idx = d - k + i;
                prod[idx] = modp::sub(prod[idx], modp::mul(c, m, p), p);
            }
        }
        self.from_coeffs(&prod[..k])
    }

    pub fn pow(&self, a: FieldElement, mut e: u64) -> FieldElement {
        let mut acc = self.one();
        let mut base = a;
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            e >>= 1;
        }
        acc
    }

    pub fn inv(&self, a: FieldElement) -> Result<FieldElement> {
        if a.0 == 0 {
            return Err(Error::DivisionByZero);
        }
        Ok(self.pow(a, self.q - 2))
    }

    /// `x -> x^p`
    pub fn frobenius(&self, a: FieldElement) -> FieldElement {
        self.pow(a, self.p)
    }

    pub fn multiplicative_order(&self, a: FieldElement) -> u64 {
        assert_ne!(a.0, 0);
        let mut x = a;
        let mut k = 1;
        while x != self.one() {
            x = self.mul(x, a);
            k += 1;
        }
        k
    }

    /// All `q - 1` units in index order, plus the smallest-index unit of
    /// order `q - 1` (verified).
    pub fn units(&self) -> Units {
        let elements: Vec<FieldElement> = self.elements().skip(1).collect();
        let generator = *elements
            .iter()
            .find(|&&x| self.multiplicative_order(x) == self.q - 1)
            .expect("the unit group of a finite field is cyclic");
        Units { generator, elements }
    }
}

fn digits(mut x: u64, p: u64, k: usize) -> Vec<u64> {
    let mut out = Vec::with_capacity(k);
    for _ in 0..k {
        out.push(x % p);
        x /= p;
    }
    out
}

/// Remainder of `a` modulo monic `b` over `F_p` (coefficients low first).
fn poly_rem(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
    let mut r = a.to_vec();
    let db = b.len() - 1;
    while r.len() > db {
        let c = *r.last().unwrap();
        let shift = r.len() - 1 - db;
        if c != 0 {
            for (i, &bc) in b.iter().enumerate() {
                r[shift + i] = modp::sub(r[shift + i], modp::mul(c, bc, p), p);
            }
        }
        r.pop();
    }
    r
}

/// Irreducibility of a monic polynomial by trial division by every monic
/// polynomial of degree at most half its degree.
pub fn is_irreducible(m: &[u64], p: u64) -> bool {
    let deg = m.len() - 1;
    if deg == 1 {
        return true;
    }
    for d in 1..=deg / 2 {
        for low in 0..p.pow(d as u32) {
            let mut divisor = digits(low, p, d);
            divisor.push(1);
            if poly_rem(m, &divisor, p).iter().all(|&c| c == 0) {
                return false;
            }
        }
    }
    true
}

/// Dense matrix over `F_p` with declared shape.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LinearMap {
    pub p: u64,
    pub rows: usize,
    pub cols: usize,
    pub entries: Matrix,
}

impl LinearMap {
    pub fn new(p: u64, entries: Matrix) -> LinearMap {
        let rows = entries.len();
        let cols = entries.first().map_or(0, Vec::len);
        assert!(entries.iter().all(|r| r.len() == cols));
        let entries = entries.into_iter().map(|r| r.into_iter().map(|x| x % p).collect()).collect();
        LinearMap { p, rows, cols, entries }
    }

    pub fn apply(&self, v: &[u64]) -> Vec<u64> {
        assert_eq!(v.len(), self.cols);
        self.entries
            .iter()
            .map(|row| row.iter().zip(v).fold(0, |acc, (&a, &b)| modp::add(acc, modp::mul(a, b, self.p), self.p)))
            .collect()
    }

    pub fn rank(&self) -> usize {
        modp::rank(&self.entries, self.p)
    }
}

/// An `F_p`-subspace of `F_p^n` held as a reduced row echelon basis.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Subspace {
    pub p: u64,
    pub ambient: usize,
    pub basis: Matrix,
}

impl Subspace {
    pub fn span(p: u64, ambient: usize, vectors: &[Vec<u64>]) -> Subspace {
        let mut m: Matrix = vectors.iter().map(|v| v.iter().map(|x| x % p).collect()).collect();
        modp::rref(&mut m, p);
        Subspace { p, ambient, basis: m }
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn size(&self) -> u64 {
        self.p.pow(self.dim() as u32)
    }

    pub fn contains(&self, v: &[u64]) -> bool {
        let mut m = self.basis.clone();
        m.push(v.to_vec());
        modp::rank(&m, self.p) == self.dim()
    }

    /// Every subspace of `F_p^n` (small `p^n` only).
    pub fn all(p: u64, n: usize) -> Vec<Subspace> {
        let vectors: Vec<Vec<u64>> = (1..p.pow(n as u32)).map(|x| digits(x, p, n)).collect();
        let zero = Subspace::span(p, n, &[]);
        let mut seen: HashSet<Subspace> = HashSet::from([zero.clone()]);
        let mut out = vec![zero];
        let mut i = 0;
        while i < out.len() {
            let cur = out[i].clone();
            for v in &vectors {
                if cur.contains(v) {
                    continue;
                }
                let mut vs = cur.basis.clone();
                vs.push(v.clone());
                let s = Subspace::span(p, n, &vs);
                if seen.insert(s.clone()) {
                    out.push(s);
                }
            }
            i += 1;
        }
        out.sort_by(|a, b| (a.dim(), &a.basis).cmp(&(b.dim(), &b.basis)));
        out
    }
}

/// `W x W^∨` for `W = k^dim_w`, viewed as an `F_p`-space of dimension
/// `2 * dim_w * [k : F_p]`, with the alternating pairing
/// `[(v, f), (w, g)] = f(w) - g(v)`.
#[derive(Debug, Clone)]
pub struct PairingSpace {
    pub field: Field,
    pub dim_w: usize,
}

impl PairingSpace {
    pub fn new(field: Field, dim_w: usize) -> PairingSpace {
        PairingSpace { field, dim_w }
    }

    pub fn fp_dim(&self) -> usize {
        2 * self.dim_w * self.field.degree() as usize
    }

    fn split(&self, x: &[u64]) -> (Vec<FieldElement>, Vec<FieldElement>) {
        let k = self.field.degree() as usize;
        let coords: Vec<FieldElement> = x.chunks(k).map(|c| self.field.from_coeffs(c)).collect();
        let (v, f) = coords.split_at(self.dim_w);
        (v.to_vec(), f.to_vec())
    }

    pub fn pairing(&self, x: &[u64], y: &[u64]) -> FieldElement {
        let (v, f) = self.split(x);
        let (w, g) = self.split(y);
        let fk = &self.field;
        let eval = |phi: &[FieldElement], u: &[FieldElement]| {
            phi.iter().zip(u).fold(fk.zero(), |acc, (&a, &b)| fk.add(acc, fk.mul(a, b)))
        };
        fk.sub(eval(&f, &w), eval(&g, &v))
    }

    /// Every `F_p`-linear surjection `k -> F_p`, as 1 x [k:F_p] maps.
    pub fn surjections(&self) -> Vec<LinearMap> {
        let p = self.field.characteristic();
        let k = self.field.degree() as usize;
        (1..p.pow(k as u32)).map(|x| LinearMap::new(p, vec![digits(x, p, k)])).collect()
    }

    /// Whether `pi o pairing` vanishes on `u x u`.
    pub fn is_isotropic_for(&self, u: &Subspace, pi: &LinearMap) -> bool {
        u.basis.iter().all(|a| {
            u.basis.iter().all(|b| {
                let val = self.field.coeffs(self.pairing(a, b));
                pi.apply(&val)[0] == 0
            })
        })
    }

    /// True iff the pairing composed with each surjection `k -> F_p`
    /// vanishes on `u x u`.
    pub fn isotropic_check(&self, u: &Subspace) -> bool {
        self.surjections().iter().all(|pi| self.is_isotropic_for(u, pi))
    }

    /// `W x 0`.
    pub fn lagrangian_w(&self) -> Subspace {
        let n = self.fp_dim();
        let half = n / 2;
        let vecs: Vec<Vec<u64>> = (0..half)
            .map(|i| {
                let mut v = vec![0; n];
                v[i] = 1;
                v
            })
            .collect();
        Subspace::span(self.field.characteristic(), n, &vecs)
    }
}
