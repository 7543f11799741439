//! Arithmetic in `F_q`, `q = pⁿ ≤ 2¹⁶`.
//!
//! Elements are encoded as integers in `0..q`: the base-p digits of the
//! encoding are the polynomial coefficients, constant term least
//! significant. The modulus is the lexicographically least monic
//! irreducible of degree n under that same encoding, so field construction
//! is deterministic. (Compatibility with Conway-polynomial tables is a
//! documented non-feature.)

use crate::error::Error;
use crate::Result;

/// A finite field `F_(pⁿ)` with its defining modulus.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FieldSpec {
    pub p: u64,
    pub n: usize,
    /// Monic modulus, coefficients ascending; length `n + 1`.
    pub modulus: Vec<u64>,
    pub q: usize,
}

impl FieldSpec {
    /// Builds `F_(pⁿ)` with the lex-least monic irreducible modulus.
    pub fn new(p: u64, n: usize) -> Result<FieldSpec> {
        if !is_prime(p) {
            return Err(Error::Input(format!("{p} is not prime")));
        }
        if n == 0 {
            return Err(Error::Input("extension degree must be ≥ 1".into()));
        }
        let q = (p as u128).checked_pow(n as u32).filter(|&q| q <= 1 << 16);
        let q = match q {
            Some(q) => q as usize,
            None => return Err(Error::Input(format!("{p}^{n} exceeds 2^16"))),
        };
        if n == 1 {
            // degree-1 passthrough: modulus x
            return Ok(FieldSpec {
                p,
                n,
                modulus: vec![0, 1],
                q,
            });
        }
        // lex scan over constant-first encodings of the lower coefficients
        for code in 0..q as u64 {
            let mut modulus = decode_digits(code, p, n);
            modulus.push(1);
            if poly_is_irreducible(&modulus, p) {
                return Ok(FieldSpec { p, n, modulus, q });
            }
        }
        unreachable!("an irreducible polynomial of every degree exists")
    }

    pub fn zero(&self) -> usize {
        0
    }

    pub fn one(&self) -> usize {
        1
    }

    fn digits(&self, a: usize) -> Vec<u64> {
        decode_digits(a as u64, self.p, self.n)
    }

    fn encode(&self, digits: &[u64]) -> usize {
        let mut value: u64 = 0;
        for &d in digits.iter().rev() {
            value = value * self.p + d;
        }
        value as usize
    }

    pub fn add(&self, a: usize, b: usize) -> usize {
        let da = self.digits(a);
        let db = self.digits(b);
        let sum: Vec<u64> = da.iter().zip(&db).map(|(x, y)| (x + y) % self.p).collect();
        self.encode(&sum)
    }

    pub fn neg(&self, a: usize) -> usize {
        let da = self.digits(a);
        let neg: Vec<u64> = da.iter().map(|&x| (self.p - x) % self.p).collect();
        self.encode(&neg)
    }

    pub fn sub(&self, a: usize, b: usize) -> usize {
        self.add(a, self.neg(b))
    }

    pub fn mul(&self, a: usize, b: usize) -> usize {
        let da = self.digits(a);
        let db = self.digits(b);
        let prod = poly_mul_mod(&da, &db, &self.modulus, self.p);
        self.encode(&prod)
    }

    pub fn pow(&self, a: usize, mut k: u64) -> usize {
        let mut result = 1;
        let mut base = a;
        while k > 0 {
            if k & 1 == 1 {
                result = self.mul(result, base);
            }
            base = self.mul(base, base);
            k >>= 1;
        }
        result
    }

    /// Multiplicative inverse of a nonzero element.
    pub fn inv(&self, a: usize) -> usize {
        assert!(a != 0, "division by zero");
        self.pow(a, self.q as u64 - 2)
    }

    /// A fixed multiplicative generator: the least element of full order.
    pub fn primitive_element(&self) -> usize {
        let order = self.q as u64 - 1;
        let prime_factors = factor(order);
        'candidates: for a in 2..self.q {
            for &ell in &prime_factors {
                if self.pow(a, order / ell) == 1 {
                    continue 'candidates;
                }
            }
            return a;
        }
        // q = 2: the only nonzero element
        1
    }

    /// All elements, `0..q`.
    pub fn elements(&self) -> std::ops::Range<usize> {
        0..self.q
    }
}

fn decode_digits(mut code: u64, p: u64, n: usize) -> Vec<u64> {
    let mut digits = vec![0u64; n];
    for d in digits.iter_mut() {
        *d = code % p;
        code /= p;
    }
    digits
}

fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= p {
        if p % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

fn factor(mut n: u64) -> Vec<u64> {
    let mut primes = Vec::new();
    let mut d = 2;
    while d * d <= n {
        if n % d == 0 {
            primes.push(d);
            while n % d == 0 {
                n /= d;
            }
        }
        d += 1;
    }
    if n > 1 {
        primes.push(n);
    }
    primes
}

// --- dense polynomial arithmetic over F_p (coefficients ascending) ---

fn poly_trim(a: &mut Vec<u64>) {
    while a.last() == Some(&0) {
        a.pop();
    }
}

fn poly_mul(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![0u64; a.len() + b.len() - 1];
    for (i, &x) in a.iter().enumerate() {
        if x == 0 {
            continue;
        }
        for (j, &y) in b.iter().enumerate() {
            out[i + j] = (out[i + j] + x * y) % p;
        }
    }
    poly_trim(&mut out);
    out
}

/// Remainder of `a` modulo the monic polynomial `m`.
fn poly_rem(a: &[u64], m: &[u64], p: u64) -> Vec<u64> {
    let mut r = a.to_vec();
    poly_trim(&mut r);
    let deg_m = m.len() - 1;
    while r.len() > deg_m {
        let lead = r[r.len() - 1];
        let shift = r.len() - 1 - deg_m;
        for (k, &c) in m.iter().enumerate() {
            let idx = shift + k;
            let sub = (lead * c) % p;
            r[idx] = (r[idx] + p - sub) % p;
        }
        poly_trim(&mut r);
        if r.is_empty() {
            break;
        }
    }
    r
}

fn poly_mul_mod(a: &[u64], b: &[u64], m: &[u64], p: u64) -> Vec<u64> {
    let mut r = poly_rem(&poly_mul(a, b, p), m, p);
    r.resize(m.len() - 1, 0);
    r
}

fn poly_gcd(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
    let mut a = a.to_vec();
    let mut b = b.to_vec();
    poly_trim(&mut a);
    poly_trim(&mut b);
    while !b.is_empty() {
        // make b monic for poly_rem
        let lead = b[b.len() - 1];
        let inv = mod_inv(lead, p);
        let monic: Vec<u64> = b.iter().map(|&c| (c * inv) % p).collect();
        let r = poly_rem(&a, &monic, p);
        a = b;
        b = r;
    }
    a
}

fn mod_inv(a: u64, p: u64) -> u64 {
    // p is prime, a ≠ 0 mod p
    mod_pow(a % p, p - 2, p)
}

fn mod_pow(mut base: u64, mut exp: u64, m: u64) -> u64 {
    let mut result = 1u64;
    base %= m;
    while exp > 0 {
        if exp & 1 == 1 {
            result = result * base % m;
        }
        base = base * base % m;
        exp >>= 1;
    }
    result
}

/// `x^(p^k) mod f` by repeated p-th powering.
fn frobenius_power(f: &[u64], p: u64, k: usize) -> Vec<u64> {
    let mut x = vec![0, 1]; // x
    for _ in 0..k {
        x = poly_pow_mod(&x, p, f, p);
    }
    x
}

fn poly_pow_mod(a: &[u64], mut e: u64, m: &[u64], p: u64) -> Vec<u64> {
    let mut result = vec![1u64];
    let mut base = a.to_vec();
    while e > 0 {
        if e & 1 == 1 {
            result = poly_mul_mod_raw(&result, &base, m, p);
        }
        base = poly_mul_mod_raw(&base, &base, m, p);
        e >>= 1;
    }
    result
}

fn poly_mul_mod_raw(a: &[u64], b: &[u64], m: &[u64], p: u64) -> Vec<u64> {
    poly_rem(&poly_mul(a, b, p), m, p)
}

/// Rabin irreducibility test for a monic polynomial over F_p.
fn poly_is_irreducible(f: &[u64], p: u64) -> bool {
    let n = f.len() - 1;
    if n == 0 {
        return false;
    }
    if n == 1 {
        return true;
    }
    // x^(p^n) ≡ x (mod f)
    let xpn = frobenius_power(f, p, n);
    let mut x_poly = vec![0, 1];
    x_poly = poly_rem(&x_poly, f, p);
    let mut diff: Vec<u64> = Vec::new();
    for i in 0..xpn.len().max(x_poly.len()) {
        let a = xpn.get(i).copied().unwrap_or(0);
        let b = x_poly.get(i).copied().unwrap_or(0);
        diff.push((a + p - b) % p);
    }
    poly_trim(&mut diff);
    if !diff.is_empty() {
        return false;
    }
    // gcd(x^(p^(n/t)) − x, f) = 1 for every prime t | n
    for t in factor(n as u64) {
        let k = n / t as usize;
        let xpk = frobenius_power(f, p, k);
        let mut diff: Vec<u64> = Vec::new();
        for i in 0..xpk.len().max(2) {
            let a = xpk.get(i).copied().unwrap_or(0);
            let b = if i == 1 { 1 } else { 0 };
            diff.push((a + p - b) % p);
        }
        poly_trim(&mut diff);
        let g = poly_gcd(&f.to_vec(), &diff, p);
        if g.len() > 1 {
            return false;
        }
    }
    true
}
