//! Table-driven arithmetic in GF(p^m) for prime powers up to 256.
//!
//! An element is an integer e in 0..q encoding a polynomial over GF(p) in
//! base p: e = a_0 + a_1*p + ... + a_{m-1}*p^{m-1}, where a_i is the
//! coefficient of x^i. The modulus is the lexicographically smallest monic
//! irreducible polynomial of degree m (ordered by that same encoding of its
//! non-leading coefficients), and the stored primitive element is the
//! smallest encoding whose multiplicative order is q - 1. Both choices are
//! deterministic, so every artifact built on top of a field is reproducible
//! bit for bit.

use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};

/// Largest supported field order; keeps the q x q tables tiny.
pub const MAX_ORDER: u64 = 256;

#[derive(Clone)]
pub struct Field {
    p: u16,
    m: u32,
    q: u16,
    /// Monic modulus over GF(p), ascending coefficients, length m + 1.
    modulus: Vec<u8>,
    add_table: Vec<u8>,
    mul_table: Vec<u8>,
    neg_table: Vec<u8>,
    inv_table: Vec<u8>,
    primitive: u8,
}

impl Field {
    /// Builds GF(p^m). Fails with `NonPrimeP` or `FieldTooLarge`.
    pub fn new(p: u16, m: u32) -> Result<Arc<Field>> {
        if !is_prime(p) {
            return Err(Error::NonPrimeP(p));
        }
        assert!(m >= 1, "extension degree must be at least 1");
        let q = (p as u64).pow(m);
        if q > MAX_ORDER {
            return Err(Error::FieldTooLarge(q));
        }
        let field = if m == 1 {
            Field::prime_field(p)
        } else {
            Field::extension_field(p, m, q as u16)
        };
        Ok(Arc::new(field))
    }

    /// Builds the field of a given order, factoring q as p^m first.
    pub fn of_order(q: u16) -> Result<Arc<Field>> {
        if q < 2 {
            return Err(Error::NotPrimePower(q));
        }
        let p = (2..=q).find(|d| q % d == 0).unwrap();
        if !is_prime(p) {
            // unreachable: the smallest divisor of q >= 2 is prime
            return Err(Error::NotPrimePower(q));
        }
        let mut m = 0;
        let mut rest = q;
        while rest % p == 0 {
            rest /= p;
            m += 1;
        }
        if rest != 1 {
            return Err(Error::NotPrimePower(q));
        }
        Field::new(p, m)
    }

    fn prime_field(p: u16) -> Field {
        let q = p as usize;
        let mut add_table = vec![0u8; q * q];
        let mut mul_table = vec![0u8; q * q];
        for a in 0..q {
            for b in 0..q {
                add_table[a * q + b] = ((a + b) % q) as u8;
                mul_table[a * q + b] = ((a * b) % q) as u8;
            }
        }
        let mut field = Field {
            p,
            m: 1,
            q: p,
            modulus: vec![0, 1],
            add_table,
            mul_table,
            neg_table: Vec::new(),
            inv_table: Vec::new(),
            primitive: 0,
        };
        field.finish_tables();
        field
    }

    fn extension_field(p: u16, m: u32, q: u16) -> Field {
        let base = Field::prime_field(p);
        let modulus = smallest_irreducible(&base, m as usize);
        let qq = q as usize;
        let mut add_table = vec![0u8; qq * qq];
        let mut mul_table = vec![0u8; qq * qq];
        for a in 0..qq {
            let da = to_digits(a as u16, p, m as usize);
            for b in 0..qq {
                let db = to_digits(b as u16, p, m as usize);
                let sum: Vec<u8> = da.iter().zip(&db).map(|(&x, &y)| base.add(x, y)).collect();
                add_table[a * qq + b] = from_digits(&sum, p) as u8;
                let prod = poly_rem(&base, &poly_mul(&base, &da, &db), &modulus);
                let mut padded = prod;
                padded.resize(m as usize, 0);
                mul_table[a * qq + b] = from_digits(&padded, p) as u8;
            }
        }
        let mut field = Field {
            p,
            m,
            q,
            modulus,
            add_table,
            mul_table,
            neg_table: Vec::new(),
            inv_table: Vec::new(),
            primitive: 0,
        };
        field.finish_tables();
        field
    }

    /// Derives negation, inversion and the primitive element from the
    /// add/mul tables.
    fn finish_tables(&mut self) {
        let q = self.q as usize;
        let mut neg = vec![0u8; q];
        let mut inv = vec![0u8; q];
        for a in 0..q {
            neg[a] = (0..q).find(|&b| self.add(a as u8, b as u8) == 0).unwrap() as u8;
            if a != 0 {
                inv[a] = (1..q).find(|&b| self.mul(a as u8, b as u8) == 1).unwrap() as u8;
            }
        }
        self.neg_table = neg;
        self.inv_table = inv;
        self.primitive = (1..q as u16)
            .find(|&e| self.order(e as u8) == q - 1)
            .expect("every finite field has a primitive element") as u8;
    }

    fn order(&self, e: u8) -> usize {
        debug_assert!(e != 0);
        let mut acc = e;
        let mut ord = 1;
        while acc != 1 {
            acc = self.mul(acc, e);
            ord += 1;
        }
        ord
    }

    pub fn p(&self) -> u16 {
        self.p
    }

    pub fn m(&self) -> u32 {
        self.m
    }

    pub fn q(&self) -> u16 {
        self.q
    }

    /// Ascending coefficients of the monic modulus, length m + 1.
    pub fn modulus(&self) -> &[u8] {
        &self.modulus
    }

    /// Smallest element (by encoding) generating the multiplicative group.
    pub fn primitive(&self) -> u8 {
        self.primitive
    }

    #[inline]
    pub fn add(&self, a: u8, b: u8) -> u8 {
        self.add_table[a as usize * self.q as usize + b as usize]
    }

    #[inline]
    pub fn mul(&self, a: u8, b: u8) -> u8 {
        self.mul_table[a as usize * self.q as usize + b as usize]
    }

    #[inline]
    pub fn neg(&self, a: u8) -> u8 {
        self.neg_table[a as usize]
    }

    #[inline]
    pub fn sub(&self, a: u8, b: u8) -> u8 {
        self.add(a, self.neg(b))
    }

    pub fn inv(&self, a: u8) -> Result<u8> {
        if a == 0 {
            return Err(Error::InvOfZero);
        }
        Ok(self.inv_table[a as usize])
    }

    pub fn pow(&self, a: u8, e: usize) -> u8 {
        let mut acc = 1u8;
        for _ in 0..e {
            acc = self.mul(acc, a);
        }
        acc
    }

    /// All elements, zero first.
    pub fn elements(&self) -> impl Iterator<Item = u8> {
        0..self.q as u8
    }

    pub fn nonzero(&self) -> impl Iterator<Item = u8> {
        1..self.q as u8
    }
}

/// Fields are equal when they have the same characteristic and degree;
/// the deterministic construction makes the tables identical then.
impl PartialEq for Field {
    fn eq(&self, other: &Self) -> bool {
        self.p == other.p && self.m == other.m
    }
}

impl Eq for Field {}

impl fmt::Debug for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "GF({})", self.q)?;
        if self.m > 1 {
            write!(f, " = GF({}^{})", self.p, self.m)?;
        }
        Ok(())
    }
}

fn is_prime(n: u16) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2u32;
    while d * d <= n as u32 {
        if n as u32 % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

/// Digits of e in base p, least significant first, padded to `len`.
pub(crate) fn to_digits(e: u16, p: u16, len: usize) -> Vec<u8> {
    let mut out = Vec::with_capacity(len);
    let mut rest = e;
    for _ in 0..len {
        out.push((rest % p) as u8);
        rest /= p;
    }
    debug_assert_eq!(rest, 0);
    out
}

pub(crate) fn from_digits(digits: &[u8], p: u16) -> u16 {
    digits
        .iter()
        .rev()
        .fold(0u16, |acc, &d| acc * p + d as u16)
}

// ---------------------------------------------------------------------------
// Polynomials with coefficients in a Field, ascending order, no trailing
// zeros (the zero polynomial is the empty slice). Used to bootstrap
// extension fields and to build parity check columns of cyclic codes.

pub(crate) fn poly_trim(v: &mut Vec<u8>) {
    while v.last() == Some(&0) {
        v.pop();
    }
}

pub(crate) fn poly_mul(f: &Field, a: &[u8], b: &[u8]) -> Vec<u8> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![0u8; a.len() + b.len() - 1];
    for (i, &x) in a.iter().enumerate() {
        if x == 0 {
            continue;
        }
        for (j, &y) in b.iter().enumerate() {
            out[i + j] = f.add(out[i + j], f.mul(x, y));
        }
    }
    poly_trim(&mut out);
    out
}

/// Remainder of a modulo the monic polynomial b.
pub(crate) fn poly_rem(f: &Field, a: &[u8], b: &[u8]) -> Vec<u8> {
    let mut r = a.to_vec();
    poly_trim(&mut r);
    let db = b.len() - 1;
    debug_assert_eq!(b[db], 1, "divisor must be monic");
    while r.len() > db {
        let lead = *r.last().unwrap();
        let shift = r.len() - 1 - db;
        if lead != 0 {
            for (i, &bc) in b.iter().enumerate() {
                let t = f.mul(lead, bc);
                r[shift + i] = f.sub(r[shift + i], t);
            }
        }
        r.pop();
        poly_trim(&mut r);
    }
    r
}

/// Trial division test for a monic polynomial over `f`.
pub(crate) fn poly_is_irreducible(f: &Field, poly: &[u8]) -> bool {
    let deg = poly.len() - 1;
    debug_assert!(deg >= 1 && poly[deg] == 1);
    let q = f.q() as u64;
    for d in 1..=deg / 2 {
        // all monic divisor candidates of degree d
        for enc in 0..q.pow(d as u32) {
            let mut g = wide_digits(enc, q, d);
            g.push(1);
            if poly_rem(f, poly, &g).is_empty() {
                return false;
            }
        }
    }
    true
}

fn wide_digits(mut e: u64, q: u64, len: usize) -> Vec<u8> {
    let mut out = Vec::with_capacity(len);
    for _ in 0..len {
        out.push((e % q) as u8);
        e /= q;
    }
    out
}

/// Lexicographically smallest monic irreducible polynomial of degree m over
/// `base`, ordered by the base-q encoding of its non-leading coefficients.
fn smallest_irreducible(base: &Field, m: usize) -> Vec<u8> {
    let q = base.q() as u64;
    for enc in 0..q.pow(m as u32) {
        let mut cand = wide_digits(enc, q, m);
        cand.push(1);
        if poly_is_irreducible(base, &cand) {
            return cand;
        }
    }
    unreachable!("irreducible polynomials exist in every degree")
}

/// Multiplicative order of x in Field[x]/(modulus); modulus monic, degree k.
/// Coefficient vectors are kept at fixed width k.
pub(crate) fn order_of_x(f: &Field, modulus: &[u8]) -> usize {
    let k = modulus.len() - 1;
    let mut v = vec![0u8; k];
    v[0] = 1;
    let one = v.clone();
    let cap = (f.q() as u64).pow(k as u32) as usize;
    for t in 1..cap {
        mul_by_x_mod(f, &mut v, modulus);
        if v == one {
            return t;
        }
    }
    cap
}

/// v <- x * v mod modulus, with v a fixed-width coefficient vector.
pub(crate) fn mul_by_x_mod(f: &Field, v: &mut [u8], modulus: &[u8]) {
    let k = v.len();
    debug_assert_eq!(modulus.len(), k + 1);
    let carry = v[k - 1];
    for i in (1..k).rev() {
        v[i] = v[i - 1];
    }
    v[0] = 0;
    if carry != 0 {
        for i in 0..k {
            v[i] = f.sub(v[i], f.mul(carry, modulus[i]));
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn gf2_basics() {
        let f = Field::new(2, 1).unwrap();
        assert_eq!(f.q(), 2);
        assert_eq!(f.primitive(), 1);
        assert_eq!(f.add(1, 1), 0);
        assert_eq!(f.mul(1, 1), 1);
    }

    #[test]
    fn gf3_basics() {
        let f = Field::new(3, 1).unwrap();
        assert_eq!(f.primitive(), 2);
        assert_eq!(f.mul(2, 2), 1);
        assert_eq!(f.neg(1), 2);
        assert_eq!(f.inv(2).unwrap(), 2);
    }

    /// GF(4) is pinned completely: x^2 + x + 1 is the only monic irreducible
    /// quadratic over GF(2), so 2 encodes x, 3 encodes x + 1, and
    /// 2 * 2 = x^2 = x + 1 = 3.
    #[test]
    fn gf4_is_pinned() {
        let f = Field::new(2, 2).unwrap();
        assert_eq!(f.modulus(), &[1, 1, 1]);
        assert_eq!(f.primitive(), 2);
        assert_eq!(f.mul(2, 2), 3);
        assert_eq!(f.mul(2, 3), 1);
        assert_eq!(f.add(2, 3), 1);
    }

    /// Independent check that x^2 + x + 1 really is the unique monic
    /// irreducible quadratic over GF(2): a quadratic is reducible iff it has
    /// a root.
    #[test]
    fn gf4_modulus_oracle() {
        let mut irreducible = Vec::new();
        for c0 in 0..2u8 {
            for c1 in 0..2u8 {
                let eval = |x: u8| (x * x + c1 * x + c0) % 2;
                if eval(0) != 0 && eval(1) != 0 {
                    irreducible.push(vec![c0, c1, 1]);
                }
            }
        }
        assert_eq!(irreducible, vec![vec![1, 1, 1]]);
    }

    #[test]
    fn gf8_modulus_is_x3_x_1() {
        let f = Field::new(2, 3).unwrap();
        assert_eq!(f.modulus(), &[1, 1, 0, 1]);
    }

    #[test]
    fn rejects_bad_parameters() {
        assert_eq!(Field::new(4, 1).unwrap_err(), Error::NonPrimeP(4));
        assert_eq!(Field::new(1, 1).unwrap_err(), Error::NonPrimeP(1));
        assert_eq!(Field::new(2, 9).unwrap_err(), Error::FieldTooLarge(512));
        assert_eq!(Field::of_order(12).unwrap_err(), Error::NotPrimePower(12));
        assert_eq!(Field::of_order(0).unwrap_err(), Error::NotPrimePower(0));
    }

    #[test]
    fn of_order_factors_prime_powers() {
        let f = Field::of_order(9).unwrap();
        assert_eq!((f.p(), f.m()), (3, 2));
        let f = Field::of_order(16).unwrap();
        assert_eq!((f.p(), f.m()), (2, 4));
    }

    #[test]
    fn inv_of_zero_fails() {
        let f = Field::new(5, 1).unwrap();
        assert_eq!(f.inv(0).unwrap_err(), Error::InvOfZero);
    }

    /// Exhaustive field axioms for every order used by the constructions.
    #[test]
    fn field_axioms_exhaustive() {
        for q in [2u16, 3, 4, 5, 7, 8, 9, 11, 13, 16] {
            let f = Field::of_order(q).unwrap();
            for a in f.elements() {
                assert_eq!(f.add(a, f.neg(a)), 0);
                if a != 0 {
                    assert_eq!(f.mul(a, f.inv(a).unwrap()), 1);
                }
                for b in f.elements() {
                    assert_eq!(f.add(a, b), f.add(b, a));
                    assert_eq!(f.mul(a, b), f.mul(b, a));
                    for c in f.elements() {
                        assert_eq!(f.add(f.add(a, b), c), f.add(a, f.add(b, c)));
                        assert_eq!(f.mul(f.mul(a, b), c), f.mul(a, f.mul(b, c)));
                        assert_eq!(
                            f.mul(a, f.add(b, c)),
                            f.add(f.mul(a, b), f.mul(a, c)),
                            "distributivity failed in GF({q}) at ({a},{b},{c})"
                        );
                    }
                }
            }
        }
    }

    #[test]
    fn primitive_generates_all_nonzero() {
        for q in [2u16, 3, 4, 5, 8, 9, 16] {
            let f = Field::of_order(q).unwrap();
            let mut seen = vec![false; q as usize];
            let mut acc = 1u8;
            for _ in 0..q - 1 {
                assert!(!seen[acc as usize], "GF({q}) primitive repeats early");
                seen[acc as usize] = true;
                acc = f.mul(acc, f.primitive());
            }
            assert!(seen[1..].iter().all(|&s| s));
        }
    }

    #[test]
    fn poly_helpers_agree_with_hand_computation() {
        let f = Field::new(2, 1).unwrap();
        // (x + 1)(x^2 + x + 1) = x^3 + 1 over GF(2)
        assert_eq!(poly_mul(&f, &[1, 1], &[1, 1, 1]), vec![1, 0, 0, 1]);
        // x^4 mod x^3 + x + 1 = x^2 + x
        assert_eq!(
            poly_rem(&f, &[0, 0, 0, 0, 1], &[1, 1, 0, 1]),
            vec![0, 1, 1]
        );
        assert!(poly_is_irreducible(&f, &[1, 1, 0, 1]));
        assert!(!poly_is_irreducible(&f, &[1, 0, 0, 1])); // (x+1)(x^2+x+1)
    }

    #[test]
    fn order_of_x_matches_gf8() {
        let f = Field::new(2, 1).unwrap();
        assert_eq!(order_of_x(&f, &[1, 1, 0, 1]), 7);
        // x^2 + 1 = (x + 1)^2, and x * x = 1 in the quotient ring
        assert_eq!(order_of_x(&f, &[1, 0, 1]), 2);
    }
}
