//! Finite fields `F_{q^m}` with exact scalar arithmetic.
//!
//! A field is either a prime field `F_q` or an extension
//! `F_q[t]/(f)` for a monic irreducible `f` of degree `m <= 4`. Scalars are
//! coefficient vectors `(c_0, ..., c_{m-1})` representing
//! `c_0 + c_1 t + ... + c_{m-1} t^{m-1}` with `0 <= c_i < q`. All operations
//! are pure and exact; there is no hidden global state.
//!
//! The canonical order on scalars is lexicographic on coefficient vectors
//! (`c_0` most significant). "Smallest root", "first eigenvector" and every
//! other deterministic tie-break in the crate refers to this order.

use crate::{Error, Result};
use std::fmt;

/// Hard limit on extension degree. Trial-division irreducibility testing is
/// complete for degree <= 4 (a reducible quartic has a factor of degree <= 2).
pub const MAX_DEGREE: usize = 4;

/// One element of a finite field: the coefficient vector of a residue-class
/// polynomial, low degree first. Unused limbs are kept at zero so derived
/// equality, hashing and ordering are valid.
///
/// Scalars do not know their field; arithmetic goes through [`FieldSpec`],
/// which validates lengths on the checked entry points.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct Scalar {
    len: u8,
    limbs: [u64; MAX_DEGREE],
}

impl Scalar {
    /// Coefficients `c_0, ..., c_{m-1}`, low degree first.
    #[inline]
    pub fn coeffs(&self) -> &[u64] {
        &self.limbs[..self.len as usize]
    }

    #[inline]
    pub fn is_zero(&self) -> bool {
        self.limbs == [0; MAX_DEGREE]
    }
}

/// Binary operations accepted by [`FieldSpec::arith`].
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum FieldOp {
    Add,
    Sub,
    Mul,
    Div,
}

/// A concrete finite field `F_{q^m}`.
///
/// Construction validates primality of `q` and irreducibility of the modulus,
/// so holding a `FieldSpec` is proof the field exists. Prime fields with
/// `q <= 64` carry small multiplication/inverse lookup tables; the tables are
/// a pure function of `(q, m, modulus)` and are ignored by equality.
#[derive(Clone)]
pub struct FieldSpec {
    ch: u64,
    degree: usize,
    /// Monic modulus, length `degree + 1`. For degree 1 this is `t` itself
    /// and never participates in arithmetic.
    modulus: Vec<u64>,
    mul_table: Vec<u64>,
    inv_table: Vec<u64>,
}

impl PartialEq for FieldSpec {
    fn eq(&self, other: &Self) -> bool {
        self.ch == other.ch && self.degree == other.degree && self.modulus == other.modulus
    }
}

impl Eq for FieldSpec {}

impl fmt::Debug for FieldSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for FieldSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.degree == 1 {
            write!(f, "F_{}", self.ch)
        } else {
            write!(
                f,
                "F_{}[t]/({})",
                self.ch,
                poly_string(&self.modulus)
            )
        }
    }
}

fn poly_string(coeffs: &[u64]) -> String {
    let mut parts = Vec::new();
    for (i, &c) in coeffs.iter().enumerate() {
        if c == 0 {
            continue;
        }
        let term = match (i, c) {
            (0, _) => format!("{c}"),
            (1, 1) => "t".to_string(),
            (1, _) => format!("{c}*t"),
            (_, 1) => format!("t^{i}"),
            (_, _) => format!("{c}*t^{i}"),
        };
        parts.push(term);
    }
    if parts.is_empty() {
        "0".to_string()
    } else {
        parts.join(" + ")
    }
}

pub(crate) fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n % 2 == 0 {
        return n == 2;
    }
    let mut d = 3;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 2;
    }
    true
}

impl FieldSpec {
    /// The prime field `F_q`.
    pub fn prime(q: u64) -> Result<Self> {
        if !is_prime(q) {
            return Err(Error::NotPrime(q));
        }
        if q >= 1 << 31 {
            return Err(Error::CharacteristicTooLarge(q));
        }
        let mut spec = FieldSpec {
            ch: q,
            degree: 1,
            modulus: vec![0, 1],
            mul_table: Vec::new(),
            inv_table: Vec::new(),
        };
        spec.build_tables();
        Ok(spec)
    }

    /// The extension field `F_q[t]/(modulus)`. The modulus is given low
    /// degree first, must be monic of degree 2..=4, and must be irreducible
    /// over `F_q` (checked by trial division).
    pub fn extension(q: u64, modulus: &[u64]) -> Result<Self> {
        if !is_prime(q) {
            return Err(Error::NotPrime(q));
        }
        let degree = modulus.len().saturating_sub(1);
        if modulus.len() < 2 {
            return Err(Error::InvalidModulus(
                "modulus needs at least two coefficients".into(),
            ));
        }
        if degree == 1 {
            // A linear modulus just names F_q again; accept it as the prime field.
            return Self::prime(q);
        }
        if degree > MAX_DEGREE {
            return Err(Error::InvalidModulus(format!(
                "degree {degree} exceeds the supported maximum {MAX_DEGREE}"
            )));
        }
        if q >= 1 << 16 {
            return Err(Error::CharacteristicTooLarge(q));
        }
        let reduced: Vec<u64> = modulus.iter().map(|&c| c % q).collect();
        if reduced[degree] != 1 {
            return Err(Error::InvalidModulus(format!(
                "modulus must be monic, leading coefficient is {} mod {}",
                modulus[degree], q
            )));
        }
        if !poly_is_irreducible(&reduced, q) {
            return Err(Error::InvalidModulus(format!(
                "{} is reducible over F_{}",
                poly_string(&reduced),
                q
            )));
        }
        let mut spec = FieldSpec {
            ch: q,
            degree,
            modulus: reduced,
            mul_table: Vec::new(),
            inv_table: Vec::new(),
        };
        spec.build_tables();
        Ok(spec)
    }

    fn build_tables(&mut self) {
        if self.degree != 1 || self.ch > 64 {
            return;
        }
        let q = self.ch;
        let mut mul = vec![0u64; (q * q) as usize];
        for a in 0..q {
            for b in 0..q {
                mul[(a * q + b) as usize] = a * b % q;
            }
        }
        let mut inv = vec![0u64; q as usize];
        for a in 1..q {
            inv[a as usize] = pow_mod(a, q - 2, q);
        }
        self.mul_table = mul;
        self.inv_table = inv;
    }

    #[inline]
    pub fn characteristic(&self) -> u64 {
        self.ch
    }

    #[inline]
    pub fn degree(&self) -> usize {
        self.degree
    }

    /// Monic modulus, low degree first; `t` itself for prime fields.
    pub fn modulus(&self) -> &[u64] {
        &self.modulus
    }

    /// Number of elements `q^m`.
    pub fn order(&self) -> u64 {
        self.ch.pow(self.degree as u32)
    }

    #[inline]
    pub fn zero(&self) -> Scalar {
        Scalar {
            len: self.degree as u8,
            limbs: [0; MAX_DEGREE],
        }
    }

    #[inline]
    pub fn one(&self) -> Scalar {
        self.from_int(1)
    }

    /// Embed an integer into the prime subfield.
    pub fn from_int(&self, n: u64) -> Scalar {
        let mut s = self.zero();
        s.limbs[0] = n % self.ch;
        s
    }

    /// Embed a signed integer into the prime subfield.
    pub fn from_signed(&self, n: i64) -> Scalar {
        let q = self.ch as i64;
        self.from_int(n.rem_euclid(q) as u64)
    }

    /// Build a scalar from signed coefficients, reducing each mod `q`.
    /// Length must match the field degree, except that a single coefficient
    /// is accepted for any degree and embeds into the prime subfield.
    pub fn scalar(&self, coeffs: &[i64]) -> Result<Scalar> {
        if coeffs.len() == 1 {
            return Ok(self.from_signed(coeffs[0]));
        }
        if coeffs.len() != self.degree {
            return Err(Error::ScalarLength {
                expected: self.degree,
                got: coeffs.len(),
            });
        }
        let mut s = self.zero();
        for (i, &c) in coeffs.iter().enumerate() {
            s.limbs[i] = c.rem_euclid(self.ch as i64) as u64;
        }
        Ok(s)
    }

    /// Validate that a scalar is a reduced member of this field.
    pub fn check(&self, s: &Scalar) -> Result<()> {
        if s.len as usize != self.degree {
            return Err(Error::ScalarLength {
                expected: self.degree,
                got: s.len as usize,
            });
        }
        if s.coeffs().iter().any(|&c| c >= self.ch) {
            return Err(Error::FieldMismatch(
                format!("{self}"),
                format!("scalar with coefficients {:?}", s.coeffs()),
            ));
        }
        Ok(())
    }

    #[inline]
    fn assert_member(&self, s: &Scalar) {
        debug_assert_eq!(s.len as usize, self.degree, "scalar from another field");
    }

    #[inline]
    pub(crate) fn base_add(&self, a: u64, b: u64) -> u64 {
        let s = a + b;
        if s >= self.ch {
            s - self.ch
        } else {
            s
        }
    }

    #[inline]
    pub(crate) fn base_sub(&self, a: u64, b: u64) -> u64 {
        if a >= b {
            a - b
        } else {
            a + self.ch - b
        }
    }

    #[inline]
    pub(crate) fn base_mul(&self, a: u64, b: u64) -> u64 {
        if !self.mul_table.is_empty() {
            self.mul_table[(a * self.ch + b) as usize]
        } else {
            a * b % self.ch
        }
    }

    pub fn add(&self, a: &Scalar, b: &Scalar) -> Scalar {
        self.assert_member(a);
        self.assert_member(b);
        let mut out = *a;
        for i in 0..self.degree {
            out.limbs[i] = self.base_add(a.limbs[i], b.limbs[i]);
        }
        out
    }

    pub fn sub(&self, a: &Scalar, b: &Scalar) -> Scalar {
        self.assert_member(a);
        self.assert_member(b);
        let mut out = *a;
        for i in 0..self.degree {
            out.limbs[i] = self.base_sub(a.limbs[i], b.limbs[i]);
        }
        out
    }

    pub fn neg(&self, a: &Scalar) -> Scalar {
        self.sub(&self.zero(), a)
    }

    pub fn mul(&self, a: &Scalar, b: &Scalar) -> Scalar {
        self.assert_member(a);
        self.assert_member(b);
        let m = self.degree;
        if m == 1 {
            let mut out = *a;
            out.limbs[0] = self.base_mul(a.limbs[0], b.limbs[0]);
            return out;
        }
        // Schoolbook product then reduction by the monic modulus.
        let q = self.ch;
        let mut buf = [0u64; 2 * MAX_DEGREE - 1];
        for i in 0..m {
            if a.limbs[i] == 0 {
                continue;
            }
            for j in 0..m {
                buf[i + j] = (buf[i + j] + a.limbs[i] * b.limbs[j]) % q;
            }
        }
        for i in (m..=2 * m - 2).rev() {
            let c = buf[i];
            if c == 0 {
                continue;
            }
            buf[i] = 0;
            for j in 0..m {
                if self.modulus[j] != 0 {
                    buf[i - m + j] = (buf[i - m + j] + (q - self.modulus[j]) * c) % q;
                }
            }
        }
        let mut out = self.zero();
        out.limbs[..m].copy_from_slice(&buf[..m]);
        out
    }

    pub fn pow(&self, a: &Scalar, mut e: u64) -> Scalar {
        let mut base = *a;
        let mut acc = self.one();
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(&acc, &base);
            }
            base = self.mul(&base, &base);
            e >>= 1;
        }
        acc
    }

    /// Multiplicative inverse, by Fermat: `a^(q^m - 2)`.
    pub fn inv(&self, a: &Scalar) -> Result<Scalar> {
        if a.is_zero() {
            return Err(Error::DivisionByZero);
        }
        if self.degree == 1 && !self.inv_table.is_empty() {
            let mut out = *a;
            out.limbs[0] = self.inv_table[a.limbs[0] as usize];
            return Ok(out);
        }
        Ok(self.pow(a, self.order() - 2))
    }

    pub fn div(&self, a: &Scalar, b: &Scalar) -> Result<Scalar> {
        Ok(self.mul(a, &self.inv(b)?))
    }

    /// Checked dispatch over the four binary operations. Unlike the raw
    /// methods this validates that both operands actually belong to the
    /// field, so it is the entry point for externally supplied data.
    pub fn arith(&self, a: &Scalar, b: &Scalar, op: FieldOp) -> Result<Scalar> {
        self.check(a)?;
        self.check(b)?;
        match op {
            FieldOp::Add => Ok(self.add(a, b)),
            FieldOp::Sub => Ok(self.sub(a, b)),
            FieldOp::Mul => Ok(self.mul(a, b)),
            FieldOp::Div => self.div(a, b),
        }
    }

    /// Position of `s` in the canonical (lexicographic) enumeration.
    pub fn rank_of(&self, s: &Scalar) -> u64 {
        let mut r = 0;
        for i in 0..self.degree {
            r = r * self.ch + s.limbs[i];
        }
        r
    }

    /// Inverse of [`rank_of`]: the `r`-th scalar in canonical order.
    pub fn scalar_from_rank(&self, mut r: u64) -> Scalar {
        let mut s = self.zero();
        for i in (0..self.degree).rev() {
            s.limbs[i] = r % self.ch;
            r /= self.ch;
        }
        s
    }

    /// All field elements in canonical order. Fields in scope are tiny.
    pub fn enumerate(&self) -> impl Iterator<Item = Scalar> + '_ {
        (0..self.order()).map(move |r| self.scalar_from_rank(r))
    }

    /// Multiplicative order of a nonzero scalar.
    pub fn multiplicative_order(&self, a: &Scalar) -> Result<u64> {
        if a.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let mut acc = *a;
        let mut k = 1;
        let one = self.one();
        while acc != one {
            acc = self.mul(&acc, a);
            k += 1;
        }
        Ok(k)
    }

    /// The smallest (canonical order) scalar of multiplicative order exactly
    /// `p`, for prime `p`. Exists iff `p` divides `q^m - 1`; in particular it
    /// never exists for `p = q`.
    pub fn primitive_root_of_unity(&self, p: u64) -> Result<Scalar> {
        if p == self.ch {
            return Err(Error::RootInOwnCharacteristic { p });
        }
        if (self.order() - 1) % p != 0 {
            return Err(Error::NoRootOfUnity {
                p,
                order: self.order(),
                field: format!("{self}"),
            });
        }
        let one = self.one();
        for s in self.enumerate() {
            if s.is_zero() || s == one {
                continue;
            }
            // p prime: s^p = 1 and s != 1 already pins the order to exactly p.
            if self.pow(&s, p) == one {
                return Ok(s);
            }
        }
        unreachable!("a cyclic group of order divisible by p has elements of order p")
    }

    /// Frobenius endomorphism `a -> a^q`.
    pub fn frobenius(&self, a: &Scalar) -> Scalar {
        self.pow(a, self.ch)
    }

    /// Render a scalar for reports: a plain integer for prime fields,
    /// a polynomial in `t` otherwise.
    pub fn scalar_string(&self, s: &Scalar) -> String {
        if self.degree == 1 {
            format!("{}", s.limbs[0])
        } else {
            poly_string(s.coeffs())
        }
    }

    /// JSON form: `{"char": q}` for prime fields,
    /// `{"char": q, "degree": m, "modulus": [c_0, ..., c_m]}` otherwise.
    pub fn to_json(&self) -> serde_json::Value {
        if self.degree == 1 {
            serde_json::json!({ "char": self.ch })
        } else {
            serde_json::json!({
                "char": self.ch,
                "degree": self.degree,
                "modulus": self.modulus,
            })
        }
    }

    /// Parse and fully re-validate a field description. `degree` and
    /// `modulus` may be omitted for prime fields.
    pub fn from_json(v: &serde_json::Value) -> Result<Self> {
        let obj = v
            .as_object()
            .ok_or_else(|| Error::Json("field must be a JSON object".into()))?;
        let ch = obj
            .get("char")
            .and_then(serde_json::Value::as_u64)
            .ok_or_else(|| Error::Json("field needs an integer \"char\"".into()))?;
        let modulus: Option<Vec<u64>> = match obj.get("modulus") {
            None => None,
            Some(m) => Some(
                m.as_array()
                    .ok_or_else(|| Error::Json("\"modulus\" must be an array".into()))?
                    .iter()
                    .map(|c| {
                        c.as_u64()
                            .ok_or_else(|| Error::Json("modulus coefficients must be nonnegative integers".into()))
                    })
                    .collect::<Result<_>>()?,
            ),
        };
        let degree = obj
            .get("degree")
            .and_then(serde_json::Value::as_u64)
            .map(|d| d as usize);
        let spec = match (&modulus, degree) {
            (None, None | Some(1)) => Self::prime(ch)?,
            (None, Some(d)) => {
                return Err(Error::Json(format!(
                    "degree {d} requires an explicit modulus"
                )))
            }
            (Some(m), d) => {
                if let Some(d) = d {
                    if m.len() != d + 1 {
                        return Err(Error::Json(format!(
                            "modulus has degree {} but \"degree\" says {d}",
                            m.len().saturating_sub(1)
                        )));
                    }
                }
                Self::extension(ch, m)?
            }
        };
        Ok(spec)
    }

    /// JSON form of a scalar: a bare integer for prime fields, the list of
    /// `m` coefficients otherwise.
    pub fn scalar_to_json(&self, s: &Scalar) -> serde_json::Value {
        if self.degree == 1 {
            serde_json::json!(s.limbs[0])
        } else {
            serde_json::json!(s.coeffs())
        }
    }

    /// Parse a scalar. A bare (possibly negative) integer embeds into the
    /// prime subfield for any degree; a list must have exactly `m` entries.
    pub fn scalar_from_json(&self, v: &serde_json::Value) -> Result<Scalar> {
        if let Some(n) = v.as_i64() {
            return Ok(self.from_signed(n));
        }
        let arr = v
            .as_array()
            .ok_or_else(|| Error::Json(format!("scalar must be an integer or a list, got {v}")))?;
        let coeffs: Vec<i64> = arr
            .iter()
            .map(|c| {
                c.as_i64()
                    .ok_or_else(|| Error::Json(format!("scalar coefficient must be an integer, got {c}")))
            })
            .collect::<Result<_>>()?;
        if coeffs.len() != self.degree {
            return Err(Error::ScalarLength {
                expected: self.degree,
                got: coeffs.len(),
            });
        }
        self.scalar(&coeffs)
    }
}

fn pow_mod(mut a: u64, mut e: u64, q: u64) -> u64 {
    let mut acc = 1;
    a %= q;
    while e > 0 {
        if e & 1 == 1 {
            acc = acc * a % q;
        }
        a = a * a % q;
        e >>= 1;
    }
    acc
}

/// Remainder of `a` divided by monic `b`, coefficients mod `q`.
fn poly_rem(a: &[u64], b: &[u64], q: u64) -> Vec<u64> {
    let mut r: Vec<u64> = a.to_vec();
    let db = b.len() - 1;
    while r.len() > db {
        let lead = *r.last().unwrap() % q;
        let shift = r.len() - 1 - db;
        if lead != 0 {
            for j in 0..=db {
                let idx = shift + j;
                r[idx] = (r[idx] + (q - b[j] % q) * lead) % q;
            }
        }
        r.pop();
    }
    while r.len() > 1 && *r.last().unwrap() % q == 0 {
        r.pop();
    }
    r.iter().map(|&c| c % q).collect()
}

/// Trial-division irreducibility over `F_q` for monic polynomials of degree
/// 2..=4: divide by every monic polynomial of degree 1..=deg/2.
fn poly_is_irreducible(f: &[u64], q: u64) -> bool {
    let deg = f.len() - 1;
    let max_factor_deg = deg / 2;
    for d in 1..=max_factor_deg {
        // Enumerate monic degree-d candidates by their low coefficients.
        let count = q.pow(d as u32);
        for idx in 0..count {
            let mut g = vec![0u64; d + 1];
            g[d] = 1;
            let mut v = idx;
            for slot in g.iter_mut().take(d) {
                *slot = v % q;
                v /= q;
            }
            let rem = poly_rem(f, &g, q);
            if rem.len() == 1 && rem[0] == 0 {
                return false;
            }
        }
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;

    fn f7() -> FieldSpec {
        FieldSpec::prime(7).unwrap()
    }

    fn gf4() -> FieldSpec {
        // F_2[t]/(t^2 + t + 1)
        FieldSpec::extension(2, &[1, 1, 1]).unwrap()
    }

    fn gf9() -> FieldSpec {
        // F_3[t]/(t^2 + 1); irreducible since -1 is not a square mod 3.
        FieldSpec::extension(3, &[1, 0, 1]).unwrap()
    }

    #[test]
    fn fp7_inverse_matches_exhaustive_search() {
        let f = f7();
        let three = f.from_int(3);
        // Oracle: scan all of F_7 for the inverse.
        let mut expected = None;
        for b in 0..7 {
            if 3 * b % 7 == 1 {
                expected = Some(b);
            }
        }
        assert_eq!(expected, Some(5));
        assert_eq!(f.inv(&three).unwrap(), f.from_int(5));
        assert_eq!(f.div(&three, &three).unwrap(), f.one());
    }

    #[test]
    fn gf4_product_reduces_by_modulus() {
        let f = gf4();
        let t = f.scalar(&[0, 1]).unwrap();
        let t1 = f.scalar(&[1, 1]).unwrap();
        // Oracle: t*(t+1) = t^2 + t; subtracting t^2 + t + 1 over F_2 leaves 1.
        assert_eq!(f.mul(&t, &t1), f.one());
        assert_eq!(f.mul(&t, &t), t1); // t^2 = t + 1
    }

    #[test]
    fn division_by_zero_is_an_error() {
        let f = f7();
        assert_eq!(f.inv(&f.zero()), Err(Error::DivisionByZero));
        assert_eq!(
            f.arith(&f.one(), &f.zero(), FieldOp::Div),
            Err(Error::DivisionByZero)
        );
    }

    #[test]
    fn mismatched_scalar_is_rejected_by_checked_ops() {
        let f7 = f7();
        let g4 = gf4();
        let alien = g4.scalar(&[1, 1]).unwrap();
        let e = f7.arith(&f7.one(), &alien, FieldOp::Add);
        assert!(matches!(e, Err(Error::ScalarLength { expected: 1, got: 2 })));
        // Right length but unreduced coefficients also fail the checked path.
        let unreduced = Scalar { len: 1, limbs: [9, 0, 0, 0] };
        assert!(matches!(
            f7.arith(&unreduced, &f7.one(), FieldOp::Add),
            Err(Error::FieldMismatch(_, _))
        ));
    }

    #[test]
    fn scalar_construction_reduces_signed_input() {
        let f = f7();
        assert_eq!(f.scalar(&[-1]).unwrap(), f.from_int(6));
        assert_eq!(f.scalar(&[15]).unwrap(), f.from_int(1));
        assert!(matches!(
            gf4().scalar(&[1, 1, 1]),
            Err(Error::ScalarLength { expected: 2, got: 3 })
        ));
    }

    #[test]
    fn primitive_roots_match_naive_order_search() {
        // Oracle: for each (q, p) walk the field in canonical order and return
        // the first element whose successive powers first hit 1 at exponent p.
        fn naive(q: u64, p: u64) -> u64 {
            for cand in 2..q {
                let mut acc = cand;
                let mut ord = 1;
                while acc != 1 {
                    acc = acc * cand % q;
                    ord += 1;
                }
                if ord == p {
                    return cand;
                }
            }
            panic!("no root found");
        }
        for (q, p, expected) in [(3, 2, 2), (7, 3, 2), (11, 5, 3)] {
            assert_eq!(naive(q, p), expected);
            let f = FieldSpec::prime(q).unwrap();
            assert_eq!(f.primitive_root_of_unity(p).unwrap(), f.from_int(expected));
        }
    }

    #[test]
    fn primitive_root_requires_divisibility() {
        let f5 = FieldSpec::prime(5).unwrap();
        assert!(matches!(
            f5.primitive_root_of_unity(3),
            Err(Error::NoRootOfUnity { p: 3, order: 5, .. })
        ));
        assert_eq!(
            f5.primitive_root_of_unity(5),
            Err(Error::RootInOwnCharacteristic { p: 5 })
        );
    }

    #[test]
    fn primitive_root_in_extension_field() {
        // |F_4^*| = 3, so every element other than 1 has order 3; the
        // canonical minimum is t (coefficient vector (0, 1)).
        let f = gf4();
        let root = f.primitive_root_of_unity(3).unwrap();
        assert_eq!(root, f.scalar(&[0, 1]).unwrap());
        assert_eq!(f.multiplicative_order(&root).unwrap(), 3);
    }

    #[test]
    fn canonical_rank_roundtrips_and_orders_lexicographically() {
        let f = gf9();
        let all: Vec<Scalar> = f.enumerate().collect();
        assert_eq!(all.len(), 9);
        for (r, s) in all.iter().enumerate() {
            assert_eq!(f.rank_of(s), r as u64);
            assert_eq!(f.scalar_from_rank(r as u64), *s);
        }
        let mut sorted = all.clone();
        sorted.sort();
        assert_eq!(sorted, all, "canonical enumeration must agree with Ord");
    }

    #[test]
    fn reducible_or_malformed_moduli_are_rejected() {
        // t^2 + 1 = (t + 1)^2 over F_2.
        assert!(matches!(
            FieldSpec::extension(2, &[1, 0, 1]),
            Err(Error::InvalidModulus(_))
        ));
        // Non-monic.
        assert!(matches!(
            FieldSpec::extension(3, &[1, 0, 2]),
            Err(Error::InvalidModulus(_))
        ));
        // Degree above the supported maximum.
        assert!(matches!(
            FieldSpec::extension(2, &[1, 1, 0, 0, 0, 1]),
            Err(Error::InvalidModulus(_))
        ));
        assert_eq!(FieldSpec::prime(6), Err(Error::NotPrime(6)));
        assert_eq!(FieldSpec::prime(1), Err(Error::NotPrime(1)));
    }

    #[test]
    fn json_roundtrip_for_fields_and_scalars() {
        let f7 = f7();
        assert_eq!(f7.to_json(), serde_json::json!({"char": 7}));
        assert_eq!(FieldSpec::from_json(&f7.to_json()).unwrap(), f7);
        let g4 = gf4();
        assert_eq!(FieldSpec::from_json(&g4.to_json()).unwrap(), g4);

        let s = f7.from_int(3);
        assert_eq!(f7.scalar_to_json(&s), serde_json::json!(3));
        assert_eq!(f7.scalar_from_json(&serde_json::json!(-1)).unwrap(), f7.from_int(6));
        let t1 = g4.scalar(&[1, 1]).unwrap();
        assert_eq!(g4.scalar_to_json(&t1), serde_json::json!([1, 1]));
        assert_eq!(g4.scalar_from_json(&serde_json::json!([1, 1])).unwrap(), t1);
        // A bare integer embeds into the prime subfield of an extension.
        assert_eq!(g4.scalar_from_json(&serde_json::json!(1)).unwrap(), g4.one());
        // Wrong length is rejected.
        assert!(g4.scalar_from_json(&serde_json::json!([1, 1, 0])).is_err());
        // Reducible modulus is rejected on parse, not trusted.
        let bad = serde_json::json!({"char": 2, "degree": 2, "modulus": [1, 0, 1]});
        assert!(FieldSpec::from_json(&bad).is_err());
    }

    #[test]
    fn quartic_with_quadratic_factors_is_caught() {
        // (t^2 + t + 1)^2 = t^4 + t^2 + 1 over F_2 has no roots but is reducible.
        assert!(matches!(
            FieldSpec::extension(2, &[1, 0, 1, 0, 1]),
            Err(Error::InvalidModulus(_))
        ));
        // t^4 + t + 1 is irreducible over F_2.
        assert!(FieldSpec::extension(2, &[1, 1, 0, 0, 1]).is_ok());
    }

    #[test]
    fn extension_inverse_agrees_with_exhaustive_search() {
        let f = gf9();
        for a in f.enumerate().skip(1) {
            let inv = f.inv(&a).unwrap();
            assert_eq!(f.mul(&a, &inv), f.one());
            // Oracle: the inverse is unique, find it by scanning.
            let mut found = None;
            for b in f.enumerate() {
                if f.mul(&a, &b) == f.one() {
                    found = Some(b);
                }
            }
            assert_eq!(found, Some(inv));
        }
    }

    mod properties {
        use super::*;
        use proptest::prelude::*;

        fn arb_scalar(order: u64) -> impl Strategy<Value = u64> {
            0..order
        }

        proptest! {
            #[test]
            fn f7_field_axioms(a in arb_scalar(7), b in arb_scalar(7), c in arb_scalar(7)) {
                let f = f7();
                let (a, b, c) = (f.from_int(a), f.from_int(b), f.from_int(c));
                prop_assert_eq!(f.add(&a, &b), f.add(&b, &a));
                prop_assert_eq!(f.mul(&a, &b), f.mul(&b, &a));
                prop_assert_eq!(f.mul(&f.mul(&a, &b), &c), f.mul(&a, &f.mul(&b, &c)));
                prop_assert_eq!(f.mul(&a, &f.add(&b, &c)), f.add(&f.mul(&a, &b), &f.mul(&a, &c)));
                prop_assert_eq!(f.add(&a, &f.neg(&a)), f.zero());
                if !a.is_zero() {
                    prop_assert_eq!(f.mul(&a, &f.inv(&a).unwrap()), f.one());
                }
            }

            #[test]
            fn gf9_field_axioms(ra in arb_scalar(9), rb in arb_scalar(9), rc in arb_scalar(9)) {
                let f = gf9();
                let a = f.scalar_from_rank(ra);
                let b = f.scalar_from_rank(rb);
                let c = f.scalar_from_rank(rc);
                prop_assert_eq!(f.mul(&f.mul(&a, &b), &c), f.mul(&a, &f.mul(&b, &c)));
                prop_assert_eq!(f.mul(&a, &f.add(&b, &c)), f.add(&f.mul(&a, &b), &f.mul(&a, &c)));
                if !a.is_zero() {
                    prop_assert_eq!(f.mul(&a, &f.inv(&a).unwrap()), f.one());
                }
            }

            #[test]
            fn frobenius_is_additive(ra in arb_scalar(9), rb in arb_scalar(9)) {
                let f = gf9();
                let a = f.scalar_from_rank(ra);
                let b = f.scalar_from_rank(rb);
                prop_assert_eq!(
                    f.frobenius(&f.add(&a, &b)),
                    f.add(&f.frobenius(&a), &f.frobenius(&b))
                );
                prop_assert_eq!(
                    f.frobenius(&f.mul(&a, &b)),
                    f.mul(&f.frobenius(&a), &f.frobenius(&b))
                );
            }
        }
    }
}
