//! Arithmetic over the binary extension field GF(2^m).
//!
//! Elements are polynomials over GF(2) packed into the low `m` bits of an
//! integer. Multiplication and inversion go through log/antilog tables built
//! once from a primitive polynomial; addition is XOR.

use thiserror::Error;

/// Smallest supported extension degree.
pub const MIN_M: u32 = 2;
/// Largest supported extension degree.
pub const MAX_M: u32 = 16;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum Gf2mError {
    #[error("polynomial {poly:#x} does not generate GF(2^{m}): alpha has order below 2^m - 1")]
    NonPrimitivePolynomial { m: u32, poly: u32 },
    #[error("invalid field parameters: m = {m} (need {MIN_M}..={MAX_M}), poly = {poly:#x} (need degree exactly m)")]
    InvalidParameters { m: u32, poly: u32 },
    #[error("division by zero in GF(2^m)")]
    DivisionByZero,
}

/// An element of GF(2^m): the low `m` bits hold the polynomial coefficients.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct FieldElement(pub u32);

impl FieldElement {
    pub const ZERO: FieldElement = FieldElement(0);
    pub const ONE: FieldElement = FieldElement(1);

    #[inline]
    pub fn is_zero(self) -> bool {
        self.0 == 0
    }
}

/// Log/antilog tables for one GF(2^m).
///
/// Immutable after construction and safe to share across threads. The
/// antilog table is stored twice over so `exp(log a + log b)` never needs a
/// reduction mod 2^m - 1.
#[derive(Debug, Clone)]
pub struct FieldTables {
    m: u32,
    primitive_poly: u32,
    /// Multiplicative group order, 2^m - 1.
    order: u32,
    /// exp[i] = alpha^i for i in 0..2*order.
    exp: Vec<u32>,
    /// log[a] = discrete log of a, for a in 1..2^m.
    log: Vec<u32>,
}

impl FieldTables {
    /// Builds the tables for GF(2^m) from a degree-m primitive polynomial
    /// given as a bitmask (bit i = coefficient of x^i).
    ///
    /// Primitivity is verified constructively: the generated element alpha
    /// must have multiplicative order exactly 2^m - 1, i.e. the powers of
    /// alpha must enumerate every nonzero element once before returning to 1.
    pub fn build(m: u32, primitive_poly: u32) -> Result<FieldTables, Gf2mError> {
        if !(MIN_M..=MAX_M).contains(&m) || (primitive_poly >> m) != 1 {
            return Err(Gf2mError::InvalidParameters {
                m,
                poly: primitive_poly,
            });
        }
        let order = (1u32 << m) - 1;
        let non_primitive = Gf2mError::NonPrimitivePolynomial {
            m,
            poly: primitive_poly,
        };

        let mut exp = vec![0u32; 2 * order as usize];
        let mut log = vec![u32::MAX; 1usize << m];
        let mut x = 1u32;
        for i in 0..order {
            if x == 1 && i != 0 {
                // alpha's order divides i < 2^m - 1.
                return Err(non_primitive);
            }
            exp[i as usize] = x;
            log[x as usize] = i;
            x <<= 1;
            if x >> m != 0 {
                x ^= primitive_poly;
            }
            if x == 0 {
                return Err(non_primitive);
            }
        }
        if x != 1 || log[1..].iter().any(|&l| l == u32::MAX) {
            return Err(non_primitive);
        }
        for i in 0..order as usize {
            exp[i + order as usize] = exp[i];
        }

        Ok(FieldTables {
            m,
            primitive_poly,
            order,
            exp,
            log,
        })
    }

    #[inline]
    pub fn m(&self) -> u32 {
        self.m
    }

    #[inline]
    pub fn primitive_poly(&self) -> u32 {
        self.primitive_poly
    }

    /// Order of the multiplicative group, 2^m - 1.
    #[inline]
    pub fn order(&self) -> u32 {
        self.order
    }

    /// alpha^i for 0 <= i < 2*(2^m - 1); the table has period 2^m - 1.
    #[inline]
    pub fn exp(&self, i: u32) -> FieldElement {
        FieldElement(self.exp[i as usize])
    }

    /// Discrete log of a nonzero element.
    #[inline]
    pub fn log(&self, a: FieldElement) -> u32 {
        debug_assert!(!a.is_zero());
        self.log[a.0 as usize]
    }

    /// alpha^e for any signed exponent.
    #[inline]
    pub fn alpha_pow(&self, e: i64) -> FieldElement {
        let n = self.order as i64;
        FieldElement(self.exp[(e.rem_euclid(n)) as usize])
    }

    /// Field addition (= subtraction): XOR.
    #[inline]
    pub fn add(&self, a: FieldElement, b: FieldElement) -> FieldElement {
        FieldElement(a.0 ^ b.0)
    }

    #[inline]
    pub fn mul(&self, a: FieldElement, b: FieldElement) -> FieldElement {
        if a.is_zero() || b.is_zero() {
            return FieldElement::ZERO;
        }
        FieldElement(self.exp[(self.log[a.0 as usize] + self.log[b.0 as usize]) as usize])
    }

    /// Multiplicative inverse of a nonzero element.
    pub fn inv(&self, a: FieldElement) -> Result<FieldElement, Gf2mError> {
        if a.is_zero() {
            return Err(Gf2mError::DivisionByZero);
        }
        Ok(FieldElement(
            self.exp[(self.order - self.log[a.0 as usize]) as usize],
        ))
    }

    /// a^e by square-and-multiply on the log (e >= 0).
    pub fn pow(&self, a: FieldElement, e: u64) -> FieldElement {
        if a.is_zero() {
            return if e == 0 {
                FieldElement::ONE
            } else {
                FieldElement::ZERO
            };
        }
        let l = (self.log[a.0 as usize] as u64 * (e % self.order as u64)) % self.order as u64;
        FieldElement(self.exp[l as usize])
    }
}

/// A conventional primitive polynomial for each supported m.
pub fn default_primitive_poly(m: u32) -> Option<u32> {
    Some(match m {
        2 => 0b111,                // x^2 + x + 1
        3 => 0b1011,               // x^3 + x + 1
        4 => 0b1_0011,             // x^4 + x + 1
        5 => 0b10_0101,            // x^5 + x^2 + 1
        6 => 0b100_0011,           // x^6 + x + 1
        7 => 0b1000_1001,          // x^7 + x^3 + 1
        8 => 0b1_0001_1101,        // x^8 + x^4 + x^3 + x^2 + 1
        9 => 0b10_0001_0001,       // x^9 + x^4 + 1
        10 => 0b100_0000_1001,     // x^10 + x^3 + 1
        11 => 0b1000_0000_0101,    // x^11 + x^2 + 1
        12 => 0b1_0000_0101_0011,  // x^12 + x^6 + x^4 + x + 1
        13 => 0b10_0000_0001_1011, // x^13 + x^4 + x^3 + x + 1
        14 => 0b100_0100_0100_0011, // x^14 + x^10 + x^6 + x + 1
        15 => 0b1000_0000_0000_0011, // x^15 + x + 1
        16 => 0b1_0001_0000_0000_1011, // x^16 + x^12 + x^3 + x + 1
        _ => return None,
    })
}
