//! Binary extension fields GF(2^s) in polynomial basis.

use super::ConstructError;

/// Fixed primitive polynomials, indexed by degree, bit `i` = coefficient of `x^i`.
const PRIMITIVE_POLYNOMIALS: [u32; 17] = [
    0,
    0b11,      // x + 1
    0b111,     // x^2 + x + 1
    0b1011,    // x^3 + x + 1
    0b10011,   // x^4 + x + 1
    0x25,      // x^5 + x^2 + 1
    0x43,      // x^6 + x + 1
    0x83,      // x^7 + x + 1
    0x11D,     // x^8 + x^4 + x^3 + x^2 + 1
    0x211,     // x^9 + x^4 + 1
    0x409,     // x^10 + x^3 + 1
    0x805,     // x^11 + x^2 + 1
    0x1053,    // x^12 + x^6 + x^4 + x + 1
    0x201B,    // x^13 + x^4 + x^3 + x + 1
    0x4443,    // x^14 + x^10 + x^6 + x + 1
    0x8003,    // x^15 + x + 1
    0x1100B,   // x^16 + x^12 + x^3 + x + 1
];

pub const MAX_DEGREE: u32 = 16;

pub fn primitive_polynomial(s: u32) -> Result<u32, ConstructError> {
    if s == 0 || s > MAX_DEGREE {
        return Err(ConstructError::UnsupportedField { s });
    }
    Ok(PRIMITIVE_POLYNOMIALS[s as usize])
}

/// Element of GF(2^s): coefficients of a polynomial of degree `< s`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FieldElement(pub u32);

impl FieldElement {
    pub const ZERO: FieldElement = FieldElement(0);
    pub const ONE: FieldElement = FieldElement(1);

    pub fn is_zero(self) -> bool {
        self.0 == 0
    }
}

/// GF(2^s) with log/antilog tables over a fixed primitive polynomial.
#[derive(Debug, Clone)]
pub struct GaloisField {
    s: u32,
    modulus: u32,
    exp: Vec<u32>,
    log: Vec<u32>,
}

impl GaloisField {
    pub fn new(s: u32) -> Result<Self, ConstructError> {
        let modulus = primitive_polynomial(s)?;
        let size = 1usize << s;
        let order = size - 1;
        let mut exp = vec![0u32; 2 * order];
        let mut log = vec![0u32; size];
        let mut x = 1u32;
        for i in 0..order {
            exp[i] = x;
            log[x as usize] = i as u32;
            x <<= 1;
            if x & (1 << s) != 0 {
                x ^= modulus;
            }
        }
        for i in order..2 * order {
            exp[i] = exp[i - order];
        }
        Ok(Self { s, modulus, exp, log })
    }

    pub fn degree(&self) -> u32 {
        self.s
    }

    pub fn modulus(&self) -> u32 {
        self.modulus
    }

    pub fn size(&self) -> usize {
        1 << self.s
    }

    pub fn order(&self) -> usize {
        self.size() - 1
    }

    pub fn elements(&self) -> impl Iterator<Item = FieldElement> {
        (0..self.size() as u32).map(FieldElement)
    }

    pub fn add(&self, a: FieldElement, b: FieldElement) -> FieldElement {
        FieldElement(a.0 ^ b.0)
    }

    pub fn mul(&self, a: FieldElement, b: FieldElement) -> FieldElement {
        if a.is_zero() || b.is_zero() {
            return FieldElement::ZERO;
        }
        FieldElement(self.exp[(self.log[a.0 as usize] + self.log[b.0 as usize]) as usize])
    }

    pub fn inv(&self, a: FieldElement) -> Option<FieldElement> {
        if a.is_zero() {
            return None;
        }
        let l = self.log[a.0 as usize] as usize;
        Some(FieldElement(self.exp[(self.order() - l) % self.order()]))
    }

    /// `α^k` for the primitive element `α = x`.
    pub fn alpha_pow(&self, k: usize) -> FieldElement {
        FieldElement(self.exp[k % self.order()])
    }

    pub fn log_alpha(&self, a: FieldElement) -> Option<usize> {
        (!a.is_zero()).then(|| self.log[a.0 as usize] as usize)
    }

    pub fn pow(&self, a: FieldElement, e: usize) -> FieldElement {
        if e == 0 {
            return FieldElement::ONE;
        }
        match self.log_alpha(a) {
            None => FieldElement::ZERO,
            Some(l) => self.alpha_pow(l * e),
        }
    }

    /// Evaluates a GF(2) polynomial (bit `i` = coefficient of `x^i`) at `a`.
    pub fn eval_binary_poly(&self, poly: u32, a: FieldElement) -> FieldElement {
        (0..32)
            .filter(|i| poly >> i & 1 == 1)
            .fold(FieldElement::ZERO, |acc, i| self.add(acc, self.pow(a, i)))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn all_tabulated_polynomials_are_primitive() {
        for s in 1..=MAX_DEGREE {
            let f = GaloisField::new(s).unwrap();
            // the powers of x visit every non-zero element exactly once
            let mut seen = vec![false; f.size()];
            for k in 0..f.order() {
                let a = f.alpha_pow(k);
                assert!(!a.is_zero());
                assert!(!seen[a.0 as usize], "s={s} repeats at k={k}");
                seen[a.0 as usize] = true;
            }
        }
    }

    #[test]
    fn unsupported_degrees() {
        assert!(GaloisField::new(0).is_err());
        assert!(GaloisField::new(17).is_err());
    }

    #[test]
    fn field_axioms_small_fields() {
        for s in [1, 2, 3] {
            let f = GaloisField::new(s).unwrap();
            let els: Vec<_> = f.elements().collect();
            for &a in &els {
                assert_eq!(f.mul(a, FieldElement::ONE), a);
                if !a.is_zero() {
                    assert_eq!(f.mul(a, f.inv(a).unwrap()), FieldElement::ONE);
                }
                for &b in &els {
                    assert_eq!(f.mul(a, b), f.mul(b, a));
                    for &c in &els {
                        assert_eq!(f.mul(f.mul(a, b), c), f.mul(a, f.mul(b, c)));
                        assert_eq!(f.mul(a, f.add(b, c)), f.add(f.mul(a, b), f.mul(a, c)));
                        assert_eq!(f.add(f.add(a, b), c), f.add(a, f.add(b, c)));
                    }
                }
            }
            assert_eq!(f.inv(FieldElement::ZERO), None);
        }
    }

    #[test]
    fn modulus_has_x_as_root() {
        for s in 1..=8 {
            let f = GaloisField::new(s).unwrap();
            assert_eq!(f.eval_binary_poly(f.modulus(), f.alpha_pow(1)), FieldElement::ZERO);
        }
    }
}
