use std::fmt;

use serde::{Deserialize, Serialize};

use super::CliffordError;

/// Largest supported number of generators.
pub const MAX_GENERATORS: usize = 8;

/// Bitmask of generator indices; bit `i` set means generator `i` is a factor.
pub type Blade = u16;

/// Metric signature of Cl(p, q).
///
/// Generators `0..p` square to +1 and `p..p+q` to -1. `label_base` only
/// affects how blades are printed and parsed: Cl(3,0) uses `e1 e2 e3`,
/// the spacetime and Dirac algebras use `e0 ...`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Signature {
    pub p: u8,
    pub q: u8,
    #[serde(default = "default_label_base")]
    pub label_base: u8,
}

fn default_label_base() -> u8 {
    1
}

impl Signature {
    pub fn new(p: u8, q: u8) -> Result<Self, CliffordError> {
        Self::with_label_base(p, q, 1)
    }

    pub fn with_label_base(p: u8, q: u8, label_base: u8) -> Result<Self, CliffordError> {
        if p as usize + q as usize > MAX_GENERATORS {
            return Err(CliffordError::DimensionTooLarge { p, q, max: MAX_GENERATORS });
        }
        Ok(Self { p, q, label_base })
    }

    /// Cl(3,0), generators `e1 e2 e3`.
    pub fn euclidean3() -> Self {
        Self { p: 3, q: 0, label_base: 1 }
    }

    /// Spacetime algebra Cl(1,3), generators `e0..e3` with `e0^2 = +1`.
    pub fn spacetime() -> Self {
        Self { p: 1, q: 3, label_base: 0 }
    }

    /// Dirac algebra Cl(4,1), generators `e0..e4`; `e4` carries the -1.
    pub fn dirac() -> Self {
        Self { p: 4, q: 1, label_base: 0 }
    }

    pub fn dim(&self) -> usize {
        (self.p + self.q) as usize
    }

    pub fn num_blades(&self) -> usize {
        1 << self.dim()
    }

    pub fn pseudoscalar(&self) -> Blade {
        (self.num_blades() - 1) as Blade
    }

    /// Square of generator `i`: +1 or -1.
    pub fn metric(&self, i: usize) -> i32 {
        if i < self.p as usize {
            1
        } else {
            -1
        }
    }

    /// Geometric product of two basis blades: `(sign, blade)`.
    pub fn blade_product(&self, a: Blade, b: Blade) -> (i32, Blade) {
        let mut sign = reorder_sign(a, b);
        let common = a & b;
        for i in 0..self.dim() {
            if common & (1 << i) != 0 {
                sign *= self.metric(i);
            }
        }
        (sign, a ^ b)
    }

    /// Label of a blade, e.g. `"1"`, `"e0"`, `"e123"`.
    pub fn blade_label(&self, blade: Blade) -> String {
        if blade == 0 {
            return "1".to_string();
        }
        let mut s = String::from("e");
        for i in 0..self.dim() {
            if blade & (1 << i) != 0 {
                s.push_str(&(i + self.label_base as usize).to_string());
            }
        }
        s
    }

    /// Parse a blade label. Indices may be given in any order; the returned
    /// sign accounts for the permutation to canonical order, and a repeated
    /// index contracts with the metric.
    pub fn parse_blade(&self, label: &str) -> Result<(i32, Blade), CliffordError> {
        let bad = || CliffordError::BadBladeLabel(label.to_string());
        if label == "1" {
            return Ok((1, 0));
        }
        let digits = label.strip_prefix('e').ok_or_else(bad)?;
        if digits.is_empty() {
            return Err(bad());
        }
        let mut sign = 1;
        let mut blade: Blade = 0;
        for ch in digits.chars() {
            let d = ch.to_digit(10).ok_or_else(bad)? as usize;
            let idx = d.checked_sub(self.label_base as usize).ok_or_else(bad)?;
            if idx >= self.dim() {
                return Err(bad());
            }
            let (s, b) = self.blade_product(blade, 1 << idx);
            sign *= s;
            blade = b;
        }
        Ok((sign, blade))
    }
}

impl fmt::Display for Signature {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Cl({},{})", self.p, self.q)
    }
}

pub fn grade(blade: Blade) -> usize {
    blade.count_ones() as usize
}

/// Sign of moving the generators of `b` past those of `a` into canonical order.
fn reorder_sign(a: Blade, b: Blade) -> i32 {
    let mut swaps = 0u32;
    let mut a = a >> 1;
    while a != 0 {
        swaps += (a & b).count_ones();
        a >>= 1;
    }
    if swaps % 2 == 0 {
        1
    } else {
        -1
    }
}

/// Radon–Hurwitz number `r_i`, extended to all integers by `r_{i+8} = r_i + 4`.
pub fn radon_hurwitz(i: i64) -> i64 {
    const TABLE: [i64; 8] = [0, 1, 2, 2, 3, 3, 3, 3];
    let period = i.div_euclid(8);
    TABLE[i.rem_euclid(8) as usize] + 4 * period
}

/// Number of commuting idempotent factors `k = q - r_{q-p}` for a primitive idempotent.
pub fn idempotent_factor_count(sig: &Signature) -> i64 {
    sig.q as i64 - radon_hurwitz(sig.q as i64 - sig.p as i64)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn radon_hurwitz_table_and_recurrence() {
        let got: Vec<i64> = (0..8).map(radon_hurwitz).collect();
        assert_eq!(got, vec![0, 1, 2, 2, 3, 3, 3, 3]);
        assert_eq!(radon_hurwitz(8), 4);
        assert_eq!(radon_hurwitz(-3), -1);
        for i in -16..=16 {
            assert_eq!(radon_hurwitz(i + 8), radon_hurwitz(i) + 4);
        }
    }

    #[test]
    fn factor_counts() {
        assert_eq!(idempotent_factor_count(&Signature::spacetime()), 1);
        assert_eq!(idempotent_factor_count(&Signature::dirac()), 2);
        assert_eq!(idempotent_factor_count(&Signature::euclidean3()), 1);
    }

    #[test]
    fn blade_products() {
        let s = Signature::euclidean3();
        assert_eq!(s.blade_product(0b001, 0b001), (1, 0));
        assert_eq!(s.blade_product(0b010, 0b001), (-1, 0b011));
        let st = Signature::spacetime();
        assert_eq!(st.blade_product(0b0010, 0b0010), (-1, 0));
        assert_eq!(st.blade_product(0b0001, 0b0001), (1, 0));
    }

    #[test]
    fn labels_roundtrip() {
        let st = Signature::spacetime();
        assert_eq!(st.blade_label(0b1111), "e0123");
        assert_eq!(st.parse_blade("e0123").unwrap(), (1, 0b1111));
        assert_eq!(st.parse_blade("e31").unwrap(), (-1, 0b1010));
        assert_eq!(st.parse_blade("e11").unwrap(), (-1, 0));
        assert!(st.parse_blade("e4").is_err());
        assert!(st.parse_blade("x1").is_err());
    }

    #[test]
    fn rejects_large_dimension() {
        assert!(Signature::new(5, 4).is_err());
        assert!(Signature::new(4, 4).is_ok());
    }
}
