//! Unimodular 2×2 integer matrices, the subgroups Γ_θ and Γ⁰(2), the Möbius
//! action on boundary points, and generator-word decomposition in Γ_θ.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::exact::{gcd, BoundaryPoint, Rational};

/// A 2×2 integer matrix with determinant 1. Entries are arbitrary precision.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct UniModMatrix {
    pub a: BigInt,
    pub b: BigInt,
    pub c: BigInt,
    pub d: BigInt,
}

impl UniModMatrix {
    /// Construct with the determinant check `ad - bc = 1`.
    pub fn new(a: BigInt, b: BigInt, c: BigInt, d: BigInt) -> Result<Self> {
        let det = &a * &d - &b * &c;
        if !det.is_one() {
            return Err(Error::domain(format!(
                "matrix [[{a},{b}],[{c},{d}]] must have determinant 1 (got {det})"
            )));
        }
        Ok(UniModMatrix { a, b, c, d })
    }

    pub fn from_i64(a: i64, b: i64, c: i64, d: i64) -> Result<Self> {
        UniModMatrix::new(a.into(), b.into(), c.into(), d.into())
    }

    pub fn identity() -> Self {
        UniModMatrix {
            a: BigInt::one(),
            b: BigInt::zero(),
            c: BigInt::zero(),
            d: BigInt::one(),
        }
    }

    /// Translation T^n = [[1, n],[0, 1]].
    pub fn t_pow(n: impl Into<BigInt>) -> Self {
        UniModMatrix {
            a: BigInt::one(),
            b: n.into(),
            c: BigInt::zero(),
            d: BigInt::one(),
        }
    }

    /// The inversion S = [[0, -1],[1, 0]].
    pub fn s() -> Self {
        UniModMatrix {
            a: BigInt::zero(),
            b: BigInt::from(-1),
            c: BigInt::one(),
            d: BigInt::zero(),
        }
    }

    /// V = [[1, 0],[1, 1]], the second generator of Γ⁰(2).
    pub fn v() -> Self {
        UniModMatrix {
            a: BigInt::one(),
            b: BigInt::zero(),
            c: BigInt::one(),
            d: BigInt::one(),
        }
    }

    /// Exact matrix product. Determinants are multiplicative, so no recheck.
    pub fn mul(&self, rhs: &UniModMatrix) -> UniModMatrix {
        UniModMatrix {
            a: &self.a * &rhs.a + &self.b * &rhs.c,
            b: &self.a * &rhs.b + &self.b * &rhs.d,
            c: &self.c * &rhs.a + &self.d * &rhs.c,
            d: &self.c * &rhs.b + &self.d * &rhs.d,
        }
    }

    /// Inverse: [[d, -b],[-c, a]].
    pub fn inv(&self) -> UniModMatrix {
        UniModMatrix {
            a: self.d.clone(),
            b: -self.b.clone(),
            c: -self.c.clone(),
            d: self.a.clone(),
        }
    }

    /// -A, which is again unimodular.
    pub fn neg(&self) -> UniModMatrix {
        UniModMatrix {
            a: -self.a.clone(),
            b: -self.b.clone(),
            c: -self.c.clone(),
            d: -self.d.clone(),
        }
    }

    /// Membership in Γ_θ: a ≡ d and b ≡ c (mod 2).
    pub fn in_gamma_theta(&self) -> bool {
        let two = BigInt::from(2);
        (&self.a - &self.d).mod_floor(&two).is_zero()
            && (&self.b - &self.c).mod_floor(&two).is_zero()
    }

    /// Membership in Γ⁰(2): b ≡ 0 (mod 2).
    pub fn in_gamma0_2(&self) -> bool {
        self.b.is_even()
    }

    /// Möbius action x ↦ (ax + b)/(cx + d) on the boundary circle, with
    /// ∞ ↦ a/c and the pole -d/c ↦ ∞.
    pub fn moebius(&self, x: &BoundaryPoint) -> BoundaryPoint {
        match x {
            BoundaryPoint::Infinity => {
                if self.c.is_zero() {
                    BoundaryPoint::Infinity
                } else {
                    BoundaryPoint::Finite(Rational::new(self.a.clone(), self.c.clone()))
                }
            }
            BoundaryPoint::Finite(x) => {
                let num = Rational::from_integer(self.a.clone()) * x
                    + Rational::from_integer(self.b.clone());
                let den = Rational::from_integer(self.c.clone()) * x
                    + Rational::from_integer(self.d.clone());
                if den.is_zero() {
                    BoundaryPoint::Infinity
                } else {
                    BoundaryPoint::Finite(num / den)
                }
            }
        }
    }

    /// The cusp A·i∞.
    pub fn cusp(&self) -> BoundaryPoint {
        self.moebius(&BoundaryPoint::Infinity)
    }

    /// First column (a, c).
    pub fn first_column(&self) -> (BigInt, BigInt) {
        (self.a.clone(), self.c.clone())
    }
}

impl fmt::Display for UniModMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[[{},{}],[{},{}]]", self.a, self.b, self.c, self.d)
    }
}

/// A word ±T^{2n₀} S T^{2n₁} S ··· T^{2n_r} S T^{2n_{r+1}} in the generators
/// of Γ_θ, stored as the global sign and the exponent list (n₀, …, n_{r+1}).
/// Interior exponents are nonzero in normal form.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GeneratorWord {
    pub sign: i8,
    pub exponents: Vec<BigInt>,
}

impl GeneratorWord {
    /// Validated constructor: sign is ±1, the list is nonempty, and every
    /// interior exponent is nonzero.
    pub fn new(sign: i8, exponents: Vec<BigInt>) -> Result<Self> {
        if sign != 1 && sign != -1 {
            return Err(Error::domain("word sign must be +1 or -1"));
        }
        if exponents.is_empty() {
            return Err(Error::domain("word must contain at least one exponent"));
        }
        if exponents.len() > 2 {
            for n in &exponents[1..exponents.len() - 1] {
                if n.is_zero() {
                    return Err(Error::domain(
                        "interior exponents of a word must be nonzero",
                    ));
                }
            }
        }
        Ok(GeneratorWord { sign, exponents })
    }

    pub fn from_i64(sign: i8, exponents: &[i64]) -> Result<Self> {
        GeneratorWord::new(sign, exponents.iter().map(|&n| BigInt::from(n)).collect())
    }

    /// Number of S factors in the word.
    pub fn s_count(&self) -> usize {
        self.exponents.len() - 1
    }
}

impl fmt::Display for GeneratorWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let sign = if self.sign >= 0 { "+1" } else { "-1" };
        let exps: Vec<String> = self.exponents.iter().map(|n| n.to_string()).collect();
        write!(f, "{sign};[{}]", exps.join(","))
    }
}

/// Multiply out a generator word to its matrix.
pub fn compose_word(word: &GeneratorWord) -> UniModMatrix {
    let s = UniModMatrix::s();
    let mut acc = UniModMatrix::t_pow(&word.exponents[0] * 2);
    for n in &word.exponents[1..] {
        acc = acc.mul(&s);
        if !n.is_zero() {
            acc = acc.mul(&UniModMatrix::t_pow(n * 2));
        }
    }
    if word.sign < 0 {
        acc = acc.neg();
    }
    acc
}

/// Decompose A ∈ Γ_θ into the normal form ±T^{2n₀} S ··· T^{2n_r} S T^{2n_{r+1}}.
///
/// Reduction step: translate a into the window (-|c|, |c|) by a power of T²
/// (the window boundary is unreachable because a and c have opposite parity),
/// then strip one S. |c| strictly decreases, so this is Euclidean and the
/// interior exponents it emits are automatically nonzero.
pub fn decompose_theta(m: &UniModMatrix) -> Result<GeneratorWord> {
    if !m.in_gamma_theta() {
        return Err(Error::domain(
            "decomposition requires a matrix in gamma_theta",
        ));
    }
    let s_inv = UniModMatrix::s().inv();
    let mut cur = m.clone();
    let mut exps: Vec<BigInt> = Vec::new();
    while !cur.c.is_zero() {
        let window = BigInt::from(2) * cur.c.abs();
        let mut r = cur.a.mod_floor(&window); // r in [0, 2|c|)
        if r > cur.c.abs() {
            r -= &window; // now r in (-|c|, |c|)
        }
        let shift = &cur.a - &r; // multiple of 2c
        let n = &shift / (BigInt::from(2) * &cur.c);
        exps.push(n.clone());
        cur = s_inv.mul(&UniModMatrix::t_pow(-(BigInt::from(2) * &n)).mul(&cur));
    }
    // Remaining matrix is ±T^{2m}: read the tail exponent and the sign.
    debug_assert!(cur.b.is_even());
    let (sign, tail) = if cur.a.is_one() {
        (1i8, cur.b.clone() / 2)
    } else {
        (-1i8, -cur.b.clone() / 2)
    };
    exps.push(tail);
    GeneratorWord::new(sign, exps)
}

/// Check that (a, c) is a valid Γ_θ cusp column: coprime with a + c odd.
pub fn is_theta_cusp_pair(a: &BigInt, c: &BigInt) -> bool {
    gcd(a, c).is_one() && (a + c).is_odd()
}
