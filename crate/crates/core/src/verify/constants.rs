//! The constant chain behind `c1` and `c2`.
//!
//! With split factor `t`, stability constant `c` and `A`-threshold `α` (a
//! counterexample has `|A| < α 2^n`, so `m >= (1 - α) 2^n`), the argument
//! fails exactly when `c p <= (1 - α)(1 - t² p²)`. The largest such `p` is the
//! positive root of `(1 - α) t² p² + c p - (1 - α)`, which is `c1`. Then
//! `c2 = 2 c1 / (9 - 6 c1)`.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::Serialize;

use crate::error::{Error, Result};

fn big(n: i64, d: i64) -> BigRational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

fn big_string(x: &BigRational) -> String {
    format!("{}/{}", x.numer(), x.denom())
}

/// Parameters of the chain.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConstantChain {
    /// Split factor `t`.
    pub t: BigRational,
    /// Stability constant, 12 or 8.
    pub c: u32,
    /// Threshold `α` with `1/2 <= α <= 2/3`.
    pub alpha: BigRational,
}

impl ConstantChain {
    pub fn new(t: BigRational, c: u32, alpha: BigRational) -> Result<Self> {
        if !t.is_positive() {
            return Err(Error::domain("split factor t must be positive"));
        }
        if c != 8 && c != 12 {
            return Err(Error::domain(format!("stability constant must be 8 or 12, got {c}")));
        }
        if alpha < big(1, 2) || alpha > big(2, 3) {
            return Err(Error::domain("alpha must lie in [1/2, 2/3]"));
        }
        Ok(ConstantChain { t, c, alpha })
    }

    /// `t = 3`, `α = 2/3`.
    pub fn standard(c: u32) -> Result<Self> {
        ConstantChain::new(big(3, 1), c, big(2, 3))
    }

    /// `a p² + b p + k` whose positive root is `c1`.
    pub fn quadratic(&self) -> Quadratic {
        let a = BigRational::one() - &self.alpha;
        Quadratic { a: &a * &self.t * &self.t, b: BigRational::from_integer(self.c.into()), k: -a }
    }
}

/// `a p² + b p + k` with `a, b > 0 > k`, so exactly one positive root.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Quadratic {
    pub a: BigRational,
    pub b: BigRational,
    pub k: BigRational,
}

impl Quadratic {
    pub fn eval(&self, p: &BigRational) -> BigRational {
        &self.a * p * p + &self.b * p + &self.k
    }

    /// Integer coefficients with gcd 1 and positive leading term.
    pub fn primitive(&self) -> [BigInt; 3] {
        use num_integer::Integer;
        let l = self.a.denom().lcm(self.b.denom()).lcm(self.k.denom());
        let scale = BigRational::from_integer(l);
        let v = [&self.a * &scale, &self.b * &scale, &self.k * &scale].map(|x| x.to_integer());
        let g = v[0].gcd(&v[1]).gcd(&v[2]);
        v.map(|x| x / &g)
    }

    /// True iff `p` is at most the positive root. Exact: the quadratic is
    /// increasing on `p >= 0`.
    pub fn root_at_least(&self, p: &BigRational) -> bool {
        !p.is_positive() || !self.eval(p).is_positive()
    }

    /// Rational `lo <= root < lo + 2^-bits`.
    pub fn root_lower_bound(&self, bits: u32) -> BigRational {
        let mut lo = BigRational::zero();
        let mut hi = BigRational::one();
        while self.eval(&hi).is_negative() {
            hi = &hi * BigRational::from_integer(2.into());
        }
        let width = BigRational::new(BigInt::one(), BigInt::one() << bits);
        while &hi - &lo >= width {
            let mid = (&lo + &hi) / BigRational::from_integer(2.into());
            if self.eval(&mid).is_positive() {
                hi = mid;
            } else {
                lo = mid;
            }
        }
        lo
    }
}

/// `c2 = 2 c1 / (9 - 6 c1)`, increasing in `c1`.
pub fn c2_from_c1(c1: &BigRational) -> BigRational {
    big(2, 1) * c1 / (big(9, 1) - big(6, 1) * c1)
}

/// The `c1` for which `c2_from_c1(c1) = c2`.
pub fn c1_for_c2(c2: &BigRational) -> BigRational {
    big(9, 1) * c2 / (big(2, 1) + big(6, 1) * c2)
}

/// Outcome of [`derive_constants`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DerivedConstants {
    pub chain: ConstantChain,
    /// Coefficients of the final threshold quadratic.
    pub quadratic: Quadratic,
    /// Rational lower bound on `c1`, within `2^-96`.
    pub c1: BigRational,
    /// `c2_from_c1(c1)`, a lower bound on `c2`.
    pub c2: BigRational,
    /// Rounds of `α` feedback applied.
    pub rounds: u32,
}

impl DerivedConstants {
    pub fn c1_f64(&self) -> f64 {
        self.c1.to_f64().unwrap_or(f64::NAN)
    }

    pub fn c2_f64(&self) -> f64 {
        self.c2.to_f64().unwrap_or(f64::NAN)
    }

    /// `c1 >= x`, decided against the exact root.
    pub fn c1_at_least(&self, x: &BigRational) -> bool {
        self.quadratic.root_at_least(x)
    }

    /// `c2 >= x`, decided against the exact root.
    pub fn c2_at_least(&self, x: &BigRational) -> bool {
        self.c1_at_least(&c1_for_c2(x))
    }
}

impl Serialize for DerivedConstants {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        struct D {
            t: String,
            c: u32,
            alpha: String,
            quadratic: [String; 3],
            c1_lower: String,
            c2_lower: String,
            c1_approx: f64,
            c2_approx: f64,
            rounds: u32,
        }
        D {
            t: big_string(&self.chain.t),
            c: self.chain.c,
            alpha: big_string(&self.chain.alpha),
            quadratic: self.quadratic.primitive().map(|x| x.to_string()),
            c1_lower: big_string(&self.c1),
            c2_lower: big_string(&self.c2),
            c1_approx: self.c1_f64(),
            c2_approx: self.c2_f64(),
            rounds: self.rounds,
        }
        .serialize(s)
    }
}

const ROOT_BITS: u32 = 96;

/// `c1` and `c2` for a fixed chain.
pub fn derive_constants(chain: &ConstantChain) -> DerivedConstants {
    let quadratic = chain.quadratic();
    let c1 = quadratic.root_lower_bound(ROOT_BITS);
    let c2 = c2_from_c1(&c1);
    DerivedConstants { chain: chain.clone(), quadratic, c1, c2, rounds: 0 }
}

/// Iterates `α ← 2/3 - c2` from `chain` until `c2` moves by less than
/// `2^-80` or `max_rounds` is reached. Every round uses rational lower
/// bounds, so the result stays a certified lower bound.
pub fn derive_constants_fixpoint(chain: &ConstantChain, max_rounds: u32) -> DerivedConstants {
    let mut current = derive_constants(chain);
    let eps = BigRational::new(BigInt::one(), BigInt::one() << 80);
    for round in 1..=max_rounds {
        let alpha = big(2, 3) - &current.c2;
        let next_chain = ConstantChain { t: chain.t.clone(), c: chain.c, alpha };
        let mut next = derive_constants(&next_chain);
        next.rounds = round;
        let moved = (&next.c2 - &current.c2).abs();
        current = next;
        if moved < eps {
            break;
        }
    }
    current
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn twelve_chain_is_thirty_six() {
        let chain = ConstantChain::standard(12).unwrap();
        let q = chain.quadratic();
        assert_eq!(q.primitive(), [9.into(), 36.into(), (-1).into()]);
        assert!(q.eval(&big(1, 37)).is_negative());
        let d = derive_constants(&chain);
        assert!(d.c1_at_least(&big(1, 37)));
        assert!((d.c1_f64() - 0.027588).abs() < 1e-5);
    }

    #[test]
    fn c2_from_one_over_37() {
        assert_eq!(c2_from_c1(&big(1, 37)), big(2, 327));
        assert_eq!(c1_for_c2(&big(2, 327)), big(1, 37));
    }

    #[test]
    fn eighth_chain_fixpoint() {
        let d = derive_constants_fixpoint(&ConstantChain::standard(8).unwrap(), 200);
        assert!(d.c1_at_least(&big(1, 24)));
        assert!(d.c2_at_least(&big(1, 104)));
        assert!((d.c1_f64() - 0.04218).abs() < 1e-5, "{}", d.c1_f64());
        assert!((d.c2_f64() - 0.009646).abs() < 1e-6, "{}", d.c2_f64());
        assert!(d.rounds > 1);
    }

    #[test]
    fn monotone_in_alpha() {
        let lo = derive_constants(&ConstantChain::new(big(3, 1), 8, big(2, 3)).unwrap());
        let hi = derive_constants(&ConstantChain::new(big(3, 1), 8, big(1, 2)).unwrap());
        assert!(hi.c1 > lo.c1);
    }

    #[test]
    fn invalid_chains() {
        assert!(ConstantChain::new(big(0, 1), 12, big(2, 3)).is_err());
        assert!(ConstantChain::new(big(3, 1), 10, big(2, 3)).is_err());
        assert!(ConstantChain::new(big(3, 1), 12, big(3, 4)).is_err());
    }
}
