//! The inequality 2^-k (1 + 2^-(k+1)) / (1 - 2^-k)^2 <= 2^-(k-1), k >= 2,
//! in exact rationals, together with its factored form
//! (2^-(k-2) - 1)(2^-(k+1) - 1) >= 0.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use serde::Serialize;

use super::{ratio_string, LemmaError};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Fact1Report {
    pub k: usize,
    #[serde(serialize_with = "ratio_string")]
    pub lhs: BigRational,
    #[serde(serialize_with = "ratio_string")]
    pub rhs: BigRational,
    #[serde(serialize_with = "ratio_string")]
    pub factored: BigRational,
    pub holds: bool,
    pub equality: bool,
}

/// 2^e for a possibly negative exponent.
pub(crate) fn pow2(e: i64) -> BigRational {
    let p = BigRational::from_integer(BigInt::one() << e.unsigned_abs());
    if e >= 0 {
        p
    } else {
        p.recip()
    }
}

pub fn fact1_check(k: usize) -> Result<Fact1Report, LemmaError> {
    if k < 2 {
        return Err(LemmaError::KTooSmall(k));
    }
    let k = k as i64;
    let one = BigRational::one();
    let q = &one - pow2(-k);
    let lhs = pow2(-k) * (&one + pow2(-k - 1)) / (&q * &q);
    let rhs = pow2(-k + 1);
    let factored = (pow2(-k + 2) - &one) * (pow2(-k - 1) - &one);
    let holds = lhs <= rhs;
    if holds != (factored >= BigRational::zero()) {
        return Err(LemmaError::CheckFailed(format!(
            "k = {k}: the two forms disagree"
        )));
    }
    Ok(Fact1Report {
        k: k as usize,
        equality: lhs == rhs,
        lhs,
        rhs,
        factored,
        holds,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn r(n: i64, d: i64) -> BigRational {
        BigRational::new(n.into(), d.into())
    }

    #[test]
    fn k2_is_tight() {
        let rep = fact1_check(2).unwrap();
        assert!(rep.holds && rep.equality);
        assert_eq!(rep.lhs, r(1, 2));
        assert!(rep.factored.is_zero());
    }

    #[test]
    fn k3_is_strict() {
        let rep = fact1_check(3).unwrap();
        assert_eq!(rep.lhs, r(17, 98));
        assert_eq!(rep.rhs, r(1, 4));
        assert!(rep.holds && !rep.equality);
    }

    #[test]
    fn large_k_and_range() {
        for k in 2..=64 {
            let rep = fact1_check(k).unwrap();
            assert!(rep.holds);
            assert_eq!(rep.equality, k == 2);
        }
        assert_eq!(fact1_check(1), Err(LemmaError::KTooSmall(1)));
    }
}
