//! Sparse bivariate polynomials in `q` and `t` with exact integer
//! coefficients, with the exact-division support the Tesler weight sums need.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num::{pow, BigInt, One, Signed, Zero};
use serde_json::{json, Value};

use crate::core::json_bigint;
use crate::error::{Error, Result};

/// Map from `(q-exponent, t-exponent)` to a nonzero coefficient.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct QTPoly {
    terms: BTreeMap<(u32, u32), BigInt>,
}

impl QTPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::constant(BigInt::one())
    }

    pub fn constant(c: BigInt) -> Self {
        Self::term(0, 0, c)
    }

    pub fn term(q: u32, t: u32, c: BigInt) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert((q, t), c);
        }
        Self { terms }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> &BTreeMap<(u32, u32), BigInt> {
        &self.terms
    }

    pub fn add_term(&mut self, q: u32, t: u32, c: &BigInt) {
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry((q, t)).or_insert_with(BigInt::zero);
        *entry += c;
        if entry.is_zero() {
            self.terms.remove(&(q, t));
        }
    }

    pub fn eval(&self, q: &BigInt, t: &BigInt) -> BigInt {
        let mut total = BigInt::zero();
        for (&(qe, te), c) in &self.terms {
            total += c * pow(q.clone(), qe as usize) * pow(t.clone(), te as usize);
        }
        total
    }

    /// The polynomial with `q` and `t` exchanged.
    pub fn swap_qt(&self) -> QTPoly {
        let mut out = QTPoly::zero();
        for (&(qe, te), c) in &self.terms {
            out.add_term(te, qe, c);
        }
        out
    }

    pub fn is_symmetric(&self) -> bool {
        *self == self.swap_qt()
    }

    /// The terms free of `t` (the specialization `t = 0`).
    pub fn at_t_zero(&self) -> QTPoly {
        let mut out = QTPoly::zero();
        for (&(qe, te), c) in &self.terms {
            if te == 0 {
                out.add_term(qe, 0, c);
            }
        }
        out
    }

    /// Exact division. Eliminates the lexicographically-leading term each
    /// step; any step where the leading monomial or coefficient fails to
    /// divide means `divisor` does not divide `self`.
    pub fn exact_div(&self, divisor: &QTPoly) -> Result<QTPoly> {
        let Some((&dlead, dcoeff)) = divisor.terms.last_key_value() else {
            return Err(Error::OutOfDomain("division by the zero polynomial".into()));
        };
        let mut remainder = self.clone();
        let mut quotient = QTPoly::zero();
        while let Some((&rlead, rcoeff)) = remainder.terms.last_key_value() {
            if rlead.0 < dlead.0 || rlead.1 < dlead.1 {
                return Err(Error::NonExactDivision);
            }
            let (c, rem) = num::Integer::div_rem(rcoeff, dcoeff);
            if !rem.is_zero() {
                return Err(Error::NonExactDivision);
            }
            let mono = (rlead.0 - dlead.0, rlead.1 - dlead.1);
            quotient.add_term(mono.0, mono.1, &c);
            for (&(qe, te), dc) in &divisor.terms {
                remainder.add_term(qe + mono.0, te + mono.1, &(-dc * &c));
            }
        }
        Ok(quotient)
    }

    /// `[{"q": int, "t": int, "c": "decimal"}]` sorted by `(q, t)`.
    pub fn to_json(&self) -> Value {
        let items: Vec<Value> = self
            .terms
            .iter()
            .map(|(&(q, t), c)| json!({"q": q, "t": t, "c": c.to_string()}))
            .collect();
        Value::Array(items)
    }

    pub fn from_json(v: &Value) -> Result<QTPoly> {
        let items = v
            .as_array()
            .ok_or_else(|| Error::BadSerialization("expected an array of terms".into()))?;
        let mut out = QTPoly::zero();
        for item in items {
            let q = crate::core::json_usize(item, "q")? as u32;
            let t = crate::core::json_usize(item, "t")? as u32;
            let c = match item.get("c") {
                Some(Value::String(s)) => s
                    .parse::<BigInt>()
                    .map_err(|_| Error::BadSerialization(format!("bad coefficient {s:?}")))?,
                Some(other) => json_bigint(other)?,
                None => return Err(Error::BadSerialization("missing field \"c\"".into())),
            };
            out.add_term(q, t, &c);
        }
        Ok(out)
    }

    fn fmt_term(qe: u32, te: u32, c: &BigInt) -> String {
        let mut parts = Vec::new();
        let abs = c.abs();
        if !abs.is_one() || (qe == 0 && te == 0) {
            parts.push(abs.to_string());
        }
        for (name, e) in [("q", qe), ("t", te)] {
            match e {
                0 => {}
                1 => parts.push(name.to_string()),
                _ => parts.push(format!("{name}^{e}")),
            }
        }
        parts.join("*")
    }
}

/// `-M = -(1-q)(1-t) = -1 + q + t - qt`.
pub fn neg_m() -> QTPoly {
    let mut p = QTPoly::zero();
    p.add_term(0, 0, &BigInt::from(-1));
    p.add_term(1, 0, &BigInt::one());
    p.add_term(0, 1, &BigInt::one());
    p.add_term(1, 1, &BigInt::from(-1));
    p
}

/// `[b]_{q,t} = (q^b − t^b)/(q − t) = Σ_{i=0}^{b−1} q^i t^{b−1−i}`, `b ≥ 1`.
pub fn qt_bracket(b: u32) -> Result<QTPoly> {
    if b == 0 {
        return Err(Error::OutOfDomain("[b]_{q,t} needs b >= 1".into()));
    }
    let mut p = QTPoly::zero();
    for i in 0..b {
        p.add_term(i, b - 1 - i, &BigInt::one());
    }
    Ok(p)
}

impl Add for &QTPoly {
    type Output = QTPoly;
    fn add(self, rhs: &QTPoly) -> QTPoly {
        let mut out = self.clone();
        for (&(q, t), c) in &rhs.terms {
            out.add_term(q, t, c);
        }
        out
    }
}

impl Sub for &QTPoly {
    type Output = QTPoly;
    fn sub(self, rhs: &QTPoly) -> QTPoly {
        let mut out = self.clone();
        for (&(q, t), c) in &rhs.terms {
            out.add_term(q, t, &-c);
        }
        out
    }
}

impl Mul for &QTPoly {
    type Output = QTPoly;
    fn mul(self, rhs: &QTPoly) -> QTPoly {
        let mut out = QTPoly::zero();
        for (&(q1, t1), c1) in &self.terms {
            for (&(q2, t2), c2) in &rhs.terms {
                out.add_term(q1 + q2, t1 + t2, &(c1 * c2));
            }
        }
        out
    }
}

impl Neg for &QTPoly {
    type Output = QTPoly;
    fn neg(self) -> QTPoly {
        let mut out = QTPoly::zero();
        for (&(q, t), c) in &self.terms {
            out.add_term(q, t, &-c);
        }
        out
    }
}

impl fmt::Display for QTPoly {
    /// Terms by total degree, then by `t`-exponent: `1 + q + t`,
    /// `q^2 + q*t + t^2`, …
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let mut ordered: Vec<(&(u32, u32), &BigInt)> = self.terms.iter().collect();
        ordered.sort_by_key(|(&(q, t), _)| (q + t, t));
        for (i, (&(q, t), c)) in ordered.into_iter().enumerate() {
            if i == 0 {
                if c.is_negative() {
                    write!(f, "-")?;
                }
            } else if c.is_negative() {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            write!(f, "{}", Self::fmt_term(q, t, c))?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn bracket_examples() {
        assert_eq!(qt_bracket(1).unwrap(), QTPoly::one());
        assert_eq!(qt_bracket(2).unwrap().to_string(), "q + t");
        assert_eq!(qt_bracket(3).unwrap().to_string(), "q^2 + q*t + t^2");
        assert!(qt_bracket(0).is_err());
    }

    #[test]
    fn bracket_is_quotient_of_power_difference() {
        // (q − t) · [b] = q^b − t^b
        let q_minus_t = &QTPoly::term(1, 0, BigInt::one()) - &QTPoly::term(0, 1, BigInt::one());
        for b in 1..=6u32 {
            let lhs = &q_minus_t * &qt_bracket(b).unwrap();
            let rhs = &QTPoly::term(b, 0, BigInt::one()) - &QTPoly::term(0, b, BigInt::one());
            assert_eq!(lhs, rhs);
        }
    }

    #[test]
    fn exact_division_round_trip() {
        let m = neg_m();
        let b3 = qt_bracket(3).unwrap();
        let product = &(&m * &b3) * &m;
        let once = product.exact_div(&m).unwrap();
        let twice = once.exact_div(&m).unwrap();
        assert_eq!(twice, b3);
        assert!(matches!(
            b3.exact_div(&m),
            Err(Error::NonExactDivision)
        ));
        assert!(QTPoly::zero().exact_div(&m).unwrap().is_zero());
    }

    #[test]
    fn eval_and_symmetry() {
        let p = &qt_bracket(3).unwrap() + &qt_bracket(2).unwrap();
        assert!(p.is_symmetric());
        assert_eq!(p.eval(&BigInt::from(1), &BigInt::from(1)), BigInt::from(5));
        assert_eq!(p.eval(&BigInt::from(2), &BigInt::from(0)), BigInt::from(6));
        let asym = QTPoly::term(2, 0, BigInt::one());
        assert!(!asym.is_symmetric());
    }

    #[test]
    fn t_zero_specialization() {
        let p = &qt_bracket(3).unwrap() + &QTPoly::term(0, 5, BigInt::from(7));
        assert_eq!(p.at_t_zero(), QTPoly::term(2, 0, BigInt::one()));
    }

    #[test]
    fn json_round_trip() {
        let p = &neg_m() * &qt_bracket(4).unwrap();
        let v = p.to_json();
        assert_eq!(QTPoly::from_json(&v).unwrap(), p);
        let empty = QTPoly::zero();
        assert_eq!(QTPoly::from_json(&empty.to_json()).unwrap(), empty);
    }

    #[test]
    fn display_signs() {
        let p = neg_m();
        assert_eq!(p.to_string(), "-1 + q + t - q*t");
    }
}
