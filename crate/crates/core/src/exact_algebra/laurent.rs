use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};
use serde::ser::SerializeMap;
use serde::{Serialize, Serializer};
use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

/// Element of Z[t, t^-1], stored as exponent -> coefficient with no zero
/// coefficients, so structural equality is ring equality.
#[derive(Clone, PartialEq, Eq, Default)]
pub struct LaurentPoly {
    coefficients: BTreeMap<i64, BigInt>,
}

impl LaurentPoly {
    pub fn zero() -> Self {
        LaurentPoly::default()
    }

    pub fn one() -> Self {
        LaurentPoly::monomial(0, BigInt::one())
    }

    pub fn t() -> Self {
        LaurentPoly::monomial(1, BigInt::one())
    }

    pub fn constant(c: impl Into<BigInt>) -> Self {
        LaurentPoly::monomial(0, c.into())
    }

    pub fn monomial(exp: i64, coeff: impl Into<BigInt>) -> Self {
        let mut p = LaurentPoly::default();
        p.add_term(exp, coeff.into());
        p
    }

    pub fn from_terms(terms: &[(i64, i64)]) -> Self {
        let mut p = LaurentPoly::default();
        for &(e, c) in terms {
            p.add_term(e, BigInt::from(c));
        }
        p
    }

    fn add_term(&mut self, exp: i64, coeff: BigInt) {
        if coeff.is_zero() {
            return;
        }
        let entry = self.coefficients.entry(exp).or_insert_with(BigInt::zero);
        *entry += coeff;
        if entry.is_zero() {
            self.coefficients.remove(&exp);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coefficients.is_empty()
    }

    pub fn coefficient(&self, exp: i64) -> BigInt {
        self.coefficients.get(&exp).cloned().unwrap_or_else(BigInt::zero)
    }

    pub fn terms(&self) -> impl Iterator<Item = (&i64, &BigInt)> {
        self.coefficients.iter()
    }

    pub fn max_exponent(&self) -> Option<i64> {
        self.coefficients.keys().next_back().copied()
    }

    pub fn add(&self, other: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        for (e, c) in &other.coefficients {
            out.add_term(*e, c.clone());
        }
        out
    }

    pub fn sub(&self, other: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        for (e, c) in &other.coefficients {
            out.add_term(*e, -c.clone());
        }
        out
    }

    pub fn neg(&self) -> LaurentPoly {
        LaurentPoly::zero().sub(self)
    }

    pub fn mul(&self, other: &LaurentPoly) -> LaurentPoly {
        let mut out = LaurentPoly::default();
        for (e1, c1) in &self.coefficients {
            for (e2, c2) in &other.coefficients {
                out.add_term(e1 + e2, c1 * c2);
            }
        }
        out
    }

    /// Value at t = 1, the sum of the coefficients.
    pub fn eval_at_one(&self) -> BigInt {
        self.coefficients.values().sum()
    }

    /// Value at t = -1.
    pub fn eval_at_minus_one(&self) -> BigInt {
        let mut acc = BigInt::zero();
        for (e, c) in &self.coefficients {
            if e.rem_euclid(2) == 0 {
                acc += c;
            } else {
                acc -= c;
            }
        }
        acc
    }
}

impl fmt::Debug for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (e, c) in &self.coefficients {
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            match e {
                0 => write!(f, "{c}")?,
                1 => write!(f, "{c}*t")?,
                _ => write!(f, "{c}*t^{e}")?,
            }
        }
        Ok(())
    }
}

impl Serialize for LaurentPoly {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let mut map = serializer.serialize_map(Some(self.coefficients.len()))?;
        for (e, c) in &self.coefficients {
            map.serialize_entry(&e.to_string(), &c.to_string())?;
        }
        map.end()
    }
}

/// Coefficient ring for the Burau module: the full Laurent ring, the quotient
/// t^k = 1, the compact quotient which additionally kills 1 + t + ... + t^(k-1),
/// or the integer specialization t = -1.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum QuotientSpec {
    Generic,
    UnitRoot(u32),
    Compact(u32),
    MinusOne,
}

#[derive(Debug, thiserror::Error, PartialEq, Eq)]
#[error("unrecognized coefficient spec {0:?}; expected generic, t=-1, unit:k, or compact:k with k >= 2")]
pub struct BadQuotientSpec(pub String);

impl QuotientSpec {
    pub fn unit_root(k: u32) -> Result<Self, BadQuotientSpec> {
        if k < 2 {
            return Err(BadQuotientSpec(format!("unit:{k}")));
        }
        Ok(QuotientSpec::UnitRoot(k))
    }

    pub fn compact(k: u32) -> Result<Self, BadQuotientSpec> {
        if k < 2 {
            return Err(BadQuotientSpec(format!("compact:{k}")));
        }
        Ok(QuotientSpec::Compact(k))
    }

    pub fn label(&self) -> String {
        match self {
            QuotientSpec::Generic => "generic".into(),
            QuotientSpec::UnitRoot(k) => format!("unit:{k}"),
            QuotientSpec::Compact(k) => format!("compact:{k}"),
            QuotientSpec::MinusOne => "t=-1".into(),
        }
    }
}

impl FromStr for QuotientSpec {
    type Err = BadQuotientSpec;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "generic" => return Ok(QuotientSpec::Generic),
            "t=-1" => return Ok(QuotientSpec::MinusOne),
            _ => {}
        }
        if let Some(k) = s.strip_prefix("unit:") {
            if let Ok(k) = k.parse::<u32>() {
                return QuotientSpec::unit_root(k);
            }
        }
        if let Some(k) = s.strip_prefix("compact:") {
            if let Ok(k) = k.parse::<u32>() {
                return QuotientSpec::compact(k);
            }
        }
        Err(BadQuotientSpec(s.to_string()))
    }
}

/// Canonical residue of `p` in the coefficient ring named by `spec`.
///
/// unit_root(k) folds exponents mod k; compact(k) additionally rewrites
/// t^(k-1) as -(1 + t + ... + t^(k-2)), leaving exponents in 0..k-1;
/// t = -1 evaluates to a constant.
pub fn laurent_specialize(p: &LaurentPoly, spec: QuotientSpec) -> LaurentPoly {
    match spec {
        QuotientSpec::Generic => p.clone(),
        QuotientSpec::UnitRoot(k) => fold_mod(p, k),
        QuotientSpec::Compact(k) => {
            let folded = fold_mod(p, k);
            let top = folded.coefficient(i64::from(k) - 1);
            if top.is_zero() {
                return folded;
            }
            let mut out = folded;
            out.add_term(i64::from(k) - 1, -top.clone());
            for e in 0..i64::from(k) - 1 {
                out.add_term(e, -top.clone());
            }
            out
        }
        QuotientSpec::MinusOne => LaurentPoly::monomial(0, p.eval_at_minus_one()),
    }
}

fn fold_mod(p: &LaurentPoly, k: u32) -> LaurentPoly {
    let k = i64::from(k);
    let mut out = LaurentPoly::default();
    for (e, c) in p.terms() {
        out.add_term(e.mod_floor(&k), c.clone());
    }
    out
}

/// Matrix over the Laurent ring.
#[derive(Clone, PartialEq, Eq)]
pub struct LaurentMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<LaurentPoly>,
}

impl LaurentMatrix {
    pub fn zero(rows: usize, cols: usize) -> Self {
        LaurentMatrix { rows, cols, entries: vec![LaurentPoly::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = LaurentMatrix::zero(n, n);
        for i in 0..n {
            m.entries[i * n + i] = LaurentPoly::one();
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> &LaurentPoly {
        &self.entries[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, p: LaurentPoly) {
        self.entries[r * self.cols + c] = p;
    }

    pub fn mul(&self, other: &LaurentMatrix) -> LaurentMatrix {
        assert_eq!(self.cols, other.rows);
        let mut out = LaurentMatrix::zero(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = other.get(k, j);
                    if !b.is_zero() {
                        let idx = i * out.cols + j;
                        out.entries[idx] = out.entries[idx].add(&a.mul(b));
                    }
                }
            }
        }
        out
    }

    pub fn specialize(&self, spec: QuotientSpec) -> LaurentMatrix {
        LaurentMatrix {
            rows: self.rows,
            cols: self.cols,
            entries: self.entries.iter().map(|p| laurent_specialize(p, spec)).collect(),
        }
    }

    /// Entry-wise evaluation at t = -1 as an integer matrix.
    pub fn eval_at_minus_one(&self) -> super::matrix::IntegerMatrix {
        super::matrix::IntegerMatrix::from_fn(self.rows, self.cols, |r, c| {
            self.get(r, c).eval_at_minus_one()
        })
    }

    pub fn eval_at_one(&self) -> super::matrix::IntegerMatrix {
        super::matrix::IntegerMatrix::from_fn(self.rows, self.cols, |r, c| {
            self.get(r, c).eval_at_one()
        })
    }
}

impl fmt::Debug for LaurentMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "LaurentMatrix {}x{} [", self.rows, self.cols)?;
        for r in 0..self.rows {
            let row: Vec<String> =
                (0..self.cols).map(|c| format!("{:?}", self.get(r, c))).collect();
            writeln!(f, "  [{}]", row.join(", "))?;
        }
        write!(f, "]")
    }
}

impl Serialize for LaurentMatrix {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        struct Wire<'a> {
            rows: usize,
            cols: usize,
            entries: Vec<Vec<&'a LaurentPoly>>,
        }
        let entries =
            (0..self.rows).map(|r| (0..self.cols).map(|c| self.get(r, c)).collect()).collect();
        Wire { rows: self.rows, cols: self.cols, entries }.serialize(serializer)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cube_mod_two() {
        let p = LaurentPoly::monomial(3, 1);
        assert_eq!(laurent_specialize(&p, QuotientSpec::UnitRoot(2)), LaurentPoly::t());
    }

    #[test]
    fn compact_two_kills_one_plus_t() {
        let p = LaurentPoly::from_terms(&[(0, 1), (1, 1)]);
        assert!(laurent_specialize(&p, QuotientSpec::Compact(2)).is_zero());
    }

    #[test]
    fn minus_one_substitution() {
        let p = LaurentPoly::from_terms(&[(0, 1), (1, -1)]);
        assert_eq!(laurent_specialize(&p, QuotientSpec::MinusOne), LaurentPoly::constant(2));
    }

    #[test]
    fn compact_three_range() {
        // t^2 = -1 - t in the compact quotient for k = 3
        let p = LaurentPoly::monomial(2, 1);
        let r = laurent_specialize(&p, QuotientSpec::Compact(3));
        assert_eq!(r, LaurentPoly::from_terms(&[(0, -1), (1, -1)]));
        assert!(r.max_exponent().unwrap() <= 1);
    }

    #[test]
    fn spec_parsing() {
        assert_eq!("generic".parse::<QuotientSpec>().unwrap(), QuotientSpec::Generic);
        assert_eq!("t=-1".parse::<QuotientSpec>().unwrap(), QuotientSpec::MinusOne);
        assert_eq!("unit:4".parse::<QuotientSpec>().unwrap(), QuotientSpec::UnitRoot(4));
        assert_eq!("compact:2".parse::<QuotientSpec>().unwrap(), QuotientSpec::Compact(2));
        assert!("compact:1".parse::<QuotientSpec>().is_err());
        assert!("t=1".parse::<QuotientSpec>().is_err());
        assert!("frobnicate".parse::<QuotientSpec>().is_err());
    }

    #[test]
    fn negative_exponents_fold() {
        // t^-1 = t under t^2 = 1
        let p = LaurentPoly::monomial(-1, 1);
        assert_eq!(laurent_specialize(&p, QuotientSpec::UnitRoot(2)), LaurentPoly::t());
    }
}
