//! Exact arithmetic in `Z[x_1, ..., x_k]` and determinants of polynomial matrices.
//!
//! Polynomials are stored sparsely as a map from exponent vectors to nonzero
//! big-integer coefficients. The map is a `BTreeMap`, so two polynomials over the
//! same variable list are equal exactly when their term maps are equal.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::Arc;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// Exponent vector, one entry per declared variable.
pub type Exponents = Vec<u32>;

/// A sparse multivariate polynomial with arbitrary-precision integer coefficients.
#[derive(Clone)]
pub struct WeightPoly {
    vars: Arc<[String]>,
    terms: BTreeMap<Exponents, BigInt>,
}

impl WeightPoly {
    pub fn zero(vars: &Arc<[String]>) -> Self {
        Self {
            vars: vars.clone(),
            terms: BTreeMap::new(),
        }
    }

    pub fn one(vars: &Arc<[String]>) -> Self {
        Self::constant(vars, BigInt::one())
    }

    pub fn constant(vars: &Arc<[String]>, c: impl Into<BigInt>) -> Self {
        Self::monomial(vars, c, vec![0; vars.len()])
    }

    /// `c * prod(x_i^e_i)`.
    ///
    /// Panics if `exps` does not have one entry per variable.
    pub fn monomial(vars: &Arc<[String]>, c: impl Into<BigInt>, exps: Exponents) -> Self {
        assert_eq!(exps.len(), vars.len(), "exponent vector length mismatch");
        let c = c.into();
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(exps, c);
        }
        Self {
            vars: vars.clone(),
            terms,
        }
    }

    /// The polynomial consisting of the single variable `name`.
    pub fn var(vars: &Arc<[String]>, name: &str) -> Result<Self> {
        let idx = vars
            .iter()
            .position(|v| v == name)
            .ok_or_else(|| Error::UnknownVariable(name.to_string()))?;
        let mut exps = vec![0; vars.len()];
        exps[idx] = 1;
        Ok(Self::monomial(vars, 1, exps))
    }

    /// Builds a polynomial from `(exponents, coefficient)` pairs, merging like terms.
    pub fn from_terms<I>(vars: &Arc<[String]>, terms: I) -> Self
    where
        I: IntoIterator<Item = (Exponents, BigInt)>,
    {
        let mut p = Self::zero(vars);
        for (e, c) in terms {
            assert_eq!(e.len(), vars.len(), "exponent vector length mismatch");
            p.add_term(e, c);
        }
        p
    }

    pub fn vars(&self) -> &Arc<[String]> {
        &self.vars
    }

    /// Terms in ascending lexicographic order of exponent vectors.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Exponents, &BigInt)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms.iter().all(|(e, c)| c.is_one() && e.iter().all(|&k| k == 0))
    }

    /// Coefficient of the given monomial (zero if absent).
    pub fn coefficient(&self, exps: &[u32]) -> BigInt {
        self.terms.get(exps).cloned().unwrap_or_default()
    }

    /// Returns the constant value if the polynomial has no non-constant terms.
    pub fn as_constant(&self) -> Option<BigInt> {
        match self.terms.len() {
            0 => Some(BigInt::zero()),
            1 => {
                let (e, c) = self.terms.iter().next()?;
                e.iter().all(|&k| k == 0).then(|| c.clone())
            }
            _ => None,
        }
    }

    pub fn all_coefficients_nonnegative(&self) -> bool {
        self.terms.values().all(|c| !c.is_negative())
    }

    pub fn all_coefficients_nonpositive(&self) -> bool {
        self.terms.values().all(|c| !c.is_positive())
    }

    fn add_term(&mut self, e: Exponents, c: BigInt) {
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(e) {
            Entry::Vacant(v) => {
                v.insert(c);
            }
            Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    fn check_vars(&self, other: &Self) -> Result<()> {
        if Arc::ptr_eq(&self.vars, &other.vars) || self.vars == other.vars {
            Ok(())
        } else {
            Err(Error::VariableMismatch {
                left: self.vars.join(","),
                right: other.vars.join(","),
            })
        }
    }

    pub fn try_add(&self, other: &Self) -> Result<Self> {
        self.check_vars(other)?;
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(e.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn try_sub(&self, other: &Self) -> Result<Self> {
        self.check_vars(other)?;
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(e.clone(), -c);
        }
        Ok(out)
    }

    pub fn try_mul(&self, other: &Self) -> Result<Self> {
        self.check_vars(other)?;
        let mut out = Self::zero(&self.vars);
        for (ea, ca) in &self.terms {
            for (eb, cb) in &other.terms {
                let e = ea.iter().zip(eb).map(|(a, b)| a + b).collect();
                out.add_term(e, ca * cb);
            }
        }
        Ok(out)
    }

    /// In-place `self += other`, avoiding a clone of `self`.
    pub fn add_assign_ref(&mut self, other: &Self) {
        self.check_vars(other).expect("polynomial variable mismatch");
        for (e, c) in &other.terms {
            self.add_term(e.clone(), c.clone());
        }
    }

    pub fn scale(&self, k: &BigInt) -> Self {
        let mut out = Self::zero(&self.vars);
        if k.is_zero() {
            return out;
        }
        out.terms = self.terms.iter().map(|(e, c)| (e.clone(), c * k)).collect();
        out
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut acc = Self::one(&self.vars);
        for _ in 0..k {
            acc = &acc * self;
        }
        acc
    }

    /// Exact integer value under a full assignment of the variables.
    pub fn eval(&self, assignment: &HashMap<String, BigInt>) -> Result<BigInt> {
        let values = self
            .vars
            .iter()
            .map(|v| {
                assignment
                    .get(v)
                    .cloned()
                    .ok_or_else(|| Error::MissingVariable(v.clone()))
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(self.eval_slice(&values))
    }

    /// Evaluates with one value per declared variable, in order.
    pub fn eval_slice(&self, values: &[BigInt]) -> BigInt {
        assert_eq!(values.len(), self.vars.len());
        let mut total = BigInt::zero();
        for (e, c) in &self.terms {
            let mut t = c.clone();
            for (v, &k) in values.iter().zip(e) {
                t *= num_traits::pow(v.clone(), k as usize);
            }
            total += t;
        }
        total
    }

    /// Value with every variable set to one: the sum of the coefficients.
    pub fn eval_ones(&self) -> BigInt {
        self.terms.values().sum()
    }

    /// Substitutes an integer for one variable, keeping the variable list.
    pub fn specialize(&self, name: &str, value: &BigInt) -> Result<Self> {
        let idx = self
            .vars
            .iter()
            .position(|v| v == name)
            .ok_or_else(|| Error::UnknownVariable(name.to_string()))?;
        let mut out = Self::zero(&self.vars);
        for (e, c) in &self.terms {
            let mut e2 = e.clone();
            let k = std::mem::replace(&mut e2[idx], 0);
            out.add_term(e2, c * num_traits::pow(value.clone(), k as usize));
        }
        Ok(out)
    }

    fn leading(&self) -> Option<(&Exponents, &BigInt)> {
        self.terms.iter().next_back()
    }

    /// Exact division. Fails with an internal error if `divisor` does not divide `self`.
    pub fn div_exact(&self, divisor: &Self) -> Result<Self> {
        self.check_vars(divisor)?;
        let (de, dc) = divisor
            .leading()
            .ok_or_else(|| Error::Internal("division by the zero polynomial".into()))?;
        let mut rem = self.clone();
        let mut quot = Self::zero(&self.vars);
        while let Some((re, rc)) = rem.leading() {
            if re.iter().zip(de).any(|(r, d)| r < d) {
                return Err(Error::Internal(format!("inexact division: ({self}) / ({divisor})")));
            }
            let (q, r) = rc.div_rem(dc);
            if !r.is_zero() {
                return Err(Error::Internal(format!("inexact division: ({self}) / ({divisor})")));
            }
            let qe: Exponents = re.iter().zip(de).map(|(r, d)| r - d).collect();
            let t = Self::monomial(&self.vars, q, qe);
            rem = &rem - &(&t * divisor);
            quot.add_assign_ref(&t);
        }
        Ok(quot)
    }

    /// Parses the textual syntax `3*x^2*y - x + 7` against a declared variable list.
    pub fn parse(vars: &Arc<[String]>, text: &str) -> Result<Self> {
        Parser::new(vars, text).parse()
    }
}

impl PartialEq for WeightPoly {
    fn eq(&self, other: &Self) -> bool {
        self.vars == other.vars && self.terms == other.terms
    }
}

impl Eq for WeightPoly {}

impl fmt::Debug for WeightPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "WeightPoly[{}]({})", self.vars.join(","), self)
    }
}

/// Canonical printing: terms in descending lexicographic exponent order, unit
/// coefficients elided except on the constant term.
impl fmt::Display for WeightPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (k, (e, c)) in self.terms.iter().rev().enumerate() {
            let neg = c.is_negative();
            match (k, neg) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            let abs = c.abs();
            let factors: Vec<String> = self
                .vars
                .iter()
                .zip(e)
                .filter(|(_, &k)| k > 0)
                .map(|(v, &k)| if k == 1 { v.clone() } else { format!("{v}^{k}") })
                .collect();
            if factors.is_empty() {
                write!(f, "{abs}")?;
            } else if abs.is_one() {
                f.write_str(&factors.join("*"))?;
            } else {
                write!(f, "{abs}*{}", factors.join("*"))?;
            }
        }
        Ok(())
    }
}

macro_rules! forward_binop {
    ($trait:ident, $method:ident, $try:ident) => {
        impl $trait<&WeightPoly> for &WeightPoly {
            type Output = WeightPoly;
            /// Panics on a variable-list mismatch; use the `try_` form to recover.
            fn $method(self, rhs: &WeightPoly) -> WeightPoly {
                self.$try(rhs).expect("polynomial variable mismatch")
            }
        }
        impl $trait<WeightPoly> for WeightPoly {
            type Output = WeightPoly;
            fn $method(self, rhs: WeightPoly) -> WeightPoly {
                (&self).$method(&rhs)
            }
        }
    };
}

forward_binop!(Add, add, try_add);
forward_binop!(Sub, sub, try_sub);
forward_binop!(Mul, mul, try_mul);

impl Neg for &WeightPoly {
    type Output = WeightPoly;
    fn neg(self) -> WeightPoly {
        WeightPoly {
            vars: self.vars.clone(),
            terms: self.terms.iter().map(|(e, c)| (e.clone(), -c)).collect(),
        }
    }
}

impl Neg for WeightPoly {
    type Output = WeightPoly;
    fn neg(self) -> WeightPoly {
        -&self
    }
}

/// Builds a shared variable list.
pub fn variables<S: AsRef<str>>(names: &[S]) -> Arc<[String]> {
    names.iter().map(|s| s.as_ref().to_string()).collect()
}

struct Parser<'a> {
    vars: &'a Arc<[String]>,
    chars: Vec<char>,
    pos: usize,
}

impl<'a> Parser<'a> {
    fn new(vars: &'a Arc<[String]>, text: &str) -> Self {
        Self {
            vars,
            chars: text.chars().collect(),
            pos: 0,
        }
    }

    fn err(&self, message: impl Into<String>) -> Error {
        Error::Parse {
            line: 1,
            column: self.pos + 1,
            message: message.into(),
        }
    }

    fn skip_ws(&mut self) {
        while self.pos < self.chars.len() && self.chars[self.pos].is_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<char> {
        self.skip_ws();
        self.chars.get(self.pos).copied()
    }

    fn parse(mut self) -> Result<WeightPoly> {
        let mut out = WeightPoly::zero(self.vars);
        let mut first = true;
        loop {
            let mut sign = 1;
            match self.peek() {
                None if first => return Err(self.err("empty polynomial")),
                None => break,
                Some('+') if !first => self.pos += 1,
                Some('-') => {
                    sign = -1;
                    self.pos += 1;
                }
                Some(c) if !first => return Err(self.err(format!("expected `+` or `-`, found `{c}`"))),
                _ => {}
            }
            first = false;
            let (e, c) = self.term()?;
            out.add_term(e, c * sign);
        }
        Ok(out)
    }

    fn number(&mut self) -> Option<BigInt> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.chars.len() && self.chars[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return None;
        }
        let s: String = self.chars[start..self.pos].iter().collect();
        s.parse().ok()
    }

    fn term(&mut self) -> Result<(Exponents, BigInt)> {
        let mut exps = vec![0u32; self.vars.len()];
        let mut coef = BigInt::one();
        let mut expect_factor = match self.number() {
            Some(c) => {
                coef = c;
                false
            }
            None => true,
        };
        loop {
            if expect_factor {
                self.factor(&mut exps)?;
            }
            if self.peek() == Some('*') {
                self.pos += 1;
                expect_factor = true;
            } else {
                break;
            }
        }
        Ok((exps, coef))
    }

    fn factor(&mut self, exps: &mut [u32]) -> Result<()> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.chars.len() && (self.chars[self.pos].is_alphanumeric() || self.chars[self.pos] == '_') {
            if self.pos == start && self.chars[self.pos].is_ascii_digit() {
                break;
            }
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.err("expected a variable name"));
        }
        let name: String = self.chars[start..self.pos].iter().collect();
        let idx = self.vars.iter().position(|v| *v == name).ok_or_else(|| {
            self.pos = start;
            self.err(format!("unknown variable `{name}`"))
        })?;
        let mut k = 1u32;
        if self.peek() == Some('^') {
            self.pos += 1;
            let n = self.number().ok_or_else(|| self.err("expected an exponent"))?;
            k = u32::try_from(n).map_err(|_| self.err("exponent out of range"))?;
        }
        exps[idx] += k;
        Ok(())
    }
}

/// Square matrix of polynomials over one shared variable list.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PolyMatrix {
    vars: Arc<[String]>,
    n: usize,
    entries: Vec<WeightPoly>,
}

impl PolyMatrix {
    pub fn from_rows(vars: &Arc<[String]>, rows: Vec<Vec<WeightPoly>>) -> Result<Self> {
        let n = rows.len();
        let mut entries = Vec::with_capacity(n * n);
        for row in rows {
            if row.len() != n {
                return Err(Error::InvalidParameters(format!(
                    "matrix is not square: row of length {} in a {n}-row matrix",
                    row.len()
                )));
            }
            for e in row {
                if e.vars() != vars {
                    return Err(Error::VariableMismatch {
                        left: vars.join(","),
                        right: e.vars().join(","),
                    });
                }
                entries.push(e);
            }
        }
        Ok(Self {
            vars: vars.clone(),
            n,
            entries,
        })
    }

    /// Integer matrix lifted to constant polynomials.
    pub fn from_integers(vars: &Arc<[String]>, rows: &[Vec<i64>]) -> Result<Self> {
        let rows = rows
            .iter()
            .map(|r| r.iter().map(|&v| WeightPoly::constant(vars, v)).collect())
            .collect();
        Self::from_rows(vars, rows)
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    pub fn vars(&self) -> &Arc<[String]> {
        &self.vars
    }

    pub fn get(&self, i: usize, j: usize) -> &WeightPoly {
        &self.entries[i * self.n + j]
    }

    pub fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.n {
            self.entries.swap(a * self.n + j, b * self.n + j);
        }
    }

    /// Exact determinant: cofactor expansion up to 8x8, fraction-free elimination above.
    pub fn det(&self) -> WeightPoly {
        if self.n <= 8 {
            self.det_cofactor()
        } else {
            self.det_bareiss()
                .expect("fraction-free elimination produced an inexact division")
        }
    }

    /// Laplace expansion along successive rows, memoised over the set of used columns.
    pub fn det_cofactor(&self) -> WeightPoly {
        let n = self.n;
        assert!(n < usize::BITS as usize, "matrix too large for cofactor expansion");
        // minors[mask] = det of rows (n - |mask|).. restricted to the columns not in mask
        let full = (1usize << n) - 1;
        let mut minors: HashMap<usize, WeightPoly> = HashMap::new();
        minors.insert(full, WeightPoly::one(&self.vars));
        // process masks by decreasing popcount so every dependency is ready
        let mut masks: Vec<usize> = (0..=full).collect();
        masks.sort_by_key(|m| std::cmp::Reverse(m.count_ones()));
        for mask in masks {
            if mask == full {
                continue;
            }
            let row = mask.count_ones() as usize;
            let mut acc = WeightPoly::zero(&self.vars);
            let mut parity = 0;
            for col in 0..n {
                if mask & (1 << col) != 0 {
                    continue;
                }
                let a = self.get(row, col);
                if !a.is_zero() {
                    if let Some(minor) = minors.get(&(mask | (1 << col))) {
                        let t = a * minor;
                        if parity % 2 == 0 {
                            acc.add_assign_ref(&t);
                        } else {
                            acc.add_assign_ref(&-t);
                        }
                    }
                }
                parity += 1;
            }
            minors.insert(mask, acc);
        }
        minors.remove(&0).unwrap_or_else(|| WeightPoly::one(&self.vars))
    }

    /// Bareiss fraction-free elimination over the polynomial ring.
    pub fn det_bareiss(&self) -> Result<WeightPoly> {
        let n = self.n;
        if n == 0 {
            return Ok(WeightPoly::one(&self.vars));
        }
        let mut m = self.clone();
        let mut negate = false;
        let mut prev = WeightPoly::one(&self.vars);
        for k in 0..n - 1 {
            if m.get(k, k).is_zero() {
                match (k + 1..n).find(|&r| !m.get(r, k).is_zero()) {
                    Some(r) => {
                        m.swap_rows(k, r);
                        negate = !negate;
                    }
                    None => return Ok(WeightPoly::zero(&self.vars)),
                }
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let num = &(m.get(i, j) * m.get(k, k)) - &(m.get(i, k) * m.get(k, j));
                    m.entries[i * n + j] = num.div_exact(&prev)?;
                }
                m.entries[i * n + k] = WeightPoly::zero(&self.vars);
            }
            prev = m.get(k, k).clone();
        }
        let d = m.get(n - 1, n - 1).clone();
        Ok(if negate { -d } else { d })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn xy() -> Arc<[String]> {
        variables(&["x", "y"])
    }

    fn p(vars: &Arc<[String]>, s: &str) -> WeightPoly {
        WeightPoly::parse(vars, s).unwrap()
    }

    #[test]
    fn add_examples() {
        let v = xy();
        assert_eq!(&p(&v, "x + y") + &p(&v, "-y"), p(&v, "x"));
        assert_eq!(&WeightPoly::zero(&v) + &p(&v, "3*x^2 - 1"), p(&v, "3*x^2 - 1"));
        assert_eq!(&p(&v, "2*x*y") + &p(&v, "3*x*y"), p(&v, "5*x*y"));
    }

    #[test]
    fn mul_examples() {
        let v = xy();
        assert_eq!(&p(&v, "x") * &p(&v, "y^3"), p(&v, "x*y^3"));
        let q = p(&v, "7*x*y - 2");
        assert_eq!(&q * &WeightPoly::one(&v), q);
        assert_eq!(p(&v, "x + y").pow(2), p(&v, "x^2 + 2*x*y + y^2"));
    }

    #[test]
    fn eval_examples() {
        let v = xy();
        let ones: HashMap<String, BigInt> = [("x".to_string(), 1.into()), ("y".to_string(), 1.into())].into();
        assert_eq!(p(&v, "x*y^3").eval(&ones).unwrap(), 1.into());
        assert_eq!(p(&v, "40*x^5*y^5").eval(&ones).unwrap(), 40.into());
        let partial: HashMap<String, BigInt> = [("x".to_string(), 1.into())].into();
        assert_eq!(p(&v, "x*y").eval(&partial), Err(Error::MissingVariable("y".into())));
    }

    #[test]
    fn mismatched_variables_are_rejected() {
        let a = p(&xy(), "x");
        let b = WeightPoly::one(&variables(&["x", "y", "z"]));
        assert!(matches!(a.try_add(&b), Err(Error::VariableMismatch { .. })));
        assert!(matches!(a.try_mul(&b), Err(Error::VariableMismatch { .. })));
    }

    #[test]
    fn canonical_printing() {
        let v = xy();
        assert_eq!(p(&v, "x + 13*y^4*x^2").to_string(), "13*x^2*y^4 + x");
        assert_eq!(p(&v, "1").to_string(), "1");
        assert_eq!(p(&v, "-3*x^4*y^2").to_string(), "-3*x^4*y^2");
        assert_eq!(p(&v, "y - x - 1").to_string(), "-x + y - 1");
        assert_eq!(p(&v, "x - x").to_string(), "0");
        assert_eq!(p(&v, "2 * x * x").to_string(), "2*x^2");
    }

    #[test]
    fn parse_errors_carry_columns() {
        let v = xy();
        match WeightPoly::parse(&v, "x + w") {
            Err(Error::Parse { column, .. }) => assert_eq!(column, 5),
            other => panic!("unexpected {other:?}"),
        }
        assert!(WeightPoly::parse(&v, "").is_err());
        assert!(WeightPoly::parse(&v, "x y").is_err());
        assert!(WeightPoly::parse(&v, "x^").is_err());
    }

    #[test]
    fn worked_example_determinant() {
        let v = xy();
        let m = PolyMatrix::from_rows(
            &v,
            vec![
                vec![p(&v, "-4*x*y^3"), p(&v, "13*x^2*y^4")],
                vec![p(&v, "4*x^3*y"), p(&v, "-3*x^4*y^2")],
            ],
        )
        .unwrap();
        assert_eq!(m.det(), p(&v, "-40*x^5*y^5"));
        assert_eq!(m.det_bareiss().unwrap(), p(&v, "-40*x^5*y^5"));
    }

    #[test]
    fn identity_and_small_determinants() {
        let v = xy();
        let id = PolyMatrix::from_integers(&v, &[vec![1, 0, 0], vec![0, 1, 0], vec![0, 0, 1]]).unwrap();
        assert!(id.det().is_one());
        // central Delannoy numbers 1, 3, 13 in a Hankel-like layout
        let d = PolyMatrix::from_integers(&v, &[vec![1, 3], vec![3, 13]]).unwrap();
        assert_eq!(d.det(), WeightPoly::constant(&v, 4));
        let empty = PolyMatrix::from_rows(&v, vec![]).unwrap();
        assert!(empty.det().is_one());
        assert!(empty.det_bareiss().unwrap().is_one());
    }

    #[test]
    fn bareiss_handles_zero_pivots() {
        let v = xy();
        let m = PolyMatrix::from_integers(&v, &[vec![0, 2, 1], vec![1, 0, 0], vec![0, 1, 3]]).unwrap();
        assert_eq!(m.det_cofactor(), WeightPoly::constant(&v, -5));
        assert_eq!(m.det_bareiss().unwrap(), WeightPoly::constant(&v, -5));
        let singular = PolyMatrix::from_integers(&v, &[vec![0, 1], vec![0, 2]]).unwrap();
        assert!(singular.det_bareiss().unwrap().is_zero());
    }

    #[test]
    fn exact_division() {
        let v = xy();
        let a = p(&v, "x^2 - y^2");
        assert_eq!(a.div_exact(&p(&v, "x - y")).unwrap(), p(&v, "x + y"));
        assert!(matches!(a.div_exact(&p(&v, "x + 2")), Err(Error::Internal(_))));
        assert!(matches!(p(&v, "3*x").div_exact(&p(&v, "2")), Err(Error::Internal(_))));
    }

    #[test]
    fn specialize_substitutes() {
        let v = variables(&["x", "y", "z"]);
        let q = WeightPoly::parse(&v, "z + x*y + 2*z^2").unwrap();
        assert_eq!(
            q.specialize("z", &BigInt::zero()).unwrap(),
            WeightPoly::parse(&v, "x*y").unwrap()
        );
    }

    fn arb_poly() -> impl Strategy<Value = WeightPoly> {
        prop::collection::vec(((0u32..3, 0u32..3), -5i64..=5), 0..5).prop_map(|ts| {
            let v = xy();
            WeightPoly::from_terms(&v, ts.into_iter().map(|((a, b), c)| (vec![a, b], c.into())))
        })
    }

    fn arb_int_matrix(n: usize) -> impl Strategy<Value = Vec<Vec<i64>>> {
        prop::collection::vec(prop::collection::vec(-4i64..=4, n), n)
    }

    proptest! {
        #[test]
        fn ring_axioms(a in arb_poly(), b in arb_poly(), c in arb_poly()) {
            prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
            prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
            prop_assert_eq!(&a + &b, &b + &a);
            prop_assert_eq!(&a * &b, &b * &a);
            prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
            prop_assert!((&a + &(-&a)).is_zero());
            prop_assert!(a.terms().all(|(_, c)| !c.is_zero()));
        }

        #[test]
        fn print_parse_round_trip(a in arb_poly()) {
            let text = a.to_string();
            prop_assert_eq!(WeightPoly::parse(a.vars(), &text).unwrap(), a);
        }

        #[test]
        fn exact_division_inverts_multiplication(a in arb_poly(), b in arb_poly()) {
            prop_assume!(!b.is_zero());
            prop_assert_eq!((&a * &b).div_exact(&b).unwrap(), a);
        }

        #[test]
        fn cofactor_matches_bareiss(rows in (1usize..=6).prop_flat_map(arb_int_matrix)) {
            let m = PolyMatrix::from_integers(&xy(), &rows).unwrap();
            prop_assert_eq!(m.det_cofactor(), m.det_bareiss().unwrap());
        }

        #[test]
        fn row_swap_negates(entries in prop::collection::vec(arb_poly(), 9), r1 in 0usize..3, r2 in 0usize..3) {
            prop_assume!(r1 != r2);
            let v = xy();
            let rows: Vec<Vec<WeightPoly>> = entries.chunks(3).map(|c| c.to_vec()).collect();
            let m = PolyMatrix::from_rows(&v, rows).unwrap();
            let mut s = m.clone();
            s.swap_rows(r1, r2);
            prop_assert_eq!(s.det(), -m.det());
            prop_assert_eq!(m.det_bareiss().unwrap(), m.det());
        }

        #[test]
        fn det_is_linear_in_first_row(
            entries in prop::collection::vec(arb_poly(), 9),
            extra in prop::collection::vec(arb_poly(), 3),
        ) {
            let v = xy();
            let rows: Vec<Vec<WeightPoly>> = entries.chunks(3).map(|c| c.to_vec()).collect();
            let mut other = rows.clone();
            other[0] = extra.clone();
            let mut summed = rows.clone();
            summed[0] = rows[0].iter().zip(&extra).map(|(a, b)| a + b).collect();
            let d = |r: Vec<Vec<WeightPoly>>| PolyMatrix::from_rows(&v, r).unwrap().det();
            prop_assert_eq!(d(summed), &d(rows) + &d(other));
        }
    }
}
