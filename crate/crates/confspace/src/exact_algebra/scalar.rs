use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, MulAssign, Neg, Sub};

/// An element of the coefficient ring `Q[pi, L]`.
///
/// `pi` and `L` are formal, algebraically independent generators: `pi` houses
/// the sphere-moment constants of even-dimensional anomalies and `L` the
/// logarithm of a scale ratio. The map keys are `(a, b)` for `pi^a * L^b`;
/// zero coefficients are never stored, so structural equality is ring
/// equality.
#[derive(Clone, PartialEq, Eq, Hash, Default, PartialOrd, Ord)]
pub struct Scalar {
    terms: BTreeMap<(u32, u32), BigRational>,
}

impl Scalar {
    pub fn zero() -> Self {
        Scalar::default()
    }

    pub fn one() -> Self {
        Scalar::from_int(1)
    }

    pub fn from_int(n: i64) -> Self {
        Scalar::from_rational(BigRational::from_integer(BigInt::from(n)))
    }

    pub fn from_ratio(num: i64, den: i64) -> Self {
        assert!(den != 0, "zero denominator");
        Scalar::from_rational(BigRational::new(BigInt::from(num), BigInt::from(den)))
    }

    pub fn from_rational(q: BigRational) -> Self {
        let mut s = Scalar::default();
        if !q.is_zero() {
            s.terms.insert((0, 0), q);
        }
        s
    }

    /// The generator `pi`.
    pub fn pi() -> Self {
        Scalar::monomial(BigRational::one(), 1, 0)
    }

    /// The generator `L` (log of the scale ratio).
    pub fn lambda() -> Self {
        Scalar::monomial(BigRational::one(), 0, 1)
    }

    pub fn monomial(coeff: BigRational, pi_pow: u32, lambda_pow: u32) -> Self {
        let mut s = Scalar::default();
        if !coeff.is_zero() {
            s.terms.insert((pi_pow, lambda_pow), coeff);
        }
        s
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1
            && self
                .terms
                .get(&(0, 0))
                .map(|c| c.is_one())
                .unwrap_or(false)
    }

    /// The purely rational value, if no `pi` or `L` occurs.
    pub fn as_rational(&self) -> Option<BigRational> {
        if self.terms.is_empty() {
            return Some(BigRational::zero());
        }
        if self.terms.len() == 1 {
            if let Some(c) = self.terms.get(&(0, 0)) {
                return Some(c.clone());
            }
        }
        None
    }

    /// Iterate `((pi_pow, lambda_pow), coeff)` in canonical order.
    pub fn iter(&self) -> impl Iterator<Item = (&(u32, u32), &BigRational)> {
        self.terms.iter()
    }

    /// The coefficient of `pi^a * L^b`.
    pub fn coeff(&self, pi_pow: u32, lambda_pow: u32) -> BigRational {
        self.terms
            .get(&(pi_pow, lambda_pow))
            .cloned()
            .unwrap_or_else(BigRational::zero)
    }

    pub fn scale(&self, q: &BigRational) -> Self {
        if q.is_zero() {
            return Scalar::zero();
        }
        let mut out = self.clone();
        for c in out.terms.values_mut() {
            *c *= q;
        }
        out
    }

    fn add_term(&mut self, key: (u32, u32), coeff: BigRational) {
        if coeff.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(key) {
            Entry::Vacant(v) => {
                v.insert(coeff);
            }
            Entry::Occupied(mut o) => {
                *o.get_mut() += coeff;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    /// The leading term in map order, if any: `((a, b), coeff)`.
    pub fn leading(&self) -> Option<((u32, u32), BigRational)> {
        self.terms.iter().next().map(|(k, v)| (*k, v.clone()))
    }
}

impl Add for &Scalar {
    type Output = Scalar;
    fn add(self, rhs: &Scalar) -> Scalar {
        let mut out = self.clone();
        for (k, v) in &rhs.terms {
            out.add_term(*k, v.clone());
        }
        out
    }
}

impl Add for Scalar {
    type Output = Scalar;
    fn add(self, rhs: Scalar) -> Scalar {
        &self + &rhs
    }
}

impl AddAssign<&Scalar> for Scalar {
    fn add_assign(&mut self, rhs: &Scalar) {
        for (k, v) in &rhs.terms {
            self.add_term(*k, v.clone());
        }
    }
}

impl Sub for &Scalar {
    type Output = Scalar;
    fn sub(self, rhs: &Scalar) -> Scalar {
        self + &(-rhs)
    }
}

impl Sub for Scalar {
    type Output = Scalar;
    fn sub(self, rhs: Scalar) -> Scalar {
        &self - &rhs
    }
}

impl Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        let mut out = self.clone();
        for c in out.terms.values_mut() {
            *c = -c.clone();
        }
        out
    }
}

impl Neg for Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        -&self
    }
}

impl Mul for &Scalar {
    type Output = Scalar;
    fn mul(self, rhs: &Scalar) -> Scalar {
        let mut out = Scalar::zero();
        for ((a1, b1), c1) in &self.terms {
            for ((a2, b2), c2) in &rhs.terms {
                out.add_term((a1 + a2, b1 + b2), c1 * c2);
            }
        }
        out
    }
}

impl Mul for Scalar {
    type Output = Scalar;
    fn mul(self, rhs: Scalar) -> Scalar {
        &self * &rhs
    }
}

impl MulAssign<&Scalar> for Scalar {
    fn mul_assign(&mut self, rhs: &Scalar) {
        *self = &*self * rhs;
    }
}

fn fmt_monomial(f: &mut fmt::Formatter<'_>, key: (u32, u32), coeff: &BigRational) -> fmt::Result {
    let (a, b) = key;
    let has_sym = a > 0 || b > 0;
    if !has_sym {
        return write!(f, "{coeff}");
    }
    if coeff.is_one() {
        // bare symbols
    } else if (-coeff).is_one() {
        write!(f, "-")?;
    } else {
        write!(f, "{coeff}*")?;
    }
    let mut first = true;
    if a > 0 {
        if a == 1 {
            write!(f, "pi")?;
        } else {
            write!(f, "pi^{a}")?;
        }
        first = false;
    }
    if b > 0 {
        if !first {
            write!(f, "*")?;
        }
        if b == 1 {
            write!(f, "L")?;
        } else {
            write!(f, "L^{b}")?;
        }
    }
    Ok(())
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (k, c)) in self.terms.iter().enumerate() {
            if i == 0 {
                fmt_monomial(f, *k, c)?;
            } else if c.is_negative() {
                write!(f, " - ")?;
                fmt_monomial(f, *k, &-c.clone())?;
            } else {
                write!(f, " + ")?;
                fmt_monomial(f, *k, c)?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ring_basics() {
        let x = Scalar::from_ratio(3, 2);
        let y = Scalar::pi();
        let z = &x + &y;
        assert_eq!(z.coeff(0, 0), BigRational::new(3.into(), 2.into()));
        assert_eq!(z.coeff(1, 0), BigRational::one());
        assert!((&z - &z).is_zero());
        let w = &z * &z;
        // (3/2 + pi)^2 = 9/4 + 3 pi + pi^2
        assert_eq!(w.coeff(0, 0), BigRational::new(9.into(), 4.into()));
        assert_eq!(w.coeff(1, 0), BigRational::from_integer(3.into()));
        assert_eq!(w.coeff(2, 0), BigRational::one());
    }

    #[test]
    fn display_canonical() {
        let s = Scalar::from_int(1) + Scalar::pi().scale(&BigRational::from_integer((-2).into()));
        assert_eq!(s.to_string(), "1 - 2*pi");
        let t = Scalar::monomial(BigRational::one(), 2, 1);
        assert_eq!(t.to_string(), "pi^2*L");
        assert_eq!(Scalar::zero().to_string(), "0");
    }

    #[test]
    fn rational_view() {
        assert_eq!(
            Scalar::from_ratio(-7, 3).as_rational(),
            Some(BigRational::new((-7).into(), 3.into()))
        );
        assert_eq!(Scalar::pi().as_rational(), None);
        assert_eq!(Scalar::zero().as_rational(), Some(BigRational::zero()));
    }
}
