//! Sparse polynomials over a [`Field`](crate::coeffs::Field).

mod monomial;
mod parse;
mod polynomial;
mod ring;

pub use monomial::{compare, Monomial, MonomialOrder, MAX_VARS};
pub use parse::parse_polynomial;
pub use polynomial::Polynomial;
pub use ring::PolyRing;

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coeffs::PrimeField;

    fn fp() -> PrimeField {
        PrimeField::new(32003).unwrap()
    }

    #[test]
    fn arithmetic_examples() {
        let r = PolyRing::standard(fp(), "x", 3).unwrap();
        let p = |s: &str| r.parse(s).unwrap();
        assert_eq!(&p("x0+x1") * &p("x0-x1"), p("x0^2-x1^2"));
        assert!((&p("x0*x2-x1^2") + &p("-x0*x2+x1^2")).is_zero());
        assert_eq!(p("x0^3-x1^3").div_exact(&p("x0-x1")).unwrap(), p("x0^2+x0*x1+x1^2"));
        assert!(p("x0^2").div_exact(&p("x1")).is_err());
    }

    #[test]
    fn substitution() {
        let r = PolyRing::standard(fp(), "x", 4).unwrap();
        let st = PolyRing::new(fp(), vec!["s".into(), "t".into()], MonomialOrder::Grevlex).unwrap();
        let cubic: Vec<_> = ["s^3", "s^2t", "st^2", "t^3"].iter().map(|m| st.parse(m).unwrap()).collect();
        assert!(r.parse("x0*x3-x1*x2").unwrap().substitute(&cubic).unwrap().is_zero());
        let lin = vec![st.parse("s+t").unwrap(); 4];
        assert_eq!(r.parse("x0").unwrap().substitute(&lin).unwrap(), st.parse("s+t").unwrap());
        assert!(matches!(
            r.parse("x3").unwrap().substitute(&cubic[..2]),
            Err(crate::error::Error::MissingImage(_))
        ));
    }

    #[test]
    fn mismatched_rings() {
        let a = PolyRing::standard(fp(), "x", 2).unwrap();
        let b = PolyRing::standard(fp(), "y", 2).unwrap();
        assert!(a.var(0).add(&b.var(0)).is_err());
    }
}
