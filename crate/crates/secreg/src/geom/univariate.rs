//! Dense univariate polynomials, only as far as GCDs of binary forms need.

use crate::coeffs::Field;

fn trim<F: Field>(field: &F, mut p: Vec<F::Elem>) -> Vec<F::Elem> {
    while p.last().is_some_and(|c| field.is_zero(c)) {
        p.pop();
    }
    p
}

/// Remainder of `a` modulo nonzero `b` (coefficients low to high).
fn rem<F: Field>(field: &F, mut a: Vec<F::Elem>, b: &[F::Elem]) -> Vec<F::Elem> {
    let lead_inv = field.inv(b.last().expect("nonzero divisor")).expect("trimmed");
    while a.len() >= b.len() {
        let c = field.mul(a.last().expect("nonempty"), &lead_inv);
        let shift = a.len() - b.len();
        for (i, bi) in b.iter().enumerate() {
            a[shift + i] = field.sub(&a[shift + i], &field.mul(&c, bi));
        }
        a.pop();
        a = trim(field, a);
    }
    a
}

pub(crate) fn gcd<F: Field>(field: &F, a: Vec<F::Elem>, b: Vec<F::Elem>) -> Vec<F::Elem> {
    let (mut a, mut b) = (trim(field, a), trim(field, b));
    while !b.is_empty() {
        let r = rem(field, a, &b);
        a = b;
        b = r;
    }
    match a.last().cloned() {
        Some(c) => {
            let ci = field.inv(&c).expect("trimmed");
            a.iter().map(|x| field.mul(x, &ci)).collect()
        }
        None => a,
    }
}

/// Degree of the GCD of nonzero binary forms of degrees `degs`, each given
/// by its dehomogenization `f(s, 1)`.
pub(crate) fn binary_gcd_degree<F: Field>(field: &F, forms: &[(usize, Vec<F::Elem>)]) -> usize {
    // the power of t dividing f is deg f - deg f(s, 1)
    let t_power = forms
        .iter()
        .map(|(d, f)| d + 1 - trim(field, f.clone()).len())
        .min()
        .unwrap_or(0);
    let mut g: Vec<F::Elem> = Vec::new();
    for (_, f) in forms {
        g = gcd(field, g, f.clone());
    }
    t_power + g.len().saturating_sub(1)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coeffs::PrimeField;

    #[test]
    fn gcd_of_binary_forms() {
        let f = PrimeField::new(101).unwrap();
        // s^2 t (s - t) and s t^2 (s - t): gcd s t (s - t)
        let a = (4, vec![0, 0, 100, 1]);
        let b = (4, vec![0, 100, 1]);
        assert_eq!(binary_gcd_degree(&f, &[a, b]), 3);
        assert_eq!(gcd(&f, vec![1, 1], vec![100, 1]), vec![1]);
        assert_eq!(gcd(&f, vec![2, 2], vec![]), vec![1, 1]);
    }
}
