//! Plain-text ideal files.
//!
//! ```text
//! ring 32003 x0,x1,x2,x3,x4,x5 grevlex
//! x0*x3-x1*x2
//! ...
//! ```
//! Blank lines and lines starting with `#` are ignored.

use std::fmt::Write as _;
use std::path::Path;

use super::Ideal;
use crate::coeffs::Field;
use crate::error::{Error, Result};
use crate::poly::{MonomialOrder, PolyRing};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IdealFile {
    pub characteristic: u64,
    pub names: Vec<String>,
    pub order: MonomialOrder,
    pub polys: Vec<String>,
}

impl IdealFile {
    pub fn parse(text: &str) -> Result<Self> {
        let mut lines = text
            .lines()
            .enumerate()
            .map(|(i, l)| (i, l.trim()))
            .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));
        let (_, header) = lines
            .next()
            .ok_or_else(|| Error::Parse { offset: 0, msg: "missing `ring` header".into() })?;
        let fields: Vec<&str> = header.split_whitespace().collect();
        if fields.len() != 4 || fields[0] != "ring" {
            return Err(Error::Parse {
                offset: 0,
                msg: "header must read `ring <char> <vars> <order>`".into(),
            });
        }
        let characteristic = fields[1]
            .parse()
            .map_err(|_| Error::Parse { offset: 5, msg: format!("bad characteristic `{}`", fields[1]) })?;
        let names = fields[2].split(',').map(|s| s.trim().to_string()).collect();
        let order = MonomialOrder::parse(fields[3])?;
        let polys = lines.map(|(_, l)| l.to_string()).collect();
        Ok(IdealFile { characteristic, names, order, polys })
    }

    pub fn to_ideal<F: Field>(&self, field: F) -> Result<Ideal<F>> {
        if field.characteristic() != self.characteristic {
            return Err(Error::Precondition(format!(
                "file declares characteristic {}, run uses {}",
                self.characteristic,
                field.characteristic()
            )));
        }
        let ring = PolyRing::new(field, self.names.clone(), self.order.clone())?;
        let gens = self.polys.iter().map(|p| ring.parse(p)).collect::<Result<Vec<_>>>()?;
        Ideal::new(&ring, gens)
    }
}

pub fn read_ideal_file(path: impl AsRef<Path>) -> Result<IdealFile> {
    IdealFile::parse(&std::fs::read_to_string(path)?)
}

pub fn read_ideal<F: Field>(text: &str, field: F) -> Result<Ideal<F>> {
    IdealFile::parse(text)?.to_ideal(field)
}

pub fn write_ideal<F: Field>(ideal: &Ideal<F>) -> String {
    let ring = ideal.ring();
    let mut out = format!(
        "ring {} {} {}\n",
        ring.field().characteristic(),
        ring.names().join(","),
        ring.order().name()
    );
    for g in ideal.gens() {
        writeln!(out, "{g}").expect("string write");
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coeffs::PrimeField;

    #[test]
    fn round_trip() {
        let text = "ring 32003 x0,x1,x2 grevlex\n\n# conic\nx0*x2-x1^2\n";
        let f = PrimeField::new(32003).unwrap();
        let i = read_ideal(text, f).unwrap();
        assert_eq!(i.gens().len(), 1);
        let again = read_ideal(&write_ideal(&i), f).unwrap();
        assert_eq!(again.gens(), i.gens());
        assert!(read_ideal("ring 7 x grevlex\nx", f).is_err());
        assert!(read_ideal("rng 32003 x grevlex\n", f).is_err());
    }
}
