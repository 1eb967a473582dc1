//! Serde adapters shared by the JSON reports.

use serde::ser::{SerializeSeq, SerializeStruct};
use serde::Serializer;

use crate::algebra::integers::format_rational;
use crate::algebra::{LaurentPolynomial, Rational, RationalFunction, UniPoly};

/// Version tag carried by every JSON document.
pub const SCHEMA_VERSION: u32 = 1;

pub fn ser_rational<S: Serializer>(r: &Rational, s: S) -> Result<S::Ok, S::Error> {
    s.serialize_str(&format_rational(r))
}

pub fn ser_unipoly<S: Serializer>(u: &UniPoly, s: S) -> Result<S::Ok, S::Error> {
    s.serialize_str(&u.to_string())
}

pub fn ser_laurent<S: Serializer>(p: &LaurentPolynomial, s: S) -> Result<S::Ok, S::Error> {
    s.serialize_str(&p.to_string())
}

pub fn ser_ratfunc<S: Serializer>(f: &RationalFunction, s: S) -> Result<S::Ok, S::Error> {
    s.serialize_str(&f.to_string())
}

pub fn ser_ratfunc_list<S: Serializer>(v: &[RationalFunction], s: S) -> Result<S::Ok, S::Error> {
    let mut seq = s.serialize_seq(Some(v.len()))?;
    for f in v {
        seq.serialize_element(&f.to_string())?;
    }
    seq.end()
}

pub fn ser_factor_list<S: Serializer>(v: &[(UniPoly, u32)], s: S) -> Result<S::Ok, S::Error> {
    struct Entry<'a>(&'a UniPoly, u32);
    impl serde::Serialize for Entry<'_> {
        fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
            let mut st = s.serialize_struct("Factor", 2)?;
            st.serialize_field("factor", &self.0.to_string())?;
            st.serialize_field("multiplicity", &self.1)?;
            st.end()
        }
    }
    let mut seq = s.serialize_seq(Some(v.len()))?;
    for (u, m) in v {
        seq.serialize_element(&Entry(u, *m))?;
    }
    seq.end()
}
