use crate::algebra::RationalFunction;
use crate::error::{Error, Result};
use crate::polytope::{newton_polytope, Face};

/// `P_F / Q_F`: the terms of numerator and denominator on the face `F` of
/// the denominator's Newton polytope.
pub fn restrict_face(f: &RationalFunction, face: &Face) -> Result<RationalFunction> {
    let q = f.denominator();
    let checked = newton_polytope(q)?.face_for_form(&face.supporting_form, face.offset)?;
    if checked.vertices != face.vertices {
        return Err(Error::NotAFace);
    }
    let on = |e: &crate::algebra::ExponentVector| face.contains(e);
    RationalFunction::new(f.numerator().filter_terms(on), q.filter_terms(on))
}
