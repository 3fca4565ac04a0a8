//! Trivial embeddings into more general constraint classes: the instance is
//! unchanged, only its declared class widens.

use crate::instance::{ConstraintClass, Instance};

use super::{Emitter, MapKind, Reduced, ReductionError};

/// Views `inst` as an instance of `target` (FN or FNC). Narrowing is refused.
pub fn embed_trivial(inst: &Instance, target: ConstraintClass) -> Result<Reduced, ReductionError> {
    if target < ConstraintClass::FN {
        return Err(ReductionError::Refused(format!("{} is not an embedding target", target.name())));
    }
    if inst.constraint_class() > target {
        return Err(ReductionError::Refused(format!(
            "instance uses {} constraints, which {} cannot express",
            inst.constraint_class().name(),
            target.name()
        )));
    }
    let (_, map) = Emitter::copying(MapKind::Embed, inst).finish();
    Ok(Reduced { instance: inst.clone(), map })
}
