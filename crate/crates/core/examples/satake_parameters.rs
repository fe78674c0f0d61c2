//! Reading off the stratum and character of a Satake parameter from its
//! values on the monoid generators, and multiplying parameters.

use std::collections::BTreeMap;
use std::sync::Arc;

use modp_satake::field::FiniteField;
use modp_satake::root_datum::{Coweight, RootDatum};
use modp_satake::satake_params::{classify, AntidominantMonoid, SatakeParameter, DEFAULT_RELATION_BOUND};

fn describe(chi: &SatakeParameter) {
    let kind = if chi.is_unit() {
        "ordinary"
    } else if chi.is_supersingular() {
        "supersingular"
    } else {
        "intermediate"
    };
    let values: Vec<String> =
        chi.basis().iter().zip(chi.character()).map(|(b, v)| format!("chi{b} = {:?}", v.coeffs())).collect();
    println!("  stratum {:?} ({kind}), rank {}: {}", chi.stratum().one_based(), chi.rank(), values.join(", "));
}

fn main() -> modp_satake::Result<()> {
    let g = Arc::new(RootDatum::builtin("GL3")?);
    let field = Arc::new(FiniteField::new(3, 2)?);
    let monoid = AntidominantMonoid::new(Arc::clone(&g))?;

    // generators (0,0,1) (0,1,1) (1,1,1) (-1,-1,-1); vanishing on (0,0,1) puts us on {α2}
    let x = field.element(&[0, 1])?;
    let raw: BTreeMap<Coweight, _> = [
        (Coweight(vec![0, 0, 1]), field.zero()),
        (Coweight(vec![0, 1, 1]), x.clone()),
        (Coweight(vec![1, 1, 1]), field.from_int(2)),
        (Coweight(vec![-1, -1, -1]), field.from_int(2)),
    ]
    .into_iter()
    .collect();
    let chi = classify(&monoid, Arc::clone(&field), &raw, DEFAULT_RELATION_BOUND)?;
    println!("classified over F_9:");
    describe(&chi);

    let other =
        SatakeParameter::new(Arc::clone(&g), Arc::clone(&field), g.torus_levi(), vec![x.clone(), x.clone(), x])?;
    println!("an ordinary parameter:");
    describe(&other);
    println!("their product:");
    describe(&chi.multiply(&other)?);
    Ok(())
}
