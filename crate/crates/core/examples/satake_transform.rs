//! Satake transforms to every standard Levi of GL3.

use std::sync::Arc;

use modp_satake::hecke::{Basis, HeckeElement};
use modp_satake::root_datum::{Coweight, RootDatum};

fn main() -> modp_satake::Result<()> {
    let g = Arc::new(RootDatum::builtin("GL3")?);
    let f = HeckeElement::from_terms(
        Arc::clone(&g),
        g.full_levi(),
        3,
        Basis::Std,
        [(Coweight(vec![2, 1, 0]), 1), (Coweight(vec![1, 1, 1]), 2)],
    )?;
    for levi in g.levis() {
        let image = f.satake_transform(&levi, Basis::Ic)?;
        let terms: Vec<String> = image.terms().map(|(mu, c)| format!("{c}·[{mu}]")).collect();
        println!("L = {:<8} {}", format!("{:?}", levi.one_based()), terms.join(" + "));
    }
    // composing through an intermediate Levi gives the same answer
    let torus = g.torus_levi();
    for levi in g.levis() {
        let two_step = f.satake_transform(&levi, Basis::Std)?.satake_transform(&torus, Basis::Std)?;
        assert_eq!(two_step, f.satake_transform(&torus, Basis::Std)?);
    }
    println!("transitivity holds through every Levi");
    Ok(())
}
