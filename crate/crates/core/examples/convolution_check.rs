//! Lattice convolution counts against Hecke structure constants for GL2.

use std::collections::BTreeSet;
use std::sync::Arc;

use modp_satake::hecke::{Basis, HeckeElement};
use modp_satake::mv_oracle::{convolution_table, TruncationWindow};
use modp_satake::root_datum::Coweight;

fn main() -> modp_satake::Result<()> {
    let mu1 = Coweight(vec![1, 0]);
    let mu2 = Coweight(vec![1, -1]);
    for q in [2, 3, 4] {
        let w = TruncationWindow::new(2, q, 1)?;
        let g = Arc::clone(w.datum());
        let table = convolution_table(&w, &mu1, &mu2)?;
        let f =
            |mu: &Coweight| HeckeElement::basis_element(Arc::clone(&g), g.full_levi(), w.p(), Basis::Std, mu.clone());
        let product = f(&mu1)?.convolve(&f(&mu2)?)?;
        println!("q = {q}: 1_{mu1} * 1_{mu2}");
        let keys: BTreeSet<Coweight> = table.counts.keys().cloned().chain(product.support()).collect();
        for lambda in keys {
            let raw = table.counts.get(&lambda).copied().unwrap_or(0);
            let verdict = if raw % w.p() == product.coeff(&lambda) { "ok" } else { "MISMATCH" };
            println!(
                "  {lambda}: {raw} lattices, {} mod {}, Hecke {}  {verdict}",
                raw % w.p(),
                w.p(),
                product.coeff(&lambda)
            );
        }
    }
    Ok(())
}
