//! Convolution in the mod-p spherical Hecke algebra, in both bases.

use std::sync::Arc;

use modp_satake::hecke::{Basis, HeckeElement};
use modp_satake::root_datum::{Coweight, RootDatum};

fn show(label: &str, f: &HeckeElement) {
    let terms: Vec<String> = f.terms().map(|(mu, c)| format!("{c}·{mu}")).collect();
    println!("{label:<28} {}", terms.join(" + "));
}

fn main() -> modp_satake::Result<()> {
    let g = Arc::new(RootDatum::builtin("GL2")?);
    let full = g.full_levi();
    for p in [2, 3, 5] {
        let one = |basis| HeckeElement::basis_element(Arc::clone(&g), full.clone(), p, basis, Coweight(vec![1, 0]));
        println!("p = {p}");
        let std = one(Basis::Std)?;
        show("  1_(1,0) * 1_(1,0), std", &std.convolve(&std)?);
        let ic = one(Basis::Ic)?;
        show("  [(1,0)] * [(1,0)], ic", &ic.convolve_in(&ic, Basis::Ic)?);
        show("  same product, std", &ic.convolve(&ic)?);
    }
    Ok(())
}
