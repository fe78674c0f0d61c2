//! Root datum, monoid generators, relations and strata of a group.
//!
//! `cargo run --example describe_group -- Sp4`

use std::sync::Arc;

use modp_satake::root_datum::RootDatum;
use modp_satake::satake_params::{binomial_relations, strata, AntidominantMonoid};

fn main() -> modp_satake::Result<()> {
    let name = std::env::args().nth(1).unwrap_or_else(|| "SL3".to_string());
    let g = Arc::new(RootDatum::builtin(&name)?);
    println!(
        "{}: rank {}, semisimple rank {}, |W| = {}",
        g.name(),
        g.rank(),
        g.semisimple_rank(),
        g.weyl_group()?.len()
    );
    let word: Vec<String> = g.longest_element().word().iter().map(|i| format!("s{}", i + 1)).collect();
    println!("w0 = {}", word.join(" "));

    let monoid = AntidominantMonoid::new(Arc::clone(&g))?;
    let gens: Vec<String> = monoid.generators().iter().map(|c| c.to_string()).collect();
    println!("antidominant monoid generated by {}", gens.join(" "));
    for rel in binomial_relations(&monoid.dominant_generators(), 4) {
        println!("  relation {rel}   ({})", rel.monomial_form());
    }
    for s in strata(&g).strata {
        println!("  stratum {:?}: rank {}", s.levi.one_based(), s.rank);
    }
    Ok(())
}
