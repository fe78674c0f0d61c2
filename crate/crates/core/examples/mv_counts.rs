//! Point counts of `S_ν ∩ Gr^λ` for GL2 and GL3, written as CSV.
//!
//! `cargo run --release --example mv_counts > counts.csv`

use std::io;

use modp_satake::mv_oracle::{mv_counts_by_nu, satake_transform_oracle, write_csv, CountRow, TruncationWindow};
use modp_satake::root_datum::Coweight;

fn main() -> modp_satake::Result<()> {
    let mut rows = Vec::new();
    for q in [2, 3, 4, 5] {
        let lambda = Coweight(vec![2, 0]);
        let w = TruncationWindow::fitting(2, q, &[&lambda])?;
        rows.extend(CountRow::from_table(&lambda, &mv_counts_by_nu(&w, &lambda, false)?));
    }
    for q in [2, 3] {
        let lambda = Coweight(vec![1, 0, -1]);
        let w = TruncationWindow::new(3, q, 1)?;
        rows.extend(CountRow::from_table(&lambda, &mv_counts_by_nu(&w, &lambda, false)?));
        let residues = satake_transform_oracle(&w, &lambda)?;
        let support: Vec<String> =
            residues.iter().filter(|(_, r)| **r != 0).map(|(nu, r)| format!("{r}·{nu}")).collect();
        eprintln!("q = {q}: closure counts mod p = {}", support.join(" + "));
    }
    write_csv(io::stdout().lock(), &rows)
}
