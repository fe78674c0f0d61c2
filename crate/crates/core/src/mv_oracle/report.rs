use std::io::Write;

use serde::{Deserialize, Serialize};

use super::OracleTable;
use crate::error::{Error, Result};
use crate::root_datum::Coweight;

/// One line of a count table.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CountRow {
    pub q: u64,
    pub lambda: Coweight,
    pub nu: Coweight,
    pub raw_count: u64,
    pub count_mod_p: u64,
}

impl CountRow {
    /// Rows of `table`, whose keys play the role of `nu`.
    pub fn from_table(lambda: &Coweight, table: &OracleTable) -> Vec<CountRow> {
        table
            .counts
            .iter()
            .map(|(nu, c)| CountRow {
                q: table.q,
                lambda: lambda.clone(),
                nu: nu.clone(),
                raw_count: *c,
                count_mod_p: c % table.p,
            })
            .collect()
    }
}

/// CSV with header `q,lambda,nu,raw_count,count_mod_p`; coweights are
/// written as `(a,b,…)`.
pub fn write_csv<W: Write>(out: W, rows: &[CountRow]) -> Result<()> {
    let mut w = csv::Writer::from_writer(out);
    let err = |e: csv::Error| Error::Json(e.to_string());
    w.write_record(["q", "lambda", "nu", "raw_count", "count_mod_p"]).map_err(err)?;
    for r in rows {
        w.write_record([
            r.q.to_string(),
            r.lambda.to_string(),
            r.nu.to_string(),
            r.raw_count.to_string(),
            r.count_mod_p.to_string(),
        ])
        .map_err(err)?;
    }
    w.flush().map_err(|e| Error::Json(e.to_string()))
}
