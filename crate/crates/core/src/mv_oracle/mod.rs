//! Brute-force lattice counts over `F_q((t))`, used as an independent check on
//! the algebra.
//!
//! A lattice `L` with `t^a Λ_0 ⊆ L ⊆ t^{-a} Λ_0` (`Λ_0 = F_q[[t]]^n`) is stored
//! through `t^a L ⊆ Λ_0`, which contains `t^{2a} Λ_0` and so is the preimage of
//! a submodule of `(F_q[t]/t^{2a})^n`. Its canonical basis is the upper
//! triangular Hermite basis `b_i = t^{v_i} e_i + Σ_{j<i} x_{ji} e_j` with
//! `deg x_{ji} < v_j`; the pivot exponents give the Iwasawa coweight
//! `ν = v − a` for the flag `F_i = ⟨e_1, …, e_i⟩`.
//!
//! Conventions: `B` is upper triangular, dominant means weakly decreasing,
//! `Gr^λ` is the orbit of `t^λ Λ_0`.

mod counts;
mod lattice;
mod poly;
mod report;

use std::sync::Arc;

use crate::error::{Error, Result};
use crate::field::{prime_power, FieldTables, FiniteField};
use crate::root_datum::{Coweight, Family, RootDatum};

pub use counts::{
    convolution_count, convolution_count_at, convolution_table, mv_count, mv_counts_by_nu, satake_transform_oracle,
    OracleTable,
};
pub use lattice::{enumerate_cell, enumerate_lattices, relative_position, LatticePoint};
pub use poly::{Poly, PolyRing};
pub use report::{write_csv, CountRow};

pub const MAX_Q: u64 = 8;
pub const MAX_N: usize = 4;
pub const MAX_A: u32 = 3;

/// Field, matrix size and pole bound of an enumeration.
#[derive(Clone, Debug)]
pub struct TruncationWindow {
    n: usize,
    q: u64,
    a: u32,
    field: Arc<FiniteField>,
    ring: Arc<PolyRing>,
    datum: Arc<RootDatum>,
    jobs: usize,
}

impl TruncationWindow {
    pub fn new(n: usize, q: u64, a: u32) -> Result<Self> {
        if n == 0 || n > MAX_N {
            return Err(Error::CapsExceeded(format!("matrix size {n} outside 1..={MAX_N}")));
        }
        if q > MAX_Q {
            return Err(Error::CapsExceeded(format!("q = {q} exceeds {MAX_Q}")));
        }
        if a == 0 || a > MAX_A {
            return Err(Error::CapsExceeded(format!("pole bound {a} outside 1..={MAX_A}")));
        }
        let (p, k) = prime_power(q).ok_or(Error::NotPrime(q))?;
        let field = FiniteField::new(p, k as usize)?;
        let ring = PolyRing::new(FieldTables::new(&field)?);
        Ok(TruncationWindow {
            n,
            q,
            a,
            field: Arc::new(field),
            ring: Arc::new(ring),
            datum: Arc::new(RootDatum::standard(Family::Gl, n)?),
            jobs: 0,
        })
    }

    /// Smallest window (pole bound at least 1) holding every coweight given.
    pub fn fitting(n: usize, q: u64, coweights: &[&Coweight]) -> Result<Self> {
        let a = coweights.iter().map(|c| c.max_abs()).max().unwrap_or(0).max(1);
        let a = u32::try_from(a).map_err(|_| Error::CapsExceeded(format!("pole bound {a}")))?;
        TruncationWindow::new(n, q, a)
    }

    /// Worker threads for enumeration; `0` uses the global pool.
    pub fn with_jobs(mut self, jobs: usize) -> Self {
        self.jobs = jobs;
        self
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn q(&self) -> u64 {
        self.q
    }

    pub fn p(&self) -> u64 {
        self.field.characteristic()
    }

    pub fn a(&self) -> u32 {
        self.a
    }

    /// Working precision `N = 2a`.
    pub fn precision(&self) -> u32 {
        2 * self.a
    }

    pub fn jobs(&self) -> usize {
        self.jobs
    }

    pub fn field(&self) -> &Arc<FiniteField> {
        &self.field
    }

    pub fn ring(&self) -> &Arc<PolyRing> {
        &self.ring
    }

    /// `GL_n` with the standard upper-triangular based root datum.
    pub fn datum(&self) -> &Arc<RootDatum> {
        &self.datum
    }

    pub fn check_coweight(&self, mu: &Coweight) -> Result<()> {
        self.datum.check(mu)?;
        if mu.max_abs() > self.a as i64 {
            return Err(Error::CapsExceeded(format!("{mu} does not fit the pole bound {}", self.a)));
        }
        Ok(())
    }

    pub(crate) fn install<T: Send>(&self, f: impl FnOnce() -> T + Send) -> Result<T> {
        if self.jobs == 0 {
            return Ok(f());
        }
        let pool = rayon::ThreadPoolBuilder::new()
            .num_threads(self.jobs)
            .build()
            .map_err(|e| Error::CapsExceeded(format!("thread pool: {e}")))?;
        Ok(pool.install(f))
    }
}
