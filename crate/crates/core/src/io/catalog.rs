//! JSON cache of computed Jost-zero catalogs. Floats are written in shortest
//! round-trip form, so a reload is bit-identical to the computation.

use std::io::{Read, Write};
use std::path::Path;

use serde::{Deserialize, Serialize};

use super::DataError;
use crate::jost::{Barrier, JostZero, RootConfig};

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ZeroCatalog {
    pub v: f64,
    pub config: RootConfig<f64>,
    pub zeros: Vec<JostZero<f64>>,
}

impl ZeroCatalog {
    pub fn new(barrier: &Barrier<f64>, config: RootConfig<f64>, zeros: Vec<JostZero<f64>>) -> Self {
        Self {
            v: barrier.v(),
            config,
            zeros,
        }
    }

    /// Structural checks on loaded data; the error names the offending entry.
    pub fn check(&self) -> Result<(), DataError> {
        let bad = |entry: usize, reason: &str| DataError::CatalogInvalid {
            entry,
            reason: reason.to_owned(),
        };
        if !(self.v.is_finite() && self.v > 0.0) {
            return Err(bad(0, "barrier strength must be positive"));
        }
        for (i, z) in self.zeros.iter().enumerate() {
            let entry = i + 1;
            if z.n != entry {
                return Err(bad(entry, "indices must run 1, 2, 3, …"));
            }
            if !(z.beta.re.is_finite() && z.beta.im.is_finite()) {
                return Err(bad(entry, "non-finite β"));
            }
            if !z.in_cell() {
                return Err(bad(entry, "β outside its cell or not in the lower half plane"));
            }
            if !(z.residual >= 0.0) {
                return Err(bad(entry, "negative residual"));
            }
        }
        Ok(())
    }
}

pub fn write_catalog<W: Write>(catalog: &ZeroCatalog, out: W) -> Result<(), DataError> {
    serde_json::to_writer_pretty(out, catalog)?;
    Ok(())
}

pub fn write_catalog_file(catalog: &ZeroCatalog, path: impl AsRef<Path>) -> Result<(), DataError> {
    let file = super::create(path.as_ref())?;
    let mut w = std::io::BufWriter::new(file);
    write_catalog(catalog, &mut w)?;
    w.flush()?;
    Ok(())
}

pub fn read_catalog<R: Read>(input: R) -> Result<ZeroCatalog, DataError> {
    let catalog: ZeroCatalog = serde_json::from_reader(input)?;
    catalog.check()?;
    Ok(catalog)
}

pub fn read_catalog_file(path: impl AsRef<Path>) -> Result<ZeroCatalog, DataError> {
    read_catalog(std::io::BufReader::new(super::open(path.as_ref())?))
}
