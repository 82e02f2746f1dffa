use std::fs;
use std::path::Path;

use anyhow::Context;
use nullideal_core::{FiniteLocalRing, RingOptions, RingSpec, TableSpec};
use serde::{Deserialize, Serialize};

#[derive(Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct TableFile {
    order: u32,
    add: Vec<Vec<u32>>,
    mul: Vec<Vec<u32>>,
    zero: u32,
    one: u32,
}

pub fn load_table(path: &Path) -> anyhow::Result<TableSpec> {
    let text = fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    let t: TableFile = serde_json::from_str(&text).with_context(|| format!("parsing {}", path.display()))?;
    Ok(TableSpec { order: t.order, add: t.add, mul: t.mul, zero: t.zero, one: t.one })
}

pub fn save_table(path: &Path, spec: &TableSpec) -> anyhow::Result<()> {
    let t =
        TableFile { order: spec.order, add: spec.add.clone(), mul: spec.mul.clone(), zero: spec.zero, one: spec.one };
    let mut text = serde_json::to_string(&t)?;
    text.push('\n');
    fs::write(path, text).with_context(|| format!("writing {}", path.display()))
}

/// The operation tables of any ring, in its own element indexing.
pub fn table_of(ring: &FiniteLocalRing) -> TableSpec {
    let op = |f: &dyn Fn(_, _) -> nullideal_core::Elem| {
        ring.elements().map(|a| ring.elements().map(|b| f(a, b).0).collect()).collect()
    };
    TableSpec {
        order: ring.order(),
        add: op(&|a, b| ring.add(a, b)),
        mul: op(&|a, b| ring.mul(a, b)),
        zero: ring.zero().0,
        one: ring.one().0,
    }
}

/// Ring-spec text, or `table:<path>` for a table file.
pub fn resolve_ring(spec: &str, size_cap: u64) -> anyhow::Result<FiniteLocalRing> {
    let spec = match spec.trim().strip_prefix("table:") {
        Some(path) => RingSpec::Table(load_table(Path::new(path))?),
        None => spec.parse()?,
    };
    Ok(FiniteLocalRing::with_options(spec, RingOptions { size_cap })?)
}
