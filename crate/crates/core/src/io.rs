//! The JSON wire format shared by all tools:
//! `{"orders": [...], "side": "group"|"spectrum", "values": [[re, im], ...]}`
//! with values in canonical index order.

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::function::{GroupFunction, SpectrumFunction};
use crate::group::FiniteAbelianGroup;

#[derive(Serialize, Deserialize)]
struct FunctionJson {
    orders: Vec<u32>,
    side: String,
    values: Vec<(f64, f64)>,
}

fn encode(orders: &[u32], side: &str, values: &[Complex64]) -> String {
    let doc = FunctionJson {
        orders: orders.to_vec(),
        side: side.into(),
        values: values.iter().map(|v| (v.re, v.im)).collect(),
    };
    serde_json::to_string(&doc).expect("plain data serializes")
}

fn decode(text: &str, side: &str) -> Result<(FiniteAbelianGroup, Vec<Complex64>)> {
    let doc: FunctionJson = serde_json::from_str(text)?;
    if doc.side != side {
        return Err(Error::Format(format!(
            "expected side {side:?}, got {:?}",
            doc.side
        )));
    }
    let group = FiniteAbelianGroup::new(&doc.orders)?;
    if doc.values.len() != group.size() {
        return Err(Error::Format(format!(
            "expected {} values, got {}",
            group.size(),
            doc.values.len()
        )));
    }
    let values = doc
        .values
        .iter()
        .map(|&(re, im)| Complex64::new(re, im))
        .collect();
    Ok((group, values))
}

pub fn group_function_to_json(f: &GroupFunction) -> String {
    encode(f.group().orders(), "group", f.values())
}

pub fn group_function_from_json(text: &str) -> Result<GroupFunction> {
    let (group, values) = decode(text, "group")?;
    GroupFunction::from_values(&group, values)
}

pub fn spectrum_function_to_json(c: &SpectrumFunction) -> String {
    encode(c.group().orders(), "spectrum", c.values())
}

pub fn spectrum_function_from_json(text: &str) -> Result<SpectrumFunction> {
    let (group, values) = decode(text, "spectrum")?;
    SpectrumFunction::from_values(&group, values)
}
