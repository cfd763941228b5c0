//! Report writers. All numbers are printed with Rust's shortest round-trip
//! float formatting and a '.' decimal separator, independent of locale, so a
//! fixed config and seed reproduce reports byte for byte (the wall-clock
//! `seconds` column of the witness table is the one documented exception).

use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use anyhow::{Context, Result};

pub enum Sink {
    Stdout,
    File(PathBuf),
}

impl Sink {
    pub fn from_opt(path: Option<PathBuf>) -> Self {
        match path {
            Some(p) => Sink::File(p),
            None => Sink::Stdout,
        }
    }

    pub fn write(&self, contents: &str) -> Result<()> {
        match self {
            Sink::Stdout => {
                print!("{contents}");
                std::io::stdout().flush()?;
                Ok(())
            }
            Sink::File(path) => {
                if let Some(dir) = path.parent() {
                    if !dir.as_os_str().is_empty() {
                        fs::create_dir_all(dir)
                            .with_context(|| format!("creating {}", dir.display()))?;
                    }
                }
                fs::write(path, contents).with_context(|| format!("writing {}", path.display()))
            }
        }
    }
}

pub fn fmt_f64(v: f64) -> String {
    format!("{v}")
}

pub fn fmt_opt_f64(v: Option<f64>) -> String {
    v.map(fmt_f64).unwrap_or_default()
}

pub fn fmt_opt_bool(v: Option<bool>) -> String {
    v.map(|b| b.to_string()).unwrap_or_default()
}

pub fn csv_table(header: &str, rows: impl IntoIterator<Item = String>) -> String {
    let mut out = String::from(header);
    out.push('\n');
    for row in rows {
        out.push_str(&row);
        out.push('\n');
    }
    out
}

pub fn two_column_table(
    dir: &Path,
    name: &str,
    header: (&str, &str),
    rows: impl IntoIterator<Item = (f64, f64)>,
) -> Result<()> {
    let body = csv_table(
        &format!("{},{}", header.0, header.1),
        rows.into_iter()
            .map(|(x, y)| format!("{},{}", fmt_f64(x), fmt_f64(y))),
    );
    fs::create_dir_all(dir)?;
    fs::write(dir.join(name), body)?;
    Ok(())
}
