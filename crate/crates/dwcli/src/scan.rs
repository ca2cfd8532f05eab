//! Batch scan over all strictly increasing r-tuples of admissible primes
//! below a bound, with persistent CSV/JSON output and a Z histogram.
//!
//! Rows are emitted in lexicographic tuple order, so files are
//! deterministic; with the timestamp header disabled they are also
//! byte-identical across runs. Output is written to a temporary file and
//! renamed into place, and nothing is left behind on failure.

use std::collections::BTreeMap;
use std::path::PathBuf;
use std::time::{SystemTime, UNIX_EPOCH};

use dw_core::{cs_profile, is_prime, validate_field, PrimeTuple, UnitNormPolicy};
use serde::Serialize;

use crate::CliError;

pub struct ScanConfig {
    pub r: usize,
    pub bound: u64,
    pub out: Option<PathBuf>,
    pub json: bool,
    pub meta: bool,
}

/// One scanned tuple. Tuples whose field fails the unit-norm hypothesis
/// are recorded with empty invariants rather than dropped, so downstream
/// statistics keep the full denominator.
#[derive(Serialize)]
pub struct ScanRecord {
    pub d: u64,
    pub primes: Vec<u64>,
    pub unit_norm: i8,
    pub z: Option<i64>,
    pub profile: Option<String>,
}

const SKIP_MARKER: &str = "skipped(norm+1)";

impl ScanRecord {
    fn csv_row(&self) -> String {
        let primes = self
            .primes
            .iter()
            .map(|p| p.to_string())
            .collect::<Vec<_>>()
            .join("-");
        let z = self
            .z
            .map(|z| z.to_string())
            .unwrap_or_else(|| SKIP_MARKER.to_string());
        let profile = self.profile.clone().unwrap_or_default();
        format!(
            "{},{},{:+},{},{}\n",
            self.d, primes, self.unit_norm, z, profile
        )
    }
}

pub struct ScanOutcome {
    pub records: Vec<ScanRecord>,
    pub path: PathBuf,
    r: usize,
    bound: u64,
}

impl ScanOutcome {
    /// Deterministic stdout summary with the Z histogram.
    pub fn summary(&self) -> String {
        let computed = self.records.iter().filter(|r| r.z.is_some()).count();
        let skipped = self.records.len() - computed;
        let mut histogram: BTreeMap<i64, usize> = BTreeMap::new();
        for rec in &self.records {
            if let Some(z) = rec.z {
                *histogram.entry(z).or_insert(0) += 1;
            }
        }
        let mut out = format!(
            "scan r={} bound={}: {} tuple(s), {} computed, {} skipped (unit norm +1)\n",
            self.r,
            self.bound,
            self.records.len(),
            computed,
            skipped
        );
        out += "Z histogram:\n";
        if histogram.is_empty() {
            out += "  (empty)\n";
        }
        for (z, count) in &histogram {
            out += &format!("  Z = {z}: {count}\n");
        }
        out += &format!("wrote {}\n", self.path.display());
        out
    }
}

fn admissible_primes(bound: u64) -> Vec<u64> {
    (5..bound).filter(|&p| is_prime(p) && p % 4 == 1).collect()
}

/// Strictly increasing index r-tuples of `0..n` in lexicographic order.
fn combinations(n: usize, r: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    if r == 0 || r > n {
        return out;
    }
    let mut idx: Vec<usize> = (0..r).collect();
    loop {
        out.push(idx.clone());
        // advance the rightmost index that can still move
        let mut k = r;
        loop {
            if k == 0 {
                return out;
            }
            k -= 1;
            if idx[k] + (r - k) < n {
                break;
            }
        }
        idx[k] += 1;
        for j in k + 1..r {
            idx[j] = idx[j - 1] + 1;
        }
    }
}

fn default_out_path(r: usize, bound: u64, json: bool) -> PathBuf {
    let ext = if json { "json" } else { "csv" };
    let name = format!("scan_r{r}_b{bound}.{ext}");
    match std::env::var_os("DWCLI_SCAN_DIR") {
        Some(dir) => PathBuf::from(dir).join(name),
        None => PathBuf::from(name),
    }
}

pub fn run_scan(config: ScanConfig) -> Result<ScanOutcome, CliError> {
    if config.r < 1 {
        return Err(CliError::Input("r must be at least 1".into()));
    }
    if config.bound < 5 {
        return Err(CliError::Input(format!(
            "bound must be at least 5, got {}",
            config.bound
        )));
    }
    let primes = admissible_primes(config.bound);
    let mut records = Vec::new();
    for combo in combinations(primes.len(), config.r) {
        let tuple: Vec<u64> = combo.iter().map(|&i| primes[i]).collect();
        let t = PrimeTuple::new(tuple)?;
        let field = validate_field(&t)?;
        let (z, profile) = if field.narrow_equals_wide() {
            // hypothesis already verified; skip the redundant gate
            let p = cs_profile(&t, UnitNormPolicy::Override)?;
            (Some(p.dw().value()), Some(p.bits()))
        } else {
            (None, None)
        };
        records.push(ScanRecord {
            d: t.discriminant(),
            primes: t.primes().to_vec(),
            unit_norm: field.unit_norm(),
            z,
            profile,
        });
    }

    let path = config
        .out
        .clone()
        .unwrap_or_else(|| default_out_path(config.r, config.bound, config.json));
    let body = if config.json {
        render_json(&records, &config)
    } else {
        render_csv(&records, &config)
    };
    write_atomically(&path, &body)?;

    Ok(ScanOutcome {
        records,
        path,
        r: config.r,
        bound: config.bound,
    })
}

fn render_csv(records: &[ScanRecord], config: &ScanConfig) -> String {
    let mut out = String::new();
    if config.meta {
        out += &meta_line(config);
    }
    out += "d,primes,unit_norm,z,profile\n";
    for rec in records {
        out += &rec.csv_row();
    }
    out
}

fn render_json(records: &[ScanRecord], config: &ScanConfig) -> String {
    #[derive(Serialize)]
    struct ScanFile<'a> {
        r: usize,
        bound: u64,
        #[serde(skip_serializing_if = "Option::is_none")]
        generated_unix: Option<u64>,
        records: &'a [ScanRecord],
    }
    let file = ScanFile {
        r: config.r,
        bound: config.bound,
        generated_unix: config.meta.then(unix_now),
        records,
    };
    let mut s = serde_json::to_string_pretty(&file).expect("scan records serialize");
    s.push('\n');
    s
}

fn unix_now() -> u64 {
    SystemTime::now()
        .duration_since(UNIX_EPOCH)
        .map(|d| d.as_secs())
        .unwrap_or(0)
}

fn meta_line(config: &ScanConfig) -> String {
    format!(
        "# dwcli scan r={} bound={} generated_unix={}\n",
        config.r,
        config.bound,
        unix_now()
    )
}

/// Writes via a sibling temp file and renames into place; removes the temp
/// file if anything fails, so no partial output survives.
fn write_atomically(path: &PathBuf, body: &str) -> Result<(), CliError> {
    let file_name = path
        .file_name()
        .ok_or_else(|| CliError::Io(format!("{} is not a file path", path.display())))?;
    let mut tmp = path.clone();
    tmp.set_file_name(format!("{}.tmp", file_name.to_string_lossy()));
    std::fs::write(&tmp, body).map_err(|e| {
        let _ = std::fs::remove_file(&tmp);
        CliError::Io(format!("cannot write {}: {e}", tmp.display()))
    })?;
    std::fs::rename(&tmp, path).map_err(|e| {
        let _ = std::fs::remove_file(&tmp);
        CliError::Io(format!("cannot create {}: {e}", path.display()))
    })?;
    Ok(())
}
