//! Report assembly and rendering (human table, JSON, CSV) for the
//! single-shot subcommands. Reports are built fully before anything is
//! printed, so invalid input never yields partial rows.

use dw_core::{
    cf_sqrt, cs_profile, fundamental_pell_solution, fundamental_unit_norm,
    induced_topological_profile, lens_cs, lens_dw, lens_signed_sum, topo_profile, validate_field,
    CsProfile, IntegerLinkingMatrix, LensSpaceParams, LinkSource, PrimeTuple, UnitNormPolicy,
};
use serde::{Deserialize, Serialize};

use crate::CliError;

#[derive(Clone, Copy, PartialEq, Eq)]
pub enum Format {
    Human,
    Json,
    Csv,
}

fn to_json<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("reports serialize");
    s.push('\n');
    s
}

fn profile_strings(profile: &CsProfile) -> (Vec<String>, String) {
    let characters = profile
        .entries()
        .iter()
        .map(|(c, _)| c.coeff_string())
        .collect();
    (characters, profile.bits())
}

fn hyphenated(primes: &[u64]) -> String {
    primes
        .iter()
        .map(|p| p.to_string())
        .collect::<Vec<_>>()
        .join("-")
}

// ---------------------------------------------------------------------------
// invariant

#[derive(Serialize, Deserialize)]
pub struct InvariantReport {
    pub d: u64,
    pub primes: Vec<u64>,
    pub unit_norm: i8,
    pub period_length: usize,
    /// True iff the unit-norm hypothesis holds, so the formulas apply.
    pub supported: bool,
    pub forced: bool,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub warning: Option<String>,
    /// 1-based upper-triangle mod-2 linking entries `[i, j, lk2]`.
    pub lk2: Vec<(usize, usize, u8)>,
    /// Canonical coefficient strings of the characters, in profile order.
    pub characters: Vec<String>,
    pub profile: String,
    pub z: i64,
    pub n_even: u64,
    pub n_odd: u64,
}

pub fn invariant_report(
    t: &PrimeTuple,
    policy: UnitNormPolicy,
) -> Result<InvariantReport, CliError> {
    let field = validate_field(t)?;
    let profile = cs_profile(t, policy)?;
    let supported = field.narrow_equals_wide();
    let forced = policy == UnitNormPolicy::Override;
    let warning = (!supported).then(|| {
        format!(
            "unit norm of Q(sqrt({})) is +1: narrow and wide class groups differ, \
             so these values lie outside the supported hypothesis",
            t.discriminant()
        )
    });

    let matrix = dw_core::Mod2LinkingMatrix::from_primes(t)?;
    let r = t.len();
    let mut lk2 = Vec::new();
    for i in 0..r {
        for j in i + 1..r {
            lk2.push((i + 1, j + 1, matrix.get(i, j).value()));
        }
    }
    let (characters, bits) = profile_strings(&profile);
    let z = profile.dw();
    Ok(InvariantReport {
        d: t.discriminant(),
        primes: t.primes().to_vec(),
        unit_norm: field.unit_norm(),
        period_length: field.period_len(),
        supported,
        forced,
        warning,
        lk2,
        characters,
        profile: bits,
        z: z.value(),
        n_even: z.n_even(),
        n_odd: z.n_odd(),
    })
}

impl InvariantReport {
    pub fn render(&self, format: Format) -> String {
        match format {
            Format::Json => to_json(self),
            Format::Csv => format!(
                "d,primes,unit_norm,z,profile\n{},{},{:+},{},{}\n",
                self.d,
                hyphenated(&self.primes),
                self.unit_norm,
                self.z,
                self.profile
            ),
            Format::Human => {
                let mut out = String::new();
                let factors = self
                    .primes
                    .iter()
                    .map(|p| p.to_string())
                    .collect::<Vec<_>>()
                    .join(" * ");
                out += &format!("d = {} = {}\n", self.d, factors);
                out += &format!(
                    "unit norm = {:+} (period length {}; {})\n",
                    self.unit_norm,
                    self.period_length,
                    if self.supported {
                        "narrow class group = class group"
                    } else {
                        "narrow class group differs: formulas unsupported"
                    }
                );
                out += &render_lk2_matrix(&self.primes, &self.lk2);
                out += "characters and CS values (canonical order):\n";
                for (c, b) in self.characters.iter().zip(self.profile.chars()) {
                    out += &format!("  rho = {c}  CS = {b}\n");
                }
                out += &format!("profile = {}\n", self.profile);
                out += &format!(
                    "Z = {}  (N0 = {}, N1 = {})\n",
                    self.z, self.n_even, self.n_odd
                );
                out
            }
        }
    }
}

fn render_lk2_matrix(primes: &[u64], pairs: &[(usize, usize, u8)]) -> String {
    let r = primes.len();
    let mut grid = vec![vec![0u8; r]; r];
    for &(i, j, v) in pairs {
        grid[i - 1][j - 1] = v;
        grid[j - 1][i - 1] = v;
    }
    let w = primes
        .iter()
        .map(|p| p.to_string().len())
        .max()
        .unwrap_or(1);
    let mut out = String::from("lk2 matrix:\n");
    out += &format!("  {:>w$}", "", w = w + 2);
    for p in primes {
        out += &format!("{p:>w$}", w = w + 2);
    }
    out.push('\n');
    for (i, p) in primes.iter().enumerate() {
        out += &format!("  {p:>w$}", w = w + 2);
        for j in 0..r {
            if i == j {
                out += &format!("{:>w$}", ".", w = w + 2);
            } else {
                out += &format!("{:>w$}", grid[i][j], w = w + 2);
            }
        }
        out.push('\n');
    }
    out
}

// ---------------------------------------------------------------------------
// unit

#[derive(Serialize, Deserialize)]
pub struct UnitReport {
    pub d: u64,
    pub a0: u64,
    pub period: Vec<u64>,
    pub period_length: usize,
    /// Decimal digits of the minimal solution of x^2 - d y^2 = +-1.
    pub x: String,
    pub y: String,
    pub norm: i8,
}

pub fn unit_report(d: u64) -> Result<UnitReport, CliError> {
    let norm = fundamental_unit_norm(d)?; // validates squarefree + nonsquare
    let cf = cf_sqrt(d)?;
    let sol = fundamental_pell_solution(d)?;
    debug_assert_eq!(norm, sol.norm);
    Ok(UnitReport {
        d,
        a0: cf.a0(),
        period: cf.period().to_vec(),
        period_length: cf.period_len(),
        x: sol.x.to_string(),
        y: sol.y.to_string(),
        norm,
    })
}

impl UnitReport {
    pub fn render(&self, format: Format) -> String {
        match format {
            Format::Json => to_json(self),
            Format::Csv => format!(
                "d,period_length,x,y,norm\n{},{},{},{},{:+}\n",
                self.d, self.period_length, self.x, self.y, self.norm
            ),
            Format::Human => {
                let shown: Vec<String> =
                    self.period.iter().take(24).map(|a| a.to_string()).collect();
                let ellipsis = if self.period.len() > 24 { ", ..." } else { "" };
                format!(
                    "d = {}\n\
                     sqrt({}) = [{}; ({}{})] with period length {}\n\
                     minimal solution of x^2 - {} y^2 = +-1: x = {}, y = {}\n\
                     norm = {:+} ({})\n",
                    self.d,
                    self.d,
                    self.a0,
                    shown.join(", "),
                    ellipsis,
                    self.period_length,
                    self.d,
                    self.x,
                    self.y,
                    self.norm,
                    if self.norm == -1 {
                        "negative Pell equation solvable; narrow class group = class group"
                    } else {
                        "negative Pell equation not solvable"
                    }
                )
            }
        }
    }
}

// ---------------------------------------------------------------------------
// topo

#[derive(Serialize, Deserialize)]
pub struct TopoReport {
    pub r: usize,
    pub source: String,
    /// 1-based upper-triangle integer linking numbers `[i, j, lk]`.
    pub lk: Vec<(usize, usize, i64)>,
    pub characters: Vec<String>,
    pub profile: String,
    pub z: i64,
    pub n_even: u64,
    pub n_odd: u64,
}

pub fn topo_report(matrix_json: &str, source: &str) -> Result<TopoReport, CliError> {
    let matrix = IntegerLinkingMatrix::from_json_str(matrix_json)?;
    let profile = topo_profile(&matrix, LinkSource::Topological(source.to_string()));
    let (characters, bits) = profile_strings(&profile);
    let z = profile.dw();
    Ok(TopoReport {
        r: matrix.r(),
        source: source.to_string(),
        lk: matrix
            .pairs()
            .into_iter()
            .map(|(i, j, v)| (i + 1, j + 1, v))
            .collect(),
        characters,
        profile: bits,
        z: z.value(),
        n_even: z.n_even(),
        n_odd: z.n_odd(),
    })
}

impl TopoReport {
    pub fn render(&self, format: Format) -> String {
        match format {
            Format::Json => to_json(self),
            Format::Csv => {
                let pairs = self
                    .lk
                    .iter()
                    .map(|(i, j, v)| format!("{i}-{j}:{v}"))
                    .collect::<Vec<_>>()
                    .join(";");
                format!(
                    "r,lk,z,profile\n{},{},{},{}\n",
                    self.r, pairs, self.z, self.profile
                )
            }
            Format::Human => {
                let mut out = format!("link with {} component(s) from {}\n", self.r, self.source);
                out += "linking numbers (1-based pairs):\n";
                if self.lk.is_empty() {
                    out += "  none (unlink)\n";
                }
                for (i, j, v) in &self.lk {
                    out += &format!("  lk({i}, {j}) = {v}\n");
                }
                out += "characters and CS values (canonical order):\n";
                for (c, b) in self.characters.iter().zip(self.profile.chars()) {
                    out += &format!("  rho = {c}  CS = {b}\n");
                }
                out += &format!("profile = {}\n", self.profile);
                out += &format!(
                    "Z = {}  (N0 = {}, N1 = {})\n",
                    self.z, self.n_even, self.n_odd
                );
                out
            }
        }
    }
}

// ---------------------------------------------------------------------------
// lens

#[derive(Serialize, Deserialize)]
pub struct LensReport {
    pub a: u64,
    pub b: u64,
    pub signed_sum: i64,
    /// CS of the unique nontrivial character.
    pub cs: u8,
    pub z: i64,
}

pub fn lens_report(a: u64, b: u64) -> Result<LensReport, CliError> {
    let params = LensSpaceParams::new(a, b)?;
    Ok(LensReport {
        a,
        b,
        signed_sum: lens_signed_sum(&params),
        cs: lens_cs(&params).value(),
        z: lens_dw(&params).value(),
    })
}

impl LensReport {
    pub fn render(&self, format: Format) -> String {
        match format {
            Format::Json => to_json(self),
            Format::Csv => format!(
                "a,b,signed_sum,cs,z\n{},{},{},{},{}\n",
                self.a, self.b, self.signed_sum, self.cs, self.z
            ),
            Format::Human => format!(
                "two-bridge link B({a}, {b}); branched double cover = lens space L({a}, {b})\n\
                 signed sum over {half} term(s) = {sum}\n\
                 CS(nontrivial rho) = {cs}\n\
                 Z = {z}\n",
                a = self.a,
                b = self.b,
                half = self.b / 2,
                sum = self.signed_sum,
                cs = self.cs,
                z = self.z,
            ),
        }
    }
}

// ---------------------------------------------------------------------------
// dictionary

#[derive(Serialize, Deserialize)]
pub struct DictionaryReport {
    pub d: u64,
    pub primes: Vec<u64>,
    pub arith_profile: String,
    pub topo_profile: String,
    pub arith_z: i64,
    pub topo_z: i64,
    pub pass: bool,
}

pub fn dictionary_report(
    t: &PrimeTuple,
    policy: UnitNormPolicy,
) -> Result<DictionaryReport, CliError> {
    let arith = cs_profile(t, policy)?;
    let topo = induced_topological_profile(t)?;
    let pass = arith.entries() == topo.entries() && arith.dw() == topo.dw();
    Ok(DictionaryReport {
        d: t.discriminant(),
        primes: t.primes().to_vec(),
        arith_profile: arith.bits(),
        topo_profile: topo.bits(),
        arith_z: arith.dw().value(),
        topo_z: topo.dw().value(),
        pass,
    })
}

impl DictionaryReport {
    pub fn render(&self, format: Format) -> String {
        match format {
            Format::Json => to_json(self),
            Format::Csv => format!(
                "d,primes,arith_profile,topo_profile,arith_z,topo_z,pass\n{},{},{},{},{},{},{}\n",
                self.d,
                hyphenated(&self.primes),
                self.arith_profile,
                self.topo_profile,
                self.arith_z,
                self.topo_z,
                if self.pass { "PASS" } else { "FAIL" }
            ),
            Format::Human => format!(
                "d = {} (primes {})\n\
                 arithmetic route:  profile = {}  Z = {}\n\
                 topological route: profile = {}  Z = {}\n\
                 {}\n",
                self.d,
                hyphenated(&self.primes),
                self.arith_profile,
                self.arith_z,
                self.topo_profile,
                self.topo_z,
                if self.pass { "PASS" } else { "FAIL" }
            ),
        }
    }
}
