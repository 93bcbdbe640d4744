//! The `symcoh` command line.
//!
//! Exit codes: 0 success, 1 an identity or correspondence failed, 2 invalid
//! input, 3 a resource guard tripped.

use std::ffi::OsString;
use std::io::Write;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use crate::abelian::{int_to_json, AbElement, AbGroup};
use crate::cochain::{Cochain, CochainSpace};
use crate::cohomology::{cohomology, comparison_map, symmetric_cohomology, CohomologyResult};
use crate::error::{Error, Result};
use crate::extension::{cocycle_from_section, extension_from_cocycle, has_symmetric_section, is_symmetric_cocycle, section_cap, set_section_cap, Section};
use crate::fingroup::{make_group, FinGroup};
use crate::gmodule::{parse_module, GModule};
use crate::guard;
use crate::homogeneous::verify_remark;
use crate::symop::{norm_operator, norm_operator_brute_force, verify_actions, verify_exchange_relations, verify_norm_identity, TauVariant};

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAILED: i32 = 1;
pub const EXIT_INPUT: i32 = 2;
pub const EXIT_GUARD: i32 = 3;

#[derive(Parser, Debug)]
#[command(name = "symcoh", version, about = "Exact ordinary and symmetric cohomology of finite groups")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
    /// Cap on matrix entries (overrides SYMCOH_GUARD_ENTRIES).
    #[arg(long, global = true)]
    pub max_entries: Option<u64>,
    /// Cap on the number of sections or classes enumerated.
    #[arg(long, global = true)]
    pub max_sections: Option<u64>,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// H^n(G, A), or HS^n(G, A) with --symmetric.
    Cohomology(CohomologyArgs),
    /// Check operator identities over a range of degrees.
    Verify(VerifyArgs),
    /// List the classes of H^2(G, A) with their extensions and symmetric sections.
    Extensions(ExtensionArgs),
}

#[derive(Args, Debug)]
pub struct CohomologyArgs {
    #[arg(long)]
    pub group: String,
    #[arg(long)]
    pub module: String,
    #[arg(long)]
    pub degree: usize,
    #[arg(long)]
    pub symmetric: bool,
    /// Also compute the map HS^n → H^n with its kernel and image.
    #[arg(long)]
    pub compare: bool,
    /// Print one representative cocycle per invariant factor.
    #[arg(long)]
    pub representatives: bool,
    #[arg(long)]
    pub json: bool,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Suite {
    Actions,
    Relations,
    Norm,
    Homogeneous,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Fixture {
    SignFlippedTau,
}

#[derive(Args, Debug)]
pub struct VerifyArgs {
    #[arg(long, value_enum)]
    pub suite: Suite,
    #[arg(long)]
    pub group: String,
    #[arg(long)]
    pub module: String,
    #[arg(long, default_value_t = 3)]
    pub max_degree: usize,
    #[arg(long, default_value_t = 0)]
    pub min_degree: usize,
    /// Deliberately corrupted operators, for negative controls.
    #[arg(long, value_enum)]
    pub fixture: Option<Fixture>,
    #[arg(long)]
    pub json: bool,
}

#[derive(Args, Debug)]
pub struct ExtensionArgs {
    #[arg(long)]
    pub group: String,
    #[arg(long)]
    pub module: String,
    #[arg(long)]
    pub json: bool,
}

/// A parsed cohomology request.
#[derive(Clone, Debug)]
pub struct RunConfig {
    pub group: FinGroup,
    pub module: GModule,
    pub degree: usize,
    pub symmetric: bool,
    pub compare: bool,
    pub representatives: bool,
    pub json: bool,
}

impl RunConfig {
    pub fn from_args(a: &CohomologyArgs) -> Result<Self> {
        let (group, module) = load(&a.group, &a.module)?;
        Ok(Self {
            group,
            module,
            degree: a.degree,
            symmetric: a.symmetric,
            compare: a.compare,
            representatives: a.representatives,
            json: a.json,
        })
    }
}

fn load(group: &str, module: &str) -> Result<(FinGroup, GModule)> {
    let g = make_group(group)?;
    let m = parse_module(&g, module)?;
    Ok((g, m))
}

pub fn exit_code(e: &Error) -> i32 {
    if e.is_guard() {
        EXIT_GUARD
    } else {
        EXIT_INPUT
    }
}

/// Parses `args` (including the program name) and runs the command.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = e.exit_code();
            let text = e.render().to_string();
            let _ = if code == 0 { write!(out, "{text}") } else { write!(err, "{text}") };
            return code;
        }
    };
    match execute(&cli, out) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            exit_code(&e)
        }
    }
}

fn execute(cli: &Cli, out: &mut dyn Write) -> Result<i32> {
    if let Some(cap) = guard::entry_cap_from_env()? {
        guard::set_entry_cap(cap);
    }
    if let Some(cap) = cli.max_entries {
        guard::set_entry_cap(cap);
    }
    if let Some(cap) = cli.max_sections {
        set_section_cap(cap);
    }
    match &cli.command {
        Command::Cohomology(a) => cmd_cohomology(&RunConfig::from_args(a)?, out),
        Command::Verify(a) => cmd_verify(a, out),
        Command::Extensions(a) => cmd_extensions(a, out),
    }
}

fn io(e: std::io::Error) -> Error {
    Error::InvalidArgument(format!("write failed: {e}"))
}

fn factors_json(g: &AbGroup) -> Value {
    g.factors().iter().map(int_to_json).collect()
}

fn coords_json(x: &AbElement) -> Value {
    x.coords().iter().map(int_to_json).collect()
}

fn coords_text(x: &AbElement) -> String {
    let c: Vec<String> = x.coords().iter().map(ToString::to_string).collect();
    format!("[{}]", c.join(","))
}

fn result_json(r: &CohomologyResult, cfg: &RunConfig) -> Value {
    let mut v = r.to_json(cfg.representatives);
    v["group"] = json!(cfg.group.label());
    v["module"] = json!(cfg.module.label());
    v
}

pub fn cmd_cohomology(cfg: &RunConfig, out: &mut dyn Write) -> Result<i32> {
    let n = cfg.degree;
    if cfg.compare {
        let c = comparison_map(&cfg.module, n)?;
        if cfg.json {
            let v = json!({
                "group": cfg.group.label(),
                "module": cfg.module.label(),
                "degree": n,
                "ordinary": result_json(&c.ordinary, cfg),
                "symmetric": result_json(&c.symmetric, cfg),
                "comparison": {
                    "matrix": c.map.to_dense().to_rows().iter().map(|r| r.iter().map(int_to_json).collect::<Vec<_>>()).collect::<Vec<_>>(),
                    "kernel": factors_json(&c.kernel),
                    "image": factors_json(&c.image),
                    "injective": c.is_injective(),
                    "isomorphism": c.is_isomorphism(),
                },
            });
            writeln!(out, "{}", serde_json::to_string_pretty(&v).expect("JSON value")).map_err(io)?;
        } else {
            writeln!(out, "H^{n} = {}", c.ordinary.group_value).map_err(io)?;
            writeln!(out, "HS^{n} = {}", c.symmetric.group_value).map_err(io)?;
            writeln!(out, "kernel = {}", c.kernel).map_err(io)?;
            writeln!(out, "image = {}", c.image).map_err(io)?;
            if cfg.representatives {
                write_reps(out, "H", &c.ordinary)?;
                write_reps(out, "HS", &c.symmetric)?;
            }
        }
        return Ok(EXIT_OK);
    }
    let r = if cfg.symmetric { symmetric_cohomology(&cfg.module, n)? } else { cohomology(&cfg.module, n)? };
    if cfg.json {
        writeln!(out, "{}", serde_json::to_string_pretty(&result_json(&r, cfg)).expect("JSON value")).map_err(io)?;
    } else {
        writeln!(out, "{}", r.group_value).map_err(io)?;
        if cfg.representatives {
            write_reps(out, if cfg.symmetric { "HS" } else { "H" }, &r)?;
        }
    }
    Ok(EXIT_OK)
}

fn write_reps(out: &mut dyn Write, name: &str, r: &CohomologyResult) -> Result<()> {
    for (k, rep) in r.representatives.iter().enumerate() {
        writeln!(out, "{name} rep {k} (order {}): {}", r.group_value.factors()[k], coords_text(rep.values())).map_err(io)?;
    }
    Ok(())
}

struct Line {
    degree: usize,
    identity: String,
    indices: Vec<usize>,
    holds: bool,
    asserted: bool,
}

pub fn cmd_verify(a: &VerifyArgs, out: &mut dyn Write) -> Result<i32> {
    let (_, module) = load(&a.group, &a.module)?;
    if a.fixture.is_some() && a.suite != Suite::Relations {
        return Err(Error::InvalidArgument("--fixture only applies to --suite relations".into()));
    }
    if a.min_degree > a.max_degree {
        return Err(Error::InvalidArgument("--min-degree exceeds --max-degree".into()));
    }
    let variant = match a.fixture {
        Some(Fixture::SignFlippedTau) => TauVariant::SignFlipped,
        None => TauVariant::Standard,
    };
    let mut lines = Vec::new();
    for n in a.min_degree..=a.max_degree {
        let space = CochainSpace::new(&module, n)?;
        let mut push = |identity: String, indices: Vec<usize>, holds: bool, asserted: bool| {
            lines.push(Line { degree: n, identity, indices, holds, asserted });
        };
        match a.suite {
            Suite::Actions => {
                for c in verify_actions(&space)? {
                    push(c.identity.to_string(), c.indices, c.holds, true);
                }
            }
            Suite::Relations => {
                for c in verify_exchange_relations(&space, variant)?.checks {
                    push(c.family.describe().to_string(), vec![c.i, c.j], c.holds, true);
                }
            }
            Suite::Norm => {
                let r = verify_norm_identity(&space)?;
                push("(n+2) d_n S_(n+1) = S_(n+2) d_n".into(), vec![], r.identity, true);
                push("d_n S_(n+1) = S_(n+2) d^0".into(), vec![], r.boundary_link, true);
                for (j, &h) in r.face_links.iter().enumerate() {
                    push("S_(n+2) d^j = (-1)^j S_(n+2) d^0".into(), vec![j], h, true);
                }
                if n <= 3 {
                    let w = (1, n + 1);
                    let same = norm_operator(&space, w)?.matrix == norm_operator_brute_force(&space, w)?.matrix;
                    push("S_(n+1) factorization = sum over permutations".into(), vec![], same, true);
                }
            }
            Suite::Homogeneous => {
                let r = verify_remark(&space)?;
                push("d_n j_n = j_(n+1) d~_n".into(), vec![], r.intertwines, true);
                push("j invertible".into(), vec![], r.invertible, true);
                push("d~_(n+1) d~_n = 0".into(), vec![], r.squares_to_zero, true);
                push(format!("homology of d~ = H^n ({} vs {})", r.alt_homology, r.cohomology), vec![], r.homology_matches(), true);
                push("j_(n+1) d_n = d~_n j_n".into(), vec![], r.reversed, false);
                for c in &r.conjugacy {
                    push("tau_i j = j tau~_i".into(), vec![c.i], c.intertwines, false);
                    push("j tau_i = tau~_i j".into(), vec![c.i], c.reversed, false);
                }
            }
        }
    }
    let failed = lines.iter().filter(|l| l.asserted && !l.holds).count();
    let asserted = lines.iter().filter(|l| l.asserted).count();
    if a.json {
        let v = json!({
            "suite": format!("{:?}", a.suite).to_lowercase(),
            "group": a.group,
            "module": module.label(),
            "checks": lines.iter().map(|l| json!({
                "degree": l.degree,
                "identity": l.identity,
                "indices": l.indices,
                "holds": l.holds,
                "asserted": l.asserted,
            })).collect::<Vec<_>>(),
            "passed": failed == 0,
        });
        writeln!(out, "{}", serde_json::to_string_pretty(&v).expect("JSON value")).map_err(io)?;
    } else {
        for l in &lines {
            let status = match (l.asserted, l.holds) {
                (true, true) => "PASS",
                (true, false) => "FAIL",
                (false, true) => "INFO holds",
                (false, false) => "INFO fails",
            };
            let idx = if l.indices.is_empty() {
                String::new()
            } else {
                format!(" {:?}", l.indices)
            };
            writeln!(out, "{status} n={} {}{idx}", l.degree, l.identity).map_err(io)?;
        }
        writeln!(out, "{}/{} identities hold", asserted - failed, asserted).map_err(io)?;
    }
    Ok(if failed == 0 { EXIT_OK } else { EXIT_FAILED })
}

/// One class of `H^2(G, A)` with its extension data.
#[derive(Clone, Debug)]
pub struct ClassReport {
    pub class: AbElement,
    pub representative: Cochain,
    pub extension_order: usize,
    /// The class lies in the image of `HS^2 → H^2`.
    pub symmetric_class: bool,
    pub witness: Option<Section>,
    /// `cocycle_from_section` of the witness passes the symmetric-cocycle test.
    pub witness_cocycle_symmetric: Option<bool>,
}

impl ClassReport {
    pub fn agrees(&self) -> bool {
        self.symmetric_class == self.witness.is_some() && self.witness_cocycle_symmetric != Some(false)
    }
}

/// Every class of `H^2(G, A)` for finite `A`, sorted by representative.
pub fn extension_classes(module: &GModule) -> Result<(AbGroup, AbGroup, Vec<ClassReport>)> {
    if !module.base().is_finite() {
        return Err(Error::InfiniteBase);
    }
    let cmp = comparison_map(module, 2)?;
    let h2 = cmp.ordinary.group_value.clone();
    let image = cmp.map.image()?;
    let count = h2.order().expect("finite coefficients give finite H^2");
    let cap = section_cap() as u128;
    let count_u = count.to_string().parse::<u128>().unwrap_or(u128::MAX);
    if count_u > cap {
        return Err(Error::EnumerationGuard { requested: count_u, cap });
    }
    let space = cmp.ordinary.space().clone();
    let mut reports = Vec::new();
    for k in 0..count_u as usize {
        let class = h2.element_at(k);
        let mut rep = Cochain::zero(&space);
        for (c, r) in class.coords().iter().zip(&cmp.ordinary.representatives) {
            rep = rep.add(&r.scale(c));
        }
        let ext = extension_from_cocycle(&rep)?;
        let (_, witness) = has_symmetric_section(&ext)?;
        let witness_cocycle_symmetric = match &witness {
            Some(w) => Some(is_symmetric_cocycle(&cocycle_from_section(w)?)?),
            None => None,
        };
        reports.push(ClassReport {
            symmetric_class: image.contains(&class),
            class,
            representative: rep,
            extension_order: ext.group().order(),
            witness,
            witness_cocycle_symmetric,
        });
    }
    reports.sort_by(|a, b| a.representative.values().coords().cmp(b.representative.values().coords()));
    Ok((h2, image.group().clone(), reports))
}

fn section_text(s: &Section) -> String {
    let ext = s.extension();
    let base = ext.module().base();
    let parts: Vec<String> = s
        .map()
        .iter()
        .map(|&x| {
            let (a, g) = ext.pair(x);
            format!("({};{g})", coords_text(&base.element_at(a)))
        })
        .collect();
    format!("[{}]", parts.join(","))
}

pub fn cmd_extensions(a: &ExtensionArgs, out: &mut dyn Write) -> Result<i32> {
    let (group, module) = load(&a.group, &a.module)?;
    let (h2, image, reports) = extension_classes(&module)?;
    let ok = reports.iter().all(ClassReport::agrees);
    if a.json {
        let classes: Vec<Value> = reports
            .iter()
            .map(|r| {
                json!({
                    "class": coords_json(&r.class),
                    "representative": coords_json(r.representative.values()),
                    "extension_order": r.extension_order,
                    "symmetric_class": r.symmetric_class,
                    "symmetric_section": r.witness.as_ref().map(Section::to_json),
                    "agrees": r.agrees(),
                })
            })
            .collect();
        let v = json!({
            "group": group.label(),
            "module": module.label(),
            "h2": factors_json(&h2),
            "hs2_image": factors_json(&image),
            "classes": classes,
        });
        writeln!(out, "{}", serde_json::to_string_pretty(&v).expect("JSON value")).map_err(io)?;
    } else {
        writeln!(out, "H^2 = {h2}; image of HS^2 = {image}; {} classes", reports.len()).map_err(io)?;
        for r in &reports {
            let witness = r.witness.as_ref().map_or_else(|| "none".to_string(), section_text);
            writeln!(
                out,
                "class {} |X|={} symmetric={} section={} rep={}",
                coords_text(&r.class),
                r.extension_order,
                if r.symmetric_class { "yes" } else { "no" },
                witness,
                coords_text(r.representative.values()),
            )
            .map_err(io)?;
        }
        if !ok {
            writeln!(out, "FAIL: symmetric classes and symmetric sections disagree").map_err(io)?;
        }
    }
    Ok(if ok { EXIT_OK } else { EXIT_FAILED })
}
