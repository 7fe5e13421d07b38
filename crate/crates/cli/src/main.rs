//! Command-line front end for the workbench: build the reference families,
//! move structure constants in and out as JSON, run the axiom and analysis
//! batteries, classify unknowns, and print calibration reports.
//!
//! Exit codes: 0 on success, 1 when a verification or classification check
//! fails (the report is still emitted), 2 on usage or input errors.

use clap::{Args, Parser, Subcommand, ValueEnum};
use hopf_core::analysis::{self, GrouplikeMode, DEFAULT_BRUTEFORCE_CAP};
use hopf_core::classify::{self, Fingerprint};
use hopf_core::families::{self, FamilyId, FamilyKind};
use hopf_core::field::FieldSpec;
use hopf_core::hopf::{AxiomReport, HopfAlgebra};
use hopf_core::Error as CoreError;
use serde_json::{json, Value};
use std::fmt::Write as _;
use std::fs;
use std::path::{Path, PathBuf};

#[derive(Parser)]
#[command(
    name = "hopf",
    version,
    about = "Exact-arithmetic workbench for Hopf algebras of dimension p^2 \
             over finite fields"
)]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Construct a reference family member and emit its structure constants
    /// as JSON
    Build {
        /// Family name: group-cp2, group-cpxcp, taft, a1..a8, b1..b4
        family: String,
        #[command(flatten)]
        opts: FamilyOpts,
        /// Write to this file instead of stdout
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Run the Hopf-axiom suite on a JSON file or a family name
    Verify {
        /// Path to an algebra JSON file, or a family name
        input: String,
        #[command(flatten)]
        opts: FamilyOpts,
        #[arg(long, value_enum, default_value = "markdown")]
        format: Format,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Full structural report: grouplikes, skew primitives, coradical
    /// filtration, conjugation characters, Frobenius and p-map profiles
    Analyze {
        /// Path to an algebra JSON file, or a family name
        input: String,
        #[command(flatten)]
        opts: FamilyOpts,
        #[arg(long, value_enum, default_value = "markdown")]
        format: Format,
        /// Brute-force bound for the grouplike search (overrides
        /// HOPF_BRUTEFORCE_CAP)
        #[arg(long)]
        cap: Option<u64>,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Match an algebra against the reference types of its dimension and
    /// characteristic
    Classify {
        /// Path to an algebra JSON file, or a family name
        input: String,
        #[command(flatten)]
        opts: FamilyOpts,
        #[arg(long, value_enum, default_value = "markdown")]
        format: Format,
        /// Brute-force bound for the grouplike search (overrides
        /// HOPF_BRUTEFORCE_CAP)
        #[arg(long)]
        cap: Option<u64>,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Print the calibration table of all reference types for a given p
    Report {
        /// Dimension parameter p (the table covers dimension p^2)
        #[arg(long)]
        p: u64,
        /// equal-p: the fourteen types over F_p; taft: the types over a
        /// field of characteristic different from p (needs --q)
        #[arg(long = "char", value_enum)]
        regime: Regime,
        /// Prime order of the coefficient field (taft regime only)
        #[arg(long)]
        q: Option<u64>,
        /// Extension-field modulus over F_q: comma-separated coefficients,
        /// constant term first, monic
        #[arg(long, value_delimiter = ',')]
        modulus: Option<Vec<u64>>,
        #[arg(long, value_enum, default_value = "markdown")]
        format: Format,
        /// Brute-force bound for the grouplike search (overrides
        /// HOPF_BRUTEFORCE_CAP)
        #[arg(long)]
        cap: Option<u64>,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Emit the dual Hopf algebra as JSON
    Dual {
        /// Path to an algebra JSON file, or a family name
        input: String,
        #[command(flatten)]
        opts: FamilyOpts,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
}

/// Parameters that pick one member out of a family.
#[derive(Args, Clone)]
struct FamilyOpts {
    /// Dimension parameter p; the algebra has dimension p^2
    #[arg(long)]
    p: Option<u64>,
    /// Prime order of the coefficient field; defaults to p
    #[arg(long)]
    q: Option<u64>,
    /// Extension-field modulus over F_q: comma-separated coefficients,
    /// constant term first, monic
    #[arg(long, value_delimiter = ',')]
    modulus: Option<Vec<u64>>,
    /// Root of unity for taft, by scalar rank; defaults to the first
    /// primitive p-th root
    #[arg(long)]
    omega: Option<u64>,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Markdown,
    Json,
}

#[derive(Clone, Copy, ValueEnum)]
enum Regime {
    EqualP,
    Taft,
}

/// A failed run, tagged with how it should exit.
enum Failure {
    /// Bad flags, bad files, bad parameter combinations: exit 2.
    Usage(String),
    /// A structural error from the core library; exit code depends on kind.
    Core(CoreError),
}

impl From<CoreError> for Failure {
    fn from(e: CoreError) -> Self {
        Failure::Core(e)
    }
}

type CliResult<T> = Result<T, Failure>;

fn main() {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        // clap exits 2 on usage errors and 0 for --help/--version.
        Err(e) => e.exit(),
    };
    let code = match run(cli) {
        Ok(code) => code,
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            2
        }
        Err(Failure::Core(e)) => {
            eprintln!("error: {e}");
            exit_code_for(&e)
        }
    };
    std::process::exit(code);
}

/// Input errors exit 2; failed mathematical checks exit 1.
fn exit_code_for(e: &CoreError) -> i32 {
    use CoreError::*;
    match e {
        Json(_)
        | NotPrime(_)
        | CharacteristicTooLarge(_)
        | InvalidModulus(_)
        | InvalidFamily(_)
        | InvalidAlgebra(_)
        | NoRootOfUnity { .. }
        | RootInOwnCharacteristic { .. }
        | ScalarLength { .. }
        | CoordinateLength { .. }
        | ShapeMismatch(_)
        | FieldMismatch(_, _)
        | DimensionNotPSquared { .. }
        | ClassifyNeedsPrimeField { .. } => 2,
        _ => 1,
    }
}

fn run(cli: Cli) -> CliResult<i32> {
    match cli.cmd {
        Cmd::Build {
            family,
            opts,
            output,
        } => {
            let id = family_id(&family, &opts)?;
            let h = families::build(&id)?;
            emit(&output, &(h.to_json_string() + "\n"))?;
            Ok(0)
        }
        Cmd::Verify {
            input,
            opts,
            format,
            output,
        } => {
            let (h, label) = load_source(&input, &opts)?;
            let report = h.verify_axioms();
            let pass = report.all_pass();
            let content = match format {
                Format::Markdown => axiom_report_markdown(&label, &report),
                Format::Json => pretty(&json!({
                    "source": label,
                    "all_pass": pass,
                    "checks": report.to_json(),
                })),
            };
            emit(&output, &content)?;
            Ok(if pass { 0 } else { 1 })
        }
        Cmd::Analyze {
            input,
            opts,
            format,
            cap,
            output,
        } => {
            let cap = resolve_cap(cap)?;
            let (h, label) = load_source(&input, &opts)?;
            let (content, pass) = analyze_report(&h, &label, cap, format)?;
            emit(&output, &content)?;
            Ok(if pass { 0 } else { 1 })
        }
        Cmd::Classify {
            input,
            opts,
            format,
            cap,
            output,
        } => {
            let cap = resolve_cap(cap)?;
            let (h, label) = load_source(&input, &opts)?;
            match classify::classify(&h, cap) {
                Ok(verdict) => {
                    let matched = verdict.matched.is_some();
                    let content = match format {
                        Format::Markdown => verdict_markdown(&label, &verdict),
                        Format::Json => {
                            let mut v = verdict.to_json();
                            v["source"] = json!(label);
                            pretty(&v)
                        }
                    };
                    emit(&output, &content)?;
                    Ok(if matched { 0 } else { 1 })
                }
                // A broken import still gets its axiom report.
                Err(CoreError::AxiomsFailed(report)) => {
                    let content = match format {
                        Format::Markdown => axiom_report_markdown(&label, &report),
                        Format::Json => pretty(&json!({
                            "source": label,
                            "all_pass": false,
                            "checks": report.to_json(),
                        })),
                    };
                    emit(&output, &content)?;
                    Ok(1)
                }
                Err(e) => Err(e.into()),
            }
        }
        Cmd::Report {
            p,
            regime,
            q,
            modulus,
            format,
            cap,
            output,
        } => {
            let cap = resolve_cap(cap)?;
            let (rows, title) = match regime {
                Regime::EqualP => {
                    if q.is_some_and(|q| q != p) || modulus.is_some() {
                        return Err(Failure::Usage(
                            "the equal-p table lives over F_p; drop --q/--modulus".into(),
                        ));
                    }
                    let rows = classify::calibration_rows(p, None, cap)?;
                    (rows, format!("reference types at p = {p} over F_{p}"))
                }
                Regime::Taft => {
                    let q = q.ok_or_else(|| {
                        Failure::Usage(
                            "--char taft needs --q, a field of characteristic \
                             different from p"
                                .into(),
                        )
                    })?;
                    let field = build_field(q, &modulus)?;
                    let rows = classify::calibration_rows(p, Some(&field), cap)?;
                    (rows, format!("reference types at p = {p} over {field}"))
                }
            };
            let content = match format {
                Format::Markdown => {
                    format!(
                        "# {title}\n\n{}\n{} types, pairwise distinct\n",
                        classify::report_markdown(&rows),
                        rows.len()
                    )
                }
                Format::Json => pretty(&classify::report_json(&rows)),
            };
            emit(&output, &content)?;
            Ok(0)
        }
        Cmd::Dual {
            input,
            opts,
            output,
        } => {
            let (h, _) = load_source(&input, &opts)?;
            emit(&output, &(h.dual().to_json_string() + "\n"))?;
            Ok(0)
        }
    }
}

// ---- input resolution -------------------------------------------------------

fn resolve_cap(flag: Option<u64>) -> CliResult<u64> {
    if let Some(c) = flag {
        return Ok(c);
    }
    match std::env::var("HOPF_BRUTEFORCE_CAP") {
        Ok(s) => s.trim().parse().map_err(|_| {
            Failure::Usage(format!(
                "HOPF_BRUTEFORCE_CAP must be a nonnegative integer, got \"{s}\""
            ))
        }),
        Err(_) => Ok(DEFAULT_BRUTEFORCE_CAP),
    }
}

fn build_field(q: u64, modulus: &Option<Vec<u64>>) -> CliResult<FieldSpec> {
    Ok(match modulus {
        Some(m) => FieldSpec::extension(q, m)?,
        None => FieldSpec::prime(q)?,
    })
}

/// Resolve a family name plus flags into a fully validated instance.
fn family_id(name: &str, opts: &FamilyOpts) -> CliResult<FamilyId> {
    let kind = FamilyKind::from_cli_name(name).ok_or_else(|| {
        Failure::Usage(format!(
            "unknown family \"{name}\"; expected one of group-cp2, group-cpxcp, \
             taft, a1..a8, b1..b4"
        ))
    })?;
    let p = opts
        .p
        .ok_or_else(|| Failure::Usage(format!("family {name} needs --p")))?;
    let id = match kind {
        FamilyKind::Taft => {
            if opts.q.is_none() && opts.modulus.is_none() {
                return Err(Failure::Usage(
                    "taft needs --q, a field of characteristic different from p".into(),
                ));
            }
            let field = build_field(opts.q.unwrap_or(p), &opts.modulus)?;
            let omega = match opts.omega {
                Some(rank) => {
                    if rank >= field.order() {
                        return Err(Failure::Usage(format!(
                            "--omega {rank} is out of range for {field}"
                        )));
                    }
                    field.scalar_from_rank(rank)
                }
                None => families::primitive_pth_roots(&field, p)?[0].clone(),
            };
            FamilyId::taft(p, field, omega)?
        }
        FamilyKind::GroupCp2 => FamilyId::group_cp2(p, build_field(opts.q.unwrap_or(p), &opts.modulus)?)?,
        FamilyKind::GroupCpxCp => {
            FamilyId::group_cpxcp(p, build_field(opts.q.unwrap_or(p), &opts.modulus)?)?
        }
        _ => {
            if opts.q.is_some_and(|q| q != p) || opts.modulus.is_some() {
                return Err(Failure::Usage(format!(
                    "family {name} lives over F_p; drop --q/--modulus"
                )));
            }
            if opts.omega.is_some() {
                return Err(Failure::Usage(format!(
                    "--omega only applies to taft, not {name}"
                )));
            }
            FamilyId::char_p(kind, p)?
        }
    };
    Ok(id)
}

/// A positional input is a JSON file if it names an existing file, otherwise
/// a family name.
fn load_source(input: &str, opts: &FamilyOpts) -> CliResult<(HopfAlgebra, String)> {
    if Path::new(input).exists() {
        let text = fs::read_to_string(input)
            .map_err(|e| Failure::Usage(format!("cannot read {input}: {e}")))?;
        // serde_json's parse errors carry line/column positions.
        let v: Value = serde_json::from_str(&text)
            .map_err(|e| Failure::Usage(format!("{input}: {e}")))?;
        let h = HopfAlgebra::from_json(&v)?;
        Ok((h, input.to_string()))
    } else if FamilyKind::from_cli_name(input).is_some() {
        let id = family_id(input, opts)?;
        let label = format!("{} (p = {}, {})", id.display_name(), id.p(), id.field());
        let h = families::build(&id)?;
        Ok((h, label))
    } else {
        Err(Failure::Usage(format!(
            "\"{input}\" is neither an existing file nor a known family name"
        )))
    }
}

// ---- output -----------------------------------------------------------------

fn emit(target: &Option<PathBuf>, content: &str) -> CliResult<()> {
    match target {
        Some(path) => {
            fs::write(path, content)
                .map_err(|e| Failure::Usage(format!("cannot write {}: {e}", path.display())))?;
            eprintln!("wrote {}", path.display());
        }
        None => print!("{content}"),
    }
    Ok(())
}

fn pretty(v: &Value) -> String {
    serde_json::to_string_pretty(v).expect("JSON serialization cannot fail") + "\n"
}

fn yes_no(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

fn axiom_report_markdown(label: &str, report: &AxiomReport) -> String {
    let mut out = format!("# axiom report: {label}\n\n");
    out.push_str("| check | pass | counterexample |\n|---|---|---|\n");
    for c in &report.checks {
        let ce = match &c.counterexample {
            Some(ix) => format!("{ix:?}"),
            None => "-".to_string(),
        };
        let _ = writeln!(out, "| {} | {} | {} |", c.axiom, yes_no(c.pass), ce);
    }
    let _ = writeln!(
        out,
        "\nresult: {}",
        if report.all_pass() {
            "all checks pass".to_string()
        } else {
            let failed: Vec<&str> = report
                .checks
                .iter()
                .filter(|c| !c.pass)
                .map(|c| c.axiom)
                .collect();
            format!("FAILED ({})", failed.join(", "))
        }
    );
    out
}

fn verdict_markdown(label: &str, verdict: &classify::TypeVerdict) -> String {
    let mut out = format!("# classification: {label}\n\n");
    let _ = writeln!(
        out,
        "matched: {}\n",
        verdict.matched.as_deref().unwrap_or("unknown")
    );
    let _ = writeln!(out, "note: {}\n", verdict.note);
    out.push_str("## fingerprint\n\n");
    out.push_str(&classify::report_markdown(&[(
        "input".to_string(),
        verdict.fingerprint.clone(),
    )]));
    out.push_str("\n## calibration\n\n");
    out.push_str(&classify::report_markdown(&verdict.calibration));
    let _ = writeln!(
        out,
        "\ncalibration rows pairwise distinct: {}",
        yes_no(verdict.calibration_distinct)
    );
    out
}

// ---- analyze ------------------------------------------------------------------

/// Everything the analyze subcommand reports, in both formats, plus the
/// aggregated pass flag. When the axioms fail the structural sections are
/// skipped: nothing downstream is meaningful on a non-Hopf input.
fn analyze_report(
    h: &HopfAlgebra,
    label: &str,
    cap: u64,
    format: Format,
) -> CliResult<(String, bool)> {
    let axioms = h.verify_axioms();
    if !axioms.all_pass() {
        let content = match format {
            Format::Markdown => {
                axiom_report_markdown(label, &axioms)
                    + "\nstructural analysis skipped: the input is not a Hopf algebra\n"
            }
            Format::Json => pretty(&json!({
                "source": label,
                "axioms": { "all_pass": false, "checks": axioms.to_json() },
                "all_pass": false,
                "note": "structural analysis skipped: the input is not a Hopf algebra",
            })),
        };
        return Ok((content, false));
    }

    let fld = h.field();
    let g = analysis::grouplikes(h, &GrouplikeMode::Auto { cap })?;
    let flags = analysis::structure_flags(h);
    let antipode_order = analysis::antipode_order(h, None)?;
    let h0 = g.span(h);
    let unit = h.unit_element();
    let elements = g.elements().to_vec();

    // Skew primitive dimensions over every ordered grouplike pair.
    let p11 = analysis::skew_primitives(h, &unit, &unit)?;
    let mut quotient_multiset = Vec::new();
    let mut nonzero_pairs: Vec<(String, String, usize)> = Vec::new();
    let mut character_pairs: Vec<(usize, usize)> = Vec::new();
    for (ai, a) in elements.iter().enumerate() {
        for (bi, b) in elements.iter().enumerate() {
            let q = analysis::skew_primitives(h, a, b)?.quotient_dim(&h0)?;
            quotient_multiset.push(q);
            if q > 0 {
                nonzero_pairs.push((h.element_string(a), h.element_string(b), q));
                if ai != bi {
                    character_pairs.push((ai, bi));
                }
            }
        }
    }
    quotient_multiset.sort_unstable();

    // Coradical filtration; a stall is reported, not fatal.
    let filtration = match analysis::coradical_filtration(h, &g) {
        Ok(f) => Ok(f),
        Err(CoreError::FiltrationStalled { reached, dim }) => Err((reached, dim)),
        Err(e) => return Err(e.into()),
    };
    let (filt_json, filt_md, filt_pass) = match &filtration {
        Ok(f) => {
            let exhausts = *f.dims.last().unwrap_or(&0) == h.dim();
            let compat = analysis::filtration_compatibility(h, f);
            let tw = analysis::taft_wilson_check(h, &g, f)?;
            let pass = exhausts && compat.pass && tw.pass;
            let md = format!(
                "dims {:?}; stabilizes at index {}; exhausts the algebra: {}\n\
                 coproduct compatibility: {}\ndegree-one decomposition: {}\n",
                f.dims,
                f.stabilization_index,
                yes_no(exhausts),
                yes_no(compat.pass),
                yes_no(tw.pass),
            );
            let j = json!({
                "ok": true,
                "dims": f.dims,
                "stabilization_index": f.stabilization_index,
                "exhausts": exhausts,
                "coproduct_compatibility": compat.to_json(),
                "degree_one": tw.to_json(),
            });
            (j, md, pass)
        }
        Err((reached, dim)) => {
            let md = format!(
                "STALLED: reached dimension {reached} of {dim} without growing\n"
            );
            (
                json!({ "ok": false, "stalled_at_dim": reached, "ambient": dim }),
                md,
                false,
            )
        }
    };

    // Conjugation characters at every distinct pair with room beyond the
    // grouplike span.
    let mut characters_json = Vec::new();
    let mut characters_md = String::new();
    let mut laws_pass = true;
    for &(ai, bi) in &character_pairs {
        let (ga, gb) = (&elements[ai], &elements[bi]);
        let (ga_s, gb_s) = (h.element_string(ga), h.element_string(gb));
        match analysis::canonical_character_witness(h, &g, ga, gb) {
            Ok(witness) => {
                let ch = analysis::conjugation_character(h, &g, ga, gb, &witness)?;
                let laws = analysis::character_laws_hold(h, &g, &ch);
                laws_pass &= laws;
                let regime = if ch.additive {
                    "additive"
                } else {
                    "multiplicative"
                };
                let values: Vec<Value> = elements
                    .iter()
                    .zip(&ch.values)
                    .map(|(e, v)| {
                        json!({
                            "grouplike": h.element_string(e),
                            "value": fld.scalar_string(v),
                        })
                    })
                    .collect();
                let _ = writeln!(
                    characters_md,
                    "pair ({ga_s}, {gb_s}): witness {}, {} regime, laws hold: {}",
                    h.element_string(&witness),
                    regime,
                    yes_no(laws)
                );
                for (e, v) in elements.iter().zip(&ch.values) {
                    let _ = writeln!(
                        characters_md,
                        "  value at {}: {}",
                        h.element_string(e),
                        fld.scalar_string(v)
                    );
                }
                characters_json.push(json!({
                    "g": ga_s,
                    "k": gb_s,
                    "witness": h.element_string(&witness),
                    "regime": regime,
                    "values": values,
                    "laws_hold": laws,
                }));
            }
            Err(CoreError::NoCharacterWitness) => {
                let _ = writeln!(
                    characters_md,
                    "pair ({ga_s}, {gb_s}): no canonical witness"
                );
                characters_json.push(json!({
                    "g": ga_s,
                    "k": gb_s,
                    "witness": Value::Null,
                }));
            }
            Err(e) => return Err(e.into()),
        }
    }

    // Profiles only where defined.
    let frobenius = if flags.commutative && fld.degree() == 1 {
        Some(analysis::frobenius_profile(h)?)
    } else {
        None
    };
    let p_map = if fld.degree() == 1 && p11.dim() > 0 {
        match analysis::p_map_on_primitives(h, &p11) {
            Ok(profile) => Some(profile),
            Err(CoreError::InvalidAlgebra(_)) | Err(CoreError::PMapEscapes) => None,
            Err(e) => return Err(e.into()),
        }
    } else {
        None
    };

    let fingerprint: Fingerprint = classify::fingerprint(h, cap)?;
    let all_pass = filt_pass && laws_pass;

    let content = match format {
        Format::Markdown => {
            let mut out = format!("# analysis: {label}\n\n");
            let _ = writeln!(out, "dimension {} over {}\n", h.dim(), fld);
            out.push_str("## axioms\n\nall 6 checks pass\n\n");
            out.push_str("## structure\n\n");
            let _ = writeln!(out, "commutative: {}", yes_no(flags.commutative));
            let _ = writeln!(out, "cocommutative: {}", yes_no(flags.cocommutative));
            let _ = writeln!(out, "antipode order: {antipode_order}\n");
            out.push_str("## grouplikes\n\n");
            let _ = writeln!(
                out,
                "count {}, exponent {}, abelian: {}, search exhaustive: {}\n",
                g.len(),
                g.exponent(),
                yes_no(g.is_abelian()),
                yes_no(g.complete()),
            );
            out.push_str("| element | order |\n|---|---|\n");
            for (i, e) in elements.iter().enumerate() {
                let _ = writeln!(out, "| {} | {} |", h.element_string(e), g.order_of(i));
            }
            out.push_str("\n## skew primitives\n\n");
            let _ = writeln!(out, "dim P(1,1) = {}", p11.dim());
            if nonzero_pairs.is_empty() {
                out.push_str("no pair exceeds the grouplike span\n");
            } else {
                out.push_str("pairs exceeding the grouplike span:\n\n");
                out.push_str("| g | k | dim beyond span |\n|---|---|---|\n");
                for (a, b, q) in &nonzero_pairs {
                    let _ = writeln!(out, "| {a} | {b} | {q} |");
                }
            }
            out.push_str("\n## coradical filtration\n\n");
            out.push_str(&filt_md);
            out.push_str("\n## conjugation characters\n\n");
            if character_pairs.is_empty() {
                out.push_str("no distinct grouplike pair carries skew primitives beyond the span\n");
            } else {
                out.push_str(&characters_md);
            }
            out.push_str("\n## profiles\n\n");
            match &frobenius {
                Some(fr) => {
                    let _ = writeln!(
                        out,
                        "frobenius: image dim {}, kernel dim {}",
                        fr.image_dim, fr.kernel_dim
                    );
                }
                None => out.push_str("frobenius: not defined here\n"),
            }
            match &p_map {
                Some(pm) => {
                    let _ = writeln!(
                        out,
                        "p-map on primitives: rank {}, nilpotent: {}",
                        pm.rank,
                        yes_no(pm.nilpotent)
                    );
                }
                None => out.push_str("p-map on primitives: not defined here\n"),
            }
            out.push_str("\n## fingerprint\n\n");
            out.push_str(&classify::report_markdown(&[(
                "input".to_string(),
                fingerprint.clone(),
            )]));
            let _ = writeln!(out, "\nresult: {}", if all_pass { "all structural checks pass" } else { "FAILED" });
            out
        }
        Format::Json => pretty(&json!({
            "source": label,
            "dim": h.dim(),
            "field": fld.to_json(),
            "axioms": { "all_pass": true, "checks": axioms.to_json() },
            "flags": {
                "commutative": flags.commutative,
                "cocommutative": flags.cocommutative,
            },
            "antipode_order": antipode_order,
            "grouplikes": {
                "count": g.len(),
                "exponent": g.exponent(),
                "abelian": g.is_abelian(),
                "exhaustive": g.complete(),
                "elements": elements
                    .iter()
                    .enumerate()
                    .map(|(i, e)| json!({
                        "element": h.element_string(e),
                        "order": g.order_of(i),
                    }))
                    .collect::<Vec<_>>(),
            },
            "skew_primitives": {
                "dim_p11": p11.dim(),
                "quotient_multiset": quotient_multiset,
                "nonzero_pairs": nonzero_pairs
                    .iter()
                    .map(|(a, b, q)| json!({ "g": a, "k": b, "dim": q }))
                    .collect::<Vec<_>>(),
            },
            "filtration": filt_json,
            "characters": characters_json,
            "profiles": {
                "frobenius": frobenius.as_ref().map(|fr| json!({
                    "image_dim": fr.image_dim,
                    "kernel_dim": fr.kernel_dim,
                })),
                "p_map": p_map.as_ref().map(|pm| json!({
                    "rank": pm.rank,
                    "nilpotent": pm.nilpotent,
                })),
            },
            "fingerprint": fingerprint.to_json(),
            "all_pass": all_pass,
        })),
    };
    Ok((content, all_pass))
}
