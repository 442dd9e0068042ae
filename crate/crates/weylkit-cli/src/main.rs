//! Command-line front end for the weylkit exact-algebra kernels.
//! Every verb prints a machine-readable report (JSON by default, CSV on
//! request) and exits 0 on success, 1 on a failed verification, 2 on a
//! usage error.

use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use weylkit_core::cartan::{compositions, CartanData, GlWeight};
use weylkit_core::convolution::{steinberg_algebra, verify_steinberg, FiniteMap, LabeledSet};
use weylkit_core::degeneration::{all_degenerate, degeneration_check};
use weylkit_core::error::AlgError;
use weylkit_core::hecke::{coeff_vars, HeckeElement, HeckeKind};
use weylkit_core::laurent::{varlist, LaurentPoly, VarList};
use weylkit_core::ops::{all_pass, verify_realization};
use weylkit_core::rational::{parse_rational, rat_int, render_rational, Rational};
use weylkit_core::schurweyl::{schur_weyl_check_with_guard, DEFAULT_TENSOR_GUARD};
use weylkit_core::springer::{
    component_count, dominant_weight, drinfeld_polynomials, render_u_poly, ComponentCount,
    DrinfeldInput, FlagType, JordanData,
};

#[derive(Parser)]
#[command(
    name = "weylkit",
    version,
    about = "Exact computations in Weyl groups, Hecke algebras, tensor commutants, \
             fixed-flag counting, and finite convolution algebras"
)]
struct Cli {
    #[command(subcommand)]
    verb: Verb,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Csv,
}

#[derive(Args)]
struct OutputArgs {
    /// Output format.
    #[arg(long, value_enum, default_value = "json")]
    format: Format,
    /// Write the report to this file (atomically) instead of stdout.
    #[arg(long)]
    output: Option<PathBuf>,
}

#[derive(Args)]
struct CartanArgs {
    /// Built-in Cartan type label (A1, A2, A3, A4, B2).
    #[arg(long = "type")]
    type_label: Option<String>,
    /// Cartan matrix file: first line the rank, then the matrix rows.
    #[arg(long)]
    cartan_file: Option<PathBuf>,
}

#[derive(Subcommand)]
enum Verb {
    /// Evaluate an algebra-element expression to canonical text form.
    HeckeMul {
        #[command(flatten)]
        cartan: CartanArgs,
        /// Algebra flavor: finite, affine, degenerate, or nil.
        #[arg(long)]
        algebra: String,
        /// Element expression, e.g. "T[1]*T[1]".
        expr: String,
        #[command(flatten)]
        out: OutputArgs,
    },
    /// Run the deterministic relation checks for one algebra flavor.
    HeckeCheck {
        #[command(flatten)]
        cartan: CartanArgs,
        /// Algebra flavor: finite, affine, degenerate, or nil.
        #[arg(long)]
        algebra: String,
        #[command(flatten)]
        out: OutputArgs,
    },
    /// Verify the operator realization of one algebra flavor.
    OpsVerify {
        #[command(flatten)]
        cartan: CartanArgs,
        /// Algebra flavor: finite, affine, degenerate, or nil.
        #[arg(long)]
        algebra: String,
        /// Monomial sweep degree bound.
        #[arg(long, default_value_t = 4)]
        degree_bound: usize,
        #[command(flatten)]
        out: OutputArgs,
    },
    /// Check that the graded limit recovers the degenerate relations.
    Degenerate {
        #[command(flatten)]
        cartan: CartanArgs,
        /// Series truncation order.
        #[arg(long, default_value_t = 3)]
        order: i64,
        #[command(flatten)]
        out: OutputArgs,
    },
    /// Compare the permutation commutant, the generated matrix algebra,
    /// and the partition-sum dimension on the d-th tensor power.
    SchurWeyl {
        /// Local dimension.
        #[arg(long)]
        n: usize,
        /// Number of tensor factors.
        #[arg(long)]
        d: usize,
        /// Guard on the tensor-space dimension n^d.
        #[arg(long, default_value_t = DEFAULT_TENSOR_GUARD)]
        guard: usize,
        #[command(flatten)]
        out: OutputArgs,
    },
    /// Kernel-jump weight of a nilpotent Jordan type.
    SpringerWeight {
        /// Jordan block sizes, comma separated, e.g. 2,1.
        #[arg(long)]
        jordan: String,
        /// Number of flag steps.
        #[arg(long)]
        steps: usize,
        #[command(flatten)]
        out: OutputArgs,
    },
    /// Count top-dimensional components of the stable-flag variety by
    /// exact interpolation of finite-field point counts.
    SpringerComponents {
        /// Jordan block sizes, comma separated.
        #[arg(long)]
        jordan: String,
        /// Number of flag steps.
        #[arg(long)]
        steps: usize,
        /// Restrict to one flag type: step dimension jumps, comma separated.
        #[arg(long)]
        flag_type: Option<String>,
        /// Largest interpolation node allowed.
        #[arg(long)]
        max_q: Option<u64>,
        #[command(flatten)]
        out: OutputArgs,
    },
    /// Characteristic polynomials of a semisimple scaling on the extreme
    /// flag quotients of a nilpotent.
    SpringerDrinfeld {
        /// Jordan block sizes, comma separated.
        #[arg(long)]
        jordan: String,
        /// Number of flag steps.
        #[arg(long)]
        steps: usize,
        /// Scaling factor: rational prefix then symbol letters, e.g. 3 or q.
        #[arg(long)]
        q: String,
        /// Eigenvalues, comma separated, same grammar, e.g. 3a,a.
        #[arg(long)]
        s: String,
        #[command(flatten)]
        out: OutputArgs,
    },
    /// Decompose the pair algebra of a finite map into matrix blocks.
    ConvolutionDemo {
        /// Target set size.
        #[arg(long)]
        target_size: usize,
        /// Image of each source element as 1-based target positions,
        /// comma separated, e.g. 1,1,2.
        #[arg(long)]
        assignment: String,
        #[command(flatten)]
        out: OutputArgs,
    },
}

enum Failure {
    Usage(String),
    Check(String),
}

struct Output {
    json: Value,
    csv: String,
    pass: bool,
}

fn usage<T>(r: Result<T, AlgError>) -> Result<T, Failure> {
    r.map_err(|e| Failure::Usage(e.to_string()))
}

fn check<T>(r: Result<T, AlgError>) -> Result<T, Failure> {
    r.map_err(|e| Failure::Check(e.to_string()))
}

fn resolve_cartan(args: &CartanArgs) -> Result<CartanData, Failure> {
    match (&args.type_label, &args.cartan_file) {
        (Some(label), None) => usage(CartanData::by_label(label)),
        (None, Some(path)) => {
            let text = fs::read_to_string(path)
                .map_err(|e| Failure::Usage(format!("--cartan-file {}: {e}", path.display())))?;
            usage(CartanData::parse_text(&text))
        }
        (Some(_), Some(_)) => Err(Failure::Usage(
            "--type and --cartan-file are mutually exclusive".into(),
        )),
        (None, None) => Err(Failure::Usage(
            "one of --type or --cartan-file is required".into(),
        )),
    }
}

fn resolve_kind(algebra: &str) -> Result<HeckeKind, Failure> {
    match algebra {
        "finite" => Ok(HeckeKind::Finite),
        "affine" => Ok(HeckeKind::Affine),
        "degenerate" => Ok(HeckeKind::Degenerate),
        "nil" => Ok(HeckeKind::Nil),
        other => Err(Failure::Usage(format!(
            "--algebra must be finite, affine, degenerate, or nil (got {other})"
        ))),
    }
}

fn parse_usize_list(flag: &str, text: &str) -> Result<Vec<usize>, Failure> {
    text.split(',')
        .map(|part| {
            part.trim()
                .parse::<usize>()
                .map_err(|e| Failure::Usage(format!("{flag}: bad entry {part:?}: {e}")))
        })
        .collect()
}

fn csv_escape(s: &str) -> String {
    if s.contains(',') || s.contains('"') || s.contains('\n') {
        format!("\"{}\"", s.replace('"', "\"\""))
    } else {
        s.to_string()
    }
}

/// Key,value CSV fallback for non-tabular reports.
fn kv_csv(obj: &Value) -> String {
    let mut out = String::from("key,value\n");
    if let Some(map) = obj.as_object() {
        for (k, v) in map {
            let rendered = match v {
                Value::String(s) => s.clone(),
                other => other.to_string(),
            };
            out.push_str(&format!("{k},{}\n", csv_escape(&rendered)));
        }
    }
    out
}

// ---------------------------------------------------------------------------
// Verb handlers.

fn run_hecke_mul(cartan: &CartanData, kind: HeckeKind, expr: &str) -> Result<Output, Failure> {
    let elem = usage(HeckeElement::parse(kind, cartan, expr))?;
    let rendered = elem.render();
    // Printed form must re-parse to the same normal form.
    let back = check(HeckeElement::parse(kind, cartan, &rendered))?;
    if back != elem {
        return Err(Failure::Check(format!(
            "round-trip mismatch: {rendered} re-parses differently"
        )));
    }
    let json = json!({
        "type": cartan.label(),
        "algebra": kind.name(),
        "input": expr,
        "result": rendered,
    });
    let csv = kv_csv(&json);
    Ok(Output { json, csv, pass: true })
}

fn braid_words(i: usize, j: usize, m: usize) -> (Vec<usize>, Vec<usize>) {
    let mut a = Vec::with_capacity(m);
    let mut b = Vec::with_capacity(m);
    for k in 0..m {
        a.push(if k % 2 == 0 { i } else { j });
        b.push(if k % 2 == 0 { j } else { i });
    }
    (a, b)
}

/// Deterministic element family used for the associativity sweep: the
/// unit, every generator, adjacent two-letter words, and one coefficient
/// monomial of the flavor.
fn element_family(kind: HeckeKind, cartan: &CartanData) -> Result<Vec<HeckeElement>, AlgError> {
    let rank = cartan.rank();
    let vars = coeff_vars(kind, rank);
    let mut family = vec![HeckeElement::unit(kind, cartan)];
    for i in 0..rank {
        family.push(HeckeElement::basis(kind, cartan, &[i])?);
    }
    for i in 0..rank.saturating_sub(1) {
        family.push(HeckeElement::basis(kind, cartan, &[i, i + 1])?);
    }
    if !vars.is_empty() {
        let exps: Vec<i64> = (0..vars.len())
            .map(|k| if k == vars.len() - 1 { 1 } else { 0 })
            .collect();
        let mono = LaurentPoly::monomial(&vars, exps, rat_int(2))?;
        family.push(HeckeElement::unit(kind, cartan).mul_coeff(&mono)?);
    }
    Ok(family)
}

fn run_hecke_check(cartan: &CartanData, kind: HeckeKind) -> Result<Output, Failure> {
    let rank = cartan.rank();
    let vars = coeff_vars(kind, rank);
    let unit = HeckeElement::unit(kind, cartan);
    let zero = HeckeElement::zero(kind, cartan);
    let mut checks: Vec<(String, bool)> = Vec::new();

    // Quadratic relation per generator, by flavor.
    for i in 0..rank {
        let t = check(HeckeElement::basis(kind, cartan, &[i]))?;
        let pass = match kind {
            HeckeKind::Finite | HeckeKind::Affine => {
                let q = check(LaurentPoly::var(&vars, "q"))?;
                let tq = check(unit.mul_coeff(&q))?;
                let lhs = check(check(t.add(&unit))?.mul(&check(t.sub(&tq))?))?;
                lhs == zero
            }
            HeckeKind::Degenerate => check(t.mul(&t))? == unit,
            HeckeKind::Nil => check(t.mul(&t))? == zero,
        };
        checks.push((format!("quadratic(s{})", i + 1), pass));
    }

    // Braid relation per generator pair.
    for i in 0..rank {
        for j in (i + 1)..rank {
            let m = check(cartan.braid_order(i, j))?;
            let (wa, wb) = braid_words(i, j, m);
            let lhs = check(HeckeElement::basis(kind, cartan, &wa))?;
            let rhs = check(HeckeElement::basis(kind, cartan, &wb))?;
            checks.push((format!("braid(s{},s{})", i + 1, j + 1), lhs == rhs));
        }
    }

    // Associativity over the deterministic family.
    let family = check(element_family(kind, cartan))?;
    let mut assoc = true;
    for a in &family {
        for b in &family {
            for c in &family {
                let left = check(check(a.mul(b))?.mul(c))?;
                let right = check(a.mul(&check(b.mul(c))?))?;
                if left != right {
                    assoc = false;
                }
            }
        }
    }
    checks.push((format!("associativity({} triples)", family.len().pow(3)), assoc));

    // At q = 1 the finite flavor is the integral group ring.
    if kind == HeckeKind::Finite && rank <= 3 {
        let elems = check(cartan.all_elements())?;
        let mut ok = true;
        for u in &elems {
            for v in &elems {
                let prod = check(check(
                    HeckeElement::basis_of(kind, cartan, u)
                        .mul(&HeckeElement::basis_of(kind, cartan, v)),
                )?
                .specialize("q", &rat_int(1)))?;
                if prod != HeckeElement::basis_of(kind, cartan, &cartan.mul(u, v)) {
                    ok = false;
                }
            }
        }
        checks.push((format!("group-ring(q=1, {} pairs)", elems.len().pow(2)), ok));
    }

    let pass = checks.iter().all(|(_, p)| *p);
    let json = json!({
        "type": cartan.label(),
        "algebra": kind.name(),
        "checks": checks
            .iter()
            .map(|(name, p)| json!({"name": name, "pass": p}))
            .collect::<Vec<_>>(),
        "pass": pass,
    });
    let mut csv = String::from("check,pass\n");
    for (name, p) in &checks {
        csv.push_str(&format!("{},{p}\n", csv_escape(name)));
    }
    Ok(Output { json, csv, pass })
}

fn run_ops_verify(
    cartan: &CartanData,
    kind: HeckeKind,
    degree_bound: usize,
) -> Result<Output, Failure> {
    let reports = check(verify_realization(kind, cartan, degree_bound))?;
    let pass = all_pass(&reports);
    let json = json!({
        "type": cartan.label(),
        "algebra": kind.name(),
        "degree_bound": degree_bound,
        "relations": reports
            .iter()
            .map(|r| {
                json!({
                    "relation": r.relation,
                    "pass": r.pass,
                    "counterexample": r.counterexample,
                })
            })
            .collect::<Vec<_>>(),
        "pass": pass,
    });
    let mut csv = String::from("relation,pass,counterexample\n");
    for r in &reports {
        csv.push_str(&format!(
            "{},{},{}\n",
            csv_escape(&r.relation),
            r.pass,
            csv_escape(r.counterexample.as_deref().unwrap_or(""))
        ));
    }
    Ok(Output { json, csv, pass })
}

fn run_degenerate(cartan: &CartanData, order: i64) -> Result<Output, Failure> {
    let reports = usage(degeneration_check(cartan, order))?;
    let pass = all_degenerate(&reports);
    let json = json!({
        "type": cartan.label(),
        "order": order,
        "relations": reports
            .iter()
            .map(|r| {
                json!({
                    "relation": r.relation,
                    "lowest_degree": r.lowest_degree,
                    "expected_degree": r.expected_degree,
                    "recovered": r.recovered,
                    "expected": r.expected,
                    "pass": r.pass,
                })
            })
            .collect::<Vec<_>>(),
        "pass": pass,
    });
    let mut csv = String::from("relation,lowest_degree,expected_degree,pass\n");
    for r in &reports {
        csv.push_str(&format!(
            "{},{},{},{}\n",
            csv_escape(&r.relation),
            r.lowest_degree.map_or(String::new(), |d| d.to_string()),
            r.expected_degree.map_or(String::new(), |d| d.to_string()),
            r.pass
        ));
    }
    Ok(Output { json, csv, pass })
}

fn run_schur_weyl(n: usize, d: usize, guard: usize) -> Result<Output, Failure> {
    let r = usage(schur_weyl_check_with_guard(n, d, guard))?;
    let json = json!({
        "n": r.n,
        "d": r.d,
        "commutant_dim": r.commutant_dim,
        "image_dim": r.image_dim,
        "theoretical_dim": r.theoretical_dim,
        "pass": r.pass,
    });
    let csv = format!(
        "n,d,commutant_dim,image_dim,theoretical_dim,pass\n{},{},{},{},{},{}\n",
        r.n, r.d, r.commutant_dim, r.image_dim, r.theoretical_dim, r.pass
    );
    Ok(Output { json, csv, pass: r.pass })
}

fn parse_jordan(text: &str) -> Result<JordanData, Failure> {
    let blocks = parse_usize_list("--jordan", text)?;
    usage(JordanData::new(blocks))
}

fn render_weight(w: &GlWeight) -> String {
    let inner: Vec<String> = w.iter().map(|v| v.to_string()).collect();
    format!("({})", inner.join(","))
}

fn run_springer_weight(jordan: &str, steps: usize) -> Result<Output, Failure> {
    let x = parse_jordan(jordan)?;
    let weight = usage(dominant_weight(&x, steps))?;
    let json = json!({
        "jordan": x.blocks(),
        "steps": steps,
        "weight": weight,
        "rendered": render_weight(&weight),
    });
    let csv = kv_csv(&json);
    Ok(Output { json, csv, pass: true })
}

fn component_json(dims: &[usize], cc: &ComponentCount) -> Value {
    json!({
        "dims": dims,
        "count": cc.count,
        "dimension": cc.dimension,
        "poly": cc.poly.iter().map(render_rational).collect::<Vec<_>>(),
        "nodes": cc.nodes,
        "held_out": cc.held_out,
    })
}

fn enforce_max_q(cc: &ComponentCount, max_q: Option<u64>) -> Result<(), Failure> {
    if let Some(cap) = max_q {
        let largest = cc.nodes.iter().map(|&(q, _)| q).chain([cc.held_out.0]).max();
        if let Some(q) = largest {
            if q > cap {
                return Err(Failure::Usage(format!(
                    "interpolation needs node q={q} beyond --max-q {cap}"
                )));
            }
        }
    }
    Ok(())
}

fn run_springer_components(
    jordan: &str,
    steps: usize,
    flag_type: Option<&str>,
    max_q: Option<u64>,
) -> Result<Output, Failure> {
    let x = parse_jordan(jordan)?;
    let mut records: Vec<(Vec<usize>, ComponentCount)> = Vec::new();
    match flag_type {
        Some(text) => {
            let dims = parse_usize_list("--flag-type", text)?;
            if dims.len() != steps {
                return Err(Failure::Usage(format!(
                    "--flag-type has {} entries but --steps is {steps}",
                    dims.len()
                )));
            }
            let cc = check(component_count(&x, &FlagType::new(dims.clone())))?;
            enforce_max_q(&cc, max_q)?;
            records.push((dims, cc));
        }
        None => {
            if x.max_block() > steps {
                return Err(Failure::Usage(
                    "steps must be at least the largest Jordan block".into(),
                ));
            }
            for dims in compositions(x.d(), steps) {
                let cc = check(component_count(&x, &FlagType::new(dims.clone())))?;
                enforce_max_q(&cc, max_q)?;
                records.push((dims, cc));
            }
        }
    }
    let total: u64 = records.iter().map(|(_, cc)| cc.count).sum();
    let json = json!({
        "jordan": x.blocks(),
        "steps": steps,
        "types": records
            .iter()
            .map(|(dims, cc)| component_json(dims, cc))
            .collect::<Vec<_>>(),
        "total": total,
    });
    let mut csv = String::from("dims,count,dimension,poly\n");
    for (dims, cc) in &records {
        let dims_text: Vec<String> = dims.iter().map(|v| v.to_string()).collect();
        let poly_text: Vec<String> = cc.poly.iter().map(render_rational).collect();
        csv.push_str(&format!(
            "{},{},{},{}\n",
            dims_text.join("|"),
            cc.count,
            cc.dimension,
            poly_text.join("|")
        ));
    }
    csv.push_str(&format!("total,{total},,\n"));
    Ok(Output { json, csv, pass: true })
}

/// Scalar grammar: optional rational prefix, then symbol letters, each
/// letter one variable, e.g. "3", "a", "3a", "1/2ab", "q".
fn scalar_letters(text: &str) -> &str {
    let split = text
        .find(|c: char| c.is_ascii_alphabetic())
        .unwrap_or(text.len());
    &text[split..]
}

fn parse_scalar(vars: &VarList, text: &str) -> Result<LaurentPoly, Failure> {
    let letters = scalar_letters(text);
    let prefix = &text[..text.len() - letters.len()];
    let coeff: Rational = if prefix.is_empty() {
        rat_int(1)
    } else {
        usage(parse_rational(prefix))?
    };
    let mut poly = LaurentPoly::constant(vars, coeff);
    for letter in letters.chars() {
        if !letter.is_ascii_alphabetic() {
            return Err(Failure::Usage(format!(
                "scalar {text:?}: unexpected character {letter:?}"
            )));
        }
        let var = usage(LaurentPoly::var(vars, &letter.to_string()))?;
        poly = usage(poly.mul(&var))?;
    }
    Ok(poly)
}

fn run_springer_drinfeld(
    jordan: &str,
    steps: usize,
    q_text: &str,
    s_text: &str,
) -> Result<Output, Failure> {
    let x = parse_jordan(jordan)?;
    let entries: Vec<&str> = s_text.split(',').map(str::trim).collect();
    let mut letters: Vec<String> = Vec::new();
    for text in entries.iter().chain([&q_text]) {
        for c in scalar_letters(text).chars() {
            let name = c.to_string();
            if !letters.contains(&name) {
                letters.push(name);
            }
        }
    }
    // The scaling letter sorts first so rendered products read q-first.
    letters.sort_by_key(|name| (name != "q", name.clone()));
    let names: Vec<&str> = letters.iter().map(String::as_str).collect();
    let vars = varlist(&names);
    let q = parse_scalar(&vars, q_text)?;
    let s: Vec<LaurentPoly> = entries
        .iter()
        .map(|text| parse_scalar(&vars, text))
        .collect::<Result<_, _>>()?;
    let input = usage(DrinfeldInput::new(x.clone(), s, q))?;
    let polys = usage(drinfeld_polynomials(&input, steps))?;
    let rendered: Vec<String> = polys.iter().map(|p| render_u_poly(p)).collect();
    let degrees: Vec<usize> = polys.iter().map(|p| p.len() - 1).collect();
    let json = json!({
        "jordan": x.blocks(),
        "steps": steps,
        "q": q_text,
        "s": entries,
        "polynomials": rendered,
        "degrees": degrees,
    });
    let mut csv = String::from("index,degree,polynomial\n");
    for (i, (deg, text)) in degrees.iter().zip(&rendered).enumerate() {
        csv.push_str(&format!("{},{deg},{}\n", i + 1, csv_escape(text)));
    }
    Ok(Output { json, csv, pass: true })
}

fn run_convolution_demo(target_size: usize, assignment_text: &str) -> Result<Output, Failure> {
    let positions = parse_usize_list("--assignment", assignment_text)?;
    let mut assignment = Vec::with_capacity(positions.len());
    for p in &positions {
        if *p == 0 || *p > target_size {
            return Err(Failure::Usage(format!(
                "--assignment: position {p} outside 1..={target_size}"
            )));
        }
        assignment.push(p - 1);
    }
    let map = usage(FiniteMap::new(
        LabeledSet::numbered(assignment.len()),
        LabeledSet::numbered(target_size),
        assignment,
    ))?;
    let algebra = steinberg_algebra(&map);
    let report = check(verify_steinberg(&map))?;
    let source_labels = map.source().labels().to_vec();
    let blocks: Vec<Value> = algebra
        .blocks()
        .iter()
        .map(|b| {
            json!({
                "target": b.label,
                "fiber": b.fiber.iter().map(|&i| source_labels[i].clone()).collect::<Vec<_>>(),
            })
        })
        .collect();
    let support: Vec<[usize; 2]> = algebra
        .z_support()
        .iter()
        .map(|&(i, j)| [i + 1, j + 1])
        .collect();
    let json = json!({
        "source_size": report.source_size,
        "target_size": report.target_size,
        "assignment": positions,
        "dimension": report.dimension,
        "blocks": blocks,
        "pair_support": support,
        "pass": report.pass,
        "failure": report.failure,
    });
    let csv = kv_csv(&json);
    Ok(Output { json, csv, pass: report.pass })
}

// ---------------------------------------------------------------------------
// Dispatch and output plumbing.

fn write_atomic(path: &Path, text: &str) -> Result<(), Failure> {
    let tmp = path.with_extension("tmp-weylkit");
    fs::write(&tmp, text)
        .and_then(|_| fs::rename(&tmp, path))
        .map_err(|e| Failure::Check(format!("writing {}: {e}", path.display())))
}

fn emit(out: &OutputArgs, output: &Output) -> Result<(), Failure> {
    let text = match out.format {
        Format::Json => format!("{:#}\n", output.json),
        Format::Csv => output.csv.clone(),
    };
    match &out.output {
        Some(path) => write_atomic(path, &text),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn dispatch(verb: &Verb) -> Result<(Output, &OutputArgs), Failure> {
    match verb {
        Verb::HeckeMul { cartan, algebra, expr, out } => {
            let data = resolve_cartan(cartan)?;
            let kind = resolve_kind(algebra)?;
            Ok((run_hecke_mul(&data, kind, expr)?, out))
        }
        Verb::HeckeCheck { cartan, algebra, out } => {
            let data = resolve_cartan(cartan)?;
            let kind = resolve_kind(algebra)?;
            Ok((run_hecke_check(&data, kind)?, out))
        }
        Verb::OpsVerify { cartan, algebra, degree_bound, out } => {
            let data = resolve_cartan(cartan)?;
            let kind = resolve_kind(algebra)?;
            Ok((run_ops_verify(&data, kind, *degree_bound)?, out))
        }
        Verb::Degenerate { cartan, order, out } => {
            let data = resolve_cartan(cartan)?;
            Ok((run_degenerate(&data, *order)?, out))
        }
        Verb::SchurWeyl { n, d, guard, out } => Ok((run_schur_weyl(*n, *d, *guard)?, out)),
        Verb::SpringerWeight { jordan, steps, out } => {
            Ok((run_springer_weight(jordan, *steps)?, out))
        }
        Verb::SpringerComponents { jordan, steps, flag_type, max_q, out } => Ok((
            run_springer_components(jordan, *steps, flag_type.as_deref(), *max_q)?,
            out,
        )),
        Verb::SpringerDrinfeld { jordan, steps, q, s, out } => {
            Ok((run_springer_drinfeld(jordan, *steps, q, s)?, out))
        }
        Verb::ConvolutionDemo { target_size, assignment, out } => {
            Ok((run_convolution_demo(*target_size, assignment)?, out))
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = u8::try_from(e.exit_code()).unwrap_or(2);
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match dispatch(&cli.verb) {
        Ok((output, out_args)) => match emit(out_args, &output) {
            Ok(()) => {
                if output.pass {
                    ExitCode::SUCCESS
                } else {
                    ExitCode::from(1)
                }
            }
            Err(Failure::Check(msg)) | Err(Failure::Usage(msg)) => {
                eprintln!("error: {msg}");
                ExitCode::from(1)
            }
        },
        Err(Failure::Usage(msg)) => {
            eprintln!("usage error: {msg}");
            ExitCode::from(2)
        }
        Err(Failure::Check(msg)) => {
            eprintln!("verification failure: {msg}");
            ExitCode::from(1)
        }
    }
}
