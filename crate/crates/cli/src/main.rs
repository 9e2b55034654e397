//! covext: exact Lie algebra decomposition, spectral covers of twisted loop
//! algebras, and verification of their covariant central-extension cocycles.

mod format;
mod output;

use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use serde_json::json;

use covext_core::cocycle::{
    connection_change_check, current_space_dimension, injectivity_probe, verify_cocycle,
    CocycleSpace, CovariantCocycle,
};
use covext_core::forms::invariant_form_space;
use covext_core::loops::{
    reduce_to_simple, spectral_cover, Connection, LoopAlgebra, TrigPoly, TwistAutomorphism,
};
use covext_core::scalar::{vec_zero, Rat, TwoPi};
use covext_core::structure::minimal_ideals;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use format::AlgebraFile;
use output::Outcome;

#[derive(Parser)]
#[command(
    name = "covext",
    version,
    about = "Exact computations with semisimple Lie algebras, twisted loop algebras, \
             and the 2-cocycles classifying their central extensions"
)]
struct Cli {
    /// Emit machine-readable JSON instead of text
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Validate a structure-constant file and report its ideal decomposition
    Analyze {
        /// Algebra file (text format or JSON mirror)
        file: PathBuf,
    },
    /// Orbits of a twist on the minimal ideals, with the unrolling round-trip
    Cover {
        file: PathBuf,
        /// Named automorphism from the file ("identity" is always available)
        #[arg(long)]
        twist: String,
        /// Seed for the round-trip samples
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Verify the cocycle identities, connection independence, and the
    /// nonvanishing probe for a twisted loop algebra
    #[command(name = "cocycle-verify")]
    CocycleVerify {
        file: PathBuf,
        #[arg(long, default_value = "identity")]
        twist: String,
        /// Connection potential: "zero", "random", or explicit modes like
        /// "cos1:e1=1,e2=1/2;sin2:e3=-1"
        #[arg(long, default_value = "zero")]
        connection: String,
        /// Maximum physical frequency of random samples
        #[arg(long = "max-freq", default_value_t = 3)]
        max_freq: u32,
        /// Number of random samples per identity
        #[arg(long, default_value_t = 100)]
        samples: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Current covector as comma-separated rationals (default: the
        /// canonical monodromy-invariant covector)
        #[arg(long)]
        mu: Option<String>,
    },
    /// Dimension of the truncated space of closed invariant currents
    #[command(name = "currents-dim")]
    CurrentsDim {
        file: PathBuf,
        #[arg(long, default_value = "identity")]
        twist: String,
        #[arg(long = "max-freq", default_value_t = 3)]
        max_freq: u32,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let outcome = match run(&cli) {
        Ok(outcome) => outcome,
        Err(message) => {
            eprintln!("error: {message}");
            return ExitCode::from(2);
        }
    };
    print!("{}", outcome.render(cli.json));
    ExitCode::from(outcome.exit_code() as u8)
}

/// Errors here are usage/parse problems (exit 2); failed checks are encoded
/// in the outcome (exit 1).
fn run(cli: &Cli) -> Result<Outcome, String> {
    match &cli.command {
        Command::Analyze { file } => cmd_analyze(file),
        Command::Cover { file, twist, seed } => cmd_cover(file, twist, *seed),
        Command::CocycleVerify { file, twist, connection, max_freq, samples, seed, mu } => {
            cmd_cocycle_verify(file, twist, connection, *max_freq, *samples, *seed, mu.as_deref())
        }
        Command::CurrentsDim { file, twist, max_freq } => cmd_currents_dim(file, twist, *max_freq),
    }
}

fn load(path: &Path) -> Result<AlgebraFile, String> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| format!("cannot read {}: {e}", path.display()))?;
    AlgebraFile::parse(&text).map_err(|e| e.to_string())
}

fn signature_json(sig: (usize, usize, usize)) -> serde_json::Value {
    json!([sig.0, sig.1, sig.2])
}

fn cmd_analyze(path: &Path) -> Result<Outcome, String> {
    let file = load(path)?;
    let mut out = Outcome::new("analyze", path.display().to_string());
    let alg = &file.algebra;
    out.note(format!("algebra: {} (dim {})", file.name, alg.dim()));

    match alg.validate() {
        Ok(()) => out.check("structure-constants-valid", true, None),
        Err(v) => {
            out.check("structure-constants-valid", false, Some(v.to_string()));
            out.data = json!({ "name": file.name, "dim": alg.dim(), "valid": false });
            return Ok(out);
        }
    }
    for a in &file.automorphisms {
        let ok = alg.is_automorphism(&a.matrix)
            && a.matrix.pow(a.order as u32) == covext_core::Mat::identity(alg.dim());
        out.check(
            format!("automorphism-{}", a.name),
            ok,
            (!ok).then(|| "matrix is not an automorphism of the declared order".to_string()),
        );
    }

    let semisimple = alg.is_semisimple();
    out.note(format!("semisimple: {semisimple}"));
    if !semisimple {
        out.note("not semisimple: decomposition and invariant forms skipped".to_string());
        out.data = json!({
            "name": file.name,
            "dim": alg.dim(),
            "valid": true,
            "semisimple": false,
        });
        return Ok(out);
    }

    let decomp = minimal_ideals(alg).map_err(|e| e.to_string())?;
    let mut ideals_json = Vec::new();
    for (i, ideal) in decomp.ideals.iter().enumerate() {
        out.note(format!(
            "ideal {i}: dim {}, signature ({},{},{}), compact: {}, complex structure: {}",
            ideal.dim(),
            decomp.signatures[i].0,
            decomp.signatures[i].1,
            decomp.signatures[i].2,
            decomp.compact[i],
            decomp.complex[i],
        ));
        ideals_json.push(json!({
            "dim": ideal.dim(),
            "signature": signature_json(decomp.signatures[i]),
            "compact": decomp.compact[i],
            "complex": decomp.complex[i],
        }));
    }
    out.note(format!("isotypic groups: {:?}", decomp.isotypic));
    if decomp.isotypic.iter().any(|g| g.len() > 1) {
        out.note(
            "note: grouped ideals matched on invariants (dim, signature, centroid); \
             no isomorphism was constructed"
                .to_string(),
        );
    }
    let vs = invariant_form_space(alg);
    out.note(format!("dim V = {}", vs.m()));
    out.data = json!({
        "name": file.name,
        "dim": alg.dim(),
        "valid": true,
        "semisimple": true,
        "ideals": ideals_json,
        "isotypic": decomp.isotypic,
        "dim_v": vs.m(),
    });
    Ok(out)
}

/// Resolve a named twist into a validated `TwistAutomorphism`, recording the
/// validity check.
fn resolve_twist(
    file: &AlgebraFile,
    name: &str,
    out: &mut Outcome,
) -> Result<Option<TwistAutomorphism>, String> {
    let named = file
        .automorphism(name)
        .ok_or_else(|| format!("unknown twist `{name}`; declare it in the file"))?;
    match TwistAutomorphism::new(&file.algebra, named.matrix, named.order) {
        Ok(t) => {
            out.check(format!("twist-{name}-valid"), true, None);
            Ok(Some(t))
        }
        Err(e) => {
            out.check(format!("twist-{name}-valid"), false, Some(e.to_string()));
            Ok(None)
        }
    }
}

fn cmd_cover(path: &Path, twist_name: &str, seed: u64) -> Result<Outcome, String> {
    let file = load(path)?;
    let mut out = Outcome::new("cover", path.display().to_string());
    out.seed = Some(seed);
    if let Err(v) = file.algebra.validate() {
        out.check("structure-constants-valid", false, Some(v.to_string()));
        return Ok(out);
    }
    out.check("structure-constants-valid", true, None);
    let Some(twist) = resolve_twist(&file, twist_name, &mut out)? else {
        return Ok(out);
    };
    if !file.algebra.is_semisimple() {
        out.check(
            "semisimple",
            false,
            Some("the cover construction requires a semisimple algebra".to_string()),
        );
        return Ok(out);
    }
    out.check("semisimple", true, None);

    let cover = spectral_cover(&file.algebra, &twist).map_err(|e| e.to_string())?;
    let mut components_json = Vec::new();
    let ctx = LoopAlgebra::new(file.algebra.clone(), twist, 1).map_err(|e| e.to_string())?;
    let reduction = reduce_to_simple(&ctx).map_err(|e| e.to_string())?;
    for (i, comp) in cover.components.iter().enumerate() {
        let reduced = &reduction.components[i];
        out.note(format!(
            "component {i}: orbit {:?}, length {}, fibre dim {}, residual twist order {}{}",
            comp.orbit,
            comp.length,
            reduced.loops.dim(),
            reduced.loops.twist().order(),
            if reduced.loops.twist().is_identity() { " (identity)" } else { "" },
        ));
        components_json.push(json!({
            "orbit": comp.orbit,
            "length": comp.length,
            "fibre_dim": reduced.loops.dim(),
            "residual_order": reduced.loops.twist().order(),
            "residual_identity": reduced.loops.twist().is_identity(),
        }));
    }

    // Unrolling round trip and bracket preservation on seeded samples.
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut round_trip = None;
    let mut brackets_ok = None;
    for sample in 0..20 {
        let x = ctx.random_element(&mut rng, 3);
        let y = ctx.random_element(&mut rng, 3);
        let fx = reduction.forward(&ctx, &x).map_err(|e| e.to_string())?;
        let fy = reduction.forward(&ctx, &y).map_err(|e| e.to_string())?;
        let back = reduction.inverse(&ctx, &fx).map_err(|e| e.to_string())?;
        if back != x && round_trip.is_none() {
            round_trip = Some(format!("sample {sample}: inverse(forward(x)) differs from x"));
        }
        let fb = reduction
            .forward(&ctx, &ctx.bracket(&x, &y).map_err(|e| e.to_string())?)
            .map_err(|e| e.to_string())?;
        for (k, comp) in reduction.components.iter().enumerate() {
            let direct = comp.loops.bracket(&fx[k], &fy[k]).map_err(|e| e.to_string())?;
            if direct != fb[k] && brackets_ok.is_none() {
                brackets_ok = Some(format!("sample {sample}: component {k} bracket mismatch"));
            }
        }
    }
    out.check("reduction-round-trip", round_trip.is_none(), round_trip);
    out.check("reduction-preserves-brackets", brackets_ok.is_none(), brackets_ok);
    out.data = json!({
        "name": file.name,
        "twist": twist_name,
        "components": components_json,
    });
    Ok(out)
}

/// Parse a connection specification: `zero`, `random`, or explicit
/// `cos<n>:<label>=<rat>,...;sin<m>:...` over the full period.
fn parse_connection(
    spec: &str,
    ctx: &LoopAlgebra,
    max_mode: u32,
    seed: u64,
    out: &mut Outcome,
) -> Result<Option<Connection>, String> {
    if spec == "zero" {
        out.check("connection-valid", true, None);
        return Ok(Some(ctx.flat_connection()));
    }
    if spec == "random" {
        let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 0xa0a0_a0a0);
        let potential = ctx.random_element(&mut rng, max_mode);
        out.check("connection-valid", true, None);
        return Ok(Some(Connection { potential }));
    }
    let labels = ctx.fibre().labels().to_vec();
    let mut poly = TrigPoly::zero(ctx.dim());
    for term in spec.split(';') {
        let (head, body) = term
            .split_once(':')
            .ok_or_else(|| format!("bad connection term `{term}`: expected cos<n>: or sin<n>:"))?;
        let (is_cos, mode): (bool, u32) = if let Some(n) = head.strip_prefix("cos") {
            (true, n.parse().map_err(|e| format!("bad mode in `{head}`: {e}"))?)
        } else if let Some(n) = head.strip_prefix("sin") {
            (false, n.parse().map_err(|e| format!("bad mode in `{head}`: {e}"))?)
        } else {
            return Err(format!("bad connection term `{head}`: expected cos<n> or sin<n>"));
        };
        let mut vec = vec_zero(ctx.dim());
        for assign in body.split(',') {
            let (label, value) = assign
                .split_once('=')
                .ok_or_else(|| format!("bad coefficient `{assign}`: expected label=rational"))?;
            let idx = labels
                .iter()
                .position(|l| l == label)
                .ok_or_else(|| format!("unknown basis label `{label}`"))?;
            let r: Rat = value.parse().map_err(|e| format!("bad rational `{value}`: {e}"))?;
            vec[idx] = TwoPi::from(r);
        }
        if is_cos {
            poly.add_mode(mode, vec, vec_zero(ctx.dim()));
        } else {
            if mode == 0 {
                return Err("sin0 is identically zero".to_string());
            }
            poly.add_mode(mode, vec_zero(ctx.dim()), vec);
        }
    }
    match ctx.element(poly) {
        Ok(potential) => {
            out.check("connection-valid", true, None);
            Ok(Some(Connection { potential }))
        }
        Err(e) => {
            out.check("connection-valid", false, Some(e.to_string()));
            Ok(None)
        }
    }
}

fn cmd_cocycle_verify(
    path: &Path,
    twist_name: &str,
    connection_spec: &str,
    max_freq: u32,
    samples: usize,
    seed: u64,
    mu: Option<&str>,
) -> Result<Outcome, String> {
    let file = load(path)?;
    let mut out = Outcome::new("cocycle-verify", path.display().to_string());
    out.seed = Some(seed);
    if let Err(v) = file.algebra.validate() {
        out.check("structure-constants-valid", false, Some(v.to_string()));
        return Ok(out);
    }
    out.check("structure-constants-valid", true, None);
    let Some(twist) = resolve_twist(&file, twist_name, &mut out)? else {
        return Ok(out);
    };
    if !file.algebra.is_semisimple() {
        out.check(
            "semisimple",
            false,
            Some("cocycle verification requires a semisimple algebra".to_string()),
        );
        return Ok(out);
    }
    out.check("semisimple", true, None);

    let ctx = LoopAlgebra::new(file.algebra.clone(), twist, 1).map_err(|e| e.to_string())?;
    let space = CocycleSpace::new(ctx).map_err(|e| e.to_string())?;
    let max_mode = max_freq * space.loops().full_period();

    let lambda = match mu {
        None => match space.standard_current() {
            Some(l) => {
                out.check("current-valid", true, None);
                l
            }
            None => {
                out.check(
                    "current-valid",
                    false,
                    Some("no monodromy-invariant covector exists".to_string()),
                );
                return Ok(out);
            }
        },
        Some(list) => {
            let mut parsed = Vec::new();
            for piece in list.split(',') {
                parsed.push(
                    piece
                        .trim()
                        .parse::<Rat>()
                        .map_err(|e| format!("bad rational `{piece}` in --mu: {e}"))?,
                );
            }
            match space.current(parsed, num_traits::One::one()) {
                Ok(l) => {
                    out.check("current-valid", true, None);
                    l
                }
                Err(e) => {
                    out.check("current-valid", false, Some(e.to_string()));
                    return Ok(out);
                }
            }
        }
    };
    out.note(format!(
        "current: mu = [{}], scale = {}",
        lambda
            .mu()
            .iter()
            .map(|r| r.to_string())
            .collect::<Vec<_>>()
            .join(", "),
        lambda.scale()
    ));

    let Some(nabla) = parse_connection(connection_spec, space.loops(), max_mode, seed, &mut out)?
    else {
        return Ok(out);
    };
    let lift = space.loops().pure_rotation();

    out.absorb(lambda.verify_axioms(&space, max_mode.max(2)));
    let cocycle =
        CovariantCocycle { lambda: lambda.clone(), nabla: nabla.clone(), lift: lift.clone() };
    out.absorb(
        verify_cocycle(&space, &cocycle, samples, max_mode, seed).map_err(|e| e.to_string())?,
    );

    // Independence of the connection: compare against a second, randomized one.
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 0x5151_5151);
    let nabla_prime = Connection { potential: space.loops().random_element(&mut rng, max_mode) };
    out.absorb(
        connection_change_check(
            &space,
            &lambda,
            &nabla,
            &nabla_prime,
            &lift,
            samples,
            max_mode,
            seed,
        )
        .map_err(|e| e.to_string())?,
    );

    out.absorb(injectivity_probe(&space, &cocycle));

    out.data = json!({
        "name": file.name,
        "twist": twist_name,
        "connection": connection_spec,
        "max_freq": max_freq,
        "samples": samples,
        "mu": lambda.mu().iter().map(|r| r.to_string()).collect::<Vec<_>>(),
    });
    Ok(out)
}

fn cmd_currents_dim(path: &Path, twist_name: &str, max_freq: u32) -> Result<Outcome, String> {
    let file = load(path)?;
    let mut out = Outcome::new("currents-dim", path.display().to_string());
    if let Err(v) = file.algebra.validate() {
        out.check("structure-constants-valid", false, Some(v.to_string()));
        return Ok(out);
    }
    out.check("structure-constants-valid", true, None);
    let Some(twist) = resolve_twist(&file, twist_name, &mut out)? else {
        return Ok(out);
    };
    if !file.algebra.is_semisimple() {
        out.check(
            "semisimple",
            false,
            Some("the current-space computation requires a semisimple algebra".to_string()),
        );
        return Ok(out);
    }
    out.check("semisimple", true, None);

    let ctx = LoopAlgebra::new(file.algebra.clone(), twist, 1).map_err(|e| e.to_string())?;
    let space = CocycleSpace::new(ctx).map_err(|e| e.to_string())?;
    let lift = space.loops().pure_rotation();
    let p = space.loops().full_period();
    let dim_n = current_space_dimension(&space, &lift, max_freq * p).map_err(|e| e.to_string())?;
    let dim_next =
        current_space_dimension(&space, &lift, (max_freq + 1) * p).map_err(|e| e.to_string())?;
    out.note(format!("current-space dimension: {dim_n} (truncation at frequency {max_freq})"));
    out.check(
        "truncation-stability",
        dim_n == dim_next,
        (dim_n != dim_next).then(|| {
            format!("dimension changed from {dim_n} to {dim_next} at frequency {}", max_freq + 1)
        }),
    );
    out.data = json!({
        "name": file.name,
        "twist": twist_name,
        "dimension": dim_n,
        "truncations": { max_freq.to_string(): dim_n, (max_freq + 1).to_string(): dim_next },
    });
    Ok(out)
}
