//! `permclass`: membership tests, bijections, series expansion, enumeration,
//! and the verification suites, on the command line.
//!
//! Exit codes: 0 success / member / all checks pass; 1 negative verdict,
//! not-in-class input, or failing check; 2 usage or parse error.

use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use permclass_core::biject;
use permclass_core::classes::{is_almost_increasing, is_x_class};
use permclass_core::oracle::{
    count_perms_where, enumerate_bounded_paths, enumerate_colored_paths, enumerate_perms,
    enumerate_words, Caps,
};
use permclass_core::series::{
    ak_series, f_series, g_series, h_series, rational_series, TruncatedSeries,
};
use permclass_core::verify::{run_suite, SuiteOptions};
use permclass_core::words::{BoundedPath, ColoredMotzkinPath, XWord};
use permclass_core::Permutation;

#[derive(Parser)]
#[command(name = "permclass", version, about = "bounded-height permutation classes")]
struct Cli {
    #[command(subcommand)]
    command: Command,
    /// Emit machine-readable JSON instead of plain text
    #[arg(long, global = true)]
    structured: bool,
}

#[derive(Clone, Copy, ValueEnum)]
enum ClassArg {
    /// bounded height profile (use -k)
    Aip,
    /// avoiders of 2143, 2413, 3142, 3412
    X,
}

#[derive(Clone, Copy, ValueEnum)]
enum MapName {
    Wx,
    WxInv,
    Aw,
    AwInv,
    Zeta,
    ZetaInv,
    Theta,
    Psi,
    PsiInv,
}

#[derive(Clone, Copy, ValueEnum)]
enum SeriesName {
    Ak,
    F,
    G,
    H,
    Xclass,
    Rational,
}

#[derive(Clone, Copy, ValueEnum)]
enum EnumerateKind {
    /// all of S_n
    Perms,
    /// bounded-height class members (use -k)
    Aip,
    /// the pattern class avoiding 2143, 2413, 3142, 3412
    X,
    /// words over {W,E,L,R} of length n-1
    Words,
    /// lattice paths of length 2(n-1) confined to |y| <= 3
    Paths,
    /// colored Motzkin paths of length n (use -k to bound height)
    Colored,
}

#[derive(Subcommand)]
enum Command {
    /// Test class membership of a permutation
    Member {
        #[arg(long, value_enum)]
        class: ClassArg,
        /// Height bound for the aip class
        #[arg(short)]
        k: Option<usize>,
        /// Permutation in one-line notation, e.g. "5,7,2,4,3,8,1,6"
        value: String,
    },
    /// Apply one of the bijections to a serialized object
    Map {
        #[arg(value_enum)]
        name: MapName,
        value: String,
    },
    /// Expand a generating function to order N
    Series {
        #[arg(value_enum)]
        which: SeriesName,
        #[arg(short, default_value_t = 1)]
        k: usize,
        #[arg(short = 'N', default_value_t = 10)]
        order: usize,
        /// Specialize t to an integer
        #[arg(long)]
        t: Option<i64>,
        #[arg(long)]
        u: Option<i64>,
        #[arg(long)]
        v: Option<i64>,
        #[arg(long)]
        q: Option<i64>,
        /// Numerator coefficients for `rational`, e.g. "1,-8,11"
        #[arg(long)]
        numer: Option<String>,
        /// Denominator coefficients for `rational`, constant term 1
        #[arg(long)]
        denom: Option<String>,
    },
    /// List (or count) the objects of one kind at size n, in frozen order
    Enumerate {
        #[arg(value_enum)]
        kind: EnumerateKind,
        #[arg(short)]
        n: usize,
        #[arg(short)]
        k: Option<usize>,
        /// Print only the number of objects
        #[arg(long)]
        count: bool,
    },
    /// Run the exhaustive verification suites
    Verify {
        /// bijections, series, or all
        #[arg(default_value = "all")]
        suite: String,
        /// Lower the exhaustive domain sizes
        #[arg(long)]
        max_n: Option<usize>,
        /// Append a deliberately failing check (harness test mode)
        #[arg(long, hide = true)]
        fail_inject: bool,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(code) => code,
        Err(msg) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}

fn run(cli: &Cli) -> Result<ExitCode, String> {
    match &cli.command {
        Command::Member { class, k, value } => cmd_member(*class, *k, value, cli.structured),
        Command::Map { name, value } => cmd_map(*name, value, cli.structured),
        Command::Series { which, k, order, t, u, v, q, numer, denom } => cmd_series(
            *which,
            *k,
            *order,
            &[*t, *u, *v, *q],
            numer.as_deref(),
            denom.as_deref(),
            cli.structured,
        ),
        Command::Enumerate { kind, n, k, count } => {
            cmd_enumerate(*kind, *n, *k, *count, cli.structured)
        }
        Command::Verify { suite, max_n, fail_inject } => {
            cmd_verify(suite, *max_n, *fail_inject, cli.structured)
        }
    }
}

fn parse_perm(value: &str) -> Result<Permutation, String> {
    value.parse::<Permutation>().map_err(|e| format!("bad permutation {value:?}: {e}"))
}

fn cmd_member(
    class: ClassArg,
    k: Option<usize>,
    value: &str,
    structured: bool,
) -> Result<ExitCode, String> {
    let p = parse_perm(value)?;
    let (name, member, profile) = match class {
        ClassArg::Aip => {
            let k = k.unwrap_or(1);
            (format!("aip(k={k})"), is_almost_increasing(&p, k), Some(p.height_profile()))
        }
        ClassArg::X => ("x".to_string(), is_x_class(&p), None),
    };
    if structured {
        println!(
            "{}",
            serde_json::json!({
                "class": name,
                "member": member,
                "height_profile": profile.clone(),
            })
        );
    } else {
        println!("{}", if member { "member" } else { "non-member" });
        if let Some(profile) = profile {
            let parts: Vec<String> = profile.iter().map(|h| h.to_string()).collect();
            println!("height profile: {}", parts.join(","));
        }
    }
    Ok(if member { ExitCode::SUCCESS } else { ExitCode::from(1) })
}

fn cmd_map(name: MapName, value: &str, structured: bool) -> Result<ExitCode, String> {
    let parse_word =
        |v: &str| v.parse::<XWord>().map_err(|e| format!("bad word {v:?}: {e}"));
    let parse_path =
        |v: &str| v.parse::<BoundedPath>().map_err(|e| format!("bad path {v:?}: {e}"));
    let parse_colored = |v: &str| {
        v.parse::<ColoredMotzkinPath>().map_err(|e| format!("bad colored path {v:?}: {e}"))
    };

    // domain errors (valid object, wrong class) exit 1; parse errors exit 2
    let image: Result<String, String> = match name {
        MapName::Wx => Ok(biject::word_to_xperm(&parse_word(value)?).to_string()),
        MapName::WxInv => biject::xperm_to_word(&parse_perm(value)?)
            .map(|w| w.to_string())
            .map_err(|e| e.to_string()),
        MapName::Aw => biject::aip_to_word(&parse_perm(value)?)
            .map(|w| w.to_string())
            .map_err(|e| e.to_string()),
        MapName::AwInv => Ok(biject::word_to_aip(&parse_word(value)?).to_string()),
        MapName::Zeta => Ok(biject::word_to_path(&parse_word(value)?).to_string()),
        MapName::ZetaInv => biject::path_to_word(&parse_path(value)?)
            .map(|w| w.to_string())
            .map_err(|e| e.to_string()),
        MapName::Theta => Ok(biject::theta(&parse_perm(value)?).to_string()),
        MapName::Psi => Ok(biject::psi(&parse_perm(value)?).to_string()),
        MapName::PsiInv => Ok(biject::psi_inverse(&parse_colored(value)?).to_string()),
    };
    match image {
        Ok(s) => {
            if structured {
                println!("{}", serde_json::json!({ "input": value, "image": s }));
            } else {
                println!("{s}");
            }
            Ok(ExitCode::SUCCESS)
        }
        Err(e) => {
            eprintln!("error: {e}");
            Ok(ExitCode::from(1))
        }
    }
}

fn parse_coeffs(raw: &str) -> Result<Vec<i64>, String> {
    raw.split(',')
        .map(|part| part.trim().parse::<i64>().map_err(|e| format!("bad coefficient {part:?}: {e}")))
        .collect()
}

fn cmd_series(
    which: SeriesName,
    k: usize,
    order: usize,
    spec: &[Option<i64>; 4],
    numer: Option<&str>,
    denom: Option<&str>,
    structured: bool,
) -> Result<ExitCode, String> {
    if order > 30 {
        return Err(format!("order {order} exceeds the maximum 30"));
    }
    let series: TruncatedSeries = match which {
        SeriesName::Ak => ak_series(k, order),
        SeriesName::F => f_series(k, order),
        SeriesName::G => g_series(k, order),
        SeriesName::H => h_series(k, order),
        SeriesName::Xclass => rational_series(&[1, -3], &[1, -4, 2], order).expect("unit"),
        SeriesName::Rational => {
            let numer = parse_coeffs(numer.ok_or("rational requires --numer")?)?;
            let denom = parse_coeffs(denom.ok_or("rational requires --denom")?)?;
            rational_series(&numer, &denom, order).map_err(|e| e.to_string())?
        }
    };
    let series = series.specialize(spec);
    if structured {
        println!("{}", series.to_json_value());
        return Ok(ExitCode::SUCCESS);
    }
    let constants: Option<Vec<String>> = (0..=order)
        .map(|n| series.coefficient(n).as_constant().map(|c| c.to_string()))
        .collect();
    match constants {
        // sequence mode: every coefficient is an integer
        Some(values) => println!("{}", values.join(",")),
        None => {
            for n in 0..=order {
                println!("{n}: {}", series.coefficient(n));
            }
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn cmd_enumerate(
    kind: EnumerateKind,
    n: usize,
    k: Option<usize>,
    count_only: bool,
    structured: bool,
) -> Result<ExitCode, String> {
    let caps = Caps::from_env();
    let items: Vec<String> = match kind {
        EnumerateKind::Perms => enumerate_perms(n, &caps)
            .map_err(|e| e.to_string())?
            .map(|p| p.to_string())
            .collect(),
        EnumerateKind::Aip => {
            let k = k.unwrap_or(1);
            if count_only && !structured {
                let total =
                    count_perms_where(n, &caps, |p| is_almost_increasing(p, k))
                        .map_err(|e| e.to_string())?;
                println!("{total}");
                return Ok(ExitCode::SUCCESS);
            }
            enumerate_perms(n, &caps)
                .map_err(|e| e.to_string())?
                .filter(|p| is_almost_increasing(p, k))
                .map(|p| p.to_string())
                .collect()
        }
        EnumerateKind::X => enumerate_perms(n, &caps)
            .map_err(|e| e.to_string())?
            .filter(is_x_class)
            .map(|p| p.to_string())
            .collect(),
        EnumerateKind::Words => enumerate_words(n, &caps)
            .map_err(|e| e.to_string())?
            .iter()
            .map(|w| w.to_string())
            .collect(),
        EnumerateKind::Paths => enumerate_bounded_paths(n, &caps)
            .map_err(|e| e.to_string())?
            .iter()
            .map(|p| p.to_string())
            .collect(),
        EnumerateKind::Colored => enumerate_colored_paths(n, k, &caps)
            .map_err(|e| e.to_string())?
            .iter()
            .map(|p| p.to_string())
            .collect(),
    };
    if structured {
        println!("{}", serde_json::json!({ "n": n, "count": items.len(), "items": if count_only { serde_json::Value::Null } else { serde_json::json!(items) } }));
    } else if count_only {
        println!("{}", items.len());
    } else {
        for item in items {
            println!("{item}");
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn cmd_verify(
    suite: &str,
    max_n: Option<usize>,
    fail_inject: bool,
    structured: bool,
) -> Result<ExitCode, String> {
    if !matches!(suite, "bijections" | "series" | "all") {
        return Err(format!("unknown suite {suite:?} (expected bijections, series, or all)"));
    }
    let mut caps = Caps::from_env();
    if let Some(m) = max_n {
        caps.max_perm_n = caps.max_perm_n.min(m);
        caps.max_word_n = caps.max_word_n.min(m);
    }
    let mut opts = SuiteOptions::from_caps(&caps);
    opts.inject_failure = fail_inject;
    let reports = run_suite(suite, &opts);
    let mut failures = 0usize;
    for timed in &reports {
        if structured {
            println!("{}", timed.report.to_json_line());
        } else {
            println!("{} [{} ms]", timed.report, timed.millis);
        }
        if !timed.report.pass {
            failures += 1;
        }
    }
    if !structured {
        println!("{} checks, {} failed", reports.len(), failures);
    }
    Ok(if failures == 0 { ExitCode::SUCCESS } else { ExitCode::from(1) })
}
