use crate::args::*;
use fractal_core::biased_lift::{
    self, verify_sk_excluded_minor, SpikeSpec, VerifyMode, FULL_VERIFY_LIMIT,
};
use fractal_core::census::{gamma_pk_table, gamma_sk_table, slope_fit};
use fractal_core::sparse_paving::{census_pk, collar_solution_count, sp_excluded_minors};
use fractal_core::{bits, io, Matroid};
use serde_json::json;
use std::fmt::Display;
use std::path::Path;

/// A failed command: exit code plus a machine-readable diagnostic.
pub struct Failure {
    code: u8,
    kind: &'static str,
    message: String,
}

impl Failure {
    fn new(code: u8, kind: &'static str, message: impl Display) -> Self {
        Failure {
            code,
            kind,
            message: message.to_string(),
        }
    }

    pub fn exit_code(&self) -> u8 {
        self.code
    }

    pub fn to_json(&self) -> String {
        json!({ "error": self.kind, "message": self.message }).to_string()
    }
}

fn invalid(kind: &'static str) -> impl Fn(io::FormatError) -> Failure {
    move |e| Failure::new(1, kind, e)
}

fn failed<E: Display>(e: E) -> Failure {
    Failure::new(1, "computation_failed", e)
}

/// Applies `FRACTAL_THREADS` to the global worker pool.
pub fn configure_threads() -> Result<(), Failure> {
    let Ok(raw) = std::env::var("FRACTAL_THREADS") else {
        return Ok(());
    };
    let threads: usize = match raw.trim().parse() {
        Ok(t) if t > 0 => t,
        _ => {
            return Err(Failure::new(
                2,
                "usage",
                format!("FRACTAL_THREADS must be a positive integer, got {raw:?}"),
            ))
        }
    };
    rayon::ThreadPoolBuilder::new()
        .num_threads(threads)
        .build_global()
        .map_err(|e| Failure::new(2, "usage", e))
}

fn read(path: &Path) -> Result<String, Failure> {
    std::fs::read_to_string(path)
        .map_err(|e| Failure::new(1, "io", format!("{}: {e}", path.display())))
}

fn emit(output: &Output, text: &str) -> Result<(), Failure> {
    match &output.out {
        Some(path) => std::fs::write(path, text)
            .map_err(|e| Failure::new(1, "io", format!("{}: {e}", path.display()))),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn load_matroid(path: &Path) -> Result<Matroid, Failure> {
    io::matroid_from_json(&read(path)?).map_err(invalid("invalid_matroid"))
}

fn load_spike(input: &SpikeInput) -> Result<SpikeSpec, Failure> {
    match (&input.file, input.t, &input.picks) {
        (Some(path), _, _) => io::spike_from_json(&read(path)?).map_err(invalid("invalid_spike")),
        (None, Some(t), Some(picks)) => {
            let picks = picks
                .iter()
                .map(|p| io::parse_pick(p, t))
                .collect::<Result<Vec<_>, _>>()
                .map_err(invalid("invalid_spike"))?;
            SpikeSpec::new(t, picks).map_err(|e| Failure::new(1, "invalid_spike", e))
        }
        _ => Err(Failure::new(
            2,
            "usage",
            "give --file or both --t and --picks",
        )),
    }
}

fn element_mask(elements: &[usize], n: usize) -> Result<bits::Mask, Failure> {
    if let Some(&e) = elements.iter().find(|&&e| e >= n) {
        return Err(Failure::new(
            1,
            "invalid_minor",
            format!("element {e} outside ground set of size {n}"),
        ));
    }
    Ok(bits::from_elements(elements.iter().copied()))
}

fn lines<T>(items: &[T], f: impl Fn(&T) -> String) -> String {
    items.iter().map(f).collect()
}

pub fn dispatch(command: Command) -> Result<u8, Failure> {
    match command {
        Command::Matroid(cmd) => matroid(cmd),
        Command::Sp(cmd) => sp(cmd),
        Command::Spike(cmd) => spike(cmd),
        Command::Sk(cmd) => sk(cmd),
        Command::Gamma(cmd) => gamma(cmd),
        Command::Slope(args) => slope(args),
    }
}

fn matroid(cmd: MatroidCmd) -> Result<u8, Failure> {
    match cmd {
        MatroidCmd::Validate { file } => {
            let m = load_matroid(&file)?;
            println!(
                "{}",
                json!({ "valid": true, "n": m.n(), "rank": m.rank(), "bases": m.bases().len() })
            );
        }
        MatroidCmd::Iso { a, b } => {
            let (a, b) = (load_matroid(&a)?, load_matroid(&b)?);
            let map = a.find_isomorphism(&b);
            println!("{}", json!({ "isomorphic": map.is_some(), "map": map }));
        }
        MatroidCmd::Minor {
            file,
            delete,
            contract,
            output,
        } => {
            let m = load_matroid(&file)?;
            let (d, c) = (
                element_mask(&delete, m.n())?,
                element_mask(&contract, m.n())?,
            );
            let minor = m
                .minor(d, c)
                .map_err(|e| Failure::new(1, "invalid_minor", e))?;
            emit(&output, &io::matroid_to_json(&minor))?;
        }
        MatroidCmd::Dual { file, output } => {
            emit(&output, &io::matroid_to_json(&load_matroid(&file)?.dual()))?;
        }
    }
    Ok(0)
}

fn sp(cmd: SpCmd) -> Result<u8, Failure> {
    match cmd {
        SpCmd::Census { n, k, output } => {
            let rows = census_pk(n, k).map_err(failed)?;
            emit(&output, &io::census_csv(&rows).map_err(failed)?)?;
        }
        SpCmd::Exminors { n, k, output } => {
            let found = sp_excluded_minors(n, k).map_err(failed)?;
            emit(&output, &lines(&found, io::family_to_json))?;
        }
    }
    Ok(0)
}

fn spike(cmd: SpikeCmd) -> Result<u8, Failure> {
    match cmd {
        SpikeCmd::Build { input, output } => {
            let m = load_spike(&input)?.matroid().map_err(failed)?;
            emit(&output, &io::matroid_to_json(&m))?;
            Ok(0)
        }
        SpikeCmd::Verify { input, k, mode } => {
            let spec = load_spike(&input)?;
            let mode = match mode {
                Mode::Full => VerifyMode::Full,
                Mode::Structural => VerifyMode::Structural,
                Mode::Auto if spec.n() <= FULL_VERIFY_LIMIT => VerifyMode::Full,
                Mode::Auto => VerifyMode::Structural,
            };
            let label = if mode == VerifyMode::Full {
                "full"
            } else {
                "structural"
            };
            if verify_sk_excluded_minor(&spec, k, mode).map_err(failed)? {
                println!(
                    "{}",
                    json!({ "excluded_minor": true, "k": k, "mode": label })
                );
                Ok(0)
            } else {
                Err(Failure::new(
                    1,
                    "not_excluded_minor",
                    format!("spike is not an excluded minor for k = {k} ({label} check)"),
                ))
            }
        }
    }
}

fn sk(cmd: SkCmd) -> Result<u8, Failure> {
    match cmd {
        SkCmd::Census {
            n,
            k,
            strata: true,
            output,
        } => {
            let rows = biased_lift::census_sk_strata(n, k).map_err(failed)?;
            emit(&output, &io::strata_csv(&rows).map_err(failed)?)?;
        }
        SkCmd::Census {
            n,
            k,
            strata: false,
            output,
        } => {
            let count = biased_lift::census_sk_exact(n, k).map_err(failed)?;
            emit(&output, &format!("n,k,count\n{n},{k},{count}\n"))?;
        }
        SkCmd::Exminors { t, k, output } => {
            let found = biased_lift::sk_excluded_minors(t, k).map_err(failed)?;
            emit(&output, &lines(&found, io::spike_to_json))?;
        }
    }
    Ok(0)
}

fn gamma(cmd: GammaCmd) -> Result<u8, Failure> {
    let (rows, output) = match cmd {
        GammaCmd::Pk { k, n, output } => (gamma_pk_table(k, n).map_err(failed)?, output),
        GammaCmd::Sk { k, t, odd, output } => (gamma_sk_table(k, t, odd).map_err(failed)?, output),
    };
    emit(&output, &io::gamma_csv(&rows).map_err(failed)?)?;
    Ok(0)
}

fn parse_series(text: &str) -> Result<Vec<(f64, f64)>, Failure> {
    let mut lines = text.lines();
    if lines.next().map(str::trim) != Some("size,count") {
        return Err(Failure::new(
            1,
            "invalid_series",
            "expected header size,count",
        ));
    }
    lines
        .filter(|l| !l.trim().is_empty())
        .map(|l| {
            let parsed = l
                .split_once(',')
                .and_then(|(a, b)| Some((a.trim().parse().ok()?, b.trim().parse().ok()?)));
            parsed.ok_or_else(|| Failure::new(1, "invalid_series", format!("bad row {l:?}")))
        })
        .collect()
}

fn slope(args: SlopeArgs) -> Result<u8, Failure> {
    let (lo, hi) = (*args.window.start(), *args.window.end());
    let series: Vec<(f64, f64)> = match (&args.file, args.series, args.k) {
        (Some(path), _, _) => parse_series(&read(path)?)?,
        (None, Some(series), Some(k)) => args
            .window
            .clone()
            .map(|x| {
                let count = match series {
                    Series::Collar => collar_solution_count(x, k).map_err(failed)?,
                    Series::Bottom => biased_lift::bottom_solution_count(x, k).map_err(failed)?,
                };
                Ok((x as f64, count as f64))
            })
            .collect::<Result<_, Failure>>()?,
        _ => return Err(Failure::new(2, "usage", "give --file or --series with --k")),
    };
    let fit = slope_fit(&series, (lo as f64, hi as f64))
        .map_err(|e| Failure::new(1, "degenerate_series", e))?;
    println!(
        "{}",
        json!({ "exponent": fit.exponent, "window": [lo, hi], "residual": fit.residual })
    );
    Ok(0)
}
