//! Command-line front end: every library operation behind one subcommand,
//! with text, CSV, and JSON output. Output bytes are independent of `--jobs`.

use std::io::Read;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use cauchon::{
    cgl::{cgl_stratum_dim, stratum_matrix, CglSystem, ComplementSet},
    counting::{conjecture_table, diagram_count, dim_distribution, format_rational_decimal},
    diagram::{parse_grid, CauchonDiagram},
    strata::{build_chain, skew_adjacency, verify_triangularization, StratumReport},
    weyl::{
        is_reduced, quantum_matrix_word_check, schubert_cgl_matrix, zero_stratum_dim, RootSystem,
        WeylWord,
    },
    BigRational,
};

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Csv,
    Json,
}

const SCHEMA: u32 = 1;

#[derive(Parser)]
#[command(
    name = "cauchon",
    version,
    about = "Exact stratum dimensions from Cauchon diagrams, antisymmetric integer systems, and reduced Weyl words"
)]
struct Cli {
    /// Output format
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,

    /// Worker threads for enumeration sweeps (0 or unset: all cores)
    #[arg(long, global = true, env = "CAUCHON_JOBS")]
    jobs: Option<usize>,

    /// Refuse enumerations visiting more diagrams than this
    #[arg(long, global = true, default_value_t = 10_000_000)]
    cap: u64,

    /// Fractional digits when rendering exact rationals as decimals
    #[arg(long, global = true, default_value_t = 6)]
    precision: usize,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Check a diagram file against the left-or-above rule
    Validate {
        /// Diagram file path, or `-` for standard input
        input: String,
    },
    /// White count and stratum dimension of a diagram
    Dim {
        /// Diagram file path, or `-` for standard input
        input: String,
        /// Also print the skew-adjacency matrix
        #[arg(long)]
        show_matrix: bool,
        /// Also run the triangularization audit (diagram must have no
        /// all-black columns)
        #[arg(long)]
        audit: bool,
    },
    /// Descent chain from a diagram down to stratum dimension zero
    Chain {
        /// Diagram file path, or `-` for standard input
        input: String,
    },
    /// Histogram of stratum dimensions over all m x n diagrams
    Dist { m: usize, n: usize },
    /// Closed-form number of m x n diagrams
    Count { m: usize, n: usize },
    /// Empirical dimension fractions against their limits for n = m..=n_max
    Conjecture { m: usize, n_max: usize },
    /// Stratum dimension of a subset of an antisymmetric integer system
    Cgl {
        /// System file path (`N` then the N x N matrix), or `-` for stdin
        system: String,
        /// 1-based indices of the subset (omit for the empty subset)
        subset: Vec<usize>,
        /// Also print the complement submatrix
        #[arg(long)]
        show_matrix: bool,
    },
    /// Reduced-word computations: prefix-root matrix kernel and ker(id + w)
    Weyl {
        /// Root system, e.g. A3, B2, G2
        system: String,
        /// Comma-separated 1-based word letters; empty for the empty word
        #[arg(default_value = "")]
        word: String,
        /// Cross-check the word against the all-white M x N diagram
        #[arg(long, num_args = 2, value_names = ["M", "N"])]
        qm: Option<Vec<usize>>,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}

fn run(cli: &Cli) -> Result<ExitCode, Box<dyn std::error::Error>> {
    let jobs = match cli.jobs {
        Some(0) | None => std::thread::available_parallelism().map_or(1, |p| p.get()),
        Some(j) => j,
    };
    match &cli.command {
        Command::Validate { input } => cmd_validate(cli, input),
        Command::Dim {
            input,
            show_matrix,
            audit,
        } => cmd_dim(cli, input, *show_matrix, *audit),
        Command::Chain { input } => cmd_chain(cli, input),
        Command::Dist { m, n } => cmd_dist(cli, *m, *n, jobs),
        Command::Count { m, n } => cmd_count(cli, *m, *n),
        Command::Conjecture { m, n_max } => cmd_conjecture(cli, *m, *n_max, jobs),
        Command::Cgl {
            system,
            subset,
            show_matrix,
        } => cmd_cgl(cli, system, subset, *show_matrix),
        Command::Weyl { system, word, qm } => cmd_weyl(cli, system, word, qm.as_deref()),
    }
}

fn read_input(path: &str) -> Result<String, Box<dyn std::error::Error>> {
    if path == "-" {
        let mut buf = String::new();
        std::io::stdin().read_to_string(&mut buf)?;
        Ok(buf)
    } else {
        Ok(std::fs::read_to_string(path).map_err(|e| format!("{path}: {e}"))?)
    }
}

fn print_json(value: Value) {
    println!("{value}");
}

fn cmd_validate(cli: &Cli, input: &str) -> Result<ExitCode, Box<dyn std::error::Error>> {
    let text = read_input(input)?;
    let (m, n, rows) = parse_grid(&text)?;
    let violation = CauchonDiagram::validity_violation(n, &rows);
    match cli.format {
        Format::Text => match violation {
            None => println!("valid"),
            Some((r, c)) => println!("invalid at ({},{})", r + 1, c + 1),
        },
        Format::Csv => {
            println!("valid,row,col");
            match violation {
                None => println!("true,,"),
                Some((r, c)) => println!("false,{},{}", r + 1, c + 1),
            }
        }
        Format::Json => {
            let mut obj = json!({ "schema": SCHEMA, "m": m, "n": n, "valid": violation.is_none() });
            if let Some((r, c)) = violation {
                obj["offending_box"] = json!([r + 1, c + 1]);
            }
            print_json(obj);
        }
    }
    Ok(if violation.is_none() {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    })
}

fn cmd_dim(
    cli: &Cli,
    input: &str,
    show_matrix: bool,
    audit: bool,
) -> Result<ExitCode, Box<dyn std::error::Error>> {
    let diagram = CauchonDiagram::parse(&read_input(input)?)?;
    let report = StratumReport::new(diagram);
    let audit_result = if audit {
        Some(verify_triangularization(&report.diagram)?)
    } else {
        None
    };
    match cli.format {
        Format::Text => {
            println!("m: {}", report.diagram.m());
            println!("n: {}", report.diagram.n());
            println!("white_count: {}", report.white_count);
            println!("stratum_dim: {}", report.stratum_dim);
            if show_matrix {
                print!("matrix:\n{}", skew_adjacency(&report.diagram).as_matrix());
            }
            if let Some(a) = &audit_result {
                match a.failure() {
                    None => println!("triangularization_audit: pass"),
                    Some(f) => println!("triangularization_audit: fail ({f:?})"),
                }
            }
        }
        Format::Csv => {
            println!("m,n,white_count,stratum_dim");
            println!(
                "{},{},{},{}",
                report.diagram.m(),
                report.diagram.n(),
                report.white_count,
                report.stratum_dim
            );
        }
        Format::Json => {
            let mut obj = json!({
                "schema": SCHEMA,
                "m": report.diagram.m(),
                "n": report.diagram.n(),
                "white_count": report.white_count,
                "stratum_dim": report.stratum_dim,
            });
            if show_matrix {
                obj["matrix"] = matrix_json(skew_adjacency(&report.diagram).as_matrix());
            }
            if let Some(a) = &audit_result {
                obj["triangularization_audit"] = match a.failure() {
                    None => json!("pass"),
                    Some(f) => json!(format!("fail ({f:?})")),
                };
            }
            print_json(obj);
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn matrix_json(m: &cauchon::IntMatrix) -> Value {
    let rows: Vec<Vec<String>> = (0..m.rows())
        .map(|i| (0..m.cols()).map(|j| m[(i, j)].to_string()).collect())
        .collect();
    json!(rows)
}

fn diagram_body(d: &CauchonDiagram) -> String {
    // grid rows joined by `/`, without the header line
    d.to_text().lines().skip(1).collect::<Vec<_>>().join("/")
}

fn cmd_chain(cli: &Cli, input: &str) -> Result<ExitCode, Box<dyn std::error::Error>> {
    let diagram = CauchonDiagram::parse(&read_input(input)?)?;
    let chain = build_chain(&diagram)?;
    match cli.format {
        Format::Text => {
            let mut first = true;
            for step in chain.steps() {
                if !first {
                    println!();
                }
                first = false;
                println!("dim: {}", step.dim);
                print!("{}", step.diagram.to_text());
            }
        }
        Format::Csv => {
            println!("step,dim,rows");
            for (k, step) in chain.steps().iter().enumerate() {
                println!("{},{},{}", k, step.dim, diagram_body(&step.diagram));
            }
        }
        Format::Json => {
            let steps: Vec<Value> = chain
                .steps()
                .iter()
                .map(|s| {
                    json!({
                        "diagram": s.diagram.to_text().trim_end(),
                        "dim": s.dim,
                    })
                })
                .collect();
            print_json(json!({ "schema": SCHEMA, "steps": steps }));
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn cmd_dist(
    cli: &Cli,
    m: usize,
    n: usize,
    jobs: usize,
) -> Result<ExitCode, Box<dyn std::error::Error>> {
    let dist = dim_distribution(m, n, cli.cap, jobs)?;
    match cli.format {
        Format::Text => {
            println!("m: {m}");
            println!("n: {n}");
            println!("total: {}", dist.total());
            for (dim, count) in dist.counts() {
                println!("dim {dim}: {count}");
            }
        }
        Format::Csv => {
            println!("m,n,dim,count,total");
            for (dim, count) in dist.counts() {
                println!("{m},{n},{dim},{count},{}", dist.total());
            }
        }
        Format::Json => {
            let counts: serde_json::Map<String, Value> = dist
                .counts()
                .iter()
                .map(|(dim, count)| (dim.to_string(), json!(count)))
                .collect();
            print_json(json!({
                "schema": SCHEMA,
                "m": m,
                "n": n,
                "total": dist.total(),
                "counts": counts,
            }));
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn cmd_count(cli: &Cli, m: usize, n: usize) -> Result<ExitCode, Box<dyn std::error::Error>> {
    if m == 0 || n == 0 {
        return Err(Box::new(cauchon::Error::EmptyGrid));
    }
    let count = diagram_count(m, n);
    match cli.format {
        Format::Text => println!("{count}"),
        Format::Csv => {
            println!("m,n,count");
            println!("{m},{n},{count}");
        }
        Format::Json => print_json(json!({
            "schema": SCHEMA,
            "m": m,
            "n": n,
            "count": count.to_string(),
        })),
    }
    Ok(ExitCode::SUCCESS)
}

fn rational_cell(r: &BigRational, precision: usize) -> String {
    format_rational_decimal(r, precision)
}

fn cmd_conjecture(
    cli: &Cli,
    m: usize,
    n_max: usize,
    jobs: usize,
) -> Result<ExitCode, Box<dyn std::error::Error>> {
    if m == 0 {
        return Err(Box::new(cauchon::Error::EmptyGrid));
    }
    let rows = conjecture_table(m, n_max, cli.cap, jobs)?;
    let p = cli.precision;
    match cli.format {
        Format::Text | Format::Csv => {
            println!("m,n,i,count,total,empirical,limit,abs_error");
            for r in &rows {
                println!(
                    "{},{},{},{},{},{},{},{}",
                    r.m,
                    r.n,
                    r.i,
                    r.count,
                    r.total,
                    rational_cell(&r.empirical, p),
                    rational_cell(&r.limit, p),
                    rational_cell(&r.abs_error, p),
                );
            }
        }
        Format::Json => {
            let rows: Vec<Value> = rows
                .iter()
                .map(|r| {
                    json!({
                        "m": r.m,
                        "n": r.n,
                        "i": r.i,
                        "count": r.count,
                        "total": r.total,
                        "empirical": { "exact": r.empirical.to_string(), "decimal": rational_cell(&r.empirical, p) },
                        "limit": { "exact": r.limit.to_string(), "decimal": rational_cell(&r.limit, p) },
                        "abs_error": { "exact": r.abs_error.to_string(), "decimal": rational_cell(&r.abs_error, p) },
                    })
                })
                .collect();
            print_json(json!({ "schema": SCHEMA, "rows": rows }));
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn cmd_cgl(
    cli: &Cli,
    system: &str,
    subset: &[usize],
    show_matrix: bool,
) -> Result<ExitCode, Box<dyn std::error::Error>> {
    let sys = CglSystem::parse(&read_input(system)?)?;
    for &i in subset {
        if i == 0 {
            return Err("subset indices are 1-based".into());
        }
    }
    let w = ComplementSet::new(sys.size(), subset.iter().map(|&i| i - 1))?;
    let dim = cgl_stratum_dim(&sys, &w)?;
    match cli.format {
        Format::Text => {
            println!("size: {}", sys.size());
            println!("subset_size: {}", w.subset().len());
            println!("complement_size: {}", w.complement().len());
            println!("stratum_dim: {dim}");
            if show_matrix {
                print!("matrix:\n{}", stratum_matrix(&sys, &w)?.as_matrix());
            }
        }
        Format::Csv => {
            println!("size,subset_size,complement_size,stratum_dim");
            println!(
                "{},{},{},{dim}",
                sys.size(),
                w.subset().len(),
                w.complement().len()
            );
        }
        Format::Json => {
            let mut obj = json!({
                "schema": SCHEMA,
                "size": sys.size(),
                "subset": w.subset().iter().map(|i| i + 1).collect::<Vec<_>>(),
                "complement_size": w.complement().len(),
                "stratum_dim": dim,
            });
            if show_matrix {
                obj["matrix"] = matrix_json(stratum_matrix(&sys, &w)?.as_matrix());
            }
            print_json(obj);
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn cmd_weyl(
    cli: &Cli,
    system: &str,
    word_text: &str,
    qm: Option<&[usize]>,
) -> Result<ExitCode, Box<dyn std::error::Error>> {
    let rs = RootSystem::parse(system)?;
    let word = WeylWord::parse(word_text)?;
    let reduced = is_reduced(&rs, &word)?;

    if !reduced {
        match cli.format {
            Format::Text => {
                println!("system: {rs}");
                println!("word: {word}");
                println!("length: {}", word.len());
                println!("reduced: false");
            }
            Format::Csv => {
                println!("system,word,length,reduced,schubert_kernel_dim,zero_stratum_dim");
                println!("{rs},\"{word}\",{},false,,", word.len());
            }
            Format::Json => print_json(json!({
                "schema": SCHEMA,
                "system": rs.to_string(),
                "word": word.to_string(),
                "length": word.len(),
                "reduced": false,
            })),
        }
        return Ok(ExitCode::from(1));
    }

    let skew_dim = schubert_cgl_matrix(&rs, &word)?.kernel_dim();
    let zero_dim = zero_stratum_dim(&rs, &word)?;
    let qm_check = match qm {
        Some(&[m, n]) => Some(quantum_matrix_word_check(m, n, &word)?),
        Some(_) => return Err("--qm takes exactly two values".into()),
        None => None,
    };

    let mut exit = ExitCode::SUCCESS;
    match cli.format {
        Format::Text => {
            println!("system: {rs}");
            println!("word: {word}");
            println!("length: {}", word.len());
            println!("reduced: true");
            println!("schubert_kernel_dim: {skew_dim}");
            println!("zero_stratum_dim: {zero_dim}");
            if let Some(c) = &qm_check {
                println!("qm_expected_word_length: {}", c.expected_len);
                println!("qm_all_white_stratum_dim: {}", c.all_white_dim);
                println!("qm_match: {}", c.matches());
            }
        }
        Format::Csv => {
            println!("system,word,length,reduced,schubert_kernel_dim,zero_stratum_dim");
            println!("{rs},\"{word}\",{},true,{skew_dim},{zero_dim}", word.len());
        }
        Format::Json => {
            let mut obj = json!({
                "schema": SCHEMA,
                "system": rs.to_string(),
                "word": word.to_string(),
                "length": word.len(),
                "reduced": true,
                "schubert_kernel_dim": skew_dim,
                "zero_stratum_dim": zero_dim,
            });
            if let Some(c) = &qm_check {
                obj["qm"] = json!({
                    "expected_word_length": c.expected_len,
                    "all_white_stratum_dim": c.all_white_dim,
                    "match": c.matches(),
                });
            }
            print_json(obj);
        }
    }
    if let Some(c) = &qm_check {
        if !c.matches() {
            exit = ExitCode::from(1);
        }
    }
    Ok(exit)
}
