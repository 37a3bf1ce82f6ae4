//! Command-line front end: validate rewrite systems, enumerate critical
//! pairs, check local confluence, and render DOT.

use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use sdcp_core::confluence::{check_local_confluence, ConfluenceOptions, ConfluenceVerdict};
use sdcp_core::critical_pairs::{
    collect_critical_pairs, dedup_up_to_iso, CriticalPairCandidate, EnumerationMode,
    EnumerationOptions,
};
use sdcp_core::dot::{critical_pair_to_dot, interfaced_to_dot};
use sdcp_core::json::{emit_critical_pair, emit_report, parse_system, ParseError};
use sdcp_core::rules::RewriteSystem;

const EXIT_OK: u8 = 0;
const EXIT_FAIL: u8 = 1;
const EXIT_UNKNOWN: u8 = 2;
const EXIT_PARSE: u8 = 64;
const EXIT_INVALID: u8 = 65;

#[derive(Parser)]
#[command(
    name = "sdcp",
    about = "Critical pair analysis for string diagram rewrite systems",
    version
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct PairArgs {
    /// System file (signature + rules, JSON).
    system: PathBuf,
    /// Enumerate with the node-gluing phase (all critical pairs).
    #[arg(long, conflicts_with = "essential")]
    all: bool,
    /// Enumerate glued-hyperedge pairs only (the default).
    #[arg(long)]
    essential: bool,
    /// Keep isomorphic duplicates.
    #[arg(long)]
    no_dedup: bool,
    /// Visit each unordered rule pair once instead of all of I².
    #[arg(long)]
    skip_mirrors: bool,
    /// Output format.
    #[arg(long, default_value = "json", value_parser = ["json", "dot"])]
    format: String,
    /// Write one file per pair into this directory instead of stdout.
    #[arg(long)]
    out: Option<PathBuf>,
    /// Worker threads.
    #[arg(long, default_value_t = 1)]
    jobs: usize,
}

#[derive(Subcommand)]
enum Command {
    /// Check every rule for left-connectedness; print violations.
    Validate { system: PathBuf },
    /// Enumerate critical pairs.
    CriticalPairs(PairArgs),
    /// Check local confluence via joinability of essential critical pairs.
    Confluence {
        system: PathBuf,
        /// Maximum rewrite depth per side of each pair.
        #[arg(long, default_value_t = 5)]
        max_depth: usize,
        /// State cap per side before giving up on a pair.
        #[arg(long, default_value_t = 10_000)]
        frontier_cap: usize,
        /// Worker threads.
        #[arg(long, default_value_t = 1)]
        jobs: usize,
    },
    /// Write DOT renderings of every rule and every critical pair.
    Render {
        system: PathBuf,
        /// Output directory.
        #[arg(long, default_value = ".")]
        out: PathBuf,
        /// Render all critical pairs, not just the essential ones.
        #[arg(long)]
        all: bool,
        /// Keep isomorphic duplicates.
        #[arg(long)]
        no_dedup: bool,
    },
}

fn load_system(path: &Path) -> Result<RewriteSystem, u8> {
    let text = match fs::read_to_string(path) {
        Ok(t) => t,
        Err(e) => {
            eprintln!("error: cannot read {}: {e}", path.display());
            return Err(EXIT_PARSE);
        }
    };
    match parse_system(&text) {
        Ok(sys) => Ok(sys),
        Err(ParseError::Json(e)) => {
            eprintln!("error: {}: {e} (line {}, column {})", path.display(), e.line(), e.column());
            Err(EXIT_PARSE)
        }
        Err(ParseError::Semantic(e)) => {
            eprintln!("error: {}: invalid system: {e}", path.display());
            Err(EXIT_INVALID)
        }
    }
}

fn require_valid(sys: &RewriteSystem) -> Result<(), u8> {
    let violations = sys.validate();
    if violations.is_empty() {
        return Ok(());
    }
    for (idx, vs) in violations {
        for v in vs {
            eprintln!("rule #{idx} ({}): {v}", sys.rules()[idx].name);
        }
    }
    Err(EXIT_INVALID)
}

fn cmd_validate(path: &Path) -> u8 {
    let sys = match load_system(path) {
        Ok(s) => s,
        Err(code) => return code,
    };
    let violations = sys.validate();
    if violations.is_empty() {
        println!("ok: {} rules, all left-connected", sys.rules().len());
        return EXIT_OK;
    }
    for (idx, vs) in &violations {
        for v in vs {
            println!("rule #{idx} ({}): {v}", sys.rules()[*idx].name);
        }
    }
    EXIT_INVALID
}

fn enumerate(sys: &RewriteSystem, args: &PairArgs) -> Vec<CriticalPairCandidate> {
    let mode = if args.all {
        EnumerationMode::All
    } else {
        EnumerationMode::Essential
    };
    let opts = EnumerationOptions {
        mode,
        skip_mirror_pairs: args.skip_mirrors,
    };
    let mut pairs = collect_critical_pairs(sys, opts, args.jobs);
    if !args.no_dedup {
        pairs = dedup_up_to_iso(pairs);
    }
    pairs
}

fn write_or_print(out: &Option<PathBuf>, name: &str, content: &str) -> Result<(), u8> {
    match out {
        None => {
            print!("{content}");
            if !content.ends_with('\n') {
                println!();
            }
            Ok(())
        }
        Some(dir) => {
            if let Err(e) = fs::create_dir_all(dir) {
                eprintln!("error: cannot create {}: {e}", dir.display());
                return Err(EXIT_FAIL);
            }
            let path = dir.join(name);
            match fs::File::create(&path).and_then(|mut f| f.write_all(content.as_bytes())) {
                Ok(()) => Ok(()),
                Err(e) => {
                    eprintln!("error: cannot write {}: {e}", path.display());
                    Err(EXIT_FAIL)
                }
            }
        }
    }
}

fn cmd_critical_pairs(args: &PairArgs) -> u8 {
    let sys = match load_system(&args.system) {
        Ok(s) => s,
        Err(code) => return code,
    };
    if let Err(code) = require_valid(&sys) {
        return code;
    }
    let pairs = enumerate(&sys, args);
    for (k, pair) in pairs.iter().enumerate() {
        let result = match args.format.as_str() {
            "dot" => {
                let name = format!("pair-{k:03}");
                write_or_print(&args.out, &format!("{name}.dot"), &critical_pair_to_dot(&name, pair))
            }
            _ => write_or_print(
                &args.out,
                &format!("pair-{k:03}.json"),
                &emit_critical_pair(pair),
            ),
        };
        if let Err(code) = result {
            return code;
        }
    }
    eprintln!("{} critical pairs", pairs.len());
    EXIT_OK
}

fn cmd_confluence(path: &Path, max_depth: usize, frontier_cap: usize, jobs: usize) -> u8 {
    let sys = match load_system(path) {
        Ok(s) => s,
        Err(code) => return code,
    };
    if let Err(code) = require_valid(&sys) {
        return code;
    }
    let opts = ConfluenceOptions {
        max_depth,
        frontier_cap,
        jobs,
        dedup: true,
    };
    let report = match check_local_confluence(&sys, &opts) {
        Ok(r) => r,
        Err(e) => {
            eprintln!("error: {e}");
            return EXIT_INVALID;
        }
    };
    println!("{}", emit_report(&report));
    match report.verdict {
        ConfluenceVerdict::LocallyConfluent => EXIT_OK,
        ConfluenceVerdict::NotLocallyConfluent => EXIT_FAIL,
        ConfluenceVerdict::Unknown => EXIT_UNKNOWN,
    }
}

fn cmd_render(path: &Path, out: &Path, all: bool, no_dedup: bool) -> u8 {
    let sys = match load_system(path) {
        Ok(s) => s,
        Err(code) => return code,
    };
    if let Err(code) = require_valid(&sys) {
        return code;
    }
    let out_opt = Some(out.to_path_buf());
    for (idx, rule) in sys.rules().iter().enumerate() {
        for (side, ih) in [("left", &rule.left), ("right", &rule.right)] {
            let name = format!("rule-{idx}-{}-{side}", rule.name);
            let dot = interfaced_to_dot(&name, ih, None, None);
            if let Err(code) = write_or_print(&out_opt, &format!("{name}.dot"), &dot) {
                return code;
            }
        }
    }
    let args = PairArgs {
        system: path.to_path_buf(),
        all,
        essential: !all,
        no_dedup,
        skip_mirrors: false,
        format: "dot".into(),
        out: out_opt.clone(),
        jobs: 1,
    };
    let pairs = enumerate(&sys, &args);
    for (k, pair) in pairs.iter().enumerate() {
        let name = format!("pair-{k:03}");
        if let Err(code) =
            write_or_print(&out_opt, &format!("{name}.dot"), &critical_pair_to_dot(&name, pair))
        {
            return code;
        }
    }
    eprintln!(
        "wrote {} rule and {} pair renderings to {}",
        2 * sys.rules().len(),
        pairs.len(),
        out.display()
    );
    EXIT_OK
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let code = match &cli.command {
        Command::Validate { system } => cmd_validate(system),
        Command::CriticalPairs(args) => cmd_critical_pairs(args),
        Command::Confluence {
            system,
            max_depth,
            frontier_cap,
            jobs,
        } => cmd_confluence(system, *max_depth, *frontier_cap, *jobs),
        Command::Render {
            system,
            out,
            all,
            no_dedup,
        } => cmd_render(system, out, *all, *no_dedup),
    };
    ExitCode::from(code)
}
