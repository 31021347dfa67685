use std::collections::BTreeMap;
use std::io::{self, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use clap::{Args, Parser, Subcommand};
use hallcheck::big::BigExample;
use hallcheck::cache::Cache;
use hallcheck::corpus::{build, default_corpus, extended_corpus};
use hallcheck::ingest::ingest;
use hallcheck::record::{run_checks, CheckOptions, NamedGroup, PiPolicy, Summary};
use hallcheck::report::{emit, summary_line, Format};
use hallcheck::GroupSpec;
use hallcheck_core::conjecture::pi_height;
use hallcheck_core::sieve::{sieve_order, sieve_range, survivors, ArithmeticTables, SieveTag};
use hallcheck_core::{ccl, hall_pair, sylow_system, PrimeSet};

const EXIT_OK: u8 = 0;
const EXIT_FOUND: u8 = 1;
const EXIT_INPUT: u8 = 2;

#[derive(Parser)]
#[command(
    name = "hallcheck",
    version,
    about = "Class-count checks for coprime Hall factorisations"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
    #[command(flatten)]
    common: Common,
}

#[derive(Args, Clone)]
struct Common {
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    format: Format,
    /// Append-only JSONL record cache.
    #[arg(long, global = true)]
    cache: Option<PathBuf>,
    /// Ignore cached records (fresh ones are still appended).
    #[arg(long, global = true)]
    recompute: bool,
    #[arg(long, default_value_t = 1, global = true)]
    jobs: usize,
}

#[derive(Subcommand)]
enum Command {
    /// Conjugacy classes of each group.
    Classes { source: String },
    /// A Hall π-subgroup, its complement and the Sylow system they come from.
    Hall {
        source: String,
        #[arg(long)]
        pi: PrimeSet,
    },
    /// The π-height of the factorisation.
    Height {
        source: String,
        #[arg(long)]
        pi: PrimeSet,
    },
    /// Con, Con* and optionally SCon.
    CheckCon {
        /// A group spec, a JSONL file, `corpus` or `extended`.
        source: String,
        #[arg(long, conflicts_with = "all_pi")]
        pi: Vec<PrimeSet>,
        #[arg(long)]
        all_pi: bool,
        #[arg(long)]
        scon: bool,
    },
    /// The arithmetic order sieve.
    Sieve {
        #[arg(long, default_value_t = 2000)]
        max: u64,
        /// Print the verdict for one order.
        #[arg(long)]
        explain: Option<u64>,
    },
    /// Con* and every oracle over the built-in corpus.
    VerifyCorpus {
        /// Add the larger groups and the orbit-count example.
        #[arg(long)]
        extended: bool,
    },
    /// Every oracle over a corpus, tallied per oracle.
    Oracles { source: String },
}

fn load(source: &str) -> Result<Vec<NamedGroup>> {
    let named = |pairs: Vec<(GroupSpec, _)>| {
        pairs
            .into_iter()
            .map(|(s, group)| NamedGroup {
                name: s.name,
                group,
            })
            .collect()
    };
    match source {
        "corpus" => return Ok(named(build(&default_corpus())?)),
        "extended" => return Ok(named(build(&extended_corpus())?)),
        _ => {}
    }
    if Path::new(source).is_file() {
        let groups = ingest(Path::new(source)).with_context(|| format!("reading {source}"))?;
        return Ok(groups
            .into_iter()
            .map(|g| NamedGroup {
                name: g.spec.name,
                group: g.group,
            })
            .collect());
    }
    let spec: GroupSpec = source.parse()?;
    let group = spec.materialise()?;
    Ok(vec![NamedGroup {
        name: spec.name,
        group,
    }])
}

fn open_cache(common: &Common) -> Result<Option<Cache>> {
    common
        .cache
        .as_deref()
        .map(|p| Cache::open(p).with_context(|| format!("opening cache {}", p.display())))
        .transpose()
}

/// Runs the checks, writes the report and returns the exit code.
fn check(
    groups: &[NamedGroup],
    policy: PiPolicy,
    opts: CheckOptions,
    common: &Common,
) -> Result<u8> {
    let mut cache = open_cache(common)?;
    let records = run_checks(
        groups,
        &policy,
        opts,
        common.jobs,
        cache.as_mut(),
        common.recompute,
    )?;
    let stdout = io::stdout();
    let mut out = stdout.lock();
    emit(&records, common.format, &mut out)?;
    out.flush()?;
    let summary = Summary::of(groups.len(), &records);
    eprintln!("{}", summary_line(&summary));
    for r in &records {
        if r.is_violation() {
            eprintln!("violation: {} pi={} excess={}", r.group, r.pi, r.con.excess);
        }
        for o in r.refutations() {
            eprintln!(
                "refuted: {} pi={} {}: {}",
                r.group, r.pi, o.oracle, o.detail
            );
        }
    }
    Ok(if summary.clean() { EXIT_OK } else { EXIT_FOUND })
}

fn print_json(value: &impl serde::Serialize) -> Result<()> {
    println!("{}", serde_json::to_string(value)?);
    Ok(())
}

fn classes(source: &str, common: &Common) -> Result<u8> {
    for g in load(source)? {
        let data = g.group.classes();
        let grp = &g.group;
        let rows: Vec<(u64, u64, u64)> = (0..data.count())
            .map(|c| {
                let r = data.representatives[c];
                (
                    grp.elem_order(r),
                    data.class_sizes[c],
                    data.centralizer_orders[c],
                )
            })
            .collect();
        match common.format {
            Format::Json => print_json(&serde_json::json!({
                "group": g.name,
                "order": grp.order(),
                "ccl": data.count(),
                "classes": rows.iter().map(|&(o, s, c)| serde_json::json!({
                    "element_order": o, "size": s, "centralizer_order": c
                })).collect::<Vec<_>>(),
            }))?,
            Format::Csv | Format::Text => {
                println!("{} order={} ccl={}", g.name, grp.order(), data.count());
                for (i, (o, s, c)) in rows.iter().enumerate() {
                    println!("  class {i}: element order {o}, size {s}, centralizer {c}");
                }
            }
        }
    }
    Ok(EXIT_OK)
}

fn hall(source: &str, pi: &PrimeSet) -> Result<u8> {
    for g in load(source)? {
        let amb = g.group.whole();
        let pair = hall_pair(&amb, pi)?;
        let system = sylow_system(&amb)?;
        println!("{} order={} pi={}", g.name, amb.order(), pair.pi);
        for (label, h) in [("A", &pair.a), ("B", &pair.b)] {
            let shown: Vec<String> = h
                .generators()
                .iter()
                .map(|&e| amb.group().perm(e).to_string())
                .collect();
            println!(
                "  {label}: order {} ccl {} generators {}",
                h.order(),
                ccl(h),
                shown.join(" ")
            );
        }
        println!("  direct product: {}", pair.is_direct());
        for (set, member) in system.members() {
            println!("  sylow system {set}: order {}", member.order());
        }
        println!("  pairwise permutable: {}", system.is_valid());
    }
    Ok(EXIT_OK)
}

fn height(source: &str, pi: &PrimeSet, common: &Common) -> Result<u8> {
    for g in load(source)? {
        let pair = hall_pair(&g.group.whole(), pi)?;
        let h = pi_height(&pair)?;
        let series: Vec<u64> = h.series.iter().map(|s| s.order()).collect();
        match common.format {
            Format::Json => print_json(&serde_json::json!({
                "group": g.name,
                "pi": pair.pi,
                "height": h.height.value(),
                "level": h.level,
                "series_orders": series,
            }))?,
            _ => println!(
                "{} pi={} height={} series orders {:?}",
                g.name, pair.pi, h.height, series
            ),
        }
    }
    Ok(EXIT_OK)
}

fn sieve(max: u64, explain: Option<u64>, common: &Common) -> Result<u8> {
    let tables = ArithmeticTables::default();
    if let Some(n) = explain {
        let v = sieve_order(n, &tables)?;
        match common.format {
            Format::Json => print_json(&v)?,
            _ => match v.eliminated_by {
                None => println!("{n}: survives ({})", v.witness),
                Some(tag) => println!("{n}: eliminated by {tag} ({})", v.witness),
            },
        }
        return Ok(EXIT_OK);
    }
    let verdicts = sieve_range(max, &tables)?;
    let surv = survivors(&verdicts);
    let mut tally: BTreeMap<SieveTag, usize> = BTreeMap::new();
    for tag in verdicts.iter().filter_map(|v| v.eliminated_by) {
        *tally.entry(tag).or_default() += 1;
    }
    match common.format {
        Format::Json => print_json(&serde_json::json!({
            "max": max,
            "survivors": surv,
            "eliminated": tally.iter().map(|(t, c)| (t.to_string(), c)).collect::<BTreeMap<_, _>>(),
        }))?,
        Format::Csv => {
            let mut w = csv::Writer::from_writer(io::stdout());
            for v in &verdicts {
                w.serialize((
                    v.n,
                    v.survives,
                    v.eliminated_by.map(|t| t.to_string()).unwrap_or_default(),
                    &v.witness,
                ))?;
            }
            w.flush()?;
        }
        Format::Text => {
            let list: Vec<String> = surv.iter().map(u64::to_string).collect();
            println!("survivors up to {max}: {}", list.join(" "));
            for (tag, count) in &tally {
                println!("  {tag}: {count}");
            }
        }
    }
    Ok(EXIT_OK)
}

fn verify_corpus(extended: bool, common: &Common) -> Result<u8> {
    let mut specs = default_corpus();
    if extended {
        specs.extend(extended_corpus());
    }
    let groups: Vec<NamedGroup> = build(&specs)?
        .into_iter()
        .map(|(s, group)| NamedGroup {
            name: s.name,
            group,
        })
        .collect();
    let opts = CheckOptions {
        oracles: true,
        scon: true,
    };
    let mut code = check(&groups, PiPolicy::All, opts, common)?;
    if extended {
        let counts = BigExample::new(5, 3).counts();
        eprintln!(
            "orbit example: |G| = {}, |G_xy| = {}, |A_x||B_y| = {}",
            counts.order,
            counts.centralizer_xy,
            counts.centralizer_a_x * counts.centralizer_b_y
        );
        if !counts.exceeds() {
            code = EXIT_FOUND;
        }
    }
    Ok(code)
}

fn oracles(source: &str, common: &Common) -> Result<u8> {
    let groups = load(source)?;
    let mut cache = open_cache(common)?;
    let opts = CheckOptions {
        oracles: true,
        scon: false,
    };
    let records = run_checks(
        &groups,
        &PiPolicy::All,
        opts,
        common.jobs,
        cache.as_mut(),
        common.recompute,
    )?;
    #[derive(Default, serde::Serialize)]
    struct Tally {
        outcomes: usize,
        applicable: usize,
        unchecked: usize,
        refuted: usize,
    }
    let mut tally: BTreeMap<String, Tally> = BTreeMap::new();
    for o in records.iter().flat_map(|r| r.oracles.iter().flatten()) {
        let t = tally.entry(o.oracle.to_string()).or_default();
        t.outcomes += 1;
        t.applicable += o.applicable as usize;
        t.unchecked += !o.checked as usize;
        t.refuted += o.refuted() as usize;
    }
    match common.format {
        Format::Json => print_json(&tally)?,
        _ => {
            for (name, t) in &tally {
                println!(
                    "{name:<24} outcomes={:<6} applicable={:<6} unchecked={:<4} refuted={}",
                    t.outcomes, t.applicable, t.unchecked, t.refuted
                );
            }
        }
    }
    let refuted: usize = tally.values().map(|t| t.refuted).sum();
    for r in &records {
        for o in r.refutations() {
            eprintln!(
                "refuted: {} pi={} {}: {}",
                r.group, r.pi, o.oracle, o.detail
            );
        }
    }
    Ok(if refuted == 0 { EXIT_OK } else { EXIT_FOUND })
}

fn run(cli: Cli) -> Result<u8> {
    let common = &cli.common;
    if common.jobs == 0 {
        bail!("--jobs must be at least 1");
    }
    match &cli.command {
        Command::Classes { source } => classes(source, common),
        Command::Hall { source, pi } => hall(source, pi),
        Command::Height { source, pi } => height(source, pi, common),
        Command::CheckCon {
            source,
            pi,
            all_pi,
            scon,
        } => {
            let policy = if *all_pi || pi.is_empty() {
                PiPolicy::All
            } else {
                PiPolicy::Explicit(pi.clone())
            };
            let opts = CheckOptions {
                oracles: false,
                scon: *scon,
            };
            check(&load(source)?, policy, opts, common)
        }
        Command::Sieve { max, explain } => sieve(*max, *explain, common),
        Command::VerifyCorpus { extended } => verify_corpus(*extended, common),
        Command::Oracles { source } => oracles(source, common),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(EXIT_INPUT)
        }
    }
}
