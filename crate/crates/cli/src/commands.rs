use std::io::Write;
use std::time::Instant;

use oddtrees::arith::all_odd;
use oddtrees::closed_forms::{
    odd_trees_bipartite, odd_trees_complete, odd_trees_complete_by_sum, tau_bipartite,
    tau_complete, trees_with_degrees_bipartite, trees_with_degrees_complete,
};
use oddtrees::degrees::parse_degree_list;
use oddtrees::oracles::{
    count_trees_bipartite_brute, count_trees_complete_brute, count_trees_complete_decoded,
    matrix_tree_count, LabeledGraph,
};
use oddtrees::sign_sum::{
    binomial_collapse, hypercube_power_sum, multinomial_power_sum, CoefficientVector,
};
use oddtrees::{BipartiteDegreeSpec, Count, DegreeSequence};

use crate::args::{
    BenchArgs, BenchTask, CountArgs, CountKind, GraphArgs, OracleArgs, OracleMethod, SignsumArgs,
    SignsumMode,
};
use crate::{CliError, Outcome};

/// What a `count` or `oracle` invocation asks about, with its flags checked.
enum Query {
    Complete(u32),
    Bipartite(u32, u32),
    OddComplete(u32),
    OddBipartite(u32, u32),
    Degrees(DegreeSequence),
    BipartiteDegrees(BipartiteDegreeSpec),
}

fn need(value: Option<u32>, flag: &str, kind: &str) -> Result<u32, CliError> {
    value.ok_or_else(|| CliError::Usage(format!("`{kind}` requires --{flag}")))
}

fn parse_query(kind: CountKind, g: &GraphArgs) -> Result<Query, CliError> {
    Ok(match kind {
        CountKind::Complete => Query::Complete(need(g.n, "n", "complete")?),
        CountKind::OddComplete => Query::OddComplete(need(g.n, "n", "odd-complete")?),
        CountKind::Bipartite => {
            Query::Bipartite(need(g.m, "m", "bipartite")?, need(g.n, "n", "bipartite")?)
        }
        CountKind::OddBipartite => Query::OddBipartite(
            need(g.m, "m", "odd-bipartite")?,
            need(g.n, "n", "odd-bipartite")?,
        ),
        CountKind::Degrees => match (&g.degrees, &g.a, &g.b) {
            (Some(d), None, None) => Query::Degrees(DegreeSequence::new(parse_degree_list(d)?)?),
            (None, Some(a), Some(b)) => Query::BipartiteDegrees(BipartiteDegreeSpec::new(
                parse_degree_list(a)?,
                parse_degree_list(b)?,
            )?),
            _ => {
                return Err(CliError::Usage(
                    "`degrees` requires either --degrees or both --a and --b".into(),
                ))
            }
        },
    })
}

pub fn run_count(args: &CountArgs, out: &mut dyn Write) -> Result<Outcome, CliError> {
    let value = match parse_query(args.kind, &args.graph)? {
        Query::Complete(n) => tau_complete(n)?,
        Query::Bipartite(m, n) => tau_bipartite(m, n)?,
        Query::OddComplete(n) => odd_trees_complete(n)?,
        Query::OddBipartite(m, n) => odd_trees_bipartite(m, n)?,
        Query::Degrees(d) => trees_with_degrees_complete(&d),
        Query::BipartiteDegrees(spec) => trees_with_degrees_bipartite(&spec),
    };
    writeln!(out, "{value}")?;
    Ok(Outcome::Success)
}

pub fn run_oracle(args: &OracleArgs, out: &mut dyn Write) -> Result<Outcome, CliError> {
    let query = parse_query(args.kind, &args.graph)?;
    let value = match args.method {
        OracleMethod::MatrixTree => match query {
            Query::Complete(n) => matrix_tree_count(&LabeledGraph::complete(n)),
            Query::Bipartite(m, n) => matrix_tree_count(&LabeledGraph::complete_bipartite(m, n)),
            _ => {
                return Err(CliError::Usage(
                    "--method matrix-tree only counts all spanning trees (complete, bipartite)"
                        .into(),
                ))
            }
        },
        OracleMethod::Decode => match query {
            Query::Complete(n) => count_trees_complete_decoded(n, |_| true)?.1,
            Query::OddComplete(n) => count_trees_complete_decoded(n, all_odd)?.1,
            Query::Degrees(d) => {
                count_trees_complete_decoded(d.vertex_count() as u32, |x| x == d.degrees())?.1
            }
            _ => bipartite_oracle(query)?,
        },
        OracleMethod::Pruefer => match query {
            Query::Complete(n) => count_trees_complete_brute(n, |_| true)?,
            Query::OddComplete(n) => count_trees_complete_brute(n, all_odd)?,
            Query::Degrees(d) => {
                count_trees_complete_brute(d.vertex_count() as u32, |x| x == d.degrees())?
            }
            _ => bipartite_oracle(query)?,
        },
    };
    writeln!(out, "{value}")?;
    Ok(Outcome::Success)
}

// The bipartite enumeration always decodes.
fn bipartite_oracle(query: Query) -> Result<Count, CliError> {
    Ok(match query {
        Query::Bipartite(m, n) => count_trees_bipartite_brute(m, n, |_, _| true)?,
        Query::OddBipartite(m, n) => {
            count_trees_bipartite_brute(m, n, |a, b| all_odd(a) && all_odd(b))?
        }
        Query::BipartiteDegrees(spec) => {
            let (m, n) = spec.sizes();
            count_trees_bipartite_brute(m as u32, n as u32, |a, b| {
                a == spec.side_a() && b == spec.side_b()
            })?
        }
        _ => unreachable!("complete-graph queries are handled by the caller"),
    })
}

fn parse_coefficients(text: &str) -> Result<CoefficientVector, CliError> {
    let values = text
        .split(',')
        .map(|t| {
            t.trim()
                .parse::<i64>()
                .map_err(|_| CliError::Usage(format!("malformed coefficient list {text:?}")))
        })
        .collect::<Result<Vec<_>, _>>()?;
    Ok(CoefficientVector::new(values)?)
}

pub fn run_signsum(args: &SignsumArgs, out: &mut dyn Write) -> Result<Outcome, CliError> {
    let a = parse_coefficients(&args.coeffs)?;
    match args.mode {
        SignsumMode::Direct => writeln!(out, "{}", hypercube_power_sum(&a, args.power)?)?,
        SignsumMode::Multinomial => writeln!(out, "{}", multinomial_power_sum(&a, args.power))?,
        SignsumMode::Both => {
            let direct = hypercube_power_sum(&a, args.power)?;
            let expanded = multinomial_power_sum(&a, args.power);
            let agree = direct == expanded;
            writeln!(out, "{direct}")?;
            writeln!(out, "{expanded}")?;
            writeln!(out, "{}", if agree { "match" } else { "mismatch" })?;
            if !agree {
                return Ok(Outcome::Mismatch);
            }
        }
    }
    Ok(Outcome::Success)
}

fn timed<T>(f: impl FnOnce() -> Result<T, CliError>) -> Result<(T, f64), CliError> {
    let started = Instant::now();
    let value = f()?;
    Ok((value, started.elapsed().as_secs_f64() * 1e3))
}

pub fn run_bench(args: &BenchArgs, out: &mut dyn Write) -> Result<Outcome, CliError> {
    let mut values = Vec::new();
    let mut line = |out: &mut dyn Write, strategy: &str, value: String, ms: f64| {
        values.push(value.clone());
        writeln!(out, "strategy={strategy} value={value} elapsed_ms={ms:.3}")
    };
    match args.task {
        BenchTask::HypercubeVsCollapse => {
            let n = args.n.unwrap_or(20);
            let power = args.power.unwrap_or(18);
            writeln!(out, "task=hypercube-vs-collapse n={n} power={power}")?;
            let ones = CoefficientVector::ones(n as usize)?;
            let (direct, ms) = timed(|| Ok(hypercube_power_sum(&ones, power)?))?;
            line(out, "hypercube", direct.to_string(), ms)?;
            let (grouped, ms) = timed(|| Ok(binomial_collapse(n, power)))?;
            line(out, "binomial-collapse", grouped.to_string(), ms)?;
        }
        BenchTask::CompositionSum => {
            let n = args.n.unwrap_or(16);
            writeln!(out, "task=composition-sum family=odd-complete n={n}")?;
            let (binomial, ms) = timed(|| Ok(odd_trees_complete(n)?))?;
            line(out, "binomial-form", binomial.to_string(), ms)?;
            let (by_sum, ms) = timed(|| Ok(odd_trees_complete_by_sum(n)?))?;
            line(out, "composition-sum", by_sum.to_string(), ms)?;
        }
        BenchTask::OracleSweep => {
            let n = args.n.unwrap_or(8);
            writeln!(out, "task=oracle-sweep family=odd-complete n={n}")?;
            let (formula, ms) = timed(|| Ok(odd_trees_complete(n)?))?;
            line(out, "formula", formula.to_string(), ms)?;
            let (shortcut, ms) = timed(|| Ok(count_trees_complete_brute(n, all_odd)?))?;
            line(out, "pruefer-degrees", shortcut.to_string(), ms)?;
            let ((decodes, decoded), ms) = timed(|| Ok(count_trees_complete_decoded(n, all_odd)?))?;
            writeln!(out, "decodes={decodes}")?;
            line(out, "pruefer-decode", decoded.to_string(), ms)?;
        }
    }
    let agree = values.windows(2).all(|w| w[0] == w[1]);
    writeln!(out, "{}", if agree { "agree" } else { "disagree" })?;
    Ok(if agree {
        Outcome::Success
    } else {
        Outcome::Mismatch
    })
}
