//! The `verify` sweep: every closed form against its brute-force oracle.

use std::time::Instant;

use oddtrees::arith::{all_odd, even_compositions, positive_compositions, Count};
use oddtrees::closed_forms::{
    odd_trees_bipartite, odd_trees_complete, odd_trees_complete_by_sum, tau_bipartite,
    tau_complete, trees_with_degrees_bipartite, trees_with_degrees_complete,
};
use oddtrees::oracles::{
    bipartite_degree_histogram, complete_degree_histogram, matrix_tree_count, BipartiteHistogram,
    CompleteHistogram, LabeledGraph,
};
use oddtrees::sign_sum::{hypercube_power_sum, multinomial_power_sum, CoefficientVector};
use oddtrees::{BipartiteDegreeSpec, DegreeSequence};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::args::{Scope, VerifyArgs};
use crate::report::{CaseRecord, Parameters, VerificationReport};

/// Exhaustive hypercube identity: coefficients over `-2..=2`, `n <= 5`, powers `0..=6`.
const SIGNSUM_EXHAUSTIVE_DIM: u32 = 5;
const SIGNSUM_EXHAUSTIVE_POWER: u32 = 6;

struct Sweep {
    cases: Vec<CaseRecord>,
    timings: bool,
}

impl Sweep {
    fn ms(&self, started: Instant) -> f64 {
        if self.timings {
            started.elapsed().as_secs_f64() * 1e3
        } else {
            0.0
        }
    }

    fn push(
        &mut self,
        family: &str,
        parameters: Parameters,
        formula: Result<Count, oddtrees::Error>,
        oracle: Count,
        kind: &str,
        started: Instant,
    ) {
        let elapsed = self.ms(started);
        let record = match formula {
            Ok(value) => CaseRecord::new(family, parameters, value, oracle, kind, elapsed),
            Err(e) => CaseRecord::failed(family, parameters, kind, e.to_string()),
        };
        self.cases.push(record);
    }
}

pub fn run_verify(args: &VerifyArgs) -> VerificationReport {
    let mut sweep = Sweep {
        cases: Vec::new(),
        timings: !args.no_timings,
    };
    let wants = |s: Scope| args.scope.contains(&s);

    if wants(Scope::Complete) || wants(Scope::Degrees) {
        for n in 1..=args.complete_max {
            let started = Instant::now();
            match complete_degree_histogram(n) {
                Ok(h) => {
                    if wants(Scope::Complete) {
                        complete_cases(&mut sweep, n, &h, started);
                    }
                    if wants(Scope::Degrees) {
                        complete_degree_cases(&mut sweep, n, &h);
                    }
                }
                Err(e) => {
                    for family in ["odd-complete", "complete"] {
                        sweep.cases.push(CaseRecord::failed(
                            family,
                            Parameters::Size { n },
                            "pruefer",
                            e.to_string(),
                        ));
                    }
                }
            }
        }
    }

    if wants(Scope::Bipartite) || wants(Scope::Degrees) {
        for total in 2..=args.bipartite_max {
            for m in 1..total {
                let n = total - m;
                let started = Instant::now();
                match bipartite_degree_histogram(m, n) {
                    Ok(h) => {
                        if wants(Scope::Bipartite) {
                            bipartite_cases(&mut sweep, m, n, &h, started);
                        }
                        if wants(Scope::Degrees) {
                            bipartite_degree_cases(&mut sweep, m, n, &h);
                        }
                    }
                    Err(e) => {
                        for family in ["odd-bipartite", "bipartite"] {
                            sweep.cases.push(CaseRecord::failed(
                                family,
                                Parameters::Pair { m, n },
                                "pruefer-bipartite",
                                e.to_string(),
                            ));
                        }
                    }
                }
            }
        }
    }

    if wants(Scope::Signsum) {
        signsum_cases(&mut sweep, args.seed, args.trials);
    }

    VerificationReport::new(sweep.cases)
}

fn complete_cases(sweep: &mut Sweep, n: u32, h: &CompleteHistogram, started: Instant) {
    let p = || Parameters::Size { n };
    // the histogram pass is charged to the first case of the group
    sweep.push(
        "odd-complete",
        p(),
        odd_trees_complete(n),
        h.count_where(all_odd),
        "pruefer",
        started,
    );

    let t = Instant::now();
    sweep.push("complete", p(), tau_complete(n), h.total(), "pruefer", t);

    let t = Instant::now();
    let det = matrix_tree_count(&LabeledGraph::complete(n));
    sweep.push("complete", p(), tau_complete(n), det, "matrix-tree", t);

    let t = Instant::now();
    match odd_trees_complete_by_sum(n) {
        Ok(by_sum) => sweep.push(
            "odd-complete",
            p(),
            odd_trees_complete(n),
            by_sum,
            "composition-sum",
            t,
        ),
        Err(e) => sweep.cases.push(CaseRecord::failed(
            "odd-complete",
            p(),
            "composition-sum",
            e.to_string(),
        )),
    }
}

fn complete_degree_cases(sweep: &mut Sweep, n: u32, h: &CompleteHistogram) {
    if n < 2 {
        return;
    }
    let mut closure = Count::zero();
    let started = Instant::now();
    for d in positive_compositions(2 * n - 2, n as usize) {
        let t = Instant::now();
        let seq = DegreeSequence::new(d.clone()).expect("compositions are positive");
        let formula = trees_with_degrees_complete(&seq);
        closure = closure + &formula;
        sweep.push(
            "degrees-complete",
            Parameters::Degrees { degrees: d.clone() },
            Ok(formula),
            h.count(&d),
            "pruefer",
            t,
        );
    }
    sweep.push(
        "closure-complete",
        Parameters::Size { n },
        Ok(closure),
        h.total(),
        "pruefer",
        started,
    );

    // odd-restricted closure: degrees 2k+1 over even compositions k of n-2
    let t = Instant::now();
    let odd_closure: Count = even_compositions(n - 2, n as usize)
        .map(|k| {
            let d = k.iter().map(|x| x + 1).collect();
            trees_with_degrees_complete(&DegreeSequence::new(d).expect("odd degrees are positive"))
        })
        .sum();
    sweep.push(
        "closure-odd-complete",
        Parameters::Size { n },
        Ok(odd_closure),
        h.count_where(all_odd),
        "pruefer",
        t,
    );
}

fn bipartite_cases(sweep: &mut Sweep, m: u32, n: u32, h: &BipartiteHistogram, started: Instant) {
    let p = || Parameters::Pair { m, n };
    let odd = h.count_where(|a, b| all_odd(a) && all_odd(b));
    sweep.push(
        "odd-bipartite",
        p(),
        odd_trees_bipartite(m, n),
        odd,
        "pruefer-bipartite",
        started,
    );

    let t = Instant::now();
    sweep.push(
        "bipartite",
        p(),
        tau_bipartite(m, n),
        h.total(),
        "pruefer-bipartite",
        t,
    );

    let t = Instant::now();
    let det = matrix_tree_count(&LabeledGraph::complete_bipartite(m, n));
    sweep.push("bipartite", p(), tau_bipartite(m, n), det, "matrix-tree", t);
}

fn bipartite_degree_cases(sweep: &mut Sweep, m: u32, n: u32, h: &BipartiteHistogram) {
    let edges = m + n - 1;
    let mut closure = Count::zero();
    let started = Instant::now();
    for a in positive_compositions(edges, m as usize) {
        for b in positive_compositions(edges, n as usize) {
            let t = Instant::now();
            let spec =
                BipartiteDegreeSpec::new(a.clone(), b.clone()).expect("compositions are positive");
            let formula = trees_with_degrees_bipartite(&spec);
            closure = closure + &formula;
            let oracle = h.count(&a, &b);
            sweep.push(
                "degrees-bipartite",
                Parameters::BipartiteDegrees { a: a.clone(), b },
                Ok(formula),
                oracle,
                "pruefer-bipartite",
                t,
            );
        }
    }
    sweep.push(
        "closure-bipartite",
        Parameters::Pair { m, n },
        Ok(closure),
        h.total(),
        "pruefer-bipartite",
        started,
    );
}

fn signsum_cases(sweep: &mut Sweep, seed: u64, trials: u32) {
    for n in 1..=SIGNSUM_EXHAUSTIVE_DIM {
        let vectors = 5u64.pow(n);
        for power in 0..=SIGNSUM_EXHAUSTIVE_POWER {
            let started = Instant::now();
            let mut agreeing = 0u64;
            for code in 0..vectors {
                let a: Vec<i64> = (0..n)
                    .map(|i| (code / 5u64.pow(i) % 5) as i64 - 2)
                    .collect();
                let a = CoefficientVector::new(a).expect("nonempty");
                let direct = hypercube_power_sum(&a, power).expect("within enumeration bound");
                if direct == multinomial_power_sum(&a, power) {
                    agreeing += 1;
                }
            }
            // formula side: vectors evaluated; oracle side: vectors on which both sides agree
            let elapsed = sweep.ms(started);
            sweep.cases.push(CaseRecord::new(
                "signsum-exhaustive",
                Parameters::Hypercube { n, power, vectors },
                vectors,
                agreeing,
                "hypercube",
                elapsed,
            ));
        }
    }

    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..trials {
        let n = rng.gen_range(1..=12usize);
        let power = rng.gen_range(0..=6u32);
        let coeffs: Vec<i64> = (0..n).map(|_| rng.gen_range(-50..=50)).collect();
        let started = Instant::now();
        let a = CoefficientVector::new(coeffs.clone()).expect("nonempty");
        let expanded = multinomial_power_sum(&a, power);
        let direct = hypercube_power_sum(&a, power).expect("within enumeration bound");
        let elapsed = sweep.ms(started);
        sweep.cases.push(CaseRecord::new(
            "signsum-random",
            Parameters::SignSum { coeffs, power },
            expanded,
            direct,
            "hypercube",
            elapsed,
        ));
    }
}
