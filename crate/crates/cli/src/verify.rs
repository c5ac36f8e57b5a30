//! Verification suites behind `hypercat verify <suite>`.
//!
//! Every suite sweeps an identity or cross-route agreement over a bounded
//! range, prints a one-line summary plus a table of failures, and drives the
//! process exit code: 0 on a full pass, 1 on any failure.

use std::process::ExitCode;

use clap::{Args, ValueEnum};
use num_bigint::{BigInt, BigUint};

use hypercat_core::closedform::{
    fuss_catalan_power, fuss_number, geode_bi_tri_closed, geode_consecutive_closed, hyper_catalan,
};
use hypercat_core::geode::{
    alternating_geode_eval, build_g, build_h, build_u, geometric_f_coefficients, h_inverse_factor,
    weighted_gon_sum, zero_sum_geode_eval,
};
use hypercat_core::identities::{binomial_family_check, unusual_identity_check};
use hypercat_core::oracle::enumerate_subdigons;
use hypercat_core::recurrence::{
    lesser_sum_check, partition_expansion, two_shape_alternating_sum, GeodeSession,
    HyperCatalanSession, XStrategy,
};
use hypercat_core::series::{BuildMethod, PolySeries, Truncation};
use hypercat_core::TypeVec;

#[derive(Args)]
pub struct VerifyArgs {
    #[arg(value_enum)]
    pub suite: Suite,
    /// Face bound for the type sweeps
    #[arg(long, default_value_t = 5)]
    pub faces: u32,
    /// Gon bound for the type sweeps
    #[arg(long, default_value_t = 5)]
    pub gons: u32,
    /// Largest index for the convolution suite
    #[arg(long, default_value_t = 15)]
    pub max_m: u32,
    /// Largest n for the identities suite
    #[arg(long, default_value_t = 12)]
    pub n_max: u32,
    /// Largest t for the identities suite
    #[arg(long, default_value_t = 5)]
    pub t_max: i64,
}

#[derive(Clone, Copy, ValueEnum)]
pub enum Suite {
    /// Hyper-Catalan recurrence against the closed form
    Recurrence,
    /// Brute-force subdigon enumeration against the closed form
    Enumeration,
    /// Lesser Geode Sum over a type sweep
    LesserSum,
    /// Geode coefficients: series division vs recurrence vs closed forms
    DivisionVsRecurrence,
    /// Powers of S against the Fuss-Catalan closed form and vector partitions
    Raney,
    /// Catalan convolution identity
    Convolution,
    /// Closed-form spot values and step identities
    ClosedForms,
    /// Binomial coefficient identity family
    Identities,
    /// Gessel's U/H arrays and evaluation identities
    Gessel,
}

struct SuiteReport {
    name: &'static str,
    passed: usize,
    failures: Vec<String>,
}

impl SuiteReport {
    fn new(name: &'static str) -> Self {
        SuiteReport {
            name,
            passed: 0,
            failures: Vec::new(),
        }
    }

    fn record(&mut self, label: String, ok: bool) {
        if ok {
            self.passed += 1;
        } else {
            self.failures.push(label);
        }
    }

    fn finish(self) -> ExitCode {
        let total = self.passed + self.failures.len();
        if self.failures.is_empty() {
            println!(
                "suite {}: {}/{} checks passed",
                self.name, self.passed, total
            );
            ExitCode::SUCCESS
        } else {
            println!(
                "suite {}: {}/{} checks passed, {} FAILED",
                self.name,
                self.passed,
                total,
                self.failures.len()
            );
            for failure in &self.failures {
                println!("FAIL {failure}");
            }
            ExitCode::from(1)
        }
    }
}

pub fn run(args: VerifyArgs) -> ExitCode {
    let report = match args.suite {
        Suite::Recurrence => recurrence_suite(&args),
        Suite::Enumeration => enumeration_suite(&args),
        Suite::LesserSum => lesser_sum_suite(&args),
        Suite::DivisionVsRecurrence => division_suite(&args),
        Suite::Raney => raney_suite(&args),
        Suite::Convolution => convolution_suite(&args),
        Suite::ClosedForms => closed_forms_suite(),
        Suite::Identities => identities_suite(&args),
        Suite::Gessel => gessel_suite(&args),
    };
    report.finish()
}

fn sweep(args: &VerifyArgs) -> Vec<TypeVec> {
    Truncation::new(args.faces, args.gons).all_types()
}

fn recurrence_suite(args: &VerifyArgs) -> SuiteReport {
    let mut report = SuiteReport::new("recurrence");
    let mut session = HyperCatalanSession::new();
    for m in sweep(args) {
        let ok = session.value(&m) == hyper_catalan(&m);
        report.record(format!("recurrence {m}"), ok);
    }
    report
}

fn enumeration_suite(args: &VerifyArgs) -> SuiteReport {
    let mut report = SuiteReport::new("enumeration");
    let counts = enumerate_subdigons(args.faces, args.gons);
    for m in sweep(args) {
        let ok = counts.get(&m) == Some(&hyper_catalan(&m));
        report.record(format!("enumeration {m}"), ok);
    }
    report.record(
        "no out-of-range types generated".to_string(),
        counts.len() == sweep(args).len(),
    );
    report
}

fn lesser_sum_suite(args: &VerifyArgs) -> SuiteReport {
    let mut report = SuiteReport::new("lesser-sum");
    let mut session = GeodeSession::new(XStrategy::LargestComponentSmallestIndex);
    for m in sweep(args) {
        if m.is_empty() {
            continue;
        }
        let ok = lesser_sum_check(&m, |ty| session.value(ty).expect("within budget"));
        report.record(format!("lesser sum {m}"), ok);
    }
    report
}

fn division_suite(args: &VerifyArgs) -> SuiteReport {
    let mut report = SuiteReport::new("division-vs-recurrence");
    let g = build_g(Truncation::new(args.faces + 1, args.gons));
    let mut session = GeodeSession::new(XStrategy::LargestComponentSmallestIndex);
    for m in sweep(args) {
        let via_division = g.coefficient(&m);
        let via_recurrence = BigInt::from(session.value(&m).expect("within budget"));
        report.record(
            format!("division vs recurrence {m}"),
            via_division == via_recurrence,
        );
        let shapes: Vec<(u32, u32)> = m.iter().collect();
        match shapes.as_slice() {
            [(k, mult)] => {
                let closed = BigInt::from(fuss_number(*k, mult + 1));
                report.record(
                    format!("single-shape closed form {m}"),
                    via_division == closed,
                );
            }
            [(j, mj), (k, mk)] => {
                if *k == j + 1 {
                    let closed =
                        BigInt::from(geode_consecutive_closed(*j as u64, *mj as u64, *mk as u64));
                    report.record(
                        format!("consecutive closed form {m}"),
                        via_division == closed,
                    );
                }
                let alt = two_shape_alternating_sum(*j, *k, *mj, *mk).expect("distinct shapes");
                report.record(format!("alternating sum {m}"), via_division == alt);
            }
            _ => {}
        }
    }
    for (dense, expected) in [
        (&[1u32, 1, 1][..], 319u64),
        (&[1, 0, 1][..], 23),
        (&[2, 0, 2][..], 1549),
        (&[3, 0, 3][..], 145687),
    ] {
        let m = TypeVec::from_dense(dense);
        let got = session.value(&m).expect("within budget");
        report.record(
            format!("named value G{m} = {expected}"),
            got == BigUint::from(expected),
        );
    }
    report
}

fn raney_suite(args: &VerifyArgs) -> SuiteReport {
    let mut report = SuiteReport::new("raney");
    let trunc = Truncation::new(args.faces, args.gons);
    let s = PolySeries::build_s(trunc, BuildMethod::ClosedForm);
    for r in 1..=4u32 {
        let power = s.pow(r);
        for m in trunc.all_types() {
            let closed = fuss_catalan_power(&m, r as u64);
            let ok_series = power.coefficient(&m) == BigInt::from(closed.clone());
            report.record(format!("[t^{m}] S^{r} closed form"), ok_series);
            let via_partitions: BigUint = partition_expansion(&m, r)
                .into_iter()
                .map(|(_, term)| term)
                .sum();
            report.record(
                format!("[t^{m}] S^{r} partitions"),
                via_partitions == closed,
            );
        }
    }
    // the worked decomposition: C^(3)[1,0,2] = 135 + 36 + 24 + 3 = 198
    let terms = partition_expansion(&TypeVec::from_dense(&[1, 0, 2]), 3);
    let mut values: Vec<BigUint> = terms.into_iter().map(|(_, t)| t).collect();
    values.sort();
    let expected: Vec<BigUint> = [3u32, 24, 36, 135]
        .iter()
        .map(|&x| BigUint::from(x))
        .collect();
    report.record(
        "C^(3)[1,0,2] = 135+36+24+3 = 198".to_string(),
        values == expected,
    );
    report
}

fn convolution_suite(args: &VerifyArgs) -> SuiteReport {
    let mut report = SuiteReport::new("convolution");
    for m in 0..=args.max_m {
        let lhs = fuss_number(2, m + 1);
        let rhs: BigUint = (0..=m)
            .map(|n| fuss_number(2, n) * fuss_number(2, m - n))
            .sum();
        report.record(format!("Catalan convolution at m = {m}"), lhs == rhs);
    }
    report
}

fn closed_forms_suite() -> SuiteReport {
    let mut report = SuiteReport::new("closed-forms");
    for (dense, expected) in [
        (&[][..], 1u64),
        (&[1, 1][..], 5),
        (&[1, 0, 2][..], 45),
        (&[0, 0, 2][..], 4),
    ] {
        let m = TypeVec::from_dense(dense);
        report.record(
            format!("C{m} = {expected}"),
            hyper_catalan(&m) == BigUint::from(expected),
        );
    }
    for m in 0..=8u64 {
        for n in 0..=8u64 {
            let lhs = geode_bi_tri_closed(m, n + 1) + geode_bi_tri_closed(m + 1, n);
            let c = hyper_catalan(&TypeVec::from_dense(&[m as u32 + 1, n as u32 + 1]));
            report.record(format!("bi-tri step at ({m},{n})"), lhs == c);
        }
    }
    for k in 2..=5u64 {
        for m in 0..=6u64 {
            for n in 0..=6u64 {
                let lhs =
                    geode_consecutive_closed(k, m + 1, n) + geode_consecutive_closed(k, m, n + 1);
                let ty = TypeVec::single(k as u32, m as u32 + 1)
                    .add(&TypeVec::single(k as u32 + 1, n as u32 + 1));
                report.record(
                    format!("consecutive step at k={k} ({m},{n})"),
                    lhs == hyper_catalan(&ty),
                );
                if k == 2 {
                    report.record(
                        format!("k=2 specialization at ({m},{n})"),
                        geode_consecutive_closed(2, m, n) == geode_bi_tri_closed(m, n),
                    );
                }
            }
        }
    }
    for (k, m, expected) in [(2u32, 3u32, 5u64), (3, 2, 3), (4, 1, 1)] {
        report.record(
            format!("Fuss({k},{m}) = {expected}"),
            fuss_number(k, m) == BigUint::from(expected),
        );
    }
    report
}

fn identities_suite(args: &VerifyArgs) -> SuiteReport {
    let mut report = SuiteReport::new("identities");
    for t in 1..=args.t_max {
        for n in 0..=args.n_max {
            for k in 0..=n {
                let ok = binomial_family_check(n, k, t) == Ok(true);
                report.record(format!("family n={n} k={k} t={t}"), ok);
            }
        }
    }
    for s in 0..=args.n_max {
        for n in 0..=s {
            let unusual = unusual_identity_check(s, n);
            report.record(format!("unusual s={s} n={n}"), unusual == Ok(true));
            report.record(
                format!("unusual agrees with t=2 family at s={s} n={n}"),
                unusual == binomial_family_check(s, n, 2),
            );
        }
    }
    report.record(
        "worked example (4,2,1)".to_string(),
        binomial_family_check(4, 2, 1) == Ok(true),
    );
    report.record(
        "worked example (4,2,100)".to_string(),
        binomial_family_check(4, 2, 100) == Ok(true),
    );
    report
}

fn gessel_suite(args: &VerifyArgs) -> SuiteReport {
    let mut report = SuiteReport::new("gessel");
    let trunc = Truncation::new(args.faces, args.gons);
    let inner = Truncation::new(args.faces - 1, args.gons);
    let u = build_u(trunc);
    let h = build_h(trunc);
    let g = build_g(trunc);
    let s = PolySeries::build_s(trunc, BuildMethod::ClosedForm);
    report.record(
        format!("U natural to face {}", args.faces),
        u.terms().all(|(_, c)| c >= &BigInt::from(0)),
    );
    report.record(
        format!("H natural to face {}", args.faces - 1),
        h.terms().all(|(_, c)| c >= &BigInt::from(0)),
    );
    report.record(
        "H * S = G".to_string(),
        h.mul(&s.restrict(inner)).expect("same truncation") == g,
    );
    report.record(
        "H * S1 = U".to_string(),
        h.mul(&PolySeries::s1(inner)).expect("same truncation") == u.restrict(inner),
    );
    report.record(
        "H * (1 - sum t_n (S + ... + S^{n-1})) = 1".to_string(),
        h.mul(&h_inverse_factor(&s.restrict(inner)))
            .expect("same truncation")
            == PolySeries::one(inner),
    );
    for k in 1..=3u32 {
        let got = alternating_geode_eval(k, 6);
        let expected = geometric_f_coefficients(k as i64, 6);
        report.record(
            format!("G[-f,f,...] with {k} pairs = {k}^n f^n"),
            got == expected,
        );
    }
    for weights in [[1i64, -1], [2, -2]] {
        let got = zero_sum_geode_eval(&weights, 6).expect("weights sum to zero");
        let expected = geometric_f_coefficients(weighted_gon_sum(&weights), 6);
        report.record(
            format!("zero-sum evaluation at {weights:?}"),
            got == expected,
        );
    }
    report
}
