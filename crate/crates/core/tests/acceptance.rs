//! Acceptance criteria. Runs every criterion, prints one PASS/FAIL line per
//! criterion and exits non-zero if any failed.

use std::process::ExitCode;
use std::time::{Duration, Instant};

use dihedral_moduli::cli::run_with;
use dihedral_moduli::combinatorics::{count_p, enumerate_dissections, partitions, Partition};
use dihedral_moduli::moduli::{
    betti_table_with, check_exponential_pair, closed_formula_check, compact_egf_numerators,
    delta_series, euler_compact, euler_delta, euler_open, middle_betti, open_egf_numerators,
    open_series, BettiTable, Method, MiddleMethod,
};
use dihedral_moduli::IntPoly;
use num_bigint::BigInt;
use num_traits::{Signed, Zero};

/// Published Betti numbers a_{n,i}, 1 <= i <= n-3, for 5 <= n <= 11.
const PUBLISHED: [(usize, &[u64]); 7] = [
    (5, &[0, 1]),
    (6, &[0, 5, 4]),
    (7, &[0, 15, 28, 22]),
    (8, &[0, 35, 112, 206, 144]),
    (9, &[0, 70, 336, 1063, 1704, 1089]),
    (10, &[0, 126, 840, 3999, 10848, 15709, 9308]),
    (11, &[0, 210, 1848, 12255, 49368, 119857, 159412, 88562]),
];

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn within(start: Instant, limit: Duration) -> Result<Duration, String> {
    let elapsed = start.elapsed();
    ensure(elapsed < limit, || {
        format!("took {elapsed:?}, limit {limit:?}")
    })?;
    Ok(elapsed)
}

fn compare_published(table: &BettiTable) -> Result<usize, String> {
    let mut matched = 0;
    for (n, entries) in PUBLISHED {
        for (idx, &expected) in entries.iter().enumerate() {
            let i = idx + 1;
            let got = table
                .get(n, i)
                .ok_or_else(|| format!("missing a_({n},{i})"))?;
            ensure(*got == BigInt::from(expected), || {
                format!("a_({n},{i}) = {got}, published {expected}")
            })?;
            matched += 1;
        }
        ensure(table.row(n).map(<[_]>::len) == Some(n - 2), || {
            format!("row {n} has the wrong length")
        })?;
    }
    Ok(matched)
}

fn table_reproduction() -> Outcome {
    let start = Instant::now();
    let mut matched = 0;
    for method in Method::ALL {
        let table = betti_table_with(11, method).map_err(|e| format!("{method}: {e}"))?;
        matched = compare_published(&table).map_err(|e| format!("{method}: {e}"))?;
    }
    let elapsed = within(start, Duration::from_secs(1))?;

    // the CLI surface: `table --n-max 11 --format csv`
    let mut out = Vec::new();
    let mut err = Vec::new();
    let code = run_with(
        [
            "dihedral-moduli",
            "table",
            "--n-max",
            "11",
            "--format",
            "csv",
        ],
        &mut out,
        &mut err,
    );
    ensure(code == 0, || format!("CLI exited {code}"))?;
    let parsed = BettiTable::from_csv(&String::from_utf8_lossy(&out)).map_err(|e| e.to_string())?;
    compare_published(&parsed)?;
    Ok(format!(
        "{matched} entries x 3 methods + CLI csv, {elapsed:?}"
    ))
}

fn hexagon_polynomial() -> Outcome {
    let expected: IntPoly = "q^3 + 5*q - 4".parse().unwrap();
    for method in Method::ALL {
        let got = euler_delta(6, method).map_err(|e| e.to_string())?;
        ensure(got == expected, || format!("{method} gives {got}"))?;
    }
    let census = enumerate_dissections(6).map_err(|e| e.to_string())?;
    let terms: [(&[(usize, usize)], u64); 5] = [
        (&[(4, 1)], 1),
        (&[(3, 1), (1, 1)], 6),
        (&[(2, 2)], 3),
        (&[(2, 1), (1, 2)], 21),
        (&[(1, 4)], 14),
    ];
    let mut sum = IntPoly::zero();
    for (mults, count) in terms {
        let lambda = Partition::from_multiplicities(mults.iter().copied());
        let p = count_p(&lambda).map_err(|e| e.to_string())?;
        ensure(p == BigInt::from(count), || {
            format!("P({lambda}) = {p}, expected {count}")
        })?;
        ensure(census.get(&lambda) == Some(&count), || {
            format!("census of type {lambda} is {:?}", census.get(&lambda))
        })?;
        let mut stratum = IntPoly::constant(BigInt::from(count));
        for (part, mult) in lambda.multiplicities() {
            for _ in 0..mult {
                stratum = stratum * euler_open(part + 2).unwrap();
            }
        }
        sum = sum + stratum;
    }
    ensure(census.len() == 5, || {
        "hexagon census has extra types".into()
    })?;
    // the five-term expansion written out by hand
    let by_hand: IntPoly = [
        "q^3 - 9*q^2 + 26*q - 24",
        "6*q^2 - 30*q + 36",
        "3*q^2 - 12*q + 12",
        "21*q - 42",
        "14",
    ]
    .iter()
    .map(|s| s.parse::<IntPoly>().unwrap())
    .fold(IntPoly::zero(), |a, b| a + b);
    ensure(sum == expected && by_hand == expected, || {
        format!("term sum {sum}, by hand {by_hand}")
    })?;
    Ok("q^3 + 5*q - 4 by all methods; terms 1, 6, 3, 21, 14".into())
}

fn cross_method() -> Outcome {
    let start = Instant::now();
    // per-n calls, no shared work between rows
    for n in 3..=30 {
        let s = euler_delta(n, Method::Stratification).map_err(|e| e.to_string())?;
        let i = euler_delta(n, Method::Inversion).map_err(|e| e.to_string())?;
        let r = euler_delta(n, Method::Recurrence).map_err(|e| e.to_string())?;
        ensure(s == i && s == r, || format!("n = {n}: {s} / {i} / {r}"))?;
    }
    let elapsed = within(start, Duration::from_secs(30))?;
    Ok(format!("3 <= n <= 30, {elapsed:?}"))
}

fn ordinary_inversion() -> Outcome {
    let f = open_series(30).map_err(|e| e.to_string())?;
    let f_delta = delta_series(30).map_err(|e| e.to_string())?;
    ensure(f.compose(&f_delta).unwrap().is_identity(), || {
        "f(f_delta(x)) != x".into()
    })?;
    ensure(f_delta.compose(&f).unwrap().is_identity(), || {
        "f_delta(f(x)) != x".into()
    })?;
    Ok("f(f_delta(x)) = f_delta(f(x)) = x at order 30".into())
}

fn exponential_inversion() -> Outcome {
    let g = open_egf_numerators(15).map_err(|e| e.to_string())?;
    let gbar = compact_egf_numerators(15).map_err(|e| e.to_string())?;
    for check in check_exponential_pair(&g, &gbar) {
        ensure(check.passed(), || check.to_string())?;
    }
    Ok("gbar(g(x)) = g(gbar(x)) = x at order 15, all divisions exact".into())
}

fn dissection_oracle() -> Outcome {
    let start = Instant::now();
    let mut totals = Vec::new();
    for n in 3..=10 {
        let census = enumerate_dissections(n).map_err(|e| e.to_string())?;
        let mut formula_total = BigInt::zero();
        for lambda in partitions(n - 2) {
            let p = count_p(&lambda).map_err(|e| e.to_string())?;
            let got = census.get(&lambda).copied().unwrap_or(0);
            ensure(BigInt::from(got) == p, || {
                format!("n = {n}, type {lambda}: enumerated {got}, P = {p}")
            })?;
            formula_total += p;
        }
        let total: u64 = census.values().sum();
        ensure(BigInt::from(total) == formula_total, || {
            format!("n = {n}: totals {total} vs {formula_total}")
        })?;
        totals.push(total);
    }
    ensure(totals[..6] == [1, 3, 11, 45, 197, 903], || {
        format!("totals {totals:?}")
    })?;
    let elapsed = within(start, Duration::from_secs(60))?;
    Ok(format!("3 <= n <= 10, totals {totals:?}, {elapsed:?}"))
}

fn closed_formulas() -> Outcome {
    let rows = closed_formula_check(20).map_err(|e| e.to_string())?;
    ensure(rows.len() == 16, || "expected rows for 5 <= n <= 20".into())?;
    for row in &rows {
        ensure(row.passed(), || format!("{row:?}"))?;
    }
    Ok("a_(n,2) = C(n-1,4), a_(n,3) = 4 C(n,6) for 5 <= n <= 20".into())
}

fn middle_dimension() -> Outcome {
    let by_recurrence = middle_betti(11, MiddleMethod::Recurrence).map_err(|e| e.to_string())?;
    let at_zero = middle_betti(11, MiddleMethod::QZero).map_err(|e| e.to_string())?;
    ensure(by_recurrence == at_zero, || "methods differ".into())?;
    let diagonal: Vec<BigInt> = [1u64, 4, 22, 144, 1089, 9308, 88562]
        .map(BigInt::from)
        .to_vec();
    ensure(by_recurrence[1..] == diagonal[..], || {
        format!("got {by_recurrence:?}")
    })?;
    Ok("1, 4, 22, 144, 1089, 9308, 88562 for n = 5..11".into())
}

fn structural_invariants() -> Outcome {
    let table = betti_table_with(12, Method::Stratification).map_err(|e| e.to_string())?;
    for (n, row) in table.rows() {
        ensure(row.len() == n - 2, || {
            format!("row {n} extends past the diagonal")
        })?;
        ensure(row[0] == BigInt::from(1), || {
            format!("a_({n},0) = {}", row[0])
        })?;
        if n >= 4 {
            ensure(row[1].is_zero(), || format!("a_({n},1) = {}", row[1]))?;
        }
        ensure(row.iter().all(|a| !a.is_negative()), || {
            format!("negative entry in row {n}")
        })?;
        let e = euler_delta(n, Method::Stratification).unwrap();
        for i in 0..=(n - 3) {
            let signed = if i % 2 == 0 {
                e.coeff(n - 3 - i)
            } else {
                -e.coeff(n - 3 - i)
            };
            ensure(!signed.is_negative(), || {
                format!("purity sign fails at ({n},{i})")
            })?;
        }
        let c = euler_compact(n).unwrap();
        ensure(c.degree() == Some(n - 3), || {
            format!("deg e(Mbar_0,{n}) = {:?}", c.degree())
        })?;
        ensure(c.is_palindromic(), || {
            format!("e(Mbar_0,{n}) = {c} is not palindromic")
        })?;
        ensure(c.coeffs().iter().all(|a| !a.is_negative()), || {
            format!("e(Mbar_0,{n}) = {c}")
        })?;
        ensure(e.leading_coefficient() == Some(&BigInt::from(1)), || {
            format!("e(M^delta_0,{n}) not monic")
        })?;
    }
    Ok("3 <= n <= 12".into())
}

fn main() -> ExitCode {
    let criteria: [Criterion; 9] = [
        ("1 table reproduction", table_reproduction),
        ("2 hexagon polynomial", hexagon_polynomial),
        ("3 cross-method agreement", cross_method),
        ("4 ordinary inversion identity", ordinary_inversion),
        ("5 exponential inversion identity", exponential_inversion),
        ("6 dissection oracle", dissection_oracle),
        ("7 closed formulas", closed_formulas),
        ("8 middle Betti numbers", middle_dimension),
        ("9 structural invariants", structural_invariants),
    ];
    let mut failed = 0;
    for (name, criterion) in criteria {
        match criterion() {
            Ok(detail) => println!("PASS criterion {name}: {detail}"),
            Err(why) => {
                failed += 1;
                println!("FAIL criterion {name}: {why}");
            }
        }
    }
    println!("{} passed, {failed} failed", criteria.len() - failed);
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
