//! Acceptance suite. Each criterion prints one PASS/FAIL line; run with
//! `cargo test -p diversify-cli --test acceptance -- --nocapture`.

use std::collections::BTreeSet;
use std::process::Command;
use std::time::{Duration, Instant};

use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

use diversify::augmented::{generate_augmented, AugmentedParams, Rounding, RunSchedule};
use diversify::constructive::{
    enumerate_pairs, generate_strongly_balanced, generate_subvector, tripled_block, BlockForm,
    PairingOrder, StronglyBalancedParams, SubvectorParams,
};
use diversify::maxmin::{generate_maxmin, MaxMinParams};
use diversify::metrics::{coverage, dedup, mean_diversity, mean_gap, Rational};
use diversify::permmap::{build_pn_g, recursive_expand};
use diversify::pg::{generate_pg, PgMode, PgParams};
use diversify::{BinaryVector, Collection, PermutationMap, Provenance};

type Check = Result<(), String>;
type Criterion = (&'static str, fn() -> Check);

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Check {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn strings(c: &Collection) -> Vec<String> {
    c.vectors().map(|v| v.to_string()).collect()
}

fn collection(rows: &[&str]) -> Collection {
    let n = rows[0].len();
    Collection::from_vectors(n, rows.iter().map(|r| r.parse().unwrap()), Provenance::default()).unwrap()
}

fn perm(s: &str) -> PermutationMap {
    s.parse().unwrap()
}

fn cli(args: &[&str]) -> Result<String, String> {
    let o = Command::new(env!("CARGO_BIN_EXE_diversify"))
        .args(args)
        .output()
        .map_err(|e| e.to_string())?;
    if !o.status.success() {
        return Err(String::from_utf8_lossy(&o.stderr).into_owned());
    }
    String::from_utf8(o.stdout).map_err(|e| e.to_string())
}

const N11: [&str; 10] = [
    "00000000000",
    "11111111111",
    "11111100000",
    "00000011111",
    "11100011000",
    "00011100111",
    "11010010100",
    "00101101011",
    "10011010110",
    "01100101001",
];

const TABLE_N9: [&str; 32] = [
    "111110000", "000001111", "111001100", "000110011", "110101010", "001010101", "100101010",
    "011010101", // base
    "100110110", "011001001", "110100101", "001011010", "010101110", "101010001", "010001110",
    "101110001", // first power
    "000011111", "111100000", "001100111", "110011000", "010101011", "101010100", "010101001",
    "101010110", // second power
    "011011001", "100100110", "101001011", "010110100", "011101010", "100010101", "011100010",
    "100011101", // third power
];

const LEVEL3: [&str; 16] = [
    "10101010", "10100101", "10100110", "10101001", "01011010", "01010101", "01010110", "01011001",
    "01101010", "01100101", "01100110", "01101001", "10011010", "10010101", "10010110", "10011001",
];

const P3_TABLE: [(&str, &str); 8] = [
    ("111", "000"),
    ("110", "001"),
    ("101", "010"),
    ("100", "011"),
    ("011", "100"),
    ("010", "101"),
    ("001", "110"),
    ("000", "111"),
];

fn maxmin_n11() -> Check {
    let start = Instant::now();
    let c = generate_maxmin(&MaxMinParams::new(11)).map_err(|e| e.to_string())?;
    let elapsed = start.elapsed();
    ensure(strings(&c) == N11, || format!("library output {:?}", strings(&c)))?;
    ensure(elapsed < Duration::from_millis(10), || format!("took {elapsed:?}"))?;
    let out = cli(&["generate", "--method", "maxmin", "--n", "11"])?;
    ensure(out.lines().eq(N11), || format!("cli output {out:?}"))
}

fn table_n9() -> Check {
    let base = generate_maxmin(&MaxMinParams::new(9).without_seed_pair()).map_err(|e| e.to_string())?;
    let m = build_pn_g(9, 3).map_err(|e| e.to_string())?;
    ensure(m == perm("3 6 9 2 5 8 1 4 7"), || format!("M = {m}"))?;
    let m2 = m.compose(&m).unwrap();
    let m3 = m2.compose(&m).unwrap();
    ensure(m2 == perm("9 8 7 6 5 4 3 2 1"), || format!("M^2 = {m2}"))?;
    ensure(m3 == perm("7 4 1 8 5 2 9 6 3"), || format!("M^3 = {m3}"))?;
    ensure(m3 == m.invert(), || "M^3 is not the inverse".into())?;
    ensure(m3.compose(&m).unwrap().is_identity(), || "M^4 is not the identity".into())?;
    let full = recursive_expand(&base, &m, 1000).map_err(|e| e.to_string())?;
    ensure(strings(&full) == TABLE_N9, || format!("expanded {:?}", strings(&full)))?;

    let dir = tempfile::TempDir::new().map_err(|e| e.to_string())?;
    let path = dir.path().join("base.txt");
    let base_text = cli(&["generate", "--method", "maxmin", "--n", "9", "--no-seed-pair"])?;
    std::fs::write(&path, base_text).map_err(|e| e.to_string())?;
    let out = cli(&["map", "--input", path.to_str().unwrap(), "--g", "3", "--rlim", "32"])?;
    ensure(out.lines().eq(TABLE_N9), || format!("cli output {out:?}"))
}

fn permutation_anchors() -> Check {
    let m = build_pn_g(14, 6).map_err(|e| e.to_string())?;
    ensure(m == perm("6 12 5 11 4 10 3 9 2 8 14 1 7 13"), || format!("P = {m}"))?;
    let inv = m.invert();
    ensure(inv == perm("12 9 7 5 3 1 13 10 8 6 4 2 14 11"), || format!("inverse = {inv}"))
}

fn pg_n10() -> Check {
    let c = generate_pg(&PgParams::new(10, PgMode::Basic)).map_err(|e| e.to_string())?;
    let primary = |label: &str| {
        c.entries()
            .iter()
            .find(|e| e.provenance.label == format!("{label} x'"))
            .map(|e| e.vector.to_string())
    };
    for (label, row) in [
        ("g=2 s=1", "1010101010"),
        ("g=3 s=1", "1001001001"),
        ("g=3 s=2", "0100100100"),
        ("g=3 s=3", "0010010010"),
    ] {
        ensure(primary(label).as_deref() == Some(row), || format!("{label}: {:?}", primary(label)))?;
    }
    ensure(primary("g=2 s=2").is_none(), || "g=2 s=2 was emitted".into())?;
    ensure(!strings(&c).iter().any(|r| r == "0010101010"), || "s=3 g=2 row present".into())
}

fn pairs_alternate(v: &BinaryVector) -> bool {
    let bits: Vec<bool> = v.iter().collect();
    bits.chunks(2).all(|p| p.len() == 1 || p[0] != p[1])
}

fn strongly_balanced_level3() -> Check {
    let c = generate_strongly_balanced(&StronglyBalancedParams::new(3, 8)).map_err(|e| e.to_string())?;
    ensure(strings(&c) == LEVEL3, || format!("level 3 {:?}", strings(&c)))?;
    for level in 1..=3 {
        for n in [8, 9, 17] {
            let c = generate_strongly_balanced(&StronglyBalancedParams::new(level, n))
                .map_err(|e| e.to_string())?;
            for v in c.vectors() {
                ensure(pairs_alternate(v), || format!("level {level} n={n}: {v}"))?;
            }
        }
    }
    Ok(())
}

fn subvector_tables() -> Check {
    let pairs: Vec<(String, String)> = enumerate_pairs(3)
        .iter()
        .map(|(a, b)| (a.to_string(), b.to_string()))
        .collect();
    let expect: Vec<(String, String)> =
        P3_TABLE.iter().map(|(a, b)| (a.to_string(), b.to_string())).collect();
    ensure(pairs == expect, || format!("p=3 pairs {pairs:?}"))?;
    let mut hist = [0usize; 5];
    for pair in enumerate_pairs(4) {
        hist[tripled_block(&pair).count_ones() - 4] += 1;
    }
    ensure(hist == [1, 4, 6, 4, 1], || format!("histogram {hist:?}"))
}

fn power_of_two_distances() -> Check {
    let start = Instant::now();
    for n in [8usize, 16, 32] {
        let c = generate_maxmin(&MaxMinParams::new(n)).map_err(|e| e.to_string())?;
        let vs = c.to_vectors();
        for (i, a) in vs.iter().enumerate() {
            for b in &vs[i + 1..] {
                let d = a.hamming(b).unwrap();
                let expect = if *b == a.complement() { n } else { n / 2 };
                ensure(d == expect, || format!("n={n}: d({a},{b}) = {d}"))?;
            }
        }
    }
    let elapsed = start.elapsed();
    ensure(elapsed < Duration::from_secs(1), || format!("took {elapsed:?}"))
}

fn value_set(c: &Collection) -> BTreeSet<BinaryVector> {
    dedup(c).to_vectors().into_iter().collect()
}

fn coincidence() -> Check {
    for n in [8usize, 16] {
        let mut p = AugmentedParams::new(n);
        p.schedule = RunSchedule::PowersOfTwo;
        let runs = generate_augmented(&p).map_err(|e| e.to_string())?;
        let halving = generate_maxmin(&MaxMinParams::new(n).without_seed_pair()).map_err(|e| e.to_string())?;
        let (a, b) = (value_set(&runs), value_set(&halving));
        ensure(a == b, || format!("n={n}: {a:?} vs {b:?}"))?;
        let mut union = runs.clone();
        union.extend(halving).unwrap();
        ensure(dedup(&union).len() == a.len(), || format!("n={n}: union is larger"))?;
    }
    Ok(())
}

/// Reduced fraction kept apart from the library's rational type.
#[derive(Debug, PartialEq, Eq)]
struct Frac(u128, u128);

impl Frac {
    fn new(num: u128, den: u128) -> Frac {
        fn gcd(a: u128, b: u128) -> u128 {
            if b == 0 {
                a
            } else {
                gcd(b, a % b)
            }
        }
        let g = gcd(num, den).max(1);
        Frac(num / g, den / g)
    }

    fn matches(&self, r: &Rational) -> bool {
        self.0 * r.denom() == r.numer() * self.1
    }
}

fn distance(a: &[u8], b: &[u8]) -> u128 {
    a.iter().zip(b).filter(|(x, y)| x != y).count() as u128
}

struct Oracle {
    diversity: Frac,
    gap: Option<Frac>,
    coverage: Option<Frac>,
}

fn oracle(rows: &[Vec<u8>]) -> Oracle {
    let k = rows.len() as u128;
    let mut sum = 0;
    for i in 0..rows.len() {
        for j in i + 1..rows.len() {
            sum += distance(&rows[i], &rows[j]);
        }
    }
    let pairs = k * (k - 1) / 2;

    let mut distinct: Vec<&Vec<u8>> = rows.iter().collect();
    distinct.sort();
    distinct.dedup();
    let (mut gap_sum, mut gap_count) = (0u128, 0u128);
    for i in 0..distinct.len() {
        for j in i + 1..distinct.len() {
            let (x, y) = (distinct[i], distinct[j]);
            let dxy = distance(x, y);
            let blocked = (0..distinct.len())
                .filter(|&l| l != i && l != j)
                .any(|l| distance(x, distinct[l]) + distance(distinct[l], y) == dxy);
            if !blocked {
                gap_sum += dxy;
                gap_count += 1;
            }
        }
    }
    let gap = (gap_count > 0).then(|| Frac::new(gap_sum, gap_count));
    let coverage = (gap_count > 0).then(|| Frac::new(sum * gap_count, pairs * gap_sum));
    Oracle {
        diversity: Frac::new(sum, pairs),
        gap,
        coverage,
    }
}

fn agrees(c: &Collection) -> Check {
    let rows: Vec<Vec<u8>> = c.vectors().map(|v| v.to_string().into_bytes()).collect();
    let o = oracle(&rows);
    let d = mean_diversity(c).map_err(|e| e.to_string())?;
    ensure(o.diversity.matches(&d), || format!("diversity {d} vs {:?}", o.diversity))?;
    match (&o.gap, mean_gap(c)) {
        (Some(g), Ok(r)) => ensure(g.matches(&r), || format!("gap {r} vs {g:?}"))?,
        (None, Err(_)) => {}
        (g, r) => return Err(format!("gap {r:?} vs {g:?}")),
    }
    match (&o.coverage, coverage(c)) {
        (Some(v), Ok(r)) => ensure(v.matches(&r), || format!("coverage {r} vs {v:?}")),
        (None, Err(_)) => Ok(()),
        (v, r) => Err(format!("coverage {r:?} vs {v:?}")),
    }
}

fn metrics_oracle() -> Check {
    let mut rng = StdRng::seed_from_u64(0x5eed);
    for _ in 0..200 {
        let n = rng.gen_range(1..=16);
        let count = rng.gen_range(2..=20);
        let c = Collection::from_vectors(
            n,
            (0..count).map(|_| BinaryVector::from_fn(n, |_| rng.gen_bool(0.5))),
            Provenance::default(),
        )
        .unwrap();
        agrees(&c).map_err(|e| format!("random n={n} count={count}: {e}"))?;
    }
    let mut generated = vec![
        collection(&N11),
        collection(&TABLE_N9),
        generate_pg(&PgParams::new(10, PgMode::Basic)).unwrap(),
        collection(&LEVEL3),
        generate_subvector(&SubvectorParams::new(3, 12, BlockForm::Double)).unwrap(),
        generate_subvector(&SubvectorParams::new(4, 16, BlockForm::Triple)).unwrap(),
    ];
    for n in [8, 9, 17] {
        generated.push(generate_strongly_balanced(&StronglyBalancedParams::new(3, n)).unwrap());
    }
    for c in &generated {
        agrees(c).map_err(|e| format!("generated n={}: {e}", c.n()))?;
    }
    Ok(())
}

fn all_generators(n: usize, rlim: usize) -> Vec<(String, Collection)> {
    let mut out = Vec::new();
    for balanced in [false, true] {
        let p = if balanced { MaxMinParams::balanced(n) } else { MaxMinParams::new(n) };
        out.push((format!("maxmin balanced={balanced}"), generate_maxmin(&p.with_rlim(rlim)).unwrap()));
    }
    if n >= 2 {
        for shift in [false, true] {
            for rounding in [Rounding::HalfRound, Rounding::Floor] {
                for schedule in [RunSchedule::Mixed, RunSchedule::PowersOfTwo] {
                    let mut p = AugmentedParams::new(n);
                    p.rlim = rlim;
                    p.include_shift = shift;
                    p.rounding = rounding;
                    p.schedule = schedule;
                    out.push((
                        format!("augmented shift={shift} {rounding:?} {schedule:?}"),
                        generate_augmented(&p).unwrap(),
                    ));
                }
            }
        }
    }
    for mode in [PgMode::Basic, PgMode::Extended] {
        let mut p = PgParams::new(n, mode);
        p.rlim = rlim;
        out.push((format!("pg {mode:?}"), generate_pg(&p).unwrap()));
    }
    for p in 1..=5 {
        for form in [BlockForm::Double, BlockForm::Triple] {
            let mut sp = SubvectorParams::new(p, n, form);
            sp.rlim = rlim;
            out.push((format!("subvector p={p} {form:?}"), generate_subvector(&sp).unwrap()));
        }
    }
    for level in 1..=4 {
        for order in [PairingOrder::Published, PairingOrder::RowMajor] {
            let mut sp = StronglyBalancedParams::new(level, n);
            sp.rlim = rlim;
            sp.order = order;
            out.push((
                format!("strongly-balanced level={level} {order:?}"),
                generate_strongly_balanced(&sp).unwrap(),
            ));
        }
    }
    out
}

fn closure_and_counts() -> Check {
    for n in 1..=40 {
        for (name, c) in all_generators(n, 1000) {
            ensure(c.is_closed_under_complement(), || format!("{name} n={n} not closed"))?;
        }
        let mut p = PgParams::new(n, PgMode::Basic);
        p.skip_first_complement = true;
        let mut c = generate_pg(&p).unwrap();
        c.push(BinaryVector::zeros(n), Provenance::default()).unwrap();
        ensure(c.is_closed_under_complement(), || format!("pg skip-first n={n}"))?;
    }
    for n in 7usize..=64 {
        let c = generate_maxmin(&MaxMinParams::new(n).without_seed_pair()).unwrap();
        let log = n.ilog2() as usize;
        ensure(c.len() == 2 * log || c.len() == 2 + 2 * log, || {
            format!("maxmin n={n}: {} vectors, log2 = {log}", c.len())
        })?;
    }
    for n in [9usize, 16, 33] {
        for rlim in 2..=40 {
            for (name, c) in all_generators(n, rlim) {
                ensure(c.len() <= rlim + 1, || format!("{name} n={n} rlim={rlim}: {}", c.len()))?;
            }
        }
    }
    Ok(())
}

#[test]
fn acceptance() {
    let criteria: [Criterion; 10] = [
        ("maxmin n=11 sequence", maxmin_n11),
        ("n=9 mapping table", table_n9),
        ("permutation anchors", permutation_anchors),
        ("progressive gap n=10 rows", pg_n10),
        ("strongly balanced level 3", strongly_balanced_level3),
        ("sub-vector tables", subvector_tables),
        ("power-of-two distances", power_of_two_distances),
        ("run vectors coincide with maxmin", coincidence),
        ("metrics match brute-force oracle", metrics_oracle),
        ("closure and count properties", closure_and_counts),
    ];
    let mut failed = Vec::new();
    for (i, (name, check)) in criteria.iter().enumerate() {
        match check() {
            Ok(()) => println!("PASS {:>2} {name}", i + 1),
            Err(e) => {
                println!("FAIL {:>2} {name}: {e}", i + 1);
                failed.push(i + 1);
            }
        }
    }
    assert!(failed.is_empty(), "failed criteria: {failed:?}");
}
